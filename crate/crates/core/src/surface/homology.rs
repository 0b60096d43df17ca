use std::fmt;

use super::word::GroupWord;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Z2,
}

/// Exponent-sum vector in generator order `a1, b1, ..., ag, bg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyVector {
    ring: Ring,
    coords: Vec<i64>,
}

impl HomologyVector {
    pub fn zero(genus: usize, ring: Ring) -> HomologyVector {
        HomologyVector {
            ring,
            coords: vec![0; 2 * genus],
        }
    }

    pub fn of_word(genus: usize, w: &GroupWord, ring: Ring) -> HomologyVector {
        let mut v = HomologyVector::zero(genus, Ring::Z);
        for l in w.letters() {
            v.coords[l.generator()] += l.exponent();
        }
        v.in_ring(ring)
    }

    pub fn from_coords(coords: Vec<i64>, ring: Ring) -> HomologyVector {
        HomologyVector { ring, coords }.in_ring(ring)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn in_ring(mut self, ring: Ring) -> HomologyVector {
        if ring == Ring::Z2 {
            for c in &mut self.coords {
                *c = c.rem_euclid(2);
            }
        }
        self.ring = ring;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add_scaled(&mut self, other: &HomologyVector, k: i64) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += k * b;
            if self.ring == Ring::Z2 {
                *a = a.rem_euclid(2);
            }
        }
    }

    /// Algebraic intersection pairing, `a_i . b_i = 1`.
    pub fn intersection_form(&self, other: &HomologyVector) -> i64 {
        let mut s = 0;
        for h in 0..self.coords.len() / 2 {
            s += self.coords[2 * h] * other.coords[2 * h + 1]
                - self.coords[2 * h + 1] * other.coords[2 * h];
        }
        if self.ring == Ring::Z2 || other.ring == Ring::Z2 {
            s.rem_euclid(2)
        } else {
            s
        }
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
