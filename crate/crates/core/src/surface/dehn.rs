//! Dehn's algorithm for the one-relator surface group, extended with
//! half-relator swaps so that it produces shortlex geodesic normal forms and
//! canonical representatives of conjugacy classes.
//!
//! For `g >= 2` the relator `[a1,b1]...[ag,bg]` satisfies C'(1/7): a reduced word
//! representing the identity contains more than half of a cyclic permutation of
//! `r^{±1}`. Geodesic words for the same element are connected by swaps of a
//! half-relator `R[0..2g]` for the complementary half `R[2g..]^{-1}`; a
//! non-geodesic Dehn-reduced word becomes shorter after a sequence of such swaps.

use std::collections::{HashSet, VecDeque};

use super::word::{cyclic_free_reduce, free_reduce, min_rotation, Letter};
use crate::error::{Error, Result};

/// Orbits larger than this are treated as a runaway reduction.
const ORBIT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct Presentation {
    genus: usize,
    relator: Vec<Letter>,
    /// For each letter code, the rotations of `r` and `r^{-1}` beginning with it.
    rotations: Vec<[Vec<Letter>; 2]>,
}

impl Presentation {
    pub fn new(genus: usize) -> Presentation {
        let mut relator = Vec::with_capacity(4 * genus);
        for h in 0..genus {
            let (a, b) = (Letter::a(h), Letter::b(h));
            relator.extend_from_slice(&[a, b, a.inverse(), b.inverse()]);
        }
        let inverse: Vec<Letter> = relator.iter().rev().map(|l| l.inverse()).collect();
        let n = relator.len();
        let rotate = |w: &[Letter], k: usize| -> Vec<Letter> {
            let mut v = w[k..].to_vec();
            v.extend_from_slice(&w[..k]);
            v
        };
        let rotations = (0..4 * genus as u8)
            .map(|code| {
                let x = Letter::from_code(code);
                let i = relator.iter().position(|&l| l == x).expect("letter in relator");
                let j = inverse.iter().position(|&l| l == x).expect("letter in inverse");
                debug_assert!(i < n && j < n);
                [rotate(&relator, i), rotate(&inverse, j)]
            })
            .collect();
        Presentation {
            genus,
            relator,
            rotations,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn relator(&self) -> &[Letter] {
        &self.relator
    }

    fn half(&self) -> usize {
        2 * self.genus
    }

    /// Free reduction followed by Dehn reduction of a linear word.
    pub fn dehn_reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut w = letters.to_vec();
        'outer: loop {
            free_reduce(&mut w);
            for i in 0..w.len() {
                for rot in &self.rotations[w[i].code() as usize] {
                    let k = lcp(&w[i..], rot);
                    if k > self.half() {
                        let mut next = w[..i].to_vec();
                        next.extend(rot[k..].iter().rev().map(|l| l.inverse()));
                        next.extend_from_slice(&w[i + k..]);
                        w = next;
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    /// Shortlex-least geodesic word for the element represented by `letters`.
    pub fn normal_form(&self, letters: &[Letter]) -> Result<Vec<Letter>> {
        let mut current = self.dehn_reduce(letters);
        'restart: loop {
            let mut seen: HashSet<Vec<Letter>> = HashSet::new();
            seen.insert(current.clone());
            let mut queue = VecDeque::from([current.clone()]);
            while let Some(w) = queue.pop_front() {
                for i in 0..w.len() {
                    for rot in &self.rotations[w[i].code() as usize] {
                        if lcp(&w[i..], rot) < self.half() {
                            continue;
                        }
                        let mut next = w[..i].to_vec();
                        next.extend(rot[self.half()..].iter().rev().map(|l| l.inverse()));
                        next.extend_from_slice(&w[i + self.half()..]);
                        let next = self.dehn_reduce(&next);
                        if next.len() < current.len() {
                            current = next;
                            continue 'restart;
                        }
                        if seen.insert(next.clone()) {
                            if seen.len() > ORBIT_BUDGET {
                                return Err(Error::ReductionBudgetExceeded(ORBIT_BUDGET));
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
            return Ok(seen.into_iter().min().unwrap_or_default());
        }
    }

    /// Cyclic free and Dehn reduction (the word is read as a cyclic word).
    pub fn cyclic_dehn_reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut w = letters.to_vec();
        'outer: loop {
            cyclic_free_reduce(&mut w);
            let n = w.len();
            for i in 0..n {
                for rot in &self.rotations[w[i].code() as usize] {
                    let k = cyclic_lcp(&w, i, rot);
                    if k > self.half() {
                        let mut next: Vec<Letter> = rot[k..].iter().rev().map(|l| l.inverse()).collect();
                        next.extend((k..n).map(|t| w[(i + t) % n]));
                        w = next;
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    /// All cyclically geodesic words (as least rotations) conjugate to `letters`,
    /// reachable by cyclic half-relator swaps. Empty for the trivial class.
    pub fn cyclic_orbit(&self, letters: &[Letter]) -> Result<Vec<Vec<Letter>>> {
        let mut current = self.cyclic_dehn_reduce(letters);
        'restart: loop {
            if current.is_empty() {
                return Ok(Vec::new());
            }
            let start = min_rotation(&current);
            let mut seen: HashSet<Vec<Letter>> = HashSet::new();
            seen.insert(start.clone());
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                let n = w.len();
                if n < self.half() {
                    continue;
                }
                for i in 0..n {
                    for rot in &self.rotations[w[i].code() as usize] {
                        if cyclic_lcp(&w, i, rot) < self.half() {
                            continue;
                        }
                        let mut next: Vec<Letter> =
                            rot[self.half()..].iter().rev().map(|l| l.inverse()).collect();
                        next.extend((self.half()..n).map(|t| w[(i + t) % n]));
                        let next = self.cyclic_dehn_reduce(&next);
                        if next.len() < current.len() {
                            current = next;
                            continue 'restart;
                        }
                        let next = min_rotation(&next);
                        if seen.insert(next.clone()) {
                            if seen.len() > ORBIT_BUDGET {
                                return Err(Error::ReductionBudgetExceeded(ORBIT_BUDGET));
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
            let mut orbit: Vec<Vec<Letter>> = seen.into_iter().collect();
            orbit.sort();
            return Ok(orbit);
        }
    }

    /// Exponent sum vector in generator order `a1, b1, a2, b2, ...`.
    pub fn exponent_sums(&self, letters: &[Letter]) -> Vec<i64> {
        let mut v = vec![0i64; 2 * self.genus];
        for l in letters {
            v[l.generator()] += l.exponent();
        }
        v
    }
}

fn lcp(w: &[Letter], rot: &[Letter]) -> usize {
    w.iter().zip(rot).take_while(|(x, y)| x == y).count()
}

fn cyclic_lcp(w: &[Letter], start: usize, rot: &[Letter]) -> usize {
    let n = w.len();
    let limit = n.min(rot.len());
    (0..limit)
        .take_while(|&t| w[(start + t) % n] == rot[t])
        .count()
}
