use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::geodesic::{crossing_pairs, Geodesic};
use super::model::PolygonModel;
use crate::error::Result;
use crate::surface::{CurveClass, GroupWord, Letter, Surface};

/// Self-intersection count of a class, with a flag for proper powers.
///
/// For a proper power `u^k` the count is that of the `k`-fold cover of the
/// geodesic of `u` perturbed into a spiral: `k^2 s(u) + k - 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SelfIntersection {
    pub count: u64,
    pub non_primitive: bool,
}

impl Surface {
    pub fn polygon_model(&self) -> Result<Arc<PolygonModel>> {
        self.cache()
            .model
            .get_or_init(|| PolygonModel::new(self.genus()).map(Arc::new))
            .clone()
    }

    /// Closed geodesic of the primitive root of `c`.
    pub fn geodesic(&self, c: &CurveClass) -> Result<Arc<Geodesic>> {
        let root = c.root_class();
        self.cache().geodesics.get_or_try(&root, || {
            let model = self.polygon_model()?;
            Geodesic::compute(&model, self.presentation(), root.rep().letters()).map(Arc::new)
        })
    }

    fn root_self_intersection(&self, c: &CurveClass) -> Result<u64> {
        let root = c.root_class();
        self.cache().self_intersections.get_or_try(&root, || {
            let g = self.geodesic(&root)?;
            crossing_pairs(&g, &g, true)
        })
    }

    pub fn self_intersection(&self, c: &CurveClass) -> Result<SelfIntersection> {
        let s = self.root_self_intersection(c)?;
        let k = c.power() as u64;
        Ok(SelfIntersection {
            count: k * k * s + k - 1,
            non_primitive: k > 1,
        })
    }

    pub fn is_simple(&self, c: &CurveClass) -> Result<bool> {
        Ok(c.is_primitive() && self.root_self_intersection(c)? == 0)
    }

    /// Geometric intersection number of two classes.
    pub fn intersection_number(&self, x: &CurveClass, y: &CurveClass) -> Result<u64> {
        let (u, v) = (x.root_class(), y.root_class());
        if u == v {
            return Ok(0);
        }
        let key = if u < v { (u, v) } else { (v, u) };
        let base = self.cache().intersections.get_or_try(&key, || {
            let gx = self.geodesic(&key.0)?;
            let gy = self.geodesic(&key.1)?;
            crossing_pairs(&gx, &gy, false)
        })?;
        Ok(base * x.power() as u64 * y.power() as u64)
    }

    /// All classes whose canonical representative has length at most `max_length`,
    /// in shortlex order of representatives.
    pub fn enumerate_classes(&self, max_length: usize) -> Result<Arc<Vec<CurveClass>>> {
        self.cache().classes.get_or_try(&max_length, || {
            let words = cyclically_reduced_words(self.genus(), max_length);
            let classes: Vec<CurveClass> = words
                .par_iter()
                .map(|w| self.canonical_class(w))
                .collect::<Result<_>>()?;
            let set: BTreeSet<CurveClass> = classes.into_iter().filter(|c| c.len() <= max_length).collect();
            Ok(Arc::new(set.into_iter().collect()))
        })
    }

    /// All simple classes with representative length at most `max_length`, in
    /// shortlex order (generators first).
    pub fn enumerate_simple_classes(&self, max_length: usize) -> Result<Arc<Vec<CurveClass>>> {
        self.cache().simple_classes.get_or_try(&max_length, || {
            let all = self.enumerate_classes(max_length)?;
            let flags: Vec<bool> = all.par_iter().map(|c| self.is_simple(c)).collect::<Result<_>>()?;
            Ok(Arc::new(
                all.iter().zip(flags).filter(|(_, f)| *f).map(|(c, _)| c.clone()).collect(),
            ))
        })
    }
}

/// Nonempty cyclically reduced words of length at most `max_length`.
pub fn cyclically_reduced_words(genus: usize, max_length: usize) -> Vec<GroupWord> {
    reduced_words(genus, max_length)
        .into_iter()
        .filter(|w| {
            let l = w.letters();
            !l.is_empty() && l[0] != l[l.len() - 1].inverse()
        })
        .collect()
}

/// All freely reduced words of length at most `max_length`, including the empty word.
pub fn reduced_words(genus: usize, max_length: usize) -> Vec<GroupWord> {
    let letters: Vec<Letter> = (0..4 * genus as u8).map(Letter::from_code).collect();
    let mut out = vec![GroupWord::empty()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(GroupWord::new));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Surface {
        Surface::new(2).unwrap()
    }

    #[test]
    fn generator_intersections() {
        let s = s2();
        let c = |t: &str| s.parse_class(t).unwrap();
        assert_eq!(s.intersection_number(&c("a1"), &c("a2")).unwrap(), 0);
        assert_eq!(s.intersection_number(&c("a1"), &c("b1")).unwrap(), 1);
        assert_eq!(s.intersection_number(&c("a1"), &c("a1")).unwrap(), 0);
        assert_eq!(s.intersection_number(&c("a2"), &c("b2")).unwrap(), 1);
        assert_eq!(s.intersection_number(&c("b1"), &c("a2")).unwrap(), 0);
    }

    #[test]
    fn simple_examples() {
        let s = s2();
        let c = |t: &str| s.parse_class(t).unwrap();
        assert!(s.is_simple(&c("a1")).unwrap());
        assert!(!s.is_simple(&c("a1 a1")).unwrap());
        assert!(s.is_simple(&c("a1 b1 A1 B1")).unwrap());
        let sq = s.self_intersection(&c("a1 a1")).unwrap();
        assert!(sq.non_primitive && sq.count >= 1);
    }

    #[test]
    fn enumeration_examples() {
        let s = s2();
        let one: Vec<String> = s.enumerate_simple_classes(1).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(one, ["a1", "b1", "a2", "b2"]);
        let four = s.enumerate_simple_classes(4).unwrap();
        assert!(four.contains(&s.parse_class("a1 b1 A1 B1").unwrap()));
    }
}
