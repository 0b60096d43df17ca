//! Expansion of trace functions in the multicurve basis and products of basis elements.
//!
//! A non-simple primitive class is resolved at its first self-crossing on the
//! closed geodesic: reading the curve from the crossing as `u v`,
//! `t_{uv} = t_u t_v - t_{uv^{-1}}`. Proper powers use
//! `t_{u^k} = t_u t_{u^{k-1}} - t_{u^{k-2}}`. Products of basis elements merge
//! one crossing of two components at a time with `t_x t_y = t_{xy} + t_{xy^{-1}}`.

use num_rational::BigRational;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expression::{rational, TraceExpression};
use super::multicurve::Multicurve;
use crate::error::{Error, Result};
use crate::geometry::geodesic::{in_arc, Geodesic};
use crate::surface::{CurveClass, GroupWord, Letter, Surface};

/// Recursion depth cap for expansion and multiplication.
pub const DEPTH_CAP: usize = 64;

fn chord_pairs(x: &Geodesic, y: &Geodesic, same: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, c) in x.chords.iter().enumerate() {
        let (a, b) = (c.entry.coordinate(), c.exit.coordinate());
        let start = if same { i + 1 } else { 0 };
        for (j, d) in y.chords.iter().enumerate().skip(start) {
            if in_arc(a, b, d.entry.coordinate()) != in_arc(a, b, d.exit.coordinate()) {
                out.push((i, j));
            }
        }
    }
    out
}

fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

impl Surface {
    /// The unique expression of `t_w` in the multicurve basis.
    pub fn expand_trace(&self, w: &GroupWord) -> Result<TraceExpression> {
        self.expand_letters(w.letters(), 0)
    }

    pub fn expand_class(&self, c: &CurveClass) -> Result<TraceExpression> {
        self.expand_class_at(c, 0)
    }

    fn expand_letters(&self, w: &[Letter], depth: usize) -> Result<TraceExpression> {
        let w = GroupWord::new(w.to_vec());
        match self.canonical_class(&w) {
            Ok(c) => self.expand_class_at(&c, depth),
            Err(Error::TrivialClass) => Ok(TraceExpression::scalar(rational(2))),
            Err(e) => Err(e),
        }
    }

    fn expand_class_at(&self, c: &CurveClass, depth: usize) -> Result<TraceExpression> {
        if depth > DEPTH_CAP {
            return Err(Error::ExpansionBudgetExceeded(DEPTH_CAP));
        }
        if let Some(e) = self.cache().expansions.get(c) {
            return Ok(e);
        }
        let result = if !c.is_primitive() {
            let t = self.expand_class_at(&c.root_class(), depth + 1)?;
            let mut prev = TraceExpression::scalar(rational(2));
            let mut cur = t.clone();
            for _ in 1..c.power() {
                let next = self.multiply_at(&t, &cur, depth + 1, &mut None)?.sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        } else if self.is_simple(c)? {
            TraceExpression::basis(Multicurve::single(c.clone(), 1))
        } else {
            let g = self.geodesic(c)?;
            let (i, j) = chord_pairs(&g, &g, true)[0];
            let u = g.cutting[i..j].to_vec();
            let mut v = g.cutting[j..].to_vec();
            v.extend_from_slice(&g.cutting[..i]);
            let mut uv_inv = u.clone();
            uv_inv.extend(inverse(&v));
            let tu = self.expand_letters(&u, depth + 1)?;
            let tv = self.expand_letters(&v, depth + 1)?;
            let other = self.expand_letters(&uv_inv, depth + 1)?;
            self.multiply_at(&tu, &tv, depth + 1, &mut None)?.sub(&other)
        };
        self.cache().expansions.insert(c.clone(), result.clone());
        Ok(result)
    }

    /// Product of two expressions, re-expressed in the multicurve basis.
    pub fn multiply_expressions(&self, f: &TraceExpression, g: &TraceExpression) -> Result<TraceExpression> {
        self.multiply_at(f, g, 0, &mut None)
    }

    /// Same product, merging crossings in a seeded random order instead of the
    /// canonical one. The result does not depend on the seed.
    pub fn multiply_expressions_shuffled(
        &self,
        f: &TraceExpression,
        g: &TraceExpression,
        seed: u64,
    ) -> Result<TraceExpression> {
        self.multiply_at(f, g, 0, &mut Some(ChaCha8Rng::seed_from_u64(seed)))
    }

    fn multiply_at(
        &self,
        f: &TraceExpression,
        g: &TraceExpression,
        depth: usize,
        order: &mut Option<ChaCha8Rng>,
    ) -> Result<TraceExpression> {
        let mut out = TraceExpression::zero();
        for (m1, c1) in f.terms() {
            for (m2, c2) in g.terms() {
                let p = self.multiply_basis(m1, m2, depth, order)?;
                let k: BigRational = c1 * c2;
                out.add_scaled(&p, &k);
            }
        }
        Ok(out)
    }

    fn multiply_basis(
        &self,
        x: &Multicurve,
        y: &Multicurve,
        depth: usize,
        order: &mut Option<ChaCha8Rng>,
    ) -> Result<TraceExpression> {
        if depth > DEPTH_CAP {
            return Err(Error::ExpansionBudgetExceeded(DEPTH_CAP));
        }
        if x.is_empty() || y.is_empty() {
            return Ok(TraceExpression::basis(x.union(y)));
        }
        let key = if x <= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
        if order.is_none() {
            if let Some(e) = self.cache().products.get(&key) {
                return Ok(e);
            }
        }
        let mut crossing = Vec::new();
        for a in x.classes() {
            for b in y.classes() {
                if self.intersection_number(a, b)? > 0 {
                    crossing.push((a.clone(), b.clone()));
                }
            }
        }
        let result = if crossing.is_empty() {
            TraceExpression::basis(x.union(y))
        } else {
            let pick = match order {
                Some(rng) => rng.random_range(0..crossing.len()),
                None => 0,
            };
            let (a, b) = crossing.swap_remove(pick);
            let (ga, gb) = (self.geodesic(&a)?, self.geodesic(&b)?);
            let pairs = chord_pairs(&ga, &gb, false);
            let (i, j) = match order {
                Some(rng) => pairs[rng.random_range(0..pairs.len())],
                None => pairs[0],
            };
            let xa = ga.rotation(i);
            let yb = gb.rotation(j);
            let mut sum_word = xa.clone();
            sum_word.extend_from_slice(&yb);
            let mut diff_word = xa;
            diff_word.extend(inverse(&yb));
            let merged = self
                .expand_letters(&sum_word, depth + 1)?
                .add(&self.expand_letters(&diff_word, depth + 1)?);
            let left = TraceExpression::basis(x.remove_one(&a));
            let right = TraceExpression::basis(y.remove_one(&b));
            let partial = self.multiply_at(&left, &merged, depth + 1, order)?;
            self.multiply_at(&partial, &right, depth + 1, order)?
        };
        if order.is_none() {
            self.cache().products.insert(key, result.clone());
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_examples() {
        let s = Surface::new(2).unwrap();
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(s.expand_trace(&w("")).unwrap().to_string(), "2\t-\n");
        assert_eq!(s.expand_trace(&w("a1")).unwrap().to_string(), "1\ta1^1\n");
        assert_eq!(s.expand_trace(&w("a1 a1")).unwrap().to_string(), "1\ta1^2\n-2\t-\n");
    }

    #[test]
    fn product_examples() {
        let s = Surface::new(2).unwrap();
        let w = |t: &str| s.parse_word(t).unwrap();
        let a = s.expand_trace(&w("a1")).unwrap();
        let b = s.expand_trace(&w("b1")).unwrap();
        assert_eq!(s.multiply_expressions(&a, &TraceExpression::unit()).unwrap(), a);
        let sq = s.multiply_expressions(&a, &a).unwrap();
        assert_eq!(sq, s.expand_trace(&w("a1 a1")).unwrap().add(&TraceExpression::scalar(rational(2))));
        let ab = s.multiply_expressions(&a, &b).unwrap();
        let expected = s.expand_trace(&w("a1 b1")).unwrap().add(&s.expand_trace(&w("a1 B1")).unwrap());
        assert_eq!(ab, expected);
    }
}
