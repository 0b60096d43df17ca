//! Numerical evaluation of trace expressions at representations.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::expression::TraceExpression;
use super::multicurve::Multicurve;
use crate::error::Result;
use crate::surface::{Representation, Surface};

/// Relative threshold below which a singular value counts as zero.
pub const RANK_THRESHOLD: f64 = 1e-6;

/// `t_Gamma(rho)`: the product of the component traces with multiplicity.
pub fn evaluate_multicurve(r: &Representation, m: &Multicurve) -> Complex64 {
    m.components()
        .map(|(c, k)| r.evaluate_trace(c.rep()).powu(k))
        .product()
}

pub fn evaluate_expression(r: &Representation, f: &TraceExpression) -> Complex64 {
    f.terms()
        .map(|(m, c)| evaluate_multicurve(r, m) * c.to_f64().unwrap_or(f64::NAN))
        .sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankReport {
    pub size: usize,
    pub rank: usize,
    /// Singular values of the evaluation matrix, largest first.
    pub singular_values: Vec<f64>,
}

impl RankReport {
    pub fn is_full(&self) -> bool {
        self.rank == self.size
    }

    /// Smallest singular value relative to the largest.
    pub fn gap(&self) -> f64 {
        match (self.singular_values.first(), self.singular_values.last()) {
            (Some(&hi), Some(&lo)) if hi > 0.0 => lo / hi,
            _ => 0.0,
        }
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank={} size={} gap={:.3e}", self.rank, self.size, self.gap())
    }
}

impl Surface {
    /// Numerical rank of the matrix `[t_Gamma(rho_j)]` over `trials` seeded
    /// representations (seeds `seed, seed+1, ...`).
    pub fn basis_rank_check(&self, curves: &[Multicurve], trials: usize, seed: u64) -> Result<RankReport> {
        let reps: Vec<Representation> = (0..trials as u64)
            .map(|j| self.random_representation(seed.wrapping_add(j)))
            .collect::<Result<_>>()?;
        let m = DMatrix::from_fn(trials, curves.len(), |i, j| evaluate_multicurve(&reps[i], &curves[j]));
        let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        let top = sv.first().copied().unwrap_or(0.0);
        let rank = sv.iter().filter(|&&x| x > RANK_THRESHOLD * top).count();
        Ok(RankReport {
            size: curves.len(),
            rank,
            singular_values: sv,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::expression::rational;

    #[test]
    fn constants() {
        let s = Surface::new(2).unwrap();
        let r = s.random_representation(3).unwrap();
        assert!((evaluate_expression(&r, &TraceExpression::unit()) - 1.0).norm() < 1e-15);
        assert_eq!(evaluate_expression(&r, &TraceExpression::zero()), Complex64::new(0.0, 0.0));
        let two = TraceExpression::scalar(rational(2));
        assert!((evaluate_expression(&r, &two) - 2.0).norm() < 1e-15);
    }

    #[test]
    fn expansions_match_traces() {
        let s = Surface::new(2).unwrap();
        let reps: Vec<_> = (0..5).map(|i| s.random_representation(i).unwrap()).collect();
        for w in ["a1 b1", "a1 b1 a1 B1", "a1 a1 b1", "a1 b2 A1 B2", "a1 b1 a2 b2"] {
            let w = s.parse_word(w).unwrap();
            let e = s.expand_trace(&w).unwrap();
            for r in &reps {
                let d = (evaluate_expression(r, &e) - r.evaluate_trace(&w)).norm();
                assert!(d < 1e-8, "{w}: {d}");
            }
        }
    }

    #[test]
    fn rank_examples() {
        let s = Surface::new(2).unwrap();
        let m = |t: &str| Multicurve::parse(&s, t).unwrap();
        assert_eq!(s.basis_rank_check(&[m("-")], 3, 0).unwrap().rank, 1);
        assert_eq!(s.basis_rank_check(&[m("-"), m("a1^1")], 4, 0).unwrap().rank, 2);
        let six: Vec<_> = ["-", "a1^1", "b1^1", "a2^1", "a1^1,a2^1", "a1^2"].iter().map(|t| m(t)).collect();
        let r = s.basis_rank_check(&six, 30, 0).unwrap();
        assert!(r.is_full() && r.gap() >= 1e-6, "{r}");
    }
}
