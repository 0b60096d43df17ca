//! Valuations `v_lambda` attached to rational measured laminations.
//!
//! `v_lambda(t_Gamma) = sum_c m_c i(lambda, c)` on basis elements and
//! `v_lambda(f) = max { v_lambda(t_Gamma) | m_Gamma != 0 }` in general.

mod lamination;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

pub use lamination::{Lamination, ValuationValue};

use crate::error::{Error, Result};
use crate::surface::{CurveClass, GroupWord, Ring, Surface};
use crate::trace::{Multicurve, TraceExpression};

/// Length bound of the universe searched for non-integral witnesses.
pub const WITNESS_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThurstonReport {
    /// `i(delta, alpha)` computed on the geodesic of `alpha`.
    pub intersection: u64,
    /// `v_delta` of the expansion of `t_alpha`.
    pub valuation: ValuationValue,
}

impl ThurstonReport {
    pub fn holds(&self) -> bool {
        self.valuation == ValuationValue::Finite(BigRational::from_integer(self.intersection.into()))
    }
}

impl fmt::Display for ThurstonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} i={} v={}", self.holds(), self.intersection, self.valuation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub product: ValuationValue,
    pub sum: ValuationValue,
}

impl MultiplicativityReport {
    pub fn holds(&self) -> bool {
        self.product == self.sum
    }
}

impl fmt::Display for MultiplicativityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} v(fg)={} v(f)+v(g)={}", self.holds(), self.product, self.sum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Discrete,
    /// A witness curve with a non-integral value, if one has length at most
    /// [`WITNESS_BOUND`].
    NotDiscrete(Option<(CurveClass, BigRational)>),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Discrete => write!(f, "Discrete"),
            Classification::NotDiscrete(None) => write!(f, "NotDiscrete"),
            Classification::NotDiscrete(Some((c, v))) => write!(f, "NotDiscrete witness={c} value={v}"),
        }
    }
}

/// Outcome of a predicate checked over a finite universe of curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedReport {
    pub holds: bool,
    pub bound: usize,
    pub witness: Option<CurveClass>,
}

impl fmt::Display for BoundedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.holds)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        write!(f, " (verified up to bound {})", self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictReport {
    pub bound: usize,
    /// Two distinct multicurves with the same value, if any.
    pub collision: Option<(Multicurve, Multicurve, BigRational)>,
}

impl StrictReport {
    pub fn holds(&self) -> bool {
        self.collision.is_none()
    }
}

impl fmt::Display for StrictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.holds())?;
        if let Some((a, b, v)) = &self.collision {
            write!(f, " collision={a} | {b} value={v}")?;
        }
        write!(f, " (verified up to bound {})", self.bound)
    }
}

impl Surface {
    /// `i(lambda, c) = sum_d w_d i(d, c)`.
    pub fn lamination_intersection(&self, l: &Lamination, c: &CurveClass) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (d, w) in l.components() {
            let i = self.intersection_number(d, c)?;
            if i > 0 {
                total += w * BigRational::from_integer(i.into());
            }
        }
        Ok(total)
    }

    /// `v_lambda(t_Gamma)`.
    pub fn multicurve_value(&self, l: &Lamination, m: &Multicurve) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (c, k) in m.components() {
            total += self.lamination_intersection(l, c)? * BigRational::from_integer(k.into());
        }
        Ok(total)
    }

    pub fn valuate(&self, l: &Lamination, f: &TraceExpression) -> Result<ValuationValue> {
        let mut best = ValuationValue::Bottom;
        for (m, _) in f.terms() {
            let v = ValuationValue::Finite(self.multicurve_value(l, m)?);
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// Compares `i(delta, alpha)` with `v_delta(t_alpha)` computed from the expansion.
    pub fn thurston_max_check(&self, delta: &CurveClass, alpha: &GroupWord) -> Result<ThurstonReport> {
        let l = Lamination::new(self, [(delta.clone(), BigRational::from_integer(1.into()))])?;
        let intersection = match self.canonical_class(alpha) {
            Ok(c) => self.intersection_number(delta, &c)?,
            Err(Error::TrivialClass) => 0,
            Err(e) => return Err(e),
        };
        let valuation = self.valuate(&l, &self.expand_trace(alpha)?)?;
        Ok(ThurstonReport {
            intersection,
            valuation,
        })
    }

    pub fn multiplicativity_check(
        &self,
        l: &Lamination,
        f: &TraceExpression,
        g: &TraceExpression,
    ) -> Result<MultiplicativityReport> {
        let product = self.valuate(l, &self.multiply_expressions(f, g)?)?;
        let sum = self.valuate(l, f)?.add(&self.valuate(l, g)?);
        Ok(MultiplicativityReport { product, sum })
    }

    pub fn classify_discrete(&self, l: &Lamination) -> Result<Classification> {
        if let Some(class) = l.half_integral_class(self) {
            if class.iter().all(|&x| x == 0) {
                return Ok(Classification::Discrete);
            }
        }
        for c in self.enumerate_simple_classes(WITNESS_BOUND)?.iter() {
            let v = self.lamination_intersection(l, c)?;
            if !v.is_integer() {
                return Ok(Classification::NotDiscrete(Some((c.clone(), v))));
            }
        }
        Ok(Classification::NotDiscrete(None))
    }

    pub fn check_positive_up_to(&self, l: &Lamination, bound: usize) -> Result<BoundedReport> {
        check_bound(bound)?;
        for c in self.enumerate_simple_classes(bound)?.iter() {
            if self.lamination_intersection(l, c)?.is_zero() {
                return Ok(BoundedReport {
                    holds: false,
                    bound,
                    witness: Some(c.clone()),
                });
            }
        }
        Ok(BoundedReport {
            holds: true,
            bound,
            witness: None,
        })
    }

    pub fn check_strict_up_to(&self, l: &Lamination, bound: usize) -> Result<StrictReport> {
        check_bound(bound)?;
        let mut seen: BTreeMap<BigRational, Multicurve> = BTreeMap::new();
        for m in self.bounded_multicurves(bound)? {
            let v = self.multicurve_value(l, &m)?;
            if let Some(prev) = seen.get(&v) {
                return Ok(StrictReport {
                    bound,
                    collision: Some((prev.clone(), m, v)),
                });
            }
            seen.insert(v, m);
        }
        Ok(StrictReport { bound, collision: None })
    }

    /// All multicurves built from simple classes of length at most `bound`
    /// with total length (counting multiplicity) at most `bound`, the empty
    /// multicurve first.
    pub fn bounded_multicurves(&self, bound: usize) -> Result<Vec<Multicurve>> {
        let simple = self.enumerate_simple_classes(bound)?;
        let mut out = Vec::new();
        let mut chosen: Vec<(CurveClass, u32)> = Vec::new();
        self.extend_multicurves(&simple, 0, bound, &mut chosen, &mut out)?;
        Ok(out)
    }

    fn extend_multicurves(
        &self,
        simple: &[CurveClass],
        from: usize,
        budget: usize,
        chosen: &mut Vec<(CurveClass, u32)>,
        out: &mut Vec<Multicurve>,
    ) -> Result<()> {
        out.push(Multicurve::from_components(chosen.iter().cloned()));
        for (i, c) in simple.iter().enumerate().skip(from) {
            if c.len() > budget {
                continue;
            }
            let mut disjoint = true;
            for (d, _) in chosen.iter() {
                if self.intersection_number(c, d)? > 0 {
                    disjoint = false;
                    break;
                }
            }
            if !disjoint {
                continue;
            }
            let mut k = 1;
            while k as usize * c.len() <= budget {
                chosen.push((c.clone(), k));
                self.extend_multicurves(simple, i + 1, budget - k as usize * c.len(), chosen, out)?;
                chosen.pop();
                k += 1;
            }
        }
        Ok(())
    }

    /// The valuation of `gamma` normalized to take the value 1 somewhere:
    /// weight 1 for non-separating curves, `1/2` for separating ones.
    pub fn curv_normalize(&self, gamma: &CurveClass) -> Result<Lamination> {
        if !self.is_simple(gamma)? {
            return Err(Error::NotSimple(gamma.to_string()));
        }
        let w = if self.homology_class(gamma.rep(), Ring::Z).is_zero() {
            lamination::half()
        } else {
            BigRational::from_integer(1.into())
        };
        Lamination::new(self, [(gamma.clone(), w)])
    }
}

fn check_bound(bound: usize) -> Result<()> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::expression::{parse_rational, rational};

    fn s2() -> Surface {
        Surface::new(2).unwrap()
    }

    fn lam(s: &Surface, text: &str) -> Lamination {
        Lamination::parse_inline(s, text).unwrap()
    }

    #[test]
    fn intersections_with_laminations() {
        let s = s2();
        let c = |t: &str| s.parse_class(t).unwrap();
        assert_eq!(s.lamination_intersection(&lam(&s, "1 b1"), &c("a1")).unwrap(), rational(1));
        assert_eq!(s.lamination_intersection(&lam(&s, "1/2 a1"), &c("a1")).unwrap(), rational(0));
        assert_eq!(s.lamination_intersection(&lam(&s, "1 b1; 1 b2"), &c("a2")).unwrap(), rational(1));
    }

    #[test]
    fn valuation_examples() {
        let s = s2();
        let l = lam(&s, "1 b1");
        assert_eq!(s.valuate(&l, &TraceExpression::zero()).unwrap(), ValuationValue::Bottom);
        assert_eq!(s.valuate(&l, &TraceExpression::unit()).unwrap(), ValuationValue::zero());
        let f = s.expand_trace(&s.parse_word("a1 a1").unwrap()).unwrap();
        assert_eq!(s.valuate(&l, &f).unwrap(), ValuationValue::Finite(rational(2)));
    }

    #[test]
    fn thurston_examples() {
        let s = s2();
        let r = s.thurston_max_check(&s.parse_class("b1").unwrap(), &s.parse_word("a1").unwrap()).unwrap();
        assert!(r.holds() && r.intersection == 1);
        let r = s.thurston_max_check(&s.parse_class("a1").unwrap(), &s.parse_word("a1 a1").unwrap()).unwrap();
        assert!(r.holds() && r.intersection == 0);
    }

    #[test]
    fn multiplicativity_examples() {
        let s = s2();
        let l = lam(&s, "1 b1");
        let a = s.expand_trace(&s.parse_word("a1").unwrap()).unwrap();
        let r = s.multiplicativity_check(&l, &TraceExpression::zero(), &a).unwrap();
        assert!(r.holds() && r.product == ValuationValue::Bottom);
        let r = s.multiplicativity_check(&l, &a, &a).unwrap();
        assert!(r.holds() && r.product == ValuationValue::Finite(rational(2)));
    }

    #[test]
    fn discrete_examples() {
        let s = s2();
        assert_eq!(s.classify_discrete(&lam(&s, "1/2 a1")).unwrap().to_string(), "NotDiscrete witness=b1 value=1/2");
        assert_eq!(s.classify_discrete(&lam(&s, "1 a1")).unwrap(), Classification::Discrete);
        assert_eq!(s.classify_discrete(&lam(&s, "1/2 a1b1A1B1")).unwrap(), Classification::Discrete);
    }

    #[test]
    fn positivity_examples() {
        let s = s2();
        let r = s.check_positive_up_to(&lam(&s, "1 a1"), 1).unwrap();
        assert_eq!(r.to_string(), "false witness=a1 (verified up to bound 1)");
        assert!(s.check_positive_up_to(&lam(&s, "1 a1; 1 a2"), 1).unwrap().witness.is_some());
        let all = Lamination::parse_inline_weighted_curves(&s, "1 a1; 1 b1; 1 a2; 1 b2").unwrap();
        assert!(s.check_positive_up_to(&all, 1).unwrap().holds);
    }

    #[test]
    fn strictness_examples() {
        let s = s2();
        assert!(!s.check_strict_up_to(&lam(&s, "1 b1"), 2).unwrap().holds());
        let primes = (2u64..).filter(|n| (2..*n).all(|d| n % d != 0));
        let simple = s.enumerate_simple_classes(4).unwrap();
        let comps = simple
            .iter()
            .zip(primes)
            .map(|(c, p)| (c.clone(), parse_rational(&format!("1/{p}")).unwrap()));
        let l = Lamination::weighted_curves(&s, comps).unwrap();
        let r = s.check_strict_up_to(&l, 2).unwrap();
        assert!(r.holds(), "{r}");
        assert!(s.check_positive_up_to(&l, 2).unwrap().holds);
    }

    #[test]
    fn curv_examples() {
        let s = s2();
        let one = s.curv_normalize(&s.parse_class("a1").unwrap()).unwrap();
        assert_eq!(one.to_string(), "1\ta1\n");
        let sep = s.curv_normalize(&s.parse_class("a1 b1 A1 B1").unwrap()).unwrap();
        assert_eq!(sep.components().next().unwrap().1, &lamination::half());
        for l in [one, sep] {
            assert_eq!(s.classify_discrete(&l).unwrap(), Classification::Discrete);
        }
    }

    #[test]
    fn file_format_round_trip() {
        let s = s2();
        let l = Lamination::parse(&s, "# comment\n1/2\ta1\n3\tb2 # trailing\n").unwrap();
        assert_eq!(Lamination::parse(&s, &l.to_string()).unwrap(), l);
    }
}
