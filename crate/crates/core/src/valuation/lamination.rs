use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::surface::{CurveClass, Ring, Surface};
use crate::trace::expression::parse_rational;
use crate::trace::Multicurve;

/// A rational measured lamination: simple classes with positive weights.
///
/// [`Lamination::new`] also requires the components to be pairwise disjoint.
/// [`Lamination::weighted_curves`] drops that requirement and describes the
/// functional `alpha -> sum w_c i(c, alpha)` of an arbitrary weighted system of
/// simple curves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lamination {
    weights: BTreeMap<CurveClass, BigRational>,
}

impl Lamination {
    pub fn new(s: &Surface, comps: impl IntoIterator<Item = (CurveClass, BigRational)>) -> Result<Lamination> {
        let l = Lamination::weighted_curves(s, comps)?;
        let keys: Vec<&CurveClass> = l.weights.keys().collect();
        for (i, x) in keys.iter().enumerate() {
            for y in &keys[i + 1..] {
                if s.intersection_number(x, y)? > 0 {
                    return Err(Error::NotDisjoint(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(l)
    }

    pub fn weighted_curves(s: &Surface, comps: impl IntoIterator<Item = (CurveClass, BigRational)>) -> Result<Lamination> {
        let mut weights: BTreeMap<CurveClass, BigRational> = BTreeMap::new();
        for (c, w) in comps {
            if w <= BigRational::zero() {
                return Err(Error::InvalidArgument(format!("weight {w} of {c} is not positive")));
            }
            if !s.is_simple(&c)? {
                return Err(Error::NotSimple(c.to_string()));
            }
            *weights.entry(c).or_insert_with(BigRational::zero) += w;
        }
        Ok(Lamination { weights })
    }

    /// `w * Gamma`, a multicurve with every multiplicity scaled by `w`.
    pub fn from_multicurve(m: &Multicurve, w: &BigRational) -> Lamination {
        let weights = m
            .components()
            .map(|(c, k)| (c.clone(), w * BigRational::from_integer(k.into())))
            .collect();
        Lamination { weights }
    }

    pub fn components(&self) -> impl Iterator<Item = (&CurveClass, &BigRational)> {
        self.weights.iter()
    }

    pub fn weight(&self, c: &CurveClass) -> BigRational {
        self.weights.get(c).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn scale(&self, k: &BigRational) -> Lamination {
        Lamination {
            weights: self.weights.iter().map(|(c, w)| (c.clone(), w * k)).collect(),
        }
    }

    /// Whether every weight is an integer multiple of `1/2`, and the mod 2
    /// class of `sum (2w) c`.
    pub(crate) fn half_integral_class(&self, s: &Surface) -> Option<Vec<i64>> {
        let two = BigRational::from_integer(2.into());
        let mut v = vec![0i64; 2 * s.genus()];
        for (c, w) in &self.weights {
            let d = w * &two;
            if !d.is_integer() {
                return None;
            }
            let odd = !(d.to_integer() % 2u32).is_zero();
            if odd {
                for (x, y) in v.iter_mut().zip(s.homology_class(c.rep(), Ring::Z2).coords()) {
                    *x = (*x + y) % 2;
                }
            }
        }
        Some(v)
    }

    /// Line format: `RATIONAL<TAB>word`, blank lines and `#` comments ignored.
    pub fn parse(s: &Surface, text: &str) -> Result<Lamination> {
        Lamination::new(s, parse_lines(s, text)?)
    }

    pub fn parse_weighted_curves(s: &Surface, text: &str) -> Result<Lamination> {
        Lamination::weighted_curves(s, parse_lines(s, text)?)
    }

    /// Inline format: `RATIONAL word` entries separated by `;`, e.g. `1/2 a1; 1 b2`.
    pub fn parse_inline(s: &Surface, text: &str) -> Result<Lamination> {
        Lamination::new(s, parse_inline_entries(s, text)?)
    }

    pub fn parse_inline_weighted_curves(s: &Surface, text: &str) -> Result<Lamination> {
        Lamination::weighted_curves(s, parse_inline_entries(s, text)?)
    }
}

fn parse_lines(s: &Surface, text: &str) -> Result<Vec<(CurveClass, BigRational)>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let (w, word) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse(format!("expected RATIONAL<TAB>word, got {line:?}")))?;
        out.push((s.parse_class(word)?, parse_rational(w)?));
    }
    Ok(out)
}

fn parse_inline_entries(s: &Surface, text: &str) -> Result<Vec<(CurveClass, BigRational)>> {
    let mut out = Vec::new();
    for entry in text.split(';') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (w, word) = entry
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse(format!("expected `RATIONAL word`, got {entry:?}")))?;
        out.push((s.parse_class(word)?, parse_rational(w)?));
    }
    Ok(out)
}

impl fmt::Display for Lamination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, w) in &self.weights {
            writeln!(f, "{w}\t{c}")?;
        }
        Ok(())
    }
}

/// `v(f)`: a rational, or bottom for the zero function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValuationValue {
    Bottom,
    Finite(BigRational),
}

impl ValuationValue {
    pub fn zero() -> ValuationValue {
        ValuationValue::Finite(BigRational::zero())
    }

    /// Sum with bottom absorbing.
    pub fn add(&self, other: &ValuationValue) -> ValuationValue {
        match (self, other) {
            (ValuationValue::Finite(a), ValuationValue::Finite(b)) => ValuationValue::Finite(a + b),
            _ => ValuationValue::Bottom,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            ValuationValue::Finite(x) => x.is_integer(),
            ValuationValue::Bottom => false,
        }
    }
}

impl fmt::Display for ValuationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationValue::Bottom => write!(f, "-inf"),
            ValuationValue::Finite(x) => write!(f, "{x}"),
        }
    }
}

pub(crate) fn half() -> BigRational {
    BigRational::new(One::one(), 2.into())
}
