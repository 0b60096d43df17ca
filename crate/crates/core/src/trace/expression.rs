use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multicurve::Multicurve;
use crate::error::{Error, Result};
use crate::surface::Surface;

/// `sum m_Gamma t_Gamma` with exact rational coefficients; zero terms are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TraceExpression {
    terms: BTreeMap<Multicurve, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TraceExpression {
    pub fn zero() -> TraceExpression {
        TraceExpression::default()
    }

    pub fn unit() -> TraceExpression {
        TraceExpression::scalar(BigRational::one())
    }

    pub fn scalar(c: BigRational) -> TraceExpression {
        TraceExpression::term(Multicurve::empty(), c)
    }

    pub fn basis(m: Multicurve) -> TraceExpression {
        TraceExpression::term(m, BigRational::one())
    }

    pub fn term(m: Multicurve, c: BigRational) -> TraceExpression {
        let mut e = TraceExpression::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multicurve, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Multicurve) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Multicurve, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TraceExpression, k: &BigRational) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn add(&self, other: &TraceExpression) -> TraceExpression {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &TraceExpression) -> TraceExpression {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn scale(&self, k: &BigRational) -> TraceExpression {
        let mut out = TraceExpression::zero();
        out.add_scaled(self, k);
        out
    }

    /// Applies `f` to every basis index, collecting like terms.
    pub fn map_terms<F>(&self, mut f: F) -> Result<TraceExpression>
    where
        F: FnMut(&Multicurve, &BigRational) -> Result<(Multicurve, BigRational)>,
    {
        let mut out = TraceExpression::zero();
        for (m, c) in &self.terms {
            let (m2, c2) = f(m, c)?;
            out.add_term(m2, c2);
        }
        Ok(out)
    }

    /// Parses the line format `RATIONAL<TAB>multicurve`; blank lines are skipped.
    pub fn parse(s: &Surface, text: &str) -> Result<TraceExpression> {
        let mut out = TraceExpression::zero();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let (c, m) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("expected RATIONAL<TAB>multicurve, got {line:?}")))?;
            out.add_term(Multicurve::parse(s, m)?, parse_rational(c)?);
        }
        Ok(out)
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    BigRational::from_str(text.trim()).map_err(|_| Error::Parse(format!("bad rational {:?}", text.trim())))
}

impl fmt::Display for TraceExpression {
    /// One term per line in descending basis order, so the constant term is last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in self.terms.iter().rev() {
            writeln!(f, "{c}\t{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TraceExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().rev().map(|(m, c)| format!("{c}*[{m}]")).collect();
        write!(f, "TraceExpression({})", parts.join(" + "))
    }
}
