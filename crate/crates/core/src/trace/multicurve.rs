use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::surface::{CurveClass, HomologyVector, Ring, Surface};

/// Pairwise disjoint simple classes with positive multiplicities; the index of
/// the basis element `t_Gamma`. The empty multicurve is the unit.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicurve {
    components: BTreeMap<CurveClass, u32>,
}

impl Multicurve {
    pub fn empty() -> Multicurve {
        Multicurve::default()
    }

    /// Validating constructor: components must be simple and pairwise disjoint.
    pub fn new(s: &Surface, components: impl IntoIterator<Item = (CurveClass, u32)>) -> Result<Multicurve> {
        let m = Multicurve::from_components(components);
        m.validate(s)?;
        Ok(m)
    }

    pub fn single(c: CurveClass, multiplicity: u32) -> Multicurve {
        Multicurve::from_components([(c, multiplicity)])
    }

    pub(crate) fn from_components(components: impl IntoIterator<Item = (CurveClass, u32)>) -> Multicurve {
        let mut map = BTreeMap::new();
        for (c, m) in components {
            if m > 0 {
                *map.entry(c).or_insert(0) += m;
            }
        }
        Multicurve { components: map }
    }

    pub fn validate(&self, s: &Surface) -> Result<()> {
        for c in self.components.keys() {
            if !s.is_simple(c)? {
                return Err(Error::NotSimple(c.to_string()));
            }
        }
        let keys: Vec<&CurveClass> = self.components.keys().collect();
        for (i, x) in keys.iter().enumerate() {
            for y in &keys[i + 1..] {
                if s.intersection_number(x, y)? > 0 {
                    return Err(Error::NotDisjoint(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&CurveClass, u32)> {
        self.components.iter().map(|(c, &m)| (c, m))
    }

    pub fn classes(&self) -> impl Iterator<Item = &CurveClass> {
        self.components.keys()
    }

    pub fn multiplicity(&self, c: &CurveClass) -> u32 {
        self.components.get(c).copied().unwrap_or(0)
    }

    /// Sum of multiplicity times representative length.
    pub fn total_length(&self) -> usize {
        self.components().map(|(c, m)| c.len() * m as usize).sum()
    }

    /// Union with multiplicities added.
    pub fn union(&self, other: &Multicurve) -> Multicurve {
        Multicurve::from_components(
            self.components().chain(other.components()).map(|(c, m)| (c.clone(), m)),
        )
    }

    /// Removes one copy of `c`.
    pub fn remove_one(&self, c: &CurveClass) -> Multicurve {
        let mut out = self.clone();
        if let Some(m) = out.components.get_mut(c) {
            *m -= 1;
            if *m == 0 {
                out.components.remove(c);
            }
        }
        out
    }

    /// Homology class `sum m_c [c]` in the requested ring.
    pub fn homology(&self, s: &Surface, ring: Ring) -> HomologyVector {
        let mut v = HomologyVector::zero(s.genus(), ring);
        for (c, m) in self.components() {
            v.add_scaled(&s.homology_class(c.rep(), Ring::Z), m as i64);
        }
        v
    }

    /// Parses `-` or comma-separated `word^multiplicity` tokens.
    pub fn parse(s: &Surface, text: &str) -> Result<Multicurve> {
        let text = text.trim();
        if text == "-" || text.is_empty() {
            return Ok(Multicurve::empty());
        }
        let mut comps = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let (word, mult) = match token.split_once('^') {
                Some((w, m)) => (
                    w,
                    m.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad multiplicity in {token:?}")))?,
                ),
                None => (token, 1),
            };
            if mult == 0 {
                return Err(Error::Parse(format!("zero multiplicity in {token:?}")));
            }
            comps.push((s.parse_class(word)?, mult));
        }
        Multicurve::new(s, comps)
    }
}

impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.components().map(|(c, m)| format!("{c}^{m}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multicurve({self})")
    }
}
