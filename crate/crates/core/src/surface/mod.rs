//! The surface group of a closed orientable surface of genus `g >= 2`.

pub mod class;
pub mod dehn;
pub mod homology;
pub mod representation;
pub mod word;

use std::sync::Arc;

pub use class::CurveClass;
pub use homology::{HomologyVector, Ring};
pub use representation::Representation;
pub use word::{GroupWord, Letter};

use crate::cache::Cache;
use crate::error::{Error, Result};
use dehn::Presentation;

/// A closed orientable surface with the standard presentation
/// `<a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>`.
///
/// Cloning is cheap; clones share the internal caches (geodesics, expansions
/// and products), which are synchronized and never change a result.
#[derive(Clone)]
pub struct Surface {
    inner: Arc<Inner>,
}

struct Inner {
    presentation: Presentation,
    cache: Cache,
}

pub fn make_surface(genus: usize) -> Result<Surface> {
    Surface::new(genus)
}

impl Surface {
    pub fn new(genus: usize) -> Result<Surface> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        Ok(Surface {
            inner: Arc::new(Inner {
                presentation: Presentation::new(genus),
                cache: Cache::default(),
            }),
        })
    }

    pub fn genus(&self) -> usize {
        self.inner.presentation.genus()
    }

    pub fn generator_count(&self) -> usize {
        2 * self.genus()
    }

    pub fn generators(&self) -> Vec<Letter> {
        (0..self.generator_count()).map(|g| Letter::new(g, false)).collect()
    }

    pub fn relator(&self) -> GroupWord {
        GroupWord::new(self.inner.presentation.relator().to_vec())
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus() as i64
    }

    pub(crate) fn presentation(&self) -> &Presentation {
        &self.inner.presentation
    }

    pub(crate) fn cache(&self) -> &Cache {
        &self.inner.cache
    }

    pub fn parse_word(&self, text: &str) -> Result<GroupWord> {
        GroupWord::parse(text, self.genus())
    }

    /// Parses a word and returns its curve class.
    pub fn parse_class(&self, text: &str) -> Result<CurveClass> {
        self.canonical_class(&self.parse_word(text)?)
    }

    fn check_letters(&self, w: &GroupWord) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.generator_count() => {
                let bad = w.letters().iter().find(|l| l.generator() >= self.generator_count());
                Err(Error::BadLetter(bad.map(|l| l.to_string()).unwrap_or_default()))
            }
            _ => Ok(()),
        }
    }

    /// Shortlex-least geodesic word for the element; empty iff trivial.
    pub fn normalize_word(&self, w: &GroupWord) -> Result<GroupWord> {
        self.check_letters(w)?;
        Ok(GroupWord::new(self.presentation().normal_form(w.letters())?))
    }

    /// Freely and Dehn-reduced word (cheaper than [`Surface::normalize_word`],
    /// not canonical, but empty exactly for the identity).
    pub fn dehn_reduce(&self, w: &GroupWord) -> GroupWord {
        GroupWord::new(self.presentation().dehn_reduce(w.letters()))
    }

    pub fn is_trivial(&self, w: &GroupWord) -> bool {
        self.presentation().dehn_reduce(w.letters()).is_empty()
    }

    pub fn words_equal(&self, x: &GroupWord, y: &GroupWord) -> bool {
        self.is_trivial(&x.concat(&y.inverse()))
    }

    pub fn canonical_class(&self, w: &GroupWord) -> Result<CurveClass> {
        self.check_letters(w)?;
        let orbit = self.presentation().cyclic_orbit(w.letters())?;
        if orbit.is_empty() {
            return Err(Error::TrivialClass);
        }
        let (rep, power, root) = class::canonical_parts(&orbit);
        if power == 1 {
            return Ok(CurveClass::from_parts(rep.clone(), rep, 1));
        }
        let root = self.canonical_class(&GroupWord::new(root))?;
        let k = power * root.power();
        Ok(CurveClass::from_parts(rep, root.root().letters().to_vec(), k))
    }

    /// Exponent-sum vector; additive under concatenation and zero on the relator.
    pub fn homology_class(&self, w: &GroupWord, ring: Ring) -> HomologyVector {
        HomologyVector::of_word(self.genus(), w, ring)
    }

    pub fn random_representation(&self, seed: u64) -> Result<Representation> {
        Representation::random(self.genus(), seed)
    }

    pub fn trivial_representation(&self) -> Representation {
        Representation::trivial(self.genus())
    }
}

impl std::fmt::Debug for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Surface(genus {})", self.genus())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Surface {
        Surface::new(2).unwrap()
    }

    #[test]
    fn genus_checks() {
        assert_eq!(Surface::new(1).unwrap_err(), Error::GenusTooSmall(1));
        assert_eq!(s2().relator().len(), 8);
        assert_eq!(Surface::new(3).unwrap().relator().len(), 12);
        assert_eq!(Surface::new(3).unwrap().generator_count(), 6);
    }

    #[test]
    fn normalize_examples() {
        let s = s2();
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(s.normalize_word(&w("a1 A1 b2")).unwrap(), w("b2"));
        assert!(s.normalize_word(&w("a1 b1 A1 B1 a2 b2 A2 B2")).unwrap().is_empty());
        assert_eq!(s.normalize_word(&w("a1 b1")).unwrap(), w("a1 b1"));
    }

    #[test]
    fn class_examples() {
        let s = s2();
        assert_eq!(s.parse_class("B1").unwrap(), s.parse_class("b1").unwrap());
        assert_eq!(
            s.parse_class("a1 b1 A1 b1 a1 B1 A1").unwrap(),
            s.parse_class("b1").unwrap()
        );
        assert_eq!(s.parse_class("").unwrap_err(), Error::TrivialClass);
        let sq = s.parse_class("a1 a1").unwrap();
        assert_eq!(sq.power(), 2);
        assert_eq!(sq.root().to_string(), "a1");
    }

    #[test]
    fn homology_examples() {
        let s = s2();
        let w = |t: &str| s.parse_word(t).unwrap();
        assert!(s.homology_class(&w("a1 b1 A1 B1"), Ring::Z).is_zero());
        assert!(s.homology_class(&w("a1 a1"), Ring::Z2).is_zero());
        assert_eq!(s.homology_class(&w("a1 b2"), Ring::Z).coords(), &[1, 0, 0, 1]);
        assert!(s.homology_class(&s.relator(), Ring::Z2).is_zero());
    }
}
