//! Mapping classes acting on words and on the multicurve basis, and the sign
//! action of `H^1(S, Z/2)`.

mod twist;

use std::fmt;

use num_rational::BigRational;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::surface::word::{cyclic_free_reduce, free_reduce, min_rotation};
use crate::surface::{CurveClass, GroupWord, HomologyVector, Letter, Ring, Surface};
use crate::trace::{Multicurve, TraceExpression};

/// Longest conjugator accepted when comparing the image of the relator with the relator.
pub const CONJUGATOR_BOUND: usize = 8;

/// An automorphism of the free group on the generators that descends to the
/// surface group, with a stored inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClass {
    genus: usize,
    images: Vec<GroupWord>,
    inverse: Vec<GroupWord>,
}

/// How the image of the relator compares with the relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelatorImage {
    /// Freely a conjugate of `r^{±1}` by a word of the given length.
    Conjugate(usize),
    /// Trivial in the surface group but not freely conjugate to `r^{±1}`
    /// within the conjugator bound.
    Trivial,
    /// Nontrivial: the images do not define an endomorphism of the surface group.
    Nontrivial,
}

fn substitute(images: &[GroupWord], w: &GroupWord) -> GroupWord {
    let mut out = Vec::new();
    for &l in w.letters() {
        let img = &images[l.generator()];
        if l.is_inverse() {
            out.extend(img.inverse().into_letters());
        } else {
            out.extend_from_slice(img.letters());
        }
    }
    free_reduce(&mut out);
    GroupWord::new(out)
}

impl MappingClass {
    pub fn identity(genus: usize) -> MappingClass {
        let gens: Vec<GroupWord> = (0..2 * genus)
            .map(|g| GroupWord::new(vec![Letter::new(g, false)]))
            .collect();
        MappingClass::from_parts(genus, gens.clone(), gens)
    }

    pub(crate) fn from_parts(genus: usize, images: Vec<GroupWord>, inverse: Vec<GroupWord>) -> MappingClass {
        MappingClass { genus, images, inverse }
    }

    /// Validating constructor: the images must descend to the surface group
    /// and `inverse` must invert them there.
    pub fn new(s: &Surface, images: Vec<GroupWord>, inverse: Vec<GroupWord>) -> Result<MappingClass> {
        for list in [&images, &inverse] {
            if list.len() != s.generator_count() {
                return Err(Error::InvalidArgument(format!(
                    "expected {} generator images, found {}",
                    s.generator_count(),
                    list.len()
                )));
            }
        }
        let m = MappingClass::from_parts(s.genus(), images, inverse);
        if m.relator_image(s) == RelatorImage::Nontrivial || m.inverse().relator_image(s) == RelatorImage::Nontrivial {
            return Err(Error::InvalidArgument("images do not preserve the relator".into()));
        }
        if !m.inverts(s) {
            return Err(Error::InvalidArgument("stored inverse does not invert the images".into()));
        }
        Ok(m)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass::from_parts(self.genus, self.inverse.clone(), self.images.clone())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        let images = other.images.iter().map(|w| substitute(&self.images, w)).collect();
        let inverse = self.inverse.iter().map(|w| substitute(&other.inverse, w)).collect();
        MappingClass::from_parts(self.genus, images, inverse)
    }

    /// Letterwise substitution, freely reduced.
    pub fn substitute(&self, w: &GroupWord) -> GroupWord {
        substitute(&self.images, w)
    }

    pub fn apply_to_word(&self, s: &Surface, w: &GroupWord) -> Result<GroupWord> {
        s.normalize_word(&self.substitute(w))
    }

    pub fn apply_to_class(&self, s: &Surface, c: &CurveClass) -> Result<CurveClass> {
        s.canonical_class(&self.substitute(c.rep()))
    }

    /// `t_Gamma -> t_{phi(Gamma)}` on every basis element.
    pub fn apply_to_multicurve(&self, s: &Surface, m: &Multicurve) -> Result<Multicurve> {
        let mut comps = Vec::new();
        for (c, k) in m.components() {
            let img = self.apply_to_class(s, c)?;
            if !s.is_simple(&img)? {
                return Err(Error::NotSimpleImage(c.to_string()));
            }
            comps.push((img, k));
        }
        Multicurve::new(s, comps).map_err(|e| match e {
            Error::NotDisjoint(..) => Error::NotSimpleImage(m.to_string()),
            e => e,
        })
    }

    pub fn apply_to_expression(&self, s: &Surface, f: &TraceExpression) -> Result<TraceExpression> {
        f.map_terms(|m, c| Ok((self.apply_to_multicurve(s, m)?, c.clone())))
    }

    pub fn relator_image(&self, s: &Surface) -> RelatorImage {
        let r = s.relator();
        let mut img = self.substitute(&r).into_letters();
        let full = img.len();
        cyclic_free_reduce(&mut img);
        let conj = (full - img.len()) / 2;
        let img = min_rotation(&img);
        let fwd = min_rotation(r.letters());
        let back = min_rotation(r.inverse().letters());
        if conj <= CONJUGATOR_BOUND && (img == fwd || img == back) {
            RelatorImage::Conjugate(conj)
        } else if s.is_trivial(&GroupWord::new(img)) {
            RelatorImage::Trivial
        } else {
            RelatorImage::Nontrivial
        }
    }

    /// Whether the stored inverse composes to the identity on every generator.
    pub fn inverts(&self, s: &Surface) -> bool {
        s.generators().into_iter().all(|x| {
            let x = GroupWord::new(vec![x]);
            let there = substitute(&self.inverse, &substitute(&self.images, &x));
            let back = substitute(&self.images, &substitute(&self.inverse, &x));
            s.words_equal(&there, &x) && s.words_equal(&back, &x)
        })
    }

    /// Matrix of the induced map on `H_1(S, Z/2)`: column `j` is the class of
    /// the image of generator `j`.
    pub fn homology_action(&self, s: &Surface) -> Vec<Vec<i64>> {
        let cols: Vec<HomologyVector> = self.images.iter().map(|w| s.homology_class(w, Ring::Z2)).collect();
        (0..2 * self.genus)
            .map(|i| cols.iter().map(|c| c.coords()[i]).collect())
            .collect()
    }

    /// Lines `generator<TAB>image`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses the line format; the inverse is recovered from `inverse_text`
    /// (same format).
    pub fn parse(s: &Surface, text: &str, inverse_text: &str) -> Result<MappingClass> {
        MappingClass::new(s, parse_images(s, text)?, parse_images(s, inverse_text)?)
    }
}

fn parse_images(s: &Surface, text: &str) -> Result<Vec<GroupWord>> {
    let mut images: Vec<Option<GroupWord>> = vec![None; s.generator_count()];
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let (g, w) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse(format!("expected generator<TAB>image, got {line:?}")))?;
        let gen = s.parse_word(g)?;
        let l = match gen.letters() {
            [l] if !l.is_inverse() => *l,
            _ => return Err(Error::Parse(format!("{g:?} is not a generator"))),
        };
        images[l.generator()] = Some(s.parse_word(w)?);
    }
    images
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| Error::Parse(format!("missing image of {}", Letter::new(i, false)))))
        .collect()
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "{}\t{}", Letter::new(i, false), w)?;
        }
        Ok(())
    }
}

/// Number of Humphries generators for genus `g`: `2g + 1`.
pub fn humphries_count(genus: usize) -> usize {
    2 * genus + 1
}

impl Surface {
    /// Humphries curves in the order `a1, b1, c1, b2, c2, ..., b_g, a2`, where
    /// `c_i` meets `b_i` and `b_{i+1}` once and is disjoint from the others.
    pub fn humphries_curve(&self, which: usize) -> Result<CurveClass> {
        let g = self.genus();
        let count = humphries_count(g);
        if which >= count {
            return Err(Error::BadIndex { index: which, count });
        }
        let gen = |l: Letter| self.canonical_class(&GroupWord::new(vec![l]));
        match which {
            0 => gen(Letter::a(0)),
            1 => gen(Letter::b(0)),
            w if w == count - 1 => gen(Letter::a(1)),
            w if w % 2 == 1 => gen(Letter::b(w / 2)),
            w => self.chain_curve(w / 2 - 1),
        }
    }

    /// The curve `c_i` joining handles `i` and `i+1` (0-based `i`).
    fn chain_curve(&self, i: usize) -> Result<CurveClass> {
        let g = self.genus();
        let a: Vec<CurveClass> = (0..g).map(|j| self.canonical_class(&GroupWord::new(vec![Letter::a(j)]))).collect::<Result<_>>()?;
        let b: Vec<CurveClass> = (0..g).map(|j| self.canonical_class(&GroupWord::new(vec![Letter::b(j)]))).collect::<Result<_>>()?;
        let earlier: Vec<CurveClass> = (0..i).map(|k| self.chain_curve(k)).collect::<Result<_>>()?;
        for len in [2, 4, 6] {
            for c in self.enumerate_simple_classes(len)?.iter() {
                let mut ok = true;
                for j in 0..g {
                    let want_b = u64::from(j == i || j == i + 1);
                    if self.intersection_number(c, &a[j])? != 0 || self.intersection_number(c, &b[j])? != want_b {
                        ok = false;
                        break;
                    }
                }
                for e in &earlier {
                    if ok && self.intersection_number(c, e)? != 0 {
                        ok = false;
                    }
                }
                if ok {
                    return Ok(c.clone());
                }
            }
        }
        Err(Error::DegenerateGeometry(format!("no chain curve found between handles {} and {}", i + 1, i + 2)))
    }

    /// Dehn twist along a simple class; the twist along `a1` sends `b1` to `b1 a1`.
    pub fn twist_along(&self, c: &CurveClass) -> Result<MappingClass> {
        twist::twist_along(self, c)
    }

    /// Twist along the Humphries curve with the given index.
    pub fn twist_generator(&self, which: usize) -> Result<MappingClass> {
        self.twist_along(&self.humphries_curve(which)?)
    }
}

/// A class `a in H^1(S, Z/2)`, given by its values on `a1, b1, ..., ag, bg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignCharacter {
    bits: Vec<bool>,
}

impl SignCharacter {
    pub fn new(bits: Vec<bool>) -> SignCharacter {
        SignCharacter { bits }
    }

    pub fn zero(genus: usize) -> SignCharacter {
        SignCharacter::new(vec![false; 2 * genus])
    }

    /// All `2^{2g}` characters in binary counting order.
    pub fn all(genus: usize) -> Vec<SignCharacter> {
        let n = 2 * genus;
        (0..1u64 << n)
            .map(|m| SignCharacter::new((0..n).map(|i| m >> (n - 1 - i) & 1 == 1).collect()))
            .collect()
    }

    pub fn parse(s: &Surface, text: &str) -> Result<SignCharacter> {
        let text = text.trim();
        if text.len() != s.generator_count() {
            return Err(Error::Parse(format!(
                "sign character needs {} bits, got {:?}",
                s.generator_count(),
                text
            )));
        }
        text.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit {ch:?}"))),
            })
            .collect::<Result<_>>()
            .map(SignCharacter::new)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    /// `<a, h>` mod 2.
    pub fn pairing(&self, h: &HomologyVector) -> bool {
        self.bits
            .iter()
            .zip(h.coords())
            .filter(|(b, c)| **b && c.rem_euclid(2) == 1)
            .count()
            % 2
            == 1
    }

    /// `t_Gamma -> (-1)^{<a, [Gamma]>} t_Gamma`.
    pub fn act(&self, s: &Surface, f: &TraceExpression) -> TraceExpression {
        let mut out = TraceExpression::zero();
        for (m, c) in f.terms() {
            let c = if self.pairing(&m.homology(s, Ring::Z2)) { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    /// `a ∘ phi_*`, the character `x -> a(phi_* x)`.
    pub fn pull_back(&self, s: &Surface, phi: &MappingClass) -> SignCharacter {
        let m = phi.homology_action(s);
        let n = self.bits.len();
        SignCharacter::new(
            (0..n)
                .map(|j| (0..n).filter(|&i| self.bits[i] && m[i][j] == 1).count() % 2 == 1)
                .collect(),
        )
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

pub fn h1_action(s: &Surface, a: &SignCharacter, f: &TraceExpression) -> TraceExpression {
    a.act(s, f)
}

/// An automorphism of the character algebra to be checked.
#[derive(Clone, Debug)]
pub enum Action {
    Identity,
    Twist(MappingClass),
    Sign(SignCharacter),
}

impl Action {
    pub fn apply(&self, s: &Surface, f: &TraceExpression) -> Result<TraceExpression> {
        match self {
            Action::Identity => Ok(f.clone()),
            Action::Twist(phi) => phi.apply_to_expression(s, f),
            Action::Sign(a) => Ok(a.act(s, f)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub checked: usize,
    pub failures: Vec<(Multicurve, Multicurve)>,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ActionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checked={} failures={}", self.holds(), self.checked, self.failures.len())?;
        for (x, y) in &self.failures {
            write!(f, "\n{x}\t{y}")?;
        }
        Ok(())
    }
}

/// Length bound of the basis elements sampled by [`Surface::verify_algebra_automorphism`].
pub const SAMPLE_BOUND: usize = 4;

impl Surface {
    /// Checks `action(f g) = action(f) action(g)` exactly on `samples` seeded
    /// pairs of nonempty basis elements with total length at most [`SAMPLE_BOUND`].
    pub fn verify_algebra_automorphism(&self, action: &Action, samples: usize, seed: u64) -> Result<ActionReport> {
        let pool: Vec<Multicurve> = self
            .bounded_multicurves(SAMPLE_BOUND)?
            .into_iter()
            .filter(|m| !m.is_empty())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(Multicurve, Multicurve)> = (0..samples)
            .map(|_| {
                (
                    pool[rng.random_range(0..pool.len())].clone(),
                    pool[rng.random_range(0..pool.len())].clone(),
                )
            })
            .collect();
        let mut failures = Vec::new();
        for (x, y) in pairs {
            let (f, g) = (TraceExpression::basis(x.clone()), TraceExpression::basis(y.clone()));
            let lhs = action.apply(self, &self.multiply_expressions(&f, &g)?)?;
            let rhs = self.multiply_expressions(&action.apply(self, &f)?, &action.apply(self, &g)?)?;
            if lhs != rhs {
                failures.push((x, y));
            }
        }
        Ok(ActionReport {
            checked: samples,
            failures,
        })
    }

    /// Checks `phi ∘ a ∘ phi^{-1} = a ∘ phi_*^{-1}` on every basis element
    /// built from simple classes of length at most `bound`.
    pub fn semidirect_check(&self, phi: &MappingClass, a: &SignCharacter, bound: usize) -> Result<ActionReport> {
        let inv = phi.inverse();
        let twisted = a.pull_back(self, &inv);
        let mut failures = Vec::new();
        let basis = self.bounded_multicurves(bound)?;
        for m in &basis {
            let t = TraceExpression::basis(m.clone());
            let lhs = phi.apply_to_expression(self, &a.act(self, &inv.apply_to_expression(self, &t)?))?;
            let rhs = twisted.act(self, &t);
            if lhs != rhs {
                failures.push((m.clone(), m.clone()));
            }
        }
        Ok(ActionReport {
            checked: basis.len(),
            failures,
        })
    }
}

/// The scalar `(-1)^{<a,[Gamma]>}` as a rational, for reporting.
pub fn sign_of(s: &Surface, a: &SignCharacter, m: &Multicurve) -> BigRational {
    let one = BigRational::from_integer(1.into());
    if a.pairing(&m.homology(s, Ring::Z2)) {
        -one
    } else {
        one
    }
}

#[cfg(test)]
mod tests;
