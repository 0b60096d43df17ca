use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::word::{min_rotation, primitive_period, GroupWord, Letter};

/// Unoriented free homotopy class of a nontrivial closed curve.
///
/// The representative is the least (shortlex) cyclically geodesic word among
/// all rotations and half-relator rewritings of the class and of its inverse.
/// Equality, hashing and ordering only look at the representative.
#[derive(Clone)]
pub struct CurveClass {
    rep: GroupWord,
    root: GroupWord,
    power: usize,
}

impl CurveClass {
    pub(crate) fn from_parts(rep: Vec<Letter>, root: Vec<Letter>, power: usize) -> CurveClass {
        CurveClass {
            rep: GroupWord::new(rep),
            root: GroupWord::new(root),
            power,
        }
    }

    pub fn rep(&self) -> &GroupWord {
        &self.rep
    }

    /// Canonical representative of the primitive root class.
    pub fn root(&self) -> &GroupWord {
        &self.root
    }

    /// `k` such that the class is the `k`-th power of its root.
    pub fn power(&self) -> usize {
        self.power
    }

    pub fn is_primitive(&self) -> bool {
        self.power == 1
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub(crate) fn root_class(&self) -> CurveClass {
        CurveClass {
            rep: self.root.clone(),
            root: self.root.clone(),
            power: 1,
        }
    }
}

/// Canonical data for a nonempty orbit of cyclic geodesic words.
pub(crate) fn canonical_parts(orbit: &[Vec<Letter>]) -> (Vec<Letter>, usize, Vec<Letter>) {
    let mut best: Option<Vec<Letter>> = None;
    let mut power = 1;
    let mut root_word = Vec::new();
    for w in orbit {
        let inv: Vec<Letter> = w.iter().rev().map(|l| l.inverse()).collect();
        let inv = min_rotation(&inv);
        for cand in [w.clone(), inv] {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let p = primitive_period(w);
        if w.len() / p > power {
            power = w.len() / p;
            root_word = w[..p].to_vec();
        }
    }
    let best = best.expect("nonempty orbit");
    if power == 1 {
        root_word = best.clone();
    }
    (best, power, root_word)
}

impl PartialEq for CurveClass {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Eq for CurveClass {}

impl Hash for CurveClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state)
    }
}

impl Ord for CurveClass {
    /// Shortlex on representatives.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rep
            .len()
            .cmp(&other.rep.len())
            .then_with(|| self.rep.letters().cmp(other.rep.letters()))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CurveClass({})", self.rep)
    }
}
