use std::fmt;

use crate::error::{Error, Result};

/// One of the `4g` letters `a_i^{±1}`, `b_i^{±1}`.
///
/// The code is `2 * generator + inverse`, generators ordered `a1, b1, a2, b2, ...`,
/// so the derived ordering is `a1 < A1 < b1 < B1 < a2 < ...`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        Letter((generator as u8) << 1 | inverse as u8)
    }

    pub fn a(handle: usize) -> Letter {
        Letter::new(2 * handle, false)
    }

    pub fn b(handle: usize) -> Letter {
        Letter::new(2 * handle + 1, false)
    }

    pub fn from_code(code: u8) -> Letter {
        Letter(code)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    /// Generator index in the order `a1, b1, a2, b2, ...`.
    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    /// Zero-based handle index.
    pub fn handle(self) -> usize {
        self.generator() >> 1
    }

    pub fn is_b(self) -> bool {
        self.generator() & 1 == 1
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    /// The positive letter with the same generator.
    pub fn positive(self) -> Letter {
        Letter(self.0 & !1)
    }

    pub fn exponent(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.is_b(), self.is_inverse()) {
            (false, false) => 'a',
            (false, true) => 'A',
            (true, false) => 'b',
            (true, true) => 'B',
        };
        write!(f, "{}{}", c, self.handle() + 1)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the surface generators.
///
/// Values returned by [`crate::Surface::normalize_word`] are freely reduced and
/// geodesic; the type itself also carries raw input words.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> GroupWord {
        GroupWord(letters)
    }

    pub fn empty() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord(v)
    }

    /// Cyclic rotation starting at position `k`.
    pub fn rotate(&self, k: usize) -> GroupWord {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        GroupWord(v)
    }

    pub fn pow(&self, n: usize) -> GroupWord {
        GroupWord(self.0.repeat(n))
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }

    /// Parse the textual word syntax: tokens `a1 b1 ...`, uppercase for inverses,
    /// optionally separated by whitespace. `1` and the empty string denote the
    /// identity.
    pub fn parse(text: &str, genus: usize) -> Result<GroupWord> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" || trimmed == "e" {
            return Ok(GroupWord::empty());
        }
        let chars: Vec<char> = trimmed.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let (is_b, inverse) = match c {
                'a' => (false, false),
                'A' => (false, true),
                'b' => (true, false),
                'B' => (true, true),
                _ => return Err(Error::BadLetter(c.to_string())),
            };
            let start = i;
            i += 1;
            let digits_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let token: String = chars[start..i].iter().collect();
            if digits_start == i {
                return Err(Error::BadLetter(token));
            }
            let index: usize = chars[digits_start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::BadLetter(token.clone()))?;
            if index == 0 || index > genus {
                return Err(Error::BadLetter(token));
            }
            let generator = 2 * (index - 1) + is_b as usize;
            letters.push(Letter::new(generator, inverse));
        }
        Ok(GroupWord(letters))
    }
}

impl From<Vec<Letter>> for GroupWord {
    fn from(v: Vec<Letter>) -> Self {
        GroupWord(v)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({self})")
    }
}

/// Free reduction in place.
pub fn free_reduce(letters: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// Cyclic free reduction: strips matching ends. Returns the number of letters
/// removed from each end.
pub fn cyclic_free_reduce(letters: &mut Vec<Letter>) -> usize {
    free_reduce(letters);
    let n = letters.len();
    let mut k = 0;
    while 2 * k + 1 < n && letters[k] == letters[n - 1 - k].inverse() {
        k += 1;
    }
    if k > 0 {
        *letters = letters[k..n - k].to_vec();
    }
    k
}

/// Smallest rotation under the letter order.
pub fn min_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0;
    for k in 1..n {
        for t in 0..n {
            let x = letters[(k + t) % n];
            let y = letters[(best + t) % n];
            if x != y {
                if x < y {
                    best = k;
                }
                break;
            }
        }
    }
    let mut v = letters[best..].to_vec();
    v.extend_from_slice(&letters[..best]);
    v
}

/// Smallest period `p` with `letters` equal to its prefix of length `p` repeated.
pub fn primitive_period(letters: &[Letter]) -> usize {
    let n = letters.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| letters[i] == letters[i - p]) {
            return p;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = GroupWord::parse("a1 b1 A1 B1", 2).unwrap();
        assert_eq!(w.to_string(), "a1b1A1B1");
        assert_eq!(GroupWord::parse("a1b1A1B1", 2).unwrap(), w);
        assert_eq!(GroupWord::parse("", 2).unwrap(), GroupWord::empty());
        assert_eq!(GroupWord::parse("1", 2).unwrap(), GroupWord::empty());
    }

    #[test]
    fn parse_rejects_bad_letters() {
        assert!(matches!(GroupWord::parse("c1", 2), Err(Error::BadLetter(_))));
        assert!(matches!(GroupWord::parse("a3", 2), Err(Error::BadLetter(_))));
        assert!(matches!(GroupWord::parse("a0", 2), Err(Error::BadLetter(_))));
        assert!(matches!(GroupWord::parse("ab1", 2), Err(Error::BadLetter(_))));
    }

    #[test]
    fn multi_digit_indices() {
        let w = GroupWord::parse("a12B3", 12).unwrap();
        assert_eq!(w.letters(), &[Letter::a(11), Letter::b(2).inverse()]);
        assert_eq!(w.to_string(), "a12B3");
    }

    #[test]
    fn letter_order() {
        let a1 = Letter::a(0);
        assert!(a1 < a1.inverse());
        assert!(a1.inverse() < Letter::b(0));
        assert!(Letter::b(0).inverse() < Letter::a(1));
    }

    #[test]
    fn cyclic_helpers() {
        let mut w = GroupWord::parse("a1 b1 a2 B1 A1", 2).unwrap().into_letters();
        cyclic_free_reduce(&mut w);
        assert_eq!(GroupWord::new(w).to_string(), "a2");
        let w = GroupWord::parse("b1 a1 b1 a1", 2).unwrap();
        assert_eq!(primitive_period(w.letters()), 2);
        assert_eq!(GroupWord::new(min_rotation(w.letters())).to_string(), "a1b1a1b1");
    }
}
