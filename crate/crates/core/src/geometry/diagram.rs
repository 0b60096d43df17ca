//! Curve diagrams: closed strands drawn as chords of the fundamental polygon.
//!
//! A strand reading the cyclic word `w` has one chord per letter. Chord `k`
//! leaves through side `sigma(w[k])` and enters through side `sigma(w[k-1]^{-1})`.
//! Every passage through an identified side pair occupies one slot on each of
//! the two sides; slot `j` (counted counterclockwise) on `sigma(x)` is glued to
//! slot `n-1-j` on `sigma(x^{-1})`. Two chords cross exactly when their
//! endpoints interleave on the boundary.

use std::collections::HashMap;
use std::fmt;

use super::geodesic::in_arc;
use super::model::{r, Real};
use crate::error::{Error, Result};
use crate::surface::{CurveClass, GroupWord, Letter, Surface};

/// Boundary ties closer than this are degenerate unless they are parallel copies.
const TIE_TOL: f64 = 1e-20;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub side: usize,
    pub index: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub entry: Slot,
    pub exit: Slot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub word: Vec<Letter>,
    pub chords: Vec<Chord>,
}

/// A transverse double point between chord `a` and chord `b`, given as
/// `(strand, chord)` pairs with `a < b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub a: (usize, usize),
    pub b: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveDiagram {
    genus: usize,
    strands: Vec<Strand>,
    slot_counts: Vec<usize>,
}

/// Key of a side passage, expressed on the side of the positive letter.
struct Passage {
    strand: usize,
    chord: usize,
    letter: Letter,
}

impl CurveDiagram {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn slot_count(&self, side: usize) -> usize {
        self.slot_counts[side]
    }

    pub fn side_count(&self) -> usize {
        self.slot_counts.len()
    }

    /// All chords with their `(strand, chord)` labels.
    pub fn chords(&self) -> impl Iterator<Item = ((usize, usize), &Chord)> {
        self.strands
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.chords.iter().enumerate().map(move |(k, c)| ((i, k), c)))
    }

    pub fn crossings(&self) -> Vec<Crossing> {
        let chords: Vec<_> = self.chords().collect();
        let mut out = Vec::new();
        for (x, (la, ca)) in chords.iter().enumerate() {
            for (lb, cb) in &chords[x + 1..] {
                if chords_cross(ca, cb) {
                    out.push(Crossing { a: *la, b: *lb });
                }
            }
        }
        out
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().len()
    }

    /// One strand per line, chords as `side:slot->side:slot`.
    pub fn dump(&self) -> String {
        self.to_string()
    }

    /// Builds a diagram from cyclic words, ranking the passages through each
    /// side pair by `order` (smaller first, counterclockwise on the side of the
    /// positive letter).
    fn assemble<K: Ord>(
        genus: usize,
        words: Vec<Vec<Letter>>,
        mut order: impl FnMut(usize, usize) -> K,
    ) -> CurveDiagram {
        let model_side = side_table(genus);
        let n = 4 * genus;
        let mut groups: HashMap<usize, Vec<(K, Passage)>> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            for (k, &l) in w.iter().enumerate() {
                groups.entry(l.generator()).or_default().push((
                    order(i, k),
                    Passage {
                        strand: i,
                        chord: k,
                        letter: l,
                    },
                ));
            }
        }
        // rank of the passage after chord k on the exit side
        let mut exit_slot: HashMap<(usize, usize), Slot> = HashMap::new();
        let mut slot_counts = vec![0; n];
        for (gen, mut list) in groups {
            list.sort_by(|a, b| a.0.cmp(&b.0));
            let pos = Letter::new(gen, false);
            let (p, q) = (model_side[pos.code() as usize], model_side[pos.inverse().code() as usize]);
            let m = list.len();
            slot_counts[p] = m;
            slot_counts[q] = m;
            for (j, (_, pass)) in list.iter().enumerate() {
                let side = model_side[pass.letter.code() as usize];
                let index = if side == p { j } else { m - 1 - j };
                exit_slot.insert((pass.strand, pass.chord), Slot { side, index });
            }
        }
        let strands = words
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                let len = w.len();
                let chords = (0..len)
                    .map(|k| {
                        let exit = exit_slot[&(i, k)];
                        let prev = exit_slot[&(i, (k + len - 1) % len)];
                        let entry = Slot {
                            side: partner(&model_side, w[(k + len - 1) % len]),
                            index: slot_counts[prev.side] - 1 - prev.index,
                        };
                        Chord { entry, exit }
                    })
                    .collect();
                Strand { word: w, chords }
            })
            .collect();
        CurveDiagram {
            genus,
            strands,
            slot_counts,
        }
    }
}

/// Side of each letter code in the polygon model (a pure function of the genus).
fn side_table(genus: usize) -> Vec<usize> {
    let mut t = vec![0; 4 * genus];
    for j in 0..genus {
        t[Letter::a(j).code() as usize] = 4 * j;
        t[Letter::b(j).inverse().code() as usize] = 4 * j + 1;
        t[Letter::a(j).inverse().code() as usize] = 4 * j + 2;
        t[Letter::b(j).code() as usize] = 4 * j + 3;
    }
    t
}

fn partner(table: &[usize], l: Letter) -> usize {
    table[l.inverse().code() as usize]
}

pub(crate) fn chords_cross(a: &Chord, b: &Chord) -> bool {
    in_arc(a.entry, a.exit, b.entry) != in_arc(a.entry, a.exit, b.exit)
}

fn check_words(words: &[GroupWord]) -> Result<()> {
    for w in words {
        let l = w.letters();
        if l.is_empty() {
            return Err(Error::TrivialClass);
        }
        let reduced = l.windows(2).all(|p| p[0] != p[1].inverse());
        if !reduced || (l.len() > 1 && l[0] == l[l.len() - 1].inverse()) {
            return Err(Error::InvalidArgument(format!("{w} is not cyclically reduced")));
        }
    }
    Ok(())
}

impl Surface {
    /// The single-strand diagram reading the representative of `c`.
    pub fn realize(&self, c: &CurveClass) -> Result<CurveDiagram> {
        self.realize_words(std::slice::from_ref(c.rep()))
    }

    /// A diagram with one strand per cyclically reduced word, slots ranked in
    /// order of appearance. The result is generally not taut.
    pub fn realize_words(&self, words: &[GroupWord]) -> Result<CurveDiagram> {
        check_words(words)?;
        for w in words {
            if let Some(g) = w.max_generator() {
                if g >= 2 * self.genus() {
                    return Err(Error::BadLetter(w.to_string()));
                }
            }
        }
        Ok(CurveDiagram::assemble(
            self.genus(),
            words.iter().map(|w| w.letters().to_vec()).collect(),
            |i, k| (i, k),
        ))
    }

    /// Moves every strand onto the closed geodesic of its class. Parallel
    /// copies are pushed off to the left one level at a time and a proper power
    /// `u^k` becomes a spiral around the geodesic of `u`, so the result has no
    /// monogons or bigons and realizes the geometric crossing numbers.
    pub fn tauten(&self, d: &CurveDiagram) -> Result<CurveDiagram> {
        if d.genus != self.genus() {
            return Err(Error::GenusMismatch {
                expected: self.genus(),
                found: d.genus,
            });
        }
        let classes: Vec<CurveClass> = d
            .strands
            .iter()
            .map(|s| self.canonical_class(&GroupWord::new(s.word.clone())))
            .collect::<Result<_>>()?;
        self.taut_diagram(&classes)
    }

    /// Taut diagram of the given classes, one strand each, in order.
    pub fn taut_diagram(&self, classes: &[CurveClass]) -> Result<CurveDiagram> {
        let mut roots: Vec<CurveClass> = Vec::new();
        let mut base_level: HashMap<usize, i64> = HashMap::new();
        struct Info {
            root: usize,
            base: i64,
            power: usize,
        }
        let mut infos = Vec::new();
        let mut geodesics = Vec::new();
        for c in classes {
            let root = c.root_class();
            let id = match roots.iter().position(|x| *x == root) {
                Some(id) => id,
                None => {
                    roots.push(root.clone());
                    geodesics.push(self.geodesic(&root)?);
                    roots.len() - 1
                }
            };
            let level = base_level.entry(id).or_insert(0);
            infos.push(Info {
                root: id,
                base: *level,
                power: c.power(),
            });
            *level += c.power() as i64;
        }
        let words: Vec<Vec<Letter>> = infos
            .iter()
            .map(|info| geodesics[info.root].cutting.repeat(info.power))
            .collect();

        // boundary parameter of every passage on the side of its positive letter
        let mut keys: HashMap<(usize, usize), (Real, usize, usize, i64)> = HashMap::new();
        for (i, info) in infos.iter().enumerate() {
            let g = &geodesics[info.root];
            let len = g.len();
            for idx in 0..words[i].len() {
                let (q, k) = (idx / len, idx % len);
                let level = info.base + q as i64;
                let letter = g.cutting[k];
                let key = if letter.is_inverse() {
                    (g.chords[(k + 1) % len].entry.t, info.root, k, -level)
                } else {
                    (g.chords[k].exit.t, info.root, k, level)
                };
                keys.insert((i, idx), key);
            }
        }
        let mut ranked: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            for (k, l) in w.iter().enumerate() {
                ranked.entry(l.generator()).or_default().push((i, k));
            }
        }
        let mut rank: HashMap<(usize, usize), usize> = HashMap::new();
        for (_, mut list) in ranked {
            list.sort_by(|a, b| {
                let (ka, kb) = (&keys[a], &keys[b]);
                ka.0.partial_cmp(&kb.0).expect("finite boundary parameters")
            });
            // resolve ties between parallel copies by level
            let mut start = 0;
            while start < list.len() {
                let mut end = start + 1;
                while end < list.len() && (keys[&list[end]].0 - keys[&list[end - 1]].0).abs() < r(TIE_TOL) {
                    end += 1;
                }
                let cluster = &mut list[start..end];
                let first = keys[&cluster[0]];
                if cluster.iter().any(|p| {
                    let k = keys[p];
                    k.1 != first.1 || k.2 != first.2
                }) {
                    return Err(Error::DegenerateGeometry("curves meet on a polygon side".into()));
                }
                cluster.sort_by_key(|p| keys[p].3);
                start = end;
            }
            for (j, p) in list.into_iter().enumerate() {
                rank.insert(p, j);
            }
        }
        Ok(CurveDiagram::assemble(self.genus(), words, |i, k| rank[&(i, k)]))
    }
}

impl fmt::Display for CurveDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.strands {
            let parts: Vec<String> = s
                .chords
                .iter()
                .map(|c| format!("{}:{}->{}:{}", c.entry.side, c.entry.index, c.exit.side, c.exit.index))
                .collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Surface {
        Surface::new(2).unwrap()
    }

    #[test]
    fn side_table_matches_model() {
        let s = s2();
        let model = s.polygon_model().unwrap();
        let t = side_table(2);
        assert!((0..8u8).all(|c| model.side(Letter::from_code(c)) == t[c as usize]));
    }

    #[test]
    fn single_generator() {
        let s = s2();
        let d = s.realize(&s.parse_class("a1").unwrap()).unwrap();
        assert_eq!(d.strands().len(), 1);
        assert_eq!(d.dump(), "2:0->0:0\n");
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(s.tauten(&d).unwrap().crossing_count(), 0);
    }

    #[test]
    fn two_letters_use_adjacent_sides() {
        let s = s2();
        let d = s.realize_words(&[s.parse_word("a1 b1").unwrap()]).unwrap();
        assert_eq!(d.dump(), "1:0->0:0 2:0->3:0\n");
    }

    #[test]
    fn a1_and_b1_cross_once() {
        let s = s2();
        let c = |t: &str| s.parse_class(t).unwrap();
        let d = s.taut_diagram(&[c("a1"), c("b1")]).unwrap();
        assert_eq!(d.crossing_count(), 1);
    }

    #[test]
    fn pushed_off_copy_is_disjoint_after_tautening() {
        let s = s2();
        let w = |t: &str| s.parse_word(t).unwrap();
        let d = s.realize_words(&[w("a1"), w("b2 a2 B2 A2 b1 a1 B1")]).unwrap();
        assert!(d.crossing_count() > 0);
        let t = s.tauten(&d).unwrap();
        assert_eq!(t.crossing_count(), 0);
        assert_eq!(s.tauten(&t).unwrap(), t);
    }

    #[test]
    fn powers_spiral() {
        let s = s2();
        let c = s.parse_class("a1 b1 a1 b1").unwrap();
        let d = s.taut_diagram(std::slice::from_ref(&c)).unwrap();
        assert_eq!(d.crossing_count() as u64, s.self_intersection(&c).unwrap().count);
        let c = s.parse_class("a1 a1 a1").unwrap();
        assert_eq!(s.taut_diagram(&[c]).unwrap().crossing_count(), 2);
    }

    #[test]
    fn taut_counts_match_geodesics() {
        let s = s2();
        let classes = s.enumerate_classes(3).unwrap();
        for x in classes.iter().take(12) {
            let d = s.taut_diagram(std::slice::from_ref(x)).unwrap();
            assert_eq!(d.crossing_count() as u64, s.self_intersection(x).unwrap().count, "{x}");
            for y in classes.iter().take(12) {
                if x.root_class() == y.root_class() {
                    continue;
                }
                let d = s.taut_diagram(&[x.clone(), y.clone()]).unwrap();
                let sx = s.self_intersection(x).unwrap().count;
                let sy = s.self_intersection(y).unwrap().count;
                let i = s.intersection_number(x, y).unwrap();
                assert_eq!(d.crossing_count() as u64, sx + sy + i, "{x} {y}");
            }
        }
    }
}
