//! Closed geodesics as cyclic sequences of chords of the fundamental polygon.

use super::model::{axis, from_klein, r, Clip, PolygonModel, Real};
use crate::error::{Error, Result};
use crate::surface::dehn::Presentation;
use crate::surface::Letter;

/// The closed geodesic of a primitive class.
///
/// `cutting[k]` is the letter of the side through which chord `k` leaves the
/// polygon; chord `k` enters through the side of `cutting[k-1]^{-1}`. Chord `k`
/// is the axis of the rotation `cutting[k..] cutting[..k]`, clipped to the polygon.
#[derive(Clone, Debug)]
pub struct Geodesic {
    pub cutting: Vec<Letter>,
    pub chords: Vec<Clip>,
}

impl Geodesic {
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// The cutting word read from chord `k`.
    pub fn rotation(&self, k: usize) -> Vec<Letter> {
        let mut v = self.cutting[k..].to_vec();
        v.extend_from_slice(&self.cutting[..k]);
        v
    }

    pub fn compute(model: &PolygonModel, pres: &Presentation, word: &[Letter]) -> Result<Geodesic> {
        let (repel, attract) = axis(&model.word_matrix(word))?;
        let mid = [(repel[0] + attract[0]) / r(2.0), (repel[1] + attract[1]) / r(2.0)];
        let (h, _) = model.pull_back(&from_klein(&mid))?;
        let inv = |w: &[Letter]| -> Vec<Letter> { w.iter().rev().map(|l| l.inverse()).collect() };
        let mut gamma = inv(&h);
        gamma.extend_from_slice(word);
        gamma.extend_from_slice(&h);
        let gamma = pres.dehn_reduce(&gamma);
        let gamma_inv = inv(&gamma);

        let mut cutting: Vec<Letter> = Vec::new();
        let mut chords: Vec<Clip> = Vec::new();
        let cap = 20 * gamma.len() + 64;
        let mut start_axis: Option<([Real; 2], [Real; 2])> = None;
        while chords.len() < cap {
            let mut conj = inv(&cutting);
            conj.extend_from_slice(&gamma);
            conj.extend_from_slice(&cutting);
            let conj = pres.dehn_reduce(&conj);
            let (p, q) = axis(&model.word_matrix(&conj))?;
            let clip = model
                .clip_line(&p, &q)?
                .ok_or_else(|| Error::DegenerateGeometry("geodesic left the polygon".into()))?;
            if let Some(&last) = cutting.last() {
                if clip.entry.side != model.side(last.inverse()) {
                    return Err(Error::DegenerateGeometry("chord entry mismatch".into()));
                }
            }
            match start_axis {
                None => start_axis = Some((p, q)),
                Some((p0, q0)) if !chords.is_empty() => {
                    let close = (0..2).all(|i| {
                        (p[i] - p0[i]).abs() < r(1e-12) && (q[i] - q0[i]).abs() < r(1e-12)
                    });
                    if close {
                        return Err(Error::DegenerateGeometry(
                            "geodesic closed up early: class is not primitive".into(),
                        ));
                    }
                }
                _ => {}
            }
            let letter = model.letter_across(clip.exit.side);
            chords.push(clip);
            cutting.push(letter);
            let mut check = cutting.clone();
            check.extend_from_slice(&gamma_inv);
            if pres.dehn_reduce(&check).is_empty() {
                if chords[0].entry.side != model.side(letter.inverse()) {
                    return Err(Error::DegenerateGeometry("chord entry mismatch".into()));
                }
                return Ok(Geodesic { cutting, chords });
            }
        }
        Err(Error::DegenerateGeometry("geodesic walk did not close".into()))
    }
}

/// Strict ccw containment of `z` in the open arc from `a` to `b` on the circle.
pub(crate) fn in_arc<T: PartialOrd>(a: T, b: T, z: T) -> bool {
    if a < b {
        a < z && z < b
    } else {
        z > a || z < b
    }
}

/// Number of crossing chord pairs between two geodesics (or within one, when
/// `same` is set, counting unordered pairs of distinct chords).
pub(crate) fn crossing_pairs(x: &Geodesic, y: &Geodesic, same: bool) -> Result<u64> {
    let tol = r(1e-20);
    let mut count = 0u64;
    for (i, c) in x.chords.iter().enumerate() {
        let (a, b) = (c.entry.coordinate(), c.exit.coordinate());
        let start = if same { i + 1 } else { 0 };
        for d in &y.chords[start.min(y.chords.len())..] {
            let (p, q) = (d.entry.coordinate(), d.exit.coordinate());
            for z in [p, q] {
                if (z - a).abs() < tol || (z - b).abs() < tol {
                    return Err(Error::DegenerateGeometry("curves meet on a polygon side".into()));
                }
            }
            if in_arc(a, b, p) != in_arc(a, b, q) {
                count += 1;
            }
        }
    }
    Ok(count)
}
