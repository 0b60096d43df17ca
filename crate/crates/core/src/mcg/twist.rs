//! Dehn twists by loop insertion along lifts of a closed geodesic.
//!
//! The generator `x` is the path from the base point `O` (the origin of the
//! Klein disk) to `xO`, through the midpoint of the side `sigma(x)`. Each time
//! the path crosses a lift of the twisting curve, the image picks up the
//! element translating along that lift, with exponent given by the crossing
//! direction: `T(x) = h_1^{e_1} ... h_m^{e_m} x`.

use super::MappingClass;
use crate::error::{Error, Result};
use crate::geometry::model::{cross2, from_klein, klein, lerp2, mul_vec, r, sub2, Point2, Real};
use crate::geometry::Geodesic;
use crate::surface::word::free_reduce;
use crate::surface::{CurveClass, GroupWord, Letter, Surface};

/// Side parameters tried for the crossing point of a generator path.
const SIDE_POINTS: [f64; 5] = [0.5, 0.43, 0.57, 0.37, 0.63];
const CLEARANCE: f64 = 1e-6;

/// Position of `p + u (q - p)` on the segment `a -> b` where the two segments
/// cross, together with the orientation of the crossing.
fn segment_crossing(p: &Point2, q: &Point2, a: &Point2, b: &Point2) -> Option<(Real, bool)> {
    let d = sub2(q, p);
    let e = sub2(b, a);
    let den = cross2(&d, &e);
    if den.abs() < r(1e-28) {
        return None;
    }
    let ap = sub2(a, p);
    let u = cross2(&ap, &e) / den;
    let v = cross2(&ap, &d) / den;
    let zero = r(0.0);
    let one = r(1.0);
    if u > zero && u < one && v > zero && v < one {
        Some((u, den > zero))
    } else {
        None
    }
}

/// Crossings of the segment `p -> q` with the chords of `g`, in order along the segment.
fn crossings(g: &Geodesic, p: &Point2, q: &Point2) -> Vec<(usize, bool)> {
    let mut hits: Vec<(Real, usize, bool)> = g
        .chords
        .iter()
        .enumerate()
        .filter_map(|(k, c)| segment_crossing(p, q, &c.entry_point, &c.exit_point).map(|(u, o)| (u, k, o)))
        .collect();
    hits.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
    hits.into_iter().map(|(_, k, o)| (k, o)).collect()
}

fn power(w: &[Letter], positive: bool) -> Vec<Letter> {
    if positive {
        w.to_vec()
    } else {
        w.iter().rev().map(|l| l.inverse()).collect()
    }
}

/// Image of every generator under the twist along `gamma`, with the raw
/// orientation convention (`flip` reverses it).
fn raw_images(s: &Surface, gamma: &CurveClass, flip: bool) -> Result<Vec<GroupWord>> {
    let model = s.polygon_model()?;
    let g = s.geodesic(gamma)?;
    let origin: Point2 = [r(0.0), r(0.0)];
    let mut images = Vec::with_capacity(s.generator_count());
    for x in s.generators() {
        let side = model.side(x);
        let partner = model.side(x.inverse());
        let t = SIDE_POINTS
            .iter()
            .copied()
            .find(|&t| {
                g.chords.iter().all(|c| {
                    [c.entry, c.exit].iter().all(|b| {
                        let bad = (b.side == side && (b.t - r(t)).abs() < r(CLEARANCE))
                            || (b.side == partner && (b.t - r(1.0 - t)).abs() < r(CLEARANCE));
                        !bad
                    })
                })
            })
            .ok_or_else(|| Error::DegenerateGeometry("no clear crossing point for a generator path".into()))?;
        let v = model.vertices();
        let n = v.len();
        let m = lerp2(&v[side], &v[(side + 1) % n], r(t));
        let m_back = klein(&mul_vec(model.letter_matrix(x.inverse()), &from_klein(&m)));
        let mut word: Vec<Letter> = Vec::new();
        for (k, o) in crossings(&g, &origin, &m) {
            word.extend(power(&g.rotation(k), o != flip));
        }
        for (k, o) in crossings(&g, &m_back, &origin) {
            word.push(x);
            word.extend(power(&g.rotation(k), o != flip));
            word.push(x.inverse());
        }
        word.push(x);
        free_reduce(&mut word);
        images.push(GroupWord::new(word));
    }
    Ok(images)
}

/// Whether the raw convention has to be reversed to make the twist along
/// `a1` send `b1` to `b1 a1`.
fn calibrate(s: &Surface) -> Result<bool> {
    let a1 = s.canonical_class(&GroupWord::new(vec![Letter::a(0)]))?;
    let images = raw_images(s, &a1, false)?;
    let expected = GroupWord::new(vec![Letter::b(0), Letter::a(0)]);
    let got = &images[Letter::b(0).generator()];
    if s.words_equal(got, &expected) {
        Ok(false)
    } else if s.words_equal(got, &GroupWord::new(vec![Letter::b(0), Letter::a(0).inverse()])) {
        Ok(true)
    } else {
        Err(Error::DegenerateGeometry(format!("twist along a1 sends b1 to {got}")))
    }
}

/// The Dehn twist along a simple class.
pub(crate) fn twist_along(s: &Surface, gamma: &CurveClass) -> Result<MappingClass> {
    if !s.is_simple(gamma)? {
        return Err(Error::NotSimple(gamma.to_string()));
    }
    let flip = calibrate(s)?;
    let images = raw_images(s, gamma, flip)?;
    let inverse = raw_images(s, gamma, !flip)?;
    Ok(MappingClass::from_parts(s.genus(), images, inverse))
}
