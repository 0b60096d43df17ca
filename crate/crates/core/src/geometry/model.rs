//! The fundamental 4g-gon in the hyperbolic plane, in double-double precision.
//!
//! Points live on the hyperboloid `-t^2 + x^2 + y^2 = -1` (projectively, so any
//! positive multiple is the same point) and are read in the Klein disk as
//! `(x/t, y/t)`, where geodesics are straight chords. The generators act by
//! matrices in `SO(2,1)`.
//!
//! Side `k` runs counterclockwise from vertex `k` to vertex `k+1`. The letter
//! `s` carries the polygon `D` to the tile across side `sigma(s)`:
//! `sigma(a_j) = 4j`, `sigma(B_j) = 4j+1`, `sigma(A_j) = 4j+2`, `sigma(b_j) = 4j+3`.

use std::collections::VecDeque;

use super::dd::{Dd, PI};
use crate::error::{Error, Result};
use crate::surface::{GroupWord, Letter};

pub type Real = Dd;
pub type Vec3 = [Real; 3];
pub type Mat3 = [[Real; 3]; 3];
pub type Point2 = [Real; 2];

/// Offset of the base vertex from the regular position, in Klein coordinates.
/// Any small generic value works; it breaks the symmetries of the regular
/// polygon so that closed geodesics avoid vertices.
const BASE_OFFSET: [f64; 2] = [-0.002_713_8, 0.001_937_1];

pub(crate) fn r(x: f64) -> Real {
    Real::from(x)
}

pub(crate) fn zero() -> Real {
    r(0.0)
}

pub(crate) fn identity() -> Mat3 {
    let mut m = [[zero(); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = r(1.0);
    }
    m
}

pub(crate) fn ldot(a: &Vec3, b: &Vec3) -> Real {
    -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn mul_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    let mut out = [zero(); 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

pub(crate) fn mul_mat(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Inverse of a Lorentz transformation: `J M^T J`.
pub(crate) fn lorentz_inverse(m: &Mat3) -> Mat3 {
    let sign = [-1.0, 1.0, 1.0];
    let mut out = [[zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[j][i] * r(sign[i] * sign[j]);
        }
    }
    out
}

fn det(m: &Mat3) -> Real {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Orthonormal frame `[p, u, n]` with `p` a point and `u` the unit tangent at `p` toward `q`.
fn frame(p: &Vec3, q: &Vec3) -> Mat3 {
    let c = -ldot(p, q);
    let mut u = [q[0] - c * p[0], q[1] - c * p[1], q[2] - c * p[2]];
    let un = ldot(&u, &u).sqrt();
    for x in u.iter_mut() {
        *x /= un;
    }
    let cross = [
        p[1] * u[2] - p[2] * u[1],
        p[2] * u[0] - p[0] * u[2],
        p[0] * u[1] - p[1] * u[0],
    ];
    let mut n = [-cross[0], cross[1], cross[2]];
    let nn = ldot(&n, &n).sqrt();
    for x in n.iter_mut() {
        *x /= nn;
    }
    let mut f = [[zero(); 3]; 3];
    for i in 0..3 {
        f[i][0] = p[i];
        f[i][1] = u[i];
        f[i][2] = n[i];
    }
    if det(&f) < zero() {
        for row in f.iter_mut() {
            row[2] = -row[2];
        }
    }
    f
}

/// Orientation-preserving isometry sending `p -> p2` and `q -> q2` (equal distances assumed).
fn isometry(p: &Vec3, q: &Vec3, p2: &Vec3, q2: &Vec3) -> Mat3 {
    mul_mat(&frame(p2, q2), &lorentz_inverse(&frame(p, q)))
}

pub(crate) fn klein(v: &Vec3) -> Point2 {
    [v[1] / v[0], v[2] / v[0]]
}

pub(crate) fn from_klein(p: &Point2) -> Vec3 {
    let s = (r(1.0) - p[0] * p[0] - p[1] * p[1]).sqrt();
    [r(1.0) / s, p[0] / s, p[1] / s]
}

pub(crate) fn cross2(a: &Point2, b: &Point2) -> Real {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn sub2(a: &Point2, b: &Point2) -> Point2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn lerp2(a: &Point2, b: &Point2, u: Real) -> Point2 {
    [a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])]
}

/// Where a line meets the polygon boundary: side index and parameter along the side.
#[derive(Copy, Clone, Debug)]
pub struct BoundaryPoint {
    pub side: usize,
    pub t: Real,
}

impl BoundaryPoint {
    /// Position on the boundary circle, in `[0, 4g)`.
    pub fn coordinate(&self) -> Real {
        r(self.side as f64) + self.t
    }
}

/// A segment of a line inside the polygon.
#[derive(Copy, Clone, Debug)]
pub struct Clip {
    pub entry: BoundaryPoint,
    pub exit: BoundaryPoint,
    pub entry_point: Point2,
    pub exit_point: Point2,
}

#[derive(Clone, Debug)]
pub struct PolygonModel {
    genus: usize,
    /// Isometry for each letter code.
    letters: Vec<Mat3>,
    vertices: Vec<Point2>,
    side_of_letter: Vec<usize>,
    letter_of_side: Vec<Letter>,
}

/// Parameters closer than this to a vertex are treated as degenerate.
pub(crate) const VERTEX_TOL: f64 = 1e-20;

impl PolygonModel {
    pub fn new(genus: usize) -> Result<PolygonModel> {
        let n = 4 * genus;
        let pi = PI;
        let angle = pi / r(n as f64);
        let cot = angle.cos() / angle.sin();
        let cosh_r = cot * cot;
        let sinh_r = (cosh_r * cosh_r - r(1.0)).sqrt();
        let regular: Vec<Vec3> = (0..n)
            .map(|k| {
                let theta = r(2.0) * pi * r(k as f64) / r(n as f64);
                [cosh_r, sinh_r * theta.cos(), sinh_r * theta.sin()]
            })
            .collect();
        let v = |k: usize| &regular[k % n];

        let mut letters = vec![identity(); n];
        let mut side_of_letter = vec![0; n];
        for j in 0..genus {
            let b = 4 * j;
            let a_iso = isometry(v(b + 3), v(b + 2), v(b), v(b + 1));
            let b_iso = isometry(v(b + 1), v(b + 2), v(b + 4), v(b + 3));
            let (a, bl) = (Letter::a(j), Letter::b(j));
            letters[a.code() as usize] = a_iso;
            letters[a.inverse().code() as usize] = lorentz_inverse(&a_iso);
            letters[bl.code() as usize] = b_iso;
            letters[bl.inverse().code() as usize] = lorentz_inverse(&b_iso);
            side_of_letter[a.code() as usize] = b;
            side_of_letter[bl.inverse().code() as usize] = b + 1;
            side_of_letter[a.inverse().code() as usize] = b + 2;
            side_of_letter[bl.code() as usize] = b + 3;
        }
        let mut letter_of_side = vec![Letter::a(0); n];
        for code in 0..n {
            letter_of_side[side_of_letter[code]] = Letter::from_code(code as u8);
        }

        // Elements g_k with g_k V_0 = V_k, found along the vertex cycle.
        let mut elements: Vec<Option<Mat3>> = vec![None; n];
        elements[0] = Some(identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let gk = elements[k].expect("visited");
            for m in &letters {
                let image = mul_vec(m, &regular[k]);
                let Some(j) = (0..n).find(|&j| {
                    (0..3).all(|i| (image[i] - regular[j][i]).abs() < r(1e-20))
                }) else {
                    continue;
                };
                if elements[j].is_none() {
                    elements[j] = Some(mul_mat(m, &gk));
                    queue.push_back(j);
                }
            }
        }
        if elements.iter().any(|e| e.is_none()) {
            return Err(Error::DegenerateGeometry("vertex cycle is incomplete".into()));
        }
        let base = klein(&regular[0]);
        let base = from_klein(&[base[0] + r(BASE_OFFSET[0]), base[1] + r(BASE_OFFSET[1])]);
        let vertices = elements
            .iter()
            .map(|g| klein(&mul_vec(g.as_ref().expect("complete"), &base)))
            .collect();
        let model = PolygonModel {
            genus,
            letters,
            vertices,
            side_of_letter,
            letter_of_side,
        };
        model.check_convex()?;
        Ok(model)
    }

    fn check_convex(&self) -> Result<()> {
        let n = self.vertices.len();
        for k in 0..n {
            let a = &self.vertices[k];
            let b = &self.vertices[(k + 1) % n];
            let c = &self.vertices[(k + 2) % n];
            if cross2(&sub2(b, a), &sub2(c, b)) <= zero() {
                return Err(Error::DegenerateGeometry("polygon is not convex".into()));
            }
        }
        if !self.contains(&[zero(), zero()]) {
            return Err(Error::DegenerateGeometry("polygon misses the origin".into()));
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn side_count(&self) -> usize {
        4 * self.genus
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn side(&self, l: Letter) -> usize {
        self.side_of_letter[l.code() as usize]
    }

    pub fn letter_across(&self, side: usize) -> Letter {
        self.letter_of_side[side]
    }

    pub fn letter_matrix(&self, l: Letter) -> &Mat3 {
        &self.letters[l.code() as usize]
    }

    pub fn word_matrix(&self, w: &[Letter]) -> Mat3 {
        let mut m = identity();
        for &l in w {
            m = mul_mat(&m, self.letter_matrix(l));
        }
        m
    }

    pub fn relator_residual(&self, relator: &GroupWord) -> f64 {
        let m = self.word_matrix(relator.letters());
        let id = identity();
        let mut err = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                err = err.max((m[i][j] - id[i][j]).abs().hi());
            }
        }
        err
    }

    /// Signed distance-like value: positive when `p` is strictly left of side `k`.
    fn side_value(&self, k: usize, p: &Point2) -> Real {
        let a = &self.vertices[k];
        let b = &self.vertices[(k + 1) % self.vertices.len()];
        cross2(&sub2(b, a), &sub2(p, a))
    }

    pub fn contains(&self, p: &Point2) -> bool {
        (0..self.side_count()).all(|k| self.side_value(k, p) > zero())
    }

    fn boundary_point(&self, k: usize, p: &Point2) -> BoundaryPoint {
        let a = &self.vertices[k];
        let b = &self.vertices[(k + 1) % self.vertices.len()];
        let d = sub2(b, a);
        let e = sub2(p, a);
        let t = (d[0] * e[0] + d[1] * e[1]) / (d[0] * d[0] + d[1] * d[1]);
        BoundaryPoint { side: k, t }
    }

    /// Clip the line from `p` toward `q` (Klein points) against the polygon.
    /// Returns `None` when the line misses the interior.
    pub fn clip_line(&self, p: &Point2, q: &Point2) -> Result<Option<Clip>> {
        let dir = sub2(q, p);
        let mut lo: Option<(Real, usize)> = None;
        let mut hi: Option<(Real, usize)> = None;
        for k in 0..self.side_count() {
            let a = &self.vertices[k];
            let b = &self.vertices[(k + 1) % self.vertices.len()];
            let edge = sub2(b, a);
            let base = cross2(&edge, &sub2(p, a));
            let rate = cross2(&edge, &dir);
            if rate == zero() {
                if base <= zero() {
                    return Ok(None);
                }
                continue;
            }
            let u = -base / rate;
            if rate > zero() {
                if lo.is_none_or(|(v, _)| u > v) {
                    lo = Some((u, k));
                }
            } else if hi.is_none_or(|(v, _)| u < v) {
                hi = Some((u, k));
            }
        }
        let (Some((u_in, k_in)), Some((u_out, k_out))) = (lo, hi) else {
            return Ok(None);
        };
        if u_in >= u_out {
            return Ok(None);
        }
        let entry_point = lerp2(p, q, u_in);
        let exit_point = lerp2(p, q, u_out);
        let clip = Clip {
            entry: self.boundary_point(k_in, &entry_point),
            exit: self.boundary_point(k_out, &exit_point),
            entry_point,
            exit_point,
        };
        for bp in [clip.entry, clip.exit] {
            if bp.t < r(VERTEX_TOL) || bp.t > r(1.0 - VERTEX_TOL) {
                return Err(Error::DegenerateGeometry("geodesic passes through a vertex".into()));
            }
        }
        Ok(Some(clip))
    }

    /// Walk the segment from the origin to `target`, pulling the target back
    /// into the polygon. Returns the letters crossed (the conjugator `h`, with
    /// `target = h . result`) and the pulled-back point.
    pub fn pull_back(&self, target: &Vec3) -> Result<(Vec<Letter>, Vec3)> {
        let mut letters = Vec::new();
        let mut start: Point2 = [zero(), zero()];
        let mut start_side: Option<usize> = None;
        let mut q = *target;
        for _ in 0..10_000 {
            let qk = klein(&q);
            if self.contains(&qk) {
                return Ok((letters, q));
            }
            let dir = sub2(&qk, &start);
            let mut best: Option<(Real, usize)> = None;
            for k in 0..self.side_count() {
                if Some(k) == start_side {
                    continue;
                }
                let a = &self.vertices[k];
                let b = &self.vertices[(k + 1) % self.vertices.len()];
                let edge = sub2(b, a);
                let rate = cross2(&edge, &dir);
                if rate >= zero() {
                    continue;
                }
                let u = -cross2(&edge, &sub2(&start, a)) / rate;
                if best.is_none_or(|(v, _)| u < v) {
                    best = Some((u, k));
                }
            }
            let Some((u, k)) = best else {
                return Err(Error::DegenerateGeometry("segment walk lost the polygon".into()));
            };
            let s = self.letter_of_side[k];
            let back = self.letter_matrix(s.inverse());
            let exit = from_klein(&lerp2(&start, &qk, u));
            start = klein(&mul_vec(back, &exit));
            start_side = Some(self.side(s.inverse()));
            q = mul_vec(back, &q);
            letters.push(s);
        }
        Err(Error::DegenerateGeometry("segment walk did not terminate".into()))
    }
}

/// Attracting and repelling fixed points of a hyperbolic element, in the Klein disk.
pub fn axis(m: &Mat3) -> Result<(Point2, Point2)> {
    let half = (m[0][0] + m[1][1] + m[2][2] - r(1.0)) / r(2.0);
    if half <= r(1.0) + r(1e-28) {
        return Err(Error::DegenerateGeometry("element is not hyperbolic".into()));
    }
    let root = (half * half - r(1.0)).sqrt();
    let attract = null_eigenvector(m, half + root)?;
    let repel = null_eigenvector(m, r(1.0) / (half + root))?;
    Ok((klein(&repel), klein(&attract)))
}

/// Eigenvector of `m` for the simple eigenvalue `lambda`, from the rows of `m - lambda I`.
fn null_eigenvector(m: &Mat3, lambda: Real) -> Result<Vec3> {
    let mut rows = *m;
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let cross = |a: &Vec3, b: &Vec3| -> Vec3 {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let best = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| cross(&rows[i], &rows[j]))
        .max_by(|x, y| x[0].abs().partial_cmp(&y[0].abs()).expect("finite"))
        .expect("three pairs");
    if best[0].abs().hi() == 0.0 {
        return Err(Error::DegenerateGeometry("axis endpoint is undefined".into()));
    }
    Ok([r(1.0), best[1] / best[0], best[2] / best[0]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Surface;

    #[test]
    fn relator_is_identity() {
        for g in [2, 3] {
            let s = Surface::new(g).unwrap();
            let m = PolygonModel::new(g).unwrap();
            let e = m.relator_residual(&s.relator());
            assert!(e < 1e-21, "genus {g}: {e:e}");
        }
    }

    #[test]
    fn letters_cross_their_sides() {
        let m = PolygonModel::new(2).unwrap();
        let n = m.side_count();
        for code in 0..n as u8 {
            let l = Letter::from_code(code);
            let k = m.side(l);
            let kk = m.side(l.inverse());
            // the isometry maps the partner side onto side k, reversing direction
            let img_start = klein(&mul_vec(m.letter_matrix(l), &from_klein(&m.vertices()[kk])));
            let target = m.vertices()[(k + 1) % n];
            assert!((img_start[0] - target[0]).abs() < r(1e-25));
            assert!((img_start[1] - target[1]).abs() < r(1e-25));
        }
    }
}
