use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{GroupWord, Letter};
use crate::error::{Error, Result};

pub type Mat2 = Matrix2<Complex64>;

const RESAMPLE_CAP: usize = 100;
const RESIDUAL_GATE: f64 = 1e-9;
const DET_GATE: f64 = 1e-12;

/// A point of `Hom(pi_1, SL2(C))` given by the images of `a1, b1, ..., ag, bg`.
#[derive(Clone, Debug)]
pub struct Representation {
    matrices: Vec<Mat2>,
    inverses: Vec<Mat2>,
    residual: f64,
}

impl Representation {
    pub fn trivial(genus: usize) -> Representation {
        Representation::from_matrices(vec![Mat2::identity(); 2 * genus])
    }

    /// Builds a representation from generator images, computing the relator residual.
    pub fn from_matrices(matrices: Vec<Mat2>) -> Representation {
        let inverses = matrices.iter().map(sl2_inverse).collect();
        let mut rep = Representation {
            matrices,
            inverses,
            residual: 0.0,
        };
        let mut r = Mat2::identity();
        for h in 0..rep.genus() {
            let (a, b) = (Letter::a(h), Letter::b(h));
            for l in [a, b, a.inverse(), b.inverse()] {
                r *= rep.letter(l);
            }
        }
        rep.residual = operator_norm(&(r - Mat2::identity()));
        rep
    }

    /// Seeded random representation. The first `g - 1` handles get random
    /// `SL2(C)` images; the last handle is solved so the relator holds, and the
    /// draw is repeated when that solve is ill-conditioned.
    pub fn random(genus: usize, seed: u64) -> Result<Representation> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RESAMPLE_CAP {
            if let Some(rep) = sample(genus, &mut rng) {
                return Ok(rep);
            }
        }
        Err(Error::SolveFailed(RESAMPLE_CAP))
    }

    pub fn genus(&self) -> usize {
        self.matrices.len() / 2
    }

    pub fn matrices(&self) -> &[Mat2] {
        &self.matrices
    }

    pub fn relator_residual(&self) -> f64 {
        self.residual
    }

    pub fn letter(&self, l: Letter) -> &Mat2 {
        if l.is_inverse() {
            &self.inverses[l.generator()]
        } else {
            &self.matrices[l.generator()]
        }
    }

    pub fn evaluate(&self, w: &GroupWord) -> Mat2 {
        let mut m = Mat2::identity();
        for &l in w.letters() {
            m *= self.letter(l);
        }
        m
    }

    pub fn evaluate_trace(&self, w: &GroupWord) -> Complex64 {
        self.evaluate(w).trace()
    }

    /// The representation multiplied by the central signs `(-1)^bits[i]` on generators.
    pub fn central_twist(&self, bits: &[bool]) -> Representation {
        let matrices = self
            .matrices
            .iter()
            .zip(bits)
            .map(|(m, &b)| if b { -m } else { *m })
            .collect();
        Representation::from_matrices(matrices)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sl2_inverse(m: &Mat2) -> Mat2 {
    Mat2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

fn det(m: &Mat2) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Largest singular value of a 2x2 complex matrix.
pub fn operator_norm(m: &Mat2) -> f64 {
    let h = m.adjoint() * m;
    let tr = (h[(0, 0)] + h[(1, 1)]).re;
    let dt = det(&h).re;
    let disc = (tr * tr / 4.0 - dt).max(0.0).sqrt();
    (tr / 2.0 + disc).max(0.0).sqrt()
}

fn random_entry(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

fn random_sl2(rng: &mut ChaCha8Rng) -> Mat2 {
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let mut m = Mat2::identity();
    for _ in 0..2 {
        let upper = Mat2::new(one, random_entry(rng), zero, one);
        let lower = Mat2::new(one, zero, random_entry(rng), one);
        m = m * upper * lower;
    }
    m
}

fn eigenvector(m: &Mat2, lambda: Complex64) -> nalgebra::Vector2<Complex64> {
    let u = nalgebra::Vector2::new(m[(0, 1)], lambda - m[(0, 0)]);
    let v = nalgebra::Vector2::new(lambda - m[(1, 1)], m[(1, 0)]);
    if u.norm() >= v.norm() {
        u
    } else {
        v
    }
}

fn sample(genus: usize, rng: &mut ChaCha8Rng) -> Option<Representation> {
    let mut matrices = Vec::with_capacity(2 * genus);
    let mut commutators = Mat2::identity();
    for _ in 0..genus - 1 {
        let a = random_sl2(rng);
        let b = random_sl2(rng);
        commutators = commutators * a * b * sl2_inverse(&a) * sl2_inverse(&b);
        matrices.push(a);
        matrices.push(b);
    }
    // Solve [A, B] = C^{-1}: with M = A^{-1} we need B M B^{-1} = M C^{-1},
    // so M must satisfy tr(M (I - C^{-1})) = 0 and det M = 1.
    let n = Mat2::identity() - sl2_inverse(&commutators);
    if n[(1, 1)].norm() < 1e-3 {
        return None;
    }
    let (m11, m12) = (random_entry(rng), random_entry(rng));
    let coeff = -m11 * n[(0, 1)] / n[(1, 1)] - m12;
    if coeff.norm() < 1e-3 {
        return None;
    }
    let m21 = (c(1.0, 0.0) + m11 * (m11 * n[(0, 0)] + m12 * n[(1, 0)]) / n[(1, 1)]) / coeff;
    let m22 = -(m11 * n[(0, 0)] + m12 * n[(1, 0)] + m21 * n[(0, 1)]) / n[(1, 1)];
    let m = Mat2::new(m11, m12, m21, m22);
    let target = m * sl2_inverse(&commutators);
    let tr = m.trace();
    let disc = (tr * tr - c(4.0, 0.0)).sqrt();
    if disc.norm() < 1e-3 {
        return None;
    }
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    let p = Mat2::from_columns(&[eigenvector(&m, l1), eigenvector(&m, l2)]);
    let q = Mat2::from_columns(&[eigenvector(&target, l1), eigenvector(&target, l2)]);
    let d = random_entry(rng) + c(2.0, 0.0);
    let p_inv = p.try_inverse()?;
    let mut x = q * Mat2::new(d, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)) * p_inv;
    let dx = det(&x);
    if dx.norm() < 1e-8 {
        return None;
    }
    x /= dx.sqrt();
    matrices.push(sl2_inverse(&m));
    matrices.push(x);
    if matrices.iter().any(|m| (det(m) - c(1.0, 0.0)).norm() > DET_GATE) {
        return None;
    }
    let rep = Representation::from_matrices(matrices);
    if rep.residual > RESIDUAL_GATE || !rep.residual.is_finite() {
        return None;
    }
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_representation_satisfies_gates() {
        for seed in 0..20 {
            let rep = Representation::random(2, seed).unwrap();
            assert!(rep.relator_residual() <= 1e-9, "seed {seed}");
            for m in rep.matrices() {
                assert!((det(m) - c(1.0, 0.0)).norm() <= 1e-12);
            }
        }
        let rep = Representation::random(3, 7).unwrap();
        assert!(rep.relator_residual() <= 1e-9);
    }

    #[test]
    fn deterministic_per_seed() {
        let x = Representation::random(2, 42).unwrap();
        let y = Representation::random(2, 42).unwrap();
        assert_eq!(x.matrices(), y.matrices());
    }

    #[test]
    fn trivial_traces_are_two() {
        let rep = Representation::trivial(2);
        let w = GroupWord::parse("a1 b2 A1", 2).unwrap();
        assert_eq!(rep.evaluate_trace(&w), c(2.0, 0.0));
    }
}
