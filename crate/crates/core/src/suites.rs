//! Named end-to-end property suites, numbered 1 to 9.

use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use rand::seq::IndexedRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::intersection::reduced_words;
use crate::mcg::{humphries_count, Action, SignCharacter};
use crate::surface::representation::Mat2;
use crate::surface::{CurveClass, GroupWord, Ring, Surface};
use crate::trace::{evaluate_expression, rational, Multicurve, TraceExpression};
use crate::valuation::{Classification, Lamination, ValuationValue};

pub const TRACE_TOLERANCE: f64 = 1e-8;
pub const UNIT_TOLERANCE: f64 = 1e-12;
pub const GAP_TOLERANCE: f64 = 1e-6;
pub const REPRESENTATIONS: u64 = 20;

pub const NAMES: [&str; 9] = [
    "presentation",
    "basis",
    "thurston",
    "valuation-axioms",
    "discrete",
    "disjointness",
    "curv",
    "group-actions",
    "twist-invariance",
];

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({}) [{:.2}s]",
            self.number,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Resolves a suite by number (`"3"`) or name (`"thurston"`).
pub fn lookup(key: &str) -> Result<usize> {
    if let Ok(n) = key.parse::<usize>() {
        if (1..=NAMES.len()).contains(&n) {
            return Ok(n);
        }
    }
    NAMES
        .iter()
        .position(|n| *n == key)
        .map(|i| i + 1)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {key:?}")))
}

pub fn run(number: usize, seed: u64) -> Result<SuiteReport> {
    let s = Surface::new(2)?;
    let start = Instant::now();
    let (passed, detail) = match number {
        1 => presentation(&s, seed)?,
        2 => basis(&s, seed)?,
        3 => thurston(&s)?,
        4 => valuation_axioms(&s, seed)?,
        5 => discrete(&s, seed)?,
        6 => disjointness(&s, seed)?,
        7 => curv(&s)?,
        8 => group_actions(&s, seed)?,
        9 => twist_invariance(&s)?,
        n => return Err(Error::BadIndex { index: n, count: NAMES.len() }),
    };
    Ok(SuiteReport {
        number,
        name: NAMES[number - 1],
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

fn sl2_inverse(m: &Mat2) -> Mat2 {
    Mat2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

fn presentation(s: &Surface, seed: u64) -> Result<(bool, String)> {
    const TOTAL: usize = 6;
    let words = reduced_words(s.genus(), TOTAL);
    let upto: Vec<usize> = (0..=TOTAL).map(|k| words.iter().filter(|w| w.len() <= k).count()).collect();
    let mut worst = 0f64;
    let mut unit = 0f64;
    let mut pairs = 0usize;
    for j in 0..REPRESENTATIONS {
        let rho = s.random_representation(seed + j)?;
        unit = unit.max((rho.evaluate_trace(&GroupWord::empty()) - Complex64::new(2.0, 0.0)).norm());
        let mats: Vec<Mat2> = words.par_iter().map(|w| rho.evaluate(w)).collect();
        let inv: Vec<Mat2> = mats.par_iter().map(sl2_inverse).collect();
        let (count, err) = mats
            .par_iter()
            .enumerate()
            .map(|(i, ma)| {
                let rest = upto[TOTAL - words[i].len()];
                let ta = ma.trace();
                let mut err = 0f64;
                for k in 0..rest {
                    let t = ta * mats[k].trace() - (ma * mats[k]).trace() - (ma * inv[k]).trace();
                    err = err.max(t.norm());
                }
                (rest, err)
            })
            .reduce(|| (0, 0f64), |x, y| (x.0 + y.0, x.1.max(y.1)));
        pairs += count;
        worst = worst.max(err);
    }
    Ok((
        worst <= TRACE_TOLERANCE && unit <= UNIT_TOLERANCE,
        format!("pairs={pairs} reps={REPRESENTATIONS} max_residual={worst:.2e} unit_residual={unit:.2e}"),
    ))
}

fn basis(s: &Surface, seed: u64) -> Result<(bool, String)> {
    let words = reduced_words(s.genus(), 6);
    let reps: Vec<_> = (0..REPRESENTATIONS).map(|j| s.random_representation(seed + j)).collect::<Result<_>>()?;
    let worst = words
        .par_iter()
        .map(|w| {
            let f = s.expand_trace(w)?;
            Ok(reps
                .iter()
                .map(|r| (evaluate_expression(r, &f) - r.evaluate_trace(w)).norm())
                .fold(0f64, f64::max))
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0f64, f64::max);
    let set: Vec<Multicurve> = ["-", "a1^1", "b1^1", "a2^1", "a1^1,a2^1", "a1^2"]
        .iter()
        .map(|t| Multicurve::parse(s, t))
        .collect::<Result<_>>()?;
    let rank = s.basis_rank_check(&set, 12, seed)?;
    Ok((
        worst <= TRACE_TOLERANCE && rank.is_full() && rank.rank == 6 && rank.gap() >= GAP_TOLERANCE,
        format!("words={} max_residual={worst:.2e} {rank}", words.len()),
    ))
}

fn thurston(s: &Surface) -> Result<(bool, String)> {
    let deltas = s.enumerate_simple_classes(2)?;
    let alphas = reduced_words(s.genus(), 5);
    let failures: usize = deltas
        .par_iter()
        .map(|d| {
            let mut bad = 0;
            for a in &alphas {
                if !s.thurston_max_check(d, a)?.holds() {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum();
    Ok((
        failures == 0,
        format!("deltas={} alphas={} failures={failures}", deltas.len(), alphas.len()),
    ))
}

fn random_lamination(s: &Surface, pool: &[Multicurve], rng: &mut ChaCha8Rng) -> Result<Lamination> {
    let m = pool.choose(rng).unwrap();
    let comps: Vec<(CurveClass, BigRational)> = m
        .classes()
        .map(|c| {
            let w = BigRational::new(rng.random_range(1..=6).into(), rng.random_range(1..=3).into());
            (c.clone(), w)
        })
        .collect();
    Lamination::new(s, comps)
}

fn random_expression(pool: &[Multicurve], rng: &mut ChaCha8Rng) -> TraceExpression {
    let mut f = TraceExpression::zero();
    for _ in 0..rng.random_range(1..=4) {
        let c = rational(rng.random_range(-3..=3));
        f.add_term(pool.choose(rng).unwrap().clone(), c);
    }
    f
}

fn valuation_axioms(s: &Surface, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = s.bounded_multicurves(4)?;
    let curves: Vec<Multicurve> = pool.iter().filter(|m| !m.is_empty()).cloned().collect();
    let mut ultra_fail = 0;
    let mut equal_fail = 0;
    let mut distinct = 0;
    for _ in 0..500 {
        let l = random_lamination(s, &curves, &mut rng)?;
        let f = random_expression(&pool, &mut rng);
        let mut g = random_expression(&pool, &mut rng);
        if rng.random_bool(0.3) {
            g = g.sub(&f);
        }
        let (vf, vg) = (s.valuate(&l, &f)?, s.valuate(&l, &g)?);
        let vs = s.valuate(&l, &f.add(&g))?;
        let max = vf.clone().max(vg.clone());
        if vs > max {
            ultra_fail += 1;
        }
        if vf != vg {
            distinct += 1;
            if vs != max {
                equal_fail += 1;
            }
        }
    }
    let mut mult_fail = 0;
    let nonempty: Vec<Multicurve> = s.bounded_multicurves(3)?;
    let checks: Vec<(Lamination, Multicurve, Multicurve)> = (0..200)
        .map(|_| {
            Ok((
                random_lamination(s, &curves, &mut rng)?,
                nonempty.choose(&mut rng).unwrap().clone(),
                nonempty.choose(&mut rng).unwrap().clone(),
            ))
        })
        .collect::<Result<_>>()?;
    for ok in checks
        .par_iter()
        .map(|(l, x, y)| {
            Ok(s
                .multiplicativity_check(l, &TraceExpression::basis(x.clone()), &TraceExpression::basis(y.clone()))?
                .holds())
        })
        .collect::<Result<Vec<bool>>>()?
    {
        if !ok {
            mult_fail += 1;
        }
    }
    Ok((
        ultra_fail == 0 && equal_fail == 0 && mult_fail == 0,
        format!(
            "ultrametric_failures={ultra_fail}/500 equality_failures={equal_fail}/{distinct} multiplicativity_failures={mult_fail}/200"
        ),
    ))
}

fn discrete(s: &Surface, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<Multicurve> = s.bounded_multicurves(4)?.into_iter().filter(|m| !m.is_empty()).collect();
    let (even, odd): (Vec<&Multicurve>, Vec<&Multicurve>) =
        pool.iter().partition(|m| m.homology(s, Ring::Z2).is_zero());
    let alphas = s.enumerate_classes(5)?;
    let expansions: Vec<TraceExpression> = alphas.par_iter().map(|c| s.expand_class(c)).collect::<Result<_>>()?;
    let half = BigRational::new(1.into(), 2.into());
    let evens: Vec<&Multicurve> = (0..50).map(|_| *even.choose(&mut rng).unwrap()).collect();
    let odds: Vec<&Multicurve> = (0..50).map(|_| *odd.choose(&mut rng).unwrap()).collect();
    let even_fail: usize = evens
        .par_iter()
        .map(|m| {
            let l = Lamination::from_multicurve(m, &half);
            if s.classify_discrete(&l)? != Classification::Discrete {
                return Ok(1);
            }
            for f in &expansions {
                match s.valuate(&l, f)? {
                    ValuationValue::Finite(v) if v.is_integer() && !v.is_negative() => {}
                    _ => return Ok(1),
                }
            }
            Ok(0)
        })
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum();
    let odd_fail: usize = odds
        .par_iter()
        .map(|m| {
            let l = Lamination::from_multicurve(m, &half);
            Ok(match s.classify_discrete(&l)? {
                Classification::NotDiscrete(Some((_, v))) if !v.is_integer() => 0,
                _ => 1,
            })
        })
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum();
    Ok((
        even_fail == 0 && odd_fail == 0,
        format!(
            "alphas={} vanishing_failures={even_fail}/50 nonvanishing_failures={odd_fail}/50",
            alphas.len()
        ),
    ))
}

fn disjointness(s: &Surface, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = s.enumerate_simple_classes(4)?;
    let pairs: Vec<(CurveClass, CurveClass)> = (0..50)
        .map(|_| (pool.choose(&mut rng).unwrap().clone(), pool.choose(&mut rng).unwrap().clone()))
        .collect();
    let reports = pairs
        .par_iter()
        .map(|(x, y)| s.complement_report(x, y))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = 0;
    let mut crossings = 0;
    for r in &reports {
        let x = r.crossing_count as i64;
        crossings += r.crossing_count;
        let ok = r.euler_total == s.euler_characteristic() + x
            && r.corner_counts.iter().all(|&c| c >= 4)
            && (x == 0 || (r.face_count as i64) < x);
        if !ok {
            failures += 1;
        }
    }
    Ok((
        failures == 0,
        format!("pairs=50 total_crossings={crossings} failures={failures}"),
    ))
}

fn curv(s: &Surface) -> Result<(bool, String)> {
    let mut ok = true;
    let mut weights = Vec::new();
    for (w, want) in [("a1", "1"), ("b1", "1"), ("a2", "1"), ("b2", "1"), ("a1 b1 A1 B1", "1/2")] {
        let c = s.parse_class(w)?;
        let l = s.curv_normalize(&c)?;
        let weight = l.weight(&c);
        ok &= weight.to_string() == want && s.classify_discrete(&l)? == Classification::Discrete;
        weights.push(format!("{c}={weight}"));
    }
    Ok((ok, weights.join(" ")))
}

fn group_actions(s: &Surface, seed: u64) -> Result<(bool, String)> {
    const SAMPLES: usize = 50;
    let twists: Vec<_> = (0..humphries_count(s.genus())).map(|i| s.twist_generator(i)).collect::<Result<_>>()?;
    let characters = SignCharacter::all(s.genus());
    let mut actions: Vec<Action> = characters.iter().cloned().map(Action::Sign).collect();
    actions.extend(twists.iter().cloned().map(Action::Twist));
    let auto_fail = actions
        .par_iter()
        .enumerate()
        .map(|(i, a)| Ok(usize::from(!s.verify_algebra_automorphism(a, SAMPLES, seed + i as u64)?.holds())))
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum::<usize>();
    let combos: Vec<(usize, usize)> = (0..10).map(|k| (k % twists.len(), (3 * k + 1) % characters.len())).collect();
    let semi_fail = combos
        .par_iter()
        .map(|&(t, a)| Ok(usize::from(!s.semidirect_check(&twists[t], &characters[a], 2)?.holds())))
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum::<usize>();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = s.bounded_multicurves(4)?;
    let mut worst = 0f64;
    for j in 0..5 {
        let rho = s.random_representation(seed + j)?;
        let f = random_expression(&pool, &mut rng);
        for a in &characters {
            let lhs = evaluate_expression(&rho.central_twist(a.bits()), &f);
            let rhs = evaluate_expression(&rho, &a.act(s, &f));
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok((
        auto_fail == 0 && semi_fail == 0 && worst <= TRACE_TOLERANCE,
        format!(
            "automorphism_failures={auto_fail}/{} semidirect_failures={semi_fail}/10 central_twist_residual={worst:.2e}",
            actions.len()
        ),
    ))
}

fn twist_invariance(s: &Surface) -> Result<(bool, String)> {
    let universe = s.enumerate_classes(3)?;
    let base: Vec<Vec<u64>> = universe
        .par_iter()
        .map(|x| universe.iter().map(|y| s.intersection_number(x, y)).collect())
        .collect::<Result<_>>()?;
    let mut failures = 0;
    for i in 0..humphries_count(s.genus()) {
        let t = s.twist_generator(i)?;
        let images: Vec<CurveClass> = universe.iter().map(|c| t.apply_to_class(s, c)).collect::<Result<_>>()?;
        failures += images
            .par_iter()
            .zip(&base)
            .map(|(fx, row)| {
                let mut bad = 0usize;
                for (fy, &want) in images.iter().zip(row) {
                    if s.intersection_number(fx, fy)? != want {
                        bad += 1;
                    }
                }
                Ok(bad)
            })
            .collect::<Result<Vec<usize>>>()?
            .into_iter()
            .sum::<usize>();
    }
    let n = universe.len();
    Ok((
        failures == 0,
        format!("classes={n} pairs={} failures={failures}", n * n * humphries_count(s.genus())),
    ))
}
