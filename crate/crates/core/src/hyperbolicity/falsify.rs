//! Counterexample search for symmetric hyperbolicity.
//!
//! A degree-`d` symmetric polynomial is hyperbolic as soon as every line
//! `x + t*1` through a point with at most `d - 1` distinct entries is
//! real-rooted, so the search walks multiplicity patterns of `n` and, for
//! each, a compact slice of the distinct values. Floating point only ranks
//! points; a witness is reported only after an exact Sturm check.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Status, Verdict, Witness};
use crate::error::{HyperError, Result};
use crate::numeric::realness_score;
use crate::rational::{binomial, from_f64, q, qr, snap, to_f64, Q};
use crate::sympoly::{restrict_line, HookPoly, SymPoint};
use crate::unipoly::root_profile;

/// Resolution and effort of [`falsify_hyperbolicity`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchBudget {
    /// Grid intervals per free axis of the slice.
    pub grid: usize,
    pub refine_rounds: usize,
    /// Best points kept for local refinement per pattern.
    pub refine_keep: usize,
    /// Seeded uniform samples per pattern, on top of the grid.
    pub random_samples: usize,
    /// Cap on grid points per pattern; the per-axis resolution is lowered
    /// to fit.
    pub max_points: usize,
    /// Cap on exact verifications per pattern.
    pub max_verify: usize,
    /// Relative imaginary part above which a point is verified exactly.
    pub tol: f64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            grid: 64,
            refine_rounds: 3,
            refine_keep: 8,
            random_samples: 256,
            max_points: 250_000,
            max_verify: 24,
            tol: 1e-6,
            seed: 0,
        }
    }
}

impl SearchBudget {
    pub fn with_seed(seed: u64) -> Self {
        SearchBudget {
            seed,
            ..SearchBudget::default()
        }
    }
}

/// Partitions of `n` into exactly `parts` positive parts, non-increasing.
pub fn partitions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n < parts {
            return;
        }
        for first in (1..=max.min(n - parts + 1)).rev() {
            cur.push(first);
            rec(n - first, parts - 1, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(n, parts, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Multiplicity patterns searched for a degree-`d` polynomial in `n`
/// variables: between 2 and `max(2, d - 1)` distinct entries.
///
/// Two distinct entries are always searched: for `d = 2` the distinct-entry
/// bound of one would only see multiples of `1`.
pub fn search_patterns(n: usize, d: usize) -> Vec<Vec<usize>> {
    let top = (d.saturating_sub(1)).max(2).min(n);
    (2..=top).flat_map(|m| partitions(n, m)).collect()
}

/// `sum_{i >= max(j, 1)} binom(i, j) a_i`: the line through a zero-sum
/// point `x` is `sum_j A_j m_j(x) t^(d-j)`.
fn line_weights(p: &HookPoly) -> Vec<Q> {
    let d = p.d();
    (0..=d)
        .map(|j| {
            (j.max(1)..=d)
                .map(|i| Q::from_integer(binomial(i, j)) * p.coeff(i))
                .sum()
        })
        .collect()
}

/// Floating-point line coefficients (ascending) through the zero-sum point
/// with the given block values.
struct LineEval {
    n: usize,
    d: usize,
    weights: Vec<f64>,
    binom_n: Vec<f64>,
}

impl LineEval {
    fn new(p: &HookPoly) -> Self {
        let (n, d) = (p.n(), p.d());
        LineEval {
            n,
            d,
            weights: line_weights(p).iter().map(to_f64).collect(),
            binom_n: (0..=d).map(|k| to_f64(&Q::from_integer(binomial(n, k)))).collect(),
        }
    }

    fn coeffs(&self, values: &[f64], mults: &[usize]) -> Vec<f64> {
        let d = self.d;
        let mut e = vec![0.0; d + 1];
        e[0] = 1.0;
        let mut used = 0;
        for (v, &k) in values.iter().zip(mults) {
            for _ in 0..k {
                used += 1;
                for j in (1..=used.min(d)).rev() {
                    e[j] += v * e[j - 1];
                }
            }
        }
        debug_assert_eq!(used, self.n);
        let mut c = vec![0.0; d + 1];
        for j in 0..=d {
            if j == 1 {
                continue;
            }
            c[d - j] = self.weights[j] * e[j] / self.binom_n[j];
        }
        c
    }

    fn score(&self, values: &[f64], mults: &[usize], tol: f64) -> f64 {
        realness_score(&self.coeffs(values, mults), tol)
    }
}

/// A point of one face of the slice: the first `m - 1` block values have
/// max-norm one and the face coordinate equals `+1`; the last block value
/// makes the point zero-sum.
#[derive(Clone, Debug)]
struct SlicePoint {
    face: usize,
    free: Vec<f64>,
    /// Exact free coordinates, when known.
    exact: Option<Vec<Q>>,
}

impl SlicePoint {
    fn values_f64(&self, mults: &[usize]) -> Vec<f64> {
        let m = mults.len();
        let mut v = Vec::with_capacity(m);
        let mut it = self.free.iter();
        for j in 0..m - 1 {
            v.push(if j == self.face { 1.0 } else { *it.next().unwrap() });
        }
        let s: f64 = v.iter().zip(mults).map(|(x, &k)| x * k as f64).sum();
        v.push(-s / mults[m - 1] as f64);
        v
    }

    fn values_exact(&self, mults: &[usize], snapped: bool) -> Vec<Q> {
        let m = mults.len();
        let free: Vec<Q> = match (&self.exact, snapped) {
            (Some(e), _) => e.clone(),
            (None, true) => self
                .free
                .iter()
                .map(|&x| snap(x, 1 << 20).or_else(|| from_f64(x)).unwrap_or_else(Q::zero))
                .collect(),
            (None, false) => self.free.iter().map(|&x| from_f64(x).unwrap_or_else(Q::zero)).collect(),
        };
        let mut v = Vec::with_capacity(m);
        let mut it = free.into_iter();
        for j in 0..m - 1 {
            v.push(if j == self.face { Q::one() } else { it.next().unwrap() });
        }
        let s: Q = v.iter().zip(mults).map(|(x, &k)| x * q(k as i64)).sum();
        v.push(-s / q(mults[m - 1] as i64));
        v
    }
}

/// Grid resolution per free axis after applying the point cap.
fn axis_resolution(faces: usize, dim: usize, budget: &SearchBudget) -> usize {
    let mut g = budget.grid.max(1);
    if dim > 0 {
        while g > 1 && faces.saturating_mul((g + 1).saturating_pow(dim as u32)) > budget.max_points {
            g -= 1;
        }
    }
    g
}

fn refine_offsets(dim: usize) -> usize {
    if dim <= 3 {
        5usize.pow(dim as u32) - 1
    } else {
        128
    }
}

/// Floating-point line evaluations a full search spends when it finds no
/// candidate, for matching the budget of other searches.
pub fn nominal_evaluations(n: usize, d: usize, budget: &SearchBudget) -> usize {
    if d <= 1 || n < 2 {
        return 0;
    }
    search_patterns(n, d)
        .iter()
        .map(|mults| {
            let m = mults.len();
            let (dim, faces) = (m - 2, m - 1);
            let g = axis_resolution(faces, dim, budget);
            let grid = faces * (g + 1).pow(dim as u32);
            if dim == 0 {
                grid
            } else {
                grid + budget.random_samples
                    + budget.refine_rounds * budget.refine_keep * refine_offsets(dim)
            }
        })
        .sum()
}

/// Exact check of one point; returns the witness when its line has a
/// non-real root.
pub(crate) fn verify_point(p: &HookPoly, x: SymPoint) -> Option<Witness> {
    let line = restrict_line(p, &x).ok()?;
    let profile = root_profile(&line).ok()?;
    (profile.n_nonreal > 0).then_some(Witness { point: x, profile })
}

struct PatternResult {
    witness: Option<Witness>,
    evaluated: usize,
    verified: usize,
}

fn search_pattern(
    p: &HookPoly,
    eval: &LineEval,
    mults: &[usize],
    budget: &SearchBudget,
    index: usize,
) -> PatternResult {
    let m = mults.len();
    let dim = m - 2;
    let faces = m - 1;
    let mut res = PatternResult {
        witness: None,
        evaluated: 0,
        verified: 0,
    };
    let g = axis_resolution(faces, dim, budget);
    let mut scored: Vec<(f64, SlicePoint)> = Vec::new();
    let mut candidates: Vec<(f64, SlicePoint)> = Vec::new();
    let consider = |pt: SlicePoint,
                    res: &mut PatternResult,
                    scored: &mut Vec<(f64, SlicePoint)>,
                    candidates: &mut Vec<(f64, SlicePoint)>| {
        let s = eval.score(&pt.values_f64(mults), mults, budget.tol);
        res.evaluated += 1;
        if s < 0.0 {
            candidates.push((s, pt.clone()));
        }
        scored.push((s, pt));
    };

    // Grid over each face.
    let axis = |k: usize| -> (f64, Q) {
        let exact = q(-1) + qr(2 * k as i64, g as i64);
        (to_f64(&exact), exact)
    };
    for face in 0..faces {
        let total = (g + 1).pow(dim as u32);
        for idx in 0..total {
            let mut rem = idx;
            let mut free = Vec::with_capacity(dim);
            let mut exact = Vec::with_capacity(dim);
            for _ in 0..dim {
                let (f, e) = axis(rem % (g + 1));
                rem /= g + 1;
                free.push(f);
                exact.push(e);
            }
            consider(
                SlicePoint {
                    face,
                    free,
                    exact: Some(exact),
                },
                &mut res,
                &mut scored,
                &mut candidates,
            );
        }
    }
    // Seeded uniform samples with dyadic coordinates.
    if dim > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        for _ in 0..budget.random_samples {
            let face = rng.gen_range(0..faces);
            let exact: Vec<Q> = (0..dim)
                .map(|_| qr(rng.gen_range(-(1i64 << 20)..=(1i64 << 20)), 1 << 20))
                .collect();
            let free = exact.iter().map(to_f64).collect();
            consider(
                SlicePoint {
                    face,
                    free,
                    exact: Some(exact),
                },
                &mut res,
                &mut scored,
                &mut candidates,
            );
        }
    }
    let verify_batch = |cands: &mut Vec<(f64, SlicePoint)>, res: &mut PatternResult| -> Option<Witness> {
        cands.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, pt) in cands.drain(..) {
            if res.verified >= budget.max_verify {
                return None;
            }
            res.verified += 1;
            let values = pt.values_exact(mults, true);
            if let Some(w) = verify_point(p, SymPoint::from_blocks(&values, mults)) {
                return Some(w);
            }
            if pt.exact.is_none() {
                let values = pt.values_exact(mults, false);
                if let Some(w) = verify_point(p, SymPoint::from_blocks(&values, mults)) {
                    return Some(w);
                }
            }
        }
        None
    };
    if let Some(w) = verify_batch(&mut candidates, &mut res) {
        res.witness = Some(w);
        return res;
    }
    if dim == 0 {
        return res;
    }

    // Local refinement around the lowest-scoring points.
    let mut step = 2.0 / g as f64;
    for round in 0..budget.refine_rounds {
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        scored.truncate(budget.refine_keep);
        let seeds: Vec<SlicePoint> = scored.iter().map(|(_, pt)| pt.clone()).collect();
        step /= 4.0;
        let offsets: Vec<Vec<f64>> = if dim <= 3 {
            let per = 5usize;
            (0..per.pow(dim as u32))
                .map(|mut idx| {
                    (0..dim)
                        .map(|_| {
                            let k = (idx % per) as f64 - 2.0;
                            idx /= per;
                            k * step
                        })
                        .collect()
                })
                .collect()
        } else {
            let mut rng =
                ChaCha8Rng::seed_from_u64(budget.seed ^ ((index as u64) << 32) ^ round as u64);
            (0..128)
                .map(|_| (0..dim).map(|_| rng.gen_range(-2.0..=2.0) * step).collect())
                .collect()
        };
        for base in &seeds {
            for off in &offsets {
                if off.iter().all(|o| *o == 0.0) {
                    continue;
                }
                let free: Vec<f64> = base
                    .free
                    .iter()
                    .zip(off)
                    .map(|(x, o)| (x + o).clamp(-1.0, 1.0))
                    .collect();
                consider(
                    SlicePoint {
                        face: base.face,
                        free,
                        exact: None,
                    },
                    &mut res,
                    &mut scored,
                    &mut candidates,
                );
            }
        }
        if let Some(w) = verify_batch(&mut candidates, &mut res) {
            res.witness = Some(w);
            return res;
        }
    }
    res
}

/// Searches points with few distinct entries for a line with non-real
/// roots. Never returns `Hyperbolic`.
pub fn falsify_hyperbolicity(p: &HookPoly, budget: &SearchBudget) -> Result<Verdict> {
    if p.at_ones().is_zero() {
        return Err(HyperError::DegenerateDirection);
    }
    let (n, d) = (p.n(), p.d());
    let patterns = if d <= 1 || n < 2 { Vec::new() } else { search_patterns(n, d) };
    let eval = LineEval::new(p);
    let found = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<PatternResult>> = patterns
        .par_iter()
        .enumerate()
        .map(|(i, mults)| {
            if i > found.load(AtomicOrdering::Relaxed) {
                return None;
            }
            let r = search_pattern(p, &eval, mults, budget, i);
            if r.witness.is_some() {
                found.fetch_min(i, AtomicOrdering::Relaxed);
            }
            Some(r)
        })
        .collect();
    let mut evaluated = 0usize;
    let mut verified = 0usize;
    for (i, r) in results.into_iter().enumerate() {
        let Some(r) = r else { continue };
        if let Some(w) = r.witness {
            let mut detail = BTreeMap::new();
            detail.insert("distinct_entries".into(), q(patterns[i].len() as i64));
            detail.insert("nonreal_roots".into(), q(w.profile.n_nonreal as i64));
            return Ok(Verdict {
                status: Status::NotHyperbolic,
                witness: Some(w),
                detail,
            });
        }
        evaluated += r.evaluated;
        verified += r.verified;
    }
    let mut detail = BTreeMap::new();
    detail.insert("patterns".into(), q(patterns.len() as i64));
    detail.insert("points_evaluated".into(), q(evaluated as i64));
    detail.insert("exact_checks".into(), q(verified as i64));
    Ok(Verdict {
        status: Status::NoCounterexampleFound,
        witness: None,
        detail,
    })
}

/// Baseline without the distinct-entry reduction: `points` seeded uniform
/// dyadic points of `[-1, 1]^n`, ranked in floating point, the
/// `max_verify` most suspicious checked exactly.
pub fn sample_falsifier(p: &HookPoly, points: usize, max_verify: usize, seed: u64) -> Result<Verdict> {
    if p.at_ones().is_zero() {
        return Err(HyperError::DegenerateDirection);
    }
    let n = p.n();
    let eval = LineEval::new(p);
    let ones = vec![1usize; n];
    const CHUNK: usize = 1024;
    let chunks = points.div_ceil(CHUNK);
    let mut scored: Vec<(f64, Vec<Q>)> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0xA24B_AED4_963E_E407));
            let len = CHUNK.min(points - c * CHUNK);
            let mut out = Vec::new();
            for _ in 0..len {
                let x: Vec<Q> = (0..n)
                    .map(|_| qr(rng.gen_range(-(1i64 << 20)..=(1i64 << 20)), 1 << 20))
                    .collect();
                let xf: Vec<f64> = x.iter().map(to_f64).collect();
                let mean = xf.iter().sum::<f64>() / n as f64;
                let centered: Vec<f64> = xf.iter().map(|v| v - mean).collect();
                let s = eval.score(&centered, &ones, 1e-6);
                if s < 0.0 {
                    out.push((s, x));
                }
            }
            out
        })
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut checks = 0usize;
    for (_, x) in scored.into_iter().take(max_verify) {
        checks += 1;
        if let Some(w) = verify_point(p, SymPoint::new(x)) {
            let mut detail = BTreeMap::new();
            detail.insert("nonreal_roots".into(), q(w.profile.n_nonreal as i64));
            return Ok(Verdict {
                status: Status::NotHyperbolic,
                witness: Some(w),
                detail,
            });
        }
    }
    let mut detail = BTreeMap::new();
    detail.insert("points_evaluated".into(), q(points as i64));
    detail.insert("exact_checks".into(), q(checks as i64));
    Ok(Verdict {
        status: Status::NoCounterexampleFound,
        witness: None,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::quintic_example;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5, 2), vec![vec![4, 1], vec![3, 2]]);
        assert_eq!(partitions(6, 3).len(), 3);
        assert_eq!(search_patterns(5, 5).len(), 2 + 2 + 1);
        assert_eq!(search_patterns(4, 2), vec![vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn line_weights_match_exact_restriction() {
        let p = quintic_example();
        let vals = [q(2), qr(-1, 3)];
        let mults = [2usize, 3];
        // Make the point zero-sum.
        let last = -(q(2) * &vals[0]) / q(3);
        let vals = [vals[0].clone(), last];
        let x = SymPoint::from_blocks(&vals, &mults);
        let exact = restrict_line(&p, &x).unwrap();
        let fl = LineEval::new(&p).coeffs(&[2.0, to_f64(&vals[1])], &mults);
        for (a, b) in exact.coeffs().iter().zip(&fl) {
            let a = to_f64(a);
            assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn finds_cubic_witness() {
        let p = HookPoly::from_ints(3, &[1, 0, 1]).unwrap();
        let v = falsify_hyperbolicity(&p, &SearchBudget::default()).unwrap();
        assert_eq!(v.status, Status::NotHyperbolic);
        let w = v.witness.unwrap();
        let mut distinct = w.point.x.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 2);
        assert!(verify_point(&p, w.point).is_some());
    }

    #[test]
    fn e3_has_no_counterexample() {
        for n in 3..=6 {
            let p = HookPoly::from_ints(n, &[0, 0, 1]).unwrap();
            let budget = SearchBudget::default();
            let v = falsify_hyperbolicity(&p, &budget).unwrap();
            assert_eq!(v.status, Status::NoCounterexampleFound, "n = {n}");
            assert_eq!(v.detail["points_evaluated"], q(nominal_evaluations(n, 3, &budget) as i64));
        }
    }

    #[test]
    fn quadratic_needs_two_entries() {
        // m2 - 2 m1^2 has non-real roots on the line through (1, 0).
        let p = HookPoly::new(2, vec![q(-2), q(1)]).unwrap();
        let v = falsify_hyperbolicity(&p, &SearchBudget::default()).unwrap();
        assert_eq!(v.status, Status::NotHyperbolic);
    }

    #[test]
    fn sampler_finds_cubic_witness() {
        let p = HookPoly::from_ints(4, &[1, 0, 1]).unwrap();
        let v = sample_falsifier(&p, 2000, 16, 7).unwrap();
        assert_eq!(v.status, Status::NotHyperbolic);
    }
}
