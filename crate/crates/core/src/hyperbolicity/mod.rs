//! Symmetric hyperbolicity with respect to the all-ones direction: exact
//! tests for cubics and hook quartics, cone membership, counterexample
//! search, and evidence gathering for hook polynomials built from targets.

mod falsify;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use falsify::{
    falsify_hyperbolicity, nominal_evaluations, partitions, sample_falsifier, search_patterns,
    SearchBudget,
};

use crate::error::{HyperError, Result};
use crate::operators::{
    associated_operator, decide_extendable, operator_to_hook, CertificateKind, DiagonalMap,
};
use crate::poly::Poly;
use crate::rational::{binom_q, q, qr, Q};
use crate::roots::{isolate_real_roots, AlgebraicReal, Sturm};
use crate::sympoly::{delta_one_one, elem_means, restrict_line, HookPoly, SymPoint};
use crate::unipoly::{interlaces, root_profile, same_sign_count, weak_sign_count, RootProfile, UniPoly, ZeroSumPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Hyperbolic,
    NotHyperbolic,
    NoCounterexampleFound,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Hyperbolic => "Hyperbolic",
            Status::NotHyperbolic => "NotHyperbolic",
            Status::NoCounterexampleFound => "NoCounterexampleFound",
        }
    }
}

/// A point whose line `x + t*1` has a non-real root.
#[derive(Clone, Debug)]
pub struct Witness {
    pub point: SymPoint,
    pub profile: RootProfile,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Exact values backing the decision.
    pub detail: BTreeMap<String, Q>,
}

impl Verdict {
    /// Re-checks the witness of a negative verdict exactly.
    pub fn witness_holds(&self, p: &HookPoly) -> bool {
        match &self.witness {
            Some(w) => restrict_line(p, &w.point)
                .and_then(|l| root_profile(&l))
                .map(|prof| prof.n_nonreal > 0)
                .unwrap_or(false),
            None => false,
        }
    }
}

fn flag(b: bool) -> Q {
    if b {
        Q::one()
    } else {
        Q::zero()
    }
}

/// `p = a m_1^3 + b m_1 m_2 + c m_3` is hyperbolic iff
/// `(a + b + c)(27 a c^2 - b^3 - 9 b^2 c) <= 0`.
pub fn decide_cubic(a: &Q, b: &Q, c: &Q, n: usize) -> Result<Verdict> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(HyperError::ZeroPolynomial);
    }
    if n < 3 {
        return Err(HyperError::DegreeTooHigh(format!("a cubic needs n >= 3, got {n}")));
    }
    let p = HookPoly::new(n, vec![a.clone(), b.clone(), c.clone()])?;
    let sum = a + b + c;
    if sum.is_zero() {
        return Err(HyperError::DegenerateDirection);
    }
    let factor = q(27) * a * c * c - b * b * b - q(9) * b * b * c;
    let product = &sum * &factor;
    let hyperbolic = !product.is_positive();

    let u = SymPoint::coordinate(n, 0);
    let line = restrict_line(&p, &u)?;
    let prof = root_profile(&line)?;
    debug_assert_eq!(prof.is_real_rooted(), hyperbolic);

    let mut detail = BTreeMap::new();
    detail.insert("sum".into(), sum);
    detail.insert("cubic_factor".into(), factor);
    detail.insert("product".into(), product);
    detail.insert("coordinate_line_real_rooted".into(), flag(prof.is_real_rooted()));
    Ok(if hyperbolic {
        Verdict {
            status: Status::Hyperbolic,
            witness: None,
            detail,
        }
    } else {
        Verdict {
            status: Status::NotHyperbolic,
            witness: Some(Witness {
                point: u,
                profile: prof,
            }),
            detail,
        }
    })
}

/// A hook quartic is hyperbolic iff `q(t - 1/n)` is real-rooted with at
/// least three roots of one sign, where `q` is its restriction to the line
/// through a coordinate vector.
pub fn decide_quartic_hook(p: &HookPoly) -> Result<Verdict> {
    if p.d() != 4 {
        return Err(HyperError::WrongDegree {
            expected: 4,
            found: p.d(),
        });
    }
    if p.at_ones().is_zero() {
        return Err(HyperError::DegenerateDirection);
    }
    let n = p.n();
    let u = SymPoint::coordinate(n, 0);
    let line = restrict_line(p, &u)?;
    let shifted = line.to_poly().shift(&-qr(1, n as i64));
    let s = UniPoly::from_poly(&shifted, 4)?;
    let prof = root_profile(&s)?;
    let real = prof.is_real_rooted();
    let same = real && same_sign_count(&s, 3)?;

    let mut detail = BTreeMap::new();
    detail.insert("shifted_real_rooted".into(), flag(real));
    detail.insert("shifted_positive_roots".into(), q(prof.n_positive as i64));
    detail.insert("shifted_negative_roots".into(), q(prof.n_negative as i64));
    detail.insert("shifted_zero_roots".into(), q(prof.n_zero as i64));
    if real && same {
        return Ok(Verdict {
            status: Status::Hyperbolic,
            witness: None,
            detail,
        });
    }
    if !real {
        let lp = root_profile(&line)?;
        return Ok(Verdict {
            status: Status::NotHyperbolic,
            witness: Some(Witness {
                point: u,
                profile: lp,
            }),
            detail,
        });
    }
    // The criterion fails through the sign count; locate a witness.
    for grid in [64usize, 256, 1024] {
        let budget = SearchBudget {
            grid,
            refine_rounds: 6,
            refine_keep: 16,
            max_verify: 64,
            ..SearchBudget::default()
        };
        let v = falsify_hyperbolicity(p, &budget)?;
        if v.status == Status::NotHyperbolic {
            let mut v = v;
            v.detail.extend(detail);
            return Ok(v);
        }
    }
    Err(HyperError::SearchExhausted(
        "criterion rules out hyperbolicity but no witness point was located".into(),
    ))
}

/// `x` lies in the hyperbolicity cone when `p(x + t*1)` has no root with
/// `t > 0`.
pub fn cone_member(p: &HookPoly, x: &SymPoint) -> Result<bool> {
    let line = restrict_line(p, x)?.to_poly();
    if line.is_zero() {
        return Ok(false);
    }
    Ok(Sturm::new(&line).count(Some(&Q::zero()), None) == 0)
}

/// Outcome of sampling `Delta_{1,1} p` at random rational points.
#[derive(Clone, Debug)]
pub struct DeltaSample {
    pub samples: usize,
    pub negative: usize,
    pub min: Option<Q>,
    /// First point with a negative value.
    pub negative_point: Option<SymPoint>,
}

/// Random rational point with numerators in `[-bound, bound]` and
/// denominators in `1..=den`.
pub(crate) fn random_point(rng: &mut ChaCha8Rng, n: usize, bound: i64, den: i64) -> SymPoint {
    SymPoint::new(
        (0..n)
            .map(|_| qr(rng.gen_range(-bound..=bound), rng.gen_range(1..=den)))
            .collect(),
    )
}

/// Evaluates `Delta_{1,1} p` exactly at `samples` seeded random points.
pub fn sample_delta_one_one(p: &HookPoly, samples: usize, seed: u64) -> Result<DeltaSample> {
    const CHUNK: usize = 512;
    let n = p.n();
    let chunks = samples.div_ceil(CHUNK);
    let per_chunk: Vec<Result<(usize, Option<Q>, Option<SymPoint>)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let len = CHUNK.min(samples - c * CHUNK);
            let mut negative = 0;
            let mut min: Option<Q> = None;
            let mut first = None;
            for _ in 0..len {
                let x = random_point(&mut rng, n, 100, 16);
                let v = delta_one_one(p, &x)?;
                if v.is_negative() {
                    negative += 1;
                    if first.is_none() {
                        first = Some(x);
                    }
                }
                if min.as_ref().map_or(true, |m| v < *m) {
                    min = Some(v);
                }
            }
            Ok((negative, min, first))
        })
        .collect();
    let mut out = DeltaSample {
        samples,
        negative: 0,
        min: None,
        negative_point: None,
    };
    for r in per_chunk {
        let (neg, min, first) = r?;
        out.negative += neg;
        if let Some(m) = min {
            if out.min.as_ref().map_or(true, |cur| m < *cur) {
                out.min = Some(m);
            }
        }
        if out.negative_point.is_none() {
            out.negative_point = first;
        }
    }
    Ok(out)
}

/// Evidence that the hook polynomial built from a target is hyperbolic.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub n: usize,
    pub d: usize,
    pub target: ZeroSumPoly,
    pub map: DiagonalMap,
    pub hook: HookPoly,
    /// Exact verdict when `d <= 4`.
    pub exact: Option<Verdict>,
    pub extendable: bool,
    pub extend_kind: CertificateKind,
    pub falsifier: Verdict,
    pub delta: DeltaSample,
}

/// Builds the unique `T` with `T(g0) = q` and its hook polynomial `p`, then
/// searches for a counterexample to the hyperbolicity of `p` and samples
/// `Delta_{1,1} p`.
pub fn conjecture_case(
    target: &ZeroSumPoly,
    n: usize,
    budget: &SearchBudget,
    delta_samples: usize,
) -> Result<ConjectureReport> {
    let d = target.n();
    let g = target.inner();
    if g.actual_degree() != Some(d) {
        return Err(HyperError::HypothesisViolated(format!(
            "target must have degree exactly {d}"
        )));
    }
    let prof = root_profile(g)?;
    if !prof.is_real_rooted() {
        return Err(HyperError::HypothesisViolated("target is not real-rooted".into()));
    }
    if weak_sign_count(&prof) + 1 < d {
        return Err(HyperError::HypothesisViolated(format!(
            "target needs {} roots of one sign",
            d - 1
        )));
    }
    let map = DiagonalMap::from_target(n, target)?;
    let hook = operator_to_hook(&map)?;
    debug_assert!(associated_operator(&hook).proportional_to(&map));
    let exact = match d {
        3 => Some(decide_cubic(hook.coeff(1), hook.coeff(2), hook.coeff(3), n)?),
        4 => Some(decide_quartic_hook(&hook)?),
        _ => None,
    };
    let (extendable, cert) = decide_extendable(&map);
    let falsifier = falsify_hyperbolicity(&hook, budget)?;
    let delta = sample_delta_one_one(&hook, delta_samples, budget.seed)?;
    Ok(ConjectureReport {
        n,
        d,
        target: target.clone(),
        map,
        hook,
        exact,
        extendable,
        extend_kind: cert.kind,
        falsifier,
        delta,
    })
}

#[derive(Clone, Debug)]
pub struct EkReport {
    pub k: usize,
    pub n: usize,
    pub trials: usize,
    pub violations: usize,
    /// First line base point that failed either check.
    pub first_violation: Option<SymPoint>,
}

impl EkReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// `t -> e_j(x + t*1) = sum_i binom(n - i, j - i) e_i(x) t^(j - i)`.
fn shifted_e(e: &[Q], n: usize, j: usize) -> Poly {
    let mut c = vec![Q::zero(); j + 1];
    for i in 0..=j {
        c[j - i] = binom_q(n - i, j - i) * &e[i];
    }
    Poly::from_coeffs(c)
}

/// Checks on random lines that `e_k + l e_(k-1)` is real-rooted and
/// interlaced by `e_(k-1)`, where `l` is the linear form with
/// coefficients `ell`.
pub fn ek_plus_linear_check(k: usize, n: usize, ell: &[Q], trials: usize, seed: u64) -> Result<EkReport> {
    if k == 0 || k > n {
        return Err(HyperError::InvalidInput(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    if ell.len() != n {
        return Err(HyperError::DegreeMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    let ell_ones: Q = ell.iter().sum();
    if ell_ones.is_negative() {
        return Err(HyperError::HypothesisViolated("l(1) must be nonnegative".into()));
    }
    let results: Vec<Result<Option<SymPoint>>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0xD1B5_4A32_D192_ED03));
            let x = random_point(&mut rng, n, 20, 7);
            let ex = elem_means(&x, k)?
                .into_iter()
                .enumerate()
                .map(|(j, m)| m * binom_q(n, j))
                .collect::<Vec<_>>();
            let ek = shifted_e(&ex, n, k);
            let ek1 = shifted_e(&ex, n, k - 1);
            let lx: Q = ell.iter().zip(&x.x).map(|(a, b)| a * b).sum();
            let l_line = Poly::from_coeffs(vec![lx, ell_ones.clone()]);
            let target = &ek + &(&l_line * &ek1);
            let tp = UniPoly::from_poly(&target, k)?;
            let ok_real = root_profile(&tp)?.is_real_rooted();
            let ok_inter = if k == 1 || !ok_real {
                ok_real
            } else {
                interlaces(&UniPoly::from_poly(&ek1, k - 1)?, &tp)?
            };
            Ok((!(ok_real && ok_inter)).then_some(x))
        })
        .collect();
    let mut report = EkReport {
        k,
        n,
        trials,
        violations: 0,
        first_violation: None,
    };
    for r in results {
        if let Some(x) = r? {
            report.violations += 1;
            if report.first_violation.is_none() {
                report.first_violation = Some(x);
            }
        }
    }
    Ok(report)
}

/// Reduction of a hyperbolic cubic to `c1 m_3 + c2 m_1 m_2` by the map
/// `T_t(x) = x - t e_1(x) 1`.
#[derive(Clone, Debug)]
pub struct CubicNormalForm {
    pub n: usize,
    /// The shift `t`; `T_t` sends a coordinate vector onto `p = 0`.
    pub shift: AlgebraicReal,
    /// Whether the shift is the smallest root, so the image lies on the
    /// boundary of the hyperbolicity cone.
    pub boundary: bool,
    pub c1: Q,
    /// `c2 = b - n (b + 3c) t`, when `t` is rational.
    pub c2: Option<Q>,
    /// Enclosure of `c2`.
    pub c2_lo: Q,
    pub c2_hi: Q,
    pub c2_sign: Ordering,
    /// `p o T_t` in the mean basis, when `t` is rational.
    pub transformed: Option<HookPoly>,
}

/// Coefficient of `m_1^3` in `p o T_t`, as a polynomial in `t`.
pub fn cubic_shift_polynomial(a: &Q, b: &Q, c: &Q, n: usize) -> Poly {
    let nq = q(n as i64);
    let lin = Poly::from_coeffs(vec![Q::one(), -nq.clone()]);
    let quad = Poly::from_coeffs(vec![Q::zero(), q(-2) * &nq, &nq * &nq]);
    let cub = Poly::from_coeffs(vec![Q::zero(), Q::zero(), q(3) * &nq * &nq, -(&nq * &nq * &nq)]);
    let t1 = lin.pow(3).scale(a);
    let t2 = (&lin * &quad).scale(b);
    let t3 = cub.scale(c);
    &(&t1 + &t2) + &t3
}

pub fn cubic_normal_form(a: &Q, b: &Q, c: &Q, n: usize) -> Result<CubicNormalForm> {
    let v = decide_cubic(a, b, c, n)?;
    if v.status != Status::Hyperbolic {
        return Err(HyperError::NotHyperbolic);
    }
    let c3 = cubic_shift_polynomial(a, b, c, n);
    let nq = q(n as i64);
    let c2poly = Poly::from_coeffs(vec![b.clone(), -(&nq * (b + q(3) * c))]);
    let roots = isolate_real_roots(&c3);
    let mut order: Vec<(AlgebraicReal, bool)> = Vec::new();
    if a.is_zero() {
        let mut zero = AlgebraicReal::from_rational(Q::zero());
        let smallest = roots
            .first()
            .map_or(true, |r| r.clone().cmp_alg(&mut zero) != Ordering::Less);
        order.push((zero, smallest));
    }
    for (i, r) in roots.into_iter().enumerate() {
        order.push((r, i == 0));
    }
    let singular = qr(1, n as i64);
    let mut saw_singular = false;
    for (mut t, boundary) in order {
        if t.cmp_rational(&singular) == Ordering::Equal {
            saw_singular = true;
            continue;
        }
        let s2 = t.sign_of(&c2poly);
        let ok = c.is_zero() || s2 == Ordering::Equal || s2 == c.cmp(&Q::zero());
        if !ok {
            continue;
        }
        let (c2, transformed) = match t.exact() {
            Some(tv) => {
                let c2 = c2poly.eval(tv);
                let h = HookPoly::new(n, vec![Q::zero(), c2.clone(), c.clone()])?;
                (Some(c2), Some(h))
            }
            None => (None, None),
        };
        t.refine_to(&crate::rational::pow2_neg(40));
        let (lo, hi) = c2poly.eval_interval(t.lo(), t.hi());
        return Ok(CubicNormalForm {
            n,
            shift: t,
            boundary,
            c1: c.clone(),
            c2,
            c2_lo: lo,
            c2_hi: hi,
            c2_sign: s2,
            transformed,
        });
    }
    if saw_singular {
        Err(HyperError::NonInvertibleTransform)
    } else {
        Err(HyperError::HypothesisViolated("no admissible shift".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::quintic_example;

    #[test]
    fn cubic_examples() {
        let v = decide_cubic(&q(1), &q(0), &q(0), 3).unwrap();
        assert_eq!(v.status, Status::Hyperbolic);
        assert_eq!(v.detail["product"], q(0));
        let v = decide_cubic(&q(0), &q(1), &q(0), 3).unwrap();
        assert_eq!(v.status, Status::Hyperbolic);
        assert_eq!(v.detail["product"], q(-1));
        let v = decide_cubic(&q(1), &q(0), &q(1), 3).unwrap();
        assert_eq!(v.status, Status::NotHyperbolic);
        assert_eq!(v.detail["product"], q(54));
        let p = HookPoly::from_ints(3, &[1, 0, 1]).unwrap();
        assert!(v.witness_holds(&p));
        assert!(matches!(
            decide_cubic(&q(0), &q(0), &q(0), 3),
            Err(HyperError::ZeroPolynomial)
        ));
    }

    #[test]
    fn quartic_examples() {
        let p = HookPoly::from_ints(5, &[1, 0, 0, 0]).unwrap();
        assert_eq!(decide_quartic_hook(&p).unwrap().status, Status::Hyperbolic);
        // e_4 with n = 4 is m_4.
        let p = HookPoly::from_ints(4, &[0, 0, 0, 1]).unwrap();
        let v = decide_quartic_hook(&p).unwrap();
        assert_eq!(v.status, Status::Hyperbolic);
        assert_eq!(v.detail["shifted_positive_roots"], q(3));
        assert_eq!(v.detail["shifted_negative_roots"], q(1));
        let cubic = HookPoly::from_ints(4, &[1, 0, 1]).unwrap();
        assert!(matches!(
            decide_quartic_hook(&cubic),
            Err(HyperError::WrongDegree { expected: 4, found: 3 })
        ));
    }

    #[test]
    fn quartic_non_hyperbolic_has_witness() {
        // m_1^4 + m_4 fails at a coordinate vector for n = 4.
        let p = HookPoly::from_ints(4, &[1, 0, 0, 1]).unwrap();
        let v = decide_quartic_hook(&p).unwrap();
        assert_eq!(v.status, Status::NotHyperbolic);
        assert!(v.witness_holds(&p));
    }

    #[test]
    fn cone_examples() {
        let e2 = HookPoly::from_ints(2, &[0, 1]).unwrap();
        assert!(cone_member(&e2, &SymPoint::from_ints(&[1, 2])).unwrap());
        assert!(!cone_member(&e2, &SymPoint::from_ints(&[1, -1])).unwrap());
        assert!(cone_member(&e2, &SymPoint::ones(2)).unwrap());
        let e1 = HookPoly::from_ints(3, &[1]).unwrap();
        assert!(!cone_member(&e1, &SymPoint::from_ints(&[-1, -1, -1])).unwrap());
        assert!(cone_member(&quintic_example(), &SymPoint::ones(5)).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let nf = cubic_normal_form(&q(0), &q(1), &q(0), 3).unwrap();
        assert!(nf.c1.is_zero());
        assert!(nf.shift.is_exact());
        // Already reduced: identity transform.
        let nf = cubic_normal_form(&q(0), &q(2), &q(1), 4).unwrap();
        assert_eq!(nf.shift.exact(), Some(&q(0)));
        assert_eq!(nf.c2, Some(q(2)));
        assert_eq!(nf.c1, q(1));
        assert!(matches!(
            cubic_normal_form(&q(1), &q(0), &q(1), 3),
            Err(HyperError::NotHyperbolic)
        ));
        assert!(matches!(
            cubic_normal_form(&q(1), &q(0), &q(0), 3),
            Err(HyperError::NonInvertibleTransform)
        ));
    }

    #[test]
    fn normal_form_zeroes_the_cube_term() {
        let (a, b, c, n) = (q(-1), q(2), q(1), 4);
        assert_eq!(decide_cubic(&a, &b, &c, n).unwrap().status, Status::Hyperbolic);
        let nf = cubic_normal_form(&a, &b, &c, n).unwrap();
        assert!(nf.shift.is_root_of(&cubic_shift_polynomial(&a, &b, &c, n)));
        assert_ne!(nf.c2_sign, Ordering::Less);
    }

    #[test]
    fn shift_polynomial_matches_composition() {
        // Evaluate p(T_t x) directly at a sample point and rational t.
        let (a, b, c, n) = (q(2), q(-1), q(3), 4);
        let p = HookPoly::new(n, vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let x = SymPoint::from_ints(&[3, -1, 2, 5]);
        let t = qr(2, 7);
        let e1: Q = x.x.iter().sum();
        let tx = x.translate(&-(&t * &e1));
        let lhs = p.eval(&tx).unwrap();
        let m = elem_means(&x, 3).unwrap();
        let c3 = cubic_shift_polynomial(&a, &b, &c, n).eval(&t);
        let c2 = &b - q(n as i64) * (&b + q(3) * &c) * &t;
        let rhs = c3 * &m[1] * &m[1] * &m[1] + c2 * &m[1] * &m[2] + &c * &m[3];
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ek_examples() {
        let r = ek_plus_linear_check(1, 3, &[q(1), q(0), q(0)], 20, 1).unwrap();
        assert!(r.passed());
        let r = ek_plus_linear_check(3, 3, &[q(1), q(1), q(1)], 200, 2).unwrap();
        assert!(r.passed());
        let r = ek_plus_linear_check(2, 4, &vec![q(0); 4], 200, 3).unwrap();
        assert!(r.passed());
        assert!(matches!(
            ek_plus_linear_check(2, 3, &[q(-1), q(0), q(0)], 1, 0),
            Err(HyperError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn conjecture_quintic() {
        let g = Poly::from_roots(&[q(1), q(1), q(2), q(2), q(-6)]);
        let target = ZeroSumPoly::new(UniPoly::from_poly(&g, 5).unwrap()).unwrap();
        let r = conjecture_case(&target, 5, &SearchBudget::default(), 500).unwrap();
        assert!(r.hook.proportional_to(&quintic_example()));
        assert_eq!(r.falsifier.status, Status::NoCounterexampleFound);
        assert!(!r.extendable);
        assert_eq!(r.delta.negative, 0);
    }

    #[test]
    fn conjecture_rejects_bad_targets() {
        // Two roots of each sign: fewer than three of one sign.
        let g = Poly::from_roots(&[q(1), q(-1), q(2), q(-2)]);
        let target = ZeroSumPoly::new(UniPoly::from_poly(&g, 4).unwrap()).unwrap();
        assert!(matches!(
            conjecture_case(&target, 5, &SearchBudget::default(), 10),
            Err(HyperError::HypothesisViolated(_))
        ));
    }
}
