//! Extendability of diagonal zero-sum maps.
//!
//! `T` extends to a full real-rootedness preserver iff some `f` with
//! `delta_d(f) = g := T(g0)` is real-rooted with all roots of one sign. The
//! preimages form the pencil `f_lambda = f0 + lambda t^(d-1)`.
//!
//! The nonnegative side is decided directly; the nonpositive side reduces to
//! it through `t -> -t`, which commutes with `delta_d`.
//!
//! On the nonnegative side, positive roots of `f_lambda` are the solutions of
//! `h(t) = lambda` with `h(t) = -f0(t) / t^(d-1)`, and `h' = -g / t^d`. Hence
//! a positive root `c` of `g` of multiplicity `k` is a root of multiplicity
//! `k + 1` of `f_{h(c)}`, and the root pattern only changes at the values
//! `h(c)`, which are roots of the discriminant of the pencil.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::{q, Q};
use crate::roots::{isolate_real_roots, AlgebraicReal};
use crate::unipoly::{delta_n, profile_of, UniPoly, ZeroSumPoly};

use super::{apply, g0, target_sign_test, DiagonalMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// A preimage `f` (or the parameter locating it) was found.
    Extension,
    /// Forced root multiplicities exceed the degree on every feasible side.
    MultiplicityObstruction,
    /// The exhaustive parameter sweep found no preimage.
    SweepRefutation,
    /// `T(g0)` already fails the necessary sign condition.
    NecessaryConditionFailed,
}

impl CertificateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::Extension => "Extension",
            CertificateKind::MultiplicityObstruction => "MultiplicityObstruction",
            CertificateKind::SweepRefutation => "SweepRefutation",
            CertificateKind::NecessaryConditionFailed => "NecessaryConditionFailed",
        }
    }
}

/// Which sign the roots of the preimage should have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Nonnegative,
    Nonpositive,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Nonnegative => "nonnegative",
            Side::Nonpositive => "nonpositive",
        }
    }
}

#[derive(Clone, Debug)]
pub enum SideOutcome {
    /// `g` has fewer than `d - 1` roots of this sign.
    SignInfeasible,
    /// Forced multiplicities sum past `d`.
    Obstructed(Vec<Obstruction>),
    /// Every sweep cell was tested without success.
    SweepExhausted { breakpoints: usize, samples: usize },
    Found,
}

#[derive(Clone, Debug)]
pub struct SideReport {
    pub side: Side,
    pub outcome: SideOutcome,
}

/// A root of the target that forces a root of the preimage with at least
/// `required_multiplicity`.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub root: AlgebraicReal,
    pub required_multiplicity: usize,
}

/// The pencil parameter of an extension.
#[derive(Clone, Debug)]
pub enum LambdaValue {
    Rational(Q),
    /// Isolated irrational parameter; the preimage then has an irrational
    /// `t^(d-1)` coefficient and is not returned as a rational polynomial.
    Algebraic(AlgebraicReal),
}

#[derive(Clone, Debug)]
pub struct ExtendCertificate {
    pub kind: CertificateKind,
    /// `T(g0)`.
    pub target: UniPoly,
    /// The preimage, when rational.
    pub f: Option<UniPoly>,
    pub lambda: Option<LambdaValue>,
    pub side: Option<Side>,
    /// Union of the per-side obstructions (roots carry their sign).
    pub obstruction: Option<Vec<Obstruction>>,
    pub sides: Vec<SideReport>,
}

pub fn decide_extendable(t: &DiagonalMap) -> (bool, ExtendCertificate) {
    let g = apply(t, &g0(t.n()).expect("n >= 2")).expect("matching degree");
    decide_extendable_target(&g)
}

/// Decide whether some `f` with `delta_d(f) = g` is real-rooted with all
/// roots of one sign.
pub fn decide_extendable_target(g: &ZeroSumPoly) -> (bool, ExtendCertificate) {
    let d = g.n();
    let target = g.inner().clone();
    let mut cert = ExtendCertificate {
        kind: CertificateKind::SweepRefutation,
        target: target.clone(),
        f: None,
        lambda: None,
        side: None,
        obstruction: None,
        sides: Vec::new(),
    };
    let gp = target.to_poly();
    if gp.is_zero() {
        cert.kind = CertificateKind::Extension;
        cert.f = Some(UniPoly::zero(d));
        cert.lambda = Some(LambdaValue::Rational(Q::zero()));
        return (true, cert);
    }
    if !target_sign_test(g) {
        cert.kind = CertificateKind::NecessaryConditionFailed;
        return (false, cert);
    }
    let mut swept = false;
    let mut obstructions = Vec::new();
    for side in [Side::Nonnegative, Side::Nonpositive] {
        let oriented = orient(&gp, d, side);
        match nonnegative_side(&oriented, d) {
            SideResult::Found(ext) => {
                cert.kind = CertificateKind::Extension;
                cert.side = Some(side);
                match ext {
                    Ext::Rational(lambda, f) => {
                        let f = orient(&f, d, side);
                        cert.f = Some(UniPoly::from_poly(&f, d).expect("degree <= d"));
                        cert.lambda = Some(LambdaValue::Rational(orient_lambda(lambda, d, side)));
                    }
                    Ext::Algebraic(beta) => {
                        cert.lambda = Some(LambdaValue::Algebraic(orient_alg(beta, d, side)));
                    }
                }
                cert.sides.push(SideReport {
                    side,
                    outcome: SideOutcome::Found,
                });
                return (true, cert);
            }
            SideResult::Infeasible => cert.sides.push(SideReport {
                side,
                outcome: SideOutcome::SignInfeasible,
            }),
            SideResult::Obstructed(obs) => {
                let signed: Vec<Obstruction> = obs
                    .iter()
                    .map(|o| Obstruction {
                        root: match side {
                            Side::Nonnegative => o.root.clone(),
                            Side::Nonpositive => negate_alg(&o.root),
                        },
                        required_multiplicity: o.required_multiplicity,
                    })
                    .collect();
                obstructions.extend(signed.iter().cloned());
                cert.sides.push(SideReport {
                    side,
                    outcome: SideOutcome::Obstructed(signed),
                });
            }
            SideResult::Exhausted {
                breakpoints,
                samples,
            } => {
                swept = true;
                cert.sides.push(SideReport {
                    side,
                    outcome: SideOutcome::SweepExhausted {
                        breakpoints,
                        samples,
                    },
                });
            }
        }
    }
    if !obstructions.is_empty() && !swept {
        cert.kind = CertificateKind::MultiplicityObstruction;
        cert.obstruction = Some(obstructions);
    } else {
        cert.kind = CertificateKind::SweepRefutation;
        if !obstructions.is_empty() {
            cert.obstruction = Some(obstructions);
        }
    }
    (false, cert)
}

/// `(-1)^d p(-t)` for the nonpositive side; an involution commuting with
/// `delta_d`.
fn orient(p: &Poly, d: usize, side: Side) -> Poly {
    match side {
        Side::Nonnegative => p.clone(),
        Side::Nonpositive => {
            let r = p.reflect();
            if d % 2 == 1 {
                -&r
            } else {
                r
            }
        }
    }
}

/// The `t^(d-1)` coefficient picks up `(-1)^d (-1)^(d-1) = -1`.
fn orient_lambda(lambda: Q, _d: usize, side: Side) -> Q {
    match side {
        Side::Nonnegative => lambda,
        Side::Nonpositive => -lambda,
    }
}

fn orient_alg(beta: AlgebraicReal, _d: usize, side: Side) -> AlgebraicReal {
    match side {
        Side::Nonnegative => beta,
        Side::Nonpositive => negate_alg(&beta),
    }
}

fn negate_alg(a: &AlgebraicReal) -> AlgebraicReal {
    if let Some(r) = a.exact() {
        return AlgebraicReal::from_rational(-r);
    }
    // -alpha is the unique root of p(-t) in (-hi, -lo).
    let mut roots = isolate_real_roots(&a.poly().reflect());
    let (lo, hi) = (-a.hi().clone(), -a.lo().clone());
    let idx = roots
        .iter_mut()
        .position(|r| {
            let mut probe = r.clone();
            probe.cmp_rational(&lo) == Ordering::Greater && probe.cmp_rational(&hi) == Ordering::Less
        })
        .expect("reflected root exists");
    roots.swap_remove(idx)
}

enum Ext {
    Rational(Q, Poly),
    Algebraic(AlgebraicReal),
}

enum SideResult {
    Found(Ext),
    Infeasible,
    Obstructed(Vec<Obstruction>),
    Exhausted { breakpoints: usize, samples: usize },
}

/// Positive roots of `g` with their multiplicities.
fn positive_roots(g: &Poly) -> Vec<(AlgebraicReal, usize)> {
    let mut out = Vec::new();
    for (factor, k) in g.square_free_factors() {
        for mut r in isolate_real_roots(&factor) {
            if r.sign() == Ordering::Greater {
                out.push((r, k));
            }
        }
    }
    out
}

fn nonnegative_side(g: &Poly, d: usize) -> SideResult {
    // g = c t^d: f = c t^(d-1) (t - 1).
    if g.zero_multiplicity() == d {
        let c = g.lc();
        let f = &Poly::monomial(c.clone(), d) - &Poly::monomial(c, d - 1);
        return SideResult::Found(Ext::Rational(-g.lc(), f));
    }
    let prof = profile_of(g, d).expect("nonzero");
    if g.deg0() == d && prof.n_positive + prof.n_zero + 1 < d {
        return SideResult::Infeasible;
    }
    let pos = positive_roots(g);
    let forced: Vec<Obstruction> = pos
        .iter()
        .filter(|(_, k)| *k >= 2)
        .map(|(r, k)| Obstruction {
            root: r.clone(),
            required_multiplicity: k + 1,
        })
        .collect();
    if forced.iter().map(|o| o.required_multiplicity).sum::<usize>() > d {
        return SideResult::Obstructed(forced);
    }
    Pencil::new(g, d).sweep(&pos)
}

/// The preimage pencil `f0 + lambda t^(d-1)`.
pub(crate) struct Pencil {
    f0: Poly,
    d: usize,
    /// Multiplicity of the root 0, common to every member.
    z: usize,
    lc_zero: bool,
}

impl Pencil {
    pub(crate) fn new(g: &Poly, d: usize) -> Self {
        let coeffs = (0..=d)
            .map(|j| {
                if j + 1 == d {
                    Q::zero()
                } else {
                    g.coeff(j) / q(j as i64 + 1 - d as i64)
                }
            })
            .collect();
        let z = g.zero_multiplicity();
        Pencil {
            f0: Poly::from_coeffs(coeffs),
            d,
            z,
            lc_zero: g.coeff(d).is_zero(),
        }
    }

    pub(crate) fn member(&self, lambda: &Q) -> Poly {
        &self.f0 + &Poly::monomial(lambda.clone(), self.d - 1)
    }

    /// Member with the common zero roots divided out.
    fn reduced(&self, lambda: &Q) -> Poly {
        self.member(lambda).shift_down(self.z)
    }

    /// Degree of the reduced member for `lambda != 0`.
    fn reduced_degree(&self) -> usize {
        if self.lc_zero {
            self.d - 1 - self.z
        } else {
            self.d - self.z
        }
    }

    /// Polynomial in `lambda` vanishing wherever the root pattern of the
    /// pencil can change: the discriminant of the reduced member, times
    /// `lambda` when the degree drops at 0.
    pub(crate) fn breakpoint_poly(&self) -> Poly {
        let m = self.reduced_degree();
        let mut b = if m >= 2 {
            let pts: Vec<(Q, Q)> = (1..=(2 * m - 1) as i64)
                .map(|i| {
                    let l = q(i);
                    let disc = self.reduced(&l).discriminant().expect("degree >= 1");
                    (l, disc)
                })
                .collect();
            Poly::interpolate(&pts)
        } else {
            Poly::one()
        };
        if self.lc_zero {
            b = &b * &Poly::t();
        }
        assert!(!b.is_zero(), "pencil discriminant vanishes identically");
        b
    }

    fn good(&self, lambda: &Q) -> Option<Poly> {
        let f = self.member(lambda);
        if f.is_zero() {
            return None;
        }
        let prof = profile_of(&f, self.d).expect("nonzero");
        (prof.is_real_rooted() && prof.n_negative == 0).then_some(f)
    }

    /// Positive root count (with multiplicity) of the reduced member at a
    /// rational parameter.
    fn positive_count(&self, lambda: &Q) -> usize {
        let f = self.reduced(lambda);
        profile_of(&f, f.deg0()).expect("nonzero").n_positive
    }

    /// Enclosure of `h(t) = -f0(t) / t^(d-1)` over a positive interval.
    fn h_enclosure(&self, lo: &Q, hi: &Q) -> (Q, Q) {
        let (flo, fhi) = self.f0.eval_interval(lo, hi);
        let e = self.d as u32 - 1;
        let (plo, phi) = (num_traits::pow(lo.clone(), e as usize), num_traits::pow(hi.clone(), e as usize));
        let cands = [&flo / &plo, &flo / &phi, &fhi / &plo, &fhi / &phi];
        let mn = cands.iter().min().unwrap().clone();
        let mx = cands.iter().max().unwrap().clone();
        (-mx, -mn)
    }

    /// Whether `h(c) = beta`.
    fn hits(&self, c: &mut AlgebraicReal, beta: &mut AlgebraicReal) -> bool {
        if let Some(b) = beta.exact().cloned() {
            return c.is_root_of(&self.member(&b));
        }
        if c.is_exact() {
            // h(c) is rational and beta is not.
            return false;
        }
        // h(c) is a root of the breakpoint polynomial, and beta's interval
        // isolates beta among those roots with non-root endpoints.
        while c.lo().is_zero() || c.lo().is_negative() {
            c.refine();
        }
        loop {
            let (lo, hi) = self.h_enclosure(c.lo(), c.hi());
            if &lo > beta.lo() && &hi < beta.hi() {
                return true;
            }
            if &hi < beta.lo() || &lo > beta.hi() {
                return false;
            }
            c.refine();
            if c.is_exact() {
                return false;
            }
        }
    }

    /// Positive root count at a breakpoint, from the count at a rational
    /// parameter `right` just above it (no breakpoint strictly between).
    /// Near a positive root `c` of `g` of multiplicity `k` with `h(c) = beta`,
    /// `h - beta ~ kappa (t - c)^(k+1)` with `sign(kappa) = -sign(g^(k)(c))`,
    /// so `beta + eps` has 1 nearby solution if `k + 1` is odd and 2 or 0
    /// otherwise, while `beta` itself has the root `c` with multiplicity
    /// `k + 1`.
    pub(crate) fn positive_count_at(
        &self,
        beta: &mut AlgebraicReal,
        right: &Q,
        g: &Poly,
        pos_roots: &mut [(AlgebraicReal, usize)],
    ) -> usize {
        let mut count = self.positive_count(right);
        for (c, k) in pos_roots.iter_mut() {
            if !self.hits(c, beta) {
                continue;
            }
            let k = *k;
            let nearby = if (k + 1) % 2 == 1 {
                1
            } else {
                let s = c.sign_of(&g.nth_derivative(k));
                if s == Ordering::Less {
                    2
                } else {
                    0
                }
            };
            count = count + k + 1 - nearby;
        }
        count
    }

    fn sweep(&self, pos_roots: &[(AlgebraicReal, usize)]) -> SideResult {
        let b = self.breakpoint_poly();
        let mut bps = if b.is_constant() {
            Vec::new()
        } else {
            isolate_real_roots(&b)
        };
        // Separate neighbours so that gap samples exist.
        for i in 1..bps.len() {
            let (l, r) = bps.split_at_mut(i);
            let (a, c) = (&mut l[i - 1], &mut r[0]);
            while a.hi() >= c.lo() {
                if !a.is_exact() && a.width() >= c.width() {
                    a.refine();
                } else {
                    c.refine();
                }
            }
        }
        let two = q(2);
        let mut samples: Vec<Q> = Vec::with_capacity(bps.len() + 1);
        if bps.is_empty() {
            samples.push(Q::zero());
        } else {
            samples.push(bps[0].lo() - Q::one());
            for w in bps.windows(2) {
                samples.push((w[0].hi() + w[1].lo()) / &two);
            }
            samples.push(bps[bps.len() - 1].hi() + Q::one());
        }
        for s in &samples {
            if let Some(f) = self.good(s) {
                return SideResult::Found(Ext::Rational(s.clone(), f));
            }
        }
        let mut irrational = Vec::new();
        for (i, beta) in bps.iter_mut().enumerate() {
            match beta.to_rational() {
                Some(r) => {
                    if let Some(f) = self.good(&r) {
                        return SideResult::Found(Ext::Rational(r, f));
                    }
                }
                None => irrational.push(i),
            }
        }
        if !irrational.is_empty() {
            let target = self.target();
            let mut roots: Vec<(AlgebraicReal, usize)> = pos_roots.to_vec();
            let m = self.reduced_degree();
            for i in irrational {
                let right = samples[i + 1].clone();
                let mut beta = bps[i].clone();
                if self.positive_count_at(&mut beta, &right, &target, &mut roots) == m {
                    return SideResult::Found(Ext::Algebraic(beta));
                }
            }
        }
        SideResult::Exhausted {
            breakpoints: bps.len(),
            samples: samples.len(),
        }
    }

    /// `delta_d(f0)`, i.e. the target `g`.
    fn target(&self) -> Poly {
        let u = UniPoly::from_poly(&self.f0, self.d).expect("degree <= d");
        delta_n(&u).inner().to_poly()
    }
}

/// Whether a certificate's witness really is a one-signed real-rooted
/// preimage of its target.
pub fn verify_extension(cert: &ExtendCertificate) -> bool {
    let Some(f) = &cert.f else {
        return false;
    };
    if f.is_zero() {
        return cert.target.is_zero();
    }
    let d = cert.target.n();
    if f.n() != d || delta_n(f).into_inner() != cert.target {
        return false;
    }
    let prof = profile_of(&f.to_poly(), d).expect("nonzero");
    prof.is_real_rooted() && (prof.n_positive == 0 || prof.n_negative == 0)
}

impl ExtendCertificate {
    pub fn verify(&self) -> bool {
        match self.kind {
            CertificateKind::Extension => self.f.is_none() || verify_extension(self),
            CertificateKind::MultiplicityObstruction => self
                .obstruction
                .as_ref()
                .is_some_and(|o| o.iter().map(|x| x.required_multiplicity).sum::<usize>() > self.target.n()),
            _ => true,
        }
    }
}
