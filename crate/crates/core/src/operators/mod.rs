//! Diagonal maps between zero-sum polynomial spaces and the correspondence
//! with hook-shaped symmetric polynomials.
//!
//! Coordinates: a polynomial of ambient degree `n` is written
//! `g = sum_k binom(n, k) c_k t^(n-k)`, and a diagonal map acts by
//! `T(g) = sum_{k <= d} gamma_k c_k t^(d-k)`. On the zero-sum space `c_1 = 0`,
//! so `gamma_1` carries no information and is stored as 0.
//!
//! For a monic zero-sum `g` with roots `r`, `c_k = (-1)^k m_k(r)`, and the
//! associated operator of `p = sum a_i m_1^(d-i) m_i` is
//! `gamma_j = (-1)^d sum_{i >= max(j, 1)} binom(i, j) a_i`.

mod extend;

pub use extend::{
    decide_extendable, decide_extendable_target, CertificateKind, ExtendCertificate,
    LambdaValue, Obstruction, Side, SideOutcome, SideReport,
};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HyperError, Result};
use crate::poly::Poly;
use crate::rational::{binom_q, pow2_neg, q, serde_q, Q};
use crate::sympoly::HookPoly;
use crate::unipoly::{
    delta_n, profile_of, proportional, weak_sign_count, UniPoly, ZeroSumPoly,
};

/// Diagonal map `R[t]_{n,0} -> R[t]_{d,0}` in binomial-normalized
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalMap {
    n: usize,
    d: usize,
    gamma: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct DiagonalMapJson {
    n: usize,
    d: usize,
    #[serde(with = "serde_q::vec")]
    gamma: Vec<Q>,
    coords: String,
}

const COORDS: &str = "binomial-normalized";

impl Serialize for DiagonalMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagonalMapJson {
            n: self.n,
            d: self.d,
            gamma: self.gamma.clone(),
            coords: COORDS.into(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiagonalMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagonalMapJson::deserialize(d)?;
        if j.coords != COORDS {
            return Err(serde::de::Error::custom(format!(
                "unsupported coords {:?}, expected {COORDS:?}",
                j.coords
            )));
        }
        DiagonalMap::new(j.n, j.d, j.gamma).map_err(serde::de::Error::custom)
    }
}

impl DiagonalMap {
    /// `gamma` must have `d + 1` entries; `gamma_1` is reset to 0.
    pub fn new(n: usize, d: usize, mut gamma: Vec<Q>) -> Result<Self> {
        if d > n {
            return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
        }
        if gamma.len() != d + 1 {
            return Err(HyperError::InvalidInput(format!(
                "gamma needs {} entries, found {}",
                d + 1,
                gamma.len()
            )));
        }
        if d >= 1 {
            gamma[1] = Q::zero();
        }
        Ok(DiagonalMap { n, d, gamma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gamma(&self) -> &[Q] {
        &self.gamma
    }

    /// The unique diagonal map with `T(g0(n)) = target`.
    pub fn from_target(n: usize, target: &ZeroSumPoly) -> Result<Self> {
        let d = target.n();
        if n < 2 {
            return Err(HyperError::DegreeTooLow("n must be at least 2".into()));
        }
        if d > n {
            return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
        }
        let g = target.inner();
        let gamma = (0..=d)
            .map(|k| {
                if k == 1 {
                    Q::zero()
                } else {
                    g.coeff(d - k) / g0_normalized(k)
                }
            })
            .collect();
        DiagonalMap::new(n, d, gamma)
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> DiagonalMap {
        DiagonalMap {
            n: self.n,
            d: self.d,
            gamma: self.gamma.iter().map(|x| x * s).collect(),
        }
    }

    pub fn proportional_to(&self, other: &DiagonalMap) -> bool {
        self.n == other.n && self.d == other.d && proportional(&self.gamma, &other.gamma)
    }
}

/// `c_k(g0) = (-1)^k (1 - k)`: the binomial-normalized coefficients of `g0`.
fn g0_normalized(k: usize) -> Q {
    let v = q(1 - k as i64);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `(t + n - 1)(t - 1)^(n-1)`, by multiplying the factors.
pub fn g0(n: usize) -> Result<ZeroSumPoly> {
    if n < 2 {
        return Err(HyperError::DegreeTooLow("g0 needs n >= 2".into()));
    }
    let p = &Poly::from_coeffs(vec![q(n as i64 - 1), Q::one()]) * &Poly::linear_power(&Q::one(), n - 1);
    ZeroSumPoly::new(UniPoly::from_poly(&p, n)?)
}

pub fn associated_operator(p: &HookPoly) -> DiagonalMap {
    let (n, d) = (p.n(), p.d());
    let sign = if d % 2 == 0 { Q::one() } else { -Q::one() };
    let gamma = (0..=d)
        .map(|j| {
            let s: Q = (j.max(1)..=d).map(|i| binom_q(i, j) * p.coeff(i)).sum();
            &sign * s
        })
        .collect();
    DiagonalMap::new(n, d, gamma).expect("hook degree is at most n")
}

/// Inverse of `associated_operator`: back-substitution in the triangular
/// system.
pub fn operator_to_hook(t: &DiagonalMap) -> Result<HookPoly> {
    let d = t.d;
    if d == 0 {
        return Err(HyperError::DegreeTooLow("hook polynomials need d >= 1".into()));
    }
    let sign = if d % 2 == 0 { Q::one() } else { -Q::one() };
    let s: Vec<Q> = t.gamma.iter().map(|g| g * &sign).collect();
    let mut a = vec![Q::zero(); d + 1];
    for j in (2..=d).rev() {
        let tail: Q = (j + 1..=d).map(|i| binom_q(i, j) * &a[i]).sum();
        a[j] = &s[j] - tail;
    }
    let tail: Q = (2..=d).map(|i| a[i].clone()).sum();
    a[1] = &s[0] - tail;
    HookPoly::new(t.n, a.split_off(1))
}

/// `T(g)` in binomial-normalized coordinates.
pub fn apply(t: &DiagonalMap, g: &ZeroSumPoly) -> Result<ZeroSumPoly> {
    let n = t.n;
    if g.n() != n {
        return Err(HyperError::DegreeMismatch {
            expected: n,
            found: g.n(),
        });
    }
    let gi = g.inner();
    let coeffs = (0..=t.d)
        .map(|j| {
            let k = t.d - j;
            let c = gi.coeff(n - k) / binom_q(n, k);
            &t.gamma[k] * c
        })
        .collect();
    ZeroSumPoly::new(UniPoly::new(coeffs)?)
}

/// Diagonal map on all of `R[t]_n`, acting on monomials:
/// `T(t^(n-k)) = gamma'_k t^(d-k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FullDiagonalMap {
    n: usize,
    d: usize,
    gamma: Vec<Q>,
}

impl FullDiagonalMap {
    pub fn new(n: usize, d: usize, gamma: Vec<Q>) -> Result<Self> {
        if d > n {
            return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
        }
        if gamma.len() != d + 1 {
            return Err(HyperError::InvalidInput(format!(
                "gamma needs {} entries, found {}",
                d + 1,
                gamma.len()
            )));
        }
        Ok(FullDiagonalMap { n, d, gamma })
    }

    pub fn identity(n: usize) -> Self {
        FullDiagonalMap {
            n,
            d: n,
            gamma: vec![Q::one(); n + 1],
        }
    }

    /// The map with `(t - 1)^n -> f`, where `f` has ambient degree `d`.
    pub fn with_image_of_power(n: usize, f: &UniPoly) -> Result<Self> {
        let d = f.n();
        let gamma = (0..=d)
            .map(|k| {
                let v = f.coeff(d - k) / binom_q(n, k);
                if k % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        FullDiagonalMap::new(n, d, gamma)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gamma(&self) -> &[Q] {
        &self.gamma
    }

    pub fn apply(&self, p: &UniPoly) -> Result<UniPoly> {
        if p.n() != self.n {
            return Err(HyperError::DegreeMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let coeffs = (0..=self.d)
            .map(|j| {
                let k = self.d - j;
                &self.gamma[k] * p.coeff(self.n - k)
            })
            .collect();
        UniPoly::new(coeffs)
    }

    /// Restriction to the zero-sum subspace.
    pub fn restrict(&self) -> DiagonalMap {
        let gamma = (0..=self.d)
            .map(|k| &self.gamma[k] * binom_q(self.n, k))
            .collect();
        DiagonalMap::new(self.n, self.d, gamma).expect("validated dimensions")
    }
}

/// Real-rootedness preserver test: `T((t-1)^n)` must be real-rooted with all
/// roots of one sign (zeros allowed). The zero map passes trivially.
pub fn polya_schur_test(t: &FullDiagonalMap) -> bool {
    let image = t
        .apply(&crate::unipoly::t_minus_one_pow(t.n))
        .expect("matching degree");
    let poly = image.to_poly();
    if poly.is_zero() {
        return true;
    }
    let prof = profile_of(&poly, t.d).expect("nonzero");
    prof.is_real_rooted() && (prof.n_positive == 0 || prof.n_negative == 0)
}

/// Sign condition on `T(g0)`: real-rooted with at least `d - 1` roots of one
/// (weak) sign. Necessary for `T` to preserve real-rootedness; sufficient for
/// `d <= 4`; for `d >= 5` its sufficiency is only conjectural.
pub fn necessary_sign_test(t: &DiagonalMap) -> bool {
    let g = apply(t, &g0(t.n).expect("n >= 2")).expect("matching degree");
    target_sign_test(&g)
}

pub(crate) fn target_sign_test(g: &ZeroSumPoly) -> bool {
    let poly = g.inner().to_poly();
    if poly.is_zero() {
        return true;
    }
    let d = g.n();
    let prof = profile_of(&poly, d).expect("nonzero");
    prof.is_real_rooted() && weak_sign_count(&prof) + 1 >= d
}

/// How much the sign test certifies at degree `d`.
pub fn sign_test_strength(d: usize) -> &'static str {
    if d <= 4 {
        "sufficient"
    } else {
        "conjecturally sufficient"
    }
}

/// Image of a normalized root vector under the root-simplex map.
#[derive(Clone, Debug)]
pub struct PhiImage {
    /// Normalized midpoints; sums to exactly 1.
    pub point: Vec<Q>,
    /// Enclosures of the exact normalized coordinates.
    pub enclosures: Vec<(Q, Q)>,
}

/// Default enclosure width for `phi`.
pub fn phi_default_width() -> Q {
    pow2_neg(40)
}

/// Apply `delta_d` to `prod (t - r_i)`, keep the `d - 1` largest roots and
/// normalize them to sum 1.
pub fn phi(r: &[Q], width: &Q) -> Result<PhiImage> {
    let d = r.len();
    if d < 2 {
        return Err(HyperError::NotInSimplex("need at least two coordinates".into()));
    }
    if r.iter().any(Signed::is_negative) {
        return Err(HyperError::NotInSimplex("negative coordinate".into()));
    }
    if r.windows(2).any(|w| w[0] < w[1]) {
        return Err(HyperError::NotInSimplex("coordinates must be weakly decreasing".into()));
    }
    if r.iter().sum::<Q>() != Q::one() {
        return Err(HyperError::NotInSimplex("coordinates must sum to 1".into()));
    }
    if r[0].is_one() {
        let mut point = vec![Q::zero(); d - 1];
        point[0] = Q::one();
        let enclosures = point.iter().map(|x| (x.clone(), x.clone())).collect();
        return Ok(PhiImage { point, enclosures });
    }
    let p = UniPoly::from_poly(&Poly::from_roots(r), d)?;
    let g = delta_n(&p);
    let prof = profile_of(&g.inner().to_poly(), d)?;
    if !prof.is_real_rooted() {
        return Err(HyperError::NotRealRooted);
    }
    let mut roots = prof.sorted_roots();
    roots.reverse();
    roots.truncate(d - 1);
    let mut lo = Vec::with_capacity(d - 1);
    let mut hi = Vec::with_capacity(d - 1);
    let mut mid = Vec::with_capacity(d - 1);
    for mut root in roots {
        root.refine_to(width);
        let l = crate::rational::max_q(root.lo(), &Q::zero()).clone();
        lo.push(l);
        hi.push(root.hi().clone());
        mid.push(root.midpoint().max(Q::zero()));
    }
    let total: Q = mid.iter().sum();
    if total.is_zero() {
        return Err(HyperError::NotInSimplex("image roots are all zero".into()));
    }
    let (slo, shi): (Q, Q) = (lo.iter().sum(), hi.iter().sum());
    let point = mid.iter().map(|m| m / &total).collect();
    let enclosures = lo
        .iter()
        .zip(&hi)
        .map(|(l, h)| {
            let el = if shi.is_zero() { Q::zero() } else { l / &shi };
            let eh = if slo.is_positive() { h / &slo } else { Q::one() };
            (el, eh.min(Q::one()))
        })
        .collect();
    Ok(PhiImage { point, enclosures })
}
