//! Univariate polynomials with a declared ambient degree, real-root
//! profiles, and the diagonal operators `D` and `delta_n`.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HyperError, Result};
use crate::poly::Poly;
use crate::rational::{q, serde_q, Q};
use crate::roots::{merged_roots, AlgebraicReal};

/// Exact polynomial of degree at most `n`. A lower actual degree is a
/// degree drop: the missing roots sit at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "UniPolyJson", into = "UniPolyJson")]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct UniPolyJson {
    #[serde(with = "serde_q::vec")]
    coeffs: Vec<Q>,
    n: usize,
}

impl TryFrom<UniPolyJson> for UniPoly {
    type Error = HyperError;
    fn try_from(j: UniPolyJson) -> Result<Self> {
        if j.coeffs.len() > j.n + 1 {
            let tail_nonzero = j.coeffs[j.n + 1..].iter().any(|c| !c.is_zero());
            if tail_nonzero {
                return Err(HyperError::InvalidInput(format!(
                    "{} coefficients exceed ambient degree {}",
                    j.coeffs.len(),
                    j.n
                )));
            }
        }
        let mut coeffs = j.coeffs;
        coeffs.resize(j.n + 1, Q::zero());
        Ok(UniPoly { coeffs })
    }
}

impl From<UniPoly> for UniPolyJson {
    fn from(p: UniPoly) -> Self {
        let n = p.n();
        UniPolyJson {
            coeffs: p.coeffs,
            n,
        }
    }
}

impl UniPoly {
    /// Coefficients in ascending order; the ambient degree is `len - 1`.
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(HyperError::InvalidInput("empty coefficient list".into()));
        }
        Ok(UniPoly { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly {
            coeffs: coeffs.iter().map(|&c| q(c)).collect(),
        }
    }

    pub fn from_poly(p: &Poly, n: usize) -> Result<Self> {
        if p.deg0() > n {
            return Err(HyperError::DegreeTooHigh(format!(
                "degree {} exceeds ambient degree {n}",
                p.deg0()
            )));
        }
        let mut coeffs = p.coeffs().to_vec();
        coeffs.resize(n + 1, Q::zero());
        Ok(UniPoly { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        UniPoly {
            coeffs: vec![Q::zero(); n + 1],
        }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn actual_degree(&self) -> Option<usize> {
        self.to_poly().degree()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.to_poly().eval(x)
    }

    /// `p(-t)` with the same ambient degree.
    pub fn reflect(&self) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Whether `self = s * other` for some nonzero rational `s`.
    pub fn proportional_to(&self, other: &UniPoly) -> bool {
        proportional(&self.coeffs, &other.coeffs)
    }
}

/// Whether two coefficient vectors (zero-padded) differ by a nonzero scalar.
pub fn proportional(a: &[Q], b: &[Q]) -> bool {
    let n = a.len().max(b.len());
    let get = |v: &[Q], i: usize| v.get(i).cloned().unwrap_or_else(Q::zero);
    let Some(piv) = (0..n).find(|&i| !get(a, i).is_zero()) else {
        return false;
    };
    if get(b, piv).is_zero() {
        return false;
    }
    let s = get(b, piv) / get(a, piv);
    (0..n).all(|i| get(a, i) * &s == get(b, i))
}

/// Polynomial whose `t^(n-1)` coefficient vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ZeroSumPoly {
    inner: UniPoly,
}

impl<'de> Deserialize<'de> for ZeroSumPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let p = UniPoly::deserialize(d)?;
        ZeroSumPoly::new(p).map_err(serde::de::Error::custom)
    }
}

impl ZeroSumPoly {
    pub fn new(p: UniPoly) -> Result<Self> {
        let n = p.n();
        if n >= 1 && !p.coeffs[n - 1].is_zero() {
            return Err(HyperError::NotZeroSum);
        }
        Ok(ZeroSumPoly { inner: p })
    }

    pub fn inner(&self) -> &UniPoly {
        &self.inner
    }

    pub fn into_inner(self) -> UniPoly {
        self.inner
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }
}

/// A distinct real root and its multiplicity.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub root: AlgebraicReal,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct RootProfile {
    /// Ascending, with pairwise disjoint isolating intervals.
    pub real_roots: Vec<RealRoot>,
    pub n_positive: usize,
    pub n_negative: usize,
    pub n_zero: usize,
    pub n_nonreal: usize,
    pub degree_drop: usize,
}

impl RootProfile {
    pub fn is_real_rooted(&self) -> bool {
        self.n_nonreal == 0
    }

    /// Real roots with multiplicity, ascending.
    pub fn sorted_roots(&self) -> Vec<AlgebraicReal> {
        self.real_roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.root.clone()).take(r.multiplicity))
            .collect()
    }
}

pub fn root_profile(p: &UniPoly) -> Result<RootProfile> {
    let poly = p.to_poly();
    profile_of(&poly, p.n())
}

pub(crate) fn profile_of(poly: &Poly, n: usize) -> Result<RootProfile> {
    if poly.is_zero() {
        return Err(HyperError::ZeroPolynomial);
    }
    let deg = poly.deg0();
    let merged = merged_roots(&[poly]);
    let mut prof = RootProfile {
        real_roots: Vec::with_capacity(merged.len()),
        n_positive: 0,
        n_negative: 0,
        n_zero: 0,
        n_nonreal: 0,
        degree_drop: n.saturating_sub(deg),
    };
    let mut real = 0;
    for m in merged {
        let mut root = m.value;
        let k = m.mults[0];
        real += k;
        match root.sign() {
            Ordering::Greater => prof.n_positive += k,
            Ordering::Less => prof.n_negative += k,
            Ordering::Equal => prof.n_zero += k,
        }
        prof.real_roots.push(RealRoot {
            root,
            multiplicity: k,
        });
    }
    prof.n_nonreal = deg - real;
    Ok(prof)
}

pub fn is_real_rooted(p: &UniPoly) -> Result<bool> {
    Ok(root_profile(p)?.is_real_rooted())
}

/// At least `k` roots are `>= 0`, or at least `k` are `<= 0`.
pub fn same_sign_count(p: &UniPoly, k: usize) -> Result<bool> {
    let prof = root_profile(p)?;
    if !prof.is_real_rooted() {
        return Err(HyperError::NotRealRooted);
    }
    Ok(weak_sign_count(&prof) >= k)
}

pub(crate) fn weak_sign_count(prof: &RootProfile) -> usize {
    prof.n_positive.max(prof.n_negative) + prof.n_zero
}

pub fn discriminant(p: &UniPoly) -> Result<Q> {
    p.to_poly()
        .discriminant()
        .ok_or_else(|| HyperError::DegreeTooLow("discriminant needs degree >= 1".into()))
}

/// `D(t^k) = (n - k) t^k`.
pub fn dee(p: &UniPoly) -> UniPoly {
    let n = p.n();
    UniPoly {
        coeffs: p
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * q((n - k) as i64))
            .collect(),
    }
}

/// `delta_n(t^(n-k)) = -(k - 1) t^(n-k)`.
pub fn delta_n(p: &UniPoly) -> ZeroSumPoly {
    let n = p.n();
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c * q(1 - (n - j) as i64))
        .collect();
    ZeroSumPoly {
        inner: UniPoly { coeffs },
    }
}

/// Whether the roots of `q` (degree `m - 1`) interlace those of `p`
/// (degree `m`): `r_1 <= s_1 <= r_2 <= ... <= s_{m-1} <= r_m`.
pub fn interlaces(qp: &UniPoly, p: &UniPoly) -> Result<bool> {
    let (pp, qq) = (p.to_poly(), qp.to_poly());
    if pp.is_zero() || qq.is_zero() {
        return Err(HyperError::ZeroPolynomial);
    }
    let m = pp.deg0();
    if m == 0 || qq.deg0() + 1 != m {
        return Err(HyperError::DegreeMismatch {
            expected: m.saturating_sub(1),
            found: qq.deg0(),
        });
    }
    let merged = merged_roots(&[&pp, &qq]);
    let total_p: usize = merged.iter().map(|r| r.mults[0]).sum();
    let total_q: usize = merged.iter().map(|r| r.mults[1]).sum();
    if total_p != m || total_q != m - 1 {
        return Err(HyperError::NotRealRooted);
    }
    let expand = |which: usize| -> Vec<usize> {
        merged
            .iter()
            .enumerate()
            .flat_map(|(i, r)| std::iter::repeat(i).take(r.mults[which]))
            .collect()
    };
    let (r, s) = (expand(0), expand(1));
    Ok((0..m - 1).all(|i| r[i] <= s[i] && s[i] <= r[i + 1]))
}

/// Monic `(t - r)^k` as a `UniPoly` of ambient degree `n`.
pub fn linear_power(r: &Q, k: usize, n: usize) -> UniPoly {
    UniPoly::from_poly(&Poly::linear_power(r, k), n).expect("k <= n")
}

/// Convenience: `(t - 1)^n`.
pub fn t_minus_one_pow(n: usize) -> UniPoly {
    linear_power(&Q::one(), n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn from_roots(roots: &[Q], n: usize) -> UniPoly {
        UniPoly::from_poly(&Poly::from_roots(roots), n).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = root_profile(&UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!((p.real_roots.len(), p.n_nonreal), (0, 2));
        let p = root_profile(&UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(p.real_roots.len(), 2);
        assert!(p.real_roots.iter().all(|r| r.multiplicity == 1));
        assert_eq!(p.real_roots[0].root.exact(), Some(&q(-1)));
        let quintic = from_roots(&[q(1), q(1), q(2), q(2), q(-6)], 5);
        let p = root_profile(&quintic).unwrap();
        assert!(p.is_real_rooted());
        assert_eq!((p.n_positive, p.n_negative, p.n_zero), (4, 1, 0));
        assert_eq!(p.real_roots.len(), 3);
    }

    #[test]
    fn profile_tracks_degree_drop() {
        let p = UniPoly::new(vec![q(-1), q(0), q(1), q(0)]).unwrap();
        let prof = root_profile(&p).unwrap();
        assert_eq!(prof.degree_drop, 1);
        assert!(prof.is_real_rooted());
        assert_eq!(root_profile(&UniPoly::zero(3)).unwrap_err(), HyperError::ZeroPolynomial);
    }

    #[test]
    fn real_rootedness_examples() {
        assert!(is_real_rooted(&t_minus_one_pow(3)).unwrap());
        assert!(is_real_rooted(&UniPoly::from_ints(&[2, -3, 0, 1])).unwrap());
        assert!(!is_real_rooted(&UniPoly::from_ints(&[0, 0, 1, 0, 1])).unwrap());
    }

    #[test]
    fn same_sign_examples() {
        let quintic = from_roots(&[q(1), q(1), q(2), q(2), q(-6)], 5);
        assert!(same_sign_count(&quintic, 4).unwrap());
        assert!(same_sign_count(&UniPoly::from_ints(&[0, 0, 0, 0, 1]), 4).unwrap());
        let p = from_roots(&[q(1), q(-1), q(0)], 3);
        assert!(!same_sign_count(&p, 3).unwrap());
        assert!(same_sign_count(&p, 2).unwrap());
        assert_eq!(
            same_sign_count(&UniPoly::from_ints(&[1, 0, 1]), 1).unwrap_err(),
            HyperError::NotRealRooted
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&UniPoly::from_ints(&[3, 2, 1])).unwrap(), q(4 - 12));
        assert_eq!(discriminant(&UniPoly::from_ints(&[1, -2, 1])).unwrap(), q(0));
        assert!(discriminant(&UniPoly::from_ints(&[5, 0])).is_err());
    }

    #[test]
    fn dee_examples() {
        let n = 4;
        assert!(dee(&linear_power(&q(0), n, n)).is_zero());
        assert_eq!(dee(&UniPoly::from_ints(&[1, 0, 0, 0])), UniPoly::from_ints(&[3, 0, 0, 0]));
        let lhs = dee(&t_minus_one_pow(n));
        let rhs = linear_power(&q(1), n - 1, n).scale(&q(-(n as i64)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_n(&t_minus_one_pow(2)).into_inner(), UniPoly::from_ints(&[-1, 0, 1]));
        assert!(delta_n(&UniPoly::from_ints(&[0, 0, 1, 0])).inner().is_zero());
        assert_eq!(delta_n(&t_minus_one_pow(3)).into_inner(), UniPoly::from_ints(&[2, -3, 0, 1]));
    }

    #[test]
    fn interlacing_examples() {
        let t = UniPoly::from_ints(&[0, 1]);
        assert!(interlaces(&t, &UniPoly::from_ints(&[-1, 0, 1])).unwrap());
        let p = from_roots(&[q(1), q(2), q(3)], 3);
        assert!(interlaces(&UniPoly::from_poly(&dee(&p).to_poly(), 2).unwrap(), &p).unwrap());
        assert!(!interlaces(&from_roots(&[q(3)], 1), &from_roots(&[q(1), q(2)], 2)).unwrap());
        // Equal roots are allowed on both sides.
        let p = from_roots(&[q(1), q(1), q(2)], 3);
        assert!(interlaces(&from_roots(&[q(1), q(2)], 2), &p).unwrap());
        assert!(!interlaces(&from_roots(&[q(2), q(2)], 2), &p).unwrap());
        assert_eq!(
            interlaces(&from_roots(&[q(1)], 1), &p).unwrap_err(),
            HyperError::DegreeMismatch { expected: 2, found: 1 }
        );
    }

    #[test]
    fn zero_sum_rejects_subleading_term() {
        assert_eq!(
            ZeroSumPoly::new(UniPoly::from_ints(&[0, 0, 1, 0])).unwrap_err(),
            HyperError::NotZeroSum
        );
        assert!(ZeroSumPoly::new(UniPoly::from_ints(&[2, -3, 0, 1])).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let p = UniPoly::new(vec![q(2), q(-3), q(0), qr(1, 2)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":["2/1","-3/1","0/1","1/2"],"n":3}"#);
        let back: UniPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let short: UniPoly = serde_json::from_str(r#"{"coeffs":["1"],"n":2}"#).unwrap();
        assert_eq!(short.n(), 2);
    }

    #[test]
    fn proportionality() {
        let a = UniPoly::from_ints(&[1, 2, 3]);
        assert!(a.proportional_to(&a.scale(&qr(-3, 7))));
        assert!(!a.proportional_to(&UniPoly::from_ints(&[1, 2, 4])));
        assert!(!a.proportional_to(&UniPoly::zero(2)));
    }
}
