//! Hook-shaped symmetric polynomials `sum_i a_i m_1^(d-i) m_i` in the basis of
//! elementary symmetric means `m_k = e_k / binom(n, k)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HyperError, Result};
use crate::poly::Poly;
use crate::rational::{binom_q, q, serde_q, Q};
use crate::unipoly::UniPoly;

/// Which basis a hook coefficient vector is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `sum a_i e_1^(d-i) e_i`
    E,
    /// `sum a_i m_1^(d-i) m_i` with `m_k = e_k / binom(n, k)`
    Etilde,
}

/// Hook-shaped symmetric polynomial, stored in the mean basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookPoly {
    n: usize,
    d: usize,
    a: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct HookJson {
    n: usize,
    d: usize,
    basis: Basis,
    #[serde(with = "serde_q::vec")]
    a: Vec<Q>,
}

impl Serialize for HookPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HookJson {
            n: self.n,
            d: self.d,
            basis: Basis::Etilde,
            a: self.a.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HookPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = HookJson::deserialize(d)?;
        if j.a.len() != j.d {
            return Err(serde::de::Error::custom(format!(
                "expected {} coefficients, found {}",
                j.d,
                j.a.len()
            )));
        }
        HookPoly::with_basis(j.n, j.basis, j.a).map_err(serde::de::Error::custom)
    }
}

impl HookPoly {
    /// `a[i - 1]` is the coefficient of `m_1^(d-i) m_i`.
    pub fn new(n: usize, a: Vec<Q>) -> Result<Self> {
        let d = a.len();
        if d == 0 {
            return Err(HyperError::DegreeTooLow("hook polynomial needs d >= 1".into()));
        }
        if d > n {
            return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
        }
        if a.iter().all(Zero::is_zero) {
            return Err(HyperError::ZeroPolynomial);
        }
        Ok(HookPoly { n, d, a })
    }

    pub fn from_ints(n: usize, a: &[i64]) -> Result<Self> {
        HookPoly::new(n, a.iter().map(|&x| q(x)).collect())
    }

    pub fn with_basis(n: usize, basis: Basis, a: Vec<Q>) -> Result<Self> {
        match basis {
            Basis::Etilde => HookPoly::new(n, a),
            Basis::E => HookPoly::from_e_basis(n, a),
        }
    }

    /// Convert `sum a_i e_1^(d-i) e_i`: since `e_k = binom(n,k) m_k`, the
    /// mean-basis coefficient is `a_i n^(d-i) binom(n,i)`.
    pub fn from_e_basis(n: usize, a: Vec<Q>) -> Result<Self> {
        let d = a.len();
        if d > n {
            return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
        }
        let conv = a
            .iter()
            .enumerate()
            .map(|(i0, ai)| {
                let i = i0 + 1;
                ai * num_traits::pow(q(n as i64), d - i) * binom_q(n, i)
            })
            .collect();
        HookPoly::new(n, conv)
    }

    /// Coefficients in the `e` basis.
    pub fn e_basis_coeffs(&self) -> Vec<Q> {
        let (n, d) = (self.n, self.d);
        self.a
            .iter()
            .enumerate()
            .map(|(i0, ai)| {
                let i = i0 + 1;
                ai / (num_traits::pow(q(n as i64), d - i) * binom_q(n, i))
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `a_1 .. a_d` (index 0 holds `a_1`).
    pub fn a(&self) -> &[Q] {
        &self.a
    }

    /// Coefficient `a_i` for `1 <= i <= d`.
    pub fn coeff(&self, i: usize) -> &Q {
        &self.a[i - 1]
    }

    /// Value at the all-ones vector: every mean equals 1 there.
    pub fn at_ones(&self) -> Q {
        self.a.iter().sum()
    }

    pub fn scale(&self, s: &Q) -> HookPoly {
        HookPoly {
            n: self.n,
            d: self.d,
            a: self.a.iter().map(|x| x * s).collect(),
        }
    }

    pub fn proportional_to(&self, other: &HookPoly) -> bool {
        self.n == other.n && crate::unipoly::proportional(&self.a, &other.a)
    }

    pub fn eval(&self, x: &SymPoint) -> Result<Q> {
        let m = elem_means(x, self.d)?;
        Ok(self.eval_means(&m))
    }

    /// Evaluate from precomputed means `m_0 .. m_d`.
    pub fn eval_means(&self, m: &[Q]) -> Q {
        let d = self.d;
        let mut pow = vec![Q::one(); d + 1];
        for k in 1..=d {
            pow[k] = &pow[k - 1] * &m[1];
        }
        (1..=d).map(|i| self.coeff(i) * &pow[d - i] * &m[i]).sum()
    }

    /// Line restriction from precomputed means of `x`.
    pub fn line_from_means(&self, m: &[Q]) -> Poly {
        let d = self.d;
        let lines: Vec<Poly> = (0..=d).map(|k| shifted_mean(m, k)).collect();
        let mut pow = vec![Poly::one()];
        for k in 1..=d {
            let next = &pow[k - 1] * &lines[1];
            pow.push(next);
        }
        let mut acc = Poly::zero();
        for i in 1..=d {
            if self.coeff(i).is_zero() {
                continue;
            }
            let term = (&pow[d - i] * &lines[i]).scale(self.coeff(i));
            acc = &acc + &term;
        }
        acc
    }
}

/// `m_k(x + t*1) = sum_j binom(k, j) m_j(x) t^(k-j)`.
fn shifted_mean(m: &[Q], k: usize) -> Poly {
    Poly::from_coeffs(
        (0..=k)
            .map(|power| {
                let j = k - power;
                binom_q(k, j) * &m[j]
            })
            .collect(),
    )
}

/// A point of `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymPoint {
    #[serde(with = "serde_q::vec")]
    pub x: Vec<Q>,
}

impl SymPoint {
    pub fn new(x: Vec<Q>) -> Self {
        SymPoint { x }
    }

    pub fn from_ints(x: &[i64]) -> Self {
        SymPoint::new(x.iter().map(|&v| q(v)).collect())
    }

    pub fn ones(n: usize) -> Self {
        SymPoint::new(vec![Q::one(); n])
    }

    /// The `i`-th coordinate vector.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut x = vec![Q::zero(); n];
        x[i] = Q::one();
        SymPoint::new(x)
    }

    /// Point whose distinct values `v_j` are repeated `mult_j` times.
    pub fn from_blocks(values: &[Q], mults: &[usize]) -> Self {
        let mut x = Vec::new();
        for (v, &k) in values.iter().zip(mults) {
            x.extend(std::iter::repeat(v.clone()).take(k));
        }
        SymPoint::new(x)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn translate(&self, c: &Q) -> SymPoint {
        SymPoint::new(self.x.iter().map(|v| v + c).collect())
    }
}

/// `(m_0 = 1, m_1(x), ..., m_d(x))`.
pub fn elem_means(x: &SymPoint, d: usize) -> Result<Vec<Q>> {
    let n = x.n();
    if d > n {
        return Err(HyperError::DegreeTooHigh(format!("d = {d} exceeds n = {n}")));
    }
    let mut e = vec![Q::zero(); d + 1];
    e[0] = Q::one();
    for (i, xi) in x.x.iter().enumerate() {
        for k in (1..=(i + 1).min(d)).rev() {
            let add = xi * &e[k - 1];
            e[k] += add;
        }
    }
    Ok(e
        .into_iter()
        .enumerate()
        .map(|(k, ek)| ek / binom_q(n, k))
        .collect())
}

/// `t -> p(x + t*1)` with ambient degree `d`.
pub fn restrict_line(p: &HookPoly, x: &SymPoint) -> Result<UniPoly> {
    check_dim(p, x)?;
    let m = elem_means(x, p.d)?;
    UniPoly::from_poly(&p.line_from_means(&m), p.d)
}

fn check_dim(p: &HookPoly, x: &SymPoint) -> Result<()> {
    if x.n() != p.n {
        return Err(HyperError::DegreeMismatch {
            expected: p.n,
            found: x.n(),
        });
    }
    Ok(())
}

/// Derivative along the all-ones direction. Uses `D m_k = k m_(k-1)`, so
/// `D(m_1^(d-i) m_i) = (d-i) m_1^(d-i-1) m_i + i m_1^(d-i) m_(i-1)`.
pub fn dir_derivative_one(p: &HookPoly) -> Result<HookPoly> {
    let d = p.d;
    if d < 2 {
        return Err(HyperError::DegreeTooLow(
            "derivative of a linear form is constant".into(),
        ));
    }
    let mut b = vec![Q::zero(); d - 1];
    for i in 1..=d {
        let ai = p.coeff(i);
        if i < d {
            b[i - 1] += ai * q((d - i) as i64);
        }
        if i >= 2 {
            b[i - 2] += ai * q(i as i64);
        } else {
            // i = 1: the m_1^d term differentiates to d m_1^(d-1), already
            // counted above as (d-1) plus this extra 1.
            b[0] += ai;
        }
    }
    HookPoly::new(p.n, b)
}

/// Element of `Q[s, t] / (s^2, t^2)`: `[1, s, t, st]` coefficients.
#[derive(Clone, Debug)]
struct Dual2([Q; 4]);

impl Dual2 {
    fn new(c0: Q, cs: Q, ct: Q) -> Self {
        Dual2([c0, cs, ct, Q::zero()])
    }

    fn constant(c: Q) -> Self {
        Dual2([c, Q::zero(), Q::zero(), Q::zero()])
    }

    fn mul(&self, o: &Dual2) -> Dual2 {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &o.0;
        Dual2([
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ])
    }

    fn add_assign(&mut self, o: &Dual2) {
        for (x, y) in self.0.iter_mut().zip(&o.0) {
            *x += y;
        }
    }

    fn scale(&self, c: &Q) -> Dual2 {
        Dual2(self.0.clone().map(|x| x * c))
    }
}

/// `Delta_{uw} p (x) = D_u p D_w p - p D_u D_w p`, from the Taylor
/// coefficients of `(s, t) -> p(x + s u + t w)`.
pub fn mixed_derivative_eval(p: &HookPoly, u: &SymPoint, w: &SymPoint, x: &SymPoint) -> Result<Q> {
    check_dim(p, u)?;
    check_dim(p, w)?;
    check_dim(p, x)?;
    let (n, d) = (p.n, p.d);
    let mut e = vec![Dual2::constant(Q::zero()); d + 1];
    e[0] = Dual2::constant(Q::one());
    for i in 0..n {
        let y = Dual2::new(x.x[i].clone(), u.x[i].clone(), w.x[i].clone());
        for k in (1..=(i + 1).min(d)).rev() {
            let add = y.mul(&e[k - 1]);
            e[k].add_assign(&add);
        }
    }
    let m: Vec<Dual2> = e
        .iter()
        .enumerate()
        .map(|(k, ek)| ek.scale(&(Q::one() / binom_q(n, k))))
        .collect();
    let mut pow = vec![Dual2::constant(Q::one())];
    for k in 1..=d {
        let next = pow[k - 1].mul(&m[1]);
        pow.push(next);
    }
    let mut val = Dual2::constant(Q::zero());
    for i in 1..=d {
        let term = pow[d - i].mul(&m[i]).scale(p.coeff(i));
        val.add_assign(&term);
    }
    let [f, fs, ft, fst] = val.0;
    Ok(fs * ft - f * fst)
}

/// Fast path for `u = w = 1`: with `r(t) = p(x + t*1)`, the value is
/// `r'(0)^2 - r(0) r''(0)`.
pub fn delta_one_one(p: &HookPoly, x: &SymPoint) -> Result<Q> {
    check_dim(p, x)?;
    let m = elem_means(x, p.d)?;
    let r = p.line_from_means(&m);
    let (c0, c1, c2) = (r.coeff(0), r.coeff(1), r.coeff(2));
    Ok(&c1 * &c1 - q(2) * c0 * c2)
}

/// Same mean-basis coefficients in `m >= n` variables.
pub fn lift_variables(p: &HookPoly, m: usize) -> Result<HookPoly> {
    if m < p.n {
        return Err(HyperError::ShrinkNotAllowed { from: p.n, to: m });
    }
    Ok(HookPoly {
        n: m,
        d: p.d,
        a: p.a.clone(),
    })
}

/// The quintic `4500 e5 - 220 e1 e4 + 7 e1^2 e3` in five variables.
pub fn quintic_example() -> HookPoly {
    HookPoly::from_e_basis(5, vec![q(0), q(0), q(7), q(-220), q(4500)]).expect("valid quintic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    /// Brute-force `e_k` by summing over all k-subsets.
    fn brute_e(x: &[Q], k: usize) -> Q {
        fn rec(x: &[Q], k: usize, start: usize, acc: Q, out: &mut Q) {
            if k == 0 {
                *out += acc;
                return;
            }
            for i in start..x.len() {
                rec(x, k - 1, i + 1, &acc * &x[i], out);
            }
        }
        let mut out = Q::zero();
        rec(x, k, 0, Q::one(), &mut out);
        out
    }

    #[test]
    fn means_examples() {
        let ones = elem_means(&SymPoint::ones(4), 4).unwrap();
        assert!(ones.iter().all(|m| m == &Q::one()));
        let m = elem_means(&SymPoint::from_ints(&[1, 0, 0, 0]), 2).unwrap();
        assert_eq!(m, vec![q(1), qr(1, 4), q(0)]);
        let m = elem_means(&SymPoint::from_ints(&[1, 2, 3]), 3).unwrap();
        assert_eq!(m, vec![q(1), q(2), qr(11, 3), q(6)]);
        assert!(elem_means(&SymPoint::from_ints(&[1, 2]), 3).is_err());
    }

    #[test]
    fn means_match_brute_force() {
        let x: Vec<Q> = vec![qr(1, 2), q(-3), qr(7, 5), q(2), q(0), qr(-1, 3)];
        let m = elem_means(&SymPoint::new(x.clone()), 6).unwrap();
        for k in 0..=6 {
            assert_eq!(m[k], brute_e(&x, k) / binom_q(6, k));
        }
    }

    #[test]
    fn restrict_examples() {
        let cube = HookPoly::from_ints(3, &[1, 0, 0]).unwrap();
        let x = SymPoint::from_ints(&[1, -2, 1]);
        assert_eq!(restrict_line(&cube, &x).unwrap(), UniPoly::from_ints(&[0, 0, 0, 1]));
        let e3 = HookPoly::from_ints(3, &[0, 0, 1]).unwrap();
        let r = restrict_line(&e3, &SymPoint::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[0, 0, 1, 1]));
        let e4 = HookPoly::from_ints(4, &[0, 0, 0, 1]).unwrap();
        let r = restrict_line(&e4, &SymPoint::from_ints(&[1, 0, 0, 0])).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[0, 0, 0, 1, 1]));
    }

    #[test]
    fn derivative_examples() {
        // D m_1^d = d m_1^(d-1)
        let p = HookPoly::from_ints(5, &[1, 0, 0, 0]).unwrap();
        assert_eq!(dir_derivative_one(&p).unwrap(), HookPoly::from_ints(5, &[4, 0, 0]).unwrap());
        // n = 2: m_2 = x1 x2, D m_2 = x1 + x2 = 2 m_1.
        let p = HookPoly::from_ints(2, &[0, 1]).unwrap();
        assert_eq!(dir_derivative_one(&p).unwrap(), HookPoly::from_ints(2, &[2]).unwrap());
        let lin = HookPoly::from_ints(3, &[1]).unwrap();
        assert!(dir_derivative_one(&lin).is_err());
        // m_2 - m_1^2 has zero derivative along 1.
        let p = HookPoly::from_ints(3, &[-1, 1]).unwrap();
        assert_eq!(dir_derivative_one(&p).unwrap_err(), HyperError::ZeroPolynomial);
    }

    #[test]
    fn derivative_contract_at_coordinate_vector() {
        let p = HookPoly::new(6, vec![qr(1, 2), q(-3), q(2), qr(5, 7), q(1)]).unwrap();
        let x = SymPoint::coordinate(6, 0);
        let lhs = restrict_line(&dir_derivative_one(&p).unwrap(), &x).unwrap().to_poly();
        let rhs = restrict_line(&p, &x).unwrap().to_poly().derivative();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_derivative_examples() {
        let ones = SymPoint::ones(3);
        let x = SymPoint::new(vec![qr(1, 2), q(-2), q(5)]);
        let lin = HookPoly::from_ints(3, &[1]).unwrap();
        assert_eq!(mixed_derivative_eval(&lin, &ones, &ones, &x).unwrap(), q(1));
        let sq = HookPoly::from_ints(3, &[1, 0]).unwrap();
        assert_eq!(mixed_derivative_eval(&sq, &ones, &ones, &ones).unwrap(), q(2));
        // In general 2 m_1(x)^2.
        let m1 = elem_means(&x, 1).unwrap()[1].clone();
        assert_eq!(mixed_derivative_eval(&sq, &ones, &ones, &x).unwrap(), q(2) * &m1 * &m1);
        let p = quintic_example();
        let x = SymPoint::new(vec![qr(1, 3), q(-1), q(2), qr(7, 4), q(0)]);
        let ones = SymPoint::ones(5);
        assert_eq!(
            mixed_derivative_eval(&p, &ones, &ones, &x).unwrap(),
            delta_one_one(&p, &x).unwrap()
        );
    }

    #[test]
    fn quintic_conversion() {
        let p = quintic_example();
        let expected = HookPoly::new(5, vec![q(0), q(0), qr(7, 3), qr(-22, 3), q(6)]).unwrap();
        assert_eq!(p, expected.scale(&q(750)));
        assert_eq!(p.e_basis_coeffs(), vec![q(0), q(0), q(7), q(-220), q(4500)]);
    }

    #[test]
    fn lifting() {
        let p = quintic_example();
        let l = lift_variables(&p, 8).unwrap();
        assert_eq!((l.n(), l.a()), (8, p.a()));
        assert_eq!(lift_variables(&p, 5).unwrap(), p);
        assert_eq!(
            lift_variables(&p, 4).unwrap_err(),
            HyperError::ShrinkNotAllowed { from: 5, to: 4 }
        );
    }

    #[test]
    fn hook_json() {
        let p = HookPoly::new(3, vec![q(1), qr(1, 2), q(0)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":3,"d":3,"basis":"etilde","a":["1/1","1/2","0/1"]}"#);
        assert_eq!(serde_json::from_str::<HookPoly>(&s).unwrap(), p);
        let e: HookPoly =
            serde_json::from_str(r#"{"n":5,"d":5,"basis":"e","a":["0","0","7","-220","4500"]}"#)
                .unwrap();
        assert_eq!(e, quintic_example());
        assert!(serde_json::from_str::<HookPoly>(r#"{"n":2,"d":3,"basis":"e","a":["1","0","0"]}"#).is_err());
    }
}
