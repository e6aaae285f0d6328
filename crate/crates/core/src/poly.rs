//! Dense univariate polynomials over the rationals.
//!
//! `Poly` is the trimmed working representation used by every algorithm;
//! `UniPoly` (in `unipoly`) adds the declared ambient degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{q, Q};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})t")?,
                _ => write!(f, "({a})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(a: Q) -> Self {
        Poly::from_coeffs(vec![a])
    }

    /// `a * t^k`
    pub fn monomial(a: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = a;
        Poly::from_coeffs(c)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Poly::monomial(Q::one(), 1)
    }

    pub fn from_coeffs(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::from_coeffs(c.iter().map(|&x| q(x)).collect())
    }

    /// Monic product of `(t - r)` over the given roots.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::from_coeffs(vec![-r.clone(), Q::one()])
        })
    }

    /// `(t - r)^k`
    pub fn linear_power(r: &Q, k: usize) -> Self {
        Poly::from_coeffs(vec![-r.clone(), Q::one()]).pow(k)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + crate::rational::to_f64(a);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * q(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, s: &Q) -> Self {
        Poly::from_coeffs(self.c.iter().map(|a| a * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Q::one() / self.lc()))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(a t + b)`
    pub fn compose_affine(&self, a: &Q, b: &Q) -> Self {
        let lin = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(t + c)`
    pub fn shift(&self, c: &Q) -> Self {
        self.compose_affine(&Q::one(), c)
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Number of trailing zero coefficients, i.e. multiplicity of the root 0.
    pub fn zero_multiplicity(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }

    /// Divide by `t^k`; the caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.zero_multiplicity() >= k || self.is_zero());
        Poly::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg0();
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = Q::one() / d.lc();
        let mut r = self.c.clone();
        let mut quo = vec![Q::zero(); self.c.len() - dd];
        for i in (0..quo.len()).rev() {
            let coef = &r[i + dd] * &inv;
            if !coef.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[i + j] -= &coef * dj;
                }
            }
            quo[i] = coef;
        }
        r.truncate(dd);
        (Poly::from_coeffs(quo), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (quo, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        quo
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        if self.c.len() < d.c.len() {
            return self.clone();
        }
        let delta = self.deg0() - d.deg0();
        let factor = num_traits::pow(d.lc(), delta + 1);
        self.scale(&factor).rem(d)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r.primitive_rational();
        }
        x.monic()
    }

    /// Rescale so that coefficients are coprime integers with positive
    /// leading coefficient. Keeps gcd computations from blowing up.
    pub fn primitive_rational(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let ints = self.integer_coeffs();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Poly::from_coeffs(
            ints.into_iter()
                .map(|x| Q::from_integer(x * &sign / &g))
                .collect(),
        )
    }

    /// Coefficients scaled by the lcm of the denominators.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = self
            .c
            .iter()
            .fold(BigInt::one(), |l, a| l.lcm(a.denom()));
        self.c
            .iter()
            .map(|a| (a * Q::from_integer(l.clone())).to_integer())
            .collect()
    }

    /// Square-free part (monic).
    pub fn square_free_part(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free factorization: monic pairwise coprime square-free
    /// factors `(f_i, i)` with `self = lc * prod f_i^i`. Trivial factors are
    /// omitted.
    pub fn square_free_factors(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Poly::gcd(&f, &fp);
        let mut b = f.exact_div(&a0);
        let c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = Poly::gcd(&b, &d);
            let b_next = b.exact_div(&a);
            let c_next = d.exact_div(&a);
            d = &c_next - &b_next.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Q) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::from_coeffs(vec![-r.clone(), Q::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (quo, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return k;
            }
            p = quo;
            k += 1;
        }
    }

    /// Resultant by the subresultant polynomial remainder sequence.
    pub fn resultant(a: &Poly, b: &Poly) -> Q {
        if a.is_zero() || b.is_zero() {
            return Q::zero();
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut s = Q::one();
        if a.deg0() < b.deg0() {
            if a.deg0() % 2 == 1 && b.deg0() % 2 == 1 {
                s = -s;
            }
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = Q::one();
        let mut h = Q::one();
        loop {
            let (da, db) = (a.deg0(), b.deg0());
            if db == 0 {
                let lb = b.lc();
                // h^(1 - da) * lb^da
                let hpow = if da >= 1 {
                    Q::one() / num_traits::pow(h.clone(), da - 1)
                } else {
                    h.clone()
                };
                return s * hpow * num_traits::pow(lb, da);
            }
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return Q::zero();
            }
            let div = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = r.scale(&(Q::one() / div));
            g = a.lc();
            // h = h^(1 - delta) * g^delta
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
            };
        }
    }

    /// `(-1)^(m(m-1)/2) Res(p, p') / lc(p)` for degree `m >= 1`.
    pub fn discriminant(&self) -> Option<Q> {
        let m = self.degree()?;
        if m == 0 {
            return None;
        }
        let res = Poly::resultant(self, &self.derivative());
        let sign = if (m * (m - 1) / 2) % 2 == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        Some(sign * res / self.lc())
    }

    /// Newton interpolation through distinct nodes.
    pub fn interpolate(points: &[(Q, Q)]) -> Poly {
        let n = points.len();
        let xs: Vec<Q> = points.iter().map(|p| p.0.clone()).collect();
        let mut dd: Vec<Q> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Poly::from_coeffs(vec![-xs[i].clone(), Q::one()]))
                + &Poly::constant(dd[i].clone());
        }
        acc
    }

    /// Cauchy bound: every complex root has modulus strictly below it.
    pub fn root_bound(&self) -> Q {
        let lc = self.lc().abs();
        let m = self.c[..self.deg0()]
            .iter()
            .map(|a| a.abs() / &lc)
            .max()
            .unwrap_or_else(Q::zero);
        m + Q::one()
    }

    /// Enclosure of the range of `self` over `[lo, hi]` by interval Horner.
    pub fn eval_interval(&self, lo: &Q, hi: &Q) -> (Q, Q) {
        let mut acc = (Q::zero(), Q::zero());
        for a in self.c.iter().rev() {
            let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let mn = prods.iter().min().unwrap().clone();
            let mx = prods.iter().max().unwrap().clone();
            acc = (mn + a, mx + a);
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    /// Sylvester-matrix determinant by Gaussian elimination: an
    /// independent oracle for the subresultant resultant.
    fn sylvester_resultant(a: &Poly, b: &Poly) -> Q {
        let (m, n) = (a.deg0(), b.deg0());
        let size = m + n;
        if size == 0 {
            return Q::one();
        }
        let mut mat = vec![vec![Q::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        let mut det = Q::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return Q::zero();
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            let p = mat[col][col].clone();
            det *= &p;
            for r in col + 1..size {
                let f = &mat[r][col] / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..size {
                    let v = &f * &mat[col][c];
                    mat[r][c] -= v;
                }
            }
        }
        det
    }

    fn lcg(seed: &mut u64) -> i64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*seed >> 33) % 11) as i64 - 5
    }

    #[test]
    fn resultant_matches_sylvester() {
        let mut seed = 7u64;
        for _ in 0..300 {
            let da = (lcg(&mut seed).unsigned_abs() % 6) as usize + 1;
            let db = (lcg(&mut seed).unsigned_abs() % 6) as usize;
            let mut ca: Vec<i64> = (0..=da).map(|_| lcg(&mut seed)).collect();
            let mut cb: Vec<i64> = (0..=db).map(|_| lcg(&mut seed)).collect();
            *ca.last_mut().unwrap() = 3;
            *cb.last_mut().unwrap() = -2;
            let (a, b) = (Poly::from_ints(&ca), Poly::from_ints(&cb));
            assert_eq!(Poly::resultant(&a, &b), sylvester_resultant(&a, &b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn resultant_detects_common_factor() {
        let a = Poly::from_roots(&[q(1), q(2), qr(1, 3)]);
        let b = Poly::from_roots(&[q(2), q(-5)]);
        assert!(Poly::resultant(&a, &b).is_zero());
    }

    #[test]
    fn discriminant_textbook() {
        // t^2 + b t + c
        let (b, c) = (qr(3, 2), qr(-7, 5));
        let p = Poly::from_coeffs(vec![c.clone(), b.clone(), q(1)]);
        assert_eq!(p.discriminant().unwrap(), &b * &b - q(4) * &c);
        // t^3 + p t + q
        let (pp, qq) = (qr(-5, 3), qr(2, 7));
        let p = Poly::from_coeffs(vec![qq.clone(), pp.clone(), q(0), q(1)]);
        let expect = q(-4) * &pp * &pp * &pp - q(27) * &qq * &qq;
        assert_eq!(p.discriminant().unwrap(), expect);
        assert!(Poly::linear_power(&q(1), 2).discriminant().unwrap().is_zero());
        assert_eq!(Poly::constant(q(3)).discriminant(), None);
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_roots(&[q(1), q(1), q(2), qr(-1, 2)]);
        let b = Poly::from_roots(&[q(1), q(3)]);
        let (quo, r) = a.div_rem(&b);
        assert_eq!(&(&quo * &b) + &r, a);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_roots(&[q(1)]));
        assert_eq!(a.root_multiplicity(&q(1)), 2);
        assert_eq!(a.root_multiplicity(&q(5)), 0);
    }

    #[test]
    fn yun_factorization() {
        let p = (&Poly::from_roots(&[q(1), q(1), q(1), q(2), q(2), q(-3)])).scale(&q(5));
        let f = p.square_free_factors();
        assert_eq!(
            f,
            vec![
                (Poly::from_roots(&[q(-3)]), 1),
                (Poly::from_roots(&[q(2)]), 2),
                (Poly::from_roots(&[q(1)]), 3)
            ]
        );
        assert_eq!(p.square_free_part(), Poly::from_roots(&[q(1), q(2), q(-3)]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::from_coeffs(vec![qr(1, 3), q(-2), q(0), qr(5, 7)]);
        let pts: Vec<(Q, Q)> = (0..4).map(|i| (q(i), p.eval(&q(i)))).collect();
        assert_eq!(Poly::interpolate(&pts), p);
    }

    #[test]
    fn compose_and_reflect() {
        let p = Poly::from_roots(&[q(1), q(2)]);
        assert_eq!(p.shift(&q(1)), Poly::from_roots(&[q(0), q(1)]));
        assert_eq!(p.reflect(), Poly::from_roots(&[q(-1), q(-2)]));
        assert_eq!(p.compose_affine(&q(2), &q(0)), Poly::from_roots(&[qr(1, 2), q(1)]).scale(&q(4)));
    }

    #[test]
    fn interval_enclosure_contains_values() {
        let p = Poly::from_ints(&[1, -3, 0, 2]);
        let (lo, hi) = p.eval_interval(&qr(-1, 2), &qr(3, 4));
        for k in 0..=10 {
            let x = qr(-1, 2) + qr(5, 4) * qr(k, 10);
            let v = p.eval(&x);
            assert!(lo <= v && v <= hi);
        }
    }
}
