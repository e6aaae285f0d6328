//! Exact real-root machinery: Sturm sequences, isolation by bisection, and
//! real algebraic numbers given by an isolating interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::{to_f64, Q};

fn sign(x: &Q) -> Ordering {
    x.cmp(&Q::zero())
}

/// Sturm chain of a polynomial. Meaningful counts require a square-free
/// input.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Self {
        let mut seq = vec![p.clone()];
        if p.is_zero() {
            return Sturm { seq };
        }
        let mut prev = p.clone();
        let mut cur = p.derivative();
        while !cur.is_zero() {
            let r = prev.rem(&cur);
            seq.push(cur.clone());
            prev = cur;
            cur = (-&r).primitive_rational_keep_sign();
        }
        Sturm { seq }
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn var_at(&self, x: &Q) -> usize {
        Self::variations(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    fn var_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| sign(&p.lc())))
    }

    fn var_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = sign(&p.lc());
            if p.deg0() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Number of distinct roots in `(lo, hi]`; `None` means infinite.
    pub fn count(&self, lo: Option<&Q>, hi: Option<&Q>) -> usize {
        let vl = lo.map_or_else(|| self.var_neg_inf(), |x| self.var_at(x));
        let vh = hi.map_or_else(|| self.var_pos_inf(), |x| self.var_at(x));
        vl.saturating_sub(vh)
    }
}

impl Poly {
    /// Like `primitive_rational` but preserving the sign, as Sturm chains
    /// need.
    fn primitive_rational_keep_sign(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let p = self.primitive_rational();
        if self.lc().is_negative() {
            -&p
        } else {
            p
        }
    }
}

/// A real algebraic number: a root of the square-free polynomial `poly`
/// located either exactly (`lo == hi`) or strictly inside `(lo, hi)` with
/// `poly(lo) * poly(hi) < 0`.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: Poly,
    lo: Q,
    hi: Q,
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.clone().cmp_alg(&mut other.clone()) == Ordering::Equal
    }
}

impl AlgebraicReal {
    pub fn from_rational(r: Q) -> Self {
        AlgebraicReal {
            poly: Poly::from_coeffs(vec![-r.clone(), Q::one()]),
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The value, if it is already pinned to a rational point.
    pub fn exact(&self) -> Option<&Q> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / Q::from_integer(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    /// One bisection step.
    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = self.midpoint();
        let fm = self.poly.eval(&m);
        if fm.is_zero() {
            self.lo = m.clone();
            self.hi = m;
            return;
        }
        let flo = self.poly.eval(&self.lo);
        if sign(&flo) == sign(&fm) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&mut self, width: &Q) {
        while !self.is_exact() && &self.width() > width {
            self.refine();
        }
    }

    /// Compare with a rational.
    pub fn cmp_rational(&mut self, r: &Q) -> Ordering {
        loop {
            if self.is_exact() {
                return self.lo.cmp(r);
            }
            if r <= &self.lo {
                return Ordering::Greater;
            }
            if r >= &self.hi {
                return Ordering::Less;
            }
            if self.poly.eval(r).is_zero() {
                return Ordering::Equal;
            }
            self.refine();
        }
    }

    pub fn sign(&mut self) -> Ordering {
        self.cmp_rational(&Q::zero())
    }

    /// Whether `f` vanishes at this number.
    pub fn is_root_of(&self, f: &Poly) -> bool {
        if f.is_zero() {
            return true;
        }
        if let Some(r) = self.exact() {
            return f.eval(r).is_zero();
        }
        let g = Poly::gcd(f, &self.poly);
        if g.is_constant() {
            return false;
        }
        // Roots of g inside (lo, hi) are roots of `poly`, hence this one.
        Sturm::new(&g).count(Some(&self.lo), Some(&self.hi)) > 0
    }

    /// Sign of `f` evaluated at this number.
    pub fn sign_of(&mut self, f: &Poly) -> Ordering {
        if let Some(r) = self.exact() {
            return sign(&f.eval(r));
        }
        if self.is_root_of(f) {
            return Ordering::Equal;
        }
        loop {
            let (lo, hi) = f.eval_interval(&self.lo, &self.hi);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            self.refine();
            if let Some(r) = self.exact() {
                return sign(&f.eval(r));
            }
        }
    }

    /// Total order between algebraic numbers, with exact equality detection.
    pub fn cmp_alg(&mut self, other: &mut AlgebraicReal) -> Ordering {
        if let Some(r) = other.exact().cloned() {
            return self.cmp_rational(&r);
        }
        if let Some(r) = self.exact().cloned() {
            return other.cmp_rational(&r).reverse();
        }
        let ilo = crate::rational::max_q(&self.lo, &other.lo).clone();
        let ihi = crate::rational::min_q(&self.hi, &other.hi).clone();
        if ilo < ihi {
            let g = Poly::gcd(&self.poly, &other.poly);
            if !g.is_constant() && Sturm::new(&g).count(Some(&ilo), Some(&ihi)) > 0 {
                return Ordering::Equal;
            }
        }
        loop {
            if self.hi <= other.lo {
                return Ordering::Less;
            }
            if other.hi <= self.lo {
                return Ordering::Greater;
            }
            if self.width() >= other.width() {
                self.refine();
            } else {
                other.refine();
            }
            if self.is_exact() || other.is_exact() {
                return self.cmp_alg(other);
            }
        }
    }

    /// Detect a rational value exactly. A rational root `a/b` of an integer
    /// polynomial has `b` dividing the leading coefficient `L`, so once the
    /// interval is narrower than `1/L` at most one candidate remains.
    pub fn to_rational(&mut self) -> Option<Q> {
        if let Some(r) = self.exact() {
            return Some(r.clone());
        }
        let ints = self.poly.integer_coeffs();
        let l = ints.last().unwrap().abs();
        let lq = Q::from_integer(l.clone());
        self.refine_to(&(Q::one() / &lq / Q::from_integer(BigInt::from(2))));
        if let Some(r) = self.exact() {
            return Some(r.clone());
        }
        let m = (&self.lo * &lq).ceil();
        let cand = m / &lq;
        if cand >= self.lo && cand <= self.hi && self.poly.eval(&cand).is_zero() {
            self.lo = cand.clone();
            self.hi = cand.clone();
            return Some(cand);
        }
        None
    }
}

/// Distinct real roots of a nonzero polynomial, ascending.
pub fn isolate_real_roots(p: &Poly) -> Vec<AlgebraicReal> {
    assert!(!p.is_zero(), "isolating roots of the zero polynomial");
    if p.is_constant() {
        return Vec::new();
    }
    let s = p.square_free_part();
    if s.deg0() == 1 {
        let r = -s.coeff(0) / s.coeff(1);
        return vec![AlgebraicReal {
            poly: s,
            lo: r.clone(),
            hi: r,
        }];
    }
    let sturm = Sturm::new(&s);
    let b = s.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count(Some(&lo), Some(&hi));
        match c {
            0 => {}
            1 => out.push(normalize_interval(&s, &sturm, lo, hi)),
            _ => {
                let m = (&lo + &hi) / Q::from_integer(BigInt::from(2));
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // Pin rational roots exactly; later predicates then reduce to
    // rational arithmetic.
    for r in out.iter_mut() {
        r.to_rational();
    }
    out
}

/// Turn a half-open `(lo, hi]` containing exactly one root of square-free
/// `s` into the `AlgebraicReal` invariant.
fn normalize_interval(s: &Poly, sturm: &Sturm, mut lo: Q, mut hi: Q) -> AlgebraicReal {
    if s.eval(&hi).is_zero() {
        return AlgebraicReal {
            poly: s.clone(),
            lo: hi.clone(),
            hi,
        };
    }
    while s.eval(&lo).is_zero() {
        let m = (&lo + &hi) / Q::from_integer(BigInt::from(2));
        if s.eval(&m).is_zero() {
            return AlgebraicReal {
                poly: s.clone(),
                lo: m.clone(),
                hi: m,
            };
        }
        if sturm.count(Some(&m), Some(&hi)) == 1 {
            lo = m;
        } else {
            hi = m;
        }
    }
    AlgebraicReal {
        poly: s.clone(),
        lo,
        hi,
    }
}

/// A distinct real root shared across several polynomials, with its
/// multiplicity in each.
#[derive(Clone, Debug)]
pub struct MergedRoot {
    pub value: AlgebraicReal,
    pub mults: Vec<usize>,
}

/// Sorted distinct real roots of all the given nonzero polynomials, with
/// per-polynomial multiplicities.
pub fn merged_roots(polys: &[&Poly]) -> Vec<MergedRoot> {
    let mut tagged: Vec<(AlgebraicReal, usize, usize)> = Vec::new();
    for (idx, p) in polys.iter().enumerate() {
        for (factor, mult) in p.square_free_factors() {
            for r in isolate_real_roots(&factor) {
                tagged.push((r, idx, mult));
            }
        }
    }
    // Insertion sort: the comparator refines its arguments.
    let mut merged: Vec<MergedRoot> = Vec::new();
    for (mut r, idx, mult) in tagged {
        let mut pos = merged.len();
        let mut equal_at = None;
        for (i, m) in merged.iter_mut().enumerate() {
            match r.cmp_alg(&mut m.value) {
                Ordering::Less => {
                    pos = i;
                    break;
                }
                Ordering::Equal => {
                    equal_at = Some(i);
                    break;
                }
                Ordering::Greater => {}
            }
        }
        if let Some(i) = equal_at {
            merged[i].mults[idx] += mult;
            if r.is_exact() && !merged[i].value.is_exact() {
                merged[i].value = r;
            }
        } else {
            let mut mults = vec![0; polys.len()];
            mults[idx] = mult;
            merged.insert(pos, MergedRoot { value: r, mults });
        }
    }
    separate(&mut merged);
    merged
}

/// Refine neighbouring intervals until they are pairwise disjoint.
pub(crate) fn separate(roots: &mut [MergedRoot]) {
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let a = &mut left[i - 1].value;
        let b = &mut right[0].value;
        while a.hi >= b.lo {
            if a.width() >= b.width() && !a.is_exact() {
                a.refine();
            } else {
                b.refine();
            }
        }
    }
}
