//! Scalar fields for the graded linear algebra: `Q(t)` with `t = q^{1/2}`
//! for exact runs and `Q` for runs at a specialized sample point.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{fmt_q, Q};

pub trait LinField: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn lzero() -> Self;
    fn lone() -> Self;
    fn lis_zero(&self) -> bool;
    fn ladd(&self, o: &Self) -> Self;
    fn lsub(&self, o: &Self) -> Self;
    fn lmul(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn ldiv(&self, o: &Self) -> Self;
}

impl LinField for Q {
    fn lzero() -> Self {
        Zero::zero()
    }
    fn lone() -> Self {
        One::one()
    }
    fn lis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ladd(&self, o: &Self) -> Self {
        self + o
    }
    fn lsub(&self, o: &Self) -> Self {
        self - o
    }
    fn lmul(&self, o: &Self) -> Self {
        self * o
    }
    fn ldiv(&self, o: &Self) -> Self {
        self / o
    }
}

/// Dense univariate polynomial over `Q`, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<Q>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        UPoly(vec![c]).trimmed()
    }

    pub fn monomial(deg: usize, c: Q) -> Self {
        let mut v = vec![Q::zero(); deg + 1];
        v[deg] = c;
        UPoly(v).trimmed()
    }

    pub fn from_coeffs(v: Vec<Q>) -> Self {
        UPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let v = (0..n)
            .map(|k| {
                let a = self.0.get(k).cloned().unwrap_or_else(Q::zero);
                let b = o.0.get(k).cloned().unwrap_or_else(Q::zero);
                a + b
            })
            .collect();
        UPoly(v).trimmed()
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly(v).trimmed()
    }

    pub fn scale(&self, c: &Q) -> UPoly {
        UPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc = d.lead();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lc;
            if Zero::is_zero(&c) {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k - dd + j] -= &c * dc;
            }
            quot[k - dd] = c;
        }
        (UPoly(quot).trimmed(), UPoly(rem).trimmed())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| format!("{}*t^{k}", fmt_q(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A reduced fraction of univariate polynomials in `t`, denominator monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatT {
    num: UPoly,
    den: UPoly,
}

impl RatT {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatT { num, den: UPoly::constant(Q::one()) };
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lc = d.lead().recip();
        RatT { num: n.scale(&lc), den: d.scale(&lc) }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatT { num: p, den: UPoly::constant(Q::one()) }
    }

    /// From Laurent terms `(exponent, coefficient)` in `t`.
    pub fn from_laurent(terms: &[(i32, Q)]) -> Self {
        if terms.is_empty() {
            return <RatT as LinField>::lzero();
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut v = vec![Q::zero(); (hi - lo) as usize + 1];
        for (e, c) in terms {
            v[(e - lo) as usize] += c;
        }
        let p = UPoly::from_coeffs(v);
        if lo >= 0 {
            RatT::from_poly(p.mul(&UPoly::monomial(lo as usize, Q::one())))
        } else {
            RatT::new(p, UPoly::monomial((-lo) as usize, Q::one()))
        }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    /// Evaluate at `t = x`; `None` at a pole.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Debug for RatT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl LinField for RatT {
    fn lzero() -> Self {
        RatT { num: UPoly::zero(), den: UPoly::constant(Q::one()) }
    }
    fn lone() -> Self {
        RatT::from_poly(UPoly::constant(Q::one()))
    }
    fn lis_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn ladd(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatT::new(self.num.add(&o.num), self.den.clone());
        }
        RatT::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn lsub(&self, o: &Self) -> Self {
        self.ladd(&RatT { num: o.num.neg(), den: o.den.clone() })
    }
    fn lmul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return <RatT as LinField>::lzero();
        }
        RatT::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn ldiv(&self, o: &Self) -> Self {
        RatT::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    #[test]
    fn gcd_reduces() {
        // (t^2 - 1)/(t - 1) = t + 1
        let r = RatT::new(up(&[-1, 0, 1]), up(&[-1, 1]));
        assert_eq!(r, RatT::from_poly(up(&[1, 1])));
    }

    #[test]
    fn laurent_and_field_ops() {
        let a = RatT::from_laurent(&[(-2, Q::one()), (2, Q::one())]);
        let b = a.ldiv(&a);
        assert_eq!(b, <RatT as LinField>::lone());
        assert!(a.lsub(&a).lis_zero());
    }
}
