//! Laurent polynomials in `q, K_1, .., K_n` with rational coefficients.
//!
//! Exponents are stored doubled (`i32`), so `q^{1/2}` is representable
//! exactly; slot 0 holds the exponent of `q`, slot `i` that of `K_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::MAX_RANK;

pub type Q = BigRational;

pub const NVARS: usize = MAX_RANK + 1;

/// A Laurent monomial with doubled exponents.
pub type Mono = [i32; NVARS];

pub const ONE_MONO: Mono = [0; NVARS];

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for (x, y) in m.iter_mut().zip(b) {
        *x += y;
    }
    m
}

pub fn mono_div(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for (x, y) in m.iter_mut().zip(b) {
        *x -= y;
    }
    m
}

pub fn mono_inv(a: &Mono) -> Mono {
    let mut m = *a;
    for x in m.iter_mut() {
        *x = -*x;
    }
    m
}

pub fn mono_is_one(a: &Mono) -> bool {
    a.iter().all(|&x| x == 0)
}

/// `q^{e/2}` as a monomial.
pub fn q_mono(doubled: i32) -> Mono {
    let mut m = ONE_MONO;
    m[0] = doubled;
    m
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::term(ONE_MONO, c)
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(Q::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Mono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn mono(m: Mono) -> Self {
        Poly::term(m, Q::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    /// The monomial `c·m` if the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(Mono, Q)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        match self.as_monomial() {
            Some((m, c)) if mono_is_one(&m) => Some(c),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut p = big.clone();
        for (m, c) in &small.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(*m, -c.clone());
        }
        p
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_term(&m, &c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_term(&m, &c);
        }
        let mut p = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        p
    }

    pub fn mul_term(&self, m: &Mono, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m1, c1)| (mono_mul(m1, m), c1 * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        self.mul_term(&ONE_MONO, c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Apply a monomial map; the map must be injective on the support or
    /// terms are merged.
    pub fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            p.add_term(f(m), c.clone());
        }
        p
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_mono(&self) -> Mono {
        let mut lo = [i32::MAX; NVARS];
        for m in self.terms.keys() {
            for (l, x) in lo.iter_mut().zip(m) {
                *l = (*l).min(*x);
            }
        }
        if self.is_zero() {
            ONE_MONO
        } else {
            lo
        }
    }

    /// Whether any exponent other than that of `q` is nonzero.
    pub fn involves_k(&self) -> bool {
        self.terms.keys().any(|m| m[1..].iter().any(|&x| x != 0))
    }

    /// Split `self = unit · atom` with the atom having leading coefficient 1
    /// and all minimum exponents 0.
    pub fn normalize_unit(&self) -> (Mono, Q, Poly) {
        let lo = self.min_mono();
        let lc = self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Q::one);
        let inv = lc.recip();
        let atom = Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono_div(m, &lo), c * &inv))
                .collect(),
        };
        (lo, lc, atom)
    }

    /// Exact division by a polynomial whose minimum exponents are all zero.
    /// Returns `None` if the quotient is not a Laurent polynomial.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        debug_assert!(mono_is_one(&d.min_mono()));
        let shift = self.min_mono();
        let mut rem = self.map_monos(|m| mono_div(m, &shift));
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = mono_div(&m, &dm);
            if qm.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = c / &dc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot.map_monos(|m| mono_mul(m, &shift)))
    }

    /// Evaluate at `q = point[0]`, `K_i = point[i]`.
    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        let mut cache: BTreeMap<(usize, i32), Q> = BTreeMap::new();
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (slot, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match cache.get(&(slot, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let base = point.get(slot).cloned().unwrap_or_else(Q::one);
                        let p = half_power(&base, e)?;
                        cache.insert((slot, e), p.clone());
                        p
                    }
                };
                v *= p;
            }
            total += v;
        }
        Ok(total)
    }

    /// Collect terms by their `K`-exponents; the values are univariate
    /// Laurent polynomials in `t = q^{1/2}` given as `(t-exponent, coeff)`.
    pub fn group_by_k(&self) -> BTreeMap<Mono, Vec<(i32, Q)>> {
        let mut out: BTreeMap<Mono, Vec<(i32, Q)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = *m;
            key[0] = 0;
            out.entry(key).or_default().push((m[0], c.clone()));
        }
        out
    }
}

/// `base^{e/2}` for a doubled exponent `e`.
pub fn half_power(base: &Q, e: i32) -> Result<Q> {
    let b = if e % 2 != 0 {
        rational_sqrt(base).ok_or_else(|| Error::IrrationalPower(format!("{e}/2")))?
    } else {
        base.clone()
    };
    let k = if e % 2 != 0 { e } else { e / 2 };
    if k >= 0 {
        Ok(num_traits::pow(b, k as usize))
    } else if b.is_zero() {
        Err(Error::Pole)
    } else {
        Ok(num_traits::pow(b.recip(), (-k) as usize))
    }
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// Format an exact rational as `p` or `p/r`.
pub fn fmt_q(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Format a doubled exponent as a rational string.
pub fn fmt_half(e: i32) -> String {
    if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("{e}/2")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (slot, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let var = if slot == 0 { "q".to_string() } else { format!("K{slot}") };
                if e == 2 {
                    factors.push(var);
                } else {
                    factors.push(format!("{var}^{}", fmt_half(e)));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_q(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", fmt_q(&a))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Poly {
        Poly::mono(q_mono(2 * e))
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = q(2).sub(&Poly::one()); // q^2 - 1
        let b = q(3).add(&q(1)).add(&Poly::int(5));
        let (_, _, atom) = a.normalize_unit();
        let p = b.mul(&a);
        assert_eq!(p.div_exact(&atom).unwrap(), b);
        assert!(b.div_exact(&atom).is_none());
    }

    #[test]
    fn half_powers() {
        let four = Q::from_integer(4.into());
        assert_eq!(half_power(&four, 1).unwrap(), Q::from_integer(2.into()));
        assert_eq!(half_power(&four, -2).unwrap(), Q::new(1.into(), 4.into()));
        assert!(half_power(&Q::from_integer(3.into()), 1).is_err());
    }

    #[test]
    fn normalize_is_unit_invariant() {
        let a = q(2).sub(&Poly::one());
        let b = a.mul_term(&q_mono(-6), &Q::from_integer((-3).into()));
        assert_eq!(a.normalize_unit().2, b.normalize_unit().2);
    }
}
