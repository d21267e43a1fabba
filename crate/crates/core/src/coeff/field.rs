//! Rational functions in `q` and the Cartan characters `K_i = q^{h_{ε_i}}`.
//!
//! A [`FieldElement`] is a Laurent-polynomial numerator over a factored
//! denominator: a multiset of normalized "atoms" (leading coefficient 1,
//! every variable's minimum exponent 0, never a monomial). Sums take the
//! least common multiple of the atom multisets, so no polynomial gcd is
//! needed. Equality is decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{mono_inv, q_mono, Mono, Poly, Q, NVARS, ONE_MONO};
use crate::error::{Error, Result};
use crate::rootdata::{Rat, Weight};

#[derive(Clone, Default)]
pub struct FieldElement {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::default()
    }

    pub fn one() -> Self {
        FieldElement::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElement { num: p, den: BTreeMap::new() }
    }

    pub fn from_q(c: Q) -> Self {
        FieldElement::from_poly(Poly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        FieldElement::from_poly(Poly::int(c))
    }

    pub fn mono(m: Mono) -> Self {
        FieldElement::from_poly(Poly::mono(m))
    }

    /// `q^e` for a rational exponent with denominator dividing 2.
    pub fn q_pow(e: Rat) -> Result<Self> {
        Ok(FieldElement::mono(q_mono(doubled(e)?)))
    }

    /// `q^{e/2}` from a doubled exponent.
    pub fn q_half_pow(doubled_exp: i32) -> Self {
        FieldElement::mono(q_mono(doubled_exp))
    }

    /// `q - q^{-1}`.
    pub fn q_minus_qinv() -> Self {
        FieldElement::from_poly(Poly::mono(q_mono(2)).sub(&Poly::mono(q_mono(-2))))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_atoms(&self) -> &BTreeMap<Poly, u32> {
        &self.den
    }

    pub fn den_poly(&self) -> Poly {
        self.den
            .iter()
            .fold(Poly::one(), |acc, (a, &m)| acc.mul(&a.pow(m)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num == Poly::one()
    }

    /// The value as an exact rational if it is a constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Whether the element depends on some `K_i`.
    pub fn involves_k(&self) -> bool {
        self.num.involves_k() || self.den.keys().any(|a| a.involves_k())
    }

    fn build(num: Poly, den: BTreeMap<Poly, u32>) -> Self {
        if num.is_zero() {
            return FieldElement::zero();
        }
        FieldElement { num, den }
    }

    /// Multiply the denominator by `p` (any nonzero Laurent polynomial).
    fn divide_by_poly(mut num: Poly, mut den: BTreeMap<Poly, u32>, p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lo, lc, atom) = p.normalize_unit();
        num = num.mul_term(&mono_inv(&lo), &lc.recip());
        if atom.as_monomial().is_none() {
            if let Some(qt) = num.div_exact(&atom) {
                num = qt;
            } else {
                *den.entry(atom).or_insert(0) += 1;
            }
        }
        Ok(FieldElement::build(num, den))
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return FieldElement::build(self.num.add(&other.num), self.den.clone());
        }
        let mut lcm = self.den.clone();
        for (a, &m) in &other.den {
            let e = lcm.entry(a.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |x: &FieldElement| {
            let mut p = x.num.clone();
            for (a, &m) in &lcm {
                let have = x.den.get(a).copied().unwrap_or(0);
                if m > have {
                    p = p.mul(&a.pow(m - have));
                }
            }
            p
        };
        let num = lift(self).add(&lift(other));
        FieldElement::build(num, lcm)
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        if self.is_zero() || other.is_zero() {
            return FieldElement::zero();
        }
        let mut num = self.num.mul(&other.num);
        let mut den = self.den.clone();
        for (a, &m) in &other.den {
            *den.entry(a.clone()).or_insert(0) += m;
        }
        cancel(&mut num, &mut den);
        FieldElement::build(num, den)
    }

    pub fn scale(&self, c: &Q) -> FieldElement {
        FieldElement::build(self.num.scale(c), self.den.clone())
    }

    pub fn mul_mono(&self, m: &Mono) -> FieldElement {
        FieldElement::build(self.num.mul_term(m, &Q::one()), self.den.clone())
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.den_poly();
        FieldElement::divide_by_poly(num, BTreeMap::new(), &self.num)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = FieldElement::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Apply a monomial automorphism to numerator and atoms.
    pub fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> FieldElement {
        let mut num = self.num.map_monos(&f);
        let mut den = BTreeMap::new();
        for (a, &m) in &self.den {
            let mapped = a.map_monos(&f);
            let (lo, lc, atom) = mapped.normalize_unit();
            let unit_inv = Poly::term(mono_inv(&lo), lc.recip());
            for _ in 0..m {
                num = num.mul(&unit_inv);
            }
            *den.entry(atom).or_insert(0) += m;
        }
        FieldElement::build(num, den)
    }

    /// The unique `ψ` with `φ·x = x·ψ` for every algebra element `x` of
    /// weight `μ`: each `K_i^{a}` picks up `q^{a μ_i}`.
    pub fn weight_shift(&self, mu: &Weight) -> FieldElement {
        if mu.is_zero() || !self.involves_k() {
            return self.clone();
        }
        let mu: Vec<Rat> = mu.0.clone();
        self.map_monos(|m| {
            let mut out = *m;
            let mut acc = Rat::zero();
            for (i, x) in mu.iter().enumerate() {
                acc += Rat::from_integer(m[i + 1] as i64) * x;
            }
            debug_assert!(acc.is_integer());
            out[0] += acc.to_integer() as i32;
            out
        })
    }

    /// Negate every `K` exponent (the Cartan part of the Chevalley involution).
    pub fn invert_k(&self) -> FieldElement {
        if !self.involves_k() {
            return self.clone();
        }
        self.map_monos(|m| {
            let mut out = *m;
            for x in out[1..].iter_mut() {
                *x = -*x;
            }
            out
        })
    }

    /// Exact evaluation at `q = q0`, `K_i = k0[i-1]`.
    pub fn specialize(&self, q0: &Q, k0: &[Q]) -> Result<Q> {
        let mut point = Vec::with_capacity(NVARS);
        point.push(q0.clone());
        point.extend(k0.iter().cloned());
        let n = self.num.eval(&point)?;
        let mut d = Q::one();
        for (a, &m) in &self.den {
            let v = a.eval(&point)?;
            if v.is_zero() {
                return Err(Error::Pole);
            }
            for _ in 0..m {
                d *= &v;
            }
        }
        Ok(n / d)
    }

    /// Try to cancel atoms against the numerator.
    pub fn simplify(&self) -> FieldElement {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        cancel(&mut num, &mut den);
        FieldElement::build(num, den)
    }

    /// Exact equality by cross-multiplication.
    pub fn equals(&self, other: &FieldElement) -> bool {
        self.sub(other).is_zero()
    }
}

fn cancel(num: &mut Poly, den: &mut BTreeMap<Poly, u32>) {
    if den.is_empty() {
        return;
    }
    let atoms: Vec<Poly> = den.keys().cloned().collect();
    for a in atoms {
        loop {
            let m = den[&a];
            if m == 0 {
                break;
            }
            match num.div_exact(&a) {
                Some(qt) => {
                    *num = qt;
                    if m == 1 {
                        den.remove(&a);
                        break;
                    }
                    den.insert(a.clone(), m - 1);
                }
                None => break,
            }
        }
    }
}

/// Double a rational exponent, requiring denominator 1 or 2.
pub fn doubled(e: Rat) -> Result<i32> {
    let d = e * Rat::from_integer(2);
    if !d.is_integer() {
        return Err(Error::NonHalfIntegerExponent(e.to_string()));
    }
    Ok(d.to_integer() as i32)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (k, (a, m)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *m == 1 {
                write!(f, "({a})")?;
            } else {
                write!(f, "({a})^{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// `K_1^{a_1} ⋯ K_n^{a_n}` without the `q` part.
pub fn k_mono(exps: &[i32]) -> Mono {
    let mut m = ONE_MONO;
    for (i, &e) in exps.iter().enumerate() {
        m[i + 1] = e;
    }
    m
}
