//! The exact coefficient field and the Cartan-affine exponents feeding it.

mod field;
pub mod linfield;
pub mod poly;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

pub use field::{doubled, k_mono, FieldElement};
pub use poly::{fmt_half, fmt_q, Mono, Poly, Q};

use crate::error::Result;
use crate::rootdata::{Rat, RootData, Weight};

/// An element `h_λ + c` of the Cartan subalgebra plus constants, with
/// `λ` given in the ε-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanAffine {
    pub linear: Vec<Rat>,
    pub constant: Rat,
}

impl CartanAffine {
    pub fn zero(n: usize) -> Self {
        CartanAffine { linear: vec![Rat::zero(); n], constant: Rat::zero() }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        CartanAffine { linear: vec![Rat::zero(); n], constant: c }
    }

    /// `h_λ`.
    pub fn h(lambda: &Weight) -> Self {
        CartanAffine { linear: lambda.0.clone(), constant: Rat::zero() }
    }

    pub fn plus_const(&self, c: Rat) -> Self {
        CartanAffine { linear: self.linear.clone(), constant: self.constant + c }
    }

    pub fn scale(&self, c: Rat) -> Self {
        CartanAffine {
            linear: self.linear.iter().map(|x| x * c).collect(),
            constant: self.constant * c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.iter().all(|x| x.is_zero())
    }

    /// `q^{self}` as a monomial in `q` and the `K_i`.
    pub fn exp(&self) -> Result<KMonomial> {
        let mut m = poly::ONE_MONO;
        m[0] = doubled(self.constant)?;
        for (i, x) in self.linear.iter().enumerate() {
            m[i + 1] = doubled(*x)?;
        }
        Ok(KMonomial(m))
    }

    /// `q^{self}` as a field element.
    pub fn q_pow(&self) -> Result<FieldElement> {
        Ok(FieldElement::mono(self.exp()?.0))
    }
}

impl Add for &CartanAffine {
    type Output = CartanAffine;
    fn add(self, rhs: &CartanAffine) -> CartanAffine {
        CartanAffine {
            linear: self.linear.iter().zip(&rhs.linear).map(|(a, b)| a + b).collect(),
            constant: self.constant + rhs.constant,
        }
    }
}

impl Sub for &CartanAffine {
    type Output = CartanAffine;
    fn sub(self, rhs: &CartanAffine) -> CartanAffine {
        CartanAffine {
            linear: self.linear.iter().zip(&rhs.linear).map(|(a, b)| a - b).collect(),
            constant: self.constant - rhs.constant,
        }
    }
}

impl Neg for &CartanAffine {
    type Output = CartanAffine;
    fn neg(self) -> CartanAffine {
        self.scale(Rat::from_integer(-1))
    }
}

impl fmt::Display for CartanAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, x) in self.linear.iter().enumerate() {
            if !x.is_zero() {
                parts.push(format!("{x}*h{}", i + 1));
            }
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `q^c · Π K_i^{a_i}` with half-integer exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KMonomial(pub Mono);

impl KMonomial {
    pub fn q_exp(&self) -> Rat {
        Rat::new(self.0[0] as i64, 2)
    }

    pub fn k_exp(&self, i: usize) -> Rat {
        Rat::new(self.0[i] as i64, 2)
    }

    pub fn mul(&self, other: &KMonomial) -> KMonomial {
        KMonomial(poly::mono_mul(&self.0, &other.0))
    }
}

/// `[x]_q = (q^x - q^{-x}) / (q - q^{-1})`.
pub fn q_bracket(x: &CartanAffine) -> Result<FieldElement> {
    let plus = x.exp()?.0;
    let minus = poly::mono_inv(&plus);
    let num = FieldElement::from_poly(Poly::mono(plus).sub(&Poly::mono(minus)));
    num.div(&FieldElement::q_minus_qinv())
}

/// `[m]_v` with `v = q^{d}`, as a Laurent polynomial when `m` is an integer.
pub fn q_int_at(m: i64, d: Rat) -> Result<FieldElement> {
    let vm = FieldElement::q_pow(d * Rat::from_integer(m))?;
    let vmi = FieldElement::q_pow(-d * Rat::from_integer(m))?;
    let v = FieldElement::q_pow(d)?;
    let vi = FieldElement::q_pow(-d)?;
    vm.sub(&vmi).div(&v.sub(&vi))
}

/// `[m]_q`.
pub fn q_int(m: i64) -> FieldElement {
    q_int_at(m, Rat::from_integer(1)).expect("integer exponents")
}

/// Gaussian binomial `[m choose k]_v` with `v = q^{d}`.
pub fn q_binomial(m: i64, k: i64, d: Rat) -> Result<FieldElement> {
    if k < 0 || k > m {
        return Ok(FieldElement::zero());
    }
    let mut num = FieldElement::one();
    let mut den = FieldElement::one();
    for s in 0..k {
        num = num.mul(&q_int_at(m - s, d)?);
        den = den.mul(&q_int_at(s + 1, d)?);
    }
    Ok(num.div(&den)?.simplify())
}

/// `η_ij = h_i - h_j + (ε_i - ε_j, ρ) - ½||ε_i - ε_j||²` with `h_i` the
/// Cartan element dual to `natWeight(i)`.
pub fn eta(rd: &RootData, i: usize, j: usize) -> CartanAffine {
    let d = rd.nat_weight(i) - rd.nat_weight(j);
    let constant = d.dot(rd.rho()) - d.norm2() / Rat::from_integer(2);
    CartanAffine { linear: d.0, constant }
}

/// `q^{h_α}` for a simple root `α_i`.
pub fn k_alpha(rd: &RootData, i: usize) -> FieldElement {
    CartanAffine::h(rd.simple_root(i)).q_pow().expect("root coordinates are integral")
}

/// Evaluate a field element at a point, mirroring [`FieldElement::specialize`].
pub fn specialize(phi: &FieldElement, q0: &Q, k0: &[Q]) -> Result<Q> {
    phi.specialize(q0, k0)
}

/// Same as [`FieldElement::weight_shift`].
pub fn weight_shift(phi: &FieldElement, mu: &Weight) -> FieldElement {
    phi.weight_shift(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn qq(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn bracket_constants() {
        let n = 2;
        let one = q_bracket(&CartanAffine::constant(n, Rat::from_integer(1))).unwrap();
        assert!(one.is_one());
        let two = q_bracket(&CartanAffine::constant(n, Rat::from_integer(2))).unwrap();
        let expect = FieldElement::q_half_pow(2).add(&FieldElement::q_half_pow(-2));
        assert_eq!(two, expect);
        assert!(two.den_atoms().is_empty());
        assert_eq!(two.specialize(&qq(2, 1), &[]).unwrap(), qq(5, 2));
    }

    #[test]
    fn bracket_of_h_alpha() {
        let rd = RootData::new(Family::B, 2).unwrap();
        let x = CartanAffine::h(rd.simple_root(1));
        let b = q_bracket(&x).unwrap();
        let k = FieldElement::mono(k_mono(&[2, -2]));
        let kinv = FieldElement::mono(k_mono(&[-2, 2]));
        let expect = k.sub(&kinv).div(&FieldElement::q_minus_qinv()).unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn eta_examples() {
        let rd = RootData::new(Family::B, 2).unwrap();
        let e = eta(&rd, 1, 3);
        assert_eq!(e.linear, vec![Rat::from_integer(1), Rat::zero()]);
        assert_eq!(e.constant, Rat::from_integer(1));
        for i in 1..=rd.dim() {
            assert!(eta(&rd, i, i).is_zero());
        }
        for a in 1..=rd.rank() {
            for p in rd.pairs(a) {
                assert_eq!(eta(&rd, p.l, p.r), CartanAffine::h(rd.simple_root(a)));
            }
        }
    }

    #[test]
    fn half_root_binomials_are_laurent() {
        // [3]_{q^{1/2}} = q + 1 + q^{-1}
        let b = q_binomial(3, 1, Rat::new(1, 2)).unwrap();
        let expect = FieldElement::q_half_pow(2)
            .add(&FieldElement::one())
            .add(&FieldElement::q_half_pow(-2));
        assert_eq!(b, expect);
        assert!(b.den_atoms().is_empty());
    }
}
