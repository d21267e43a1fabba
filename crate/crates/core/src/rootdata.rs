//! Root data for the orthogonal and symplectic families.
//!
//! Everything is expressed in the orthonormal basis `ε_1..ε_n` of the Cartan
//! dual with `(ε_i, ε_j) = δ_ij` for every family. The natural representation
//! lives on `C^N` with basis indices `1..=N`; index `i` carries weight
//! `natWeight(i)` and `i' = N + 1 - i` is the prime involution.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = Rational64;

/// Largest supported rank. Monomials are stored in fixed-width arrays.
pub const MAX_RANK: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }

    pub fn is_orthogonal(self) -> bool {
        !matches!(self, Family::C)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() || rank > MAX_RANK {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
                min: family.min_rank(),
                max: MAX_RANK,
            });
        }
        Ok(LieType { family, rank })
    }

    /// Dimension `N` of the natural representation.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A vector in the ε-basis with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Rat::zero(); n])
    }

    /// The basis vector `ε_i`, 1-based.
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i - 1] = Rat::one();
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Weight) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, c: Rat) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An ordered pair `(l, r)` of natural-representation indices with
/// `natWeight(l) - natWeight(r)` a simple root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplePair {
    pub l: usize,
    pub r: usize,
}

#[derive(Clone, Debug)]
pub struct RootData {
    pub ty: LieType,
    simple: Vec<Weight>,
    positive: Vec<Weight>,
    cartan: Vec<Vec<i64>>,
    rho: Weight,
    nat: Vec<Weight>,
    pairs: Vec<Vec<SimplePair>>,
}

impl RootData {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::build(LieType::new(family, rank)?))
    }

    pub fn build(ty: LieType) -> Self {
        let n = ty.rank;
        let eps = |i: usize| Weight::epsilon(n, i);

        let mut simple: Vec<Weight> = (1..n).map(|i| &eps(i) - &eps(i + 1)).collect();
        simple.push(match ty.family {
            Family::B => eps(n),
            Family::C => eps(n).scale(Rat::from_integer(2)),
            Family::D => &eps(n - 1) + &eps(n),
        });

        let mut positive = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                positive.push(&eps(i) - &eps(j));
                positive.push(&eps(i) + &eps(j));
            }
            match ty.family {
                Family::B => positive.push(eps(i)),
                Family::C => positive.push(eps(i).scale(Rat::from_integer(2))),
                Family::D => {}
            }
        }

        let cartan = simple
            .iter()
            .map(|ai| {
                simple
                    .iter()
                    .map(|aj| {
                        let v = Rat::from_integer(2) * ai.dot(aj) / ai.norm2();
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();

        let half = Rat::new(1, 2);
        let rho = positive
            .iter()
            .fold(Weight::zero(n), |acc, a| &acc + a)
            .scale(half);

        let big_n = ty.dim();
        let nat = (1..=big_n)
            .map(|i| {
                if i <= n {
                    eps(i)
                } else if i > big_n - n {
                    -&eps(big_n + 1 - i)
                } else {
                    Weight::zero(n)
                }
            })
            .collect::<Vec<_>>();

        let pairs = simple
            .iter()
            .map(|a| {
                let mut ps = Vec::new();
                for l in 1..=big_n {
                    for r in 1..=big_n {
                        if l != r && &(&nat[l - 1] - &nat[r - 1]) == a {
                            ps.push(SimplePair { l, r });
                        }
                    }
                }
                ps
            })
            .collect();

        RootData {
            ty,
            simple,
            positive,
            cartan,
            rho,
            nat,
            pairs,
        }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    /// `N`, the dimension of the natural representation.
    pub fn dim(&self) -> usize {
        self.ty.dim()
    }

    /// Simple root `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple[i - 1]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// Cartan matrix entry `a_ij = 2(α_i, α_j)/(α_i, α_i)`, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn prime(&self, i: usize) -> usize {
        self.dim() + 1 - i
    }

    /// Weight of the natural-representation basis vector `i`, 1-based.
    pub fn nat_weight(&self, i: usize) -> &Weight {
        &self.nat[i - 1]
    }

    /// `(α_i, α_i) / 2`, i.e. the exponent `d_i` with `q_{α_i} = q^{d_i}`.
    pub fn half_norm(&self, i: usize) -> Rat {
        self.simple[i - 1].norm2() / Rat::from_integer(2)
    }

    /// Index of a simple root given its weight.
    pub fn simple_index(&self, w: &Weight) -> Option<usize> {
        self.simple.iter().position(|a| a == w).map(|k| k + 1)
    }

    /// The set `P(α_i)` of simple pairs, ordered by `l`.
    pub fn pairs(&self, i: usize) -> &[SimplePair] {
        &self.pairs[i - 1]
    }

    /// `P(α)` for a simple root given as a weight.
    pub fn simple_pairs(&self, alpha: &Weight) -> Result<&[SimplePair]> {
        self.simple_index(alpha)
            .map(|i| self.pairs(i))
            .ok_or_else(|| Error::NotSimple(alpha.to_string()))
    }

    /// The simple root index `α` with `(l, r) ∈ P(α)`, if any.
    pub fn pair_root(&self, l: usize, r: usize) -> Option<usize> {
        (1..=self.rank()).find(|&i| self.pairs(i).contains(&SimplePair { l, r }))
    }

    /// Coordinates of `w` in the basis of simple roots.
    pub fn simple_coords(&self, w: &Weight) -> Vec<Rat> {
        // The simple roots are upper triangular in the ε-basis up to the last
        // one, so solve the square system by Gaussian elimination.
        let n = self.rank();
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|row| {
                let mut r: Vec<Rat> = (0..n).map(|col| self.simple[col].0[row]).collect();
                r.push(w.0[row]);
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("simple roots are a basis");
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    let pivot_row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        m.into_iter().map(|r| r[n]).collect()
    }

    /// Height of a root-lattice element: the sum of its simple coordinates.
    pub fn height(&self, w: &Weight) -> Rat {
        self.simple_coords(w).into_iter().sum()
    }

    /// `||i - k||`, the number of simple roots (with multiplicity) entering
    /// `natWeight(i) - natWeight(k)`.
    pub fn index_distance(&self, i: usize, k: usize) -> i64 {
        let h = self.height(&(self.nat_weight(i) - self.nat_weight(k)));
        debug_assert!(h.is_integer());
        h.to_integer().abs()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive.contains(w)
    }

    pub fn is_simple_root(&self, w: &Weight) -> bool {
        self.simple.contains(w)
    }

    /// Whether `natWeight(i) - natWeight(j)` is a positive combination of
    /// simple roots (nonzero, nonnegative coordinates).
    pub fn is_positive_combination(&self, w: &Weight) -> bool {
        let c = self.simple_coords(w);
        c.iter().all(|x| !x.is_negative()) && c.iter().any(|x| !x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cartan(rd: &RootData, i: usize, j: usize) -> Rat {
        let ai = rd.simple_root(i);
        let aj = rd.simple_root(j);
        let ip: Rat = ai.0.iter().zip(&aj.0).map(|(a, b)| a * b).sum();
        let nn: Rat = ai.0.iter().map(|a| a * a).sum();
        Rat::from_integer(2) * ip / nn
    }

    #[test]
    fn b2_basic_data() {
        let rd = RootData::new(Family::B, 2).unwrap();
        assert_eq!(rd.dim(), 5);
        assert_eq!(rd.simple_root(1), &Weight::from_ints(&[1, -1]));
        assert_eq!(rd.simple_root(2), &Weight::from_ints(&[0, 1]));
        assert_eq!(rd.rho(), &Weight(vec![Rat::new(3, 2), Rat::new(1, 2)]));
    }

    #[test]
    fn c2_cartan_matches_inner_products() {
        let rd = RootData::new(Family::C, 2).unwrap();
        assert_eq!(rd.cartan(1, 2), -2);
        assert_eq!(rd.cartan(2, 1), -1);
        assert_eq!(rd.simple_root(2), &Weight::from_ints(&[0, 2]));
        for ty in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let rd = RootData::new(ty.0, ty.1).unwrap();
            for i in 1..=rd.rank() {
                for j in 1..=rd.rank() {
                    assert_eq!(Rat::from_integer(rd.cartan(i, j)), brute_cartan(&rd, i, j));
                }
            }
        }
    }

    #[test]
    fn simple_pairs_by_scan() {
        let rd = RootData::new(Family::B, 2).unwrap();
        let p = |l, r| SimplePair { l, r };
        assert_eq!(rd.pairs(1), &[p(1, 2), p(4, 5)]);
        assert_eq!(rd.pairs(2), &[p(2, 3), p(3, 4)]);
        let rd = RootData::new(Family::C, 2).unwrap();
        assert_eq!(rd.pairs(2), &[p(2, 3)]);
        let rd = RootData::new(Family::D, 3).unwrap();
        // ε_2 + ε_3: ε_2 - ε_{3'} and ε_3 - ε_{2'}.
        assert_eq!(rd.pairs(3), &[p(2, 4), p(3, 5)]);
    }

    #[test]
    fn rank_bounds() {
        assert!(RootData::new(Family::D, 2).is_err());
        assert!(RootData::new(Family::B, 1).is_err());
        assert!(RootData::new(Family::C, MAX_RANK + 1).is_err());
        assert!(matches!(
            "E".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn non_simple_root_rejected() {
        let rd = RootData::new(Family::B, 2).unwrap();
        assert!(rd.simple_pairs(&Weight::from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn prime_involution_and_simple_rho() {
        for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3)] {
            let rd = RootData::new(f, n).unwrap();
            for i in 1..=rd.dim() {
                assert_eq!(rd.prime(rd.prime(i)), i);
                assert_eq!(rd.nat_weight(rd.prime(i)), &-rd.nat_weight(i));
            }
            for a in rd.simple_roots() {
                assert_eq!(a.dot(rd.rho()), a.norm2() / Rat::from_integer(2));
                assert!([1, 2, 4].contains(&a.norm2().to_integer()));
            }
            for i in 1..=n {
                for pr in rd.pairs(i) {
                    let sw = SimplePair { l: rd.prime(pr.r), r: rd.prime(pr.l) };
                    assert!(rd.pairs(i).contains(&sw));
                }
            }
            assert_eq!(rd.positive_roots().len(), match f {
                Family::D => n * (n - 1),
                _ => n * n,
            });
        }
    }

    #[test]
    fn heights_and_distances() {
        let rd = RootData::new(Family::B, 2).unwrap();
        assert_eq!(rd.index_distance(2, 3), 1);
        assert_eq!(rd.index_distance(1, 5), 4);
        let rd = RootData::new(Family::C, 2).unwrap();
        assert_eq!(rd.index_distance(1, 4), 3);
    }
}
