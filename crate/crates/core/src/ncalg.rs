//! The noncommutative core: normal-ordered sums `f-word · φ · e-word` over
//! the field of Cartan fractions, multiplication with full reordering,
//! weights, the Chevalley involution ω, the natural representation and the
//! one-leg coproduct matrices.
//!
//! The Serre relations are *not* applied here: f-words and e-words live in
//! free monoids, and equality modulo Serre is decided by [`crate::serre`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::coeff::{k_mono, poly, FieldElement, Mono, Poly};
use crate::error::{Error, Result};
use crate::rootdata::{Family, Rat, RootData, Weight};

/// A word in the simple-root letters `1..=n`.
pub type Word = Vec<u8>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    F,
    E,
}

/// A Chevalley or Cartan generator: `e_i`, `f_i`, `q^{h_{α_i}}`, `q^{-h_{α_i}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

/// A finite sum of normal-ordered terms `(fword | coeff | eword)`, ordered
/// lexicographically by `(fword, eword)`. Zero coefficients never appear.
#[derive(Clone, Default, PartialEq)]
pub struct AlgebraElement {
    terms: BTreeMap<(Word, Word), FieldElement>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::term(Vec::new(), FieldElement::one(), Vec::new())
    }

    /// The Cartan element `φ`.
    pub fn coeff(c: FieldElement) -> Self {
        AlgebraElement::term(Vec::new(), c, Vec::new())
    }

    pub fn term(f: Word, c: FieldElement, e: Word) -> Self {
        let mut x = AlgebraElement::zero();
        x.add_term(f, c, e);
        x
    }

    pub fn fword(w: &[u8]) -> Self {
        AlgebraElement::term(w.to_vec(), FieldElement::one(), Vec::new())
    }

    pub fn eword(w: &[u8]) -> Self {
        AlgebraElement::term(Vec::new(), FieldElement::one(), w.to_vec())
    }

    pub fn add_term(&mut self, f: Word, c: FieldElement, e: Word) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((f, e)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElement, &Word)> {
        self.terms.iter().map(|((f, e), c)| (f, c, e))
    }

    pub fn coefficient(&self, f: &[u8], e: &[u8]) -> Option<&FieldElement> {
        self.terms.get(&(f.to_vec(), e.to_vec()))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for ((f, e), c) in &other.terms {
            out.add_term(f.clone(), c.clone(), e.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.map_coeffs(|c| c.neg())
    }

    /// Multiply every coefficient by a `K`-free scalar (central).
    pub fn scale(&self, s: &FieldElement) -> AlgebraElement {
        debug_assert!(!s.involves_k(), "scale() takes central scalars only");
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&FieldElement) -> FieldElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((fw, ew), c) in &self.terms {
            out.add_term(fw.clone(), f(c), ew.clone());
        }
        out
    }

    /// Whether every term lies in one triangular sector (the other word empty).
    pub fn is_pure(&self, sector: Sector) -> bool {
        self.terms.keys().all(|(f, e)| match sector {
            Sector::F => e.is_empty(),
            Sector::E => f.is_empty(),
        })
    }

    pub fn involves_k(&self) -> bool {
        self.terms.values().any(|c| c.involves_k())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((fw, ew), c)| {
                let mut s = Vec::new();
                s.extend(fw.iter().map(|l| format!("f{l}")));
                if !c.is_one() || (fw.is_empty() && ew.is_empty()) {
                    s.push(format!("({c})"));
                }
                s.extend(ew.iter().map(|l| format!("e{l}")));
                s.join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A square matrix, indexed from 1 in the public accessors.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(n: usize, v: T) -> Self {
        Matrix { n, data: vec![v; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, a: usize, b: usize) -> &T {
        &self.data[(a - 1) * self.n + (b - 1)]
    }

    pub fn set(&mut self, a: usize, b: usize, v: T) {
        self.data[(a - 1) * self.n + (b - 1)] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.n;
        self.data.iter().enumerate().map(move |(k, v)| (k / n + 1, k % n + 1, v))
    }
}

pub type FieldMatrix = Matrix<FieldElement>;
pub type AlgMatrix = Matrix<AlgebraElement>;

impl FieldMatrix {
    pub fn zeros(n: usize) -> Self {
        Matrix::filled(n, FieldElement::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FieldMatrix::zeros(n);
        for a in 1..=n {
            m.set(a, a, FieldElement::one());
        }
        m
    }

    pub fn mul(&self, o: &FieldMatrix) -> FieldMatrix {
        let n = self.n;
        let mut out = FieldMatrix::zeros(n);
        for a in 1..=n {
            for c in 1..=n {
                let mut acc = FieldElement::zero();
                for b in 1..=n {
                    let x = self.at(a, b);
                    let y = o.at(b, c);
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.mul(y));
                    }
                }
                out.set(a, c, acc);
            }
        }
        out
    }

    pub fn add(&self, o: &FieldMatrix) -> FieldMatrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(x, y)| x.add(y)).collect() }
    }

    pub fn sub(&self, o: &FieldMatrix) -> FieldMatrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(x, y)| x.sub(y)).collect() }
    }

    pub fn scale(&self, s: &FieldElement) -> FieldMatrix {
        Matrix { n: self.n, data: self.data.iter().map(|x| x.mul(s)).collect() }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.n);
        for (a, b, v) in self.entries() {
            out.set(b, a, v.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl AlgMatrix {
    pub fn zeros(n: usize) -> Self {
        Matrix::filled(n, AlgebraElement::zero())
    }

    /// `M ⊗ x` with the matrix leg in the natural representation.
    pub fn tensor(m: &FieldMatrix, x: &AlgebraElement) -> AlgMatrix {
        Matrix { n: m.n, data: m.data.iter().map(|c| x.scale(c)).collect() }
    }

    pub fn add(&self, o: &AlgMatrix) -> AlgMatrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(x, y)| x.add(y)).collect() }
    }

    pub fn sub(&self, o: &AlgMatrix) -> AlgMatrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(x, y)| x.sub(y)).collect() }
    }
}

type Expansion = Arc<Vec<(Word, FieldElement, Word)>>;

/// Algebra context for one root datum: contraction constants and a memo of
/// `e-word · f-word` normal orderings.
pub struct Algebra {
    rd: RootData,
    contraction: Vec<FieldElement>,
    k_alpha: Vec<Mono>,
    memo: RwLock<HashMap<(Word, Word), Expansion>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.rd.ty)
    }
}

impl Algebra {
    pub fn new(rd: RootData) -> Self {
        let n = rd.rank();
        let mut contraction = Vec::with_capacity(n);
        let mut k_alpha = Vec::with_capacity(n);
        for i in 1..=n {
            let k = alpha_mono(&rd, i);
            let kp = FieldElement::mono(k);
            let km = FieldElement::mono(poly::mono_inv(&k));
            let d = contraction_exponent(&rd, i);
            let den = FieldElement::q_pow(d)
                .and_then(|a| Ok(a.sub(&FieldElement::q_pow(-d)?)))
                .expect("integral exponent");
            contraction.push(kp.sub(&km).div(&den).expect("nonzero denominator"));
            k_alpha.push(k);
        }
        Algebra { rd, contraction, k_alpha, memo: RwLock::new(HashMap::new()) }
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    /// `[e_i, f_i]`.
    pub fn contraction(&self, i: usize) -> &FieldElement {
        &self.contraction[i - 1]
    }

    /// `q^{h_{α_i}}` as a field element.
    pub fn k(&self, i: usize) -> FieldElement {
        FieldElement::mono(self.k_alpha[i - 1])
    }

    /// `q^{-h_{α_i}}`.
    pub fn k_inv(&self, i: usize) -> FieldElement {
        FieldElement::mono(poly::mono_inv(&self.k_alpha[i - 1]))
    }

    pub fn f(&self, i: usize) -> AlgebraElement {
        AlgebraElement::fword(&[i as u8])
    }

    pub fn e(&self, i: usize) -> AlgebraElement {
        AlgebraElement::eword(&[i as u8])
    }

    pub fn generator(&self, g: Gen) -> AlgebraElement {
        match g {
            Gen::E(i) => self.e(i),
            Gen::F(i) => self.f(i),
            Gen::K(i) => AlgebraElement::coeff(self.k(i)),
            Gen::KInv(i) => AlgebraElement::coeff(self.k_inv(i)),
        }
    }

    /// Weight of a word: `-Σ α` in the F sector, `+Σ α` in the E sector.
    pub fn word_weight(&self, sector: Sector, w: &[u8]) -> Weight {
        let mut acc = Weight::zero(self.rank());
        for &l in w {
            acc = &acc + self.rd.simple_root(l as usize);
        }
        match sector {
            Sector::F => -&acc,
            Sector::E => acc,
        }
    }

    fn term_weight(&self, f: &[u8], e: &[u8]) -> Weight {
        &self.word_weight(Sector::F, f) + &self.word_weight(Sector::E, e)
    }

    /// The common weight of all terms; `Ok(None)` for zero.
    pub fn weight_of(&self, x: &AlgebraElement) -> Result<Option<Weight>> {
        let mut found: Option<Weight> = None;
        for (f, _, e) in x.terms() {
            let w = self.term_weight(f, e);
            match &found {
                None => found = Some(w),
                Some(prev) if *prev != w => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(found)
    }

    /// `φ · x`, normal-ordered.
    pub fn mul_coeff_left(&self, phi: &FieldElement, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (f, c, e) in x.terms() {
            let shifted = phi.weight_shift(&self.word_weight(Sector::F, f));
            out.add_term(f.clone(), shifted.mul(c), e.clone());
        }
        out
    }

    /// `x · φ`, normal-ordered.
    pub fn mul_coeff_right(&self, x: &AlgebraElement, phi: &FieldElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (f, c, e) in x.terms() {
            let shifted = phi.weight_shift(&-&self.word_weight(Sector::E, e));
            out.add_term(f.clone(), c.mul(&shifted), e.clone());
        }
        out
    }

    /// Normal ordering of `e-word · f-word`.
    pub fn straighten(&self, ew: &[u8], fw: &[u8]) -> Expansion {
        if ew.is_empty() || fw.is_empty() {
            return Arc::new(vec![(fw.to_vec(), FieldElement::one(), ew.to_vec())]);
        }
        let key = (ew.to_vec(), fw.to_vec());
        if let Some(hit) = self.memo.read().unwrap().get(&key) {
            return hit.clone();
        }
        let (last, head) = ew.split_last().unwrap();
        let i = *last;
        // e_i · F = F e_i + Σ_{F[k] = i} F_{<k} F_{>k} · shift(H_i, wt F_{>k})
        let mut first: Vec<(Word, FieldElement, Word)> = vec![(fw.to_vec(), FieldElement::one(), vec![i])];
        for k in 0..fw.len() {
            if fw[k] != i {
                continue;
            }
            let mut rest = fw[..k].to_vec();
            rest.extend_from_slice(&fw[k + 1..]);
            let tail_wt = self.word_weight(Sector::F, &fw[k + 1..]);
            let c = self.contraction(i as usize).weight_shift(&tail_wt);
            first.push((rest, c, Vec::new()));
        }
        let mut acc: BTreeMap<(Word, Word), FieldElement> = BTreeMap::new();
        for (f1, c1, e1) in first {
            for (f2, c2, e2) in self.straighten(head, &f1).iter() {
                let c = c2.mul(&c1.weight_shift(&-&self.word_weight(Sector::E, e2)));
                let mut e = e2.clone();
                e.extend_from_slice(&e1);
                let slot = acc.entry((f2.clone(), e)).or_insert_with(FieldElement::zero);
                *slot = slot.add(&c);
            }
        }
        let out: Expansion =
            Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((f, e), c)| (f, c, e)).collect());
        self.memo.write().unwrap().insert(key, out.clone());
        out
    }

    /// Fully normal-ordered product.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut acc: BTreeMap<(Word, Word), FieldElement> = BTreeMap::new();
        for (f1, c1, e1) in x.terms() {
            for (f2, c2, e2) in y.terms() {
                for (fm, cm, em) in self.straighten(e1, f2).iter() {
                    let left = c1.weight_shift(&self.word_weight(Sector::F, fm));
                    let right = c2.weight_shift(&-&self.word_weight(Sector::E, em));
                    let c = left.mul(cm).mul(&right);
                    let mut f = f1.clone();
                    f.extend_from_slice(fm);
                    let mut e = em.clone();
                    e.extend_from_slice(e2);
                    let slot = acc.entry((f, e)).or_insert_with(FieldElement::zero);
                    *slot = slot.add(&c);
                }
            }
        }
        AlgebraElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn mul_all(&self, xs: &[&AlgebraElement]) -> AlgebraElement {
        xs.iter().fold(AlgebraElement::one(), |acc, x| self.mul(&acc, x))
    }

    /// `[x, y]_a = xy - a·yx` for a central scalar `a`.
    pub fn modified_commutator(&self, x: &AlgebraElement, y: &AlgebraElement, a: &FieldElement) -> AlgebraElement {
        self.mul(x, y).sub(&self.mul(y, x).scale(a))
    }

    /// The Chevalley involution: `f_i ↔ e_i`, `q^{h} ↦ q^{-h}`, applied as an
    /// algebra automorphism and re-normal-ordered.
    pub fn omega(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (f, c, e) in x.terms() {
            let left = AlgebraElement::eword(f);
            let mid = AlgebraElement::coeff(c.invert_k());
            let right = AlgebraElement::fword(e);
            out = out.add(&self.mul(&self.mul(&left, &mid), &right));
        }
        out
    }

    /// The natural representation of a generator (plus-sign convention).
    pub fn natural_rep(&self, g: Gen) -> FieldMatrix {
        let n = self.rd.dim();
        let mut m = FieldMatrix::zeros(n);
        match g {
            Gen::E(i) => {
                for p in self.rd.pairs(i) {
                    m.set(p.l, p.r, FieldElement::one());
                }
            }
            Gen::F(i) => {
                for p in self.rd.pairs(i) {
                    m.set(p.r, p.l, FieldElement::one());
                }
            }
            Gen::K(i) | Gen::KInv(i) => {
                let sign = if matches!(g, Gen::K(_)) { 1 } else { -1 };
                let alpha = self.rd.simple_root(i);
                for a in 1..=n {
                    let e = alpha.dot(self.rd.nat_weight(a)) * Rat::from_integer(sign);
                    m.set(a, a, FieldElement::q_pow(e).expect("integral pairing"));
                }
            }
        }
        m
    }

    /// A Cartan coefficient acting on the natural basis vector `a`.
    pub fn coeff_on_basis(&self, phi: &FieldElement, a: usize) -> FieldElement {
        let w = self.rd.nat_weight(a).clone();
        phi.map_monos(|m| {
            let mut out = poly::ONE_MONO;
            let mut acc = Rat::from_integer(m[0] as i64);
            for (i, x) in w.0.iter().enumerate() {
                acc += Rat::from_integer(m[i + 1] as i64) * x;
            }
            debug_assert!(acc.is_integer());
            out[0] = acc.to_integer() as i32;
            out
        })
    }

    /// `π(x)` for an arbitrary element.
    pub fn represent(&self, x: &AlgebraElement) -> FieldMatrix {
        let n = self.rd.dim();
        let mut total = FieldMatrix::zeros(n);
        for (f, c, e) in x.terms() {
            let mut m = FieldMatrix::identity(n);
            for &l in f {
                m = m.mul(&self.natural_rep(Gen::F(l as usize)));
            }
            let mut diag = FieldMatrix::zeros(n);
            for a in 1..=n {
                diag.set(a, a, self.coeff_on_basis(c, a));
            }
            m = m.mul(&diag);
            for &l in e {
                m = m.mul(&self.natural_rep(Gen::E(l as usize)));
            }
            total = total.add(&m);
        }
        total
    }

    /// `(π ⊗ id)Δ(x)`, or of `Δ^{op}(x)` when `opposite` is set.
    pub fn coproduct_pi(&self, g: Gen, opposite: bool) -> AlgMatrix {
        let n = self.rd.dim();
        let id = FieldMatrix::identity(n);
        let one = AlgebraElement::one();
        let t = AlgMatrix::tensor;
        match (g, opposite) {
            // Δ(e) = e ⊗ K + 1 ⊗ e
            (Gen::E(i), false) => t(&self.natural_rep(g), &self.generator(Gen::K(i))).add(&t(&id, &self.e(i))),
            (Gen::E(i), true) => t(&self.natural_rep(Gen::K(i)), &self.e(i)).add(&t(&self.natural_rep(g), &one)),
            // Δ(f) = f ⊗ 1 + K^{-1} ⊗ f
            (Gen::F(i), false) => t(&self.natural_rep(g), &one).add(&t(&self.natural_rep(Gen::KInv(i)), &self.f(i))),
            (Gen::F(i), true) => t(&id, &self.f(i)).add(&t(&self.natural_rep(g), &self.generator(Gen::KInv(i)))),
            (Gen::K(_) | Gen::KInv(_), _) => t(&self.natural_rep(g), &self.generator(g)),
        }
    }

    /// Matrix product with algebra-valued entries (`(X⊗x)(Y⊗y) = XY ⊗ xy`).
    pub fn mat_mul(&self, a: &AlgMatrix, b: &AlgMatrix) -> AlgMatrix {
        let n = a.dim();
        let mut out = AlgMatrix::zeros(n);
        for i in 1..=n {
            for k in 1..=n {
                let mut acc = AlgebraElement::zero();
                for j in 1..=n {
                    let x = a.at(i, j);
                    let y = b.at(j, k);
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&self.mul(x, y));
                    }
                }
                out.set(i, k, acc);
            }
        }
        out
    }

    /// The defining relations that involve no Serre relators, evaluated in the
    /// natural representation; returns the names of those that fail.
    pub fn check_rep_relations(&self) -> Vec<String> {
        let n = self.rank();
        let mut failures = Vec::new();
        for i in 1..=n {
            let k = self.natural_rep(Gen::K(i));
            let ki = self.natural_rep(Gen::KInv(i));
            if !k.mul(&ki).sub(&FieldMatrix::identity(self.rd.dim())).is_zero() {
                failures.push(format!("K{i} K{i}^-1 = 1"));
            }
            for j in 1..=n {
                let pair = self.rd.simple_root(i).dot(self.rd.simple_root(j));
                let s = FieldElement::q_pow(pair).expect("integral pairing");
                let sinv = FieldElement::q_pow(-pair).expect("integral pairing");
                let e = self.natural_rep(Gen::E(j));
                let f = self.natural_rep(Gen::F(j));
                if !k.mul(&e).mul(&ki).sub(&e.scale(&s)).is_zero() {
                    failures.push(format!("K{i} e{j} K{i}^-1"));
                }
                if !k.mul(&f).mul(&ki).sub(&f.scale(&sinv)).is_zero() {
                    failures.push(format!("K{i} f{j} K{i}^-1"));
                }
                let ei = self.natural_rep(Gen::E(i));
                let comm = ei.mul(&f).sub(&f.mul(&ei));
                let expect = if i == j {
                    let den = contraction_denominator(&self.rd, i);
                    k.sub(&ki).scale(&den.inv().expect("nonzero"))
                } else {
                    FieldMatrix::zeros(self.rd.dim())
                };
                if !comm.sub(&expect).is_zero() {
                    failures.push(format!("[e{i}, f{j}]"));
                }
            }
        }
        failures
    }
}

/// `K_α` for a simple root as a monomial.
fn alpha_mono(rd: &RootData, i: usize) -> Mono {
    let coords: Vec<i32> = rd.simple_root(i).0.iter().map(|x| (x * Rat::from_integer(2)).to_integer() as i32).collect();
    k_mono(&coords)
}

/// The exponent `d` in the contraction denominator `q^d - q^{-d}`: the half
/// squared length, except for the rescaled short root of type B where it is 1.
fn contraction_exponent(rd: &RootData, i: usize) -> Rat {
    if rd.family() == Family::B && i == rd.rank() {
        Rat::from_integer(1)
    } else {
        rd.half_norm(i)
    }
}

/// `q^d - q^{-d}` as in [`contraction_exponent`].
pub fn contraction_denominator(rd: &RootData, i: usize) -> FieldElement {
    let d = contraction_exponent(rd, i);
    FieldElement::q_pow(d).unwrap().sub(&FieldElement::q_pow(-d).unwrap())
}

/// A Laurent polynomial in `q` alone as a field element.
pub fn q_laurent(terms: &[(i32, i64)]) -> FieldElement {
    let mut p = Poly::zero();
    for &(e, c) in terms {
        p.add_term(poly::q_mono(2 * e), crate::coeff::Q::from_integer(c.into()));
    }
    FieldElement::from_poly(p)
}

/// Whether every entry of a matrix of field elements vanishes.
pub fn all_zero(m: &FieldMatrix) -> bool {
    m.entries().all(|(_, _, v)| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: Family, n: usize) -> Algebra {
        Algebra::new(RootData::new(f, n).unwrap())
    }

    #[test]
    fn e_f_distinct_letters_commute() {
        let a = alg(Family::B, 2);
        let p = a.mul(&a.e(1), &a.f(2));
        assert_eq!(p, AlgebraElement::term(vec![2], FieldElement::one(), vec![1]));
    }

    #[test]
    fn contraction_of_equal_letters() {
        let a = alg(Family::B, 2);
        for i in 1..=2 {
            let p = a.mul(&a.e(i), &a.f(i));
            let expect = AlgebraElement::term(vec![i as u8], FieldElement::one(), vec![i as u8])
                .add(&AlgebraElement::coeff(a.k(i).sub(&a.k_inv(i)).div(&FieldElement::q_minus_qinv()).unwrap()));
            assert_eq!(p, expect, "letter {i}");
        }
    }

    #[test]
    fn long_root_of_c_uses_q_squared() {
        let a = alg(Family::C, 2);
        let den = FieldElement::q_pow(Rat::from_integer(2)).unwrap().sub(&FieldElement::q_pow(Rat::from_integer(-2)).unwrap());
        assert_eq!(a.contraction(2), &a.k(2).sub(&a.k_inv(2)).div(&den).unwrap());
    }

    #[test]
    fn weights() {
        let a = alg(Family::B, 2);
        let w = a.weight_of(&a.f(1)).unwrap().unwrap();
        assert_eq!(w, Weight::from_ints(&[-1, 1]));
        assert_eq!(a.weight_of(&AlgebraElement::coeff(a.k(1))).unwrap().unwrap(), Weight::zero(2));
        assert!(a.weight_of(&a.f(1).add(&a.f(2))).is_err());
    }

    #[test]
    fn cartan_passes_generators() {
        // K_1 f_1 = q^{-2} f_1 K_1 in B_2 since (α_1, α_1) = 2.
        let a = alg(Family::B, 2);
        let lhs = a.mul(&AlgebraElement::coeff(a.k(1)), &a.f(1));
        let rhs = AlgebraElement::term(vec![1], a.k(1).mul(&FieldElement::q_pow(Rat::from_integer(-2)).unwrap()), vec![]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_is_involutive_and_swaps_sectors() {
        let a = alg(Family::C, 2);
        let x = a.mul_all(&[&a.f(1), &a.e(2), &AlgebraElement::coeff(a.k(1)), &a.f(2), &a.e(1)]);
        let w = a.omega(&x);
        assert_eq!(a.omega(&w), x);
        assert_eq!(a.omega(&a.f(1)), a.e(1));
        assert_eq!(a.omega(&AlgebraElement::coeff(a.k(1))), AlgebraElement::coeff(a.k_inv(1)));
    }

    #[test]
    fn natural_rep_examples() {
        let c = alg(Family::C, 2);
        let e2 = c.natural_rep(Gen::E(2));
        assert!(e2.at(2, 3).is_one());
        assert_eq!(e2.entries().filter(|(_, _, v)| !v.is_zero()).count(), 1);
        let b = alg(Family::B, 2);
        let f2 = b.natural_rep(Gen::F(2));
        assert!(f2.at(3, 2).is_one() && f2.at(4, 3).is_one());
        let k1 = b.natural_rep(Gen::K(1));
        assert_eq!(k1.at(1, 1), &FieldElement::q_pow(Rat::from_integer(1)).unwrap());
        for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3)] {
            let a = alg(f, n);
            assert!(a.check_rep_relations().is_empty(), "{f}{n}");
            for i in 1..=n {
                assert_eq!(a.natural_rep(Gen::F(i)).transpose(), a.natural_rep(Gen::E(i)));
            }
        }
    }

    #[test]
    fn represent_matches_products() {
        let a = alg(Family::D, 3);
        let x = a.mul(&a.e(1), &a.f(1));
        let lhs = a.represent(&x);
        let rhs = a.natural_rep(Gen::E(1)).mul(&a.natural_rep(Gen::F(1)));
        assert!(lhs.sub(&rhs).is_zero());
    }
}
