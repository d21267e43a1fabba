//! Shared generators for the property tests and the acceptance run.
#![allow(dead_code)]

use qmick::coeff::{k_mono, FieldElement, Poly, Q};
use qmick::ncalg::{Algebra, AlgebraElement, Sector};
use qmick::rootdata::{Family, RootData};
use qmick::serre::{relator_element, serre_relators, Serre};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `c · q^{a} K_1^{b_1} K_2^{b_2}` with integer exponents.
pub fn monomial(c: i64, a: i32, b: &[i32]) -> FieldElement {
    let mut m = k_mono(&b.iter().map(|x| 2 * x).collect::<Vec<_>>());
    m[0] = 2 * a;
    let mut p = Poly::zero();
    p.add_term(m, Q::from_integer(c.into()));
    FieldElement::from_poly(p)
}

/// Denominator atoms the random field elements draw from.
pub fn atom(k: usize) -> FieldElement {
    match k % 4 {
        0 => monomial(1, 2, &[0, 0]).sub(&FieldElement::one()),
        1 => monomial(1, 0, &[2, 0]).sub(&monomial(1, 2, &[0, 0])),
        2 => monomial(1, 1, &[1, 1]).sub(&FieldElement::one()),
        _ => monomial(1, 0, &[0, 2]).add(&monomial(3, 0, &[0, 0])),
    }
}

/// A field element from numerator terms `(coef, qExp, k1, k2)` and a list of
/// denominator atoms.
pub fn field_element(num: &[(i64, i32, i32, i32)], den: &[usize]) -> FieldElement {
    let mut x = FieldElement::zero();
    for &(c, a, b1, b2) in num {
        x = x.add(&monomial(c, a, &[b1, b2]));
    }
    den.iter().fold(x, |acc, &k| acc.div(&atom(k)).expect("atoms are nonzero"))
}

/// A random word in the letters `1..=rank`.
pub fn word(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(1..=rank as u8)).collect()
}

fn small_coeff(rng: &mut ChaCha8Rng, rank: usize) -> FieldElement {
    let ks: Vec<i32> = (0..rank).map(|_| rng.gen_range(-1..=1)).collect();
    monomial(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-2..=2), &ks)
}

fn word_elem(sector: Sector, w: Vec<u8>, c: FieldElement) -> AlgebraElement {
    match sector {
        Sector::F => AlgebraElement::term(w, c, vec![]),
        Sector::E => AlgebraElement::term(vec![], c, w),
    }
}

/// One membership question: is `x` in the Serre ideal plus the left ideal
/// generated by `letters`?
pub struct CorpusItem {
    pub family: Family,
    pub rank: usize,
    pub x: AlgebraElement,
    pub letters: Vec<usize>,
    pub built_as_member: bool,
}

/// A deterministic mix of members (sums of `c·u·relator·v`, plus multiples of
/// the left-ideal letters) and perturbed non-members, over several types.
pub fn corpus(count: usize, seed: u64) -> Vec<CorpusItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances = [(Family::B, 2), (Family::C, 2), (Family::D, 3), (Family::B, 3)];
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (family, rank) = instances[k % instances.len()];
        let rd = RootData::new(family, rank).unwrap();
        let alg = Algebra::new(rd.clone());
        let rels = serre_relators(&rd);
        let sector = if rng.gen_bool(0.5) { Sector::F } else { Sector::E };
        let rel = &rels[rng.gen_range(0..rels.len())];
        let (lu, lv) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
        let (u, v) = (word(&mut rng, rank, lu), word(&mut rng, rank, lv));
        let c = small_coeff(&mut rng, rank);
        let r = relator_element(rel, sector);
        let mut x = alg.mul_all(&[&word_elem(sector, u.clone(), FieldElement::one()), &r, &word_elem(sector, v.clone(), c)]);
        if rng.gen_bool(0.5) {
            // a second relator multiple of the same multidegree
            let c2 = small_coeff(&mut rng, rank);
            let y = alg.mul_all(&[&word_elem(sector, v, FieldElement::one()), &r, &word_elem(sector, u.clone(), c2)]);
            x = x.add(&y);
        }
        let mut letters = Vec::new();
        if sector == Sector::E && rng.gen_bool(0.5) {
            let a = rng.gen_range(1..=rank);
            letters.push(a);
            let len = rel.deg.iter().map(|&d| d as usize).sum::<usize>() + lu + lv;
            let mut w = word(&mut rng, rank, len.saturating_sub(1));
            w.push(a as u8);
            x = x.add(&word_elem(Sector::E, w, small_coeff(&mut rng, rank)));
        }
        let member = rng.gen_bool(0.5);
        if !member {
            let len: usize = x.terms().next().map(|(f, _, e)| f.len() + e.len()).unwrap_or(1);
            let w = word(&mut rng, rank, len);
            x = x.add(&word_elem(sector, w, small_coeff(&mut rng, rank)));
        }
        out.push(CorpusItem { family, rank, x, letters, built_as_member: member });
    }
    out
}

/// Exact and sampled verdicts for one corpus item.
pub fn verdicts(item: &CorpusItem, seeds: &[u64]) -> (bool, bool) {
    let rd = RootData::new(item.family, item.rank).unwrap();
    let serre = Serre::new(&rd);
    let exact = serre.membership(&item.x, &item.letters).unwrap().member;
    let sampled = serre.membership_sampled(&item.x, &item.letters, seeds).unwrap().iter().all(|o| o.member);
    (exact, sampled)
}

/// A random field element of the same shape as the property-test strategy.
pub fn random_field(rng: &mut ChaCha8Rng) -> FieldElement {
    let num: Vec<(i64, i32, i32, i32)> = (0..rng.gen_range(0..4))
        .map(|_| (rng.gen_range(-3..=3), rng.gen_range(-2..=2), rng.gen_range(-1..=1), rng.gen_range(-1..=1)))
        .collect();
    let den: Vec<usize> = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..4)).collect();
    field_element(&num, &den)
}

/// A random short normal-ordered element in `rank` letters.
pub fn random_element(rng: &mut ChaCha8Rng, rank: usize) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..3) {
        let (lf, le) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let f = word(rng, rank, lf);
        let e = word(rng, rank, le);
        x.add_term(f, small_coeff(rng, rank), e);
    }
    x
}
