mod common;

use proptest::prelude::*;
use qmick::coeff::FieldElement;
use qmick::ncalg::{Algebra, AlgebraElement};
use qmick::rootdata::{Family, RootData};

use common::{corpus, field_element, monomial, verdicts};

fn field() -> impl Strategy<Value = FieldElement> {
    (prop::collection::vec((-3i64..=3, -2i32..=2, -1i32..=1, -1i32..=1), 0..4), prop::collection::vec(0usize..4, 0..3))
        .prop_map(|(num, den)| field_element(&num, &den))
}

fn b2() -> Algebra {
    Algebra::new(RootData::new(Family::B, 2).unwrap())
}

/// A short normal-ordered element of the B_2 algebra with monomial coefficients.
fn element() -> impl Strategy<Value = AlgebraElement> {
    let term = (
        prop::collection::vec(1u8..=2, 0..3),
        (-2i64..=2, -1i32..=1, -1i32..=1, -1i32..=1),
        prop::collection::vec(1u8..=2, 0..3),
    );
    prop::collection::vec(term, 1..3).prop_map(|ts| {
        let mut x = AlgebraElement::zero();
        for (f, (c, a, b1, b2), e) in ts {
            x.add_term(f, monomial(c, a, &[b1, b2]), e);
        }
        x
    })
}

/// A single normal-ordered word with a monomial coefficient (weight-homogeneous).
fn homogeneous() -> impl Strategy<Value = AlgebraElement> {
    (prop::collection::vec(1u8..=2, 0..3), (1i64..=2, -1i32..=1, -1i32..=1), prop::collection::vec(1u8..=2, 0..3))
        .prop_map(|(f, (c, a, b), e)| AlgebraElement::term(f, monomial(c, a, &[b, 0]), e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_axioms(a in field(), b in field(), c in field()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&FieldElement::one()), a.clone());
    }

    #[test]
    fn field_inverses(a in field()) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        let alg = b2();
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn weights_add(x in homogeneous(), y in homogeneous()) {
        let alg = b2();
        let p = alg.mul(&x, &y);
        prop_assume!(!p.is_zero());
        let wx = alg.weight_of(&x).unwrap().unwrap();
        let wy = alg.weight_of(&y).unwrap().unwrap();
        prop_assert_eq!(alg.weight_of(&p).unwrap().unwrap(), &wx + &wy);
    }

    #[test]
    fn omega_is_an_involutive_automorphism(x in element(), y in element()) {
        let alg = b2();
        prop_assert_eq!(alg.omega(&alg.omega(&x)), x.clone());
        prop_assert_eq!(alg.omega(&alg.mul(&x, &y)), alg.mul(&alg.omega(&x), &alg.omega(&y)));
    }
}

#[test]
fn exact_and_sampled_agree_on_corpus() {
    let items = corpus(100, 2024);
    let (mut members, mut rejected) = (0, 0);
    for (k, item) in items.iter().enumerate() {
        let (exact, sampled) = verdicts(item, &[1, 2, 3]);
        assert_eq!(exact, sampled, "item {k}: {}", item.x);
        rejected += usize::from(!exact);
        if item.built_as_member {
            assert!(exact, "item {k} was built inside the ideal: {}", item.x);
            members += 1;
        }
    }
    assert!(members > 20 && rejected > 20, "{members} members, {rejected} rejected");
}
