use qmick::mickelsson::{
    check_eta_identities, generator_set, lowering_algebra, lowering_free, partial_consistency_phi, partial_consistency_psi,
    printed_base_cases, raising_free, raising_stage1, raising_stage2,
};
use qmick::ncalg::Algebra;
use qmick::report::{Mode, Report};
use qmick::rmatrix::Tables;
use qmick::rootdata::{Family, RootData};
use qmick::serre::Serre;

fn setup(f: Family, n: usize) -> (Algebra, Serre, Tables) {
    let rd = RootData::new(f, n).unwrap();
    let alg = Algebra::new(rd.clone());
    let tables = Tables::new(&alg).unwrap();
    (alg, Serre::new(&rd), tables)
}

fn failures(rs: &[Report]) -> Vec<String> {
    rs.iter().filter(|r| !r.verdict).map(|r| format!("{}: {}", r.claim, r.detail.clone().unwrap_or_default())).collect()
}

const SMALL: [(Family, usize); 3] = [(Family::B, 2), (Family::C, 2), (Family::D, 3)];

#[test]
fn eta_identities_everywhere() {
    for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
        let (count, bad) = check_eta_identities(&RootData::new(f, n).unwrap());
        assert!(count > 0 && bad.is_empty(), "{f:?}{n}: {bad:?}");
    }
}

#[test]
fn free_module_routes_vanish() {
    for (f, n) in SMALL {
        let rd = RootData::new(f, n).unwrap();
        let bad = failures(&lowering_free(&rd).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} lowering: {bad:?}");
        let bad = failures(&raising_free(&rd).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} raising: {bad:?}");
    }
}

#[test]
fn partial_consistency_small() {
    for (f, n) in SMALL {
        let (alg, serre, t) = setup(f, n);
        let bad = failures(&partial_consistency_phi(&alg, &serre, &t, &Mode::Exact).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} Φ: {bad:#?}");
        let bad = failures(&partial_consistency_psi(&alg, &serre, &t, &Mode::Exact).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} Ψ: {bad:#?}");
    }
}

#[test]
fn lowering_algebra_route_small() {
    for (f, n) in [(Family::B, 2), (Family::C, 2)] {
        let (alg, serre, t) = setup(f, n);
        let bad = failures(&lowering_algebra(&alg, &serre, &t, &Mode::Exact).unwrap());
        assert!(bad.is_empty(), "{f:?}{n}: {bad:#?}");
    }
}

#[test]
fn raising_algebra_route_small() {
    for (f, n) in [(Family::B, 2), (Family::C, 2)] {
        let (alg, serre, t) = setup(f, n);
        let bad = failures(&raising_stage1(&alg, &serre, &t, &Mode::Exact).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} stage 1: {bad:#?}");
        let bad = failures(&raising_stage2(&alg, &serre, &t, &Mode::Exact).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} stage 2: {bad:#?}");
    }
}

#[test]
fn base_cases_verbatim() {
    for (f, n) in SMALL {
        let (alg, _, t) = setup(f, n);
        let bad = failures(&printed_base_cases(&alg, &t).unwrap());
        assert!(bad.is_empty(), "{f:?}{n}: {bad:?}");
    }
}

#[test]
fn census_sizes() {
    for ((f, n), want) in [((Family::C, 2), 7), ((Family::B, 2), 7), ((Family::D, 3), 9), ((Family::C, 3), 11)] {
        let (alg, _, t) = setup(f, n);
        assert_eq!(generator_set(&alg, &t).unwrap().len(), want, "{f:?}{n}");
    }
}

#[test]
fn membership_checks_reject_wrong_candidates() {
    use qmick::mickelsson::{z_lower, z_upper, FreeModElement, Space};
    use qmick::report::check_member;
    let (alg, serre, t) = setup(Family::B, 2);
    let rd = alg.root_data().clone();
    // the route part of z_{-2} dropped
    let wrong = FreeModElement::route(Space::Phi(3), vec![1, 3]).project(&alg, &t);
    let x = alg.mul(&alg.e(2), &wrong);
    assert!(!check_member(&serre, &x, &[2], &Mode::Exact, "").unwrap().verdict);
    assert!(!check_member(&serre, &x, &[2], &Mode::Sampled(vec![1, 2, 3]), "").unwrap().verdict);
    // a B coefficient sign flipped in z_1
    let z = z_upper(&rd, 2).unwrap();
    let mut flipped = z.clone();
    let key = flipped.terms.keys().nth(1).unwrap().clone();
    let c = flipped.terms[&key].neg();
    flipped.terms.insert(key, c);
    let x = alg.mul(&alg.e(2), &flipped.project(&alg, &t));
    assert!(!check_member(&serre, &x, &[2], &Mode::Exact, "").unwrap().verdict);
    // and the correct ones are nonzero before reduction
    let x = alg.mul(&alg.e(2), &z_lower(&rd, 3).unwrap().project(&alg, &t));
    assert!(!x.is_zero());
}

#[test]
fn rank_three_sampled() {
    let mode = Mode::Sampled(vec![11, 12, 13]);
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 3)] {
        let (alg, serre, t) = setup(f, n);
        let start = std::time::Instant::now();
        let bad = failures(&lowering_algebra(&alg, &serre, &t, &mode).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} lowering: {bad:#?}");
        let bad = failures(&raising_stage1(&alg, &serre, &t, &mode).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} stage 1: {bad:#?}");
        let bad = failures(&raising_stage2(&alg, &serre, &t, &mode).unwrap());
        assert!(bad.is_empty(), "{f:?}{n} stage 2: {bad:#?}");
        let rd = alg.root_data();
        assert!(failures(&lowering_free(rd).unwrap()).is_empty());
        assert!(failures(&raising_free(rd).unwrap()).is_empty());
        eprintln!("{f:?}{n}: {:?}", start.elapsed());
    }
}
