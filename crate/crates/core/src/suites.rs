//! Named verification suites over one type/rank instance.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mickelsson::{
    chain_annihilation, check_eta_identities, lowering_algebra, lowering_free, partial_consistency_phi,
    partial_consistency_psi, printed_base_cases, raising_free, raising_stage1, raising_stage2,
};
use crate::ncalg::{all_zero, Algebra, Sector};
use crate::report::{Mode, Report};
use crate::rmatrix::{
    check_intertwiner, check_simple_shape, closed_form_table, commutator_identity, compare_tables, special_entry,
    Identity, Tables,
};
use crate::rootdata::{Family, RootData};
use crate::serre::{b_quartic, relator_element, serre_relators, Serre};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Eta,
    Chains,
    Partial,
    Rtable,
    Intertwiner,
    Commutator,
    Lowering,
    Raising,
    All,
}

impl Suite {
    /// Every suite `All` expands to, in report order.
    pub const PARTS: [Suite; 8] = [
        Suite::Eta,
        Suite::Chains,
        Suite::Partial,
        Suite::Rtable,
        Suite::Intertwiner,
        Suite::Commutator,
        Suite::Lowering,
        Suite::Raising,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eta => "eta",
            Suite::Chains => "chains",
            Suite::Partial => "partial",
            Suite::Rtable => "rtable",
            Suite::Intertwiner => "intertwiner",
            Suite::Commutator => "commutator",
            Suite::Lowering => "lowering",
            Suite::Raising => "raising",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// Everything a suite needs for one type/rank instance.
pub struct Instance {
    pub alg: Algebra,
    pub serre: Serre,
    pub tables: Tables,
}

impl Instance {
    pub fn new(family: Family, rank: usize, dim_cap: usize) -> Result<Instance> {
        let rd = RootData::new(family, rank)?;
        let alg = Algebra::new(rd.clone());
        let tables = Tables::new(&alg)?;
        Ok(Instance { alg, serre: Serre::with_cap(&rd, dim_cap), tables })
    }

    pub fn root_data(&self) -> &RootData {
        self.alg.root_data()
    }
}

/// Every defining relation, Serre relators included, evaluated on the
/// natural representation.
pub fn natural_rep_soundness(alg: &Algebra) -> Vec<Report> {
    let rd = alg.root_data();
    let mut out: Vec<Report> = alg
        .check_rep_relations()
        .into_iter()
        .map(|name| Report::coefficient(format!("π respects {name}"), false, None))
        .collect();
    if out.is_empty() {
        out.push(Report::coefficient("π respects Cartan and contraction relations", true, None));
    }
    for r in serre_relators(rd) {
        for sector in [Sector::F, Sector::E] {
            let ok = all_zero(&alg.represent(&relator_element(&r, sector)));
            out.push(Report::coefficient(format!("π kills the ({},{}) {sector:?}-relator", r.i, r.j), ok, None));
        }
    }
    if let Some(x) = b_quartic(rd) {
        for (name, y) in [("f", x.clone()), ("e", alg.omega(&x))] {
            out.push(Report::coefficient(format!("π kills the {name}-quartic"), all_zero(&alg.represent(&y)), None));
        }
    }
    out
}

fn eta_reports(rd: &RootData) -> Vec<Report> {
    let (count, bad) = check_eta_identities(rd);
    let detail = (!bad.is_empty()).then(|| bad.join("; "));
    vec![Report::coefficient(format!("η identities ({count} instances)"), bad.is_empty(), detail)]
}

fn chain_reports(rd: &RootData) -> Result<Vec<Report>> {
    Ok(chain_annihilation(rd)?
        .into_iter()
        .map(|(s, (count, bad))| {
            let detail = (!bad.is_empty()).then(|| bad.join("; "));
            Report::coefficient(format!("{s:?} chains killed ({count} instances)"), bad.is_empty(), detail)
        })
        .collect())
}

fn rtable_reports(inst: &Instance, mode: &Mode) -> Result<Vec<Report>> {
    let alg = &inst.alg;
    let rd = alg.root_data();
    let closed = closed_form_table(alg, &inst.tables.f, false);
    let mut out = compare_tables(&inst.serre, &closed, &inst.tables.f, mode)?;
    let n = rd.rank();
    let got = inst.tables.f.get(n, rd.prime(n));
    let want = special_entry(alg);
    out.push(Report::coefficient(
        format!("f({n},{}) special entry", rd.prime(n)),
        got == want,
        (got != want).then(|| format!("recursion gives {got}")),
    ));
    let l = check_simple_shape(alg, &inst.tables.f);
    out.push(Report::coefficient(
        "Ř shape modulo entries above the superdiagonal",
        l.failures.is_empty(),
        (!l.failures.is_empty()).then(|| format!("{:?}", l.failures)),
    ));
    Ok(out)
}

fn intertwiner_reports(inst: &Instance, mode: &Mode) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for which in [Identity::F, Identity::E, Identity::K] {
        for a in 1..=inst.alg.rank() {
            out.push(check_intertwiner(&inst.alg, &inst.serre, &inst.tables.f, which, a, mode)?);
        }
    }
    Ok(out)
}

fn commutator_reports(inst: &Instance, mode: &Mode) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for a in 1..=inst.alg.rank() {
        out.extend(commutator_identity(&inst.alg, &inst.serre, &inst.tables.f, a, mode)?);
    }
    Ok(out)
}

/// Run one suite; `All` runs its parts concurrently and concatenates the
/// reports in [`Suite::PARTS`] order.
pub fn run(inst: &Instance, suite: Suite, mode: &Mode) -> Result<Vec<Report>> {
    let (alg, serre, t) = (&inst.alg, &inst.serre, &inst.tables);
    let rd = alg.root_data();
    match suite {
        Suite::All => {
            let parts: Vec<Vec<Report>> =
                Suite::PARTS.par_iter().map(|s| run(inst, *s, mode)).collect::<Result<_>>()?;
            Ok(parts.concat())
        }
        Suite::Eta => Ok(eta_reports(rd)),
        Suite::Chains => chain_reports(rd),
        Suite::Partial => {
            let mut out = partial_consistency_phi(alg, serre, t, mode)?;
            out.extend(partial_consistency_psi(alg, serre, t, mode)?);
            Ok(out)
        }
        Suite::Rtable => rtable_reports(inst, mode),
        Suite::Intertwiner => intertwiner_reports(inst, mode),
        Suite::Commutator => commutator_reports(inst, mode),
        Suite::Lowering => {
            let mut out = lowering_free(rd)?;
            out.extend(lowering_algebra(alg, serre, t, mode)?);
            Ok(out)
        }
        Suite::Raising => {
            let mut out = raising_free(rd)?;
            out.extend(raising_stage1(alg, serre, t, mode)?);
            out.extend(raising_stage2(alg, serre, t, mode)?);
            out.extend(printed_base_cases(alg, t)?);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::PARTS.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn natural_rep_small() {
        let alg = Algebra::new(RootData::new(Family::B, 2).unwrap());
        let rs = natural_rep_soundness(&alg);
        assert!(rs.iter().all(|r| r.verdict), "{rs:#?}");
        assert!(rs.iter().any(|r| r.claim.contains("quartic")));
    }
}
