//! Verification modes and per-claim reports.

use serde::Serialize;

use crate::error::Result;
use crate::ncalg::AlgebraElement;
use crate::serre::{ComponentInfo, Serre};

/// Exact linear algebra over `Q(q^{1/2})`, or specialization at seeded
/// rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sampled(Vec<u64>),
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Sampled(_) => "sampled",
        }
    }

    pub fn seeds(&self) -> Vec<u64> {
        match self {
            Mode::Exact => Vec::new(),
            Mode::Sampled(s) => s.clone(),
        }
    }
}

/// One verified claim: `{claim, mode, component_degrees, dims, verdict, seeds}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claim: String,
    pub mode: String,
    pub component_degrees: Vec<Vec<u8>>,
    pub dims: Vec<usize>,
    pub verdict: bool,
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

const DETAIL_LIMIT: usize = 4000;

fn clip(s: String) -> String {
    if s.len() <= DETAIL_LIMIT {
        return s;
    }
    let mut end = DETAIL_LIMIT;
    while !s.is_char_boundary(end) {
        end -= 1;
    }
    format!("{}…", &s[..end])
}

impl Report {
    /// A claim decided without any Serre reduction (exact identities of
    /// coefficients, free-module computations, counts).
    pub fn coefficient(claim: impl Into<String>, verdict: bool, detail: Option<String>) -> Report {
        Report {
            claim: claim.into(),
            mode: "coefficient".into(),
            component_degrees: Vec::new(),
            dims: Vec::new(),
            verdict,
            seeds: Vec::new(),
            detail: detail.map(clip),
        }
    }

    fn from_components(claim: String, mode: &Mode, info: &[ComponentInfo], verdict: bool, detail: Option<String>) -> Report {
        Report {
            claim,
            mode: mode.name().into(),
            component_degrees: info.iter().map(|c| c.degree.clone()).collect(),
            dims: info.iter().map(|c| c.dim).collect(),
            verdict,
            seeds: mode.seeds(),
            detail: detail.map(clip),
        }
    }
}

/// Decide `x ∈ Σ_{α∈letters} Û e_α + Serre ideals` in the requested mode.
pub fn check_member(
    serre: &Serre,
    x: &AlgebraElement,
    letters: &[usize],
    mode: &Mode,
    claim: impl Into<String>,
) -> Result<Report> {
    let claim = claim.into();
    if x.is_zero() {
        return Ok(Report::from_components(claim, mode, &[], true, None));
    }
    match mode {
        Mode::Exact => {
            let m = serre.membership(x, letters)?;
            let detail = (!m.member).then(|| format!("residual: {}", m.residual));
            Ok(Report::from_components(claim, mode, &m.components, m.member, detail))
        }
        Mode::Sampled(seeds) => {
            let outs = serre.membership_sampled(x, letters, seeds)?;
            let verdict = outs.iter().all(|o| o.member);
            let info = outs.first().map(|o| o.components.clone()).unwrap_or_default();
            let detail = (!verdict).then(|| {
                let bad: Vec<u64> = outs.iter().filter(|o| !o.member).map(|o| o.seed).collect();
                format!("nonzero at seeds {bad:?}; element: {x}")
            });
            Ok(Report::from_components(claim, mode, &info, verdict, detail))
        }
    }
}

/// Whether every report passed.
pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.verdict)
}
