//! Truncated R-matrix entry tables: `f_ij` (lower sector) and their
//! ω-images `g_ji` (upper sector), built independently from the closed-form
//! nested commutators and from the intertwining recursion, with the checks
//! tying them together.
//!
//! Normalization: `Ř = 1⊗1 + (q - q^{-1}) Σ_{i<j} e_ij ⊗ f_ij`; inside the
//! recursion the unscaled entries `R_ij` (with `R_ii = 1`) are used.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::coeff::{q_int, FieldElement, Q};
use crate::error::{Error, Result};
use crate::ncalg::{q_laurent, Algebra, AlgebraElement, Sector};
use crate::render::{algebra_json, algebra_latex};
use crate::report::{check_member, Mode, Report};
use crate::rootdata::{Family, Rat, RootData};
use crate::serre::Serre;

/// A matrix position `(i, j)` in `1..=N`.
pub type Pos = (usize, usize);

/// An entry table. F-sector keys are `(i, j)`, `i < j`, holding `f_ij`;
/// E-sector keys are `(j, i)`, `j > i`, holding `g_ji`.
#[derive(Clone, Debug, PartialEq)]
pub struct RTable {
    pub sector: Sector,
    pub dim: usize,
    pub entries: BTreeMap<Pos, AlgebraElement>,
}

impl RTable {
    /// The entry at a position; zero where the table has none.
    pub fn get(&self, i: usize, j: usize) -> AlgebraElement {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(AlgebraElement::zero)
    }

    pub fn to_json(&self, rank: usize) -> Value {
        let mut m = Map::new();
        for ((i, j), x) in &self.entries {
            m.insert(format!("({i},{j})"), algebra_json(x, rank));
        }
        let sector = match self.sector {
            Sector::F => "F",
            Sector::E => "E",
        };
        json!({ "sector": sector, "entries": m })
    }

    pub fn to_latex(&self) -> String {
        let letter = match self.sector {
            Sector::F => "f",
            Sector::E => "g",
        };
        let mut out = String::from("\\begin{align*}\n");
        for ((i, j), x) in &self.entries {
            out.push_str(&format!("{letter}_{{{i}{j}}} &= {} \\\\\n", algebra_latex(x)));
        }
        out.push_str("\\end{align*}\n");
        out
    }
}

/// Height of `natWeight(i) - natWeight(j)` when it is a nonzero
/// nonnegative combination of simple roots.
pub fn position_height(rd: &RootData, i: usize, j: usize) -> Option<usize> {
    let w = rd.nat_weight(i) - rd.nat_weight(j);
    rd.is_positive_combination(&w).then(|| rd.height(&w).to_integer() as usize)
}

fn q_pow_int(e: i64) -> FieldElement {
    q_laurent(&[(e as i32, 1)])
}

fn q_pow_rat(e: Rat) -> FieldElement {
    FieldElement::q_pow(e).expect("integral pairing")
}

/// `q - q^{-1}`.
pub fn q_minus_qinv() -> FieldElement {
    FieldElement::q_minus_qinv()
}

/// The entries at simple positions: `f_α` at every `(l, r) ∈ P(α)`, except
/// `[2]_q f_n` for the long root of type C.
pub fn simple_entries(rd: &RootData) -> BTreeMap<Pos, AlgebraElement> {
    let n = rd.rank();
    let mut out = BTreeMap::new();
    for a in 1..=n {
        let f = AlgebraElement::fword(&[a as u8]);
        let v = if rd.family() == Family::C && a == n { f.scale(&q_int(2)) } else { f };
        for p in rd.pairs(a) {
            out.insert((p.l, p.r), v.clone());
        }
    }
    out
}

/// Unscaled entry `R_ab` from an `f`-table.
fn r_entry(table: &BTreeMap<Pos, AlgebraElement>, a: usize, b: usize) -> AlgebraElement {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Equal => AlgebraElement::one(),
        Greater => AlgebraElement::zero(),
        Less => table.get(&(a, b)).map(|x| x.scale(&q_minus_qinv())).unwrap_or_else(AlgebraElement::zero),
    }
}

/// One scalar equation of the f-intertwiner at `(a, b, α)`:
/// `Σ_{(l,a)∈P(α)} R_lb - Σ_{(b,r)∈P(α)} R_ar = q^{-(α,w_b)} R_ab f_α - q^{(α,w_a)} f_α R_ab`.
/// Returns the signed left-hand positions and the right-hand side.
fn f_equation(
    alg: &Algebra,
    r_ab: &AlgebraElement,
    a: usize,
    b: usize,
    alpha: usize,
) -> (Vec<(i64, Pos)>, AlgebraElement) {
    let rd = alg.root_data();
    let mut lhs = Vec::new();
    for p in rd.pairs(alpha) {
        if p.r == a {
            lhs.push((1, (p.l, b)));
        }
        if p.l == b {
            lhs.push((-1, (a, p.r)));
        }
    }
    let al = rd.simple_root(alpha);
    let fa = alg.f(alpha);
    let rhs = alg
        .mul(r_ab, &fa)
        .scale(&q_pow_rat(-al.dot(rd.nat_weight(b))))
        .sub(&alg.mul(&fa, r_ab).scale(&q_pow_rat(al.dot(rd.nat_weight(a)))));
    (lhs, rhs)
}

struct Row {
    coeffs: BTreeMap<usize, Q>,
    rhs: AlgebraElement,
}

/// Solve `M X = Y` for algebra-valued unknowns by Gauss–Jordan elimination
/// over `Q`; `None` for an unknown without a pivot.
fn solve_rows(mut rows: Vec<Row>, unknowns: usize) -> Vec<Option<AlgebraElement>> {
    let mut pivot_of = vec![None; unknowns];
    let mut done = 0;
    for (col, slot) in pivot_of.iter_mut().enumerate() {
        let Some(p) = (done..rows.len()).find(|&k| rows[k].coeffs.get(&col).is_some_and(|c| !c.is_zero())) else {
            continue;
        };
        rows.swap(done, p);
        let inv = rows[done].coeffs[&col].recip();
        let inv_fe = FieldElement::from_q(inv.clone());
        rows[done].coeffs = rows[done].coeffs.iter().map(|(k, c)| (*k, c * &inv)).collect();
        rows[done].rhs = rows[done].rhs.scale(&inv_fe);
        let (pc, pr) = (rows[done].coeffs.clone(), rows[done].rhs.clone());
        for (k, row) in rows.iter_mut().enumerate() {
            if k == done {
                continue;
            }
            if let Some(f) = row.coeffs.get(&col).cloned() {
                if f.is_zero() {
                    continue;
                }
                for (c, v) in &pc {
                    let e = row.coeffs.entry(*c).or_insert_with(Q::zero);
                    *e -= &f * v;
                }
                row.coeffs.retain(|_, v| !v.is_zero());
                row.rhs = row.rhs.sub(&pr.scale(&FieldElement::from_q(f)));
            }
        }
        *slot = Some(done);
        done += 1;
    }
    pivot_of.into_iter().map(|p| p.map(|k| rows[k].rhs.clone())).collect()
}

/// Solve the f-intertwiner height by height, starting at `start` with all
/// lower entries given in `known` (an `f`-table). Positions whose weight is
/// not a positive combination are zero and never unknown.
fn solve_recursion(alg: &Algebra, mut known: BTreeMap<Pos, AlgebraElement>, start: usize) -> Result<BTreeMap<Pos, AlgebraElement>> {
    let rd = alg.root_data();
    let big_n = rd.dim();
    let n = rd.rank();
    let mut by_height: BTreeMap<usize, Vec<Pos>> = BTreeMap::new();
    for i in 1..=big_n {
        for j in i + 1..=big_n {
            if let Some(h) = position_height(rd, i, j) {
                by_height.entry(h).or_default().push((i, j));
            }
        }
    }
    let max_h = by_height.keys().copied().max().unwrap_or(0);
    let inv = q_minus_qinv().inv()?;
    for h in start..=max_h {
        let targets: Vec<Pos> =
            by_height.get(&h).into_iter().flatten().copied().filter(|p| !known.contains_key(p)).collect();
        if targets.is_empty() {
            continue;
        }
        let index: BTreeMap<Pos, usize> = targets.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let mut rows = Vec::new();
        for a in 1..=big_n {
            for b in 1..=big_n {
                for alpha in 1..=n {
                    let r_ab = r_entry(&known, a, b);
                    let (lhs, rhs) = f_equation(alg, &r_ab, a, b, alpha);
                    let mut coeffs = BTreeMap::new();
                    let mut rhs = rhs;
                    for (s, p) in lhs {
                        if let Some(&k) = index.get(&p) {
                            *coeffs.entry(k).or_insert_with(Q::zero) += Q::from_integer(s.into());
                        } else {
                            let v = r_entry(&known, p.0, p.1);
                            rhs = if s > 0 { rhs.sub(&v) } else { rhs.add(&v) };
                        }
                    }
                    coeffs.retain(|_, v: &mut Q| !v.is_zero());
                    if !coeffs.is_empty() {
                        rows.push(Row { coeffs, rhs });
                    }
                }
            }
        }
        let solved = solve_rows(rows, targets.len());
        for (p, x) in targets.iter().zip(solved) {
            let Some(x) = x else {
                return Err(Error::Unsolvable {
                    weight: (rd.nat_weight(p.0) - rd.nat_weight(p.1)).to_string(),
                    detail: format!("entry {p:?} at height {h} has no pivot among the intertwiner equations"),
                });
            };
            known.insert(*p, x.scale(&inv));
        }
    }
    Ok(known)
}

fn full_table(rd: &RootData, entries: BTreeMap<Pos, AlgebraElement>) -> RTable {
    let big_n = rd.dim();
    let mut all = BTreeMap::new();
    for i in 1..=big_n {
        for j in i + 1..=big_n {
            all.insert((i, j), entries.get(&(i, j)).cloned().unwrap_or_else(AlgebraElement::zero));
        }
    }
    RTable { sector: Sector::F, dim: big_n, entries: all }
}

/// The table from the intertwining recursion, seeded with the simple entries.
pub fn recursive_table(alg: &Algebra) -> Result<RTable> {
    let seed = simple_entries(alg.root_data());
    Ok(full_table(alg.root_data(), solve_recursion(alg, seed, 2)?))
}

/// The recursion run from height one with no seed; its height-one entries
/// must reproduce [`simple_entries`].
pub fn recursive_table_unseeded(alg: &Algebra) -> Result<RTable> {
    Ok(full_table(alg.root_data(), solve_recursion(alg, BTreeMap::new(), 1)?))
}

/// How an entry of the closed-form table was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A simple position or one of the special `(n, n')` entries.
    Simple,
    /// A nested modified commutator formula.
    Formula,
    /// No formula covers the position; the recursion supplies it.
    Deferred,
    /// The weight is not a positive combination, so the entry is zero.
    ZeroWeight,
}

#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub table: RTable,
    pub provenance: BTreeMap<Pos, Provenance>,
}

impl ClosedForm {
    pub fn positions(&self, p: Provenance) -> BTreeSet<Pos> {
        self.provenance.iter().filter(|(_, v)| **v == p).map(|(k, _)| *k).collect()
    }
}

/// Closed forms for every entry. With `extended`, the B-type `f_{ij'}`
/// formula is also applied when one of `i, j` equals `n`, and the D-type
/// `f_{in'}`, `f_{ni'}` formulas also at `i = n-2`; these readings go beyond
/// the printed index ranges and are tested, not assumed.
pub fn closed_form_table(alg: &Algebra, recursive: &RTable, extended: bool) -> ClosedForm {
    let rd = alg.root_data();
    let (n, big_n) = (rd.rank(), rd.dim());
    let p = |x: usize| big_n + 1 - x;
    let simple = simple_entries(rd);
    let qbar = |k: i64| q_pow_int(-k);
    let f = |i: usize| alg.f(i);
    let mut positions: Vec<(usize, Pos)> = Vec::new();
    let mut provenance = BTreeMap::new();
    let mut table: BTreeMap<Pos, AlgebraElement> = BTreeMap::new();
    for i in 1..=big_n {
        for j in i + 1..=big_n {
            match position_height(rd, i, j) {
                Some(h) => positions.push((h, (i, j))),
                None => {
                    provenance.insert((i, j), Provenance::ZeroWeight);
                    table.insert((i, j), AlgebraElement::zero());
                }
            }
        }
    }
    positions.sort();
    for (_, (i, j)) in positions {
        let get = |a: usize, b: usize| table.get(&(a, b)).cloned().unwrap_or_else(AlgebraElement::zero);
        let comm = |x: AlgebraElement, y: AlgebraElement, a: FieldElement| alg.modified_commutator(&x, &y, &a);
        let delta = |a: usize, b: usize| i64::from(a == b);
        let (ii, jj) = (p(j), p(i));
        let value: Option<(Provenance, AlgebraElement)> = if let Some(x) = simple.get(&(i, j)) {
            Some((Provenance::Simple, x.clone()))
        } else if (i, j) == (n, p(n)) {
            match rd.family() {
                Family::B => Some((Provenance::Simple, alg.mul(&f(n), &f(n)).scale(&q_pow_int(1).sub(&FieldElement::one())))),
                Family::D => Some((Provenance::Simple, AlgebraElement::zero())),
                Family::C => unreachable!("simple position"),
            }
        } else if i + 1 < j && 2 * j <= big_n + 1 {
            Some((Provenance::Formula, comm(f(j - 1), get(i, j - 1), qbar(1))))
        } else if ii + 1 < jj && 2 * jj <= big_n + 1 {
            Some((Provenance::Formula, comm(get(p(jj - 1), j), f(jj - 1), qbar(1))))
        } else {
            let jv = p(j);
            match rd.family() {
                Family::B => {
                    let in_range = if extended { i <= n && jv <= n && (i, jv) != (n, n) } else { i < n && jv < n };
                    in_range.then(|| {
                        let d = delta(i, jv);
                        let x = comm(get(n + 1, p(jv)), get(i, n + 1), qbar(d)).scale(&q_pow_int(d));
                        (Provenance::Formula, x)
                    })
                }
                Family::C => {
                    if j == p(n) && i < n {
                        Some((Provenance::Formula, comm(f(n), get(i, n), qbar(2))))
                    } else if i == n && jv < n {
                        Some((Provenance::Formula, comm(get(p(n), j), f(n), qbar(2))))
                    } else if i < n && jv < n {
                        let d = delta(i, jv);
                        let x = comm(get(n, j), get(i, n), qbar(1 + d)).scale(&q_pow_int(d));
                        Some((Provenance::Formula, x))
                    } else {
                        None
                    }
                }
                Family::D => {
                    let lim = if extended { n - 1 } else { n - 2 };
                    if j == p(n) && i < lim {
                        Some((Provenance::Formula, comm(f(n), get(i, n - 1), qbar(1))))
                    } else if i == n && jv < lim {
                        Some((Provenance::Formula, comm(get(p(n) + 1, j), f(n), qbar(1))))
                    } else if i < n && jv < n {
                        let d = delta(i, jv);
                        let x = comm(get(n, j), get(i, n), qbar(1 + d)).scale(&q_pow_int(d));
                        Some((Provenance::Formula, x))
                    } else {
                        None
                    }
                }
            }
        };
        let (prov, x) = value.unwrap_or_else(|| (Provenance::Deferred, recursive.get(i, j)));
        provenance.insert((i, j), prov);
        table.insert((i, j), x);
    }
    ClosedForm { table: RTable { sector: Sector::F, dim: big_n, entries: table }, provenance }
}

/// Entrywise agreement of the closed forms with the recursion modulo Serre,
/// one report per formula-derived position.
pub fn compare_tables(serre: &Serre, closed: &ClosedForm, recursive: &RTable, mode: &Mode) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for pos in closed.positions(Provenance::Formula).into_iter().chain(closed.positions(Provenance::Simple)) {
        let diff = closed.table.get(pos.0, pos.1).sub(&recursive.get(pos.0, pos.1));
        out.push(check_member(serre, &diff, &[], mode, format!("closed form f{pos:?} = recursion")) ?);
    }
    Ok(out)
}

/// Positions where the two tables differ before any Serre reduction.
pub fn raw_diff(closed: &RTable, recursive: &RTable) -> Vec<(Pos, AlgebraElement)> {
    closed
        .entries
        .keys()
        .filter_map(|&(i, j)| {
            let d = closed.get(i, j).sub(&recursive.get(i, j));
            (!d.is_zero()).then_some(((i, j), d))
        })
        .collect()
}

/// The coefficient of `π(e_α) ⊗ f_α` in the truncated Ř modulo entries
/// beyond the superdiagonal: `q - q^{-1}`, or `q² - q^{-2}` for the long
/// root of type C when `long_root_correction` is set.
pub fn simple_shape_coefficient(rd: &RootData, alpha: usize, long_root_correction: bool) -> FieldElement {
    if long_root_correction && rd.family() == Family::C && alpha == rd.rank() {
        q_pow_int(2).sub(&q_pow_int(-2))
    } else {
        q_minus_qinv()
    }
}

/// Outcome of the shape check of Ř modulo the upper ideal.
#[derive(Clone, Debug)]
pub struct SimpleShape {
    /// Failing superdiagonal positions with the long-root correction applied.
    pub failures: Vec<Pos>,
    /// Failing positions when every coefficient is `q - q^{-1}`.
    pub failures_uncorrected: Vec<Pos>,
}

/// Compare `(q - q^{-1}) f_{i,i+1}` with `Σ_α c_α π(e_α)_{i,i+1} f_α` at
/// every superdiagonal position (the ideal spanned by `e_ij`, `j > i+1`, is
/// factored out).
pub fn check_simple_shape(alg: &Algebra, table: &RTable) -> SimpleShape {
    let rd = alg.root_data();
    let mut failures = Vec::new();
    let mut failures_uncorrected = Vec::new();
    for i in 1..rd.dim() {
        let lhs = table.get(i, i + 1).scale(&q_minus_qinv());
        for (corr, out) in [(true, &mut failures), (false, &mut failures_uncorrected)] {
            let mut rhs = AlgebraElement::zero();
            for a in 1..=rd.rank() {
                if rd.pairs(a).iter().any(|p| (p.l, p.r) == (i, i + 1)) {
                    rhs = rhs.add(&alg.f(a).scale(&simple_shape_coefficient(rd, a, corr)));
                }
            }
            if lhs != rhs {
                out.push((i, i + 1));
            }
        }
    }
    SimpleShape { failures, failures_uncorrected }
}

/// The special entry `f_{nn'}` as printed: `(q-1) f_n²`, `[2]_q f_n`, `0`.
pub fn special_entry(alg: &Algebra) -> AlgebraElement {
    let n = alg.rank();
    let fnn = AlgebraElement::fword(&[n as u8, n as u8]);
    match alg.root_data().family() {
        Family::B => fnn.scale(&q_pow_int(1).sub(&FieldElement::one())),
        Family::C => alg.f(n).scale(&q_int(2)),
        Family::D => AlgebraElement::zero(),
    }
}

/// Residual of the f-intertwiner at `(a, b, α)`.
pub fn f_identity_residual(alg: &Algebra, table: &RTable, a: usize, b: usize, alpha: usize) -> AlgebraElement {
    let (lhs, rhs) = f_equation(alg, &r_entry(&table.entries, a, b), a, b, alpha);
    let mut x = rhs.neg();
    for (s, (l, r)) in lhs {
        let v = r_entry(&table.entries, l, r);
        x = if s > 0 { x.add(&v) } else { x.sub(&v) };
    }
    x
}

/// Residual of `[e_α, R_ab] = Σ_{(l,b)∈P(α)} R_al q^{h_α} - Σ_{(a,r)∈P(α)} q^{-h_α} R_rb`.
pub fn e_identity_residual(alg: &Algebra, table: &RTable, a: usize, b: usize, alpha: usize) -> AlgebraElement {
    let r = |x: usize, y: usize| r_entry(&table.entries, x, y);
    let e = alg.e(alpha);
    let k = AlgebraElement::coeff(alg.k(alpha));
    let kinv = AlgebraElement::coeff(alg.k_inv(alpha));
    let rab = r(a, b);
    let mut x = alg.mul(&e, &rab).sub(&alg.mul(&rab, &e));
    for p in alg.root_data().pairs(alpha) {
        if p.r == b {
            x = x.sub(&alg.mul(&r(a, p.l), &k));
        }
        if p.l == a {
            x = x.add(&alg.mul(&kinv, &r(p.r, b)));
        }
    }
    x
}

/// Residual of `q^{h_α} R_ab q^{-h_α} = q^{(α, w_b - w_a)} R_ab`.
pub fn k_identity_residual(alg: &Algebra, table: &RTable, a: usize, b: usize, alpha: usize) -> AlgebraElement {
    let rd = alg.root_data();
    let rab = r_entry(&table.entries, a, b);
    let k = AlgebraElement::coeff(alg.k(alpha));
    let kinv = AlgebraElement::coeff(alg.k_inv(alpha));
    let lhs = alg.mul_all(&[&k, &rab, &kinv]);
    let s = rd.simple_root(alpha).dot(&(rd.nat_weight(b) - rd.nat_weight(a)));
    lhs.sub(&rab.scale(&q_pow_rat(s)))
}

/// Which intertwiner identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    F,
    E,
    K,
}

/// Every matrix entry of one identity for one simple root, checked modulo
/// Serre; one report per entry with a nonzero free-algebra residual, plus a
/// summary report.
pub fn check_intertwiner(
    alg: &Algebra,
    serre: &Serre,
    table: &RTable,
    which: Identity,
    alpha: usize,
    mode: &Mode,
) -> Result<Report> {
    let big_n = alg.root_data().dim();
    let mut verdict = true;
    let mut degrees = Vec::new();
    let mut dims = Vec::new();
    let mut failing = Vec::new();
    for a in 1..=big_n {
        for b in 1..=big_n {
            let x = match which {
                Identity::F => f_identity_residual(alg, table, a, b, alpha),
                Identity::E => e_identity_residual(alg, table, a, b, alpha),
                Identity::K => k_identity_residual(alg, table, a, b, alpha),
            };
            if x.is_zero() {
                continue;
            }
            let r = check_member(serre, &x, &[], mode, "")?;
            degrees.extend(r.component_degrees);
            dims.extend(r.dims);
            if !r.verdict {
                verdict = false;
                failing.push((a, b));
            }
        }
    }
    Ok(Report {
        claim: format!("{which:?}-intertwiner, alpha_{alpha}"),
        mode: mode.name().into(),
        component_degrees: degrees,
        dims,
        verdict,
        seeds: mode.seeds(),
        detail: (!verdict).then(|| format!("nonvanishing entries {failing:?}")),
    })
}

/// Residual of `[e_α, f_ij] = Σ_{(l,r)∈P(α)} (f_il δ_jr q^{h_α} - q^{-h_α} δ_il f_rj)`.
pub fn commutator_residual(alg: &Algebra, table: &RTable, i: usize, j: usize, alpha: usize) -> AlgebraElement {
    let f = |a: usize, b: usize| if a < b { table.get(a, b) } else { AlgebraElement::zero() };
    let e = alg.e(alpha);
    let fij = f(i, j);
    let k = AlgebraElement::coeff(alg.k(alpha));
    let kinv = AlgebraElement::coeff(alg.k_inv(alpha));
    let mut x = alg.mul(&e, &fij).sub(&alg.mul(&fij, &e));
    for p in alg.root_data().pairs(alpha) {
        if p.r == j {
            x = x.sub(&alg.mul(&f(i, p.l), &k));
        }
        if p.l == i {
            x = x.add(&alg.mul(&kinv, &f(p.r, j)));
        }
    }
    x
}

/// The commutator identity for every non-simple position `i < j`.
pub fn commutator_identity(alg: &Algebra, serre: &Serre, table: &RTable, alpha: usize, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let simple = simple_entries(rd);
    let mut out = Vec::new();
    for i in 1..=rd.dim() {
        for j in i + 1..=rd.dim() {
            if simple.contains_key(&(i, j)) {
                continue;
            }
            let x = commutator_residual(alg, table, i, j, alpha);
            out.push(check_member(serre, &x, &[], mode, format!("[e_{alpha}, f({i},{j})]"))?);
        }
    }
    Ok(out)
}

/// The upper-sector table `g_ji = ω(f_ij)`.
pub fn g_table(alg: &Algebra, f_table: &RTable) -> RTable {
    let entries = f_table.entries.iter().map(|(&(i, j), x)| ((j, i), alg.omega(x))).collect();
    RTable { sector: Sector::E, dim: f_table.dim, entries }
}

/// The lower table from the recursion together with its ω-image.
#[derive(Clone, Debug)]
pub struct Tables {
    pub f: RTable,
    pub g: RTable,
}

impl Tables {
    pub fn new(alg: &Algebra) -> Result<Tables> {
        let f = recursive_table(alg)?;
        let g = g_table(alg, &f);
        Ok(Tables { f, g })
    }
}
