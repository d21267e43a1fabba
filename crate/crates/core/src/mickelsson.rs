//! The step-algebra layer: the `A`/`B` Cartan coefficients, routes, the free
//! right modules `Φ_{1j}` and `Ψ_{i1}` with their `∂_{lr}` operators, chains,
//! the lowering and raising generators, and their verification.
//!
//! The subalgebra `g'` is generated by `α_2, …, α_n`; `Π⁺_{g'}` is indexed by
//! `2..=n` throughout.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{eta, k_alpha, q_bracket, CartanAffine, FieldElement};
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, AlgebraElement};
use crate::report::{check_member, Mode, Report};
use crate::rmatrix::Tables;
use crate::rootdata::{Family, RootData, Weight};
use crate::serre::Serre;

/// `A_r^j = (q - q^{-1}) / (q^{-2η_rj} - 1)`, for `r < j`.
pub fn a_lower(rd: &RootData, r: usize, j: usize) -> Result<FieldElement> {
    let m = eta(rd, r, j).scale((-2).into()).q_pow()?;
    FieldElement::q_minus_qinv().div(&m.sub(&FieldElement::one()))
}

/// `A_k^i = q^{η_k1 - η_i1} / [η_i1 - η_k1]_q`, for `i < k`.
pub fn a_upper(rd: &RootData, k: usize, i: usize) -> Result<FieldElement> {
    let (ek, ei) = (eta(rd, k, 1), eta(rd, i, 1));
    (&ek - &ei).q_pow()?.div(&q_bracket(&(&ei - &ek))?)
}

/// `B_k^i = (-1)^{||i-k||} / [η_i1 - η_k1]_q`, for `i < k`, where `||i-k||` is
/// the height of `ε_i - ε_k`.
pub fn b_upper(rd: &RootData, k: usize, i: usize) -> Result<FieldElement> {
    let sign = if rd.index_distance(i, k) % 2 == 0 { 1 } else { -1 };
    FieldElement::int(sign).div(&q_bracket(&(&eta(rd, i, 1) - &eta(rd, k, 1)))?)
}

/// `A_{m⃗}^j`, the empty product being 1.
pub fn a_lower_route(rd: &RootData, m: &[usize], j: usize) -> Result<FieldElement> {
    m.iter().try_fold(FieldElement::one(), |acc, &r| Ok(acc.mul(&a_lower(rd, r, j)?)))
}

/// `A_{m⃗}^i`, the empty product being 1.
pub fn a_upper_route(rd: &RootData, m: &[usize], i: usize) -> Result<FieldElement> {
    m.iter().try_fold(FieldElement::one(), |acc, &k| Ok(acc.mul(&a_upper(rd, k, i)?)))
}

/// All routes with entries strictly between `lo` and `hi`, the empty route
/// included, in lexicographic order.
pub fn routes_between(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let inner: Vec<usize> = (lo + 1..hi).collect();
    let mut out: Vec<Vec<usize>> = (0u32..1 << inner.len())
        .map(|mask| inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect())
        .collect();
    out.sort();
    out
}

/// Routes from `a` to `b` (both included; the single route `(a)` when `a = b`).
pub fn routes_from_to(a: usize, b: usize) -> Vec<Vec<usize>> {
    if a == b {
        return vec![vec![a]];
    }
    routes_between(a, b)
        .into_iter()
        .map(|m| std::iter::once(a).chain(m).chain(std::iter::once(b)).collect())
        .collect()
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

/// Which free module an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    /// `Φ_{1j}`, spanned by route products from 1 to `j`.
    Phi(usize),
    /// `Ψ_{i1}`, spanned by `f_{(m⃗,k)} g_{k1}` with routes starting at `i`.
    Psi(usize),
}

/// A basis label: a product of route products `f_{m⃗_1} f_{m⃗_2} ⋯`, then
/// `g_{k1}` when a terminal `k` is present. Routes of length one are dropped
/// (their product is 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub segments: Vec<Vec<usize>>,
    pub terminal: Option<usize>,
}

impl Label {
    pub fn new(segments: Vec<Vec<usize>>, terminal: Option<usize>) -> Label {
        Label { segments: segments.into_iter().filter(|s| s.len() > 1).collect(), terminal }
    }

    /// The single route this label stands for, when it is a module generator.
    fn route(&self, space: Space) -> Option<Vec<usize>> {
        match (self.segments.len(), space) {
            (1, _) => Some(self.segments[0].clone()),
            (0, Space::Psi(_)) => self.terminal.map(|k| vec![k]),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| format!("f({})", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        if let Some(k) = self.terminal {
            parts.push(format!("g({k},1)"));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// An element of a free right `Û_q(h)`-module: labels with right
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeModElement {
    pub space: Space,
    pub terms: BTreeMap<Label, FieldElement>,
}

impl FreeModElement {
    pub fn zero(space: Space) -> Self {
        FreeModElement { space, terms: BTreeMap::new() }
    }

    pub fn basis(space: Space, label: Label) -> Self {
        let mut x = Self::zero(space);
        x.add_term(label, FieldElement::one());
        x
    }

    /// `f_{route}` in `Φ`, or `f_{route} g_{k1}` in `Ψ` with `k` the last index.
    pub fn route(space: Space, route: Vec<usize>) -> Self {
        let terminal = matches!(space, Space::Psi(_)).then(|| *route.last().expect("nonempty route"));
        Self::basis(space, Label::new(vec![route], terminal))
    }

    pub fn add_term(&mut self, label: Label, c: FieldElement) {
        let entry = self.terms.entry(label.clone()).or_insert_with(FieldElement::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn add(&self, other: &FreeModElement) -> FreeModElement {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    /// Right multiplication by a Cartan coefficient.
    pub fn scale(&self, c: &FieldElement) -> FreeModElement {
        let mut out = Self::zero(self.space);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    /// The natural map `p` into the algebra, expanding routes through the
    /// entry tables.
    pub fn project(&self, alg: &Algebra, tables: &Tables) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (label, c) in &self.terms {
            let mut x = AlgebraElement::one();
            for seg in &label.segments {
                for w in seg.windows(2) {
                    x = alg.mul(&x, &tables.f.get(w[0], w[1]));
                }
            }
            if let Some(k) = label.terminal {
                x = alg.mul(&x, &tables.g.get(k, 1));
            }
            out = out.add(&alg.mul_coeff_right(&x, c));
        }
        out
    }
}

impl fmt::Display for FreeModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("{l}·({c})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The three rewrite rules on a single route, with Cartan coefficients
/// built from `η_{l,base} - η_{r,base}`; `None` where the image vanishes.
fn route_rule(rd: &RootData, m: &[usize], l: usize, r: usize, base: usize) -> Result<Option<(Vec<Vec<usize>>, FieldElement)>> {
    let d: CartanAffine = &eta(rd, l, base) - &eta(rd, r, base);
    let pl = m.iter().position(|&x| x == l);
    let pr = m.iter().position(|&x| x == r);
    Ok(match (pl, pr) {
        (Some(a), Some(b)) if b == a + 1 => Some((vec![m[..=a].to_vec(), m[b..].to_vec()], q_bracket(&d)?)),
        (Some(a), None) if a + 1 < m.len() && m[a + 1] > r => {
            let right = cat(&[&[r], &m[a + 1..]]);
            Some((vec![m[..=a].to_vec(), right], (-&d).q_pow()?.neg()))
        }
        (None, Some(b)) if b > 0 && m[b - 1] < l => {
            let left = cat(&[&m[..b], &[l]]);
            Some((vec![left, m[b..].to_vec()], d.q_pow()?))
        }
        _ => None,
    })
}

/// `∂_{lr}` on `Φ_{1j}` or `Ψ_{i1}`, extended by right linearity.
pub fn partial(rd: &RootData, l: usize, r: usize, x: &FreeModElement) -> Result<FreeModElement> {
    if rd.pair_root(l, r).is_none() {
        return Err(Error::NotSimplePair(l, r));
    }
    let mut out = FreeModElement::zero(x.space);
    for (label, c) in &x.terms {
        let route = label
            .route(x.space)
            .ok_or_else(|| Error::Invalid(format!("∂ is defined on module generators, not on {label}")))?;
        let image = match x.space {
            Space::Phi(j) => route_rule(rd, &route, l, r, j)?.map(|(segs, k)| (Label::new(segs, None), k)),
            Space::Psi(_) => {
                let k = label.terminal.expect("Ψ labels carry a terminal");
                if k == l {
                    Some((Label::new(vec![route], Some(r)), FieldElement::one()))
                } else {
                    route_rule(rd, &route, l, r, 1)?.map(|(segs, coef)| (Label::new(segs, Some(k)), coef))
                }
            }
        };
        if let Some((lab, coef)) = image {
            out.add_term(lab, coef.mul(c));
        }
    }
    Ok(out)
}

/// `Σ_{(l,r)∈P(α)} ∂_{lr} x`.
pub fn partial_alpha(rd: &RootData, alpha: usize, x: &FreeModElement) -> Result<FreeModElement> {
    rd.pairs(alpha).iter().try_fold(FreeModElement::zero(x.space), |acc, p| Ok(acc.add(&partial(rd, p.l, p.r, x)?)))
}

/// The chain shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainSpecies {
    Phi3,
    Phi2,
    PsiAB,
    PsiAA,
    /// Both two-term shapes attached to a simple `(i, r)`.
    Psi2,
}

impl ChainSpecies {
    pub const ALL: [ChainSpecies; 5] =
        [ChainSpecies::Phi3, ChainSpecies::Phi2, ChainSpecies::PsiAB, ChainSpecies::PsiAA, ChainSpecies::Psi2];
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub species: ChainSpecies,
    pub pair: (usize, usize),
    pub element: FreeModElement,
}

fn psi_term(i: usize, route: Vec<usize>, c: FieldElement) -> FreeModElement {
    FreeModElement::route(Space::Psi(i), route).scale(&c)
}

/// Every chain instance: `Φ` chains for every simple pair and every `j`,
/// `Ψ` chains for every pair of `Π⁺_{g'}` and every `i ≥ 2`.
pub fn chains(rd: &RootData) -> Result<Vec<Chain>> {
    let (n, big_n) = (rd.rank(), rd.dim());
    let mut out = Vec::new();
    for j in 2..=big_n {
        let sp = Space::Phi(j);
        for alpha in 1..=n {
            for p in rd.pairs(alpha) {
                let (l, r) = (p.l, p.r);
                if l == 1 || r > j {
                    continue;
                }
                let al = a_lower(rd, l, j)?;
                let ar = if r < j { a_lower(rd, r, j)? } else { FieldElement::zero() };
                for ell in routes_between(1, l) {
                    let lv = cat(&[&[1], &ell]);
                    if r < j {
                        for rho in routes_between(r, j) {
                            let rv = cat(&[&rho, &[j]]);
                            let x = FreeModElement::route(sp, cat(&[&lv, &[l], &rv])).scale(&al)
                                .add(&FreeModElement::route(sp, cat(&[&lv, &[l, r], &rv])).scale(&al.mul(&ar)))
                                .add(&FreeModElement::route(sp, cat(&[&lv, &[r], &rv])).scale(&ar));
                            out.push(Chain { species: ChainSpecies::Phi3, pair: (l, r), element: x });
                        }
                    } else {
                        let x = FreeModElement::route(sp, cat(&[&lv, &[l, j]]))
                            .scale(&al)
                            .add(&FreeModElement::route(sp, cat(&[&lv, &[j]])));
                        out.push(Chain { species: ChainSpecies::Phi2, pair: (l, r), element: x });
                    }
                }
            }
        }
    }
    for i in 2..=big_n {
        for alpha in 2..=n {
            for p in rd.pairs(alpha) {
                let (l, r) = (p.l, p.r);
                if l < i {
                    continue;
                }
                if l == i {
                    let br = b_upper(rd, r, i)?;
                    let ar = a_upper(rd, r, i)?;
                    let x = psi_term(i, vec![i], FieldElement::one()).add(&psi_term(i, vec![i, r], br));
                    out.push(Chain { species: ChainSpecies::Psi2, pair: (l, r), element: x });
                    for k in r + 1..=big_n {
                        for m in routes_between(r, k) {
                            let tail = cat(&[&m, &[k]]);
                            let x = psi_term(i, cat(&[&[i], &tail]), FieldElement::one())
                                .add(&psi_term(i, cat(&[&[i, r], &tail]), ar.clone()));
                            out.push(Chain { species: ChainSpecies::Psi2, pair: (l, r), element: x });
                        }
                    }
                    continue;
                }
                let (al, ar) = (a_upper(rd, l, i)?, a_upper(rd, r, i)?);
                let (bl, br) = (b_upper(rd, l, i)?, b_upper(rd, r, i)?);
                for m in routes_between(i, l) {
                    let head = cat(&[&[i], &m]);
                    let x = psi_term(i, cat(&[&head, &[l]]), bl.clone())
                        .add(&psi_term(i, cat(&[&head, &[l, r]]), al.mul(&br)))
                        .add(&psi_term(i, cat(&[&head, &[r]]), br.clone()));
                    out.push(Chain { species: ChainSpecies::PsiAB, pair: (l, r), element: x });
                    for k in r + 1..=big_n {
                        for rho in routes_between(r, k) {
                            let tail = cat(&[&rho, &[k]]);
                            let x = psi_term(i, cat(&[&head, &[l], &tail]), al.clone())
                                .add(&psi_term(i, cat(&[&head, &[l, r], &tail]), al.mul(&ar)))
                                .add(&psi_term(i, cat(&[&head, &[r], &tail]), ar.clone()));
                            out.push(Chain { species: ChainSpecies::PsiAA, pair: (l, r), element: x });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Per species: number of instances and those not annihilated by their `∂_{lr}`.
pub fn chain_annihilation(rd: &RootData) -> Result<BTreeMap<ChainSpecies, (usize, Vec<String>)>> {
    let mut out: BTreeMap<ChainSpecies, (usize, Vec<String>)> =
        ChainSpecies::ALL.iter().map(|s| (*s, (0, Vec::new()))).collect();
    for c in chains(rd)? {
        let img = partial(rd, c.pair.0, c.pair.1, &c.element)?;
        let e = out.get_mut(&c.species).expect("all species present");
        e.0 += 1;
        if !img.is_zero() {
            e.1.push(format!("{:?} at {:?}: {} ↦ {}", c.species, c.pair, c.element, img));
        }
    }
    Ok(out)
}

/// `z_{-j+1} = Σ_{1<m⃗<j} f_{(1,m⃗,j)} A_{m⃗}^j` in `Φ_{1j}`, `j = 2..=N`.
pub fn z_lower(rd: &RootData, j: usize) -> Result<FreeModElement> {
    let mut z = FreeModElement::zero(Space::Phi(j));
    for m in routes_between(1, j) {
        let c = a_lower_route(rd, &m, j)?;
        z = z.add(&FreeModElement::route(Space::Phi(j), cat(&[&[1], &m, &[j]])).scale(&c));
    }
    Ok(z)
}

/// `z_{i-1} = g_{i1} + Σ_{i<m⃗<k≤N} f_{(i,m⃗,k)} g_{k1} A_{m⃗}^i B_k^i` in
/// `Ψ_{i1}`, `i = 2..=N`.
pub fn z_upper(rd: &RootData, i: usize) -> Result<FreeModElement> {
    let sp = Space::Psi(i);
    let mut z = FreeModElement::route(sp, vec![i]);
    for k in i + 1..=rd.dim() {
        let b = b_upper(rd, k, i)?;
        for m in routes_between(i, k) {
            let c = a_upper_route(rd, &m, i)?.mul(&b);
            z = z.add(&FreeModElement::route(sp, cat(&[&[i], &m, &[k]])).scale(&c));
        }
    }
    Ok(z)
}

/// `z_0 = q^{h_{α_1}}`.
pub fn z0(alg: &Algebra) -> AlgebraElement {
    AlgebraElement::coeff(k_alpha(alg.root_data(), 1))
}

/// One step-algebra generator.
#[derive(Clone, Debug)]
pub struct Generator {
    /// Signed index: `-t` for `z_{-t}`, `0` for `z_0`, `t` for `z_t`.
    pub index: i64,
    pub weight: Weight,
    pub element: AlgebraElement,
}

impl Generator {
    pub fn name(&self) -> String {
        format!("z_{{{}}}", self.index)
    }
}

/// Largest `t` with `z_{±t}` among the generators: `N-1` for C, `N-2` for B, D.
pub fn census_bound(rd: &RootData) -> usize {
    match rd.family() {
        Family::C => rd.dim() - 1,
        Family::B | Family::D => rd.dim() - 2,
    }
}

/// `z_{-t}` for `t = 1..=N-1`, as an algebra element.
pub fn lowering(alg: &Algebra, tables: &Tables, t: usize) -> Result<AlgebraElement> {
    Ok(z_lower(alg.root_data(), t + 1)?.project(alg, tables))
}

/// `z_t` for `t = 1..=N-1`, as an algebra element.
pub fn raising(alg: &Algebra, tables: &Tables, t: usize) -> Result<AlgebraElement> {
    Ok(z_upper(alg.root_data(), t + 1)?.project(alg, tables))
}

/// The generating set `z_0, z_{±t}` with `t` up to [`census_bound`], ordered
/// by index.
pub fn generator_set(alg: &Algebra, tables: &Tables) -> Result<Vec<Generator>> {
    let rd = alg.root_data();
    let w1 = rd.nat_weight(1);
    let bound = census_bound(rd);
    let mut out = Vec::new();
    for t in (1..=bound).rev() {
        let w = rd.nat_weight(t + 1) - w1;
        out.push(Generator { index: -(t as i64), weight: w, element: lowering(alg, tables, t)? });
    }
    out.push(Generator { index: 0, weight: Weight::zero(rd.rank()), element: z0(alg) });
    for t in 1..=bound {
        let w = w1 - rd.nat_weight(t + 1);
        out.push(Generator { index: t as i64, weight: w, element: raising(alg, tables, t)? });
    }
    Ok(out)
}

/// The three η identities for every simple pair: `η_{lr} = h_α`, and
/// `η_{lx} - η_{rx} = h_α + (α, ε_x - ε_r)` for `x > r` and for `x < l`.
/// Returns the number of identities checked and the failures.
pub fn check_eta_identities(rd: &RootData) -> (usize, Vec<String>) {
    let mut count = 0;
    let mut bad = Vec::new();
    for alpha in 1..=rd.rank() {
        let root = rd.simple_root(alpha);
        let h = CartanAffine::h(root);
        for p in rd.pairs(alpha) {
            let (l, r) = (p.l, p.r);
            count += 1;
            if eta(rd, l, r) != h {
                bad.push(format!("iii) at ({l},{r}): {}", eta(rd, l, r)));
            }
            for x in 1..=rd.dim() {
                let item = if x > r {
                    "i)"
                } else if x < l {
                    "ii)"
                } else {
                    continue;
                };
                count += 1;
                let lhs = &eta(rd, l, x) - &eta(rd, r, x);
                let rhs = h.plus_const(root.dot(&(rd.nat_weight(x) - rd.nat_weight(r))));
                if lhs != rhs {
                    bad.push(format!("{item} at ({l},{r}), index {x}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    (count, bad)
}

/// `e_α p(x) ≡ p(Σ_{(l,r)∈P(α)} ∂_{lr} x)` modulo `Û e_α` and Serre, for
/// every generator `x` of every `Φ_{1j}` and every simple root.
pub fn partial_consistency_phi(alg: &Algebra, serre: &Serre, tables: &Tables, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let mut out = Vec::new();
    for j in 2..=rd.dim() {
        for route in routes_from_to(1, j) {
            let x = FreeModElement::route(Space::Phi(j), route.clone());
            for alpha in 1..=rd.rank() {
                out.push(consistency_report(alg, serre, tables, mode, &x, alpha, format!("Φ(1,{j}) {route:?}"))?);
            }
        }
    }
    Ok(out)
}

/// The analog for every generator of every `Ψ_{i1}` and every `α ∈ Π⁺_{g'}`.
pub fn partial_consistency_psi(alg: &Algebra, serre: &Serre, tables: &Tables, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let mut out = Vec::new();
    for i in 2..=rd.dim() {
        for k in i..=rd.dim() {
            for route in routes_from_to(i, k) {
                let x = FreeModElement::route(Space::Psi(i), route.clone());
                for alpha in 2..=rd.rank() {
                    let claim = format!("Ψ({i},1) {route:?}");
                    out.push(consistency_report(alg, serre, tables, mode, &x, alpha, claim)?);
                }
            }
        }
    }
    Ok(out)
}

fn consistency_report(
    alg: &Algebra,
    serre: &Serre,
    tables: &Tables,
    mode: &Mode,
    x: &FreeModElement,
    alpha: usize,
    what: String,
) -> Result<Report> {
    let lhs = alg.mul(&alg.e(alpha), &x.project(alg, tables));
    let rhs = partial_alpha(alg.root_data(), alpha, x)?.project(alg, tables);
    check_member(serre, &lhs.sub(&rhs), &[alpha], mode, format!("e_{alpha} p(x) = p(∂x), x = {what}"))
}

/// Free-module route: `Σ_{(l,r)∈P(α)} ∂_{lr} z_{-t} = 0` for `α ∈ Π⁺_{g'}`.
pub fn lowering_free(rd: &RootData) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for j in 2..=rd.dim() {
        let z = z_lower(rd, j)?;
        for alpha in 2..=rd.rank() {
            let img = partial_alpha(rd, alpha, &z)?;
            let claim = format!("∂ z_{{-{}}} = 0, alpha_{alpha}", j - 1);
            out.push(Report::coefficient(claim, img.is_zero(), (!img.is_zero()).then(|| img.to_string())));
        }
    }
    Ok(out)
}

/// Algebra route: `e_α z_{-t} ∈ Û e_α + Serre` for `α ∈ Π⁺_{g'}`, `t = 1..=N-1`.
pub fn lowering_algebra(alg: &Algebra, serre: &Serre, tables: &Tables, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let mut out = Vec::new();
    for t in 1..rd.dim() {
        let z = lowering(alg, tables, t)?;
        for alpha in 2..=rd.rank() {
            let x = alg.mul(&alg.e(alpha), &z);
            out.push(check_member(serre, &x, &[alpha], mode, format!("e_{alpha} z_{{-{t}}} ∈ U e_{alpha}"))?);
        }
    }
    Ok(out)
}

/// Free-module route: `Σ_{(l,r)∈P(α)} ∂_{lr} z_t = 0` for `α ∈ Π⁺_{g'}`.
pub fn raising_free(rd: &RootData) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for i in 2..=rd.dim() {
        let z = z_upper(rd, i)?;
        for alpha in 2..=rd.rank() {
            let img = partial_alpha(rd, alpha, &z)?;
            let claim = format!("∂ z_{{{}}} = 0, alpha_{alpha}", i - 1);
            out.push(Report::coefficient(claim, img.is_zero(), (!img.is_zero()).then(|| img.to_string())));
        }
    }
    Ok(out)
}

/// Stage one: `e_α g_{i1} - Σ_{(l,r)∈P(α)} δ_{il} g_{r1} ∈ U(g_+) e_α + Serre`.
pub fn raising_stage1(alg: &Algebra, serre: &Serre, tables: &Tables, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let mut out = Vec::new();
    for i in 2..=rd.dim() {
        for alpha in 2..=rd.rank() {
            let mut x = alg.mul(&alg.e(alpha), &tables.g.get(i, 1));
            for p in rd.pairs(alpha) {
                if p.l == i {
                    x = x.sub(&tables.g.get(p.r, 1));
                }
            }
            out.push(check_member(serre, &x, &[alpha], mode, format!("e_{alpha} g({i},1) = Σ δ g(r,1)"))?);
        }
    }
    Ok(out)
}

/// Stage two: `e_α z_t ∈ Û e_α + Serre` for `α ∈ Π⁺_{g'}`, `t = 1..=N-1`.
pub fn raising_stage2(alg: &Algebra, serre: &Serre, tables: &Tables, mode: &Mode) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let mut out = Vec::new();
    for t in 1..rd.dim() {
        let z = raising(alg, tables, t)?;
        for alpha in 2..=rd.rank() {
            let x = alg.mul(&alg.e(alpha), &z);
            out.push(check_member(serre, &x, &[alpha], mode, format!("e_{alpha} z_{{{t}}} ∈ U e_{alpha}"))?);
        }
    }
    Ok(out)
}

/// The two base cases written out by hand: `z_{N-1} = g_{1'1}` and
/// `z_{N-2} = g_{2'1} + f_1 g_{1'1} B_{1'}^{2'}`, compared term by term.
pub fn printed_base_cases(alg: &Algebra, tables: &Tables) -> Result<Vec<Report>> {
    let rd = alg.root_data();
    let big_n = rd.dim();
    let (one_p, two_p) = (rd.prime(1), rd.prime(2));
    let top = raising(alg, tables, big_n - 1)?;
    let expect_top = tables.g.get(one_p, 1);
    let next = raising(alg, tables, big_n - 2)?;
    let f1g = alg.mul(&alg.f(1), &tables.g.get(one_p, 1));
    let expect_next = tables.g.get(two_p, 1).add(&alg.mul_coeff_right(&f1g, &b_upper(rd, one_p, two_p)?));
    let report = |claim: &str, got: &AlgebraElement, want: &AlgebraElement| {
        let ok = got == want;
        Report::coefficient(claim, ok, (!ok).then(|| format!("got {got}; expected {want}")))
    };
    Ok(vec![
        report("z_{N-1} = g_{1'1}", &top, &expect_top),
        report("z_{N-2} = g_{2'1} + f_1 g_{1'1} B_{1'}^{2'}", &next, &expect_next),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Q;

    fn rd(f: Family, n: usize) -> RootData {
        RootData::new(f, n).unwrap()
    }

    #[test]
    fn route_enumeration() {
        assert_eq!(routes_between(1, 4), vec![vec![], vec![2], vec![2, 3], vec![3]]);
        assert_eq!(routes_from_to(2, 2), vec![vec![2]]);
        assert_eq!(routes_from_to(1, 3), vec![vec![1, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn a_lower_at_simple_pair() {
        let b2 = rd(Family::B, 2);
        let a = a_lower(&b2, 2, 3).unwrap();
        let h2 = CartanAffine::h(b2.simple_root(2));
        let expect = FieldElement::q_minus_qinv().div(&h2.scale((-2).into()).q_pow().unwrap().sub(&FieldElement::one()));
        assert_eq!(a, expect.unwrap());
    }

    #[test]
    fn a_lower_evaluates() {
        let b2 = rd(Family::B, 2);
        let a = a_lower(&b2, 1, 3).unwrap();
        let (q0, k) = (Q::new(3.into(), 1.into()), vec![Q::new(2.into(), 1.into()), Q::new(5.into(), 1.into())]);
        // q^{-2η_13} with η_13 = h_1 + 1 is q^{-2} K_1^{-2}
        let m = Q::from_integer(1.into()) / (&q0 * &q0 * &k[0] * &k[0]);
        let want = (&q0 - Q::from_integer(1.into()) / &q0) / (m - Q::from_integer(1.into()));
        assert_eq!(a.specialize(&q0, &k).unwrap(), want);
    }

    #[test]
    fn b_sign_uses_height() {
        let b2 = rd(Family::B, 2);
        let b = b_upper(&b2, 3, 2).unwrap();
        let br = q_bracket(&(&eta(&b2, 2, 1) - &eta(&b2, 3, 1))).unwrap();
        assert_eq!(b, FieldElement::int(-1).div(&br).unwrap());
        assert_eq!(b2.index_distance(2, 4), 2);
    }

    #[test]
    fn small_z_lower() {
        let b2 = rd(Family::B, 2);
        let z = z_lower(&b2, 2).unwrap();
        assert_eq!(z, FreeModElement::route(Space::Phi(2), vec![1, 2]));
        let z3 = z_lower(&b2, 3).unwrap();
        assert_eq!(z3.terms.len(), 2);
        assert_eq!(z3.terms[&Label::new(vec![vec![1, 2, 3]], None)], a_lower(&b2, 2, 3).unwrap());
    }

    #[test]
    fn partial_rules_on_phi() {
        let b2 = rd(Family::B, 2);
        let x = FreeModElement::route(Space::Phi(3), vec![1, 2, 3]);
        let y = partial(&b2, 2, 3, &x).unwrap();
        let lab = Label::new(vec![vec![1, 2]], None);
        let d = &eta(&b2, 2, 3) - &eta(&b2, 3, 3);
        assert_eq!(y.terms[&lab], q_bracket(&d).unwrap());
        let none = FreeModElement::route(Space::Phi(2), vec![1, 2]);
        assert!(partial(&b2, 3, 4, &none).unwrap().is_zero());
    }

    #[test]
    fn chains_are_killed() {
        let mut seen = BTreeMap::new();
        for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            for (s, (count, bad)) in chain_annihilation(&rd(f, n)).unwrap() {
                *seen.entry(s).or_insert(0) += count;
                assert!(bad.is_empty(), "{f:?}{n}: {bad:?}");
            }
        }
        assert!(seen.values().all(|&c| c > 0), "{seen:?}");
    }

    #[test]
    fn eta_identities_small() {
        for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            let (count, bad) = check_eta_identities(&rd(f, n));
            assert!(count > 0 && bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn census() {
        assert_eq!(census_bound(&rd(Family::C, 2)), 3);
        assert_eq!(census_bound(&rd(Family::B, 2)), 3);
        assert_eq!(census_bound(&rd(Family::D, 3)), 4);
    }

    #[test]
    fn generator_weights() {
        let alg = Algebra::new(rd(Family::B, 2));
        let t = Tables::new(&alg).unwrap();
        for g in generator_set(&alg, &t).unwrap() {
            let w = alg.weight_of(&g.element).unwrap().unwrap();
            assert_eq!(w, g.weight, "{}", g.name());
        }
    }
}
