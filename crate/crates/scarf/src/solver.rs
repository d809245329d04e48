//! Coloring theorems as executable searches: classical brute-force solvers
//! over chain-simplices, the non-degenerate matroid path-following solver
//! with its pivot graph, the general solver via abstract lexicographic
//! perturbation, and the vector and hedgehog solvers.

use crate::chains2::{Simplex, VertexId};
use crate::complexes::{
    classify_coloring, envelope, from_order_family, is_chain_simplex, ColoringKind, SimplexFamily,
};
use crate::linalg;
use crate::om::{
    cocircuits, convex_hull_contains, is_acyclic, lex_extension, ElementSet, OrientedMatroid,
    SignedSubset,
};
use crate::orders::{extend_orders, DownMove, IndexSet, OrderFamily, VertexSet};
use crate::{rat_to_string, Rat, Result, ScarfError};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Acyclic oriented matroid with a distinguished basis B labeled by I and a
/// target b inside its convex hull.
#[derive(Clone, Debug)]
pub struct MatroidFramework {
    matroid: OrientedMatroid,
    basis: Vec<VertexId>,
    b: VertexId,
    nondegenerate: bool,
}

impl MatroidFramework {
    pub fn new(matroid: OrientedMatroid, basis: Vec<VertexId>, b: VertexId) -> Result<Self> {
        if !is_acyclic(&matroid) {
            return Err(ScarfError::FrameworkViolated("matroid is not acyclic".into()));
        }
        if !matroid.ground().contains(&b) {
            return Err(ScarfError::FrameworkViolated(format!("{b} not in the ground set")));
        }
        let basis_set: ElementSet = basis.iter().cloned().collect();
        if basis_set.len() != basis.len() || basis_set.contains(&b) {
            return Err(ScarfError::FrameworkViolated(
                "basis must be distinct elements avoiding b".into(),
            ));
        }
        let rank = matroid.rank()?;
        if basis.len() != rank || !matroid.is_independent(&basis_set) {
            return Err(ScarfError::FrameworkViolated("B is not a basis".into()));
        }
        if !convex_hull_contains(&matroid, &basis_set, &b).0 {
            return Err(ScarfError::FrameworkViolated(
                "b is outside the convex hull of B".into(),
            ));
        }
        // degenerate when b lies in the hull of fewer than n+1 elements
        let others: Vec<&VertexId> = matroid.ground().iter().filter(|v| **v != b).collect();
        let mut nondegenerate = true;
        'outer: for k in 1..rank {
            for combo in others.iter().combinations(k) {
                let s: ElementSet = combo.into_iter().map(|v| (**v).clone()).collect();
                if convex_hull_contains(&matroid, &s, &b).0 {
                    nondegenerate = false;
                    break 'outer;
                }
            }
        }
        Ok(MatroidFramework { matroid, basis, b, nondegenerate })
    }

    pub fn matroid(&self) -> &OrientedMatroid {
        &self.matroid
    }

    /// Basis elements in label order v_0 .. v_n.
    pub fn basis(&self) -> &[VertexId] {
        &self.basis
    }

    pub fn b(&self) -> &VertexId {
        &self.b
    }

    /// |I| = n + 1 = rank.
    pub fn index_count(&self) -> usize {
        self.basis.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }
}

/// One solution of a coloring theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub c: IndexSet,
    pub tau: Simplex,
    pub basis: Vec<VertexId>,
    /// Nonnegative coefficients over `basis`, for vector instances.
    pub coeffs: Vec<Rat>,
    /// Hull-membership circuit, for matroid instances.
    pub witness: Option<SignedSubset>,
}

#[derive(Serialize, Deserialize)]
pub struct SolutionJson {
    #[serde(rename = "C")]
    pub c: Vec<usize>,
    pub tau: Vec<String>,
    pub basis: Vec<String>,
    pub coeffs: Vec<String>,
}

impl Solution {
    pub fn to_json(&self) -> SolutionJson {
        SolutionJson {
            c: self.c.iter().copied().collect(),
            tau: self.tau.vertices().map(|v| v.0.clone()).collect(),
            basis: self.basis.iter().map(|v| v.0.clone()).collect(),
            coeffs: self.coeffs.iter().map(rat_to_string).collect(),
        }
    }
}

fn colors_of(
    c: &BTreeMap<VertexId, usize>,
    tau: &Simplex,
) -> Result<BTreeSet<usize>> {
    tau.vertices()
        .map(|v| {
            c.get(v)
                .copied()
                .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} is uncolored")))
        })
        .collect()
}

/// All pairs (A, sigma) with sigma a top simplex of D(A) colored exactly by
/// A. The count is odd for chain-simplices.
pub fn solve_classical_any(
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, usize>,
) -> Result<Vec<(IndexSet, Simplex)>> {
    if let (false, Some(w)) = is_chain_simplex(d) {
        return Err(ScarfError::ChainSimplexViolated(w));
    }
    let mut out = Vec::new();
    for a in d.subsets() {
        if a.is_empty() {
            continue;
        }
        for sigma in d.complex(&a).simplices_of_dim(a.len() as i64 - 1) {
            if colors_of(c, &sigma)? == a {
                out.push((a.clone(), sigma));
            }
        }
    }
    if out.len() % 2 == 0 {
        return Err(ScarfError::ChainSimplexViolated(format!(
            "even solution count {}",
            out.len()
        )));
    }
    Ok(out)
}

/// Fully-colored top cells for an Alexander-Sperner coloring; odd count.
pub fn solve_classical_as(
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, usize>,
) -> Result<Vec<Simplex>> {
    match classify_coloring(d, c)? {
        ColoringKind::AlexanderSperner | ColoringKind::Both => {}
        k => {
            return Err(ScarfError::Invalid(format!(
                "not an Alexander-Sperner coloring: {k:?}"
            )))
        }
    }
    fully_colored(d, c)
}

/// Fully-colored top cells for a Scarf coloring; odd count.
pub fn solve_scarf_dual(
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, usize>,
) -> Result<Vec<Simplex>> {
    match classify_coloring(d, c)? {
        ColoringKind::Scarf | ColoringKind::Both => {}
        k => return Err(ScarfError::Invalid(format!("not a Scarf coloring: {k:?}"))),
    }
    fully_colored(d, c)
}

fn fully_colored(d: &SimplexFamily, c: &BTreeMap<VertexId, usize>) -> Result<Vec<Simplex>> {
    let full = d.indices();
    let mut out = Vec::new();
    for sigma in d.complex(&full).simplices_of_dim(full.len() as i64 - 1) {
        if colors_of(c, &sigma)? == full {
            out.push(sigma);
        }
    }
    if out.len() % 2 == 0 {
        return Err(ScarfError::ChainSimplexViolated(format!(
            "even count {} of fully colored cells",
            out.len()
        )));
    }
    Ok(out)
}

/// Is S a basis with b in its convex hull?
pub fn good_basis(fr: &MatroidFramework, s: &ElementSet) -> bool {
    s.len() == fr.index_count()
        && !s.contains(&fr.b)
        && fr.matroid.is_independent(s)
        && convex_hull_contains(&fr.matroid, s, &fr.b).0
}

/// The (n-1)-cochain delta_i: 1 iff epsilon + v_i is a good basis.
pub fn delta_cochain(fr: &MatroidFramework, i: usize, epsilon: &ElementSet) -> Result<u8> {
    let vi = &fr.basis[i];
    if epsilon.contains(vi) {
        return Err(ScarfError::ElementCollision(format!(
            "{vi} already belongs to the argument"
        )));
    }
    if epsilon.len() + 1 != fr.index_count() {
        return Err(ScarfError::Dimension(format!(
            "expected {} elements, got {}",
            fr.index_count() - 1,
            epsilon.len()
        )));
    }
    let mut s = epsilon.clone();
    s.insert(vi.clone());
    Ok(good_basis(fr, &s) as u8)
}

/// Coboundary of delta_i on an (n+1)-element set; terms whose argument
/// still contains v_i vanish by convention.
pub fn coboundary_delta(fr: &MatroidFramework, i: usize, sigma: &ElementSet) -> Result<u8> {
    if sigma.len() != fr.index_count() {
        return Err(ScarfError::Dimension(format!(
            "expected {} elements, got {}",
            fr.index_count(),
            sigma.len()
        )));
    }
    let vi = &fr.basis[i];
    let mut total = 0u8;
    for v in sigma {
        let mut eps = sigma.clone();
        eps.remove(v);
        if eps.contains(vi) {
            continue;
        }
        total ^= delta_cochain(fr, i, &eps)?;
    }
    Ok(total)
}

/// phi on a top or face of the envelope: colors on family vertices, basis
/// elements on index tokens. None when the map collapses the simplex.
fn phi_set(
    fr: &MatroidFramework,
    c: &BTreeMap<VertexId, VertexId>,
    s: &Simplex,
) -> Result<Option<ElementSet>> {
    let mut out = ElementSet::new();
    for v in s.vertices() {
        let e = match v.as_index_token() {
            Some(j) => fr
                .basis
                .get(j)
                .ok_or_else(|| ScarfError::Invalid(format!("token {v} out of range")))?
                .clone(),
            None => c
                .get(v)
                .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} is uncolored")))?
                .clone(),
        };
        out.insert(e);
    }
    Ok((out.len() == s.len()).then_some(out))
}

fn delta_on_face(
    fr: &MatroidFramework,
    c: &BTreeMap<VertexId, VertexId>,
    i: usize,
    face: &Simplex,
) -> Result<bool> {
    let Some(eps) = phi_set(fr, c, face)? else {
        return Ok(false);
    };
    if eps.contains(&fr.basis[i]) {
        return Ok(false);
    }
    let mut s = eps;
    s.insert(fr.basis[i].clone());
    Ok(good_basis(fr, &s))
}

/// The pivot graph G_i over the top simplices of the envelope.
#[derive(Clone, Debug)]
pub struct PivotGraph {
    pub i: usize,
    pub sigma_i: Simplex,
    pub tops: BTreeSet<Simplex>,
    /// Internal qualifying adjacencies, as ordered pairs with the shared face.
    pub edges: BTreeSet<(Simplex, Simplex, Simplex)>,
}

impl PivotGraph {
    pub fn degree(&self, top: &Simplex) -> usize {
        self.edges
            .iter()
            .filter(|(a, b, _)| a == top || b == top)
            .count()
    }

    fn step(&self, top: &Simplex, avoid: Option<&Simplex>) -> Option<(Simplex, Simplex)> {
        self.edges.iter().find_map(|(a, b, f)| {
            if avoid == Some(f) {
                return None;
            }
            if a == top {
                Some((b.clone(), f.clone()))
            } else if b == top {
                Some((a.clone(), f.clone()))
            } else {
                None
            }
        })
    }
}

/// Build G_i and verify the degree contract: a top with a good image meets
/// exactly one qualifying face, any other meets zero or two, and the face
/// on the tokens I - i lies in exactly one top (the distinguished sigma_i).
pub fn build_pivot_graph(
    fr: &MatroidFramework,
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, VertexId>,
    i: usize,
) -> Result<PivotGraph> {
    let n1 = fr.index_count();
    if d.index_count() != n1 {
        return Err(ScarfError::Dimension(format!(
            "family on {} indices, framework on {n1}",
            d.index_count()
        )));
    }
    let e = envelope(d)?;
    let full = e.indices();
    let tops = e.complex(&full).simplices_of_dim(n1 as i64 - 1);
    let mut by_face: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
    for t in &tops {
        for v in t.vertices() {
            by_face.entry(t.without(v)).or_default().push(t.clone());
        }
    }
    let boundary_face = Simplex::new((0..n1).filter(|&j| j != i).map(VertexId::index_token));
    let mut edges = BTreeSet::new();
    let mut sigma_i = None;
    let mut qualifying: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (face, owners) in &by_face {
        if !delta_on_face(fr, c, i, face)? {
            continue;
        }
        match owners.as_slice() {
            [a, b] => {
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                edges.insert((a.clone(), b.clone(), face.clone()));
                *qualifying.entry(a.clone()).or_insert(0) += 1;
                *qualifying.entry(b.clone()).or_insert(0) += 1;
            }
            [a] => {
                if *face != boundary_face {
                    return Err(ScarfError::FrameworkViolated(format!(
                        "qualifying face {face:?} on the boundary away from I - {i}"
                    )));
                }
                sigma_i = Some(a.clone());
                *qualifying.entry(a.clone()).or_insert(0) += 1;
            }
            _ => {
                return Err(ScarfError::ChainSimplexViolated(format!(
                    "face {face:?} lies in {} top simplices",
                    owners.len()
                )))
            }
        }
    }
    let sigma_i = sigma_i.ok_or_else(|| {
        ScarfError::FrameworkViolated(format!("no top simplex over the face I - {i}"))
    })?;
    for t in &tops {
        let q = qualifying.get(t).copied().unwrap_or(0);
        let good = matches!(phi_set(fr, c, t)?, Some(s) if good_basis(fr, &s));
        let ok = if good { q == 1 } else { q == 0 || q == 2 };
        if !ok {
            return Err(ScarfError::FrameworkViolated(format!(
                "degree contract fails at {t:?}: {q} qualifying faces, good = {good}"
            )));
        }
    }
    Ok(PivotGraph { i, sigma_i, tops, edges })
}

fn solution_from_top(
    fr: &MatroidFramework,
    c: &BTreeMap<VertexId, VertexId>,
    top: &Simplex,
) -> Result<Solution> {
    let tokens: BTreeSet<usize> = top.vertices().filter_map(|v| v.as_index_token()).collect();
    let cset: IndexSet = (0..fr.index_count()).filter(|j| !tokens.contains(j)).collect();
    let tau = Simplex::new(
        top.vertices()
            .filter(|v| v.as_index_token().is_none())
            .cloned(),
    );
    let basis = phi_set(fr, c, top)?
        .ok_or_else(|| ScarfError::FrameworkViolated("collapsed solution simplex".into()))?;
    let witness = convex_hull_contains(&fr.matroid, &basis, &fr.b).1;
    Ok(Solution {
        c: cset,
        tau,
        basis: basis.into_iter().collect(),
        coeffs: Vec::new(),
        witness,
    })
}

/// Brute-force search: all (C, tau) with tau a top simplex of D(C) whose
/// colors plus the unlabeled basis elements form a good basis. Odd count.
pub fn solve_matroid_nd(
    fr: &MatroidFramework,
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, VertexId>,
) -> Result<Vec<Solution>> {
    if !fr.nondegenerate {
        return Err(ScarfError::DegenerateFramework(
            "degenerate framework".into(),
        ));
    }
    let n1 = fr.index_count();
    if d.index_count() != n1 {
        return Err(ScarfError::Dimension("index sets differ".into()));
    }
    let mut out = Vec::new();
    for a in d.subsets() {
        if a.is_empty() {
            continue;
        }
        let co = Simplex::new(
            (0..n1)
                .filter(|j| !a.contains(j))
                .map(VertexId::index_token),
        );
        for tau in d.complex(&a).simplices_of_dim(a.len() as i64 - 1) {
            let top = tau.union(&co);
            if let Some(s) = phi_set(fr, c, &top)? {
                if good_basis(fr, &s) {
                    out.push(solution_from_top(fr, c, &top)?);
                }
            }
        }
    }
    if out.len() % 2 == 0 {
        return Err(ScarfError::TheoremViolated(format!(
            "even solution count {}",
            out.len()
        )));
    }
    Ok(out)
}

/// Path-following mode: walk G_i from sigma_i to a good simplex.
pub fn solve_matroid_nd_path(
    fr: &MatroidFramework,
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, VertexId>,
    i: usize,
) -> Result<Solution> {
    if !fr.nondegenerate {
        return Err(ScarfError::DegenerateFramework(
            "degenerate framework".into(),
        ));
    }
    let g = build_pivot_graph(fr, d, c, i)?;
    let mut current = g.sigma_i.clone();
    let mut entry: Option<Simplex> = None;
    let mut seen: BTreeSet<Simplex> = BTreeSet::new();
    loop {
        if !seen.insert(current.clone()) {
            return Err(ScarfError::FrameworkViolated("pivot walk cycled".into()));
        }
        let good = matches!(phi_set(fr, c, &current)?, Some(s) if good_basis(fr, &s));
        if good {
            return solution_from_top(fr, c, &current);
        }
        let Some((next, face)) = g.step(&current, entry.as_ref()) else {
            return Err(ScarfError::FrameworkViolated(
                "pivot walk stuck at a simplex without an exit".into(),
            ));
        };
        entry = Some(face);
        current = next;
    }
}

fn delete_element(m: &OrientedMatroid, e: &VertexId) -> Result<OrientedMatroid> {
    let ground: ElementSet = m.ground().iter().filter(|v| *v != e).cloned().collect();
    OrientedMatroid::new(
        ground,
        m.circuits().filter(|c| !c.in_support(e)).cloned(),
    )
}

/// General (possibly degenerate) solver: lexicographically extend by a
/// fresh p just past b, solve the non-degenerate framework (L - b, B, p)
/// and carry the basis back.
pub fn solve_matroid_general(
    fr: &MatroidFramework,
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, VertexId>,
) -> Result<Solution> {
    let n1 = fr.index_count();
    // reorder B so that B - v_first + b is a basis
    let first = (0..n1)
        .find(|&j| {
            let s: ElementSet = fr
                .basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != j)
                .map(|(_, v)| v.clone())
                .chain(std::iter::once(fr.b.clone()))
                .collect();
            s.len() == n1 && fr.matroid.is_independent(&s)
        })
        .ok_or_else(|| ScarfError::Invalid("b parallel to basis structure".into()))?;
    let mut seq = vec![fr.b.clone()];
    seq.extend(
        fr.basis
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != first)
            .map(|(_, v)| v.clone()),
    );
    let mut p = VertexId::new("p");
    while fr.matroid.ground().contains(&p) {
        p = VertexId::new(format!("{}'", p.0));
    }
    let l = lex_extension(&fr.matroid, &seq, &p)?;
    let reduced = delete_element(&l, &fr.b)?;
    if !is_acyclic(&reduced) {
        return Err(ScarfError::TheoremViolated(
            "lexicographic extension minus b is not acyclic".into(),
        ));
    }
    let fr2 = MatroidFramework::new(reduced, fr.basis.to_vec(), p)?;
    if !fr2.nondegenerate {
        return Err(ScarfError::InconsistentMatroid(
            "perturbed framework still degenerate".into(),
        ));
    }
    let sols = solve_matroid_nd(&fr2, d, c)?;
    let sol = sols.into_iter().next().ok_or_else(|| {
        ScarfError::TheoremViolated("perturbed instance has no solution".into())
    })?;
    // transfer: p in the hull over L implies b in the hull over M
    let basis: ElementSet = sol.basis.iter().cloned().collect();
    let (ok, witness) = convex_hull_contains(&fr.matroid, &basis, &fr.b);
    if !ok {
        return Err(ScarfError::TheoremViolated(
            "carried-back basis misses b in the original matroid".into(),
        ));
    }
    Ok(Solution { witness, ..sol })
}

/// Generalized Scarf theorem: a set sigma inside X + I, dominant with
/// respect to I under the extended orders, whose image is a good basis.
/// Returns sigma with the underlying solution.
pub fn solve_generalized_scarf(
    f: &OrderFamily,
    fr: &MatroidFramework,
    phi: &BTreeMap<VertexId, VertexId>,
) -> Result<(VertexSet, Solution)> {
    let n1 = fr.index_count();
    if f.index_count() != n1 {
        return Err(ScarfError::Dimension("index sets differ".into()));
    }
    let (sigma, sol) = if f.ground().is_empty() {
        // no vertices: sigma is I itself and the basis is B
        let basis: ElementSet = fr.basis.iter().cloned().collect();
        let witness = convex_hull_contains(&fr.matroid, &basis, &fr.b).1;
        let sigma: VertexSet = (0..n1).map(VertexId::index_token).collect();
        (
            sigma,
            Solution {
                c: IndexSet::new(),
                tau: Simplex::empty(),
                basis: fr.basis.to_vec(),
                coeffs: Vec::new(),
                witness,
            },
        )
    } else {
        let d = from_order_family(f)?;
        let sol = if fr.nondegenerate {
            solve_matroid_nd(fr, &d, phi)?
                .into_iter()
                .next()
                .ok_or_else(|| ScarfError::TheoremViolated("no solution".into()))?
        } else {
            solve_matroid_general(fr, &d, phi)?
        };
        let mut sigma: VertexSet = sol.tau.vertices().cloned().collect();
        for j in 0..n1 {
            if !sol.c.contains(&j) {
                sigma.insert(VertexId::index_token(j));
            }
        }
        (sigma, sol)
    };
    // post-verification straight from the theorem statement
    let ext = extend_orders(f)?;
    let full: IndexSet = (0..n1).collect();
    if sigma.len() != n1 || !ext.is_dominant(&sigma, &full) {
        return Err(ScarfError::TheoremViolated(format!(
            "{sigma:?} is not dominant with respect to I"
        )));
    }
    Ok((sigma, sol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Brute,
    Path,
}

/// Lazy pivot walk over the envelope of the order family's simplex-family:
/// top simplices are pairs (A, tau) with tau an A-cell, never materialized
/// globally. `elem` labels vertices and indices by ground tokens, `good`
/// decides the good-basis predicate.
pub fn follow_path(
    f: &OrderFamily,
    color: &BTreeMap<VertexId, VertexId>,
    index_element: &[VertexId],
    good: &dyn Fn(&ElementSet) -> bool,
    i: usize,
) -> Result<(IndexSet, VertexSet, ElementSet)> {
    let n1 = index_element.len();
    if f.index_count() != n1 || i >= n1 {
        return Err(ScarfError::Dimension("index sets differ".into()));
    }
    let vi = &index_element[i];
    let elems = |c: &IndexSet, sigma: &VertexSet, want: usize| -> Result<Option<ElementSet>> {
        let mut s = ElementSet::new();
        for x in sigma {
            s.insert(
                color
                    .get(x)
                    .ok_or_else(|| ScarfError::Invalid(format!("vertex {x} is uncolored")))?
                    .clone(),
            );
        }
        for j in 0..n1 {
            if !c.contains(&j) {
                s.insert(index_element[j].clone());
            }
        }
        Ok((s.len() == want).then_some(s))
    };
    let delta = |c: &IndexSet, sigma: &VertexSet| -> Result<bool> {
        match elems(c, sigma, n1 - 1)? {
            Some(s) if !s.contains(vi) => {
                let mut t = s;
                t.insert(vi.clone());
                Ok(good(&t))
            }
            _ => Ok(false),
        }
    };
    // entry through the boundary face I - i
    let entry_c: IndexSet = [i].into_iter().collect();
    if !delta(&entry_c, &VertexSet::new())? {
        return Err(ScarfError::FrameworkViolated(
            "the standard basis is not good".into(),
        ));
    }
    let (ups, _) = f.pivot_neighbors(&VertexSet::new(), &entry_c)?;
    let mut a = entry_c.clone();
    let mut tau = ups.into_iter().next().unwrap();
    let mut entry: Option<(IndexSet, VertexSet)> = Some((entry_c, VertexSet::new()));
    let mut seen: BTreeSet<(u64, VertexSet)> = BTreeSet::new();
    let mask = |a: &IndexSet| a.iter().fold(0u64, |m, &j| m | 1 << j);
    loop {
        if !seen.insert((mask(&a), tau.clone())) {
            return Err(ScarfError::FrameworkViolated("pivot walk cycled".into()));
        }
        if let Some(s) = elems(&a, &tau, n1)? {
            if good(&s) {
                return Ok((a, tau, s));
            }
        }
        // faces of the top (A, tau): drop a vertex, or absorb a token
        let mut exits: Vec<(IndexSet, VertexSet)> = Vec::new();
        for x in &tau {
            let sigma: VertexSet = tau.iter().filter(|y| *y != x).cloned().collect();
            exits.push((a.clone(), sigma));
        }
        for j in 0..n1 {
            if !a.contains(&j) {
                let mut c = a.clone();
                c.insert(j);
                exits.push((c, tau.clone()));
            }
        }
        let mut qualifying: Vec<(IndexSet, VertexSet)> = Vec::new();
        for face in exits {
            if Some(&face) != entry.as_ref() && delta(&face.0, &face.1)? {
                qualifying.push(face);
            }
        }
        let [face] = qualifying.as_slice() else {
            return Err(ScarfError::FrameworkViolated(format!(
                "degree contract fails at ({a:?}, {tau:?}): {} exits",
                qualifying.len()
            )));
        };
        let (ups, downs) = f.pivot_neighbors(&face.1, &face.0)?;
        let mut nexts: Vec<(IndexSet, VertexSet)> = Vec::new();
        for up in ups {
            nexts.push((face.0.clone(), up));
        }
        for down in downs {
            match down {
                DownMove::Subset(dset) => nexts.push((dset, face.1.clone())),
                DownMove::Empty => {}
            }
        }
        nexts.retain(|t| !(t.0 == a && t.1 == tau));
        let [next] = nexts.as_slice() else {
            return Err(ScarfError::FrameworkViolated(format!(
                "face ({:?}, {:?}) has {} other cofacets",
                face.0,
                face.1,
                nexts.len()
            )));
        };
        entry = Some(face.clone());
        a = next.0.clone();
        tau = next.1.clone();
    }
}

/// Deterministic ground token for a rational vector.
fn vector_token(v: &[Rat]) -> VertexId {
    VertexId::new(format!(
        "v({})",
        v.iter().map(rat_to_string).collect::<Vec<_>>().join(",")
    ))
}

/// Vector framework solver (Theorem 7.2 / the vector Scarf theorem): the
/// indices carry the standard basis e_i, vertices carry rational colors,
/// and the target b must be a nonnegative combination of the returned
/// independent set.
pub fn solve_vector(
    f: &OrderFamily,
    c: &BTreeMap<VertexId, Vec<Rat>>,
    b: &[Rat],
    mode: SolveMode,
    path_index: usize,
) -> Result<Solution> {
    let n1 = b.len();
    if f.index_count() != n1 {
        return Err(ScarfError::Dimension("index sets differ".into()));
    }
    if b.iter().any(|x| x.is_negative()) || b.iter().all(|x| x.is_zero()) {
        return Err(ScarfError::Invalid(
            "b must be nonnegative and nonzero".into(),
        ));
    }
    for x in f.ground() {
        match c.get(x) {
            Some(v) if v.len() == n1 => {}
            Some(_) => return Err(ScarfError::Dimension(format!("color of {x} has wrong size"))),
            None => return Err(ScarfError::Invalid(format!("vertex {x} is uncolored"))),
        }
    }
    let unit = |j: usize| -> Vec<Rat> {
        (0..n1)
            .map(|k| if k == j { Rat::from_integer(1.into()) } else { Rat::zero() })
            .collect()
    };
    // element table: index tokens carry e_j, colors are deduplicated by value
    let mut table: BTreeMap<VertexId, Vec<Rat>> = (0..n1)
        .map(|j| (VertexId::index_token(j), unit(j)))
        .collect();
    let mut color_elems: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for x in f.ground() {
        let id = vector_token(&c[x]);
        table.entry(id.clone()).or_insert_with(|| c[x].clone());
        color_elems.insert(x.clone(), id);
    }
    // boundedness (Lemma 7.1): no nonzero nonnegative dependency
    let cols: Vec<Vec<Rat>> = table.values().cloned().collect();
    let mut rows: Vec<Vec<Rat>> = (0..n1)
        .map(|k| cols.iter().map(|v| v[k].clone()).collect())
        .collect();
    rows.push(vec![Rat::from_integer(1.into()); cols.len()]);
    let mut rhs = vec![Rat::zero(); n1];
    rhs.push(Rat::from_integer(1.into()));
    if linalg::feasible_eq_nonneg(&rows, &rhs).is_some() {
        return Err(ScarfError::HypothesisFails(
            "nonnegative solution set is unbounded".into(),
        ));
    }
    let index_element: Vec<VertexId> = (0..n1).map(VertexId::index_token).collect();
    let coeffs_of = |s: &ElementSet| -> Option<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = s.iter().map(|e| table[e].clone()).collect();
        if linalg::rank_of_columns(&cols) != n1 {
            return None;
        }
        let y = linalg::solve(&cols, b)?;
        y.iter().all(|v| !v.is_negative()).then_some(y)
    };
    match mode {
        SolveMode::Brute => {
            for m in 1u32..1 << n1 {
                let a: IndexSet = (0..n1).filter(|&j| m >> j & 1 == 1).collect();
                let co: Vec<VertexId> = (0..n1)
                    .filter(|j| !a.contains(j))
                    .map(VertexId::index_token)
                    .collect();
                for cell in f.enumerate_cells(&a) {
                    let mut s: ElementSet = cell.iter().map(|x| color_elems[x].clone()).collect();
                    s.extend(co.iter().cloned());
                    if s.len() != n1 {
                        continue;
                    }
                    if let Some(y) = coeffs_of(&s) {
                        return Ok(Solution {
                            c: a,
                            tau: Simplex::new(cell),
                            basis: s.iter().cloned().collect(),
                            coeffs: y,
                            witness: None,
                        });
                    }
                }
            }
            Err(ScarfError::TheoremViolated("no solution found".into()))
        }
        SolveMode::Path => {
            // perturbed target p = b + lambda e_{j1} + ... for infinitesimal
            // lambda; a basis is good when every coefficient is nonnegative
            // for all small lambda (lexicographic sign test)
            let i0 = (0..n1).find(|&k| !b[k].is_zero()).unwrap();
            let dirs: Vec<usize> = (0..n1).filter(|&k| k != i0).collect();
            let good = |s: &ElementSet| -> bool {
                let cols: Vec<Vec<Rat>> = s.iter().map(|e| table[e].clone()).collect();
                if cols.len() != n1 || linalg::rank_of_columns(&cols) != n1 {
                    return false;
                }
                let mut series: Vec<Vec<Rat>> = vec![Vec::new(); n1];
                let mut targets: Vec<Vec<Rat>> = vec![b.to_vec()];
                targets.extend(dirs.iter().map(|&j| unit(j)));
                for t in &targets {
                    let Some(y) = linalg::solve(&cols, t) else {
                        return false;
                    };
                    for (k, v) in y.into_iter().enumerate() {
                        series[k].push(v);
                    }
                }
                series.iter().all(|poly| {
                    match poly.iter().find(|v| !v.is_zero()) {
                        Some(first) => first.is_positive(),
                        None => true,
                    }
                })
            };
            let (a, cell, s) = follow_path(f, &color_elems, &index_element, &good, path_index)?;
            let y = coeffs_of(&s).ok_or_else(|| {
                ScarfError::TheoremViolated("path endpoint is not a valid basis for b".into())
            })?;
            Ok(Solution {
                c: a,
                tau: Simplex::new(cell),
                basis: s.iter().cloned().collect(),
                coeffs: y,
                witness: None,
            })
        }
    }
}

/// The hedgehog cocircuit eta_i: supported off the hyperplane spanned by
/// B - v_i, oriented with eta_i(v_i) positive.
pub fn hedgehog_cocircuits(fr: &MatroidFramework) -> Result<Vec<SignedSubset>> {
    let all = cocircuits(&fr.matroid)?;
    let mut out = Vec::with_capacity(fr.index_count());
    for i in 0..fr.index_count() {
        let vi = &fr.basis[i];
        let rest: ElementSet = fr
            .basis
            .iter()
            .filter(|v| *v != vi)
            .cloned()
            .collect();
        let h = fr.matroid.span(&rest);
        let complement: ElementSet = fr.matroid.ground().difference(&h).cloned().collect();
        let eta = all
            .iter()
            .find(|t| t.support() == complement && t.sign(vi) > 0)
            .ok_or_else(|| {
                ScarfError::InconsistentMatroid(format!(
                    "no cocircuit for the hyperplane spanned by B - v_{i}"
                ))
            })?;
        out.push(eta.clone());
    }
    Ok(out)
}

/// Hedgehog solver (Theorem 8.7): for a coloring sending every vertex of
/// D(C), C inside I - i, into the closed nonpositive half-space of eta_i,
/// some full simplex of D(I) maps onto a good basis.
pub fn solve_hedgehog(
    fr: &MatroidFramework,
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, VertexId>,
) -> Result<Solution> {
    let n1 = fr.index_count();
    if d.index_count() != n1 {
        return Err(ScarfError::Dimension("index sets differ".into()));
    }
    // Lemma 8.6 precondition: b avoids the hull of every proper subset of B
    for k in 1..n1 {
        for combo in fr.basis.iter().combinations(k) {
            let s: ElementSet = combo.into_iter().cloned().collect();
            if convex_hull_contains(&fr.matroid, &s, &fr.b).0 {
                return Err(ScarfError::HypothesisFails(format!(
                    "b lies in the hull of the proper subset {s:?} of B"
                )));
            }
        }
    }
    let etas = hedgehog_cocircuits(fr)?;
    let mut violations = Vec::new();
    for a in d.subsets() {
        for i in 0..n1 {
            if a.contains(&i) {
                continue;
            }
            for v in d.complex(&a).vertices() {
                let e = c
                    .get(&v)
                    .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} is uncolored")))?;
                if etas[i].sign(e) > 0 {
                    violations.push((i, v.clone()));
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(ScarfError::HypothesisFails(format!(
            "not a hedgehog coloring; positive side hits: {violations:?}"
        )));
    }
    let full = d.indices();
    for tau in d.complex(&full).simplices_of_dim(n1 as i64 - 1) {
        if let Some(s) = phi_set(fr, c, &tau)? {
            if good_basis(fr, &s) {
                let witness = convex_hull_contains(&fr.matroid, &s, &fr.b).1;
                return Ok(Solution {
                    c: full,
                    tau,
                    basis: s.into_iter().collect(),
                    coeffs: Vec::new(),
                    witness,
                });
            }
        }
    }
    Err(ScarfError::TheoremViolated(
        "no full simplex maps onto a good basis".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::{circuits_from_vectors, VectorConfiguration};
    use num_bigint::BigInt;

    fn v(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn r(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn example_family() -> OrderFamily {
        OrderFamily::new(
            vec![v("x"), v("y")],
            vec![vec![v("x"), v("y")], vec![v("y"), v("x")]],
        )
        .unwrap()
    }

    fn four_vector_framework() -> MatroidFramework {
        let m = circuits_from_vectors(
            &VectorConfiguration::new(
                [
                    (v("v0"), vec![r(1), r(0)]),
                    (v("v1"), vec![r(0), r(1)]),
                    (v("b"), vec![r(1), r(1)]),
                    (v("a"), vec![r(2), r(1)]),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap(),
        )
        .unwrap();
        MatroidFramework::new(m, vec![v("v0"), v("v1")], v("b")).unwrap()
    }

    #[test]
    fn framework_invariants() {
        let fr = four_vector_framework();
        assert!(fr.is_nondegenerate());
        assert_eq!(fr.index_count(), 2);
    }

    #[test]
    fn classical_solvers() {
        let t = from_order_family(&example_family()).unwrap();
        let c: BTreeMap<VertexId, usize> = [(v("x"), 0), (v("y"), 0)].into_iter().collect();
        let sols = solve_classical_any(&t, &c).unwrap();
        let zero: IndexSet = [0].into_iter().collect();
        assert_eq!(sols, vec![(zero, Simplex::new([v("y")]))]);

        let c2: BTreeMap<VertexId, usize> = [(v("x"), 0), (v("y"), 1)].into_iter().collect();
        let sols2 = solve_classical_any(&t, &c2).unwrap();
        let full: IndexSet = [0, 1].into_iter().collect();
        assert_eq!(sols2, vec![(full, Simplex::new([v("x"), v("y")]))]);
        assert_eq!(solve_scarf_dual(&t, &c2).unwrap().len(), 1);

        let sperner: BTreeMap<VertexId, usize> = [(v("x"), 1), (v("y"), 0)].into_iter().collect();
        assert_eq!(
            solve_classical_as(&t, &sperner).unwrap(),
            vec![Simplex::new([v("x"), v("y")])]
        );
        assert!(solve_classical_as(&t, &c2).is_err());
    }

    #[test]
    fn good_bases_and_cochains() {
        let fr = four_vector_framework();
        let b_set: ElementSet = [v("v0"), v("v1")].into_iter().collect();
        assert!(good_basis(&fr, &b_set));
        let va: ElementSet = [v("v1"), v("a")].into_iter().collect();
        assert!(good_basis(&fr, &va));
        let v0a: ElementSet = [v("v0"), v("a")].into_iter().collect();
        assert!(!good_basis(&fr, &v0a));

        let eps: ElementSet = [v("v1")].into_iter().collect();
        assert_eq!(delta_cochain(&fr, 0, &eps).unwrap(), 1);
        let bad: ElementSet = [v("v0")].into_iter().collect();
        assert!(matches!(
            delta_cochain(&fr, 0, &bad),
            Err(ScarfError::ElementCollision(_))
        ));
        // Lemma 6.4 on sigma = {v1, a}
        assert_eq!(coboundary_delta(&fr, 0, &va).unwrap(), 1);
        assert_eq!(coboundary_delta(&fr, 0, &v0a).unwrap(), 0);
    }

    #[test]
    fn pivot_graph_and_nd_solver() {
        let fr = four_vector_framework();
        let t = from_order_family(&example_family()).unwrap();
        let c: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("a")), (v("y"), v("a"))].into_iter().collect();
        let g = build_pivot_graph(&fr, &t, &c, 0).unwrap();
        assert_eq!(
            g.sigma_i,
            Simplex::new([v("y"), VertexId::index_token(1)])
        );
        let sols = solve_matroid_nd(&fr, &t, &c).unwrap();
        assert_eq!(sols.len(), 1);
        let zero: IndexSet = [0].into_iter().collect();
        assert_eq!(sols[0].c, zero);
        assert_eq!(sols[0].tau, Simplex::new([v("y")]));
        for i in 0..2 {
            let p = solve_matroid_nd_path(&fr, &t, &c, i).unwrap();
            assert!(sols.contains(&p), "path solution for i={i} not in brute list");
        }

        let c2: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("v0")), (v("y"), v("v1"))].into_iter().collect();
        let sols2 = solve_matroid_nd(&fr, &t, &c2).unwrap();
        assert_eq!(sols2.len(), 1);
        let full: IndexSet = [0, 1].into_iter().collect();
        assert_eq!(sols2[0].c, full);
    }

    #[test]
    fn general_solver_degenerate_instance() {
        // rank 3, b = v0 + v1 lies in the hull of two elements
        let m = circuits_from_vectors(
            &VectorConfiguration::new(
                [
                    (v("v0"), vec![r(1), r(0), r(0)]),
                    (v("v1"), vec![r(0), r(1), r(0)]),
                    (v("v2"), vec![r(0), r(0), r(1)]),
                    (v("b"), vec![r(1), r(1), r(0)]),
                    (v("m"), vec![r(1), r(1), r(1)]),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap(),
        )
        .unwrap();
        let fr = MatroidFramework::new(m, vec![v("v0"), v("v1"), v("v2")], v("b")).unwrap();
        assert!(!fr.is_nondegenerate());
        let f = OrderFamily::new(
            vec![v("x"), v("y"), v("z")],
            vec![
                vec![v("x"), v("y"), v("z")],
                vec![v("y"), v("z"), v("x")],
                vec![v("z"), v("x"), v("y")],
            ],
        )
        .unwrap();
        let d = from_order_family(&f).unwrap();
        let c: BTreeMap<VertexId, VertexId> = [
            (v("x"), v("m")),
            (v("y"), v("m")),
            (v("z"), v("m")),
        ]
        .into_iter()
        .collect();
        assert!(matches!(
            solve_matroid_nd(&fr, &d, &c),
            Err(ScarfError::DegenerateFramework(_))
        ));
        let sol = solve_matroid_general(&fr, &d, &c).unwrap();
        let basis: ElementSet = sol.basis.iter().cloned().collect();
        assert!(convex_hull_contains(fr.matroid(), &basis, fr.b()).0);
    }

    #[test]
    fn general_agrees_with_nd() {
        let fr = four_vector_framework();
        let t = from_order_family(&example_family()).unwrap();
        let c: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("a")), (v("y"), v("a"))].into_iter().collect();
        let g = solve_matroid_general(&fr, &t, &c).unwrap();
        let brute = solve_matroid_nd(&fr, &t, &c).unwrap();
        assert_eq!(g.c, brute[0].c);
        assert_eq!(g.tau, brute[0].tau);
        assert_eq!(g.basis, brute[0].basis);
    }

    #[test]
    fn generalized_scarf() {
        let fr = four_vector_framework();
        let f = example_family();
        let phi: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("a")), (v("y"), v("a"))].into_iter().collect();
        let (sigma, sol) = solve_generalized_scarf(&f, &fr, &phi).unwrap();
        let want: VertexSet = [v("y"), VertexId::index_token(1)].into_iter().collect();
        assert_eq!(sigma, want);
        let want_basis: Vec<VertexId> = vec![v("a"), v("v1")];
        assert_eq!(sol.basis, want_basis);
    }

    #[test]
    fn vector_solver() {
        let f = example_family();
        let c: BTreeMap<VertexId, Vec<Rat>> = [
            (v("x"), vec![r(2), r(1)]),
            (v("y"), vec![r(2), r(1)]),
        ]
        .into_iter()
        .collect();
        let b = [r(1), r(1)];
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let sol = solve_vector(&f, &c, &b, SolveMode::Brute, 0).unwrap();
        assert_eq!(sol.coeffs, vec![half.clone(), half.clone()]);
        for i in 0..2 {
            let p = solve_vector(&f, &c, &b, SolveMode::Path, i).unwrap();
            assert_eq!(p.coeffs, sol.coeffs);
            assert_eq!(p.basis, sol.basis);
        }

        // classical embedding: colors are unit vectors
        let c2: BTreeMap<VertexId, Vec<Rat>> = [
            (v("x"), vec![r(1), r(0)]),
            (v("y"), vec![r(0), r(1)]),
        ]
        .into_iter()
        .collect();
        let sol2 = solve_vector(&f, &c2, &b, SolveMode::Brute, 0).unwrap();
        assert!(sol2.coeffs.iter().all(|y| !y.is_negative()));

        // b equal to a basis vector still solves, with zero coefficients
        let b3 = [r(1), r(0)];
        let sol3 = solve_vector(&f, &c, &b3, SolveMode::Brute, 0).unwrap();
        assert!(sol3.coeffs.iter().any(|y| y.is_zero()));

        // unbounded: a color with negative coordinate sum breaks Lemma 7.1
        let c4: BTreeMap<VertexId, Vec<Rat>> = [
            (v("x"), vec![r(-1), r(0)]),
            (v("y"), vec![r(0), r(-1)]),
        ]
        .into_iter()
        .collect();
        assert!(matches!(
            solve_vector(&f, &c4, &b, SolveMode::Brute, 0),
            Err(ScarfError::HypothesisFails(_))
        ));
    }

    #[test]
    fn hedgehog() {
        // classical embedding M = I + b with circuits (I, {b})
        let m = circuits_from_vectors(
            &VectorConfiguration::new(
                [
                    (v("v0"), vec![r(1), r(0)]),
                    (v("v1"), vec![r(0), r(1)]),
                    (v("b"), vec![r(1), r(1)]),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap(),
        )
        .unwrap();
        let fr = MatroidFramework::new(m, vec![v("v0"), v("v1")], v("b")).unwrap();
        let t = from_order_family(&example_family()).unwrap();
        // AS coloring c(x)=1, c(y)=0 embeds as a hedgehog coloring
        let c: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("v1")), (v("y"), v("v0"))].into_iter().collect();
        let sol = solve_hedgehog(&fr, &t, &c).unwrap();
        let full: IndexSet = [0, 1].into_iter().collect();
        assert_eq!(sol.c, full);
        assert_eq!(sol.tau, Simplex::new([v("x"), v("y")]));

        // flipping one color breaks the predicate
        let bad: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("v0")), (v("y"), v("v0"))].into_iter().collect();
        assert!(matches!(
            solve_hedgehog(&fr, &t, &bad),
            Err(ScarfError::HypothesisFails(_))
        ));
    }
}
