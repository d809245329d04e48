//! Oriented matroids given by signed circuits: axiom validation, realization
//! from rational vector configurations, elimination, bases, convex hull,
//! cocircuits, Todd's circuit, and abstract lexicographic extensions.
//!
//! All sign decisions are exact; this module never touches floating point.

use crate::chains2::VertexId;
use crate::linalg;
use crate::{check_ground_cap, parse_rat, rat_to_string, Rat, Result, ScarfError};
use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type ElementSet = BTreeSet<VertexId>;

/// A signed subset: disjoint positive and negative parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSubset {
    plus: ElementSet,
    minus: ElementSet,
}

impl SignedSubset {
    pub fn new(plus: ElementSet, minus: ElementSet) -> Result<Self> {
        if !plus.is_disjoint(&minus) {
            return Err(ScarfError::Invalid(
                "signed subset parts must be disjoint".into(),
            ));
        }
        Ok(SignedSubset { plus, minus })
    }

    pub fn from_ids(plus: &[&str], minus: &[&str]) -> Self {
        SignedSubset::new(
            plus.iter().map(|s| VertexId::from(*s)).collect(),
            minus.iter().map(|s| VertexId::from(*s)).collect(),
        )
        .unwrap()
    }

    pub fn plus(&self) -> &ElementSet {
        &self.plus
    }

    pub fn minus(&self) -> &ElementSet {
        &self.minus
    }

    pub fn support(&self) -> ElementSet {
        self.plus.union(&self.minus).cloned().collect()
    }

    pub fn support_len(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn in_support(&self, e: &VertexId) -> bool {
        self.plus.contains(e) || self.minus.contains(e)
    }

    /// +1, -1 or 0.
    pub fn sign(&self, e: &VertexId) -> i8 {
        if self.plus.contains(e) {
            1
        } else if self.minus.contains(e) {
            -1
        } else {
            0
        }
    }

    pub fn negate(&self) -> SignedSubset {
        SignedSubset {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// The orientation whose lexicographically least support element is
    /// positive.
    pub fn canonical(&self) -> SignedSubset {
        match self.support().iter().next() {
            Some(least) if self.minus.contains(least) => self.negate(),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.plus, self.minus)
    }
}

/// Oriented matroid on a finite ground set, presented by its signed circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    ground: ElementSet,
    circuits: BTreeSet<SignedSubset>,
}

impl OrientedMatroid {
    /// Stores the circuit list as given; use [`validate_axioms`] to check it.
    pub fn new(
        ground: ElementSet,
        circuits: impl IntoIterator<Item = SignedSubset>,
    ) -> Result<Self> {
        let circuits: BTreeSet<SignedSubset> = circuits.into_iter().collect();
        for c in &circuits {
            if !c.support().is_subset(&ground) {
                return Err(ScarfError::Invalid(format!(
                    "circuit {c:?} leaves the ground set"
                )));
            }
        }
        Ok(OrientedMatroid { ground, circuits })
    }

    /// Same, but closes the given circuits under negation.
    pub fn with_negations(
        ground: ElementSet,
        circuits: impl IntoIterator<Item = SignedSubset>,
    ) -> Result<Self> {
        let mut all = Vec::new();
        for c in circuits {
            all.push(c.negate());
            all.push(c);
        }
        OrientedMatroid::new(ground, all)
    }

    pub fn ground(&self) -> &ElementSet {
        &self.ground
    }

    pub fn circuits(&self) -> impl Iterator<Item = &SignedSubset> {
        self.circuits.iter()
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_circuit(&self, s: &SignedSubset) -> bool {
        self.circuits.contains(s)
    }

    pub fn is_independent(&self, x: &ElementSet) -> bool {
        !self.circuits.iter().any(|c| c.support().is_subset(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    Fail { axiom: &'static str, witness: String },
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

/// Check circuit axioms (i)-(iv) plus strong elimination, reporting the
/// first failure with a witness.
pub fn validate_axioms(m: &OrientedMatroid) -> AxiomReport {
    // (i) the empty set is not a circuit
    if m.circuits.iter().any(|c| c.is_empty()) {
        return AxiomReport::Fail {
            axiom: "(i) empty circuit",
            witness: "empty signed subset listed as a circuit".into(),
        };
    }
    // (ii) closure under negation
    for c in &m.circuits {
        if !m.circuits.contains(&c.negate()) {
            return AxiomReport::Fail {
                axiom: "(ii) negation closure",
                witness: format!("{c:?} present without its negation"),
            };
        }
    }
    // (iii) support comparability
    for s in &m.circuits {
        for t in &m.circuits {
            if s.support().is_subset(&t.support()) && *s != *t && *s != t.negate() {
                return AxiomReport::Fail {
                    axiom: "(iii) support comparability",
                    witness: format!("{s:?} inside {t:?}"),
                };
            }
        }
    }
    // (iv) weak elimination
    for s in &m.circuits {
        for t in &m.circuits {
            if *s == t.negate() {
                continue;
            }
            for u in s.plus.intersection(&t.minus) {
                let ok = m.circuits.iter().any(|w| {
                    w.plus.iter().all(|e| e != u && (s.plus.contains(e) || t.plus.contains(e)))
                        && w.minus
                            .iter()
                            .all(|e| e != u && (s.minus.contains(e) || t.minus.contains(e)))
                });
                if !ok {
                    return AxiomReport::Fail {
                        axiom: "(iv) weak elimination",
                        witness: format!("sigma={s:?}, tau={t:?}, u={u}"),
                    };
                }
            }
        }
    }
    // strong elimination
    for s in &m.circuits {
        for t in &m.circuits {
            let us: Vec<&VertexId> = s
                .plus
                .intersection(&t.minus)
                .chain(s.minus.intersection(&t.plus))
                .collect();
            let vs: Vec<&VertexId> = s
                .plus
                .iter()
                .filter(|e| !t.minus.contains(*e))
                .chain(s.minus.iter().filter(|e| !t.plus.contains(*e)))
                .collect();
            for u in &us {
                for v in &vs {
                    if eliminate_search(m, s, t, u, Some(v)).is_none() {
                        return AxiomReport::Fail {
                            axiom: "strong elimination",
                            witness: format!("sigma={s:?}, tau={t:?}, u={u}, v={v}"),
                        };
                    }
                }
            }
        }
    }
    AxiomReport::Pass
}

/// Lexicographically least circuit w with w+ inside (s+ u t+) - u,
/// w- inside (s- u t-) - u, and v in the support when required.
fn eliminate_search(
    m: &OrientedMatroid,
    s: &SignedSubset,
    t: &SignedSubset,
    u: &VertexId,
    v: Option<&VertexId>,
) -> Option<SignedSubset> {
    m.circuits
        .iter()
        .find(|w| {
            w.plus
                .iter()
                .all(|e| e != u && (s.plus.contains(e) || t.plus.contains(e)))
                && w.minus
                    .iter()
                    .all(|e| e != u && (s.minus.contains(e) || t.minus.contains(e)))
                && v.map_or(true, |v| w.in_support(v))
        })
        .cloned()
}

/// Strong elimination (the existence claim of Theorem 5.1), with the
/// deterministic tie-break of returning the least qualifying circuit.
pub fn strong_eliminate(
    m: &OrientedMatroid,
    sigma: &SignedSubset,
    tau: &SignedSubset,
    u: &VertexId,
    v: &VertexId,
) -> Result<SignedSubset> {
    if !m.is_circuit(sigma) || !m.is_circuit(tau) {
        return Err(ScarfError::NotEliminationPosition);
    }
    // only the u position is gated; a hopeless v simply makes the search
    // come back empty
    let u_ok = (sigma.plus.contains(u) && tau.minus.contains(u))
        || (sigma.minus.contains(u) && tau.plus.contains(u));
    if !u_ok {
        return Err(ScarfError::NotEliminationPosition);
    }
    eliminate_search(m, sigma, tau, u, Some(v)).ok_or_else(|| {
        ScarfError::AxiomFailure(format!(
            "no elimination circuit for sigma={sigma:?}, tau={tau:?}, u={u}, v={v}"
        ))
    })
}

impl OrientedMatroid {
    /// All bases (maximal independent sets) and the rank.
    pub fn bases(&self) -> Result<(BTreeSet<ElementSet>, usize)> {
        check_ground_cap(self.ground.len())?;
        let elems: Vec<&VertexId> = self.ground.iter().collect();
        let mut best: Vec<ElementSet> = Vec::new();
        let mut sizes: BTreeSet<usize> = BTreeSet::new();
        // maximal independent = independent with no independent proper superset
        let mut independent: Vec<ElementSet> = Vec::new();
        for k in 0..=elems.len() {
            for combo in elems.iter().combinations(k) {
                let x: ElementSet = combo.into_iter().map(|v| (**v).clone()).collect();
                if self.is_independent(&x) {
                    independent.push(x);
                }
            }
        }
        for x in &independent {
            let maximal = !independent
                .iter()
                .any(|y| x != y && x.is_subset(y));
            if maximal {
                sizes.insert(x.len());
                best.push(x.clone());
            }
        }
        if sizes.len() > 1 {
            return Err(ScarfError::NotAMatroid(format!(
                "maximal independent sets of unequal sizes {sizes:?}"
            )));
        }
        let rank = sizes.into_iter().next().unwrap_or(0);
        Ok((best.into_iter().collect(), rank))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.bases()?.1)
    }

    /// Closure of x: x plus every a with a circuit through a supported in
    /// x + a.
    pub fn span(&self, x: &ElementSet) -> ElementSet {
        let mut s = x.clone();
        for a in self.ground.difference(x) {
            let in_span = self.circuits.iter().any(|c| {
                c.in_support(a) && c.support().iter().all(|e| e == a || x.contains(e))
            });
            if in_span {
                s.insert(a.clone());
            }
        }
        s
    }
}

/// Is y in the convex hull of X? True when y is in X, or when some circuit
/// has positive part inside X and negative part exactly {y}. Returns the
/// witness circuit in the second case.
pub fn convex_hull_contains(
    m: &OrientedMatroid,
    x: &ElementSet,
    y: &VertexId,
) -> (bool, Option<SignedSubset>) {
    if x.contains(y) {
        return (true, None);
    }
    let w = m
        .circuits
        .iter()
        .find(|c| c.minus.len() == 1 && c.minus.contains(y) && c.plus.is_subset(x));
    (w.is_some(), w.cloned())
}

/// No all-positive circuit.
pub fn is_acyclic(m: &OrientedMatroid) -> bool {
    !m.circuits.iter().any(|c| c.minus.is_empty())
}

/// Rational vector configuration; realizes an oriented matroid.
#[derive(Clone, Debug)]
pub struct VectorConfiguration {
    vectors: BTreeMap<VertexId, Vec<Rat>>,
}

impl VectorConfiguration {
    pub fn new(vectors: BTreeMap<VertexId, Vec<Rat>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(ScarfError::Invalid("empty configuration".into()));
        }
        let dim = vectors.values().next().unwrap().len();
        for (id, v) in &vectors {
            if v.len() != dim {
                return Err(ScarfError::Dimension(format!(
                    "vector {id} has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            if v.iter().all(|c| c.is_zero()) {
                return Err(ScarfError::DegenerateConfig(format!("zero vector {id}")));
            }
        }
        let ids: Vec<&VertexId> = vectors.keys().collect();
        for pair in ids.iter().combinations(2) {
            let (a, b) = (&vectors[*pair[0]], &vectors[*pair[1]]);
            if linalg::rank(&[a.clone(), b.clone()]) < 2 {
                return Err(ScarfError::DegenerateConfig(format!(
                    "vectors {} and {} are proportional",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(VectorConfiguration { vectors })
    }

    pub fn get(&self, id: &VertexId) -> Option<&Vec<Rat>> {
        self.vectors.get(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &VertexId> {
        self.vectors.keys()
    }

    pub fn dim(&self) -> usize {
        self.vectors.values().next().map_or(0, |v| v.len())
    }
}

/// Circuits of a vector configuration: minimal linearly dependent subsets,
/// signed by the (unique up to global sign) dependency.
pub fn circuits_from_vectors(cfg: &VectorConfiguration) -> Result<OrientedMatroid> {
    check_ground_cap(cfg.vectors.len())?;
    let ids: Vec<&VertexId> = cfg.vectors.keys().collect();
    let dim = cfg.dim();
    let mut circuits = Vec::new();
    for k in 2..=(dim + 1).min(ids.len()) {
        for combo in ids.iter().combinations(k) {
            let cols: Vec<Vec<Rat>> = combo.iter().map(|id| cfg.vectors[**id].clone()).collect();
            let kernel = linalg::kernel_basis(&cols);
            // a circuit support: one-dimensional kernel with no zero entry
            if kernel.len() == 1 && kernel[0].iter().all(|c| !c.is_zero()) {
                let mut plus = ElementSet::new();
                let mut minus = ElementSet::new();
                for (id, coeff) in combo.iter().zip(&kernel[0]) {
                    if coeff > &Rat::from_integer(0.into()) {
                        plus.insert((**id).clone());
                    } else {
                        minus.insert((**id).clone());
                    }
                }
                let c = SignedSubset::new(plus, minus)?;
                circuits.push(c.negate());
                circuits.push(c);
            }
        }
    }
    OrientedMatroid::new(cfg.vectors.keys().cloned().collect(), circuits)
}

/// Todd's circuit: eliminate the opposite-sign overlap of sigma and tau
/// while keeping w. Returns the circuit and whether the uniqueness
/// hypothesis (tau's support inside sigma's support + w) held.
pub fn todd_circuit(
    m: &OrientedMatroid,
    sigma: &SignedSubset,
    tau: &SignedSubset,
    w: &VertexId,
) -> Result<(SignedSubset, bool)> {
    if !m.is_circuit(sigma) || !m.is_circuit(tau) {
        return Err(ScarfError::ToddPreconditions("not circuits".into()));
    }
    let s_supp = sigma.support();
    let t_supp = tau.support();
    if !t_supp.contains(w) || s_supp.contains(w) {
        return Err(ScarfError::ToddPreconditions(format!(
            "w={w} must lie in tau's support and outside sigma's"
        )));
    }
    let opposite = s_supp
        .intersection(&t_supp)
        .any(|e| sigma.sign(e) == -tau.sign(e));
    if !opposite {
        return Err(ScarfError::ToddPreconditions(
            "no common element of opposite sign".into(),
        ));
    }
    let qualifies = |c: &SignedSubset| {
        c.plus
            .iter()
            .all(|e| (sigma.plus.contains(e) || tau.plus.contains(e)) && !sigma.minus.contains(e))
            && c.minus
                .iter()
                .all(|e| (sigma.minus.contains(e) || tau.minus.contains(e)) && !sigma.plus.contains(e))
            && c.in_support(w)
    };
    let found: Vec<&SignedSubset> = m.circuits.iter().filter(|c| qualifies(c)).collect();
    let omega = found
        .first()
        .cloned()
        .ok_or_else(|| ScarfError::AxiomFailure("no Todd circuit".into()))?
        .clone();
    let unique_case = t_supp.is_subset(&s_supp.union(&std::iter::once(w.clone()).collect()).cloned().collect());
    if unique_case {
        if found.len() != 1 {
            return Err(ScarfError::TheoremViolated(format!(
                "Todd uniqueness fails: {} qualifying circuits",
                found.len()
            )));
        }
        let diff_ok = s_supp
            .difference(&t_supp)
            .all(|e| omega.in_support(e));
        if !diff_ok {
            return Err(ScarfError::TheoremViolated(
                "Todd circuit misses sigma minus tau".into(),
            ));
        }
    }
    Ok((omega, unique_case))
}

/// Cocircuits: for each hyperplane (span of an independent (rank-1)-set)
/// the two opposite sign vectors supported on the complement, signs read
/// from fundamental circuits. Post-verified orthogonal to every circuit.
pub fn cocircuits(m: &OrientedMatroid) -> Result<BTreeSet<SignedSubset>> {
    check_ground_cap(m.ground.len())?;
    let rank = m.rank()?;
    if rank == 0 {
        return Ok(BTreeSet::new());
    }
    let elems: Vec<&VertexId> = m.ground.iter().collect();
    // hyperplane -> one independent spanning set
    let mut hyperplanes: BTreeMap<ElementSet, ElementSet> = BTreeMap::new();
    for combo in elems.iter().combinations(rank - 1) {
        let x: ElementSet = combo.into_iter().map(|v| (**v).clone()).collect();
        if m.is_independent(&x) {
            hyperplanes.entry(m.span(&x)).or_insert(x);
        }
    }
    let mut out = BTreeSet::new();
    for (h, x) in &hyperplanes {
        let rest: Vec<&VertexId> = m.ground.difference(h).collect();
        let Some(&e) = rest.first() else { continue };
        let mut plus: ElementSet = std::iter::once(e.clone()).collect();
        let mut minus = ElementSet::new();
        for &u in &rest[1..] {
            let mut dom = x.clone();
            dom.insert(e.clone());
            dom.insert(u.clone());
            let c = m
                .circuits
                .iter()
                .find(|c| c.in_support(u) && c.support().is_subset(&dom))
                .ok_or_else(|| {
                    ScarfError::InconsistentMatroid(format!(
                        "no fundamental circuit of {u} over the basis through {e}"
                    ))
                })?;
            let c = if c.minus.contains(u) { c.clone() } else { c.negate() };
            match c.sign(e) {
                1 => {
                    plus.insert(u.clone());
                }
                -1 => {
                    minus.insert(u.clone());
                }
                _ => {
                    return Err(ScarfError::InconsistentMatroid(format!(
                        "fundamental circuit of {u} avoids {e}"
                    )))
                }
            }
        }
        let t = SignedSubset::new(plus, minus)?;
        out.insert(t.negate());
        out.insert(t);
    }
    for t in &out {
        for c in &m.circuits {
            if !is_orthogonal(t, c) {
                return Err(ScarfError::InconsistentMatroid(format!(
                    "cocircuit {t:?} not orthogonal to circuit {c:?}"
                )));
            }
        }
    }
    Ok(out)
}

/// Orthogonality of signed subsets: disjoint supports, or both an agreeing
/// and a disagreeing common element.
pub fn is_orthogonal(a: &SignedSubset, b: &SignedSubset) -> bool {
    let mut agree = false;
    let mut disagree = false;
    for e in a.support().intersection(&b.support()) {
        if a.sign(e) == b.sign(e) {
            agree = true;
        } else {
            disagree = true;
        }
    }
    (agree && disagree) || (!agree && !disagree)
}

/// Lexicographic extension of m by a fresh element p placed just past the
/// head of the given independent sequence: p behaves like
/// b0 + lambda b1 + ... for infinitesimal lambda > 0, constructed purely
/// combinatorially through the extended cocircuits.
pub fn lex_extension(
    m: &OrientedMatroid,
    ordered_basis: &[VertexId],
    p: &VertexId,
) -> Result<OrientedMatroid> {
    check_ground_cap(m.ground.len() + 1)?;
    if m.ground.contains(p) {
        return Err(ScarfError::ElementCollision(format!(
            "{p} is already a ground element"
        )));
    }
    if ordered_basis.is_empty() {
        return Err(ScarfError::Invalid("empty basis sequence".into()));
    }
    let basis_set: ElementSet = ordered_basis.iter().cloned().collect();
    if basis_set.len() != ordered_basis.len() || !basis_set.is_subset(&m.ground) {
        return Err(ScarfError::Invalid(
            "basis sequence must be distinct ground elements".into(),
        ));
    }
    if !m.is_independent(&basis_set) {
        return Err(ScarfError::Invalid("basis sequence is dependent".into()));
    }
    let rank = m.rank()?;
    // extended cocircuits: those missing the sequence stay; those meeting it
    // pick up p with the sign of the earliest sequence element they contain
    let mut extended = Vec::new();
    for t in cocircuits(m)? {
        match ordered_basis.iter().find(|a| t.in_support(a)) {
            None => extended.push(t),
            Some(a) => {
                let mut plus = t.plus.clone();
                let mut minus = t.minus.clone();
                if t.sign(a) > 0 {
                    plus.insert(p.clone());
                } else {
                    minus.insert(p.clone());
                }
                extended.push(SignedSubset::new(plus, minus)?);
            }
        }
    }
    // circuits through p: minimal-support signed sets orthogonal to every
    // extended cocircuit
    let elems: Vec<&VertexId> = m.ground.iter().collect();
    let mut found: Vec<SignedSubset> = Vec::new();
    for k in 0..=rank.min(elems.len()) {
        for combo in elems.iter().combinations(k) {
            let supp: ElementSet = combo.iter().map(|v| (**v).clone()).collect();
            if m.circuits.iter().any(|c| c.support().is_subset(&supp)) {
                continue; // dependent already, cannot be minimal
            }
            if found.iter().any(|c| {
                c.support().iter().all(|e| e == p || supp.contains(e))
            }) {
                continue; // a smaller circuit through p fits inside
            }
            for mask in 0u32..1 << k {
                let mut plus: ElementSet = std::iter::once(p.clone()).collect();
                let mut minus = ElementSet::new();
                for (j, v) in combo.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        minus.insert((**v).clone());
                    } else {
                        plus.insert((**v).clone());
                    }
                }
                let cand = SignedSubset::new(plus, minus)?;
                if extended.iter().all(|t| is_orthogonal(&cand, t)) {
                    found.push(cand.negate());
                    found.push(cand);
                }
            }
        }
    }
    let mut ground = m.ground.clone();
    ground.insert(p.clone());
    let all: Vec<SignedSubset> = m.circuits.iter().cloned().chain(found).collect();
    let mm = OrientedMatroid::new(ground, all)?;
    let report = validate_axioms(&mm);
    if !report.is_pass() {
        return Err(ScarfError::InconsistentMatroid(format!(
            "lexicographic extension broke the axioms: {report:?}"
        )));
    }
    if mm.rank()? != rank {
        return Err(ScarfError::InconsistentMatroid(
            "lexicographic extension changed the rank".into(),
        ));
    }
    Ok(mm)
}

/// The unique v in B with b in the convex hull of B - v + w.
pub fn exchange_unique(
    m: &OrientedMatroid,
    b: &VertexId,
    basis: &ElementSet,
    w: &VertexId,
) -> Result<VertexId> {
    if basis.contains(w) || w == b {
        return Err(ScarfError::Invalid(format!(
            "{w} must lie outside the basis and differ from {b}"
        )));
    }
    if !convex_hull_contains(m, basis, b).0 {
        return Err(ScarfError::FrameworkViolated(format!(
            "{b} is not in the hull of the given basis"
        )));
    }
    let hits: Vec<&VertexId> = basis
        .iter()
        .filter(|v| {
            let mut swapped = basis.clone();
            swapped.remove(*v);
            swapped.insert(w.clone());
            convex_hull_contains(m, &swapped, b).0
        })
        .collect();
    match hits.as_slice() {
        [v] => Ok((*v).clone()),
        _ => Err(ScarfError::FrameworkViolated(format!(
            "{} exchange candidates instead of one",
            hits.len()
        ))),
    }
}

#[derive(Serialize, Deserialize)]
pub struct SignedSubsetJson {
    pub plus: Vec<String>,
    pub minus: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub circuits: Vec<SignedSubsetJson>,
}

impl OrientedMatroid {
    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            ground: self.ground.iter().map(|v| v.0.clone()).collect(),
            circuits: self
                .circuits
                .iter()
                .map(|c| SignedSubsetJson {
                    plus: c.plus.iter().map(|v| v.0.clone()).collect(),
                    minus: c.minus.iter().map(|v| v.0.clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        let ground: ElementSet = j.ground.iter().map(|s| VertexId::new(s.clone())).collect();
        if ground.len() != j.ground.len() {
            return Err(ScarfError::Invalid("duplicate ground ids".into()));
        }
        let circuits: Result<Vec<SignedSubset>> = j
            .circuits
            .iter()
            .map(|c| {
                SignedSubset::new(
                    c.plus.iter().map(|s| VertexId::new(s.clone())).collect(),
                    c.minus.iter().map(|s| VertexId::new(s.clone())).collect(),
                )
            })
            .collect();
        OrientedMatroid::new(ground, circuits?)
    }
}

impl VectorConfiguration {
    pub fn to_json(&self) -> BTreeMap<String, Vec<String>> {
        self.vectors
            .iter()
            .map(|(id, v)| (id.0.clone(), v.iter().map(rat_to_string).collect()))
            .collect()
    }

    pub fn from_json(j: &BTreeMap<String, Vec<String>>) -> Result<Self> {
        let mut vectors = BTreeMap::new();
        for (id, coords) in j {
            let v: Result<Vec<Rat>> = coords.iter().map(|s| parse_rat(s)).collect();
            vectors.insert(VertexId::new(id.clone()), v?);
        }
        VectorConfiguration::new(vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn r(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn cfg(entries: &[(&str, &[i64])]) -> VectorConfiguration {
        VectorConfiguration::new(
            entries
                .iter()
                .map(|(id, cs)| (v(id), cs.iter().map(|&c| r(c)).collect()))
                .collect(),
        )
        .unwrap()
    }

    /// {v0,v1,b} with b = v0 + v1.
    fn three_vector() -> OrientedMatroid {
        circuits_from_vectors(&cfg(&[("v0", &[1, 0]), ("v1", &[0, 1]), ("b", &[1, 1])])).unwrap()
    }

    /// Adds a = (2,1) = v0 + b.
    fn four_vector() -> OrientedMatroid {
        circuits_from_vectors(&cfg(&[
            ("v0", &[1, 0]),
            ("v1", &[0, 1]),
            ("b", &[1, 1]),
            ("a", &[2, 1]),
        ]))
        .unwrap()
    }

    #[test]
    fn circuits_of_small_configurations() {
        let none = circuits_from_vectors(&cfg(&[("v0", &[1, 0]), ("v1", &[0, 1])])).unwrap();
        assert_eq!(none.circuit_count(), 0);

        let m = three_vector();
        assert_eq!(m.circuit_count(), 2);
        assert!(m.is_circuit(&SignedSubset::from_ids(&["v0", "v1"], &["b"])));

        let m4 = four_vector();
        assert_eq!(m4.circuit_count(), 8);
        for c in [
            SignedSubset::from_ids(&["v0", "v1"], &["b"]),
            SignedSubset::from_ids(&["v0", "v1"], &["a"]),
            SignedSubset::from_ids(&["v0", "b"], &["a"]),
            SignedSubset::from_ids(&["v1", "a"], &["b"]),
        ] {
            assert!(m4.is_circuit(&c), "{c:?} missing");
            assert!(m4.is_circuit(&c.negate()));
        }
    }

    #[test]
    fn degenerate_configurations_rejected() {
        let zero = VectorConfiguration::new([(v("z"), vec![r(0), r(0)])].into_iter().collect());
        assert!(matches!(zero, Err(ScarfError::DegenerateConfig(_))));
        let prop = VectorConfiguration::new(
            [(v("x"), vec![r(1), r(1)]), (v("y"), vec![r(2), r(2)])]
                .into_iter()
                .collect(),
        );
        assert!(matches!(prop, Err(ScarfError::DegenerateConfig(_))));
    }

    #[test]
    fn axiom_validation() {
        assert!(validate_axioms(&four_vector()).is_pass());
        let empty = OrientedMatroid::new([v("g")].into_iter().collect(), []).unwrap();
        assert!(validate_axioms(&empty).is_pass());

        let m = three_vector();
        let broken = OrientedMatroid::new(
            m.ground().clone(),
            m.circuits().take(1).cloned().collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(matches!(
            validate_axioms(&broken),
            AxiomReport::Fail { axiom: "(ii) negation closure", .. }
        ));
    }

    #[test]
    fn elimination() {
        let m = four_vector();
        let s = SignedSubset::from_ids(&["v0", "v1"], &["b"]);
        let t = SignedSubset::from_ids(&["a"], &["v0", "b"]);
        let w = strong_eliminate(&m, &s, &t, &v("v0"), &v("v1")).unwrap();
        assert_eq!(w, SignedSubset::from_ids(&["v1", "a"], &["b"]));

        // u in neither opposite-sign intersection
        assert!(matches!(
            strong_eliminate(&m, &s, &t, &v("v1"), &v("v0")),
            Err(ScarfError::NotEliminationPosition)
        ));

        // sigma against its own negation on the 3-vector matroid: position is
        // legal but nothing avoids b
        let m3 = three_vector();
        assert!(matches!(
            strong_eliminate(&m3, &s, &s.negate(), &v("b"), &v("v0")),
            Err(ScarfError::AxiomFailure(_))
        ));
    }

    #[test]
    fn bases_and_rank() {
        let (b3, r3) = three_vector().bases().unwrap();
        assert_eq!(r3, 2);
        assert_eq!(b3.len(), 3);

        let free = OrientedMatroid::new([v("g")].into_iter().collect(), []).unwrap();
        let (b1, r1) = free.bases().unwrap();
        assert_eq!((b1.len(), r1), (1, 1));

        let (b4, r4) = four_vector().bases().unwrap();
        assert_eq!((b4.len(), r4), (6, 2));
    }

    #[test]
    fn hull_and_acyclicity() {
        let m = four_vector();
        let xs: ElementSet = [v("v0"), v("v1")].into_iter().collect();
        assert!(convex_hull_contains(&m, &xs, &v("v0")).0);
        let (inside, wit) = convex_hull_contains(&m, &xs, &v("b"));
        assert!(inside);
        assert_eq!(wit.unwrap(), SignedSubset::from_ids(&["v0", "v1"], &["b"]));
        let ys: ElementSet = [v("v1"), v("b")].into_iter().collect();
        assert!(!convex_hull_contains(&m, &ys, &v("v0")).0);

        assert!(is_acyclic(&m));
        let pos = circuits_from_vectors(&cfg(&[
            ("x", &[1, 0]),
            ("y", &[0, 1]),
            ("z", &[-1, -1]),
        ]))
        .unwrap();
        assert!(!is_acyclic(&pos));
    }

    #[test]
    fn cocircuits_of_small_matroids() {
        let m = three_vector();
        let cc = cocircuits(&m).unwrap();
        assert_eq!(cc.len(), 6);
        assert!(cc.contains(&SignedSubset::from_ids(&["v1", "b"], &[])));
        assert!(cc.contains(&SignedSubset::from_ids(&["v0", "b"], &[])));
        assert!(cc.contains(&SignedSubset::from_ids(&["v0"], &["v1"])));

        let free = OrientedMatroid::new([v("g")].into_iter().collect(), []).unwrap();
        let cf = cocircuits(&free).unwrap();
        assert_eq!(cf.len(), 2);
        assert!(cf.contains(&SignedSubset::from_ids(&["g"], &[])));

        let c4 = cocircuits(&four_vector()).unwrap();
        assert!(c4.contains(&SignedSubset::from_ids(&["a", "v0"], &["v1"])));
    }

    #[test]
    fn todd() {
        let m = four_vector();
        let s = SignedSubset::from_ids(&["v0", "v1"], &["b"]);
        let t = SignedSubset::from_ids(&["v0", "b"], &["a"]);
        let (w, unique) = todd_circuit(&m, &s, &t, &v("a")).unwrap();
        assert_eq!(w, SignedSubset::from_ids(&["v0", "v1"], &["a"]));
        assert!(unique);
        assert!(w.in_support(&v("v1")));

        assert!(matches!(
            todd_circuit(&m, &s, &t, &v("v0")),
            Err(ScarfError::ToddPreconditions(_))
        ));
        let t2 = SignedSubset::from_ids(&["v0", "v1"], &["a"]);
        assert!(matches!(
            todd_circuit(&m, &s, &t2, &v("a")),
            Err(ScarfError::ToddPreconditions(_))
        ));
    }

    #[test]
    fn lex_extension_matches_realization() {
        let m = three_vector();
        let ext = lex_extension(&m, &[v("b"), v("v1")], &v("p")).unwrap();
        // oracle: p = b + (1/2) v1 = (1, 3/2)
        let oracle = circuits_from_vectors(&VectorConfiguration::new(
            [
                (v("v0"), vec![r(1), r(0)]),
                (v("v1"), vec![r(0), r(1)]),
                (v("b"), vec![r(1), r(1)]),
                (v("p"), vec![r(1), Rat::new(BigInt::from(3), BigInt::from(2))]),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap())
        .unwrap();
        assert_eq!(ext, oracle);
        for c in ext.circuits() {
            if c.in_support(&v("p")) {
                assert_eq!(c.support_len(), 3);
            }
        }

        let free = OrientedMatroid::new([v("g")].into_iter().collect(), []).unwrap();
        let e1 = lex_extension(&free, &[v("g")], &v("p")).unwrap();
        assert_eq!(e1.circuit_count(), 2);
        assert!(e1.is_circuit(&SignedSubset::from_ids(&["g"], &["p"])));
    }

    #[test]
    fn exchange() {
        let m = four_vector();
        let basis: ElementSet = [v("v0"), v("v1")].into_iter().collect();
        assert_eq!(exchange_unique(&m, &v("b"), &basis, &v("a")).unwrap(), v("v0"));
        assert!(exchange_unique(&m, &v("b"), &basis, &v("v0")).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = four_vector();
        let j = m.to_json();
        let back = OrientedMatroid::from_json(&j).unwrap();
        assert_eq!(m, back);
    }
}
