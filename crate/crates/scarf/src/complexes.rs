//! Simplex-families over subsets of I: pseudo-simplex and chain-simplex
//! validation, fundamental chains, envelopes, construction from geometric
//! triangulations and from order families, and coloring classification.

use crate::chains2::{boundary, Mod2Chain, Simplex, VertexId};
use crate::linalg;
use crate::orders::{IndexSet, OrderFamily};
use crate::{check_ground_cap, Rat, Result, ScarfError};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Abstract simplicial complex, stored as its maximal simplices; faces are
/// materialized on demand. Always contains the empty simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    tops: BTreeSet<Simplex>,
}

impl Complex {
    /// Build from a generating set; non-maximal members are dropped.
    pub fn from_maximal(simplices: impl IntoIterator<Item = Simplex>) -> Complex {
        let gen: BTreeSet<Simplex> = simplices.into_iter().collect();
        let mut tops: BTreeSet<Simplex> = gen
            .iter()
            .filter(|s| !gen.iter().any(|t| *s != t && s.is_face_of(t)))
            .cloned()
            .collect();
        if tops.is_empty() {
            tops.insert(Simplex::empty());
        }
        Complex { tops }
    }

    /// The complex {empty}.
    pub fn trivial() -> Complex {
        Complex::from_maximal([Simplex::empty()])
    }

    pub fn maximal(&self) -> impl Iterator<Item = &Simplex> {
        self.tops.iter()
    }

    pub fn dim(&self) -> i64 {
        self.tops.iter().map(|s| s.dim()).max().unwrap_or(-1)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.tops.iter().any(|t| s.is_face_of(t))
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.tops
            .iter()
            .flat_map(|t| t.vertices().cloned())
            .collect()
    }

    pub fn simplices_of_dim(&self, d: i64) -> BTreeSet<Simplex> {
        if d < -1 {
            return BTreeSet::new();
        }
        let k = (d + 1) as usize;
        let mut out = BTreeSet::new();
        for t in &self.tops {
            if t.len() < k {
                continue;
            }
            for combo in t.vertices().combinations(k) {
                out.insert(Simplex::new(combo.into_iter().cloned()));
            }
        }
        out
    }

    pub fn all_simplices(&self) -> BTreeSet<Simplex> {
        self.tops.iter().flat_map(|t| t.faces()).collect()
    }

    /// Simplices of dimension dim(s)+1 containing s.
    pub fn cofacets(&self, s: &Simplex) -> BTreeSet<Simplex> {
        self.simplices_of_dim(s.dim() + 1)
            .into_iter()
            .filter(|t| s.is_face_of(t))
            .collect()
    }
}

pub fn mask_of(a: &IndexSet) -> u32 {
    a.iter().fold(0, |m, &i| m | 1 << i)
}

pub fn set_of(mask: u32, n1: usize) -> IndexSet {
    (0..n1).filter(|&i| mask >> i & 1 == 1).collect()
}

/// A simplex-family based on I = {0..n}: for every A inside I a complex
/// D(A) of dimension |A|-1, with D(empty) = {empty}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexFamily {
    n1: usize,
    complexes: Vec<Complex>, // indexed by the bitmask of A
}

impl SimplexFamily {
    pub fn new(n1: usize, complexes: Vec<Complex>) -> Result<Self> {
        check_ground_cap(n1)?;
        if complexes.len() != 1 << n1 {
            return Err(ScarfError::Invalid(format!(
                "need {} complexes, got {}",
                1u32 << n1,
                complexes.len()
            )));
        }
        if complexes[0] != Complex::trivial() {
            return Err(ScarfError::Invalid(
                "D(empty) must be the trivial complex".into(),
            ));
        }
        for (mask, c) in complexes.iter().enumerate() {
            let want = (mask as u32).count_ones() as i64 - 1;
            if c.dim() != want {
                return Err(ScarfError::Dimension(format!(
                    "D({:?}) has dimension {}, expected {}",
                    set_of(mask as u32, n1),
                    c.dim(),
                    want
                )));
            }
        }
        Ok(SimplexFamily { n1, complexes })
    }

    /// |I| = n + 1.
    pub fn index_count(&self) -> usize {
        self.n1
    }

    pub fn indices(&self) -> IndexSet {
        (0..self.n1).collect()
    }

    pub fn complex(&self, a: &IndexSet) -> &Complex {
        &self.complexes[mask_of(a) as usize]
    }

    /// All vertices appearing anywhere in the family.
    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.complexes.iter().flat_map(|c| c.vertices()).collect()
    }

    pub fn subsets(&self) -> impl Iterator<Item = IndexSet> + '_ {
        (0u32..1 << self.n1).map(|m| set_of(m, self.n1))
    }
}

/// D[[A]]: the sum of all d(A)-dimensional simplices of D(A).
pub fn fundamental_chain(d: &SimplexFamily, a: &IndexSet) -> Mod2Chain {
    let dim = a.len() as i64 - 1;
    Mod2Chain::new(dim, d.complex(a).simplices_of_dim(dim)).unwrap()
}

/// Pseudo-simplex test: for every nonempty A and every e(A)-simplex sigma of
/// D(A) or of some D(B) with B one index short, the count r + s equals 2,
/// where r counts top simplices of D(A) over sigma and s counts the B with
/// sigma in D(B).
pub fn is_pseudo_simplex(d: &SimplexFamily) -> (bool, Option<String>) {
    for a in d.subsets() {
        if a.is_empty() {
            continue;
        }
        let top_dim = a.len() as i64 - 1;
        let da = d.complex(&a);
        let subs: Vec<IndexSet> = a
            .iter()
            .map(|&j| a.iter().copied().filter(|&i| i != j).collect())
            .collect();
        let mut candidates: BTreeSet<Simplex> = da.simplices_of_dim(top_dim - 1);
        for b in &subs {
            candidates.extend(d.complex(b).simplices_of_dim(top_dim - 1));
        }
        let tops = da.simplices_of_dim(top_dim);
        for sigma in candidates {
            let r = tops.iter().filter(|t| sigma.is_face_of(t)).count();
            let s = subs.iter().filter(|b| d.complex(b).contains(&sigma)).count();
            if r + s != 2 {
                return (
                    false,
                    Some(format!("A={a:?}, sigma={sigma:?}: r={r}, s={s}")),
                );
            }
        }
    }
    (true, None)
}

/// Chain-simplex test: the boundary of D[[A]] equals the sum of the D[[B]]
/// over the B one index short of A.
pub fn is_chain_simplex(d: &SimplexFamily) -> (bool, Option<String>) {
    for a in d.subsets() {
        if a.is_empty() {
            continue;
        }
        let lhs = boundary(&fundamental_chain(d, &a)).unwrap();
        let mut rhs = Mod2Chain::zero(a.len() as i64 - 2);
        for &j in &a {
            let b: IndexSet = a.iter().copied().filter(|&i| i != j).collect();
            rhs = rhs.add(&fundamental_chain(d, &b)).unwrap();
        }
        if lhs != rhs {
            return (
                false,
                Some(format!("A={a:?}: boundary {lhs:?} differs from {rhs:?}")),
            );
        }
    }
    (true, None)
}

/// The envelope E of D: E(A) is the full simplex on the tokens of A for
/// proper A, and E(I) is generated by the joins sigma * (I - A) over
/// nonempty A and top simplices sigma of D(A).
pub fn envelope(d: &SimplexFamily) -> Result<SimplexFamily> {
    let n1 = d.index_count();
    let tokens: Vec<VertexId> = (0..n1).map(VertexId::index_token).collect();
    let vd = d.vertices();
    for t in &tokens {
        if vd.contains(t) {
            return Err(ScarfError::ElementCollision(format!(
                "family vertex {t} clashes with an index token"
            )));
        }
    }
    let full: IndexSet = (0..n1).collect();
    let mut complexes = Vec::with_capacity(1 << n1);
    for mask in 0u32..1 << n1 {
        let a = set_of(mask, n1);
        if a.len() < n1 {
            complexes.push(Complex::from_maximal([Simplex::new(
                a.iter().map(|&i| tokens[i].clone()),
            )]));
        } else {
            let mut tops = Vec::new();
            for b in d.subsets() {
                if b.is_empty() {
                    continue;
                }
                let co = Simplex::new(
                    full.difference(&b).map(|&i| tokens[i].clone()),
                );
                for sigma in d.complex(&b).simplices_of_dim(b.len() as i64 - 1) {
                    tops.push(sigma.union(&co));
                }
            }
            complexes.push(Complex::from_maximal(tops));
        }
    }
    SimplexFamily::new(n1, complexes)
}

/// Geometric triangulation of the standard simplex on I, vertices carried
/// with exact barycentric coordinates.
#[derive(Clone, Debug)]
pub struct Triangulation {
    n1: usize,
    coords: BTreeMap<VertexId, Vec<Rat>>,
    tops: BTreeSet<Simplex>,
}

impl Triangulation {
    pub fn new(
        n1: usize,
        coords: BTreeMap<VertexId, Vec<Rat>>,
        tops: BTreeSet<Simplex>,
    ) -> Result<Self> {
        if n1 == 0 {
            return Err(ScarfError::Invalid("empty index set".into()));
        }
        for (id, p) in &coords {
            if p.len() != n1 {
                return Err(ScarfError::Dimension(format!(
                    "vertex {id} has {} coordinates, expected {n1}",
                    p.len()
                )));
            }
            if p.iter().any(|c| c.is_negative()) || !p.iter().sum::<Rat>().is_one() {
                return Err(ScarfError::Invalid(format!(
                    "vertex {id} is not a barycentric point"
                )));
            }
        }
        let distinct: BTreeSet<&Vec<Rat>> = coords.values().collect();
        if distinct.len() != coords.len() {
            return Err(ScarfError::Invalid("coincident vertices".into()));
        }
        for t in &tops {
            if t.len() != n1 {
                return Err(ScarfError::Invalid(format!(
                    "top simplex {t:?} must have {n1} vertices"
                )));
            }
            let pts: Vec<Vec<Rat>> = t
                .vertices()
                .map(|v| {
                    coords
                        .get(v)
                        .cloned()
                        .ok_or_else(|| ScarfError::Invalid(format!("unknown vertex {v}")))
                })
                .collect::<Result<_>>()?;
            if !linalg::affinely_independent(&pts) {
                return Err(ScarfError::Invalid(format!("flat top simplex {t:?}")));
            }
        }
        let t = Triangulation { n1, coords, tops };
        t.validate()?;
        Ok(t)
    }

    pub fn index_count(&self) -> usize {
        self.n1
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Vec<Rat>> {
        &self.coords
    }

    pub fn tops(&self) -> impl Iterator<Item = &Simplex> {
        self.tops.iter()
    }

    /// Vertices lying on the closed face spanned by A.
    fn support(&self, v: &VertexId) -> IndexSet {
        self.coords[v]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Top simplices of the induced triangulation of the face spanned by A.
    fn face_tops(&self, a: &IndexSet) -> BTreeSet<Simplex> {
        let k = a.len();
        let mut out = BTreeSet::new();
        for t in &self.tops {
            let on_face: Vec<&VertexId> = t
                .vertices()
                .filter(|v| self.support(v).is_subset(a))
                .collect();
            if on_face.len() >= k {
                for combo in on_face.iter().combinations(k) {
                    out.insert(Simplex::new(combo.into_iter().map(|v| (**v).clone())));
                }
            }
        }
        out
    }

    /// Volume of a face simplex relative to the face spanned by A, as a
    /// fraction of the whole face.
    fn face_fraction(&self, s: &Simplex, a: &IndexSet) -> Rat {
        let idx: Vec<usize> = a.iter().copied().collect();
        let pts: Vec<Vec<Rat>> = s
            .vertices()
            .map(|v| idx[..idx.len() - 1].iter().map(|&i| self.coords[v][i].clone()).collect())
            .collect();
        if pts.len() == 1 {
            return Rat::one();
        }
        let rows: Vec<Vec<Rat>> = pts[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&pts[0])
                    .map(|(x, y)| x.clone() - y.clone())
                    .collect()
            })
            .collect();
        linalg::det(&rows).abs()
    }

    /// Non-branching, covering and connectivity on every face.
    fn validate(&self) -> Result<()> {
        for mask in 1u32..1 << self.n1 {
            let a = set_of(mask, self.n1);
            let k = a.len();
            let tops = self.face_tops(&a);
            if tops.is_empty() {
                return Err(ScarfError::Invalid(format!(
                    "face {a:?} carries no full-dimensional simplex"
                )));
            }
            // covering: fractions of the face volume sum to 1
            let total: Rat = tops.iter().map(|t| self.face_fraction(t, &a)).sum();
            if !total.is_one() {
                return Err(ScarfError::Invalid(format!(
                    "face {a:?} covered with total fraction {total}"
                )));
            }
            // non-branching: ridges sit in two tops, or one on the boundary
            let mut ridge_count: BTreeMap<Simplex, usize> = BTreeMap::new();
            for t in &tops {
                for v in t.vertices() {
                    *ridge_count.entry(t.without(v)).or_insert(0) += 1;
                }
            }
            for (ridge, count) in &ridge_count {
                let on_boundary = a.iter().any(|&i| {
                    ridge.vertices().all(|v| self.coords[v][i].is_zero())
                });
                let want = if on_boundary { 1 } else { 2 };
                if *count != want {
                    return Err(ScarfError::Invalid(format!(
                        "non-branching fails on face {a:?}: ridge {ridge:?} lies in {count} simplices, expected {want}"
                    )));
                }
            }
            // strong connectivity through ridges
            if k > 1 {
                let tops: Vec<&Simplex> = tops.iter().collect();
                let mut seen = vec![false; tops.len()];
                let mut stack = vec![0usize];
                seen[0] = true;
                while let Some(i) = stack.pop() {
                    for (j, t) in tops.iter().enumerate() {
                        if !seen[j]
                            && tops[i]
                                .vertices()
                                .filter(|v| t.contains(v))
                                .count()
                                == k - 1
                        {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
                if !seen.iter().all(|&s| s) {
                    return Err(ScarfError::Invalid(format!(
                        "induced triangulation of face {a:?} is disconnected"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The simplex-family induced by a triangulation: D_T(A) is the
/// triangulation of the face spanned by A.
pub fn from_triangulation(t: &Triangulation) -> Result<SimplexFamily> {
    let n1 = t.index_count();
    let mut complexes = Vec::with_capacity(1 << n1);
    for mask in 0u32..1 << n1 {
        let a = set_of(mask, n1);
        if a.is_empty() {
            complexes.push(Complex::trivial());
        } else {
            complexes.push(Complex::from_maximal(t.face_tops(&a)));
        }
    }
    SimplexFamily::new(n1, complexes)
}

/// The simplex-family T of an order family: T(A) is generated by the
/// A-cells.
pub fn from_order_family(f: &OrderFamily) -> Result<SimplexFamily> {
    let n1 = f.index_count();
    check_ground_cap(n1)?;
    let mut complexes = Vec::with_capacity(1 << n1);
    for mask in 0u32..1 << n1 {
        let a = set_of(mask, n1);
        if a.is_empty() {
            complexes.push(Complex::trivial());
        } else {
            let cells = f.enumerate_cells(&a);
            complexes.push(Complex::from_maximal(
                cells.into_iter().map(Simplex::new),
            ));
        }
    }
    SimplexFamily::new(n1, complexes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringKind {
    AlexanderSperner,
    Scarf,
    Both,
    Neither,
}

/// Classify a classical coloring: Alexander-Sperner requires c(v) in A on
/// every D(A); Scarf requires c(v) outside A on every proper nonempty A.
pub fn classify_coloring(
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, usize>,
) -> Result<ColoringKind> {
    for v in d.vertices() {
        if !c.contains_key(&v) {
            return Err(ScarfError::Invalid(format!("vertex {v} is uncolored")));
        }
    }
    let n1 = d.index_count();
    let mut sperner = true;
    let mut scarf = true;
    for a in d.subsets() {
        if a.is_empty() {
            continue;
        }
        for v in d.complex(&a).vertices() {
            let inside = a.contains(&c[&v]);
            if !inside {
                sperner = false;
            }
            if inside && a.len() < n1 {
                scarf = false;
            }
        }
    }
    Ok(match (sperner, scarf) {
        (true, true) => ColoringKind::Both,
        (true, false) => ColoringKind::AlexanderSperner,
        (false, true) => ColoringKind::Scarf,
        (false, false) => ColoringKind::Neither,
    })
}

#[derive(Serialize, Deserialize)]
pub struct FamilyJson {
    #[serde(rename = "I")]
    pub i: usize,
    pub complexes: BTreeMap<String, Vec<Vec<String>>>,
}

impl SimplexFamily {
    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            i: self.n1,
            complexes: (0..self.complexes.len())
                .map(|mask| {
                    (
                        mask.to_string(),
                        self.complexes[mask]
                            .maximal()
                            .map(|s| s.vertices().map(|v| v.0.clone()).collect())
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn from_json(j: &FamilyJson) -> Result<Self> {
        let mut complexes = vec![Complex::trivial(); 1 << j.i];
        for (key, tops) in &j.complexes {
            let mask: usize = key
                .parse()
                .map_err(|_| ScarfError::Invalid(format!("bad subset mask {key:?}")))?;
            if mask >= 1 << j.i {
                return Err(ScarfError::Invalid(format!("mask {mask} out of range")));
            }
            complexes[mask] = Complex::from_maximal(
                tops.iter()
                    .map(|s| Simplex::new(s.iter().map(|v| VertexId::new(v.clone())))),
            );
        }
        SimplexFamily::new(j.i, complexes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn sx(vs: &[&str]) -> Simplex {
        Simplex::new(vs.iter().map(|s| v(s)))
    }

    fn example_family() -> OrderFamily {
        OrderFamily::new(
            vec![v("x"), v("y")],
            vec![vec![v("x"), v("y")], vec![v("y"), v("x")]],
        )
        .unwrap()
    }

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    /// Split of the 1-simplex at the midpoint.
    fn split_interval() -> Triangulation {
        Triangulation::new(
            2,
            [
                (v("a"), vec![r(1, 1), r(0, 1)]),
                (v("m"), vec![r(1, 2), r(1, 2)]),
                (v("b"), vec![r(0, 1), r(1, 1)]),
            ]
            .into_iter()
            .collect(),
            [sx(&["a", "m"]), sx(&["m", "b"])].into_iter().collect(),
        )
        .unwrap()
    }

    #[test]
    fn fundamental_chains() {
        let t = from_order_family(&example_family()).unwrap();
        let empty: IndexSet = IndexSet::new();
        let c = fundamental_chain(&t, &empty);
        assert_eq!(c.dimension(), -1);
        assert!(c.contains(&Simplex::empty()));
        let zero: IndexSet = [0].into_iter().collect();
        assert_eq!(fundamental_chain(&t, &zero).len(), 1);
        let full: IndexSet = [0, 1].into_iter().collect();
        assert_eq!(fundamental_chain(&t, &full).len(), 1);
    }

    #[test]
    fn order_family_is_pseudo_and_chain() {
        let t = from_order_family(&example_family()).unwrap();
        assert_eq!(is_pseudo_simplex(&t), (true, None));
        assert_eq!(is_chain_simplex(&t), (true, None));
    }

    #[test]
    fn triangulation_family() {
        let d = from_triangulation(&split_interval()).unwrap();
        let full: IndexSet = [0, 1].into_iter().collect();
        assert_eq!(fundamental_chain(&d, &full).len(), 2);
        assert_eq!(is_pseudo_simplex(&d), (true, None));
        assert_eq!(is_chain_simplex(&d), (true, None));

        // dropping one top simplex breaks the pseudo-simplex property
        let mut complexes: Vec<Complex> = d
            .subsets()
            .map(|a| d.complex(&a).clone())
            .collect();
        complexes[3] = Complex::from_maximal([sx(&["a", "m"]), sx(&["b"])]);
        let broken = SimplexFamily::new(2, complexes).unwrap();
        assert!(!is_pseudo_simplex(&broken).0);
        assert!(!is_chain_simplex(&broken).0);
    }

    #[test]
    fn invalid_triangulations_rejected() {
        // midpoint duplicated away: hole in the covering
        let gap = Triangulation::new(
            2,
            [
                (v("a"), vec![r(1, 1), r(0, 1)]),
                (v("m"), vec![r(1, 2), r(1, 2)]),
                (v("b"), vec![r(0, 1), r(1, 1)]),
            ]
            .into_iter()
            .collect(),
            [sx(&["a", "m"])].into_iter().collect(),
        );
        assert!(gap.is_err());
    }

    #[test]
    fn envelope_structure() {
        let t = from_order_family(&example_family()).unwrap();
        let e = envelope(&t).unwrap();
        let zero: IndexSet = [0].into_iter().collect();
        assert_eq!(
            e.complex(&zero).maximal().cloned().collect::<Vec<_>>(),
            vec![Simplex::new([VertexId::index_token(0)])]
        );
        let full: IndexSet = [0, 1].into_iter().collect();
        // tops: {x,y} (A=I), {y,#1} (A={0}), {x,#0} (A={1})
        let tops: Vec<Simplex> = e.complex(&full).maximal().cloned().collect();
        assert_eq!(tops.len(), 3);
        assert!(e.complex(&full).contains(&sx(&["x", "y"])));
        assert!(e.complex(&full).contains(&Simplex::new([v("y"), VertexId::index_token(1)])));

        // Theorem 1.6: the boundary of E[[I]] is the boundary of the
        // standard simplex on the tokens
        let lhs = boundary(&fundamental_chain(&e, &full)).unwrap();
        let i_simplex = Simplex::new((0..2).map(VertexId::index_token));
        let rhs = boundary(&Mod2Chain::from_simplex(i_simplex)).unwrap();
        assert_eq!(lhs, rhs);

        assert!(is_pseudo_simplex(&e).0);
        assert!(is_chain_simplex(&e).0);
    }

    #[test]
    fn coloring_classification() {
        let t = from_order_family(&example_family()).unwrap();
        let sperner: BTreeMap<VertexId, usize> =
            [(v("x"), 1), (v("y"), 0)].into_iter().collect();
        assert_eq!(
            classify_coloring(&t, &sperner).unwrap(),
            ColoringKind::AlexanderSperner
        );
        let scarf: BTreeMap<VertexId, usize> = [(v("x"), 0), (v("y"), 1)].into_iter().collect();
        assert_eq!(classify_coloring(&t, &scarf).unwrap(), ColoringKind::Scarf);

        let one = OrderFamily::new(vec![v("x")], vec![vec![v("x")]]).unwrap();
        let t1 = from_order_family(&one).unwrap();
        let c1: BTreeMap<VertexId, usize> = [(v("x"), 0)].into_iter().collect();
        assert_eq!(classify_coloring(&t1, &c1).unwrap(), ColoringKind::Both);
    }

    #[test]
    fn json_round_trip() {
        let t = from_order_family(&example_family()).unwrap();
        let j = t.to_json();
        assert_eq!(SimplexFamily::from_json(&j).unwrap(), t);
    }
}
