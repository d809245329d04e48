//! Mod-2 chain algebra over abstract simplices.
//!
//! A simplex is a finite vertex set; the empty set is the unique
//! (-1)-simplex, and the boundary of every 0-simplex is {empty}. Chains of a
//! fixed dimension add by symmetric difference.

use crate::{Result, ScarfError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Opaque ordered vertex token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub String);

impl VertexId {
    pub fn new(s: impl Into<String>) -> Self {
        VertexId(s.into())
    }

    /// Token standing for the index i of I, kept disjoint from ordinary
    /// vertex ids by the '#' prefix.
    pub fn index_token(i: usize) -> Self {
        VertexId(format!("#{i}"))
    }

    pub fn as_index_token(&self) -> Option<usize> {
        self.0.strip_prefix('#').and_then(|s| s.parse().ok())
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

/// Finite vertex set with set semantics; dimension = |vertices| - 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Simplex(BTreeSet<VertexId>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = VertexId>>(vs: I) -> Self {
        Simplex(vs.into_iter().collect())
    }

    pub fn empty() -> Self {
        Simplex(BTreeSet::new())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.0.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.contains(v)
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn without(&self, v: &VertexId) -> Simplex {
        let mut s = self.0.clone();
        s.remove(v);
        Simplex(s)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.union(&other.0).cloned().collect())
    }

    pub fn disjoint_from(&self, other: &Simplex) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// All subsets, the simplex itself and the empty simplex included.
    pub fn faces(&self) -> Vec<Simplex> {
        let vs: Vec<&VertexId> = self.0.iter().collect();
        let mut out = Vec::with_capacity(1 << vs.len());
        for mask in 0u64..(1u64 << vs.len()) {
            let sub: BTreeSet<VertexId> = vs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, v)| (*v).clone())
                .collect();
            out.push(Simplex(sub));
        }
        out
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Dimension-homogeneous chain with F2 coefficients.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2Chain {
    dimension: i64,
    simplices: BTreeSet<Simplex>,
}

impl Mod2Chain {
    pub fn zero(dimension: i64) -> Self {
        assert!(dimension >= -1);
        Mod2Chain {
            dimension,
            simplices: BTreeSet::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = Simplex>>(dimension: i64, simplices: I) -> Result<Self> {
        let mut c = Mod2Chain::zero(dimension);
        for s in simplices {
            if s.dim() != dimension {
                return Err(ScarfError::Dimension(format!(
                    "simplex {s:?} has dimension {}, chain has {}",
                    s.dim(),
                    dimension
                )));
            }
            c.toggle(s);
        }
        Ok(c)
    }

    pub fn from_simplex(s: Simplex) -> Self {
        let dim = s.dim();
        Mod2Chain {
            dimension: dim,
            simplices: std::iter::once(s).collect(),
        }
    }

    pub fn dimension(&self) -> i64 {
        self.dimension
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    fn toggle(&mut self, s: Simplex) {
        if !self.simplices.remove(&s) {
            self.simplices.insert(s);
        }
    }

    /// Symmetric-difference sum; dimensions must agree.
    pub fn add(&self, other: &Mod2Chain) -> Result<Mod2Chain> {
        if self.dimension != other.dimension {
            return Err(ScarfError::Dimension(format!(
                "cannot add chains of dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        let mut out = self.clone();
        for s in &other.simplices {
            out.toggle(s.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for Mod2Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simplices.is_empty() {
            return write!(f, "0[dim {}]", self.dimension);
        }
        for (k, s) in self.simplices.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

/// Boundary operator: each simplex contributes all its codimension-1 faces.
pub fn boundary(c: &Mod2Chain) -> Result<Mod2Chain> {
    if c.dimension() < 0 {
        return Err(ScarfError::BoundaryOfEmpty);
    }
    let mut out = Mod2Chain::zero(c.dimension() - 1);
    for s in c.simplices() {
        for v in s.vertices() {
            out.toggle(s.without(v));
        }
    }
    Ok(out)
}

/// Bilinear star product: (sigma, kappa) -> sigma union kappa, over disjoint
/// vertex universes.
pub fn star_product(alpha: &Mod2Chain, gamma: &Mod2Chain) -> Result<Mod2Chain> {
    let dim = alpha.dimension() + gamma.dimension() + 1;
    let mut out = Mod2Chain::zero(dim);
    for s in alpha.simplices() {
        for k in gamma.simplices() {
            if !s.disjoint_from(k) {
                return Err(ScarfError::StarOverlap);
            }
            out.toggle(s.union(k));
        }
    }
    Ok(out)
}

/// Pushforward along a vertex map; simplices collapsed by the map drop out.
pub fn push_forward(phi: &BTreeMap<VertexId, VertexId>, c: &Mod2Chain) -> Result<Mod2Chain> {
    let mut out = Mod2Chain::zero(c.dimension());
    for s in c.simplices() {
        let mut image = BTreeSet::new();
        for v in s.vertices() {
            let w = phi
                .get(v)
                .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} not in the map's domain")))?;
            image.insert(w.clone());
        }
        if image.len() == s.len() {
            out.toggle(Simplex::new(image));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn sx(vs: &[&str]) -> Simplex {
        Simplex::new(vs.iter().map(|s| v(s)))
    }

    #[test]
    fn boundary_of_edge() {
        let c = Mod2Chain::from_simplex(sx(&["a", "b"]));
        let b = boundary(&c).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.contains(&sx(&["a"])));
        assert!(b.contains(&sx(&["b"])));
    }

    #[test]
    fn boundary_of_vertex_is_empty_simplex() {
        let c = Mod2Chain::from_simplex(sx(&["v"]));
        let b = boundary(&c).unwrap();
        assert_eq!(b.dimension(), -1);
        assert!(b.contains(&Simplex::empty()));
        assert!(boundary(&b).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = Mod2Chain::from_simplex(sx(&["a", "b", "c"]));
        let bb = boundary(&boundary(&c).unwrap()).unwrap();
        assert!(bb.is_zero());
    }

    #[test]
    fn star_product_examples() {
        let x = Mod2Chain::from_simplex(sx(&["x"]));
        let ij = Mod2Chain::from_simplex(sx(&["i", "j"]));
        let p = star_product(&x, &ij).unwrap();
        assert!(p.contains(&sx(&["x", "i", "j"])));

        let xy = Mod2Chain::new(0, [sx(&["x"]), sx(&["y"])]).unwrap();
        let i = Mod2Chain::from_simplex(sx(&["i"]));
        let p2 = star_product(&xy, &i).unwrap();
        assert_eq!(p2.len(), 2);

        let overlap = star_product(&x, &Mod2Chain::from_simplex(sx(&["x", "j"])));
        assert!(overlap.is_err());
    }

    #[test]
    fn leibniz_on_example() {
        // boundary(sigma * K) = (boundary sigma) * K + sigma * (boundary K)
        let sigma = Mod2Chain::from_simplex(sx(&["x", "y"]));
        let k = Mod2Chain::from_simplex(sx(&["i"]));
        let lhs = boundary(&star_product(&sigma, &k).unwrap()).unwrap();
        let rhs = star_product(&boundary(&sigma).unwrap(), &k)
            .unwrap()
            .add(&star_product(&sigma, &boundary(&k).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn push_forward_collapse() {
        let phi: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("p")), (v("y"), v("p"))].into_iter().collect();
        let c = Mod2Chain::from_simplex(sx(&["x", "y"]));
        assert!(push_forward(&phi, &c).unwrap().is_zero());

        let phi2: BTreeMap<VertexId, VertexId> =
            [(v("x"), v("a")), (v("y"), v("b")), (v("z"), v("a"))]
                .into_iter()
                .collect();
        let c2 = Mod2Chain::new(1, [sx(&["x", "y"]), sx(&["y", "z"])]).unwrap();
        assert!(push_forward(&phi2, &c2).unwrap().is_zero());
    }

    #[test]
    fn mixed_dimension_rejected() {
        assert!(Mod2Chain::new(1, [sx(&["a", "b"]), sx(&["c"])]).is_err());
    }
}
