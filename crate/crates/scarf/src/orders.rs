//! Families of linear orders on a finite set: dominance, C-cells and
//! C-faces, the pivot lemmas, and order construction from coordinates,
//! lexicographic shifts, and extension to X union I.

use crate::chains2::VertexId;
use crate::{Rat, Result, ScarfError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub type VertexSet = BTreeSet<VertexId>;
pub type IndexSet = BTreeSet<usize>;

/// One linear order per index i in I = {0..n} on a common finite set X.
#[derive(Clone, Debug)]
pub struct OrderFamily {
    x: Vec<VertexId>,
    // rank[i][v]: position of v in the order <_i (smaller = earlier)
    rank: Vec<BTreeMap<VertexId, usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellClass {
    Cell,
    Face,
    Neither,
}

/// A down-pivot: either sigma is a (C-j)-cell, or (for the empty face of a
/// singleton C) the move to D[[empty]] = {empty}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DownMove {
    Subset(IndexSet),
    Empty,
}

impl OrderFamily {
    pub fn new(x: Vec<VertexId>, orders: Vec<Vec<VertexId>>) -> Result<Self> {
        let base: BTreeSet<&VertexId> = x.iter().collect();
        if base.len() != x.len() {
            return Err(ScarfError::Invalid("duplicate elements in X".into()));
        }
        let mut rank = Vec::with_capacity(orders.len());
        for ord in &orders {
            let seen: BTreeSet<&VertexId> = ord.iter().collect();
            if ord.len() != x.len() || seen != base {
                return Err(ScarfError::Invalid(
                    "each order must be a permutation of X".into(),
                ));
            }
            rank.push(
                ord.iter()
                    .enumerate()
                    .map(|(k, v)| (v.clone(), k))
                    .collect(),
            );
        }
        if rank.is_empty() {
            return Err(ScarfError::Invalid("need at least one order".into()));
        }
        Ok(OrderFamily { x, rank })
    }

    pub fn ground(&self) -> &[VertexId] {
        &self.x
    }

    /// Size of the index set I.
    pub fn index_count(&self) -> usize {
        self.rank.len()
    }

    pub fn indices(&self) -> IndexSet {
        (0..self.rank.len()).collect()
    }

    pub fn less(&self, i: usize, a: &VertexId, b: &VertexId) -> bool {
        self.rank[i][a] < self.rank[i][b]
    }

    pub fn min_under(&self, sigma: &VertexSet, i: usize) -> Result<VertexId> {
        sigma
            .iter()
            .min_by_key(|v| self.rank[i][*v])
            .cloned()
            .ok_or_else(|| ScarfError::Invalid("min of empty set".into()))
    }

    pub fn max_under(&self, sigma: &VertexSet, i: usize) -> Result<VertexId> {
        sigma
            .iter()
            .max_by_key(|v| self.rank[i][*v])
            .cloned()
            .ok_or_else(|| ScarfError::Invalid("max of empty set".into()))
    }

    /// Is sigma dominant with respect to C? The empty set is dominant with
    /// respect to every nonempty C, and nothing is dominant w.r.t. empty C.
    pub fn is_dominant(&self, sigma: &VertexSet, c: &IndexSet) -> bool {
        if c.is_empty() {
            return false;
        }
        if sigma.is_empty() {
            return true;
        }
        let minima: Vec<(usize, usize)> = c
            .iter()
            .map(|&i| {
                let m = sigma.iter().map(|v| self.rank[i][v]).min().unwrap();
                (i, m)
            })
            .collect();
        'outer: for y in &self.x {
            for &(i, m) in &minima {
                if self.rank[i][y] <= m {
                    continue 'outer;
                }
            }
            return false; // y beats every minimum
        }
        true
    }

    pub fn classify(&self, sigma: &VertexSet, c: &IndexSet) -> CellClass {
        if !self.is_dominant(sigma, c) {
            return CellClass::Neither;
        }
        if sigma.len() == c.len() {
            CellClass::Cell
        } else if sigma.len() + 1 == c.len() {
            CellClass::Face
        } else {
            CellClass::Neither
        }
    }

    /// Pivot moves of a C-face: C-cells obtained by adding one element, and
    /// down-moves (subsets D of C with sigma a D-cell, or the empty marker).
    /// Always returns exactly two moves in total.
    pub fn pivot_neighbors(
        &self,
        sigma: &VertexSet,
        c: &IndexSet,
    ) -> Result<(Vec<VertexSet>, Vec<DownMove>)> {
        if self.classify(sigma, c) != CellClass::Face {
            return Err(ScarfError::Invalid(format!(
                "{sigma:?} is not a face with respect to {c:?}"
            )));
        }
        if sigma.is_empty() {
            // |C| = 1: the unique {i}-cell is the <_i-maximum; the down-move
            // is the bookkeeping step to D[[empty]]
            let i = *c.iter().next().unwrap();
            let top = self
                .x
                .iter()
                .max_by_key(|v| self.rank[i][*v])
                .ok_or_else(|| ScarfError::Invalid("no vertices to pivot into".into()))?;
            let cell: VertexSet = std::iter::once(top.clone()).collect();
            return Ok((vec![cell], vec![DownMove::Empty]));
        }
        // the two indices of C sharing a minimum
        let mut by_min: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for &i in c {
            let m = self.min_under(sigma, i)?;
            by_min.entry(m).or_default().push(i);
        }
        let pair: Vec<usize> = by_min
            .values()
            .find(|is| is.len() == 2)
            .cloned()
            .ok_or_else(|| ScarfError::Invalid("face without a doubled minimum".into()))?;
        let mut up = Vec::new();
        let mut down = Vec::new();
        for &j in &pair {
            let rest: IndexSet = c.iter().copied().filter(|&i| i != j).collect();
            let minima: Vec<(usize, usize)> = rest
                .iter()
                .map(|&i| (i, sigma.iter().map(|v| self.rank[i][v]).min().unwrap()))
                .collect();
            let m_j: Option<&VertexId> = self
                .x
                .iter()
                .filter(|y| minima.iter().all(|&(i, m)| self.rank[i][y] > m))
                .max_by_key(|y| self.rank[j][*y]);
            match m_j {
                Some(a) => {
                    let mut cell = sigma.clone();
                    cell.insert(a.clone());
                    up.push(cell);
                }
                None => down.push(DownMove::Subset(rest)),
            }
        }
        debug_assert_eq!(up.len() + down.len(), 2);
        Ok((up, down))
    }

    /// Brute-force enumeration of all C-cells.
    pub fn enumerate_cells(&self, c: &IndexSet) -> Vec<VertexSet> {
        let k = c.len();
        if k == 0 || k > self.x.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; k];
        subsets(self.x.len(), k, 0, &mut pick, 0, &mut |idx| {
            let sigma: VertexSet = idx.iter().map(|&j| self.x[j].clone()).collect();
            if self.is_dominant(&sigma, c) {
                out.push(sigma);
            }
        });
        out
    }
}

fn subsets(
    n: usize,
    k: usize,
    start: usize,
    pick: &mut Vec<usize>,
    depth: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(&pick[..k]);
        return;
    }
    for j in start..n {
        pick[depth] = j;
        subsets(n, k, j + 1, pick, depth + 1, f);
    }
}

/// Orders induced by barycentric coordinates: x <_i y whenever x_i < y_i,
/// ties broken by position in the input list.
pub fn coordinate_orders(points: &[(VertexId, Vec<Rat>)]) -> Result<OrderFamily> {
    if points.is_empty() {
        return Err(ScarfError::Invalid("no points".into()));
    }
    let dim = points[0].1.len();
    for (id, p) in points {
        if p.len() != dim {
            return Err(ScarfError::Dimension(format!(
                "point {id} has {} coordinates, expected {dim}",
                p.len()
            )));
        }
    }
    let coords: BTreeSet<&Vec<Rat>> = points.iter().map(|(_, p)| p).collect();
    if coords.len() != points.len() {
        return Err(ScarfError::Invalid("duplicate points".into()));
    }
    let x: Vec<VertexId> = points.iter().map(|(id, _)| id.clone()).collect();
    let mut orders = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut idx: Vec<usize> = (0..points.len()).collect();
        idx.sort_by(|&a, &b| {
            points[a].1[i]
                .cmp(&points[b].1[i])
                .then(a.cmp(&b))
        });
        orders.push(idx.into_iter().map(|j| x[j].clone()).collect());
    }
    OrderFamily::new(x, orders)
}

/// Cyclic shift t_i of an integer point.
fn shifted(a: &[i64], i: usize) -> Vec<i64> {
    let n1 = a.len();
    (0..n1).map(|k| a[(i + k) % n1]).collect()
}

/// Orders on integer points: x <_i y iff t_i(x) precedes t_i(y)
/// lexicographically.
pub fn lex_shift_orders(points: &[(VertexId, Vec<i64>)]) -> Result<OrderFamily> {
    if points.is_empty() {
        return Err(ScarfError::Invalid("no points".into()));
    }
    let n1 = points[0].1.len();
    let x: Vec<VertexId> = points.iter().map(|(id, _)| id.clone()).collect();
    let mut orders = Vec::with_capacity(n1);
    for i in 0..n1 {
        let mut idx: Vec<usize> = (0..points.len()).collect();
        idx.sort_by_key(|&j| shifted(&points[j].1, i));
        orders.push(idx.into_iter().map(|j| x[j].clone()).collect());
    }
    OrderFamily::new(x, orders)
}

/// Extension of the orders to X union I per the Scarf convention: i is
/// minimal in <_i, every x in X precedes every other index token, and the
/// leftover freedom (the order of I - i at the tail) is resolved by
/// ascending index.
pub fn extend_orders(f: &OrderFamily) -> Result<OrderFamily> {
    let n1 = f.index_count();
    let tokens: Vec<VertexId> = (0..n1).map(VertexId::index_token).collect();
    for t in &tokens {
        if f.ground().contains(t) {
            return Err(ScarfError::ElementCollision(format!(
                "X already contains the index token {t}"
            )));
        }
    }
    let mut x = f.ground().to_vec();
    x.extend(tokens.iter().cloned());
    let mut orders = Vec::with_capacity(n1);
    for i in 0..n1 {
        let mut ord = vec![tokens[i].clone()];
        let mut base = f.ground().to_vec();
        base.sort_by_key(|v| f.rank[i][v]);
        ord.extend(base);
        ord.extend((0..n1).filter(|&k| k != i).map(VertexId::index_token));
        orders.push(ord);
    }
    OrderFamily::new(x, orders)
}

#[derive(Serialize, Deserialize)]
pub struct OrderFamilyJson {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "I")]
    pub i: usize,
    pub orders: Vec<Vec<String>>,
}

impl OrderFamily {
    pub fn to_json(&self) -> OrderFamilyJson {
        OrderFamilyJson {
            x: self.x.iter().map(|v| v.0.clone()).collect(),
            i: self.index_count(),
            orders: (0..self.index_count())
                .map(|i| {
                    let mut base = self.x.clone();
                    base.sort_by_key(|v| self.rank[i][v]);
                    base.into_iter().map(|v| v.0).collect()
                })
                .collect(),
        }
    }

    pub fn from_json(j: &OrderFamilyJson) -> Result<Self> {
        if j.orders.len() != j.i {
            return Err(ScarfError::Invalid(format!(
                "expected {} orders, found {}",
                j.i,
                j.orders.len()
            )));
        }
        OrderFamily::new(
            j.x.iter().map(|s| VertexId::new(s.clone())).collect(),
            j.orders
                .iter()
                .map(|o| o.iter().map(|s| VertexId::new(s.clone())).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::from(s)
    }

    /// X = {x, y} with <_0: x < y and <_1: y < x.
    pub fn example_family() -> OrderFamily {
        OrderFamily::new(
            vec![v("x"), v("y")],
            vec![vec![v("x"), v("y")], vec![v("y"), v("x")]],
        )
        .unwrap()
    }

    fn set(vs: &[&str]) -> VertexSet {
        vs.iter().map(|s| v(s)).collect()
    }

    fn idx(is: &[usize]) -> IndexSet {
        is.iter().copied().collect()
    }

    #[test]
    fn dominance_examples() {
        let f = example_family();
        assert!(f.is_dominant(&set(&["x", "y"]), &idx(&[0, 1])));
        assert!(!f.is_dominant(&set(&["x"]), &idx(&[0])));
        assert!(f.is_dominant(&set(&[]), &idx(&[0])));
        assert!(!f.is_dominant(&set(&[]), &idx(&[])));
    }

    #[test]
    fn classify_examples() {
        let f = example_family();
        assert_eq!(f.classify(&set(&["x", "y"]), &idx(&[0, 1])), CellClass::Cell);
        assert_eq!(f.classify(&set(&["x"]), &idx(&[0, 1])), CellClass::Face);
        assert_eq!(f.classify(&set(&["x"]), &idx(&[0])), CellClass::Neither);
    }

    #[test]
    fn pivots_on_example() {
        let f = example_family();
        let (up, down) = f.pivot_neighbors(&set(&["x"]), &idx(&[0, 1])).unwrap();
        assert_eq!(up, vec![set(&["x", "y"])]);
        assert_eq!(down, vec![DownMove::Subset(idx(&[1]))]);

        let (up, down) = f.pivot_neighbors(&set(&["y"]), &idx(&[0, 1])).unwrap();
        assert_eq!(up, vec![set(&["x", "y"])]);
        assert_eq!(down, vec![DownMove::Subset(idx(&[0]))]);

        let (up, down) = f.pivot_neighbors(&set(&[]), &idx(&[0])).unwrap();
        assert_eq!(up, vec![set(&["y"])]);
        assert_eq!(down, vec![DownMove::Empty]);
    }

    #[test]
    fn cells_on_example() {
        let f = example_family();
        assert_eq!(f.enumerate_cells(&idx(&[0, 1])), vec![set(&["x", "y"])]);
        assert_eq!(f.enumerate_cells(&idx(&[0])), vec![set(&["y"])]);
        assert_eq!(f.enumerate_cells(&idx(&[1])), vec![set(&["x"])]);
        let big: IndexSet = (0..3).collect();
        assert!(f.enumerate_cells(&big).is_empty());
    }

    #[test]
    fn extension_respects_dominance_transfer() {
        let f = example_family();
        let ext = extend_orders(&f).unwrap();
        let full: IndexSet = idx(&[0, 1]);
        for c_mask in 1u32..4 {
            let c: IndexSet = (0..2).filter(|&i| c_mask >> i & 1 == 1).collect();
            for tau_mask in 0u32..4 {
                let tau: VertexSet = [v("x"), v("y")]
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| tau_mask >> k & 1 == 1)
                    .map(|(_, w)| w.clone())
                    .collect();
                let mut lifted = tau.clone();
                for i in 0..2 {
                    if !c.contains(&i) {
                        lifted.insert(VertexId::index_token(i));
                    }
                }
                assert_eq!(
                    f.is_dominant(&tau, &c),
                    ext.is_dominant(&lifted, &full),
                    "transfer failed for tau={tau:?}, C={c:?}"
                );
            }
        }
    }
}
