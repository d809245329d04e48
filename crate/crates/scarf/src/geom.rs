//! Euclidean layer: the standard simplex and its Delta(sigma, C)
//! sub-simplices, reversed-KKM colorings, Brouwer/Kakutani approximation
//! over doubling barycentric grids, the integer-point cell structure with
//! Freudenthal triangulations, and chains in R^n with mod-2 intersection
//! numbers plus the affine / hedgehog / inward-tangent solvers.
//!
//! Every sign decision (hull membership, crossings, dominance geometry) is
//! exact rational; floating point appears only in residual reporting.

use crate::chains2::{push_forward, Mod2Chain, Simplex, VertexId};
use crate::complexes::{is_chain_simplex, set_of, SimplexFamily, Triangulation};
use crate::linalg;
use crate::orders::{coordinate_orders, IndexSet, OrderFamily, VertexSet};
use crate::solver::{solve_vector, SolveMode};
use crate::{rat_to_string, Rat, Result, ScarfError};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};

fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

fn rfrac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

fn f64_of(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn point_string(p: &[Rat]) -> String {
    format!("({})", p.iter().map(rat_to_string).join(","))
}

/// All weak compositions of `total` into `parts` nonnegative summands.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn grid_id(nums: &[i64]) -> VertexId {
    VertexId::new(format!("g{}", nums.iter().join(",")))
}

/// Barycentric lattice of step 1/k in the simplex with n1 vertices:
/// all points with coordinates a_i/k, a nonnegative integers summing to k.
pub fn barycentric_grid(n1: usize, k: i64) -> Result<Vec<(VertexId, Vec<Rat>)>> {
    if n1 == 0 || k <= 0 {
        return Err(ScarfError::Invalid(
            "grid needs at least one coordinate and step 1/k with k >= 1".into(),
        ));
    }
    Ok(compositions(k, n1)
        .into_iter()
        .map(|nums| {
            let coords = nums
                .iter()
                .map(|&p| Rat::new(BigInt::from(p), BigInt::from(k)))
                .collect();
            (grid_id(&nums), coords)
        })
        .collect())
}

/// The polyhedron Delta(sigma, C): x_i >= m_ii for i in C, x_i >= 0
/// otherwise, inside the coordinate simplex. Homothetic to the whole
/// simplex with the stored similarity ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubSimplex {
    /// Lower bound per coordinate; zero outside C.
    pub bounds: Vec<Rat>,
    /// 1 - sum of bounds; nonnegative iff the polyhedron is nonempty.
    pub ratio: Rat,
}

impl SubSimplex {
    pub fn center(&self) -> Vec<Rat> {
        let n1 = BigInt::from(self.bounds.len());
        self.bounds
            .iter()
            .map(|b| b + self.ratio.clone() / Rat::from(n1.clone()))
            .collect()
    }
}

/// Delta(sigma, C) for a set of simplex points with their coordinate
/// orders: the bound at i in C is the i-th coordinate of the <_i-minimum
/// of sigma.
pub fn sub_simplex(
    f: &OrderFamily,
    coords: &BTreeMap<VertexId, Vec<Rat>>,
    sigma: &VertexSet,
    c: &IndexSet,
) -> Result<SubSimplex> {
    let n1 = f.index_count();
    if sigma.is_empty() {
        return Err(ScarfError::Invalid("empty sigma has no minima".into()));
    }
    let mut bounds = vec![Rat::zero(); n1];
    for &i in c {
        if i >= n1 {
            return Err(ScarfError::Invalid(format!("index {i} out of range")));
        }
        let m = f.min_under(sigma, i)?;
        let p = coords
            .get(&m)
            .ok_or_else(|| ScarfError::Invalid(format!("no coordinates for {m}")))?;
        if p.len() != n1 {
            return Err(ScarfError::Dimension(format!(
                "point {m} has {} coordinates, expected {n1}",
                p.len()
            )));
        }
        bounds[i] = p[i].clone();
    }
    let ratio = Rat::one() - bounds.iter().cloned().sum::<Rat>();
    Ok(SubSimplex { bounds, ratio })
}

/// Check that an oracle value is a point of the coordinate simplex.
fn simplex_value(y: &[Rat], n1: usize) -> Result<()> {
    if y.len() != n1 {
        return Err(ScarfError::Dimension(format!(
            "oracle value has {} coordinates, expected {n1}",
            y.len()
        )));
    }
    if y.iter().any(|v| v.is_negative()) {
        return Err(ScarfError::Invalid(format!(
            "oracle value {} leaves the simplex",
            point_string(y)
        )));
    }
    if !(y.iter().cloned().sum::<Rat>()).is_one() {
        return Err(ScarfError::Invalid(format!(
            "oracle value {} does not sum to 1",
            point_string(y)
        )));
    }
    Ok(())
}

fn eval_brouwer(f: &dyn Fn(&[Rat]) -> Vec<Rat>, z: &[Rat]) -> Result<Vec<Rat>> {
    let y = f(z);
    simplex_value(&y, z.len())?;
    Ok(y)
}

/// Reversed-KKM rule: c(x) = least i with x_i <= f(x)_i. Such an i exists
/// because both sides sum to 1.
pub fn kkm_scarf_coloring(
    f: &dyn Fn(&[Rat]) -> Vec<Rat>,
    points: &[(VertexId, Vec<Rat>)],
) -> Result<BTreeMap<VertexId, usize>> {
    let mut out = BTreeMap::new();
    for (id, x) in points {
        let y = eval_brouwer(f, x)?;
        let i = (0..x.len())
            .find(|&i| x[i] <= y[i])
            .expect("some coordinate must not increase");
        out.insert(id.clone(), i);
    }
    Ok(out)
}

/// Named Brouwer oracles for the CLI and the test batteries.
pub fn builtin_brouwer(name: &str, n1: usize) -> Result<Box<dyn Fn(&[Rat]) -> Vec<Rat>>> {
    if n1 == 0 {
        return Err(ScarfError::Invalid("need at least one coordinate".into()));
    }
    match name {
        "constant" => {
            let b: Vec<Rat> = (0..n1).map(|_| rfrac(1, n1 as i64)).collect();
            Ok(Box::new(move |_| b.clone()))
        }
        "identity" => Ok(Box::new(|x: &[Rat]| x.to_vec())),
        "rotation" => Ok(Box::new(move |x: &[Rat]| {
            (0..n1).map(|i| x[(i + 1) % n1].clone()).collect()
        })),
        other => Err(ScarfError::Invalid(format!(
            "unknown Brouwer oracle {other:?}"
        ))),
    }
}

/// Named Kakutani oracles: hull descriptors as finite vertex lists.
pub fn builtin_kakutani(
    name: &str,
    n1: usize,
) -> Result<Box<dyn Fn(&[Rat]) -> Vec<Vec<Rat>>>> {
    if n1 == 0 {
        return Err(ScarfError::Invalid("need at least one coordinate".into()));
    }
    match name {
        "constant" => {
            let b: Vec<Rat> = (0..n1).map(|_| rfrac(1, n1 as i64)).collect();
            Ok(Box::new(move |_| vec![b.clone()]))
        }
        "whole" => Ok(Box::new(move |_| {
            (0..n1)
                .map(|i| {
                    (0..n1)
                        .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                        .collect()
                })
                .collect()
        })),
        "switch" | "piecewise" => {
            if n1 != 2 {
                return Err(ScarfError::Dimension(
                    "the switch oracle lives on the 1-simplex".into(),
                ));
            }
            let half = rfrac(1, 2);
            let e0 = vec![Rat::one(), Rat::zero()];
            let e1 = vec![Rat::zero(), Rat::one()];
            Ok(Box::new(move |x: &[Rat]| {
                if x[0] < half {
                    vec![e0.clone()]
                } else if x[0] > half {
                    vec![e1.clone()]
                } else {
                    vec![e0.clone(), e1.clone()]
                }
            }))
        }
        other => Err(ScarfError::Invalid(format!(
            "unknown Kakutani oracle {other:?}"
        ))),
    }
}

/// Outcome of a fixed-point search over the density schedule.
#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub point: Vec<Rat>,
    /// Max-norm residual |f(x) - x| (Brouwer) or an upper bound on the
    /// distance to F(x) (Kakutani).
    pub residual: f64,
    /// Densest grid level reached.
    pub grid: i64,
    /// Set when the schedule ran out before the residual went below eps.
    pub warning: bool,
    /// Best residual after each level, in schedule order.
    pub levels: Vec<(i64, f64)>,
}

fn schedule(max_grid: i64) -> Result<Vec<i64>> {
    if max_grid < 1 {
        return Err(ScarfError::Invalid("max grid must be at least 1".into()));
    }
    let mut ks = Vec::new();
    let mut k = 1;
    while k < max_grid {
        ks.push(k);
        k *= 2;
    }
    ks.push(max_grid);
    Ok(ks)
}

fn brouwer_residual(f: &dyn Fn(&[Rat]) -> Vec<Rat>, z: &[Rat]) -> Result<Rat> {
    let y = eval_brouwer(f, z)?;
    Ok(z.iter()
        .zip(&y)
        .map(|(a, b)| (a - b).abs())
        .max()
        .unwrap_or_else(Rat::zero))
}

/// Improve a candidate by the direct image and then damped iteration,
/// accepting a step only when it strictly lowers the exact residual.
fn polish_brouwer(
    f: &dyn Fn(&[Rat]) -> Vec<Rat>,
    mut z: Vec<Rat>,
    mut res: Rat,
) -> Result<(Vec<Rat>, Rat)> {
    let w = eval_brouwer(f, &z)?;
    let rw = brouwer_residual(f, &w)?;
    if rw < res {
        z = w;
        res = rw;
    }
    for _ in 0..60 {
        let y = eval_brouwer(f, &z)?;
        let w: Vec<Rat> = z
            .iter()
            .zip(&y)
            .map(|(a, b)| (a + b) / rint(2))
            .collect();
        let rw = brouwer_residual(f, &w)?;
        if rw < res {
            z = w;
            res = rw;
        } else {
            break;
        }
    }
    Ok((z, res))
}

/// Grids small enough for full dominance enumeration over all (C, sigma).
const DENSE_CUTOFF: usize = 36;

/// One level of the Brouwer search: the center of Delta(sigma, C) for a
/// dominant rainbow pair on the step-1/k grid.
fn brouwer_level(f: &dyn Fn(&[Rat]) -> Vec<Rat>, n1: usize, k: i64) -> Result<Vec<Rat>> {
    let pts = barycentric_grid(n1, k)?;
    if pts.len() <= DENSE_CUTOFF {
        // Scarf's dominance theorem: the reversed-KKM coloring admits a
        // dominant sigma with c(sigma) = C. No parity claim holds for this
        // coloring, so enumerate instead of asserting an odd count.
        let ford = coordinate_orders(&pts)?;
        let coords: BTreeMap<VertexId, Vec<Rat>> = pts.iter().cloned().collect();
        let coloring = kkm_scarf_coloring(f, &pts)?;
        let mut best: Option<SubSimplex> = None;
        for mask in 1u32..1 << n1 {
            let a = set_of(mask, n1);
            for sigma in ford.enumerate_cells(&a) {
                let colors: IndexSet = sigma.iter().map(|v| coloring[v]).collect();
                if colors != a {
                    continue;
                }
                let ss = sub_simplex(&ford, &coords, &sigma, &a)?;
                if best.as_ref().map_or(true, |b| ss.ratio < b.ratio) {
                    best = Some(ss);
                }
            }
        }
        let ss = best.ok_or_else(|| {
            ScarfError::TheoremViolated("no dominant rainbow pair on the grid".into())
        })?;
        Ok(ss.center())
    } else {
        // Dense grids: the support coloring c(x) = least i in supp(x) with
        // x_i >= f(x)_i is Alexander-Sperner, so the lattice cells carry an
        // odd number of fully colored members.
        let mut color: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (_, x) in &pts {
            let y = eval_brouwer(f, x)?;
            let nums: Vec<i64> = x
                .iter()
                .map(|v| (v.clone() * rint(k)).to_integer().to_i64().unwrap())
                .collect();
            let i = (0..n1)
                .filter(|&i| nums[i] > 0)
                .find(|&i| x[i] >= y[i])
                .expect("some supported coordinate must not increase");
            color.insert(nums, i);
        }
        let cells = i_cells_closed_form(n1 - 1, k)?;
        let mut full: Vec<&BTreeSet<Vec<i64>>> = Vec::new();
        for cell in &cells {
            let colors: BTreeSet<usize> = cell.iter().map(|p| color[p]).collect();
            if colors.len() == n1 {
                full.push(cell);
            }
        }
        if full.len() % 2 == 0 {
            return Err(ScarfError::TheoremViolated(format!(
                "even count {} of fully colored cells",
                full.len()
            )));
        }
        let mut best: Option<(Rat, Vec<Rat>)> = None;
        for cell in full {
            let mut bounds = vec![i64::MAX; n1];
            for p in cell {
                for i in 0..n1 {
                    bounds[i] = bounds[i].min(p[i]);
                }
            }
            let low: Vec<Rat> = bounds.iter().map(|&b| rfrac(b, k)).collect();
            let ratio = Rat::one() - low.iter().cloned().sum::<Rat>();
            let center: Vec<Rat> = low
                .iter()
                .map(|b| b + ratio.clone() / rint(n1 as i64))
                .collect();
            let res = brouwer_residual(f, &center)?;
            if best.as_ref().map_or(true, |(r, _)| res < *r) {
                best = Some((res, center));
            }
        }
        Ok(best.expect("odd count is nonzero").1)
    }
}

/// Brouwer fixed-point approximation over the doubling grid schedule.
/// Stops early once the best residual drops below eps.
pub fn brouwer_approximate(
    f: &dyn Fn(&[Rat]) -> Vec<Rat>,
    n1: usize,
    eps: f64,
    max_grid: i64,
) -> Result<ApproxReport> {
    if n1 == 0 {
        return Err(ScarfError::Invalid("need at least one coordinate".into()));
    }
    if n1 == 1 {
        let z = vec![Rat::one()];
        let res = brouwer_residual(f, &z)?;
        return Ok(ApproxReport {
            residual: f64_of(&res),
            warning: !(f64_of(&res) < eps),
            point: z,
            grid: 1,
            levels: vec![(1, f64_of(&res))],
        });
    }
    let mut best: Option<(Vec<Rat>, Rat)> = None;
    let mut levels = Vec::new();
    let mut grid = 1;
    for k in schedule(max_grid)? {
        grid = k;
        let z0 = brouwer_level(f, n1, k)?;
        let r0 = brouwer_residual(f, &z0)?;
        let (z, r) = polish_brouwer(f, z0, r0)?;
        if best.as_ref().map_or(true, |(_, b)| r < *b) {
            best = Some((z, r));
        }
        let cur = f64_of(&best.as_ref().unwrap().1);
        levels.push((k, cur));
        if cur < eps {
            break;
        }
    }
    let (point, res) = best.expect("schedule is nonempty");
    let residual = f64_of(&res);
    Ok(ApproxReport {
        point,
        residual,
        grid,
        warning: !(residual < eps),
        levels,
    })
}

fn eval_kakutani(
    big_f: &dyn Fn(&[Rat]) -> Vec<Vec<Rat>>,
    z: &[Rat],
) -> Result<Vec<Vec<Rat>>> {
    let ys = big_f(z);
    if ys.is_empty() {
        return Err(ScarfError::Invalid(format!(
            "empty hull descriptor at {}",
            point_string(z)
        )));
    }
    for y in &ys {
        simplex_value(y, z.len())?;
    }
    Ok(ys)
}

/// Upper bound on the max-norm distance from z to the hull of the given
/// vertices: exact membership first, then the best vertex or edge point.
fn hull_distance(verts: &[Vec<Rat>], z: &[Rat]) -> Rat {
    if linalg::in_convex_hull(verts, z) {
        return Rat::zero();
    }
    let max_norm = |p: &[Rat]| -> Rat {
        p.iter()
            .zip(z)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or_else(Rat::zero)
    };
    let mut best = max_norm(&verts[0]);
    for v in &verts[1..] {
        best = best.min(max_norm(v));
    }
    for pair in verts.iter().combinations(2) {
        let (a, b) = (pair[0], pair[1]);
        let d: Vec<Rat> = b.iter().zip(a).map(|(x, y)| x - y).collect();
        let dd: Rat = d.iter().map(|x| x.clone() * x.clone()).sum();
        if dd.is_zero() {
            continue;
        }
        let zd: Rat = z
            .iter()
            .zip(a)
            .zip(&d)
            .map(|((x, y), e)| (x - y) * e.clone())
            .sum();
        let t = (zd / dd).max(Rat::zero()).min(Rat::one());
        let p: Vec<Rat> = a
            .iter()
            .zip(&d)
            .map(|(x, e)| x + t.clone() * e.clone())
            .collect();
        best = best.min(max_norm(&p));
    }
    best
}

fn kakutani_residual(big_f: &dyn Fn(&[Rat]) -> Vec<Vec<Rat>>, z: &[Rat]) -> Result<Rat> {
    let ys = eval_kakutani(big_f, z)?;
    Ok(hull_distance(&ys, z))
}

/// Kakutani fixed-point approximation: per level, the vector coloring
/// c(x) = f(x) - x + b with the selection f(x) = first descriptor vertex,
/// solved by path following, with the cell average as the candidate.
pub fn kakutani_approximate(
    big_f: &dyn Fn(&[Rat]) -> Vec<Vec<Rat>>,
    n1: usize,
    eps: f64,
    max_grid: i64,
) -> Result<ApproxReport> {
    if n1 == 0 {
        return Err(ScarfError::Invalid("need at least one coordinate".into()));
    }
    let b: Vec<Rat> = (0..n1).map(|_| rfrac(1, n1 as i64)).collect();
    if n1 == 1 {
        let z = vec![Rat::one()];
        let res = kakutani_residual(big_f, &z)?;
        return Ok(ApproxReport {
            residual: f64_of(&res),
            warning: !(f64_of(&res) < eps),
            point: z,
            grid: 1,
            levels: vec![(1, f64_of(&res))],
        });
    }
    let mut best: Option<(Vec<Rat>, Rat)> = None;
    let mut levels = Vec::new();
    let mut grid = 1;
    for k in schedule(max_grid)? {
        grid = k;
        let pts = barycentric_grid(n1, k)?;
        let ford = coordinate_orders(&pts)?;
        let coords: BTreeMap<VertexId, Vec<Rat>> = pts.iter().cloned().collect();
        let mut colors: BTreeMap<VertexId, Vec<Rat>> = BTreeMap::new();
        for (id, x) in &pts {
            let ys = eval_kakutani(big_f, x)?;
            let c: Vec<Rat> = ys[0]
                .iter()
                .zip(x)
                .zip(&b)
                .map(|((y, xi), bi)| y - xi + bi.clone())
                .collect();
            colors.insert(id.clone(), c);
        }
        let sol = solve_vector(&ford, &colors, &b, SolveMode::Path, 0)?;
        let m = rint(sol.tau.len() as i64);
        let mut z = vec![Rat::zero(); n1];
        for v in sol.tau.vertices() {
            for (i, x) in coords[v].iter().enumerate() {
                z[i] += x.clone() / m.clone();
            }
        }
        let mut res = kakutani_residual(big_f, &z)?;
        // direct selection candidate
        let w = eval_kakutani(big_f, &z)?[0].clone();
        let rw = kakutani_residual(big_f, &w)?;
        if rw < res {
            z = w;
            res = rw;
        }
        if best.as_ref().map_or(true, |(_, r)| res < *r) {
            best = Some((z, res));
        }
        let cur = f64_of(&best.as_ref().unwrap().1);
        levels.push((k, cur));
        if cur < eps {
            break;
        }
    }
    let (point, res) = best.expect("schedule is nonempty");
    let residual = f64_of(&res);
    Ok(ApproxReport {
        point,
        residual,
        grid,
        warning: !(residual < eps),
        levels,
    })
}

/// S_i subtracts 1 at position i and adds 1 at position i-1 (mod n+1).
pub fn s_operator(a: &[i64], i: usize) -> Vec<i64> {
    let n1 = a.len();
    let mut out = a.to_vec();
    out[i % n1] -= 1;
    out[(i + n1 - 1) % n1] += 1;
    out
}

/// The point set sigma(iota): the terms of the recursion
/// alpha(k) = S_{iota(k)}(alpha(k-1)) starting from alpha(0) = a.
pub fn sigma_iota(a: &[i64], iota: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n1 = a.len();
    if iota.len() != n1 {
        return Err(ScarfError::Dimension(format!(
            "iota has {} entries, expected {n1}",
            iota.len()
        )));
    }
    let sorted: BTreeSet<usize> = iota.iter().copied().collect();
    if sorted != (0..n1).collect() || iota.first() != Some(&0) {
        return Err(ScarfError::Invalid(
            "iota must be a permutation of 0..n fixing 0".into(),
        ));
    }
    let mut out = vec![a.to_vec()];
    for &i in &iota[1..] {
        let next = s_operator(out.last().unwrap(), i);
        out.push(next);
    }
    Ok(out)
}

/// Does sigma match the closed form a + sigma(iota) for some a in sigma
/// and some permutation fixing 0?
pub fn is_i_cell(sigma: &BTreeSet<Vec<i64>>) -> Result<bool> {
    let Some(first) = sigma.iter().next() else {
        return Ok(false);
    };
    let n1 = first.len();
    let total: i64 = first.iter().sum();
    for p in sigma {
        if p.len() != n1 {
            return Err(ScarfError::Dimension("mixed point dimensions".into()));
        }
        if p.iter().any(|&x| x < 0) || p.iter().sum::<i64>() != total {
            return Err(ScarfError::Invalid(format!(
                "point {p:?} is not in the lattice simplex"
            )));
        }
    }
    if sigma.len() != n1 {
        return Ok(false);
    }
    for a in sigma {
        for tail in (1..n1).permutations(n1 - 1) {
            let mut iota = vec![0];
            iota.extend(tail);
            let cand: BTreeSet<Vec<i64>> = sigma_iota(a, &iota)?.into_iter().collect();
            if cand == *sigma {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All I-cells of the lattice simplex D = {a >= 0, sum a = N} by the
/// closed form: a + sigma(iota) contained in D, over all base points and
/// permutations fixing 0. Exactly N^n sets.
pub fn i_cells_closed_form(n: usize, big_n: i64) -> Result<BTreeSet<BTreeSet<Vec<i64>>>> {
    if n == 0 || big_n < 1 {
        return Err(ScarfError::Invalid("need n >= 1 and N >= 1".into()));
    }
    let n1 = n + 1;
    let mut out = BTreeSet::new();
    for a in compositions(big_n, n1) {
        for tail in (1..n1).permutations(n) {
            let mut iota = vec![0];
            iota.extend(tail);
            let cell = sigma_iota(&a, &iota)?;
            if cell.iter().all(|p| p.iter().all(|&x| x >= 0)) {
                out.insert(cell.into_iter().collect());
            }
        }
    }
    Ok(out)
}

/// Top simplices u + tau(omega) of the Freudenthal triangulation of
/// Gamma = {N >= y_n >= ... >= y_1 >= 0}, coordinates stored ascending.
pub fn freudenthal(n: usize, big_n: i64) -> Result<BTreeSet<BTreeSet<Vec<i64>>>> {
    if n == 0 || big_n < 1 {
        return Err(ScarfError::Invalid("need n >= 1 and N >= 1".into()));
    }
    let in_gamma = |y: &[i64]| -> bool {
        y.windows(2).all(|w| w[0] <= w[1]) && y[0] >= 0 && y[n - 1] <= big_n
    };
    let mut corners = Vec::new();
    for nums in compositions(big_n, n + 1) {
        // ascending partial sums enumerate Gamma's integer points
        let mut y = Vec::with_capacity(n);
        let mut acc = 0;
        for &v in &nums[..n] {
            acc += v;
            y.push(acc);
        }
        corners.push(y);
    }
    let mut out = BTreeSet::new();
    for u in &corners {
        for omega in (1..=n).permutations(n) {
            let mut cell = vec![u.clone()];
            for &j in &omega {
                let mut next = cell.last().unwrap().clone();
                next[j - 1] += 1;
                cell.push(next);
            }
            if cell.iter().all(|y| in_gamma(y)) {
                out.insert(cell.into_iter().collect::<BTreeSet<_>>());
            }
        }
    }
    Ok(out)
}

/// The affine map s: y_i = x_0 + ... + x_{i-1}, sending D onto Gamma.
pub fn s_map(x: &[i64]) -> Vec<i64> {
    let n = x.len() - 1;
    let mut out = Vec::with_capacity(n);
    let mut acc = 0;
    for &v in &x[..n] {
        acc += v;
        out.push(acc);
    }
    out
}

/// Does s carry the I-cells of D bijectively onto the Freudenthal
/// simplices of Gamma, as sets and as mod-2 chains?
pub fn verify_isomorphism(n: usize, big_n: i64) -> Result<bool> {
    let cells = i_cells_closed_form(n, big_n)?;
    let fr = freudenthal(n, big_n)?;
    let mapped: BTreeSet<BTreeSet<Vec<i64>>> = cells
        .iter()
        .map(|cell| cell.iter().map(|p| s_map(p)).collect())
        .collect();
    if mapped != fr || mapped.len() != cells.len() {
        return Ok(false);
    }
    let pid = |p: &[i64]| VertexId::new(format!("p{}", p.iter().join(",")));
    let qid = |y: &[i64]| VertexId::new(format!("q{}", y.iter().join(",")));
    let mut phi = BTreeMap::new();
    for a in compositions(big_n, n + 1) {
        phi.insert(pid(&a), qid(&s_map(&a)));
    }
    let t_chain = Mod2Chain::new(
        n as i64,
        cells
            .iter()
            .map(|cell| Simplex::new(cell.iter().map(|p| pid(p)))),
    )?;
    let f_chain = Mod2Chain::new(
        n as i64,
        fr.iter()
            .map(|cell| Simplex::new(cell.iter().map(|y| qid(y)))),
    )?;
    Ok(push_forward(&phi, &t_chain)? == f_chain)
}

/// The step-1/k Freudenthal triangulation of the coordinate simplex, as a
/// validated Triangulation over the barycentric grid.
pub fn freudenthal_triangulation(n1: usize, k: i64) -> Result<Triangulation> {
    if n1 < 2 {
        return Err(ScarfError::Invalid("need at least two coordinates".into()));
    }
    let coords: BTreeMap<VertexId, Vec<Rat>> =
        barycentric_grid(n1, k)?.into_iter().collect();
    let tops: BTreeSet<Simplex> = i_cells_closed_form(n1 - 1, k)?
        .into_iter()
        .map(|cell| Simplex::new(cell.iter().map(|p| grid_id(p))))
        .collect();
    Triangulation::new(n1, coords, tops)
}

/// A mod-2 chain of rational point simplices in R^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricChain {
    dim: usize,
    ambient: usize,
    simplices: BTreeSet<Vec<Vec<Rat>>>,
}

impl GeometricChain {
    /// Build from (dim+1)-point simplices; repeated simplices cancel.
    pub fn new(
        dim: usize,
        ambient: usize,
        simplices: impl IntoIterator<Item = Vec<Vec<Rat>>>,
    ) -> Result<GeometricChain> {
        let mut set: BTreeSet<Vec<Vec<Rat>>> = BTreeSet::new();
        for s in simplices {
            if s.len() != dim + 1 {
                return Err(ScarfError::Dimension(format!(
                    "a {dim}-simplex needs {} points, got {}",
                    dim + 1,
                    s.len()
                )));
            }
            for p in &s {
                if p.len() != ambient {
                    return Err(ScarfError::Dimension(format!(
                        "point {} is not in R^{ambient}",
                        point_string(p)
                    )));
                }
            }
            let mut canon = s;
            canon.sort();
            if canon.windows(2).any(|w| w[0] == w[1]) {
                return Err(ScarfError::DegenerateConfig(
                    "repeated point inside a simplex".into(),
                ));
            }
            if !set.remove(&canon) {
                set.insert(canon);
            }
        }
        Ok(GeometricChain {
            dim,
            ambient,
            simplices: set,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<Vec<Rat>>> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn boundary(&self) -> Result<GeometricChain> {
        if self.dim == 0 {
            return Err(ScarfError::BoundaryOfEmpty);
        }
        GeometricChain::new(
            self.dim - 1,
            self.ambient,
            self.simplices.iter().flat_map(|s| {
                (0..s.len()).map(|drop| {
                    s.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
            }),
        )
    }
}

/// Affine functional vanishing on the given n points of R^n, when they
/// are affinely independent: h(x) = a.x + b.
fn hyperplane(points: &[Vec<Rat>]) -> Option<(Vec<Rat>, Rat)> {
    let n = points[0].len();
    // kernel of the (a, b) system over the rows (p, 1)
    let mut cols: Vec<Vec<Rat>> = (0..n)
        .map(|j| points.iter().map(|p| p[j].clone()).collect())
        .collect();
    cols.push(vec![Rat::one(); points.len()]);
    let ker = linalg::kernel_basis(&cols);
    if ker.len() != 1 {
        return None;
    }
    let v = &ker[0];
    Some((v[..n].to_vec(), v[n].clone()))
}

fn eval_h(h: &(Vec<Rat>, Rat), x: &[Rat]) -> Rat {
    h.0.iter()
        .zip(x)
        .map(|(a, b)| a.clone() * b.clone())
        .sum::<Rat>()
        + h.1.clone()
}

enum Arity {
    /// full-dimensional simplices against points
    Point,
    /// codimension-1 simplices against segments
    Segment,
}

fn arity(c: &GeometricChain, d: &GeometricChain) -> Result<Arity> {
    if c.ambient() != d.ambient() {
        return Err(ScarfError::Dimension(format!(
            "ambient mismatch: R^{} vs R^{}",
            c.ambient(),
            d.ambient()
        )));
    }
    let n = c.ambient();
    if c.dim() == n && d.dim() == 0 {
        Ok(Arity::Point)
    } else if c.dim() + 1 == n && d.dim() == 1 {
        Ok(Arity::Segment)
    } else {
        Err(ScarfError::Dimension(format!(
            "unsupported arity ({}, {}) in R^{n}",
            c.dim(),
            d.dim()
        )))
    }
}

fn facets(s: &[Vec<Rat>]) -> Vec<Vec<Vec<Rat>>> {
    (0..s.len())
        .map(|drop| {
            s.iter()
                .enumerate()
                .filter(|(j, _)| *j != drop)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// First general-position violation, if any, described as a witness.
fn gp_witness(c: &GeometricChain, d: &GeometricChain) -> Result<Option<String>> {
    match arity(c, d)? {
        Arity::Point => {
            for (sj, s) in c.simplices().enumerate() {
                if !linalg::affinely_independent(s) {
                    return Ok(Some(format!("simplex #{sj} is degenerate")));
                }
                for (zj, zs) in d.simplices().enumerate() {
                    let z = &zs[0];
                    for phi in facets(s) {
                        if linalg::in_convex_hull(&phi, z) {
                            return Ok(Some(format!(
                                "point #{zj} {} lies on the boundary of simplex #{sj}",
                                point_string(z)
                            )));
                        }
                    }
                }
            }
        }
        Arity::Segment => {
            for (sj, s) in c.simplices().enumerate() {
                if !linalg::affinely_independent(s) {
                    return Ok(Some(format!("simplex #{sj} is degenerate")));
                }
                let h = hyperplane(s).expect("independent points span a hyperplane");
                for (wj, w) in d.simplices().enumerate() {
                    let h0 = eval_h(&h, &w[0]);
                    let h1 = eval_h(&h, &w[1]);
                    if h0.is_zero() || h1.is_zero() {
                        return Ok(Some(format!(
                            "segment #{wj} has an endpoint on the hyperplane of simplex #{sj}"
                        )));
                    }
                    if h0.is_positive() == h1.is_positive() {
                        continue;
                    }
                    let t = h0.clone() / (h0 - h1);
                    let x: Vec<Rat> = w[0]
                        .iter()
                        .zip(&w[1])
                        .map(|(a, b)| a + t.clone() * (b - a))
                        .collect();
                    for phi in facets(s) {
                        if linalg::in_convex_hull(&phi, &x) {
                            return Ok(Some(format!(
                                "segment #{wj} crosses the boundary of simplex #{sj}"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// General position for the two supported arities: (n, 0) and (n-1, 1).
pub fn general_position(c: &GeometricChain, d: &GeometricChain) -> Result<bool> {
    Ok(gp_witness(c, d)?.is_none())
}

/// Mod-2 intersection number of two chains in general position.
pub fn intersection_number(c: &GeometricChain, d: &GeometricChain) -> Result<u8> {
    if let Some(w) = gp_witness(c, d)? {
        return Err(ScarfError::GeneralPosition(w));
    }
    let mut count = 0u64;
    match arity(c, d)? {
        Arity::Point => {
            for s in c.simplices() {
                for zs in d.simplices() {
                    if linalg::in_convex_hull(s, &zs[0]) {
                        count += 1;
                    }
                }
            }
        }
        Arity::Segment => {
            for s in c.simplices() {
                let h = hyperplane(s).expect("independent points span a hyperplane");
                for w in d.simplices() {
                    let h0 = eval_h(&h, &w[0]);
                    let h1 = eval_h(&h, &w[1]);
                    if h0.is_positive() == h1.is_positive() {
                        continue;
                    }
                    let t = h0.clone() / (h0 - h1);
                    let x: Vec<Rat> = w[0]
                        .iter()
                        .zip(&w[1])
                        .map(|(a, b)| a + t.clone() * (b - a))
                        .collect();
                    if linalg::in_convex_hull(s, &x) {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok((count % 2) as u8)
}

/// Barycentric coordinates of x with respect to the affinely independent
/// frame w_0..w_n.
pub fn bary_coords(w: &[Vec<Rat>], x: &[Rat]) -> Result<Vec<Rat>> {
    let cols: Vec<Vec<Rat>> = w
        .iter()
        .map(|p| {
            let mut c = p.clone();
            c.push(Rat::one());
            c
        })
        .collect();
    let mut rhs = x.to_vec();
    rhs.push(Rat::one());
    for c in &cols {
        if c.len() != rhs.len() {
            return Err(ScarfError::Dimension(
                "frame and point dimensions disagree".into(),
            ));
        }
    }
    linalg::solve(&cols, &rhs).ok_or_else(|| {
        ScarfError::DegenerateConfig("point outside the frame's affine span".into())
    })
}

/// l_i(x) = a_i(x) - a_i(0): the i-th barycentric coordinate shifted to
/// vanish at the origin.
pub fn l_functional(w: &[Vec<Rat>], i: usize, x: &[Rat]) -> Result<Rat> {
    let origin = vec![Rat::zero(); x.len()];
    let a = bary_coords(w, x)?;
    let a0 = bary_coords(w, &origin)?;
    if i >= a.len() {
        return Err(ScarfError::Invalid(format!("index {i} out of range")));
    }
    Ok(a[i].clone() - a0[i].clone())
}

/// Affine Scarf theorem: for a chain-simplex D, an affine coloring c into
/// R^n and z in the hull of the frame, find nonempty C and a top sigma of
/// D(C) with Y = c(sigma) union {w_i : i not in C} affinely independent
/// and containing z in its hull.
pub fn affine_scarf(
    d: &SimplexFamily,
    c: &BTreeMap<VertexId, Vec<Rat>>,
    w: &[Vec<Rat>],
    z: &[Rat],
) -> Result<(IndexSet, Simplex)> {
    let n1 = d.index_count();
    if w.len() != n1 {
        return Err(ScarfError::Dimension(format!(
            "need {n1} frame points, got {}",
            w.len()
        )));
    }
    let n = n1 - 1;
    if w.iter().any(|p| p.len() != n) || z.len() != n {
        return Err(ScarfError::Dimension(format!(
            "frame and target must live in R^{n}"
        )));
    }
    if !linalg::affinely_independent(w) {
        return Err(ScarfError::DegenerateConfig(
            "frame is affinely dependent".into(),
        ));
    }
    if !linalg::in_convex_hull(w, z) {
        return Err(ScarfError::Invalid(format!(
            "{} is outside the frame's hull",
            point_string(z)
        )));
    }
    if let (false, Some(witness)) = is_chain_simplex(d) {
        return Err(ScarfError::ChainSimplexViolated(witness));
    }
    for v in d.vertices() {
        match c.get(&v) {
            Some(p) if p.len() == n => {}
            Some(_) => {
                return Err(ScarfError::Dimension(format!(
                    "color of {v} is not in R^{n}"
                )))
            }
            None => return Err(ScarfError::Invalid(format!("vertex {v} is uncolored"))),
        }
    }
    let mut subsets: Vec<IndexSet> = d.subsets().filter(|a| !a.is_empty()).collect();
    subsets.sort_by_key(|a| std::cmp::Reverse(a.len()));
    for a in subsets {
        for sigma in d.complex(&a).maximal() {
            let mut y: BTreeSet<Vec<Rat>> =
                sigma.vertices().map(|v| c[v].clone()).collect();
            for i in 0..n1 {
                if !a.contains(&i) {
                    y.insert(w[i].clone());
                }
            }
            if y.len() != n1 {
                continue;
            }
            let pts: Vec<Vec<Rat>> = y.into_iter().collect();
            if linalg::affinely_independent(&pts) && linalg::in_convex_hull(&pts, z) {
                return Ok((a, sigma.clone()));
            }
        }
    }
    Err(ScarfError::TheoremViolated(
        "no qualifying (C, sigma) pair".into(),
    ))
}

fn centered_frame(t: &Triangulation, w: &[Vec<Rat>]) -> Result<usize> {
    let n1 = t.index_count();
    if w.len() != n1 || w.iter().any(|p| p.len() != n1 - 1) {
        return Err(ScarfError::Dimension(format!(
            "need {n1} frame points in R^{}",
            n1 - 1
        )));
    }
    if !linalg::affinely_independent(w) {
        return Err(ScarfError::DegenerateConfig(
            "frame is affinely dependent".into(),
        ));
    }
    for j in 0..n1 - 1 {
        if !w.iter().map(|p| p[j].clone()).sum::<Rat>().is_zero() {
            return Err(ScarfError::Invalid("frame is not centered at 0".into()));
        }
    }
    Ok(n1)
}

/// Ambient image of a triangulation vertex under the frame.
fn frame_point(w: &[Vec<Rat>], bary: &[Rat]) -> Vec<Rat> {
    let n = w[0].len();
    (0..n)
        .map(|j| {
            bary.iter()
                .zip(w)
                .map(|(a, p)| a.clone() * p[j].clone())
                .sum()
        })
        .collect()
}

/// Vector hedgehog theorem: c with a_i(c(x)) <= 0 on each face Gamma_i
/// yields, for any z in Gamma, a top simplex whose c-image hull contains z.
pub fn solve_vector_hedgehog(
    t: &Triangulation,
    w: &[Vec<Rat>],
    c: &BTreeMap<VertexId, Vec<Rat>>,
    z: &[Rat],
) -> Result<Simplex> {
    let n1 = centered_frame(t, w)?;
    let az = bary_coords(w, z)?;
    if az.iter().any(|a| a.is_negative()) {
        return Err(ScarfError::Invalid(format!(
            "{} is outside Gamma",
            point_string(z)
        )));
    }
    for (v, bary) in t.coords() {
        let p = c
            .get(v)
            .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} is uncolored")))?;
        let a = bary_coords(w, p)?;
        for i in 0..n1 {
            if bary[i].is_zero() && a[i].is_positive() {
                return Err(ScarfError::HypothesisFails(format!(
                    "a_{i}(c({v})) > 0 on the face Gamma_{i}"
                )));
            }
        }
    }
    for sigma in t.tops() {
        let pts: Vec<Vec<Rat>> = sigma.vertices().map(|v| c[v].clone()).collect();
        if linalg::in_convex_hull(&pts, z) {
            return Ok(sigma.clone());
        }
    }
    Err(ScarfError::TheoremViolated(
        "no top simplex covers the target".into(),
    ))
}

/// Inward-tangent theorem: c with l_i(c(x)) >= 0 on each face Gamma_i
/// yields a top simplex with 0 in the hull of its c-image.
pub fn solve_inward_tangent(
    t: &Triangulation,
    w: &[Vec<Rat>],
    c: &BTreeMap<VertexId, Vec<Rat>>,
) -> Result<Simplex> {
    let n1 = centered_frame(t, w)?;
    let origin = vec![Rat::zero(); n1 - 1];
    for (v, bary) in t.coords() {
        let p = c
            .get(v)
            .ok_or_else(|| ScarfError::Invalid(format!("vertex {v} is uncolored")))?;
        for i in 0..n1 {
            if bary[i].is_zero() && l_functional(w, i, p)?.is_negative() {
                return Err(ScarfError::HypothesisFails(format!(
                    "l_{i}(c({v})) < 0 on the face Gamma_{i}"
                )));
            }
        }
    }
    for sigma in t.tops() {
        let pts: Vec<Vec<Rat>> = sigma.vertices().map(|v| c[v].clone()).collect();
        if linalg::in_convex_hull(&pts, &origin) {
            return Ok(sigma.clone());
        }
    }
    Err(ScarfError::TheoremViolated(
        "no top simplex captures the origin".into(),
    ))
}

/// Ambient coordinates of every triangulation vertex under the frame,
/// handy for inclusion colorings.
pub fn inclusion_coloring(t: &Triangulation, w: &[Vec<Rat>]) -> BTreeMap<VertexId, Vec<Rat>> {
    t.coords()
        .iter()
        .map(|(v, bary)| (v.clone(), frame_point(w, bary)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::from_triangulation;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rint(x)).collect()
    }

    fn pt2(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(p, q)| rfrac(p, q)).collect()
    }

    #[test]
    fn grid_points_sum_to_one() {
        let g = barycentric_grid(3, 2).unwrap();
        assert_eq!(g.len(), 6);
        for (_, p) in &g {
            assert!(p.iter().cloned().sum::<Rat>().is_one());
        }
    }

    #[test]
    fn sub_simplex_examples() {
        let e0 = (VertexId::new("a"), pt(&[1, 0]));
        let e1 = (VertexId::new("b"), pt(&[0, 1]));
        let bary = (VertexId::new("m"), pt2(&[(1, 2), (1, 2)]));
        let pts = vec![e0.clone(), e1.clone(), bary.clone()];
        let ford = coordinate_orders(&pts).unwrap();
        let coords: BTreeMap<VertexId, Vec<Rat>> = pts.into_iter().collect();
        let both: IndexSet = [0, 1].into_iter().collect();

        // two vertices, C = I: minima are 0, the whole simplex
        let sigma: VertexSet = [e0.0.clone(), e1.0.clone()].into_iter().collect();
        let ss = sub_simplex(&ford, &coords, &sigma, &both).unwrap();
        assert!(ss.ratio.is_one());

        // barycenter alone, C = {0}: the half-simplex x0 >= 1/2
        let sigma: VertexSet = [bary.0.clone()].into_iter().collect();
        let ss = sub_simplex(&ford, &coords, &sigma, &[0].into_iter().collect()).unwrap();
        assert_eq!(ss.bounds, pt2(&[(1, 2), (0, 1)]));
        assert_eq!(ss.ratio, rfrac(1, 2));

        // dominant singleton with respect to I: a 1-point set
        let sigma: VertexSet = [e0.0.clone()].into_iter().collect();
        assert!(ford.is_dominant(&sigma, &both));
        let ss = sub_simplex(&ford, &coords, &sigma, &both).unwrap();
        assert!(ss.ratio.is_zero());
        assert_eq!(ss.center(), pt(&[1, 0]));
    }

    #[test]
    fn kkm_rule_examples() {
        let pts = barycentric_grid(2, 2).unwrap();
        let constant = builtin_brouwer("constant", 2).unwrap();
        let col = kkm_scarf_coloring(&*constant, &pts).unwrap();
        // e0 = g"2,0": x0 = 1 > 1/2, x1 = 0 <= 1/2
        assert_eq!(col[&grid_id(&[2, 0])], 1);
        // a fixed point ties everywhere: least index
        assert_eq!(col[&grid_id(&[1, 1])], 0);
        let ident = builtin_brouwer("identity", 2).unwrap();
        let col = kkm_scarf_coloring(&*ident, &pts).unwrap();
        assert!(col.values().all(|&i| i == 0));
    }

    #[test]
    fn s_operator_and_sigma_iota() {
        assert_eq!(s_operator(&[2, 0, 0], 0), vec![1, 0, 1]);
        let cell = sigma_iota(&[0, 1, 1], &[0, 1, 2]).unwrap();
        assert_eq!(cell, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let cell = sigma_iota(&[1, 1], &[0, 1]).unwrap();
        assert_eq!(cell, vec![vec![1, 1], vec![2, 0]]);
        assert!(sigma_iota(&[1, 1], &[1, 0]).is_err());
    }

    #[test]
    fn closed_form_cells() {
        let cells = i_cells_closed_form(1, 2).unwrap();
        let expect: BTreeSet<BTreeSet<Vec<i64>>> = [
            [vec![0, 2], vec![1, 1]].into_iter().collect(),
            [vec![1, 1], vec![2, 0]].into_iter().collect(),
        ]
        .into_iter()
        .collect();
        assert_eq!(cells, expect);
        assert_eq!(i_cells_closed_form(2, 2).unwrap().len(), 4);
        assert_eq!(i_cells_closed_form(2, 1).unwrap().len(), 1);
        for cell in &cells {
            assert!(is_i_cell(cell).unwrap());
        }
        let not: BTreeSet<Vec<i64>> = [vec![0, 2], vec![2, 0]].into_iter().collect();
        assert!(!is_i_cell(&not).unwrap());
    }

    #[test]
    fn freudenthal_counts_and_isomorphism() {
        assert_eq!(freudenthal(2, 1).unwrap().len(), 1);
        assert_eq!(freudenthal(2, 2).unwrap().len(), 4);
        assert_eq!(freudenthal(1, 3).unwrap().len(), 3);
        assert!(verify_isomorphism(2, 2).unwrap());
        assert!(verify_isomorphism(1, 3).unwrap());
        assert!(verify_isomorphism(3, 1).unwrap());
    }

    #[test]
    fn three_way_cell_count() {
        use crate::orders::lex_shift_orders;
        let (n, big_n) = (2usize, 2i64);
        let pts: Vec<(VertexId, Vec<i64>)> = compositions(big_n, n + 1)
            .into_iter()
            .map(|p| (grid_id(&p), p))
            .collect();
        let ford = lex_shift_orders(&pts).unwrap();
        let all: IndexSet = (0..n + 1).collect();
        let dominance = ford.enumerate_cells(&all).len();
        let closed = i_cells_closed_form(n, big_n).unwrap().len();
        let fr = freudenthal(n, big_n).unwrap().len();
        assert_eq!(dominance, 4);
        assert_eq!(closed, 4);
        assert_eq!(fr, 4);
    }

    #[test]
    fn triangulation_builder_validates() {
        let t = freudenthal_triangulation(2, 3).unwrap();
        assert_eq!(t.tops().count(), 3);
        let t = freudenthal_triangulation(3, 2).unwrap();
        assert_eq!(t.tops().count(), 4);
    }

    #[test]
    fn intersection_examples() {
        let tri = GeometricChain::new(
            2,
            2,
            [vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])]],
        )
        .unwrap();
        let inside = GeometricChain::new(0, 2, [vec![pt2(&[(1, 2), (1, 2)])]]).unwrap();
        let outside = GeometricChain::new(0, 2, [vec![pt(&[3, 3])]]).unwrap();
        assert_eq!(intersection_number(&tri, &inside).unwrap(), 1);
        assert_eq!(intersection_number(&tri, &outside).unwrap(), 0);

        let seg =
            GeometricChain::new(1, 2, [vec![pt2(&[(1, 2), (1, 2)]), pt(&[3, 3])]]).unwrap();
        let lhs = intersection_number(&tri.boundary().unwrap(), &seg).unwrap();
        let rhs = intersection_number(&tri, &seg.boundary().unwrap()).unwrap();
        assert_eq!(lhs, 1);
        assert_eq!(rhs, 1);

        // (1,1) sits on the hypotenuse: not in general position
        let on_edge = GeometricChain::new(0, 2, [vec![pt(&[1, 1])]]).unwrap();
        assert!(!general_position(&tri, &on_edge).unwrap());
        assert!(matches!(
            intersection_number(&tri, &on_edge),
            Err(ScarfError::GeneralPosition(_))
        ));
    }

    #[test]
    fn cycle_meets_generic_point_evenly() {
        // two triangulations of the unit square cancel on the boundary
        let c = GeometricChain::new(
            2,
            2,
            [
                vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[1, 1])],
                vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[0, 1])],
                vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])],
                vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[0, 1])],
            ],
        )
        .unwrap();
        assert!(c.boundary().unwrap().is_empty());
        let z = GeometricChain::new(0, 2, [vec![pt2(&[(1, 4), (1, 8)])]]).unwrap();
        assert_eq!(intersection_number(&c, &z).unwrap(), 0);
    }

    #[test]
    fn boundary_duality_hand_case() {
        let tri = GeometricChain::new(
            2,
            2,
            [vec![pt(&[0, 0]), pt(&[4, 0]), pt(&[0, 4])]],
        )
        .unwrap();
        let seg = GeometricChain::new(1, 2, [vec![pt(&[1, 1]), pt(&[5, 5])]]).unwrap();
        assert!(general_position(&tri.boundary().unwrap(), &seg).unwrap());
        assert!(general_position(&tri, &seg.boundary().unwrap()).unwrap());
        let lhs = intersection_number(&tri.boundary().unwrap(), &seg).unwrap();
        let rhs = intersection_number(&tri, &seg.boundary().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, 1);
    }

    #[test]
    fn brouwer_easy_oracles() {
        let constant = builtin_brouwer("constant", 2).unwrap();
        let rep = brouwer_approximate(&*constant, 2, 1e-9, 8).unwrap();
        assert_eq!(rep.residual, 0.0);
        assert!(!rep.warning);
        assert_eq!(rep.point, pt2(&[(1, 2), (1, 2)]));

        let ident = builtin_brouwer("identity", 3).unwrap();
        let rep = brouwer_approximate(&*ident, 3, 1e-9, 8).unwrap();
        assert_eq!(rep.residual, 0.0);
    }

    #[test]
    fn brouwer_rotation_converges() {
        let rot = builtin_brouwer("rotation", 3).unwrap();
        // negative eps: run the full schedule, exercising the dense route
        let rep = brouwer_approximate(&*rot, 3, -1.0, 16).unwrap();
        let third = 1.0 / 3.0;
        for x in &rep.point {
            assert!((f64_of(x) - third).abs() < 1e-3);
        }
        assert!(rep.residual < 1e-3);
        for w in rep.levels.windows(2) {
            assert!(w[1].1 <= w[0].1);
        }
        assert_eq!(rep.grid, 16);
    }

    #[test]
    fn kakutani_easy_oracles() {
        let constant = builtin_kakutani("constant", 2).unwrap();
        let rep = kakutani_approximate(&*constant, 2, 1e-9, 8).unwrap();
        assert_eq!(rep.residual, 0.0);
        assert_eq!(rep.point, pt2(&[(1, 2), (1, 2)]));

        let whole = builtin_kakutani("whole", 3).unwrap();
        let rep = kakutani_approximate(&*whole, 3, 1e-9, 8).unwrap();
        assert_eq!(rep.residual, 0.0);
    }

    #[test]
    fn kakutani_switch_finds_midpoint() {
        let switch = builtin_kakutani("switch", 2).unwrap();
        let rep = kakutani_approximate(&*switch, 2, -1.0, 32).unwrap();
        assert!((f64_of(&rep.point[0]) - 0.5).abs() <= 0.1);
        assert!((f64_of(&rep.point[1]) - 0.5).abs() <= 0.1);
    }

    #[test]
    fn affine_scarf_on_a_triangulated_segment() {
        let t = freudenthal_triangulation(2, 2).unwrap();
        let d = from_triangulation(&t).unwrap();
        let w = vec![pt(&[0]), pt(&[1])];
        let c = inclusion_coloring(&t, &w);
        let z = pt2(&[(1, 4)]);
        let (a, sigma) = affine_scarf(&d, &c, &w, &z).unwrap();
        // verify the claim on the returned pair
        let mut y: BTreeSet<Vec<Rat>> = sigma.vertices().map(|v| c[v].clone()).collect();
        for i in 0..2 {
            if !a.contains(&i) {
                y.insert(w[i].clone());
            }
        }
        let pts: Vec<Vec<Rat>> = y.into_iter().collect();
        assert_eq!(pts.len(), 2);
        assert!(linalg::affinely_independent(&pts));
        assert!(linalg::in_convex_hull(&pts, &z));

        // vertex target still solvable
        assert!(affine_scarf(&d, &c, &w, &pt(&[0])).is_ok());
    }

    #[test]
    fn hedgehog_and_inward_tangent() {
        let t = freudenthal_triangulation(2, 2).unwrap();
        let w = vec![pt2(&[(-1, 2)]), pt2(&[(1, 2)])];
        let incl = inclusion_coloring(&t, &w);
        let z = pt2(&[(1, 4)]);
        let sigma = solve_vector_hedgehog(&t, &w, &incl, &z).unwrap();
        let pts: Vec<Vec<Rat>> = sigma.vertices().map(|v| incl[v].clone()).collect();
        assert!(linalg::in_convex_hull(&pts, &z));

        let neg: BTreeMap<VertexId, Vec<Rat>> = incl
            .iter()
            .map(|(v, p)| (v.clone(), p.iter().map(|x| -x.clone()).collect()))
            .collect();
        let sigma = solve_inward_tangent(&t, &w, &neg).unwrap();
        let pts: Vec<Vec<Rat>> = sigma.vertices().map(|v| neg[v].clone()).collect();
        assert!(linalg::in_convex_hull(&pts, &pt(&[0])));

        // constant interior coloring violates the hedgehog predicate
        let flat: BTreeMap<VertexId, Vec<Rat>> = incl
            .keys()
            .map(|v| (v.clone(), pt2(&[(1, 4)])))
            .collect();
        assert!(matches!(
            solve_vector_hedgehog(&t, &w, &flat, &z),
            Err(ScarfError::HypothesisFails(_))
        ));
    }

    #[test]
    fn l_values_on_the_centered_frame() {
        // l_i(w_i) = n/(n+1), l_i(w_k) = -1/(n+1)
        let w = vec![pt(&[1, 0]), pt(&[0, 1]), pt(&[-1, -1])];
        assert_eq!(l_functional(&w, 0, &w[0]).unwrap(), rfrac(2, 3));
        assert_eq!(l_functional(&w, 0, &w[1]).unwrap(), rfrac(-1, 3));
        assert_eq!(l_functional(&w, 2, &w[2]).unwrap(), rfrac(2, 3));
    }
}
