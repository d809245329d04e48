//! Combinatorial fixed-point machinery in the style of Scarf:
//! mod-2 chain algebra, oriented matroids given by signed circuits,
//! families of linear orders with dominant-set pivoting, simplex-families
//! and their envelopes, coloring solvers (brute force and path following),
//! and a Euclidean layer with Freudenthal triangulations, Brouwer/Kakutani
//! approximation and mod-2 intersection numbers.

pub mod chains2;
pub mod complexes;
pub mod geom;
pub mod linalg;
pub mod om;
pub mod orders;
pub mod solver;
pub mod suite;

/// Exact rational scalar used for every sign decision in the library.
pub type Rat = num_rational::BigRational;

pub use chains2::{Mod2Chain, Simplex, VertexId};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScarfError {
    #[error("cannot take boundary of (-1)-chain")]
    BoundaryOfEmpty,
    #[error("star product requires disjoint supports")]
    StarOverlap,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("not an elimination position")]
    NotEliminationPosition,
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("inconsistent matroid: {0}")]
    InconsistentMatroid(String),
    #[error("Todd preconditions fail: {0}")]
    ToddPreconditions(String),
    #[error("element collision: {0}")]
    ElementCollision(String),
    #[error("framework violated: {0}")]
    FrameworkViolated(String),
    #[error("chain-simplex violated: {0}")]
    ChainSimplexViolated(String),
    #[error("use general solver: {0}")]
    DegenerateFramework(String),
    #[error("framework hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("theorem violated: {0}")]
    TheoremViolated(String),
    #[error("ground cap exceeded: {0} elements, cap {1} (set SCARF_GROUND_CAP to raise)")]
    GroundCap(usize, usize),
    #[error("not in general position: {0}")]
    GeneralPosition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ScarfError>;

/// Cap on ground-set sizes for the exponential searches.
/// Overridable through the SCARF_GROUND_CAP environment variable.
pub fn ground_cap() -> usize {
    std::env::var("SCARF_GROUND_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(16)
}

pub(crate) fn check_ground_cap(n: usize) -> Result<()> {
    let cap = ground_cap();
    if n > cap {
        return Err(ScarfError::GroundCap(n, cap));
    }
    Ok(())
}

/// Parse a rational written as "p/q" or "p".
pub fn parse_rat(s: &str) -> Result<Rat> {
    use num_bigint::BigInt;
    use std::str::FromStr;
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| ScarfError::Invalid(format!("bad rational {s:?}: {e}")))?;
    let d = BigInt::from_str(den).map_err(|e| ScarfError::Invalid(format!("bad rational {s:?}: {e}")))?;
    if d == BigInt::from(0) {
        return Err(ScarfError::Invalid(format!("bad rational {s:?}: zero denominator")));
    }
    Ok(Rat::new(n, d))
}

/// Render a rational as "p/q" (or "p" for integers).
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
