//! Exact enumeration of the central subarrangements of `J_n`, the
//! arrangement in `R^n` of the walls `x_a + x_b = 1` (type I) and
//! `x_i = 0`, `x_i = 1` (type II).
//!
//! Subarrangements without a `{0_i, 1_i}` pair correspond to 3-colored
//! graphs on `[n]`, and a subarrangement has a common point exactly when its
//! graph is central. The engine walks the subset lattice depth first,
//! checking centrality incrementally with a parity union-find, and sums
//! `(-1)^|B| t^(n - rank B)` into the characteristic polynomial. Region
//! counts follow by evaluating at `t = ±1`.
//!
//! Two independent checks back every number:
//!
//! * [`linalg`]: fraction-free elimination on the augmented matrix
//!   `[A | b]` for rank and consistency;
//! * [`finite_field`]: brute-force point counts over `F_q` interpolated
//!   back into a polynomial.
//!
//! ```
//! use wallgraph::{char_poly, region_counts, ArrangementSpace};
//!
//! let space = ArrangementSpace::new(3)?;
//! let chi = char_poly(&space)?;
//! assert_eq!(chi.to_string(), "t^3-9t^2+27t-27");
//! let counts = region_counts(&chi, 3);
//! assert_eq!((counts.regions, counts.bounded), (64, 8));
//! # Ok::<(), wallgraph::Error>(())
//! ```
//!
//! The exact routines are generic over [`ExactInt`]; the aliases below fix
//! the scalar to `i64`, which is ample for every supported dimension.

pub mod arrangement;
pub mod dsu;
pub mod engine;
mod error;
pub mod finite_field;
pub mod graph;
pub mod linalg;
pub mod poly;
mod scalar;

pub use arrangement::{ArrangementSpace, Level, Subarrangement, Wall};
pub use dsu::ParityDsu;
pub use engine::{
    census, census_with_jobs, char_poly, char_poly_with_jobs, enumerate_central, region_counts, CensusTable,
    RegionCounts, EXHAUSTIVE_CAP,
};
pub use error::{Error, Result};
pub use finite_field::{count_points, interpolate_chi, PointCount};
pub use graph::{arrangement_of, decompose, graph_of, graph_rank, is_central, ColoredGraph, Decomposition};
pub use linalg::{eliminate, matrix_consistent, EliminationResult};
pub use poly::{FactorReport, Polynomial};
pub use scalar::ExactInt;

/// Characteristic polynomial with `i64` coefficients.
pub type CharPoly = Polynomial<i64>;
/// Associated matrix over `i64`.
pub type Matrix = arrangement::AssociatedMatrix<i64>;
/// Elimination result over `i64`, witness in `Ratio<i64>`.
pub type Elimination = EliminationResult<i64>;
/// Rational scalar used by witnesses and interpolation.
pub type Rational = num_rational::Ratio<i64>;
