//! Exact-arithmetic enumerative geometry.
//!
//! The crate computes classical and quantum enumerative invariants with big
//! integers and rationals throughout: line counts on hypersurfaces by both
//! Schubert calculus and torus localization, Schubert cell data and Euler
//! characteristics of Grassmannians and flag varieties, plane curve counts
//! from the associativity recursion, genus-0 potentials, and quantum
//! products for the line, the plane, and positive-genus surfaces.
//!
//! Two design rules hold everywhere: no floating point, and every headline
//! number is reachable by two independent routes that the test suite
//! cross-checks.

use std::fmt;

pub mod cells;
pub mod chern;
pub mod gw;
pub mod localization;
pub mod partition;
pub mod rng;
pub mod scalar;
pub mod schubert;
pub mod series;

pub use cells::{betti, cell_dimension, duality_check, euler_from_cells, flag_stats, CellDecomposition, CellMode};
pub use chern::{hypersurface_tangent_chern, projective_tangent_chern, sym_chern, HPoly, SymPoly2};
pub use localization::{euler_char, fixed_points, lines_via_localization, FixedPoint, Space, WeightVector};
pub use partition::{partitions_bounded, Partition};
pub use schubert::{lines_on_hypersurface, lr_coefficient, ChowClass, GrassContext};
pub use series::{monomial_normalize, GradedVariable, Parity, SuperMonomial, SuperSeries, Truncation, VarTable};

/// Errors from genuinely fallible computations. Precondition violations
/// (bad indices, mismatched contexts) panic instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Independent localization trials disagreed; the sum is supposed to be
    /// weight-independent, so this flags an arithmetic bug.
    TrialDisagreement {
        trial: u32,
        expected: String,
        got: String,
    },
    /// The localized sum came out non-integral.
    NonIntegerSum { value: String },
    /// The requested invariant falls outside the supported space/degree
    /// combinations.
    UnsupportedQuery(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TrialDisagreement {
                trial,
                expected,
                got,
            } => write!(
                f,
                "localization trial {trial} disagreed: expected {expected}, got {got}"
            ),
            Error::NonIntegerSum { value } => {
                write!(f, "localized sum is not an integer: {value}")
            }
            Error::UnsupportedQuery(msg) => write!(f, "unsupported query: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
