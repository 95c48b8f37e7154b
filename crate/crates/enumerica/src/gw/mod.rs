//! Genus-0 invariants: axiom-based evaluation, curve-count recursions,
//! potentials, quantum products, and the associativity identity.

pub mod basis;
pub mod kontsevich;
pub mod potential;
pub mod quantum;
pub mod query;
pub mod wdvv;

pub use basis::{CohBasis, Target};
pub use kontsevich::{kontsevich, KontsevichTable};
pub use potential::{potential, potential_p2};
pub use quantum::{
    big_quantum_product, format_small_product, small_quantum_product, third_partial, QuantumProduct,
    SmallTerm,
};
pub use query::{dimension_sum, enumerate_nonzero, evaluate_gw, GwQuery};
pub use wdvv::{plane_wdvv_residual, recursion_from_wdvv, wdvv_residual};
