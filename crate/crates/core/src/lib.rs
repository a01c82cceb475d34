//! Linear Jaco graphs and their total, Fibonacci and signed-Fibonacci
//! irregularity, computed with exact integers.
//!
//! Degree sequences come from an O(n) interval sweep ([`jaco`]); metrics run
//! on degree sequences ([`irregularity`]) with quadratic oracles alongside the
//! O(n log n) sorted paths; [`theorems`] checks the incremental recursions and
//! union identities against those oracles.

pub mod error;
pub mod fibonacci;
pub mod graph;
pub mod irregularity;
pub mod jaco;
pub mod report;
pub mod tables;
pub mod theorems;

pub use error::{Error, Result};
pub use fibonacci::{fib, signed_weight_of_degree, weight_of_degree, FibCache};
pub use graph::{DegreeSequence, GraphFamily, SimpleGraph};
pub use irregularity::{
    biclique_firr_closed, firr_pm, firr_t, irr_t, is_f_regular, star_firr_closed, IrrValue,
    Method, Metric, WeightVector,
};
pub use jaco::{
    build_profile, prime_jaconian_index, underlying_degrees, underlying_graph, FiniteJaco,
    JacoProfile,
};
pub use report::{InstanceRecord, Relation, SweepReport, TheoremId, VerifyReport};
pub use theorems::{verify_sweep, SweepParams};
