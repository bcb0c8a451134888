//! Toolkit for exact one-query quantum algorithms on partial Boolean
//! functions.
//!
//! Given a partial Boolean function, the crate decides whether it admits an
//! exact one-query quantum algorithm, produces the weight certificate
//! witnessing the decision, builds the measurement projector via an
//! exact-rational Gram formulation, and simulates the resulting one-query
//! algorithm to probability-1 correctness in double precision.
//!
//! Modules follow the pipeline:
//!
//! - [`boolfn`]: bit strings, partial functions, parsing, isomorphism group
//! - [`feasibility`]: the weight-certificate decision over exact rationals
//! - [`witness`]: weighted inner products, Gram witness, projector
//! - [`simulator`]: the one-query algorithm in double precision
//! - [`catalog`]: the f1..f5 function families and their certificates
//! - [`classify`]: degree filter, one-query classification, exhaustive scans
//!
//! The `oneq` binary wires these into file-based commands.

pub mod boolfn;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod feasibility;
pub mod linalg;
pub mod rational;
pub mod simulator;
pub mod witness;

pub use boolfn::{BitString, IndexSet, PartialBooleanFunction, SignVector};
pub use error::{Error, Result};
pub use feasibility::{
    build_constraints, solve_feasibility, verify_certificate, ConstraintSystem,
    FeasibilityOutcome, WeightCertificate,
};
pub use rational::Rational;
pub use simulator::{run_algorithm1, SimulationReport, StateVector};
pub use witness::{
    build_gram_witness, build_projector_float, check_orthogonality, evaluate_g, weighted_inner,
    GramWitness, ProjectorMatrix,
};
