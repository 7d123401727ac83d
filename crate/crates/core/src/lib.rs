//! Multiparty quantum key distribution over repeater networks.
//!
//! The crate models a quantum network that operates in discrete rounds:
//! link-level entanglement succeeds per link with probability `p` and carries
//! depolarizing noise `gamma`, swap/merge operations at nodes succeed with
//! probability `q`. On top of that it provides routing (star packing for the
//! 3-party case, key-rate-weighted Steiner trees in general), exact
//! density-operator modeling of noisy GHZ distribution, conference-key rates,
//! and a Monte Carlo round engine for fixed/dynamic, single/multi strategies.
//!
//! All numeric kernels are generic over the scalar type through [`Scalar`]
//! (any `num_traits::Float` with the usual conversions). Double-precision
//! aliases for the main types live at the crate root; `f64` is what the CLI
//! and the validation suites use.

pub mod error;
pub mod graph;
pub mod keyrate;
pub mod quantum;
pub mod routing;
pub mod scalar;
pub mod sim;

pub use error::Error;
pub use scalar::Scalar;

/// Default scalar used by the binaries and test suites.
pub type Real = f64;

/// Double-precision aliases for the core domain types.
pub type Network = graph::Network<Real>;
pub type Snapshot<'a> = graph::Snapshot<'a, Real>;
pub type DensityOperator = quantum::DensityOperator<Real>;
pub type ErrorRates = quantum::ErrorRates<Real>;
pub type KeyRateReport = keyrate::KeyRateReport<Real>;
pub type PathRecord = routing::PathRecord<Real>;
pub type Star = routing::Star<Real>;
pub type ContractedTree = routing::ContractedTree<Real>;
pub type DistStructure = routing::DistStructure<Real>;
pub type Plan = routing::Plan<Real>;
pub type ExperimentConfig = sim::ExperimentConfig<Real>;
pub type ExperimentResult = sim::ExperimentResult<Real>;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;
