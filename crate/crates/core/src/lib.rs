//! Exact strong domination and strong-neighbors Roman domination on fuzzy
//! graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`]: exact rational scalars parsed from decimal strings.
//! * [`graph`]: the validated, immutable [`FuzzyGraph`] and its complement.
//! * [`connectivity`]: strength of connectedness, strong edges and the cached
//!   [`StrongProfile`].
//! * [`solvers`]: exact `gamma_s` and `gamma_snR` with canonical witnesses.
//! * [`families`]: complete, complete bipartite, cycle and path constructions
//!   with their closed forms, bounds and extremal characterisations.
//! * [`audit`]: every general bound and characterisation checked on one
//!   instance, reported per check.
//! * [`io`]: JSON and DOT formats, seeded instance generation and the
//!   deployment-plan report; [`cli`] wires them into the `snrd` binary.
//!
//! ```
//! use fuzzy_roman::{fixtures, connectivity::strong_profile, solvers::gamma_snr};
//!
//! let g = fixtures::c6();
//! let profile = strong_profile(&g);
//! assert_eq!(gamma_snr(&profile).unwrap().value.to_string(), "0.34");
//! ```

pub mod audit;
pub mod cli;
pub mod connectivity;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod rational;
pub mod solvers;

pub use connectivity::{strong_profile, StrongProfile};
pub use graph::{EdgeExcess, FuzzyGraph, GraphError};
pub use rational::Rational;
