//! Exact optimisation of strong domination (`gamma_s`) and strong-neighbors
//! Roman domination (`gamma_snR`).
//!
//! Both problems are solved by depth-first search over vertices in input
//! order, trying the cheaper decision first (exclude before include, label 0
//! before 1 before 2). A candidate only replaces the incumbent when it is
//! strictly lighter, so the reported witness is always the lexicographically
//! smallest optimum. Weights are scaled to a common denominator and handled as
//! `u128` inside the search loops.

mod domination;
mod labeling;
mod roman;

pub use domination::{
    dominating_weight, gamma_s, gamma_s_bruteforce, is_minimal_strong_dominating,
    is_strong_dominating, DominationInstance,
};
pub use labeling::{swap_partition, validate_snrdf, Label, Labeling, Partition};
pub use roman::{gamma_snr, gamma_snr_bruteforce};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::rational::{common_denominator, Rational};

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_BRUTE_LIMIT: usize = 15;

/// Environment variable overriding [`DEFAULT_BRUTE_LIMIT`].
pub const BRUTE_LIMIT_ENV: &str = "SNRD_BRUTE_LIMIT";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{n} vertices exceed the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("scaled weights do not fit in 128 bits")]
    WeightOverflow,
    #[error("labeling has {got} labels for {expected} vertices")]
    LabelCount { expected: usize, got: usize },
    #[error("invalid label value {0}")]
    InvalidLabel(u8),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("set is not strong dominating")]
    NotDominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverLimits {
    pub brute_force_max_vertices: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            brute_force_max_vertices: DEFAULT_BRUTE_LIMIT,
        }
    }
}

impl SolverLimits {
    pub fn with_brute_limit(limit: usize) -> Self {
        SolverLimits {
            brute_force_max_vertices: limit,
        }
    }

    /// Defaults, overridden by `SNRD_BRUTE_LIMIT` when it holds an integer.
    pub fn from_env() -> Self {
        std::env::var(BRUTE_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::with_brute_limit)
            .unwrap_or_default()
    }

    pub(crate) fn check(&self, n: usize) -> Result<(), SolveError> {
        // Subset masks are u64.
        let limit = self.brute_force_max_vertices.min(63);
        if n > limit {
            Err(SolveError::TooLarge { n, limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Bruteforce,
    BranchAndBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bruteforce => "bruteforce",
            Method::BranchAndBound => "branch_and_bound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Set(BTreeSet<usize>),
    Labeling(Labeling),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: Rational,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub method: Method,
}

impl SolveResult {
    pub fn labeling(&self) -> Option<&Labeling> {
        match &self.witness {
            Witness::Labeling(f) => Some(f),
            Witness::Set(_) => None,
        }
    }

    pub fn set(&self) -> Option<&BTreeSet<usize>> {
        match &self.witness {
            Witness::Set(s) => Some(s),
            Witness::Labeling(_) => None,
        }
    }
}

/// Rational weights expressed as integer multiples of `1 / denom`.
pub(crate) struct ScaledWeights {
    pub units: Vec<u128>,
    denom: BigInt,
}

impl ScaledWeights {
    pub fn new(weights: &[Rational]) -> Result<Self, SolveError> {
        let denom = common_denominator(weights);
        let units = weights
            .iter()
            .map(|w| w.scaled_numerator(&denom).to_u128())
            .collect::<Option<Vec<_>>>()
            .ok_or(SolveError::WeightOverflow)?;
        // Sums of up to 2n weights must fit.
        units
            .iter()
            .try_fold(0u128, |acc, &u| acc.checked_add(u.checked_mul(4)?))
            .ok_or(SolveError::WeightOverflow)?;
        Ok(ScaledWeights { units, denom })
    }

    pub fn to_rational(&self, units: u128) -> Rational {
        Rational::from_big(units.into(), self.denom.clone())
    }
}
