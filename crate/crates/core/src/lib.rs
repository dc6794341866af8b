//! Gröbner bases of inhomogeneous polynomial ideals and submodules by way of
//! homogenization, with Buchberger variants that may replace remainders by
//! vectors with the same saturation, and sugar bookkeeping for them.
//!
//! ```
//! use satgb::prelude::*;
//!
//! let ring = Ring::standard(&["x", "y", "z"], OrderSpec::lex()).unwrap();
//! let f = poly(&ring, "x - z^3").unwrap();
//! let g = poly(&ring, "x^2 - y^3").unwrap();
//! let gb = compute_inhom_gb(&[f, g], &ring, &StrategyConfig::self_saturating()).unwrap();
//! let shown: Vec<String> = gb.reduced.iter().map(|v| v.display(&ring).to_string()).collect();
//! assert_eq!(shown, ["x - z^3", "y^3 - z^6"]);
//! ```

pub mod coeff;
pub mod engine;
pub mod error;
pub mod grading;
pub mod homog;
pub mod order;
pub mod poly;
pub mod ring;
pub mod sugar;
pub mod term;
pub mod vector;

pub use coeff::{Field, Prime, Rational, Zp};
pub use error::{AlgebraError, Result};

/// The commonly used types and functions.
pub mod prelude {
    pub use crate::coeff::{Field, Prime, Rational, Zp};
    pub use crate::engine::{
        buchberger, compute_inhom_gb, interreduce, is_groebner_basis, remainder, run_strategy, s_vector,
        sat_remainder, weak_sat_remainder, BasisElement, Criteria, GbResult, ReductionDepth, RemainderMode,
        RunStats, Selection, Strategy, StrategyConfig, WeakSatPolicy,
    };
    pub use crate::error::{AlgebraError, Result};
    pub use crate::grading::{Degree, Grading};
    pub use crate::homog::{dehomogenize, homogenize, homogenize_generators, saturate};
    pub use crate::order::{grading_checks, OrderSpec};
    pub use crate::poly::poly;
    pub use crate::ring::Ring;
    pub use crate::term::{ModuleTerm, PowerProduct};
    pub use crate::vector::ModuleVector;
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/homogenization.md")]
    mod homogenization {}
    #[doc = include_str!("../../../book/src/buchberger.md")]
    mod buchberger {}
    #[doc = include_str!("../../../book/src/sugar.md")]
    mod sugar {}
    #[doc = include_str!("../../../book/src/rationals.md")]
    mod rationals {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
