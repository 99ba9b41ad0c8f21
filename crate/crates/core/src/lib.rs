//! Exact characteristic-class calculus for rank-3 bundles on projective
//! 3-space.
//!
//! The arithmetic layers ([`chowring`], [`chern`], [`poly`]) are generic over
//! an exact [`Scalar`]; integer-valued answers (Euler characteristics,
//! cohomology dimensions, moduli dimensions) are computed over [`Q`].

pub mod chern;
pub mod chowring;
pub mod cli;
pub mod cohomtable;
pub mod constants;
pub mod curvelink;
mod error;
pub mod moduli;
pub mod poly;
pub mod scalar;
pub mod spectrum;
pub mod verify;

pub use chern::{ChernData, ChiPolynomial};
pub use chowring::ChowClass;
pub use cohomtable::{CohomTable, MonadType};
pub use constants::{Constants, Fault};
pub use curvelink::CurveInvariants;
pub use error::{Error, Result};
pub use moduli::{Hypothesis, ModuliReport};
pub use scalar::Scalar;
pub use spectrum::{Spectrum, SpectrumContext};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Q = num_rational::BigRational;

/// Machine-word rationals; faster, but may overflow on large inputs.
pub type Q64 = num_rational::Ratio<i64>;

pub type Chow = ChowClass<Q>;
pub type Chow64 = ChowClass<Q64>;
pub type ChiPoly = ChiPolynomial<Q>;
