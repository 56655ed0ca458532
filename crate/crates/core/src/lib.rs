//! Exact-rational evaluation and verification of Reed Dawson type binomial
//! sums, their binomial-harmonic relatives, Wilf–Zeilberger certificates,
//! shifted-Legendre moment identities and summation-by-parts instances.

pub mod abel;
pub mod catalog;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod gamma;
pub mod hyper;
pub mod identities;
pub mod legendre;
pub mod rational;
pub mod sweep;
pub mod wz;

pub use error::{Error, Result};
pub use rational::Rational;
