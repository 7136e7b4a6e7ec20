//! Evaluators for log-gamma, digamma, the Hurwitz and alternating Hurwitz
//! zeta functions and the Barnes G-function through several independent
//! series representations (Fourier, binomial double sums, Euler-Maclaurin,
//! infinite products, sine and cosine integrals), together with a registry of
//! identities that cross-check the routes against each other.

pub mod bernoulli;
pub mod cli;
pub mod constants;
pub mod error;
pub mod gamma;
pub mod identities;
pub mod numerics;
pub mod quadrature;
pub mod trig;
pub mod zeta;

pub use constants::Constants;
pub use error::{Error, Result};
pub use numerics::{EvalOptions, SeriesValue, TailWindow};
