//! Shared numeric kernels: evaluation options, series results, compensated and
//! accelerated summation, exact phase reduction and trigonometric series with
//! tail corrections.

mod harmonic;
mod phase;
mod summation;
mod twofold;

pub use harmonic::{harmonic_sum, harmonic_tail_averaged, Harmonics, TrigPair};
pub use phase::{cos_2pi, cos_pi, frac_mul, sin_2pi, sin_pi};
pub use summation::{
    compensated_sum, euler_transform_alternating, log_power_tail, power_tail, tail_averaged_sum,
    Neumaier,
};
pub use twofold::TwoFold;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Weighting applied to partial sums inside the tail-averaging window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum TailWindow {
    /// Plain arithmetic mean of the window.
    Flat,
    /// Raised-cosine weights vanishing at both window edges.
    #[default]
    Hann,
}

/// Tolerances and budgets shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Cap on series terms (outer terms for double sums).
    pub max_terms: usize,
    /// Fraction of `max_terms` used as the tail-averaging window.
    pub tail_window_fraction: f64,
    pub tail_window: TailWindow,
    /// Highest tanh-sinh refinement level.
    pub quad_max_level: u32,
    pub seed: u64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-12,
            max_terms: 100_000,
            tail_window_fraction: 0.1,
            tail_window: TailWindow::Hann,
            quad_max_level: 12,
            seed: 0xC0FFEE,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Options(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::Options(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 8 {
            return Err(Error::Options(format!(
                "max_terms must be at least 8, got {}",
                self.max_terms
            )));
        }
        if !(self.tail_window_fraction > 0.0 && self.tail_window_fraction <= 1.0) {
            return Err(Error::Options(format!(
                "tail_window_fraction must lie in (0, 1], got {}",
                self.tail_window_fraction
            )));
        }
        if self.quad_max_level == 0 || self.quad_max_level > 20 {
            return Err(Error::Options(format!(
                "quad_max_level must lie in 1..=20, got {}",
                self.quad_max_level
            )));
        }
        Ok(())
    }

    /// Combined tolerance `max(abs_tol, rel_tol * |value|)`.
    pub fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_tail_window(mut self, window: TailWindow) -> Self {
        self.tail_window = window;
        self
    }

    pub fn with_tail_window_fraction(mut self, fraction: f64) -> Self {
        self.tail_window_fraction = fraction;
        self
    }

    pub fn with_quad_max_level(mut self, level: u32) -> Self {
        self.quad_max_level = level;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Number of partial sums in the averaging window.
    pub fn tail_window_len(&self) -> usize {
        ((self.tail_window_fraction * self.max_terms as f64).ceil() as usize)
            .clamp(1, self.max_terms)
    }
}

/// Result of a series evaluation.
///
/// `err_estimate` is a heuristic: for accelerated sums it is the last
/// successive difference, for tail-averaged sums half the spread of the
/// window, for corrected trigonometric sums the size of the dropped term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesValue {
    pub fn exact(value: f64, terms_used: usize) -> Self {
        Self {
            value,
            err_estimate: 0.0,
            terms_used,
            converged: true,
        }
    }

    /// Apply an affine map `a * value + b`, scaling the error by `|a|`.
    pub fn affine(self, a: f64, b: f64) -> Self {
        Self {
            value: a * self.value + b,
            err_estimate: a.abs() * self.err_estimate,
            ..self
        }
    }

    /// Combine two independent estimates additively.
    pub fn plus(self, other: SeriesValue) -> Self {
        Self {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
        }
    }
}
