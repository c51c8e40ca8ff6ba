//! Cycle-accurate simulation and analytical design of control
//! conditioning for peak/valley current-mode dc-dc converters whose
//! current sensor is corrupted by bounded interference.
//!
//! Three conditioning methods are modeled and cross-verified against
//! the nonlinear cycle simulation: slope compensation, first-order
//! low-pass filtering, and comparator-overdrive-delay. Each comes with
//! continuity and stability certificates, closed-loop pole ranges, and
//! worst-case settling/overshoot predictions.

pub mod compare;
pub mod config;
pub mod error;
pub mod filter;
pub mod interference;
pub mod metrics;
pub mod overdrive;
pub mod probe;
pub mod sim;
pub mod spectrum;
pub mod slope;
pub mod tf;
pub mod types;

pub use error::{Error, Result};

// The guide's chapters double as doctests, so the book and the library
// cannot drift apart.
#[doc = include_str!("../../../book/src/introduction.md")]
mod _book_introduction {}
#[doc = include_str!("../../../book/src/converter-and-normalization.md")]
mod _book_converter {}
#[doc = include_str!("../../../book/src/interference.md")]
mod _book_interference {}
#[doc = include_str!("../../../book/src/cycle-simulation.md")]
mod _book_cycle_simulation {}
#[doc = include_str!("../../../book/src/slope-compensation.md")]
mod _book_slope {}
#[doc = include_str!("../../../book/src/low-pass-filter.md")]
mod _book_filter {}
#[doc = include_str!("../../../book/src/comparator-overdrive.md")]
mod _book_overdrive {}
#[doc = include_str!("../../../book/src/metrics-and-spectra.md")]
mod _book_metrics {}
#[doc = include_str!("../../../book/src/command-line.md")]
mod _book_cli {}
