//! Exact homotopy-perturbation (HPM) series for the flat-plate boundary
//! layer, a shooting reference solution, and the comparison between them.
//!
//! ```
//! use blasius_hpm::exactalg::Rational;
//! use blasius_hpm::hpm::{build_series, HpmConfig, Profile};
//!
//! let series = build_series(&HpmConfig::default());
//! let f = series.total(Profile::F);
//! assert_eq!(f.coeff(2), "1348969/7741440".parse::<Rational>().unwrap());
//! // The far-field slope condition holds at L = 5 and nowhere beyond it.
//! assert!(f.derivative().eval(&Rational::from(5)).is_one());
//! assert!(f.derivative().eval_f64(10.0) < -100.0);
//! ```
//!
//! Modules, bottom-up:
//!
//! - [`exactalg`]: rationals and sparse polynomials in η.
//! - [`hpm`]: per-order corrections on the truncated domain `[0, L]`.
//! - [`shooter`]: RK4 + bisection on `f''(0)`, temperature by quadrature.
//! - [`report`]: deviation metrics, CSV table and SVG figure.
//! - [`cli`]: the `blasius-hpm` command line.

// Negated float comparisons below are how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod exactalg;
pub mod hpm;
pub mod report;
pub mod shooter;
