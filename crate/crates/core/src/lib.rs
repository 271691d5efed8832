//! Exact q-series engine and partition-statistics oracle for checking the
//! rank/crank identities relating `NT(r,8,n)` and `M_ω(r,4,n)`.
//!
//! Layers, bottom up:
//! - [`series`]: truncated Laurent series with exact rational coefficients;
//! - [`products`]: infinite products (J_m, J_{r,m}, brackets, theta functions);
//! - [`lambert`]: Lambert-type and bilateral Appell-type sums;
//! - [`partitions`]: brute-force rank, crank, NT and M_ω;
//! - [`registry`]: every identity as an order-parameterised LHS/RHS pair;
//! - [`cli`]: the `qpv` command-line front end.

pub mod cli;
pub mod error;
pub mod lambert;
pub mod partitions;
pub mod products;
pub mod registry;
pub mod series;

pub use error::{SeriesError, VerifyError};
pub use series::{LaurentSeries, Rational, EXACT};
