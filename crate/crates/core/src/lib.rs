//! Exact Hodge-Poincare series for moduli of vector bundles on curves.

pub mod beta;
pub mod cli;
pub mod ek;
pub mod error;
pub mod hn;
pub mod hodge;
pub mod json;
pub mod poly;
pub mod rank2;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Exp, LaurentPoly, UniPoly};
pub use rational::{Binomial, FactoredRational};
pub use series::TruncatedSeries;
