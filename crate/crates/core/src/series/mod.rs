//! Exact truncated power series and the generating functions built on them.

pub mod gf;
pub mod ring;
pub mod tau;
pub mod truncated;

pub use ring::{Coeff, QtPoly};
pub use tau::{a_tau, b_tau, c_tau, Rule};
pub use truncated::{QtSeries, Series, TruncatedSeries};
