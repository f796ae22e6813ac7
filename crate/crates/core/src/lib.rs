//! Polyhedral upper sets ordered by inclusion, extended reals with
//! inf-addition, lower Dini derivatives of set-valued functions, generalized
//! convexity classifiers and grid-based optimality checks.
//!
//! Problems are described declaratively (see [`problem::Problem`]) and
//! every check returns a [`report::CheckReport`] that names the grid and
//! dual sample it was certified on.

pub mod cli;
pub mod corpus;
pub mod dini;
pub mod error;
pub mod expr;
pub mod funcmodel;
pub mod gencvx;
pub mod optimality;
pub mod polytope;
pub mod problem;
pub mod report;
pub mod xreals;
