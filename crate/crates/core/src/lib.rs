//! Exact combinatorics and PL geometry for multi-curve chain complexes over
//! decorated graphs, and the linking-number invariant of null-homologous
//! multi-curves.

pub mod complex;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod graph;
pub mod nmch;
pub mod rational;
pub mod suites;

pub use error::{Error, Result};
pub use rational::Q;
