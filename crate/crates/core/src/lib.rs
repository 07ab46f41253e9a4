//! Order-one invariants of generic spherical curves.
//!
//! Curves are given as signed Gauss codes and realized as oriented
//! combinatorial maps. The crate computes the universal order-one invariant
//! `F = f^X + f^Y`, the linear functionals built on it (including Arnold's
//! `J+`, `J-` and strangeness), the calculus of singularity symbols, and the
//! corpus-wide verification suites.

pub mod cli;
pub mod codec;
pub mod curvemap;
pub mod enumerate;
pub mod error;
pub mod indices;
pub mod invariants;
pub mod rational;
pub mod singular;
pub mod symbols;
pub mod verify;

pub use codec::{parse_gauss, Sign, SignedGaussCode};
pub use curvemap::{CurveMap, FaceTable, HomotopyClass, Side};
pub use error::{Error, Result};
pub use rational::Q;
