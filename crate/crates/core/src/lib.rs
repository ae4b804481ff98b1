//! Exact computations with finite-dimensional algebras given by quivers with relations:
//! module categories, tilting theory, relation extensions, and Auslander–Reiten quivers.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod algebra;
pub mod exactfield;
pub mod modcat;
pub mod tiltext;
pub mod functors;
pub mod knitting;
pub mod io;

pub use error::{Error, Result};
