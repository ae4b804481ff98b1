//! Based algebras: path algebras modulo relations, opposite algebras and quiver extraction.

mod based;
mod pathalg;
mod quiver;

pub use based::{AlgebraData, AlgebraMap, BasedAlgebra, Sparse, Word};
pub use pathalg::{path_algebra_mod, path_algebra_mod_over, path_element, DEFAULT_LENGTH_CAP};
pub use quiver::{Arrow, Quiver, Relation, ResolvedRelation};
