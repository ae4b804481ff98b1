//! Finite-dimensional right modules over a [`BasedAlgebra`](crate::algebra::BasedAlgebra):
//! homomorphisms, decomposition, resolutions, Ext, duality, the Auslander–Reiten translate and
//! functors given by bimodules.

mod ar;
mod bimodule;
mod decompose;
mod hom;
mod module;
mod resolution;

pub use ar::almost_split_sequence;
pub use bimodule::{
    hom_into, hom_over, hom_over_bimodule_map, hom_over_map, nakayama, nakayama_inv, tensor_bimodule_map, tensor_map, tensor_over, Bimodule,
    HomOver, TensorProduct,
};
pub use decompose::{decompose, decompose_with_inclusions, is_indecomposable, Summand};
pub use hom::{find_isomorphism, hom_basis, hom_dim, is_isomorphic, unflatten, EndStructure, HomCoordinates};
pub use module::{hom_from_projective_sum, homology, projective_sum, Module, ModuleHom, ProjLayout, Quotient};
pub use resolution::{
    cosyzygy, ensure_global_dimension, ext_dim, global_dimension, injective_dimension,
    injective_resolution, is_injective, is_projective, lift_chain_map, projective_cover, projective_dimension,
    projective_resolution, syzygy, tau, tau_inv, top_generators, transpose, ExtOne, Extension,
    InjectiveResolution, ProjMap, ProjectiveCover, ProjectiveResolution,
};

#[cfg(test)]
mod tests;
