//! Tilting modules over hereditary algebras, tilted algebras and their relation extensions.

mod relext;
mod tilting;

pub use relext::{compute_e, relation_extension, ExtensionData};
pub use tilting::{
    end_algebra, is_tilting, slice_from_tilting, SliceData, TiltingCertificate, TiltingData,
    TorsionClass,
};

#[cfg(test)]
mod tests;
