use super::hom::EndStructure;
use super::module::Module;
use super::resolution::{is_injective, tau_inv, ExtOne, Extension};
use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar};

/// The almost split sequence `0 -> M -> E -> tau^- M -> 0` starting at an indecomposable
/// non-injective module. The class is taken from the socle of `Ext^1(tau^- M, M)` as a module
/// over `End(M)`.
pub fn almost_split_sequence(m: &Module) -> Result<Extension> {
    if is_injective(m) {
        return Err(Error::InvalidModule("no almost split sequence starts at an injective".into()));
    }
    let x = tau_inv(m);
    let ext = ExtOne::new(&x, m)?;
    let d = ext.dim();
    if d == 0 {
        return Err(Error::InvalidModule("Ext^1(tau^- M, M) vanishes; module is not indecomposable".into()));
    }
    let f = m.field();
    let end = EndStructure::new(m)?;
    let rad = end.radical_homs();
    let socle: Vec<Vec<Scalar>> = if rad.is_empty() {
        Matrix::identity(f, d).row_list()
    } else {
        let blocks: Vec<Matrix> = rad
            .iter()
            .map(|psi| {
                let rows = ext
                    .classes
                    .iter()
                    .map(|z| ext.class_of(&ext.push_forward(z, psi)))
                    .collect();
                Matrix::from_rows(f, d, rows)
            })
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::hstack(f, d, &refs).left_kernel_basis()
    };
    let Some(c) = socle.first() else {
        return Err(Error::InvalidModule("End(M)-socle of Ext^1 is zero".into()));
    };
    Ok(ext.extension(&ext.cocycle(c)))
}
