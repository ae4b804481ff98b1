use crate::error::Result;
use crate::exactfield::Matrix;
use crate::modcat::{
    hom_over, hom_over_bimodule_map, is_isomorphic, tensor_bimodule_map, tensor_over, Bimodule,
    Extension, Module, ProjLayout,
};
use crate::tiltext::ExtensionData;

/// Induction and coinduction between `mod C` and `mod B` for a relation extension `B = C x E`.
///
/// `B` is kept as a `C`-`B` and a `B`-`C` bimodule together with its parts `E` (a sub-bimodule)
/// and `C` (the quotient), so the exact sequences come out as explicit maps.
#[derive(Clone, Debug)]
pub struct ChangeOfRings {
    pub ext: ExtensionData,
    cb: Bimodule,
    cb_e: Bimodule,
    cb_c: Bimodule,
    bc: Bimodule,
    bc_e: Bimodule,
    bc_c: Bimodule,
    e_coords: Vec<usize>,
    c_coords: Vec<usize>,
    /// `E` as a `C`-`C` bimodule.
    e: Bimodule,
}

fn selection(n: usize, keep: &[usize], f: crate::exactfield::Field) -> Matrix {
    let mut m = Matrix::zeros(f, keep.len(), n);
    for (r, &c) in keep.iter().enumerate() {
        m.set(r, c, f.one());
    }
    m
}

impl ChangeOfRings {
    pub fn new(ext: &ExtensionData) -> Result<ChangeOfRings> {
        let b = &ext.b;
        let dc = ext.c.dim();
        let all: Vec<usize> = (0..b.num_vertices()).collect();
        let layout = ProjLayout::new(b, &all);
        let reg = Bimodule::regular(b);
        let off = reg.right_module().offsets();
        let mut e_coords = Vec::new();
        let mut c_coords = Vec::new();
        for w in 0..b.num_vertices() {
            for (pos, &(_, basis)) in layout.coords[w].iter().enumerate() {
                if basis >= dc {
                    e_coords.push(off[w] + pos);
                } else {
                    c_coords.push(off[w] + pos);
                }
            }
        }
        let cb = reg.restrict_left(&ext.sigma)?;
        let bc = reg.restrict_right(&ext.sigma)?;
        let e = bc.coordinate_part(&e_coords)?.restrict_left(&ext.sigma)?;
        Ok(ChangeOfRings {
            ext: ext.clone(),
            cb_e: cb.coordinate_part(&e_coords)?,
            cb_c: cb.coordinate_part(&c_coords)?,
            bc_e: bc.coordinate_part(&e_coords)?,
            bc_c: bc.coordinate_part(&c_coords)?,
            cb,
            bc,
            e_coords,
            c_coords,
            e,
        })
    }

    /// `E` as a `C`-`C` bimodule, in the coordinates used inside `B`.
    pub fn e_bimodule(&self) -> &Bimodule {
        &self.e
    }

    /// `M (x)_C B`.
    pub fn induce(&self, m: &Module) -> Result<Module> {
        Ok(tensor_over(m, &self.cb)?.module)
    }

    /// `Hom_C(B, M)`, isomorphic to `D(B (x)_C D M)`.
    pub fn coinduce(&self, m: &Module) -> Result<Module> {
        Ok(hom_over(&self.bc, m)?.module)
    }

    /// A `C`-module viewed as a `B`-module through the projection `B -> C`.
    pub fn as_b_module(&self, m: &Module) -> Result<Module> {
        m.pullback(&self.ext.pi)
    }

    /// Restriction of a `B`-module along the inclusion `C -> B`.
    pub fn restrict(&self, n: &Module) -> Result<Module> {
        n.pullback(&self.ext.sigma)
    }

    /// `M (x)_C E` as a right `C`-module.
    pub fn tensor_e(&self, m: &Module) -> Result<Module> {
        Ok(tensor_over(m, &self.e)?.module)
    }

    /// `Hom_C(E, M)`, isomorphic to `D(E (x)_C D M)`.
    pub fn hom_e(&self, m: &Module) -> Result<Module> {
        Ok(hom_over(&self.e, m)?.module)
    }

    /// `0 -> M (x) E -> M (x) B -> M -> 0` as `B`-modules.
    pub fn induced_ses(&self, m: &Module) -> Result<ShortExact> {
        let f = m.field();
        let n = self.cb.total_dim();
        let te = tensor_over(m, &self.cb_e)?;
        let tb = tensor_over(m, &self.cb)?;
        let tc = tensor_over(m, &self.cb_c)?;
        let inc = selection(n, &self.e_coords, f);
        let proj = selection(n, &self.c_coords, f).transpose();
        let left = tensor_bimodule_map(&inc, &te, &tb);
        let right = tensor_bimodule_map(&proj, &tb, &tc);
        Ok(ShortExact(Extension {
            middle: tb.module,
            left,
            right,
        }))
    }

    /// `0 -> M -> Hom_C(B, M) -> Hom_C(E, M) -> 0` as `B`-modules.
    pub fn coinduced_ses(&self, m: &Module) -> Result<ShortExact> {
        let f = m.field();
        let n = self.bc.total_dim();
        let hc = hom_over(&self.bc_c, m)?;
        let hb = hom_over(&self.bc, m)?;
        let he = hom_over(&self.bc_e, m)?;
        let inc = selection(n, &self.e_coords, f);
        let proj = selection(n, &self.c_coords, f).transpose();
        let left = hom_over_bimodule_map(&proj, &self.bc, &self.bc_c, &hc, &hb);
        let right = hom_over_bimodule_map(&inc, &self.bc_e, &self.bc, &hb, &he);
        Ok(ShortExact(Extension {
            middle: hb.module,
            left,
            right,
        }))
    }

    /// `N (x)_B C`: the only `C`-module whose induction can be isomorphic to `N`.
    pub fn induced_preimage(&self, n: &Module) -> Result<Module> {
        Ok(tensor_over(n, &self.bc_c)?.module)
    }

    /// `Hom_B(C, N)`: the only `C`-module whose coinduction can be isomorphic to `N`.
    pub fn coinduced_preimage(&self, n: &Module) -> Result<Module> {
        Ok(hom_over(&self.cb_c, n)?.module)
    }

    /// A `C`-module `X` with `X (x)_C B = N`, if one exists. Since `(X (x)_C B) (x)_B C = X`, the
    /// preimage is the only candidate and the test is decisive.
    pub fn induced_from(&self, n: &Module) -> Result<Option<Module>> {
        let x = self.induced_preimage(n)?;
        Ok(is_isomorphic(&self.induce(&x)?, n)?.then_some(x))
    }

    /// A `C`-module `X` with `Hom_C(B, X) = N`, if one exists.
    pub fn coinduced_from(&self, n: &Module) -> Result<Option<Module>> {
        let x = self.coinduced_preimage(n)?;
        Ok(is_isomorphic(&self.coinduce(&x)?, n)?.then_some(x))
    }
}

/// A short exact sequence with its maps.
#[derive(Clone, Debug)]
pub struct ShortExact(pub Extension);

impl ShortExact {
    pub fn left(&self) -> &Module {
        &self.0.left.source
    }

    pub fn middle(&self) -> &Module {
        &self.0.middle
    }

    pub fn right(&self) -> &Module {
        &self.0.right.target
    }

    /// Maps commute with the actions, the sequence is exact, and dimensions add up.
    pub fn is_certified(&self) -> bool {
        self.0.left.commutes()
            && self.0.right.commutes()
            && self.0.is_exact()
            && self.left().total_dim() + self.right().total_dim() == self.middle().total_dim()
    }
}
