use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraData, BasedAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::exactfield::Matrix;
use crate::modcat::{
    decompose, ext_dim, global_dimension, hom_basis, hom_over, hom_over_map, homology,
    injective_resolution, is_indecomposable, is_isomorphic, projective_resolution, tensor_map,
    tensor_over, Bimodule, EndStructure, HomCoordinates, Module, ModuleHom,
};

/// Outcome of the tilting test with the numbers behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingCertificate {
    pub self_extensions: usize,
    pub summands: usize,
    pub simples: usize,
    pub all_indecomposable: bool,
    pub pairwise_non_isomorphic: bool,
}

impl TiltingCertificate {
    pub fn is_tilting(&self) -> bool {
        self.self_extensions == 0
            && self.summands == self.simples
            && self.all_indecomposable
            && self.pairwise_non_isomorphic
    }
}

fn ensure_hereditary(a: &Arc<BasedAlgebra>) -> Result<()> {
    match global_dimension(a, 1) {
        Some(_) => Ok(()),
        None => Err(Error::InvalidAlgebra("not hereditary".into())),
    }
}

/// Tests whether the direct sum of `summands` is a tilting module over the hereditary `a`.
pub fn is_tilting(a: &Arc<BasedAlgebra>, summands: &[Module]) -> Result<TiltingCertificate> {
    ensure_hereditary(a)?;
    for m in summands {
        a.ensure_same(m.algebra())?;
    }
    let t = Module::direct_sum(a, summands);
    let mut all_indecomposable = true;
    for m in summands {
        all_indecomposable &= is_indecomposable(m)?;
    }
    let mut pairwise = true;
    for i in 0..summands.len() {
        for j in i + 1..summands.len() {
            pairwise &= !is_isomorphic(&summands[i], &summands[j])?;
        }
    }
    Ok(TiltingCertificate {
        self_extensions: ext_dim(&t, &t, 1)?,
        summands: summands.len(),
        simples: a.num_vertices(),
        all_indecomposable,
        pairwise_non_isomorphic: pairwise,
    })
}

/// Which torsion class an indecomposable lies in: `T`/`F` for the torsion pair of a tilting
/// module in `mod A`, `X`/`Y` for the induced pair in `mod C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorsionClass {
    T,
    F,
    X,
    Y,
}

/// A tilting module over a hereditary algebra together with its endomorphism algebra.
#[derive(Clone, Debug)]
pub struct TiltingData {
    pub hereditary: Arc<BasedAlgebra>,
    pub summands: Vec<Module>,
    pub module: Module,
    /// `C = End_A(T)`; vertex `i` corresponds to the summand `T_i`.
    pub tilted: Arc<BasedAlgebra>,
    /// `T` as a `C`-`A` bimodule.
    pub bimodule: Bimodule,
}

/// Builds `C = End_A(T)`. The basis of `e_i C e_j` is a basis of `Hom_A(T_j, T_i)` and products
/// are compositions, `c c' = c o c'`, so that `T` is a left `C`-module.
pub fn end_algebra(a: &Arc<BasedAlgebra>, summands: &[Module], labels: Option<Vec<String>>) -> Result<TiltingData> {
    let cert = is_tilting(a, summands)?;
    if !cert.is_tilting() {
        return Err(Error::NotTilting(format!("{cert:?}")));
    }
    let n = summands.len();
    let f = a.field();
    // blocks[i][j]: basis of Hom(T_j, T_i), identity first on the diagonal
    let mut blocks: Vec<Vec<HomCoordinates>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let basis = if i == j {
                let end = EndStructure::new(&summands[i])?;
                if end.top_dim() != 1 {
                    return Err(Error::NotTilting(format!(
                        "summand {} has an endomorphism ring with top of dimension {}",
                        i + 1,
                        end.top_dim()
                    )));
                }
                let mut b = vec![summands[i].identity()];
                b.extend(end.radical_homs());
                b
            } else {
                hom_basis(&summands[j], &summands[i])?
            };
            row.push(HomCoordinates::new(basis, &summands[j], &summands[i]));
        }
        blocks.push(row);
    }
    let vertex_labels = labels.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
    // global indexing: idempotents first, then the remaining elements by block
    let mut index: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    let mut labels_out = Vec::new();
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut homs: Vec<ModuleHom> = Vec::new();
    for i in 0..n {
        index[i][i].push(i);
        labels_out.push(format!("e{}", vertex_labels[i]));
        source.push(i);
        target.push(i);
        homs.push(blocks[i][i].basis()[0].clone());
    }
    for i in 0..n {
        for j in 0..n {
            let skip = usize::from(i == j);
            for (k, h) in blocks[i][j].basis().iter().enumerate().skip(skip) {
                index[i][j].push(labels_out.len());
                labels_out.push(format!("t{}_{}_{}", vertex_labels[i], vertex_labels[j], k + 1 - skip));
                source.push(i);
                target.push(j);
                homs.push(h.clone());
            }
        }
    }
    let dim = labels_out.len();
    let mut table: Vec<Vec<Sparse>> = vec![vec![Vec::new(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            if target[x] != source[y] {
                continue;
            }
            let (i, l) = (source[x], target[y]);
            // x o y: apply y first
            let comp = homs[y].then(&homs[x]);
            let coords = blocks[i][l].coordinates(&comp);
            table[x][y] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (index[i][l][k], c))
                .collect();
        }
    }
    let tilted = BasedAlgebra::new(AlgebraData {
        field: f,
        vertex_labels,
        labels: labels_out,
        source: source.clone(),
        target: target.clone(),
        idempotents: (0..n).collect(),
        table,
        presentation: None,
    })?;
    let module = Module::direct_sum(a, summands);
    let bimodule = t_bimodule(&tilted, &module, summands, &homs)?;
    Ok(TiltingData {
        hereditary: a.clone(),
        summands: summands.to_vec(),
        module,
        tilted,
        bimodule,
    })
}

/// `T` as a `C`-`A` bimodule: `e_i T = T_i`, and `c` in `e_i C e_j` maps `T_j` to `T_i`.
fn t_bimodule(c: &Arc<BasedAlgebra>, t: &Module, summands: &[Module], homs: &[ModuleHom]) -> Result<Bimodule> {
    let f = c.field();
    let nv = t.num_vertices();
    let off = t.offsets();
    // position of (vertex w, summand i, local k) in the concatenated basis of T
    let mut start = vec![vec![0usize; summands.len()]; nv];
    for w in 0..nv {
        let mut acc = off[w];
        for (i, s) in summands.iter().enumerate() {
            start[w][i] = acc;
            acc += s.dim_at(w);
        }
    }
    let mut left_vertex = vec![0; t.total_dim()];
    for w in 0..nv {
        for (i, s) in summands.iter().enumerate() {
            for k in 0..s.dim_at(w) {
                left_vertex[start[w][i] + k] = i;
            }
        }
    }
    let n = t.total_dim();
    let left_actions = c
        .generators()
        .iter()
        .map(|&g| {
            let (i, j) = (c.source(g), c.target(g));
            let h = &homs[g];
            let mut m = Matrix::zeros(f, n, n);
            for w in 0..nv {
                let blk = &h.blocks[w];
                for r in 0..blk.rows() {
                    for col in 0..blk.cols() {
                        m.set(start[w][j] + r, start[w][i] + col, blk.get(r, col).clone());
                    }
                }
            }
            m
        })
        .collect();
    Bimodule::new(c.clone(), t.clone(), left_vertex, left_actions)
}

impl TiltingData {
    /// `Hom_A(T, M)` as a `C`-module.
    pub fn hom_t(&self, m: &Module) -> Result<Module> {
        Ok(hom_over(&self.bimodule, m)?.module)
    }

    /// `Ext^1_A(T, M)` as a `C`-module, from an injective coresolution `0 -> M -> I_0 -> I_1`.
    pub fn ext1_t(&self, m: &Module) -> Result<Module> {
        let res = injective_resolution(m, 1);
        if res.maps.is_empty() {
            return Ok(Module::zero(self.tilted.clone()));
        }
        let h0 = hom_over(&self.bimodule, &res.modules[0])?;
        let h1 = hom_over(&self.bimodule, &res.modules[1])?;
        let d = hom_over_map(&res.maps[0], &h0, &h1);
        Ok(d.cokernel().module)
    }

    /// `N (x)_C T` as an `A`-module.
    pub fn tensor_t(&self, n: &Module) -> Result<Module> {
        Ok(tensor_over(n, &self.bimodule)?.module)
    }

    /// `Tor_1^C(N, T)` as an `A`-module.
    pub fn tor1_t(&self, n: &Module) -> Result<Module> {
        let res = projective_resolution(n, 2);
        if res.maps.is_empty() {
            return Ok(Module::zero(self.hereditary.clone()));
        }
        let t: Vec<_> = res
            .modules
            .iter()
            .map(|p| tensor_over(p, &self.bimodule))
            .collect::<Result<_>>()?;
        let d1 = tensor_map(&res.maps[0], &t[1], &t[0]);
        let d2 = if res.maps.len() >= 2 {
            tensor_map(&res.maps[1], &t[2], &t[1])
        } else {
            ModuleHom::zero(&Module::zero(self.hereditary.clone()), &t[1].module)
        };
        Ok(homology(&d2, &d1).module)
    }

    /// Torsion class of an indecomposable module over `A` or over `C`.
    pub fn torsion_tag(&self, x: &Module) -> Result<TorsionClass> {
        if !is_indecomposable(x)? {
            return Err(Error::InvalidModule("decomposable input".into()));
        }
        let (first, second, tags) = if x.algebra().same_as(&self.hereditary) {
            (
                ext_dim(&self.module, x, 1)? == 0,
                hom_basis(&self.module, x)?.is_empty(),
                (TorsionClass::T, TorsionClass::F),
            )
        } else if x.algebra().same_as(&self.tilted) {
            (
                self.tensor_t(x)?.is_zero(),
                self.tor1_t(x)?.is_zero(),
                (TorsionClass::X, TorsionClass::Y),
            )
        } else {
            return Err(Error::AlgebraMismatch("module is over neither A nor C".into()));
        };
        match (first, second) {
            (true, false) => Ok(tags.0),
            (false, true) => Ok(tags.1),
            _ => Err(Error::InvalidModule(format!(
                "module lies in {} of the two torsion classes",
                if first { "both" } else { "neither" }
            ))),
        }
    }

    /// Indecomposable summands of `Hom_A(T, D A)`.
    pub fn slice(&self) -> Result<SliceData> {
        let da = Module::dual_regular(self.hereditary.clone());
        Ok(SliceData {
            modules: decompose(&self.hom_t(&da)?)?,
        })
    }

    /// `Hom_A(T, T_i)`, which is the indecomposable projective `P_C(i)`.
    pub fn projective_image(&self, i: usize) -> Result<Module> {
        self.hom_t(&self.summands[i])
    }
}

/// The slice `Hom_A(T, D A)` split into indecomposables.
#[derive(Clone, Debug)]
pub struct SliceData {
    pub modules: Vec<Module>,
}

pub fn slice_from_tilting(data: &TiltingData) -> Result<SliceData> {
    data.slice()
}
