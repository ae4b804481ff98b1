use std::sync::Arc;

use super::module::{hom_from_projective_sum, projective_sum, Module, ModuleHom, ProjLayout};
use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::exactfield::{EchelonBasis, Matrix, Scalar};

/// Generators of a minimal generating set: the vertex of each generator and its vector.
pub fn top_generators(m: &Module) -> (Vec<usize>, Vec<Vec<Scalar>>) {
    let top = m.top();
    let mut verts = Vec::new();
    let mut gens = Vec::new();
    for (v, s) in top.section.iter().enumerate() {
        for i in 0..s.rows() {
            verts.push(v);
            gens.push(s.row_vec(i));
        }
    }
    (verts, gens)
}

/// A projective cover `P -> M` with its coordinate layout.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Module,
    pub layout: ProjLayout,
    pub map: ModuleHom,
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let (verts, gens) = top_generators(m);
    let p = projective_sum(m.algebra(), &verts);
    let layout = ProjLayout::new(m.algebra(), &verts);
    let map = hom_from_projective_sum(&p, &layout, &gens, m);
    ProjectiveCover {
        module: p,
        layout,
        map,
    }
}

/// A map between sums of indecomposable projectives, stored by its matrix of algebra elements:
/// `entries[i][j]` lies in `e_{t_j} A e_{s_i}` and is the component from summand `i` of the
/// source to summand `j` of the target (left multiplication).
#[derive(Clone, Debug)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    /// Reads off the entries of a module map between sums of projectives.
    pub fn from_hom(
        algebra: &BasedAlgebra,
        src: &ProjLayout,
        tgt: &ProjLayout,
        h: &ModuleHom,
    ) -> ProjMap {
        let entries = (0..src.vertices.len())
            .map(|i| {
                let v = src.vertices[i];
                let row = h.blocks[v].row_vec(src.generator_position(algebra, i));
                tgt.split(algebra, v, &row)
            })
            .collect();
        ProjMap {
            source: src.vertices.clone(),
            target: tgt.vertices.clone(),
            entries,
        }
    }

    /// The module map realized by the entries.
    pub fn to_hom(&self, algebra: &Arc<BasedAlgebra>, src: &Module, tgt: &Module) -> ModuleHom {
        let sl = ProjLayout::new(algebra, &self.source);
        let tl = ProjLayout::new(algebra, &self.target);
        let gens: Vec<Vec<Scalar>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let v = self.source[i];
                let mut acc = vec![algebra.field().zero(); tgt.dim_at(v)];
                for (j, x) in row.iter().enumerate() {
                    for (a, b) in acc.iter_mut().zip(tl.embed(algebra, v, j, x)) {
                        *a += &b;
                    }
                }
                acc
            })
            .collect();
        hom_from_projective_sum(src, &sl, &gens, tgt)
    }

    /// Matrix of `Hom(target, N) -> Hom(source, N)`, `h -> h o self`, with `Hom(P(v), N) = N_v`.
    pub fn cochain_matrix(&self, n: &Module) -> Matrix {
        let rows = self.target.iter().map(|&v| n.dim_at(v)).sum();
        let cols = self.source.iter().map(|&v| n.dim_at(v)).sum();
        let mut out = Matrix::zeros(n.field(), rows, cols);
        let mut col = 0;
        for (i, &s) in self.source.iter().enumerate() {
            let mut row = 0;
            for (j, &t) in self.target.iter().enumerate() {
                out.set_block(row, col, &n.element_block(&self.entries[i][j], t, s));
                row += n.dim_at(t);
            }
            col += n.dim_at(s);
        }
        out
    }

    /// The same entries read as a map `Hom(target, A) -> Hom(source, A)` between projectives over
    /// the opposite algebra.
    pub fn transpose(&self) -> ProjMap {
        let entries = (0..self.target.len())
            .map(|j| (0..self.source.len()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        ProjMap {
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`, possibly truncated.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub module: Module,
    /// Vertices of the indecomposable summands of each `P_k`.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<Module>,
    pub layouts: Vec<ProjLayout>,
    /// `differentials[k - 1]` is `d_k: P_k -> P_{k-1}`.
    pub differentials: Vec<ProjMap>,
    pub maps: Vec<ModuleHom>,
    pub augmentation: ModuleHom,
    /// `syzygies[k - 1]` is the k-th syzygy with its inclusion into `P_{k-1}`.
    pub syzygies: Vec<(Module, ModuleHom)>,
    /// Whether the resolution reached a zero syzygy.
    pub complete: bool,
}

impl ProjectiveResolution {
    /// Computes the minimal resolution up to `P_max_len`.
    pub fn new(m: &Module, max_len: usize) -> ProjectiveResolution {
        let alg = m.algebra().clone();
        let cover = projective_cover(m);
        let mut res = ProjectiveResolution {
            module: m.clone(),
            terms: vec![cover.layout.vertices.clone()],
            modules: vec![cover.module.clone()],
            layouts: vec![cover.layout.clone()],
            differentials: Vec::new(),
            maps: Vec::new(),
            augmentation: cover.map.clone(),
            syzygies: Vec::new(),
            complete: false,
        };
        let mut kernel = cover.map.kernel();
        loop {
            if kernel.0.is_zero() {
                res.complete = true;
                break;
            }
            let k = res.terms.len();
            res.syzygies.push(kernel.clone());
            if k > max_len {
                break;
            }
            let (verts, gens) = top_generators(&kernel.0);
            let p = projective_sum(&alg, &verts);
            let layout = ProjLayout::new(&alg, &verts);
            let cover_k = hom_from_projective_sum(&p, &layout, &gens, &kernel.0);
            let d = cover_k.then(&kernel.1);
            let prev_layout = &res.layouts[k - 1];
            res.differentials.push(ProjMap::from_hom(&alg, &layout, prev_layout, &d));
            res.terms.push(verts);
            res.modules.push(p);
            res.layouts.push(layout);
            kernel = d.kernel();
            res.maps.push(d);
        }
        res
    }

    /// Length of the resolution when complete.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len() - 1)
    }

    /// Matrix of `Hom(P_{k-1}, N) -> Hom(P_k, N)` using `Hom(P(v), N) = N_v`. Rows index
    /// summands of `P_{k-1}`, columns summands of `P_k`.
    pub fn cochain_differential(&self, k: usize, n: &Module) -> Matrix {
        if k == 0 || k > self.differentials.len() {
            let rows = self.cochain_dim(k.wrapping_sub(1), n);
            return Matrix::zeros(n.field(), rows, self.cochain_dim(k, n));
        }
        self.differentials[k - 1].cochain_matrix(n)
    }

    /// Dimension of `Hom(P_k, N)` (zero beyond the computed terms or for `k = usize::MAX`).
    pub fn cochain_dim(&self, k: usize, n: &Module) -> usize {
        self.terms
            .get(k)
            .map_or(0, |t| t.iter().map(|&v| n.dim_at(v)).sum())
    }
}

pub fn projective_resolution(m: &Module, max_len: usize) -> ProjectiveResolution {
    ProjectiveResolution::new(m, max_len)
}

pub fn projective_dimension(m: &Module, cap: usize) -> Option<usize> {
    ProjectiveResolution::new(m, cap).projective_dimension()
}

pub fn injective_dimension(m: &Module, cap: usize) -> Option<usize> {
    projective_dimension(&m.dual(), cap)
}

/// Global dimension as the maximum projective dimension of the simples, or `None` above `cap`.
pub fn global_dimension(algebra: &Arc<BasedAlgebra>, cap: usize) -> Option<usize> {
    let mut best = 0;
    for v in 0..algebra.num_vertices() {
        best = best.max(projective_dimension(&Module::simple(algebra.clone(), v), cap)?);
    }
    Some(best)
}

/// A minimal injective coresolution `0 -> M -> I_0 -> I_1 -> ...`, obtained by dualizing the
/// projective resolution of `D M` over the opposite algebra.
#[derive(Clone, Debug)]
pub struct InjectiveResolution {
    pub module: Module,
    /// Vertices `v` of the summands `I(v)` of each term.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<Module>,
    /// `maps[k]` is `I_k -> I_{k+1}`.
    pub maps: Vec<ModuleHom>,
    pub coaugmentation: ModuleHom,
    pub complete: bool,
}

impl InjectiveResolution {
    pub fn new(m: &Module, max_len: usize) -> InjectiveResolution {
        let dm = m.dual();
        let pr = ProjectiveResolution::new(&dm, max_len);
        let modules: Vec<Module> = pr.modules.iter().map(Module::dual).collect();
        let maps = pr
            .maps
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let h = d.dual();
                ModuleHom {
                    source: modules[k].clone(),
                    target: modules[k + 1].clone(),
                    blocks: h.blocks,
                }
            })
            .collect();
        let aug = pr.augmentation.dual();
        InjectiveResolution {
            module: m.clone(),
            terms: pr.terms.clone(),
            coaugmentation: ModuleHom {
                source: m.clone(),
                target: modules[0].clone(),
                blocks: aug.blocks,
            },
            modules,
            maps,
            complete: pr.complete,
        }
    }

    pub fn injective_dimension(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len() - 1)
    }
}

pub fn injective_resolution(m: &Module, max_len: usize) -> InjectiveResolution {
    InjectiveResolution::new(m, max_len)
}

/// `k`-th syzygy (the kernel of `P_{k-1} -> P_{k-2}`, with `Omega^0 M = M`).
pub fn syzygy(m: &Module, k: usize) -> Module {
    if k == 0 {
        return m.clone();
    }
    let res = ProjectiveResolution::new(m, k);
    res.syzygies
        .get(k - 1)
        .map(|s| s.0.clone())
        .unwrap_or_else(|| Module::zero(m.algebra().clone()))
}

/// `k`-th cosyzygy, dual to [`syzygy`].
pub fn cosyzygy(m: &Module, k: usize) -> Module {
    syzygy(&m.dual(), k).dual()
}

/// `dim Ext^k(M, N)`.
pub fn ext_dim(m: &Module, n: &Module, k: usize) -> Result<usize> {
    m.algebra().ensure_same(n.algebra())?;
    let res = ProjectiveResolution::new(m, k + 1);
    Ok(ext_dim_from(&res, n, k))
}

pub(crate) fn ext_dim_from(res: &ProjectiveResolution, n: &Module, k: usize) -> usize {
    let z = res.cochain_dim(k, n) - res.cochain_differential(k + 1, n).rank();
    let b = if k == 0 {
        0
    } else {
        res.cochain_differential(k, n).rank()
    };
    z - b
}

/// `Ext^1(X, N)` with explicit cocycle representatives in `Hom(P_1, N)`.
#[derive(Clone, Debug)]
pub struct ExtOne {
    pub resolution: ProjectiveResolution,
    pub coefficients: Module,
    /// Independent coboundaries followed by class representatives; rows of one matrix.
    stacked: Matrix,
    boundary_rank: usize,
    pub classes: Vec<Vec<Scalar>>,
}

impl ExtOne {
    pub fn new(x: &Module, n: &Module) -> Result<ExtOne> {
        x.algebra().ensure_same(n.algebra())?;
        let res = ProjectiveResolution::new(x, 2);
        let f = n.field();
        let width = res.cochain_dim(1, n);
        let d2 = res.cochain_differential(2, n);
        let cocycles = if d2.cols() == 0 {
            Matrix::identity(f, width).row_list()
        } else {
            d2.left_kernel_basis()
        };
        let d1 = res.cochain_differential(1, n);
        let mut span = EchelonBasis::new(f, width);
        let mut rows = Vec::new();
        for i in 0..d1.rows() {
            if span.insert(d1.row(i)) {
                rows.push(d1.row_vec(i));
            }
        }
        let boundary_rank = rows.len();
        let mut classes = Vec::new();
        for z in cocycles {
            if span.insert(&z) {
                rows.push(z.clone());
                classes.push(z);
            }
        }
        Ok(ExtOne {
            stacked: Matrix::from_rows(f, width, rows),
            boundary_rank,
            classes,
            resolution: res,
            coefficients: n.clone(),
        })
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Class coordinates of a cocycle.
    pub fn class_of(&self, z: &[Scalar]) -> Vec<Scalar> {
        if self.stacked.rows() == 0 {
            return Vec::new();
        }
        let c = self.stacked.solve_left(z).expect("vector is a cocycle");
        c[self.boundary_rank..].to_vec()
    }

    /// Applies an endomorphism of the coefficient module to a cocycle.
    pub fn push_forward(&self, z: &[Scalar], phi: &ModuleHom) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(z.len());
        let mut pos = 0;
        for &v in &self.resolution.terms[1] {
            let d = self.coefficients.dim_at(v);
            out.extend(phi.blocks[v].vec_mul(&z[pos..pos + d]));
            pos += d;
        }
        out
    }

    /// Cocycle from class coordinates.
    pub fn cocycle(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let f = self.coefficients.field();
        let width = self.stacked.cols();
        let mut out = vec![f.zero(); width];
        for (c, z) in coords.iter().zip(&self.classes) {
            for (o, x) in out.iter_mut().zip(z) {
                *o += &(c * x);
            }
        }
        out
    }

    /// The extension `0 -> N -> E -> X -> 0` represented by a cocycle, built as a pushout of
    /// `0 -> Omega X -> P_0 -> X -> 0`.
    pub fn extension(&self, z: &[Scalar]) -> Extension {
        let res = &self.resolution;
        let n = &self.coefficients;
        let alg = n.algebra();
        let p1 = &res.modules[1];
        let mut pos = 0;
        let gens: Vec<Vec<Scalar>> = res.terms[1]
            .iter()
            .map(|&v| {
                let d = n.dim_at(v);
                let g = z[pos..pos + d].to_vec();
                pos += d;
                g
            })
            .collect();
        let zeta = hom_from_projective_sum(p1, &res.layouts[1], &gens, n);
        let neg_d1 = res.maps[0].scale(&-alg.field().one());
        let parts = [n.clone(), res.modules[0].clone()];
        let sum = Module::direct_sum(alg, &parts);
        let into = ModuleHom::into_sum(p1, &sum, &[zeta, neg_d1]);
        let q = into.cokernel();
        let incs = Module::sum_inclusions(&sum, &parts);
        let left = incs[0].then(&q.projection);
        let x = &res.module;
        let out = ModuleHom::from_sum(&sum, x, &[ModuleHom::zero(n, x), res.augmentation.clone()]);
        let right = q.induced(&out);
        Extension {
            middle: q.module.clone(),
            left,
            right,
        }
    }
}

/// A short exact sequence `0 -> A -> B -> C -> 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub middle: Module,
    pub left: ModuleHom,
    pub right: ModuleHom,
}

impl Extension {
    /// Checks exactness: injective, surjective, and kernel equal to image.
    pub fn is_exact(&self) -> bool {
        if !self.left.is_injective() || !self.right.is_surjective() {
            return false;
        }
        if !self.left.then(&self.right).is_zero() {
            return false;
        }
        self.left.rank() + self.right.rank() == self.middle.total_dim()
    }
}

/// `Tr M`, a module over the opposite algebra, from the minimal presentation of `M`.
pub fn transpose(m: &Module) -> Module {
    let res = ProjectiveResolution::new(m, 1);
    let op = m.algebra().opposite();
    if res.differentials.is_empty() {
        // P_1 = 0: the cokernel is Hom(P_1, A) = 0
        return Module::zero(op);
    }
    let t = res.differentials[0].transpose();
    let src = projective_sum(&op, &t.source);
    let tgt = projective_sum(&op, &t.target);
    t.to_hom(&op, &src, &tgt).cokernel().module
}

/// Auslander–Reiten translate `tau M = D Tr M`.
pub fn tau(m: &Module) -> Module {
    transpose(m).dual()
}

/// Inverse translate `tau^- M = Tr D M`.
pub fn tau_inv(m: &Module) -> Module {
    transpose(&m.dual())
}

pub fn is_projective(m: &Module) -> bool {
    ProjectiveResolution::new(m, 0).projective_dimension() == Some(0)
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&m.dual())
}

/// Errors unless the algebra has global dimension at most `bound`.
pub fn ensure_global_dimension(algebra: &Arc<BasedAlgebra>, bound: usize) -> Result<usize> {
    match global_dimension(algebra, bound) {
        Some(d) => Ok(d),
        None => Err(Error::GlobalDimensionTooLarge(bound + 1)),
    }
}

/// Lifts `phi: X' -> X` to maps `f_k: P'_k -> P_k` between projective resolutions, for
/// `k <= len`. With `perturb`, each lift is shifted by a random element of the relevant kernel,
/// which yields a different (homotopic) chain map.
pub fn lift_chain_map<R: rand::Rng>(
    src: &ProjectiveResolution,
    tgt: &ProjectiveResolution,
    phi: &ModuleHom,
    len: usize,
    mut perturb: Option<&mut R>,
) -> Result<Vec<ModuleHom>> {
    let alg = phi.source.algebra().clone();
    let f = alg.field();
    let mut out: Vec<ModuleHom> = Vec::new();
    for k in 0..=len.min(src.terms.len() - 1) {
        let layout = &src.layouts[k];
        let p_src = &src.modules[k];
        // image of each generator, to be lifted through `down: P_k -> below`
        let (down, below_images): (Option<&ModuleHom>, Vec<Vec<Scalar>>) = {
            let imgs = (0..layout.vertices.len())
                .map(|i| {
                    let v = layout.vertices[i];
                    let mut g = vec![f.zero(); p_src.dim_at(v)];
                    g[layout.generator_position(&alg, i)] = f.one();
                    if k == 0 {
                        phi.blocks[v].vec_mul(&src.augmentation.blocks[v].vec_mul(&g))
                    } else {
                        out[k - 1].blocks[v].vec_mul(&src.maps[k - 1].blocks[v].vec_mul(&g))
                    }
                })
                .collect();
            let down = if k == 0 {
                Some(&tgt.augmentation)
            } else {
                tgt.maps.get(k - 1)
            };
            (down, imgs)
        };
        let target_module = tgt
            .modules
            .get(k)
            .cloned()
            .unwrap_or_else(|| Module::zero(alg.clone()));
        let gens = match down {
            None => {
                if below_images.iter().any(|y| y.iter().any(|c| !c.is_zero())) {
                    return Err(Error::InvalidModule("chain map does not lift".into()));
                }
                Vec::new()
            }
            Some(d) => {
                let mut gens = Vec::with_capacity(below_images.len());
                for (i, y) in below_images.iter().enumerate() {
                    let v = layout.vertices[i];
                    let blk = &d.blocks[v];
                    let mut x = if blk.rows() == 0 {
                        if y.iter().any(|c| !c.is_zero()) {
                            return Err(Error::InvalidModule("chain map does not lift".into()));
                        }
                        Vec::new()
                    } else {
                        blk.solve_left(y)
                            .ok_or_else(|| Error::InvalidModule("chain map does not lift".into()))?
                    };
                    if let Some(rng) = perturb.as_deref_mut() {
                        for z in blk.left_kernel_basis() {
                            let c = super::hom::random_scalar(f, rng);
                            for (a, b) in x.iter_mut().zip(&z) {
                                *a += &(&c * b);
                            }
                        }
                    }
                    gens.push(x);
                }
                gens
            }
        };
        let fk = if gens.is_empty() {
            ModuleHom::zero(p_src, &target_module)
        } else {
            hom_from_projective_sum(p_src, layout, &gens, &target_module)
        };
        out.push(fk);
    }
    Ok(out)
}
