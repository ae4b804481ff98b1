use std::sync::{Arc, OnceLock};

use super::hom::{hom_basis, HomCoordinates};
use super::module::{projective_sum, Module, ModuleHom, ProjLayout};
use crate::algebra::{AlgebraMap, BasedAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar};

/// A `Gamma`-`A` bimodule: a right `A`-module with a commuting left `Gamma`-action.
///
/// Left actions are stored on the whole space in the row convention used throughout, so the
/// matrix of `g1 g2` is `L(g2) L(g1)`. Every basis vector of the right module lies in a single
/// `e_u X` for a vertex `u` of `Gamma`.
#[derive(Clone)]
pub struct Bimodule {
    left: Arc<BasedAlgebra>,
    right: Module,
    left_vertex: Vec<usize>,
    left_actions: Vec<Matrix>,
    left_basis: Arc<OnceLock<Vec<Matrix>>>,
}

impl std::fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bimodule{:?}", self.right.dims())
    }
}

impl Bimodule {
    /// Builds a bimodule and validates it.
    pub fn new(
        left: Arc<BasedAlgebra>,
        right: Module,
        left_vertex: Vec<usize>,
        left_actions: Vec<Matrix>,
    ) -> Result<Bimodule> {
        let b = Bimodule::new_unchecked(left, right, left_vertex, left_actions);
        b.validate()?;
        Ok(b)
    }

    pub(crate) fn new_unchecked(
        left: Arc<BasedAlgebra>,
        right: Module,
        left_vertex: Vec<usize>,
        left_actions: Vec<Matrix>,
    ) -> Bimodule {
        Bimodule {
            left,
            right,
            left_vertex,
            left_actions,
            left_basis: Arc::new(OnceLock::new()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.right.total_dim();
        let bad = |m: &str| Err(Error::InvalidModule(format!("bimodule: {m}")));
        if self.left_vertex.len() != n || self.left_actions.len() != self.left.generators().len() {
            return bad("shape mismatch");
        }
        let rights: Vec<Matrix> = (0..self.right.actions().len())
            .map(|gi| self.right.generator_full(gi))
            .collect();
        for (gi, &g) in self.left.generators().iter().enumerate() {
            let l = &self.left_actions[gi];
            if l.rows() != n || l.cols() != n {
                return bad("left action has wrong size");
            }
            let (s, t) = (self.left.source(g), self.left.target(g));
            for i in 0..n {
                for j in 0..n {
                    if !l.get(i, j).is_zero() && (self.left_vertex[i] != t || self.left_vertex[j] != s) {
                        return bad("left action does not respect vertices");
                    }
                }
            }
            for r in &rights {
                if l.mul(r) != r.mul(l) {
                    return bad("left and right actions do not commute");
                }
            }
        }
        let lb = self.left_basis_actions();
        for b in 0..self.left.dim() {
            for (gi, &g) in self.left.generators().iter().enumerate() {
                if self.left.target(b) != self.left.source(g) {
                    continue;
                }
                let lhs = self.left_actions[gi].mul(&lb[b]);
                let prod = self.left.sparse_to_dense(self.left.product(b, g));
                if lhs != self.left_element(&prod) {
                    return bad("left action violates a relation");
                }
            }
        }
        Ok(())
    }

    pub fn left_algebra(&self) -> &Arc<BasedAlgebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<BasedAlgebra> {
        self.right.algebra()
    }

    pub fn right_module(&self) -> &Module {
        &self.right
    }

    pub fn left_vertex(&self) -> &[usize] {
        &self.left_vertex
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_actions
    }

    pub fn total_dim(&self) -> usize {
        self.right.total_dim()
    }

    /// Left action of every basis element of `Gamma` on the whole space.
    pub fn left_basis_actions(&self) -> &[Matrix] {
        self.left_basis.get_or_init(|| {
            let alg = &self.left;
            let f = alg.field();
            let n = self.right.total_dim();
            let mut word_acts: Vec<Matrix> = Vec::with_capacity(alg.words().len());
            for w in alg.words() {
                let g = &self.left_actions[w.generator];
                let a = match w.parent {
                    None => g.clone(),
                    Some(p) => g.mul(&word_acts[p]),
                };
                word_acts.push(a);
            }
            (0..alg.dim())
                .map(|b| {
                    if alg.is_idempotent(b) {
                        let v = alg.source(b);
                        let mut m = Matrix::zeros(f, n, n);
                        for i in 0..n {
                            if self.left_vertex[i] == v {
                                m.set(i, i, f.one());
                            }
                        }
                        return m;
                    }
                    let mut m = Matrix::zeros(f, n, n);
                    for (w, c) in alg.expression(b) {
                        m.add_scaled(c, &word_acts[*w]);
                    }
                    m
                })
                .collect()
        })
    }

    /// Left action of an element of `Gamma` on the whole space.
    pub fn left_element(&self, x: &[Scalar]) -> Matrix {
        let f = self.left.field();
        let n = self.right.total_dim();
        let acts = self.left_basis_actions();
        let mut m = Matrix::zeros(f, n, n);
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &acts[b]);
            }
        }
        m
    }

    /// Global indices (in the right module's concatenated basis) lying in `e_u X e_w`.
    pub fn indices(&self, u: usize, w: usize) -> Vec<usize> {
        let off = self.right.offsets();
        (off[w]..off[w + 1]).filter(|&i| self.left_vertex[i] == u).collect()
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(algebra: &Arc<BasedAlgebra>) -> Bimodule {
        let f = algebra.field();
        let all: Vec<usize> = (0..algebra.num_vertices()).collect();
        let right = projective_sum(algebra, &all);
        let layout = ProjLayout::new(algebra, &all);
        let off = right.offsets();
        let n = right.total_dim();
        let mut left_vertex = vec![0; n];
        for w in 0..algebra.num_vertices() {
            for (pos, &(i, _)) in layout.coords[w].iter().enumerate() {
                left_vertex[off[w] + pos] = all[i];
            }
        }
        let left_actions = algebra
            .generators()
            .iter()
            .map(|&g| {
                let mut m = Matrix::zeros(f, n, n);
                for w in 0..algebra.num_vertices() {
                    for (pos, &(_, b)) in layout.coords[w].iter().enumerate() {
                        for (k, c) in algebra.product(g, b) {
                            let tgt = layout.position(w, algebra.source(g), *k);
                            m.set(off[w] + pos, off[w] + tgt, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Bimodule::new_unchecked(algebra.clone(), right, left_vertex, left_actions)
    }

    /// `D X` as an `A`-`Gamma` bimodule.
    pub fn dual(&self) -> Bimodule {
        let f = self.left.field();
        let n = self.total_dim();
        let right_vertex = self.right.vertex_of_index();
        let nl = self.left.num_vertices();
        // new ordering: grouped by left vertex of X, stable within a group
        let order: Vec<usize> = (0..nl)
            .flat_map(|u| (0..n).filter(move |&i| self.left_vertex[i] == u))
            .collect();
        let mut pos = vec![0; n];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let groups: Vec<Vec<usize>> = (0..nl)
            .map(|u| (0..n).filter(|&i| self.left_vertex[i] == u).collect())
            .collect();
        let dims = groups.iter().map(Vec::len).collect();
        let actions = self
            .left
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = (self.left.source(g), self.left.target(g));
                let lt = self.left_actions[gi].transpose();
                lt.submatrix(&groups[s], &groups[t])
            })
            .collect();
        let right = Module::new_unchecked(self.left.clone(), dims, actions);
        let left_vertex = order.iter().map(|&i| right_vertex[i]).collect();
        let left_actions = (0..self.right.actions().len())
            .map(|gi| permute(&self.right.generator_full(gi).transpose(), &order))
            .collect();
        let _ = f;
        Bimodule::new_unchecked(self.right.algebra().clone(), right, left_vertex, left_actions)
    }

    /// `X` viewed as an `A^op`-`Gamma^op` bimodule.
    pub fn opposite(&self) -> Bimodule {
        let n = self.total_dim();
        let right_vertex = self.right.vertex_of_index();
        let nl = self.left.num_vertices();
        let order: Vec<usize> = (0..nl)
            .flat_map(|u| (0..n).filter(move |&i| self.left_vertex[i] == u))
            .collect();
        let groups: Vec<Vec<usize>> = (0..nl)
            .map(|u| (0..n).filter(|&i| self.left_vertex[i] == u).collect())
            .collect();
        let lop = self.left.opposite();
        let dims = groups.iter().map(Vec::len).collect();
        let actions = self
            .left
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = (self.left.source(g), self.left.target(g));
                self.left_actions[gi].submatrix(&groups[t], &groups[s])
            })
            .collect();
        let right = Module::new_unchecked(lop, dims, actions);
        let left_vertex = order.iter().map(|&i| right_vertex[i]).collect();
        let left_actions = (0..self.right.actions().len())
            .map(|gi| permute(&self.right.generator_full(gi), &order))
            .collect();
        Bimodule::new_unchecked(self.right.algebra().opposite(), right, left_vertex, left_actions)
    }

    /// Restricts the left action along `phi: Gamma' -> Gamma` (vertex sets must agree).
    pub fn restrict_left(&self, phi: &AlgebraMap) -> Result<Bimodule> {
        self.left.ensure_same(&phi.target)?;
        let src = phi.source.clone();
        if src.num_vertices() != self.left.num_vertices() {
            return Err(Error::AlgebraMismatch("vertex sets differ".into()));
        }
        let left_actions = src
            .generators()
            .iter()
            .map(|&g| self.left_element(&phi.image_of_basis(g)))
            .collect();
        Ok(Bimodule::new_unchecked(
            src,
            self.right.clone(),
            self.left_vertex.clone(),
            left_actions,
        ))
    }

    /// Restricts the right action along `phi: A' -> A`.
    pub fn restrict_right(&self, phi: &AlgebraMap) -> Result<Bimodule> {
        let right = self.right.pullback(phi)?;
        Ok(Bimodule::new_unchecked(
            self.left.clone(),
            right,
            self.left_vertex.clone(),
            self.left_actions.clone(),
        ))
    }

    /// The part of `X` on a set of global coordinates (in increasing order). This is a
    /// sub-bimodule when the kept coordinates are invariant and a quotient when the dropped ones
    /// are; either way the result is validated.
    pub fn coordinate_part(&self, keep: &[usize]) -> Result<Bimodule> {
        let off = self.right.offsets();
        let nv = self.right.num_vertices();
        let per_vertex: Vec<Vec<usize>> = (0..nv)
            .map(|w| {
                keep.iter()
                    .filter(|&&i| i >= off[w] && i < off[w + 1])
                    .map(|&i| i - off[w])
                    .collect()
            })
            .collect();
        let (right, _) = self.right.coordinate_submodule(&per_vertex);
        let left_vertex = keep.iter().map(|&i| self.left_vertex[i]).collect();
        let left_actions = self.left_actions.iter().map(|l| l.submatrix(keep, keep)).collect();
        Bimodule::new(self.left.clone(), right, left_vertex, left_actions)
    }

    /// The right module `e_u X`, with its inclusion into `X`.
    pub fn left_summand(&self, u: usize) -> (Module, ModuleHom) {
        let off = self.right.offsets();
        let keep: Vec<Vec<usize>> = (0..self.right.num_vertices())
            .map(|w| {
                (off[w]..off[w + 1])
                    .filter(|&i| self.left_vertex[i] == u)
                    .map(|i| i - off[w])
                    .collect()
            })
            .collect();
        self.right.coordinate_submodule(&keep)
    }
}

fn permute(m: &Matrix, order: &[usize]) -> Matrix {
    m.submatrix(order, order)
}

/// Bookkeeping for `M (x)_A X` so that maps can be transported.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: Module,
    /// Per vertex `w` of `Gamma`: the coordinates `(v, i, j)` of the free product and the
    /// quotient data.
    coords: Vec<Vec<(usize, usize, usize)>>,
    proj: Vec<Matrix>,
    section: Vec<Matrix>,
}

impl TensorProduct {
    fn locate(&self, w: usize, key: (usize, usize, usize)) -> usize {
        self.coords[w].iter().position(|&c| c == key).expect("coordinate exists")
    }
}

/// `M (x)_A X` as a right `Gamma`-module, for an `A`-`Gamma` bimodule `X`.
pub fn tensor_over(m: &Module, x: &Bimodule) -> Result<TensorProduct> {
    m.algebra().ensure_same(x.left_algebra())?;
    let a = m.algebra();
    let gamma = x.right_algebra().clone();
    let f = a.field();
    let xr = x.right_module();
    let xoff = xr.offsets();
    let ng = gamma.num_vertices();
    let na = a.num_vertices();
    let mut coords = Vec::with_capacity(ng);
    for w in 0..ng {
        let mut c = Vec::new();
        for v in 0..na {
            for i in 0..m.dim_at(v) {
                for j in xoff[w]..xoff[w + 1] {
                    if x.left_vertex()[j] == v {
                        c.push((v, i, j));
                    }
                }
            }
        }
        coords.push(c);
    }
    let index: Vec<std::collections::HashMap<(usize, usize, usize), usize>> = coords
        .iter()
        .map(|c| c.iter().enumerate().map(|(p, &k)| (k, p)).collect())
        .collect();
    let mut quotients = Vec::with_capacity(ng);
    for w in 0..ng {
        let width = coords[w].len();
        let mut rels: Vec<Vec<Scalar>> = Vec::new();
        for (gi, &g) in a.generators().iter().enumerate() {
            let (s, t) = (a.source(g), a.target(g));
            let rho = &m.actions()[gi];
            let l = &x.left_actions()[gi];
            for i in 0..m.dim_at(s) {
                for j in xoff[w]..xoff[w + 1] {
                    if x.left_vertex()[j] != t {
                        continue;
                    }
                    let mut r = vec![f.zero(); width];
                    for k in 0..m.dim_at(t) {
                        let c = rho.get(i, k);
                        if !c.is_zero() {
                            r[index[w][&(t, k, j)]] += c;
                        }
                    }
                    for jj in xoff[w]..xoff[w + 1] {
                        let c = l.get(j, jj);
                        if !c.is_zero() {
                            r[index[w][&(s, i, jj)]] -= c;
                        }
                    }
                    if r.iter().any(|c| !c.is_zero()) {
                        rels.push(r);
                    }
                }
            }
        }
        quotients.push(Matrix::from_rows(f, width, rels));
    }
    // free module over Gamma on the coordinates, then quotient
    let free_actions = gamma
        .generators()
        .iter()
        .enumerate()
        .map(|(hi, &h)| {
            let (s, t) = (gamma.source(h), gamma.target(h));
            let r = &xr.actions()[hi];
            let mut mat = Matrix::zeros(f, coords[s].len(), coords[t].len());
            for (row, &(v, i, j)) in coords[s].iter().enumerate() {
                let jl = j - xoff[s];
                for jj in 0..xr.dim_at(t) {
                    let c = r.get(jl, jj);
                    if !c.is_zero() {
                        let col = index[t][&(v, i, xoff[t] + jj)];
                        mat.set(row, col, c.clone());
                    }
                }
            }
            mat
        })
        .collect();
    let dims = coords.iter().map(Vec::len).collect();
    let free = Module::new_unchecked(gamma, dims, free_actions);
    let q = free.quotient(&quotients);
    Ok(TensorProduct {
        module: q.module.clone(),
        coords,
        proj: q.projection.blocks.clone(),
        section: q.section.clone(),
    })
}

/// `f (x) X: M (x) X -> M' (x) X`.
pub fn tensor_map(f: &ModuleHom, src: &TensorProduct, tgt: &TensorProduct) -> ModuleHom {
    let field = f.source.field();
    let blocks = (0..src.module.num_vertices())
        .map(|w| {
            let free_dim = tgt.coords[w].len();
            let rows = (0..src.section[w].rows())
                .map(|r| {
                    let lifted = src.section[w].row(r);
                    let mut img = vec![field.zero(); free_dim];
                    for (p, c) in lifted.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (v, i, j) = src.coords[w][p];
                        for k in 0..f.blocks[v].cols() {
                            let a = f.blocks[v].get(i, k);
                            if !a.is_zero() {
                                img[tgt.locate(w, (v, k, j))] += &(c * a);
                            }
                        }
                    }
                    tgt.proj[w].vec_mul(&img)
                })
                .collect();
            Matrix::from_rows(field, tgt.module.dim_at(w), rows)
        })
        .collect();
    ModuleHom::new_unchecked(src.module.clone(), tgt.module.clone(), blocks)
}

/// `M (x) phi: M (x) X -> M (x) Y` for a bimodule map `phi`, given on the whole space
/// (rows: coordinates of `X`, columns: coordinates of `Y`).
pub fn tensor_bimodule_map(phi: &Matrix, src: &TensorProduct, tgt: &TensorProduct) -> ModuleHom {
    let field = src.module.field();
    let blocks = (0..src.module.num_vertices())
        .map(|w| {
            let free_dim = tgt.coords[w].len();
            let rows = (0..src.section[w].rows())
                .map(|r| {
                    let lifted = src.section[w].row(r);
                    let mut img = vec![field.zero(); free_dim];
                    for (p, c) in lifted.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (v, i, j) = src.coords[w][p];
                        for (q, &(v2, i2, k)) in tgt.coords[w].iter().enumerate() {
                            if v2 != v || i2 != i {
                                continue;
                            }
                            let a = phi.get(j, k);
                            if !a.is_zero() {
                                img[q] += &(c * a);
                            }
                        }
                    }
                    tgt.proj[w].vec_mul(&img)
                })
                .collect();
            Matrix::from_rows(field, tgt.module.dim_at(w), rows)
        })
        .collect();
    ModuleHom::new_unchecked(src.module.clone(), tgt.module.clone(), blocks)
}

/// Bookkeeping for `Hom_A(X, M)` so that maps can be transported.
pub struct HomOver {
    pub module: Module,
    target: Module,
    summands: Vec<Module>,
    bases: Vec<HomCoordinates>,
}

impl HomOver {
    fn target_dims(&self) -> &[usize] {
        self.target.dims()
    }
}

/// `Hom_A(X, M)` as a right `Gamma`-module, for a `Gamma`-`A` bimodule `X`.
pub fn hom_over(x: &Bimodule, m: &Module) -> Result<HomOver> {
    x.right_algebra().ensure_same(m.algebra())?;
    let gamma = x.left_algebra().clone();
    let f = gamma.field();
    let ng = gamma.num_vertices();
    let summands: Vec<Module> = (0..ng).map(|u| x.left_summand(u).0).collect();
    let bases: Vec<HomCoordinates> = summands
        .iter()
        .map(|s| Ok(HomCoordinates::new(hom_basis(s, m)?, s, m)))
        .collect::<Result<_>>()?;
    let off = x.right_module().offsets();
    let idx: Vec<Vec<Vec<usize>>> = (0..ng)
        .map(|u| {
            (0..m.num_vertices())
                .map(|w| x.indices(u, w).into_iter().map(|i| i - off[w]).collect())
                .collect()
        })
        .collect();
    let actions = gamma
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, &g)| {
            let (s, t) = (gamma.source(g), gamma.target(g));
            let l = &x.left_actions()[gi];
            let rows: Vec<Vec<Scalar>> = bases[s]
                .basis()
                .iter()
                .map(|h| {
                    let blocks: Vec<Matrix> = (0..m.num_vertices())
                        .map(|w| {
                            let lr: Vec<usize> = idx[t][w].iter().map(|i| i + off[w]).collect();
                            let lc: Vec<usize> = idx[s][w].iter().map(|i| i + off[w]).collect();
                            l.submatrix(&lr, &lc).mul(&h.blocks[w])
                        })
                        .collect();
                    ModuleHom::new_unchecked(summands[t].clone(), m.clone(), blocks).flatten()
                })
                .collect();
            let width: usize = (0..m.num_vertices())
                .map(|w| summands[t].dim_at(w) * m.dim_at(w))
                .sum();
            bases[t].coordinates_many(&Matrix::from_rows(f, width, rows))
        })
        .collect();
    let dims = bases.iter().map(HomCoordinates::dim).collect();
    Ok(HomOver {
        module: Module::new_unchecked(gamma, dims, actions),
        target: m.clone(),
        summands,
        bases,
    })
}

/// `Hom(X, phi): Hom(X, M) -> Hom(X, M')`.
pub fn hom_over_map(phi: &ModuleHom, src: &HomOver, tgt: &HomOver) -> ModuleHom {
    let f = phi.source.field();
    let blocks = (0..src.module.num_vertices())
        .map(|u| {
            let rows: Vec<Vec<Scalar>> = src.bases[u]
                .basis()
                .iter()
                .map(|h| {
                    let blocks = h.blocks.iter().zip(&phi.blocks).map(|(a, b)| a.mul(b)).collect();
                    ModuleHom::new_unchecked(src.summands[u].clone(), phi.target.clone(), blocks).flatten()
                })
                .collect();
            let width: usize = (0..phi.target.num_vertices())
                .map(|w| tgt.summands[u].dim_at(w) * phi.target.dim_at(w))
                .sum();
            tgt.bases[u].coordinates_many(&Matrix::from_rows(f, width, rows))
        })
        .collect();
    ModuleHom::new_unchecked(src.module.clone(), tgt.module.clone(), blocks)
}

/// `Hom(phi, M): Hom_A(Y, M) -> Hom_A(X, M)` for a bimodule map `phi: X -> Y` given on the
/// whole space. `src` is built from `Y` and `tgt` from `X`.
pub fn hom_over_bimodule_map(
    phi: &Matrix,
    x: &Bimodule,
    y: &Bimodule,
    src: &HomOver,
    tgt: &HomOver,
) -> ModuleHom {
    let f = phi.field();
    let blocks = (0..src.module.num_vertices())
        .map(|u| {
            let rows: Vec<Vec<Scalar>> = src.bases[u]
                .basis()
                .iter()
                .map(|h| {
                    let blocks = (0..h.target.num_vertices())
                        .map(|w| phi.submatrix(&x.indices(u, w), &y.indices(u, w)).mul(&h.blocks[w]))
                        .collect();
                    ModuleHom::new_unchecked(tgt.summands[u].clone(), h.target.clone(), blocks).flatten()
                })
                .collect();
            let width: usize = tgt.summands[u]
                .dims()
                .iter()
                .zip(src.target_dims())
                .map(|(a, b)| a * b)
                .sum();
            tgt.bases[u].coordinates_many(&Matrix::from_rows(f, width, rows))
        })
        .collect();
    ModuleHom::new_unchecked(src.module.clone(), tgt.module.clone(), blocks)
}

/// `Hom_A(M, X)` as a right `Gamma^op`-module, for a `Gamma`-`A` bimodule `X`.
pub fn hom_into(m: &Module, x: &Bimodule) -> Result<Module> {
    x.right_algebra().ensure_same(m.algebra())?;
    let gamma = x.left_algebra().clone();
    let f = gamma.field();
    let ng = gamma.num_vertices();
    let summands: Vec<Module> = (0..ng).map(|u| x.left_summand(u).0).collect();
    let bases: Vec<HomCoordinates> = summands
        .iter()
        .map(|s| Ok(HomCoordinates::new(hom_basis(m, s)?, m, s)))
        .collect::<Result<_>>()?;
    let off = x.right_module().offsets();
    let idx: Vec<Vec<Vec<usize>>> = (0..ng)
        .map(|u| {
            (0..m.num_vertices())
                .map(|w| x.indices(u, w))
                .collect()
        })
        .collect();
    let _ = off;
    // generator g: s -> t of Gamma is t -> s in Gamma^op and sends Hom(M, e_t X) to Hom(M, e_s X)
    let actions = gamma
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, &g)| {
            let (s, t) = (gamma.source(g), gamma.target(g));
            let l = &x.left_actions()[gi];
            let rows: Vec<Vec<Scalar>> = bases[t]
                .basis()
                .iter()
                .map(|h| {
                    let blocks: Vec<Matrix> = (0..m.num_vertices())
                        .map(|w| h.blocks[w].mul(&l.submatrix(&idx[t][w], &idx[s][w])))
                        .collect();
                    ModuleHom::new_unchecked(m.clone(), summands[s].clone(), blocks).flatten()
                })
                .collect();
            let width: usize = (0..m.num_vertices())
                .map(|w| m.dim_at(w) * summands[s].dim_at(w))
                .sum();
            bases[s].coordinates_many(&Matrix::from_rows(f, width, rows))
        })
        .collect();
    let dims = bases.iter().map(HomCoordinates::dim).collect();
    Ok(Module::new_unchecked(gamma.opposite(), dims, actions))
}

/// Nakayama functor `nu M = D Hom_A(M, A)`.
pub fn nakayama(m: &Module) -> Result<Module> {
    Ok(hom_into(m, &Bimodule::regular(m.algebra()))?.dual())
}

/// Inverse Nakayama functor `nu^- M = Hom_A(D A, M)`.
pub fn nakayama_inv(m: &Module) -> Result<Module> {
    Ok(hom_over(&Bimodule::regular(m.algebra()).dual(), m)?.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_algebra_mod_over, Quiver};
    use crate::exactfield::Field;

    fn a3() -> Arc<BasedAlgebra> {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        path_algebra_mod_over(Field::default(), &q, &[], 8).unwrap()
    }

    #[test]
    fn regular_bimodule_and_duals_validate() {
        let alg = a3();
        let r = Bimodule::regular(&alg);
        r.validate().unwrap();
        r.dual().validate().unwrap();
        r.opposite().validate().unwrap();
        r.dual().dual().validate().unwrap();
    }

    #[test]
    fn tensor_with_regular_is_identity() {
        let alg = a3();
        let m = Module::injective(alg.clone(), 2);
        let t = tensor_over(&m, &Bimodule::regular(&alg)).unwrap();
        assert_eq!(t.module.dims(), m.dims());
        assert!(super::super::hom::is_isomorphic(&t.module, &m).unwrap());
    }

    #[test]
    fn hom_from_regular_is_identity() {
        let alg = a3();
        let m = Module::injective(alg.clone(), 2);
        let h = hom_over(&Bimodule::regular(&alg), &m).unwrap();
        h.module.validate().unwrap();
        assert!(super::super::hom::is_isomorphic(&h.module, &m).unwrap());
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let alg = a3();
        for v in 0..3 {
            let nu = nakayama(&Module::projective(alg.clone(), v)).unwrap();
            nu.validate().unwrap();
            assert!(super::super::hom::is_isomorphic(&nu, &Module::injective(alg.clone(), v)).unwrap());
            let back = nakayama_inv(&nu).unwrap();
            assert!(super::super::hom::is_isomorphic(&back, &Module::projective(alg.clone(), v)).unwrap());
        }
    }
}
