use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{AlgebraMap, BasedAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Matrix, QuotientSpace, Scalar};

struct Inner {
    algebra: Arc<BasedAlgebra>,
    dims: Vec<usize>,
    /// Action of each generator (by position in the generator list); a generator `v -> w`
    /// acts by a `dims[v] x dims[w]` matrix on row vectors.
    actions: Vec<Matrix>,
    basis_actions: OnceLock<Vec<Matrix>>,
}

/// A finite-dimensional right module, i.e. a representation of the bound quiver.
#[derive(Clone)]
pub struct Module(Arc<Inner>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims())
    }
}

impl Module {
    /// Builds a module and validates it against the algebra's multiplication.
    pub fn new(algebra: Arc<BasedAlgebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Result<Module> {
        if dims.len() != algebra.num_vertices() {
            return Err(Error::InvalidModule(format!(
                "expected {} dimensions, got {}",
                algebra.num_vertices(),
                dims.len()
            )));
        }
        if actions.len() != algebra.generators().len() {
            return Err(Error::InvalidModule(format!(
                "expected {} generator actions, got {}",
                algebra.generators().len(),
                actions.len()
            )));
        }
        for (gi, &g) in algebra.generators().iter().enumerate() {
            let (s, t) = (algebra.source(g), algebra.target(g));
            let a = &actions[gi];
            if a.rows() != dims[s] || a.cols() != dims[t] || a.field() != algebra.field() {
                return Err(Error::InvalidModule(format!(
                    "action of {} has shape {}x{}, expected {}x{}",
                    algebra.labels()[g],
                    a.rows(),
                    a.cols(),
                    dims[s],
                    dims[t]
                )));
            }
        }
        let m = Module::new_unchecked(algebra, dims, actions);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<BasedAlgebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Module {
        Module(Arc::new(Inner {
            algebra,
            dims,
            actions,
            basis_actions: OnceLock::new(),
        }))
    }

    /// Checks `rho(b) rho(g) = rho(b g)` for every basis element `b` and generator `g`.
    pub fn validate(&self) -> Result<()> {
        let alg = self.algebra();
        let acts = self.basis_actions();
        for b in 0..alg.dim() {
            for (gi, &g) in alg.generators().iter().enumerate() {
                if alg.target(b) != alg.source(g) {
                    continue;
                }
                let lhs = acts[b].mul(&self.0.actions[gi]);
                let rhs = self.element_block(&alg.sparse_to_dense(alg.product(b, g)), alg.source(b), alg.target(g));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "relation violated at {} * {}",
                        alg.labels()[b],
                        alg.labels()[g]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        &self.0.algebra
    }

    pub fn field(&self) -> Field {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn num_vertices(&self) -> usize {
        self.0.dims.len()
    }

    /// Generator actions by position in the algebra's generator list.
    pub fn actions(&self) -> &[Matrix] {
        &self.0.actions
    }

    pub fn same_module(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Start of each vertex block in the concatenated basis.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.0.dims.len() + 1);
        let mut acc = 0;
        for &d in &self.0.dims {
            off.push(acc);
            acc += d;
        }
        off.push(acc);
        off
    }

    /// Vertex of each vector in the concatenated basis.
    pub fn vertex_of_index(&self) -> Vec<usize> {
        self.0
            .dims
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
            .collect()
    }

    /// Action block of every basis element of the algebra (`dims[s] x dims[t]`).
    pub fn basis_actions(&self) -> &[Matrix] {
        self.0.basis_actions.get_or_init(|| {
            let alg = &self.0.algebra;
            let f = alg.field();
            let dims = &self.0.dims;
            let mut word_acts: Vec<Matrix> = Vec::with_capacity(alg.words().len());
            for w in alg.words() {
                let g = &self.0.actions[w.generator];
                let a = match w.parent {
                    None => g.clone(),
                    Some(p) => word_acts[p].mul(g),
                };
                word_acts.push(a);
            }
            (0..alg.dim())
                .map(|b| {
                    let (s, t) = (alg.source(b), alg.target(b));
                    if alg.is_idempotent(b) {
                        return Matrix::identity(f, dims[s]);
                    }
                    let mut m = Matrix::zeros(f, dims[s], dims[t]);
                    for (w, c) in alg.expression(b) {
                        m.add_scaled(c, &word_acts[*w]);
                    }
                    m
                })
                .collect()
        })
    }

    /// Action of an algebra element restricted to `M_s -> M_t` (only components in
    /// `e_s A e_t` contribute).
    pub fn element_block(&self, x: &[Scalar], s: usize, t: usize) -> Matrix {
        let alg = self.algebra();
        let acts = self.basis_actions();
        let mut m = Matrix::zeros(self.field(), self.dim_at(s), self.dim_at(t));
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() && alg.source(b) == s && alg.target(b) == t {
                m.add_scaled(c, &acts[b]);
            }
        }
        m
    }

    /// Action of an algebra element on the whole space (row-vector convention).
    pub fn element_full(&self, x: &[Scalar]) -> Matrix {
        let alg = self.algebra();
        let off = self.offsets();
        let n = self.total_dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        let acts = self.basis_actions();
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, t) = (alg.source(b), alg.target(b));
            let blk = acts[b].scale(c);
            for i in 0..blk.rows() {
                for j in 0..blk.cols() {
                    let cur = m.get(off[s] + i, off[t] + j) + blk.get(i, j);
                    m.set(off[s] + i, off[t] + j, cur);
                }
            }
        }
        m
    }

    /// Full-space matrix of a generator action.
    pub fn generator_full(&self, gi: usize) -> Matrix {
        let alg = self.algebra();
        let g = alg.generators()[gi];
        let off = self.offsets();
        let n = self.total_dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        m.set_block(off[alg.source(g)], off[alg.target(g)], &self.0.actions[gi]);
        m
    }

    pub fn zero(algebra: Arc<BasedAlgebra>) -> Module {
        let f = algebra.field();
        let dims = vec![0; algebra.num_vertices()];
        let actions = algebra
            .generators()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Module::new_unchecked(algebra, dims, actions)
    }

    pub fn simple(algebra: Arc<BasedAlgebra>, v: usize) -> Module {
        let f = algebra.field();
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let actions = algebra
            .generators()
            .iter()
            .map(|&g| Matrix::zeros(f, dims[algebra.source(g)], dims[algebra.target(g)]))
            .collect();
        Module::new_unchecked(algebra, dims, actions)
    }

    /// Indecomposable projective `P(v) = e_v A`: basis elements with source `v`.
    pub fn projective(algebra: Arc<BasedAlgebra>, v: usize) -> Module {
        projective_sum(&algebra, &[v])
    }

    /// Indecomposable injective `I(v) = D(A e_v)`, the dual of the projective over the opposite.
    pub fn injective(algebra: Arc<BasedAlgebra>, v: usize) -> Module {
        Module::projective(algebra.opposite(), v).dual()
    }

    /// The regular module `A_A`.
    pub fn regular(algebra: Arc<BasedAlgebra>) -> Module {
        let all: Vec<usize> = (0..algebra.num_vertices()).collect();
        projective_sum(&algebra, &all)
    }

    /// `D(A)` as a right module: the direct sum of all indecomposable injectives.
    pub fn dual_regular(algebra: Arc<BasedAlgebra>) -> Module {
        Module::regular(algebra.opposite()).dual()
    }

    /// The `k`-dual, a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.algebra().opposite();
        let actions = self.0.actions.iter().map(Matrix::transpose).collect();
        Module::new_unchecked(op, self.0.dims.clone(), actions)
    }

    /// Direct sum with canonical inclusions and projections.
    pub fn direct_sum(algebra: &Arc<BasedAlgebra>, parts: &[Module]) -> Module {
        let f = algebra.field();
        if parts.is_empty() {
            return Module::zero(algebra.clone());
        }
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
        let actions = (0..algebra.generators().len())
            .map(|gi| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.0.actions[gi]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Module::new_unchecked(algebra.clone(), dims, actions)
    }

    pub fn direct_sum_with(&self, other: &Module) -> Module {
        Module::direct_sum(self.algebra(), &[self.clone(), other.clone()])
    }

    /// Inclusions of each summand into `direct_sum(parts)`.
    pub fn sum_inclusions(sum: &Module, parts: &[Module]) -> Vec<ModuleHom> {
        let f = sum.field();
        let nv = sum.num_vertices();
        let mut offs = vec![0usize; nv];
        parts
            .iter()
            .map(|p| {
                let blocks = (0..nv)
                    .map(|v| {
                        let mut b = Matrix::zeros(f, p.dim_at(v), sum.dim_at(v));
                        b.set_block(0, offs[v], &Matrix::identity(f, p.dim_at(v)));
                        offs[v] += p.dim_at(v);
                        b
                    })
                    .collect();
                ModuleHom::new_unchecked(p.clone(), sum.clone(), blocks)
            })
            .collect()
    }

    /// Projections of `direct_sum(parts)` onto each summand.
    pub fn sum_projections(sum: &Module, parts: &[Module]) -> Vec<ModuleHom> {
        Module::sum_inclusions(sum, parts)
            .into_iter()
            .zip(parts)
            .map(|(inc, p)| ModuleHom::new_unchecked(sum.clone(), p.clone(), inc.blocks.iter().map(Matrix::transpose).collect()))
            .collect()
    }

    /// Submodule spanned by the rows of `basis[v]` at each vertex (rows must be independent and
    /// the span closed under the action). Returns the module and its inclusion.
    pub fn submodule(&self, basis: Vec<Matrix>) -> Result<(Module, ModuleHom)> {
        let alg = self.algebra().clone();
        let dims: Vec<usize> = basis.iter().map(Matrix::rows).collect();
        let mut actions = Vec::with_capacity(alg.generators().len());
        for (gi, &g) in alg.generators().iter().enumerate() {
            let (s, t) = (alg.source(g), alg.target(g));
            let img = basis[s].mul(&self.0.actions[gi]);
            let coords = if dims[s] == 0 {
                Matrix::zeros(self.field(), 0, dims[t])
            } else if dims[t] == 0 {
                if !img.is_zero() {
                    return Err(Error::InvalidModule("subspace not closed under action".into()));
                }
                Matrix::zeros(self.field(), dims[s], 0)
            } else {
                basis[t]
                    .solve_left_many(&img)
                    .ok_or_else(|| Error::InvalidModule("subspace not closed under action".into()))?
            };
            actions.push(coords);
        }
        let sub = Module::new_unchecked(alg, dims, actions);
        let inc = ModuleHom::new_unchecked(sub.clone(), self.clone(), basis);
        Ok((sub, inc))
    }

    /// Quotient by the submodule whose span at each vertex is given by the rows of `span[v]`
    /// (rows need not be independent). Returns the quotient data with projection and section.
    pub fn quotient(&self, span: &[Matrix]) -> Quotient {
        let spaces: Vec<QuotientSpace> = span
            .iter()
            .enumerate()
            .map(|(v, u)| QuotientSpace::new(self.field(), self.dim_at(v), u))
            .collect();
        let qdims: Vec<usize> = spaces.iter().map(QuotientSpace::dim).collect();
        let proj_blocks: Vec<Matrix> = spaces.iter().map(|q| q.projection().clone()).collect();
        let section_blocks: Vec<Matrix> = spaces.iter().map(QuotientSpace::section).collect();
        let alg = self.algebra().clone();
        let actions = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = (alg.source(g), alg.target(g));
                section_blocks[s].mul(&self.0.actions[gi]).mul(&proj_blocks[t])
            })
            .collect();
        let module = Module::new_unchecked(alg, qdims, actions);
        let projection = ModuleHom::new_unchecked(self.clone(), module.clone(), proj_blocks);
        Quotient {
            module,
            projection,
            section: section_blocks,
        }
    }

    /// Submodule on an invariant set of coordinates (kept indices per vertex).
    pub fn coordinate_submodule(&self, keep: &[Vec<usize>]) -> (Module, ModuleHom) {
        let f = self.field();
        let alg = self.algebra().clone();
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let actions = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = (alg.source(g), alg.target(g));
                self.0.actions[gi].submatrix(&keep[s], &keep[t])
            })
            .collect();
        let sub = Module::new_unchecked(alg, dims, actions);
        let blocks = keep
            .iter()
            .enumerate()
            .map(|(v, k)| {
                let mut m = Matrix::zeros(f, k.len(), self.dim_at(v));
                for (i, &c) in k.iter().enumerate() {
                    m.set(i, c, f.one());
                }
                m
            })
            .collect();
        let inc = ModuleHom::new_unchecked(sub.clone(), self.clone(), blocks);
        (sub, inc)
    }

    /// Radical `M rad A`: at each vertex, the sum of images of the incoming generators.
    pub fn radical_span(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        let f = self.field();
        (0..self.num_vertices())
            .map(|v| {
                let parts: Vec<&Matrix> = alg
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| alg.target(g) == v)
                    .map(|(gi, _)| &self.0.actions[gi])
                    .collect();
                independent_rows(&Matrix::vstack(f, self.dim_at(v), &parts))
            })
            .collect()
    }

    /// Socle: vectors annihilated by every generator.
    pub fn socle_span(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        let f = self.field();
        (0..self.num_vertices())
            .map(|v| {
                let parts: Vec<&Matrix> = alg
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| alg.source(g) == v)
                    .map(|(gi, _)| &self.0.actions[gi])
                    .collect();
                let joined = Matrix::hstack(f, self.dim_at(v), &parts);
                rows_matrix(f, self.dim_at(v), joined.left_kernel_basis())
            })
            .collect()
    }

    pub fn radical(&self) -> (Module, ModuleHom) {
        self.submodule(self.radical_span()).expect("radical is a submodule")
    }

    pub fn top(&self) -> Quotient {
        self.quotient(&self.radical_span())
    }

    pub fn socle(&self) -> (Module, ModuleHom) {
        self.submodule(self.socle_span()).expect("socle is a submodule")
    }

    /// Dimension vector of the top.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_span()
            .iter()
            .enumerate()
            .map(|(v, r)| self.dim_at(v) - r.rows())
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_span().iter().map(Matrix::rows).collect()
    }

    /// Pulls the module back along an algebra map `phi: B -> A` (vertex sets must agree).
    pub fn pullback(&self, phi: &AlgebraMap) -> Result<Module> {
        self.algebra().ensure_same(&phi.target)?;
        let b = phi.source.clone();
        if b.num_vertices() != self.num_vertices() {
            return Err(Error::AlgebraMismatch("vertex sets differ".into()));
        }
        let actions = b
            .generators()
            .iter()
            .map(|&g| {
                let img = phi.image_of_basis(g);
                self.element_block(&img, b.source(g), b.target(g))
            })
            .collect();
        Ok(Module::new_unchecked(b, self.0.dims.clone(), actions))
    }

    /// Re-labels the module as a module over a structurally equal algebra.
    pub fn over(&self, algebra: &Arc<BasedAlgebra>) -> Result<Module> {
        self.algebra().ensure_same(algebra)?;
        Ok(Module::new_unchecked(algebra.clone(), self.0.dims.clone(), self.0.actions.clone()))
    }

    pub fn identity(&self) -> ModuleHom {
        let f = self.field();
        ModuleHom::new_unchecked(
            self.clone(),
            self.clone(),
            self.0.dims.iter().map(|&d| Matrix::identity(f, d)).collect(),
        )
    }

    /// Structural equality of the presentation (same dims and identical matrices).
    pub fn identical(&self, other: &Module) -> bool {
        self.0.dims == other.0.dims && self.0.actions == other.0.actions
    }
}

/// Result of a quotient construction.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: Module,
    pub projection: ModuleHom,
    /// Linear (not module) section of the projection, one block per vertex.
    pub section: Vec<Matrix>,
}

impl Quotient {
    /// Map induced on the quotient by `h: M -> N` vanishing on the submodule.
    pub fn induced(&self, h: &ModuleHom) -> ModuleHom {
        let blocks = self
            .section
            .iter()
            .zip(&h.blocks)
            .map(|(s, b)| s.mul(b))
            .collect();
        ModuleHom::new_unchecked(self.module.clone(), h.target.clone(), blocks)
    }
}

/// Independent rows spanning the row space of `m`.
pub(crate) fn independent_rows(m: &Matrix) -> Matrix {
    let r = m.rref();
    r.matrix.block(0, 0, r.rank, m.cols())
}

pub(crate) fn rows_matrix(f: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
    Matrix::from_rows(f, cols, rows)
}

/// Direct sum of indecomposable projectives `P(v_1) + ... + P(v_k)`. At vertex `w` the basis is
/// the concatenation, over summands `i`, of the algebra basis elements from `v_i` to `w`.
pub fn projective_sum(algebra: &Arc<BasedAlgebra>, vertices: &[usize]) -> Module {
    let f = algebra.field();
    let nv = algebra.num_vertices();
    let layout = ProjLayout::new(algebra, vertices);
    let dims: Vec<usize> = (0..nv).map(|w| layout.coords[w].len()).collect();
    let actions = algebra
        .generators()
        .iter()
        .map(|&g| {
            let (s, t) = (algebra.source(g), algebra.target(g));
            let mut m = Matrix::zeros(f, dims[s], dims[t]);
            for (row, &(i, b)) in layout.coords[s].iter().enumerate() {
                for (k, c) in algebra.product(b, g) {
                    let col = layout.position(t, i, *k);
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    Module::new_unchecked(algebra.clone(), dims, actions)
}

/// Coordinate bookkeeping for a direct sum of indecomposable projectives.
#[derive(Clone, Debug)]
pub struct ProjLayout {
    pub vertices: Vec<usize>,
    /// At each vertex: (summand, algebra basis element) per coordinate.
    pub coords: Vec<Vec<(usize, usize)>>,
    index: Vec<std::collections::HashMap<(usize, usize), usize>>,
}

impl ProjLayout {
    pub fn new(algebra: &BasedAlgebra, vertices: &[usize]) -> ProjLayout {
        let nv = algebra.num_vertices();
        let mut coords = vec![Vec::new(); nv];
        for (i, &v) in vertices.iter().enumerate() {
            for b in algebra.basis_from(v) {
                coords[algebra.target(b)].push((i, b));
            }
        }
        let index = coords
            .iter()
            .map(|c| c.iter().enumerate().map(|(pos, &key)| (key, pos)).collect())
            .collect();
        ProjLayout {
            vertices: vertices.to_vec(),
            coords,
            index,
        }
    }

    pub fn position(&self, w: usize, summand: usize, b: usize) -> usize {
        self.index[w][&(summand, b)]
    }

    /// Coordinate vector at vertex `w` of an element of summand `i` (an element of `e_{v_i} A e_w`).
    pub fn embed(&self, algebra: &BasedAlgebra, w: usize, summand: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![algebra.field().zero(); self.coords[w].len()];
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.position(w, summand, b)] = c.clone();
            }
        }
        out
    }

    /// Splits a coordinate vector at vertex `w` into algebra elements, one per summand.
    pub fn split(&self, algebra: &BasedAlgebra, w: usize, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out = vec![algebra.zero_element(); self.vertices.len()];
        for (pos, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (i, b) = self.coords[w][pos];
                out[i][b] = c.clone();
            }
        }
        out
    }

    /// Coordinate of the generator `e_{v_i}` of summand `i` (at vertex `v_i`).
    pub fn generator_position(&self, algebra: &BasedAlgebra, i: usize) -> usize {
        let v = self.vertices[i];
        self.position(v, i, algebra.idempotent(v))
    }
}

/// A homomorphism of right modules: one matrix per vertex, acting on row vectors.
#[derive(Clone)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub blocks: Vec<Matrix>,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom {:?} -> {:?} {:?}", self.source.dims(), self.target.dims(), self.blocks)
    }
}

impl ModuleHom {
    /// Builds a hom and checks that it commutes with every generator.
    pub fn new(source: Module, target: Module, blocks: Vec<Matrix>) -> Result<ModuleHom> {
        source.algebra().ensure_same(target.algebra())?;
        let h = ModuleHom::new_unchecked(source, target, blocks);
        if !h.commutes() {
            return Err(Error::InvalidModule("map does not commute with the action".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, blocks: Vec<Matrix>) -> ModuleHom {
        ModuleHom {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleHom {
        let f = source.field();
        let blocks = (0..source.num_vertices())
            .map(|v| Matrix::zeros(f, source.dim_at(v), target.dim_at(v)))
            .collect();
        ModuleHom::new_unchecked(source.clone(), target.clone(), blocks)
    }

    pub fn commutes(&self) -> bool {
        let alg = self.source.algebra();
        for (gi, &g) in alg.generators().iter().enumerate() {
            let (s, t) = (alg.source(g), alg.target(g));
            let lhs = self.source.actions()[gi].mul(&self.blocks[t]);
            let rhs = self.blocks[s].mul(&self.target.actions()[gi]);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &ModuleHom) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&then.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleHom::new_unchecked(self.source.clone(), then.target.clone(), blocks)
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &Scalar) -> ModuleHom {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && b.is_invertible())
    }

    pub fn inverse(&self) -> Option<ModuleHom> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                if b.rows() == 0 && b.cols() == 0 {
                    Some(b.clone())
                } else {
                    b.inverse()
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleHom::new_unchecked(self.target.clone(), self.source.clone(), blocks))
    }

    /// Dual map `D N -> D M` between modules over the opposite algebra.
    pub fn dual(&self) -> ModuleHom {
        ModuleHom::new_unchecked(
            self.target.dual(),
            self.source.dual(),
            self.blocks.iter().map(Matrix::transpose).collect(),
        )
    }

    /// Kernel as a submodule of the source, with its inclusion.
    pub fn kernel(&self) -> (Module, ModuleHom) {
        let f = self.source.field();
        let basis = self
            .blocks
            .iter()
            .map(|b| rows_matrix(f, b.rows(), b.left_kernel_basis()))
            .collect();
        self.source.submodule(basis).expect("kernel is a submodule")
    }

    /// Image as a submodule of the target, with its inclusion.
    pub fn image(&self) -> (Module, ModuleHom) {
        let basis = self.blocks.iter().map(independent_rows).collect();
        self.target.submodule(basis).expect("image is a submodule")
    }

    pub fn cokernel(&self) -> Quotient {
        self.target.quotient(&self.blocks)
    }

    /// Concatenated full matrix (block diagonal).
    pub fn full_matrix(&self) -> Matrix {
        let parts: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(self.source.field(), &parts)
    }

    /// Flattened entries (vertex blocks row-major, concatenated).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks
            .iter()
            .flat_map(|b| (0..b.rows()).flat_map(move |i| b.row(i).to_vec()))
            .collect()
    }

    /// Map into a direct sum from maps into each summand.
    pub fn into_sum(source: &Module, sum: &Module, parts: &[ModuleHom]) -> ModuleHom {
        let f = source.field();
        let blocks = (0..source.num_vertices())
            .map(|v| {
                let ps: Vec<&Matrix> = parts.iter().map(|p| &p.blocks[v]).collect();
                Matrix::hstack(f, source.dim_at(v), &ps)
            })
            .collect();
        ModuleHom::new_unchecked(source.clone(), sum.clone(), blocks)
    }

    /// Map out of a direct sum from maps out of each summand.
    pub fn from_sum(sum: &Module, target: &Module, parts: &[ModuleHom]) -> ModuleHom {
        let f = sum.field();
        let blocks = (0..sum.num_vertices())
            .map(|v| {
                let ps: Vec<&Matrix> = parts.iter().map(|p| &p.blocks[v]).collect();
                Matrix::vstack(f, target.dim_at(v), &ps)
            })
            .collect();
        ModuleHom::new_unchecked(sum.clone(), target.clone(), blocks)
    }

    /// Block-diagonal map between direct sums.
    pub fn direct_sum(source: &Module, target: &Module, parts: &[ModuleHom]) -> ModuleHom {
        let f = source.field();
        let blocks = (0..source.num_vertices())
            .map(|v| {
                let ps: Vec<&Matrix> = parts.iter().map(|p| &p.blocks[v]).collect();
                Matrix::block_diag(f, &ps)
            })
            .collect();
        ModuleHom::new_unchecked(source.clone(), target.clone(), blocks)
    }
}

/// The map `P -> M` out of a sum of indecomposable projectives sending the generator of the
/// `i`-th summand to `gens[i]` (a vector in `M` at that summand's vertex).
pub fn hom_from_projective_sum(p: &Module, layout: &ProjLayout, gens: &[Vec<Scalar>], m: &Module) -> ModuleHom {
    let alg = m.algebra();
    let f = m.field();
    let acts = m.basis_actions();
    let blocks = (0..m.num_vertices())
        .map(|w| {
            let rows = layout.coords[w]
                .iter()
                .map(|&(i, b)| acts[b].vec_mul(&gens[i]))
                .collect();
            let _ = alg;
            Matrix::from_rows(f, m.dim_at(w), rows)
        })
        .collect();
    ModuleHom::new_unchecked(p.clone(), m.clone(), blocks)
}

/// Homology `ker g / im f` of `A --f--> B --g--> C` (requires `f` then `g` to vanish).
pub fn homology(f: &ModuleHom, g: &ModuleHom) -> Quotient {
    let (k, inc) = g.kernel();
    let span: Vec<Matrix> = (0..k.num_vertices())
        .map(|v| {
            let img = &f.blocks[v];
            if img.rows() == 0 || k.dim_at(v) == 0 {
                Matrix::zeros(k.field(), 0, k.dim_at(v))
            } else {
                inc.blocks[v]
                    .solve_left_many(img)
                    .expect("image lies in the kernel")
            }
        })
        .collect();
    k.quotient(&span)
}
