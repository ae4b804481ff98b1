use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{Module, ModuleHom};
use crate::error::Result;
use crate::exactfield::{Field, Matrix, Scalar};

/// A basis of `Hom_A(M, N)`.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleHom>> {
    m.algebra().ensure_same(n.algebra())?;
    let f = m.field();
    let alg = m.algebra();
    let nv = m.num_vertices();
    // unknown offsets: block v is dims_m[v] x dims_n[v], row-major
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dim_at(v) * n.dim_at(v);
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for (gi, &g) in alg.generators().iter().enumerate() {
        let (s, t) = (alg.source(g), alg.target(g));
        let am = &m.actions()[gi];
        let an = &n.actions()[gi];
        // (A_M F_t - F_s A_N)[i][j] = 0
        for i in 0..m.dim_at(s) {
            for j in 0..n.dim_at(t) {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m.dim_at(t) {
                    let c = am.get(i, k);
                    if !c.is_zero() {
                        row[off[t] + k * n.dim_at(t) + j] += c;
                    }
                }
                for k in 0..n.dim_at(s) {
                    let c = an.get(k, j);
                    if !c.is_zero() {
                        row[off[s] + i * n.dim_at(s) + k] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    let sols = if eqs.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![f.zero(); unknowns];
                e[i] = f.one();
                e
            })
            .collect()
    } else {
        Matrix::from_rows(f, unknowns, eqs).kernel_basis()
    };
    Ok(sols
        .into_iter()
        .map(|x| unflatten(m, n, &x))
        .collect())
}

/// Rebuilds a hom from its flattened entries (see [`ModuleHom::flatten`]).
pub fn unflatten(m: &Module, n: &Module, x: &[Scalar]) -> ModuleHom {
    let f = m.field();
    let mut pos = 0;
    let blocks = (0..m.num_vertices())
        .map(|v| {
            let (r, c) = (m.dim_at(v), n.dim_at(v));
            let mut b = Matrix::zeros(f, r, c);
            for i in 0..r {
                for j in 0..c {
                    b.set(i, j, x[pos].clone());
                    pos += 1;
                }
            }
            b
        })
        .collect();
    ModuleHom::new_unchecked(m.clone(), n.clone(), blocks)
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Coordinates of homs with respect to a fixed basis of a hom space.
pub struct HomCoordinates {
    basis: Vec<ModuleHom>,
    matrix: Matrix,
}

impl HomCoordinates {
    pub fn new(basis: Vec<ModuleHom>, source: &Module, target: &Module) -> HomCoordinates {
        let f = source.field();
        let width: usize = (0..source.num_vertices())
            .map(|v| source.dim_at(v) * target.dim_at(v))
            .sum();
        let rows = basis.iter().map(ModuleHom::flatten).collect();
        HomCoordinates {
            matrix: Matrix::from_rows(f, width, rows),
            basis,
        }
    }

    pub fn basis(&self) -> &[ModuleHom] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `h` (which must lie in the span).
    pub fn coordinates(&self, h: &ModuleHom) -> Vec<Scalar> {
        self.coordinates_flat(&h.flatten())
    }

    pub fn coordinates_flat(&self, x: &[Scalar]) -> Vec<Scalar> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        self.matrix
            .solve_left(x)
            .expect("hom lies in the span of the basis")
    }

    /// Coordinates of many flattened homs at once (one per row).
    pub fn coordinates_many(&self, rows: &Matrix) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(rows.field(), rows.rows(), 0);
        }
        if rows.rows() == 0 {
            return Matrix::zeros(rows.field(), 0, self.basis.len());
        }
        self.matrix
            .solve_left_many(rows)
            .expect("homs lie in the span of the basis")
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> ModuleHom {
        let mut acc = self.basis[0].scale(&coeffs[0]);
        for (h, c) in self.basis.iter().zip(coeffs).skip(1) {
            if !c.is_zero() {
                acc = acc.add(&h.scale(c));
            }
        }
        acc
    }
}

pub(crate) fn random_scalar<R: Rng>(f: Field, rng: &mut R) -> Scalar {
    match f {
        Field::Prime(p) => f.from_i64(rng.gen_range(0..p) as i64),
        Field::Rational => f.from_i64(rng.gen_range(-60..=60)),
    }
}

pub(crate) fn seeded_rng(m: &Module, salt: u64) -> ChaCha8Rng {
    let mut seed = salt ^ m.algebra().fingerprint();
    for &d in m.dims() {
        seed = seed.wrapping_mul(1_000_003).wrapping_add(d as u64);
    }
    ChaCha8Rng::seed_from_u64(seed)
}

/// Searches for an isomorphism `M -> N`. Each random combination of a hom basis is invertible
/// with high probability when the modules are isomorphic, so repeated failures mean they are not
/// (the error probability is at most `(dim M / |sample set|)^trials`).
pub fn find_isomorphism(m: &Module, n: &Module) -> Result<Option<ModuleHom>> {
    m.algebra().ensure_same(n.algebra())?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleHom::zero(m, n)));
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    for h in &basis {
        if h.is_isomorphism() {
            return Ok(Some(h.clone()));
        }
    }
    let coords = HomCoordinates::new(basis, m, n);
    let mut rng = seeded_rng(m, 0x15);
    for _ in 0..24 {
        let c: Vec<Scalar> = (0..coords.dim()).map(|_| random_scalar(m.field(), &mut rng)).collect();
        let h = coords.combination(&c);
        if h.is_isomorphism() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// The endomorphism algebra with its trace-form radical.
pub struct EndStructure {
    pub coords: HomCoordinates,
    /// Rows span the radical in hom coordinates.
    pub radical: Vec<Vec<Scalar>>,
}

impl EndStructure {
    pub fn new(m: &Module) -> Result<EndStructure> {
        let basis = hom_basis(m, m)?;
        let coords = HomCoordinates::new(basis, m, m);
        let radical = trace_radical(m.field(), coords.basis());
        Ok(EndStructure { coords, radical })
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    /// Dimension of `End(M) / rad End(M)`.
    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical.len()
    }

    /// Radical elements as homs.
    pub fn radical_homs(&self) -> Vec<ModuleHom> {
        self.radical.iter().map(|c| self.coords.combination(c)).collect()
    }
}

fn trace(h: &ModuleHom) -> Scalar {
    let f = h.source.field();
    let mut t = f.zero();
    for b in &h.blocks {
        for i in 0..b.rows() {
            t += b.get(i, i);
        }
    }
    t
}

/// Radical of the bilinear form `(x, y) -> tr(x y)`. For fields whose characteristic exceeds the
/// module dimension this is the Jacobson radical of the endomorphism algebra.
fn trace_radical(f: Field, basis: &[ModuleHom]) -> Vec<Vec<Scalar>> {
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }
    let gram: Vec<Vec<Scalar>> = (0..r)
        .map(|i| (0..r).map(|j| trace(&basis[i].then(&basis[j]))).collect())
        .collect();
    Matrix::from_rows(f, r, gram).left_kernel_basis()
}
