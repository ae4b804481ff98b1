use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use super::quiver::{Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactfield::{EchelonBasis, Field, Matrix, Scalar};

/// Sparse vector: (basis index, nonzero coefficient), sorted by index.
pub type Sparse = Vec<(usize, Scalar)>;

/// One product of generators used to express basis elements. `parent` is the word with the last
/// generator removed (absent for single generators).
#[derive(Clone, Debug)]
pub struct Word {
    pub parent: Option<usize>,
    /// Position in the generator list.
    pub generator: usize,
    pub source: usize,
    pub target: usize,
}

/// A finite-dimensional basic algebra given by a basis of idempotents and radical elements.
///
/// Every basis element `b` is homogeneous: `e_s b e_t = b` for its source `s` and target `t`.
/// The non-idempotent basis elements span the Jacobson radical.
pub struct BasedAlgebra {
    field: Field,
    vertex_labels: Vec<String>,
    labels: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    idempotents: Vec<usize>,
    table: Vec<Vec<Sparse>>,
    generators: Vec<usize>,
    words: Vec<Word>,
    /// For each basis element, its expression as a combination of words (empty for idempotents).
    expressions: Vec<Vec<(usize, Scalar)>>,
    presentation: Option<(Quiver, Vec<Relation>)>,
    fingerprint: u64,
    opposite: OnceLock<Arc<BasedAlgebra>>,
    original: Weak<BasedAlgebra>,
}

impl fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasedAlgebra")
            .field("field", &self.field)
            .field("vertices", &self.vertex_labels)
            .field("dim", &self.dim())
            .finish()
    }
}

/// Raw data for constructing a [`BasedAlgebra`].
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: Field,
    pub vertex_labels: Vec<String>,
    pub labels: Vec<String>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// Basis index of `e_v` for each vertex `v`.
    pub idempotents: Vec<usize>,
    /// `table[i][j]` expresses `b_i b_j` in the basis.
    pub table: Vec<Vec<Sparse>>,
    pub presentation: Option<(Quiver, Vec<Relation>)>,
}

impl BasedAlgebra {
    /// Validates the data and derives generators and word expressions.
    pub fn new(data: AlgebraData) -> Result<Arc<BasedAlgebra>> {
        let alg = Self::build(data, Weak::new())?;
        Ok(Arc::new(alg))
    }

    fn build(data: AlgebraData, original: Weak<BasedAlgebra>) -> Result<BasedAlgebra> {
        let AlgebraData {
            field,
            vertex_labels,
            labels,
            source,
            target,
            idempotents,
            table,
            presentation,
        } = data;
        let n = labels.len();
        let bad = |m: String| Err(Error::InvalidAlgebra(m));
        if source.len() != n || target.len() != n || table.len() != n {
            return bad("basis metadata has inconsistent lengths".into());
        }
        if idempotents.len() != vertex_labels.len() {
            return bad("one idempotent per vertex required".into());
        }
        for (v, &e) in idempotents.iter().enumerate() {
            if e >= n || source[e] != v || target[e] != v {
                return bad(format!("idempotent of vertex {} is misplaced", vertex_labels[v]));
            }
        }
        let mut alg = BasedAlgebra {
            field,
            vertex_labels,
            labels,
            source,
            target,
            idempotents,
            table,
            generators: Vec::new(),
            words: Vec::new(),
            expressions: Vec::new(),
            presentation,
            fingerprint: 0,
            opposite: OnceLock::new(),
            original,
        };
        alg.check_idempotents()?;
        alg.fingerprint = alg.compute_fingerprint();
        alg.derive_generators()?;
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|v| v == label)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn source(&self, b: usize) -> usize {
        self.source[b]
    }

    pub fn target(&self, b: usize) -> usize {
        self.target[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, b: usize) -> bool {
        self.idempotents[self.source[b]] == b
    }

    /// Generator basis indices (arrows).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn expression(&self, b: usize) -> &[(usize, Scalar)] {
        &self.expressions[b]
    }

    pub fn presentation(&self) -> Option<&(Quiver, Vec<Relation>)> {
        self.presentation.as_ref()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Structure constants of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    /// Basis elements `b` with the given source and target.
    pub fn basis_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.source[b] == s && self.target[b] == t)
            .collect()
    }

    /// Basis elements with the given source, in basis order.
    pub fn basis_from(&self, s: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.source[b] == s).collect()
    }

    /// Basis elements with the given target, in basis order.
    pub fn basis_to(&self, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.target[b] == t).collect()
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_element(&self, b: usize) -> Vec<Scalar> {
        let mut v = self.zero_element();
        v[b] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = self.zero_element();
        for &e in &self.idempotents {
            v[e] = self.field.one();
        }
        v
    }

    /// Product of two elements given in basis coordinates.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.target[i] != self.source[j] {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of a basis element with an element (`b_i * y`).
    pub fn mul_basis_left(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() || self.target[i] != self.source[j] {
                continue;
            }
            for (k, c) in &self.table[i][j] {
                out[*k] += &(b * c);
            }
        }
        out
    }

    /// Product of an element with a basis element (`x * b_j`).
    pub fn mul_basis_right(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() || self.target[i] != self.source[j] {
                continue;
            }
            for (k, c) in &self.table[i][j] {
                out[*k] += &(a * c);
            }
        }
        out
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.vertex_labels.hash(&mut h);
        self.labels.hash(&mut h);
        self.source.hash(&mut h);
        self.target.hash(&mut h);
        self.idempotents.hash(&mut h);
        self.table.hash(&mut h);
        h.finish()
    }

    /// Structural equality (pointer equality short-circuits).
    pub fn same_as(self: &Arc<Self>, other: &Arc<BasedAlgebra>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.labels == other.labels
                && self.source == other.source
                && self.target == other.target
                && self.table == other.table)
    }

    pub fn ensure_same(self: &Arc<Self>, other: &Arc<BasedAlgebra>) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                "operands live over different algebras".into(),
            ))
        }
    }

    fn check_idempotents(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        for (v, &e) in self.idempotents.iter().enumerate() {
            for b in 0..n {
                let left = &self.table[e][b];
                let expect_left: Sparse = if self.source[b] == v {
                    vec![(b, f.one())]
                } else {
                    Vec::new()
                };
                if *left != expect_left {
                    return Err(Error::InvalidAlgebra(format!(
                        "e_{} * {} is not as required by homogeneity",
                        self.vertex_labels[v], self.labels[b]
                    )));
                }
                let right = &self.table[b][e];
                let expect_right: Sparse = if self.target[b] == v {
                    vec![(b, f.one())]
                } else {
                    Vec::new()
                };
                if *right != expect_right {
                    return Err(Error::InvalidAlgebra(format!(
                        "{} * e_{} is not as required by homogeneity",
                        self.labels[b], self.vertex_labels[v]
                    )));
                }
            }
        }
        // products must be homogeneous
        for i in 0..n {
            for j in 0..n {
                let entries = &self.table[i][j];
                if self.target[i] != self.source[j] {
                    if !entries.is_empty() {
                        return Err(Error::InvalidAlgebra(format!(
                            "non-composable product {} * {} is nonzero",
                            self.labels[i], self.labels[j]
                        )));
                    }
                    continue;
                }
                for (k, c) in entries {
                    if c.is_zero() {
                        return Err(Error::InvalidAlgebra("stored zero coefficient".into()));
                    }
                    if self.source[*k] != self.source[i] || self.target[*k] != self.target[j] {
                        return Err(Error::InvalidAlgebra(format!(
                            "product {} * {} is not homogeneous",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Chooses generators (basis elements independent modulo rad^2) and expresses every
    /// radical basis element through products of generators.
    fn derive_generators(&mut self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        let rad: Vec<usize> = (0..n).filter(|&b| !self.is_idempotent(b)).collect();
        // rad must be a two-sided ideal
        for &r in &rad {
            for b in 0..n {
                for (k, _) in self.table[r][b].iter().chain(self.table[b][r].iter()) {
                    if self.is_idempotent(*k) {
                        return Err(Error::InvalidAlgebra(format!(
                            "radical is not an ideal: product with {} reaches an idempotent",
                            self.labels[r]
                        )));
                    }
                }
            }
        }
        let mut rad2 = EchelonBasis::new(f, n);
        for &a in &rad {
            for &b in &rad {
                if self.target[a] != self.source[b] {
                    continue;
                }
                let v = self.sparse_to_dense(&self.table[a][b]);
                rad2.insert(&v);
            }
        }
        let mut modulo = rad2.clone();
        let mut generators = Vec::new();
        for &r in &rad {
            if modulo.insert(&self.basis_element(r)) {
                generators.push(r);
            }
        }
        // breadth-first words
        let mut words = Vec::new();
        let mut elements: Vec<Vec<Scalar>> = Vec::new();
        let mut span = EchelonBasis::new(f, n);
        let mut frontier = Vec::new();
        for (gi, &g) in generators.iter().enumerate() {
            let v = self.basis_element(g);
            if span.insert(&v) {
                words.push(Word {
                    parent: None,
                    generator: gi,
                    source: self.source[g],
                    target: self.target[g],
                });
                elements.push(v);
                frontier.push(words.len() - 1);
            }
        }
        let mut depth = 1;
        while !frontier.is_empty() {
            depth += 1;
            if depth > n + 1 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            let mut next = Vec::new();
            for &w in &frontier {
                for (gi, &g) in generators.iter().enumerate() {
                    if words[w].target != self.source[g] {
                        continue;
                    }
                    let v = self.mul_basis_right(&elements[w], g);
                    if span.insert(&v) {
                        words.push(Word {
                            parent: Some(w),
                            generator: gi,
                            source: words[w].source,
                            target: self.target[g],
                        });
                        elements.push(v);
                        next.push(words.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        if span.rank() != rad.len() {
            return Err(Error::InvalidAlgebra(format!(
                "generators span {} of {} radical dimensions",
                span.rank(),
                rad.len()
            )));
        }
        // nilpotency: rad^(depth) = 0 follows if products of `depth` generators vanish; check
        // that the radical is nilpotent by powering the span
        self.check_nilpotent(&rad)?;
        let wm = Matrix::from_rows(f, n, elements);
        let targets = Matrix::from_rows(f, n, rad.iter().map(|&r| self.basis_element(r)).collect());
        let coords = wm
            .solve_left_many(&targets)
            .ok_or_else(|| Error::InvalidAlgebra("radical not spanned by words".into()))?;
        let mut expressions = vec![Vec::new(); n];
        for (row, &r) in rad.iter().enumerate() {
            expressions[r] = (0..words.len())
                .filter_map(|w| {
                    let c = coords.get(row, w);
                    (!c.is_zero()).then(|| (w, c.clone()))
                })
                .collect();
        }
        self.generators = generators;
        self.words = words;
        self.expressions = expressions;
        Ok(())
    }

    fn check_nilpotent(&self, rad: &[usize]) -> Result<()> {
        let n = self.dim();
        // current = basis of rad^k as dense vectors
        let mut current: Vec<Vec<Scalar>> = rad.iter().map(|&r| self.basis_element(r)).collect();
        for _ in 0..=n {
            if current.is_empty() {
                return Ok(());
            }
            let mut next = EchelonBasis::new(self.field, n);
            for x in &current {
                for &r in rad {
                    next.insert(&self.mul_basis_right(x, r));
                }
            }
            current = next.rows().to_vec();
        }
        Err(Error::InvalidAlgebra("radical is not nilpotent".into()))
    }

    pub fn sparse_to_dense(&self, s: &Sparse) -> Vec<Scalar> {
        let mut v = self.zero_element();
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    /// Verifies every defining identity exhaustively: idempotent laws, homogeneity and
    /// associativity on all basis triples. Returns the first violated identity.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        self.check_idempotents().map_err(|e| e.to_string())?;
        let n = self.dim();
        let one = self.one();
        for b in 0..n {
            let bv = self.basis_element(b);
            if self.mul(&one, &bv) != bv || self.mul(&bv, &one) != bv {
                return Err(format!("sum of idempotents is not a unit on {}", self.labels[b]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.target[i] != self.source[j] {
                    continue;
                }
                let ij = self.sparse_to_dense(&self.table[i][j]);
                for k in 0..n {
                    if self.target[j] != self.source[k] {
                        continue;
                    }
                    let left = self.mul_basis_right(&ij, k);
                    let jk = self.sparse_to_dense(&self.table[j][k]);
                    let right = self.mul_basis_left(i, &jk);
                    if left != right {
                        return Err(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra: same basis, reversed products, swapped endpoints.
    /// `a.opposite().opposite()` returns `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<BasedAlgebra> {
        if let Some(orig) = self.original.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let n = self.dim();
                let table = (0..n)
                    .map(|i| (0..n).map(|j| self.table[j][i].clone()).collect())
                    .collect();
                let presentation = self.presentation.as_ref().map(|(q, rels)| {
                    let rq = q.reversed();
                    let rr = rels
                        .iter()
                        .map(|r| Relation {
                            terms: r
                                .terms
                                .iter()
                                .map(|(c, p)| (c.clone(), p.iter().rev().cloned().collect()))
                                .collect(),
                        })
                        .collect();
                    (rq, rr)
                });
                let data = AlgebraData {
                    field: self.field,
                    vertex_labels: self.vertex_labels.clone(),
                    labels: self.labels.clone(),
                    source: self.target.clone(),
                    target: self.source.clone(),
                    idempotents: self.idempotents.clone(),
                    table,
                    presentation,
                };
                Arc::new(
                    Self::build(data, Arc::downgrade(self))
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    /// Dimension of `e_s (rad/rad^2) e_t` for all pairs: the quiver of the algebra.
    /// Arrows are labelled by the chosen generator basis elements.
    pub fn quiver_of(&self) -> Quiver {
        Quiver {
            vertices: self.vertex_labels.clone(),
            arrows: self
                .generators
                .iter()
                .map(|&g| Arrow {
                    label: self.labels[g].clone(),
                    source: self.source[g],
                    target: self.target[g],
                })
                .collect(),
        }
    }

    /// Dimension of the span of paths of each radical layer: `dim rad^k / rad^(k+1)`.
    pub fn radical_layers(&self) -> Vec<usize> {
        let n = self.dim();
        let rad: Vec<usize> = (0..n).filter(|&b| !self.is_idempotent(b)).collect();
        let mut layers = vec![self.num_vertices()];
        let mut current: Vec<Vec<Scalar>> = rad.iter().map(|&r| self.basis_element(r)).collect();
        while !current.is_empty() {
            let mut next = EchelonBasis::new(self.field, n);
            for x in &current {
                for &r in &rad {
                    next.insert(&self.mul_basis_right(x, r));
                }
            }
            layers.push(current.len() - next.rank());
            current = next.rows().to_vec();
        }
        layers
    }

    /// `(label, source label, target label)` for every basis element.
    pub fn basis_summary(&self) -> Vec<(String, String, String)> {
        (0..self.dim())
            .map(|b| {
                (
                    self.labels[b].clone(),
                    self.vertex_labels[self.source[b]].clone(),
                    self.vertex_labels[self.target[b]].clone(),
                )
            })
            .collect()
    }
}

/// A linear map between algebras, stored as a matrix whose rows are images of basis elements.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: Arc<BasedAlgebra>,
    pub target: Arc<BasedAlgebra>,
    pub matrix: Matrix,
}

impl AlgebraMap {
    /// The linear map determined by where the vertices and the generators go: `e_v` goes to
    /// `e_{vertex_map[v]}` and the `i`-th generator to `images[i]`. Products of generators are
    /// extended multiplicatively; the result is checked with [`AlgebraMap::check`].
    pub fn from_generator_images(
        source: &Arc<BasedAlgebra>,
        target: &Arc<BasedAlgebra>,
        vertex_map: &[usize],
        images: &[Vec<Scalar>],
    ) -> Result<AlgebraMap> {
        let f = source.field();
        if vertex_map.len() != source.num_vertices() || images.len() != source.generators().len() {
            return Err(Error::AlgebraMismatch("vertex or generator count differs".into()));
        }
        let word_images: Vec<Vec<Scalar>> = source.words().iter().fold(Vec::new(), |mut acc, w| {
            let g = images[w.generator].clone();
            let img = match w.parent {
                None => g,
                Some(p) => target.mul(&acc[p], &g),
            };
            acc.push(img);
            acc
        });
        let mut rows = Vec::with_capacity(source.dim());
        for b in 0..source.dim() {
            let row = if source.is_idempotent(b) {
                target.basis_element(target.idempotent(vertex_map[source.source(b)]))
            } else {
                let mut v = target.zero_element();
                for (w, c) in source.expression(b) {
                    for (x, y) in v.iter_mut().zip(&word_images[*w]) {
                        *x += &(c * y);
                    }
                }
                v
            };
            rows.push(row);
        }
        let map = AlgebraMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::from_rows(f, target.dim(), rows),
        };
        map.check().map_err(Error::AlgebraMismatch)?;
        Ok(map)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.vec_mul(x)
    }

    pub fn image_of_basis(&self, b: usize) -> Vec<Scalar> {
        self.matrix.row_vec(b)
    }

    pub fn compose(&self, then: &AlgebraMap) -> AlgebraMap {
        AlgebraMap {
            source: self.source.clone(),
            target: then.target.clone(),
            matrix: self.matrix.mul(&then.matrix),
        }
    }

    /// Checks that the map is multiplicative and preserves the unit.
    pub fn check(&self) -> std::result::Result<(), String> {
        let s = &self.source;
        let t = &self.target;
        if self.apply(&s.one()) != t.one() {
            return Err("unit not preserved".into());
        }
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let prod = s.sparse_to_dense(s.product(i, j));
                let lhs = self.apply(&prod);
                let rhs = t.mul(&self.image_of_basis(i), &self.image_of_basis(j));
                if lhs != rhs {
                    return Err(format!(
                        "not multiplicative on ({}, {})",
                        s.labels()[i],
                        s.labels()[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// The inverse map when this map is bijective.
    pub fn inverse(&self) -> Option<AlgebraMap> {
        Some(AlgebraMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source.same_as(&self.target)
            && self.matrix == Matrix::identity(self.source.field(), self.source.dim())
    }
}
