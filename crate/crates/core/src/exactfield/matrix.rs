use std::fmt;

use super::scalar::{mod_inv, Field, Scalar};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            field,
            rows: r,
            cols,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    /// A single row vector.
    pub fn row_vector(field: Field, v: Vec<Scalar>) -> Matrix {
        let n = v.len();
        Matrix::from_rows(field, n, vec![v])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_list(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        if let Field::Prime(p) = self.field {
            let a = self.residues();
            let b = rhs.residues();
            let mut acc = vec![0u64; rhs.cols];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|x| *x = 0);
                for k in 0..self.cols {
                    let x = a[i * self.cols + k];
                    if x == 0 {
                        continue;
                    }
                    let brow = &b[k * rhs.cols..(k + 1) * rhs.cols];
                    for (j, y) in brow.iter().enumerate() {
                        acc[j] = (acc[j] + x * y) % p;
                    }
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] = Scalar::Mod {
                        v: acc[j] as u32,
                        p: p as u32,
                    };
                }
            }
            return out;
        }
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = rhs.get(k, j);
                    if !v.is_zero() {
                        let cur = out.get(i, j) + &(x * v);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![self.field.zero(); self.cols];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let y = self.get(k, j);
                if !y.is_zero() {
                    out[j] += &(x * y);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (x, y) in self.row(r).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += &(x * y);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    /// `self += s * rhs`
    pub fn add_scaled(&mut self, s: &Scalar, rhs: &Matrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn hstack(field: Field, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            m.set_block(0, c0, p);
            c0 += p.cols;
        }
        m
    }

    pub fn block_diag(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.set_block(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    fn residues(&self) -> Vec<u64> {
        self.data
            .iter()
            .map(|x| x.residue().expect("prime field element"))
            .collect()
    }

    fn from_residues(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        Matrix {
            field: Field::Prime(p),
            rows,
            cols,
            data: data
                .into_iter()
                .map(|v| Scalar::Mod {
                    v: v as u32,
                    p: p as u32,
                })
                .collect(),
        }
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        match self.field {
            Field::Prime(p) => {
                let mut data = self.residues();
                let pivots = rref_mod(&mut data, self.rows, self.cols, p);
                let rank = pivots.len();
                Rref {
                    matrix: Matrix::from_residues(p, self.rows, self.cols, data),
                    pivots,
                    rank,
                }
            }
            Field::Rational => {
                let mut m = self.clone();
                let pivots = m.rref_generic();
                let rank = pivots.len();
                Rref {
                    matrix: m,
                    pivots,
                    rank,
                }
            }
        }
    }

    fn rref_generic(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(r) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, r);
            let inv = self.get(pr, c).inv();
            for j in c..self.cols {
                let v = self.get(pr, j) * &inv;
                self.set(pr, j, v);
            }
            for r2 in 0..self.rows {
                if r2 == pr {
                    continue;
                }
                let f = self.get(r2, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let t = self.get(pr, j);
                    if t.is_zero() {
                        continue;
                    }
                    let v = self.get(r2, j) - &(&f * t);
                    self.set(r2, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}` (column vectors).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -matrix.get(i, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{x : x * self = 0}` (row vectors).
    pub fn left_kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.transpose().kernel_basis()
    }

    /// Some `x` with `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let f = self.field;
        let aug = Matrix::hstack(
            f,
            self.rows,
            &[self, &Matrix::from_rows(f, 1, b.iter().map(|x| vec![x.clone()]).collect())],
        );
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Some row vector `x` with `x * self = b`.
    pub fn solve_left(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.transpose().solve(b)
    }

    /// Solves `X * self = B` for all rows of `B` at once.
    pub fn solve_left_many(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.cols, self.cols);
        let f = self.field;
        // [self^T | B^T] reduced once.
        let aug = Matrix::hstack(f, self.cols, &[&self.transpose(), &b.transpose()]);
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.rows) {
            return None;
        }
        let mut x = Matrix::zeros(f, b.rows, self.rows);
        for (i, &pc) in pivots.iter().enumerate() {
            for k in 0..b.rows {
                x.set(k, pc, matrix.get(i, self.rows + k).clone());
            }
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return f.zero();
            };
            if r != c {
                m.swap_rows(r, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            let inv = piv.inv();
            for r2 in c + 1..n {
                let factor = m.get(r2, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(r2, j) - &(&factor * m.get(c, j));
                    m.set(r2, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }

    /// Characteristic polynomial `det(xI - self)` as coefficients, lowest degree first.
    /// Hessenberg reduction followed by the standard recurrence; valid over any field.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity
        for c in 0..n.saturating_sub(2) {
            let Some(r) = (c + 1..n).find(|&r| !h.get(r, c).is_zero()) else {
                continue;
            };
            if r != c + 1 {
                h.swap_rows(r, c + 1);
                for i in 0..n {
                    h.data.swap(i * n + r, i * n + c + 1);
                }
            }
            let inv = h.get(c + 1, c).inv();
            for r2 in c + 2..n {
                let u = h.get(r2, c) * &inv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(r2, j) - &(&u * h.get(c + 1, j));
                    h.set(r2, j, v);
                }
                for i in 0..n {
                    let v = h.get(i, c + 1) + &(&u * h.get(i, r2));
                    h.set(i, c + 1, v);
                }
            }
        }
        // p[k] = char poly of leading k x k block
        let mut p: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for k in 1..=n {
            let hk = h.get(k - 1, k - 1).clone();
            // (x - h_kk) p_{k-1}
            let prev = &p[k - 1];
            let mut next = vec![f.zero(); k + 1];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= &(c * &hk);
            }
            let mut prod = f.one();
            for i in 1..k {
                prod *= h.get(k - i, k - i - 1);
                if prod.is_zero() {
                    break;
                }
                let coef = &prod * h.get(k - i - 1, k - 1);
                if coef.is_zero() {
                    continue;
                }
                for (j, c) in p[k - i - 1].iter().enumerate() {
                    next[j] -= &(&coef * c);
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }
}

/// In-place RREF over F_p on a row-major residue buffer. Returns pivot columns.
fn rref_mod(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(r) = (pr..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if r != pr {
            for j in 0..cols {
                a.swap(r * cols + j, pr * cols + j);
            }
        }
        let inv = mod_inv(a[pr * cols + c], p);
        for j in c..cols {
            a[pr * cols + j] = a[pr * cols + j] * inv % p;
        }
        let (before, rest) = a.split_at_mut(pr * cols);
        let (prow, after) = rest.split_at_mut(cols);
        let eliminate = |row: &mut [u64]| {
            let f = row[c];
            if f == 0 {
                return;
            }
            let nf = p - f;
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = (row[j] + nf * prow[j]) % p;
                }
            }
        };
        before.chunks_mut(cols).for_each(eliminate);
        after.chunks_mut(cols).for_each(eliminate);
        pivots.push(c);
        pr += 1;
    }
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Incrementally maintained echelon basis of a subspace of row vectors.
///
/// Rows are kept fully reduced against each other, so membership and reduction are a single pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: Field, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduces `v` modulo the span; the result has zeros in all pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pc].inv();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            let c = row[pc].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(pc);
        let _ = self.field;
        true
    }

    /// Coordinates of `v` (assumed in the span) in terms of the stored rows.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&pc| v[pc].clone()).collect();
        let mut recon = vec![self.field.zero(); self.dim];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in recon.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x += &(c * y);
                }
            }
        }
        (recon.as_slice() == v).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Field = Field::Prime(32003);

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(F, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        let z = Matrix::zeros(F, 2, 4);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());
    }

    #[test]
    fn rank_one_example() {
        let m = Matrix::from_i64(F, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref().rank, 1);
        assert_eq!(m.rref().pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(F, 4).kernel_basis().is_empty());
        let z = Matrix::zeros(F, 3, 3);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
            }
        }
        let m = Matrix::from_i64(F, &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![F.from_i64(-1), F.one()]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(F, 2);
        let b = vec![F.from_i64(3), F.from_i64(-5)];
        assert_eq!(id.solve(&b).unwrap(), b);
        assert!(Matrix::zeros(F, 2, 2).solve(&[F.one(), F.zero()]).is_none());
        let m = Matrix::from_i64(F, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            m.solve(&[F.from_i64(3), F.from_i64(1)]).unwrap(),
            vec![F.from_i64(2), F.from_i64(1)]
        );
    }

    #[test]
    fn empty_shapes_are_legal() {
        let m = Matrix::zeros(F, 0, 3);
        assert_eq!(m.kernel_basis().len(), 3);
        let m = Matrix::zeros(F, 3, 0);
        assert!(m.kernel_basis().is_empty());
        assert!(m.solve(&[F.zero(), F.zero(), F.zero()]).is_some());
        let p = Matrix::zeros(F, 2, 0).mul(&Matrix::zeros(F, 0, 2));
        assert!(p.is_zero());
    }

    #[test]
    fn rational_rref_matches_prime_rref_on_small_integers() {
        let rows: &[&[i64]] = &[&[2, 4, -2], &[1, 3, 0], &[3, 7, -2]];
        let a = Matrix::from_i64(F, rows);
        let b = Matrix::from_i64(Field::Rational, rows);
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.rref().pivots, b.rref().pivots);
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of x^2 + 1
        let m = Matrix::from_i64(Field::Prime(101), &[&[0, -1], &[1, 0]]);
        let f = Field::Prime(101);
        assert_eq!(m.char_poly(), vec![f.one(), f.zero(), f.one()]);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(Field::Rational, &[&[2, 1], &[1, 1]]);
        assert!(m.determinant().is_one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rational, 2));
        assert!(Matrix::from_i64(F, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut e = EchelonBasis::new(F, 3);
        assert!(e.insert(&[F.one(), F.one(), F.zero()]));
        assert!(e.insert(&[F.zero(), F.one(), F.one()]));
        assert!(!e.insert(&[F.one(), F.from_i64(2), F.one()]));
        assert!(e.contains(&[F.one(), F.zero(), F.from_i64(-1)]));
        assert_eq!(e.rank(), 2);
        let c = e.coordinates(&[F.one(), F.from_i64(2), F.one()]).unwrap();
        assert_eq!(c.len(), 2);
    }
}
