use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// The quotient `k^n / U` of a coordinate space by the row span of a matrix, with the
/// non-pivot coordinates as basis.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: Field,
    ambient: usize,
    complement: Vec<usize>,
    projection: Matrix,
}

impl QuotientSpace {
    /// `span` may have dependent rows (or none).
    pub fn new(field: Field, ambient: usize, span: &Matrix) -> QuotientSpace {
        let r = (span.rows() > 0).then(|| span.rref());
        let pivots: &[usize] = r.as_ref().map_or(&[], |r| &r.pivots);
        let mut is_pivot = vec![false; ambient];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
        let mut projection = Matrix::zeros(field, ambient, complement.len());
        for (j, &c) in complement.iter().enumerate() {
            projection.set(c, j, field.one());
        }
        if let Some(r) = &r {
            for (k, &p) in pivots.iter().enumerate() {
                for (j, &c) in complement.iter().enumerate() {
                    projection.set(p, j, -r.matrix.get(k, c));
                }
            }
        }
        QuotientSpace {
            field,
            ambient,
            complement,
            projection,
        }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Ambient coordinates used as quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Matrix of the projection (`ambient x dim`), acting on row vectors.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Matrix of the section sending basis vector `k` to the unit vector `complement[k]`.
    pub fn section(&self) -> Matrix {
        let mut s = Matrix::zeros(self.field, self.dim(), self.ambient);
        for (j, &c) in self.complement.iter().enumerate() {
            s.set(j, c, self.field.one());
        }
        s
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.vec_mul(v)
    }

    pub fn lift(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient];
        v[self.complement[k]] = self.field.one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_kills_span_and_fixes_complement() {
        let f = Field::default();
        let span = Matrix::from_i64(f, &[&[1, 2, 0], &[2, 4, 0]]);
        let q = QuotientSpace::new(f, 3, &span);
        assert_eq!(q.dim(), 2);
        assert!(q.project(span.row(0)).iter().all(Scalar::is_zero));
        for k in 0..q.dim() {
            let back = q.project(&q.lift(k));
            for (j, x) in back.iter().enumerate() {
                assert_eq!(x.is_one(), j == k);
            }
        }
    }
}
