//! Dense univariate polynomials over prime fields, with factorization.
//!
//! Coefficients are residues stored lowest degree first; the zero polynomial is the empty vector.

use rand::Rng;

use super::matrix::Matrix;
use super::scalar::{mod_inv, Field, Scalar};
use crate::error::{Error, Result};

pub type Poly = Vec<u64>;

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder. Panics if `b` is zero.
pub fn divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = mod_inv(b[db], p);
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * lead_inv % p;
        q[dr - db] = c;
        for (j, &y) in b.iter().enumerate() {
            let idx = dr - db + j;
            r[idx] = (r[idx] + p - c * y % p) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    divrem(a, b, p).1
}

pub fn monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = mod_inv(l, p);
            a.iter().map(|x| x * inv % p).collect()
        }
    }
}

pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub fn derivative(a: &Poly, p: u64) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

/// `base^e mod m`.
pub fn powmod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut acc: Poly = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// `x^(p^k) mod m` by repeated p-th powering.
fn frobenius_power(m: &Poly, k: usize, p: u64) -> Poly {
    let mut x: Poly = rem(&vec![0, 1], m, p);
    for _ in 0..k {
        x = powmod(&x, p, m, p);
    }
    x
}

pub fn eval(a: &Poly, x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Squarefree decomposition of a monic polynomial of degree below `p`: pairs `(g, e)` with
/// `a = prod g^e` and the `g` squarefree and pairwise coprime.
pub fn squarefree(a: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let a = monic(a, p);
    assert!(a.len() as u64 <= p, "degree must be below the characteristic");
    let mut out = Vec::new();
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    // Yun's algorithm; valid because the derivative of a nonconstant poly of degree < p is nonzero.
    let da = derivative(&a, p);
    let b = gcd(&a, &da, p);
    let mut c = divrem(&a, &b, p).0;
    let mut d = sub(&divrem(&da, &b, p).0, &derivative(&c, p), p);
    let mut i = 1;
    while degree(&c).unwrap_or(0) > 0 {
        let g = gcd(&c, &d, p);
        if degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        c = divrem(&c, &g, p).0;
        d = sub(&divrem(&d, &g, p).0, &derivative(&c, p), p);
        i += 1;
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(a: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut f = a.clone();
    let mut d = 0;
    let mut xq: Poly = vec![0, 1];
    while degree(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        xq = powmod(&xq, p, &f, p);
        let g = gcd(&f, &sub(&xq, &vec![0, 1], p), p);
        if degree(&g).unwrap_or(0) > 0 {
            f = divrem(&f, &g, p).0;
            xq = rem(&xq, &f, p);
            out.push((g, d));
        }
    }
    if degree(&f).unwrap_or(0) > 0 {
        let df = degree(&f).unwrap();
        out.push((f, df));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d` (Cantor–Zassenhaus, odd `p`).
fn equal_degree<R: Rng>(a: &Poly, d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
    let n = degree(a).unwrap_or(0);
    if n <= d {
        return vec![a.clone()];
    }
    let exp = (p.pow(d as u32) - 1) / 2;
    loop {
        let mut r: Poly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut r);
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let h = sub(&powmod(&r, exp, a, p), &vec![1], p);
        let g = gcd(a, &h, p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(a, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&other, p), d, p, rng));
            return out;
        }
    }
}

fn pow_exceeds(p: u64, d: usize) -> bool {
    (p as f64).powi(d as i32) > 1e18
}

/// Full factorization into monic irreducibles with multiplicities.
pub fn factor<R: Rng>(a: &Poly, p: u64, rng: &mut R) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, e) in squarefree(a, p) {
        for (h, d) in distinct_degree(&g, p) {
            if pow_exceeds(p, d) {
                // too large for the equal-degree exponent; keep the block unsplit
                out.push((h, e));
                continue;
            }
            for irr in equal_degree(&h, d, p, rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort();
    out
}

/// Roots in F_p of a nonzero polynomial (without multiplicity).
pub fn roots<R: Rng>(a: &Poly, p: u64, rng: &mut R) -> Vec<u64> {
    let a = monic(a, p);
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let xp = frobenius_power(&a, 1, p);
    let g = gcd(&a, &sub(&xp, &vec![0, 1], p), p);
    if degree(&g).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut rs: Vec<u64> = equal_degree(&g, 1, p, rng)
        .into_iter()
        .map(|f| (p - f[0]) % p)
        .collect();
    rs.sort_unstable();
    rs
}

/// Evaluates `a` at a square matrix over the same prime field.
pub fn eval_matrix(a: &Poly, m: &Matrix) -> Matrix {
    let f = m.field();
    let n = m.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for &c in a.iter().rev() {
        acc = acc.mul(m);
        let id = Matrix::identity(f, n).scale(&f.from_i64(c as i64));
        acc = acc.add(&id);
    }
    acc
}

/// Converts scalars of a prime field to residues.
pub fn from_scalars(v: &[Scalar]) -> Poly {
    let mut out: Poly = v.iter().map(|s| s.residue().expect("prime field")).collect();
    trim(&mut out);
    out
}

/// Factors the characteristic polynomial of a square matrix over a prime field.
pub fn char_poly_factors<R: Rng>(m: &Matrix, rng: &mut R) -> Result<Vec<(Poly, usize)>> {
    let Field::Prime(p) = m.field() else {
        return Err(Error::Unsupported(
            "polynomial factorization is only available over prime fields".into(),
        ));
    };
    let cp = from_scalars(&m.char_poly());
    Ok(factor(&cp, p, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u64 = 101;

    fn expand(fs: &[(Poly, usize)]) -> Poly {
        let mut acc = vec![1];
        for (g, e) in fs {
            for _ in 0..*e {
                acc = mul(&acc, g, P);
            }
        }
        acc
    }

    #[test]
    fn divrem_reconstructs() {
        let a = vec![3, 0, 5, 7, 1];
        let b = vec![2, 1];
        let (q, r) = divrem(&a, &b, P);
        assert_eq!(add(&mul(&q, &b, P), &r, P), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn factor_product_of_known_pieces() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // (x-1)^2 (x^2+1)? x^2+1 splits mod 101 since 101 = 1 mod 4; use x^2 - 2 (2 is a non-residue mod 101)
        let lin = vec![P - 1, 1];
        let quad = vec![P - 2, 0, 1];
        let a = mul(&mul(&lin, &lin, P), &quad, P);
        let fs = factor(&a, P, &mut rng);
        assert_eq!(expand(&fs), a);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(lin.clone(), 2)));
        assert!(fs.contains(&(quad.clone(), 1)));
    }

    #[test]
    fn roots_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = mul(&vec![P - 3, 1], &vec![5, 1], P);
        assert_eq!(roots(&a, P, &mut rng), vec![3, P - 5]);
        assert!(roots(&vec![P - 2, 0, 1], P, &mut rng).is_empty());
    }
}
