use rand::Rng;

use super::hom::{random_scalar, seeded_rng, EndStructure};
use super::module::{Module, ModuleHom};
use crate::error::{Error, Result};
use crate::exactfield::poly::{self, Poly};
use crate::exactfield::{rational_reconstruct, EchelonBasis, Field, Matrix, Scalar};

/// Prime used to locate rational eigenvalues before exact verification.
const SEARCH_PRIME: u64 = 2_147_483_647;

/// An indecomposable summand together with its inclusion into the decomposed module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModuleHom,
}

/// Splits a module into indecomposable summands, sorted by total dimension and then by
/// dimension vector.
pub fn decompose(m: &Module) -> Result<Vec<Module>> {
    Ok(decompose_with_inclusions(m)?.into_iter().map(|s| s.module).collect())
}

pub fn decompose_with_inclusions(m: &Module) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    let mut stack = vec![Summand {
        module: m.clone(),
        inclusion: m.identity(),
    }];
    while let Some(s) = stack.pop() {
        if s.module.is_zero() {
            continue;
        }
        match split_once(&s.module)? {
            None => out.push(s),
            Some((a, b)) => {
                for (sub, inc) in [a, b] {
                    stack.push(Summand {
                        module: sub,
                        inclusion: inc.then(&s.inclusion),
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| {
        (x.module.total_dim(), x.module.dims()).cmp(&(y.module.total_dim(), y.module.dims()))
    });
    Ok(out)
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    Ok(!m.is_zero() && split_once(m)?.is_none())
}

type Piece = (Module, ModuleHom);

/// Either a decomposition `M = A + B` into nonzero submodules, or `None` when the endomorphism
/// ring is certified local.
fn split_once(m: &Module) -> Result<Option<(Piece, Piece)>> {
    let end = EndStructure::new(m)?;
    if end.top_dim() == 1 {
        return Ok(None);
    }
    let f = m.field();
    let mut rng = seeded_rng(m, 0xdec0);
    let basis = end.coords.basis().to_vec();
    let trials = basis.len() + 48;
    for t in 0..trials {
        let phi = if t < basis.len() {
            basis[t].clone()
        } else {
            let c: Vec<Scalar> = (0..end.dim()).map(|_| random_scalar(f, &mut rng)).collect();
            end.coords.combination(&c)
        };
        match f {
            Field::Prime(p) => {
                let factors = poly::char_poly_factors(&phi.full_matrix(), &mut rng)?;
                if factors.len() >= 2 {
                    let (q, e) = &factors[0];
                    let mut qe: Poly = vec![1];
                    for _ in 0..*e {
                        qe = poly::mul(&qe, q, p);
                    }
                    let psi = eval_hom(&qe, &phi);
                    return Ok(Some(fitting_split(&psi)));
                }
                if certifies_local(&end, &phi) {
                    return Ok(None);
                }
            }
            Field::Rational => {
                if let Some(split) = rational_split(&phi, &mut rng) {
                    return Ok(Some(split));
                }
            }
        }
    }
    Err(Error::Unsupported(format!(
        "could not decompose module with dimension vector {:?} (endomorphism top has dimension {})",
        m.dims(),
        end.top_dim()
    )))
}

/// `q(phi)` evaluated blockwise.
fn eval_hom(q: &Poly, phi: &ModuleHom) -> ModuleHom {
    let blocks = phi.blocks.iter().map(|b| poly::eval_matrix(q, b)).collect();
    ModuleHom {
        source: phi.source.clone(),
        target: phi.target.clone(),
        blocks,
    }
}

/// Splits `M = ker psi^n + im psi^n` when both parts are nonzero.
fn fitting_split(psi: &ModuleHom) -> (Piece, Piece) {
    let n = psi.source.total_dim() as u32;
    let blocks = psi.blocks.iter().map(|b| b.pow(n.max(1))).collect();
    let pow = ModuleHom {
        source: psi.source.clone(),
        target: psi.target.clone(),
        blocks,
    };
    (pow.kernel(), pow.image())
}

fn is_proper(psi: &ModuleHom) -> bool {
    let n = psi.source.total_dim();
    let r = psi.blocks.iter().map(|b| b.pow(n as u32).rank()).sum::<usize>();
    r > 0 && r < n
}

/// True when `End(M)/rad` is generated by the image of `phi` and the characteristic polynomial
/// of `phi` is a power of one irreducible, so the top is a field.
fn certifies_local(end: &EndStructure, phi: &ModuleHom) -> bool {
    let f = phi.source.field();
    let dim = end.dim();
    let mut span = EchelonBasis::new(f, dim);
    for r in &end.radical {
        span.insert(r);
    }
    let mut power = phi.source.identity();
    for _ in 0..end.top_dim() {
        span.insert(&end.coords.coordinates(&power));
        power = power.then(phi);
    }
    span.rank() == dim
}

/// Over the rationals: splits along a rational eigenvalue of `phi` when that gives a proper
/// Fitting decomposition.
fn rational_split<R: Rng>(phi: &ModuleHom, rng: &mut R) -> Option<(Piece, Piece)> {
    let f = phi.source.field();
    let full = phi.full_matrix();
    let cp = full.char_poly();
    let modp: Option<Poly> = cp.iter().map(|c| reduce_mod(c, SEARCH_PRIME)).collect();
    let mut modp = modp?;
    poly::trim(&mut modp);
    for r in poly::roots(&modp, SEARCH_PRIME, rng) {
        let Some(q) = rational_reconstruct(r, SEARCH_PRIME) else {
            continue;
        };
        let lambda = Scalar::Rat(Box::new(q));
        if !eval_scalar(&cp, &lambda).is_zero() {
            continue;
        }
        let blocks = phi
            .blocks
            .iter()
            .map(|b| b.sub(&Matrix::identity(f, b.rows()).scale(&lambda)))
            .collect();
        let psi = ModuleHom {
            source: phi.source.clone(),
            target: phi.target.clone(),
            blocks,
        };
        if is_proper(&psi) {
            return Some(fitting_split(&psi));
        }
    }
    None
}

fn reduce_mod(c: &Scalar, p: u64) -> Option<u64> {
    use num_traits::ToPrimitive;
    let q = c.as_rational()?;
    let pb = num_bigint::BigInt::from(p);
    let num = (q.numer() % &pb + &pb) % &pb;
    let den = (q.denom() % &pb + &pb) % &pb;
    let den = den.to_u64()?;
    if den == 0 {
        return None;
    }
    let num = num.to_u64()?;
    Some(num * crate::exactfield::mod_inv(den, p) % p)
}

fn eval_scalar(cp: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in cp.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_algebra_mod_over, Quiver};

    fn a2(field: Field) -> std::sync::Arc<crate::algebra::BasedAlgebra> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        path_algebra_mod_over(field, &q, &[], 8).unwrap()
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        for field in [Field::default(), Field::Rational] {
            let alg = a2(field);
            let parts = decompose(&Module::regular(alg.clone())).unwrap();
            let dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
            assert_eq!(dims, vec![vec![0, 1], vec![1, 1]]);
        }
    }

    #[test]
    fn repeated_summands_split() {
        let alg = a2(Field::default());
        let s = Module::simple(alg.clone(), 0);
        let sum = Module::direct_sum(&alg, &[s.clone(), s.clone(), Module::projective(alg.clone(), 0)]);
        let parts = decompose(&sum).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(super::super::hom::is_isomorphic(&parts[0], &s).unwrap());
    }
}
