//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use relext::algebra::{
    path_algebra_mod, path_algebra_mod_over, AlgebraMap, BasedAlgebra, Quiver, Relation, DEFAULT_LENGTH_CAP,
};
use relext::exactfield::{Field, Scalar};
use relext::io::{fixtures, AlgebraFile};
use relext::modcat::{
    decompose, ext_dim, hom_basis, hom_dim, hom_over, is_indecomposable, is_isomorphic, tensor_over, Bimodule, Module,
    ModuleHom,
};
use relext::tiltext::ExtensionData;

pub fn summand_dims(m: &Module) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = decompose(m).unwrap().iter().map(|p| p.dims().to_vec()).collect();
    v.sort();
    v
}

pub fn printed(fixture: &str, name: &str) -> Arc<BasedAlgebra> {
    let fx = fixtures::get(fixture).unwrap();
    let (_, text) = fx.extra_algebras.iter().find(|(n, _)| *n == name).unwrap();
    let file = AlgebraFile::parse(text).unwrap();
    path_algebra_mod(&file.quiver, &file.relations, DEFAULT_LENGTH_CAP).unwrap()
}

/// An isomorphism `printed -> ext.b` sending each arrow shared with `C` to itself and each new
/// arrow to a sum of basis elements of `E` between the same vertices.
pub fn printed_iso(printed: &Arc<BasedAlgebra>, ext: &ExtensionData) -> AlgebraMap {
    let b = &ext.b;
    let dc = ext.c.dim();
    let f = b.field();
    let mut choices: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for &g in printed.generators() {
        let label = &printed.labels()[g];
        let (s, t) = (printed.source(g), printed.target(g));
        if let Some(i) = ext.c.labels().iter().position(|l| l == label) {
            choices.push(vec![b.basis_element(i)]);
            continue;
        }
        let cands: Vec<usize> = (dc..b.dim()).filter(|&i| b.source(i) == s && b.target(i) == t).collect();
        let mut opts = Vec::new();
        for mask in 1..(1u32 << cands.len()) {
            let mut v = b.zero_element();
            for (k, &i) in cands.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    v[i] = f.one();
                }
            }
            opts.push(v);
        }
        choices.push(opts);
    }
    let vertices: Vec<usize> = (0..printed.num_vertices()).collect();
    let mut idx = vec![0; choices.len()];
    loop {
        let images: Vec<Vec<Scalar>> = idx.iter().zip(&choices).map(|(&k, c)| c[k].clone()).collect();
        if let Ok(map) = AlgebraMap::from_generator_images(printed, b, &vertices, &images) {
            if map.matrix.inverse().is_some() {
                return map;
            }
        }
        let mut k = 0;
        loop {
            assert!(k < idx.len(), "no isomorphism from the printed presentation");
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Dimension vectors `d` with `0 < d <= bound` (entrywise) and Tits form `q(d) = 1`.
pub fn tits_roots(a: &BasedAlgebra, bound: usize) -> Vec<Vec<usize>> {
    let q = a.quiver_of();
    let n = q.vertices.len();
    let mut out = Vec::new();
    let mut d = vec![0usize; n];
    loop {
        let mut k = 0;
        while k < n && d[k] == bound {
            d[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        d[k] += 1;
        let squares: i64 = d.iter().map(|&x| (x * x) as i64).sum();
        let cross: i64 = q.arrows.iter().map(|x| (d[x.source] * d[x.target]) as i64).sum();
        if squares - cross == 1 {
            out.push(d.clone());
        }
    }
    out.sort();
    out
}

/// Vertex count, arrows `(s, t)` with `s < t`, and which length-two paths are zero.
#[derive(Clone, Debug)]
pub struct Shape {
    pub n: usize,
    pub arrows: Vec<(usize, usize)>,
    pub zero_mask: u32,
}

pub fn shape() -> impl Strategy<Value = Shape> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let pair = (0..n, 0..n).prop_filter_map("acyclic", |(s, t)| (s < t).then_some((s, t)));
            let arrows = if n == 1 {
                Just(Vec::new()).boxed()
            } else {
                proptest::collection::vec(pair, 0..=5).boxed()
            };
            (Just(n), arrows, any::<u32>())
        })
        .prop_map(|(n, arrows, zero_mask)| Shape { n, arrows, zero_mask })
}

pub fn build(s: &Shape) -> Arc<BasedAlgebra> {
    let f = Field::default();
    let vertices: Vec<String> = (1..=s.n).map(|v| v.to_string()).collect();
    let labels: Vec<String> = (0..s.arrows.len()).map(|i| format!("a{i}")).collect();
    let arrows = s
        .arrows
        .iter()
        .zip(&labels)
        .map(|(&(u, v), l)| (l.clone(), vertices[u].clone(), vertices[v].clone()))
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    let mut rels = Vec::new();
    let mut bit = 0;
    for (i, &(_, t)) in s.arrows.iter().enumerate() {
        for (j, &(u, _)) in s.arrows.iter().enumerate() {
            if t == u {
                if s.zero_mask & (1 << (bit % 32)) != 0 {
                    rels.push(Relation::zero_path(f, &[&labels[i], &labels[j]]));
                }
                bit += 1;
            }
        }
    }
    path_algebra_mod_over(f, &q, &rels, DEFAULT_LENGTH_CAP).unwrap()
}

pub fn combination(src: &Module, tgt: &Module, coeffs: &[i64]) -> ModuleHom {
    let f = src.field();
    hom_basis(src, tgt)
        .unwrap()
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(ModuleHom::zero(src, tgt), |acc, (h, &c)| acc.add(&h.scale(&f.from_i64(c))))
}

/// A cokernel of a map between indecomposable projectives and a kernel of a map between
/// indecomposable injectives.
pub fn modules(a: &Arc<BasedAlgebra>, u: usize, v: usize, coeffs: &[i64]) -> (Module, Module) {
    let n = a.num_vertices();
    let (u, v) = (u % n, v % n);
    let p = combination(&Module::projective(a.clone(), u), &Module::projective(a.clone(), v), coeffs);
    let i = combination(&Module::injective(a.clone(), v), &Module::injective(a.clone(), u), coeffs);
    (p.cokernel().module, i.kernel().0)
}

pub fn check_algebra(s: &Shape) -> Result<(), TestCaseError> {
    let a = build(s);
    prop_assert_eq!(a.check_invariants(), Ok(()));
    let mut sum = a.zero_element();
    for v in 0..a.num_vertices() {
        let e = a.basis_element(a.idempotent(v));
        prop_assert_eq!(a.mul(&e, &e), e.clone());
        for (x, y) in sum.iter_mut().zip(&e) {
            *x += y;
        }
    }
    prop_assert_eq!(sum, a.one());
    prop_assert_eq!(a.quiver_of().arrow_counts().iter().flatten().sum::<usize>(), s.arrows.len());
    Ok(())
}

/// `Hom(M (x) DA, N) = Hom(M, Hom(DA, N))` in dimension, and the regular bimodule acts trivially.
pub fn check_adjunction(s: &Shape, u: usize, v: usize, coeffs: &[i64]) -> Result<(), TestCaseError> {
    let a = build(s);
    let (m, n) = modules(&a, u, v, coeffs);
    let x = Bimodule::regular(&a).dual();
    let lhs = hom_dim(&tensor_over(&m, &x).unwrap().module, &n).unwrap();
    let rhs = hom_dim(&m, &hom_over(&x, &n).unwrap().module).unwrap();
    prop_assert_eq!(lhs, rhs);
    let regular = Bimodule::regular(&a);
    prop_assert!(is_isomorphic(&tensor_over(&m, &regular).unwrap().module, &m).unwrap());
    prop_assert!(is_isomorphic(&hom_over(&regular, &n).unwrap().module, &n).unwrap());
    Ok(())
}

/// Summands are nonzero and indecomposable, add up to the module, and split compatibly with
/// a direct sum.
pub fn check_decompose(s: &Shape, u: usize, v: usize, coeffs: &[i64]) -> Result<(), TestCaseError> {
    let a = build(s);
    let (m, n) = modules(&a, u, v, coeffs);
    let sum = m.direct_sum_with(&n);
    let parts = decompose(&sum).unwrap();
    let mut total = vec![0; a.num_vertices()];
    for p in &parts {
        prop_assert!(!p.is_zero());
        prop_assert!(is_indecomposable(p).unwrap());
        for (t, d) in total.iter_mut().zip(p.dims()) {
            *t += d;
        }
    }
    prop_assert_eq!(&total[..], sum.dims());
    prop_assert!(is_isomorphic(&Module::direct_sum(&a, &parts), &sum).unwrap());
    let split = decompose(&m).unwrap().len() + decompose(&n).unwrap().len();
    prop_assert_eq!(parts.len(), split);
    Ok(())
}

/// `Ext^k(M, N) = Ext^k(DN, DM)` over the opposite algebra.
pub fn check_ext_duality(s: &Shape, u: usize, v: usize, coeffs: &[i64]) -> Result<(), TestCaseError> {
    let a = build(s);
    let (m, n) = modules(&a, u, v, coeffs);
    let dn = n.dual();
    let dm = m.dual().over(dn.algebra()).unwrap();
    for k in 0..=2 {
        prop_assert_eq!(ext_dim(&m, &n, k).unwrap(), ext_dim(&dn, &dm, k).unwrap());
        prop_assert_eq!(ext_dim(&n, &m, k).unwrap(), ext_dim(&dm, &dn, k).unwrap());
    }
    Ok(())
}

/// A shape, two vertex seeds and hom coefficients.
pub fn case() -> impl Strategy<Value = (Shape, usize, usize, Vec<i64>)> {
    (shape(), 0usize..4, 0usize..4, proptest::collection::vec(-3i64..4, 1..6))
}
