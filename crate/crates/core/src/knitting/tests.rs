use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra_mod_over, BasedAlgebra, Quiver, Relation};
use crate::exactfield::Field;
use crate::modcat::Module;

fn algebra(vertices: &[&str], arrows: &[(&str, &str, &str)], zero: &[&[&str]]) -> Arc<BasedAlgebra> {
    let f = Field::default();
    let q = Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
            .collect(),
    )
    .unwrap();
    let rels: Vec<Relation> = zero.iter().map(|p| Relation::zero_path(f, p)).collect();
    path_algebra_mod_over(f, &q, &rels, 8).unwrap()
}

fn d4() -> Arc<BasedAlgebra> {
    algebra(
        &["1", "2", "3", "4"],
        &[("alpha", "1", "2"), ("beta", "1", "3"), ("delta", "4", "1")],
        &[&["delta", "alpha"], &["delta", "beta"]],
    )
}

fn dims_sorted(ar: &ARQuiver) -> Vec<Vec<usize>> {
    let mut d: Vec<Vec<usize>> = ar.nodes.iter().map(|m| m.dims().to_vec()).collect();
    d.sort();
    d
}

#[test]
fn semisimple_algebra_has_only_simples() {
    let a = algebra(&["1", "2"], &[], &[]);
    let ar = knit(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ar.complete);
    assert_eq!(dims_sorted(&ar), vec![vec![0, 1], vec![1, 0]]);
    assert!(ar.arrows.is_empty());
    assert!(ar.tau_links.is_empty());
}

#[test]
fn linear_a3_has_six_modules_and_three_meshes() {
    let a = algebra(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]);
    let ar = knit(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ar.complete);
    assert_eq!(ar.len(), 6);
    assert_eq!(ar.tau_links.len(), 3);
    assert_eq!(ar.arrows.len(), 6);
    assert!(ar.arrows.iter().all(|&(_, _, k)| k == 1));
}

#[test]
fn d4_mesh_at_simple_radical() {
    let a = d4();
    // rad P(1) = S(2) + S(3); the mesh starting at S(2) ends at P(1)/S(3).
    let s2 = Module::simple(a.clone(), 1);
    let ses = ar_sequence(&s2).unwrap();
    assert_eq!(ses.middle.dims(), &[1, 1, 1, 0]);
    assert_eq!(ses.right.target.dims(), &[1, 0, 1, 0]);
    let ar = knit(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ar.complete);
    for &(m, t) in &ar.tau_links {
        assert!(is_isomorphic(&tau(&ar.nodes[m]), &ar.nodes[t]).unwrap());
    }
}

#[test]
fn injective_input_is_rejected() {
    let a = d4();
    assert!(ar_sequence(&Module::injective(a, 0)).is_err());
}

#[test]
fn frontier_order_does_not_change_the_quiver() {
    let a = d4();
    let up = knit_ordered(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH, false).unwrap();
    let down = knit_ordered(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH, true).unwrap();
    assert_eq!(up.len(), down.len());
    for m in &up.nodes {
        assert!(down.find(m).unwrap().is_some());
    }
    let mult = |ar: &ARQuiver| {
        let mut v: Vec<(Vec<usize>, Vec<usize>, usize)> = ar
            .arrows
            .iter()
            .map(|&(s, t, k)| (ar.nodes[s].dims().to_vec(), ar.nodes[t].dims().to_vec(), k))
            .collect();
        v.sort();
        v
    };
    assert_eq!(mult(&up), mult(&down));
}

#[test]
fn kronecker_algebra_hits_the_cap() {
    let a = algebra(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]);
    let ar = knit(&a, 20, DEFAULT_MAX_DEPTH).unwrap();
    assert!(!ar.complete);
    assert!(ar.ensure_complete().is_err());
    assert!(ar.arrows.iter().any(|&(_, _, k)| k == 2));
}

#[test]
fn dot_output_has_dashed_translation() {
    let a = algebra(&["1", "2"], &[("a", "1", "2")], &[]);
    let ar = knit(&a, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let dot = ar.to_dot();
    assert!(dot.contains("label=\"1,0\""));
    assert!(dot.contains("style=dashed"));
}
