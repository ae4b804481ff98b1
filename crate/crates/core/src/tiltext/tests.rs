use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra_mod_over, BasedAlgebra, Quiver, Relation};
use crate::exactfield::Field;
use crate::modcat::{decompose, is_indecomposable, is_isomorphic, Module};

fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
    Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
            .collect(),
    )
    .unwrap()
}

fn d4(field: Field) -> Arc<BasedAlgebra> {
    let q = quiver(
        &["1", "2", "3", "4"],
        &[("alpha", "1", "2"), ("beta", "1", "3"), ("delta", "4", "1")],
    );
    let rels = vec![
        Relation::zero_path(field, &["delta", "alpha"]),
        Relation::zero_path(field, &["delta", "beta"]),
    ];
    path_algebra_mod_over(field, &q, &rels, 8).unwrap()
}

fn a3_linear(field: Field) -> Arc<BasedAlgebra> {
    let q = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
    path_algebra_mod_over(field, &q, &[], 8).unwrap()
}

#[test]
fn d4_extension_bimodule_is_three_copies_of_the_simple_at_four() {
    for field in [Field::default(), Field::Rational] {
        let c = d4(field);
        let ext = relation_extension(&c).unwrap();
        assert_eq!(ext.dim_e(), 3);
        assert_eq!(ext.b.dim(), 10);
        let e = ext.e_module();
        let s4 = Module::simple(c.clone(), 3);
        let parts = decompose(&e).unwrap();
        assert_eq!(parts.len(), 3);
        for p in &parts {
            assert!(is_isomorphic(p, &s4).unwrap());
        }
        let de = ext.de_module();
        assert_eq!(de.dims(), &[1, 1, 1, 0]);
        assert!(is_indecomposable(&de).unwrap());
        assert_eq!(ext.new_arrow_count(), 2);
    }
}

#[test]
fn hereditary_algebras_have_trivial_extension() {
    let c = a3_linear(Field::default());
    let ext = relation_extension(&c).unwrap();
    assert_eq!(ext.dim_e(), 0);
    assert_eq!(ext.b.dim(), c.dim());
}

#[test]
fn tilting_by_the_regular_module_returns_the_algebra() {
    let a = a3_linear(Field::default());
    let projectives: Vec<Module> = (0..3).map(|v| Module::projective(a.clone(), v)).collect();
    let cert = is_tilting(&a, &projectives).unwrap();
    assert!(cert.is_tilting());
    let data = end_algebra(&a, &projectives, None).unwrap();
    assert_eq!(data.tilted.dim(), a.dim());
    assert_eq!(data.tilted.radical_layers(), a.radical_layers());
    data.bimodule.validate().unwrap();
    for i in 0..3 {
        let p = data.projective_image(i).unwrap();
        assert!(is_isomorphic(&p, &Module::projective(data.tilted.clone(), i)).unwrap());
    }
}

#[test]
fn non_rigid_sums_are_not_tilting() {
    let a = a3_linear(Field::default());
    let s: Vec<Module> = vec![
        Module::simple(a.clone(), 0),
        Module::simple(a.clone(), 1),
        Module::simple(a.clone(), 2),
    ];
    let cert = is_tilting(&a, &s).unwrap();
    assert!(cert.self_extensions > 0);
    assert!(!cert.is_tilting());
}
