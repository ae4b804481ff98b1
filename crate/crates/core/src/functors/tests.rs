use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra_mod_over, BasedAlgebra, Quiver, Relation};
use crate::exactfield::Field;
use crate::modcat::{is_isomorphic, Module};
use crate::tiltext::relation_extension;

fn d4(field: Field) -> Arc<BasedAlgebra> {
    let q = Quiver::new(
        ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect(),
        [("alpha", "1", "2"), ("beta", "1", "3"), ("delta", "4", "1")]
            .iter()
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
            .collect(),
    )
    .unwrap();
    let rels = vec![
        Relation::zero_path(field, &["delta", "alpha"]),
        Relation::zero_path(field, &["delta", "beta"]),
    ];
    path_algebra_mod_over(field, &q, &rels, 8).unwrap()
}

/// Simples, projectives and injectives without repeats.
fn small_sweep(c: &Arc<BasedAlgebra>) -> Vec<Module> {
    let mut out: Vec<Module> = Vec::new();
    for v in 0..c.num_vertices() {
        for m in [
            Module::simple(c.clone(), v),
            Module::projective(c.clone(), v),
            Module::injective(c.clone(), v),
        ] {
            if !out.iter().any(|x| is_isomorphic(x, &m).unwrap()) {
                out.push(m);
            }
        }
    }
    out
}

fn context(field: Field) -> VerifyContext {
    let c = d4(field);
    let ext = relation_extension(&c).unwrap();
    VerifyContext {
        rings: ChangeOfRings::new(&ext).unwrap(),
        sweep: small_sweep(&c),
        tilting: None,
        tilted: true,
        expected_overlap: None,
    }
}

#[test]
fn induction_and_coinduction_round_trip() {
    let ctx = context(Field::default());
    let rings = &ctx.rings;
    for m in &ctx.sweep {
        let ind = rings.induce(m).unwrap();
        let back = rings.induced_from(&ind).unwrap().expect("induced module has a preimage");
        assert!(is_isomorphic(&back, m).unwrap());
        let co = rings.coinduce(m).unwrap();
        let back = rings.coinduced_from(&co).unwrap().expect("coinduced module has a preimage");
        assert!(is_isomorphic(&back, m).unwrap());
        assert!(rings.induced_ses(m).unwrap().is_certified());
        assert!(rings.coinduced_ses(m).unwrap().is_certified());
    }
}

#[test]
fn restriction_of_induced_projective_is_projective_plus_tensor_with_e() {
    let ctx = context(Field::default());
    let c = &ctx.rings.ext.c;
    let p = Module::projective(c.clone(), 0);
    let ind = ctx.rings.induce(&p).unwrap();
    let res = ctx.rings.restrict(&ind).unwrap();
    let te = ctx.rings.tensor_e(&p).unwrap();
    let expected = p.direct_sum_with(&te);
    assert!(is_isomorphic(&res, &expected).unwrap());
}

#[test]
fn d4_battery_passes_on_tilted_statements() {
    for field in [Field::default(), Field::Rational] {
        let ctx = context(field);
        for st in [
            Statement::Prop34,
            Statement::Prop36,
            Statement::Prop37,
            Statement::Lemma38,
            Statement::Thm39Conditions,
            Statement::Prop41,
            Statement::Lemma42,
            Statement::Prop43,
            Statement::Lemma46,
            Statement::Cor47,
            Statement::Ee,
            Statement::Thm48,
        ] {
            let r = ctx.verify(st).unwrap();
            let failed: Vec<_> = r.failures().map(|a| a.name.clone()).collect();
            assert!(failed.is_empty(), "{st} over {field:?}: {failed:?}");
        }
    }
}

#[test]
fn statements_needing_tilting_data_report_failure_without_it() {
    let ctx = context(Field::default());
    let r = ctx.verify(Statement::Prop24).unwrap();
    assert!(!r.passed());
}

#[test]
fn statement_ids_round_trip() {
    for st in Statement::ALL {
        assert_eq!(st.id().parse::<Statement>().unwrap(), st);
    }
    assert!("prop9.9".parse::<Statement>().is_err());
}

#[test]
fn de_is_partial_tilting_and_tau_rigid() {
    let ctx = context(Field::default());
    let de = ctx.rings.ext.de_module();
    assert!(has_property(&de, Property::PartialTilting).unwrap());
    assert!(has_property(&de, Property::TauRigid).unwrap());
    let e = ctx.rings.ext.e_module();
    assert!(has_property(&e, Property::PartialCotilting).unwrap());
}
