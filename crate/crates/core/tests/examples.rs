//! Worked examples: relation extensions, their module categories and the functors between them.

mod common;

use common::{printed, printed_iso, summand_dims, tits_roots};
use relext::functors::ChangeOfRings;
use relext::io::fixtures;
use relext::knitting::{ar_sequence, knit, sweep_thm_7_0, DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES};
use relext::modcat::{ext_dim, hom_dim, is_indecomposable, is_isomorphic, tau, Module};

#[test]
fn a5_ar_quiver_matches_the_printed_one() {
    let l = fixtures::get("a5-nontilted").unwrap().load(None).unwrap();
    let ar = knit(&l.algebra, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ar.complete);
    let mut dims: Vec<Vec<usize>> = ar.nodes.iter().map(|m| m.dims().to_vec()).collect();
    dims.sort();
    let printed = [
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 1, 1, 0, 0],
        [0, 1, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
    ];
    let mut expected: Vec<Vec<usize>> = printed.iter().map(|d| d.to_vec()).collect();
    expected.sort();
    assert_eq!(dims, expected);
    let mesh = ar_sequence(&Module::simple(l.algebra.clone(), 3)).unwrap();
    assert_eq!(summand_dims(&mesh.middle), vec![vec![0, 0, 1, 1, 0]]);
    assert_eq!(mesh.right.target.dims(), &[0, 0, 1, 0, 0]);
}

#[test]
fn hereditary_d6_nodes_are_the_positive_roots() {
    let l = fixtures::get("d6-hereditary").unwrap().load(None).unwrap();
    let roots = tits_roots(&l.algebra, 2);
    assert_eq!(roots.len(), 30);
    let ar = knit(&l.algebra, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ar.complete);
    let mut dims: Vec<Vec<usize>> = ar.nodes.iter().map(|m| m.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, roots);
}

#[test]
fn tilted_d6_indecomposables_split_by_the_torsion_pair() {
    let l = fixtures::get("d6-tilting").unwrap().load(None).unwrap();
    let parts: Vec<Module> = l.modules.iter().map(|(_, m)| m.clone()).collect();
    let t = Module::direct_sum(&l.algebra, &parts);
    let ind_a = knit(&l.algebra, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let torsion = ind_a.nodes.iter().filter(|m| ext_dim(&t, m, 1).unwrap() == 0).count();
    let free = ind_a.nodes.iter().filter(|m| hom_dim(&t, m).unwrap() == 0).count();
    let c = l.c();
    let ind_c = knit(&c, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ind_c.complete);
    assert_eq!(ind_c.len(), torsion + free);
    assert_eq!(ind_c.len(), 20);
    // The cluster category of D6 has 30 + 6 indecomposables; B loses the 6 summands of T.
    let ind_b = knit(&l.extension().unwrap().b, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    assert!(ind_b.complete);
    assert_eq!(ind_b.len(), 30);
}

#[test]
fn tilted_d6_matches_printed_presentations() {
    let l = fixtures::get("d6-tilting").unwrap().load(None).unwrap();
    let ext = l.extension().unwrap();
    let c_printed = printed("d6-tilting", "c-printed.alg");
    let b_printed = printed("d6-tilting", "b-printed.alg");
    assert_eq!(ext.c.quiver_of().arrow_counts(), c_printed.quiver_of().arrow_counts());
    assert_eq!(ext.c.dim(), c_printed.dim());
    let q = ext.b.quiver_of();
    assert_eq!(q.arrows.len(), 8);
    assert_eq!(q.arrow_counts(), b_printed.quiver_of().arrow_counts());
    assert_eq!(ext.b.dim(), b_printed.dim());
    assert_eq!(ext.b.dim(), 21);
}

#[test]
fn tilted_d6_ar_quiver_sweep() {
    let l = fixtures::get("d6-tilting").unwrap().load(None).unwrap();
    let ext = l.extension().unwrap();
    let rings = ChangeOfRings::new(&ext).unwrap();
    let ar = knit(&ext.b, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let c_modules = l.sweep().unwrap();
    let report = sweep_thm_7_0(&rings, &c_modules, &ar).unwrap();
    assert!(report.passed(), "{:?}", report.failures().map(|a| &a.name).collect::<Vec<_>>());
}

#[test]
fn a41_both_tilted_algebras_extend_to_the_printed_algebra() {
    let b = fixtures::get("a41-b").unwrap().load(None).unwrap().algebra;
    for id in ["a41-c", "a41-cprime"] {
        let ext = fixtures::get(id).unwrap().load(None).unwrap().extension().unwrap();
        assert_eq!(ext.b.quiver_of().arrow_counts(), b.quiver_of().arrow_counts(), "{id}");
        assert_eq!(ext.b.dim(), b.dim(), "{id}");
        printed_iso(&b, &ext);
    }
}

#[test]
fn a41_extension_bimodule_matches_the_listed_summands() {
    let ext = fixtures::get("a41-c").unwrap().load(None).unwrap().extension().unwrap();
    let three_four = vec![0, 0, 1, 1, 0];
    let mut e = vec![three_four.clone(); 4];
    e.push(vec![0, 1, 0, 0, 0]);
    e.sort();
    assert_eq!(summand_dims(&ext.e_module()), e);
    let mut de = vec![vec![0, 0, 0, 1, 0], vec![1, 1, 1, 0, 1], vec![1, 1, 1, 0, 1]];
    de.sort();
    assert_eq!(summand_dims(&ext.de_module()), de);
}

#[test]
fn a41_coray_induces_to_the_tube_of_b() {
    let l = fixtures::get("a41-c").unwrap().load(None).unwrap();
    let rings = ChangeOfRings::new(&l.extension().unwrap()).unwrap();
    let expected: [(&str, [usize; 5]); 5] = [
        ("coray-2315.mod", [1, 1, 2, 1, 1]),
        ("coray-315.mod", [1, 0, 2, 1, 1]),
        ("coray-3415.mod", [1, 0, 2, 2, 1]),
        ("coray-15.mod", [1, 0, 1, 1, 1]),
        ("coray-231155.mod", [2, 1, 2, 1, 2]),
    ];
    for (name, dims) in expected {
        let m = l.module(name).unwrap();
        assert!(is_indecomposable(m).unwrap(), "{name}");
        let ind = rings.induce(m).unwrap();
        assert_eq!(ind.dims(), dims, "{name}");
        assert!(is_indecomposable(&ind).unwrap(), "{name}");
        // Hom_C(E, M) = 0 along the coray, so coinduction changes nothing.
        let co = rings.coinduce(m).unwrap();
        assert!(is_isomorphic(&co, &rings.as_b_module(m).unwrap()).unwrap(), "{name}");
    }
}

#[test]
fn a41_ray_coinduces_to_the_tube_of_b() {
    let l = fixtures::get("a41-cprime").unwrap().load(None).unwrap();
    let rings = ChangeOfRings::new(&l.extension().unwrap()).unwrap();
    let expected: [(&str, [usize; 5]); 3] = [
        ("ray-1534.mod", [1, 1, 2, 1, 1]),
        ("ray-153.mod", [1, 1, 2, 0, 1]),
        ("ray-1523.mod", [1, 2, 2, 0, 1]),
    ];
    for (name, dims) in expected {
        let m = l.module(name).unwrap();
        let co = rings.coinduce(m).unwrap();
        assert_eq!(co.dims(), dims, "{name}");
        assert!(is_indecomposable(&co).unwrap(), "{name}");
        let ind = rings.induce(m).unwrap();
        assert!(is_isomorphic(&ind, &rings.as_b_module(m).unwrap()).unwrap(), "{name}");
    }
}

#[test]
fn a41_bold_mesh_is_neither_induced_nor_coinduced() {
    let fb = fixtures::get("a41-b").unwrap().load(None).unwrap();
    for id in ["a41-c", "a41-cprime"] {
        let ext = fixtures::get(id).unwrap().load(None).unwrap().extension().unwrap();
        let to_printed = printed_iso(&fb.algebra, &ext).inverse().unwrap();
        let rings = ChangeOfRings::new(&ext).unwrap();
        for (name, m) in &fb.modules {
            let n = m.pullback(&to_printed).unwrap();
            n.validate().unwrap();
            assert!(is_indecomposable(&n).unwrap(), "{name}");
            assert!(rings.induced_from(&n).unwrap().is_none(), "{id} {name}");
            assert!(rings.coinduced_from(&n).unwrap().is_none(), "{id} {name}");
        }
    }
}

#[test]
fn a41_tube_modules_are_recognised_as_induced() {
    // The positive control for the bold-mesh test: the same search finds the coray images.
    let l = fixtures::get("a41-c").unwrap().load(None).unwrap();
    let rings = ChangeOfRings::new(&l.extension().unwrap()).unwrap();
    for (name, m) in &l.modules {
        let ind = rings.induce(m).unwrap();
        let found = rings.induced_from(&ind).unwrap().expect(name);
        assert!(is_isomorphic(&found, m).unwrap(), "{name}");
    }
}

#[test]
fn a22_translate_of_e() {
    let ext = fixtures::get("a22").unwrap().load(None).unwrap().extension().unwrap();
    assert_eq!(summand_dims(&tau(&ext.e_module())), vec![vec![1, 0, 0, 1]; 2]);
}
