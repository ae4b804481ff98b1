use super::fixtures::FIXTURES;
use super::*;
use crate::error::Error;
use crate::modcat::is_isomorphic;
use crate::tiltext::relation_extension;

#[test]
fn fixture_algebra_files_are_canonical() {
    for f in FIXTURES {
        let parsed = AlgebraFile::parse(f.algebra).unwrap();
        assert_eq!(parsed.to_text(), f.algebra, "fixture {}", f.id);
        for (name, text) in f.extra_algebras {
            assert_eq!(AlgebraFile::parse(text).unwrap().to_text(), *text, "{}/{name}", f.id);
        }
    }
}

#[test]
fn fixture_modules_load_and_round_trip() {
    for f in FIXTURES {
        let loaded = f.load(None).unwrap();
        for (name, m) in &loaded.modules {
            let again = parse_module(&module_to_text(m), &loaded.algebra).unwrap();
            assert!(again.identical(m), "{}/{name}", f.id);
        }
    }
}

#[test]
fn coefficients_and_signs_round_trip() {
    let text = "field rational\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 1 2\narrow d 2 3\nrelation 2*a*b - 1/2*c*d + a*d\n";
    let parsed = AlgebraFile::parse(text).unwrap();
    assert_eq!(parsed.to_text(), text);
    let leading = "field prime 101\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation -a*b\n";
    assert_eq!(AlgebraFile::parse(leading).unwrap().to_text(), leading);
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# the A2 quiver\nfield rational\n\nvertex 1 # source\nvertex 2\narrow a 1 2\n";
    let parsed = AlgebraFile::parse(text).unwrap();
    assert_eq!(parsed.build().unwrap().dim(), 3);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let base = "field prime 32003\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n";
    for bad in ["relation a*b +", "relation a**b", "relation + a*b", "loop a", "relation 3*"] {
        let text = format!("{base}{bad}\n");
        assert!(
            matches!(AlgebraFile::parse(&text), Err(Error::Parse(_))),
            "accepted `{bad}`"
        );
    }
    assert!(matches!(AlgebraFile::parse("field prime 12\n"), Err(Error::Parse(_))));
}

#[test]
fn non_parallel_relation_is_a_validation_error() {
    let text = "field prime 32003\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation a*b - a\n";
    assert!(matches!(AlgebraFile::parse(text), Err(Error::RelationNotParallel(_))));
}

#[test]
fn field_override_changes_the_ground_field() {
    let f = &FIXTURES[0];
    let parsed = AlgebraFile::parse_with_field(f.algebra, Some(Field::Rational)).unwrap();
    assert_eq!(parsed.field, Field::Rational);
    assert_eq!(parsed.build().unwrap().field(), Field::Rational);
}

#[test]
fn module_violating_a_relation_is_rejected() {
    let a = AlgebraFile::parse(FIXTURES[0].algebra).unwrap().build().unwrap();
    // delta * alpha must vanish
    let text = "dims 1=1 2=1 4=1\nmatrix delta\n1\nmatrix alpha\n1\n";
    assert!(matches!(parse_module(text, &a), Err(Error::InvalidModule(_))));
    let wrong_shape = "dims 1=1 2=1\nmatrix alpha\n1 0\n";
    assert!(parse_module(wrong_shape, &a).is_err());
}

#[test]
fn structure_constants_round_trip() {
    let a = AlgebraFile::parse(FIXTURES[0].algebra).unwrap().build().unwrap();
    let b = relation_extension(&a).unwrap().b;
    let text = algebra_to_bsa(&b);
    let again = parse_bsa(&text).unwrap();
    assert_eq!(algebra_to_bsa(&again), text);
    assert_eq!(again.quiver_of().arrow_counts(), b.quiver_of().arrow_counts());
    for v in 0..b.num_vertices() {
        let p = crate::modcat::Module::projective(b.clone(), v);
        let q = crate::modcat::Module::projective(again.clone(), v);
        assert_eq!(p.dims(), q.dims());
    }
    let _ = is_isomorphic;
}
