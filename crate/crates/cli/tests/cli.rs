use std::process::{Command, Output};

fn relext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relext"))
        .args(args)
        .env_remove("RELEXT_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_passes_on_d4() {
    let o = relext(&["check", "thm4.8", "d4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("thm4.8 on d4: pass"));
}

#[test]
fn check_reports_the_nonvanishing_tensor_square() {
    let o = relext(&["check", "ee", "a5-nontilted"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dims (1,0,1,0,0) (1,0,0,0,0) (1,0,0,0,0)"));
}

#[test]
fn check_fails_with_exit_one_when_an_assertion_fails() {
    let o = relext(&["check", "thm4.8", "a5-nontilted"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn unknown_statement_or_fixture_exits_two() {
    assert_eq!(code(&relext(&["check", "prop9.9", "d4"])), 2);
    assert_eq!(code(&relext(&["check", "prop3.4", "nowhere"])), 2);
}

#[test]
fn knit_counts_d6_indecomposables_and_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("ar.dot");
    let o = relext(&["knit", "d6-hereditary", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("nodes 30 "));
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("style=dashed"));
}

#[test]
fn knit_of_infinite_type_stops_at_the_cap() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("kronecker.alg");
    std::fs::write(&file, "field prime 32003\nvertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\n").unwrap();
    let o = relext(&["knit", file.to_str().unwrap(), "--max-nodes", "10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("complete false"));
}

#[test]
fn relation_extension_dimensions() {
    let o = relext(&["relation-extension", "d4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim C=7 dim E=3 dim B=10 new arrows=2"));
    let o = relext(&["relation-extension", "d6-hereditary"]);
    assert!(stdout(&o).contains("dim E=0"));
    let o = relext(&["relation-extension", "d6-tilting"]);
    assert!(stdout(&o).contains("new arrows=2"));
}

#[test]
fn global_dimension_above_two_exits_four() {
    let o = relext(&["relation-extension", "a41-b"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn emitted_structure_constants_reload() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.alg");
    let o = relext(&["relation-extension", "d4", "--emit-algebra", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let bsa = dir.path().join("b.bsa");
    let b = relext::io::parse_bsa(&std::fs::read_to_string(&bsa).unwrap()).unwrap();
    assert_eq!(b.dim(), 10);
    let o = relext(&["algebra", "info", bsa.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim 10"));
}

#[test]
fn algebra_info_reports_global_dimension() {
    let o = relext(&["algebra", "info", "d6-hereditary"]);
    assert!(stdout(&o).contains("gl.dim 1"));
    let o = relext(&["algebra", "info", "d4"]);
    assert!(stdout(&o).contains("dim 7\n"));
    assert!(stdout(&o).contains("gl.dim 2"));
}

#[test]
fn malformed_and_invalid_files_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let base = "field prime 32003\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n";
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, format!("{base}relation a*b +\n")).unwrap();
    assert_eq!(code(&relext(&["algebra", "info", bad.to_str().unwrap()])), 2);
    let invalid = dir.path().join("invalid.alg");
    std::fs::write(&invalid, format!("{base}relation a*b - a\n")).unwrap();
    assert_eq!(code(&relext(&["algebra", "info", invalid.to_str().unwrap()])), 3);
    let module = dir.path().join("m.mod");
    std::fs::write(&module, "dims 1=1 2=1\nmatrix a\n1 1\n").unwrap();
    let good = dir.path().join("good.alg");
    std::fs::write(&good, base).unwrap();
    assert_eq!(
        code(&relext(&["induce", good.to_str().unwrap(), module.to_str().unwrap()])),
        3
    );
}

#[test]
fn induce_echoes_the_module_decomposition() {
    let o = relext(&["induce", "a22", "de.mod", "--ses"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.starts_with("module 0,3,3,0 = 0,0,1,0 + 0,0,1,0 + 0,0,1,0 + 0,1,0,0 + 0,1,0,0 + 0,1,0,0\n"));
    assert!(s.contains("exact=true"));
}

#[test]
fn projective_is_induced_to_projective() {
    let dir = tempfile::tempdir().unwrap();
    let module = dir.path().join("p1.mod");
    std::fs::write(&module, "dims 1=1 2=1 3=1\nmatrix alpha\n1\nmatrix beta\n1\n").unwrap();
    let o = relext(&["induce", "d4", module.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("image 1,1,1,1 = 1,1,1,1"));
}

#[test]
fn json_reports_are_deterministic_and_carry_the_field() {
    let a = relext(&["--json", "check", "prop3.6", "d4"]);
    let b = relext(&["--json", "check", "prop3.6", "d4"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["statement"], "prop3.6");
    assert_eq!(v["fixture"], "d4");
    assert_eq!(v["field"], "prime 32003");
    assert!(v["version"].is_string());
    assert!(v["assertions"][0]["witness"].get("matrices").is_none());
    let full = relext(&["--json", "--witness", "full", "check", "prop3.6", "d4"]);
    let v: serde_json::Value = serde_json::from_slice(&full.stdout).unwrap();
    assert!(v["assertions"][0]["witness"]["matrices"].is_array());
}

#[test]
fn field_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_relext"))
        .args(["--json", "check", "thm4.8", "d4"])
        .env("RELEXT_FIELD", "rational")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], "rational");
}
