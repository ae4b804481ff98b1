use relext::functors::{PropertyReport, Status};
use relext::modcat::Module;
use serde_json::{json, Value};

pub fn dims_string(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

/// Matrices of each generator, rows as strings of field elements.
fn module_matrices(m: &Module) -> Value {
    let a = m.algebra();
    let mut out = serde_json::Map::new();
    for (gi, &g) in a.generators().iter().enumerate() {
        let rows: Vec<Vec<String>> = m.actions()[gi]
            .row_list()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        out.insert(a.labels()[g].clone(), json!(rows));
    }
    Value::Object(out)
}

pub fn report_json(report: &PropertyReport, fixture: &str, field: &str, full: bool) -> Value {
    let assertions: Vec<Value> = report
        .assertions
        .iter()
        .map(|a| {
            let mut v = serde_json::to_value(a).expect("assertions serialize");
            if full {
                v["witness"]["matrices"] = a.witness.modules.iter().map(module_matrices).collect();
            }
            v
        })
        .collect();
    json!({
        "statement": report.statement,
        "fixture": fixture,
        "assertions": assertions,
        "version": env!("CARGO_PKG_VERSION"),
        "field": field,
    })
}

pub fn report_text(report: &PropertyReport, fixture: &str, full: bool) -> String {
    let passed = report.assertions.iter().filter(|a| a.status == Status::Pass).count();
    let verdict = if report.passed() { "pass" } else { "FAIL" };
    let mut s = format!(
        "{} on {fixture}: {verdict} ({passed}/{} assertions)\n",
        report.statement,
        report.assertions.len()
    );
    for a in &report.assertions {
        let dims: Vec<String> = a.witness.dims.iter().map(|d| format!("({})", dims_string(d))).collect();
        s.push_str(&format!("  {:4} {}", status_word(a.status), a.name));
        if !dims.is_empty() {
            s.push_str(&format!("  dims {}", dims.join(" ")));
        }
        if !a.witness.values.is_empty() {
            s.push_str(&format!("  values {:?}", a.witness.values));
        }
        if !a.witness.note.is_empty() {
            s.push_str(&format!("  [{}]", a.witness.note));
        }
        s.push('\n');
        if full {
            for m in &a.witness.modules {
                for line in relext::io::module_to_text(m).lines() {
                    s.push_str(&format!("      {line}\n"));
                }
            }
        }
    }
    s
}
