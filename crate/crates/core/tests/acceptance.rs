//! One line per acceptance criterion, with the exact values behind the verdict.

mod common;

use std::time::{Duration, Instant};

use common::{
    case, check_adjunction, check_algebra, check_decompose, check_ext_duality, printed, printed_iso, shape,
    summand_dims, tits_roots,
};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use relext::functors::{has_property, ChangeOfRings, Property, Statement, VerifyContext};
use relext::io::fixtures::{self, Loaded, FIXTURES};
use relext::knitting::{knit, sweep_thm_7_0, DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES};
use relext::modcat::{global_dimension, is_indecomposable, is_isomorphic, tau, Module};

const PROPERTY_CASES: u32 = 256;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn load(id: &str) -> Loaded {
    fixtures::get(id).unwrap().load(None).unwrap()
}

/// Fixtures whose algebra has a relation extension, with their verification contexts.
fn contexts() -> Vec<(&'static str, VerifyContext)> {
    FIXTURES
        .iter()
        .filter_map(|f| {
            let l = f.load(None).unwrap();
            l.extension().ok()?;
            Some((f.id, l.context().unwrap()))
        })
        .collect()
}

fn dims_list(d: &[Vec<usize>]) -> String {
    let parts: Vec<String> = d
        .iter()
        .map(|v| v.iter().map(usize::to_string).collect::<Vec<_>>().join(""))
        .collect();
    format!("[{}]", parts.join(" "))
}

fn e_computation() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let start = Instant::now();
    let ext = load("d4").extension().unwrap();
    let (e, de) = (summand_dims(&ext.e_module()), summand_dims(&ext.de_module()));
    pass &= e == vec![vec![0, 0, 0, 1]; 3] && de == vec![vec![1, 1, 1, 0]];
    let d4_time = start.elapsed();
    detail.push(format!("d4 E={} DE={} ({} ms)", dims_list(&e), dims_list(&de), d4_time.as_millis()));
    let start = Instant::now();
    let ext = load("a22").extension().unwrap();
    let (e, de) = (summand_dims(&ext.e_module()), summand_dims(&ext.de_module()));
    let te = summand_dims(&tau(&ext.e_module()));
    let mut de_expected = vec![vec![0, 1, 0, 0]; 3];
    de_expected.extend(vec![vec![0, 0, 1, 0]; 3]);
    de_expected.sort();
    pass &= e == vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1]] && de == de_expected && te == vec![vec![1, 0, 0, 1]; 2];
    let a22_time = start.elapsed();
    detail.push(format!(
        "a22 E={} DE={} tauE={} ({} ms)",
        dims_list(&e),
        dims_list(&de),
        dims_list(&te),
        a22_time.as_millis()
    ));
    pass &= d4_time < Duration::from_secs(1) && a22_time < Duration::from_secs(1);
    outcome(pass, detail.join("; "))
}

fn e_as_translate(ctxs: &[(&str, VerifyContext)]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (id, ctx) in ctxs {
        match global_dimension(&ctx.rings.ext.c, 4) {
            Some(2) => {
                let r = ctx.verify(Statement::Prop41).unwrap();
                pass &= r.passed();
                detail.push(format!("{id} {}/{}", r.assertions.len() - r.failures().count(), r.assertions.len()));
            }
            Some(d) if d <= 1 => {
                let zero = ctx.rings.ext.dim_e() == 0;
                pass &= zero;
                detail.push(format!("{id} dim E={}", ctx.rings.ext.dim_e()));
            }
            _ => {}
        }
    }
    outcome(pass, detail.join(", "))
}

fn de_tilting(ctxs: &[(&str, VerifyContext)]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (id, ctx) in ctxs.iter().filter(|(id, _)| ["d4", "a22", "d6-tilting"].contains(id)) {
        let de = ctx.rings.ext.de_module();
        let ind = ctx.rings.induce(&de).unwrap();
        let ok = [&de, &ind].iter().all(|m| {
            has_property(m, Property::PartialTilting).unwrap() && has_property(m, Property::TauRigid).unwrap()
        });
        let report = ctx.verify(Statement::Thm48).unwrap();
        pass &= ok && report.passed();
        detail.push(format!("{id} DE and DE(x)B partial tilting, tau-rigid: {ok}"));
    }
    let a22 = &ctxs.iter().find(|(id, _)| *id == "a22").unwrap().1;
    let rigid = has_property(&a22.rings.ext.e_module(), Property::TauRigid).unwrap();
    pass &= !rigid;
    detail.push(format!("a22 E tau-rigid: {rigid}"));
    outcome(pass, detail.join("; "))
}

fn e_tensor_e(ctxs: &[(&str, VerifyContext)]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (id, ctx) in ctxs {
        let ee = ctx.rings.tensor_e(&ctx.rings.ext.e_module()).unwrap();
        if ctx.tilted {
            pass &= ee.is_zero();
            detail.push(format!("{id} dim={}", ee.total_dim()));
        } else {
            let s1 = Module::simple(ctx.rings.ext.c.clone(), 0);
            let ok = is_isomorphic(&ee, &s1).unwrap();
            pass &= ok;
            detail.push(format!("{id} dims={:?} iso S(1): {ok}", ee.dims()));
        }
    }
    outcome(pass, detail.join(", "))
}

fn exactness_and_exchange(ctxs: &[(&str, VerifyContext)]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (id, ctx) in ctxs {
        let mut counts = Vec::new();
        for st in [Statement::Prop36, Statement::Lemma38, Statement::Prop34] {
            let r = ctx.verify(st).unwrap();
            pass &= r.passed();
            counts.push(format!("{st} {}/{}", r.assertions.len() - r.failures().count(), r.assertions.len()));
        }
        detail.push(format!("{id} (sweep {}): {}", ctx.sweep.len(), counts.join(" ")));
    }
    outcome(pass, detail.join("; "))
}

fn presentation_match() -> Outcome {
    let l = load("d6-tilting");
    let ext = l.extension().unwrap();
    let b_printed = printed("d6-tilting", "b-printed.alg");
    let q = ext.b.quiver_of();
    let mut pass = q.arrows.len() == 8
        && q.arrow_counts() == b_printed.quiver_of().arrow_counts()
        && ext.b.dim() == b_printed.dim();
    let mut detail = vec![format!(
        "d6-tilting arrows={} dim B={} printed dim={}",
        q.arrows.len(),
        ext.b.dim(),
        b_printed.dim()
    )];
    let b = load("a41-b").algebra;
    for id in ["a41-c", "a41-cprime"] {
        let ext = load(id).extension().unwrap();
        let same = ext.b.quiver_of().arrow_counts() == b.quiver_of().arrow_counts();
        printed_iso(&b, &ext);
        pass &= same;
        detail.push(format!("{id} arrows={} matches printed B: {same}", ext.b.quiver_of().arrows.len()));
    }
    outcome(pass, detail.join("; "))
}

fn knitting() -> Outcome {
    let start = Instant::now();
    let h = load("d6-hereditary");
    let roots = tits_roots(&h.algebra, 2);
    let ar = knit(&h.algebra, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let mut dims: Vec<Vec<usize>> = ar.nodes.iter().map(|m| m.dims().to_vec()).collect();
    dims.sort();
    let mut pass = ar.complete && ar.len() == 30 && dims == roots;
    let l = load("d6-tilting");
    let ext = l.extension().unwrap();
    let ar_c = knit(&ext.c, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let ar_b = knit(&ext.b, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    pass &= ar_c.complete && ar_b.complete;
    let report = l.context().unwrap().verify(Statement::Figure1Regions).unwrap();
    let overlap = report
        .assertions
        .iter()
        .find_map(|a| (a.witness.values.len() == 3).then(|| a.witness.values[2]));
    pass &= report.passed() && overlap == Some(4);
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(30);
    outcome(
        pass,
        format!(
            "d6-hereditary nodes={} roots={}; d6-tilting C nodes={} B nodes={} overlap={:?} ({} ms)",
            ar.len(),
            roots.len(),
            ar_c.len(),
            ar_b.len(),
            overlap,
            elapsed.as_millis()
        ),
    )
}

fn coverage_sweep() -> Outcome {
    let l = load("d6-tilting");
    let ext = l.extension().unwrap();
    let rings = ChangeOfRings::new(&ext).unwrap();
    let ar = knit(&ext.b, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH).unwrap();
    let report = sweep_thm_7_0(&rings, &l.sweep().unwrap(), &ar).unwrap();
    let values = report
        .assertions
        .iter()
        .find(|a| a.name == "coverage by this algebra")
        .map(|a| a.witness.values.clone())
        .unwrap_or_default();
    outcome(
        report.passed(),
        format!(
            "{} assertions, {} failed; nodes, induced, coinduced, both = {:?}",
            report.assertions.len(),
            report.failures().count(),
            values
        ),
    )
}

fn tube_check() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let c = load("a41-c");
    let rings = ChangeOfRings::new(&c.extension().unwrap()).unwrap();
    let coray: [(&str, [usize; 5]); 5] = [
        ("coray-2315.mod", [1, 1, 2, 1, 1]),
        ("coray-315.mod", [1, 0, 2, 1, 1]),
        ("coray-3415.mod", [1, 0, 2, 2, 1]),
        ("coray-15.mod", [1, 0, 1, 1, 1]),
        ("coray-231155.mod", [2, 1, 2, 1, 2]),
    ];
    let mut ok = 0;
    for (name, dims) in coray {
        let ind = rings.induce(c.module(name).unwrap()).unwrap();
        if ind.dims() == dims && is_indecomposable(&ind).unwrap() {
            ok += 1;
        }
    }
    pass &= ok == coray.len();
    detail.push(format!("coray induced {ok}/{}", coray.len()));
    let cp = load("a41-cprime");
    let rings = ChangeOfRings::new(&cp.extension().unwrap()).unwrap();
    let ray: [(&str, [usize; 5]); 3] = [
        ("ray-1534.mod", [1, 1, 2, 1, 1]),
        ("ray-153.mod", [1, 1, 2, 0, 1]),
        ("ray-1523.mod", [1, 2, 2, 0, 1]),
    ];
    let mut ok = 0;
    for (name, dims) in ray {
        let co = rings.coinduce(cp.module(name).unwrap()).unwrap();
        if co.dims() == dims && is_indecomposable(&co).unwrap() {
            ok += 1;
        }
    }
    pass &= ok == ray.len();
    detail.push(format!("ray coinduced {ok}/{}", ray.len()));
    let fb = load("a41-b");
    for id in ["a41-c", "a41-cprime"] {
        let ext = load(id).extension().unwrap();
        let to_printed = printed_iso(&fb.algebra, &ext).inverse().unwrap();
        let rings = ChangeOfRings::new(&ext).unwrap();
        let mut hits = 0;
        for (_, m) in &fb.modules {
            let n = m.pullback(&to_printed).unwrap();
            if rings.induced_from(&n).unwrap().is_some() || rings.coinduced_from(&n).unwrap().is_some() {
                hits += 1;
            }
        }
        pass &= hits == 0;
        detail.push(format!("bold modules in the images from {id}: {hits}/{}", fb.modules.len()));
    }
    outcome(pass, detail.join("; "))
}

fn property_floor() -> Outcome {
    let start = Instant::now();
    let config = Config {
        failure_persistence: None,
        ..Config::with_cases(PROPERTY_CASES)
    };
    let runner = || TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let results = [
        ("algebra", runner().run(&shape(), |s| check_algebra(&s)).map_err(|e| e.to_string())),
        (
            "adjunction",
            runner()
                .run(&case(), |(s, u, v, c)| check_adjunction(&s, u, v, &c))
                .map_err(|e| e.to_string()),
        ),
        (
            "decompose",
            runner()
                .run(&case(), |(s, u, v, c)| check_decompose(&s, u, v, &c))
                .map_err(|e| e.to_string()),
        ),
        (
            "ext duality",
            runner()
                .run(&case(), |(s, u, v, c)| check_ext_duality(&s, u, v, &c))
                .map_err(|e| e.to_string()),
        ),
    ];
    let elapsed = start.elapsed();
    let mut pass = elapsed < Duration::from_secs(60);
    let mut detail = Vec::new();
    for (name, r) in results {
        match r {
            Ok(()) => detail.push(format!("{name} {PROPERTY_CASES}/{PROPERTY_CASES}")),
            Err(e) => {
                pass = false;
                detail.push(format!("{name} failed: {e}"));
            }
        }
    }
    outcome(pass, format!("{} ({} ms)", detail.join(", "), elapsed.as_millis()))
}

fn main() {
    let ctxs = contexts();
    let criteria: Vec<Criterion> = vec![
        ("E-computation", Box::new(e_computation)),
        ("E from translates and syzygies", Box::new(|| e_as_translate(&ctxs))),
        ("DE partial tilting and tau-rigid", Box::new(|| de_tilting(&ctxs))),
        ("E (x) E", Box::new(|| e_tensor_e(&ctxs))),
        ("exact sequences, tau exchange, projectives", Box::new(|| exactness_and_exchange(&ctxs))),
        ("relation-extension presentation match", Box::new(presentation_match)),
        ("knitting", Box::new(knitting)),
        ("coverage sweep", Box::new(coverage_sweep)),
        ("tube modules", Box::new(tube_check)),
        ("property-based floor", Box::new(property_floor)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {}: {} | {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
