mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use relext::functors::{ChangeOfRings, Statement};
use relext::io::{algebra_to_bsa, fixtures, AlgebraFile};
use relext::knitting::{knit, DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES};
use relext::modcat::{decompose, global_dimension};
use relext::tiltext::relation_extension;
use relext::Error;
use serde_json::json;

use input::{field_override, load_algebra, load_module};
use output::{dims_string, report_json, report_text};

/// Largest global dimension `algebra info` looks for.
const GLOBAL_DIMENSION_CAP: usize = 10;

#[derive(Parser)]
#[command(name = "relext", version, about = "Relation extensions, induction and coinduction of modules")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Witness detail in reports: dimension vectors only, or also the module matrices.
    #[arg(long, global = true, value_enum, default_value_t = WitnessLevel::Dims)]
    witness: WitnessLevel,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessLevel {
    Dims,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Facts about an algebra.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Computes E = Ext^2(DC, C) and B = C x E.
    RelationExtension {
        /// Algebra file or fixture id.
        algebra: String,
        /// Write B to this path (as an algebra file when presented, else as `.bsa`).
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
    },
    /// M (x)_C B for a C-module M.
    Induce {
        algebra: String,
        module: String,
        /// Print the exact sequence 0 -> M (x) E -> M (x) B -> M -> 0.
        #[arg(long)]
        ses: bool,
    },
    /// Hom_C(B, M) for a C-module M.
    Coinduce {
        algebra: String,
        module: String,
        /// Print the exact sequence 0 -> M -> Hom_C(B, M) -> Hom_C(E, M) -> 0.
        #[arg(long)]
        ses: bool,
    },
    /// Verifies one statement on a fixture.
    Check { statement: String, fixture: String },
    /// Knits the Auslander-Reiten quiver.
    Knit {
        algebra: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Lists the built-in fixtures.
    Fixtures,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    Info { algebra: String },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 2,
            CliError::Lib(Error::Parse(_) | Error::InvalidField(_)) => 2,
            CliError::Lib(Error::GlobalDimensionTooLarge(_)) => 4,
            CliError::Lib(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => f.write_str(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Writes to stdout, ignoring a closed pipe.
fn out(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn json_text(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n"
}

fn emit(json_mode: bool, value: serde_json::Value, text: String) {
    out(&if json_mode { json_text(&value) } else { text });
}

fn run(cli: &Cli) -> CliResult<u8> {
    let field = field_override()?;
    match &cli.command {
        Command::Algebra {
            command: AlgebraCommand::Info { algebra },
        } => {
            let a = load_algebra(algebra, field)?;
            let layers = a.radical_layers();
            let q = a.quiver_of();
            let gl = global_dimension(&a, GLOBAL_DIMENSION_CAP);
            let arrows: Vec<String> = q
                .arrows
                .iter()
                .map(|x| format!("{}: {} -> {}", x.label, q.vertices[x.source], q.vertices[x.target]))
                .collect();
            let gl_text = gl.map_or(format!("> {GLOBAL_DIMENSION_CAP}"), |d| d.to_string());
            let mut text = format!("field {}\ndim {}\nlayers {:?}\ngl.dim {gl_text}\n", a.field().describe(), a.dim(), layers);
            for s in &arrows {
                text.push_str(&format!("arrow {s}\n"));
            }
            emit(
                cli.json,
                json!({"field": a.field().describe(), "dim": a.dim(), "layers": layers,
                       "arrows": arrows, "global_dimension": gl}),
                text,
            );
            Ok(0)
        }
        Command::RelationExtension { algebra, emit_algebra } => {
            let c = load_algebra(algebra, field)?;
            let ext = relation_extension(&c)?;
            ext.verify().map_err(|e| CliError::Lib(Error::InvalidAlgebra(e)))?;
            let mut text = format!(
                "dim C={} dim E={} dim B={} new arrows={}\n",
                ext.c.dim(),
                ext.dim_e(),
                ext.b.dim(),
                ext.new_arrow_count()
            );
            let mut written = None;
            if let Some(path) = emit_algebra {
                let (path, body) = match AlgebraFile::from_algebra(&ext.b) {
                    Some(file) => (path.clone(), file.to_text()),
                    None => (path.with_extension("bsa"), algebra_to_bsa(&ext.b)),
                };
                std::fs::write(&path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                text.push_str(&format!("wrote {}\n", path.display()));
                written = Some(path.display().to_string());
            }
            emit(
                cli.json,
                json!({"dim_c": ext.c.dim(), "dim_e": ext.dim_e(), "dim_b": ext.b.dim(),
                       "new_arrows": ext.new_arrow_count(), "written": written}),
                text,
            );
            Ok(0)
        }
        Command::Induce { algebra, module, ses } | Command::Coinduce { algebra, module, ses } => {
            let inducing = matches!(cli.command, Command::Induce { .. });
            let c = load_algebra(algebra, field)?;
            let m = load_module(algebra, module, &c)?;
            let ext = relation_extension(&c)?;
            let rings = ChangeOfRings::new(&ext)?;
            let image = if inducing { rings.induce(&m)? } else { rings.coinduce(&m)? };
            let input: Vec<String> = decompose(&m)?.iter().map(|p| dims_string(p.dims())).collect();
            let parts: Vec<String> = decompose(&image)?.iter().map(|p| dims_string(p.dims())).collect();
            let mut text = format!(
                "module {} = {}\nimage {} = {}\n",
                dims_string(m.dims()),
                input.join(" + "),
                dims_string(image.dims()),
                parts.join(" + ")
            );
            let mut value = json!({"module": {"dims": m.dims(), "summands": input},
                                   "image": {"dims": image.dims(), "summands": parts}});
            if *ses {
                let s = if inducing { rings.induced_ses(&m)? } else { rings.coinduced_ses(&m)? };
                let terms = [s.left(), s.middle(), s.right()].map(|t| dims_string(t.dims()));
                text.push_str(&format!(
                    "0 -> {} -> {} -> {} -> 0 exact={}\n",
                    terms[0],
                    terms[1],
                    terms[2],
                    s.is_certified()
                ));
                value["ses"] = json!({"terms": terms, "exact": s.is_certified()});
            }
            emit(cli.json, value, text);
            Ok(0)
        }
        Command::Check { statement, fixture } => {
            let st: Statement = statement.parse()?;
            let fx = fixtures::get(fixture)?;
            let loaded = fx.load(field)?;
            let ctx = loaded.context()?;
            let report = ctx.verify(st)?;
            let field_desc = ctx.rings.ext.c.field().describe();
            let full = cli.witness == WitnessLevel::Full;
            if cli.json {
                out(&json_text(&report_json(&report, fixture, &field_desc, full)));
            } else {
                out(&report_text(&report, fixture, full));
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Knit {
            algebra,
            dot,
            max_nodes,
            max_depth,
        } => {
            let a = load_algebra(algebra, field)?;
            let ar = knit(&a, *max_nodes, *max_depth)?;
            let nodes: Vec<String> = ar.nodes.iter().map(|m| dims_string(m.dims())).collect();
            let mut text = format!(
                "nodes {} arrows {} complete {}\n",
                ar.len(),
                ar.arrows.len(),
                ar.complete
            );
            for n in &nodes {
                text.push_str(&format!("  {n}\n"));
            }
            if let Some(path) = dot {
                std::fs::write(path, ar.to_dot()).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            emit(
                cli.json,
                json!({"nodes": nodes, "arrows": ar.arrows, "tau": ar.tau_links, "complete": ar.complete}),
                text,
            );
            Ok(0)
        }
        Command::Fixtures => {
            let ids: Vec<&str> = fixtures::FIXTURES.iter().map(|f| f.id).collect();
            emit(cli.json, json!(ids), ids.iter().map(|s| format!("{s}\n")).collect());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
