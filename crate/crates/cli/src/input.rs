use std::path::Path;
use std::sync::Arc;

use relext::algebra::BasedAlgebra;
use relext::exactfield::Field;
use relext::io::{fixtures, parse_bsa, parse_module, AlgebraFile};
use relext::modcat::Module;
use relext::Error;

use crate::{CliError, CliResult};

/// Environment variable overriding the field declared in algebra files.
pub const FIELD_VAR: &str = "RELEXT_FIELD";

pub fn field_override() -> CliResult<Option<Field>> {
    match std::env::var(FIELD_VAR) {
        Ok(s) if !s.trim().is_empty() => Ok(Some(Field::parse(&s)?)),
        _ => Ok(None),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// An algebra file (`.bsa` files hold structure constants) or a fixture id. For a tilting
/// fixture the algebra is the tilted algebra.
pub fn load_algebra(spec: &str, field: Option<Field>) -> CliResult<Arc<BasedAlgebra>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = read(path)?;
        if path.extension().is_some_and(|e| e == "bsa") {
            return Ok(parse_bsa(&text)?);
        }
        return Ok(AlgebraFile::parse_with_field(&text, field)?.build()?);
    }
    match fixtures::get(spec) {
        Ok(fx) => Ok(fx.load(field)?.c()),
        Err(_) => Err(CliError::Io(format!("{spec}: no such file or fixture"))),
    }
}

/// A module file, or the name of a module file of the fixture given as the algebra.
pub fn load_module(algebra_spec: &str, spec: &str, algebra: &Arc<BasedAlgebra>) -> CliResult<Module> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(parse_module(&read(path)?, algebra)?);
    }
    let fx = fixtures::get(algebra_spec).map_err(|_| CliError::Io(format!("{spec}: no such file")))?;
    let (_, text) = fx
        .modules
        .iter()
        .find(|(name, _)| *name == spec)
        .ok_or_else(|| CliError::Lib(Error::Parse(format!("fixture {} has no module {spec}", fx.id))))?;
    Ok(parse_module(text, algebra)?)
}
