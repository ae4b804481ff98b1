//! Text formats: algebra files (a quiver with relations), module files (matrices per arrow) and
//! the `.bsa` structure-constant format for algebras without a presentation.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Signed;

use crate::algebra::{path_algebra_mod_over, AlgebraData, BasedAlgebra, Quiver, Relation, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Matrix, Scalar};
use crate::modcat::Module;

pub mod fixtures;

#[cfg(test)]
mod tests;

/// Splits off a trailing `#` comment and surrounding whitespace.
fn strip(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

fn parse_err(n: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {}: {msg}", n + 1))
}

/// A quiver with relations over a field, as read from an algebra file.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

/// Parses `[coeff*]a*b*c`.
fn parse_term(field: Field, s: &str, mut negative: bool) -> Result<(Scalar, Vec<String>)> {
    if let Some(rest) = s.strip_prefix('-') {
        negative = !negative;
        return parse_term_unsigned(field, rest, negative);
    }
    parse_term_unsigned(field, s, negative)
}

fn parse_term_unsigned(field: Field, s: &str, negative: bool) -> Result<(Scalar, Vec<String>)> {
    let mut factors: Vec<&str> = s.split('*').map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::Parse(format!("empty factor in `{s}`")));
    }
    let first = factors[0];
    let numeric = first.starts_with(|c: char| c.is_ascii_digit());
    let mut coeff = if numeric {
        factors.remove(0);
        field.parse_scalar(first)?
    } else {
        field.one()
    };
    if factors.is_empty() {
        return Err(Error::Parse(format!("term `{s}` has no arrows")));
    }
    if negative {
        coeff = -coeff;
    }
    Ok((coeff, factors.into_iter().map(str::to_string).collect()))
}

/// Parses `t1 + t2 - t3 ...`; signs must be separated from terms by whitespace.
fn parse_relation(field: Field, s: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut expect_term = true;
    for tok in s.split_whitespace() {
        match (tok, expect_term) {
            ("+", false) => expect_term = true,
            ("-", false) => {
                negative = true;
                expect_term = true;
            }
            (_, true) if tok != "+" && tok != "-" => {
                terms.push(parse_term(field, tok, negative)?);
                negative = false;
                expect_term = false;
            }
            _ => return Err(Error::Parse(format!("malformed relation `{s}`"))),
        }
    }
    if expect_term {
        return Err(Error::Parse(format!("malformed relation `{s}`")));
    }
    Ok(Relation::new(terms))
}

fn format_relation(r: &Relation) -> String {
    let mut out = String::new();
    for (i, (c, path)) in r.terms.iter().enumerate() {
        let neg = match c.as_rational() {
            Some(q) => q.is_negative(),
            None => c.to_i64().is_some_and(|v| v < 0),
        };
        let abs = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            let _ = write!(out, "{abs}*");
        }
        out.push_str(&path.join("*"));
    }
    out
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        AlgebraFile::parse_with_field(text, None)
    }

    /// Parses the file, reading relation coefficients in `field` instead of the declared field
    /// when one is given.
    pub fn parse_with_field(text: &str, field: Option<Field>) -> Result<AlgebraFile> {
        let mut declared = None;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        let mut relation_lines = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = strip(raw);
            if line.is_empty() {
                continue;
            }
            let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match directive {
                "field" => {
                    if declared.is_some() {
                        return Err(parse_err(n, "repeated field line"));
                    }
                    declared = Some(Field::parse(rest).map_err(|e| parse_err(n, e))?);
                }
                "vertex" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 1 {
                        return Err(parse_err(n, "expected `vertex <label>`"));
                    }
                    vertices.push(parts[0].to_string());
                }
                "arrow" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 3 {
                        return Err(parse_err(n, "expected `arrow <label> <source> <target>`"));
                    }
                    arrows.push((parts[0].to_string(), parts[1].to_string(), parts[2].to_string()));
                }
                "relation" => relation_lines.push((n, rest.to_string())),
                other => return Err(parse_err(n, format!("unknown directive `{other}`"))),
            }
        }
        let field = field.or(declared).unwrap_or_default();
        let quiver = Quiver::new(vertices, arrows)?;
        let mut relations = Vec::new();
        for (n, s) in relation_lines {
            let r = parse_relation(field, &s).map_err(|e| parse_err(n, e))?;
            r.resolve(&quiver)?;
            relations.push(r);
        }
        Ok(AlgebraFile {
            field,
            quiver,
            relations,
        })
    }

    /// Canonical text: field, vertices, arrows, relations, one per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\n", self.field.describe());
        for v in &self.quiver.vertices {
            let _ = writeln!(out, "vertex {v}");
        }
        for a in &self.quiver.arrows {
            let _ = writeln!(
                out,
                "arrow {} {} {}",
                a.label, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            );
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", format_relation(r));
        }
        out
    }

    pub fn build(&self) -> Result<Arc<BasedAlgebra>> {
        path_algebra_mod_over(self.field, &self.quiver, &self.relations, DEFAULT_LENGTH_CAP)
    }

    /// The file describing a presented algebra.
    pub fn from_algebra(a: &BasedAlgebra) -> Option<AlgebraFile> {
        let (quiver, relations) = a.presentation()?;
        Some(AlgebraFile {
            field: a.field(),
            quiver: quiver.clone(),
            relations: relations.clone(),
        })
    }
}

/// Generator index for each generator label.
fn generator_labels(a: &BasedAlgebra) -> HashMap<&str, usize> {
    a.generators()
        .iter()
        .enumerate()
        .map(|(gi, &g)| (a.labels()[g].as_str(), gi))
        .collect()
}

/// Reads a module file: `dims <vertex>=<n> ...`, then `matrix <arrow>` followed by one line
/// per row. Omitted vertices have dimension zero and omitted arrows act by zero.
pub fn parse_module(text: &str, a: &Arc<BasedAlgebra>) -> Result<Module> {
    let f = a.field();
    let gens = generator_labels(a);
    let mut dims: Option<Vec<usize>> = None;
    let mut actions: Vec<Option<Matrix>> = vec![None; a.generators().len()];
    let mut current: Option<(usize, Vec<Vec<Scalar>>)> = None;
    let finish = |cur: Option<(usize, Vec<Vec<Scalar>>)>, dims: &[usize], actions: &mut Vec<Option<Matrix>>| -> Result<()> {
        if let Some((gi, rows)) = cur {
            let g = a.generators()[gi];
            let (s, t) = (a.source(g), a.target(g));
            if rows.len() != dims[s] || rows.iter().any(|r| r.len() != dims[t]) {
                return Err(Error::InvalidModule(format!(
                    "matrix of {} must be {}x{}",
                    a.labels()[g],
                    dims[s],
                    dims[t]
                )));
            }
            actions[gi] = Some(Matrix::from_rows(f, dims[t], rows));
        }
        Ok(())
    };
    for (n, raw) in text.lines().enumerate() {
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match directive {
            "dims" => {
                if dims.is_some() {
                    return Err(parse_err(n, "repeated dims line"));
                }
                let mut d = vec![0; a.num_vertices()];
                for item in rest.split_whitespace() {
                    let (v, k) = item
                        .split_once('=')
                        .ok_or_else(|| parse_err(n, format!("expected <vertex>=<n>, got `{item}`")))?;
                    let vi = a
                        .vertex_index(v)
                        .ok_or_else(|| parse_err(n, format!("unknown vertex `{v}`")))?;
                    d[vi] = k.parse().map_err(|_| parse_err(n, format!("bad dimension `{k}`")))?;
                }
                dims = Some(d);
            }
            "matrix" => {
                let d = dims.as_ref().ok_or_else(|| parse_err(n, "matrix before dims"))?;
                finish(current.take(), d, &mut actions)?;
                let label = rest.trim();
                let gi = *gens
                    .get(label)
                    .ok_or_else(|| parse_err(n, format!("unknown arrow `{label}`")))?;
                if actions[gi].is_some() {
                    return Err(parse_err(n, format!("repeated matrix for `{label}`")));
                }
                current = Some((gi, Vec::new()));
            }
            _ => {
                let Some((_, rows)) = current.as_mut() else {
                    return Err(parse_err(n, format!("unknown directive `{directive}`")));
                };
                let row = line
                    .split_whitespace()
                    .map(|s| f.parse_scalar(s))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| parse_err(n, e))?;
                rows.push(row);
            }
        }
    }
    let dims = dims.ok_or_else(|| Error::Parse("module file has no dims line".into()))?;
    finish(current, &dims, &mut actions)?;
    let actions = actions
        .into_iter()
        .enumerate()
        .map(|(gi, m)| {
            let g = a.generators()[gi];
            m.unwrap_or_else(|| Matrix::zeros(f, dims[a.source(g)], dims[a.target(g)]))
        })
        .collect();
    Module::new(a.clone(), dims, actions)
}

/// Module file text; zero matrices are omitted.
pub fn module_to_text(m: &Module) -> String {
    let a = m.algebra();
    let dims: Vec<String> = a
        .vertex_labels()
        .iter()
        .zip(m.dims())
        .map(|(v, d)| format!("{v}={d}"))
        .collect();
    let mut out = format!("dims {}\n", dims.join(" "));
    for (gi, &g) in a.generators().iter().enumerate() {
        let mat = &m.actions()[gi];
        if mat.is_zero() {
            continue;
        }
        let _ = writeln!(out, "matrix {}", a.labels()[g]);
        for r in mat.row_list() {
            let row: Vec<String> = r.iter().map(Scalar::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

/// Structure constants: `field`, `vertex` lines, `basis <label> <source> <target>` lines in
/// basis order, and `product <i> <j> <k> <coeff>` for each nonzero `b_i b_j` coefficient.
pub fn algebra_to_bsa(a: &BasedAlgebra) -> String {
    let mut out = format!("field {}\n", a.field().describe());
    for v in a.vertex_labels() {
        let _ = writeln!(out, "vertex {v}");
    }
    for b in 0..a.dim() {
        let _ = writeln!(
            out,
            "basis {} {} {}",
            a.labels()[b],
            a.vertex_labels()[a.source(b)],
            a.vertex_labels()[a.target(b)]
        );
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for (k, c) in a.product(i, j) {
                let _ = writeln!(out, "product {i} {j} {k} {c}");
            }
        }
    }
    out
}

pub fn parse_bsa(text: &str) -> Result<Arc<BasedAlgebra>> {
    let mut field = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut labels = Vec::new();
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut products = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let vertex = |s: &str| {
            vertices
                .iter()
                .position(|v| v == s)
                .ok_or_else(|| parse_err(n, format!("unknown vertex `{s}`")))
        };
        match parts.as_slice() {
            ["field", rest @ ..] => field = Some(Field::parse(&rest.join(" "))?),
            ["vertex", v] => vertices.push(v.to_string()),
            ["basis", l, s, t] => {
                let (s, t) = (vertex(s)?, vertex(t)?);
                labels.push(l.to_string());
                source.push(s);
                target.push(t);
            }
            ["product", i, j, k, c] => {
                let idx = |s: &str| s.parse::<usize>().map_err(|_| parse_err(n, format!("bad index `{s}`")));
                products.push((idx(i)?, idx(j)?, idx(k)?, c.to_string(), n));
            }
            _ => return Err(parse_err(n, format!("unrecognized line `{line}`"))),
        }
    }
    let field = field.ok_or_else(|| Error::Parse("missing field line".into()))?;
    let dim = labels.len();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (i, j, k, c, n) in products {
        if i >= dim || j >= dim || k >= dim {
            return Err(parse_err(n, "basis index out of range"));
        }
        let c = field.parse_scalar(&c).map_err(|e| parse_err(n, e))?;
        table[i][j].push((k, c));
    }
    for row in &mut table {
        for entry in row.iter_mut() {
            entry.sort_by_key(|(k, _)| *k);
        }
    }
    let idempotents = (0..vertices.len())
        .map(|v| {
            (0..dim)
                .find(|&b| source[b] == v && target[b] == v && table[b][b] == vec![(b, field.one())])
                .ok_or_else(|| Error::InvalidAlgebra(format!("no idempotent at vertex {}", vertices[v])))
        })
        .collect::<Result<Vec<_>>>()?;
    BasedAlgebra::new(AlgebraData {
        field,
        vertex_labels: vertices,
        labels,
        source,
        target,
        idempotents,
        table,
        presentation: None,
    })
}
