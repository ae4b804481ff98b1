use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Arrow endpoints are vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from labels, validating uniqueness and endpoints.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex label {v}")));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (label, s, t) in arrows {
            if index.contains_key(&label) || seen.insert(label.clone(), ()).is_some() {
                return Err(Error::Parse(format!("duplicate arrow label {label}")));
            }
            let source = *index
                .get(&s)
                .ok_or_else(|| Error::Parse(format!("arrow {label}: unknown vertex {s}")))?;
            let target = *index
                .get(&t)
                .ok_or_else(|| Error::Parse(format!("arrow {label}: unknown vertex {t}")))?;
            out.push(Arrow {
                label,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Number of arrows `v -> w` for every ordered pair, indexed `[v][w]`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut c = vec![vec![0; n]; n];
        for a in &self.arrows {
            c[a.source][a.target] += 1;
        }
        c
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A linear combination of parallel paths, each written as a sequence of arrow labels
/// composed left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

/// A relation as `(coefficient, arrow indices)` terms with its common source and target.
pub type ResolvedRelation = (Vec<(Scalar, Vec<usize>)>, usize, usize);

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<String>)>) -> Relation {
        Relation { terms }
    }

    /// A single zero relation `path = 0`.
    pub fn zero_path(field: crate::exactfield::Field, path: &[&str]) -> Relation {
        Relation {
            terms: vec![(field.one(), path.iter().map(|s| s.to_string()).collect())],
        }
    }

    /// A commutativity relation `p = q`.
    pub fn commutativity(field: crate::exactfield::Field, p: &[&str], q: &[&str]) -> Relation {
        Relation {
            terms: vec![
                (field.one(), p.iter().map(|s| s.to_string()).collect()),
                (-field.one(), q.iter().map(|s| s.to_string()).collect()),
            ],
        }
    }

    /// Resolves the relation against a quiver: arrow indices per term, plus common source and
    /// target. Rejects unknown arrows, short or non-composable paths and non-parallel terms.
    pub fn resolve(&self, q: &Quiver) -> Result<ResolvedRelation> {
        if self.terms.is_empty() {
            return Err(Error::Parse("empty relation".into()));
        }
        let mut out = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        for (c, path) in &self.terms {
            if path.len() < 2 {
                return Err(Error::RelationNotParallel(format!(
                    "path {} has length below 2",
                    path.join("*")
                )));
            }
            let mut idx = Vec::new();
            for lbl in path {
                let a = q
                    .arrow_index(lbl)
                    .ok_or_else(|| Error::Parse(format!("unknown arrow {lbl}")))?;
                idx.push(a);
            }
            for w in idx.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::RelationNotParallel(format!(
                        "path {} is not composable",
                        path.join("*")
                    )));
                }
            }
            let st = (q.arrows[idx[0]].source, q.arrows[*idx.last().unwrap()].target);
            match ends {
                None => ends = Some(st),
                Some(e) if e != st => {
                    return Err(Error::RelationNotParallel(format!(
                        "terms of relation do not share endpoints ({})",
                        path.join("*")
                    )))
                }
                _ => {}
            }
            out.push((c.clone(), idx));
        }
        let (s, t) = ends.unwrap();
        Ok((out, s, t))
    }
}
