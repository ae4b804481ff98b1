use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::based::{AlgebraData, BasedAlgebra, Sparse};
use super::quiver::{Quiver, Relation, ResolvedRelation};
use crate::error::{Error, Result};
use crate::exactfield::{EchelonBasis, Field, Scalar};

pub const DEFAULT_LENGTH_CAP: usize = 20;

/// Upper bound on the number of paths enumerated while searching for the nilpotency index.
const MAX_PATHS: usize = 60_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    arrows: Vec<usize>,
}

struct PathSpace<'q> {
    quiver: &'q Quiver,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl<'q> PathSpace<'q> {
    /// All paths of length at most `max_len`.
    fn new(quiver: &'q Quiver, max_len: usize) -> Result<Self> {
        let mut paths: Vec<Path> = (0..quiver.vertices.len())
            .map(|v| Path {
                start: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut layer: Vec<Path> = paths.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                let end = Self::end_of(quiver, p);
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == end {
                        let mut q = p.clone();
                        q.arrows.push(ai);
                        next.push(q);
                    }
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() > MAX_PATHS {
                return Err(Error::NotAdmissible(format!(
                    "more than {MAX_PATHS} paths of length at most {max_len}"
                )));
            }
            layer = next;
        }
        let index = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(PathSpace {
            quiver,
            paths,
            index,
        })
    }

    fn end_of(q: &Quiver, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| q.arrows[a].target)
    }

    fn end(&self, p: &Path) -> usize {
        Self::end_of(self.quiver, p)
    }

    fn label_seq(&self, p: &Path) -> Vec<&str> {
        p.arrows
            .iter()
            .map(|&a| self.quiver.arrows[a].label.as_str())
            .collect()
    }

    /// Shortest-then-lexicographic order on paths (ties on trivial paths broken by vertex).
    fn cmp(&self, a: &Path, b: &Path) -> Ordering {
        a.arrows
            .len()
            .cmp(&b.arrows.len())
            .then_with(|| self.label_seq(a).cmp(&self.label_seq(b)))
            .then_with(|| a.start.cmp(&b.start))
    }

    fn label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.quiver.vertices[p.start])
        } else {
            self.label_seq(p).join("*")
        }
    }
}

/// The path algebra of `q` modulo the ideal generated by `rels`.
///
/// The basis consists of path monomials, preferring shorter paths and then lexicographically
/// smaller arrow-label sequences; every other path rewrites into them.
/// The ideal is assumed admissible: the procedure finds the least `N` with every path of length
/// `N` lying in `I + rad^(N+1)`, which for admissible `I` means `rad^N` is contained in `I`.
pub fn path_algebra_mod(q: &Quiver, rels: &[Relation], length_cap: usize) -> Result<Arc<BasedAlgebra>> {
    if length_cap < 2 {
        return Err(Error::NotAdmissible("length cap must be at least 2".into()));
    }
    let field = rels
        .iter()
        .flat_map(|r| r.terms.iter().map(|(c, _)| c.field()))
        .next()
        .unwrap_or_default();
    path_algebra_mod_over(field, q, rels, length_cap)
}

/// As [`path_algebra_mod`], with the field given explicitly (needed when there are no relations).
pub fn path_algebra_mod_over(
    field: Field,
    q: &Quiver,
    rels: &[Relation],
    length_cap: usize,
) -> Result<Arc<BasedAlgebra>> {
    let resolved: Vec<_> = rels.iter().map(|r| r.resolve(q)).collect::<Result<_>>()?;
    for (terms, _, _) in &resolved {
        for (c, _) in terms {
            if c.field() != field {
                return Err(Error::InvalidField("relation coefficients over a different field".into()));
            }
        }
    }
    for n in 1..=length_cap {
        let space = PathSpace::new(q, n)?;
        let (echelon, order) = ideal_in_truncation(&space, &resolved, n, field);
        let all_top_in_ideal = space
            .paths
            .iter()
            .filter(|p| p.arrows.len() == n)
            .all(|p| echelon.contains(&unit(field, order.len(), order[space.index[p]])));
        if all_top_in_ideal {
            return assemble(field, q, rels, &space, &echelon, &order, n);
        }
    }
    Err(Error::NotAdmissible(format!(
        "quotient did not stabilize below length {length_cap}"
    )))
}

fn unit(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// Span of all `u r v` truncated to paths of length at most `n`, in a column order that puts
/// the largest monomials first. Returns the echelon basis and the column of each path.
fn ideal_in_truncation(
    space: &PathSpace,
    rels: &[ResolvedRelation],
    n: usize,
    field: Field,
) -> (EchelonBasis, Vec<usize>) {
    let m = space.paths.len();
    let mut sorted: Vec<usize> = (0..m).collect();
    sorted.sort_by(|&a, &b| space.cmp(&space.paths[b], &space.paths[a]));
    let mut order = vec![0; m];
    for (col, &p) in sorted.iter().enumerate() {
        order[p] = col;
    }
    let mut ech = EchelonBasis::new(field, m);
    for (terms, s, t) in rels {
        let min_len = terms.iter().map(|(_, p)| p.len()).min().unwrap();
        if min_len > n {
            continue;
        }
        let lefts: Vec<&Path> = space
            .paths
            .iter()
            .filter(|u| space.end(u) == *s && u.arrows.len() + min_len <= n)
            .collect();
        let rights: Vec<&Path> = space
            .paths
            .iter()
            .filter(|v| v.start == *t && v.arrows.len() + min_len <= n)
            .collect();
        for u in &lefts {
            for v in &rights {
                if u.arrows.len() + v.arrows.len() + min_len > n {
                    continue;
                }
                let mut vec = vec![field.zero(); m];
                let mut any = false;
                for (c, p) in terms {
                    let len = u.arrows.len() + p.len() + v.arrows.len();
                    if len > n {
                        continue;
                    }
                    let mut arrows = u.arrows.clone();
                    arrows.extend_from_slice(p);
                    arrows.extend_from_slice(&v.arrows);
                    let path = Path {
                        start: u.start,
                        arrows,
                    };
                    let col = order[space.index[&path]];
                    vec[col] += c;
                    any = true;
                }
                if any {
                    ech.insert(&vec);
                }
            }
        }
    }
    (ech, order)
}

fn assemble(
    field: Field,
    q: &Quiver,
    rels: &[Relation],
    space: &PathSpace,
    ech: &EchelonBasis,
    order: &[usize],
    n: usize,
) -> Result<Arc<BasedAlgebra>> {
    let m = space.paths.len();
    let mut is_pivot = vec![false; m];
    for &p in ech.pivots() {
        is_pivot[p] = true;
    }
    // standard monomials in shortest-then-lex order
    let mut standard: Vec<usize> = (0..m).filter(|&p| !is_pivot[order[p]]).collect();
    standard.sort_by(|&a, &b| space.cmp(&space.paths[a], &space.paths[b]));
    // trivial paths first, in vertex order (they are the shortest)
    let mut basis_of_col = HashMap::new();
    for (bi, &p) in standard.iter().enumerate() {
        basis_of_col.insert(order[p], bi);
    }
    let normal_form = |path: &Path| -> Sparse {
        if path.arrows.len() >= n {
            return Vec::new();
        }
        let col = order[space.index[path]];
        let reduced = ech.reduce(&unit(field, m, col));
        let mut out: Sparse = reduced
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(c, x)| (basis_of_col[&c], x))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    };
    let dim = standard.len();
    let paths: Vec<&Path> = standard.iter().map(|&p| &space.paths[p]).collect();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let (a, b) = (paths[i], paths[j]);
            if space.end(a) != b.start {
                continue;
            }
            let mut arrows = a.arrows.clone();
            arrows.extend_from_slice(&b.arrows);
            table[i][j] = normal_form(&Path {
                start: a.start,
                arrows,
            });
        }
    }
    let idempotents = (0..q.vertices.len())
        .map(|v| {
            paths
                .iter()
                .position(|p| p.arrows.is_empty() && p.start == v)
                .expect("trivial paths survive")
        })
        .collect();
    let data = AlgebraData {
        field,
        vertex_labels: q.vertices.clone(),
        labels: paths.iter().map(|p| space.label(p)).collect(),
        source: paths.iter().map(|p| p.start).collect(),
        target: paths.iter().map(|p| space.end(p)).collect(),
        idempotents,
        table,
        presentation: Some((q.clone(), rels.to_vec())),
    };
    BasedAlgebra::new(data)
}

/// The element of a presented algebra given by a path of arrow labels, in basis coordinates.
pub fn path_element(alg: &BasedAlgebra, labels: &[&str]) -> Option<Vec<Scalar>> {
    let mut cur: Option<Vec<Scalar>> = None;
    for l in labels {
        let b = alg.labels().iter().position(|x| x == l)?;
        let elt = alg.basis_element(b);
        cur = Some(match cur {
            None => elt,
            Some(c) => alg.mul(&c, &elt),
        });
    }
    cur
}
