//! Auslander–Reiten quivers of representation-finite algebras.
//!
//! The quiver is grown from the indecomposable projectives and injectives. Every discovered
//! module contributes its almost split sequence (the arrows leaving it and its `tau^-`), its
//! `tau` (processed later, giving the arrows into it), and for projectives and injectives the
//! summands of the radical and of the socle quotient.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::functors::{ChangeOfRings, PropertyReport, Witness};
use crate::modcat::{
    almost_split_sequence, decompose, is_indecomposable, is_injective, is_isomorphic,
    is_projective, tau, tau_inv, Extension, Module,
};

#[cfg(test)]
mod tests;

pub const DEFAULT_MAX_NODES: usize = 512;
pub const DEFAULT_MAX_DEPTH: usize = 64;

/// An Auslander–Reiten quiver, or the part of it found within the caps.
#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub nodes: Vec<Module>,
    /// `(source, target, multiplicity)`, sorted.
    pub arrows: Vec<(usize, usize, usize)>,
    /// `(m, tau m)` for every non-projective node whose translate was found.
    pub tau_links: Vec<(usize, usize)>,
    /// False when a cap stopped the search before the frontier emptied.
    pub complete: bool,
}

impl ARQuiver {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the node isomorphic to `m`.
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        for (i, n) in self.nodes.iter().enumerate() {
            if n.dims() == m.dims() && is_isomorphic(n, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn tau_of(&self, i: usize) -> Option<usize> {
        self.tau_links.iter().find(|&&(m, _)| m == i).map(|&(_, t)| t)
    }

    pub fn ensure_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::CapExceeded(format!(
                "incomplete AR quiver: {} nodes found before the cap",
                self.nodes.len()
            )))
        }
    }

    /// Graphviz rendering: nodes labelled by dimension vectors, irreducible maps solid, the
    /// translation dashed from `M` to `tau M`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
        for (i, m) in self.nodes.iter().enumerate() {
            let label: Vec<String> = m.dims().iter().map(usize::to_string).collect();
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", label.join(","));
        }
        for &(a, b, k) in &self.arrows {
            if k == 1 {
                let _ = writeln!(s, "  n{a} -> n{b};");
            } else {
                let _ = writeln!(s, "  n{a} -> n{b} [label=\"{k}\"];");
            }
        }
        for &(m, t) in &self.tau_links {
            let _ = writeln!(s, "  n{m} -> n{t} [style=dashed, constraint=false];");
        }
        s.push_str("}\n");
        s
    }
}

/// The almost split sequence starting at an indecomposable non-injective module, with its
/// exactness and the dimension identity checked.
pub fn ar_sequence(m: &Module) -> Result<Extension> {
    if is_injective(m) {
        return Err(Error::InvalidModule("injective input".into()));
    }
    if !is_indecomposable(m)? {
        return Err(Error::InvalidModule("almost split sequences need an indecomposable module".into()));
    }
    let ses = almost_split_sequence(m)?;
    let right = &ses.right.target;
    if !ses.is_exact() || ses.middle.total_dim() != m.total_dim() + right.total_dim() {
        return Err(Error::InvalidModule("almost split sequence failed its exactness check".into()));
    }
    Ok(ses)
}

struct Knitter {
    nodes: Vec<Module>,
    depth: Vec<usize>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    arrows: BTreeMap<(usize, usize), usize>,
    tau_links: BTreeMap<usize, usize>,
    queue: BinaryHeap<Reverse<(usize, Vec<usize>, usize)>>,
    /// Process larger modules first instead; used to test order independence.
    descending: bool,
    max_nodes: usize,
    max_depth: usize,
    complete: bool,
}

impl Knitter {
    /// Index of `m`, adding it when new. `None` when a cap prevents adding it.
    fn node(&mut self, m: Module, depth: usize) -> Result<Option<usize>> {
        if let Some(list) = self.by_dims.get(m.dims()) {
            for &i in list {
                if is_isomorphic(&self.nodes[i], &m)? {
                    return Ok(Some(i));
                }
            }
        }
        if self.nodes.len() >= self.max_nodes || depth > self.max_depth {
            self.complete = false;
            return Ok(None);
        }
        let i = self.nodes.len();
        let dims = m.dims().to_vec();
        let key = if self.descending {
            usize::MAX - m.total_dim()
        } else {
            m.total_dim()
        };
        self.queue.push(Reverse((key, dims.clone(), i)));
        self.by_dims.entry(dims).or_default().push(i);
        self.nodes.push(m);
        self.depth.push(depth);
        Ok(Some(i))
    }

    /// Records the arrows `from -> each summand` (or `summand -> to`) with multiplicities.
    fn arrows_from_summands(&mut self, fixed: usize, parts: Vec<Module>, outgoing: bool) -> Result<()> {
        let depth = self.depth[fixed] + 1;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for p in parts {
            if let Some(j) = self.node(p, depth)? {
                *counts.entry(j).or_default() += 1;
            }
        }
        for (j, k) in counts {
            let key = if outgoing { (fixed, j) } else { (j, fixed) };
            match self.arrows.insert(key, k) {
                Some(old) if old != k => {
                    return Err(Error::InvalidModule(format!(
                        "inconsistent multiplicity for the arrow {key:?}: {old} and {k}"
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn process(&mut self, i: usize) -> Result<()> {
        let m = self.nodes[i].clone();
        let depth = self.depth[i] + 1;
        if is_projective(&m) {
            let (rad, _) = m.radical();
            self.arrows_from_summands(i, decompose(&rad)?, false)?;
        } else {
            let t = tau(&m);
            if let Some(j) = self.node(t, depth)? {
                self.tau_links.insert(i, j);
            }
        }
        if is_injective(&m) {
            let q = m.quotient(&m.socle_span()).module;
            self.arrows_from_summands(i, decompose(&q)?, true)?;
        } else {
            let ses = ar_sequence(&m)?;
            let next = ses.right.target.clone();
            if !is_isomorphic(&next, &tau_inv(&m))? {
                return Err(Error::InvalidModule("knitted tau^- disagrees with the transpose".into()));
            }
            self.arrows_from_summands(i, decompose(&ses.middle)?, true)?;
            if let Some(j) = self.node(next, depth)? {
                self.tau_links.insert(j, i);
            }
        }
        Ok(())
    }
}

/// Knits the Auslander–Reiten quiver of `a`. Algebras of infinite representation type stop at
/// a cap with `complete` unset.
pub fn knit(a: &Arc<BasedAlgebra>, max_nodes: usize, max_depth: usize) -> Result<ARQuiver> {
    knit_ordered(a, max_nodes, max_depth, false)
}

pub(crate) fn knit_ordered(
    a: &Arc<BasedAlgebra>,
    max_nodes: usize,
    max_depth: usize,
    descending: bool,
) -> Result<ARQuiver> {
    if max_nodes == 0 || max_depth == 0 {
        return Err(Error::InvalidAlgebra("knitting caps must be positive".into()));
    }
    let mut k = Knitter {
        nodes: Vec::new(),
        depth: Vec::new(),
        by_dims: HashMap::new(),
        arrows: BTreeMap::new(),
        tau_links: BTreeMap::new(),
        queue: BinaryHeap::new(),
        descending,
        max_nodes,
        max_depth,
        complete: true,
    };
    for v in 0..a.num_vertices() {
        k.node(Module::projective(a.clone(), v), 0)?;
        k.node(Module::injective(a.clone(), v), 0)?;
    }
    while let Some(Reverse((_, _, i))) = k.queue.pop() {
        k.process(i)?;
    }
    Ok(ARQuiver {
        nodes: k.nodes,
        arrows: k.arrows.into_iter().map(|((s, t), m)| (s, t, m)).collect(),
        tau_links: k.tau_links.into_iter().collect(),
        complete: k.complete,
    })
}

/// For every node of the AR quiver of `B`, looks for a `C`-module it is induced or coinduced
/// from, and checks that the images of the given indecomposable `C`-modules are nodes.
pub fn sweep_thm_7_0(rings: &ChangeOfRings, c_modules: &[Module], ar: &ARQuiver) -> Result<PropertyReport> {
    ar.ensure_complete()?;
    let mut r = PropertyReport::new("thm7.0-sweep");
    let (mut n_ind, mut n_co, mut n_both) = (0, 0, 0);
    for (k, m) in ar.nodes.iter().enumerate() {
        let ind = rings.induced_from(m)?;
        let co = rings.coinduced_from(m)?;
        if let Some(n) = &ind {
            n_ind += 1;
            r.check(
                format!("node {k} is induced from an indecomposable"),
                is_indecomposable(n)?,
                Witness::modules(&[m, n]),
            );
        }
        if let Some(n) = &co {
            n_co += 1;
            r.check(
                format!("node {k} is coinduced from an indecomposable"),
                is_indecomposable(n)?,
                Witness::modules(&[m, n]),
            );
        }
        if ind.is_some() && co.is_some() {
            n_both += 1;
        }
        if is_projective(m) {
            r.check(format!("projective node {k} is induced"), ind.is_some(), Witness::modules(&[m]));
        }
        if is_injective(m) {
            r.check(format!("injective node {k} is coinduced"), co.is_some(), Witness::modules(&[m]));
        }
    }
    for (k, n) in c_modules.iter().enumerate() {
        let i = rings.induce(n)?;
        r.check(
            format!("induced C-module {k} is a node"),
            ar.find(&i)?.is_some(),
            Witness::modules(&[n, &i]),
        );
        let c = rings.coinduce(n)?;
        r.check(
            format!("coinduced C-module {k} is a node"),
            ar.find(&c)?.is_some(),
            Witness::modules(&[n, &c]),
        );
    }
    r.check("induced image is non-empty", n_ind > 0, Witness::default().values(&[n_ind]));
    r.check("coinduced image is non-empty", n_co > 0, Witness::default().values(&[n_co]));
    r.check(
        "coverage by this algebra",
        true,
        Witness::default()
            .values(&[ar.len(), n_ind, n_co, n_both])
            .note("values: nodes, induced, coinduced, both"),
    );
    Ok(r)
}
