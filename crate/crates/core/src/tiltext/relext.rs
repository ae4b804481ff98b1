use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraData, AlgebraMap, BasedAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::exactfield::{Matrix, QuotientSpace, Scalar};
use crate::modcat::{
    ensure_global_dimension, lift_chain_map, Bimodule, Module, ModuleHom, ProjLayout, ProjMap, ProjectiveResolution,
};

/// Largest global dimension for which `Ext^2(DC, C)` is computed.
const MAX_GLOBAL_DIMENSION: usize = 2;

/// Bookkeeping for one right vertex `w` of `E`: the resolution of `I(w)` and, for every left
/// vertex `u`, the quotient `Ext^2(I(w), P(u))` of the `u`-part of `Hom(P_2, C)`.
struct Column {
    res: ProjectiveResolution,
    /// For each cochain coordinate: the left vertex (source of the algebra basis element).
    left_of: Vec<usize>,
    /// Cochain coordinates with a given left vertex.
    part: Vec<Vec<usize>>,
    quotients: Vec<QuotientSpace>,
    /// Start of each left-vertex block inside `E e_w`.
    start: Vec<usize>,
}

/// `E = Ext^2_C(DC, C)` as a `C`-`C` bimodule, so that `e_u E e_w = Ext^2_C(I(w), P(u))`.
///
/// The left action comes from left multiplication on `C`. The right action of `c` in
/// `e_w C e_w'` comes from the map `I(w') -> I(w)` given by left multiplication on `DC`, lifted
/// to the projective resolutions. The action is computed from two different lifts and they are
/// required to agree.
pub fn compute_e(c: &Arc<BasedAlgebra>) -> Result<Bimodule> {
    let f = c.field();
    let nv = c.num_vertices();
    let all: Vec<usize> = (0..nv).collect();
    // bounding pd of the injectives is not enough: Gorenstein algebras pass that test
    ensure_global_dimension(c, MAX_GLOBAL_DIMENSION)?;
    let creg = Module::regular(c.clone());
    let clay = ProjLayout::new(c, &all);
    let mut cols = Vec::with_capacity(nv);
    for w in 0..nv {
        let inj = Module::injective(c.clone(), w);
        let res = ProjectiveResolution::new(&inj, MAX_GLOBAL_DIMENSION + 1);
        match res.projective_dimension() {
            Some(d) if d <= MAX_GLOBAL_DIMENSION => {}
            Some(d) => return Err(Error::GlobalDimensionTooLarge(d)),
            None => return Err(Error::GlobalDimensionTooLarge(MAX_GLOBAL_DIMENSION + 1)),
        }
        let mut left_of = Vec::new();
        if let Some(p2) = res.terms.get(2) {
            for &v in p2 {
                for &(u, _) in &clay.coords[v] {
                    left_of.push(u);
                }
            }
        }
        let part: Vec<Vec<usize>> = (0..nv)
            .map(|u| (0..left_of.len()).filter(|&k| left_of[k] == u).collect())
            .collect();
        let d2 = res.cochain_differential(2, &creg);
        let quotients: Vec<QuotientSpace> = part
            .iter()
            .map(|p| {
                let all_rows: Vec<usize> = (0..d2.rows()).collect();
                QuotientSpace::new(f, p.len(), &d2.submatrix(&all_rows, p))
            })
            .collect();
        let mut start = Vec::with_capacity(nv + 1);
        let mut acc = 0;
        for q in &quotients {
            start.push(acc);
            acc += q.dim();
        }
        start.push(acc);
        cols.push(Column {
            res,
            left_of,
            part,
            quotients,
            start,
        });
    }
    let dims: Vec<usize> = cols.iter().map(|c| c.start[nv]).collect();

    // right action
    let mut right_actions = Vec::with_capacity(c.generators().len());
    for &g in c.generators() {
        let (w, w2) = (c.source(g), c.target(g));
        let l = left_multiplication_on_injectives(c, g);
        let a = pulled_back_action(c, &creg, &cols, w, w2, &l, None)?;
        let mut rng = ChaCha8Rng::seed_from_u64(0xe ^ g as u64);
        let b = pulled_back_action(c, &creg, &cols, w, w2, &l, Some(&mut rng))?;
        if a != b {
            return Err(Error::InvalidModule(format!(
                "right action of {} on Ext^2 depends on the chosen lift",
                c.labels()[g]
            )));
        }
        right_actions.push(a);
    }
    let right = Module::new_unchecked(c.clone(), dims.clone(), right_actions);

    // left action, on the whole space
    let mut offsets = vec![0; nv + 1];
    for w in 0..nv {
        offsets[w + 1] = offsets[w] + dims[w];
    }
    let total = offsets[nv];
    let mut left_vertex = vec![0; total];
    for w in 0..nv {
        for u in 0..nv {
            for k in cols[w].start[u]..cols[w].start[u + 1] {
                left_vertex[offsets[w] + k] = u;
            }
        }
    }
    let mut left_actions = Vec::with_capacity(c.generators().len());
    for &g in c.generators() {
        let (s, t) = (c.source(g), c.target(g));
        let mut m = Matrix::zeros(f, total, total);
        for w in 0..nv {
            let col = &cols[w];
            let Some(p2) = col.res.terms.get(2) else {
                continue;
            };
            // cochain coordinate -> (summand vertex, position in C at that vertex)
            let mut coord = Vec::new();
            for (i, &v) in p2.iter().enumerate() {
                for pos in 0..clay.coords[v].len() {
                    coord.push((i, v, pos));
                }
            }
            let width = coord.len();
            for k in 0..col.quotients[t].dim() {
                let lifted = col.quotients[t].lift(k);
                let mut img = vec![f.zero(); width];
                for (p, x) in lifted.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let (i, v, pos) = coord[col.part[t][p]];
                    let b = clay.coords[v][pos].1;
                    for (b2, y) in c.product(g, b) {
                        let pos2 = clay.position(v, s, *b2);
                        let global = coord
                            .iter()
                            .position(|&cc| cc == (i, v, pos2))
                            .expect("coordinate exists");
                        img[global] += &(x * y);
                    }
                }
                let restricted: Vec<Scalar> = col.part[s].iter().map(|&p| img[p].clone()).collect();
                let proj = col.quotients[s].project(&restricted);
                let row = offsets[w] + col.start[t] + k;
                for (j, y) in proj.into_iter().enumerate() {
                    m.set(row, offsets[w] + col.start[s] + j, y);
                }
            }
        }
        left_actions.push(m);
    }
    Bimodule::new(c.clone(), right, left_vertex, left_actions)
}

/// Left multiplication by the basis element `g` (in `e_w C e_w'`) on `DC`, as a map
/// `I(w') -> I(w)`. The dual basis vector `b'*` maps to the sum of `coeff_{b'}(b g) b*`.
fn left_multiplication_on_injectives(c: &Arc<BasedAlgebra>, g: usize) -> ModuleHom {
    let f = c.field();
    let (w, w2) = (c.source(g), c.target(g));
    let src = Module::injective(c.clone(), w2);
    let tgt = Module::injective(c.clone(), w);
    let blocks = (0..c.num_vertices())
        .map(|v| {
            let rows_b = c.basis_between(v, w2);
            let cols_b = c.basis_between(v, w);
            let mut m = Matrix::zeros(f, rows_b.len(), cols_b.len());
            for (jc, &b) in cols_b.iter().enumerate() {
                for (k, coef) in c.product(b, g) {
                    if let Some(ir) = rows_b.iter().position(|&x| x == *k) {
                        m.set(ir, jc, coef.clone());
                    }
                }
            }
            m
        })
        .collect();
    ModuleHom {
        source: src,
        target: tgt,
        blocks,
    }
}

/// Matrix of `E e_w -> E e_w'` induced by `l: I(w') -> I(w)` through a lifted chain map.
fn pulled_back_action(
    c: &Arc<BasedAlgebra>,
    creg: &Module,
    cols: &[Column],
    w: usize,
    w2: usize,
    l: &ModuleHom,
    perturb: Option<&mut ChaCha8Rng>,
) -> Result<Matrix> {
    let f = c.field();
    let nv = c.num_vertices();
    let (from, to) = (&cols[w], &cols[w2]);
    let mut out = Matrix::zeros(f, from.start[nv], to.start[nv]);
    if from.start[nv] == 0 || to.start[nv] == 0 {
        return Ok(out);
    }
    let lifts = lift_chain_map(&to.res, &from.res, l, 2, perturb)?;
    let pm = ProjMap::from_hom(c, &to.res.layouts[2], &from.res.layouts[2], &lifts[2]);
    // rows: Hom(P_2 of I(w), C); columns: Hom(P_2 of I(w'), C)
    let cm = pm.cochain_matrix(creg);
    for u in 0..nv {
        for k in 0..from.quotients[u].dim() {
            let lifted = from.quotients[u].lift(k);
            let mut full = vec![f.zero(); from.left_of.len()];
            for (p, x) in lifted.into_iter().enumerate() {
                full[from.part[u][p]] = x;
            }
            let img = cm.vec_mul(&full);
            let restricted: Vec<Scalar> = to.part[u].iter().map(|&p| img[p].clone()).collect();
            let proj = to.quotients[u].project(&restricted);
            for (j, y) in proj.into_iter().enumerate() {
                out.set(from.start[u] + k, to.start[u] + j, y);
            }
        }
    }
    Ok(out)
}

/// The relation extension `B = C x E` with its structure maps.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub c: Arc<BasedAlgebra>,
    pub e: Bimodule,
    pub b: Arc<BasedAlgebra>,
    /// Inclusion `C -> B`.
    pub sigma: AlgebraMap,
    /// Projection `B -> C` with kernel `E`.
    pub pi: AlgebraMap,
}

/// Builds `B = C x E` with multiplication `(c, e)(c', e') = (c c', c e' + e c')`. The basis of `B`
/// is the basis of `C` followed by the basis of `E`; all structural invariants are checked.
pub fn relation_extension(c: &Arc<BasedAlgebra>) -> Result<ExtensionData> {
    let e = compute_e(c)?;
    let f = c.field();
    let dc = c.dim();
    let de = e.total_dim();
    let n = dc + de;
    let right = e.right_module();
    let roff = right.offsets();
    let rvert = right.vertex_of_index();
    let lacts = e.left_basis_actions();
    let racts = right.basis_actions();

    let mut labels = c.labels().to_vec();
    let mut source = (0..dc).map(|b| c.source(b)).collect::<Vec<_>>();
    let mut target = (0..dc).map(|b| c.target(b)).collect::<Vec<_>>();
    let mut counters = vec![vec![0usize; c.num_vertices()]; c.num_vertices()];
    for k in 0..de {
        let (u, w) = (e.left_vertex()[k], rvert[k]);
        counters[u][w] += 1;
        labels.push(format!(
            "x{}_{}_{}",
            c.vertex_labels()[u],
            c.vertex_labels()[w],
            counters[u][w]
        ));
        source.push(u);
        target.push(w);
    }
    let mut table: Vec<Vec<Sparse>> = vec![vec![Vec::new(); n]; n];
    for i in 0..dc {
        for j in 0..dc {
            table[i][j] = c.product(i, j).clone();
        }
        // c e: row of the left action
        for j in 0..de {
            table[i][dc + j] = (0..de)
                .filter_map(|k| {
                    let x = lacts[i].get(j, k);
                    (!x.is_zero()).then(|| (dc + k, x.clone()))
                })
                .collect();
        }
    }
    for i in 0..de {
        let w = rvert[i];
        let local = i - roff[w];
        for j in 0..dc {
            if c.source(j) != w {
                continue;
            }
            let w2 = c.target(j);
            let blk = &racts[j];
            table[dc + i][j] = (0..blk.cols())
                .filter_map(|k| {
                    let x = blk.get(local, k);
                    (!x.is_zero()).then(|| (dc + roff[w2] + k, x.clone()))
                })
                .collect();
        }
    }
    let b = BasedAlgebra::new(AlgebraData {
        field: f,
        vertex_labels: c.vertex_labels().to_vec(),
        labels,
        source,
        target,
        idempotents: c.idempotents().to_vec(),
        table,
        presentation: None,
    })?;
    b.check_invariants().map_err(Error::InvalidAlgebra)?;
    let mut sm = Matrix::zeros(f, dc, n);
    let mut pm = Matrix::zeros(f, n, dc);
    for i in 0..dc {
        sm.set(i, i, f.one());
        pm.set(i, i, f.one());
    }
    let data = ExtensionData {
        c: c.clone(),
        e,
        sigma: AlgebraMap {
            source: c.clone(),
            target: b.clone(),
            matrix: sm,
        },
        pi: AlgebraMap {
            source: b.clone(),
            target: c.clone(),
            matrix: pm,
        },
        b,
    };
    data.verify().map_err(Error::InvalidAlgebra)?;
    Ok(data)
}

impl ExtensionData {
    /// Checks that `sigma` and `pi` are algebra maps, `pi sigma = id`, `E E = 0` and `ker pi = E`.
    pub fn verify(&self) -> std::result::Result<(), String> {
        self.sigma.check()?;
        self.pi.check()?;
        if !self.sigma.compose(&self.pi).is_identity() {
            return Err("pi o sigma is not the identity".into());
        }
        let dc = self.c.dim();
        for i in dc..self.b.dim() {
            for j in dc..self.b.dim() {
                if !self.b.product(i, j).is_empty() {
                    return Err("E E is nonzero".into());
                }
            }
        }
        if self.b.dim() - self.pi.matrix.rank() != self.e.total_dim() {
            return Err("kernel of pi differs from E".into());
        }
        Ok(())
    }

    pub fn dim_e(&self) -> usize {
        self.e.total_dim()
    }

    /// `E` as a right `C`-module.
    pub fn e_module(&self) -> Module {
        self.e.right_module().clone()
    }

    /// `D E`: the dual of the left `C`-structure of `E`, as a right `C`-module.
    pub fn de_module(&self) -> Module {
        self.e.dual().right_module().clone()
    }

    /// Number of arrows of the quiver of `B` not present in the quiver of `C`.
    pub fn new_arrow_count(&self) -> usize {
        self.b.quiver_of().arrows.len() - self.c.quiver_of().arrows.len()
    }

    /// `B` as a `C`-`B` bimodule.
    pub fn b_as_c_b(&self) -> Result<Bimodule> {
        Bimodule::regular(&self.b).restrict_left(&self.sigma)
    }

    /// `B` as a `B`-`C` bimodule.
    pub fn b_as_b_c(&self) -> Result<Bimodule> {
        Bimodule::regular(&self.b).restrict_right(&self.sigma)
    }
}
