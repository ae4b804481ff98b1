use std::fmt;
use std::str::FromStr;

use super::change::ChangeOfRings;
use super::property::{has_property, Property};
use super::report::{PropertyReport, Witness};
use crate::error::{Error, Result};
use crate::modcat::{
    cosyzygy, decompose, ext_dim, hom_dim, injective_dimension, is_indecomposable, is_injective,
    is_isomorphic, is_projective, projective_dimension, syzygy, tau, tau_inv, Module,
};
use crate::tiltext::{TiltingData, TorsionClass};

const DIMENSION_CAP: usize = 12;
/// Number of two-summand modules tried in the partial tilting equivalence.
const PAIR_LIMIT: usize = 12;

/// The statements the verification battery knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Prop34,
    Prop36,
    Prop37,
    Lemma38,
    Thm39Conditions,
    Prop41,
    Lemma42,
    Prop43,
    Cor45,
    Lemma46,
    Cor47,
    Ee,
    Thm48,
    Prop24,
    Figure1Regions,
}

impl Statement {
    pub const ALL: [Statement; 15] = [
        Statement::Prop34,
        Statement::Prop36,
        Statement::Prop37,
        Statement::Lemma38,
        Statement::Thm39Conditions,
        Statement::Prop41,
        Statement::Lemma42,
        Statement::Prop43,
        Statement::Cor45,
        Statement::Lemma46,
        Statement::Cor47,
        Statement::Ee,
        Statement::Thm48,
        Statement::Prop24,
        Statement::Figure1Regions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Prop34 => "prop3.4",
            Statement::Prop36 => "prop3.6",
            Statement::Prop37 => "prop3.7",
            Statement::Lemma38 => "lemma3.8",
            Statement::Thm39Conditions => "thm3.9-conditions",
            Statement::Prop41 => "prop4.1",
            Statement::Lemma42 => "lemma4.2",
            Statement::Prop43 => "prop4.3",
            Statement::Cor45 => "cor4.5",
            Statement::Lemma46 => "lemma4.6",
            Statement::Cor47 => "cor4.7",
            Statement::Ee => "ee",
            Statement::Thm48 => "thm4.8",
            Statement::Prop24 => "prop2.4",
            Statement::Figure1Regions => "figure1-regions",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statement> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statement id {s}")))
    }
}

/// Everything a verification run needs: the relation extension, the `C`-modules to sweep over
/// and, when available, the tilting module `C` came from.
#[derive(Clone, Debug)]
pub struct VerifyContext {
    pub rings: ChangeOfRings,
    /// Pairwise non-isomorphic indecomposable `C`-modules.
    pub sweep: Vec<Module>,
    pub tilting: Option<TiltingData>,
    /// Whether `C` is known to be tilted.
    pub tilted: bool,
    /// Expected number of isomorphism classes that are both induced from the torsion-free
    /// class and coinduced from the torsion class.
    pub expected_overlap: Option<usize>,
}

fn iso(a: &Module, b: &Module) -> Result<bool> {
    is_isomorphic(a, b)
}

fn all_summands_have(m: &Module, f: impl Fn(&Module) -> Option<usize>) -> Result<(bool, Vec<usize>)> {
    let mut values = Vec::new();
    for s in decompose(m)? {
        values.push(f(&s).unwrap_or(usize::MAX));
    }
    Ok((values.iter().all(|&v| v == 2), values))
}

impl VerifyContext {
    fn c_vertices(&self) -> usize {
        self.rings.ext.c.num_vertices()
    }

    fn missing_tilting(&self, r: &mut PropertyReport) {
        r.check(
            "fixture supplies the tilting module",
            false,
            Witness::default().note("statement needs a tilting module over a hereditary algebra"),
        );
    }

    pub fn verify(&self, statement: Statement) -> Result<PropertyReport> {
        let mut r = PropertyReport::new(statement.id());
        match statement {
            Statement::Prop34 => self.projectives_correspond(&mut r)?,
            Statement::Prop36 => self.exact_sequences(&mut r)?,
            Statement::Prop37 => self.indecomposables_preserved(&mut r)?,
            Statement::Lemma38 => self.tau_exchange(&mut r)?,
            Statement::Thm39Conditions => self.tilting_conditions(&mut r)?,
            Statement::Prop41 => self.e_as_translate(&mut r)?,
            Statement::Lemma42 => self.summand_dimensions(&mut r)?,
            Statement::Prop43 => self.functors_fix_small_dimension(&mut r)?,
            Statement::Cor45 => self.slice_translates(&mut r)?,
            Statement::Lemma46 => self.ext_vanishing(&mut r)?,
            Statement::Cor47 => self.rigid_sums(&mut r)?,
            Statement::Ee => self.ee(&mut r)?,
            Statement::Thm48 => self.de_tilting(&mut r)?,
            Statement::Prop24 => self.tilted_injectives(&mut r)?,
            Statement::Figure1Regions => self.region_overlap(&mut r)?,
        }
        Ok(r)
    }

    fn projectives_correspond(&self, r: &mut PropertyReport) -> Result<()> {
        let (c, b) = (&self.rings.ext.c, &self.rings.ext.b);
        for v in 0..self.c_vertices() {
            let label = &c.vertex_labels()[v];
            let ind = self.rings.induce(&Module::projective(c.clone(), v))?;
            let pb = Module::projective(b.clone(), v);
            r.check(
                format!("P_C({label}) (x) B = P_B({label})"),
                iso(&ind, &pb)?,
                Witness::modules(&[&ind, &pb]),
            );
            let coind = self.rings.coinduce(&Module::injective(c.clone(), v))?;
            let ib = Module::injective(b.clone(), v);
            r.check(
                format!("coinduced I_C({label}) = I_B({label})"),
                iso(&coind, &ib)?,
                Witness::modules(&[&coind, &ib]),
            );
        }
        Ok(())
    }

    fn exact_sequences(&self, r: &mut PropertyReport) -> Result<()> {
        for (k, m) in self.sweep.iter().enumerate() {
            let s = self.rings.induced_ses(m)?;
            r.check(
                format!("module {k}: 0 -> M(x)E -> M(x)B -> M -> 0 exact"),
                s.is_certified() && iso(s.right(), &self.rings.as_b_module(m)?)?,
                Witness::modules(&[s.left(), s.middle(), s.right()]),
            );
            let s = self.rings.coinduced_ses(m)?;
            r.check(
                format!("module {k}: 0 -> M -> Hom(B, M) -> Hom(E, M) -> 0 exact"),
                s.is_certified() && iso(s.left(), &self.rings.as_b_module(m)?)?,
                Witness::modules(&[s.left(), s.middle(), s.right()]),
            );
        }
        Ok(())
    }

    fn indecomposables_preserved(&self, r: &mut PropertyReport) -> Result<()> {
        let mut induced = Vec::with_capacity(self.sweep.len());
        let mut coinduced = Vec::with_capacity(self.sweep.len());
        for (k, m) in self.sweep.iter().enumerate() {
            let i = self.rings.induce(m)?;
            let c = self.rings.coinduce(m)?;
            r.check(
                format!("module {k}: induced module indecomposable"),
                is_indecomposable(&i)?,
                Witness::modules(&[m, &i]),
            );
            r.check(
                format!("module {k}: coinduced module indecomposable"),
                is_indecomposable(&c)?,
                Witness::modules(&[m, &c]),
            );
            induced.push(i);
            coinduced.push(c);
        }
        let mut distinct_in = true;
        let mut distinct_co = true;
        let mut pairs = 0;
        for i in 0..self.sweep.len() {
            for j in i + 1..self.sweep.len() {
                pairs += 1;
                if iso(&induced[i], &induced[j])? {
                    distinct_in = false;
                    r.check(
                        format!("modules {i} and {j}: equal inductions"),
                        false,
                        Witness::modules(&[&self.sweep[i], &self.sweep[j]]),
                    );
                }
                if iso(&coinduced[i], &coinduced[j])? {
                    distinct_co = false;
                    r.check(
                        format!("modules {i} and {j}: equal coinductions"),
                        false,
                        Witness::modules(&[&self.sweep[i], &self.sweep[j]]),
                    );
                }
            }
        }
        r.check(
            "induction separates non-isomorphic modules",
            distinct_in,
            Witness::default().values(&[pairs]),
        );
        r.check(
            "coinduction separates non-isomorphic modules",
            distinct_co,
            Witness::default().values(&[pairs]),
        );
        Ok(())
    }

    fn tau_exchange(&self, r: &mut PropertyReport) -> Result<()> {
        for (k, m) in self.sweep.iter().enumerate() {
            let lhs = tau(&self.rings.induce(m)?);
            let rhs = self.rings.coinduce(&tau(m))?;
            r.check(
                format!("module {k}: tau_B(M (x) B) = coinduced tau_C M"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[m, &lhs, &rhs]),
            );
            let lhs = tau_inv(&self.rings.coinduce(m)?);
            let rhs = self.rings.induce(&tau_inv(m))?;
            r.check(
                format!("module {k}: tau_B^- (coinduced M) = (tau_C^- M) (x) B"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[m, &lhs, &rhs]),
            );
        }
        Ok(())
    }

    fn tilting_conditions(&self, r: &mut PropertyReport) -> Result<()> {
        let c = &self.rings.ext.c;
        let de = self.rings.ext.de_module();
        let mut candidates = vec![("DE".to_string(), de.clone())];
        let mut singles = Vec::new();
        for (k, m) in self.sweep.iter().enumerate() {
            if has_property(m, Property::PartialTilting)? {
                singles.push(k);
                candidates.push((format!("module {k}"), m.clone()));
            }
        }
        let mut pairs = 0;
        'outer: for (a, &i) in singles.iter().enumerate() {
            for &j in &singles[a + 1..] {
                if pairs == PAIR_LIMIT {
                    break 'outer;
                }
                let t = Module::direct_sum(c, &[self.sweep[i].clone(), self.sweep[j].clone()]);
                if has_property(&t, Property::PartialTilting)? {
                    candidates.push((format!("modules {i}+{j}"), t));
                    pairs += 1;
                }
            }
        }
        for (name, t) in candidates {
            let induced = self.rings.induce(&t)?;
            let lhs = has_property(&induced, Property::PartialTilting)?;
            let tt = tau(&t);
            let h1 = hom_dim(&self.rings.tensor_e(&t)?, &tt)?;
            let h2 = hom_dim(&de, &tt)?;
            let rhs = has_property(&t, Property::PartialTilting)? && h1 == 0 && h2 == 0;
            r.check(
                format!("{name}: T (x) B partial tilting iff conditions hold"),
                lhs == rhs,
                Witness::modules(&[&t, &induced])
                    .values(&[usize::from(lhs), usize::from(rhs), h1, h2])
                    .note("values: induced partial tilting, conditions hold, dim Hom(T(x)E, tau T), dim Hom(DE, tau T)"),
            );
        }
        Ok(())
    }

    fn e_as_translate(&self, r: &mut PropertyReport) -> Result<()> {
        let c = &self.rings.ext.c;
        let e = self.rings.ext.e_module();
        let de = self.rings.ext.de_module();
        let rhs = tau_inv(&cosyzygy(&Module::regular(c.clone()), 1));
        r.check("E = tau^- Omega^- C", iso(&e, &rhs)?, Witness::modules(&[&e, &rhs]));
        let rhs = tau(&syzygy(&Module::dual_regular(c.clone()), 1));
        r.check("DE = tau Omega DC", iso(&de, &rhs)?, Witness::modules(&[&de, &rhs]));
        for (k, m) in self.sweep.iter().enumerate() {
            let lhs = self.rings.tensor_e(m)?;
            let rhs = tau_inv(&cosyzygy(m, 1));
            r.check(
                format!("module {k}: M (x) E = tau^- Omega^- M"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[m, &lhs, &rhs]),
            );
            let lhs = self.rings.hom_e(m)?;
            let rhs = tau(&syzygy(m, 1));
            r.check(
                format!("module {k}: D(E (x) DM) = tau Omega M"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[m, &lhs, &rhs]),
            );
        }
        Ok(())
    }

    fn summand_dimensions(&self, r: &mut PropertyReport) -> Result<()> {
        for (k, m) in self.sweep.iter().enumerate() {
            let t = self.rings.tensor_e(m)?;
            let (ok, values) = all_summands_have(&t, |s| projective_dimension(s, DIMENSION_CAP))?;
            r.check(
                format!("module {k}: summands of M (x) E have pd 2"),
                ok,
                Witness::modules(&[m, &t]).values(&values),
            );
            let h = self.rings.hom_e(m)?;
            let (ok, values) = all_summands_have(&h, |s| injective_dimension(s, DIMENSION_CAP))?;
            r.check(
                format!("module {k}: summands of D(E (x) DM) have id 2"),
                ok,
                Witness::modules(&[m, &h]).values(&values),
            );
        }
        Ok(())
    }

    fn functors_fix_small_dimension(&self, r: &mut PropertyReport) -> Result<()> {
        for (k, m) in self.sweep.iter().enumerate() {
            let mb = self.rings.as_b_module(m)?;
            let id_small = matches!(injective_dimension(m, DIMENSION_CAP), Some(d) if d <= 1);
            let ind = self.rings.induce(m)?;
            let same = iso(&ind, &mb)?;
            r.check(
                format!("module {k}: id M <= 1 iff M (x) B = M"),
                id_small == same,
                Witness::modules(&[m, &ind]).values(&[usize::from(id_small), usize::from(same)]),
            );
            let pd_small = matches!(projective_dimension(m, DIMENSION_CAP), Some(d) if d <= 1);
            let co = self.rings.coinduce(m)?;
            let same = iso(&co, &mb)?;
            r.check(
                format!("module {k}: pd M <= 1 iff coinduced M = M"),
                pd_small == same,
                Witness::modules(&[m, &co]).values(&[usize::from(pd_small), usize::from(same)]),
            );
        }
        Ok(())
    }

    fn slice_translates(&self, r: &mut PropertyReport) -> Result<()> {
        let Some(t) = &self.tilting else {
            self.missing_tilting(r);
            return Ok(());
        };
        let slice = t.slice()?;
        for (k, m) in slice.modules.iter().enumerate() {
            let m = m.over(&self.rings.ext.c)?;
            let mb = self.rings.as_b_module(&m)?;
            let lhs = tau(&mb);
            let tau_c = tau(&m);
            let restricted = self.rings.restrict(&lhs)?;
            r.check(
                format!("slice module {k}: tau_B M restricted to C = tau_C M"),
                iso(&restricted, &tau_c)?,
                Witness::modules(&[&m, &restricted, &tau_c]),
            );
            let rhs = self.rings.as_b_module(&tau_c)?;
            r.check(
                format!("slice module {k}: tau_C M = tau_B M"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[&m, &lhs, &rhs]),
            );
            let lhs = tau_inv(&mb);
            let rhs = self.rings.as_b_module(&tau_inv(&m))?;
            r.check(
                format!("slice module {k}: tau_C^- M = tau_B^- M"),
                iso(&lhs, &rhs)?,
                Witness::modules(&[&m, &lhs, &rhs]),
            );
        }
        Ok(())
    }

    fn ext_vanishing(&self, r: &mut PropertyReport) -> Result<()> {
        let c = &self.rings.ext.c;
        let e = self.rings.ext.e_module();
        let de = self.rings.ext.de_module();
        let creg = Module::regular(c.clone());
        let dc = Module::dual_regular(c.clone());
        for (name, a, b) in [
            ("Ext^1(E, C) = 0", &e, &creg),
            ("Ext^1(DC, DE) = 0", &dc, &de),
            ("Ext^1(E, E) = 0", &e, &e),
            ("Ext^1(DE, DE) = 0", &de, &de),
        ] {
            let d = ext_dim(a, b, 1)?;
            r.check(name, d == 0, Witness::modules(&[a, b]).values(&[d]));
        }
        Ok(())
    }

    fn rigid_sums(&self, r: &mut PropertyReport) -> Result<()> {
        let c = &self.rings.ext.c;
        let ec = Module::direct_sum(c, &[self.rings.ext.e_module(), Module::regular(c.clone())]);
        let d = ext_dim(&ec, &ec, 1)?;
        r.check("E + C is rigid", d == 0, Witness::modules(&[&ec]).values(&[d]));
        let dd = Module::direct_sum(c, &[self.rings.ext.de_module(), Module::dual_regular(c.clone())]);
        let d = ext_dim(&dd, &dd, 1)?;
        r.check("DE + DC is rigid", d == 0, Witness::modules(&[&dd]).values(&[d]));
        Ok(())
    }

    fn ee(&self, r: &mut PropertyReport) -> Result<()> {
        let e = self.rings.ext.e_module();
        let ee = self.rings.tensor_e(&e)?;
        let parts = decompose(&ee)?;
        let mut w = Witness::modules(&[&e, &ee]);
        w.dims.extend(parts.iter().map(|p| p.dims().to_vec()));
        if self.tilted {
            r.check("E (x) E = 0", ee.is_zero(), w);
            let h = self.rings.hom_e(&self.rings.ext.de_module())?;
            r.check("D(E (x) D(DE)) = 0", h.is_zero(), Witness::modules(&[&h]));
        } else {
            r.check(
                "E (x) E is nonzero, so the vanishing needs C tilted",
                !ee.is_zero(),
                w.note("counterexample: the algebra is not tilted"),
            );
        }
        Ok(())
    }

    fn de_tilting(&self, r: &mut PropertyReport) -> Result<()> {
        let de = self.rings.ext.de_module();
        let e = self.rings.ext.e_module();
        let ind = self.rings.induce(&de)?;
        let co = self.rings.coinduce(&e)?;
        for (who, m, props) in [
            ("DE", &de, [Property::PartialTilting, Property::TauRigid]),
            ("DE (x) B", &ind, [Property::PartialTilting, Property::TauRigid]),
            ("E", &e, [Property::PartialCotilting, Property::TauCorigid]),
            ("coinduced E", &co, [Property::PartialCotilting, Property::TauCorigid]),
        ] {
            for p in props {
                let rep = super::property::property(m, p)?;
                let values = rep.assertions.iter().flat_map(|a| a.witness.values.clone()).collect::<Vec<_>>();
                r.check(
                    format!("{who} is {p}"),
                    rep.passed(),
                    Witness::modules(&[m]).values(&values),
                );
            }
        }
        Ok(())
    }

    fn tilted_injectives(&self, r: &mut PropertyReport) -> Result<()> {
        let Some(t) = &self.tilting else {
            self.missing_tilting(r);
            return Ok(());
        };
        let a = &t.hereditary;
        let mut found = Vec::new();
        for (j, tj) in t.summands.iter().enumerate() {
            let m = if is_projective(tj) {
                let top = tj.top_dims();
                let v = top.iter().position(|&d| d == 1).expect("indecomposable projective has a simple top");
                t.hom_t(&Module::injective(a.clone(), v))?
            } else {
                t.ext1_t(&tau(tj))?
            };
            let m = m.over(&self.rings.ext.c)?;
            r.check(
                format!("summand {}: module is indecomposable injective", j + 1),
                is_indecomposable(&m)? && is_injective(&m),
                Witness::modules(&[tj, &m]),
            );
            found.push(m);
        }
        let mut distinct = true;
        for i in 0..found.len() {
            for j in i + 1..found.len() {
                distinct &= !iso(&found[i], &found[j])?;
            }
        }
        r.check(
            "modules pairwise non-isomorphic and one per vertex",
            distinct && found.len() == self.c_vertices(),
            Witness::default().values(&[found.len()]),
        );
        Ok(())
    }

    fn region_overlap(&self, r: &mut PropertyReport) -> Result<()> {
        let Some(t) = &self.tilting else {
            self.missing_tilting(r);
            return Ok(());
        };
        let mut induced: Vec<Module> = Vec::new();
        let mut coinduced: Vec<Module> = Vec::new();
        let (mut nx, mut ny) = (0, 0);
        for m in &self.sweep {
            let over_t = m.over(&t.tilted)?;
            match t.torsion_tag(&over_t)? {
                TorsionClass::Y => {
                    ny += 1;
                    induced.push(self.rings.induce(m)?);
                }
                TorsionClass::X => {
                    nx += 1;
                    coinduced.push(self.rings.coinduce(m)?);
                }
                _ => unreachable!("tags of C-modules are X or Y"),
            }
        }
        let mut overlap = Vec::new();
        for i in &induced {
            for c in &coinduced {
                if iso(i, c)? {
                    overlap.push(i.clone());
                    break;
                }
            }
        }
        r.check(
            "every swept module lies in exactly one of X, Y",
            nx + ny == self.sweep.len(),
            Witness::default().values(&[nx, ny]),
        );
        let refs: Vec<&Module> = overlap.iter().collect();
        let w = Witness::modules(&refs).values(&[induced.len(), coinduced.len(), overlap.len()]);
        match self.expected_overlap {
            Some(n) => r.check(
                format!("induced Y-modules and coinduced X-modules share {n} classes"),
                overlap.len() == n,
                w,
            ),
            None => r.check("overlap of induced Y and coinduced X images computed", true, w),
        }
        Ok(())
    }
}
