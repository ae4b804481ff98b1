//! The in-repo example algebras and modules.

use std::sync::Arc;

use super::{parse_module, AlgebraFile};
use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::functors::{ChangeOfRings, VerifyContext};
use crate::knitting::{knit, DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES};
use crate::modcat::{is_indecomposable, is_isomorphic, Module};
use crate::tiltext::{end_algebra, relation_extension, ExtensionData, TiltingData};

macro_rules! file {
    ($dir:literal, $name:literal) => {
        ($name, include_str!(concat!("../../fixtures/", $dir, "/", $name)))
    };
}

/// One example: an algebra file, named module files over it, and extra algebra files.
#[derive(Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub algebra: &'static str,
    pub modules: &'static [(&'static str, &'static str)],
    pub extra_algebras: &'static [(&'static str, &'static str)],
    /// The modules are the summands of a tilting module and `C` is its endomorphism algebra.
    pub tilting: bool,
    /// Whether `C` is a tilted algebra.
    pub tilted: bool,
    /// Whether `C` has finitely many indecomposables, so the sweep is its whole AR quiver.
    pub finite: bool,
    pub expected_overlap: Option<usize>,
}

pub static FIXTURES: &[Fixture] = &[
    Fixture {
        id: "d4",
        algebra: include_str!("../../fixtures/d4/algebra.alg"),
        modules: &[],
        extra_algebras: &[],
        tilting: false,
        tilted: true,
        finite: true,
        expected_overlap: None,
    },
    Fixture {
        id: "a22",
        algebra: include_str!("../../fixtures/a22/algebra.alg"),
        modules: &[file!("a22", "e-412.mod"), file!("a22", "e-413.mod"), file!("a22", "de.mod")],
        extra_algebras: &[],
        tilting: false,
        tilted: true,
        finite: false,
        expected_overlap: None,
    },
    Fixture {
        id: "a5-nontilted",
        algebra: include_str!("../../fixtures/a5-nontilted/algebra.alg"),
        modules: &[],
        extra_algebras: &[],
        tilting: false,
        tilted: false,
        finite: true,
        expected_overlap: None,
    },
    Fixture {
        id: "d6-hereditary",
        algebra: include_str!("../../fixtures/d6-hereditary/algebra.alg"),
        modules: &[],
        extra_algebras: &[],
        tilting: false,
        tilted: true,
        finite: true,
        expected_overlap: None,
    },
    Fixture {
        id: "d6-tilting",
        algebra: include_str!("../../fixtures/d6-tilting/algebra.alg"),
        modules: &[
            file!("d6-tilting", "t1.mod"),
            file!("d6-tilting", "t2.mod"),
            file!("d6-tilting", "t3.mod"),
            file!("d6-tilting", "t4.mod"),
            file!("d6-tilting", "t5.mod"),
            file!("d6-tilting", "t6.mod"),
        ],
        extra_algebras: &[file!("d6-tilting", "c-printed.alg"), file!("d6-tilting", "b-printed.alg")],
        tilting: true,
        tilted: true,
        finite: true,
        expected_overlap: Some(4),
    },
    Fixture {
        id: "a41-b",
        algebra: include_str!("../../fixtures/a41-b/algebra.alg"),
        modules: &[
            file!("a41-b", "bold-3153.mod"),
            file!("a41-b", "bold-34153.mod"),
            file!("a41-b", "bold-31523.mod"),
            file!("a41-b", "bold-341523.mod"),
        ],
        extra_algebras: &[],
        tilting: false,
        tilted: false,
        finite: false,
        expected_overlap: None,
    },
    Fixture {
        id: "a41-c",
        algebra: include_str!("../../fixtures/a41-c/algebra.alg"),
        modules: &[
            file!("a41-c", "coray-231155.mod"),
            file!("a41-c", "coray-15.mod"),
            file!("a41-c", "coray-3415.mod"),
            file!("a41-c", "coray-315.mod"),
            file!("a41-c", "coray-2315.mod"),
        ],
        extra_algebras: &[],
        tilting: false,
        tilted: true,
        finite: false,
        expected_overlap: None,
    },
    Fixture {
        id: "a41-cprime",
        algebra: include_str!("../../fixtures/a41-cprime/algebra.alg"),
        modules: &[
            file!("a41-cprime", "ray-1534.mod"),
            file!("a41-cprime", "ray-153.mod"),
            file!("a41-cprime", "ray-1523.mod"),
        ],
        extra_algebras: &[],
        tilting: false,
        tilted: true,
        finite: false,
        expected_overlap: None,
    },
];

pub fn get(id: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Parse(format!("unknown fixture {id}")))
}

/// A fixture with its files parsed.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub fixture: &'static Fixture,
    pub algebra: Arc<BasedAlgebra>,
    pub modules: Vec<(String, Module)>,
    pub tilting: Option<TiltingData>,
}

impl Fixture {
    /// Parses the files, optionally over another field.
    pub fn load(&'static self, field: Option<Field>) -> Result<Loaded> {
        let algebra = AlgebraFile::parse_with_field(self.algebra, field)?.build()?;
        let modules = self
            .modules
            .iter()
            .map(|(name, text)| Ok((name.to_string(), parse_module(text, &algebra)?)))
            .collect::<Result<Vec<_>>>()?;
        let tilting = if self.tilting {
            let summands: Vec<Module> = modules.iter().map(|(_, m)| m.clone()).collect();
            Some(end_algebra(&algebra, &summands, None)?)
        } else {
            None
        };
        Ok(Loaded {
            fixture: self,
            algebra,
            modules,
            tilting,
        })
    }

    pub fn extra(&self, name: &str, field: Option<Field>) -> Result<Arc<BasedAlgebra>> {
        let (_, text) = self
            .extra_algebras
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::Parse(format!("fixture {} has no file {name}", self.id)))?;
        AlgebraFile::parse_with_field(text, field)?.build()
    }
}

impl Loaded {
    /// The algebra `C` whose relation extension is studied.
    pub fn c(&self) -> Arc<BasedAlgebra> {
        match &self.tilting {
            Some(t) => t.tilted.clone(),
            None => self.algebra.clone(),
        }
    }

    pub fn module(&self, name: &str) -> Result<&Module> {
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Parse(format!("fixture {} has no module {name}", self.fixture.id)))
    }

    pub fn extension(&self) -> Result<ExtensionData> {
        relation_extension(&self.c())
    }

    /// Pairwise non-isomorphic indecomposable `C`-modules: the whole AR quiver for finite type,
    /// otherwise the listed indecomposable modules with the projectives and injectives.
    pub fn sweep(&self) -> Result<Vec<Module>> {
        let c = self.c();
        if self.fixture.finite {
            let ar = knit(&c, DEFAULT_MAX_NODES, DEFAULT_MAX_DEPTH)?;
            ar.ensure_complete()?;
            return Ok(ar.nodes);
        }
        let mut out: Vec<Module> = Vec::new();
        let listed = if self.tilting.is_some() {
            Vec::new()
        } else {
            self.modules.iter().map(|(_, m)| m.clone()).collect()
        };
        let basic = (0..c.num_vertices())
            .flat_map(|v| [Module::projective(c.clone(), v), Module::injective(c.clone(), v)]);
        for m in listed.into_iter().chain(basic) {
            if !is_indecomposable(&m)? {
                continue;
            }
            let mut seen = false;
            for x in &out {
                if is_isomorphic(x, &m)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(m);
            }
        }
        Ok(out)
    }

    pub fn context(&self) -> Result<VerifyContext> {
        let ext = self.extension()?;
        Ok(VerifyContext {
            rings: ChangeOfRings::new(&ext)?,
            sweep: self.sweep()?,
            tilting: self.tilting.clone(),
            tilted: self.fixture.tilted,
            expected_overlap: self.fixture.expected_overlap,
        })
    }
}
