use serde::{Serialize, Serializer};

use crate::modcat::Module;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Evidence attached to an assertion: dimension vectors of the modules involved, numeric
/// values (hom or ext dimensions, counts) and the modules themselves for full output.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Witness {
    pub dims: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<usize>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(skip)]
    pub modules: Vec<Module>,
}

impl Witness {
    pub fn modules(mods: &[&Module]) -> Witness {
        Witness {
            dims: mods.iter().map(|m| m.dims().to_vec()).collect(),
            modules: mods.iter().map(|&m| m.clone()).collect(),
            ..Witness::default()
        }
    }

    pub fn values(mut self, values: &[usize]) -> Witness {
        self.values = values.to_vec();
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Witness {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    pub witness: Witness,
}

/// Outcome of every assertion of one statement.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub statement: String,
    pub assertions: Vec<Assertion>,
}

impl PropertyReport {
    pub fn new(statement: impl Into<String>) -> PropertyReport {
        PropertyReport {
            statement: statement.into(),
            assertions: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: Witness) {
        self.assertions.push(Assertion {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            witness,
        });
    }

    pub fn extend(&mut self, other: PropertyReport) {
        self.assertions.extend(other.assertions);
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| a.status == Status::Fail)
    }
}
