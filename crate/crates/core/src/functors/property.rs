use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::report::{PropertyReport, Witness};
use crate::error::{Error, Result};
use crate::modcat::{ext_dim, hom_dim, injective_dimension, projective_dimension, tau, tau_inv, Module};

/// Homological dimensions are computed up to this length; beyond it they count as infinite.
const DIMENSION_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Rigid,
    TauRigid,
    TauCorigid,
    PartialTilting,
    PartialCotilting,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Rigid,
        Property::TauRigid,
        Property::TauCorigid,
        Property::PartialTilting,
        Property::PartialCotilting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Rigid => "rigid",
            Property::TauRigid => "tau_rigid",
            Property::TauCorigid => "tau_corigid",
            Property::PartialTilting => "partial_tilting",
            Property::PartialCotilting => "partial_cotilting",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown property {s}")))
    }
}

fn dim_at_most_one(d: Option<usize>) -> bool {
    matches!(d, Some(x) if x <= 1)
}

fn dim_value(d: Option<usize>) -> usize {
    d.unwrap_or(usize::MAX)
}

/// Evaluates the defining conditions of a property; one assertion per condition.
pub fn property(m: &Module, which: Property) -> Result<PropertyReport> {
    let mut r = PropertyReport::new(which.name());
    match which {
        Property::Rigid => {
            let e = ext_dim(m, m, 1)?;
            r.check("Ext^1(M, M) = 0", e == 0, Witness::modules(&[m]).values(&[e]));
        }
        Property::TauRigid => {
            let t = tau(m);
            let h = hom_dim(m, &t)?;
            r.check("Hom(M, tau M) = 0", h == 0, Witness::modules(&[m, &t]).values(&[h]));
        }
        Property::TauCorigid => {
            let t = tau_inv(m);
            let h = hom_dim(&t, m)?;
            r.check("Hom(tau^- M, M) = 0", h == 0, Witness::modules(&[m, &t]).values(&[h]));
        }
        Property::PartialTilting => {
            let pd = projective_dimension(m, DIMENSION_CAP);
            r.check("pd M <= 1", dim_at_most_one(pd), Witness::modules(&[m]).values(&[dim_value(pd)]));
            r.extend(property(m, Property::Rigid)?);
        }
        Property::PartialCotilting => {
            let id = injective_dimension(m, DIMENSION_CAP);
            r.check("id M <= 1", dim_at_most_one(id), Witness::modules(&[m]).values(&[dim_value(id)]));
            r.extend(property(m, Property::Rigid)?);
        }
    }
    Ok(r)
}

/// Whether all conditions of the property hold.
pub fn has_property(m: &Module, which: Property) -> Result<bool> {
    Ok(property(m, which)?.passed())
}
