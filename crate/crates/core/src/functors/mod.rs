//! Induction and coinduction along a relation extension, module properties, and the
//! statement verification battery.

mod change;
mod property;
mod report;
mod verify;

pub use change::{ChangeOfRings, ShortExact};
pub use property::{has_property, property, Property};
pub use report::{Assertion, PropertyReport, Status, Witness};
pub use verify::{Statement, VerifyContext};

#[cfg(test)]
mod tests;
