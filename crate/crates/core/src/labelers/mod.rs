//! Constructive total labelings, one per family.
//!
//! Each labeler evaluates its formulas in exact `i64` arithmetic. Every
//! division must be exact, every label must land in `1..=v+e`, and no element
//! may be labeled twice; violations are errors rather than silent rounding.
//! Formulas that only verify after a correction list the matching
//! [`crate::typos`] keys in [`Construction::corrections`].

mod antiprism;
mod books;
mod fans;
mod ladders;
mod wheels;

pub use antiprism::label_antiprism;
pub use books::label_books;
pub use fans::{
    fan_phase_weights, label_fan_union, label_fan_union_printed, label_fans, label_fans_printed, FanPhases,
};
pub use ladders::{label_ladder_union, label_ladders, label_triangular_ladders};
pub use wheels::{label_wheels, label_wheels_printed};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::labeling::{Label, TotalLabeling};
use crate::typos;

/// A labeling produced by a construction, with the corrections it relied on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeling: TotalLabeling,
    pub corrections: Vec<&'static str>,
}

/// Runs the construction matching `spec`.
pub fn construct(spec: &FamilySpec) -> Result<Construction> {
    let (labeling, corrections) = match *spec {
        FamilySpec::Fans { m, n } => (label_fans(m, n)?, vec![typos::FANS_EVEN_VERTEX]),
        FamilySpec::Ladders { m, n } => (label_ladders(m, n)?, vec![]),
        FamilySpec::TriangularLadders { m, n } => (label_triangular_ladders(m, n)?, vec![]),
        FamilySpec::Wheels { m, n } => {
            let fixes = if n % 2 == 1 { vec![typos::WHEELS_ODD_RIM, typos::WHEELS_ODD_HUB_RANGE] } else { vec![] };
            (label_wheels(m, n)?, fixes)
        }
        FamilySpec::Books { m, n } => (label_books(m, n)?, vec![]),
        FamilySpec::Antiprism { l, m, n } => (label_antiprism(l, m, n)?, vec![]),
        FamilySpec::FanUnion { s, k, n } => {
            let mut fixes = vec![typos::UNION_COPY_SIZES];
            if n % 2 == 1 && s != k {
                fixes.push(typos::FAN_UNION_OFFSET);
            }
            (label_fan_union(s, k, n)?, fixes)
        }
        FamilySpec::LadderUnion { s, k, n } => (label_ladder_union(s, k, n)?, vec![typos::UNION_COPY_SIZES]),
    };
    Ok(Construction { labeling, corrections })
}

pub(crate) fn div_exact(what: &'static str, numerator: i64, denominator: i64) -> Result<i64> {
    if numerator % denominator != 0 {
        return Err(Error::Indivisible { what, numerator, denominator });
    }
    Ok(numerator / denominator)
}

/// Collects labels by identifier, checking range and uniqueness of elements.
pub(crate) struct LabelBuilder {
    max: i64,
    labeling: TotalLabeling,
}

impl LabelBuilder {
    pub(crate) fn for_spec(spec: &FamilySpec) -> Self {
        LabelBuilder { max: (spec.order() + spec.size()) as i64, labeling: TotalLabeling::new() }
    }

    fn check(&self, element: impl FnOnce() -> String, value: i64) -> Result<Label> {
        if value < 1 || value > self.max {
            return Err(Error::LabelOutOfRange { element: element(), value, max: self.max });
        }
        Ok(value as Label)
    }

    pub(crate) fn vertex(&mut self, name: String, value: i64) -> Result<()> {
        let label = self.check(|| name.clone(), value)?;
        if self.labeling.set_vertex(&name, label).is_some() {
            return Err(Error::InvalidArgument(format!("vertex {name} labeled twice")));
        }
        Ok(())
    }

    pub(crate) fn edge(&mut self, x: String, y: String, value: i64) -> Result<()> {
        let label = self.check(|| format!("{x} {y}"), value)?;
        if self.labeling.set_edge(&x, &y, label).is_some() {
            return Err(Error::InvalidArgument(format!("edge {x} {y} labeled twice")));
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> TotalLabeling {
        self.labeling
    }
}

/// `(-1)^(n+1)`.
pub(crate) fn alt_sign(n: i64) -> i64 {
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}
