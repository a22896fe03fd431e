//! Closed-form predictions of AST parameters and their comparison with
//! brute-force values.
//!
//! Every predictor here takes an `ASL_H(k, n)` specification. Relation counts
//! and third valencies are available for all `k`; intersection numbers only
//! for `k = 2`. For `k >= 3` the report also compares the partition with the
//! one induced by `AGL_H(k, n)`.

mod names;
mod products;
mod report;

use alloc::vec::Vec;

pub use names::{predicted_names, RelationName, RelationNames};
pub use products::{
    predict_nontrivial_products, predict_one_trivial_products, ProductPrediction, ProductRule,
    Reading,
};
pub use report::{
    crosscheck, crosscheck_spec, LineStatus, LineValue, PredictionReport, ReportLine,
};

use crate::action::{GroupSpec, Variant};
use crate::Error;

/// Number of nontrivial relations by kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationCounts {
    pub type1: u64,
    /// Type-2 relations for `k = 2`; zero otherwise.
    pub type2: u64,
    /// Whether the single class of points off `span(1⃗)` exists (`k >= 3`).
    pub big_orbit: bool,
}

impl RelationCounts {
    pub fn nontrivial(&self) -> u64 {
        self.type1 + self.type2 + u64::from(self.big_orbit)
    }
}

fn require_asl(spec: &GroupSpec) -> Result<(), Error> {
    if spec.variant() != Variant::Asl {
        return Err(Error::NotApplicable("closed forms are stated for ASL_H"));
    }
    Ok(())
}

/// Relation counts from the Burnside count `B` of `H`-orbits on `GF(n)`.
pub fn predict_relation_counts(spec: &GroupSpec) -> Result<RelationCounts, Error> {
    require_asl(spec)?;
    let b = spec.tower().burnside_orbit_count();
    Ok(if spec.k() == 2 {
        RelationCounts {
            type1: b - 2,
            type2: b - 1,
            big_orbit: false,
        }
    } else {
        RelationCounts {
            type1: b - 2,
            type2: 0,
            big_orbit: true,
        }
    })
}

/// Third valency of every named relation, trivial ones included, in the
/// order of [`predicted_names`].
pub fn predict_third_valencies(spec: &GroupSpec) -> Result<Vec<(RelationName, u64)>, Error> {
    require_asl(spec)?;
    let t = spec.tower();
    let n = u64::from(t.order());
    let degree = |a| t.h_orbit(a).len() as u64;
    Ok(predicted_names(spec)
        .into_iter()
        .map(|name| {
            let v = match name {
                RelationName::Trivial(1) | RelationName::Trivial(2) => 1,
                RelationName::Trivial(_) => 0,
                RelationName::Type1(a) => degree(a),
                RelationName::Type2(a) => n * degree(a),
                RelationName::Big => n.pow(spec.k() as u32) - n,
            };
            (name, v)
        })
        .collect())
}
