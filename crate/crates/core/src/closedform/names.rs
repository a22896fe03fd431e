use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{GroupSpec, Vector};
use crate::ast::{RelationId, TriplePartition};
use crate::gf::Elem;
use crate::Error;

/// Closed-form name of a relation.
///
/// `Type1(a)` is the class of `(0⃗, 1⃗, (a, 0, ..., 0))` with `a ∉ {0, 1}`,
/// `Type2(a)` the class of `(0⃗, 1⃗, (0, a))` with `a ≠ 0` (`k = 2` only) and
/// `Big` the class of `(0⃗, 1⃗, e_2)`, which for `k >= 3` collects every
/// point outside the span of `1⃗`. Elements are transversal representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationName {
    Trivial(u8),
    Type1(Elem),
    Type2(Elem),
    Big,
}

impl RelationName {
    pub fn is_trivial(&self) -> bool {
        matches!(self, RelationName::Trivial(_))
    }

    /// The field element carried by a type-1 or type-2 name.
    pub fn element(&self) -> Option<Elem> {
        match *self {
            RelationName::Type1(a) | RelationName::Type2(a) => Some(a),
            _ => None,
        }
    }

    /// The third point `v` of the representative `(0⃗, 1⃗, v)`.
    pub fn third_point(&self, k: usize) -> Option<Vector> {
        match *self {
            RelationName::Trivial(_) => None,
            RelationName::Type1(a) => Some(Vector::axis(k, a)),
            RelationName::Type2(a) => {
                let mut coords = vec![0; k];
                coords[1] = a;
                Some(Vector::new(coords))
            }
            RelationName::Big => Some(Vector::basis(k, 1)),
        }
    }
}

impl fmt::Display for RelationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationName::Trivial(i) => write!(f, "R{i}"),
            RelationName::Type1(a) => write!(f, "R^{a}"),
            RelationName::Type2(a) => write!(f, "^{a}R"),
            RelationName::Big => f.write_str("BIG"),
        }
    }
}

/// Every relation name the closed forms predict for `spec`: the trivial
/// ones, then type 1 over `T \ {1}`, then type 2 over `T` (`k = 2`) or the
/// single big orbit (`k >= 3`).
pub fn predicted_names(spec: &GroupSpec) -> Vec<RelationName> {
    let t = spec.tower();
    let transversal = t.h_orbit_transversal();
    let mut names: Vec<RelationName> = (0..4).map(RelationName::Trivial).collect();
    names.extend(
        transversal
            .iter()
            .filter(|&a| a != 1)
            .map(RelationName::Type1),
    );
    if spec.k() == 2 {
        names.extend(transversal.iter().map(RelationName::Type2));
    } else {
        names.push(RelationName::Big);
    }
    names
}

/// Bijection between the relation ids of a partition and closed-form names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationNames {
    by_id: Vec<RelationName>,
}

impl RelationNames {
    /// Matches names to ids through their representative triples and
    /// checks that every id receives exactly one name.
    pub fn for_partition(spec: &GroupSpec, partition: &TriplePartition) -> Result<Self, Error> {
        if partition.omega_size() != spec.omega_size() {
            return Err(Error::DomainMismatch {
                left: partition.omega_size(),
                right: spec.omega_size(),
            });
        }
        let mut by_id: Vec<Option<RelationName>> = vec![None; partition.class_count()];
        if by_id.len() < 4 {
            return Err(Error::RelationNaming(
                "partition lacks the trivial relations",
            ));
        }
        for (i, slot) in by_id.iter_mut().take(4).enumerate() {
            *slot = Some(RelationName::Trivial(i as u8));
        }
        for name in predicted_names(spec)
            .into_iter()
            .filter(|n| !n.is_trivial())
        {
            let v = name.third_point(spec.k()).expect("nontrivial name");
            let id = partition.label(0, 1, spec.encode(&v)) as usize;
            if id < 4 {
                return Err(Error::RelationNaming(
                    "representative lies in a trivial relation",
                ));
            }
            if by_id[id].replace(name).is_some() {
                return Err(Error::RelationNaming("two names share one relation"));
            }
        }
        let by_id = by_id
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::RelationNaming("a relation has no closed-form name"))?;
        Ok(Self { by_id })
    }

    pub fn name(&self, id: RelationId) -> RelationName {
        self.by_id[id as usize]
    }

    pub fn id(&self, name: &RelationName) -> Option<RelationId> {
        self.by_id
            .iter()
            .position(|n| n == name)
            .map(|i| i as RelationId)
    }

    pub fn len(&self) -> usize {
        self.by_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_id.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RelationId, RelationName)> + '_ {
        self.by_id
            .iter()
            .enumerate()
            .map(|(i, &n)| (i as RelationId, n))
    }
}
