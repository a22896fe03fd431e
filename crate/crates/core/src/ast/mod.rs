//! Triple partitions and the association-scheme-on-triples axioms.

mod verify;

use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

pub use verify::{
    intersection_by_class_totals, verify_all, verify_principal_regularity, verify_s3_closure,
    verify_trivial_relations, verify_valency_condition, Condition, IntersectionTensor, Permutation,
    RegularityMode, S3Action, SchemeParameters, Valencies, VerificationReport, Witness,
    CLASS_TOTALS_MAX_CLASSES, DEFAULT_SAMPLES_PER_CLASS, DEFAULT_SEED, FULL_REGULARITY_MAX_DOMAIN,
    S3,
};

/// Relation ids fit in one byte.
pub const MAX_CLASSES: usize = 256;

pub type RelationId = u8;

/// A labeling of `Ω × Ω × Ω` by relation ids, stored densely at index
/// `x·|Ω|² + y·|Ω| + z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriplePartition {
    omega_size: u32,
    labels: Vec<RelationId>,
    class_sizes: Vec<u64>,
}

impl TriplePartition {
    /// Wraps a label array. Every id below the largest one must be used.
    pub fn from_labels(omega_size: u32, labels: Vec<RelationId>) -> Result<Self, Error> {
        let s = omega_size as u64;
        if labels.len() as u64 != s * s * s {
            return Err(Error::MalformedPartition("label count is not |Ω|³"));
        }
        let mut class_sizes = vec![0u64; MAX_CLASSES];
        for &l in &labels {
            class_sizes[l as usize] += 1;
        }
        let count = class_sizes
            .iter()
            .rposition(|&c| c > 0)
            .map_or(0, |i| i + 1);
        class_sizes.truncate(count);
        if class_sizes.contains(&0) {
            return Err(Error::MalformedPartition("relation ids are not contiguous"));
        }
        Ok(Self {
            omega_size,
            labels,
            class_sizes,
        })
    }

    pub fn omega_size(&self) -> u32 {
        self.omega_size
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn labels(&self) -> &[RelationId] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<RelationId> {
        self.labels
    }

    #[inline]
    pub fn index(&self, x: u32, y: u32, z: u32) -> usize {
        let s = self.omega_size as usize;
        (x as usize * s + y as usize) * s + z as usize
    }

    #[inline]
    pub fn triple(&self, index: usize) -> (u32, u32, u32) {
        let s = self.omega_size as usize;
        (
            (index / (s * s)) as u32,
            ((index / s) % s) as u32,
            (index % s) as u32,
        )
    }

    #[inline]
    pub fn label(&self, x: u32, y: u32, z: u32) -> RelationId {
        self.labels[self.index(x, y, z)]
    }

    /// Minimal member of each class.
    pub fn class_representatives(&self) -> Vec<(u32, u32, u32)> {
        let mut reps = vec![None; self.class_count()];
        let mut missing = self.class_count();
        for (i, &l) in self.labels.iter().enumerate() {
            if reps[l as usize].is_none() {
                reps[l as usize] = Some(self.triple(i));
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        reps.into_iter()
            .map(|r| r.expect("class is nonempty"))
            .collect()
    }
}

/// Set-level relation between two partitions of the same `Ω³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionRelation {
    Equal,
    /// Every class of the first partition lies inside a class of the second.
    FirstRefinesSecond {
        witness: SplitWitness,
    },
    SecondRefinesFirst {
        witness: SplitWitness,
    },
    Incomparable {
        first_split: SplitWitness,
        second_split: SplitWitness,
    },
}

/// Two triples that share `class` in one partition and are separated by the
/// other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub class: RelationId,
    pub first: (u32, u32, u32),
    pub second: (u32, u32, u32),
}

/// Compares two partitions as set partitions of `Ω³`.
pub fn compare_partitions(
    a: &TriplePartition,
    b: &TriplePartition,
) -> Result<PartitionRelation, Error> {
    if a.omega_size() != b.omega_size() {
        return Err(Error::DomainMismatch {
            left: a.omega_size(),
            right: b.omega_size(),
        });
    }
    // Does `fine` refine `coarse`? If not, the minimal witness pair.
    fn split(fine: &TriplePartition, coarse: &TriplePartition) -> Option<SplitWitness> {
        let mut image: Vec<Option<(RelationId, usize)>> = vec![None; fine.class_count()];
        for (i, (&f, &c)) in fine.labels().iter().zip(coarse.labels()).enumerate() {
            match image[f as usize] {
                None => image[f as usize] = Some((c, i)),
                Some((c0, first)) if c0 != c => {
                    return Some(SplitWitness {
                        class: f,
                        first: fine.triple(first),
                        second: fine.triple(i),
                    })
                }
                Some(_) => {}
            }
        }
        None
    }
    // `split(a, b)` finds an a-class straddling two b-classes: a is not finer.
    let a_not_finer = split(a, b);
    let b_not_finer = split(b, a);
    Ok(match (a_not_finer, b_not_finer) {
        (None, None) => PartitionRelation::Equal,
        (None, Some(w)) => PartitionRelation::FirstRefinesSecond { witness: w },
        (Some(w), None) => PartitionRelation::SecondRefinesFirst { witness: w },
        (Some(first_split), Some(second_split)) => PartitionRelation::Incomparable {
            first_split,
            second_split,
        },
    })
}
