//! Executable checks of the four AST conditions on a [`TriplePartition`]:
//! constant valencies, principal regularity (constant intersection numbers),
//! closure under coordinate permutations, and the fixed trivial relations.
//!
//! Failures are data: each check returns the first counterexample in
//! encoding order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{RelationId, TriplePartition};

/// `Full` regularity is the default up to this `|Ω|`.
pub const FULL_REGULARITY_MAX_DOMAIN: u32 = 64;

/// Random members checked per large class in sampled mode.
pub const DEFAULT_SAMPLES_PER_CLASS: usize = 32;

pub const DEFAULT_SEED: u64 = 0x5eed_0a57;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    /// Every triple of every class.
    Full,
    /// Every member of the smallest class and of classes with at most
    /// `per_class` members; otherwise the minimal member plus `per_class`
    /// further members drawn with a ChaCha8 stream seeded by `seed`.
    Sampled { per_class: usize, seed: u64 },
}

impl RegularityMode {
    /// `Full` when `|Ω| <= 64`, else sampled with the default seed.
    pub fn auto(omega_size: u32) -> Self {
        if omega_size <= FULL_REGULARITY_MAX_DOMAIN {
            Self::Full
        } else {
            Self::sampled(DEFAULT_SEED)
        }
    }

    pub fn sampled(seed: u64) -> Self {
        Self::Sampled {
            per_class: DEFAULT_SAMPLES_PER_CLASS,
            seed,
        }
    }
}

/// A permutation of the three slots: `(x1, x2, x3) ↦ (x_σ(1), x_σ(2), x_σ(3))`,
/// zero-based.
pub type Permutation = [usize; 3];

/// `S₃`, identity first, then the transpositions, then the 3-cycles.
pub const S3: [Permutation; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

/// First, second and third valencies per relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valencies {
    per_class: Vec<[u64; 3]>,
}

impl Valencies {
    /// `n_i^(1)`: `|{z : (z, x, y) ∈ R_i}|`.
    pub fn first(&self, class: RelationId) -> u64 {
        self.per_class[class as usize][0]
    }

    /// `n_i^(2)`: `|{z : (x, z, y) ∈ R_i}|`.
    pub fn second(&self, class: RelationId) -> u64 {
        self.per_class[class as usize][1]
    }

    /// `n_i^(3)`: `|{z : (x, y, z) ∈ R_i}|`.
    pub fn third(&self, class: RelationId) -> u64 {
        self.per_class[class as usize][2]
    }

    pub fn as_slice(&self) -> &[[u64; 3]] {
        &self.per_class
    }
}

/// Sparse `p_{ijk}^l`, keyed `(i, j, k, l)`; absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionTensor {
    entries: BTreeMap<(RelationId, RelationId, RelationId, RelationId), u64>,
}

impl IntersectionTensor {
    pub fn get(&self, i: RelationId, j: RelationId, k: RelationId, l: RelationId) -> u64 {
        self.entries.get(&(i, j, k, l)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j, k, l)` order.
    pub fn iter(
        &self,
    ) -> impl Iterator<Item = ((RelationId, RelationId, RelationId, RelationId), u64)> + '_ {
        self.entries.iter().map(|(&key, &v)| (key, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }
}

/// `class ↦ image of the class under each σ ∈` [`S3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Action {
    table: Vec<[RelationId; 6]>,
}

impl S3Action {
    pub fn image(&self, class: RelationId, sigma: usize) -> RelationId {
        self.table[class as usize][sigma]
    }

    pub fn rows(&self) -> &[[RelationId; 6]] {
        &self.table
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeParameters {
    pub valencies: Valencies,
    pub intersection: IntersectionTensor,
    pub s3_action: S3Action,
}

pub type Triple = (u32, u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Fewer than five classes, or `|Ω| < 3`.
    TooSmall { omega_size: u32, class_count: usize },
    /// `expected` is `None` where any nontrivial id is required.
    TrivialRelation {
        triple: Triple,
        expected: Option<RelationId>,
        found: RelationId,
    },
    Valency {
        class: RelationId,
        /// 1, 2 or 3: which coordinate is free.
        slot: u8,
        reference: (u32, u32),
        pair: (u32, u32),
        expected: u64,
        found: u64,
    },
    Regularity {
        class: RelationId,
        reference: Triple,
        triple: Triple,
        ijk: (RelationId, RelationId, RelationId),
        expected: u64,
        found: u64,
    },
    S3Image {
        class: RelationId,
        sigma: Permutation,
        reference: Triple,
        triple: Triple,
        expected: RelationId,
        found: RelationId,
    },
    S3Size {
        class: RelationId,
        sigma: Permutation,
        image: RelationId,
        class_size: u64,
        image_size: u64,
    },
    /// A class total of `w`-counts that is not a multiple of the class size.
    ClassTotal {
        class: RelationId,
        ijk: (RelationId, RelationId, RelationId),
        total: u64,
        class_size: u64,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::TooSmall {
                omega_size,
                class_count,
            } => write!(
                f,
                "|Ω| = {omega_size} with {class_count} classes (need |Ω| >= 3 and at least 5 classes)"
            ),
            Witness::TrivialRelation {
                triple,
                expected: Some(e),
                found,
            } => write!(f, "triple {triple:?} must be in R{e} but has label {found}"),
            Witness::TrivialRelation {
                triple,
                expected: None,
                found,
            } => write!(
                f,
                "triple {triple:?} has distinct coordinates but trivial label {found}"
            ),
            Witness::Valency {
                class,
                slot,
                reference,
                pair,
                expected,
                found,
            } => write!(
                f,
                "class {class}, slot {slot}: pair {reference:?} counts {expected} but pair {pair:?} counts {found}"
            ),
            Witness::Regularity {
                class,
                reference,
                triple,
                ijk,
                expected,
                found,
            } => write!(
                f,
                "class {class}, (i,j,k) = {ijk:?}: {reference:?} counts {expected} but {triple:?} counts {found}"
            ),
            Witness::S3Image {
                class,
                sigma,
                reference,
                triple,
                expected,
                found,
            } => write!(
                f,
                "class {class} under σ = {sigma:?}: {reference:?} maps into {expected} but {triple:?} maps into {found}"
            ),
            Witness::S3Size {
                class,
                sigma,
                image,
                class_size,
                image_size,
            } => write!(
                f,
                "class {class} under σ = {sigma:?} lands in class {image} of size {image_size} != {class_size}"
            ),
            Witness::ClassTotal {
                class,
                ijk,
                total,
                class_size,
            } => write!(
                f,
                "class {class}, (i,j,k) = {ijk:?}: total {total} over the class is not a multiple of {class_size}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Passed,
    Failed(Witness),
}

impl Condition {
    pub fn passed(&self) -> bool {
        matches!(self, Condition::Passed)
    }

    fn from_result<T>(r: &Result<T, Witness>) -> Self {
        match r {
            Ok(_) => Condition::Passed,
            Err(w) => Condition::Failed(w.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub size: Condition,
    pub valency: Condition,
    pub regularity: Condition,
    pub s3_closure: Condition,
    pub trivial_relations: Condition,
    pub regularity_mode: RegularityMode,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.conditions().iter().all(|(_, c)| c.passed())
    }

    /// `(name, result)` in a fixed order.
    pub fn conditions(&self) -> [(&'static str, &Condition); 5] {
        [
            ("size", &self.size),
            ("valency", &self.valency),
            ("principal_regularity", &self.regularity),
            ("s3_closure", &self.s3_closure),
            ("trivial_relations", &self.trivial_relations),
        ]
    }
}

/// Runs every check. Parameters are returned when the valency, regularity
/// and closure checks all succeed.
pub fn verify_all(
    partition: &TriplePartition,
    mode: RegularityMode,
) -> (VerificationReport, Option<SchemeParameters>) {
    let size = if partition.omega_size() >= 3 && partition.class_count() >= 5 {
        Condition::Passed
    } else {
        Condition::Failed(Witness::TooSmall {
            omega_size: partition.omega_size(),
            class_count: partition.class_count(),
        })
    };
    let valency = verify_valency_condition(partition);
    let regularity = verify_principal_regularity(partition, mode);
    let s3 = verify_s3_closure(partition);
    let trivial = verify_trivial_relations(partition);
    let report = VerificationReport {
        size,
        valency: Condition::from_result(&valency),
        regularity: Condition::from_result(&regularity),
        s3_closure: Condition::from_result(&s3),
        trivial_relations: Condition::from_result(&trivial),
        regularity_mode: mode,
    };
    let params = match (valency, regularity, s3) {
        (Ok(valencies), Ok(intersection), Ok(s3_action)) => Some(SchemeParameters {
            valencies,
            intersection,
            s3_action,
        }),
        _ => None,
    };
    (report, params)
}

type Pair = (u32, u32);

/// Run-length counts of packed `(i, j, k)` keys.
type Profile = Vec<(u32, u64)>;

/// Checks that for every relation the number of `z` completing a pair of
/// distinct points is the same for all pairs, in each of the three slots.
pub fn verify_valency_condition(partition: &TriplePartition) -> Result<Valencies, Witness> {
    let s = partition.omega_size();
    let c = partition.class_count();
    let mut reference: Option<(Pair, Vec<[u64; 3]>)> = None;
    let mut counts = vec![[0u64; 3]; c];
    for x in 0..s {
        for y in 0..s {
            if x == y {
                continue;
            }
            counts.iter_mut().for_each(|row| *row = [0; 3]);
            for z in 0..s {
                counts[partition.label(z, x, y) as usize][0] += 1;
                counts[partition.label(x, z, y) as usize][1] += 1;
                counts[partition.label(x, y, z) as usize][2] += 1;
            }
            match &reference {
                None => reference = Some(((x, y), counts.clone())),
                Some((ref_pair, ref_counts)) => {
                    for (class, (want, got)) in ref_counts.iter().zip(&counts).enumerate() {
                        for slot in 0..3 {
                            if want[slot] != got[slot] {
                                return Err(Witness::Valency {
                                    class: class as RelationId,
                                    slot: slot as u8 + 1,
                                    reference: *ref_pair,
                                    pair: (x, y),
                                    expected: want[slot],
                                    found: got[slot],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let per_class = reference.map(|(_, c)| c).unwrap_or_else(|| vec![[0; 3]; c]);
    Ok(Valencies { per_class })
}

/// Sorted `(i, j, k)` keys of every `w`, for the triple at `index`.
fn regularity_keys(partition: &TriplePartition, index: usize, keys: &mut Vec<u32>) {
    let s = partition.omega_size() as usize;
    let labels = partition.labels();
    let (x, y, z) = partition.triple(index);
    let (x, y, z) = (x as usize, y as usize, z as usize);
    keys.clear();
    for w in 0..s {
        let i = labels[(w * s + y) * s + z] as u32;
        let j = labels[(x * s + w) * s + z] as u32;
        let k = labels[(x * s + y) * s + w] as u32;
        keys.push((i << 16) | (j << 8) | k);
    }
    keys.sort_unstable();
}

fn run_lengths(keys: &[u32]) -> Vec<(u32, u64)> {
    let mut out: Vec<(u32, u64)> = Vec::new();
    for &key in keys {
        match out.last_mut() {
            Some((k, n)) if *k == key => *n += 1,
            _ => out.push((key, 1)),
        }
    }
    out
}

fn unpack(key: u32) -> (RelationId, RelationId, RelationId) {
    ((key >> 16) as u8, (key >> 8) as u8, key as u8)
}

/// Triple indices to check, ascending.
fn regularity_members(partition: &TriplePartition, mode: RegularityMode) -> Vec<usize> {
    let RegularityMode::Sampled { per_class, seed } = mode else {
        return (0..partition.labels().len()).collect();
    };
    let sizes = partition.class_sizes();
    let smallest = (0..sizes.len()).min_by_key(|&c| (sizes[c], c)).unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Ranks within each class (0 = minimal member), ascending.
    let ranks: Vec<Vec<u64>> = sizes
        .iter()
        .enumerate()
        .map(|(c, &size)| {
            if c == smallest || size <= per_class as u64 + 1 {
                (0..size).collect()
            } else {
                let mut r: Vec<u64> = index::sample(&mut rng, size as usize - 1, per_class)
                    .into_iter()
                    .map(|i| i as u64 + 1)
                    .collect();
                r.push(0);
                r.sort_unstable();
                r
            }
        })
        .collect();
    let mut seen = vec![0u64; sizes.len()];
    let mut cursor = vec![0usize; sizes.len()];
    let mut out = Vec::new();
    for (i, &l) in partition.labels().iter().enumerate() {
        let c = l as usize;
        if ranks[c].get(cursor[c]) == Some(&seen[c]) {
            out.push(i);
            cursor[c] += 1;
        }
        seen[c] += 1;
    }
    out
}

/// Checks that for each class `l` the counts `p_{ijk}^l` do not depend on
/// the chosen `(x, y, z) ∈ R_l`, and returns them.
pub fn verify_principal_regularity(
    partition: &TriplePartition,
    mode: RegularityMode,
) -> Result<IntersectionTensor, Witness> {
    let c = partition.class_count();
    let mut reference: Vec<Option<(usize, Profile)>> = vec![None; c];
    let mut keys = Vec::with_capacity(partition.omega_size() as usize);
    for index in regularity_members(partition, mode) {
        let l = partition.labels()[index] as usize;
        regularity_keys(partition, index, &mut keys);
        match &reference[l] {
            None => reference[l] = Some((index, run_lengths(&keys))),
            Some((ref_index, profile)) => {
                let current = run_lengths(&keys);
                if current != *profile {
                    let (key, expected, found) = first_difference(profile, &current);
                    return Err(Witness::Regularity {
                        class: l as RelationId,
                        reference: partition.triple(*ref_index),
                        triple: partition.triple(index),
                        ijk: unpack(key),
                        expected,
                        found,
                    });
                }
            }
        }
    }
    let mut tensor = IntersectionTensor::default();
    for (l, r) in reference.iter().enumerate() {
        if let Some((_, profile)) = r {
            for &(key, count) in profile {
                let (i, j, k) = unpack(key);
                tensor.entries.insert((i, j, k, l as RelationId), count);
            }
        }
    }
    Ok(tensor)
}

/// Largest class count accepted by [`intersection_by_class_totals`].
pub const CLASS_TOTALS_MAX_CLASSES: usize = 128;

/// Intersection numbers as class averages: for every `l` the `w`-counts of
/// all triples in `R_l` are summed and divided by `|R_l|`. Independent of
/// [`verify_principal_regularity`]; a total that is not a multiple of the
/// class size is reported, which cannot happen when regularity holds.
///
/// # Panics
///
/// If the partition has more than [`CLASS_TOTALS_MAX_CLASSES`] classes.
pub fn intersection_by_class_totals(
    partition: &TriplePartition,
) -> Result<IntersectionTensor, Witness> {
    let c = partition.class_count();
    assert!(
        c <= CLASS_TOTALS_MAX_CLASSES,
        "too many classes for class totals"
    );
    let s = partition.omega_size() as usize;
    let labels = partition.labels();
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); c];
    for (index, &l) in labels.iter().enumerate() {
        by_class[l as usize].push(index);
    }
    let mut tensor = IntersectionTensor::default();
    let mut totals = vec![0u64; c * c * c];
    for (l, members) in by_class.iter().enumerate() {
        totals.iter_mut().for_each(|t| *t = 0);
        for &index in members {
            let (x, y, z) = (index / (s * s), (index / s) % s, index % s);
            for w in 0..s {
                let i = labels[(w * s + y) * s + z] as usize;
                let j = labels[(x * s + w) * s + z] as usize;
                let k = labels[(x * s + y) * s + w] as usize;
                totals[(i * c + j) * c + k] += 1;
            }
        }
        let size = members.len() as u64;
        for (key, &total) in totals.iter().enumerate() {
            if total == 0 {
                continue;
            }
            let ijk = (
                (key / (c * c)) as RelationId,
                ((key / c) % c) as RelationId,
                (key % c) as RelationId,
            );
            if total % size != 0 {
                return Err(Witness::ClassTotal {
                    class: l as RelationId,
                    ijk,
                    total,
                    class_size: size,
                });
            }
            tensor
                .entries
                .insert((ijk.0, ijk.1, ijk.2, l as RelationId), total / size);
        }
    }
    Ok(tensor)
}

fn first_difference(a: &[(u32, u64)], b: &[(u32, u64)]) -> (u32, u64, u64) {
    let mut merged: BTreeMap<u32, (u64, u64)> = BTreeMap::new();
    for &(k, n) in a {
        merged.entry(k).or_default().0 = n;
    }
    for &(k, n) in b {
        merged.entry(k).or_default().1 = n;
    }
    merged
        .into_iter()
        .find(|(_, (x, y))| x != y)
        .map(|(k, (x, y))| (k, x, y))
        .expect("profiles differ")
}

/// Checks that every permutation of the coordinates maps each class onto
/// exactly one class.
pub fn verify_s3_closure(partition: &TriplePartition) -> Result<S3Action, Witness> {
    let c = partition.class_count();
    let mut table: Vec<[Option<(RelationId, usize)>; 6]> = vec![[None; 6]; c];
    for (index, &l) in partition.labels().iter().enumerate() {
        let (x, y, z) = partition.triple(index);
        let t = [x, y, z];
        for (si, sigma) in S3.iter().enumerate() {
            let image = partition.label(t[sigma[0]], t[sigma[1]], t[sigma[2]]);
            match table[l as usize][si] {
                None => table[l as usize][si] = Some((image, index)),
                Some((expected, ref_index)) if expected != image => {
                    return Err(Witness::S3Image {
                        class: l,
                        sigma: *sigma,
                        reference: partition.triple(ref_index),
                        triple: (x, y, z),
                        expected,
                        found: image,
                    })
                }
                Some(_) => {}
            }
        }
    }
    let sizes = partition.class_sizes();
    let table: Vec<[RelationId; 6]> = table
        .into_iter()
        .map(|row| row.map(|cell| cell.expect("class is nonempty").0))
        .collect();
    for (class, row) in table.iter().enumerate() {
        for (si, &image) in row.iter().enumerate() {
            if sizes[class] != sizes[image as usize] {
                return Err(Witness::S3Size {
                    class: class as RelationId,
                    sigma: S3[si],
                    image,
                    class_size: sizes[class],
                    image_size: sizes[image as usize],
                });
            }
        }
    }
    Ok(S3Action { table })
}

/// The id a triple must carry if it is trivial; `None` for three distinct
/// coordinates.
pub(crate) fn trivial_class(x: u32, y: u32, z: u32) -> Option<RelationId> {
    match (x == y, y == z, x == z) {
        (true, true, _) => Some(0),
        (false, true, _) => Some(1),
        (_, _, true) => Some(2),
        (true, false, _) => Some(3),
        _ => None,
    }
}

/// Checks that ids 0..=3 are exactly `{(x,x,x)}`, `{(x,y,y)}`, `{(y,x,y)}`,
/// `{(y,y,x)}` with `x ≠ y`.
pub fn verify_trivial_relations(partition: &TriplePartition) -> Result<(), Witness> {
    for (index, &found) in partition.labels().iter().enumerate() {
        let (x, y, z) = partition.triple(index);
        let expected = trivial_class(x, y, z);
        let ok = match expected {
            Some(e) => e == found,
            None => found >= 4,
        };
        if !ok {
            return Err(Witness::TrivialRelation {
                triple: (x, y, z),
                expected,
                found,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{GroupSpec, TripleLabeler, Variant};

    fn labeled(p: u32, a: u32, w: u32, k: usize) -> TriplePartition {
        let spec = GroupSpec::from_parameters(Variant::Asl, p, a, w, k).unwrap();
        TripleLabeler::new(&spec).unwrap().label_all()
    }

    #[test]
    fn trivial_class_patterns() {
        assert_eq!(trivial_class(4, 4, 4), Some(0));
        assert_eq!(trivial_class(1, 4, 4), Some(1));
        assert_eq!(trivial_class(4, 1, 4), Some(2));
        assert_eq!(trivial_class(4, 4, 1), Some(3));
        assert_eq!(trivial_class(1, 2, 3), None);
    }

    #[test]
    fn valencies_of_trivial_relations() {
        let p = labeled(3, 1, 1, 2);
        let v = verify_valency_condition(&p).unwrap();
        assert_eq!(v.third(1), 1);
        assert_eq!(v.third(3), 0);
        assert_eq!(v.third(0), 0);
        assert_eq!(v.first(3), 1);
        let nontrivial: u64 = (4..p.class_count()).map(|c| v.third(c as u8)).sum();
        assert_eq!(nontrivial, 9 - 2);
    }

    #[test]
    fn gf4_third_valencies() {
        let p = labeled(2, 2, 1, 2);
        let v = verify_valency_condition(&p).unwrap();
        let mut third: Vec<u64> = (4..7).map(|c| v.third(c)).collect();
        third.sort_unstable();
        assert_eq!(third, [2, 4, 8]);
    }

    #[test]
    fn s3_table_basics() {
        let p = labeled(2, 2, 1, 2);
        let action = verify_s3_closure(&p).unwrap();
        assert_eq!(action.rows().len(), 7);
        for class in 0..7 {
            assert_eq!(action.image(class, 0), class);
        }
        // (1 2) swaps (x,y,y) and (y,x,y).
        assert_eq!(action.image(1, 1), 2);
        assert_eq!(action.image(2, 1), 1);
        assert_eq!(action.image(0, 1), 0);
    }

    #[test]
    fn negative_controls() {
        let p = labeled(3, 1, 1, 2);
        let swapped: Vec<u8> = p
            .labels()
            .iter()
            .map(|&l| match l {
                1 => 2,
                2 => 1,
                l => l,
            })
            .collect();
        let swapped = TriplePartition::from_labels(9, swapped).unwrap();
        assert!(matches!(
            verify_trivial_relations(&swapped),
            Err(Witness::TrivialRelation {
                triple: (0, 1, 0),
                expected: Some(2),
                found: 1
            })
        ));

        let merged: Vec<u8> = p
            .labels()
            .iter()
            .map(|&l| match l {
                2 => 1,
                l if l > 2 => l - 1,
                l => l,
            })
            .collect();
        let merged = TriplePartition::from_labels(9, merged).unwrap();
        assert!(verify_trivial_relations(&merged).is_err());

        // Moving one nontrivial triple into another class breaks regularity.
        let mut broken = p.labels().to_vec();
        let idx = p.index(0, 1, 2);
        broken[idx] = if broken[idx] == 4 { 5 } else { 4 };
        let broken = TriplePartition::from_labels(9, broken).unwrap();
        let (report, params) = verify_all(&broken, RegularityMode::Full);
        assert!(!report.all_passed());
        assert!(params.is_none());
        assert!(!report.valency.passed());
        assert!(!report.regularity.passed());
    }

    #[test]
    fn row_sum_identity() {
        // Σ_i p_{ijk}^l = |{w : (x,w,z) ∈ R_j, (x,y,w) ∈ R_k}| for any (x,y,z) ∈ R_l.
        let p = labeled(2, 2, 1, 2);
        let t = verify_principal_regularity(&p, RegularityMode::Full).unwrap();
        let c = p.class_count() as u8;
        for (l, &(x, y, z)) in p.class_representatives().iter().enumerate() {
            for j in 0..c {
                for k in 0..c {
                    let sum: u64 = (0..c).map(|i| t.get(i, j, k, l as u8)).sum();
                    let direct = (0..p.omega_size())
                        .filter(|&w| p.label(x, w, z) == j && p.label(x, y, w) == k)
                        .count() as u64;
                    assert_eq!(sum, direct);
                }
            }
        }
    }

    #[test]
    fn sampled_matches_full_on_small_case() {
        let p = labeled(3, 2, 1, 2);
        let full = verify_principal_regularity(&p, RegularityMode::Full).unwrap();
        let sampled = verify_principal_regularity(&p, RegularityMode::sampled(7)).unwrap();
        assert_eq!(full, sampled);
        let members = regularity_members(&p, RegularityMode::sampled(7));
        assert!(members.len() < p.labels().len());
        assert!(members.windows(2).all(|w| w[0] < w[1]));
    }
}
