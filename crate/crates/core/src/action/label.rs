//! Relation labels for every triple of `Ω³`.
//!
//! A two-transitive group maps any `(x, y, z)` with `x ≠ y` to
//! `(0⃗, 1⃗, g(z))`, and two such triples share an orbit exactly when the
//! third points share an orbit of the two-point stabilizer `G_{0⃗,1⃗}`. The
//! labeler therefore computes the stabilizer orbits on `Ω` once and then
//! spends `O(k²)` field operations per triple.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{base_frame, group_generators, GroupSpec, TwoPointStabilizer, Vector};
use crate::ast::{TriplePartition, MAX_CLASSES};
use crate::Error;

/// Budget for `|Ω|³` on the fast labeling path (one byte per triple).
pub const MAX_LABELED_TRIPLES: u64 = 1 << 24;

/// Largest `|Ω|` accepted by [`bfs_orbit_oracle`].
pub const MAX_ORACLE_DOMAIN: u32 = 64;

/// Orbits of `G_{0⃗,1⃗}` on `Ω \ {0⃗, 1⃗}`, numbered by minimal member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerOrbits {
    orbit_of: Vec<u32>,
    representatives: Vec<u32>,
    sizes: Vec<u32>,
}

impl StabilizerOrbits {
    /// Orbit id reserved for the base points `0⃗` and `1⃗`.
    pub const BASE_POINT: u32 = u32::MAX;

    pub fn compute(spec: &GroupSpec) -> Self {
        let t = spec.tower();
        let size = spec.omega_size() as usize;
        let mut parent: Vec<u32> = (0..size as u32).collect();
        for g in TwoPointStabilizer::new(spec).generators() {
            for v in 0..size as u32 {
                let w = g.apply_index(v, t);
                union(&mut parent, v, w);
            }
        }

        let mut orbit_of = vec![Self::BASE_POINT; size];
        let mut root_id = vec![u32::MAX; size];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for v in 2..size as u32 {
            let r = find(&mut parent, v) as usize;
            if root_id[r] == u32::MAX {
                root_id[r] = representatives.len() as u32;
                representatives.push(v);
                sizes.push(0);
            }
            let id = root_id[r];
            orbit_of[v as usize] = id;
            sizes[id as usize] += 1;
        }
        Self {
            orbit_of,
            representatives,
            sizes,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Orbit id of the point with dense index `v`, or [`Self::BASE_POINT`].
    pub fn orbit_of(&self, v: u32) -> u32 {
        self.orbit_of[v as usize]
    }

    /// Minimal member of each orbit.
    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }
}

fn find(parent: &mut [u32], mut v: u32) -> u32 {
    while parent[v as usize] != v {
        let up = parent[parent[v as usize] as usize];
        parent[v as usize] = up;
        v = up;
    }
    v
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // Keep the smaller index as root.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

/// Fast relation labeling: `R0..R3` for the trivial patterns, otherwise
/// `4 + (stabilizer orbit of g(z))` with `g` the transporter of `(x, y)`.
#[derive(Clone, Debug)]
pub struct TripleLabeler {
    spec: GroupSpec,
    orbits: StabilizerOrbits,
    coords: Vec<u32>,
}

impl TripleLabeler {
    pub fn new(spec: &GroupSpec) -> Result<Self, Error> {
        let size = u64::from(spec.omega_size());
        let triples = size.saturating_pow(3);
        if triples > MAX_LABELED_TRIPLES {
            return Err(Error::ResourceBound {
                what: "triples to label",
                required: triples,
                limit: MAX_LABELED_TRIPLES,
            });
        }
        let orbits = StabilizerOrbits::compute(spec);
        let classes = 4 + orbits.len();
        if classes > MAX_CLASSES {
            return Err(Error::ResourceBound {
                what: "relation classes",
                required: classes as u64,
                limit: MAX_CLASSES as u64,
            });
        }
        let k = spec.k();
        let mut coords = Vec::with_capacity(size as usize * k);
        for v in 0..spec.omega_size() {
            coords.extend_from_slice(spec.decode(v).coords());
        }
        Ok(Self {
            spec: spec.clone(),
            orbits,
            coords,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn stabilizer_orbits(&self) -> &StabilizerOrbits {
        &self.orbits
    }

    pub fn class_count(&self) -> usize {
        4 + self.orbits.len()
    }

    pub fn omega_size(&self) -> u32 {
        self.spec.omega_size()
    }

    /// Number of labels for a fixed first coordinate: `|Ω|²`.
    pub fn slab_len(&self) -> usize {
        let s = self.omega_size() as usize;
        s * s
    }

    /// Writes the labels of every `(x, y, z)` for fixed `x` into `out`,
    /// indexed by `y · |Ω| + z`.
    pub fn label_slab(&self, x: u32, out: &mut [u8]) {
        let size = self.omega_size();
        let s = size as usize;
        let k = self.spec.k();
        let t = self.spec.tower();
        let n = t.order();
        assert_eq!(out.len(), s * s, "slab buffer has the wrong length");

        let xv = self.spec.decode(x);
        let mut moved = [0u32; super::MAX_DIM];
        for y in 0..size {
            let row = &mut out[y as usize * s..(y as usize + 1) * s];
            if y == x {
                row.fill(3);
                row[x as usize] = 0;
                continue;
            }
            let d = self.spec.decode(y).sub(&xv, t);
            let a = base_frame(&d, t)
                .and_then(|m| m.inverse(t))
                .expect("distinct points have a transporter");
            let shift: Vector = a.apply(&xv, t);
            for (z, slot) in row.iter_mut().enumerate() {
                let z = z as u32;
                *slot = if z == x {
                    2
                } else if z == y {
                    1
                } else {
                    let zc = &self.coords[z as usize * k..(z as usize + 1) * k];
                    for (i, m) in moved.iter_mut().enumerate().take(k) {
                        let mut acc = t.neg(shift.coords()[i]);
                        for (j, &c) in zc.iter().enumerate() {
                            acc = t.add(acc, t.mul(a.get(i, j), c));
                        }
                        *m = acc;
                    }
                    let w = moved[..k].iter().rev().fold(0, |acc, &c| acc * n + c);
                    (4 + self.orbits.orbit_of(w)) as u8
                };
            }
        }
    }

    /// Labels all of `Ω³` on the calling thread.
    pub fn label_all(&self) -> TriplePartition {
        let slab = self.slab_len();
        let mut labels = vec![0u8; slab * self.omega_size() as usize];
        for (x, chunk) in labels.chunks_mut(slab).enumerate() {
            self.label_slab(x as u32, chunk);
        }
        TriplePartition::from_labels(self.omega_size(), labels)
            .expect("labeler output is a partition")
    }
}

/// Ground-truth orbit partition of `Ω³` by breadth-first closure under
/// [`group_generators`] acting diagonally.
///
/// Classes are renumbered so that `R0..R3` come first and the rest follow
/// their minimal triple.
pub fn bfs_orbit_oracle(spec: &GroupSpec) -> Result<TriplePartition, Error> {
    let size = spec.omega_size();
    if size > MAX_ORACLE_DOMAIN {
        return Err(Error::ResourceBound {
            what: "oracle domain size",
            required: u64::from(size),
            limit: u64::from(MAX_ORACLE_DOMAIN),
        });
    }
    let t = spec.tower();
    let perms: Vec<Vec<u32>> = group_generators(spec)
        .iter()
        .map(|g| (0..size).map(|v| g.apply_index(v, t)).collect())
        .collect();

    let s = size as usize;
    let total = s * s * s;
    let mut orbit = vec![u32::MAX; total];
    let mut count = 0u32;
    let mut queue = VecDeque::new();
    for start in 0..total {
        if orbit[start] != u32::MAX {
            continue;
        }
        orbit[start] = count;
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            let (x, y, z) = (cur / (s * s), (cur / s) % s, cur % s);
            for perm in &perms {
                let next = (perm[x] as usize * s + perm[y] as usize) * s + perm[z] as usize;
                if orbit[next] == u32::MAX {
                    orbit[next] = count;
                    queue.push_back(next);
                }
            }
        }
        count += 1;
    }
    if count as usize > MAX_CLASSES {
        return Err(Error::ResourceBound {
            what: "relation classes",
            required: u64::from(count),
            limit: MAX_CLASSES as u64,
        });
    }

    // (0,0,0), (0,1,1), (1,0,1), (0,0,1) represent R0..R3.
    let at = |x: usize, y: usize, z: usize| orbit[(x * s + y) * s + z];
    let trivial = [at(0, 0, 0), at(0, 1, 1), at(1, 0, 1), at(0, 0, 1)];
    let mut remap = vec![u8::MAX; count as usize];
    for (id, &o) in trivial.iter().enumerate() {
        remap[o as usize] = id as u8;
    }
    let mut next = 4u8;
    for slot in remap.iter_mut() {
        if *slot == u8::MAX {
            *slot = next;
            next = next.wrapping_add(1);
        }
    }
    let labels = orbit.iter().map(|&o| remap[o as usize]).collect();
    TriplePartition::from_labels(size, labels)
}
