//! The groups `ASL_H(k, n)` and `AGL_H(k, n)` acting on `V = GF(n)^k` by
//! semilinear affine maps `v ↦ A φ(v) + b`.

mod label;
mod linalg;

use alloc::vec::Vec;

use crate::gf::{Elem, FieldTower, GaloisSubgroup};
use crate::Error;

pub use label::{
    bfs_orbit_oracle, StabilizerOrbits, TripleLabeler, MAX_LABELED_TRIPLES, MAX_ORACLE_DOMAIN,
};
pub use linalg::{Matrix, Vector};

/// Largest supported dimension `k`.
pub const MAX_DIM: usize = 8;

/// One element `v ↦ A φ(v) + b` with `φ = x ↦ x^(p^frobenius)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemilinearMap {
    matrix: Matrix,
    translation: Vector,
    frobenius: u32,
}

impl SemilinearMap {
    pub fn new(matrix: Matrix, translation: Vector, frobenius: u32) -> Result<Self, Error> {
        if matrix.dim() != translation.dim() {
            return Err(Error::DimensionMismatch {
                expected: matrix.dim(),
                found: translation.dim(),
            });
        }
        Ok(Self {
            matrix,
            translation,
            frobenius,
        })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            matrix: Matrix::identity(k),
            translation: Vector::zero(k),
            frobenius: 0,
        }
    }

    pub fn linear(matrix: Matrix) -> Self {
        let k = matrix.dim();
        Self {
            matrix,
            translation: Vector::zero(k),
            frobenius: 0,
        }
    }

    pub fn translation_by(b: Vector) -> Self {
        Self {
            matrix: Matrix::identity(b.dim()),
            translation: b,
            frobenius: 0,
        }
    }

    /// Componentwise Frobenius `v ↦ v^(p^i)`.
    pub fn field_automorphism(k: usize, i: u32) -> Self {
        Self {
            matrix: Matrix::identity(k),
            translation: Vector::zero(k),
            frobenius: i,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn frobenius_exponent(&self) -> u32 {
        self.frobenius
    }

    pub fn apply(&self, v: &Vector, t: &FieldTower) -> Result<Vector, Error> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        let moved = self.matrix.apply(&v.frobenius(self.frobenius, t), t);
        Ok(moved.add(&self.translation, t))
    }

    /// Applies the map to a dense vector index.
    pub fn apply_index(&self, index: u32, t: &FieldTower) -> u32 {
        let v = Vector::decode(index, t.order(), self.dim());
        self.apply(&v, t)
            .expect("dimension is consistent")
            .encode(t.order())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, t: &FieldTower) -> Self {
        let f = self.frobenius;
        let matrix = self.matrix.mul(&other.matrix.frobenius(f, t), t);
        let translation = self
            .matrix
            .apply(&other.translation.frobenius(f, t), t)
            .add(&self.translation, t);
        Self {
            matrix,
            translation,
            frobenius: (f + other.frobenius) % t.alpha(),
        }
    }

    /// Membership test for the group named by `spec`.
    pub fn belongs_to(&self, spec: &GroupSpec) -> bool {
        let t = spec.tower();
        if self.dim() != spec.k() || !spec.h().contains_exponent(self.frobenius) {
            return false;
        }
        if self.translation.coords().iter().any(|&c| !t.contains(c)) {
            return false;
        }
        let det = self.matrix.det(t);
        match spec.variant() {
            Variant::Asl => det == 1,
            Variant::Agl => det != 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `ASL(k, n) ⋊ H`: matrices of determinant 1.
    Asl,
    /// `AGL(k, n) ⋊ H`: all invertible matrices.
    Agl,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Asl => "asl",
            Variant::Agl => "agl",
        }
    }
}

/// Names one of the groups `ASL_H(k, n)` / `AGL_H(k, n)` with
/// `H = Gal(GF(n)/GF(q))`.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    variant: Variant,
    k: usize,
    tower: FieldTower,
    omega_size: u32,
}

impl GroupSpec {
    pub fn new(variant: Variant, k: usize, tower: FieldTower) -> Result<Self, Error> {
        if !(2..=MAX_DIM).contains(&k) {
            return Err(Error::InvalidDimension(k));
        }
        let size = u64::from(tower.order()).pow(k as u32);
        if size > u64::from(u32::MAX) {
            return Err(Error::ResourceBound {
                what: "vector space size n^k",
                required: size,
                limit: u64::from(u32::MAX),
            });
        }
        Ok(Self {
            variant,
            k,
            tower,
            omega_size: size as u32,
        })
    }

    /// Shorthand for `GroupSpec::new(variant, k, FieldTower::new(p, alpha, omega)?)`.
    pub fn from_parameters(
        variant: Variant,
        p: u32,
        alpha: u32,
        omega: u32,
        k: usize,
    ) -> Result<Self, Error> {
        Self::new(variant, k, FieldTower::new(p, alpha, omega)?)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn h(&self) -> GaloisSubgroup {
        self.tower.galois_subgroup()
    }

    /// `|Ω| = n^k`.
    pub fn omega_size(&self) -> u32 {
        self.omega_size
    }

    /// The same `(p, alpha, omega, k)` with another variant.
    pub fn with_variant(&self, variant: Variant) -> Self {
        Self {
            variant,
            ..self.clone()
        }
    }

    /// `1⃗ = (1, 0, ..., 0)`.
    pub fn one_vector(&self) -> Vector {
        Vector::axis(self.k, 1)
    }

    pub fn decode(&self, index: u32) -> Vector {
        Vector::decode(index, self.tower.order(), self.k)
    }

    pub fn encode(&self, v: &Vector) -> u32 {
        v.encode(self.tower.order())
    }

    /// Group order `n^k · |SL or GL(k, n)| · |H|`, saturating.
    pub fn group_order(&self) -> u64 {
        let n = u64::from(self.tower.order());
        n.saturating_pow(self.k as u32)
            .saturating_mul(linear_group_order(self.variant, self.k, n))
            .saturating_mul(u64::from(self.h().order()))
    }

    /// An `F_p`-basis of `GF(n)`: the powers `1, x, ..., x^(alpha-1)` of the
    /// root of the defining polynomial.
    fn additive_basis(&self) -> impl Iterator<Item = Elem> {
        let p = self.tower.characteristic();
        (0..self.tower.alpha()).map(move |i| p.pow(i))
    }
}

/// `|SL(k, n)|` or `|GL(k, n)|`, saturating.
pub fn linear_group_order(variant: Variant, k: usize, n: u64) -> u64 {
    let nk = n.saturating_pow(k as u32);
    let gl = (0..k as u32).fold(1u64, |acc, i| acc.saturating_mul(nk - n.pow(i)));
    match variant {
        Variant::Asl => gl / (n - 1),
        Variant::Agl => gl,
    }
}

/// A generating set: transvections `E_ij(λ)` for `λ` in an `F_p`-basis of
/// `GF(n)` (these generate `SL(k, n)`), `diag(g, 1, ..., 1)` for `AGL`,
/// translations by the standard basis, and the generator of `H`.
pub fn group_generators(spec: &GroupSpec) -> Vec<SemilinearMap> {
    let k = spec.k();
    let mut gens = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                for lambda in spec.additive_basis() {
                    gens.push(SemilinearMap::linear(Matrix::transvection(k, i, j, lambda)));
                }
            }
        }
    }
    if spec.variant() == Variant::Agl && spec.tower().order() > 2 {
        gens.push(SemilinearMap::linear(Matrix::diagonal_scaling(
            k,
            0,
            spec.tower().generator(),
        )));
    }
    for i in 0..k {
        gens.push(SemilinearMap::translation_by(Vector::basis(k, i)));
    }
    if !spec.h().is_trivial() {
        gens.push(SemilinearMap::field_automorphism(
            k,
            spec.h().generator_exponent(),
        ));
    }
    gens
}

/// Returns `g` in the group with `g(x) = 0⃗` and `g(y) = 1⃗`.
///
/// `g(v) = A (v - x)` where `A` is the inverse of a determinant-one matrix
/// whose first column is `y - x`; the remaining columns are standard basis
/// vectors with the last one rescaled to fix the determinant.
pub fn transporter_to_base(
    spec: &GroupSpec,
    x: &Vector,
    y: &Vector,
) -> Result<SemilinearMap, Error> {
    let t = spec.tower();
    let k = spec.k();
    for v in [x, y] {
        if v.dim() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: v.dim(),
            });
        }
    }
    let d = y.sub(x, t);
    let a = base_frame(&d, t).ok_or(Error::SamePoint)?;
    let a = a.inverse(t).expect("frame has determinant 1");
    let b = a.apply(x, t);
    let zero = Vector::zero(k);
    SemilinearMap::new(a, zero.sub(&b, t), 0)
}

/// A determinant-one matrix with first column `d`, or `None` if `d = 0`.
pub(crate) fn base_frame(d: &Vector, t: &crate::gf::FieldTower) -> Option<Matrix> {
    let k = d.dim();
    let pivot = d.coords().iter().position(|&c| c != 0)?;
    let mut m = Matrix::identity(k);
    for (r, &c) in d.coords().iter().enumerate() {
        m.set(r, 0, c);
    }
    for (col, j) in (1..).zip((0..k).filter(|&j| j != pivot)) {
        for r in 0..k {
            m.set(r, col, u32::from(r == j));
        }
    }
    let det = m.det(t);
    let fix = t.inv(det)?;
    for r in 0..k {
        let v = m.get(r, k - 1);
        m.set(r, k - 1, t.mul(v, fix));
    }
    Some(m)
}

/// The two-point stabilizer `G_{0⃗,1⃗}`: maps `v ↦ A φ(v)` with `φ ∈ H` and
/// `A = [[1, r], [0, B]]` (first column `e_1`, so `A 1⃗ = 1⃗`), where
/// `B ∈ SL(k-1, n)` for `ASL` and `B ∈ GL(k-1, n)` for `AGL`.
#[derive(Clone, Debug)]
pub struct TwoPointStabilizer {
    spec: GroupSpec,
}

/// Bound on `n^((k-1)^2)` for explicit stabilizer enumeration.
pub const MAX_STABILIZER_BLOCK_SCAN: u64 = 1 << 20;

impl TwoPointStabilizer {
    pub fn new(spec: &GroupSpec) -> Self {
        Self { spec: spec.clone() }
    }

    /// `n^(k-1) · |SL or GL(k-1, n)| · |H|`.
    pub fn order(&self) -> u64 {
        let n = u64::from(self.spec.tower().order());
        let m = self.spec.k() - 1;
        n.saturating_pow(m as u32)
            .saturating_mul(linear_group_order(self.spec.variant(), m, n))
            .saturating_mul(u64::from(self.spec.h().order()))
    }

    /// Generators: `E_1j(λ)` for `j >= 2`, transvections inside the lower
    /// block, `diag(1, g, 1, ...)` for `AGL`, and the generator of `H`.
    pub fn generators(&self) -> Vec<SemilinearMap> {
        let spec = &self.spec;
        let k = spec.k();
        let mut gens = Vec::new();
        for i in 0..k {
            for j in 1..k {
                if i != j {
                    for lambda in spec.additive_basis() {
                        gens.push(SemilinearMap::linear(Matrix::transvection(k, i, j, lambda)));
                    }
                }
            }
        }
        if spec.variant() == Variant::Agl && spec.tower().order() > 2 {
            gens.push(SemilinearMap::linear(Matrix::diagonal_scaling(
                k,
                1,
                spec.tower().generator(),
            )));
        }
        if !spec.h().is_trivial() {
            gens.push(SemilinearMap::field_automorphism(
                k,
                spec.h().generator_exponent(),
            ));
        }
        gens
    }

    /// Every element exactly once.
    pub fn elements(&self) -> Result<Vec<SemilinearMap>, Error> {
        let spec = &self.spec;
        let t = spec.tower();
        let k = spec.k();
        let m = k - 1;
        let n = u64::from(t.order());
        let scan = n.saturating_pow((m * m) as u32);
        if scan > MAX_STABILIZER_BLOCK_SCAN {
            return Err(Error::ResourceBound {
                what: "stabilizer block enumeration",
                required: scan,
                limit: MAX_STABILIZER_BLOCK_SCAN,
            });
        }
        let blocks: Vec<Matrix> = Matrix::all(m, t)
            .filter(|b| match spec.variant() {
                Variant::Asl => b.det(t) == 1,
                Variant::Agl => b.det(t) != 0,
            })
            .collect();
        let mut out = Vec::new();
        for row_index in 0..n.pow(m as u32) {
            let top = Vector::decode(row_index as u32, t.order(), m);
            for b in &blocks {
                let mut a = Matrix::identity(k);
                for j in 0..m {
                    a.set(0, j + 1, top.coords()[j]);
                    for i in 0..m {
                        a.set(i + 1, j + 1, b.get(i, j));
                    }
                }
                for e in spec.h().exponents() {
                    out.push(SemilinearMap::new(a.clone(), Vector::zero(k), e)?);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(variant: Variant, p: u32, a: u32, w: u32, k: usize) -> GroupSpec {
        GroupSpec::from_parameters(variant, p, a, w, k).unwrap()
    }

    #[test]
    fn apply_examples() {
        let s = spec(Variant::Asl, 3, 1, 1, 2);
        let t = s.tower();
        let v = Vector::new(vec![1, 2]);
        assert_eq!(SemilinearMap::identity(2).apply(&v, t).unwrap(), v);

        // [[1, c], [0, 1]] (x, y) = (x + c y, y)
        let c = 2;
        let shear = SemilinearMap::linear(Matrix::transvection(2, 0, 1, c));
        assert_eq!(
            shear.apply(&v, t).unwrap(),
            Vector::new(vec![t.add(1, t.mul(c, 2)), 2])
        );

        let s4 = spec(Variant::Asl, 2, 2, 1, 2);
        let t4 = s4.tower();
        let g = t4.generator();
        let frob = SemilinearMap::field_automorphism(2, 1);
        assert_eq!(
            frob.apply(&Vector::axis(2, g), t4).unwrap(),
            Vector::axis(2, t4.mul(g, g))
        );

        assert_eq!(
            shear.apply(&Vector::zero(3), t).unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn generator_sets() {
        let s = spec(Variant::Asl, 2, 1, 1, 2);
        let gens = group_generators(&s);
        assert_eq!(gens.len(), 4);
        assert!(gens.iter().all(|g| g.belongs_to(&s)));

        let s4 = spec(Variant::Asl, 2, 2, 1, 2);
        // 2 transvection slots × 2 basis scalars + 2 translations + Frobenius
        assert_eq!(group_generators(&s4).len(), 7);

        let agl = spec(Variant::Agl, 3, 1, 1, 2);
        let gens = group_generators(&agl);
        assert_eq!(gens.len(), 5);
        assert!(gens.iter().any(|g| g.matrix().det(agl.tower()) == 2));
        assert!(!gens
            .iter()
            .all(|g| g.belongs_to(&agl.with_variant(Variant::Asl))));
    }

    #[test]
    fn transporter_examples() {
        let s = spec(Variant::Asl, 3, 1, 1, 2);
        let t = s.tower();
        let zero = Vector::zero(2);
        let g = transporter_to_base(&s, &zero, &s.one_vector()).unwrap();
        assert_eq!(g, SemilinearMap::identity(2));

        let e2 = Vector::basis(2, 1);
        let g = transporter_to_base(&s, &zero, &e2).unwrap();
        // [[0, 1], [-1, 0]]
        assert_eq!(g.matrix().entries(), &[0, 1, 2, 0]);
        assert_eq!(g.matrix().det(t), 1);
        assert_eq!(g.apply(&e2, t).unwrap(), s.one_vector());

        assert_eq!(
            transporter_to_base(&s, &e2, &e2).unwrap_err(),
            Error::SamePoint
        );
    }

    #[test]
    fn transporter_on_all_pairs_gf9() {
        let s = spec(Variant::Asl, 3, 2, 1, 2);
        let t = s.tower();
        let size = s.omega_size();
        for xi in 0..size {
            for yi in 0..size {
                if xi == yi {
                    continue;
                }
                let (x, y) = (s.decode(xi), s.decode(yi));
                let g = transporter_to_base(&s, &x, &y).unwrap();
                assert!(g.belongs_to(&s));
                assert!(g.apply(&x, t).unwrap().is_zero());
                assert_eq!(g.apply(&y, t).unwrap(), s.one_vector());
            }
        }
    }

    #[test]
    fn stabilizer_enumeration() {
        let s = spec(Variant::Asl, 3, 1, 1, 2);
        let st = TwoPointStabilizer::new(&s);
        let els = st.elements().unwrap();
        assert_eq!(els.len(), 3);
        assert_eq!(st.order(), 3);

        let s32 = spec(Variant::Asl, 2, 1, 1, 3);
        let els = TwoPointStabilizer::new(&s32).elements().unwrap();
        assert_eq!(els.len(), 24);
        for s in [s, s32] {
            let t = s.tower();
            for g in TwoPointStabilizer::new(&s).elements().unwrap() {
                assert!(g.belongs_to(&s));
                assert!(g.apply(&Vector::zero(s.k()), t).unwrap().is_zero());
                assert_eq!(g.apply(&s.one_vector(), t).unwrap(), s.one_vector());
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(linear_group_order(Variant::Asl, 3, 2), 168);
        assert_eq!(linear_group_order(Variant::Agl, 2, 3), 48);
        assert_eq!(spec(Variant::Asl, 2, 2, 1, 2).group_order(), 16 * 60 * 2);
    }

    #[test]
    fn rejects_dimension_one() {
        let t = FieldTower::new(5, 1, 1).unwrap();
        assert_eq!(
            GroupSpec::new(Variant::Asl, 1, t).unwrap_err(),
            Error::InvalidDimension(1)
        );
    }
}
