use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, FieldTower};

/// A vector of `GF(n)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    coords: Vec<Elem>,
}

impl Vector {
    pub fn new(coords: Vec<Elem>) -> Self {
        Self { coords }
    }

    pub fn zero(k: usize) -> Self {
        Self { coords: vec![0; k] }
    }

    /// `a⃗ = (a, 0, ..., 0)`.
    pub fn axis(k: usize, a: Elem) -> Self {
        let mut v = Self::zero(k);
        v.coords[0] = a;
        v
    }

    /// The standard basis vector `e_i` (zero-based).
    pub fn basis(k: usize, i: usize) -> Self {
        let mut v = Self::zero(k);
        v.coords[i] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    /// Dense index `Σ coords[i] · n^i`.
    pub fn encode(&self, n: u32) -> u32 {
        self.coords.iter().rev().fold(0, |acc, &c| acc * n + c)
    }

    pub fn decode(index: u32, n: u32, k: usize) -> Self {
        let mut index = index;
        let coords = (0..k)
            .map(|_| {
                let c = index % n;
                index /= n;
                c
            })
            .collect();
        Self { coords }
    }

    pub fn add(&self, other: &Self, t: &FieldTower) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| t.add(a, b))
            .collect();
        Self { coords }
    }

    pub fn sub(&self, other: &Self, t: &FieldTower) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| t.sub(a, b))
            .collect();
        Self { coords }
    }

    /// Componentwise `x ↦ x^(p^i)`.
    pub fn frobenius(&self, i: u32, t: &FieldTower) -> Self {
        Self {
            coords: self.coords.iter().map(|&a| t.frobenius(i, a)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// A square matrix over `GF(n)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self { dim, entries }
    }

    /// Builds a matrix from row-major entries; `None` unless there are
    /// `dim * dim` of them.
    pub fn from_rows(dim: usize, entries: Vec<Elem>) -> Option<Self> {
        (entries.len() == dim * dim).then_some(Self { dim, entries })
    }

    /// The transvection `I + λ E_{row,col}`.
    pub fn transvection(dim: usize, row: usize, col: usize, lambda: Elem) -> Self {
        debug_assert_ne!(row, col);
        let mut m = Self::identity(dim);
        m.entries[row * dim + col] = lambda;
        m
    }

    /// `diag(1, ..., d, ..., 1)` with `d` at position `at`.
    pub fn diagonal_scaling(dim: usize, at: usize, d: Elem) -> Self {
        let mut m = Self::identity(dim);
        m.entries[at * dim + at] = d;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Elem) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn column(&self, col: usize) -> Vector {
        Vector::new((0..self.dim).map(|r| self.get(r, col)).collect())
    }

    pub fn mul(&self, other: &Self, t: &FieldTower) -> Self {
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0;
                for l in 0..d {
                    acc = t.add(acc, t.mul(self.get(i, l), other.get(l, j)));
                }
                entries[i * d + j] = acc;
            }
        }
        Self { dim: d, entries }
    }

    pub fn apply(&self, v: &Vector, t: &FieldTower) -> Vector {
        let coords = (0..self.dim)
            .map(|i| {
                v.coords()
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (j, &x)| t.add(acc, t.mul(self.get(i, j), x)))
            })
            .collect();
        Vector::new(coords)
    }

    /// Entrywise `x ↦ x^(p^i)`.
    pub fn frobenius(&self, i: u32, t: &FieldTower) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&a| t.frobenius(i, a)).collect(),
        }
    }

    pub fn det(&self, t: &FieldTower) -> Elem {
        let d = self.dim;
        let mut m = self.entries.clone();
        let mut det = 1;
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| m[r * d + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                }
                det = t.neg(det);
            }
            let pv = m[col * d + col];
            det = t.mul(det, pv);
            let pv_inv = t.inv(pv).expect("pivot is nonzero");
            for r in col + 1..d {
                let factor = t.mul(m[r * d + col], pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..d {
                    let sub = t.mul(factor, m[col * d + j]);
                    m[r * d + j] = t.sub(m[r * d + j], sub);
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self, t: &FieldTower) -> Option<Self> {
        let d = self.dim;
        let mut m = self.entries.clone();
        let mut inv = Self::identity(d).entries;
        for col in 0..d {
            let pivot = (col..d).find(|&r| m[r * d + col] != 0)?;
            if pivot != col {
                for j in 0..d {
                    m.swap(pivot * d + j, col * d + j);
                    inv.swap(pivot * d + j, col * d + j);
                }
            }
            let pv_inv = t.inv(m[col * d + col])?;
            for j in 0..d {
                m[col * d + j] = t.mul(m[col * d + j], pv_inv);
                inv[col * d + j] = t.mul(inv[col * d + j], pv_inv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = m[r * d + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..d {
                    m[r * d + j] = t.sub(m[r * d + j], t.mul(factor, m[col * d + j]));
                    inv[r * d + j] = t.sub(inv[r * d + j], t.mul(factor, inv[col * d + j]));
                }
            }
        }
        Some(Self {
            dim: d,
            entries: inv,
        })
    }

    /// Every `dim × dim` matrix over the field, in lexicographic entry order.
    pub(crate) fn all(dim: usize, t: &FieldTower) -> impl Iterator<Item = Self> + '_ {
        let n = u64::from(t.order());
        let count = n.pow((dim * dim) as u32);
        (0..count).map(move |mut idx| {
            let entries = (0..dim * dim)
                .map(|_| {
                    let c = (idx % n) as Elem;
                    idx /= n;
                    c
                })
                .collect();
            Self { dim, entries }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let t = FieldTower::new(3, 1, 1).unwrap();
        let m = Matrix::from_rows(2, vec![0, 1, 2, 0]).unwrap();
        assert_eq!(m.det(&t), 1);
        let inv = m.inverse(&t).unwrap();
        assert_eq!(m.mul(&inv, &t), Matrix::identity(2));
        let singular = Matrix::from_rows(2, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(singular.det(&t), 0);
        assert!(singular.inverse(&t).is_none());
    }

    #[test]
    fn sl_counts() {
        // |SL(2,3)| = 24, |GL(2,2)| = 6, |SL(3,2)| = 168.
        let gf3 = FieldTower::new(3, 1, 1).unwrap();
        assert_eq!(
            Matrix::all(2, &gf3).filter(|m| m.det(&gf3) == 1).count(),
            24
        );
        let gf2 = FieldTower::new(2, 1, 1).unwrap();
        assert_eq!(Matrix::all(2, &gf2).filter(|m| m.det(&gf2) != 0).count(), 6);
        assert_eq!(
            Matrix::all(3, &gf2).filter(|m| m.det(&gf2) == 1).count(),
            168
        );
    }

    #[test]
    fn vector_encoding() {
        let v = Vector::new(vec![2, 1, 3]);
        assert_eq!(v.encode(4), 2 + 4 + 48);
        assert_eq!(Vector::decode(54, 4, 3), v);
        assert_eq!(Vector::axis(2, 1).encode(5), 1);
    }
}
