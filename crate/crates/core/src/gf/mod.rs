//! Finite-field towers `GF(p) ⊆ GF(q) ⊆ GF(n)` with `q = p^omega`,
//! `n = p^alpha`, and the Galois group `H = Gal(GF(n)/GF(q))`.
//!
//! Elements are integers `0..n`: the base-`p` digits of an element are the
//! coefficients of its polynomial representative, lowest degree first. The
//! defining polynomial is always the Conway polynomial, so the root `x` (or
//! the least primitive root for prime fields) generates the multiplicative
//! group and multiplication runs through exp/log tables.

pub mod conway;
pub(crate) mod util;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::Error;

pub use util::is_prime;

/// A field element in its integer encoding.
pub type Elem = u32;

/// Largest supported field order `p^alpha`.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u32,
    alpha: u32,
    omega: u32,
    order: u32,
    sub_order: u32,
    poly: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl FieldTower {
    /// Builds `GF(p^alpha)` over `GF(p^omega)`.
    pub fn new(p: u32, alpha: u32, omega: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if alpha == 0 || omega == 0 {
            return Err(Error::ZeroDegree);
        }
        if alpha % omega != 0 {
            return Err(Error::OmegaNotDivisor { alpha, omega });
        }
        let order = (0..alpha)
            .try_fold(1u64, |acc, _| acc.checked_mul(u64::from(p)))
            .filter(|&n| n <= u64::from(MAX_FIELD_ORDER))
            .ok_or(Error::FieldTooLarge { p, alpha })? as u32;
        let sub_order = p.pow(omega);
        let poly =
            conway::conway_polynomial(p, alpha).ok_or(Error::MissingPolynomial { p, alpha })?;

        let group = (order - 1) as usize;
        let mut exp = vec![0; 2 * group];
        let mut log = vec![0; order as usize];
        let mut digits = vec![0u32; alpha as usize];
        digits[0] = 1;
        for i in 0..group {
            let e = encode_digits(&digits, p);
            exp[i] = e;
            exp[i + group] = e;
            log[e as usize] = i as u32;
            times_root(&mut digits, &poly, p);
        }
        debug_assert_eq!(
            encode_digits(&digits, p),
            1,
            "defining polynomial is not primitive"
        );

        Ok(Self {
            p,
            alpha,
            omega,
            order,
            sub_order,
            poly,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    /// `n = p^alpha`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `q = p^omega`, the size of the fixed subfield of `H`.
    pub fn subfield_order(&self) -> u32 {
        self.sub_order
    }

    /// Defining polynomial, constant term first, leading 1 included.
    pub fn polynomial(&self) -> &[u32] {
        &self.poly
    }

    /// The primitive element whose powers fill the exp table.
    pub fn generator(&self) -> Elem {
        if self.order == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.order
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.alpha == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.alpha == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let group = self.order - 1;
        Some(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    /// `a / b`; `None` when `b` is zero.
    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|b_inv| self.mul(a, b_inv))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = u64::from(self.order - 1);
        let l = u64::from(self.log[a as usize]) * (e % group) % group;
        self.exp[l as usize]
    }

    /// Discrete logarithm to base [`generator`](Self::generator).
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `a^(p^i)`, the `i`-th power of the absolute Frobenius.
    pub fn frobenius(&self, i: u32, a: Elem) -> Elem {
        if a == 0 || self.order == 2 {
            return a;
        }
        let group = u64::from(self.order - 1);
        let shift = util::pow_mod(u64::from(self.p), u64::from(i % self.alpha), group);
        let l = u64::from(self.log[a as usize]) * shift % group;
        self.exp[l as usize]
    }

    /// `H = Gal(GF(n)/GF(q))`.
    pub fn galois_subgroup(&self) -> GaloisSubgroup {
        GaloisSubgroup {
            alpha: self.alpha,
            omega: self.omega,
        }
    }

    /// Degree of `a` over `GF(q)`: the least `d >= 1` with `a^(q^d) = a`,
    /// which is also the size of the `H`-orbit of `a`.
    pub fn degree_over_subfield(&self, a: Elem) -> u32 {
        let mut d = 1;
        let mut b = self.frobenius(self.omega, a);
        while b != a {
            b = self.frobenius(self.omega, b);
            d += 1;
        }
        d
    }

    /// The `H`-orbit `{φ(a) : φ ∈ H}`, sorted.
    pub fn h_orbit(&self, a: Elem) -> Vec<Elem> {
        let mut orbit: Vec<Elem> = self
            .galois_subgroup()
            .exponents()
            .map(|e| self.frobenius(e, a))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// Encoding-minimal member of the `H`-orbit of `a`.
    pub fn orbit_representative(&self, a: Elem) -> Elem {
        self.galois_subgroup()
            .exponents()
            .map(|e| self.frobenius(e, a))
            .min()
            .unwrap_or(a)
    }

    /// One representative per `H`-orbit on the nonzero elements.
    pub fn h_orbit_transversal(&self) -> Transversal {
        let representatives = (1..self.order)
            .filter(|&a| self.orbit_representative(a) == a)
            .collect();
        Transversal { representatives }
    }

    /// Number of `H`-orbits on all of `GF(n)` by Burnside's lemma:
    /// `(1/r) Σ_{β=1}^{r} q^gcd(r, β)` with `r = alpha / omega`.
    pub fn burnside_orbit_count(&self) -> u64 {
        let r = u64::from(self.alpha / self.omega);
        let q = u64::from(self.sub_order);
        let fixed: u64 = (1..=r).map(|beta| q.pow(util::gcd(r, beta) as u32)).sum();
        fixed / r
    }

    /// Base-`p` digits of `a`, lowest degree first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        let mut a = a;
        (0..self.alpha)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    /// Polynomial form such as `x^2+2x+1`; prime-field elements print as
    /// plain integers.
    pub fn format_element(&self, a: Elem) -> String {
        if self.alpha == 1 || a == 0 {
            let mut s = String::new();
            let _ = write!(s, "{a}");
            return s;
        }
        let mut s = String::new();
        for (deg, &c) in self.coefficients(a).iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            let _ = match (deg, c) {
                (0, c) => write!(s, "{c}"),
                (1, 1) => write!(s, "x"),
                (1, c) => write!(s, "{c}x"),
                (d, 1) => write!(s, "x^{d}"),
                (d, c) => write!(s, "{c}x^{d}"),
            };
        }
        s
    }

    /// The defining polynomial as text, e.g. `x^2+x+1`.
    pub fn format_polynomial(&self) -> String {
        let mut s = String::new();
        for (deg, &c) in self.poly.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            let _ = match (deg, c) {
                (0, c) => write!(s, "{c}"),
                (1, 1) => write!(s, "x"),
                (1, c) => write!(s, "{c}x"),
                (d, 1) => write!(s, "x^{d}"),
                (d, c) => write!(s, "{c}x^{d}"),
            };
        }
        s
    }
}

fn encode_digits(digits: &[u32], p: u32) -> Elem {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplies the polynomial `digits` by `x` modulo the monic `poly`.
fn times_root(digits: &mut [u32], poly: &[u32], p: u32) {
    let top = *digits.last().unwrap();
    for i in (1..digits.len()).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    if top != 0 {
        for (d, &c) in digits.iter_mut().zip(poly) {
            *d = (*d + (p - top) * c % p) % p;
        }
    }
}

/// `H = Gal_{GF(q)}(GF(n))`, cyclic of order `alpha / omega` and generated
/// by `x ↦ x^(p^omega)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisSubgroup {
    alpha: u32,
    omega: u32,
}

impl GaloisSubgroup {
    pub fn order(&self) -> u32 {
        self.alpha / self.omega
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha == self.omega
    }

    /// Frobenius exponent (a power of `p`) of the generator.
    pub fn generator_exponent(&self) -> u32 {
        self.omega
    }

    /// Frobenius exponents `0, omega, 2 omega, ...` of the members, identity
    /// first.
    pub fn exponents(&self) -> impl Iterator<Item = u32> + Clone {
        let omega = self.omega;
        (0..self.order()).map(move |j| j * omega)
    }

    /// Whether `x ↦ x^(p^i)` lies in this subgroup.
    pub fn contains_exponent(&self, i: u32) -> bool {
        (i % self.alpha) % self.omega == 0
    }
}

/// One encoding-minimal representative per `H`-orbit on `GF(n) \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    representatives: Vec<Elem>,
}

impl Transversal {
    pub fn representatives(&self) -> &[Elem] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.representatives.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.representatives.iter().copied()
    }
}
