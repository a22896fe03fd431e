//! Association schemes on triples (ASTs) induced by the two-transitive
//! actions of `ASL_H(k, n) = ASL(k, n) ⋊ H` and `AGL_H(k, n)` on `GF(n)^k`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`gf`]: finite-field towers, Frobenius maps, `H`-orbits.
//! - [`action`]: vectors, semilinear maps, the groups and their two-point
//!   stabilizers, and the orbit engine that labels every triple.
//! - [`ast`]: the triple partition, the AST axiom verifier, valencies and
//!   intersection numbers.
//! - [`closedform`]: closed-form parameter predictions for `k = 2` and the
//!   `k >= 3` equality with `AGL_H`, cross-checked against brute force.

#![no_std]

extern crate alloc;

pub mod action;
pub mod ast;
pub mod closedform;
pub mod gf;

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    NotPrime(u32),
    ZeroDegree,
    OmegaNotDivisor {
        alpha: u32,
        omega: u32,
    },
    FieldTooLarge {
        p: u32,
        alpha: u32,
    },
    MissingPolynomial {
        p: u32,
        alpha: u32,
    },
    InvalidDimension(usize),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    InvalidElement(u32),
    SamePoint,
    ResourceBound {
        what: &'static str,
        required: u64,
        limit: u64,
    },
    DomainMismatch {
        left: u32,
        right: u32,
    },
    MalformedPartition(&'static str),
    NotApplicable(&'static str),
    RelationNaming(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroDegree => f.write_str("extension degrees must be positive"),
            Error::OmegaNotDivisor { alpha, omega } => {
                write!(f, "omega = {omega} does not divide alpha = {alpha}")
            }
            Error::FieldTooLarge { p, alpha } => write!(
                f,
                "field order {p}^{alpha} exceeds the supported bound {}",
                gf::MAX_FIELD_ORDER
            ),
            Error::MissingPolynomial { p, alpha } => {
                write!(f, "no Conway polynomial tabulated for GF({p}^{alpha})")
            }
            Error::InvalidDimension(k) => {
                write!(f, "dimension k = {k} is outside 2..={}", action::MAX_DIM)
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidElement(a) => write!(f, "{a} does not encode a field element"),
            Error::SamePoint => f.write_str("transporter needs two distinct points"),
            Error::ResourceBound {
                what,
                required,
                limit,
            } => write!(f, "{what}: {required} exceeds the limit {limit}"),
            Error::DomainMismatch { left, right } => {
                write!(
                    f,
                    "partitions live on different sets ({left} vs {right} points)"
                )
            }
            Error::MalformedPartition(why) => write!(f, "malformed partition: {why}"),
            Error::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Error::RelationNaming(why) => write!(f, "relation naming failed: {why}"),
        }
    }
}

impl core::error::Error for Error {}
