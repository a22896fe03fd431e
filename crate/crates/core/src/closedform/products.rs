//! Intersection numbers `p_{ijk}^l` for `k = 2` as set cardinalities over
//! Galois conjugates, evaluated by enumerating `φ, ψ, τ ∈ H`.

use alloc::vec::Vec;
use core::fmt;

use super::RelationName;
use crate::action::{GroupSpec, Variant};
use crate::gf::{Elem, FieldTower};
use crate::Error;

/// Which closed form covers an operand pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductRule {
    /// `A^a A^b A^c`
    TypeOneCube,
    /// `A^a A^b ^cA`, `A^a ^cA A^b`, `^cA A^a A^b`: all vanish.
    SingleTypeTwoVanishes,
    /// `^aA ^bA A^c`
    TypeTwoTypeTwoTypeOne,
    /// `^aA A^c ^bA`
    TypeTwoTypeOneTypeTwo,
    /// `A^c ^aA ^bA`
    TypeOneTypeTwoTypeTwo,
    /// `^aA ^bA ^cA`
    TypeTwoCube,
    /// `I1 A^a A^b`
    FirstTrivialTypeOne,
    /// `A^a I2 A^b`
    SecondTrivialTypeOne,
    /// `A^a A^b I3`
    ThirdTrivialTypeOne,
    /// `I_r` in slot `r` with one type-1 and one type-2 operand: vanishes.
    TrivialMixedVanishes,
    /// `I_r` in slot `r` with two type-2 operands.
    TrivialTypeTwo,
}

impl ProductRule {
    pub fn label(&self) -> &'static str {
        match self {
            ProductRule::TypeOneCube => "A^a A^b A^c",
            ProductRule::SingleTypeTwoVanishes => "one ^cA among A^a A^b (vanishes)",
            ProductRule::TypeTwoTypeTwoTypeOne => "^aA ^bA A^c",
            ProductRule::TypeTwoTypeOneTypeTwo => "^aA A^c ^bA",
            ProductRule::TypeOneTypeTwoTypeTwo => "A^c ^aA ^bA",
            ProductRule::TypeTwoCube => "^aA ^bA ^cA",
            ProductRule::FirstTrivialTypeOne => "I1 A^a A^b",
            ProductRule::SecondTrivialTypeOne => "A^a I2 A^b",
            ProductRule::ThirdTrivialTypeOne => "A^a A^b I3",
            ProductRule::TrivialMixedVanishes => "I_r with A^a and ^aA (vanishes)",
            ProductRule::TrivialTypeTwo => "I_r with ^aA ^bA",
        }
    }
}

impl fmt::Display for ProductRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// How to evaluate the formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// The formulas exactly as stated: the scalar multiplier of the
    /// `^aA ^bA ^cA → A^ℓ` coefficients and of `I_r ^aA ^bA` is
    /// `q = p^omega`, and the `^aA ^bA ^cA → ^jA` coefficient counts
    /// distinct `ψ(b)`.
    Literal,
    /// Counts derived from the orbit geometry: the multiplier is the
    /// number of free first coordinates, `n`, and the `^aA ^bA ^cA → ^jA`
    /// coefficient counts distinct points `w`, i.e. distinct pairs
    /// `(ψ(b), φ(c))`.
    Geometric,
}

/// Nonzero coefficients of one product; every other output class is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPrediction {
    pub rule: ProductRule,
    pub coefficients: Vec<(RelationName, u64)>,
}

impl ProductPrediction {
    pub fn coefficient(&self, name: &RelationName) -> u64 {
        self.coefficients
            .iter()
            .find(|(n, _)| n == name)
            .map_or(0, |&(_, c)| c)
    }
}

struct Conjugates<'a> {
    t: &'a FieldTower,
    exponents: Vec<u32>,
}

impl<'a> Conjugates<'a> {
    fn new(spec: &'a GroupSpec) -> Self {
        Self {
            t: spec.tower(),
            exponents: spec.h().exponents().collect(),
        }
    }

    /// `φ(a)` for every `φ ∈ H` (with repetition).
    fn of(&self, a: Elem) -> Vec<Elem> {
        self.exponents
            .iter()
            .map(|&e| self.t.frobenius(e, a))
            .collect()
    }
}

fn distinct_count(mut values: Vec<Elem>) -> u64 {
    values.sort_unstable();
    values.dedup();
    values.len() as u64
}

fn check_spec(spec: &GroupSpec) -> Result<(), Error> {
    if spec.k() != 2 || spec.variant() != Variant::Asl {
        return Err(Error::NotApplicable(
            "intersection-number closed forms cover ASL_H(2, n) only",
        ));
    }
    Ok(())
}

fn multiplier(spec: &GroupSpec, reading: Reading) -> u64 {
    match reading {
        Reading::Literal => u64::from(spec.tower().subfield_order()),
        Reading::Geometric => u64::from(spec.tower().order()),
    }
}

/// `p_{ijk}^l` for three nontrivial operands, over every output class.
pub fn predict_nontrivial_products(
    spec: &GroupSpec,
    i: RelationName,
    j: RelationName,
    k: RelationName,
    reading: Reading,
) -> Result<ProductPrediction, Error> {
    use RelationName::{Type1, Type2};
    check_spec(spec)?;
    let t = spec.tower();
    let h = Conjugates::new(spec);
    let transversal = t.h_orbit_transversal();
    let one = 1;
    let mut coefficients = Vec::new();
    let mut push = |name: RelationName, value: u64| {
        if value > 0 {
            coefficients.push((name, value));
        }
    };

    let rule = match (i, j, k) {
        (Type1(a), Type1(b), Type1(c)) => {
            for l in transversal.iter().filter(|&l| l != one) {
                let hits = h
                    .of(c)
                    .into_iter()
                    .filter(|&fc| {
                        let left = h
                            .of(a)
                            .into_iter()
                            .any(|ta| t.add(t.mul(t.sub(one, fc), ta), fc) == l);
                        let right = h.of(b).into_iter().any(|pb| t.mul(fc, pb) == l);
                        left && right
                    })
                    .collect();
                push(Type1(l), distinct_count(hits));
            }
            ProductRule::TypeOneCube
        }
        (Type1(_), Type1(_), Type2(_))
        | (Type1(_), Type2(_), Type1(_))
        | (Type2(_), Type1(_), Type1(_)) => ProductRule::SingleTypeTwoVanishes,
        (Type2(a), Type2(b), Type1(c)) => {
            for l in transversal.iter() {
                let hits = h
                    .of(c)
                    .into_iter()
                    .filter(|&fc| {
                        let left = h
                            .of(a)
                            .into_iter()
                            .any(|ta| t.div(ta, t.sub(one, fc)) == Some(l));
                        let right = h.of(b).into_iter().any(|pb| t.div(pb, fc) == Some(l));
                        left && right
                    })
                    .collect();
                push(Type2(l), distinct_count(hits));
            }
            ProductRule::TypeTwoTypeTwoTypeOne
        }
        (Type2(a), Type1(c), Type2(b)) => {
            for l in transversal.iter() {
                let hits = h
                    .of(b)
                    .into_iter()
                    .filter(|&pb| {
                        let left = h.of(c).into_iter().any(|fc| t.mul(pb, fc) == l);
                        let right = h.of(a).into_iter().any(|ta| t.add(ta, pb) == l);
                        left && right
                    })
                    .collect();
                push(Type2(l), distinct_count(hits));
            }
            ProductRule::TypeTwoTypeOneTypeTwo
        }
        (Type1(c), Type2(a), Type2(b)) => {
            for l in transversal.iter() {
                let hits = h
                    .of(b)
                    .into_iter()
                    .filter(|&pb| {
                        h.of(c).into_iter().any(|fc| {
                            let left = t.mul(pb, t.sub(one, fc)) == l;
                            let right = h
                                .of(a)
                                .into_iter()
                                .any(|ta| t.div(t.mul(ta, t.sub(fc, one)), fc) == Some(l));
                            left && right
                        })
                    })
                    .collect();
                push(Type2(l), distinct_count(hits));
            }
            ProductRule::TypeOneTypeTwoTypeTwo
        }
        (Type2(a), Type2(b), Type2(c)) => {
            let scale = multiplier(spec, reading);
            for l in transversal.iter().filter(|&l| l != one) {
                let hits = h
                    .of(c)
                    .into_iter()
                    .filter(|&fc| {
                        let left = h
                            .of(a)
                            .into_iter()
                            .any(|ta| t.div(t.add(ta, fc), fc) == Some(l));
                        let right = h
                            .of(b)
                            .into_iter()
                            .any(|pb| t.div(t.neg(pb), fc) == Some(l));
                        left && right
                    })
                    .collect();
                push(Type1(l), scale * distinct_count(hits));
            }
            for jj in transversal.iter() {
                let value = match reading {
                    Reading::Literal => {
                        let hits = h
                            .of(b)
                            .into_iter()
                            .filter(|&pb| {
                                h.of(c).into_iter().any(|fc| {
                                    h.of(a).into_iter().any(|ta| t.add(t.add(ta, pb), fc) == jj)
                                })
                            })
                            .collect();
                        distinct_count(hits)
                    }
                    Reading::Geometric => {
                        let mut pairs: Vec<(Elem, Elem)> = Vec::new();
                        for pb in h.of(b) {
                            for fc in h.of(c) {
                                if h.of(a).into_iter().any(|ta| t.add(t.add(ta, pb), fc) == jj) {
                                    pairs.push((pb, fc));
                                }
                            }
                        }
                        pairs.sort_unstable();
                        pairs.dedup();
                        pairs.len() as u64
                    }
                };
                push(Type2(jj), value);
            }
            ProductRule::TypeTwoCube
        }
        _ => {
            return Err(Error::NotApplicable(
                "operands must be type-1 or type-2 relations",
            ))
        }
    };
    Ok(ProductPrediction { rule, coefficients })
}

/// `p_{ijk}^l` when exactly one operand is trivial and it is `R_r` sitting
/// in slot `r`; other patterns have no closed form.
pub fn predict_one_trivial_products(
    spec: &GroupSpec,
    i: RelationName,
    j: RelationName,
    k: RelationName,
    reading: Reading,
) -> Result<ProductPrediction, Error> {
    use RelationName::{Trivial, Type1, Type2};
    check_spec(spec)?;
    let t = spec.tower();
    let h = Conjugates::new(spec);
    let (slot, x, y) = match (i, j, k) {
        (Trivial(1), x, y) => (1u8, x, y),
        (x, Trivial(2), y) => (2, x, y),
        (x, y, Trivial(3)) => (3, x, y),
        _ => {
            return Err(Error::NotApplicable(
                "no closed form; only I_r in slot r is covered",
            ))
        }
    };
    let output = Trivial(slot);
    let single = |value: u64, rule| {
        let coefficients = if value > 0 {
            alloc::vec![(output, value)]
        } else {
            Vec::new()
        };
        ProductPrediction { rule, coefficients }
    };
    Ok(match (x, y) {
        (Type1(a), Type1(b)) => {
            let condition = |ta: Elem, pb: Elem| match slot {
                1 => t.mul(ta, pb) == 1,
                2 => t.mul(ta, pb) == t.add(ta, pb),
                _ => t.add(ta, pb) == 1,
            };
            let hits = h
                .of(b)
                .into_iter()
                .filter(|&pb| h.of(a).into_iter().any(|ta| condition(ta, pb)))
                .collect();
            let rule = match slot {
                1 => ProductRule::FirstTrivialTypeOne,
                2 => ProductRule::SecondTrivialTypeOne,
                _ => ProductRule::ThirdTrivialTypeOne,
            };
            single(distinct_count(hits), rule)
        }
        (Type1(_), Type2(_)) | (Type2(_), Type1(_)) => single(0, ProductRule::TrivialMixedVanishes),
        (Type2(a), Type2(b)) => {
            let hits = h
                .of(b)
                .into_iter()
                .filter(|&pb| h.of(a).into_iter().any(|ta| ta == t.neg(pb)))
                .collect();
            single(
                multiplier(spec, reading) * distinct_count(hits),
                ProductRule::TrivialTypeTwo,
            )
        }
        _ => {
            return Err(Error::NotApplicable(
                "no closed form for two trivial operands",
            ))
        }
    })
}
