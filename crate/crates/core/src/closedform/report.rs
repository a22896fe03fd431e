use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{
    predict_nontrivial_products, predict_one_trivial_products, predict_relation_counts,
    predict_third_valencies, predicted_names, ProductPrediction, ProductRule, Reading,
    RelationName, RelationNames,
};
use crate::action::{GroupSpec, TripleLabeler, Variant};
use crate::ast::{verify_principal_regularity, verify_valency_condition, RegularityMode};
use crate::ast::{IntersectionTensor, TriplePartition, Valencies};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineValue {
    Count(u64),
    /// Whether two partitions coincide label for label.
    Equality(bool),
}

impl fmt::Display for LineValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineValue::Count(c) => write!(f, "{c}"),
            LineValue::Equality(true) => f.write_str("equal"),
            LineValue::Equality(false) => f.write_str("different"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineStatus {
    /// The formula as stated gives the brute-force value.
    Match,
    /// The formula as stated is off, and the [`Reading::Geometric`] value
    /// agrees with brute force.
    Erratum,
    /// Neither reading agrees with brute force.
    Mismatch,
}

impl LineStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            LineStatus::Match => "match",
            LineStatus::Erratum => "erratum",
            LineStatus::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub quantity: String,
    pub predicted: LineValue,
    /// Present when a second reading of the formula is defined and differs
    /// from `predicted`.
    pub amended: Option<LineValue>,
    pub actual: LineValue,
    pub status: LineStatus,
    pub source: String,
}

impl ReportLine {
    fn plain(quantity: String, predicted: LineValue, actual: LineValue, source: &str) -> Self {
        let status = if predicted == actual {
            LineStatus::Match
        } else {
            LineStatus::Mismatch
        };
        Self {
            quantity,
            predicted,
            amended: None,
            actual,
            status,
            source: source.into(),
        }
    }

    /// `true` iff the formula as stated reproduces the brute-force value.
    pub fn matches(&self) -> bool {
        self.status == LineStatus::Match
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PredictionReport {
    pub lines: Vec<ReportLine>,
}

impl PredictionReport {
    /// No line contradicts brute force under either reading.
    pub fn is_clean(&self) -> bool {
        self.count(LineStatus::Mismatch) == 0
    }

    /// Every line agrees with brute force under the stated formulas.
    pub fn all_match(&self) -> bool {
        self.lines.iter().all(ReportLine::matches)
    }

    pub fn count(&self, status: LineStatus) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }
}

fn product_quantity(ops: [RelationName; 3], out: Option<RelationName>) -> String {
    match out {
        Some(l) => format!("p[{} {} {} -> {}]", ops[0], ops[1], ops[2], l),
        None => format!("p[{} {} {} -> *]", ops[0], ops[1], ops[2]),
    }
}

fn product_lines(
    names: &RelationNames,
    tensor: &IntersectionTensor,
    ops: [RelationName; 3],
    literal: &ProductPrediction,
    geometric: &ProductPrediction,
    out: &mut Vec<(ProductRule, [RelationName; 3], ReportLine)>,
) {
    let id = |n: &RelationName| names.id(n).expect("named relation");
    let (i, j, k) = (id(&ops[0]), id(&ops[1]), id(&ops[2]));
    let mut support: BTreeSet<RelationName> = BTreeSet::new();
    support.extend(literal.coefficients.iter().map(|c| c.0));
    support.extend(geometric.coefficients.iter().map(|c| c.0));
    support.extend(
        names
            .iter()
            .filter(|&(l, _)| tensor.get(i, j, k, l) > 0)
            .map(|(_, n)| n),
    );
    let source = literal.rule.label();
    if support.is_empty() {
        let line = ReportLine::plain(
            product_quantity(ops, None),
            LineValue::Count(0),
            LineValue::Count(0),
            source,
        );
        out.push((literal.rule, ops, line));
        return;
    }
    for l in support {
        let predicted = literal.coefficient(&l);
        let amended = geometric.coefficient(&l);
        let actual = tensor.get(i, j, k, id(&l));
        let status = if predicted == actual {
            LineStatus::Match
        } else if amended == actual {
            LineStatus::Erratum
        } else {
            LineStatus::Mismatch
        };
        let line = ReportLine {
            quantity: product_quantity(ops, Some(l)),
            predicted: LineValue::Count(predicted),
            amended: (amended != predicted).then_some(LineValue::Count(amended)),
            actual: LineValue::Count(actual),
            status,
            source: source.into(),
        };
        out.push((literal.rule, ops, line));
    }
}

/// Compares every closed-form prediction for the `ASL_H` spec with the
/// brute-force `partition` and its parameters. For `k >= 3`, `agl` is the
/// partition of the matching `AGL_H` spec, if available.
pub fn crosscheck(
    spec: &GroupSpec,
    partition: &TriplePartition,
    valencies: &Valencies,
    tensor: &IntersectionTensor,
    agl: Option<&TriplePartition>,
) -> Result<PredictionReport, Error> {
    if spec.variant() != Variant::Asl {
        return Err(Error::NotApplicable("closed forms are stated for ASL_H"));
    }
    let names = RelationNames::for_partition(spec, partition)?;
    let mut lines = Vec::new();

    let counts = predict_relation_counts(spec)?;
    lines.push(ReportLine::plain(
        "nontrivial relations".into(),
        LineValue::Count(counts.nontrivial()),
        LineValue::Count(partition.class_count() as u64 - 4),
        "Burnside count of H-orbits on GF(n)",
    ));

    for (name, v) in predict_third_valencies(spec)? {
        let source = match name {
            RelationName::Trivial(_) => "trivial relation",
            RelationName::Type1(_) => "deg(a)",
            RelationName::Type2(_) => "n deg(a)",
            RelationName::Big => "n^k - n",
        };
        let actual = names.id(&name).map_or(0, |id| valencies.third(id));
        lines.push(ReportLine::plain(
            format!("third valency {name}"),
            LineValue::Count(v),
            LineValue::Count(actual),
            source,
        ));
    }

    if spec.k() == 2 {
        let nontrivial: Vec<RelationName> = predicted_names(spec)
            .into_iter()
            .filter(|n| !n.is_trivial())
            .collect();
        let mut products = Vec::new();
        for &a in &nontrivial {
            for &b in &nontrivial {
                for &c in &nontrivial {
                    let lit = predict_nontrivial_products(spec, a, b, c, Reading::Literal)?;
                    let geo = predict_nontrivial_products(spec, a, b, c, Reading::Geometric)?;
                    product_lines(&names, tensor, [a, b, c], &lit, &geo, &mut products);
                }
            }
        }
        for slot in 1..=3u8 {
            let trivial = RelationName::Trivial(slot);
            for &a in &nontrivial {
                for &b in &nontrivial {
                    let ops = match slot {
                        1 => [trivial, a, b],
                        2 => [a, trivial, b],
                        _ => [a, b, trivial],
                    };
                    let [x, y, z] = ops;
                    let lit = predict_one_trivial_products(spec, x, y, z, Reading::Literal)?;
                    let geo = predict_one_trivial_products(spec, x, y, z, Reading::Geometric)?;
                    product_lines(&names, tensor, ops, &lit, &geo, &mut products);
                }
            }
        }
        products.sort_by_key(|a| (a.0, a.1));
        lines.extend(products.into_iter().map(|(_, _, line)| line));
    } else if let Some(agl) = agl {
        let equal =
            agl.omega_size() == partition.omega_size() && agl.labels() == partition.labels();
        lines.push(ReportLine::plain(
            "ASL_H partition vs AGL_H partition".into(),
            LineValue::Equality(true),
            LineValue::Equality(equal),
            "ASL_H = AGL_H for k >= 3",
        ));
    }
    Ok(PredictionReport { lines })
}

/// Builds every partition `spec` needs and cross-checks it.
pub fn crosscheck_spec(spec: &GroupSpec, mode: RegularityMode) -> Result<PredictionReport, Error> {
    let partition = TripleLabeler::new(spec)?.label_all();
    let witness = |_| Error::MalformedPartition("brute-force partition is not an AST");
    let valencies = verify_valency_condition(&partition).map_err(witness)?;
    let tensor = verify_principal_regularity(&partition, mode).map_err(witness)?;
    let agl = if spec.k() >= 3 {
        Some(TripleLabeler::new(&spec.with_variant(Variant::Agl))?.label_all())
    } else {
        None
    };
    crosscheck(spec, &partition, &valencies, &tensor, agl.as_ref())
}
