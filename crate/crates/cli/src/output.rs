//! Report documents and their JSON, CSV and text renderings.
//!
//! One [`Document`] is produced per command; absent sections are omitted
//! from JSON. CSV carries the command's main table with fixed columns:
//!
//! | command    | columns                                                   |
//! |------------|-----------------------------------------------------------|
//! | build      | `id,name,element,element_poly,size`                       |
//! | verify     | `condition,passed,witness`                                |
//! | params     | `quantity,i,j,k,l,names,value`                            |
//! | crosscheck | `quantity,predicted,amended,actual,match,status,source`   |
//! | compare    | `relation,class,first,second`                             |

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct SpecInfo {
    pub p: u32,
    pub alpha: u32,
    pub omega: u32,
    pub k: usize,
    pub variant: &'static str,
    pub n: u32,
    pub q: u32,
    pub omega_size: u32,
    pub polynomial: Vec<u32>,
    pub polynomial_text: String,
    pub group_order: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationRow {
    pub id: u8,
    pub name: Option<String>,
    pub element: Option<u32>,
    pub element_poly: Option<String>,
    pub size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valencies: Option<[u64; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionRow {
    pub i: u8,
    pub j: u8,
    pub k: u8,
    pub l: u8,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<[String; 4]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionRow {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationInfo {
    pub passed: bool,
    pub regularity_mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples_per_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub conditions: Vec<ConditionRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckLine {
    pub quantity: String,
    pub predicted: Value,
    pub amended: Option<Value>,
    pub actual: Value,
    #[serde(rename = "match")]
    pub matches: bool,
    pub status: &'static str,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckSummary {
    pub clean: bool,
    pub lines: usize,
    pub matched: usize,
    pub erratum: usize,
    pub mismatch: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub class: u8,
    pub first: (u32, u32, u32),
    pub second: (u32, u32, u32),
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonInfo {
    pub left: String,
    pub right: String,
    pub relation: &'static str,
    /// A left class split by the right partition.
    pub left_split: Option<Witness>,
    /// A right class split by the left partition.
    pub right_split: Option<Witness>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PartitionInfo {
    pub class_count: usize,
    pub class_sizes: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SpecInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection: Option<Vec<IntersectionRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscheck_summary: Option<CrosscheckSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<Vec<CrosscheckLine>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonInfo>,
}

impl Document {
    pub fn new(command: &'static str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            spec: None,
            partition: None,
            oracle: None,
            relations: None,
            verification: None,
            intersection: None,
            crosscheck_summary: None,
            crosscheck: None,
            comparison: None,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |fields: &[String]| w.write_record(fields).expect("in-memory write");
        let s = |v: &dyn ToString| v.to_string();
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        match self.command {
            "build" => {
                row(&["id", "name", "element", "element_poly", "size"].map(String::from));
                for r in self.relations.iter().flatten() {
                    row(&[
                        s(&r.id),
                        opt(&r.name),
                        opt(&r.element.map(|e| e.to_string())),
                        opt(&r.element_poly),
                        s(&r.size),
                    ]);
                }
            }
            "verify" => {
                row(&["condition", "passed", "witness"].map(String::from));
                if let Some(v) = &self.verification {
                    for c in &v.conditions {
                        row(&[c.name.into(), s(&c.passed), opt(&c.witness)]);
                    }
                }
                if let Some(o) = self.oracle {
                    row(&["oracle".into(), s(&(o == "equal")), o.into()]);
                }
            }
            "params" => {
                row(&["quantity", "i", "j", "k", "l", "names", "value"].map(String::from));
                for r in self.relations.iter().flatten() {
                    let name = opt(&r.name);
                    row(&[
                        "size".into(),
                        s(&r.id),
                        "".into(),
                        "".into(),
                        "".into(),
                        name.clone(),
                        s(&r.size),
                    ]);
                    for (slot, v) in r.valencies.iter().flatten().enumerate() {
                        let q = format!("n{}", slot + 1);
                        row(&[
                            q,
                            s(&r.id),
                            "".into(),
                            "".into(),
                            "".into(),
                            name.clone(),
                            s(v),
                        ]);
                    }
                }
                for e in self.intersection.iter().flatten() {
                    let names = e.names.as_ref().map(|n| n.join(" ")).unwrap_or_default();
                    row(&[
                        "p".into(),
                        s(&e.i),
                        s(&e.j),
                        s(&e.k),
                        s(&e.l),
                        names,
                        s(&e.p),
                    ]);
                }
            }
            "crosscheck" => {
                row(&[
                    "quantity",
                    "predicted",
                    "amended",
                    "actual",
                    "match",
                    "status",
                    "source",
                ]
                .map(String::from));
                for c in self.crosscheck.iter().flatten() {
                    row(&[
                        c.quantity.clone(),
                        plain(&c.predicted),
                        c.amended.as_ref().map(plain).unwrap_or_default(),
                        plain(&c.actual),
                        s(&c.matches),
                        c.status.into(),
                        c.source.clone(),
                    ]);
                }
            }
            _ => {
                row(&["relation", "class", "first", "second"].map(String::from));
                if let Some(c) = &self.comparison {
                    let witness = c.left_split.as_ref().or(c.right_split.as_ref());
                    row(&[
                        c.relation.into(),
                        witness.map(|w| w.class.to_string()).unwrap_or_default(),
                        witness.map(|w| triple(w.first)).unwrap_or_default(),
                        witness.map(|w| triple(w.second)).unwrap_or_default(),
                    ]);
                }
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        if let Some(s) = &self.spec {
            let _ = writeln!(
                o,
                "{}_H({}, {}) over GF({}) with H = Gal(GF({})/GF({})), |Ω| = {}, defining polynomial {}",
                s.variant.to_uppercase(),
                s.k,
                s.n,
                s.p,
                s.n,
                s.q,
                s.omega_size,
                s.polynomial_text
            );
        }
        if let Some(p) = &self.partition {
            let _ = writeln!(o, "classes: {}", p.class_count);
        }
        if let Some(oracle) = self.oracle {
            let _ = writeln!(o, "BFS oracle: {oracle}");
        }
        if let Some(rows) = &self.relations {
            let _ = writeln!(o, "{:>4}  {:<10} {:>12}  valencies", "id", "name", "size");
            for r in rows {
                let name = match (&r.name, &r.element_poly) {
                    (Some(n), Some(poly)) => format!("{n} ({poly})"),
                    (Some(n), None) => n.clone(),
                    _ => "-".into(),
                };
                let val = r
                    .valencies
                    .map(|v| format!("{} {} {}", v[0], v[1], v[2]))
                    .unwrap_or_default();
                let _ = writeln!(o, "{:>4}  {:<10} {:>12}  {}", r.id, name, r.size, val);
            }
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(o, "regularity mode: {}", v.regularity_mode);
            for c in &v.conditions {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                let _ = writeln!(o, "{:<22} {}", c.name, verdict);
                if let Some(w) = &c.witness {
                    let _ = writeln!(o, "    {w}");
                }
            }
            let _ = writeln!(o, "AST: {}", if v.passed { "yes" } else { "no" });
        }
        if let Some(rows) = &self.intersection {
            let _ = writeln!(o, "nonzero intersection numbers: {}", rows.len());
            for e in rows {
                match &e.names {
                    Some(n) => {
                        let _ = writeln!(o, "p[{} {} {} -> {}] = {}", n[0], n[1], n[2], n[3], e.p);
                    }
                    None => {
                        let _ = writeln!(o, "p[{} {} {} -> {}] = {}", e.i, e.j, e.k, e.l, e.p);
                    }
                }
            }
        }
        if let Some(lines) = &self.crosscheck {
            for c in lines {
                let amended = c
                    .amended
                    .as_ref()
                    .map(|a| format!(" (amended {})", plain(a)))
                    .unwrap_or_default();
                let _ = writeln!(
                    o,
                    "{:<8} {}: predicted {}{}, actual {}  [{}]",
                    c.status,
                    c.quantity,
                    plain(&c.predicted),
                    amended,
                    plain(&c.actual),
                    c.source
                );
            }
        }
        if let Some(s) = &self.crosscheck_summary {
            let _ = writeln!(
                o,
                "{} lines: {} match, {} erratum, {} mismatch; {}",
                s.lines,
                s.matched,
                s.erratum,
                s.mismatch,
                if s.clean { "clean" } else { "NOT clean" }
            );
        }
        if let Some(c) = &self.comparison {
            let _ = writeln!(o, "{} vs {}: {}", c.left, c.right, c.relation);
            for (side, w) in [("left", &c.left_split), ("right", &c.right_split)] {
                if let Some(w) = w {
                    let _ = writeln!(
                        o,
                        "  {side} class {} holds {} and {}, separated on the other side",
                        w.class,
                        triple(w.first),
                        triple(w.second)
                    );
                }
            }
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn triple(t: (u32, u32, u32)) -> String {
    format!("({} {} {})", t.0, t.1, t.2)
}
