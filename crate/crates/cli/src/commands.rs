use std::fs;
use std::io::{self, Write};
use std::path::Path;

use semilinear_ast::action::{bfs_orbit_oracle, GroupSpec, TripleLabeler, Variant};
use semilinear_ast::ast::{
    compare_partitions, verify_all, Condition, PartitionRelation, RegularityMode, SchemeParameters,
    SplitWitness, TriplePartition, Valencies, VerificationReport,
};
use semilinear_ast::closedform::{crosscheck, LineStatus, LineValue, RelationNames};
use serde_json::Value;

use crate::args::{
    BuildArgs, Cli, Command, CompareArgs, Format, ParamsArgs, RegularityArg, RunArgs, SpecArgs,
    VerifyArgs,
};
use crate::artifact;
use crate::error::{exit, CliError};
use crate::output::{
    ComparisonInfo, ConditionRow, CrosscheckLine, CrosscheckSummary, Document, IntersectionRow,
    PartitionInfo, RelationRow, SpecInfo, VerificationInfo, Witness,
};
use crate::parallel::{default_workers, label_parallel};

/// Runs one command, writes its report and returns the exit code.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
        Command::Params(a) => params(a),
        Command::Crosscheck(a) => crosscheck_command(a),
        Command::Compare(a) => compare(a),
    }
}

fn spec_from(args: &SpecArgs) -> Result<GroupSpec, CliError> {
    let p = args.p.ok_or_else(|| CliError::Usage("missing -p".into()))?;
    let alpha = args
        .alpha
        .ok_or_else(|| CliError::Usage("missing -a".into()))?;
    Ok(GroupSpec::from_parameters(
        args.variant.into(),
        p,
        alpha,
        args.omega,
        args.k,
    )?)
}

pub fn build_partition(
    spec: &GroupSpec,
    workers: Option<usize>,
) -> Result<TriplePartition, CliError> {
    let labeler = TripleLabeler::new(spec)?;
    Ok(label_parallel(
        &labeler,
        workers.unwrap_or_else(default_workers),
    ))
}

fn oracle_verdict(spec: &GroupSpec, partition: &TriplePartition) -> Result<&'static str, CliError> {
    let oracle = bfs_orbit_oracle(spec)?;
    Ok(match compare_partitions(partition, &oracle)? {
        PartitionRelation::Equal => "equal",
        _ => "different",
    })
}

fn regularity_mode(run: &RunArgs, omega_size: u32) -> RegularityMode {
    match run.regularity {
        None => match RegularityMode::auto(omega_size) {
            RegularityMode::Full => RegularityMode::Full,
            RegularityMode::Sampled { .. } => RegularityMode::sampled(run.seed),
        },
        Some(RegularityArg::Full) => RegularityMode::Full,
        Some(RegularityArg::Sampled) => RegularityMode::sampled(run.seed),
    }
}

pub fn spec_info(spec: &GroupSpec) -> SpecInfo {
    let t = spec.tower();
    SpecInfo {
        p: t.characteristic(),
        alpha: t.alpha(),
        omega: t.omega(),
        k: spec.k(),
        variant: spec.variant().as_str(),
        n: t.order(),
        q: t.subfield_order(),
        omega_size: spec.omega_size(),
        polynomial: t.polynomial().to_vec(),
        polynomial_text: t.format_polynomial(),
        group_order: spec.group_order(),
    }
}

fn partition_info(partition: &TriplePartition) -> PartitionInfo {
    PartitionInfo {
        class_count: partition.class_count(),
        class_sizes: partition.class_sizes().to_vec(),
    }
}

fn relation_rows(
    spec: &GroupSpec,
    partition: &TriplePartition,
    names: Option<&RelationNames>,
    valencies: Option<&Valencies>,
) -> Vec<RelationRow> {
    let t = spec.tower();
    (0..partition.class_count())
        .map(|id| {
            let id = id as u8;
            let name = names.map(|n| n.name(id));
            let element = name.and_then(|n| n.element());
            RelationRow {
                id,
                name: name.map(|n| n.to_string()),
                element,
                element_poly: element.map(|e| t.format_element(e)),
                size: partition.class_sizes()[id as usize],
                valencies: valencies.map(|v| [v.first(id), v.second(id), v.third(id)]),
            }
        })
        .collect()
}

fn verification_info(report: &VerificationReport) -> VerificationInfo {
    let (mode, samples, seed) = match report.regularity_mode {
        RegularityMode::Full => ("full", None, None),
        RegularityMode::Sampled { per_class, seed } => ("sampled", Some(per_class), Some(seed)),
    };
    VerificationInfo {
        passed: report.all_passed(),
        regularity_mode: mode,
        samples_per_class: samples,
        seed,
        conditions: report
            .conditions()
            .iter()
            .map(|(name, c)| ConditionRow {
                name,
                passed: c.passed(),
                witness: match c {
                    Condition::Passed => None,
                    Condition::Failed(w) => Some(w.to_string()),
                },
            })
            .collect(),
    }
}

fn emit(doc: &Document, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let text = doc.render(format);
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn build(a: &BuildArgs) -> Result<u8, CliError> {
    let spec = spec_from(&a.spec)?;
    let partition = build_partition(&spec, a.run.workers)?;
    let mut doc = Document::new("build");
    doc.spec = Some(spec_info(&spec));
    doc.partition = Some(partition_info(&partition));
    let names = RelationNames::for_partition(&spec, &partition).ok();
    doc.relations = Some(relation_rows(&spec, &partition, names.as_ref(), None));
    if a.run.oracle {
        doc.oracle = Some(oracle_verdict(&spec, &partition)?);
    }
    if let Some(path) = &a.output {
        fs::write(path, artifact::encode(&spec, &partition))?;
    }
    emit(&doc, a.format, a.summary.as_deref())?;
    Ok(if doc.oracle == Some("different") {
        exit::VERIFICATION_FAILED
    } else {
        exit::OK
    })
}

/// Verifies, then fills the spec, partition, oracle and verification
/// sections. Returns the parameters when every condition holds.
fn checked(
    spec: &GroupSpec,
    partition: &TriplePartition,
    run: &RunArgs,
    doc: &mut Document,
) -> Result<Option<SchemeParameters>, CliError> {
    doc.spec = Some(spec_info(spec));
    doc.partition = Some(partition_info(partition));
    if run.oracle {
        doc.oracle = Some(oracle_verdict(spec, partition)?);
    }
    let (report, params) = verify_all(partition, regularity_mode(run, spec.omega_size()));
    doc.verification = Some(verification_info(&report));
    let ok = report.all_passed() && doc.oracle != Some("different");
    Ok(if ok { params } else { None })
}

fn verify(a: &VerifyArgs) -> Result<u8, CliError> {
    let (spec, partition) = match &a.artifact {
        Some(path) => artifact::read(&mut fs::File::open(path)?)?,
        None => {
            let spec = spec_from(&a.spec)?;
            let partition = build_partition(&spec, a.run.workers)?;
            (spec, partition)
        }
    };
    let mut doc = Document::new("verify");
    let params = checked(&spec, &partition, &a.run, &mut doc)?;
    emit(&doc, a.out.format, a.out.output.as_deref())?;
    Ok(if params.is_some() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

fn params(a: &ParamsArgs) -> Result<u8, CliError> {
    let spec = spec_from(&a.spec)?;
    let partition = build_partition(&spec, a.run.workers)?;
    let mut doc = Document::new("params");
    let Some(params) = checked(&spec, &partition, &a.run, &mut doc)? else {
        emit(&doc, a.out.format, a.out.output.as_deref())?;
        return Ok(exit::VERIFICATION_FAILED);
    };
    let names = RelationNames::for_partition(&spec, &partition).ok();
    doc.relations = Some(relation_rows(
        &spec,
        &partition,
        names.as_ref(),
        Some(&params.valencies),
    ));
    doc.intersection = Some(
        params
            .intersection
            .iter()
            .map(|((i, j, k, l), p)| IntersectionRow {
                i,
                j,
                k,
                l,
                p,
                names: names
                    .as_ref()
                    .map(|n| [i, j, k, l].map(|id| n.name(id).to_string())),
            })
            .collect(),
    );
    emit(&doc, a.out.format, a.out.output.as_deref())?;
    Ok(exit::OK)
}

fn line_value(v: LineValue) -> Value {
    match v {
        LineValue::Count(c) => Value::from(c),
        LineValue::Equality(_) => Value::from(v.to_string()),
    }
}

fn crosscheck_command(a: &ParamsArgs) -> Result<u8, CliError> {
    let spec = spec_from(&a.spec)?;
    if spec.variant() != Variant::Asl {
        return Err(CliError::Usage("crosscheck needs --variant asl".into()));
    }
    let partition = build_partition(&spec, a.run.workers)?;
    let mut doc = Document::new("crosscheck");
    let Some(params) = checked(&spec, &partition, &a.run, &mut doc)? else {
        emit(&doc, a.out.format, a.out.output.as_deref())?;
        return Ok(exit::VERIFICATION_FAILED);
    };
    let agl = if spec.k() >= 3 {
        Some(build_partition(
            &spec.with_variant(Variant::Agl),
            a.run.workers,
        )?)
    } else {
        None
    };
    let report = crosscheck(
        &spec,
        &partition,
        &params.valencies,
        &params.intersection,
        agl.as_ref(),
    )?;
    let names = RelationNames::for_partition(&spec, &partition).ok();
    doc.relations = Some(relation_rows(
        &spec,
        &partition,
        names.as_ref(),
        Some(&params.valencies),
    ));
    doc.crosscheck = Some(
        report
            .lines
            .iter()
            .map(|l| CrosscheckLine {
                quantity: l.quantity.clone(),
                predicted: line_value(l.predicted),
                amended: l.amended.map(line_value),
                actual: line_value(l.actual),
                matches: l.matches(),
                status: l.status.as_str(),
                source: l.source.clone(),
            })
            .collect(),
    );
    doc.crosscheck_summary = Some(CrosscheckSummary {
        clean: report.is_clean(),
        lines: report.lines.len(),
        matched: report.count(LineStatus::Match),
        erratum: report.count(LineStatus::Erratum),
        mismatch: report.count(LineStatus::Mismatch),
    });
    emit(&doc, a.out.format, a.out.output.as_deref())?;
    Ok(if report.is_clean() {
        exit::OK
    } else {
        exit::CROSSCHECK_MISMATCH
    })
}

/// Parses `variant:p:alpha:omega:k`.
pub fn parse_spec_string(s: &str) -> Option<Result<GroupSpec, CliError>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [variant, rest @ ..] = parts.as_slice() else {
        return None;
    };
    let variant = match *variant {
        "asl" => Variant::Asl,
        "agl" => Variant::Agl,
        _ => return None,
    };
    let numbers: Vec<u32> = rest.iter().map(|x| x.parse().ok()).collect::<Option<_>>()?;
    let [p, alpha, omega, k] = numbers.as_slice() else {
        return None;
    };
    Some(
        GroupSpec::from_parameters(variant, *p, *alpha, *omega, *k as usize)
            .map_err(CliError::from),
    )
}

fn load_side(s: &str, workers: Option<usize>) -> Result<(GroupSpec, TriplePartition), CliError> {
    match parse_spec_string(s) {
        Some(spec) => {
            let spec = spec?;
            let partition = build_partition(&spec, workers)?;
            Ok((spec, partition))
        }
        None if Path::new(s).exists() => Ok(artifact::read(&mut fs::File::open(s)?)?),
        None => Err(CliError::Usage(format!(
            "{s:?} is neither variant:p:alpha:omega:k nor an existing artifact"
        ))),
    }
}

fn witness(w: SplitWitness) -> Witness {
    Witness {
        class: w.class,
        first: w.first,
        second: w.second,
    }
}

fn compare(a: &CompareArgs) -> Result<u8, CliError> {
    let (left_spec, left) = load_side(&a.left, a.workers)?;
    let (right_spec, right) = load_side(&a.right, a.workers)?;
    if left.omega_size() != right.omega_size() {
        return Err(CliError::Usage(format!(
            "partitions live on different sets ({} vs {} points)",
            left.omega_size(),
            right.omega_size()
        )));
    }
    let describe = |s: &GroupSpec| {
        let t = s.tower();
        format!(
            "{}:{}:{}:{}:{}",
            s.variant().as_str(),
            t.characteristic(),
            t.alpha(),
            t.omega(),
            s.k()
        )
    };
    let (relation, left_split, right_split) = match compare_partitions(&left, &right)? {
        PartitionRelation::Equal => ("equal", None, None),
        PartitionRelation::FirstRefinesSecond { witness: w } => {
            ("left_refines_right", None, Some(witness(w)))
        }
        PartitionRelation::SecondRefinesFirst { witness: w } => {
            ("right_refines_left", Some(witness(w)), None)
        }
        PartitionRelation::Incomparable {
            first_split,
            second_split,
        } => (
            "incomparable",
            Some(witness(first_split)),
            Some(witness(second_split)),
        ),
    };
    let mut doc = Document::new("compare");
    doc.comparison = Some(ComparisonInfo {
        left: describe(&left_spec),
        right: describe(&right_spec),
        relation,
        left_split,
        right_split,
    });
    emit(&doc, a.out.format, a.out.output.as_deref())?;
    Ok(exit::OK)
}
