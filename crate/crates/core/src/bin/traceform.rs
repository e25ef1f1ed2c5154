//! Command-line front end. Every command prints one JSON document on
//! standard output; exit status is 0 on pass or informational output, 1 if
//! a verification failed, 2 on usage errors.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use traceform::catalog::parse_group_spec;
use traceform::cohomology::{class_of_extension, extension_from_cocycle, Cocycle2, H2};
use traceform::fixtures;
use traceform::group::Group;
use traceform::pin::{involution_square_paths, pin_cocycle, PinMode};
use traceform::poly::MonicPoly;
use traceform::qform::{Gram, QForm};
use traceform::report::{timed, VerificationReport};
use traceform::squareclass::SquareClass;
use traceform::suite::{run_criterion, run_suite, SuiteConfig, DEFAULT_SEED};
use traceform::trace::{
    classify_numb2, verify_main, verify_two_cyclic_sylow, verify_w1, EtaleAlg, GaloisDescriptor,
};
use traceform::{Error, Result};

#[derive(Parser)]
#[command(name = "traceform", version, about = "Mod-2 obstructions of finite groups and Hasse-Witt invariants of trace forms")]
struct Cli {
    /// Render human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Add wall-clock `runtime_ms` to reports (output is then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArg {
    /// `catalog:<name>[:params]` or `perms:<cycles>,<cycles>,...`
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Coefficients, leading first, e.g. `1,0,-4,0,2`.
    #[arg(long, conflicts_with_all = ["algebra", "fixture"])]
    poly: Option<String>,
    /// JSON list of `{poly, multiplicity}`, inline or as a file path.
    #[arg(long, conflicts_with = "fixture")]
    algebra: Option<String>,
    /// A built-in fixture; also supplies the group.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
struct DescriptorArgs {
    /// Group spec; the descriptor flags are computed from it.
    #[arg(long, conflicts_with = "descriptor")]
    group: Option<String>,
    /// JSON descriptor flags, inline or as a file path.
    #[arg(long)]
    descriptor: Option<String>,
    /// With `--group`: the Galois representation is not onto the group.
    #[arg(long)]
    not_surjective: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statement {
    /// w2(q) = (2)·(disc)
    Main,
    /// triviality of w1
    Ww1,
    /// trace-form classification
    Numb2,
    /// w2 for a Sylow subgroup with a cyclic factor of order ≥ 4
    TwoCyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Basic structure of a group.
    Group(GroupArg),
    /// H²(G, F2) with a basis of classes.
    H2(GroupArg),
    /// Kernel of the s-map.
    Kers(GroupArg),
    /// Whether the group is 2-reduced.
    #[command(name = "2reduced")]
    TwoReduced(GroupArg),
    /// The central extension defined by a cocycle.
    Extension {
        #[arg(long)]
        group: String,
        /// File of |G|² ASCII bits, or `zero`, `basis:<i>`, `pin`.
        #[arg(long)]
        cocycle: String,
    },
    /// Sign of the square of the lift of a fixed-point-free involution.
    PinSign {
        #[arg(long)]
        n: usize,
    },
    /// The Pin(G) cocycle of the left regular representation.
    PinCocycle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        involutions_only: bool,
    },
    /// Invariants of a diagonal form or a Gram matrix.
    Form {
        /// Diagonal entries, e.g. `1,-2,3/5`.
        #[arg(long, required_unless_present = "gram", conflicts_with = "gram")]
        entries: Option<String>,
        /// JSON matrix, inline or as a file path.
        #[arg(long)]
        gram: Option<String>,
        /// A second diagonal form to test for isometry.
        #[arg(long)]
        compare: Option<String>,
    },
    /// The trace form of an étale algebra.
    Trace(AlgebraArgs),
    /// Predicted isometry class of a Galois trace form.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        descriptor: DescriptorArgs,
    },
    /// Checks one statement on one algebra.
    Verify {
        #[arg(value_enum)]
        statement: Statement,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        descriptor: DescriptorArgs,
        /// For two-cyclic: disc of the fixed field of the second factor's complement.
        #[arg(long)]
        d1: Option<i64>,
        #[arg(long)]
        d2: Option<i64>,
        /// For two-cyclic: the Sylow subgroup has a direct factor of order 2.
        #[arg(long)]
        factor_of_order_2: bool,
    },
    /// The full acceptance battery.
    Suite {
        /// Run one criterion only.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        criterion: Option<u8>,
    },
}

/// Output plus whether it records a failed verification.
struct Outcome {
    value: Value,
    failed: bool,
}

impl Outcome {
    fn info(value: Value) -> Self {
        Outcome { value, failed: false }
    }

    fn report(r: VerificationReport) -> Self {
        let failed = r.failed();
        Outcome {
            value: serde_json::to_value(r).expect("reports serialize"),
            failed,
        }
    }
}

/// Inline JSON if it looks like JSON, otherwise a path to read.
fn json_text(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("reading `{arg}`: {e}")))
}

fn group_json(g: &Group) -> Result<Value> {
    let sylow = g.sylow2();
    let alt = g.regular_rep_in_alternating();
    Ok(json!({
        "order": g.order(),
        "abelian": g.is_abelian(),
        "cyclic": g.is_cyclic(),
        "involutions": g.involutions().len(),
        "sylow2_order": sylow.order(),
        "sylow2_cyclic": sylow.is_cyclic(),
        "sylow2_metacyclic": sylow.is_metacyclic()?,
        "regular_rep_in_alternating": alt.in_alternating,
    }))
}

fn class_json(h2: &H2<'_>, coords: &traceform::f2::BitVec, rep: &Cocycle2) -> Value {
    json!({
        "coords": coords.to_bools(),
        "s_map": traceform::cohomology::s_map_of(h2.group(), rep).to_bools(),
        "representative": rep.rows(),
    })
}

fn load_algebra(args: &AlgebraArgs) -> Result<(EtaleAlg, Option<Group>)> {
    if let Some(name) = &args.fixture {
        let f = fixtures::by_name(name)?;
        return Ok((f.algebra()?, Some(f.group()?)));
    }
    if let Some(p) = &args.poly {
        return Ok((EtaleAlg::field(MonicPoly::parse(p)?)?, None));
    }
    if let Some(a) = &args.algebra {
        return Ok((EtaleAlg::from_json(&json_text(a)?)?, None));
    }
    Err(Error::Parse("one of --poly, --algebra, --fixture is required".into()))
}

fn load_descriptor(args: &DescriptorArgs, fixture_group: Option<Group>) -> Result<GaloisDescriptor> {
    if let Some(d) = &args.descriptor {
        return GaloisDescriptor::from_json(&json_text(d)?);
    }
    let g = match (&args.group, fixture_group) {
        (Some(spec), _) => parse_group_spec(spec)?,
        (None, Some(g)) => g,
        (None, None) => return Err(Error::Parse("one of --group, --descriptor is required".into())),
    };
    GaloisDescriptor::from_group(&g, !args.not_surjective)
}

fn parse_form(s: &str) -> Result<QForm> {
    QForm::parse(s)
}

fn form_json(q: &QForm) -> Result<Value> {
    let inv = q.invariants()?;
    Ok(json!({
        "entries": q.to_strings(),
        "rank": inv.rank,
        "signature": inv.signature,
        "w1": inv.w1,
        "w2_places": inv.w2,
    }))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        timed: cli.timings,
    };
    match &cli.command {
        Command::Group(a) => Ok(Outcome::info(group_json(&parse_group_spec(&a.group)?)?)),
        Command::H2(a) => {
            let g = parse_group_spec(&a.group)?;
            let h2 = H2::compute(&g)?;
            let basis: Vec<Value> = h2
                .basis()
                .iter()
                .map(|c| class_json(&h2, &c.coords, &c.representative))
                .collect();
            Ok(Outcome::info(json!({
                "order": g.order(),
                "dim": h2.dim(),
                "z2_dim": h2.z2_dim(),
                "b2_dim": h2.b2_dim(),
                "involutions": h2.involutions(),
                "basis": basis,
            })))
        }
        Command::Kers(a) => {
            let g = parse_group_spec(&a.group)?;
            let h2 = H2::compute(&g)?;
            let k = h2.ker_s();
            let basis: Vec<Value> = k
                .basis
                .iter()
                .map(|c| class_json(&h2, &c.coords, &c.representative))
                .collect();
            Ok(Outcome::info(json!({"h2_dim": h2.dim(), "dim": k.dim, "basis": basis})))
        }
        Command::TwoReduced(a) => {
            let g = parse_group_spec(&a.group)?;
            let k = H2::compute(&g)?.ker_s();
            Ok(Outcome::info(json!({"verdict": k.dim == 0, "ker_s_dim": k.dim})))
        }
        Command::Extension { group, cocycle } => {
            let g = parse_group_spec(group)?;
            let h2 = H2::compute(&g)?;
            let c = match cocycle.as_str() {
                "zero" => Cocycle2::zero(g.order()),
                "pin" => pin_cocycle(&g, PinMode::Full)?.cocycle.expect("full mode"),
                s if s.starts_with("basis:") => {
                    let i: usize = s[6..]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad basis index in `{s}`")))?;
                    let basis = h2.basis();
                    basis
                        .get(i)
                        .ok_or_else(|| Error::OutOfRange(format!("H² has dimension {}", basis.len())))?
                        .representative
                        .clone()
                }
                path => Cocycle2::parse_ascii(g.order(), &json_text(path)?)?,
            };
            let ext = extension_from_cocycle(&g, &c)?;
            let class = class_of_extension(&h2, &ext)?;
            Ok(Outcome::info(json!({
                "base_order": g.order(),
                "total_order": ext.total.order(),
                "total_abelian": ext.total.is_abelian(),
                "total_involutions": ext.total.involutions().len(),
                "two_lift_property": ext.two_lift_property(),
                "class": class.coords.to_bools(),
                "split": class.is_zero(),
            })))
        }
        Command::PinSign { n } => {
            let paths = involution_square_paths(*n)?;
            if let Some(c) = paths.clifford {
                if c != paths.counting {
                    return Err(Error::SignMismatch(*n, *n));
                }
            }
            Ok(Outcome::info(json!({
                "n": n,
                "sign": paths.counting,
                "counting": paths.counting,
                "clifford": paths.clifford,
            })))
        }
        Command::PinCocycle { group, involutions_only } => {
            let g = parse_group_spec(group)?;
            let mode = if *involutions_only {
                PinMode::InvolutionsOnly
            } else {
                PinMode::Full
            };
            let r = pin_cocycle(&g, mode)?;
            let split = match &r.cocycle {
                Some(c) => H2::compute(&g).ok().map(|h2| h2.is_coboundary(c)).transpose()?,
                None => None,
            };
            Ok(Outcome::info(json!({
                "order": g.order(),
                "mode": r.mode,
                "involutions": r.involutions,
                "square_signs": r.square_signs,
                "diagonal": r.diagonal(),
                "two_lift_property": r.has_two_lift_property(),
                "cocycle": r.cocycle.as_ref().map(Cocycle2::rows),
                "split": split,
            })))
        }
        Command::Form { entries, gram, compare } => {
            let q = match (entries, gram) {
                (Some(e), _) => parse_form(e)?,
                (None, Some(g)) => Gram::from_json(&json_text(g)?)?.diagonalize()?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let mut v = form_json(&q)?;
            if let Some(other) = compare {
                let o = parse_form(other)?;
                v["compare"] = form_json(&o)?;
                v["isometric"] = json!(q.is_isometric(&o)?);
            }
            Ok(Outcome::info(v))
        }
        Command::Trace(a) => {
            let (alg, _) = load_algebra(a)?;
            let q = alg.trace_form()?;
            let mut v = form_json(&q)?;
            v["algebra"] = alg.to_json();
            v["disc"] = json!(alg.disc()?);
            v["totally_real"] = json!(alg.is_totally_real()?);
            Ok(Outcome::info(v))
        }
        Command::Classify { algebra, descriptor } => {
            let (alg, fg) = load_algebra(algebra)?;
            let desc = load_descriptor(descriptor, fg)?;
            let r = timed(cfg.timed, || match classify_numb2(&alg, &desc) {
                Ok(r) => r.to_report(&alg),
                Err(e) => VerificationReport::skipped("cor-numb2", alg.to_json(), e.to_string()),
            });
            Ok(Outcome::report(r))
        }
        Command::Verify {
            statement,
            algebra,
            descriptor,
            d1,
            d2,
            factor_of_order_2,
        } => {
            let (alg, fg) = load_algebra(algebra)?;
            let r = match statement {
                Statement::Main => {
                    let desc = load_descriptor(descriptor, fg)?;
                    timed(cfg.timed, || or_error("thm-main", verify_main(&alg, &desc)))
                }
                Statement::Ww1 => {
                    let desc = load_descriptor(descriptor, fg)?;
                    timed(cfg.timed, || or_error("prop-ww1", verify_w1(&alg, &desc)))
                }
                Statement::Numb2 => {
                    let desc = load_descriptor(descriptor, fg)?;
                    let r = classify_numb2(&alg, &desc)?;
                    timed(cfg.timed, || r.to_report(&alg))
                }
                Statement::TwoCyclic => {
                    let compositum = algebra.fixture.as_deref() == Some(fixtures::C4X_COMPOSITUM.name);
                    let (d1, d2) = match (d1, d2) {
                        (Some(a), Some(b)) => (SquareClass::from_int(*a)?, SquareClass::from_int(*b)?),
                        (None, None) if compositum => fixtures::compositum_discs(),
                        _ => return Err(Error::Parse("two-cyclic needs --d1 and --d2".into())),
                    };
                    // The compositum's Sylow subgroup is Z/4 × Z/2.
                    let fo2 = *factor_of_order_2 || compositum;
                    timed(cfg.timed, || or_error("prop-two-cyclic", verify_two_cyclic_sylow(&alg, &d1, &d2, fo2)))
                }
            };
            Ok(Outcome::report(r))
        }
        Command::Suite { criterion } => match criterion {
            Some(id) => {
                let r = run_criterion(*id, &cfg);
                let failed = !r.passed;
                Ok(Outcome {
                    value: serde_json::to_value(r).expect("serializes"),
                    failed,
                })
            }
            None => {
                let r = run_suite(&cfg);
                let failed = !r.all_passed();
                Ok(Outcome {
                    value: serde_json::to_value(r).expect("serializes"),
                    failed,
                })
            }
        },
    }
}

fn or_error(statement: &str, r: Result<VerificationReport>) -> VerificationReport {
    r.unwrap_or_else(|e| VerificationReport::skipped(statement, Value::Null, e.to_string()))
}

/// Flattens a JSON document into aligned `path  value` rows, with a
/// PASS/FAIL table for suite output.
fn render_pretty(v: &Value) -> String {
    let mut out = String::new();
    let single = v.get("reports").is_some().then(|| vec![v.clone()]);
    if let Some(criteria) = v.get("criteria").and_then(Value::as_array).cloned().or(single) {
        for c in &criteria {
            let ok = c["passed"].as_bool().unwrap_or(false);
            out.push_str(&format!(
                "{:>3}  {}  {}\n",
                c["id"],
                if ok { "PASS" } else { "FAIL" },
                c["title"].as_str().unwrap_or("")
            ));
            for r in c["reports"].as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "          {:<8} {:<28} {}\n",
                    r["verdict"].as_str().unwrap_or(""),
                    r["statement"].as_str().unwrap_or(""),
                    r["inputs"]
                ));
            }
        }
        if v.get("summary").is_some() {
            out.push_str(&format!("observations  {}\n", v["observations"]));
            out.push_str(&format!("summary       {}\n", v["summary"]));
        }
        return out;
    }
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, val) in rows {
        out.push_str(&format!("{k:<width$}  {val}\n"));
    }
    out
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        _ => rows.push((prefix.to_string(), v.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.pretty {
                print!("{}", render_pretty(&out.value));
            } else {
                println!("{}", out.value);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
