//! The acceptance battery: ten numbered criteria, each a list of reports.
//!
//! A criterion passes when it produced at least one report and every report
//! passed. Randomized checks draw from a ChaCha stream seeded by
//! [`SuiteConfig::seed`], so a run is reproducible byte for byte.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::cohomology::{class_of_extension, extension_from_quotient, is_2_reduced, s_map_of, Cocycle2, H2};
use crate::error::Result;
use crate::fixtures::{self, Fixture};
use crate::group::Group;
use crate::hilbert::{cup, hilbert_symbol, BrauerSet};
use crate::numeric::{rat, ratio, Rational};
use crate::oracle::hilbert_oracle;
use crate::perm::Perm;
use crate::pin::{involution_square_paths, pin_cocycle, pin_lift, sign_against, times_lift, PinMode};
use crate::poly::MonicPoly;
use crate::qform::{berger, Gram, PivotOrder, QForm};
use crate::report::{timed, Basis, VerificationReport};
use crate::squareclass::{Place, SquareClass};
use crate::trace::{classify_numb2, verify_main, verify_two_cyclic_sylow, verify_w1, EtaleAlg};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "lift-squared sign table for even n ≤ 24"),
    (2, "2-reduced verdict table"),
    (3, "dim H²(S4, F2) = 2"),
    (4, "quaternion extension with the 2-lift property"),
    (5, "Pin splitness at order 8"),
    (6, "w2 of octic trace forms is (2)·(d)"),
    (7, "trace-form classification cases i to iv"),
    (8, "two-cyclic Sylow formula on the compositum"),
    (9, "property suites"),
    (10, "multiplicity identities for w1 and w2"),
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub timed: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            timed: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    /// Computed values with no expected counterpart.
    pub observations: Value,
    pub summary: SuiteSummary,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteResult {
    let criteria: Vec<CriterionResult> = CRITERIA.iter().map(|&(id, _)| run_criterion(id, cfg)).collect();
    let passed = criteria.iter().filter(|c| c.passed).count();
    SuiteResult {
        seed: cfg.seed,
        summary: SuiteSummary {
            passed,
            failed: criteria.len() - passed,
        },
        observations: observations().unwrap_or_else(|e| json!({"error": e.to_string()})),
        criteria,
    }
}

/// Runs one criterion; unknown ids yield a failing result.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .unwrap_or("unknown criterion");
    let outcome = match id {
        1 => lift_squared_table(cfg),
        2 => two_reduced_table(cfg),
        3 => h2_s4(cfg),
        4 => quaternion_extension(cfg),
        5 => pin_splitness(cfg),
        6 => octic_w2(cfg),
        7 => numb2_cases(cfg),
        8 => two_cyclic(cfg),
        9 => property_suites(cfg),
        10 => multiplicity_identities(cfg),
        _ => Ok(Vec::new()),
    };
    match outcome {
        Ok(reports) => CriterionResult {
            id,
            title,
            passed: !reports.is_empty() && reports.iter().all(VerificationReport::passed),
            reports,
            error: None,
        },
        Err(e) => CriterionResult {
            id,
            title,
            passed: false,
            reports: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

/// `dim H²(S3)` and whether `Pin(Q8)` splits.
pub fn observations() -> Result<Value> {
    let s3 = catalog::sym(3)?;
    let q8 = catalog::quaternion8()?;
    let pin = pin_cocycle(&q8, PinMode::Full)?;
    let cocycle = pin.cocycle.expect("full mode");
    Ok(json!({
        "h2_dim_sym3": H2::compute(&s3)?.dim(),
        "pin_quaternion8_splits": H2::compute(&q8)?.is_coboundary(&cocycle)?,
    }))
}

/// Wraps a fallible report builder so that errors surface as failures.
fn attempt(
    cfg: &SuiteConfig,
    statement: &str,
    inputs: Value,
    f: impl FnOnce() -> Result<VerificationReport>,
) -> VerificationReport {
    timed(cfg.timed, || {
        f().unwrap_or_else(|e| {
            VerificationReport::compare(statement, inputs, json!({"error": e.to_string()}), Value::Null, Basis::Definition)
        })
    })
}

fn lift_squared_table(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in (2..=24).step_by(2) {
        out.push(attempt(cfg, "prop-lift2", json!({"n": n}), || {
            let paths = involution_square_paths(n)?;
            let rule = if n % 8 == 0 || n % 8 == 2 { 1 } else { -1 };
            Ok(VerificationReport::compare(
                "prop-lift2",
                json!({"n": n}),
                json!({"counting": paths.counting, "clifford": paths.clifford}),
                json!({"counting": rule, "clifford": rule}),
                Basis::Theorem,
            ))
        }));
    }
    Ok(out)
}

const TWO_REDUCED_TABLE: [(&str, bool); 14] = [
    ("catalog:cyclic:2", true),
    ("catalog:cyclic:4", true),
    ("catalog:cyclic:8", true),
    ("catalog:cyclic:16", true),
    ("catalog:elem_abelian_2:1", true),
    ("catalog:elem_abelian_2:2", true),
    ("catalog:elem_abelian_2:3", true),
    ("catalog:dihedral:8", true),
    ("catalog:dihedral:16", true),
    ("catalog:sym:3", true),
    ("catalog:sym:4", true),
    ("catalog:alt:4", true),
    ("catalog:quaternion8", false),
    ("catalog:Z4xZ2", false),
];

fn two_reduced_table(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    Ok(TWO_REDUCED_TABLE
        .iter()
        .map(|&(spec, expected)| {
            attempt(cfg, "thm-2red", json!({"group": spec}), || {
                let g = catalog::parse_group_spec(spec)?;
                Ok(VerificationReport::compare(
                    "thm-2red",
                    json!({"group": spec}),
                    json!({"two_reduced": is_2_reduced(&g)?}),
                    json!({"two_reduced": expected}),
                    Basis::Theorem,
                ))
            })
        })
        .collect())
}

fn h2_s4(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let inputs = json!({"group": "catalog:sym:4"});
    Ok(vec![attempt(cfg, "h2-sym4", inputs.clone(), || {
        let g = catalog::sym(4)?;
        let h2 = H2::compute(&g)?;
        Ok(VerificationReport::compare(
            "h2-sym4",
            inputs,
            json!({"dim": h2.dim()}),
            json!({"dim": 2}),
            Basis::Theorem,
        )
        .with_details(json!({"z2_dim": h2.z2_dim(), "b2_dim": h2.b2_dim()})))
    })])
}

fn quaternion_extension(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let t = catalog::quat_cover_element(2, 2);
    let inputs = json!({"group": "catalog:quat_cover", "kernel": t});
    Ok(vec![attempt(cfg, "remark-quaternion", inputs.clone(), || {
        let total = catalog::quat_cover()?;
        let ext = extension_from_quotient(&total, t)?;
        let h2 = H2::compute(&ext.base)?;
        let class = class_of_extension(&h2, &ext)?;
        Ok(VerificationReport::compare(
            "remark-quaternion",
            inputs,
            json!({
                "quotient_order": ext.base.order(),
                "quotient_involutions": ext.base.involutions().len(),
                "quotient_abelian": ext.base.is_abelian(),
                "two_lift_property": ext.two_lift_property(),
                "s_map_zero": h2.s_map(&class).is_zero(),
                "class_nonzero": !class.is_zero(),
            }),
            json!({
                "quotient_order": 8,
                "quotient_involutions": 1,
                "quotient_abelian": false,
                "two_lift_property": true,
                "s_map_zero": true,
                "class_nonzero": true,
            }),
            Basis::Theorem,
        ))
    })])
}

fn pin_splitness(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for spec in ["catalog:dihedral:8", "catalog:cyclic:8", "catalog:elem_abelian_2:3"] {
        let inputs = json!({"group": spec});
        out.push(attempt(cfg, "pin-split", inputs.clone(), || {
            let g = catalog::parse_group_spec(spec)?;
            let pin = pin_cocycle(&g, PinMode::Full)?;
            let c = pin.cocycle.as_ref().expect("full mode");
            let h2 = H2::compute(&g)?;
            Ok(VerificationReport::compare(
                "pin-split",
                inputs,
                json!({"coboundary": h2.is_coboundary(c)?}),
                json!({"coboundary": true}),
                Basis::Oracle,
            ))
        }));
    }
    let inputs = json!({"group": "catalog:cyclic:4"});
    out.push(attempt(cfg, "pin-diagonal", inputs.clone(), || {
        let g = catalog::cyclic(4)?;
        let pin = pin_cocycle(&g, PinMode::Full)?;
        let c = pin.cocycle.as_ref().expect("full mode");
        Ok(VerificationReport::compare(
            "pin-diagonal",
            inputs,
            json!({"s_map_nonzero": !s_map_of(&g, c).is_zero()}),
            json!({"s_map_nonzero": true}),
            Basis::Theorem,
        )
        .with_details(json!({"diagonal": pin.diagonal()})))
    }));
    Ok(out)
}

fn fixture_inputs(f: &Fixture) -> Value {
    json!({"fixture": f.name})
}

fn octic_w2(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for f in fixtures::SERRE_OCTICS {
        out.push(attempt(cfg, "thm-main", fixture_inputs(&f), || {
            verify_main(&f.algebra()?, &f.descriptor()?)
        }));
        out.push(attempt(cfg, "prop-ww1", fixture_inputs(&f), || {
            verify_w1(&f.algebra()?, &f.descriptor()?)
        }));
    }
    Ok(out)
}

fn numb2_cases(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let cases = [
        (fixtures::MQ_REAL, "i"),
        (fixtures::D4_OCTIC, "ii"),
        (fixtures::C8_REAL, "iii"),
        (fixtures::C8_IMAG, "iv"),
    ];
    Ok(cases
        .iter()
        .map(|(f, expected)| {
            let statement = format!("cor-numb2-{expected}");
            attempt(cfg, &statement, fixture_inputs(f), || {
                let r = classify_numb2(&f.algebra()?, &f.descriptor()?)?;
                Ok(VerificationReport::compare(
                    &statement,
                    fixture_inputs(f),
                    json!({"case": r.case.label(), "isometric": r.verdict}),
                    json!({"case": expected, "isometric": true}),
                    Basis::Theorem,
                )
                .with_details(json!({
                    "trace_form": r.trace_form.to_strings(),
                    "predicted_form": r.predicted.to_strings(),
                })))
            })
        })
        .collect())
}

fn two_cyclic(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let f = fixtures::C4X_COMPOSITUM;
    let (d1, d2) = fixtures::compositum_discs();
    let discs = attempt(cfg, "compositum-discs", fixture_inputs(&f), || {
        let e1 = EtaleAlg::field(MonicPoly::from_i64(&[1, 0, -3])?)?;
        let e2 = fixtures::C4.algebra()?;
        Ok(VerificationReport::compare(
            "compositum-discs",
            json!({"e1": e1.to_json(), "e2": e2.to_json()}),
            json!({"d1": e1.disc()?, "d2": e2.disc()?}),
            json!({"d1": d1, "d2": d2}),
            Basis::Definition,
        ))
    });
    let formula = attempt(cfg, "prop-two-cyclic", fixture_inputs(&f), || {
        verify_two_cyclic_sylow(&f.algebra()?, &d1, &d2, true)
    });
    Ok(vec![discs, formula])
}

/// Summarizes a batch of checks: passes iff every one of `total` agreed.
fn tally(statement: &str, inputs: Value, total: usize, failures: Vec<Value>) -> VerificationReport {
    let agreed = total - failures.len();
    let mut r = VerificationReport::compare(
        statement,
        inputs,
        json!({"agreed": agreed}),
        json!({"agreed": total}),
        Basis::Oracle,
    );
    if !failures.is_empty() {
        r = r.with_details(json!({"first_failures": failures.into_iter().take(5).collect::<Vec<_>>()}));
    }
    r
}

fn random_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, max_rank: usize) -> Result<QForm> {
    let n = rng.gen_range(1..=max_rank);
    let entries = (0..n)
        .map(|_| ratio(random_nonzero(rng, 60), rng.gen_range(1..=4)))
        .collect();
    QForm::new(entries)
}

fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> Result<Gram> {
    let mut rows = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
    }
    Gram::from_rows(rows)
}

/// `Pᵀ G P` for a random integer `P` with unit determinant (a product of
/// elementary row operations and a permutation).
fn random_congruence(rng: &mut ChaCha8Rng, g: &Gram) -> Result<Gram> {
    let n = g.size();
    let mut p: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let k = rat(rng.gen_range(-2..=2));
            for c in 0..n {
                let add = &k * &p[j][c];
                p[i][c] += add;
            }
        }
    }
    p.shuffle(rng);
    let mut out = vec![vec![rat(0); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut s = rat(0);
            for a in 0..n {
                if p[a][i].is_zero() {
                    continue;
                }
                for b in 0..n {
                    s += &p[a][i] * g.get(a, b) * &p[b][j];
                }
            }
            *cell = s;
        }
    }
    Gram::from_rows(out)
}

fn diagonalization_invariance(rng: &mut ChaCha8Rng, brauer: &mut Vec<BrauerSet>) -> Result<VerificationReport> {
    let total = 100;
    let mut failures = Vec::new();
    let mut done = 0;
    while done < total {
        let g = random_gram(rng, 6)?;
        let first = match g.diagonalize_with(PivotOrder::First) {
            Ok(q) => q,
            Err(crate::Error::Singular) => continue,
            Err(e) => return Err(e),
        };
        done += 1;
        let last = g.diagonalize_with(PivotOrder::Last)?;
        let moved = random_congruence(rng, &g)?.diagonalize()?;
        let reference = first.invariants()?;
        brauer.push(reference.w2.clone());
        if last.invariants()? != reference || moved.invariants()? != reference {
            failures.push(json!({"first": first.to_strings(), "last": last.to_strings(), "moved": moved.to_strings()}));
        }
    }
    Ok(tally("diagonalization-invariance", json!({"grams": total, "size": 6}), total, failures))
}

fn odd_primes_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn hilbert_against_oracle(brauer: &mut Vec<BrauerSet>) -> Result<VerificationReport> {
    let mut places = vec![Place::Infinity, Place::Prime(2)];
    places.extend(odd_primes_to(50).into_iter().map(Place::Prime));
    let range: Vec<i64> = (-30..=30).filter(|&x| x != 0).collect();
    let mut total = 0;
    let mut failures = Vec::new();
    for &a in &range {
        let ca = SquareClass::from_int(a)?;
        for &b in &range {
            let cb = SquareClass::from_int(b)?;
            for &v in &places {
                total += 1;
                let fast = hilbert_symbol(&ca, &cb, v);
                let slow = hilbert_oracle(a, b, v);
                if fast != slow {
                    failures.push(json!({"a": a, "b": b, "place": v, "symbol": fast, "oracle": slow}));
                }
            }
            brauer.push(cup(&ca, &cb));
        }
    }
    Ok(tally(
        "hilbert-oracle",
        json!({"bound": 30, "places": places}),
        total,
        failures,
    ))
}

fn whitney(rng: &mut ChaCha8Rng, brauer: &mut Vec<BrauerSet>) -> Result<VerificationReport> {
    let total = 100;
    let mut failures = Vec::new();
    for _ in 0..total {
        let (q1, q2) = (random_form(rng, 5)?, random_form(rng, 5)?);
        let lhs = q1.direct_sum(&q2).sw_total()?;
        let rhs = q1.sw_total()?.mul(&q2.sw_total()?);
        brauer.push(lhs.w2.clone());
        if lhs != rhs {
            failures.push(json!({"q1": q1.to_strings(), "q2": q2.to_strings()}));
        }
    }
    Ok(tally("whitney", json!({"pairs": total}), total, failures))
}

fn berger_expansion(rng: &mut ChaCha8Rng, brauer: &mut Vec<BrauerSet>) -> Result<VerificationReport> {
    let total = 100;
    let mut failures = Vec::new();
    for _ in 0..total {
        let a = ratio(random_nonzero(rng, 60), rng.gen_range(1..=4));
        let q = random_form(rng, 6)?;
        let direct = q.scale(&a)?.sw_total()?;
        let closed = berger(&a, &q)?;
        brauer.push(direct.w2.clone());
        if direct != closed {
            failures.push(json!({"a": crate::numeric::format_rational(&a), "q": q.to_strings()}));
        }
    }
    Ok(tally("berger", json!({"cases": total}), total, failures))
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::new(images).expect("shuffled identity")
}

fn pin_proportionality(rng: &mut ChaCha8Rng) -> Result<VerificationReport> {
    let total = 200;
    let mut failures = Vec::new();
    for _ in 0..total {
        let n = rng.gen_range(2..=10);
        let (p, q) = (random_perm(rng, n), random_perm(rng, n));
        let product = times_lift(&pin_lift(&p)?, &q)?;
        if sign_against(&product, &pin_lift(&p.compose(&q))?).is_none() {
            failures.push(json!({"p": p.images(), "q": q.images()}));
        }
    }
    Ok(tally("pin-proportionality", json!({"pairs": total, "max_degree": 10}), total, failures))
}

fn catalog_groups() -> Result<Vec<(&'static str, Group)>> {
    [
        "catalog:cyclic:2",
        "catalog:cyclic:3",
        "catalog:cyclic:4",
        "catalog:cyclic:6",
        "catalog:cyclic:8",
        "catalog:cyclic:16",
        "catalog:elem_abelian_2:1",
        "catalog:elem_abelian_2:2",
        "catalog:elem_abelian_2:3",
        "catalog:dihedral:8",
        "catalog:dihedral:16",
        "catalog:sym:3",
        "catalog:sym:4",
        "catalog:alt:4",
        "catalog:quaternion8",
        "catalog:Z4xZ2",
        "catalog:quat_cover",
    ]
    .into_iter()
    .map(|s| Ok((s, catalog::parse_group_spec(s)?)))
    .collect()
}

fn lemma_et(groups: &[(&str, Group)]) -> VerificationReport {
    let mut failures = Vec::new();
    let mut total = 0;
    for (spec, g) in groups.iter().filter(|(_, g)| g.order() % 2 == 0) {
        total += 1;
        let check = g.regular_rep_in_alternating();
        if check.in_alternating != check.sylow_noncyclic {
            failures.push(json!({"group": spec, "in_alternating": check.in_alternating}));
        }
    }
    tally("lemma-et", json!({"groups": total}), total, failures)
}

fn s_map_invariance(rng: &mut ChaCha8Rng, groups: &[(&str, Group)]) -> Result<Vec<VerificationReport>> {
    let per_group = 100;
    let mut out = Vec::new();
    for (spec, g) in groups {
        let h2 = H2::compute(g)?;
        let mut reps: Vec<Cocycle2> = vec![Cocycle2::zero(g.order())];
        reps.extend(h2.basis().into_iter().map(|c| c.representative));
        let mut failures = Vec::new();
        for i in 0..per_group {
            let c = &reps[i % reps.len()];
            let mut b: Vec<bool> = (0..g.order()).map(|_| rng.gen()).collect();
            b[0] = false;
            let moved = c.add(&Cocycle2::coboundary(g, &b));
            if s_map_of(g, &moved) != s_map_of(g, c) || h2.class_of(&moved)?.coords != h2.class_of(c)?.coords {
                failures.push(json!({"representative": i % reps.len(), "cochain": b}));
            }
        }
        out.push(tally(
            "s-map-invariance",
            json!({"group": spec, "coboundaries": per_group}),
            per_group,
            failures,
        ));
    }
    Ok(out)
}

/// Reports whose inputs depend on the seed.
const RANDOMIZED: [&str; 5] = [
    "diagonalization-invariance",
    "whitney",
    "berger",
    "pin-proportionality",
    "s-map-invariance",
];

fn property_suites(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut brauer = Vec::new();
    let groups = catalog_groups()?;
    let mut out = vec![
        timed(cfg.timed, || or_fail("diagonalization-invariance", diagonalization_invariance(&mut rng, &mut brauer))),
        timed(cfg.timed, || or_fail("hilbert-oracle", hilbert_against_oracle(&mut brauer))),
        timed(cfg.timed, || or_fail("whitney", whitney(&mut rng, &mut brauer))),
        timed(cfg.timed, || or_fail("berger", berger_expansion(&mut rng, &mut brauer))),
        timed(cfg.timed, || or_fail("pin-proportionality", pin_proportionality(&mut rng))),
        timed(cfg.timed, || lemma_et(&groups)),
    ];
    out.extend(s_map_invariance(&mut rng, &groups)?);
    for r in out.iter_mut() {
        if RANDOMIZED.contains(&r.statement.as_str()) {
            r.inputs["seed"] = json!(cfg.seed);
        }
    }
    let odd: Vec<Value> = brauer
        .iter()
        .filter(|s| !s.satisfies_reciprocity())
        .take(5)
        .map(|s| json!(s))
        .collect();
    out.push(tally("hilbert-reciprocity", json!({"sets": brauer.len()}), brauer.len(), odd));
    Ok(out)
}

fn or_fail(statement: &str, r: Result<VerificationReport>) -> VerificationReport {
    r.unwrap_or_else(|e| {
        VerificationReport::compare(statement, Value::Null, json!({"error": e.to_string()}), Value::Null, Basis::Oracle)
    })
}

/// Coefficients of `f(x − k)`, leading first.
fn shifted(f: &MonicPoly, k: i64) -> Vec<BigInt> {
    // Horner in x − k, with coefficient vectors kept lowest degree first.
    let mut acc: Vec<BigInt> = Vec::new();
    for c in f.coeffs() {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * k;
        }
        next[0] += c;
        acc = next;
    }
    acc.reverse();
    acc
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Q[x]/(f(x) f(x−1) … f(x−m+1))`, a model of `m` copies of `Q[x]/(f)`
/// that does not go through the multiplicity bookkeeping.
fn shifted_copies(f: &MonicPoly, m: usize) -> Result<EtaleAlg> {
    let mut acc = vec![BigInt::one()];
    for k in 0..m as i64 {
        acc = poly_mul(&acc, &shifted(f, k));
    }
    EtaleAlg::field(MonicPoly::new(acc)?)
}

const MULTIPLICITY_BASES: [(&str, &[i64]); 6] = [
    ("x^2-3", &[1, 0, -3]),
    ("x^2+1", &[1, 0, 1]),
    ("x^2+2", &[1, 0, 2]),
    ("x^4-4x^2+2", &[1, 0, -4, 0, 2]),
    ("x^4-2", &[1, 0, 0, 0, -2]),
    ("x^4+1", &[1, 0, 0, 0, 1]),
];

fn multiplicity_identities(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for (name, coeffs) in MULTIPLICITY_BASES {
        for m in 1..=4usize {
            let inputs = json!({"e": name, "m": m});
            out.push(attempt(cfg, "eq-rel", inputs.clone(), || {
                let f = MonicPoly::from_i64(coeffs)?;
                let qe = EtaleAlg::field(f.clone())?.trace_form()?;
                let (w1, w2) = (qe.w1()?, qe.w2()?);
                let w1_m = if m % 2 == 1 { w1.clone() } else { SquareClass::one() };
                let mut w2_m = if m % 2 == 1 { w2 } else { BrauerSet::empty() };
                if (m * (m - 1) / 2) % 2 == 1 {
                    w2_m = w2_m.add(&cup(&w1, &w1));
                }
                let via_shift = shifted_copies(&f, m)?.trace_form()?;
                let via_copies = EtaleAlg::new(vec![(f, m)])?.trace_form()?;
                let expected = json!({"w1": w1_m, "w2": w2_m});
                Ok(VerificationReport::compare(
                    "eq-rel",
                    inputs,
                    json!({
                        "shifted": {"w1": via_shift.w1()?, "w2": via_shift.w2()?},
                        "copies": {"w1": via_copies.w1()?, "w2": via_copies.w2()?},
                    }),
                    json!({"shifted": expected, "copies": expected}),
                    Basis::Theorem,
                ))
            }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_and_product() {
        let f = MonicPoly::from_i64(&[1, 0, -3]).unwrap();
        let g = shifted(&f, 2);
        assert_eq!(g, vec![BigInt::from(1), BigInt::from(-4), BigInt::from(1)]);
        assert_eq!(shifted_copies(&f, 3).unwrap().degree(), 6);
    }

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(42, &SuiteConfig::default());
        assert!(!r.passed);
    }

    #[test]
    fn small_criteria_pass() {
        let cfg = SuiteConfig::default();
        for id in [1, 4, 5, 8] {
            let r = run_criterion(id, &cfg);
            assert!(r.passed, "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }
}
