//! Command implementations behind the `cozero` binary.
//!
//! Every command returns an [`Outcome`]: the text to print and the exit code.
//! Exit codes are a stable contract: `0` success (every verdict as expected,
//! every requested class holds), `1` a mismatch or a failing class, `2` bad
//! input or an internal error.

use std::fmt::Write as _;
use std::time::Instant;

use cozero::finite::{verify_anti_isomorphism, verify_finite_classes};
use cozero::io::{presentation_from_str, ElementJson};
use cozero::predicates::{
    clcoz_open, coz_closed, coz_regular_open, in_perp, in_polar, in_principal, in_zkernel, is_strong_unit, is_weak_unit,
};
use cozero::space::Space;
use cozero::terms::{
    builtin, class_check_on, cross_check_with, verify_witness, AnyPresentation, Class, ClassVerdict, CrossReport, GroupPresentation, Sample, Status,
};
use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_BUDGET: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub budget: usize,
    pub seed: u64,
    pub format: Format,
    /// Restricts `check` to these classes; empty means all.
    pub classes: Vec<Class>,
    /// Adds wall-clock times to reports, which makes them non-reproducible.
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: DEFAULT_BUDGET,
            seed: 0,
            format: Format::Text,
            classes: Vec::new(),
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            output: format!("error: {msg}\n"),
        }
    }
}

macro_rules! dispatch {
    ($any:expr, $p:ident => $body:expr) => {
        match $any {
            AnyPresentation::AlphaN($p) => $body,
            AnyPresentation::HalfLine($p) => $body,
            AnyPresentation::Finite($p) => $body,
        }
    };
}

/// What `verify-paper` expects of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    HoldsExact,
    /// Holds, exactly or within the budget.
    Holds,
    /// Fails; when labels are given, the witness must consist of exactly
    /// these terms.
    Fails(Option<&'static [&'static str]>),
    /// Reported without an expectation.
    Informational,
}

impl Expect {
    fn describe(&self) -> Value {
        match self {
            Expect::HoldsExact => json!("HoldsExact"),
            Expect::Holds => json!("Holds"),
            Expect::Fails(None) => json!("Fails"),
            Expect::Fails(Some(labels)) => json!(format!("Fails({})", labels.join(", "))),
            Expect::Informational => Value::Null,
        }
    }
}

/// The expected verdicts for the example groups, keyed by presentation and
/// class, each with the reason it is expected.
pub const EXPECTATIONS: &[(&str, Class, Expect, &str)] = &[
    ("ex_5_2_1", Class::Y, Expect::HoldsExact, "F+v: every coz inclusion gives principal membership"),
    ("ex_5_2_1", Class::CR, Expect::Fails(Some(&["v"])), "F+v: v is a weak unit that is not strong"),
    ("ex_5_2_1", Class::M, Expect::Fails(None), "F+v: M = Y and CR, and CR fails"),
    ("ex_5_2_2", Class::Y, Expect::Holds, "PWL: the full piecewise-linear group lies in Y"),
    ("ex_5_2_2", Class::CR, Expect::Fails(Some(&["g"])), "PWL: g is a weak unit that is not strong"),
    ("ex_5_2_2", Class::M, Expect::Fails(None), "PWL: M = Y and CR, and CR fails"),
    ("ex_5_3_2", Class::Y, Expect::Fails(Some(&["a", "b"])), "F+a+b: coz(a) = coz(b) but a is not in G(b)"),
    ("ex_5_3_2", Class::CR, Expect::HoldsExact, "F+a+b: every cozero-set is regular open"),
    ("ex_5_3_2", Class::M, Expect::Fails(None), "F+a+b: M = Y and CR, and Y fails"),
    ("ex_5_4", Class::Y, Expect::HoldsExact, "F+a: every coz inclusion gives principal membership"),
    ("ex_5_4", Class::CR, Expect::HoldsExact, "F+a: every cozero-set is regular open"),
    ("ex_5_4", Class::M, Expect::HoldsExact, "F+a: polar membership gives principal membership"),
    ("ex_5_4", Class::HA, Expect::Fails(Some(&["a"])), "F+a: in M but not hyperarchimedean, coz(a) is not closed"),
];

pub const FINITE_SIZES: [usize; 4] = [1, 2, 3, 5];

fn expectation(presentation: &str, class: Class) -> (Expect, String) {
    if presentation.starts_with("finite(") {
        return (Expect::Holds, "finite K: C(K) lies in every class".into());
    }
    EXPECTATIONS
        .iter()
        .find(|(p, c, _, _)| *p == presentation && *c == class)
        .map_or((Expect::Informational, "informational".into()), |(_, _, e, why)| {
            (e.clone(), why.to_string())
        })
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    pub citation: String,
    pub expected: Value,
    pub verdict: String,
    pub witness: Value,
    pub matches: Option<bool>,
    pub runtime_ms: Option<u128>,
}

impl CheckRecord {
    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("id".into(), json!(self.id));
        obj.insert("citation".into(), json!(self.citation));
        obj.insert("expected".into(), self.expected.clone());
        obj.insert("verdict".into(), json!(self.verdict));
        obj.insert("witness".into(), self.witness.clone());
        obj.insert("matches".into(), json!(self.matches));
        if let Some(ms) = self.runtime_ms {
            obj.insert("runtime_ms".into(), json!(ms));
        }
        Value::Object(obj)
    }
}

fn status_text<E>(v: &ClassVerdict<E>) -> String {
    match &v.status {
        Status::HoldsExact => "HoldsExact".into(),
        Status::HoldsSampled { budget } => format!("HoldsSampled({budget})"),
        Status::Fails(w) => {
            let labels: Vec<&str> = w.items.iter().map(|(l, _)| l.as_str()).collect();
            format!("Fails({})", labels.join(", "))
        }
    }
}

fn witness_json<E: ElementJson>(v: &ClassVerdict<E>) -> Value {
    match v.witness() {
        None => Value::Null,
        Some(w) => json!({
            "condition": w.condition,
            "items": w.items.iter().map(|(label, e)| json!({"term": label, "element": e.to_json()})).collect::<Vec<_>>(),
        }),
    }
}

fn verdict_matches<S: Space>(space: &S, v: &ClassVerdict<S::Elem>, expect: &Expect) -> Option<bool> {
    match expect {
        Expect::Informational => None,
        Expect::HoldsExact => Some(v.status == Status::HoldsExact),
        Expect::Holds => Some(v.holds()),
        Expect::Fails(labels) => Some(match v.witness() {
            None => false,
            Some(w) => {
                let same = labels.is_none_or(|want| {
                    w.items.len() == want.len() && w.items.iter().zip(want).all(|((l, _), want)| l == want)
                });
                same && verify_witness(space, v.class, w)
            }
        }),
    }
}

/// Class verdicts (and optionally the cross-check) for one presentation.
fn presentation_records<S>(p: &GroupPresentation<S>, classes: &[Class], opts: &Options, cross: bool) -> Vec<CheckRecord>
where
    S: Space,
    S::Elem: ElementJson,
{
    let started = Instant::now();
    let sample = Sample::enumerate(p, opts.budget, opts.seed);
    let mut records = Vec::new();
    let mut verdicts = Vec::new();
    for &class in classes {
        let t = Instant::now();
        let v = class_check_on(p, &sample, class, opts.budget);
        let (expect, citation) = expectation(&p.name, class);
        records.push(CheckRecord {
            id: format!("{}/{}", p.name, class),
            citation,
            expected: expect.describe(),
            verdict: status_text(&v),
            witness: witness_json(&v),
            matches: verdict_matches(&p.space, &v, &expect),
            runtime_ms: opts.timings.then(|| t.elapsed().as_millis()),
        });
        verdicts.push(v);
    }
    if cross {
        let report: CrossReport = cross_check_with(p, &sample, &verdicts);
        for item in report.items {
            records.push(CheckRecord {
                id: format!("{}/cross/{}", p.name, item.id),
                citation: "equivalent conditions agree".into(),
                expected: json!("agree"),
                verdict: if item.passed { "agree".into() } else { "disagree".into() },
                witness: json!(item.detail),
                matches: Some(item.passed),
                runtime_ms: None,
            });
        }
        if let Some(first) = records.iter_mut().find(|r| r.id.contains("/cross/")) {
            first.runtime_ms = opts.timings.then(|| started.elapsed().as_millis());
        }
    }
    records
}

fn finite_records(k: usize, opts: &Options) -> Result<Vec<CheckRecord>, String> {
    let t = Instant::now();
    let duality = verify_anti_isomorphism(k).map_err(|e| e.to_string())?;
    let dual_ms = t.elapsed().as_millis();
    let t = Instant::now();
    let classes = verify_finite_classes(k, opts.budget).map_err(|e| e.to_string())?;
    let class_ms = t.elapsed().as_millis();
    Ok(vec![
        CheckRecord {
            id: format!("finite({k})/anti-isomorphism"),
            citation: "closed sets and their kernels are anti-isomorphic lattices".into(),
            expected: json!("pass"),
            verdict: if duality.passed() { "pass".into() } else { "fail".into() },
            witness: json!(format!("{} subset pairs, failures: {:?}", duality.pairs_checked, duality.failures)),
            matches: Some(duality.passed()),
            runtime_ms: opts.timings.then_some(dual_ms),
        },
        CheckRecord {
            id: format!("finite({k})/element-classes"),
            citation: "finite K: every cozero-set is clopen and nested supports dominate".into(),
            expected: json!("pass"),
            verdict: if classes.all_hold() { "pass".into() } else { "fail".into() },
            witness: json!(format!("{} elements, {} pairs", classes.elements_checked, classes.pairs_checked)),
            matches: Some(classes.all_hold()),
            runtime_ms: opts.timings.then_some(class_ms),
        },
    ])
}

/// `Z(v) = {α}` has empty interior, so `αℕ` is not almost-P.
fn almost_p_record() -> CheckRecord {
    use cozero::alphan::{AlphaN, EventuallyPeriodicSet};
    let z = AlphaN.zset(&AlphaN::v());
    let ok = z == EventuallyPeriodicSet::alpha_only() && AlphaN.interior(&z).is_empty();
    CheckRecord {
        id: "ex_5_2_1/zero-set-without-interior".into(),
        citation: "alphaN is not almost-P: Z(v) = {alpha} has empty interior".into(),
        expected: json!("pass"),
        verdict: if ok { "pass".into() } else { "fail".into() },
        witness: json!(format!("Z(v) = {z}")),
        matches: Some(ok),
        runtime_ms: None,
    }
}

fn render(records: &[CheckRecord], opts: &Options) -> String {
    match opts.format {
        Format::Json => {
            let checks: Vec<Value> = records.iter().map(CheckRecord::to_json).collect();
            let report = json!({
                "version": VERSION,
                "seed": opts.seed,
                "budget": opts.budget,
                "checks": checks,
            });
            format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "cozero {VERSION}  seed={} budget={}", opts.seed, opts.budget);
            for r in records {
                let mark = match r.matches {
                    Some(true) => "ok  ",
                    Some(false) => "FAIL",
                    None => "    ",
                };
                let _ = write!(out, "{mark} {:<48} {}", r.id, r.verdict);
                if let Some(w) = r.witness.get("condition").and_then(Value::as_str) {
                    let _ = write!(out, " [{w}]");
                }
                if let Some(ms) = r.runtime_ms {
                    let _ = write!(out, " ({ms} ms)");
                }
                out.push('\n');
            }
            let mismatches = records.iter().filter(|r| r.matches == Some(false)).count();
            let _ = writeln!(out, "{} checks, {} mismatches", records.len(), mismatches);
            out
        }
    }
}

/// Reproduces the verdict table for the example groups.
pub fn cmd_verify_examples(opts: &Options) -> Outcome {
    let mut names: Vec<String> = ["ex_5_2_1", "ex_5_2_2", "ex_5_3_2", "ex_5_4"].map(String::from).to_vec();
    names.extend(FINITE_SIZES.iter().map(|k| format!("finite({k})")));
    let results: Vec<Result<Vec<CheckRecord>, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| {
                scope.spawn(move || -> Result<Vec<CheckRecord>, String> {
                    let p = builtin(name).map_err(|e| e.to_string())?;
                    let mut records = dispatch!(&p, q => presentation_records(q, &Class::ALL, opts, true));
                    if let Some(k) = name.strip_prefix("finite(").and_then(|r| r.strip_suffix(')')) {
                        records.extend(finite_records(k.parse().map_err(|_| "bad size".to_string())?, opts)?);
                    }
                    if name == "ex_5_2_1" {
                        records.push(almost_p_record());
                    }
                    Ok(records)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("worker panicked".into())))
            .collect()
    });
    let mut records = Vec::new();
    for r in results {
        match r {
            Ok(rs) => records.extend(rs),
            Err(e) => {
                return Outcome {
                    code: 2,
                    output: format!("internal error: {e}\n"),
                }
            }
        }
    }
    let code = if records.iter().any(|r| r.matches == Some(false)) { 1 } else { 0 };
    Outcome {
        code,
        output: render(&records, opts),
    }
}

/// A builtin name, or the path of a presentation file.
pub fn load_presentation(source: &str) -> Result<AnyPresentation, String> {
    if let Ok(p) = builtin(source) {
        return Ok(p);
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
    let stem = std::path::Path::new(source)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(source);
    presentation_from_str(&text, stem).map_err(|e| format!("{source}: {e}"))
}

/// Class verdicts for a presentation; exit 0 iff every requested class holds.
pub fn cmd_check(presentation: &str, opts: &Options) -> Outcome {
    let p = match load_presentation(presentation) {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(e),
    };
    let classes: Vec<Class> = if opts.classes.is_empty() {
        Class::ALL.to_vec()
    } else {
        let mut c = opts.classes.clone();
        c.sort();
        c.dedup();
        c
    };
    let mut records = dispatch!(&p, q => presentation_records(q, &classes, opts, false));
    // `check` reports verdicts, not expectations
    for r in &mut records {
        r.expected = Value::Null;
        r.matches = None;
        r.citation = "class-membership".into();
    }
    let code = if records.iter().any(|r| r.verdict.starts_with("Fails")) { 1 } else { 0 };
    Outcome {
        code,
        output: render(&records, opts),
    }
}

pub const PREDICATES: [(&str, usize); 11] = [
    ("in-principal", 2),
    ("in-polar", 2),
    ("in-zkernel", 2),
    ("in-perp", 2),
    ("weak-unit", 1),
    ("strong-unit", 1),
    ("regular-open", 1),
    ("coz-closed", 1),
    ("clcoz-open", 1),
    ("coz", 1),
    ("zset", 1),
];

fn element_value<S: Space>(p: &GroupPresentation<S>, predicate: &str, terms: &[String]) -> Result<(Value, String), String> {
    let elems: Vec<S::Elem> = terms
        .iter()
        .map(|t| p.eval_str(t).map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let s = &p.space;
    let boolean = |b: bool| (json!(b), b.to_string());
    Ok(match (predicate, elems.as_slice()) {
        ("in-principal", [f, g]) => match in_principal(s, f, g) {
            Some(n) => (json!({"value": true, "n": n.to_string()}), format!("true, n={n}")),
            None => boolean(false),
        },
        ("in-polar", [f, g]) => boolean(in_polar(s, f, g)),
        ("in-zkernel", [f, g]) => boolean(in_zkernel(s, f, g)),
        ("in-perp", [f, g]) => boolean(in_perp(s, f, g)),
        ("weak-unit", [g]) => boolean(is_weak_unit(s, g)),
        ("strong-unit", [g]) => boolean(is_strong_unit(s, g)),
        ("regular-open", [g]) => boolean(coz_regular_open(s, g)),
        ("coz-closed", [g]) => boolean(coz_closed(s, g)),
        ("clcoz-open", [g]) => boolean(clcoz_open(s, g)),
        ("coz", [g]) => {
            let set = s.coz(g).to_string();
            (json!(set), set)
        }
        ("zset", [g]) => {
            let set = s.zset(g).to_string();
            (json!(set), set)
        }
        _ => unreachable!("arity checked by the caller"),
    })
}

/// Evaluates one predicate on terms of a presentation.
pub fn cmd_element(presentation: &str, predicate: &str, terms: &[String], opts: &Options) -> Outcome {
    let Some(&(_, arity)) = PREDICATES.iter().find(|(name, _)| *name == predicate) else {
        let names: Vec<&str> = PREDICATES.iter().map(|(n, _)| *n).collect();
        return Outcome::input_error(format!("unknown predicate {predicate:?} (expected one of {})", names.join(", ")));
    };
    if terms.len() != arity {
        return Outcome::input_error(format!("{predicate} takes {arity} term(s), got {}", terms.len()));
    }
    let p = match load_presentation(presentation) {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(e),
    };
    match dispatch!(&p, q => element_value(q, predicate, terms)) {
        Err(e) => Outcome::input_error(e),
        Ok((value, text)) => Outcome {
            code: 0,
            output: match opts.format {
                Format::Text => format!("{text}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({"version": VERSION, "predicate": predicate, "terms": terms, "result": value})
                ),
            },
        },
    }
}
