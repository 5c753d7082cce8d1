//! The four commands, each producing a JSON report and an exit code.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context};
use dtring_core::classify::{classify, decompose, DecompositionKind};
use dtring_core::theorems::{
    build_corpus, lookup, verify, verify_all, ComputeSets, Counts, SetsProvider, TheoremReport,
    TheoremVerdict,
};
use dtring_core::{Analysis, ElementSet, RingExpr, RingTable};
use serde_json::{json, Map, Value};

use crate::cache::SetsCache;
use crate::parse::{parse_corpus_spec, parse_expr};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone)]
pub struct Options {
    /// Overrides any cap given in a corpus file.
    pub cap: Option<usize>,
    pub cache: Option<PathBuf>,
}

impl Options {
    fn provider(&self) -> anyhow::Result<Arc<dyn SetsProvider>> {
        Ok(match &self.cache {
            Some(dir) => Arc::new(SetsCache::open(dir)?),
            None => Arc::new(ComputeSets),
        })
    }

    fn cap(&self) -> usize {
        self.cap.unwrap_or(dtring_core::DEFAULT_SIZE_CAP)
    }
}

/// A finished command. `body` is deterministic for fixed inputs; timings
/// are kept apart so that bodies can be compared byte for byte.
#[derive(Debug, Clone)]
pub struct Report {
    pub body: Value,
    pub timing: Value,
    pub exit_code: i32,
    /// Output path requested by a corpus file.
    pub output_path: Option<String>,
    /// Plain-text rendering for `--format table`.
    pub table: String,
}

impl Report {
    /// The body alone, pretty-printed with sorted keys.
    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("JSON values serialize")
    }

    /// Body plus the `timing` field.
    pub fn to_json(&self) -> String {
        let mut full = self.body.clone();
        full.as_object_mut()
            .expect("report body is an object")
            .insert("timing".into(), self.timing.clone());
        serde_json::to_string_pretty(&full).expect("JSON values serialize")
    }
}

fn envelope(command: &str, inputs: Value, results: Vec<Value>, counts: Counts) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "summary": counts,
    })
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn names(r: &RingTable, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| r.name(x).to_string()).collect()
}

fn build_single(expr: &str, opts: &Options) -> anyhow::Result<(RingExpr, Analysis)> {
    let e = parse_expr(expr).with_context(|| format!("parsing `{expr}`"))?;
    e.check_static_cap(opts.cap())?;
    let ring = e.build(opts.cap())?;
    let sets = opts.provider()?.structural_sets(&ring)?;
    Ok((e, Analysis::from_parts(ring, sets)))
}

fn single_inputs(e: &RingExpr, opts: &Options) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("expr".into(), json!(e.to_string()));
    m.insert("cap".into(), json!(opts.cap()));
    m
}

const SET_NAMES: [&str; 6] = ["units", "idempotents", "tripotents", "nilpotents", "jacobson", "delta"];

pub fn cmd_sets(expr: &str, opts: &Options) -> anyhow::Result<Report> {
    let start = Instant::now();
    let (e, a) = build_single(expr, opts)?;
    let r = &a.ring;
    let s = &a.sets;
    let all: [&ElementSet; 6] = [&s.units, &s.idempotents, &s.tripotents, &s.nilpotents, &s.jacobson, &s.delta];
    let mut result = Map::new();
    result.insert("label".into(), json!(r.label()));
    result.insert("order".into(), json!(r.order()));
    let mut table = format!("{} (order {})\n", r.label(), r.order());
    for (name, set) in SET_NAMES.iter().zip(all) {
        result.insert((*name).into(), json!(set.to_vec()));
        result.insert(format!("{name}_names"), json!(names(r, set.iter())));
        table.push_str(&format!("  {name:<12} {{{}}}\n", names(r, set.iter()).join(", ")));
    }
    result.insert("nilpotency_index".into(), json!(s.nilpotency_index));
    let body = envelope(
        "sets",
        Value::Object(single_inputs(&e, opts)),
        vec![Value::Object(result)],
        Counts { pass: 1, ..Counts::default() },
    );
    Ok(Report {
        body,
        timing: json!({ "total_ms": ms(start.elapsed()) }),
        exit_code: EXIT_OK,
        output_path: None,
        table,
    })
}

pub fn cmd_classify(expr: &str, opts: &Options) -> anyhow::Result<Report> {
    let start = Instant::now();
    let (e, a) = build_single(expr, opts)?;
    let r = &a.ring;
    let v = classify(&a)?;
    let mut result = serde_json::to_value(&v)?;
    let obj = result.as_object_mut().expect("struct serializes to an object");
    obj.insert("order".into(), json!(r.order()));
    obj.insert("witness_name".into(), json!(v.witness.map(|w| r.name(w))));
    let witness_names: Map<String, Value> = v
        .witnesses
        .iter()
        .map(|(k, &w)| (k.clone(), json!(r.name(w))))
        .collect();
    obj.insert("witness_names".into(), Value::Object(witness_names));

    let flags = [
        ("dt", v.dt),
        ("semi_tripotent", v.semi_tripotent),
        ("clean", v.clean),
        ("uniquely_clean", v.uniquely_clean),
        ("delta_u", v.delta_u),
        ("di", v.di),
        ("boolean", v.boolean),
        ("yaqub", v.yaqub),
        ("two_uj", v.two_uj),
        ("reduced_mod_j", v.reduced_mod_j),
    ];
    let mut table = format!("{} (order {})\n", r.label(), r.order());
    for (name, holds) in flags {
        let w = v.witnesses.get(name).map(|&w| format!("  witness {}", r.name(w))).unwrap_or_default();
        table.push_str(&format!("  {name:<15} {holds}{w}\n"));
    }
    let body = envelope(
        "classify",
        Value::Object(single_inputs(&e, opts)),
        vec![result],
        Counts { pass: 1, ..Counts::default() },
    );
    Ok(Report {
        body,
        timing: json!({ "total_ms": ms(start.elapsed()) }),
        exit_code: EXIT_OK,
        output_path: None,
        table,
    })
}

pub fn cmd_decompose(expr: &str, element: usize, kind: &str, opts: &Options) -> anyhow::Result<Report> {
    let start = Instant::now();
    let kind: DecompositionKind = kind.parse()?;
    let (e, a) = build_single(expr, opts)?;
    let r = &a.ring;
    let d = decompose(&a, element, kind)?;
    let mut inputs = single_inputs(&e, opts);
    inputs.insert("element".into(), json!(element));
    inputs.insert("kind".into(), json!(kind.as_str()));
    let (result, counts, exit_code, table) = match &d {
        Some(d) => (
            json!({
                "found": true,
                "kind": kind.as_str(),
                "target": d.target,
                "target_name": r.name(d.target),
                "parts": d.parts,
                "part_names": names(r, d.parts.iter().copied()),
                "verified": d.verify(r),
            }),
            Counts { pass: 1, ..Counts::default() },
            EXIT_OK,
            format!(
                "{} = {} in {} ({kind})\n",
                r.name(element),
                names(r, d.parts.iter().copied()).join(" | "),
                r.label()
            ),
        ),
        None => (
            json!({
                "found": false,
                "kind": kind.as_str(),
                "target": element,
                "target_name": r.name(element),
                "parts": null,
                "part_names": null,
                "verified": false,
            }),
            Counts { fail: 1, ..Counts::default() },
            EXIT_FAIL,
            format!("{} has no {kind} decomposition in {}\n", r.name(element), r.label()),
        ),
    };
    Ok(Report {
        body: envelope("decompose", Value::Object(inputs), vec![result], counts),
        timing: json!({ "total_ms": ms(start.elapsed()) }),
        exit_code,
        output_path: None,
        table,
    })
}

fn verdict_str(v: TheoremVerdict) -> &'static str {
    match v {
        TheoremVerdict::Pass => "pass",
        TheoremVerdict::Fail => "FAIL",
        TheoremVerdict::HypothesisNotMet => "hypothesis-not-met",
        TheoremVerdict::SkippedSize => "skipped-size",
    }
}

/// `theorem` is a registry id or `all`; `corpus_text` is a corpus file's
/// contents.
pub fn cmd_verify(theorem: &str, corpus_text: &str, opts: &Options) -> anyhow::Result<Report> {
    let start = Instant::now();
    if theorem != "all" {
        lookup(theorem)?;
    }
    let spec = parse_corpus_spec(corpus_text).context("parsing corpus")?;
    let cap = opts.cap.or(spec.size_cap).unwrap_or(dtring_core::DEFAULT_SIZE_CAP);
    if cap == 0 {
        bail!("size cap must be positive");
    }
    for (entry, err) in spec.oversized(cap) {
        tracing::warn!("corpus line {}: {} will be skipped: {err}", entry.line, entry.expr);
    }
    let exprs = spec.exprs();
    let corpus = build_corpus(&exprs, cap, opts.provider()?)?;
    let reports: Vec<TheoremReport> = if theorem == "all" {
        verify_all(&corpus)?.reports
    } else {
        verify(theorem, &corpus)?
    };
    let counts = Counts::tally(&reports);
    let results = reports
        .iter()
        .map(serde_json::to_value)
        .collect::<Result<Vec<_>, _>>()?;
    let inputs = json!({
        "theorem": theorem,
        "corpus": exprs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "cap": cap,
    });
    let mut table = String::new();
    for r in &reports {
        table.push_str(&format!(
            "{:<13} {:<28} {:<19} {}\n",
            r.theorem_id,
            r.subject,
            verdict_str(r.verdict),
            r.detail
        ));
        if let Some(w) = &r.witness_names {
            table.push_str(&format!("{:<13} witness: {}\n", "", w.join(", ")));
        }
    }
    table.push_str(&format!(
        "pass {}  fail {}  hypothesis-not-met {}  skipped {}\n",
        counts.pass, counts.fail, counts.hypothesis_not_met, counts.skipped
    ));
    let per_report: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "theorem_id": r.theorem_id, "subject": r.subject, "ms": ms(r.elapsed) }))
        .collect();
    Ok(Report {
        exit_code: if counts.fail > 0 { EXIT_FAIL } else { EXIT_OK },
        body: envelope("verify", inputs, results, counts),
        timing: json!({ "total_ms": ms(start.elapsed()), "reports": per_report }),
        output_path: spec.output_path,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> Options {
        Options { cap: None, cache: None }
    }

    #[test]
    fn sets_report_for_z4() {
        let r = cmd_sets("Z(4)", &opts()).unwrap();
        let res = &r.body["results"][0];
        assert_eq!(res["units"], json!([1, 3]));
        assert_eq!(res["jacobson"], json!([0, 2]));
        assert_eq!(res["delta"], json!([0, 2]));
        assert_eq!(res["tripotents"], json!([0, 1, 3]));
        assert_eq!(res["delta_names"], json!(["0", "2"]));
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn classify_report_for_z5() {
        let r = cmd_classify("Z(5)", &opts()).unwrap();
        assert_eq!(r.body["results"][0]["dt"], json!(false));
        assert_eq!(r.body["results"][0]["witness"], json!(2));
    }

    #[test]
    fn decompose_reports() {
        let r = cmd_decompose("Z(4)", 3, "TripotentDelta", &opts()).unwrap();
        assert_eq!(r.body["results"][0]["parts"], json!([1, 2]));
        assert_eq!(r.exit_code, EXIT_OK);
        let r = cmd_decompose("Z(5)", 2, "tripotent-delta", &opts()).unwrap();
        assert_eq!(r.exit_code, EXIT_FAIL);
        assert!(cmd_decompose("Z(5)", 9, "TripotentDelta", &opts()).is_err());
        assert!(cmd_decompose("Z(5)", 1, "Nope", &opts()).is_err());
    }

    #[test]
    fn verify_rejects_unknown_ids() {
        assert!(cmd_verify("thm-9.9", "Z(2)", &opts()).is_err());
    }
}
