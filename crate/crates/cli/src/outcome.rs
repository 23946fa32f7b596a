use serde_json::{json, Value};

use specht_core::golden::GoldenCase;
use specht_core::reps::{BijectionReport, Check};
use specht_core::reps::DecompReport;
use specht_core::stability::StabilityReport;

pub struct Outcome {
    pub title: String,
    pub pass: bool,
    pub json: Value,
    pub text: String,
}

fn params_line(params: &Value) -> String {
    match params.as_object() {
        Some(map) => map.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
        None => params.to_string(),
    }
}

fn failure_lines(fails: &[&Check]) -> String {
    fails.iter().map(|c| format!("\n  FAILED {}: expected {}, got {}", c.name, c.expected, c.actual)).collect()
}

impl Outcome {
    pub fn decomp(kind: &str, r: &DecompReport, list_summands: bool) -> Outcome {
        let mut text = format!("rank {} (expected {}), {} summands", r.rank, r.expected_dim, r.labels.len());
        if list_summands {
            for (label, mult) in &r.multiplicities {
                text.push_str(&format!("\n  {mult} x {label}"));
            }
        }
        text.push_str(&failure_lines(&r.failures()));
        Outcome {
            title: format!("{kind} {}", params_line(&r.params)),
            pass: r.passed(),
            json: serde_json::to_value(r).expect("report serializes"),
            text,
        }
    }

    pub fn stability(r: &StabilityReport) -> Outcome {
        let mut text = format!("rank {}, {} summands, {} checks", r.rank, r.labels.len(), r.checks.len());
        text.push_str(&failure_lines(&r.failures()));
        Outcome {
            title: format!("{} {} -> {}", r.operator, r.source, r.target),
            pass: r.passed(),
            json: serde_json::to_value(r).expect("report serializes"),
            text,
        }
    }

    pub fn bijection(r: &BijectionReport) -> Outcome {
        let mut text = format!("{} pairs, {} checks", r.pairs, r.checks.len());
        text.push_str(&failure_lines(&r.failures()));
        Outcome {
            title: format!("bijvecs {}", params_line(&r.params)),
            pass: r.passed(),
            json: serde_json::to_value(r).expect("report serializes"),
            text,
        }
    }

    pub fn golden(g: &GoldenCase) -> Outcome {
        let mut text = format!("{} checks", g.checks.len());
        if let Some(e) = &g.error {
            text.push_str(&format!("\n  error: {e}"));
        }
        let fails: Vec<&Check> = g.checks.iter().filter(|c| !c.pass).collect();
        text.push_str(&failure_lines(&fails));
        Outcome { title: g.name.clone(), pass: g.pass, json: json!(g), text }
    }
}

pub fn render_text(outcomes: &[Outcome], pass: bool) -> String {
    let mut out = String::new();
    for o in outcomes {
        let tag = if o.pass { "ok" } else { "FAIL" };
        out.push_str(&format!("[{tag}] {}\n", o.title));
        for line in o.text.lines() {
            out.push_str(&format!("    {line}\n"));
        }
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    out.push_str(&format!(
        "verdict: {} ({} of {} passed)\n",
        if pass { "pass" } else { "fail" },
        outcomes.len() - failed,
        outcomes.len()
    ));
    out
}
