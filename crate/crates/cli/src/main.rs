mod jobs;
mod outcome;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use specht_core::combinat::{multisets, partitions, BoundedMultiset, Partition, WeakComposition};
use specht_core::poly::MultiPoly;
use specht_core::reps::{
    adlambda_pairs, kostka, op_count, qxnd_cocharge, qxnd_full, verify_bijvecs, verify_multci, verify_rni,
    verify_rnks_dim, verify_splexseq, Grouping,
};
use specht_core::specht::{augmented, specht_polynomial, specht_quotient, AugmentedVariant};
use specht_core::stability::{
    verify_extvmlim, verify_forstab, verify_homdecom, verify_inc_i, verify_mapsmulti, verify_mapsmulti_plain,
    verify_opers_vm,
};
use specht_core::tableaux::{enumerate_ssyt, enumerate_syt, CochargeTableau, SemiStandardTableau, StandardTableau};
use specht_core::Error;

use jobs::{run_all, Job};
use outcome::Outcome;

#[derive(Parser)]
#[command(name = "specht", version, about = "Generalized higher Specht polynomials and exact decomposition checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_{M,T}, its quotient and, with --i, the augmented polynomials.
    Specht(Params),
    /// Decompose a space into irreducible summands and certify it by rank.
    Decompose {
        what: DecomposeKind,
        #[command(flatten)]
        params: Params,
    },
    /// Combinatorial counts.
    Count {
        what: CountKind,
        #[command(flatten)]
        params: Params,
    },
    /// Run one family of verifications.
    Verify {
        name: VerifyKind,
        #[command(flatten)]
        params: Params,
    },
    /// Run every worked example as a golden check.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Qxnd,
    Rnks,
    #[value(name = "rnI", alias = "rni")]
    RnI,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Ops,
    Kostka,
    Pairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Fmtdecom,
    Multci,
    RnksDim,
    Splexseq,
    Forstab,
    Mapsmulti,
    Homdecom,
    Opersvm,
    Extvmlim,
    Inci,
    Bijvecs,
}

#[derive(Args, Clone, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Semi-standard tableau as JSON rows, e.g. "[[0,2,2],[2]]".
    #[arg(long)]
    m: Option<String>,
    /// Standard tableau as JSON rows, e.g. "[[1,3,4],[2]]".
    #[arg(long)]
    t: Option<String>,
    /// Multi-set as a JSON array, e.g. "[0,3,3]".
    #[arg(long)]
    i: Option<String>,
    /// Element added to the multi-set (verify inci).
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    max_sum: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Homogeneous variant (decompose rnI).
    #[arg(long)]
    hom: bool,
    /// Non-homogeneous variant (verify mapsmulti).
    #[arg(long)]
    plain: bool,
    /// Group the check by content (decompose qxnd, verify opersvm).
    #[arg(long)]
    by_content: bool,
    /// Cocharge labels instead of all semi-standard tableaux (decompose qxnd).
    #[arg(long)]
    cocharge: bool,
}

/// Bad input, reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn core<T>(r: specht_core::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        Error::Domain(m) => Usage(m).into(),
        other => anyhow!(other),
    })
}

fn need(v: Option<usize>, flag: &str) -> anyhow::Result<usize> {
    v.map_or_else(|| usage(format!("--{flag} is required")), Ok)
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &Option<String>, flag: &str) -> anyhow::Result<T> {
    let Some(s) = s else { return usage(format!("--{flag} is required")) };
    serde_json::from_str(s).map_err(|e| Usage(format!("--{flag}: {e}")).into())
}

fn ssyt_arg(p: &Params) -> anyhow::Result<SemiStandardTableau> {
    core(SemiStandardTableau::from_rows(parse_json(&p.m, "m")?))
}

fn syt_arg(p: &Params) -> anyhow::Result<StandardTableau> {
    core(StandardTableau::from_rows(parse_json(&p.t, "t")?))
}

fn multiset_arg(p: &Params, n: usize) -> anyhow::Result<BoundedMultiset> {
    core(BoundedMultiset::new(parse_json(&p.i, "i")?, n))
}

fn partition_arg(p: &Params) -> anyhow::Result<Partition> {
    core(Partition::new(parse_json(&p.lambda, "lambda")?))
}

/// A single value when given, otherwise `lo..=hi`.
fn range(v: Option<usize>, lo: usize, hi: usize) -> Vec<usize> {
    match v {
        Some(x) => vec![x],
        None => (lo..=hi).collect(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let (label, outcomes) = match &cli.command {
        Command::Specht(p) => ("specht", vec![specht(p)?]),
        Command::Decompose { what, params } => ("decompose", vec![decompose(*what, params)?]),
        Command::Count { what, params } => ("count", vec![count(*what, params)?]),
        Command::Verify { name, params } => ("verify", run_all(verify(*name, params)?, jobs::threads())?),
        Command::Selftest => ("selftest", selftest()),
    };
    let pass = outcomes.iter().all(|o| o.pass);
    let text = if cli.json {
        let doc = json!({
            "command": label,
            "reports": outcomes.iter().map(|o| o.json.clone()).collect::<Vec<Value>>(),
            "verdict": if pass { "pass" } else { "fail" },
        });
        serde_json::to_string_pretty(&doc)? + "\n"
    } else {
        outcome::render_text(&outcomes, pass)
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(pass)
}

fn poly_json(f: &MultiPoly) -> Value {
    json!({"factored": f.factored(), "terms": f.to_json()})
}

fn specht(p: &Params) -> anyhow::Result<Outcome> {
    let m = ssyt_arg(p)?;
    let t = syt_arg(p)?;
    if m.shape() != t.shape() {
        return usage(format!("{m} and {t} have different shapes"));
    }
    let f = core(specht_polynomial(&m, t.tableau()))?;
    let q = core(specht_quotient(&m, t.tableau()))?;
    let mut lines = vec![format!("F = {}", f.factored()), format!("Q = {}", q.factored())];
    let mut doc = json!({"M": m.rows(), "T": t.rows(), "F": poly_json(&f), "Q": poly_json(&q)});
    if p.i.is_some() {
        let c = CochargeTableau::new(m.clone()).map_err(|_| Usage(format!("--i needs a cocharge tableau, {m} is not")))?;
        let i = multiset_arg(p, m.size())?;
        let plain = core(augmented(&c, t.tableau(), &i, AugmentedVariant::Plain))?;
        let hom = core(augmented(&c, t.tableau(), &i, AugmentedVariant::Homogeneous))?;
        lines.push(format!("F^I = {}", plain.factored()));
        lines.push(format!("F^I,hom = {}", hom.factored()));
        doc["I"] = json!(i.elements());
        doc["F_I"] = poly_json(&plain);
        doc["F_I_hom"] = poly_json(&hom);
    }
    Ok(Outcome { title: format!("M={m} T={t}"), pass: true, json: doc, text: lines.join("\n") })
}

fn decompose(what: DecomposeKind, p: &Params) -> anyhow::Result<Outcome> {
    let report = match what {
        DecomposeKind::Qxnd => {
            let (n, d) = (need(p.n, "n")?, need(p.d, "d")?);
            if p.cocharge {
                core(qxnd_cocharge(n, d))?
            } else {
                let g = if p.by_content { Grouping::ByContent } else { Grouping::BySum };
                core(qxnd_full(n, d, g))?
            }
        }
        DecomposeKind::Rnks => core(verify_rnks_dim(need(p.n, "n")?, need(p.k, "k")?, need(p.s, "s")?))?,
        DecomposeKind::RnI => {
            let n = need(p.n, "n")?;
            core(verify_rni(&multiset_arg(p, n)?, p.hom))?
        }
    };
    Ok(Outcome::decomp("decompose", &report, true))
}

fn count(what: CountKind, p: &Params) -> anyhow::Result<Outcome> {
    let (title, value, extra) = match what {
        CountKind::Ops => {
            let (n, k, s) = (need(p.n, "n")?, need(p.k, "k")?, need(p.s, "s")?);
            (format!("ordered set partitions n={n} k={k} s={s}"), core(op_count(n, k, s))?, Value::Null)
        }
        CountKind::Kostka => {
            let lam = partition_arg(p)?;
            let alpha = WeakComposition::new(parse_json(&p.alpha, "alpha")?);
            (format!("K({lam}, {:?})", alpha.entries()), kostka(&lam, &alpha), Value::Null)
        }
        CountKind::Pairs => {
            let lam = partition_arg(p)?;
            let d = need(p.d, "d")?;
            let pairs = adlambda_pairs(&lam, d);
            let list: Vec<Value> =
                pairs.iter().map(|(c, i)| json!({"tableau": c.rows(), "I": i.elements()})).collect();
            (format!("pairs (C, I) for {lam} d={d}"), pairs.len() as u128, Value::Array(list))
        }
    };
    let mut doc = json!({"count": title, "value": value.to_string()});
    if !extra.is_null() {
        doc["pairs"] = extra;
    }
    Ok(Outcome { title, pass: true, json: doc, text: value.to_string() })
}

fn selftest() -> Vec<Outcome> {
    specht_core::golden::selftest().iter().map(Outcome::golden).collect()
}

fn verify(name: VerifyKind, p: &Params) -> anyhow::Result<Vec<Job>> {
    let max_n = p.max_n;
    let max_sum = p.max_sum;
    let mut jobs: Vec<Job> = Vec::new();
    match name {
        VerifyKind::Fmtdecom | VerifyKind::Multci => {
            let multci = matches!(name, VerifyKind::Multci);
            for n in range(p.n, 1, max_n.unwrap_or(4)) {
                for d in range(p.d, 0, max_sum.unwrap_or(4)) {
                    jobs.push(Box::new(move || {
                        let r = if multci { verify_multci(n, d) } else { qxnd_full(n, d, Grouping::ByContent) };
                        Ok(Outcome::decomp(if multci { "multci" } else { "fmtdecom" }, &core(r)?, false))
                    }));
                }
            }
        }
        VerifyKind::RnksDim | VerifyKind::Splexseq => {
            let split = matches!(name, VerifyKind::Splexseq);
            if let (Some(n), Some(k), Some(s)) = (p.n, p.k, p.s) {
                if s > n.min(k) {
                    return usage(format!("s={s} exceeds min(n, k) = {}", n.min(k)));
                }
                if split && s >= k {
                    return usage("splexseq needs s < k");
                }
            }
            for n in range(p.n, 1, max_n.unwrap_or(4)) {
                for k in range(p.k, 1, 4) {
                    let top = if split { n.min(k.saturating_sub(1)) } else { n.min(k) };
                    for s in range(p.s, 0, top) {
                        if s > top {
                            continue;
                        }
                        jobs.push(Box::new(move || {
                            let r = if split { verify_splexseq(n, k, s) } else { verify_rnks_dim(n, k, s) };
                            Ok(Outcome::decomp(if split { "splexseq" } else { "rnks-dim" }, &core(r)?, false))
                        }));
                    }
                }
            }
        }
        VerifyKind::Forstab => {
            let max_sum = max_sum.or(p.d).unwrap_or(3);
            for n in range(p.n, 1, max_n.unwrap_or(3)) {
                jobs.push(Box::new(move || forstab(n, max_sum)));
            }
        }
        VerifyKind::Mapsmulti => {
            let plain = p.plain;
            let targets: Vec<(usize, BoundedMultiset)> = match (&p.i, p.n) {
                (Some(_), Some(n)) => vec![(n, multiset_arg(p, n)?)],
                (Some(_), None) => return usage("--i needs --n"),
                (None, _) => {
                    let mut v = Vec::new();
                    for n in range(p.n, 1, max_n.unwrap_or(3)) {
                        for size in 0..=p.k.unwrap_or(3) {
                            for e in multisets(size, 0, n) {
                                v.push((n, core(BoundedMultiset::new(e, n))?));
                            }
                        }
                    }
                    v
                }
            };
            for (n, i) in targets {
                jobs.push(Box::new(move || {
                    let r = if plain { verify_mapsmulti_plain(n, &i) } else { verify_mapsmulti(n, &i) };
                    Ok(Outcome::stability(&core(r)?))
                }));
            }
        }
        VerifyKind::Homdecom => {
            if let (Some(n), Some(k), Some(s)) = (p.n, p.k, p.s) {
                core(verify_homdecom(n, k, s).map(|_| ()))?;
            }
            for n in range(p.n, 1, max_n.unwrap_or(3)) {
                for k in range(p.k, 0, 3) {
                    for s in range(p.s, 0, (k + 1).min(n + 1)) {
                        if s > (n + 1).min(k) && s != k + 1 {
                            continue;
                        }
                        jobs.push(Box::new(move || Ok(Outcome::stability(&core(verify_homdecom(n, k, s))?))));
                    }
                }
            }
        }
        VerifyKind::Opersvm => {
            let per_content = p.by_content;
            for n in range(p.n, 1, max_n.unwrap_or(3)) {
                for d in range(p.d, 0, max_sum.unwrap_or(5)) {
                    jobs.push(Box::new(move || Ok(Outcome::stability(&core(verify_opers_vm(n, d, None))?))));
                    if per_content {
                        for eta in specht_core::combinat::contents(n + 1, d) {
                            jobs.push(Box::new(move || {
                                Ok(Outcome::stability(&core(verify_opers_vm(n, d, Some(&eta)))?))
                            }));
                        }
                    }
                }
            }
        }
        VerifyKind::Extvmlim => {
            if let (Some(n), Some(d)) = (p.n, p.d) {
                core(verify_extvmlim(n, d).map(|_| ()))?;
            }
            for n in range(p.n, 1, max_n.unwrap_or(4)) {
                for d in range(p.d, 0, max_sum.unwrap_or(3)) {
                    if d < n {
                        jobs.push(Box::new(move || Ok(Outcome::stability(&core(verify_extvmlim(n, d))?))));
                    }
                }
            }
        }
        VerifyKind::Inci => {
            let targets: Vec<(usize, BoundedMultiset)> = match (&p.i, p.n) {
                (Some(_), Some(n)) => vec![(n, multiset_arg(p, n)?)],
                (Some(_), None) => return usage("--i needs --n"),
                (None, _) => {
                    let mut v = Vec::new();
                    for n in range(p.n, 1, max_n.unwrap_or(3)) {
                        for size in 0..=p.k.unwrap_or(2) {
                            for e in multisets(size, 0, n) {
                                v.push((n, core(BoundedMultiset::new(e, n))?));
                            }
                        }
                    }
                    v
                }
            };
            for (n, i) in targets {
                if let Some(l) = p.l {
                    if l > n {
                        return usage(format!("--l must be at most {n}"));
                    }
                }
                for l in range(p.l, 0, n) {
                    let i = i.clone();
                    jobs.push(Box::new(move || Ok(Outcome::stability(&core(verify_inc_i(n, &i, l))?))));
                }
            }
        }
        VerifyKind::Bijvecs => {
            for n in range(p.n, 1, max_n.unwrap_or(5)) {
                for k in range(p.k, 1, 5) {
                    jobs.push(Box::new(move || Ok(Outcome::bijection(&core(verify_bijvecs(n, k))?))));
                }
            }
        }
    }
    if jobs.is_empty() {
        bail!(Usage("no instances in the requested range".into()));
    }
    Ok(jobs)
}

fn forstab(n: usize, max_sum: usize) -> anyhow::Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for lam in partitions(n) {
        let syts = enumerate_syt(&lam);
        for d in 0..=max_sum {
            for m in enumerate_ssyt(&lam, d) {
                for t in &syts {
                    checked += 1;
                    if !core(verify_forstab(&m, t.tableau()))? {
                        failures.push(format!("M={m} T={t}"));
                    }
                }
            }
        }
    }
    let pass = failures.is_empty();
    let doc = json!({
        "operator": "forstab",
        "params": {"n": n, "max_sum": max_sum},
        "pairs": checked,
        "failures": failures,
        "verdict": if pass { "pass" } else { "fail" },
    });
    let mut text = format!("{checked} pairs (M, T)");
    for f in &failures {
        text.push_str(&format!("\n  lifting fails for {f}"));
    }
    Ok(Outcome { title: format!("forstab n={n} max-sum={max_sum}"), pass, json: doc, text })
}
