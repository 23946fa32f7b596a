use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{binomial, contents, multisets, partitions, BoundedMultiset};
use crate::error::{domain, Result};
use crate::poly::MultiPoly;
use crate::tableaux::{enumerate_ssyt, enumerate_ssyt_by_content};

use super::{
    adlambda_pairs, all_cocharge, h_set, hvec_to_multiset, kostka, label_keys, lift_labels, multiplicities,
    multiset_to_hvec, op_count, op_count_i, r_ni_hom_labels, r_ni_labels, rank_over_rationals, HVariant,
    RepLabel, SpanBuilder, SpannedRep, SummandJson,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check { name: name.into(), pass: expected == actual, expected, actual }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        Check::new(name, true, pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompReport {
    pub params: Value,
    pub summands: Vec<SummandJson>,
    pub expected_dim: u128,
    pub rank: usize,
    pub multiplicities: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
    pub verdict: String,
    #[serde(skip)]
    pub labels: Vec<RepLabel>,
}

impl DecompReport {
    pub fn new(params: Value, labels: Vec<RepLabel>, rank: usize, expected_dim: u128, mut checks: Vec<Check>) -> Self {
        let dims: usize = labels.iter().map(RepLabel::dimension).sum();
        checks.insert(0, Check::new("rank = sum of summand dimensions", dims, rank));
        checks.insert(1, Check::new("rank = expected dimension", expected_dim, rank));
        let pass = checks.iter().all(|c| c.pass);
        DecompReport {
            params,
            summands: labels.iter().map(RepLabel::to_json).collect(),
            expected_dim,
            rank,
            multiplicities: multiplicities(&labels),
            checks,
            verdict: if pass { "pass" } else { "fail" }.into(),
            labels,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    BySum,
    ByContent,
}

pub fn qxnd_full(n: usize, d: usize, grouping: Grouping) -> Result<DecompReport> {
    if n == 0 {
        return domain("n must be positive");
    }
    let mut builder = SpanBuilder::new();
    let labels: Vec<RepLabel> = partitions(n)
        .iter()
        .flat_map(|lam| enumerate_ssyt(lam, d))
        .map(RepLabel::plain)
        .collect();
    let basis = builder.basis_of(&labels)?;
    let rank = rank_over_rationals(&basis);
    let mut checks = Vec::new();
    if grouping == Grouping::ByContent {
        for mu in contents(n, d) {
            let part: Vec<RepLabel> = labels.iter().filter(|l| l.tableau.content() == mu).cloned().collect();
            let r = rank_over_rationals(&builder.basis_of(&part)?);
            checks.push(Check::new(format!("content {:?} rank = orbit size", mu.values()), mu.orbit_size(), r));
        }
    }
    let params = json!({"n": n, "d": d, "grouping": format!("{grouping:?}")});
    Ok(DecompReport::new(params, labels, rank, binomial(n + d - 1, d), checks))
}

pub fn qxnd_cocharge(n: usize, d: usize) -> Result<DecompReport> {
    if n == 0 {
        return domain("n must be positive");
    }
    let mut labels = Vec::new();
    for lam in partitions(n) {
        for (c, i) in adlambda_pairs(&lam, d) {
            let (_, hom) = crate::specht::h_vectors(&c, &i)?;
            labels.push(RepLabel::augmented(&c, hom).with_multiset(i));
        }
    }
    let basis = SpanBuilder::new().basis_of(&labels)?;
    let rank = rank_over_rationals(&basis);
    let degree_ok = labels.iter().all(|l| l.degree() == d);
    let params = json!({"n": n, "d": d});
    Ok(DecompReport::new(
        params,
        labels,
        rank,
        binomial(n + d - 1, d),
        vec![Check::flag("every summand has degree d", degree_ok)],
    ))
}

pub fn verify_direct_sum(parts: &[SpannedRep], expected_dim: u128) -> DecompReport {
    let basis: Vec<MultiPoly> = parts.iter().flat_map(|p| p.basis.iter().cloned()).collect();
    let rank = rank_over_rationals(&basis);
    let labels = parts.iter().map(|p| p.label.clone()).collect();
    DecompReport::new(json!({"parts": parts.len()}), labels, rank, expected_dim, Vec::new())
}

pub fn verify_rnks_dim(n: usize, k: usize, s: usize) -> Result<DecompReport> {
    let labels = lift_labels(n, k, s)?;
    let basis = SpanBuilder::new().basis_of(&labels)?;
    let rank = rank_over_rationals(&basis);
    let params = json!({"n": n, "k": k, "s": s});
    Ok(DecompReport::new(params, labels, rank, op_count(n, k, s)?, Vec::new()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub rank_left: usize,
    pub rank_right: usize,
    pub rank_union: usize,
}

impl SpanCheck {
    pub fn equal(&self) -> bool {
        self.rank_left == self.rank_right && self.rank_right == self.rank_union
    }
}

pub fn span_check(left: &[MultiPoly], right: &[MultiPoly]) -> SpanCheck {
    let mut all = left.to_vec();
    all.extend_from_slice(right);
    SpanCheck {
        rank_left: rank_over_rationals(left),
        rank_right: rank_over_rationals(right),
        rank_union: rank_over_rationals(&all),
    }
}

/// `lift(n,k,s) = e_{n-s}·lift(n,k-1,s) ⊕ lift(n,k,s+1)`.
pub fn verify_splexseq(n: usize, k: usize, s: usize) -> Result<DecompReport> {
    if s >= k || s > n {
        return domain(format!("need s < k and s <= n, got n={n} k={k} s={s}"));
    }
    let mut builder = SpanBuilder::new();
    let whole = lift_labels(n, k, s)?;
    let lower = lift_labels(n, k - 1, s)?;
    let upper = if s < n { lift_labels(n, k, s + 1)? } else { Vec::new() };
    let e = builder.elementary(n - s, n)?;
    let image: Vec<MultiPoly> = builder.basis_of(&lower)?.iter().map(|f| f * &e).collect();
    let upper_basis = builder.basis_of(&upper)?;
    let whole_basis = builder.basis_of(&whole)?;
    let r_image = rank_over_rationals(&image);
    let r_upper = rank_over_rationals(&upper_basis);
    let mut sum = image.clone();
    sum.extend(upper_basis.iter().cloned());
    let sc = span_check(&sum, &whole_basis);
    let shifted: Vec<RepLabel> = lower
        .iter()
        .map(|l| RepLabel { hvec: Some(l.h().plus_unit(n - s)), ..l.clone() })
        .chain(upper.iter().cloned())
        .collect();
    let checks = vec![
        Check::new("rank(image) + rank(upper) = rank(sum)", r_image + r_upper, sc.rank_left),
        Check::flag("span(sum) = span(whole)", sc.equal()),
        Check::flag("summand labels agree", label_keys(&shifted) == label_keys(&whole)),
    ];
    let params = json!({"n": n, "k": k, "s": s});
    Ok(DecompReport::new(params, whole, sc.rank_right, op_count(n, k, s)?, checks))
}

/// Per-shape counts from tableau enumeration, admissible pairs and Kostka sums, compared without ranks.
pub fn multiplicity_checks(n: usize, d: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for lam in partitions(n) {
        let listed: usize = contents(n, d).iter().map(|mu| enumerate_ssyt_by_content(&lam, mu).len()).sum();
        let by_sum = enumerate_ssyt(&lam, d).len();
        let pairs = adlambda_pairs(&lam, d).len();
        let by_kostka: u128 = contents(n, d).iter().map(|mu| kostka(&lam, &mu.to_composition())).sum();
        out.push(Check::new(format!("{lam}: SSYT count = pair count"), by_sum, pairs));
        out.push(Check::new(format!("{lam}: SSYT count = Kostka sum"), by_sum, by_kostka));
        out.push(Check::new(format!("{lam}: SSYT count = content-wise count"), by_sum, listed));
    }
    out
}

pub fn verify_multci(n: usize, d: usize) -> Result<DecompReport> {
    let mut report = qxnd_cocharge(n, d)?;
    report.checks.extend(multiplicity_checks(n, d));
    if !report.checks.iter().all(|c| c.pass) {
        report.verdict = "fail".into();
    }
    Ok(report)
}

/// `R_{n,I}` (or `R^hom_{n,I}`) has dimension the number of ordered set partitions of type `comp_n(I)`.
pub fn verify_rni(i: &BoundedMultiset, homogeneous: bool) -> Result<DecompReport> {
    let labels = if homogeneous { r_ni_hom_labels(i)? } else { r_ni_labels(i)? };
    let basis = SpanBuilder::new().basis_of(&labels)?;
    let rank = rank_over_rationals(&basis);
    let mut checks = Vec::new();
    if homogeneous {
        let degree = i.sum();
        checks.push(Check::flag("every summand has degree Σ(I)", labels.iter().all(|l| l.degree() == degree)));
    }
    let params = json!({"n": i.bound(), "I": i.elements(), "homogeneous": homogeneous});
    Ok(DecompReport::new(params, labels, rank, op_count_i(i), checks))
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub params: Value,
    pub pairs: usize,
    pub checks: Vec<Check>,
    pub verdict: String,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// Multi-sets of size `k-1` containing `Dsp^c(C)` against `H_C^{k,0}`, in both directions and both variants.
pub fn verify_bijvecs(n: usize, k: usize) -> Result<BijectionReport> {
    if n == 0 || k == 0 {
        return domain("n and k must be positive");
    }
    let mut checks = Vec::new();
    let mut pairs = 0;
    let all: Vec<BoundedMultiset> =
        multisets(k - 1, 0, n).into_iter().map(|e| BoundedMultiset::new(e, n)).collect::<Result<_>>()?;
    for c in all_cocharge(n) {
        let dsp = c.dsp_c_set();
        let mut target = h_set(&c, k, 0, n)?;
        target.sort();
        let mut plain = Vec::new();
        let mut hom = Vec::new();
        let mut back = true;
        for i in all.iter().filter(|i| i.contains_set(&dsp)) {
            let (p, h) = multiset_to_hvec(&c, i)?;
            back &= hvec_to_multiset(&c, &p, k, HVariant::Plain)? == *i;
            back &= hvec_to_multiset(&c, &h, k, HVariant::Homogeneous)? == *i;
            plain.push(p);
            hom.push(h);
        }
        pairs += plain.len();
        plain.sort();
        hom.sort();
        let mut forth = true;
        for h in &target {
            for variant in [HVariant::Plain, HVariant::Homogeneous] {
                let i = hvec_to_multiset(&c, h, k, variant)?;
                let (p, hh) = multiset_to_hvec(&c, &i)?;
                forth &= i.len() + 1 == k && i.contains_set(&dsp);
                forth &= *h == if variant == HVariant::Plain { p } else { hh };
            }
        }
        checks.push(Check::flag(format!("{c}: multi-set to vector to multi-set"), back));
        checks.push(Check::flag(format!("{c}: vector to multi-set to vector"), forth));
        checks.push(Check::flag(format!("{c}: plain image is H^{{k,0}}"), plain == target));
        checks.push(Check::flag(format!("{c}: homogeneous image is H^{{k,0}}"), hom == target));
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(BijectionReport {
        params: json!({"n": n, "k": k}),
        pairs,
        checks,
        verdict: if pass { "pass" } else { "fail" }.into(),
    })
}
