use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{binomial, contents, partitions, BoundedMultiset, Content};
use crate::error::{domain, Result};
use crate::poly::{monomial_from_pair, MultiPoly};
use crate::reps::{
    hom_nks_labels, label_keys, r_ni_hom_labels, r_ni_labels, rank_over_rationals, Check, RepLabel,
    SpanBuilder, SpannedRep, SummandJson,
};
use crate::specht::{asp_r_sequence, h_vectors, r_index, specht_polynomial, HVector, IndexCopy, SymmetrizerContext};
use crate::tableaux::{
    delta, enumerate_ssyt, enumerate_ssyt_by_content, external_corners, hat_add, hat_iota, iota,
    is_cocharge, plus_one, CochargeTableau, SemiStandardTableau, Tableau,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Ext,
    Le,
    Ind(usize),
}

/// One `V_{M +̂ v}` produced from a source summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub target: RepLabel,
    pub corner: crate::tableaux::Cell,
    pub delta: u8,
}

pub fn images(label: &RepLabel) -> Result<Vec<Image>> {
    let m = &label.tableau;
    let mut out = Vec::new();
    for v in external_corners(m.shape()) {
        let d = delta(m, v)?;
        let target = RepLabel { tableau: hat_add(m, v)?, hvec: label.hvec.clone(), multiset: None };
        out.push(Image { target, corner: v, delta: d });
    }
    Ok(out)
}

pub fn apply(op: Operator, label: &RepLabel) -> Result<Vec<RepLabel>> {
    if let Operator::Ind(t) = op {
        if t > label.n() + 1 {
            return domain(format!("induction index {t} exceeds n+1 = {}", label.n() + 1));
        }
        if !is_cocharge(&label.tableau) {
            return domain(format!("induction needs a cocharge tableau, got {}", label.tableau));
        }
    }
    let mut out = Vec::new();
    for im in images(label)? {
        let keep = match op {
            Operator::Ext => im.delta == 1,
            Operator::Le => im.delta == 0,
            Operator::Ind(_) => true,
        };
        if !keep {
            continue;
        }
        let mut target = im.target;
        if let (Operator::Ind(t), 1) = (op, im.delta) {
            if t > 0 {
                target.hvec = Some(target.h().plus_unit(t));
            }
        }
        out.push(target);
    }
    Ok(out)
}

pub fn apply_all(op: Operator, labels: &[RepLabel]) -> Result<Vec<RepLabel>> {
    let mut out = Vec::new();
    for l in labels {
        out.extend(apply(op, l)?);
    }
    Ok(out)
}

pub fn ext_of(label: &RepLabel) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&apply(Operator::Ext, label)?)
}

pub fn le_of(label: &RepLabel) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&apply(Operator::Le, label)?)
}

pub fn ind_of(t: usize, label: &RepLabel) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&apply(Operator::Ind(t), label)?)
}

/// `F_{ι̂M,ιT}|_{x_{n+1}=0} = F_{M,T}` and `F_{ι̂M,ιT} = ε_{ιT} p_{M,T} / s_{ι̂M,ιT}`.
pub fn verify_forstab(m: &SemiStandardTableau, t: &Tableau) -> Result<bool> {
    if m.shape() != t.shape() {
        return domain(format!("{m} and {t} have different shapes"));
    }
    let big_m = hat_iota(m);
    let big_t = iota(t);
    let lifted = specht_polynomial(&big_m, &big_t)?;
    let restricted = specht_polynomial(m, t)?;
    let ctx = SymmetrizerContext::new(&big_t)?;
    let mut p = monomial_from_pair(m, t)?;
    p.0.push(0);
    let (_, s) = ctx.row_sum(&monomial_from_pair(&big_m, &big_t)?);
    let direct = ctx.symmetrize(&p).scale(&num_rational::BigRational::new(1.into(), s.into()));
    Ok(lifted.substitute_last_zero() == restricted && lifted == direct)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub source: String,
    pub operator: String,
    pub targets: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub operator: String,
    pub source: Value,
    pub target: Value,
    pub summands: Vec<SummandJson>,
    pub rank: usize,
    pub parts: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
    pub correspondence: Vec<Correspondence>,
    pub verdict: String,
    #[serde(skip)]
    pub labels: Vec<RepLabel>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// A named piece of one side of a claimed decomposition.
struct Part {
    name: String,
    labels: Vec<RepLabel>,
    basis: Vec<MultiPoly>,
}

struct Assembly {
    builder: SpanBuilder,
    checks: Vec<Check>,
    correspondence: Vec<Correspondence>,
    parts: BTreeMap<String, usize>,
}

impl Assembly {
    fn new() -> Self {
        Assembly {
            builder: SpanBuilder::new(),
            checks: Vec::new(),
            correspondence: Vec::new(),
            parts: BTreeMap::new(),
        }
    }

    fn part(&mut self, name: &str, labels: Vec<RepLabel>) -> Result<Part> {
        let basis = self.builder.basis_of(&labels)?;
        Ok(Part { name: name.into(), labels, basis })
    }

    /// Images under `op`, recording which source produced which targets.
    fn operated(&mut self, name: &str, op: Operator, sources: &[RepLabel]) -> Result<Part> {
        let mut labels = Vec::new();
        for s in sources {
            let targets = apply(op, s)?;
            self.correspondence.push(Correspondence {
                source: s.to_string(),
                operator: name.into(),
                targets: targets.iter().map(RepLabel::to_string).collect(),
            });
            labels.extend(targets);
        }
        self.part(name, labels)
    }

    /// `e_r · part`, with the product formed explicitly.
    fn multiplied(&mut self, name: &str, r: usize, nvars: usize, sources: &[RepLabel]) -> Result<Part> {
        let e = self.builder.elementary(r, nvars)?;
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        for s in sources {
            let target = RepLabel { hvec: Some(s.h().plus_unit(r)), multiset: None, ..s.clone() };
            self.correspondence.push(Correspondence {
                source: s.to_string(),
                operator: name.into(),
                targets: vec![target.to_string()],
            });
            basis.extend(self.builder.span(s)?.basis.iter().map(|f| f * &e));
            labels.push(target);
        }
        Ok(Part { name: name.into(), labels, basis })
    }

    /// Checks `target = ⊕ parts` on labels, directness and spans.
    fn compare(&mut self, tag: &str, target: &[RepLabel], parts: &[Part]) -> Result<usize> {
        let target_basis = self.builder.basis_of(target)?;
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        let mut separate = 0;
        for p in parts {
            labels.extend(p.labels.iter().cloned());
            basis.extend(p.basis.iter().cloned());
            separate += rank_over_rationals(&p.basis);
            self.parts.insert(format!("{tag}{}", p.name), p.labels.len());
        }
        let joint = rank_over_rationals(&basis);
        let rt = rank_over_rationals(&target_basis);
        let mut union = basis;
        union.extend(target_basis);
        let ru = rank_over_rationals(&union);
        self.checks.push(Check::flag(format!("{tag}summand labels agree"), label_keys(&labels) == label_keys(target)));
        self.checks.push(Check::new(format!("{tag}parts are independent"), separate, joint));
        self.checks.push(Check::new(format!("{tag}rank(target) = rank(parts)"), rt, joint));
        self.checks.push(Check::new(format!("{tag}rank(target) = rank(union)"), rt, ru));
        Ok(rt)
    }

    fn finish(self, operator: &str, source: Value, target: Value, labels: Vec<RepLabel>, rank: usize) -> StabilityReport {
        let pass = self.checks.iter().all(|c| c.pass);
        StabilityReport {
            operator: operator.into(),
            source,
            target,
            summands: labels.iter().map(RepLabel::to_json).collect(),
            rank,
            parts: self.parts,
            checks: self.checks,
            correspondence: self.correspondence,
            verdict: if pass { "pass" } else { "fail" }.into(),
            labels,
        }
    }
}

fn rebound(i: &BoundedMultiset, n: usize) -> Result<BoundedMultiset> {
    i.with_bound(n)
}

pub fn verify_mapsmulti(n: usize, i: &BoundedMultiset) -> Result<StabilityReport> {
    if n == 0 || i.bound() != n {
        return domain(format!("{i} must be a multi-set over [0, {n}] with n >= 1"));
    }
    let mut a = Assembly::new();
    let source = r_ni_hom_labels(i)?;
    let big = rebound(i, n + 1)?;

    let target_i = r_ni_hom_labels(&big.insert(n)?)?;
    let ind = a.operated("ind_n", Operator::Ind(n), &source)?;
    a.compare("(i) ", &target_i, &[ind])?;

    let target_ii = r_ni_hom_labels(&big)?;
    let rank = if !i.contains(n) {
        let e = a.operated("ext", Operator::Ext, &source)?;
        a.compare("(ii) ", &target_ii, &[e])?
    } else {
        let smaller = r_ni_hom_labels(&i.remove_one(n)?)?;
        let ind = a.operated("ind_n", Operator::Ind(n), &smaller)?;
        a.compare("(ii) ind ", &target_ii, &[ind])?;
        let e = a.operated("ext", Operator::Ext, &source)?;
        let l = a.operated("le", Operator::Le, &smaller)?;
        a.compare("(ii) ext+le ", &target_ii, &[e, l])?
    };
    let src = json!({"n": n, "I": i.elements()});
    let tgt = json!({"n": n + 1, "I": i.elements(), "I_plus_n": big.insert(n)?.elements()});
    Ok(a.finish("mapsmulti", src, tgt, target_ii, rank))
}

/// Remainder multipliers `e_r` of `R_{n,I}` moved to `e_{r+1}`.
fn shift_remainders(i: &BoundedMultiset) -> Result<Vec<RepLabel>> {
    let mut out = Vec::new();
    for l in r_ni_labels(i)? {
        let c = CochargeTableau::new(l.tableau.clone())?;
        let rs = asp_r_sequence(&c.dsp_c_set(), i)?
            .into_iter()
            .map(|(_, copy, r)| if copy == IndexCopy::Remainder { r + 1 } else { r });
        out.push(RepLabel { hvec: Some(HVector::from_indices(rs)), ..l });
    }
    Ok(out)
}

/// The non-homogeneous analogue, with remainder multipliers `e_r` moved to `e_{r+1}`.
pub fn verify_mapsmulti_plain(n: usize, i: &BoundedMultiset) -> Result<StabilityReport> {
    if n == 0 || i.bound() != n {
        return domain(format!("{i} must be a multi-set over [0, {n}] with n >= 1"));
    }
    let mut a = Assembly::new();
    let big = rebound(i, n + 1)?;
    let k_hat = i.hat_decompose().k_hat;
    let ind = a.operated("ind", Operator::Ind(n - k_hat), &shift_remainders(i)?)?;
    a.compare("(i) ", &r_ni_labels(&big.insert(n)?)?, &[ind])?;
    let target = r_ni_labels(&big)?;
    let rank = if i.contains(n) {
        let smaller = i.remove_one(n)?;
        let k_hat = smaller.hat_decompose().k_hat;
        let ind = a.operated("ind'", Operator::Ind(n - k_hat), &shift_remainders(&smaller)?)?;
        a.compare("(ii) ", &target, &[ind])?
    } else {
        let ext = a.operated("ext", Operator::Ext, &shift_remainders(i)?)?;
        a.compare("(ii) ", &target, &[ext])?
    };
    Ok(a.finish("mapsmulti-plain", json!({"n": n, "I": i.elements()}), json!({"n": n + 1}), target, rank))
}

/// Three-part decomposition of `R^hom_{n+1,k+1,s}`; `s = k + 1` checks both expressions of the top case.
pub fn verify_homdecom(n: usize, k: usize, s: usize) -> Result<StabilityReport> {
    if n == 0 {
        return domain("n must be positive");
    }
    let mut a = Assembly::new();
    let target = hom_nks_labels(n + 1, k + 1, s)?;
    let rank;
    if s <= (n + 1).min(k) {
        let mut parts = Vec::new();
        if s <= n {
            let src = hom_nks_labels(n, k + 1, s)?;
            parts.push(a.operated("ext", Operator::Ext, &src)?);
        }
        if k >= 1 && s <= n {
            let src = hom_nks_labels(n, k, s)?;
            parts.push(a.operated("le", Operator::Le, &src)?);
        }
        if k >= 1 {
            let src = hom_nks_labels(n + 1, k, s)?;
            parts.push(a.multiplied("e_{n+1}", n + 1, n + 1, &src)?);
        }
        rank = a.compare("", &target, &parts)?;
    } else if s == k + 1 && s <= n + 1 {
        let mut first = vec![a.operated("ext", Operator::Ext, &hom_nks_labels(n, k + 1, k)?)?];
        if k >= 1 {
            first.push(a.operated("le", Operator::Le, &hom_nks_labels(n, k, k)?)?);
        }
        rank = a.compare("ext+le ", &target, &first)?;
        let mut second = Vec::new();
        if k < n {
            second.push(a.operated("ext'", Operator::Ext, &hom_nks_labels(n, k + 1, k + 1)?)?);
        }
        if k >= 1 {
            second.push(a.operated("ind_n", Operator::Ind(n), &hom_nks_labels(n, k, k)?)?);
        }
        let r2 = a.compare("ext+ind ", &target, &second)?;
        a.checks.push(Check::new("both expressions give the same rank", rank, r2));
    } else {
        return domain(format!("need s <= min(n+1, k) or s = k+1 <= n+1, got n={n} k={k} s={s}"));
    }
    let src = json!({"n": n, "k": k, "s": s});
    let tgt = json!({"n": n + 1, "k": k + 1, "s": s});
    Ok(a.finish("homdecom", src, tgt, target, rank))
}

fn all_ssyt(n: usize, d: usize, content: Option<&Content>) -> Vec<RepLabel> {
    partitions(n)
        .iter()
        .flat_map(|lam| match content {
            Some(mu) => enumerate_ssyt_by_content(lam, mu),
            None => enumerate_ssyt(lam, d),
        })
        .map(RepLabel::plain)
        .collect()
}

/// `Q[x_{n+1}]_d = Ext Q[x_n]_d ⊕ LE Q[x_n]_{d-n} ⊕ e_{n+1} Q[x_{n+1}]_{d-n-1}`, optionally on one content.
pub fn verify_opers_vm(n: usize, d: usize, per_content: Option<&Content>) -> Result<StabilityReport> {
    if n == 0 {
        return domain("n must be positive");
    }
    if let Some(eta) = per_content {
        if eta.len() != n + 1 || eta.sum() != d {
            return domain(format!("content {:?} must have {} values summing to {d}", eta.values(), n + 1));
        }
    }
    let mut a = Assembly::new();
    let target = all_ssyt(n + 1, d, per_content);
    let mut parts = Vec::new();
    let (ext_src, le_src, plus_src) = match per_content {
        None => (
            Some(all_ssyt(n, d, None)),
            (d >= n).then(|| all_ssyt(n, d - n, None)),
            (d > n).then(|| all_ssyt(n + 1, d - n - 1, None)),
        ),
        Some(eta) => {
            let zeros = eta.values().iter().filter(|&&x| x == 0).count();
            let rest: Vec<usize> = eta.values()[zeros.min(1)..].to_vec();
            let ext = (zeros >= 1).then(|| all_ssyt(n, d, Some(&Content::new(rest.clone()))));
            let le = (zeros == 1).then(|| all_ssyt(n, 0, Some(&Content::new(rest.iter().map(|x| x - 1).collect()))));
            let plus = (zeros == 0).then(|| all_ssyt(n + 1, 0, Some(&Content::new(eta.values().iter().map(|x| x - 1).collect()))));
            (ext, le, plus)
        }
    };
    if let Some(src) = ext_src {
        parts.push(a.operated("ext", Operator::Ext, &src)?);
    }
    if let Some(src) = le_src {
        parts.push(a.operated("le", Operator::Le, &src)?);
    }
    if let Some(src) = plus_src {
        let e = a.builder.elementary(n + 1, n + 1)?;
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        for k in &src {
            let target = RepLabel::plain(plus_one(&k.tableau));
            a.correspondence.push(Correspondence {
                source: k.to_string(),
                operator: "e_{n+1}".into(),
                targets: vec![target.to_string()],
            });
            basis.extend(a.builder.span(k)?.basis.iter().map(|f| f * &e));
            labels.push(target);
        }
        parts.push(Part { name: "e_{n+1}".into(), labels, basis });
    }
    for p in &parts {
        let ok = p.labels.iter().all(|l| l.degree() == d);
        a.checks.push(Check::flag(format!("{} summands have degree {d}", p.name), ok));
    }
    let rank = a.compare("", &target, &parts)?;
    let expected = match per_content {
        None => binomial(n + d, d),
        Some(eta) => eta.orbit_size(),
    };
    a.checks.push(Check::new("rank = dimension", expected, rank));
    let src = json!({"n": n, "d": d});
    let tgt = json!({"n": n + 1, "d": d, "content": per_content.map(|c| c.values().to_vec())});
    Ok(a.finish("opersvm", src, tgt, target, rank))
}

/// For `n > d` the degree-`d` part in `n+1` variables is the Ext image alone; for `n >= 2d` each Ext is a single `ι̂`.
pub fn verify_extvmlim(n: usize, d: usize) -> Result<StabilityReport> {
    if n <= d {
        return domain(format!("need n > d, got n={n} d={d}"));
    }
    let mut a = Assembly::new();
    let source = all_ssyt(n, d, None);
    let target = all_ssyt(n + 1, d, None);
    let ext = a.operated("ext", Operator::Ext, &source)?;
    let rank = a.compare("", &target, &[ext])?;
    a.checks.push(Check::new("rank = dimension", binomial(n + d, d), rank));
    for eta in contents(n + 1, d) {
        let has_zero = eta.values().first() == Some(&0);
        a.checks.push(Check::flag(format!("content {:?} contains 0", eta.values()), has_zero));
        if !has_zero {
            continue;
        }
        let rest = Content::new(eta.values()[1..].to_vec());
        let src = all_ssyt(n, d, Some(&rest));
        let part = a.part("ext", apply_all(Operator::Ext, &src)?)?;
        let sub = all_ssyt(n + 1, d, Some(&eta));
        a.compare(&format!("content {:?}: ", eta.values()), &sub, &[part])?;
    }
    if n >= 2 * d {
        let single = source.iter().all(|m| {
            apply(Operator::Ext, m).is_ok_and(|t| t == vec![RepLabel::plain(hat_iota(&m.tableau))])
        });
        a.checks.push(Check::flag("every Ext image is the single hat-iota summand", single));
    }
    Ok(a.finish("extvmlim", json!({"n": n, "d": d}), json!({"n": n + 1, "d": d}), target, rank))
}

/// Effect on `R_{n,I}` and `R^hom_{n,I}` of adding one element `ℓ` to `I`.
pub fn verify_inc_i(n: usize, i: &BoundedMultiset, l: usize) -> Result<StabilityReport> {
    if i.bound() != n || l > n {
        return domain(format!("need a multi-set over [0, {n}] and l <= {n}"));
    }
    let mut a = Assembly::new();
    let big = i.insert(l)?;
    let plain = r_ni_labels(i)?;
    let hom = r_ni_hom_labels(i)?;
    let target_plain = r_ni_labels(&big)?;
    let target_hom = r_ni_hom_labels(&big)?;
    let hat = i.hat_decompose().hat_set;
    if l == 0 || l == n || hat.contains(&l) {
        let r = r_index(l, &big, IndexCopy::Remainder)?;
        let p = a.multiplied("e_r", r, n, &plain)?;
        a.compare("(i) plain ", &target_plain, &[p])?;
        let h = a.multiplied("e_l", l, n, &hom)?;
        a.compare("(i) hom ", &target_hom, &[h])?;
    } else {
        let mut fresh = Vec::new();
        let mut fresh_hom = Vec::new();
        for c in crate::reps::all_cocharge(n) {
            let dsp = c.dsp_c_set();
            if dsp.contains(&l) && big.contains_set(&dsp) {
                let (p, h) = h_vectors(&c, &big)?;
                fresh.push(RepLabel::augmented(&c, p));
                fresh_hom.push(RepLabel::augmented(&c, h));
            }
        }
        let old_hom = a.multiplied("e_l", l, n, &hom)?;
        let new_hom = a.part("new", fresh_hom)?;
        a.compare("(ii) hom ", &target_hom, &[old_hom, new_hom])?;

        let r_l = r_index(l, &big, IndexCopy::Hat)?;
        let mut reindexed = Vec::new();
        for src in &plain {
            let c = CochargeTableau::new(src.tableau.clone())?;
            let mut rs: Vec<usize> = asp_r_sequence(&c.dsp_c_set(), i)?
                .into_iter()
                .map(|(elem, _, r)| if elem > l { r - 1 } else { r })
                .collect();
            rs.push(r_l);
            let target = RepLabel { hvec: Some(HVector::from_indices(rs)), multiset: None, ..src.clone() };
            a.correspondence.push(Correspondence {
                source: src.to_string(),
                operator: "reindex".into(),
                targets: vec![target.to_string()],
            });
            reindexed.push(target);
        }
        let old = a.part("reindexed", reindexed)?;
        let new = a.part("new", fresh)?;
        a.compare("(iii) plain ", &target_plain, &[old, new])?;
    }
    let rank = rank_over_rationals(&a.builder.basis_of(&target_plain)?);
    let src = json!({"n": n, "I": i.elements(), "l": l});
    let tgt = json!({"n": n, "I": big.elements()});
    Ok(a.finish("inci", src, tgt, target_plain, rank))
}

#[cfg(test)]
mod tests;
