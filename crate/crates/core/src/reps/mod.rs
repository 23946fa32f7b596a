mod count;
mod hvec;
mod rank;
mod report;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::combinat::{partitions, BoundedMultiset, Partition};
use crate::error::{domain, Result};
use crate::poly::{elementary_symmetric, MultiPoly};
use crate::specht::{h_vectors, specht_with, HVector, SymmetrizerContext};
use crate::tableaux::{enumerate_cct, enumerate_syt, CochargeTableau, SemiStandardTableau, StandardTableau};

pub use count::{adlambda_pairs, is_admissible, kostka, op_count, op_count_i};
pub use hvec::{h_set, hvec_to_multiset, multiset_to_hvec, HVariant};
pub use rank::{bareiss_rank, coefficient_matrix, rank_over_rationals, Echelon};
pub use report::{
    multiplicity_checks, qxnd_cocharge, qxnd_full, span_check, verify_bijvecs, verify_direct_sum, verify_multci,
    verify_rni, verify_rnks_dim, verify_splexseq, BijectionReport, Check, DecompReport, Grouping, SpanCheck,
};

/// Names one irreducible summand: `V_M` when `hvec` is `None`, otherwise `V_C^h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepLabel {
    pub tableau: SemiStandardTableau,
    pub hvec: Option<HVector>,
    pub multiset: Option<BoundedMultiset>,
}

impl RepLabel {
    pub fn plain(m: SemiStandardTableau) -> Self {
        RepLabel { tableau: m, hvec: None, multiset: None }
    }

    pub fn augmented(c: &CochargeTableau, h: HVector) -> Self {
        RepLabel { tableau: c.ssyt().clone(), hvec: Some(h), multiset: None }
    }

    pub fn with_multiset(mut self, i: BoundedMultiset) -> Self {
        self.multiset = Some(i);
        self
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    pub fn n(&self) -> usize {
        self.tableau.size()
    }

    pub fn h(&self) -> HVector {
        self.hvec.clone().unwrap_or_default()
    }

    /// The summand identity, ignoring the multi-set annotation.
    pub fn key(&self) -> (SemiStandardTableau, HVector) {
        (self.tableau.clone(), self.h())
    }

    pub fn degree(&self) -> usize {
        self.tableau.entry_sum() + self.h().weighted_sum()
    }

    pub fn dimension(&self) -> usize {
        enumerate_syt(self.shape()).len()
    }

    pub fn to_json(&self) -> SummandJson {
        SummandJson {
            lambda: self.shape().parts().to_vec(),
            tableau: self.tableau.rows().to_vec(),
            hvec: self.hvec.as_ref().map(|h| h.entries().to_vec()),
            multiset: self.multiset.as_ref().map(|i| i.elements().to_vec()),
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.tableau)?;
        if let Some(h) = &self.hvec {
            if !h.is_zero() {
                write!(f, "*{h}")?;
            }
        }
        if let Some(i) = &self.multiset {
            write!(f, " I={i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandJson {
    pub lambda: Vec<usize>,
    pub tableau: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hvec: Option<Vec<usize>>,
    #[serde(rename = "I", skip_serializing_if = "Option::is_none")]
    pub multiset: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct SpannedRep {
    pub label: RepLabel,
    pub basis: Vec<MultiPoly>,
}

/// Builds spans with memoized symmetrizers, Specht polynomials and multipliers.
#[derive(Default)]
pub struct SpanBuilder {
    syt: HashMap<Partition, Vec<StandardTableau>>,
    contexts: HashMap<StandardTableau, SymmetrizerContext>,
    specht: HashMap<(SemiStandardTableau, StandardTableau), MultiPoly>,
    multipliers: HashMap<(HVector, usize), MultiPoly>,
}

impl SpanBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn syt(&mut self, shape: &Partition) -> Vec<StandardTableau> {
        self.syt.entry(shape.clone()).or_insert_with(|| enumerate_syt(shape)).clone()
    }

    pub fn specht(&mut self, m: &SemiStandardTableau, t: &StandardTableau) -> Result<MultiPoly> {
        let key = (m.clone(), t.clone());
        if let Some(p) = self.specht.get(&key) {
            return Ok(p.clone());
        }
        if !self.contexts.contains_key(t) {
            self.contexts.insert(t.clone(), SymmetrizerContext::new(t)?);
        }
        let f = specht_with(&self.contexts[t], m)?;
        self.specht.insert(key, f.clone());
        Ok(f)
    }

    pub fn multiplier(&mut self, h: &HVector, n: usize) -> Result<MultiPoly> {
        let key = (h.clone(), n);
        if let Some(p) = self.multipliers.get(&key) {
            return Ok(p.clone());
        }
        let p = h.multiplier(n)?;
        self.multipliers.insert(key, p.clone());
        Ok(p)
    }

    pub fn elementary(&mut self, r: usize, n: usize) -> Result<MultiPoly> {
        if r == 0 {
            return Ok(MultiPoly::one(n));
        }
        if r > n {
            return elementary_symmetric(r, n);
        }
        self.multiplier(&HVector::zero().plus_unit(r), n)
    }

    pub fn span(&mut self, label: &RepLabel) -> Result<SpannedRep> {
        let n = label.n();
        let mult = match &label.hvec {
            Some(h) if !h.is_zero() => Some(self.multiplier(h, n)?),
            _ => None,
        };
        let mut basis = Vec::new();
        for t in self.syt(label.shape()) {
            let f = self.specht(&label.tableau, &t)?;
            basis.push(match &mult {
                Some(e) => &f * e,
                None => f,
            });
        }
        Ok(SpannedRep { label: label.clone(), basis })
    }

    pub fn spans(&mut self, labels: &[RepLabel]) -> Result<Vec<SpannedRep>> {
        labels.iter().map(|l| self.span(l)).collect()
    }

    pub fn basis_of(&mut self, labels: &[RepLabel]) -> Result<Vec<MultiPoly>> {
        let mut out = Vec::new();
        for l in labels {
            out.extend(self.span(l)?.basis);
        }
        Ok(out)
    }
}

pub fn v_basis(m: &SemiStandardTableau) -> Result<SpannedRep> {
    SpanBuilder::new().span(&RepLabel::plain(m.clone()))
}

pub fn v_basis_h(c: &CochargeTableau, h: &HVector) -> Result<SpannedRep> {
    SpanBuilder::new().span(&RepLabel::augmented(c, h.clone()))
}

/// Cocharge tableaux of all shapes of `n`, in shape then standard-tableau order.
pub fn all_cocharge(n: usize) -> Vec<CochargeTableau> {
    partitions(n).iter().flat_map(enumerate_cct).collect()
}

pub fn lift_labels(n: usize, k: usize, s: usize) -> Result<Vec<RepLabel>> {
    if s > n.min(k) {
        return domain(format!("s={s} exceeds min(n, k) = {}", n.min(k)));
    }
    let mut out = Vec::new();
    for c in all_cocharge(n) {
        for h in h_set(&c, k, s, n)? {
            out.push(RepLabel::augmented(&c, h));
        }
    }
    Ok(out)
}

pub fn r_nks_lift(n: usize, k: usize, s: usize) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&lift_labels(n, k, s)?)
}

fn r_ni_labels_with(i: &BoundedMultiset, hom: bool) -> Result<Vec<RepLabel>> {
    let n = i.bound();
    if n == 0 {
        return domain("bound must be positive");
    }
    let mut out = Vec::new();
    for c in all_cocharge(n) {
        if !i.contains_set(&c.dsp_c_set()) {
            continue;
        }
        let (plain, homv) = h_vectors(&c, i)?;
        let h = if hom { homv } else { plain };
        out.push(RepLabel::augmented(&c, h).with_multiset(i.clone()));
    }
    Ok(out)
}

pub fn r_ni_labels(i: &BoundedMultiset) -> Result<Vec<RepLabel>> {
    r_ni_labels_with(i, false)
}

pub fn r_ni_hom_labels(i: &BoundedMultiset) -> Result<Vec<RepLabel>> {
    r_ni_labels_with(i, true)
}

pub fn r_ni(i: &BoundedMultiset) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&r_ni_labels(i)?)
}

pub fn r_ni_hom(i: &BoundedMultiset) -> Result<Vec<SpannedRep>> {
    SpanBuilder::new().spans(&r_ni_hom_labels(i)?)
}

/// Summand labels of `R^hom_{n,k,s}`: the homogeneous pieces over admissible `I` of size `k-1`.
pub fn hom_nks_labels(n: usize, k: usize, s: usize) -> Result<Vec<RepLabel>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for e in crate::combinat::multisets(k - 1, 0, n) {
        let i = BoundedMultiset::new(e, n)?;
        if is_admissible(&i, s) {
            out.extend(r_ni_hom_labels(&i)?);
        }
    }
    Ok(out)
}

pub fn multiplicities(labels: &[RepLabel]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for l in labels {
        *out.entry(l.shape().to_string()).or_insert(0) += 1;
    }
    out
}

/// Sorted summand identities, for label-level comparisons.
pub fn label_keys(labels: &[RepLabel]) -> Vec<(SemiStandardTableau, HVector)> {
    let mut keys: Vec<_> = labels.iter().map(RepLabel::key).collect();
    keys.sort();
    keys
}
