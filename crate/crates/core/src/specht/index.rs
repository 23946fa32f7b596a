use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::combinat::BoundedMultiset;
use crate::error::{domain, Result};
use crate::poly::{elementary_product, MultiPoly};
use crate::tableaux::{CochargeTableau, Tableau};

use super::specht_polynomial;

/// `{h_r}_{r≥1}`, stored without trailing zeros so that vectors over `n` and `n+1`
/// variables compare equal when they agree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HVector(Vec<usize>);

impl HVector {
    pub fn new(mut v: Vec<usize>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        HVector(v)
    }

    pub fn zero() -> Self {
        HVector(Vec::new())
    }

    /// Counts of each `r ≥ 1` among `rs`; zeros are dropped.
    pub fn from_indices(rs: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Vec::new();
        for r in rs {
            if r == 0 {
                continue;
            }
            if v.len() < r {
                v.resize(r, 0);
            }
            v[r - 1] += 1;
        }
        HVector::new(v)
    }

    pub fn get(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn weighted_sum(&self) -> usize {
        self.0.iter().enumerate().map(|(i, h)| (i + 1) * h).sum()
    }

    /// Largest `r` with `h_r > 0`.
    pub fn top(&self) -> usize {
        self.0.len()
    }

    pub fn plus_unit(&self, r: usize) -> Self {
        if r == 0 {
            return self.clone();
        }
        let mut v = self.0.clone();
        if v.len() < r {
            v.resize(r, 0);
        }
        v[r - 1] += 1;
        HVector(v)
    }

    /// The multi-set of indices, each `r` repeated `h_r` times.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &h) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, h));
        }
        out
    }

    pub fn multiplier(&self, n: usize) -> Result<MultiPoly> {
        elementary_product(&self.0, n)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (i, &h) in self.0.iter().enumerate() {
            match h {
                0 => {}
                1 => parts.push(format!("e{}", i + 1)),
                _ => parts.push(format!("e{}^{}", i + 1, h)),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexCopy {
    Hat,
    Remainder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentedVariant {
    Plain,
    Homogeneous,
}

pub fn r_index(i: usize, multiset: &BoundedMultiset, copy: IndexCopy) -> Result<usize> {
    let n = multiset.bound();
    let hat = multiset.hat_decompose();
    match copy {
        IndexCopy::Hat => {
            if !hat.hat_set.contains(&i) {
                return domain(format!("{i} is not in the hat part of {multiset}"));
            }
            Ok((1..i).filter(|j| !hat.hat_set.contains(j)).count())
        }
        IndexCopy::Remainder => {
            if !hat.remainder.contains(i) {
                return domain(format!("{i} is not in the remainder of {multiset}"));
            }
            let larger = hat.hat_set.iter().filter(|&&j| j > i).count() + usize::from(n > i);
            Ok(n - hat.k_hat + larger)
        }
    }
}

/// `(element, copy, r)` over `I ∖ D`: the hat part ascending, then the remainder descending,
/// which lists the `r` values in non-decreasing order.
pub fn asp_r_sequence(
    dsp: &BTreeSet<usize>,
    multiset: &BoundedMultiset,
) -> Result<Vec<(usize, IndexCopy, usize)>> {
    if !multiset.contains_set(dsp) {
        return domain(format!("{dsp:?} is not contained in {multiset}"));
    }
    let hat = multiset.hat_decompose();
    let mut out = Vec::new();
    for &i in hat.hat_set.iter().filter(|i| !dsp.contains(i)) {
        out.push((i, IndexCopy::Hat, r_index(i, multiset, IndexCopy::Hat)?));
    }
    for &i in hat.remainder.elements().iter().rev() {
        out.push((i, IndexCopy::Remainder, r_index(i, multiset, IndexCopy::Remainder)?));
    }
    Ok(out)
}

/// `(h_C^I, h(C,I))`.
pub fn h_vectors(c: &CochargeTableau, multiset: &BoundedMultiset) -> Result<(HVector, HVector)> {
    if multiset.bound() != c.size() {
        return domain(format!("bound of {multiset} differs from {}", c.size()));
    }
    let seq = asp_r_sequence(&c.dsp_c_set(), multiset)?;
    Ok((
        HVector::from_indices(seq.iter().map(|s| s.2)),
        HVector::from_indices(seq.iter().map(|s| s.0)),
    ))
}

pub fn augmented(
    c: &CochargeTableau,
    t: &Tableau,
    multiset: &BoundedMultiset,
    variant: AugmentedVariant,
) -> Result<MultiPoly> {
    let (plain, hom) = h_vectors(c, multiset)?;
    let h = match variant {
        AugmentedVariant::Plain => plain,
        AugmentedVariant::Homogeneous => hom,
    };
    let f = specht_polynomial(c, t)?;
    Ok(&f * &h.multiplier(c.size())?)
}
