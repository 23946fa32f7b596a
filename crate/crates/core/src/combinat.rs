use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition {parts:?} is not non-increasing"));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first())
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.row_len(row)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = crate::error::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    entries: Vec<usize>,
}

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Sorted multi-set with every element in `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundedMultiset {
    elements: Vec<usize>,
    bound: usize,
}

impl BoundedMultiset {
    pub fn new(mut elements: Vec<usize>, bound: usize) -> Result<Self> {
        if let Some(&e) = elements.iter().find(|&&e| e > bound) {
            return domain(format!("element {e} outside [0, {bound}]"));
        }
        elements.sort_unstable();
        Ok(BoundedMultiset { elements, bound })
    }

    pub fn empty(bound: usize) -> Self {
        BoundedMultiset { elements: Vec::new(), bound }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.elements.iter().sum()
    }

    pub fn multiplicity(&self, x: usize) -> usize {
        self.elements.iter().filter(|&&e| e == x).count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn with_bound(&self, bound: usize) -> Result<Self> {
        BoundedMultiset::new(self.elements.clone(), bound)
    }

    pub fn insert(&self, x: usize) -> Result<Self> {
        let mut e = self.elements.clone();
        e.push(x);
        BoundedMultiset::new(e, self.bound)
    }

    /// Removes one copy of `x`.
    pub fn remove_one(&self, x: usize) -> Result<Self> {
        let mut e = self.elements.clone();
        match e.iter().position(|&y| y == x) {
            Some(p) => {
                e.remove(p);
                Ok(BoundedMultiset { elements: e, bound: self.bound })
            }
            None => domain(format!("{x} is not in {:?}", self.elements)),
        }
    }

    pub fn union(&self, other: &BoundedMultiset) -> Result<Self> {
        let mut e = self.elements.clone();
        e.extend_from_slice(&other.elements);
        BoundedMultiset::new(e, self.bound.max(other.bound))
    }

    pub fn to_composition(&self) -> WeakComposition {
        let mut entries = Vec::with_capacity(self.elements.len() + 1);
        let mut prev = 0;
        for &j in &self.elements {
            entries.push(j - prev);
            prev = j;
        }
        entries.push(self.bound - prev);
        WeakComposition { entries }
    }

    pub fn hat_decompose(&self) -> HatDecomposition {
        let hat: BTreeSet<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&j| j > 0 && j < self.bound)
            .collect();
        let mut remainder = self.elements.clone();
        for h in &hat {
            let p = remainder.iter().position(|x| x == h).unwrap();
            remainder.remove(p);
        }
        HatDecomposition {
            k_hat: hat.len() + 1,
            hat_set: hat,
            remainder: BoundedMultiset { elements: remainder, bound: self.bound },
        }
    }

    /// `D ⊆ Ĵ`.
    pub fn contains_set(&self, d: &BTreeSet<usize>) -> bool {
        d.iter().all(|&x| x > 0 && x < self.bound && self.contains(x))
    }

    pub fn subtract_set(&self, d: &BTreeSet<usize>) -> Result<Self> {
        if !self.contains_set(d) {
            return domain(format!("{d:?} is not contained in {:?}", self.elements));
        }
        let mut out = self.clone();
        for &x in d {
            out = out.remove_one(x)?;
        }
        Ok(out)
    }

    /// Multi-set difference; `other` must be a sub-multi-set.
    pub fn difference(&self, other: &BoundedMultiset) -> Result<Self> {
        let mut out = self.clone();
        for &x in &other.elements {
            out = out.remove_one(x)?;
        }
        Ok(out)
    }

    pub fn is_set(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_set(&self) -> BTreeSet<usize> {
        self.elements.iter().copied().collect()
    }
}

impl fmt::Display for BoundedMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatDecomposition {
    pub hat_set: BTreeSet<usize>,
    pub k_hat: usize,
    pub remainder: BoundedMultiset,
}

pub fn comp_from_multiset(elements: &[usize], n: usize) -> Result<WeakComposition> {
    Ok(BoundedMultiset::new(elements.to_vec(), n)?.to_composition())
}

pub fn multiset_from_comp(alpha: &WeakComposition) -> BoundedMultiset {
    let mut elements = Vec::with_capacity(alpha.len().saturating_sub(1));
    let mut acc = 0;
    for &a in &alpha.entries[..alpha.len().saturating_sub(1)] {
        acc += a;
        elements.push(acc);
    }
    BoundedMultiset { elements, bound: alpha.size() }
}

/// Multi-set of non-negative entry values, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Content {
    values: Vec<usize>,
}

impl Content {
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        Content { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn max(&self) -> Option<usize> {
        self.values.last().copied()
    }

    /// Multiplicities of `0..=max`, so the last entry is never zero.
    pub fn to_composition(&self) -> WeakComposition {
        let top = self.max().map_or(0, |m| m + 1);
        let mut entries = vec![0; top];
        for &v in &self.values {
            entries[v] += 1;
        }
        WeakComposition { entries }
    }

    pub fn orbit_size(&self) -> u128 {
        multinomial(self.to_composition().entries())
    }
}

pub fn content_of_comp(alpha: &WeakComposition) -> Content {
    let mut values = Vec::with_capacity(alpha.size());
    for (h, &m) in alpha.entries().iter().enumerate() {
        values.extend(std::iter::repeat_n(h, m));
    }
    Content { values }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn multinomial(parts: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut total = 0;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if max_len == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        for mut rest in partitions_bounded(n - first, first, max_len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Contents with `n` values summing to `d`.
pub fn contents(n: usize, d: usize) -> Vec<Content> {
    partitions_bounded(d, d, n)
        .into_iter()
        .map(|mut p| {
            p.resize(n, 0);
            Content::new(p)
        })
        .collect()
}

/// Multi-sets of the given size over `[lo, hi]`, lexicographic.
pub fn multisets(size: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn go(size: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for x in start..=hi {
            cur.push(x);
            go(size, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size == 0 || lo <= hi {
        go(size, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Multi-sets of any size over `[lo, hi]` with element sum `sum`; requires `lo >= 1`.
pub fn multisets_with_sum(sum: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    assert!(lo >= 1);
    fn go(rem: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for x in start..=hi.min(rem) {
            cur.push(x);
            go(rem - x, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(sum, lo, hi, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(e: &[usize], n: usize) -> BoundedMultiset {
        BoundedMultiset::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn composition_examples() {
        assert_eq!(comp_from_multiset(&[1, 1, 4], 4).unwrap().entries(), &[1, 0, 3, 0]);
        assert_eq!(comp_from_multiset(&[0, 0, 1, 1, 3], 4).unwrap().entries(), &[0, 0, 1, 0, 2, 1]);
        assert_eq!(comp_from_multiset(&[], 5).unwrap().entries(), &[5]);
        assert!(comp_from_multiset(&[6], 5).is_err());
        let a = WeakComposition::new(vec![1, 0, 3, 0]);
        assert_eq!(multiset_from_comp(&a), ms(&[1, 1, 4], 4));
        assert_eq!(content_of_comp(&a).values(), &[0, 2, 2, 2]);
        let b = WeakComposition::new(vec![0, 0, 1, 0, 2, 1]);
        assert_eq!(multiset_from_comp(&b), ms(&[0, 0, 1, 1, 3], 4));
        assert_eq!(content_of_comp(&b).values(), &[2, 4, 4, 5]);
        assert_eq!(multiset_from_comp(&WeakComposition::new(vec![3])), ms(&[], 3));
        assert_eq!(content_of_comp(&WeakComposition::new(vec![3])).values(), &[0, 0, 0]);
    }

    #[test]
    fn trailing_zeros_matter() {
        assert_ne!(WeakComposition::new(vec![1, 0, 3]), WeakComposition::new(vec![1, 0, 3, 0]));
    }

    #[test]
    fn hat_examples() {
        let h = ms(&[0, 3, 3], 4).hat_decompose();
        assert_eq!(h.hat_set, BTreeSet::from([3]));
        assert_eq!(h.k_hat, 2);
        assert_eq!(h.remainder, ms(&[0, 3], 4));
        let h = ms(&[2, 3, 5, 5, 6, 7, 7], 8).hat_decompose();
        assert_eq!(h.hat_set, BTreeSet::from([2, 3, 5, 6, 7]));
        assert_eq!(h.k_hat, 6);
        assert_eq!(h.remainder, ms(&[5, 7], 8));
        let h = ms(&[1, 2, 4], 5).hat_decompose();
        assert_eq!((h.k_hat, h.remainder.len()), (4, 0));
    }

    #[test]
    fn containment() {
        let j = ms(&[1, 1, 4], 4);
        assert!(j.contains_set(&BTreeSet::from([1])));
        assert_eq!(j.subtract_set(&BTreeSet::from([1])).unwrap(), ms(&[1, 4], 4));
        let j = ms(&[2, 3, 5, 5, 6, 7, 7], 8);
        assert_eq!(j.subtract_set(&BTreeSet::from([2, 5, 6])).unwrap(), ms(&[3, 5, 7, 7], 8));
        assert!(!ms(&[2], 4).contains_set(&BTreeSet::from([1])));
        assert!(ms(&[2], 4).subtract_set(&BTreeSet::from([1])).is_err());
        // n itself is never in the hat part
        assert!(!ms(&[4], 4).contains_set(&BTreeSet::from([4])));
    }

    #[test]
    fn enumerator_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(7).len(), 15);
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(multisets_with_sum(2, 1, 3), vec![vec![1, 1], vec![2]]);
        assert_eq!(multisets(3, 0, 3).len(), 20);
        assert_eq!(multisets(0, 0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(contents(4, 2).len(), 2);
        assert_eq!(contents(2, 4).len(), 3);
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 0..=8 {
            for size in 0..=6 {
                for e in multisets(size, 0, n) {
                    let j = ms(&e, n);
                    let a = j.to_composition();
                    assert_eq!(a.size(), n);
                    assert_eq!(a.len(), size + 1);
                    assert_eq!(multiset_from_comp(&a), j);
                    let h = j.hat_decompose();
                    assert_eq!(size, h.k_hat - 1 + h.remainder.len());
                    let c = content_of_comp(&a);
                    assert_eq!(c.len(), n);
                }
            }
        }
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(multinomial(&[2, 1, 1]), 12);
        assert_eq!(factorial(5), 120);
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
