use crate::combinat::{multiset_from_comp, BoundedMultiset, Content};
use crate::error::{domain, Result};

use super::{descent_set, CochargeTableau, Cell, SemiStandardTableau, StandardTableau, Tableau};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Standardization {
    pub standard: StandardTableau,
    pub multiset: BoundedMultiset,
}

/// The multi-set whose composition lists the multiplicities of `0..=max`.
pub(crate) fn canonical_multiset(content: &Content) -> BoundedMultiset {
    multiset_from_comp(&content.to_composition())
}

pub fn destandardize(s: &StandardTableau, j: &BoundedMultiset) -> Result<SemiStandardTableau> {
    if j.bound() != s.size() {
        return domain(format!("multi-set bound {} differs from tableau size {}", j.bound(), s.size()));
    }
    let d = descent_set(s);
    if !j.contains_set(&d) {
        return domain(format!("descent set {d:?} of {s} is not contained in {j}"));
    }
    let e = j.elements();
    Ok(SemiStandardTableau::new_unchecked(
        s.map_entries(|p| e.partition_point(|&x| x < p)),
    ))
}

pub fn standardize(m: &SemiStandardTableau) -> Standardization {
    let mut cells: Vec<Cell> = m.cells().collect();
    cells.sort_by_key(|&c| (m.entry(c), c.col));
    let mut rows: Vec<Vec<usize>> = m.rows().iter().map(|r| vec![0; r.len()]).collect();
    for (i, c) in cells.iter().enumerate() {
        rows[c.row][c.col] = i + 1;
    }
    Standardization {
        standard: StandardTableau::new_unchecked(Tableau::new(rows).unwrap()),
        multiset: canonical_multiset(&m.content()),
    }
}

/// `{n - i : i ∈ J, i < n}` for the canonical `J` of `M`.
pub fn dsp_c(m: &SemiStandardTableau) -> BoundedMultiset {
    let n = m.size();
    let j = canonical_multiset(&m.content());
    let e = j.elements().iter().filter(|&&i| i < n).map(|&i| n - i).collect();
    BoundedMultiset::new(e, n).unwrap()
}

pub fn is_cocharge(m: &SemiStandardTableau) -> bool {
    let st = standardize(m);
    st.multiset.is_set() && st.multiset.to_set() == descent_set(&st.standard)
}

pub fn leftmost_box_criterion(m: &SemiStandardTableau) -> bool {
    let max = m.entries().max().unwrap_or(0);
    (1..=max).all(|h| {
        let Some(v) = m.cells().filter(|&c| m.entry(c) == h).min_by_key(|c| c.col) else {
            return true;
        };
        m.cells().any(|c| c.row < v.row && m.entry(c) == h - 1)
    })
}

pub fn ct_inverse(c: &SemiStandardTableau) -> Result<StandardTableau> {
    if !is_cocharge(c) {
        return domain(format!("{c} is not a cocharge tableau"));
    }
    Ok(standardize(c).standard)
}

impl CochargeTableau {
    pub fn standard(&self) -> StandardTableau {
        standardize(self).standard
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{multisets, partitions};
    use crate::tableaux::{enumerate_ssyt, enumerate_syt};

    fn ssyt(rows: &[&[usize]]) -> SemiStandardTableau {
        SemiStandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ms(e: &[usize], n: usize) -> BoundedMultiset {
        BoundedMultiset::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn destandardize_examples() {
        let s = syt(&[&[1, 3, 4], &[2]]);
        assert_eq!(destandardize(&s, &ms(&[1, 1, 4], 4)).unwrap(), ssyt(&[&[0, 2, 2], &[2]]));
        assert_eq!(destandardize(&s, &ms(&[0, 0, 1, 1, 3], 4)).unwrap(), ssyt(&[&[2, 4, 5], &[4]]));
        assert_eq!(destandardize(&s, &ms(&[1], 4)).unwrap(), ssyt(&[&[0, 1, 1], &[1]]));
        assert!(destandardize(&s, &ms(&[2], 4)).is_err());
    }

    #[test]
    fn dsp_examples() {
        let m = ssyt(&[&[0, 2, 2], &[2]]);
        assert_eq!(dsp_c(&m), ms(&[3, 3], 4));
        let m = ssyt(&[&[2, 4, 5], &[4]]);
        assert_eq!(dsp_c(&m), ms(&[1, 3, 3, 4, 4], 4));
        assert_eq!(dsp_c(&ssyt(&[&[0, 0, 0]])).len(), 0);
    }

    #[test]
    fn cocharge_examples() {
        assert!(is_cocharge(&ssyt(&[&[0, 1, 1], &[1]])));
        assert!(!is_cocharge(&ssyt(&[&[0, 2, 2], &[2]])));
        assert!(!is_cocharge(&ssyt(&[&[1, 1], &[2]])));
        assert!(ct_inverse(&ssyt(&[&[0, 2, 2], &[2]])).is_err());
        assert_eq!(ct_inverse(&ssyt(&[&[0, 1, 1], &[1]])).unwrap(), syt(&[&[1, 3, 4], &[2]]));
    }

    #[test]
    fn standardization_bijection_exhaustive() {
        for n in 1..=5 {
            for lam in partitions(n) {
                let syts = enumerate_syt(&lam);
                for size in 0..=4 {
                    for e in multisets(size, 0, n) {
                        let j = ms(&e, n);
                        let mut images = Vec::new();
                        for s in &syts {
                            if let Ok(m) = destandardize(s, &j) {
                                assert_eq!(
                                    m.content(),
                                    crate::combinat::content_of_comp(&j.to_composition())
                                );
                                let back = standardize(&m);
                                assert_eq!(&back.standard, s);
                                assert_eq!(destandardize(&back.standard, &back.multiset).unwrap(), m);
                                images.push(m);
                            }
                        }
                        let mut sorted = images.clone();
                        sorted.sort();
                        sorted.dedup();
                        assert_eq!(sorted.len(), images.len());
                    }
                }
            }
        }
    }

    #[test]
    fn cocharge_criteria_agree() {
        for n in 1..=5 {
            for lam in partitions(n) {
                for d in 0..=8 {
                    for m in enumerate_ssyt(&lam, d) {
                        assert_eq!(is_cocharge(&m), leftmost_box_criterion(&m), "{m}");
                    }
                }
                for s in enumerate_syt(&lam) {
                    let c = CochargeTableau::of(&s);
                    assert!(is_cocharge(&c));
                    assert_eq!(ct_inverse(&c).unwrap(), s);
                    let d: std::collections::BTreeSet<usize> = crate::tableaux::dsi_c(&s);
                    assert_eq!(dsp_c(&c).to_set(), d);
                }
            }
        }
    }

    #[test]
    fn dsp_sum_and_count_laws() {
        for n in 1..=6 {
            for lam in partitions(n) {
                for d in 0..=6 {
                    for m in enumerate_ssyt(&lam, d) {
                        let dsp = dsp_c(&m);
                        assert_eq!(dsp.sum(), m.entry_sum());
                        let k = dsp.len() + 1;
                        let mut padded = vec![0];
                        padded.extend_from_slice(dsp.elements());
                        padded.push(n);
                        for g in 0..=k {
                            let count = m.entries().filter(|&x| x + g >= k).count();
                            assert_eq!(count, padded[g], "{m} g={g}");
                        }
                    }
                }
            }
        }
    }
}
