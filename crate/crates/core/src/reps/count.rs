use crate::combinat::{multiset_from_comp, multisets, multisets_with_sum, multinomial, BoundedMultiset, Partition, WeakComposition};
use crate::error::{domain, Result};
use crate::tableaux::{descent_set, enumerate_cct, enumerate_syt, CochargeTableau};

/// `0 = i_0, i_1, .., i_{k-1}, i_k = n` strictly increasing through index `s`.
pub fn is_admissible(i: &BoundedMultiset, s: usize) -> bool {
    let k = i.len() + 1;
    if s > k {
        return false;
    }
    let mut padded = Vec::with_capacity(k + 1);
    padded.push(0);
    padded.extend_from_slice(i.elements());
    padded.push(i.bound());
    (0..s).all(|h| padded[h] < padded[h + 1])
}

pub fn op_count_i(i: &BoundedMultiset) -> u128 {
    multinomial(i.to_composition().entries())
}

pub fn op_count(n: usize, k: usize, s: usize) -> Result<u128> {
    if s > k {
        return domain(format!("s={s} exceeds k={k}"));
    }
    if k == 0 || s > n {
        return Ok(0);
    }
    let mut total = 0;
    for e in multisets(k - 1, 0, n) {
        let i = BoundedMultiset::new(e, n)?;
        if is_admissible(&i, s) {
            total += op_count_i(&i);
        }
    }
    Ok(total)
}

pub fn kostka(shape: &Partition, alpha: &WeakComposition) -> u128 {
    if alpha.size() != shape.size() {
        return 0;
    }
    let j = multiset_from_comp(alpha);
    enumerate_syt(shape)
        .iter()
        .filter(|s| j.contains_set(&descent_set(s)))
        .count() as u128
}

pub fn adlambda_pairs(shape: &Partition, d: usize) -> Vec<(CochargeTableau, BoundedMultiset)> {
    let n = shape.size();
    let candidates: Vec<BoundedMultiset> = multisets_with_sum(d, 1, n)
        .into_iter()
        .map(|e| BoundedMultiset::new(e, n).unwrap())
        .collect();
    let mut out = Vec::new();
    for c in enumerate_cct(shape) {
        let dsp = c.dsp_c_set();
        for i in &candidates {
            if i.contains_set(&dsp) {
                out.push((c.clone(), i.clone()));
            }
        }
    }
    out
}
