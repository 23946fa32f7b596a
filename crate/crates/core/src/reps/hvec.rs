use crate::combinat::BoundedMultiset;
use crate::error::{domain, Result};
use crate::specht::{h_vectors, AugmentedVariant, HVector};
use crate::tableaux::CochargeTableau;

pub type HVariant = AugmentedVariant;

/// `H_C^{k,s}`: `h_r = 0` for `r > n - s` and `Σ h_r < k - |Dsp^c(C)|`.
pub fn h_set(c: &CochargeTableau, k: usize, s: usize, n: usize) -> Result<Vec<HVector>> {
    if c.size() != n {
        return domain(format!("{c} does not have {n} boxes"));
    }
    if s > n.min(k) {
        return domain(format!("s={s} exceeds min(n, k) = {}", n.min(k)));
    }
    let dsp = c.dsp_c_set().len();
    if k <= dsp {
        return Ok(Vec::new());
    }
    let budget = k - 1 - dsp;
    let width = n - s;
    let mut out = Vec::new();
    let mut cur = vec![0; width];
    fn go(pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<HVector>) {
        if pos == cur.len() {
            out.push(HVector::new(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[pos] = x;
            go(pos + 1, left - x, cur, out);
        }
        cur[pos] = 0;
    }
    go(0, budget, &mut cur, &mut out);
    Ok(out)
}

pub fn multiset_to_hvec(c: &CochargeTableau, i: &BoundedMultiset) -> Result<(HVector, HVector)> {
    h_vectors(c, i)
}

/// Inverse of [`multiset_to_hvec`] for multi-sets of size `k - 1`.
pub fn hvec_to_multiset(
    c: &CochargeTableau,
    h: &HVector,
    k: usize,
    variant: HVariant,
) -> Result<BoundedMultiset> {
    let n = c.size();
    let dsp = c.dsp_c_set();
    let d = dsp.len() + 1;
    if k < d || h.sum() > k - d || h.top() > n {
        return domain(format!("{h} is outside H^{{{k},0}} for {c}"));
    }
    let h0 = k - d - h.sum();
    let mut seq = vec![0; h0];
    seq.extend(h.indices());
    let mut elements: Vec<usize> = dsp.iter().copied().collect();
    match variant {
        HVariant::Homogeneous => elements.extend(seq),
        HVariant::Plain => {
            let free: Vec<usize> = (1..n).filter(|x| !dsp.contains(x)).collect();
            let j = seq.iter().enumerate().filter(|(t, &a)| a + t < n - d).count();
            let k_hat = d + j;
            let mut hat: Vec<usize> = dsp.iter().copied().collect();
            for (t, &a) in seq[..j].iter().enumerate() {
                let x = free[a + t];
                hat.push(x);
                elements.push(x);
            }
            hat.sort_unstable();
            let mut ladder = vec![0];
            ladder.extend(hat);
            ladder.push(n);
            for &r in &seq[j..] {
                if r + k_hat < n {
                    return domain(format!("{h} does not come from a multi-set"));
                }
                let m = r + k_hat - n;
                elements.push(ladder[k_hat - m]);
            }
        }
    }
    BoundedMultiset::new(elements, n)
}
