mod index;
mod straighten;

use num_traits::One;

use crate::error::{domain, Error, Result};
use crate::poly::{monomial_from_pair, Monomial, MultiPoly, Rational};
use crate::tableaux::{CochargeTableau, SemiStandardTableau, Tableau};

pub use index::{
    asp_r_sequence, augmented, h_vectors, r_index, AugmentedVariant, HVector, IndexCopy,
};
pub use straighten::{
    column_inversions, straighten, straightening_residual, strictly_below, GarnirMove, Straightening,
};

/// Row and column groups of a tableau with content `1..n`, as maps on variable indices.
#[derive(Debug, Clone)]
pub struct SymmetrizerContext {
    tableau: Tableau,
    row_group: Vec<Vec<usize>>,
    column_group: Vec<(Vec<usize>, i32)>,
}

impl SymmetrizerContext {
    pub fn new(t: &Tableau) -> Result<Self> {
        if !t.is_bijective_filling() {
            return domain(format!("{t} does not have content 1..n"));
        }
        let n = t.size();
        let rows: Vec<Vec<usize>> = t.rows().iter().map(|r| r.iter().map(|x| x - 1).collect()).collect();
        let cols: Vec<Vec<usize>> = (0..t.shape().first())
            .map(|c| t.column(c).iter().map(|x| x - 1).collect())
            .collect();
        let row_group = group_on_blocks(n, &rows);
        let column_group = group_on_blocks(n, &cols)
            .into_iter()
            .map(|p| {
                let s = sign(&p);
                (p, s)
            })
            .collect();
        Ok(SymmetrizerContext { tableau: t.clone(), row_group, column_group })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn row_group(&self) -> &[Vec<usize>] {
        &self.row_group
    }

    pub fn column_group(&self) -> &[(Vec<usize>, i32)] {
        &self.column_group
    }

    pub fn nvars(&self) -> usize {
        self.tableau.size()
    }

    /// `Σ_τ τ y` and the number of `τ` fixing `y`.
    pub fn row_sum(&self, y: &Monomial) -> (MultiPoly, usize) {
        let mut p = MultiPoly::zero(y.nvars());
        let mut fixed = 0;
        for tau in &self.row_group {
            let z = permute_padded(y, tau);
            if &z == y {
                fixed += 1;
            }
            p.add_term(z, Rational::one());
        }
        (p, fixed)
    }

    pub fn signed_column_sum(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(f.nvars());
        for (sigma, s) in &self.column_group {
            for (m, c) in f.terms() {
                let c = if *s < 0 { -c.clone() } else { c.clone() };
                out.add_term(permute_padded(m, sigma), c);
            }
        }
        out
    }

    /// `ε_T y` without normalization.
    pub fn symmetrize(&self, y: &Monomial) -> MultiPoly {
        self.signed_column_sum(&self.row_sum(y).0)
    }
}

/// Permutes the first `sigma.len()` variables and fixes the rest.
fn permute_padded(m: &Monomial, sigma: &[usize]) -> Monomial {
    let mut out = m.0.clone();
    for (i, &s) in sigma.iter().enumerate() {
        out[s] = m.0[i];
    }
    Monomial(out)
}

fn group_on_blocks(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut group = vec![(0..n).collect::<Vec<usize>>()];
    for block in blocks {
        let perms = permutations(block.len());
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for g in &group {
            for p in &perms {
                let mut h = g.clone();
                for (a, &b) in p.iter().enumerate() {
                    h[block[a]] = g[block[b]];
                }
                next.push(h);
            }
        }
        group = next;
    }
    group
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

pub(crate) fn sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut s = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

pub fn row_symmetrized(m: &Tableau, t: &Tableau) -> Result<(MultiPoly, usize)> {
    let ctx = SymmetrizerContext::new(t)?;
    let y = monomial_from_pair(m, t)?;
    let (p, s) = ctx.row_sum(&y);
    Ok((p.scale(&Rational::new(One::one(), s.into())), s))
}

pub fn specht_with(ctx: &SymmetrizerContext, m: &SemiStandardTableau) -> Result<MultiPoly> {
    let y = monomial_from_pair(m, ctx.tableau())?;
    let (p, s) = ctx.row_sum(&y);
    let f = ctx.signed_column_sum(&p).scale(&Rational::new(One::one(), s.into()));
    if !f.has_integer_coefficients() {
        return Err(Error::Inconsistent(format!("F for {m} has non-integer coefficients")));
    }
    Ok(f)
}

pub fn specht_polynomial(m: &SemiStandardTableau, t: &Tableau) -> Result<MultiPoly> {
    specht_with(&SymmetrizerContext::new(t)?, m)
}

pub fn specht_quotient(m: &SemiStandardTableau, t: &Tableau) -> Result<MultiPoly> {
    let f = specht_polynomial(m, t)?;
    let base = specht_polynomial(&CochargeTableau::minimal(t.shape()), t)?;
    if base.is_zero() {
        return Err(Error::Inconsistent("vanishing minimal Specht polynomial".into()));
    }
    f.divide_exact(&base).map_err(|_| Error::Inconsistent(format!("F for {m} not divisible by the minimal one")))
}
