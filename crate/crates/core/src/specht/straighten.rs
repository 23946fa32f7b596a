use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::factorial;
use crate::error::{domain, Result};
use crate::poly::{cmp_t, monomial_from_pair, MultiPoly, Rational};
use crate::tableaux::{SemiStandardTableau, Tableau};

use super::SymmetrizerContext;

/// Swap of rows `row` and `row + 1` in columns `column..column + length`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarnirMove {
    pub row: usize,
    pub column: usize,
    pub length: usize,
    pub inversions_before: usize,
    pub inversions_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straightening {
    /// `None` when a column repeats an entry and the coefficient vanishes.
    pub tableau: Option<SemiStandardTableau>,
    pub coefficient: Rational,
    pub moves: Vec<GarnirMove>,
}

pub fn column_inversions(rows: &[Vec<usize>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut total = 0;
    for c in 0..width {
        let col: Vec<usize> = rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect();
        for a in 0..col.len() {
            for b in a + 1..col.len() {
                if col[a] > col[b] {
                    total += 1;
                }
            }
        }
    }
    total
}

fn row_stabilizer(rows: &[Vec<usize>]) -> u128 {
    let mut s = 1;
    for r in rows {
        let mut i = 0;
        while i < r.len() {
            let j = r[i..].iter().take_while(|&&x| x == r[i]).count();
            s *= factorial(j);
            i += j;
        }
    }
    s
}

pub fn straighten(h: &Tableau, t: &Tableau) -> Result<Straightening> {
    if h.shape() != t.shape() {
        return domain(format!("shapes of {h} and {t} differ"));
    }
    if !h.rows_weakly_increase() {
        return domain(format!("rows of {h} are not non-decreasing"));
    }
    let repeated = (0..h.shape().first()).any(|c| {
        let mut col = h.column(c);
        col.sort_unstable();
        col.windows(2).any(|w| w[0] == w[1])
    });
    if repeated {
        return Ok(Straightening { tableau: None, coefficient: Rational::zero(), moves: Vec::new() });
    }
    let mut rows = h.rows().to_vec();
    let mut moves = Vec::new();
    let mut sign: i64 = 1;
    loop {
        let width = rows[0].len();
        let found = (0..width).find_map(|c| {
            (0..rows.len() - 1)
                .find(|&r| rows[r + 1].len() > c && rows[r + 1][c] < rows[r][c])
                .map(|r| (r, c))
        });
        let Some((r, c)) = found else { break };
        let before = column_inversions(&rows);
        let mut length = 0;
        while c + length < rows[r + 1].len() && rows[r + 1][c + length] < rows[r][c + length] {
            let x = rows[r][c + length];
            rows[r][c + length] = rows[r + 1][c + length];
            rows[r + 1][c + length] = x;
            length += 1;
        }
        if length % 2 == 1 {
            sign = -sign;
        }
        let after = column_inversions(&rows);
        moves.push(GarnirMove { row: r, column: c, length, inversions_before: before, inversions_after: after });
    }
    let m = SemiStandardTableau::from_rows(rows)?;
    let coefficient = Rational::new(
        BigInt::from(sign) * BigInt::from(row_stabilizer(h.rows())),
        BigInt::from(row_stabilizer(m.rows())),
    );
    Ok(Straightening { tableau: Some(m), coefficient, moves })
}

/// `ε_T p_{H,T} − c·ε_T p_{M,T}` with unnormalized symmetrizers.
pub fn straightening_residual(h: &Tableau, t: &Tableau, st: &Straightening) -> Result<MultiPoly> {
    let ctx = SymmetrizerContext::new(t)?;
    let lhs = ctx.symmetrize(&monomial_from_pair(h, t)?);
    match &st.tableau {
        None => Ok(lhs),
        Some(m) => {
            let rhs = ctx.symmetrize(&monomial_from_pair(m, t)?).scale(&st.coefficient);
            Ok(&lhs - &rhs)
        }
    }
}

/// All monomials of `f` are strictly `cmp_T`-below `p_{H,T}`.
pub fn strictly_below(f: &MultiPoly, h: &Tableau, t: &Tableau) -> Result<bool> {
    let top = monomial_from_pair(h, t)?;
    Ok(f.terms().all(|(m, _)| cmp_t(m, &top, t) == Ordering::Less))
}
