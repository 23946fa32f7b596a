use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, MultiPoly};

type Row = BTreeMap<Monomial, BigInt>;

fn integer_row(p: &MultiPoly) -> Row {
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(c.denom());
    }
    p.terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
        .collect()
}

fn normalize(row: &mut Row) {
    let mut g = BigInt::zero();
    for c in row.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    let lead_negative = row.values().next_back().is_some_and(|c| c.is_negative());
    if g.is_zero() {
        return;
    }
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for c in row.values_mut() {
            *c = &*c / &g;
        }
    }
}

/// Incremental fraction-free echelon form keyed by leading (lex-largest) monomial.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: HashMap<Monomial, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `p` against the pivots; returns true and keeps it when independent.
    pub fn insert(&mut self, p: &MultiPoly) -> bool {
        let mut row = integer_row(p);
        loop {
            let Some((lead, b)) = row.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
                return false;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                normalize(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let a = piv.values().next_back().unwrap();
            let g = a.gcd(&b);
            let fa = a / &g;
            let fb = &b / &g;
            if !fa.is_one() {
                for c in row.values_mut() {
                    *c *= &fa;
                }
            }
            for (m, c) in piv {
                let delta = c * &fb;
                match row.get_mut(m) {
                    Some(x) => {
                        *x -= delta;
                        if x.is_zero() {
                            row.remove(m);
                        }
                    }
                    None => {
                        row.insert(m.clone(), -delta);
                    }
                }
            }
            normalize(&mut row);
        }
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        let mut probe = self.clone();
        !probe.insert(p)
    }
}

/// Exact rank over the rationals. Homogeneous inputs are split by degree first,
/// which is exact because distinct degrees have disjoint supports.
pub fn rank_over_rationals(rows: &[MultiPoly]) -> usize {
    if rows.iter().all(MultiPoly::is_homogeneous) {
        let mut by_degree: BTreeMap<u32, Vec<&MultiPoly>> = BTreeMap::new();
        for r in rows {
            if let Some(d) = r.degree() {
                by_degree.entry(d).or_default().push(r);
            }
        }
        by_degree
            .values()
            .map(|group| {
                let mut e = Echelon::new();
                group.iter().filter(|p| e.insert(p)).count()
            })
            .sum()
    } else {
        let mut e = Echelon::new();
        rows.iter().filter(|p| e.insert(p)).count()
    }
}

/// Dense Bareiss elimination on an integer matrix.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Coefficient matrix over the union of supports, denominators cleared per row.
pub fn coefficient_matrix(rows: &[MultiPoly]) -> Vec<Vec<BigInt>> {
    let mut cols: Vec<Monomial> = rows.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    cols.sort();
    cols.dedup();
    rows.iter()
        .map(|p| {
            let r = integer_row(p);
            cols.iter().map(|m| r.get(m).cloned().unwrap_or_else(BigInt::zero)).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rational};
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(rank_over_rationals(&[]), 0);
        let a = parse_poly("x1 + x2", 2).unwrap();
        let b = parse_poly("x1 - x2", 2).unwrap();
        let c = parse_poly("3*x1", 2).unwrap();
        assert_eq!(rank_over_rationals(&[a.clone(), a.clone()]), 1);
        assert_eq!(rank_over_rationals(&[a.clone(), b.clone(), c.clone()]), 2);
        let half = a.scale(&(rational(1) / rational(2)));
        assert_eq!(rank_over_rationals(&[a.clone(), half]), 1);
        let mixed = &a + &MultiPoly::one(2);
        assert_eq!(rank_over_rationals(&[mixed, a, MultiPoly::one(2)]), 2);
    }

    #[test]
    fn bareiss_known() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(bareiss_rank(m), 2);
    }

    fn arb_rows() -> impl Strategy<Value = Vec<MultiPoly>> {
        let poly = prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..2, 3)), 0..5).prop_map(|ts| {
            MultiPoly::from_terms(3, ts.into_iter().map(|(c, e)| (Monomial(e), rational(c))))
        });
        prop::collection::vec(poly, 0..7)
    }

    proptest! {
        #[test]
        fn sparse_matches_dense(rows in arb_rows()) {
            let dense = bareiss_rank(coefficient_matrix(&rows));
            let mut e = Echelon::new();
            let sparse = rows.iter().filter(|p| e.insert(p)).count();
            prop_assert_eq!(sparse, dense);
            prop_assert_eq!(rank_over_rationals(&rows), dense);
        }
    }
}
