mod evacuation;
mod growth;
mod standardize;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{contents, Content, Partition};
use crate::error::{domain, Error, Result};

pub use evacuation::evacuation;
pub use growth::{
    delta, grow, hat_add, hat_iota, iota, plus_one, ssyt_decompose, tilde_add, Decomposition,
};
pub use standardize::{
    ct_inverse, destandardize, dsp_c, is_cocharge, leftmost_box_criterion, standardize,
    Standardization,
};

/// Box of a Ferrers diagram, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::Domain(format!("rows {rows:?} do not form a Ferrers diagram")))?;
        Ok(Tableau { shape, rows })
    }

    pub fn filled(shape: &Partition, f: impl Fn(Cell) -> usize) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| f(Cell::new(r, c))).collect())
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row).and_then(|r| r.get(cell.col)).copied()
    }

    pub fn entry(&self, cell: Cell) -> usize {
        self.rows[cell.row][cell.col]
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (0..row.len()).map(move |c| Cell::new(r, c)))
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn entry_sum(&self) -> usize {
        self.entries().sum()
    }

    pub fn content(&self) -> Content {
        Content::new(self.entries().collect())
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > col).map(|r| r[col]).collect()
    }

    pub fn find(&self, value: usize) -> Option<Cell> {
        self.cells().find(|&c| self.entry(c) == value)
    }

    /// Entries are exactly `1..=n`, in any arrangement.
    pub fn is_bijective_filling(&self) -> bool {
        let mut e: Vec<usize> = self.entries().collect();
        e.sort_unstable();
        e.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn rows_weakly_increase(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn rows_strictly_increase(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn columns_strictly_increase(&self) -> bool {
        (0..self.shape.first()).all(|c| self.column(c).windows(2).all(|w| w[0] < w[1]))
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect(),
        }
    }

    pub(crate) fn with_cell(&self, cell: Cell, value: usize) -> Result<Tableau> {
        let shape = add_box(&self.shape, cell)?;
        let mut rows = self.rows.clone();
        if cell.row == rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row].push(value);
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn without_cell(&self, cell: Cell) -> Result<Tableau> {
        let shape = remove_box(&self.shape, cell)?;
        let mut rows = self.rows.clone();
        rows[cell.row].pop();
        if rows[cell.row].is_empty() {
            rows.pop();
        }
        Ok(Tableau { shape, rows })
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

macro_rules! refinement {
    ($name:ident, $inner:ty) => {
        impl std::ops::Deref for $name {
            type Target = $inner;
            fn deref(&self) -> &$inner {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.0.serialize(s)
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau(Tableau);
refinement!(StandardTableau, Tableau);

impl StandardTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if !t.is_bijective_filling() || !t.rows_strictly_increase() || !t.columns_strictly_increase() {
            return domain(format!("{t} is not a standard tableau"));
        }
        Ok(StandardTableau(t))
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(Tableau::new(rows)?)
    }

    pub(crate) fn new_unchecked(t: Tableau) -> Self {
        debug_assert!(StandardTableau::new(t.clone()).is_ok());
        StandardTableau(t)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    pub fn position(&self, value: usize) -> Cell {
        self.0.find(value).expect("value present in standard tableau")
    }

    /// Row index (0-based) of each value `1..=n`, indexed by `value - 1`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for c in self.cells() {
            out[self.entry(c) - 1] = c.row;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiStandardTableau(Tableau);
refinement!(SemiStandardTableau, Tableau);

impl SemiStandardTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if !t.rows_weakly_increase() || !t.columns_strictly_increase() {
            return domain(format!("{t} is not semi-standard"));
        }
        Ok(SemiStandardTableau(t))
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(Tableau::new(rows)?)
    }

    pub(crate) fn new_unchecked(t: Tableau) -> Self {
        debug_assert!(SemiStandardTableau::new(t.clone()).is_ok());
        SemiStandardTableau(t)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    pub fn zeros(shape: &Partition) -> Self {
        SemiStandardTableau(Tableau::filled(shape, |_| 0))
    }
}

impl<'de> Deserialize<'de> for SemiStandardTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = Tableau::deserialize(d)?;
        SemiStandardTableau::new(t).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CochargeTableau(SemiStandardTableau);
refinement!(CochargeTableau, SemiStandardTableau);

impl CochargeTableau {
    pub fn new(m: SemiStandardTableau) -> Result<Self> {
        if !is_cocharge(&m) {
            return domain(format!("{m} is not a cocharge tableau"));
        }
        Ok(CochargeTableau(m))
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(SemiStandardTableau::from_rows(rows)?)
    }

    pub fn of(s: &StandardTableau) -> Self {
        let j = descent_set(s);
        let m = destandardize_set(s, &j);
        CochargeTableau(m)
    }

    /// Row `i` filled with `i`.
    pub fn minimal(shape: &Partition) -> Self {
        CochargeTableau(SemiStandardTableau(Tableau::filled(shape, |c| c.row)))
    }

    pub fn ssyt(&self) -> &SemiStandardTableau {
        &self.0
    }

    pub fn into_ssyt(self) -> SemiStandardTableau {
        self.0
    }

    pub fn dsp_c_set(&self) -> BTreeSet<usize> {
        dsp_c(&self.0).to_set()
    }
}

pub fn cocharge_of(s: &StandardTableau) -> CochargeTableau {
    CochargeTableau::of(s)
}

fn destandardize_set(s: &StandardTableau, j: &BTreeSet<usize>) -> SemiStandardTableau {
    SemiStandardTableau(s.map_entries(|p| j.iter().filter(|&&x| x < p).count()))
}

/// `{i : i+1 lies in a strictly lower row than i}`.
pub fn descent_set(s: &StandardTableau) -> BTreeSet<usize> {
    let rows = s.row_of();
    (1..s.size()).filter(|&i| rows[i] > rows[i - 1]).collect()
}

pub fn dsi_c(s: &StandardTableau) -> BTreeSet<usize> {
    let n = s.size();
    descent_set(s).into_iter().map(|i| n - i).collect()
}

pub fn asi(s: &StandardTableau) -> BTreeSet<usize> {
    let d = descent_set(s);
    (1..s.size()).filter(|i| !d.contains(i)).collect()
}

pub fn asi_c(s: &StandardTableau) -> BTreeSet<usize> {
    let n = s.size();
    asi(s).into_iter().map(|i| n - i).collect()
}

pub fn external_corners(shape: &Partition) -> Vec<Cell> {
    let p = shape.parts();
    let mut out: Vec<Cell> = (0..p.len())
        .filter(|&r| r == 0 || p[r - 1] > p[r])
        .map(|r| Cell::new(r, p[r]))
        .collect();
    out.push(Cell::new(p.len(), 0));
    out
}

pub fn internal_corners(shape: &Partition) -> Vec<Cell> {
    let p = shape.parts();
    (0..p.len())
        .filter(|&r| r + 1 == p.len() || p[r + 1] < p[r])
        .map(|r| Cell::new(r, p[r] - 1))
        .collect()
}

pub fn add_box(shape: &Partition, v: Cell) -> Result<Partition> {
    if !external_corners(shape).contains(&v) {
        return domain(format!("{v} is not an external corner of {shape}"));
    }
    let mut parts = shape.parts().to_vec();
    if v.row == parts.len() {
        parts.push(1);
    } else {
        parts[v.row] += 1;
    }
    Partition::new(parts)
}

pub fn remove_box(shape: &Partition, v: Cell) -> Result<Partition> {
    if !internal_corners(shape).contains(&v) {
        return domain(format!("{v} is not an internal corner of {shape}"));
    }
    let mut parts = shape.parts().to_vec();
    parts[v.row] -= 1;
    if parts[v.row] == 0 {
        parts.pop();
    }
    Partition::new(parts)
}

pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<StandardTableau>) {
        if next > n {
            out.push(StandardTableau(Tableau::new(rows.clone()).unwrap()));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), &mut rows, 1, shape.size(), &mut out);
    out
}

pub fn enumerate_cct(shape: &Partition) -> Vec<CochargeTableau> {
    enumerate_syt(shape).iter().map(CochargeTableau::of).collect()
}

/// The standard tableaux `S` with `Dsi(S) ⊆ Ĵ` for the canonical `J` of `content`,
/// destandardized.
pub fn enumerate_ssyt_by_content(shape: &Partition, content: &Content) -> Vec<SemiStandardTableau> {
    if content.len() != shape.size() {
        return Vec::new();
    }
    let j = standardize::canonical_multiset(content);
    enumerate_syt(shape)
        .iter()
        .filter_map(|s| destandardize(s, &j).ok())
        .collect()
}

pub fn enumerate_ssyt(shape: &Partition, d: usize) -> Vec<SemiStandardTableau> {
    contents(shape.size(), d)
        .iter()
        .flat_map(|mu| enumerate_ssyt_by_content(shape, mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn brute_ssyt(shape: &Partition, d: usize) -> Vec<Tableau> {
        let cells: Vec<Cell> = Tableau::filled(shape, |_| 0).cells().collect();
        let mut out = Vec::new();
        let mut vals = vec![0usize; cells.len()];
        loop {
            if vals.iter().sum::<usize>() == d {
                let t = Tableau::filled(shape, |c| vals[cells.iter().position(|&x| x == c).unwrap()]);
                if SemiStandardTableau::new(t.clone()).is_ok() {
                    out.push(t);
                }
            }
            let mut i = 0;
            loop {
                if i == vals.len() {
                    return out;
                }
                vals[i] += 1;
                if vals[i] <= d {
                    break;
                }
                vals[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&shape(&[3, 1]), 2).len(), 2);
        let row: Vec<_> = enumerate_ssyt(&shape(&[4]), 2).into_iter().map(|m| m.rows()[0].clone()).collect();
        assert_eq!(row.len(), 2);
        assert!(row.contains(&vec![0, 0, 0, 2]) && row.contains(&vec![0, 0, 1, 1]));
        assert_eq!(enumerate_syt(&shape(&[2, 2])).len(), 2);
    }

    #[test]
    fn ssyt_enumeration_matches_brute_force() {
        for n in 1..=4 {
            for lam in crate::combinat::partitions(n) {
                for d in 0..=4 {
                    let mut a: Vec<Tableau> = enumerate_ssyt(&lam, d).into_iter().map(|m| m.into_tableau()).collect();
                    let mut b = brute_ssyt(&lam, d);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b, "{lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn syt_counts_hook_length() {
        let counts = [(vec![3, 2, 1], 16), (vec![4, 2], 9), (vec![3, 3], 5), (vec![4, 3, 1], 70)];
        for (p, c) in counts {
            assert_eq!(enumerate_syt(&shape(&p)).len(), c);
        }
    }

    #[test]
    fn descents() {
        assert_eq!(descent_set(&syt(&[&[1, 3, 4], &[2]])), BTreeSet::from([1]));
        assert!(descent_set(&syt(&[&[1, 2, 3]])).is_empty());
        let s = syt(&[&[1, 3, 4, 8], &[2, 5, 6], &[7]]);
        assert_eq!(descent_set(&s), BTreeSet::from([1, 4, 6]));
        assert_eq!(dsi_c(&s), BTreeSet::from([2, 4, 7]));
        assert_eq!(asi(&s), BTreeSet::from([2, 3, 5, 7]));
        assert_eq!(asi_c(&s), BTreeSet::from([1, 3, 5, 6]));
    }

    #[test]
    fn corners() {
        assert_eq!(external_corners(&shape(&[4, 3, 1])).len(), 4);
        assert_eq!(external_corners(&shape(&[3])), vec![Cell::new(0, 3), Cell::new(1, 0)]);
        for n in 0..=7 {
            for lam in crate::combinat::partitions(n) {
                for v in external_corners(&lam) {
                    let nu = add_box(&lam, v).unwrap();
                    assert!(internal_corners(&nu).contains(&v));
                    assert_eq!(remove_box(&nu, v).unwrap(), lam);
                }
            }
        }
        assert!(add_box(&shape(&[2, 2]), Cell::new(1, 2)).is_err());
        assert!(remove_box(&shape(&[2, 2]), Cell::new(0, 1)).is_err());
    }

    #[test]
    fn refinements_validate() {
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![2]]).is_err());
        assert!(SemiStandardTableau::from_rows(vec![vec![0, 1], vec![0]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(CochargeTableau::from_rows(vec![vec![0, 2, 2], vec![2]]).is_err());
        assert!(CochargeTableau::from_rows(vec![vec![0, 1, 1], vec![1]]).is_ok());
        let c0 = CochargeTableau::minimal(&shape(&[3, 2, 2, 1]));
        assert!(is_cocharge(&c0));
    }
}
