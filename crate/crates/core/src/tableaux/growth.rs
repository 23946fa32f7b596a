use crate::combinat::BoundedMultiset;
use crate::error::{domain, Error, Result};

use super::{
    destandardize, evacuation, standardize, Cell, SemiStandardTableau, StandardTableau, Tableau,
};

/// Puts `n + 1` into the external corner `v`.
pub fn grow(t: &Tableau, v: Cell) -> Result<Tableau> {
    t.with_cell(v, t.size() + 1)
}

pub fn iota(t: &Tableau) -> Tableau {
    grow(t, Cell::new(0, t.shape().first())).unwrap()
}

pub fn tilde_add(s: &StandardTableau, v: Cell) -> Result<StandardTableau> {
    let grown = grow(&evacuation(s), v)?;
    Ok(evacuation(&StandardTableau::new_unchecked(grown)))
}

/// 0 when `v` lies strictly below the row holding `n` in `ev S`, else 1.
pub fn delta(m: &SemiStandardTableau, v: Cell) -> Result<u8> {
    if !super::external_corners(m.shape()).contains(&v) {
        return domain(format!("{v} is not an external corner of {}", m.shape()));
    }
    let ev = evacuation(&standardize(m).standard);
    let row_n = ev.position(m.size()).row;
    Ok(if v.row > row_n { 0 } else { 1 })
}

pub fn plus_one(m: &SemiStandardTableau) -> SemiStandardTableau {
    SemiStandardTableau::new_unchecked(m.map_entries(|x| x + 1))
}

pub fn hat_add(m: &SemiStandardTableau, v: Cell) -> Result<SemiStandardTableau> {
    let d = delta(m, v)?;
    let st = standardize(m);
    let n = m.size();
    let mut shifted: Vec<usize> = st.multiset.elements().iter().map(|j| j + 1).collect();
    if d == 0 {
        shifted.push(1);
    }
    let j = BoundedMultiset::new(shifted, n + 1)?;
    let s = tilde_add(&st.standard, v)?;
    destandardize(&s, &j).map_err(|e| Error::Inconsistent(format!("hat_add({m}, {v}): {e}")))
}

pub fn hat_iota(m: &SemiStandardTableau) -> SemiStandardTableau {
    hat_add(m, Cell::new(0, m.shape().first())).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// `N = K_+`.
    Plus(SemiStandardTableau),
    /// `N = M +̂ v`.
    Hat { m: SemiStandardTableau, v: Cell, delta: u8 },
}

pub fn ssyt_decompose(nt: &SemiStandardTableau) -> Result<Decomposition> {
    let size = nt.size();
    if size < 2 {
        return domain("decomposition needs at least two boxes");
    }
    if nt.entries().all(|x| x > 0) {
        return Ok(Decomposition::Plus(SemiStandardTableau::new_unchecked(nt.map_entries(|x| x - 1))));
    }
    let n = size - 1;
    let st = standardize(nt);
    let ev_t = evacuation(&st.standard);
    let v = ev_t.position(n + 1);
    let delta = if v.row > ev_t.position(n).row { 0 } else { 1 };
    let ev_s = StandardTableau::new_unchecked(ev_t.without_cell(v)?);
    let s = evacuation(&ev_s);
    let mut j = st.multiset.clone();
    if delta == 0 {
        j = j.remove_one(1).map_err(|e| Error::Inconsistent(e.to_string()))?;
    }
    let j = BoundedMultiset::new(j.elements().iter().map(|x| x - 1).collect(), n)?;
    let m = destandardize(&s, &j).map_err(|e| Error::Inconsistent(format!("decompose {nt}: {e}")))?;
    Ok(Decomposition::Hat { m, v, delta })
}
