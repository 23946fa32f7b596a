use super::{StandardTableau, Tableau};

/// Schützenberger evacuation: delete the minimum, slide the hole out by
/// jeu de taquin, and record `n, n-1, ..` at the cells the hole exits through.
pub fn evacuation(s: &StandardTableau) -> StandardTableau {
    let n = s.size();
    let mut cur: Vec<Vec<usize>> = s.rows().to_vec();
    let mut out: Vec<Vec<usize>> = s.rows().iter().map(|r| vec![0; r.len()]).collect();
    for step in 0..n {
        let (mut r, mut c) = (0, 0);
        loop {
            let right = cur[r].get(c + 1).copied();
            let down = cur.get(r + 1).and_then(|row| row.get(c)).copied();
            match (right, down) {
                (None, None) => break,
                (Some(a), Some(b)) if b < a => {
                    cur[r][c] = b;
                    r += 1;
                }
                (Some(a), _) => {
                    cur[r][c] = a;
                    c += 1;
                }
                (None, Some(b)) => {
                    cur[r][c] = b;
                    r += 1;
                }
            }
        }
        cur[r].pop();
        if cur[r].is_empty() {
            cur.pop();
        }
        out[r][c] = n - step;
    }
    StandardTableau::new_unchecked(Tableau::new(out).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;
    use crate::tableaux::{descent_set, dsi_c, enumerate_syt};

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn golden() {
        let s = syt(&[&[1, 3, 4, 8], &[2, 5, 6], &[7]]);
        assert_eq!(evacuation(&s), syt(&[&[1, 2, 4, 7], &[3, 6, 8], &[5]]));
        let row = syt(&[&[1, 2, 3, 4]]);
        assert_eq!(evacuation(&row), row);
    }

    #[test]
    fn involution_and_descents() {
        for n in 1..=6 {
            for lam in partitions(n) {
                for s in enumerate_syt(&lam) {
                    let e = evacuation(&s);
                    assert!(StandardTableau::new(e.tableau().clone()).is_ok());
                    assert_eq!(evacuation(&e), s);
                    assert_eq!(descent_set(&e), dsi_c(&s));
                }
            }
        }
    }
}
