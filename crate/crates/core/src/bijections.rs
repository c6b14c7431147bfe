//! The weight-preserving bijections between column strict fillings and
//! partition overlaid patterns, their inverses and the involution `Ω`.

use crate::error::{Error, Result};
use crate::fillings::{Filling, Stat};
use crate::patterns::{GTPattern, Overlay, Pop};
use crate::qpoly::strict_tuple_from_partition;

pub(crate) fn require_csf(f: &Filling) -> Result<()> {
    f.partition_shape()?;
    for c in f.cells() {
        if c.up().is_some_and(|u| f.get(u) >= f.get(c)) {
            return Err(Error::NotColumnStrict(c));
        }
    }
    Ok(())
}

/// `(rowsort F, Λ)`. For `quinv`, `Λ_ij` lists `zcount` over the cells of
/// row `i` holding `j+1`, read right to left; for `inv`, `zcb` read left to
/// right.
pub fn psi(f: &Filling, stat: Stat) -> Result<Pop> {
    require_csf(f)?;
    let gt = GTPattern::from_ssyt(&f.rowsort()?)?;
    let mut overlay = Overlay::new();
    for (i, j) in gt.index_pairs() {
        let cells = f.cells_with_entry(i, j)?;
        let parts: Result<Vec<usize>> = match stat {
            Stat::Quinv => cells.iter().rev().map(|&c| f.zcount(c)).collect(),
            Stat::Inv => cells.iter().map(|&c| f.zcb(c)).collect(),
        };
        overlay.insert((i, j), parts?);
    }
    Pop::new(gt, overlay)
}

pub fn psi_quinv(f: &Filling) -> Result<Pop> {
    psi(f, Stat::Quinv)
}

pub fn psi_inv(f: &Filling) -> Result<Pop> {
    psi(f, Stat::Inv)
}

/// Rebuilds the filling row by row from the bottom. In row `i`, entries
/// `j+1` are placed for `j = n−1` down to `i` among the candidate cells
/// (empty, and above an entry larger than `j+1` if anything is below),
/// labelled right to left for `inv` and left to right for `quinv`; the rest
/// of the row gets `i`.
pub fn psi_inverse(p: &Pop, stat: Stat) -> Result<Filling> {
    let t = p.gt();
    let n = t.n();
    let lambda = t.shape();
    let height = lambda.len();
    // 0 marks an empty cell
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();

    if height == n {
        rows[n - 1].fill(n);
    }
    for i in (1..=height.min(n - 1)).rev() {
        for j in (i..n).rev() {
            let (k, l) = (t.ne(i, j)?, t.se(i, j)?);
            let below = rows.get(i).cloned().unwrap_or_default();
            let row = &rows[i - 1];
            let mut cand: Vec<usize> = (0..row.len())
                .filter(|&c| row[c] == 0 && below.get(c).is_none_or(|&d| d > j + 1))
                .collect();
            if cand.len() != k + l {
                return Err(Error::InvalidPattern(format!(
                    "row {i}, entry {}: {} candidate cells, expected {}",
                    j + 1,
                    cand.len(),
                    k + l
                )));
            }
            if stat == Stat::Inv {
                cand.reverse();
            }
            let labels = strict_tuple_from_partition(p.part(i, j), k, l)
                .map_err(|_| Error::InvalidOverlay { i, j, reason: "does not fit its box".into() })?;
            for a in labels {
                rows[i - 1][cand[a]] = j + 1;
            }
        }
        for e in rows[i - 1].iter_mut().filter(|e| **e == 0) {
            *e = i;
        }
    }
    let f = Filling::from_rows(n, rows)?;
    debug_assert!(f.is_column_strict());
    Ok(f)
}

pub fn psi_quinv_inverse(p: &Pop) -> Result<Filling> {
    psi_inverse(p, Stat::Quinv)
}

pub fn psi_inv_inverse(p: &Pop) -> Result<Filling> {
    psi_inverse(p, Stat::Inv)
}

/// `ψ_inv⁻¹ ∘ bcomp ∘ ψ_inv`: exchanges `inv` and `quinv`, keeps `rowsort`.
pub fn omega(f: &Filling) -> Result<Filling> {
    psi_inv_inverse(&psi_inv(f)?.bcomp())
}
