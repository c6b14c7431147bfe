//! Partitions, column compositions and cell geometry.
//!
//! Cells are 1-based `(row, col)` with rows counted from the top (English
//! convention). Partitions never store trailing zeros; the variable count `n`
//! is always passed separately by callers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn up(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    /// The cell directly below; it may lie outside the diagram.
    pub fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `i`-th part (1-based); zero past the last nonzero part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts zero-padded (or truncated) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `self ≺ lambda`: `lambda_i >= self_i >= lambda_{i+1}` for every `i >= 1`.
    pub fn interlaces(&self, lambda: &Partition) -> bool {
        let top = self.len().max(lambda.len());
        (1..=top).all(|i| lambda.part(i) >= self.part(i) && self.part(i) >= lambda.part(i + 1))
    }

    /// `n(λ) = Σ_j C(λ'_j, 2)`, the largest value of `maj` on fillings of this shape.
    pub fn n_stat(&self) -> usize {
        self.conjugate().parts.iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellOutOfShape(c))
        }
    }

    /// Cells strictly to the right in the same row.
    pub fn arm(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(self.part(c.row) - c.col)
    }

    /// Cells strictly to the left in the same row.
    pub fn coarm(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(c.col - 1)
    }

    /// Cells strictly below in the same column.
    pub fn leg(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(self.conjugate().part(c.col) - c.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn columns(&self) -> ColumnComposition {
        ColumnComposition::new(self.conjugate().parts)
    }

    /// Partitions of `m` in reverse-lexicographic order.
    pub fn all_of_size(m: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_cells` cells and at most `max_parts`
    /// nonzero parts, ordered by size and then reverse-lexicographically.
    pub fn all_up_to(max_cells: usize, max_parts: usize) -> Vec<Partition> {
        (0..=max_cells)
            .flat_map(Partition::all_of_size)
            .filter(|p| p.len() <= max_parts)
            .collect()
    }

    /// `self + k·θ` where `θ = (2,1,…,1,0)` is the highest root for `n` variables.
    pub fn plus_k_theta(&self, n: usize, k: usize) -> Partition {
        let mut parts = self.padded(n.max(1));
        if n >= 2 {
            parts[0] += 2 * k;
            for p in parts.iter_mut().take(n - 1).skip(1) {
                *p += k;
            }
        }
        Partition::new(parts).expect("adding a dominant weight keeps the parts decreasing")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Column lengths left to right; empty columns are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColumnComposition {
    columns: Vec<usize>,
}

impl ColumnComposition {
    pub fn new(columns: Vec<usize>) -> Self {
        ColumnComposition { columns }
    }

    pub fn column_lengths(&self) -> &[usize] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn is_partition_shape(&self) -> bool {
        self.columns.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition whose conjugate is this composition sorted into
    /// decreasing order.
    pub fn sorted_partition(&self) -> Partition {
        let mut cols = self.columns.clone();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(cols).expect("sorted").conjugate()
    }

    /// Only valid for partition shapes.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition_shape() {
            return Err(Error::NotPartitionShape(self.columns.clone()));
        }
        Ok(Partition::new(self.columns.clone()).expect("checked").conjugate())
    }

    /// Membership in `Comp(λ)`: a permutation of the columns of `λ`, possibly
    /// with extra empty columns.
    pub fn is_composition_of(&self, lambda: &Partition) -> bool {
        self.sorted_partition() == *lambda
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.columns.len() && c.row <= self.columns[c.col - 1]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let height = self.columns.iter().copied().max().unwrap_or(0);
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=height {
            for (c, &len) in self.columns.iter().enumerate() {
                if len >= r {
                    out.push(Cell::new(r, c + 1));
                }
            }
        }
        out
    }

    /// All distinct column orders of `λ` (with no extra empty columns), in
    /// lexicographic order of the column-length sequence.
    pub fn all_of(lambda: &Partition) -> Vec<ColumnComposition> {
        let mut cols = lambda.conjugate().parts;
        cols.sort_unstable();
        let mut out = vec![ColumnComposition::new(cols.clone())];
        while next_permutation(&mut cols) {
            out.push(ColumnComposition::new(cols.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros_and_rejects_increase() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[10, 6, 4]).conjugate(), p(&[3, 3, 3, 3, 2, 2, 1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn conjugate_counts_cells_per_column() {
        for lam in Partition::all_up_to(12, 12) {
            let conj = lam.conjugate();
            for j in 1..=lam.part(1) {
                let count = lam.cells().filter(|c| c.col == j).count();
                assert_eq!(conj.part(j), count);
            }
            assert_eq!(conj.conjugate(), lam);
        }
    }

    #[test]
    fn interlacing_examples() {
        assert!(p(&[9, 7, 4, 2]).interlaces(&p(&[10, 7, 5, 2])));
        assert!(p(&[9, 7, 4, 2]).interlaces(&p(&[10, 8, 5, 3])));
        assert!(p(&[3, 1]).interlaces(&p(&[3, 1])));
        assert!(!p(&[3]).interlaces(&p(&[2, 1])));
        assert!(!p(&[1]).interlaces(&p(&[1, 1, 1])));
    }

    #[test]
    fn interlacing_is_a_horizontal_strip() {
        let all = Partition::all_up_to(8, 8);
        for lam in &all {
            for mu in &all {
                let contained = mu.cells().all(|c| lam.contains(c));
                let strip = contained
                    && (1..=lam.part(1)).all(|col| {
                        lam.cells().filter(|c| c.col == col && !mu.contains(*c)).count() <= 1
                    });
                assert_eq!(mu.interlaces(lam), strip, "mu={mu} lambda={lam}");
            }
        }
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[]).n_stat(), 0);
        assert_eq!(p(&[10, 6, 4]).n_stat(), 14);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
    }

    #[test]
    fn arm_coarm_leg() {
        assert_eq!(p(&[3]).arm(Cell::new(1, 1)), Ok(2));
        assert_eq!(p(&[3]).coarm(Cell::new(1, 3)), Ok(2));
        assert_eq!(p(&[1, 1, 1]).leg(Cell::new(1, 1)), Ok(2));
        assert_eq!(p(&[2]).arm(Cell::new(2, 1)), Err(Error::CellOutOfShape(Cell::new(2, 1))));
        for lam in Partition::all_up_to(7, 7) {
            for c in lam.cells() {
                assert_eq!(lam.arm(c).unwrap() + lam.coarm(c).unwrap() + 1, lam.part(c.row));
            }
        }
    }

    #[test]
    fn compositions_of_a_partition() {
        let comps = ColumnComposition::all_of(&p(&[2, 1]));
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|g| g.is_composition_of(&p(&[2, 1]))));
        assert!(ColumnComposition::new(vec![1, 2]).to_partition().is_err());
        assert_eq!(ColumnComposition::new(vec![2, 1]).to_partition().unwrap(), p(&[2, 1]));
    }

    #[test]
    fn plus_k_theta_shapes() {
        assert_eq!(p(&[]).plus_k_theta(3, 2), p(&[4, 2]));
        assert_eq!(p(&[]).plus_k_theta(2, 3), p(&[6]));
        assert_eq!(p(&[1]).plus_k_theta(4, 1), p(&[3, 1, 1]));
    }
}
