//! Fillings of partition and column-composition shapes, their statistics
//! and exhaustive enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QXPoly;
use crate::shapes::{Cell, ColumnComposition, Partition};

/// The two statistics whose generating functions give the q-Whittaker
/// polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Inv,
    Quinv,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::Inv => "inv",
            Stat::Quinv => "quinv",
        }
    }
}

impl std::str::FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Stat::Inv),
            "quinv" => Ok(Stat::Quinv),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// A map from the cells of a column composition to `1..=n`, stored column
/// by column, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    n: usize,
    columns: Vec<Vec<usize>>,
}

/// `(x, y, z)` with `y = down(x)`; `y` may lie just below the diagram.
pub type Triple = (Cell, Cell, Cell);

impl Filling {
    pub fn from_columns(n: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        for (c, col) in columns.iter().enumerate() {
            for (r, &e) in col.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(Error::EntryOutOfRange { cell: Cell::new(r + 1, c + 1), entry: e, n });
                }
            }
        }
        Ok(Filling { n, columns })
    }

    /// Rows top to bottom; they must be left-justified with weakly
    /// decreasing lengths.
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(|r| r.is_empty()) {
            return Err(Error::RaggedRows);
        }
        let width = rows.first().map_or(0, |r| r.len());
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Self::from_columns(n, columns)
    }

    pub fn empty(n: usize) -> Self {
        Filling { n, columns: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn shape(&self) -> ColumnComposition {
        ColumnComposition::new(self.columns.iter().map(Vec::len).collect())
    }

    pub fn partition_shape(&self) -> Result<Partition> {
        self.shape().to_partition()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Entries of row `i` (1-based), in column order, skipping columns too
    /// short to reach it.
    pub fn row(&self, i: usize) -> Vec<usize> {
        self.row_cells(i).into_iter().map(|c| self.columns[c.col - 1][i - 1]).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.num_rows()).map(|i| self.row(i)).collect()
    }

    /// Cells of row `i`, left to right.
    pub fn row_cells(&self, i: usize) -> Vec<Cell> {
        if i == 0 {
            return Vec::new();
        }
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, col)| col.len() >= i)
            .map(|(c, _)| Cell::new(i, c + 1))
            .collect()
    }

    /// Row-major list of all cells.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.num_rows()).flat_map(|i| self.row_cells(i)).collect()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.columns.get(c.col - 1).is_some_and(|col| col.len() >= c.row)
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        self.columns.get(c.col - 1)?.get(c.row - 1).copied()
    }

    fn at(&self, c: Cell) -> usize {
        self.columns[c.col - 1][c.row - 1]
    }

    /// Entry with cells below the diagram treated as `+∞`.
    fn at_or_inf(&self, c: Cell) -> usize {
        self.get(c).unwrap_or(usize::MAX)
    }

    pub fn is_column_strict(&self) -> bool {
        self.columns.iter().all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// Column strict with weakly increasing rows, on a partition shape.
    pub fn is_semistandard(&self) -> bool {
        self.shape().is_partition_shape()
            && self.is_column_strict()
            && (1..=self.num_rows()).all(|i| self.row(i).windows(2).all(|w| w[0] <= w[1]))
    }

    fn require_column_strict(&self) -> Result<()> {
        for (c, col) in self.columns.iter().enumerate() {
            if let Some(r) = col.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::NotColumnStrict(Cell::new(r + 2, c + 1)));
            }
        }
        Ok(())
    }

    /// Exponent of `x_k` in `x^F`, for `k = 1..=n`.
    pub fn content(&self) -> Vec<i32> {
        let mut x = vec![0; self.n];
        for col in &self.columns {
            for &e in col {
                x[e - 1] += 1;
            }
        }
        x
    }

    pub fn x_weight(&self) -> QXPoly {
        QXPoly::monomial(0, &self.content())
    }

    /// Cells `u` outside the first row with `F(u) > F(up u)`.
    pub fn descents(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|&u| u.up().is_some_and(|v| self.at(u) > self.at(v)))
            .collect()
    }

    pub fn maj(&self) -> Result<usize> {
        let lambda = self.partition_shape()?;
        let mut total = 0;
        for u in self.descents() {
            total += lambda.leg(u)? + 1;
        }
        Ok(total)
    }

    /// Number of pairs `(u, v)` where `u` Inv-attacks `v` and `F(u) > F(v)`.
    fn inv_pairs(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.num_rows() {
            let row = self.row(i);
            for a in 0..row.len() {
                for b in a + 1..row.len() {
                    count += usize::from(row[a] > row[b]);
                }
            }
            let below = self.row(i + 1);
            for (cu, &fu) in below.iter().enumerate() {
                for &fv in row.iter().take(cu) {
                    count += usize::from(fu > fv);
                }
            }
        }
        count
    }

    /// Number of pairs `(u, v)` where `u` Quinv-attacks `v` and `F(u) > F(v)`.
    fn quinv_pairs(&self) -> usize {
        let mut count = 0;
        for i in 1..=self.num_rows() {
            let row = self.row(i);
            for a in 0..row.len() {
                for b in a + 1..row.len() {
                    count += usize::from(row[b] > row[a]);
                }
            }
            let below = self.row(i + 1);
            for (cu, &fu) in below.iter().enumerate() {
                for &fv in row.iter().skip(cu + 1) {
                    count += usize::from(fu > fv);
                }
            }
        }
        count
    }

    /// `|Inv(F)| − Σ_{u ∈ Des(F)} arm(u)`.
    pub fn inv(&self) -> Result<i64> {
        let lambda = self.partition_shape()?;
        let mut sub = 0;
        for u in self.descents() {
            sub += lambda.arm(u)?;
        }
        let value = self.inv_pairs() as i64 - sub as i64;
        if cfg!(debug_assertions) && self.is_column_strict() {
            debug_assert_eq!(value, self.refinv_triples().map_or(0, |t| t.len()) as i64);
        }
        Ok(value)
    }

    /// `|Quinv(F)| − Σ_{u ∈ Des(F)} arm(up u)`.
    pub fn quinv(&self) -> Result<i64> {
        let lambda = self.partition_shape()?;
        let mut sub = 0;
        for u in self.descents() {
            sub += lambda.arm(u.up().expect("descents lie below the first row"))?;
        }
        let value = self.quinv_pairs() as i64 - sub as i64;
        if cfg!(debug_assertions) && self.is_column_strict() {
            debug_assert_eq!(value, self.quinv_triples().map_or(0, |t| t.len()) as i64);
        }
        Ok(value)
    }

    pub fn stat(&self, stat: Stat) -> Result<i64> {
        match stat {
            Stat::Inv => self.inv(),
            Stat::Quinv => self.quinv(),
        }
    }

    fn triples(&self, z_right: bool) -> Result<Vec<Triple>> {
        self.require_column_strict()?;
        let mut out = Vec::new();
        for i in 1..=self.num_rows() {
            let cells = self.row_cells(i);
            for &x in &cells {
                let y = x.down();
                for &z in &cells {
                    let placed = if z_right { z.col > x.col } else { z.col < x.col };
                    if placed && self.at(x) < self.at(z) && self.at(z) < self.at_or_inf(y) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Triples `(x, down x, z)` with `z` right of `x` in the same row and
    /// `F(x) < F(z) < F(down x)`.
    pub fn quinv_triples(&self) -> Result<Vec<Triple>> {
        self.triples(true)
    }

    /// As [`Filling::quinv_triples`] but with `z` left of `x`.
    pub fn refinv_triples(&self) -> Result<Vec<Triple>> {
        self.triples(false)
    }

    pub fn refinv(&self) -> Result<usize> {
        Ok(self.refinv_triples()?.len())
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellOutOfShape(c))
        }
    }

    /// Number of quinv-triples whose third cell is `c`.
    pub fn zcount(&self, c: Cell) -> Result<usize> {
        self.check_cell(c)?;
        self.require_column_strict()?;
        Ok(self.z_count_in_row(c, true))
    }

    /// Number of refinv-triples whose third cell is `c`.
    pub fn zcb(&self, c: Cell) -> Result<usize> {
        self.check_cell(c)?;
        self.require_column_strict()?;
        Ok(self.z_count_in_row(c, false))
    }

    fn z_count_in_row(&self, z: Cell, z_right: bool) -> usize {
        let fz = self.at(z);
        self.row_cells(z.row)
            .into_iter()
            .filter(|x| if z_right { x.col < z.col } else { x.col > z.col })
            .filter(|&x| self.at(x) < fz && fz < self.at_or_inf(x.down()))
            .count()
    }

    /// Grid of `zcount` (or `zcb`) values laid out like the rows of `F`.
    pub fn z_grid(&self, stat: Stat) -> Result<Vec<Vec<usize>>> {
        self.require_column_strict()?;
        Ok((1..=self.num_rows())
            .map(|i| {
                self.row_cells(i)
                    .into_iter()
                    .map(|c| self.z_count_in_row(c, stat == Stat::Quinv))
                    .collect()
            })
            .collect())
    }

    /// Cells of row `i` holding the entry `j + 1`, left to right.
    pub fn cells_with_entry(&self, i: usize, j: usize) -> Result<Vec<Cell>> {
        if i == 0 {
            return Err(Error::IndexOutOfRange { index: i, reason: "row index starts at 1" });
        }
        if i > j + 1 || j + 1 > self.n {
            return Err(Error::IndexOutOfRange { index: j, reason: "need i <= j+1 <= n" });
        }
        Ok(self.row_cells(i).into_iter().filter(|&c| self.at(c) == j + 1).collect())
    }

    /// Sorts every row in ascending order.
    pub fn rowsort(&self) -> Result<Filling> {
        self.partition_shape()?;
        let mut rows = self.rows();
        for row in &mut rows {
            row.sort_unstable();
        }
        Filling::from_rows(self.n, rows)
    }

    pub fn to_json(&self) -> FillingJson {
        if self.shape().is_partition_shape() {
            FillingJson { n: self.n, rows: Some(self.rows()), columns: None }
        } else {
            FillingJson { n: self.n, rows: None, columns: Some(self.columns.clone()) }
        }
    }
}

impl fmt::Display for Filling {
    /// Rows separated by `/`, entries juxtaposed when all are single digits,
    /// otherwise comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n < 10 { "" } else { "," };
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// JSON form: `{"n": int, "rows": [[…]]}` or `{"n": int, "columns": [[…]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FillingJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rows: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub columns: Option<Vec<Vec<usize>>>,
}

impl TryFrom<FillingJson> for Filling {
    type Error = Error;

    fn try_from(j: FillingJson) -> Result<Self> {
        match (j.rows, j.columns) {
            (Some(rows), None) => Filling::from_rows(j.n, rows),
            (None, Some(columns)) => Filling::from_columns(j.n, columns),
            _ => Err(Error::Malformed("filling needs exactly one of \"rows\" or \"columns\"".into())),
        }
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Filling::try_from(FillingJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Odometer over the cells of `shape` in row-major order. `lo` and `hi`
/// give the admissible range of a cell given the value above it.
fn enumerate_shape<L, H>(n: usize, shape: &ColumnComposition, lo: L, hi: H) -> Vec<Filling>
where
    L: Fn(Option<usize>) -> usize,
    H: Fn(Cell) -> usize,
{
    let cells = shape.cells();
    let lens = shape.column_lengths().to_vec();
    let mut columns: Vec<Vec<usize>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();

    fn go<L, H>(
        k: usize,
        cells: &[Cell],
        columns: &mut Vec<Vec<usize>>,
        n: usize,
        lo: &L,
        hi: &H,
        out: &mut Vec<Filling>,
    ) where
        L: Fn(Option<usize>) -> usize,
        H: Fn(Cell) -> usize,
    {
        let Some(&c) = cells.get(k) else {
            out.push(Filling { n, columns: columns.clone() });
            return;
        };
        let above = (c.row > 1).then(|| columns[c.col - 1][c.row - 2]);
        for v in lo(above)..=hi(c) {
            columns[c.col - 1][c.row - 1] = v;
            go(k + 1, cells, columns, n, lo, hi, out);
        }
    }

    go(0, &cells, &mut columns, n, &lo, &hi, &mut out);
    out
}

/// All `n^{|λ|}` fillings of `λ`, in row-major lexicographic order.
pub fn enumerate_fillings(lambda: &Partition, n: usize) -> Vec<Filling> {
    if n == 0 && lambda.size() > 0 {
        return Vec::new();
    }
    enumerate_shape(n, &lambda.columns(), |_| 1, |_| n)
}

/// All column strict fillings of `λ` with entries in `1..=n`, in row-major
/// lexicographic order.
pub fn enumerate_csf(lambda: &Partition, n: usize) -> Vec<Filling> {
    enumerate_csf_composition(&lambda.columns(), n)
}

/// Column strict fillings of an arbitrary column composition.
pub fn enumerate_csf_composition(shape: &ColumnComposition, n: usize) -> Vec<Filling> {
    if shape.column_lengths().iter().any(|&l| l > n) {
        return Vec::new();
    }
    let lens = shape.column_lengths().to_vec();
    enumerate_shape(n, shape, |above| above.map_or(1, |a| a + 1), move |c| n - (lens[c.col - 1] - c.row))
}

/// `Π_j binom(n, λ'_j)`.
pub fn csf_count(lambda: &Partition, n: usize) -> u128 {
    lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&k| {
            if k > n {
                0
            } else {
                (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
            }
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn rows(n: usize, r: &[&[usize]]) -> Filling {
        Filling::from_rows(n, r.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn digits(s: &str) -> Vec<usize> {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn running_example() -> Filling {
        Filling::from_rows(4, vec![digits("1121212443"), digits("223334"), digits("3344")]).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_csf(&part(&[1]), 2), vec![rows(2, &[&[1]]), rows(2, &[&[2]])]);
        let two: Vec<String> = enumerate_csf(&part(&[2]), 2).iter().map(ToString::to_string).collect();
        assert_eq!(two, ["11", "12", "21", "22"]);
        assert!(enumerate_csf(&part(&[1, 1, 1]), 2).is_empty());
        assert_eq!(enumerate_fillings(&part(&[1]), 3).len(), 3);
        assert_eq!(enumerate_fillings(&part(&[2, 1]), 2).len(), 8);
        assert_eq!(enumerate_fillings(&part(&[]), 4), vec![Filling::empty(4)]);
        assert_eq!(enumerate_csf(&part(&[]), 4), vec![Filling::empty(4)]);
    }

    #[test]
    fn csf_enumeration_matches_filter_of_all_fillings() {
        for lambda in Partition::all_up_to(5, 5) {
            for n in 1..=3 {
                let filtered: Vec<Filling> =
                    enumerate_fillings(&lambda, n).into_iter().filter(Filling::is_column_strict).collect();
                assert_eq!(enumerate_csf(&lambda, n), filtered, "{lambda} n={n}");
                assert_eq!(filtered.len() as u128, csf_count(&lambda, n));
            }
        }
    }

    #[test]
    fn x_weight_examples() {
        assert_eq!(rows(2, &[&[1], &[2]]).x_weight(), QXPoly::monomial(0, &[1, 1]));
        assert_eq!(running_example().content(), vec![4, 5, 6, 5]);
        assert_eq!(Filling::empty(3).x_weight(), QXPoly::one(3));
    }

    #[test]
    fn maj_examples() {
        assert_eq!(running_example().maj().unwrap(), 14);
        let constant = rows(2, &[&[1, 1], &[1]]);
        assert!(constant.descents().is_empty());
        assert_eq!(constant.maj().unwrap(), 0);
        assert_eq!(rows(2, &[&[1], &[2]]).maj().unwrap(), 1);
        let composition = Filling::from_columns(2, vec![vec![1], vec![1, 2]]).unwrap();
        assert!(matches!(composition.maj(), Err(Error::NotPartitionShape(_))));
    }

    #[test]
    fn statistic_examples() {
        let f = running_example();
        assert_eq!(f.inv().unwrap(), 5);
        assert_eq!(f.quinv().unwrap(), 12);
        assert_eq!(f.refinv().unwrap(), 5);
        assert_eq!(f.quinv_triples().unwrap().len(), 12);
        assert_eq!(rows(2, &[&[2, 1]]).inv().unwrap(), 1);
        assert_eq!(rows(2, &[&[2, 1]]).quinv().unwrap(), 0);
        assert_eq!(rows(2, &[&[1, 2]]).quinv().unwrap(), 1);
        assert_eq!(f.rowsort().unwrap().inv().unwrap(), 0);
        assert_eq!(rows(3, &[&[1], &[2], &[3]]).refinv().unwrap(), 0);
        assert!(rows(3, &[&[1], &[2], &[3]]).quinv_triples().unwrap().is_empty());
    }

    #[test]
    fn triples_require_column_strictness() {
        let f = rows(2, &[&[2], &[1]]);
        assert_eq!(f.quinv_triples(), Err(Error::NotColumnStrict(Cell::new(2, 1))));
    }

    #[test]
    fn zcount_grid_of_worked_example() {
        let f = running_example();
        assert_eq!(
            f.z_grid(Stat::Quinv).unwrap(),
            vec![vec![0, 0, 0, 0, 1, 0, 2, 1, 1, 2], vec![0, 0, 0, 0, 0, 1], vec![0, 0, 2, 2]]
        );
        assert_eq!(f.zcount(Cell::new(1, 7)).unwrap(), 2);
        assert!(f.zcount(Cell::new(4, 1)).is_err());
        let total: usize = f.z_grid(Stat::Inv).unwrap().iter().flatten().sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn zcount_and_zcb_on_four_column_example() {
        let f = rows(4, &[&[1, 2, 1, 2], &[3, 4]]);
        assert_eq!(f.z_grid(Stat::Quinv).unwrap(), vec![vec![0, 1, 0, 2], vec![0, 1]]);
        assert_eq!(f.z_grid(Stat::Inv).unwrap(), vec![vec![0, 1, 0, 0], vec![0, 0]]);
        assert_eq!(f.zcb(Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(f.quinv_triples().unwrap().len(), 4);
    }

    #[test]
    fn cells_with_entry_examples() {
        let f = running_example();
        let cols = |i, j| f.cells_with_entry(i, j).unwrap().iter().map(|c| c.col).collect::<Vec<_>>();
        assert_eq!(cols(1, 1), vec![3, 5, 7]);
        assert_eq!(cols(1, 0), vec![1, 2, 4, 6]);
        assert_eq!(cols(3, 3), vec![3, 4]);
        assert!(rows(4, &[&[1, 2], &[3]]).cells_with_entry(2, 1).unwrap().is_empty());
        assert!(f.cells_with_entry(3, 1).is_err());
        assert!(f.cells_with_entry(1, 4).is_err());
    }

    #[test]
    fn rowsort_examples() {
        let f = rows(6, &[&[4, 1, 2, 1], &[5, 4, 3], &[6, 5]]);
        assert_eq!(f.rowsort().unwrap(), rows(6, &[&[1, 1, 2, 4], &[3, 4, 5], &[5, 6]]));
        let t = running_example().rowsort().unwrap();
        assert_eq!(t.to_string(), "1111222344/223334/3344");
        assert!(t.is_semistandard());
        assert_eq!(t.rowsort().unwrap(), t);
    }

    #[test]
    fn json_forms() {
        let f = rows(4, &[&[1, 2, 1, 2], &[3, 4]]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"n":4,"rows":[[1,2,1,2],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Filling>(&s).unwrap(), f);
        let g = Filling::from_columns(3, vec![vec![1], vec![1, 3]]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"columns":[[1],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<Filling>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Filling>(r#"{"n":2,"rows":[[3]]}"#).is_err());
        assert!(serde_json::from_str::<Filling>(r#"{"n":2,"rows":[[1],[1,2]]}"#).is_err());
    }
}
