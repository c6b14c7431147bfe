//! Gelfand-Tsetlin patterns and partition overlaid patterns (POPs).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::qpoly::{box_tuples, qbinom, QXPoly};
use crate::shapes::Partition;

/// Triangular array `T^j_i`, `1 ≤ i ≤ j ≤ n`; `rows[j-1]` is row `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GTPattern {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GTJson {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for GTPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GTJson::deserialize(d)?;
        GTPattern::new(j.n, j.rows).map_err(serde::de::Error::custom)
    }
}

impl GTPattern {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::InvalidPattern(format!("expected {n} rows, got {}", rows.len())));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Err(Error::InvalidPattern(format!("row {} has {} entries", j + 1, row.len())));
            }
        }
        for j in 1..n {
            let (upper, lower) = (&rows[j - 1], &rows[j]);
            for i in 0..j {
                if !(lower[i] >= upper[i] && upper[i] >= lower[i + 1]) {
                    return Err(Error::InvalidPattern(format!(
                        "row {} does not interlace row {} at position {}",
                        j,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(GTPattern { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The bottom row `λ`.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.last().cloned().unwrap_or_default()).expect("bottom row is a partition")
    }

    /// `T^j_i`, with `T^j_{j+1} = 0` and `T^0 = ∅`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        if j == 0 || i > j {
            0
        } else {
            self.rows[j - 1][i - 1]
        }
    }

    fn check_ij(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j + 1 || j + 1 > self.n {
            return Err(Error::IndexOutOfRange { index: j, reason: "need 1 <= i <= j+1 <= n" });
        }
        Ok(())
    }

    /// `T^{j+1}_i − T^j_i`.
    pub fn ne(&self, i: usize, j: usize) -> Result<usize> {
        self.check_ij(i, j)?;
        Ok(self.entry(i, j + 1) - self.entry(i, j))
    }

    /// `T^j_i − T^{j+1}_{i+1}`.
    pub fn se(&self, i: usize, j: usize) -> Result<usize> {
        self.check_ij(i, j)?;
        Ok(self.entry(i, j) - self.entry(i + 1, j + 1))
    }

    /// Index pairs `(i, j)` with `1 ≤ i ≤ j < n`, ordered by `j` then `i`.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        overlay_pairs(self.n)
    }

    /// `Π qbinom(NE_ij, SE_ij)`, a polynomial in `q` alone.
    pub fn wt_q(&self) -> QXPoly {
        let mut w = QXPoly::one(0);
        for (i, j) in self.index_pairs() {
            let b = qbinom(self.ne(i, j).unwrap() as i64, self.se(i, j).unwrap() as i64).expect("non-negative");
            w = &w * &b;
        }
        w
    }

    /// `Σ NE_ij · SE_ij`.
    pub fn area(&self) -> usize {
        self.index_pairs().into_iter().map(|(i, j)| self.ne(i, j).unwrap() * self.se(i, j).unwrap()).sum()
    }

    /// Exponent of `x_j` is `|row j| − |row j−1|`.
    pub fn content(&self) -> Vec<i32> {
        let sums: Vec<usize> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..self.n).map(|j| (sums[j] - if j == 0 { 0 } else { sums[j - 1] }) as i32).collect()
    }

    pub fn x_weight(&self) -> QXPoly {
        QXPoly::monomial(0, &self.content())
    }

    /// `T^j_i` = number of entries `≤ j` in row `i` of `S`.
    pub fn from_ssyt(s: &Filling) -> Result<Self> {
        if !s.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        let n = s.n();
        if s.num_rows() > n {
            return Err(Error::NotSemistandard);
        }
        let rows = (1..=n)
            .map(|j| (1..=j).map(|i| s.row(i).iter().filter(|&&e| e <= j).count()).collect())
            .collect();
        GTPattern::new(n, rows)
    }

    pub fn to_ssyt(&self) -> Filling {
        let lambda = self.shape();
        let rows = (1..=lambda.len())
            .map(|i| {
                let mut row = Vec::new();
                for j in i..=self.n {
                    let count = self.entry(i, j) - self.entry(i, j - 1);
                    row.extend(std::iter::repeat_n(j, count));
                }
                row
            })
            .collect();
        Filling::from_rows(self.n, rows).expect("a valid pattern gives a valid tableau")
    }

    /// Pattern with the bottom row removed.
    pub fn truncate(&self) -> Result<GTPattern> {
        if self.n <= 1 {
            return Err(Error::IndexOutOfRange { index: self.n, reason: "cannot delete the only row" });
        }
        Ok(GTPattern { n: self.n - 1, rows: self.rows[..self.n - 1].to_vec() })
    }
}

/// `(i, j)` with `1 ≤ i ≤ j < n`, ordered by `j` then `i`.
pub fn overlay_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect()
}

/// All GT patterns with bottom row `λ` (padded to `n`), in lexicographic
/// order of their rows read top-down.
pub fn enumerate_gt(lambda: &Partition, n: usize) -> Vec<GTPattern> {
    if lambda.len() > n {
        return Vec::new();
    }
    fn fill(upper_of: &[usize], pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == upper_of.len() {
            out.push(cur.clone());
            return;
        }
        for v in upper_of[pos + 1]..=upper_of[pos] {
            cur.push(v);
            fill(upper_of, pos + 1, cur, out);
            cur.pop();
        }
    }
    let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![lambda.padded(n)]];
    for _ in 1..n {
        let mut next = Vec::new();
        for stack in partial {
            let below = stack.last().expect("non-empty");
            let mut choices = Vec::new();
            fill(below, 0, &mut Vec::new(), &mut choices);
            for c in choices {
                let mut s = stack.clone();
                s.push(c);
                next.push(s);
            }
        }
        partial = next;
    }
    let mut out: Vec<GTPattern> = partial
        .into_iter()
        .map(|mut stack| {
            stack.reverse();
            GTPattern { n, rows: stack }
        })
        .collect();
    out.sort();
    out
}

/// Overlay data `Λ_ij`, each stored with exactly `NE_ij` parts.
pub type Overlay = BTreeMap<(usize, usize), Vec<usize>>;

/// A GT pattern together with a partition in each `NE_ij × SE_ij` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pop {
    gt: GTPattern,
    overlay: Overlay,
}

impl Pop {
    /// Missing keys are read as zero partitions; shorter part lists are
    /// zero-padded to `NE_ij` parts.
    pub fn new(gt: GTPattern, overlay: Overlay) -> Result<Self> {
        for &(i, j) in overlay.keys() {
            if i == 0 || i > j || j >= gt.n() {
                return Err(Error::InvalidOverlay { i, j, reason: "index outside 1 <= i <= j < n".into() });
            }
        }
        let mut full = Overlay::new();
        for (i, j) in gt.index_pairs() {
            let (k, l) = (gt.ne(i, j)?, gt.se(i, j)?);
            let mut parts = overlay.get(&(i, j)).cloned().unwrap_or_default();
            if parts.len() > k {
                if parts[k..].iter().any(|&p| p != 0) {
                    return Err(Error::InvalidOverlay { i, j, reason: format!("more than {k} non-zero parts") });
                }
                parts.truncate(k);
            }
            parts.resize(k, 0);
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidOverlay { i, j, reason: "parts are not weakly decreasing".into() });
            }
            if parts.first().is_some_and(|&p| p > l) {
                return Err(Error::InvalidOverlay { i, j, reason: format!("part exceeds box width {l}") });
            }
            full.insert((i, j), parts);
        }
        Ok(Pop { gt, overlay: full })
    }

    pub fn gt(&self) -> &GTPattern {
        &self.gt
    }

    pub fn n(&self) -> usize {
        self.gt.n()
    }

    pub fn overlay(&self) -> &Overlay {
        &self.overlay
    }

    /// `Λ_ij` (zero-padded to `NE_ij` parts).
    pub fn part(&self, i: usize, j: usize) -> &[usize] {
        self.overlay.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// `|Λ|`.
    pub fn weight(&self) -> usize {
        self.overlay.values().flatten().sum()
    }

    /// Complements every overlay inside its box.
    pub fn bcomp(&self) -> Pop {
        let overlay = self
            .overlay
            .iter()
            .map(|(&(i, j), parts)| {
                let l = self.gt.se(i, j).unwrap();
                ((i, j), parts.iter().rev().map(|&p| l - p).collect())
            })
            .collect();
        Pop { gt: self.gt.clone(), overlay }
    }

    pub fn pr(&self) -> &GTPattern {
        &self.gt
    }

    /// Drops the bottom row of the pattern and the overlays with `j = n−1`.
    pub fn br(&self) -> Result<Pop> {
        let gt = self.gt.truncate()?;
        let n = gt.n();
        let overlay = self.overlay.iter().filter(|(&(_, j), _)| j < n).map(|(k, v)| (*k, v.clone())).collect();
        Ok(Pop { gt, overlay })
    }

    pub fn x_weight(&self) -> QXPoly {
        self.gt.x_weight()
    }
}

/// Every overlay of `T`, ordered lexicographically by the list of
/// zero-padded parts taken over [`overlay_pairs`].
pub fn enumerate_overlays(t: &GTPattern) -> Vec<Overlay> {
    let pairs = t.index_pairs();
    let choices: Vec<Vec<Vec<usize>>> =
        pairs.iter().map(|&(i, j)| box_tuples(t.ne(i, j).unwrap(), t.se(i, j).unwrap())).collect();
    let mut out = vec![Overlay::new()];
    for (idx, opts) in choices.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for base in &out {
            for o in opts {
                let mut m = base.clone();
                m.insert(pairs[idx], o.clone());
                next.push(m);
            }
        }
        out = next;
    }
    out
}

pub fn enumerate_pop(lambda: &Partition, n: usize) -> Vec<Pop> {
    enumerate_gt(lambda, n)
        .into_iter()
        .flat_map(|gt| {
            enumerate_overlays(&gt).into_iter().map(move |overlay| Pop { gt: gt.clone(), overlay })
        })
        .collect()
}

/// `Σ_Λ q^{|Λ|}` over the overlays of `T`, by enumeration.
pub fn overlay_generating_function(t: &GTPattern) -> QXPoly {
    let mut p = QXPoly::zero(0);
    for o in enumerate_overlays(t) {
        let w: usize = o.values().flatten().sum();
        p.add_term(crate::qpoly::Monomial { q: w as i32, t: 0, x: vec![] }, BigInt::one());
    }
    p
}

#[derive(Serialize, Deserialize)]
struct PopJson {
    gt: GTPattern,
    overlay: BTreeMap<String, Vec<usize>>,
}

impl Serialize for Pop {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PopJson {
            gt: self.gt.clone(),
            overlay: self.overlay.iter().map(|(&(i, j), v)| (format!("{i},{j}"), v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pop {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PopJson::deserialize(d)?;
        let mut overlay = Overlay::new();
        for (key, parts) in j.overlay {
            let (a, b) = key.split_once(',').ok_or_else(|| D::Error::custom(format!("bad overlay key {key:?}")))?;
            let i = a.trim().parse().map_err(|_| D::Error::custom(format!("bad overlay key {key:?}")))?;
            let jj = b.trim().parse().map_err(|_| D::Error::custom(format!("bad overlay key {key:?}")))?;
            overlay.insert((i, jj), parts);
        }
        Pop::new(j.gt, overlay).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn running_gt() -> GTPattern {
        GTPattern::new(4, vec![vec![4], vec![7, 2], vec![8, 5, 2], vec![10, 6, 4, 0]]).unwrap()
    }

    fn running_pop() -> Pop {
        let overlay = [
            ((1, 1), vec![2, 1, 0]),
            ((1, 2), vec![2]),
            ((1, 3), vec![1, 1]),
            ((2, 2), vec![0, 0, 0]),
            ((2, 3), vec![1]),
            ((3, 3), vec![2, 2]),
        ]
        .into_iter()
        .collect();
        Pop::new(running_gt(), overlay).unwrap()
    }

    #[test]
    fn ssyt_correspondence() {
        let s = Filling::from_rows(
            4,
            vec![vec![1, 1, 1, 1, 2, 2, 2, 3, 4, 4], vec![2, 2, 3, 3, 3, 4], vec![3, 3, 4, 4]],
        )
        .unwrap();
        assert_eq!(GTPattern::from_ssyt(&s).unwrap(), running_gt());
        assert_eq!(running_gt().to_ssyt(), s);
        let one_row = Filling::from_rows(1, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(GTPattern::from_ssyt(&one_row).unwrap().rows(), &[vec![3]]);
        let gts = enumerate_gt(&part(&[2, 1]), 3);
        assert_eq!(gts.len(), 8);
        for t in gts {
            assert_eq!(GTPattern::from_ssyt(&t.to_ssyt()).unwrap(), t);
        }
        let bad = Filling::from_rows(2, vec![vec![2, 1]]).unwrap();
        assert_eq!(GTPattern::from_ssyt(&bad), Err(Error::NotSemistandard));
    }

    #[test]
    fn rejects_non_interlacing_rows() {
        assert!(GTPattern::new(2, vec![vec![3], vec![2, 1]]).is_err());
        assert!(GTPattern::new(2, vec![vec![1], vec![2]]).is_err());
    }

    #[test]
    fn ne_se_examples() {
        let t = running_gt();
        assert_eq!((t.ne(1, 1).unwrap(), t.se(1, 1).unwrap()), (3, 2));
        assert_eq!(t.se(2, 2).unwrap(), 0);
        assert_eq!(t.se(3, 2).unwrap(), 0);
        assert!(t.ne(1, 4).is_err());
        let flat = GTPattern::new(3, vec![vec![2], vec![2, 0], vec![2, 0, 0]]).unwrap();
        assert!(flat.index_pairs().iter().all(|&(i, j)| flat.ne(i, j).unwrap() == 0));
    }

    #[test]
    fn wt_q_and_area() {
        let t = running_gt();
        let mut expected = QXPoly::one(0);
        for (k, l) in [(3, 2), (1, 2), (2, 2), (3, 0), (1, 1), (2, 2)] {
            expected = &expected * &qbinom(k, l).unwrap();
        }
        assert_eq!(t.wt_q(), expected);
        assert_eq!(t.area(), 17);
        assert_eq!(t.wt_q().max_q_degree(), Some(17));
        assert_eq!(GTPattern::new(1, vec![vec![5]]).unwrap().wt_q(), QXPoly::one(0));
        for t in enumerate_gt(&part(&[3, 1]), 3) {
            assert_eq!(t.wt_q(), overlay_generating_function(&t));
            assert_eq!(t.wt_q().eval_at_one(), BigInt::from(enumerate_overlays(&t).len()));
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_gt(&part(&[1]), 2).len(), 2);
        assert!(enumerate_gt(&part(&[1, 1, 1]), 2).is_empty());
        let pops = enumerate_pop(&part(&[2, 1]), 3);
        let expected: BigInt = enumerate_gt(&part(&[2, 1]), 3).iter().map(|t| t.wt_q().eval_at_one()).sum();
        assert_eq!(BigInt::from(pops.len()), expected);
    }

    #[test]
    fn bcomp_examples() {
        let p = running_pop();
        let c = p.bcomp();
        assert_eq!(c.part(1, 1), &[2, 1, 0]);
        assert_eq!(c.part(3, 3), &[0, 0]);
        assert_eq!(p.weight() + c.weight(), p.gt().area());
        for p in enumerate_pop(&part(&[2, 1]), 3) {
            assert_eq!(p.bcomp().bcomp(), p);
            assert_eq!(p.bcomp().br().unwrap(), p.br().unwrap().bcomp());
        }
    }

    #[test]
    fn branching_of_worked_example() {
        let b = running_pop().br().unwrap();
        assert_eq!(b.gt().rows(), &[vec![4], vec![7, 2], vec![8, 5, 2]]);
        assert_eq!(b.part(1, 1), &[2, 1, 0]);
        assert_eq!(b.part(1, 2), &[2]);
        assert_eq!(b.part(2, 2), &[0, 0, 0]);
        assert_eq!(b.overlay().len(), 3);
        let single = GTPattern::new(1, vec![vec![2]]).unwrap();
        assert!(Pop::new(single, Overlay::new()).unwrap().br().is_err());
    }

    #[test]
    fn overlay_validation() {
        let mut o = Overlay::new();
        o.insert((1, 1), vec![3]);
        assert!(matches!(Pop::new(running_gt(), o), Err(Error::InvalidOverlay { i: 1, j: 1, .. })));
        let mut o = Overlay::new();
        o.insert((1, 1), vec![0, 1]);
        assert!(Pop::new(running_gt(), o).is_err());
        let mut o = Overlay::new();
        o.insert((1, 2), vec![1, 1]);
        assert!(Pop::new(running_gt(), o).is_err());
    }

    #[test]
    fn pop_json_round_trip() {
        let p = running_pop();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"gt":{"n":4,"rows":[[4],[7,2],[8,5,2],[10,6,4,0]]},"overlay":{"1,1":[2,1,0]"#));
        assert_eq!(serde_json::from_str::<Pop>(&s).unwrap(), p);
    }
}
