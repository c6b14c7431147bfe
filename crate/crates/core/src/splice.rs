//! Splicing of adjacent columns and the `dsplice` branching map.
//!
//! A column tuple is a strictly increasing list of entries read top to
//! bottom; position 0 carries the virtual value 0.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::shapes::Cell;

fn check_tuple(t: &[usize]) -> Result<()> {
    if t.windows(2).any(|w| w[0] >= w[1]) || t.first() == Some(&0) {
        return Err(Error::NonStrictColumn(t.to_vec()));
    }
    Ok(())
}

/// `m = max{1 ≤ i ≤ k+1 : σ_{i−1} < τ_i}` for `len σ = k < len τ`.
pub fn splice_index(sigma: &[usize], tau: &[usize]) -> Result<usize> {
    check_tuple(sigma)?;
    check_tuple(tau)?;
    let k = sigma.len();
    if k >= tau.len() {
        return Err(Error::IndexOutOfRange { index: k, reason: "splice index needs len(sigma) < len(tau)" });
    }
    let at = |i: usize| if i == 0 { 0 } else { sigma[i - 1] };
    Ok((1..=k + 1).rev().find(|&i| at(i - 1) < tau[i - 1]).expect("i = 1 always qualifies"))
}

/// Row from which the suffixes of the two columns are exchanged, or `None`
/// when the lengths agree and nothing moves.
pub fn swap_row(sigma: &[usize], tau: &[usize]) -> Result<Option<usize>> {
    use std::cmp::Ordering::*;
    match sigma.len().cmp(&tau.len()) {
        Less => splice_index(sigma, tau).map(Some),
        Greater => splice_index(tau, sigma).map(Some),
        Equal => {
            check_tuple(sigma)?;
            check_tuple(tau)?;
            Ok(None)
        }
    }
}

/// Exchanges the suffixes of `σ` and `τ` from the splice index on.
pub fn elementary_splice(sigma: &[usize], tau: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let Some(m) = swap_row(sigma, tau)? else {
        return Ok((sigma.to_vec(), tau.to_vec()));
    };
    let cut = |t: &[usize]| t.len().min(m - 1);
    let a: Vec<usize> = sigma[..cut(sigma)].iter().chain(&tau[cut(tau)..]).copied().collect();
    let b: Vec<usize> = tau[..cut(tau)].iter().chain(&sigma[cut(sigma)..]).copied().collect();
    Ok((a, b))
}

fn check_column_index(i: usize, f: &Filling) -> Result<()> {
    if i == 0 || i >= f.columns().len() {
        return Err(Error::IndexOutOfRange { index: i, reason: "need 1 <= i < number of columns" });
    }
    Ok(())
}

/// Replaces columns `i, i+1` (1-based) by their elementary splice.
pub fn s_i(i: usize, f: &Filling) -> Result<Filling> {
    check_column_index(i, f)?;
    let mut cols = f.columns().to_vec();
    let (a, b) = elementary_splice(&cols[i - 1], &cols[i])?;
    cols[i - 1] = a;
    cols[i] = b;
    Filling::from_columns(f.n(), cols)
}

/// Cell correspondence `c ↦ c̃` of `S_i`: for every cell of `F`, the cell
/// of `S_i(F)` its entry moves to.
pub fn splice_cell_map(i: usize, f: &Filling) -> Result<BTreeMap<Cell, Cell>> {
    check_column_index(i, f)?;
    let m = swap_row(&f.columns()[i - 1], &f.columns()[i])?;
    Ok(f.cells()
        .into_iter()
        .map(|c| {
            let moved = match m {
                Some(m) if c.row >= m && c.col == i => Cell::new(c.row, i + 1),
                Some(m) if c.row >= m && c.col == i + 1 => Cell::new(c.row, i),
                _ => c,
            };
            (c, moved)
        })
        .collect())
}

/// One step of a `dsplice` run: the column lengths before the step and the
/// splice position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpliceStep {
    pub shape: Vec<usize>,
    pub index: usize,
}

fn delete_entry_n(f: &Filling) -> Vec<Vec<usize>> {
    let n = f.n();
    f.columns().iter().map(|c| c.iter().copied().filter(|&e| e != n).collect()).collect()
}

fn legal_indices(cols: &[Vec<usize>]) -> Vec<usize> {
    (1..cols.len()).filter(|&j| cols[j].len() > cols[j - 1].len()).collect()
}

fn finish(n: usize, mut cols: Vec<Vec<usize>>) -> Filling {
    while cols.last().is_some_and(Vec::is_empty) {
        cols.pop();
    }
    Filling::from_columns(n.saturating_sub(1), cols).expect("entries below n remain in range")
}

fn splice_columns(cols: &mut [Vec<usize>], j: usize) {
    let (a, b) = elementary_splice(&cols[j - 1], &cols[j]).expect("columns stay strict");
    cols[j - 1] = a;
    cols[j] = b;
}

/// Deletes the cells holding `n`, then splices at the smallest legal
/// position until the shape is a partition. Returns the steps taken.
pub fn dsplice_traced(f: &Filling) -> Result<(Filling, Vec<SpliceStep>)> {
    f.partition_shape()?;
    if !f.is_column_strict() {
        return Err(Error::NotColumnStrict(first_violation(f)));
    }
    let mut cols = delete_entry_n(f);
    let mut steps = Vec::new();
    while let Some(&j) = legal_indices(&cols).first() {
        steps.push(SpliceStep { shape: cols.iter().map(Vec::len).collect(), index: j });
        splice_columns(&mut cols, j);
    }
    Ok((finish(f.n(), cols), steps))
}

fn first_violation(f: &Filling) -> Cell {
    f.cells()
        .into_iter()
        .find(|&c| c.up().is_some_and(|u| f.get(u) >= f.get(c)))
        .unwrap_or(Cell::new(1, 1))
}

pub fn dsplice(f: &Filling) -> Result<Filling> {
    dsplice_traced(f).map(|(g, _)| g)
}

/// Every result reachable by some order of legal splice choices. Fails once
/// more than `budget` distinct intermediate states have been explored.
pub fn dsplice_outcomes(f: &Filling, budget: usize) -> Result<BTreeSet<Filling>> {
    f.partition_shape()?;
    if !f.is_column_strict() {
        return Err(Error::NotColumnStrict(first_violation(f)));
    }
    type Memo = BTreeMap<Vec<Vec<usize>>, BTreeSet<Vec<Vec<usize>>>>;

    fn explore(cols: Vec<Vec<usize>>, memo: &mut Memo, budget: usize) -> Result<BTreeSet<Vec<Vec<usize>>>> {
        if let Some(done) = memo.get(&cols) {
            return Ok(done.clone());
        }
        if memo.len() >= budget {
            return Err(Error::SearchBudgetExceeded(budget));
        }
        let choices = legal_indices(&cols);
        let mut out = BTreeSet::new();
        if choices.is_empty() {
            out.insert(cols.clone());
        }
        for j in choices {
            let mut next = cols.clone();
            splice_columns(&mut next, j);
            out.extend(explore(next, memo, budget)?);
        }
        memo.insert(cols, out.clone());
        Ok(out)
    }

    let mut memo = Memo::new();
    let finals = explore(delete_entry_n(f), &mut memo, budget)?;
    Ok(finals.into_iter().map(|c| finish(f.n(), c)).collect())
}

/// Whether every maximal sequence of legal splices ends at the same filling.
pub fn dsplice_confluent(f: &Filling, budget: usize) -> Result<bool> {
    Ok(dsplice_outcomes(f, budget)?.len() == 1)
}
