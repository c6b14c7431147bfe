//! CL-basis monomials as formal words in `E_{p,q} ⊗ t^k`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fillings::{Filling, Stat};
use crate::patterns::Pop;

/// `E_{p,q} ⊗ t^t` with `p > q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub p: usize,
    pub q: usize,
    pub t: usize,
}

impl Atom {
    fn key(&self) -> (usize, usize, std::cmp::Reverse<usize>) {
        (self.p, self.q, std::cmp::Reverse(self.t))
    }

    fn render(&self) -> String {
        let t = match self.t {
            0 => "1".to_string(),
            1 => "t".to_string(),
            k => format!("t^{k}"),
        };
        format!("(E_{{{},{}}} ⊗ {t})", self.p, self.q)
    }
}

/// A product of atoms in canonical order: blocks by `p` ascending (the
/// ordered product over `j = p − 1`), then `q` ascending, then `t`
/// descending inside a commuting block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClWord {
    atoms: Vec<Atom>,
}

impl ClWord {
    pub fn new(mut atoms: Vec<Atom>) -> Self {
        atoms.sort_by_key(Atom::key);
        ClWord { atoms }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn t_degree(&self) -> usize {
        self.atoms.iter().map(|a| a.t).sum()
    }

    /// The word with every `t⁰` atom dropped.
    pub fn without_constant_atoms(&self) -> ClWord {
        ClWord { atoms: self.atoms.iter().copied().filter(|a| a.t > 0).collect() }
    }

    /// Text form with runs of equal atoms written as powers, e.g.
    /// `(E_{2,1} ⊗ t^2)(E_{4,1} ⊗ t)^2`. The empty word is `1`.
    pub fn render(&self) -> String {
        if self.atoms.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut idx = 0;
        while idx < self.atoms.len() {
            let a = self.atoms[idx];
            let run = self.atoms[idx..].iter().take_while(|&&b| b == a).count();
            out.push_str(&a.render());
            if run > 1 {
                let _ = write!(out, "^{run}");
            }
            idx += run;
        }
        out
    }
}

impl fmt::Display for ClWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One atom `E_{j+1,i} ⊗ t^m` per part `m` of each `Λ_ij`, zero parts
/// included.
pub fn cl_monomial(p: &Pop) -> ClWord {
    let atoms = p
        .overlay()
        .iter()
        .flat_map(|(&(i, j), parts)| parts.iter().map(move |&m| Atom { p: j + 1, q: i, t: m }))
        .collect();
    ClWord::new(atoms)
}

/// `Π E_{F(c), i(c)} ⊗ t^{z(c)}` over cells with `F(c) > i(c)`, where `z` is
/// `zcount` for `quinv` and `zcb` for `inv`.
pub fn b_stat(f: &Filling, stat: Stat) -> Result<ClWord> {
    f.partition_shape()?;
    let grid = f.z_grid(stat)?;
    let mut atoms = Vec::new();
    for (r, row) in f.rows().iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            if e > r + 1 {
                atoms.push(Atom { p: e, q: r + 1, t: grid[r][c] });
            }
        }
    }
    Ok(ClWord::new(atoms))
}

/// For each `(i, j)`, the values `zcount + zcb` over the cells of row `i`
/// holding `j + 1`, left to right.
pub fn z_sums_by_entry(f: &Filling) -> Result<BTreeMap<(usize, usize), Vec<usize>>> {
    let zc = f.z_grid(Stat::Quinv)?;
    let zb = f.z_grid(Stat::Inv)?;
    let mut out = BTreeMap::new();
    for j in 1..f.n() {
        for i in 1..=j {
            let sums = f
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == j + 1)
                .map(|(c, _)| zc[i - 1][c] + zb[i - 1][c])
                .collect();
            out.insert((i, j), sums);
        }
    }
    Ok(out)
}
