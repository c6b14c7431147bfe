//! Coloured lattice paths on an `n × n` grid of tiles, one path per column
//! of a filling, and the readout of both overlays from their crossings.
//!
//! Tiles are addressed by `(column label, row label)`: column labels run
//! `n..1` left to right, row labels `1..n` top to bottom. `X_ij` is the tile
//! `(i, j + 1)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bijections::require_csf;
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::patterns::{GTPattern, Overlay, Pop};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TileType {
    /// vertical pass-through
    I,
    /// enters on the right, turns down
    II,
    /// enters at the top, exits left
    III,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Occupancy {
    pub col: usize,
    pub row: usize,
    pub kind: TileType,
}

/// The path of one filling column, in drawing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strand {
    /// 0-based index of the filling column.
    pub column: usize,
    pub entries: Vec<usize>,
    pub occupancies: Vec<Occupancy>,
}

/// Filling-column indices of the strands crossing a tile, by type, in
/// increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TileProfile {
    pub type_i: Vec<usize>,
    pub type_ii: Vec<usize>,
    pub type_iii: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeEnsemble {
    n: usize,
    strands: Vec<Strand>,
    tiles: BTreeMap<(usize, usize), TileProfile>,
}

/// Circles in one tile as `(type-I column, type-II column)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TileCircles {
    pub solid: Vec<(usize, usize)>,
    pub open: Vec<(usize, usize)>,
}

pub type CircleMap = BTreeMap<(usize, usize), TileCircles>;

impl LatticeEnsemble {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn num_strands(&self) -> usize {
        self.strands.len()
    }

    /// Profiles of all non-empty tiles.
    pub fn tiles(&self) -> &BTreeMap<(usize, usize), TileProfile> {
        &self.tiles
    }

    pub fn tile(&self, col: usize, row: usize) -> TileProfile {
        self.tiles.get(&(col, row)).cloned().unwrap_or_default()
    }

    /// The tile `X_ij`.
    pub fn x_tile(&self, i: usize, j: usize) -> TileProfile {
        self.tile(i, j + 1)
    }

    pub fn is_decluttered(&self) -> bool {
        self.tiles.values().all(|t| t.type_iii.is_empty())
    }

    fn from_strands(n: usize, strands: Vec<Strand>) -> Self {
        let mut tiles: BTreeMap<(usize, usize), TileProfile> = BTreeMap::new();
        for s in &strands {
            for o in &s.occupancies {
                let t = tiles.entry((o.col, o.row)).or_default();
                match o.kind {
                    TileType::I => t.type_i.push(s.column),
                    TileType::II => t.type_ii.push(s.column),
                    TileType::III => t.type_iii.push(s.column),
                }
            }
        }
        LatticeEnsemble { n, strands, tiles }
    }
}

fn strand(n: usize, column: usize, entries: &[usize]) -> Strand {
    let k = entries.len();
    let mut occupancies = Vec::new();
    for t in 1..=k {
        let top = entries[t - 1];
        let next = entries.get(t).copied();
        occupancies.push(Occupancy { col: t, row: top, kind: TileType::II });
        for row in top + 1..next.unwrap_or(n + 1) {
            occupancies.push(Occupancy { col: t, row, kind: TileType::I });
        }
        if let Some(row) = next {
            occupancies.push(Occupancy { col: t, row, kind: TileType::III });
        }
    }
    Strand { column, entries: entries.to_vec(), occupancies }
}

/// One strand per column of `F`. For the column `i_1 < … < i_k`: type II in
/// `(t, i_t)`, type I below it down to the next entry (or to row `n` when
/// `t = k`), type III in `(t, i_{t+1})`.
pub fn build_ensemble(f: &Filling) -> Result<LatticeEnsemble> {
    require_csf(f)?;
    let n = f.n();
    let strands = f.columns().iter().enumerate().map(|(c, col)| strand(n, c, col)).collect();
    Ok(LatticeEnsemble::from_strands(n, strands))
}

/// Drops every type-III occupancy.
pub fn declutter(e: &LatticeEnsemble) -> LatticeEnsemble {
    let strands = e
        .strands
        .iter()
        .map(|s| Strand {
            occupancies: s.occupancies.iter().copied().filter(|o| o.kind != TileType::III).collect(),
            ..s.clone()
        })
        .collect();
    LatticeEnsemble::from_strands(e.n, strands)
}

/// Pairs every type-I strand `x` with every type-II strand `z` of the same
/// tile: solid when `x` is left of `z` in the filling, open otherwise.
/// Type-III occupancies play no part.
pub fn mark_circles(e: &LatticeEnsemble) -> CircleMap {
    let mut out = CircleMap::new();
    for (&key, t) in &e.tiles {
        if t.type_i.is_empty() || t.type_ii.is_empty() {
            continue;
        }
        let mut c = TileCircles::default();
        for &x in &t.type_i {
            for &z in &t.type_ii {
                if x < z {
                    c.solid.push((x, z));
                } else {
                    c.open.push((x, z));
                }
            }
        }
        out.insert(key, c);
    }
    out
}

/// `(ψ_quinv(F), ψ_inv(F))` read off the ensemble: the GT pattern from the
/// type-II counts, `Λ_ij` from solid circles per type-II strand right to
/// left, `Λ̄_ij` from open circles per type-II strand left to right.
pub fn extract_overlays(e: &LatticeEnsemble, circles: &CircleMap) -> Result<(Pop, Pop)> {
    let n = e.n;
    let rows = (1..=n)
        .map(|j| (1..=j).map(|i| (i..=j).map(|r| e.tile(i, r).type_ii.len()).sum()).collect())
        .collect();
    let gt = GTPattern::new(n, rows)?;

    let mut solid = Overlay::new();
    let mut open = Overlay::new();
    for j in 1..n {
        for i in 1..=j {
            let t = e.x_tile(i, j);
            let c = circles.get(&(i, j + 1)).cloned().unwrap_or_default();
            let count = |pairs: &[(usize, usize)], z: usize| pairs.iter().filter(|p| p.1 == z).count();
            solid.insert((i, j), t.type_ii.iter().rev().map(|&z| count(&c.solid, z)).collect());
            open.insert((i, j), t.type_ii.iter().map(|&z| count(&c.open, z)).collect());
        }
    }
    Ok((Pop::new(gt.clone(), solid)?, Pop::new(gt, open)?))
}

/// Build, declutter, mark and extract in one go.
pub fn readout(f: &Filling) -> Result<(Pop, Pop)> {
    let e = declutter(&build_ensemble(f)?);
    extract_overlays(&e, &mark_circles(&e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Text,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "text" => Ok(RenderFormat::Text),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn render(e: &LatticeEnsemble, format: &str) -> Result<String> {
    Ok(match format.parse()? {
        RenderFormat::Svg => render_svg(e),
        RenderFormat::Text => render_text(e),
    })
}

const PALETTE: [&str; 10] = [
    "#00bcd4", "#8d6e63", "#e53935", "#43a047", "#ec407a", "#1e88e5", "#827717", "#8e24aa", "#c0ca33", "#fb8c00",
];

pub fn render_svg(e: &LatticeEnsemble) -> String {
    const T: f64 = 60.0;
    const M: f64 = 30.0;
    let n = e.n;
    let d = e.num_strands();
    let side = n as f64 * T;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = side + 2.0 * M
    );
    s.push_str("<g stroke=\"#000\" stroke-width=\"1\">\n");
    for k in 0..=n {
        let p = M + k as f64 * T;
        let _ = writeln!(s, r#"<line x1="{M}" y1="{p}" x2="{}" y2="{p}"/>"#, M + side);
        let _ = writeln!(s, r#"<line x1="{p}" y1="{M}" x2="{p}" y2="{}"/>"#, M + side);
    }
    s.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
    for k in 0..n {
        let mid = M + (k as f64 + 0.5) * T;
        let _ = writeln!(s, r#"<text x="{mid}" y="{}">{}</text>"#, M - 8.0, n - k);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, M - 12.0, mid + 4.0, k + 1);
    }
    s.push_str("</g>\n");

    let left = |col: usize| M + (n - col) as f64 * T;
    let top = |row: usize| M + (row - 1) as f64 * T;
    let vx = |col: usize, c: usize| left(col) + (d - c) as f64 / (d + 1) as f64 * T;
    let hy = |row: usize, c: usize| top(row) + T - (c + 1) as f64 / (d + 1) as f64 * T;

    for st in &e.strands {
        let c = st.column;
        let mut path = String::new();
        for o in &st.occupancies {
            let (x, y) = (vx(o.col, c), hy(o.row, c));
            let (l, t) = (left(o.col), top(o.row));
            let _ = match o.kind {
                TileType::I => write!(path, "M{x} {t}L{x} {} ", t + T),
                TileType::II => write!(path, "M{} {y}L{x} {y}L{x} {} ", l + T, t + T),
                TileType::III => write!(path, "M{x} {t}L{x} {y}L{l} {y} "),
            };
        }
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="2" stroke-linecap="round"/>"#,
            path.trim_end(),
            PALETTE[c % PALETTE.len()]
        );
    }
    for (&(col, row), circ) in &mark_circles(e) {
        for (pairs, fill) in [(&circ.solid, "#000"), (&circ.open, "#fff")] {
            for &(x, z) in pairs {
                let _ = writeln!(
                    s,
                    r##"<circle cx="{}" cy="{}" r="2.5" fill="{fill}" stroke="#000"/>"##,
                    vx(col, x),
                    hy(row, z)
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

fn heavy(dirs: u8) -> char {
    match dirs {
        d if d == LEFT | RIGHT => '━',
        d if d == UP | DOWN => '┃',
        d if d == RIGHT | DOWN => '┏',
        d if d == LEFT | DOWN => '┓',
        d if d == RIGHT | UP => '┗',
        d if d == LEFT | UP => '┛',
        d if d == LEFT => '╸',
        d if d == RIGHT => '╺',
        d if d == UP => '╹',
        d if d == DOWN => '╻',
        _ => '╋',
    }
}

fn light(dirs: u8) -> char {
    match dirs {
        d if d == LEFT | RIGHT => '─',
        d if d == UP | DOWN => '│',
        d if d == RIGHT | DOWN => '┌',
        d if d == LEFT | DOWN => '┐',
        d if d == RIGHT | UP => '└',
        d if d == LEFT | UP => '┘',
        d if d == UP | DOWN | RIGHT => '├',
        d if d == UP | DOWN | LEFT => '┤',
        d if d == LEFT | RIGHT | DOWN => '┬',
        d if d == LEFT | RIGHT | UP => '┴',
        0 => ' ',
        _ => '┼',
    }
}

fn glyph(path: u8, border: u8) -> char {
    match (path, border) {
        (0, b) => light(b),
        (p, 0) => heavy(p),
        (p, _) if p == LEFT | RIGHT => '┿',
        (p, _) if p == UP | DOWN => '╂',
        (LEFT, _) => '┥',
        (RIGHT, _) => '┝',
        (UP, _) => '┸',
        (DOWN, _) => '┰',
        (p, _) => heavy(p),
    }
}

/// Box-drawing picture: light lines for the grid, heavy lines for paths,
/// `●` and `○` for solid and open circles.
pub fn render_text(e: &LatticeEnsemble) -> String {
    let n = e.n;
    let d = e.num_strands();
    let u = (d + 1).max(2);
    let size = n * u + 1;
    let mut path = vec![vec![0u8; size]; size];
    let border_at = |r: usize, c: usize| {
        let mut b = 0;
        if r.is_multiple_of(u) {
            if c > 0 {
                b |= LEFT;
            }
            if c + 1 < size {
                b |= RIGHT;
            }
        }
        if c.is_multiple_of(u) {
            if r > 0 {
                b |= UP;
            }
            if r + 1 < size {
                b |= DOWN;
            }
        }
        b
    };

    // tile origin (top-left char) of (col, row), and the strand offsets
    let origin = |col: usize, row: usize| ((row - 1) * u, (n - col) * u);
    let vx = |c: usize| d - c;
    let hy = |c: usize| u - (c + 1);

    let vertical = |path: &mut Vec<Vec<u8>>, r0: usize, r1: usize, x: usize| {
        path[r0][x] |= DOWN;
        for row in path.iter_mut().take(r1).skip(r0 + 1) {
            row[x] |= UP | DOWN;
        }
        path[r1][x] |= UP;
    };
    let horizontal = |path: &mut Vec<Vec<u8>>, y: usize, c0: usize, c1: usize| {
        path[y][c0] |= RIGHT;
        for cell in path[y].iter_mut().take(c1).skip(c0 + 1) {
            *cell |= LEFT | RIGHT;
        }
        path[y][c1] |= LEFT;
    };

    for st in &e.strands {
        let c = st.column;
        for o in &st.occupancies {
            let (r0, c0) = origin(o.col, o.row);
            let (x, y) = (c0 + vx(c), r0 + hy(c));
            match o.kind {
                TileType::I => vertical(&mut path, r0, r0 + u, x),
                TileType::II => {
                    horizontal(&mut path, y, x, c0 + u);
                    vertical(&mut path, y, r0 + u, x);
                }
                TileType::III => {
                    vertical(&mut path, r0, y, x);
                    horizontal(&mut path, y, c0, x);
                }
            }
        }
    }
    // strands leave the grid at the bottom and enter on the right
    for cell in path[size - 1].iter_mut() {
        if *cell & UP != 0 {
            *cell |= DOWN;
        }
    }
    for row in path.iter_mut() {
        if row[size - 1] & LEFT != 0 {
            row[size - 1] |= RIGHT;
        }
    }

    let mut grid: Vec<Vec<char>> =
        (0..size).map(|r| (0..size).map(|c| glyph(path[r][c], border_at(r, c))).collect()).collect();
    for (&(col, row), circ) in &mark_circles(e) {
        let (r0, c0) = origin(col, row);
        for &(x, z) in &circ.solid {
            grid[r0 + hy(z)][c0 + vx(x)] = '●';
        }
        for &(x, z) in &circ.open {
            grid[r0 + hy(z)][c0 + vx(x)] = '○';
        }
    }

    let margin = n.to_string().len() + 1;
    let mut out = String::new();
    let mut header = vec![' '; margin + size];
    for k in 0..n {
        let label: Vec<char> = (n - k).to_string().chars().collect();
        let at = margin + k * u + u / 2;
        for (off, ch) in label.into_iter().enumerate() {
            if at + off < header.len() {
                header[at + off] = ch;
            }
        }
    }
    out.push_str(header.iter().collect::<String>().trim_end());
    out.push('\n');
    for (r, line) in grid.iter().enumerate() {
        let label = if r % u == u / 2 && r / u < n { (r / u + 1).to_string() } else { String::new() };
        let _ = write!(out, "{label:>w$} ", w = margin - 1);
        out.extend(line.iter());
        out.push('\n');
    }
    out
}
