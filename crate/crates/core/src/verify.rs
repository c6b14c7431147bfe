//! Exhaustive identity suites over all partitions with at most `max_cells`
//! cells and all `n ≤ max_n`. Each suite stops at the first failure in a
//! fixed canonical order and reports it as JSON.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::{omega, psi, psi_inverse};
use crate::characters::{branching_check, chi_lambda0_truncated, chi_via_csf_stable, modified_macdonald, whittaker, Method};
use crate::clbasis::{b_stat, cl_monomial, z_sums_by_entry};
use crate::error::{Error, Result};
use crate::fillings::{enumerate_csf, enumerate_csf_composition, Filling, Stat};
use crate::lattice::{build_ensemble, declutter, extract_overlays, mark_circles};
use crate::par::Exec;
use crate::patterns::{enumerate_pop, GTPattern, Pop};
use crate::qpoly::QXPoly;
use crate::shapes::{ColumnComposition, Partition};
use crate::splice::{dsplice, dsplice_outcomes, s_i};

pub const SUITES: &[&str] = &[
    "bijection-roundtrip",
    "squares",
    "fiber",
    "omega",
    "dsplice-confluence",
    "splice-relations",
    "whittaker-three-way",
    "branching",
    "macdonald",
    "cl-words",
    "lattice-readout",
    "limit",
];

/// Intermediate states explored per filling when checking confluence.
pub const CONFLUENCE_BUDGET: usize = 200_000;
/// Largest `K` tried by the limit suite.
pub const STABILIZATION_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_cells: usize,
    pub max_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_cells: 6, max_n: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub suite: String,
    pub check: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Failure = (String, Value);

fn fail(check: &str, witness: Value) -> Option<Failure> {
    Some((check.to_string(), witness))
}

fn ensure(ok: bool, check: &str, witness: impl FnOnce() -> Value) -> Option<Failure> {
    if ok {
        None
    } else {
        fail(check, witness())
    }
}

fn on_error<T>(r: Result<T>, check: &str, witness: impl FnOnce() -> Value) -> std::result::Result<T, Failure> {
    r.map_err(|e| {
        let mut w = witness();
        w["error"] = json!(e.to_string());
        (check.to_string(), w)
    })
}

fn fjson(f: &Filling) -> Value {
    serde_json::to_value(f).unwrap_or(Value::Null)
}

fn pjson(p: &Pop) -> Value {
    serde_json::to_value(p).unwrap_or(Value::Null)
}

fn poly_json(p: &QXPoly) -> Value {
    serde_json::to_value(p.to_json_terms()).unwrap_or(Value::Null)
}

/// `(n, λ)` with `1 ≤ n ≤ max_n`, `|λ| ≤ max_cells`, `ℓ(λ) ≤ n`.
pub fn shapes(b: Bounds, min_n: usize) -> Vec<(usize, Partition)> {
    (min_n.max(1)..=b.max_n)
        .flat_map(|n| Partition::all_up_to(b.max_cells, n).into_iter().map(move |l| (n, l)))
        .collect()
}

/// Every CSF in canonical order: by `n`, then shape, then filling.
pub fn csf_cases(b: Bounds, min_n: usize) -> Vec<Filling> {
    shapes(b, min_n).into_iter().flat_map(|(n, l)| enumerate_csf(&l, n)).collect()
}

fn first_failure<T: Sync>(items: &[T], exec: Exec, check: impl Fn(&T) -> Option<Failure> + Sync + Send) -> Option<Failure> {
    exec.find_first(items, |t| check(t).is_some()).and_then(|i| check(&items[i]))
}

fn report(suite: &str, cases: usize, failure: Option<Failure>) -> SuiteReport {
    SuiteReport {
        suite: suite.to_string(),
        cases,
        counterexample: failure.map(|(check, witness)| Counterexample { suite: suite.to_string(), check, witness }),
    }
}

pub fn run_suite(name: &str, b: Bounds, exec: Exec) -> Result<SuiteReport> {
    match name {
        "bijection-roundtrip" => Ok(bijection_roundtrip(b, exec)),
        "squares" => Ok(squares(b, exec)),
        "fiber" => Ok(fiber(b, exec)),
        "omega" => Ok(omega_suite(b, exec)),
        "dsplice-confluence" => Ok(dsplice_confluence(b, exec)),
        "splice-relations" => Ok(splice_relations(b, exec)),
        "whittaker-three-way" => Ok(whittaker_three_way(b, exec)),
        "branching" => Ok(branching(b, exec)),
        "macdonald" => Ok(macdonald(b, exec)),
        "cl-words" => Ok(cl_words(b, exec)),
        "lattice-readout" => Ok(lattice_readout(b, exec)),
        "limit" => Ok(limit(b, exec)),
        other => Err(Error::Malformed(format!("unknown suite {other:?}"))),
    }
}

const STATS: [Stat; 2] = [Stat::Inv, Stat::Quinv];

pub fn bijection_roundtrip(b: Bounds, exec: Exec) -> SuiteReport {
    let csfs = csf_cases(b, 1);
    let forward = first_failure(&csfs, exec, |f| {
        for stat in STATS {
            let w = || json!({ "filling": fjson(f), "stat": stat.name() });
            let p = match on_error(psi(f, stat), "psi", w) {
                Ok(p) => p,
                Err(e) => return Some(e),
            };
            let back = match on_error(psi_inverse(&p, stat), "psi_inverse", w) {
                Ok(g) => g,
                Err(e) => return Some(e),
            };
            if let Some(e) = ensure(&back == f, "psi_inverse(psi(F)) = F", || {
                json!({ "filling": fjson(f), "stat": stat.name(), "got": fjson(&back) })
            }) {
                return Some(e);
            }
            let weight_ok = f.stat(stat).ok() == Some(p.weight() as i64) && f.x_weight() == p.x_weight();
            if let Some(e) = ensure(weight_ok, "weight preserved", w) {
                return Some(e);
            }
        }
        None
    });
    if forward.is_some() {
        return report("bijection-roundtrip", csfs.len(), forward);
    }
    let pops: Vec<Pop> = shapes(b, 1).into_iter().flat_map(|(n, l)| enumerate_pop(&l, n)).collect();
    let backward = first_failure(&pops, exec, |p| {
        for stat in STATS {
            let w = || json!({ "pop": pjson(p), "stat": stat.name() });
            let again = psi_inverse(p, stat).and_then(|f| psi(&f, stat));
            match on_error(again, "psi(psi_inverse(P))", w) {
                Ok(q) if &q == p => {}
                Ok(q) => return fail("psi(psi_inverse(P)) = P", json!({ "pop": pjson(p), "stat": stat.name(), "got": pjson(&q) })),
                Err(e) => return Some(e),
            }
        }
        None
    });
    report("bijection-roundtrip", csfs.len() + pops.len(), backward)
}

pub fn squares(b: Bounds, exec: Exec) -> SuiteReport {
    let csfs = csf_cases(b, 1);
    let failure = first_failure(&csfs, exec, |f| {
        let w = || json!({ "filling": fjson(f) });
        let run = || -> Result<Option<Failure>> {
            let t = GTPattern::from_ssyt(&f.rowsort()?)?;
            let pq = psi(f, Stat::Quinv)?;
            let pi = psi(f, Stat::Inv)?;
            if pq.pr() != &t || pi.pr() != &t {
                return Ok(fail("pr . psi = gt . rowsort", w()));
            }
            if pq != pi.bcomp() {
                return Ok(fail("psi_quinv = bcomp . psi_inv", w()));
            }
            if f.n() >= 2 {
                let g = dsplice(f)?;
                for (stat, p) in [(Stat::Quinv, &pq), (Stat::Inv, &pi)] {
                    if psi(&g, stat)? != p.br()? {
                        return Ok(fail(
                            "psi . dsplice = br . psi",
                            json!({ "filling": fjson(f), "stat": stat.name(), "dsplice": fjson(&g) }),
                        ));
                    }
                }
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| fail("squares", json!({ "filling": fjson(f), "error": e.to_string() })))
    });
    report("squares", csfs.len(), failure)
}

/// CSFs grouped by rowsort, in canonical order of the rowsort.
fn fibers(b: Bounds) -> Vec<(Filling, Vec<Filling>)> {
    let mut out = Vec::new();
    for (n, l) in shapes(b, 1) {
        let mut groups: BTreeMap<Filling, Vec<Filling>> = BTreeMap::new();
        for f in enumerate_csf(&l, n) {
            groups.entry(f.rowsort().expect("partition shape")).or_default().push(f);
        }
        out.extend(groups);
    }
    out
}

pub fn fiber(b: Bounds, exec: Exec) -> SuiteReport {
    let groups = fibers(b);
    let failure = first_failure(&groups, exec, |(t, fs)| {
        let gt = GTPattern::from_ssyt(t).expect("rowsort is semistandard");
        let wt = gt.wt_q();
        let mut by_inv = QXPoly::zero(0);
        let mut by_quinv = QXPoly::zero(0);
        for f in fs {
            let (i, q) = (f.inv().unwrap_or(-1), f.quinv().unwrap_or(-1));
            if i + q != gt.area() as i64 {
                return fail("inv + quinv = area(T)", json!({ "filling": fjson(f), "inv": i, "quinv": q, "area": gt.area() }));
            }
            by_inv = &by_inv + &QXPoly::q_pow(0, i as i32);
            by_quinv = &by_quinv + &QXPoly::q_pow(0, q as i32);
        }
        ensure(by_inv == wt && by_quinv == wt, "fiber sums equal wt_q(T)", || {
            json!({ "rowsort": fjson(t), "inv_sum": poly_json(&by_inv), "quinv_sum": poly_json(&by_quinv), "wt_q": poly_json(&wt) })
        })
    });
    report("fiber", groups.len(), failure)
}

pub fn omega_suite(b: Bounds, exec: Exec) -> SuiteReport {
    let csfs = csf_cases(b, 1);
    let failure = first_failure(&csfs, exec, |f| {
        let run = || -> Result<Option<Failure>> {
            let g = omega(f)?;
            let w = || json!({ "filling": fjson(f), "omega": fjson(&g) });
            if &omega(&g)? != f {
                return Ok(fail("omega^2 = id", w()));
            }
            if g.inv()? != f.quinv()? || g.quinv()? != f.inv()? {
                return Ok(fail("inv . omega = quinv", w()));
            }
            Ok(ensure(g.rowsort()? == f.rowsort()?, "rowsort . omega = rowsort", w))
        };
        run().unwrap_or_else(|e| fail("omega", json!({ "filling": fjson(f), "error": e.to_string() })))
    });
    report("omega", csfs.len(), failure)
}

pub fn dsplice_confluence(b: Bounds, exec: Exec) -> SuiteReport {
    let csfs = csf_cases(b, 1);
    let failure = first_failure(&csfs, exec, |f| match dsplice_outcomes(f, CONFLUENCE_BUDGET) {
        Ok(out) if out.len() == 1 && dsplice(f).ok().as_ref() == out.first() => None,
        Ok(out) => fail(
            "all splice orders agree",
            json!({ "filling": fjson(f), "outcomes": out.iter().map(fjson).collect::<Vec<_>>() }),
        ),
        Err(e) => fail("all splice orders agree", json!({ "filling": fjson(f), "error": e.to_string() })),
    });
    report("dsplice-confluence", csfs.len(), failure)
}

/// CSFs of every column composition of every partition in range.
pub fn composition_cases(b: Bounds) -> Vec<Filling> {
    shapes(b, 1)
        .into_iter()
        .flat_map(|(n, l)| {
            ColumnComposition::all_of(&l)
                .into_iter()
                .flat_map(move |g| enumerate_csf_composition(&g, n))
        })
        .collect()
}

pub fn splice_relations(b: Bounds, exec: Exec) -> SuiteReport {
    let cases = composition_cases(b);
    let failure = first_failure(&cases, exec, |f| {
        let m = f.columns().len();
        let apply = |ops: &[usize]| ops.iter().try_fold(f.clone(), |g, &i| s_i(i, &g));
        for i in 1..m {
            if apply(&[i, i]).ok().as_ref() != Some(f) {
                return fail("S_i^2 = id", json!({ "filling": fjson(f), "i": i }));
            }
            if i + 2 <= m && apply(&[i, i + 1, i]).ok() != apply(&[i + 1, i, i + 1]).ok() {
                return fail("S_i S_i+1 S_i = S_i+1 S_i S_i+1", json!({ "filling": fjson(f), "i": i }));
            }
            for j in i + 2..m {
                if apply(&[i, j]).ok() != apply(&[j, i]).ok() {
                    return fail("S_i S_j = S_j S_i", json!({ "filling": fjson(f), "i": i, "j": j }));
                }
            }
        }
        None
    });
    report("splice-relations", cases.len(), failure)
}

pub fn whittaker_three_way(b: Bounds, exec: Exec) -> SuiteReport {
    let cases = shapes(b, 1);
    let failure = cases.iter().find_map(|(n, l)| {
        let inv = whittaker(l, *n, Method::Inv, exec);
        let quinv = whittaker(l, *n, Method::Quinv, exec);
        let ferm = whittaker(l, *n, Method::Fermionic, exec);
        ensure(inv == quinv && quinv == ferm, "inv = quinv = fermionic", || {
            json!({ "shape": l.parts(), "n": n, "inv": poly_json(&inv), "quinv": poly_json(&quinv), "fermionic": poly_json(&ferm) })
        })
    });
    report("whittaker-three-way", cases.len(), failure)
}

pub fn branching(b: Bounds, exec: Exec) -> SuiteReport {
    let cases = shapes(b, 2);
    let failure = cases.iter().find_map(|(n, l)| match branching_check(l, *n, exec) {
        Ok(true) => None,
        Ok(false) => fail("branching rule", json!({ "shape": l.parts(), "n": n })),
        Err(e) => fail("branching rule", json!({ "shape": l.parts(), "n": n, "error": e.to_string() })),
    });
    report("branching", cases.len(), failure)
}

pub fn macdonald(b: Bounds, exec: Exec) -> SuiteReport {
    let cases = shapes(b, 1);
    let failure = cases.iter().find_map(|(n, l)| {
        let hi = modified_macdonald(l, *n, Stat::Inv, exec);
        let hq = modified_macdonald(l, *n, Stat::Quinv, exec);
        let w = || json!({ "shape": l.parts(), "n": n });
        if hi != hq {
            return fail("inv and quinv variants agree", w());
        }
        let top = hi.t_coefficient(l.n_stat() as i32);
        ensure(top == whittaker(l, *n, Method::Inv, exec), "t^n(lambda) coefficient = whittaker", w)
    });
    report("macdonald", cases.len(), failure)
}

pub fn cl_words(b: Bounds, exec: Exec) -> SuiteReport {
    let groups = fibers(b);
    let failure = first_failure(&groups, exec, |(t, fs)| {
        let reference = z_sums_by_entry(&fs[0]).ok();
        for f in fs {
            for stat in STATS {
                let w = || json!({ "filling": fjson(f), "stat": stat.name() });
                let lhs = b_stat(f, stat).ok();
                let rhs = psi(f, stat).ok().map(|p| cl_monomial(&p));
                if lhs.is_none() || lhs != rhs {
                    return fail("b_stat = cl_monomial . psi_stat", w());
                }
                let deg = lhs.map(|l| l.t_degree() as i64);
                if deg != f.stat(stat).ok() {
                    return fail("t-degree = stat", w());
                }
            }
            if z_sums_by_entry(f).ok() != reference {
                return fail("zcount + zcb constant on fiber", json!({ "rowsort": fjson(t), "filling": fjson(f) }));
            }
        }
        None
    });
    report("cl-words", groups.len(), failure)
}

pub fn lattice_readout(b: Bounds, exec: Exec) -> SuiteReport {
    let csfs = csf_cases(b, 1);
    let failure = first_failure(&csfs, exec, |f| {
        let run = || -> Result<Option<Failure>> {
            let e = declutter(&build_ensemble(f)?);
            let t = GTPattern::from_ssyt(&f.rowsort()?)?;
            for (i, j) in t.index_pairs() {
                let x = e.x_tile(i, j);
                if x.type_ii.len() != t.ne(i, j)? || x.type_i.len() != t.se(i, j)? {
                    return Ok(fail("tile counts = (NE, SE)", json!({ "filling": fjson(f), "i": i, "j": j })));
                }
            }
            let circles = mark_circles(&e);
            let (solid, open) = circles.values().fold((0, 0), |(s, o), c| (s + c.solid.len(), o + c.open.len()));
            if solid as i64 != f.quinv()? || open as i64 != f.inv()? {
                return Ok(fail("circle totals = (quinv, inv)", json!({ "filling": fjson(f), "solid": solid, "open": open })));
            }
            let (pq, pi) = extract_overlays(&e, &circles)?;
            Ok(ensure(pq == psi(f, Stat::Quinv)? && pi == psi(f, Stat::Inv)?, "extract_overlays = (psi_quinv, psi_inv)", || {
                json!({ "filling": fjson(f), "quinv": pjson(&pq), "inv": pjson(&pi) })
            }))
        };
        run().unwrap_or_else(|e| fail("lattice", json!({ "filling": fjson(f), "error": e.to_string() })))
    });
    report("lattice-readout", csfs.len(), failure)
}

/// Largest truncation degree checked by the limit suite.
pub const LIMIT_DEGREE: usize = 4;

/// `χ` from CSFs against `Θ/η` for `2 ≤ n ≤ min(max_n, 3)` and `D ≤ 4`.
pub fn limit(b: Bounds, exec: Exec) -> SuiteReport {
    let cases: Vec<(usize, usize)> =
        (2..=b.max_n.min(3)).flat_map(|n| (0..=LIMIT_DEGREE).map(move |d| (n, d))).collect();
    let failure = cases.iter().find_map(|&(n, d)| {
        let expected = chi_lambda0_truncated(n, d);
        match chi_via_csf_stable(&Partition::empty(), n, d, STABILIZATION_CAP, exec) {
            Ok((got, _)) => ensure(got == expected, "chi via CSFs = theta / eta", || {
                json!({ "n": n, "degree": d, "csf": poly_json(&got), "theta_eta": poly_json(&expected) })
            }),
            Err(e) => fail("chi via CSFs = theta / eta", json!({ "n": n, "degree": d, "error": e.to_string() })),
        }
    });
    report("limit", cases.len(), failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass_everywhere() {
        let b = Bounds { max_cells: 3, max_n: 3 };
        for name in SUITES.iter().filter(|&&s| s != "limit") {
            let r = run_suite(name, b, Exec::default()).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.counterexample);
            assert!(r.cases > 0, "{name}");
        }
        assert!(run_suite("nope", b, Exec::Sequential).is_err());
    }

    #[test]
    fn first_failure_is_canonical() {
        let items: Vec<usize> = (0..1000).collect();
        let check = |&x: &usize| if x % 7 == 3 && x > 100 { fail("x", json!(x)) } else { None };
        let seq = first_failure(&items, Exec::Sequential, check);
        let par = first_failure(&items, Exec::Parallel, check);
        assert_eq!(seq, par);
        assert_eq!(seq.unwrap().1, json!(101));
    }
}
