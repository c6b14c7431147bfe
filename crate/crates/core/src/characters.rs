//! Polynomial identities: q-Whittaker expansions, modified Macdonald and
//! Schur polynomials, branching, renormalisation and the limit character of
//! the basic representation.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fillings::{enumerate_csf, enumerate_fillings, Filling, Stat};
use crate::par::Exec;
use crate::patterns::enumerate_gt;
use crate::qpoly::{qbinom, Monomial, QXPoly};
use crate::shapes::Partition;

/// Which combinatorial expansion to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Inv,
    Quinv,
    Fermionic,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Method::Inv),
            "quinv" => Ok(Method::Quinv),
            "fermionic" => Ok(Method::Fermionic),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

fn sum_polys(exec: Exec, n: usize, parts: Vec<QXPoly>) -> QXPoly {
    exec.map_reduce(&parts, || QXPoly::zero(n), Clone::clone, |a, b| a + b)
}

fn term(q: i64, t: i64, x: Vec<i32>) -> QXPoly {
    QXPoly::from_term(Monomial { q: q as i32, t: t as i32, x }, BigInt::one())
}

/// `Σ_{F ∈ CSF(λ)} x^F q^{stat(F)}`.
pub fn whittaker_by_stat(lambda: &Partition, n: usize, stat: Stat, exec: Exec) -> QXPoly {
    let csfs = enumerate_csf(lambda, n);
    exec.map_reduce(
        &csfs,
        || QXPoly::zero(n),
        |f| term(f.stat(stat).expect("partition shape"), 0, f.content()),
        |a, b| a + b,
    )
}

/// `Σ_{T ∈ GT(λ)} x^T wt_q(T)`.
pub fn whittaker_fermionic(lambda: &Partition, n: usize, exec: Exec) -> QXPoly {
    let gts = enumerate_gt(lambda, n);
    let parts = exec.map(&gts, |t| {
        let w = t.wt_q().with_vars(n).expect("q-only polynomial");
        w.shift(0, 0, &t.content()).expect("same length")
    });
    sum_polys(exec, n, parts)
}

pub fn whittaker(lambda: &Partition, n: usize, method: Method, exec: Exec) -> QXPoly {
    match method {
        Method::Inv => whittaker_by_stat(lambda, n, Stat::Inv, exec),
        Method::Quinv => whittaker_by_stat(lambda, n, Stat::Quinv, exec),
        Method::Fermionic => whittaker_fermionic(lambda, n, exec),
    }
}

/// `Σ_{F ∈ 𝓕(λ)} x^F q^{stat(F)} t^{maj(F)}` over all fillings.
pub fn modified_macdonald(lambda: &Partition, n: usize, stat: Stat, exec: Exec) -> QXPoly {
    let all = enumerate_fillings(lambda, n);
    exec.map_reduce(
        &all,
        || QXPoly::zero(n),
        |f| term(f.stat(stat).expect("partition shape"), f.maj().expect("partition shape") as i64, f.content()),
        |a, b| a + b,
    )
}

/// `Σ_{T ∈ GT(λ)} x^T`.
pub fn schur(lambda: &Partition, n: usize) -> QXPoly {
    let mut p = QXPoly::zero(n);
    for t in enumerate_gt(lambda, n) {
        p.add_term(Monomial { q: 0, t: 0, x: t.content() }, BigInt::one());
    }
    p
}

/// Partitions `μ` with at most `n − 1` parts and
/// `λ_{i+1} ≤ μ_i ≤ λ_i` (with `λ` padded to `n` parts).
fn interlacing_below(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    let l = lambda.padded(n);
    let mut out = vec![Vec::new()];
    for i in 0..n.saturating_sub(1) {
        let mut next = Vec::new();
        for mu in &out {
            for v in l[i + 1]..=l[i] {
                let mut m = mu.clone();
                m.push(v);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Right-hand side of the branching rule: `Σ_{μ ≺ λ} Π_i [λ_i−λ_{i+1}
/// choose λ_i−μ_i]_q · W_μ(X_{n−1}) · x_n^{|λ|−|μ|}`.
pub fn branching_sum(lambda: &Partition, n: usize, exec: Exec) -> Result<QXPoly> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, reason: "branching needs n >= 1" });
    }
    if lambda.len() > n {
        return Ok(QXPoly::zero(n));
    }
    let l = lambda.padded(n);
    let mut total = QXPoly::zero(n);
    for mu in interlacing_below(lambda, n) {
        let mut coeff = QXPoly::one(0);
        for i in 0..n - 1 {
            let b = qbinom((l[i] - mu[i]) as i64, (mu[i] - l[i + 1]) as i64)?;
            coeff = &coeff * &b;
        }
        let mu_p = Partition::new(mu.clone())?;
        let w_mu = if n == 1 {
            QXPoly::one(0)
        } else {
            whittaker(&mu_p, n - 1, Method::Fermionic, exec)
        };
        let mut shift = vec![0; n];
        shift[n - 1] = (lambda.size() - mu_p.size()) as i32;
        let piece = (&coeff.with_vars(n)? * &w_mu.with_vars(n)?).shift(0, 0, &shift)?;
        total = &total + &piece;
    }
    Ok(total)
}

/// Whether the branching rule reproduces `W_λ(X_n)` exactly.
pub fn branching_check(lambda: &Partition, n: usize, exec: Exec) -> Result<bool> {
    Ok(branching_sum(lambda, n, exec)? == whittaker(lambda, n, Method::Fermionic, exec))
}

/// `Σ c_i² − |γ|²/n` for `γ = (c_1, …, c_n)`.
pub fn norm_sq(gamma: &[i64]) -> Ratio<i64> {
    let n = gamma.len() as i64;
    if n == 0 {
        return Ratio::zero();
    }
    let sum: i64 = gamma.iter().sum();
    let sq: i64 = gamma.iter().map(|c| c * c).sum();
    Ratio::from_integer(sq) - Ratio::new(sum * sum, n)
}

/// `‖λ‖²/2` for `λ` padded to `n` parts; requires `n | |λ|`.
pub fn half_norm_sq(lambda: &Partition, n: usize) -> Result<i64> {
    if n == 0 || !lambda.size().is_multiple_of(n) || lambda.len() > n {
        return Err(Error::DivisibilityViolation { size: lambda.size(), n });
    }
    let gamma: Vec<i64> = lambda.padded(n).iter().map(|&c| c as i64).collect();
    let half = norm_sq(&gamma) / 2;
    if !half.is_integer() {
        return Err(Error::DivisibilityViolation { size: lambda.size(), n });
    }
    Ok(half.to_integer())
}

/// `q^{‖λ‖²/2} (x_1⋯x_n)^{−|λ|/n} W_λ(X_n; q⁻¹)`.
pub fn normalize_whittaker(lambda: &Partition, n: usize, exec: Exec) -> Result<QXPoly> {
    let h = half_norm_sq(lambda, n)?;
    let w = whittaker(lambda, n, Method::Fermionic, exec).invert_q();
    let shift = -((lambda.size() / n) as i32);
    w.shift(h as i32, 0, &vec![shift; n])
}

/// `Σ q^{‖γ‖²/2} x^γ` over `γ ∈ Zⁿ` with `|γ| = 0` and `‖γ‖²/2 ≤ D`.
pub fn theta_truncated(n: usize, d: usize) -> QXPoly {
    let mut p = QXPoly::zero(n);
    if n == 0 {
        return p;
    }
    let max_sq = 2 * d as i64;
    let bound = (max_sq as f64).sqrt().floor() as i64;
    let mut gamma = vec![0i64; n];

    fn go(pos: usize, sum: i64, sq: i64, bound: i64, max_sq: i64, gamma: &mut Vec<i64>, p: &mut QXPoly) {
        let n = gamma.len();
        if pos == n - 1 {
            let last = -sum;
            let total = sq + last * last;
            if total <= max_sq {
                gamma[pos] = last;
                let x = gamma.iter().map(|&g| g as i32).collect();
                p.add_term(Monomial { q: (total / 2) as i32, t: 0, x }, BigInt::one());
            }
            return;
        }
        for v in -bound..=bound {
            if sq + v * v > max_sq {
                continue;
            }
            gamma[pos] = v;
            go(pos + 1, sum + v, sq + v * v, bound, max_sq, gamma, p);
        }
    }

    go(0, 0, 0, bound, max_sq, &mut gamma, &mut p);
    p
}

/// Coefficients of `Π_{k≥1} (1 − q^k)^{−e}` up to `q^d`.
pub fn eta_inverse_series(e: usize, d: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[0] = BigInt::one();
    for k in 1..=d {
        for _ in 0..e {
            // multiply by 1/(1 − q^k)
            for m in k..=d {
                let prev = coeffs[m - k].clone();
                coeffs[m] += prev;
            }
        }
    }
    coeffs
}

/// `Θ(X_n, q) / Π_{k≥1}(1 − q^k)^{n−1}` truncated to `q`-degree `≤ D`.
pub fn chi_lambda0_truncated(n: usize, d: usize) -> QXPoly {
    let theta = theta_truncated(n, d);
    let eta = eta_inverse_series(n.saturating_sub(1), d);
    let mut out = QXPoly::zero(n);
    for (m, c) in theta.terms() {
        for (e, a) in eta.iter().enumerate() {
            let deg = m.q as usize + e;
            if deg > d {
                break;
            }
            out.add_term(Monomial { q: deg as i32, t: 0, x: m.x.clone() }, c * a);
        }
    }
    out
}

/// `θ = (2, 1, …, 1, 0)` with `n − 1` non-zero parts.
pub fn theta_shape(n: usize) -> Partition {
    Partition::empty().plus_k_theta(n, 1)
}

/// Prepends the column `(2, 3, …, n)` and appends the single cell `1`.
pub fn s_map(f: &Filling) -> Result<Filling> {
    let n = f.n();
    let mut cols = Vec::with_capacity(f.columns().len() + 2);
    cols.push((2..=n).collect::<Vec<_>>());
    cols.extend(f.columns().iter().cloned());
    cols.push(vec![1]);
    let g = Filling::from_columns(n, cols)?;
    g.partition_shape()?;
    Ok(g)
}

/// Membership in `C_k`: for `k = 0` every CSF of shape `λ`; for `k ≥ 1`,
/// `1` lies in the first column or not in the last column.
pub fn in_c_k(f: &Filling, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let cols = f.columns();
    let first_has_one = cols.first().is_some_and(|c| c.contains(&1));
    let last_has_one = cols.last().is_some_and(|c| c.contains(&1));
    first_has_one || !last_has_one
}

/// Contribution of `C_k(λ)` to `Σ x̄^F q^{‖λ+kθ‖²/2 − inv(F)}`, truncated to
/// `q`-degree `≤ D`.
pub fn chi_layer(lambda: &Partition, n: usize, k: usize, d: usize, exec: Exec) -> Result<QXPoly> {
    if lambda.len() >= n {
        return Err(Error::NotThetaShifted(lambda.parts().to_vec()));
    }
    let shape = lambda.plus_k_theta(n, k);
    let h = half_norm_sq(&shape, n)?;
    let shift = (shape.size() / n) as i32;
    let csfs = enumerate_csf(&shape, n);
    let layer = exec.map_reduce(
        &csfs,
        || QXPoly::zero(n),
        |f| {
            if !in_c_k(f, k) {
                return QXPoly::zero(n);
            }
            let e = h - f.inv().expect("partition shape");
            assert!(e >= 0, "negative exponent for {f}");
            if e as usize > d {
                return QXPoly::zero(n);
            }
            let x = f.content().iter().map(|c| c - shift).collect();
            term(e, 0, x)
        },
        |a, b| a + b,
    );
    Ok(layer)
}

/// `Σ_{k ≤ K} Σ_{F ∈ C_k(λ)} x̄^F q^{‖λ+kθ‖²/2 − inv(F)}`, truncated to
/// `q`-degree `≤ D`.
pub fn chi_via_csf(lambda: &Partition, n: usize, kmax: usize, d: usize, exec: Exec) -> Result<QXPoly> {
    let mut total = QXPoly::zero(n);
    for k in 0..=kmax {
        total = &total + &chi_layer(lambda, n, k, d, exec)?;
    }
    Ok(total)
}

/// Raises `K` until adding `C_K` no longer changes the truncation. Returns
/// the sum and the first `K` whose layer was empty below degree `D`.
pub fn chi_via_csf_stable(lambda: &Partition, n: usize, d: usize, cap: usize, exec: Exec) -> Result<(QXPoly, usize)> {
    let mut total = QXPoly::zero(n);
    for k in 0..=cap {
        let layer = chi_layer(lambda, n, k, d, exec)?;
        if layer.is_zero() && k > 0 {
            return Ok((total, k));
        }
        total = &total + &layer;
    }
    Err(Error::StabilizationCapExceeded(cap))
}
