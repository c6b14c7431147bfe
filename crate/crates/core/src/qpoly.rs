//! Exact sparse Laurent polynomials in `q`, `t` and `x_1..x_n` with
//! arbitrary-precision integer coefficients, plus Gaussian binomials.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;

/// Exponent vector of a single term. Ordered by `q`, then `t`, then the
/// `x`-exponents lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: i32,
    pub t: i32,
    pub x: Vec<i32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { q: 0, t: 0, x: vec![0; n] }
    }
}

/// Polynomial in `q`, `t` and `n` x-variables. Polynomials without `t`
/// simply have every `t`-exponent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QXPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Polynomials that also track `t` (modified Macdonald expansions) use the
/// same representation.
pub type TPoly = QXPoly;

impl QXPoly {
    pub fn zero(n: usize) -> Self {
        QXPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_term(Monomial::one(n), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.x.len());
        p.add_term(m, c);
        p
    }

    /// `q^q_exp · x^x`.
    pub fn monomial(q_exp: i32, x: &[i32]) -> Self {
        Self::from_term(Monomial { q: q_exp, t: 0, x: x.to_vec() }, BigInt::one())
    }

    /// `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut x = vec![0; n];
        x[i - 1] = 1;
        Self::monomial(0, &x)
    }

    /// `q^e` in `n` variables.
    pub fn q_pow(n: usize, e: i32) -> Self {
        Self::from_term(Monomial { q: e, t: 0, x: vec![0; n] }, BigInt::one())
    }

    /// Univariate polynomial in `q` (no x-variables) from coefficients of
    /// `q^0, q^1, …`.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero(0);
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial { q: e as i32, t: 0, x: vec![] }, c.clone().into());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.x.len(), self.n, "monomial has the wrong number of x-variables");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m = Monomial {
                    q: a.q + b.q,
                    t: a.t + b.t,
                    x: a.x.iter().zip(&b.x).map(|(u, v)| u + v).collect(),
                };
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn coeff_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Multiplies every term by `q^dq t^dt x^dx`.
    pub fn shift(&self, dq: i32, dt: i32, dx: &[i32]) -> Result<Self> {
        if dx.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: dx.len() });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let x = m.x.iter().zip(dx).map(|(a, b)| a + b).collect();
                (Monomial { q: m.q + dq, t: m.t + dt, x }, c.clone())
            })
            .collect();
        Ok(QXPoly { n: self.n, terms })
    }

    /// Multiplies by `(x_1 ⋯ x_n)^k`.
    pub fn mul_x_product_power(&self, k: i32) -> Self {
        self.shift(0, 0, &vec![k; self.n]).expect("same length")
    }

    /// Substitutes `q → 0`. Fails when a negative power of `q` is present.
    pub fn at_q_zero(&self) -> Result<Self> {
        if self.terms.keys().any(|m| m.q < 0) {
            return Err(Error::Malformed("cannot set q = 0 with negative q powers present".into()));
        }
        let terms = self.terms.iter().filter(|(m, _)| m.q == 0).map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(QXPoly { n: self.n, terms })
    }

    /// Substitutes `q → q⁻¹`.
    pub fn invert_q(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial { q: -m.q, ..m.clone() }, c.clone()))
            .collect();
        QXPoly { n: self.n, terms }
    }

    /// Substitutes `q → 1` (keeping `t` and `x`).
    pub fn at_q_one(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(Monomial { q: 0, ..m.clone() }, c.clone());
        }
        out
    }

    /// Value at `q = t = x_i = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Swaps `x_a` and `x_b` (1-based).
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut x = m.x.clone();
                x.swap(a - 1, b - 1);
                (Monomial { x, ..m.clone() }, c.clone())
            })
            .collect();
        QXPoly { n: self.n, terms }
    }

    /// Re-embeds into `n` variables, appending zero exponents. Dropping a
    /// variable is only allowed when it never occurs.
    pub fn with_vars(&self, n: usize) -> Result<Self> {
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            if m.x.iter().skip(n).any(|&e| e != 0) {
                return Err(Error::VariableCountMismatch { left: self.n, right: n });
            }
            let mut x: Vec<i32> = m.x.iter().copied().take(n).collect();
            x.resize(n, 0);
            out.add_term(Monomial { x, ..m.clone() }, c.clone());
        }
        Ok(out)
    }

    /// Drops every term of `q`-degree above `max`.
    pub fn truncate_q(&self, max: i32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.q <= max).map(|(m, c)| (m.clone(), c.clone())).collect();
        QXPoly { n: self.n, terms }
    }

    pub fn min_q_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.q).min()
    }

    pub fn max_q_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn max_t_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.t).max()
    }

    /// Coefficient of `t^k`, as a `t`-free polynomial.
    pub fn t_coefficient(&self, k: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.t == k)
            .map(|(m, c)| (Monomial { t: 0, ..m.clone() }, c.clone()))
            .collect();
        QXPoly { n: self.n, terms }
    }

    /// Part whose x-exponent vector equals `x`, as a polynomial in `q`, `t`.
    pub fn x_slice(&self, x: &[i32]) -> Self {
        let mut out = Self::zero(0);
        for (m, c) in &self.terms {
            if m.x == x {
                out.add_term(Monomial { q: m.q, t: m.t, x: vec![] }, c.clone());
            }
        }
        out
    }

    /// Coefficients of `q^0..=q^max` for a univariate `q`-polynomial.
    pub fn q_coeffs(&self) -> Vec<BigInt> {
        let top = self.max_q_degree().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (top + 1).max(0) as usize];
        for (m, c) in &self.terms {
            if m.q >= 0 {
                out[m.q as usize] += c;
            }
        }
        out
    }

    pub fn is_palindromic_in_q(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_q_degree(), self.max_q_degree()) else {
            return true;
        };
        self.terms.iter().all(|(m, c)| self.coeff_of(&Monomial { q: lo + hi - m.q, ..m.clone() }) == *c)
    }

    /// Serializable term list in canonical order.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                q: m.q,
                x: m.x.clone(),
                t: (m.t != 0).then_some(m.t),
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[JsonTerm]) -> Result<Self> {
        let mut out = Self::zero(n);
        for term in terms {
            if term.x.len() != n {
                return Err(Error::VariableCountMismatch { left: n, right: term.x.len() });
            }
            let c: BigInt = term.c.parse().map_err(|_| Error::Malformed(format!("bad coefficient {:?}", term.c)))?;
            out.add_term(Monomial { q: term.q, t: term.t.unwrap_or(0), x: term.x.clone() }, c);
        }
        Ok(out)
    }
}

/// JSON form of one term: `{"q": int, "x": [int,…], "t": int?, "c": "decimal"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub q: i32,
    pub x: Vec<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<i32>,
    pub c: String,
}

impl Add for &QXPoly {
    type Output = QXPoly;

    /// Panics on a variable-count mismatch; use [`QXPoly::checked_add`] to
    /// handle it.
    fn add(self, rhs: Self) -> QXPoly {
        self.checked_add(rhs).expect("variable counts differ")
    }
}

impl Sub for &QXPoly {
    type Output = QXPoly;

    fn sub(self, rhs: Self) -> QXPoly {
        self.checked_sub(rhs).expect("variable counts differ")
    }
}

impl Mul for &QXPoly {
    type Output = QXPoly;

    fn mul(self, rhs: Self) -> QXPoly {
        self.checked_mul(rhs).expect("variable counts differ")
    }
}

impl Add for QXPoly {
    type Output = QXPoly;

    fn add(mut self, rhs: Self) -> QXPoly {
        assert_eq!(self.n, rhs.n, "variable counts differ");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for &QXPoly {
    type Output = QXPoly;

    fn neg(self) -> QXPoly {
        QXPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

fn write_qt(out: &mut String, q: i32, t: i32) {
    for (sym, e) in [("q", q), ("t", t)] {
        match e {
            0 => {}
            1 => out.push_str(sym),
            _ => {
                let _ = write!(out, "{sym}^{e}");
            }
        }
    }
}

fn format_coeff_poly(terms: &[(i32, i32, &BigInt)]) -> String {
    let mut s = String::new();
    for (idx, (q, t, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let abs = c.abs();
        let bare = *q == 0 && *t == 0;
        if bare || !abs.is_one() {
            let _ = write!(s, "{abs}");
        }
        write_qt(&mut s, *q, *t);
    }
    s
}

impl fmt::Display for QXPoly {
    /// Groups terms by x-monomial (x_1-heavy first) with the `q`,`t`
    /// coefficient in front, e.g. `x1^2 + (1+q) x1 x2 + x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        type Groups<'a> = BTreeMap<std::cmp::Reverse<Vec<i32>>, Vec<(i32, i32, &'a BigInt)>>;
        let mut groups: Groups = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(std::cmp::Reverse(m.x.clone())).or_default().push((m.t, m.q, c));
        }
        let several = groups.len() > 1;
        let mut first = true;
        for (std::cmp::Reverse(x), mut coeffs) in groups {
            coeffs.sort();
            let coeffs: Vec<(i32, i32, &BigInt)> = coeffs.into_iter().map(|(t, q, c)| (q, t, c)).collect();
            let mut xs = String::new();
            for (i, &e) in x.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !xs.is_empty() {
                    xs.push(' ');
                }
                if e == 1 {
                    let _ = write!(xs, "x{}", i + 1);
                } else {
                    let _ = write!(xs, "x{}^{}", i + 1, e);
                }
            }
            let mut coeff = format_coeff_poly(&coeffs);
            let mut negative = false;
            if coeffs.len() == 1 {
                if let Some(stripped) = coeff.strip_prefix('-') {
                    negative = true;
                    coeff = stripped.to_string();
                }
            }
            let body = if xs.is_empty() && several && coeffs.len() > 1 {
                format!("({coeff})")
            } else if xs.is_empty() {
                coeff
            } else if coeffs.len() > 1 {
                format!("({coeff}) {xs}")
            } else if coeff == "1" {
                xs
            } else {
                format!("{coeff} {xs}")
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Gaussian binomial `[k+l choose k]_q`: the generating function of
/// partitions fitting in a `k × l` box. The result has no x-variables.
pub fn qbinom(k: i64, l: i64) -> Result<QXPoly> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    if l < 0 {
        return Err(Error::NegativeArgument(l));
    }
    Ok(QXPoly::from_q_coeffs(&qbinom_coeffs(k as usize, l as usize)))
}

/// Coefficient list of `[k+l choose k]_q` via
/// `G(k,l) = G(k-1,l) + q^k G(k,l-1)`.
pub fn qbinom_coeffs(k: usize, l: usize) -> Vec<BigInt> {
    // row[b] holds G(a, b) for the current a.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]; l + 1];
    for a in 1..=k {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(l + 1);
        next.push(vec![BigInt::one()]);
        for b in 1..=l {
            let left = &row[b];
            let down = &next[b - 1];
            let len = (a * b) + 1;
            let mut v = vec![BigInt::zero(); len];
            for (e, c) in left.iter().enumerate() {
                v[e] += c;
            }
            for (e, c) in down.iter().enumerate() {
                v[e + a] += c;
            }
            next.push(v);
        }
        row = next;
    }
    row.pop().unwrap_or_else(|| vec![BigInt::one()])
}

/// Zero-padded `k`-tuples of partitions fitting in a `k × l` box, in
/// lexicographic order of the padded tuple.
pub fn box_tuples(k: usize, l: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, k: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            go(pos + 1, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, l, &mut Vec::with_capacity(k), &mut out);
    // the recursion emits the first coordinate slowest, which is lexicographic
    // only once later coordinates are bounded by earlier ones; sort to be safe
    out.sort();
    out
}

pub fn box_partitions(k: usize, l: usize) -> Vec<Partition> {
    box_tuples(k, l).into_iter().map(|t| Partition::new(t).expect("weakly decreasing")).collect()
}

/// `a_p = γ_p + (k − p)`: partitions in the `k × l` box to strictly
/// decreasing `k`-tuples bounded by `k + l − 1`.
pub fn strict_tuple_from_partition(gamma: &[usize], k: usize, l: usize) -> Result<Vec<usize>> {
    let fits = gamma.len() <= k.max(gamma.iter().filter(|&&g| g > 0).count())
        && gamma.iter().skip(k).all(|&g| g == 0)
        && gamma.iter().all(|&g| g <= l)
        && gamma.windows(2).all(|w| w[0] >= w[1]);
    if !fits {
        return Err(Error::BoxViolation { parts: gamma.to_vec(), rows: k, cols: l });
    }
    Ok((1..=k).map(|p| gamma.get(p - 1).copied().unwrap_or(0) + (k - p)).collect())
}

/// Inverse of [`strict_tuple_from_partition`]; returns the zero-padded tuple.
pub fn partition_from_strict_tuple(a: &[usize], k: usize, l: usize) -> Result<Vec<usize>> {
    let ok = a.len() == k
        && a.windows(2).all(|w| w[0] > w[1])
        && a.first().is_none_or(|&top| top < k + l);
    if !ok {
        return Err(Error::NonStrictTuple(a.to_vec()));
    }
    Ok(a.iter().enumerate().map(|(idx, &ap)| ap - (k - (idx + 1))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> QXPoly {
        QXPoly::from_q_coeffs(coeffs)
    }

    /// Independent route: count box partitions by size.
    fn qbinom_by_enumeration(k: usize, l: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); k * l + 1];
        for t in box_tuples(k, l) {
            v[t.iter().sum::<usize>()] += 1;
        }
        v
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn arithmetic_examples() {
        let x1 = QXPoly::var(2, 1);
        let x2 = QXPoly::var(2, 2);
        let prod = &(&x1 + &x2) * &(&x1 - &x2);
        let expected = &QXPoly::monomial(0, &[2, 0]) - &QXPoly::monomial(0, &[0, 2]);
        assert_eq!(prod, expected);
        assert_eq!(qpoly(&[1, 1, 2]).at_q_zero().unwrap(), qpoly(&[1]));
        assert_eq!(QXPoly::q_pow(0, 2).invert_q(), QXPoly::q_pow(0, -2));
        assert!(QXPoly::q_pow(0, -1).at_q_zero().is_err());
    }

    #[test]
    fn mismatched_variable_counts() {
        let a = QXPoly::var(2, 1);
        let b = QXPoly::var(3, 1);
        assert_eq!(a.checked_add(&b), Err(Error::VariableCountMismatch { left: 2, right: 3 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let a = QXPoly::var(2, 1);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    #[test]
    fn x_product_power_and_slices() {
        let p = QXPoly::monomial(3, &[2, 1]).mul_x_product_power(-1);
        assert_eq!(p, QXPoly::monomial(3, &[1, 0]));
        assert_eq!(p.x_slice(&[1, 0]), QXPoly::q_pow(0, 3));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(0, 5).unwrap(), qpoly(&[1]));
        assert_eq!(qbinom(1, 1).unwrap(), qpoly(&[1, 1]));
        assert_eq!(qbinom(2, 2).unwrap(), qpoly(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(-1, 2), Err(Error::NegativeArgument(-1)));
    }

    #[test]
    fn qbinom_matches_box_enumeration_and_symmetries() {
        for k in 0..=8 {
            for l in 0..=8 {
                let g = qbinom(k as i64, l as i64).unwrap();
                assert_eq!(g.q_coeffs(), qbinom_by_enumeration(k, l), "k={k} l={l}");
                assert_eq!(g, qbinom(l as i64, k as i64).unwrap());
                assert_eq!(g.eval_at_one(), BigInt::from(binom((k + l) as u64, k as u64)));
                assert_eq!(g.max_q_degree(), Some((k * l) as i32));
                assert!(g.is_palindromic_in_q());
            }
        }
    }

    #[test]
    fn box_partition_examples() {
        let show = |k, l| box_partitions(k, l).iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>();
        assert_eq!(show(1, 1), vec![vec![], vec![1]]);
        assert_eq!(show(0, 5), vec![Vec::<usize>::new()]);
        assert_eq!(show(2, 1), vec![vec![], vec![1], vec![1, 1]]);
        for k in 0..6 {
            for l in 0..6 {
                assert_eq!(box_tuples(k, l).len() as u64, binom((k + l) as u64, k as u64));
            }
        }
    }

    #[test]
    fn strict_tuple_examples() {
        assert_eq!(strict_tuple_from_partition(&[0, 0, 0], 3, 4).unwrap(), vec![2, 1, 0]);
        assert_eq!(strict_tuple_from_partition(&[2, 1, 0], 3, 2).unwrap(), vec![4, 2, 0]);
        for g in box_tuples(3, 2) {
            let a = strict_tuple_from_partition(&g, 3, 2).unwrap();
            assert_eq!(partition_from_strict_tuple(&a, 3, 2).unwrap(), g);
        }
        assert!(strict_tuple_from_partition(&[3], 1, 2).is_err());
        assert!(strict_tuple_from_partition(&[1, 1], 1, 2).is_err());
        assert!(partition_from_strict_tuple(&[2, 2], 2, 2).is_err());
        assert!(partition_from_strict_tuple(&[4, 0], 2, 2).is_err());
    }

    #[test]
    fn display_groups_by_x_monomial() {
        let x1 = QXPoly::var(2, 1);
        let x2 = QXPoly::var(2, 2);
        let one_plus_q = &QXPoly::one(2) + &QXPoly::q_pow(2, 1);
        let p = &(&(&x1 * &x1) + &(&(&one_plus_q * &x1) * &x2)) + &(&x2 * &x2);
        assert_eq!(p.to_string(), "x1^2 + (1+q) x1 x2 + x2^2");
        assert_eq!(qpoly(&[1, 1, 2]).to_string(), "1+q+2q^2");
        assert_eq!((-&x1).to_string(), "-x1");
        assert_eq!(QXPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = &QXPoly::monomial(-2, &[1, -1]) + &QXPoly::q_pow(2, 3).scale(&BigInt::from(-7));
        let terms = p.to_json_terms();
        assert_eq!(QXPoly::from_json_terms(2, &terms).unwrap(), p);
        let s = serde_json::to_string(&terms).unwrap();
        assert_eq!(s, r#"[{"q":-2,"x":[1,-1],"c":"1"},{"q":3,"x":[0,0],"c":"-7"}]"#);
    }
}
