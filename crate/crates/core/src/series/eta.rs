//! Euler products, eta quotients and the theta series `φ`, `ψ`.

use alloc::collections::BTreeMap;
use alloc::vec;
use core::fmt;

use super::{Domain, TruncatedSeries};
use crate::error::{Error, Result};

/// Generalized pentagonal numbers `(3n² + n)/2` below `order`, paired with
/// the sign `(-1)^n`, in increasing order.
fn pentagonal_terms(order: usize) -> impl Iterator<Item = (usize, i64)> {
    let head = core::iter::once((0usize, 1i64));
    let tail = (1usize..)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            [(j * (3 * j - 1) / 2, sign), (j * (3 * j + 1) / 2, sign)]
        })
        .take_while(move |pair| pair[0].0 < order)
        .flatten();
    head.chain(tail).filter(move |&(k, _)| k < order)
}

/// `E_1 = (q;q)_∞` over the integers, via Euler's pentagonal expansion.
pub fn pentagonal_series(order: usize) -> TruncatedSeries {
    euler_function(Domain::Integer, 1, order)
}

/// `E_δ = (q^δ;q^δ)_∞` in `domain`.
pub fn euler_function(domain: Domain, delta: u64, order: usize) -> TruncatedSeries {
    assert!(delta >= 1, "eta divisor must be positive");
    let delta = delta as usize;
    let mut c = vec![0i64; order];
    for (k, sign) in pentagonal_terms(order.div_ceil(delta)) {
        c[k * delta] = sign;
    }
    TruncatedSeries::from_i64s(domain, &c)
}

/// `Π_{n≥0} (1 - c q^(first + n·step))` over the integers, by direct
/// multiplication of the factors.
pub fn pochhammer(c: i64, first: usize, step: usize, order: usize) -> TruncatedSeries {
    assert!(
        first >= 1 && step >= 1,
        "pochhammer needs positive exponents"
    );
    let mut acc = TruncatedSeries::one(Domain::Integer, order);
    let mut e = first;
    while e < order {
        acc.mul_binomial(-c, e);
        e += step;
    }
    acc
}

/// `φ(q) = Σ_{n∈Z} q^(n²)`.
pub fn theta_phi(order: usize) -> TruncatedSeries {
    let mut c = vec![0i64; order];
    for n in (0usize..).take_while(|n| n * n < order) {
        c[n * n] += if n == 0 { 1 } else { 2 };
    }
    TruncatedSeries::from_i64s(Domain::Integer, &c)
}

/// `ψ(q) = Σ_{n≥0} q^(n(n+1)/2)`.
pub fn theta_psi(order: usize) -> TruncatedSeries {
    let mut c = vec![0i64; order];
    for n in (0usize..).take_while(|n| n * (n + 1) / 2 < order) {
        c[n * (n + 1) / 2] += 1;
    }
    TruncatedSeries::from_i64s(Domain::Integer, &c)
}

/// `scalar · q^q_shift · Π_δ E_δ^(r_δ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    exponents: BTreeMap<u64, i64>,
    q_shift: i64,
    scalar: i64,
}

impl Default for EtaQuotient {
    fn default() -> Self {
        Self::new()
    }
}

impl EtaQuotient {
    /// The empty product, `1`.
    pub fn new() -> Self {
        EtaQuotient {
            exponents: BTreeMap::new(),
            q_shift: 0,
            scalar: 1,
        }
    }

    pub fn from_pairs(pairs: &[(u64, i64)]) -> Self {
        pairs
            .iter()
            .fold(Self::new(), |acc, &(d, r)| acc.with(d, r))
    }

    /// Multiplies by `E_δ^r`.
    pub fn with(mut self, delta: u64, r: i64) -> Self {
        assert!(delta >= 1, "eta divisor must be positive");
        let e = self.exponents.entry(delta).or_insert(0);
        *e += r;
        if *e == 0 {
            self.exponents.remove(&delta);
        }
        self
    }

    pub fn shifted(mut self, k: i64) -> Self {
        self.q_shift += k;
        self
    }

    pub fn scaled(mut self, c: i64) -> Self {
        self.scalar *= c;
        self
    }

    pub fn times(&self, other: &EtaQuotient) -> Self {
        let mut out = other
            .exponents
            .iter()
            .fold(self.clone(), |acc, (&d, &r)| acc.with(d, r));
        out.q_shift += other.q_shift;
        out.scalar *= other.scalar;
        out
    }

    pub fn exponent(&self, delta: u64) -> i64 {
        self.exponents.get(&delta).copied().unwrap_or(0)
    }

    /// Nonzero `(δ, r_δ)` pairs in increasing `δ`.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&d, &r)| (d, r))
    }

    pub fn q_shift(&self) -> i64 {
        self.q_shift
    }

    pub fn scalar(&self) -> i64 {
        self.scalar
    }

    pub fn expand(&self, domain: Domain, order: usize) -> Result<TruncatedSeries> {
        expand_eta_quotient(self, domain, order)
    }
}

/// Expands an eta quotient through `q^(order-1)`.
///
/// Each `E_δ^(r)` is applied as `|r|` multiplications or divisions by the
/// sparse Euler product, so the cost is `O(Σ|r_δ| · N^1.5)`.
pub fn expand_eta_quotient(
    eta: &EtaQuotient,
    domain: Domain,
    order: usize,
) -> Result<TruncatedSeries> {
    if eta.q_shift < 0 {
        return Err(Error::NegativeShift(eta.q_shift));
    }
    let shift = eta.q_shift as usize;
    if shift >= order {
        return Ok(TruncatedSeries::zero(domain, order));
    }
    let inner = order - shift;
    let mut acc = TruncatedSeries::one(domain, inner);
    for (delta, r) in eta.exponents() {
        let factor = euler_function(domain, delta, inner);
        for _ in 0..r.unsigned_abs() {
            acc = if r > 0 {
                acc.mul(&factor)?
            } else {
                acc.div(&factor)?
            };
        }
    }
    Ok(acc.scale(eta.scalar).resized(order).shift(shift))
}

impl fmt::Display for EtaQuotient {
    /// Renders as e.g. `3*q*E1*E10^3*E20^2/E5^7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = alloc::vec::Vec::new();
        let mut den = alloc::vec::Vec::new();
        if self.scalar != 1 {
            num.push(alloc::format!("{}", self.scalar));
        }
        match self.q_shift {
            0 => {}
            1 => num.push("q".into()),
            k => num.push(alloc::format!("q^{k}")),
        }
        for (d, r) in self.exponents() {
            let side = if r > 0 { &mut num } else { &mut den };
            match r.abs() {
                1 => side.push(alloc::format!("E{d}")),
                a => side.push(alloc::format!("E{d}^{a}")),
            }
        }
        if num.is_empty() {
            num.push("1".into());
        }
        f.write_str(&num.join("*"))?;
        match den.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", den[0]),
            _ => write!(f, "/({})", den.join("*")),
        }
    }
}
