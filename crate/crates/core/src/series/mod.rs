//! Truncated formal power series with exact coefficients.
//!
//! A [`TruncatedSeries`] knows its coefficients through `q^(order-1)` and
//! carries one of three coefficient domains: arbitrary-precision integers,
//! residues mod `u`, or reduced rationals. Binary operations require equal
//! domains and truncate to the shorter operand.

mod eta;
mod ring;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use ring::{IntegerRing, RationalRing, ResidueRing, Ring};

pub use eta::{
    euler_function, expand_eta_quotient, pentagonal_series, pochhammer, theta_phi, theta_psi,
    EtaQuotient,
};

/// Coefficient domain of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Integer,
    /// Residues `0 <= c < u`.
    Residue(u64),
    Rational,
}

impl Domain {
    pub fn residue(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Domain::Residue(modulus))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => f.write_str("integer"),
            Domain::Residue(u) => write!(f, "residue({u})"),
            Domain::Rational => f.write_str("rational"),
        }
    }
}

/// A single coefficient, tagged with its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Integer(BigInt),
    Residue(u64),
    Rational(BigRational),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(x) => x.is_zero(),
            Coefficient::Residue(x) => *x == 0,
            Coefficient::Rational(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(x) => write!(f, "{x}"),
            Coefficient::Residue(x) => write!(f, "{x}"),
            Coefficient::Rational(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    Integer(Vec<BigInt>),
    Residue { modulus: u64, values: Vec<u64> },
    Rational(Vec<BigRational>),
}

/// A power series known through `q^(order-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    data: Coeffs,
}

/// Runs `$body` with `$ring` bound to the coefficient ring of `$s` and `$x`
/// to its coefficient slice; the body must evaluate to a `Vec` of elements.
macro_rules! map_ring {
    ($s:expr, |$ring:ident, $x:ident| $body:expr) => {
        match &$s.data {
            Coeffs::Integer($x) => {
                let $ring = IntegerRing;
                TruncatedSeries {
                    data: Coeffs::Integer($body),
                }
            }
            Coeffs::Residue {
                modulus,
                values: $x,
            } => {
                let $ring = ResidueRing(*modulus);
                TruncatedSeries {
                    data: Coeffs::Residue {
                        modulus: *modulus,
                        values: $body,
                    },
                }
            }
            Coeffs::Rational($x) => {
                let $ring = RationalRing;
                TruncatedSeries {
                    data: Coeffs::Rational($body),
                }
            }
        }
    };
}

/// Binary version of [`map_ring!`]; the body evaluates to `Option<Vec<_>>`
/// and `None` is reported as a non-invertible constant term of `$b`.
macro_rules! zip_ring {
    ($a:expr, $b:expr, |$ring:ident, $x:ident, $y:ident| $body:expr) => {
        match (&$a.data, &$b.data) {
            (Coeffs::Integer($x), Coeffs::Integer($y)) => {
                let $ring = IntegerRing;
                match $body {
                    Some(v) => Ok(TruncatedSeries {
                        data: Coeffs::Integer(v),
                    }),
                    None => Err(Error::NotInvertible($b.constant_term_string())),
                }
            }
            (
                Coeffs::Residue {
                    modulus: u1,
                    values: $x,
                },
                Coeffs::Residue {
                    modulus: u2,
                    values: $y,
                },
            ) if u1 == u2 => {
                let $ring = ResidueRing(*u1);
                match $body {
                    Some(v) => Ok(TruncatedSeries {
                        data: Coeffs::Residue {
                            modulus: *u1,
                            values: v,
                        },
                    }),
                    None => Err(Error::NotInvertible($b.constant_term_string())),
                }
            }
            (Coeffs::Rational($x), Coeffs::Rational($y)) => {
                let $ring = RationalRing;
                match $body {
                    Some(v) => Ok(TruncatedSeries {
                        data: Coeffs::Rational(v),
                    }),
                    None => Err(Error::NotInvertible($b.constant_term_string())),
                }
            }
            _ => Err(Error::DomainMismatch {
                left: $a.domain(),
                right: $b.domain(),
            }),
        }
    };
}

impl TruncatedSeries {
    pub fn zero(domain: Domain, order: usize) -> Self {
        Self::from_i64s(domain, &vec![0; order])
    }

    pub fn one(domain: Domain, order: usize) -> Self {
        Self::monomial(domain, 0, order)
    }

    /// `q^k` truncated at `order` (the zero series if `k >= order`).
    pub fn monomial(domain: Domain, k: usize, order: usize) -> Self {
        let mut c = vec![0; order];
        if k < order {
            c[k] = 1;
        }
        Self::from_i64s(domain, &c)
    }

    pub fn from_i64s(domain: Domain, coeffs: &[i64]) -> Self {
        Self::from_integers(domain, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a series from integer coefficients, mapped into `domain`.
    pub fn from_integers(domain: Domain, coeffs: Vec<BigInt>) -> Self {
        let data = match domain {
            Domain::Integer => Coeffs::Integer(coeffs),
            Domain::Residue(u) => Coeffs::Residue {
                modulus: u,
                values: coeffs.iter().map(|c| reduce_bigint(c, u)).collect(),
            },
            Domain::Rational => {
                Coeffs::Rational(coeffs.into_iter().map(BigRational::from_integer).collect())
            }
        };
        TruncatedSeries { data }
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries {
            data: Coeffs::Rational(coeffs),
        }
    }

    pub fn domain(&self) -> Domain {
        match &self.data {
            Coeffs::Integer(_) => Domain::Integer,
            Coeffs::Residue { modulus, .. } => Domain::Residue(*modulus),
            Coeffs::Rational(_) => Domain::Rational,
        }
    }

    pub fn order(&self) -> usize {
        match &self.data {
            Coeffs::Integer(c) => c.len(),
            Coeffs::Residue { values, .. } => values.len(),
            Coeffs::Rational(c) => c.len(),
        }
    }

    /// Coefficient of `q^i`, or `None` beyond the truncation order.
    pub fn coefficient(&self, i: usize) -> Option<Coefficient> {
        match &self.data {
            Coeffs::Integer(c) => c.get(i).cloned().map(Coefficient::Integer),
            Coeffs::Residue { values, .. } => values.get(i).copied().map(Coefficient::Residue),
            Coeffs::Rational(c) => c.get(i).cloned().map(Coefficient::Rational),
        }
    }

    pub fn integers(&self) -> Option<&[BigInt]> {
        match &self.data {
            Coeffs::Integer(c) => Some(c),
            _ => None,
        }
    }

    pub fn residues(&self) -> Option<&[u64]> {
        match &self.data {
            Coeffs::Residue { values, .. } => Some(values),
            _ => None,
        }
    }

    pub fn rationals(&self) -> Option<&[BigRational]> {
        match &self.data {
            Coeffs::Rational(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.order()).all(|i| self.coefficient(i).is_some_and(|c| c.is_zero()))
    }

    /// Maps an integer series into another domain; other conversions are
    /// only allowed to the series' own domain.
    pub fn convert(&self, domain: Domain) -> Result<Self> {
        if domain == self.domain() {
            return Ok(self.clone());
        }
        match (&self.data, domain) {
            (Coeffs::Integer(c), _) => Ok(Self::from_integers(domain, c.clone())),
            _ => Err(Error::UnsupportedConversion {
                from: self.domain(),
                to: domain,
            }),
        }
    }

    /// Reduces an integer series mod `u`.
    pub fn reduce(&self, modulus: u64) -> Result<Self> {
        self.convert(Domain::residue(modulus)?)
    }

    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub(crate) fn resized(&self, order: usize) -> Self {
        map_ring!(self, |ring, x| {
            let mut v = x[..order.min(x.len())].to_vec();
            v.resize(order, ring.zero());
            v
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        map_ring!(self, |_ring, x| x[..order.min(x.len())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        zip_ring!(self, other, |ring, x, y| Some(
            x.iter()
                .zip(y.iter())
                .map(|(a, b)| ring.add(a, b))
                .collect::<Vec<_>>()
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        zip_ring!(self, other, |ring, x, y| Some(
            x.iter()
                .zip(y.iter())
                .map(|(a, b)| ring.sub(a, b))
                .collect::<Vec<_>>()
        ))
    }

    pub fn neg(&self) -> Self {
        map_ring!(self, |ring, x| x.iter().map(|a| ring.neg(a)).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        map_ring!(self, |ring, x| {
            let c = ring.embed(c);
            x.iter().map(|a| ring.mul(a, &c)).collect()
        })
    }

    /// Cauchy product at `min(self.order, other.order)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        zip_ring!(self, other, |ring, x, y| Some(ring::mul(
            &ring, x, y, order
        )))
    }

    /// `self / other` at the shorter order; `other` needs a unit constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        zip_ring!(self, other, |ring, x, y| ring::div(&ring, x, y, order))
    }

    pub fn invert(&self) -> Result<Self> {
        Self::one(self.domain(), self.order()).div(self)
    }

    /// Binary exponentiation; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.invert()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.domain(), self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `a(q^d)` at the same order.
    #[allow(clippy::clone_on_copy)]
    pub fn substitute(&self, d: usize) -> Self {
        assert!(d >= 1, "substitution exponent must be positive");
        map_ring!(self, |ring, x| {
            let mut out = vec![ring.zero(); x.len()];
            for (i, c) in x.iter().enumerate() {
                match i.checked_mul(d) {
                    Some(j) if j < x.len() => out[j] = c.clone(),
                    _ => break,
                }
            }
            out
        })
    }

    /// `sum_n a[m n + t] q^n`, with order `ceil((order - t) / m)`.
    pub fn extract_progression(&self, m: usize, t: usize) -> Self {
        assert!(m >= 1 && t < m, "progression needs m >= 1 and 0 <= t < m");
        map_ring!(self, |_ring, x| x
            .iter()
            .skip(t)
            .step_by(m)
            .cloned()
            .collect())
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        map_ring!(self, |ring, x| {
            let n = x.len();
            let mut out = vec![ring.zero(); n.min(k)];
            out.extend(x.iter().take(n.saturating_sub(k)).cloned());
            out
        })
    }

    /// `a(-q)`: negates the odd-index coefficients.
    #[allow(clippy::clone_on_copy)]
    pub fn alternate(&self) -> Self {
        map_ring!(self, |ring, x| x
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { ring.neg(c) } else { c.clone() })
            .collect())
    }

    /// Multiplies in place by `1 + c q^e`.
    pub(crate) fn mul_binomial(&mut self, c: i64, e: usize) {
        match &mut self.data {
            Coeffs::Integer(x) => {
                let r = IntegerRing;
                ring::mul_binomial(&r, x, &r.embed(c), e)
            }
            Coeffs::Residue { modulus, values } => {
                let r = ResidueRing(*modulus);
                ring::mul_binomial(&r, values, &r.embed(c), e)
            }
            Coeffs::Rational(x) => {
                let r = RationalRing;
                ring::mul_binomial(&r, x, &r.embed(c), e)
            }
        }
    }

    /// First exponent below the common order where the two series differ,
    /// with both coefficients. Domains must match.
    pub fn first_difference(
        &self,
        other: &Self,
    ) -> Result<Option<(usize, Coefficient, Coefficient)>> {
        if self.domain() != other.domain() {
            return Err(Error::DomainMismatch {
                left: self.domain(),
                right: other.domain(),
            });
        }
        let order = self.order().min(other.order());
        for i in 0..order {
            let (a, b) = (self.coefficient(i), other.coefficient(i));
            if a != b {
                return Ok(Some((i, a.expect("in range"), b.expect("in range"))));
            }
        }
        Ok(None)
    }

    fn constant_term_string(&self) -> String {
        self.coefficient(0)
            .map_or_else(|| "(empty)".to_string(), |c| c.to_string())
    }
}

fn reduce_bigint(c: &BigInt, u: u64) -> u64 {
    let r = c % BigInt::from(u);
    let r = if r.is_negative() {
        r + BigInt::from(u)
    } else {
        r
    };
    u64::try_from(r).expect("residue fits in u64")
}

impl fmt::Display for TruncatedSeries {
    /// Renders as `c0 + c1*q + c2*q^2 + ... + O(q^N)`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.order() {
            let c = self.coefficient(i).expect("in range");
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (i, magnitude) {
                (0, m) => f.write_str(m)?,
                (1, "1") => f.write_str("q")?,
                (1, m) => write!(f, "{m}*q")?,
                (_, "1") => write!(f, "q^{i}")?,
                (_, m) => write!(f, "{m}*q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}
