//! Exact algebra over rational powers of the basis
//! `{2, q, p, 1-p, 1+p, 1+2p, 2+p, k}`.
//!
//! `E_1`, `E_2` and `E_4` are monomials in this basis, where
//! `p = (φ(q)² − φ(q³)²) / (2φ(q³)²)` and `k = φ(q³)³ / φ(q)`. A sum of eta
//! products therefore becomes a sum of monomials; when the monomials differ
//! by integer powers of the linear factors it collapses to a single monomial
//! times a polynomial in `p`. [`reduce_sum`] performs that collapse exactly.
//!
//! Fractional exponents never reach the series engine: [`verify_aw_numeric`]
//! checks the integer-power consequences (`E_1²⁴`, `E_2¹²`, `E_4²⁴`) as
//! rational power series.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{euler_function, theta_phi, Coefficient, Domain, TruncatedSeries};

/// Basis elements, in the slot order used by [`AlgebraicMonomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Two,
    Q,
    P,
    OneMinusP,
    OnePlusP,
    OnePlusTwoP,
    TwoPlusP,
    K,
}

impl Basis {
    pub const ALL: [Basis; 8] = [
        Basis::Two,
        Basis::Q,
        Basis::P,
        Basis::OneMinusP,
        Basis::OnePlusP,
        Basis::OnePlusTwoP,
        Basis::TwoPlusP,
        Basis::K,
    ];

    /// Factors that are linear polynomials in `p`.
    pub const LINEAR: [Basis; 5] = [
        Basis::P,
        Basis::OneMinusP,
        Basis::OnePlusP,
        Basis::OnePlusTwoP,
        Basis::TwoPlusP,
    ];

    fn index(self) -> usize {
        self as usize
    }

    /// `(c0, c1)` with the factor equal to `c0 + c1 p`.
    fn linear(self) -> Option<(i64, i64)> {
        match self {
            Basis::P => Some((0, 1)),
            Basis::OneMinusP => Some((1, -1)),
            Basis::OnePlusP => Some((1, 1)),
            Basis::OnePlusTwoP => Some((1, 2)),
            Basis::TwoPlusP => Some((2, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Two => "2",
            Basis::Q => "q",
            Basis::P => "p",
            Basis::OneMinusP => "(1-p)",
            Basis::OnePlusP => "(1+p)",
            Basis::OnePlusTwoP => "(1+2p)",
            Basis::TwoPlusP => "(2+p)",
            Basis::K => "k",
        })
    }
}

/// `coeff · Π basisᵢ^(exponentᵢ)` with a nonzero rational coefficient and
/// rational exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicMonomial {
    coeff: BigRational,
    exponents: [Rational64; 8],
}

impl AlgebraicMonomial {
    /// Returns `None` for a zero coefficient.
    pub fn new(coeff: BigRational, exponents: [Rational64; 8]) -> Option<Self> {
        if coeff.is_zero() {
            None
        } else {
            Some(AlgebraicMonomial { coeff, exponents })
        }
    }

    pub fn unit() -> Self {
        AlgebraicMonomial {
            coeff: BigRational::one(),
            exponents: [Rational64::zero(); 8],
        }
    }

    pub fn constant(c: BigRational) -> Option<Self> {
        Self::new(c, [Rational64::zero(); 8])
    }

    pub fn with_exponent(mut self, slot: Basis, e: Rational64) -> Self {
        self.exponents[slot.index()] = e;
        self
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn exponent(&self, slot: Basis) -> Rational64 {
        self.exponents[slot.index()]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exponents = self.exponents;
        for (e, o) in exponents.iter_mut().zip(other.exponents) {
            *e += o;
        }
        AlgebraicMonomial {
            coeff: &self.coeff * &other.coeff,
            exponents,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let coeff = if n >= 0 {
            num_traits::pow(self.coeff.clone(), n as usize)
        } else {
            num_traits::pow(self.coeff.recip(), n.unsigned_abs() as usize)
        };
        AlgebraicMonomial {
            coeff,
            exponents: self.exponents.map(|e| e * n),
        }
    }

    /// Folds an integral power of 2 into the coefficient, so that equal
    /// values compare equal.
    pub fn normalized(&self) -> Self {
        let two = self.exponent(Basis::Two);
        if !two.is_integer() || two.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.coeff *= pow2(two.to_integer());
        out.exponents[Basis::Two.index()] = Rational64::zero();
        out
    }
}

impl fmt::Display for AlgebraicMonomial {
    /// e.g. `25/4096 * p * (1-p)^6 * (1+p)^2 * (2+p)^3 * k^12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for slot in Basis::ALL {
            let e = self.exponent(slot);
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                write!(f, " * {slot}")?;
            } else if e.is_integer() {
                write!(f, " * {slot}^{e}")?;
            } else {
                write!(f, " * {slot}^({e})")?;
            }
        }
        Ok(())
    }
}

fn pow2(n: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << n.unsigned_abs());
    if n >= 0 {
        p
    } else {
        p.recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EtaFactor {
    E1,
    E2,
    E4,
}

impl EtaFactor {
    pub fn delta(self) -> u64 {
        match self {
            EtaFactor::E1 => 1,
            EtaFactor::E2 => 2,
            EtaFactor::E4 => 4,
        }
    }

    /// Exponents of `2, q, p, 1-p, 1+p, 1+2p, 2+p, k` as `(num, den)`.
    fn parametrization(self) -> [(i64, i64); 8] {
        match self {
            EtaFactor::E1 => [
                (-1, 6),
                (-1, 24),
                (1, 24),
                (1, 2),
                (1, 6),
                (1, 8),
                (1, 8),
                (1, 2),
            ],
            EtaFactor::E2 => [
                (-1, 3),
                (-1, 12),
                (1, 12),
                (1, 4),
                (1, 12),
                (1, 4),
                (1, 4),
                (1, 2),
            ],
            EtaFactor::E4 => [
                (-2, 3),
                (-1, 6),
                (1, 6),
                (1, 8),
                (1, 24),
                (1, 8),
                (1, 2),
                (1, 2),
            ],
        }
    }
}

/// `E^e` for `E ∈ {E_1, E_2, E_4}` as a monomial in `p` and `k`.
pub fn aw_monomial(which: EtaFactor, e: i64) -> AlgebraicMonomial {
    let exponents = which
        .parametrization()
        .map(|(n, d)| Rational64::new(n * e, d));
    AlgebraicMonomial {
        coeff: BigRational::one(),
        exponents,
    }
}

/// `scalar · q^q_power · E_1^a E_2^b E_4^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EtaTerm {
    pub scalar: i64,
    pub q_power: i64,
    /// Exponents of `E_1`, `E_2`, `E_4`.
    pub eta: [i64; 3],
}

impl EtaTerm {
    pub const fn new(scalar: i64, q_power: i64, eta: [i64; 3]) -> Self {
        EtaTerm {
            scalar,
            q_power,
            eta,
        }
    }

    /// Multiplies by `E_1^a E_2^b E_4^c`.
    pub fn cleared(self, by: [i64; 3]) -> Self {
        let mut eta = self.eta;
        for (e, b) in eta.iter_mut().zip(by) {
            *e += b;
        }
        EtaTerm { eta, ..self }
    }

    /// Zero-scalar terms give a monomial with coefficient 0, which
    /// [`reduce_sum`] skips.
    pub fn monomial(&self) -> AlgebraicMonomial {
        let q = AlgebraicMonomial {
            coeff: BigRational::from_integer(self.scalar.into()),
            exponents: [Rational64::zero(); 8],
        }
        .with_exponent(Basis::Q, Rational64::from_integer(self.q_power));
        [EtaFactor::E1, EtaFactor::E2, EtaFactor::E4]
            .iter()
            .zip(self.eta)
            .fold(q, |acc, (&f, e)| acc.mul(&aw_monomial(f, e)))
    }
}

/// `common · poly(p)`, with `poly` a primitive integer polynomial whose
/// lowest nonzero coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    pub common: AlgebraicMonomial,
    /// Ascending coefficients.
    pub poly: Vec<BigRational>,
}

impl ReducedForm {
    /// The polynomial coefficients as integers, if they all are.
    pub fn integer_poly(&self) -> Option<Vec<BigInt>> {
        self.poly
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

mod poly {
    use super::*;

    pub(super) type Poly = Vec<BigRational>;

    pub(super) fn trim(mut p: Poly) -> Poly {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub(super) fn add(a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let zero = BigRational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub(super) fn mul(a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub(super) fn scale(a: &Poly, c: &BigRational) -> Poly {
        trim(a.iter().map(|x| x * c).collect())
    }

    /// `(c0 + c1 p)^n` by the binomial theorem.
    pub(super) fn linear_power(c0: i64, c1: i64, n: u32) -> Poly {
        let (c0, c1) = (BigInt::from(c0), BigInt::from(c1));
        let mut binom = BigInt::one();
        let mut out = Vec::with_capacity(n as usize + 1);
        for i in 0..=n {
            let term = &binom
                * num_traits::pow(c0.clone(), (n - i) as usize)
                * num_traits::pow(c1.clone(), i as usize);
            out.push(BigRational::from_integer(term));
            binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        trim(out)
    }

    /// Exact quotient by `c0 + c1 p`, or `None` if the remainder is nonzero.
    pub(super) fn divide_linear(a: &Poly, c0: i64, c1: i64) -> Option<Poly> {
        if a.is_empty() {
            return Some(Vec::new());
        }
        let (c0, c1) = (
            BigRational::from_integer(c0.into()),
            BigRational::from_integer(c1.into()),
        );
        let d = a.len() - 1;
        if c0.is_zero() {
            return a[0]
                .is_zero()
                .then(|| a[1..].iter().map(|x| x / &c1).collect());
        }
        let mut q: Poly = Vec::with_capacity(d);
        for i in 0..d {
            let prev = if i == 0 {
                BigRational::zero()
            } else {
                &c1 * &q[i - 1]
            };
            q.push((&a[i] - prev) / &c0);
        }
        let tail = q.last().map_or_else(BigRational::zero, |b| &c1 * b);
        (a[d] == tail).then_some(q)
    }
}

/// Expands `m / base` as a polynomial in `p`.
///
/// The quotient must have zero `q` and `k` exponents, an integral power of 2,
/// and nonnegative integral powers of the linear factors.
fn expand_relative(
    term: usize,
    base: &AlgebraicMonomial,
    m: &AlgebraicMonomial,
) -> Result<poly::Poly> {
    let mut out = vec![m.coeff.clone() / &base.coeff];
    for slot in Basis::ALL {
        let d = m.exponent(slot) - base.exponent(slot);
        if !d.is_integer() {
            return Err(Error::NonIntegralExponent { term, slot });
        }
        let d = d.to_integer();
        match slot {
            Basis::Two => out = poly::scale(&out, &pow2(d)),
            Basis::Q | Basis::K if d != 0 => return Err(Error::NotPolynomial { term, slot }),
            Basis::Q | Basis::K => {}
            _ => {
                if d < 0 {
                    return Err(Error::NotPolynomial { term, slot });
                }
                let (c0, c1) = slot.linear().expect("linear slot");
                out = poly::mul(&out, &poly::linear_power(c0, c1, d as u32));
            }
        }
    }
    Ok(out)
}

/// Collapses `Σ scalar · q^j · E_1^a E_2^b E_4^c` to `common · poly(p)`.
///
/// The componentwise minimum exponent is factored out, each residual term is
/// expanded exactly, and the sum is normalized: every linear factor that
/// divides it moves into `common`, the rational content moves into the
/// coefficient, and an integral power of 2 is folded into the coefficient.
pub fn reduce_sum(terms: &[EtaTerm]) -> Result<ReducedForm> {
    let monomials: Vec<_> = terms
        .iter()
        .filter(|t| t.scalar != 0)
        .map(EtaTerm::monomial)
        .collect();
    reduce_monomials(&monomials)
}

pub fn reduce_monomials(monomials: &[AlgebraicMonomial]) -> Result<ReducedForm> {
    if monomials.is_empty() {
        return Err(Error::InvalidArgument("cannot reduce an empty sum".into()));
    }
    let mut exponents = monomials[0].exponents;
    for m in &monomials[1..] {
        for (e, o) in exponents.iter_mut().zip(m.exponents) {
            *e = (*e).min(o);
        }
    }
    let mut common = AlgebraicMonomial {
        coeff: BigRational::one(),
        exponents,
    };
    let mut total: poly::Poly = Vec::new();
    for (i, m) in monomials.iter().enumerate() {
        total = poly::add(&total, &expand_relative(i, &common, m)?);
    }

    if !total.is_empty() {
        for slot in Basis::LINEAR {
            let (c0, c1) = slot.linear().expect("linear slot");
            while total.len() > 1 {
                match poly::divide_linear(&total, c0, c1) {
                    Some(q) => {
                        total = q;
                        common.exponents[slot.index()] += 1;
                    }
                    None => break,
                }
            }
        }
        let (content, primitive) = primitive_part(&total);
        common.coeff *= content;
        total = primitive;
    }
    Ok(ReducedForm {
        common: common.normalized(),
        poly: total,
    })
}

/// Splits a nonzero polynomial into `content · primitive`, with the
/// primitive part integral, of content 1, and lowest nonzero coefficient
/// positive.
fn primitive_part(p: &poly::Poly) -> (BigRational, poly::Poly) {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd = p
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    let lowest_negative = p
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative());
    let gcd = if lowest_negative { -gcd } else { gcd };
    let content = BigRational::new(gcd, lcm);
    let primitive = p.iter().map(|c| c / &content).collect();
    (content, primitive)
}

/// The two polynomials produced by reducing the nine-term sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RPolynomial {
    /// From the sum behind `p̄(80n+8)` and `p̄(80n+72)`.
    R1,
    /// From the sum behind `p̄(80n+52)` and `p̄(80n+68)`.
    R2,
}

/// A nine-term sum as printed, the factor that clears its denominators, and
/// the expected reduction.
pub struct SumFixture {
    pub terms: [EtaTerm; 9],
    /// Exponents of `E_1`, `E_2`, `E_4` multiplied into every term.
    pub clearing: [i64; 3],
    pub expected_poly: [i64; 13],
    /// `(slot, exponent)` pairs of the expected common monomial; every other
    /// slot is zero.
    pub expected_common: &'static [(Basis, i64)],
}

// Transcribed term by term from the intermediate display (each line is
// scalar, power of q, [E_1, E_2, E_4] exponents), before clearing.
const R1_FIXTURE: SumFixture = SumFixture {
    terms: [
        EtaTerm::new(1, 0, [-22, 70, -52]),
        EtaTerm::new(-1, 0, [26, -2, -28]),
        EtaTerm::new(24, 1, [-14, 46, -36]),
        EtaTerm::new(3, 1, [2, 22, -28]),
        EtaTerm::new(21, 2, [-6, 22, -20]),
        EtaTerm::new(96, 2, [10, -2, -12]),
        EtaTerm::new(-1, 2, [26, -26, -4]),
        EtaTerm::new(-1, 3, [2, -2, -4]),
        EtaTerm::new(84, 3, [18, -26, 4]),
    ],
    clearing: [6, 2, 20],
    expected_poly: [
        768, 10240, 69056, 293440, 841488, 1663680, 2253588, 1995132, 1015539, 199890, -17692, 784,
        -4,
    ],
    expected_common: &[
        (Basis::P, 1),
        (Basis::OneMinusP, 6),
        (Basis::OnePlusP, 2),
        (Basis::TwoPlusP, 3),
        (Basis::K, 12),
    ],
};

const R2_FIXTURE: SumFixture = SumFixture {
    terms: [
        EtaTerm::new(1, 0, [-11, 36, -29]),
        EtaTerm::new(-1, 0, [5, 12, -21]),
        EtaTerm::new(-1, 1, [-19, 36, -21]),
        EtaTerm::new(14, 1, [-3, 12, -13]),
        EtaTerm::new(-4, 1, [29, -36, 3]),
        EtaTerm::new(1, 2, [-11, 12, -5]),
        EtaTerm::new(12, 2, [5, -12, 3]),
        EtaTerm::new(14, 3, [-3, -12, 11]),
        EtaTerm::new(16, 4, [5, -36, 27]),
    ],
    clearing: [3, 0, 13],
    expected_poly: [
        256, 3200, 9536, 7264, -35088, -94272, -66744, 20184, 22830, -24652, -19400, -302, 41,
    ],
    expected_common: &[
        (Basis::P, 1),
        (Basis::OnePlusTwoP, -3),
        (Basis::TwoPlusP, 3),
        (Basis::K, 6),
    ],
};

impl RPolynomial {
    pub fn fixture(self) -> &'static SumFixture {
        match self {
            RPolynomial::R1 => &R1_FIXTURE,
            RPolynomial::R2 => &R2_FIXTURE,
        }
    }

    /// The fixture's terms with the clearing factor applied.
    pub fn cleared_terms(self) -> Vec<EtaTerm> {
        let f = self.fixture();
        f.terms.iter().map(|t| t.cleared(f.clearing)).collect()
    }

    /// `25/4096` times the expected monomial.
    pub fn expected_common(self) -> AlgebraicMonomial {
        let coeff = BigRational::new(25.into(), 4096.into());
        self.fixture().expected_common.iter().fold(
            AlgebraicMonomial::constant(coeff).expect("nonzero"),
            |m, &(slot, e)| m.with_exponent(slot, Rational64::from_integer(e)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientDiff {
    pub degree: usize,
    pub computed: Option<BigRational>,
    pub expected: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPolynomialCheck {
    pub target: RPolynomial,
    pub reduced: ReducedForm,
    /// Degrees where the reduced polynomial differs from the printed one.
    pub diffs: Vec<CoefficientDiff>,
    /// The common monomial equals `25/4096` times the printed monomial.
    pub common_matches: bool,
    /// The coefficient of the common monomial is `25/4096`, i.e. the sum is
    /// exactly 25 times `2⁻¹²·monomial·R(p)`.
    pub factor_25: bool,
    /// Every cleared term has total `q` exponent zero.
    pub q_exponents_cancel: bool,
}

impl RPolynomialCheck {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty() && self.common_matches && self.factor_25 && self.q_exponents_cancel
    }

    /// The reduction is an exact identity of the nine-term sum, so the sum
    /// equals 25 times another expression; the mod-25 display follows from
    /// it rather than the other way round.
    pub fn is_exact_multiple_of_25(&self) -> bool {
        self.factor_25
    }
}

/// Reduces the printed nine-term sum and compares with the printed
/// polynomial and common factor.
pub fn verify_r_polynomial(target: RPolynomial) -> Result<RPolynomialCheck> {
    verify_r_polynomial_with(target, &target.cleared_terms())
}

/// As [`verify_r_polynomial`], with a caller-supplied (already cleared) term
/// list.
pub fn verify_r_polynomial_with(
    target: RPolynomial,
    terms: &[EtaTerm],
) -> Result<RPolynomialCheck> {
    let reduced = reduce_sum(terms)?;
    let expected = &target.fixture().expected_poly;
    let degree = reduced.poly.len().max(expected.len());
    let diffs = (0..degree)
        .filter_map(|i| {
            let computed = reduced.poly.get(i).cloned();
            let wanted = expected.get(i).copied();
            let same = computed.clone().unwrap_or_else(BigRational::zero)
                == BigRational::from_integer(wanted.unwrap_or(0).into());
            (!same).then_some(CoefficientDiff {
                degree: i,
                computed,
                expected: wanted,
            })
        })
        .collect();
    let expected_common = target.expected_common();
    let q_exponents_cancel = terms
        .iter()
        .all(|t| t.monomial().exponent(Basis::Q).is_zero());
    Ok(RPolynomialCheck {
        target,
        common_matches: reduced.common == expected_common,
        factor_25: *reduced.common.coeff() == BigRational::new(25.into(), 4096.into()),
        reduced,
        diffs,
        q_exponents_cancel,
    })
}

/// `p(q)` and `k(q)` as rational power series.
pub fn aw_series(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let phi = theta_phi(order).convert(Domain::Rational)?;
    let phi3 = phi.substitute(3);
    let phi_sq = phi.pow(2)?;
    let phi3_sq = phi3.pow(2)?;
    let p = phi_sq.sub(&phi3_sq)?.div(&phi3_sq.scale(2))?;
    let k = phi3.pow(3)?.div(&phi)?;
    Ok((p, k))
}

/// `E^power · 2^(−e₂) · q^(−e_q) = p^a (1−p)^b (1+p)^c (1+2p)^d (2+p)^e k^f`,
/// the integer-exponent form of a parametrization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIdentity {
    pub factor: EtaFactor,
    pub power: i64,
    pub monomial: AlgebraicMonomial,
}

impl PowerIdentity {
    pub fn from_parametrization(factor: EtaFactor, power: i64) -> Self {
        PowerIdentity {
            factor,
            power,
            monomial: aw_monomial(factor, power),
        }
    }

    /// Swaps the exponents of two basis slots (negative controls).
    pub fn swapped(&self, a: Basis, b: Basis) -> Self {
        let mut out = self.clone();
        out.monomial.exponents.swap(a.index(), b.index());
        out
    }

    pub fn label(&self) -> alloc::string::String {
        alloc::format!("E{}^{}", self.factor.delta(), self.power)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIdentityResult {
    pub label: alloc::string::String,
    pub first_mismatch: Option<(usize, Coefficient, Coefficient)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AwNumericCheck {
    pub order: usize,
    pub results: Vec<PowerIdentityResult>,
}

impl AwNumericCheck {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.first_mismatch.is_none())
    }
}

/// Checks one integer-power identity to `order` with the given `p`, `k`.
pub fn check_power_identity(
    identity: &PowerIdentity,
    p: &TruncatedSeries,
    k: &TruncatedSeries,
) -> Result<PowerIdentityResult> {
    let order = p.order().min(k.order());
    let m = &identity.monomial;
    let integral = |slot: Basis| -> Result<i64> {
        let e = m.exponent(slot);
        if e.is_integer() {
            Ok(e.to_integer())
        } else {
            Err(Error::NonIntegralExponent { term: 0, slot })
        }
    };
    let two = integral(Basis::Two)?;
    let q = integral(Basis::Q)?;
    if two > 0 || q > 0 {
        return Err(Error::InvalidArgument(
            "power identity needs non-positive exponents of 2 and q".into(),
        ));
    }
    let lhs = euler_function(Domain::Rational, identity.factor.delta(), order)
        .pow(identity.power)?
        .scale(1i64 << two.unsigned_abs())
        .shift(q.unsigned_abs() as usize);
    let mut rhs = TruncatedSeries::one(Domain::Rational, order);
    let one = TruncatedSeries::one(Domain::Rational, order);
    for slot in Basis::LINEAR {
        let (c0, c1) = slot.linear().expect("linear slot");
        let factor = one.scale(c0).add(&p.scale(c1))?;
        rhs = rhs.mul(&factor.pow(integral(slot)?)?)?;
    }
    rhs = rhs.mul(&k.pow(integral(Basis::K)?)?)?;
    Ok(PowerIdentityResult {
        label: identity.label(),
        first_mismatch: lhs.first_difference(&rhs)?,
    })
}

/// The three parametrizations raised to integer powers, checked as exact
/// rational series through `q^(order-1)`.
pub fn verify_aw_numeric(order: usize) -> Result<AwNumericCheck> {
    if order < 2 {
        return Err(Error::InvalidArgument("order must be at least 2".into()));
    }
    let (p, k) = aw_series(order)?;
    let results = aw_power_identities()
        .iter()
        .map(|id| check_power_identity(id, &p, &k))
        .collect::<Result<Vec<_>>>()?;
    Ok(AwNumericCheck { order, results })
}

/// `E_1²⁴`, `E_2¹²`, `E_4²⁴`.
pub fn aw_power_identities() -> [PowerIdentity; 3] {
    [
        PowerIdentity::from_parametrization(EtaFactor::E1, 24),
        PowerIdentity::from_parametrization(EtaFactor::E2, 12),
        PowerIdentity::from_parametrization(EtaFactor::E4, 24),
    ]
}
