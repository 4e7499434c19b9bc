//! Named catalog of the series identities and congruences behind the
//! mod-25 and mod-5 overpartition congruences.
//!
//! Every entry builds both sides with the series engine in the entry's
//! domain (exact integers, or residues mod `u`) and compares them
//! coefficientwise below the requested order.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::overpartitions::{oracle_table, CongruenceClaim};
use crate::series::{
    pentagonal_series, pochhammer, theta_phi, theta_psi, Coefficient, Domain, EtaQuotient,
    TruncatedSeries,
};

/// Default truncation order for catalog checks.
pub const DEFAULT_ORDER: usize = 300;

/// Catalog entries, in dependency order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// `E_k^25 ≡ E_{5k}^5 (mod 25)` for `k ∈ {1, 2, 4}`.
    Binomial25,
    /// `E_2⁴/E_1² − q E_10⁴/E_5² = E_2 E_5³/(E_1 E_10)`, exact.
    PsiEntry,
    /// `E_5²/E_10⁴ ≡ E_1²⁶/E_2²⁸ + q E_1²/E_2⁴ (mod 25)`.
    PsiCongruence,
    /// `E_2¹⁰/(E_1⁴E_4⁴) − E_10¹⁰/(E_5⁴E_20⁴) = 4q E_2²E_5E_20/(E_1E_4)`, exact.
    PhiEntry,
    /// `1/(E_5E_20) ≡ E_2⁴⁰/(E_1²¹E_4²¹) + 4q E_1³E_4³/E_2⁸ (mod 25)`.
    PhiCongruence,
    /// The three-term sum whose product with the `16n+8` dissection yields
    /// `E_5³/(E_10²E_20³)` mod 25.
    KernelEight,
    /// The three-term sum for the `16n+4` dissection, `≡ E_5E_20³/E_10⁶`.
    KernelFour,
    /// `Σ p̄(16n+8) qⁿ ≡ 3q E_1 E_10³E_20²/E_5⁷ (mod 25)`.
    Dissect16n8,
    /// `Σ p̄(16n+4) qⁿ ≡ 14 E_1 E_20⁸/(E_5⁹E_10) (mod 25)`.
    Dissect16n4,
    /// `Σ p̄(16n+4) qⁿ ≡ 14 E_1 E_10⁹/(E_5⁹E_20²) (mod 25)`: what the
    /// first line of the `16n+4` derivation actually reduces to. Not part of
    /// [`CATALOG`].
    Dissect16n4Corrected,
    /// `E_1` has no terms `q^(5n+3)` or `q^(5n+4)`.
    PentagonalGap,
    /// Eta-quotient forms of `φ(±q)`, `ψ(±q)`, `χ(±q)` and `f(−q)`.
    ThetaEta,
}

pub const CATALOG: [IdentityName; 11] = [
    IdentityName::Binomial25,
    IdentityName::PsiEntry,
    IdentityName::PsiCongruence,
    IdentityName::PhiEntry,
    IdentityName::PhiCongruence,
    IdentityName::KernelEight,
    IdentityName::KernelFour,
    IdentityName::Dissect16n8,
    IdentityName::Dissect16n4,
    IdentityName::PentagonalGap,
    IdentityName::ThetaEta,
];

impl IdentityName {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::Binomial25 => "binomial_25",
            IdentityName::PsiEntry => "psi_entry",
            IdentityName::PsiCongruence => "lemma_2_1",
            IdentityName::PhiEntry => "phi_entry",
            IdentityName::PhiCongruence => "lemma_2_2",
            IdentityName::KernelEight => "lemma_2_4",
            IdentityName::KernelFour => "lemma_2_5",
            IdentityName::Dissect16n8 => "dissect_16n8",
            IdentityName::Dissect16n4 => "dissect_16n4",
            IdentityName::Dissect16n4Corrected => "dissect_16n4_corrected",
            IdentityName::PentagonalGap => "pentagonal_gap",
            IdentityName::ThetaEta => "theta_eta",
        }
    }

    /// Modulus the entry is stated in; 0 for exact identities.
    pub fn default_modulus(self) -> u64 {
        match self {
            IdentityName::PsiEntry
            | IdentityName::PhiEntry
            | IdentityName::PentagonalGap
            | IdentityName::ThetaEta => 0,
            _ => 25,
        }
    }

    /// Order used by the full suite.
    pub fn suite_order(self) -> usize {
        match self {
            IdentityName::PentagonalGap => 10_000,
            _ => DEFAULT_ORDER,
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CATALOG
            .iter()
            .copied()
            .chain([IdentityName::Dissect16n4Corrected])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

/// First coefficient where the two sides of a check disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Which sub-identity of the entry failed.
    pub part: String,
    pub exponent: usize,
    pub lhs: Coefficient,
    pub rhs: Coefficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: IdentityName,
    /// 0 for an exact identity.
    pub modulus: u64,
    pub order: usize,
    pub status: CheckStatus,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Checks a catalog entry in its own modulus.
pub fn verify(name: IdentityName, order: usize) -> Result<IdentityCheck> {
    verify_with_modulus(name, order, None)
}

/// Checks a catalog entry, optionally overriding the modulus (0 = exact).
pub fn verify_with_modulus(
    name: IdentityName,
    order: usize,
    modulus: Option<u64>,
) -> Result<IdentityCheck> {
    if order == 0 {
        return Err(Error::InvalidArgument(
            "verification order must be at least 1".into(),
        ));
    }
    let modulus = modulus.unwrap_or_else(|| name.default_modulus());
    let domain = match modulus {
        0 => Domain::Integer,
        u => Domain::residue(u)?,
    };
    let mut first_mismatch = None;
    for part in build_parts(name, domain, order)? {
        if let Some((exponent, lhs, rhs)) = part.lhs.first_difference(&part.rhs)? {
            first_mismatch = Some(Mismatch {
                part: part.label,
                exponent,
                lhs,
                rhs,
            });
            break;
        }
    }
    let status = if first_mismatch.is_some() {
        CheckStatus::Fail
    } else {
        CheckStatus::Pass
    };
    Ok(IdentityCheck {
        name,
        modulus,
        order,
        status,
        first_mismatch,
    })
}

/// Runs every catalog entry at its suite order.
pub fn verify_catalog() -> Result<Vec<IdentityCheck>> {
    CATALOG
        .iter()
        .map(|&n| verify(n, n.suite_order()))
        .collect()
}

struct Part {
    label: String,
    lhs: TruncatedSeries,
    rhs: TruncatedSeries,
}

impl Part {
    fn new(label: impl Into<String>, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        Part {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

fn eta(pairs: &[(u64, i64)]) -> EtaQuotient {
    EtaQuotient::from_pairs(pairs)
}

fn sum(terms: &[EtaQuotient], domain: Domain, order: usize) -> Result<TruncatedSeries> {
    terms
        .iter()
        .try_fold(TruncatedSeries::zero(domain, order), |acc, t| {
            acc.add(&t.expand(domain, order)?)
        })
}

fn build_parts(name: IdentityName, domain: Domain, order: usize) -> Result<Vec<Part>> {
    let whole = |label: &str, lhs: &[EtaQuotient], rhs: &[EtaQuotient]| -> Result<Vec<Part>> {
        Ok(vec![Part::new(
            label,
            sum(lhs, domain, order)?,
            sum(rhs, domain, order)?,
        )])
    };
    match name {
        IdentityName::Binomial25 => [1u64, 2, 4]
            .iter()
            .map(|&k| {
                let ek = pentagonal_series(order)
                    .substitute(k as usize)
                    .convert(domain)?;
                let e5k = pentagonal_series(order)
                    .substitute(5 * k as usize)
                    .convert(domain)?;
                Ok(Part::new(alloc::format!("k={k}"), ek.pow(25)?, e5k.pow(5)?))
            })
            .collect(),
        IdentityName::PsiEntry => whole(
            "psi",
            &[
                eta(&[(2, 4), (1, -2)]),
                eta(&[(10, 4), (5, -2)]).shifted(1).scaled(-1),
            ],
            &[eta(&[(2, 1), (5, 3), (1, -1), (10, -1)])],
        ),
        IdentityName::PsiCongruence => whole(
            "congruence",
            &[eta(&[(5, 2), (10, -4)])],
            &[
                eta(&[(1, 26), (2, -28)]),
                eta(&[(1, 2), (2, -4)]).shifted(1),
            ],
        ),
        IdentityName::PhiEntry => whole(
            "phi",
            &[
                eta(&[(2, 10), (1, -4), (4, -4)]),
                eta(&[(10, 10), (5, -4), (20, -4)]).scaled(-1),
            ],
            &[eta(&[(2, 2), (5, 1), (20, 1), (1, -1), (4, -1)])
                .shifted(1)
                .scaled(4)],
        ),
        IdentityName::PhiCongruence => whole(
            "congruence",
            &[eta(&[(5, -1), (20, -1)])],
            &[
                eta(&[(2, 40), (1, -21), (4, -21)]),
                eta(&[(1, 3), (4, 3), (2, -8)]).shifted(1).scaled(4),
            ],
        ),
        IdentityName::KernelEight => whole(
            "congruence",
            &kernel_eight(),
            &[eta(&[(5, 3), (10, -2), (20, -3)])],
        ),
        IdentityName::KernelFour => whole(
            "congruence",
            &kernel_four(),
            &[eta(&[(5, 1), (20, 3), (10, -6)])],
        ),
        IdentityName::Dissect16n8 => dissection_parts(
            domain,
            order,
            (16, 8),
            [(2, 0), (8, 4)],
            &eta(&[(1, 1), (10, 3), (20, 2), (5, -7)])
                .shifted(1)
                .scaled(3),
        ),
        IdentityName::Dissect16n4 => dissection_parts(
            domain,
            order,
            (16, 4),
            [(4, 0), (4, 1)],
            &eta(&[(1, 1), (20, 8), (5, -9), (10, -1)]).scaled(14),
        ),
        IdentityName::Dissect16n4Corrected => dissection_parts(
            domain,
            order,
            (16, 4),
            [(4, 0), (4, 1)],
            &eta(&[(1, 1), (10, 9), (5, -9), (20, -2)]).scaled(14),
        ),
        IdentityName::PentagonalGap => {
            let e1 = pentagonal_series(5 * order).convert(domain)?;
            Ok([3usize, 4]
                .iter()
                .map(|&t| {
                    let progression = e1.extract_progression(5, t);
                    let zero = TruncatedSeries::zero(domain, progression.order());
                    Part::new(alloc::format!("5n+{t}"), progression, zero)
                })
                .collect())
        }
        IdentityName::ThetaEta => theta_parts(domain, order),
    }
}

/// `E_2³⁰/(E_1E_4³¹) + 24q E_1⁷E_2⁶/E_4¹⁵ + 21q² E_1¹⁵E_4/E_2¹⁸`
pub fn kernel_eight() -> Vec<EtaQuotient> {
    vec![
        eta(&[(2, 30), (1, -1), (4, -31)]),
        eta(&[(1, 7), (2, 6), (4, -15)]).shifted(1).scaled(24),
        eta(&[(1, 15), (4, 1), (2, -18)]).shifted(2).scaled(21),
    ]
}

/// `E_2¹⁰/(E_1¹¹E_4) + 14q E_4¹⁵/(E_1³E_2¹⁴) + 16q² E_1⁵E_4³¹/E_2³⁸`
pub fn kernel_four() -> Vec<EtaQuotient> {
    vec![
        eta(&[(2, 10), (1, -11), (4, -1)]),
        eta(&[(4, 15), (1, -3), (2, -14)]).shifted(1).scaled(14),
        eta(&[(1, 5), (4, 31), (2, -38)]).shifted(2).scaled(16),
    ]
}

/// Compares `Σ p̄(m n + t) qⁿ` with `rhs`, building the left side twice:
/// once from the oracle table and once by two successive progression
/// extractions from the generating function expanded in `domain`.
fn dissection_parts(
    domain: Domain,
    order: usize,
    (m, t): (usize, usize),
    steps: [(usize, usize); 2],
    rhs: &EtaQuotient,
) -> Result<Vec<Part>> {
    let rhs = rhs.expand(domain, order)?;
    let table = oracle_table((m * (order - 1) + t) as u64);
    let direct: Vec<_> = (0..order)
        .map(|n| table.values()[m * n + t].clone())
        .collect();
    let oracle = TruncatedSeries::from_integers(domain, direct);

    let gf = eta(&[(1, -2), (2, 1)]).expand(domain, m * order + t)?;
    let extracted = steps
        .iter()
        .fold(gf, |s, &(step, offset)| s.extract_progression(step, offset));
    Ok(vec![
        Part::new("oracle", oracle, rhs.clone()),
        Part::new("extracted", extracted, rhs),
    ])
}

fn theta_parts(domain: Domain, order: usize) -> Result<Vec<Part>> {
    let q = |pairs: &[(u64, i64)]| eta(pairs).expand(domain, order);
    let direct = |s: TruncatedSeries| s.convert(domain);
    let phi = theta_phi(order);
    let psi = theta_psi(order);
    // χ(q) = (−q; q²)_∞, χ(−q) = (q; q²)_∞, f(−q) = (q; q)_∞.
    let chi = pochhammer(-1, 1, 2, order);
    let chi_neg = pochhammer(1, 1, 2, order);
    let f_neg = pochhammer(1, 1, 1, order);
    Ok(vec![
        Part::new(
            "phi(q)",
            direct(phi.clone())?,
            q(&[(2, 5), (1, -2), (4, -2)])?,
        ),
        Part::new("phi(-q)", direct(phi.alternate())?, q(&[(1, 2), (2, -1)])?),
        Part::new("psi(q)", direct(psi.clone())?, q(&[(2, 2), (1, -1)])?),
        Part::new(
            "psi(-q)",
            direct(psi.alternate())?,
            q(&[(1, 1), (4, 1), (2, -1)])?,
        ),
        Part::new("chi(q)", direct(chi)?, q(&[(2, 2), (1, -1), (4, -1)])?),
        Part::new("chi(-q)", direct(chi_neg)?, q(&[(1, 1), (2, -1)])?),
        Part::new("f(-q)", direct(f_neg)?, q(&[(1, 1)])?),
    ])
}

/// The rearrangement steps that turn an exact theta identity into one of the
/// mod-25 congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofChain {
    /// `psi_entry` + `binomial_25` ⟹ `lemma_2_1`.
    Psi,
    /// `phi_entry` + `binomial_25` ⟹ `lemma_2_2`.
    Phi,
}

/// Recomputes a congruence from its exact parent identity.
///
/// Three series are compared: the target left side, the exact
/// rearrangement of the parent identity, and the rearrangement with
/// `E_{5k}^5` replaced by `E_k^25`. All three must agree mod 25.
pub fn proof_chain(chain: ProofChain, order: usize) -> Result<Option<Mismatch>> {
    let domain = Domain::Residue(25);
    let (target, exact, replaced) = match chain {
        ProofChain::Psi => {
            let prefactor = eta(&[(1, 2), (2, -4)]);
            let q = EtaQuotient::new().shifted(1);
            (
                eta(&[(5, 2), (10, -4)]),
                [
                    prefactor.times(&eta(&[(2, 1), (5, 5), (1, -1), (10, -5)])),
                    prefactor.times(&q),
                ],
                [
                    prefactor.times(&eta(&[(2, 1), (1, 25), (1, -1), (2, -25)])),
                    prefactor.times(&q),
                ],
            )
        }
        ProofChain::Phi => {
            let prefactor = eta(&[(1, 4), (4, 4), (2, -10)]);
            let tail = eta(&[(2, 2), (1, -1), (4, -1)]).shifted(1).scaled(4);
            (
                eta(&[(5, -1), (20, -1)]),
                [
                    prefactor.times(&eta(&[(10, 10), (5, -5), (20, -5)])),
                    prefactor.times(&tail),
                ],
                [
                    prefactor.times(&eta(&[(2, 50), (1, -25), (4, -25)])),
                    prefactor.times(&tail),
                ],
            )
        }
    };
    let target = target.expand(domain, order)?;
    let exact = sum(&exact, Domain::Integer, order)?.reduce(25)?;
    let replaced = sum(&replaced, domain, order)?;
    for (label, series) in [
        ("exact rearrangement", exact),
        ("binomial replacement", replaced),
    ] {
        if let Some((exponent, lhs, rhs)) = target.first_difference(&series)? {
            return Ok(Some(Mismatch {
                part: label.into(),
                exponent,
                lhs,
                rhs,
            }));
        }
    }
    Ok(None)
}

/// Which set of progressions to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `p̄(80n + t) ≡ 0 (mod 25)` for `t ∈ {8, 52, 68, 72}`.
    Mod25,
    /// `p̄(135n + t) ≡ 0 (mod 5)` for `t ∈ {63, 117}`.
    Mod5,
}

impl Theorem {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Theorem::Mod25),
            2 => Ok(Theorem::Mod5),
            _ => Err(Error::InvalidArgument(alloc::format!(
                "theorem must be 1 or 2, got {n}"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Theorem::Mod25 => 1,
            Theorem::Mod5 => 2,
        }
    }

    pub fn modulus(self) -> u64 {
        match self {
            Theorem::Mod25 => 25,
            Theorem::Mod5 => 5,
        }
    }

    pub fn step(self) -> u64 {
        match self {
            Theorem::Mod25 => 80,
            Theorem::Mod5 => 135,
        }
    }

    pub fn residues(self) -> &'static [u64] {
        match self {
            Theorem::Mod25 => &[8, 52, 68, 72],
            Theorem::Mod5 => &[63, 117],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub claims: Vec<CongruenceClaim>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(CongruenceClaim::holds)
    }
}

/// Checks every progression of `theorem` against the oracle for
/// `0 <= n <= n_max`, sharing one table.
pub fn verify_theorem_chain(theorem: Theorem, n_max: u64) -> Result<TheoremReport> {
    let m = theorem.step();
    let top = theorem.residues().iter().max().copied().unwrap_or(0);
    let table = oracle_table(m * n_max + top);
    let claims = theorem
        .residues()
        .iter()
        .map(|&t| table.check_progression(m, t, theorem.modulus(), n_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { theorem, claims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::overpartitions::ClaimStatus;

    #[test]
    fn names_round_trip() {
        for name in CATALOG {
            assert_eq!(name.as_str().parse::<IdentityName>(), Ok(name));
        }
        assert_eq!(
            "lemma_9_9".parse::<IdentityName>(),
            Err(Error::UnknownIdentity("lemma_9_9".into()))
        );
    }

    #[test]
    fn low_order_catalog_passes() {
        for name in CATALOG
            .into_iter()
            .filter(|&n| n != IdentityName::Dissect16n4)
        {
            let check = verify(name, 60).unwrap();
            assert!(check.passed(), "{name}: {:?}", check.first_mismatch);
            assert_eq!(check.modulus, name.default_modulus());
        }
    }

    #[test]
    fn printed_16n4_form_fails_at_q10() {
        let check = verify(IdentityName::Dissect16n4, 60).unwrap();
        assert_eq!(check.status, CheckStatus::Fail);
        let m = check.first_mismatch.unwrap();
        assert_eq!((m.part.as_str(), m.exponent), ("oracle", 10));
        assert_eq!(
            (m.lhs, m.rhs),
            (Coefficient::Residue(6), Coefficient::Residue(21))
        );

        let fixed = verify(IdentityName::Dissect16n4Corrected, 60).unwrap();
        assert!(fixed.passed(), "{:?}", fixed.first_mismatch);
        assert_eq!(
            "dissect_16n4_corrected".parse(),
            Ok(IdentityName::Dissect16n4Corrected)
        );
        assert!(!CATALOG.contains(&IdentityName::Dissect16n4Corrected));
    }

    #[test]
    fn psi_congruence_at_300() {
        assert!(verify(IdentityName::PsiCongruence, 300).unwrap().passed());
    }

    #[test]
    fn kernel_eight_fails_mod_625() {
        // Mod 625 the two sides already differ at q^1: 25 against 0.
        let check = verify_with_modulus(IdentityName::KernelEight, 2, Some(625)).unwrap();
        assert_eq!(check.status, CheckStatus::Fail);
        let m = check.first_mismatch.unwrap();
        assert_eq!(m.exponent, 1);
        assert_eq!(
            (m.lhs, m.rhs),
            (Coefficient::Residue(25), Coefficient::Residue(0))
        );
        // Order 1 only sees the constant terms, which agree.
        assert!(verify_with_modulus(IdentityName::KernelEight, 1, Some(625))
            .unwrap()
            .passed());
    }

    #[test]
    fn exact_override_exposes_congruences() {
        let check = verify_with_modulus(IdentityName::PsiCongruence, 20, Some(0)).unwrap();
        assert_eq!(check.status, CheckStatus::Fail);
        assert_eq!(check.modulus, 0);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(verify(IdentityName::PsiEntry, 0).is_err());
        assert!(verify_with_modulus(IdentityName::PsiEntry, 5, Some(1)).is_err());
    }

    #[test]
    fn proof_chains_hold() {
        assert_eq!(proof_chain(ProofChain::Psi, 150).unwrap(), None);
        assert_eq!(proof_chain(ProofChain::Phi, 150).unwrap(), None);
    }

    #[test]
    fn theorem_chain_small() {
        let r = verify_theorem_chain(Theorem::Mod25, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.claims.len(), 4);
        let r = verify_theorem_chain(Theorem::Mod5, 10).unwrap();
        assert!(r.passed());
        assert!(r.claims.iter().all(|c| c.status == ClaimStatus::Verified));
        assert!(Theorem::from_number(3).is_err());
    }
}
