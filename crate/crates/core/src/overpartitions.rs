//! Ground truth for `p̄(n)`.
//!
//! [`oracle_table`] expands the generating function `E_2 / E_1²` with the
//! series engine. [`enumerate_overpartitions`] counts overpartitions by
//! exhaustive recursion and shares no code with it, so the two can be
//! compared against each other.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Domain, EtaQuotient};

/// Largest `n` accepted by [`enumerate_overpartitions`].
pub const ENUMERATION_LIMIT: u64 = 20;

/// `p̄(0), …, p̄(max_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverpartitionTable {
    values: Vec<BigInt>,
}

impl OverpartitionTable {
    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        self.values.get(usize::try_from(n).ok()?)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Checks `p̄(m n + t) ≡ 0 (mod u)` for `0 <= n <= n_max` against this
    /// table, which must reach `m n_max + t`.
    pub fn check_progression(&self, m: u64, t: u64, u: u64, n_max: u64) -> Result<CongruenceClaim> {
        validate_progression(m, t, u)?;
        let needed = m * n_max + t;
        if needed > self.max_n() {
            return Err(Error::InvalidArgument(alloc::format!(
                "table reaches n = {}, progression needs n = {needed}",
                self.max_n()
            )));
        }
        let modulus = BigInt::from(u);
        let mut status = ClaimStatus::Verified;
        for n in 0..=n_max {
            let r = &self.values[(m * n + t) as usize] % &modulus;
            if !r.is_zero() {
                let r = if r < BigInt::zero() { r + &modulus } else { r };
                status = ClaimStatus::Counterexample {
                    n,
                    argument: m * n + t,
                    residue: u64::try_from(r).expect("residue below modulus"),
                };
                break;
            }
        }
        Ok(CongruenceClaim {
            m,
            t,
            modulus: u,
            checked_through: n_max,
            status,
        })
    }
}

/// Outcome of checking a claim `c(m n + t) ≡ 0 (mod u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    /// Every coefficient up to the witness bound vanishes mod `u`.
    Verified,
    /// Verified up to a bound that implies the claim for all `n`, subject to
    /// the asserted admissibility of the eta-quotient tuple.
    Certified {
        conditional_on_delta_star: bool,
    },
    Counterexample {
        n: u64,
        argument: u64,
        residue: u64,
    },
}

/// The assertion `c(m n + t) ≡ 0 (mod u)` for all `n`, with the bound it has
/// been checked through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceClaim {
    pub m: u64,
    pub t: u64,
    pub modulus: u64,
    pub checked_through: u64,
    pub status: ClaimStatus,
}

impl CongruenceClaim {
    pub fn holds(&self) -> bool {
        !matches!(self.status, ClaimStatus::Counterexample { .. })
    }
}

pub(crate) fn validate_progression(m: u64, t: u64, u: u64) -> Result<()> {
    if m == 0 || t >= m {
        return Err(Error::InvalidArgument(alloc::format!(
            "progression needs 0 <= t < m, got m = {m}, t = {t}"
        )));
    }
    if u < 2 {
        return Err(Error::InvalidModulus(u));
    }
    Ok(())
}

/// `p̄(n)` for `n <= max_n`, read off `E_2 / E_1²` over the integers.
pub fn oracle_table(max_n: u64) -> OverpartitionTable {
    let order = usize::try_from(max_n).expect("table size fits in memory") + 1;
    let gf = EtaQuotient::from_pairs(&[(1, -2), (2, 1)])
        .expand(Domain::Integer, order)
        .expect("E_1 has unit constant term");
    OverpartitionTable {
        values: gf.integers().expect("integer domain").to_vec(),
    }
}

/// Counts overpartitions of `n` directly: a partition together with a choice
/// of which distinct parts carry an overline.
pub fn enumerate_overpartitions(n: u64) -> Result<u64> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(count(n, n))
}

// Parts are chosen in decreasing order; each distinct part can be overlined
// or not, hence the factor 2.
fn count(n: u64, largest: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for part in 1..=largest.min(n) {
        let mut used = part;
        while used <= n {
            total += 2 * count(n - used, part - 1);
            used += part;
        }
    }
    total
}

/// Checks `p̄(m n + t) ≡ 0 (mod u)` for `0 <= n <= n_max`.
pub fn check_progression(m: u64, t: u64, u: u64, n_max: u64) -> Result<CongruenceClaim> {
    validate_progression(m, t, u)?;
    oracle_table(m * n_max + t).check_progression(m, t, u, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(table: &OverpartitionTable) -> Vec<u64> {
        table
            .values()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(small(&oracle_table(3)), [1, 2, 4, 8]);
        assert_eq!(small(&oracle_table(0)), [1]);
        assert_eq!(small(&oracle_table(6)), [1, 2, 4, 8, 14, 24, 40]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_overpartitions(3), Ok(8));
        assert_eq!(enumerate_overpartitions(0), Ok(1));
        assert_eq!(enumerate_overpartitions(1), Ok(2));
        assert_eq!(enumerate_overpartitions(20), Ok(7336));
        assert_eq!(
            enumerate_overpartitions(21),
            Err(Error::EnumerationTooLarge { n: 21, limit: 20 })
        );
    }

    #[test]
    fn oracle_agrees_with_enumeration() {
        let table = oracle_table(ENUMERATION_LIMIT);
        for n in 0..=ENUMERATION_LIMIT {
            assert_eq!(
                table.get(n),
                Some(&BigInt::from(enumerate_overpartitions(n).unwrap()))
            );
        }
    }

    #[test]
    fn table_invariants() {
        let table = oracle_table(600);
        assert_eq!(table.max_n(), 600);
        let v = table.values();
        assert_eq!(v[0], BigInt::from(1));
        for n in 1..v.len() {
            assert!(v[n] > BigInt::zero());
            assert!(v[n] >= v[n - 1]);
            assert!((&v[n] % 2u32).is_zero(), "p̄({n}) should be even");
        }
    }

    #[test]
    fn progression_examples() {
        let c = check_progression(80, 8, 25, 50).unwrap();
        assert_eq!(c.status, ClaimStatus::Verified);
        assert_eq!(c.checked_through, 50);
        assert!(check_progression(135, 63, 5, 40).unwrap().holds());

        // p̄(9) = 154 ≡ 4 (mod 25) already fails at n = 0.
        let bad = check_progression(80, 9, 25, 5).unwrap();
        assert_eq!(
            bad.status,
            ClaimStatus::Counterexample {
                n: 0,
                argument: 9,
                residue: 4
            }
        );
    }

    #[test]
    fn weaker_mod_5_progressions_hold() {
        let table = oracle_table(80 * 60 + 72);
        for t in [8, 52, 68, 72] {
            assert!(table.check_progression(80, t, 5, 60).unwrap().holds());
        }
    }

    #[test]
    fn progression_argument_errors() {
        assert!(check_progression(80, 80, 25, 1).is_err());
        assert!(check_progression(0, 0, 25, 1).is_err());
        assert_eq!(
            check_progression(80, 8, 1, 1),
            Err(Error::InvalidModulus(1))
        );
        assert!(oracle_table(10).check_progression(80, 8, 25, 1).is_err());
    }
}
