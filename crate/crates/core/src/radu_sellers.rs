//! The Radu–Sellers finite check for congruences of eta quotients.
//!
//! For `f_r = Π_{δ|M} E_δ^{r_δ} = Σ c_r(n) qⁿ`, a progression `m n + t` and a
//! modulus `u`, the criterion reduces `c_r(m n + t') ≡ 0 (mod u)` for all `n`
//! and all `t' ∈ P_{m,r}(t)` to the finitely many `n <= ⌊v⌋`, provided
//! `p_{m,r}(γ) + p*_{r'}(γ) >= 0` at every double-coset representative `γ`.
//!
//! Everything is exact; `v` is floored only at the very end. Membership of
//! the tuple in the admissible set `Δ*` is not checked here: the caller
//! asserts it, and certified claims carry that condition.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{divisors, prime_divisors};
use crate::error::{Error, Result};
use crate::overpartitions::{oracle_table, validate_progression, ClaimStatus, CongruenceClaim};
use crate::series::{Coefficient, Domain, EtaQuotient, TruncatedSeries};

/// Number of residue-domain coefficients re-derived over the integers.
pub const SPOT_CHECKS: usize = 50;
const SPOT_CHECK_SEED: u64 = 0x5eed_0080_0135;

/// `(m, M, N, t, r, r', u)` plus the caller's `Δ*` assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTuple {
    pub m: u64,
    /// Level `M` of the eta quotient `r`.
    pub big_m: u64,
    /// Level `N` of the congruence subgroup.
    pub big_n: u64,
    pub t: u64,
    r: BTreeMap<u64, i64>,
    r_prime: BTreeMap<u64, i64>,
    pub u: u64,
    pub delta_star: bool,
}

impl DeltaTuple {
    /// `r` and `r'` are keyed by divisor and must cover exactly the divisors
    /// of `M` and `N`.
    pub fn new(
        m: u64,
        big_m: u64,
        big_n: u64,
        t: u64,
        r: BTreeMap<u64, i64>,
        r_prime: BTreeMap<u64, i64>,
        u: u64,
    ) -> Result<Self> {
        if big_m == 0 || big_n == 0 {
            return Err(Error::InvalidTuple("M and N must be positive".into()));
        }
        validate_progression(m, t, u).map_err(|e| Error::InvalidTuple(format!("{e}")))?;
        for (name, level, map) in [("r", big_m, &r), ("r'", big_n, &r_prime)] {
            let keys: Vec<u64> = map.keys().copied().collect();
            if keys != divisors(level) {
                return Err(Error::InvalidTuple(format!(
                    "{name} must be indexed by the divisors of {level}, got {keys:?}"
                )));
            }
        }
        Ok(DeltaTuple {
            m,
            big_m,
            big_n,
            t,
            r,
            r_prime,
            u,
            delta_star: false,
        })
    }

    /// `r` and `r'` listed in increasing divisor order.
    pub fn from_vectors(
        m: u64,
        big_m: u64,
        big_n: u64,
        t: u64,
        r: &[i64],
        r_prime: &[i64],
        u: u64,
    ) -> Result<Self> {
        let keyed = |level: u64, v: &[i64], name: &str| -> Result<BTreeMap<u64, i64>> {
            let ds = divisors(level);
            if ds.len() != v.len() {
                return Err(Error::InvalidTuple(format!(
                    "{name} needs {} entries for the divisors of {level}, got {}",
                    ds.len(),
                    v.len()
                )));
            }
            Ok(ds.into_iter().zip(v.iter().copied()).collect())
        };
        Self::new(
            m,
            big_m,
            big_n,
            t,
            keyed(big_m, r, "r")?,
            keyed(big_n, r_prime, "r'")?,
            u,
        )
    }

    pub fn with_delta_star(mut self, asserted: bool) -> Self {
        self.delta_star = asserted;
        self
    }

    /// `p̄(135n + t') mod 5` through `f_r = E_1³E_2/E_5`.
    pub fn theorem_two() -> Self {
        Self::from_vectors(
            135,
            10,
            30,
            63,
            &[3, 1, -1, 0],
            &[7, 2, 0, 0, 0, 1, 0, 0],
            5,
        )
        .expect("valid tuple")
        .with_delta_star(true)
    }

    /// `p̄(80n + t') mod 25` through `f_r = E_1²³E_2/E_5⁵`, for `t ∈ {8, 52}`.
    pub fn mod_25(t: u64) -> Result<Self> {
        Ok(Self::from_vectors(
            80,
            10,
            40,
            t,
            &[23, 1, -5, 0],
            &[5, 0, 0, 0, 0, 0, 0, 0],
            25,
        )?
        .with_delta_star(true))
    }

    pub fn r(&self) -> &BTreeMap<u64, i64> {
        &self.r
    }

    pub fn r_prime(&self) -> &BTreeMap<u64, i64> {
        &self.r_prime
    }

    /// `Σ_{δ|M} δ r_δ`.
    fn weighted_r(&self) -> i64 {
        self.r.iter().map(|(&d, &e)| d as i64 * e).sum()
    }

    /// `f_r` as an eta quotient.
    pub fn eta_quotient(&self) -> EtaQuotient {
        self.r
            .iter()
            .fold(EtaQuotient::new(), |q, (&d, &e)| q.with(d, e))
    }
}

/// `[[a, b], [c, d]]` with determinant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CosetRep {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CosetRep {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::InvalidArgument(format!(
                "[[{a}, {b}], [{c}, {d}]] does not have determinant 1"
            )));
        }
        Ok(CosetRep { a, b, c, d })
    }

    /// `γ_δ = [[1, 0], [δ, 1]]`.
    pub fn gamma(delta: u64) -> Self {
        CosetRep {
            a: 1,
            b: 0,
            c: delta as i64,
            d: 1,
        }
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }
}

/// `{x² mod n : gcd(x, n) = 1}`.
pub fn squares_set(n: u64) -> BTreeSet<u64> {
    if n == 1 {
        return BTreeSet::from([0]);
    }
    (1..n)
        .filter(|x| x.gcd(&n) == 1)
        .map(|x| ((x as u128 * x as u128) % n as u128) as u64)
        .collect()
}

/// `t s + (s−1)/24 · Σ δ r_δ (mod m)`.
pub fn p_set_action(tuple: &DeltaTuple, t: u64, s: u64) -> Result<u64> {
    if s % 24 != 1 {
        return Err(Error::NonIntegralShift(s));
    }
    let m = tuple.m as i128;
    let shift = (s as i128 - 1) / 24 * tuple.weighted_r() as i128;
    Ok((t as i128 * s as i128 + shift).rem_euclid(m) as u64)
}

/// `P_{m,r}(t)`.
pub fn p_set(tuple: &DeltaTuple) -> Result<BTreeSet<u64>> {
    squares_set(24 * tuple.m)
        .into_iter()
        .map(|s| p_set_action(tuple, tuple.t, s))
        .collect()
}

/// `gcd(m² − 1, 24)`.
pub fn kappa(m: u64) -> u64 {
    ((m as u128 * m as u128 - 1) % 24).gcd(&24) as u64
}

fn gcd_abs(x: i128, y: i128) -> i128 {
    x.abs().gcd(&y.abs())
}

/// `min_λ (1/24) Σ_{δ|M} r_δ gcd²(δ(a + κλc), mc) / (δ m)`.
pub fn p_mr(gamma: &CosetRep, tuple: &DeltaTuple) -> Result<BigRational> {
    if gamma.c == 0 {
        return Err(Error::DegenerateRepresentative);
    }
    let m = tuple.m as i128;
    let k = kappa(tuple.m) as i128;
    let (a, c) = (gamma.a as i128, gamma.c as i128);
    // Scaled by 24 m · lcm(δ) so the minimum is taken over integers.
    let l = tuple.r.keys().fold(1i128, |acc, &d| acc.lcm(&(d as i128)));
    let best = (0..m)
        .map(|lambda| {
            tuple
                .r
                .iter()
                .map(|(&d, &e)| {
                    let g = gcd_abs(d as i128 * (a + k * lambda * c), m * c);
                    BigInt::from(e)
                        * BigInt::from(g)
                        * BigInt::from(g)
                        * BigInt::from(l / d as i128)
                })
                .sum::<BigInt>()
        })
        .min()
        .expect("m >= 1");
    Ok(BigRational::new(best, BigInt::from(24 * m * l)))
}

/// `(1/24) Σ_{δ|N} r'_δ gcd²(δ, c) / δ`, with `r'` keyed by the divisors of `N`.
pub fn p_star(gamma: &CosetRep, r_prime: &BTreeMap<u64, i64>) -> BigRational {
    r_prime
        .iter()
        .map(|(&d, &e)| {
            let g = gcd_abs(d as i128, gamma.c as i128);
            BigRational::new(BigInt::from(e) * BigInt::from(g * g), BigInt::from(24 * d))
        })
        .sum()
}

/// `γ_δ` for every divisor `δ` of `N`; a superset of a complete set of
/// double-coset representatives.
pub fn coset_reps(big_n: u64) -> Vec<CosetRep> {
    divisors(big_n).into_iter().map(CosetRep::gamma).collect()
}

/// `v` and `⌊v⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub v: BigRational,
    pub floor: i64,
    pub t_min: u64,
}

/// The bound with `t_min = min P_{m,r}(t)`.
pub fn bound_v(tuple: &DeltaTuple) -> Result<Bound> {
    let t_min = *p_set(tuple)?.first().expect("t is always in the set");
    let v = bound_v_with_t_min(tuple, t_min);
    let floor = v.floor().to_integer().to_i64().expect("bound fits in i64");
    Ok(Bound { v, floor, t_min })
}

/// The bound as a function of `t_min`, everything else taken from `tuple`.
pub fn bound_v_with_t_min(tuple: &DeltaTuple, t_min: u64) -> BigRational {
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    let sum_r: i64 = tuple.r.values().sum();
    let sum_rp: i64 = tuple.r_prime.values().sum();
    let weighted_rp: i64 = tuple.r_prime.iter().map(|(&d, &e)| d as i64 * e).sum();
    // N Π_{p|N} (1 + 1/p) = Π p^(k−1) (p + 1) over the prime powers of N.
    let index = prime_divisors(tuple.big_n)
        .into_iter()
        .fold(int(tuple.big_n as i64), |acc, p| {
            acc * BigRational::new((p + 1).into(), p.into())
        });
    let m = tuple.m as i64;
    (int(sum_r + sum_rp) * index - int(weighted_rp)) / int(24)
        - BigRational::new(tuple.weighted_r().into(), (24 * m).into())
        - BigRational::new((t_min as i64).into(), m.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisRow {
    pub delta: u64,
    pub p_mr: BigRational,
    pub p_star: BigRational,
    pub sum: BigRational,
}

impl HypothesisRow {
    pub fn holds(&self) -> bool {
        !self.sum.is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub rows: Vec<HypothesisRow>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(HypothesisRow::holds)
    }

    pub fn first_failure(&self) -> Option<&HypothesisRow> {
        self.rows.iter().find(|r| !r.holds())
    }
}

/// `p_{m,r}(γ_δ) + p*_{r'}(γ_δ)` at every representative.
pub fn check_hypotheses(tuple: &DeltaTuple) -> Result<HypothesisReport> {
    let rows = divisors(tuple.big_n)
        .into_iter()
        .map(|delta| {
            let gamma = CosetRep::gamma(delta);
            let p_mr = p_mr(&gamma, tuple)?;
            let p_star = p_star(&gamma, &tuple.r_prime);
            let sum = &p_mr + &p_star;
            Ok(HypothesisRow {
                delta,
                p_mr,
                p_star,
                sum,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HypothesisReport { rows })
}

/// Outcome of running the criterion on one tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub tuple: DeltaTuple,
    pub p_set: BTreeSet<u64>,
    pub kappa: u64,
    pub hypotheses: HypothesisReport,
    pub bound: Bound,
    /// One claim per `t' ∈ P_{m,r}(t)`, checked for `0 <= n <= ⌊v⌋`.
    pub claims: Vec<CongruenceClaim>,
    /// Indices whose residue was re-derived from the integer expansion.
    pub spot_checked: Vec<usize>,
}

impl Certification {
    pub fn certified(&self) -> bool {
        self.claims.iter().all(CongruenceClaim::holds)
    }
}

/// Runs the full criterion: hypotheses, bound, and the coefficient check
/// over every `t' ∈ P_{m,r}(t)`.
///
/// Fails with [`Error::DeltaStarNotAsserted`] unless the tuple carries the
/// `Δ*` assertion, and with [`Error::HypothesisFailed`] at the first
/// representative with a negative sum.
pub fn certify(tuple: &DeltaTuple) -> Result<Certification> {
    if !tuple.delta_star {
        return Err(Error::DeltaStarNotAsserted);
    }
    let hypotheses = check_hypotheses(tuple)?;
    if let Some(row) = hypotheses.first_failure() {
        return Err(Error::HypothesisFailed {
            delta: row.delta,
            sum: format!("{}", row.sum),
        });
    }
    let p_set = p_set(tuple)?;
    let bound = bound_v(tuple)?;
    let n_max = u64::try_from(bound.floor.max(0)).expect("nonnegative");
    let max_t = *p_set.last().expect("nonempty");
    let order = usize::try_from(tuple.m * (n_max + 1) + max_t).expect("order fits");

    let eta = tuple.eta_quotient();
    let reduced = eta.expand(Domain::residue(tuple.u)?, order)?;
    let spot_checked = spot_check(&eta, &reduced, tuple.u)?;
    let residues = reduced.residues().expect("residue domain");

    let claims = p_set
        .iter()
        .map(|&t| {
            let failure = (0..=n_max).find_map(|n| {
                let argument = tuple.m * n + t;
                let r = residues[argument as usize];
                (r != 0).then_some(ClaimStatus::Counterexample {
                    n,
                    argument,
                    residue: r,
                })
            });
            CongruenceClaim {
                m: tuple.m,
                t,
                modulus: tuple.u,
                checked_through: n_max,
                status: failure.unwrap_or(ClaimStatus::Certified {
                    conditional_on_delta_star: true,
                }),
            }
        })
        .collect();
    Ok(Certification {
        tuple: tuple.clone(),
        p_set,
        kappa: kappa(tuple.m),
        hypotheses,
        bound,
        claims,
        spot_checked,
    })
}

/// Re-derives [`SPOT_CHECKS`] seeded coefficients over the integers and
/// compares them with the residue-domain expansion.
fn spot_check(eta: &EtaQuotient, reduced: &TruncatedSeries, u: u64) -> Result<Vec<usize>> {
    let order = reduced.order();
    let exact = eta.expand(Domain::Integer, order)?.reduce(u)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
    let mut indices: Vec<usize> = (0..SPOT_CHECKS).map(|_| rng.gen_range(0..order)).collect();
    indices.sort_unstable();
    indices.dedup();
    for &i in &indices {
        if exact.coefficient(i) != reduced.coefficient(i) {
            return Err(Error::InvalidArgument(format!(
                "residue expansion disagrees with the integer expansion at q^{i}"
            )));
        }
    }
    Ok(indices)
}

/// First `n < order` with `c_r(n) ≢ p̄(n) (mod u)`, if any.
pub fn oracle_agreement(tuple: &DeltaTuple, order: usize) -> Result<Option<usize>> {
    let domain = Domain::residue(tuple.u)?;
    let f = tuple.eta_quotient().expand(domain, order)?;
    let table = oracle_table(order.saturating_sub(1) as u64);
    let oracle = TruncatedSeries::from_integers(domain, table.values().to_vec()).truncate(order);
    Ok(f.first_difference(&oracle)?.map(|(n, _, _)| n))
}

/// Convenience for reports: `c_r(n) mod u` at one index.
pub fn coefficient_mod(tuple: &DeltaTuple, n: usize) -> Result<u64> {
    let f = tuple
        .eta_quotient()
        .expand(Domain::residue(tuple.u)?, n + 1)?;
    match f.coefficient(n) {
        Some(Coefficient::Residue(r)) => Ok(r),
        _ => unreachable!("residue domain"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn squares_examples() {
        assert_eq!(squares_set(8), set(&[1]));
        assert_eq!(squares_set(5), set(&[1, 4]));
        assert!(squares_set(24 * 135).iter().all(|s| s % 24 == 1));
        assert!(squares_set(24 * 80).iter().all(|s| s % 24 == 1));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(135), 8);
        assert_eq!(kappa(80), 3);
        assert_eq!(kappa(5), 24);
        assert_eq!(kappa(1), 24);
    }

    #[test]
    fn p_set_examples() {
        assert_eq!(p_set(&DeltaTuple::theorem_two()).unwrap(), set(&[63, 117]));
        assert_eq!(
            p_set(&DeltaTuple::mod_25(8).unwrap()).unwrap(),
            set(&[8, 72])
        );
        assert_eq!(
            p_set(&DeltaTuple::mod_25(52).unwrap()).unwrap(),
            set(&[52, 68])
        );
    }

    #[test]
    fn tuple_validation() {
        assert!(DeltaTuple::from_vectors(135, 10, 30, 63, &[3, 1, -1], &[0; 8], 5).is_err());
        assert!(DeltaTuple::from_vectors(135, 10, 30, 135, &[3, 1, -1, 0], &[0; 8], 5).is_err());
        let mut r = BTreeMap::from([(1, 3), (2, 1), (5, -1), (10, 0)]);
        let rp: BTreeMap<u64, i64> = divisors(30).into_iter().map(|d| (d, 0)).collect();
        assert!(DeltaTuple::new(135, 10, 30, 63, r.clone(), rp.clone(), 5).is_ok());
        r.insert(3, 0);
        assert!(DeltaTuple::new(135, 10, 30, 63, r, rp, 5).is_err());
        assert!(
            !DeltaTuple::from_vectors(5, 1, 1, 0, &[1], &[0], 5)
                .unwrap()
                .delta_star
        );
    }

    #[test]
    fn p_star_examples() {
        let t = DeltaTuple::theorem_two();
        assert_eq!(p_star(&CosetRep::gamma(1), t.r_prime()), q(27, 80));
        // c = N collapses gcd(δ, c) to δ.
        let full = p_star(&CosetRep::gamma(30), t.r_prime());
        let direct: i64 = t.r_prime().iter().map(|(&d, &e)| d as i64 * e).sum();
        assert_eq!(full, q(direct, 24));
        let zero: BTreeMap<u64, i64> = divisors(30).into_iter().map(|d| (d, 0)).collect();
        assert!(p_star(&CosetRep::gamma(7), &zero).is_zero());
    }

    #[test]
    fn p_mr_edge_cases() {
        let zero = DeltaTuple::from_vectors(135, 10, 30, 63, &[0; 4], &[0; 8], 5).unwrap();
        assert!(p_mr(&CosetRep::gamma(3), &zero).unwrap().is_zero());
        let single = DeltaTuple::from_vectors(1, 1, 1, 0, &[24], &[0], 2).unwrap();
        // m = 1: only λ = 0; gcd(1, 1)² / 1 · 24 / 24 = 1.
        assert_eq!(p_mr(&CosetRep::gamma(1), &single).unwrap(), q(1, 1));
        let identity = CosetRep::new(1, 0, 0, 1).unwrap();
        assert_eq!(
            p_mr(&identity, &single),
            Err(Error::DegenerateRepresentative)
        );
        assert!(CosetRep::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn coset_rep_examples() {
        let reps = coset_reps(30);
        assert_eq!(
            reps.iter().map(|g| g.c).collect::<Vec<_>>(),
            [1, 2, 3, 5, 6, 10, 15, 30]
        );
        let reps = coset_reps(40);
        assert_eq!(
            reps.iter().map(|g| g.c).collect::<Vec<_>>(),
            [1, 2, 4, 5, 8, 10, 20, 40]
        );
        assert!(reps.iter().all(|g| g.determinant() == 1));
    }

    #[test]
    fn bound_examples() {
        let b = bound_v(&DeltaTuple::theorem_two()).unwrap();
        assert_eq!((b.v.clone(), b.floor, b.t_min), (q(4519, 120), 37, 63));
        let b = bound_v(&DeltaTuple::mod_25(8).unwrap()).unwrap();
        assert_eq!((b.v.clone(), b.floor), (q(8603, 120), 71));
        let b = bound_v(&DeltaTuple::mod_25(52).unwrap()).unwrap();
        assert_eq!((b.v.clone(), b.floor), (q(8537, 120), 71));
    }

    #[test]
    fn hypothesis_values_theorem_two() {
        let report = check_hypotheses(&DeltaTuple::theorem_two()).unwrap();
        // Frozen from a direct evaluation of the min over λ ∈ {0..134}.
        let expected = [
            (1, q(-27, 80), q(27, 80), q(0, 1)),
            (2, q(0, 1), q(19, 40), q(19, 40)),
            (3, q(-1, 2160), q(27, 80), q(91, 270)),
            (5, q(-27, 80), q(7, 16), q(1, 10)),
            (6, q(0, 1), q(19, 40), q(19, 40)),
            (10, q(0, 1), q(7, 8), q(7, 8)),
            (15, q(-1, 2160), q(7, 16), q(59, 135)),
            (30, q(0, 1), q(7, 8), q(7, 8)),
        ];
        assert_eq!(report.rows.len(), 8);
        for (row, (delta, p_mr, p_star, sum)) in report.rows.iter().zip(expected) {
            assert_eq!(
                (row.delta, &row.p_mr, &row.p_star, &row.sum),
                (delta, &p_mr, &p_star, &sum)
            );
        }
        assert!(report.passed());
    }

    #[test]
    fn hypothesis_values_mod_25() {
        for t in [8, 52] {
            let report = check_hypotheses(&DeltaTuple::mod_25(t).unwrap()).unwrap();
            for row in &report.rows {
                let low = row.delta == 1 || row.delta == 5;
                assert_eq!(
                    row.p_mr,
                    if low { q(-1, 5) } else { q(0, 1) },
                    "δ = {}",
                    row.delta
                );
                assert_eq!(row.p_star, q(5, 24));
                assert_eq!(row.sum, if low { q(1, 120) } else { q(5, 24) });
            }
            assert!(report.passed());
        }
    }

    #[test]
    fn negative_r_prime_fails() {
        let bad = DeltaTuple::from_vectors(135, 10, 30, 63, &[3, 1, -1, 0], &[-100; 8], 5)
            .unwrap()
            .with_delta_star(true);
        let report = check_hypotheses(&bad).unwrap();
        assert!(report.rows.iter().all(|r| !r.holds()));
        let first = report.first_failure().unwrap();
        assert_eq!((first.delta, first.sum.clone()), (1, q(-827, 80)));
        assert_eq!(
            certify(&bad),
            Err(Error::HypothesisFailed {
                delta: 1,
                sum: "-827/80".to_string()
            })
        );
    }

    #[test]
    fn certify_requires_delta_star() {
        let t = DeltaTuple::theorem_two().with_delta_star(false);
        assert_eq!(certify(&t), Err(Error::DeltaStarNotAsserted));
    }

    #[test]
    fn certify_theorem_two() {
        let c = certify(&DeltaTuple::theorem_two()).unwrap();
        assert!(c.certified());
        assert_eq!(c.kappa, 8);
        assert_eq!(c.claims.iter().map(|c| c.t).collect::<Vec<_>>(), [63, 117]);
        assert!(c.claims.iter().all(|c| c.checked_through == 37
            && c.status
                == ClaimStatus::Certified {
                    conditional_on_delta_star: true
                }));
        assert!(!c.spot_checked.is_empty());
    }

    #[test]
    fn certify_reports_counterexample() {
        // The same r with t = 0: c_r(0) = 1 is not ≡ 0 mod 5.
        let t =
            DeltaTuple::from_vectors(135, 10, 30, 0, &[3, 1, -1, 0], &[7, 2, 0, 0, 0, 1, 0, 0], 5)
                .unwrap()
                .with_delta_star(true);
        let c = certify(&t).unwrap();
        assert!(!c.certified());
        assert!(matches!(
            c.claims[0].status,
            ClaimStatus::Counterexample {
                n: 0,
                argument: 0,
                residue: 1
            }
        ));
    }

    #[test]
    fn c_r_matches_oracle() {
        assert_eq!(
            oracle_agreement(&DeltaTuple::theorem_two(), 400).unwrap(),
            None
        );
        assert_eq!(
            oracle_agreement(&DeltaTuple::mod_25(8).unwrap(), 400).unwrap(),
            None
        );
        assert_eq!(
            coefficient_mod(&DeltaTuple::theorem_two(), 3).unwrap(),
            8 % 5
        );
    }

    fn arbitrary_tuple() -> impl Strategy<Value = DeltaTuple> {
        (
            prop::sample::select(vec![5u64, 7, 11, 13, 25, 80, 135]),
            prop::collection::vec(-30i64..30, 4),
            any::<u64>(),
        )
            .prop_map(|(m, r, t)| {
                DeltaTuple::from_vectors(m, 10, 30, t % m, &r, &[7, 2, 0, 0, 0, 1, 0, 0], 5)
                    .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn p_set_is_an_orbit(tuple in arbitrary_tuple()) {
            let p = p_set(&tuple).unwrap();
            prop_assert!(p.contains(&tuple.t));
            for s in squares_set(24 * tuple.m) {
                for &t in &p {
                    prop_assert!(p.contains(&p_set_action(&tuple, t, s).unwrap()));
                }
            }
        }

        #[test]
        fn bound_decreases_in_t_min(tuple in arbitrary_tuple(), a in 0u64..200, b in 0u64..200) {
            let (lo, hi) = (a.min(b), a.max(b));
            prop_assert!(bound_v_with_t_min(&tuple, lo) >= bound_v_with_t_min(&tuple, hi));
            if lo < hi {
                prop_assert!(bound_v_with_t_min(&tuple, lo) > bound_v_with_t_min(&tuple, hi));
            }
        }
    }
}
