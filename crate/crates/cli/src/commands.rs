use std::path::Path;

use anyhow::{bail, Result};
use overpart_core::identities::{
    proof_chain, verify, verify_theorem_chain, verify_with_modulus, IdentityName, ProofChain,
    Theorem, CATALOG,
};
use overpart_core::overpartitions::{
    check_progression, enumerate_overpartitions, oracle_table, ENUMERATION_LIMIT,
};
use overpart_core::parametrization::{verify_aw_numeric, verify_r_polynomial, RPolynomial};
use overpart_core::radu_sellers::{certify, check_hypotheses, oracle_agreement, DeltaTuple};
use overpart_core::Error;
use serde_json::{json, Value};

use crate::config::{load_tuple, DEFAULT_AW_ORDER};
use crate::report::{self, Detail, RunReport};

/// A finished command: the record plus its human rendering.
pub struct Outcome {
    pub report: RunReport,
    pub stdout: String,
}

impl Outcome {
    fn rendered(report: RunReport) -> Self {
        let stdout = report.render();
        Outcome { report, stdout }
    }
}

pub fn oracle(n: u64) -> Result<Outcome> {
    let value = oracle_table(n).get(n).cloned().expect("table reaches n");
    let details = vec![Detail::new(
        format!("pbar({n})"),
        true,
        json!(value.to_string()),
    )];
    Ok(Outcome {
        report: RunReport::new("oracle", json!({ "n": n }), details),
        stdout: format!("{value}\n"),
    })
}

pub fn check(m: u64, t: u64, modulus: u64, count: u64) -> Result<Outcome> {
    let claim = check_progression(m, t, modulus, count)?;
    let details = vec![Detail::new(
        format!("pbar({m}n+{t}) = 0 mod {modulus}"),
        claim.holds(),
        report::claim(&claim),
    )];
    let inputs = json!({ "m": m, "t": t, "modulus": modulus, "count": count });
    Ok(Outcome::rendered(RunReport::new("check", inputs, details)))
}

fn identity_detail(name: IdentityName, order: usize, modulus: Option<u64>) -> Result<Detail> {
    let check = verify_with_modulus(name, order, modulus)?;
    Ok(Detail::new(
        name.as_str(),
        check.passed(),
        report::identity(&check),
    ))
}

pub fn verify_identity(name: &str, order: usize, modulus: Option<u64>) -> Result<Outcome> {
    let name: IdentityName = name.parse()?;
    let inputs = json!({ "name": name.as_str(), "order": order, "modulus": modulus });
    let details = vec![identity_detail(name, order, modulus)?];
    Ok(Outcome::rendered(RunReport::new(
        "verify-identity",
        inputs,
        details,
    )))
}

fn theorem_details(number: u8, count: u64) -> Result<Vec<Detail>> {
    let theorem = Theorem::from_number(number)?;
    let chain = verify_theorem_chain(theorem, count)?;
    Ok(chain
        .claims
        .iter()
        .map(|c| {
            Detail::new(
                format!("pbar({}n+{}) = 0 mod {}", c.m, c.t, c.modulus),
                c.holds(),
                report::claim(c),
            )
        })
        .collect())
}

pub fn verify_theorem(number: u8, count: u64) -> Result<Outcome> {
    let inputs = json!({ "theorem": number, "count": count });
    Ok(Outcome::rendered(RunReport::new(
        "verify-theorem",
        inputs,
        theorem_details(number, count)?,
    )))
}

fn r_target(lemma: u8) -> Result<RPolynomial> {
    match lemma {
        4 => Ok(RPolynomial::R1),
        5 => Ok(RPolynomial::R2),
        _ => bail!("--lemma must be 4 or 5, got {lemma}"),
    }
}

fn parametrization_detail(target: RPolynomial) -> Result<Detail> {
    let check = verify_r_polynomial(target)?;
    Ok(Detail::new(
        format!("reduce_sum {target:?}"),
        check.passed(),
        report::r_polynomial(&check),
    ))
}

pub fn verify_parametrization(lemma: u8) -> Result<Outcome> {
    let details = vec![parametrization_detail(r_target(lemma)?)?];
    Ok(Outcome::rendered(RunReport::new(
        "verify-parametrization",
        json!({ "lemma": lemma }),
        details,
    )))
}

fn aw_detail(order: usize) -> Result<Detail> {
    let check = verify_aw_numeric(order)?;
    Ok(Detail::new(
        format!("parametrization series to order {order}"),
        check.passed(),
        report::aw(&check),
    ))
}

pub fn verify_aw(order: usize) -> Result<Outcome> {
    Ok(Outcome::rendered(RunReport::new(
        "verify-aw",
        json!({ "order": order }),
        vec![aw_detail(order)?],
    )))
}

/// Certification record for one tuple; a failed hypothesis is a `fail`
/// result, not an error.
fn radu_sellers_record(tuple: &DeltaTuple) -> Result<(bool, Value)> {
    match certify(tuple) {
        Ok(cert) => {
            let expansion_order = (tuple.m * (cert.bound.floor as u64 + 1)) as usize
                + *cert.p_set.last().expect("nonempty") as usize;
            let disagreement = oracle_agreement(tuple, expansion_order)?;
            let mut record = report::certification(&cert);
            record["oracle_agreement"] = json!({
                "order": expansion_order,
                "first_disagreement": disagreement,
            });
            Ok((cert.certified() && disagreement.is_none(), record))
        }
        Err(Error::HypothesisFailed { delta, sum }) => {
            let hypotheses = check_hypotheses(tuple)?;
            let record = json!({
                "tuple": report::tuple(tuple),
                "hypotheses": report::hypotheses(&hypotheses),
                "status": "hypothesis_failed",
                "failure": { "delta": delta, "sum": sum },
            });
            Ok((false, record))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn radu_sellers(path: &Path) -> Result<Outcome> {
    let tuple = load_tuple(path)?;
    let (passed, record) = radu_sellers_record(&tuple)?;
    let stdout = format!("{}\n", serde_json::to_string_pretty(&record)?);
    let name = format!("certify {}n+{} mod {}", tuple.m, tuple.t, tuple.u);
    let inputs = json!({ "config": path.display().to_string() });
    Ok(Outcome {
        report: RunReport::new(
            "radu-sellers",
            inputs,
            vec![Detail::new(name, passed, record)],
        ),
        stdout,
    })
}

/// Every check, in dependency order, as one report.
pub fn all(order: Option<usize>, count: u64) -> Result<Outcome> {
    let mut details = Vec::new();

    let table = oracle_table(ENUMERATION_LIMIT);
    let mut first_disagreement = None;
    for n in 0..=ENUMERATION_LIMIT {
        let brute = enumerate_overpartitions(n)?;
        if table.get(n).map(|v| v.to_string()) != Some(brute.to_string()) {
            first_disagreement = Some(n);
            break;
        }
    }
    let small = [(0u64, 1u64), (3, 8)]
        .iter()
        .all(|&(n, v)| table.get(n) == Some(&v.into()));
    details.push(Detail::new(
        "oracle independence",
        first_disagreement.is_none() && small,
        json!({ "through": ENUMERATION_LIMIT, "first_disagreement": first_disagreement }),
    ));

    for number in [1, 2] {
        details.extend(theorem_details(number, count)?);
    }

    for name in CATALOG {
        details.push(identity_detail(
            name,
            order.unwrap_or(name.suite_order()),
            None,
        )?);
    }
    let extra = IdentityName::Dissect16n4Corrected;
    let check = verify(extra, order.unwrap_or(extra.suite_order()))?;
    details.push(Detail::new(
        extra.as_str(),
        check.passed(),
        report::identity(&check),
    ));
    for (label, chain) in [
        ("proof chain psi", ProofChain::Psi),
        ("proof chain phi", ProofChain::Phi),
    ] {
        let at = order.unwrap_or(overpart_core::identities::DEFAULT_ORDER);
        let mismatch = proof_chain(chain, at)?;
        details.push(Detail::new(
            label,
            mismatch.is_none(),
            json!({ "order": at, "first_mismatch": mismatch.as_ref().map(report::mismatch) }),
        ));
    }

    for target in [RPolynomial::R1, RPolynomial::R2] {
        details.push(parametrization_detail(target)?);
    }
    details.push(aw_detail(DEFAULT_AW_ORDER)?);

    for tuple in [
        DeltaTuple::theorem_two(),
        DeltaTuple::mod_25(8)?,
        DeltaTuple::mod_25(52)?,
    ] {
        let (passed, record) = radu_sellers_record(&tuple)?;
        details.push(Detail::new(
            format!("certify {}n+{} mod {}", tuple.m, tuple.t, tuple.u),
            passed,
            record,
        ));
    }

    let inputs = json!({ "order": order, "count": count });
    Ok(Outcome::rendered(RunReport::new("all", inputs, details)))
}
