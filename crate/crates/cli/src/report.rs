//! Run reports and their JSON encodings.

use std::fmt::Write as _;

use num_rational::BigRational;
use overpart_core::identities::{IdentityCheck, Mismatch};
use overpart_core::parametrization::{AwNumericCheck, RPolynomialCheck};
use overpart_core::radu_sellers::{Certification, DeltaTuple, HypothesisReport};
use overpart_core::{ClaimStatus, CongruenceClaim};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_pass(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// One named sub-check.
#[derive(Debug, Clone, Serialize)]
pub struct Detail {
    pub name: String,
    pub status: Status,
    pub data: Value,
}

impl Detail {
    pub fn new(name: impl Into<String>, passed: bool, data: Value) -> Self {
        Detail {
            name: name.into(),
            status: Status::from_pass(passed),
            data,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub details: Vec<Detail>,
    pub wall_time: f64,
}

impl RunReport {
    /// Status is `pass` iff every detail passed.
    pub fn new(command: &str, inputs: Value, details: Vec<Detail>) -> Self {
        let status = Status::from_pass(details.iter().all(|d| d.status == Status::Pass));
        RunReport {
            command: command.into(),
            inputs,
            status,
            details,
            wall_time: 0.0,
        }
    }

    pub fn error(command: &str, inputs: Value, message: String) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            status: Status::Error,
            details: vec![Detail {
                name: "error".into(),
                status: Status::Error,
                data: json!(message),
            }],
            wall_time: 0.0,
        }
    }

    /// One line per sub-check followed by the overall status.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for d in &self.details {
            let _ = writeln!(out, "{:<5} {}", d.status.label(), d.name);
        }
        let _ = writeln!(
            out,
            "{}: {}",
            self.command,
            self.status.label().to_lowercase()
        );
        out
    }
}

fn rational(x: &BigRational) -> String {
    x.to_string()
}

pub fn claim(c: &CongruenceClaim) -> Value {
    let status = match &c.status {
        ClaimStatus::Verified => json!({ "kind": "verified" }),
        ClaimStatus::Certified {
            conditional_on_delta_star,
        } => json!({
            "kind": "certified",
            "conditional_on_delta_star": conditional_on_delta_star,
        }),
        ClaimStatus::Counterexample {
            n,
            argument,
            residue,
        } => json!({
            "kind": "counterexample",
            "n": n,
            "argument": argument,
            "residue": residue,
        }),
    };
    json!({
        "progression": format!("{}n+{}", c.m, c.t),
        "modulus": c.modulus,
        "checked_through": c.checked_through,
        "status": status,
    })
}

pub fn mismatch(m: &Mismatch) -> Value {
    json!({
        "part": m.part,
        "exponent": m.exponent,
        "lhs": m.lhs.to_string(),
        "rhs": m.rhs.to_string(),
    })
}

pub fn identity(c: &IdentityCheck) -> Value {
    json!({
        "name": c.name.as_str(),
        "modulus": c.modulus,
        "order": c.order,
        "status": c.status.as_str(),
        "first_mismatch": c.first_mismatch.as_ref().map(mismatch),
    })
}

pub fn r_polynomial(c: &RPolynomialCheck) -> Value {
    let poly: Vec<String> = c.reduced.poly.iter().map(rational).collect();
    let diffs: Vec<Value> = c
        .diffs
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "computed": d.computed.as_ref().map(rational),
                "expected": d.expected,
            })
        })
        .collect();
    json!({
        "target": format!("{:?}", c.target),
        "common": c.reduced.common.to_string(),
        "poly": poly,
        "diffs": diffs,
        "common_matches": c.common_matches,
        "factor_25": c.factor_25,
        "q_exponents_cancel": c.q_exponents_cancel,
        "exact_multiple_of_25": c.is_exact_multiple_of_25(),
    })
}

pub fn aw(c: &AwNumericCheck) -> Value {
    let results: Vec<Value> = c
        .results
        .iter()
        .map(|r| {
            json!({
                "identity": r.label,
                "first_mismatch": r.first_mismatch.as_ref().map(|(n, l, r)| json!({
                    "exponent": n,
                    "lhs": l.to_string(),
                    "rhs": r.to_string(),
                })),
            })
        })
        .collect();
    json!({ "order": c.order, "results": results })
}

pub fn tuple(t: &DeltaTuple) -> Value {
    let pairs = |m: &std::collections::BTreeMap<u64, i64>| -> Vec<[i64; 2]> {
        m.iter().map(|(&d, &e)| [d as i64, e]).collect()
    };
    json!({
        "m": t.m,
        "M": t.big_m,
        "N": t.big_n,
        "t": t.t,
        "u": t.u,
        "r": pairs(t.r()),
        "r_prime": pairs(t.r_prime()),
        "delta_star": t.delta_star,
    })
}

pub fn hypotheses(h: &HypothesisReport) -> Value {
    h.rows
        .iter()
        .map(|r| {
            json!({
                "delta": r.delta,
                "p_mr": rational(&r.p_mr),
                "p_star": rational(&r.p_star),
                "sum": rational(&r.sum),
                "holds": r.holds(),
            })
        })
        .collect()
}

pub fn certification(c: &Certification) -> Value {
    let status = if c.certified() {
        "certified"
    } else {
        "counterexample"
    };
    json!({
        "tuple": tuple(&c.tuple),
        "P_set": c.p_set,
        "kappa": c.kappa,
        "hypotheses": hypotheses(&c.hypotheses),
        "v": rational(&c.bound.v),
        "floor_v": c.bound.floor,
        "t_min": c.bound.t_min,
        "checked_range": { "n_from": 0, "n_through": c.bound.floor, "t_prime": c.p_set },
        "claims": c.claims.iter().map(claim).collect::<Vec<_>>(),
        "spot_checked_indices": c.spot_checked,
        "status": status,
        "condition": "conditional on Δ* membership (asserted, not verified)",
    })
}
