//! Tuple configuration files for `radu-sellers --config`.
//!
//! ```toml
//! m = 135
//! M = 10
//! N = 30
//! t = 63
//! u = 5
//! delta_star = true
//!
//! [r]        # exponent of E_δ for every divisor δ of M
//! 1 = 3
//! 2 = 1
//! 5 = -1
//! 10 = 0
//!
//! [r_prime]  # one entry for every divisor δ of N
//! 1 = 7
//! ...
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use overpart_core::radu_sellers::DeltaTuple;
use serde::Deserialize;

/// Series order for `verify-identity` and the identity part of `all`.
pub const DEFAULT_ORDER: usize = overpart_core::identities::DEFAULT_ORDER;
/// Largest `n` for progression checks.
pub const DEFAULT_COUNT: u64 = 100;
/// Order of the parametrization series check.
pub const DEFAULT_AW_ORDER: usize = 60;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleConfig {
    m: u64,
    #[serde(rename = "M")]
    big_m: u64,
    #[serde(rename = "N")]
    big_n: u64,
    t: u64,
    u: u64,
    #[serde(default)]
    delta_star: bool,
    r: BTreeMap<String, i64>,
    r_prime: BTreeMap<String, i64>,
}

fn by_divisor(table: &str, raw: BTreeMap<String, i64>) -> Result<BTreeMap<u64, i64>> {
    raw.into_iter()
        .map(|(k, v)| {
            let d = k
                .trim()
                .parse::<u64>()
                .with_context(|| format!("[{table}] key `{k}` is not a divisor"))?;
            Ok((d, v))
        })
        .collect()
}

pub fn parse_tuple(text: &str) -> Result<DeltaTuple> {
    let cfg: TupleConfig = toml::from_str(text).context("malformed tuple config")?;
    let tuple = DeltaTuple::new(
        cfg.m,
        cfg.big_m,
        cfg.big_n,
        cfg.t,
        by_divisor("r", cfg.r)?,
        by_divisor("r_prime", cfg.r_prime)?,
        cfg.u,
    )?;
    Ok(tuple.with_delta_star(cfg.delta_star))
}

pub fn load_tuple(path: &Path) -> Result<DeltaTuple> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    parse_tuple(&text).with_context(|| format!("in {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SHIPPED: [(&str, &str); 3] = [
        (
            "theorem2_135n63",
            include_str!("../configs/theorem2_135n63.toml"),
        ),
        (
            "theorem1_80n8",
            include_str!("../configs/theorem1_80n8.toml"),
        ),
        (
            "theorem1_80n52",
            include_str!("../configs/theorem1_80n52.toml"),
        ),
    ];

    #[test]
    fn shipped_configs_match_presets() {
        let presets = [
            DeltaTuple::theorem_two(),
            DeltaTuple::mod_25(8).unwrap(),
            DeltaTuple::mod_25(52).unwrap(),
        ];
        for ((name, text), preset) in SHIPPED.iter().zip(presets) {
            assert_eq!(parse_tuple(text).unwrap(), preset, "{name}");
        }
    }

    #[test]
    fn delta_star_defaults_to_false() {
        let text = SHIPPED[0].1.replace("delta_star = true\n", "");
        assert!(!parse_tuple(&text).unwrap().delta_star);
    }

    #[test]
    fn malformed_configs_rejected() {
        let text = SHIPPED[0].1;
        assert!(parse_tuple(&text.replace("10 = 0\n\n[r_prime]", "\n[r_prime]")).is_err());
        assert!(parse_tuple(&text.replace("m = 135", "m = \"135\"")).is_err());
        assert!(parse_tuple(&text.replace("1 = 3", "one = 3")).is_err());
        assert!(parse_tuple(&format!("{text}\nextra = 1\n")).is_err());
        assert!(parse_tuple("").is_err());
    }
}
