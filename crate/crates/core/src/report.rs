//! JSON run reports with `meta`, `params`, `result`, `validation` and `timing` sections.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub bytes: usize,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: &str, data: &[u8]) -> Self {
        InputDigest { name: name.to_string(), bytes: data.len(), sha256: hex::encode(Sha256::digest(data)) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: String,
    pub seed: Option<u64>,
    pub prng: &'static str,
    pub inputs: Vec<InputDigest>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Validation {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Validation {
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
        self.passed = self.checks.iter().all(|c| c.passed);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    /// Wall-clock times are left out unless asked for, so reports stay byte-identical.
    pub recorded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub meta: Meta,
    pub params: Value,
    pub result: Value,
    pub validation: Validation,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(subcommand: &str) -> Self {
        RunReport {
            meta: Meta {
                tool: "brt",
                version: env!("CARGO_PKG_VERSION"),
                subcommand: subcommand.to_string(),
                seed: None,
                prng: "chacha8",
                inputs: Vec::new(),
            },
            params: Value::Object(Default::default()),
            result: Value::Object(Default::default()),
            validation: Validation { passed: true, checks: Vec::new() },
            timing: Timing { recorded: false, wall_ms: None },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `key: value` line per result field, then one line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {}\n",
            self.meta.subcommand,
            if self.validation.passed { "ok" } else { "FAILED" }
        );
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        for c in &self.validation.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
        }
        if let Some(ms) = self.timing.wall_ms {
            out.push_str(&format!("  wall_ms: {ms:.3}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        let d = InputDigest::of("x", b"abc");
        assert_eq!(d.sha256, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        assert_eq!(d.bytes, 3);
    }

    #[test]
    fn validation_tracks_all_checks() {
        let mut v = Validation::default();
        v.check("a", true, "");
        assert!(v.passed);
        v.check("b", false, "bad");
        v.check("c", true, "");
        assert!(!v.passed);
    }

    #[test]
    fn json_has_the_five_sections_in_order() {
        let r = RunReport::new("t");
        let json = r.to_json();
        let pos: Vec<usize> =
            ["\"meta\"", "\"params\"", "\"result\"", "\"validation\"", "\"timing\""].iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"recorded\": false") && !json.contains("wall_ms"));
    }
}
