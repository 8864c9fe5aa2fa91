//! Verdict records for identity checks and their JSON form.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Rendered polynomials larger than this many stored terms are omitted from
/// reports to keep the JSON stream bounded.
pub const RENDER_TERM_LIMIT: usize = 64;

/// Verdict for one identity instance.
///
/// `passed` holds exactly when no mismatch witness is present and, for
/// positivity-flavored identities, no negative-coefficient witness either.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub identity_id: String,
    /// Integer parameters of the instance, keyed by name.
    pub params: BTreeMap<String, i64>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Smallest exponent at which the two sides differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch_exp: Option<i64>,
    /// Smallest exponent carrying a negative coefficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_witness: Option<i64>,
    pub elapsed_millis: u64,
    /// Truncation cap, present only for series checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<i64>,
    /// Free-form remarks, e.g. which of several readings matched.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl IdentityReport {
    pub fn new(identity_id: impl Into<String>, params: BTreeMap<String, i64>) -> Self {
        IdentityReport {
            identity_id: identity_id.into(),
            params,
            passed: false,
            lhs: None,
            rhs: None,
            first_mismatch_exp: None,
            negative_witness: None,
            elapsed_millis: 0,
            cap: None,
            notes: None,
        }
    }

    /// Compact one-line text form.
    pub fn text_line(&self) -> String {
        let status = if self.passed { "ok  " } else { "FAIL" };
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let mut line = format!("{status} {}", self.identity_id);
        if !params.is_empty() {
            line.push(' ');
            line.push_str(&params);
        }
        if let Some(cap) = self.cap {
            line.push_str(&format!(" cap={cap}"));
        }
        if let Some(e) = self.first_mismatch_exp {
            line.push_str(&format!(" first mismatch at q^{e}"));
        }
        if let Some(e) = self.negative_witness {
            line.push_str(&format!(" negative coefficient at q^{e}"));
        }
        if let Some(notes) = &self.notes {
            line.push_str(&format!(" [{notes}]"));
        }
        line.push_str(&format!(" ({} ms)", self.elapsed_millis));
        line
    }
}

/// Trailing summary object of a report stream.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSummary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl RunSummary {
    pub fn absorb(&mut self, report: &IdentityReport) {
        self.total += 1;
        if report.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_names_are_camel_case() {
        let mut params = BTreeMap::new();
        params.insert("L".to_string(), 3i64);
        let mut r = IdentityReport::new("eq2.13", params);
        r.passed = true;
        r.lhs = Some("1".into());
        r.rhs = Some("1".into());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"identityId\":\"eq2.13\""));
        assert!(json.contains("\"params\":{\"L\":3}"));
        assert!(json.contains("\"elapsedMillis\""));
        assert!(!json.contains("firstMismatchExp"), "absent witness must be omitted");
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn witness_fields_serialize_when_present() {
        let mut r = IdentityReport::new("x", BTreeMap::new());
        r.first_mismatch_exp = Some(5);
        r.negative_witness = Some(2);
        r.cap = Some(100);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"firstMismatchExp\":5"));
        assert!(json.contains("\"negativeWitness\":2"));
        assert!(json.contains("\"cap\":100"));
    }
}
