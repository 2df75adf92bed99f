//! Reproducible summaries: the per-order table of transversal-free counts and
//! the metadata block attached to JSON output.

use serde::Serialize;

use crate::bounds::lower_bound;
use crate::classify::{classify, ClassificationReport, ClassifyOptions};
use crate::constructions::FamilySpec;
use crate::error::{Error, Result};

/// One row: the square's label, the closed-form lower bound rounded up, and
/// the computed number of transversal-free entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Table1Row {
    pub label: String,
    pub lower_bound: i64,
    pub actual_tau: usize,
}

/// Published values for orders 10 to 24.
pub const EXPECTED_TABLE1: [(&str, i64, usize); 8] = [
    ("V10", 27, 34),
    ("T12", 60, 67),
    ("U14", 70, 88),
    ("V16", 95, 107),
    ("T18", 147, 159),
    ("U20", 166, 190),
    ("V22", 201, 217),
    ("T24", 271, 287),
];

pub fn table1_row(n: usize, opts: &ClassifyOptions) -> Result<(Table1Row, ClassificationReport)> {
    let spec = FamilySpec::for_even_order(n)?;
    let report = classify(&spec.build()?, opts)?;
    if report.is_partial() {
        return Err(Error::PartialReport(report.count(crate::classify::CellStatus::Unknown)));
    }
    let row = Table1Row {
        label: spec.label(),
        lower_bound: lower_bound(spec.family(), n),
        actual_tau: report.tau,
    };
    Ok((row, report))
}

/// Rows for every even order from 10 to `max_order`. On a budget failure the
/// rows finished so far are returned alongside the error.
pub fn table1(max_order: usize, opts: &ClassifyOptions) -> (Vec<Table1Row>, Option<Error>) {
    let mut rows = Vec::new();
    if !(10..=24).contains(&max_order) || max_order % 2 == 1 {
        return (rows, Some(Error::Domain(format!("max order must be even and in 10..=24, got {max_order}"))));
    }
    for n in (10..=max_order).step_by(2) {
        match table1_row(n, opts) {
            Ok((row, _)) => rows.push(row),
            Err(e) => return (rows, Some(e)),
        }
    }
    (rows, None)
}

/// Run metadata. Kept out of the payload so `--no-meta` output is
/// byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub timestamp: u64,
}

impl Meta {
    pub fn now() -> Self {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Meta { tool: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION"), timestamp }
    }
}

/// Serializes `payload`, adding a `meta` field to objects when requested.
pub fn to_json_string<T: Serialize>(payload: &T, meta: bool) -> Result<String> {
    let mut value = serde_json::to_value(payload)?;
    if meta {
        if let serde_json::Value::Object(map) = &mut value {
            map.insert("meta".into(), serde_json::to_value(Meta::now())?);
        }
    }
    Ok(serde_json::to_string_pretty(&value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let (rows, err) = table1(12, &ClassifyOptions::default());
        assert!(err.is_none());
        let expected: Vec<Table1Row> = EXPECTED_TABLE1[..2]
            .iter()
            .map(|&(l, b, t)| Table1Row { label: l.into(), lower_bound: b, actual_tau: t })
            .collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn bad_max_order() {
        assert!(table1(11, &ClassifyOptions::default()).1.is_some());
        assert!(table1(26, &ClassifyOptions::default()).1.is_some());
    }

    #[test]
    fn meta_is_optional() {
        let row = Table1Row { label: "V10".into(), lower_bound: 27, actual_tau: 34 };
        let plain = to_json_string(&row, false).unwrap();
        assert!(!plain.contains("meta"));
        assert!(to_json_string(&row, true).unwrap().contains("timestamp"));
    }
}
