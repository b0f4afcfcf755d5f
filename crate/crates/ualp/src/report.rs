//! Machine-readable verification reports (JSON and CSV).
//!
//! Numbers are printed in Rust's shortest round-trip form (at most 17
//! significant digits, always enough to reproduce the exact f64 bit
//! pattern), so reports are byte-deterministic for identical inputs and
//! parse back without loss.

use std::fmt::Write as _;

use crate::identities::VerificationRecord;

/// Shortest decimal string that round-trips to the same f64.
pub fn format_f64(x: f64) -> String {
    debug_assert!(x.is_finite(), "non-finite values must serialize as null");
    let s = format!("{x}");
    debug_assert_eq!(s.parse::<f64>().ok(), Some(x));
    s
}

/// Pass/fail tallies of one report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A serializable collection of verification records for one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub tool_version: String,
    /// ISO-8601 UTC; None with --no-timestamp for byte-reproducible output.
    pub timestamp: Option<String>,
    pub identity_name: String,
    /// Named tolerances in a fixed order (pass/fail and engine settings).
    pub tolerance_config: Vec<(String, f64)>,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(
        identity_name: &str,
        tolerance_config: Vec<(String, f64)>,
        records: Vec<VerificationRecord>,
        timestamp: Option<String>,
    ) -> Self {
        let passed = records.iter().filter(|r| r.passed).count();
        let summary = Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        };
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp,
            identity_name: identity_name.to_string(),
            tolerance_config,
            records,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(
            out,
            "  \"tool_version\": {},",
            json_string(&self.tool_version)
        );
        match &self.timestamp {
            Some(ts) => {
                let _ = writeln!(out, "  \"timestamp\": {},", json_string(ts));
            }
            None => out.push_str("  \"timestamp\": null,\n"),
        }
        let _ = writeln!(
            out,
            "  \"identity_name\": {},",
            json_string(&self.identity_name)
        );
        out.push_str("  \"tolerance_config\": {");
        for (i, (key, value)) in self.tolerance_config.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}: {}", json_string(key), format_f64(*value));
        }
        out.push_str("},\n");
        out.push_str("  \"records\": [\n");
        for (i, record) in self.records.iter().enumerate() {
            out.push_str("    ");
            write_record_json(&mut out, record);
            if i + 1 < self.records.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ],\n");
        let _ = writeln!(
            out,
            "  \"summary\": {{\"total\": {}, \"passed\": {}, \"failed\": {}}}",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        out.push_str("}\n");
        out
    }

    /// Flat CSV: one row per record, parameter columns inferred from the
    /// first record (grids are homogeneous per identity).
    pub fn to_csv(&self) -> String {
        let param_keys: Vec<String> = self
            .records
            .first()
            .map(|r| r.parameters.keys().cloned().collect())
            .unwrap_or_default();
        let mut out = String::new();
        out.push_str("identity_name");
        for key in &param_keys {
            out.push(',');
            out.push_str(&csv_field(key));
        }
        out.push_str(
            ",closed_form,numeric,abs_diff,rel_diff,passed,numeric_error_estimate,error\n",
        );
        for record in &self.records {
            out.push_str(&csv_field(&record.identity_name));
            for key in &param_keys {
                out.push(',');
                if let Some(v) = record.parameters.get(key) {
                    out.push_str(&format_f64(*v));
                }
            }
            for field in [
                record.closed_form,
                record.numeric,
                record.abs_diff,
                record.rel_diff,
            ] {
                out.push(',');
                if let Some(v) = field {
                    out.push_str(&format_f64(v));
                }
            }
            out.push(',');
            out.push_str(if record.passed { "true" } else { "false" });
            out.push(',');
            if let Some(v) = record.numeric_error_estimate {
                out.push_str(&format_f64(v));
            }
            out.push(',');
            if let Some(e) = &record.error {
                out.push_str(&csv_field(e));
            }
            out.push('\n');
        }
        out
    }
}

fn write_record_json(out: &mut String, record: &VerificationRecord) {
    out.push('{');
    let _ = write!(
        out,
        "\"identity_name\": {}, ",
        json_string(&record.identity_name)
    );
    out.push_str("\"parameters\": {");
    for (i, (key, value)) in record.parameters.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{}: {}", json_string(key), format_f64(*value));
    }
    out.push_str("}, ");
    let _ = write!(
        out,
        "\"closed_form\": {}, ",
        json_number(record.closed_form)
    );
    let _ = write!(out, "\"numeric\": {}, ", json_number(record.numeric));
    let _ = write!(out, "\"abs_diff\": {}, ", json_number(record.abs_diff));
    let _ = write!(out, "\"rel_diff\": {}, ", json_number(record.rel_diff));
    let _ = write!(out, "\"passed\": {}, ", record.passed);
    let _ = write!(
        out,
        "\"numeric_error_estimate\": {}",
        json_number(record.numeric_error_estimate)
    );
    if let Some(e) = &record.error {
        let _ = write!(out, ", \"error\": {}", json_string(e));
    }
    out.push('}');
}

fn json_number(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => format_f64(x),
        _ => "null".to_string(),
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Current time as ISO-8601 UTC with second resolution, e.g.
/// "2026-08-08T12:00:00Z". Hand-rolled civil-from-days conversion; no
/// timezone handling beyond UTC is needed.
pub fn utc_timestamp_now() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format_epoch_seconds(secs)
}

fn format_epoch_seconds(secs: u64) -> String {
    let days = (secs / 86_400) as i64;
    let rem = secs % 86_400;
    let (year, month, day) = civil_from_days(days);
    format!(
        "{year:04}-{month:02}-{day:02}T{:02}:{:02}:{:02}Z",
        rem / 3600,
        (rem % 3600) / 60,
        rem % 60
    )
}

// Days since 1970-01-01 to (year, month, day), via the era decomposition.
fn civil_from_days(days: i64) -> (i64, u32, u32) {
    let z = days + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let year = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let day = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let month = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    (if month <= 2 { year + 1 } else { year }, month, day)
}
