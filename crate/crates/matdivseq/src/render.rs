//! Text, CSV and JSON renderings of tables, reports and inspections.
//!
//! Big integers appear as plain decimals in text and CSV and as decimal
//! strings in JSON.

use std::fmt::Write;

use matdivseq_core::sequence::VerificationReport;
use matdivseq_core::{Column, Factorization, IntMatrix, MonicIntPolynomial, SequenceEntry};
use serde_json::{json, Value};

use crate::input::{matrix_json, MatrixDocument};

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// `n | d_n | factorization` rows.
    Text,
    /// Comma-separated with a header row.
    Csv,
    /// A single JSON document.
    Json,
}

/// One rendered table row: the entry plus the factorization of the shown
/// column, if any.
pub struct TableRow<'a> {
    /// Source entry.
    pub entry: &'a SequenceEntry,
    /// Factorization of `|value(column)|`.
    pub factorization: Option<&'a Factorization>,
}

fn value_text(entry: &SequenceEntry, column: Column) -> String {
    entry.value(column).map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn factorization_json(f: &Factorization) -> Value {
    json!({
        "text": f.to_string(),
        "sign": f.sign(),
        "factors": f.factors().iter().map(|(p, e)| json!({"prime": p.to_string(), "exponent": e})).collect::<Vec<_>>(),
        "cofactor": f.cofactor().map(|c| c.to_string()),
    })
}

/// Renders a sequence table.
pub fn table(doc: &MatrixDocument, rows: &[TableRow<'_>], column: Column, format: Format, factor: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let head = match column {
                Column::Reduced => "d_n",
                Column::Jacobian => "det J_n",
            };
            if factor {
                writeln!(out, "n | {head} | factorization").unwrap();
            } else {
                writeln!(out, "n | {head}").unwrap();
            }
            for row in rows {
                let e = row.entry;
                write!(out, "{} | {}", e.n, value_text(e, column)).unwrap();
                if factor {
                    let f = row.factorization.map_or_else(|| "-".to_string(), |f| f.to_string());
                    write!(out, " | {f}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(if factor { "n,value,factorization\n" } else { "n,value\n" });
            for row in rows {
                let e = row.entry;
                write!(out, "{},{}", e.n, value_text(e, column)).unwrap();
                if factor {
                    let f = row.factorization.map_or_else(String::new, |f| f.to_string());
                    write!(out, ",{f}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let e = row.entry;
                    let mut v = json!({
                        "n": e.n,
                        "value": e.value(column).map(|v| v.to_string()),
                        "reduced": e.reduced.as_ref().map(|v| v.to_string()),
                        "d_jac": e.d_jac.to_string(),
                        "literal_thm": e.literal_thm.as_ref().map(|v| v.to_string()),
                        "fallback_used": e.fallback_used,
                    });
                    if factor {
                        v["factorization"] = row.factorization.map_or(Value::Null, factorization_json);
                    }
                    v
                })
                .collect();
            let doc = json!({
                "matrix": doc.to_json(),
                "column": column.name(),
                "entries": entries,
            });
            out = serde_json::to_string_pretty(&doc).unwrap();
            out.push('\n');
        }
    }
    out
}

/// Marker appended to notes that never affect the exit code.
pub const INFORMATIONAL: &str = "[informational]";

/// Renders a verification report.
pub fn report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report_json(r),
        Format::Text | Format::Csv => report_text(r),
    }
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let dim = r.dim.unwrap_or(0);
    if let Some(fp) = r.fingerprint {
        writeln!(out, "matrix {dim}x{dim} fingerprint {fp:016x}, n = 1..{}", r.n_max).unwrap();
    }
    if !r.closed_form_checked.is_empty() {
        let ok = r.closed_form_checked.len() - r.closed_form_mismatches.len();
        writeln!(
            out,
            "closed form n^{dim}: {ok}/{} indices agree with det J_n",
            r.closed_form_checked.len()
        )
        .unwrap();
    }
    if !r.fallback_indices.is_empty() {
        writeln!(
            out,
            "closed form skipped (repeated eigenvalue) for {} indices; values from det J_n",
            r.fallback_indices.len()
        )
        .unwrap();
    }
    for m in &r.closed_form_mismatches {
        writeln!(out, "FAIL closed form at n={}: det J_n = {}, closed form = {}", m.n, m.oracle, m.closed).unwrap();
    }
    for column in [Column::Jacobian, Column::Reduced] {
        let checks: Vec<_> = r.divisibility.iter().filter(|c| c.column == column).collect();
        if checks.is_empty() {
            continue;
        }
        let fails = checks.iter().filter(|c| !c.passed).count();
        writeln!(out, "divisibility ({column}): {} pairs, {fails} failures", checks.len()).unwrap();
        for c in checks.iter().filter(|c| !c.passed) {
            writeln!(out, "FAIL divisibility ({column}): d_{} does not divide d_{}", c.n, c.m).unwrap();
        }
    }
    if r.skipped_pairs > 0 {
        writeln!(out, "divisibility: {} pairs skipped (value absent)", r.skipped_pairs).unwrap();
    }
    for d in &r.literal_discrepancies {
        writeln!(
            out,
            "note {INFORMATIONAL}: literal n^2 prefactor differs from oracle for s={dim} at n={} ({} vs {})",
            d.n, d.literal, d.oracle
        )
        .unwrap();
    }
    writeln!(out, "result: {}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    out
}

fn report_json(r: &VerificationReport) -> String {
    let v = json!({
        "fingerprint": r.fingerprint.map(|f| format!("{f:016x}")),
        "dim": r.dim,
        "n_max": r.n_max,
        "passed": r.passed(),
        "closed_form_checked": r.closed_form_checked,
        "fallback_indices": r.fallback_indices,
        "closed_form_mismatches": r.closed_form_mismatches.iter().map(|m| json!({
            "n": m.n, "oracle": m.oracle.to_string(), "closed": m.closed.to_string(),
        })).collect::<Vec<_>>(),
        "divisibility": r.divisibility.iter().map(|c| json!({
            "column": c.column.name(), "n": c.n, "m": c.m, "passed": c.passed,
        })).collect::<Vec<_>>(),
        "skipped_pairs": r.skipped_pairs,
        "literal_discrepancies": r.literal_discrepancies.iter().map(|d| json!({
            "n": d.n, "oracle": d.oracle.to_string(), "literal": d.literal.to_string(), "informational": true,
        })).collect::<Vec<_>>(),
    });
    let mut out = serde_json::to_string_pretty(&v).unwrap();
    out.push('\n');
    out
}

/// Renders a characteristic polynomial.
pub fn charpoly(f: &MonicIntPolynomial, format: Format) -> String {
    let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
    match format {
        Format::Text => format!("coefficients: [{}]\npolynomial: {f}\n", coeffs.join(", ")),
        Format::Csv => format!("{}\n", coeffs.join(",")),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "coefficients": coeffs,
                "polynomial": f.to_string(),
            }))
            .unwrap();
            s.push('\n');
            s
        }
    }
}

/// Renders a Jacobian and its determinant.
pub fn jacobian(j: &IntMatrix, n: u64, det: &num_bigint::BigInt, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "J_{n} ({0}x{0}):", j.dim()).unwrap();
            let width = j.entries().iter().map(|e| e.to_string().len()).max().unwrap_or(1);
            for row in j.rows() {
                let cells: Vec<String> = row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
                writeln!(out, "  {}", cells.join(" ")).unwrap();
            }
            writeln!(out, "det = {det}").unwrap();
        }
        Format::Csv => {
            for row in j.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
            writeln!(out, "det,{det}").unwrap();
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&json!({
                "n": n,
                "jacobian": matrix_json(j),
                "det": det.to_string(),
            }))
            .unwrap();
            out.push('\n');
        }
    }
    out
}
