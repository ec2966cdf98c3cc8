//! CSV and JSON serialization of coefficient vectors, scan reports, and Gram
//! matrices, plus the matching readers.
//!
//! Every writer accepts a list of `(key, value)` pairs echoed as `# key = value`
//! comment lines before the header row, so an output file records the exact
//! configuration that produced it. Floats are written in exponent form with
//! the shortest digits that round-trip, keeping files byte-stable across runs.

use crate::error::{Error, Result};
use crate::kernels::{CoeffVector, GramMatrix};
use crate::verify::{PdReport, ScanReport, ScanRow, Verdict};
use serde_json::{json, Value};
use std::io::{BufRead, Write};

fn fmt_f64(v: f64) -> String {
    format!("{v:e}")
}

fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad float {s:?}")))
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn write_header<W: Write>(w: &mut W, config: &[(String, String)]) -> Result<()> {
    for (k, v) in config {
        writeln!(w, "# {k} = {v}")?;
    }
    Ok(())
}

fn split_header(lines: &[String]) -> (Vec<(String, String)>, usize) {
    let mut config = Vec::new();
    let mut body_start = 0;
    for (i, line) in lines.iter().enumerate() {
        if let Some(rest) = line.strip_prefix('#') {
            if let Some((k, v)) = rest.split_once('=') {
                config.push((k.trim().to_string(), v.trim().to_string()));
            }
            body_start = i + 1;
        } else {
            break;
        }
    }
    (config, body_start)
}

fn read_lines<R: BufRead>(r: R) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for line in r.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

/// One parsed row of a coefficient CSV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffRow {
    pub n: usize,
    pub a_n: f64,
    pub err_bound: f64,
}

/// Writes `n,a_n,err_bound` rows after the configuration header.
pub fn write_coeffs_csv<W: Write>(
    w: &mut W,
    cv: &CoeffVector,
    config: &[(String, String)],
) -> Result<()> {
    write_header(w, config)?;
    writeln!(w, "n,a_n,err_bound")?;
    for (n, (a, e)) in cv.coeffs.iter().zip(&cv.err_bounds).enumerate() {
        writeln!(w, "{n},{},{}", fmt_f64(*a), fmt_f64(*e))?;
    }
    Ok(())
}

pub fn read_coeffs_csv<R: BufRead>(r: R) -> Result<(Vec<(String, String)>, Vec<CoeffRow>)> {
    let lines = read_lines(r)?;
    let (config, start) = split_header(&lines);
    let body = &lines[start..];
    if body.first().map(String::as_str) != Some("n,a_n,err_bound") {
        return Err(Error::Parse("missing coefficient header row".into()));
    }
    let mut rows = Vec::new();
    for line in &body[1..] {
        let mut parts = line.split(',');
        let (n, a, e) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(a), Some(e), None) => (n, a, e),
            _ => return Err(Error::Parse(format!("expected 3 fields, got {line:?}"))),
        };
        rows.push(CoeffRow {
            n: parse_usize(n)?,
            a_n: parse_f64(a)?,
            err_bound: parse_f64(e)?,
        });
    }
    Ok((config, rows))
}

/// Writes `alpha,beta,delta,n,t,value,err,verdict` rows after the header.
pub fn write_scan_csv<W: Write>(
    w: &mut W,
    report: &ScanReport,
    config: &[(String, String)],
) -> Result<()> {
    write_header(w, config)?;
    writeln!(w, "alpha,beta,delta,n,t,value,err,verdict")?;
    for row in &report.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            fmt_f64(row.alpha),
            fmt_f64(row.beta),
            fmt_f64(row.delta),
            row.n,
            fmt_f64(row.t),
            fmt_f64(row.value),
            fmt_f64(row.err),
            row.verdict
        )?;
    }
    Ok(())
}

pub fn read_scan_csv<R: BufRead>(r: R) -> Result<(Vec<(String, String)>, ScanReport)> {
    let lines = read_lines(r)?;
    let (config, start) = split_header(&lines);
    let body = &lines[start..];
    if body.first().map(String::as_str) != Some("alpha,beta,delta,n,t,value,err,verdict") {
        return Err(Error::Parse("missing scan header row".into()));
    }
    let mut rows = Vec::new();
    for line in &body[1..] {
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 8 {
            return Err(Error::Parse(format!("expected 8 fields, got {line:?}")));
        }
        rows.push(ScanRow {
            alpha: parse_f64(parts[0])?,
            beta: parse_f64(parts[1])?,
            delta: parse_f64(parts[2])?,
            n: parse_usize(parts[3])?,
            t: parse_f64(parts[4])?,
            value: parse_f64(parts[5])?,
            err: parse_f64(parts[6])?,
            verdict: parts[7].trim().parse::<Verdict>()?,
        });
    }
    Ok((config, ScanReport::from_rows(rows)))
}

/// Writes an `size = n` header entry followed by the matrix, one row per line.
pub fn write_gram_csv<W: Write>(
    w: &mut W,
    gram: &GramMatrix,
    config: &[(String, String)],
) -> Result<()> {
    write_header(w, config)?;
    writeln!(w, "# size = {}", gram.size())?;
    let n = gram.size();
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| fmt_f64(gram.get(i, j))).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn read_gram_csv<R: BufRead>(r: R) -> Result<(Vec<(String, String)>, GramMatrix)> {
    let lines = read_lines(r)?;
    let (config, start) = split_header(&lines);
    let n = config
        .iter()
        .rev()
        .find(|(k, _)| k == "size")
        .ok_or_else(|| Error::Parse("missing size entry".into()))
        .and_then(|(_, v)| parse_usize(v))?;
    let body = &lines[start..];
    if body.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} matrix rows, got {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(n * n);
    for line in body {
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != n {
            return Err(Error::Parse(format!("expected {n} columns, got {line:?}")));
        }
        for p in parts {
            data.push(parse_f64(p)?);
        }
    }
    GramMatrix::from_rows(n, data).map(|g| (config, g))
}

fn config_json(config: &[(String, String)]) -> Value {
    let map: serde_json::Map<String, Value> = config
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    Value::Object(map)
}

fn scan_row_json(row: &ScanRow) -> Value {
    json!({
        "alpha": row.alpha,
        "beta": row.beta,
        "delta": row.delta,
        "n": row.n,
        "t": row.t,
        "value": row.value,
        "err": row.err,
        "verdict": row.verdict.to_string(),
        "margin": row.margin(),
    })
}

/// Summary of a scan: verdict counts, the minimum margin, and the worst row.
/// Keys are emitted sorted, so the serialized form is byte-stable.
pub fn scan_summary_json(report: &ScanReport, config: &[(String, String)]) -> Value {
    json!({
        "config": config_json(config),
        "counts": {
            "negative": report.negative,
            "positive": report.positive,
            "precision_exhausted": report.precision_exhausted,
            "zero_consistent": report.zero_consistent,
        },
        "min_margin": report.min_margin,
        "rows": report.rows.len(),
        "worst": report.worst.as_ref().map(scan_row_json),
    })
}

pub fn coeffs_json(cv: &CoeffVector, config: &[(String, String)]) -> Value {
    json!({
        "coeffs": cv.coeffs,
        "config": config_json(config),
        "err_bounds": cv.err_bounds,
        "n_max": cv.n_max(),
    })
}

pub fn pd_report_json(report: &PdReport, config: &[(String, String)]) -> Value {
    json!({
        "cholesky_succeeded": report.cholesky_succeeded,
        "config": config_json(config),
        "min_eigenvalue": report.min_eigenvalue,
        "n_points": report.n_points,
        "resamples": report.resamples,
        "seed": report.seed,
        "strictly_pd": report.strictly_pd,
        "threshold": report.threshold,
    })
}
