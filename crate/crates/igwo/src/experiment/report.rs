//! Result rows and report emission: a fixed CSV schema plus a
//! human-readable table, both deterministically ordered.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Aggregate statistics of one (algorithm, problem) cell: mean, sample
/// standard deviation (n - 1; zero by convention for a single run), and
/// the best/worst final values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatRow {
    pub algorithm: String,
    pub problem: String,
    pub avg: f64,
    pub std: f64,
    pub best: f64,
    pub worst: f64,
}

impl StatRow {
    pub fn from_samples(algorithm: &str, problem: &str, samples: &[f64]) -> StatRow {
        assert!(!samples.is_empty(), "a stat row needs at least one sample");
        let n = samples.len() as f64;
        let avg = samples.iter().sum::<f64>() / n;
        let std = if samples.len() < 2 {
            0.0
        } else {
            (samples.iter().map(|&v| (v - avg).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        let best = samples.iter().copied().fold(f64::INFINITY, f64::min);
        let worst = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        StatRow {
            algorithm: algorithm.to_string(),
            problem: problem.to_string(),
            avg,
            std,
            best,
            worst,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    TextTable,
}

/// Shorter strings first, then lexicographic: orders F1..F9 before
/// F10..F13 and map1..map9 before map10, while staying total.
fn natural_key(s: &str) -> (usize, &str) {
    (s.len(), s)
}

fn sorted_rows(rows: &[StatRow]) -> Vec<&StatRow> {
    let mut sorted: Vec<&StatRow> = rows.iter().collect();
    sorted.sort_by(|a, b| {
        a.algorithm
            .cmp(&b.algorithm)
            .then_with(|| natural_key(&a.problem).cmp(&natural_key(&b.problem)))
    });
    sorted
}

/// Render rows in the requested format. The CSV schema is
/// `algorithm,problem,avg,std,best,worst` with full-precision scientific
/// notation; ordering is (algorithm, then problem) in both formats.
pub fn emit_report(rows: &[StatRow], format: ReportFormat) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::Config("refusing to emit an empty report".into()));
    }
    let sorted = sorted_rows(rows);
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str("algorithm,problem,avg,std,best,worst\n");
            for row in sorted {
                out.push_str(&format!(
                    "{},{},{:e},{:e},{:e},{:e}\n",
                    row.algorithm, row.problem, row.avg, row.std, row.best, row.worst
                ));
            }
        }
        ReportFormat::TextTable => {
            out.push_str(&format!(
                "{:<10} {:<8} {:>13} {:>13} {:>13} {:>13}\n",
                "algorithm", "problem", "avg", "std", "best", "worst"
            ));
            for row in sorted {
                out.push_str(&format!(
                    "{:<10} {:<8} {:>13.4e} {:>13.4e} {:>13.4e} {:>13.4e}\n",
                    row.algorithm, row.problem, row.avg, row.std, row.best, row.worst
                ));
            }
        }
    }
    Ok(out)
}

/// Parse a CSV document produced by [`emit_report`].
pub fn parse_report_csv(text: &str) -> Result<Vec<StatRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "algorithm,problem,avg,std,best,worst")) => {}
        other => {
            return Err(Error::Parse(format!(
                "report CSV: unexpected header {:?}",
                other.map(|(_, l)| l)
            )))
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(Error::Parse(format!(
                "report CSV line {}: expected 6 fields, got {}",
                idx + 1,
                fields.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            fields[i].parse().map_err(|e| {
                Error::Parse(format!("report CSV line {}: field {}: {e}", idx + 1, i + 1))
            })
        };
        rows.push(StatRow {
            algorithm: fields[0].to_string(),
            problem: fields[1].to_string(),
            avg: num(2)?,
            std: num(3)?,
            best: num(4)?,
            worst: num(5)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_rows() -> Vec<StatRow> {
        vec![
            StatRow::from_samples("pso", "F2", &[1.0, 3.0]),
            StatRow::from_samples("igwo", "F10", &[0.5]),
            StatRow::from_samples("igwo", "F2", &[2.0, 4.0, 6.0]),
            StatRow::from_samples("pso", "F1", &[1e-3, 2e-3]),
        ]
    }

    #[test]
    fn stats_are_ordered_and_consistent() {
        let row = StatRow::from_samples("igwo", "F1", &[3.0, 1.0, 2.0]);
        assert_eq!(row.best, 1.0);
        assert_eq!(row.worst, 3.0);
        assert_eq!(row.avg, 2.0);
        assert!((row.std - 1.0).abs() < 1e-12);
        assert!(row.best <= row.avg && row.avg <= row.worst);
    }

    #[test]
    fn single_sample_has_zero_std() {
        let row = StatRow::from_samples("gwo", "F1", &[5.0]);
        assert_eq!(row.std, 0.0);
        assert_eq!(row.avg, 5.0);
    }

    #[test]
    fn csv_has_header_and_one_line_per_row() {
        let text = emit_report(&sample_rows(), ReportFormat::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "algorithm,problem,avg,std,best,worst");
        // Sorted by algorithm, then problem with F2 before F10.
        assert!(lines[1].starts_with("igwo,F2"));
        assert!(lines[2].starts_with("igwo,F10"));
        assert!(lines[3].starts_with("pso,F1"));
        assert!(lines[4].starts_with("pso,F2"));
    }

    #[test]
    fn csv_round_trips() {
        let rows = sample_rows();
        let text = emit_report(&rows, ReportFormat::Csv).unwrap();
        let parsed = parse_report_csv(&text).unwrap();
        let resorted = emit_report(&parsed, ReportFormat::Csv).unwrap();
        assert_eq!(text, resorted);
        assert_eq!(parsed.len(), rows.len());
        for row in &rows {
            assert!(parsed.contains(row));
        }
    }

    #[test]
    fn empty_report_is_refused() {
        assert!(emit_report(&[], ReportFormat::Csv).is_err());
        assert!(emit_report(&[], ReportFormat::TextTable).is_err());
    }

    #[test]
    fn malformed_csv_is_rejected_with_context() {
        let err = parse_report_csv("nope\n").unwrap_err();
        assert!(err.to_string().contains("header"));
        let err =
            parse_report_csv("algorithm,problem,avg,std,best,worst\nigwo,F1,1,2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let err = parse_report_csv("algorithm,problem,avg,std,best,worst\nigwo,F1,a,b,c,d\n")
            .unwrap_err();
        assert!(err.to_string().contains("field 3"));
    }

    #[test]
    fn text_table_is_readable() {
        let text = emit_report(&sample_rows(), ReportFormat::TextTable).unwrap();
        assert!(text.starts_with("algorithm"));
        assert_eq!(text.lines().count(), 5);
    }
}
