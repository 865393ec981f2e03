//! Rendering of outcomes into the three output formats. Every format is
//! deterministic: maps are ordered, nothing timing-dependent is printed,
//! and repeated runs of the same command emit identical bytes.

use clap::ValueEnum;

use crate::report::{Outcome, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => render_json(outcome),
        Format::Csv => render_csv(outcome),
        Format::Table => render_table(outcome),
    }
}

fn render_json(outcome: &Outcome) -> String {
    let body = match outcome {
        Outcome::Count(c) => serde_json::to_string(c),
        Outcome::Seq(s) => serde_json::to_string(s),
        Outcome::Report(r) => serde_json::to_string(r),
    }
    .expect("outcomes serialize without error");
    body + "\n"
}

fn render_csv(outcome: &Outcome) -> String {
    let records: Vec<Vec<String>> = match outcome {
        Outcome::Count(c) => vec![vec![c.n.to_string(), c.value.clone().unwrap_or_default()]],
        Outcome::Seq(s) => s
            .rows
            .iter()
            .map(|row| vec![row.n.to_string(), row.value.clone()])
            .collect(),
        Outcome::Report(r) => r
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.clone(),
                    c.status.label().to_string(),
                    c.detail.clone(),
                ]
            })
            .collect(),
    };
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for record in records {
        writer.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

fn render_table(outcome: &Outcome) -> String {
    match outcome {
        Outcome::Count(c) => key_value_block(&[
            ("command".to_string(), c.command.clone()),
            ("n".to_string(), c.n.to_string()),
            (
                "value".to_string(),
                c.value.clone().unwrap_or_else(|| "unchecked".to_string()),
            ),
        ]),
        Outcome::Seq(s) => {
            let mut rows = vec![vec!["n".to_string(), "value".to_string()]];
            rows.extend(
                s.rows
                    .iter()
                    .map(|row| vec![row.n.to_string(), row.value.clone()]),
            );
            aligned_columns(&rows)
        }
        Outcome::Report(r) => report_table(r),
    }
}

fn report_table(report: &VerificationReport) -> String {
    let mut header = vec![("command".to_string(), report.command.clone())];
    header.extend(
        report
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string())),
    );
    let mut out = key_value_block(&header);
    out.push('\n');

    let mut rows = vec![vec![
        "check".to_string(),
        "status".to_string(),
        "detail".to_string(),
    ]];
    rows.extend(report.checks.iter().map(|c| {
        vec![
            c.name.clone(),
            c.status.label().to_string(),
            c.detail.clone(),
        ]
    }));
    out.push_str(&aligned_columns(&rows));

    if !report.counts.is_empty() {
        out.push('\n');
        out.push_str("counts\n");
        let pairs: Vec<(String, String)> = report
            .counts
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        out.push_str(&key_value_block(&pairs));
    }

    out.push('\n');
    out.push_str(&format!("overall  {}\n", report.overall().label()));
    out
}

fn key_value_block(pairs: &[(String, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn aligned_columns(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}  ", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
