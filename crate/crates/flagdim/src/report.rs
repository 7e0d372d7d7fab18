//! Report envelope and its three renderings: aligned text, CSV and JSON.

use std::collections::BTreeMap;

use flagdim_core::classify::{ClassificationReport, WeightRecord};
use flagdim_core::DominantWeight;
use serde::Serialize;
use serde_json::{json, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ReportEnvelope {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Value::Null,
            tool_version: TOOL_VERSION.to_string(),
            seed: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// Rows for the text and CSV renderings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Free lines printed under the text table; not part of the CSV.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new<S: AsRef<str>>(headers: &[S]) -> Self {
        Self {
            headers: headers.iter().map(|h| h.as_ref().to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn row<S: ToString>(&mut self, cells: &[S]) {
        self.rows
            .push(cells.iter().map(ToString::to_string).collect());
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(&self.headers));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&line(&rule));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 cells")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// One command result, renderable in any format.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub envelope: ReportEnvelope,
    pub table: Table,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.table.to_text(),
            Format::Csv => self.table.to_csv(),
            Format::Json => self.envelope.to_json(),
        }
    }
}

pub fn weight_json(w: &DominantWeight) -> Value {
    json!(w.coords())
}

pub fn weights_json(ws: &[DominantWeight]) -> Value {
    Value::Array(ws.iter().map(weight_json).collect())
}

pub fn weight_text(w: &DominantWeight) -> String {
    let parts: Vec<String> = w.coords().iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn weights_text(ws: &[DominantWeight]) -> String {
    if ws.is_empty() {
        return "none".into();
    }
    ws.iter().map(weight_text).collect::<Vec<_>>().join(" ")
}

fn record_json(r: &WeightRecord) -> Value {
    let mut v = json!({
        "weight": weight_json(&r.weight),
        "dim": r.dim.to_string(),
        "parity_pass": r.parity_pass,
    });
    if let Some(f) = r.fixed_dim {
        v["fixed_dim"] = json!(f);
    }
    v
}

pub fn classification_json(rep: &ClassificationReport) -> Value {
    json!({
        "group": rep.group.to_string(),
        "family": rep.family.to_string(),
        "rank": rep.rank,
        "bound": rep.bound.to_string(),
        "strict_bound": rep.strict,
        "enumerated": rep.enumerated.iter().map(record_json).collect::<Vec<_>>(),
        "survivors": weights_json(&rep.survivors),
        "expected": weights_json(&rep.expected),
        "unexpected": weights_json(&rep.unexpected),
        "missing": weights_json(&rep.missing),
        "parity_violations": weights_json(&rep.parity_violations),
        "verdict": rep.verdict.to_string(),
        "note": rep.note,
    })
}

/// One row per enumerated weight of each report, then a verdict line each.
pub fn classification_table(reports: &[ClassificationReport]) -> Table {
    let mut t = Table::new(&["group", "weight", "dim", "parity", "fixed_dim", "survivor"]);
    for rep in reports {
        for r in &rep.enumerated {
            let survivor = rep.survivors.contains(&r.weight);
            t.row(&[
                rep.group.to_string(),
                weight_text(&r.weight),
                r.dim.to_string(),
                if r.parity_pass { "pass" } else { "fail" }.to_string(),
                r.fixed_dim.map_or("-".to_string(), |f| f.to_string()),
                if survivor { "yes" } else { "no" }.to_string(),
            ]);
        }
    }
    for rep in reports {
        let cmp = if rep.strict { "<" } else { "<=" };
        t.note(format!(
            "{} ({}{}): dim {cmp} {}, survivors {}, verdict {}",
            rep.group,
            rep.family,
            rep.rank,
            rep.bound,
            weights_text(&rep.survivors),
            rep.verdict
        ));
        if !rep.unexpected.is_empty() {
            t.note(format!("  unexpected: {}", weights_text(&rep.unexpected)));
        }
        if !rep.missing.is_empty() {
            t.note(format!("  missing: {}", weights_text(&rep.missing)));
        }
        if !rep.parity_violations.is_empty() {
            t.note(format!(
                "  lattice filter violations: {}",
                weights_text(&rep.parity_violations)
            ));
        }
        if let Some(note) = rep.note {
            t.note(format!("  note: {note}"));
        }
    }
    t
}
