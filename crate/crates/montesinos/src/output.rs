//! Plain-table, JSON and CSV renderings of surfaces, paths and
//! realizations.

use serde::Serialize;

use crate::edgepath::Edgepath;
use crate::error::{Error, Result};
use crate::realize::RealizationResult;
use crate::surface::SurfaceRecord;

/// Output format selected on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

const SURFACE_COLUMNS: [&str; 10] = [
    "knot",
    "paths",
    "sheets",
    "twist",
    "den",
    "b",
    "chi",
    "genus",
    "incompressible",
    "orientable",
];

pub fn render_surfaces(records: &[SurfaceRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => json(records),
        Format::Csv => csv_rows(records),
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.knot.clone(),
                        r.paths.clone(),
                        r.sheets.clone(),
                        r.twist.clone(),
                        r.slope_denominator.clone(),
                        r.boundary_components.clone(),
                        r.euler_characteristic.clone(),
                        r.genus.clone(),
                        r.incompressible.clone(),
                        r.orientable.clone(),
                    ]
                })
                .collect();
            Ok(table(&SURFACE_COLUMNS, &rows))
        }
    }
}

#[derive(Serialize)]
struct PathRow {
    index: usize,
    edges: usize,
    path: String,
}

pub fn render_paths(paths: &[Edgepath], format: Format) -> Result<String> {
    let rows: Vec<PathRow> = paths
        .iter()
        .enumerate()
        .map(|(index, p)| PathRow {
            index,
            edges: p.len(),
            path: p.to_string(),
        })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(&rows),
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.index.to_string(), r.edges.to_string(), r.path.clone()])
                .collect();
            Ok(table(&["#", "edges", "path"], &cells))
        }
    }
}

pub fn render_realization(result: &RealizationResult, format: Format) -> Result<String> {
    let record = result.record();
    match format {
        Format::Json => json(&record),
        Format::Csv => csv_rows(&[record.surface]),
        Format::Table => {
            let s = &record.surface;
            let mut out = format!(
                "b = {}, q = {}: {} ({} construction)\n  paths   {}\n  sheets {}  twist {}  chi {}  genus {}\n",
                record.b, record.q, s.knot, record.construction, s.paths, s.sheets, s.twist, s.euler_characteristic, s.genus
            );
            for c in &record.checks {
                let status = serde_json::to_value(c.status).expect("status serializes");
                out += &format!(
                    "  {:<20} {:<15} {}\n",
                    c.name,
                    status.as_str().unwrap_or("?"),
                    c.detail
                );
            }
            out += if record.verified {
                "verified\n"
            } else {
                "NOT verified\n"
            };
            Ok(out)
        }
    }
}
