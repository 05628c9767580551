//! Output rendering and flag-value parsing for the CLI.
//!
//! Every numeric value is printed as a plain decimal string: no scientific
//! notation, no separators, no precision loss at any size. JSON output keeps
//! values as strings for the same reason.

use num_bigint::BigInt;
use serde::Serialize;

use lahkit::numbers::{Level, TriangleTable};
use lahkit::poly::{BasisTag, Polynomial};

/// One row per line, tab-separated entries `k = 0..=n`.
pub fn table_tsv(table: &TriangleTable) -> String {
    let mut out = String::new();
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// Human-readable table with right-aligned columns.
pub fn table_pretty(table: &TriangleTable) -> String {
    let rendered: Vec<Vec<String>> = table
        .rows()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let columns = rendered.last().map_or(0, |row| row.len());
    let mut widths = vec![0usize; columns];
    for row in &rendered {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &rendered {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, cell)| format!("{cell:>width$}", width = widths[k]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct TableJson<'a> {
    kind: &'a str,
    s: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    rows: Vec<Vec<String>>,
}

/// JSON object with all values as decimal strings.
pub fn table_json(table: &TriangleTable, kind: &str, r: Option<usize>) -> String {
    let rows = table
        .rows()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let doc = TableJson {
        kind,
        s: table.level().get(),
        r,
        rows,
    };
    serde_json::to_string(&doc).expect("table serializes")
}

/// OEIS b-file lines: the triangle read by rows, one `index value` pair per
/// line, indices starting at `offset`.
pub fn table_bfile(table: &TriangleTable, offset: usize) -> String {
    let mut out = String::new();
    let mut index = offset;
    for row in table.rows() {
        for value in row {
            out.push_str(&format!("{index} {value}\n"));
            index += 1;
        }
    }
    out
}

/// Canonical coefficient-list form, e.g.
/// `basis=falling:2 coeffs=[0,100,140,28,1]`.
pub fn poly_text(p: &Polynomial) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("basis={} coeffs=[{}]", p.basis(), coeffs.join(","))
}

#[derive(Serialize)]
struct PolyJson<'a> {
    basis: &'a str,
    level: Option<u32>,
    coeffs: Vec<String>,
}

/// JSON mirror of the coefficient-list form; coefficients stay decimal
/// strings so no consumer can truncate them to 64 bits.
pub fn poly_json(p: &Polynomial) -> String {
    let (basis, level) = match p.basis() {
        BasisTag::Standard => ("standard", None),
        BasisTag::RisingHl(s) => ("rising", Some(s.get())),
        BasisTag::FallingHl(s) => ("falling", Some(s.get())),
    };
    let doc = PolyJson {
        basis,
        level,
        coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
    };
    serde_json::to_string(&doc).expect("polynomial serializes")
}

/// Parses `standard`, `rising:<s>` or `falling:<s>`.
pub fn parse_basis(text: &str) -> Result<BasisTag, String> {
    if text == "standard" {
        return Ok(BasisTag::Standard);
    }
    let (name, level) = text
        .split_once(':')
        .ok_or_else(|| format!("bad basis `{text}`: expected standard, rising:<s> or falling:<s>"))?;
    let s: u32 = level
        .parse()
        .map_err(|_| format!("bad basis level `{level}`"))?;
    let s = Level::new(s).map_err(|e| e.to_string())?;
    match name {
        "rising" => Ok(BasisTag::RisingHl(s)),
        "falling" => Ok(BasisTag::FallingHl(s)),
        _ => Err(format!("bad basis `{text}`: unknown name `{name}`")),
    }
}

/// Parses a comma-separated coefficient list, with or without brackets.
pub fn parse_coeffs(text: &str) -> Result<Vec<BigInt>, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|cell| {
            cell.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("bad coefficient `{}`", cell.trim()))
        })
        .collect()
}
