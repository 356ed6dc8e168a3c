use serde::Serialize;
use serde_json::Value;

use super::analysis::{analyze_with, AnalyzeOptions};
use crate::datasets::DataSet;
use crate::error::{Error, Result};

/// The irreducible three-point classes of genus 3, in table order.
pub const GENUS3_ROWS: [&str; 8] = [
    "(7,0;(1,7),(2,7),(4,7))",
    "(7,0;(5,7),(1,7),(1,7))",
    "(8,0;(1,4),(1,8),(5,8))",
    "(8,0;(3,4),(1,8),(1,8))",
    "(9,0;(1,3),(1,9),(5,9))",
    "(12,0;(1,2),(1,12),(5,12))",
    "(12,0;(2,3),(1,4),(1,12))",
    "(14,0;(1,2),(3,7),(1,14))",
];

/// Placeholder for the lifted-class column, which is not computed.
pub const OUT_OF_SCOPE: &str = "out of scope";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub row: usize,
    pub dataset: String,
    pub normalizer: String,
    pub centralizer: String,
    pub case: String,
    pub normalizer_asserted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub rows: Vec<TableRow>,
}

pub fn table_genus3() -> Result<Table> {
    let options = AnalyzeOptions {
        presentations: false,
        cross_check: true,
    };
    let rows = GENUS3_ROWS
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let d: DataSet = s.parse()?;
            let report = analyze_with(&d, options)?;
            if report.genus != 3 {
                return Err(Error::Inconsistent(format!(
                    "{s} has genus {}",
                    report.genus
                )));
            }
            let c = report
                .classification
                .ok_or_else(|| Error::Inconsistent(format!("{s} is not classified")))?;
            Ok(TableRow {
                row: i + 1,
                dataset: d.to_string(),
                normalizer: c.normalizer.to_string(),
                centralizer: c.centralizer.to_string(),
                case: c.case.label().into(),
                normalizer_asserted: c.normalizer_asserted,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { rows })
}

impl Table {
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "schema": 1, "rows": self.rows, "D_G": OUT_OF_SCOPE })
    }

    /// Aligned columns `Sr. No. | D_F | N(F) | C(F) | D_G`.
    pub fn render_text(&self) -> String {
        let header = ["Sr. No.", "D_F", "N(F)", "C(F)", "D_G"].map(String::from);
        let body: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.row.to_string(),
                    r.dataset.clone(),
                    r.normalizer.clone(),
                    r.centralizer.clone(),
                    OUT_OF_SCOPE.to_string(),
                ]
            })
            .collect();
        let mut widths = [0usize; 5];
        for line in std::iter::once(&header).chain(&body) {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let fmt = |line: &[String; 5]| {
            let cells: Vec<String> = line
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            format!("| {} |", cells.join(" | "))
        };
        let rule = format!("|{}|", widths.map(|w| "-".repeat(w + 2)).join("|"));
        let mut out = vec![fmt(&header), rule];
        out.extend(body.iter().map(fmt));
        out.join("\n") + "\n"
    }
}
