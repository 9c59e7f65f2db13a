//! JSON-lines reports and the plain-text summary of a verification run.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sghom::analysis::bounds_table;

use crate::verify::{ClaimRun, Status};

/// One report line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub criterion: u32,
    pub statement: String,
    pub status: Status,
    pub known_failure: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claims: Vec<ClaimRecord>,
}

impl Report {
    /// Build from finished runs, sorted by claim id. With `witness_dir`,
    /// every failure carrying a witness gets a `<id>.json` file there.
    pub fn new(mut runs: Vec<ClaimRun>, witness_dir: Option<&Path>) -> std::io::Result<Report> {
        runs.sort_by_key(|r| r.claim.id);
        if let Some(dir) = witness_dir {
            fs::create_dir_all(dir)?;
        }
        let mut claims = Vec::with_capacity(runs.len());
        for r in runs {
            let witness_path = match (&r.witness, witness_dir) {
                (Some(w), Some(dir)) => {
                    let path = dir.join(format!("{}.json", r.claim.id));
                    fs::write(&path, serde_json::to_string_pretty(w)? + "\n")?;
                    Some(path)
                }
                _ => None,
            };
            claims.push(ClaimRecord {
                id: r.claim.id.to_string(),
                criterion: r.claim.criterion,
                statement: r.claim.statement.to_string(),
                status: r.status,
                known_failure: r.claim.known_failure,
                detail: r.detail,
                elapsed_ms: r.elapsed_ms,
                witness_path,
            });
        }
        Ok(Report { claims })
    }

    pub fn failures(&self) -> usize {
        self.claims.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn to_json_lines(&self) -> String {
        self.claims.iter().map(|c| serde_json::to_string(c).expect("plain data") + "\n").collect()
    }

    /// Claim statuses followed by the bounds table for `k = 1..=12`.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail if c.known_failure => "FAIL (known)",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIPPED",
            };
            let _ = writeln!(out, "{:<width$}  {:<12}  {}", c.id, status, c.detail, width = width);
        }
        let count = |s: Status| self.claims.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "\n{} passed, {} failed, {} skipped\n",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        );
        out.push_str(&bounds_summary(12));
        out
    }
}

/// The bounds for maximum degree `1..=max_k`, one row per degree.
pub fn bounds_summary(max_k: u32) -> String {
    let rows: Vec<[String; 4]> = (1..=max_k).map(|k| bounds_table(k).cells()).collect();
    let headers = ["2-edge-colored", "connected 2-edge-colored", "signed", "connected signed"];
    let widths: Vec<usize> = (0..4)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).chain([headers[i].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let line = |cells: [&str; 4], out: &mut String| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{}{}", c, " ".repeat(w - c.chars().count()))).collect();
        let _ = writeln!(out, "{}", padded.join(" | ").trim_end());
    };
    line(headers, &mut out);
    for r in &rows {
        line([&r[0], &r[1], &r[2], &r[3]], &mut out);
    }
    out
}
