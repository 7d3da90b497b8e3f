//! The report document and its two renderings.
//!
//! Text and JSON carry the same numeric content; JSON field order is
//! fixed by struct declaration order, and every list is deterministic,
//! so identical requests produce byte-identical output.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusDoc {
    pub total: u64,
    pub fake: u64,
    pub essential: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpinRow {
    pub label: String,
    pub chi: i64,
    pub pairs: u64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ComparisonDoc {
    pub perturbed: u64,
    pub unperturbed: u64,
    pub difference: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TorsionRow {
    pub k: i64,
    pub tau: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusDoc>,
}

/// Slot index to point labels, serialized as a JSON object whose keys
/// appear in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDoc(pub Vec<(u32, Vec<String>)>);

impl Serialize for DiagramDoc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (slot, points) in &self.0 {
            map.serialize_entry(&slot.to_string(), points)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GeneratorRow {
    pub side: String,
    pub points: Vec<String>,
    pub fake: bool,
}

/// Everything one run reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub genus: u32,
    pub word: String,
    pub case: String,
    pub lefschetz: i64,
    pub abs_trace: Option<i64>,
    pub census: CensusDoc,
    pub spinc: Vec<SpinRow>,
    pub total_rank: u64,
    pub checks: Vec<CheckDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<TorsionRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorRow>>,
}

impl ReportDoc {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self, color: bool) -> String {
        let bold = |s: &str| {
            if color {
                format!("\x1b[1m{s}\x1b[0m")
            } else {
                s.to_string()
            }
        };
        let verdict = |pass: bool| match (pass, color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".to_string(),
            (true, false) => "PASS".to_string(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".to_string(),
            (false, false) => "FAIL".to_string(),
        };

        let mut out = String::new();
        let _ = writeln!(out, "{}", bold("fibered-floer report"));
        let _ = writeln!(out, "  genus:      {}", self.genus);
        let word = if self.word.is_empty() {
            "(identity)"
        } else {
            &self.word
        };
        let _ = writeln!(out, "  word:       {word}");
        let _ = writeln!(out, "  case:       {}", self.case);
        let _ = writeln!(out, "  lefschetz:  {}", self.lefschetz);
        match self.abs_trace {
            Some(t) => {
                let _ = writeln!(out, "  abs trace:  {t}");
            }
            None => {
                let _ = writeln!(out, "  abs trace:  n/a");
            }
        }
        let _ = writeln!(
            out,
            "  census:     {} pairs ({} fake, {} essential)",
            self.census.total, self.census.fake, self.census.essential
        );
        let _ = writeln!(out, "{}", bold("spin^c structures"));
        let _ = writeln!(
            out,
            "  {:<16} {:>6} {:>6} {:>6}",
            "label", "chi", "pairs", "rank"
        );
        for row in &self.spinc {
            let _ = writeln!(
                out,
                "  {:<16} {:>6} {:>6} {:>6}",
                row.label, row.chi, row.pairs, row.rank
            );
        }
        let _ = writeln!(out, "  total rank: {}", self.total_rank);
        if let Some(c) = &self.comparison {
            let _ = writeln!(out, "{}", bold("unperturbed comparison"));
            let _ = writeln!(
                out,
                "  perturbed {} vs unperturbed {} (difference {})",
                c.perturbed, c.unperturbed, c.difference
            );
        }
        if let Some(rows) = &self.torsion {
            let _ = writeln!(out, "{}", bold("torsion by level"));
            for row in rows {
                match &row.census {
                    Some(c) => {
                        let _ = writeln!(
                            out,
                            "  k={:<3} tau={:<8} census {} pairs ({} fake, {} essential)",
                            row.k, row.tau, c.total, c.fake, c.essential
                        );
                    }
                    None => {
                        let _ = writeln!(out, "  k={:<3} tau={}", row.k, row.tau);
                    }
                }
            }
        }
        if let Some(diagram) = &self.diagram {
            let _ = writeln!(out, "{}", bold("diagram"));
            for (slot, points) in &diagram.0 {
                let _ = writeln!(out, "  slot {:<3} {}", slot, points.join(" "));
            }
        }
        if let Some(rows) = &self.generators {
            let _ = writeln!(out, "{}", bold("generators"));
            for row in rows {
                let _ = writeln!(
                    out,
                    "  [{}] {} {}",
                    row.side,
                    row.points.join(" "),
                    if row.fake { "(fake)" } else { "(essential)" }
                );
            }
        }
        let _ = writeln!(out, "{}", bold("checks"));
        for c in &self.checks {
            let _ = writeln!(out, "  {:<28} {}", c.name, verdict(c.pass));
        }
        out
    }
}
