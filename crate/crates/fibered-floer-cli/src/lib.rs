//! Library half of the command-line front end: request handling, the
//! pipeline driver and report assembly. The binary in `main.rs` is a
//! thin wrapper so that the exact behavior stays testable in process.

pub mod report;
pub mod words;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use fibered_floer::{
    abs_trace, binomial, build_diagram, compare_unperturbed, compute_rank_at_level,
    enumerate_level, simplify_isotopy, turaev_torsion_level, CaseClass, SpinCLevel, TwistWord,
};

pub use report::ReportDoc;
use report::{CensusDoc, CheckDoc, ComparisonDoc, DiagramDoc, GeneratorRow, SpinRow, TorsionRow};
pub use words::{parse_twists, parse_word};

/// Output format of the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// A fully specified run.
#[derive(Debug, Clone)]
pub struct CliRequest {
    pub genus: u32,
    pub word: String,
    /// Spin^c level; defaults to `g-2`. Other levels are only available
    /// for the product case.
    pub level: Option<SpinCLevel>,
    pub format: Format,
    pub show_generators: bool,
    pub compare_unperturbed: bool,
    pub show_torsion_levels: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Core(#[from] fibered_floer::Error),
}

impl CliError {
    /// Exit codes: 1 for input problems, 2 for words or requests outside
    /// the supported families, 3 for a failed internal cross-check.
    pub fn exit_code(&self) -> i32 {
        use fibered_floer::Error as E;
        match self {
            CliError::Parse { .. } => 1,
            CliError::Core(e) => match e {
                E::UnsupportedMappingClass
                | E::UnsupportedCurve
                | E::UnsupportedLevel { .. }
                | E::UnsupportedCase
                | E::NoCitedComparison => 2,
                E::InconclusiveSandwich { .. } => 3,
                _ => 1,
            },
        }
    }
}

/// Exit code of a run whose report printed but whose cross-checks failed.
pub const EXIT_CHECKS_FAILED: i32 = 3;

fn to_i64(v: &BigInt, context: &'static str) -> Result<i64, CliError> {
    v.to_i64()
        .ok_or(CliError::Core(fibered_floer::Error::TooLarge { context }))
}

/// Runs the pipeline for a request and assembles the report document.
pub fn execute(req: &CliRequest) -> Result<ReportDoc, CliError> {
    let word = parse_word(&req.word, req.genus)?;
    let g = word.genus();
    let level = req.level.unwrap_or(i64::from(g) - 2);

    let result = compute_rank_at_level(&word, level)?;
    let diagram = simplify_isotopy(build_diagram(&word)?);
    let census = enumerate_level(&diagram, level)?;

    let abs = if word.uses_only_pair() {
        Some(to_i64(&abs_trace(&word)?, "absolute trace")?)
    } else {
        None
    };

    let spinc = result
        .per_structure
        .iter()
        .map(|s| {
            Ok(SpinRow {
                label: s.label.to_string(),
                chi: to_i64(&s.chi, "per-structure chi")?,
                pairs: s.essential_pairs,
                rank: s.rank,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let comparison = if req.compare_unperturbed {
        let c = compare_unperturbed(&result)?;
        Some(ComparisonDoc {
            perturbed: c.perturbed,
            unperturbed: c.unperturbed,
            difference: c.difference,
        })
    } else {
        None
    };

    let is_product = matches!(result.case, CaseClass::Product);
    let torsion = if req.show_torsion_levels || is_product {
        Some(torsion_table(&word, is_product)?)
    } else {
        None
    };

    let (diagram_doc, generators) = if req.show_generators {
        let slots = diagram
            .slots()
            .iter()
            .map(|(&slot, points)| (slot, points.iter().map(|p| p.to_string()).collect()))
            .collect();
        let gens = census
            .entries
            .iter()
            .map(|e| GeneratorRow {
                side: e.generator.side().to_string(),
                points: e.generator.points().map(|p| p.to_string()).collect(),
                fake: e.fake,
            })
            .collect();
        (Some(DiagramDoc(slots)), Some(gens))
    } else {
        (None, None)
    };

    Ok(ReportDoc {
        genus: g,
        word: word.to_string(),
        case: result.case.tag().to_string(),
        lefschetz: to_i64(&result.lefschetz, "lefschetz number")?,
        abs_trace: abs,
        census: CensusDoc {
            total: census.pairs_total,
            fake: census.pairs_fake,
            essential: census.pairs_essential,
        },
        spinc,
        total_rank: result.total_rank,
        checks: result
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.to_string(),
                pass: c.pass,
            })
            .collect(),
        comparison,
        torsion,
        diagram: diagram_doc,
        generators,
    })
}

/// Torsion per level `0..=g-1`; the product case also gets its census
/// counts per level (the standard binomials).
fn torsion_table(word: &TwistWord, is_product: bool) -> Result<Vec<TorsionRow>, CliError> {
    let g = i64::from(word.genus());
    let mut rows = Vec::new();
    for k in 0..g {
        let tau = to_i64(&turaev_torsion_level(word, k)?, "torsion value")?;
        let census = if is_product {
            let picks = (g - 1 - k) as u64;
            let total = binomial((2 * g - 1) as u64, picks);
            let fake = if picks == 0 {
                BigInt::from(0)
            } else {
                binomial((2 * g - 2) as u64, picks - 1)
            };
            let essential = binomial((2 * g - 2) as u64, picks);
            Some(CensusDoc {
                total: to_i64(&total, "census size")? as u64,
                fake: to_i64(&fake, "census size")? as u64,
                essential: to_i64(&essential, "census size")? as u64,
            })
        } else {
            None
        };
        rows.push(TorsionRow { k, tau, census });
    }
    Ok(rows)
}
