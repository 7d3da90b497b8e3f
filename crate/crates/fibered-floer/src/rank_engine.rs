//! The rank computation: pipeline plus the sandwich argument.
//!
//! Within one spin^c structure the homology rank is at least the
//! absolute Euler characteristic and at most the number of essential
//! generator pairs. For every supported word those two bounds coincide,
//! which pins the rank; a disagreement aborts the run with
//! [`Error::InconclusiveSandwich`] rather than guessing.
//!
//! Two differential-level facts are imported as axioms rather than
//! recomputed: fake pairs cancel (they bound a basepoint-free disk), and
//! each indexed structure of the same-sign and sandwich cases carries
//! rank one. The per-structure equality check keeps the engine honest
//! about both.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::generator_enum::enumerate_level;
use crate::heegaard_model::{build_diagram, intersection_count, simplify_isotopy};
use crate::mapping_class::{
    abs_trace, classify, lefschetz, turaev_torsion_level, CaseClass, TwistWord,
};
use crate::spinc_partition::{euler_per_structure, partition, SpinCLabel};
use crate::{binomial, SpinCLevel};

/// Rank data for one spin^c structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureRank {
    pub label: SpinCLabel,
    pub chi: BigInt,
    pub essential_pairs: u64,
    pub rank: u64,
}

/// One named cross-check with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub pass: bool,
}

/// Full result of a rank computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub word: TwistWord,
    pub case: CaseClass,
    pub level: SpinCLevel,
    pub lefschetz: BigInt,
    pub per_structure: Vec<StructureRank>,
    pub total_rank: u64,
    pub checks: Vec<CheckRecord>,
}

impl RankResult {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Closes the sandwich: when `|chi|` equals the essential-pair count the
/// rank is that common value; otherwise the argument is inconclusive.
pub fn sandwich_rank(chi: &BigInt, essential_pairs: u64) -> Result<u64> {
    let chi_abs = chi.abs();
    if chi_abs == BigInt::from(essential_pairs) {
        Ok(essential_pairs)
    } else {
        Err(Error::InconclusiveSandwich {
            chi_abs,
            essential_pairs,
        })
    }
}

/// Rank in the level `S_(g-2)`: the case every supported word covers.
pub fn compute_rank(word: &TwistWord) -> Result<RankResult> {
    compute_rank_at_level(word, i64::from(word.genus()) - 2)
}

/// Runs the pipeline at an explicit level (the product case supports any
/// `k < g`; twisted words only `k = g-2`).
pub fn compute_rank_at_level(word: &TwistWord, k: SpinCLevel) -> Result<RankResult> {
    let case = classify(word);
    if !case.is_supported() {
        return Err(Error::UnsupportedMappingClass);
    }
    let g = word.genus();
    let diagram = simplify_isotopy(build_diagram(word)?);
    let census = enumerate_level(&diagram, k)?;
    let parts = partition(&diagram, &census)?;
    let level_total = turaev_torsion_level(word, k)?;
    let chis = euler_per_structure(&parts, &level_total);

    let mut per_structure = Vec::with_capacity(parts.len());
    let mut total_rank: u64 = 0;
    for (label, bucket) in &parts {
        let chi = chis[label].clone();
        let rank = sandwich_rank(&chi, bucket.pairs_essential)?;
        total_rank = total_rank.checked_add(rank).ok_or(Error::TooLarge {
            context: "total rank",
        })?;
        per_structure.push(StructureRank {
            label: *label,
            chi,
            essential_pairs: bucket.pairs_essential,
            rank,
        });
    }

    let mut checks = Vec::new();
    // (a) The per-structure Euler characteristics sum to the level's
    // torsion; at k = g-2 that value is the Lefschetz number, computed
    // here along the independent trace route.
    let chi_sum: BigInt = per_structure.iter().map(|s| s.chi.clone()).sum();
    let lef = lefschetz(word)?;
    let expected_sum = if k == i64::from(g) - 2 {
        lef.clone()
    } else {
        level_total.clone()
    };
    checks.push(CheckRecord {
        name: "chi_sum_equals_lefschetz",
        pass: chi_sum == expected_sum,
    });
    // (b) Enumerated essential pairs match the closed form of the case.
    let closed = closed_form_essential(word, &case, g, k)?;
    checks.push(CheckRecord {
        name: "essential_pairs_closed_form",
        pass: BigInt::from(census.pairs_essential) == closed,
    });
    // (c) The pipeline rank matches the closed case formula (which equals the
    // closed-form essential count in every covered case).
    checks.push(CheckRecord {
        name: "case_rank_formula",
        pass: BigInt::from(total_rank) == closed,
    });
    // (d) Unified form at level g-2: rank = 2g - 4 + |slot 1| after the
    // isotopy, across every case.
    if k == i64::from(g) - 2 {
        let slot1 = intersection_count(&diagram, 1)?;
        let unified = BigInt::from(2 * i64::from(g) - 4) + BigInt::from(slot1);
        checks.push(CheckRecord {
            name: "unified_trace_formula",
            pass: BigInt::from(total_rank) == unified,
        });
    }

    Ok(RankResult {
        word: word.clone(),
        case,
        level: k,
        lefschetz: lef,
        per_structure,
        total_rank,
        checks,
    })
}

/// Closed-form essential-pair count (equals the rank exponent of the case).
fn closed_form_essential(
    word: &TwistWord,
    case: &CaseClass,
    g: u32,
    k: SpinCLevel,
) -> Result<BigInt> {
    let g = i64::from(g);
    let base = BigInt::from(2 * g - 4);
    Ok(match case {
        CaseClass::Product => {
            let picks = g - 1 - k;
            debug_assert!(picks >= 0);
            binomial((2 * g - 2) as u64, picks as u64)
        }
        CaseClass::Single(_) | CaseClass::Disjoint(_) => BigInt::from(2 * g - 2),
        CaseClass::Opp { m, n } => {
            BigInt::from(2 * g - 2) + BigInt::from(*m).abs() * BigInt::from(*n).abs()
        }
        CaseClass::Same { m, n } => base + BigInt::from(*m) * BigInt::from(*n),
        CaseClass::Sandwich { m1, n1, m2 } => {
            base + (BigInt::from(*m1) + BigInt::from(*m2)) * BigInt::from(*n1)
        }
        CaseClass::Alternating(_) => base + abs_trace(word)?,
        CaseClass::Unsupported => return Err(Error::UnsupportedMappingClass),
    })
}

/// Comparison against the unperturbed Heegaard Floer rank cited for the
/// single-curve, opposite-sign and same-sign cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub perturbed: u64,
    pub unperturbed: u64,
    pub difference: u64,
}

/// The cited unperturbed ranks are `2g` for a single twist,
/// `2g - 2 + |mn|` for the opposite-sign pair and `2g - 2 + mn` for the
/// same-sign pair, giving differences 2, 0 and 2 respectively.
pub fn compare_unperturbed(r: &RankResult) -> Result<ComparisonReport> {
    let g = u64::from(r.word.genus());
    let unperturbed = match &r.case {
        CaseClass::Single(_) => 2 * g,
        CaseClass::Opp { m, n } | CaseClass::Same { m, n } => {
            let mn = m
                .unsigned_abs()
                .checked_mul(n.unsigned_abs())
                .ok_or(Error::TooLarge {
                    context: "unperturbed rank",
                })?;
            (2 * g - 2).checked_add(mn).ok_or(Error::TooLarge {
                context: "unperturbed rank",
            })?
        }
        _ => return Err(Error::NoCitedComparison),
    };
    let difference = unperturbed
        .checked_sub(r.total_rank)
        .ok_or(Error::TooLarge {
            context: "rank comparison difference",
        })?;
    Ok(ComparisonReport {
        perturbed: r.total_rank,
        unperturbed,
        difference,
    })
}
