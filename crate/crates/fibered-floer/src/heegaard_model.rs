//! Combinatorial model of the special Heegaard diagram of a mapping torus.
//!
//! The diagram of a genus-`g` fiber lives on a genus `2g+1` surface with
//! curves `alpha_1..alpha_(2g+1)`, `beta_1..beta_(2g+1)`. Only
//! intersection points matter for the counts downstream, so the model
//! stores, per slot `i` (the pair `alpha_i`, `beta_i`, `1 <= i <= 2g`),
//! the set of available points:
//!
//! * every slot starts with its two standard points `L_i`, `R_i`;
//! * twisting along the transverse pair adds extra points `P(i,j)` on
//!   slot 1 only, as many as `abs_trace(word) - 2`;
//! * the connector points `A_i`, `A'_i` (on `alpha_(2g+1)`) and `B_i`,
//!   `B'_i` (on `beta_(2g+1)`) are recorded for completeness, though the
//!   generators only ever use the two standard combinations.
//!
//! For words of the shapes `gamma^m delta^n` (same sign) and
//! `gamma^m1 delta^n1 gamma^m2`, an isotopy of `beta_1` cancels a bigon
//! pair; [`simplify_isotopy`] performs that cancellation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::mapping_class::{abs_trace, classify, CaseClass, TwistWord};

/// One intersection point of the diagram.
///
/// `L(i)` and `R(i)` are the two standard points of slot `i`; `P(i, j)`
/// are the extra slot-1 points created by twisting. For the two-letter
/// and sandwich shapes the `P` points carry their natural grid labels
/// (`1 <= i <= |m-total|`, `1 <= j <= |n-total|`); for longer alternating
/// words no grid structure exists (the count `abs_trace - 2` outgrows any
/// such grid) and the points are labelled `P(1, 1) .. P(count, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntersectionPoint {
    L(u32),
    R(u32),
    P(u64, u64),
    A(u32),
    APrime(u32),
    B(u32),
    BPrime(u32),
}

impl fmt::Display for IntersectionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionPoint::L(i) => write!(f, "L{i}"),
            IntersectionPoint::R(i) => write!(f, "R{i}"),
            IntersectionPoint::P(i, j) => write!(f, "P({i},{j})"),
            IntersectionPoint::A(i) => write!(f, "A{i}"),
            IntersectionPoint::APrime(i) => write!(f, "A'{i}"),
            IntersectionPoint::B(i) => write!(f, "B{i}"),
            IntersectionPoint::BPrime(i) => write!(f, "B'{i}"),
        }
    }
}

/// The intersection-point model for one twist word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseDiagram {
    genus: u32,
    case: CaseClass,
    slots: BTreeMap<u32, BTreeSet<IntersectionPoint>>,
    p_grid: BTreeSet<(u64, u64)>,
    /// Grid dimensions of the `P` labels where a grid exists (two-letter
    /// and sandwich shapes).
    p_dims: Option<(u64, u64)>,
    removed: BTreeSet<IntersectionPoint>,
    simplified: bool,
    connectors: BTreeSet<IntersectionPoint>,
}

impl CaseDiagram {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn case(&self) -> &CaseClass {
        &self.case
    }

    pub fn slot_points(&self, slot: u32) -> Result<&BTreeSet<IntersectionPoint>> {
        self.slots.get(&slot).ok_or(Error::SlotOutOfRange {
            slot,
            max: 2 * self.genus,
        })
    }

    pub fn slots(&self) -> &BTreeMap<u32, BTreeSet<IntersectionPoint>> {
        &self.slots
    }

    /// Index pairs of the surviving `P` points.
    pub fn p_grid(&self) -> &BTreeSet<(u64, u64)> {
        &self.p_grid
    }

    pub fn p_dims(&self) -> Option<(u64, u64)> {
        self.p_dims
    }

    pub fn removed(&self) -> &BTreeSet<IntersectionPoint> {
        &self.removed
    }

    pub fn is_simplified(&self) -> bool {
        self.simplified
    }

    pub fn connectors(&self) -> &BTreeSet<IntersectionPoint> {
        &self.connectors
    }
}

fn big_to_u64(v: &BigInt, context: &'static str) -> Result<u64> {
    v.to_u64().ok_or(Error::TooLarge { context })
}

/// Builds the unsimplified diagram for a supported word.
///
/// Single-curve and disjoint-family twists introduce no new intersection
/// points; transverse-pair words add their `P` points on slot 1, making
/// the slot-1 total equal to `abs_trace(word)`.
pub fn build_diagram(word: &TwistWord) -> Result<CaseDiagram> {
    let case = classify(word);
    if !case.is_supported() {
        return Err(Error::UnsupportedMappingClass);
    }
    let g = word.genus();
    let mut slots = BTreeMap::new();
    for i in 1..=2 * g {
        let mut set = BTreeSet::new();
        set.insert(IntersectionPoint::L(i));
        set.insert(IntersectionPoint::R(i));
        slots.insert(i, set);
    }
    let mut connectors = BTreeSet::new();
    for i in 1..=2 * g {
        connectors.insert(IntersectionPoint::A(i));
        connectors.insert(IntersectionPoint::APrime(i));
        connectors.insert(IntersectionPoint::B(i));
        connectors.insert(IntersectionPoint::BPrime(i));
    }

    let mut p_grid = BTreeSet::new();
    let mut p_dims = None;
    match &case {
        CaseClass::Product | CaseClass::Single(_) | CaseClass::Disjoint(_) => {}
        CaseClass::Opp { m, n } | CaseClass::Same { m, n } => {
            let rows = m.unsigned_abs();
            let cols = n.unsigned_abs();
            for i in 1..=rows {
                for j in 1..=cols {
                    p_grid.insert((i, j));
                }
            }
            p_dims = Some((rows, cols));
        }
        CaseClass::Sandwich { m1, n1, m2 } => {
            let rows = m1.checked_add(*m2).ok_or(Error::TooLarge {
                context: "sandwich gamma power total",
            })? as u64;
            let cols = *n1 as u64;
            for i in 1..=rows {
                for j in 1..=cols {
                    p_grid.insert((i, j));
                }
            }
            p_dims = Some((rows, cols));
        }
        CaseClass::Alternating(_) => {
            let extra = abs_trace(word)? - 2;
            let count = big_to_u64(&extra, "alternating intersection count")?;
            for i in 1..=count {
                p_grid.insert((i, 1));
            }
        }
        CaseClass::Unsupported => unreachable!(),
    }
    let slot1 = slots.get_mut(&1).expect("slot 1 exists");
    for &(i, j) in &p_grid {
        slot1.insert(IntersectionPoint::P(i, j));
    }
    if word.uses_only_pair() {
        debug_assert_eq!(
            BigInt::from(slot1.len()),
            abs_trace(word)?,
            "slot-1 point count must equal the absolute trace"
        );
    }

    Ok(CaseDiagram {
        genus: g,
        case,
        slots,
        p_grid,
        p_dims,
        removed: BTreeSet::new(),
        simplified: false,
        connectors,
    })
}

/// Cancels the bigon pair the `beta_1` isotopy removes.
///
/// * same-sign two-letter words lose `R(1)` and the corner point
///   `P(|m|, |n|)`;
/// * sandwich words lose `R(1)` and `P(1, 1)`, and the surviving `P`
///   points are renumbered onto the grid with `(m1+m2, n1)` left as the
///   distinguished missing label, mirroring the two-letter case;
/// * every other case is untouched.
///
/// Idempotent: an already simplified diagram is returned unchanged.
pub fn simplify_isotopy(mut d: CaseDiagram) -> CaseDiagram {
    if d.simplified {
        return d;
    }
    match d.case.clone() {
        CaseClass::Same { m, n } => {
            let corner = (m.unsigned_abs(), n.unsigned_abs());
            cancel(&mut d, corner);
        }
        CaseClass::Sandwich { .. } => {
            cancel(&mut d, (1, 1));
            let (rows, cols) = d.p_dims.expect("sandwich diagrams carry grid dims");
            let survivors: Vec<(u64, u64)> = d.p_grid.iter().copied().collect();
            let targets: Vec<(u64, u64)> = (1..=rows)
                .flat_map(|i| (1..=cols).map(move |j| (i, j)))
                .filter(|&ij| ij != (rows, cols))
                .collect();
            debug_assert_eq!(survivors.len(), targets.len());
            let slot1 = d.slots.get_mut(&1).expect("slot 1 exists");
            for &(i, j) in &survivors {
                slot1.remove(&IntersectionPoint::P(i, j));
            }
            for &(i, j) in &targets {
                slot1.insert(IntersectionPoint::P(i, j));
            }
            d.p_grid = targets.into_iter().collect();
        }
        _ => {}
    }
    d.simplified = true;
    d
}

fn cancel(d: &mut CaseDiagram, corner: (u64, u64)) {
    let slot1 = d.slots.get_mut(&1).expect("slot 1 exists");
    let r1 = IntersectionPoint::R(1);
    let p = IntersectionPoint::P(corner.0, corner.1);
    let had_r = slot1.remove(&r1);
    let had_p = slot1.remove(&p);
    debug_assert!(had_r && had_p, "cancelled points must exist");
    d.p_grid.remove(&corner);
    d.removed.insert(r1);
    d.removed.insert(p);
}

/// Number of intersection points available on a slot.
pub fn intersection_count(d: &CaseDiagram, slot: u32) -> Result<u64> {
    Ok(d.slot_points(slot)?.len() as u64)
}
