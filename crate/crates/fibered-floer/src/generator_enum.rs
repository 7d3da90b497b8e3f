//! Enumeration of Floer generators by spin^c level.
//!
//! A generator picks one intersection point on every alpha and beta curve.
//! The connector curves `alpha_(2g+1)`, `beta_(2g+1)` admit exactly two
//! standard combinations, which splits the generators into two sides:
//!
//! * A-side: `(A_2g, B_2g)` plus one point per slot `1..=2g-1`;
//! * B-side: `(A_(2g-1), B_(2g-1))` plus one point per slot `1..=2g-2`
//!   and slot `2g`.
//!
//! The level of a generator drops by one for each `R` or `P` coordinate,
//! starting from `g-1` for the all-`L` pick. An A-side and a B-side
//! generator with the same pattern on the shared slots `1..=2g-2` (and
//! hence the same letter on their side-specific tail slot) form a pair.
//! A pair is fake when the tail coordinate is the `R` point — those are
//! connected by a basepoint-free disk and cancel — and essential
//! otherwise.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::heegaard_model::{CaseDiagram, IntersectionPoint};
use crate::mapping_class::CaseClass;
use crate::SpinCLevel;

/// Which connector combination a generator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

impl Side {
    /// Slot indices this side chooses points on, ascending.
    pub fn slot_range(self, genus: u32) -> Vec<u32> {
        match self {
            Side::A => (1..=2 * genus - 1).collect(),
            Side::B => (1..=2 * genus - 2).chain([2 * genus]).collect(),
        }
    }

    /// The slot whose `R` point marks a fake generator.
    fn tail_slot(self, genus: u32) -> u32 {
        match self {
            Side::A => 2 * genus - 1,
            Side::B => 2 * genus,
        }
    }

    /// The two connector points this side occupies.
    pub fn connector_points(self, genus: u32) -> [IntersectionPoint; 2] {
        match self {
            Side::A => [
                IntersectionPoint::A(2 * genus),
                IntersectionPoint::B(2 * genus),
            ],
            Side::B => [
                IntersectionPoint::A(2 * genus - 1),
                IntersectionPoint::B(2 * genus - 1),
            ],
        }
    }
}

/// One Floer generator: a side plus a chosen point per slot of that side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    side: Side,
    coords: BTreeMap<u32, IntersectionPoint>,
}

impl Generator {
    pub fn new(side: Side, coords: BTreeMap<u32, IntersectionPoint>) -> Self {
        Generator { side, coords }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coords(&self) -> &BTreeMap<u32, IntersectionPoint> {
        &self.coords
    }

    pub fn coord(&self, slot: u32) -> Option<IntersectionPoint> {
        self.coords.get(&slot).copied()
    }

    /// Genus of the underlying fiber, recovered from the coordinate count
    /// (both sides occupy `2g - 1` slots).
    pub fn genus(&self) -> u32 {
        (self.coords.len() as u32).div_ceil(2)
    }

    /// All intersection points of the generator: slot coordinates plus
    /// the side's two connector points.
    pub fn points(&self) -> impl Iterator<Item = IntersectionPoint> + '_ {
        self.coords
            .values()
            .copied()
            .chain(self.side.connector_points(self.genus()))
    }
}

/// Spin^c level of a generator: `g - 1` minus the number of `R` and `P`
/// coordinates.
pub fn spinc_degree(gen: &Generator, genus: u32) -> SpinCLevel {
    debug_assert_eq!(gen.genus(), genus);
    let r = gen
        .coords
        .values()
        .filter(|p| matches!(p, IntersectionPoint::R(_) | IntersectionPoint::P(_, _)))
        .count();
    i64::from(genus) - 1 - r as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fakeness {
    Fake,
    Essential,
}

/// A generator is fake exactly when its tail coordinate (slot `2g-1` on
/// the A-side, slot `2g` on the B-side) is the `R` point.
pub fn classify_fake(gen: &Generator, genus: u32) -> Fakeness {
    let tail = gen.side.tail_slot(genus);
    match gen.coord(tail) {
        Some(IntersectionPoint::R(_)) => Fakeness::Fake,
        _ => Fakeness::Essential,
    }
}

/// A generator together with its fake flag and the index of its partner
/// in the census list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub generator: Generator,
    pub fake: bool,
    pub partner: usize,
}

/// All generators of one spin^c level, in a fixed deterministic order
/// (by side, then slot-wise point labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCensus {
    pub level: SpinCLevel,
    pub pairs_total: u64,
    pub pairs_fake: u64,
    pub pairs_essential: u64,
    pub entries: Vec<CensusEntry>,
}

/// Enumerates the generators of level `k`.
///
/// The product case supports any `k < g`; twisted words support only
/// `k = g - 2`, the level their diagrams are built for.
pub fn enumerate_level(d: &CaseDiagram, k: SpinCLevel) -> Result<GeneratorCensus> {
    let g = d.genus();
    if k >= i64::from(g) {
        return Err(Error::LevelOutOfRange { level: k, genus: g });
    }
    if !matches!(d.case(), CaseClass::Product) && k != i64::from(g) - 2 {
        return Err(Error::UnsupportedLevel { level: k });
    }
    let replacements = i64::from(g) - 1 - k;
    debug_assert!(replacements >= 0);

    let side_a = enumerate_side(d, Side::A, replacements as usize)?;
    let side_b = enumerate_side(d, Side::B, replacements as usize)?;
    assert_eq!(side_a.len(), side_b.len(), "sides must pair off one to one");

    let mut entries: Vec<CensusEntry> = side_a
        .into_iter()
        .chain(side_b)
        .map(|generator| {
            let fake = classify_fake(&generator, g) == Fakeness::Fake;
            CensusEntry {
                generator,
                fake,
                partner: usize::MAX,
            }
        })
        .collect();
    entries.sort_by(|x, y| x.generator.cmp(&y.generator));

    // Pair A-side and B-side entries through their shared-slot pattern.
    let mut by_key: BTreeMap<(Vec<IntersectionPoint>, bool), [Option<usize>; 2]> = BTreeMap::new();
    for (idx, e) in entries.iter().enumerate() {
        let shared: Vec<IntersectionPoint> = (1..=2 * g - 2)
            .map(|s| e.generator.coord(s).expect("shared slots are filled"))
            .collect();
        let tail_r = e.fake;
        let slot = match e.generator.side() {
            Side::A => 0,
            Side::B => 1,
        };
        by_key.entry((shared, tail_r)).or_default()[slot] = Some(idx);
    }
    for pair in by_key.values() {
        let (a, b) = (
            pair[0].expect("unpaired A-side"),
            pair[1].expect("unpaired B-side"),
        );
        entries[a].partner = b;
        entries[b].partner = a;
    }

    let pairs_total = (entries.len() / 2) as u64;
    let pairs_fake = entries.iter().filter(|e| e.fake).count() as u64 / 2;
    debug_assert!(entries.iter().all(|e| spinc_degree(&e.generator, g) == k));

    Ok(GeneratorCensus {
        level: k,
        pairs_total,
        pairs_fake,
        pairs_essential: pairs_total - pairs_fake,
        entries,
    })
}

/// All generators of one side with exactly `replacements` non-`L`
/// coordinates.
fn enumerate_side(d: &CaseDiagram, side: Side, replacements: usize) -> Result<Vec<Generator>> {
    let g = d.genus();
    let slots = side.slot_range(g);
    if replacements > slots.len() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for chosen in slots.iter().copied().combinations(replacements) {
        // Non-L options per chosen slot; slot 1 may offer several.
        let options: Vec<Vec<IntersectionPoint>> = chosen
            .iter()
            .map(|&s| {
                Ok(d.slot_points(s)?
                    .iter()
                    .copied()
                    .filter(|p| !matches!(p, IntersectionPoint::L(_)))
                    .collect())
            })
            .collect::<Result<_>>()?;
        let picks = options.iter().fold(vec![Vec::new()], |acc, opts| {
            acc.iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |&p| {
                        let mut next = prefix.clone();
                        next.push(p);
                        next
                    })
                })
                .collect()
        });
        for pick in picks {
            let mut coords: BTreeMap<u32, IntersectionPoint> = slots
                .iter()
                .map(|&s| (s, IntersectionPoint::L(s)))
                .collect();
            for (&s, p) in chosen.iter().zip(pick) {
                coords.insert(s, p);
            }
            out.push(Generator::new(side, coords));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heegaard_model::{build_diagram, simplify_isotopy};
    use crate::mapping_class::{Curve, DehnTwist, TwistWord};

    fn gd(genus: u32, powers: &[i64]) -> TwistWord {
        let twists = powers
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let c = if i % 2 == 0 {
                    Curve::Gamma
                } else {
                    Curve::Delta
                };
                DehnTwist::new(c, p).unwrap()
            })
            .collect();
        TwistWord::new(genus, twists).unwrap()
    }

    fn all_l(side: Side, genus: u32) -> Generator {
        let coords = side
            .slot_range(genus)
            .into_iter()
            .map(|s| (s, IntersectionPoint::L(s)))
            .collect();
        Generator::new(side, coords)
    }

    #[test]
    fn degree_counts_replacements() {
        let g = 3;
        let top = all_l(Side::A, g);
        assert_eq!(spinc_degree(&top, g), 2);

        let mut one_r = all_l(Side::A, g);
        one_r.coords.insert(2, IntersectionPoint::R(2));
        assert_eq!(spinc_degree(&one_r, g), 1);

        let mut with_p = all_l(Side::B, g);
        with_p.coords.insert(1, IntersectionPoint::P(1, 1));
        assert_eq!(spinc_degree(&with_p, g), 1);
    }

    #[test]
    fn fake_rule_matches_the_tail_slot() {
        let g = 3;
        let mut a0 = all_l(Side::A, g);
        a0.coords.insert(5, IntersectionPoint::R(5));
        assert_eq!(classify_fake(&a0, g), Fakeness::Fake);

        let mut essential = all_l(Side::A, g);
        essential.coords.insert(1, IntersectionPoint::R(1));
        assert_eq!(classify_fake(&essential, g), Fakeness::Essential);

        let mut with_p = all_l(Side::B, g);
        with_p.coords.insert(1, IntersectionPoint::P(2, 1));
        assert_eq!(classify_fake(&with_p, g), Fakeness::Essential);

        let mut b0 = all_l(Side::B, g);
        b0.coords.insert(6, IntersectionPoint::R(6));
        assert_eq!(classify_fake(&b0, g), Fakeness::Fake);
    }

    #[test]
    fn product_census_binomials() {
        let d = build_diagram(&gd(3, &[])).unwrap();
        let c2 = enumerate_level(&d, 2).unwrap();
        assert_eq!(
            (c2.pairs_total, c2.pairs_fake, c2.pairs_essential),
            (1, 0, 1)
        );
        let c1 = enumerate_level(&d, 1).unwrap();
        assert_eq!(
            (c1.pairs_total, c1.pairs_fake, c1.pairs_essential),
            (5, 1, 4)
        );
        let c0 = enumerate_level(&d, 0).unwrap();
        assert_eq!(
            (c0.pairs_total, c0.pairs_fake, c0.pairs_essential),
            (10, 4, 6)
        );
        assert_eq!(c0.entries.len(), 20);
    }

    #[test]
    fn opposite_pair_census() {
        let d = build_diagram(&gd(3, &[1, -2])).unwrap();
        let c = enumerate_level(&d, 1).unwrap();
        assert_eq!((c.pairs_total, c.pairs_essential), (7, 6));
    }

    #[test]
    fn simplified_same_sign_census() {
        let d = simplify_isotopy(build_diagram(&gd(3, &[2, 2])).unwrap());
        let c = enumerate_level(&d, 1).unwrap();
        // 2g-3+mn total pairs, one fake, 2g-4+mn essential.
        assert_eq!((c.pairs_total, c.pairs_fake, c.pairs_essential), (7, 1, 6));
    }

    #[test]
    fn level_guards() {
        let d = build_diagram(&gd(3, &[])).unwrap();
        assert_eq!(
            enumerate_level(&d, 3).unwrap_err(),
            Error::LevelOutOfRange { level: 3, genus: 3 }
        );
        let d = build_diagram(&gd(3, &[2, -1])).unwrap();
        assert_eq!(
            enumerate_level(&d, 0).unwrap_err(),
            Error::UnsupportedLevel { level: 0 }
        );
        assert!(enumerate_level(&d, 1).is_ok());
    }

    #[test]
    fn pairing_is_a_level_preserving_involution() {
        let d = build_diagram(&gd(4, &[3, -2])).unwrap();
        let c = enumerate_level(&d, 2).unwrap();
        for (i, e) in c.entries.iter().enumerate() {
            let p = &c.entries[e.partner];
            assert_eq!(p.partner, i);
            assert_ne!(p.generator.side(), e.generator.side());
            assert_eq!(p.fake, e.fake);
            assert_eq!(spinc_degree(&p.generator, 4), spinc_degree(&e.generator, 4));
        }
    }

    #[test]
    fn entries_are_sorted() {
        let d = build_diagram(&gd(3, &[1, 1])).unwrap();
        let c = enumerate_level(&d, 1).unwrap();
        let mut sorted = c.entries.clone();
        sorted.sort_by(|x, y| x.generator.cmp(&y.generator));
        assert_eq!(c.entries, sorted);
    }
}
