//! Splitting a generator level into individual spin^c structures.
//!
//! For the same-sign two-letter and sandwich cases the level `S_(g-2)`
//! decomposes: each surviving `P(i,j)` point carries its own structure
//! `s_(i,j)` holding exactly one essential pair, and all `L`/`R`
//! generators share the remaining distinguished structure. Everywhere
//! else the level is treated as a single aggregate bucket.
//!
//! The partition follows the label rule directly. [`chern_eval`] is the
//! independent first-Chern-class evaluation on periodic-domain data and
//! serves as a validation hook for that rule.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::generator_enum::{CensusEntry, Generator, GeneratorCensus};
use crate::heegaard_model::{CaseDiagram, IntersectionPoint};
use crate::mapping_class::CaseClass;
use crate::SpinCLevel;

/// Name of one spin^c bucket of a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpinCLabel {
    /// The whole level treated as one bucket.
    Aggregate(SpinCLevel),
    /// Structure `s_(i,j)` attached to the surviving point `P(i,j)`.
    Indexed(u64, u64),
    /// The distinguished structure holding the `L`/`R` generators.
    Distinguished,
}

impl fmt::Display for SpinCLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinCLabel::Aggregate(k) => write!(f, "S_{k}"),
            SpinCLabel::Indexed(i, j) => write!(f, "s_{{{i},{j}}}"),
            SpinCLabel::Distinguished => write!(f, "distinguished"),
        }
    }
}

/// Evaluation data of a periodic domain: its Euler measure, its average
/// multiplicity at the basepoint, and its average multiplicities at
/// intersection points (quarter-integer units).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicDomainData {
    euler_measure: Rational64,
    basepoint_mult: i64,
    point_measures: BTreeMap<IntersectionPoint, Rational64>,
}

impl PeriodicDomainData {
    pub fn new(
        euler_measure: Rational64,
        basepoint_mult: i64,
        point_measures: BTreeMap<IntersectionPoint, Rational64>,
    ) -> Result<Self> {
        for &m in point_measures.values() {
            if !(m * 4).is_integer() {
                return Err(Error::NonIntegralEvaluation { value: m });
            }
        }
        Ok(PeriodicDomainData {
            euler_measure,
            basepoint_mult,
            point_measures,
        })
    }

    pub fn zero() -> Self {
        PeriodicDomainData {
            euler_measure: Rational64::zero(),
            basepoint_mult: 0,
            point_measures: BTreeMap::new(),
        }
    }

    pub fn euler_measure(&self) -> Rational64 {
        self.euler_measure
    }

    pub fn basepoint_mult(&self) -> i64 {
        self.basepoint_mult
    }

    pub fn point_measure(&self, p: IntersectionPoint) -> Rational64 {
        self.point_measures
            .get(&p)
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    /// Sum of two domains; evaluation is linear in the domain.
    pub fn combined(&self, other: &PeriodicDomainData) -> PeriodicDomainData {
        let mut point_measures = self.point_measures.clone();
        for (&p, &m) in &other.point_measures {
            *point_measures.entry(p).or_insert_with(Rational64::zero) += m;
        }
        PeriodicDomainData {
            euler_measure: self.euler_measure + other.euler_measure,
            basepoint_mult: self.basepoint_mult + other.basepoint_mult,
            point_measures,
        }
    }

    /// The rational value of `<c_1(s_y), [P]>` before the integrality
    /// check.
    pub fn eval_rational(&self, gen: &Generator) -> Rational64 {
        let mut total = self.euler_measure - Rational64::from_integer(2 * self.basepoint_mult);
        for p in gen.points() {
            total += self.point_measure(p) * 2;
        }
        total
    }
}

/// Evaluates the first Chern class of the structure of `gen` on the
/// domain: `chi(P) - 2 n_z(P) + 2 sum_(p in y) n_p(P)`. A non-integral
/// result signals inconsistent domain data.
pub fn chern_eval(dom: &PeriodicDomainData, gen: &Generator) -> Result<i64> {
    let total = dom.eval_rational(gen);
    if !total.is_integer() {
        return Err(Error::NonIntegralEvaluation { value: total });
    }
    Ok(total.to_integer())
}

/// Partitions a census into spin^c buckets.
///
/// Same-sign two-letter and sandwich diagrams must be simplified and at
/// level `g-2`; their generators are routed by slot-1 coordinate
/// (`P(i,j)` to `Indexed(i,j)`, `L`/`R` to `Distinguished`). All other
/// cases pass through as one aggregate bucket.
pub fn partition(
    d: &CaseDiagram,
    census: &GeneratorCensus,
) -> Result<BTreeMap<SpinCLabel, GeneratorCensus>> {
    match d.case() {
        CaseClass::Same { .. } | CaseClass::Sandwich { .. } => {
            if !d.is_simplified() {
                return Err(Error::UnsupportedCase);
            }
            if census.level != i64::from(d.genus()) - 2 {
                return Err(Error::UnsupportedLevel {
                    level: census.level,
                });
            }
            let mut groups: BTreeMap<SpinCLabel, Vec<usize>> = BTreeMap::new();
            for &(i, j) in d.p_grid() {
                groups.insert(SpinCLabel::Indexed(i, j), Vec::new());
            }
            groups.insert(SpinCLabel::Distinguished, Vec::new());
            for (idx, e) in census.entries.iter().enumerate() {
                let label = match e.generator.coord(1) {
                    Some(IntersectionPoint::P(i, j)) => SpinCLabel::Indexed(i, j),
                    _ => SpinCLabel::Distinguished,
                };
                groups
                    .get_mut(&label)
                    .expect("every slot-1 P point is in the grid")
                    .push(idx);
            }
            let mut out = BTreeMap::new();
            for (label, indices) in groups {
                out.insert(label, subcensus(census, &indices));
            }
            Ok(out)
        }
        _ => {
            let mut out = BTreeMap::new();
            out.insert(SpinCLabel::Aggregate(census.level), census.clone());
            Ok(out)
        }
    }
}

/// Extracts the sub-census on `indices`, remapping partner links.
///
/// Paired generators agree on slot 1, so a pair never straddles buckets.
fn subcensus(census: &GeneratorCensus, indices: &[usize]) -> GeneratorCensus {
    let remap: BTreeMap<usize, usize> = indices
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let entries: Vec<CensusEntry> = indices
        .iter()
        .map(|&old| {
            let e = &census.entries[old];
            CensusEntry {
                generator: e.generator.clone(),
                fake: e.fake,
                partner: *remap
                    .get(&e.partner)
                    .expect("partner must land in the same bucket"),
            }
        })
        .collect();
    let pairs_total = (entries.len() / 2) as u64;
    let pairs_fake = entries.iter().filter(|e| e.fake).count() as u64 / 2;
    GeneratorCensus {
        level: census.level,
        pairs_total,
        pairs_fake,
        pairs_essential: pairs_total - pairs_fake,
        entries,
    }
}

/// Per-structure Euler characteristics summing to the level total `l`.
///
/// Indexed buckets carry `+1` each; the distinguished bucket absorbs the
/// rest (`l` minus the indexed count, which is `3 - 2g` in the covered
/// cases); a lone aggregate bucket carries `l` itself.
pub fn euler_per_structure(
    parts: &BTreeMap<SpinCLabel, GeneratorCensus>,
    l: &BigInt,
) -> BTreeMap<SpinCLabel, BigInt> {
    let indexed = parts
        .keys()
        .filter(|lab| matches!(lab, SpinCLabel::Indexed(_, _)))
        .count();
    parts
        .keys()
        .map(|&label| {
            let chi = match label {
                SpinCLabel::Aggregate(_) => l.clone(),
                SpinCLabel::Indexed(_, _) => BigInt::one(),
                SpinCLabel::Distinguished => l - BigInt::from(indexed),
            };
            (label, chi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator_enum::{enumerate_level, Side};
    use crate::heegaard_model::{build_diagram, simplify_isotopy};
    use crate::mapping_class::{lefschetz, Curve, DehnTwist, TwistWord};

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

    fn generator_with_slot1(genus: u32, side: Side, slot1: IntersectionPoint) -> Generator {
        let mut coords: BTreeMap<u32, IntersectionPoint> = side
            .slot_range(genus)
            .into_iter()
            .map(|s| (s, IntersectionPoint::L(s)))
            .collect();
        coords.insert(1, slot1);
        Generator::new(side, coords)
    }

    fn ratio(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn zero_domain_evaluates_to_zero() {
        let dom = PeriodicDomainData::zero();
        let gen = generator_with_slot1(3, Side::A, IntersectionPoint::L(1));
        assert_eq!(chern_eval(&dom, &gen).unwrap(), 0);
    }

    /// A fiber-like domain: measure 1/2 on every `L` and connector point,
    /// -1/2 on every `R` and `P` point, Euler measure -3 and basepoint
    /// multiplicity 0. Every level-k generator then evaluates to 2k.
    fn fiber_domain(genus: u32, p_labels: &[(u64, u64)]) -> PeriodicDomainData {
        let mut measures = BTreeMap::new();
        for i in 1..=2 * genus {
            measures.insert(IntersectionPoint::L(i), ratio(1, 2));
            measures.insert(IntersectionPoint::R(i), ratio(-1, 2));
            measures.insert(IntersectionPoint::A(i), ratio(1, 2));
            measures.insert(IntersectionPoint::B(i), ratio(1, 2));
        }
        for &(i, j) in p_labels {
            measures.insert(IntersectionPoint::P(i, j), ratio(-1, 2));
        }
        PeriodicDomainData::new(ratio(-3, 1), 0, measures).unwrap()
    }

    #[test]
    fn fiber_domain_reads_off_the_level() {
        let g = 3;
        let d = build_diagram(&gd(g, &[])).unwrap();
        let dom = fiber_domain(g, &[]);
        for k in 0..=2 {
            let census = enumerate_level(&d, k).unwrap();
            for e in &census.entries {
                assert_eq!(chern_eval(&dom, &e.generator).unwrap(), 2 * k);
            }
        }
    }

    /// Domain data modelled on the simplified diagram of the same-sign
    /// word gd^2 at genus 3: the slot-1 winding region has multiplicity
    /// 1/2 higher around the surviving P corner than around L_1, so the
    /// evaluation separates the structure of the P generators from the
    /// distinguished one by a nonzero even amount.
    #[test]
    fn twist_domain_distinguishes_structures() {
        let g = 3;
        let d = simplify_isotopy(build_diagram(&gd(g, &[1, 2])).unwrap());
        let census = enumerate_level(&d, 1).unwrap();
        let mut measures = BTreeMap::new();
        measures.insert(IntersectionPoint::P(1, 1), ratio(1, 2));
        measures.insert(IntersectionPoint::L(1), ratio(-1, 2));
        let dom = PeriodicDomainData::new(ratio(1, 1), 0, measures).unwrap();

        let mut at_p = Vec::new();
        let mut at_l = Vec::new();
        for e in &census.entries {
            let v = chern_eval(&dom, &e.generator).unwrap();
            match e.generator.coord(1) {
                Some(IntersectionPoint::P(_, _)) => at_p.push(v),
                _ => at_l.push(v),
            }
        }
        // Constant on each structure, and the two structures differ.
        assert!(at_p.iter().all(|&v| v == at_p[0]));
        assert!(at_l.iter().all(|&v| v == at_l[0]));
        let diff = at_p[0] - at_l[0];
        assert_ne!(diff, 0);
        assert_eq!(diff % 2, 0);
    }

    #[test]
    fn non_integral_evaluation_is_an_error() {
        let mut measures = BTreeMap::new();
        measures.insert(IntersectionPoint::L(1), ratio(1, 4));
        let dom = PeriodicDomainData::new(Rational64::zero(), 0, measures).unwrap();
        let gen = generator_with_slot1(3, Side::A, IntersectionPoint::L(1));
        assert!(matches!(
            chern_eval(&dom, &gen),
            Err(Error::NonIntegralEvaluation { .. })
        ));
    }

    #[test]
    fn measures_must_be_quarter_integral() {
        let mut measures = BTreeMap::new();
        measures.insert(IntersectionPoint::L(1), ratio(1, 3));
        assert!(PeriodicDomainData::new(Rational64::zero(), 0, measures).is_err());
    }

    #[test]
    fn partition_same_sign_buckets() {
        let d = simplify_isotopy(build_diagram(&gd(3, &[2, 2])).unwrap());
        let census = enumerate_level(&d, 1).unwrap();
        let parts = partition(&d, &census).unwrap();
        assert_eq!(parts.len(), 4);
        for (i, j) in [(1, 1), (1, 2), (2, 1)] {
            let b = &parts[&SpinCLabel::Indexed(i, j)];
            assert_eq!((b.pairs_total, b.pairs_fake, b.pairs_essential), (1, 0, 1));
        }
        let dist = &parts[&SpinCLabel::Distinguished];
        assert_eq!(
            (dist.pairs_total, dist.pairs_fake, dist.pairs_essential),
            (4, 1, 3)
        );
    }

    #[test]
    fn partition_sandwich_buckets() {
        let d = simplify_isotopy(build_diagram(&gd(3, &[1, 1, 1])).unwrap());
        let census = enumerate_level(&d, 1).unwrap();
        let parts = partition(&d, &census).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&SpinCLabel::Indexed(1, 1)].pairs_essential, 1);
        assert_eq!(parts[&SpinCLabel::Distinguished].pairs_essential, 3);
    }

    #[test]
    fn partition_aggregate_for_other_cases() {
        let d = build_diagram(&gd(3, &[1, -1])).unwrap();
        let census = enumerate_level(&d, 1).unwrap();
        let parts = partition(&d, &census).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&SpinCLabel::Aggregate(1)].pairs_essential, 5);
    }

    #[test]
    fn partition_requires_simplification() {
        let d = build_diagram(&gd(3, &[1, 1])).unwrap();
        let census = enumerate_level(&d, 1).unwrap();
        assert_eq!(partition(&d, &census).unwrap_err(), Error::UnsupportedCase);
    }

    #[test]
    fn euler_values_sum_to_the_lefschetz_number() {
        // Same-sign word at genus 4 with mn = 6: five +1 buckets plus
        // the distinguished 3-2g = -5, summing to 2-2g+mn = 0.
        let w = gd(4, &[2, 3]);
        let d = simplify_isotopy(build_diagram(&w).unwrap());
        let census = enumerate_level(&d, 2).unwrap();
        let parts = partition(&d, &census).unwrap();
        let l = lefschetz(&w).unwrap();
        assert_eq!(l, BigInt::from(0));
        let chis = euler_per_structure(&parts, &l);
        assert_eq!(chis[&SpinCLabel::Distinguished], BigInt::from(-5));
        let sum: BigInt = chis.values().sum();
        assert_eq!(sum, l);

        let w = gd(3, &[1, 1, 1]);
        let d = simplify_isotopy(build_diagram(&w).unwrap());
        let parts = partition(&d, &enumerate_level(&d, 1).unwrap()).unwrap();
        let l = lefschetz(&w).unwrap();
        let chis = euler_per_structure(&parts, &l);
        assert_eq!(chis[&SpinCLabel::Indexed(1, 1)], BigInt::one());
        assert_eq!(chis[&SpinCLabel::Distinguished], BigInt::from(-3));
        assert_eq!(chis.values().sum::<BigInt>(), BigInt::from(-2));
    }

    #[test]
    fn aggregate_bucket_takes_the_whole_total() {
        let d = build_diagram(&gd(3, &[5])).unwrap();
        let parts = partition(&d, &enumerate_level(&d, 1).unwrap()).unwrap();
        let l = BigInt::from(-4);
        let chis = euler_per_structure(&parts, &l);
        assert_eq!(chis[&SpinCLabel::Aggregate(1)], l);
    }

    #[test]
    fn evaluation_is_additive_in_the_domain() {
        let g = 3;
        let d = build_diagram(&gd(g, &[1, -1])).unwrap();
        let census = enumerate_level(&d, 1).unwrap();
        let d1 = fiber_domain(g, &[(1, 1)]);
        let mut measures = BTreeMap::new();
        measures.insert(IntersectionPoint::P(1, 1), ratio(5, 4));
        measures.insert(IntersectionPoint::L(3), ratio(-3, 4));
        let d2 = PeriodicDomainData::new(ratio(7, 2), 2, measures).unwrap();
        let combined = d1.combined(&d2);
        for e in &census.entries {
            assert_eq!(
                combined.eval_rational(&e.generator),
                d1.eval_rational(&e.generator) + d2.eval_rational(&e.generator)
            );
        }
    }
}
