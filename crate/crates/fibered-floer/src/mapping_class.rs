//! Exact integer algebra of Dehn-twist words.
//!
//! A mapping class is given as a word in powered Dehn twists on a closed
//! surface of genus `g >= 3`. The supported letters are the standard
//! transverse pair `gamma`, `delta` in one handle, and the standard
//! disjoint family `gamma_1, ..., gamma_g` (one per handle). This module
//! classifies a word into the family its rank computation belongs to,
//! computes the induced action on first homology as a 2x2 unipotent block
//! over arbitrary-precision integers, and derives Lefschetz numbers,
//! symmetric-power Lefschetz numbers and the per-level Turaev torsion
//! from that block.
//!
//! Everything here is pure: values in, values out, no shared state.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::SpinCLevel;

/// A simple closed curve a twist can be performed along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Curve {
    /// The distinguished non-separating curve of the transverse pair.
    Gamma,
    /// The curve meeting `Gamma` transversely in one point.
    Delta,
    /// Member `i` of the standard disjoint family, `1 <= i <= g`.
    GammaI(u32),
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Gamma => write!(f, "g"),
            Curve::Delta => write!(f, "d"),
            Curve::GammaI(i) => write!(f, "g{i}"),
        }
    }
}

/// A powered Dehn twist. Positive powers are right-handed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DehnTwist {
    pub curve: Curve,
    pub power: i64,
}

impl DehnTwist {
    pub fn new(curve: Curve, power: i64) -> Result<Self> {
        if power == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(DehnTwist { curve, power })
    }
}

impl fmt::Display for DehnTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.curve)
        } else {
            write!(f, "{}^{}", self.curve, self.power)
        }
    }
}

/// A twist word in normal form: adjacent twists along the same curve are
/// merged and no merged power is zero. Composition order is left to
/// right, matching the order the word is written in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistWord {
    genus: u32,
    twists: Vec<DehnTwist>,
}

impl TwistWord {
    /// Builds a word over a genus-`g` surface, normalizing as it goes.
    pub fn new(genus: u32, twists: Vec<DehnTwist>) -> Result<Self> {
        if genus <= 2 {
            return Err(Error::GenusTooSmall { genus });
        }
        let mut normal: Vec<DehnTwist> = Vec::with_capacity(twists.len());
        for t in twists {
            if t.power == 0 {
                return Err(Error::ZeroExponent);
            }
            if let Curve::GammaI(i) = t.curve {
                if i == 0 || i > genus {
                    return Err(Error::CurveIndexOutOfRange { index: i, genus });
                }
            }
            match normal.last_mut() {
                Some(last) if last.curve == t.curve => {
                    last.power = last.power.checked_add(t.power).ok_or(Error::TooLarge {
                        context: "merged twist power",
                    })?;
                    if last.power == 0 {
                        return Err(Error::ZeroExponent);
                    }
                }
                _ => normal.push(t),
            }
        }
        Ok(TwistWord {
            genus,
            twists: normal,
        })
    }

    /// The identity mapping class (empty word).
    pub fn identity(genus: u32) -> Result<Self> {
        TwistWord::new(genus, Vec::new())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn twists(&self) -> &[DehnTwist] {
        &self.twists
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// True when every letter lies in the transverse pair (this includes
    /// the empty word).
    pub fn uses_only_pair(&self) -> bool {
        self.twists
            .iter()
            .all(|t| matches!(t.curve, Curve::Gamma | Curve::Delta))
    }
}

impl fmt::Display for TwistWord {
    /// Renders the word in the grammar the CLI parser accepts, e.g.
    /// `g^2 d^-3`; parsing the rendered form recovers the word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Which of the supported twist families the word belongs to.
///
/// Every variant but `Unsupported` corresponds to a family whose rank the
/// pipeline can compute; parameter sign constraints are part of the tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CaseClass {
    /// Empty word: the product manifold.
    Product,
    /// All twists along one curve (any supported curve).
    Single(i64),
    /// Twists along distinct members of the standard disjoint family.
    Disjoint(Vec<(u32, i64)>),
    /// `gamma^m delta^n` with `m*n < 0`.
    Opp { m: i64, n: i64 },
    /// `gamma^m delta^n` with `m*n > 0`.
    Same { m: i64, n: i64 },
    /// `gamma^m1 delta^n1 gamma^m2` with all powers positive.
    Sandwich { m1: i64, n1: i64, m2: i64 },
    /// `gamma^m1 delta^n1 ... gamma^mk delta^nk` with every `m_i * n_j < 0`.
    Alternating(Vec<(i64, i64)>),
    /// Anything else; the pipeline refuses these.
    Unsupported,
}

impl CaseClass {
    pub fn tag(&self) -> &'static str {
        match self {
            CaseClass::Product => "PRODUCT",
            CaseClass::Single(_) => "SINGLE",
            CaseClass::Disjoint(_) => "DISJOINT",
            CaseClass::Opp { .. } => "OPP",
            CaseClass::Same { .. } => "SAME",
            CaseClass::Sandwich { .. } => "SANDWICH",
            CaseClass::Alternating(_) => "ALTERNATING",
            CaseClass::Unsupported => "UNSUPPORTED",
        }
    }

    pub fn is_supported(&self) -> bool {
        !matches!(self, CaseClass::Unsupported)
    }
}

/// Classifies a normal-form word into its case.
///
/// Precedence: empty word, then single-curve, then distinct disjoint
/// standard curves, then the transverse-pair shapes. Two-letter words
/// must be written gamma-first; the delta-first form is not one of the
/// covered families and classifies as `Unsupported`.
pub fn classify(word: &TwistWord) -> CaseClass {
    let tw = word.twists();
    if tw.is_empty() {
        return CaseClass::Product;
    }
    if tw.len() == 1 {
        return CaseClass::Single(tw[0].power);
    }
    // Normalization merges adjacent same-curve twists, so a multi-letter
    // single-curve word cannot occur here.
    if tw.iter().all(|t| matches!(t.curve, Curve::GammaI(_))) {
        let mut seen = std::collections::BTreeSet::new();
        let mut list = Vec::with_capacity(tw.len());
        for t in tw {
            let Curve::GammaI(i) = t.curve else {
                unreachable!()
            };
            if !seen.insert(i) {
                return CaseClass::Unsupported;
            }
            list.push((i, t.power));
        }
        return CaseClass::Disjoint(list);
    }
    if !word.uses_only_pair() {
        return CaseClass::Unsupported;
    }
    if tw.len() == 2 && tw[0].curve == Curve::Gamma && tw[1].curve == Curve::Delta {
        let (m, n) = (tw[0].power, tw[1].power);
        return if (m > 0) != (n > 0) {
            CaseClass::Opp { m, n }
        } else {
            CaseClass::Same { m, n }
        };
    }
    if tw.len() == 3
        && tw[0].curve == Curve::Gamma
        && tw[1].curve == Curve::Delta
        && tw[2].curve == Curve::Gamma
        && tw.iter().all(|t| t.power > 0)
    {
        return CaseClass::Sandwich {
            m1: tw[0].power,
            n1: tw[1].power,
            m2: tw[2].power,
        };
    }
    // Strictly alternating gamma/delta in complete pairs, gammas all one
    // sign and deltas all the other.
    if tw.len().is_multiple_of(2) {
        let shape_ok = tw.iter().enumerate().all(|(i, t)| {
            t.curve
                == if i % 2 == 0 {
                    Curve::Gamma
                } else {
                    Curve::Delta
                }
        });
        if shape_ok {
            let gammas_pos = tw[0].power > 0;
            let signs_ok = tw.iter().enumerate().all(|(i, t)| {
                if i % 2 == 0 {
                    (t.power > 0) == gammas_pos
                } else {
                    (t.power > 0) != gammas_pos
                }
            });
            if signs_ok {
                let pairs = tw.chunks(2).map(|c| (c[0].power, c[1].power)).collect();
                return CaseClass::Alternating(pairs);
            }
        }
    }
    CaseClass::Unsupported
}

/// A 2x2 integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Transvection of `t_gamma^m` on the distinguished handle pair.
    pub fn gamma_twist(m: i64) -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::from(m),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Transvection of `t_delta^n` on the distinguished handle pair.
    pub fn delta_twist(n: i64) -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::from(-n),
            d: BigInt::one(),
        }
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }
}

/// The induced map on first homology of the fiber: a possibly nontrivial
/// 2x2 block on the distinguished handle pair plus an identity of rank
/// `2g - 2` on the remaining handles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Action {
    pub block: Mat2,
    pub trivial_rank: u32,
}

/// Action on first homology for a word in the transverse pair.
///
/// The block is the ordered product of `[[1, m], [0, 1]]` for each
/// `t_gamma^m` and `[[1, 0], [-n, 1]]` for each `t_delta^n`. Words using
/// the disjoint family act on several handle blocks at once and are
/// rejected here; their Lefschetz number is handled in [`lefschetz`]
/// directly.
pub fn h1_action(word: &TwistWord) -> Result<H1Action> {
    if !word.uses_only_pair() {
        return Err(Error::UnsupportedCurve);
    }
    let block = pair_block(word, false);
    debug_assert!(block.det().is_one());
    Ok(H1Action {
        block,
        trivial_rank: 2 * word.genus() - 2,
    })
}

fn pair_block(word: &TwistWord, absolute: bool) -> Mat2 {
    let mut acc = Mat2::identity();
    for t in word.twists() {
        let power = if absolute { t.power.abs() } else { t.power };
        let factor = match t.curve {
            Curve::Gamma => Mat2::gamma_twist(power),
            Curve::Delta => Mat2::delta_twist(if absolute { -power } else { power }),
            Curve::GammaI(_) => unreachable!("caller checks the word uses only the pair"),
        };
        acc = acc.mul(&factor);
    }
    acc
}

/// Trace of the full action on first homology of the fiber.
fn h1_trace(word: &TwistWord) -> Result<BigInt> {
    let g = BigInt::from(word.genus());
    if word.uses_only_pair() {
        Ok(h1_action(word)?.block.trace() + 2 * &g - 2)
    } else {
        // Disjoint standard curves: one unipotent (trace 2) block per
        // touched handle, identity elsewhere.
        Ok(2 * g)
    }
}

/// Lefschetz number of the word's mapping class: the alternating sum of
/// homology traces, `1 - tr(H_1) + 1`. For transverse-pair words this is
/// `4 - 2g - tr(block)`; for disjoint-family words it is `2 - 2g`.
pub fn lefschetz(word: &TwistWord) -> Result<BigInt> {
    if !classify(word).is_supported() {
        return Err(Error::UnsupportedMappingClass);
    }
    Ok(BigInt::from(2) - h1_trace(word)?)
}

/// Trace of the ordered product of `[[1, |m_i|], [0, 1]]` and
/// `[[1, 0], [|n_i|, 1]]` factors. Always at least 2; it counts the
/// intersections the twisted curve makes on the distinguished slot.
pub fn abs_trace(word: &TwistWord) -> Result<BigInt> {
    if !word.uses_only_pair() {
        return Err(Error::UnsupportedCurve);
    }
    Ok(pair_block(word, true).trace())
}

/// Lefschetz number of the induced map on the n-th symmetric product of
/// the fiber: the degree-`n` coefficient of `det(I - tA) / (1-t)^2` for
/// `A` the full first-homology action.
///
/// With `A = block ⊕ id` the quotient collapses to the polynomial
/// `(1 - tr(block) t + t^2) (1-t)^(2g-4)`, which is what gets expanded
/// here; disjoint-family words contribute trace-2 blocks and reduce to
/// the same shape.
pub fn symmetric_lefschetz(word: &TwistWord, n: u64) -> Result<BigInt> {
    if !classify(word).is_supported() {
        return Err(Error::UnsupportedMappingClass);
    }
    let block_trace = if word.uses_only_pair() {
        h1_action(word)?.block.trace()
    } else {
        BigInt::from(2)
    };
    let e = u64::from(2 * word.genus() - 4);
    let signed_binom = |j: u64| -> BigInt {
        let b = crate::binomial(e, j);
        if j.is_multiple_of(2) {
            b
        } else {
            -b
        }
    };
    let mut coeff = signed_binom(n);
    if n >= 1 {
        coeff -= block_trace * signed_binom(n - 1);
    }
    if n >= 2 {
        coeff += signed_binom(n - 2);
    }
    Ok(coeff)
}

/// Total Turaev torsion of the mapping torus over the spin^c level `k`,
/// which equals the symmetric-power Lefschetz number `L(S^(g-1-k) phi)`.
/// At `k = g-2` this is the plain Lefschetz number.
pub fn turaev_torsion_level(word: &TwistWord, k: SpinCLevel) -> Result<BigInt> {
    let g = word.genus();
    if k >= i64::from(g) {
        return Err(Error::LevelOutOfRange { level: k, genus: g });
    }
    let n = i64::from(g) - 1 - k;
    debug_assert!(n >= 0);
    symmetric_lefschetz(word, n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(genus: u32, twists: &[(Curve, i64)]) -> TwistWord {
        let twists = twists
            .iter()
            .map(|&(c, p)| DehnTwist::new(c, p).unwrap())
            .collect();
        TwistWord::new(genus, twists).unwrap()
    }

    fn gd(genus: u32, powers: &[i64]) -> TwistWord {
        let twists: Vec<_> = powers
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let c = if i % 2 == 0 {
                    Curve::Gamma
                } else {
                    Curve::Delta
                };
                (c, p)
            })
            .collect();
        word(genus, &twists)
    }

    #[test]
    fn construction_rejects_small_genus_and_zero_powers() {
        assert_eq!(
            TwistWord::new(2, vec![]).unwrap_err(),
            Error::GenusTooSmall { genus: 2 }
        );
        assert!(DehnTwist::new(Curve::Gamma, 0).is_err());
        // Merging t_g t_g^-1 collapses to a zero power.
        let twists = vec![
            DehnTwist::new(Curve::Gamma, 1).unwrap(),
            DehnTwist::new(Curve::Gamma, -1).unwrap(),
        ];
        assert_eq!(TwistWord::new(3, twists).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn construction_merges_adjacent_twists() {
        let w = word(3, &[(Curve::Gamma, 1), (Curve::Gamma, 1)]);
        assert_eq!(w.twists().len(), 1);
        assert_eq!(classify(&w), CaseClass::Single(2));
    }

    #[test]
    fn disjoint_index_bounds_checked() {
        let t = DehnTwist::new(Curve::GammaI(4), 1).unwrap();
        assert_eq!(
            TwistWord::new(3, vec![t]).unwrap_err(),
            Error::CurveIndexOutOfRange { index: 4, genus: 3 }
        );
    }

    #[test]
    fn classify_covers_the_families() {
        assert_eq!(classify(&word(3, &[])), CaseClass::Product);
        assert_eq!(classify(&gd(3, &[2, -3])), CaseClass::Opp { m: 2, n: -3 });
        assert_eq!(classify(&gd(3, &[1, 2])), CaseClass::Same { m: 1, n: 2 });
        assert_eq!(
            classify(&gd(3, &[-2, -1])),
            CaseClass::Same { m: -2, n: -1 }
        );
        assert_eq!(
            classify(&gd(4, &[1, 1, 1])),
            CaseClass::Sandwich {
                m1: 1,
                n1: 1,
                m2: 1
            }
        );
        assert_eq!(
            classify(&gd(3, &[1, -1, 1, -1])),
            CaseClass::Alternating(vec![(1, -1), (1, -1)])
        );
        assert_eq!(
            classify(&word(4, &[(Curve::GammaI(1), 2), (Curve::GammaI(3), -1)])),
            CaseClass::Disjoint(vec![(1, 2), (3, -1)])
        );
        assert_eq!(
            classify(&word(3, &[(Curve::Delta, 5)])),
            CaseClass::Single(5)
        );
    }

    #[test]
    fn classify_rejects_off_family_words() {
        // Mixed-sign sandwich shape.
        assert_eq!(classify(&gd(3, &[1, 1, -1])), CaseClass::Unsupported);
        assert_eq!(classify(&gd(3, &[2, -1, 1])), CaseClass::Unsupported);
        // Delta-first two-letter word.
        let w = word(3, &[(Curve::Delta, 1), (Curve::Gamma, 1)]);
        assert_eq!(classify(&w), CaseClass::Unsupported);
        // Alternating with a same-sign delta.
        assert_eq!(classify(&gd(3, &[1, -1, 1, 1])), CaseClass::Unsupported);
        // Repeated disjoint curve, non-adjacent.
        let w = word(
            3,
            &[
                (Curve::GammaI(1), 1),
                (Curve::GammaI(2), 1),
                (Curve::GammaI(1), 1),
            ],
        );
        assert_eq!(classify(&w), CaseClass::Unsupported);
        // Pair letters mixed with the disjoint family.
        let w = word(3, &[(Curve::Gamma, 1), (Curve::GammaI(2), 1)]);
        assert_eq!(classify(&w), CaseClass::Unsupported);
    }

    #[test]
    fn h1_action_matches_the_transvections() {
        let w = word(3, &[(Curve::Gamma, 4)]);
        let act = h1_action(&w).unwrap();
        assert_eq!(act.block, Mat2::gamma_twist(4));
        assert_eq!(act.trivial_rank, 4);

        let id = h1_action(&word(5, &[])).unwrap();
        assert_eq!(id.block, Mat2::identity());

        // Frozen from a direct 2x2 product: (gd^-1)^2 has trace 7.
        let act = h1_action(&gd(3, &[1, -1, 1, -1])).unwrap();
        assert_eq!(act.block.trace(), BigInt::from(7));
        assert!(act.block.det().is_one());

        let w = word(3, &[(Curve::GammaI(1), 2)]);
        assert_eq!(h1_action(&w).unwrap_err(), Error::UnsupportedCurve);
    }

    #[test]
    fn lefschetz_values() {
        assert_eq!(
            lefschetz(&word(3, &[(Curve::Gamma, 5)])).unwrap(),
            BigInt::from(-4)
        );
        assert_eq!(lefschetz(&word(3, &[])).unwrap(), BigInt::from(-4));
        assert_eq!(lefschetz(&gd(3, &[2, -3])).unwrap(), BigInt::from(-10));
        let w = word(4, &[(Curve::GammaI(1), 2), (Curve::GammaI(3), -1)]);
        assert_eq!(lefschetz(&w).unwrap(), BigInt::from(-6));
        assert_eq!(
            lefschetz(&gd(3, &[1, 1, -1])).unwrap_err(),
            Error::UnsupportedMappingClass
        );
    }

    #[test]
    fn abs_trace_values() {
        assert_eq!(abs_trace(&word(3, &[])).unwrap(), BigInt::from(2));
        for (m, n) in [(1, -2), (3, 4), (-2, 5)] {
            assert_eq!(
                abs_trace(&gd(3, &[m, n])).unwrap(),
                BigInt::from(2 + (m * n).abs())
            );
        }
        assert_eq!(abs_trace(&gd(3, &[1, -1, 1, -1])).unwrap(), BigInt::from(7));
    }

    #[test]
    fn symmetric_lefschetz_small_cases() {
        let id3 = word(3, &[]);
        assert_eq!(symmetric_lefschetz(&id3, 0).unwrap(), BigInt::one());
        assert_eq!(symmetric_lefschetz(&id3, 2).unwrap(), BigInt::from(6));
        for w in [
            gd(3, &[2, -3]),
            gd(4, &[1, 2]),
            word(3, &[(Curve::Gamma, 5)]),
        ] {
            assert_eq!(symmetric_lefschetz(&w, 0).unwrap(), BigInt::one());
            assert_eq!(symmetric_lefschetz(&w, 1).unwrap(), lefschetz(&w).unwrap());
        }
    }

    #[test]
    fn torsion_levels() {
        let g3 = word(3, &[(Curve::Gamma, 2)]);
        assert_eq!(turaev_torsion_level(&g3, 1).unwrap(), BigInt::from(-4));
        assert_eq!(turaev_torsion_level(&g3, 2).unwrap(), BigInt::one());
        assert_eq!(
            turaev_torsion_level(&word(3, &[]), 0).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            turaev_torsion_level(&g3, 3).unwrap_err(),
            Error::LevelOutOfRange { level: 3, genus: 3 }
        );
    }

    #[test]
    fn word_display_is_the_cli_grammar() {
        let w = word(3, &[(Curve::Gamma, 2), (Curve::Delta, -3)]);
        assert_eq!(w.to_string(), "g^2 d^-3");
        let w = word(4, &[(Curve::GammaI(1), 1), (Curve::GammaI(3), -2)]);
        assert_eq!(w.to_string(), "g1 g3^-2");
        assert_eq!(word(3, &[]).to_string(), "");
    }
}
