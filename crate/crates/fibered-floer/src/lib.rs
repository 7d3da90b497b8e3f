//! Perturbed Heegaard Floer ranks for mapping tori of Dehn-twist words.
//!
//! The supported mapping classes are words in Dehn twists along a standard
//! transverse pair of curves or along the standard disjoint family on a
//! closed surface of genus at least 3. For such a word the crate computes
//! the rank of the perturbed `HF^+` of its mapping torus in the
//! second-highest spin^c level `S_(g-2)`, reported as the rank of a free
//! module over the (opaque) Novikov coefficient ring.
//!
//! The pipeline:
//!
//! 1. [`mapping_class`] classifies the word and computes its homology
//!    action, Lefschetz numbers and per-level Turaev torsion exactly.
//! 2. [`heegaard_model`] builds the intersection-point model of the
//!    associated Heegaard diagram and applies the simplifying isotopy.
//! 3. [`generator_enum`] enumerates the Floer generators of a spin^c
//!    level and splits them into fake and essential pairs.
//! 4. [`spinc_partition`] partitions the level into individual spin^c
//!    structures where the case requires it and assigns per-structure
//!    Euler characteristics.
//! 5. [`rank_engine`] closes the argument: in every structure the rank is
//!    pinched between `|chi|` and the essential-pair count, and equality
//!    of the two bounds yields the rank.

pub mod error;
pub mod generator_enum;
pub mod heegaard_model;
pub mod mapping_class;
pub mod rank_engine;
pub mod spinc_partition;

pub use error::{Error, Result};
pub use generator_enum::{
    classify_fake, enumerate_level, spinc_degree, CensusEntry, Fakeness, Generator,
    GeneratorCensus, Side,
};
pub use heegaard_model::{
    build_diagram, intersection_count, simplify_isotopy, CaseDiagram, IntersectionPoint,
};
pub use mapping_class::{
    abs_trace, classify, h1_action, lefschetz, symmetric_lefschetz, turaev_torsion_level,
    CaseClass, Curve, DehnTwist, H1Action, Mat2, TwistWord,
};
pub use rank_engine::{
    compare_unperturbed, compute_rank, compute_rank_at_level, sandwich_rank, CheckRecord,
    ComparisonReport, RankResult, StructureRank,
};
pub use spinc_partition::{
    chern_eval, euler_per_structure, partition, PeriodicDomainData, SpinCLabel,
};

/// A spin^c level: the integer `k` with `<c_1(s), [fiber]> = 2k`.
pub type SpinCLevel = i64;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
