use num_bigint::BigInt;
use num_rational::Rational64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library.
///
/// Ranks are only claimed when the sandwich bounds agree, so
/// [`Error::InconclusiveSandwich`] doubles as the internal-consistency
/// alarm: it fires on words outside the supported families and on any
/// census that disagrees with its Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus {genus} too small: the diagram construction needs genus >= 3")]
    GenusTooSmall { genus: u32 },

    #[error("twist power must be nonzero (merging adjacent twists may not produce zero)")]
    ZeroExponent,

    #[error("curve index {index} out of range for genus {genus} (expected 1..={genus})")]
    CurveIndexOutOfRange { index: u32, genus: u32 },

    #[error("operation is only defined for words in the standard transverse pair")]
    UnsupportedCurve,

    #[error("mapping class is outside the supported families of twist words")]
    UnsupportedMappingClass,

    #[error("spin^c level {level} out of range for genus {genus}: S_k is empty for k >= g")]
    LevelOutOfRange { level: i64, genus: u32 },

    #[error("spin^c level {level} unsupported for twisted words (only k = g-2)")]
    UnsupportedLevel { level: i64 },

    #[error("slot {slot} out of range (expected 1..={max})")]
    SlotOutOfRange { slot: u32, max: u32 },

    #[error("Chern-class evaluation is not an integer: {value}")]
    NonIntegralEvaluation { value: Rational64 },

    #[error("spin^c partition needs the simplified diagram for this case")]
    UnsupportedCase,

    #[error(
        "sandwich argument inconclusive: |chi| = {chi_abs} vs {essential_pairs} essential pairs"
    )]
    InconclusiveSandwich {
        chi_abs: BigInt,
        essential_pairs: u64,
    },

    #[error("no unperturbed rank is cited for this case")]
    NoCitedComparison,

    #[error("computed quantity exceeds representable size: {context}")]
    TooLarge { context: &'static str },
}
