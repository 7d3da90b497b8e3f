//! Brute-force reference implementations used only by tests.
//!
//! Everything here recomputes quantities of the main crate along a
//! deliberately naive route — unit-power matrix factors multiplied one at
//! a time, full cartesian products over slot point sets, term-by-term
//! series long division — sharing the main crate's data types but none of
//! its computational code.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use fibered_floer::heegaard_model::{CaseDiagram, IntersectionPoint};
use fibered_floer::mapping_class::{Curve, TwistWord};

/// A recorded main-vs-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub quantity: String,
    pub main: BigInt,
    pub oracle: BigInt,
    pub agreement: bool,
}

impl OracleReport {
    pub fn new(quantity: impl Into<String>, main: BigInt, oracle: BigInt) -> Self {
        let agreement = main == oracle;
        OracleReport {
            quantity: quantity.into(),
            main,
            oracle,
            agreement,
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: main {} vs oracle {} ({})",
            self.quantity,
            self.main,
            self.oracle,
            if self.agreement { "agree" } else { "DISAGREE" }
        )
    }
}

/// 2x2 matrix as rows; no shortcuts anywhere.
pub type Block = [[BigInt; 2]; 2];

fn identity() -> Block {
    [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ]
}

fn mul(x: &Block, y: &Block) -> Block {
    let mut out = [
        [BigInt::zero(), BigInt::zero()],
        [BigInt::zero(), BigInt::zero()],
    ];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
        }
    }
    out
}

/// The homology block of a transverse-pair word, multiplied out one unit
/// twist at a time. With `use_abs` every factor takes the power's
/// absolute value and the delta factor's sign is flipped, matching the
/// all-positive-entry product.
///
/// Panics on words outside the transverse pair; the oracle has no notion
/// of the disjoint family.
pub fn brute_block(word: &TwistWord, use_abs: bool) -> Block {
    let mut acc = identity();
    for t in word.twists() {
        let steps = t.power.unsigned_abs();
        let unit: Block = match t.curve {
            // One step of t_gamma^(+-1) is [[1, +-1], [0, 1]].
            Curve::Gamma => {
                let e = BigInt::from(if use_abs || t.power > 0 { 1 } else { -1 });
                [[BigInt::one(), e], [BigInt::zero(), BigInt::one()]]
            }
            // One step of t_delta^(+-1) is [[1, 0], [-+1, 1]]; the
            // absolute product flips that sign.
            Curve::Delta => {
                let e = BigInt::from(if use_abs || t.power < 0 { 1 } else { -1 });
                [[BigInt::one(), BigInt::zero()], [e, BigInt::one()]]
            }
            Curve::GammaI(_) => panic!("oracle handles only transverse-pair words"),
        };
        for _ in 0..steps {
            acc = mul(&acc, &unit);
        }
    }
    acc
}

/// Trace of [`brute_block`].
pub fn brute_trace(word: &TwistWord, use_abs: bool) -> BigInt {
    let b = brute_block(word, use_abs);
    &b[0][0] + &b[1][1]
}

/// Census counts found by exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BruteCensus {
    pub pairs_total: u64,
    pub pairs_fake: u64,
    pub pairs_essential: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The cartesian product would exceed the tuple budget.
    ExplosionGuard { tuples: u128 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::ExplosionGuard { tuples } => {
                write!(f, "refusing to enumerate {tuples} tuples (limit 10^7)")
            }
        }
    }
}

impl std::error::Error for OracleError {}

const TUPLE_LIMIT: u128 = 10_000_000;

/// Counts the level-`k` generators by walking the full cartesian product
/// of the slot point sets on both sides and filtering by level. Fakeness
/// is read off the tail slot. No closed forms anywhere.
pub fn brute_enumerate(d: &CaseDiagram, k: i64) -> Result<BruteCensus, OracleError> {
    let g = d.genus();
    let mut a = count_side(d, (1..=2 * g - 1).collect(), 2 * g - 1, k)?;
    let b = count_side(d, (1..=2 * g - 2).chain([2 * g]).collect(), 2 * g, k)?;
    assert_eq!(a, b, "the two sides must produce identical counts");
    a.pairs_essential = a.pairs_total - a.pairs_fake;
    Ok(a)
}

fn count_side(
    d: &CaseDiagram,
    slots: Vec<u32>,
    tail_slot: u32,
    k: i64,
) -> Result<BruteCensus, OracleError> {
    let options: Vec<Vec<IntersectionPoint>> = slots
        .iter()
        .map(|s| {
            d.slots()
                .get(s)
                .expect("slot exists")
                .iter()
                .copied()
                .collect()
        })
        .collect();
    let mut tuples: u128 = 1;
    for o in &options {
        tuples = tuples.saturating_mul(o.len() as u128);
    }
    if tuples > TUPLE_LIMIT {
        return Err(OracleError::ExplosionGuard { tuples });
    }

    let g = i64::from(d.genus());
    let tail_pos = slots
        .iter()
        .position(|&s| s == tail_slot)
        .expect("tail slot listed");
    let mut census = BruteCensus::default();
    // Odometer over the product; every tuple is visited.
    let mut idx = vec![0usize; options.len()];
    loop {
        let mut replacements = 0i64;
        for (pos, &i) in idx.iter().enumerate() {
            match options[pos][i] {
                IntersectionPoint::R(_) | IntersectionPoint::P(_, _) => replacements += 1,
                _ => {}
            }
        }
        if g - 1 - replacements == k {
            census.pairs_total += 1;
            if matches!(options[tail_pos][idx[tail_pos]], IntersectionPoint::R(_)) {
                census.pairs_fake += 1;
            }
        }
        // Advance.
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(census);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Coefficients `0..=up_to` of `det(I - tA) / (1-t)^2` for
/// `A = block ⊕ id_(2g-2)`, by polynomial multiplication one `(1-t)`
/// factor at a time followed by term-by-term series long division.
pub fn series_coefficients(block: &Block, g: u32, up_to: usize) -> Vec<BigInt> {
    // det(I - t*block) = (1 - a t)(1 - d t) - (b t)(c t), built as
    // polynomials.
    let lin = |x: &BigInt| vec![BigInt::one(), -x.clone()];
    let quad_pos = poly_mul(&lin(&block[0][0]), &lin(&block[1][1]));
    let cross = poly_mul(
        &[BigInt::zero(), block[0][1].clone()],
        &[BigInt::zero(), block[1][0].clone()],
    );
    let mut det = poly_sub(&quad_pos, &cross);
    for _ in 0..(2 * g - 2) {
        det = poly_mul(&det, &[BigInt::one(), -BigInt::one()]);
    }
    // Divide by (1 - t)^2 = 1 - 2t + t^2: q_n = p_n + 2 q_(n-1) - q_(n-2).
    let p = |n: usize| det.get(n).cloned().unwrap_or_else(BigInt::zero);
    let mut q: Vec<BigInt> = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let mut c = p(n);
        if n >= 1 {
            c += 2 * q[n - 1].clone();
        }
        if n >= 2 {
            c -= q[n - 2].clone();
        }
        q.push(c);
    }
    q
}

fn poly_mul(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn poly_sub(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| {
            x.get(i).cloned().unwrap_or_else(BigInt::zero)
                - y.get(i).cloned().unwrap_or_else(BigInt::zero)
        })
        .collect()
}
