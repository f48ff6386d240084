//! Closed forms and bounds, evaluated with integers only.

use num_bigint::BigUint;

use crate::error::{Result, TetraError};

/// Range of diameters a tetrahedron of perimeter `n` can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterBounds {
    pub n: u64,
    pub d_min: i64,
    pub d_max: i64,
}

impl DiameterBounds {
    pub fn is_empty(&self) -> bool {
        self.d_min > self.d_max
    }

    pub fn contains(&self, d: u64) -> bool {
        (d as i64) >= self.d_min && (d as i64) <= self.d_max
    }

    /// Iterates the admissible diameters (empty when the range is).
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        let lo = self.d_min.max(1);
        let hi = self.d_max;
        (lo..=hi).map(|d| d as u32)
    }
}

/// Range of the largest face perimeter at total perimeter `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacePerimeterBounds {
    pub n: u64,
    pub m_min: i64,
    pub m_max: i64,
}

/// `⌈n/6⌉ ≤ d ≤ ⌊(n−3)/3⌋`.
pub fn diameter_bounds(n: u64) -> DiameterBounds {
    let n_i = n as i64;
    DiameterBounds {
        n,
        d_min: n.div_ceil(6) as i64,
        d_max: (n_i - 3).div_euclid(3),
    }
}

/// `⌈n/2⌉ ≤ M ≤ ⌊(2n−3)/3⌋`.
pub fn face_perimeter_bounds(n: u64) -> FacePerimeterBounds {
    let n_i = n as i64;
    FacePerimeterBounds {
        n,
        m_min: n.div_ceil(2) as i64,
        m_max: (2 * n_i - 3).div_euclid(3),
    }
}

fn isqrt_of(v: BigUint) -> BigUint {
    v.sqrt()
}

fn to_u64(v: BigUint) -> u64 {
    u64::try_from(v).expect("quotient bounded by n")
}

/// Labelings fixed by a three-cycle: `⌊n/(3+√3)⌋` when 3 | n, else 0.
///
/// `n/(3+√3) = (3n − √(3n²))/6`.  With `s = ⌊√(3n²)⌋` and `√(3n²)`
/// irrational, `3n − √(3n²)` lies strictly between `3n−s−1` and `3n−s`, so
/// the floor is `⌊(3n−s−1)/6⌋`.
pub fn fix_three_cycle(n: u64) -> u64 {
    if n == 0 || n % 3 != 0 {
        return 0;
    }
    let big = BigUint::from(n);
    let s = isqrt_of(&big * &big * 3u32);
    to_u64((&big * 3u32 - s - 1u32) / 6u32)
}

/// Labelings fixed by a four-cycle: `⌊n/(4+4√2)⌋` when 4 | n,
/// `⌊(n+2+2√2)/(4+4√2)⌋` when n ≡ 2 (mod 4), else 0.
///
/// Rationalised these are `⌊(√(2n²) − n)/4⌋` and `⌊(√(2n²) − n + 2)/4⌋`;
/// since `√(2n²)` is irrational the floor of the square root can stand in
/// for it.
pub fn fix_four_cycle(n: u64) -> u64 {
    if n == 0 || n % 2 != 0 {
        return 0;
    }
    let big = BigUint::from(n);
    let s = isqrt_of(&big * &big * 2u32);
    let shift = if n % 4 == 0 { 0u32 } else { 2u32 };
    to_u64((s + shift - big) / 4u32)
}

/// Integer triangles of perimeter `n`: the nearest integer to `n²/48` for
/// even `n` and to `(n+3)²/48` for odd `n`.
pub fn triangle_count_perimeter(n: u64) -> u128 {
    let m = if n % 2 == 0 { n as u128 } else { n as u128 + 3 };
    // m² mod 48 never equals 24, so rounding has no ties.
    (m * m + 24) / 48
}

/// Integer triangles with largest side `d`: `⌊(d+1)²/4⌋`.
pub fn triangle_count_diameter(d: u64) -> u128 {
    let m = d as u128 + 1;
    m * m / 4
}

/// Periodic correction term `b_k` of the stable column formula.
pub fn stable_b(k: u64) -> u64 {
    if k == 0 {
        return 96;
    }
    match k % 12 {
        0 => 192,
        1 | 5 | 7 | 11 => 53,
        2 | 10 => 104,
        3 | 9 => 117,
        4 | 8 => 128,
        6 => 168,
        _ => unreachable!(),
    }
}

/// Predicted stable column value `(k⁴ + 42k² + b_k)/96`.
pub fn stable_a(k: u64) -> Result<u64> {
    let overflow = || TetraError::Overflow {
        context: "stable column formula",
    };
    let k = k as u128;
    let k2 = k.checked_mul(k).ok_or_else(overflow)?;
    let numerator = k2
        .checked_mul(k2)
        .and_then(|k4| k4.checked_add(42 * k2))
        .and_then(|v| v.checked_add(stable_b(k as u64) as u128))
        .ok_or_else(overflow)?;
    if numerator % 96 != 0 {
        return Err(TetraError::Integrity(format!(
            "stable column numerator {numerator} for k={k} is not divisible by 96"
        )));
    }
    u64::try_from(numerator / 96).map_err(|_| overflow())
}

/// How much weight a [`TopPrediction`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionBasis {
    /// Follows from a proved lemma.
    Proven,
    /// Matches computed values over a finite range only.
    Observed,
    /// Conjectured pattern; never treat as ground truth.
    Conjectural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopPrediction {
    pub value: u64,
    pub basis: PredictionBasis,
}

/// Known formulas for the sparse cells `n = 3d+3, 3d+4, 3d+5`.
///
/// `3d+3` gives `⌈d/2⌉` and `3d+4` gives `d−1` (both proven).  For `3d+5`
/// the values follow `3d−5` for `5 ≤ d ≤ 41` (observed) and `2d+15` for
/// `d ≥ 1111` (conjectural).  Anything else is `None`.
pub fn predicted_top_count(d: u64, n: u64) -> Option<TopPrediction> {
    if d == 0 {
        return None;
    }
    let proven = |value| TopPrediction {
        value,
        basis: PredictionBasis::Proven,
    };
    if n == 3 * d + 3 {
        Some(proven(d.div_ceil(2)))
    } else if n == 3 * d + 4 {
        Some(proven(d - 1))
    } else if n == 3 * d + 5 && (5..=41).contains(&d) {
        Some(TopPrediction {
            value: 3 * d - 5,
            basis: PredictionBasis::Observed,
        })
    } else if n == 3 * d + 5 && d >= 1111 {
        Some(TopPrediction {
            value: 2 * d + 15,
            basis: PredictionBasis::Conjectural,
        })
    } else {
        None
    }
}
