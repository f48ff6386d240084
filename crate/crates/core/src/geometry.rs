//! Validity predicates for integer edge labelings.
//!
//! A labeling stores the six side lengths in the order `⟨A,a,B,b,C,c⟩`.
//! Opposite edges are `(A,a)`, `(B,b)`, `(C,c)` and the four faces are
//! `(A,B,C)`, `(A,b,c)`, `(a,B,c)`, `(a,b,C)`.  With vertices numbered
//! 1..=4 the edges sit at `A={2,3}`, `a={1,4}`, `B={1,3}`, `b={2,4}`,
//! `C={1,2}`, `c={3,4}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Result, TetraError};

/// Largest diameter for which the fold test and the Cayley–Menger
/// expansion are evaluated in `i128`.
///
/// |P| ≤ 8d⁴ so P² ≤ 64d⁸, and H1·H2 ≤ 16d⁸.  At d = 30 000 that is about
/// 4.2e37, below i128::MAX ≈ 1.7e38.
pub const FAST_PATH_MAX_DIAMETER: u32 = 30_000;

pub const IDX_A: usize = 0;
pub const IDX_SMALL_A: usize = 1;
pub const IDX_B: usize = 2;
pub const IDX_SMALL_B: usize = 3;
pub const IDX_C: usize = 4;
pub const IDX_SMALL_C: usize = 5;

/// Six positive side lengths `⟨A,a,B,b,C,c⟩`.
///
/// The derived ordering is lexicographic in that component order, which is
/// the order used to pick canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabeling([u32; 6]);

#[allow(non_snake_case)]
impl EdgeLabeling {
    pub fn new(edges: [u32; 6]) -> Result<Self> {
        if edges.iter().any(|&e| e == 0) {
            return Err(TetraError::NonPositiveEdge(edges));
        }
        Ok(EdgeLabeling(edges))
    }

    /// Builds a labeling from the six values in `⟨A,a,B,b,C,c⟩` order.
    ///
    /// # Panics
    /// If any entry is zero.
    pub fn from_parts(A: u32, a: u32, B: u32, b: u32, C: u32, c: u32) -> Self {
        Self::new([A, a, B, b, C, c]).expect("edge lengths must be positive")
    }

    /// Skips the positivity check; callers in the enumeration loops
    /// construct entries that are ≥ 1 by loop bounds.
    #[inline]
    pub(crate) fn from_array_unchecked(edges: [u32; 6]) -> Self {
        debug_assert!(edges.iter().all(|&e| e > 0));
        EdgeLabeling(edges)
    }

    #[inline]
    pub fn edges(&self) -> [u32; 6] {
        self.0
    }

    #[inline]
    pub fn A(&self) -> u32 {
        self.0[IDX_A]
    }
    #[inline]
    pub fn a(&self) -> u32 {
        self.0[IDX_SMALL_A]
    }
    #[inline]
    pub fn B(&self) -> u32 {
        self.0[IDX_B]
    }
    #[inline]
    pub fn b(&self) -> u32 {
        self.0[IDX_SMALL_B]
    }
    #[inline]
    pub fn C(&self) -> u32 {
        self.0[IDX_C]
    }
    #[inline]
    pub fn c(&self) -> u32 {
        self.0[IDX_SMALL_C]
    }

    pub fn perimeter(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn diameter(&self) -> u32 {
        *self.0.iter().max().expect("six entries")
    }

    /// The four faces in the order `(A,B,C)`, `(A,b,c)`, `(a,B,c)`, `(a,b,C)`.
    pub fn faces(&self) -> [[u32; 3]; 4] {
        let [A, a, B, b, C, c] = self.0;
        [[A, B, C], [A, b, c], [a, B, c], [a, b, C]]
    }

    /// Multiplies every side by `k`.
    pub fn scaled(&self, k: u32) -> Option<Self> {
        let mut out = [0u32; 6];
        for (o, &e) in out.iter_mut().zip(self.0.iter()) {
            *o = e.checked_mul(k)?;
        }
        Self::new(out).ok()
    }
}

impl fmt::Display for EdgeLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [A, a, B, b, C, c] = self.0;
        write!(f, "<{A},{a},{B},{b},{C},{c}>")
    }
}

impl From<EdgeLabeling> for [u32; 6] {
    fn from(g: EdgeLabeling) -> Self {
        g.0
    }
}

/// Strict triangle inequality: the two smaller sides sum to more than the
/// largest.
#[inline]
pub fn is_triangle(x: u32, y: u32, z: u32) -> bool {
    let max = x.max(y).max(z) as u64;
    (x as u64) + (y as u64) + (z as u64) > 2 * max
}

/// Cleared-denominator terms of the fold inequality for the faces
/// `(A,B,C)` and `(A,b,c)` hinged on `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactFoldTerms {
    pub p_term: BigInt,
    pub h1: BigInt,
    pub h2: BigInt,
}

impl ExactFoldTerms {
    pub fn new(g: &EdgeLabeling) -> Self {
        let sq = |v: u32| {
            let v = BigInt::from(v);
            &v * &v
        };
        let [A2, a2, B2, b2, C2, c2] = g.0.map(sq);
        let k1: BigInt = &A2 + &B2 - &C2;
        let k2: BigInt = &A2 + &c2 - &b2;
        let p_term = BigInt::from(2) * &A2 * (&a2 - &B2 - &c2) + &k1 * &k2;
        let h1 = BigInt::from(4) * &A2 * &B2 - &k1 * &k1;
        let h2 = BigInt::from(4) * &A2 * &c2 - &k2 * &k2;
        ExactFoldTerms { p_term, h1, h2 }
    }

    pub fn holds(&self) -> bool {
        &self.p_term * &self.p_term < &self.h1 * &self.h2
    }
}

#[inline]
fn fold_condition_i128(e: &[u32; 6]) -> bool {
    let sq = |v: u32| (v as i128) * (v as i128);
    let [A2, a2, B2, b2, C2, c2] = e.map(sq);
    let k1 = A2 + B2 - C2;
    let k2 = A2 + c2 - b2;
    let p = 2 * A2 * (a2 - B2 - c2) + k1 * k2;
    let h1 = 4 * A2 * B2 - k1 * k1;
    let h2 = 4 * A2 * c2 - k2 * k2;
    if h1 <= 0 || h2 <= 0 {
        return false;
    }
    p * p < h1 * h2
}

/// Fold condition `P² < H1·H2` in exact integers.
///
/// Expects `(A,B,C)` and `(A,b,c)` to be triangles; returns false rather than
/// panicking when they are not.
pub fn satisfies_fold_condition(g: &EdgeLabeling) -> bool {
    if g.diameter() <= FAST_PATH_MAX_DIAMETER {
        fold_condition_i128(&g.0)
    } else {
        satisfies_fold_condition_bigint(g)
    }
}

/// Arbitrary-precision evaluation of the fold condition at any magnitude.
pub fn satisfies_fold_condition_bigint(g: &EdgeLabeling) -> bool {
    let t = ExactFoldTerms::new(g);
    if !t.h1.is_positive() || !t.h2.is_positive() {
        return false;
    }
    t.holds()
}

/// Closed-form expansion of the bordered 5×5 determinant
///
/// ```text
/// | 0   A²  C²  b²  1 |
/// | A²  0   B²  c²  1 |
/// | C²  B²  0   a²  1 |
/// | b²  c²  a²  0   1 |
/// | 1   1   1   1   0 |
/// ```
///
/// which equals 288·V² for a tetrahedron of volume V.  With S the sum of the
/// six squares, it is 2·[Σ over opposite pairs p·q·(S−2p−2q) − Σ over faces
/// of the product of the three squares].
pub fn cayley_menger_determinant(g: &EdgeLabeling) -> BigInt {
    let sq = g.0.map(|v| {
        let v = BigInt::from(v);
        &v * &v
    });
    let s: BigInt = sq.iter().sum();
    let mut acc = BigInt::zero();
    for pair in sq.chunks_exact(2) {
        acc += &pair[0] * &pair[1] * (&s - BigInt::from(2) * (&pair[0] + &pair[1]));
    }
    let [A2, a2, B2, b2, C2, c2] = &sq;
    acc -= A2 * B2 * C2 + A2 * b2 * c2 + a2 * B2 * c2 + a2 * b2 * C2;
    acc * 2
}

fn cayley_menger_i128(e: &[u32; 6]) -> i128 {
    let sq = e.map(|v| (v as i128) * (v as i128));
    let s: i128 = sq.iter().sum();
    let mut acc = 0i128;
    for pair in sq.chunks_exact(2) {
        acc += pair[0] * pair[1] * (s - 2 * (pair[0] + pair[1]));
    }
    let [A2, a2, B2, b2, C2, c2] = sq;
    acc -= A2 * B2 * C2 + A2 * b2 * c2 + a2 * B2 * c2 + a2 * b2 * C2;
    2 * acc
}

pub fn cayley_menger_positive(g: &EdgeLabeling) -> bool {
    if g.diameter() <= FAST_PATH_MAX_DIAMETER {
        cayley_menger_i128(&g.0) > 0
    } else {
        cayley_menger_determinant(g).is_positive()
    }
}

/// Faces `(A,B,C)` and `(A,b,c)` plus the fold condition.  The other two
/// faces follow from these.
#[inline]
pub fn is_valid_tetrahedron(g: &EdgeLabeling) -> bool {
    let [A, _, B, b, C, c] = g.0;
    is_triangle(A, B, C) && is_triangle(A, b, c) && satisfies_fold_condition(g)
}

/// All four triangle inequalities and the fold condition, with no shortcut.
pub fn satisfies_all_conditions(g: &EdgeLabeling) -> bool {
    g.faces().iter().all(|f| is_triangle(f[0], f[1], f[2])) && satisfies_fold_condition(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(e: [u32; 6]) -> EdgeLabeling {
        EdgeLabeling::new(e).unwrap()
    }

    #[test]
    fn triangle_examples() {
        assert!(!is_triangle(1, 1, 2));
        assert!(is_triangle(7, 4, 4));
        assert!(is_triangle(5, 5, 5));
        assert!(is_triangle(u32::MAX, u32::MAX, 1));
    }

    #[test]
    fn rejects_zero_edges() {
        assert!(EdgeLabeling::new([1, 0, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn fold_examples() {
        assert!(!satisfies_fold_condition(&g([7, 4, 7, 4, 7, 4])));
        assert!(satisfies_fold_condition(&g([1, 1, 1, 1, 1, 1])));
        assert!(satisfies_fold_condition(&g([1, 5, 1, 5, 1, 5])));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(cayley_menger_determinant(&g([1; 6])), BigInt::from(4));
        assert!(cayley_menger_positive(&g([1; 6])));
        assert!(!cayley_menger_positive(&g([7, 4, 7, 4, 7, 4])));
        assert!(!cayley_menger_positive(&g([2, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_tetrahedron(&g([1; 6])));
        assert!(!is_valid_tetrahedron(&g([2, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn perimeter_seven_and_eight_are_empty() {
        for n in [7u32, 8] {
            let mut seen = 0;
            for_each_composition(n, |e| {
                seen += 1;
                assert!(!is_valid_tetrahedron(&g(e)), "{e:?}");
            });
            assert!(seen > 0);
        }
    }

    fn for_each_composition(n: u32, mut f: impl FnMut([u32; 6])) {
        for a0 in 1..n {
            for a1 in 1..n {
                for a2 in 1..n {
                    for a3 in 1..n {
                        for a4 in 1..n {
                            let used = a0 + a1 + a2 + a3 + a4;
                            if used < n {
                                f([a0, a1, a2, a3, a4, n - used]);
                            }
                        }
                    }
                }
            }
        }
    }

    // Regular tetrahedron of side s: V² = s⁶/72, so 288·V² = 4·s⁶.
    #[test]
    fn determinant_of_regular_tetrahedron() {
        for s in [1u32, 2, 7, 1000, 40_000] {
            let expected = BigInt::from(4) * BigInt::from(s).pow(6);
            assert_eq!(cayley_menger_determinant(&g([s; 6])), expected);
        }
    }

    #[test]
    fn fold_exhaustive_equivalence_small() {
        let max = 12u32;
        let mut checked = 0u64;
        for A in 1..=max {
            for B in 1..=max {
                for C in 1..=max {
                    if !is_triangle(A, B, C) {
                        continue;
                    }
                    for b in 1..=max {
                        for c in 1..=max {
                            if !is_triangle(A, b, c) {
                                continue;
                            }
                            for a in 1..=max {
                                let l = g([A, a, B, b, C, c]);
                                let fold = satisfies_fold_condition(&l);
                                assert_eq!(fold, cayley_menger_positive(&l), "{l}");
                                assert_eq!(fold, satisfies_fold_condition_bigint(&l), "{l}");
                                assert_eq!(is_valid_tetrahedron(&l), satisfies_all_conditions(&l), "{l}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 100_000);
    }

    #[test]
    fn fast_path_bound_holds_at_threshold() {
        // Worst case magnitudes at the threshold diameter stay inside i128.
        let d = FAST_PATH_MAX_DIAMETER as i128;
        let bound = 64 * d.pow(8);
        assert!(bound > 0 && bound < i128::MAX);
        let l = g([FAST_PATH_MAX_DIAMETER, 1, FAST_PATH_MAX_DIAMETER, 1, 1, FAST_PATH_MAX_DIAMETER]);
        assert_eq!(fold_condition_i128(&l.0), satisfies_fold_condition_bigint(&l));
        let l = g([FAST_PATH_MAX_DIAMETER; 6]);
        assert_eq!(cayley_menger_i128(&l.0), 4 * d.pow(6));
    }

    #[test]
    fn big_path_beyond_threshold() {
        let s = 1_000_000u32;
        assert!(is_valid_tetrahedron(&g([s; 6])));
        assert!(cayley_menger_positive(&g([s, 1, s, 1, 1, s])) == satisfies_fold_condition(&g([s, 1, s, 1, 1, s])));
        assert!(!is_valid_tetrahedron(&g([7 * s, 4 * s, 7 * s, 4 * s, 7 * s, 4 * s])));
    }

    fn faces_ok(e: &[u32; 6]) -> bool {
        is_triangle(e[0], e[2], e[4]) && is_triangle(e[0], e[3], e[5])
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            cases: 100_000,
            max_global_rejects: 1_000_000,
            ..ProptestConfig::default()
        })]
        #[test]
        fn fold_matches_determinant(e in prop::array::uniform6(1u32..=10_000)) {
            prop_assume!(faces_ok(&e));
            let l = g(e);
            prop_assert_eq!(satisfies_fold_condition(&l), cayley_menger_positive(&l));
            prop_assert_eq!(satisfies_fold_condition(&l), satisfies_fold_condition_bigint(&l));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            max_global_rejects: 100_000,
            ..ProptestConfig::default()
        })]
        #[test]
        fn i128_and_bigint_agree_near_threshold(
            e in prop::array::uniform6(20_000u32..=FAST_PATH_MAX_DIAMETER)
        ) {
            let l = g(e);
            prop_assert_eq!(fold_condition_i128(&l.0), satisfies_fold_condition_bigint(&l));
            prop_assert_eq!(BigInt::from(cayley_menger_i128(&l.0)), cayley_menger_determinant(&l));
        }

        #[test]
        fn scaling_preserves_validity(e in prop::array::uniform6(1u32..=60), k in 1u32..=5) {
            let l = g(e);
            prop_assume!(is_valid_tetrahedron(&l));
            prop_assert!(is_valid_tetrahedron(&l.scaled(k).unwrap()));
        }
    }
}
