//! The S₄ action on labelings, canonical forms and Burnside sums.

use std::fmt;

use crate::error::{Result, TetraError};
use crate::geometry::EdgeLabeling;

/// Row `i` lists, for each output slot in `⟨A,a,B,b,C,c⟩` order, which slot
/// of the input it copies.  The first twelve rows are the rotations.
const IMAGE_TABLE: [[usize; 6]; 24] = [
    [0, 1, 2, 3, 4, 5],
    [0, 1, 3, 2, 5, 4],
    [1, 0, 2, 3, 5, 4],
    [1, 0, 3, 2, 4, 5],
    [4, 5, 0, 1, 2, 3],
    [5, 4, 0, 1, 3, 2],
    [5, 4, 1, 0, 2, 3],
    [4, 5, 1, 0, 3, 2],
    [2, 3, 4, 5, 0, 1],
    [3, 2, 5, 4, 0, 1],
    [2, 3, 5, 4, 1, 0],
    [3, 2, 4, 5, 1, 0],
    [0, 1, 4, 5, 2, 3],
    [0, 1, 5, 4, 3, 2],
    [1, 0, 5, 4, 2, 3],
    [1, 0, 4, 5, 3, 2],
    [2, 3, 0, 1, 4, 5],
    [3, 2, 0, 1, 5, 4],
    [2, 3, 1, 0, 5, 4],
    [3, 2, 1, 0, 4, 5],
    [4, 5, 2, 3, 0, 1],
    [5, 4, 3, 2, 0, 1],
    [5, 4, 2, 3, 1, 0],
    [4, 5, 3, 2, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Rotation,
    Reflection,
}

/// Conjugacy classes of S₄, with the representative used for fixed-point
/// predicates noted on each variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjugacyClass {
    /// id
    Identity,
    /// (1,2,3): A=B=C and a=b=c
    ThreeCycle,
    /// (1,4)(2,3): B=b and C=c
    DoubleTransposition,
    /// (2,3): B=C and b=c
    Transposition,
    /// (1,2,4,3): A=a and B=C=b=c
    FourCycle,
}

impl ConjugacyClass {
    pub const ALL: [ConjugacyClass; 5] = [
        ConjugacyClass::Identity,
        ConjugacyClass::ThreeCycle,
        ConjugacyClass::DoubleTransposition,
        ConjugacyClass::Transposition,
        ConjugacyClass::FourCycle,
    ];

    pub fn multiplicity(self) -> u64 {
        match self {
            ConjugacyClass::Identity => 1,
            ConjugacyClass::ThreeCycle => 8,
            ConjugacyClass::DoubleTransposition => 3,
            ConjugacyClass::Transposition => 6,
            ConjugacyClass::FourCycle => 6,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            ConjugacyClass::Identity
            | ConjugacyClass::ThreeCycle
            | ConjugacyClass::DoubleTransposition => Parity::Rotation,
            ConjugacyClass::Transposition | ConjugacyClass::FourCycle => Parity::Reflection,
        }
    }

    /// The designated representative in cycle notation on vertices 1..=4.
    pub fn representative(self) -> &'static str {
        match self {
            ConjugacyClass::Identity => "id",
            ConjugacyClass::ThreeCycle => "(1,2,3)",
            ConjugacyClass::DoubleTransposition => "(1,4)(2,3)",
            ConjugacyClass::Transposition => "(2,3)",
            ConjugacyClass::FourCycle => "(1,2,4,3)",
        }
    }

    /// Position (1..=5) of the class in the fixed-point tables.
    pub fn ordinal(self) -> u32 {
        match self {
            ConjugacyClass::Identity => 1,
            ConjugacyClass::ThreeCycle => 2,
            ConjugacyClass::DoubleTransposition => 3,
            ConjugacyClass::Transposition => 4,
            ConjugacyClass::FourCycle => 5,
        }
    }

    pub fn from_ordinal(k: u32) -> Option<Self> {
        Self::ALL.get((k as usize).checked_sub(1)?).copied()
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.representative())
    }
}

/// One of the 24 images: a permutation of the three opposite-edge pairs,
/// with an even number of pairs swapped internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub index: usize,
    /// `pair_permutation[j]` is the source pair copied into output pair `j`.
    pub pair_permutation: [usize; 3],
    /// `flips[j]` is set when output pair `j` takes its source pair reversed.
    pub flips: [bool; 3],
    pub parity: Parity,
    pub class: ConjugacyClass,
}

impl SignedPermutation {
    pub fn all() -> [SignedPermutation; 24] {
        std::array::from_fn(Self::from_index)
    }

    fn from_index(index: usize) -> Self {
        let row = IMAGE_TABLE[index];
        let pair_permutation = [row[0] / 2, row[2] / 2, row[4] / 2];
        let flips = [row[0] % 2 == 1, row[2] % 2 == 1, row[4] % 2 == 1];
        let fixed_pairs = (0..3).filter(|&j| pair_permutation[j] == j).count();
        let flip_count = flips.iter().filter(|&&f| f).count();
        let class = match fixed_pairs {
            3 if flip_count == 0 => ConjugacyClass::Identity,
            3 => ConjugacyClass::DoubleTransposition,
            0 => ConjugacyClass::ThreeCycle,
            _ => {
                let fixed = (0..3).find(|&j| pair_permutation[j] == j).unwrap();
                if flips[fixed] {
                    ConjugacyClass::FourCycle
                } else {
                    ConjugacyClass::Transposition
                }
            }
        };
        SignedPermutation {
            index,
            pair_permutation,
            flips,
            parity: class.parity(),
            class,
        }
    }

    #[inline]
    pub fn apply(&self, g: &EdgeLabeling) -> EdgeLabeling {
        apply_row(&IMAGE_TABLE[self.index], g)
    }
}

#[inline]
fn apply_row(row: &[usize; 6], g: &EdgeLabeling) -> EdgeLabeling {
    let e = g.edges();
    EdgeLabeling::from_array_unchecked(row.map(|i| e[i]))
}

/// All 24 images of `g` in table order (repetitions included).
pub fn orbit_images(g: &EdgeLabeling) -> [EdgeLabeling; 24] {
    std::array::from_fn(|i| apply_row(&IMAGE_TABLE[i], g))
}

/// Lexicographically greatest image, comparing in `(A,a,B,b,C,c)` order.
pub fn canonical_form(g: &EdgeLabeling) -> EdgeLabeling {
    let mut best = *g;
    for row in &IMAGE_TABLE[1..] {
        let img = apply_row(row, g);
        if img > best {
            best = img;
        }
    }
    best
}

/// Whether `g` equals its canonical form.
#[inline]
pub fn is_canonical(g: &EdgeLabeling) -> bool {
    let [A, a, B, b, C, c] = g.edges();
    // When A is the unique maximum and B strictly beats b, C, c, every image
    // that keeps A in front is smaller at the third slot.
    if a < A && B < A && C < A && b < A && c < A && B > b.max(C).max(c) {
        return true;
    }
    let e = g.edges();
    IMAGE_TABLE[1..]
        .iter()
        .all(|row| row.map(|i| e[i]) <= e)
}

/// Fixed-point test for the class's designated representative.
pub fn is_fixed_by(g: &EdgeLabeling, class: ConjugacyClass) -> bool {
    let [A, a, B, b, C, c] = g.edges();
    match class {
        ConjugacyClass::Identity => true,
        ConjugacyClass::ThreeCycle => A == B && B == C && a == b && b == c,
        ConjugacyClass::DoubleTransposition => B == b && C == c,
        ConjugacyClass::Transposition => B == C && b == c,
        ConjugacyClass::FourCycle => A == a && B == C && C == b && b == c,
    }
}

/// Number of group elements fixing `g`; the orbit has 24 / this many members.
pub fn stabilizer_order(g: &EdgeLabeling) -> usize {
    IMAGE_TABLE.iter().filter(|row| apply_row(row, g) == *g).count()
}

/// Fixed-point counts at perimeter `n`, one per conjugacy class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FixVector {
    pub n: u64,
    pub fix_id: u64,
    pub fix_3cyc: u64,
    pub fix_dbl: u64,
    pub fix_transp: u64,
    pub fix_4cyc: u64,
}

impl FixVector {
    pub fn get(&self, class: ConjugacyClass) -> u64 {
        match class {
            ConjugacyClass::Identity => self.fix_id,
            ConjugacyClass::ThreeCycle => self.fix_3cyc,
            ConjugacyClass::DoubleTransposition => self.fix_dbl,
            ConjugacyClass::Transposition => self.fix_transp,
            ConjugacyClass::FourCycle => self.fix_4cyc,
        }
    }

    pub fn as_array(&self) -> [u64; 5] {
        ConjugacyClass::ALL.map(|c| self.get(c))
    }
}

fn weighted_sum(fv: &FixVector, classes: &[ConjugacyClass]) -> u128 {
    classes
        .iter()
        .map(|&c| c.multiplicity() as u128 * fv.get(c) as u128)
        .sum()
}

fn exact_quotient(total: u128, divisor: u128, fv: &FixVector) -> Result<u64> {
    if total % divisor != 0 {
        return Err(TetraError::Integrity(format!(
            "weighted fixed-point sum {total} at n={} is not divisible by {divisor}",
            fv.n
        )));
    }
    u64::try_from(total / divisor).map_err(|_| TetraError::Overflow {
        context: "Burnside quotient",
    })
}

/// Orbits under the full group: the weighted class sum divided by 24.
pub fn burnside_full(fv: &FixVector) -> Result<u64> {
    exact_quotient(weighted_sum(fv, &ConjugacyClass::ALL), 24, fv)
}

/// Orbits under rotations only: the sum over the even classes divided by 12.
pub fn burnside_rotations(fv: &FixVector) -> Result<u64> {
    let even = [
        ConjugacyClass::Identity,
        ConjugacyClass::ThreeCycle,
        ConjugacyClass::DoubleTransposition,
    ];
    exact_quotient(weighted_sum(fv, &even), 12, fv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashSet};

    fn g(e: [u32; 6]) -> EdgeLabeling {
        EdgeLabeling::new(e).unwrap()
    }

    // Vertex pairs (1-based) carried by each slot of ⟨A,a,B,b,C,c⟩.
    const SLOTS: [(usize, usize); 6] = [(2, 3), (1, 4), (1, 3), (2, 4), (1, 2), (3, 4)];

    fn slot_of(i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        SLOTS.iter().position(|&s| s == key).unwrap()
    }

    /// `sigma[v-1]` is the image of vertex v.  Output slot for edge {i,j}
    /// copies the input edge {σ⁻¹(i), σ⁻¹(j)}.
    fn vertex_action(sigma: [usize; 4]) -> [usize; 6] {
        let mut inv = [0usize; 4];
        for v in 0..4 {
            inv[sigma[v] - 1] = v + 1;
        }
        SLOTS.map(|(i, j)| slot_of(inv[i - 1], inv[j - 1]))
    }

    fn permutations4() -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let p = [a, b, c, d];
                        if p.iter().collect::<HashSet<_>>().len() == 4 {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    fn vertex_parity(p: [usize; 4]) -> Parity {
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        if inversions % 2 == 0 {
            Parity::Rotation
        } else {
            Parity::Reflection
        }
    }

    #[test]
    fn table_matches_vertex_permutations() {
        let table: BTreeSet<[usize; 6]> = IMAGE_TABLE.iter().copied().collect();
        assert_eq!(table.len(), 24);
        let from_vertices: BTreeSet<[usize; 6]> =
            permutations4().into_iter().map(vertex_action).collect();
        assert_eq!(table, from_vertices);
        for p in permutations4() {
            let row = vertex_action(p);
            let idx = IMAGE_TABLE.iter().position(|r| *r == row).unwrap();
            assert_eq!(SignedPermutation::all()[idx].parity, vertex_parity(p), "{p:?}");
        }
    }

    #[test]
    fn class_sizes_and_parities() {
        let all = SignedPermutation::all();
        for class in ConjugacyClass::ALL {
            let n = all.iter().filter(|s| s.class == class).count() as u64;
            assert_eq!(n, class.multiplicity(), "{class:?}");
        }
        assert_eq!(all.iter().filter(|s| s.parity == Parity::Rotation).count(), 12);
        assert!(all[..12].iter().all(|s| s.parity == Parity::Rotation));
        for s in &all {
            assert_eq!(s.flips.iter().filter(|&&f| f).count() % 2, 0);
        }
        let total: u64 = ConjugacyClass::ALL.iter().map(|c| c.multiplicity()).sum();
        assert_eq!(total, 24);
    }

    fn representative(class: ConjugacyClass) -> [usize; 4] {
        match class {
            ConjugacyClass::Identity => [1, 2, 3, 4],
            ConjugacyClass::ThreeCycle => [2, 3, 1, 4],
            ConjugacyClass::DoubleTransposition => [4, 3, 2, 1],
            ConjugacyClass::Transposition => [1, 3, 2, 4],
            ConjugacyClass::FourCycle => [2, 4, 1, 3],
        }
    }

    #[test]
    fn fixed_predicates_match_representatives() {
        for class in ConjugacyClass::ALL {
            let row = vertex_action(representative(class));
            let idx = IMAGE_TABLE.iter().position(|r| *r == row).unwrap();
            assert_eq!(SignedPermutation::all()[idx].class, class);
            for e0 in 1..=3u32 {
                for e1 in 1..=3 {
                    for e2 in 1..=3 {
                        for e3 in 1..=3 {
                            for e4 in 1..=3 {
                                for e5 in 1..=3 {
                                    let l = g([e0, e1, e2, e3, e4, e5]);
                                    assert_eq!(apply_row(&row, &l) == l, is_fixed_by(&l, class));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let unit = g([1; 6]);
        assert!(orbit_images(&unit).iter().all(|h| *h == unit));
        let thin = g([275, 365, 275, 365, 275, 365]);
        let distinct: HashSet<_> = orbit_images(&thin).into_iter().collect();
        assert_eq!(distinct.len(), 4);
        let generic = g([373, 348, 365, 240, 275, 252]);
        let distinct: HashSet<_> = orbit_images(&generic).into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn canonical_examples() {
        // Unit base face with three long edges to the apex.  The unit face
        // becomes (a,b,C) in the canonical arrangement.
        assert_eq!(canonical_form(&g([1, 5, 1, 5, 1, 5])), g([5, 1, 5, 1, 1, 5]));
        assert_eq!(canonical_form(&g([1; 6])), g([1; 6]));
    }

    #[test]
    fn fixed_examples() {
        for class in ConjugacyClass::ALL {
            assert!(is_fixed_by(&g([1; 6]), class));
        }
        // B=C=7 and b=c=4, while B≠b.
        let l = g([7, 4, 7, 4, 7, 4]);
        assert!(!is_fixed_by(&l, ConjugacyClass::DoubleTransposition));
        assert!(is_fixed_by(&l, ConjugacyClass::Transposition));
        assert!(is_fixed_by(&g([7, 4, 5, 5, 3, 3]), ConjugacyClass::DoubleTransposition));
        assert!(is_fixed_by(&g([5, 5, 3, 3, 3, 3]), ConjugacyClass::FourCycle));
    }

    #[test]
    fn burnside_examples() {
        let fv = |n, v: [u64; 5]| FixVector {
            n,
            fix_id: v[0],
            fix_3cyc: v[1],
            fix_dbl: v[2],
            fix_transp: v[3],
            fix_4cyc: v[4],
        };
        assert_eq!(burnside_full(&fv(30, [2013, 6, 57, 93, 3])), Ok(117));
        assert_eq!(burnside_full(&fv(100, [999738, 0, 1674, 3798, 10])), Ok(42817));
        assert_eq!(burnside_full(&fv(0, [0; 5])), Ok(0));
        assert_eq!(burnside_rotations(&fv(30, [2013, 6, 57, 0, 0])), Ok(186));
        assert_eq!(burnside_rotations(&fv(100, [999738, 0, 1674, 0, 0])), Ok(83730));
        assert_eq!(burnside_rotations(&fv(0, [24, 0, 0, 0, 0])), Ok(2));
        assert!(matches!(
            burnside_full(&fv(5, [1, 0, 0, 0, 0])),
            Err(TetraError::Integrity(_))
        ));
        assert!(burnside_rotations(&fv(5, [13, 0, 0, 0, 0])).is_err());
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent_and_orbit_invariant(e in prop::array::uniform6(1u32..=20)) {
            let l = g(e);
            let canon = canonical_form(&l);
            prop_assert_eq!(canonical_form(&canon), canon);
            prop_assert!(is_canonical(&canon));
            prop_assert_eq!(is_canonical(&l), l == canon);
            for h in orbit_images(&l) {
                prop_assert_eq!(canonical_form(&h), canon);
                prop_assert_eq!(
                    crate::geometry::is_valid_tetrahedron(&h),
                    crate::geometry::is_valid_tetrahedron(&l)
                );
            }
        }

        #[test]
        fn orbit_size_divides_group_order(e in prop::array::uniform6(1u32..=4)) {
            let l = g(e);
            let distinct: HashSet<_> = orbit_images(&l).into_iter().collect();
            prop_assert_eq!(24 % distinct.len(), 0);
            prop_assert_eq!(distinct.len() * stabilizer_order(&l), 24);
        }
    }
}
