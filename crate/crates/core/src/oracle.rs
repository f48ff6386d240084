//! Brute-force reference counts.
//!
//! Nothing here reuses the fast path beyond [`EdgeLabeling`]: the triangle
//! test, the fold inequality, the determinant and the orbit expansion are
//! all written out again, the last one directly from the vertex action
//! `(σ·G)(i,j) = G(σ⁻¹(i), σ⁻¹(j))`.

use std::collections::{BTreeMap, BTreeSet};

use crate::enumerate::JointTable;
use crate::error::{Result, TetraError};
use crate::geometry::EdgeLabeling;

pub const DEFAULT_CEILING: u32 = 60;

/// Vertex pair (0-based) held by each slot of `⟨A,a,B,b,C,c⟩`.
const SLOT_VERTICES: [(usize, usize); 6] = [(1, 2), (0, 3), (0, 2), (1, 3), (0, 1), (2, 3)];

fn distance_matrix(g: &EdgeLabeling) -> [[i128; 4]; 4] {
    let mut m = [[0i128; 4]; 4];
    for (slot, &(i, j)) in SLOT_VERTICES.iter().enumerate() {
        let v = g.edges()[slot] as i128;
        m[i][j] = v;
        m[j][i] = v;
    }
    m
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut p = [0usize, 1, 2, 3];
    heap_permute(4, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut [usize; 4], out: &mut Vec<[usize; 4]>) {
    if k == 1 {
        out.push(*p);
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Labelings obtained by relabelling the vertices in all 24 ways.
pub fn vertex_orbit(g: &EdgeLabeling) -> Vec<EdgeLabeling> {
    let m = distance_matrix(g);
    permutations()
        .into_iter()
        .map(|sigma| {
            let mut inv = [0usize; 4];
            for (v, &image) in sigma.iter().enumerate() {
                inv[image] = v;
            }
            let edges = SLOT_VERTICES.map(|(i, j)| m[inv[i]][inv[j]] as u32);
            EdgeLabeling::new(edges).expect("relabelling keeps entries positive")
        })
        .collect()
}

pub fn vertex_canonical(g: &EdgeLabeling) -> EdgeLabeling {
    vertex_orbit(g).into_iter().max().expect("24 images")
}

fn triangle(x: u32, y: u32, z: u32) -> bool {
    let mut s = [x, y, z];
    s.sort_unstable();
    s[0] + s[1] > s[2]
}

/// The fold inequality in its uncleared shape, scaled by `s = 2A` so that
/// `X = s·x` and `Y' = s²·Y` are integers:
/// `(s²(a²−B²−c²) + 2·X₁X₂)² < 4·Y₁'·Y₂'`.
fn fold_inequality(g: &EdgeLabeling) -> bool {
    let [big_a, a, big_b, b, big_c, c] = g.edges().map(|v| v as i128);
    let s2 = 4 * big_a * big_a;
    let x1 = big_a * big_a + big_b * big_b - big_c * big_c;
    let x2 = big_a * big_a + c * c - b * b;
    let y1 = s2 * big_b * big_b - x1 * x1;
    let y2 = s2 * c * c - x2 * x2;
    let lhs = s2 * (a * a - big_b * big_b - c * c) + 2 * x1 * x2;
    lhs * lhs < 4 * y1 * y2
}

/// (T2)–(T6): all four faces and the fold inequality.
pub fn full_conditions(g: &EdgeLabeling) -> bool {
    let [big_a, a, big_b, b, big_c, c] = g.edges();
    triangle(big_a, big_b, big_c)
        && triangle(big_a, b, c)
        && triangle(a, big_b, c)
        && triangle(a, b, big_c)
        && fold_inequality(g)
}

/// (T2), (T3) and (T6) only.
pub fn reduced_conditions(g: &EdgeLabeling) -> bool {
    let [big_a, _, big_b, b, big_c, c] = g.edges();
    triangle(big_a, big_b, big_c) && triangle(big_a, b, c) && fold_inequality(g)
}

/// Fraction-free Gaussian elimination (Bareiss) on a square integer matrix.
pub fn bareiss_determinant<const N: usize>(mut m: [[i128; N]; N]) -> i128 {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..N.saturating_sub(1) {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..N).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..N {
            for j in k + 1..N {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[N - 1][N - 1]
}

/// Bordered matrix of squared distances.  `idx` lists the points followed by
/// one unused placeholder for the border row.
fn bordered<const N: usize>(dist: &[[i128; 4]; 4], idx: [usize; N]) -> [[i128; N]; N] {
    let mut m = [[1i128; N]; N];
    m[N - 1][N - 1] = 0;
    for r in 0..N - 1 {
        for c in 0..N - 1 {
            let v = dist[idx[r]][idx[c]];
            m[r][c] = v * v;
        }
    }
    m
}

/// 288·V² from the 5×5 bordered matrix.
pub fn cayley_menger_5x5(g: &EdgeLabeling) -> i128 {
    bareiss_determinant(bordered(&distance_matrix(g), [0, 1, 2, 3, 4]))
}

/// Complete determinant criterion: the tetrahedral determinant is positive
/// and every face has positive area (its 4×4 bordered determinant, which is
/// −16·area², is negative).
///
/// The 5×5 determinant alone is not enough: `⟨1,1,1,5,3,3⟩` makes it
/// positive while `(a,b,C) = (1,5,3)` is not a triangle.
pub fn cayley_menger_criterion(g: &EdgeLabeling) -> bool {
    let dist = distance_matrix(g);
    let faces = [[0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4], [1, 2, 3, 4]];
    cayley_menger_5x5(g) > 0
        && faces
            .iter()
            .all(|&f| bareiss_determinant(bordered(&dist, f)) < 0)
}

/// Calls `f` on every ordered 6-tuple of parts in `[1, top]` summing to `n`.
fn for_each_composition(n: u32, top: u32, f: &mut impl FnMut([u32; 6])) {
    fn rec(depth: usize, left: u32, top: u32, e: &mut [u32; 6], f: &mut impl FnMut([u32; 6])) {
        let slots_after = (5 - depth) as u32;
        if depth == 5 {
            if (1..=top).contains(&left) {
                e[5] = left;
                f(*e);
            }
            return;
        }
        let hi = top.min(left.saturating_sub(slots_after));
        for v in 1..=hi {
            e[depth] = v;
            rec(depth + 1, left - v, top, e, f);
        }
    }
    rec(0, n, top, &mut [0; 6], f);
}

/// Configured brute-force counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub ceiling: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// What one brute-force pass saw.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub tuples_visited: u64,
    pub valid_tuples: u64,
    pub orbits: BTreeMap<u32, BTreeSet<EdgeLabeling>>,
}

impl OracleReport {
    pub fn total(&self) -> u64 {
        self.orbits.values().map(|s| s.len() as u64).sum()
    }
}

impl Oracle {
    fn check(&self, n: u32) -> Result<()> {
        if n > self.ceiling {
            return Err(TetraError::CeilingExceeded {
                n: n as u64,
                ceiling: self.ceiling as u64,
            });
        }
        Ok(())
    }

    /// Visits every 6-tuple over `[1, n−5]` summing to `n`, validates it three
    /// ways and groups canonical forms by diameter.
    pub fn scan(&self, n: u32) -> Result<OracleReport> {
        self.check(n)?;
        let mut report = OracleReport::default();
        if n < 6 {
            return Ok(report);
        }
        let top = n - 5;
        let mut err = None;
        for_each_composition(n, top, &mut |e| {
            if err.is_some() {
                return;
            }
            let g = EdgeLabeling::new(e).expect("parts are positive");
            report.tuples_visited += 1;
            let full = full_conditions(&g);
            let reduced = reduced_conditions(&g);
            let det = cayley_menger_criterion(&g);
            if full != reduced || full != det {
                err = Some(TetraError::ValidatorDisagreement {
                    labeling: g,
                    detail: format!("full={full} reduced={reduced} determinant={det}"),
                });
            } else if full {
                report.valid_tuples += 1;
                report
                    .orbits
                    .entry(g.diameter())
                    .or_default()
                    .insert(vertex_canonical(&g));
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(report),
        }
    }

    pub fn count_perimeter(&self, n: u32) -> Result<u64> {
        Ok(self.scan(n)?.total())
    }

    /// The grid `ᵈt_n` for `6 ≤ n ≤ n_max`.
    pub fn joint_table(&self, n_max: u32) -> Result<JointTable> {
        self.check(n_max)?;
        let d_hi = (n_max.max(6) - 3) / 3;
        let mut table = JointTable::new(6..=n_max.max(6), 1..=d_hi);
        for n in 6..=n_max {
            for (d, set) in self.scan(n)?.orbits {
                table.set(n, d, set.len() as u64)?;
            }
        }
        Ok(table)
    }
}

pub fn oracle_count_perimeter(n: u32) -> Result<u64> {
    Oracle::default().count_perimeter(n)
}

pub fn oracle_joint_table(n_max: u32) -> Result<JointTable> {
    Oracle::default().joint_table(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(oracle_count_perimeter(12).unwrap(), 3);
        assert_eq!(oracle_count_perimeter(25).unwrap(), 46);
        assert_eq!(oracle_count_perimeter(7).unwrap(), 0);
    }

    #[test]
    fn visits_every_composition() {
        for n in [6u32, 7, 11, 20] {
            let r = Oracle::default().scan(n).unwrap();
            let k = (n - 1) as u64;
            let expected = (0..5).fold(1u64, |acc, i| acc * (k - i) / (i + 1));
            assert_eq!(r.tuples_visited, expected, "n={n}");
        }
    }

    #[test]
    fn joint_rows() {
        let t = oracle_joint_table(18).unwrap();
        assert_eq!(t.row(18), vec![(3, 1), (4, 8), (5, 3)]);
        assert_eq!(t.row(12), vec![(2, 1), (3, 2)]);
        assert!(t.row(8).is_empty());
    }

    #[test]
    fn ceiling_is_enforced() {
        assert_eq!(
            oracle_count_perimeter(61),
            Err(TetraError::CeilingExceeded { n: 61, ceiling: 60 })
        );
        assert!(Oracle { ceiling: 10 }.joint_table(11).is_err());
    }

    #[test]
    fn determinant_of_unit_tetrahedron() {
        assert_eq!(cayley_menger_5x5(&EdgeLabeling::from_parts(1, 1, 1, 1, 1, 1)), 4);
        assert!(!cayley_menger_criterion(&EdgeLabeling::from_parts(1, 1, 1, 5, 3, 3)));
        assert!(cayley_menger_5x5(&EdgeLabeling::from_parts(1, 1, 1, 5, 3, 3)) > 0);
    }

    #[test]
    fn bareiss_handles_pivot_swaps() {
        assert_eq!(bareiss_determinant([[0, 1], [1, 0]]), -1);
        assert_eq!(bareiss_determinant([[2, 0, 1], [1, 3, 2], [1, 1, 2]]), 6);
        assert_eq!(bareiss_determinant([[1, 1, 1], [1, 1, 2], [1, 2, 3]]), -1);
        assert_eq!(bareiss_determinant([[1, 2], [2, 4]]), 0);
    }

    #[test]
    fn permutations_are_distinct() {
        let p: BTreeSet<_> = permutations().into_iter().collect();
        assert_eq!(p.len(), 24);
    }
}
