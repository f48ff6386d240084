use std::collections::BTreeSet;

use super::*;
use crate::closed_forms::{fix_four_cycle, fix_three_cycle};
use crate::fixtures;
use crate::geometry::is_valid_tetrahedron;
use crate::symmetry::{burnside_full, canonical_form, ConjugacyClass, SignedPermutation};

/// Every valid labeling of perimeter `n`, by plain nested loops over entries
/// up to `⌊(n−3)/3⌋`.
fn all_valid(n: u32) -> Vec<EdgeLabeling> {
    let mut out = Vec::new();
    let m = (n.saturating_sub(3)) / 3;
    for e0 in 1..=m {
        for e1 in 1..=m {
            for e2 in 1..=m {
                for e3 in 1..=m {
                    for e4 in 1..=m {
                        let used = e0 + e1 + e2 + e3 + e4;
                        if used >= n || n - used > m {
                            continue;
                        }
                        let g = EdgeLabeling::from_parts(e0, e1, e2, e3, e4, n - used);
                        if is_valid_tetrahedron(&g) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn joint_examples() {
    assert_eq!(count_joint(20, 5), 10);
    assert_eq!(count_joint(50, 15), 40);
    assert_eq!(count_joint(6, 2), 0);
    assert_eq!(count_joint(30, 9), 5);
    assert_eq!(count_joint(50, 12), 374);
}

#[test]
fn perimeter_examples() {
    assert_eq!(count_perimeter(30).unwrap(), 117);
    assert_eq!(count_perimeter(100).unwrap(), 42817);
    for n in 0..=8 {
        assert_eq!(count_perimeter(n).unwrap(), u64::from(n == 6), "n={n}");
    }
}

#[test]
fn diameter_examples() {
    assert_eq!(count_diameter(1).unwrap(), 1);
    assert_eq!(count_diameter(0).unwrap(), 0);
}

#[test]
fn joint_grid_matches_fixture() {
    for row in fixtures::joint() {
        let (n, d) = (row.n.unwrap() as u32, row.d.unwrap() as u32);
        assert_eq!(count_joint(n, d), row.value, "n={n} d={d}");
    }
}

#[test]
fn column_engine_matches_walk() {
    for d in 1..=30u32 {
        let column = diameter_column(d).unwrap();
        assert_eq!(column.len() as u32, 3 * d - 2);
        for rec in column {
            assert_eq!(rec.count, count_joint(rec.n, d), "n={} d={d}", rec.n);
        }
    }
}

#[test]
fn engines_agree() {
    for n in 6..=60u32 {
        for d in diameter_bounds(n as u64).iter() {
            let walk = count_joint_with(n, d, Engine::Walk).unwrap();
            let naive = count_joint_with(n, d, Engine::Naive).unwrap();
            assert_eq!(walk, naive, "n={n} d={d}");
        }
    }
}

#[test]
fn walk_visits_exactly_the_representatives() {
    for n in [12u32, 25, 40, 57] {
        for d in diameter_bounds(n as u64).iter() {
            let mut walked = BTreeSet::new();
            for_each_canonical(n, d, |g| assert!(walked.insert(g), "visited twice: {g}"));
            assert_eq!(walked, enumerate_representatives(n, Some(d)).unwrap());
        }
    }
}

#[test]
fn representatives_examples() {
    let s = enumerate_representatives(6, None).unwrap();
    assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![EdgeLabeling::from_parts(1, 1, 1, 1, 1, 1)]);
    assert_eq!(enumerate_representatives(12, None).unwrap().len(), 3);
    assert_eq!(enumerate_representatives(9, Some(2)).unwrap().len(), 1);
}

#[test]
fn representative_capacity_is_enforced() {
    let err = enumerate_representatives_with_capacity(40, None, 10).unwrap_err();
    assert_eq!(err, TetraError::CapacityExceeded { limit: 10 });
}

#[test]
fn orbit_count_consistency() {
    for n in 6..=120u32 {
        let stored = enumerate_representatives(n, None).unwrap().len() as u64;
        assert_eq!(stored, count_perimeter(n).unwrap(), "n={n}");
    }
}

#[test]
fn brute_force_orbits_small() {
    for n in 6..=24u32 {
        let orbits: BTreeSet<_> = all_valid(n).iter().map(canonical_form).collect();
        assert_eq!(orbits.len() as u64, count_perimeter(n).unwrap(), "n={n}");
    }
}

#[test]
fn fix_examples() {
    let fv = fix_counts(30).unwrap();
    assert_eq!(fv.as_array(), [2013, 6, 57, 93, 3]);
    let fv = fix_counts(100).unwrap();
    assert_eq!(fv.as_array(), [999738, 0, 1674, 3798, 10]);
    assert_eq!(fix_counts(7).unwrap().as_array(), [0; 5]);
}

#[test]
fn fix_counts_are_class_functions() {
    let all = SignedPermutation::all();
    for n in 6..=30u32 {
        let valid = all_valid(n);
        let fv = fix_counts(n).unwrap();
        assert_eq!(fv.fix_id, valid.len() as u64, "n={n}");
        for s in &all {
            let fixed = valid.iter().filter(|g| s.apply(g) == **g).count() as u64;
            assert_eq!(fixed, fv.get(s.class), "n={n} {:?}", s);
        }
    }
}

#[test]
fn burnside_agrees_with_walk() {
    for n in 1..=120u32 {
        let fv = fix_counts(n).unwrap();
        assert!(ConjugacyClass::ALL.iter().all(|&c| fv.get(c) <= fv.fix_id));
        assert_eq!(burnside_full(&fv).unwrap(), count_perimeter(n).unwrap(), "n={n}");
    }
}

#[test]
fn fix_closed_forms_agree() {
    for n in 1..=200u32 {
        let fv = fix::symmetric_fix_counts(n).unwrap();
        assert_eq!(fv.fix_3cyc, fix_three_cycle(n as u64), "n={n}");
        assert_eq!(fv.fix_4cyc, fix_four_cycle(n as u64), "n={n}");
    }
}

#[test]
fn worker_count_does_not_change_counts() {
    for (n, d) in [(30u32, 9u32), (50, 12), (100, 24), (77, 20), (120, 33)] {
        let serial = count_joint(n, d);
        for w in [1usize, 2, 4, 8] {
            assert_eq!(count_joint_parallel(n, d, w).unwrap(), serial, "n={n} d={d} w={w}");
        }
    }
    assert!(count_joint_parallel(30, 9, 0).is_err());
}

#[test]
fn top_rows_follow_lemmas() {
    for d in 1..=80u32 {
        assert_eq!(count_joint(3 * d + 3, d), u64::from(d.div_ceil(2)), "d={d}");
        assert_eq!(count_joint(3 * d + 4, d), u64::from(d - 1), "d={d}");
    }
}

#[test]
fn diameter_bounds_are_attained() {
    for n in 6..=120u32 {
        let b = diameter_bounds(n as u64);
        let row = perimeter_row(n).unwrap();
        if row.iter().all(|r| r.count == 0) {
            // n = 7, 8 have no tetrahedra at all.
            assert!(n == 7 || n == 8, "n={n}");
            continue;
        }
        let top = row.iter().find(|r| r.d as i64 == b.d_max).unwrap();
        assert!(top.count > 0, "n={n} d_max");
        if n % 6 == 0 {
            let bottom = row.iter().find(|r| r.d as i64 == b.d_min).unwrap();
            assert!(bottom.count > 0, "n={n} d_min");
        }
    }
}

#[test]
fn sporadic_small() {
    let s = sporadic_breakdown(5);
    assert_eq!(s.values().sum::<u64>(), 10);
    let s = sporadic_breakdown(300);
    assert_eq!(s.get(&2), Some(&20));
    assert_eq!(s.values().sum::<u64>(), count_joint(905, 300));
}

#[test]
fn joint_table_sums() {
    let table = joint_table(6..=30).unwrap();
    let t = fixtures::perimeter();
    for n in 6..=30u32 {
        assert_eq!(Some(table.row_sum(n).unwrap()), fixtures::find(&t, "t_n", Some(n as u64), None));
    }
    assert_eq!(table.row(12), vec![(2, 1), (3, 2)]);
    assert!(table.get(31, 1).is_none());
    let mut t2 = table.clone();
    assert!(t2.set(5, 1, 1).is_err());
}
