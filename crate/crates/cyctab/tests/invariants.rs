//! Cross-validation of the enumeration and geometry code against
//! independent brute-force oracles, the n = 8 layer of the exhaustive
//! invariants (`#[ignore]`d), and sampled property tests.

mod common;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use common::{check_decomposition, promote_jdt};
use cyctab::cyclic::{cdes, path_lemma_suite, phi, phi_inverse};
use cyctab::dynamics::{demote, demote_with_path, promote, promote_with_path};
use cyctab::rotation::{balance_points, rotate, rotate_inverse};
use cyctab::shape::{enumerate_shapes, Cell, ShapeFilter, Side, SkewShape};
use cyctab::tableau::{enumerate_syt, Tableau};

fn partitions_in_box(max_part: usize, max_rows: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    fn rec(prefix: &mut Vec<usize>, max_part: usize, rows_left: usize, out: &mut Vec<Vec<usize>>) {
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part).rev() {
            prefix.push(p);
            out.push(prefix.clone());
            rec(prefix, p, rows_left - 1, out);
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    rec(&mut prefix, max_part, max_rows, &mut out);
    out
}

fn sub_partitions(lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(lambda: &[usize], i: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lambda.len() {
            let mut mu = prefix.clone();
            while mu.last() == Some(&0) {
                mu.pop();
            }
            out.push(mu);
            return;
        }
        for m in (0..=cap.min(lambda[i])).rev() {
            prefix.push(m);
            rec(lambda, i + 1, m, prefix, out);
            prefix.pop();
        }
    }
    rec(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Independent enumeration oracle: every (λ, μ) pair in the n-box, kept only
/// if it is already canonical (no empty row, no empty column).
fn bruteforce_canonical_shapes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for lambda in partitions_in_box(n, n) {
        if lambda.is_empty() {
            continue;
        }
        for mu in sub_partitions(&lambda) {
            let size: usize = lambda.iter().sum::<usize>() - mu.iter().sum::<usize>();
            if size != n {
                continue;
            }
            let mu_at = |i: usize| mu.get(i).copied().unwrap_or(0);
            let rows_ok = (0..lambda.len()).all(|i| lambda[i] > mu_at(i));
            let cols_ok = (1..=lambda[0])
                .all(|c| (0..lambda.len()).any(|i| mu_at(i) < c && c <= lambda[i]));
            if rows_ok && cols_ok {
                let l: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
                let m: Vec<String> = mu.iter().map(|p| p.to_string()).collect();
                out.insert(format!("{}/{}", l.join(","), m.join(",")));
            }
        }
    }
    out
}

#[test]
fn shape_enumeration_matches_bruteforce() {
    for n in 1..=5 {
        let expected = bruteforce_canonical_shapes(n);
        let got: BTreeSet<String> = enumerate_shapes(n, ShapeFilter::All)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, expected, "n = {n}");
    }
}

fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    fn rec(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            rec(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    rec(n, &mut items, &mut out);
    out
}

/// The standardness check accepts exactly the fillings that the recursive
/// enumerator produces.
fn cross_validate_syt(max_n: usize) {
    for n in 1..=max_n {
        let perms = heap_permutations(n);
        for shape in enumerate_shapes(n, ShapeFilter::All) {
            let mut accepted: Vec<Vec<usize>> = perms
                .iter()
                .filter(|p| Tableau::from_entries(Arc::clone(&shape), (*p).clone()).is_ok())
                .cloned()
                .collect();
            accepted.sort_unstable();
            let enumerated: Vec<Vec<usize>> = enumerate_syt(&shape)
                .iter()
                .map(|t| t.row_reading_word().to_vec())
                .collect();
            assert_eq!(enumerated, accepted, "{shape}");
        }
    }
}

#[test]
fn syt_enumeration_matches_bruteforce() {
    cross_validate_syt(6);
}

#[test]
#[ignore = "slow suite: brute-force standardness cross-validation up to n = 8"]
fn slow_syt_enumeration_matches_bruteforce_n8() {
    cross_validate_syt(8);
}

#[test]
fn boundary_is_a_connected_ribbon_walk() {
    // Consecutive boundary cells of a component are edge-adjacent, and the
    // walk starts/ends at the component's SW/NE extremes.
    for n in 1..=6 {
        for shape in enumerate_shapes(n, ShapeFilter::All) {
            for side in [Side::Se, Side::Nw] {
                let b = shape.boundary(side);
                for (ci, comp) in shape.components().iter().enumerate() {
                    let cells: Vec<Cell> = b.component(ci).iter().map(|&(c, _)| c).collect();
                    for w in cells.windows(2) {
                        let gap =
                            w[0].row.abs_diff(w[1].row) + w[0].col.abs_diff(w[1].col);
                        assert_eq!(gap, 1, "{shape} {side:?}: {} then {}", w[0], w[1]);
                    }
                    let sw = comp
                        .iter()
                        .copied()
                        .max_by_key(|c| (c.row, std::cmp::Reverse(c.col)))
                        .unwrap();
                    let ne = comp.iter().copied().min_by_key(|c| (c.row, std::cmp::Reverse(c.col))).unwrap();
                    assert_eq!(cells.first(), Some(&sw), "{shape} {side:?}");
                    assert_eq!(cells.last(), Some(&ne), "{shape} {side:?}");
                }
            }
        }
    }
}

#[test]
fn balance_points_match_boundary_walk() {
    // Oracle: walk due north (resp. west) from the corner while staying on
    // the boundary.
    for n in 1..=6 {
        for shape in enumerate_shapes(n, ShapeFilter::All) {
            let b = shape.boundary(Side::Se);
            for z in b.exterior_corners() {
                let mut north = z;
                while let Some(up) = north.north().filter(|&c| b.contains(c)) {
                    north = up;
                }
                let mut west = z;
                while let Some(left) = west.west().filter(|&c| b.contains(c)) {
                    west = left;
                }
                assert_eq!(balance_points(&shape, z).unwrap(), (north, west), "{shape} {z}");
            }
        }
    }
}

#[test]
#[ignore = "slow suite: symmetry and promotion invariants at n = 8"]
fn slow_symmetry_and_promotion_n8() {
    for n in [8usize] {
        for shape in enumerate_shapes(n, ShapeFilter::All) {
            for tab in enumerate_syt(&shape) {
                let des = tab.descent_set();
                let tt = tab.transpose();
                let tr = tab.reverse();
                for i in 1..n {
                    assert_eq!(tt.has_descent(i), !des.contains(i));
                    assert_eq!(tr.has_descent(i), des.contains(n - i));
                }
                let (pro, path) = promote_with_path(&tab);
                assert_eq!(promote_jdt(&tab), pro, "jdt disagrees on {tab:?}");
                for i in 1..n - 1 {
                    assert_eq!(tab.has_descent(i), pro.has_descent(i + 1));
                }
                assert_eq!(promote(&tt), pro.transpose());
                assert_eq!(promote(&tr), demote(&tab).reverse());
                let (back, dem_path) = demote_with_path(&pro);
                assert_eq!(back, tab);
                let mut reversed = path.cells().to_vec();
                reversed.reverse();
                assert_eq!(dem_path.cells(), &reversed[..]);
            }
        }
    }
}

#[test]
#[ignore = "slow suite: rotation operator invariants at n = 8"]
fn slow_rotation_suite_n8() {
    for shape in enumerate_shapes(8, ShapeFilter::All) {
        let all = enumerate_syt(&shape);
        for side in [Side::Se, Side::Nw] {
            let mut image: Vec<Vec<usize>> = Vec::with_capacity(all.len());
            for tab in &all {
                let r = rotate(tab, side);
                assert_eq!(rotate_inverse(&r, side), *tab);
                assert_eq!(rotate(&rotate_inverse(tab, side), side), *tab);
                image.push(r.row_reading_word().to_vec());
                check_decomposition(tab, side);
            }
            image.sort_unstable();
            let mut domain: Vec<Vec<usize>> =
                all.iter().map(|t| t.row_reading_word().to_vec()).collect();
            domain.sort_unstable();
            assert_eq!(image, domain, "{shape} {side:?} not a bijection");
        }
        for tab in &all {
            let se = rotate(tab, Side::Se);
            let nw = rotate(tab, Side::Nw);
            assert_eq!(tab.descent_set().restrict(6), se.descent_set().restrict(6));
            for i in 2..8 {
                assert_eq!(tab.has_descent(i), nw.has_descent(i));
            }
            let tt = tab.transpose();
            let tr = tab.reverse();
            assert_eq!(rotate(&tt, Side::Se), se.transpose());
            assert_eq!(rotate(&tt, Side::Nw), nw.transpose());
            assert_eq!(rotate(&tr, Side::Se), nw.reverse());
            assert_eq!(rotate(&tr, Side::Nw), se.reverse());
        }
    }
}

#[test]
#[ignore = "slow suite: path lemmas at n = 8"]
fn slow_path_lemmas_n8() {
    for shape in enumerate_shapes(8, ShapeFilter::NonRibbon) {
        let report = path_lemma_suite(&shape).unwrap();
        assert!(report.violations.is_empty(), "{shape}");
    }
}

#[test]
fn shape_round_trip_n8() {
    for n in 1..=8 {
        for shape in enumerate_shapes(n, ShapeFilter::All) {
            let back: SkewShape = shape.to_string().parse().unwrap();
            assert_eq!(&back, &*shape);
        }
    }
}

static SHAPES: OnceLock<Vec<Arc<SkewShape>>> = OnceLock::new();
static NON_RIBBON: OnceLock<Vec<Arc<SkewShape>>> = OnceLock::new();

fn small_shapes() -> &'static [Arc<SkewShape>] {
    SHAPES.get_or_init(|| {
        (1..=6)
            .flat_map(|n| enumerate_shapes(n, ShapeFilter::All))
            .collect()
    })
}

fn small_non_ribbon_shapes() -> &'static [Arc<SkewShape>] {
    NON_RIBBON.get_or_init(|| {
        (2..=6)
            .flat_map(|n| enumerate_shapes(n, ShapeFilter::NonRibbon))
            .collect()
    })
}

fn arb_tableau(shapes: fn() -> &'static [Arc<SkewShape>]) -> impl Strategy<Value = Tableau> {
    (0..shapes().len())
        .prop_flat_map(move |i| {
            let all = enumerate_syt(&shapes()[i]);
            let len = all.len();
            (Just(all), 0..len)
        })
        .prop_map(|(all, j)| all[j].clone())
}

proptest! {
    #[test]
    fn prop_tableau_text_round_trip(tab in arb_tableau(small_shapes)) {
        let back = Tableau::parse(&tab.to_string(), Some(tab.shape())).unwrap();
        prop_assert_eq!(back, tab);
    }

    #[test]
    fn prop_shape_identified_up_to_translation(
        tab in arb_tableau(small_shapes),
        dr in 0usize..3,
        dc in 0usize..3,
    ) {
        let translated = SkewShape::from_cells(
            tab.shape().cells().iter().map(|c| Cell::new(c.row + dr, c.col + dc)),
        )
        .unwrap();
        prop_assert_eq!(&translated, &**tab.shape());
    }

    #[test]
    fn prop_promotion_demotion_inverse(tab in arb_tableau(small_shapes)) {
        prop_assert_eq!(demote(&promote(&tab)), tab.clone());
        prop_assert_eq!(promote(&demote(&tab)), tab);
    }

    #[test]
    fn prop_rotation_round_trip(tab in arb_tableau(small_shapes), se in any::<bool>()) {
        let side = if se { Side::Se } else { Side::Nw };
        prop_assert_eq!(rotate_inverse(&rotate(&tab, side), side), tab.clone());
        prop_assert_eq!(rotate(&rotate_inverse(&tab, side), side), tab);
    }

    #[test]
    fn prop_phi_equivariance(tab in arb_tableau(small_non_ribbon_shapes)) {
        let n = tab.n();
        let phi_t = phi(&tab).unwrap();
        prop_assert_eq!(cdes(&phi_t).unwrap(), cdes(&tab).unwrap().shift_mod(1, n));
        prop_assert_eq!(phi_inverse(&phi_t).unwrap(), tab);
    }
}
