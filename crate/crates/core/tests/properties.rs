use proptest::prelude::*;
use seifert_core::block_matrix::{block_seifert_matrix, edge_side_sets, regions, PlaneBlock};
use seifert_core::circles::diagram_stats;
use seifert_core::conway::{conway_from_matrix, conway_skein, conway_skein_with, SkeinConfig, ZSubstitution};
use seifert_core::generate::{braid_closure, pretzel_pd, torus2};
use seifert_core::jones::kauffman_jones;
use seifert_core::theorem::analyze;
use seifert_core::matrix::{predicted_det_sign, row_dominant_check, weak_eps_signed_check};
use seifert_core::{BlockType, Diagram, IntMatrix};

fn pretzel() -> impl Strategy<Value = Diagram> {
    prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 2..=4).prop_map(|p| pretzel_pd(&p).unwrap())
}

fn braid() -> impl Strategy<Value = Diagram> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let g = prop_oneof![-(n as i64 - 1)..=-1, 1..=(n as i64 - 1)];
            (Just(n), prop::collection::vec(g, 1..=10))
        })
        .prop_map(|(n, w)| braid_closure(n, &w).unwrap())
}

fn torus() -> impl Strategy<Value = Diagram> {
    prop_oneof![-9i64..=-2, 2i64..=9].prop_map(|q| torus2(q).unwrap())
}

fn diagram() -> impl Strategy<Value = Diagram> {
    prop_oneof![pretzel(), torus(), braid()].prop_filter("connected", |d| d.is_connected() && d.crossing_count() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph_structure(d in diagram()) {
        let a = analyze(&d, None).unwrap();
        let g = &a.graph;
        prop_assert!(g.edges.iter().all(|e| a.vertex_signs[e.ends[0]] != a.vertex_signs[e.ends[1]]));
        for c in 0..d.crossing_count() {
            let [x, y] = a.nesting.crossing_circles[c];
            prop_assert!(a.nesting.height_relation(x, y).is_some());
        }
        prop_assert_eq!(g.rank(), d.crossing_count() as i64 - g.vertex_count() as i64 + 1);
        prop_assert_eq!(a.blocks.total_rank(), g.rank());
        for b in &a.blocks.blocks {
            match b.kind {
                BlockType::TypeI => prop_assert!(b.vertices.iter().all(|&v| g.height[v] == g.height[b.vertices[0]])),
                BlockType::TypeII { pan } => {
                    for &v in b.vertices.iter().filter(|&&v| v != pan) {
                        prop_assert_eq!(g.height[v], g.height[pan] + 1);
                        prop_assert!(a.nesting.contains(pan, v));
                    }
                }
            }
        }
    }

    #[test]
    fn faces_satisfy_euler(d in diagram()) {
        let (_, faces) = d.faces();
        prop_assert_eq!(faces, d.crossing_count() + 2);
    }

    #[test]
    fn switch_is_an_involution(d in diagram(), i in 0usize..64) {
        let i = i % d.crossing_count();
        let once = d.switch_crossing(i).unwrap();
        prop_assert_eq!(once.crossing_sign(i).unwrap(), -d.crossing_sign(i).unwrap());
        prop_assert_eq!(once.switch_crossing(i).unwrap(), d);
    }

    #[test]
    fn smoothing_keeps_circles(d in diagram(), i in 0usize..64) {
        let i = i % d.crossing_count();
        let before = diagram_stats(&d).unwrap();
        let smoothed = d.smooth_crossing(i).unwrap();
        // circles and nesting are only defined for connected diagrams
        prop_assume!(smoothed.is_connected());
        let after = diagram_stats(&smoothed).unwrap();
        prop_assert_eq!(after.s, before.s);
        prop_assert_eq!(after.c, before.c - 1);
    }

    #[test]
    fn colour_flip_transposes(d in diagram()) {
        let a = analyze(&d, None).unwrap();
        let flipped: Vec<_> = a.vertex_signs.iter().map(|s| -s).collect();
        for (b, rep) in a.block_reports.iter().enumerate() {
            let pb = PlaneBlock::of(&a.graph, &a.blocks, b);
            let rc = regions(&pb).unwrap();
            let ess = edge_side_sets(&pb, &rc, &flipped);
            let m = block_seifert_matrix(&pb, &rc, &ess).unwrap();
            prop_assert_eq!(m, rep.matrix.transpose());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn skein_is_order_independent(d in diagram().prop_filter("small", |d| d.crossing_count() <= 12), shift in 0usize..6, rev: bool) {
        let base = conway_skein(&d).unwrap();
        let cfg = SkeinConfig { basepoint_shift: shift, reverse_components: rev, ..SkeinConfig::default() };
        prop_assert_eq!(conway_skein_with(&d, &cfg).unwrap(), base);
    }

    #[test]
    fn mirror_inverts_jones(d in diagram().prop_filter("small", |d| d.crossing_count() <= 12)) {
        let f = kauffman_jones(&d).unwrap();
        prop_assert_eq!(kauffman_jones(&d.mirror()).unwrap(), f.invert_var());
    }

    #[test]
    fn single_block_matrix_gives_conway(d in diagram().prop_filter("small", |d| d.crossing_count() <= 12)) {
        let a = analyze(&d, None).unwrap();
        prop_assume!(a.blocks.len() == 1);
        let m = &a.block_reports[0].matrix;
        prop_assert_eq!(conway_from_matrix(m, ZSubstitution::default()).unwrap(), conway_skein(&d).unwrap());
    }
}

fn cofactor(m: &[Vec<i64>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let t = m[0][j] as i128 * cofactor(&minor);
            if j % 2 == 0 { t } else { -t }
        })
        .sum()
}

/// Off-diagonal entries of sign `eps`, diagonal of sign `-eps` at least as
/// large as the rest of its row.
fn weak_dominant() -> impl Strategy<Value = (Vec<Vec<i64>>, i8)> {
    (1usize..=6, prop_oneof![Just(1i8), Just(-1i8)]).prop_flat_map(|(n, eps)| {
        let rows = prop::collection::vec((prop::collection::vec(0i64..=3, n), 0i64..=2), n);
        rows.prop_map(move |rows| {
            let e = eps as i64;
            let m = rows
                .iter()
                .enumerate()
                .map(|(i, (vals, slack))| {
                    let mass: i64 = vals.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).sum();
                    (0..n).map(|j| if i == j { -e * (mass + slack) } else { e * vals[j] }).collect()
                })
                .collect();
            (m, eps)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn weak_dominant_determinant_sign((rows, eps) in weak_dominant()) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        prop_assert!(weak_eps_signed_check(&m, eps) && row_dominant_check(&m));
        let det = cofactor(&rows);
        prop_assert_eq!(m.det().unwrap().to_string(), det.to_string());
        let want = predicted_det_sign(eps, rows.len()) as i128;
        prop_assert!(det == 0 || det.signum() == want);
    }
}
