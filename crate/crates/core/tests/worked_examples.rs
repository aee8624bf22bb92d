use seifert_core::block_matrix::PlaneBlock;
use seifert_core::conway::{conway_from_matrix, conway_skein, ZSubstitution};
use seifert_core::diagram::parse_pd;
use seifert_core::generate::{connected_sum, pretzel_pd, torus2, wedge_pd};
use seifert_core::jones::{kauffman_jones, poly_stats};
use seifert_core::matrix::{eps_signed_check, is_sard_order, row_dominant_check};
use seifert_core::theorem::{
    analyze, classify_genus_one, cromwell_predict, torus_sum_check, verify_cromwell, DiscRole, Genus1Class,
};
use seifert_core::{BlockSign, BlockType, Diagram, Error, IntMatrix, OuterFace};

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

#[test]
fn trefoil_pipeline() {
    let d = parse_pd(TREFOIL).unwrap();
    let a = analyze(&d, None).unwrap();
    assert_eq!(a.rank(), 2);
    assert_eq!(a.blocks.len(), 1);
    assert_eq!(a.block_reports[0].matrix.det_i64().unwrap(), 1);
    let p = cromwell_predict(&a.blocks, &a.matrices()).unwrap();
    assert_eq!((p.degree, p.leading.to_string().as_str()), (2, "1"));
    let f = kauffman_jones(&d).unwrap();
    let st = poly_stats(&f).unwrap();
    assert_eq!((st.lowest2, st.span2), (-9, 8));
    let unknot = poly_stats(&kauffman_jones(&Diagram::unknot()).unwrap()).unwrap();
    assert_eq!(unknot.span2, 2);
}

#[test]
fn wedge_four_minus_two() {
    let d = pretzel_pd(&[4, -1, -1]).unwrap();
    assert_eq!(d, wedge_pd(4, -2).unwrap());
    let a = analyze(&d, None).unwrap();
    assert_eq!(a.blocks.len(), 2);
    let signs: Vec<BlockSign> = a.blocks.blocks.iter().map(|b| b.sign).collect();
    assert_eq!(signs, vec![BlockSign::Positive, BlockSign::Negative]);
    assert!(a.blocks.blocks.iter().all(|b| b.rank == 1 && matches!(b.kind, BlockType::TypeII { .. })));
    // the 4-cycle block gives [-2], the 2-cycle block [1]
    let mut dets: Vec<i64> = a.matrices().iter().map(|m| m.det_i64().unwrap()).collect();
    dets.sort_unstable();
    assert_eq!(dets, vec![-2, 1]);
    let p = cromwell_predict(&a.blocks, &a.matrices()).unwrap();
    assert_eq!((p.degree, p.leading.to_string().as_str()), (2, "-2"));
    assert_eq!(conway_skein(&d).unwrap().to_string(), "1 - 2*z^2");
    assert_eq!(classify_genus_one(&d).unwrap(), Genus1Class::Wedge { m: 4, k: -2 });
    assert_eq!(a.order.sigma.len(), 2);
}

fn log_is_consistent(a: &seifert_core::theorem::Analysis) -> bool {
    a.order.placement_log.iter().all(|p| {
        p.cut_disc.is_none()
            || p.at_front
            || (p.role == DiscRole::Pan && p.up)
            || (p.role != DiscRole::Pan && !p.up)
    })
}

#[test]
fn placement_log_under_outer_faces_and_reflection() {
    let d = wedge_pd(4, -2).unwrap();
    let m = d.mirror();
    for e in d.labels() {
        for outer in [OuterFace::left_of(e), OuterFace::right_of(e)] {
            let a = analyze(&d, Some(outer)).unwrap();
            assert!(log_is_consistent(&a), "{outer:?}");
            let mut order = a.order.sigma.clone();
            order.sort_unstable();
            assert_eq!(order, vec![0, 1]);
            // a reflection reverses the orientation of the plane, so the same
            // face now lies on the other side of `e`; every circle turns the
            // other way while heights and roles are kept
            let b = analyze(&m, Some(OuterFace { edge: e, left: !outer.left })).unwrap();
            assert!(log_is_consistent(&b));
            assert_eq!(a.graph.height, b.graph.height);
            assert!(a.graph.up.iter().zip(&b.graph.up).all(|(x, y)| x != y));
            for (p, q) in a.order.placement_log.iter().zip(&b.order.placement_log) {
                assert_eq!(p.role, q.role);
                if p.cut_disc.is_some() {
                    assert_ne!(p.up, q.up);
                }
            }
        }
    }
}

#[test]
fn torus_links_and_sums() {
    let t5 = torus2(-5).unwrap();
    let a = analyze(&t5, None).unwrap();
    let p = cromwell_predict(&a.blocks, &a.matrices()).unwrap();
    assert_eq!((p.degree, p.leading.to_string().as_str()), (4, "1"));
    assert!(verify_cromwell(&t5, 20).unwrap().pass);

    let t7 = analyze(&torus2(7).unwrap(), None).unwrap();
    let v = torus_sum_check(&t7).unwrap();
    assert!(v.all_two_vertex && v.holds);

    let granny = connected_sum(&torus2(3).unwrap(), &torus2(3).unwrap()).unwrap();
    let g = analyze(&granny, None).unwrap();
    assert_eq!(g.blocks.len(), 2);
    let v = torus_sum_check(&g).unwrap();
    assert!(v.all_two_vertex && v.holds && v.leading.to_string() == "1");

    let p333 = analyze(&pretzel_pd(&[3, 3, 3]).unwrap(), None).unwrap();
    let v = torus_sum_check(&p333).unwrap();
    assert_eq!(v.leading.to_string(), "7");
    assert!(!v.all_two_vertex && v.holds);
}

#[test]
fn genus_one_classification() {
    let d = pretzel_pd(&[3, 5, 7]).unwrap();
    assert_eq!(classify_genus_one(&d).unwrap(), Genus1Class::Theta { a: 3, b: 5, c: 7 });
    assert_eq!(conway_skein(&d).unwrap().to_string(), "1 + 18*z^2");
    // two components
    assert!(classify_genus_one(&pretzel_pd(&[2, 2, 1]).unwrap()).is_err());
    let mixed = pretzel_pd(&[3, -5, -7]).unwrap();
    assert!(matches!(verify_cromwell(&mixed, 20), Err(Error::Inhomogeneous(_))));
    assert_eq!(conway_skein(&pretzel_pd(&[3, -5, -5]).unwrap()).unwrap().to_string(), "1 - z^2");
    assert_eq!(pretzel_pd(&[3, -5, -5]).unwrap().crossing_count(), 13);
}

#[test]
fn single_block_matrix_route_matches_skein() {
    for d in [torus2(5).unwrap(), torus2(-6).unwrap(), pretzel_pd(&[3, 3, 5]).unwrap(), pretzel_pd(&[-1, -3, -3]).unwrap()] {
        let a = analyze(&d, None).unwrap();
        assert_eq!(a.blocks.len(), 1);
        let m = &a.block_reports[0].matrix;
        assert_eq!(conway_from_matrix(m, ZSubstitution::default()).unwrap(), conway_skein(&d).unwrap(), "{d:?}");
    }
}

#[test]
fn sard_example() {
    let m = IntMatrix::from_rows(&[vec![-3, 0, 3], vec![0, -2, 1], vec![1, 0, -2]]).unwrap();
    assert!(eps_signed_check(&m, 1) && row_dominant_check(&m));
    assert!(is_sard_order(&m, &[2, 0, 1]));
    assert!(!is_sard_order(&m, &[0, 1, 2]));
    assert_eq!(m.det_i64().unwrap(), -6);
}

#[test]
fn whole_graph_block_of_sum() {
    let d = connected_sum(&torus2(3).unwrap(), &torus2(-4).unwrap()).unwrap();
    let a = analyze(&d, None).unwrap();
    let whole = PlaneBlock::whole(&a.graph);
    assert_eq!(whole.sign(), BlockSign::Mixed);
    assert_eq!(a.blocks.cut_vertices.len(), 1);
}
