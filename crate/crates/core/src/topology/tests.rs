use super::*;

fn tower(k: SimplicialComplex) -> SubdivisionTower {
    SubdivisionTower::new(k)
}

#[test]
fn subdivision_counts() {
    let edge = SimplicialComplex::from_top_simplices(1, &[vec![0, 1]], false).unwrap();
    assert_eq!(barycentric_subdivide(&edge).complex().f_vector(), vec![3, 2]);
    let tri = SimplicialComplex::from_top_simplices(2, &[vec![0, 1, 2]], false).unwrap();
    assert_eq!(barycentric_subdivide(&tri).complex().f_vector()[2], 6);
    let circle = SimplicialComplex::from_top_simplices(1, &[vec![0, 1], vec![1, 2], vec![2, 0]], true).unwrap();
    assert_eq!(barycentric_subdivide(&circle).complex().f_vector(), vec![6, 6]);
}

#[test]
fn betti_of_fixtures() {
    assert_eq!(betti_numbers(&tetrahedron_boundary()).unwrap(), vec![1, 0, 1]);
    assert_eq!(betti_numbers(&seven_vertex_torus()).unwrap(), vec![1, 2, 1]);
    assert_eq!(betti_numbers(&grid_torus(3, 3)).unwrap(), vec![1, 2, 1]);
    assert_eq!(betti_numbers(&two_circles()).unwrap(), vec![2, 2]);
    assert_eq!(betti_numbers(&octahedron()).unwrap(), vec![1, 0, 1]);
    for p in 0..3 {
        assert!(homology(&seven_vertex_torus(), p, Coefficients::Integers).unwrap().torsion.is_empty());
    }
}

#[test]
fn torsion_of_projective_plane() {
    let rp2 = [
        [0, 1, 4], [0, 1, 5], [0, 2, 3], [0, 2, 4], [0, 3, 5],
        [1, 2, 3], [1, 2, 5], [1, 3, 4], [2, 4, 5], [3, 4, 5],
    ];
    let tops: Vec<Vec<usize>> = rp2.iter().map(|t| t.to_vec()).collect();
    assert_eq!(SimplicialComplex::from_top_simplices(2, &tops, true).unwrap_err(), TopologyError::NotOrientable);
    let k = SimplicialComplex::from_top_simplices(2, &tops, false).unwrap();
    let h1 = homology(&k, 1, Coefficients::Integers).unwrap();
    assert_eq!((h1.betti, h1.torsion), (0, vec![2]));
    assert_eq!(homology(&k, 2, Coefficients::Integers).unwrap().betti, 0);
}

#[test]
fn boundary_squares_to_zero() {
    let t = tower(seven_vertex_torus());
    for k in [t.k0(), t.k(), t.k_prime()] {
        for p in 1..k.dim() {
            for s in k.simplices(p + 1) {
                assert!(Chain::simplex(s, 1).boundary().boundary().is_zero());
            }
        }
        assert!(k.fundamental_cycle().unwrap().boundary().is_zero());
    }
}

#[test]
fn ancestry_is_consistent() {
    let t = tower(tetrahedron_boundary());
    for s in t.k_prime().simplices(2) {
        let (in_k, in_k0) = t.ancestry(s);
        assert!(t.k().contains(in_k) && t.k0().contains(in_k0));
        for &v in s {
            let carrier = t.second().carrier(v);
            assert!(carrier.iter().all(|w| in_k.contains(w)));
        }
    }
}

#[test]
fn top_dual_cell_is_a_barycenter() {
    let t = tower(tetrahedron_boundary());
    for s in t.k().simplices(2) {
        let d = dual_cell(&t, s).unwrap();
        let b = t.second().barycenter(s).unwrap();
        assert_eq!(d.chain.len(), 1);
        assert_eq!(d.chain.coefficient(&[b]).abs(), 1);
    }
}

#[test]
fn vertex_dual_is_a_polygon() {
    let t = tower(tetrahedron_boundary());
    for v in t.k().simplices(0) {
        let d = dual_cell(&t, v).unwrap().chain;
        let b = t.second().barycenter(v).unwrap();
        let link = t.k().cofaces(v).len();
        assert_eq!(d.len(), 2 * link);
        assert!(d.terms().all(|(s, e)| s[0] == b && e.abs() == 1));
        let boundary = d.boundary();
        assert!(boundary.terms().all(|(s, _)| !s.contains(&b)));
    }
}

#[test]
fn edge_dual_crosses_at_barycenter() {
    let t = tower(tetrahedron_boundary());
    for e in t.k().simplices(1) {
        let d = dual_cell(&t, e).unwrap().chain;
        let b = t.second().barycenter(e).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.terms().all(|(s, _)| s[0] == b));
        let edge_points = t.second().subdivide_chain(&Chain::simplex(e, 1)).support_vertices();
        assert_eq!(d.support_vertices().intersection(&edge_points).copied().collect::<Vec<_>>(), vec![b]);
        assert_eq!(d.boundary().len(), 2);
    }
}

#[test]
fn dual_cells_need_a_manifold() {
    let tri = SimplicialComplex::from_top_simplices(2, &[vec![0, 1, 2]], true).unwrap();
    let t = tower(tri);
    assert!(matches!(dual_cell(&t, &[0]), Err(TopologyError::NotManifold(_))));
}

#[test]
fn self_intersection_is_barycenter() {
    for k in [tetrahedron_boundary(), seven_vertex_torus()] {
        assert!(dual_self_intersections_hold(&tower(k)).unwrap());
    }
}

#[test]
fn disjoint_product_vanishes() {
    let t = tower(grid_torus(3, 3));
    let far = t.k().simplices(1).iter().find(|e| !e.contains(&0)).unwrap().clone();
    assert!(intersection_product(&t, &[0], &far).unwrap().is_zero());
}

#[test]
fn product_is_choice_independent() {
    let t = tower(tetrahedron_boundary());
    let k = t.k();
    for s2 in k.simplices(2).iter().take(4).chain(k.simplices(1).iter().take(4)) {
        for s1 in k.simplices(0).iter().chain(k.simplices(1)).filter(|s| s.iter().all(|v| s2.contains(v))) {
            let canonical = intersection_product(&t, s1, s2).unwrap();
            let d2 = dual_cell(&t, s2).unwrap().chain;
            for (t1, e1) in dual_cell_choices(&t, s1).unwrap() {
                assert_eq!(dual_cell_with(&t, s1, &t1, e1).unwrap(), dual_cell(&t, s1).unwrap());
                for (t2, e2) in d2.terms() {
                    let p = intersection_product_with(&t, s1, (&t1, e1), s2, (t2, e2)).unwrap();
                    assert_eq!(p, canonical);
                }
            }
        }
    }
}

#[test]
fn boundary_formula_on_sphere() {
    let t = tower(tetrahedron_boundary());
    let k = t.k();
    for s2 in k.simplices(2).iter().take(6).chain(k.simplices(1).iter().take(6)) {
        for p in 0..s2.len() {
            for s1 in k.simplices(p).iter().filter(|s| s.iter().all(|v| s2.contains(v))) {
                let (lhs, rhs) = boundary_formula_sides(&t, s1, s2).unwrap();
                assert_eq!(lhs, rhs, "{:?} {:?}", s1, s2);
            }
        }
    }
}

#[test]
fn dual_boundary_decomposes() {
    let t = tower(seven_vertex_torus());
    for p in 0..=2 {
        for s in t.k().simplices(p).iter().take(5) {
            let parts = dual_boundary(&t, s).unwrap();
            if p == 2 {
                assert!(parts.is_empty());
            } else {
                assert!(parts.iter().all(|(_, c)| c.abs() == 1));
            }
        }
    }
}

#[test]
fn unit_cochain_maps_to_fundamental_cycle() {
    let t = tower(tetrahedron_boundary());
    let unit = unit_dual_cochain(&t).unwrap();
    assert_eq!(poincare_dual(&t, &unit).unwrap(), t.fundamental_cycle_k().unwrap());
    assert!(dual_coboundary(&t, &unit).unwrap().values().next().is_none());
}

#[test]
fn top_cochain_maps_to_a_point() {
    let t = tower(tetrahedron_boundary());
    let v = t.k().simplices(0)[0].clone();
    let u = DualCochain::new(2, [(v.clone(), 1)]);
    let pd = poincare_dual(&t, &u).unwrap();
    assert_eq!(pd, Chain::simplex(&v, 1));
    assert!(!is_boundary(t.k(), &pd).unwrap());
}

#[test]
fn alexander_dual_of_a_vertex() {
    let t = tower(tetrahedron_boundary());
    let s = t.k0().subcomplex(&[vec![0]]).unwrap();
    let v = vec![t.first().barycenter(&[0]).unwrap()];
    let u = DualCochain::new(2, [(v.clone(), 1)]);
    assert_eq!(alexander_dual(&t, &s, &u).unwrap(), Chain::simplex(&v, 1));
    let other = vec![t.first().barycenter(&[1]).unwrap()];
    let bad = DualCochain::new(2, [(other, 1)]);
    assert!(matches!(alexander_dual(&t, &s, &bad), Err(TopologyError::SupportViolation(_))));
}

#[test]
fn alexander_dual_of_the_equator() {
    let t = tower(octahedron());
    let equator = octahedron_equator();
    let s = t.k0().subcomplex(&equator.terms().map(|(s, _)| s.clone()).collect::<Vec<_>>()).unwrap();
    let cycle = t.first().subdivide_chain(&equator);
    let u = DualCochain::new(1, cycle.terms().map(|(s, e)| (s.clone(), e)));
    assert!(dual_coboundary(&t, &u).unwrap().values().all(|(_, v)| v == 0));
    let out = alexander_dual(&t, &s, &u).unwrap();
    assert!(out.boundary().is_zero());
    assert_eq!(t.first().push_down(&out), equator);
    let whole = t.k0().subcomplex(t.k0().simplices(2)).unwrap();
    assert_eq!(alexander_dual(&t, &whole, &u).unwrap(), poincare_dual(&t, &u).unwrap());
}

#[test]
fn fundamental_class_is_the_identity() {
    let t = tower(grid_torus(3, 3));
    let (a, _) = grid_torus_cycles(3, 3);
    let s1 = t.k0().subcomplex(&a.terms().map(|(s, _)| s.clone()).collect::<Vec<_>>()).unwrap();
    let whole = t.k0().subcomplex(t.k0().simplices(2)).unwrap();
    let sa = t.first().subdivide_chain(&a);
    let r = localized_intersection(&t, &s1, &whole, &sa, &t.fundamental_cycle_k().unwrap()).unwrap();
    assert!(homologous_in_k0(&t, &r.class_in_k0, &a).unwrap());
}

#[test]
fn torus_pairing() {
    let t = tower(grid_torus(3, 3));
    let (a, b) = grid_torus_cycles(3, 3);
    let m = pairing_matrix(&t, &[a, b]).unwrap();
    assert_eq!(m[0][0], 0);
    assert_eq!(m[1][1], 0);
    assert_eq!(m[0][1].abs(), 1);
    assert_eq!(m[0][1], -m[1][0]);
}

#[test]
fn disjoint_supports_give_zero() {
    let t = tower(grid_torus(3, 3));
    let (a, _) = grid_torus_cycles(3, 3);
    let shifted = Chain::from_terms(1, (0..3).map(|i| (vec![((i % 3) * 3) + 1, (((i + 1) % 3) * 3) + 1], 1)));
    assert_eq!(intersection_pairing(&t, &a, &shifted).unwrap(), 0);
}

#[test]
fn json_round_trip() {
    let k = seven_vertex_torus();
    let j = k.to_json();
    let back = j.to_complex().unwrap();
    assert_eq!(back.fundamental_cycle(), k.fundamental_cycle());
    let r = homology_report(&k).unwrap();
    assert_eq!(r["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn dual_complex_has_the_same_betti_numbers() {
    for k in [tetrahedron_boundary(), seven_vertex_torus()] {
        let b = betti_numbers(&k).unwrap();
        assert_eq!(dual_betti_numbers(&tower(k)).unwrap(), b);
    }
}

#[test]
fn poincare_dual_is_a_chain_map_up_to_sign() {
    let t = tower(tetrahedron_boundary());
    for q in 0..2 {
        for s in t.k().simplices(2 - q).iter().take(8) {
            let u = DualCochain::new(q, [(s.clone(), 1)]);
            let lhs = poincare_dual(&t, &u).unwrap().boundary();
            let rhs = poincare_dual(&t, &dual_coboundary(&t, &u).unwrap()).unwrap();
            assert!(lhs == rhs || lhs == rhs.scale(-1), "{:?}", s);
        }
    }
}
