use kbgp::approx4::{try_bridge1, try_bridge2, try_bridge3};
use kbgp::*;

fn case_spec(f: Family, n: usize, seed: u64) -> GeneratorSpec {
    GeneratorSpec::new(f, n, seed)
}

#[test]
fn random_connected_golden() {
    let g = generate(&"random_connected:10:42".parse().unwrap()).unwrap();
    assert_eq!(write_edge_list(&g), include_str!("golden/random_connected_10_42.edges"));
}

#[test]
fn every_family_is_connected_and_sized() {
    for f in Family::ALL {
        for n in [f.min_n().max(15), 22, 31] {
            for seed in 0..4 {
                let g = generate(&GeneratorSpec::new(f, n, seed)).unwrap();
                assert_eq!(g.n(), n);
            }
        }
    }
}

/// The stall an instance was built around, with the hub of the unstructured
/// large part filled in when it bisects as a star.
fn stall_with_hubs(f: Family, n: usize, seed: u64) -> Option<(Graph, Partition, StallStructure4)> {
    let (g, p) = case_instance(&case_spec(f, n, seed)).unwrap();
    let (mut s, early) = classify_case(&g, &p).unwrap();
    assert!(early.is_none());
    let parts = p.parts();
    match s.case {
        1 => {
            let Bisection::Star(v) = bipartition_or_star(&g, &parts[2]).unwrap() else { return None };
            s.v = Some(v);
            s.comps3 = g.components_of_subset(&parts[2].without(v));
        }
        2 => {
            let Bisection::Star(u) = bipartition_or_star(&g, &parts[3]).unwrap() else { return None };
            s.u = Some(u);
            s.comps4 = g.components_of_subset(&parts[3].without(u));
        }
        _ => {}
    }
    Some((g, p, s))
}

fn largest_off(g: &Graph, keep: &VertexSet, u: usize, v: usize) -> usize {
    g.components_of_subset(&keep.without(u).without(v)).iter().map(VertexSet::len).max().unwrap_or(0)
}

#[test]
fn bridges_improve_or_stall_with_small_pieces() {
    for f in [Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3] {
        let (mut fired, mut stalled) = (0, 0);
        for n in [15, 18, 24, 33] {
            for seed in 0..40 {
                let Some((g, p, s)) = stall_with_hubs(f, n, seed) else { continue };
                let out = match s.case {
                    1 => try_bridge1(&g, &p, &s),
                    2 => try_bridge2(&g, &p, &s),
                    _ => try_bridge3(&g, &p, &s),
                }
                .unwrap();
                let parts = p.parts();
                let (s1, s2) = (parts[0].len(), parts[1].len());
                match out {
                    Some(q) => {
                        fired += 1;
                        assert_eq!(check_feasible(&g, q.parts()), Ok(()));
                        assert!(better_than(&q.rank(), &p.rank()).unwrap(), "{f} {n} {seed}");
                    }
                    None => {
                        stalled += 1;
                        let (u, v) = (s.u.unwrap(), s.v.unwrap());
                        let keep = if s.case == 1 { g.vertices() } else { parts[2].union(&parts[3]) };
                        let cap = if s.case == 3 { s1 + s2 } else { (3 * s1).max(s2) };
                        assert!(largest_off(&g, &keep, u, v) <= cap, "{f} {n} {seed}");
                    }
                }
            }
        }
        assert!(fired > 0 && stalled > 0, "{f}: fired {fired}, stalled {stalled}");
    }
}

#[test]
fn bridge_without_cross_edges_does_nothing() {
    // Case 3 shape with the two hub sides joined only through the hubs.
    let (u, v) = (10, 2);
    let mut e = vec![(0, v), (1, u), (v, u)];
    for c in 3..10 {
        e.push((v, c));
    }
    for c in 11..18 {
        e.push((u, c));
    }
    let g = Graph::new(18, &e).unwrap();
    let p = Partition::from_lists(&g, &[vec![0], vec![1], (2..10).collect(), (10..18).collect()]).unwrap();
    let (s, _) = classify_case(&g, &p).unwrap();
    assert_eq!(s.case, 3);
    assert_eq!(try_bridge3(&g, &p, &s).unwrap(), None);
}

#[test]
fn approx4_from_case_instances_certifies() {
    for f in [Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3] {
        for seed in 0..20 {
            let (g, p) = case_instance(&case_spec(f, 30, seed)).unwrap();
            let sol = approx4_from(&g, p).unwrap();
            assert!(verify_certificate(&g, &sol.partition, &sol.certificate).is_ok(), "{f} {seed}");
        }
    }
}
