use proptest::prelude::*;
use walklab::algebra::{min_recurrence, poly_divides, rats};
use walklab::equivalence::{
    closed_walk_equivalent, cospectral_vertices, removal_similar, strongly_walk_equivalent, walk_equivalent,
};
use walklab::graph::{
    coalescence, edge_join, from_graph6, graftage, hp_construct, random_gnp, random_hp_input, random_tree, to_graph6,
};
use walklab::walk::{closed_triple, closed_walk_counts, graph_char_poly, walk_counts, walk_rows};
use walklab::RootedGraph;

fn rooted_tree(n: usize, seed: u64, root: usize) -> RootedGraph {
    RootedGraph::new(random_tree(n, seed).unwrap(), root % n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hp_output_is_removal_similar(seed in any::<u64>()) {
        let inp = random_hp_input(15, seed).unwrap();
        let t = hp_construct(&inp.u, &inp.alpha, inp.v).unwrap();
        let (x, y) = (t.mark("x").unwrap(), t.mark("y").unwrap());
        prop_assert!(t.graph.is_tree());
        prop_assert!(removal_similar(&t.graph, x, y).unwrap());
        prop_assert!(strongly_walk_equivalent(&t.graph, x, &t.graph, y).unwrap());
    }

    #[test]
    fn coalescence_keeps_strong_equivalence(seed in any::<u64>(), n in 1usize..9, tseed in any::<u64>(), root in 0usize..9) {
        let inp = random_hp_input(15, seed).unwrap();
        let l = hp_construct(&inp.u, &inp.alpha, inp.v).unwrap();
        let m = rooted_tree(n, tseed, root);
        let a = coalescence(&l.rooted("x").unwrap(), &m);
        let b = coalescence(&l.rooted("y").unwrap(), &m);
        prop_assert!(strongly_walk_equivalent(&a.graph, a.root, &b.graph, b.root).unwrap());
    }

    #[test]
    fn graftage_keeps_strong_equivalence(seed in any::<u64>(), n in 1usize..9, tseed in any::<u64>(), root in 0usize..9) {
        let inp = random_hp_input(13, seed).unwrap();
        let l = hp_construct(&inp.u, &inp.alpha, inp.v).unwrap();
        let (gx, gy) = (l.rooted("x").unwrap(), l.rooted("y").unwrap());
        let a = coalescence(&graftage(&gx, &gy), &rooted_tree(n, tseed, root));
        prop_assert!(strongly_walk_equivalent(&a.graph, gx.root, &a.graph, l.graph.n() + gy.root).unwrap());
    }

    #[test]
    fn edge_join_reflects_closed_and_strong(n in 1usize..9, m in 1usize..9, s1 in any::<u64>(), s2 in any::<u64>(), r1 in 0usize..9, r2 in 0usize..9) {
        let (g, h) = (rooted_tree(n, s1, r1), rooted_tree(m, s2, r2));
        let (j, v, u) = edge_join(&g, &h);
        prop_assert_eq!(
            closed_walk_equivalent(&g.graph, g.root, &h.graph, h.root).unwrap(),
            closed_walk_equivalent(&j, v, &j, u).unwrap()
        );
        prop_assert_eq!(
            strongly_walk_equivalent(&g.graph, g.root, &h.graph, h.root).unwrap(),
            strongly_walk_equivalent(&j, v, &j, u).unwrap()
        );
    }

    #[test]
    fn walk_rows_follow_relabeling(n in 1usize..12, seed in any::<u64>(), p in 0.1f64..0.9, rot in 0usize..12) {
        let g = random_gnp(n, p, seed).unwrap();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let h = g.relabel(&perm).unwrap();
        let (rg, rh) = (walk_rows(&g, 2 * n), walk_rows(&h, 2 * n));
        for v in 0..n {
            prop_assert_eq!(&rg[v], &rh[perm[v]]);
        }
    }

    #[test]
    fn row_minimal_polynomials_divide_char_poly(n in 1usize..9, seed in any::<u64>(), p in 0.2f64..0.8) {
        let g = random_gnp(n, p, seed).unwrap();
        let cp = graph_char_poly(&g);
        for v in 0..n {
            for row in [walk_counts(&g, v, 2 * n).unwrap().counts, closed_walk_counts(&g, v, 2 * n).unwrap().counts] {
                let fit = min_recurrence(&rats(&row[..2 * n]), n).unwrap();
                let chi = fit.spec().expect("order at most n").charpoly().clone();
                prop_assert!(poly_divides(&chi, &cp).unwrap());
            }
        }
    }

    #[test]
    fn cospectral_iff_closed_walk_equivalent(n in 2usize..8, seed in any::<u64>(), p in 0.2f64..0.8) {
        let g = random_gnp(n, p, seed).unwrap();
        for x in 0..n {
            for y in x + 1..n {
                let closed = closed_walk_counts(&g, x, 2 * n).unwrap().counts == closed_walk_counts(&g, y, 2 * n).unwrap().counts;
                prop_assert_eq!(cospectral_vertices(&g, x, y).unwrap(), closed);
            }
        }
    }

    #[test]
    fn removal_similar_implies_walk_equivalent(n in 2usize..9, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        for x in 0..n {
            for y in x + 1..n {
                if removal_similar(&t, x, y).unwrap() {
                    prop_assert!(walk_equivalent(&t, x, &t, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn triples_match_closed_counts(n in 1usize..30, seed in any::<u64>()) {
        let g = random_gnp(n, 0.5, seed).unwrap();
        for v in 0..n {
            let t = closed_triple(&g, v).unwrap();
            let r = closed_walk_counts(&g, v, 4).unwrap().counts;
            prop_assert_eq!([r[2].clone(), r[3].clone(), r[4].clone()], [t.r2.into(), t.r3.into(), t.r4.into()]);
        }
    }

    #[test]
    fn graph6_round_trip(n in 1usize..40, seed in any::<u64>(), p in 0.0f64..1.0) {
        let g = random_gnp(n, p, seed).unwrap();
        prop_assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }
}
