use super::*;
use crate::graph::{complete, cycle, fixture, fixture_names, path, random_gnp, random_tree, star};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn small_walk_counts() {
    let k2 = complete(2).unwrap();
    assert_eq!(walk_counts(&k2, 1, 5).unwrap().counts, ints(&[1; 6]));
    let p3 = path(3).unwrap();
    assert_eq!(walk_counts(&p3, 1, 3).unwrap().counts, ints(&[1, 2, 2, 4]));
    let k3 = complete(3).unwrap();
    assert_eq!(closed_walk_counts(&k3, 0, 3).unwrap().counts, ints(&[1, 0, 2, 2]));
    assert_eq!(walk_counts_between(&k2, 0, 1, 4).unwrap(), ints(&[0, 1, 0, 1, 0]));
}

#[test]
fn dist_t8_sequence() {
    let f = fixture("dist_T8").unwrap();
    let w = walk_counts(&f.graph, f.mark("x").unwrap(), 11).unwrap();
    assert_eq!(
        w.counts,
        ints(&[1, 2, 5, 8, 20, 32, 80, 128, 320, 512, 1280, 2048])
    );
}

#[test]
fn main_polynomials() {
    for n in 1..6 {
        assert_eq!(
            main_polynomial(&complete(n).unwrap()).unwrap(),
            Poly::from_i64(&[-(n as i64 - 1), 1])
        );
    }
    let t = fixture("dist_T8").unwrap().graph;
    assert_eq!(main_polynomial(&t).unwrap().to_string(), "z^4 - z^3 - 4z^2 + 4z");
    let s = fixture("dist_S11").unwrap().graph;
    assert_eq!(main_polynomial(&s).unwrap().to_string(), "z^5 - 6z^3 + 8z");
}

#[test]
fn triples_by_hand() {
    let t = |g: &Graph, v| {
        let c = closed_triple(g, v).unwrap();
        (c.r2, c.r3, c.r4)
    };
    assert_eq!(t(&complete(4).unwrap(), 0), (3, 6, 21));
    assert_eq!(t(&star(4).unwrap(), 0), (4, 0, 16));
    assert_eq!(t(&path(2).unwrap(), 0), (1, 0, 1));
}

#[test]
fn triples_match_closed_counts() {
    for seed in 0..100 {
        let n = 2 + (seed % 39) as usize;
        let g = random_gnp(n, 0.5, seed).unwrap();
        let rows = closed_walk_rows(&g, 4);
        for (v, row) in rows.iter().enumerate() {
            let c = closed_triple(&g, v).unwrap();
            assert_eq!(row[2..], ints(&[c.r2 as i64, c.r3 as i64, c.r4 as i64])[..]);
        }
    }
}

#[test]
fn return_decompositions() {
    let k2 = complete(2).unwrap();
    let r = closed_walk_counts(&k2, 0, 6).unwrap();
    assert_eq!(first_return_counts(&r).unwrap(), ints(&[0, 0, 1, 0, 0, 0, 0]));
    assert_eq!(never_return_counts(&k2, 0, 4).unwrap(), ints(&[1, 1, 0, 0, 0]));
    let c3 = cycle(3).unwrap();
    let bar = first_return_counts(&closed_walk_counts(&c3, 0, 5).unwrap()).unwrap();
    assert_eq!(bar[2], BigInt::from(2));
    assert_eq!(bar[3], BigInt::from(2));

    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert_eq!(reaches_counts(&g, 2, 4).unwrap(), ints(&[1, 0, 0, 0, 0]));

    let bad = ClosedWalkProfile {
        counts: ints(&[1, 1, 2]),
    };
    assert!(matches!(first_return_counts(&bad), Err(Error::Integrity(_))));
}

#[test]
fn never_return_convolution_reconstructs_walks() {
    for seed in 0..100 {
        let t = random_tree(2 + (seed % 15) as usize, seed).unwrap();
        for v in 0..t.n() {
            let w = walk_counts(&t, v, 12).unwrap().counts;
            let r = closed_walk_counts(&t, v, 12).unwrap().counts;
            let bar = never_return_counts(&t, v, 12).unwrap();
            for k in 0..=12 {
                let sum: BigInt = (0..=k).map(|s| &r[s] * &bar[k - s]).sum();
                assert_eq!(sum, w[k]);
            }
        }
    }
}

#[test]
fn first_return_identity_low_order() {
    let g = fixture("hp").unwrap().graph;
    for v in 0..g.n() {
        let r = closed_walk_counts(&g, v, 10).unwrap();
        let bar = first_return_counts(&r).unwrap();
        assert_eq!(bar[2], r.counts[2]);
        assert_eq!(bar[3], r.counts[3]);
    }
}

#[test]
fn oracle_equivalence_on_fixtures() {
    for name in fixture_names() {
        let g = fixture(name).unwrap().graph;
        if g.n() > 12 {
            continue;
        }
        let w = walk_rows(&g, 8);
        let r = closed_walk_rows(&g, 8);
        for v in 0..g.n() {
            for k in 0..=8 {
                assert_eq!(brute_force_walks(&g, v, k).unwrap(), w[v][k], "{name}");
                assert_eq!(brute_force_closed(&g, v, k).unwrap(), r[v][k], "{name}");
            }
        }
    }
    assert!(matches!(brute_force_walks(&path(3).unwrap(), 0, 13), Err(Error::Budget(_))));
    assert!(matches!(brute_force_walks(&path(33).unwrap(), 0, 3), Err(Error::Budget(_))));
}

#[test]
fn trace_identity() {
    for name in fixture_names() {
        let g = fixture(name).unwrap().graph;
        let r = closed_walk_rows(&g, 10);
        let a = g.adjacency_matrix();
        let mut pow = ExactMatrix::identity(g.n());
        for k in 0..=10 {
            let trace: Rational = (0..g.n()).map(|i| pow.get(i, i).clone()).sum();
            let sum: BigInt = r.iter().map(|row| row[k].clone()).sum();
            assert_eq!(trace, rat(sum));
            let mut next = ExactMatrix::zeros(g.n(), g.n());
            for i in 0..g.n() {
                for j in 0..g.n() {
                    let x: Rational = (0..g.n()).map(|l| pow.get(i, l) * a.get(l, j)).sum();
                    next.set(i, j, x);
                }
            }
            pow = next;
        }
    }
}

#[test]
fn big_counts_fall_back_to_big_integers() {
    let g = complete(30).unwrap();
    let w = walk_counts(&g, 0, 40).unwrap().counts;
    assert_eq!(w[40], BigInt::from(29).pow(40));
}

#[test]
fn walk_matrix_columns() {
    let g = path(4).unwrap();
    let m = walk_matrix(&g, &[0]).unwrap();
    assert_eq!(m.columns[0], ints(&[1, 0, 0, 0]));
    assert_eq!(m.columns[1], ints(&[0, 1, 0, 0]));
    assert_eq!(m.columns[3], ints(&[0, 2, 0, 1]));
    assert!(walk_matrix(&g, &[]).is_err());
}

#[test]
fn char_poly_of_small_graphs() {
    assert_eq!(graph_char_poly(&path(1).unwrap()).to_string(), "z");
    assert_eq!(graph_char_poly(&path(2).unwrap()).to_string(), "z^2 - 1");
    assert_eq!(graph_char_poly(&path(3).unwrap()).to_string(), "z^3 - 2z");
}

#[test]
fn export_formats() {
    let rows = walk_rows(&path(2).unwrap(), 1);
    assert_eq!(profile_csv(&rows), "vertex,k,count\n0,0,1\n0,1,1\n1,0,1\n1,1,1\n");
    let j = serde_json::to_string(&ProfileJson::new(0, &rows[0])).unwrap();
    assert_eq!(j, r#"{"vertex":0,"counts":["1","1"]}"#);
}
