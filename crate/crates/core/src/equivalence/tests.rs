use super::*;
use crate::graph::{complete, cycle, fixture, path, Fixture};

fn pair(a: &str, x: &str, b: &str, y: &str) -> PairVerdict {
    let (f, g): (Fixture, Fixture) = (fixture(a).unwrap(), fixture(b).unwrap());
    classify_pair(&f.graph, f.mark(x).unwrap(), &g.graph, g.mark(y).unwrap()).unwrap()
}

#[test]
fn harary_palmer_pair() {
    let v = pair("hp", "x", "hp", "y");
    assert!(v.strongly() && v.pseudosimilar() && v.cospectral);
    let f = fixture("hp").unwrap();
    let (x, y) = (f.mark("x").unwrap(), f.mark("y").unwrap());
    assert!(pseudosimilar(&f.graph, x, y).unwrap());
    assert!(!similar(&f.graph, x, y).unwrap());
}

#[test]
fn schwenk_pair() {
    let v = pair("schwenk", "x", "schwenk", "y");
    assert!(v.closed_walk_eq && !v.walk_eq && v.cospectral);
    let f = fixture("schwenk").unwrap();
    assert!(cospectral_vertices(&f.graph, 1, 4).unwrap());
}

#[test]
fn walk_only_pairs() {
    let v = pair("walkonly14", "x", "walkonly14", "y");
    assert!(v.walk_eq && !v.closed_walk_eq);
    let v = pair("sporadic13_T", "x", "sporadic13_S", "y");
    assert!(v.walk_eq && !v.closed_walk_eq && !v.removal_similar);
}

#[test]
fn cross_size_pairs() {
    let v = pair("diststrong_T11", "x", "diststrong_S10", "y");
    assert!(v.strongly() && !v.similar);
    let v = pair("p7", "x", "y5", "y");
    assert!(v.closed_walk_eq && !v.walk_eq);
    let v = pair("dist_T8", "x", "dist_S11", "y");
    assert!(v.walk_eq && !v.closed_walk_eq);
    let v = pair("amb12_T", "x", "amb12_S", "y");
    assert!(v.strongly() && !v.removal_similar);
}

#[test]
fn identical_rooted_graphs() {
    let g = cycle(5).unwrap();
    let v = classify_pair(&g, 2, &g, 2).unwrap();
    assert!(v.walk_eq && v.closed_walk_eq && v.removal_similar && v.similar && v.cospectral);
    let k1 = path(1).unwrap();
    assert!(classify_pair(&k1, 0, &k1, 0).unwrap().similar);
}

#[test]
fn small_similarity() {
    let p4 = path(4).unwrap();
    assert!(similar(&p4, 0, 3).unwrap());
    let p3 = path(3).unwrap();
    assert!(removal_similar(&p3, 0, 2).unwrap() && !pseudosimilar(&p3, 0, 2).unwrap());
    assert!(cospectral_vertices(&p3, 0, 2).unwrap());
}

#[test]
fn disconnected_rejected() {
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert!(matches!(walk_equivalent(&g, 0, &g, 1), Err(Error::Disconnected(_))));
}

#[test]
fn lattice_violations_are_integrity_errors() {
    assert!(PairVerdict::new(false, true, true, true, true).is_err());
    assert!(PairVerdict::new(true, true, false, true, true).is_err());
    assert!(PairVerdict::new(true, false, false, false, true).is_err());
    assert!(PairVerdict::new(true, true, true, false, true).is_ok());
}

#[test]
fn triple_labelings() {
    let c5 = cycle(5).unwrap();
    assert_eq!(canonical_triple_labeling(&c5).collisions, vec![vec![0, 1, 2, 3, 4]]);
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 5)]).unwrap();
    let l = canonical_triple_labeling(&g);
    assert!(l.collisions.iter().all(|c| c.len() >= 2));
    let k4 = complete(4).unwrap();
    assert!(!canonical_triple_labeling(&k4).is_canonical());
}

#[test]
fn collisions_never_cross_degree_classes() {
    // A simple graph on n >= 2 vertices always repeats a degree, so the
    // closest check is that r^2 alone already separates degree classes.
    let g = Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3)],
    )
    .unwrap();
    let l = canonical_triple_labeling(&g);
    for class in &l.collisions {
        assert!(class.windows(2).all(|w| g.degree(w[0]) == g.degree(w[1])));
    }
    assert_eq!(l.collisions, vec![vec![2, 3]]);
}
