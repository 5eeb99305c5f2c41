use walklab::lab::{verify_krebs_verbitsky, verify_part3_bound, verify_pn_yn};

#[test]
fn path_versus_y_graph() {
    for n in 5..=40 {
        let r = verify_pn_yn(n).unwrap();
        assert_eq!((r.agree_through, r.first_difference), (2 * n - 5, Some(2 * n - 4)));
        r.ensure().unwrap();
    }
}

#[test]
fn krebs_verbitsky_thresholds() {
    for (s, t) in [(3, 2), (3, 3), (6, 2), (9, 3), (2, 4)] {
        let r = verify_krebs_verbitsky(s, t).unwrap();
        assert_eq!(r.first_difference, Some(2 * t * (s + 4) - 1));
        r.ensure().unwrap();
    }
}

#[test]
fn padded_pairs() {
    let r = verify_part3_bound(50).unwrap();
    assert_eq!(r.predicted_agree, None);
    r.ensure().unwrap();
    let r = verify_part3_bound(100).unwrap();
    assert!(r.agree_through >= 39);
    r.ensure().unwrap();
}
