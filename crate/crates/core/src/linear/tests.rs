use super::*;
use crate::caps::Caps;
use crate::matroid::{complete_graphic, epsilon, is_isomorphic, is_simple, uniform, RankOracle};

#[test]
fn pg_sizes() {
    assert_eq!(projective_geometry(3, 2).unwrap().len(), 7);
    assert_eq!(projective_geometry(3, 3).unwrap().len(), 13);
    assert_eq!(projective_geometry(4, 2).unwrap().len(), 15);
    assert_eq!(projective_geometry(2, 4).unwrap().len(), 5);
    assert_eq!(projective_geometry(1, 5).unwrap().len(), 1);
    assert!(projective_geometry(12, 2).unwrap_err().is_cap());
    assert!(projective_geometry(3, 6).is_err());
}

#[test]
fn pg_line_is_u2q1() {
    let l = projective_geometry(2, 3).unwrap().into_handle();
    assert!(is_isomorphic(&l, &uniform(2, 4).unwrap(), &Caps::default()).unwrap());
}

#[test]
fn ag_is_simple() {
    let a = affine_geometry(3, 3).unwrap().into_handle();
    assert_eq!(a.size(), 9);
    assert_eq!(a.rank(), 3);
    assert!(is_simple(&a));
}

#[test]
fn crown_small() {
    let c = crown(4, 2, 1).unwrap();
    assert_eq!(c.len(), 3 * 2 + 1);
    let c = crown(3, 3, 0).unwrap();
    assert_eq!(c.len(), 3);
    let full = crown(3, 2, 3).unwrap();
    assert_eq!(full.len(), 7);
    assert!(crown(2, 2, 3).is_err());
    let h = crown(5, 3, 2).unwrap().into_handle();
    assert_eq!(h.rank(), 5);
    assert!(is_simple(&h));
}

#[test]
fn clique_rep_matches_graphic() {
    for q in [2, 3, 5] {
        let rep = graphic_clique_rep(4, q).unwrap().into_handle();
        assert!(is_isomorphic(&rep, &complete_graphic(4), &Caps::default()).unwrap());
    }
}

#[test]
fn parallel_connection_rank() {
    let a = affine_geometry(3, 3).unwrap();
    let p = parallel_connection(&a, 0, &a, 0).unwrap().into_handle();
    assert_eq!(p.size(), 17);
    assert_eq!(p.rank(), 5);
    assert!(is_simple(&p));
}

#[test]
fn coupled_sizes() {
    let c = coupled_example(5, 3).unwrap().into_handle();
    assert_eq!((c.size(), c.rank()), (17, 5));
    let c2 = coupled_example(4, 2).unwrap().into_handle();
    assert_eq!((c2.size(), c2.rank()), (4, 4));
    let c4 = coupled_example(4, 4).unwrap().into_handle();
    assert_eq!((c4.size(), c4.rank()), (64, 4));
    let c3 = coupled_example(3, 3).unwrap().into_handle();
    assert_eq!((c3.size(), c3.rank()), (9, 3));
    assert!(coupled_example(4, 3).is_err());
    assert!(coupled_example(5, 6).is_err());
}

#[test]
fn reduced_keeps_matroid() {
    let m = crown(4, 3, 2).unwrap();
    let r = m.reduced(Some(5)).unwrap();
    assert_eq!(r.columns()[5][0], 1);
    assert!(r.columns()[5][1..].iter().all(|&x| x == 0));
    let a = m.into_handle();
    let b = crown(4, 3, 2).unwrap().reduced(None).unwrap().into_handle();
    assert_eq!(epsilon(&a), epsilon(&b));
    for mask in 0u64..1 << 12 {
        let s = crate::ElemSet::from_mask(mask);
        assert_eq!(a.rank_of(&s).unwrap(), b.rank_of(&s).unwrap());
    }
}
