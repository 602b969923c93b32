use super::*;
use crate::algebra::{Field, GroupTable};
use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::extremal::SimpleGraph;
use crate::linear::LinearMatroid;
use crate::matroid::{complete_graphic, is_isomorphic, is_simple, GraphicMatroid, MatroidHandle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank from a circuit list: the largest subset containing no circuit.
fn rank_from_circuits(m: usize, circuits: &[u64]) -> Vec<usize> {
    let mut rank = vec![0usize; 1 << m];
    for mask in 1u64..1 << m {
        let indep = circuits.iter().all(|&c| c & mask != c);
        rank[mask as usize] = if indep {
            mask.count_ones() as usize
        } else {
            (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| rank[(mask & !(1 << i)) as usize])
                .max()
                .unwrap()
        };
    }
    rank
}

fn random_gain_graph(rng: &mut ChaCha8Rng, group: &GroupTable, n: usize, m: usize) -> BiasedGraph {
    let edges = (0..m)
        .map(|id| {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            (id, u, v, Gain::Element(rng.gen_range(0..group.order())))
        })
        .collect();
    BiasedGraph::with_gains(0..n, group.clone(), edges).unwrap()
}

fn mask_of(ids: &[usize]) -> u64 {
    ids.iter().fold(0, |a, &i| a | 1 << i)
}

fn same_ranks(a: &MatroidHandle, b: &MatroidHandle) {
    assert_eq!(a.elements(), b.elements());
    let els = a.elements();
    for mask in 0u64..1 << els.len() {
        let s: ElemSet = (0..els.len()).filter(|&i| mask >> i & 1 == 1).map(|i| els[i]).collect();
        assert_eq!(a.rank_of(&s).unwrap(), b.rank_of(&s).unwrap(), "{s}");
    }
}

#[test]
fn rank_agrees_with_circuit_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let caps = Caps::default();
    for trial in 0..40 {
        let group = GroupTable::cyclic(1 + trial % 4).unwrap();
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=9);
        let g = random_gain_graph(&mut rng, &group, n, m);
        let circ: Vec<u64> = frame_circuits(&g, &caps)
            .unwrap()
            .iter()
            .map(|c| mask_of(c))
            .collect();
        let oracle = rank_from_circuits(m, &circ);
        for mask in 0u64..1 << m {
            let ids: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            assert_eq!(frame_rank(&g, &ids).unwrap(), oracle[mask as usize]);
        }
    }
}

#[test]
fn explicit_balance_matches_gains() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let caps = Caps::default();
    let group = GroupTable::cyclic(3).unwrap();
    for _ in 0..15 {
        let g = random_gain_graph(&mut rng, &group, 4, 7);
        let all = ElemSet::full(7);
        let balanced: Vec<Vec<usize>> = g
            .graph()
            .cycles_within(&all)
            .iter()
            .filter(|c| g.cycle_balanced_idx(c))
            .map(|c| g.ids(c))
            .collect();
        let edges = g.graph().edges().iter().map(|e| (e.id, e.tail, e.head)).collect();
        let x = BiasedGraph::with_explicit(0..4, edges, balanced, &caps).unwrap();
        same_ranks(&frame_matroid(&g), &frame_matroid(&x));
        for id in 0..7 {
            same_ranks(
                &frame_matroid(&g.contract_edge(id).unwrap()),
                &frame_matroid(&x.contract_edge(id).unwrap()),
            );
        }
    }
}

#[test]
fn minors_commute_with_frame_matroid() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..30 {
        let group = GroupTable::cyclic(1 + trial % 3).unwrap();
        let g = random_gain_graph(&mut rng, &group, 4, 8);
        let fm = frame_matroid(&g);
        for id in 0..8 {
            same_ranks(
                &frame_matroid(&g.delete_edge(id).unwrap()),
                &fm.delete_ids(&[id]).unwrap(),
            );
            same_ranks(
                &frame_matroid(&g.contract_edge(id).unwrap()),
                &fm.contract_ids(&[id]).unwrap(),
            );
        }
        // Two contractions in a row exercise unbalanced markers.
        let gc = g.contract_edge(0).unwrap().contract_edge(1).unwrap();
        same_ranks(&frame_matroid(&gc), &fm.contract_ids(&[0, 1]).unwrap());
    }
}

#[test]
fn dowling_basics() {
    let z2 = GroupTable::cyclic(2).unwrap();
    let d = dowling(3, &z2).unwrap();
    assert_eq!((d.size(), d.rank()), (9, 3));
    assert!(is_simple(&d));
    let d4 = dowling(4, &GroupTable::cyclic(3).unwrap()).unwrap();
    assert_eq!((d4.size(), d4.rank()), (4 + 3 * 6, 4));
    assert!(dowling(0, &z2).is_err());
}

#[test]
fn trivial_group_dowling_is_a_clique() {
    let caps = Caps::default();
    let d = dowling(3, &GroupTable::trivial()).unwrap();
    assert!(is_isomorphic(&d, &complete_graphic(4), &caps).unwrap());
    let g = dowling_graph(3, &GroupTable::trivial()).unwrap();
    match frame_graphic_form(&g).unwrap() {
        GraphicForm::Graphic { vertices, edges } => {
            let gm = GraphicMatroid::new(vertices, edges).unwrap().into_handle();
            same_ranks(&frame_matroid(&g), &gm);
        }
        GraphicForm::NotGraphicByThisTest => panic!("should be graphic"),
    }
}

/// Columns e_i and e_i - a e_j over GF(q), the standard representation of
/// the Dowling geometry over the multiplicative group.
fn dowling_over_field(n: usize, q: u32) -> MatroidHandle {
    let f = Field::new(q as u64).unwrap();
    let mut cols = Vec::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        cols.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            for a in 1..q as u16 {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = f.neg(a);
                cols.push(v);
            }
        }
    }
    LinearMatroid::new(f, n, cols).unwrap().into_handle()
}

#[test]
fn cyclic_dowling_matches_field_representation() {
    let caps = Caps::default();
    let d = dowling(3, &GroupTable::cyclic(2).unwrap()).unwrap();
    assert!(is_isomorphic(&d, &dowling_over_field(3, 3), &caps).unwrap());
    let d = dowling(3, &GroupTable::cyclic(4).unwrap()).unwrap();
    assert!(is_isomorphic(&d, &dowling_over_field(3, 5), &caps).unwrap());
}

#[test]
fn theta_property_is_enforced() {
    let caps = Caps::default();
    // Three parallel links: two balanced 2-cycles force the third.
    let edges = vec![(0, 0, 1), (1, 0, 1), (2, 0, 1)];
    let err = BiasedGraph::with_explicit(0..2, edges.clone(), vec![vec![0, 1], vec![1, 2]], &caps);
    assert!(err.is_err());
    let ok = BiasedGraph::with_explicit(0..2, edges.clone(), vec![vec![0, 1]], &caps).unwrap();
    assert_eq!(ok.theta_violation(&caps).unwrap(), None);
    assert!(BiasedGraph::with_explicit(0..2, edges, vec![vec![0]], &caps).is_err());
}

#[test]
fn blow_up_of_triangle() {
    let g = SimpleGraph::complete(3);
    let z3 = GroupTable::cyclic(3).unwrap();
    let b = blow_up(&g, &z3).unwrap();
    assert_eq!(b.edge_count(), 3 + 9);
    assert_eq!(b.gain_of(0), Some(Gain::Element(1)));
    assert_eq!(b.gain_of(5), Some(Gain::Element(2)));
    assert!(!b.is_balanced());
    assert_eq!(
        frame_graphic_form(&b).unwrap(),
        GraphicForm::NotGraphicByThisTest
    );
}

#[test]
fn balanced_gain_graph_is_graphic() {
    let z3 = GroupTable::cyclic(3).unwrap();
    let g = BiasedGraph::with_gains(
        0..3,
        z3,
        vec![
            (0, 0, 1, Gain::Element(1)),
            (1, 1, 2, Gain::Element(1)),
            (2, 0, 2, Gain::Element(2)),
        ],
    )
    .unwrap();
    assert!(g.is_balanced());
    assert_eq!(frame_rank(&g, &[0, 1, 2]).unwrap(), 2);
    assert!(g.cycle_is_balanced(&[0, 1, 2]).unwrap());
    assert!(g.cycle_is_balanced(&[0, 1]).is_err());
    assert!(matches!(
        frame_graphic_form(&g).unwrap(),
        GraphicForm::Graphic { vertices: 3, .. }
    ));
}

#[test]
fn unbalanced_loop_contraction() {
    let z2 = GroupTable::cyclic(2).unwrap();
    let g = BiasedGraph::with_gains(
        0..2,
        z2,
        vec![
            (0, 0, 0, Gain::Element(1)),
            (1, 0, 0, Gain::Element(1)),
            (2, 0, 1, Gain::Element(0)),
        ],
    )
    .unwrap();
    let c = g.contract_edge(0).unwrap();
    assert_eq!(c.gain_of(1), Some(Gain::Element(0)));
    assert_eq!(c.gain_of(2), Some(Gain::Unbalanced));
    assert_eq!(frame_rank(&c, &[1]).unwrap(), 0);
    assert_eq!(frame_rank(&c, &[2]).unwrap(), 1);
}

#[test]
fn vertex_deletion_and_errors() {
    let g = dowling_graph(3, &GroupTable::cyclic(2).unwrap()).unwrap();
    let h = g.delete_vertex(2).unwrap();
    assert_eq!(h.edge_count(), 2 + 2);
    assert!(g.delete_vertex(9).is_err());
    assert!(g.delete_edge(99).is_err());
    assert!(frame_rank(&g, &[99]).is_err());
    let bad = BiasedGraph::with_gains(0..2, GroupTable::cyclic(2).unwrap(), vec![(0, 0, 1, Gain::Element(5))]);
    assert!(bad.is_err());
    let bad = BiasedGraph::with_gains(0..2, GroupTable::cyclic(2).unwrap(), vec![(0, 0, 1, Gain::Unbalanced)]);
    assert!(bad.is_err());
}

#[test]
fn circuit_cap() {
    let g = dowling_graph(4, &GroupTable::cyclic(3).unwrap()).unwrap();
    let err = frame_circuits(&g, &Caps::default()).unwrap_err();
    assert!(err.is_cap());
}
