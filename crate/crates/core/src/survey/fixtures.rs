//! The trees `G` and `H` of the 7-circle counterexample.
//!
//! `G`: vertices `A, C1, C2, C3, A', C1', C2', C3'`, edges `C3C3'`, `ACi`,
//! `A'Ci'`. Two 3-stars joined by an edge between one leaf of each.
//!
//! `H`: vertices `B, D, P1, P2, P3, Q1, Q2, Q3`, edges `BD`, `BPi`, `PiQi`.
//! A spider with one leg of length 1 and three of length 2.

use crate::tree::{EdgeId, Tree, VertexId};

pub mod g {
    use super::{EdgeId, VertexId};

    pub const A: VertexId = VertexId(0);
    pub const C: [VertexId; 3] = [VertexId(1), VertexId(2), VertexId(3)];
    pub const A_PRIME: VertexId = VertexId(4);
    pub const C_PRIME: [VertexId; 3] = [VertexId(5), VertexId(6), VertexId(7)];

    pub const C3_C3_PRIME: EdgeId = EdgeId(0);
    /// `A Ci`
    pub const A_C: [EdgeId; 3] = [EdgeId(1), EdgeId(2), EdgeId(3)];
    /// `A' Ci'`
    pub const A_PRIME_C_PRIME: [EdgeId; 3] = [EdgeId(4), EdgeId(5), EdgeId(6)];
}

pub mod h {
    use super::{EdgeId, VertexId};

    pub const B: VertexId = VertexId(0);
    pub const D: VertexId = VertexId(1);
    pub const P: [VertexId; 3] = [VertexId(2), VertexId(3), VertexId(4)];
    pub const Q: [VertexId; 3] = [VertexId(5), VertexId(6), VertexId(7)];

    pub const B_D: EdgeId = EdgeId(0);
    pub const B_P: [EdgeId; 3] = [EdgeId(1), EdgeId(2), EdgeId(3)];
    pub const P_Q: [EdgeId; 3] = [EdgeId(4), EdgeId(5), EdgeId(6)];
}

pub fn build_g() -> Tree {
    use g::*;
    let mut edges = vec![(C[2].0, C_PRIME[2].0)];
    edges.extend(C.iter().map(|c| (A.0, c.0)));
    edges.extend(C_PRIME.iter().map(|c| (A_PRIME.0, c.0)));
    Tree::new(8, edges).expect("G is a tree")
}

pub fn build_h() -> Tree {
    use h::*;
    let mut edges = vec![(B.0, D.0)];
    edges.extend(P.iter().map(|p| (B.0, p.0)));
    edges.extend(P.iter().zip(Q).map(|(p, q)| (p.0, q.0)));
    Tree::new(8, edges).expect("H is a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{canonical_code, is_isomorphic, EdgeSet, Parity};

    fn set(ids: &[EdgeId]) -> EdgeSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn g_shape() {
        let t = build_g();
        assert_eq!(t.edge_count(), 7);
        assert_eq!(t.degree_sequence(), vec![3, 3, 2, 2, 1, 1, 1, 1]);
        let cubic: Vec<VertexId> = t
            .vertices()
            .filter(|&v| t.degree(v).unwrap() == 3)
            .collect();
        assert_eq!(cubic, vec![g::A, g::A_PRIME]);
        assert_eq!(t.path_edges(g::A, g::A_PRIME).unwrap().len(), 3);
        assert_eq!(canonical_code(&t), canonical_code(&build_g()));
    }

    #[test]
    fn g_paths_and_deltas() {
        let t = build_g();
        assert_eq!(
            t.path_edges(g::A, g::C_PRIME[0]).unwrap(),
            set(&[
                g::A_C[2],
                g::C3_C3_PRIME,
                g::A_PRIME_C_PRIME[2],
                g::A_PRIME_C_PRIME[0]
            ])
        );
        assert_eq!(t.parity(g::A, g::C_PRIME[0]).unwrap(), Parity::Even);
        assert_eq!(t.delta(g::C[2]).unwrap(), set(&[g::A_C[2], g::C3_C3_PRIME]));
    }

    #[test]
    fn h_shape() {
        let t = build_h();
        assert_eq!(t.edge_count(), 7);
        assert_eq!(t.degree_sequence(), vec![4, 2, 2, 2, 1, 1, 1, 1]);
        for i in 0..3 {
            assert_eq!(t.parity(h::B, h::Q[i]).unwrap(), Parity::Even);
            assert_eq!(
                t.path_edges(h::B, h::Q[i]).unwrap(),
                set(&[h::B_P[i], h::P_Q[i]])
            );
        }
        assert_eq!(
            t.delta(h::B).unwrap(),
            set(&[h::B_D, h::B_P[0], h::B_P[1], h::B_P[2]])
        );
        assert!(!is_isomorphic(&t, &build_g()));
    }
}
