#![allow(dead_code)]

use lando_core::enumeration::prufer_decode;
use lando_core::Tree;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniform labeled tree on `edge_count + 1` vertices with shuffled edge order.
pub fn random_tree<R: Rng>(rng: &mut R, edge_count: usize) -> Tree {
    let n = edge_count + 1;
    let t = if n < 2 {
        Tree::trivial()
    } else {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(&seq).unwrap()
    };
    let mut order: Vec<usize> = (0..t.edge_count()).collect();
    order.shuffle(rng);
    t.reorder_edges(&order).unwrap()
}

pub fn random_relabeling<R: Rng>(rng: &mut R, t: &Tree) -> Tree {
    let mut perm: Vec<usize> = (0..t.vertex_count()).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..t.edge_count()).collect();
    order.shuffle(rng);
    t.relabel(&perm).unwrap().reorder_edges(&order).unwrap()
}

/// Trees with up to `max_edges` edges, built from Prüfer sequences.
pub fn arb_tree(max_edges: usize) -> impl Strategy<Value = Tree> {
    (0..=max_edges).prop_flat_map(|m| {
        let n = m + 1;
        let len = n.saturating_sub(2);
        proptest::collection::vec(0..n.max(1), len).prop_map(move |seq| {
            if n < 2 {
                Tree::trivial()
            } else {
                prufer_decode(&seq).unwrap()
            }
        })
    })
}

pub fn arb_permuted(max_edges: usize) -> impl Strategy<Value = (Tree, Vec<usize>)> {
    arb_tree(max_edges).prop_flat_map(|t| {
        let perm = Just((0..t.vertex_count()).collect::<Vec<_>>()).prop_shuffle();
        (Just(t), perm)
    })
}
