//! Benchmark inputs shared by the criterion targets in `benches/`.

use lando_core::enumeration::prufer_decode;
use lando_core::{EdgeSet, Tree};

/// A fixed spread of (tree, p, q) triples with up to 10 edges, generated from
/// a linear congruential sequence so the inputs never change.
pub fn predicate_triples(count: usize) -> Vec<(Tree, EdgeSet, EdgeSet)> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 11
    };
    (0..count)
        .map(|_| {
            let n = 3 + (next() % 9) as usize;
            let seq: Vec<usize> = (0..n - 2).map(|_| (next() % n as u64) as usize).collect();
            let t = prufer_decode(&seq).expect("valid sequence");
            let mask = t.all_edges().bits();
            let p = EdgeSet::from_bits(next() & mask);
            let q = EdgeSet::from_bits(next() & next() & mask);
            (t, p, q)
        })
        .collect()
}
