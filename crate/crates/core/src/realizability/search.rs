//! Backtracking search for a realizable bijection.
//!
//! Edges of the source tree are assigned in a fixed order: vertices by
//! descending degree, each contributing its not-yet-placed incident edges.
//! A constraint `unlinked(h(δA), h(δB))` is checked at the position where the
//! last edge of `δA ∪ δB` is assigned. Images are tried in ascending order, so
//! the witness found is the lexicographically first realizable bijection
//! under the assignment order.

use std::time::Instant;

use super::{check_shapes, even_pairs, Certificate, EdgeBijection, SearchStats};
use crate::linking::unlinked_unchecked;
use crate::tree::{EdgeSet, Tree, VertexId};
use crate::Result;

pub fn find_realizable_bijection(k: &Tree, k2: &Tree) -> Result<Certificate> {
    check_shapes(k, k2, None)?;
    let start = Instant::now();
    let mut search = Search::new(k, k2);
    let found = search.descend(0);
    let mut stats = search.stats;
    stats.elapsed = start.elapsed();
    Ok(if found {
        let witness = EdgeBijection(search.map);
        debug_assert!(super::is_realizable(k, k2, &witness).unwrap());
        Certificate::friendly(witness, stats)
    } else {
        Certificate::unfriendly(stats)
    })
}

/// Assignment order: high-degree vertices first, ties by vertex id.
fn edge_order(k: &Tree) -> Vec<usize> {
    let mut vertices: Vec<usize> = (0..k.vertex_count()).collect();
    vertices.sort_by_key(|&v| (std::cmp::Reverse(k.adjacency(v).len()), v));
    let mut placed = EdgeSet::EMPTY;
    let mut order = Vec::with_capacity(k.edge_count());
    for v in vertices {
        for e in k.incident(v).iter() {
            if !placed.contains(e) {
                placed.insert(e);
                order.push(e.0);
            }
        }
    }
    order
}

struct Search<'a> {
    target: &'a Tree,
    order: Vec<usize>,
    // constraints that become decidable at each position
    ready: Vec<Vec<(EdgeSet, EdgeSet)>>,
    // (n - pos - 1)! for the subtree below a node at `pos`
    below: Vec<u64>,
    map: Vec<usize>,
    used: u64,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    fn new(k: &Tree, target: &'a Tree) -> Self {
        let n = k.edge_count();
        let order = edge_order(k);
        let mut position = vec![0; n];
        for (pos, &e) in order.iter().enumerate() {
            position[e] = pos;
        }
        let mut ready = vec![Vec::new(); n];
        for (VertexId(a), VertexId(b)) in even_pairs(k) {
            let (da, db) = (k.incident(a), k.incident(b));
            if let Some(last) = da.union(db).iter().map(|e| position[e.0]).max() {
                ready[last].push((da, db));
            }
        }
        let below = (0..n)
            .map(|pos| (1..=(n - pos - 1) as u64).product())
            .collect();
        Search {
            target,
            order,
            ready,
            below,
            map: vec![usize::MAX; n],
            used: 0,
            stats: SearchStats::default(),
        }
    }

    fn image(&self, set: EdgeSet) -> EdgeSet {
        set.iter()
            .map(|e| crate::tree::EdgeId(self.map[e.0]))
            .collect()
    }

    fn consistent_at(&self, pos: usize) -> bool {
        self.ready[pos]
            .iter()
            .all(|&(da, db)| unlinked_unchecked(self.target, self.image(da), self.image(db)))
    }

    fn descend(&mut self, pos: usize) -> bool {
        let n = self.order.len();
        if pos == n {
            self.stats.checked += 1;
            self.stats.covered += 1;
            return true;
        }
        let edge = self.order[pos];
        for img in 0..n {
            if self.used >> img & 1 == 1 {
                continue;
            }
            self.stats.nodes += 1;
            self.map[edge] = img;
            self.used |= 1 << img;
            if self.consistent_at(pos) {
                if self.descend(pos + 1) {
                    return true;
                }
            } else {
                self.stats.covered += self.below[pos];
            }
            self.used &= !(1 << img);
            self.map[edge] = usize::MAX;
        }
        false
    }
}
