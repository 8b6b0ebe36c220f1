//! "On the same side" and "unlinked" predicates on edge sets of one tree.
//!
//! `p` is on the same side of `q` when the two sets are disjoint and every
//! tree path between two endpoints of edges of `p` crosses `q` an even number
//! of times. `p` and `q` are unlinked when each is on the same side of the
//! other.
//!
//! The evaluators here 2-color the vertices by the parity of `q`-crossings on
//! their path from vertex 0 (one traversal, precomputed in [`Tree`]); `p` is on
//! the same side of `q` iff all endpoints of `p` get the same color. The
//! [`oracle`] module keeps the direct pairwise path-counting definition.

use crate::tree::{EdgeSet, Tree};
use crate::Result;

/// Is `p` on the same side of `q` in `t`?
pub fn same_side(t: &Tree, p: EdgeSet, q: EdgeSet) -> Result<bool> {
    t.check_edge_set(p)?;
    t.check_edge_set(q)?;
    Ok(same_side_unchecked(t, p, q))
}

/// Are `p` and `q` unlinked in `t`?
pub fn unlinked(t: &Tree, p: EdgeSet, q: EdgeSet) -> Result<bool> {
    t.check_edge_set(p)?;
    t.check_edge_set(q)?;
    Ok(unlinked_unchecked(t, p, q))
}

#[inline]
pub(crate) fn unlinked_unchecked(t: &Tree, p: EdgeSet, q: EdgeSet) -> bool {
    same_side_unchecked(t, p, q) && same_side_unchecked(t, q, p)
}

#[inline]
pub(crate) fn same_side_unchecked(t: &Tree, p: EdgeSet, q: EdgeSet) -> bool {
    if !p.is_disjoint(q) {
        return false;
    }
    let mut side = None;
    for e in p.iter() {
        let (u, v) = t.edges()[e.0];
        for w in [u, v] {
            let c = t.root_path(w).intersection(q).is_odd();
            match side {
                None => side = Some(c),
                Some(s) if s != c => return false,
                _ => {}
            }
        }
    }
    true
}

/// Literal evaluators: enumerate endpoint pairs and count `q`-edges on each
/// path found by breadth-first search.
pub mod oracle {
    use std::collections::VecDeque;

    use crate::tree::{EdgeId, EdgeSet, Tree, VertexId};
    use crate::Result;

    fn bfs_path(t: &Tree, a: usize, b: usize) -> Vec<EdgeId> {
        let n = t.vertex_count();
        let mut prev: Vec<Option<(usize, EdgeId)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for (y, e) in t.neighbors(VertexId(x)).expect("valid vertex") {
                if !seen[y.0] {
                    seen[y.0] = true;
                    prev[y.0] = Some((x, e));
                    queue.push_back(y.0);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = b;
        while let Some((p, e)) = prev[cur] {
            path.push(e);
            cur = p;
        }
        path
    }

    fn check(t: &Tree, p: EdgeSet, q: EdgeSet, include_same_edge_pairs: bool) -> Result<bool> {
        t.check_edge_set(p)?;
        t.check_edge_set(q)?;
        if !p.is_disjoint(q) {
            return Ok(false);
        }
        let ends = t.endpoints_of(p)?;
        for (i, a) in ends.iter().enumerate() {
            for b in &ends[i + 1..] {
                let joined_by_p_edge = p.iter().any(|e| {
                    let (u, v) = t.endpoints(e).expect("valid edge");
                    (u, v) == (*a, *b) || (v, u) == (*a, *b)
                });
                if joined_by_p_edge && !include_same_edge_pairs {
                    continue;
                }
                let crossings = bfs_path(t, a.0, b.0)
                    .into_iter()
                    .filter(|&e| q.contains(e))
                    .count();
                if crossings % 2 == 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every unordered pair of distinct endpoints of `p`, including the two
    /// ends of one `p`-edge.
    pub fn same_side(t: &Tree, p: EdgeSet, q: EdgeSet) -> Result<bool> {
        check(t, p, q, true)
    }

    /// Variant that skips pairs joined by an edge of `p`.
    pub fn same_side_excluding_edge_pairs(t: &Tree, p: EdgeSet, q: EdgeSet) -> Result<bool> {
        check(t, p, q, false)
    }

    pub fn unlinked(t: &Tree, p: EdgeSet, q: EdgeSet) -> Result<bool> {
        Ok(same_side(t, p, q)? && same_side(t, q, p)?)
    }
}
