//! Realizable edge bijections and friendliness.
//!
//! A bijection `h` from the edges of `K` to the edges of `K2` is realizable
//! when, for every pair of distinct vertices `A`, `B` of `K` joined by a path
//! with an even number of edges, `h(δA)` and `h(δB)` are unlinked in `K2`.
//! Two trees are friendly when such a bijection exists.

mod certificate;
mod search;

use std::fmt;

use itertools::Itertools;

pub use certificate::{Certificate, SearchStats, Verdict};
pub use search::find_realizable_bijection;

use crate::linking::unlinked_unchecked;
use crate::tree::{EdgeId, EdgeSet, Tree, VertexId};
use crate::{Error, Result};

/// Largest edge count accepted by the unpruned enumerator (9! bijections).
pub const MAX_UNPRUNED_EDGES: usize = 9;

/// Edge `i` of the source tree maps to edge `map[i]` of the target tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeBijection(Vec<usize>);

impl EdgeBijection {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &i in &map {
            if i >= map.len() {
                return Err(Error::NotBijection(format!(
                    "image {i} out of range for {} edges",
                    map.len()
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotBijection(format!("edge {i} is hit twice")));
            }
        }
        Ok(EdgeBijection(map))
    }

    pub fn identity(edge_count: usize) -> Self {
        EdgeBijection((0..edge_count).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, e: EdgeId) -> EdgeId {
        EdgeId(self.0[e.0])
    }

    pub fn image_set(&self, set: EdgeSet) -> EdgeSet {
        set.iter().map(|e| self.image(e)).collect()
    }

    pub fn inverse(&self) -> EdgeBijection {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        EdgeBijection(inv)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &EdgeBijection) -> EdgeBijection {
        EdgeBijection(self.0.iter().map(|&j| other.0[j]).collect())
    }
}

impl fmt::Debug for EdgeBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeBijection{:?}", self.0)
    }
}

/// Unordered pairs `(a, b)`, `a < b`, of distinct vertices at even distance.
pub fn even_pairs(t: &Tree) -> Vec<(VertexId, VertexId)> {
    let n = t.vertex_count();
    (0..n)
        .tuple_combinations()
        .filter(|&(a, b)| (t.depth(a) + t.depth(b)).is_multiple_of(2))
        .map(|(a, b)| (VertexId(a), VertexId(b)))
        .collect()
}

fn check_shapes(k: &Tree, k2: &Tree, h: Option<&EdgeBijection>) -> Result<()> {
    if k.edge_count() != k2.edge_count() {
        return Err(Error::EdgeCountMismatch(k.edge_count(), k2.edge_count()));
    }
    if let Some(h) = h {
        if h.len() != k.edge_count() {
            return Err(Error::NotBijection(format!(
                "bijection has {} entries for {} edges",
                h.len(),
                k.edge_count()
            )));
        }
    }
    Ok(())
}

pub fn is_realizable(k: &Tree, k2: &Tree, h: &EdgeBijection) -> Result<bool> {
    check_shapes(k, k2, Some(h))?;
    Ok(realizable_over(k2, &delta_pairs(k), h))
}

fn delta_pairs(k: &Tree) -> Vec<(EdgeSet, EdgeSet)> {
    even_pairs(k)
        .into_iter()
        .map(|(a, b)| (k.incident(a.0), k.incident(b.0)))
        .collect()
}

fn realizable_over(k2: &Tree, pairs: &[(EdgeSet, EdgeSet)], h: &EdgeBijection) -> bool {
    pairs
        .iter()
        .all(|&(da, db)| unlinked_unchecked(k2, h.image_set(da), h.image_set(db)))
}

/// Result of evaluating every bijection without pruning.
#[derive(Clone, Debug)]
pub struct UnprunedScan {
    pub checked: u64,
    pub realizable: Vec<EdgeBijection>,
}

/// Evaluates all `edge_count!` bijections with [`is_realizable`] semantics,
/// in lexicographic order of the image array.
pub fn scan_all_bijections(k: &Tree, k2: &Tree) -> Result<UnprunedScan> {
    check_shapes(k, k2, None)?;
    let n = k.edge_count();
    if n > MAX_UNPRUNED_EDGES {
        return Err(Error::OutOfRange {
            value: n,
            min: 0,
            max: MAX_UNPRUNED_EDGES,
        });
    }
    let pairs = delta_pairs(k);
    let mut scan = UnprunedScan {
        checked: 0,
        realizable: Vec::new(),
    };
    for map in (0..n).permutations(n) {
        let h = EdgeBijection(map);
        scan.checked += 1;
        if realizable_over(k2, &pairs, &h) {
            scan.realizable.push(h);
        }
    }
    Ok(scan)
}

/// Realizable bijections `k -> k2` whose inverse is not realizable `k2 -> k`.
pub fn inverse_gaps(k: &Tree, k2: &Tree) -> Result<Vec<EdgeBijection>> {
    let back = delta_pairs(k2);
    Ok(scan_all_bijections(k, k2)?
        .realizable
        .into_iter()
        .filter(|h| !realizable_over(k, &back, &h.inverse()))
        .collect())
}

/// Re-verifies a certificate produced for `(k, k2)`: the witness of a
/// friendly certificate must be realizable; an unfriendly certificate is
/// confirmed by an unpruned scan finding no realizable bijection.
pub fn recheck_certificate(k: &Tree, k2: &Tree, c: &Certificate) -> Result<bool> {
    check_shapes(k, k2, None)?;
    match (c.verdict, &c.witness) {
        (Verdict::Friendly, Some(w)) => {
            if w.len() != k.edge_count() {
                return Err(Error::CertificateMismatch(format!(
                    "witness has {} entries for {} edges",
                    w.len(),
                    k.edge_count()
                )));
            }
            is_realizable(k, k2, w)
        }
        (Verdict::Friendly, None) => Err(Error::CertificateMismatch(
            "friendly certificate without a witness".into(),
        )),
        (Verdict::Unfriendly, Some(_)) => Err(Error::CertificateMismatch(
            "unfriendly certificate carries a witness".into(),
        )),
        (Verdict::Unfriendly, None) => Ok(scan_all_bijections(k, k2)?.realizable.is_empty()),
    }
}
