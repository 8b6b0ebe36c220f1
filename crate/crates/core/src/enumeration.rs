//! Catalogs of free trees.
//!
//! Trees with `n` edges are grown from the catalog for `n - 1` by attaching a
//! leaf at every vertex and keeping one tree per canonical code. Every tree
//! with at least one edge has a leaf whose removal leaves a tree with one
//! fewer edge, so the growth step reaches every isomorphism class.
//!
//! [`prufer_oracle_count`] counts the same classes independently, by decoding
//! every Prüfer sequence and bucketing the labeled trees by canonical code.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;

use crate::tree::{canonical_code, CanonicalCode, Tree};
use crate::{Error, Result};

pub const MAX_CATALOG_EDGES: usize = 12;
pub const MAX_ORACLE_EDGES: usize = 8;

/// Pairwise non-isomorphic trees with a fixed edge count, in ascending
/// canonical-code order. Each tree is labeled as decoded from its code.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    edge_count: usize,
    entries: Vec<(CanonicalCode, Tree)>,
}

impl TreeCatalog {
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trees(&self) -> impl Iterator<Item = &Tree> {
        self.entries.iter().map(|(_, t)| t)
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.entries.iter().map(|(c, _)| c)
    }

    pub fn get(&self, i: usize) -> Option<(&CanonicalCode, &Tree)> {
        self.entries.get(i).map(|(c, t)| (c, t))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, &Tree)> {
        self.entries.iter().map(|(c, t)| (c, t))
    }

    /// Index of the class of `t`.
    pub fn position(&self, t: &Tree) -> Option<usize> {
        let code = canonical_code(t);
        self.entries.binary_search_by(|(c, _)| c.cmp(&code)).ok()
    }

    /// `enumerate` listing: a `--- <index>` separator, the canonical code and
    /// the tree text for every entry.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, (code, tree)) in self.entries.iter().enumerate() {
            s.push_str(&format!("--- {i}\n{code}\n{tree}"));
        }
        s
    }
}

pub fn enumerate_trees(edge_count: usize) -> Result<TreeCatalog> {
    if edge_count > MAX_CATALOG_EDGES {
        return Err(Error::OutOfRange {
            value: edge_count,
            min: 0,
            max: MAX_CATALOG_EDGES,
        });
    }
    let mut codes: BTreeSet<CanonicalCode> = BTreeSet::from([canonical_code(&Tree::trivial())]);
    for _ in 0..edge_count {
        codes = codes
            .iter()
            .map(CanonicalCode::to_tree)
            .flat_map(|t| {
                (0..t.vertex_count())
                    .map(|v| {
                        let mut edges = t.edges().to_vec();
                        edges.push((v, t.vertex_count()));
                        canonical_code(&Tree::new(t.vertex_count() + 1, edges).expect("leaf added"))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    Ok(TreeCatalog {
        edge_count,
        entries: codes
            .into_iter()
            .map(|c| {
                let t = c.to_tree();
                (c, t)
            })
            .collect(),
    })
}

/// Decodes a Prüfer sequence over vertices `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            vertex_count: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let (u, v) = leaves
        .into_iter()
        .collect_tuple()
        .expect("two vertices remain");
    edges.push((u, v));
    Tree::new(n, edges)
}

/// Number of isomorphism classes of trees with `edge_count` edges, computed
/// from all `(edge_count + 1)^(edge_count - 1)` labeled trees.
pub fn prufer_oracle_count(edge_count: usize) -> Result<usize> {
    if !(1..=MAX_ORACLE_EDGES).contains(&edge_count) {
        return Err(Error::OutOfRange {
            value: edge_count,
            min: 1,
            max: MAX_ORACLE_EDGES,
        });
    }
    let n = edge_count + 1;
    let len = n - 2;
    let total = n.pow(len as u32);
    let codes: BTreeMap<CanonicalCode, usize> = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, mut index| {
            let mut seq = vec![0; len];
            for slot in seq.iter_mut() {
                *slot = index % n;
                index /= n;
            }
            let t = prufer_decode(&seq).expect("every sequence decodes");
            *acc.entry(canonical_code(&t)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    debug_assert_eq!(codes.values().sum::<usize>(), total);
    Ok(codes.len())
}
