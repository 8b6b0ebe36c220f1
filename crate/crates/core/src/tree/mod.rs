//! Finite free trees with dense vertex ids and positional edge ids.
//!
//! Every predicate in this crate is stated over trees. A [`Tree`] is validated
//! at construction (connected, acyclic, no loops or duplicate edges) and is
//! immutable afterwards. Path queries use per-vertex root-path masks: the
//! edges of the `a`–`b` path are the symmetric difference of the edges on the
//! paths from vertex 0 to `a` and to `b`.

mod canonical;
mod edge_set;
mod format;

use std::fmt;

pub use canonical::{canonical_code, centroids, is_isomorphic, rooted_code, CanonicalCode};
pub use edge_set::EdgeSet;

use crate::{Error, Result};

/// Largest edge count an [`EdgeSet`] can address.
pub const MAX_EDGES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<EdgeSet>,
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    // edges on the path from vertex 0
    root_path: Vec<EdgeSet>,
    depth: Vec<usize>,
}

impl Tree {
    /// Builds a tree, rejecting anything that is not a finite free tree.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyTree);
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(edges.len()));
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }

        let mut normalized: Vec<(usize, usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u.min(v), u.max(v), i))
            .collect();
        normalized.sort_unstable();
        if let Some(w) = normalized
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            let (u, v) = edges[w[0].2.max(w[1].2)];
            return Err(Error::DuplicateEdge(u, v));
        }

        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::Cycle(u, v));
            }
            parent[ru] = rv;
        }
        // acyclic with V-1 edges <=> connected
        if edges.len() + 1 != vertex_count {
            return Err(Error::EdgeCount {
                vertices: vertex_count,
                expected: vertex_count - 1,
                found: edges.len(),
            });
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![EdgeSet::EMPTY; vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, EdgeId(i)));
            adjacency[v].push((u, EdgeId(i)));
            incident[u].insert(EdgeId(i));
            incident[v].insert(EdgeId(i));
        }

        let mut root_path = vec![EdgeSet::EMPTY; vertex_count];
        let mut depth = vec![0; vertex_count];
        let mut visited = vec![false; vertex_count];
        let mut stack = vec![0];
        visited[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, e) in &adjacency[x] {
                if !visited[y] {
                    visited[y] = true;
                    let mut p = root_path[x];
                    p.insert(e);
                    root_path[y] = p;
                    depth[y] = depth[x] + 1;
                    stack.push(y);
                }
            }
        }

        Ok(Tree {
            vertex_count,
            edges,
            incident,
            adjacency,
            root_path,
            depth,
        })
    }

    /// The single-vertex tree.
    pub fn trivial() -> Self {
        Tree::new(1, Vec::new()).expect("single vertex is a tree")
    }

    /// Path on `edge_count + 1` vertices, edge `i` joining `i` and `i + 1`.
    pub fn path(edge_count: usize) -> Result<Self> {
        Tree::new(
            edge_count + 1,
            (0..edge_count).map(|i| (i, i + 1)).collect(),
        )
    }

    /// Star with center 0, edge `i` joining 0 and `i + 1`.
    pub fn star(edge_count: usize) -> Result<Self> {
        Tree::new(
            edge_count + 1,
            (0..edge_count).map(|i| (0, i + 1)).collect(),
        )
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Endpoints of every edge, in edge-id order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        let &(u, v) = self.edges.get(e.0).ok_or(Error::EdgeOutOfRange {
            edge: e.0,
            edge_count: self.edges.len(),
        })?;
        Ok((VertexId(u), VertexId(v)))
    }

    /// All edges of the tree.
    pub fn all_edges(&self) -> EdgeSet {
        self.edge_ids().collect()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v.0].len())
    }

    /// Neighbors of `v` with the connecting edge.
    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = (VertexId, EdgeId)> + '_> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v.0].iter().map(|&(w, e)| (VertexId(w), e)))
    }

    pub fn path_edges(&self, a: VertexId, b: VertexId) -> Result<EdgeSet> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.root_path[a.0].symmetric_difference(self.root_path[b.0]))
    }

    pub fn parity(&self, a: VertexId, b: VertexId) -> Result<Parity> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(if (self.depth[a.0] + self.depth[b.0]).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        })
    }

    /// The edges with an end at `v`.
    pub fn delta(&self, v: VertexId) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(self.incident[v.0])
    }

    /// Vertices incident to at least one edge of `set`, as a vertex list in
    /// ascending order.
    pub fn endpoints_of(&self, set: EdgeSet) -> Result<Vec<VertexId>> {
        self.check_edge_set(set)?;
        let mut mark = vec![false; self.vertex_count];
        for e in set.iter() {
            let (u, v) = self.edges[e.0];
            mark[u] = true;
            mark[v] = true;
        }
        Ok(mark
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| VertexId(i))
            .collect())
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v.0,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn check_edge_set(&self, set: EdgeSet) -> Result<()> {
        match set.iter().find(|e| e.0 >= self.edges.len()) {
            Some(e) => Err(Error::EdgeOutOfRange {
                edge: e.0,
                edge_count: self.edges.len(),
            }),
            None => Ok(()),
        }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.vertex_count {
            return Err(Error::NotBijection(format!(
                "vertex permutation has length {}, expected {}",
                perm.len(),
                self.vertex_count
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Tree::new(self.vertex_count, edges)
    }

    /// Reorders edges: new edge `i` is old edge `order[i]`.
    pub fn reorder_edges(&self, order: &[usize]) -> Result<Tree> {
        let mut seen = vec![false; self.edges.len()];
        if order.len() != self.edges.len()
            || order
                .iter()
                .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::NotBijection(
                "edge reordering is not a permutation".into(),
            ));
        }
        Tree::new(
            self.vertex_count,
            order.iter().map(|&i| self.edges[i]).collect(),
        )
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[inline]
    pub(crate) fn root_path(&self, v: usize) -> EdgeSet {
        self.root_path[v]
    }

    #[inline]
    pub(crate) fn incident(&self, v: usize) -> EdgeSet {
        self.incident[v]
    }

    #[inline]
    pub(crate) fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub(crate) fn adjacency(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}
