//! Systems of disjoint circles on the sphere, given by their nesting forest,
//! and the dual tree of complementary regions.
//!
//! Up to homeomorphism of the sphere a union of disjoint circles is determined
//! by which circle lies directly inside which, once an outer region is fixed.
//! The dual tree has one vertex for the outer region (vertex 0) and one for
//! the region just inside each circle (circle `i` is vertex `i + 1`); circle
//! `i` contributes edge `i`, joining its region to its parent's region.

use std::fmt;
use std::str::FromStr;

use crate::tree::{Tree, VertexId};
use crate::{Error, Result};

/// Containment forest: `parent[i]` is the smallest circle properly containing
/// circle `i`, or `None` for an outermost circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestingForest {
    parents: Vec<Option<usize>>,
}

impl NestingForest {
    pub fn new(parents: Vec<Option<usize>>) -> Result<Self> {
        let n = parents.len();
        for (i, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::Nesting(format!(
                        "circle {i} refers to missing parent {p}"
                    )));
                }
            }
        }
        // walk up from each circle; more than n steps means a cycle
        for start in 0..n {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = parents[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::Nesting(format!(
                        "containment cycle through circle {start}"
                    )));
                }
            }
        }
        Ok(NestingForest { parents })
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    /// Reads a tree as a circle system with the region `outer` outermost.
    /// Circles are numbered in the order of the edges they correspond to.
    pub fn from_tree(t: &Tree, outer: VertexId) -> Result<Self> {
        t.check_vertex(outer)?;
        // edge e separates `outer` from the far endpoint, which becomes the
        // region inside circle e
        let n = t.vertex_count();
        let mut parents = vec![None; t.edge_count()];
        let mut stack = vec![(outer.0, None::<usize>)];
        let mut seen = vec![false; n];
        seen[outer.0] = true;
        while let Some((v, circle)) = stack.pop() {
            for &(w, e) in t.adjacency(v) {
                if !seen[w] {
                    seen[w] = true;
                    parents[e.0] = circle;
                    stack.push((w, Some(e.0)));
                }
            }
        }
        NestingForest::new(parents)
    }
}

/// The tree of complementary regions of the circle system.
pub fn dual_tree(f: &NestingForest) -> Tree {
    let edges = f
        .parents
        .iter()
        .enumerate()
        .map(|(i, p)| (p.map_or(0, |p| p + 1), i + 1))
        .collect();
    Tree::new(f.len() + 1, edges).expect("a nesting forest dualizes to a tree")
}

/// A tree with `n` edges is the dual of a system of `n` circles.
pub fn circle_count_of_tree(t: &Tree) -> usize {
    t.edge_count()
}

/// Nesting file: one `C <id> <parent|->` line per circle, ids `0, 1, …` in
/// order.
impl FromStr for NestingForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parents = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let n = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [] => continue,
                ["C", id, parent] => {
                    let id: usize = id
                        .parse()
                        .map_err(|_| Error::parse(n, format!("invalid circle id {id:?}")))?;
                    if id != parents.len() {
                        return Err(Error::parse(
                            n,
                            format!("expected circle id {}, found {id}", parents.len()),
                        ));
                    }
                    let parent = match *parent {
                        "-" => None,
                        p => Some(
                            p.parse()
                                .map_err(|_| Error::parse(n, format!("invalid parent {p:?}")))?,
                        ),
                    };
                    parents.push(parent);
                }
                _ => return Err(Error::parse(n, "expected `C <id> <parent|->`")),
            }
        }
        NestingForest::new(parents)
    }
}

impl fmt::Display for NestingForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parents.iter().enumerate() {
            match p {
                Some(p) => writeln!(f, "C {i} {p}")?,
                None => writeln!(f, "C {i} -")?,
            }
        }
        Ok(())
    }
}
