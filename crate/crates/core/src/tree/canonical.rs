use std::fmt;

use super::{Tree, VertexId};
use crate::{Error, Result};

/// AHU parenthesis code of a free tree. Equal codes mean isomorphic trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Accepts any balanced, nonempty single-rooted parenthesis string.
    pub fn parse(s: &str) -> Result<Self> {
        let mut depth = 0usize;
        for (i, c) in s.chars().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::parse(1, "unbalanced code"))?;
                    if depth == 0 && i + 1 != s.len() {
                        return Err(Error::parse(1, "code has more than one root"));
                    }
                }
                other => {
                    return Err(Error::parse(
                        1,
                        format!("unexpected character {other:?} in code"),
                    ))
                }
            }
        }
        if depth != 0 || s.is_empty() {
            return Err(Error::parse(1, "unbalanced code"));
        }
        Ok(CanonicalCode(s.to_owned()))
    }

    /// Builds the tree the code describes. Vertices are numbered in preorder;
    /// edge `i` joins vertex `i + 1` to its parent.
    pub fn to_tree(&self) -> Tree {
        let mut edges = Vec::with_capacity(self.0.len() / 2);
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for c in self.0.bytes() {
            if c == b'(' {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Tree::new(next, edges).expect("a balanced code describes a tree")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// AHU code of `t` rooted at `root`: a leaf is `()`, an internal vertex is
/// `(` + its children's codes in ascending order + `)`.
pub fn rooted_code(t: &Tree, root: VertexId) -> Result<CanonicalCode> {
    t.check_vertex(root)?;
    Ok(CanonicalCode(encode(t, root.0, usize::MAX)))
}

fn encode(t: &Tree, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .adjacency(v)
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, _)| encode(t, w, v))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in &children {
        s.push_str(c);
    }
    s.push(')');
    s
}

/// The one or two vertices minimizing the largest component left after
/// their removal.
pub fn centroids(t: &Tree) -> Vec<VertexId> {
    let n = t.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &(y, _) in t.adjacency(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &x in order.iter().rev() {
        if parent[x] != usize::MAX {
            size[parent[x]] += size[x];
        }
    }
    let heaviest: Vec<usize> = (0..n)
        .map(|v| {
            let below = t
                .adjacency(v)
                .iter()
                .filter(|&&(w, _)| parent[w] == v)
                .map(|&(w, _)| size[w])
                .max()
                .unwrap_or(0);
            below.max(n - size[v])
        })
        .collect();
    let best = *heaviest.iter().min().expect("tree is nonempty");
    (0..n)
        .filter(|&v| heaviest[v] == best)
        .map(VertexId)
        .collect()
}

/// Centroid-rooted AHU code; with two centroids, the smaller of the two codes.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    centroids(t)
        .into_iter()
        .map(|c| CanonicalCode(encode(t, c.0, usize::MAX)))
        .min()
        .expect("every tree has a centroid")
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b)
}
