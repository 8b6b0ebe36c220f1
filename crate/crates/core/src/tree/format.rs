//! Text form of a tree: `V <vertex_count>` followed by one `E <u> <v>` line
//! per edge in edge-id order.

use std::fmt;
use std::str::FromStr;

use super::Tree;
use crate::{Error, Result};

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "V {}", self.vertex_count())?;
        for &(u, v) in self.edges() {
            writeln!(f, "E {u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line_no = i + 1;
            let mut fields = line.split_whitespace();
            let Some(tag) = fields.next() else {
                continue;
            };
            let mut number = |what: &str| -> Result<usize> {
                let tok = fields
                    .next()
                    .ok_or_else(|| Error::parse(line_no, format!("missing {what}")))?;
                tok.parse()
                    .map_err(|_| Error::parse(line_no, format!("invalid {what} {tok:?}")))
            };
            match tag {
                "V" => {
                    if vertex_count.is_some() {
                        return Err(Error::parse(line_no, "duplicate V line"));
                    }
                    if !edges.is_empty() {
                        return Err(Error::parse(line_no, "V line must come first"));
                    }
                    vertex_count = Some(number("vertex count")?);
                }
                "E" => {
                    if vertex_count.is_none() {
                        return Err(Error::parse(line_no, "E line before V line"));
                    }
                    let u = number("endpoint")?;
                    let v = number("endpoint")?;
                    edges.push((u, v));
                }
                other => return Err(Error::parse(line_no, format!("unknown record {other:?}"))),
            }
            if let Some(extra) = fields.next() {
                return Err(Error::parse(line_no, format!("trailing token {extra:?}")));
            }
        }
        let vertex_count = vertex_count.ok_or_else(|| Error::parse(1, "missing V line"))?;
        Tree::new(vertex_count, edges)
    }
}
