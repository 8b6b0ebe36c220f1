use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use super::EdgeBijection;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Friendly,
    Unfriendly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Friendly => "friendly",
            Verdict::Unfriendly => "unfriendly",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "friendly" => Ok(Verdict::Friendly),
            "unfriendly" => Ok(Verdict::Unfriendly),
            other => Err(Error::parse(1, format!("unknown verdict {other:?}"))),
        }
    }
}

/// Counters of one bijection search.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    /// Partial assignments created.
    pub nodes: u64,
    /// Complete bijections reached.
    pub checked: u64,
    /// Complete bijections accounted for, either reached or cut off by a
    /// failed check. Equals `edge_count!` after an exhaustive search.
    pub covered: u64,
    pub elapsed: Duration,
}

/// Outcome of a friendliness search: a realizable witness, or the record of
/// an exhausted search.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Option<EdgeBijection>,
    pub stats: SearchStats,
}

impl Certificate {
    pub fn friendly(witness: EdgeBijection, stats: SearchStats) -> Self {
        Certificate {
            verdict: Verdict::Friendly,
            witness: Some(witness),
            stats,
        }
    }

    pub fn unfriendly(stats: SearchStats) -> Self {
        Certificate {
            verdict: Verdict::Unfriendly,
            witness: None,
            stats,
        }
    }

    pub fn is_friendly(&self) -> bool {
        self.verdict == Verdict::Friendly
    }

    /// Certificate text; the `WITNESS` line is written only when asked for.
    pub fn to_text(&self, with_witness: bool) -> String {
        let mut s = format!("VERDICT {}\n", self.verdict);
        if let (true, Some(w)) = (with_witness, &self.witness) {
            s.push_str("WITNESS");
            for i in w.as_slice() {
                s.push_str(&format!(" {i}"));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "STATS nodes={} checked={}\n",
            self.stats.nodes, self.stats.checked
        ));
        s
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(true))
    }
}

fn stat(line: usize, tok: Option<&str>, key: &str) -> Result<u64> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected {key}=<int>")))
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut verdict = None;
        let mut witness = None;
        let mut stats = None;
        for (i, line) in s.lines().enumerate() {
            let n = i + 1;
            let mut toks = line.split_whitespace();
            match toks.next() {
                None => continue,
                Some("VERDICT") => {
                    let v = toks
                        .next()
                        .ok_or_else(|| Error::parse(n, "missing verdict"))?;
                    verdict = Some(v.parse().map_err(|_| Error::parse(n, "bad verdict"))?);
                }
                Some("WITNESS") => {
                    let map = toks
                        .map(|t| {
                            t.parse()
                                .map_err(|_| Error::parse(n, format!("bad index {t:?}")))
                        })
                        .collect::<Result<Vec<usize>>>()?;
                    witness = Some(EdgeBijection::new(map)?);
                    continue;
                }
                Some("STATS") => {
                    let nodes = stat(n, toks.next(), "nodes")?;
                    let checked = stat(n, toks.next(), "checked")?;
                    stats = Some(SearchStats {
                        nodes,
                        checked,
                        ..SearchStats::default()
                    });
                }
                Some(other) => return Err(Error::parse(n, format!("unknown record {other:?}"))),
            }
            if let Some(extra) = toks.next() {
                return Err(Error::parse(n, format!("trailing token {extra:?}")));
            }
        }
        let verdict = verdict.ok_or_else(|| Error::parse(1, "missing VERDICT line"))?;
        if verdict == Verdict::Unfriendly && witness.is_some() {
            return Err(Error::parse(1, "unfriendly certificate carries a witness"));
        }
        Ok(Certificate {
            verdict,
            witness,
            stats: stats.unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let stats = SearchStats {
            nodes: 12,
            checked: 1,
            ..Default::default()
        };
        let c = Certificate::friendly(EdgeBijection::new(vec![2, 0, 1]).unwrap(), stats);
        let text = c.to_string();
        assert_eq!(
            text,
            "VERDICT friendly\nWITNESS 2 0 1\nSTATS nodes=12 checked=1\n"
        );
        let back: Certificate = text.parse().unwrap();
        assert_eq!(back.verdict, Verdict::Friendly);
        assert_eq!(back.witness.unwrap().as_slice(), &[2, 0, 1]);
        assert_eq!(back.stats.nodes, 12);
        assert_eq!(
            c.to_text(false),
            "VERDICT friendly\nSTATS nodes=12 checked=1\n"
        );
    }

    #[test]
    fn rejects_malformed_text() {
        assert!("STATS nodes=1 checked=0\n".parse::<Certificate>().is_err());
        assert!("VERDICT maybe\n".parse::<Certificate>().is_err());
        assert!("VERDICT friendly\nWITNESS 0 0\n"
            .parse::<Certificate>()
            .is_err());
        assert!("VERDICT unfriendly\nWITNESS 0\n"
            .parse::<Certificate>()
            .is_err());
        assert!("VERDICT unfriendly\nSTATS nodes=x checked=0\n"
            .parse::<Certificate>()
            .is_err());
    }
}
