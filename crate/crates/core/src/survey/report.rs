use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Duration;

use crate::realizability::{Certificate, EdgeBijection, SearchStats, Verdict};
use crate::tree::CanonicalCode;
use crate::{Error, Result};

/// One unordered pair `(index_a, index_b)`, `index_a <= index_b`, of a catalog.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub index_a: usize,
    pub index_b: usize,
    pub code_a: CanonicalCode,
    pub code_b: CanonicalCode,
    pub certificate: Certificate,
    /// Unfriendly verdict confirmed by an unpruned scan.
    pub rechecked: bool,
}

impl SurveyRow {
    pub fn verdict(&self) -> Verdict {
        self.certificate.verdict
    }
}

#[derive(Clone, Debug)]
pub struct SurveyReport {
    pub edge_count: usize,
    pub tree_count: usize,
    pub rows: Vec<SurveyRow>,
    pub tool: String,
    pub elapsed: Duration,
}

impl SurveyReport {
    pub fn pairs(&self) -> usize {
        self.rows.len()
    }

    pub fn friendly(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.verdict() == Verdict::Friendly)
            .count()
    }

    pub fn unfriendly(&self) -> usize {
        self.rows.len() - self.friendly()
    }

    pub fn unfriendly_rows(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows
            .iter()
            .filter(|r| r.verdict() == Verdict::Unfriendly)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "SURVEY edges={} trees={} pairs={}",
            self.edge_count,
            self.tree_count,
            self.rows.len()
        )
        .unwrap();
        writeln!(s, "TOOL {}", self.tool).unwrap();
        for r in &self.rows {
            write!(
                s,
                "PAIR {} {} {} {} {}",
                r.index_a,
                r.index_b,
                r.code_a,
                r.code_b,
                r.verdict()
            )
            .unwrap();
            match &r.certificate.witness {
                Some(w) => {
                    for i in w.as_slice() {
                        write!(s, " {i}").unwrap();
                    }
                }
                None => write!(s, " nodes={}", r.certificate.stats.nodes).unwrap(),
            }
            s.push('\n');
        }
        writeln!(
            s,
            "SUMMARY friendly={} unfriendly={} seconds={:.3}",
            self.friendly(),
            self.unfriendly(),
            self.elapsed.as_secs_f64()
        )
        .unwrap();
        s
    }

    /// Writes the report to a temporary file next to `path` and renames it
    /// into place.
    pub fn write_atomic(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.to_text().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path)
            .map_err(|e| Error::Io(e.error.to_string()))?;
        Ok(())
    }
}

fn field<'a>(line: usize, tok: Option<&'a str>, key: &str) -> Result<&'a str> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| Error::parse(line, format!("expected {key}=<value>")))
}

fn int<T: FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("invalid number {s:?}")))
}

impl FromStr for SurveyReport {
    type Err = Error;

    /// Rows of a parsed report carry only what the text records: witnesses,
    /// or the node count of an exhausted search.
    fn from_str(s: &str) -> Result<Self> {
        let mut header = None;
        let mut tool = String::new();
        let mut rows = Vec::new();
        let mut summary = None;
        for (i, line) in s.lines().enumerate() {
            let n = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.first().copied() {
                None => continue,
                Some("SURVEY") => {
                    let edges: usize = int(n, field(n, toks.get(1).copied(), "edges")?)?;
                    let trees: usize = int(n, field(n, toks.get(2).copied(), "trees")?)?;
                    let pairs: usize = int(n, field(n, toks.get(3).copied(), "pairs")?)?;
                    header = Some((edges, trees, pairs));
                }
                Some("TOOL") => tool = toks[1..].join(" "),
                Some("PAIR") => {
                    if toks.len() < 6 {
                        return Err(Error::parse(n, "short PAIR row"));
                    }
                    let verdict: Verdict = toks[5]
                        .parse()
                        .map_err(|_| Error::parse(n, "bad verdict"))?;
                    let certificate = match verdict {
                        Verdict::Friendly => {
                            let map = toks[6..]
                                .iter()
                                .map(|t| int(n, t))
                                .collect::<Result<Vec<usize>>>()?;
                            Certificate::friendly(EdgeBijection::new(map)?, SearchStats::default())
                        }
                        Verdict::Unfriendly => {
                            if toks.len() != 7 {
                                return Err(Error::parse(n, "unfriendly row needs nodes=<int>"));
                            }
                            Certificate::unfriendly(SearchStats {
                                nodes: int(n, field(n, Some(toks[6]), "nodes")?)?,
                                ..SearchStats::default()
                            })
                        }
                    };
                    rows.push(SurveyRow {
                        index_a: int(n, toks[1])?,
                        index_b: int(n, toks[2])?,
                        code_a: CanonicalCode::parse(toks[3])
                            .map_err(|_| Error::parse(n, "bad code"))?,
                        code_b: CanonicalCode::parse(toks[4])
                            .map_err(|_| Error::parse(n, "bad code"))?,
                        certificate,
                        rechecked: false,
                    });
                }
                Some("SUMMARY") => {
                    let friendly: usize = int(n, field(n, toks.get(1).copied(), "friendly")?)?;
                    let unfriendly: usize = int(n, field(n, toks.get(2).copied(), "unfriendly")?)?;
                    let seconds: f64 = int(n, field(n, toks.get(3).copied(), "seconds")?)?;
                    summary = Some((friendly, unfriendly, seconds));
                }
                Some(other) => return Err(Error::parse(n, format!("unknown record {other:?}"))),
            }
        }
        let (edge_count, tree_count, pairs) =
            header.ok_or_else(|| Error::parse(1, "missing SURVEY header"))?;
        let (friendly, unfriendly, seconds) =
            summary.ok_or_else(|| Error::parse(s.lines().count(), "missing SUMMARY line"))?;
        let report = SurveyReport {
            edge_count,
            tree_count,
            rows,
            tool,
            elapsed: Duration::from_secs_f64(seconds.max(0.0)),
        };
        if report.pairs() != pairs
            || report.friendly() != friendly
            || report.unfriendly() != unfriendly
        {
            return Err(Error::parse(
                s.lines().count(),
                "SUMMARY counts disagree with the rows",
            ));
        }
        Ok(report)
    }
}
