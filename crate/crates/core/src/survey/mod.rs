//! Exhaustive friendliness surveys and the verification drivers.
//!
//! [`survey_pairs`] decides every unordered pair (self-pairs included) of the
//! free-tree catalog for one edge count. Pairs are spread over a worker pool;
//! rows come back in pair order, so the report does not depend on scheduling.

pub mod fixtures;
mod report;

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;

pub use fixtures::{build_g, build_h};
pub use report::{SurveyReport, SurveyRow};

use crate::enumeration::{enumerate_trees, TreeCatalog};
use crate::realizability::{
    find_realizable_bijection, is_realizable, recheck_certificate, scan_all_bijections,
    Certificate, UnprunedScan, Verdict,
};
use crate::tree::{canonical_code, Tree};
use crate::{Error, Result};

pub const MAX_SURVEY_EDGES: usize = 8;

/// Unfriendly rows up to this size are confirmed by an unpruned scan.
pub const DEFAULT_RECHECK_EDGES: usize = 7;

pub const TOOL: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    /// Worker threads; at least 1.
    pub jobs: usize,
    /// Confirm unfriendly rows with an unpruned scan at every size, not only
    /// up to [`DEFAULT_RECHECK_EDGES`].
    pub recheck_all: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            jobs: 1,
            recheck_all: false,
        }
    }
}

impl SurveyOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SurveyOptions {
            jobs,
            ..Self::default()
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        if self.jobs == 0 {
            return Err(Error::OutOfRange {
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))
    }
}

fn decide(catalog: &TreeCatalog, a: usize, b: usize, recheck: bool) -> Result<SurveyRow> {
    let (code_a, ta) = catalog.get(a).expect("index from catalog");
    let (code_b, tb) = catalog.get(b).expect("index from catalog");
    let certificate = find_realizable_bijection(ta, tb)?;
    let mut rechecked = false;
    match certificate.verdict {
        Verdict::Friendly => {
            let w = certificate
                .witness
                .as_ref()
                .expect("friendly carries a witness");
            if !is_realizable(ta, tb, w)? {
                return Err(Error::RecheckFailed(format!("witness for pair ({a}, {b})")));
            }
        }
        Verdict::Unfriendly if recheck => {
            if !recheck_certificate(ta, tb, &certificate)? {
                return Err(Error::RecheckFailed(format!(
                    "unpruned scan found a realizable bijection for pair ({a}, {b})"
                )));
            }
            rechecked = true;
        }
        Verdict::Unfriendly => {}
    }
    Ok(SurveyRow {
        index_a: a,
        index_b: b,
        code_a: code_a.clone(),
        code_b: code_b.clone(),
        certificate,
        rechecked,
    })
}

/// Decides every unordered pair of trees with `edge_count` edges.
pub fn survey_pairs(edge_count: usize, opts: &SurveyOptions) -> Result<SurveyReport> {
    if edge_count > MAX_SURVEY_EDGES {
        return Err(Error::OutOfRange {
            value: edge_count,
            min: 0,
            max: MAX_SURVEY_EDGES,
        });
    }
    let start = Instant::now();
    let pool = opts.pool()?;
    let catalog = enumerate_trees(edge_count)?;
    let recheck = opts.recheck_all || edge_count <= DEFAULT_RECHECK_EDGES;
    let pairs: Vec<(usize, usize)> = (0..catalog.len())
        .flat_map(|a| (a..catalog.len()).map(move |b| (a, b)))
        .collect();
    let mut rows = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(a, b)| decide(&catalog, a, b, recheck))
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by_key(|r| (r.index_a, r.index_b));
    Ok(SurveyReport {
        edge_count,
        tree_count: catalog.len(),
        rows,
        tool: TOOL.to_owned(),
        elapsed: start.elapsed(),
    })
}

/// Both search directions for the pair `(G, H)`.
#[derive(Clone, Debug)]
pub struct Theorem1Run {
    pub forward: Certificate,
    pub reverse: Certificate,
}

impl Theorem1Run {
    /// Both directions came back unfriendly.
    pub fn confirmed(&self) -> bool {
        self.forward.verdict == Verdict::Unfriendly && self.reverse.verdict == Verdict::Unfriendly
    }
}

/// Runs the search from `G` to `H` and from `H` to `G`.
pub fn verify_theorem1() -> Result<Theorem1Run> {
    verify_pair(&build_g(), &build_h())
}

/// [`verify_theorem1`] on arbitrary trees in place of the fixtures.
pub fn verify_pair(g: &Tree, h: &Tree) -> Result<Theorem1Run> {
    Ok(Theorem1Run {
        forward: find_realizable_bijection(g, h)?,
        reverse: find_realizable_bijection(h, g)?,
    })
}

/// Unpruned scans in both directions.
pub fn recheck_pair(g: &Tree, h: &Tree) -> Result<(UnprunedScan, UnprunedScan)> {
    Ok((scan_all_bijections(g, h)?, scan_all_bijections(h, g)?))
}

/// Outcome of surveying every edge count `1..=max_edge_count`.
#[derive(Clone, Debug)]
pub struct ConjectureRecord {
    pub max_edge_count: usize,
    pub reports: Vec<SurveyReport>,
}

impl ConjectureRecord {
    /// Unfriendly pairs found, with their edge count.
    pub fn counterexamples(&self) -> impl Iterator<Item = (usize, &SurveyRow)> {
        self.reports
            .iter()
            .flat_map(|r| r.unfriendly_rows().map(move |row| (r.edge_count, row)))
    }

    pub fn holds(&self) -> bool {
        self.counterexamples().next().is_none()
    }
}

/// Surveys every size up to `max_edge_count`; unfriendly rows are always
/// confirmed by an unpruned scan.
pub fn verify_conjecture(max_edge_count: usize, jobs: usize) -> Result<ConjectureRecord> {
    let opts = SurveyOptions {
        jobs,
        recheck_all: true,
    };
    let reports = (1..=max_edge_count)
        .map(|n| survey_pairs(n, &opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureRecord {
        max_edge_count,
        reports,
    })
}

/// Catalog pairs `(a, b)`, `a < b`, whose verdict depends on the direction
/// of the search.
pub fn asymmetric_pairs(edge_count: usize, opts: &SurveyOptions) -> Result<Vec<(usize, usize)>> {
    let pool = opts.pool()?;
    let catalog = enumerate_trees(edge_count)?;
    let trees: Vec<&Tree> = catalog.trees().collect();
    let pairs: Vec<(usize, usize)> = (0..trees.len()).tuple_combinations().collect();
    let flags = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(a, b)| {
                let ab = find_realizable_bijection(trees[a], trees[b])?.verdict;
                let ba = find_realizable_bijection(trees[b], trees[a])?.verdict;
                Ok(ab != ba)
            })
            .collect::<Result<Vec<bool>>>()
    })?;
    Ok(pairs
        .into_iter()
        .zip(flags)
        .filter_map(|(p, asym)| asym.then_some(p))
        .collect())
}

/// Catalog index pair matching `(G, H)` at seven edges.
pub fn theorem1_pair(catalog: &TreeCatalog) -> Option<(usize, usize)> {
    let g = catalog.position(&build_g())?;
    let h = catalog.position(&build_h())?;
    debug_assert_eq!(
        catalog.get(g).map(|(c, _)| c),
        Some(&canonical_code(&build_g()))
    );
    Some((g.min(h), g.max(h)))
}
