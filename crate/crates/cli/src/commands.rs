use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use lando_core::circles::{dual_tree, NestingForest};
use lando_core::enumeration::enumerate_trees;
use lando_core::realizability::{find_realizable_bijection, Certificate, UnprunedScan};
use lando_core::survey::{self, build_g, build_h, SurveyOptions};
use lando_core::Tree;

fn read_tree(path: &Path) -> Result<Tree> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse()
        .with_context(|| format!("invalid tree in {}", path.display()))
}

pub fn enumerate(edges: usize) -> Result<ExitCode> {
    print!("{}", enumerate_trees(edges)?.to_text());
    Ok(ExitCode::SUCCESS)
}

pub fn check(a: &Path, b: &Path, witness: bool) -> Result<ExitCode> {
    let (ta, tb) = (read_tree(a)?, read_tree(b)?);
    let cert = find_realizable_bijection(&ta, &tb)?;
    print!("{}", cert.to_text(witness));
    Ok(ExitCode::SUCCESS)
}

pub fn survey(edges: usize, out: &Path, jobs: Option<u64>, recheck: bool) -> Result<ExitCode> {
    let jobs = match jobs {
        Some(j) => j as usize,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        if !dir.is_dir() {
            bail!("output directory {} does not exist", dir.display());
        }
    }
    let opts = SurveyOptions {
        jobs,
        recheck_all: recheck,
    };
    let report = survey::survey_pairs(edges, &opts)?;
    report
        .write_atomic(out)
        .with_context(|| format!("writing {}", out.display()))?;
    println!(
        "SURVEY edges={} trees={} pairs={} friendly={} unfriendly={}",
        report.edge_count,
        report.tree_count,
        report.pairs(),
        report.friendly(),
        report.unfriendly()
    );
    for row in report.unfriendly_rows() {
        println!(
            "UNFRIENDLY {} {} {} {} nodes={}{}",
            row.index_a,
            row.index_b,
            row.code_a,
            row.code_b,
            row.certificate.stats.nodes,
            if row.rechecked { " rechecked" } else { "" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn describe(label: &str, c: &Certificate, edges: usize) -> String {
    let total: u64 = (1..=edges as u64).product();
    format!(
        "{label}: VERDICT {} nodes={} checked={} covered={}/{}",
        c.verdict, c.stats.nodes, c.stats.checked, c.stats.covered, total
    )
}

fn describe_scan(label: &str, s: &UnprunedScan) -> String {
    format!(
        "RECHECK {label}: checked={} realizable={}",
        s.checked,
        s.realizable.len()
    )
}

pub fn verify_theorem1(recheck: bool, g: Option<&Path>, h: Option<&Path>) -> Result<ExitCode> {
    let g = g.map(read_tree).transpose()?.unwrap_or_else(build_g);
    let h = h.map(read_tree).transpose()?.unwrap_or_else(build_h);
    let run = survey::verify_pair(&g, &h)?;
    println!("{}", describe("G -> H", &run.forward, g.edge_count()));
    println!("{}", describe("H -> G", &run.reverse, h.edge_count()));
    let mut ok = run.confirmed();
    if recheck {
        let (fwd, rev) = survey::recheck_pair(&g, &h)?;
        println!("{}", describe_scan("G -> H", &fwd));
        println!("{}", describe_scan("H -> G", &rev));
        ok &= fwd.realizable.is_empty() && rev.realizable.is_empty();
    }
    if ok {
        println!("THEOREM1 confirmed: G and H are unfriendly");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("THEOREM1 FAILED: a realizable bijection exists");
        Ok(ExitCode::from(1))
    }
}

pub fn dual(nesting: &Path) -> Result<ExitCode> {
    let text =
        fs::read_to_string(nesting).with_context(|| format!("reading {}", nesting.display()))?;
    let forest: NestingForest = text
        .parse()
        .with_context(|| format!("invalid nesting file {}", nesting.display()))?;
    print!("{}", dual_tree(&forest));
    Ok(ExitCode::SUCCESS)
}
