mod common;

use common::random_relabeling;
use itertools::Itertools;
use lando_core::enumeration::enumerate_trees;
use lando_core::realizability::{
    find_realizable_bijection, inverse_gaps, is_realizable, recheck_certificate,
    scan_all_bijections, EdgeBijection, Verdict,
};
use lando_core::survey::{build_g, build_h};
use lando_core::{Certificate, SearchStats, Tree};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn catalogs(max: usize) -> Vec<Vec<Tree>> {
    (0..=max)
        .map(|n| enumerate_trees(n).unwrap().trees().cloned().collect())
        .collect()
}

#[test]
fn identity_is_realizable_for_every_tree_up_to_seven_edges() {
    let mut rng = StdRng::seed_from_u64(7);
    for cat in catalogs(7) {
        for t in &cat {
            let n = t.edge_count();
            assert!(is_realizable(t, t, &EdgeBijection::identity(n)).unwrap());
            let r = random_relabeling(&mut rng, t);
            assert!(is_realizable(&r, &r, &EdgeBijection::identity(n)).unwrap());
        }
    }
}

#[test]
fn every_tree_is_friendly_with_itself() {
    for cat in catalogs(7) {
        for t in &cat {
            let c = find_realizable_bijection(t, t).unwrap();
            assert_eq!(c.verdict, Verdict::Friendly, "{t:?}");
            assert!(is_realizable(t, t, c.witness.as_ref().unwrap()).unwrap());
        }
    }
}

#[test]
fn pruned_search_agrees_with_unpruned_scan() {
    for cat in catalogs(6) {
        for a in &cat {
            for b in &cat {
                let c = find_realizable_bijection(a, b).unwrap();
                let scan = scan_all_bijections(a, b).unwrap();
                assert_eq!(scan.checked, (1..=a.edge_count() as u64).product::<u64>());
                assert_eq!(c.is_friendly(), !scan.realizable.is_empty());
                if let Some(w) = &c.witness {
                    assert!(scan.realizable.contains(w));
                } else {
                    assert_eq!(c.stats.covered, scan.checked);
                }
            }
        }
    }
}

#[test]
fn verdicts_are_symmetric_up_to_seven_edges() {
    for cat in catalogs(7) {
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                let ab = find_realizable_bijection(a, b).unwrap().verdict;
                let ba = find_realizable_bijection(b, a).unwrap().verdict;
                assert_eq!(ab, ba, "{a:?} vs {b:?}");
            }
        }
    }
}

#[test]
fn verdicts_survive_relabeling() {
    let mut rng = StdRng::seed_from_u64(100);
    let (g, h) = (build_g(), build_h());
    let cat7 = enumerate_trees(7).unwrap();
    let trees: Vec<&Tree> = cat7.trees().collect();
    for i in 0..100 {
        let (a, b) = if i % 2 == 0 {
            (g.clone(), h.clone())
        } else {
            (
                trees[i % trees.len()].clone(),
                trees[(i * 7) % trees.len()].clone(),
            )
        };
        let base = find_realizable_bijection(&a, &b).unwrap().verdict;
        let ra = random_relabeling(&mut rng, &a);
        let rb = random_relabeling(&mut rng, &b);
        assert_eq!(find_realizable_bijection(&ra, &rb).unwrap().verdict, base);
    }
}

#[test]
fn certificates_recheck() {
    let path = Tree::path(3).unwrap();
    let star = Tree::star(3).unwrap();
    let c = find_realizable_bijection(&path, &star).unwrap();
    assert!(recheck_certificate(&path, &star, &c).unwrap());
    assert!(is_realizable(&path, &star, &EdgeBijection::identity(3)).unwrap());

    // a witness that is a bijection but not realizable
    let (g, h) = (build_g(), build_h());
    let forged = Certificate::friendly(EdgeBijection::identity(7), SearchStats::default());
    assert!(!recheck_certificate(&g, &h, &forged).unwrap());

    let t = Tree::path(4).unwrap();
    let mut c = find_realizable_bijection(&t, &t).unwrap();
    assert!(recheck_certificate(&t, &t, &c).unwrap());
    let bad = (0..4)
        .permutations(4)
        .map(|m| EdgeBijection::new(m).unwrap())
        .find(|h| !is_realizable(&t, &t, h).unwrap())
        .expect("some bijection of P4 is not realizable");
    c.witness = Some(bad);
    assert!(!recheck_certificate(&t, &t, &c).unwrap());
}

#[test]
fn theorem_pair_is_unfriendly_and_rechecks() {
    let (g, h) = (build_g(), build_h());
    let c = find_realizable_bijection(&g, &h).unwrap();
    assert_eq!(c.verdict, Verdict::Unfriendly);
    assert_eq!(c.stats.covered, 5040);
    assert!(recheck_certificate(&g, &h, &c).unwrap());
    let scan = scan_all_bijections(&g, &h).unwrap();
    assert_eq!(scan.checked, 5040);
    assert!(scan.realizable.is_empty());
}

// Per-bijection symmetry is not implied by the definition. Observed: every
// realizable bijection between trees with at most 6 edges has a realizable
// inverse.
#[test]
fn inverses_of_realizable_bijections_up_to_six_edges() {
    let mut gaps = 0;
    for cat in catalogs(6) {
        for a in &cat {
            for b in &cat {
                gaps += inverse_gaps(a, b).unwrap().len();
            }
        }
    }
    println!("realizable bijections with non-realizable inverse (<= 6 edges): {gaps}");
    assert_eq!(gaps, 0);
}
