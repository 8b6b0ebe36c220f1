use lando_core::enumeration::{enumerate_trees, prufer_oracle_count};
use lando_core::{canonical_code, is_isomorphic};

// Class counts for 1..=8 edges as produced by the Prüfer oracle.
const ORACLE_COUNTS: [usize; 8] = [1, 1, 2, 3, 6, 11, 23, 47];

#[test]
fn catalog_sizes_match_the_oracle() {
    for n in 1..=8 {
        let oracle = prufer_oracle_count(n).unwrap();
        assert_eq!(
            oracle,
            ORACLE_COUNTS[n - 1],
            "frozen oracle count, edges={n}"
        );
        assert_eq!(enumerate_trees(n).unwrap().len(), oracle, "edges={n}");
    }
}

#[test]
fn catalogs_up_to_twelve_edges() {
    let sizes: Vec<usize> = (0..=12)
        .map(|n| enumerate_trees(n).unwrap().len())
        .collect();
    assert_eq!(
        sizes,
        vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301]
    );
}

#[test]
fn catalog_entries_are_pairwise_non_isomorphic() {
    let cat = enumerate_trees(7).unwrap();
    let trees: Vec<_> = cat.trees().collect();
    for (i, a) in trees.iter().enumerate() {
        assert_eq!(&canonical_code(a), cat.get(i).unwrap().0);
        for b in &trees[i + 1..] {
            assert!(!is_isomorphic(a, b));
        }
    }
}
