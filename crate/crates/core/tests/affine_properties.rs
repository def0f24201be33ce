//! Crossing sets and the checks behind inserting a full column word.

mod common;

use common::*;
use gallery_crystal::affine::{appendix_check, crossing_sets, random_gallery, AffineRoot};
use gallery_crystal::{Column, Gallery, Rank};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_gallery(n: usize, max_columns: usize) -> impl Strategy<Value = Gallery> {
    let full = (1u64 << n) - 1;
    prop::collection::vec(1u64..full, 0..=max_columns).prop_map(move |bits| {
        Gallery::from_columns(Rank::new(n).unwrap(), bits.into_iter().map(Column::from_bits).collect()).unwrap()
    })
}

#[test]
fn crossing_sets_of_the_column_word() {
    let root = |a, b, level| AffineRoot { a, b, level };
    let sets = crossing_sets(&word_gallery(3, &[1, 2, 3])).segments;
    assert_eq!(sets, vec![vec![root(1, 2, 0), root(1, 3, 0)], vec![root(2, 3, 0)], vec![]]);
}

#[test]
fn appendix_checks_on_all_pairs_with_two_columns() {
    for n in 2..=3 {
        let small = galleries_with_columns(n, 2);
        for gamma in &small {
            for delta in &small {
                appendix_at(gamma, delta).unwrap();
            }
        }
    }
}

#[test]
fn seeded_random_galleries_are_reproducible() {
    let draw = |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..5).map(|_| random_gallery(&mut rng, rank(4), 6).to_string()).collect::<Vec<_>>()
    };
    assert_eq!(draw(7), draw(7));
    assert_ne!(draw(7), draw(8));
}

proptest! {
    #[test]
    fn sum_rule(g in (2usize..=6).prop_flat_map(|n| arb_gallery(n, 10))) {
        prop_assert!(crossing_sum_rule(&g).is_ok(), "{:?}", crossing_sum_rule(&g));
    }

    #[test]
    fn appendix_checks_on_random_pairs((gamma, delta) in (2usize..=5).prop_flat_map(|n| (arb_gallery(n, 6), arb_gallery(n, 6)))) {
        let report = appendix_check(&gamma, &delta).unwrap();
        prop_assert!(report.holds(), "{:?}", report);
    }
}
