//! Counts semigroups up to isomorphism and tallies the medial index-2 ones
//! by family.
//!
//! `cargo run --release --example census -- 5`

use std::collections::BTreeMap;
use std::time::Instant;

use semitheta::classify::classify_medial_index2;
use semitheta::enumerate::for_each_semigroup;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("order"));
    for n in 1..=max {
        let start = Instant::now();
        let mut total = 0;
        let mut families = BTreeMap::new();
        for_each_semigroup(n, |s| {
            total += 1;
            if let Ok(r) = classify_medial_index2(&s) {
                *families.entry(r.family.number()).or_insert(0) += 1;
            }
        });
        println!(
            "order {}: {} classes, medial index 2 by family {:?} ({:.2?})",
            n,
            total,
            families,
            start.elapsed()
        );
    }
}
