//! Runs every structural check over the census and the construction sweeps.
//!
//! `cargo run --release --example cross_validate -- 5`

use semitheta::enumerate::cross_validate;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("order"));
    let v = cross_validate(max);
    println!("scanned {:?} (total {})", v.scanned, v.total_scanned());
    for check in &v.checks {
        println!(
            "{} {} ({} instances)",
            if check.passed() { "ok  " } else { "FAIL" },
            check.name,
            check.instances
        );
    }
    for ((order, family), count) in &v.families {
        println!("order {} family {}: {}", order, family.number(), count);
    }
    std::process::exit(if v.passed() { 0 } else { 1 });
}
