//! Kernel classes, index and coincidence probability of a table file.
//!
//! `cargo run --example analyze_table -- data/table2.txt`

use semitheta::{representation, text};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "data/table1.txt".into());
    let src = std::fs::read_to_string(&path).expect("readable table file");
    let s = text::read_semigroup(&src).expect("valid semigroup table");
    let a = representation::analyze(&s);
    println!("{}: order {}", path, s.order());
    for class in a.theta.classes() {
        let names: Vec<&str> = class.iter().map(|&x| s.name(x)).collect();
        println!("  class {{{}}}", names.join(", "));
    }
    println!(
        "  index {}, probability {}, bound 1/{}",
        a.index, a.probability, a.index
    );
    println!("  attains bound: {}", a.attains_bound());
    println!(
        "  medial {}, left commutative {}, right commutative {}",
        s.is_medial(),
        s.is_left_commutative(),
        s.is_right_commutative()
    );
}
