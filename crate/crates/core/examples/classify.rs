//! Recovers the construction and its maps from each example table.

use semitheta::classify::{classify_medial_index2, ClassifyError};
use semitheta::{fixtures, report};

fn main() {
    let tables = [
        ("table 1", fixtures::semilattice_extension()),
        ("table 2", fixtures::zero_extension()),
        ("table 3", fixtures::group_extension()),
        ("table 4", fixtures::right_zero_extension()),
        ("left zero 3", fixtures::left_zero(3)),
        ("monoid", fixtures::monoid_with_left_zero_pair()),
    ];
    for (label, s) in tables {
        println!("== {}", label);
        match classify_medial_index2(&s) {
            Ok(r) => print!("{}", report::classification_text(&r)),
            Err(ClassifyError::Rejected(why)) => println!("rejected: {}", why),
            Err(e) => println!("error: {}", e),
        }
    }
}
