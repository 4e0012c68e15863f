//! Order-4 medial semigroups with two kernel classes: probability 1/2
//! occurs exactly when the classes have equal size.

use semitheta::classify::classify_medial_index2;
use semitheta::enumerate::{census, CensusFilter};
use semitheta::report::fraction;
use semitheta::representation::analyze;

fn main() {
    let hits = census(4, &CensusFilter::default().medial(true).index(2)).hits;
    for s in &hits {
        let a = analyze(s);
        let r = classify_medial_index2(s).expect("medial index 2");
        println!(
            "family {} |A|={} |B|={} sizes {:?} P={}",
            r.family.number(),
            r.a.len(),
            r.b.len(),
            a.class_sizes,
            fraction(&a.probability)
        );
    }
}
