//! Isomorphism search and canonical forms.

use semitheta::enumerate::canonical_form;
use semitheta::{are_isomorphic, fixtures};

fn main() {
    let s = fixtures::group_extension();
    let relabeled = s
        .relabel(&[2, 0, 1])
        .and_then(|t| t.with_names(vec!["p".into(), "q".into(), "r".into()]))
        .unwrap();
    let map = are_isomorphic(&s, &relabeled).expect("a relabeling is isomorphic");
    for x in 0..s.order() {
        println!("{} -> {}", s.name(x), relabeled.name(map.apply(x)));
    }
    assert_eq!(canonical_form(&s), canonical_form(&relabeled));

    let lz = fixtures::left_zero(2);
    let rz = fixtures::right_zero(2);
    println!(
        "left zero 2 vs right zero 2: {:?}",
        are_isomorphic(&lz, &rz).map(|m| m.image().to_vec())
    );
}
