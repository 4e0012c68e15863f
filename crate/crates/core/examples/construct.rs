//! Builds each family's worked example and prints its parameter file and table.

use semitheta::constructions::{examples, Family};
use semitheta::text;

fn main() {
    for family in Family::ALL {
        let params = examples::for_family(family);
        let s = params.build().expect("worked example is valid");
        println!("== {}", family);
        print!("{}", text::format_params(&params));
        println!("--");
        print!("{}", text::format_table(&s));
        println!();
    }
}
