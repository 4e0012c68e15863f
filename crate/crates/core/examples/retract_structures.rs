//! Semigroups whose kernel is universal: every row constant, `a·b = a·a`.

use semitheta::representation::theta;
use semitheta::retract::{detect, enumerate_retract_semigroups};

fn main() {
    for n in 1..=4 {
        println!("order {}:", n);
        for r in enumerate_retract_semigroups(n) {
            let s = r.semigroup();
            assert!(detect(s).is_some() && theta(s).index() == 1);
            let phi: Vec<String> = (0..n).map(|a| format!("{}->{}", a, r.phi(a))).collect();
            println!(
                "  E = {:?}, phi = {}, fibers {:?}",
                r.idempotents().as_slice(),
                phi.join(" "),
                r.fiber_profile()
            );
        }
    }
}
