//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use num_rational::Ratio;
use semitheta::classify::classify_medial_index2;
use semitheta::constructions::{enumerate_params, BareSet, ConstructionParams, Family};
use semitheta::enumerate::enumerate_semigroups;
use semitheta::retract::detect;
use semitheta::{analyze, theta, ElementMap, FiniteSemigroup, RetractSemigroup};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn names(list: &str) -> Vec<String> {
    list.split_whitespace().map(str::to_string).collect()
}

fn map(codomain: usize, image: &[usize]) -> ElementMap {
    ElementMap::new(codomain, image.to_vec()).unwrap()
}

fn retract(list: &str, phi: &[usize]) -> RetractSemigroup {
    RetractSemigroup::from_retraction(names(list), phi.to_vec()).unwrap()
}

/// The four worked examples, with their tables written out by hand.
fn golden() -> Vec<(ConstructionParams, &'static str, Vec<Vec<&'static str>>)> {
    vec![
        (
            ConstructionParams::Semilattice {
                a: retract("a 0", &[1, 1]),
                b: retract("e f", &[0, 1]),
                alpha: map(2, &[0, 0]),
                beta: map(2, &[0, 1]),
            },
            "a 0 e f",
            vec![
                vec!["0", "0", "e", "e"],
                vec!["0", "0", "e", "e"],
                vec!["e", "e", "e", "e"],
                vec!["f", "f", "f", "f"],
            ],
        ),
        (
            ConstructionParams::Zero {
                a: BareSet::new(names("a")).unwrap(),
                b: retract("b 0", &[1, 1]),
                alpha: map(2, &[0]),
                beta: map(2, &[1]),
                gamma: map(2, &[1, 1]),
            },
            "a b 0",
            vec![
                vec!["b", "0", "0"],
                vec!["0", "0", "0"],
                vec!["0", "0", "0"],
            ],
        ),
        (
            ConstructionParams::Group {
                a: retract("e", &[0]),
                b: BareSet::new(names("x y")).unwrap(),
                alpha: map(2, &[0]),
                gamma: map(1, &[0, 0]),
            },
            "e x y",
            vec![
                vec!["e", "x", "x"],
                vec!["x", "e", "e"],
                vec!["x", "e", "e"],
            ],
        ),
        (
            ConstructionParams::RightZero {
                a: retract("e f", &[0, 1]),
                b: retract("g h", &[0, 1]),
                alpha: map(2, &[0, 1]),
                beta: map(2, &[0, 1]),
            },
            "e f g h",
            vec![
                vec!["e", "e", "g", "g"],
                vec!["f", "f", "h", "h"],
                vec!["e", "e", "g", "g"],
                vec!["f", "f", "h", "h"],
            ],
        ),
    ]
}

fn named_rows(s: &FiniteSemigroup) -> Vec<Vec<&str>> {
    (0..s.order())
        .map(|x| s.row(x).iter().map(|&p| s.name(p)).collect())
        .collect()
}

fn golden_tables() -> Outcome {
    for (params, header, rows) in golden() {
        let family = params.family().number();
        let s = params
            .build()
            .map_err(|e| format!("family {}: {}", family, e))?;
        if s.names() != names(header).as_slice() || named_rows(&s) != rows {
            return Err(format!("family {} built\n{}", family, s));
        }
        if construct_table(&params) != table_of(&s) {
            return Err(format!(
                "family {} disagrees with the reference operation",
                family
            ));
        }
    }
    Ok("tables 1-4 reproduced cell for cell".into())
}

fn theta_on_tables() -> Outcome {
    let expected = [
        (vec![2, 2], Ratio::new(1, 2)),
        (vec![1, 2], Ratio::new(5, 9)),
        (vec![1, 2], Ratio::new(5, 9)),
        (vec![2, 2], Ratio::new(1, 2)),
    ];
    for ((params, ..), (sizes, p)) in golden().into_iter().zip(expected) {
        let s = params.build().unwrap();
        let a = analyze(&s);
        let mut got = a.class_sizes.clone();
        got.sort_unstable();
        let (related, total) = related_pairs(&table_of(&s));
        if a.index != 2 || got != sizes || a.probability != p || Ratio::new(related, total) != p {
            return Err(format!(
                "family {}: index {}, sizes {:?}, P {}",
                params.family().number(),
                a.index,
                a.class_sizes,
                a.probability
            ));
        }
    }
    Ok("(2,[2,2],1/2) (2,[1,2],5/9) (2,[1,2],5/9) (2,[2,2],1/2)".into())
}

fn retract_iff_universal(census: &[FiniteSemigroup]) -> Outcome {
    for s in census {
        let t = table_of(s);
        let universal = column_classes(&t).len() == 1;
        let detected = detect(s).is_some();
        if detected != universal
            || detected != rows_constant(&t)
            || universal != (theta(s).index() == 1)
        {
            return Err(format!("counterexample\n{}", s));
        }
    }
    Ok(format!("{} semigroups, 0 counterexamples", census.len()))
}

fn medial_iff_left_commutative_quotient(census: &[FiniteSemigroup]) -> Outcome {
    for s in census {
        let t = table_of(s);
        let q = quotient(&t, &column_classes(&t));
        let lib_q = s.quotient(&theta(s)).unwrap();
        let medial = is_medial(&t);
        if medial != is_left_commutative(&q)
            || medial != s.is_medial()
            || lib_q.is_left_commutative() != is_left_commutative(&q)
        {
            return Err(format!("counterexample\n{}", s));
        }
    }
    Ok(format!("{} semigroups, 0 counterexamples", census.len()))
}

fn probability_bound(census: &[FiniteSemigroup]) -> Outcome {
    for s in census {
        let a = analyze(s);
        let (related, total) = related_pairs(&table_of(s));
        let k = a.index as u64;
        let equal = a.class_sizes.iter().all(|&c| c == a.class_sizes[0]);
        let meets = related * k >= total;
        let attains = related * k == total;
        if a.probability != Ratio::new(related, total)
            || !meets
            || attains != equal
            || a.probability < Ratio::new(1, k)
        {
            return Err(format!("counterexample\n{}", s));
        }
    }
    Ok(format!("{} semigroups, 0 counterexamples", census.len()))
}

fn round_trip(census: &[FiniteSemigroup]) -> Outcome {
    let mut members = 0;
    for s in census {
        let t = table_of(s);
        let classes = column_classes(&t);
        if classes.len() != 2 || !is_medial(&t) {
            continue;
        }
        members += 1;
        let family = two_element_family(&quotient(&t, &classes));
        let report = classify_medial_index2(s).map_err(|e| format!("{}\n{}", e, s))?;
        if family != Some(report.family.number()) || !report.verified || report.rebuilt != *s {
            return Err(format!("bad classification\n{}", s));
        }
        // rebuild with the reference operation and map back through the layout
        let built = construct_table(&report.params);
        let l = &report.layout;
        let n = s.order();
        let agrees = (0..n).all(|i| (0..n).all(|j| t[l[i]][l[j]] == l[built[i][j]]));
        if !agrees {
            return Err(format!("reference rebuild differs\n{}", s));
        }
    }
    let mut swept = 0;
    for family in Family::ALL {
        for total in 2..=4 {
            for a_len in 1..total {
                for params in enumerate_params(family, a_len, total - a_len) {
                    swept += 1;
                    let s = params.build().map_err(|e| e.to_string())?;
                    let t = table_of(&s);
                    let ok = construct_table(&params) == t
                        && is_associative(&t)
                        && is_medial(&t)
                        && column_classes(&t).len() == 2
                        && classify_medial_index2(&s).map(|r| r.family) == Ok(family);
                    if !ok {
                        return Err(format!("sweep output fails\n{}", s));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} census members and {} swept parameter sets, 0 failures",
        members, swept
    ))
}

fn half_probability(order4: &[FiniteSemigroup]) -> Outcome {
    let mut by_probability = BTreeSet::new();
    let mut by_shape = BTreeSet::new();
    for (i, s) in order4.iter().enumerate() {
        let t = table_of(s);
        let (related, total) = related_pairs(&t);
        if is_medial(&t) && column_classes(&t).len() == 2 && 2 * related == total {
            by_probability.insert(i);
        }
        if let Ok(r) = classify_medial_index2(s) {
            if r.a.len() == 2 && r.b.len() == 2 {
                by_shape.insert(i);
            }
        }
    }
    if by_probability != by_shape || by_shape.is_empty() {
        return Err(format!("{:?} vs {:?}", by_probability, by_shape));
    }
    Ok(format!(
        "both sets have {} members at order 4",
        by_shape.len()
    ))
}

fn right_commutative_families(census: &[FiniteSemigroup]) -> Outcome {
    let (mut rc, mut fourth) = (0, 0);
    for s in census {
        let t = table_of(s);
        if column_classes(&t).len() != 2 {
            continue;
        }
        let family = classify_medial_index2(s).ok().map(|r| r.family.number());
        if is_right_commutative(&t) {
            rc += 1;
            if !matches!(family, Some(1..=3)) {
                return Err(format!("right commutative but family {:?}\n{}", family, s));
            }
        }
        if family == Some(4) {
            fourth += 1;
            let Some([a, x, y]) = s.right_commutative_violation() else {
                return Err(format!("family 4 without a witness\n{}", s));
            };
            if t[t[a][x]][y] == t[t[a][y]][x] {
                return Err(format!(
                    "witness ({}, {}, {}) does not violate\n{}",
                    a, x, y, s
                ));
            }
        }
    }
    Ok(format!(
        "{} right commutative members in families 1-3, {} family-4 members with witnesses",
        rc, fourth
    ))
}

fn census_counts(census_by_order: &[Vec<FiniteSemigroup>]) -> Outcome {
    let counts: Vec<usize> = census_by_order.iter().map(Vec::len).collect();
    if counts != [1, 5, 24, 188] {
        return Err(format!("counts {:?}", counts));
    }
    for n in 1..=3 {
        let naive = naive_class_count(n);
        if naive != counts[n - 1] {
            return Err(format!("order {}: naive {} vs {}", n, naive, counts[n - 1]));
        }
        let canon: BTreeSet<Vec<usize>> = census_by_order[n - 1]
            .iter()
            .map(|s| canonical(&table_of(s)))
            .collect();
        if canon.len() != counts[n - 1] {
            return Err(format!("order {}: duplicate classes", n));
        }
    }
    Ok("1, 5, 24, 188; naive search agrees for n <= 3".into())
}

fn main() {
    let census_by_order: Vec<Vec<FiniteSemigroup>> = (1..=4).map(enumerate_semigroups).collect();
    let census: Vec<FiniteSemigroup> = census_by_order.iter().flatten().cloned().collect();

    let criteria: Vec<Criterion> = vec![
        ("golden tables", Box::new(golden_tables)),
        ("theta and P on the four tables", Box::new(theta_on_tables)),
        (
            "retract structure iff one kernel class",
            Box::new(|| retract_iff_universal(&census)),
        ),
        (
            "medial iff left commutative quotient",
            Box::new(|| medial_iff_left_commutative_quotient(&census)),
        ),
        ("probability bound", Box::new(|| probability_bound(&census))),
        (
            "classification round trip",
            Box::new(|| round_trip(&census)),
        ),
        (
            "probability 1/2 iff |A| = |B| = 2 at order 4",
            Box::new(|| half_probability(&census_by_order[3])),
        ),
        (
            "right commutative index 2 avoids family 4",
            Box::new(|| right_commutative_families(&census)),
        ),
        (
            "census counts",
            Box::new(|| census_counts(&census_by_order)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {} PASS {}: {} ({:.2?})",
                i + 1,
                name,
                detail,
                elapsed
            ),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {}: {}", i + 1, name, detail);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
