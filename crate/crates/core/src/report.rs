//! JSON and plain-text reports.
//!
//! JSON objects come out with sorted keys, so equal inputs give byte-identical
//! documents.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::classify::{ClassificationReport, Rejection};
use crate::constructions::{BareSet, ConstructionParams};
use crate::representation::{analyze, Probability, ThetaAnalysis};
use crate::retract::RetractSemigroup;
use crate::semigroup::{ElementMap, FiniteSemigroup};

/// `p/q` in lowest terms, with the denominator even when it is 1.
pub fn fraction(p: &Probability) -> String {
    format!("{}/{}", p.numer(), p.denom())
}

fn names_of(s: &FiniteSemigroup, members: &[usize]) -> Vec<String> {
    members.iter().map(|&x| s.name(x).to_string()).collect()
}

fn class_label(s: &FiniteSemigroup, members: &[usize]) -> String {
    format!("{{{}}}", names_of(s, members).join(","))
}

fn identities_json(s: &FiniteSemigroup) -> Value {
    json!({
        "medial": s.is_medial(),
        "left_comm": s.is_left_commutative(),
        "right_comm": s.is_right_commutative(),
    })
}

fn theta_json(s: &FiniteSemigroup, a: &ThetaAnalysis) -> Value {
    let classes: Vec<Vec<String>> = a.theta.classes().iter().map(|c| names_of(s, c)).collect();
    json!({
        "classes": classes,
        "index": a.index,
        "class_sizes": a.class_sizes,
        "probability": fraction(&a.probability),
    })
}

/// The part of every report that describes the semigroup itself.
pub fn analysis_json(s: &FiniteSemigroup) -> Value {
    let a = analyze(s);
    json!({
        "order": s.order(),
        "associative": true,
        "identities": identities_json(s),
        "theta": theta_json(s, &a),
    })
}

pub fn non_associative_json(order: usize, witness: [&str; 3]) -> Value {
    json!({
        "order": order,
        "associative": false,
        "witness": witness,
    })
}

fn map_json(map: &ElementMap, domain: &[String], codomain: &[String]) -> Value {
    let entries: Map<String, Value> = map
        .image()
        .iter()
        .enumerate()
        .map(|(x, &y)| (domain[x].clone(), Value::String(codomain[y].clone())))
        .collect();
    Value::Object(entries)
}

fn retract_part_json(part: &RetractSemigroup) -> Value {
    let s = part.semigroup();
    let table: Vec<Vec<&str>> = (0..s.order())
        .map(|x| s.row(x).iter().map(|&p| s.name(p)).collect())
        .collect();
    json!({ "kind": "semigroup", "elements": s.names(), "table": table })
}

fn set_part_json(part: &BareSet) -> Value {
    json!({ "kind": "set", "elements": part.names() })
}

pub fn params_json(params: &ConstructionParams) -> Value {
    let (na, nb) = (params.a_names(), params.b_names());
    match params {
        ConstructionParams::Semilattice { a, b, alpha, beta } => json!({
            "A": retract_part_json(a),
            "B": retract_part_json(b),
            "alpha": map_json(alpha, na, nb),
            "beta": map_json(beta, nb, nb),
        }),
        ConstructionParams::Zero {
            a,
            b,
            alpha,
            beta,
            gamma,
        } => json!({
            "A": set_part_json(a),
            "B": retract_part_json(b),
            "alpha": map_json(alpha, na, nb),
            "beta": map_json(beta, na, nb),
            "gamma": map_json(gamma, nb, nb),
        }),
        ConstructionParams::Group { a, b, alpha, gamma } => json!({
            "A": retract_part_json(a),
            "B": set_part_json(b),
            "alpha": map_json(alpha, na, nb),
            "gamma": map_json(gamma, nb, na),
        }),
        ConstructionParams::RightZero { a, b, alpha, beta } => json!({
            "A": retract_part_json(a),
            "B": retract_part_json(b),
            "alpha": map_json(alpha, na, nb),
            "beta": map_json(beta, nb, na),
        }),
    }
}

pub fn classification_json(report: &ClassificationReport) -> Value {
    json!({
        "family": report.family.number(),
        "params": params_json(&report.params),
        "verified": report.verified,
    })
}

pub fn rejection_json(rejection: &Rejection, index: usize) -> Value {
    let reason = match rejection {
        Rejection::IndexNot2(_) => "IndexNot2",
        Rejection::QuotientNotLeftCommutative => "QuotientNotLeftCommutative",
    };
    json!({ "reason": reason, "index": index, "message": rejection.to_string() })
}

/// Adds `key: value` to a JSON object.
pub fn with_field(mut doc: Value, key: &str, value: Value) -> Value {
    if let Value::Object(m) = &mut doc {
        m.insert(key.to_string(), value);
    }
    doc
}

pub fn to_json_string(doc: &Value) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    out.push('\n');
    out
}

pub fn analysis_text(s: &FiniteSemigroup) -> String {
    let a = analyze(s);
    let classes: Vec<String> = a
        .theta
        .classes()
        .iter()
        .map(|c| class_label(s, c))
        .collect();
    let sizes: Vec<String> = a.class_sizes.iter().map(usize::to_string).collect();
    let mut out = String::new();
    writeln!(out, "order: {}", s.order()).unwrap();
    writeln!(out, "associative: true").unwrap();
    writeln!(out, "medial: {}", s.is_medial()).unwrap();
    writeln!(out, "left commutative: {}", s.is_left_commutative()).unwrap();
    writeln!(out, "right commutative: {}", s.is_right_commutative()).unwrap();
    writeln!(out, "theta classes: {}", classes.join(" ")).unwrap();
    writeln!(out, "index: {}", a.index).unwrap();
    writeln!(out, "class sizes: {}", sizes.join(" ")).unwrap();
    writeln!(out, "probability: {}", fraction(&a.probability)).unwrap();
    out
}

fn map_text(map: &ElementMap, domain: &[String], codomain: &[String]) -> String {
    let pairs: Vec<String> = map
        .image()
        .iter()
        .enumerate()
        .map(|(x, &y)| format!("{} -> {}", domain[x], codomain[y]))
        .collect();
    pairs.join(", ")
}

pub fn params_text(params: &ConstructionParams) -> String {
    let (na, nb) = (params.a_names(), params.b_names());
    let mut out = String::new();
    writeln!(out, "A: {}", na.join(" ")).unwrap();
    writeln!(out, "B: {}", nb.join(" ")).unwrap();
    let maps: Vec<(&str, &ElementMap, &[String], &[String])> = match params {
        ConstructionParams::Semilattice { alpha, beta, .. } => {
            vec![("alpha", alpha, na, nb), ("beta", beta, nb, nb)]
        }
        ConstructionParams::Zero {
            alpha, beta, gamma, ..
        } => {
            vec![
                ("alpha", alpha, na, nb),
                ("beta", beta, na, nb),
                ("gamma", gamma, nb, nb),
            ]
        }
        ConstructionParams::Group { alpha, gamma, .. } => {
            vec![("alpha", alpha, na, nb), ("gamma", gamma, nb, na)]
        }
        ConstructionParams::RightZero { alpha, beta, .. } => {
            vec![("alpha", alpha, na, nb), ("beta", beta, nb, na)]
        }
    };
    for (name, map, dom, cod) in maps {
        writeln!(out, "{}: {}", name, map_text(map, dom, cod)).unwrap();
    }
    out
}

pub fn classification_text(report: &ClassificationReport) -> String {
    format!(
        "family: {}\n{}verified: {}\n",
        report.family,
        params_text(&report.params),
        report.verified
    )
}
