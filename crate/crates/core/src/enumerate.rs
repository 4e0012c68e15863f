//! Exhaustive enumeration of small semigroups up to isomorphism.
//!
//! Cayley tables are filled in row-major order. Each assignment is checked
//! against every associativity instance whose cells are all known, and after
//! each completed row the partial table is rejected if some relabeling is
//! already lexicographically smaller on the known prefix. The emitted tables
//! are exactly the lexicographically minimal representatives, so each
//! isomorphism class appears once. Anti-isomorphic tables stay distinct.

use std::collections::{BTreeMap, BTreeSet};

use crate::classify::{
    check_half_probability, check_right_commutative_families, classify_medial_index2,
};
use crate::constructions::{enumerate_params, Family};
use crate::representation::{analyze, theta, Probability};
use crate::retract::detect;
use crate::semigroup::FiniteSemigroup;

/// Orders above this are allowed but slow (order 6 has 28634 classes).
pub const SOFT_ORDER_CAP: usize = 5;

const UNSET: usize = usize::MAX;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

struct Search<F> {
    n: usize,
    table: Vec<usize>,
    /// `(σ, σ⁻¹)` for every non-identity permutation.
    relabelings: Vec<(Vec<usize>, Vec<usize>)>,
    emit: F,
}

impl<F: FnMut(FiniteSemigroup)> Search<F> {
    fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// Associativity instances completed by the assignment `i·j`.
    fn consistent(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        let v = self.get(i, j);
        let known = |x: usize, y: usize| -> Option<usize> {
            if x == UNSET || y == UNSET {
                return None;
            }
            let p = self.get(x, y);
            (p != UNSET).then_some(p)
        };
        for z in 0..n {
            // (i·j)·z = i·(j·z)
            if let (Some(l), Some(r)) = (known(v, z), known(j, z).and_then(|jz| known(i, jz))) {
                if l != r {
                    return false;
                }
            }
            // (z·i)·j = z·(i·j)
            if let (Some(l), Some(r)) = (known(z, i).and_then(|zi| known(zi, j)), known(z, v)) {
                if l != r {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (x·y)·j = x·(y·j) with x·y = i
                if known(x, y) == Some(i) {
                    if let Some(r) = known(y, j).and_then(|yj| known(x, yj)) {
                        if r != v {
                            return false;
                        }
                    }
                }
                // (i·x)·y = i·(x·y) with x·y = j
                if known(x, y) == Some(j) {
                    if let Some(l) = known(i, x).and_then(|ix| known(ix, y)) {
                        if l != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// False if some relabeling is provably smaller than the table on its
    /// first `filled` cells.
    fn prefix_minimal(&self, filled: usize) -> bool {
        let n = self.n;
        'perm: for (sigma, tau) in &self.relabelings {
            for p in 0..filled {
                let (r, c) = (p / n, p % n);
                let src = self.get(tau[r], tau[c]);
                if src == UNSET {
                    continue 'perm;
                }
                let image = sigma[src];
                let here = self.table[p];
                if image < here {
                    return false;
                }
                if image > here {
                    continue 'perm;
                }
            }
        }
        true
    }

    fn fill(&mut self, pos: usize) {
        let n = self.n;
        if pos == n * n {
            let s = FiniteSemigroup::from_flat(n, &self.table)
                .expect("search only yields associative tables");
            (self.emit)(s);
            return;
        }
        let (i, j) = (pos / n, pos % n);
        for v in 0..n {
            self.table[pos] = v;
            if !self.consistent(i, j) {
                continue;
            }
            if j == n - 1 && !self.prefix_minimal(pos + 1) {
                continue;
            }
            self.fill(pos + 1);
        }
        self.table[pos] = UNSET;
    }
}

/// Streams one semigroup per isomorphism class of order `n`, in
/// lexicographic order of the flattened table. Elements are named `0..n`.
pub fn for_each_semigroup(n: usize, emit: impl FnMut(FiniteSemigroup)) {
    if n == 0 {
        return;
    }
    let relabelings = permutations(n)
        .into_iter()
        .skip(1)
        .map(|p| {
            let inv = inverse(&p);
            (p, inv)
        })
        .collect();
    let mut search = Search {
        n,
        table: vec![UNSET; n * n],
        relabelings,
        emit,
    };
    search.fill(0);
}

pub fn enumerate_semigroups(n: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    for_each_semigroup(n, |s| out.push(s));
    out
}

/// Lexicographically least flattened table over all relabelings.
pub fn canonical_form(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let mut best = s.flat_table().to_vec();
    let mut candidate = vec![0; n * n];
    for sigma in permutations(n) {
        let tau = inverse(&sigma);
        let mut smaller = false;
        for p in 0..n * n {
            let v = sigma[s.product(tau[p / n], tau[p % n])];
            candidate[p] = v;
            if !smaller {
                if v > best[p] {
                    break;
                }
                smaller = v < best[p];
            }
        }
        if smaller {
            best.copy_from_slice(&candidate);
        }
    }
    best
}

/// Conjunction of optional predicates; `None` fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusFilter {
    pub medial: Option<bool>,
    pub index: Option<usize>,
    pub probability: Option<Probability>,
    pub right_commutative: Option<bool>,
    pub theta_universal: Option<bool>,
}

impl CensusFilter {
    pub fn medial(mut self, value: bool) -> Self {
        self.medial = Some(value);
        self
    }

    pub fn index(mut self, value: usize) -> Self {
        self.index = Some(value);
        self
    }

    pub fn probability(mut self, value: Probability) -> Self {
        self.probability = Some(value);
        self
    }

    pub fn right_commutative(mut self, value: bool) -> Self {
        self.right_commutative = Some(value);
        self
    }

    pub fn theta_universal(mut self, value: bool) -> Self {
        self.theta_universal = Some(value);
        self
    }

    pub fn matches(&self, s: &FiniteSemigroup) -> bool {
        if self.medial.is_some_and(|m| s.is_medial() != m) {
            return false;
        }
        if self
            .right_commutative
            .is_some_and(|r| s.is_right_commutative() != r)
        {
            return false;
        }
        if self.index.is_some() || self.probability.is_some() || self.theta_universal.is_some() {
            let a = analyze(s);
            if self.index.is_some_and(|k| a.index != k)
                || self.probability.is_some_and(|p| a.probability != p)
                || self.theta_universal.is_some_and(|u| (a.index == 1) != u)
            {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct Census {
    pub order: usize,
    pub scanned: usize,
    pub hits: Vec<FiniteSemigroup>,
}

pub fn census(n: usize, filter: &CensusFilter) -> Census {
    let mut scanned = 0;
    let mut hits = Vec::new();
    for_each_semigroup(n, |s| {
        scanned += 1;
        if filter.matches(&s) {
            hits.push(s);
        }
    });
    Census {
        order: n,
        scanned,
        hits,
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Number of inputs the check applied to.
    pub instances: usize,
    pub counterexamples: Vec<FiniteSemigroup>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, s: &FiniteSemigroup) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(s.clone());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub max_order: usize,
    /// Classes scanned at each order `1..=max_order`.
    pub scanned: Vec<usize>,
    /// Medial index-2 classes per order and family.
    pub families: BTreeMap<(usize, Family), usize>,
    pub checks: Vec<CheckOutcome>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn total_scanned(&self) -> usize {
        self.scanned.iter().sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_RETRACT: &str = "retract structure iff universal kernel";
pub const CHECK_MEDIAL: &str = "medial iff left commutative quotient";
pub const CHECK_BOUND: &str = "probability bound and equality case";
pub const CHECK_ROUND_TRIP: &str = "medial index-2 classification round trip";
pub const CHECK_HALF: &str = "probability one half iff equal classes";
pub const CHECK_RIGHT_COMM: &str = "right commutative index-2 families";
pub const CHECK_SWEEP: &str = "construction sweep classifies back";
pub const CHECK_SWEEP_EQUALS_CENSUS: &str = "construction sweep equals census";

/// Runs every structural claim over all semigroups of order `1..=max_order`
/// and over all construction parameter sweeps of the same total size.
pub fn cross_validate(max_order: usize) -> CrossValidation {
    let mut retract = CheckOutcome::new(CHECK_RETRACT);
    let mut medial = CheckOutcome::new(CHECK_MEDIAL);
    let mut bound = CheckOutcome::new(CHECK_BOUND);
    let mut round_trip = CheckOutcome::new(CHECK_ROUND_TRIP);
    let mut half = CheckOutcome::new(CHECK_HALF);
    let mut right_comm = CheckOutcome::new(CHECK_RIGHT_COMM);
    let mut sweep = CheckOutcome::new(CHECK_SWEEP);
    let mut sweep_census = CheckOutcome::new(CHECK_SWEEP_EQUALS_CENSUS);
    let mut scanned = Vec::new();
    let mut families = BTreeMap::new();

    for n in 1..=max_order {
        let mut count = 0;
        let mut census_forms = BTreeSet::new();
        for_each_semigroup(n, |s| {
            count += 1;
            let analysis = analyze(&s);
            retract.record(detect(&s).is_some() == (analysis.index == 1), &s);
            let quotient = s.quotient(&analysis.theta).expect("kernel is a congruence");
            medial.record(s.is_medial() == quotient.is_left_commutative(), &s);
            bound.record(analysis.bound_consistent(), &s);
            half.record(check_half_probability(&s).consistent, &s);
            right_comm.record(check_right_commutative_families(&s).holds, &s);
            if analysis.index == 2 && s.is_medial() {
                let ok = match classify_medial_index2(&s) {
                    Ok(report) => {
                        *families.entry((n, report.family)).or_insert(0) += 1;
                        report.verified
                    }
                    Err(_) => false,
                };
                round_trip.record(ok, &s);
                census_forms.insert(s.flat_table().to_vec());
            }
        });
        scanned.push(count);

        let mut sweep_forms = BTreeSet::new();
        for family in Family::ALL {
            for a_len in 1..n {
                for params in enumerate_params(family, a_len, n - a_len) {
                    let built = match params.build() {
                        Ok(s) => s,
                        Err(_) => {
                            let placeholder =
                                FiniteSemigroup::from_fn(1, |_, _| 0).expect("trivial");
                            sweep.record(false, &placeholder);
                            continue;
                        }
                    };
                    let ok = built.is_medial()
                        && theta(&built).index() == 2
                        && classify_medial_index2(&built)
                            .is_ok_and(|r| r.family == family && r.verified);
                    sweep.record(ok, &built);
                    sweep_forms.insert(canonical_form(&built));
                }
            }
        }
        // census tables are already canonical
        let agree = sweep_forms == census_forms;
        let witness = sweep_forms
            .symmetric_difference(&census_forms)
            .next()
            .map(|t| FiniteSemigroup::from_flat(n, t).expect("associative"))
            .unwrap_or_else(|| FiniteSemigroup::from_fn(n, |x, _| x).expect("left zero"));
        sweep_census.record(agree, &witness);
    }

    CrossValidation {
        max_order,
        scanned,
        families,
        checks: vec![
            retract,
            medial,
            bound,
            round_trip,
            half,
            right_comm,
            sweep,
            sweep_census,
        ],
    }
}
