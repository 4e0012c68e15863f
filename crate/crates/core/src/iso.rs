//! Isomorphism search between Cayley tables.
//!
//! Backtracking over partial bijections, assigning images in ascending index
//! order. Candidates are pruned by an element signature that is invariant
//! under relabeling; the first witness found is returned.

use crate::semigroup::{ElementMap, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    row_profile: Vec<usize>,
    column_profile: Vec<usize>,
    occurrences: usize,
}

fn multiplicity_profile(values: impl Iterator<Item = usize>, n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for v in values {
        counts[v] += 1;
    }
    counts.retain(|&c| c > 0);
    counts.sort_unstable();
    counts
}

fn signatures(s: &FiniteSemigroup) -> Vec<Signature> {
    let n = s.order();
    let mut occurrences = vec![0; n];
    for &p in s.flat_table() {
        occurrences[p] += 1;
    }
    (0..n)
        .map(|x| Signature {
            idempotent: s.is_idempotent(x),
            row_profile: multiplicity_profile(s.row(x).iter().copied(), n),
            column_profile: multiplicity_profile((0..n).map(|y| s.product(y, x)), n),
            occurrences: occurrences[x],
        })
        .collect()
}

/// Returns `σ: S → T` with `σ(x·y) = σ(x)·σ(y)` if one exists.
pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<ElementMap> {
    let n = s.order();
    if n != t.order() {
        return None;
    }
    let sig_s = signatures(s);
    let sig_t = signatures(t);
    let mut sorted_s = sig_s.clone();
    let mut sorted_t = sig_t.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sig_s[x] == sig_t[y]).collect())
        .collect();
    let mut search = Search {
        s,
        t,
        candidates,
        forward: vec![None; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        let image = search
            .forward
            .into_iter()
            .map(|y| y.expect("complete"))
            .collect();
        Some(ElementMap::new(n, image).expect("bijection within range"))
    } else {
        None
    }
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    candidates: Vec<Vec<usize>>,
    forward: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, x: usize) -> bool {
        if x == self.s.order() {
            return true;
        }
        for i in 0..self.candidates[x].len() {
            let y = self.candidates[x][i];
            if self.used[y] {
                continue;
            }
            self.forward[x] = Some(y);
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.forward[x] = None;
            self.used[y] = false;
        }
        false
    }

    /// Checks every product among assigned elements that involves `x`.
    fn consistent(&self, x: usize) -> bool {
        for u in 0..=x {
            let su = self.forward[u].expect("assigned");
            let sx = self.forward[x].expect("assigned");
            for (a, b, sa, sb) in [(u, x, su, sx), (x, u, sx, su)] {
                let target = self.t.product(sa, sb);
                let p = self.s.product(a, b);
                match self.forward[p] {
                    Some(sp) if sp != target => return false,
                    None if self.used[target] => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Checks that `map` is a bijective homomorphism from `s` onto `t`.
pub fn is_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &ElementMap) -> bool {
    let n = s.order();
    if t.order() != n || map.domain() != n || map.codomain() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for x in 0..n {
        if std::mem::replace(&mut hit[map.apply(x)], true) {
            return false;
        }
    }
    (0..n).all(|x| {
        (0..n).all(|y| map.apply(s.product(x, y)) == t.product(map.apply(x), map.apply(y)))
    })
}
