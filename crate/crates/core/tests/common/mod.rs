//! Brute-force reference implementations working on plain `Vec<Vec<usize>>`
//! tables, kept independent of the library code they check.

#![allow(dead_code)]

use semitheta::constructions::ConstructionParams;
use semitheta::FiniteSemigroup;

pub type Table = Vec<Vec<usize>>;

pub fn table_of(s: &FiniteSemigroup) -> Table {
    (0..s.order()).map(|x| s.row(x).to_vec()).collect()
}

pub fn is_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

/// Kernel classes by pairwise column comparison, in order of least element.
pub fn column_classes(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    let same = |a: usize, b: usize| (0..n).all(|s| t[s][a] == t[s][b]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        match classes.iter_mut().find(|c| same(c[0], a)) {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    classes
}

/// Related ordered pairs and `n²`, not reduced.
pub fn related_pairs(t: &Table) -> (u64, u64) {
    let n = t.len();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            if (0..n).all(|s| t[s][a] == t[s][b]) {
                count += 1;
            }
        }
    }
    (count, (n * n) as u64)
}

pub fn is_medial(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|b| t[t[t[a][x]][y]][b] == t[t[t[a][y]][x]][b])))
    })
}

pub fn is_left_commutative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|a| t[t[x][y]][a] == t[t[y][x]][a])))
}

pub fn is_right_commutative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|x| (0..n).all(|y| t[t[a][x]][y] == t[t[a][y]][x])))
}

pub fn rows_constant(t: &Table) -> bool {
    t.iter().all(|row| row.iter().all(|&v| v == row[0]))
}

/// The quotient table on class indices.
pub fn quotient(t: &Table, classes: &[Vec<usize>]) -> Table {
    let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).unwrap();
    classes
        .iter()
        .map(|ci| classes.iter().map(|cj| class_of(t[ci[0]][cj[0]])).collect())
        .collect()
}

/// Family number 1..4 for a two-element semigroup on `{0, 1}`, or `None` for
/// left zero.
pub fn two_element_family(q: &Table) -> Option<u8> {
    assert_eq!(q.len(), 2);
    let flat = [q[0][0], q[0][1], q[1][0], q[1][1]];
    match flat {
        [0, 0, 0, 1] | [0, 1, 1, 1] => Some(1),
        [0, 0, 0, 0] | [1, 1, 1, 1] => Some(2),
        [0, 1, 1, 0] | [1, 0, 0, 1] => Some(3),
        [0, 1, 0, 1] => Some(4),
        [0, 0, 1, 1] => None,
        _ => panic!("not a semigroup: {:?}", flat),
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least row-major flattening over all relabelings.
pub fn canonical(t: &Table) -> Vec<usize> {
    let n = t.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            (0..n * n)
                .map(|c| p[t[inv[c / n]][inv[c % n]]])
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Isomorphism classes of order `n` found by trying all `n^(n²)` tables.
pub fn naive_class_count(n: usize) -> usize {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut seen = std::collections::HashSet::new();
    let mut t = vec![vec![0; n]; n];
    for code in 0..total {
        let mut c = code;
        for cell in 0..cells {
            t[cell / n][cell % n] = c % n;
            c /= n;
        }
        if is_associative(&t) {
            seen.insert(canonical(&t));
        }
    }
    seen.len()
}

fn phi_of(part: &semitheta::RetractSemigroup) -> Vec<usize> {
    (0..part.order()).map(|a| part.phi(a)).collect()
}

/// The construction's operation, written out case by case, on the layout
/// `A` then `B`.
pub fn construct_table(params: &ConstructionParams) -> Table {
    let (na, nb) = (params.a_len(), params.b_len());
    let n = na + nb;
    let in_a = |x: usize| x < na;
    let to_b = |v: usize| na + v;
    let mut t = vec![vec![0; n]; n];
    let img = |m: &semitheta::ElementMap| m.image().to_vec();
    for (x, row) in t.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = match params {
                ConstructionParams::Semilattice { a, b, alpha, beta } => {
                    let (pa, pb, al, be) = (phi_of(a), phi_of(b), img(alpha), img(beta));
                    match (in_a(x), in_a(y)) {
                        (true, true) => pa[x],
                        (true, false) => to_b(al[x]),
                        (false, true) => to_b(be[x - na]),
                        (false, false) => to_b(pb[x - na]),
                    }
                }
                ConstructionParams::Zero {
                    b,
                    alpha,
                    beta,
                    gamma,
                    ..
                } => {
                    let (pb, al, be, ga) = (phi_of(b), img(alpha), img(beta), img(gamma));
                    match (in_a(x), in_a(y)) {
                        (true, true) => to_b(al[x]),
                        (true, false) => to_b(be[x]),
                        (false, true) => to_b(ga[x - na]),
                        (false, false) => to_b(pb[x - na]),
                    }
                }
                ConstructionParams::Group {
                    a, alpha, gamma, ..
                } => {
                    let (pa, al, ga) = (phi_of(a), img(alpha), img(gamma));
                    match (in_a(x), in_a(y)) {
                        (true, true) => pa[x],
                        (true, false) => to_b(al[x]),
                        (false, true) => to_b(al[ga[x - na]]),
                        (false, false) => ga[x - na],
                    }
                }
                ConstructionParams::RightZero { a, b, alpha, beta } => {
                    let (pa, pb, al, be) = (phi_of(a), phi_of(b), img(alpha), img(beta));
                    match (in_a(x), in_a(y)) {
                        (true, true) => pa[x],
                        (true, false) => to_b(al[x]),
                        (false, true) => be[x - na],
                        (false, false) => to_b(pb[x - na]),
                    }
                }
            };
        }
    }
    t
}

/// Every map `0..domain → 0..codomain`.
pub fn all_maps(domain: usize, codomain: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..domain {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..codomain).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

/// Retraction data `φ` on `0..n` (maps fixing their own image).
pub fn all_retractions(n: usize) -> Vec<Vec<usize>> {
    all_maps(n, n)
        .into_iter()
        .filter(|p| p.iter().all(|&v| p[v] == v))
        .collect()
}
