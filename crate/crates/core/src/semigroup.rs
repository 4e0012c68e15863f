//! Cayley-table semigroups.
//!
//! A [`FiniteSemigroup`] is a carrier of `n` named elements together with an
//! `n × n` multiplication table. Row index is the left factor, so
//! `table[i][j]` is the product `i·j`. Names are presentation only: every
//! algorithm works on indices.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::congruence::Congruence;
use crate::iso;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("the carrier must contain at least one element")]
    Empty,
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("operation is not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(String, String, String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("element index {0} is outside the carrier")]
    IndexOutOfRange(usize),
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("subset is not closed under multiplication: {0}·{1} = {2}")]
    NotClosed(String, String, String),
    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),
    #[error("expected a two-element semigroup, got order {0}")]
    OrderNot2(usize),
}

/// A finite set of element indices over a carrier of known size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    universe: usize,
    members: Vec<usize>,
}

impl ElementSubset {
    pub fn new(
        universe: usize,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, SemigroupError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= universe) {
            return Err(SemigroupError::IndexOutOfRange(bad));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { universe, members })
    }

    pub fn full(universe: usize) -> Self {
        Self {
            universe,
            members: (0..universe).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Members in ascending order.
    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self) -> Self {
        Self {
            universe: self.universe,
            members: (0..self.universe).filter(|&x| !self.contains(x)).collect(),
        }
    }
}

/// A total function between two finite index ranges, stored as its table of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementMap {
    codomain: usize,
    image: Vec<usize>,
}

impl ElementMap {
    pub fn new(codomain: usize, image: Vec<usize>) -> Result<Self, SemigroupError> {
        if let Some(&bad) = image.iter().find(|&&y| y >= codomain) {
            return Err(SemigroupError::IndexOutOfRange(bad));
        }
        Ok(Self { codomain, image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            codomain: n,
            image: (0..n).collect(),
        }
    }

    pub fn constant(domain: usize, codomain: usize, value: usize) -> Result<Self, SemigroupError> {
        Self::new(codomain, vec![value; domain])
    }

    pub fn domain(&self) -> usize {
        self.image.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    ///
    /// Panics if the codomain of `inner` is not the domain of `self`.
    pub fn after(&self, inner: &ElementMap) -> ElementMap {
        assert_eq!(
            inner.codomain,
            self.domain(),
            "composition of incompatible maps"
        );
        ElementMap {
            codomain: self.codomain,
            image: inner.image.iter().map(|&y| self.image[y]).collect(),
        }
    }

    /// True if every value of the map lies in `subset`.
    pub fn maps_into(&self, subset: &ElementSubset) -> bool {
        self.image.iter().all(|&y| subset.contains(y))
    }
}

/// The five two-element semigroups up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoElementType {
    Semilattice,
    ZeroSemigroup,
    Group,
    RightZero,
    LeftZero,
}

impl TwoElementType {
    pub const ALL: [TwoElementType; 5] = [
        TwoElementType::Semilattice,
        TwoElementType::ZeroSemigroup,
        TwoElementType::Group,
        TwoElementType::RightZero,
        TwoElementType::LeftZero,
    ];

    /// A model of the type on the carrier `{0, 1}`.
    pub fn model(self) -> FiniteSemigroup {
        let op: fn(usize, usize) -> usize = match self {
            TwoElementType::Semilattice => |x, y| x.min(y),
            TwoElementType::ZeroSemigroup => |_, _| 0,
            TwoElementType::Group => |x, y| (x + y) % 2,
            TwoElementType::RightZero => |_, y| y,
            TwoElementType::LeftZero => |x, _| x,
        };
        FiniteSemigroup::from_fn(2, op).expect("two-element models are associative")
    }
}

impl fmt::Display for TwoElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TwoElementType::Semilattice => "semilattice",
            TwoElementType::ZeroSemigroup => "zero semigroup",
            TwoElementType::Group => "group",
            TwoElementType::RightZero => "right zero semigroup",
            TwoElementType::LeftZero => "left zero semigroup",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<usize>,
}

impl FiniteSemigroup {
    /// Validates shape, names, and associativity (exhaustive triple scan).
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let n = names.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        if table.len() != n {
            return Err(SemigroupError::ShapeMismatch(format!(
                "{} names but {} rows",
                n,
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::ShapeMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(SemigroupError::ShapeMismatch(format!(
                        "entry {} in row {} is not an element index",
                        v, i
                    )));
                }
                flat.push(v);
            }
        }
        let s = Self { names, table: flat };
        if let Some((i, j, k)) = s.associativity_violation() {
            return Err(SemigroupError::NotAssociative(
                s.names[i].clone(),
                s.names[j].clone(),
                s.names[k].clone(),
            ));
        }
        Ok(s)
    }

    /// Builds a semigroup on `0..n` with names `"0"`, `"1"`, ... from an operation.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn_named(names, op)
    }

    pub fn from_fn_named(
        names: Vec<String>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, SemigroupError> {
        let n = names.len();
        let table = (0..n).map(|i| (0..n).map(|j| op(i, j)).collect()).collect();
        Self::new(names, table)
    }

    /// Builds from a flat row-major table with default names.
    pub fn from_flat(n: usize, flat: &[usize]) -> Result<Self, SemigroupError> {
        if flat.len() != n * n {
            return Err(SemigroupError::ShapeMismatch(format!(
                "{} entries for order {}",
                flat.len(),
                n
            )));
        }
        Self::from_fn(n, |i, j| flat[i * n + j])
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row-major table of products.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, x: usize) -> &[usize] {
        let n = self.order();
        &self.table[x * n..(x + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|x| self.row(x).to_vec()).collect()
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    /// Same table, new element labels.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, SemigroupError> {
        Self::new(names, self.rows())
    }

    /// The isomorphic copy obtained by sending element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, SemigroupError> {
        let n = self.order();
        if perm.len() != n || {
            let mut p = perm.to_vec();
            p.sort_unstable();
            p != (0..n).collect::<Vec<_>>()
        } {
            return Err(SemigroupError::ShapeMismatch(
                "relabeling is not a permutation".into(),
            ));
        }
        let mut names = vec![String::new(); n];
        let mut table = vec![vec![0; n]; n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            for y in 0..n {
                table[perm[x]][perm[y]] = perm[self.product(x, y)];
            }
        }
        Self::new(names, table)
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    if self.product(ij, k) != self.product(i, self.product(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.product(x, x) == x
    }

    pub fn idempotents(&self) -> ElementSubset {
        ElementSubset {
            universe: self.order(),
            members: (0..self.order())
                .filter(|&x| self.is_idempotent(x))
                .collect(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.product(x, y) == self.product(y, x)))
    }

    /// First quadruple `(a, x, y, b)` with `axyb ≠ ayxb`, scanning in ascending order.
    pub fn medial_violation(&self) -> Option<[usize; 4]> {
        let n = self.order();
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    let axy = self.product(a, self.product(x, y));
                    let ayx = self.product(a, self.product(y, x));
                    if axy == ayx {
                        continue;
                    }
                    for b in 0..n {
                        if self.product(axy, b) != self.product(ayx, b) {
                            return Some([a, x, y, b]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn violates_medial_at(&self, [a, x, y, b]: [usize; 4]) -> bool {
        let p = |u, v| self.product(u, v);
        p(p(p(a, x), y), b) != p(p(p(a, y), x), b)
    }

    pub fn is_medial(&self) -> bool {
        self.medial_violation().is_none()
    }

    /// First triple `(x, y, a)` with `xya ≠ yxa`.
    pub fn left_commutative_violation(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                let (xy, yx) = (self.product(x, y), self.product(y, x));
                if xy == yx {
                    continue;
                }
                for a in 0..n {
                    if self.product(xy, a) != self.product(yx, a) {
                        return Some([x, y, a]);
                    }
                }
            }
        }
        None
    }

    pub fn is_left_commutative(&self) -> bool {
        self.left_commutative_violation().is_none()
    }

    /// First triple `(a, x, y)` with `axy ≠ ayx`.
    pub fn right_commutative_violation(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if self.violates_right_commutative_at([a, x, y]) {
                        return Some([a, x, y]);
                    }
                }
            }
        }
        None
    }

    pub fn violates_right_commutative_at(&self, [a, x, y]: [usize; 3]) -> bool {
        self.product(a, self.product(x, y)) != self.product(a, self.product(y, x))
    }

    pub fn is_right_commutative(&self) -> bool {
        self.right_commutative_violation().is_none()
    }

    /// Decides which of the five two-element semigroups this is.
    pub fn classify_two_element(&self) -> Result<TwoElementType, SemigroupError> {
        if self.order() != 2 {
            return Err(SemigroupError::OrderNot2(self.order()));
        }
        let found = TwoElementType::ALL
            .into_iter()
            .find(|t| iso::are_isomorphic(self, &t.model()).is_some());
        Ok(found.expect("every two-element semigroup is one of the five types"))
    }

    fn check_subset(&self, subset: &ElementSubset) -> Result<(), SemigroupError> {
        if subset.universe() != self.order() {
            return Err(SemigroupError::ShapeMismatch(format!(
                "subset over {} elements, carrier has {}",
                subset.universe(),
                self.order()
            )));
        }
        if subset.is_empty() {
            return Err(SemigroupError::EmptySubset);
        }
        Ok(())
    }

    /// First pair `(s, i)` or `(i, s)` whose product leaves the subset.
    fn ideal_violation(&self, subset: &ElementSubset) -> Option<(usize, usize)> {
        for i in subset.iter() {
            for s in 0..self.order() {
                if !subset.contains(self.product(s, i)) {
                    return Some((s, i));
                }
                if !subset.contains(self.product(i, s)) {
                    return Some((i, s));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, subset: &ElementSubset) -> Result<bool, SemigroupError> {
        self.check_subset(subset)?;
        Ok(self.ideal_violation(subset).is_none())
    }

    pub fn is_subsemigroup(&self, subset: &ElementSubset) -> Result<bool, SemigroupError> {
        self.check_subset(subset)?;
        Ok(subset
            .iter()
            .all(|x| subset.iter().all(|y| subset.contains(self.product(x, y)))))
    }

    /// The subsemigroup on `subset`, elements kept in ascending index order.
    pub fn restrict(&self, subset: &ElementSubset) -> Result<FiniteSemigroup, SemigroupError> {
        self.check_subset(subset)?;
        let local = |x: usize| subset.as_slice().binary_search(&x).ok();
        let mut table = Vec::with_capacity(subset.len());
        for x in subset.iter() {
            let mut row = Vec::with_capacity(subset.len());
            for y in subset.iter() {
                let p = self.product(x, y);
                match local(p) {
                    Some(l) => row.push(l),
                    None => {
                        return Err(SemigroupError::NotClosed(
                            self.names[x].clone(),
                            self.names[y].clone(),
                            self.names[p].clone(),
                        ))
                    }
                }
            }
            table.push(row);
        }
        let names = subset.iter().map(|x| self.names[x].clone()).collect();
        FiniteSemigroup::new(names, table)
    }

    /// Collapses the ideal to a single zero. The carrier is `S ∖ I` in index
    /// order followed by the zero, which is named after the ideal.
    pub fn rees_factor(&self, ideal: &ElementSubset) -> Result<FiniteSemigroup, SemigroupError> {
        self.check_subset(ideal)?;
        if let Some((x, y)) = self.ideal_violation(ideal) {
            return Err(SemigroupError::NotAnIdeal(format!(
                "{}·{} = {}",
                self.names[x],
                self.names[y],
                self.names[self.product(x, y)]
            )));
        }
        let congruence = Congruence::rees(self, ideal)?;
        let outside = ideal.complement();
        let zero = outside.len();
        let local = |x: usize| -> usize { outside.as_slice().binary_search(&x).unwrap_or(zero) };
        debug_assert!(congruence.check_compatible(self).is_ok());
        let mut names: Vec<String> = outside.iter().map(|x| self.names[x].clone()).collect();
        names.push(unique_name(&names, &self.subset_label(ideal)));
        let m = names.len();
        let mut table = vec![vec![zero; m]; m];
        for x in outside.iter() {
            for y in outside.iter() {
                table[local(x)][local(y)] = local(self.product(x, y));
            }
        }
        FiniteSemigroup::new(names, table)
    }

    /// Factor semigroup by a congruence; class `c` becomes element `c`.
    pub fn quotient(&self, congruence: &Congruence) -> Result<FiniteSemigroup, SemigroupError> {
        congruence.check_compatible(self)?;
        let classes = congruence.classes();
        let k = classes.len();
        let mut table = vec![vec![0; k]; k];
        for (ci, a) in classes.iter().enumerate() {
            for (cj, b) in classes.iter().enumerate() {
                table[ci][cj] = congruence.class_of(self.product(a[0], b[0]));
            }
        }
        let names = classes
            .iter()
            .map(|c| self.label(c.iter().copied()))
            .collect();
        FiniteSemigroup::new(names, table)
    }

    pub fn subset_label(&self, subset: &ElementSubset) -> String {
        self.label(subset.iter())
    }

    fn label(&self, members: impl Iterator<Item = usize>) -> String {
        let inner: Vec<&str> = members.map(|x| self.names[x].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

fn unique_name(existing: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while existing.iter().any(|n| n == &name) {
        name.push('\'');
    }
    name
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .names
            .iter()
            .map(|n| n.chars().count())
            .max()
            .unwrap_or(1);
        write!(f, "{:>w$} |", "·", w = width)?;
        for n in &self.names {
            write!(f, " {:>w$}", n, w = width)?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((width + 1) * (self.order() + 1) + 1))?;
        for x in 0..self.order() {
            write!(f, "{:>w$} |", self.names[x], w = width)?;
            for &p in self.row(x) {
                write!(f, " {:>w$}", self.names[p], w = width)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn table1_is_a_semigroup_and_products_match() {
        let s = fixtures::semilattice_extension();
        assert_eq!(s.order(), 4);
        let (a, e) = (s.index_of("a").unwrap(), s.index_of("e").unwrap());
        assert_eq!(s.product(a, e), e);
        let t4 = fixtures::right_zero_extension();
        let (g, f, e4) = (
            t4.index_of("g").unwrap(),
            t4.index_of("f").unwrap(),
            t4.index_of("e").unwrap(),
        );
        assert_eq!(t4.product(g, f), e4);
    }

    #[test]
    fn trivial_semigroup() {
        let s = FiniteSemigroup::new(names(&["z"]), vec![vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
        assert!(s.is_idempotent(0));
    }

    #[test]
    fn two_element_candidate_agrees_with_triple_scan() {
        // x·y = y except x·x = x: associative (it is the min-semilattice with x above y).
        let table = vec![vec![0, 1], vec![1, 1]];
        let mut witness = None;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        witness.get_or_insert((i, j, k));
                    }
                }
            }
        }
        let result = FiniteSemigroup::new(names(&["x", "y"]), table);
        assert_eq!(witness.is_none(), result.is_ok());
        assert!(result.is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            FiniteSemigroup::new(vec![], vec![]),
            Err(SemigroupError::Empty)
        );
        assert!(matches!(
            FiniteSemigroup::new(names(&["a", "a"]), vec![vec![0, 0], vec![0, 0]]),
            Err(SemigroupError::DuplicateName(_))
        ));
        assert!(matches!(
            FiniteSemigroup::new(names(&["a", "b"]), vec![vec![0, 0], vec![0]]),
            Err(SemigroupError::ShapeMismatch(_))
        ));
        assert!(matches!(
            FiniteSemigroup::new(names(&["a", "b"]), vec![vec![0, 2], vec![0, 0]]),
            Err(SemigroupError::ShapeMismatch(_))
        ));
        // a·a = b, everything else a: (b·a)·a = b but b·(a·a) = a
        let err =
            FiniteSemigroup::new(names(&["a", "b"]), vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, SemigroupError::NotAssociative(..)));
    }

    #[test]
    fn idempotents_of_tables() {
        let t1 = fixtures::semilattice_extension();
        let expected: Vec<usize> = ["0", "e", "f"]
            .iter()
            .map(|n| t1.index_of(n).unwrap())
            .collect();
        assert_eq!(t1.idempotents().as_slice(), expected.as_slice());
        let t2 = fixtures::zero_extension();
        assert_eq!(t2.idempotents().as_slice(), &[t2.index_of("0").unwrap()]);
        let lz = fixtures::left_zero(4);
        assert_eq!(lz.idempotents().len(), 4);
    }

    #[test]
    fn medial_identity() {
        assert!(fixtures::right_zero_extension().is_medial());
        assert!(TwoElementType::Group.model().is_medial());
        let m = fixtures::monoid_with_left_zero_pair();
        let w = m.medial_violation().expect("not medial");
        assert!(m.violates_medial_at(w));
        // (1, a, b, a): 1·a·b·a = a, 1·b·a·a = b
        assert!(m.violates_medial_at([0, 1, 2, 1]));
    }

    #[test]
    fn left_commutative_identity() {
        assert!(TwoElementType::RightZero.model().is_left_commutative());
        let w = TwoElementType::LeftZero
            .model()
            .left_commutative_violation()
            .unwrap();
        assert_ne!(w[0], w[1]);
        assert!(TwoElementType::ZeroSemigroup.model().is_left_commutative());
    }

    #[test]
    fn right_commutative_identity() {
        assert!(fixtures::semilattice_extension().is_right_commutative());
        let t4 = fixtures::right_zero_extension();
        let w = t4.right_commutative_violation().unwrap();
        assert!(t4.violates_right_commutative_at(w));
        let (e, g) = (t4.index_of("e").unwrap(), t4.index_of("g").unwrap());
        assert!(t4.violates_right_commutative_at([e, g, e]));
        assert!(TwoElementType::Semilattice.model().is_right_commutative());
    }

    #[test]
    fn two_element_classification() {
        for t in TwoElementType::ALL {
            assert_eq!(t.model().classify_two_element().unwrap(), t);
        }
        let g = FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2).unwrap();
        assert_eq!(g.classify_two_element().unwrap(), TwoElementType::Group);
        // the zero semigroup with the zero at index 1
        let z = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        assert_eq!(
            z.classify_two_element().unwrap(),
            TwoElementType::ZeroSemigroup
        );
        assert_eq!(
            fixtures::semilattice_extension().classify_two_element(),
            Err(SemigroupError::OrderNot2(4))
        );
    }

    #[test]
    fn every_associative_binary_operation_on_two_elements_is_classified() {
        let mut seen = HashSet::new();
        for code in 0..16usize {
            let flat: Vec<usize> = (0..4).map(|bit| (code >> bit) & 1).collect();
            if let Ok(s) = FiniteSemigroup::from_flat(2, &flat) {
                seen.insert(s.classify_two_element().unwrap());
            }
        }
        assert_eq!(seen.len(), 5);
    }

    fn subset(s: &FiniteSemigroup, members: &[&str]) -> ElementSubset {
        ElementSubset::new(s.order(), members.iter().map(|m| s.index_of(m).unwrap())).unwrap()
    }

    #[test]
    fn ideals() {
        let t1 = fixtures::semilattice_extension();
        assert!(t1.is_ideal(&subset(&t1, &["e", "f"])).unwrap());
        assert!(t1.is_ideal(&ElementSubset::full(4)).unwrap());
        let t2 = fixtures::zero_extension();
        assert!(!t2.is_ideal(&subset(&t2, &["a"])).unwrap());
        assert_eq!(
            t2.is_ideal(&ElementSubset::new(3, []).unwrap()),
            Err(SemigroupError::EmptySubset)
        );
    }

    #[test]
    fn rees_factors() {
        let t1 = fixtures::semilattice_extension();
        let r = t1.rees_factor(&subset(&t1, &["e", "f"])).unwrap();
        assert_eq!(r.order(), 3);
        let (a, o, z) = (0, 1, 2);
        assert_eq!(r.names()[..2], names(&["a", "0"])[..]);
        assert_eq!(r.product(a, a), o);
        assert_eq!(r.product(a, o), o);
        for x in 0..3 {
            assert_eq!(r.product(x, z), z);
            assert_eq!(r.product(z, x), z);
        }
        assert_eq!(t1.rees_factor(&ElementSubset::full(4)).unwrap().order(), 1);

        let zero = FiniteSemigroup::from_fn_named(names(&["b", "0"]), |_, _| 1).unwrap();
        let r = zero.rees_factor(&subset(&zero, &["0"])).unwrap();
        assert!(iso::are_isomorphic(&r, &zero).is_some());

        let t2 = fixtures::zero_extension();
        assert!(matches!(
            t2.rees_factor(&subset(&t2, &["a"])),
            Err(SemigroupError::NotAnIdeal(_))
        ));
    }

    #[test]
    fn subsemigroups() {
        let t1 = fixtures::semilattice_extension();
        assert!(t1.is_subsemigroup(&subset(&t1, &["e", "f"])).unwrap());
        assert!(t1.is_subsemigroup(&subset(&t1, &["e"])).unwrap());
        let t2 = fixtures::zero_extension();
        assert!(!t2.is_subsemigroup(&subset(&t2, &["a"])).unwrap());
        assert!(t2.restrict(&subset(&t2, &["a"])).is_err());
    }

    #[test]
    fn relabel_is_isomorphic() {
        let t3 = fixtures::group_extension();
        let r = t3.relabel(&[2, 0, 1]).unwrap();
        let sigma = iso::are_isomorphic(&t3, &r).unwrap();
        assert!(iso::is_isomorphism(&t3, &r, &sigma));
        assert!(t3.relabel(&[0, 0, 1]).is_err());
    }

    #[test]
    fn map_composition() {
        let f = ElementMap::new(3, vec![2, 0, 1]).unwrap();
        let g = ElementMap::new(3, vec![1, 1, 0]).unwrap();
        assert_eq!(f.after(&g).image(), &[0, 0, 2]);
        assert_eq!(f.after(&ElementMap::identity(3)), f);
        assert!(ElementMap::new(2, vec![2]).is_err());
    }
}
