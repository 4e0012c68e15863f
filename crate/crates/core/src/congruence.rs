//! Partitions of a carrier that are compatible with multiplication.

use crate::semigroup::{ElementSubset, FiniteSemigroup, SemigroupError};

/// A partition stored as a class id per element. Class ids are normalized so
/// that classes are numbered in order of their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    /// Accepts an arbitrary labelling and renumbers it by least element.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut class_of = Vec::with_capacity(labels.len());
        let mut representatives: Vec<&T> = Vec::new();
        for label in labels {
            let id = match representatives.iter().position(|r| *r == label) {
                Some(id) => id,
                None => {
                    representatives.push(label);
                    representatives.len() - 1
                }
            };
            class_of.push(id);
        }
        Self {
            class_of,
            classes: representatives.len(),
        }
    }

    /// Ids must cover `0..k` exactly; they are renumbered by least element.
    pub fn from_class_ids(class_of: Vec<usize>) -> Result<Self, SemigroupError> {
        let k = class_of.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &c in &class_of {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(SemigroupError::ShapeMismatch(format!(
                "class id {} is unused",
                missing
            )));
        }
        Ok(Self::from_labels(&class_of))
    }

    pub fn universal(n: usize) -> Self {
        Self {
            class_of: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
            classes: n,
        }
    }

    /// The Rees congruence: the ideal is one class, every other element a singleton.
    pub fn rees(s: &FiniteSemigroup, ideal: &ElementSubset) -> Result<Self, SemigroupError> {
        if !s.is_ideal(ideal)? {
            return Err(SemigroupError::NotAnIdeal(s.subset_label(ideal)));
        }
        let labels: Vec<usize> = (0..s.order())
            .map(|x| if ideal.contains(x) { usize::MAX } else { x })
            .collect();
        Ok(Self::from_labels(&labels))
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    /// Number of classes.
    pub fn index(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Members of each class, ascending, classes in id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn class_subsets(&self) -> Vec<ElementSubset> {
        self.classes()
            .into_iter()
            .map(|c| ElementSubset::new(self.len(), c).expect("members are in range"))
            .collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.classes];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// `a ~ b` and `c ~ d` must give `ac ~ bd`. It suffices to check
    /// one-sided compatibility in each argument.
    pub fn check_compatible(&self, s: &FiniteSemigroup) -> Result<(), SemigroupError> {
        if self.len() != s.order() {
            return Err(SemigroupError::ShapeMismatch(format!(
                "partition of {} elements, carrier has {}",
                self.len(),
                s.order()
            )));
        }
        let n = s.order();
        for a in 0..n {
            for b in (a + 1)..n {
                if !self.related(a, b) {
                    continue;
                }
                for c in 0..n {
                    let (ac, bc) = (s.product(a, c), s.product(b, c));
                    if !self.related(ac, bc) {
                        return Err(SemigroupError::NotACongruence(format!(
                            "{0} ~ {1} but {0}·{2} = {3} ≁ {1}·{2} = {4}",
                            s.name(a),
                            s.name(b),
                            s.name(c),
                            s.name(ac),
                            s.name(bc)
                        )));
                    }
                    let (ca, cb) = (s.product(c, a), s.product(c, b));
                    if !self.related(ca, cb) {
                        return Err(SemigroupError::NotACongruence(format!(
                            "{0} ~ {1} but {2}·{0} = {3} ≁ {2}·{1} = {4}",
                            s.name(a),
                            s.name(b),
                            s.name(c),
                            s.name(ca),
                            s.name(cb)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
