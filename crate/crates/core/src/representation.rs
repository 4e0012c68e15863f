//! The right regular representation `a ↦ (x ↦ xa)` and its kernel.
//!
//! Two elements are related by the kernel exactly when their columns in the
//! Cayley table coincide. The coincidence probability is the chance that two
//! elements drawn uniformly with replacement are related, which for class
//! sizes `c₁, …, c_k` is `Σ cᵢ² / n²`.

use std::collections::{HashMap, HashSet};

use num_rational::Ratio;

use crate::congruence::Congruence;
use crate::semigroup::{ElementMap, FiniteSemigroup};

pub type Probability = Ratio<u64>;

/// The inner right translation by `a`: column `a` of the table.
pub fn inner_right_translation(s: &FiniteSemigroup, a: usize) -> ElementMap {
    let image = (0..s.order()).map(|x| s.product(x, a)).collect();
    ElementMap::new(s.order(), image).expect("products are in range")
}

fn column(s: &FiniteSemigroup, a: usize) -> Vec<usize> {
    (0..s.order()).map(|x| s.product(x, a)).collect()
}

/// Kernel of the right regular representation. Classes are numbered by
/// least element.
pub fn theta(s: &FiniteSemigroup) -> Congruence {
    let mut first_with_column: HashMap<Vec<usize>, usize> = HashMap::new();
    let labels: Vec<usize> = (0..s.order())
        .map(|a| *first_with_column.entry(column(s, a)).or_insert(a))
        .collect();
    let theta = Congruence::from_labels(&labels);
    debug_assert!(theta.check_compatible(s).is_ok());
    theta
}

/// Number of distinct inner right translations.
pub fn representation_image_size(s: &FiniteSemigroup) -> usize {
    (0..s.order())
        .map(|a| inner_right_translation(s, a))
        .collect::<HashSet<_>>()
        .len()
}

pub fn coincidence_probability(class_sizes: &[usize]) -> Probability {
    let n: u64 = class_sizes.iter().map(|&c| c as u64).sum();
    let squares: u64 = class_sizes.iter().map(|&c| (c as u64) * (c as u64)).sum();
    Ratio::new(squares, n * n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaAnalysis {
    pub theta: Congruence,
    pub index: usize,
    pub class_sizes: Vec<usize>,
    pub probability: Probability,
}

impl ThetaAnalysis {
    /// `1 / index`, the lower bound on the probability.
    pub fn bound(&self) -> Probability {
        Ratio::new(1, self.index as u64)
    }

    pub fn meets_bound(&self) -> bool {
        self.probability >= self.bound()
    }

    pub fn attains_bound(&self) -> bool {
        self.probability == self.bound()
    }

    pub fn equal_class_sizes(&self) -> bool {
        self.class_sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// The bound holds, with equality exactly when all classes have the same size.
    pub fn bound_consistent(&self) -> bool {
        self.meets_bound() && self.attains_bound() == self.equal_class_sizes()
    }
}

pub fn analyze(s: &FiniteSemigroup) -> ThetaAnalysis {
    let theta = theta(s);
    let class_sizes = theta.class_sizes();
    let analysis = ThetaAnalysis {
        index: theta.index(),
        probability: coincidence_probability(&class_sizes),
        class_sizes,
        theta,
    };
    debug_assert!(analysis.bound_consistent());
    analysis
}
