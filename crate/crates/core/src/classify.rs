//! Decomposition of medial semigroups whose kernel has two classes.
//!
//! The quotient by the kernel is a two-element semigroup. For a medial
//! semigroup it is left commutative, hence not the left zero semigroup, and
//! the remaining four types select the construction family. The parts and
//! maps are read off the table (`α(a)` is the unique element of `a·B`, and so
//! on), the matching builder is run, and the result is compared with the input
//! cell for cell on the original carrier.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::constructions::{BareSet, ConstructionError, ConstructionParams, Family};
use crate::representation::{analyze, theta, Probability};
use crate::retract::RetractSemigroup;
use crate::semigroup::{ElementMap, ElementSubset, FiniteSemigroup, TwoElementType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    IndexNot2(usize),
    /// The quotient is the two-element left zero semigroup, so `S` is not medial.
    QuotientNotLeftCommutative,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::IndexNot2(k) => write!(f, "kernel index is {}, not 2", k),
            Rejection::QuotientNotLeftCommutative => f.write_str(
                "quotient by the kernel is the two-element left zero semigroup (not medial)",
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("rejected: {0}")]
    Rejected(Rejection),
    /// Extraction produced parameters the builders refuse. Never expected.
    #[error("extracted parameters are inconsistent: {0}")]
    Inconsistent(String),
}

impl From<Rejection> for ClassifyError {
    fn from(r: Rejection) -> Self {
        ClassifyError::Rejected(r)
    }
}

impl From<ConstructionError> for ClassifyError {
    fn from(e: ConstructionError) -> Self {
        ClassifyError::Inconsistent(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub family: Family,
    pub a: ElementSubset,
    pub b: ElementSubset,
    pub params: ConstructionParams,
    /// Original index of each element of the rebuilt `A`-then-`B` layout.
    pub layout: Vec<usize>,
    /// The rebuilt semigroup, relabelled back onto the input carrier order.
    pub rebuilt: FiniteSemigroup,
    pub verified: bool,
}

struct Parts<'a> {
    s: &'a FiniteSemigroup,
    a: &'a ElementSubset,
    b: &'a ElementSubset,
}

impl Parts<'_> {
    /// The single element of `x·class`; one-element by the kernel property.
    fn only(&self, x: usize, class: &ElementSubset) -> usize {
        let first = self.s.product(x, class.as_slice()[0]);
        debug_assert!(class.iter().all(|y| self.s.product(x, y) == first));
        first
    }

    fn local(class: &ElementSubset, x: usize) -> Result<usize, ClassifyError> {
        class.as_slice().binary_search(&x).map_err(|_| {
            ClassifyError::Inconsistent(format!("element {} lands outside its expected class", x))
        })
    }

    /// `x ↦ only(x, via)` read as a map `from → to` in local indices.
    fn map(
        &self,
        from: &ElementSubset,
        via: &ElementSubset,
        to: &ElementSubset,
    ) -> Result<ElementMap, ClassifyError> {
        let image = from
            .iter()
            .map(|x| Self::local(to, self.only(x, via)))
            .collect::<Result<Vec<_>, _>>()?;
        ElementMap::new(to.len(), image).map_err(|e| ClassifyError::Inconsistent(e.to_string()))
    }

    fn retract_part(&self, class: &ElementSubset) -> Result<RetractSemigroup, ClassifyError> {
        let sub = self
            .s
            .restrict(class)
            .map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
        RetractSemigroup::from_semigroup(sub)
            .map_err(|e| ClassifyError::Inconsistent(e.to_string()))
    }

    fn bare_part(&self, class: &ElementSubset) -> Result<BareSet, ClassifyError> {
        let names = class.iter().map(|x| self.s.name(x).to_string()).collect();
        BareSet::new(names).map_err(|e| ClassifyError::Inconsistent(e.to_string()))
    }
}

pub fn classify_medial_index2(s: &FiniteSemigroup) -> Result<ClassificationReport, ClassifyError> {
    let kernel = theta(s);
    if kernel.index() != 2 {
        return Err(Rejection::IndexNot2(kernel.index()).into());
    }
    let quotient = s
        .quotient(&kernel)
        .map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
    let kind = quotient
        .classify_two_element()
        .map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
    let family = Family::from_quotient(kind).ok_or(Rejection::QuotientNotLeftCommutative)?;
    let classes = kernel.class_subsets();
    let (c0, c1) = (classes[0].clone(), classes[1].clone());
    let is_ideal = |c: &ElementSubset| s.is_ideal(c).unwrap_or(false);
    let (a, b) = match kind {
        TwoElementType::Semilattice | TwoElementType::ZeroSemigroup => {
            if is_ideal(&c1) {
                (c0, c1)
            } else {
                (c1, c0)
            }
        }
        // the identity of the group quotient is its idempotent
        TwoElementType::Group => {
            if quotient.is_idempotent(0) {
                (c0, c1)
            } else {
                (c1, c0)
            }
        }
        _ => (c0, c1),
    };
    let parts = Parts { s, a: &a, b: &b };
    let (pa, pb) = (parts.a, parts.b);
    let params = match family {
        Family::Semilattice => ConstructionParams::Semilattice {
            a: parts.retract_part(pa)?,
            b: parts.retract_part(pb)?,
            alpha: parts.map(pa, pb, pb)?,
            beta: parts.map(pb, pa, pb)?,
        },
        Family::Zero => ConstructionParams::Zero {
            a: parts.bare_part(pa)?,
            b: parts.retract_part(pb)?,
            alpha: parts.map(pa, pa, pb)?,
            beta: parts.map(pa, pb, pb)?,
            gamma: parts.map(pb, pa, pb)?,
        },
        Family::Group => ConstructionParams::Group {
            a: parts.retract_part(pa)?,
            b: parts.bare_part(pb)?,
            alpha: parts.map(pa, pb, pb)?,
            gamma: parts.map(pb, pb, pa)?,
        },
        Family::RightZero => ConstructionParams::RightZero {
            a: parts.retract_part(pa)?,
            b: parts.retract_part(pb)?,
            alpha: parts.map(pa, pb, pb)?,
            beta: parts.map(pb, pa, pa)?,
        },
    };
    let built = params.build()?;
    let layout: Vec<usize> = a.iter().chain(b.iter()).collect();
    let rebuilt = built
        .relabel(&layout)
        .map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
    let verified = rebuilt == *s;
    Ok(ClassificationReport {
        family,
        a,
        b,
        params,
        layout,
        rebuilt,
        verified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfProbabilityVerdict {
    pub medial_index2: bool,
    pub index: usize,
    pub class_sizes: Vec<usize>,
    pub probability: Probability,
    pub equal_classes: bool,
    /// For medial index-2 inputs: probability one half exactly when the two
    /// classes have equal size. Vacuously true otherwise.
    pub consistent: bool,
}

pub fn check_half_probability(s: &FiniteSemigroup) -> HalfProbabilityVerdict {
    let analysis = analyze(s);
    let medial_index2 = analysis.index == 2 && s.is_medial();
    let equal_classes = analysis.equal_class_sizes();
    let half = analysis.probability == Ratio::new(1, 2);
    HalfProbabilityVerdict {
        medial_index2,
        index: analysis.index,
        class_sizes: analysis.class_sizes,
        probability: analysis.probability,
        equal_classes,
        consistent: !medial_index2 || half == equal_classes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightCommutativeVerdict {
    pub right_commutative: bool,
    pub index: usize,
    pub family: Option<Family>,
    /// A triple `(a, x, y)` with `axy ≠ ayx`, when one exists.
    pub witness: Option<[usize; 3]>,
    /// Right commutative with index 2 implies a family other than right zero,
    /// and a right zero family member has a violating triple.
    pub holds: bool,
}

pub fn check_right_commutative_families(s: &FiniteSemigroup) -> RightCommutativeVerdict {
    let witness = s.right_commutative_violation();
    let right_commutative = witness.is_none();
    let index = theta(s).index();
    let family = classify_medial_index2(s).ok().map(|r| r.family);
    let mut holds = true;
    if right_commutative && index == 2 {
        holds &= matches!(family, Some(f) if f != Family::RightZero);
    }
    if family == Some(Family::RightZero) {
        holds &= witness.is_some_and(|w| s.violates_right_commutative_at(w));
    }
    RightCommutativeVerdict {
        right_commutative,
        index,
        family,
        witness,
        holds,
    }
}
