//! The four families of medial semigroups whose kernel has exactly two classes.
//!
//! Each family glues two disjoint parts `A` and `B` along a handful of maps.
//! The carrier is always laid out as the `A` block followed by the `B` block,
//! and the four-way case split of the operation dispatches on `x < |A|`.
//!
//! | family       | `A`               | `B`               | maps                                   |
//! |--------------|-------------------|-------------------|----------------------------------------|
//! | semilattice  | retract semigroup | retract semigroup | `α: A → E_B`, `β: B → B`               |
//! | zero         | bare set          | retract semigroup | `α: A → B`, `β: A → E_B`, `γ: B → B`   |
//! | group        | retract semigroup | bare set          | `α: A → B`, `γ: B → E_A`, `β = α ∘ γ`  |
//! | right zero   | retract semigroup | retract semigroup | `α: A → E_B`, `β: B → E_A`             |
//!
//! Maps act from the left and `f ∘ g` means "apply `g` first".

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::representation::theta;
use crate::retract::{enumerate_retract_semigroups, RetractSemigroup};
use crate::semigroup::{
    ElementMap, ElementSubset, FiniteSemigroup, SemigroupError, TwoElementType,
};

/// Which construction, named after the two-element quotient it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Semilattice,
    Zero,
    Group,
    RightZero,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Semilattice,
        Family::Zero,
        Family::Group,
        Family::RightZero,
    ];

    /// 1 to 4, in the order semilattice, zero, group, right zero.
    pub fn number(self) -> u8 {
        match self {
            Family::Semilattice => 1,
            Family::Zero => 2,
            Family::Group => 3,
            Family::RightZero => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.number() == n)
    }

    pub fn quotient_type(self) -> TwoElementType {
        match self {
            Family::Semilattice => TwoElementType::Semilattice,
            Family::Zero => TwoElementType::ZeroSemigroup,
            Family::Group => TwoElementType::Group,
            Family::RightZero => TwoElementType::RightZero,
        }
    }

    pub fn from_quotient(t: TwoElementType) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.quotient_type() == t)
    }

    /// Every family except the right zero one yields right commutative semigroups.
    pub fn is_right_commutative(self) -> bool {
        self != Family::RightZero
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "construction {} ({} quotient)",
            self.number(),
            self.quotient_type()
        )
    }
}

/// A part that only needs to be a set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BareSet {
    names: Vec<String>,
}

impl BareSet {
    pub fn new(names: Vec<String>) -> Result<Self, SemigroupError> {
        if names.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let mut seen = HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(SemigroupError::DuplicateName(dup.clone()));
        }
        Ok(Self { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Component data for one construction. Maps are indexed locally: a map
/// `A → B` sends `0..|A|` to `0..|B|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionParams {
    Semilattice {
        a: RetractSemigroup,
        b: RetractSemigroup,
        alpha: ElementMap,
        beta: ElementMap,
    },
    Zero {
        a: BareSet,
        b: RetractSemigroup,
        alpha: ElementMap,
        beta: ElementMap,
        gamma: ElementMap,
    },
    Group {
        a: RetractSemigroup,
        b: BareSet,
        alpha: ElementMap,
        gamma: ElementMap,
    },
    RightZero {
        a: RetractSemigroup,
        b: RetractSemigroup,
        alpha: ElementMap,
        beta: ElementMap,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationFailure {
    pub family: Family,
    pub equation: &'static str,
    pub witness: String,
}

impl fmt::Display for EquationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: `{}` fails at {}",
            self.family, self.equation, self.witness
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    EquationFailed(EquationFailure),
    #[error(
        "degenerate parameters: alpha = beta and gamma = phi_B, so the kernel would have one class"
    )]
    DegenerateParams,
    #[error("map {map} should go from {expected_domain} to {expected_codomain} elements, got {domain} to {codomain}")]
    MapShape {
        map: &'static str,
        expected_domain: usize,
        expected_codomain: usize,
        domain: usize,
        codomain: usize,
    },
    #[error("element name `{0}` occurs in both A and B")]
    OverlappingNames(String),
    #[error("built table violates an expected property: {0}")]
    PostconditionFailed(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Collects failed map equations in the order they are checked.
struct Checker {
    family: Family,
    failures: Vec<EquationFailure>,
}

impl Checker {
    fn fail(&mut self, equation: &'static str, witness: String) {
        self.failures.push(EquationFailure {
            family: self.family,
            equation,
            witness,
        });
    }

    fn maps_into(
        &mut self,
        equation: &'static str,
        map: &ElementMap,
        target: &ElementSubset,
        domain: &[String],
    ) {
        if let Some(x) = (0..map.domain()).find(|&x| !target.contains(map.apply(x))) {
            self.fail(equation, domain[x].clone());
        }
    }

    fn fixes(
        &mut self,
        equation: &'static str,
        map: &ElementMap,
        fixed: &ElementSubset,
        domain: &[String],
    ) {
        if let Some(x) = fixed.iter().find(|&x| map.apply(x) != x) {
            self.fail(equation, domain[x].clone());
        }
    }

    fn equal(
        &mut self,
        equation: &'static str,
        lhs: &ElementMap,
        rhs: &ElementMap,
        domain: &[String],
    ) {
        if let Some(x) = (0..lhs.domain()).find(|&x| lhs.apply(x) != rhs.apply(x)) {
            self.fail(equation, domain[x].clone());
        }
    }

    fn homomorphism(
        &mut self,
        equation: &'static str,
        map: &ElementMap,
        domain: &FiniteSemigroup,
        codomain: &FiniteSemigroup,
    ) {
        let n = domain.order();
        for x in 0..n {
            for y in 0..n {
                let lhs = map.apply(domain.product(x, y));
                let rhs = codomain.product(map.apply(x), map.apply(y));
                if lhs != rhs {
                    self.fail(
                        equation,
                        format!("({}, {})", domain.name(x), domain.name(y)),
                    );
                    return;
                }
            }
        }
    }
}

fn check_shape(
    map: &'static str,
    f: &ElementMap,
    domain: usize,
    codomain: usize,
) -> Result<(), ConstructionError> {
    if f.domain() != domain || f.codomain() != codomain {
        return Err(ConstructionError::MapShape {
            map,
            expected_domain: domain,
            expected_codomain: codomain,
            domain: f.domain(),
            codomain: f.codomain(),
        });
    }
    Ok(())
}

impl ConstructionParams {
    pub fn family(&self) -> Family {
        match self {
            ConstructionParams::Semilattice { .. } => Family::Semilattice,
            ConstructionParams::Zero { .. } => Family::Zero,
            ConstructionParams::Group { .. } => Family::Group,
            ConstructionParams::RightZero { .. } => Family::RightZero,
        }
    }

    pub fn a_names(&self) -> &[String] {
        match self {
            ConstructionParams::Semilattice { a, .. }
            | ConstructionParams::Group { a, .. }
            | ConstructionParams::RightZero { a, .. } => a.names(),
            ConstructionParams::Zero { a, .. } => a.names(),
        }
    }

    pub fn b_names(&self) -> &[String] {
        match self {
            ConstructionParams::Semilattice { b, .. }
            | ConstructionParams::Zero { b, .. }
            | ConstructionParams::RightZero { b, .. } => b.names(),
            ConstructionParams::Group { b, .. } => b.names(),
        }
    }

    pub fn a_len(&self) -> usize {
        self.a_names().len()
    }

    pub fn b_len(&self) -> usize {
        self.b_names().len()
    }

    /// Carrier names in layout order: `A` then `B`.
    pub fn names(&self) -> Vec<String> {
        self.a_names()
            .iter()
            .chain(self.b_names())
            .cloned()
            .collect()
    }

    /// `α ∘ γ`, only defined for the group family.
    pub fn derived_beta(&self) -> Option<ElementMap> {
        match self {
            ConstructionParams::Group { alpha, gamma, .. } => Some(alpha.after(gamma)),
            _ => None,
        }
    }

    fn check_shapes(&self) -> Result<(), ConstructionError> {
        let (na, nb) = (self.a_len(), self.b_len());
        match self {
            ConstructionParams::Semilattice { alpha, beta, .. } => {
                check_shape("alpha", alpha, na, nb)?;
                check_shape("beta", beta, nb, nb)
            }
            ConstructionParams::Zero {
                alpha, beta, gamma, ..
            } => {
                check_shape("alpha", alpha, na, nb)?;
                check_shape("beta", beta, na, nb)?;
                check_shape("gamma", gamma, nb, nb)
            }
            ConstructionParams::Group { alpha, gamma, .. } => {
                check_shape("alpha", alpha, na, nb)?;
                check_shape("gamma", gamma, nb, na)
            }
            ConstructionParams::RightZero { alpha, beta, .. } => {
                check_shape("alpha", alpha, na, nb)?;
                check_shape("beta", beta, nb, na)
            }
        }
    }

    /// Every failing condition, in checking order: codomain and fixed-point
    /// conditions, the defining equations, homomorphism conditions, and the
    /// equations that follow from the defining ones.
    pub fn failures(&self) -> Result<Vec<EquationFailure>, ConstructionError> {
        self.check_shapes()?;
        let mut c = Checker {
            family: self.family(),
            failures: Vec::new(),
        };
        match self {
            ConstructionParams::Semilattice { a, b, alpha, beta } => {
                let (pa, pb) = (a.retraction(), b.retraction());
                let (an, bn) = (a.names(), b.names());
                c.maps_into("alpha maps A into E_B", alpha, b.idempotents(), an);
                c.fixes("beta fixes E_B", beta, b.idempotents(), bn);
                c.equal("alpha ∘ phi_A = alpha", &alpha.after(pa), alpha, an);
                c.equal("beta ∘ beta = beta", &beta.after(beta), beta, bn);
                c.equal("phi_B ∘ beta = phi_B", &pb.after(beta), pb, bn);
                c.homomorphism(
                    "alpha is a homomorphism A → B",
                    alpha,
                    a.semigroup(),
                    b.semigroup(),
                );
                c.homomorphism(
                    "beta is a homomorphism B → B",
                    beta,
                    b.semigroup(),
                    b.semigroup(),
                );
                c.equal("phi_B ∘ alpha = alpha", &pb.after(alpha), alpha, an);
                c.equal("beta ∘ alpha = alpha", &beta.after(alpha), alpha, an);
                c.equal("beta ∘ phi_B = phi_B", &beta.after(pb), pb, bn);
            }
            ConstructionParams::Zero {
                a,
                b,
                alpha,
                beta,
                gamma,
            } => {
                let pb = b.retraction();
                let (an, bn) = (a.names(), b.names());
                c.maps_into("beta maps A into E_B", beta, b.idempotents(), an);
                c.fixes("gamma fixes E_B", gamma, b.idempotents(), bn);
                c.equal("phi_B ∘ alpha = beta", &pb.after(alpha), beta, an);
                c.equal("gamma ∘ alpha = beta", &gamma.after(alpha), beta, an);
                c.equal("phi_B ∘ gamma = phi_B", &pb.after(gamma), pb, bn);
                c.equal("gamma ∘ gamma = phi_B", &gamma.after(gamma), pb, bn);
                c.homomorphism(
                    "gamma is a homomorphism B → B",
                    gamma,
                    b.semigroup(),
                    b.semigroup(),
                );
                c.equal("phi_B ∘ beta = beta", &pb.after(beta), beta, an);
                c.equal("gamma ∘ beta = beta", &gamma.after(beta), beta, an);
                c.equal("gamma ∘ phi_B = phi_B", &gamma.after(pb), pb, bn);
            }
            ConstructionParams::Group { a, b, alpha, gamma } => {
                let pa = a.retraction();
                let (an, bn) = (a.names(), b.names());
                c.maps_into("gamma maps B into E_A", gamma, a.idempotents(), bn);
                c.equal("alpha = alpha ∘ phi_A", alpha, &alpha.after(pa), an);
                c.equal("gamma ∘ alpha = phi_A", &gamma.after(alpha), pa, an);
                let beta = alpha.after(gamma);
                c.equal("beta ∘ beta = beta", &beta.after(&beta), &beta, bn);
                c.equal("beta ∘ alpha = alpha", &beta.after(alpha), alpha, an);
                c.equal("gamma ∘ beta = gamma", &gamma.after(&beta), gamma, bn);
            }
            ConstructionParams::RightZero { a, b, alpha, beta } => {
                let (pa, pb) = (a.retraction(), b.retraction());
                let (an, bn) = (a.names(), b.names());
                c.maps_into("alpha maps A into E_B", alpha, b.idempotents(), an);
                c.maps_into("beta maps B into E_A", beta, a.idempotents(), bn);
                c.equal("alpha ∘ phi_A = alpha", &alpha.after(pa), alpha, an);
                c.equal("phi_B ∘ alpha = alpha", &pb.after(alpha), alpha, an);
                c.equal("beta ∘ phi_B = beta", &beta.after(pb), beta, bn);
                c.equal("phi_A ∘ beta = beta", &pa.after(beta), beta, bn);
                c.equal("alpha ∘ beta = phi_B", &alpha.after(beta), pb, bn);
                c.equal("beta ∘ alpha = phi_A", &beta.after(alpha), pa, an);
                c.homomorphism(
                    "alpha is a homomorphism A → B",
                    alpha,
                    a.semigroup(),
                    b.semigroup(),
                );
                c.homomorphism(
                    "beta is a homomorphism B → A",
                    beta,
                    b.semigroup(),
                    a.semigroup(),
                );
            }
        }
        Ok(c.failures)
    }

    /// Reports the first failing condition; the zero family additionally
    /// requires `alpha ≠ beta` or `gamma ≠ phi_B`.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        if let Some(first) = self.failures()?.into_iter().next() {
            return Err(ConstructionError::EquationFailed(first));
        }
        if let ConstructionParams::Zero {
            b,
            alpha,
            beta,
            gamma,
            ..
        } = self
        {
            if alpha == beta && gamma == b.retraction() {
                return Err(ConstructionError::DegenerateParams);
            }
        }
        Ok(())
    }

    fn check_disjoint(&self) -> Result<(), ConstructionError> {
        let a: HashSet<&str> = self.a_names().iter().map(String::as_str).collect();
        match self.b_names().iter().find(|n| a.contains(n.as_str())) {
            Some(dup) => Err(ConstructionError::OverlappingNames(dup.clone())),
            None => Ok(()),
        }
    }

    /// The product in layout indices, without validation.
    fn product(&self, x: usize, y: usize) -> usize {
        let na = self.a_len();
        let (x_in_a, y_in_a) = (x < na, y < na);
        let lift = |b: usize| na + b;
        match self {
            ConstructionParams::Semilattice { a, b, alpha, beta } => match (x_in_a, y_in_a) {
                (true, true) => a.phi(x),
                (true, false) => lift(alpha.apply(x)),
                (false, true) => lift(beta.apply(x - na)),
                (false, false) => lift(b.phi(x - na)),
            },
            ConstructionParams::Zero {
                b,
                alpha,
                beta,
                gamma,
                ..
            } => match (x_in_a, y_in_a) {
                (true, true) => lift(alpha.apply(x)),
                (true, false) => lift(beta.apply(x)),
                (false, true) => lift(gamma.apply(x - na)),
                (false, false) => lift(b.phi(x - na)),
            },
            ConstructionParams::Group {
                a, alpha, gamma, ..
            } => match (x_in_a, y_in_a) {
                (true, true) => a.phi(x),
                (true, false) => lift(alpha.apply(x)),
                (false, true) => lift(alpha.apply(gamma.apply(x - na))),
                (false, false) => gamma.apply(x - na),
            },
            ConstructionParams::RightZero { a, b, alpha, beta } => match (x_in_a, y_in_a) {
                (true, true) => a.phi(x),
                (true, false) => lift(alpha.apply(x)),
                (false, true) => beta.apply(x - na),
                (false, false) => lift(b.phi(x - na)),
            },
        }
    }

    /// Validates, builds the table on `A ∪ B`, and re-verifies associativity,
    /// the kernel classes `{A, B}`, the quotient type, and the identities the
    /// family guarantees.
    pub fn build(&self) -> Result<FiniteSemigroup, ConstructionError> {
        self.validate()?;
        self.check_disjoint()?;
        let s = FiniteSemigroup::from_fn_named(self.names(), |x, y| self.product(x, y))?;
        self.check_postconditions(&s)?;
        Ok(s)
    }

    fn check_postconditions(&self, s: &FiniteSemigroup) -> Result<(), ConstructionError> {
        let na = self.a_len();
        let kernel = theta(s);
        if kernel.index() != 2 || (0..s.order()).any(|x| kernel.class_of(x) != usize::from(x >= na))
        {
            return Err(ConstructionError::PostconditionFailed(
                "kernel classes are not exactly A and B".into(),
            ));
        }
        let quotient = s.quotient(&kernel)?.classify_two_element()?;
        let family = self.family();
        if quotient != family.quotient_type() {
            return Err(ConstructionError::PostconditionFailed(format!(
                "quotient is a {}, expected a {}",
                quotient,
                family.quotient_type()
            )));
        }
        if !s.is_medial() {
            return Err(ConstructionError::PostconditionFailed("not medial".into()));
        }
        if family.is_right_commutative() && !s.is_right_commutative() {
            return Err(ConstructionError::PostconditionFailed(
                "not right commutative".into(),
            ));
        }
        Ok(())
    }
}

/// All maps `0..domain → codomain` with values drawn from `targets`.
fn all_maps(domain: usize, codomain: usize, targets: &[usize]) -> Vec<ElementMap> {
    let mut out = Vec::new();
    let mut digits = vec![0usize; domain];
    if targets.is_empty() && domain > 0 {
        return out;
    }
    loop {
        let image = digits.iter().map(|&d| targets[d]).collect();
        out.push(ElementMap::new(codomain, image).expect("targets in range"));
        let mut i = 0;
        loop {
            if i == domain {
                return out;
            }
            digits[i] += 1;
            if digits[i] < targets.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn named_parts(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{}{}", prefix, i)).collect()
}

fn retract_parts(prefix: &str, n: usize) -> Vec<RetractSemigroup> {
    enumerate_retract_semigroups(n)
        .into_iter()
        .map(|r| {
            let phi = r.retraction().image().to_vec();
            RetractSemigroup::from_retraction(named_parts(prefix, n), phi)
                .expect("renaming a retract semigroup")
        })
        .collect()
}

/// Every valid parameter tuple with `|A| = a_len` and `|B| = b_len`.
///
/// Retract parts range over one representative per isomorphism class; the
/// maps range over everything. Elements are named `a0, a1, …` and `b0, b1, …`.
pub fn enumerate_params(family: Family, a_len: usize, b_len: usize) -> Vec<ConstructionParams> {
    if a_len == 0 || b_len == 0 {
        return Vec::new();
    }
    let everything = |n: usize| (0..n).collect::<Vec<_>>();
    let mut out = Vec::new();
    let mut keep = |p: ConstructionParams| {
        if p.validate().is_ok() {
            out.push(p);
        }
    };
    match family {
        Family::Semilattice => {
            for a in retract_parts("a", a_len) {
                for b in retract_parts("b", b_len) {
                    for alpha in all_maps(a_len, b_len, b.idempotents().as_slice()) {
                        for beta in all_maps(b_len, b_len, &everything(b_len)) {
                            keep(ConstructionParams::Semilattice {
                                a: a.clone(),
                                b: b.clone(),
                                alpha: alpha.clone(),
                                beta,
                            });
                        }
                    }
                }
            }
        }
        Family::Zero => {
            let a = BareSet::new(named_parts("a", a_len)).expect("nonempty");
            for b in retract_parts("b", b_len) {
                for alpha in all_maps(a_len, b_len, &everything(b_len)) {
                    for beta in all_maps(a_len, b_len, b.idempotents().as_slice()) {
                        for gamma in all_maps(b_len, b_len, &everything(b_len)) {
                            keep(ConstructionParams::Zero {
                                a: a.clone(),
                                b: b.clone(),
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                                gamma,
                            });
                        }
                    }
                }
            }
        }
        Family::Group => {
            let b = BareSet::new(named_parts("b", b_len)).expect("nonempty");
            for a in retract_parts("a", a_len) {
                for alpha in all_maps(a_len, b_len, &everything(b_len)) {
                    for gamma in all_maps(b_len, a_len, a.idempotents().as_slice()) {
                        keep(ConstructionParams::Group {
                            a: a.clone(),
                            b: b.clone(),
                            alpha: alpha.clone(),
                            gamma,
                        });
                    }
                }
            }
        }
        Family::RightZero => {
            for a in retract_parts("a", a_len) {
                for b in retract_parts("b", b_len) {
                    for alpha in all_maps(a_len, b_len, b.idempotents().as_slice()) {
                        for beta in all_maps(b_len, a_len, a.idempotents().as_slice()) {
                            keep(ConstructionParams::RightZero {
                                a: a.clone(),
                                b: b.clone(),
                                alpha: alpha.clone(),
                                beta,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Parameter sets that reproduce the four worked example tables in
/// [`crate::fixtures`].
pub mod examples {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn map(codomain: usize, image: &[usize]) -> ElementMap {
        ElementMap::new(codomain, image.to_vec()).expect("example map")
    }

    /// `A = {a, 0}` zero semigroup, `B = {e, f}` left zero, `α ≡ e`, `β = id`.
    pub fn semilattice() -> ConstructionParams {
        ConstructionParams::Semilattice {
            a: RetractSemigroup::from_retraction(names(&["a", "0"]), vec![1, 1])
                .expect("zero semigroup"),
            b: RetractSemigroup::from_retraction(names(&["e", "f"]), vec![0, 1])
                .expect("left zero"),
            alpha: map(2, &[0, 0]),
            beta: ElementMap::identity(2),
        }
    }

    /// `A = {a}`, `B = {b, 0}` zero semigroup, `α(a) = b`, `β(a) = 0`, `γ = φ_B`.
    pub fn zero() -> ConstructionParams {
        ConstructionParams::Zero {
            a: BareSet::new(names(&["a"])).expect("singleton"),
            b: RetractSemigroup::from_retraction(names(&["b", "0"]), vec![1, 1])
                .expect("zero semigroup"),
            alpha: map(2, &[0]),
            beta: map(2, &[1]),
            gamma: map(2, &[1, 1]),
        }
    }

    /// `A = {e}`, `B = {x, y}`, `α(e) = x`, `γ ≡ e`.
    pub fn group() -> ConstructionParams {
        ConstructionParams::Group {
            a: RetractSemigroup::from_retraction(names(&["e"]), vec![0]).expect("trivial"),
            b: BareSet::new(names(&["x", "y"])).expect("two names"),
            alpha: map(2, &[0]),
            gamma: map(1, &[0, 0]),
        }
    }

    /// `A = {e, f}`, `B = {g, h}` left zero, `α` and `β` mutually inverse.
    pub fn right_zero() -> ConstructionParams {
        ConstructionParams::RightZero {
            a: RetractSemigroup::from_retraction(names(&["e", "f"]), vec![0, 1])
                .expect("left zero"),
            b: RetractSemigroup::from_retraction(names(&["g", "h"]), vec![0, 1])
                .expect("left zero"),
            alpha: ElementMap::identity(2),
            beta: ElementMap::identity(2),
        }
    }

    pub fn for_family(family: Family) -> ConstructionParams {
        match family {
            Family::Semilattice => semilattice(),
            Family::Zero => zero(),
            Family::Group => group(),
            Family::RightZero => right_zero(),
        }
    }
}
