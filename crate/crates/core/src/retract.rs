//! Retract ideal extensions of a left zero semigroup by a zero semigroup.
//!
//! These are exactly the semigroups whose kernel of the right regular
//! representation is universal. Every row of the Cayley table is then
//! constant, the idempotents `E` form a left zero ideal, and the retraction
//! onto `E` is forced to be `a ↦ a²`, so that `a·b = φ(a)`.

use thiserror::Error;

use crate::semigroup::{ElementMap, ElementSubset, FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RetractError {
    #[error("retraction does not fix idempotent {0}")]
    NotFixing(usize),
    #[error("retraction sends {0} outside the idempotent set")]
    NotIntoIdempotents(usize),
    #[error("idempotent {0} is not in the image of the retraction")]
    NotOnto(usize),
    #[error("idempotent set must be nonempty")]
    NoIdempotents,
    #[error("retraction has {found} values for a carrier of {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("semigroup has a non-constant row")]
    NotRetractExtension,
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RetractStructure {
    pub idempotents: ElementSubset,
    pub retraction: ElementMap,
}

/// `Some` iff every row of the table is constant. The retraction is `a ↦ a·a`.
pub fn detect(s: &FiniteSemigroup) -> Option<RetractStructure> {
    let n = s.order();
    if !(0..n).all(|a| s.row(a).iter().all(|&p| p == s.product(a, a))) {
        return None;
    }
    let retraction = ElementMap::new(n, (0..n).map(|a| s.product(a, a)).collect()).ok()?;
    Some(RetractStructure {
        idempotents: s.idempotents(),
        retraction,
    })
}

/// The semigroup `a·b = φ(a)` on `0..n`.
pub fn build(
    carrier_size: usize,
    idempotents: &ElementSubset,
    retraction: &ElementMap,
) -> Result<FiniteSemigroup, RetractError> {
    let names = (0..carrier_size).map(|i| i.to_string()).collect();
    build_named(names, idempotents, retraction)
}

pub fn build_named(
    names: Vec<String>,
    idempotents: &ElementSubset,
    retraction: &ElementMap,
) -> Result<FiniteSemigroup, RetractError> {
    let n = names.len();
    check_retraction(n, idempotents, retraction)?;
    Ok(FiniteSemigroup::from_fn_named(names, |a, _| {
        retraction.apply(a)
    })?)
}

fn check_retraction(
    n: usize,
    idempotents: &ElementSubset,
    retraction: &ElementMap,
) -> Result<(), RetractError> {
    if retraction.domain() != n || retraction.codomain() != n || idempotents.universe() != n {
        return Err(RetractError::WrongSize {
            expected: n,
            found: retraction.domain(),
        });
    }
    if idempotents.is_empty() {
        return Err(RetractError::NoIdempotents);
    }
    if let Some(e) = idempotents.iter().find(|&e| retraction.apply(e) != e) {
        return Err(RetractError::NotFixing(e));
    }
    if let Some(a) = (0..n).find(|&a| !idempotents.contains(retraction.apply(a))) {
        return Err(RetractError::NotIntoIdempotents(a));
    }
    // fixing E pointwise already makes the map onto E
    debug_assert!(idempotents.iter().all(|e| retraction.image().contains(&e)));
    Ok(())
}

/// A semigroup together with its retract structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RetractSemigroup {
    semigroup: FiniteSemigroup,
    structure: RetractStructure,
}

impl RetractSemigroup {
    pub fn from_semigroup(semigroup: FiniteSemigroup) -> Result<Self, RetractError> {
        let structure = detect(&semigroup).ok_or(RetractError::NotRetractExtension)?;
        Ok(Self {
            semigroup,
            structure,
        })
    }

    /// Builds from a retraction given as values `φ(0), φ(1), …`; the idempotents
    /// are its fixed points.
    pub fn from_retraction(
        names: Vec<String>,
        retraction: Vec<usize>,
    ) -> Result<Self, RetractError> {
        let n = names.len();
        if retraction.len() != n {
            return Err(RetractError::WrongSize {
                expected: n,
                found: retraction.len(),
            });
        }
        let retraction = ElementMap::new(n, retraction)?;
        let fixed = (0..n).filter(|&a| retraction.apply(a) == a);
        let idempotents = ElementSubset::new(n, fixed)?;
        let semigroup = build_named(names, &idempotents, &retraction)?;
        Ok(Self {
            semigroup,
            structure: RetractStructure {
                idempotents,
                retraction,
            },
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    pub fn names(&self) -> &[String] {
        self.semigroup.names()
    }

    pub fn idempotents(&self) -> &ElementSubset {
        &self.structure.idempotents
    }

    pub fn retraction(&self) -> &ElementMap {
        &self.structure.retraction
    }

    pub fn phi(&self, a: usize) -> usize {
        self.structure.retraction.apply(a)
    }

    /// Sorted fiber sizes of the retraction, which determine the isomorphism class.
    pub fn fiber_profile(&self) -> Vec<usize> {
        fiber_profile(&self.structure.retraction)
    }
}

fn fiber_profile(retraction: &ElementMap) -> Vec<usize> {
    let mut sizes = vec![0; retraction.codomain()];
    for &v in retraction.image() {
        sizes[v] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// One representative per isomorphism class of order `n`, one per integer
/// partition of `n` (the fiber sizes of the retraction). Within a block the
/// first element is the idempotent.
pub fn enumerate_retract_semigroups(n: usize) -> Vec<RetractSemigroup> {
    let mut shapes = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut shapes);
    shapes
        .into_iter()
        .map(|shape| {
            let mut retraction = Vec::with_capacity(n);
            let mut start = 0;
            for size in shape {
                retraction.extend(std::iter::repeat_n(start, size));
                start += size;
            }
            let names = (0..n).map(|i| i.to_string()).collect();
            RetractSemigroup::from_retraction(names, retraction).expect("block retraction is valid")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::representation::theta;
    use crate::semigroup::TwoElementType;

    #[test]
    fn detects_zero_and_left_zero() {
        let zero = FiniteSemigroup::from_fn_named(vec!["b".into(), "0".into()], |_, _| 1).unwrap();
        let r = detect(&zero).unwrap();
        assert_eq!(r.idempotents.as_slice(), &[1]);
        assert_eq!(r.retraction.image(), &[1, 1]);

        let lz = TwoElementType::LeftZero.model();
        let r = detect(&lz).unwrap();
        assert_eq!(r.idempotents.as_slice(), &[0, 1]);
        assert_eq!(r.retraction, ElementMap::identity(2));

        assert!(detect(&TwoElementType::Group.model()).is_none());
    }

    #[test]
    fn builds_from_retraction() {
        let e = ElementSubset::new(2, [1]).unwrap();
        let s = build(2, &e, &ElementMap::new(2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(
            s.classify_two_element().unwrap(),
            TwoElementType::ZeroSemigroup
        );

        let s = build(2, &ElementSubset::full(2), &ElementMap::identity(2)).unwrap();
        assert_eq!(s.classify_two_element().unwrap(), TwoElementType::LeftZero);

        let e = ElementSubset::new(3, [2]).unwrap();
        let phi = ElementMap::new(3, vec![2, 2, 2]).unwrap();
        let s = build(3, &e, &phi).unwrap();
        assert_eq!(theta(&s).index(), 1);
        let r = detect(&s).unwrap();
        assert_eq!((r.idempotents, r.retraction), (e, phi));
    }

    #[test]
    fn rejects_non_retractions() {
        let e = ElementSubset::new(2, [1]).unwrap();
        assert_eq!(
            build(2, &e, &ElementMap::new(2, vec![1, 0]).unwrap()),
            Err(RetractError::NotFixing(1))
        );
        let e = ElementSubset::new(3, [0]).unwrap();
        assert_eq!(
            build(3, &e, &ElementMap::new(3, vec![0, 1, 0]).unwrap()),
            Err(RetractError::NotIntoIdempotents(1))
        );
        assert_eq!(
            build(
                1,
                &ElementSubset::new(1, []).unwrap(),
                &ElementMap::identity(1)
            ),
            Err(RetractError::NoIdempotents)
        );
    }

    /// All (E, φ) on `0..n`, built directly.
    fn every_retract_semigroup(n: usize) -> Vec<FiniteSemigroup> {
        let mut out = Vec::new();
        for code in 0..n.pow(n as u32) {
            let phi: Vec<usize> = (0..n).map(|i| (code / n.pow(i as u32)) % n).collect();
            let fixes_image = phi.iter().all(|&v| phi[v] == v);
            if fixes_image {
                out.push(FiniteSemigroup::from_fn(n, |a, _| phi[a]).unwrap());
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_isomorphism_dedup() {
        for n in 1..=4 {
            let mut reps: Vec<FiniteSemigroup> = Vec::new();
            for s in every_retract_semigroup(n) {
                if !reps.iter().any(|r| are_isomorphic(r, &s).is_some()) {
                    reps.push(s);
                }
            }
            let generated = enumerate_retract_semigroups(n);
            assert_eq!(generated.len(), reps.len(), "order {}", n);
            for g in &generated {
                assert_eq!(
                    reps.iter()
                        .filter(|r| are_isomorphic(r, g.semigroup()).is_some())
                        .count(),
                    1
                );
            }
        }
        assert_eq!(enumerate_retract_semigroups(1).len(), 1);
        assert_eq!(enumerate_retract_semigroups(2).len(), 2);
        assert_eq!(enumerate_retract_semigroups(3).len(), 3);
    }

    #[test]
    fn structure_invariants() {
        for n in 1..=5 {
            for r in enumerate_retract_semigroups(n) {
                let s = r.semigroup();
                assert_eq!(&s.idempotents(), r.idempotents());
                let mut squares: Vec<usize> = s.flat_table().to_vec();
                squares.sort_unstable();
                squares.dedup();
                assert_eq!(squares.as_slice(), r.idempotents().as_slice());
                for e in r.idempotents().iter() {
                    for f in r.idempotents().iter() {
                        assert_eq!(s.product(e, f), e);
                    }
                }
                assert_eq!(detect(s).unwrap().retraction, *r.retraction());
                assert_eq!(r.fiber_profile().iter().sum::<usize>(), n);
            }
        }
    }
}
