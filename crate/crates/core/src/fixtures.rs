//! Small named semigroups used throughout the tests and examples.
//!
//! The four `*_extension` tables are medial semigroups whose kernel of the
//! right regular representation has two classes, one for each possible
//! two-element quotient.

use crate::semigroup::FiniteSemigroup;

fn from_rows(names: &[&str], rows: &[&[&str]]) -> FiniteSemigroup {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let index = |x: &str| names.iter().position(|n| n == x).expect("known name");
    let table = rows
        .iter()
        .map(|row| row.iter().map(|x| index(x)).collect())
        .collect();
    FiniteSemigroup::new(names.clone(), table).expect("fixture is a semigroup")
}

/// `{a, 0} ∪ {e, f}`; quotient by the kernel is the two-element semilattice.
pub fn semilattice_extension() -> FiniteSemigroup {
    from_rows(
        &["a", "0", "e", "f"],
        &[
            &["0", "0", "e", "e"],
            &["0", "0", "e", "e"],
            &["e", "e", "e", "e"],
            &["f", "f", "f", "f"],
        ],
    )
}

/// `{a} ∪ {b, 0}`; quotient is the two-element zero semigroup.
pub fn zero_extension() -> FiniteSemigroup {
    from_rows(
        &["a", "b", "0"],
        &[&["b", "0", "0"], &["0", "0", "0"], &["0", "0", "0"]],
    )
}

/// `{e} ∪ {x, y}`; quotient is the two-element group.
pub fn group_extension() -> FiniteSemigroup {
    from_rows(
        &["e", "x", "y"],
        &[&["e", "x", "x"], &["x", "e", "e"], &["x", "e", "e"]],
    )
}

/// `{e, f} ∪ {g, h}`; quotient is the two-element right zero semigroup.
pub fn right_zero_extension() -> FiniteSemigroup {
    from_rows(
        &["e", "f", "g", "h"],
        &[
            &["e", "e", "g", "g"],
            &["f", "f", "h", "h"],
            &["e", "e", "g", "g"],
            &["f", "f", "h", "h"],
        ],
    )
}

pub fn left_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, _| x).expect("left zero")
}

pub fn right_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |_, y| y).expect("right zero")
}

/// Zero semigroup of order `n` with the zero at the last index.
pub fn zero_semigroup(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |_, _| n - 1).expect("zero semigroup")
}

pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, y| (x + y) % n).expect("cyclic group")
}

/// `{1, a, b}`: identity `1` adjoined to the left zero semigroup `{a, b}`.
pub fn monoid_with_left_zero_pair() -> FiniteSemigroup {
    from_rows(
        &["1", "a", "b"],
        &[&["1", "a", "b"], &["a", "a", "a"], &["b", "b", "b"]],
    )
}
