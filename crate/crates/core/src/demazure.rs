//! Demazure operators on `Z[P]` and the multiplication operators `Y^λ`.
//!
//! `T_i(e^λ) = (e^{λ+α_i} − e^{s_iλ}) / (e^{α_i} − 1)` is evaluated through
//! its closed geometric-sum form. Operator words are read as products: the
//! word `(i_1, …, i_p)` denotes `T_{i_1} T_{i_2} ⋯ T_{i_p}`, so `T_{i_p}` is
//! applied first, and the canonical word of `w` gives `T_w`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grouping::{GroupRingElt, Lattice};
use crate::rootdata::{RootSystem, Weight, WeylElement, WeylGroup};

/// A word in the simple indices, read as an operator product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    word: Vec<usize>,
    reduced: bool,
}

impl OperatorWord {
    /// Validates that `word` is a reduced word in `group`.
    pub fn reduced(group: &WeylGroup, word: &[usize]) -> Result<Self> {
        group.from_reduced_word(word)?;
        Ok(OperatorWord {
            word: word.to_vec(),
            reduced: true,
        })
    }

    /// The canonical reduced word of `w`.
    pub fn of(w: &WeylElement) -> Self {
        OperatorWord {
            word: w.word().to_vec(),
            reduced: true,
        }
    }

    /// Any word; the result is not guaranteed to define `T_w` for an element.
    pub fn unchecked(word: &[usize]) -> Self {
        OperatorWord {
            word: word.to_vec(),
            reduced: false,
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.word
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

fn push_closed_form(
    rs: &RootSystem,
    i: usize,
    lambda: &Weight,
    c: &BigInt,
    out: &mut GroupRingElt,
) {
    let alpha = rs.simple_root(i);
    let k = rs.pair(lambda, i);
    if k >= 0 {
        for j in 0..=k {
            out.add_term(*lambda - j * alpha, c.clone());
        }
    } else {
        for j in 1..=(-k - 1) {
            out.add_term(*lambda + j * alpha, -c.clone());
        }
    }
}

/// `T_i(f)` for a `y`-tagged element.
pub fn demazure_apply(rs: &RootSystem, i: usize, f: &GroupRingElt) -> Result<GroupRingElt> {
    f.expect_lattice(Lattice::Y)?;
    if i == 0 || i > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    let mut out = GroupRingElt::zero(f.rank(), Lattice::Y);
    for (lam, c) in f.terms() {
        push_closed_form(rs, i, lam, c, &mut out);
    }
    Ok(out)
}

/// `T_{i_1} ⋯ T_{i_p}(f)`. Only reduced words are accepted; use
/// [`OperatorWord::of`] for the canonical word of an element.
pub fn demazure_word(
    rs: &RootSystem,
    word: &OperatorWord,
    f: &GroupRingElt,
) -> Result<GroupRingElt> {
    if !word.reduced {
        return Err(Error::NotReduced(word.word.clone()));
    }
    apply_word(rs, &word.word, f)
}

/// Operator product along an arbitrary word, reduced or not.
pub fn apply_word(rs: &RootSystem, word: &[usize], f: &GroupRingElt) -> Result<GroupRingElt> {
    f.expect_lattice(Lattice::Y)?;
    let mut cur = f.clone();
    for &i in word.iter().rev() {
        cur = demazure_apply(rs, i, &cur)?;
    }
    Ok(cur)
}

/// `T_w(f)` using the canonical word of `w`.
pub fn demazure_element(
    rs: &RootSystem,
    w: &WeylElement,
    f: &GroupRingElt,
) -> Result<GroupRingElt> {
    apply_word(rs, w.word(), f)
}

/// `Y^λ(f) = y^λ f`.
pub fn y_mul(lambda: &Weight, f: &GroupRingElt) -> Result<GroupRingElt> {
    f.expect_lattice(Lattice::Y)?;
    lambda.expect_rank(f.rank())?;
    Ok(f.shift(lambda))
}

/// The Laurent polynomial `(y^λ − y^{s_iλ}) / (1 − y^{−α_i})`.
pub fn chevalley_divided_term(rs: &RootSystem, lambda: &Weight, i: usize) -> GroupRingElt {
    let alpha = rs.simple_root(i);
    let k = rs.pair(lambda, i);
    let mut out = GroupRingElt::zero(rs.rank(), Lattice::Y);
    if k >= 1 {
        for j in 0..k {
            out.add_term(*lambda - j * alpha, BigInt::from(1));
        }
    } else {
        for j in 1..=(-k) {
            out.add_term(*lambda + j * alpha, BigInt::from(-1));
        }
    }
    out
}
