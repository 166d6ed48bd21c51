//! The group algebra `Z[P]` of the weight lattice with exact integer
//! coefficients.
//!
//! Two copies of the lattice are kept apart by a tag: the `y` lattice is the
//! fibre ring `R(T)` on which the Weyl group and the Demazure operators act;
//! the `x` lattice formally stands in for the base coefficients `x^μ`. Both
//! obey the same monoid law `x^λ x^μ = x^{λ+μ}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{Weight, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    X,
    Y,
}

/// A finite formal sum `Σ c_λ e^λ`. Zero coefficients are never stored and
/// terms iterate in lexicographic order of their weights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElt {
    tag: Lattice,
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl GroupRingElt {
    pub fn zero(rank: usize, tag: Lattice) -> Self {
        GroupRingElt {
            tag,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, tag: Lattice) -> Self {
        Self::monomial(Weight::zero(rank), tag)
    }

    /// `e^λ` with coefficient 1.
    pub fn monomial(lambda: Weight, tag: Lattice) -> Self {
        let mut f = Self::zero(lambda.rank(), tag);
        f.terms.insert(lambda, BigInt::one());
        f
    }

    /// Builds an element from `(weight, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(rank: usize, tag: Lattice, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut f = Self::zero(rank, tag);
        for (w, c) in terms {
            debug_assert_eq!(w.rank(), rank);
            f.add_term(w, c.into());
        }
        f
    }

    pub fn tag(&self) -> Lattice {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Weight) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the image under `e^λ ↦ 1`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Same terms, different lattice.
    pub fn retag(mut self, tag: Lattice) -> Self {
        self.tag = tag;
        self
    }

    pub(crate) fn add_term(&mut self, lambda: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &GroupRingElt) {
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone());
        }
    }

    fn check_tag(&self, other: &GroupRingElt) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch {
                left: self.tag,
                right: other.tag,
            });
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub(crate) fn expect_lattice(&self, expected: Lattice) -> Result<()> {
        if self.tag == expected {
            Ok(())
        } else {
            Err(Error::WrongLattice {
                expected,
                found: self.tag,
            })
        }
    }

    pub fn checked_add(&self, other: &GroupRingElt) -> Result<GroupRingElt> {
        self.check_tag(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GroupRingElt) -> Result<GroupRingElt> {
        self.checked_add(&other.scale(&BigInt::from(-1)))
    }

    pub fn checked_mul(&self, other: &GroupRingElt) -> Result<GroupRingElt> {
        self.check_tag(other)?;
        let mut out = Self::zero(self.rank, self.tag);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(*a + *b, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> GroupRingElt {
        let mut out = Self::zero(self.rank, self.tag);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, x)| (*w, x * c)).collect();
        out
    }

    /// Multiplication by the single monomial `e^λ`.
    pub fn shift(&self, lambda: &Weight) -> GroupRingElt {
        GroupRingElt {
            tag: self.tag,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w + *lambda, c.clone()))
                .collect(),
        }
    }

    /// `e^λ ↦ e^{wλ}`, extended linearly.
    pub fn act(&self, w: &WeylElement) -> GroupRingElt {
        let mut out = Self::zero(self.rank, self.tag);
        for (lam, c) in &self.terms {
            out.add_term(w.act(lam), c.clone());
        }
        out
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.tag {
            Lattice::X => "x",
            Lattice::Y => "y",
        };
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}^{w}")?;
            } else {
                write!(f, "{c}*{sym}^{w}")?;
            }
        }
        Ok(())
    }
}

/// `e^λ` in the requested lattice.
pub fn gr_monomial(lambda: Weight, tag: Lattice) -> GroupRingElt {
    GroupRingElt::monomial(lambda, tag)
}

pub fn gr_add(f: &GroupRingElt, g: &GroupRingElt) -> Result<GroupRingElt> {
    f.checked_add(g)
}

pub fn gr_mul(f: &GroupRingElt, g: &GroupRingElt) -> Result<GroupRingElt> {
    f.checked_mul(g)
}

pub fn gr_act(w: &WeylElement, f: &GroupRingElt) -> GroupRingElt {
    f.act(w)
}

/// The orbit sum `Σ_{μ ∈ Wλ} e^μ` of a dominant weight, in the `y` lattice.
pub fn gr_orbit_sum(group: &WeylGroup, lambda: &Weight) -> Result<GroupRingElt> {
    lambda.expect_rank(group.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut orbit: Vec<Weight> = group.elements().iter().map(|w| w.act(lambda)).collect();
    orbit.sort();
    orbit.dedup();
    Ok(GroupRingElt::from_terms(
        group.rank(),
        Lattice::Y,
        orbit.into_iter().map(|m| (m, 1)),
    ))
}

/// One `{mu, c}` record in the JSON form of an element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub mu: Vec<i64>,
    #[serde(with = "bigint_json")]
    pub c: BigInt,
}

impl GroupRingElt {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| TermRecord {
                mu: w.coords().to_vec(),
                c: c.clone(),
            })
            .collect()
    }

    pub fn from_records(rank: usize, tag: Lattice, records: &[TermRecord]) -> Result<Self> {
        let mut f = Self::zero(rank, tag);
        for r in records {
            if r.mu.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: r.mu.len(),
                });
            }
            f.add_term(Weight::new(&r.mu), r.c.clone());
        }
        Ok(f)
    }
}

/// Integers that fit in `i64` are written as JSON numbers, larger ones as
/// decimal strings.
pub(crate) mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;
    use proptest::prelude::*;

    fn y(c: &[i64]) -> GroupRingElt {
        GroupRingElt::monomial(Weight::new(c), Lattice::Y)
    }

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
    }

    #[test]
    fn monomials() {
        let one = gr_monomial(Weight::zero(2), Lattice::Y);
        assert_eq!(one, GroupRingElt::one(2, Lattice::Y));
        let f = y(&[3, -1]);
        assert_eq!(one.checked_mul(&f).unwrap(), f);
        let x = gr_monomial(Weight::new(&[-1, 1]), Lattice::X);
        assert_eq!(x.tag(), Lattice::X);
        assert_eq!(format!("{x}"), "x^(-1,1)");
    }

    #[test]
    fn ring_examples() {
        assert_eq!(y(&[1, 0]).checked_mul(&y(&[0, 2])).unwrap(), y(&[1, 2]));
        // (1 − e^{−α})(1 + e^{−α}) = 1 − e^{−2α} in A1, α = 2ω.
        let one = GroupRingElt::one(1, Lattice::Y);
        let e = y(&[-2]);
        let a = one.checked_sub(&e).unwrap();
        let b = one.checked_add(&e).unwrap();
        let expect = one.checked_sub(&y(&[-4])).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), expect);
        let f = a.checked_add(&b).unwrap();
        assert!(f.checked_sub(&f).unwrap().is_empty());
    }

    #[test]
    fn tag_mismatch_rejected() {
        let a = y(&[1]);
        let b = GroupRingElt::monomial(Weight::new(&[1]), Lattice::X);
        assert!(matches!(a.checked_add(&b), Err(Error::TagMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::TagMismatch { .. })));
    }

    #[test]
    fn act_examples() {
        let g = group("A1");
        let f = y(&[1]);
        assert_eq!(gr_act(g.identity(), &f), f);
        assert_eq!(gr_act(g.simple(1), &f), y(&[-1]));
    }

    #[test]
    fn orbit_sums() {
        let a1 = group("A1");
        assert_eq!(
            gr_orbit_sum(&a1, &Weight::zero(1)).unwrap(),
            GroupRingElt::one(1, Lattice::Y)
        );
        assert_eq!(
            gr_orbit_sum(&a1, &Weight::new(&[1])).unwrap(),
            y(&[1]).checked_add(&y(&[-1])).unwrap()
        );
        let a2 = group("A2");
        let o = gr_orbit_sum(&a2, &Weight::new(&[1, 0])).unwrap();
        let keys: Vec<_> = o.terms().map(|(w, _)| *w).collect();
        assert_eq!(
            keys,
            vec![
                Weight::new(&[-1, 1]),
                Weight::new(&[0, -1]),
                Weight::new(&[1, 0])
            ]
        );
        assert!(gr_orbit_sum(&a2, &Weight::new(&[-1, 0])).is_err());
        let g2 = group("G2");
        for lam in Weight::box_iter(2, 0, 2) {
            let o = gr_orbit_sum(&g2, &lam).unwrap();
            for i in 1..=2 {
                assert_eq!(o.act(g2.simple(i)), o);
            }
        }
    }

    #[test]
    fn big_coefficients_serialize_as_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let f = GroupRingElt::from_terms(
            1,
            Lattice::Y,
            [
                (Weight::new(&[1]), big.clone()),
                (Weight::new(&[0]), BigInt::from(-3)),
            ],
        );
        let json = serde_json::to_string(&f.to_records()).unwrap();
        assert_eq!(
            json,
            format!(r#"[{{"mu":[0],"c":-3}},{{"mu":[1],"c":"{big}"}}]"#)
        );
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(GroupRingElt::from_records(1, Lattice::Y, &back).unwrap(), f);
    }

    fn arb_elt(rank: usize) -> impl Strategy<Value = GroupRingElt> {
        prop::collection::vec((prop::collection::vec(-3i64..=3, rank), -4i64..=4), 0..6).prop_map(
            move |ts| {
                GroupRingElt::from_terms(
                    rank,
                    Lattice::Y,
                    ts.into_iter().map(|(c, k)| (Weight::new(&c), k)),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_elt(2), g in arb_elt(2), h in arb_elt(2)) {
            let fg_h = f.checked_mul(&g).unwrap().checked_mul(&h).unwrap();
            let f_gh = f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap();
            prop_assert_eq!(fg_h, f_gh);
            let lhs = f.checked_mul(&g.checked_add(&h).unwrap()).unwrap();
            let rhs = f.checked_mul(&g).unwrap().checked_add(&f.checked_mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(f.checked_mul(&g).unwrap(), g.checked_mul(&f).unwrap());
            prop_assert!(f.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn weyl_action_is_ring_automorphism(f in arb_elt(2), g in arb_elt(2), a in 0usize..8, b in 0usize..8) {
            let grp = group("B2");
            let u = grp.element(a);
            let v = grp.element(b);
            let fg = f.checked_mul(&g).unwrap();
            prop_assert_eq!(fg.act(u), f.act(u).checked_mul(&g.act(u)).unwrap());
            prop_assert_eq!(f.act(v).act(u), f.act(grp.mul(u, v)));
        }
    }
}
