//! The Pieri–Chevalley expansion and the operator identity behind it.
//!
//! For dominant `λ` and `w ∈ W`,
//!
//! ```text
//! Y^λ T_{w⁻¹} = Σ_{η ∈ T^λ_{≤w}} T_{v(η,w)⁻¹} Y^{η(1)}
//! ```
//!
//! as operators on `Z[P]`, and applied to the class of the base section it
//! becomes the expansion
//!
//! ```text
//! y^λ [O_w] = Σ_{η ∈ T^λ_{≤w}} [O_{v(η,w)}] x^{η(1)}.
//! ```
//!
//! Operator products are composed right to left: `(Y^λ T_{w⁻¹})(f)` means
//! `Y^λ` applied to `T_{w⁻¹}(f)`.

mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::demazure::{demazure_element, y_mul};
use crate::error::{Error, Result};
use crate::grouping::{GroupRingElt, Lattice, TermRecord};
use crate::paths::{
    final_direction, generate_paths, restrict_le, root_op_e, root_op_f, LSPath, PathSet,
};
use crate::rootdata::{Weight, WeylElement, WeylGroup};

pub use verify::{
    verify_braid, verify_characters, verify_commutation, verify_crystal, verify_defining_relation,
    verify_dimensions, verify_expansions, verify_idempotence, verify_string_lemma, verify_strings,
    verify_theorem, Counterexample, GridConfig, VerificationReport,
};

/// `y^λ [O_w]` written in the Schubert basis. Keys stand for the classes
/// `[O_v]`; coefficients live in the `x` lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    root_system: String,
    lambda: Weight,
    w: WeylElement,
    terms: BTreeMap<WeylElement, GroupRingElt>,
}

impl Expansion {
    pub fn root_system(&self) -> &str {
        &self.root_system
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    /// Terms ordered by length of `v`, then by canonical word.
    pub fn terms(&self) -> &BTreeMap<WeylElement, GroupRingElt> {
        &self.terms
    }

    pub fn coefficient(&self, v: &WeylElement) -> Option<&GroupRingElt> {
        self.terms.get(v)
    }

    /// Number of paths contributing, i.e. the sum of all coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().map(|c| c.augmentation()).sum()
    }

    pub fn to_record(&self) -> ExpansionRecord {
        ExpansionRecord {
            root_system: self.root_system.clone(),
            lambda: self.lambda.coords().to_vec(),
            w: self.w.word().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(v, c)| ExpansionTerm {
                    v: v.word().to_vec(),
                    coeff: c.to_records(),
                })
                .collect(),
        }
    }

    pub fn from_record(group: &WeylGroup, rec: &ExpansionRecord) -> Result<Self> {
        if rec.root_system != group.root_system().name() {
            return Err(Error::Parse(format!(
                "expansion is for {}, group is {}",
                rec.root_system,
                group.root_system().name()
            )));
        }
        let rank = group.rank();
        if rec.lambda.len() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: rec.lambda.len(),
            });
        }
        let mut terms = BTreeMap::new();
        for t in &rec.terms {
            let v = group.from_reduced_word(&t.v)?.clone();
            terms.insert(v, GroupRingElt::from_records(rank, Lattice::X, &t.coeff)?);
        }
        Ok(Expansion {
            root_system: rec.root_system.clone(),
            lambda: Weight::new(&rec.lambda),
            w: group.from_reduced_word(&rec.w)?.clone(),
            terms,
        })
    }
}

/// JSON form of an [`Expansion`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub root_system: String,
    pub lambda: Vec<i64>,
    pub w: Vec<usize>,
    pub terms: Vec<ExpansionTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub v: Vec<usize>,
    pub coeff: Vec<TermRecord>,
}

/// Paths of `T^λ_{≤w}` paired with their final directions `v(η, w)`.
pub fn lifted_paths(
    group: &WeylGroup,
    lambda: &Weight,
    w: &WeylElement,
) -> Result<Vec<(LSPath, WeylElement)>> {
    let all = generate_paths(group, lambda)?;
    lifted_paths_in(group, &all, w)
}

pub(crate) fn lifted_paths_in(
    group: &WeylGroup,
    all: &PathSet,
    w: &WeylElement,
) -> Result<Vec<(LSPath, WeylElement)>> {
    let below = restrict_le(group, all, w)?;
    below
        .iter()
        .map(|p| Ok((p.clone(), final_direction(group, p, w)?)))
        .collect()
}

/// `y^λ [O_w] = Σ_v [O_v] · (Σ_{η : v(η,w) = v} x^{η(1)})`.
pub fn expand(group: &WeylGroup, lambda: &Weight, w: &WeylElement) -> Result<Expansion> {
    let lifted = lifted_paths(group, lambda, w)?;
    Ok(expansion_from_lifts(group, lambda, w, &lifted))
}

pub(crate) fn expansion_from_lifts(
    group: &WeylGroup,
    lambda: &Weight,
    w: &WeylElement,
    lifted: &[(LSPath, WeylElement)],
) -> Expansion {
    let rank = group.rank();
    let mut terms: BTreeMap<WeylElement, GroupRingElt> = BTreeMap::new();
    for (eta, v) in lifted {
        terms
            .entry(v.clone())
            .or_insert_with(|| GroupRingElt::zero(rank, Lattice::X))
            .add_term(eta.endpoint(), BigInt::from(1));
    }
    Expansion {
        root_system: group.root_system().name(),
        lambda: *lambda,
        w: w.clone(),
        terms,
    }
}

/// Absolute case: every `x^μ ↦ 1`, leaving the number of contributing paths
/// per Schubert class.
pub fn specialize_absolute(ex: &Expansion) -> BTreeMap<WeylElement, BigInt> {
    ex.terms
        .iter()
        .map(|(v, c)| (v.clone(), c.augmentation()))
        .collect()
}

/// `(Y^λ T_{w⁻¹})(f) = y^λ · T_{w⁻¹}(f)`.
pub fn theorem_lhs(
    group: &WeylGroup,
    lambda: &Weight,
    w: &WeylElement,
    f: &GroupRingElt,
) -> Result<GroupRingElt> {
    let rs = group.root_system();
    y_mul(lambda, &demazure_element(rs, group.inverse(w), f)?)
}

/// `Σ_{η ∈ T^λ_{≤w}} T_{v(η,w)⁻¹}(y^{η(1)} f)`.
pub fn theorem_rhs(
    group: &WeylGroup,
    lambda: &Weight,
    w: &WeylElement,
    f: &GroupRingElt,
) -> Result<GroupRingElt> {
    let lifted = lifted_paths(group, lambda, w)?;
    rhs_from_lifts(group, &lifted, f)
}

pub(crate) fn rhs_from_lifts(
    group: &WeylGroup,
    lifted: &[(LSPath, WeylElement)],
    f: &GroupRingElt,
) -> Result<GroupRingElt> {
    let rs = group.root_system();
    let mut acc = GroupRingElt::zero(f.rank(), Lattice::Y);
    for (eta, v) in lifted {
        let shifted = y_mul(&eta.endpoint(), f)?;
        acc.add_assign_unchecked(&demazure_element(rs, group.inverse(v), &shifted)?);
    }
    Ok(acc)
}

/// Splits `ps` into `α_i`-strings. Each string starts at a head (a path
/// whose `e_i` image is null or outside `ps`) and follows `f_i` while the
/// result stays in `ps`. Strings are ordered by the position of their head.
pub fn string_decompose(group: &WeylGroup, ps: &PathSet, i: usize) -> Result<Vec<Vec<LSPath>>> {
    let mut strings = Vec::new();
    for p in ps {
        let is_head = match root_op_e(group, i, p)? {
            None => true,
            Some(q) => !ps.contains(&q),
        };
        if !is_head {
            continue;
        }
        let mut string = vec![p.clone()];
        let mut cur = p.clone();
        while let Some(next) = root_op_f(group, i, &cur)? {
            if !ps.contains(&next) {
                break;
            }
            string.push(next.clone());
            cur = next;
        }
        strings.push(string);
    }
    Ok(strings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
    }

    fn x(c: &[i64]) -> GroupRingElt {
        GroupRingElt::monomial(Weight::new(c), Lattice::X)
    }

    fn y(c: &[i64]) -> GroupRingElt {
        GroupRingElt::monomial(Weight::new(c), Lattice::Y)
    }

    #[test]
    fn expansion_at_identity() {
        for name in ["A1", "A2", "B2", "G2"] {
            let g = group(name);
            for lam in Weight::box_iter(2.min(g.rank()), 0, 2) {
                if lam.rank() != g.rank() {
                    continue;
                }
                let ex = expand(&g, &lam, g.identity()).unwrap();
                assert_eq!(ex.terms().len(), 1);
                assert_eq!(ex.coefficient(g.identity()), Some(&x(lam.coords())));
            }
        }
    }

    #[test]
    fn worked_expansions() {
        let a1 = group("A1");
        let ex = expand(&a1, &Weight::new(&[1]), a1.simple(1)).unwrap();
        assert_eq!(ex.terms().len(), 2);
        assert_eq!(ex.coefficient(a1.simple(1)), Some(&x(&[-1])));
        assert_eq!(ex.coefficient(a1.identity()), Some(&x(&[1])));

        let a2 = group("A2");
        let s1s2 = a2.from_word(&[1, 2]).unwrap();
        let ex = expand(&a2, &Weight::new(&[1, 0]), s1s2).unwrap();
        assert_eq!(ex.terms().len(), 2);
        assert_eq!(ex.coefficient(s1s2), Some(&x(&[-1, 1])));
        assert_eq!(ex.coefficient(a2.simple(2)), Some(&x(&[1, 0])));
        let counts = specialize_absolute(&ex);
        assert_eq!(
            counts.values().cloned().collect::<Vec<_>>(),
            vec![BigInt::from(1); 2]
        );

        let json = serde_json::to_string(&ex.to_record()).unwrap();
        assert_eq!(
            json,
            r#"{"root_system":"A2","lambda":[1,0],"w":[1,2],"terms":[{"v":[2],"coeff":[{"mu":[1,0],"c":1}]},{"v":[1,2],"coeff":[{"mu":[-1,1],"c":1}]}]}"#
        );
        let back: ExpansionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Expansion::from_record(&a2, &back).unwrap(), ex);
    }

    #[test]
    fn zero_weight_expansion() {
        let a2 = group("A2");
        let ex = expand(&a2, &Weight::zero(2), a2.simple(1)).unwrap();
        assert_eq!(ex.terms().len(), 1);
        // trivial path, maximal lift of the identity coset below s1 is s1
        assert_eq!(ex.coefficient(a2.simple(1)), Some(&x(&[0, 0])));
    }

    #[test]
    fn specialization_totals_dimension_at_w0() {
        let b2 = group("B2");
        for lam in Weight::box_iter(2, 0, 2) {
            let ex = expand(&b2, &lam, b2.longest()).unwrap();
            let total: BigInt = specialize_absolute(&ex).values().sum();
            assert_eq!(
                total,
                BigInt::from(b2.root_system().weyl_dimension(&lam).unwrap())
            );
        }
    }

    #[test]
    fn theorem_sides_a1() {
        let g = group("A1");
        let lam = Weight::new(&[1]);
        let s1 = g.simple(1);
        let one = y(&[0]);
        assert_eq!(theorem_lhs(&g, &lam, g.identity(), &one).unwrap(), y(&[1]));
        assert_eq!(theorem_lhs(&g, &lam, s1, &one).unwrap(), y(&[1]));
        let expect = y(&[2]).checked_add(&y(&[0])).unwrap();
        assert_eq!(theorem_lhs(&g, &lam, s1, &y(&[1])).unwrap(), expect);
        assert_eq!(theorem_rhs(&g, &lam, s1, &one).unwrap(), y(&[1]));
        assert_eq!(theorem_rhs(&g, &lam, s1, &y(&[1])).unwrap(), expect);
        for mu in Weight::box_iter(1, -3, 3) {
            let f = y(mu.coords());
            assert_eq!(
                theorem_rhs(&g, &lam, g.identity(), &f).unwrap(),
                f.shift(&lam)
            );
        }
    }

    #[test]
    fn strings_partition_path_sets() {
        let a1 = group("A1");
        let ps = generate_paths(&a1, &Weight::new(&[1])).unwrap();
        let strings = string_decompose(&a1, &ps, 1).unwrap();
        assert_eq!(strings.len(), 1);
        assert_eq!(strings[0].len(), 2);

        let a2 = group("A2");
        let ps = generate_paths(&a2, &Weight::new(&[1, 0])).unwrap();
        let strings = string_decompose(&a2, &ps, 1).unwrap();
        let lens: Vec<usize> = strings.iter().map(|s| s.len()).collect();
        assert_eq!(lens, vec![2, 1]);
        assert_eq!(strings[1][0].endpoint(), Weight::new(&[0, -1]));

        for name in ["B2", "G2"] {
            let g = group(name);
            let ps = generate_paths(&g, &Weight::new(&[1, 1])).unwrap();
            for i in 1..=2 {
                let strings = string_decompose(&g, &ps, i).unwrap();
                let total: usize = strings.iter().map(|s| s.len()).sum();
                assert_eq!(total, ps.len());
                let mut seen = std::collections::HashSet::new();
                for s in &strings {
                    assert!(root_op_e(&g, i, &s[0]).unwrap().is_none());
                    assert!(root_op_f(&g, i, s.last().unwrap()).unwrap().is_none());
                    for p in s {
                        assert!(seen.insert(p.clone()));
                    }
                }
            }
        }
    }
}
