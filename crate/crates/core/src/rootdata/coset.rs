//! Parabolic cosets `wW_J`, their induced Bruhat order and maximal lifts.

use std::fmt;

use super::cartan::SimpleSet;
use super::weyl::{WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// A left coset `wW_J`, represented by its minimal-length element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParabolicCoset {
    min_rep: WeylElement,
    gens: SimpleSet,
}

impl ParabolicCoset {
    pub fn min_rep(&self) -> &WeylElement {
        &self.min_rep
    }

    pub fn gens(&self) -> SimpleSet {
        self.gens
    }
}

impl fmt::Debug for ParabolicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}W_{:?}",
            self.min_rep,
            self.gens.iter().collect::<Vec<_>>()
        )
    }
}

impl WeylGroup {
    /// The coset `wW_J`. Right `J`-descents are stripped until none remain.
    pub fn coset_of(&self, w: &WeylElement, j: SimpleSet) -> ParabolicCoset {
        let mut cur = w;
        while let Some(i) = j.iter().find(|&i| self.has_right_descent(cur, i)) {
            cur = self.mul_simple_right(cur, i);
        }
        ParabolicCoset {
            min_rep: cur.clone(),
            gens: j,
        }
    }

    /// Every element of the coset, in enumeration order.
    pub fn coset_elements<'a>(
        &'a self,
        c: &'a ParabolicCoset,
    ) -> impl Iterator<Item = &'a WeylElement> + 'a {
        let mut out: Vec<&WeylElement> = self
            .parabolic_subgroup(c.gens)
            .map(|z| self.mul(&c.min_rep, z))
            .collect();
        out.sort_by_key(|e| e.index());
        out.into_iter()
    }

    /// Bruhat order on `W/W_J`, induced from the minimal representatives.
    pub fn coset_leq(&self, a: &ParabolicCoset, b: &ParabolicCoset) -> Result<bool> {
        if a.gens != b.gens {
            return Err(Error::ParabolicMismatch);
        }
        Ok(self.bruhat_leq(&a.min_rep, &b.min_rep))
    }

    pub fn coset_lt(&self, a: &ParabolicCoset, b: &ParabolicCoset) -> Result<bool> {
        Ok(a != b && self.coset_leq(a, b)?)
    }

    /// Maximal lift of a strictly decreasing coset chain `τ_1 > ⋯ > τ_r`
    /// with respect to `w`: representatives `w ≥ t_1 > ⋯ > t_r`, each `t_k`
    /// the Bruhat-largest element of `τ_k` below the previous one.
    pub fn maximal_lift(
        &self,
        w: &WeylElement,
        chain: &[ParabolicCoset],
    ) -> Result<Vec<WeylElement>> {
        let Some(first) = chain.first() else {
            return Ok(Vec::new());
        };
        let top = self.coset_of(w, first.gens);
        if !self.coset_leq(first, &top)? {
            return Err(Error::InvalidChain(format!(
                "initial coset {first:?} is not below {top:?}"
            )));
        }
        for pair in chain.windows(2) {
            if !self.coset_lt(&pair[1], &pair[0])? {
                return Err(Error::InvalidChain(format!(
                    "{:?} is not strictly below {:?}",
                    pair[1], pair[0]
                )));
            }
        }

        let mut bound = w;
        let mut lift = Vec::with_capacity(chain.len());
        for (k, tau) in chain.iter().enumerate() {
            let strict = k > 0;
            let candidates: Vec<&WeylElement> = self
                .coset_elements(tau)
                .filter(|t| {
                    if strict {
                        self.bruhat_lt(t, bound)
                    } else {
                        self.bruhat_leq(t, bound)
                    }
                })
                .collect();
            let best = candidates
                .iter()
                .copied()
                .find(|m| candidates.iter().all(|t| self.bruhat_leq(t, m)))
                .ok_or_else(|| {
                    Error::NoUniqueLift(format!(
                        "coset {tau:?} below {bound}: candidates {candidates:?}"
                    ))
                })?;
            lift.push(best.clone());
            bound = best;
        }
        Ok(lift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
    }

    #[test]
    fn coset_of_examples() {
        let g = group("A2");
        let j = SimpleSet::from_indices([2]);
        let c = g.coset_of(g.from_word(&[1, 2]).unwrap(), j);
        assert_eq!(c.min_rep().word(), &[1]);
        assert!(g.coset_of(g.identity(), j).min_rep().is_identity());
        assert!(g
            .coset_of(g.from_word(&[2]).unwrap(), j)
            .min_rep()
            .is_identity());
        for w in g.elements() {
            let c = g.coset_of(w, j);
            for i in j.iter() {
                assert!(!g.has_right_descent(c.min_rep(), i));
            }
            assert_eq!(g.coset_elements(&c).count(), 2);
        }
    }

    #[test]
    fn coset_order_examples() {
        let g = group("A2");
        let j = SimpleSet::from_indices([2]);
        let one = g.coset_of(g.identity(), j);
        let s1 = g.coset_of(g.from_word(&[1]).unwrap(), j);
        let s2s1 = g.coset_of(g.from_word(&[2, 1]).unwrap(), j);
        for w in g.elements() {
            assert!(g.coset_leq(&one, &g.coset_of(w, j)).unwrap());
        }
        assert!(g.coset_leq(&s1, &s2s1).unwrap());
        assert!(!g.coset_leq(&s2s1, &s1).unwrap());

        let jj = SimpleSet::empty();
        let a = g.coset_of(g.from_word(&[1]).unwrap(), jj);
        let b = g.coset_of(g.from_word(&[2]).unwrap(), jj);
        assert!(!g.coset_leq(&a, &b).unwrap());
        assert!(!g.coset_leq(&b, &a).unwrap());
        assert_eq!(g.coset_leq(&a, &s1), Err(Error::ParabolicMismatch));
    }

    #[test]
    fn maximal_lift_examples() {
        let g = group("A2");
        let j = SimpleSet::from_indices([2]);
        let s1s2 = g.from_word(&[1, 2]).unwrap();
        let s1 = g.coset_of(g.from_word(&[1]).unwrap(), j);
        let one = g.coset_of(g.identity(), j);

        let lift = g.maximal_lift(s1s2, std::slice::from_ref(&s1)).unwrap();
        assert_eq!(lift, vec![s1s2.clone()]);

        let lift = g.maximal_lift(s1s2, &[s1.clone(), one.clone()]).unwrap();
        assert_eq!(lift[0].word(), &[1, 2]);
        assert_eq!(lift[1].word(), &[2]);

        for w in g.elements() {
            let e = g.coset_of(g.identity(), SimpleSet::empty());
            let lift = g.maximal_lift(w, &[e]).unwrap();
            assert!(lift[0].is_identity());
        }

        // chain not below w
        let s2s1 = g.coset_of(g.from_word(&[2, 1]).unwrap(), j);
        assert!(matches!(
            g.maximal_lift(s1s2, &[s2s1]),
            Err(Error::InvalidChain(_))
        ));
        // chain not decreasing
        assert!(matches!(
            g.maximal_lift(s1s2, &[one, s1]),
            Err(Error::InvalidChain(_))
        ));
    }

    /// Exhaustive re-check of the lift conditions on all chains of length at
    /// most three, for every parabolic subgroup.
    #[test]
    fn maximal_lift_conditions_exhaustive() {
        for name in ["A2", "B2", "A3"] {
            let g = group(name);
            for mask in 0..(1usize << g.rank()) {
                let j =
                    SimpleSet::from_indices((1..=g.rank()).filter(|i| mask & (1 << (i - 1)) != 0));
                let mut cosets: Vec<ParabolicCoset> =
                    g.elements().iter().map(|w| g.coset_of(w, j)).collect();
                cosets.dedup_by(|a, b| a == b);
                cosets.sort_by(|a, b| a.min_rep().cmp(b.min_rep()));
                cosets.dedup();
                let mut chains: Vec<Vec<ParabolicCoset>> =
                    cosets.iter().map(|c| vec![c.clone()]).collect();
                let mut frontier = chains.clone();
                for _ in 0..2 {
                    let mut next = Vec::new();
                    for ch in &frontier {
                        for c in &cosets {
                            if g.coset_lt(c, ch.last().unwrap()).unwrap() {
                                let mut ext = ch.clone();
                                ext.push(c.clone());
                                next.push(ext);
                            }
                        }
                    }
                    chains.extend(next.iter().cloned());
                    frontier = next;
                }
                for w in g.elements() {
                    let top = g.coset_of(w, j);
                    for ch in &chains {
                        if !g.coset_leq(&ch[0], &top).unwrap() {
                            continue;
                        }
                        let lift = g.maximal_lift(w, ch).unwrap();
                        let mut bound = w.clone();
                        for (k, (t, tau)) in lift.iter().zip(ch).enumerate() {
                            assert_eq!(&g.coset_of(t, j), tau);
                            if k == 0 {
                                assert!(g.bruhat_leq(t, &bound));
                            } else {
                                assert!(g.bruhat_lt(t, &bound));
                            }
                            for other in g.coset_elements(tau) {
                                let admissible = if k == 0 {
                                    g.bruhat_leq(other, &bound)
                                } else {
                                    g.bruhat_lt(other, &bound)
                                };
                                if admissible {
                                    assert!(g.bruhat_leq(other, t));
                                }
                            }
                            bound = t.clone();
                        }
                    }
                }
            }
        }
    }
}
