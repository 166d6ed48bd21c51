//! Littelmann paths for a dominant weight `λ`.
//!
//! A path is stored as its segment directions `τ_1λ, …, τ_rλ` (weights in
//! the orbit `Wλ`) and rational breakpoints `0 = a_0 < ⋯ < a_r = 1`; on
//! `[a_{j-1}, a_j]` it moves with velocity `τ_jλ`. The coset `τ_j ∈ W/W_λ` is
//! recovered from the direction through the orbit-coset bijection.

mod root_ops;
mod set;

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{ParabolicCoset, Weight, WeylGroup};

pub use root_ops::{root_op_e, root_op_f};
pub use set::{
    final_direction, generate_paths, generate_paths_capped, restrict_le, PathSet, DEFAULT_PATH_CAP,
};

pub type Rational = Ratio<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LSPath {
    lambda: Weight,
    dirs: Vec<Weight>,
    breaks: Vec<Rational>,
    end: Weight,
}

impl LSPath {
    /// Validates the encoding: directions in the orbit of `λ` with strictly
    /// decreasing cosets, breakpoints strictly increasing from 0 to 1, and an
    /// integral endpoint.
    pub fn new(
        group: &WeylGroup,
        lambda: Weight,
        dirs: Vec<Weight>,
        breaks: Vec<Rational>,
    ) -> Result<Self> {
        let end = Self::check(group, &lambda, &dirs, &breaks)?;
        Ok(LSPath {
            lambda,
            dirs,
            breaks,
            end,
        })
    }

    fn check(
        group: &WeylGroup,
        lambda: &Weight,
        dirs: &[Weight],
        breaks: &[Rational],
    ) -> Result<Weight> {
        let bad = |msg: String| Err(Error::PathInvariant(msg));
        lambda.expect_rank(group.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if dirs.is_empty() || breaks.len() != dirs.len() + 1 {
            return bad(format!(
                "{} directions need {} breakpoints, got {}",
                dirs.len(),
                dirs.len() + 1,
                breaks.len()
            ));
        }
        if !breaks[0].is_zero() || !breaks[breaks.len() - 1].is_one() {
            return bad("breakpoints must start at 0 and end at 1".into());
        }
        if breaks.windows(2).any(|p| p[0] >= p[1]) {
            return bad(format!("breakpoints not increasing: {breaks:?}"));
        }
        let j = group.root_system().stabilizer_set(lambda)?;
        let mut chain: Vec<ParabolicCoset> = Vec::with_capacity(dirs.len());
        for d in dirs {
            d.expect_rank(group.rank())?;
            let (w, dom) = group.to_dominant(d);
            if dom != *lambda {
                return bad(format!("direction {d} is not in the orbit of {lambda}"));
            }
            chain.push(group.coset_of(w, j));
        }
        for p in chain.windows(2) {
            if !group.coset_lt(&p[1], &p[0])? {
                return bad(format!(
                    "coset chain not strictly decreasing: {:?} then {:?}",
                    p[0], p[1]
                ));
            }
        }
        let end = sum_segments(dirs, breaks, group.rank());
        if end.iter().any(|c| !c.is_integer()) {
            return bad(format!("endpoint {end:?} is not integral"));
        }
        Ok(Weight::new(
            &end.iter().map(|c| c.to_integer()).collect::<Vec<_>>(),
        ))
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Segment directions `τ_1λ, …, τ_rλ`.
    pub fn dirs(&self) -> &[Weight] {
        &self.dirs
    }

    /// Breakpoints `0 = a_0 < ⋯ < a_r = 1`.
    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    /// `π(1)`.
    pub fn endpoint(&self) -> Weight {
        self.end
    }

    /// `π(t)` for `t ∈ [0, 1]`, exactly.
    pub fn evaluate(&self, t: Rational) -> Result<Vec<Rational>> {
        if t < Rational::zero() || t > Rational::one() {
            return Err(Error::TimeOutOfRange(t.to_string()));
        }
        let n = self.lambda.rank();
        let mut out = vec![Rational::zero(); n];
        for (k, d) in self.dirs.iter().enumerate() {
            let a = self.breaks[k];
            if t <= a {
                break;
            }
            let len = t.min(self.breaks[k + 1]) - a;
            for (slot, c) in out.iter_mut().zip(d.coords()) {
                *slot += len * Rational::from_integer(*c);
            }
        }
        Ok(out)
    }

    /// Values of `⟨π(t), α_i^∨⟩` at the breakpoints.
    pub(crate) fn heights(&self, i: usize) -> Vec<Rational> {
        let mut h = Vec::with_capacity(self.breaks.len());
        h.push(Rational::zero());
        for (k, d) in self.dirs.iter().enumerate() {
            let len = self.breaks[k + 1] - self.breaks[k];
            let prev = h[k];
            h.push(prev + len * Rational::from_integer(d.coord(i)));
        }
        h
    }

    /// The cosets `τ_1 > ⋯ > τ_r` in `W/W_λ`.
    pub fn coset_chain(&self, group: &WeylGroup) -> Vec<ParabolicCoset> {
        let j = group
            .root_system()
            .stabilizer_set(&self.lambda)
            .expect("path shape is dominant");
        self.dirs
            .iter()
            .map(|d| group.coset_of(group.to_dominant(d).0, j))
            .collect()
    }

    /// `ι(π) = τ_1`.
    pub fn initial_direction(&self, group: &WeylGroup) -> ParabolicCoset {
        self.coset_chain(group).swap_remove(0)
    }

    pub fn to_record(&self) -> PathRecord {
        PathRecord {
            dirs: self.dirs.iter().map(|d| d.coords().to_vec()).collect(),
            breaks: self.breaks.iter().map(format_rational).collect(),
            endpoint: self.end.coords().to_vec(),
        }
    }

    pub fn from_record(group: &WeylGroup, lambda: Weight, rec: &PathRecord) -> Result<Self> {
        let dirs = rec.dirs.iter().map(|d| Weight::new(d)).collect();
        let breaks = rec
            .breaks
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let p = Self::new(group, lambda, dirs, breaks)?;
        if p.end.coords() != &rec.endpoint[..] {
            return Err(Error::PathInvariant(format!(
                "recorded endpoint {:?} differs from computed {}",
                rec.endpoint, p.end
            )));
        }
        Ok(p)
    }
}

fn sum_segments(dirs: &[Weight], breaks: &[Rational], rank: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); rank];
    for (k, d) in dirs.iter().enumerate() {
        let len = breaks[k + 1] - breaks[k];
        for (slot, c) in out.iter_mut().zip(d.coords()) {
            *slot += len * Rational::from_integer(*c);
        }
    }
    out
}

/// `π_λ(t) = tλ`.
pub fn straight_path(group: &WeylGroup, lambda: &Weight) -> Result<LSPath> {
    LSPath::new(
        group,
        *lambda,
        vec![*lambda],
        vec![Rational::zero(), Rational::one()],
    )
}

/// Always `p/q`, including integers (`0/1`, `1/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// JSON form `{dirs, breaks, endpoint}` with breakpoints as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub dirs: Vec<Vec<i64>>,
    pub breaks: Vec<String>,
    pub endpoint: Vec<i64>,
}

impl fmt::Debug for LSPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LSPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, d) in self.dirs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}@{}..{}", self.breaks[k], self.breaks[k + 1])?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn straight_path_basics() {
        let g = group("A2");
        let lam = Weight::new(&[2, 1]);
        let p = straight_path(&g, &lam).unwrap();
        assert_eq!(p.endpoint(), lam);
        assert!(p.initial_direction(&g).min_rep().is_identity());
        assert_eq!(p.evaluate(r(1, 2)).unwrap(), vec![r(1, 1), r(1, 2)]);
        assert_eq!(p.evaluate(r(0, 1)).unwrap(), vec![r(0, 1), r(0, 1)]);
        assert!(matches!(p.evaluate(r(3, 2)), Err(Error::TimeOutOfRange(_))));
        assert!(matches!(
            p.evaluate(r(-1, 2)),
            Err(Error::TimeOutOfRange(_))
        ));
        assert!(straight_path(&g, &Weight::new(&[1, -1])).is_err());
    }

    #[test]
    fn evaluate_two_segment_path() {
        let g = group("A2");
        let rho = Weight::new(&[1, 1]);
        let p = LSPath::new(
            &g,
            rho,
            vec![Weight::new(&[1, -2]), Weight::new(&[-1, 2])],
            vec![r(0, 1), r(1, 2), r(1, 1)],
        )
        .unwrap();
        // ρ − α_1 − α_2 = 0 in type A2
        assert_eq!(p.evaluate(r(1, 1)).unwrap(), vec![r(0, 1), r(0, 1)]);
        assert_eq!(p.evaluate(r(1, 4)).unwrap(), vec![r(1, 4), r(-1, 2)]);
        assert_eq!(p.evaluate(r(3, 4)).unwrap(), vec![r(1, 4), r(-1, 2)]);
        assert_eq!(p.endpoint(), Weight::zero(2));
        assert_eq!(p.initial_direction(&g).min_rep().word(), &[2, 1]);
    }

    #[test]
    fn invalid_encodings_rejected() {
        let g = group("A2");
        let rho = Weight::new(&[1, 1]);
        // increasing chain
        assert!(LSPath::new(
            &g,
            rho,
            vec![Weight::new(&[-1, 2]), Weight::new(&[-1, -1])],
            vec![r(0, 1), r(1, 2), r(1, 1)],
        )
        .is_err());
        // not in the orbit
        assert!(LSPath::new(&g, rho, vec![Weight::new(&[2, 0])], vec![r(0, 1), r(1, 1)]).is_err());
        // non-integral endpoint
        assert!(LSPath::new(
            &g,
            rho,
            vec![Weight::new(&[-1, 2]), Weight::new(&[1, 1])],
            vec![r(0, 1), r(1, 3), r(1, 1)],
        )
        .is_err());
        // breakpoints
        assert!(LSPath::new(&g, rho, vec![rho], vec![r(0, 1), r(1, 2)]).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&r(1, 2)), "1/2");
        assert_eq!(format_rational(&r(1, 1)), "1/1");
        assert_eq!(format_rational(&r(0, 1)), "0/1");
        assert_eq!(parse_rational("2/4").unwrap(), r(1, 2));
        assert_eq!(parse_rational("1").unwrap(), r(1, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }
}
