//! Exhaustive checks of the operator identities over finite grids.
//!
//! Every suite walks its grid in a fixed order (dominant `λ` and test weights
//! `μ` lexicographically, `w` by length then word, `i` increasing), so the
//! reported counterexample is the first one in that order regardless of how
//! many worker threads ran the cases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::{expansion_from_lifts, lifted_paths_in, rhs_from_lifts, string_decompose, theorem_lhs};
use crate::demazure::{
    apply_word, chevalley_divided_term, demazure_apply, demazure_element, y_mul,
};
use crate::error::Result;
use crate::grouping::{GroupRingElt, Lattice, TermRecord};
use crate::paths::{generate_paths, restrict_le, root_op_e, root_op_f, PathSet};
use crate::rootdata::{Weight, WeylElement, WeylGroup};

/// Grid bounds: dominant `λ` with coordinates in `0..=lambda_box`, test
/// monomials `y^μ` with coordinates in `-mu_box..=mu_box`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridConfig {
    pub lambda_box: i64,
    pub mu_box: i64,
    pub jobs: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            lambda_box: 2,
            mu_box: 2,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Vec<TermRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<TermRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Counterexample {
    fn sides(lhs: &GroupRingElt, rhs: &GroupRingElt) -> Self {
        Counterexample {
            lhs: Some(lhs.to_records()),
            rhs: Some(rhs.to_records()),
            ..Default::default()
        }
    }

    fn noted(note: String) -> Self {
        Counterexample {
            note: Some(note),
            ..Default::default()
        }
    }

    fn at_lambda(mut self, lambda: &Weight) -> Self {
        self.lambda = Some(lambda.coords().to_vec());
        self
    }

    fn at_w(mut self, w: &WeylElement) -> Self {
        self.w = Some(w.word().to_vec());
        self
    }

    fn at_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    fn at_mu(mut self, mu: &Weight) -> Self {
        self.mu = Some(mu.coords().to_vec());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub root_system: String,
    pub parameters: Value,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    fn new(
        identity: &str,
        group: &WeylGroup,
        parameters: Value,
        outcome: (u64, Option<Counterexample>),
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            root_system: group.root_system().name(),
            parameters,
            passed: outcome.1.is_none(),
            checked: outcome.0,
            counterexample: outcome.1,
        }
    }

    /// One-line summary, e.g. `theorem A2 PASS checked=1234`.
    pub fn summary(&self) -> String {
        format!(
            "{} {} {} checked={}",
            self.identity,
            self.root_system,
            if self.passed { "PASS" } else { "FAIL" },
            self.checked
        )
    }
}

type Outcome = (u64, Option<Counterexample>);

fn run_cases<T, F>(cases: &[T], jobs: usize, f: F) -> Result<Outcome>
where
    T: Sync,
    F: Fn(&T) -> Result<Outcome> + Sync,
{
    let results: Vec<Result<Outcome>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| cases.par_iter().map(&f).collect())
    } else {
        cases.iter().map(&f).collect()
    };
    let mut checked = 0;
    let mut first = None;
    for r in results {
        let (c, ce) = r?;
        checked += c;
        if first.is_none() {
            first = ce;
        }
    }
    Ok((checked, first))
}

fn dominant_box(group: &WeylGroup, hi: i64) -> Vec<Weight> {
    Weight::box_iter(group.rank(), 0, hi).collect()
}

fn mu_box(group: &WeylGroup, b: i64) -> Vec<Weight> {
    Weight::box_iter(group.rank(), -b, b).collect()
}

fn ymono(mu: &Weight) -> GroupRingElt {
    GroupRingElt::monomial(*mu, Lattice::Y)
}

fn grid_params(cfg: &GridConfig) -> Value {
    json!({ "lambda_box": cfg.lambda_box, "mu_box": cfg.mu_box })
}

fn path_sets(
    group: &WeylGroup,
    lambdas: &[Weight],
    jobs: usize,
) -> Result<BTreeMap<Weight, PathSet>> {
    let build = |lam: &Weight| generate_paths(group, lam).map(|ps| (*lam, ps));
    let sets: Vec<Result<(Weight, PathSet)>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| lambdas.par_iter().map(build).collect())
    } else {
        lambdas.iter().map(build).collect()
    };
    sets.into_iter().collect()
}

/// `(Y^λ T_{w⁻¹})(y^μ) = Σ_η T_{v(η,w)⁻¹}(y^{η(1)+μ})` for all dominant `λ`,
/// all `w` and all `μ` in the grid.
pub fn verify_theorem(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let lambdas = dominant_box(group, cfg.lambda_box);
    let sets = path_sets(group, &lambdas, cfg.jobs)?;
    let mus = mu_box(group, cfg.mu_box);
    let cases: Vec<(Weight, &WeylElement)> = lambdas
        .iter()
        .flat_map(|l| group.elements().iter().map(move |w| (*l, w)))
        .collect();
    let outcome = run_cases(&cases, cfg.jobs, |(lam, w)| {
        let lifted = lifted_paths_in(group, &sets[lam], w)?;
        let mut checked = 0;
        for mu in &mus {
            let f = ymono(mu);
            let lhs = theorem_lhs(group, lam, w, &f)?;
            let rhs = rhs_from_lifts(group, &lifted, &f)?;
            checked += 1;
            if lhs != rhs {
                let ce = Counterexample::sides(&lhs, &rhs)
                    .at_lambda(lam)
                    .at_w(w)
                    .at_mu(mu);
                return Ok((checked, Some(ce)));
            }
        }
        Ok((checked, None))
    })?;
    Ok(VerificationReport::new(
        "theorem",
        group,
        grid_params(cfg),
        outcome,
    ))
}

/// `Y^λ T_i = T_i Y^{s_iλ} + (y^λ − y^{s_iλ})/(1 − y^{−α_i})` for every
/// weight `λ` (not only dominant) with coordinates in `±lambda_box`.
pub fn verify_commutation(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let lambdas: Vec<Weight> =
        Weight::box_iter(group.rank(), -cfg.lambda_box, cfg.lambda_box).collect();
    let mus = mu_box(group, cfg.mu_box);
    let outcome = run_cases(&lambdas, cfg.jobs, |lam| {
        let mut checked = 0;
        for i in 1..=group.rank() {
            let d = chevalley_divided_term(rs, lam, i);
            let s_lam = rs.reflect(lam, i);
            for mu in &mus {
                let f = ymono(mu);
                let lhs = y_mul(lam, &demazure_apply(rs, i, &f)?)?;
                let rhs =
                    demazure_apply(rs, i, &y_mul(&s_lam, &f)?)?.checked_add(&d.checked_mul(&f)?)?;
                checked += 1;
                if lhs != rhs {
                    let ce = Counterexample::sides(&lhs, &rhs)
                        .at_lambda(lam)
                        .at_i(i)
                        .at_mu(mu);
                    return Ok((checked, Some(ce)));
                }
            }
        }
        Ok((checked, None))
    })?;
    Ok(VerificationReport::new(
        "commutation",
        group,
        grid_params(cfg),
        outcome,
    ))
}

/// `T_i² = T_i` on every `y^μ` in the grid.
pub fn verify_idempotence(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let mus = mu_box(group, cfg.mu_box);
    let outcome = run_cases(&mus, cfg.jobs, |mu| {
        let f = ymono(mu);
        for i in 1..=group.rank() {
            let once = demazure_apply(rs, i, &f)?;
            let twice = demazure_apply(rs, i, &once)?;
            if once != twice {
                let ce = Counterexample::sides(&twice, &once).at_i(i).at_mu(mu);
                return Ok((i as u64, Some(ce)));
            }
        }
        Ok((group.rank() as u64, None))
    })?;
    Ok(VerificationReport::new(
        "idempotence",
        group,
        json!({ "mu_box": cfg.mu_box }),
        outcome,
    ))
}

/// `T_i T_j T_i ⋯ = T_j T_i T_j ⋯` with `m_ij` factors on each side.
pub fn verify_braid(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let n = group.rank();
    let mus = mu_box(group, cfg.mu_box);
    let words: Vec<(usize, usize, Vec<usize>, Vec<usize>)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let m = rs.coxeter_exponent(i, j);
            let left = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let right = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            (i, j, left, right)
        })
        .collect();
    let outcome = run_cases(&mus, cfg.jobs, |mu| {
        let f = ymono(mu);
        let mut checked = 0;
        for (i, j, left, right) in &words {
            let l = apply_word(rs, left, &f)?;
            let r = apply_word(rs, right, &f)?;
            checked += 1;
            if l != r {
                let mut ce = Counterexample::sides(&l, &r).at_i(*i).at_mu(mu);
                ce.note = Some(format!("braid relation for ({i},{j})"));
                return Ok((checked, Some(ce)));
            }
        }
        Ok((checked, None))
    })?;
    Ok(VerificationReport::new(
        "braid",
        group,
        json!({ "mu_box": cfg.mu_box }),
        outcome,
    ))
}

/// `(y^{α_i} − 1) T_i(y^μ) = y^{μ+α_i} − y^{s_iμ}` on every `μ` in the grid.
pub fn verify_defining_relation(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let mus = mu_box(group, cfg.mu_box);
    let outcome = run_cases(&mus, cfg.jobs, |mu| {
        let f = ymono(mu);
        for i in 1..=group.rank() {
            let alpha = rs.simple_root(i);
            let one = GroupRingElt::one(group.rank(), Lattice::Y);
            let factor = ymono(&alpha).checked_sub(&one)?;
            let lhs = factor.checked_mul(&demazure_apply(rs, i, &f)?)?;
            let rhs = f.shift(&alpha).checked_sub(&f.act(group.simple(i)))?;
            if lhs != rhs {
                let ce = Counterexample::sides(&lhs, &rhs).at_i(i).at_mu(mu);
                return Ok((i as u64, Some(ce)));
            }
        }
        Ok((group.rank() as u64, None))
    })?;
    Ok(VerificationReport::new(
        "defining",
        group,
        json!({ "mu_box": cfg.mu_box }),
        outcome,
    ))
}

/// `|T^λ|` equals the Weyl dimension for every dominant `λ` in the box.
pub fn verify_dimensions(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let lambdas = dominant_box(group, cfg.lambda_box);
    let outcome = run_cases(&lambdas, cfg.jobs, |lam| {
        let count = generate_paths(group, lam)?.len() as u64;
        let dim = rs.weyl_dimension(lam)?;
        if count != dim {
            let ce = Counterexample::noted(format!("{count} paths, Weyl dimension {dim}"))
                .at_lambda(lam);
            return Ok((1, Some(ce)));
        }
        Ok((1, None))
    })?;
    Ok(VerificationReport::new(
        "dimensions",
        group,
        json!({ "lambda_box": cfg.lambda_box }),
        outcome,
    ))
}

/// `Σ_{η ∈ T^λ_{≤w}} y^{η(1)} = T_w(y^λ)` for every dominant `λ` in the box
/// and every `w`; at `w = w_0` this is the full character.
pub fn verify_characters(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let lambdas = dominant_box(group, cfg.lambda_box);
    let sets = path_sets(group, &lambdas, cfg.jobs)?;
    let cases: Vec<(Weight, &WeylElement)> = lambdas
        .iter()
        .flat_map(|l| group.elements().iter().map(move |w| (*l, w)))
        .collect();
    let outcome = run_cases(&cases, cfg.jobs, |(lam, w)| {
        let below = restrict_le(group, &sets[lam], w)?;
        let mut from_paths = GroupRingElt::zero(group.rank(), Lattice::Y);
        for p in &below {
            from_paths.add_term(p.endpoint(), BigInt::from(1));
        }
        let demazure = demazure_element(rs, w, &ymono(lam))?;
        if from_paths != demazure {
            let ce = Counterexample::sides(&from_paths, &demazure)
                .at_lambda(lam)
                .at_w(w);
            return Ok((1, Some(ce)));
        }
        Ok((1, None))
    })?;
    Ok(VerificationReport::new(
        "characters",
        group,
        json!({ "lambda_box": cfg.lambda_box }),
        outcome,
    ))
}

/// Root operator round trips `e_i f_i π = π` and `f_i e_i π = π` whenever
/// the inner operator is defined, and `φ_i − ε_i = ⟨π(1), α_i^∨⟩`.
pub fn verify_crystal(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let lambdas = dominant_box(group, cfg.lambda_box);
    let outcome = run_cases(&lambdas, cfg.jobs, |lam| {
        let ps = generate_paths(group, lam)?;
        let mut checked = 0;
        for p in &ps {
            for i in 1..=group.rank() {
                checked += 1;
                let fail = |msg: &str| {
                    Ok((
                        checked,
                        Some(
                            Counterexample::noted(format!("{msg} at {p}"))
                                .at_lambda(lam)
                                .at_i(i),
                        ),
                    ))
                };
                let mut phi = 0;
                let mut cur = p.clone();
                while let Some(next) = root_op_f(group, i, &cur)? {
                    if root_op_e(group, i, &next)?.as_ref() != Some(&cur) {
                        return fail("e_i f_i is not the identity");
                    }
                    phi += 1;
                    cur = next;
                }
                let mut eps = 0;
                let mut cur = p.clone();
                while let Some(next) = root_op_e(group, i, &cur)? {
                    if root_op_f(group, i, &next)?.as_ref() != Some(&cur) {
                        return fail("f_i e_i is not the identity");
                    }
                    eps += 1;
                    cur = next;
                }
                if phi - eps != rs.pair(&p.endpoint(), i) {
                    return fail("string length does not match the endpoint");
                }
            }
        }
        Ok((checked, None))
    })?;
    Ok(VerificationReport::new(
        "crystal",
        group,
        json!({ "lambda_box": cfg.lambda_box }),
        outcome,
    ))
}

/// The string identity for one `(λ, w, i)` with `s_i w < w`: for every
/// `α_i`-string `S ⊆ T^λ_{≤w}` with head `π`,
///
/// ```text
/// Σ_{η ∈ S} T_{v(η,w)⁻¹} Y^{η(1)} = T_{v(π,w)⁻¹} Y^{π(1)} T_i
/// ```
///
/// tested on `y^μ` for `μ` in `±mu_box`. Returns `None` when `i` is not a
/// left descent of `w`, where the identity is not claimed.
pub fn verify_string_lemma(
    group: &WeylGroup,
    lambda: &Weight,
    w: &WeylElement,
    i: usize,
    mu_box_size: i64,
) -> Result<Option<VerificationReport>> {
    let ps = generate_paths(group, lambda)?;
    let mus = mu_box(group, mu_box_size);
    let outcome = match string_case(group, &ps, w, i, &mus)? {
        Some(o) => o,
        None => return Ok(None),
    };
    Ok(Some(VerificationReport::new(
        "strings",
        group,
        json!({ "lambda": lambda.coords(), "w": w.word(), "i": i, "mu_box": mu_box_size }),
        outcome,
    )))
}

fn string_case(
    group: &WeylGroup,
    ps: &PathSet,
    w: &WeylElement,
    i: usize,
    mus: &[Weight],
) -> Result<Option<Outcome>> {
    if !group.has_left_descent(i, w) {
        return Ok(None);
    }
    let rs = group.root_system();
    let lam = ps.lambda();
    let below = restrict_le(group, ps, w)?;
    let strings = string_decompose(group, &below, i)?;
    let mut checked = 0;
    for s in &strings {
        let lifted: Vec<_> = s
            .iter()
            .map(|p| Ok((p.clone(), crate::paths::final_direction(group, p, w)?)))
            .collect::<Result<_>>()?;
        let head_v = group.inverse(&lifted[0].1);
        let head_end = lifted[0].0.endpoint();
        for mu in mus {
            let f = ymono(mu);
            let lhs = rhs_from_lifts(group, &lifted, &f)?;
            let rhs =
                demazure_element(rs, head_v, &y_mul(&head_end, &demazure_apply(rs, i, &f)?)?)?;
            checked += 1;
            if lhs != rhs {
                let mut ce = Counterexample::sides(&lhs, &rhs)
                    .at_lambda(lam)
                    .at_w(w)
                    .at_i(i)
                    .at_mu(mu);
                ce.note = Some(format!("string headed by {}", lifted[0].0));
                return Ok(Some((checked, Some(ce))));
            }
        }
    }
    Ok(Some((checked, None)))
}

/// The string identity over the whole grid: dominant `λ`, all `w`, all
/// left descents `i` of `w`.
pub fn verify_strings(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let lambdas = dominant_box(group, cfg.lambda_box);
    let sets = path_sets(group, &lambdas, cfg.jobs)?;
    let mus = mu_box(group, cfg.mu_box);
    let cases: Vec<(Weight, &WeylElement, usize)> = lambdas
        .iter()
        .flat_map(|l| {
            group
                .elements()
                .iter()
                .flat_map(move |w| (1..=group.rank()).map(move |i| (*l, w, i)))
        })
        .collect();
    let outcome = run_cases(&cases, cfg.jobs, |(lam, w, i)| {
        Ok(string_case(group, &sets[lam], w, *i, &mus)?.unwrap_or((0, None)))
    })?;
    Ok(VerificationReport::new(
        "strings",
        group,
        grid_params(cfg),
        outcome,
    ))
}

/// Consistency of the Schubert expansion with the operator identity:
/// `Σ_v T_{v⁻¹}(c_v(y) · y^μ) = (Y^λ T_{w⁻¹})(y^μ)` where `c_v` is the
/// coefficient of `[O_v]` with `x` read as `y`; also positivity of all
/// coefficients and total mass `|T^λ_{≤w}|`.
pub fn verify_expansions(group: &WeylGroup, cfg: &GridConfig) -> Result<VerificationReport> {
    let rs = group.root_system();
    let lambdas = dominant_box(group, cfg.lambda_box);
    let sets = path_sets(group, &lambdas, cfg.jobs)?;
    let mus = mu_box(group, cfg.mu_box);
    let cases: Vec<(Weight, &WeylElement)> = lambdas
        .iter()
        .flat_map(|l| group.elements().iter().map(move |w| (*l, w)))
        .collect();
    let outcome = run_cases(&cases, cfg.jobs, |(lam, w)| {
        let lifted = lifted_paths_in(group, &sets[lam], w)?;
        let ex = expansion_from_lifts(group, lam, w, &lifted);
        let mut checked = 1;
        let bad_shape = ex.terms().values().any(|c| !c.all_coefficients_positive())
            || ex.mass() != BigInt::from(lifted.len());
        if bad_shape {
            let ce = Counterexample::noted("coefficients not positive or mass mismatch".into())
                .at_lambda(lam)
                .at_w(w);
            return Ok((checked, Some(ce)));
        }
        for mu in &mus {
            let f = ymono(mu);
            let mut regrouped = GroupRingElt::zero(group.rank(), Lattice::Y);
            for (v, c) in ex.terms() {
                let cf = c.clone().retag(Lattice::Y).checked_mul(&f)?;
                regrouped.add_assign_unchecked(&demazure_element(rs, group.inverse(v), &cf)?);
            }
            let lhs = theorem_lhs(group, lam, w, &f)?;
            checked += 1;
            if lhs != regrouped {
                let ce = Counterexample::sides(&lhs, &regrouped)
                    .at_lambda(lam)
                    .at_w(w)
                    .at_mu(mu);
                return Ok((checked, Some(ce)));
            }
        }
        Ok((checked, None))
    })?;
    Ok(VerificationReport::new(
        "expansions",
        group,
        grid_params(cfg),
        outcome,
    ))
}
