//! Littelmann's root operators `f_i` (lowering) and `e_i` (raising).
//!
//! Write `h(t) = ⟨π(t), α_i^∨⟩` and `m = min h`. For `f_i`, let `p` be the
//! last time `h` attains `m` and `x` the first time after `p` where
//! `h = m + 1`; the result keeps `π` on `[0, p]`, reflects the increments on
//! `[p, x]` by `s_i` and translates the rest by `−α_i`. On paths of the
//! model `h` is nondecreasing on `[p, x]`, which is checked. `e_i` is the
//! mirror image: `q` is the first time `h = m`, `y` the last time before `q`
//! where `h = m + 1`, and the tail is translated by `+α_i`.

use num_traits::One;

use super::{LSPath, Rational};
use crate::error::{Error, Result};
use crate::rootdata::WeylGroup;

/// Reflects the increments of `path` by `s_i` on `[lo, hi]` and merges
/// adjacent segments that end up with the same direction.
fn reflect_window(
    group: &WeylGroup,
    path: &LSPath,
    i: usize,
    lo: Rational,
    hi: Rational,
) -> Result<LSPath> {
    let rs = group.root_system();
    let mut dirs = Vec::with_capacity(path.dirs.len() + 2);
    let mut breaks = Vec::with_capacity(path.breaks.len() + 2);
    breaks.push(path.breaks[0]);
    for (k, d) in path.dirs.iter().enumerate() {
        let (a, b) = (path.breaks[k], path.breaks[k + 1]);
        let mut cuts = vec![a];
        for c in [lo, hi] {
            if a < c && c < b {
                cuts.push(c);
            }
        }
        cuts.push(b);
        for piece in cuts.windows(2) {
            let (s, e) = (piece[0], piece[1]);
            let nd = if s >= lo && e <= hi {
                rs.reflect(d, i)
            } else {
                *d
            };
            if dirs.last() == Some(&nd) {
                *breaks.last_mut().expect("nonempty") = e;
            } else {
                dirs.push(nd);
                breaks.push(e);
            }
        }
    }
    LSPath::new(group, path.lambda, dirs, breaks)
}

/// `f_i π`, or `None` when the operator annihilates the path.
pub fn root_op_f(group: &WeylGroup, i: usize, path: &LSPath) -> Result<Option<LSPath>> {
    check_index(group, i)?;
    let h = path.heights(i);
    let m = *h.iter().min().expect("nonempty");
    let one = Rational::one();
    if h[h.len() - 1] - m < one {
        return Ok(None);
    }
    let p_idx = h.iter().rposition(|v| *v == m).expect("minimum attained");
    let target = m + one;
    let mut x = None;
    for k in p_idx..path.dirs.len() {
        let slope = path.dirs[k].coord(i);
        if slope < 0 {
            return Err(Error::PathInvariant(format!(
                "h_{i} decreases between its last minimum and m+1 on {path}"
            )));
        }
        if h[k + 1] >= target {
            x = Some(path.breaks[k] + (target - h[k]) / Rational::from_integer(slope));
            break;
        }
    }
    let x = x.expect("h(1) ≥ m + 1 guarantees a crossing");
    reflect_window(group, path, i, path.breaks[p_idx], x).map(Some)
}

/// `e_i π`, or `None` when the operator annihilates the path.
pub fn root_op_e(group: &WeylGroup, i: usize, path: &LSPath) -> Result<Option<LSPath>> {
    check_index(group, i)?;
    let h = path.heights(i);
    let m = *h.iter().min().expect("nonempty");
    let one = Rational::one();
    if m > -one {
        return Ok(None);
    }
    let q_idx = h.iter().position(|v| *v == m).expect("minimum attained");
    let target = m + one;
    let mut y = None;
    for k in (0..q_idx).rev() {
        let slope = path.dirs[k].coord(i);
        if slope > 0 {
            return Err(Error::PathInvariant(format!(
                "h_{i} increases between m+1 and its first minimum on {path}"
            )));
        }
        if h[k] >= target {
            y = Some(path.breaks[k] + (target - h[k]) / Rational::from_integer(slope));
            break;
        }
    }
    let y = y.expect("h(0) = 0 ≥ m + 1 guarantees a crossing");
    reflect_window(group, path, i, y, path.breaks[q_idx]).map(Some)
}

fn check_index(group: &WeylGroup, i: usize) -> Result<()> {
    if i == 0 || i > group.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: group.rank(),
        });
    }
    Ok(())
}
