use std::collections::HashMap;

use super::{root_op_f, straight_path, LSPath};
use crate::error::{Error, Result};
use crate::rootdata::{Weight, WeylElement, WeylGroup};

/// Generation stops with [`Error::PathCap`] beyond this many paths.
pub const DEFAULT_PATH_CAP: usize = 200_000;

/// A deduplicated set of paths of one shape `λ`, in generation order.
#[derive(Clone, Debug)]
pub struct PathSet {
    lambda: Weight,
    paths: Vec<LSPath>,
    index: HashMap<LSPath, usize>,
}

impl PathSet {
    fn from_paths(lambda: Weight, paths: Vec<LSPath>) -> Self {
        let index = paths
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        PathSet {
            lambda,
            paths,
            index,
        }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn paths(&self) -> &[LSPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn contains(&self, p: &LSPath) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &LSPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LSPath> {
        self.paths.iter()
    }
}

impl<'a> IntoIterator for &'a PathSet {
    type Item = &'a LSPath;
    type IntoIter = std::slice::Iter<'a, LSPath>;
    fn into_iter(self) -> Self::IntoIter {
        self.paths.iter()
    }
}

/// All paths `f_{i_1} ⋯ f_{i_k} π_λ`, breadth first. Each path is listed at
/// its first discovery, scanning the previous level in order and the
/// operators by increasing index.
pub fn generate_paths(group: &WeylGroup, lambda: &Weight) -> Result<PathSet> {
    generate_paths_capped(group, lambda, DEFAULT_PATH_CAP)
}

pub fn generate_paths_capped(group: &WeylGroup, lambda: &Weight, cap: usize) -> Result<PathSet> {
    let start = straight_path(group, lambda)?;
    let mut paths = vec![start.clone()];
    let mut seen: HashMap<LSPath, usize> = HashMap::new();
    seen.insert(start, 0);
    let mut level_start = 0;
    while level_start < paths.len() {
        let level_end = paths.len();
        for k in level_start..level_end {
            for i in 1..=group.rank() {
                if let Some(next) = root_op_f(group, i, &paths[k])? {
                    if !seen.contains_key(&next) {
                        if paths.len() >= cap {
                            return Err(Error::PathCap(cap));
                        }
                        seen.insert(next.clone(), paths.len());
                        paths.push(next);
                    }
                }
            }
        }
        level_start = level_end;
    }
    Ok(PathSet {
        lambda: *lambda,
        paths,
        index: seen,
    })
}

/// `{ π ∈ ps : ι(π) ≤ wW_λ }`, keeping the order of `ps`.
pub fn restrict_le(group: &WeylGroup, ps: &PathSet, w: &WeylElement) -> Result<PathSet> {
    let j = group.root_system().stabilizer_set(&ps.lambda)?;
    let top = group.coset_of(w, j);
    let mut kept = Vec::new();
    for p in &ps.paths {
        if group.coset_leq(&p.initial_direction(group), &top)? {
            kept.push(p.clone());
        }
    }
    Ok(PathSet::from_paths(ps.lambda, kept))
}

/// `v(π, w)`: the last element of the maximal lift of the coset chain of `π`
/// with respect to `w`.
pub fn final_direction(group: &WeylGroup, path: &LSPath, w: &WeylElement) -> Result<WeylElement> {
    let chain = path.coset_chain(group);
    let lift = group.maximal_lift(w, &chain)?;
    Ok(lift
        .last()
        .expect("paths have at least one segment")
        .clone())
}
