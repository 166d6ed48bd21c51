//! Finite Weyl groups: enumeration, reduced words and Bruhat order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::cartan::{LatticeMap, RootSystem, SimpleSet};
use super::weight::Weight;
use crate::error::{Error, Result};

/// An element of the Weyl group.
///
/// Elements are only created by [`WeylGroup`]; equality is equality of the
/// action matrix, and the stored word is the lexicographically least
/// reduced word. Elements are ordered by length, then by that word.
#[derive(Clone)]
pub struct WeylElement {
    index: usize,
    action: LatticeMap,
    length: usize,
    word: Vec<usize>,
}

impl WeylElement {
    /// Position in the enumeration of the owning group.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Images of the fundamental weights, as columns.
    pub fn action(&self) -> &LatticeMap {
        &self.action
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Canonical reduced word, 1-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        self.action.apply(lambda)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state)
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for i in &self.word {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Fixed-size bit set over the elements of a group.
#[derive(Clone, Debug)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }
    fn get(&self, k: usize) -> bool {
        self.0[k / 64] & (1 << (k % 64)) != 0
    }
    fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }
}

/// The Weyl group of a root system, fully enumerated.
///
/// Elements are listed by length and then by canonical word, so index 0 is
/// the identity and the last element is the longest element `w0`.
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    lookup: HashMap<LatticeMap, usize>,
    right_simple: Vec<Vec<usize>>,
    left_simple: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    reflections: Vec<usize>,
    covers: Vec<Vec<usize>>,
    below: Vec<BitRow>,
    parabolic: Vec<Vec<usize>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.rs.name())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl WeylGroup {
    /// Enumerates `W` by breadth-first search over right multiplication by
    /// simple reflections. Within each length the words are produced in
    /// lexicographic order, so the first word reaching an element is its
    /// lexicographically least reduced word.
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let gens: Vec<LatticeMap> = (1..=n).map(|i| rs.reflection_map(i)).collect();
        let mut elements = vec![WeylElement {
            index: 0,
            action: LatticeMap::identity(n),
            length: 0,
            word: Vec::new(),
        }];
        let mut lookup = HashMap::new();
        lookup.insert(elements[0].action, 0);
        let mut level_start = 0;
        loop {
            let level_end = elements.len();
            for u in level_start..level_end {
                for (k, g) in gens.iter().enumerate() {
                    let action = elements[u].action.compose(g);
                    if lookup.contains_key(&action) {
                        continue;
                    }
                    let mut word = elements[u].word.clone();
                    word.push(k + 1);
                    let index = elements.len();
                    lookup.insert(action, index);
                    elements.push(WeylElement {
                        index,
                        action,
                        length: elements[u].length + 1,
                        word,
                    });
                }
            }
            if elements.len() == level_end {
                break;
            }
            level_start = level_end;
        }

        let find = |m: &LatticeMap| lookup[m];
        let right_simple: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| gens.iter().map(|g| find(&e.action.compose(g))).collect())
            .collect();
        let left_simple: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| gens.iter().map(|g| find(&g.compose(&e.action))).collect())
            .collect();
        let inverse: Vec<usize> = elements
            .iter()
            .map(|e| {
                let m = e
                    .word
                    .iter()
                    .rev()
                    .fold(LatticeMap::identity(n), |acc, &i| acc.compose(&gens[i - 1]));
                find(&m)
            })
            .collect();

        // Reflections are the conjugates of simple reflections.
        let mut reflections: Vec<usize> = Vec::new();
        for e in &elements {
            let inv = &elements[inverse[e.index]].action;
            for g in &gens {
                let t = find(&e.action.compose(g).compose(inv));
                if !reflections.contains(&t) {
                    reflections.push(t);
                }
            }
        }
        reflections.sort_unstable();

        let size = elements.len();
        let mut covers: Vec<Vec<usize>> = vec![Vec::new(); size];
        for u in &elements {
            for &t in &reflections {
                let v = find(&u.action.compose(&elements[t].action));
                if elements[v].length == u.length + 1 {
                    covers[v].push(u.index);
                }
            }
        }
        for c in &mut covers {
            c.sort_unstable();
        }
        // Elements are sorted by length, so every cover of v is finished
        // before v itself.
        let mut below: Vec<BitRow> = Vec::with_capacity(size);
        for (v, cv) in covers.iter().enumerate() {
            let mut row = BitRow::new(size);
            row.set(v);
            for &u in cv {
                row.union_with(&below[u]);
            }
            below.push(row);
        }

        let parabolic: Vec<Vec<usize>> = (0..(1usize << n))
            .map(|mask| {
                elements
                    .iter()
                    .filter(|e| e.word.iter().all(|&i| mask & (1 << (i - 1)) != 0))
                    .map(|e| e.index)
                    .collect()
            })
            .collect();

        WeylGroup {
            rs,
            elements,
            lookup,
            right_simple,
            left_simple,
            inverse,
            reflections,
            covers,
            below,
            parabolic,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, ordered by length then canonical word.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &WeylElement {
        &self.elements[index]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is nonempty")
    }

    pub fn simple(&self, i: usize) -> &WeylElement {
        self.check_index(i).expect("simple index in range");
        &self.elements[self.right_simple[0][i - 1]]
    }

    /// Looks up an element by its action matrix.
    pub fn from_action(&self, action: &LatticeMap) -> Option<&WeylElement> {
        self.lookup.get(action).map(|&k| &self.elements[k])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Product of the simple reflections in `word`, reduced or not.
    pub fn from_word(&self, word: &[usize]) -> Result<&WeylElement> {
        let mut cur = 0;
        for &i in word {
            self.check_index(i)?;
            cur = self.right_simple[cur][i - 1];
        }
        Ok(&self.elements[cur])
    }

    /// Like [`from_word`](Self::from_word) but rejects non-reduced words.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<&WeylElement> {
        let w = self.from_word(word)?;
        if w.length != word.len() {
            return Err(Error::NotReduced(word.to_vec()));
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.from_word(word)?.length == word.len())
    }

    pub fn mul(&self, u: &WeylElement, v: &WeylElement) -> &WeylElement {
        &self.elements[self.lookup[&u.action.compose(&v.action)]]
    }

    pub fn inverse(&self, w: &WeylElement) -> &WeylElement {
        &self.elements[self.inverse[w.index]]
    }

    /// `w · s_i`
    pub fn mul_simple_right(&self, w: &WeylElement, i: usize) -> &WeylElement {
        &self.elements[self.right_simple[w.index][i - 1]]
    }

    /// `s_i · w`
    pub fn mul_simple_left(&self, i: usize, w: &WeylElement) -> &WeylElement {
        &self.elements[self.left_simple[w.index][i - 1]]
    }

    pub fn has_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.mul_simple_right(w, i).length < w.length
    }

    pub fn has_left_descent(&self, i: usize, w: &WeylElement) -> bool {
        self.mul_simple_left(i, w).length < w.length
    }

    /// All reflections of `W`, by enumeration index.
    pub fn reflections(&self) -> impl Iterator<Item = &WeylElement> {
        self.reflections.iter().map(|&k| &self.elements[k])
    }

    /// Elements covered by `v` in Bruhat order.
    pub fn bruhat_covers(&self, v: &WeylElement) -> impl Iterator<Item = &WeylElement> {
        self.covers[v.index].iter().map(|&k| &self.elements[k])
    }

    /// `u ≤ v` in Bruhat order, from the transitive closure of the cover
    /// relation `u ⋖ u·t`, `ℓ(u·t) = ℓ(u) + 1`.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        self.below[v.index].get(u.index)
    }

    pub fn bruhat_lt(&self, u: &WeylElement, v: &WeylElement) -> bool {
        u.index != v.index && self.bruhat_leq(u, v)
    }

    /// Number of positive roots sent to negative roots by `w^{-1}`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        let inv = self.inverse(w);
        self.rs
            .positive_roots()
            .iter()
            .filter(|b| !self.rs.is_positive_root(&inv.act(&b.weight)))
            .count()
    }

    /// Elements of the standard parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: SimpleSet) -> impl Iterator<Item = &WeylElement> {
        self.parabolic[j.mask()].iter().map(|&k| &self.elements[k])
    }

    /// The element `w` of minimal length with `w(λ) = μ`, where `λ` is the
    /// dominant weight in the orbit of `μ`. Returns `(w, λ)`.
    pub fn to_dominant(&self, mu: &Weight) -> (&WeylElement, Weight) {
        let mut cur = *mu;
        let mut w = 0;
        // μ = s_{i1} ⋯ s_{ik} λ, each step raising the weight.
        while let Some(i) = (1..=self.rank()).find(|&i| cur.coord(i) < 0) {
            cur = self.rs.reflect(&cur, i);
            w = self.right_simple[w][i - 1];
        }
        (&self.elements[w], cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::new(name.parse().unwrap()).unwrap())
    }

    #[test]
    fn group_orders() {
        for (name, order, longest) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("G2", 12, 6),
            ("B3", 48, 9),
            ("D4", 192, 12),
            ("F4", 1152, 24),
        ] {
            let g = group(name);
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.longest().length(), longest, "{name}");
            assert_eq!(
                g.reflections().count(),
                g.root_system().positive_roots().len()
            );
        }
    }

    #[test]
    fn enumeration_order_and_words() {
        let g = group("A2");
        let words: Vec<Vec<usize>> = g.elements().iter().map(|e| e.word().to_vec()).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![1, 2],
                vec![2, 1],
                vec![1, 2, 1]
            ]
        );
        // s2s1s2 and s1s2s1 are the same element and print canonically.
        assert_eq!(g.from_word(&[2, 1, 2]).unwrap().word(), &[1, 2, 1]);
    }

    #[test]
    fn element_invariants() {
        for name in ["A3", "B2", "G2", "C3"] {
            let g = group(name);
            for w in g.elements() {
                assert_eq!(w.action().determinant().abs(), 1);
                assert_eq!(g.inversion_count(w), w.length());
                assert_eq!(g.from_word(w.word()).unwrap(), w);
                assert!(g.is_reduced(w.word()).unwrap());
                for i in 1..=g.rank() {
                    let d = g.mul_simple_right(w, i).length() as i64 - w.length() as i64;
                    assert_eq!(d.abs(), 1);
                }
                assert!(g.mul(w, g.inverse(w)).is_identity());
            }
        }
    }

    #[test]
    fn act_examples() {
        let g = group("A2");
        let w1 = Weight::new(&[1, 0]);
        assert_eq!(g.identity().act(&w1), w1);
        assert_eq!(
            g.from_word(&[1, 2]).unwrap().act(&w1),
            Weight::new(&[-1, 1])
        );
        assert_eq!(g.longest().act(&w1), Weight::new(&[0, -1]));
    }

    #[test]
    fn act_permutes_roots() {
        let g = group("B3");
        let rs = g.root_system();
        for w in g.elements() {
            for b in rs.positive_roots() {
                assert!(rs.is_root(&w.act(&b.weight)));
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A2");
        let s1 = g.from_word(&[1]).unwrap();
        let s2 = g.from_word(&[2]).unwrap();
        let s1s2 = g.from_word(&[1, 2]).unwrap();
        for w in g.elements() {
            assert!(g.bruhat_leq(g.identity(), w));
            assert!(g.bruhat_leq(w, g.longest()));
        }
        assert!(g.bruhat_leq(s1, s1s2));
        assert!(!g.bruhat_leq(s1, s2));
        assert!(!g.bruhat_leq(s1s2, s1));
    }

    #[test]
    fn bruhat_is_partial_order() {
        let g = group("B3");
        let els = g.elements();
        for u in els {
            assert!(g.bruhat_leq(u, u));
            for v in els {
                if g.bruhat_leq(u, v) && g.bruhat_leq(v, u) {
                    assert_eq!(u, v);
                }
                if g.bruhat_leq(u, v) {
                    assert!(u.length() <= v.length());
                }
            }
        }
        // transitivity on a sample
        for u in els.iter().step_by(5) {
            for v in els.iter().step_by(3) {
                for w in els.iter().step_by(4) {
                    if g.bruhat_leq(u, v) && g.bruhat_leq(v, w) {
                        assert!(g.bruhat_leq(u, w));
                    }
                }
            }
        }
    }

    /// Subword criterion as an independent check of the cover closure.
    #[test]
    fn bruhat_matches_subword_property() {
        fn subwords(word: &[usize]) -> Vec<Vec<usize>> {
            (0..(1u32 << word.len()))
                .map(|mask| {
                    word.iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &i)| i)
                        .collect()
                })
                .collect()
        }
        for name in ["A3", "B2", "G2"] {
            let g = group(name);
            for v in g.elements() {
                let mut below = vec![false; g.order()];
                for sw in subwords(v.word()) {
                    below[g.from_word(&sw).unwrap().index()] = true;
                }
                for u in g.elements() {
                    assert_eq!(g.bruhat_leq(u, v), below[u.index()], "{name}: {u} vs {v}");
                }
            }
        }
    }

    #[test]
    fn to_dominant_finds_minimal_element() {
        let g = group("A2");
        let (w, lam) = g.to_dominant(&Weight::new(&[-1, 1]));
        assert_eq!(lam, Weight::new(&[1, 0]));
        assert_eq!(w.word(), &[1]);
        let (w, lam) = g.to_dominant(&Weight::new(&[0, -1]));
        assert_eq!(lam, Weight::new(&[1, 0]));
        assert_eq!(w.word(), &[2, 1]);
        assert_eq!(w.act(&lam), Weight::new(&[0, -1]));
    }

    #[test]
    fn parabolic_subgroups() {
        let g = group("A3");
        let j = SimpleSet::from_indices([1, 2]);
        assert_eq!(g.parabolic_subgroup(j).count(), 6);
        assert_eq!(g.parabolic_subgroup(SimpleSet::empty()).count(), 1);
        assert_eq!(g.parabolic_subgroup(SimpleSet::full(3)).count(), 24);
        assert_eq!(
            g.parabolic_subgroup(SimpleSet::from_indices([1, 3]))
                .count(),
            4
        );
    }
}
