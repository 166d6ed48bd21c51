//! Cartan data for the finite types of rank at most four.
//!
//! Conventions: simple roots are numbered as in Bourbaki and the Cartan
//! matrix has entries `a_ij = ⟨α_j, α_i^∨⟩`, so column `j` is the simple root
//! `α_j` written in fundamental-weight coordinates. The orientation of the
//! non-simply-laced types is fixed here and nowhere else:
//!
//! | type | long simple roots | short simple roots |
//! |------|-------------------|--------------------|
//! | B_n  | α_1 … α_{n-1}     | α_n                |
//! | C_n  | α_n               | α_1 … α_{n-1}      |
//! | F_4  | α_1, α_2          | α_3, α_4           |
//! | G_2  | α_2               | α_1                |

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::weight::{Weight, MAX_RANK};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadRootSystemName(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('E') => TypeLetter::E,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(CartanType { letter, rank })
    }
}

/// A positive root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Coefficients in the basis of simple roots.
    pub root_coords: Vec<i64>,
    /// Coefficients of the coroot in the basis of simple coroots; the
    /// pairing `⟨λ, β^∨⟩` is `Σ_i coroot_coords[i] · λ_i`.
    pub coroot_coords: Vec<i64>,
}

impl PositiveRoot {
    pub fn pair_coroot(&self, lambda: &Weight) -> i64 {
        self.coroot_coords
            .iter()
            .zip(lambda.coords())
            .map(|(c, l)| c * l)
            .sum()
    }
}

/// Integer matrix acting on fundamental-weight coordinates. Column `j` is
/// the image of `ω_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    rank: u8,
    m: [[i64; MAX_RANK]; MAX_RANK],
}

impl LatticeMap {
    pub fn identity(rank: usize) -> Self {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (k, row) in m.iter_mut().enumerate().take(rank) {
            row[k] = 1;
        }
        LatticeMap {
            rank: rank as u8,
            m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.m[row][col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|r| self.m[r][..self.rank()].to_vec())
            .collect()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.rank();
        let mut out = [0i64; MAX_RANK];
        let c = w.coords();
        for (r, slot) in out.iter_mut().enumerate().take(n) {
            *slot = (0..n).map(|k| self.m[r][k] * c[k]).sum();
        }
        Weight::new(&out[..n])
    }

    pub fn compose(&self, rhs: &LatticeMap) -> LatticeMap {
        let n = self.rank();
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (r, row) in m.iter_mut().enumerate().take(n) {
            for (c, slot) in row.iter_mut().enumerate().take(n) {
                *slot = (0..n).map(|k| self.m[r][k] * rhs.m[k][c]).sum();
            }
        }
        LatticeMap { rank: self.rank, m }
    }

    pub fn determinant(&self) -> i64 {
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|c| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != c)
                                .map(|(_, v)| *v)
                                .collect()
                        })
                        .collect();
                    let sign = if c % 2 == 0 { 1 } else { -1 };
                    sign * m[0][c] * det(&minor)
                })
                .sum()
        }
        det(&self.rows())
    }
}

impl fmt::Debug for LatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Concrete Cartan datum: Cartan matrix, simple roots and the full list of
/// positive roots with their coroots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    positive_set: HashSet<Weight>,
}

fn cartan_matrix(ty: CartanType) -> Result<Vec<Vec<i64>>> {
    let n = ty.rank;
    let unsupported = |reason| Error::UnsupportedRootSystem {
        letter: format!("{:?}", ty.letter),
        rank: n,
        reason,
    };
    if n == 0 {
        return Err(unsupported("rank must be positive"));
    }
    if n > MAX_RANK {
        return Err(unsupported("rank above 4 is not supported"));
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..n - 1 {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match ty.letter {
        TypeLetter::A => chain(&mut a),
        TypeLetter::B => {
            if n < 2 {
                return Err(unsupported("type B needs rank at least 2"));
            }
            chain(&mut a);
            a[n - 1][n - 2] = -2;
        }
        TypeLetter::C => {
            if n < 2 {
                return Err(unsupported("type C needs rank at least 2"));
            }
            chain(&mut a);
            a[n - 2][n - 1] = -2;
        }
        TypeLetter::D => {
            if n < 3 {
                return Err(unsupported("type D needs rank at least 3"));
            }
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        TypeLetter::E => return Err(unsupported("type E has rank above 4")),
        TypeLetter::F => {
            if n != 4 {
                return Err(unsupported("type F exists only in rank 4"));
            }
            chain(&mut a);
            a[2][1] = -2;
        }
        TypeLetter::G => {
            if n != 2 {
                return Err(unsupported("type G exists only in rank 2"));
            }
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    Ok(a)
}

/// Builds the root system of the given type, e.g. `build_root_system('A', 2)`.
pub fn build_root_system(letter: char, rank: usize) -> Result<RootSystem> {
    let ty: CartanType = format!("{letter}{rank}").parse()?;
    RootSystem::new(ty)
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_matrix(cartan_type)?;
        let n = cartan_type.rank;
        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight::new(&(0..n).map(|i| cartan[i][j]).collect::<Vec<_>>()))
            .collect();

        // Orbit of the simple (root, coroot) pairs under the simple
        // reflections, tracked in simple-root and simple-coroot coordinates.
        let pair_root = |c: &[i64], i: usize| -> i64 { (0..n).map(|k| cartan[i][k] * c[k]).sum() };
        let pair_coroot =
            |cv: &[i64], i: usize| -> i64 { (0..n).map(|k| cartan[k][i] * cv[k]).sum() };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            seen.insert(e.clone());
            queue.push_back((e.clone(), e));
        }
        let mut roots = Vec::new();
        while let Some((c, cv)) = queue.pop_front() {
            for i in 0..n {
                let k = pair_root(&c, i);
                let kv = pair_coroot(&cv, i);
                let mut c2 = c.clone();
                c2[i] -= k;
                let mut cv2 = cv.clone();
                cv2[i] -= kv;
                if seen.insert(c2.clone()) {
                    queue.push_back((c2, cv2));
                }
            }
            roots.push((c, cv));
        }
        let mut positive_roots: Vec<PositiveRoot> = roots
            .into_iter()
            .filter(|(c, _)| c.iter().all(|&x| x >= 0))
            .map(|(c, cv)| {
                let fw: Vec<i64> = (0..n).map(|i| pair_root(&c, i)).collect();
                PositiveRoot {
                    weight: Weight::new(&fw),
                    root_coords: c,
                    coroot_coords: cv,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.root_coords.iter().sum();
            let hb: i64 = b.root_coords.iter().sum();
            ha.cmp(&hb).then_with(|| b.root_coords.cmp(&a.root_coords))
        });
        let positive_set = positive_roots.iter().map(|r| r.weight).collect();
        Ok(RootSystem {
            cartan_type,
            cartan,
            simple_roots,
            positive_roots,
            positive_set,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn name(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// Cartan matrix, `cartan()[i][j] = ⟨α_j, α_i^∨⟩` (0-based indices).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The simple root `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> Weight {
        self.check_index(i);
        self.simple_roots[i - 1]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.is_positive_root(w) || self.is_positive_root(&-*w)
    }

    /// Half the sum of the positive roots; all coordinates equal one.
    pub fn rho(&self) -> Weight {
        Weight::new(&vec![1; self.rank()])
    }

    fn check_index(&self, i: usize) {
        assert!(
            i >= 1 && i <= self.rank(),
            "simple index {i} out of range 1..={}",
            self.rank()
        );
    }

    /// `⟨λ, α_i^∨⟩`. In fundamental-weight coordinates this is `λ_i`.
    pub fn pair(&self, lambda: &Weight, i: usize) -> i64 {
        self.check_index(i);
        lambda.coord(i)
    }

    /// `s_i(λ) = λ − ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, lambda: &Weight, i: usize) -> Weight {
        let k = self.pair(lambda, i);
        *lambda - k * self.simple_roots[i - 1]
    }

    /// Matrix of the simple reflection `s_i` on fundamental-weight coordinates.
    pub fn reflection_map(&self, i: usize) -> LatticeMap {
        self.check_index(i);
        let n = self.rank();
        let mut m = LatticeMap::identity(n);
        // s_i(ω_j) = ω_j − δ_ij α_i
        let alpha = self.simple_roots[i - 1];
        for r in 0..n {
            m.m[r][i - 1] -= alpha.coords()[r];
        }
        m
    }

    /// Order of `s_i s_j` for `i ≠ j` (1-based).
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => panic!("impossible Cartan product {p}"),
        }
    }

    /// Simple indices `J = { i : ⟨λ, α_i^∨⟩ = 0 }` generating the stabilizer of
    /// a dominant weight.
    pub fn stabilizer_set(&self, lambda: &Weight) -> Result<SimpleSet> {
        lambda.expect_rank(self.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(SimpleSet::from_indices(
            (1..=self.rank()).filter(|&i| lambda.coord(i) == 0),
        ))
    }

    /// Dimension of the irreducible module of highest weight `λ` via the
    /// product formula `∏_{β>0} ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u64> {
        lambda.expect_rank(self.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = *lambda + self.rho();
        let prod = self
            .positive_roots
            .iter()
            .fold(Ratio::from_integer(1i64), |acc, b| {
                acc * Ratio::new(b.pair_coroot(&shifted), b.pair_coroot(&self.rho()))
            });
        debug_assert!(prod.is_integer());
        Ok(prod.to_integer() as u64)
    }
}

/// A set of simple indices, stored as a bitmask over `1..=4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(u8);

impl SimpleSet {
    pub fn empty() -> Self {
        SimpleSet(0)
    }

    pub fn full(rank: usize) -> Self {
        SimpleSet(((1u16 << rank) - 1) as u8)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = SimpleSet(0);
        for i in indices {
            assert!((1..=MAX_RANK).contains(&i));
            s.0 |= 1 << (i - 1);
        }
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=MAX_RANK).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn mask(&self) -> usize {
        self.0 as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=MAX_RANK).filter(move |&i| self.contains(i))
    }
}
