use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Largest rank handled anywhere in the crate.
pub const MAX_RANK: usize = 4;

/// An element of the weight lattice, stored in the basis of fundamental
/// weights `ω_1, …, ω_ℓ`.
///
/// With these coordinates the pairing against the `i`-th simple coroot is
/// just the `i`-th coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: u8,
    coords: [i64; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        assert!(
            !coords.is_empty() && coords.len() <= MAX_RANK,
            "weight rank must be in 1..={MAX_RANK}"
        );
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight {
            rank: coords.len() as u8,
            coords: c,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(&vec![0; rank])
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank as usize]
    }

    /// Coordinate `i` (1-based), i.e. the pairing with the `i`-th simple coroot.
    pub fn coord(&self, i: usize) -> i64 {
        assert!(
            i >= 1 && i <= self.rank(),
            "simple index {i} out of range 1..={}",
            self.rank
        );
        self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    pub fn expect_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: rank,
                found: self.rank(),
            })
        }
    }

    /// Every weight whose coordinates lie in `lo..=hi`, in lexicographic order.
    pub fn box_iter(rank: usize, lo: i64, hi: i64) -> impl Iterator<Item = Weight> {
        let side = if hi >= lo { (hi - lo + 1) as u64 } else { 0 };
        let total = side.pow(rank as u32);
        (0..total).map(move |mut n| {
            let mut c = [0i64; MAX_RANK];
            for slot in (0..rank).rev() {
                c[slot] = lo + (n % side) as i64;
                n /= side;
            }
            Weight {
                rank: rank as u8,
                coords: c,
            }
        })
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.rank, rhs.rank);
        for k in 0..MAX_RANK {
            self.coords[k] += rhs.coords[k];
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.rank, rhs.rank);
        for k in 0..MAX_RANK {
            self.coords[k] -= rhs.coords[k];
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(mut self) -> Weight {
        for c in &mut self.coords {
            *c = -*c;
        }
        self
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, mut rhs: Weight) -> Weight {
        for c in &mut rhs.coords {
            *c *= self;
        }
        rhs
    }
}
