//! Root systems of type A, B and D and their dominant weights.
//!
//! Coordinates are the orthonormal ones: `e_i - e_j` for `A_{n-1}` inside
//! `Z^n`, `e_i +- e_j` (plus `e_i` for B) inside `Z^n` for `B_n`, `D_n`.
//!
//! Type A weights follow the `SU(n)` convention of writing `mu` with `n - 1`
//! coordinates; [`DominantWeight::ambient`] appends the trailing `0`. Inner
//! products on type A use the quotient form `<x, y> - (sum x)(sum y) / n`, so
//! the all-ones direction never matters.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `A_{n-1}`, the group `SU(n)`.
    A,
    /// `B_n`, the group `SO(2n+1)`.
    B,
    /// `D_n`, the group `SO(2n)`.
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            Family::D => 2,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if rank < self.min_rank() {
            Err(Error::Rank { family: self, rank })
        } else {
            Ok(())
        }
    }

    /// Length of the coordinate vectors roots and weights live in.
    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B | Family::D => rank,
        }
    }

    /// `n` of the matrix group `SU(n)`, `SO(n)`.
    pub fn group_n(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B => 2 * rank + 1,
            Family::D => 2 * rank,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::Unsupported("root system family must be A, B or D")),
        }
    }
}

/// Positive roots in ambient coordinates, without duplicates.
pub fn positive_roots(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    family.check_rank(rank)?;
    let dim = family.ambient_dim(rank);
    let unit = |i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut minus = unit(i);
            minus[j] = -1;
            roots.push(minus);
            if family != Family::A {
                let mut plus = unit(i);
                plus[j] = 1;
                roots.push(plus);
            }
        }
    }
    if family == Family::B {
        roots.extend((0..dim).map(unit));
    }
    Ok(roots)
}

/// Half-sum of the positive roots.
pub fn weyl_vector(family: Family, rank: usize) -> Result<Vec<Rational64>> {
    Ok(RootSystem::new(family, rank)?.weyl_vector())
}

/// Validate `coords` against the dominance chamber of the family.
pub fn make_weight(family: Family, rank: usize, coords: &[i64]) -> Result<DominantWeight> {
    DominantWeight::new(family, rank, coords.to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    positive_roots: Vec<Vec<i64>>,
    doubled_rho: Vec<i64>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let positive_roots = positive_roots(family, rank)?;
        let mut doubled_rho = vec![0i64; family.ambient_dim(rank)];
        for root in &positive_roots {
            for (acc, c) in doubled_rho.iter_mut().zip(root) {
                *acc += c;
            }
        }
        Ok(RootSystem {
            family,
            rank,
            positive_roots,
            doubled_rho,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.family.ambient_dim(self.rank)
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `2 rho`, which is integral for every family.
    pub fn doubled_rho(&self) -> &[i64] {
        &self.doubled_rho
    }

    pub fn weyl_vector(&self) -> Vec<Rational64> {
        self.doubled_rho
            .iter()
            .map(|&c| Rational64::new(c, 2))
            .collect()
    }

    /// Simple roots `e_i - e_{i+1}`, closed off by `e_n` (B) or
    /// `e_{n-1} + e_n` (D).
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let dim = self.ambient_dim();
        let mut simple: Vec<Vec<i64>> = (0..dim - 1)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        match self.family {
            Family::A => {}
            Family::B => {
                let mut v = vec![0; dim];
                v[dim - 1] = 1;
                simple.push(v);
            }
            Family::D => {
                let mut v = vec![0; dim];
                v[dim - 2] = 1;
                v[dim - 1] = 1;
                simple.push(v);
            }
        }
        simple
    }

    /// Integer multiple of the invariant form: the plain dot product for B and
    /// D, `n <x, y> - (sum x)(sum y)` for `A_{n-1}`. Ratios of this form agree
    /// with ratios of the true inner product.
    pub fn scaled_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let dot: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        match self.family {
            Family::A => {
                let n = self.ambient_dim() as i64;
                n * dot - x.iter().sum::<i64>() * y.iter().sum::<i64>()
            }
            Family::B | Family::D => dot,
        }
    }

    /// The exact invariant form on rational vectors.
    pub fn form(&self, x: &[Rational64], y: &[Rational64]) -> Rational64 {
        let dot = x
            .iter()
            .zip(y)
            .fold(Rational64::zero(), |acc, (a, b)| acc + a * b);
        match self.family {
            Family::A => {
                let n = Rational64::from_integer(self.ambient_dim() as i64);
                let sx: Rational64 = x.iter().copied().sum();
                let sy: Rational64 = y.iter().copied().sum();
                dot - sx * sy / n
            }
            Family::B | Family::D => dot,
        }
    }
}

/// A dominant integral weight `mu`. Spin weights are not represented.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    family: Family,
    rank: usize,
    coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(family: Family, rank: usize, coords: Vec<i64>) -> Result<Self> {
        family.check_rank(rank)?;
        if coords.len() != rank {
            return Err(Error::Length {
                expected: rank,
                found: coords.len(),
            });
        }
        for i in 0..rank {
            let ok = match (family, i + 1 == rank) {
                (Family::D, true) => coords[i - 1] >= coords[i].abs(),
                (Family::D, false) if i + 2 == rank => true,
                (_, true) => coords[i] >= 0,
                _ => coords[i] >= coords[i + 1],
            };
            if !ok {
                return Err(Error::NotDominant { family, index: i });
            }
        }
        Ok(DominantWeight {
            family,
            rank,
            coords,
        })
    }

    pub fn zero(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, vec![0; rank])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The coordinates as written in the `SU(n)` / `SO(n)` conventions.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinates in the ambient space of the root system.
    pub fn ambient(&self) -> Vec<i64> {
        let mut v = self.coords.clone();
        if self.family == Family::A {
            v.push(0);
        }
        v
    }

    /// `mu` with the sign of the last coordinate flipped (type D only).
    pub fn d_mirror(&self) -> Option<Self> {
        if self.family != Family::D {
            return None;
        }
        let mut coords = self.coords.clone();
        let last = coords.len() - 1;
        coords[last] = -coords[last];
        Some(DominantWeight { coords, ..*self })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn a2_roots() {
        let roots = positive_roots(Family::A, 2).unwrap();
        assert_eq!(roots, vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]]);
    }

    #[test]
    fn b2_roots() {
        let mut roots = positive_roots(Family::B, 2).unwrap();
        roots.sort();
        let mut expected = vec![vec![1, -1], vec![1, 1], vec![1, 0], vec![0, 1]];
        expected.sort();
        assert_eq!(roots, expected);
    }

    #[test]
    fn d3_has_six_roots() {
        assert_eq!(positive_roots(Family::D, 3).unwrap().len(), 6);
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for rank in 1..=8usize {
            let a = positive_roots(Family::A, rank).unwrap().len();
            assert_eq!(a, (rank + 1) * rank / 2);
            let b = positive_roots(Family::B, rank).unwrap();
            assert_eq!(b.len(), rank * rank);
            if rank >= 2 {
                assert_eq!(
                    positive_roots(Family::D, rank).unwrap().len(),
                    rank * (rank - 1)
                );
            }
            let mut dedup = b.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), b.len());
        }
    }

    #[test]
    fn rank_bounds() {
        assert_eq!(
            positive_roots(Family::D, 1),
            Err(Error::Rank {
                family: Family::D,
                rank: 1
            })
        );
        assert!(positive_roots(Family::A, 0).is_err());
        assert!(positive_roots(Family::B, 0).is_err());
    }

    #[test]
    fn weyl_vectors() {
        assert_eq!(weyl_vector(Family::B, 2).unwrap(), vec![r(3, 2), r(1, 2)]);
        assert_eq!(
            weyl_vector(Family::D, 3).unwrap(),
            vec![r(2, 1), r(1, 1), r(0, 1)]
        );
        assert_eq!(
            weyl_vector(Family::A, 2).unwrap(),
            vec![r(1, 1), r(0, 1), r(-1, 1)]
        );
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for family in [Family::A, Family::B, Family::D] {
            for rank in family.min_rank()..=8 {
                let rs = RootSystem::new(family, rank).unwrap();
                let rho = rs.weyl_vector();
                for alpha in rs.simple_roots() {
                    let alpha: Vec<_> = alpha.iter().map(|&c| r(c, 1)).collect();
                    let coroot_pairing = rs.form(&rho, &alpha) * 2 / rs.form(&alpha, &alpha);
                    assert_eq!(coroot_pairing, r(1, 1), "{family}{rank}");
                }
            }
        }
    }

    #[test]
    fn make_weight_examples() {
        assert!(make_weight(Family::D, 4, &[1, 1, 1, -1]).is_ok());
        assert_eq!(
            make_weight(Family::B, 3, &[1, 2, 0]),
            Err(Error::NotDominant {
                family: Family::B,
                index: 0
            })
        );
        assert!(make_weight(Family::A, 3, &[2, 1, 1]).is_ok());
        assert!(make_weight(Family::A, 2, &[1, -1]).is_err());
        assert!(make_weight(Family::B, 2, &[1, -1]).is_err());
        assert!(make_weight(Family::D, 3, &[1, 2, 2]).is_err());
        assert_eq!(
            make_weight(Family::D, 3, &[2, 1, -2]),
            Err(Error::NotDominant {
                family: Family::D,
                index: 2
            })
        );
        assert_eq!(
            make_weight(Family::B, 2, &[1]),
            Err(Error::Length {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn a_weights_get_trailing_zero() {
        let w = make_weight(Family::A, 2, &[2, 1]).unwrap();
        assert_eq!(w.ambient(), vec![2, 1, 0]);
    }

    proptest! {
        #[test]
        fn d_dominance_is_sign_symmetric(rank in 2usize..6, raw in proptest::collection::vec(-4i64..5, 6)) {
            let mut coords = raw[..rank].to_vec();
            let accepted = make_weight(Family::D, rank, &coords).is_ok();
            coords[rank - 1] = -coords[rank - 1];
            prop_assert_eq!(accepted, make_weight(Family::D, rank, &coords).is_ok());
        }
    }
}
