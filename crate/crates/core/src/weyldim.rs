//! Dimensions of irreducible representations `V(mu)`.
//!
//! The per-family product formulas are evaluated as one big-integer numerator
//! over one big-integer denominator, with a single exact division at the end.
//! [`dim_generic`] is the independent route: the Weyl dimension formula as a
//! product over positive roots in exact rationals.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::isospectral::Field;
use crate::rootsys::{DominantWeight, Family, RootSystem};
use crate::{Error, Result};

/// `dim V(mu)`, always at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepDimension(BigUint);

impl RepDimension {
    pub fn new(value: BigUint) -> Self {
        RepDimension(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for RepDimension {
    fn from(v: u64) -> Self {
        RepDimension(BigUint::from(v))
    }
}

impl PartialEq<u64> for RepDimension {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for RepDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Evaluates dimensions for the enumerator. Implementations may cache.
pub trait DimensionSource {
    /// `dim V(mu)` where `doubled` holds the coordinates of `2 mu` in the
    /// family's own convention (length `rank`). Spin weights are allowed.
    fn doubled_dim(&self, family: Family, rank: usize, doubled: &[i64]) -> BigUint;
}

/// Straight evaluation of the product formula, no memoization.
#[derive(Debug, Clone, Copy, Default)]
pub struct Direct;

impl DimensionSource for Direct {
    fn doubled_dim(&self, family: Family, rank: usize, doubled: &[i64]) -> BigUint {
        dim_doubled(family, rank, doubled)
    }
}

struct Fraction {
    num: BigUint,
    den: BigUint,
}

impl Fraction {
    fn new() -> Self {
        Fraction {
            num: BigUint::one(),
            den: BigUint::one(),
        }
    }

    fn push(&mut self, num: i64, den: i64) {
        assert!(num > 0 && den > 0, "nonpositive factor {num}/{den}");
        self.num *= num as u64;
        self.den *= den as u64;
    }

    fn finish(self) -> BigUint {
        let (q, r) = self.num.div_rem(&self.den);
        assert!(r.is_zero(), "inexact dimension quotient");
        q
    }
}

/// Product formula on `2 mu`. Every factor of the formula is doubled in both
/// numerator and denominator, so half-integral (spin) weights evaluate exactly.
pub fn dim_doubled(family: Family, rank: usize, doubled: &[i64]) -> BigUint {
    let n = rank as i64;
    let m = doubled;
    let mut frac = Fraction::new();
    match family {
        Family::A => {
            // SU(n) with n = rank + 1: mu has n - 1 coordinates.
            let n = n + 1;
            for i in 1..n {
                for j in i + 1..n {
                    frac.push(
                        m[i as usize - 1] - m[j as usize - 1] + 2 * (j - i),
                        2 * (j - i),
                    );
                }
                frac.push(m[i as usize - 1] + 2 * (n - i), 2 * (n - i));
            }
        }
        Family::B => {
            for i in 1..=n {
                for j in i..=n {
                    let (a, b) = (m[i as usize - 1], m[j as usize - 1]);
                    if i < j {
                        frac.push(a - b + 2 * (j - i), 2 * (j - i));
                    }
                    frac.push(a + b + 2 * (2 * n + 1 - i - j), 2 * (2 * n + 1 - i - j));
                }
            }
        }
        Family::D => {
            for i in 1..=n {
                for j in i + 1..=n {
                    let (a, b) = (m[i as usize - 1], m[j as usize - 1]);
                    frac.push(a - b + 2 * (j - i), 2 * (j - i));
                    frac.push(a + b + 2 * (2 * n - i - j), 2 * (2 * n - i - j));
                }
            }
        }
    }
    frac.finish()
}

fn family_dim(family: Family, rank: usize, mu: &[i64]) -> Result<RepDimension> {
    let weight = DominantWeight::new(family, rank, mu.to_vec())?;
    Ok(dimension(&weight))
}

/// `SO(2n)`: `prod_{i<j} (mu_i - mu_j + j - i)/(j - i) * (mu_i + mu_j + 2n - i - j)/(2n - i - j)`.
pub fn dim_d(rank: usize, mu: &[i64]) -> Result<RepDimension> {
    family_dim(Family::D, rank, mu)
}

/// `SO(2n+1)`: like type D, with the second product over `i <= j` and `2n + 1`.
pub fn dim_b(rank: usize, mu: &[i64]) -> Result<RepDimension> {
    family_dim(Family::B, rank, mu)
}

/// `SU(rank + 1)`, with `mu` written in `rank` coordinates.
pub fn dim_a(rank: usize, mu: &[i64]) -> Result<RepDimension> {
    family_dim(Family::A, rank, mu)
}

/// Per-family product formula for an already validated weight.
pub fn dimension(weight: &DominantWeight) -> RepDimension {
    let doubled: Vec<i64> = weight.coords().iter().map(|c| 2 * c).collect();
    RepDimension(dim_doubled(weight.family(), weight.rank(), &doubled))
}

/// Weyl's formula `prod_{alpha > 0} <mu + rho, alpha> / <rho, alpha>` over the
/// root list of `rs`, in exact rationals.
pub fn dim_generic(rs: &RootSystem, weight: &DominantWeight) -> Result<RepDimension> {
    if weight.family() != rs.family() || weight.rank() != rs.rank() {
        return Err(Error::Unsupported("weight and root system differ"));
    }
    let rho = rs.weyl_vector();
    let shifted: Vec<Rational64> = weight
        .ambient()
        .iter()
        .zip(&rho)
        .map(|(&c, r)| Rational64::from_integer(c) + r)
        .collect();
    let mut acc = BigRational::one();
    for alpha in rs.positive_roots() {
        let alpha: Vec<Rational64> = alpha.iter().map(|&c| Rational64::from_integer(c)).collect();
        let num = rs.form(&shifted, &alpha);
        let den = rs.form(&rho, &alpha);
        acc *= BigRational::new(BigInt::from(*num.numer()), BigInt::from(*num.denom()));
        acc /= BigRational::new(BigInt::from(*den.numer()), BigInt::from(*den.denom()));
    }
    if !acc.is_integer() || !acc.is_positive() {
        return Err(Error::Internal(alloc::format!(
            "Weyl product for {weight} is not a positive integer"
        )));
    }
    let value = acc.to_integer().to_biguint().expect("positive");
    Ok(RepDimension(value))
}

/// Dimension of the traceless isospectral model: `(n+2)(n-1)/2` over the
/// reals, `n^2 - 1` over the complex numbers.
pub fn dim_isospectral(field: Field, n: usize) -> Result<RepDimension> {
    if n < 2 {
        return Err(Error::Model("isospectral model needs n >= 2"));
    }
    let n = n as u64;
    Ok(RepDimension::from(match field {
        Field::Real => (n + 2) * (n - 1) / 2,
        Field::Complex => n * n - 1,
    }))
}

/// The weight whose representation is the isospectral model of `SO(n)` or
/// `SU(n)`: `(2, 0, ..., 0)` or `(2, 1, ..., 1)`.
pub fn isospectral_weight(family: Family, rank: usize) -> Result<DominantWeight> {
    let mut coords = alloc::vec![0i64; rank];
    match family {
        Family::A => {
            coords.iter_mut().for_each(|c| *c = 1);
            coords[0] = 2;
        }
        Family::B | Family::D => coords[0] = 2,
    }
    DominantWeight::new(family, rank, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn d_examples() {
        assert_eq!(dim_d(4, &[1, 1, 1, 1]).unwrap(), 35);
        assert_eq!(dim_d(4, &[2, 0, 0, 0]).unwrap(), 35);
        assert_eq!(dim_d(2, &[2, 2]).unwrap(), 5);
        assert_eq!(dim_d(3, &[0, 0, 0]).unwrap(), 1);
        assert_eq!(dim_d(3, &[2, 0, 0]).unwrap(), 20);
    }

    #[test]
    fn b_examples() {
        assert_eq!(dim_b(2, &[2, 0]).unwrap(), 14);
        assert_eq!(dim_b(2, &[2, 1]).unwrap(), 35);
        assert_eq!(dim_b(3, &[2, 0, 0]).unwrap(), 27);
        assert_eq!(dim_b(3, &[1, 1, 0]).unwrap(), 21);
        assert_eq!(dim_b(4, &[1, 1, 1, 0]).unwrap(), 84);
    }

    #[test]
    fn a_examples() {
        assert_eq!(dim_a(2, &[2, 1]).unwrap(), 8);
        assert_eq!(dim_a(2, &[3, 3]).unwrap(), 10);
        assert_eq!(dim_a(3, &[2, 1, 1]).unwrap(), 15);
        assert_eq!(dim_a(1, &[2]).unwrap(), 3);
    }

    #[test]
    fn generic_examples() {
        let check = |family, rank, mu: &[i64], expected: u64| {
            let rs = RootSystem::new(family, rank).unwrap();
            let w = DominantWeight::new(family, rank, mu.to_vec()).unwrap();
            assert_eq!(dim_generic(&rs, &w).unwrap(), expected);
        };
        check(Family::B, 2, &[2, 0], 14);
        check(Family::D, 4, &[2, 0, 0, 0], 35);
        check(Family::A, 2, &[0, 0], 1);
    }

    #[test]
    fn isospectral_dims() {
        assert_eq!(dim_isospectral(Field::Real, 5).unwrap(), 14);
        assert_eq!(dim_isospectral(Field::Complex, 3).unwrap(), 8);
        assert_eq!(dim_isospectral(Field::Real, 2).unwrap(), 2);
        assert!(dim_isospectral(Field::Real, 1).is_err());
    }

    #[test]
    fn non_dominant_is_rejected() {
        assert!(matches!(dim_b(2, &[0, 1]), Err(Error::NotDominant { .. })));
        assert!(matches!(
            dim_d(3, &[1, 0, 2]),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn spin_weights_evaluate_through_doubled_coordinates() {
        // spinors: 2^n for B_n, 2^{n-1} for each half-spin of D_n
        assert_eq!(dim_doubled(Family::B, 3, &[1, 1, 1]), BigUint::from(8u32));
        assert_eq!(
            dim_doubled(Family::D, 4, &[1, 1, 1, -1]),
            BigUint::from(8u32)
        );
        assert_eq!(dim_doubled(Family::B, 1, &[1]), BigUint::from(2u32));
    }

    #[test]
    fn isospectral_weight_matches_model_dimension() {
        for n in 3..=12usize {
            let (family, rank) = if n % 2 == 0 {
                (Family::D, n / 2)
            } else {
                (Family::B, n / 2)
            };
            let w = isospectral_weight(family, rank).unwrap();
            assert_eq!(dimension(&w), dim_isospectral(Field::Real, n).unwrap());
        }
        for n in 2..=8usize {
            let w = isospectral_weight(Family::A, n - 1).unwrap();
            assert_eq!(dimension(&w), dim_isospectral(Field::Complex, n).unwrap());
        }
    }

    fn dominant_from_labels(family: Family, labels: &[i64]) -> Vec<i64> {
        // integral weights only: sum of labels from the right
        let rank = labels.len();
        let mut mu = vec![0i64; rank];
        let mut acc = 0;
        for i in (0..rank).rev() {
            acc += labels[i];
            mu[i] = acc;
        }
        if family == Family::D && rank >= 2 && labels[rank - 1] % 2 == 1 {
            mu[rank - 1] = -mu[rank - 1];
        }
        mu
    }

    proptest! {
        #[test]
        fn d_sign_symmetry(rank in 2usize..7, labels in proptest::collection::vec(0i64..5, 7)) {
            let mu = dominant_from_labels(Family::D, &labels[..rank]);
            let mut mirrored = mu.clone();
            mirrored[rank - 1] = -mirrored[rank - 1];
            prop_assert_eq!(dim_d(rank, &mu).unwrap(), dim_d(rank, &mirrored).unwrap());
        }

        #[test]
        fn adding_dominant_weight_increases_dimension(
            family in prop_oneof![Just(Family::A), Just(Family::B), Just(Family::D)],
            rank in 2usize..6,
            a in proptest::collection::vec(0i64..4, 6),
            b in proptest::collection::vec(0i64..4, 6),
        ) {
            let mu = dominant_from_labels(Family::A, &a[..rank]);
            let lambda = dominant_from_labels(Family::A, &b[..rank]);
            prop_assume!(lambda.iter().any(|&c| c != 0));
            let sum: Vec<i64> = mu.iter().zip(&lambda).map(|(x, y)| x + y).collect();
            let d_mu = family_dim(family, rank, &mu).unwrap();
            let d_sum = family_dim(family, rank, &sum).unwrap();
            prop_assert!(d_sum > d_mu);
        }
    }
}
