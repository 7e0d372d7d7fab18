//! Dimension of `V(mu)^H` for the diagonal subgroup `H`.
//!
//! For `SO(n)`, `H` is the group of diagonal sign matrices of determinant 1,
//! of order `2^{n-1}`. An element with `2k` entries `-1` is conjugate in
//! `SO(n)` to the torus point with `k` coordinates `-1` (a rotation by `pi` in
//! `k` coordinate planes), so averaging the character over `H` collapses to
//! `floor(n/2) + 1` evaluations weighted by `C(n, 2k)`. The quotient by
//! `2^{n-1}` is checked to be an exact nonnegative integer.
//!
//! For `SU(n)`, `H` is the full diagonal torus and `V^H` is the zero-weight
//! space.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::multiplicity::{freudenthal_table, WeightMultiplicityTable};
use crate::rootsys::{DominantWeight, Family, RootSystem};
use crate::{Error, Result};

/// One conjugacy class of `H` inside `SO(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignClass {
    pub ambient_n: usize,
    /// Number of `-1` pairs: the class has `2k` diagonal entries `-1`.
    pub minus_pairs: usize,
    /// `C(n, 2k)`.
    pub class_size: BigUint,
    /// `+-1` torus coordinates, the first `k` of them `-1`.
    pub torus_point: Vec<i64>,
}

/// The classes of `H` in `SO(n)`, `n >= 3`. Their sizes add up to `2^{n-1}`.
pub fn sign_classes(n: usize) -> Result<Vec<SignClass>> {
    let (_, rank) = so_family(n)?;
    Ok((0..=n / 2)
        .map(|k| {
            let mut torus_point = alloc::vec![1i64; rank];
            torus_point[..k].iter_mut().for_each(|t| *t = -1);
            SignClass {
                ambient_n: n,
                minus_pairs: k,
                class_size: binomial(BigUint::from(n), BigUint::from(2 * k)),
                torus_point,
            }
        })
        .collect())
}

/// Root system of `SO(n)`: `B_{(n-1)/2}` for odd `n`, `D_{n/2}` for even `n`.
pub fn so_family(n: usize) -> Result<(Family, usize)> {
    if n < 3 {
        return Err(Error::Unsupported(
            "SO(n) fixed-point computations need n >= 3",
        ));
    }
    Ok(if n.is_multiple_of(2) {
        (Family::D, n / 2)
    } else {
        (Family::B, n / 2)
    })
}

/// `chi_mu(t) = sum_lambda m_lambda prod_i t_i^{lambda_i}` at a sign torus point.
pub fn char_at_sign_class(table: &WeightMultiplicityTable, class: &SignClass) -> Result<i64> {
    let rs = table.root_system();
    if rs.family() == Family::A {
        return Err(Error::Unsupported(
            "sign classes are defined for SO(n); use the zero weight for SU(n)",
        ));
    }
    if class.torus_point.len() != rs.rank() {
        return Err(Error::Unsupported(
            "sign class and table have different ranks",
        ));
    }
    Ok(table
        .entries()
        .iter()
        .map(|(weight, &m)| {
            let negative = weight
                .iter()
                .zip(&class.torus_point)
                .filter(|(_, &t)| t == -1)
                .map(|(c, _)| c)
                .sum::<i64>();
            if negative.rem_euclid(2) == 0 {
                m as i64
            } else {
                -(m as i64)
            }
        })
        .sum())
}

/// `dim V^H` from an already built table of an `SO(n)` representation.
pub fn fixed_dim_from_table(table: &WeightMultiplicityTable) -> Result<u64> {
    let rs = table.root_system();
    let n = rs.family().group_n(rs.rank());
    if rs.family() == Family::A {
        return Ok(table.zero_weight_mult());
    }
    let mut total = BigInt::zero();
    for class in sign_classes(n)? {
        let chi = char_at_sign_class(table, &class)?;
        total += BigInt::from(class.class_size) * chi;
    }
    let order = BigInt::one() << (n - 1);
    let (q, r) = total.div_rem(&order);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "character average {total}/{order} for {} is not a nonnegative integer",
            table.highest()
        )));
    }
    q.to_u64()
        .ok_or_else(|| Error::Internal(format!("fixed dimension {q} overflows")))
}

/// `dim V(mu)^H` for any supported family.
pub fn fixed_dim(weight: &DominantWeight, ceiling: u64) -> Result<u64> {
    let rs = RootSystem::new(weight.family(), weight.rank())?;
    fixed_dim_from_table(&freudenthal_table(&rs, weight, ceiling)?)
}

/// `dim V(mu)^H` for `SO(n)`, `mu` dominant for `B_{(n-1)/2}` or `D_{n/2}`.
pub fn fixed_subspace_dim_so(n: usize, mu: &[i64], ceiling: u64) -> Result<u64> {
    let (family, rank) = so_family(n)?;
    fixed_dim(&DominantWeight::new(family, rank, mu.to_vec())?, ceiling)
}

/// `dim V(mu)^H` for `SU(n)`, i.e. the zero-weight multiplicity.
pub fn fixed_subspace_dim_su(n: usize, mu: &[i64], ceiling: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Rank {
            family: Family::A,
            rank: n.saturating_sub(1),
        });
    }
    fixed_dim(
        &DominantWeight::new(Family::A, n - 1, mu.to_vec())?,
        ceiling,
    )
}

/// Necessary lattice condition for `V(mu)^H != 0`; no table needed.
///
/// D: `sum mu_i` even. A: `n | sum mu_i`. B: no obstruction.
pub fn parity_filter(family: Family, n: usize, mu: &[i64]) -> bool {
    let sum: i64 = mu.iter().sum();
    match family {
        Family::D => sum % 2 == 0,
        Family::A => sum.rem_euclid(n as i64) == 0,
        Family::B => true,
    }
}
