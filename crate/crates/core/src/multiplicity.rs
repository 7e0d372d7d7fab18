//! Weight multiplicities of `V(mu)` by Freudenthal's recursion.
//!
//! With `c(lambda) = |mu + rho|^2 - |lambda + rho|^2 = <mu - lambda, mu + lambda + 2 rho>`
//! the recursion reads
//!
//! ```text
//! c(lambda) m(lambda) = 2 sum_{alpha > 0} sum_{k >= 1} m(lambda + k alpha) <lambda + k alpha, alpha>
//! ```
//!
//! Both sides are computed with the integer form of
//! [`RootSystem::scaled_form`], so the whole table is exact integer arithmetic.
//! Candidates are `mu` minus sums of positive roots with `c(lambda) > 0`,
//! processed in decreasing `<lambda, 2 rho>`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::rootsys::{DominantWeight, Family, RootSystem};
use crate::weyldim::dimension;
use crate::{Error, Result};

/// Largest `dim V(mu)` for which a table is built unless told otherwise.
pub const DEFAULT_CEILING: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    root_system: RootSystem,
    highest: DominantWeight,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiplicityTable {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn highest(&self) -> &DominantWeight {
        &self.highest
    }

    /// Weights in ambient coordinates mapped to positive multiplicities.
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities, which is `dim V(mu)`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Multiplicity of the zero weight. For type A the zero weight of the
    /// quotient lattice is the constant ambient vector.
    pub fn zero_weight_mult(&self) -> u64 {
        self.entries
            .iter()
            .find(|(w, _)| is_zero_weight(self.root_system.family(), w))
            .map_or(0, |(_, &m)| m)
    }
}

fn is_zero_weight(family: Family, weight: &[i64]) -> bool {
    match family {
        Family::A => weight.windows(2).all(|w| w[0] == w[1]),
        Family::B | Family::D => weight.iter().all(|&c| c == 0),
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_scaled(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

pub fn freudenthal_table(
    rs: &RootSystem,
    mu: &DominantWeight,
    ceiling: u64,
) -> Result<WeightMultiplicityTable> {
    if mu.family() != rs.family() || mu.rank() != rs.rank() {
        return Err(Error::Unsupported("weight and root system differ"));
    }
    let dim = dimension(mu);
    if dim.to_u64().is_none_or(|d| d > ceiling) {
        return Err(Error::Ceiling {
            dim: dim.to_string(),
            ceiling,
        });
    }

    let top = mu.ambient();
    let two_rho = rs.doubled_rho();
    let height = |w: &[i64]| rs.scaled_form(w, two_rho);
    let top_height = height(&top);
    let shifted_top = add_scaled(&top, two_rho, 1);
    // |mu + rho|^2 - |lambda + rho|^2, scaled
    let casimir_gap = |w: &[i64]| {
        let plus: Vec<i64> = shifted_top.iter().zip(w).map(|(a, b)| a + b).collect();
        rs.scaled_form(&sub(&top, w), &plus)
    };

    let mut entries: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut queue: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
    queue.insert((top_height, top.clone()));

    while let Some((_, lambda)) = queue.pop_last() {
        let mult = if lambda == top {
            1
        } else {
            let mut rhs: i128 = 0;
            for alpha in rs.positive_roots() {
                for k in 1.. {
                    let up = add_scaled(&lambda, alpha, k);
                    if height(&up) > top_height {
                        break;
                    }
                    if let Some(&m) = entries.get(&up) {
                        rhs += m as i128 * rs.scaled_form(&up, alpha) as i128;
                    }
                }
            }
            rhs *= 2;
            let gap = casimir_gap(&lambda) as i128;
            if rhs % gap != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal quotient {rhs}/{gap} is not integral at {lambda:?}"
                )));
            }
            u64::try_from(rhs / gap)
                .map_err(|_| Error::Internal(format!("negative multiplicity at {lambda:?}")))?
        };
        if mult == 0 {
            continue;
        }
        for alpha in rs.positive_roots() {
            let down = sub(&lambda, alpha);
            if casimir_gap(&down) > 0 && !entries.contains_key(&down) {
                queue.insert((height(&down), down));
            }
        }
        entries.insert(lambda, mult);
    }

    Ok(WeightMultiplicityTable {
        root_system: rs.clone(),
        highest: mu.clone(),
        entries,
    })
}

/// Multiplicity of the zero weight in `V(mu)`, `0` if it is not a weight.
pub fn zero_weight_mult(rs: &RootSystem, mu: &DominantWeight, ceiling: u64) -> Result<u64> {
    Ok(freudenthal_table(rs, mu, ceiling)?.zero_weight_mult())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn table(family: Family, rank: usize, mu: &[i64]) -> WeightMultiplicityTable {
        let rs = RootSystem::new(family, rank).unwrap();
        let w = DominantWeight::new(family, rank, mu.to_vec()).unwrap();
        freudenthal_table(&rs, &w, DEFAULT_CEILING).unwrap()
    }

    #[test]
    fn a2_adjoint() {
        let t = table(Family::A, 2, &[2, 1]);
        assert_eq!(t.entries().len(), 7);
        assert_eq!(t.total(), 8);
        assert_eq!(t.multiplicity(&[1, 1, 1]), 2);
        assert_eq!(t.entries().values().filter(|&&m| m == 1).count(), 6);
        assert_eq!(t.zero_weight_mult(), 2);
    }

    #[test]
    fn b2_standard() {
        let t = table(Family::B, 2, &[1, 0]);
        let weights: Vec<_> = t.entries().keys().cloned().collect();
        assert_eq!(
            weights,
            vec![vec![-1, 0], vec![0, -1], vec![0, 0], vec![0, 1], vec![1, 0]]
        );
        assert!(t.entries().values().all(|&m| m == 1));
    }

    #[test]
    fn d2_self_dual_two_forms() {
        let t = table(Family::D, 2, &[1, 1]);
        assert_eq!(t.entries().len(), 3);
        assert_eq!(t.total(), 3);
    }

    #[test]
    fn zero_weight_examples() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let std = DominantWeight::new(Family::A, 2, vec![1, 0]).unwrap();
        assert_eq!(zero_weight_mult(&a2, &std, DEFAULT_CEILING).unwrap(), 0);
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let adj = DominantWeight::new(Family::A, 3, vec![2, 1, 1]).unwrap();
        assert_eq!(zero_weight_mult(&a3, &adj, DEFAULT_CEILING).unwrap(), 3);
    }

    #[test]
    fn trivial_representation() {
        let t = table(Family::D, 3, &[0, 0, 0]);
        assert_eq!(t.total(), 1);
        assert_eq!(t.zero_weight_mult(), 1);
    }

    #[test]
    fn ceiling_is_enforced() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let w = DominantWeight::new(Family::B, 3, vec![2, 0, 0]).unwrap();
        assert_eq!(
            freudenthal_table(&rs, &w, 20),
            Err(Error::Ceiling {
                dim: "27".into(),
                ceiling: 20
            })
        );
    }

    #[test]
    fn b2_adjoint_has_rank_zero_weights() {
        let t = table(Family::B, 2, &[1, 1]);
        assert_eq!(t.total(), 10);
        assert_eq!(t.zero_weight_mult(), 2);
    }
}
