use std::collections::HashMap;
use std::sync::Mutex;

use flagdim_core::weyldim::{dim_doubled, DimensionSource};
use flagdim_core::Family;
use num_bigint::BigUint;

type Key = (Family, usize, Vec<i64>);

/// Thread-safe memo of `dim V(mu)` keyed by family, rank and `2 mu`.
#[derive(Debug, Default)]
pub struct DimCache {
    entries: Mutex<HashMap<Key, BigUint>>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl DimensionSource for DimCache {
    fn doubled_dim(&self, family: Family, rank: usize, doubled: &[i64]) -> BigUint {
        let key = (family, rank, doubled.to_vec());
        if let Some(hit) = self.entries.lock().expect("cache lock poisoned").get(&key) {
            return hit.clone();
        }
        // computed outside the lock; a racing insert stores the same value
        let value = dim_doubled(family, rank, doubled);
        self.entries
            .lock()
            .expect("cache lock poisoned")
            .insert(key, value.clone());
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagdim_core::classify::{enumerate_weights, enumerate_weights_with};
    use rayon::prelude::*;

    #[test]
    fn cached_enumeration_matches_direct() {
        let cache = DimCache::new();
        for family in [Family::A, Family::B, Family::D] {
            let bound = BigUint::from(300u32);
            let direct = enumerate_weights(family, 4, &bound).unwrap();
            let cached = enumerate_weights_with(&cache, family, 4, &bound).unwrap();
            assert_eq!(direct, cached);
        }
        assert!(!cache.is_empty());
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = DimCache::new();
        let results: Vec<BigUint> = (0..64)
            .into_par_iter()
            .map(|i| cache.doubled_dim(Family::B, 3, &[2 * (i % 5), 0, 0]))
            .collect();
        for (i, d) in results.iter().enumerate() {
            assert_eq!(*d, dim_doubled(Family::B, 3, &[2 * (i as i64 % 5), 0, 0]));
        }
        assert_eq!(cache.len(), 5);
    }
}
