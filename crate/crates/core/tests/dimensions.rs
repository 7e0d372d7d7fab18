use flagdim_core::rootsys::{make_weight, DominantWeight, Family, RootSystem};
use flagdim_core::weyldim::{dim_a, dim_b, dim_d, dim_generic, dimension};

/// Dominant integral weights with every |coordinate| <= `max`, by plain nested
/// iteration over decreasing sequences.
fn dominant_box(family: Family, rank: usize, max: i64) -> Vec<DominantWeight> {
    fn rec(prefix: &mut Vec<i64>, rank: usize, max: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        let hi = prefix.last().copied().unwrap_or(max);
        for v in (0..=hi).rev() {
            prefix.push(v);
            rec(prefix, rank, max, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), rank, max, &mut raw);
    let mut out = Vec::new();
    for coords in raw {
        if family == Family::D && coords[rank - 1] != 0 {
            let mut neg = coords.clone();
            neg[rank - 1] = -neg[rank - 1];
            out.push(make_weight(family, rank, &neg).unwrap());
        }
        out.push(make_weight(family, rank, &coords).unwrap());
    }
    out
}

#[test]
fn product_formulas_agree_with_weyl_oracle() {
    let mut checked = 0;
    for family in [Family::A, Family::B, Family::D] {
        for rank in family.min_rank()..=6 {
            let rs = RootSystem::new(family, rank).unwrap();
            for w in dominant_box(family, rank, 6) {
                let per_family = match family {
                    Family::A => dim_a(rank, w.coords()),
                    Family::B => dim_b(rank, w.coords()),
                    Family::D => dim_d(rank, w.coords()),
                }
                .unwrap();
                assert_eq!(
                    per_family,
                    dim_generic(&rs, &w).unwrap(),
                    "{family}{rank} {w}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 5000, "only {checked} weights");
}

#[test]
fn d_mirror_preserves_dimension() {
    for rank in 2..=6 {
        for w in dominant_box(Family::D, rank, 5) {
            assert_eq!(dimension(&w), dimension(&w.d_mirror().unwrap()));
        }
    }
}

#[test]
fn b1_is_so3() {
    for k in 0..=20i64 {
        assert_eq!(dim_b(1, &[k]).unwrap(), 2 * k as u64 + 1);
    }
}
