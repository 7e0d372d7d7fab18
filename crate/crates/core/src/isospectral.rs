//! Isospectral models of flag manifolds and their exact dimension counts.
//!
//! A flag of type `(n_1, ..., n_r)` in `R^n` (or `C^n`) is sent to the matrix
//! `Q A Q^*`, where `A = diag(a_1 I_{n_1}, ..., a_r I_{n_r})` has distinct
//! eigenvalues and trace zero. The stabilizer of `A` is block diagonal, so the
//! orbit has dimension `n(n-1)/2 - sum n_i(n_i-1)/2` over the reals and
//! `n^2 - sum n_i^2` over the complex numbers. Here the stabilizer is computed
//! independently, as the kernel of `X -> XA - AX` on `so(n)` / `su(n)`.
//!
//! The second half of the module handles harmonic polynomials in three
//! variables, the irreducible representations of `SO(3)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};

use crate::linalg::RationalMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "real",
            Field::Complex => "complex",
        })
    }
}

impl core::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" | "R" => Ok(Field::Real),
            "complex" | "C" => Ok(Field::Complex),
            _ => Err(Error::Unsupported("field must be real or complex")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsospectralModel {
    field: Field,
    partition: Vec<usize>,
    eigenvalues: Vec<Rational64>,
}

impl IsospectralModel {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    pub fn eigenvalues(&self) -> &[Rational64] {
        &self.eigenvalues
    }

    pub fn n(&self) -> usize {
        self.partition.iter().sum()
    }

    /// Diagonal of `A`: `a_i` repeated `n_i` times.
    pub fn diagonal(&self) -> Vec<Rational64> {
        self.partition
            .iter()
            .zip(&self.eigenvalues)
            .flat_map(|(&k, &a)| core::iter::repeat_n(a, k))
            .collect()
    }

    /// Real dimension of `SO(n)` or `SU(n)`.
    pub fn group_dim(&self) -> usize {
        let n = self.n();
        match self.field {
            Field::Real => n * (n - 1) / 2,
            Field::Complex => n * n - 1,
        }
    }

    /// `sum n_i(n_i-1)/2` or `sum n_i^2 - 1`.
    pub fn stabilizer_closed_form(&self) -> usize {
        match self.field {
            Field::Real => self.partition.iter().map(|k| k * (k - 1) / 2).sum(),
            Field::Complex => self.partition.iter().map(|k| k * k).sum::<usize>() - 1,
        }
    }

    /// `n(n-1)/2 - sum n_i(n_i-1)/2` or `n^2 - sum n_i^2`.
    pub fn orbit_closed_form(&self) -> usize {
        self.group_dim() - self.stabilizer_closed_form()
    }
}

/// `a_i = r + 1 - 2i` shifted so that `sum a_i n_i = 0`.
pub fn default_eigenvalues(partition: &[usize]) -> Vec<Rational64> {
    let r = partition.len() as i64;
    let n: i64 = partition.iter().map(|&k| k as i64).sum();
    let raw: Vec<i64> = (1..=r).map(|i| r + 1 - 2 * i).collect();
    let weighted: i64 = raw.iter().zip(partition).map(|(a, &k)| a * k as i64).sum();
    let shift = Rational64::new(-weighted, n.max(1));
    raw.into_iter()
        .map(|a| Rational64::from_integer(a) + shift)
        .collect()
}

pub fn build_model(
    field: Field,
    partition: &[usize],
    eigenvalues: Option<Vec<Rational64>>,
) -> Result<IsospectralModel> {
    if partition.len() < 2 {
        return Err(Error::Model(
            "a proper flag needs at least two blocks; one block forces A = 0",
        ));
    }
    if partition.contains(&0) {
        return Err(Error::Model("block sizes must be positive"));
    }
    let eigenvalues = eigenvalues.unwrap_or_else(|| default_eigenvalues(partition));
    if eigenvalues.len() != partition.len() {
        return Err(Error::Model("one eigenvalue per block is required"));
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        if eigenvalues[i + 1..].contains(a) {
            return Err(Error::Model("eigenvalues must be pairwise distinct"));
        }
    }
    let trace: Rational64 = eigenvalues
        .iter()
        .zip(partition)
        .map(|(a, &k)| a * Rational64::from_integer(k as i64))
        .sum();
    if !trace.is_zero() {
        return Err(Error::Model("sum a_i n_i must vanish"));
    }
    Ok(IsospectralModel {
        field,
        partition: partition.to_vec(),
        eigenvalues,
    })
}

fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Matrix unit pattern of a basis element of the Lie algebra: entries
/// `(row, col, real, imag)`.
type Generator = Vec<(usize, usize, i64, i64)>;

fn lie_algebra_basis(field: Field, n: usize) -> Vec<Generator> {
    let mut basis = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            basis.push(vec![(p, q, 1, 0), (q, p, -1, 0)]);
            if field == Field::Complex {
                basis.push(vec![(p, q, 0, 1), (q, p, 0, 1)]);
            }
        }
    }
    if field == Field::Complex {
        for p in 0..n - 1 {
            basis.push(vec![(p, p, 0, 1), (n - 1, n - 1, 0, -1)]);
        }
    }
    basis
}

/// Dimension of the stabilizer of `A` in `SO(n)` / `SU(n)`: the kernel of
/// `X -> XA - AX` on the Lie algebra, by exact elimination. Complex matrices
/// are split into real and imaginary parts.
pub fn stabilizer_dim_exact(model: &IsospectralModel) -> usize {
    let n = model.n();
    let diag: Vec<BigRational> = model.diagonal().into_iter().map(big).collect();
    let basis = lie_algebra_basis(model.field, n);
    let mut map = RationalMatrix::zeros(2 * n * n, basis.len());
    for (col, generator) in basis.iter().enumerate() {
        for &(p, q, re, im) in generator {
            // (XA - AX)_{pq} = X_{pq} (a_q - a_p) for diagonal A
            let scale = &diag[q] - &diag[p];
            for (part, value) in [(0, re), (1, im)] {
                if value != 0 {
                    let row = part * n * n + p * n + q;
                    let entry = map.get(row, col) + &scale * BigInt::from(value);
                    map.set(row, col, entry);
                }
            }
        }
    }
    map.kernel_dim()
}

/// Orbit dimension `dim G - dim Stab(A)`, checked against the closed form.
pub fn orbit_dim(model: &IsospectralModel) -> Result<usize> {
    let stab = stabilizer_dim_exact(model);
    let orbit = model.group_dim() - stab;
    if orbit != model.orbit_closed_form() {
        return Err(Error::Internal(alloc::format!(
            "orbit dimension {orbit} of {:?} disagrees with closed form {}",
            model.partition,
            model.orbit_closed_form()
        )));
    }
    Ok(orbit)
}

/// Ordered compositions of `n` into at least two positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for part in 1..=rest {
            current.push(part);
            extend(rest - part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// Exponent triples `(d_1, d_2, d_3)` with `d_1 + d_2 + d_3 = k`.
pub fn monomials(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

/// The group `H = {I, diag(1,-1,-1), diag(-1,1,-1), diag(-1,-1,1)}` in `SO(3)`.
pub const SO3_DIAGONAL_SUBGROUP: [[i64; 3]; 4] = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]];

/// `f(g^{-1} x) = f(x)` for every `g` in `H`, for the monomial `x^d`.
pub fn monomial_fixed_by_h(d: &[usize; 3]) -> bool {
    SO3_DIAGONAL_SUBGROUP.iter().all(|signs| {
        let odd_flips = d
            .iter()
            .zip(signs)
            .filter(|(&e, &s)| s < 0 && e % 2 == 1)
            .count();
        odd_flips % 2 == 0
    })
}

fn laplacian_matrix(k: usize, domain: &[[usize; 3]]) -> RationalMatrix {
    if k < 2 {
        return RationalMatrix::zeros(0, domain.len());
    }
    let target = monomials(k - 2);
    let mut rows = vec![vec![0i64; domain.len()]; target.len()];
    for (col, d) in domain.iter().enumerate() {
        for i in 0..3 {
            if d[i] >= 2 {
                let mut lowered = *d;
                lowered[i] -= 2;
                let row = target
                    .iter()
                    .position(|t| *t == lowered)
                    .expect("degree k-2");
                rows[row][col] += (d[i] * (d[i] - 1)) as i64;
            }
        }
    }
    if rows.is_empty() {
        RationalMatrix::zeros(0, domain.len())
    } else {
        RationalMatrix::from_i64_rows(&rows)
    }
}

/// `dim H_k`: kernel of the Laplacian on degree-`k` polynomials.
pub fn harmonic_dim(k: usize) -> usize {
    laplacian_matrix(k, &monomials(k)).kernel_dim()
}

/// `dim H_k^H`. `H` acts diagonally on monomials, so the fixed harmonic
/// polynomials are the kernel of the Laplacian restricted to the span of the
/// `H`-fixed monomials.
pub fn harmonic_fixed_dim(k: usize) -> usize {
    let fixed: Vec<[usize; 3]> = monomials(k)
        .into_iter()
        .filter(monomial_fixed_by_h)
        .collect();
    laplacian_matrix(k, &fixed).kernel_dim()
}

/// Quadratic form on `R^3` as coefficients of
/// `x1^2, x2^2, x3^2, x1x2, x1x3, x2x3`.
pub type Quadratic = [f64; 6];

/// The symmetric matrix `M` with `f(x) = x^T M x`; traceless exactly when
/// `f` is harmonic.
pub fn quadratic_to_symmetric(f: &Quadratic) -> [[f64; 3]; 3] {
    [
        [f[0], f[3] / 2.0, f[4] / 2.0],
        [f[3] / 2.0, f[1], f[5] / 2.0],
        [f[4] / 2.0, f[5] / 2.0, f[2]],
    ]
}

/// `(rho_2(g) f)(x) = f(g^{-1} x)` by expanding the substitution
/// `x -> g^T x` monomial by monomial, for `g` orthogonal.
pub fn act_on_quadratic(g: &[[f64; 3]; 3], f: &Quadratic) -> Quadratic {
    // y = g^{-1} x = g^T x, y_i = sum_j g[j][i] x_j
    let pairs = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];
    let slot = |j: usize, l: usize| match (j.min(l), j.max(l)) {
        (0, 0) => 0,
        (1, 1) => 1,
        (2, 2) => 2,
        (0, 1) => 3,
        (0, 2) => 4,
        _ => 5,
    };
    let mut out = [0.0; 6];
    for (coef, &(a, b)) in f.iter().zip(&pairs) {
        if *coef == 0.0 {
            continue;
        }
        for j in 0..3 {
            for l in 0..3 {
                out[slot(j, l)] += coef * g[j][a] * g[l][b];
            }
        }
    }
    out
}

/// `sum a_i n_i` for integer eigenvalue candidates, used by random draws.
pub fn is_traceless(partition: &[usize], eigenvalues: &[Rational64]) -> bool {
    eigenvalues
        .iter()
        .zip(partition)
        .map(|(a, &k)| a * Rational64::from_integer(k as i64))
        .sum::<Rational64>()
        .abs()
        .is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn build_examples() {
        let m = build_model(Field::Real, &[2, 2], Some(vec![r(1), r(-1)])).unwrap();
        assert_eq!(m.diagonal(), vec![r(1), r(1), r(-1), r(-1)]);
        assert!(build_model(Field::Real, &[2, 2, 1], Some(vec![r(1), r(-1), r(0)])).is_ok());
        assert_eq!(
            build_model(Field::Real, &[2, 2], Some(vec![r(1), r(1)])),
            Err(Error::Model("eigenvalues must be pairwise distinct"))
        );
        assert!(build_model(Field::Real, &[5], None).is_err());
        assert!(build_model(Field::Real, &[2, 1], Some(vec![r(1), r(1) / 2])).is_err());
        assert!(build_model(Field::Real, &[2, 0], None).is_err());
    }

    #[test]
    fn default_eigenvalues_are_traceless_and_distinct() {
        for n in 2..=8 {
            for p in compositions(n) {
                let m = build_model(Field::Complex, &p, None).unwrap();
                assert!(is_traceless(&p, m.eigenvalues()));
            }
        }
        assert_eq!(default_eigenvalues(&[1, 1]), vec![r(1), r(-1)]);
        assert_eq!(
            default_eigenvalues(&[2, 1]),
            vec![Rational64::new(2, 3), Rational64::new(-4, 3)]
        );
    }

    #[test]
    fn stabilizer_examples() {
        let m = build_model(Field::Real, &[2, 2], Some(vec![r(1), r(-1)])).unwrap();
        assert_eq!(stabilizer_dim_exact(&m), 2);
        let m = build_model(Field::Real, &[2, 2, 1], Some(vec![r(1), r(-1), r(0)])).unwrap();
        assert_eq!(stabilizer_dim_exact(&m), 2);
        let m = build_model(Field::Complex, &[1, 1, 1], Some(vec![r(1), r(0), r(-1)])).unwrap();
        assert_eq!(stabilizer_dim_exact(&m), 2);
        let m = build_model(Field::Real, &[1, 1], Some(vec![r(1), r(-1)])).unwrap();
        assert_eq!(stabilizer_dim_exact(&m), 0);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbit_dim(&build_model(Field::Real, &[2, 2], None).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            orbit_dim(&build_model(Field::Real, &[2, 2, 1], None).unwrap()).unwrap(),
            8
        );
        assert_eq!(
            orbit_dim(&build_model(Field::Complex, &[1, 1, 1], None).unwrap()).unwrap(),
            6
        );
    }

    #[test]
    fn composition_counts() {
        for n in 1..=8usize {
            assert_eq!(compositions(n).len(), (1usize << (n - 1)) - 1);
        }
    }

    #[test]
    fn harmonic_dimensions() {
        for k in 0..=11 {
            assert_eq!(harmonic_dim(k), 2 * k + 1, "k = {k}");
        }
    }

    #[test]
    fn harmonic_fixed_examples() {
        assert_eq!(harmonic_fixed_dim(2), 2);
        assert_eq!(harmonic_fixed_dim(4), 3);
        assert_eq!(harmonic_fixed_dim(1), 0);
        assert_eq!(harmonic_fixed_dim(0), 1);
    }

    #[test]
    fn xyz_is_fixed_and_harmonic() {
        // every element of H flips exactly two signs
        assert!(monomial_fixed_by_h(&[1, 1, 1]));
        assert!(!monomial_fixed_by_h(&[1, 0, 0]));
        assert!(!monomial_fixed_by_h(&[2, 1, 0]));
        assert_eq!(harmonic_fixed_dim(3), 1);
    }

    #[test]
    fn quarter_turn_negates_x1sq_minus_x2sq() {
        let g = [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
        let f = [1.0, -1.0, 0.0, 0.0, 0.0, 0.0];
        let moved = act_on_quadratic(&g, &f);
        assert_eq!(quadratic_to_symmetric(&moved)[0][0], -1.0);
        assert_eq!(quadratic_to_symmetric(&moved)[1][1], 1.0);
    }
}
