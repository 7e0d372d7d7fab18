//! Seeded floating-point checks of the isospectral embedding.
//!
//! `flag_roundtrip` samples `Q` from `SO(n)` or `SU(n)`, maps the flag spanned
//! by the column blocks of `Q` to `M = Q A Q^*`, recovers the eigenspaces of
//! `M` and compares them with the original blocks. `h2_iso_check` checks that
//! `f -> x^T phi(f) x` intertwines `SO(3)` on quadratic harmonics with
//! conjugation on traceless symmetric matrices.

use flagdim_core::isospectral::{
    act_on_quadratic, quadratic_to_symmetric, Field, IsospectralModel, Quadratic,
};
use nalgebra::{ComplexField, DMatrix, SymmetricEigen};
use num_rational::Rational64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Gram matrix of a recovered basis must be this close to the identity.
pub const ORTHONORMALITY_TOL: f64 = 1e-10;
/// Subspace distance between recovered and sampled flags.
pub const ROUNDTRIP_TOL: f64 = 1e-8;
/// Equivariance defect of the quadratic-harmonics isomorphism.
pub const H2_TOL: f64 = 1e-10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Scalars we can draw Gaussian matrices over.
pub trait Sample: ComplexField<RealField = f64> + Copy {
    fn gaussian<R: Rng>(rng: &mut R) -> Self;
}

impl Sample for f64 {
    fn gaussian<R: Rng>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

impl Sample for nalgebra::Complex<f64> {
    fn gaussian<R: Rng>(rng: &mut R) -> Self {
        nalgebra::Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    }
}

/// Haar-distributed element of `SO(n)` (real) or `SU(n)` (complex): QR of a
/// Gaussian matrix with the phases of `R` removed, then the determinant
/// rotated to 1 through the first column.
pub fn haar_special<T: Sample, R: Rng>(n: usize, rng: &mut R) -> DMatrix<T> {
    let g = DMatrix::<T>::from_fn(n, n, |_, _| T::gaussian(rng));
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let modulus = d.modulus();
        if modulus > 0.0 {
            let phase = d / T::from_real(modulus);
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    let det = q.determinant();
    let unit = det / T::from_real(det.modulus());
    for i in 0..n {
        q[(i, 0)] *= unit.conjugate();
    }
    q
}

/// An orthonormal basis per block, one flag `W_1 < W_1 + W_2 < ...`.
#[derive(Debug, Clone)]
pub struct FlagPoint<T: Sample> {
    pub blocks: Vec<DMatrix<T>>,
}

impl<T: Sample> FlagPoint<T> {
    /// Largest entry of `U^* U - I` over the concatenated basis.
    pub fn orthonormality_residual(&self) -> f64 {
        let cols: usize = self.blocks.iter().map(|b| b.ncols()).sum();
        let n = self.blocks.first().map_or(0, |b| b.nrows());
        let mut all = DMatrix::<T>::zeros(n, cols);
        let mut at = 0;
        for b in &self.blocks {
            all.view_mut((0, at), (n, b.ncols())).copy_from(b);
            at += b.ncols();
        }
        let gram = all.adjoint() * &all - DMatrix::<T>::identity(cols, cols);
        gram.iter().map(|z| z.modulus()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundtripReport {
    pub field: Field,
    pub partition: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub max_residual: f64,
    pub max_orthonormality: f64,
    /// Index of the sample with the largest residual.
    pub worst_sample: usize,
    pub passed: bool,
}

fn to_f64(r: &Rational64) -> f64 {
    r.to_f64().expect("finite rational")
}

fn split_blocks<T: Sample>(q: &DMatrix<T>, partition: &[usize]) -> Vec<DMatrix<T>> {
    let mut at = 0;
    partition
        .iter()
        .map(|&k| {
            let block = q.columns(at, k).into_owned();
            at += k;
            block
        })
        .collect()
}

/// Frobenius norm of the part of `u` outside the column span of the
/// orthonormal `basis`: `sqrt(sum sin^2)` of the principal angles.
fn subspace_distance<T: Sample>(basis: &DMatrix<T>, u: &DMatrix<T>) -> f64 {
    let projected = basis * (basis.adjoint() * u);
    (u - projected).norm()
}

/// Recover the flag of `M = Q A Q^*` from its eigenvectors. Eigenvalues are
/// grouped around the known `a_i` with half the minimum gap as threshold.
pub fn recover_flag<T: Sample>(
    m: DMatrix<T>,
    eigenvalues: &[f64],
    partition: &[usize],
) -> Option<FlagPoint<T>> {
    let mut gap = f64::INFINITY;
    for (i, a) in eigenvalues.iter().enumerate() {
        for b in &eigenvalues[i + 1..] {
            gap = gap.min((a - b).abs());
        }
    }
    let threshold = gap / 2.0;
    let eig = SymmetricEigen::new(m);
    let mut blocks = Vec::with_capacity(partition.len());
    for (&a, &k) in eigenvalues.iter().zip(partition) {
        let cols: Vec<usize> = (0..eig.eigenvalues.len())
            .filter(|&j| (eig.eigenvalues[j] - a).abs() < threshold)
            .collect();
        if cols.len() != k {
            return None;
        }
        blocks.push(eig.eigenvectors.select_columns(cols.iter()));
    }
    Some(FlagPoint { blocks })
}

fn roundtrip_generic<T: Sample>(
    model: &IsospectralModel,
    samples: usize,
    seed: u64,
) -> RoundtripReport {
    let n = model.n();
    let partition = model.partition().to_vec();
    let eigenvalues: Vec<f64> = model.eigenvalues().iter().map(to_f64).collect();
    let a = DMatrix::<T>::from_diagonal(&nalgebra::DVector::from_iterator(
        n,
        model.diagonal().iter().map(|r| T::from_real(to_f64(r))),
    ));
    let mut rng = rng(seed);
    let mut report = RoundtripReport {
        field: model.field(),
        partition: partition.clone(),
        samples,
        seed,
        max_residual: 0.0,
        max_orthonormality: 0.0,
        worst_sample: 0,
        passed: true,
    };
    for index in 0..samples {
        let q = haar_special::<T, _>(n, &mut rng);
        let m = &q * &a * q.adjoint();
        let (residual, ortho) = match recover_flag(m, &eigenvalues, &partition) {
            Some(flag) => {
                let residual = split_blocks(&q, &partition)
                    .iter()
                    .zip(&flag.blocks)
                    .map(|(sampled, recovered)| subspace_distance(sampled, recovered))
                    .fold(0.0, f64::max);
                (residual, flag.orthonormality_residual())
            }
            None => (f64::INFINITY, f64::INFINITY),
        };
        if residual > report.max_residual || index == 0 {
            report.worst_sample = index;
        }
        report.max_residual = report.max_residual.max(residual);
        report.max_orthonormality = report.max_orthonormality.max(ortho);
    }
    report.passed =
        report.max_residual < ROUNDTRIP_TOL && report.max_orthonormality < ORTHONORMALITY_TOL;
    report
}

/// Sample `samples` group elements and check that the flag survives the trip
/// through `Q A Q^*`.
pub fn flag_roundtrip(model: &IsospectralModel, samples: usize, seed: u64) -> RoundtripReport {
    assert!(samples >= 1, "at least one sample");
    match model.field() {
        Field::Real => roundtrip_generic::<f64>(model, samples, seed),
        Field::Complex => roundtrip_generic::<nalgebra::Complex<f64>>(model, samples, seed),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct H2Report {
    pub samples: usize,
    pub seed: u64,
    pub max_residual: f64,
    pub worst_sample: usize,
    pub passed: bool,
}

fn random_harmonic_quadratic<R: Rng>(rng: &mut R) -> Quadratic {
    let mut f: Quadratic = [0.0; 6];
    for c in f.iter_mut() {
        *c = rng.sample(StandardNormal);
    }
    f[2] = -f[0] - f[1];
    f
}

fn to_array(g: &DMatrix<f64>) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = g[(i, j)];
        }
    }
    out
}

/// Largest entry of `phi(rho_2(g) f) - g phi(f) g^T`.
pub fn h2_residual(g: &[[f64; 3]; 3], f: &Quadratic) -> f64 {
    let lhs = quadratic_to_symmetric(&act_on_quadratic(g, f));
    let phi = quadratic_to_symmetric(f);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    rhs += g[i][k] * phi[k][l] * g[j][l];
                }
            }
            worst = worst.max((lhs[i][j] - rhs).abs());
        }
    }
    worst
}

pub fn h2_iso_check(samples: usize, seed: u64) -> H2Report {
    assert!(samples >= 1, "at least one sample");
    let mut rng = rng(seed);
    let mut report = H2Report {
        samples,
        seed,
        max_residual: 0.0,
        worst_sample: 0,
        passed: true,
    };
    for index in 0..samples {
        let g = to_array(&haar_special::<f64, _>(3, &mut rng));
        let f = random_harmonic_quadratic(&mut rng);
        let residual = h2_residual(&g, &f);
        if residual > report.max_residual {
            report.max_residual = residual;
            report.worst_sample = index;
        }
    }
    report.passed = report.max_residual < H2_TOL;
    report
}

/// Distinct eigenvalues with `sum a_i n_i = 0`: integers in `[-9, 9]` for all
/// but the last block, which absorbs the trace as a rational.
pub fn random_eigenvalues<R: Rng>(partition: &[usize], rng: &mut R) -> Vec<Rational64> {
    let r = partition.len();
    loop {
        let mut values: Vec<Rational64> = (0..r - 1)
            .map(|_| Rational64::from_integer(rng.gen_range(-9..=9)))
            .collect();
        let partial: Rational64 = values
            .iter()
            .zip(partition)
            .map(|(a, &k)| a * Rational64::from_integer(k as i64))
            .sum();
        values.push(-partial / Rational64::from_integer(partition[r - 1] as i64));
        let distinct = (0..r).all(|i| !values[i + 1..].contains(&values[i]));
        if distinct {
            return values;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagdim_core::isospectral::{build_model, is_traceless};

    #[test]
    fn haar_samples_are_special_unitary() {
        let mut rng = rng(3);
        for n in 1..=6 {
            let q = haar_special::<f64, _>(n, &mut rng);
            assert!((q.determinant() - 1.0).abs() < 1e-12);
            let id = DMatrix::<f64>::identity(n, n);
            assert!((q.transpose() * &q - id).norm() < 1e-12);
            let q = haar_special::<nalgebra::Complex<f64>, _>(n, &mut rng);
            assert!((q.determinant() - nalgebra::Complex::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn roundtrip_examples() {
        let m = build_model(Field::Real, &[2, 2], None).unwrap();
        let rep = flag_roundtrip(&m, 100, 42);
        assert!(rep.passed, "{rep:?}");
        assert!(rep.max_residual < 1e-8);
        let m = build_model(Field::Complex, &[1, 1, 1], None).unwrap();
        let rep = flag_roundtrip(&m, 100, 7);
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn roundtrip_with_repeated_leading_eigenvalue() {
        for field in [Field::Real, Field::Complex] {
            for p in [[2, 1], [3, 1]] {
                let m = build_model(field, &p, None).unwrap();
                let rep = flag_roundtrip(&m, 100, 42);
                assert!(rep.passed, "{rep:?}");
            }
        }
    }

    #[test]
    fn roundtrip_is_seed_deterministic() {
        let m = build_model(Field::Complex, &[2, 1], None).unwrap();
        assert_eq!(flag_roundtrip(&m, 10, 5), flag_roundtrip(&m, 10, 5));
    }

    #[test]
    fn h2_identity_is_exact() {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        let f = [0.3, -1.1, 0.8, 2.0, -0.5, 0.25];
        assert_eq!(h2_residual(&id, &f), 0.0);
    }

    #[test]
    fn h2_random_samples() {
        let rep = h2_iso_check(100, 1);
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn h2_detects_wrong_convention() {
        // phi with full cross coefficients off the diagonal is not equivariant
        let mut rng = rng(9);
        let g = to_array(&haar_special::<f64, _>(3, &mut rng));
        let f = [1.0, -1.0, 0.0, 2.0, 0.0, 0.0];
        let moved = act_on_quadratic(&g, &f);
        let wrong = |q: &Quadratic| [[q[0], q[3], q[4]], [q[3], q[1], q[5]], [q[4], q[5], q[2]]];
        let lhs = wrong(&moved);
        let phi = wrong(&f);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let rhs: f64 = (0..3)
                    .flat_map(|k| (0..3).map(move |l| (k, l)))
                    .map(|(k, l)| g[i][k] * phi[k][l] * g[j][l])
                    .sum();
                worst = worst.max((lhs[i][j] - rhs).abs());
            }
        }
        assert!(worst > 1e-3);
    }

    #[test]
    fn random_eigenvalues_are_valid() {
        let mut rng = rng(11);
        for p in [vec![1, 1], vec![3, 2, 1], vec![1, 1, 1, 1, 1, 1, 1, 1]] {
            for _ in 0..20 {
                let ev = random_eigenvalues(&p, &mut rng);
                assert!(is_traceless(&p, &ev));
                assert!(build_model(Field::Real, &p, Some(ev)).is_ok());
            }
        }
    }
}
