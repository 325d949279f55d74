//! Shared helpers for unit tests. Test-only.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::operators::{C64, DimensionProfile, HermitianOperator};

pub fn random_hermitian(profile: &DimensionProfile, seed: u64) -> HermitianOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = profile.total();
    let g = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    });
    let adj = g.adjoint();
    let h = (g + adj) * C64::new(0.5, 0.0);
    HermitianOperator::new(profile.clone(), h).expect("symmetrized Gaussian is Hermitian")
}

pub fn pauli_x() -> HermitianOperator {
    let p = DimensionProfile::qubits(1).unwrap();
    HermitianOperator::from_real_rows(p, &[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
}

pub fn pauli_z() -> HermitianOperator {
    let p = DimensionProfile::qubits(1).unwrap();
    HermitianOperator::from_real_rows(p, &[&[1.0, 0.0], &[0.0, -1.0]]).unwrap()
}

/// The corner-coherence two-qubit witness 1/8 [[1,0,0,-4],[0,3,0,0],[0,0,3,0],[-4,0,0,1]].
pub fn two_qubit_w_plus() -> HermitianOperator {
    let p = DimensionProfile::qubits(2).unwrap();
    HermitianOperator::from_real_rows(
        p,
        &[
            &[0.125, 0.0, 0.0, -0.5],
            &[0.0, 0.375, 0.0, 0.0],
            &[0.0, 0.0, 0.375, 0.0],
            &[-0.5, 0.0, 0.0, 0.125],
        ],
    )
    .unwrap()
}

/// Its mirror partner 1/8 [[3,0,0,4],[0,1,0,0],[0,0,1,0],[4,0,0,3]].
pub fn two_qubit_w_minus() -> HermitianOperator {
    let p = DimensionProfile::qubits(2).unwrap();
    HermitianOperator::from_real_rows(
        p,
        &[
            &[0.375, 0.0, 0.0, 0.5],
            &[0.0, 0.125, 0.0, 0.0],
            &[0.0, 0.0, 0.125, 0.0],
            &[0.5, 0.0, 0.0, 0.375],
        ],
    )
    .unwrap()
}

/// The compressed observable 1/10 [[2,0,0,-2],[0,3,0,0],[0,0,3,0],[-2,0,0,2]].
pub fn two_qubit_ctilde() -> HermitianOperator {
    let p = DimensionProfile::qubits(2).unwrap();
    HermitianOperator::from_real_rows(
        p,
        &[
            &[0.2, 0.0, 0.0, -0.2],
            &[0.0, 0.3, 0.0, 0.0],
            &[0.0, 0.0, 0.3, 0.0],
            &[-0.2, 0.0, 0.0, 0.2],
        ],
    )
    .unwrap()
}
