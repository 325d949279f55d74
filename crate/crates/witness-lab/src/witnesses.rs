//! Entanglement witnesses: trace-normalized observables that are nonnegative
//! on every separable state yet negative somewhere, plus the built-in
//! examples, detection verdicts, threshold solving, and a sufficient
//! decomposability test.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::operators::{C64, DimensionProfile, HermitianOperator};
use crate::separability::{
    Bound, ExtremumMode, OptimizerConfig, SeparabilityWindow, seesaw_extremum,
};
use crate::states::{DensityMatrix, bell, max_entangled};

/// Witnesses certified nonnegative-on-separables down to this level.
pub const WITNESS_NONNEG_TOL: f64 = 1e-6;
/// A witness must dip below `-NEGATIVITY_TOL` somewhere to detect anything.
pub const NEGATIVITY_TOL: f64 = 1e-9;
/// Verdict tolerance for window-violation tests.
pub const DETECTION_TOL: f64 = 1e-9;

/// A trace-normalized Hermitian observable with cached extreme eigenvalues
/// and an optional separability-validity certificate.
#[derive(Debug, Clone)]
pub struct Witness {
    op: HermitianOperator,
    lambda_min: f64,
    lambda_max: f64,
    validity: Option<ValidityCertificate>,
}

impl Witness {
    /// Rescales the operator to unit trace (inputs with |trace| below 1e-6
    /// are rejected; traces within 1e-12 of 1 are kept bit-for-bit).
    pub fn new(op: HermitianOperator) -> Result<Self> {
        let tr = op.trace();
        if tr.abs() < 1e-6 {
            return Err(Error::ZeroTrace(tr));
        }
        let op = if (tr - 1.0).abs() <= 1e-12 { op } else { op.scale(1.0 / tr) };
        let eig = op.eigh();
        Ok(Self { op, lambda_min: eig.lambda_min(), lambda_max: eig.lambda_max(), validity: None })
    }

    pub fn op(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn profile(&self) -> &DimensionProfile {
        self.op.profile()
    }

    pub fn lambda_min(&self) -> f64 {
        self.lambda_min
    }

    pub fn lambda_max(&self) -> f64 {
        self.lambda_max
    }

    pub fn validity(&self) -> Option<&ValidityCertificate> {
        self.validity.as_ref()
    }

    /// Runs [`validate_witness`] and caches the certificate.
    pub fn validated(mut self, cfg: &OptimizerConfig) -> Result<Self> {
        let cert = validate_witness(&self, cfg)?;
        self.validity = Some(cert);
        Ok(self)
    }
}

/// The built-in witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinWitness {
    /// Two-qubit witness with the -1/2 corner coherence; detects `|phi+>`.
    Ew2qPlus,
    /// Its mirror partner with the +1/2 corner coherence; detects `|phi->`.
    Ew2qMinus,
    /// The two-qutrit Choi witness (non-decomposable).
    Choi3,
    /// `(2/9) I - choi3`, the mirror partner of the Choi witness.
    Choi3Mirror,
}

impl BuiltinWitness {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "ew2q:plus" => Ok(Self::Ew2qPlus),
            "ew2q:minus" => Ok(Self::Ew2qMinus),
            "choi3" => Ok(Self::Choi3),
            "choi3:mirror" => Ok(Self::Choi3Mirror),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Ew2qPlus => "ew2q:plus",
            Self::Ew2qMinus => "ew2q:minus",
            Self::Choi3 => "choi3",
            Self::Choi3Mirror => "choi3:mirror",
        }
    }
}

fn ew2q(sign: f64) -> HermitianOperator {
    let p = DimensionProfile::qubits(2).expect("two qubits fit the guard");
    let (corner, inner) = if sign > 0.0 { (0.125, 0.375) } else { (0.375, 0.125) };
    let coh = if sign > 0.0 { -0.5 } else { 0.5 };
    HermitianOperator::from_real_rows(
        p,
        &[
            &[corner, 0.0, 0.0, coh],
            &[0.0, inner, 0.0, 0.0],
            &[0.0, 0.0, inner, 0.0],
            &[coh, 0.0, 0.0, corner],
        ],
    )
    .expect("rational entries")
}

fn choi3_op() -> HermitianOperator {
    let p = DimensionProfile::bipartite(3, 3).expect("two qutrits fit the guard");
    let mut m = DMatrix::from_element(9, 9, C64::new(0.0, 0.0));
    let sixth = 1.0 / 6.0;
    // sum_i [2 |ii><ii| + |i,i-1><i,i-1|] with indices mod 3
    for i in 0..3usize {
        let ii = 3 * i + i;
        m[(ii, ii)] += C64::new(2.0 * sixth, 0.0);
        let shifted = 3 * i + (i + 2) % 3;
        m[(shifted, shifted)] += C64::new(sixth, 0.0);
    }
    // -3 P+ = -(1/3) sum_{ij} |ii><jj| scaled by 1/6
    for i in 0..3usize {
        for j in 0..3usize {
            m[(3 * i + i, 3 * j + j)] += C64::new(-3.0 * sixth / 3.0, 0.0);
        }
    }
    HermitianOperator::new(p, m).expect("real symmetric entries")
}

/// Constructs a built-in witness with its exact printed entries.
pub fn builtin(which: BuiltinWitness) -> Witness {
    let op = match which {
        BuiltinWitness::Ew2qPlus => ew2q(1.0),
        BuiltinWitness::Ew2qMinus => ew2q(-1.0),
        BuiltinWitness::Choi3 => choi3_op(),
        BuiltinWitness::Choi3Mirror => {
            let choi = choi3_op();
            let id = HermitianOperator::identity(choi.profile().clone());
            id.affine(2.0 / 9.0, &choi, -1.0).expect("same profile")
        }
    };
    Witness::new(op).expect("builtin witnesses have unit trace")
}

/// The compressed observable of the two-qubit pair, with its exact printed
/// entries 1/10 [[2,0,0,-2],[0,3,0,0],[0,0,3,0],[-2,0,0,2]].
pub fn two_qubit_compressed() -> HermitianOperator {
    let p = DimensionProfile::qubits(2).expect("two qubits fit the guard");
    HermitianOperator::from_real_rows(
        p,
        &[
            &[0.2, 0.0, 0.0, -0.2],
            &[0.0, 0.3, 0.0, 0.0],
            &[0.0, 0.0, 0.3, 0.0],
            &[-0.2, 0.0, 0.0, 0.2],
        ],
    )
    .expect("rational entries")
}

/// The compressed observable of the Choi pair, `(2/5) choi3 + (1/15) I`.
pub fn choi3_compressed() -> HermitianOperator {
    let choi = choi3_op();
    let id = HermitianOperator::identity(choi.profile().clone());
    choi.affine(0.4, &id, 1.0 / 15.0).expect("same profile")
}

/// `tr[W rho]`, the measured witness expectation.
pub fn evaluate(w: &Witness, s: &DensityMatrix) -> Result<f64> {
    w.op().inner(s.operator())
}

/// A one-parameter state family affine in its parameter, stored by its
/// endpoints; `at(t) = (1-t) at0 + t at1`.
#[derive(Debug, Clone)]
pub struct AffineStateFamily {
    pub at0: DensityMatrix,
    pub at1: DensityMatrix,
}

impl AffineStateFamily {
    /// `(1-alpha)|phi+><phi+| + alpha I/4`.
    pub fn isotropic_alpha() -> Self {
        let proj = bell(crate::states::BellKind::PhiPlus).density();
        let mixed = maximally_mixed_state(proj.profile().clone());
        Self { at0: proj, at1: mixed }
    }

    /// `(1-beta)|phi-><phi-| + beta I/4`.
    pub fn isotropic_beta() -> Self {
        let proj = bell(crate::states::BellKind::PhiMinus).density();
        let mixed = maximally_mixed_state(proj.profile().clone());
        Self { at0: proj, at1: mixed }
    }

    /// `(1-t)|phi_d+><phi_d+| + t I/d^2` for local dimension d.
    pub fn isotropic_qudit(d: usize) -> Result<Self> {
        let proj = max_entangled(d)?.density();
        let mixed = maximally_mixed_state(proj.profile().clone());
        Ok(Self { at0: proj, at1: mixed })
    }

    pub fn at(&self, t: f64) -> Result<DensityMatrix> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ParameterRange(t));
        }
        let op = self.at0.operator().affine(1.0 - t, self.at1.operator(), t)?;
        DensityMatrix::new(op)
    }
}

fn maximally_mixed_state(profile: DimensionProfile) -> DensityMatrix {
    DensityMatrix::new(HermitianOperator::maximally_mixed(profile))
        .expect("maximally mixed is a state")
}

/// Exact parameter value where `tr[W family(t)] = bound`. Since the family
/// is affine in t, the expectation is too, and the crossing is a linear
/// solve; a nearly constant family (slope below 1e-12) has no crossing.
pub fn detection_threshold(w: &Witness, family: &AffineStateFamily, bound: f64) -> Result<f64> {
    let f0 = evaluate(w, &family.at0)?;
    let f1 = evaluate(w, &family.at1)?;
    let slope = f1 - f0;
    if slope.abs() < 1e-12 {
        return Err(Error::ConstantFamily);
    }
    Ok((bound - f0) / slope)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    DetectedLower,
    DetectedUpper,
    NotDetected,
}

/// Outcome of testing a state against a separability window: which bound (if
/// any) is violated, and the distance to the violated (or nearest) bound.
#[derive(Debug, Clone, Copy)]
pub struct DetectionVerdict {
    pub kind: VerdictKind,
    pub margin: f64,
    pub trace_value: f64,
}

/// Detects entanglement by violation of either window bound.
pub fn detect(
    window: &SeparabilityWindow,
    observable: &HermitianOperator,
    s: &DensityMatrix,
) -> Result<DetectionVerdict> {
    let t = observable.inner(s.operator())?;
    let (l, u) = (window.l(), window.u());
    let verdict = if t < l - DETECTION_TOL {
        DetectionVerdict { kind: VerdictKind::DetectedLower, margin: l - t, trace_value: t }
    } else if t > u + DETECTION_TOL {
        DetectionVerdict { kind: VerdictKind::DetectedUpper, margin: t - u, trace_value: t }
    } else {
        DetectionVerdict {
            kind: VerdictKind::NotDetected,
            margin: (t - l).min(u - t).max(0.0),
            trace_value: t,
        }
    };
    Ok(verdict)
}

/// Why a candidate fails to be a witness, or that it is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessStatus {
    /// Nonnegative on separables and negative somewhere.
    Valid,
    /// The separable minimum is significantly negative.
    NonNegativityFails,
    /// No negative eigenvalue: the observable detects nothing.
    NothingDetected,
}

/// Numerical certificate from [`validate_witness`].
#[derive(Debug, Clone)]
pub struct ValidityCertificate {
    pub status: WitnessStatus,
    /// See-saw estimate of `L(W) = min tr[W sigma]` with its minimizer.
    pub l_estimate: Bound,
    pub lambda_min: f64,
    /// Whether `|L(W)|` is within the border tolerance 1e-6.
    pub border: bool,
}

impl ValidityCertificate {
    pub fn is_valid(&self) -> bool {
        self.status == WitnessStatus::Valid
    }
}

/// Checks the two witness conditions numerically: the see-saw minimum over
/// separable states must not be significantly negative, and the spectrum must
/// dip below zero. Flags border status when `|L(W)| <= 1e-6`.
pub fn validate_witness(w: &Witness, cfg: &OptimizerConfig) -> Result<ValidityCertificate> {
    let l_estimate = seesaw_extremum(w.op(), ExtremumMode::Min, cfg);
    let l = l_estimate.value;
    let status = if l < -WITNESS_NONNEG_TOL {
        WitnessStatus::NonNegativityFails
    } else if w.lambda_min() >= -NEGATIVITY_TOL {
        WitnessStatus::NothingDetected
    } else {
        WitnessStatus::Valid
    };
    Ok(ValidityCertificate {
        status,
        border: l.abs() <= WITNESS_NONNEG_TOL,
        l_estimate,
        lambda_min: w.lambda_min(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decomposability {
    /// `W^Gamma >= 0`, so `W = A + B^Gamma` with `A = 0`, `B = W^Gamma`.
    Decomposable,
    /// The sufficient test failed; no conclusion.
    Inconclusive,
}

/// Sufficient decomposability test for bipartite witnesses: positivity of
/// the partial transpose. Inconclusive does **not** imply non-decomposable.
pub fn sufficient_decomposable(w: &Witness) -> Result<Decomposability> {
    if w.profile().parties() != 2 {
        return Err(Error::NotBipartite(w.profile().parties()));
    }
    let pt = w.op().partial_transpose(1)?;
    Ok(if pt.is_psd(crate::operators::PSD_TOL) {
        Decomposability::Decomposable
    } else {
        Decomposability::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{BellKind, IsotropicFamily, isotropic};
    use approx::assert_abs_diff_eq;

    fn cfg() -> OptimizerConfig {
        OptimizerConfig { seed: 5, ..Default::default() }
    }

    #[test]
    fn builtin_entries_and_spectra() {
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        assert_eq!(wp.op().entry(0, 3), C64::new(-0.5, 0.0));
        assert_eq!(wp.op().trace(), 1.0);
        assert_abs_diff_eq!(wp.lambda_min(), -0.375, epsilon = 1e-12);

        let choi = builtin(BuiltinWitness::Choi3);
        assert_abs_diff_eq!(choi.op().entry(0, 0).re, 1.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(choi.op().trace(), 1.0, epsilon = 1e-15);
        let vals = choi.op().eigh().values;
        assert_abs_diff_eq!(vals[0], -1.0 / 6.0, epsilon = 1e-12);
        assert!(vals[1] >= -1e-12, "single negative eigenvalue");

        let mirror = builtin(BuiltinWitness::Choi3Mirror);
        let mvals = mirror.op().eigh().values;
        assert_abs_diff_eq!(mvals[0], -1.0 / 9.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mvals[1], -1.0 / 9.0, epsilon = 1e-12);
        assert!(mvals[2] >= -1e-12, "exactly two negative eigenvalues");

        assert!(BuiltinWitness::from_name("nope").is_err());
        assert_eq!(BuiltinWitness::from_name("choi3:mirror").unwrap(), BuiltinWitness::Choi3Mirror);
    }

    #[test]
    fn evaluate_known_values() {
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        let phi = bell(BellKind::PhiPlus).density();
        assert_abs_diff_eq!(evaluate(&wp, &phi).unwrap(), -0.375, epsilon = 1e-15);

        let mixed = maximally_mixed_state(DimensionProfile::qubits(2).unwrap());
        assert_abs_diff_eq!(evaluate(&wp, &mixed).unwrap(), 0.25, epsilon = 1e-15);

        let choi = builtin(BuiltinWitness::Choi3);
        let p_plus = max_entangled(3).unwrap().density();
        assert_abs_diff_eq!(evaluate(&choi, &p_plus).unwrap(), -1.0 / 6.0, epsilon = 1e-12);

        // profile mismatch
        assert!(evaluate(&choi, &phi).is_err());
    }

    #[test]
    fn thresholds_are_exact_linear_solves() {
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        let alpha = AffineStateFamily::isotropic_alpha();
        let t = detection_threshold(&wp, &alpha, 0.0).unwrap();
        assert_abs_diff_eq!(t, 0.6, epsilon = 1e-12);
        // the crossing value itself reproduces the bound
        let at = alpha.at(t).unwrap();
        assert_abs_diff_eq!(evaluate(&wp, &at).unwrap(), 0.0, epsilon = 1e-12);

        let wm = builtin(BuiltinWitness::Ew2qMinus);
        let beta = AffineStateFamily::isotropic_beta();
        assert_abs_diff_eq!(
            detection_threshold(&wm, &beta, 0.0).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-12
        );

        assert_abs_diff_eq!(detection_threshold(&wp, &alpha, 0.25).unwrap(), 1.0, epsilon = 1e-12);

        // constant family: the maximally mixed endpoint twice
        let mixed = maximally_mixed_state(DimensionProfile::qubits(2).unwrap());
        let flat = AffineStateFamily { at0: mixed.clone(), at1: mixed };
        assert!(matches!(detection_threshold(&wp, &flat, 0.0), Err(Error::ConstantFamily)));
    }

    #[test]
    fn detect_against_builtin_window() {
        let ctilde = two_qubit_compressed();
        let window = crate::separability::separability_window(&ctilde, &cfg());

        let at_half = isotropic(IsotropicFamily::Alpha, 0.5).unwrap();
        let v = detect(&window, &ctilde, &at_half).unwrap();
        assert_eq!(v.kind, VerdictKind::DetectedLower);
        assert_abs_diff_eq!(v.margin, 0.025, epsilon = 1e-4);

        let beta02 = isotropic(IsotropicFamily::Beta, 0.2).unwrap();
        let v = detect(&window, &ctilde, &beta02).unwrap();
        assert_eq!(v.kind, VerdictKind::DetectedUpper);
        assert_abs_diff_eq!(v.trace_value, 0.37, epsilon = 1e-12);
        assert_abs_diff_eq!(v.margin, 0.02, epsilon = 1e-4);

        let mixed = maximally_mixed_state(DimensionProfile::qubits(2).unwrap());
        let v = detect(&window, &ctilde, &mixed).unwrap();
        assert_eq!(v.kind, VerdictKind::NotDetected);
        assert_abs_diff_eq!(v.margin, 0.1, epsilon = 1e-4);
    }

    #[test]
    fn validation_verdicts() {
        let wp = builtin(BuiltinWitness::Ew2qPlus).validated(&cfg()).unwrap();
        let cert = wp.validity().unwrap();
        assert!(cert.is_valid());
        assert!(cert.border, "L = 0 at a product minimizer");
        assert_abs_diff_eq!(cert.l_estimate.value, 0.0, epsilon = 1e-8);

        let mixed = Witness::new(HermitianOperator::maximally_mixed(
            DimensionProfile::qubits(2).unwrap(),
        ))
        .unwrap();
        let cert = validate_witness(&mixed, &cfg()).unwrap();
        assert_eq!(cert.status, WitnessStatus::NothingDetected);

        let mirror = builtin(BuiltinWitness::Choi3Mirror);
        let cert = validate_witness(&mirror, &cfg()).unwrap();
        assert!(cert.is_valid());
        assert!(cert.border, "L(choi3:mirror) = 2/9 - U(choi3) = 0");
    }

    #[test]
    fn witness_trace_normalization() {
        // scaled input gets normalized; near-zero trace is rejected
        let w = Witness::new(two_qubit_compressed().scale(5.0)).unwrap();
        assert_abs_diff_eq!(w.op().trace(), 1.0, epsilon = 1e-12);
        let z = crate::testutil::pauli_z()
            .tensor(&crate::testutil::pauli_z())
            .unwrap();
        assert!(matches!(Witness::new(z), Err(Error::ZeroTrace(_))));
    }

    #[test]
    fn decomposability_sufficient_test() {
        // diagonal PSD operators are partial-transpose invariant
        let p = DimensionProfile::qubits(2).unwrap();
        let diag = HermitianOperator::from_real_rows(
            p,
            &[
                &[0.4, 0.0, 0.0, 0.0],
                &[0.0, 0.1, 0.0, 0.0],
                &[0.0, 0.0, 0.2, 0.0],
                &[0.0, 0.0, 0.0, 0.3],
            ],
        )
        .unwrap();
        let w = Witness::new(diag).unwrap();
        assert_eq!(sufficient_decomposable(&w).unwrap(), Decomposability::Decomposable);

        let choi = builtin(BuiltinWitness::Choi3);
        assert_eq!(sufficient_decomposable(&choi).unwrap(), Decomposability::Inconclusive);

        // the corner coherence moves onto the inner block: eigenvalues 3/8 -+ 1/2
        let wp = builtin(BuiltinWitness::Ew2qPlus);
        assert_eq!(sufficient_decomposable(&wp).unwrap(), Decomposability::Inconclusive);
        let pt_vals = wp.op().partial_transpose(1).unwrap().eigh().values;
        assert_abs_diff_eq!(pt_vals[0], 0.375 - 0.5, epsilon = 1e-12);

        let ghz_like = Witness::new(crate::states::ghz3().projector()).unwrap();
        assert!(matches!(sufficient_decomposable(&ghz_like), Err(Error::NotBipartite(3))));
    }

    #[test]
    fn evaluate_is_real_on_random_inputs() {
        // evaluate goes through inner(), which asserts a vanishing imaginary
        // part; drive it with complex-valued random states
        let p = DimensionProfile::bipartite(3, 3).unwrap();
        let w = builtin(BuiltinWitness::Choi3);
        for seed in 0..20 {
            let rho = crate::states::random_density(&p, 3000 + seed);
            let v = evaluate(&w, &rho).unwrap();
            assert!(v.is_finite());
        }
    }
}
