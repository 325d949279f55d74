//! Three-qubit genuine-multipartite-entanglement criteria.
//!
//! Density-matrix entries are addressed in 1-based index notation over the
//! basis `|000>, |001>, .., |111>` (party 1 most significant), so the
//! bit-flip-paired diagonals are (2,7), (3,6), (4,5) and the extreme
//! coherence is `rho_18`.
//!
//! The GHZ-sector criterion compares that coherence against the paired
//! diagonals; a negative value certifies genuine multipartite entanglement.
//! Its linearization replaces geometric means with arithmetic ones and drops
//! the modulus, giving an ordinary (affine) observable. The Dicke-sector
//! criterion comes in three variants: `printed` keeps a form whose positive
//! and negative square-root terms cancel identically, `cancelled` is that
//! cancellation (`rho_22 + rho_33 + rho_55`), and `mirrored` (the default)
//! compares the one-excitation coherences against the matching square roots,
//! reaching -1 exactly on the Dicke state while staying nonnegative on every
//! biseparable state.

use crate::error::{Error, Result};
use crate::operators::{C64, DimensionProfile, HermitianOperator};
use crate::separability::{
    Bound, ExtremumMode, OptimizerConfig, StateClass, biseparable_min, nonlinear_extremum,
    seesaw_extremum_partitioned,
};
use crate::states::{DensityMatrix, PureState, dicke3, ghz3};

/// Sign-test threshold for the GME verdict.
pub const GME_SIGN_TOL: f64 = 1e-9;
/// Window-violation threshold for the not-fully-separable verdict.
pub const WINDOW_VIOLATION_TOL: f64 = 1e-6;

fn expect_three_qubits(s: &DensityMatrix) -> Result<()> {
    if s.profile().dims() != [2, 2, 2] {
        return Err(Error::NotThreeQubits(s.profile().dims().to_vec()));
    }
    Ok(())
}

/// `2 (sqrt(r22 r77) + sqrt(r33 r66) + sqrt(r44 r55) - |r18|)`; negative
/// values certify genuine multipartite entanglement. Normalized to -1 on the
/// GHZ state.
pub fn q_ghz(s: &DensityMatrix) -> Result<f64> {
    expect_three_qubits(s)?;
    let d = |i: usize| s.rho(i, i).re.max(0.0);
    Ok(2.0
        * ((d(2) * d(7)).sqrt() + (d(3) * d(6)).sqrt() + (d(4) * d(5)).sqrt()
            - s.rho(1, 8).norm()))
}

/// Affine relaxation `1 - r11 - r88 + 2 Re r18`; dominates [`q_ghz`]
/// pointwise. Still reaches 1 on the GHZ state.
pub fn q_ghz_lin(s: &DensityMatrix) -> Result<f64> {
    expect_three_qubits(s)?;
    Ok(1.0 - s.rho(1, 1).re - s.rho(8, 8).re + 2.0 * s.rho(1, 8).re)
}

/// [`q_ghz_lin`] as an 8x8 observable `I - E11 - E88 + E18 + E81`, so all the
/// linear window machinery applies to it.
pub fn q_ghz_lin_operator() -> HermitianOperator {
    let p = DimensionProfile::qubits(3).expect("three qubits fit the guard");
    HermitianOperator::from_fn(p, |i, j| {
        let mut v = if i == j { 1.0 } else { 0.0 };
        if i == 0 && j == 0 {
            v -= 1.0;
        }
        if i == 7 && j == 7 {
            v -= 1.0;
        }
        if (i, j) == (0, 7) || (i, j) == (7, 0) {
            v += 1.0;
        }
        C64::new(v, 0.0)
    })
    .expect("real symmetric entries")
}

/// Readings of the Dicke-sector criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DickeVariant {
    /// The displayed formula, whose square-root terms cancel identically.
    Printed,
    /// The cancellation `r22 + r33 + r55`.
    Cancelled,
    /// One-excitation coherences against the matching geometric means;
    /// -1 on the Dicke state, nonnegative on biseparable states.
    #[default]
    Mirrored,
}

impl DickeVariant {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "printed" => Ok(Self::Printed),
            "cancelled" => Ok(Self::Cancelled),
            "mirrored" => Ok(Self::Mirrored),
            other => Err(Error::UnknownName(format!("qdicke:{other}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Printed => "printed",
            Self::Cancelled => "cancelled",
            Self::Mirrored => "mirrored",
        }
    }
}

/// Dicke-sector criterion in the chosen variant.
pub fn q_dicke(s: &DensityMatrix, variant: DickeVariant) -> Result<f64> {
    expect_three_qubits(s)?;
    let d = |i: usize| s.rho(i, i).re.max(0.0);
    let half_sum = 0.5 * (d(2) + d(3) + d(5));
    let roots = (d(1) * d(4)).sqrt() + (d(1) * d(6)).sqrt() + (d(1) * d(7)).sqrt();
    Ok(match variant {
        DickeVariant::Printed => 2.0 * (half_sum + roots - roots),
        DickeVariant::Cancelled => d(2) + d(3) + d(5),
        DickeVariant::Mirrored => {
            let coherences = s.rho(2, 3).norm() + s.rho(2, 5).norm() + s.rho(3, 5).norm();
            2.0 * (roots + half_sum - coherences)
        }
    })
}

/// Named criterion bundling the evaluator with its normalization check.
#[derive(Debug, Clone)]
pub struct Criterion {
    name: String,
    kind: CriterionKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriterionKind {
    QGhz,
    QGhzLin,
    QDicke(DickeVariant),
}

impl Criterion {
    pub fn new(kind: CriterionKind) -> Self {
        let name = match kind {
            CriterionKind::QGhz => "qghz".to_string(),
            CriterionKind::QGhzLin => "qghzlin".to_string(),
            CriterionKind::QDicke(v) => format!("qdicke:{}", v.name()),
        };
        let c = Self { name, kind };
        let (state, value) = c.normalization();
        let got = c.evaluate(&state.density()).expect("normalization states are three-qubit");
        debug_assert!(
            (got - value).abs() <= 1e-10,
            "criterion {} must evaluate to {value} on its normalization state, got {got}",
            c.name
        );
        c
    }

    pub fn q_ghz() -> Self {
        Self::new(CriterionKind::QGhz)
    }

    pub fn q_ghz_lin() -> Self {
        Self::new(CriterionKind::QGhzLin)
    }

    pub fn q_dicke(variant: DickeVariant) -> Self {
        Self::new(CriterionKind::QDicke(variant))
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "qghz" => Ok(Self::q_ghz()),
            "qghzlin" => Ok(Self::q_ghz_lin()),
            "qdicke" => Ok(Self::q_dicke(DickeVariant::default())),
            other => match other.strip_prefix("qdicke:") {
                Some(v) => Ok(Self::q_dicke(DickeVariant::from_name(v)?)),
                None => Err(Error::UnknownName(other.to_string())),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> CriterionKind {
        self.kind
    }

    /// Normalization state and the value the criterion takes there.
    pub fn normalization(&self) -> (PureState, f64) {
        match self.kind {
            CriterionKind::QGhz => (ghz3(), -1.0),
            CriterionKind::QGhzLin => (ghz3(), 1.0),
            CriterionKind::QDicke(DickeVariant::Mirrored) => (dicke3(), -1.0),
            CriterionKind::QDicke(_) => (dicke3(), 1.0),
        }
    }

    pub fn evaluate(&self, s: &DensityMatrix) -> Result<f64> {
        match self.kind {
            CriterionKind::QGhz => q_ghz(s),
            CriterionKind::QGhzLin => q_ghz_lin(s),
            CriterionKind::QDicke(v) => q_dicke(s, v),
        }
    }

    /// Affine criteria expose an operator and use the linear machinery.
    pub fn operator(&self) -> Option<HermitianOperator> {
        match self.kind {
            CriterionKind::QGhzLin => Some(q_ghz_lin_operator()),
            _ => None,
        }
    }
}

/// State class a criterion window ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionClass {
    FullySeparable,
    Biseparable,
    AllStates,
}

impl CriterionClass {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "fully" | "fully_separable" => Ok(Self::FullySeparable),
            "bisep" | "biseparable" => Ok(Self::Biseparable),
            "all" | "all_states" => Ok(Self::AllStates),
            other => Err(Error::UnknownName(format!("class {other}"))),
        }
    }
}

/// Criterion range over a state class, with certificates for both endpoints.
#[derive(Debug, Clone)]
pub struct CriterionWindow {
    pub criterion: String,
    pub class: CriterionClass,
    pub lo: Bound,
    pub hi: Bound,
}

/// Computes `[min, max]` of a criterion over the chosen class of pure states
/// (mixtures only through `cfg.mixture_rank`). Affine criteria go through the
/// partitioned see-saw; the rest use coordinate descent. Biseparable bounds
/// extremize over the three bipartition classes.
pub fn criterion_window(
    c: &Criterion,
    class: CriterionClass,
    cfg: &OptimizerConfig,
) -> Result<CriterionWindow> {
    let profile = DimensionProfile::qubits(3).expect("three qubits fit the guard");
    let (lo, hi) = match (c.operator(), class) {
        (Some(op), CriterionClass::FullySeparable) => {
            let part = crate::states::Partition::fully_product(3);
            (
                seesaw_extremum_partitioned(&op, &part, ExtremumMode::Min, cfg)?,
                seesaw_extremum_partitioned(&op, &part, ExtremumMode::Max, cfg)?,
            )
        }
        (Some(op), CriterionClass::AllStates) => {
            let part = crate::states::Partition::single_group(3);
            (
                seesaw_extremum_partitioned(&op, &part, ExtremumMode::Min, cfg)?,
                seesaw_extremum_partitioned(&op, &part, ExtremumMode::Max, cfg)?,
            )
        }
        (Some(op), CriterionClass::Biseparable) => {
            let mut lo: Option<Bound> = None;
            let mut hi: Option<Bound> = None;
            for i in 0..3 {
                let part = crate::states::Partition::bipartition(i, 3)?;
                let l = seesaw_extremum_partitioned(&op, &part, ExtremumMode::Min, cfg)?;
                let h = seesaw_extremum_partitioned(&op, &part, ExtremumMode::Max, cfg)?;
                lo = Some(match lo {
                    Some(b) if b.value <= l.value + 1e-12 => b,
                    _ => l,
                });
                hi = Some(match hi {
                    Some(b) if b.value >= h.value - 1e-12 => b,
                    _ => h,
                });
            }
            (lo.expect("three classes"), hi.expect("three classes"))
        }
        (None, CriterionClass::FullySeparable) => {
            let f = |rho: &DensityMatrix| c.evaluate(rho).expect("profile fixed");
            (
                nonlinear_extremum(f, &profile, StateClass::FullyProduct, ExtremumMode::Min, cfg)?,
                nonlinear_extremum(f, &profile, StateClass::FullyProduct, ExtremumMode::Max, cfg)?,
            )
        }
        (None, CriterionClass::AllStates) => {
            let f = |rho: &DensityMatrix| c.evaluate(rho).expect("profile fixed");
            (
                nonlinear_extremum(f, &profile, StateClass::AllPure, ExtremumMode::Min, cfg)?,
                nonlinear_extremum(f, &profile, StateClass::AllPure, ExtremumMode::Max, cfg)?,
            )
        }
        (None, CriterionClass::Biseparable) => {
            let f = |rho: &DensityMatrix| c.evaluate(rho).expect("profile fixed");
            let lo = biseparable_min(f, &profile, cfg)?;
            let mut hi: Option<Bound> = None;
            for i in 0..3 {
                let h = nonlinear_extremum(
                    &f,
                    &profile,
                    StateClass::Bipartition(i),
                    ExtremumMode::Max,
                    cfg,
                )?;
                hi = Some(match hi {
                    Some(b) if b.value >= h.value - 1e-12 => b,
                    _ => h,
                });
            }
            (lo, hi.expect("three classes"))
        }
    };
    Ok(CriterionWindow { criterion: c.name.clone(), class, lo, hi })
}

/// Verdict levels, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GmeVerdictKind {
    /// Some sign criterion is negative: genuinely multipartite entangled.
    GenuineMultipartite,
    /// Some criterion exceeds its separable-attainable maximum: entangled,
    /// though not necessarily genuinely multipartite.
    NotFullySeparable,
    Undecided,
}

/// Per-criterion values with the thresholds the verdict used.
#[derive(Debug, Clone)]
pub struct GmeVerdict {
    pub kind: GmeVerdictKind,
    pub q_ghz: f64,
    pub q_ghz_lin: f64,
    pub q_dicke_mirrored: f64,
    /// Separable-attainable maxima (mixtures included) for the three values
    /// above, in the same order.
    pub separable_maxima: [f64; 3],
}

/// Maximum of [`q_ghz`] over all fully separable states, mixtures included:
/// the uniform diagonal mixture of the six middle basis states attains it.
pub const Q_GHZ_SEPARABLE_MAX: f64 = 1.0;
/// Maximum of [`q_ghz_lin`] over separable states; affine, so the pure
/// product window is already the mixed one.
pub const Q_GHZ_LIN_SEPARABLE_MAX: f64 = 1.0;
/// Maximum of the mirrored Dicke criterion over separable states, attained
/// by a diagonal mixture of |000> and the two-excitation basis states.
pub const Q_DICKE_SEPARABLE_MAX: f64 = 1.732_050_807_568_877_2; // sqrt(3)

/// Three-level verdict: genuine multipartite entanglement by a negative sign
/// criterion; otherwise "not fully separable" when a value exceeds what any
/// separable state (pure or mixed) can reach; otherwise undecided.
///
/// The sign tests are sound because both nonlinear criteria are concave and
/// nonnegative on every pure biseparable state, hence on all their mixtures.
/// The upper tests compare against separable-attainable maxima *including
/// mixtures* — the pure-product window tops are exceeded already by plainly
/// separable states (the maximally mixed state scores 3/4 on the GHZ-sector
/// criterion), so they certify nothing.
pub fn gme_verdict(s: &DensityMatrix, _cfg: &OptimizerConfig) -> Result<GmeVerdict> {
    expect_three_qubits(s)?;
    let ghz = q_ghz(s)?;
    let lin = q_ghz_lin(s)?;
    let dicke = q_dicke(s, DickeVariant::Mirrored)?;
    let maxima = [Q_GHZ_SEPARABLE_MAX, Q_GHZ_LIN_SEPARABLE_MAX, Q_DICKE_SEPARABLE_MAX];

    let kind = if ghz < -GME_SIGN_TOL || dicke < -GME_SIGN_TOL {
        GmeVerdictKind::GenuineMultipartite
    } else if ghz > maxima[0] + WINDOW_VIOLATION_TOL
        || lin > maxima[1] + WINDOW_VIOLATION_TOL
        || dicke > maxima[2] + WINDOW_VIOLATION_TOL
    {
        GmeVerdictKind::NotFullySeparable
    } else {
        GmeVerdictKind::Undecided
    };
    Ok(GmeVerdict { kind, q_ghz: ghz, q_ghz_lin: lin, q_dicke_mirrored: dicke, separable_maxima: maxima })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{Partition, ProductVector, bell, random_density, random_product};
    use approx::assert_abs_diff_eq;
    use nalgebra::DVector;

    fn cfg() -> OptimizerConfig {
        OptimizerConfig { seed: 31, restarts: 32, max_iter: 80, ..Default::default() }
    }

    fn basis_state(bits: [usize; 3]) -> PureState {
        let p = DimensionProfile::qubits(3).unwrap();
        let mut amps = DVector::from_element(8, C64::new(0.0, 0.0));
        amps[p.index_of(&bits)] = C64::new(1.0, 0.0);
        PureState::new(p, amps).unwrap()
    }

    fn plus_cubed() -> DensityMatrix {
        let p = DimensionProfile::qubits(3).unwrap();
        let amps = DVector::from_element(8, C64::new(1.0, 0.0));
        PureState::new(p, amps).unwrap().density()
    }

    #[test]
    fn q_ghz_reference_values() {
        assert_eq!(q_ghz(&ghz3().density()).unwrap(), -1.0);
        assert_eq!(q_ghz(&basis_state([0, 0, 0]).density()).unwrap(), 0.0);
        assert_abs_diff_eq!(q_ghz(&plus_cubed()).unwrap(), 0.5, epsilon = 1e-12);
        let p22 = DimensionProfile::qubits(2).unwrap();
        assert!(q_ghz(&crate::states::random_density(&p22, 1)).is_err());
    }

    #[test]
    fn q_ghz_lin_reference_values() {
        assert_eq!(q_ghz_lin(&ghz3().density()).unwrap(), 1.0);
        assert_eq!(q_ghz_lin(&basis_state([0, 0, 0]).density()).unwrap(), 0.0);
        assert_eq!(q_ghz_lin(&basis_state([1, 1, 1]).density()).unwrap(), 0.0);
        // the operator reproduces the formula
        let op = q_ghz_lin_operator();
        for seed in 0..20 {
            let rho = random_density(&DimensionProfile::qubits(3).unwrap(), 7000 + seed);
            assert_abs_diff_eq!(
                op.inner(rho.operator()).unwrap(),
                q_ghz_lin(&rho).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn q_dicke_variants() {
        let dicke = dicke3().density();
        assert_abs_diff_eq!(q_dicke(&dicke, DickeVariant::Printed).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(q_dicke(&dicke, DickeVariant::Cancelled).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(q_dicke(&dicke, DickeVariant::Mirrored).unwrap(), -1.0, epsilon = 1e-12);

        let ghz = ghz3().density();
        for v in [DickeVariant::Printed, DickeVariant::Cancelled, DickeVariant::Mirrored] {
            assert_eq!(q_dicke(&ghz, v).unwrap(), 0.0);
        }
    }

    #[test]
    fn printed_equals_cancelled_everywhere() {
        let p = DimensionProfile::qubits(3).unwrap();
        for seed in 0..50 {
            let rho = random_density(&p, 8000 + seed);
            let printed = q_dicke(&rho, DickeVariant::Printed).unwrap();
            let cancelled = q_dicke(&rho, DickeVariant::Cancelled).unwrap();
            assert!((printed - cancelled).abs() <= 1e-15);
        }
    }

    #[test]
    fn linearization_dominates_pointwise() {
        let p = DimensionProfile::qubits(3).unwrap();
        for seed in 0..200 {
            let rho = random_density(&p, 9000 + seed);
            let lin = q_ghz_lin(&rho).unwrap();
            let ghz = q_ghz(&rho).unwrap();
            assert!(lin >= ghz - 1e-12, "dominance failed: {lin} < {ghz}");
        }
    }

    #[test]
    fn q_ghz_local_phase_invariance() {
        let p = DimensionProfile::qubits(3).unwrap();
        for seed in 0..20 {
            let rho = random_density(&p, 10_000 + seed);
            let before = q_ghz(&rho).unwrap();
            // conjugate by diag(1, e^{i phi}) per qubit
            let phases = [0.7 + seed as f64 * 0.13, 1.9, 2.6];
            let u = DVector::from_fn(8, |m, _| {
                let digits = p.digits_of(m);
                let total: f64 =
                    digits.iter().zip(&phases).map(|(&b, ph)| b as f64 * ph).sum();
                C64::new(total.cos(), total.sin())
            });
            let rotated = HermitianOperator::from_fn(p.clone(), |i, j| {
                u[i] * rho.operator().entry(i, j) * u[j].conj()
            })
            .unwrap();
            let after = q_ghz(&DensityMatrix::new(rotated).unwrap()).unwrap();
            assert_abs_diff_eq!(before, after, epsilon = 1e-12);
        }
    }

    #[test]
    fn mirrored_dicke_nonnegative_on_biseparable_samples() {
        let p = DimensionProfile::qubits(3).unwrap();
        for class in 0..3 {
            let part = Partition::bipartition(class, 3).unwrap();
            for seed in 0..67 {
                let pv = random_product(&p, &part, 20_000 + 100 * class as u64 + seed);
                let v = q_dicke(&pv.density(), DickeVariant::Mirrored).unwrap();
                assert!(v >= -1e-6, "biseparable sample scored {v}");
            }
        }
    }

    #[test]
    fn ghz_window_over_fully_separable() {
        let w = criterion_window(&Criterion::q_ghz(), CriterionClass::FullySeparable, &cfg())
            .unwrap();
        assert_abs_diff_eq!(w.lo.value, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(w.hi.value, 0.5, epsilon = 1e-4);
        // certificates reproduce the endpoints
        let f = |rho: &DensityMatrix| q_ghz(rho).unwrap();
        assert_abs_diff_eq!(f(&w.lo.certificate.density()), w.lo.value, epsilon = 1e-6);
        assert_abs_diff_eq!(f(&w.hi.certificate.density()), w.hi.value, epsilon = 1e-6);
    }

    #[test]
    fn dicke_window_over_fully_separable() {
        let c = Criterion::q_dicke(DickeVariant::Mirrored);
        let w = criterion_window(&c, CriterionClass::FullySeparable, &cfg()).unwrap();
        assert_abs_diff_eq!(w.lo.value, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(w.hi.value, 1.0, epsilon = 1e-3);
    }

    #[test]
    fn lin_window_over_fully_separable() {
        let w = criterion_window(&Criterion::q_ghz_lin(), CriterionClass::FullySeparable, &cfg())
            .unwrap();
        assert_abs_diff_eq!(w.lo.value, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(w.hi.value, 1.0, epsilon = 1e-4);
    }

    #[test]
    fn ghz_biseparable_minimum_is_zero() {
        let f = |rho: &DensityMatrix| q_ghz(rho).unwrap();
        let b = biseparable_min(f, &DimensionProfile::qubits(3).unwrap(), &cfg()).unwrap();
        assert!(b.value >= -1e-6);
        assert!(b.value <= 1e-6, "biseparable minimum should reach zero, got {}", b.value);
    }

    #[test]
    fn q_ghz_zero_on_bell_biseparable_example() {
        // |0> on party 1, |phi+> across parties 2|3
        let p = DimensionProfile::qubits(3).unwrap();
        let part = Partition::bipartition(0, 3).unwrap();
        let qubit0 = basis_state([0, 0, 0]); // reuse its first factor shape below
        let zero = PureState::new(
            DimensionProfile::qubits(1).unwrap(),
            DVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
        )
        .unwrap();
        drop(qubit0);
        let pv =
            ProductVector::new(p, part, vec![zero, bell(crate::states::BellKind::PhiPlus)])
                .unwrap();
        assert_abs_diff_eq!(q_ghz(&pv.density()).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn separable_mixtures_exceed_pure_product_tops() {
        // uniform diagonal mixture of the six middle basis states: q_ghz = 1
        let mids = [[0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 1, 0]];
        let parts: Vec<(f64, PureState)> =
            mids.iter().map(|&b| (1.0 / 6.0, basis_state(b))).collect();
        let rho = DensityMatrix::mixture(&parts).unwrap();
        assert_abs_diff_eq!(q_ghz(&rho).unwrap(), Q_GHZ_SEPARABLE_MAX, epsilon = 1e-12);

        // |000> with weight 1/2 plus the three two-excitation states: sqrt(3)
        let parts = vec![
            (0.5, basis_state([0, 0, 0])),
            (1.0 / 6.0, basis_state([0, 1, 1])),
            (1.0 / 6.0, basis_state([1, 0, 1])),
            (1.0 / 6.0, basis_state([1, 1, 0])),
        ];
        let rho = DensityMatrix::mixture(&parts).unwrap();
        assert_abs_diff_eq!(
            q_dicke(&rho, DickeVariant::Mirrored).unwrap(),
            Q_DICKE_SEPARABLE_MAX,
            epsilon = 1e-12
        );

        // the maximally mixed state already beats the pure-product top 1/2
        let p = DimensionProfile::qubits(3).unwrap();
        let flat = DensityMatrix::new(HermitianOperator::maximally_mixed(p)).unwrap();
        assert_abs_diff_eq!(q_ghz(&flat).unwrap(), 0.75, epsilon = 1e-12);
    }

    #[test]
    fn verdicts() {
        let c = cfg();
        let ghz = gme_verdict(&ghz3().density(), &c).unwrap();
        assert_eq!(ghz.kind, GmeVerdictKind::GenuineMultipartite);
        assert_eq!(ghz.q_ghz, -1.0);

        let dicke = gme_verdict(&dicke3().density(), &c).unwrap();
        assert_eq!(dicke.kind, GmeVerdictKind::GenuineMultipartite);
        assert_abs_diff_eq!(dicke.q_dicke_mirrored, -1.0, epsilon = 1e-12);

        let p = DimensionProfile::qubits(3).unwrap();
        let flat = DensityMatrix::new(HermitianOperator::maximally_mixed(p)).unwrap();
        let v = gme_verdict(&flat, &c).unwrap();
        assert_eq!(v.kind, GmeVerdictKind::Undecided);
    }

    #[test]
    fn criterion_names() {
        assert_eq!(Criterion::from_name("qghz").unwrap().name(), "qghz");
        assert_eq!(Criterion::from_name("qdicke").unwrap().name(), "qdicke:mirrored");
        assert_eq!(
            Criterion::from_name("qdicke:printed").unwrap().name(),
            "qdicke:printed"
        );
        assert!(Criterion::from_name("qfoo").is_err());
    }
}
