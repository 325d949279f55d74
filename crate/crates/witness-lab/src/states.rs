//! State families: Bell states, isotropic mixtures, maximally entangled qudit
//! pairs, the magic simplex of locally maximally mixed two-qubit states, GHZ
//! and Dicke states, and seeded random pure/product states.
//!
//! Randomness is reproducible by construction: every generator takes an
//! explicit seed and derives nothing from global state. Optimizer restarts
//! use the substream convention `seed + restart_index`.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::operators::{C64, DimensionProfile, HermitianOperator, PSD_TOL};

/// A pure state: unit-norm amplitude vector over the computational product
/// basis (party 1 most significant).
#[derive(Debug, Clone)]
pub struct PureState {
    profile: DimensionProfile,
    amps: DVector<C64>,
}

impl PureState {
    /// Normalizes the amplitudes; rejects the zero vector.
    pub fn new(profile: DimensionProfile, amps: DVector<C64>) -> Result<Self> {
        if amps.len() != profile.total() {
            return Err(Error::ShapeMismatch { rows: amps.len(), cols: 1, dim: profile.total() });
        }
        let norm = amps.norm();
        if !norm.is_finite() || norm < 1e-300 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { profile, amps: amps / C64::new(norm, 0.0) })
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.profile.total()
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &Self) -> Result<C64> {
        if self.profile != other.profile {
            return Err(Error::ProfileMismatch(
                self.profile.dims().to_vec(),
                other.profile.dims().to_vec(),
            ));
        }
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.amps.len() {
            acc += self.amps[i].conj() * other.amps[i];
        }
        Ok(acc)
    }

    /// The projector |psi><psi|. Entries are `psi_i conj(psi_j) / <psi|psi>`;
    /// dividing by the squared norm cancels the rounding of the stored
    /// amplitudes, so e.g. the GHZ projector has entries of exactly 1/2.
    pub fn projector(&self) -> HermitianOperator {
        let n = self.amps.len();
        let norm2: f64 = self.amps.iter().map(|z| z.norm_sqr()).sum();
        let mat = DMatrix::from_fn(n, n, |i, j| {
            self.amps[i] * self.amps[j].conj() / C64::new(norm2, 0.0)
        });
        HermitianOperator::new(self.profile.clone(), mat).expect("projector is Hermitian")
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix { op: self.projector() }
    }
}

/// A density matrix: positive semidefinite (within 1e-10) with unit trace
/// (within 1e-10).
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    op: HermitianOperator,
}

impl DensityMatrix {
    pub fn new(op: HermitianOperator) -> Result<Self> {
        let tr = op.trace();
        if (tr - 1.0).abs() > 1e-10 {
            return Err(Error::NotUnitTrace(tr));
        }
        let lambda_min = op.lambda_min();
        if lambda_min < -PSD_TOL {
            return Err(Error::NotPsd(lambda_min));
        }
        Ok(Self { op })
    }

    /// Convex mixture of pure product states. Weights are normalized; both
    /// invariants hold by construction.
    pub fn mixture(parts: &[(f64, PureState)]) -> Result<Self> {
        let profile = parts
            .first()
            .map(|(_, s)| s.profile().clone())
            .ok_or(Error::BadArgument("empty mixture".into()))?;
        let total: f64 = parts.iter().map(|(w, _)| w.max(0.0)).sum();
        if total <= 0.0 {
            return Err(Error::BadArgument("mixture weights sum to zero".into()));
        }
        let mut acc = HermitianOperator::zero(profile.clone());
        for (w, s) in parts {
            if s.profile() != &profile {
                return Err(Error::ProfileMismatch(
                    profile.dims().to_vec(),
                    s.profile().dims().to_vec(),
                ));
            }
            acc = acc.add(&s.projector().scale(w.max(0.0) / total))?;
        }
        Ok(Self { op: acc })
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn profile(&self) -> &DimensionProfile {
        self.op.profile()
    }

    /// Density-matrix entry in 1-based index notation.
    pub fn rho(&self, i: usize, j: usize) -> C64 {
        self.op.entry(i - 1, j - 1)
    }
}

impl From<PureState> for DensityMatrix {
    fn from(psi: PureState) -> Self {
        psi.density()
    }
}

/// The four two-qubit Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

pub fn bell(kind: BellKind) -> PureState {
    let profile = DimensionProfile::qubits(2).expect("two qubits fit the guard");
    let mut amps = DVector::from_element(4, C64::new(0.0, 0.0));
    let one = C64::new(1.0, 0.0);
    match kind {
        BellKind::PhiPlus => {
            amps[0] = one;
            amps[3] = one;
        }
        BellKind::PhiMinus => {
            amps[0] = one;
            amps[3] = -one;
        }
        BellKind::PsiPlus => {
            amps[1] = one;
            amps[2] = one;
        }
        BellKind::PsiMinus => {
            amps[1] = one;
            amps[2] = -one;
        }
    }
    PureState::new(profile, amps).expect("Bell amplitudes are nonzero")
}

/// `sum_i |ii> / sqrt(d)` on a (d, d) profile.
pub fn max_entangled(d: usize) -> Result<PureState> {
    let profile = DimensionProfile::bipartite(d, d)?;
    let mut amps = DVector::from_element(d * d, C64::new(0.0, 0.0));
    for i in 0..d {
        amps[i * d + i] = C64::new(1.0, 0.0);
    }
    PureState::new(profile, amps)
}

/// The two isotropic one-parameter families: a Bell projector mixed with I/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotropicFamily {
    /// `(1-t) |phi+><phi+| + t I/4`
    Alpha,
    /// `(1-t) |phi-><phi-| + t I/4`
    Beta,
}

pub fn isotropic(family: IsotropicFamily, t: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterRange(t));
    }
    let kind = match family {
        IsotropicFamily::Alpha => BellKind::PhiPlus,
        IsotropicFamily::Beta => BellKind::PhiMinus,
    };
    let proj = bell(kind).projector();
    let mixed = HermitianOperator::maximally_mixed(proj.profile().clone());
    let op = proj.affine(1.0 - t, &mixed, t)?;
    Ok(DensityMatrix { op })
}

/// `(|000> + |111>) / sqrt(2)`.
pub fn ghz3() -> PureState {
    let profile = DimensionProfile::qubits(3).expect("three qubits fit the guard");
    let mut amps = DVector::from_element(8, C64::new(0.0, 0.0));
    amps[0] = C64::new(1.0, 0.0);
    amps[7] = C64::new(1.0, 0.0);
    PureState::new(profile, amps).expect("GHZ amplitudes are nonzero")
}

/// `(|001> + |010> + |100>) / sqrt(3)`, coherences real positive.
pub fn dicke3() -> PureState {
    let profile = DimensionProfile::qubits(3).expect("three qubits fit the guard");
    let mut amps = DVector::from_element(8, C64::new(0.0, 0.0));
    amps[1] = C64::new(1.0, 0.0);
    amps[2] = C64::new(1.0, 0.0);
    amps[4] = C64::new(1.0, 0.0);
    PureState::new(profile, amps).expect("Dicke amplitudes are nonzero")
}

/// Coordinates in the magic simplex of locally maximally mixed two-qubit
/// operators `(I (x) I + sum_i c_i sigma_i (x) sigma_i) / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexPoint {
    pub c: [f64; 3],
}

impl SimplexPoint {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c: [c1, c2, c3] }
    }

    /// |c1| + |c2| + |c3|; at most 1 exactly on the separable double pyramid.
    pub fn abs_sum(&self) -> f64 {
        self.c.iter().map(|x| x.abs()).sum()
    }
}

/// The unit-trace Hermitian operator at a simplex point. Positivity is *not*
/// required here; points outside the state tetrahedron are legitimate inputs
/// and classify as nonphysical.
pub fn simplex_state(p: SimplexPoint) -> HermitianOperator {
    let profile = DimensionProfile::qubits(2).expect("two qubits fit the guard");
    let [c1, c2, c3] = p.c;
    let z = |re: f64| C64::new(re, 0.0);
    // (I + c1 XX + c2 YY + c3 ZZ)/4 written out; XX and YY fill the
    // antidiagonal, ZZ the diagonal
    let rows = [
        [z((1.0 + c3) / 4.0), z(0.0), z(0.0), z((c1 - c2) / 4.0)],
        [z(0.0), z((1.0 - c3) / 4.0), z((c1 + c2) / 4.0), z(0.0)],
        [z(0.0), z((c1 + c2) / 4.0), z((1.0 - c3) / 4.0), z(0.0)],
        [z((c1 - c2) / 4.0), z(0.0), z(0.0), z((1.0 + c3) / 4.0)],
    ];
    HermitianOperator::from_fn(profile, |i, j| rows[i][j]).expect("simplex operator is Hermitian")
}

/// Pauli correlation coordinates `c_i = tr[rho sigma_i (x) sigma_i]` of a
/// two-qubit operator; the inverse of [`simplex_state`] on its image.
pub fn simplex_coordinates(op: &HermitianOperator) -> Result<SimplexPoint> {
    if op.profile().dims() != [2, 2] {
        return Err(Error::ProfileMismatch(op.profile().dims().to_vec(), vec![2, 2]));
    }
    let m = op.matrix();
    let xx = (m[(0, 3)] + m[(1, 2)] + m[(2, 1)] + m[(3, 0)]).re;
    let yy = (-m[(0, 3)] + m[(1, 2)] + m[(2, 1)] - m[(3, 0)]).re;
    let zz = (m[(0, 0)] - m[(1, 1)] - m[(2, 2)] + m[(3, 3)]).re;
    Ok(SimplexPoint::new(xx, yy, zz))
}

/// Ground-truth classification of a simplex point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplexClass {
    Nonphysical,
    Separable,
    Entangled,
}

/// Nonphysical iff the operator is not PSD; otherwise separable exactly on
/// the double pyramid |c1| + |c2| + |c3| <= 1, else entangled.
pub fn simplex_classify(p: SimplexPoint) -> SimplexClass {
    if !simplex_state(p).is_psd(PSD_TOL) {
        SimplexClass::Nonphysical
    } else if p.abs_sum() <= 1.0 {
        SimplexClass::Separable
    } else {
        SimplexClass::Entangled
    }
}

/// A grouping of parties; each group is optimized as one unit. The default
/// `fully_product` partition has every party alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    groups: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(groups: Vec<Vec<usize>>, parties: usize) -> Result<Self> {
        let mut seen = vec![false; parties];
        for g in &groups {
            if g.is_empty() {
                return Err(Error::BadPartition("empty group".into()));
            }
            for &p in g {
                if p >= parties {
                    return Err(Error::BadPartition(format!(
                        "party {p} out of range for {parties} parties"
                    )));
                }
                if seen[p] {
                    return Err(Error::BadPartition(format!("party {p} appears twice")));
                }
                seen[p] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::BadPartition("partition does not cover all parties".into()));
        }
        let mut groups = groups;
        for g in &mut groups {
            g.sort_unstable();
        }
        Ok(Self { groups })
    }

    pub fn fully_product(parties: usize) -> Self {
        Self { groups: (0..parties).map(|p| vec![p]).collect() }
    }

    /// Party `i` alone versus everyone else.
    pub fn bipartition(i: usize, parties: usize) -> Result<Self> {
        if i >= parties {
            return Err(Error::BadPartition(format!("party {i} out of range")));
        }
        let rest: Vec<usize> = (0..parties).filter(|&p| p != i).collect();
        Self::new(vec![vec![i], rest], parties)
    }

    /// All parties in one group: optimization over arbitrary pure states.
    pub fn single_group(parties: usize) -> Self {
        Self { groups: vec![(0..parties).collect()] }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group_dims(&self, profile: &DimensionProfile) -> Vec<usize> {
        self.groups
            .iter()
            .map(|g| g.iter().map(|&p| profile.dims()[p]).product())
            .collect()
    }

    /// Profile made of one group's parties, in ascending party order.
    pub fn group_profile(&self, g: usize, profile: &DimensionProfile) -> DimensionProfile {
        let dims: Vec<usize> = self.groups[g].iter().map(|&p| profile.dims()[p]).collect();
        DimensionProfile::new(&dims).expect("group of an admissible profile is admissible")
    }

    /// For each global basis index, the local index inside group `g`
    /// (mixed-radix over the group's parties, ascending party order).
    pub fn group_index_table(&self, g: usize, profile: &DimensionProfile) -> Vec<usize> {
        let dim = profile.total();
        let mut table = Vec::with_capacity(dim);
        for m in 0..dim {
            let digits = profile.digits_of(m);
            let mut idx = 0;
            for &p in &self.groups[g] {
                idx = idx * profile.dims()[p] + digits[p];
            }
            table.push(idx);
        }
        table
    }
}

/// Per-group unit vectors representing a pure product (or partition-product)
/// state; the extreme points of the separable-state classes.
#[derive(Debug, Clone)]
pub struct ProductVector {
    profile: DimensionProfile,
    partition: Partition,
    factors: Vec<PureState>,
}

impl ProductVector {
    pub fn new(
        profile: DimensionProfile,
        partition: Partition,
        factors: Vec<PureState>,
    ) -> Result<Self> {
        if factors.len() != partition.groups().len() {
            return Err(Error::BadPartition(format!(
                "{} factors for {} groups",
                factors.len(),
                partition.groups().len()
            )));
        }
        for (g, f) in factors.iter().enumerate() {
            let want = partition.group_profile(g, &profile);
            if f.profile() != &want {
                return Err(Error::BadPartition(format!(
                    "factor {g} has profile {:?}, expected {:?}",
                    f.profile().dims(),
                    want.dims()
                )));
            }
        }
        Ok(Self { profile, partition, factors })
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn factors(&self) -> &[PureState] {
        &self.factors
    }

    /// The global pure state `(x)_g factor_g`, assembled across possibly
    /// non-contiguous groups.
    pub fn assemble(&self) -> PureState {
        let dim = self.profile.total();
        let tables: Vec<Vec<usize>> = (0..self.factors.len())
            .map(|g| self.partition.group_index_table(g, &self.profile))
            .collect();
        let amps = DVector::from_fn(dim, |m, _| {
            let mut z = C64::new(1.0, 0.0);
            for (g, f) in self.factors.iter().enumerate() {
                z *= f.amplitudes()[tables[g][m]];
            }
            z
        });
        PureState::new(self.profile.clone(), amps).expect("product of unit vectors is unit")
    }

    pub fn density(&self) -> DensityMatrix {
        self.assemble().density()
    }
}

fn complex_gaussian_vector(rng: &mut ChaCha8Rng, n: usize) -> DVector<C64> {
    DVector::from_fn(n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        C64::new(re, im)
    })
}

/// Haar-random pure state on the whole space, deterministic in the seed.
pub fn random_pure(profile: &DimensionProfile, seed: u64) -> PureState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_pure_with(profile, &mut rng)
}

pub(crate) fn random_pure_with(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> PureState {
    loop {
        let v = complex_gaussian_vector(rng, profile.total());
        if let Ok(s) = PureState::new(profile.clone(), v) {
            return s;
        }
    }
}

/// Product of independent Haar-random factors, one per partition group.
pub fn random_product(profile: &DimensionProfile, partition: &Partition, seed: u64) -> ProductVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_product_with(profile, partition, &mut rng)
}

pub(crate) fn random_product_with(
    profile: &DimensionProfile,
    partition: &Partition,
    rng: &mut ChaCha8Rng,
) -> ProductVector {
    let factors: Vec<PureState> = (0..partition.groups().len())
        .map(|g| random_pure_with(&partition.group_profile(g, profile), rng))
        .collect();
    ProductVector::new(profile.clone(), partition.clone(), factors)
        .expect("factors built from the partition")
}

/// Full-rank random density matrix `G G^dagger / tr`, G complex Gaussian.
pub fn random_density(profile: &DimensionProfile, seed: u64) -> DensityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = profile.total();
    let g = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    });
    let prod = &g * g.adjoint();
    let tr: f64 = (0..n).map(|i| prod[(i, i)].re).sum();
    let op = HermitianOperator::new(profile.clone(), prod / C64::new(tr, 0.0))
        .expect("G G^dagger is Hermitian");
    DensityMatrix { op }
}
