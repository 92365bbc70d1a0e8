//! Constructors for GHZ, W and W-like states, and the two-qubit unitary
//! decomposition of the W state used by the boundary-reduction technique.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    apply_two_qubit_gate, cr, identity, CMatrix, CVector, QubitIndexing, C_ONE, C_ZERO,
};

const NORM_TOL: f64 = 1e-10;

/// Normalized amplitude vector over the 2^n computational basis.
#[derive(Debug, Clone)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: CVector,
}

impl PureState {
    pub fn new(n_qubits: usize, amplitudes: CVector) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if amplitudes.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                rows: amplitudes.len(),
                cols: 1,
            });
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm2: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                deviation: (norm2 - 1.0).abs(),
            });
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Projector |psi><psi| as a dense matrix.
    pub fn projector(&self) -> CMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    /// |<self|other>|^2; global phase drops out.
    pub fn overlap(&self, other: &PureState) -> f64 {
        self.amplitudes.dotc(&other.amplitudes).norm_sqr()
    }

    /// Applies a 4x4 gate to qubits (i, j); qubit i is the gate's first slot.
    pub fn apply_gate(&self, gate: &CMatrix, i: usize, j: usize) -> Self {
        Self {
            n_qubits: self.n_qubits,
            amplitudes: apply_two_qubit_gate(&self.amplitudes, gate, i, j, self.n_qubits),
        }
    }
}

/// Coefficients of a W-like state: single-excitation amplitudes a_1..a_n plus
/// the weight pair (alpha, beta) of the excitation sector vs |0..0>.
#[derive(Debug, Clone)]
pub struct WLikeSpec {
    pub coeffs: Vec<Complex64>,
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl WLikeSpec {
    pub fn new(coeffs: Vec<Complex64>, alpha: Complex64, beta: Complex64) -> Result<Self> {
        let spec = Self {
            coeffs,
            alpha,
            beta,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Uniform coefficients a_i = 1/sqrt(n) with the given (alpha, beta).
    pub fn uniform(n: usize, alpha: Complex64, beta: Complex64) -> Result<Self> {
        Self::new(vec![cr(1.0 / (n as f64).sqrt()); n], alpha, beta)
    }

    pub fn n_qubits(&self) -> usize {
        self.coeffs.len()
    }

    pub fn validate(&self) -> Result<()> {
        let c_norm: f64 = self.coeffs.iter().map(|z| z.norm_sqr()).sum();
        if (c_norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                deviation: (c_norm - 1.0).abs(),
            });
        }
        let ab = self.alpha.norm_sqr() + self.beta.norm_sqr();
        if (ab - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                deviation: (ab - 1.0).abs(),
            });
        }
        Ok(())
    }
}

/// Which W-like family member to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WLikeVariant {
    /// Pure single-excitation superposition (alpha implicitly 1, beta 0).
    Plain,
    /// alpha * (excitation sector) + beta * |0..0>.
    WithZero,
}

/// GHZ state alpha|0..0> + beta|1..1>.
pub fn ghz(n: usize, alpha: Complex64, beta: Complex64) -> Result<PureState> {
    if n == 0 {
        return Err(Error::TooFewQubits { min: 1, got: 0 });
    }
    let dim = 1usize << n;
    let mut amps = CVector::zeros(dim);
    amps[0] = alpha;
    amps[dim - 1] = beta;
    PureState::new(n, amps)
}

/// W state: uniform superposition of all single-excitation basis states.
pub fn w(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let idx = QubitIndexing::new(n);
    let mut amps = CVector::zeros(idx.dim());
    let a = cr(1.0 / (n as f64).sqrt());
    for q in 1..=n {
        amps[idx.excitation(q)] = a;
    }
    PureState::new(n, amps)
}

/// W-like state from a coefficient spec.
pub fn w_like(spec: &WLikeSpec, variant: WLikeVariant) -> Result<PureState> {
    spec.validate()?;
    let n = spec.n_qubits();
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let idx = QubitIndexing::new(n);
    let mut amps = CVector::zeros(idx.dim());
    let (alpha, beta) = match variant {
        WLikeVariant::Plain => (C_ONE, C_ZERO),
        WLikeVariant::WithZero => (spec.alpha, spec.beta),
    };
    for (q0, a) in spec.coeffs.iter().enumerate() {
        amps[idx.excitation(q0 + 1)] = alpha * a;
    }
    amps[0] = beta;
    PureState::new(n, amps)
}

/// Asymmetric W state on n+1 qubits: (|0>|W_n> + |1>|0..0>) / sqrt(2).
/// Qubit 1 is the lone share; the remaining n qubits carry the W component.
pub fn w_asymmetric(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    let total = n + 1;
    let idx = QubitIndexing::new(total);
    let mut amps = CVector::zeros(idx.dim());
    let s = cr(1.0 / 2f64.sqrt());
    let wn = w(n)?;
    // |0> (x) |W_n>
    for (k, a) in wn.amplitudes().iter().enumerate() {
        amps[k] += s * a;
    }
    // |1> (x) |0..0>
    amps[idx.excitation(1)] += s;
    PureState::new(total, amps)
}

/// One two-qubit step of the W-state decomposition. Realizes a 4x4 unitary
/// acting on qubits (i, j), parametrized by integers nu <= mu.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoQubitGateStep {
    pub i: usize,
    pub j: usize,
    pub mu: usize,
    pub nu: usize,
}

impl TwoQubitGateStep {
    pub fn new(i: usize, j: usize, mu: usize, nu: usize) -> Result<Self> {
        if mu == 0 || nu > mu {
            return Err(Error::InvalidGateStep { mu, nu });
        }
        Ok(Self { i, j, mu, nu })
    }

    /// Whether the step couples the two sides of the cut {1..k}:{k+1..n}.
    pub fn crosses(&self, k: usize) -> bool {
        (self.i <= k) != (self.j <= k)
    }

    /// The 4x4 matrix in the basis |00>,|01>,|10>,|11> of qubits (i, j):
    /// identity on the |00>/|11> sector and a reflection mixing |01>,|10>.
    pub fn matrix(&self) -> CMatrix {
        let mu = self.mu as f64;
        let nu = self.nu as f64;
        let c = ((mu - nu) / mu).sqrt();
        let s = (nu / mu).sqrt();
        let mut m = identity(4);
        m[(1, 1)] = cr(-c);
        m[(1, 2)] = cr(s);
        m[(2, 1)] = cr(s);
        m[(2, 2)] = cr(c);
        m
    }
}

/// Builds the 4x4 matrix of a step (convenience wrapper).
pub fn u_step_matrix(step: &TwoQubitGateStep) -> CMatrix {
    step.matrix()
}

/// Ordered list of two-qubit steps that maps the single-excitation seed
/// |0..1_k..0> onto |W_n>, with exactly one step crossing the boundary
/// {1..k}:{k+1..n} — the first one, acting on the pair (k, k+1).
///
/// The crossing step splits the excitation across the boundary with weights
/// k/n and (n-k)/n; the remaining steps spread each share uniformly inside
/// its own side and never touch the other side.
pub fn w_decomposition(n: usize, boundary_k: usize) -> Result<Vec<TwoQubitGateStep>> {
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, got: n });
    }
    if boundary_k == 0 || boundary_k >= n {
        return Err(Error::InvalidCut { k: boundary_k, n });
    }
    let k = boundary_k;
    let mut steps = Vec::with_capacity(n - 1);
    steps.push(TwoQubitGateStep::new(k, k + 1, n, n - k)?);
    // inside {1..k}: walk the excitation from qubit k down to qubit 1
    for j in (2..=k).rev() {
        steps.push(TwoQubitGateStep::new(j, j - 1, j, j - 1)?);
    }
    // inside {k+1..n}: spread from qubit k+1 up to qubit n
    for i in (k + 1)..n {
        steps.push(TwoQubitGateStep::new(i, i + 1, n - i + 1, n - i)?);
    }
    Ok(steps)
}

/// Seed state |0..0 1_k 0..0> for the k-cut decomposition.
pub fn decomposition_seed(n: usize, boundary_k: usize) -> Result<PureState> {
    if boundary_k == 0 || boundary_k > n {
        return Err(Error::InvalidCut { k: boundary_k, n });
    }
    let idx = QubitIndexing::new(n);
    let mut amps = CVector::zeros(idx.dim());
    amps[idx.excitation(boundary_k)] = C_ONE;
    PureState::new(n, amps)
}

/// Applies the steps in order to a state.
pub fn apply_steps(state: &PureState, steps: &[TwoQubitGateStep]) -> PureState {
    let mut out = state.clone();
    for st in steps {
        out = out.apply_gate(&st.matrix(), st.i, st.j);
    }
    out
}

/// Dense 2^n x 2^n embedding of a step's 4x4 matrix.
pub fn embed_step(step: &TwoQubitGateStep, n: usize) -> CMatrix {
    let idx = QubitIndexing::new(n);
    let dim = idx.dim();
    let g = step.matrix();
    let mut out = CMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let rm = 2 * idx.bit(r, step.i) + idx.bit(r, step.j);
            let cm = 2 * idx.bit(c, step.i) + idx.bit(c, step.j);
            let r_rest = r & !(1 << idx.shift(step.i)) & !(1 << idx.shift(step.j));
            let c_rest = c & !(1 << idx.shift(step.i)) & !(1 << idx.shift(step.j));
            if r_rest == c_rest {
                out[(r, c)] = g[(rm, cm)];
            }
        }
    }
    out
}

/// Unitary that concentrates the excitation sector: maps |W_n> to |10..0>
/// and leaves |0..0> fixed. Built as the adjoint of the ordered product of
/// the k=1 decomposition steps.
pub fn decode_unitary(n: usize) -> Result<CMatrix> {
    let steps = w_decomposition(n, 1)?;
    let dim = 1usize << n;
    let mut u = identity(dim);
    // product with later steps on the left: U = S_m .. S_2 S_1
    for st in &steps {
        u = embed_step(st, n) * u;
    }
    Ok(u.adjoint())
}

/// Applies the decode map (adjoint of the build steps) to a density matrix
/// without forming the dense unitary: steps are self-inverse reflections, so
/// the adjoint of the product is the same steps applied in reverse order.
pub fn decode_density(rho: &CMatrix, n: usize) -> Result<CMatrix> {
    let steps = w_decomposition(n, 1)?;
    let mut out = rho.clone();
    for st in steps.iter().rev() {
        out = crate::linalg::conjugate_two_qubit_gate(&out, &st.matrix(), st.i, st.j, n);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kron;

    const EPS: f64 = 1e-10;

    #[test]
    fn ghz_bell_case() {
        let s = cr(1.0 / 2f64.sqrt());
        let st = ghz(2, s, s).unwrap();
        assert!((st.amplitudes()[0] - s).norm() < EPS);
        assert!((st.amplitudes()[3] - s).norm() < EPS);
        assert!(st.amplitudes()[1].norm() < EPS);
    }

    #[test]
    fn ghz_separable_limit() {
        let st = ghz(3, C_ONE, C_ZERO).unwrap();
        assert!((st.amplitudes()[0] - C_ONE).norm() < EPS);
    }

    #[test]
    fn ghz_rejects_unnormalized() {
        assert!(ghz(2, cr(0.9), cr(0.9)).is_err());
    }

    #[test]
    fn w_state_amplitudes() {
        let st = w(3).unwrap();
        let a = 1.0 / 3f64.sqrt();
        for k in [4usize, 2, 1] {
            assert!((st.amplitudes()[k] - cr(a)).norm() < EPS);
        }
        assert!(st.amplitudes()[0].norm() < EPS);
        assert!(w(1).is_err());
    }

    #[test]
    fn w_two_qubits() {
        let st = w(2).unwrap();
        let s = 1.0 / 2f64.sqrt();
        assert!((st.amplitudes()[1] - cr(s)).norm() < EPS);
        assert!((st.amplitudes()[2] - cr(s)).norm() < EPS);
    }

    #[test]
    fn w_like_product_limit() {
        let mut coeffs = vec![C_ZERO; 4];
        coeffs[0] = C_ONE;
        let spec = WLikeSpec::new(coeffs, C_ONE, C_ZERO).unwrap();
        let st = w_like(&spec, WLikeVariant::Plain).unwrap();
        let idx = QubitIndexing::new(4);
        assert!((st.amplitudes()[idx.excitation(1)] - C_ONE).norm() < EPS);
    }

    #[test]
    fn w_like_uniform_reduces_to_w() {
        let spec = WLikeSpec::uniform(5, C_ONE, C_ZERO).unwrap();
        let st = w_like(&spec, WLikeVariant::WithZero).unwrap();
        let wn = w(5).unwrap();
        assert!((st.overlap(&wn) - 1.0).abs() < EPS);
    }

    #[test]
    fn w_asymmetric_expansion() {
        // n=2: (|001> + |010>)/2 + |100>/sqrt(2)
        let st = w_asymmetric(2).unwrap();
        assert!((st.amplitudes()[1] - cr(0.5)).norm() < EPS);
        assert!((st.amplitudes()[2] - cr(0.5)).norm() < EPS);
        assert!((st.amplitudes()[4] - cr(1.0 / 2f64.sqrt())).norm() < EPS);
    }

    #[test]
    fn u_step_swap_when_mu_equals_nu() {
        let st = TwoQubitGateStep::new(1, 2, 3, 3).unwrap();
        let m = st.matrix();
        assert!((m[(1, 2)] - C_ONE).norm() < EPS);
        assert!((m[(2, 1)] - C_ONE).norm() < EPS);
        assert!(m[(1, 1)].norm() < EPS);
        assert!(m[(2, 2)].norm() < EPS);
    }

    #[test]
    fn u_step_mu2_nu1_block() {
        let st = TwoQubitGateStep::new(1, 2, 2, 1).unwrap();
        let m = st.matrix();
        let s = 1.0 / 2f64.sqrt();
        assert!((m[(1, 1)] - cr(-s)).norm() < EPS);
        assert!((m[(1, 2)] - cr(s)).norm() < EPS);
        assert!((m[(2, 1)] - cr(s)).norm() < EPS);
        assert!((m[(2, 2)] - cr(s)).norm() < EPS);
    }

    #[test]
    fn u_step_unitary_and_involutive() {
        for (mu, nu) in [(5usize, 2usize), (7, 7), (9, 1), (4, 3)] {
            let m = TwoQubitGateStep::new(2, 3, mu, nu).unwrap().matrix();
            let prod = &m * m.adjoint();
            assert!((&prod - identity(4)).iter().all(|z| z.norm() < 1e-12));
            let sq = &m * &m;
            assert!((&sq - identity(4)).iter().all(|z| z.norm() < 1e-12));
        }
        assert!(TwoQubitGateStep::new(1, 2, 2, 3).is_err());
    }

    #[test]
    fn decomposition_reproduces_w_for_all_cuts() {
        for n in 2..=8 {
            let target = w(n).unwrap();
            for k in 1..n {
                let steps = w_decomposition(n, k).unwrap();
                let crossing: Vec<_> = steps.iter().filter(|s| s.crosses(k)).collect();
                assert_eq!(crossing.len(), 1, "n={n} k={k}");
                assert_eq!(crossing[0].i, k);
                assert_eq!(crossing[0].j, k + 1);
                assert_eq!(crossing[0].mu, n);
                assert_eq!(crossing[0].nu, n - k);
                assert!(std::ptr::eq(crossing[0], &steps[0]));

                let seed = decomposition_seed(n, k).unwrap();
                let built = apply_steps(&seed, &steps);
                assert!(
                    (built.overlap(&target) - 1.0).abs() < 1e-10,
                    "n={n} k={k} overlap {}",
                    built.overlap(&target)
                );
            }
        }
    }

    #[test]
    fn decomposition_base_case() {
        let steps = w_decomposition(2, 1).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!((steps[0].mu, steps[0].nu), (2, 1));
    }

    #[test]
    fn decomposition_n4_k2_crossing_step() {
        let steps = w_decomposition(4, 2).unwrap();
        assert_eq!((steps[0].mu, steps[0].nu), (4, 2));
        // |W2(2)> on the boundary pair of a 4-qubit system: (|01>+|10>)/sqrt(2)
        let m = steps[0].matrix();
        let s = 1.0 / 2f64.sqrt();
        assert!((m[(1, 2)] - cr(s)).norm() < EPS);
        assert!((m[(2, 2)] - cr(s)).norm() < EPS);
    }

    #[test]
    fn w_projector_permutation_invariant() {
        // swapping any two qubits leaves |W><W| unchanged
        let n = 4;
        let st = w(n).unwrap();
        let rho = st.projector();
        let mut swap = CMatrix::zeros(4, 4);
        swap[(0, 0)] = C_ONE;
        swap[(1, 2)] = C_ONE;
        swap[(2, 1)] = C_ONE;
        swap[(3, 3)] = C_ONE;
        for (i, j) in [(1usize, 2usize), (2, 4), (1, 4)] {
            let rho_swapped = crate::linalg::conjugate_two_qubit_gate(&rho, &swap, i, j, n);
            assert!((&rho_swapped - &rho).iter().all(|z| z.norm() < 1e-12));
        }
    }

    #[test]
    fn decode_unitary_maps_w_to_first_excitation() {
        for n in 2..=6 {
            let u = decode_unitary(n).unwrap();
            let idx = QubitIndexing::new(n);
            let psi = &u * w(n).unwrap().amplitudes();
            // |10..0> up to global phase
            assert!((psi[idx.excitation(1)].norm() - 1.0).abs() < 1e-10);
            let zero = &u * ghz(n, C_ONE, C_ZERO).unwrap().amplitudes();
            assert!((zero[0].norm() - 1.0).abs() < 1e-10);
            // unitarity
            let prod = &u * u.adjoint();
            assert!((&prod - identity(1 << n)).iter().all(|z| z.norm() < 1e-10));
        }
    }

    #[test]
    fn decode_unitary_two_qubit_case() {
        // coincides with the inverse of the single step up to global phase
        let u = decode_unitary(2).unwrap();
        let step = TwoQubitGateStep::new(1, 2, 2, 1).unwrap().matrix();
        let inv = step.adjoint();
        // find a phase aligning them
        let mut phase = C_ZERO;
        'outer: for r in 0..4 {
            for c in 0..4 {
                if inv[(r, c)].norm() > 1e-9 {
                    phase = u[(r, c)] / inv[(r, c)];
                    break 'outer;
                }
            }
        }
        assert!((phase.norm() - 1.0).abs() < 1e-10);
        assert!((&u - &(inv * phase)).iter().all(|z| z.norm() < 1e-10));
    }

    #[test]
    fn decode_density_matches_dense_unitary() {
        let n = 4;
        let st = w(n).unwrap();
        let rho = st.projector();
        let u = decode_unitary(n).unwrap();
        let dense = &u * &rho * u.adjoint();
        let fast = decode_density(&rho, n).unwrap();
        assert!((&dense - &fast).iter().all(|z| z.norm() < 1e-10));
    }

    #[test]
    fn embed_step_matches_kron_for_adjacent_pair() {
        let step = TwoQubitGateStep::new(2, 3, 5, 2).unwrap();
        let full = embed_step(&step, 3);
        let expect = kron(&identity(2), &step.matrix());
        assert!((&full - &expect).iter().all(|z| z.norm() < 1e-12));
    }
}
