//! Single-qubit Kraus channels (dephasing, amplitude damping), their
//! embedding on one qubit of an n-qubit register, and composition over all
//! qubits. Channels act on full 2^n density matrices; n stays small here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{cr, hermiticity_deviation, CMatrix, QubitIndexing, C_ZERO};
use crate::states::PureState;

const KRAUS_TOL: f64 = 1e-12;
const DENSITY_TOL: f64 = 1e-10;

/// Which noise family a channel belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    Dephasing,
    AmplitudeDamping,
}

impl ChannelKind {
    pub fn label(&self) -> &'static str {
        match self {
            ChannelKind::Dephasing => "dephasing",
            ChannelKind::AmplitudeDamping => "ad",
        }
    }
}

impl std::str::FromStr for ChannelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dephasing" | "d" | "pd" => Ok(ChannelKind::Dephasing),
            "ad" | "amplitude-damping" | "amplitude_damping" => Ok(ChannelKind::AmplitudeDamping),
            other => Err(Error::Unsupported(format!("unknown channel '{other}'"))),
        }
    }
}

/// Hermitian, positive, unit-trace operator on n qubits.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    n_qubits: usize,
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates dimensions, Hermiticity and unit trace. Positivity is not
    /// eigen-checked on every construction; see [`Self::min_eigenvalue`].
    pub fn new(n_qubits: usize, matrix: CMatrix) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::Dimension {
                expected: dim,
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > DENSITY_TOL {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: DENSITY_TOL,
            });
        }
        let tr = matrix.trace();
        let tdev = (tr.re - 1.0).abs().max(tr.im.abs());
        if tdev > DENSITY_TOL {
            return Err(Error::NotUnitTrace { deviation: tdev });
        }
        Ok(Self { n_qubits, matrix })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            n_qubits: psi.n_qubits(),
            matrix: psi.projector(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// tr(rho^2), real part.
    pub fn purity(&self) -> f64 {
        let mut acc = C_ZERO;
        for r in 0..self.matrix.nrows() {
            for c in 0..self.matrix.ncols() {
                acc += self.matrix[(r, c)] * self.matrix[(c, r)];
            }
        }
        acc.re
    }

    /// Smallest eigenvalue; used by positivity property tests.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        let eigs = crate::linalg::herm_eigenvalues(&self.matrix)?;
        Ok(eigs[0])
    }

    /// Reduced state on the kept qubits.
    pub fn marginal(&self, keep: &[usize]) -> Result<DensityOperator> {
        let red = crate::linalg::partial_trace(&self.matrix, keep, self.n_qubits)?;
        DensityOperator::new(keep.len(), red)
    }

    /// <psi| rho |psi>.
    pub fn fidelity_with_pure(&self, psi: &PureState) -> f64 {
        let amps = psi.amplitudes();
        let v = &self.matrix * amps;
        amps.dotc(&v).re
    }
}

/// List of 2x2 Kraus operators with completeness certificate.
#[derive(Debug, Clone)]
pub struct QubitChannel {
    kraus: Vec<CMatrix>,
    kind: ChannelKind,
    p: f64,
}

impl QubitChannel {
    pub fn new(kraus: Vec<CMatrix>, kind: ChannelKind, p: f64) -> Result<Self> {
        for k in &kraus {
            if k.nrows() != 2 || k.ncols() != 2 {
                return Err(Error::Dimension {
                    expected: 2,
                    rows: k.nrows(),
                    cols: k.ncols(),
                });
            }
        }
        let mut sum = CMatrix::zeros(2, 2);
        for k in &kraus {
            sum += k.adjoint() * k;
        }
        let dev = (&sum - crate::linalg::identity(2))
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        if dev > KRAUS_TOL {
            return Err(Error::KrausCompleteness { deviation: dev });
        }
        Ok(Self { kraus, kind, p })
    }

    pub fn kraus_ops(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Action on a single-qubit density matrix.
    pub fn apply_single(&self, rho: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(2, 2);
        for k in &self.kraus {
            out += k * rho * k.adjoint();
        }
        out
    }

    /// Applies the channel to qubit `i` of an n-qubit state. Equivalent to
    /// conjugating with I (x) .. (x) E_j (x) .. (x) I for each Kraus term,
    /// evaluated by index arithmetic rather than dense embedding.
    pub fn apply_on_qubit(&self, rho: &DensityOperator, i: usize) -> Result<DensityOperator> {
        let n = rho.n_qubits();
        let idx = QubitIndexing::new(n);
        idx.check_qubit(i)?;
        let dim = idx.dim();
        let m = rho.matrix();
        let mut out = CMatrix::zeros(dim, dim);
        for e in &self.kraus {
            for r in 0..dim {
                let rb = idx.bit(r, i);
                for c in 0..dim {
                    let cb = idx.bit(c, i);
                    let mut acc = C_ZERO;
                    for a in 0..2 {
                        let ea = e[(rb, a)];
                        if ea == C_ZERO {
                            continue;
                        }
                        let ra = idx.with_bit(r, i, a);
                        for b in 0..2 {
                            let eb = e[(cb, b)].conj();
                            if eb == C_ZERO {
                                continue;
                            }
                            acc += ea * m[(ra, idx.with_bit(c, i, b))] * eb;
                        }
                    }
                    out[(r, c)] += acc;
                }
            }
        }
        DensityOperator::new(n, out)
    }

    /// Composition of the channel over every qubit i = 1..n.
    pub fn apply_all(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let mut out = rho.clone();
        for i in 1..=rho.n_qubits() {
            out = self.apply_on_qubit(&out, i)?;
        }
        Ok(out)
    }

    /// Applies the channel to each qubit in `qubits` only.
    pub fn apply_on_qubits(&self, rho: &DensityOperator, qubits: &[usize]) -> Result<DensityOperator> {
        let mut out = rho.clone();
        for &i in qubits {
            out = self.apply_on_qubit(&out, i)?;
        }
        Ok(out)
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::ProbabilityRange { value: p });
    }
    Ok(())
}

/// Phase-damping channel: populations untouched, coherences scaled by (1-p).
/// Kraus set { sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |1><1| }.
pub fn dephasing(p: f64) -> Result<QubitChannel> {
    check_probability(p)?;
    let sq = cr((1.0 - p).sqrt());
    let sp = cr(p.sqrt());
    let e0 = CMatrix::from_row_slice(2, 2, &[sq, C_ZERO, C_ZERO, sq]);
    let e1 = CMatrix::from_row_slice(2, 2, &[sp, C_ZERO, C_ZERO, C_ZERO]);
    let e2 = CMatrix::from_row_slice(2, 2, &[C_ZERO, C_ZERO, C_ZERO, sp]);
    QubitChannel::new(vec![e0, e1, e2], ChannelKind::Dephasing, p)
}

/// Amplitude-damping channel: E0 = |0><0| + sqrt(1-p)|1><1|, E1 = sqrt(p)|0><1|.
pub fn amplitude_damping(p: f64) -> Result<QubitChannel> {
    check_probability(p)?;
    let e0 = CMatrix::from_row_slice(2, 2, &[cr(1.0), C_ZERO, C_ZERO, cr((1.0 - p).sqrt())]);
    let e1 = CMatrix::from_row_slice(2, 2, &[C_ZERO, cr(p.sqrt()), C_ZERO, C_ZERO]);
    QubitChannel::new(vec![e0, e1], ChannelKind::AmplitudeDamping, p)
}

/// Builds a channel of the given kind at noise strength p.
pub fn channel(kind: ChannelKind, p: f64) -> Result<QubitChannel> {
    match kind {
        ChannelKind::Dephasing => dephasing(p),
        ChannelKind::AmplitudeDamping => amplitude_damping(p),
    }
}

/// Exponential-decay clock: converts (gamma, t) to the noise parameter p.
#[derive(Debug, Clone, Copy)]
pub struct NoiseClock {
    pub gamma: f64,
    pub t: f64,
}

impl NoiseClock {
    pub fn new(gamma: f64, t: f64) -> Self {
        Self { gamma, t }
    }

    /// p(t) = 1 - exp(-gamma t).
    pub fn p(&self) -> f64 {
        1.0 - (-self.gamma * self.t).exp()
    }
}
