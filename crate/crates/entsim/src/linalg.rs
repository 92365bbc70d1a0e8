//! Dense complex-matrix kernel for small multiqubit systems: Kronecker
//! products, partial trace, partial transpose and Hermitian spectra.
//!
//! Qubits are numbered 1..=n with qubit 1 the leftmost tensor factor, so the
//! computational-basis index of |k_1 .. k_n> is sum_i k_i * 2^(n-i).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Inputs farther than this from their own adjoint are rejected as
/// non-Hermitian instead of being silently symmetrized.
pub const HERMITICITY_TOL: f64 = 1e-10;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Bit bookkeeping for the basis-index convention above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitIndexing {
    n_qubits: usize,
}

impl QubitIndexing {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Hilbert-space dimension 2^n.
    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Bit position (shift) of qubit `i` inside a basis index.
    pub fn shift(&self, qubit: usize) -> usize {
        self.n_qubits - qubit
    }

    /// Value of qubit `i` (1-based) in basis index `index`.
    pub fn bit(&self, index: usize, qubit: usize) -> usize {
        (index >> self.shift(qubit)) & 1
    }

    /// `index` with qubit `i` forced to `value`.
    pub fn with_bit(&self, index: usize, qubit: usize, value: usize) -> usize {
        let s = self.shift(qubit);
        (index & !(1 << s)) | (value << s)
    }

    /// Basis index of the single-excitation state with qubit `i` set.
    pub fn excitation(&self, qubit: usize) -> usize {
        1 << self.shift(qubit)
    }

    pub fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.n_qubits {
            return Err(Error::QubitIndex {
                index: qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Validates a subset of qubit indices: in range, no duplicates.
    pub fn check_subset(&self, subset: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.n_qubits + 1];
        for &q in subset {
            self.check_qubit(q)?;
            if seen[q] {
                return Err(Error::DuplicateQubit { index: q });
            }
            seen[q] = true;
        }
        Ok(())
    }
}

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

/// Kronecker product; dimensions multiply.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.trace()
}

/// Largest elementwise deviation of `m` from its own adjoint.
pub fn hermiticity_deviation(m: &CMatrix) -> f64 {
    let mut dev: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in r..m.ncols() {
            let d = (m[(r, c)] - m[(c, r)].conj()).norm();
            dev = dev.max(d);
        }
    }
    dev
}

fn check_square_power_of_two(rho: &CMatrix, n: usize) -> Result<()> {
    let dim = 1usize << n;
    if rho.nrows() != dim || rho.ncols() != dim {
        return Err(Error::Dimension {
            expected: dim,
            rows: rho.nrows(),
            cols: rho.ncols(),
        });
    }
    Ok(())
}

/// Traces out every qubit not listed in `keep`. The kept qubits retain their
/// relative order, so the qubit with the smallest original index becomes the
/// most significant bit of the reduced index.
pub fn partial_trace(rho: &CMatrix, keep: &[usize], n: usize) -> Result<CMatrix> {
    let idx = QubitIndexing::new(n);
    check_square_power_of_two(rho, n)?;
    idx.check_subset(keep)?;
    if keep.is_empty() {
        return Err(Error::InvalidBipartition {
            reason: "keep set is empty".into(),
        });
    }

    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    let k = keep_sorted.len();
    let env: Vec<usize> = (1..=n).filter(|q| !keep_sorted.contains(q)).collect();

    // Offset of a reduced index within the full index.
    let embed = |reduced: usize, env_bits: usize| -> usize {
        let mut full = 0usize;
        for (t, &q) in keep_sorted.iter().enumerate() {
            let bit = (reduced >> (k - 1 - t)) & 1;
            full |= bit << idx.shift(q);
        }
        for (t, &q) in env.iter().enumerate() {
            let bit = (env_bits >> (env.len() - 1 - t)) & 1;
            full |= bit << idx.shift(q);
        }
        full
    };

    let rdim = 1usize << k;
    let edim = 1usize << env.len();
    let mut out = CMatrix::zeros(rdim, rdim);
    for r in 0..rdim {
        for c in 0..rdim {
            let mut acc = C_ZERO;
            for e in 0..edim {
                acc += rho[(embed(r, e), embed(c, e))];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(out)
}

/// Transposes the indices of the qubits in `subset`, leaving the rest alone.
/// Involutive, and Hermiticity-preserving on Hermitian input.
pub fn partial_transpose(rho: &CMatrix, subset: &[usize], n: usize) -> Result<CMatrix> {
    let idx = QubitIndexing::new(n);
    check_square_power_of_two(rho, n)?;
    idx.check_subset(subset)?;

    let dim = idx.dim();
    let mut mask = 0usize;
    for &q in subset {
        mask |= 1 << idx.shift(q);
    }

    let mut out = CMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            // Swap the subset bits between row and column index.
            let r_src = (r & !mask) | (c & mask);
            let c_src = (c & !mask) | (r & mask);
            out[(r, c)] = rho[(r_src, c_src)];
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, ascending. Non-Hermitian input (beyond
/// [`HERMITICITY_TOL`]) is an error, not silently symmetrized.
pub fn herm_eigenvalues(h: &CMatrix) -> Result<Vec<f64>> {
    if h.nrows() != h.ncols() {
        return Err(Error::Dimension {
            expected: h.nrows(),
            rows: h.nrows(),
            cols: h.ncols(),
        });
    }
    if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let dev = hermiticity_deviation(h);
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: HERMITICITY_TOL,
        });
    }
    let mut eigs: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(eigs)
}

/// Hermitian eigendecomposition (values ascending is not guaranteed here;
/// pairs of (eigenvalue, eigenvector column) as returned by the solver).
pub fn herm_eigen(h: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    let dev = hermiticity_deviation(h);
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: HERMITICITY_TOL,
        });
    }
    let se = nalgebra::SymmetricEigen::new(h.clone());
    let vals: Vec<f64> = se.eigenvalues.iter().copied().collect();
    Ok((vals, se.eigenvectors))
}

/// Hermitian square root via eigendecomposition; tiny negative eigenvalues
/// from roundoff are clamped to zero.
pub fn herm_sqrt(h: &CMatrix) -> Result<CMatrix> {
    let (vals, vecs) = herm_eigen(h)?;
    let dim = h.nrows();
    let mut out = CMatrix::zeros(dim, dim);
    for (j, &v) in vals.iter().enumerate() {
        let s = cr(v.max(0.0).sqrt());
        let col = vecs.column(j);
        for r in 0..dim {
            for c in 0..dim {
                out[(r, c)] += s * col[r] * col[c].conj();
            }
        }
    }
    Ok(out)
}

/// Applies a 4x4 gate to qubits (i, j) of an amplitude vector, with qubit `i`
/// the first (most significant) slot of the gate basis |00>,|01>,|10>,|11>.
pub fn apply_two_qubit_gate(psi: &CVector, gate: &CMatrix, i: usize, j: usize, n: usize) -> CVector {
    let idx = QubitIndexing::new(n);
    let dim = idx.dim();
    debug_assert_eq!(psi.len(), dim);
    debug_assert_eq!(gate.nrows(), 4);
    let mut out = CVector::zeros(dim);
    let si = idx.shift(i);
    let sj = idx.shift(j);
    for b in 0..dim {
        if (b >> si) & 1 != 0 || (b >> sj) & 1 != 0 {
            continue; // visit each 4-group once, from its 00 member
        }
        let idx4 = [
            b,
            b | (1 << sj),
            b | (1 << si),
            b | (1 << si) | (1 << sj),
        ];
        for r in 0..4 {
            let mut acc = C_ZERO;
            for c in 0..4 {
                acc += gate[(r, c)] * psi[idx4[c]];
            }
            out[idx4[r]] = acc;
        }
    }
    out
}

/// Applies a 4x4 gate to qubits (i, j) of a density matrix: rho -> U rho U†.
pub fn conjugate_two_qubit_gate(
    rho: &CMatrix,
    gate: &CMatrix,
    i: usize,
    j: usize,
    n: usize,
) -> CMatrix {
    let idx = QubitIndexing::new(n);
    let dim = idx.dim();
    let si = idx.shift(i);
    let sj = idx.shift(j);
    let group = |b: usize| {
        [
            b,
            b | (1 << sj),
            b | (1 << si),
            b | (1 << si) | (1 << sj),
        ]
    };

    // Left multiply by U (rows), then right multiply by U† (columns).
    let mut tmp = rho.clone();
    for b in 0..dim {
        if (b >> si) & 1 != 0 || (b >> sj) & 1 != 0 {
            continue;
        }
        let g = group(b);
        for col in 0..dim {
            let vals = [tmp[(g[0], col)], tmp[(g[1], col)], tmp[(g[2], col)], tmp[(g[3], col)]];
            for r in 0..4 {
                let mut acc = C_ZERO;
                for c in 0..4 {
                    acc += gate[(r, c)] * vals[c];
                }
                tmp[(g[r], col)] = acc;
            }
        }
    }
    for b in 0..dim {
        if (b >> si) & 1 != 0 || (b >> sj) & 1 != 0 {
            continue;
        }
        let g = group(b);
        for row in 0..dim {
            let vals = [tmp[(row, g[0])], tmp[(row, g[1])], tmp[(row, g[2])], tmp[(row, g[3])]];
            for c in 0..4 {
                let mut acc = C_ZERO;
                for k in 0..4 {
                    acc += vals[k] * gate[(c, k)].conj();
                }
                tmp[(row, g[c])] = acc;
            }
        }
    }
    tmp
}
