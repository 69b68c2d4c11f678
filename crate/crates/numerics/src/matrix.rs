//! Hermitian matrices over ℝ, ℂ and the quaternions, stored as β real
//! component matrices X = X⁰ + Σ_k X^k e_k with X⁰ symmetric and X^k
//! antisymmetric.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Tolerance for pairing the doubled eigenvalues of the complex
/// representation of a quaternion Hermitian matrix.
pub const PAIR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BetaHermitian {
    beta: u8,
    comps: Vec<DMatrix<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixError {
    Beta(u8),
    Shape,
    NotHermitian,
    Unpaired { gap: f64 },
}

impl std::fmt::Display for MatrixError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixError::Beta(b) => write!(f, "beta must be 1, 2 or 4, got {b}"),
            MatrixError::Shape => write!(f, "component matrices must be square and of equal size"),
            MatrixError::NotHermitian => write!(f, "components violate the Hermiticity condition"),
            MatrixError::Unpaired { gap } => write!(f, "quaternion spectrum is not paired (gap {gap:e})"),
        }
    }
}

impl std::error::Error for MatrixError {}

impl BetaHermitian {
    pub fn new(beta: u8, comps: Vec<DMatrix<f64>>) -> Result<Self, MatrixError> {
        if !matches!(beta, 1 | 2 | 4) {
            return Err(MatrixError::Beta(beta));
        }
        let n = comps.first().map_or(0, |m| m.nrows());
        if comps.len() != beta as usize || comps.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(MatrixError::Shape);
        }
        let tol = 1e-12;
        let sym = (&comps[0] - comps[0].transpose()).amax() <= tol;
        let anti = comps[1..].iter().all(|m| (m + m.transpose()).amax() <= tol);
        if !sym || !anti {
            return Err(MatrixError::NotHermitian);
        }
        Ok(Self { beta, comps })
    }

    /// Real diagonal matrix; valid for every β.
    pub fn diagonal(beta: u8, d: &[f64]) -> Result<Self, MatrixError> {
        let n = d.len();
        let mut comps = vec![DMatrix::zeros(n, n); beta.max(1) as usize];
        comps[0] = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(d));
        Self::new(beta, comps)
    }

    pub fn identity(beta: u8, n: usize) -> Result<Self, MatrixError> {
        Self::diagonal(beta, &vec![1.0; n])
    }

    /// X + diag(d).
    pub fn add_diagonal(&self, d: &[f64]) -> Self {
        let mut out = self.clone();
        for (i, v) in d.iter().enumerate() {
            out.comps[0][(i, i)] += v;
        }
        out
    }

    pub fn beta(&self) -> u8 {
        self.beta
    }

    pub fn size(&self) -> usize {
        self.comps[0].nrows()
    }

    pub fn component(&self, k: usize) -> &DMatrix<f64> {
        &self.comps[k]
    }

    /// Complex matrix representing X: X⁰ (+ i X¹) for β = 1, 2, and the
    /// 2N×2N Pauli form with blocks
    /// [[X⁰ + iX¹, X² + iX³], [−X² + iX³, X⁰ − iX¹]] for β = 4.
    pub fn to_complex(&self) -> DMatrix<Complex64> {
        let n = self.size();
        let c = |k: usize, i: usize, j: usize| self.comps.get(k).map_or(0.0, |m| m[(i, j)]);
        match self.beta {
            1 | 2 => DMatrix::from_fn(n, n, |i, j| Complex64::new(c(0, i, j), c(1, i, j))),
            _ => DMatrix::from_fn(2 * n, 2 * n, |r, s| {
                let (i, a) = (r / 2, r % 2);
                let (j, b) = (s / 2, s % 2);
                match (a, b) {
                    (0, 0) => Complex64::new(c(0, i, j), c(1, i, j)),
                    (0, 1) => Complex64::new(c(2, i, j), c(3, i, j)),
                    (1, 0) => Complex64::new(-c(2, i, j), c(3, i, j)),
                    _ => Complex64::new(c(0, i, j), -c(1, i, j)),
                }
            }),
        }
    }

    /// Real trace; for quaternions ½ Σ (X_ii + conj X_ii) = Σ X⁰_ii.
    pub fn re_trace(&self) -> f64 {
        self.comps[0].trace()
    }

    /// tr XY, computed as Re tr of the complex representation (halved for β = 4).
    pub fn trace_product(&self, other: &Self) -> f64 {
        let p = self.to_complex() * other.to_complex();
        let t = p.trace().re;
        if self.beta == 4 {
            t / 2.0
        } else {
            t
        }
    }

    /// Eigenvalues in increasing order. For β = 4 the doubled spectrum of
    /// the Pauli form is paired in sorted order and one member of each pair
    /// is kept.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, MatrixError> {
        let mut ev: Vec<f64> = if self.beta == 1 {
            self.comps[0].clone().symmetric_eigenvalues().iter().copied().collect()
        } else {
            self.to_complex().symmetric_eigenvalues().iter().copied().collect()
        };
        ev.sort_by(|a, b| a.total_cmp(b));
        if self.beta != 4 {
            return Ok(ev);
        }
        let scale = ev.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let mut out = Vec::with_capacity(ev.len() / 2);
        for pair in ev.chunks(2) {
            let gap = (pair[1] - pair[0]).abs();
            if gap > PAIR_TOL * scale {
                return Err(MatrixError::Unpaired { gap });
            }
            out.push(0.5 * (pair[0] + pair[1]));
        }
        Ok(out)
    }

    /// det X as the product of eigenvalues; for β = 4 this is √det P(X).
    pub fn qdet(&self) -> Result<f64, MatrixError> {
        Ok(self.eigenvalues()?.iter().product())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_identity() {
        let x = BetaHermitian::identity(4, 2).unwrap();
        assert_eq!(x.re_trace(), 2.0);
        assert!((x.qdet().unwrap() - 1.0).abs() < 1e-14);
        assert!((x.trace_product(&x) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_broken_symmetry() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 1.0]);
        assert_eq!(BetaHermitian::new(1, vec![m]), Err(MatrixError::NotHermitian));
        assert_eq!(BetaHermitian::new(3, vec![]), Err(MatrixError::Beta(3)));
    }
}
