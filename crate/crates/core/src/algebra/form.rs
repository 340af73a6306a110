//! Linear and quadratic operator forms over the basis (a₊, a₊†, a₋, a₋†).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::poly::{BosonPoly, Monomial};

/// Basis labels, in coefficient order. Fixed — the JSON schema and every
/// fixture depend on it.
pub const BASIS_LABELS: [&str; 4] = ["a_plus", "a_plus_dag", "a_minus", "a_minus_dag"];

/// One of the four elementary ladder operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisOp {
    AnnihilatePlus = 0,
    CreatePlus = 1,
    AnnihilateMinus = 2,
    CreateMinus = 3,
}

pub const BASIS_OPS: [BasisOp; 4] = [
    BasisOp::AnnihilatePlus,
    BasisOp::CreatePlus,
    BasisOp::AnnihilateMinus,
    BasisOp::CreateMinus,
];

impl BasisOp {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn adjoint(self) -> Self {
        match self {
            BasisOp::AnnihilatePlus => BasisOp::CreatePlus,
            BasisOp::CreatePlus => BasisOp::AnnihilatePlus,
            BasisOp::AnnihilateMinus => BasisOp::CreateMinus,
            BasisOp::CreateMinus => BasisOp::AnnihilateMinus,
        }
    }

    /// [self, other] as a c-number (±1 for a same-mode conjugate pair,
    /// 0 otherwise).
    pub fn scalar_commutator(self, other: Self) -> f64 {
        use BasisOp::*;
        match (self, other) {
            (AnnihilatePlus, CreatePlus) | (AnnihilateMinus, CreateMinus) => 1.0,
            (CreatePlus, AnnihilatePlus) | (CreateMinus, AnnihilateMinus) => -1.0,
            _ => 0.0,
        }
    }

    /// Position in the canonical (creators-first) ordering used for the
    /// normal form of quadratic terms.
    fn normal_rank(self) -> u8 {
        match self {
            BasisOp::CreatePlus => 0,
            BasisOp::CreateMinus => 1,
            BasisOp::AnnihilatePlus => 2,
            BasisOp::AnnihilateMinus => 3,
        }
    }
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("polynomial of degree {degree} does not fit a quadratic form")]
    NotQuadratic { degree: usize },
    #[error("polynomial has a degree-one part; quadratic forms carry none")]
    LinearPart,
}

/// Exact coefficient vector of a field operator: c₀a₊ + c₁a₊† + c₂a₋ + c₃a₋†.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LinearForm {
    coeffs: [Complex64; 4],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    label: Option<String>,
}

impl LinearForm {
    pub fn new(coeffs: [Complex64; 4]) -> Self {
        Self {
            coeffs,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn basis(op: BasisOp) -> Self {
        let mut coeffs = [Complex64::new(0.0, 0.0); 4];
        coeffs[op.index()] = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, op: BasisOp) -> Complex64 {
        self.coeffs[op.index()]
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn adjoint(&self) -> Self {
        let mut coeffs = [Complex64::new(0.0, 0.0); 4];
        for op in BASIS_OPS {
            coeffs[op.adjoint().index()] = self.coeffs[op.index()].conj();
        }
        Self {
            coeffs,
            label: self.label.as_ref().map(|l| format!("{l}_dag")),
        }
    }

    /// [self, other] — always a c-number for linear forms.
    pub fn commute(&self, other: &Self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in BASIS_OPS {
            let ca = self.coeffs[a.index()];
            if ca.norm_sqr() == 0.0 {
                continue;
            }
            for b in BASIS_OPS {
                let k = a.scalar_commutator(b);
                if k != 0.0 {
                    acc += ca * other.coeffs[b.index()] * k;
                }
            }
        }
        acc
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.map(|v| v * c),
            label: None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs;
        for i in 0..4 {
            coeffs[i] += other.coeffs[i];
        }
        Self {
            coeffs,
            label: None,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (0..4)
            .map(|i| (self.coeffs[i] - other.coeffs[i]).norm())
            .fold(0.0, f64::max)
    }

    pub fn to_poly(&self) -> BosonPoly {
        let mut p = BosonPoly::zero();
        for op in BASIS_OPS {
            let c = self.coeffs[op.index()];
            if c.norm_sqr() != 0.0 {
                p = p.add(&BosonPoly::basis_op(op.index()).scaled(c));
            }
        }
        p
    }
}

/// Exact coefficient matrix of a quadratic operator plus a scalar:
/// Σ M[i][j]·bᵢbⱼ + s, kept in canonical normal order (creators left;
/// within creators and annihilators the plus mode precedes the minus).
///
/// Reordering a term only ever moves a c-number into `s`, so two forms
/// represent the same operator exactly when their (M, s) pairs match.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadraticForm {
    matrix: [[Complex64; 4]; 4],
    scalar: Complex64,
}

impl Default for QuadraticForm {
    fn default() -> Self {
        Self::zero()
    }
}

impl QuadraticForm {
    pub fn zero() -> Self {
        Self {
            matrix: [[Complex64::new(0.0, 0.0); 4]; 4],
            scalar: Complex64::new(0.0, 0.0),
        }
    }

    pub fn from_scalar(s: Complex64) -> Self {
        let mut q = Self::zero();
        q.scalar = s;
        q
    }

    /// Add c·bᵢbⱼ, normal-ordering on the fly.
    pub fn add_product_term(&mut self, i: BasisOp, j: BasisOp, c: Complex64) {
        if c.norm_sqr() == 0.0 {
            return;
        }
        if i.normal_rank() <= j.normal_rank() {
            self.matrix[i.index()][j.index()] += c;
        } else {
            // bᵢbⱼ = bⱼbᵢ + [bᵢ, bⱼ]
            self.matrix[j.index()][i.index()] += c;
            self.scalar += c * i.scalar_commutator(j);
        }
    }

    /// Product of two linear forms as a quadratic form.
    pub fn outer(left: &LinearForm, right: &LinearForm) -> Self {
        let mut q = Self::zero();
        for a in BASIS_OPS {
            let ca = left.coeff(a);
            if ca.norm_sqr() == 0.0 {
                continue;
            }
            for b in BASIS_OPS {
                let cb = right.coeff(b);
                if cb.norm_sqr() != 0.0 {
                    q.add_product_term(a, b, ca * cb);
                }
            }
        }
        q
    }

    /// ½(left†·right + right†·left).
    pub fn symmetrized(left: &LinearForm, right: &LinearForm) -> Self {
        let half = Complex64::new(0.5, 0.0);
        Self::outer(&left.adjoint(), right)
            .add(&Self::outer(&right.adjoint(), left))
            .scaled(half)
    }

    pub fn matrix(&self) -> &[[Complex64; 4]; 4] {
        &self.matrix
    }

    pub fn scalar(&self) -> Complex64 {
        self.scalar
    }

    /// The normal-ordered part :Q: (same quadratic content, scalar dropped).
    pub fn normal_part(&self) -> Self {
        Self {
            matrix: self.matrix,
            scalar: Complex64::new(0.0, 0.0),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.matrix[i][j] += other.matrix[i][j];
            }
        }
        out.scalar += other.scalar;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.matrix[i][j] *= c;
            }
        }
        out.scalar *= c;
        out
    }

    pub fn adjoint(&self) -> Self {
        Self::from_poly(&self.to_poly().adjoint()).expect("adjoint preserves degree")
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = (self.scalar - other.scalar).norm();
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.matrix[i][j] - other.matrix[i][j]).norm());
            }
        }
        d
    }

    pub fn max_abs_coeff(&self) -> f64 {
        let mut d = self.scalar.norm();
        for row in &self.matrix {
            for v in row {
                d = d.max(v.norm());
            }
        }
        d
    }

    pub fn to_poly(&self) -> BosonPoly {
        let mut p = BosonPoly::scalar(self.scalar);
        for i in BASIS_OPS {
            for j in BASIS_OPS {
                let c = self.matrix[i.index()][j.index()];
                if c.norm_sqr() != 0.0 {
                    let term = BosonPoly::basis_op(i.index()).mul(&BosonPoly::basis_op(j.index()));
                    p = p.add(&term.scaled(c));
                }
            }
        }
        p
    }

    pub fn from_poly(poly: &BosonPoly) -> Result<Self, AlgebraError> {
        let mut q = Self::zero();
        for (&mono, &c) in poly.terms() {
            let deg: usize = mono.iter().map(|&x| usize::from(x)).sum();
            match deg {
                0 => q.scalar += c,
                1 => return Err(AlgebraError::LinearPart),
                2 => {
                    let (i, j) = quadratic_slot(mono)?;
                    q.matrix[i.index()][j.index()] += c;
                }
                d => return Err(AlgebraError::NotQuadratic { degree: d }),
            }
        }
        Ok(q)
    }

    /// [self, other]. Quadratic-in-ladder operators close under commutation
    /// (every term of [bᵢbⱼ, bₖbₗ] is again a two-operator product), so the
    /// result is always representable.
    pub fn commute(&self, other: &Self) -> CommutatorResult {
        let p = self.to_poly().commutator(&other.to_poly());
        CommutatorResult::from_poly(&p).expect("quadratic commutators close")
    }
}

fn quadratic_slot(mono: Monomial) -> Result<(BasisOp, BasisOp), AlgebraError> {
    use BasisOp::*;
    let slot = match mono {
        [2, 0, 0, 0] => (CreatePlus, CreatePlus),
        [0, 2, 0, 0] => (AnnihilatePlus, AnnihilatePlus),
        [1, 1, 0, 0] => (CreatePlus, AnnihilatePlus),
        [0, 0, 2, 0] => (CreateMinus, CreateMinus),
        [0, 0, 0, 2] => (AnnihilateMinus, AnnihilateMinus),
        [0, 0, 1, 1] => (CreateMinus, AnnihilateMinus),
        [1, 0, 1, 0] => (CreatePlus, CreateMinus),
        [1, 0, 0, 1] => (CreatePlus, AnnihilateMinus),
        [0, 1, 1, 0] => (CreateMinus, AnnihilatePlus),
        [0, 1, 0, 1] => (AnnihilatePlus, AnnihilateMinus),
        _ => return Err(AlgebraError::NotQuadratic { degree: 2 }),
    };
    Ok(slot)
}

/// Result of a commutator between forms, tagged by the algebraic kind of
/// the outcome.
#[derive(Clone, Debug)]
pub enum CommutatorResult {
    Scalar(Complex64),
    Linear(LinearForm),
    Quadratic(QuadraticForm),
}

impl CommutatorResult {
    pub fn from_poly(poly: &BosonPoly) -> Result<Self, AlgebraError> {
        match poly.degree() {
            0 => Ok(Self::Scalar(poly.vacuum_expectation())),
            1 => {
                let mut coeffs = [Complex64::new(0.0, 0.0); 4];
                for (&mono, &c) in poly.terms() {
                    match mono {
                        // A linear form carries no scalar slot; commutators
                        // never produce this mix.
                        [0, 0, 0, 0] => return Err(AlgebraError::LinearPart),
                        [0, 1, 0, 0] => coeffs[0] += c,
                        [1, 0, 0, 0] => coeffs[1] += c,
                        [0, 0, 0, 1] => coeffs[2] += c,
                        [0, 0, 1, 0] => coeffs[3] += c,
                        _ => unreachable!("degree-1 polynomial"),
                    }
                }
                Ok(Self::Linear(LinearForm::new(coeffs)))
            }
            2 => Ok(Self::Quadratic(QuadraticForm::from_poly(poly)?)),
            d => Err(AlgebraError::NotQuadratic { degree: d }),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Scalar(_) => "scalar",
            Self::Linear(_) => "linear",
            Self::Quadratic(_) => "quadratic",
        }
    }

    pub fn as_scalar(&self) -> Option<Complex64> {
        match self {
            Self::Scalar(c) => Some(*c),
            _ => None,
        }
    }

    pub fn as_quadratic(&self) -> Option<&QuadraticForm> {
        match self {
            Self::Quadratic(q) => Some(q),
            _ => None,
        }
    }
}
