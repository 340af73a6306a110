//! The named operators of the two-mode quadrature formalism, as exact
//! coefficient forms, plus the Heisenberg-picture squeeze and carrier-phase
//! transforms.
//!
//! Conventions, fixed once for the whole crate (ħ = 1, [x̂, ŷ] = i):
//!
//! - X₁ = (a₊ + a₋†)/√2 and X₂ = (a₊ − a₋†)/(√2·i); both commute with each
//!   other and with their own adjoints, while [X₁, X₂†] = i.
//! - Carrier rotation by θ sends a± → a±·e^(−iθ), equivalently
//!   X₁(θ) = X₁cosθ + X₂sinθ and X₂(θ) = X₁(θ + π/2).
//! - The squeezer with gain r and pump phase φ acts as
//!   a± → a±·cosh r + a∓†·e^(iφ)·sinh r, so X₁ → e^(+r)X₁ at φ = 0.

use num_complex::Complex64;

use super::form::{BasisOp, LinearForm, QuadraticForm};
use super::poly::BosonPoly;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which of the two complex quadrature axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum QuadAxis {
    One,
    Two,
}

/// The six named linear forms: complex quadratures and their Hermitian
/// (EPR) components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrature {
    X1,
    X2,
    Chi1,
    Gamma1,
    Chi2,
    Gamma2,
}

/// X₁ rotated to carrier phase θ.
pub fn x1(theta: f64) -> LinearForm {
    let base = LinearForm::new([
        c(FRAC_1_SQRT_2, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(FRAC_1_SQRT_2, 0.0),
    ]);
    let other = LinearForm::new([
        c(0.0, -FRAC_1_SQRT_2),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, FRAC_1_SQRT_2),
    ]);
    base.scaled(c(theta.cos(), 0.0))
        .add(&other.scaled(c(theta.sin(), 0.0)))
}

/// X₂(θ) ≡ X₁(θ + π/2).
pub fn x2(theta: f64) -> LinearForm {
    x1(theta + std::f64::consts::FRAC_PI_2)
}

/// Build any of the named quadrature combinations at carrier phase θ.
pub fn make_quadrature(which: Quadrature, theta: f64) -> LinearForm {
    let sqrt2_inv = c(FRAC_1_SQRT_2, 0.0);
    let form = match which {
        Quadrature::X1 => x1(theta),
        Quadrature::X2 => x2(theta),
        // Xᵢ = (χᵢ + iγᵢ)/√2, so χᵢ = (Xᵢ + Xᵢ†)/√2 and γᵢ = (Xᵢ − Xᵢ†)/(√2 i).
        Quadrature::Chi1 => {
            let x = x1(theta);
            x.add(&x.adjoint()).scaled(sqrt2_inv)
        }
        Quadrature::Gamma1 => {
            let x = x1(theta);
            x.sub(&x.adjoint()).scaled(c(0.0, -FRAC_1_SQRT_2))
        }
        Quadrature::Chi2 => {
            let x = x2(theta);
            x.add(&x.adjoint()).scaled(sqrt2_inv)
        }
        Quadrature::Gamma2 => {
            let x = x2(theta);
            x.sub(&x.adjoint()).scaled(c(0.0, -FRAC_1_SQRT_2))
        }
    };
    form.with_label(format!("{which:?}"))
}

fn axis_form(axis: QuadAxis, theta: f64) -> LinearForm {
    match axis {
        QuadAxis::One => x1(theta),
        QuadAxis::Two => x2(theta),
    }
}

/// Quadrature power / coherence matrix element
/// Γᵢⱼ(θ) = ½(Xᵢ(θ)†Xⱼ(θ) + Xⱼ(θ)†Xᵢ(θ)).
pub fn gamma(i: QuadAxis, j: QuadAxis, theta: f64) -> QuadraticForm {
    QuadraticForm::symmetrized(&axis_form(i, theta), &axis_form(j, theta))
}

/// Antisymmetric partner of Γ: Δᵢⱼ = (1/2i)(Xᵢ†Xⱼ − Xⱼ†Xᵢ).
pub fn delta(i: QuadAxis, j: QuadAxis) -> QuadraticForm {
    let xi = axis_form(i, 0.0);
    let xj = axis_form(j, 0.0);
    QuadraticForm::outer(&xi.adjoint(), &xj)
        .sub(&QuadraticForm::outer(&xj.adjoint(), &xi))
        .scaled(c(0.0, -0.5))
}

/// Total photon number N = a₊†a₊ + a₋†a₋.
pub fn total_number() -> QuadraticForm {
    let mut q = QuadraticForm::zero();
    q.add_product_term(BasisOp::CreatePlus, BasisOp::AnnihilatePlus, c(1.0, 0.0));
    q.add_product_term(BasisOp::CreateMinus, BasisOp::AnnihilateMinus, c(1.0, 0.0));
    q
}

/// Photon-number difference δN = a₊†a₊ − a₋†a₋, the conserved charge of
/// pair-creating interactions.
pub fn number_difference() -> QuadraticForm {
    let mut q = QuadraticForm::zero();
    q.add_product_term(BasisOp::CreatePlus, BasisOp::AnnihilatePlus, c(1.0, 0.0));
    q.add_product_term(BasisOp::CreateMinus, BasisOp::AnnihilateMinus, c(-1.0, 0.0));
    q
}

/// SU(1,1) generators (K₁, K₂, K₃) = (½(Γ₁₁−Γ₂₂), Γ₁₂, ½(Γ₁₁+Γ₂₂)).
pub fn su11_generators() -> (QuadraticForm, QuadraticForm, QuadraticForm) {
    let g11 = gamma(QuadAxis::One, QuadAxis::One, 0.0);
    let g22 = gamma(QuadAxis::Two, QuadAxis::Two, 0.0);
    let g12 = gamma(QuadAxis::One, QuadAxis::Two, 0.0);
    let half = c(0.5, 0.0);
    (
        g11.sub(&g22).scaled(half),
        g12,
        g11.add(&g22).scaled(half),
    )
}

/// SU(2) generators: J₁ = ½(a₊†a₋ + a₋†a₊), J₂ = −(i/2)(a₊†a₋ − a₋†a₊),
/// J₃ = ½(a₊†a₊ − a₋†a₋).
pub fn su2_generators() -> (QuadraticForm, QuadraticForm, QuadraticForm) {
    let mut j1 = QuadraticForm::zero();
    j1.add_product_term(BasisOp::CreatePlus, BasisOp::AnnihilateMinus, c(0.5, 0.0));
    j1.add_product_term(BasisOp::CreateMinus, BasisOp::AnnihilatePlus, c(0.5, 0.0));
    let mut j2 = QuadraticForm::zero();
    j2.add_product_term(BasisOp::CreatePlus, BasisOp::AnnihilateMinus, c(0.0, -0.5));
    j2.add_product_term(BasisOp::CreateMinus, BasisOp::AnnihilatePlus, c(0.0, 0.5));
    let j3 = number_difference().scaled(c(0.5, 0.0));
    (j1, j2, j3)
}

/// Casimir invariant K² = K₃² − K₁² − K₂² (quartic, hence a polynomial).
pub fn casimir() -> BosonPoly {
    let (k1, k2, k3) = su11_generators();
    let sq = |q: &QuadraticForm| q.to_poly().mul(&q.to_poly());
    sq(&k3).sub(&sq(&k1)).sub(&sq(&k2))
}

/// J² = J₁² + J₂² + J₃², which equals (N/2)(N/2 + 1) identically.
pub fn su2_casimir() -> BosonPoly {
    let (j1, j2, j3) = su2_generators();
    let sq = |q: &QuadraticForm| q.to_poly().mul(&q.to_poly());
    sq(&j1).add(&sq(&j2)).add(&sq(&j3))
}

/// Two-mode Hamiltonian ε(a₊†a₊ − a₋†a₋) + i(ξ*a₊a₋ − ξa₊†a₋†) in ħ = 1
/// units: detuning ε between the mode pair and pump amplitude ξ.
pub fn hamiltonian(eps: f64, xi: Complex64) -> QuadraticForm {
    let mut q = number_difference().scaled(c(eps, 0.0));
    q.add_product_term(
        BasisOp::AnnihilatePlus,
        BasisOp::AnnihilateMinus,
        c(0.0, 1.0) * xi.conj(),
    );
    q.add_product_term(BasisOp::CreatePlus, BasisOp::CreateMinus, c(0.0, -1.0) * xi);
    q
}

/// The pair-interaction Hamiltonian written in quadrature powers:
/// −2g[½(Γ₁₁ − Γ₂₂)sinθ − Γ₁₂cosθ]. Equals `hamiltonian(0, −g·e^(iθ))`.
pub fn pump_hamiltonian(gain: f64, theta: f64) -> QuadraticForm {
    let (k1, k2, _) = su11_generators();
    k1.scaled(c(theta.sin(), 0.0))
        .sub(&k2.scaled(c(theta.cos(), 0.0)))
        .scaled(c(-2.0 * gain, 0.0))
}

fn substitution_images(images: [LinearForm; 4]) -> [BosonPoly; 4] {
    [
        images[0].to_poly(),
        images[1].to_poly(),
        images[2].to_poly(),
        images[3].to_poly(),
    ]
}

fn squeeze_images(r: f64, phi: f64) -> [LinearForm; 4] {
    let ch = c(r.cosh(), 0.0);
    let sh = r.sinh();
    let p = Complex64::from_polar(sh, phi);
    let pc = Complex64::from_polar(sh, -phi);
    let zero = c(0.0, 0.0);
    [
        // a₊ → a₊·cosh r + a₋†·e^{iφ}·sinh r
        LinearForm::new([ch, zero, zero, p]),
        // a₊† → a₊†·cosh r + a₋·e^{−iφ}·sinh r
        LinearForm::new([zero, ch, pc, zero]),
        // a₋ → a₋·cosh r + a₊†·e^{iφ}·sinh r
        LinearForm::new([zero, p, ch, zero]),
        // a₋† → a₋†·cosh r + a₊·e^{−iφ}·sinh r
        LinearForm::new([pc, zero, zero, ch]),
    ]
}

fn rotation_images(theta: f64) -> [LinearForm; 4] {
    let e_minus = Complex64::from_polar(1.0, -theta);
    let e_plus = Complex64::from_polar(1.0, theta);
    [
        LinearForm::basis(BasisOp::AnnihilatePlus).scaled(e_minus),
        LinearForm::basis(BasisOp::CreatePlus).scaled(e_plus),
        LinearForm::basis(BasisOp::AnnihilateMinus).scaled(e_minus),
        LinearForm::basis(BasisOp::CreateMinus).scaled(e_plus),
    ]
}

fn transform_linear(form: &LinearForm, images: &[LinearForm; 4]) -> LinearForm {
    let mut out = LinearForm::default();
    for (idx, image) in images.iter().enumerate() {
        let coeff = form.coeffs()[idx];
        if coeff.norm_sqr() != 0.0 {
            out = out.add(&image.scaled(coeff));
        }
    }
    out
}

/// Heisenberg transform S†(r,φ)·L·S(r,φ) of a linear form.
pub fn squeeze_transform_linear(form: &LinearForm, r: f64, phi: f64) -> LinearForm {
    transform_linear(form, &squeeze_images(r, phi))
}

/// Heisenberg transform S†(r,φ)·Q·S(r,φ) of a quadratic form.
pub fn squeeze_transform(form: &QuadraticForm, r: f64, phi: f64) -> QuadraticForm {
    let images = substitution_images(squeeze_images(r, phi));
    QuadraticForm::from_poly(&form.to_poly().substitute_ops(&images))
        .expect("canonical substitution preserves degree")
}

/// Carrier-phase transform R†(θ)·L·R(θ): a± → a±·e^(−iθ).
pub fn rotate_linear(form: &LinearForm, theta: f64) -> LinearForm {
    transform_linear(form, &rotation_images(theta))
}

/// Carrier-phase transform of a quadratic form.
pub fn rotate_quadratic(form: &QuadraticForm, theta: f64) -> QuadraticForm {
    let images = substitution_images(rotation_images(theta));
    QuadraticForm::from_poly(&form.to_poly().substitute_ops(&images))
        .expect("canonical substitution preserves degree")
}
