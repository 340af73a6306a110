//! Numerical laboratory for broadband two-mode quantum optics.
//!
//! The crate provides two independent engines for the same physics and the
//! machinery to cross-check them against each other:
//!
//! - [`algebra`] — exact, truncation-free symbolic layer for linear and
//!   quadratic forms in the two-mode ladder operators (a₊, a₊†, a₋, a₋†):
//!   complex quadratures, EPR components, quadrature-power matrix Γ, the
//!   SU(1,1) generators K and SU(2) generators J, and their closed
//!   commutator algebra.
//! - [`fock`] — brute-force oracle on the truncated two-mode Fock space:
//!   ladder matrices, matrix exponentials, squeezers, Hamiltonian evolution
//!   and expectation values, with an explicit trusted subspace and leakage
//!   monitoring.
//! - [`gaussian`] — fast symplectic engine for two-mode Gaussian states:
//!   mean/covariance propagation, complex-quadrature covariance, Simon-Duan
//!   and EPR inseparability witnesses, Rényi-2 entropy.
//! - [`interferometer`] — cascaded-amplifier (SU(1,1)) pipeline: squeezer,
//!   carrier phase, measuring amplifier, fringe scans and visibilities,
//!   runnable on either engine.
//! - [`spectral`] — discretized broadband description: per-frequency-bin
//!   mode pairs, quadrature power spectral density and total quadrature
//!   power.
//! - [`verify`] — the oracle-vs-algebra verification suite behind
//!   `tmq verify`, including the documented-discrepancy demonstrations.

pub mod algebra;
pub mod fock;
pub mod gaussian;
pub mod interferometer;
pub mod linalg;
pub mod spectral;
pub mod verify;

/// Format a float with 17 significant digits (scientific notation).
///
/// All CSV output goes through this so that fixtures are bit-stable and
/// round-trip exactly through `f64` parsing.
pub fn full_precision(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::full_precision;

    #[test]
    fn full_precision_round_trips() {
        for &x in &[
            0.0,
            0.5,
            -1.0 / 3.0,
            std::f64::consts::PI,
            2.2e-308,
            1.79e308,
        ] {
            let s = full_precision(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }
}
