//! Normal-ordered polynomials in the two-mode ladder operators.
//!
//! A monomial is stored as powers `[p₊, q₊, p₋, q₋]` and denotes the
//! normal-ordered product (a₊†)^p₊ (a₊)^q₊ (a₋†)^p₋ (a₋)^q₋. Products are
//! rewritten to normal order with the per-mode identity
//!
//!   a^q a†^p = Σ_k k!·C(q,k)·C(p,k)·a†^(p−k) a^(q−k)
//!
//! which keeps every coefficient an exact (dyadic-rational times integer)
//! combination of the inputs. Degrees stay tiny here — nothing in the crate
//! goes beyond quartic — so a BTreeMap of monomials is plenty.

use std::collections::BTreeMap;

use num_complex::Complex64;

/// Powers `[p₊, q₊, p₋, q₋]` of a normal-ordered monomial.
pub type Monomial = [u8; 4];

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BosonPoly {
    terms: BTreeMap<Monomial, Complex64>,
}

fn binomial(n: u8, k: u8) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= f64::from(n - i) / f64::from(i + 1);
    }
    acc
}

fn factorial(k: u8) -> f64 {
    (1..=u64::from(k)).product::<u64>() as f64
}

/// Normal-order the single-mode product (a†^p1 a^q1)(a†^p2 a^q2) as a list
/// of ((p, q), weight) contributions.
fn mode_product(p1: u8, q1: u8, p2: u8, q2: u8) -> Vec<((u8, u8), f64)> {
    let kmax = q1.min(p2);
    (0..=kmax)
        .map(|k| {
            let w = factorial(k) * binomial(q1, k) * binomial(p2, k);
            ((p1 + p2 - k, q1 + q2 - k), w)
        })
        .collect()
}

impl BosonPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(c: Complex64) -> Self {
        let mut p = Self::default();
        p.add_term([0, 0, 0, 0], c);
        p
    }

    /// Single basis operator by index in (a₊, a₊†, a₋, a₋†) order.
    pub fn basis_op(index: usize) -> Self {
        let mono = match index {
            0 => [0, 1, 0, 0],
            1 => [1, 0, 0, 0],
            2 => [0, 0, 0, 1],
            3 => [0, 0, 1, 0],
            _ => panic!("basis index {index} out of range"),
        };
        let mut p = Self::default();
        p.add_term(mono, Complex64::new(1.0, 0.0));
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: Complex64) {
        let entry = self.terms.entry(mono).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.re == 0.0 && entry.im == 0.0 {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: Monomial) -> Complex64 {
        self.terms
            .get(&mono)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// ⟨0|·|0⟩ — for a normal-ordered polynomial this is just the scalar
    /// coefficient.
    pub fn vacuum_expectation(&self) -> Complex64 {
        self.coefficient([0, 0, 0, 0])
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&p| usize::from(p)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = Self::default();
        for (&m, &v) in &self.terms {
            out.add_term(m, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, &v) in &other.terms {
            out.add_term(m, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&[p1p, q1p, p1m, q1m], &c1) in &self.terms {
            for (&[p2p, q2p, p2m, q2m], &c2) in &other.terms {
                let c = c1 * c2;
                for ((pp, qp), wp) in mode_product(p1p, q1p, p2p, q2p) {
                    for &((pm, qm), wm) in &mode_product(p1m, q1m, p2m, q2m) {
                        out.add_term([pp, qp, pm, qm], c * (wp * wm));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::default();
        for (&[pp, qp, pm, qm], &c) in &self.terms {
            out.add_term([qp, pp, qm, pm], c.conj());
        }
        out
    }

    /// Largest coefficient of the difference — the natural "distance" for
    /// exact-identity tests.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs_coeff()
    }

    /// Replace each basis operator by a degree-one polynomial. Meant for
    /// canonical (commutator-preserving) substitutions such as Bogoliubov
    /// and carrier-phase maps; images are indexed in (a₊, a₊†, a₋, a₋†)
    /// order.
    pub fn substitute_ops(&self, images: &[Self; 4]) -> Self {
        let mut out = Self::default();
        for (&[pp, qp, pm, qm], &c) in &self.terms {
            let mut acc = Self::scalar(c);
            for _ in 0..pp {
                acc = acc.mul(&images[1]);
            }
            for _ in 0..qp {
                acc = acc.mul(&images[0]);
            }
            for _ in 0..pm {
                acc = acc.mul(&images[3]);
            }
            for _ in 0..qm {
                acc = acc.mul(&images[2]);
            }
            out = out.add(&acc);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonical_commutator() {
        let a = BosonPoly::basis_op(0);
        let adag = BosonPoly::basis_op(1);
        let one = BosonPoly::one();
        assert_eq!(a.commutator(&adag), one);
        // Different modes commute.
        let bdag = BosonPoly::basis_op(3);
        assert!(a.commutator(&bdag).max_abs_coeff() == 0.0);
    }

    #[test]
    fn normal_ordering_reorders_with_scalar() {
        // a a† = a†a + 1
        let a = BosonPoly::basis_op(0);
        let adag = BosonPoly::basis_op(1);
        let prod = a.mul(&adag);
        assert_eq!(prod.coefficient([1, 1, 0, 0]), c(1.0, 0.0));
        assert_eq!(prod.coefficient([0, 0, 0, 0]), c(1.0, 0.0));
    }

    #[test]
    fn mode_product_weights() {
        // a² a†² = a†²a² + 4 a†a + 2
        let contributions = mode_product(0, 2, 2, 0);
        let find = |p: u8, q: u8| {
            contributions
                .iter()
                .find(|((pp, qq), _)| *pp == p && *qq == q)
                .map(|(_, w)| *w)
                .unwrap_or(0.0)
        };
        assert_eq!(find(2, 2), 1.0);
        assert_eq!(find(1, 1), 4.0);
        assert_eq!(find(0, 0), 2.0);
    }

    #[test]
    fn adjoint_involution() {
        let mut p = BosonPoly::zero();
        p.add_term([2, 1, 0, 1], c(0.3, -0.7));
        p.add_term([0, 0, 1, 0], c(1.5, 2.0));
        assert_eq!(p.adjoint().adjoint(), p);
    }

    #[test]
    fn substitution_identity() {
        let images = [
            BosonPoly::basis_op(0),
            BosonPoly::basis_op(1),
            BosonPoly::basis_op(2),
            BosonPoly::basis_op(3),
        ];
        let mut p = BosonPoly::zero();
        p.add_term([1, 1, 1, 1], c(2.0, 0.0));
        p.add_term([0, 1, 0, 0], c(0.0, 1.0));
        assert_eq!(p.substitute_ops(&images), p);
    }
}
