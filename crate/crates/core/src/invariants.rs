//! Numerical invariants of the Brill-Noether curve `W = W¹ₐ₊₂(C)` on a general
//! curve `C` of genus `g = 2a+1`.
//!
//! Every formula lives as a default method on [`Formulas`] and composes the
//! other quantities through `self`, so an implementor that overrides one
//! formula (see [`crate::verify::mutation`]) sees the change propagate into
//! everything derived from it. [`Standard`] is the unmodified set; the free
//! functions in this module are thin wrappers over it.
//!
//! All divisions that are supposed to be exact go through
//! [`exact_div`](crate::exactmath::exact_div) or
//! [`ExactRational::to_integer`], so a formula that stops producing integers
//! fails loudly instead of rounding.

use num_bigint::Sign;
use num_traits::{One, Zero};
use serde::Serialize;

pub use crate::divisor::{Basis, DivisorClassExpr, Generator};
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, exact_div, exact_div_nat, factorial, to_nat, ExactRational, Int, Nat,
};

/// Smallest `a` for which `W¹ₐ₊₂(C)` is a smooth curve with a non-trivial correspondence.
pub const MIN_A: u64 = 2;

/// The input `a` and the degrees derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveParams {
    pub a: u64,
    /// Genus of `C`, `2a+1`.
    pub g: u64,
    /// `deg ω_C = 2g−2 = 4a`.
    pub deg_omega: u64,
    /// Degree of the pencil, `a+2`.
    pub deg_l: u64,
    /// Degree of the residual series `M = ω_C ⊗ L⁻¹`, `3a−2`.
    pub deg_m: u64,
}

impl CurveParams {
    pub fn new(a: u64) -> Result<Self> {
        check_a(a)?;
        Ok(Self {
            a,
            g: 2 * a + 1,
            deg_omega: 4 * a,
            deg_l: a + 2,
            deg_m: 3 * a - 2,
        })
    }
}

fn check_a(a: u64) -> Result<()> {
    if a < MIN_A {
        return Err(Error::ParameterOutOfRange { a, min: MIN_A });
    }
    Ok(())
}

fn int(v: u64) -> Int {
    Int::from(v)
}

/// `x² + (e−2)x − (e−1) = (x − 1)(x − (1−e))`, the relation satisfied by the
/// correspondence endomorphism on the Jacobian of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormEndoPoly {
    pub e: Nat,
    /// Coefficients of `x²`, `x`, `1`.
    pub coefficients: [Int; 3],
    /// `[1, 1−e]`.
    pub roots: [Int; 2],
}

impl NormEndoPoly {
    pub fn eval(&self, x: &Int) -> Int {
        let [c2, c1, c0] = &self.coefficients;
        (c2 * x + c1) * x + c0
    }

    /// Coefficients of `(x − r₁)(x − r₂)` for the stored roots.
    pub fn expand_roots(&self) -> [Int; 3] {
        let [r1, r2] = &self.roots;
        [Int::one(), -(r1 + r2), r1 * r2]
    }
}

/// Everything computed for one value of `a`. Construction through
/// [`Formulas::full_invariants`] checks the cross-identities among the fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub params: CurveParams,
    pub genus_w: Nat,
    pub exponent_e: Nat,
    pub deg_gamma: Nat,
    pub alpha: Int,
    pub beta: Int,
    pub m: Nat,
    pub dim_p: Nat,
    pub dim_z: Nat,
    pub rho: Int,
}

/// Brill-Noether number `ρ(g, r, d) = g − (r+1)(g−d+r)`.
pub fn rho(g: u64, r: u64, d: u64) -> Int {
    let g = int(g);
    &g - (int(r) + 1) * (&g - int(d) + int(r))
}

/// Numerators of the terms of the alternating Castelnuovo sum for `deg γ`,
/// before the common `1/(a+2)` factor:
/// `(−1)^i · C(a, a−2−i) · C(2a−i, a−1−i)` for `i = 0..=a−2`.
///
/// Successive binomials are obtained from their predecessors by one small
/// multiplication and one exact small division, so a sweep to large `a`
/// stays quadratic rather than cubic.
pub fn deg_gamma_terms(a: u64) -> Result<Vec<Int>> {
    check_a(a)?;
    // C(a, a−2−i) and C(2a−i, a−1−i) at i = 0
    let mut left = binomial(a, a as i64 - 2);
    let mut right = binomial(2 * a, a as i64 - 1);
    let mut terms = Vec::with_capacity((a - 1) as usize);
    for i in 0..=a - 2 {
        let term = Int::from(&left * &right);
        terms.push(if i % 2 == 0 { term } else { -term });
        if i < a - 2 {
            // C(n, k−1) = C(n, k)·k/(n−k+1) with n = a, k = a−2−i
            left = exact_div_nat(&(left * (a - 2 - i)), &Nat::from(i + 3))?;
            // C(n−1, k−1) = C(n, k)·k/n with n = 2a−i, k = a−1−i
            right = exact_div_nat(&(right * (a - 1 - i)), &Nat::from(2 * a - i))?;
        }
    }
    Ok(terms)
}

/// The formula set. Override a method to substitute one formula; everything
/// derived from it follows.
pub trait Formulas: Sync {
    /// Catalan number `(2a)! / (a!(a+1)!)`, the Prym-Tyurin exponent.
    fn exponent(&self, a: u64) -> Nat {
        let num = factorial(2 * a);
        let den = factorial(a) * factorial(a + 1);
        let e = &num / &den;
        debug_assert_eq!(&e * &den, num);
        e
    }

    /// Genus of the Brill-Noether curve, `a/(a+2) · 2·g!/(a!(a+1)!) + 1`.
    ///
    /// `2g!` is read as `2·(g!)`. The other reading, `(2g)!`, gives
    /// 151201 at `a = 2` instead of the genus 11 of `W¹₄` on a genus-5 curve,
    /// whereas `2·(g!)` gives 11 at `a = 2` and 169 at `a = 4`.
    fn genus_w(&self, a: u64) -> Result<Nat> {
        check_a(a)?;
        let g = 2 * a + 1;
        let frac = ExactRational::new(int(a), int(a + 2))?;
        let ratio = ExactRational::new(
            Int::from(factorial(g) * 2u32),
            Int::from(factorial(a) * factorial(a + 1)),
        )?;
        let value = &(&frac * &ratio) + &ExactRational::one();
        Ok(to_nat(&value.to_integer()?))
    }

    /// Degree of the correspondence γ as the alternating Castelnuovo sum
    /// `Σ (−1)^i/(a+2) · C(a, a−2−i) · C(2a−i, a−1−i)`.
    ///
    /// The geometric secant-plane reading needs `a ≥ 3`; at `a = 2` the sum
    /// is the single term 4/4 = 1, matching the involution `L ↦ ω ⊗ L⁻¹`.
    fn deg_gamma_sum(&self, a: u64) -> Result<Nat> {
        // integer numerators share the denominator a+2, so sum them first and
        // reduce once
        let numerator: Int = deg_gamma_terms(a)?.iter().sum();
        let value = ExactRational::new(numerator, int(a + 2))?;
        Ok(to_nat(&value.to_integer()?))
    }

    /// Closed form `1 + e(2a+1)(a−2)/(a+2)`, an oracle for [`Self::deg_gamma_sum`]
    /// obtained by solving `g(W) − deg γ = e·g` with the genus formula.
    fn deg_gamma_closed(&self, a: u64) -> Result<Nat> {
        check_a(a)?;
        let e = Int::from(self.exponent(a));
        let num = e * int(2 * a + 1) * int(a - 2);
        let q = exact_div(&num, &int(a + 2))?;
        Ok(to_nat(&(q + 1)))
    }

    /// `α = (a+2)/(4a) · (g(W) − 1 − e(g−1))`.
    fn alpha(&self, a: u64) -> Result<Int> {
        check_a(a)?;
        let gw = Int::from(self.genus_w(a)?);
        let e = Int::from(self.exponent(a));
        let inner = gw - 1 - e * int(2 * a);
        let value = &ExactRational::new(int(a + 2), int(4 * a))? * &ExactRational::from(inner);
        value.to_integer()
    }

    /// `β = 1 − e`.
    fn beta(&self, a: u64) -> Int {
        Int::one() - Int::from(self.exponent(a))
    }

    /// Degree `m = (a+2)·deg γ` of `γ(L) ∈ Pic^m(C)`.
    fn total_degree_m(&self, a: u64) -> Result<Nat> {
        check_a(a)?;
        Ok(self.deg_gamma_sum(a)? * (a + 2))
    }

    /// `γ(L) = ω^α ⊗ L^β` in the basis (ω, L).
    fn gamma_class(&self, a: u64) -> Result<DivisorClassExpr> {
        let params = CurveParams::new(a)?;
        Ok(DivisorClassExpr::new(
            params,
            Basis::OmegaL,
            self.alpha(a)?,
            self.beta(a),
        ))
    }

    /// Class of `Σ D_i` over the secant divisors, in the basis (M, ω).
    ///
    /// From `γ(L) = M^{deg γ}(−Σ D_i)` we get `Σ D_i = M^{deg γ} ⊗ γ(L)⁻¹`,
    /// which comes out as `M^{deg γ − (e−1)} ⊗ ω^{(e−1) − α}`.
    fn secant_sum_class(&self, a: u64) -> Result<DivisorClassExpr> {
        let params = CurveParams::new(a)?;
        let m_power = DivisorClassExpr::power(
            params,
            Basis::MOmega,
            Generator::M,
            Int::from(self.deg_gamma_sum(a)?),
        );
        Ok(&m_power - &self.gamma_class(a)?)
    }

    /// Dimension of the complement `Z = im(e−1+γ)`, `((e−1)g(W) + deg γ)/e`.
    fn dim_z(&self, a: u64) -> Result<Nat> {
        check_a(a)?;
        let e = Int::from(self.exponent(a));
        let gw = Int::from(self.genus_w(a)?);
        let deg = Int::from(self.deg_gamma_sum(a)?);
        let num = (&e - 1) * gw + deg;
        let v = exact_div(&num, &e)?;
        if v.sign() == Sign::Minus {
            return Err(Error::InternalInconsistency {
                a,
                identity: "dim Z ≥ 0",
                lhs: v.to_string(),
                rhs: "0".into(),
            });
        }
        Ok(to_nat(&v))
    }

    /// True iff `(e−2)·g(W) ≠ −2·deg γ`, the inequality that rules out
    /// `φ̃|_P = 0`.
    fn contradiction_guard(&self, a: u64) -> Result<bool> {
        let (lhs, rhs) = self.contradiction_sides(a)?;
        Ok(lhs != rhs)
    }

    /// `((e−2)·g(W), −2·deg γ)`.
    fn contradiction_sides(&self, a: u64) -> Result<(Int, Int)> {
        check_a(a)?;
        let e = Int::from(self.exponent(a));
        let gw = Int::from(self.genus_w(a)?);
        let deg = Int::from(self.deg_gamma_sum(a)?);
        Ok(((e - 2) * gw, deg * -2))
    }

    /// `(1/(a!(a+1)!), e/(2a)!)`, the two forms of the coefficient of
    /// `∧^{g−1}[Θ]` in the class of `W`.
    fn class_coefficients(&self, a: u64) -> Result<(ExactRational, ExactRational)> {
        let lhs = ExactRational::new(1, Int::from(factorial(a) * factorial(a + 1)))?;
        let rhs = ExactRational::new(Int::from(self.exponent(a)), Int::from(factorial(2 * a)))?;
        Ok((lhs, rhs))
    }

    fn class_coefficient_identity(&self, a: u64) -> Result<bool> {
        let (lhs, rhs) = self.class_coefficients(a)?;
        Ok(lhs == rhs)
    }

    fn norm_endo_poly(&self, e: &Nat) -> NormEndoPoly {
        let e_i = Int::from(e.clone());
        NormEndoPoly {
            e: e.clone(),
            coefficients: [Int::one(), &e_i - 2, Int::one() - &e_i],
            roots: [Int::one(), Int::one() - &e_i],
        }
    }

    /// Assembles an [`InvariantSet`] and checks that its fields are mutually
    /// consistent.
    fn full_invariants(&self, a: u64) -> Result<InvariantSet> {
        let params = CurveParams::new(a)?;
        let set = InvariantSet {
            params,
            genus_w: self.genus_w(a)?,
            exponent_e: self.exponent(a),
            deg_gamma: self.deg_gamma_sum(a)?,
            alpha: self.alpha(a)?,
            beta: self.beta(a),
            m: self.total_degree_m(a)?,
            dim_p: Nat::from(params.g),
            dim_z: self.dim_z(a)?,
            rho: rho(params.g, 1, params.deg_l),
        };
        set.check_consistency()?;
        Ok(set)
    }
}

/// The formulas exactly as stated, with no substitutions.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Formulas for Standard {}

impl InvariantSet {
    /// Relations that must hold among the stored fields.
    pub fn check_consistency(&self) -> Result<()> {
        let a = self.params.a;
        let g = int(self.params.g);
        let gw = Int::from(self.genus_w.clone());
        let e = Int::from(self.exponent_e.clone());
        let deg = Int::from(self.deg_gamma.clone());
        let m = Int::from(self.m.clone());
        let dim_z = Int::from(self.dim_z.clone());

        let relations: [(&'static str, Int, Int); 7] = [
            ("g(W) − deg γ = e·g", &gw - &deg, &e * &g),
            ("β = 1 − e", self.beta.clone(), Int::one() - &e),
            ("2α = e(a−1)", &self.alpha * 2, &e * int(a - 1)),
            (
                "α·4a + β·(a+2) = m",
                &self.alpha * int(4 * a) + &self.beta * int(a + 2),
                m.clone(),
            ),
            ("m = (a+2)·deg γ", m, &deg * int(a + 2)),
            ("dim Z = g(W) − g", dim_z, &gw - &g),
            ("ρ(g, 1, a+2) = 1", self.rho.clone(), Int::one()),
        ];
        for (identity, lhs, rhs) in relations {
            if lhs != rhs {
                return Err(Error::InternalInconsistency {
                    a,
                    identity,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        if Int::from(self.dim_p.clone()) != g {
            return Err(Error::InternalInconsistency {
                a,
                identity: "dim P = g",
                lhs: self.dim_p.to_string(),
                rhs: g.to_string(),
            });
        }
        if self.deg_gamma.is_zero() {
            return Err(Error::InternalInconsistency {
                a,
                identity: "deg γ > 0",
                lhs: "0".into(),
                rhs: "> 0".into(),
            });
        }
        Ok(())
    }
}

pub fn exponent(a: u64) -> Nat {
    Standard.exponent(a)
}

pub fn genus_w(a: u64) -> Result<Nat> {
    Standard.genus_w(a)
}

pub fn deg_gamma_sum(a: u64) -> Result<Nat> {
    Standard.deg_gamma_sum(a)
}

pub fn deg_gamma_closed(a: u64) -> Result<Nat> {
    Standard.deg_gamma_closed(a)
}

pub fn alpha(a: u64) -> Result<Int> {
    Standard.alpha(a)
}

pub fn beta(a: u64) -> Int {
    Standard.beta(a)
}

pub fn total_degree_m(a: u64) -> Result<Nat> {
    Standard.total_degree_m(a)
}

pub fn gamma_class(a: u64) -> Result<DivisorClassExpr> {
    Standard.gamma_class(a)
}

pub fn secant_sum_class(a: u64) -> Result<DivisorClassExpr> {
    Standard.secant_sum_class(a)
}

pub fn dim_z(a: u64) -> Result<Nat> {
    Standard.dim_z(a)
}

pub fn contradiction_guard(a: u64) -> Result<bool> {
    Standard.contradiction_guard(a)
}

pub fn class_coefficient_identity(a: u64) -> Result<bool> {
    Standard.class_coefficient_identity(a)
}

pub fn norm_endo_poly(e: &Nat) -> NormEndoPoly {
    Standard.norm_endo_poly(e)
}

pub fn full_invariants(a: u64) -> Result<InvariantSet> {
    Standard.full_invariants(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn brill_noether_number() {
        assert_eq!(rho(5, 1, 4), i(1));
        assert_eq!(rho(4, 1, 3), i(0));
        for a in 2..200 {
            assert_eq!(rho(2 * a + 1, 1, a + 2), i(1));
        }
    }

    #[test]
    fn catalan_exponent() {
        assert_eq!(exponent(2), n(2));
        assert_eq!(exponent(3), n(5));
        assert_eq!(exponent(4), n(14));
        let first: Vec<Nat> = (0..=10).map(exponent).collect();
        let expected: Vec<Nat> = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
            .into_iter()
            .map(n)
            .collect();
        assert_eq!(first, expected);
    }

    #[test]
    fn genus_of_w() {
        assert_eq!(genus_w(2).unwrap(), n(11));
        assert_eq!(genus_w(3).unwrap(), n(43));
        assert_eq!(genus_w(4).unwrap(), n(169));
        assert_eq!(genus_w(1), Err(Error::ParameterOutOfRange { a: 1, min: 2 }));
    }

    /// Brute-force term-by-term evaluation with `i128`, independent of the
    /// big-integer path.
    fn castelnuovo_small(a: i128) -> (i128, i128) {
        fn c(n: i128, k: i128) -> i128 {
            if k < 0 || k > n {
                return 0;
            }
            (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
        }
        let sum: i128 = (0..=a - 2)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * c(a, a - 2 - i) * c(2 * a - i, a - 1 - i)
            })
            .sum();
        (sum, a + 2)
    }

    #[test]
    fn deg_gamma_values() {
        assert_eq!(deg_gamma_sum(2).unwrap(), n(1));
        assert_eq!(deg_gamma_sum(3).unwrap(), n(8));
        assert_eq!(deg_gamma_sum(4).unwrap(), n(43));
        assert_eq!(deg_gamma_sum(5).unwrap(), n(199));
        assert_eq!(
            deg_gamma_terms(5).unwrap(),
            vec![i(2100), i(-840), i(140), i(-7)]
        );
        for a in 2..=30u64 {
            let (num, den) = castelnuovo_small(a as i128);
            assert_eq!(num % den, 0, "a = {a}");
            assert_eq!(deg_gamma_sum(a).unwrap(), n((num / den) as u64), "a = {a}");
        }
    }

    #[test]
    fn deg_gamma_terms_match_direct_binomials() {
        for a in 2..=150u64 {
            let direct: Vec<Int> = (0..=a - 2)
                .map(|k| {
                    let t = Int::from(
                        binomial(a, (a - 2 - k) as i64) * binomial(2 * a - k, (a - 1 - k) as i64),
                    );
                    if k % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .collect();
            assert_eq!(deg_gamma_terms(a).unwrap(), direct, "a = {a}");
        }
    }

    #[test]
    fn deg_gamma_closed_form() {
        assert_eq!(deg_gamma_closed(2).unwrap(), n(1));
        assert_eq!(deg_gamma_closed(3).unwrap(), n(8));
        assert_eq!(deg_gamma_closed(4).unwrap(), n(43));
        for a in 2..=60 {
            assert_eq!(deg_gamma_closed(a).unwrap(), deg_gamma_sum(a).unwrap());
        }
    }

    #[test]
    fn alpha_beta() {
        assert_eq!(alpha(2).unwrap(), i(1));
        assert_eq!(alpha(3).unwrap(), i(5));
        assert_eq!(alpha(4).unwrap(), i(21));
        assert_eq!(beta(2), i(-1));
        assert_eq!(beta(3), i(-4));
        assert_eq!(beta(4), i(-13));
        // α = e(a−1)/2
        for a in 2..=80u64 {
            let e = Int::from(exponent(a));
            assert_eq!(alpha(a).unwrap() * 2, e * (a as i64 - 1), "a = {a}");
        }
    }

    #[test]
    fn total_degree() {
        assert_eq!(total_degree_m(2).unwrap(), n(4));
        assert_eq!(total_degree_m(3).unwrap(), n(40));
        assert_eq!(total_degree_m(4).unwrap(), n(258));
    }

    #[test]
    fn gamma_classes() {
        let c2 = gamma_class(2).unwrap();
        assert_eq!(c2.exponents(), &[i(1), i(-1)]);
        assert_eq!(c2.degree(), i(4));
        assert_eq!(c2.to_tensor_string(), "ω ⊗ L^-1");
        let c3 = gamma_class(3).unwrap();
        assert_eq!(c3.exponents(), &[i(5), i(-4)]);
        assert_eq!(c3.degree(), i(40));
        let c4 = gamma_class(4).unwrap();
        assert_eq!(c4.exponents(), &[i(21), i(-13)]);
        assert_eq!(c4.degree(), i(258));
    }

    #[test]
    fn secant_classes() {
        let s4 = secant_sum_class(4).unwrap();
        assert_eq!(s4.basis(), Basis::MOmega);
        assert_eq!(s4.exponents(), &[i(30), i(-8)]);
        assert_eq!(s4.degree(), i(172));
        let s3 = secant_sum_class(3).unwrap();
        assert_eq!(s3.exponents(), &[i(4), i(-1)]);
        assert_eq!(s3.degree(), i(16));
        let s2 = secant_sum_class(2).unwrap();
        assert_eq!(s2.exponents(), &[i(0), i(0)]);
        assert_eq!(s2.degree(), i(0));
    }

    #[test]
    fn secant_class_general_form() {
        // (deg γ − (e−1), (e−1) − α)
        for a in 2..=40 {
            let e = Int::from(exponent(a));
            let deg = Int::from(deg_gamma_sum(a).unwrap());
            let s = secant_sum_class(a).unwrap();
            assert_eq!(s.exponents()[0], &deg - (&e - 1));
            assert_eq!(s.exponents()[1], (&e - 1) - alpha(a).unwrap());
        }
    }

    #[test]
    fn complementary_dimension() {
        assert_eq!(dim_z(2).unwrap(), n(6));
        assert_eq!(dim_z(3).unwrap(), n(36));
        assert_eq!(dim_z(4).unwrap(), n(160));
    }

    #[test]
    fn guards_and_identities() {
        for a in 2..=40 {
            assert!(contradiction_guard(a).unwrap());
            assert!(class_coefficient_identity(a).unwrap());
        }
        assert_eq!(
            Standard.contradiction_sides(3).unwrap(),
            (i(3 * 43), i(-16))
        );
        let (l, r) = Standard.class_coefficients(3).unwrap();
        assert_eq!(l.to_string(), "1/144");
        assert_eq!(r.to_string(), "1/144");
        assert!(class_coefficient_identity(10).unwrap());
    }

    #[test]
    fn quadratic() {
        let p = norm_endo_poly(&n(2));
        assert_eq!(p.coefficients, [i(1), i(0), i(-1)]);
        assert_eq!(p.roots, [i(1), i(-1)]);
        let p = norm_endo_poly(&n(5));
        assert_eq!(p.coefficients, [i(1), i(3), i(-4)]);
        assert_eq!(p.roots, [i(1), i(-4)]);
        let p = norm_endo_poly(&n(14));
        assert_eq!(p.coefficients, [i(1), i(12), i(-13)]);
        assert_eq!(p.expand_roots(), p.coefficients);
        for r in &p.roots {
            assert_eq!(p.eval(r), i(0));
        }
    }

    #[test]
    fn invariant_sets() {
        let s = full_invariants(4).unwrap();
        assert_eq!(s.params.g, 9);
        assert_eq!(
            (s.genus_w.clone(), s.exponent_e.clone(), s.deg_gamma.clone()),
            (n(169), n(14), n(43))
        );
        assert_eq!((s.alpha.clone(), s.beta.clone()), (i(21), i(-13)));
        assert_eq!(
            (s.m.clone(), s.dim_z.clone(), s.rho.clone()),
            (n(258), n(160), i(1))
        );

        let s = full_invariants(2).unwrap();
        assert_eq!(s.params.g, 5);
        assert_eq!(
            (s.genus_w, s.exponent_e, s.deg_gamma, s.m, s.dim_z),
            (n(11), n(2), n(1), n(4), n(6))
        );
        assert_eq!((s.alpha, s.beta), (i(1), i(-1)));

        let s = full_invariants(3).unwrap();
        assert_eq!(
            (s.genus_w, s.exponent_e, s.deg_gamma, s.m, s.dim_z),
            (n(43), n(5), n(8), n(40), n(36))
        );
        assert_eq!((s.alpha, s.beta), (i(5), i(-4)));
    }

    #[test]
    fn inconsistent_set_is_rejected() {
        let mut s = full_invariants(3).unwrap();
        s.deg_gamma = n(9);
        assert!(matches!(
            s.check_consistency(),
            Err(Error::InternalInconsistency { a: 3, .. })
        ));
    }

    #[test]
    fn small_a_rejected() {
        for a in [0, 1] {
            assert!(full_invariants(a).is_err());
            assert!(deg_gamma_sum(a).is_err());
            assert!(CurveParams::new(a).is_err());
        }
    }
}
