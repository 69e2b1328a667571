//! Formal Z-linear combinations of two line bundles on the curve.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::exactmath::Int;
use crate::invariants::CurveParams;

/// The line bundles the class computations are written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// The canonical bundle ω_C, degree 4a.
    Omega,
    /// A pencil L in W¹ₐ₊₂(C), degree a+2.
    L,
    /// The residual series M = ω_C ⊗ L⁻¹, degree 3a−2.
    M,
}

impl Generator {
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Omega => "ω",
            Generator::L => "L",
            Generator::M => "M",
        }
    }

    pub fn degree(self, params: &CurveParams) -> u64 {
        match self {
            Generator::Omega => params.deg_omega,
            Generator::L => params.deg_l,
            Generator::M => params.deg_m,
        }
    }
}

/// An ordered pair of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// (ω, L), the basis of `γ(L) = ω^α ⊗ L^β`.
    OmegaL,
    /// (M, ω), the basis of the secant-divisor sum.
    MOmega,
}

impl Basis {
    pub fn generators(self) -> [Generator; 2] {
        match self {
            Basis::OmegaL => [Generator::Omega, Generator::L],
            Basis::MOmega => [Generator::M, Generator::Omega],
        }
    }
}

/// `gen₁^{e₁} ⊗ gen₂^{e₂}` for a fixed curve. The degree is always derived
/// from the exponents, never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClassExpr {
    params: CurveParams,
    basis: Basis,
    exponents: [Int; 2],
}

impl DivisorClassExpr {
    pub fn new(params: CurveParams, basis: Basis, first: Int, second: Int) -> Self {
        Self {
            params,
            basis,
            exponents: [first, second],
        }
    }

    pub fn zero(params: CurveParams, basis: Basis) -> Self {
        Self::new(params, basis, Int::zero(), Int::zero())
    }

    /// A single generator to the given power, written in `basis`.
    pub fn power(params: CurveParams, basis: Basis, gen: Generator, exp: Int) -> Self {
        let [g1, g2] = basis.generators();
        if gen == g1 {
            Self::new(params, basis, exp, Int::zero())
        } else if gen == g2 {
            Self::new(params, basis, Int::zero(), exp)
        } else {
            // the third generator is a combination of the other two
            let other = match basis {
                Basis::OmegaL => Basis::MOmega,
                Basis::MOmega => Basis::OmegaL,
            };
            Self::power(params, other, gen, exp).to_basis(basis)
        }
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn exponents(&self) -> &[Int; 2] {
        &self.exponents
    }

    /// Exponent of `gen` in the current basis, if it is a basis element.
    pub fn exponent_of(&self, gen: Generator) -> Option<&Int> {
        let [g1, g2] = self.basis.generators();
        if gen == g1 {
            Some(&self.exponents[0])
        } else if gen == g2 {
            Some(&self.exponents[1])
        } else {
            None
        }
    }

    pub fn degree(&self) -> Int {
        let [g1, g2] = self.basis.generators();
        &self.exponents[0] * g1.degree(&self.params) + &self.exponents[1] * g2.degree(&self.params)
    }

    /// Rewrites the class using `L = ω ⊗ M⁻¹` (equivalently `M = ω ⊗ L⁻¹`).
    pub fn to_basis(&self, target: Basis) -> Self {
        let [x, y] = &self.exponents;
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            // x·ω + y·L = x·ω + y·(ω − M) = −y·M + (x+y)·ω
            (Basis::OmegaL, Basis::MOmega) => Self::new(self.params, target, -y, x + y),
            // x·M + y·ω = x·(ω − L) + y·ω = (x+y)·ω − x·L
            (Basis::MOmega, Basis::OmegaL) => Self::new(self.params, target, x + y, -x),
            _ => unreachable!(),
        }
    }

    fn align(&self, other: &Self) -> Self {
        assert_eq!(
            self.params, other.params,
            "classes live on different curves"
        );
        other.to_basis(self.basis)
    }
}

impl Add for &DivisorClassExpr {
    type Output = DivisorClassExpr;
    fn add(self, rhs: &DivisorClassExpr) -> DivisorClassExpr {
        let rhs = self.align(rhs);
        DivisorClassExpr::new(
            self.params,
            self.basis,
            &self.exponents[0] + &rhs.exponents[0],
            &self.exponents[1] + &rhs.exponents[1],
        )
    }
}

impl Sub for &DivisorClassExpr {
    type Output = DivisorClassExpr;
    fn sub(self, rhs: &DivisorClassExpr) -> DivisorClassExpr {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClassExpr {
    type Output = DivisorClassExpr;
    fn neg(self) -> DivisorClassExpr {
        DivisorClassExpr::new(
            self.params,
            self.basis,
            -&self.exponents[0],
            -&self.exponents[1],
        )
    }
}

/// Compact form such as `M^30 ω^-8`; a zero class prints as `M^0 ω^0`.
impl fmt::Display for DivisorClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g1, g2] = self.basis.generators();
        write!(
            f,
            "{}^{} {}^{}",
            g1.symbol(),
            self.exponents[0],
            g2.symbol(),
            self.exponents[1]
        )
    }
}

impl DivisorClassExpr {
    /// Tensor notation, e.g. `ω^21 ⊗ L^-13`, dropping zero powers.
    pub fn to_tensor_string(&self) -> String {
        let parts: Vec<String> = self
            .basis
            .generators()
            .iter()
            .zip(&self.exponents)
            .filter(|(_, e)| !e.is_zero())
            .map(|(g, e)| {
                if e.abs() == Int::from(1) && e.is_positive() {
                    g.symbol().to_string()
                } else {
                    format!("{}^{}", g.symbol(), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "O_C".to_string()
        } else {
            parts.join(" ⊗ ")
        }
    }
}
