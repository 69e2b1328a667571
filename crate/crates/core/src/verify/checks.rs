//! The check registry. One entry per identity among the invariants.

use std::fmt::Display;

use num_traits::One;

use crate::error::Result;
use crate::exactmath::{exact_div, Int};
use crate::invariants::{rho, Formulas};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    NotEqual,
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::NotEqual => "≠",
            Relation::Greater => ">",
        }
    }
}

/// Both sides of an identity rendered as exact decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
    passed: bool,
}

impl Comparison {
    /// Values are compared through their canonical decimal rendering, which
    /// is injective for integers and reduced rationals.
    pub fn equal(lhs: impl Display, rhs: impl Display) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let passed = lhs == rhs;
        Self {
            lhs,
            rhs,
            relation: Relation::Equal,
            passed,
        }
    }

    pub fn not_equal(lhs: &Int, rhs: &Int) -> Self {
        Self {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: Relation::NotEqual,
            passed: lhs != rhs,
        }
    }

    pub fn greater(lhs: &Int, rhs: &Int) -> Self {
        Self {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: Relation::Greater,
            passed: lhs > rhs,
        }
    }

    /// Element-wise equality of two lists, rendered `x;y;z`.
    pub fn equal_lists(lhs: &[Int], rhs: &[Int]) -> Self {
        Self::equal(join(lhs), join(rhs))
    }

    pub fn passed(&self) -> bool {
        self.passed
    }
}

fn join(values: &[Int]) -> String {
    values
        .iter()
        .map(Int::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub type CheckFn = fn(&dyn Formulas, u64) -> Result<Comparison>;

pub struct CheckSpec {
    pub name: &'static str,
    pub description: &'static str,
    /// Where the identity comes from, in a few words.
    pub context: &'static str,
    pub eval: CheckFn,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .finish()
    }
}

impl PartialEq for CheckSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for CheckSpec {}

fn int(v: u64) -> Int {
    Int::from(v)
}

fn lemma_rel(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let gw = Int::from(f.genus_w(a)?);
    let deg = Int::from(f.deg_gamma_sum(a)?);
    let e = Int::from(f.exponent(a));
    Ok(Comparison::equal(gw - deg, e * int(2 * a + 1)))
}

fn deg_gamma_oracle(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    Ok(Comparison::equal(
        f.deg_gamma_sum(a)?,
        f.deg_gamma_closed(a)?,
    ))
}

fn alpha_closed_form(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let e = Int::from(f.exponent(a));
    let closed = exact_div(&(e * int(a - 1)), &int(2))?;
    Ok(Comparison::equal(f.alpha(a)?, closed))
}

fn degree_bookkeeping(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let lhs = f.alpha(a)? * int(4 * a) + f.beta(a) * int(a + 2);
    Ok(Comparison::equal(lhs, f.total_degree_m(a)?))
}

fn secant_degree(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let cls = f.secant_sum_class(a)?;
    let rhs = Int::from(f.deg_gamma_sum(a)?) * (int(2 * a) - 4);
    Ok(Comparison::equal(cls.degree(), rhs))
}

fn dim_z(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let gw = Int::from(f.genus_w(a)?);
    Ok(Comparison::equal(f.dim_z(a)?, gw - int(2 * a + 1)))
}

fn contradiction_guard(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let (lhs, rhs) = f.contradiction_sides(a)?;
    Ok(Comparison::not_equal(&lhs, &rhs))
}

fn class_coefficient(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let (lhs, rhs) = f.class_coefficients(a)?;
    Ok(Comparison::equal(lhs, rhs))
}

fn catalan_recurrence(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let lhs = Int::from(f.exponent(a + 1)) * int(a + 2);
    let rhs = Int::from(f.exponent(a)) * int(2 * (2 * a + 1));
    Ok(Comparison::equal(lhs, rhs))
}

fn rho_is_one(_: &dyn Formulas, a: u64) -> Result<Comparison> {
    Ok(Comparison::equal(rho(2 * a + 1, 1, a + 2), 1))
}

/// `p(r₁); p(r₂); r₁; r₂; expanded coefficients` against
/// `0; 0; 1; 1−e; stored coefficients`.
fn quadratic_roots(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let e = f.exponent(a);
    let p = f.norm_endo_poly(&e);
    let e = Int::from(e);
    let [r1, r2] = &p.roots;
    let mut lhs = vec![p.eval(r1), p.eval(r2), r1.clone(), r2.clone()];
    lhs.extend(p.expand_roots());
    let mut rhs = vec![Int::from(0), Int::from(0), Int::one(), Int::one() - &e];
    rhs.extend([Int::one(), &e - 2, Int::one() - &e]);
    Ok(Comparison::equal_lists(&lhs, &rhs))
}

/// At `a = 2`, γ is the involution `L ↦ ω ⊗ L⁻¹`:
/// `(deg γ, e, α, β, g(W), dim Z) = (1, 2, 1, −1, 11, 6)`.
/// For `a > 2` the correspondence is no longer an involution, `deg γ > 1`.
fn involution_specialization(f: &dyn Formulas, a: u64) -> Result<Comparison> {
    let deg = Int::from(f.deg_gamma_sum(a)?);
    if a != 2 {
        return Ok(Comparison::greater(&deg, &Int::one()));
    }
    let class = f.gamma_class(a)?;
    let [alpha, beta] = class.exponents().clone();
    let lhs = [
        deg,
        Int::from(f.exponent(a)),
        alpha,
        beta,
        Int::from(f.genus_w(a)?),
        Int::from(f.dim_z(a)?),
    ];
    let rhs = [1i64, 2, 1, -1, 11, 6].map(Int::from);
    Ok(Comparison::equal_lists(&lhs, &rhs))
}

static REGISTRY: [CheckSpec; 12] = [
    CheckSpec {
        name: "lemma-rel",
        description: "g(W) − deg γ = e·g",
        context: "genus of W vs correspondence degree",
        eval: lemma_rel,
    },
    CheckSpec {
        name: "deg-gamma-oracle",
        description: "alternating Castelnuovo sum equals 1 + e(2a+1)(a−2)/(a+2)",
        context: "secant-plane count",
        eval: deg_gamma_oracle,
    },
    CheckSpec {
        name: "alpha-closed-form",
        description: "α = e(a−1)/2, an integer",
        context: "class of γ(L)",
        eval: alpha_closed_form,
    },
    CheckSpec {
        name: "degree-bookkeeping",
        description: "α·4a + β·(a+2) = m",
        context: "degrees in Pic(C)",
        eval: degree_bookkeeping,
    },
    CheckSpec {
        name: "secant-degree",
        description: "deg Σ D_i = (2a−4)·deg γ",
        context: "sum of secant divisors",
        eval: secant_degree,
    },
    CheckSpec {
        name: "dim-z",
        description: "((e−1)g(W) + deg γ)/e = g(W) − g",
        context: "complementary subvariety Z",
        eval: dim_z,
    },
    CheckSpec {
        name: "contradiction-guard",
        description: "(e−2)·g(W) ≠ −2·deg γ",
        context: "complementary subvariety Z",
        eval: contradiction_guard,
    },
    CheckSpec {
        name: "class-coefficient",
        description: "1/(a!(a+1)!) = e/(2a)!",
        context: "class of W in Pic(C)",
        eval: class_coefficient,
    },
    CheckSpec {
        name: "catalan-recurrence",
        description: "(a+2)·e(a+1) = 2(2a+1)·e(a)",
        context: "Catalan exponent",
        eval: catalan_recurrence,
    },
    CheckSpec {
        name: "rho-is-one",
        description: "ρ(2a+1, 1, a+2) = 1",
        context: "W is a curve",
        eval: rho_is_one,
    },
    CheckSpec {
        name: "quadratic-roots",
        description: "x² + (e−2)x − (e−1) vanishes exactly at 1 and 1−e",
        context: "norm endomorphism",
        eval: quadratic_roots,
    },
    CheckSpec {
        name: "involution-specialization",
        description: "a = 2 gives the involution ω ⊗ L⁻¹ (deg γ = 1); deg γ > 1 otherwise",
        context: "genus-5 involution",
        eval: involution_specialization,
    },
];

/// All registered checks, in declaration order.
pub fn registry() -> &'static [CheckSpec] {
    &REGISTRY
}

pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}
