//! Deliberately wrong formula sets. The check suite must reject each of them
//! at small `a`, which shows it can tell a correct implementation from a
//! plausible-looking incorrect one.

use crate::error::Result;
use crate::exactmath::{factorial, to_nat, ExactRational, Int, Nat};
use crate::invariants::{deg_gamma_terms, Formulas, MIN_A};
use crate::Error;

/// `β = 2 − e` instead of `1 − e`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BetaOffByOne;

impl Formulas for BetaOffByOne {
    fn beta(&self, a: u64) -> Int {
        Int::from(2) - Int::from(self.exponent(a))
    }
}

/// The Castelnuovo sum without its `1/(a+2)` factor.
#[derive(Clone, Copy, Debug, Default)]
pub struct CastelnuovoWithoutPrefactor;

impl Formulas for CastelnuovoWithoutPrefactor {
    fn deg_gamma_sum(&self, a: u64) -> Result<Nat> {
        let sum: Int = deg_gamma_terms(a)?.iter().sum();
        Ok(to_nat(&sum))
    }
}

/// The genus formula with `(2g)!` in place of `2·(g!)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GenusDoubleFactorial;

impl Formulas for GenusDoubleFactorial {
    fn genus_w(&self, a: u64) -> Result<Nat> {
        if a < MIN_A {
            return Err(Error::ParameterOutOfRange { a, min: MIN_A });
        }
        let g = 2 * a + 1;
        let value = &(&ExactRational::new(Int::from(a), Int::from(a + 2))?
            * &ExactRational::new(
                Int::from(factorial(2 * g)),
                Int::from(factorial(a) * factorial(a + 1)),
            )?)
            + &ExactRational::one();
        Ok(to_nat(&value.to_integer()?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    BetaOffByOne,
    CastelnuovoWithoutPrefactor,
    GenusDoubleFactorial,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::BetaOffByOne,
        Mutation::CastelnuovoWithoutPrefactor,
        Mutation::GenusDoubleFactorial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::BetaOffByOne => "beta := 2 - e",
            Mutation::CastelnuovoWithoutPrefactor => "deg gamma without 1/(a+2)",
            Mutation::GenusDoubleFactorial => "g(W) with (2g)! for 2*g!",
        }
    }

    pub fn formulas(self) -> &'static dyn Formulas {
        match self {
            Mutation::BetaOffByOne => &BetaOffByOne,
            Mutation::CastelnuovoWithoutPrefactor => &CastelnuovoWithoutPrefactor,
            Mutation::GenusDoubleFactorial => &GenusDoubleFactorial,
        }
    }
}
