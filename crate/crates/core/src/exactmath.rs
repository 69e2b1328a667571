//! Exact integer and rational arithmetic.
//!
//! Every quantity in this crate is computed without floating point. The
//! alternating Castelnuovo sum cancels heavily, and the reproduced values must
//! be digit-exact, so integers are arbitrary precision and rationals are kept
//! in lowest terms with a positive denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Non-negative arbitrary-precision integer.
pub type Nat = BigUint;
/// Signed arbitrary-precision integer.
pub type Int = BigInt;

static FACTORIALS: RwLock<Vec<Nat>> = RwLock::new(Vec::new());

/// `n!`, memoized in a process-wide table that only ever grows.
pub fn factorial(n: u64) -> Nat {
    let idx = usize::try_from(n).expect("factorial argument exceeds address space");
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(idx) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(Nat::one());
    }
    // another writer may have extended the table while we waited
    while table.len() <= idx {
        let k = table.len() as u64;
        let next = &table[table.len() - 1] * k;
        table.push(next);
    }
    table[idx].clone()
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Nat {
    if k < 0 || k as u64 > n {
        return Nat::zero();
    }
    let k = k as u64;
    let k = k.min(n - k);
    if k == 0 {
        return Nat::one();
    }
    // C(n, j) = C(n, j-1) * (n-j+1) / j; every intermediate is itself a binomial
    let mut acc = Nat::one();
    for j in 1..=k {
        acc *= n - j + 1;
        acc /= j;
    }
    acc
}

/// `p / q` when `q` divides `p`; otherwise [`Error::NonIntegralResult`].
pub fn exact_div(p: &Int, q: &Int) -> Result<Int> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (quot, rem) = p.div_rem(q);
    if !rem.is_zero() {
        return Err(Error::NonIntegralResult {
            numerator: p.clone(),
            denominator: q.clone(),
        });
    }
    Ok(quot)
}

/// Exact division on naturals, see [`exact_div`].
pub fn exact_div_nat(p: &Nat, q: &Nat) -> Result<Nat> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (quot, rem) = p.div_rem(q);
    if !rem.is_zero() {
        return Err(Error::NonIntegralResult {
            numerator: Int::from(p.clone()),
            denominator: Int::from(q.clone()),
        });
    }
    Ok(quot)
}

/// Converts a value known to be non-negative.
///
/// Panics on negative input; callers only use it after a sign is certain.
pub(crate) fn to_nat(v: &Int) -> Nat {
    v.to_biguint()
        .expect("negative value where a natural number was required")
}

/// A rational number in canonical form: `gcd(|num|, den) = 1` and `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<Int>, denominator: impl Into<Int>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Ratio::new reduces and moves the sign to the numerator
        Ok(Self(BigRational::new(numerator.into(), denominator)))
    }

    pub fn from_integer(v: impl Into<Int>) -> Self {
        Self(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &Int {
        self.0.numer()
    }

    pub fn denominator(&self) -> Nat {
        to_nat(self.0.denom())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The integer value, or [`Error::NonIntegralResult`] if the denominator is not 1.
    pub fn to_integer(&self) -> Result<Int> {
        exact_div(self.0.numer(), self.0.denom())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }
}

impl From<Int> for ExactRational {
    fn from(v: Int) -> Self {
        Self::from_integer(v)
    }
}

impl From<Nat> for ExactRational {
    fn from(v: Nat) -> Self {
        Self::from_integer(Int::from(v))
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor, like integer division. Use
/// [`ExactRational::checked_div`] when the divisor is not known to be non-zero.
impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        self.checked_div(&rhs).expect("division by zero rational")
    }
}

impl<'a> Div<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &'a ExactRational) -> ExactRational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
