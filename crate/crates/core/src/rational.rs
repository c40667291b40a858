//! Reduced non-negative fractions, the mediant and the unimodularity test.
//!
//! Alongside ordinary positive fractions the type admits exactly two values
//! with a zero component, `1/0` and `0/1`. They anchor level 0 of the SC-tree
//! and the Stern-Brocot tree and take part in mediants like any other pair.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigUint,
    denom: BigUint,
}

impl Rational {
    /// Builds the reduced form of `n/d`. Negative components and `0/0` are
    /// rejected.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (n.into(), d.into());
        if n.is_negative() || d.is_negative() {
            return Err(Error::Negative);
        }
        Self::from_biguints(n.magnitude().clone(), d.magnitude().clone())
    }

    pub fn from_biguints(n: BigUint, d: BigUint) -> Result<Self> {
        if n.is_zero() && d.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        let g = n.gcd(&d);
        if g.is_one() {
            Ok(Self { numer: n, denom: d })
        } else {
            Ok(Self {
                numer: n / &g,
                denom: d / &g,
            })
        }
    }

    /// Caller guarantees the pair is coprime and not `0/0`.
    pub(crate) fn from_coprime(numer: BigUint, denom: BigUint) -> Self {
        debug_assert!(numer.gcd(&denom).is_one());
        Self { numer, denom }
    }

    pub fn integer(n: u64) -> Self {
        Self::from_coprime(n.into(), BigUint::one())
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// The pseudo-fraction `1/0`.
    pub fn infinity() -> Self {
        Self::from_coprime(BigUint::one(), BigUint::zero())
    }

    /// The pseudo-fraction `0/1`.
    pub fn zero() -> Self {
        Self::from_coprime(BigUint::zero(), BigUint::one())
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_pseudo(&self) -> bool {
        self.numer.is_zero() || self.denom.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// `1/x`; swaps the two pseudo-fractions.
    pub fn recip(&self) -> Self {
        Self {
            numer: self.denom.clone(),
            denom: self.numer.clone(),
        }
    }

    /// `numerator + denominator`, which strictly decreases on every parent
    /// step in all four trees.
    pub fn weight(&self) -> BigUint {
        &self.numer + &self.denom
    }

    pub fn mediant(&self, other: &Self) -> Self {
        mediant(self, other)
    }

    /// Numeric comparison by cross-multiplication; `1/0` behaves as +inf.
    pub(crate) fn cmp_value(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }

    pub(crate) fn ensure_finite_positive(&self) -> Result<()> {
        if self.is_pseudo() {
            Err(Error::PseudoFraction(self.to_string()))
        } else {
            Ok(())
        }
    }
}

/// `(m1 + m2) / (n1 + n2)`, reduced.
pub fn mediant(a: &Rational, b: &Rational) -> Rational {
    Rational::from_biguints(&a.numer + &b.numer, &a.denom + &b.denom)
        .expect("two valid fractions never sum to 0/0")
}

/// Mediant of a pair already known to be addable; the sum is coprime, so the
/// gcd is skipped.
pub(crate) fn unimodular_mediant(a: &Rational, b: &Rational) -> Rational {
    Rational::from_coprime(&a.numer + &b.numer, &a.denom + &b.denom)
}

/// For `a/b` and `c/d` returns `bc - ad`.
pub fn determinant(x: &Rational, y: &Rational) -> BigInt {
    let bc = BigInt::from_biguint(Sign::Plus, &x.denom * &y.numer);
    let ad = BigInt::from_biguint(Sign::Plus, &x.numer * &y.denom);
    bc - ad
}

/// Two vertices are addable exactly when their determinant is ±1.
pub fn addable(x: &Rational, y: &Rational) -> bool {
    determinant(x, y).magnitude().is_one()
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n/d` with ASCII digits, or a bare integer `n`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "fraction",
            input: s.to_owned(),
        };
        let trimmed = s.trim();
        if trimmed.starts_with('-') {
            return Err(Error::Negative);
        }
        let digits = |t: &str| -> Result<BigUint> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigUint>().map_err(|_| err())
        };
        match trimmed.split_once('/') {
            Some((n, d)) => Self::from_biguints(digits(n)?, digits(d)?),
            None => Self::from_biguints(digits(trimmed)?, BigUint::one()),
        }
    }
}
