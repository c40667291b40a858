//! Finite simple continued fractions `[a0, a1, ..., ak]`.
//!
//! The canonical form has `a0 >= 0`, every later term `>= 1`, and a last term
//! `>= 2` whenever there is more than one term. Every positive rational has
//! exactly one canonical expansion. [`cf_eval`] also accepts the alternate
//! `[..., a, 1]` spelling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<BigUint>,
}

impl ContinuedFraction {
    /// Wraps a term list, rejecting anything not in canonical form.
    pub fn new(terms: Vec<BigUint>) -> Result<Self> {
        check_terms(&terms)?;
        if terms.len() == 1 && terms[0].is_zero() {
            return Err(Error::Domain("[0] evaluates to zero".into()));
        }
        if terms.len() > 1 && terms.last().is_some_and(|t| t.is_one()) {
            return Err(Error::NonCanonical("last term is 1".into()));
        }
        Ok(Self { terms })
    }

    pub fn from_u64s(terms: &[u64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigUint::from(t)).collect())
    }

    /// Euclidean expansion of a finite positive fraction, normalised so a
    /// trailing 1 is folded into the previous term.
    pub fn expand(q: &Rational) -> Result<Self> {
        q.ensure_finite_positive()?;
        let mut terms = Vec::new();
        let (mut n, mut d) = (q.numer().clone(), q.denom().clone());
        while !d.is_zero() {
            let (a, r) = n.div_rem(&d);
            terms.push(a);
            n = d;
            d = r;
        }
        if terms.len() > 1 && terms.last().is_some_and(|t| t.is_one()) {
            terms.pop();
            if let Some(t) = terms.last_mut() {
                *t += 1u32;
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.terms
    }

    pub fn value(&self) -> Rational {
        cf_eval(&self.terms).expect("canonical continued fractions always evaluate")
    }

    /// Sum of all terms. For `[0, a1, ..., ak]` this is one more than the
    /// S-tree level of the fraction.
    pub fn term_sum(&self) -> BigUint {
        self.terms.iter().sum()
    }

    fn proper_tail(&self) -> Result<&[BigUint]> {
        match self.terms.split_first() {
            Some((a0, tail)) if a0.is_zero() && !tail.is_empty() => Ok(tail),
            _ => Err(Error::NotProperFraction),
        }
    }

    /// Children of `[0, a1, ..., ak]` in the S-tree:
    /// `m/(m+n) = [0, a1+1, a2, ..., ak]` and `n/(m+n) = [0, 1, a1, ..., ak]`.
    pub fn s_children(&self) -> Result<(Self, Self)> {
        let tail = self.proper_tail()?;
        let mut left = self.terms.clone();
        left[1] += 1u32;
        let mut right = Vec::with_capacity(self.terms.len() + 1);
        right.push(BigUint::zero());
        right.push(BigUint::one());
        right.extend_from_slice(tail);
        Ok((Self { terms: left }, Self { terms: right }))
    }

    /// Children of `[0, a1, ..., am]` in the SC-tree. The left child bumps
    /// the last term; the right child is `[0, a1, ..., am - 1, 2]`.
    pub fn sc_children(&self) -> Result<(Self, Self)> {
        self.proper_tail()?;
        let mut left = self.terms.clone();
        *left.last_mut().unwrap() += 1u32;
        let mut right = self.terms.clone();
        *right.last_mut().unwrap() -= 1u32;
        right.push(BigUint::from(2u32));
        Ok((Self { terms: left }, Self { terms: right }))
    }
}

fn check_terms(terms: &[BigUint]) -> Result<()> {
    if terms.is_empty() {
        return Err(Error::EmptyContinuedFraction);
    }
    if let Some(index) = terms.iter().skip(1).position(Zero::is_zero) {
        return Err(Error::NonPositiveTerm { index: index + 1 });
    }
    Ok(())
}

/// Evaluates `a0 + 1/(a1 + 1/(... + 1/ak))` exactly. Canonical form is not
/// required.
pub fn cf_eval(terms: &[BigUint]) -> Result<Rational> {
    check_terms(terms)?;
    let mut rev = terms.iter().rev();
    let mut p = rev.next().unwrap().clone();
    let mut q = BigUint::one();
    for a in rev {
        let next = a * &p + &q;
        q = p;
        p = next;
    }
    if p.is_zero() {
        return Err(Error::Domain("[0] evaluates to zero".into()));
    }
    // Convergent numerators and denominators are always coprime.
    Ok(Rational::from_coprime(p, q))
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[a0,a1,...,ak]`; whitespace around terms is ignored. The result is
/// not required to be canonical, use [`ContinuedFraction::new`] for that.
pub fn parse_terms(s: &str) -> Result<Vec<BigUint>> {
    let err = || Error::Parse {
        what: "continued fraction",
        input: s.to_owned(),
    };
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(err)?;
    inner
        .split(',')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigUint>().map_err(|_| err())
        })
        .collect()
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_terms(s)?)
    }
}
