//! Two applications of the S-tree.
//!
//! Its rightmost branch `1/1, 1/2, 2/3, 3/5, ...` runs through consecutive
//! Fibonacci numbers. And since `sin(arctan √r) = √(r/(1+r))` and
//! `cos(arctan √r) = √(1/(1+r))`, pressing `arctan` then `sin` or `cos` on a
//! calculator showing `√(m/n)` moves the display to `√` of the left or right
//! S-tree child of `m/n`. Walking to `q²` therefore produces `q` using only
//! trigonometric keys.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::contfrac::cf_eval;
use crate::error::{Error, Result};
use crate::locate::s_locate;
use crate::rational::Rational;

/// The `n`-th Fibonacci number (`F(1) = F(2) = 1`), read as the numerator
/// of `[0, 1, ..., 1]` with `n` ones.
pub fn fibonacci(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::FibonacciIndex);
    }
    let mut terms = vec![BigUint::one(); n as usize + 1];
    terms[0] = BigUint::zero();
    Ok(cf_eval(&terms)?.numer().clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Button {
    Sin,
    Cos,
    Tan,
    Arcsin,
    Arccos,
    Arctan,
}

impl Button {
    pub const ALL: [Button; 6] = [
        Button::Sin,
        Button::Cos,
        Button::Tan,
        Button::Arcsin,
        Button::Arccos,
        Button::Arctan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Button::Sin => "sin",
            Button::Cos => "cos",
            Button::Tan => "tan",
            Button::Arcsin => "arcsin",
            Button::Arccos => "arccos",
            Button::Arctan => "arctan",
        }
    }

    fn inverse_kind(self) -> Option<InverseKind> {
        match self {
            Button::Arcsin => Some(InverseKind::Arcsin),
            Button::Arccos => Some(InverseKind::Arccos),
            Button::Arctan => Some(InverseKind::Arctan),
            _ => None,
        }
    }

    /// Double-precision replay of one key. Display only.
    pub fn apply_f64(self, x: f64) -> f64 {
        match self {
            Button::Sin => x.sin(),
            Button::Cos => x.cos(),
            Button::Tan => x.tan(),
            Button::Arcsin => x.asin(),
            Button::Arccos => x.acos(),
            Button::Arctan => x.atan(),
        }
    }
}

impl fmt::Display for Button {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Button {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Button::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or(Error::Parse {
                what: "calculator key",
                input: s,
            })
    }
}

pub type ButtonSequence = Vec<Button>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    Arcsin,
    Arccos,
    Arctan,
}

/// What the calculator holds, tracked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqrtState {
    /// The display shows `√radicand`.
    Root(Rational),
    /// The display shows an angle: the given inverse function of
    /// `√radicand`. Only a direct trigonometric key can follow exactly.
    Angle(InverseKind, Rational),
}

impl SqrtState {
    pub fn start() -> Self {
        SqrtState::Root(Rational::zero())
    }

    /// The displayed value when it is rational, i.e. when the radicand is a
    /// square of a rational.
    pub fn exact_value(&self) -> Option<Rational> {
        match self {
            SqrtState::Root(r) => {
                let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
                (&n * &n == *r.numer() && &d * &d == *r.denom())
                    .then(|| Rational::from_biguints(n, d).expect("square roots of a fraction"))
            }
            SqrtState::Angle(..) => None,
        }
    }

    /// Applies one key using only exact identities.
    pub fn press(&self, key: Button) -> Result<SqrtState> {
        match (self, key.inverse_kind()) {
            (SqrtState::Root(r), Some(kind)) => {
                if kind != InverseKind::Arctan && r.numer() > r.denom() {
                    return Err(domain(format!(
                        "{key} needs an argument at most 1, got √{r}"
                    )));
                }
                Ok(SqrtState::Angle(kind, r.clone()))
            }
            (SqrtState::Root(r), None) => {
                // A trigonometric key on a number only stays exact at 0.
                if !r.numer().is_zero() {
                    return Err(domain(format!("{key}(√{r}) is not tracked exactly")));
                }
                Ok(SqrtState::Root(if key == Button::Cos {
                    Rational::one()
                } else {
                    Rational::zero()
                }))
            }
            (SqrtState::Angle(kind, r), None) => rewrite(*kind, r, key).map(SqrtState::Root),
            (SqrtState::Angle(kind, _), Some(_)) => Err(domain(format!(
                "{key} of a {} angle is not tracked exactly",
                kind_name(*kind)
            ))),
        }
    }
}

fn kind_name(kind: InverseKind) -> &'static str {
    match kind {
        InverseKind::Arcsin => "arcsin",
        InverseKind::Arccos => "arccos",
        InverseKind::Arctan => "arctan",
    }
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

fn frac(n: BigUint, d: BigUint) -> Rational {
    Rational::from_biguints(n, d).expect("denominators here are positive")
}

/// `f(g(√r))` for a direct key `f` and inverse key `g`, as a new radicand.
/// With `r = m/n`:
///
/// | `g`    | sin        | cos        | tan          |
/// |--------|------------|------------|--------------|
/// | arctan | m/(m+n)    | n/(m+n)    | m/n          |
/// | arccos | (n-m)/n    | m/n        | (n-m)/m      |
/// | arcsin | m/n        | (n-m)/n    | m/(n-m)      |
fn rewrite(kind: InverseKind, r: &Rational, key: Button) -> Result<Rational> {
    let (m, n) = (r.numer().clone(), r.denom().clone());
    Ok(match (kind, key) {
        (InverseKind::Arctan, Button::Sin) => frac(m.clone(), m + n),
        (InverseKind::Arctan, Button::Cos) => frac(n.clone(), m + n),
        (InverseKind::Arctan, Button::Tan) => r.clone(),
        (InverseKind::Arccos, Button::Cos) | (InverseKind::Arcsin, Button::Sin) => r.clone(),
        (InverseKind::Arccos, Button::Sin) | (InverseKind::Arcsin, Button::Cos) => frac(&n - &m, n),
        (InverseKind::Arccos, Button::Tan) => {
            if m.is_zero() {
                return Err(domain("tan(arccos 0) is undefined".into()));
            }
            frac(&n - &m, m)
        }
        (InverseKind::Arcsin, Button::Tan) => {
            if m == n {
                return Err(domain("tan(arcsin 1) is undefined".into()));
            }
            frac(m.clone(), n - m)
        }
        _ => unreachable!("inverse keys are handled by the caller"),
    })
}

/// Runs a key sequence from the initial display `0`.
pub fn simulate_buttons(seq: &[Button]) -> Result<SqrtState> {
    seq.iter()
        .try_fold(SqrtState::start(), |state, &key| state.press(key))
}

/// Double-precision replay from `0`, for display.
pub fn replay_f64(seq: &[Button]) -> f64 {
    seq.iter().fold(0.0, |x, key| key.apply_f64(x))
}

/// Keys that turn the initial `0` into `q`.
///
/// `cos` gives `1 = √(1/1)`; `arctan, sin` steps to `√(1/2)`; after that each
/// digit of the S-tree path of `q²` becomes `arctan, sin` (`0`) or
/// `arctan, cos` (`1`). A fraction above 1 is built as its reciprocal `a/b`
/// followed by `arctan, sin, arccos, tan`, since
/// `tan(arccos(sin(arctan(a/b)))) = b/a`.
pub fn buttons_for(q: &Rational) -> Result<ButtonSequence> {
    q.ensure_finite_positive()?;
    if q.numer() > q.denom() {
        let mut keys = buttons_for(&q.recip())?;
        keys.extend([Button::Arctan, Button::Sin, Button::Arccos, Button::Tan]);
        return Ok(keys);
    }
    let mut keys = vec![Button::Cos];
    if q.is_one() {
        return Ok(keys);
    }
    let square = Rational::from_biguints(q.numer() * q.numer(), q.denom() * q.denom())?;
    let located = s_locate(&square)?;
    keys.extend([Button::Arctan, Button::Sin]);
    for &bit in located.path.bits() {
        keys.push(Button::Arctan);
        keys.push(if bit { Button::Cos } else { Button::Sin });
    }
    Ok(keys)
}
