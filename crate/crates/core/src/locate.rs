//! Closed-form vertex location and the transforms linking the four trees.
//!
//! The S-tree and SC-tree positions of a fraction are read straight off its
//! continued fraction. From there the Stern-Brocot position follows by a
//! digit rewrite of the SC path, and the Calkin-Wilf position from the S-tree
//! position, which closes the loop S → CW, SC ↔ SB, with the SC-tree being the
//! S-tree with equal-denominator siblings merged.
//!
//! All index arithmetic is arbitrary precision; a level-70 index already
//! overflows 64 bits.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bitpath::{address_to_path, path_to_address, BitPath, NodeAddress};
use crate::contfrac::ContinuedFraction;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::trees::{self, TreeKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocateResult {
    pub address: NodeAddress,
    /// Empty for vertices above the first two-vertex level.
    pub path: BitPath,
    pub cf: ContinuedFraction,
}

fn to_len(n: &BigUint) -> Result<usize> {
    n.to_usize()
        .ok_or_else(|| Error::Domain(format!("a path of length {n} cannot be materialised")))
}

fn zeros(path: &mut BitPath, count: usize) {
    for _ in 0..count {
        path.push(false);
    }
}

fn s_out_of_range(q: &Rational) -> Error {
    Error::OutOfTree {
        tree: TreeKind::S,
        value: q.to_string(),
    }
}

/// Position of `q ∈ (0, 1]` in the S-tree.
///
/// For `q = [0, a1, ..., ak]` the level is `a1 + ... + ak - 1` and the index
/// `1 + Σ_{i<k} 2^(a1 + ... + ai - 1)`. The path is
/// `0^(ak-2) 1 0^(a(k-1)-1) 1 ... 1 0^(a1-1)`. `1/1` sits alone on level 0.
pub fn s_locate(q: &Rational) -> Result<LocateResult> {
    q.ensure_finite_positive()?;
    if q.numer() > q.denom() {
        return Err(s_out_of_range(q));
    }
    let cf = ContinuedFraction::expand(q)?;
    if q.is_one() {
        return Ok(LocateResult {
            address: NodeAddress::new(TreeKind::S, 0, 1u32),
            path: BitPath::new(),
            cf,
        });
    }
    let a = &cf.terms()[1..];
    let k = a.len();

    let level = cf.term_sum() - 1u32;
    // Prefix sums strictly increase, so the powers are distinct bits.
    let mut index = BigUint::zero();
    let mut prefix = BigUint::zero();
    for term in &a[..k - 1] {
        prefix += term;
        let exp = (&prefix - 1u32)
            .to_u64()
            .ok_or_else(|| Error::Domain("index exponent overflows".into()))?;
        index.set_bit(exp, true);
    }
    index += 1u32;

    let mut path = BitPath::new();
    zeros(&mut path, to_len(&(&a[k - 1] - 2u32))?);
    for term in a[..k - 1].iter().rev() {
        path.push(true);
        zeros(&mut path, to_len(&(term - 1u32))?);
    }

    let level = level
        .to_u64()
        .ok_or_else(|| Error::Domain("level overflows".into()))?;
    Ok(LocateResult {
        address: NodeAddress::new(TreeKind::S, level, index),
        path,
        cf,
    })
}

/// SC-tree path from a run-length list: a leading bit, then one block per
/// term, each block after the first opened by a `1`; a block is `term - 1`
/// zeros, except the last which is `term - 2`.
fn sc_blocks(lead: bool, terms: &[BigUint]) -> Result<BitPath> {
    let mut path = BitPath::new();
    path.push(lead);
    let last = terms.len() - 1;
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            path.push(true);
        }
        let run = if i == last { t - 2u32 } else { t - 1u32 };
        zeros(&mut path, to_len(&run)?);
    }
    Ok(path)
}

/// Position of `q ≠ 1` in the SC-tree.
///
/// Below 1, `[0, a1, ..., ak]` gives `1 0^(a1-1) 1 0^(a2-1) ... 1 0^(ak-2)`.
/// Above 1 the path of the reciprocal with its first digit flipped.
pub fn sc_path(q: &Rational) -> Result<LocateResult> {
    q.ensure_finite_positive()?;
    if q.is_one() {
        return Err(Error::Domain(
            "1/1 is the SC root and is addressed as level 1, index 1".into(),
        ));
    }
    let cf = ContinuedFraction::expand(q)?;
    let below_one = q.numer() < q.denom();
    let terms = if below_one {
        &cf.terms()[1..]
    } else {
        cf.terms()
    };
    let path = sc_blocks(below_one, terms)?;
    Ok(LocateResult {
        address: path_to_address(&path, TreeKind::Sc),
        path,
        cf,
    })
}

/// Stern-Brocot path to SC-tree path of the same fraction: flip the first
/// digit, and flip every later digit that follows a `1` in the input.
pub fn sb_to_sc(e: &BitPath) -> Result<BitPath> {
    let bits = e.bits();
    if bits.is_empty() {
        return Err(Error::EmptyPath);
    }
    Ok(std::iter::once(!bits[0])
        .chain(bits.windows(2).map(|w| w[1] ^ w[0]))
        .collect())
}

/// Inverse of [`sb_to_sc`], decoding one digit at a time.
pub fn sc_to_sb(f: &BitPath) -> Result<BitPath> {
    let bits = f.bits();
    if bits.is_empty() {
        return Err(Error::EmptyPath);
    }
    let mut prev = !bits[0];
    let mut out = Vec::with_capacity(bits.len());
    out.push(prev);
    for &b in &bits[1..] {
        prev ^= b;
        out.push(prev);
    }
    Ok(BitPath::from_bits(out))
}

/// Maps the `ns`-th vertex of S-tree level `level` to its index on the same
/// level of the Calkin-Wilf tree.
///
/// With `ns - 1 = 2^r1 + ... + 2^rk` (`r1 > ... > rk`), pair up the
/// exponents: for even `k`
/// `nc = 1 + Σ (2^(r(2j-1)+1) - 2^(r(2j)+1))`; for odd `k`
/// `nc = 1 + 2^level - 2^(r1+1) + Σ (2^(r(2j)+1) - 2^(r(2j+1)+1))`.
pub fn s_to_cw_index(level: u64, ns: &BigUint) -> Result<BigUint> {
    let width = BigUint::one() << level.saturating_sub(1);
    if level == 0 || ns.is_zero() || *ns > width {
        return Err(Error::IndexOutOfRange {
            tree: TreeKind::S,
            level,
            index: ns.to_string(),
        });
    }
    let n = ns - 1u32;
    let exps: Vec<u64> = (0..n.bits()).rev().filter(|&i| n.bit(i)).collect();
    let pow = |e: u64| BigUint::one() << e;

    // Accumulate positive and negative parts separately to stay unsigned.
    let mut plus = BigUint::one();
    let mut minus = BigUint::zero();
    let rest = if exps.len().is_multiple_of(2) {
        &exps[..]
    } else {
        plus += pow(level);
        minus += pow(exps[0] + 1);
        &exps[1..]
    };
    for pair in rest.chunks(2) {
        plus += pow(pair[0] + 1);
        minus += pow(pair[1] + 1);
    }
    Ok(plus - minus)
}

/// S-tree path to Calkin-Wilf path of the same fraction.
///
/// Walk both trees in step, tracking whether the CW vertex equals the S
/// vertex or is its reciprocal. Equal vertices share their left child and
/// have reciprocal right children; reciprocal vertices swap roles, the S
/// right child being the CW left child. So each CW digit is the running
/// parity of the S digits, prefixed by the `0` that reaches `1/2`. If the
/// walk ends on the reciprocal, the mirror image (every digit flipped) is the
/// path to the fraction itself.
pub fn s_path_to_cw_path(x: &BitPath) -> BitPath {
    let mut parity = false;
    let mut y = Vec::with_capacity(x.len() + 1);
    y.push(false);
    for &b in x.bits() {
        parity ^= b;
        y.push(parity);
    }
    let y = BitPath::from_bits(y);
    if parity {
        y.complement()
    } else {
        y
    }
}

/// Stern-Brocot path by mediant bisection.
pub fn sb_path(q: &Rational) -> Result<BitPath> {
    trees::locate_by_walk(TreeKind::Sb, q)
}

/// Calkin-Wilf path by climbing parents.
pub fn cw_path(q: &Rational) -> Result<BitPath> {
    trees::locate_by_walk(TreeKind::Cw, q)
}

/// Closed-form location in any of the four trees.
///
/// * S: [`s_locate`].
/// * SC: [`sc_path`].
/// * SB: the SC path rewritten by [`sc_to_sb`].
/// * CW: below 1 via the S-tree position and [`s_to_cw_index`] /
///   [`s_path_to_cw_path`]; above 1 as the mirror image of the reciprocal.
pub fn locate(tree: TreeKind, q: &Rational) -> Result<LocateResult> {
    q.ensure_finite_positive()?;
    match tree {
        TreeKind::S => s_locate(q),
        TreeKind::Sc | TreeKind::Sb if q.is_one() => Ok(LocateResult {
            address: NodeAddress::new(tree, 1, 1u32),
            path: BitPath::new(),
            cf: ContinuedFraction::expand(q)?,
        }),
        TreeKind::Sc => sc_path(q),
        TreeKind::Sb => {
            let sc = sc_path(q)?;
            let path = sc_to_sb(&sc.path)?;
            Ok(LocateResult {
                address: path_to_address(&path, TreeKind::Sb),
                path,
                cf: sc.cf,
            })
        }
        TreeKind::Cw => cw_locate(q),
    }
}

fn cw_locate(q: &Rational) -> Result<LocateResult> {
    let cf = ContinuedFraction::expand(q)?;
    if q.is_one() {
        return Ok(LocateResult {
            address: NodeAddress::new(TreeKind::Cw, 0, 1u32),
            path: BitPath::new(),
            cf,
        });
    }
    let below_one = q.numer() < q.denom();
    let s = if below_one {
        s_locate(q)?
    } else {
        s_locate(&q.recip())?
    };
    let level = s.address.level;
    let index = s_to_cw_index(level, &s.address.index)?;
    let path = s_path_to_cw_path(&s.path);
    let (index, path) = if below_one {
        (index, path)
    } else {
        // mirror image: complement path, index counted from the right
        ((BigUint::one() << level) + 1u32 - index, path.complement())
    };
    Ok(LocateResult {
        address: NodeAddress::new(TreeKind::Cw, level, index),
        path,
        cf,
    })
}

/// Why a closed-form result disagreed with brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// The address does not match the path.
    AddressPath { address: NodeAddress, path: BitPath },
    /// Following the path by child rules reaches another value.
    PathValue { expected: Rational, found: Rational },
    /// The parent walk found a different path.
    Walk { closed_form: BitPath, walk: BitPath },
    /// The generated level holds another value at that index.
    Generated { expected: Rational, found: Rational },
}

/// Rechecks a closed-form result three ways: against its own path, against
/// the parent walk, and, if the level is at most `max_level`, against brute
/// force level generation. Returns whether the generated level was consulted.
pub fn verify(
    tree: TreeKind,
    q: &Rational,
    result: &LocateResult,
    max_level: u64,
) -> Result<std::result::Result<bool, Mismatch>> {
    // S-tree 1/1 sits above the first path level.
    if !(tree == TreeKind::S && q.is_one()) {
        let from_address = address_to_path(&result.address)?;
        if from_address != result.path {
            return Ok(Err(Mismatch::AddressPath {
                address: result.address.clone(),
                path: result.path.clone(),
            }));
        }
        let found = trees::value_at(tree, &result.path);
        if &found != q {
            return Ok(Err(Mismatch::PathValue {
                expected: q.clone(),
                found,
            }));
        }
        let walk = trees::locate_by_walk(tree, q)?;
        if walk != result.path {
            return Ok(Err(Mismatch::Walk {
                closed_form: result.path.clone(),
                walk,
            }));
        }
    }
    if result.address.level > max_level {
        return Ok(Ok(false));
    }
    let lvl = trees::level_with_cap(tree, result.address.level, max_level)?;
    let i = result
        .address
        .index
        .to_usize()
        .and_then(|i| i.checked_sub(1))
        .filter(|&i| i < lvl.len())
        .ok_or_else(|| Error::IndexOutOfRange {
            tree,
            level: result.address.level,
            index: result.address.index.to_string(),
        })?;
    if &lvl[i] != q {
        return Ok(Err(Mismatch::Generated {
            expected: q.clone(),
            found: lvl[i].clone(),
        }));
    }
    Ok(Ok(true))
}
