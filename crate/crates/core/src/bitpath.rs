//! 0-1 sequences and `(tree, level, index)` addresses.
//!
//! A path is read from the first level that holds two vertices: `0` moves
//! left, `1` moves right. Its binary value plus one is the 1-based index of
//! the vertex within its level.
//!
//! | tree | level of the empty path | level of a path of length `L` |
//! |------|-------------------------|-------------------------------|
//! | S    | 1 (`1/2`)               | `L + 1`                       |
//! | SC   | 1 (`1/1`)               | `L + 1`                       |
//! | SB   | 1 (`1/1`)               | `L + 1`                       |
//! | CW   | 0 (`1/1`)               | `L`                           |
//!
//! S level 0 holds only `1/1`; SC and SB level 0 hold the pseudo-fractions.
//! None of those has a path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::trees::TreeKind;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitPath {
    bits: Vec<bool>,
}

impl BitPath {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The `len`-bit big-endian spelling of `value`.
    pub fn from_value(value: &BigUint, len: usize) -> Result<Self> {
        if value.bits() > len as u64 {
            return Err(Error::Domain(format!("{value} does not fit in {len} bits")));
        }
        let bits = (0..len as u64).rev().map(|i| value.bit(i)).collect();
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// The integer whose binary expansion is this path; `0` when empty.
    pub fn value(&self) -> BigUint {
        let mut v = BigUint::zero();
        for (i, &b) in self.bits.iter().rev().enumerate() {
            if b {
                v.set_bit(i as u64, true);
            }
        }
        v
    }

    pub fn to_address(&self, tree: TreeKind) -> NodeAddress {
        path_to_address(self, tree)
    }
}

impl FromIterator<bool> for BitPath {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for BitPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for BitPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    what: "0-1 path",
                    input: s.to_owned(),
                }),
            })
            .collect()
    }
}

pub fn path_value(p: &BitPath) -> BigUint {
    p.value()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeAddress {
    pub tree: TreeKind,
    pub level: u64,
    /// 1-based, counted from the left.
    pub index: BigUint,
}

impl NodeAddress {
    pub fn new(tree: TreeKind, level: u64, index: impl Into<BigUint>) -> Self {
        Self {
            tree,
            level,
            index: index.into(),
        }
    }

    /// Number of vertices in this address's level.
    pub fn level_width(&self) -> BigUint {
        level_width(self.tree, self.level)
    }

    fn check_range(&self) -> Result<()> {
        if self.index.is_zero() || self.index > self.level_width() {
            return Err(Error::IndexOutOfRange {
                tree: self.tree,
                level: self.level,
                index: self.index.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} level {} index {}", self.tree, self.level, self.index)
    }
}

/// Width of a level, counting pseudo-fractions where a level holds them.
pub fn level_width(tree: TreeKind, level: u64) -> BigUint {
    match (tree, level) {
        (TreeKind::S, 0) => BigUint::one(),
        (TreeKind::Sc | TreeKind::Sb, 0) => BigUint::from(2u32),
        (TreeKind::Cw, l) => BigUint::one() << l,
        (_, l) => BigUint::one() << (l - 1),
    }
}

fn path_offset(tree: TreeKind) -> u64 {
    match tree {
        TreeKind::Cw => 0,
        _ => 1,
    }
}

pub fn path_to_address(p: &BitPath, tree: TreeKind) -> NodeAddress {
    NodeAddress {
        tree,
        level: p.len() as u64 + path_offset(tree),
        index: p.value() + 1u32,
    }
}

pub fn address_to_path(a: &NodeAddress) -> Result<BitPath> {
    a.check_range()?;
    let offset = path_offset(a.tree);
    if a.level < offset {
        return Err(Error::NoPath {
            tree: a.tree,
            level: a.level,
        });
    }
    let len = usize::try_from(a.level - offset)
        .map_err(|_| Error::Domain(format!("level {} is too deep to spell out", a.level)))?;
    BitPath::from_value(&(&a.index - 1u32), len)
}

/// Position of the vertex in breadth-first order, counting from 1 and
/// skipping pseudo-fractions. For the S-tree `1/1` is #1 and `1/2` is #2.
pub fn global_index(a: &NodeAddress) -> Result<BigUint> {
    a.check_range()?;
    let one = BigUint::one();
    match (a.tree, a.level) {
        (TreeKind::S, 0) => Ok(one),
        (TreeKind::S, l) => Ok((one << (l - 1)) + &a.index),
        (TreeKind::Sc | TreeKind::Sb, 0) => Err(Error::PseudoFraction(format!(
            "level 0 of the {} tree",
            a.tree
        ))),
        (TreeKind::Sc | TreeKind::Sb, l) => Ok((one << (l - 1)) + &a.index - 1u32),
        (TreeKind::Cw, l) => Ok((one << l) + &a.index - 1u32),
    }
}
