//! The four enumeration trees, defined by their child rules.
//!
//! * **S**: `m/n` has children `m/(m+n)` and `n/(m+n)`; the root `1/1` has the
//!   single child `1/2`. Covers `(0, 1]`.
//! * **SC**: each vertex carries its parent and its left increment; the left
//!   child adds the increment, the right child adds the parent. Seeded by the
//!   root `1/1` hanging between `1/0` and `0/1`. Covers all positive rationals.
//! * **SB** (Stern-Brocot): each vertex is the mediant of its two bounds.
//! * **CW** (Calkin-Wilf): `a/b` has children `a/(a+b)` and `(a+b)/b`.
//!
//! Level generation here is deliberately naive; it is the brute-force oracle
//! the closed-form locators in [`crate::locate`] are checked against.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitpath::BitPath;
use crate::error::{Error, Result};
use crate::rational::{unimodular_mediant, Rational};

/// Deepest level the generators will build unless told otherwise.
pub const DEFAULT_DEPTH_CAP: u64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKind {
    S,
    Sc,
    Sb,
    Cw,
}

impl TreeKind {
    pub const ALL: [TreeKind; 4] = [TreeKind::S, TreeKind::Sc, TreeKind::Sb, TreeKind::Cw];

    /// Short lowercase name used on the command line and in JSON.
    pub fn code(self) -> &'static str {
        match self {
            TreeKind::S => "s",
            TreeKind::Sc => "sc",
            TreeKind::Sb => "sb",
            TreeKind::Cw => "cw",
        }
    }

    /// Level of the vertex addressed by the empty path.
    pub fn origin_level(self) -> u64 {
        match self {
            TreeKind::Cw => 0,
            _ => 1,
        }
    }

    /// State of the vertex addressed by the empty path.
    pub fn origin(self) -> NodeState {
        match self {
            TreeKind::S => NodeState::S(Rational::new(1, 2).unwrap()),
            TreeKind::Sc => NodeState::Sc(ScNodeState::root()),
            TreeKind::Sb => NodeState::Sb(SbNodeState::root()),
            TreeKind::Cw => NodeState::Cw(Rational::one()),
        }
    }

    /// Does `q` occur in this tree at all?
    pub fn contains(self, q: &Rational) -> bool {
        if q.is_pseudo() {
            return false;
        }
        match self {
            TreeKind::S => q.numer() <= q.denom(),
            _ => true,
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeKind::S => "S",
            TreeKind::Sc => "SC",
            TreeKind::Sb => "Stern-Brocot",
            TreeKind::Cw => "Calkin-Wilf",
        })
    }
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" => Ok(TreeKind::S),
            "sc" => Ok(TreeKind::Sc),
            "sb" | "stern-brocot" => Ok(TreeKind::Sb),
            "cw" | "calkin-wilf" => Ok(TreeKind::Cw),
            _ => Err(Error::Parse {
                what: "tree kind (s, sc, sb, cw)",
                input: s.to_owned(),
            }),
        }
    }
}

/// An SC-tree vertex together with the two vertices it was built from.
/// `value = parent ⊕ left_increment`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScNodeState {
    pub value: Rational,
    pub parent: Rational,
    pub left_increment: Rational,
}

impl ScNodeState {
    /// `1/1` is the right child of `1/0` and the left child of `0/1`; as a
    /// state its left increment is `1/0` and its "parent" `0/1`, which yields
    /// the children `2/1` and `1/2`.
    pub fn root() -> Self {
        Self {
            value: Rational::one(),
            parent: Rational::zero(),
            left_increment: Rational::infinity(),
        }
    }

    pub fn left(&self) -> Self {
        Self {
            value: unimodular_mediant(&self.value, &self.left_increment),
            parent: self.value.clone(),
            left_increment: self.left_increment.clone(),
        }
    }

    pub fn right(&self) -> Self {
        Self {
            value: unimodular_mediant(&self.value, &self.parent),
            parent: self.value.clone(),
            left_increment: self.parent.clone(),
        }
    }
}

/// A Stern-Brocot vertex and the neighbours whose mediant it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbNodeState {
    pub left_bound: Rational,
    pub value: Rational,
    pub right_bound: Rational,
}

impl SbNodeState {
    pub fn root() -> Self {
        Self {
            left_bound: Rational::zero(),
            value: Rational::one(),
            right_bound: Rational::infinity(),
        }
    }

    pub fn left(&self) -> Self {
        Self {
            value: unimodular_mediant(&self.left_bound, &self.value),
            left_bound: self.left_bound.clone(),
            right_bound: self.value.clone(),
        }
    }

    pub fn right(&self) -> Self {
        Self {
            value: unimodular_mediant(&self.value, &self.right_bound),
            left_bound: self.value.clone(),
            right_bound: self.right_bound.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeState {
    S(Rational),
    Sc(ScNodeState),
    Sb(SbNodeState),
    Cw(Rational),
}

impl NodeState {
    pub fn tree(&self) -> TreeKind {
        match self {
            NodeState::S(_) => TreeKind::S,
            NodeState::Sc(_) => TreeKind::Sc,
            NodeState::Sb(_) => TreeKind::Sb,
            NodeState::Cw(_) => TreeKind::Cw,
        }
    }

    pub fn value(&self) -> &Rational {
        match self {
            NodeState::S(v) | NodeState::Cw(v) => v,
            NodeState::Sc(s) => &s.value,
            NodeState::Sb(s) => &s.value,
        }
    }

    pub fn into_value(self) -> Rational {
        match self {
            NodeState::S(v) | NodeState::Cw(v) => v,
            NodeState::Sc(s) => s.value,
            NodeState::Sb(s) => s.value,
        }
    }

    /// Left and right child. The S-tree root `1/1` only has the child `1/2`,
    /// see [`s_root_child`].
    pub fn children(&self) -> Result<(NodeState, NodeState)> {
        Ok((self.child(false)?, self.child(true)?))
    }

    /// The left child for `false`, the right child for `true`.
    pub fn child(&self, right: bool) -> Result<NodeState> {
        Ok(match self {
            NodeState::S(v) => {
                if v.is_one() {
                    return if right {
                        Err(Error::NoRightChild)
                    } else {
                        Ok(NodeState::S(s_root_child()))
                    };
                }
                let sum = v.weight();
                let top = if right { v.denom() } else { v.numer() };
                NodeState::S(Rational::from_coprime(top.clone(), sum))
            }
            NodeState::Cw(v) => {
                let sum = v.weight();
                NodeState::Cw(if right {
                    Rational::from_coprime(sum, v.denom().clone())
                } else {
                    Rational::from_coprime(v.numer().clone(), sum)
                })
            }
            NodeState::Sc(s) => NodeState::Sc(if right { s.right() } else { s.left() }),
            NodeState::Sb(s) => NodeState::Sb(if right { s.right() } else { s.left() }),
        })
    }
}

/// The only child of the S-tree root.
pub fn s_root_child() -> Rational {
    Rational::new(1, 2).unwrap()
}

/// Children of a value in the given tree. SC and SB vertices need their
/// construction context, so for those the value is first located by a walk.
pub fn children(tree: TreeKind, state: &NodeState) -> Result<(NodeState, NodeState)> {
    if state.tree() != tree {
        return Err(Error::Domain(format!(
            "state belongs to the {} tree, not the {tree} tree",
            state.tree()
        )));
    }
    state.children()
}

/// The full construction state of `q`, found by walking from the origin.
pub fn state_of(tree: TreeKind, q: &Rational) -> Result<NodeState> {
    if tree == TreeKind::S && q.is_one() {
        return Ok(NodeState::S(Rational::one()));
    }
    let path = locate_by_walk(tree, q)?;
    state_at(tree, &path)
}

/// Vertex states of one level, left to right.
pub fn level_states(tree: TreeKind, m: u64, cap: u64) -> Result<Vec<NodeState>> {
    if m > cap {
        return Err(Error::DepthCap { depth: m, cap });
    }
    if m < tree.origin_level() {
        return Err(Error::NoPath { tree, level: m });
    }
    let mut states = vec![tree.origin()];
    for _ in tree.origin_level()..m {
        let mut next = Vec::with_capacity(states.len() * 2);
        for s in &states {
            let (l, r) = s.children()?;
            next.push(l);
            next.push(r);
        }
        states = next;
    }
    Ok(states)
}

/// The vertices of level `m`, left to right, including the top levels that
/// are not reached by any path (`[1/1]` for S, the pseudo-fractions for SC and
/// SB).
pub fn level_with_cap(tree: TreeKind, m: u64, cap: u64) -> Result<Vec<Rational>> {
    if m > cap {
        return Err(Error::DepthCap { depth: m, cap });
    }
    match (tree, m) {
        (TreeKind::S, 0) => Ok(vec![Rational::one()]),
        (TreeKind::Sc, 0) => Ok(vec![Rational::infinity(), Rational::zero()]),
        (TreeKind::Sb, 0) => Ok(vec![Rational::zero(), Rational::infinity()]),
        _ => Ok(level_states(tree, m, cap)?
            .into_iter()
            .map(NodeState::into_value)
            .collect()),
    }
}

pub fn level(tree: TreeKind, m: u64) -> Result<Vec<Rational>> {
    level_with_cap(tree, m, DEFAULT_DEPTH_CAP)
}

pub fn state_at(tree: TreeKind, p: &BitPath) -> Result<NodeState> {
    let mut state = tree.origin();
    for &bit in p.bits() {
        state = state.child(bit)?;
    }
    Ok(state)
}

/// The vertex a path leads to, folding child rules from the tree's origin.
pub fn value_at(tree: TreeKind, p: &BitPath) -> Rational {
    // S and CW need no context, so fold over bare numerator/denominator pairs.
    match tree {
        TreeKind::S | TreeKind::Cw => {
            let origin = tree.origin().into_value();
            let (mut n, mut d) = (origin.numer().clone(), origin.denom().clone());
            for &bit in p.bits() {
                let sum = &n + &d;
                (n, d) = match (tree, bit) {
                    (TreeKind::S, false) => (n, sum),
                    (TreeKind::S, true) => (d, sum),
                    (_, false) => (n, sum),
                    (_, true) => (sum, d),
                };
            }
            Rational::from_coprime(n, d)
        }
        _ => state_at(tree, p)
            .expect("SC and SB vertices always have two children")
            .into_value(),
    }
}

fn out_of_tree(tree: TreeKind, q: &Rational) -> Error {
    Error::OutOfTree {
        tree,
        value: q.to_string(),
    }
}

/// Locates `q` by climbing parent links (S, CW, SC) or by mediant bisection
/// (SB). Each step strictly lowers `numerator + denominator`, so the walk
/// terminates. For the S-tree both `1/1` and `1/2` give the empty path.
pub fn locate_by_walk(tree: TreeKind, q: &Rational) -> Result<BitPath> {
    if !tree.contains(q) {
        return Err(if q.is_pseudo() {
            Error::PseudoFraction(q.to_string())
        } else {
            out_of_tree(tree, q)
        });
    }
    Ok(match tree {
        TreeKind::S => s_walk(q),
        TreeKind::Cw => cw_walk(q),
        TreeKind::Sb => sb_bisect(q),
        TreeKind::Sc => sc_walk(q),
    })
}

fn s_walk(q: &Rational) -> BitPath {
    let (mut u, mut v) = (q.numer().clone(), q.denom().clone());
    let mut rev = Vec::new();
    // Stop at 1/2 (u == v - u) or 1/1 (u == v).
    loop {
        let rest = &v - &u;
        if rest == u || rest.is_zero() {
            break;
        }
        if u < rest {
            // left child of u/(v-u)
            v = rest;
            rev.push(false);
        } else {
            // right child of (v-u)/u
            v = u;
            u = rest;
            rev.push(true);
        }
    }
    rev.into_iter().rev().collect()
}

fn cw_walk(q: &Rational) -> BitPath {
    let (mut a, mut b) = (q.numer().clone(), q.denom().clone());
    let mut rev = Vec::new();
    while a != b {
        if a < b {
            b -= &a;
            rev.push(false);
        } else {
            a -= &b;
            rev.push(true);
        }
    }
    rev.into_iter().rev().collect()
}

fn sb_bisect(q: &Rational) -> BitPath {
    let mut state = SbNodeState::root();
    let mut path = BitPath::new();
    loop {
        match q.cmp_value(&state.value) {
            std::cmp::Ordering::Equal => return path,
            std::cmp::Ordering::Less => {
                path.push(false);
                state = state.left();
            }
            std::cmp::Ordering::Greater => {
                path.push(true);
                state = state.right();
            }
        }
    }
}

/// The two reduced fractions whose mediant is `q` and whose determinant with
/// each other is ±1, smaller one first. For `1/1` these are `0/1` and `1/0`.
pub fn farey_parents(q: &Rational) -> (Rational, Rational) {
    use num_bigint::BigInt;
    use num_integer::Integer;

    let (a, b) = (q.numer(), q.denom());
    if b.is_one() {
        let below = Rational::from_coprime(a - 1u32, BigUint::one());
        return (below, Rational::infinity());
    }
    // Lower neighbour c/d satisfies a*d - b*c = 1 with 0 < d < b.
    let ai = BigInt::from(a.clone());
    let bi = BigInt::from(b.clone());
    let egcd = ai.extended_gcd(&bi);
    let d = egcd.x.mod_floor(&bi);
    let c: BigInt = (&ai * &d - BigInt::one()) / &bi;
    let (c, d) = (c.magnitude().clone(), d.magnitude().clone());
    let upper = Rational::from_coprime(a - &c, b - &d);
    (Rational::from_coprime(c, d), upper)
}

/// SC parent walk. A vertex's generating pair is its two Farey parents: the
/// heavier one is its tree parent, the lighter one either the parent's own
/// parent (right child) or the parent's left increment (left child).
fn sc_walk(q: &Rational) -> BitPath {
    let mut rev = Vec::new();
    if !q.is_one() {
        let (lo, hi) = farey_parents(q);
        let (mut parent, mut other) = heavier_first(lo, hi);
        loop {
            if parent.is_one() {
                // children of the root: 2/1 adds 1/0 (left), 1/2 adds 0/1 (right)
                rev.push(other.denom().is_one() && other.numer().is_zero());
                break;
            }
            let rest = Rational::from_coprime(
                parent.numer() - other.numer(),
                parent.denom() - other.denom(),
            );
            let grand = if other.weight() > rest.weight() {
                &other
            } else {
                &rest
            };
            rev.push(*grand == other);
            let (p, o) = heavier_first(other, rest);
            parent = p;
            other = o;
        }
    }
    rev.into_iter().rev().collect()
}

fn heavier_first(x: Rational, y: Rational) -> (Rational, Rational) {
    if x.weight() >= y.weight() {
        (x, y)
    } else {
        (y, x)
    }
}

/// Breadth-first enumeration of a tree, left to right within each level,
/// yielding `(global index, value)`. Pseudo-fractions are skipped.
pub fn bfs_iter(tree: TreeKind) -> BfsIter {
    BfsIter {
        tree,
        queue: VecDeque::from([tree.origin()]),
        next_index: BigUint::one(),
        emit_s_root: tree == TreeKind::S,
    }
}

#[derive(Debug, Clone)]
pub struct BfsIter {
    tree: TreeKind,
    queue: VecDeque<NodeState>,
    next_index: BigUint,
    emit_s_root: bool,
}

impl BfsIter {
    pub fn tree(&self) -> TreeKind {
        self.tree
    }
}

impl Iterator for BfsIter {
    type Item = (BigUint, Rational);

    fn next(&mut self) -> Option<Self::Item> {
        let index = self.next_index.clone();
        self.next_index += 1u32;
        if self.emit_s_root {
            self.emit_s_root = false;
            return Some((index, Rational::one()));
        }
        let state = self.queue.pop_front()?;
        let (l, r) = state
            .children()
            .expect("every vertex below the S root has two children");
        self.queue.push_back(l);
        self.queue.push_back(r);
        Some((index, state.into_value()))
    }
}

/// Graphviz rendering of levels `0..=depth`. Nodes are labelled `n/d`; each
/// vertex lists its left edge before its right edge.
pub fn render_dot(tree: TreeKind, depth: u64) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", tree.code());
    let _ = writeln!(out, "  node [shape=plaintext];");
    let node = |out: &mut String, id: &str, label: &Rational| {
        let _ = writeln!(out, "  {id} [label=\"{label}\"];");
    };
    let edge = |out: &mut String, from: &str, to: &str| {
        let _ = writeln!(out, "  {from} -> {to};");
    };

    // Ids are level/position pairs, so each vertex is declared once.
    let origin_level = tree.origin_level();
    match tree {
        TreeKind::S => {
            node(&mut out, "v0_1", &Rational::one());
            if depth >= 1 {
                edge(&mut out, "v0_1", "v1_1");
            }
        }
        TreeKind::Sc => {
            node(&mut out, "v0_1", &Rational::infinity());
            node(&mut out, "v0_2", &Rational::zero());
            if depth >= 1 {
                edge(&mut out, "v0_1", "v1_1");
                edge(&mut out, "v0_2", "v1_1");
            }
        }
        TreeKind::Sb | TreeKind::Cw => {}
    }
    if depth >= origin_level {
        let mut states = vec![tree.origin()];
        let mut lvl = origin_level;
        loop {
            for (i, s) in states.iter().enumerate() {
                node(&mut out, &format!("v{lvl}_{}", i + 1), s.value());
            }
            if lvl == depth {
                break;
            }
            let mut next = Vec::with_capacity(states.len() * 2);
            for (i, s) in states.iter().enumerate() {
                let (l, r) = s.children()?;
                let from = format!("v{lvl}_{}", i + 1);
                edge(&mut out, &from, &format!("v{}_{}", lvl + 1, 2 * i + 1));
                edge(&mut out, &from, &format!("v{}_{}", lvl + 1, 2 * i + 2));
                next.push(l);
                next.push(r);
            }
            states = next;
            lvl += 1;
        }
    }
    out.push_str("}\n");
    Ok(out)
}
