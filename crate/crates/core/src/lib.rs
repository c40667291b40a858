//! Four binary trees that list every positive rational exactly once: the
//! S-tree, the SC-tree, the Stern-Brocot tree and the Calkin-Wilf tree.
//!
//! Vertices are located in closed form from their continued fraction
//! ([`locate`]), and the paths of one fraction in different trees are
//! converted directly into each other ([`sb_to_sc`], [`sc_to_sb`],
//! [`s_to_cw_index`], [`s_path_to_cw_path`]). Each closed form has a
//! brute-force counterpart ([`locate_by_walk`], [`level`]) used for
//! verification.
//!
//! ```
//! use rational_forest::{locate, Rational, TreeKind};
//!
//! let q: Rational = "3/7".parse().unwrap();
//! let found = locate(TreeKind::Sc, &q).unwrap();
//! assert_eq!(found.path.to_string(), "1010");
//! assert_eq!(found.address.level, 5);
//! ```

pub mod apps;
pub mod bitpath;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod locate;
pub mod rational;
pub mod trees;

pub use apps::{buttons_for, fibonacci, replay_f64, simulate_buttons, Button, SqrtState};
pub use bitpath::{address_to_path, global_index, path_to_address, BitPath, NodeAddress};
pub use contfrac::{cf_eval, ContinuedFraction};
pub use error::{Error, Result};
pub use locate::{
    locate, s_locate, s_path_to_cw_path, s_to_cw_index, sb_to_sc, sc_path, sc_to_sb, verify,
    LocateResult, Mismatch,
};
pub use rational::{addable, determinant, mediant, Rational};
pub use trees::{
    bfs_iter, level, level_with_cap, locate_by_walk, render_dot, value_at, NodeState, TreeKind,
    DEFAULT_DEPTH_CAP,
};
