//! Command-line front end. Each subcommand forwards to one library call and
//! formats the result.
//!
//! Exit status is 0 on success, 2 on bad input and 1 when `locate --verify`
//! or `buttons` finds the closed form disagreeing with brute force.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::apps;
use crate::bitpath::{address_to_path, path_to_address, BitPath, NodeAddress};
use crate::error::Error;
use crate::locate;
use crate::rational::Rational;
use crate::trees::{self, TreeKind, DEFAULT_DEPTH_CAP};

pub const DEPTH_CAP_VAR: &str = "RATIONAL_FOREST_DEPTH_CAP";

/// Deepest level `render` will draw.
pub const RENDER_DEPTH_LIMIT: u64 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "rational-forest",
    version,
    about = "Locate fractions in four trees of the rationals"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Level, index and path of a fraction.
    Locate {
        tree: TreeKind,
        q: Rational,
        /// Recheck against the parent walk and level generation.
        #[arg(long)]
        verify: bool,
    },
    /// The vertex reached by a 0-1 path.
    Value { tree: TreeKind, path: BitPath },
    /// Convert a path or address from one tree to another.
    Map {
        #[command(subcommand)]
        map: MapCommand,
    },
    /// The first K vertices in breadth-first order.
    Enumerate {
        tree: TreeKind,
        #[arg(long)]
        count: usize,
    },
    /// All vertices of one level, left to right.
    Level { tree: TreeKind, m: u64 },
    /// The n-th Fibonacci number.
    Fib { n: u64 },
    /// Trigonometric keys that turn 0 into the given fraction.
    Buttons { q: Rational },
    /// Graphviz drawing of the top levels.
    Render {
        tree: TreeKind,
        #[arg(long)]
        depth: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum MapCommand {
    /// Stern-Brocot path to SC-tree path.
    SbSc { path: BitPath },
    /// SC-tree path to Stern-Brocot path.
    ScSb { path: BitPath },
    /// S-tree address to Calkin-Wilf address.
    SCw { level: u64, index: BigUint },
}

/// Failure of a single invocation.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Mismatch(String),
}

impl Failure {
    pub fn status(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Mismatch(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Reads the depth cap from the environment, falling back to the default.
pub fn depth_cap_from_env() -> Result<u64, Failure> {
    match std::env::var(DEPTH_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(format!(
                "{DEPTH_CAP_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_DEPTH_CAP),
    }
}

/// Parses `argv` (program name first), runs it and writes the result to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, depth_cap: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return status;
        }
    };
    match execute(&cli, depth_cap) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.status()
        }
    }
}

/// Runs a parsed command and returns the text to print.
pub fn execute(cli: &Cli, depth_cap: u64) -> Result<String, Failure> {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Render { .. }) {
        return Err(Failure::Input("--format dot applies to render only".into()));
    }
    match &cli.command {
        Command::Locate { tree, q, verify } => {
            let found = locate::locate(*tree, q)?;
            if *verify {
                if let Err(m) = locate::verify(*tree, q, &found, depth_cap)? {
                    return Err(Failure::Mismatch(format!("{q} in the {tree} tree: {m:?}")));
                }
            }
            Ok(match format {
                Format::Plain => format!("{} path {}", found.address, found.path),
                _ => {
                    let mut doc = address_json(&found.address, &found.path);
                    doc["cf"] = json!(found.cf.to_string());
                    if *verify {
                        doc["verified"] = json!(true);
                    }
                    doc.to_string()
                }
            })
        }
        Command::Value { tree, path } => {
            let v = trees::value_at(*tree, path);
            Ok(match format {
                Format::Plain => v.to_string(),
                _ => json!({"tree": tree.code(), "path": path.to_string(), "value": v.to_string()})
                    .to_string(),
            })
        }
        Command::Map { map } => map_command(map, format),
        Command::Enumerate { tree, count } => {
            let items: Vec<(BigUint, Rational)> = trees::bfs_iter(*tree).take(*count).collect();
            Ok(match format {
                Format::Plain => lines(items.iter().map(|(i, v)| format!("{i} {v}"))),
                _ => Value::Array(
                    items
                        .iter()
                        .map(|(i, v)| json!({"index": i.to_string(), "value": v.to_string()}))
                        .collect(),
                )
                .to_string(),
            })
        }
        Command::Level { tree, m } => {
            let values = trees::level_with_cap(*tree, *m, depth_cap)?;
            Ok(match format {
                Format::Plain => lines(values.iter().map(Rational::to_string)),
                _ => json!(values.iter().map(Rational::to_string).collect::<Vec<_>>()).to_string(),
            })
        }
        Command::Fib { n } => Ok(apps::fibonacci(*n)?.to_string()),
        Command::Buttons { q } => {
            let keys = apps::buttons_for(q)?;
            let state = apps::simulate_buttons(&keys)?;
            if state.exact_value().as_ref() != Some(q) {
                return Err(Failure::Mismatch(format!("keys for {q} end at {state:?}")));
            }
            let names: Vec<&str> = keys.iter().map(|k| k.name()).collect();
            Ok(match format {
                Format::Plain => format!("{}\n≈ {}", names.join(" "), apps::replay_f64(&keys)),
                _ => json!({"keys": names, "verified": true, "value": q.to_string()}).to_string(),
            })
        }
        Command::Render { tree, depth } => {
            if *depth > RENDER_DEPTH_LIMIT {
                return Err(Failure::Input(format!(
                    "render draws at most {RENDER_DEPTH_LIMIT} levels, got {depth}"
                )));
            }
            let dot = trees::render_dot(*tree, *depth)?;
            Ok(dot.trim_end().to_owned())
        }
    }
}

fn map_command(map: &MapCommand, format: Format) -> Result<String, Failure> {
    let (from, from_path, to, to_path) = match map {
        MapCommand::SbSc { path } => (
            TreeKind::Sb,
            path.clone(),
            TreeKind::Sc,
            locate::sb_to_sc(path)?,
        ),
        MapCommand::ScSb { path } => (
            TreeKind::Sc,
            path.clone(),
            TreeKind::Sb,
            locate::sc_to_sb(path)?,
        ),
        MapCommand::SCw { level, index } => {
            let s_addr = NodeAddress::new(TreeKind::S, *level, index.clone());
            let s_path = address_to_path(&s_addr)?;
            let cw_index = locate::s_to_cw_index(*level, index)?;
            let cw_addr = NodeAddress::new(TreeKind::Cw, *level, cw_index);
            let cw_path = address_to_path(&cw_addr)?;
            (TreeKind::S, s_path, TreeKind::Cw, cw_path)
        }
    };
    let from_addr = path_to_address(&from_path, from);
    let to_addr = path_to_address(&to_path, to);
    Ok(match format {
        Format::Plain => format!("{from_addr} path {from_path}\n{to_addr} path {to_path}"),
        _ => {
            let mut doc = serde_json::Map::new();
            doc.insert(from.code().into(), address_json(&from_addr, &from_path));
            doc.insert(to.code().into(), address_json(&to_addr, &to_path));
            Value::Object(doc).to_string()
        }
    })
}

fn address_json(a: &NodeAddress, path: &BitPath) -> Value {
    json!({
        "tree": a.tree.code(),
        "level": a.level,
        "index": a.index.to_string(),
        "path": path.to_string(),
    })
}

fn lines(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join("\n")
}
