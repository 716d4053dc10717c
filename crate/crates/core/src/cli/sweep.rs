//! The cross-check sweep behind `jordan verify`.

use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp_oracle::tensor_block_sizes;
use crate::prime::Prime;
use crate::recursion::jordan_partition;
use crate::standardness::{classify, standard_direct, standard_prop1};

/// A pair of independent computations compared cell by cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Path {
    /// Recursive partition against the GF(p) rank oracle, over `m*n <= budget`.
    RecursionOracle,
    /// Definition against the recursive criterion, over the `max_m x max_n` grid.
    DirectProp1,
    /// Definition against the closed-form classification (odd `p`).
    DirectTheorems,
}

impl Path {
    pub fn legs(self) -> [&'static str; 2] {
        match self {
            Path::RecursionOracle => ["recursion", "oracle"],
            Path::DirectProp1 => ["direct", "prop1"],
            Path::DirectTheorems => ["direct", "theorems"],
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::RecursionOracle => "recursion-oracle",
            Path::DirectProp1 => "direct-prop1",
            Path::DirectTheorems => "direct-theorems",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub p: Prime,
    pub budget: u64,
    pub max_m: u64,
    pub max_n: u64,
    pub paths: Vec<Path>,
    pub jobs: usize,
}

impl SweepConfig {
    /// All three paths, without the classification leg for `p = 2`.
    pub fn default_paths(p: Prime) -> Vec<Path> {
        let mut paths = vec![Path::RecursionOracle, Path::DirectProp1];
        if p.is_odd() {
            paths.push(Path::DirectTheorems);
        }
        paths
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub m: u64,
    pub n: u64,
    pub legs: [String; 2],
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub p: Prime,
    pub budget: u64,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
}

/// `1 <= m <= n` with `m*n <= budget`.
pub fn budget_grid(budget: u64) -> Vec<(u64, u64)> {
    let mut cells = Vec::new();
    let mut m = 1;
    while m * m <= budget {
        cells.extend((m..=budget / m).map(|n| (m, n)));
        m += 1;
    }
    cells
}

/// `1 <= m <= max_m`, `m <= n <= max_n`.
pub fn box_grid(max_m: u64, max_n: u64) -> Vec<(u64, u64)> {
    (1..=max_m.min(max_n))
        .flat_map(|m| (m..=max_n).map(move |n| (m, n)))
        .collect()
}

fn flag(b: bool) -> Vec<u64> {
    vec![u64::from(b)]
}

fn compare(path: Path, m: u64, n: u64, p: Prime, budget: u64) -> Result<Option<Mismatch>> {
    let (a, b) = match path {
        Path::RecursionOracle => (
            jordan_partition(m, n, p)?.parts().to_vec(),
            tensor_block_sizes(m, n, p, budget)?,
        ),
        Path::DirectProp1 => (
            flag(standard_direct(m, n, p)?),
            flag(standard_prop1(m, n, p)?),
        ),
        Path::DirectTheorems => (
            flag(standard_direct(m, n, p)?),
            flag(classify(m, n, p)?.standard),
        ),
    };
    Ok((a != b).then(|| Mismatch {
        m,
        n,
        legs: path.legs().map(String::from),
        a,
        b,
    }))
}

/// Runs every selected path on its grid. `on_mismatch` sees each mismatch
/// as soon as it is found, in no particular order; the report lists them
/// sorted by `(m, n)`.
pub fn run_sweep<F>(config: &SweepConfig, on_mismatch: F) -> Result<SweepReport>
where
    F: Fn(&Mismatch) + Sync,
{
    if config.paths.contains(&Path::DirectTheorems) && !config.p.is_odd() {
        return Err(Error::ClassificationOpen);
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;

    let mut paths = config.paths.clone();
    paths.sort_unstable();
    paths.dedup();
    let mut cells = Vec::new();
    for &path in &paths {
        let grid = match path {
            Path::RecursionOracle => budget_grid(config.budget),
            Path::DirectProp1 | Path::DirectTheorems => box_grid(config.max_m, config.max_n),
        };
        cells.extend(grid.into_iter().map(|(m, n)| (path, m, n)));
    }

    let (p, budget) = (config.p, config.budget);
    let found: Result<Vec<Mismatch>> = pool.install(|| {
        cells
            .par_iter()
            .filter_map(|&(path, m, n)| match compare(path, m, n, p, budget) {
                Ok(Some(mismatch)) => {
                    on_mismatch(&mismatch);
                    Some(Ok(mismatch))
                }
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    });
    let mut mismatches = found?;
    mismatches.sort_by(|x, y| (x.m, x.n, &x.legs).cmp(&(y.m, y.n, &y.legs)));

    Ok(SweepReport {
        p,
        budget,
        checked: cells.len() as u64,
        mismatches,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
