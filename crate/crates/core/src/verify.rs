//! Exhaustive sweep confronting the closed forms with the oracle and the
//! enumerator.
//!
//! For every `n` in range, every selected colouring and every ordered vertex
//! pair, three checks run:
//!
//! - proper distance against breadth-first search;
//! - path count against depth-first path counting;
//! - path count against the length of the enumeration stream.
//!
//! Pairs whose predicted count exceeds the budget skip the last two checks
//! and are tallied in `skipped`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{ColorClass, Coloring};
use crate::counting::{count_for_profile_with, DeficitLength};
use crate::enumeration::enumerate_shortest_proper_paths;
use crate::metrics::pair_profile;
use crate::oracle::{
    build_colored_hypercube, oracle_count_shortest, oracle_distances_from, OracleError,
    DEFAULT_BUDGET, MAX_ORACLE_DIMS,
};
use crate::vertex::Vertex;

/// Which colourings of each `H_n` to sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringSet {
    /// Every `(j)`-colouring, `1 <= j < n`.
    AllPrefix,
    /// `count` uniformly random two-class colourings per `n`.
    Random { count: usize, seed: u64 },
}

impl ColoringSet {
    /// `all-j` or `random-jstar:K`.
    pub fn parse(s: &str, seed: u64) -> Option<Self> {
        if s == "all-j" {
            return Some(ColoringSet::AllPrefix);
        }
        let count = s.strip_prefix("random-jstar:")?.parse().ok()?;
        Some(ColoringSet::Random { count, seed })
    }

    pub fn colorings(&self, n: usize) -> Vec<Coloring> {
        match *self {
            ColoringSet::AllPrefix => (1..n)
                .map(|j| Coloring::prefix(n, j).expect("1 <= j < n"))
                .collect(),
            ColoringSet::Random { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(
                    seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
                );
                (0..count).map(|_| random_coloring(n, &mut rng)).collect()
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            ColoringSet::AllPrefix => "all-j".to_string(),
            ColoringSet::Random { count, seed } => format!("random-jstar:{count} (seed {seed})"),
        }
    }
}

/// A uniformly random colouring with both classes nonempty.
pub fn random_coloring<R: Rng>(n: usize, rng: &mut R) -> Coloring {
    loop {
        let classes: Vec<ColorClass> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    ColorClass::One
                } else {
                    ColorClass::Two
                }
            })
            .collect();
        if let Ok(c) = Coloring::from_classes(classes) {
            return c;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub colorings: ColoringSet,
    pub budget: u64,
    pub deficit: DeficitLength,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig {
            min_n: 2,
            max_n,
            colorings: ColoringSet::AllPrefix,
            budget: DEFAULT_BUDGET,
            deficit: DeficitLength::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Distance,
    PathCount,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub coloring: String,
    pub n: usize,
    pub u: String,
    pub v: String,
    pub check: CheckKind,
    pub formula: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scope: String,
    pub checked: u64,
    pub skipped: u64,
    pub mismatches: Vec<Mismatch>,
    /// Wall time in seconds.
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.mismatches.extend(other.mismatches);
        self
    }
}

/// Runs the sweep on the current rayon pool.
pub fn run_verification(cfg: &VerifyConfig) -> VerificationReport {
    let started = Instant::now();
    let max_n = cfg.max_n.min(MAX_ORACLE_DIMS);
    let mut tally = Tally::default();
    for n in cfg.min_n.max(2)..=max_n {
        for c in cfg.colorings.colorings(n) {
            tally = tally.merge(sweep_coloring(&c, cfg));
        }
    }
    VerificationReport {
        scope: format!(
            "n={}..={}, colorings={}, budget={}, deficit={}",
            cfg.min_n.max(2),
            max_n,
            cfg.colorings.describe(),
            cfg.budget,
            match cfg.deficit {
                DeficitLength::SurplusMinusGamma => "surplus-minus-gamma",
                DeficitLength::HalfDistanceCeil => "half-distance-ceil",
            }
        ),
        checked: tally.checked,
        skipped: tally.skipped,
        mismatches: tally.mismatches,
        elapsed: started.elapsed().as_secs_f64(),
    }
}

/// Runs the sweep on a dedicated pool of `workers` threads.
pub fn run_verification_with_workers(cfg: &VerifyConfig, workers: usize) -> VerificationReport {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| run_verification(cfg)),
        Err(_) => run_verification(cfg),
    }
}

fn sweep_coloring(c: &Coloring, cfg: &VerifyConfig) -> Tally {
    let n = c.dims();
    let g = build_colored_hypercube(n, c).expect("n within oracle range");
    let count = 1u64 << n;
    let label = c.to_string();
    let tallies: Vec<Tally> = (0..count)
        .into_par_iter()
        .map(|ui| {
            let mut tally = Tally::default();
            let u = Vertex::from_index(n, ui).expect("index below 2^n");
            let bfs = oracle_distances_from(&g, ui as usize);
            for vi in 0..count {
                let v = Vertex::from_index(n, vi).expect("index below 2^n");
                tally.checked += 1;
                let mut mismatch = |check, formula: String, oracle: String| {
                    tally.mismatches.push(Mismatch {
                        coloring: label.clone(),
                        n,
                        u: u.to_string(),
                        v: v.to_string(),
                        check,
                        formula,
                        oracle,
                    })
                };
                let profile = pair_profile(&u, &v, c).expect("shared dimension");
                let bfs_pd = bfs[vi as usize];
                if bfs_pd != Some(profile.pd) {
                    mismatch(
                        CheckKind::Distance,
                        profile.pd.to_string(),
                        describe_distance(bfs_pd),
                    );
                }
                let predicted = count_for_profile_with(&profile, cfg.deficit);
                if predicted > cfg.budget {
                    tally.skipped += 1;
                    continue;
                }
                match oracle_count_shortest(&g, ui as usize, vi as usize, cfg.budget) {
                    Ok(found) if found == predicted => {}
                    Ok(found) => mismatch(
                        CheckKind::PathCount,
                        predicted.to_string(),
                        found.to_string(),
                    ),
                    Err(e) => mismatch(
                        CheckKind::PathCount,
                        predicted.to_string(),
                        describe_error(&e),
                    ),
                }
                let limit = cfg.budget.saturating_add(1) as usize;
                let streamed = enumerate_shortest_proper_paths(&u, &v, c)
                    .expect("shared dimension")
                    .take(limit)
                    .count() as u64;
                if predicted != streamed {
                    let shown = if streamed as usize == limit {
                        format!("more than {}", cfg.budget)
                    } else {
                        streamed.to_string()
                    };
                    mismatch(CheckKind::Enumeration, predicted.to_string(), shown);
                }
            }
            tally
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

fn describe_distance(d: Option<usize>) -> String {
    d.map_or_else(|| "unreachable".to_string(), |d| d.to_string())
}

fn describe_error(e: &OracleError) -> String {
    match e {
        OracleError::BudgetExceeded(b) => format!("more than {b}"),
        other => other.to_string(),
    }
}
