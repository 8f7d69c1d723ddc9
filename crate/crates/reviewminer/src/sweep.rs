//! The (n-gram order x topic count) model grid: fit, score, select.
//!
//! Every grid cell gets its own seed derived from the base seed and its
//! coordinates, and cells fit in parallel; results are collected in grid
//! order, so parallelism never changes the output.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lda::{coherence, lda_fit, perplexity, LdaConfig, LdaModel};
use crate::seed::derive_seed;
use crate::textprep::TokenizedCorpus;

/// Equal-weight combination of perplexity and coherence; larger is better.
pub fn combined_score(perplexity: f64, coherence: f64) -> f64 {
    0.5 * (1.0 - perplexity) + 0.5 * coherence
}

/// One fitted grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub ngram_order: u8,
    pub num_topics: usize,
    pub perplexity: f64,
    pub coherence: f64,
    pub score: f64,
}

/// All grid cells in (order, K) order plus the index of the chosen one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub entries: Vec<SweepEntry>,
    pub best: usize,
}

impl SweepResult {
    pub fn best_entry(&self) -> &SweepEntry {
        &self.entries[self.best]
    }
}

/// Sweep settings; `alpha: None` means the 50/K default per cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub topics_min: usize,
    pub topics_max: usize,
    pub alpha: Option<f64>,
    pub beta: f64,
    pub iterations: u32,
    pub base_seed: u64,
    pub coherence_top_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            topics_min: 5,
            topics_max: 15,
            alpha: None,
            beta: 0.01,
            iterations: 1000,
            base_seed: 42,
            coherence_top_n: 10,
        }
    }
}

impl SweepConfig {
    pub fn lda_config(&self, ngram_order: u8, num_topics: usize) -> LdaConfig {
        let mut cfg = LdaConfig::new(
            num_topics,
            derive_seed(
                self.base_seed,
                "lda-sweep",
                u64::from(ngram_order),
                num_topics as u64,
            ),
        )
        .with_beta(self.beta)
        .with_iterations(self.iterations)
        .with_coherence_top_n(self.coherence_top_n);
        if let Some(alpha) = self.alpha {
            cfg = cfg.with_alpha(alpha);
        }
        cfg
    }
}

/// Fit every (order, K) cell of the grid and pick the best by combined
/// score; ties go to the smaller K, then the lower order. A failing fit
/// aborts the sweep naming the failing configuration.
pub fn sweep(corpora: &BTreeMap<u8, TokenizedCorpus>, cfg: &SweepConfig) -> Result<SweepResult> {
    if corpora.is_empty() {
        return Err(Error::InvalidArg("sweep needs at least one corpus".into()));
    }
    if cfg.topics_min < 2 || cfg.topics_min > cfg.topics_max {
        return Err(Error::InvalidArg(format!(
            "bad topic range {}..={}",
            cfg.topics_min, cfg.topics_max
        )));
    }
    let grid: Vec<(u8, usize)> = corpora
        .keys()
        .flat_map(|&order| (cfg.topics_min..=cfg.topics_max).map(move |k| (order, k)))
        .collect();

    let entries: Vec<SweepEntry> = grid
        .par_iter()
        .map(|&(order, k)| -> Result<SweepEntry> {
            let corpus = &corpora[&order];
            let cell = |e: Error| Error::SweepFit {
                order,
                num_topics: k,
                source: Box::new(e),
            };
            let lda_cfg = cfg.lda_config(order, k);
            let model = lda_fit(corpus, &lda_cfg).map_err(cell)?;
            let p = perplexity(&model, corpus).map_err(cell)?;
            let c = coherence(&model, corpus, cfg.coherence_top_n).map_err(cell)?;
            Ok(SweepEntry {
                ngram_order: order,
                num_topics: k,
                perplexity: p,
                coherence: c,
                score: combined_score(p, c),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let best = select_best(&entries);
    Ok(SweepResult { entries, best })
}

/// Refit the model a sweep selected (same derived seed, so the same model).
pub fn refit_best(
    corpora: &BTreeMap<u8, TokenizedCorpus>,
    cfg: &SweepConfig,
    result: &SweepResult,
) -> Result<LdaModel> {
    let entry = result.best_entry();
    let corpus = &corpora[&entry.ngram_order];
    lda_fit(corpus, &cfg.lda_config(entry.ngram_order, entry.num_topics))
}

fn select_best(entries: &[SweepEntry]) -> usize {
    let mut best = 0;
    for (i, entry) in entries.iter().enumerate().skip(1) {
        let current = &entries[best];
        let better = entry.score > current.score
            || (entry.score == current.score
                && (entry.num_topics < current.num_topics
                    || (entry.num_topics == current.num_topics
                        && entry.ngram_order < current.ngram_order)));
        if better {
            best = i;
        }
    }
    best
}
