//! Shared fixtures and oracles for the integration suites.

#![allow(dead_code)]

use reviewminer::ingest::{Platform, RawCorpus, Review};
use reviewminer::seed::SplitMix64;

pub const FIXTURE_TOPICS: usize = 3;
pub const FIXTURE_VOCAB: usize = 30;
pub const FIXTURE_DOCS: usize = 500;
pub const FIXTURE_TOKENS_PER_DOC: usize = 50;

pub fn fixture_word(index: usize) -> String {
    format!("w{index:02}")
}

/// True topic-word distributions: topic k puts 97% of its mass uniformly on
/// its own 10-word block and spreads the rest over the whole vocabulary.
pub fn true_phi() -> Vec<Vec<f64>> {
    (0..FIXTURE_TOPICS)
        .map(|k| {
            (0..FIXTURE_VOCAB)
                .map(|w| {
                    let mut p = 0.03 / FIXTURE_VOCAB as f64;
                    if w / 10 == k {
                        p += 0.97 / 10.0;
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// Each topic's true top-10 words (its block).
pub fn true_top_words() -> Vec<Vec<String>> {
    (0..FIXTURE_TOPICS)
        .map(|k| (k * 10..(k + 1) * 10).map(fixture_word).collect())
        .collect()
}

fn sample_categorical(rng: &mut SplitMix64, probs: &[f64]) -> usize {
    let mut target = rng.next_f64();
    for (i, &p) in probs.iter().enumerate() {
        target -= p;
        if target <= 0.0 {
            return i;
        }
    }
    probs.len() - 1
}

/// Synthetic review corpus drawn from the known phi and a per-document
/// theta that puts 0.8 on a round-robin dominant topic. Ratings cycle 1..=5
/// so every sentiment class is populated; the explicit language tag keeps
/// the synthetic vocabulary clear of the stop-word heuristic.
pub fn synthetic_corpus(seed: u64, num_docs: usize) -> RawCorpus {
    let phi = true_phi();
    let mut rng = SplitMix64::new(seed);
    let reviews = (0..num_docs)
        .map(|d| {
            let dominant = d % FIXTURE_TOPICS;
            let theta: Vec<f64> = (0..FIXTURE_TOPICS)
                .map(|k| {
                    if k == dominant {
                        0.8
                    } else {
                        0.2 / (FIXTURE_TOPICS - 1) as f64
                    }
                })
                .collect();
            let words: Vec<String> = (0..FIXTURE_TOKENS_PER_DOC)
                .map(|_| {
                    let topic = sample_categorical(&mut rng, &theta);
                    fixture_word(sample_categorical(&mut rng, &phi[topic]))
                })
                .collect();
            Review {
                id: format!("r{d}"),
                app: "demo".into(),
                platform: Platform::Ios,
                rating: (d % 5) as u8 + 1,
                title: None,
                body: words.join(" "),
                date: None,
                language: Some("en".into()),
            }
        })
        .collect();
    RawCorpus {
        reviews,
        source_meta: Default::default(),
    }
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let rx = ranks(xs);
    let ry = ranks(ys);
    let n = xs.len() as f64;
    let mean = (n + 1.0) / 2.0;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        cov += (a - mean) * (b - mean);
        var_x += (a - mean).powi(2);
        var_y += (b - mean).powi(2);
    }
    cov / (var_x.sqrt() * var_y.sqrt())
}

fn ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut out = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            out[idx] = avg;
        }
        i = j + 1;
    }
    out
}

/// Greedily match fitted topics to true topics by descending word overlap;
/// returns the per-pair overlap size for each fitted topic.
pub fn greedy_match_overlaps(fitted: &[Vec<String>], truth: &[Vec<String>]) -> Vec<usize> {
    let overlap = |a: &[String], b: &[String]| a.iter().filter(|w| b.contains(w)).count();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (i, f) in fitted.iter().enumerate() {
        for (j, t) in truth.iter().enumerate() {
            pairs.push((overlap(f, t), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used_fitted = vec![false; fitted.len()];
    let mut used_truth = vec![false; truth.len()];
    let mut out = Vec::new();
    for (score, i, j) in pairs {
        if !used_fitted[i] && !used_truth[j] {
            used_fitted[i] = true;
            used_truth[j] = true;
            out.push(score);
        }
    }
    out
}
