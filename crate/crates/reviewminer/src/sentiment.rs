//! Three-way sentiment labeling, four ways.
//!
//! * rating thresholds against the corpus mean +/- one standard deviation
//!   (the auto labels that stand in for ground truth),
//! * polarity scoring with a valence lexicon and the thirds rule,
//! * compound scoring with the +/-0.05 threshold rule,
//! * a multinomial Naive Bayes classifier trained on the auto labels.
//!
//! Lexicon scoring runs on normalized but unstemmed tokens, since valence
//! lexicons key on surface forms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::RawCorpus;
use crate::seed::SplitMix64;
use crate::textprep::{parse_word_list, TokenizedCorpus};

const DEFAULT_LEXICON: &str = include_str!("../data/lexicon.tsv");
const DEFAULT_NEGATORS: &str = include_str!("../data/negators.txt");
const DEFAULT_BOOSTERS: &str = include_str!("../data/boosters.tsv");

/// Compound-score labeling threshold ("works best" default).
pub const DEFAULT_COMPOUND_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
#[serde(rename_all = "lowercase")]
pub enum SentimentLabel {
    Negative,
    Neutral,
    Positive,
}

impl SentimentLabel {
    pub const ALL: [SentimentLabel; 3] = [
        SentimentLabel::Negative,
        SentimentLabel::Neutral,
        SentimentLabel::Positive,
    ];

    pub fn index(self) -> usize {
        match self {
            SentimentLabel::Negative => 0,
            SentimentLabel::Neutral => 1,
            SentimentLabel::Positive => 2,
        }
    }
}

impl fmt::Display for SentimentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SentimentLabel::Negative => write!(f, "negative"),
            SentimentLabel::Neutral => write!(f, "neutral"),
            SentimentLabel::Positive => write!(f, "positive"),
        }
    }
}

impl FromStr for SentimentLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "negative" => Ok(SentimentLabel::Negative),
            "neutral" => Ok(SentimentLabel::Neutral),
            "positive" => Ok(SentimentLabel::Positive),
            other => Err(format!("unknown label '{other}'")),
        }
    }
}

/// Mean and population standard deviation of star ratings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatingStats {
    pub mean: f64,
    pub sd: f64,
}

/// Welford's online mean/variance over the corpus ratings.
pub fn rating_stats(corpus: &RawCorpus) -> Result<RatingStats> {
    if corpus.len() < 2 {
        return Err(Error::InvalidArg(format!(
            "rating statistics need at least 2 reviews, got {}",
            corpus.len()
        )));
    }
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for (i, review) in corpus.reviews.iter().enumerate() {
        let x = f64::from(review.rating);
        let delta = x - mean;
        mean += delta / (i as f64 + 1.0);
        m2 += delta * (x - mean);
    }
    let sd = (m2 / corpus.len() as f64).sqrt();
    Ok(RatingStats { mean, sd })
}

/// Label a rating against mean +/- one standard deviation, boundaries
/// inclusive. When sd is zero a rating equal to the mean satisfies both
/// inclusive bounds at once and is neutral (the degenerate all-equal case).
pub fn auto_label(rating: u8, stats: &RatingStats) -> SentimentLabel {
    let r = f64::from(rating);
    let positive = r >= stats.mean + stats.sd;
    let negative = r <= stats.mean - stats.sd;
    match (positive, negative) {
        (true, false) => SentimentLabel::Positive,
        (false, true) => SentimentLabel::Negative,
        _ => SentimentLabel::Neutral,
    }
}

/// Token valences in [-4, +4] plus negator and booster word lists.
#[derive(Debug, Clone)]
pub struct ValenceLexicon {
    valence_of: BTreeMap<String, f64>,
    negators: BTreeSet<String>,
    boosters: BTreeMap<String, f64>,
}

impl ValenceLexicon {
    /// The lexicon shipped with the crate.
    pub fn builtin() -> Self {
        ValenceLexicon {
            valence_of: parse_valences(DEFAULT_LEXICON, "<builtin lexicon>")
                .expect("builtin lexicon is valid"),
            negators: parse_word_list(DEFAULT_NEGATORS, "<builtin negators>")
                .expect("builtin negators are valid"),
            boosters: parse_boosters(DEFAULT_BOOSTERS, "<builtin boosters>")
                .expect("builtin boosters are valid"),
        }
    }

    /// Load from files; `None` keeps the corresponding built-in table.
    pub fn from_files(
        lexicon: Option<&Path>,
        negators: Option<&Path>,
        boosters: Option<&Path>,
    ) -> Result<Self> {
        let mut lex = ValenceLexicon::builtin();
        if let Some(path) = lexicon {
            lex.valence_of = parse_valences(&read(path)?, &path.display().to_string())?;
        }
        if let Some(path) = negators {
            lex.negators = parse_word_list(&read(path)?, &path.display().to_string())?;
        }
        if let Some(path) = boosters {
            lex.boosters = parse_boosters(&read(path)?, &path.display().to_string())?;
        }
        Ok(lex)
    }

    pub fn valence(&self, token: &str) -> Option<f64> {
        self.valence_of.get(token).copied()
    }

    pub fn len(&self) -> usize {
        self.valence_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valence_of.is_empty()
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn parse_tsv_line(raw: &str) -> Option<(&str, &str)> {
    let line = raw.trim_end();
    if line.trim().is_empty() || line.trim_start().starts_with('#') {
        return None;
    }
    line.split_once('\t')
}

fn parse_valences(text: &str, origin: &str) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let Some((token, value)) = parse_tsv_line(raw) else {
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            return Err(Error::InvalidArg(format!(
                "{origin}, line {}: expected token<TAB>valence",
                idx + 1
            )));
        };
        let valence: f64 = value.trim().parse().map_err(|_| {
            Error::InvalidArg(format!("{origin}, line {}: bad valence '{value}'", idx + 1))
        })?;
        if !valence.is_finite() || !(-4.0..=4.0).contains(&valence) {
            return Err(Error::InvalidArg(format!(
                "{origin}, line {}: valence {valence} outside [-4, 4]",
                idx + 1
            )));
        }
        map.insert(token.trim().to_lowercase(), valence);
    }
    Ok(map)
}

fn parse_boosters(text: &str, origin: &str) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let Some((token, value)) = parse_tsv_line(raw) else {
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            return Err(Error::InvalidArg(format!(
                "{origin}, line {}: expected token<TAB>increment",
                idx + 1
            )));
        };
        let increment: f64 = value.trim().parse().map_err(|_| {
            Error::InvalidArg(format!(
                "{origin}, line {}: bad increment '{value}'",
                idx + 1
            ))
        })?;
        if !increment.is_finite() {
            return Err(Error::InvalidArg(format!(
                "{origin}, line {}: increment must be finite",
                idx + 1
            )));
        }
        map.insert(token.trim().to_lowercase(), increment);
    }
    Ok(map)
}

/// Walk the tokens and yield each sentiment-bearing token's adjusted
/// valence: a pending booster increment widens the magnitude, a pending
/// negator flips the sign. Pending state survives non-bearing tokens and
/// clears once consumed.
fn adjusted_valences(tokens: &[String], lex: &ValenceLexicon) -> Vec<f64> {
    let mut out = Vec::new();
    let mut negate = false;
    let mut boost = 0.0;
    for token in tokens {
        if lex.negators.contains(token.as_str()) {
            negate = !negate;
            continue;
        }
        if let Some(&increment) = lex.boosters.get(token.as_str()) {
            boost += increment;
            continue;
        }
        if let Some(&valence) = lex.valence_of.get(token.as_str()) {
            let mut v = if valence < 0.0 {
                valence - boost
            } else {
                valence + boost
            };
            if negate {
                v = -v;
            }
            out.push(v);
            negate = false;
            boost = 0.0;
        }
    }
    out
}

/// Mean adjusted valence rescaled to [-1, 1] by dividing by 4. Tokens
/// absent from the lexicon contribute nothing; no hits yields 0.
pub fn polarity_score(tokens: &[String], lex: &ValenceLexicon) -> f64 {
    let hits = adjusted_valences(tokens, lex);
    if hits.is_empty() {
        return 0.0;
    }
    let mean = hits.iter().sum::<f64>() / hits.len() as f64;
    (mean / 4.0).clamp(-1.0, 1.0)
}

/// Thirds rule, boundaries inclusive.
pub fn polarity_to_label(score: f64) -> SentimentLabel {
    if score <= -1.0 / 3.0 {
        SentimentLabel::Negative
    } else if score >= 1.0 / 3.0 {
        SentimentLabel::Positive
    } else {
        SentimentLabel::Neutral
    }
}

/// Sum of adjusted valences normalized into [-1, 1] as s / sqrt(s^2 + 15).
pub fn compound_score(tokens: &[String], lex: &ValenceLexicon) -> f64 {
    let s: f64 = adjusted_valences(tokens, lex).iter().sum();
    if s == 0.0 {
        return 0.0;
    }
    s / (s * s + 15.0).sqrt()
}

/// Threshold rule with strict inequalities: the boundaries themselves are
/// neutral.
pub fn compound_to_label(compound: f64, threshold: f64) -> SentimentLabel {
    if compound < -threshold {
        SentimentLabel::Negative
    } else if compound > threshold {
        SentimentLabel::Positive
    } else {
        SentimentLabel::Neutral
    }
}

/// A seeded shuffle-and-split of a labeled corpus, with label counts
/// (negative, neutral, positive) for both halves.
#[derive(Debug, Clone)]
pub struct TrainTestSplit {
    pub train: TokenizedCorpus,
    pub test: TokenizedCorpus,
    pub train_label_counts: [usize; 3],
    pub test_label_counts: [usize; 3],
}

/// Shuffle the documents with a seeded generator and split at
/// floor(n * fraction). Deterministic given the seed.
pub fn split_train_test(
    corpus: &TokenizedCorpus,
    fraction: f64,
    seed: u64,
) -> Result<TrainTestSplit> {
    let fraction_ok = fraction > 0.0 && fraction < 1.0;
    if !fraction_ok {
        return Err(Error::InvalidArg(format!(
            "split fraction {fraction} outside (0, 1)"
        )));
    }
    let n = corpus.num_docs();
    let train_n = (n as f64 * fraction) as usize;
    if train_n == 0 || train_n == n {
        return Err(Error::InvalidArg(format!(
            "split of {n} docs at {fraction} leaves one side empty"
        )));
    }
    let mut indices: Vec<usize> = (0..n).collect();
    SplitMix64::new(seed).shuffle(&mut indices);
    let train = corpus.subset(&indices[..train_n]);
    let test = corpus.subset(&indices[train_n..]);
    let counts = |c: &TokenizedCorpus| {
        let mut out = [0usize; 3];
        for meta in &c.doc_meta {
            if let Some(label) = meta.label {
                out[label.index()] += 1;
            }
        }
        out
    };
    let train_label_counts = counts(&train);
    let test_label_counts = counts(&test);
    Ok(TrainTestSplit {
        train,
        test,
        train_label_counts,
        test_label_counts,
    })
}

/// Trained multinomial Naive Bayes parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NbModel {
    /// ln P(class); negative infinity for classes absent from training.
    pub class_log_prior: [f64; 3],
    /// ln P(token | class), one row per label over the training vocabulary.
    pub token_log_likelihood: Vec<Vec<f64>>,
    /// Additive smoothing used for the likelihoods.
    pub smoothing: f64,
    /// Which classes were present in training.
    pub present: [bool; 3],
}

impl NbModel {
    pub fn vocab_size(&self) -> usize {
        self.token_log_likelihood[0].len()
    }
}

/// Fit class priors and smoothed token likelihoods from a labeled unigram
/// corpus. Classes absent from training are omitted from the model.
pub fn nb_fit(train: &TokenizedCorpus, smoothing: f64) -> Result<NbModel> {
    if train.num_docs() == 0 {
        return Err(Error::EmptyCorpus(
            "naive bayes training set is empty".into(),
        ));
    }
    if train.ngram.order() != 1 {
        return Err(Error::InvalidArg(format!(
            "naive bayes expects a unigram corpus, got order {}",
            train.ngram.order()
        )));
    }
    let smoothing_ok = smoothing.is_finite() && smoothing > 0.0;
    if !smoothing_ok {
        return Err(Error::InvalidArg(format!(
            "smoothing must be positive, got {smoothing}"
        )));
    }
    let v = train.vocab.len();
    if v == 0 {
        return Err(Error::EmptyCorpus("training vocabulary is empty".into()));
    }
    let mut doc_counts = [0usize; 3];
    let mut token_counts = vec![vec![0u64; v]; 3];
    let mut token_totals = [0u64; 3];
    for (doc, meta) in train.docs.iter().zip(&train.doc_meta) {
        let Some(label) = meta.label else {
            return Err(Error::InvalidArg(format!(
                "training document '{}' has no label",
                meta.review_id
            )));
        };
        let c = label.index();
        doc_counts[c] += 1;
        for &t in doc {
            token_counts[c][t as usize] += 1;
            token_totals[c] += 1;
        }
    }
    let total_docs = train.num_docs() as f64;
    let mut class_log_prior = [f64::NEG_INFINITY; 3];
    let mut present = [false; 3];
    let mut token_log_likelihood = vec![vec![f64::NEG_INFINITY; v]; 3];
    for c in 0..3 {
        if doc_counts[c] == 0 {
            continue;
        }
        present[c] = true;
        class_log_prior[c] = (doc_counts[c] as f64 / total_docs).ln();
        let denom = token_totals[c] as f64 + smoothing * v as f64;
        for t in 0..v {
            token_log_likelihood[c][t] = ((token_counts[c][t] as f64 + smoothing) / denom).ln();
        }
    }
    Ok(NbModel {
        class_log_prior,
        token_log_likelihood,
        smoothing,
        present,
    })
}

/// Predict a document's label and return the normalized per-class log
/// posteriors. Tokens outside the training vocabulary are ignored; ties go
/// to the more negative label.
pub fn nb_predict(model: &NbModel, doc: &[u32]) -> (SentimentLabel, [f64; 3]) {
    let v = model.vocab_size();
    let mut scores = [f64::NEG_INFINITY; 3];
    for (c, score) in scores.iter_mut().enumerate() {
        if !model.present[c] {
            continue;
        }
        let mut s = model.class_log_prior[c];
        for &t in doc {
            if (t as usize) < v {
                s += model.token_log_likelihood[c][t as usize];
            }
        }
        *score = s;
    }
    let mut best = SentimentLabel::Negative;
    let mut best_score = f64::NEG_INFINITY;
    for label in SentimentLabel::ALL {
        let s = scores[label.index()];
        if model.present[label.index()] && s > best_score {
            best = label;
            best_score = s;
        }
    }
    // Log-sum-exp normalization over present classes.
    let max = best_score;
    let mut z = 0.0;
    for (&score, &present) in scores.iter().zip(&model.present) {
        if present {
            z += (score - max).exp();
        }
    }
    let log_z = max + z.ln();
    let mut posteriors = [f64::NEG_INFINITY; 3];
    for ((posterior, &score), &present) in posteriors.iter_mut().zip(&scores).zip(&model.present) {
        if present {
            *posterior = score - log_z;
        }
    }
    (best, posteriors)
}

/// Accuracy plus a 3x3 confusion matrix, rows = actual, columns = predicted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub accuracy: f64,
    pub confusion: [[usize; 3]; 3],
}

pub fn evaluate(predicted: &[SentimentLabel], actual: &[SentimentLabel]) -> Result<Evaluation> {
    if predicted.len() != actual.len() {
        return Err(Error::InvalidArg(format!(
            "label list lengths differ: {} predicted vs {} actual",
            predicted.len(),
            actual.len()
        )));
    }
    if predicted.is_empty() {
        return Err(Error::InvalidArg(
            "cannot evaluate empty label lists".into(),
        ));
    }
    let mut confusion = [[0usize; 3]; 3];
    for (&p, &a) in predicted.iter().zip(actual) {
        confusion[a.index()][p.index()] += 1;
    }
    let trace: usize = (0..3).map(|i| confusion[i][i]).sum();
    Ok(Evaluation {
        accuracy: trace as f64 / predicted.len() as f64,
        confusion,
    })
}

/// Partition a corpus by label, preserving within-class order. Returns
/// (negative, neutral, positive).
pub fn split_by_sentiment(
    corpus: &RawCorpus,
    labels: &[SentimentLabel],
) -> Result<(RawCorpus, RawCorpus, RawCorpus)> {
    if corpus.len() != labels.len() {
        return Err(Error::InvalidArg(format!(
            "corpus has {} reviews but {} labels were given",
            corpus.len(),
            labels.len()
        )));
    }
    let mut parts = [Vec::new(), Vec::new(), Vec::new()];
    for (review, label) in corpus.reviews.iter().zip(labels) {
        parts[label.index()].push(review.clone());
    }
    let [neg, neu, pos] = parts;
    let wrap = |reviews: Vec<_>, name: &str| {
        let mut meta = corpus.source_meta.clone();
        meta.insert("sentiment_subset".into(), name.into());
        RawCorpus {
            reviews,
            source_meta: meta,
        }
    };
    Ok((
        wrap(neg, "negative"),
        wrap(neu, "neutral"),
        wrap(pos, "positive"),
    ))
}
