//! End-to-end orchestration: ingest -> filter -> tokenize -> term stats ->
//! global topic sweep -> sentiment labeling and evaluation -> per-sentiment
//! topic sweeps -> report.
//!
//! A single configured seed fans out deterministically to per-stage seeds,
//! so two runs with the same inputs and config produce byte-identical
//! reports.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ingest::{filter_language, ingest, Format, RawCorpus, RowError};
use crate::lda::top_words;
use crate::report::{
    CorpusSummary, EvaluationBlock, LabelCounts, LabelRow, Report, SentimentSection, SweepSection,
    SweepTable, TermEntry, TopTerms, TopicsSection, TopicsTable, REPORT_SCHEMA_VERSION,
};
use crate::seed::derive_seed;
use crate::sentiment::{
    auto_label, compound_score, compound_to_label, evaluate, nb_fit, nb_predict, polarity_score,
    polarity_to_label, rating_stats, split_by_sentiment, split_train_test, SentimentLabel,
    ValenceLexicon,
};
use crate::stats::{tfidf, top_k, RankBy};
use crate::sweep::{refit_best, sweep, SweepConfig, SweepResult};
use crate::textprep::{
    build_corpus, normalize, tokenize_words, NGramConfig, StopList, TokenizedCorpus,
};

/// Which labeler provides the per-review labels used for stratification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMethod {
    Auto,
    Polarity,
    Compound,
    Nb,
}

impl FromStr for LabelMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(LabelMethod::Auto),
            "polarity" => Ok(LabelMethod::Polarity),
            "compound" => Ok(LabelMethod::Compound),
            "nb" => Ok(LabelMethod::Nb),
            other => Err(format!(
                "unknown method '{other}' (expected auto|polarity|compound|nb)"
            )),
        }
    }
}

impl fmt::Display for LabelMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelMethod::Auto => write!(f, "auto"),
            LabelMethod::Polarity => write!(f, "polarity"),
            LabelMethod::Compound => write!(f, "compound"),
            LabelMethod::Nb => write!(f, "nb"),
        }
    }
}

/// Everything a pipeline run needs. Defaults mirror the CLI defaults.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub input: PathBuf,
    pub format: Format,
    pub output_dir: PathBuf,
    pub stopwords: Option<PathBuf>,
    pub stopword_extensions: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub negators: Option<PathBuf>,
    pub boosters: Option<PathBuf>,
    pub language_threshold: f64,
    pub ngram_orders: Vec<u8>,
    pub topics_min: usize,
    pub topics_max: usize,
    pub alpha: Option<f64>,
    pub beta: f64,
    pub iterations: u32,
    pub method: LabelMethod,
    pub compound_threshold: f64,
    pub split_fraction: f64,
    pub nb_smoothing: f64,
    pub seed: u64,
    pub top_terms: usize,
    pub top_words: usize,
}

impl PipelineConfig {
    pub fn new(input: PathBuf, format: Format, output_dir: PathBuf) -> Self {
        PipelineConfig {
            input,
            format,
            output_dir,
            stopwords: None,
            stopword_extensions: None,
            lexicon: None,
            negators: None,
            boosters: None,
            language_threshold: crate::ingest::DEFAULT_LANGUAGE_THRESHOLD,
            ngram_orders: vec![1, 2, 3],
            topics_min: 5,
            topics_max: 15,
            alpha: None,
            beta: 0.01,
            iterations: 1000,
            method: LabelMethod::Nb,
            compound_threshold: crate::sentiment::DEFAULT_COMPOUND_THRESHOLD,
            split_fraction: 0.8,
            nb_smoothing: 1.0,
            seed: 42,
            top_terms: 10,
            top_words: 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let exists = |path: &PathBuf, what: &str| -> Result<()> {
            if path.exists() {
                Ok(())
            } else {
                Err(Error::InvalidArg(format!(
                    "{what} '{}' does not exist",
                    path.display()
                )))
            }
        };
        exists(&self.input, "input file")?;
        for (path, what) in [
            (&self.stopwords, "stop-word file"),
            (&self.stopword_extensions, "stop-word extension file"),
            (&self.lexicon, "lexicon file"),
            (&self.negators, "negator file"),
            (&self.boosters, "booster file"),
        ] {
            if let Some(p) = path {
                exists(p, what)?;
            }
        }
        if self.ngram_orders.is_empty() {
            return Err(Error::InvalidArg("no n-gram orders configured".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &order in &self.ngram_orders {
            if !(1..=3).contains(&order) {
                return Err(Error::InvalidArg(format!(
                    "n-gram order {order} outside 1..=3"
                )));
            }
            if !seen.insert(order) {
                return Err(Error::InvalidArg(format!("duplicate n-gram order {order}")));
            }
        }
        if self.topics_min < 2 || self.topics_min > self.topics_max {
            return Err(Error::InvalidArg(format!(
                "bad topic range {}..={}",
                self.topics_min, self.topics_max
            )));
        }
        if !(0.0..=1.0).contains(&self.language_threshold) {
            return Err(Error::InvalidArg(format!(
                "language threshold {} outside [0, 1]",
                self.language_threshold
            )));
        }
        let split_ok = self.split_fraction > 0.0 && self.split_fraction < 1.0;
        if !split_ok {
            return Err(Error::InvalidArg(format!(
                "split fraction {} outside (0, 1)",
                self.split_fraction
            )));
        }
        if let Some(alpha) = self.alpha {
            let alpha_ok = alpha.is_finite() && alpha > 0.0;
            if !alpha_ok {
                return Err(Error::InvalidArg(format!(
                    "alpha must be positive, got {alpha}"
                )));
            }
        }
        let beta_ok = self.beta.is_finite() && self.beta > 0.0;
        if !beta_ok {
            return Err(Error::InvalidArg(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        let smoothing_ok = self.nb_smoothing.is_finite() && self.nb_smoothing > 0.0;
        if !smoothing_ok {
            return Err(Error::InvalidArg(format!(
                "naive bayes smoothing must be positive, got {}",
                self.nb_smoothing
            )));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidArg("iterations must be positive".into()));
        }
        if self.top_terms == 0 || self.top_words == 0 {
            return Err(Error::InvalidArg(
                "top-terms and top-words must be at least 1".into(),
            ));
        }
        let threshold_ok = self.compound_threshold.is_finite() && self.compound_threshold >= 0.0;
        if !threshold_ok {
            return Err(Error::InvalidArg(format!(
                "compound threshold must be non-negative, got {}",
                self.compound_threshold
            )));
        }
        Ok(())
    }

    fn sweep_config(&self, stage: &str) -> SweepConfig {
        SweepConfig {
            topics_min: self.topics_min,
            topics_max: self.topics_max,
            alpha: self.alpha,
            beta: self.beta,
            iterations: self.iterations,
            base_seed: derive_seed(self.seed, stage, 0, 0),
            coherence_top_n: self.top_words,
        }
    }
}

/// The report plus the row errors collected while ingesting.
#[derive(Debug)]
pub struct PipelineOutcome {
    pub report: Report,
    pub ingest_errors: Vec<RowError>,
}

fn stage<T>(name: &'static str, result: Result<T>) -> Result<T> {
    result.map_err(|e| Error::Stage {
        stage: name,
        source: Box::new(e),
    })
}

/// Run the whole pipeline and assemble the report.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<PipelineOutcome> {
    cfg.validate()?;
    let mut warnings: Vec<String> = Vec::new();

    let outcome = stage("ingest", ingest(&cfg.input, cfg.format))?;
    let rows_read = outcome.rows_read;
    let malformed = outcome.errors.len();

    let stop = stage(
        "filter",
        StopList::from_files(cfg.stopwords.as_deref(), cfg.stopword_extensions.as_deref()),
    )?;
    let (kept, removed) = filter_language(&outcome.corpus, &stop, cfg.language_threshold);
    if kept.is_empty() {
        return Err(Error::Stage {
            stage: "filter",
            source: Box::new(Error::EmptyCorpus(
                "no reviews left after language filtering".into(),
            )),
        });
    }

    let rating = stage("rating-stats", rating_stats(&kept))?;
    if rating.sd == 0.0 {
        warnings.push("rating standard deviation is 0; every auto label is neutral".to_string());
    }

    let mut corpora: BTreeMap<u8, TokenizedCorpus> = BTreeMap::new();
    for &order in &cfg.ngram_orders {
        let tokenized = stage(
            "tokenize",
            build_corpus(&kept, &stop, NGramConfig::new(order)?),
        )?;
        corpora.insert(order, tokenized);
    }
    let unigram = match corpora.get(&1) {
        Some(c) => c.clone(),
        None => stage("tokenize", build_corpus(&kept, &stop, NGramConfig::new(1)?))?,
    };

    let term_stats = stage("term-stats", tfidf(&unigram))?;
    let top_terms = TopTerms {
        by_count: stage(
            "term-stats",
            top_k(&term_stats, &unigram.vocab, cfg.top_terms, RankBy::Count),
        )?
        .into_iter()
        .map(|(token, value)| TermEntry { token, value })
        .collect(),
        by_tfidf: stage(
            "term-stats",
            top_k(&term_stats, &unigram.vocab, cfg.top_terms, RankBy::Tfidf),
        )?
        .into_iter()
        .map(|(token, value)| TermEntry { token, value })
        .collect(),
    };

    for (&order, corpus) in &corpora {
        if corpus.non_empty_docs() < cfg.topics_max {
            warnings.push(format!(
                "order-{order} corpus has {} non-empty docs, fewer than {} topics",
                corpus.non_empty_docs(),
                cfg.topics_max
            ));
        }
    }
    let global_sweep_cfg = cfg.sweep_config("stage:sweep-global");
    let global_sweep = stage("sweep-global", sweep(&corpora, &global_sweep_cfg))?;
    let global_topics = stage(
        "topics-global",
        topics_table(
            &corpora,
            &global_sweep_cfg,
            &global_sweep,
            cfg.top_words,
            false,
        ),
    )?;

    let auto_labels: Vec<SentimentLabel> = kept
        .reviews
        .iter()
        .map(|r| auto_label(r.rating, &rating))
        .collect();

    let labeling = stage(
        "classify",
        label_with_method(cfg, &kept, &unigram, &auto_labels, &mut warnings),
    )?;

    let disagreements = auto_labels
        .iter()
        .zip(&labeling.labels)
        .filter(|(a, m)| a != m)
        .count();

    let (neg, neu, pos) = stage(
        "split-sentiment",
        split_by_sentiment(&kept, &labeling.labels),
    )?;

    let neg_result = stage(
        "sweep-negative",
        subset_sweep(cfg, "negative", &neg, &stop, false, &mut warnings),
    )?;
    let pos_result = stage(
        "sweep-positive",
        subset_sweep(cfg, "positive", &pos, &stop, false, &mut warnings),
    )?;
    let neu_result = stage(
        "sweep-neutral",
        subset_sweep(cfg, "neutral", &neu, &stop, true, &mut warnings),
    )?;

    let labels: Vec<LabelRow> = kept
        .reviews
        .iter()
        .zip(auto_labels.iter().zip(&labeling.labels))
        .map(|(review, (&auto, &method))| LabelRow {
            id: review.id.clone(),
            rating: review.rating,
            auto_label: auto,
            method_label: method,
        })
        .collect();

    let report = Report {
        schema_version: REPORT_SCHEMA_VERSION.into(),
        corpus: CorpusSummary {
            input_path: cfg.input.display().to_string(),
            format: match cfg.format {
                Format::Csv => "csv".into(),
                Format::Jsonl => "jsonl".into(),
            },
            rows_read,
            malformed_rows: malformed,
            ingested: rows_read - malformed,
            removed_non_english: removed,
            analyzed: kept.len(),
            rating_mean: rating.mean,
            rating_sd: rating.sd,
        },
        top_terms,
        sweeps: SweepSection {
            global: SweepTable::from_result(&global_sweep),
            negative: neg_result.as_ref().map(|(table, _)| table.clone()),
            positive: pos_result.as_ref().map(|(table, _)| table.clone()),
            neutral: neu_result.as_ref().map(|(table, _)| table.clone()),
        },
        topics: TopicsSection {
            global: Some(global_topics),
            negative: neg_result.map(|(_, topics)| topics),
            positive: pos_result.map(|(_, topics)| topics),
            neutral: neu_result.map(|(_, topics)| topics),
        },
        sentiment: SentimentSection {
            method: cfg.method.to_string(),
            auto_counts: LabelCounts::tally(&auto_labels),
            predicted_counts: LabelCounts::tally(&labeling.labels),
            train_size: labeling.train_size,
            test_size: labeling.test_size,
            evaluation: labeling.evaluation,
            disagreements_with_auto: disagreements,
        },
        labels,
        warnings,
    };
    Ok(PipelineOutcome {
        report,
        ingest_errors: outcome.errors,
    })
}

struct Labeling {
    labels: Vec<SentimentLabel>,
    evaluation: Option<EvaluationBlock>,
    train_size: Option<usize>,
    test_size: Option<usize>,
}

fn label_with_method(
    cfg: &PipelineConfig,
    kept: &RawCorpus,
    unigram: &TokenizedCorpus,
    auto_labels: &[SentimentLabel],
    warnings: &mut Vec<String>,
) -> Result<Labeling> {
    match cfg.method {
        LabelMethod::Auto => Ok(Labeling {
            labels: auto_labels.to_vec(),
            evaluation: None,
            train_size: None,
            test_size: None,
        }),
        LabelMethod::Polarity | LabelMethod::Compound => {
            let lexicon = ValenceLexicon::from_files(
                cfg.lexicon.as_deref(),
                cfg.negators.as_deref(),
                cfg.boosters.as_deref(),
            )?;
            let labels: Vec<SentimentLabel> = kept
                .reviews
                .iter()
                .map(|review| {
                    let tokens = tokenize_words(&normalize(&review.text()));
                    match cfg.method {
                        LabelMethod::Polarity => {
                            polarity_to_label(polarity_score(&tokens, &lexicon))
                        }
                        _ => compound_to_label(
                            compound_score(&tokens, &lexicon),
                            cfg.compound_threshold,
                        ),
                    }
                })
                .collect();
            let eval = evaluate(&labels, auto_labels)?;
            Ok(Labeling {
                labels,
                evaluation: Some(EvaluationBlock {
                    accuracy: eval.accuracy,
                    confusion: eval.confusion,
                    evaluated_on: "full_corpus".into(),
                }),
                train_size: None,
                test_size: None,
            })
        }
        LabelMethod::Nb => {
            let mut labeled = unigram.clone();
            for (meta, &label) in labeled.doc_meta.iter_mut().zip(auto_labels) {
                meta.label = Some(label);
            }
            let split = split_train_test(
                &labeled,
                cfg.split_fraction,
                derive_seed(cfg.seed, "stage:nb-split", 0, 0),
            )?;
            let model = nb_fit(&split.train, cfg.nb_smoothing)?;
            for label in SentimentLabel::ALL {
                if !model.present[label.index()] {
                    warnings.push(format!(
                        "class '{label}' absent from naive bayes training split"
                    ));
                }
            }
            let predicted_test: Vec<SentimentLabel> = split
                .test
                .docs
                .iter()
                .map(|doc| nb_predict(&model, doc).0)
                .collect();
            let actual_test: Vec<SentimentLabel> = split
                .test
                .doc_meta
                .iter()
                .map(|m| m.label.expect("labeled above"))
                .collect();
            let eval = evaluate(&predicted_test, &actual_test)?;
            let labels: Vec<SentimentLabel> = labeled
                .docs
                .iter()
                .map(|doc| nb_predict(&model, doc).0)
                .collect();
            Ok(Labeling {
                labels,
                evaluation: Some(EvaluationBlock {
                    accuracy: eval.accuracy,
                    confusion: eval.confusion,
                    evaluated_on: "test_split".into(),
                }),
                train_size: Some(split.train.num_docs()),
                test_size: Some(split.test.num_docs()),
            })
        }
    }
}

fn topics_table(
    corpora: &BTreeMap<u8, TokenizedCorpus>,
    sweep_cfg: &SweepConfig,
    result: &SweepResult,
    top_n: usize,
    excluded: bool,
) -> Result<TopicsTable> {
    let entry = result.best_entry();
    let corpus = &corpora[&entry.ngram_order];
    let model = refit_best(corpora, sweep_cfg, result)?;
    let summary = top_words(&model, &corpus.vocab, top_n)?;
    Ok(TopicsTable {
        ngram_order: entry.ngram_order,
        num_topics: entry.num_topics,
        excluded_from_interpretation: excluded,
        topics: summary
            .topics
            .into_iter()
            .map(|topic| {
                topic
                    .into_iter()
                    .map(|(token, value)| TermEntry { token, value })
                    .collect()
            })
            .collect(),
    })
}

/// Sweep one sentiment subset. Empty subsets (and orders that clean down to
/// nothing) are skipped with a warning instead of failing the run.
fn subset_sweep(
    cfg: &PipelineConfig,
    name: &str,
    subset: &RawCorpus,
    stop: &StopList,
    excluded: bool,
    warnings: &mut Vec<String>,
) -> Result<Option<(SweepTable, TopicsTable)>> {
    if subset.is_empty() {
        warnings.push(format!("{name} subset is empty; sweep skipped"));
        return Ok(None);
    }
    let mut corpora: BTreeMap<u8, TokenizedCorpus> = BTreeMap::new();
    for &order in &cfg.ngram_orders {
        match build_corpus(subset, stop, NGramConfig::new(order)?) {
            Ok(c) => {
                corpora.insert(order, c);
            }
            Err(Error::EmptyCorpus(_)) => warnings.push(format!(
                "{name} subset has no order-{order} terms; order skipped"
            )),
            Err(e) => return Err(e),
        }
    }
    if corpora.is_empty() {
        warnings.push(format!(
            "{name} subset cleans down to nothing at every order; sweep skipped"
        ));
        return Ok(None);
    }
    for (&order, corpus) in &corpora {
        if corpus.non_empty_docs() < cfg.topics_max {
            warnings.push(format!(
                "{name} order-{order} corpus has {} non-empty docs, fewer than {} topics",
                corpus.non_empty_docs(),
                cfg.topics_max
            ));
        }
    }
    let sweep_cfg = cfg.sweep_config(&format!("stage:sweep-{name}"));
    let result = sweep(&corpora, &sweep_cfg)?;
    let topics = topics_table(&corpora, &sweep_cfg, &result, cfg.top_words, excluded)?;
    Ok(Some((SweepTable::from_result(&result), topics)))
}
