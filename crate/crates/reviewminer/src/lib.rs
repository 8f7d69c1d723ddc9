//! Review analytics for app-store corpora.
//!
//! The crate takes a file of raw review records and runs the full analysis
//! chain: ingestion and language filtering, text normalization with stop-word
//! removal, Porter stemming and n-gram tokenization, word-count and TF-IDF
//! statistics, LDA topic modeling with a perplexity/coherence sweep over
//! (n-gram order, topic count) configurations, four sentiment labelers
//! (rating thresholds, two lexicon scorers, multinomial Naive Bayes), and a
//! sentiment-stratified topic re-modeling pass. Every stochastic step draws
//! from a seeded generator, so a run is reproducible bit-for-bit.
//!
//! Use the library modules directly, or drive everything through the
//! `reviewminer` binary (see the `pipeline` module for the orchestrated run).

pub mod config;
pub mod error;
pub mod ingest;
pub mod lda;
pub mod pipeline;
pub mod report;
pub mod seed;
pub mod sentiment;
pub mod stats;
pub mod stem;
pub mod sweep;
pub mod textprep;

pub use error::{Error, Result};
