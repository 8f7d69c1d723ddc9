//! The pipeline's result surface: a versioned JSON report plus TSV/CSV views.
//!
//! Serialization is canonical (fixed field order, no maps with unstable
//! iteration), so identical runs emit byte-identical files.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentiment::SentimentLabel;
use crate::sweep::SweepResult;

pub const REPORT_SCHEMA_VERSION: &str = "reviewminer-report/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub corpus: CorpusSummary,
    pub top_terms: TopTerms,
    pub sweeps: SweepSection,
    pub topics: TopicsSection,
    pub sentiment: SentimentSection,
    pub labels: Vec<LabelRow>,
    pub warnings: Vec<String>,
}

/// Ingestion and filtering counts. `rows_read = malformed + removed + analyzed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub input_path: String,
    pub format: String,
    pub rows_read: usize,
    pub malformed_rows: usize,
    pub ingested: usize,
    pub removed_non_english: usize,
    pub analyzed: usize,
    pub rating_mean: f64,
    pub rating_sd: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermEntry {
    pub token: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopTerms {
    pub by_count: Vec<TermEntry>,
    pub by_tfidf: Vec<TermEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub ngram_order: u8,
    pub num_topics: usize,
    pub perplexity: f64,
    pub coherence: f64,
    pub score: f64,
    pub chosen: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub entries: Vec<SweepRow>,
    pub best_ngram_order: u8,
    pub best_num_topics: usize,
}

impl SweepTable {
    pub fn from_result(result: &SweepResult) -> Self {
        let best = result.best_entry();
        SweepTable {
            entries: result
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| SweepRow {
                    ngram_order: e.ngram_order,
                    num_topics: e.num_topics,
                    perplexity: e.perplexity,
                    coherence: e.coherence,
                    score: e.score,
                    chosen: i == result.best,
                })
                .collect(),
            best_ngram_order: best.ngram_order,
            best_num_topics: best.num_topics,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSection {
    pub global: SweepTable,
    pub negative: Option<SweepTable>,
    pub positive: Option<SweepTable>,
    pub neutral: Option<SweepTable>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicsTable {
    pub ngram_order: u8,
    pub num_topics: usize,
    pub excluded_from_interpretation: bool,
    pub topics: Vec<Vec<TermEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicsSection {
    pub global: Option<TopicsTable>,
    pub negative: Option<TopicsTable>,
    pub positive: Option<TopicsTable>,
    pub neutral: Option<TopicsTable>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCounts {
    pub negative: usize,
    pub neutral: usize,
    pub positive: usize,
}

impl LabelCounts {
    pub fn tally(labels: &[SentimentLabel]) -> Self {
        let mut counts = [0usize; 3];
        for label in labels {
            counts[label.index()] += 1;
        }
        LabelCounts {
            negative: counts[0],
            neutral: counts[1],
            positive: counts[2],
        }
    }

    pub fn total(&self) -> usize {
        self.negative + self.neutral + self.positive
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationBlock {
    pub accuracy: f64,
    /// Rows = actual, columns = predicted, label order neg/neu/pos.
    pub confusion: [[usize; 3]; 3],
    /// What the evaluation ran on: "test_split" or "full_corpus".
    pub evaluated_on: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentSection {
    pub method: String,
    pub auto_counts: LabelCounts,
    pub predicted_counts: LabelCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub train_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<EvaluationBlock>,
    pub disagreements_with_auto: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelRow {
    pub id: String,
    pub rating: u8,
    pub auto_label: SentimentLabel,
    pub method_label: SentimentLabel,
}

impl Report {
    pub fn to_json_bytes(&self) -> Result<Vec<u8>> {
        let mut bytes = serde_json::to_vec_pretty(self)?;
        bytes.push(b'\n');
        Ok(bytes)
    }

    pub fn from_json_bytes(bytes: &[u8]) -> Result<Report> {
        let report: Report = serde_json::from_slice(bytes)?;
        if report.schema_version != REPORT_SCHEMA_VERSION {
            return Err(Error::InvalidArg(format!(
                "unsupported report schema '{}', expected '{}'",
                report.schema_version, REPORT_SCHEMA_VERSION
            )));
        }
        Ok(report)
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).map_err(|e| Error::io(path, e))?,
    ))
}

fn finish(mut w: BufWriter<File>, path: &Path) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))
}

/// Write the report and its TSV/CSV views into `dir`:
/// `report.json`, `top_terms.tsv`, `sweep_{global,neg,pos,neu}.tsv`,
/// `topics_{global,neg,pos,neu}.tsv`, `labels.csv`.
pub fn emit_report(report: &Report, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    let mut track = |p: PathBuf| -> PathBuf {
        written.push(p.clone());
        p
    };

    let json_path = track(dir.join("report.json"));
    std::fs::write(&json_path, report.to_json_bytes()?).map_err(|e| Error::io(&json_path, e))?;

    let terms_path = track(dir.join("top_terms.tsv"));
    let mut w = create(&terms_path)?;
    writeln!(w, "by\trank\ttoken\tvalue").map_err(|e| Error::io(&terms_path, e))?;
    for (by, entries) in [
        ("count", &report.top_terms.by_count),
        ("tfidf", &report.top_terms.by_tfidf),
    ] {
        for (i, entry) in entries.iter().enumerate() {
            writeln!(w, "{by}\t{}\t{}\t{}", i + 1, entry.token, entry.value)
                .map_err(|e| Error::io(&terms_path, e))?;
        }
    }
    finish(w, &terms_path)?;

    let sweep_files = [
        ("sweep_global.tsv", Some(&report.sweeps.global)),
        ("sweep_neg.tsv", report.sweeps.negative.as_ref()),
        ("sweep_pos.tsv", report.sweeps.positive.as_ref()),
        ("sweep_neu.tsv", report.sweeps.neutral.as_ref()),
    ];
    for (name, table) in sweep_files {
        let path = track(dir.join(name));
        let mut w = create(&path)?;
        writeln!(
            w,
            "ngram_order\tnum_topics\tperplexity\tcoherence\tscore\tchosen"
        )
        .map_err(|e| Error::io(&path, e))?;
        if let Some(table) = table {
            for row in &table.entries {
                writeln!(
                    w,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    row.ngram_order,
                    row.num_topics,
                    row.perplexity,
                    row.coherence,
                    row.score,
                    row.chosen
                )
                .map_err(|e| Error::io(&path, e))?;
            }
        }
        finish(w, &path)?;
    }

    let topic_files = [
        ("topics_global.tsv", report.topics.global.as_ref()),
        ("topics_neg.tsv", report.topics.negative.as_ref()),
        ("topics_pos.tsv", report.topics.positive.as_ref()),
        ("topics_neu.tsv", report.topics.neutral.as_ref()),
    ];
    for (name, table) in topic_files {
        let path = track(dir.join(name));
        let mut w = create(&path)?;
        writeln!(w, "topic\trank\ttoken\tprobability").map_err(|e| Error::io(&path, e))?;
        if let Some(table) = table {
            for (topic_idx, terms) in table.topics.iter().enumerate() {
                for (rank, entry) in terms.iter().enumerate() {
                    writeln!(
                        w,
                        "{}\t{}\t{}\t{}",
                        topic_idx + 1,
                        rank + 1,
                        entry.token,
                        entry.value
                    )
                    .map_err(|e| Error::io(&path, e))?;
                }
            }
        }
        finish(w, &path)?;
    }

    let labels_path = track(dir.join("labels.csv"));
    let mut csv_writer = csv::Writer::from_writer(create(&labels_path)?);
    csv_writer.write_record(["id", "rating", "auto_label", "method_label"])?;
    for row in &report.labels {
        csv_writer.write_record([
            row.id.as_str(),
            &row.rating.to_string(),
            &row.auto_label.to_string(),
            &row.method_label.to_string(),
        ])?;
    }
    csv_writer.flush().map_err(|e| Error::io(&labels_path, e))?;

    Ok(written)
}
