//! Parsing, validation and language filtering of raw review records.
//!
//! Reviews arrive as CSV (RFC-4180, header required) or JSONL (one object
//! per line) with the fields `id, app, platform, rating, title, body, date,
//! language`. Malformed rows are never dropped silently: each one produces a
//! [`RowError`] naming the line and field, so corpus sizes stay auditable.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::textprep::{normalize, tokenize_words, StopList};

/// Review platform of origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Platform {
    Ios,
    Google,
}

impl FromStr for Platform {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ios" => Ok(Platform::Ios),
            "google" => Ok(Platform::Google),
            other => Err(format!("unknown platform '{other}' (expected ios|google)")),
        }
    }
}

impl fmt::Display for Platform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Platform::Ios => write!(f, "ios"),
            Platform::Google => write!(f, "google"),
        }
    }
}

/// One raw review record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Review {
    pub id: String,
    pub app: String,
    pub platform: Platform,
    /// Star rating, 1..=5.
    pub rating: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub body: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub date: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
}

impl Review {
    /// Title and body concatenated; all downstream text analysis runs on this.
    pub fn text(&self) -> String {
        match &self.title {
            Some(title) => format!("{title} {}", self.body),
            None => self.body.clone(),
        }
    }
}

/// An ordered collection of validated reviews.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RawCorpus {
    pub reviews: Vec<Review>,
    pub source_meta: BTreeMap<String, String>,
}

impl RawCorpus {
    pub fn len(&self) -> usize {
        self.reviews.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reviews.is_empty()
    }
}

/// A malformed input row: 1-based line number, offending field, and message.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowError {
    pub line: u64,
    pub field: String,
    pub message: String,
}

/// Input file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "jsonl" => Ok(Format::Jsonl),
            other => Err(format!("unknown format '{other}' (expected csv|jsonl)")),
        }
    }
}

/// Result of ingesting a file: the valid corpus, the per-row errors, and the
/// number of data rows read.
#[derive(Debug)]
pub struct IngestOutcome {
    pub corpus: RawCorpus,
    pub errors: Vec<RowError>,
    pub rows_read: usize,
}

const REQUIRED_COLUMNS: [&str; 5] = ["id", "app", "platform", "rating", "body"];
const OPTIONAL_COLUMNS: [&str; 3] = ["title", "date", "language"];

/// Parse and validate a review file. Unreadable files are fatal; malformed
/// rows are collected into `errors` and excluded from the corpus.
pub fn ingest(path: &Path, format: Format) -> Result<IngestOutcome> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut outcome = match format {
        Format::Csv => ingest_csv(path, file)?,
        Format::Jsonl => ingest_jsonl(path, file)?,
    };
    outcome
        .corpus
        .source_meta
        .insert("path".into(), path.display().to_string());
    outcome.corpus.source_meta.insert(
        "format".into(),
        match format {
            Format::Csv => "csv".into(),
            Format::Jsonl => "jsonl".into(),
        },
    );
    outcome
        .corpus
        .source_meta
        .insert("rows_read".into(), outcome.rows_read.to_string());
    Ok(outcome)
}

fn ingest_csv(path: &Path, file: File) -> Result<IngestOutcome> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(BufReader::new(file));

    let headers = reader.headers()?.clone();
    let index_of = |name: &str| headers.iter().position(|h| h == name);
    let mut required = Vec::new();
    for column in REQUIRED_COLUMNS {
        match index_of(column) {
            Some(i) => required.push(i),
            None => {
                return Err(Error::MissingColumn {
                    path: path.to_path_buf(),
                    column,
                })
            }
        }
    }
    let [id_i, app_i, platform_i, rating_i, body_i] = required[..] else {
        unreachable!("required column count is fixed")
    };
    let optional: Vec<Option<usize>> = OPTIONAL_COLUMNS.iter().map(|c| index_of(c)).collect();
    let (title_i, date_i, language_i) = (optional[0], optional[1], optional[2]);

    let mut reviews = Vec::new();
    let mut errors = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut rows_read = 0usize;

    for record in reader.records() {
        rows_read += 1;
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                let line = e
                    .position()
                    .map(|p| p.line())
                    .unwrap_or(rows_read as u64 + 1);
                errors.push(RowError {
                    line,
                    field: "row".into(),
                    message: format!("unparseable csv record: {e}"),
                });
                continue;
            }
        };
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(rows_read as u64 + 1);
        let get = |i: usize| record.get(i).unwrap_or("").to_string();
        let get_opt = |i: Option<usize>| {
            i.and_then(|i| record.get(i))
                .filter(|s| !s.is_empty())
                .map(str::to_string)
        };
        match validate_row(
            line,
            get(id_i),
            get(app_i),
            &get(platform_i),
            &get(rating_i),
            get_opt(title_i),
            get(body_i),
            get_opt(date_i),
            get_opt(language_i),
            &mut seen_ids,
        ) {
            Ok(review) => reviews.push(review),
            Err(err) => errors.push(err),
        }
    }

    Ok(IngestOutcome {
        corpus: RawCorpus {
            reviews,
            source_meta: BTreeMap::new(),
        },
        errors,
        rows_read,
    })
}

fn ingest_jsonl(path: &Path, file: File) -> Result<IngestOutcome> {
    let reader = BufReader::new(file);
    let mut reviews = Vec::new();
    let mut errors = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut rows_read = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx as u64 + 1;
        let text = line.map_err(|e| Error::io(path, e))?;
        if text.trim().is_empty() {
            continue;
        }
        rows_read += 1;
        let value: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => {
                errors.push(RowError {
                    line: line_no,
                    field: "row".into(),
                    message: format!("invalid json: {e}"),
                });
                continue;
            }
        };
        let Some(obj) = value.as_object() else {
            errors.push(RowError {
                line: line_no,
                field: "row".into(),
                message: "expected a json object".into(),
            });
            continue;
        };
        let string_field = |name: &str| -> Option<String> {
            obj.get(name).and_then(|v| v.as_str()).map(str::to_string)
        };
        let rating_text = match obj.get("rating") {
            Some(serde_json::Value::Number(n)) => n.to_string(),
            Some(other) => other.to_string(),
            None => String::new(),
        };
        match validate_row(
            line_no,
            string_field("id").unwrap_or_default(),
            string_field("app").unwrap_or_default(),
            &string_field("platform").unwrap_or_default(),
            &rating_text,
            string_field("title").filter(|s| !s.is_empty()),
            string_field("body").unwrap_or_default(),
            string_field("date").filter(|s| !s.is_empty()),
            string_field("language").filter(|s| !s.is_empty()),
            &mut seen_ids,
        ) {
            Ok(review) => reviews.push(review),
            Err(err) => errors.push(err),
        }
    }

    Ok(IngestOutcome {
        corpus: RawCorpus {
            reviews,
            source_meta: BTreeMap::new(),
        },
        errors,
        rows_read,
    })
}

#[allow(clippy::too_many_arguments)]
fn validate_row(
    line: u64,
    id: String,
    app: String,
    platform: &str,
    rating: &str,
    title: Option<String>,
    body: String,
    date: Option<String>,
    language: Option<String>,
    seen_ids: &mut HashSet<String>,
) -> std::result::Result<Review, RowError> {
    let fail = |field: &str, message: String| RowError {
        line,
        field: field.into(),
        message,
    };
    if id.is_empty() {
        return Err(fail("id", "missing or empty id".into()));
    }
    if !seen_ids.insert(id.clone()) {
        return Err(fail("id", format!("duplicate id '{id}'")));
    }
    if app.is_empty() {
        return Err(fail("app", "missing or empty app".into()));
    }
    let platform: Platform = platform.parse().map_err(|e: String| fail("platform", e))?;
    let rating: i64 = rating
        .parse()
        .map_err(|_| fail("rating", format!("rating '{rating}' is not an integer")))?;
    if !(1..=5).contains(&rating) {
        return Err(fail("rating", format!("rating {rating} outside 1..5")));
    }
    if body.trim().is_empty() {
        return Err(fail("body", "body empty after whitespace trim".into()));
    }
    Ok(Review {
        id,
        app,
        platform,
        rating: rating as u8,
        title,
        body,
        date,
        language,
    })
}

/// Write a corpus back out as JSONL with the ingestion field names.
pub fn write_jsonl(corpus: &RawCorpus, mut writer: impl Write) -> Result<()> {
    for review in &corpus.reviews {
        serde_json::to_writer(&mut writer, review)?;
        writer
            .write_all(b"\n")
            .map_err(|e| Error::io("<writer>", e))?;
    }
    Ok(())
}

/// Write a corpus back out as CSV with the full ingestion header.
pub fn write_csv(corpus: &RawCorpus, writer: impl Write) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record([
        "id", "app", "platform", "rating", "title", "body", "date", "language",
    ])?;
    for r in &corpus.reviews {
        out.write_record([
            r.id.as_str(),
            r.app.as_str(),
            &r.platform.to_string(),
            &r.rating.to_string(),
            r.title.as_deref().unwrap_or(""),
            r.body.as_str(),
            r.date.as_deref().unwrap_or(""),
            r.language.as_deref().unwrap_or(""),
        ])?;
    }
    out.flush().map_err(|e| Error::io("<writer>", e))?;
    Ok(())
}

/// Write row errors as JSONL, one `{line, field, message}` object per line.
pub fn write_error_report(errors: &[RowError], mut writer: impl Write) -> Result<()> {
    for err in errors {
        serde_json::to_writer(&mut writer, err)?;
        writer
            .write_all(b"\n")
            .map_err(|e| Error::io("<writer>", e))?;
    }
    Ok(())
}

/// Keep reviews that look English: an explicit `language` tag starting with
/// "en" always wins; otherwise the fraction of tokens found in the stop list
/// must reach `threshold` (default 0.15). Returns the kept corpus and the
/// number of removed reviews.
pub fn filter_language(corpus: &RawCorpus, stop: &StopList, threshold: f64) -> (RawCorpus, usize) {
    let mut kept = Vec::new();
    let mut removed = 0usize;
    for review in &corpus.reviews {
        if is_english(review, stop, threshold) {
            kept.push(review.clone());
        } else {
            removed += 1;
        }
    }
    (
        RawCorpus {
            reviews: kept,
            source_meta: corpus.source_meta.clone(),
        },
        removed,
    )
}

fn is_english(review: &Review, stop: &StopList, threshold: f64) -> bool {
    if let Some(tag) = &review.language {
        return tag.to_ascii_lowercase().starts_with("en");
    }
    let tokens = tokenize_words(&normalize(&review.text()));
    let ratio = if tokens.is_empty() {
        0.0
    } else {
        let hits = tokens.iter().filter(|t| stop.contains(t)).count();
        hits as f64 / tokens.len() as f64
    };
    ratio >= threshold
}

/// Default threshold for [`filter_language`].
pub const DEFAULT_LANGUAGE_THRESHOLD: f64 = 0.15;
