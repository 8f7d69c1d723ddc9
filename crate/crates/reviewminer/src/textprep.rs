//! Text normalization and n-gram tokenization over an interned vocabulary.
//!
//! The cleaning chain applied to each review is:
//! normalize -> tokenize -> remove stop words -> stem -> n-grams -> intern.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::RawCorpus;
use crate::sentiment::SentimentLabel;
use crate::stem::stem;

const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords_en.txt");
const DEFAULT_DOMAIN_EXTENSIONS: &str = include_str!("../data/stopwords_domain.txt");

/// Stop words: a standard English list plus domain-specific extensions.
/// The effective list is the union of both sets.
#[derive(Debug, Clone, Default)]
pub struct StopList {
    tokens: BTreeSet<String>,
    domain_extensions: BTreeSet<String>,
}

impl StopList {
    /// The built-in English list with the built-in domain extensions.
    pub fn english() -> Self {
        StopList {
            tokens: parse_word_list(DEFAULT_STOPWORDS, "<builtin stopwords>")
                .expect("builtin stop list is valid"),
            domain_extensions: parse_word_list(DEFAULT_DOMAIN_EXTENSIONS, "<builtin extensions>")
                .expect("builtin extension list is valid"),
        }
    }

    /// Load from files; `None` falls back to the corresponding built-in list.
    pub fn from_files(stopwords: Option<&Path>, extensions: Option<&Path>) -> Result<Self> {
        let mut list = StopList::english();
        if let Some(path) = stopwords {
            list.tokens = parse_word_list(&read_file(path)?, &path.display().to_string())?;
        }
        if let Some(path) = extensions {
            list.domain_extensions =
                parse_word_list(&read_file(path)?, &path.display().to_string())?;
        }
        Ok(list)
    }

    pub fn with_extensions<I: IntoIterator<Item = String>>(mut self, extra: I) -> Self {
        self.domain_extensions
            .extend(extra.into_iter().map(|t| t.to_lowercase()));
        self
    }

    pub fn contains(&self, token: &str) -> bool {
        self.tokens.contains(token) || self.domain_extensions.contains(token)
    }

    pub fn len(&self) -> usize {
        self.tokens.len() + self.domain_extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty() && self.domain_extensions.is_empty()
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// One token per line, `#` comments and blank lines ignored. Entries are
/// lowercased; internal whitespace is rejected.
pub(crate) fn parse_word_list(text: &str, origin: &str) -> Result<BTreeSet<String>> {
    let mut set = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.chars().any(char::is_whitespace) {
            return Err(Error::InvalidArg(format!(
                "{origin}, line {}: stop-word entry '{line}' contains whitespace",
                idx + 1
            )));
        }
        set.insert(line.to_lowercase());
    }
    Ok(set)
}

/// N-gram order, restricted to 1..=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NGramConfig {
    order: u8,
}

impl NGramConfig {
    pub fn new(order: u8) -> Result<Self> {
        if (1..=3).contains(&order) {
            Ok(NGramConfig { order })
        } else {
            Err(Error::InvalidArg(format!(
                "n-gram order {order} outside 1..=3"
            )))
        }
    }

    pub fn order(&self) -> u8 {
        self.order
    }
}

/// Bijective token <-> id mapping with ids dense in 0..V, assigned in
/// first-occurrence order.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Vocabulary {
    id_of: HashMap<String, u32>,
    token_of: Vec<String>,
}

impl Vocabulary {
    pub fn intern(&mut self, token: &str) -> u32 {
        if let Some(&id) = self.id_of.get(token) {
            return id;
        }
        let id = self.token_of.len() as u32;
        self.id_of.insert(token.to_string(), id);
        self.token_of.push(token.to_string());
        id
    }

    pub fn get(&self, token: &str) -> Option<u32> {
        self.id_of.get(token).copied()
    }

    pub fn token(&self, id: u32) -> &str {
        &self.token_of[id as usize]
    }

    pub fn len(&self) -> usize {
        self.token_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.token_of.is_empty()
    }
}

/// Per-document bookkeeping carried alongside the token sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocMeta {
    pub review_id: String,
    pub rating: u8,
    pub label: Option<SentimentLabel>,
}

/// Documents as token-id sequences over a shared vocabulary. Documents that
/// clean down to nothing stay in place as empty sequences so indices keep
/// lining up with the raw corpus; model fitting skips them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TokenizedCorpus {
    pub docs: Vec<Vec<u32>>,
    pub vocab: Vocabulary,
    pub ngram: NGramConfig,
    pub doc_meta: Vec<DocMeta>,
}

impl TokenizedCorpus {
    pub fn num_docs(&self) -> usize {
        self.docs.len()
    }

    pub fn non_empty_docs(&self) -> usize {
        self.docs.iter().filter(|d| !d.is_empty()).count()
    }

    pub fn total_tokens(&self) -> usize {
        self.docs.iter().map(Vec::len).sum()
    }

    /// New corpus containing the selected documents (same vocabulary).
    pub fn subset(&self, indices: &[usize]) -> TokenizedCorpus {
        TokenizedCorpus {
            docs: indices.iter().map(|&i| self.docs[i].clone()).collect(),
            vocab: self.vocab.clone(),
            ngram: self.ngram,
            doc_meta: indices.iter().map(|&i| self.doc_meta[i].clone()).collect(),
        }
    }
}

/// Lowercase, replace everything that is not a letter, digit or internal
/// apostrophe with a space, collapse runs of whitespace, trim. Typographic
/// apostrophes are folded to `'` so "can’t" and "can't" intern identically.
pub fn normalize(text: &str) -> String {
    let lowered = text.to_lowercase();
    let chars: Vec<char> = lowered
        .chars()
        .map(|c| if c == '\u{2019}' { '\'' } else { c })
        .collect();
    let mut out = String::with_capacity(lowered.len());
    let mut last_space = true;
    for (i, &c) in chars.iter().enumerate() {
        let keep = c.is_alphanumeric()
            || (c == '\''
                && i > 0
                && i + 1 < chars.len()
                && chars[i - 1].is_alphanumeric()
                && chars[i + 1].is_alphanumeric());
        if keep {
            out.push(c);
            last_space = false;
        } else if !last_space {
            out.push(' ');
            last_space = true;
        }
    }
    if out.ends_with(' ') {
        out.pop();
    }
    out
}

/// Split normalized text on spaces. Empty tokens cannot occur.
pub fn tokenize_words(text: &str) -> Vec<String> {
    text.split_whitespace().map(str::to_string).collect()
}

/// Order-preserving removal of tokens in the effective stop list.
pub fn remove_stopwords(tokens: Vec<String>, stop: &StopList) -> Vec<String> {
    tokens.into_iter().filter(|t| !stop.contains(t)).collect()
}

/// Contiguous windows of `order` tokens joined with `_`. Returns an empty
/// list when fewer than `order` tokens are available.
pub fn build_ngrams(tokens: &[String], cfg: NGramConfig) -> Vec<String> {
    let order = cfg.order() as usize;
    if tokens.len() < order {
        return Vec::new();
    }
    tokens.windows(order).map(|w| w.join("_")).collect()
}

/// Clean one review's text into its n-gram terms.
fn review_ngrams(text: &str, stop: &StopList, cfg: NGramConfig) -> Vec<String> {
    let tokens = tokenize_words(&normalize(text));
    let kept = remove_stopwords(tokens, stop);
    let stemmed: Vec<String> = kept.iter().map(|t| stem(t)).collect();
    build_ngrams(&stemmed, cfg)
}

/// Run the full cleaning chain over a corpus and intern the result.
///
/// Per-document cleaning runs in parallel; interning is a sequential pass in
/// document order, so vocabulary ids are first-occurrence-deterministic
/// regardless of worker count.
pub fn build_corpus(raw: &RawCorpus, stop: &StopList, cfg: NGramConfig) -> Result<TokenizedCorpus> {
    if raw.is_empty() {
        return Err(Error::EmptyCorpus("no reviews to tokenize".into()));
    }
    let grams: Vec<Vec<String>> = raw
        .reviews
        .par_iter()
        .map(|r| review_ngrams(&r.text(), stop, cfg))
        .collect();

    let mut vocab = Vocabulary::default();
    let mut docs = Vec::with_capacity(grams.len());
    for doc_grams in &grams {
        docs.push(doc_grams.iter().map(|g| vocab.intern(g)).collect());
    }
    if docs.iter().all(|d: &Vec<u32>| d.is_empty()) {
        return Err(Error::EmptyCorpus(format!(
            "all {} documents are empty after cleaning at n-gram order {}",
            docs.len(),
            cfg.order()
        )));
    }
    let doc_meta = raw
        .reviews
        .iter()
        .map(|r| DocMeta {
            review_id: r.id.clone(),
            rating: r.rating,
            label: None,
        })
        .collect();
    Ok(TokenizedCorpus {
        docs,
        vocab,
        ngram: cfg,
        doc_meta,
    })
}

/// Debugging dump: one `{id, tokens}` object per document.
pub fn dump_tokens(corpus: &TokenizedCorpus, mut writer: impl Write) -> Result<()> {
    #[derive(Serialize)]
    struct Line<'a> {
        id: &'a str,
        tokens: Vec<&'a str>,
    }
    for (doc, meta) in corpus.docs.iter().zip(&corpus.doc_meta) {
        let line = Line {
            id: &meta.review_id,
            tokens: doc.iter().map(|&t| corpus.vocab.token(t)).collect(),
        };
        serde_json::to_writer(&mut writer, &line)?;
        writer
            .write_all(b"\n")
            .map_err(|e| Error::io("<writer>", e))?;
    }
    Ok(())
}
