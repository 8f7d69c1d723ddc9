//! Word counts and TF-IDF scoring over a tokenized corpus.
//!
//! TF(t,d) = count of t in d / tokens in d, IDF(t) = ln(N / df(t)) with N
//! counting non-empty documents, and the corpus-level importance of a term
//! is the sum of TF-IDF(t,d) over documents.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::textprep::{TokenizedCorpus, Vocabulary};

/// Per-term corpus statistics, indexed densely by token id.
#[derive(Debug, Clone)]
pub struct TermStats {
    /// Total occurrences across the corpus.
    pub count_of: Vec<u64>,
    /// Number of documents containing the term.
    pub df_of: Vec<u32>,
    /// Sum over documents of TF-IDF(t, d); zeroed until [`tfidf`] runs.
    pub tfidf_total_of: Vec<f64>,
}

/// Ranking key for [`top_k`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankBy {
    Count,
    Tfidf,
}

/// Occurrence and document-frequency counts.
pub fn word_counts(corpus: &TokenizedCorpus) -> TermStats {
    let v = corpus.vocab.len();
    let mut count_of = vec![0u64; v];
    let mut df_of = vec![0u32; v];
    for doc in &corpus.docs {
        let mut in_doc: BTreeMap<u32, u32> = BTreeMap::new();
        for &t in doc {
            count_of[t as usize] += 1;
            *in_doc.entry(t).or_insert(0) += 1;
        }
        for &t in in_doc.keys() {
            df_of[t as usize] += 1;
        }
    }
    TermStats {
        count_of,
        df_of,
        tfidf_total_of: vec![0.0; v],
    }
}

/// Full statistics including summed TF-IDF. Empty documents are excluded
/// from N; a term present in every counted document scores exactly zero.
pub fn tfidf(corpus: &TokenizedCorpus) -> Result<TermStats> {
    let mut stats = word_counts(corpus);
    let n = corpus.non_empty_docs();
    if n == 0 {
        return Err(Error::EmptyCorpus(
            "tf-idf needs at least one non-empty document".into(),
        ));
    }
    let n = n as f64;
    for doc in &corpus.docs {
        if doc.is_empty() {
            continue;
        }
        let len = doc.len() as f64;
        let mut in_doc: BTreeMap<u32, u32> = BTreeMap::new();
        for &t in doc {
            *in_doc.entry(t).or_insert(0) += 1;
        }
        // BTreeMap order keeps the floating-point accumulation deterministic.
        for (&t, &count) in &in_doc {
            let tf = f64::from(count) / len;
            let idf = (n / f64::from(stats.df_of[t as usize])).ln();
            stats.tfidf_total_of[t as usize] += tf * idf;
        }
    }
    Ok(stats)
}

/// Top `k` terms by the chosen key, descending, ties broken by ascending
/// token string. Asking for more terms than exist returns them all.
pub fn top_k(
    stats: &TermStats,
    vocab: &Vocabulary,
    k: usize,
    by: RankBy,
) -> Result<Vec<(String, f64)>> {
    if k == 0 {
        return Err(Error::InvalidArg("top_k needs k >= 1".into()));
    }
    let value = |t: usize| -> f64 {
        match by {
            RankBy::Count => stats.count_of[t] as f64,
            RankBy::Tfidf => stats.tfidf_total_of[t],
        }
    };
    let mut order: Vec<u32> = (0..vocab.len() as u32).collect();
    order.sort_by(|&a, &b| {
        value(b as usize)
            .partial_cmp(&value(a as usize))
            .expect("term statistics are finite")
            .then_with(|| vocab.token(a).cmp(vocab.token(b)))
    });
    order.truncate(k);
    Ok(order
        .into_iter()
        .map(|t| (vocab.token(t).to_string(), value(t as usize)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::SplitMix64;
    use crate::textprep::{DocMeta, NGramConfig, TokenizedCorpus};
    use proptest::prelude::*;

    /// Corpus straight from token strings, bypassing the cleaning chain.
    fn corpus_of(docs: &[&[&str]]) -> TokenizedCorpus {
        let mut vocab = Vocabulary::default();
        let id_docs: Vec<Vec<u32>> = docs
            .iter()
            .map(|d| d.iter().map(|t| vocab.intern(t)).collect())
            .collect();
        let doc_meta = (0..docs.len())
            .map(|i| DocMeta {
                review_id: format!("d{i}"),
                rating: 3,
                label: None,
            })
            .collect();
        TokenizedCorpus {
            docs: id_docs,
            vocab,
            ngram: NGramConfig::new(1).unwrap(),
            doc_meta,
        }
    }

    /// Brute-force recount used as the oracle for `word_counts`.
    fn naive_counts(corpus: &TokenizedCorpus) -> (Vec<u64>, Vec<u32>) {
        let v = corpus.vocab.len();
        let mut counts = vec![0u64; v];
        let mut dfs = vec![0u32; v];
        for t in 0..v as u32 {
            for doc in &corpus.docs {
                let occurrences = doc.iter().filter(|&&x| x == t).count() as u64;
                counts[t as usize] += occurrences;
                if occurrences > 0 {
                    dfs[t as usize] += 1;
                }
            }
        }
        (counts, dfs)
    }

    /// Direct per-document evaluation of the TF-IDF formula as the oracle.
    fn naive_tfidf(corpus: &TokenizedCorpus) -> Vec<f64> {
        let v = corpus.vocab.len();
        let n = corpus.docs.iter().filter(|d| !d.is_empty()).count() as f64;
        let (_, dfs) = naive_counts(corpus);
        let mut totals = vec![0.0f64; v];
        for t in 0..v {
            for doc in &corpus.docs {
                if doc.is_empty() {
                    continue;
                }
                let count = doc.iter().filter(|&&x| x == t as u32).count() as f64;
                if count > 0.0 {
                    let tf = count / doc.len() as f64;
                    let idf = (n / f64::from(dfs[t])).ln();
                    totals[t] += tf * idf;
                }
            }
        }
        totals
    }

    fn random_corpus(seed: u64, num_docs: usize) -> TokenizedCorpus {
        let mut rng = SplitMix64::new(seed);
        let words: Vec<String> = (0..25).map(|i| format!("w{i}")).collect();
        let docs: Vec<Vec<&str>> = (0..num_docs)
            .map(|_| {
                let len = rng.below(12);
                (0..len)
                    .map(|_| words[rng.below(words.len())].as_str())
                    .collect()
            })
            .collect();
        let borrowed: Vec<&[&str]> = docs.iter().map(|d| d.as_slice()).collect();
        corpus_of(&borrowed)
    }

    #[test]
    fn hand_counted_example() {
        let corpus = corpus_of(&[&["a", "b", "a"], &["b"]]);
        let stats = word_counts(&corpus);
        let a = corpus.vocab.get("a").unwrap() as usize;
        let b = corpus.vocab.get("b").unwrap() as usize;
        assert_eq!(stats.count_of[a], 2);
        assert_eq!(stats.count_of[b], 2);
        assert_eq!(stats.df_of[a], 1);
        assert_eq!(stats.df_of[b], 2);
    }

    #[test]
    fn single_empty_doc_yields_zero_maps() {
        let corpus = corpus_of(&[&[]]);
        let stats = word_counts(&corpus);
        assert!(stats.count_of.is_empty());
        assert!(stats.df_of.is_empty());
    }

    #[test]
    fn counts_match_naive_recount_on_random_fixture() {
        let corpus = random_corpus(11, 100);
        let stats = word_counts(&corpus);
        let (counts, dfs) = naive_counts(&corpus);
        assert_eq!(stats.count_of, counts);
        assert_eq!(stats.df_of, dfs);
    }

    #[test]
    fn term_in_every_document_scores_zero() {
        let corpus = corpus_of(&[&["x", "a"], &["x", "b"], &["x"]]);
        let stats = tfidf(&corpus).unwrap();
        let x = corpus.vocab.get("x").unwrap() as usize;
        assert_eq!(stats.tfidf_total_of[x], 0.0);
    }

    #[test]
    fn hand_evaluated_tfidf() {
        // TF(a, d1) = 2/3, IDF(a) = ln 2, so TF-IDF(a, d1) = (2/3) ln 2.
        let corpus = corpus_of(&[&["a", "b", "a"], &["c"]]);
        let stats = tfidf(&corpus).unwrap();
        let a = corpus.vocab.get("a").unwrap() as usize;
        let expected = (2.0 / 3.0) * 2f64.ln();
        assert!((stats.tfidf_total_of[a] - expected).abs() < 1e-12);
        assert!((expected - 0.4621).abs() < 5e-5);
    }

    #[test]
    fn tfidf_matches_naive_oracle() {
        let corpus = random_corpus(23, 100);
        let stats = tfidf(&corpus).unwrap();
        let oracle = naive_tfidf(&corpus);
        for (t, (got, want)) in stats.tfidf_total_of.iter().zip(&oracle).enumerate() {
            assert!((got - want).abs() < 1e-9, "term {t}: {got} vs {want}");
        }
    }

    #[test]
    fn empty_corpus_is_fatal_for_tfidf() {
        let corpus = corpus_of(&[&[], &[]]);
        assert!(matches!(tfidf(&corpus), Err(Error::EmptyCorpus(_))));
    }

    #[test]
    fn top_k_tie_breaks_on_token() {
        let corpus = corpus_of(&[&["c", "b", "a", "b"], &["a"]]);
        let stats = word_counts(&corpus);
        let top = top_k(&stats, &corpus.vocab, 2, RankBy::Count).unwrap();
        assert_eq!(top, vec![("a".to_string(), 2.0), ("b".to_string(), 2.0)]);
    }

    #[test]
    fn top_k_rejects_zero() {
        let corpus = corpus_of(&[&["a"]]);
        let stats = word_counts(&corpus);
        assert!(top_k(&stats, &corpus.vocab, 0, RankBy::Count).is_err());
    }

    #[test]
    fn top_k_with_large_k_returns_all() {
        let corpus = corpus_of(&[&["a", "b", "c"]]);
        let stats = word_counts(&corpus);
        let top = top_k(&stats, &corpus.vocab, 99, RankBy::Count).unwrap();
        assert_eq!(top.len(), 3);
    }

    #[test]
    fn top_k_is_prefix_of_full_sort() {
        let corpus = random_corpus(7, 60);
        let stats = tfidf(&corpus).unwrap();
        let full = top_k(&stats, &corpus.vocab, corpus.vocab.len(), RankBy::Tfidf).unwrap();
        for k in 1..corpus.vocab.len() {
            let prefix = top_k(&stats, &corpus.vocab, k, RankBy::Tfidf).unwrap();
            assert_eq!(prefix, full[..k]);
        }
    }

    #[test]
    fn total_count_equals_token_count() {
        let corpus = random_corpus(5, 40);
        let stats = word_counts(&corpus);
        let total: u64 = stats.count_of.iter().sum();
        assert_eq!(total as usize, corpus.total_tokens());
    }

    proptest! {
        #[test]
        fn tf_sums_to_one_per_nonempty_doc(seed in 0u64..500) {
            let corpus = random_corpus(seed, 10);
            for doc in &corpus.docs {
                if doc.is_empty() {
                    continue;
                }
                let len = doc.len() as f64;
                let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
                for &t in doc {
                    *seen.entry(t).or_insert(0) += 1;
                }
                let tf_sum: f64 = seen.values().map(|&c| f64::from(c) / len).sum();
                prop_assert!((tf_sum - 1.0).abs() < 1e-9);
            }
        }

        #[test]
        fn duplicating_docs_doubles_tfidf(seed in 0u64..200) {
            let corpus = random_corpus(seed, 12);
            if corpus.non_empty_docs() == 0 {
                return Ok(());
            }
            let mut doubled = corpus.clone();
            doubled.docs.extend(corpus.docs.clone());
            doubled.doc_meta.extend(corpus.doc_meta.clone());
            let base = tfidf(&corpus).unwrap();
            let twice = tfidf(&doubled).unwrap();
            for t in 0..corpus.vocab.len() {
                prop_assert!(
                    (twice.tfidf_total_of[t] - 2.0 * base.tfidf_total_of[t]).abs() < 1e-9
                );
            }
        }

        #[test]
        fn tfidf_is_nonnegative_and_zero_iff_df_equals_n(seed in 0u64..200) {
            let corpus = random_corpus(seed, 15);
            if corpus.non_empty_docs() == 0 {
                return Ok(());
            }
            let stats = tfidf(&corpus).unwrap();
            let n = corpus.non_empty_docs() as u32;
            for t in 0..corpus.vocab.len() {
                prop_assert!(stats.tfidf_total_of[t] >= 0.0);
                if stats.count_of[t] > 0 {
                    let zero = stats.tfidf_total_of[t] == 0.0;
                    prop_assert_eq!(zero, stats.df_of[t] == n);
                }
            }
        }
    }
}
