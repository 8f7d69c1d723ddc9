//! Latent Dirichlet Allocation by collapsed Gibbs sampling, with training
//! perplexity and UMass coherence for model comparison.
//!
//! The sampler resamples every token's topic for a fixed number of full
//! sweeps from a seeded generator: with the token's own assignment removed,
//! P(z = k) is proportional to
//! (doc_topic[d][k] + alpha) * (topic_word[k][w] + beta) / (topic_total[k] + V*beta).
//! Single-threaded and bit-deterministic for a given (corpus, config).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::SplitMix64;
use crate::textprep::{TokenizedCorpus, Vocabulary};

/// Sampler settings. Defaults: symmetric alpha = 50/K, beta = 0.01,
/// 1000 sweeps, 10 coherence words.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LdaConfig {
    pub num_topics: usize,
    pub alpha: f64,
    pub beta: f64,
    pub iterations: u32,
    pub seed: u64,
    pub coherence_top_n: usize,
}

impl LdaConfig {
    pub fn new(num_topics: usize, seed: u64) -> Self {
        LdaConfig {
            num_topics,
            alpha: 50.0 / num_topics as f64,
            beta: 0.01,
            iterations: 1000,
            seed,
            coherence_top_n: 10,
        }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    pub fn with_iterations(mut self, iterations: u32) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_coherence_top_n(mut self, top_n: usize) -> Self {
        self.coherence_top_n = top_n;
        self
    }
}

/// Count state of a fitted model.
///
/// Counts are stored flat: `word_topic` is word-major (`[w*K + k]`) so the
/// sampler's inner loop over topics stays on one cache line, `doc_topic` is
/// `[d*K + k]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LdaModel {
    num_topics: usize,
    vocab_size: usize,
    word_topic: Vec<u32>,
    doc_topic: Vec<u32>,
    topic_totals: Vec<u64>,
    assignments: Vec<Vec<u32>>,
    doc_lens: Vec<u32>,
    pub config: LdaConfig,
}

impl LdaModel {
    pub fn num_topics(&self) -> usize {
        self.num_topics
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    pub fn num_docs(&self) -> usize {
        self.doc_lens.len()
    }

    pub fn topic_word_count(&self, k: usize, w: usize) -> u32 {
        self.word_topic[w * self.num_topics + k]
    }

    pub fn doc_topic_count(&self, d: usize, k: usize) -> u32 {
        self.doc_topic[d * self.num_topics + k]
    }

    pub fn topic_total(&self, k: usize) -> u64 {
        self.topic_totals[k]
    }

    pub fn assignments(&self) -> &[Vec<u32>] {
        &self.assignments
    }

    /// Smoothed topic-word probability (count + beta) / (total + V*beta).
    pub fn phi(&self, k: usize, w: usize) -> f64 {
        (f64::from(self.topic_word_count(k, w)) + self.config.beta)
            / (self.topic_totals[k] as f64 + self.vocab_size as f64 * self.config.beta)
    }

    /// Smoothed document-topic probability (count + alpha) / (len + K*alpha).
    pub fn theta(&self, d: usize, k: usize) -> f64 {
        (f64::from(self.doc_topic_count(d, k)) + self.config.alpha)
            / (f64::from(self.doc_lens[d]) + self.num_topics as f64 * self.config.alpha)
    }

    pub fn phi_row(&self, k: usize) -> Vec<f64> {
        (0..self.vocab_size).map(|w| self.phi(k, w)).collect()
    }

    pub fn theta_row(&self, d: usize) -> Vec<f64> {
        (0..self.num_topics).map(|k| self.theta(d, k)).collect()
    }

    /// Count bookkeeping: topic totals match word-topic sums, document rows
    /// sum to document lengths, assignments are in range.
    pub fn counts_consistent(&self) -> bool {
        let k = self.num_topics;
        let mut totals = vec![0u64; k];
        for word_row in self.word_topic.chunks_exact(k) {
            for (total, &count) in totals.iter_mut().zip(word_row) {
                *total += u64::from(count);
            }
        }
        if totals != self.topic_totals {
            return false;
        }
        for (d, &len) in self.doc_lens.iter().enumerate() {
            let row_sum: u64 = (0..k).map(|t| u64::from(self.doc_topic[d * k + t])).sum();
            if row_sum != u64::from(len) {
                return false;
            }
        }
        self.assignments.iter().flatten().all(|&z| (z as usize) < k)
    }
}

/// Fit a model with collapsed Gibbs sampling.
pub fn lda_fit(corpus: &TokenizedCorpus, cfg: &LdaConfig) -> Result<LdaModel> {
    let k = cfg.num_topics;
    if k < 2 {
        return Err(Error::InvalidArg(format!(
            "need at least 2 topics, got {k}"
        )));
    }
    let priors_ok =
        cfg.alpha.is_finite() && cfg.alpha > 0.0 && cfg.beta.is_finite() && cfg.beta > 0.0;
    if !priors_ok {
        return Err(Error::InvalidArg(format!(
            "alpha and beta must be positive (alpha={}, beta={})",
            cfg.alpha, cfg.beta
        )));
    }
    if cfg.iterations == 0 {
        return Err(Error::InvalidArg("iterations must be positive".into()));
    }
    let v = corpus.vocab.len();
    if v == 0 || corpus.total_tokens() == 0 {
        return Err(Error::EmptyCorpus(
            "cannot fit topics on a corpus with no tokens".into(),
        ));
    }

    let mut rng = SplitMix64::new(cfg.seed);
    let mut model = LdaModel {
        num_topics: k,
        vocab_size: v,
        word_topic: vec![0u32; v * k],
        doc_topic: vec![0u32; corpus.num_docs() * k],
        topic_totals: vec![0u64; k],
        assignments: corpus.docs.iter().map(|d| vec![0u32; d.len()]).collect(),
        doc_lens: corpus.docs.iter().map(|d| d.len() as u32).collect(),
        config: *cfg,
    };

    // Uniform random initialization.
    for (d, doc) in corpus.docs.iter().enumerate() {
        for (i, &w) in doc.iter().enumerate() {
            let t = rng.below(k);
            model.assignments[d][i] = t as u32;
            model.word_topic[w as usize * k + t] += 1;
            model.doc_topic[d * k + t] += 1;
            model.topic_totals[t] += 1;
        }
    }
    debug_assert!(model.counts_consistent());

    let mut weights = vec![0.0f64; k];
    for _ in 0..cfg.iterations {
        gibbs_sweep(&mut model, corpus, &mut rng, &mut weights);
        debug_assert!(model.counts_consistent());
    }
    Ok(model)
}

fn gibbs_sweep(
    model: &mut LdaModel,
    corpus: &TokenizedCorpus,
    rng: &mut SplitMix64,
    weights: &mut [f64],
) {
    let k = model.num_topics;
    let alpha = model.config.alpha;
    let beta = model.config.beta;
    let vbeta = model.vocab_size as f64 * beta;

    for (d, doc) in corpus.docs.iter().enumerate() {
        let doc_base = d * k;
        for (i, &w) in doc.iter().enumerate() {
            let word_base = w as usize * k;
            let old = model.assignments[d][i] as usize;
            model.word_topic[word_base + old] -= 1;
            model.doc_topic[doc_base + old] -= 1;
            model.topic_totals[old] -= 1;

            let mut total = 0.0;
            for (t, slot) in weights.iter_mut().enumerate() {
                let weight = (f64::from(model.doc_topic[doc_base + t]) + alpha)
                    * (f64::from(model.word_topic[word_base + t]) + beta)
                    / (model.topic_totals[t] as f64 + vbeta);
                *slot = weight;
                total += weight;
            }
            let mut target = rng.next_f64() * total;
            let mut new = k - 1;
            for (t, &weight) in weights.iter().enumerate() {
                target -= weight;
                if target <= 0.0 {
                    new = t;
                    break;
                }
            }

            model.word_topic[word_base + new] += 1;
            model.doc_topic[doc_base + new] += 1;
            model.topic_totals[new] += 1;
            model.assignments[d][i] = new as u32;
        }
    }
}

/// Training perplexity: exp of the negative mean per-token log-likelihood,
/// with P(w|d) = sum_k theta[d][k] * phi[k][w] and N counting tokens of
/// non-empty documents.
pub fn perplexity(model: &LdaModel, corpus: &TokenizedCorpus) -> Result<f64> {
    if corpus.num_docs() != model.num_docs() {
        return Err(Error::InvalidArg(format!(
            "corpus has {} docs but the model was fit on {}",
            corpus.num_docs(),
            model.num_docs()
        )));
    }
    let k = model.num_topics;
    let v = model.vocab_size;
    let beta = model.config.beta;
    let vbeta = v as f64 * beta;
    let mut sum_log = 0.0;
    let mut tokens = 0u64;
    for (d, doc) in corpus.docs.iter().enumerate() {
        if doc.is_empty() {
            continue;
        }
        // theta[d][k] / (total[k] + V beta), hoisted out of the token loop.
        let scaled: Vec<f64> = (0..k)
            .map(|t| model.theta(d, t) / (model.topic_totals[t] as f64 + vbeta))
            .collect();
        for &w in doc {
            if w as usize >= v {
                return Err(Error::UnknownToken {
                    token_id: w,
                    vocab_size: v,
                });
            }
            let word_base = w as usize * k;
            let mut p = 0.0;
            for (t, &s) in scaled.iter().enumerate() {
                p += s * (f64::from(model.word_topic[word_base + t]) + beta);
            }
            sum_log += p.ln();
            tokens += 1;
        }
    }
    if tokens == 0 {
        return Err(Error::EmptyCorpus("no tokens to evaluate".into()));
    }
    Ok((-sum_log / tokens as f64).exp())
}

/// Token ids of each topic's top terms: descending phi, ties broken by
/// ascending token string.
fn top_term_ids(model: &LdaModel, vocab: &Vocabulary, n: usize) -> Vec<Vec<u32>> {
    let v = model.vocab_size;
    let n = n.min(v);
    (0..model.num_topics)
        .map(|k| {
            let mut order: Vec<u32> = (0..v as u32).collect();
            order.sort_by(|&a, &b| {
                model
                    .topic_word_count(k, b as usize)
                    .cmp(&model.topic_word_count(k, a as usize))
                    .then_with(|| vocab.token(a).cmp(vocab.token(b)))
            });
            order.truncate(n);
            order
        })
        .collect()
}

/// UMass coherence averaged over topics and unordered top-word pairs:
/// ln((D(w_i, w_j) + 1) / D(w_j)) with w_j the higher-ranked word, document
/// counts taken from the evaluation corpus.
pub fn coherence(model: &LdaModel, corpus: &TokenizedCorpus, top_n: usize) -> Result<f64> {
    if top_n < 2 {
        return Err(Error::InvalidArg(format!(
            "coherence needs at least 2 top words, got {top_n}"
        )));
    }
    let tops = top_term_ids(model, &corpus.vocab, top_n);

    // Per-word document bitsets, restricted to the words we score.
    let needed: std::collections::BTreeSet<u32> = tops.iter().flatten().copied().collect();
    let blocks = corpus.num_docs().div_ceil(64);
    let mut doc_bits: std::collections::HashMap<u32, Vec<u64>> =
        needed.iter().map(|&w| (w, vec![0u64; blocks])).collect();
    for (d, doc) in corpus.docs.iter().enumerate() {
        for &w in doc {
            if let Some(bits) = doc_bits.get_mut(&w) {
                bits[d / 64] |= 1u64 << (d % 64);
            }
        }
    }
    let df = |w: u32| -> u64 { doc_bits[&w].iter().map(|b| b.count_ones() as u64).sum() };
    let joint = |a: u32, b: u32| -> u64 {
        doc_bits[&a]
            .iter()
            .zip(&doc_bits[&b])
            .map(|(x, y)| (x & y).count_ones() as u64)
            .sum()
    };

    let mut topic_sum = 0.0;
    for words in &tops {
        if words.len() < 2 {
            continue;
        }
        let mut pair_sum = 0.0;
        let mut pairs = 0u64;
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                let higher = words[i];
                let lower = words[j];
                let d_higher = df(higher);
                if d_higher == 0 {
                    return Err(Error::InvalidArg(format!(
                        "top word '{}' never occurs in the evaluation corpus",
                        corpus.vocab.token(higher)
                    )));
                }
                pair_sum += ((joint(higher, lower) + 1) as f64 / d_higher as f64).ln();
                pairs += 1;
            }
        }
        topic_sum += pair_sum / pairs as f64;
    }
    Ok(topic_sum / model.num_topics as f64)
}

pub const MODEL_SCHEMA_VERSION: &str = "reviewminer-lda-model/1";

#[derive(Serialize, Deserialize)]
struct ModelDump {
    schema_version: String,
    model: LdaModel,
}

/// Persist the model state (counts, assignments, config) as versioned JSON.
pub fn save_model(model: &LdaModel, path: &std::path::Path) -> Result<()> {
    let dump = ModelDump {
        schema_version: MODEL_SCHEMA_VERSION.into(),
        model: model.clone(),
    };
    let mut bytes = serde_json::to_vec(&dump)?;
    bytes.push(b'\n');
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn load_model(path: &std::path::Path) -> Result<LdaModel> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let dump: ModelDump = serde_json::from_slice(&bytes)?;
    if dump.schema_version != MODEL_SCHEMA_VERSION {
        return Err(Error::InvalidArg(format!(
            "unsupported model schema '{}', expected '{}'",
            dump.schema_version, MODEL_SCHEMA_VERSION
        )));
    }
    Ok(dump.model)
}

/// Per-topic top terms with their phi probabilities, descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicSummary {
    pub topics: Vec<Vec<(String, f64)>>,
}

pub fn top_words(model: &LdaModel, vocab: &Vocabulary, n: usize) -> Result<TopicSummary> {
    if n == 0 {
        return Err(Error::InvalidArg("top_words needs n >= 1".into()));
    }
    let topics = top_term_ids(model, vocab, n)
        .into_iter()
        .enumerate()
        .map(|(k, ids)| {
            ids.into_iter()
                .map(|w| (vocab.token(w).to_string(), model.phi(k, w as usize)))
                .collect()
        })
        .collect();
    Ok(TopicSummary { topics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textprep::{DocMeta, NGramConfig};

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

    /// Model with all counts zero: phi and theta collapse to uniform.
    fn degenerate_model(corpus: &TokenizedCorpus, k: usize) -> LdaModel {
        LdaModel {
            num_topics: k,
            vocab_size: corpus.vocab.len(),
            word_topic: vec![0; corpus.vocab.len() * k],
            doc_topic: vec![0; corpus.num_docs() * k],
            topic_totals: vec![0; k],
            assignments: corpus.docs.iter().map(|d| vec![0; d.len()]).collect(),
            doc_lens: vec![0; corpus.num_docs()],
            config: LdaConfig::new(k, 0),
        }
    }

    fn two_word_corpus() -> TokenizedCorpus {
        let mut docs: Vec<Vec<&str>> = Vec::new();
        for i in 0..20 {
            let word = if i % 2 == 0 { "apple" } else { "rocket" };
            docs.push(vec![word; 8]);
        }
        let borrowed: Vec<&[&str]> = docs.iter().map(|d| d.as_slice()).collect();
        corpus_of(&borrowed)
    }

    #[test]
    fn two_disjoint_words_separate_into_two_topics() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(2, 42).with_iterations(200);
        let model = lda_fit(&corpus, &cfg).unwrap();
        let summary = top_words(&model, &corpus.vocab, 1).unwrap();
        let heads: Vec<&str> = summary.topics.iter().map(|t| t[0].0.as_str()).collect();
        // Label permutation allowed; together the topics cover both words.
        let mut sorted = heads.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec!["apple", "rocket"]);
    }

    #[test]
    fn degenerate_single_token_corpus_keeps_invariants() {
        let corpus = corpus_of(&[&["only"]]);
        let cfg = LdaConfig::new(2, 7).with_iterations(50);
        let model = lda_fit(&corpus, &cfg).unwrap();
        assert!(model.counts_consistent());
        assert_eq!(model.assignments()[0].len(), 1);
        assert_eq!(model.topic_total(0) + model.topic_total(1), 1);
    }

    #[test]
    fn empty_corpus_and_bad_k_are_fatal() {
        let corpus = corpus_of(&[&[]]);
        let cfg = LdaConfig::new(2, 1);
        assert!(matches!(lda_fit(&corpus, &cfg), Err(Error::EmptyCorpus(_))));
        let corpus = corpus_of(&[&["a"]]);
        let cfg = LdaConfig::new(1, 1);
        assert!(matches!(lda_fit(&corpus, &cfg), Err(Error::InvalidArg(_))));
    }

    #[test]
    fn fit_is_deterministic_for_a_seed() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(3, 99).with_iterations(60);
        let a = lda_fit(&corpus, &cfg).unwrap();
        let b = lda_fit(&corpus, &cfg).unwrap();
        assert_eq!(a.assignments, b.assignments);
        assert_eq!(a.word_topic, b.word_topic);
        assert_eq!(
            perplexity(&a, &corpus).unwrap(),
            perplexity(&b, &corpus).unwrap()
        );
        let different = LdaConfig::new(3, 100).with_iterations(60);
        let c = lda_fit(&corpus, &different).unwrap();
        assert_ne!(a.assignments, c.assignments);
    }

    #[test]
    fn phi_and_theta_rows_are_distributions() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(4, 5).with_iterations(80);
        let model = lda_fit(&corpus, &cfg).unwrap();
        for k in 0..model.num_topics() {
            let sum: f64 = model.phi_row(k).iter().sum();
            assert!((sum - 1.0).abs() < 1e-9, "phi row {k} sums to {sum}");
        }
        for d in 0..model.num_docs() {
            let sum: f64 = model.theta_row(d).iter().sum();
            assert!((sum - 1.0).abs() < 1e-9, "theta row {d} sums to {sum}");
        }
    }

    #[test]
    fn uniform_model_perplexity_equals_vocab_size() {
        // Four words, all counts zero: P(w|d) = 1/4 for every token.
        let corpus = corpus_of(&[&["a", "b", "c", "d"], &["a", "c"]]);
        let model = degenerate_model(&corpus, 3);
        let p = perplexity(&model, &corpus).unwrap();
        assert!((p - 4.0).abs() < 1e-12);
    }

    #[test]
    fn certain_model_perplexity_is_one() {
        // Single-word vocabulary: phi = 1 regardless of counts.
        let corpus = corpus_of(&[&["w", "w", "w"], &["w"]]);
        let model = degenerate_model(&corpus, 2);
        let p = perplexity(&model, &corpus).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
    }

    #[test]
    fn perplexity_matches_direct_summation() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(3, 11).with_iterations(40);
        let model = lda_fit(&corpus, &cfg).unwrap();
        let fast = perplexity(&model, &corpus).unwrap();
        // Brute-force double loop over tokens with explicit theta and phi.
        let mut sum_log = 0.0;
        let mut n = 0u64;
        for (d, doc) in corpus.docs.iter().enumerate() {
            for &w in doc {
                let mut p = 0.0;
                for k in 0..model.num_topics() {
                    p += model.theta(d, k) * model.phi(k, w as usize);
                }
                sum_log += p.ln();
                n += 1;
            }
        }
        let slow = (-sum_log / n as f64).exp();
        assert!((fast - slow).abs() < 1e-9, "{fast} vs {slow}");
    }

    #[test]
    fn token_outside_vocabulary_is_fatal() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(2, 1).with_iterations(5);
        let model = lda_fit(&corpus, &cfg).unwrap();
        let mut other = corpus.clone();
        other.docs[0][0] = 999;
        assert!(matches!(
            perplexity(&model, &other),
            Err(Error::UnknownToken { .. })
        ));
    }

    #[test]
    fn coherence_single_pair_closed_forms() {
        // One corpus where the two top words co-occur in every document.
        let corpus = corpus_of(&[&["x", "y"], &["x", "y"], &["y", "x"]]);
        let model = {
            let mut m = degenerate_model(&corpus, 2);
            // Force both topics to rank x then y.
            let k = m.num_topics;
            let x = corpus.vocab.get("x").unwrap() as usize;
            let y = corpus.vocab.get("y").unwrap() as usize;
            for t in 0..k {
                m.word_topic[x * k + t] = 5;
                m.word_topic[y * k + t] = 3;
                m.topic_totals[t] = 8;
            }
            m
        };
        let c = coherence(&model, &corpus, 2).unwrap();
        let d = corpus.num_docs() as f64;
        assert!((c - ((d + 1.0) / d).ln()).abs() < 1e-12);
    }

    #[test]
    fn coherence_never_cooccurring_pair() {
        // Higher-ranked word in 5 documents, never together with the other.
        let corpus = corpus_of(&[&["x"], &["x"], &["x"], &["x"], &["x"], &["y"]]);
        let model = {
            let mut m = degenerate_model(&corpus, 2);
            let k = m.num_topics;
            let x = corpus.vocab.get("x").unwrap() as usize;
            let y = corpus.vocab.get("y").unwrap() as usize;
            for t in 0..k {
                m.word_topic[x * k + t] = 7;
                m.word_topic[y * k + t] = 2;
                m.topic_totals[t] = 9;
            }
            m
        };
        let c = coherence(&model, &corpus, 2).unwrap();
        assert!((c - (1.0f64 / 5.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn coherence_matches_double_loop_oracle() {
        let corpus = corpus_of(&[
            &["a", "b", "c"],
            &["a", "c", "d"],
            &["b", "d", "e"],
            &["a", "e"],
            &["c", "d", "e", "a"],
        ]);
        let cfg = LdaConfig::new(2, 3).with_iterations(50);
        let model = lda_fit(&corpus, &cfg).unwrap();
        let top_n = 3;
        let fast = coherence(&model, &corpus, top_n).unwrap();

        // Oracle: recompute document frequencies by scanning every doc pair.
        let tops = top_term_ids(&model, &corpus.vocab, top_n);
        let doc_has = |d: usize, w: u32| corpus.docs[d].contains(&w);
        let mut topic_sum = 0.0;
        for words in &tops {
            let mut pair_sum = 0.0;
            let mut pairs = 0.0;
            for i in 0..words.len() {
                for j in (i + 1)..words.len() {
                    let mut d_hi = 0.0f64;
                    let mut d_joint = 0.0f64;
                    for d in 0..corpus.num_docs() {
                        if doc_has(d, words[i]) {
                            d_hi += 1.0;
                            if doc_has(d, words[j]) {
                                d_joint += 1.0;
                            }
                        }
                    }
                    pair_sum += ((d_joint + 1.0) / d_hi).ln();
                    pairs += 1.0;
                }
            }
            topic_sum += pair_sum / pairs;
        }
        let slow = topic_sum / model.num_topics() as f64;
        assert!((fast - slow).abs() < 1e-12, "{fast} vs {slow}");
    }

    #[test]
    fn coherence_requires_two_words() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(2, 1).with_iterations(5);
        let model = lda_fit(&corpus, &cfg).unwrap();
        assert!(coherence(&model, &corpus, 1).is_err());
    }

    #[test]
    fn top_words_n_one_and_ties() {
        let corpus = corpus_of(&[&["pear", "plum", "apricot"]]);
        let model = degenerate_model(&corpus, 2);
        // All phi equal: lexicographic order breaks ties.
        let summary = top_words(&model, &corpus.vocab, 2).unwrap();
        for topic in &summary.topics {
            let names: Vec<&str> = topic.iter().map(|(t, _)| t.as_str()).collect();
            assert_eq!(names, vec!["apricot", "pear"]);
        }
        let one = top_words(&model, &corpus.vocab, 1).unwrap();
        assert!(one.topics.iter().all(|t| t.len() == 1));
        // n beyond the vocabulary returns every term.
        let all = top_words(&model, &corpus.vocab, 50).unwrap();
        assert!(all.topics.iter().all(|t| t.len() == 3));
        assert!(top_words(&model, &corpus.vocab, 0).is_err());
    }

    #[test]
    fn probabilities_descend_within_topics() {
        let corpus = two_word_corpus();
        let cfg = LdaConfig::new(2, 21).with_iterations(100);
        let model = lda_fit(&corpus, &cfg).unwrap();
        let summary = top_words(&model, &corpus.vocab, 2).unwrap();
        for topic in &summary.topics {
            for pair in topic.windows(2) {
                assert!(pair[0].1 >= pair[1].1);
            }
        }
    }
}
