//! `reviewminer` command line: ingest | stats | topics | sentiment |
//! pipeline | report.
//!
//! Exit codes: 0 success, 1 validation error (bad flags, config, or input
//! schema), 2 runtime failure.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use reviewminer::config::apply_config_file;
use reviewminer::error::{Error, Result};
use reviewminer::ingest::{
    filter_language, ingest, write_csv, write_error_report, write_jsonl, Format, RawCorpus,
};
use reviewminer::lda::{save_model, top_words};
use reviewminer::pipeline::{run_pipeline, LabelMethod, PipelineConfig};
use reviewminer::report::{emit_report, Report};
use reviewminer::sentiment::{
    auto_label, compound_score, compound_to_label, evaluate, nb_fit, nb_predict, polarity_score,
    polarity_to_label, rating_stats, split_train_test, Evaluation, SentimentLabel, ValenceLexicon,
};
use reviewminer::stats::{tfidf, top_k, RankBy};
use reviewminer::sweep::{refit_best, sweep, SweepConfig, SweepResult};
use reviewminer::textprep::{
    build_corpus, dump_tokens, normalize, tokenize_words, NGramConfig, StopList, TokenizedCorpus,
};

#[derive(Parser)]
#[command(
    name = "reviewminer",
    version,
    about = "Topic and sentiment analytics over app-review corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a review file, reporting malformed rows.
    Ingest(IngestArgs),
    /// Word-count and TF-IDF term rankings.
    Stats(StatsArgs),
    /// Fit the (n-gram x topics) grid and show the chosen model's topics.
    Topics(TopicsArgs),
    /// Label reviews and evaluate the labeler against the rating rule.
    Sentiment(SentimentArgs),
    /// Run the full analysis end to end and write a report directory.
    Pipeline(PipelineArgs),
    /// Re-emit the TSV/CSV views from an existing report.json.
    Report(ReportArgs),
}

/// Flags shared by every command that reads a corpus.
#[derive(Args)]
struct CorpusArgs {
    /// Review file to analyze.
    #[arg(long)]
    input: PathBuf,
    /// Input format: csv or jsonl.
    #[arg(long)]
    format: Format,
    /// Stop-word file (default: built-in English list).
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Domain stop-word extensions (default: built-in list).
    #[arg(long)]
    stopword_extensions: Option<PathBuf>,
    /// Stop-word ratio below which untagged reviews are dropped as
    /// non-English (0 keeps everything).
    #[arg(long, default_value_t = reviewminer::ingest::DEFAULT_LANGUAGE_THRESHOLD)]
    language_threshold: f64,
}

fn require_file(path: &std::path::Path, what: &str) -> Result<()> {
    if path.exists() {
        Ok(())
    } else {
        Err(Error::InvalidArg(format!(
            "{what} '{}' does not exist",
            path.display()
        )))
    }
}

impl CorpusArgs {
    fn stop_list(&self) -> Result<StopList> {
        StopList::from_files(
            self.stopwords.as_deref(),
            self.stopword_extensions.as_deref(),
        )
    }

    /// Ingest and language-filter; malformed row counts go to stderr.
    fn load(&self) -> Result<(RawCorpus, StopList)> {
        require_file(&self.input, "input file")?;
        let stop = self.stop_list()?;
        let outcome = ingest(&self.input, self.format)?;
        if !outcome.errors.is_empty() {
            eprintln!(
                "warning: {} malformed row(s) skipped (run `reviewminer ingest` for details)",
                outcome.errors.len()
            );
        }
        let (kept, removed) = filter_language(&outcome.corpus, &stop, self.language_threshold);
        if removed > 0 {
            eprintln!("note: {removed} review(s) filtered as non-English");
        }
        if kept.is_empty() {
            return Err(Error::EmptyCorpus(
                "no reviews left after ingestion and language filtering".into(),
            ));
        }
        Ok((kept, stop))
    }
}

#[derive(Args)]
struct IngestArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    format: Format,
    /// Write the row-error report (JSONL of {line, field, message}) here;
    /// default prints it to stdout.
    #[arg(long)]
    errors_out: Option<PathBuf>,
    /// Write the validated corpus here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format for --out: csv or jsonl.
    #[arg(long, default_value = "jsonl")]
    out_format: Format,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// N-gram order for counting.
    #[arg(long, default_value_t = 1)]
    ngram: u8,
    /// How many terms to list.
    #[arg(long, default_value_t = 10)]
    top: usize,
    /// Ranking key: count or tfidf.
    #[arg(long, default_value = "count")]
    by: String,
    /// Dump the tokenized corpus (JSONL of {id, tokens}) here.
    #[arg(long)]
    dump_corpus: Option<PathBuf>,
    /// Write the TSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TopicsArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// N-gram orders to sweep: 1, 2, 3 or all.
    #[arg(long, default_value = "all")]
    ngram: String,
    #[arg(long, default_value_t = 5)]
    topics_min: usize,
    #[arg(long, default_value_t = 15)]
    topics_max: usize,
    /// Document-topic prior (default 50/K).
    #[arg(long)]
    alpha: Option<f64>,
    /// Topic-word prior.
    #[arg(long, default_value_t = 0.01)]
    beta: f64,
    /// Gibbs sweeps per fit.
    #[arg(long, default_value_t = 1000)]
    iters: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Top words per topic (also the coherence window).
    #[arg(long, default_value_t = 10)]
    top_n: usize,
    /// Directory for sweep.tsv and topics.tsv; default prints to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Persist the chosen model as versioned JSON.
    #[arg(long)]
    save_model: Option<PathBuf>,
}

#[derive(Args)]
struct SentimentArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Labeler: auto, polarity, compound, nb, or all.
    #[arg(long, default_value = "auto")]
    method: String,
    /// Compound-score threshold.
    #[arg(long, default_value_t = reviewminer::sentiment::DEFAULT_COMPOUND_THRESHOLD)]
    threshold: f64,
    /// Train fraction for the naive bayes split.
    #[arg(long, default_value_t = 0.8)]
    split: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Additive smoothing for naive bayes.
    #[arg(long, default_value_t = 1.0)]
    nb_alpha: f64,
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    negators: Option<PathBuf>,
    #[arg(long)]
    boosters: Option<PathBuf>,
    /// Write the per-review label CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    /// Review file (may also come from --config).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    format: Option<Format>,
    /// Output directory for the report files.
    #[arg(long)]
    out: Option<PathBuf>,
    /// key = value config file applied over the defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    stopwords: Option<PathBuf>,
    #[arg(long)]
    stopword_extensions: Option<PathBuf>,
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    negators: Option<PathBuf>,
    #[arg(long)]
    boosters: Option<PathBuf>,
    #[arg(long)]
    language_threshold: Option<f64>,
    /// Comma-separated n-gram orders, e.g. 1,2,3.
    #[arg(long)]
    ngram_orders: Option<String>,
    #[arg(long)]
    topics_min: Option<usize>,
    #[arg(long)]
    topics_max: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    iters: Option<u32>,
    #[arg(long)]
    method: Option<LabelMethod>,
    #[arg(long)]
    threshold: Option<f64>,
    #[arg(long)]
    split: Option<f64>,
    #[arg(long)]
    nb_alpha: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    top_terms: Option<usize>,
    #[arg(long)]
    top_words: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    /// Existing report.json.
    #[arg(long)]
    report: PathBuf,
    /// Directory to re-emit the report files into.
    #[arg(long)]
    out: PathBuf,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    let result = match cli.command {
        Command::Ingest(args) => cmd_ingest(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Topics(args) => cmd_topics(args),
        Command::Sentiment(args) => cmd_sentiment(args),
        Command::Pipeline(args) => cmd_pipeline(args),
        Command::Report(args) => cmd_report(args),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        let mut source = std::error::Error::source(&e);
        while let Some(cause) = source {
            eprintln!("  caused by: {cause}");
            source = cause.source();
        }
        std::process::exit(if e.is_validation() { 1 } else { 2 });
    }
}

fn cmd_ingest(args: IngestArgs) -> Result<()> {
    require_file(&args.input, "input file")?;
    let outcome = ingest(&args.input, args.format)?;
    eprintln!(
        "rows={} ok={} malformed={}",
        outcome.rows_read,
        outcome.corpus.len(),
        outcome.errors.len()
    );
    match &args.errors_out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
            write_error_report(&outcome.errors, std::io::BufWriter::new(file))?;
        }
        None => write_error_report(&outcome.errors, std::io::stdout().lock())?,
    }
    if let Some(path) = &args.out {
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let writer = std::io::BufWriter::new(file);
        match args.out_format {
            Format::Csv => write_csv(&outcome.corpus, writer)?,
            Format::Jsonl => write_jsonl(&outcome.corpus, writer)?,
        }
    }
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let by = match args.by.as_str() {
        "count" => RankBy::Count,
        "tfidf" => RankBy::Tfidf,
        other => {
            return Err(Error::InvalidArg(format!(
                "unknown ranking key '{other}' (expected count|tfidf)"
            )))
        }
    };
    let (kept, stop) = args.corpus.load()?;
    let corpus = build_corpus(&kept, &stop, NGramConfig::new(args.ngram)?)?;
    if let Some(path) = &args.dump_corpus {
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        dump_tokens(&corpus, std::io::BufWriter::new(file))?;
    }
    let stats = tfidf(&corpus)?;
    let ranked = top_k(&stats, &corpus.vocab, args.top, by)?;
    let mut out = open_out(args.out.as_deref())?;
    writeln!(out, "rank\ttoken\tcount\ttfidf_total").map_err(write_err)?;
    for (i, (token, _)) in ranked.iter().enumerate() {
        let id = corpus.vocab.get(token).expect("ranked token is interned") as usize;
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            i + 1,
            token,
            stats.count_of[id],
            stats.tfidf_total_of[id]
        )
        .map_err(write_err)?;
    }
    out.flush().map_err(write_err)
}

fn parse_orders(spec: &str) -> Result<Vec<u8>> {
    if spec == "all" {
        return Ok(vec![1, 2, 3]);
    }
    let mut orders = Vec::new();
    for part in spec.split(',') {
        let order: u8 = part.trim().parse().map_err(|_| {
            Error::InvalidArg(format!("bad n-gram spec '{spec}' (expected 1,2,3 or all)"))
        })?;
        if !(1..=3).contains(&order) || orders.contains(&order) {
            return Err(Error::InvalidArg(format!(
                "bad n-gram spec '{spec}' (orders must be distinct, in 1..=3)"
            )));
        }
        orders.push(order);
    }
    if orders.is_empty() {
        return Err(Error::InvalidArg("empty n-gram spec".into()));
    }
    Ok(orders)
}

fn cmd_topics(args: TopicsArgs) -> Result<()> {
    let orders = parse_orders(&args.ngram)?;
    let (kept, stop) = args.corpus.load()?;
    let mut corpora: BTreeMap<u8, TokenizedCorpus> = BTreeMap::new();
    for order in orders {
        corpora.insert(order, build_corpus(&kept, &stop, NGramConfig::new(order)?)?);
    }
    let cfg = SweepConfig {
        topics_min: args.topics_min,
        topics_max: args.topics_max,
        alpha: args.alpha,
        beta: args.beta,
        iterations: args.iters,
        base_seed: args.seed,
        coherence_top_n: args.top_n,
    };
    let result = sweep(&corpora, &cfg)?;
    let model = refit_best(&corpora, &cfg, &result)?;
    let best = result.best_entry();
    let summary = top_words(&model, &corpora[&best.ngram_order].vocab, args.top_n)?;

    let sweep_tsv = render_sweep_tsv(&result);
    let mut topics_tsv = String::from("topic\trank\ttoken\tprobability\n");
    for (k, topic) in summary.topics.iter().enumerate() {
        for (rank, (token, prob)) in topic.iter().enumerate() {
            topics_tsv.push_str(&format!("{}\t{}\t{token}\t{prob}\n", k + 1, rank + 1));
        }
    }
    match &args.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            let sweep_path = dir.join("sweep.tsv");
            std::fs::write(&sweep_path, &sweep_tsv).map_err(|e| Error::io(&sweep_path, e))?;
            let topics_path = dir.join("topics.tsv");
            std::fs::write(&topics_path, &topics_tsv).map_err(|e| Error::io(&topics_path, e))?;
            eprintln!(
                "chosen model: order={} topics={} (score {:.4})",
                best.ngram_order, best.num_topics, best.score
            );
        }
        None => {
            print!("{sweep_tsv}");
            println!();
            print!("{topics_tsv}");
        }
    }
    if let Some(path) = &args.save_model {
        save_model(&model, path)?;
    }
    Ok(())
}

fn render_sweep_tsv(result: &SweepResult) -> String {
    let mut out = String::from("ngram_order\tnum_topics\tperplexity\tcoherence\tscore\tchosen\n");
    for (i, e) in result.entries.iter().enumerate() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            e.ngram_order,
            e.num_topics,
            e.perplexity,
            e.coherence,
            e.score,
            i == result.best
        ));
    }
    out
}

fn cmd_sentiment(args: SentimentArgs) -> Result<()> {
    let methods: Vec<LabelMethod> = match args.method.as_str() {
        "all" => vec![
            LabelMethod::Polarity,
            LabelMethod::Compound,
            LabelMethod::Nb,
        ],
        other => vec![other.parse().map_err(Error::InvalidArg)?],
    };
    let (kept, stop) = args.corpus.load()?;
    let rating = rating_stats(&kept)?;
    if rating.sd == 0.0 {
        eprintln!("warning: rating standard deviation is 0; every auto label is neutral");
    }
    let auto_labels: Vec<SentimentLabel> = kept
        .reviews
        .iter()
        .map(|r| auto_label(r.rating, &rating))
        .collect();

    let mut columns: Vec<(String, Vec<SentimentLabel>)> = Vec::new();
    let mut evaluations: Vec<(String, String, Evaluation)> = Vec::new();
    for method in &methods {
        if *method == LabelMethod::Auto {
            // The method column repeats the auto labels; no evaluation.
            columns.push(("auto_label".into(), auto_labels.clone()));
            continue;
        }
        let labels = match method {
            LabelMethod::Polarity | LabelMethod::Compound => {
                let lexicon = ValenceLexicon::from_files(
                    args.lexicon.as_deref(),
                    args.negators.as_deref(),
                    args.boosters.as_deref(),
                )?;
                kept.reviews
                    .iter()
                    .map(|review| {
                        let tokens = tokenize_words(&normalize(&review.text()));
                        match method {
                            LabelMethod::Polarity => {
                                polarity_to_label(polarity_score(&tokens, &lexicon))
                            }
                            _ => {
                                compound_to_label(compound_score(&tokens, &lexicon), args.threshold)
                            }
                        }
                    })
                    .collect::<Vec<_>>()
            }
            LabelMethod::Nb => {
                let mut corpus = build_corpus(&kept, &stop, NGramConfig::new(1)?)?;
                for (meta, &label) in corpus.doc_meta.iter_mut().zip(&auto_labels) {
                    meta.label = Some(label);
                }
                let split = split_train_test(&corpus, args.split, args.seed)?;
                let model = nb_fit(&split.train, args.nb_alpha)?;
                let predicted: Vec<SentimentLabel> = split
                    .test
                    .docs
                    .iter()
                    .map(|d| nb_predict(&model, d).0)
                    .collect();
                let actual: Vec<SentimentLabel> = split
                    .test
                    .doc_meta
                    .iter()
                    .map(|m| m.label.expect("labeled above"))
                    .collect();
                evaluations.push((
                    "nb".into(),
                    "test_split".into(),
                    evaluate(&predicted, &actual)?,
                ));
                corpus
                    .docs
                    .iter()
                    .map(|d| nb_predict(&model, d).0)
                    .collect()
            }
            LabelMethod::Auto => unreachable!(),
        };
        if !matches!(method, LabelMethod::Nb) {
            evaluations.push((
                method.to_string(),
                "full_corpus".into(),
                evaluate(&labels, &auto_labels)?,
            ));
        }
        columns.push((format!("{method}_label"), labels));
    }

    // Label CSV: id, rating, auto_label, then one column per method.
    let to_stdout = args.out.is_none();
    let mut writer: csv::Writer<Box<dyn Write>> = csv::Writer::from_writer(match &args.out {
        Some(path) => {
            Box::new(std::fs::File::create(path).map_err(|e| Error::io(path, e))?) as Box<dyn Write>
        }
        None => Box::new(std::io::stdout().lock()),
    });
    let mut header = vec!["id".to_string(), "rating".into(), "auto_label".into()];
    if columns.len() == 1 {
        header.push("method_label".into());
    } else {
        header.extend(columns.iter().map(|(name, _)| name.clone()));
    }
    writer.write_record(&header)?;
    for (i, review) in kept.reviews.iter().enumerate() {
        let mut row = vec![
            review.id.clone(),
            review.rating.to_string(),
            auto_labels[i].to_string(),
        ];
        row.extend(columns.iter().map(|(_, labels)| labels[i].to_string()));
        writer.write_record(&row)?;
    }
    writer.flush().map_err(write_err)?;
    drop(writer);

    // Evaluation blocks go to stdout, or stderr when the CSV itself is on
    // stdout.
    for (method, on, eval) in &evaluations {
        let block = format!(
            "method={method} evaluated_on={on} accuracy={:.4}\n\
             confusion (rows=actual neg/neu/pos, cols=predicted):\n\
             {} {} {}\n{} {} {}\n{} {} {}\n",
            eval.accuracy,
            eval.confusion[0][0],
            eval.confusion[0][1],
            eval.confusion[0][2],
            eval.confusion[1][0],
            eval.confusion[1][1],
            eval.confusion[1][2],
            eval.confusion[2][0],
            eval.confusion[2][1],
            eval.confusion[2][2],
        );
        if to_stdout {
            eprint!("{block}");
        } else {
            print!("{block}");
        }
    }
    Ok(())
}

fn cmd_pipeline(args: PipelineArgs) -> Result<()> {
    let mut cfg = PipelineConfig::new(PathBuf::new(), Format::Csv, PathBuf::new());
    if let Some(config_path) = &args.config {
        apply_config_file(&mut cfg, config_path)?;
    }
    // Explicit flags override the config file.
    if let Some(v) = args.input {
        cfg.input = v;
    }
    if let Some(v) = args.format {
        cfg.format = v;
    }
    if let Some(v) = args.out {
        cfg.output_dir = v;
    }
    if let Some(v) = args.stopwords {
        cfg.stopwords = Some(v);
    }
    if let Some(v) = args.stopword_extensions {
        cfg.stopword_extensions = Some(v);
    }
    if let Some(v) = args.lexicon {
        cfg.lexicon = Some(v);
    }
    if let Some(v) = args.negators {
        cfg.negators = Some(v);
    }
    if let Some(v) = args.boosters {
        cfg.boosters = Some(v);
    }
    if let Some(v) = args.language_threshold {
        cfg.language_threshold = v;
    }
    if let Some(v) = &args.ngram_orders {
        cfg.ngram_orders = parse_orders(v)?;
    }
    if let Some(v) = args.topics_min {
        cfg.topics_min = v;
    }
    if let Some(v) = args.topics_max {
        cfg.topics_max = v;
    }
    if let Some(v) = args.alpha {
        cfg.alpha = Some(v);
    }
    if let Some(v) = args.beta {
        cfg.beta = v;
    }
    if let Some(v) = args.iters {
        cfg.iterations = v;
    }
    if let Some(v) = args.method {
        cfg.method = v;
    }
    if let Some(v) = args.threshold {
        cfg.compound_threshold = v;
    }
    if let Some(v) = args.split {
        cfg.split_fraction = v;
    }
    if let Some(v) = args.nb_alpha {
        cfg.nb_smoothing = v;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.top_terms {
        cfg.top_terms = v;
    }
    if let Some(v) = args.top_words {
        cfg.top_words = v;
    }
    if cfg.input.as_os_str().is_empty() {
        return Err(Error::InvalidArg(
            "no input file configured (use --input or a config file)".into(),
        ));
    }
    if cfg.output_dir.as_os_str().is_empty() {
        return Err(Error::InvalidArg(
            "no output directory configured (use --out or a config file)".into(),
        ));
    }
    cfg.validate()?;

    match run_pipeline(&cfg) {
        Ok(outcome) => {
            let files = emit_report(&outcome.report, &cfg.output_dir)?;
            if !outcome.ingest_errors.is_empty() {
                let path = cfg.output_dir.join("ingest_errors.jsonl");
                let file = std::fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
                write_error_report(&outcome.ingest_errors, std::io::BufWriter::new(file))?;
            }
            for warning in &outcome.report.warnings {
                eprintln!("warning: {warning}");
            }
            eprintln!(
                "analyzed {} reviews; wrote {} files to {}",
                outcome.report.corpus.analyzed,
                files.len(),
                cfg.output_dir.display()
            );
            Ok(())
        }
        Err(e) => {
            // Flush a FAILED marker so partial output directories are
            // recognizably incomplete.
            if std::fs::create_dir_all(&cfg.output_dir).is_ok() {
                let _ = std::fs::write(cfg.output_dir.join("FAILED"), format!("{e}\n"));
            }
            Err(e)
        }
    }
}

fn cmd_report(args: ReportArgs) -> Result<()> {
    let bytes = std::fs::read(&args.report).map_err(|e| Error::io(&args.report, e))?;
    let report = Report::from_json_bytes(&bytes)?;
    let files = emit_report(&report, &args.out)?;
    eprintln!("wrote {} files to {}", files.len(), args.out.display());
    Ok(())
}

fn open_out(path: Option<&std::path::Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(path) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(path).map_err(|e| Error::io(path, e))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn write_err(e: std::io::Error) -> Error {
    Error::io("<output>", e)
}
