//! `key = value` config files for pipeline runs.
//!
//! UTF-8, one setting per line, `#` comments and blank lines ignored.
//! Settings override the built-in defaults; explicit CLI flags override the
//! file. `alpha = auto` restores the 50/K default.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::pipeline::PipelineConfig;

/// Apply a config file's settings on top of `cfg`.
pub fn apply_config_file(cfg: &mut PipelineConfig, path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
        path: path.to_path_buf(),
        line: 0,
        message: format!("cannot read config file: {e}"),
    })?;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Config {
            path: path.to_path_buf(),
            line: idx + 1,
            message,
        };
        let Some((key, value)) = line.split_once('=') else {
            return Err(err(format!("expected 'key = value', got '{line}'")));
        };
        let key = key.trim();
        let value = value.trim();
        if value.is_empty() {
            return Err(err(format!("empty value for '{key}'")));
        }
        apply_setting(cfg, key, value).map_err(err)?;
    }
    Ok(())
}

fn apply_setting(
    cfg: &mut PipelineConfig,
    key: &str,
    value: &str,
) -> std::result::Result<(), String> {
    fn parse<T: std::str::FromStr>(key: &str, value: &str) -> std::result::Result<T, String>
    where
        T::Err: std::fmt::Display,
    {
        value
            .parse()
            .map_err(|e| format!("bad value '{value}' for '{key}': {e}"))
    }

    match key {
        "input" => cfg.input = PathBuf::from(value),
        "format" => cfg.format = parse(key, value)?,
        "output_dir" => cfg.output_dir = PathBuf::from(value),
        "stopwords" => cfg.stopwords = Some(PathBuf::from(value)),
        "stopword_extensions" => cfg.stopword_extensions = Some(PathBuf::from(value)),
        "lexicon" => cfg.lexicon = Some(PathBuf::from(value)),
        "negators" => cfg.negators = Some(PathBuf::from(value)),
        "boosters" => cfg.boosters = Some(PathBuf::from(value)),
        "language_threshold" => cfg.language_threshold = parse(key, value)?,
        "ngram_orders" => {
            let orders: std::result::Result<Vec<u8>, String> = value
                .split(',')
                .map(|part| parse::<u8>(key, part.trim()))
                .collect();
            cfg.ngram_orders = orders?;
        }
        "topics_min" => cfg.topics_min = parse(key, value)?,
        "topics_max" => cfg.topics_max = parse(key, value)?,
        "alpha" => {
            cfg.alpha = if value.eq_ignore_ascii_case("auto") {
                None
            } else {
                Some(parse(key, value)?)
            }
        }
        "beta" => cfg.beta = parse(key, value)?,
        "iterations" => cfg.iterations = parse(key, value)?,
        "method" => cfg.method = parse(key, value)?,
        "compound_threshold" => cfg.compound_threshold = parse(key, value)?,
        "split_fraction" => cfg.split_fraction = parse(key, value)?,
        "nb_smoothing" => cfg.nb_smoothing = parse(key, value)?,
        "seed" => cfg.seed = parse(key, value)?,
        "top_terms" => cfg.top_terms = parse(key, value)?,
        "top_words" => cfg.top_words = parse(key, value)?,
        other => return Err(format!("unknown setting '{other}'")),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::Format;
    use crate::pipeline::LabelMethod;
    use std::io::Write;

    fn base() -> PipelineConfig {
        PipelineConfig::new(PathBuf::from("in.csv"), Format::Csv, PathBuf::from("out"))
    }

    fn config_file(content: &str) -> tempfile::TempPath {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f.into_temp_path()
    }

    #[test]
    fn overrides_defaults_and_keeps_the_rest() {
        let mut cfg = base();
        let path = config_file(
            "# a comment\n\
             seed = 7\n\
             method = compound\n\
             ngram_orders = 1, 2\n\
             topics_min = 3\n\
             topics_max = 6\n\
             alpha = 0.5\n\
             format = jsonl\n",
        );
        apply_config_file(&mut cfg, &path).unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.method, LabelMethod::Compound);
        assert_eq!(cfg.ngram_orders, vec![1, 2]);
        assert_eq!(cfg.topics_min, 3);
        assert_eq!(cfg.topics_max, 6);
        assert_eq!(cfg.alpha, Some(0.5));
        assert_eq!(cfg.format, Format::Jsonl);
        // Untouched defaults survive.
        assert_eq!(cfg.iterations, 1000);
        assert_eq!(cfg.split_fraction, 0.8);
    }

    #[test]
    fn alpha_auto_restores_default() {
        let mut cfg = base();
        cfg.alpha = Some(0.1);
        let path = config_file("alpha = auto\n");
        apply_config_file(&mut cfg, &path).unwrap();
        assert_eq!(cfg.alpha, None);
    }

    #[test]
    fn unknown_keys_and_bad_values_name_the_line() {
        let mut cfg = base();
        let path = config_file("seed = 1\nnonsense = 2\n");
        match apply_config_file(&mut cfg, &path) {
            Err(Error::Config { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected config error, got {other:?}"),
        }
        let path = config_file("seed = notanumber\n");
        assert!(apply_config_file(&mut cfg, &path).is_err());
        let path = config_file("just a line\n");
        assert!(apply_config_file(&mut cfg, &path).is_err());
    }
}
