//! Flat `key=value` run configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;

use gallai::containers::DEFAULT_CONTAINER_C;
use gallai::counting::CountConfig;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub leaf_budget: u64,
    pub node_budget: u64,
    pub thread_fanout_depth: usize,
    pub cache_path: Option<PathBuf>,
    pub sample_size: u64,
    pub container_c: f64,
    /// Thresholds set with `n0.<name> = <integer>`.
    pub n0_overrides: BTreeMap<String, u64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let count = CountConfig::default();
        RunConfig {
            leaf_budget: count.leaf_budget,
            node_budget: count.node_budget,
            thread_fanout_depth: count.fanout_depth,
            cache_path: None,
            sample_size: 10_000,
            container_c: DEFAULT_CONTAINER_C,
            n0_overrides: BTreeMap::new(),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

fn positive<T: std::str::FromStr + PartialOrd + Default>(key: &str, value: &str) -> Result<T, String> {
    match value.parse::<T>() {
        Ok(v) if v > T::default() => Ok(v),
        _ => Err(format!("`{key}` must be a positive number, got `{value}`")),
    }
}

impl RunConfig {
    pub fn count_config(&self) -> CountConfig {
        CountConfig {
            leaf_budget: self.leaf_budget,
            node_budget: self.node_budget,
            fanout_depth: self.thread_fanout_depth,
        }
    }

    /// Applies one setting; used for both the file and command-line flags.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "leaf_budget" => self.leaf_budget = positive(key, value)?,
            "node_budget" => self.node_budget = positive(key, value)?,
            "thread_fanout_depth" => {
                self.thread_fanout_depth = value
                    .parse()
                    .map_err(|_| format!("`{key}` must be a non-negative integer, got `{value}`"))?
            }
            "cache_path" => self.cache_path = (!value.is_empty()).then(|| PathBuf::from(value)),
            "sample_size" => self.sample_size = positive(key, value)?,
            "container_c" => {
                let c: f64 = positive(key, value)?;
                if !c.is_finite() {
                    return Err(format!("`{key}` must be finite"));
                }
                self.container_c = c;
            }
            _ => match key.strip_prefix("n0.") {
                Some(name) if !name.is_empty() => {
                    let n0 = value
                        .parse()
                        .map_err(|_| format!("`{key}` must be a non-negative integer, got `{value}`"))?;
                    self.n0_overrides.insert(name.to_owned(), n0);
                }
                _ => return Err(format!("unknown key `{key}`")),
            },
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            cfg.set(key.trim(), value.trim()).map_err(err)?;
        }
        Ok(cfg)
    }
}
