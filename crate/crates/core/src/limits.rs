//! Size budgets shared by the constructors and the CLI.

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of vertices a constructor may create.
    pub vertices: usize,
    /// Maximum number of maximal paths to enumerate.
    pub paths: usize,
    /// Maximum number of poset elements for ideal lattices.
    pub poset_elements: usize,
    /// Largest `n` accepted for orthogonal-form relation checks.
    pub yof_relations_n: usize,
    /// Largest `n` accepted for closure probes.
    pub yof_probe_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertices: 1 << 20,
            paths: 1_000_000,
            poset_elements: 20,
            yof_relations_n: 8,
            yof_probe_n: 5,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("config line {line}: {message}")]
    Syntax { line: usize, message: String },
}

const KEYS: [&str; 5] = ["vertices", "paths", "poset_elements", "yof_relations_n", "yof_probe_n"];

impl Limits {
    fn slot(&mut self, key: &str) -> Option<&mut usize> {
        match key {
            "vertices" => Some(&mut self.vertices),
            "paths" => Some(&mut self.paths),
            "poset_elements" => Some(&mut self.poset_elements),
            "yof_relations_n" => Some(&mut self.yof_relations_n),
            "yof_probe_n" => Some(&mut self.yof_probe_n),
            _ => None,
        }
    }

    /// Applies `DIAMOND_BUDGET_<KEY>` variables, e.g. `DIAMOND_BUDGET_PATHS=5000000`.
    /// Unparseable values are ignored.
    pub fn apply_env(&mut self) {
        self.apply_env_from(|k| std::env::var(k).ok());
    }

    pub fn apply_env_from(&mut self, get: impl Fn(&str) -> Option<String>) {
        for key in KEYS {
            let var = format!("DIAMOND_BUDGET_{}", key.to_ascii_uppercase());
            if let Some(v) = get(&var).and_then(|s| s.trim().parse().ok()) {
                *self.slot(key).expect("known key") = v;
            }
        }
    }

    /// Applies a `key = value` config text. Blank lines and `#` comments are skipped.
    pub fn apply_config(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| ConfigError::Syntax { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected key = value, got {line:?}")))?;
            let key = key.trim();
            let value: usize = value
                .trim()
                .replace('_', "")
                .parse()
                .map_err(|_| syntax(format!("bad value {:?} for {key}", value.trim())))?;
            *self.slot(key).ok_or_else(|| syntax(format!("unknown key {key:?}")))? = value;
        }
        Ok(())
    }

    pub fn apply_config_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.apply_config(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_overrides_defaults() {
        let mut l = Limits::default();
        l.apply_config("# budgets\npaths = 2_000_000\n\nyof_probe_n=6 # bigger\n")
            .unwrap();
        assert_eq!(l.paths, 2_000_000);
        assert_eq!(l.yof_probe_n, 6);
        assert_eq!(l.vertices, 1 << 20);
    }

    #[test]
    fn config_errors_name_the_line() {
        let mut l = Limits::default();
        let e = l.apply_config("paths = 1\nbogus = 3\n").unwrap_err();
        assert!(matches!(e, ConfigError::Syntax { line: 2, .. }));
        assert!(l.apply_config("paths 3").is_err());
    }

    #[test]
    fn env_is_read_per_key() {
        let mut l = Limits::default();
        l.apply_env_from(|k| (k == "DIAMOND_BUDGET_VERTICES").then(|| "77".to_string()));
        assert_eq!(l.vertices, 77);
        assert_eq!(l.paths, 1_000_000);
    }
}
