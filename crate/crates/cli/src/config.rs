//! Optional `key=value` configuration. Lines starting with `#` are
//! comments. Recognized keys: `cache_dir`, `cache` (`on`/`off`), `out`
//! (`json`/`pretty`), `threads`.

use std::path::{Path, PathBuf};

use crate::cli::OutFormat;
use crate::error::CliError;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub cache: Option<bool>,
    pub out: Option<OutFormat>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut c = Config::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |m: &str| CliError::Usage(format!("config line {}: {m}", no + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value = value.trim();
            match key.trim() {
                "cache_dir" => c.cache_dir = Some(PathBuf::from(value)),
                "cache" => {
                    c.cache = Some(match value {
                        "on" | "true" | "1" => true,
                        "off" | "false" | "0" => false,
                        _ => return Err(bad("cache must be on or off")),
                    })
                }
                "out" => {
                    c.out = Some(match value {
                        "json" => OutFormat::Json,
                        "pretty" => OutFormat::Pretty,
                        _ => return Err(bad("out must be json or pretty")),
                    })
                }
                "threads" => c.threads = Some(value.parse().map_err(|_| bad("threads must be a number"))?),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    /// The explicit file, else `SUPERJACK_CONFIG`, else
    /// `$XDG_CONFIG_HOME/superjack/config` if it exists.
    pub fn discover(explicit: Option<&Path>) -> Result<Config, CliError> {
        if let Some(p) = explicit {
            return Config::load(p);
        }
        if let Some(p) = std::env::var_os("SUPERJACK_CONFIG") {
            return Config::load(Path::new(&p));
        }
        let base = std::env::var_os("XDG_CONFIG_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".config")));
        match base.map(|b| b.join("superjack").join("config")) {
            Some(p) if p.is_file() => Config::load(&p),
            _ => Ok(Config::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = Config::parse("# comment\ncache_dir = /tmp/x\nout=json\ncache=off\nthreads=2\n").unwrap();
        assert_eq!(c.cache_dir, Some(PathBuf::from("/tmp/x")));
        assert_eq!(c.out, Some(OutFormat::Json));
        assert_eq!(c.cache, Some(false));
        assert_eq!(c.threads, Some(2));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::parse("colour=blue").is_err());
        assert!(Config::parse("no equals sign").is_err());
    }
}
