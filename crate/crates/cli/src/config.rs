//! Runtime caps and knobs. Read from a key=value file named by
//! `EXOTIC_CONFIG` (or `--config`), then overridden by flags.

use std::path::Path;

use exotic::kostant::DEFAULT_CACHE_BYTES;

use crate::CliError;

pub const CONFIG_ENV: &str = "EXOTIC_CONFIG";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub rank_cap: usize,
    pub degree_cap: usize,
    pub closure_depth: usize,
    pub cache_bytes: usize,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            rank_cap: 8,
            degree_cap: 12,
            closure_depth: exotic::exoticlin::DEFAULT_CLOSURE_DEPTH,
            cache_bytes: DEFAULT_CACHE_BYTES,
            threads: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub rank_cap: Option<usize>,
    pub degree_cap: Option<usize>,
    pub closure_depth: Option<usize>,
    pub cache_bytes: Option<usize>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn parse(text: &str, origin: &str) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = || format!("{origin}:{}", lineno + 1);
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Domain(format!("{}: expected key=value", at())))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| CliError::Domain(format!("{}: bad value for {}: {e}", at(), key.trim())))?;
            let slot = match key.trim() {
                "rank_cap" => &mut cfg.rank_cap,
                "degree_cap" => &mut cfg.degree_cap,
                "closure_depth" => &mut cfg.closure_depth,
                "cache_bytes" => &mut cfg.cache_bytes,
                "threads" => &mut cfg.threads,
                other => return Err(CliError::Domain(format!("{}: unknown config key `{other}`", at()))),
            };
            *slot = value;
        }
        Ok(cfg)
    }

    pub fn load(path: Option<&Path>, overrides: &Overrides) -> Result<Config, CliError> {
        let env_path = std::env::var_os(CONFIG_ENV);
        let path = path.map(Path::to_path_buf).or_else(|| env_path.map(Into::into));
        let mut cfg = match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| CliError::Domain(format!("cannot read config {}: {e}", p.display())))?;
                Config::parse(&text, &p.display().to_string())?
            }
            None => Config::default(),
        };
        let o = overrides;
        cfg.rank_cap = o.rank_cap.unwrap_or(cfg.rank_cap);
        cfg.degree_cap = o.degree_cap.unwrap_or(cfg.degree_cap);
        cfg.closure_depth = o.closure_depth.unwrap_or(cfg.closure_depth);
        cfg.cache_bytes = o.cache_bytes.unwrap_or(cfg.cache_bytes);
        cfg.threads = o.threads.unwrap_or(cfg.threads);
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [
            ("rank_cap", self.rank_cap),
            ("degree_cap", self.degree_cap),
            ("closure_depth", self.closure_depth),
            ("cache_bytes", self.cache_bytes),
            ("threads", self.threads),
        ] {
            if v == 0 {
                return Err(CliError::Domain(format!("config knob `{name}` must be positive")));
            }
        }
        Ok(())
    }

    pub fn check_rank(&self, n: usize) -> Result<(), CliError> {
        cap("rank", n, self.rank_cap, "rank_cap")
    }

    pub fn check_degree(&self, d: usize) -> Result<(), CliError> {
        cap("degree |μ|₁", d, self.degree_cap, "degree_cap")
    }
}

fn cap(what: &'static str, value: usize, cap: usize, knob: &'static str) -> Result<(), CliError> {
    if value > cap {
        return Err(exotic::Error::CapExceeded { what, value, cap, knob }.into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let cfg = Config::parse("# caps\nrank_cap = 5\n\nthreads=2 # two\n", "t").unwrap();
        assert_eq!(cfg.rank_cap, 5);
        assert_eq!(cfg.threads, 2);
        assert_eq!(cfg.degree_cap, 12);
        assert!(Config::parse("rank_cap 5", "t").is_err());
        assert!(Config::parse("bogus = 1", "t").is_err());
        assert!(Config::parse("rank_cap = -1", "t").is_err());
    }

    #[test]
    fn caps_name_their_knob() {
        let cfg = Config::default();
        let err = cfg.check_rank(9).unwrap_err();
        assert!(err.to_string().contains("rank_cap"));
        assert!(cfg.check_rank(8).is_ok());
    }
}
