use std::collections::BTreeMap;

use doublealg::group::{parse_group, Family, FiniteGroup};
use doublealg::ncalg::{PaperFamily, PaperParams, S3Candidate};
use doublealg::Cyclotomic;

use crate::CliError;

const KEYS: &[(&str, &[&str])] = &[
    ("group", &["family", "n"]),
    ("algebra", &["family", "candidate"]),
    ("params", &["alpha", "beta", "gamma", "u1", "u2", "u3", "u4"]),
    ("limits", &["degree"]),
];

/// Flat `[section] key=value` configuration.
#[derive(Clone, Debug, Default)]
pub struct JobConfig {
    values: BTreeMap<(String, String), String>,
}

impl JobConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = JobConfig::default();
        let mut section: Option<String> = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut rest = line;
            if let Some(stripped) = rest.strip_prefix('[') {
                let (name, tail) = stripped
                    .split_once(']')
                    .ok_or_else(|| CliError::Usage(format!("line {}: unterminated section", ln + 1)))?;
                let name = name.trim().to_ascii_lowercase();
                if !KEYS.iter().any(|(s, _)| *s == name) {
                    return Err(CliError::Usage(format!("line {}: unknown section [{name}]", ln + 1)));
                }
                section = Some(name);
                rest = tail.trim();
            }
            for tok in rest.split_whitespace() {
                let sec = section.clone().ok_or_else(|| CliError::Usage(format!("line {}: key outside a section", ln + 1)))?;
                cfg.set(&sec, tok).map_err(|e| CliError::Usage(format!("line {}: {e}", ln + 1)))?;
            }
        }
        Ok(cfg)
    }

    fn set(&mut self, section: &str, token: &str) -> Result<(), String> {
        let (k, v) = token.split_once('=').ok_or_else(|| format!("expected key=value, got `{token}`"))?;
        let k = k.trim().to_ascii_lowercase();
        let allowed = KEYS.iter().find(|(s, _)| *s == section).map(|(_, ks)| *ks).unwrap_or(&[]);
        if !allowed.contains(&k.as_str()) {
            return Err(format!("unknown key `{k}` in [{section}]"));
        }
        self.values.insert((section.to_string(), k), v.trim().to_string());
        Ok(())
    }

    /// Applies `--params k=v,...`.
    pub fn override_params(&mut self, spec: &str) -> Result<(), CliError> {
        for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            self.set("params", tok).map_err(CliError::Usage)?;
        }
        Ok(())
    }

    pub fn set_degree(&mut self, d: usize) {
        self.values.insert(("limits".into(), "degree".into()), d.to_string());
    }

    fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.values.get(&(section.to_string(), key.to_string())).map(String::as_str)
    }

    pub fn degree(&self) -> Result<Option<usize>, CliError> {
        self.get("limits", "degree")
            .map(|d| d.parse().map_err(|_| CliError::Usage(format!("bad degree `{d}`"))))
            .transpose()
    }

    pub fn group(&self) -> Result<Option<FiniteGroup>, CliError> {
        let Some(family) = self.get("group", "family") else {
            return Ok(None);
        };
        let spec = match self.get("group", "n") {
            Some(n) => format!("{family}:{n}"),
            None => family.to_string(),
        };
        Ok(Some(parse_group(&spec)?))
    }

    pub fn params(&self) -> Result<PaperParams, CliError> {
        let sign = |k: &str, default: i64| -> Result<i64, CliError> {
            self.get("params", k)
                .map(|v| v.parse().map_err(|_| CliError::Usage(format!("bad {k} `{v}`"))))
                .unwrap_or(Ok(default))
        };
        let u = |k: &str| -> Result<Cyclotomic, CliError> {
            Ok(self.get("params", k).map(str::parse).transpose()?.unwrap_or_else(Cyclotomic::one))
        };
        Ok(PaperParams::new(sign("alpha", 1)?, sign("beta", 1)?, sign("gamma", -1)?, [u("u1")?, u("u2")?, u("u3")?, u("u4")?])?)
    }

    /// The algebra named by `[algebra] family`, or implied by `[group]`.
    pub fn family(&self) -> Result<PaperFamily, CliError> {
        let name = match self.get("algebra", "family") {
            Some(f) => f.to_ascii_lowercase(),
            None => match self.group()? {
                Some(g) => match g.family() {
                    Family::Dicyclic(2) => "d4".into(),
                    Family::Dicyclic(4) => "d8".into(),
                    Family::Symmetric3 => "s3".into(),
                    other => return Err(CliError::Usage(format!("no featured algebra for group {other}"))),
                },
                None => return Err(CliError::Usage("config names neither [algebra] family nor [group]".into())),
            },
        };
        match name.as_str() {
            "d4" | "q8" => Ok(PaperFamily::D4(self.params()?)),
            "d8" => Ok(PaperFamily::D8(self.params()?)),
            "s3" => {
                let c = self
                    .get("algebra", "candidate")
                    .ok_or_else(|| CliError::Usage("[algebra] candidate is required for s3".into()))?;
                Ok(PaperFamily::S3(c.parse::<S3Candidate>()?))
            }
            other => Err(CliError::Usage(format!("unknown algebra family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_and_overrides() {
        let mut c = JobConfig::parse("[group] family=dicyclic n=2\n[params]\nalpha=1 beta=-1 # comment\n[limits] degree=6\n").unwrap();
        c.override_params("u2=i,gamma=1").unwrap();
        let p = c.params().unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (1, -1, 1));
        assert_eq!(p.u[1], Cyclotomic::i());
        assert_eq!(c.degree().unwrap(), Some(6));
        assert!(matches!(c.family().unwrap(), PaperFamily::D4(_)));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(JobConfig::parse("[params] delta=1").is_err());
        assert!(JobConfig::parse("[colour] x=1").is_err());
        assert!(JobConfig::parse("alpha=1").is_err());
        assert!(JobConfig::parse("[params] alpha=2").unwrap().params().is_err());
    }
}
