//! Job configuration: a JSON document, or the same fields from inline flags.

use clap::Args;
use hopfkernel::families::{FamilySpec, Window};
use hopfkernel::FieldSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<WindowSpec>,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct WindowSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_support: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_exp: Option<u32>,
    /// |z| bound for smash coproducts
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smash: Option<u32>,
}

impl WindowSpec {
    pub fn tails(&self) -> Window {
        let d = Window::default();
        Window {
            max_support: self.max_support.unwrap_or(d.max_support),
            max_abs_exp: self.max_exp.unwrap_or(d.max_abs_exp),
        }
    }

    pub fn smash(&self) -> u32 {
        self.smash.unwrap_or(8)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Options {
    /// also run the dual construction (lifted families)
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub dual: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// CategoryData file for `bounds`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<PathBuf>,
    /// `fixture:uqsl2` selects the bundled data
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
}

#[derive(Args, Clone, Debug, Default)]
pub struct JobArgs {
    /// JSON job configuration; inline family flags are then rejected
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// taft | bigd | limit | lifted | smash
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// q_i as `value` (next index) or `i:value`; repeatable
    #[arg(long, allow_hyphen_values = true)]
    pub q: Vec<String>,
    /// tail indices of the limit family, comma separated
    #[arg(long, value_delimiter = ',')]
    pub indices: Vec<u32>,
    /// group for liftings, e.g. C4 or C2xC2
    #[arg(long = "G")]
    pub group: Option<String>,
    /// `g` (first generator) or comma-separated exponents
    #[arg(long)]
    pub g: Option<String>,
    /// χ on the generators, comma separated
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub chi: Vec<String>,
    #[arg(long)]
    pub dual: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Q(ζ_N)(t) with this N
    #[arg(long)]
    pub conductor: Option<u32>,
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long)]
    pub max_support: Option<usize>,
    #[arg(long)]
    pub max_exp: Option<u32>,
    /// |z| bound for smash coproducts
    #[arg(long)]
    pub window: Option<u32>,
    /// CategoryData JSON, or `fixture:uqsl2`
    #[arg(long)]
    pub data: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    pub format: Format,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--{flag} is required for --family {family}"))
}

fn parse_group(s: &str) -> Result<Vec<u32>, String> {
    s.split(['x', 'X', '*'])
        .map(|c| {
            c.trim()
                .strip_prefix('C')
                .and_then(|o| o.parse::<u32>().ok())
                .filter(|&o| o > 0)
                .ok_or_else(|| format!("bad group {s:?}: expected C<n>xC<m>…"))
        })
        .collect()
}

fn parse_q(entries: &[String]) -> Result<BTreeMap<u32, String>, String> {
    let mut out = BTreeMap::new();
    for (k, e) in entries.iter().enumerate() {
        // `i:value`, unless the colon is not preceded by an index
        let (i, v) = match e.split_once(':') {
            Some((i, v)) if i.parse::<u32>().is_ok() => (i.parse::<u32>().unwrap(), v.to_string()),
            _ => (k as u32 + 1, e.clone()),
        };
        if out.insert(i, v).is_some() {
            return Err(format!("q_{i} given twice"));
        }
    }
    Ok(out)
}

impl JobArgs {
    fn has_inline(&self) -> bool {
        self.family.is_some()
            || self.n.is_some()
            || self.m.is_some()
            || self.omega.is_some()
            || self.alpha.is_some()
            || !self.q.is_empty()
            || !self.indices.is_empty()
            || self.group.is_some()
            || self.g.is_some()
            || !self.chi.is_empty()
            || self.p.is_some()
            || self.conductor.is_some()
            || self.prime.is_some()
            || self.max_support.is_some()
            || self.max_exp.is_some()
            || self.window.is_some()
            || self.data.is_some()
            || self.dual
            || self.seed.is_some()
    }

    /// The configuration, from `--config` or from the inline flags.
    pub fn resolve(&self) -> Result<JobConfig, String> {
        let mut cfg = match &self.config {
            Some(path) => {
                if self.has_inline() {
                    return Err("--config cannot be combined with inline job flags".into());
                }
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                serde_json::from_str::<JobConfig>(&text).map_err(|e| format!("{}: {e}", path.display()))?
            }
            None => self.inline()?,
        };
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        Ok(cfg)
    }

    fn inline(&self) -> Result<JobConfig, String> {
        let family = match self.family.as_deref() {
            None => None,
            Some(f @ "taft") => Some(FamilySpec::Taft {
                n: need(self.n, "n", f)?,
                omega: need(self.omega.clone(), "omega", f)?,
            }),
            Some(f @ "bigd") => {
                let n = need(self.n, "n", f)?;
                Some(FamilySpec::Bigd {
                    m: self.m.unwrap_or(n),
                    n,
                    omega: need(self.omega.clone(), "omega", f)?,
                    q: parse_q(&self.q)?,
                    alpha: self.alpha.clone().unwrap_or_else(|| "1".into()),
                })
            }
            Some(f @ "limit") => Some(FamilySpec::Limit {
                n: need(self.n, "n", f)?,
                omega: need(self.omega.clone(), "omega", f)?,
                indices: if self.indices.is_empty() { vec![1] } else { self.indices.clone() },
            }),
            Some(f @ "lifted") => {
                let group = parse_group(&need(self.group.clone(), "G", f)?)?;
                let g = match self.g.as_deref() {
                    None | Some("g") => {
                        let mut g = vec![0; group.len()];
                        g[0] = 1;
                        g
                    }
                    Some(s) => s
                        .split(',')
                        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("--g {s:?}: {e}")))
                        .collect::<Result<_, _>>()?,
                };
                if self.chi.is_empty() {
                    return Err("--chi is required for --family lifted".into());
                }
                Some(FamilySpec::Lifted {
                    group,
                    g,
                    chi: self.chi.clone(),
                    alpha: self.alpha.clone().unwrap_or_else(|| "1".into()),
                })
            }
            Some("smash") => Some(FamilySpec::Smash { p: self.p.unwrap_or(2) }),
            Some(other) => return Err(format!("unknown family {other:?}")),
        };
        let field = match (self.conductor, self.prime) {
            (Some(_), Some(_)) => return Err("--conductor and --prime are exclusive".into()),
            (Some(n), None) => Some(FieldSpec::Cyclotomic(n)),
            (None, Some(p)) => Some(FieldSpec::Prime(p)),
            (None, None) => None,
        };
        let window = WindowSpec {
            max_support: self.max_support,
            max_exp: self.max_exp,
            smash: self.window,
        };
        let (data, fixture) = match self.data.as_deref() {
            Some(d) if d.starts_with("fixture:") => (None, Some(d.to_string())),
            Some(d) => (Some(PathBuf::from(d)), None),
            None => (None, None),
        };
        Ok(JobConfig {
            field,
            family,
            window: (window != WindowSpec::default()).then_some(window),
            options: Options {
                dual: self.dual,
                seed: self.seed,
                data,
                fixture,
            },
            out: None,
        })
    }
}
