//! Batch jobs: a serializable description of one computation and the
//! deterministic JSON report it produces. The `vgit` binary is a thin
//! argument parser over [`run`].

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds;
use crate::candidates::{
    generate_candidates_with, load_candidates, write_candidates, CandidateConfig, CandidateSet, GENERATOR_TAG,
};
use crate::cm;
use crate::engine::{self, PairState};
use crate::error::{Error, Result};
use crate::one_param::OneParamSubgroup;
use crate::poly::{parse_polynomial, SparsePolynomial, TermRecord};
use crate::rational::{parse_rational, render, Rational};
use crate::series;
use crate::torus::{self, WeightTable};

pub const ENGINE_VERSION: &str = concat!("vgit ", env!("CARGO_PKG_VERSION"));

/// A polynomial given either in the text grammar or as term records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Text(String),
    Records(Vec<TermRecord>),
}

impl PolyInput {
    pub fn parse(&self, nvars: usize) -> Result<SparsePolynomial> {
        match self {
            PolyInput::Text(text) => parse_polynomial(text, nvars),
            PolyInput::Records(records) => SparsePolynomial::from_records(nvars, records),
        }
    }
}

/// Contents of a pair file: `{"f": ..., "h": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    pub f: PolyInput,
    pub h: PolyInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairSource {
    File(PathBuf),
    Inline(PairFile),
}

impl PairSource {
    pub fn load(&self, n: usize, d: u32) -> Result<PairState> {
        let file = match self {
            PairSource::File(path) => serde_json::from_str::<PairFile>(&fs::read_to_string(path)?)?,
            PairSource::Inline(file) => file.clone(),
        };
        PairState::new(n, d, file.f.parse(n + 2)?, file.h.parse(n + 2)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiuInput {
    pub n: u32,
    pub pair_degree: String,
    pub vol_hat: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsQuery {
    pub gap: Option<u32>,
    pub quotient_order: Option<u64>,
    pub cubic_beta: Option<String>,
    /// `(n, d)` for `beta_0`, optionally tested against `beta`.
    pub beta0: Option<(u32, u32)>,
    pub beta: Option<String>,
    pub codim: Option<(u32, u32)>,
    pub liu: Option<LiuInput>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Command {
    Candidates { n: usize, d: u32, cache: Option<PathBuf>, weight_bound: Option<i64> },
    Walls { n: usize, d: u32, cache: Option<PathBuf> },
    Check { n: usize, d: u32, t: String, pair: PairSource, lambda: Option<Vec<i64>>, cache: Option<PathBuf> },
    Limit { n: usize, d: u32, pair: PairSource, lambda: Vec<i64> },
    Families { n: usize, d: u32, lambda: Vec<i64>, t: String, j: usize },
    Cm { n: usize, d: u32, beta: String },
    Df { n: usize, d: u32, pair: PairSource, lambda: Vec<i64>, beta: String },
    Bounds(BoundsQuery),
    Torus { table: Option<PathBuf>, coeffs: Vec<String>, shift: Vec<String>, symmetric: Option<Vec<usize>> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Candidates { .. } => "candidates",
            Command::Walls { .. } => "walls",
            Command::Check { .. } => "check",
            Command::Limit { .. } => "limit",
            Command::Families { .. } => "families",
            Command::Cm { .. } => "cm",
            Command::Df { .. } => "df",
            Command::Bounds(_) => "bounds",
            Command::Torus { .. } => "torus",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Record,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(flatten)]
    pub command: Command,
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

/// Loads the candidate set for `(n, d)` from `cache` when the file exists;
/// otherwise generates it and, if a path was given, writes it there.
pub fn obtain_candidates(
    n: usize,
    d: u32,
    cache: Option<&Path>,
    config: &CandidateConfig,
) -> Result<CandidateSet> {
    if let Some(path) = cache.filter(|p| p.exists()) {
        let set = load_candidates(path)?;
        if (set.n, set.d) != (n, d) {
            return Err(Error::Cache(format!(
                "{} holds candidates for (n, d) = ({}, {}), not ({n}, {d})",
                path.display(),
                set.n,
                set.d
            )));
        }
        return Ok(set);
    }
    let set = generate_candidates_with(n, d, config)?;
    if let Some(path) = cache {
        write_candidates(&set, path)?;
    }
    Ok(set)
}

fn rat(text: &str) -> Result<Rational> {
    parse_rational(text)
}

fn raw_weights(weights: &[i64], nvars: usize) -> Result<()> {
    if weights.len() != nvars {
        return Err(Error::invalid(format!("subgroup has {} weights, expected {nvars}", weights.len())));
    }
    if weights.iter().sum::<i64>() != 0 {
        return Err(Error::invalid(format!("weights {weights:?} do not sum to zero")));
    }
    Ok(())
}

fn normalized(weights: &[i64], nvars: usize) -> Result<OneParamSubgroup> {
    raw_weights(weights, nvars)?;
    OneParamSubgroup::from_normalized(weights.to_vec())
}

fn pair_echo(pair: &PairState) -> Value {
    json!({ "f": pair.f().to_string(), "h": pair.h().to_string() })
}

/// Executes a job and returns its report.
pub fn run(job: &JobSpec) -> Result<Value> {
    let (result, loaded) = execute(&job.command)?;
    let mut input = serde_json::to_value(&job.command)?;
    if let (Some(pair), Value::Object(map)) = (loaded, &mut input) {
        map.insert("pair_canonical".into(), pair);
    }
    Ok(json!({
        "engine": ENGINE_VERSION,
        "command": job.command.name(),
        "input": input,
        "result": result,
    }))
}

fn execute(command: &Command) -> Result<(Value, Option<Value>)> {
    match command {
        Command::Candidates { n, d, cache, weight_bound } => {
            let config = CandidateConfig { weight_bound: *weight_bound, ..CandidateConfig::default() };
            let set = obtain_candidates(*n, *d, cache.as_deref(), &config)?;
            let list: Vec<&[i64]> = set.iter().map(OneParamSubgroup::weights).collect();
            Ok((
                json!({
                    "generator": GENERATOR_TAG,
                    "count": set.len(),
                    "complete": set.complete,
                    "candidates": list,
                }),
                None,
            ))
        }
        Command::Walls { n, d, cache } => {
            let set = obtain_candidates(*n, *d, cache.as_deref(), &CandidateConfig::default())?;
            let walls: Vec<Value> = engine::candidate_walls(*n, *d, &set.candidates)
                .into_iter()
                .map(|w| {
                    json!({
                        "t": render(&w.t),
                        "lambda": w.source.lambda.weights(),
                        "monomial_weight": w.source.monomial_weight,
                        "h_index": w.source.h_index,
                    })
                })
                .collect();
            Ok((
                json!({
                    "t_max": render(&engine::t_max(*n, *d)),
                    "count": walls.len(),
                    "candidates_complete": set.complete,
                    "walls": walls,
                }),
                None,
            ))
        }
        Command::Check { n, d, t, pair, lambda, cache } => {
            let t = rat(t)?;
            let pair = pair.load(*n, *d)?;
            let set = obtain_candidates(*n, *d, cache.as_deref(), &CandidateConfig::default())?;
            let verdict = engine::verdict_in_coords(&pair, &t, &set.candidates)?;
            let mut result = serde_json::to_value(verdict.to_record(&t))?;
            result["candidates"] = json!({ "count": set.len(), "complete": set.complete });
            if let Some(weights) = lambda {
                raw_weights(weights, pair.nvars())?;
                let mu = engine::mu_t_weights(&pair, weights, &t)?;
                result["lambda"] = json!({ "weights": weights, "mu_t": render(&mu) });
            }
            Ok((result, Some(pair_echo(&pair))))
        }
        Command::Limit { n, d, pair, lambda } => {
            let pair = pair.load(*n, *d)?;
            let lambda = normalized(lambda, pair.nvars())?;
            let limit = engine::limit_pair(&pair, &lambda)?;
            Ok((
                json!({
                    "f0": limit.f0.to_string(),
                    "h0": limit.h0.to_string(),
                    "is_log_pair": limit.is_log_pair,
                    "f0_records": limit.f0.to_records(),
                    "h0_records": limit.h0.to_records(),
                }),
                Some(pair_echo(&pair)),
            ))
        }
        Command::Families { n, d, lambda, t, j } => {
            let lambda = normalized(lambda, n + 2)?;
            let t = rat(t)?;
            let monos = engine::destabilizing_family(*d, &lambda, &t, *j)?;
            let exponents: Vec<&[u32]> = monos.iter().map(|m| m.exponents()).collect();
            let rendered: Vec<String> = monos.iter().map(ToString::to_string).collect();
            Ok((json!({ "count": monos.len(), "monomials": exponents, "rendered": rendered }), None))
        }
        Command::Cm { n, d, beta } => {
            let beta = rat(beta)?;
            Ok((serde_json::to_value(cm::cm_coefficients(*n, *d, &beta)?)?, None))
        }
        Command::Df { n, d, pair, lambda, beta } => {
            let beta = rat(beta)?;
            let pair = pair.load(*n, *d)?;
            let lambda = normalized(lambda, pair.nvars())?;
            let report = series::df_of_one_ps(&pair, &lambda, &beta)?;
            let weight = series::cm_weight(*n, *d, &beta, report.weight_f, report.weight_h)?;
            let ratio = series::dictionary_ratio(*n, *d, &report)?;
            let mut result = serde_json::to_value(&report)?;
            result["cm_weight"] = json!(render(&weight));
            result["ratio"] = json!(ratio.as_ref().map(render));
            Ok((result, Some(pair_echo(&pair))))
        }
        Command::Bounds(query) => Ok((bounds_report(query)?, None)),
        Command::Torus { table, coeffs, shift, symmetric } => {
            let table = match table {
                Some(path) => {
                    let table: WeightTable = serde_json::from_str(&fs::read_to_string(path)?)?;
                    table.validate()?;
                    table
                }
                None => torus::three_a2_weight_table(),
            };
            let c: Vec<Rational> = coeffs.iter().map(|s| rat(s)).collect::<Result<_>>()?;
            let shift: Vec<Rational> = if shift.is_empty() {
                vec![Rational::default(); table.rank]
            } else {
                shift.iter().map(|s| rat(s)).collect::<Result<_>>()?
            };
            let verdict = match symmetric {
                Some(indices) => {
                    let group = torus::permutations_of(indices, table.len());
                    torus::extended_verdict(&c, &table, &shift, &group)?
                }
                None => torus::centroid_verdict(&c, &table, &shift)?,
            };
            let points: Vec<Vec<String>> = torus::shifted_weight_set(&c, &table, &shift)?
                .iter()
                .map(|p| p.iter().map(render).collect())
                .collect();
            let mut result = serde_json::to_value(&verdict)?;
            result["weights"] = json!(points);
            Ok((result, None))
        }
    }
}

fn bounds_report(q: &BoundsQuery) -> Result<Value> {
    let mut out = serde_json::Map::new();
    if let Some(n) = q.gap {
        out.insert("gap".into(), json!({ "n": n, "bound": bounds::gap_bound(n)?.to_string() }));
    }
    if let Some(order) = q.quotient_order {
        out.insert(
            "quotient_volume".into(),
            json!({ "order": order, "volume": render(&bounds::quotient_volume(order)?) }),
        );
    }
    if let Some(beta) = &q.cubic_beta {
        let beta = rat(beta)?;
        out.insert(
            "cubic".into(),
            json!({
                "beta": render(&beta),
                "max_group_order": bounds::max_group_order_cubic(&beta)?.to_string(),
                "above_beta0": bounds::beta0_cubic_predicate(&beta),
            }),
        );
    }
    if let Some((n, d)) = q.beta0 {
        let mut entry = json!({ "n": n, "d": d, "beta0_approx": bounds::beta0_pn(n, d)? });
        if let Some(beta) = &q.beta {
            let beta = rat(beta)?;
            entry["beta"] = json!(render(&beta));
            entry["above_beta0"] = json!(bounds::is_above_beta0(n, d, &beta)?);
        }
        out.insert("beta0".into(), entry);
    }
    if let Some((n, d)) = q.codim {
        let z1 = bounds::codim_z1(n, d).map(|v| v.to_string()).ok();
        out.insert(
            "codim".into(),
            json!({
                "n": n,
                "d": d,
                "z1": z1,
                "z1prime": bounds::codim_z1prime(n, d)?.to_string(),
                "z2": bounds::codim_z2(n, d)?.to_string(),
            }),
        );
    }
    if let Some(liu) = &q.liu {
        let query = bounds::VolumeBoundQuery::new(liu.n, rat(&liu.pair_degree)?, rat(&liu.vol_hat)?)?;
        out.insert("liu".into(), json!({ "ok": bounds::liu_bound_ok(&query), "query": query }));
    }
    if out.is_empty() {
        return Err(Error::invalid("bounds needs at least one query"));
    }
    Ok(Value::Object(out))
}

/// Renders a report as pretty JSON or as `path: value` lines.
pub fn format_report(report: &Value, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Record => Ok(serde_json::to_string_pretty(report)? + "\n"),
        OutputFormat::Text => {
            let mut out = String::new();
            flatten(report, "", &mut out);
            Ok(out)
        }
    }
}

fn flatten(value: &Value, prefix: &str, out: &mut String) {
    let join = |key: &str| if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(v, &join(k), out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, &join(&i.to_string()), out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{prefix}: {s}");
        }
        other => {
            let _ = writeln!(out, "{prefix}: {other}");
        }
    }
}

/// Runs the job and writes the formatted report to its output path, or
/// returns it for printing when no path is set.
pub fn run_and_write(job: &JobSpec) -> Result<Option<String>> {
    let report = run(job)?;
    let text = format_report(&report, job.format)?;
    match &job.output_path {
        Some(path) => {
            fs::write(path, text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
