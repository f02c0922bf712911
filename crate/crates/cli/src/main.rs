//! `hessvar`: JSON, TSV and DOT front end for `hessvar-core`.
//!
//! Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error,
//! 3 verification failure.

mod cache;
mod json;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hessvar_core::classes::{self, Form};
use hessvar_core::hess::{self, closure_intersecting_cells, containment_hasse, decompose_admissible};
use hessvar_core::oracle::{self, Matrix, OracleOptions, SemisimpleChoice};
use hessvar_core::perm::{format_one_line, parse_one_line};
use hessvar_core::singular;
use hessvar_core::weyl::parse_word;
use hessvar_core::{CartanDatum, Composition, Exec, Family, HessConfig, RootSystem, WeylElement, DEFAULT_BOUND};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hessvar", version, about = "Regular Hessenberg varieties for the minimal indecomposable Hessenberg space")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Versioned JSON cache of coset representatives.
    #[arg(long, global = true, env = "HESSVAR_CACHE")]
    cache: Option<PathBuf>,

    /// Largest group or coset enumeration allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: u128,

    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args, Clone)]
struct ConfigArgs {
    /// Lie type family (A-G).
    #[arg(long, default_value = "A")]
    family: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Comma-separated 1-based simple roots; empty for J = ∅.
    #[arg(long = "J", value_name = "LIST")]
    j: Option<String>,
    /// Composition μ of n (type A); sets J = J_μ.
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args, Clone)]
struct ElementArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// `s1s2s1`, `1,2,1`, `e`, or in type A a one-line permutation such as
    /// `3421` or `[3,4,2,1]`.
    #[arg(long)]
    w: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Cohomology,
    KTheory,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemisimpleArg {
    Centered,
    BlockIndex,
}

#[derive(Subcommand)]
enum Command {
    /// Count or list the J-admissible elements.
    Admissible {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        list: bool,
    },
    /// Both factorizations of an admissible element.
    Decompose(ElementArgs),
    /// Cells meeting the closure of a Hessenberg–Schubert cell.
    Closure {
        #[command(flatten)]
        element: ElementArgs,
        /// Emit the containment Hasse diagram as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Smoothness of the Hessenberg variety at the fixed point ẇB.
    FixedPointSmooth(ElementArgs),
    /// Smoothness of the Hessenberg–Schubert variety of w.
    HessSchubertSmooth(ElementArgs),
    /// Subsets K with ẏ_K B singular in the Peterson variety.
    PetersonSingularLocus {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
    },
    /// Number of smooth permutation flags in Hess(X_μ).
    CountSmooth {
        #[arg(long)]
        mu: String,
    },
    /// Class of the Hessenberg–Schubert variety of w.
    Class {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value_t = FormArg::Cohomology)]
        form: FormArg,
        /// Expand as a polynomial in x_1, …, x_n (type A cohomology).
        #[arg(long)]
        expand: bool,
    },
    /// Type-A Jacobian at ẇB, or at u1·ẇB with `--u1`.
    Oracle {
        #[command(flatten)]
        element: ElementArgs,
        /// Unipotent upper-triangular matrix as JSON rows of integers or
        /// rational strings, e.g. `[[1,"1/2"],[0,1]]`.
        #[arg(long)]
        u1: Option<String>,
        #[arg(long, value_enum, default_value_t = SemisimpleArg::Centered)]
        semisimple: SemisimpleArg,
        #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_BOUND)]
        max_n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        max_rank: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(hessvar_core::Error),
    Other(anyhow::Error),
    Verification(String),
}

impl From<hessvar_core::Error> for Failure {
    fn from(e: hessvar_core::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<hessvar_core::Error>() {
            Ok(d) => Failure::Domain(d),
            Err(e) => Failure::Other(e),
        }
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}');
    t.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.trim_start_matches(['a', 's']).parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(usage(format!("bad simple root index `{p}` in `{s}`"))),
        })
        .collect()
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    s.parse().map_err(usage)
}

impl ConfigArgs {
    fn resolve(&self) -> Result<HessConfig, Failure> {
        let family = parse_family(&self.family)?;
        if let Some(mu) = &self.mu {
            if family != Family::A {
                return Err(usage("--mu requires --family A"));
            }
            if self.j.is_some() {
                return Err(usage("give either --mu or --J, not both"));
            }
            let mu: Composition = mu.parse()?;
            if let Some(r) = self.rank {
                if r + 1 != mu.n() {
                    return Err(usage(format!("--rank {r} does not match a composition of {}", mu.n())));
                }
            }
            return Ok(HessConfig::type_a(&mu)?);
        }
        let rank = self.rank.ok_or_else(|| usage("--rank is required unless --mu is given"))?;
        let j = parse_list(self.j.as_deref().ok_or_else(|| usage("--J or --mu is required"))?)?;
        Ok(HessConfig::new(RootSystem::new(family, rank)?, &j)?)
    }
}

fn parse_element(rs: &RootSystem, s: &str) -> Result<WeylElement, Failure> {
    let t = s.trim();
    let one_line = rs.family() == Family::A
        && (t.starts_with('[') || (t.len() == rs.rank() + 1 && t.len() > 1 && t.bytes().all(|b| b.is_ascii_digit())));
    if one_line {
        let p = parse_one_line(t)?;
        return Ok(WeylElement::from_one_line(rs, &p)?);
    }
    Ok(WeylElement::from_word(rs, &parse_word(t)?)?)
}

impl ElementArgs {
    fn resolve(&self) -> Result<(HessConfig, WeylElement), Failure> {
        let cfg = self.config.resolve()?;
        let w = parse_element(cfg.rs(), &self.w)?;
        Ok((cfg, w))
    }
}

fn envelope(command: &str, config: Value, payload: Value, criteria: Option<&[&str]>) -> Value {
    let mut out = json!({ "command": command, "config": config });
    if let Value::Object(fields) = payload {
        for (k, v) in fields {
            out[k] = v;
        }
    }
    if let Some(c) = criteria {
        out["criteria"] = json!(c);
    }
    out
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn type_a_input(cfg: &HessConfig, w: &WeylElement) -> Result<(Vec<usize>, Composition), Failure> {
    let mu = cfg.mu().cloned().ok_or(hessvar_core::Error::NotTypeA)?;
    Ok((w.to_one_line(cfg.rs())?, mu))
}

fn parse_rational(v: &Value) -> Result<BigRational, Failure> {
    let bad = || usage(format!("bad matrix entry {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(|k| BigRational::from_integer(BigInt::from(k))).ok_or_else(bad),
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                    let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                    if b == BigInt::from(0) {
                        return Err(bad());
                    }
                    Ok(BigRational::new(a, b))
                }
                None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            }
        }
        _ => Err(bad()),
    }
}

fn parse_matrix(s: &str) -> Result<Matrix, Failure> {
    let v: Value = serde_json::from_str(s).map_err(|e| usage(format!("--u1 is not JSON: {e}")))?;
    let rows = v.as_array().ok_or_else(|| usage("--u1 must be an array of rows"))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| usage("--u1 rows must be arrays"))?
                .iter()
                .map(parse_rational)
                .collect()
        })
        .collect()
}

fn run(cli: &Cli) -> Out {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match &cli.command {
        Command::Admissible { config, list } => {
            let cfg = config.resolve()?;
            let mut cache = cache::RepCache::open(cli.cache.as_deref())?;
            let (reps, hit) = cache.coset_reps(&cfg, cli.bound)?;
            cache.save()?;
            let rs = cfg.rs();
            let mut elems = hess::admissible_from_reps(&cfg, &reps, exec)?;
            elems.sort_by_key(|w| (w.length(rs), w.word(rs)));
            if cli.format == Format::Tsv {
                let mut out = String::from("word\tone_line\tdim\n");
                for w in &elems {
                    let line = w.to_one_line(rs).map(|p| format_one_line(&p)).unwrap_or_default();
                    out += &format!("{}\t{}\t{}\n", w.word_string(rs), line, w.descents().len());
                }
                return Ok(out);
            }
            let mut payload = json!({ "count": elems.len(), "cache_hit": hit });
            if *list {
                let items: Vec<Value> = elems
                    .iter()
                    .map(|w| {
                        let mut e = json::element(rs, w);
                        e["dim"] = json!(w.descents().len());
                        e
                    })
                    .collect();
                payload["elements"] = json!(items);
            }
            Ok(render(&envelope("admissible", json::config(&cfg), payload, None)))
        }
        Command::Decompose(args) => {
            let (cfg, w) = args.resolve()?;
            let rs = cfg.rs();
            let d = decompose_admissible(&w, &cfg)?;
            let payload = json!({
                "w": json::element(rs, &d.w),
                "k": json::one_based(&d.k),
                "y": json::element(rs, &d.y),
                "v": json::element(rs, &d.v),
                "delta_v": json::one_based(&d.delta_v),
                "des": json::one_based(&d.des),
                "y_des": json::element(rs, &d.y_des),
                "tau": json::element(rs, &d.tau),
                "jw": json::one_based(&d.jw),
                "levi_components": d.levi_components,
                "cell_dimension": hess::cell_dimension(&w, &cfg)?,
            });
            Ok(render(&envelope("decompose", json::config(&cfg), payload, None)))
        }
        Command::Closure { element, dot } => {
            let (cfg, w) = element.resolve()?;
            let rs = cfg.rs();
            let cells = closure_intersecting_cells(&w, &cfg, cli.bound)?;
            let edges = containment_hasse(&cells, &cfg)?;
            if *dot {
                let mut out = String::from("digraph closure {\n  rankdir=BT;\n");
                for (i, c) in cells.iter().enumerate() {
                    out += &format!("  n{i} [label=\"{} (dim {})\"];\n", c.v.word_string(rs), c.dim);
                }
                for (a, b) in &edges {
                    out += &format!("  n{a} -> n{b};\n");
                }
                out += "}\n";
                return Ok(out);
            }
            if cli.format == Format::Tsv {
                let mut out = String::from("v\tx\tdim\n");
                for c in &cells {
                    out += &format!("{}\t{}\t{}\n", c.v.word_string(rs), c.x.word_string(rs), c.dim);
                }
                return Ok(out);
            }
            let items: Vec<Value> = cells
                .iter()
                .map(|c| json!({ "v": json::element(rs, &c.v), "x": json::element(rs, &c.x), "dim": c.dim }))
                .collect();
            let payload = json!({
                "w": json::element(rs, &w),
                "cells": items,
                "hasse_edges": edges.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            });
            Ok(render(&envelope("closure", json::config(&cfg), payload, None)))
        }
        Command::FixedPointSmooth(args) => {
            let (cfg, w) = args.resolve()?;
            let v = singular::hess_fixed_point_smooth(&w, &cfg)?;
            let mut payload = json::smoothness(&v);
            payload["w"] = json::element(cfg.rs(), &w);
            Ok(render(&envelope("fixed-point-smooth", json::config(&cfg), payload, Some(&v.criteria))))
        }
        Command::HessSchubertSmooth(args) => {
            let (cfg, w) = args.resolve()?;
            let v = singular::hess_schubert_smooth(&w, &cfg)?;
            let mut payload = json::smoothness(&v);
            payload["w"] = json::element(cfg.rs(), &w);
            Ok(render(&envelope("hess-schubert-smooth", json::config(&cfg), payload, Some(&v.criteria))))
        }
        Command::PetersonSingularLocus { family, rank } => {
            let datum = CartanDatum::new(parse_family(family)?, *rank)?;
            let locus = singular::peterson_singular_locus(&datum, cli.bound)?;
            if cli.format == Format::Tsv {
                let mut out = String::from("k\n");
                for k in &locus {
                    let s: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
                    out += &format!("{}\n", s.join(","));
                }
                return Ok(out);
            }
            let config = json!({ "family": datum.family().to_string(), "rank": rank, "j": json::one_based(&(0..*rank).collect::<Vec<_>>()) });
            let payload = json!({
                "count": locus.len(),
                "singular_k": locus.iter().map(|k| json::one_based(k)).collect::<Vec<_>>(),
            });
            let criteria = [singular::PETERSON_W_STAR];
            Ok(render(&envelope("peterson-singular-locus", config, payload, Some(&criteria))))
        }
        Command::CountSmooth { mu } => {
            let mu: Composition = mu.parse()?;
            let cfg = HessConfig::type_a(&mu)?;
            let payload = json!({ "count": singular::count_smooth_flags(&mu).to_string() });
            let criteria = [singular::LEVI_REDUCTION, singular::BLOCK_PATTERNS];
            Ok(render(&envelope("count-smooth", json::config(&cfg), payload, Some(&criteria))))
        }
        Command::Class { element, form, expand } => {
            let (cfg, w) = element.resolve()?;
            let form = match form {
                FormArg::Cohomology => Form::Cohomology,
                FormArg::KTheory => Form::KTheory,
            };
            let c = classes::hess_schubert_class(&w, &cfg, form)?;
            let mut payload = json::class(&c);
            payload["w"] = json::element(cfg.rs(), &w);
            if *expand {
                let p = classes::expand_type_a(&c, cfg.rs())?;
                payload["factored"] = json!(classes::factored_type_a(&c, cfg.rs())?);
                payload["polynomial"] = json::polynomial(&p);
            }
            Ok(render(&envelope("class", json::config(&cfg), payload, None)))
        }
        Command::Oracle {
            element,
            u1,
            semisimple,
            max_n,
        } => {
            let (cfg, w) = element.resolve()?;
            let (p, mu) = type_a_input(&cfg, &w)?;
            let opts = OracleOptions {
                bound: *max_n,
                semisimple: match semisimple {
                    SemisimpleArg::Centered => SemisimpleChoice::Centered,
                    SemisimpleArg::BlockIndex => SemisimpleChoice::BlockIndex,
                },
            };
            let mut payload = match u1 {
                None => json::jacobian(p.len(), &oracle::jacobian_at_fixed_point(&p, &mu, &opts)?),
                Some(m) => {
                    let u1 = parse_matrix(m)?;
                    let r = oracle::jacobian_at_cell_point(&p, &mu, &u1, &opts)?;
                    let mut out = json::jacobian(p.len(), &r.jacobian);
                    out["note"] = json!(r.note);
                    out
                }
            };
            payload["w"] = json::element(cfg.rs(), &w);
            Ok(render(&envelope("oracle", json::config(&cfg), payload, Some(&["jacobian_rank"]))))
        }
        Command::Verify { suite, max_rank } => {
            let r = max_rank.unwrap_or_else(|| verify::default_max_rank(*suite));
            let report = verify::run(*suite, r, exec);
            let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            if report.passed {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn error_json(kind: &str, message: String) -> String {
    serde_json::to_string(&json!({ "error": { "kind": kind, "message": message } })).expect("serializable")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let mut stdout = std::io::stdout().lock();
    match run(&cli) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(3)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", error_json(json::error_kind(&e), e.to_string()));
            ExitCode::from(1)
        }
        Err(Failure::Other(e)) => {
            eprintln!("{}", error_json("io", format!("{e:#}")));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", error_json("usage", msg));
            ExitCode::from(2)
        }
    }
}
