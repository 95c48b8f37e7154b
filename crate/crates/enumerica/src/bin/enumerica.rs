//! Command-line front end: every computation in the library, with
//! reproducible seeding and machine-readable output.
//!
//! Exit codes: 0 on success, 1 on a computation error (including
//! cross-method disagreement), 2 on a usage error.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use enumerica::gw::{
    self, big_quantum_product, format_small_product, small_quantum_product, CohBasis, Target,
};
use enumerica::scalar::format_rational;
use enumerica::series::SuperSeries;
use enumerica::{cells, chern, localization, schubert};
use serde::Serialize;
use serde_json::{json, Value};
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 20_260_808;

#[derive(Parser)]
#[command(
    name = "enumerica",
    version,
    about = "Exact enumerative geometry: line counts, Schubert cells, curve counts, quantum products",
    propagate_version = true
)]
struct Cli {
    /// Emit a JSON record instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LineMethod {
    Schubert,
    Localization,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Recursion,
    Wdvv,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    /// Projective space (needs --n)
    #[value(name = "p^n", alias = "pn")]
    Projective,
    /// Grassmannian (needs --k and --n)
    Gr,
    /// Complete flag variety (needs --n)
    Flag,
    /// The 2-torus
    Torus,
    /// Genus-g surface via Morse cell counts (needs --g)
    #[value(name = "sigma_g", alias = "sigma-g")]
    SigmaG,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    P1,
    P2,
    #[value(name = "sigma_g", alias = "sigma-g")]
    SigmaG,
}

#[derive(Subcommand)]
enum Command {
    /// Lines on the degree-(2n-5) hypersurface in projective (n-1)-space
    Lines {
        /// Ambient vector-space dimension (n >= 3; n=4 is the cubic surface)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "both")]
        method: LineMethod,
        /// Random weight vectors for the localization engine
        #[arg(long, default_value_t = 5)]
        trials: u32,
        /// Seed for the weight generator (default: ENUMERICA_SEED or a fixed constant)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Rational plane curve counts N_1..N_dmax
    Kontsevich {
        #[arg(long)]
        dmax: u32,
        #[arg(long, value_enum, default_value = "recursion")]
        method: CountMethod,
    },
    /// Betti numbers of a Grassmannian
    Betti {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Euler characteristic of a named space
    Euler {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        g: Option<u32>,
    },
    /// Schubert cells of a Grassmannian with their dimensions
    Cells {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Quantum product of two basis classes
    #[command(group(ArgGroup::new("kind").required(true).args(["big", "small"])))]
    Qh {
        #[arg(long, value_enum)]
        space: TargetArg,
        /// Genus, for sigma-g
        #[arg(long)]
        g: Option<u32>,
        /// Big quantum product (third partials of the potential)
        #[arg(long)]
        big: bool,
        /// Small quantum product (three-point invariants)
        #[arg(long)]
        small: bool,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 8)]
        t_order: u32,
        #[arg(long, default_value_t = 2)]
        q_order: u32,
    },
    /// Genus-0 potential as a truncated series
    Potential {
        #[arg(long, value_enum)]
        space: TargetArg,
        #[arg(long)]
        g: Option<u32>,
        #[arg(long, default_value_t = 8)]
        t_order: u32,
        #[arg(long, default_value_t = 2)]
        q_order: u32,
    },
    /// Associativity residual of the plane potential
    Wdvv {
        #[arg(long, value_enum)]
        space: TargetArg,
        #[arg(long, default_value_t = 4)]
        q_order: u32,
        /// Four basis indices i,j,k,l
        #[arg(long, value_delimiter = ',', default_value = "1,1,2,2")]
        indices: Vec<usize>,
    },
    /// Chern classes: symmetric powers of a rank-2 bundle, or hypersurface tangent bundles
    #[command(group(ArgGroup::new("mode").required(true).args(["sym", "hypersurface"])))]
    Chern {
        /// Symmetric power degree d (use with --i)
        #[arg(long, requires = "i")]
        sym: Option<u32>,
        /// Chern class index for --sym
        #[arg(long)]
        i: Option<u32>,
        /// Ambient dimension and hypersurface degree, as r,d
        #[arg(long, value_delimiter = ',')]
        hypersurface: Option<Vec<u32>>,
    },
}

/// One fully reproducible computation record.
#[derive(Serialize)]
struct OutputRecord {
    command: String,
    inputs: Value,
    method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    result: Value,
}

fn emit(record: &OutputRecord, json: bool, text: String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(record).expect("record serializes")
        );
    } else {
        println!("{text}");
    }
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ENUMERICA_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn series_json(s: &SuperSeries) -> Value {
    let terms: Vec<Value> = s
        .term_records()
        .iter()
        .map(|t| {
            json!({
                "monomial": t.monomial,
                "exponents": t.exponents,
                "q": t.q,
                "numerator": t.numerator,
                "denominator": t.denominator,
            })
        })
        .collect();
    json!({
        "truncation": { "t_degree": s.truncation().t_degree, "q_power": s.truncation().q_power },
        "terms": terms,
    })
}

fn parse_target(space: TargetArg, g: Option<u32>) -> Result<Target, String> {
    match space {
        TargetArg::P1 => Ok(Target::P1),
        TargetArg::P2 => Ok(Target::P2),
        TargetArg::SigmaG => {
            let genus = g.ok_or("sigma-g needs --g")?;
            if genus == 0 {
                return Err("genus must be positive; use p1 for genus zero".into());
            }
            Ok(Target::Surface { genus })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Lines {
            n,
            method,
            trials,
            seed,
        } => {
            if n < 3 {
                return usage("lines needs --n >= 3");
            }
            if trials < 2 {
                return usage("lines needs --trials >= 2");
            }
            let seed = resolve_seed(seed);
            let degree = 2 * n - 5;
            let schubert_count = match method {
                LineMethod::Schubert | LineMethod::Both => {
                    Some(schubert::lines_on_hypersurface(n))
                }
                LineMethod::Localization => None,
            };
            let localization_count = match method {
                LineMethod::Localization | LineMethod::Both => {
                    match localization::lines_via_localization(n, trials, seed) {
                        Ok(v) => Some(v),
                        Err(e) => return fail(&e.to_string()),
                    }
                }
                LineMethod::Schubert => None,
            };
            let agree = match (&schubert_count, &localization_count) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            let method_name = match method {
                LineMethod::Schubert => "schubert",
                LineMethod::Localization => "localization",
                LineMethod::Both => "both",
            };
            let mut result = serde_json::Map::new();
            result.insert("degree".into(), json!(degree));
            if let Some(v) = &schubert_count {
                result.insert("schubert".into(), json!(v.to_string()));
            }
            if let Some(v) = &localization_count {
                result.insert("localization".into(), json!(v.to_string()));
            }
            if let Some(a) = agree {
                result.insert("agree".into(), json!(a));
            }
            let record = OutputRecord {
                command: "lines".into(),
                inputs: json!({ "n": n, "method": method_name, "trials": trials }),
                method: Some(method_name.into()),
                seed: localization_count.as_ref().map(|_| seed),
                result: Value::Object(result),
            };
            let mut text = format!("lines on a degree-{degree} hypersurface in P^{}:", n - 1);
            if let Some(v) = &schubert_count {
                text.push_str(&format!("\n  schubert:     {v}"));
            }
            if let Some(v) = &localization_count {
                text.push_str(&format!(
                    "\n  localization: {v}  (trials={trials}, seed={seed})"
                ));
            }
            if let Some(a) = agree {
                text.push_str(&format!("\n  agree: {a}"));
            }
            emit(&record, cli.json, text);
            if agree == Some(false) {
                return fail("engines disagree");
            }
            ExitCode::SUCCESS
        }
        Command::Kontsevich { dmax, method } => {
            if dmax < 1 {
                return usage("kontsevich needs --dmax >= 1");
            }
            let recursion = match method {
                CountMethod::Recursion | CountMethod::Both => Some(gw::kontsevich(dmax)),
                CountMethod::Wdvv => None,
            };
            let wdvv = match method {
                CountMethod::Wdvv | CountMethod::Both => Some(gw::recursion_from_wdvv(dmax)),
                CountMethod::Recursion => None,
            };
            let agree = match (&recursion, &wdvv) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            let method_name = match method {
                CountMethod::Recursion => "recursion",
                CountMethod::Wdvv => "wdvv",
                CountMethod::Both => "both",
            };
            let primary = recursion.as_ref().or(wdvv.as_ref()).expect("one engine ran");
            let values: Vec<String> = primary.values().iter().map(|v| v.to_string()).collect();
            let mut result = serde_json::Map::new();
            result.insert("values".into(), json!(values));
            if let Some(a) = agree {
                result.insert("agree".into(), json!(a));
            }
            let record = OutputRecord {
                command: "kontsevich".into(),
                inputs: json!({ "dmax": dmax, "method": method_name }),
                method: Some(method_name.into()),
                seed: None,
                result: Value::Object(result),
            };
            let mut text = String::new();
            for (d, v) in primary.values().iter().enumerate() {
                text.push_str(&format!("N_{} = {v}\n", d + 1));
            }
            match agree {
                Some(a) => text.push_str(&format!("engines agree: {a}")),
                None => {
                    text.pop();
                }
            }
            emit(&record, cli.json, text);
            if agree == Some(false) {
                return fail("recursion and associativity solutions disagree");
            }
            ExitCode::SUCCESS
        }
        Command::Betti { k, n } => {
            if !(k >= 1 && k < n) {
                return usage("betti needs 1 <= k < n");
            }
            let b = cells::betti(k, n);
            let record = OutputRecord {
                command: "betti".into(),
                inputs: json!({ "k": k, "n": n }),
                method: None,
                seed: None,
                result: json!({ "betti": b }),
            };
            let text = format!(
                "even Betti numbers b_0, b_2, ..., b_{} of Gr({k},{n}): {:?}",
                2 * k * (n - k),
                b
            );
            emit(&record, cli.json, text);
            ExitCode::SUCCESS
        }
        Command::Euler { space, n, k, g } => {
            let (label, chi): (String, i64) = match space {
                SpaceArg::Projective => {
                    let n = match n {
                        Some(n) => n,
                        None => return usage("euler --space p^n needs --n"),
                    };
                    (
                        format!("P^{n}"),
                        localization::euler_char(localization::Space::Projective(n)) as i64,
                    )
                }
                SpaceArg::Gr => {
                    let (k, n) = match (k, n) {
                        (Some(k), Some(n)) if k >= 1 && k < n => (k, n),
                        _ => return usage("euler --space gr needs --k and --n with 1 <= k < n"),
                    };
                    (
                        format!("Gr({k},{n})"),
                        localization::euler_char(localization::Space::Grassmannian(k, n)) as i64,
                    )
                }
                SpaceArg::Flag => {
                    let n = match n {
                        Some(n) if n >= 1 => n,
                        _ => return usage("euler --space flag needs --n >= 1"),
                    };
                    (
                        format!("Fl({n})"),
                        localization::euler_char(localization::Space::Flag(n)) as i64,
                    )
                }
                SpaceArg::Torus => (
                    "T^2".into(),
                    localization::euler_char(localization::Space::Torus) as i64,
                ),
                SpaceArg::SigmaG => {
                    let g = match g {
                        Some(g) => g,
                        None => return usage("euler --space sigma_g needs --g"),
                    };
                    let morse = cells::CellDecomposition::surface_morse(g);
                    (
                        format!("Sigma_{g}"),
                        cells::euler_from_cells(&morse, cells::CellMode::Real),
                    )
                }
            };
            let record = OutputRecord {
                command: "euler".into(),
                inputs: json!({ "space": label }),
                method: None,
                seed: None,
                result: json!({ "chi": chi }),
            };
            emit(&record, cli.json, format!("chi({label}) = {chi}"));
            ExitCode::SUCCESS
        }
        Command::Cells { k, n } => {
            if !(k >= 1 && k < n) {
                return usage("cells needs 1 <= k < n");
            }
            let pts = localization::fixed_points(k, n);
            let listing: Vec<Value> = pts
                .iter()
                .map(|fp| {
                    json!({
                        "subset": fp.indices(),
                        "dimension": cells::cell_dimension(fp),
                    })
                })
                .collect();
            let decomposition = cells::CellDecomposition::grassmannian(k, n);
            let chi = cells::euler_from_cells(&decomposition, cells::CellMode::Complex);
            let record = OutputRecord {
                command: "cells".into(),
                inputs: json!({ "k": k, "n": n }),
                method: None,
                seed: None,
                result: json!({
                    "cells": listing,
                    "counts_by_dimension": decomposition.counts(),
                    "euler_characteristic": chi,
                }),
            };
            let mut text = format!("Schubert cells of Gr({k},{n}):\n");
            for fp in &pts {
                text.push_str(&format!(
                    "  {:?} -> dimension {}\n",
                    fp.indices(),
                    cells::cell_dimension(fp)
                ));
            }
            text.push_str(&format!(
                "counts by dimension: {:?}\nchi = {chi}",
                decomposition.counts()
            ));
            emit(&record, cli.json, text);
            ExitCode::SUCCESS
        }
        Command::Qh {
            space,
            g,
            big,
            small,
            i,
            j,
            t_order,
            q_order,
        } => {
            let _ = big;
            let target = match parse_target(space, g) {
                Ok(t) => t,
                Err(e) => return usage(&e),
            };
            let basis = CohBasis::new(target);
            if i >= basis.rank() || j >= basis.rank() {
                return usage(&format!(
                    "basis indices run from 0 to {} for {target}",
                    basis.rank() - 1
                ));
            }
            if small {
                let terms = match small_quantum_product(&basis, i, j) {
                    Ok(t) => t,
                    Err(e) => return fail(&e.to_string()),
                };
                let term_values: Vec<Value> = terms
                    .iter()
                    .map(|t| {
                        json!({
                            "coeff": format_rational(&t.coeff),
                            "q": t.q_power,
                            "basis_index": t.basis_index,
                            "basis_label": basis.label(t.basis_index),
                        })
                    })
                    .collect();
                let text = format!(
                    "small product T{i} * T{j} on {target}: {}",
                    format_small_product(&terms)
                );
                let record = OutputRecord {
                    command: "qh".into(),
                    inputs: json!({ "space": target.to_string(), "i": i, "j": j, "kind": "small" }),
                    method: None,
                    seed: None,
                    result: json!({ "terms": term_values }),
                };
                emit(&record, cli.json, text);
                ExitCode::SUCCESS
            } else {
                let phi = gw::potential(target, t_order, q_order);
                let product = big_quantum_product(&basis, &phi, i, j);
                let mut dual = Vec::new();
                let mut on_basis = Vec::new();
                let mut lines = Vec::new();
                for k in 0..basis.rank() {
                    dual.push(json!({
                        "dual_index": k,
                        "series": series_json(product.dual_coefficient(k)),
                    }));
                    let series = product.basis_coefficient(&basis, k);
                    if !series.is_zero() {
                        lines.push(format!("  ({series}) * T{k}   [{}]", basis.label(k)));
                    }
                    on_basis.push(json!({
                        "basis_index": k,
                        "series": series_json(&series),
                    }));
                }
                if lines.is_empty() {
                    lines.push("  0".to_string());
                }
                let text = format!(
                    "big product T{i} * T{j} on {target} (t-order {t_order}, q-order {q_order}):\n{}",
                    lines.join("\n")
                );
                let record = OutputRecord {
                    command: "qh".into(),
                    inputs: json!({
                        "space": target.to_string(), "i": i, "j": j, "kind": "big",
                        "t_order": t_order, "q_order": q_order,
                    }),
                    method: None,
                    seed: None,
                    result: json!({ "on_dual_basis": dual, "on_basis": on_basis }),
                };
                emit(&record, cli.json, text);
                ExitCode::SUCCESS
            }
        }
        Command::Potential {
            space,
            g,
            t_order,
            q_order,
        } => {
            let target = match parse_target(space, g) {
                Ok(t) => t,
                Err(e) => return usage(&e),
            };
            let phi = gw::potential(target, t_order, q_order);
            let record = OutputRecord {
                command: "potential".into(),
                inputs: json!({
                    "space": target.to_string(), "t_order": t_order, "q_order": q_order,
                }),
                method: None,
                seed: None,
                result: series_json(&phi),
            };
            let text = format!(
                "genus-0 potential of {target} (t-order {t_order}, q-order {q_order}):\n  {phi}"
            );
            emit(&record, cli.json, text);
            ExitCode::SUCCESS
        }
        Command::Wdvv {
            space,
            q_order,
            indices,
        } => {
            if space != TargetArg::P2 {
                return usage("the associativity residual is exposed for --space p2");
            }
            let idx: [usize; 4] = match <[usize; 4]>::try_from(indices) {
                Ok(x) => x,
                Err(_) => return usage("--indices needs exactly four values"),
            };
            if idx.iter().any(|&x| x > 2) {
                return usage("plane basis indices run from 0 to 2");
            }
            let residual = gw::plane_wdvv_residual(q_order, idx);
            let is_zero = residual.is_zero();
            let record = OutputRecord {
                command: "wdvv".into(),
                inputs: json!({ "space": "P2", "q_order": q_order, "indices": idx }),
                method: Some("wdvv".into()),
                seed: None,
                result: json!({
                    "residual": series_json(&residual),
                    "is_zero": is_zero,
                }),
            };
            let text = format!(
                "associativity residual at indices {idx:?}, q-order {q_order}: {}",
                if is_zero {
                    "0 (identity holds)".to_string()
                } else {
                    residual.to_string()
                }
            );
            emit(&record, cli.json, text);
            ExitCode::SUCCESS
        }
        Command::Chern {
            sym,
            i,
            hypersurface,
        } => {
            if let Some(d) = sym {
                let i = i.expect("clap enforces --i with --sym");
                if d < 1 || i > d + 1 {
                    return usage(&format!(
                        "need d >= 1 and 0 <= i <= d+1 (rank of the symmetric power), got d={d} i={i}"
                    ));
                }
                let p = chern::sym_chern(d, i);
                let terms: Vec<Value> = p
                    .terms()
                    .map(|(&(e1, e2), c)| {
                        json!({ "c1": e1, "c2": e2, "coefficient": c.to_string() })
                    })
                    .collect();
                let record = OutputRecord {
                    command: "chern".into(),
                    inputs: json!({ "sym": d, "i": i }),
                    method: None,
                    seed: None,
                    result: json!({ "terms": terms, "text": p.to_string() }),
                };
                emit(&record, cli.json, format!("c_{i}(Sym^{d} E) = {p}"));
                ExitCode::SUCCESS
            } else {
                let rd = hypersurface.expect("clap enforces one mode");
                if rd.len() != 2 {
                    return usage("--hypersurface needs exactly r,d");
                }
                let (r, d) = (rd[0], rd[1]);
                if r < 2 || d < 1 {
                    return usage("hypersurface needs r >= 2 and d >= 1");
                }
                let c = chern::hypersurface_tangent_chern(r, d);
                let coeffs: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
                let record = OutputRecord {
                    command: "chern".into(),
                    inputs: json!({ "hypersurface": { "r": r, "d": d } }),
                    method: None,
                    seed: None,
                    result: json!({ "coefficients": coeffs, "text": c.to_string() }),
                };
                emit(
                    &record,
                    cli.json,
                    format!("c(T Q) for a degree-{d} hypersurface in P^{r}: {c}"),
                );
                ExitCode::SUCCESS
            }
        }
    }
}
