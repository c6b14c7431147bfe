use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qwl_core::bijections::{omega, psi, psi_inverse};
use qwl_core::characters::{chi_lambda0_truncated, chi_via_csf, chi_via_csf_stable, modified_macdonald, schur, whittaker, Method};
use qwl_core::clbasis::b_stat;
use qwl_core::fillings::{Filling, Stat};
use qwl_core::lattice::{build_ensemble, declutter, render};
use qwl_core::par::Exec;
use qwl_core::patterns::Pop;
use qwl_core::qpoly::QXPoly;
use qwl_core::shapes::Partition;
use qwl_core::splice::dsplice_traced;
use qwl_core::verify::{run_suite, Bounds, STABILIZATION_CAP, SUITES};

#[derive(Parser)]
#[command(name = "qwl", version, about = "Exact q-Whittaker combinatorics")]
struct Cli {
    /// Run every sweep on the current thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Whittaker,
    Schur,
    Macdonald,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Forward,
    Inverse,
    Omega,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand a symmetric polynomial in monomials.
    Expand {
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long)]
        n: usize,
        /// inv, quinv or fermionic (macdonald accepts inv or quinv)
        #[arg(long, default_value = "inv")]
        method: String,
        #[arg(long, value_enum, default_value = "whittaker")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// Apply psi, its inverse, or the involution omega to JSON input.
    Bijection {
        #[arg(long, default_value = "quinv")]
        stat: String,
        #[arg(long, value_enum, default_value = "forward")]
        dir: Dir,
        /// JSON file, or - for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Delete the largest entry and splice back to a partition shape.
    Dsplice {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        trace: bool,
    },
    /// Print the CL-basis words of a filling.
    Clword {
        #[arg(long, default_value = "-")]
        input: String,
        /// inv or quinv; both when omitted
        #[arg(long)]
        stat: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// Draw the lattice-path diagram of a filling.
    Render {
        #[arg(long, default_value = "-")]
        input: String,
        /// svg or text
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop the type-III segments first.
        #[arg(long)]
        declutter: bool,
    },
    /// Compare the truncated limit character from both sides.
    Limit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        qmax: usize,
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Partition>,
        /// Sum layers up to this K instead of stopping at the first empty one.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Run an exhaustive identity suite.
    Verify {
        /// Suite name, or "all".
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn parse_shape(s: &str) -> std::result::Result<Partition, String> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_filling(path: &str) -> Result<Filling> {
    serde_json::from_str(&read_input(path)?).context("parsing filling JSON")
}

fn read_pop(path: &str) -> Result<Pop> {
    serde_json::from_str(&read_input(path)?).context("parsing POP JSON")
}

fn parse_stat(s: &str) -> Result<Stat> {
    Ok(s.parse()?)
}

fn poly_value(p: &QXPoly) -> Value {
    serde_json::to_value(p.to_json_terms()).expect("terms serialize")
}

/// `Ok(false)` means an identity failed; the witness is already on stderr.
fn run(cli: Cli) -> Result<bool> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match cli.cmd {
        Cmd::Expand { shape, n, method, kind, format } => {
            let p = match kind {
                Kind::Whittaker => whittaker(&shape, n, method.parse::<Method>()?, exec),
                Kind::Schur => schur(&shape, n),
                Kind::Macdonald => modified_macdonald(&shape, n, parse_stat(&method)?, exec),
            };
            match format {
                Output::Text => println!("{p}"),
                Output::Json => println!("{}", poly_value(&p)),
            }
        }
        Cmd::Bijection { stat, dir, input } => {
            let stat = parse_stat(&stat)?;
            let out = match dir {
                Dir::Forward => serde_json::to_value(psi(&read_filling(&input)?, stat)?)?,
                Dir::Inverse => serde_json::to_value(psi_inverse(&read_pop(&input)?, stat)?)?,
                Dir::Omega => serde_json::to_value(omega(&read_filling(&input)?)?)?,
            };
            println!("{out}");
        }
        Cmd::Dsplice { input, trace } => {
            let (g, steps) = dsplice_traced(&read_filling(&input)?)?;
            if trace {
                println!("{}", json!({ "result": g, "steps": steps }));
            } else {
                println!("{}", serde_json::to_value(&g)?);
            }
        }
        Cmd::Clword { input, stat, format } => {
            let f = read_filling(&input)?;
            let stats = match stat {
                Some(s) => vec![parse_stat(&s)?],
                None => vec![Stat::Inv, Stat::Quinv],
            };
            for s in stats {
                let w = b_stat(&f, s)?;
                match format {
                    Output::Text => println!("{}: {}", s.name(), w.render()),
                    Output::Json => println!("{}", json!({ "stat": s.name(), "word": w })),
                }
            }
        }
        Cmd::Render { input, format, out, declutter: dc } => {
            let mut e = build_ensemble(&read_filling(&input)?)?;
            if dc {
                e = declutter(&e);
            }
            let s = render(&e, &format)?;
            match out {
                Some(path) => fs::write(&path, s).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{s}"),
            }
        }
        Cmd::Limit { n, qmax, shape, kmax } => {
            let lambda = shape.unwrap_or_else(Partition::empty);
            let expected = chi_lambda0_truncated(n, qmax);
            let (got, k) = match kmax {
                Some(k) => (chi_via_csf(&lambda, n, k, qmax, exec)?, k),
                None => chi_via_csf_stable(&lambda, n, qmax, STABILIZATION_CAP, exec)?,
            };
            let diff = &got - &expected;
            println!("theta/eta: {expected}");
            println!("csf (K = {k}): {got}");
            println!("diff: {diff}");
            if !diff.is_zero() {
                let w = json!({ "n": n, "qmax": qmax, "shape": lambda.parts(), "k": k, "diff": poly_value(&diff) });
                eprintln!("{w}");
                return Ok(false);
            }
        }
        Cmd::Verify { suite, max_cells, max_n } => {
            let bounds = Bounds { max_cells, max_n };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            for name in names {
                let r = run_suite(name, bounds, exec)?;
                match &r.counterexample {
                    None => println!("PASS {} ({} cases)", r.suite, r.cases),
                    Some(c) => {
                        println!("FAIL {} ({})", r.suite, c.check);
                        eprintln!("{}", serde_json::to_string(c)?);
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
