//! The `einv` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::Catalog;
use crate::character::cc_copres;
use crate::copres::{enumerate_orbits, generic_copresentation, realize};
use crate::einvariant::{e_copres, pole_order, self_e_orbit};
use crate::error::{Error, Result};
use crate::harness::{run_all, run_suite, Suite, SuiteOptions, VerificationReport};
use crate::par::Exec;
use crate::quiver::{build_quiver, DynkinType, HeightFunction, Quiver, WVector};

pub const SCHEMA: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "einv", version, about = "E-invariants, cluster characters and their cross-checks for Dynkin quivers")]
pub struct Cli {
    /// Dynkin type, e.g. A3, D4, E6
    #[arg(long = "type", global = true, default_value = "A2")]
    pub ty: DynkinType,
    /// Height function as comma separated integers (default: bipartite)
    #[arg(long, global = true)]
    pub height: Option<HeightFunction>,
    /// Print JSON on stdout instead of tables on stderr
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run everything on the calling thread
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots in canonical order
    Roots,
    /// The indecomposable representation of every positive root
    Indecomposables,
    /// Pole orders o(w, w'), o(w', w) and d(w, w')
    E {
        #[arg(long)]
        w: WVector,
        #[arg(long)]
        w2: WVector,
    },
    /// Decomposition of the generic copresentation of X(w)
    Generic {
        #[arg(long)]
        w: WVector,
    },
    /// All orbits of X(w) with their codimension
    Orbits {
        #[arg(long)]
        w: WVector,
    },
    /// Cluster variables, clusters and the exchange graph
    ClusterVars,
    /// Cluster character of the generic copresentation of X(w)
    Cc {
        #[arg(long)]
        w: WVector,
    },
    /// Run one verification suite, or all of them
    Verify {
        suite: Option<String>,
        /// Bound on w: a single integer or "a1,..,an;b1,..,bn"
        #[arg(long = "box")]
        bound: Option<String>,
    },
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e @ (Error::InvalidType(_) | Error::InvalidHeight(_) | Error::Parse(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn quiver(cli: &Cli) -> Result<Quiver> {
    let h = cli.height.clone().unwrap_or_else(|| HeightFunction::bipartite(&cli.ty));
    build_quiver(cli.ty.clone(), h)
}

fn check_rank(q: &Quiver, w: &WVector) -> Result<()> {
    if w.rank() != q.rank() {
        return Err(Error::Parse(format!("w-vector {w} has {} entries per degree, expected {}", w.rank(), q.rank())));
    }
    Ok(())
}

fn parse_bound(q: &Quiver, s: &str) -> Result<WVector> {
    if let Ok(k) = s.trim().parse::<i64>() {
        if k < 0 {
            return Err(Error::Parse(format!("negative box bound {k}")));
        }
        return Ok(WVector::uniform(q.rank(), k));
    }
    let w: WVector = s.parse()?;
    check_rank(q, &w)?;
    Ok(w)
}

fn emit(cli: &Cli, body: Value, table: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) {
    if cli.json {
        let mut obj = serde_json::Map::new();
        obj.insert("schema".into(), json!(SCHEMA));
        if let Value::Object(m) = body {
            obj.extend(m);
        }
        println!("{}", Value::Object(obj));
    } else {
        let stderr = std::io::stderr();
        let mut lock = stderr.lock();
        let _ = table(&mut lock);
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let q = quiver(cli)?;
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default_for_build() };
    let cat = Catalog::new(&q, exec)?;
    let header = format!("{} with height {}", q.dynkin_type(), q.height());
    match &cli.command {
        Command::Roots => {
            let roots: Vec<Vec<i64>> = cat.roots().iter().map(|r| r.entries().to_vec()).collect();
            emit(cli, json!({ "type": q.dynkin_type().to_string(), "roots": roots }), |out| {
                writeln!(out, "{header}: {} positive roots", roots.len())?;
                for r in cat.roots() {
                    writeln!(out, "  {r}")?;
                }
                Ok(())
            });
        }
        Command::Indecomposables => {
            let reps: Vec<Value> = cat
                .roots()
                .iter()
                .zip(cat.indecomposables())
                .map(|(r, m)| json!({ "root": r.entries(), "representation": m.to_json(&q) }))
                .collect();
            emit(cli, json!({ "indecomposables": reps }), |out| {
                writeln!(out, "{header}")?;
                for (r, m) in cat.roots().iter().zip(cat.indecomposables()) {
                    writeln!(out, "M{r}")?;
                    for (a, &(i, j)) in q.arrows().iter().enumerate() {
                        writeln!(out, "  {} -> {}: {:?}", i + 1, j + 1, m.maps()[a])?;
                    }
                }
                Ok(())
            });
        }
        Command::E { w, w2 } => {
            check_rank(&q, w)?;
            check_rank(&q, w2)?;
            let (a, b) = (pole_order(&cat, w, w2)?, pole_order(&cat, w2, w)?);
            emit(cli, json!({ "o_wv": a, "o_vw": b, "d": a + b }), |out| {
                writeln!(out, "o(w, w') = {a}\no(w', w) = {b}\nd(w, w') = {}", a + b)
            });
        }
        Command::Generic { w } => {
            check_rank(&q, w)?;
            let phi = generic_copresentation(&cat, w)?;
            emit(cli, json!({ "w": w.to_string(), "summands": phi.to_json() }), |out| {
                writeln!(out, "phi({w}) = {phi}")
            });
        }
        Command::Orbits { w } => {
            check_rank(&q, w)?;
            let generic = generic_copresentation(&cat, w)?;
            let rows: Vec<(String, usize, bool, Value)> = enumerate_orbits(&cat, w)
                .into_iter()
                .map(|phi| {
                    let codim = self_e_orbit(&q, &realize(&cat, &phi)).dim();
                    debug_assert_eq!(codim, e_copres(&cat, &phi, &phi).dim());
                    (phi.to_string(), codim, phi == generic, json!(phi.to_json()))
                })
                .collect();
            let items: Vec<Value> = rows
                .iter()
                .map(|(_, c, g, s)| json!({ "summands": s, "codimension": c, "generic": g }))
                .collect();
            emit(cli, json!({ "w": w.to_string(), "orbits": items }), |out| {
                writeln!(out, "{} orbits in X({w})", rows.len())?;
                for (s, c, g, _) in &rows {
                    writeln!(out, "  codim {c:>3}{}  {s}", if *g { " *" } else { "  " })?;
                }
                Ok(())
            });
        }
        Command::ClusterVars => {
            let g = cat.graph()?;
            let body = serde_json::to_value(g.to_json()).expect("serializable graph");
            emit(cli, body, |out| {
                writeln!(out, "{header}: {} cluster variables, {} clusters", g.num_variables(), g.num_clusters())?;
                for (r, x) in g.roots().iter().zip(g.variables()) {
                    writeln!(out, "  x[{r}] = {x}")?;
                }
                Ok(())
            });
        }
        Command::Cc { w } => {
            check_rank(&q, w)?;
            let phi = generic_copresentation(&cat, w)?;
            let cc = cc_copres(&cat, &phi)?;
            emit(
                cli,
                json!({ "w": w.to_string(), "summands": phi.to_json(), "cc": cc.to_string() }),
                |out| writeln!(out, "phi({w}) = {phi}\nCC = {cc}"),
            );
        }
        Command::Verify { suite, bound } => {
            let mut opts = SuiteOptions::for_quiver(&q, cli.seed);
            if let Some(b) = bound {
                opts = opts.with_bound(parse_bound(&q, b)?);
            }
            let reports = match suite {
                None => run_all(&cat, &opts),
                Some(name) => {
                    let s = Suite::from_name(name).ok_or_else(|| {
                        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                        Error::Parse(format!("unknown suite {name:?}, expected one of {}", names.join(", ")))
                    })?;
                    vec![run_suite(&cat, s, &opts)]
                }
            };
            let ok = reports.iter().all(VerificationReport::ok);
            emit(
                cli,
                json!({ "type": q.dynkin_type().to_string(), "height": q.height().to_string(), "pass": ok, "reports": reports }),
                |out| print_reports(out, &header, &reports),
            );
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn print_reports(out: &mut dyn Write, header: &str, reports: &[VerificationReport]) -> std::io::Result<()> {
    writeln!(out, "{header}")?;
    for r in reports {
        writeln!(out, "{r}")?;
        for c in r.failures().take(10) {
            writeln!(out, "    FAIL {}: expected {}, got {}", c.case, c.expected, c.got)?;
        }
    }
    Ok(())
}
