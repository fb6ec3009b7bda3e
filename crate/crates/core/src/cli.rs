//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::charlib::{compare_fixture, dim_identity, leading_term_ok, verify_eigen, CharacterCache};
use crate::csop::{a_coeff, apply_delta1, b_coeffs, epsilon, required_pairs, schedule, Delta1Operator};
use crate::error::{Error, Result};
use crate::fixture::{load_fixture, Record, RecordKey};
use crate::repth::{freudenthal, weyl_dim, TensorOptions, DEFAULT_BUDGET};
use crate::rootsys::{Algebra, Weight};
use crate::zpoly::{parse_poly, ZPolynomial};

const NODE_ORDER: &str = "\
Weights are comma-separated Dynkin labels in Bourbaki node order. For E8 the
nodes are numbered 1-3-4-5-6-7-8 along the long chain with node 2 attached to
node 4, so 0,0,0,0,0,0,0,1 is the adjoint representation (dimension 248).

Exit status: 0 success, 1 domain error, 2 usage error, 3 tensor budget exceeded.";

#[derive(Debug, Parser)]
#[command(name = "weylchar", version, about = "Characters of simple Lie algebras as polynomials in the fundamental characters", after_help = NODE_ORDER)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest tensor-factor dimension a decomposition may traverse.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Root of the persistent character cache (defaults to $WEYLCHAR_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads (output does not depend on this).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix and its inverse.
    Cartan { algebra: String },
    /// Positive roots in simple-root coordinates and Dynkin labels.
    Roots { algebra: String },
    /// Weyl dimension of an irreducible representation.
    Dim { algebra: String, weight: String },
    /// Dominant weight multiplicities.
    Mult { algebra: String, weight: String },
    /// Decompose a tensor product of two irreducibles.
    Tensor { algebra: String, left: String, right: String },
    /// Excitation energy over the ground state.
    Epsilon {
        algebra: String,
        weight: String,
        /// Coupling, an integer or a fraction p/q.
        #[arg(long, default_value = "1")]
        kappa: String,
    },
    /// First-order coefficients of the operator.
    Bcoeffs { algebra: String },
    /// A second-order coefficient a[j,k] (one-based).
    Acoeff {
        algebra: String,
        j: usize,
        k: usize,
        /// Character records to use where a recursion is over budget.
        #[arg(long)]
        fixtures: Vec<PathBuf>,
    },
    /// Character polynomial of an irreducible representation.
    Char {
        algebra: String,
        weight: String,
        #[arg(long)]
        fixtures: Vec<PathBuf>,
    },
    /// Apply the operator to a polynomial.
    #[command(name = "delta1-apply")]
    Delta1Apply {
        algebra: String,
        poly: String,
        /// Operator records; missing entries are computed.
        #[arg(long)]
        operator: Vec<PathBuf>,
        #[arg(long)]
        fixtures: Vec<PathBuf>,
    },
    /// Check a character against the eigen-equation and dimension identity.
    Verify {
        algebra: String,
        weight: String,
        #[arg(long)]
        operator: Vec<PathBuf>,
        #[arg(long)]
        fixtures: Vec<PathBuf>,
    },
    /// Check every record of a fixture file.
    #[command(name = "fixtures-check")]
    FixturesCheck {
        file: PathBuf,
        algebra: String,
        #[arg(long)]
        operator: Vec<PathBuf>,
        #[arg(long)]
        fixtures: Vec<PathBuf>,
        /// Skip recomputing records.
        #[arg(long)]
        no_recompute: bool,
    },
}

/// Runs the command line `argv` (including the program name) and returns the
/// exit status.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(usize::from(t)).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Failure::Domain(e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok(Output { text, failed }) => {
            let _ = out.write_all(text.as_bytes());
            i32::from(failed)
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

struct Output {
    text: String,
    /// Some check failed; exit 1 after printing.
    failed: bool,
}

enum Failure {
    Usage(String),
    Domain(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(msg),
            Error::UnknownType(_) | Error::RankOutOfRange { .. } | Error::Syntax { .. } => Failure::Usage(msg),
            _ => Failure::Domain(msg),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

struct Ctx<'a> {
    cli: &'a Cli,
    alg: Algebra,
}

impl Ctx<'_> {
    fn weight(&self, s: &str) -> Run<Weight> {
        let w: Weight = s.parse().map_err(|e: Error| Failure::Usage(format!("bad weight `{s}`: {e}")))?;
        if w.rank() != self.alg.rank() {
            return Err(Failure::Usage(format!(
                "weight `{s}` has {} labels but {} has rank {}",
                w.rank(),
                self.alg.name(),
                self.alg.rank()
            )));
        }
        Ok(w)
    }

    fn index(&self, i: usize) -> Run<usize> {
        if i == 0 || i > self.alg.rank() {
            return Err(Failure::Usage(format!("index {i} out of range 1..={}", self.alg.rank())));
        }
        Ok(i - 1)
    }

    fn cache(&self, fixtures: &[PathBuf]) -> Run<CharacterCache> {
        let cache = CharacterCache::with_options(self.alg.clone(), TensorOptions { budget: self.cli.budget });
        let cache = match &self.cli.cache_dir {
            Some(dir) => cache.persist_to(dir),
            None => cache.persist_from_env(),
        };
        for f in fixtures {
            cache.add_fallbacks(&load_fixture(f, self.alg.rank())?)?;
        }
        Ok(cache)
    }

    fn operator(&self, files: &[PathBuf]) -> Run<Delta1Operator> {
        let mut op = Delta1Operator::new(&self.alg)?;
        for f in files {
            op.load_records(&load_fixture(f, self.alg.rank())?)?;
        }
        Ok(op)
    }

    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }
}

/// Fills in every missing entry `p` needs.
fn complete_for(alg: &Algebra, op: &mut Delta1Operator, cache: &CharacterCache, p: &ZPolynomial) -> Result<()> {
    let missing: Vec<(usize, usize)> = required_pairs(p).into_iter().filter(|&(j, k)| op.a(j, k).is_none()).collect();
    for (j, k) in schedule(alg, &missing) {
        let a = a_coeff(alg, j, k, cache)?;
        op.set_a(j, k, a, crate::csop::Provenance::Computed)?;
    }
    Ok(())
}

fn poly_json(p: &ZPolynomial) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_json() })
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn json_text(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

fn execute(cli: &Cli) -> Run<Output> {
    let algebra = match &cli.command {
        Command::Cartan { algebra }
        | Command::Roots { algebra }
        | Command::Dim { algebra, .. }
        | Command::Mult { algebra, .. }
        | Command::Tensor { algebra, .. }
        | Command::Epsilon { algebra, .. }
        | Command::Bcoeffs { algebra }
        | Command::Acoeff { algebra, .. }
        | Command::Char { algebra, .. }
        | Command::Delta1Apply { algebra, .. }
        | Command::Verify { algebra, .. }
        | Command::FixturesCheck { algebra, .. } => algebra,
    };
    let ctx = Ctx {
        cli,
        alg: Algebra::from_type(algebra)?,
    };
    let alg = &ctx.alg;
    let ok = |text: String| Ok(Output { text, failed: false });

    match &cli.command {
        Command::Cartan { .. } => {
            if ctx.json() {
                ok(json_text(json!({
                    "algebra": alg.name(),
                    "cartan": alg.cartan().to_json(),
                    "inverse": alg.inverse().to_json(),
                    "determinant": alg.cartan().determinant().to_string(),
                })))
            } else {
                ok(format!("{}\n{}", alg.cartan(), alg.inverse()))
            }
        }
        Command::Roots { .. } => {
            if ctx.json() {
                ok(json_text(alg.roots_json()))
            } else {
                ok(lines(alg.positive_roots().iter().map(|r| {
                    format!("{} {} {}", r.height(), Weight::new(r.coeffs().to_vec()), Weight::new(r.labels().to_vec()))
                })))
            }
        }
        Command::Dim { weight, .. } => {
            let w = ctx.weight(weight)?;
            let d = weyl_dim(alg, &w)?;
            if ctx.json() {
                ok(json_text(json!({ "labels": w.labels(), "dim": d.to_string() })))
            } else {
                ok(format!("{d}\n"))
            }
        }
        Command::Mult { weight, .. } => {
            let w = ctx.weight(weight)?;
            let t = freudenthal(alg, &w)?;
            if ctx.json() {
                ok(json_text(t.to_json(alg)))
            } else {
                let order = alg.sort_weights(t.entries().keys());
                ok(lines(order.iter().map(|mu| format!("{} {}", mu.to_csv(), t.entries()[mu]))))
            }
        }
        Command::Tensor { left, right, .. } => {
            let (l, r) = (ctx.weight(left)?, ctx.weight(right)?);
            let d = crate::repth::tensor_decompose_with(alg, &l, &r, TensorOptions { budget: cli.budget })?;
            if ctx.json() {
                ok(json_text(d.to_json(alg)))
            } else {
                ok(lines(d.sorted(alg).into_iter().map(|(mu, m)| format!("{} {m}", mu.to_csv()))))
            }
        }
        Command::Epsilon { weight, kappa, .. } => {
            let w = ctx.weight(weight)?;
            let k: BigRational = kappa.parse().map_err(|_| Failure::Usage(format!("bad coupling `{kappa}`")))?;
            let e = epsilon(alg, &w, &k)?;
            if ctx.json() {
                ok(json_text(json!({ "labels": w.labels(), "kappa": k.to_string(), "epsilon": e.to_string() })))
            } else {
                ok(format!("{e}\n"))
            }
        }
        Command::Bcoeffs { .. } => {
            let b = b_coeffs(alg)?;
            if ctx.json() {
                ok(json_text(json!(b.iter().map(|x| x.to_string()).collect::<Vec<_>>())))
            } else {
                ok(lines(b.iter().enumerate().map(|(j, x)| format!("b[{}] = {x}*z{}", j + 1, j + 1))))
            }
        }
        Command::Acoeff { j, k, fixtures, .. } => {
            let (j, k) = (ctx.index(*j)?, ctx.index(*k)?);
            let cache = ctx.cache(fixtures)?;
            let a = a_coeff(alg, j, k, &cache)?;
            let key = RecordKey::A(j.min(k), j.max(k));
            if ctx.json() {
                ok(json_text(json!({ "j": j + 1, "k": k + 1, "poly": poly_json(&a) })))
            } else {
                ok(format!("{key} = {a}\n"))
            }
        }
        Command::Char { weight, fixtures, .. } => {
            let w = ctx.weight(weight)?;
            let chi = ctx.cache(fixtures)?.character_poly(&w)?;
            if ctx.json() {
                ok(json_text(json!({ "labels": w.labels(), "poly": poly_json(&chi) })))
            } else {
                ok(format!("{chi}\n"))
            }
        }
        Command::Delta1Apply {
            poly, operator, fixtures, ..
        } => {
            let p = parse_poly(poly, alg.rank())?;
            let mut op = ctx.operator(operator)?;
            complete_for(alg, &mut op, &ctx.cache(fixtures)?, &p)?;
            let r = apply_delta1(&op, &p)?;
            if ctx.json() {
                ok(json_text(poly_json(&r)))
            } else {
                ok(format!("{r}\n"))
            }
        }
        Command::Verify {
            weight,
            operator,
            fixtures,
            ..
        } => {
            let w = ctx.weight(weight)?;
            let cache = ctx.cache(fixtures)?;
            let chi = cache.character_poly(&w)?;
            let mut op = ctx.operator(operator)?;
            complete_for(alg, &mut op, &cache, &chi)?;
            let eigen = verify_eigen(alg, &w, &chi, &op)?;
            let dim = dim_identity(alg, &w, &chi)?;
            let lead = leading_term_ok(alg, &w, &chi);
            let failed = !(eigen.holds && dim.holds && lead);
            let text = if ctx.json() {
                json_text(json!({
                    "labels": w.labels(),
                    "eigen": eigen.holds,
                    "residual": poly_json(&eigen.residual),
                    "dimension": dim.holds,
                    "dim_value": dim.value.to_string(),
                    "dim_expected": dim.expected.to_string(),
                    "leading_term": lead,
                }))
            } else {
                let mut t = format!("eigen: {}\n", verdict(eigen.holds));
                if !eigen.holds {
                    t += &format!("residual: {}\n", eigen.residual);
                }
                t += &format!("dimension: {} ({} vs {})\n", verdict(dim.holds), dim.value, dim.expected);
                t += &format!("leading-term: {}\n", verdict(lead));
                t
            };
            Ok(Output { text, failed })
        }
        Command::FixturesCheck {
            file,
            operator,
            fixtures,
            no_recompute,
            ..
        } => fixtures_check(&ctx, file, operator, fixtures, !no_recompute),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

struct Check {
    name: &'static str,
    /// `Ok(None)` when the check was skipped for exceeding the budget.
    outcome: std::result::Result<Option<bool>, String>,
}

fn fixtures_check(ctx: &Ctx<'_>, file: &Path, operator: &[PathBuf], fixtures: &[PathBuf], recompute: bool) -> Run<Output> {
    let alg = &ctx.alg;
    let records = load_fixture(file, alg.rank())?;
    let cache = ctx.cache(fixtures)?;
    let mut op = if alg.is_simply_laced() { Some(ctx.operator(operator)?) } else { None };

    let mut report = Vec::new();
    for r in &records {
        report.push((r, check_record(alg, r, &cache, op.as_mut(), recompute)));
    }

    let failed = report
        .iter()
        .filter(|(_, checks)| checks.iter().any(|c| matches!(c.outcome, Ok(Some(false)) | Err(_))))
        .count();
    let text = if ctx.json() {
        let items: Vec<Value> = report
            .iter()
            .map(|(r, checks)| {
                let fields: serde_json::Map<String, Value> = checks
                    .iter()
                    .map(|c| {
                        let v = match &c.outcome {
                            Ok(Some(b)) => json!(verdict(*b)),
                            Ok(None) => json!("SKIPPED"),
                            Err(e) => json!({ "error": e }),
                        };
                        (c.name.to_string(), v)
                    })
                    .collect();
                json!({ "record": r.key.to_string(), "line": r.line, "checks": fields })
            })
            .collect();
        json_text(json!({ "records": records.len(), "failed": failed, "results": items }))
    } else {
        let mut t = String::new();
        for (r, checks) in &report {
            let bad: Vec<String> = checks
                .iter()
                .filter_map(|c| match &c.outcome {
                    Ok(Some(true) | None) => None,
                    Ok(Some(false)) => Some(c.name.to_string()),
                    Err(e) => Some(format!("{} ({e})", c.name)),
                })
                .collect();
            let done: Vec<String> = checks
                .iter()
                .map(|c| match c.outcome {
                    Ok(None) => format!("{} skipped: beyond budget", c.name),
                    _ => c.name.to_string(),
                })
                .collect();
            if bad.is_empty() {
                t += &format!("PASS {} [{}]\n", r.key, done.join(", "));
            } else {
                t += &format!("FAIL {} (line {}): {}\n", r.key, r.line, bad.join("; "));
            }
        }
        t += &format!("{} records, {} failed\n", records.len(), failed);
        t
    };
    Ok(Output {
        text,
        failed: failed > 0,
    })
}

fn check_record(
    alg: &Algebra,
    r: &Record,
    cache: &CharacterCache,
    op: Option<&mut Delta1Operator>,
    recompute: bool,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let err = |e: Error| e.to_string();
    match &r.key {
        RecordKey::Chi(m) => {
            checks.push(Check {
                name: "dimension",
                outcome: dim_identity(alg, m, &r.poly).map(|d| Some(d.holds)).map_err(err),
            });
            if let Some(op) = op {
                let outcome = complete_for(alg, op, cache, &r.poly)
                    .and_then(|_| verify_eigen(alg, m, &r.poly, op))
                    .map(|e| Some(e.holds));
                let outcome = match outcome {
                    Err(Error::BudgetExceeded { .. }) => Ok(None),
                    other => other.map_err(err),
                };
                checks.push(Check { name: "eigen", outcome });
            }
            if recompute {
                match cache.character_poly(m) {
                    Ok(chi) => checks.push(Check {
                        name: "recompute",
                        outcome: Ok(Some(compare_fixture(&r.poly, &chi).is_match())),
                    }),
                    Err(Error::BudgetExceeded { .. }) => checks.push(Check {
                        name: "recompute",
                        outcome: Ok(None),
                    }),
                    Err(e) => checks.push(Check {
                        name: "recompute",
                        outcome: Err(e.to_string()),
                    }),
                }
            }
        }
        RecordKey::A(j, k) => {
            if recompute {
                match a_coeff(alg, *j, *k, cache) {
                    Ok(a) => checks.push(Check {
                        name: "recompute",
                        outcome: Ok(Some(a == r.poly)),
                    }),
                    Err(Error::BudgetExceeded { .. }) => checks.push(Check {
                        name: "recompute",
                        outcome: Ok(None),
                    }),
                    Err(e) => checks.push(Check {
                        name: "recompute",
                        outcome: Err(e.to_string()),
                    }),
                }
            }
        }
        RecordKey::B(j) => {
            let outcome = b_coeffs(alg).map(|b| Some(r.b_scalar().as_ref() == Some(&b[*j]))).map_err(err);
            checks.push(Check { name: "value", outcome });
        }
    }
    checks
}
