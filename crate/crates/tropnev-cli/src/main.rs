//! Command-line front end: radius sweeps, verifier suites, equation solvers
//! and SVG plots over function/equation/polynomial JSON specs (documented in
//! `docs/SCHEMAS.md`).
//!
//! Exit codes: 0 when everything checked passes, 1 when an assertable check
//! fails, 2 on usage or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tropnev::generate;
use tropnev::inequalities::{self, SmtInstance};
use tropnev::nevanlinna::{self, NevanlinnaSample};
use tropnev::pl::FunctionSpec;
use tropnev::plot::{self, Series};
use tropnev::special;
use tropnev::{diff_poly, Context, TropicalPL, VerificationReport};

#[derive(Parser)]
#[command(
    name = "tropnev",
    version,
    about = "max-plus value distribution toolkit"
)]
struct Cli {
    /// Slope-equality tolerance (overrides the TROPNEV_TOL env var).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep m, n, N, T over a radius grid; emit CSV and SVG.
    Sweep(SweepArgs),
    /// Run a verifier suite; emit JSON reports and a summary.
    Verify(VerifyArgs),
    /// Solve a first- or second-order ultra-discrete equation.
    Solve(SolveArgs),
    /// Plot a function specification as SVG.
    Plot(PlotArgs),
    /// Emit trend data (CSV + SVG) for the asymptotic statements that are
    /// demonstrated rather than asserted.
    Trend(TrendArgs),
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 1.0)]
    r_min: f64,
    #[arg(long, default_value_t = 50.0)]
    r_max: f64,
    #[arg(long, default_value_t = 50)]
    points: usize,
    /// Geometric instead of linear radius spacing.
    #[arg(long)]
    geometric: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to a function spec JSON file.
    #[arg(long)]
    function: PathBuf,
    #[command(flatten)]
    grid: GridArgs,
    /// Plot the characteristic on a log10 y axis.
    #[arg(long)]
    log_y: bool,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Jensen,
    PoissonJensen,
    FirstMain,
    ShiftQuotient,
    Smt,
    SmtProximity,
    Sandwich,
    LemmaChain,
    ProdSum,
    MaxIdentity,
    Ptof,
    ValironMohonko,
    Mohonko,
    Clunie,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which theorem suite to run.
    #[arg(value_enum)]
    theorem: Theorem,
    /// Number of random instances.
    #[arg(long, default_value_t = 100)]
    random: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Radii sampled per instance.
    #[arg(long, default_value_t = 5)]
    radii: usize,
    #[arg(long, default_value_t = 12.0)]
    r_max: f64,
    /// Run the named built-in fixture instead of random instances
    /// (smt: `affine`).
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    /// Path to an equation spec JSON file.
    #[arg(long, required_unless_present = "fixture")]
    equation: Option<PathBuf>,
    /// Built-in fixture: `three-periodic` (the c = -1 period-3 solution).
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, default_value_t = -20.0, allow_negative_numbers = true)]
    window_lo: f64,
    #[arg(long, default_value_t = 20.0, allow_negative_numbers = true)]
    window_hi: f64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    function: PathBuf,
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long, default_value = "function.svg")]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TrendKind {
    /// (q-1)T(r,f) against ΣN(r,1∘⊘(f⊕a_j)) - N(r,1∘⊘f).
    SecondMainAsymptotic,
    /// r·m(r, f(x+c)⊘f(x)) / T(r,f) for a finite-order function.
    ShiftQuotientDecay,
    /// N(r, 1∘⊘(e_β⊕a)) / T(r, e_β) for β = -1/2, a = -1.
    Deficiency,
}

#[derive(Args)]
struct TrendArgs {
    #[arg(value_enum)]
    kind: TrendKind,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Serialize)]
struct SolutionOutput {
    equation: special::EquationKind,
    basis: Vec<special::BasisTerm>,
    max_residual: f64,
    residual_window: (f64, f64),
    function: FunctionSpec,
}

#[derive(Serialize)]
struct InstanceReport {
    instance: serde_json::Value,
    #[serde(flatten)]
    report: VerificationReport,
}

enum Failure {
    Usage(String),
    Check(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let eps = cli
        .tol
        .or_else(|| {
            std::env::var("TROPNEV_TOL")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1e-9);
    let ctx = Context {
        eps,
        ..Context::default()
    };
    let result = match cli.command {
        Command::Sweep(args) => run_sweep(args, &ctx),
        Command::Verify(args) => run_verify(args, &ctx),
        Command::Solve(args) => run_solve(args, &ctx),
        Command::Plot(args) => run_plot(args, &ctx),
        Command::Trend(args) => run_trend(args, &ctx),
    };
    match result {
        Ok(()) => ExitCode::from(0),
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn load_function(path: &Path) -> Result<TropicalPL, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    TropicalPL::from_json(&text).map_err(usage)
}

fn write_out(dir: &Path, name: &str, content: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(usage)?;
    let path = dir.join(name);
    fs::write(&path, content).map_err(usage)?;
    println!("wrote {}", path.display());
    Ok(())
}

/// Full round-trip decimal formatting: the shortest string that parses back
/// to the same f64.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn sweep_csv(samples: &[NevanlinnaSample]) -> String {
    let mut out = String::from("r,m,n,N,T\n");
    for s in samples {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            num(s.r),
            num(s.m),
            num(s.n),
            num(s.big_n),
            num(s.t)
        ));
    }
    out
}

fn run_sweep(args: SweepArgs, ctx: &Context) -> Result<(), Failure> {
    let f = load_function(&args.function)?;
    let samples = nevanlinna::sweep(
        &f,
        args.grid.r_min,
        args.grid.r_max,
        args.grid.points,
        args.grid.geometric,
        ctx,
    )
    .map_err(usage)?;
    write_out(&args.out, "sweep.csv", &sweep_csv(&samples))?;

    let span = args.grid.r_max;
    let graph = plot::plot_function(&f, -span, span, "function", ctx).map_err(usage)?;
    write_out(&args.out, "function.svg", &graph)?;

    let series = vec![
        Series::new("T(r)", samples.iter().map(|s| (s.r, s.t)).collect()),
        Series::new("m(r)", samples.iter().map(|s| (s.r, s.m)).collect()),
        Series::new("N(r)", samples.iter().map(|s| (s.r, s.big_n)).collect()),
    ];
    let chart = plot::line_chart("characteristic sweep", "r", "value", &series, args.log_y);
    write_out(&args.out, "characteristic.svg", &chart)?;
    Ok(())
}

fn run_plot(args: PlotArgs, ctx: &Context) -> Result<(), Failure> {
    if args.x_min >= args.x_max {
        return Err(usage("x-min must be below x-max"));
    }
    let f = load_function(&args.function)?;
    let svg = plot::plot_function(&f, args.x_min, args.x_max, "function", ctx).map_err(usage)?;
    fs::write(&args.out, svg).map_err(usage)?;
    println!("wrote {}", args.out.display());
    Ok(())
}

struct SuiteTally {
    passed: usize,
    failed: usize,
    skipped: usize,
    reports: Vec<InstanceReport>,
}

impl SuiteTally {
    fn new() -> Self {
        Self {
            passed: 0,
            failed: 0,
            skipped: 0,
            reports: Vec::new(),
        }
    }

    fn absorb(
        &mut self,
        instance: serde_json::Value,
        outcome: Result<VerificationReport, tropnev::Error>,
    ) {
        match outcome {
            Ok(report) => {
                if report.pass {
                    self.passed += 1;
                } else {
                    self.failed += 1;
                }
                self.reports.push(InstanceReport { instance, report });
            }
            Err(tropnev::Error::PreconditionViolated(why))
            | Err(tropnev::Error::NotASolution(why)) => {
                self.skipped += 1;
                self.reports.push(InstanceReport {
                    instance,
                    report: VerificationReport {
                        theorem_id: "skipped".into(),
                        radii: vec![],
                        lhs: vec![],
                        rhs: vec![],
                        slack: vec![],
                        pass: true,
                        notes: why,
                    },
                });
            }
            Err(e) => {
                self.failed += 1;
                self.reports.push(InstanceReport {
                    instance,
                    report: VerificationReport {
                        theorem_id: "error".into(),
                        radii: vec![],
                        lhs: vec![],
                        rhs: vec![],
                        slack: vec![],
                        pass: false,
                        notes: e.to_string(),
                    },
                });
            }
        }
    }
}

fn run_verify(args: VerifyArgs, ctx: &Context) -> Result<(), Failure> {
    let theorems: Vec<Theorem> = if args.theorem == Theorem::All {
        vec![
            Theorem::Jensen,
            Theorem::PoissonJensen,
            Theorem::FirstMain,
            Theorem::ShiftQuotient,
            Theorem::Smt,
            Theorem::SmtProximity,
            Theorem::Sandwich,
            Theorem::LemmaChain,
            Theorem::ProdSum,
            Theorem::MaxIdentity,
            Theorem::Ptof,
            Theorem::ValironMohonko,
            Theorem::Mohonko,
            Theorem::Clunie,
        ]
    } else {
        vec![args.theorem]
    };
    let mut any_failed = false;
    for theorem in theorems {
        let tally = run_one_suite(theorem, &args, ctx)?;
        let name = suite_name(theorem);
        println!(
            "{name}: {} pass, {} fail, {} skip",
            tally.passed, tally.failed, tally.skipped
        );
        let json = serde_json::to_string_pretty(&tally.reports).map_err(usage)?;
        write_out(&args.out, &format!("{name}.json"), &(json + "\n"))?;
        any_failed |= tally.failed > 0;
    }
    if any_failed {
        return Err(Failure::Check("verifier suite reported failures".into()));
    }
    Ok(())
}

fn suite_name(theorem: Theorem) -> &'static str {
    match theorem {
        Theorem::Jensen => "jensen",
        Theorem::PoissonJensen => "poisson-jensen",
        Theorem::FirstMain => "first-main",
        Theorem::ShiftQuotient => "shift-quotient",
        Theorem::Smt => "smt",
        Theorem::SmtProximity => "smt-proximity",
        Theorem::Sandwich => "sandwich",
        Theorem::LemmaChain => "lemma-chain",
        Theorem::ProdSum => "prod-sum",
        Theorem::MaxIdentity => "max-identity",
        Theorem::Ptof => "ptof",
        Theorem::ValironMohonko => "valiron-mohonko",
        Theorem::Mohonko => "mohonko",
        Theorem::Clunie => "clunie",
        Theorem::All => "all",
    }
}

fn run_one_suite(
    theorem: Theorem,
    args: &VerifyArgs,
    ctx: &Context,
) -> Result<SuiteTally, Failure> {
    let mut rng = generate::rng(args.seed);
    let mut tally = SuiteTally::new();
    let n = args.random;
    use rand::Rng;

    match theorem {
        Theorem::Jensen => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let r = rng.random_range(0.5..args.r_max);
                tally.absorb(
                    serde_json::json!({"index": i, "r": r}),
                    nevanlinna::verify_jensen(&f, r, ctx),
                );
            }
        }
        Theorem::PoissonJensen => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let r = rng.random_range(1.0..args.r_max);
                let x = rng.random_range(-0.9..0.9) * r;
                tally.absorb(
                    serde_json::json!({"index": i, "r": r, "x": x}),
                    nevanlinna::verify_poisson_jensen(&f, r, x, ctx),
                );
            }
        }
        Theorem::FirstMain => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let r = rng.random_range(1.0..args.r_max);
                let a = rng.random_range(-6.0..6.0);
                tally.absorb(
                    serde_json::json!({"index": i, "r": r, "a": a}),
                    nevanlinna::verify_first_main(&f, a, r, ctx),
                );
            }
        }
        Theorem::ShiftQuotient => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let c = rng.random_range(-2.0..2.0);
                let alpha = rng.random_range(1.05..4.0);
                let r = rng.random_range(0.3..args.r_max);
                tally.absorb(
                    serde_json::json!({"index": i, "c": c, "alpha": alpha, "r": r}),
                    inequalities::verify_shift_quotient_bound(&f, c, alpha, r, ctx),
                );
            }
        }
        Theorem::Smt | Theorem::SmtProximity => {
            if args.fixture.as_deref() == Some("affine") {
                let f = TropicalPL::linear(1.0, 1.0);
                let inst = SmtInstance::new(f, 1.0, vec![0.0], 100.0).map_err(usage)?;
                for r in [5.0, 10.0, 50.0] {
                    tally.absorb(
                        serde_json::json!({"fixture": "affine", "r": r}),
                        inequalities::verify_second_main(&inst, r, ctx),
                    );
                }
            } else {
                for i in 0..n {
                    let inst = match generate::random_smt_instance(&mut rng, args.r_max, ctx) {
                        Ok(inst) => inst,
                        Err(e) => {
                            tally.absorb(serde_json::json!({"index": i}), Err(e));
                            continue;
                        }
                    };
                    for _ in 0..args.radii {
                        let r = rng.random_range(0.5..args.r_max);
                        let outcome = if theorem == Theorem::Smt {
                            inequalities::verify_second_main(&inst, r, ctx)
                        } else {
                            inequalities::verify_smt_proximity_form(&inst, r, ctx)
                        };
                        tally.absorb(
                            serde_json::json!({
                                "index": i, "r": r, "c": inst.c, "targets": inst.targets,
                            }),
                            outcome,
                        );
                    }
                }
            }
        }
        Theorem::Sandwich => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let r = rng.random_range(1.0..args.r_max);
                let floor = nevanlinna::pole_floor(&f, -r, r, ctx).map_err(usage)?;
                let base = if floor.is_finite() { floor } else { 4.0 };
                let p = rng.random_range(1..=3usize);
                let targets: Vec<f64> = (0..p)
                    .map(|k| base - 0.2 - k as f64 - rng.random_range(0.0..1.0))
                    .collect();
                tally.absorb(
                    serde_json::json!({"index": i, "r": r, "targets": targets}),
                    inequalities::verify_characteristic_sandwich(&f, &targets, r, ctx),
                );
            }
        }
        Theorem::LemmaChain => {
            for i in 0..n {
                let f = generate::random_function(&mut rng);
                let c = rng.random_range(0.1..2.0);
                let p = rng.random_range(1..=4usize);
                let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-6.0..6.0)).collect();
                let r = rng.random_range(0.5..args.r_max);
                match inequalities::verify_lemma_chain(&f, c, &targets, r, ctx) {
                    Ok(reports) => {
                        for report in reports {
                            tally.absorb(
                                serde_json::json!({"index": i, "r": r, "c": c}),
                                Ok(report),
                            );
                        }
                    }
                    Err(e) => tally.absorb(serde_json::json!({"index": i}), Err(e)),
                }
            }
        }
        Theorem::ProdSum => {
            let mut violations = 0usize;
            for _ in 0..n.max(1) * 1000 {
                let p = rng.random_range(1..=6usize);
                let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-10.0..10.0)).collect();
                let x = rng.random_range(-12.0..12.0);
                if !inequalities::check_prod_sum_inequality(&targets, x) {
                    violations += 1;
                }
            }
            tally.absorb(
                serde_json::json!({"samples": n.max(1) * 1000}),
                Ok(VerificationReport::inequality(
                    "prod_sum_scalar",
                    vec![0.0],
                    vec![violations as f64],
                    vec![0.0],
                    "scalar product-vs-sum inequality violations",
                )),
            );
        }
        Theorem::MaxIdentity => {
            let mut violations = 0usize;
            for _ in 0..n.max(1) * 1000 {
                let p = rng.random_range(1..=6usize);
                let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-10.0..10.0)).collect();
                let v = rng.random_range(-12.0..12.0);
                if !inequalities::check_max_identity(v, &targets) {
                    violations += 1;
                }
            }
            tally.absorb(
                serde_json::json!({"samples": n.max(1) * 1000}),
                Ok(VerificationReport::inequality(
                    "max_identity_scalar",
                    vec![0.0],
                    vec![violations as f64],
                    vec![0.0],
                    "scalar max identity violations",
                )),
            );
        }
        Theorem::Ptof | Theorem::ValironMohonko | Theorem::Mohonko | Theorem::Clunie => {
            run_poly_suite(theorem, args, ctx, &mut rng, &mut tally)?;
        }
        Theorem::All => unreachable!("expanded by caller"),
    }
    Ok(tally)
}

fn run_poly_suite(
    theorem: Theorem,
    args: &VerifyArgs,
    ctx: &Context,
    rng: &mut rand_chacha::ChaCha8Rng,
    tally: &mut SuiteTally,
) -> Result<(), Failure> {
    use diff_poly::DifferenceLaurentPolynomial;
    use rand::Rng;
    for i in 0..args.random {
        let f = generate::random_finite_pl(rng);
        let r = rng.random_range(0.5..args.r_max);
        match theorem {
            Theorem::Ptof | Theorem::ValironMohonko => {
                let shifts = vec![0.0, rng.random_range(0.2..1.5), rng.random_range(1.6..3.0)];
                let n_terms = rng.random_range(1..=4usize);
                let mut terms = Vec::new();
                for _ in 0..n_terms {
                    let lambda: Vec<f64> = (0..3).map(|_| rng.random_range(-2.0..3.0)).collect();
                    terms.push((lambda, TropicalPL::constant(rng.random_range(-3.0..3.0))));
                }
                let poly = match DifferenceLaurentPolynomial::new(shifts, terms) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                let outcome = if theorem == Theorem::Ptof {
                    let candidates: Vec<usize> = (0..poly.terms().len())
                        .filter(|&k| {
                            DifferenceLaurentPolynomial::norm(&poly.terms()[k].lambda) > 0.1
                        })
                        .collect();
                    if candidates.is_empty() {
                        continue;
                    }
                    let idx = candidates[rng.random_range(0..candidates.len())];
                    diff_poly::verify_ptof(&poly, &f, idx, r)
                } else {
                    diff_poly::verify_valiron_mohonko(&poly, &f, r)
                };
                tally.absorb(serde_json::json!({"index": i, "r": r}), outcome);
            }
            Theorem::Mohonko => {
                let shift = rng.random_range(0.3..1.2);
                let l0: f64 = rng.random_range(0.3..2.0);
                let l1: f64 = rng.random_range(0.3..2.0);
                let combo = f
                    .tropical_scale(l0)
                    .tropical_plus(&f.shift(shift).tropical_scale(l1));
                let poly = DifferenceLaurentPolynomial::new(
                    vec![0.0, shift],
                    vec![(vec![l0, l1], combo.negate())],
                )
                .map_err(usage)?;
                let a = rng.random_range(-4.0..4.0);
                tally.absorb(
                    serde_json::json!({"index": i, "r": r, "a": a}),
                    diff_poly::verify_mohonko(&poly, &f, a, r, (-6.0, 6.0), ctx),
                );
            }
            Theorem::Clunie => {
                let s = rng.random_range(0.5..2.0);
                let w = rng.random_range(0.3..1.5);
                let h = DifferenceLaurentPolynomial::new(
                    vec![0.0],
                    vec![(
                        vec![rng.random_range(0.5..3.0)],
                        TropicalPL::constant(rng.random_range(-1.0..1.0)),
                    )],
                )
                .map_err(usage)?;
                let p = DifferenceLaurentPolynomial::new(
                    vec![0.0, s],
                    vec![
                        (
                            vec![-w, w],
                            TropicalPL::constant(rng.random_range(-1.0..1.0)),
                        ),
                        (
                            vec![0.0, 0.0],
                            TropicalPL::constant(rng.random_range(-2.0..1.0)),
                        ),
                    ],
                )
                .map_err(usage)?;
                let q = h.product(&p).map_err(usage)?;
                tally.absorb(
                    serde_json::json!({"index": i, "r": r}),
                    diff_poly::verify_clunie(&h, &p, &q, &f, r, (-6.0, 6.0), ctx),
                );
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}

fn run_solve(args: SolveArgs, ctx: &Context) -> Result<(), Failure> {
    let window = (args.window_lo, args.window_hi);
    if window.0 >= window.1 {
        return Err(usage("window-lo must be below window-hi"));
    }
    let solution = if let Some(fixture) = &args.fixture {
        match fixture.as_str() {
            "three-periodic" => {
                let y = special::three_periodic_fixture();
                let residual = special::second_order_residual(&y, -1.0, window.0, window.1, ctx)
                    .map_err(usage)?;
                special::UltraDiscreteSolution {
                    equation: special::EquationKind { order: 2, c: -1.0 },
                    basis: vec![special::BasisTerm {
                        generator: "periodic".into(),
                        parameter: 3.0,
                        shift: 0.0,
                        coefficient: 1.0,
                    }],
                    assembled: y,
                    max_residual: residual,
                    residual_window: window,
                }
            }
            other => return Err(usage(format!("unknown fixture `{other}`"))),
        }
    } else {
        let path = args.equation.as_ref().expect("clap enforces presence");
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let spec: special::EquationSpec = serde_json::from_str(&text).map_err(usage)?;
        spec.solve(window, ctx).map_err(usage)?
    };

    let scale = solution
        .assembled
        .sup_abs(window.0 - 1.0, window.1 + 1.0, ctx)
        .map_err(usage)?;
    let tol = 1e-8 * scale.max(1.0);
    println!(
        "max residual {} on [{}, {}] (tolerance {})",
        num(solution.max_residual),
        num(window.0),
        num(window.1),
        num(tol)
    );

    let output = SolutionOutput {
        equation: solution.equation,
        basis: solution.basis.clone(),
        max_residual: solution.max_residual,
        residual_window: solution.residual_window,
        function: solution.assembled.to_spec(),
    };
    let json = serde_json::to_string_pretty(&output).map_err(usage)? + "\n";
    write_out(&args.out, "solution.json", &json)?;

    // overlay: trig cell pair in red/green, the solution itself in blue
    let lo = window.0.max(-8.0);
    let hi = window.1.min(8.0);
    let mut series = Vec::new();
    if solution.equation.order == 2 && solution.equation.c.abs() < 2.0 {
        let theta = (solution.equation.c / 2.0).acos();
        for (which, label) in [(1u8, "cell cos"), (2u8, "cell sin")] {
            let g = special::make_trig_solution(theta, which).map_err(usage)?;
            series.push(Series::new(
                label,
                plot::function_samples(&g, lo, hi, ctx).map_err(usage)?,
            ));
        }
    }
    series.push(Series::new(
        "solution",
        plot::function_samples(&solution.assembled, lo, hi, ctx).map_err(usage)?,
    ));
    let svg = plot::line_chart("solution overlay", "x", "y", &series, false);
    write_out(&args.out, "solution.svg", &svg)?;

    if solution.max_residual > tol {
        return Err(Failure::Check(format!(
            "residual {} exceeds tolerance {tol}",
            solution.max_residual
        )));
    }
    Ok(())
}

fn run_trend(args: TrendArgs, ctx: &Context) -> Result<(), Failure> {
    let grid = nevanlinna::radius_grid(
        args.grid.r_min,
        args.grid.r_max,
        args.grid.points,
        args.grid.geometric,
    )
    .map_err(usage)?;
    let (name, header, rows, series): (&str, &str, Vec<Vec<f64>>, Vec<Series>) = match args.kind {
        TrendKind::SecondMainAsymptotic => {
            // q = 2 targets below the pole floor of a lifted periodic function
            let f = special::make_pi(-1.0, -1.0)
                .unwrap()
                .negate()
                .tropical_plus(&TropicalPL::constant(1.0));
            let targets = [-1.0, -2.5];
            let mut rows = Vec::new();
            for &r in &grid {
                let t = nevanlinna::t_of(&f, r, ctx).map_err(usage)?;
                let mut n_sum = 0.0;
                for &a in &targets {
                    n_sum += nevanlinna::counting(
                        &f.tropical_max(&TropicalPL::constant(a)).negate(),
                        r,
                        ctx,
                    )
                    .map_err(usage)?;
                }
                let n_inv = nevanlinna::counting(&f.negate(), r, ctx).map_err(usage)?;
                rows.push(vec![r, (targets.len() as f64 - 1.0) * t, n_sum - n_inv]);
            }
            let series = vec![
                Series::new("(q-1)T(r,f)", rows.iter().map(|w| (w[0], w[1])).collect()),
                Series::new("sumN - N(1/f)", rows.iter().map(|w| (w[0], w[2])).collect()),
            ];
            (
                "second-main-asymptotic",
                "r,(q-1)T,sumN_minus_Ninv",
                rows,
                series,
            )
        }
        TrendKind::ShiftQuotientDecay => {
            let f = special::make_pi(-1.0, -2.0).unwrap().negate();
            let c = 1.0;
            let quot = f.shift(c).tropical_minus(&f);
            let mut rows = Vec::new();
            for &r in &grid {
                let m = nevanlinna::proximity(&quot, r).map_err(usage)?;
                let t = nevanlinna::t_of(&f, r, ctx).map_err(usage)?;
                rows.push(vec![r, m, r * m / t.max(1e-300)]);
            }
            let series = vec![Series::new(
                "r*m(r,fc/f)/T(r,f)",
                rows.iter().map(|w| (w[0], w[2])).collect(),
            )];
            ("shift-quotient-decay", "r,m_quotient,scaled", rows, series)
        }
        TrendKind::Deficiency => {
            let e = TropicalPL::exponential(-0.5).map_err(usage)?;
            let clipped = e.tropical_max(&TropicalPL::constant(-1.0)).negate();
            let mut rows = Vec::new();
            for &r in &grid {
                let n = nevanlinna::counting(&clipped, r, ctx).map_err(usage)?;
                let t = nevanlinna::t_of(&e, r, ctx).map_err(usage)?;
                rows.push(vec![r, n, t, n / t.max(1e-300)]);
            }
            let series = vec![Series::new(
                "N(r,1/(e+a))/T(r,e)",
                rows.iter().map(|w| (w[0], w[3])).collect(),
            )];
            ("deficiency", "r,N_clipped,T,ratio", rows, series)
        }
    };
    let mut csv = String::from(header);
    csv.push('\n');
    for row in &rows {
        let cells: Vec<String> = row.iter().map(|&v| num(v)).collect();
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }
    write_out(&args.out, &format!("{name}.csv"), &csv)?;
    let svg = plot::line_chart(name, "r", "value", &series, false);
    write_out(&args.out, &format!("{name}.svg"), &svg)?;
    Ok(())
}
