//! plethcalc: tables and validators for the exact formal-scheme calculus.
//!
//! Subcommands: lambda-table, witt, plethysm, primitives, indecomposables,
//! check, dualize. JSON is the contract; text tables are secondary
//! renderings of the same data. Identical invocations produce byte-identical
//! output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethcalc_core::exact_algebra::json::{graded_module_from_json, graded_module_to_json};
use plethcalc_core::exact_algebra::poly::Polynomial;
use plethcalc_core::exact_algebra::ring::CoefficientRing;
use plethcalc_core::exact_algebra::tensor::tensor_many;
use plethcalc_core::plethory_examples::lambda::{lambda_level, lambda_structure};
use plethcalc_core::plethory_examples::plethysm::plethysm;
use plethcalc_core::plethory_examples::witt::{WittRing, WittVector};
use plethcalc_core::plethory_examples::{divided_powers, identity_scheme};
use plethcalc_core::report::AxiomReport;
use plethcalc_core::schemes_hopf::pq::{indecomposables, primitives};
use plethcalc_core::schemes_hopf::validate::validate;
use std::io::Read;

#[derive(Parser)]
#[command(name = "plethcalc", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingArg {
    Z,
    Q,
    F2,
    F3,
}

impl RingArg {
    fn ring(self) -> CoefficientRing {
        match self {
            RingArg::Z => CoefficientRing::Integers,
            RingArg::Q => CoefficientRing::Rationals,
            RingArg::F2 => CoefficientRing::IntegersMod(2),
            RingArg::F3 => CoefficientRing::IntegersMod(3),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemeArg {
    Lambda,
    Divided,
    Identity,
}

#[derive(Args)]
struct CommonOpts {
    /// weight bound N (N >= 1)
    #[arg(long, default_value_t = 3)]
    max: u32,
    #[arg(long, value_enum, default_value_t = RingArg::Z)]
    ring: RingArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coaddition, comultiplication, and counit rows of the
    /// Lambda ring scheme for c_1..c_max.
    LambdaTable(CommonOpts),
    /// Big Witt vector arithmetic of fixed length.
    Witt {
        #[command(subcommand)]
        op: WittOp,
    },
    /// Composition of basis operations: plethysm cN cM.
    Plethysm {
        outer: String,
        inner: String,
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ranks and basis elements of the primitives of a scheme.
    Primitives {
        #[arg(long, value_enum, default_value_t = SchemeArg::Lambda)]
        scheme: SchemeArg,
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, value_enum, default_value_t = RingArg::Z)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ranks and presentations of the indecomposables of a scheme.
    Indecomposables {
        #[arg(long, value_enum, default_value_t = SchemeArg::Lambda)]
        scheme: SchemeArg,
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, value_enum, default_value_t = RingArg::Z)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the validator suites; exit 1 with a JSON report on any failure.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max: u32,
    },
    /// Round-trip a JSON bimodule descriptor through dualization
    /// (stdin -> stdout).
    Dualize,
}

#[derive(Subcommand)]
enum WittOp {
    Add(WittArgs),
    Mul(WittArgs),
}

#[derive(Args)]
struct WittArgs {
    /// component count of each vector
    #[arg(long)]
    len: u32,
    /// 2*len integer components: a_1..a_len b_1..b_len
    components: Vec<i64>,
    #[arg(long, value_enum, default_value_t = RingArg::Z)]
    ring: RingArg,
}

fn main() {
    let cli = Cli::parse();
    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::LambdaTable(opts) => lambda_table(&opts),
        Command::Witt { op } => witt(op),
        Command::Plethysm { outer, inner, max, format } => plethysm_cmd(&outer, &inner, max, format),
        Command::Primitives { scheme, max, ring, format } => primitives_cmd(scheme, max, ring, format),
        Command::Indecomposables { scheme, max, ring, format } => {
            indecomposables_cmd(scheme, max, ring, format)
        }
        Command::Check { suite, max } => check_cmd(&suite, max),
        Command::Dualize => dualize_cmd(),
    }
}

fn lambda_table(opts: &CommonOpts) -> i32 {
    if opts.max < 1 {
        eprintln!("--max must be at least 1");
        return 2;
    }
    let ring = opts.ring.ring();
    let n = opts.max;
    let s = lambda_structure(ring, n);
    let a = lambda_level(ring, n);
    let sq = tensor_many(&[&a, &a], n);
    let sq2 = tensor_many(&[&a, &a], 2 * n);
    let psi = (s.psi_plus)(n);
    let psix = s.psi_times.as_ref().unwrap()(n);
    let counit = s.counit.as_ref().unwrap();

    let mut rows = Vec::new();
    for m in 1..=n as usize {
        let mut row = serde_json::Map::new();
        row.insert("generator".into(), format!("c{m}").into());
        row.insert("psi_plus".into(), sq.render(&psi.images[m - 1]).into());
        row.insert("psi_times".into(), sq2.render(&psix.images[m - 1]).into());
        let eps: Vec<String> = (-3..=4)
            .map(|x| {
                let e = counit(x, n);
                format!("eps_{x}(c{m}) = {}", e.images[m - 1])
            })
            .collect();
        row.insert("counits".into(), serde_json::Value::from(eps));
        rows.push(serde_json::Value::from(row));
    }
    let value = serde_json::Value::from(rows);
    match opts.format {
        Format::Json => println!("{value}"),
        Format::Text => {
            for row in value.as_array().unwrap() {
                let g = row["generator"].as_str().unwrap();
                println!("psi_+({g}) = {}", row["psi_plus"].as_str().unwrap());
                println!("psi_x({g}) = {}", row["psi_times"].as_str().unwrap());
                for e in row["counits"].as_array().unwrap() {
                    println!("{}", e.as_str().unwrap());
                }
            }
        }
    }
    0
}

fn witt(op: WittOp) -> i32 {
    let (args, mul) = match op {
        WittOp::Add(a) => (a, false),
        WittOp::Mul(a) => (a, true),
    };
    let len = args.len;
    if args.components.len() != 2 * len as usize {
        eprintln!("expected {} components, got {}", 2 * len, args.components.len());
        return 2;
    }
    let ring = args.ring.ring();
    let w = WittRing::new(ring, len);
    let a = WittVector::from_i64(ring, &args.components[..len as usize]);
    let b = WittVector::from_i64(ring, &args.components[len as usize..]);
    let result = if mul { w.mul(&a, &b) } else { w.add(&a, &b) };
    let parts: Vec<String> = result.components.iter().map(|c| c.to_string()).collect();
    println!("({})", parts.join(", "));
    0
}

fn parse_c(name: &str) -> Option<u32> {
    name.strip_prefix('c').and_then(|s| s.parse().ok())
}

fn plethysm_cmd(outer: &str, inner: &str, max: u32, format: Format) -> i32 {
    let (Some(n), Some(m)) = (parse_c(outer), parse_c(inner)) else {
        eprintln!("expected generators like c2, got {outer} {inner}");
        return 2;
    };
    let bound = max.max(n * m);
    let a = lambda_level(CoefficientRing::Integers, bound);
    let cn = Polynomial::generator_named(&a, &format!("c{n}"));
    let cm = Polynomial::generator_named(&a, &format!("c{m}"));
    let result = plethysm(&cn, &cm, bound);
    match format {
        Format::Text => println!("{result}"),
        Format::Json => {
            println!("{}", plethcalc_core::exact_algebra::json::polynomial_to_json(&result))
        }
    }
    0
}

fn scheme_of(arg: SchemeArg, ring: CoefficientRing, max: u32) -> plethcalc_core::schemes_hopf::structure::SchemeStructure {
    match arg {
        SchemeArg::Lambda => lambda_structure(ring, max),
        SchemeArg::Divided => divided_powers(ring, max),
        SchemeArg::Identity => identity_scheme(ring, 0, max),
    }
}

fn primitives_cmd(scheme: SchemeArg, max: u32, ring: RingArg, format: Format) -> i32 {
    let s = scheme_of(scheme, ring.ring(), max);
    let prim = primitives(&s, max);
    let mut rows = Vec::new();
    for (w, elems) in &prim.elements {
        let mut row = serde_json::Map::new();
        row.insert("weight".into(), (*w).into());
        row.insert("rank".into(), elems.len().into());
        row.insert(
            "basis".into(),
            serde_json::Value::from(elems.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
        );
        rows.push(serde_json::Value::from(row));
    }
    let value = serde_json::Value::from(rows);
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            for row in value.as_array().unwrap() {
                println!(
                    "weight {}: rank {}  basis: {}",
                    row["weight"],
                    row["rank"],
                    row["basis"]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|b| b.as_str().unwrap().to_string())
                        .collect::<Vec<_>>()
                        .join("; ")
                );
            }
        }
    }
    0
}

fn indecomposables_cmd(scheme: SchemeArg, max: u32, ring: RingArg, format: Format) -> i32 {
    let s = scheme_of(scheme, ring.ring(), max);
    let q = indecomposables(&s, max);
    let mut rows = Vec::new();
    for (w, pres) in &q.per_weight {
        let mut row = serde_json::Map::new();
        row.insert("weight".into(), (*w).into());
        row.insert("free_rank".into(), pres.free_rank.into());
        row.insert(
            "torsion".into(),
            serde_json::Value::from(
                pres.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            ),
        );
        rows.push(serde_json::Value::from(row));
    }
    let value = serde_json::Value::from(rows);
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            for row in value.as_array().unwrap() {
                let torsion = row["torsion"].as_array().unwrap();
                let tor = if torsion.is_empty() {
                    String::new()
                } else {
                    format!(
                        "  torsion: {}",
                        torsion
                            .iter()
                            .map(|t| format!("Z/{}", t.as_str().unwrap()))
                            .collect::<Vec<_>>()
                            .join(" + ")
                    )
                };
                println!("weight {}: free rank {}{}", row["weight"], row["free_rank"], tor);
            }
        }
    }
    0
}

fn thread_cap() -> usize {
    std::env::var("PLETHCALC_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
}

fn check_cmd(suite: &str, max: u32) -> i32 {
    if suite != "all" {
        eprintln!("unknown suite {suite}; only \"all\" is available");
        return 2;
    }
    let ring = CoefficientRing::Integers;
    type Job = Box<dyn FnOnce() -> AxiomReport + Send>;
    let jobs: Vec<(&str, Job)> = vec![
        ("lambda", Box::new(move || validate(&lambda_structure(ring, max), max))),
        ("divided-powers", Box::new(move || validate(&divided_powers(ring, max), max))),
        ("identity", Box::new(move || validate(&identity_scheme(ring, 0, max), max))),
        ("nil-completion", Box::new(move || {
            validate(&plethcalc_core::plethory_examples::nil_scheme(ring, 0, max), max)
        })),
        ("formal-completion", Box::new(move || {
            validate(
                &plethcalc_core::plethory_examples::formal_completion_scheme(ring, max.min(3)),
                max.min(3),
            )
        })),
        ("idempotent-m2", Box::new(move || {
            validate(&plethcalc_core::plethory_examples::idempotent_scheme(ring, 2), 2)
        })),
        ("idempotent-m6", Box::new(move || {
            validate(&plethcalc_core::plethory_examples::idempotent_scheme(ring, 6), 2)
        })),
        ("two-monoidal", Box::new(move || {
            plethcalc_core::two_monoidal::check_two_monoidal(
                &plethcalc_core::two_monoidal::TwoMonoidalData { ring, depth: max },
            )
        })),
        ("bimonoid-q-lambda", Box::new(move || {
            match plethcalc_core::two_monoidal::linearize_lambda(
                ring,
                plethcalc_core::two_monoidal::Side::Indecomposables,
                max,
            ) {
                Ok(b) => plethcalc_core::two_monoidal::check_bimonoid(&b),
                Err(e) => {
                    let mut r = AxiomReport::new("bimonoid Q(Lambda)");
                    r.fail("construction", e.to_string());
                    r
                }
            }
        })),
        ("bimonoid-p-lambda", Box::new(move || {
            match plethcalc_core::two_monoidal::linearize_lambda(
                ring,
                plethcalc_core::two_monoidal::Side::Primitives,
                max,
            ) {
                Ok(b) => plethcalc_core::two_monoidal::check_bimonoid(&b),
                Err(e) => {
                    let mut r = AxiomReport::new("bimonoid P(Lambda)");
                    r.fail("construction", e.to_string());
                    r
                }
            }
        })),
        ("bilax-q", Box::new(move || {
            plethcalc_core::two_monoidal::check_bilax_q_on_lambda(ring, max)
        })),
        ("duality", Box::new(move || {
            plethcalc_core::two_monoidal::duality_roundtrip(ring, 10, max)
        })),
    ];

    // run with bounded parallelism, assemble in fixed order
    let cap = thread_cap();
    let mut reports: Vec<Option<AxiomReport>> = Vec::new();
    for _ in 0..jobs.len() {
        reports.push(None);
    }
    let mut queue: Vec<(usize, Job)> = jobs
        .into_iter()
        .enumerate()
        .map(|(i, (_, job))| (i, job))
        .collect();
    queue.reverse();
    while !queue.is_empty() {
        let batch: Vec<(usize, Job)> = {
            let take = cap.min(queue.len());
            queue.split_off(queue.len() - take)
        };
        let results: Vec<(usize, AxiomReport)> = std::thread::scope(|scope| {
            let handles: Vec<_> = batch
                .into_iter()
                .map(|(i, job)| scope.spawn(move || (i, job())))
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
        });
        for (i, r) in results {
            reports[i] = Some(r);
        }
    }

    let reports: Vec<AxiomReport> = reports.into_iter().map(Option::unwrap).collect();
    let all_ok = reports.iter().all(|r| r.all_passed());
    if all_ok {
        for r in &reports {
            let passed = r.checks.len();
            println!("[pass] {} ({passed} checks)", r.subject);
        }
        0
    } else {
        let value = serde_json::Value::from(
            reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        );
        println!("{value}");
        1
    }
}

fn dualize_cmd() -> i32 {
    let mut input = String::new();
    if std::io::stdin().read_to_string(&mut input).is_err() {
        eprintln!("could not read stdin");
        return 2;
    }
    let value: serde_json::Value = match serde_json::from_str(&input) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("invalid JSON: {e}");
            return 2;
        }
    };
    match graded_module_from_json(&value) {
        Ok(m) => {
            let dual = plethcalc_core::two_monoidal::duality::dualize(&m);
            println!("{}", graded_module_to_json(&dual));
            0
        }
        Err(e) => {
            eprintln!("invalid bimodule: {e}");
            2
        }
    }
}
