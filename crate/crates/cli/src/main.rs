use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgalois_cli::{
    parse_expression, parse_presentation, render_text, run_suite, Context, ReportDocument, SuiteName,
    SuiteRequest,
};

#[derive(Parser)]
#[command(name = "qgalois", version, about = "Exact verification suites for q-difference Galois theory")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Series order N.
    #[arg(long, global = true, env = "QGAL_DEPTH_N")]
    depth_n: Option<usize>,
    /// Sequence window M.
    #[arg(long, global = true, env = "QGAL_DEPTH_M")]
    depth_m: Option<usize>,
    /// Catalog name (A1, A2, A3, dual2, free<k>, B<k>) or presentation text.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Print the JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Leave the timestamp out of the JSON report.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Axiom and lemma suites.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Universal morphisms applied to field elements.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Deformations of the universal morphism.
    #[command(subcommand)]
    Deform(DeformCmd),
    /// Hypergeometric and Heine series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Any suite by name.
    Suite {
        name: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Parse and normalize an expression.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = ParseContext::Field)]
        context: ParseContext,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// q-skew iterative axioms on K(t).
    Axioms {
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Samples; the shipped ones when empty.
        exprs: Vec<String>,
    },
    /// The same axioms on twisted series.
    Twisted {
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// sigma and theta^(i) of t.
    Theta {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Hopf algebra axioms on monomials u^a v^b.
    Hopf {
        #[arg(long, default_value_t = 3)]
        max_a: i64,
        #[arg(long, default_value_t = 3)]
        max_b: u32,
        /// Also report the (non)commutativity witnesses.
        #[arg(long)]
        witnesses: bool,
    },
    /// Inverse and product lemmas for random matrix points.
    Matrix {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Gaussian binomials.
    Qbinomial {
        #[arg(long, default_value_t = 12)]
        max_sum: usize,
    },
}

#[derive(Subcommand)]
enum MorphismCmd {
    /// iota: K(t) -> twisted series.
    Hopf {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Taylor morphism for d/dt and t d/dt.
    Taylor {
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Order for the y exp X check.
        #[arg(long, default_value_t = 11)]
        exp_order: usize,
    },
    /// Euler morphism into sequences.
    Euler {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
}

#[derive(Subcommand)]
enum DeformCmd {
    /// Check a candidate Q -> eQ, X -> fQ + X over --algebra.
    Check {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        e: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        f: String,
    },
    /// Derive the relation between e and f and test it on the catalog.
    Derive {
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Action of matrix points and transporters.
    Torsor {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The differential example y -> cy.
    Differential {
        #[arg(long, default_value = "1 + eps", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 9)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Heine series and its q-difference equation.
    Heine {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        gamma: i64,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Gauss series and its differential equation.
    Hypergeom {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ParseContext {
    Scalar,
    Field,
    Hq,
    Algebra,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn request(common: &Common, command: Command) -> Result<SuiteRequest, String> {
    use SuiteName as S;
    let base = |suite| {
        let mut r = SuiteRequest::new(suite);
        r.depth_n = common.depth_n;
        r.depth_m = common.depth_m;
        r.algebra = common.algebra.clone();
        r
    };
    let r = match command {
        Command::Check(c) => match c {
            CheckCmd::Axioms { order, exprs } => SuiteRequest {
                order: Some(order),
                exprs,
                ..base(S::QsiAxioms)
            },
            CheckCmd::Twisted { order } => SuiteRequest {
                order: Some(order),
                ..base(S::TwistedAxioms)
            },
            CheckCmd::Theta { max } => SuiteRequest {
                order: Some(max),
                ..base(S::ThetaTable)
            },
            CheckCmd::Hopf { max_a, max_b, witnesses } => SuiteRequest {
                bounds: (max_a, max_b),
                witnesses,
                ..base(S::HopfAxioms)
            },
            CheckCmd::Matrix { count, seed } => {
                let b = base(S::MatrixLemmas);
                SuiteRequest {
                    count: Some(count),
                    seed: seed.unwrap_or(b.seed),
                    ..b
                }
            }
            CheckCmd::Qbinomial { max_sum } => SuiteRequest {
                order: Some(max_sum),
                ..base(S::QBinomial)
            },
        },
        Command::Morphism(m) => match m {
            MorphismCmd::Hopf { exprs } => SuiteRequest {
                exprs,
                ..base(S::HopfMorphism)
            },
            MorphismCmd::Taylor { exprs, exp_order } => SuiteRequest {
                exprs,
                order: Some(exp_order),
                ..base(S::Taylor)
            },
            MorphismCmd::Euler { exprs } => SuiteRequest {
                exprs,
                ..base(S::Euler)
            },
        },
        Command::Deform(d) => match d {
            DeformCmd::Check { e, f } => SuiteRequest {
                e: Some(e),
                f: Some(f),
                ..base(S::Deform)
            },
            DeformCmd::Derive { order } => SuiteRequest {
                order: Some(order),
                ..base(S::DeriveRelation)
            },
            DeformCmd::Torsor { count, seed } => {
                let b = base(S::Torsor);
                SuiteRequest {
                    count: Some(count),
                    seed: seed.unwrap_or(b.seed),
                    ..b
                }
            }
            DeformCmd::Differential { c, order } => SuiteRequest {
                constant: Some(c),
                order: Some(order),
                ..base(S::Differential)
            },
        },
        Command::Series(s) => match s {
            SeriesCmd::Heine { alpha, beta, gamma, order } => SuiteRequest {
                alpha,
                beta,
                gamma,
                order: Some(order),
                ..base(S::Heine)
            },
            SeriesCmd::Hypergeom { a, b, c, order } => SuiteRequest {
                a,
                b,
                c,
                order: Some(order),
                ..base(S::Hypergeom)
            },
        },
        Command::Suite { name, order, seed, count } => {
            let b = base(name.parse().map_err(|e: qgalois_cli::SuiteError| e.to_string())?);
            SuiteRequest {
                order,
                count,
                seed: seed.unwrap_or(b.seed),
                ..b
            }
        }
        Command::Parse { .. } => unreachable!("handled separately"),
    };
    Ok(r)
}

fn parse_command(common: &Common, expr: &str, context: ParseContext) -> ExitCode {
    let ctx = match context {
        ParseContext::Scalar => Context::Scalar,
        ParseContext::Field => Context::Field,
        ParseContext::Hq => Context::Hq,
        ParseContext::Algebra => match parse_presentation(common.algebra.as_deref().unwrap_or("A1")) {
            Ok(spec) => Context::Algebra(spec),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
    };
    match parse_expression(expr, &ctx) {
        Ok(v) => {
            if common.json {
                println!("{}", serde_json::json!({ "input": expr, "value": v.to_string() }));
            } else {
                println!("{v}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Parse { expr, context } = &cli.command {
        return parse_command(&cli.common, expr, *context);
    }
    let req = match request(&cli.common, cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let report = match run_suite(&req) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let pass = report.all_pass();
    if cli.common.json {
        let ts = (!cli.common.no_timestamp)
            .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
        println!("{}", ReportDocument::new(report, ts).to_json());
    } else {
        print!("{}", render_text(&report));
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
