//! `infcm`: command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails, 2 on
//! usage, input or resource errors.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use infcm::cm::{certify_cm, verify_theorem_a_hypotheses, ChainReport, CmReport};
use infcm::complex::{complex_from_ideal, ideal_from_complex, one_skeleton_dot, SimplicialComplex, DEFAULT_FACE_CAP};
use infcm::field::{Field, FieldChoice, PrimeField, Rationals};
use infcm::groebner::{buchberger_criterion, BuchbergerOptions, CriterionReport, DEFAULT_PAIR_BUDGET};
use infcm::monomial::{MonomialIdeal, VarIndex};
use infcm::order::TermOrder;
use infcm::poly::parse_polynomial;
use infcm::schubert::{
    antidiagonal_initial_ideal, determinantal_ideal, initial_complex, rank_matrix, theorem_d_pipeline,
    InfinitePermutation, PartialPermutation, PipelineConfig, PipelineReport,
};
use infcm::sop::{extend_good_sop, find_good_sop, SopMatrix, DEFAULT_SAMPLE_BUDGET};
use infcm::Error;

#[derive(Parser)]
#[command(name = "infcm", version, about = "Stanley-Reisner, Groebner and Schubert checks at finite truncation")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Serialize, Clone)]
struct Config {
    /// Coefficient field: a prime `p`, or `Q` where rationals are supported.
    #[arg(long, global = true, default_value = "32003")]
    field: String,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, env = "INFCM_FACE_CAP", default_value_t = DEFAULT_FACE_CAP)]
    face_cap: usize,
    #[arg(long, global = true, env = "INFCM_PAIR_BUDGET", default_value_t = DEFAULT_PAIR_BUDGET)]
    pair_budget: usize,
    /// Resampling attempts when searching for good systems of parameters.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLE_BUDGET)]
    sample_budget: usize,
    #[arg(long, global = true, value_enum)]
    #[serde(skip)]
    format: Option<Format>,
    /// Print stage timings to stderr.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    #[serde(skip)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Stanley-Reisner correspondence.
    #[command(subcommand)]
    Sr(SrCommand),
    /// Both Cohen-Macaulay certificates for a complex.
    CheckCm {
        #[arg(long)]
        complex: String,
    },
    /// Hypotheses of the direct-limit theorem for a chain of complexes.
    VerifyChain {
        /// Complex files in chain order.
        #[arg(long = "complex", required = true, num_args = 1..)]
        complexes: Vec<String>,
        /// Stand-in for the union; defaults to the last complex.
        #[arg(long)]
        top: Option<String>,
    },
    /// Linear systems of parameters.
    #[command(subcommand)]
    Sop(SopCommand),
    /// Groebner basis certification.
    #[command(subcommand)]
    Groebner(GroebnerCommand),
    /// Partial permutations and Schubert determinantal ideals.
    #[command(subcommand)]
    Schubert(SchubertCommand),
    /// Same as `schubert pipeline`.
    Pipeline(PipelineArgs),
}

#[derive(Subcommand)]
enum SrCommand {
    /// Complex of a squarefree monomial ideal.
    FromIdeal {
        /// JSON file `{"squarefree": true, "generators": [...]}`.
        #[arg(long)]
        ideal: String,
        /// Ambient vertices, e.g. "x[1,1] x[1,2]"; defaults to the generators' support.
        #[arg(long)]
        vertices: Option<String>,
    },
    /// Stanley-Reisner ideal of a complex.
    ToIdeal {
        #[arg(long)]
        complex: String,
    },
}

#[derive(Subcommand)]
enum SopCommand {
    /// Sample a good system of parameters.
    Find {
        #[arg(long)]
        complex: String,
    },
    /// Extend a good system to a complex containing the first as a full subcomplex.
    Extend {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        sop: String,
        #[arg(long)]
        target: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Antidiag,
    Lex,
}

#[derive(Subcommand)]
enum GroebnerCommand {
    /// Buchberger's criterion on a list of polynomials.
    Check {
        #[arg(long = "poly")]
        polys: Vec<String>,
        /// File with one polynomial per line.
        #[arg(long)]
        file: Option<String>,
        #[arg(long, value_enum, default_value = "antidiag")]
        order: OrderArg,
        #[arg(long)]
        skip_coprime: bool,
    },
}

#[derive(Subcommand)]
enum SchubertCommand {
    /// Rank matrix of a partial permutation in one-line notation.
    Rank { perm: String },
    /// Minor generators of the Schubert determinantal ideal.
    Ideal {
        perm: String,
        #[arg(long)]
        essential: bool,
    },
    /// Antidiagonal initial ideal.
    Initial {
        perm: String,
        #[arg(long)]
        verify: bool,
    },
    /// Stanley-Reisner complex of the initial ideal.
    Complex {
        perm: String,
        /// Print the 1-skeleton in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Level-by-level verification for an infinite permutation.
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct PipelineArgs {
    /// Built-in infinite permutation (`even`).
    #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
    rule: Option<String>,
    /// Finitely supported permutation, e.g. "(1 2)(3 5)" or "2 1 3".
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    mmax: u32,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotGroebner => Failure::Verification(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    stdout: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| usage(format!("{path}: {e}")))
}

fn prime(config: &Config) -> Result<PrimeField, Failure> {
    match FieldChoice::parse(&config.field)? {
        FieldChoice::Prime(p) => Ok(PrimeField::new(p)?),
        FieldChoice::Rational => Err(usage("this command needs a prime field")),
    }
}

fn load_complex(path: &str, config: &Config) -> Result<SimplicialComplex, Failure> {
    let c: SimplicialComplex = read_json(path)?;
    c.faces_capped(config.face_cap)?;
    Ok(c)
}

fn envelope(command: &str, config: &Config, result: impl Serialize) -> String {
    let v = json!({ "command": command, "config": config, "result": result });
    let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
    s.push('\n');
    s
}

fn format_or(config: &Config, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = config.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(usage("output format not supported by this command"));
    }
    Ok(f)
}

fn validate_config(config: &Config) -> Result<(), Failure> {
    if config.face_cap == 0 || config.pair_budget == 0 || config.sample_budget == 0 {
        return Err(usage("caps and budgets must be positive"));
    }
    FieldChoice::parse(&config.field)?;
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let config = &cli.config;
    validate_config(config)?;
    let start = std::time::Instant::now();
    let out = match &cli.command {
        Command::Sr(cmd) => sr(cmd, config),
        Command::CheckCm { complex } => check_cm(complex, config),
        Command::VerifyChain { complexes, top } => verify_chain(complexes, top.as_deref(), config),
        Command::Sop(cmd) => sop(cmd, config),
        Command::Groebner(GroebnerCommand::Check { polys, file, order, skip_coprime }) => {
            groebner_check(polys, file.as_deref(), *order, *skip_coprime, config)
        }
        Command::Schubert(cmd) => schubert(cmd, config),
        Command::Pipeline(args) => pipeline(args, config),
    };
    if config.verbose > 0 {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    out
}

fn ok(stdout: String) -> Result<Outcome, Failure> {
    Ok(Outcome { stdout, pass: true })
}

fn complex_text(c: &SimplicialComplex) -> String {
    let mut s = String::new();
    let names = |vs: &[VarIndex]| vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let _ = writeln!(s, "ambient: {}", names(c.vertices()));
    let _ = writeln!(s, "dimension: {}", c.dimension());
    let _ = writeln!(s, "facets:");
    for f in c.facets() {
        let _ = writeln!(s, "  {{{}}}", names(&f));
    }
    s
}

fn render_complex(command: &str, c: &SimplicialComplex, config: &Config, default: Format) -> Result<Outcome, Failure> {
    let out = match format_or(config, default, &[Format::Json, Format::Text, Format::Dot])? {
        Format::Json => envelope(command, config, c),
        Format::Text => complex_text(c),
        Format::Dot => one_skeleton_dot(c),
    };
    ok(out)
}

fn ideal_text(ideal: &MonomialIdeal) -> String {
    ideal.generators().iter().map(|g| format!("{g}\n")).collect()
}

fn parse_vertices(s: &str) -> Result<Vec<VarIndex>, Failure> {
    s.split_whitespace()
        .map(|tok| {
            let p = parse_polynomial(&Rationals, tok)?;
            match p.variables().as_slice() {
                [v] if p.len() == 1 => Ok(*v),
                _ => Err(usage(format!("`{tok}` is not a single variable"))),
            }
        })
        .collect()
}

fn sr(cmd: &SrCommand, config: &Config) -> Result<Outcome, Failure> {
    match cmd {
        SrCommand::FromIdeal { ideal, vertices } => {
            let ideal: MonomialIdeal = read_json(ideal)?;
            let vertices = match vertices {
                Some(v) => parse_vertices(v)?,
                None => ideal.generators().iter().flat_map(|g| g.support().collect::<Vec<_>>()).collect(),
            };
            let c = complex_from_ideal(&ideal, vertices)?;
            render_complex("sr from-ideal", &c, config, Format::Json)
        }
        SrCommand::ToIdeal { complex } => {
            let c = load_complex(complex, config)?;
            let ideal = ideal_from_complex(&c)?;
            match format_or(config, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => ok(envelope("sr to-ideal", config, &ideal)),
                _ => ok(ideal_text(&ideal)),
            }
        }
    }
}

fn cm_text(r: &CmReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pure: {}", r.pure);
    let _ = writeln!(s, "reisner: {}", verdict(r.reisner_pass));
    let _ = writeln!(s, "sop quotient: {}", verdict(r.sop_quotient_pass));
    let _ = writeln!(s, "h-vector: {:?}", r.hvector);
    let _ = writeln!(s, "quotient dims: {:?}", r.quotient_dims);
    let _ = writeln!(s, "p: {}", r.modulus);
    s
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn check_cm(path: &str, config: &Config) -> Result<Outcome, Failure> {
    let field = prime(config)?;
    let c = load_complex(path, config)?;
    let mut r = certify_cm(&c, &field, config.seed, config.sample_budget)?;
    r.complex_id = path.to_string();
    let pass = r.is_cm();
    let stdout = match format_or(config, Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => envelope("check-cm", config, &r),
        _ => cm_text(&r),
    };
    Ok(Outcome { stdout, pass })
}

fn chain_text(r: &ChainReport) -> String {
    let mut s = String::new();
    for l in &r.levels {
        let _ = writeln!(
            s,
            "level {}: {} (full in top: {}, pure: {}, reisner: {}, sop quotient: {})",
            l.level,
            verdict(l.pass),
            verdict(l.full_in_top.holds()),
            l.cm.pure,
            verdict(l.cm.reisner_pass),
            verdict(l.cm.sop_quotient_pass)
        );
    }
    let _ = writeln!(s, "union equals top: {}", verdict(r.union_equals_top));
    let _ = writeln!(s, "compatible sop chain: {}", verdict(r.sop_chain.pass));
    let _ = writeln!(s, "overall: {}", verdict(r.pass));
    s
}

fn verify_chain(paths: &[String], top: Option<&str>, config: &Config) -> Result<Outcome, Failure> {
    let field = prime(config)?;
    let chain = paths.iter().map(|p| load_complex(p, config)).collect::<Result<Vec<_>, _>>()?;
    let top = match top {
        Some(p) => load_complex(p, config)?,
        None => chain.last().expect("at least one complex").clone(),
    };
    let r = verify_theorem_a_hypotheses(&chain, &top, &field, config.seed, config.sample_budget)?;
    let stdout = match format_or(config, Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => envelope("verify-chain", config, &r),
        _ => chain_text(&r),
    };
    Ok(Outcome { stdout, pass: r.pass })
}

fn sop_text(m: &SopMatrix) -> String {
    let mut s = String::new();
    let cols: Vec<String> = m.columns.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "p: {}", m.modulus);
    let _ = writeln!(s, "columns: {}", cols.join(" "));
    for row in &m.rows {
        let r: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{}", r.join(" "));
    }
    s
}

fn sop(cmd: &SopCommand, config: &Config) -> Result<Outcome, Failure> {
    let field = prime(config)?;
    let (name, m) = match cmd {
        SopCommand::Find { complex } => {
            let c = load_complex(complex, config)?;
            ("sop find", find_good_sop(&c, &field, config.seed, config.sample_budget)?)
        }
        SopCommand::Extend { complex, sop, target } => {
            let c = load_complex(complex, config)?;
            let t = load_complex(target, config)?;
            let m: SopMatrix = read_json(sop)?;
            let m = SopMatrix::new(m.modulus, m.columns, m.rows)?;
            ("sop extend", extend_good_sop(&c, &m, &t, &field, config.seed, config.sample_budget)?)
        }
    };
    match format_or(config, Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => ok(envelope(name, config, &m)),
        _ => ok(sop_text(&m)),
    }
}

fn criterion<F: Field>(
    field: &F,
    texts: &[String],
    order: OrderArg,
    skip_coprime: bool,
) -> Result<CriterionReport, Failure> {
    let polys = texts.iter().map(|t| parse_polynomial(field, t)).collect::<Result<Vec<_>, _>>()?;
    let order = match order {
        OrderArg::Antidiag => TermOrder::AntidiagonalOmega2,
        OrderArg::Lex => TermOrder::InfiniteLex,
    };
    Ok(buchberger_criterion(&polys, &order, field, BuchbergerOptions { skip_coprime })?)
}

fn groebner_check(
    polys: &[String],
    file: Option<&str>,
    order: OrderArg,
    skip_coprime: bool,
    config: &Config,
) -> Result<Outcome, Failure> {
    let mut texts = polys.to_vec();
    if let Some(path) = file {
        texts.extend(
            read(path)?.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
        );
    }
    if texts.is_empty() {
        return Err(usage("no polynomials given"));
    }
    let r = match FieldChoice::parse(&config.field)? {
        FieldChoice::Prime(p) => criterion(&PrimeField::new(p)?, &texts, order, skip_coprime)?,
        FieldChoice::Rational => criterion(&Rationals, &texts, order, skip_coprime)?,
    };
    let pass = r.is_groebner();
    let stdout = match format_or(config, Format::Text, &[Format::Json, Format::Text])? {
        Format::Json => envelope("groebner check", config, &r),
        _ => {
            let mut s = format!(
                "generators: {}\npairs checked: {}\npairs skipped: {}\n",
                r.generators, r.pairs_checked, r.pairs_skipped
            );
            for (i, j) in &r.failing_pairs {
                let _ = writeln!(s, "nonzero remainder: ({}, {})", i + 1, j + 1);
            }
            let _ = writeln!(s, "groebner basis: {}", verdict(pass));
            s
        }
    };
    Ok(Outcome { stdout, pass })
}

fn polys_out<F: Field>(sigma: &PartialPermutation, field: &F, essential: bool) -> Result<Vec<String>, Failure> {
    Ok(determinantal_ideal(sigma, field, essential)?.iter().map(|p| p.to_text(field)).collect())
}

fn schubert(cmd: &SchubertCommand, config: &Config) -> Result<Outcome, Failure> {
    let field = FieldChoice::parse(&config.field)?;
    match cmd {
        SchubertCommand::Rank { perm } => {
            let sigma = PartialPermutation::parse(perm)?;
            let r = rank_matrix(&sigma);
            match format_or(config, Format::Text, &[Format::Json, Format::Text])? {
                Format::Json => ok(envelope("schubert rank", config, json!({ "permutation": sigma, "rank": r }))),
                _ => ok(r.to_string()),
            }
        }
        SchubertCommand::Ideal { perm, essential } => {
            let sigma = PartialPermutation::parse(perm)?;
            let gens = match field {
                FieldChoice::Prime(p) => polys_out(&sigma, &PrimeField::new(p)?, *essential)?,
                FieldChoice::Rational => polys_out(&sigma, &Rationals, *essential)?,
            };
            match format_or(config, Format::Text, &[Format::Json, Format::Text])? {
                Format::Json => ok(envelope(
                    "schubert ideal",
                    config,
                    json!({ "permutation": sigma, "essential": essential, "generators": gens }),
                )),
                _ => ok(gens.iter().map(|g| format!("{g}\n")).collect()),
            }
        }
        SchubertCommand::Initial { perm, verify } => {
            let sigma = PartialPermutation::parse(perm)?;
            let ideal = match field {
                FieldChoice::Prime(p) => antidiagonal_initial_ideal(&sigma, &PrimeField::new(p)?, *verify)?,
                FieldChoice::Rational => antidiagonal_initial_ideal(&sigma, &Rationals, *verify)?,
            };
            match format_or(config, Format::Text, &[Format::Json, Format::Text])? {
                Format::Json => ok(envelope(
                    "schubert initial",
                    config,
                    json!({ "permutation": sigma, "verified": verify, "ideal": ideal }),
                )),
                _ => ok(ideal_text(&ideal)),
            }
        }
        SchubertCommand::Complex { perm, dot } => {
            let sigma = PartialPermutation::parse(perm)?;
            let c = match field {
                FieldChoice::Prime(p) => initial_complex(&sigma, &PrimeField::new(p)?, false)?,
                FieldChoice::Rational => initial_complex(&sigma, &Rationals, false)?,
            };
            if *dot {
                if config.format.is_some_and(|f| f != Format::Dot) {
                    return Err(usage("--dot conflicts with --format"));
                }
                return ok(one_skeleton_dot(&c));
            }
            render_complex("schubert complex", &c, config, Format::Json)
        }
        SchubertCommand::Pipeline(args) => pipeline(args, config),
    }
}

fn pipeline_text(r: &PipelineReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "permutation: {}  m_max: {}  p: {}  seed: {}", r.permutation, r.m_max, r.modulus, r.seed);
    for l in &r.levels {
        let _ = writeln!(
            s,
            "level {}: sigma = {} in S_{{{},{}}}, {} generators, groebner {}, {} facets of dimension {}",
            l.m,
            l.permutation,
            l.permutation.m(),
            l.permutation.n(),
            l.generators.len(),
            verdict(l.groebner.is_groebner()),
            l.facets,
            l.dimension
        );
    }
    for i in &r.inclusions {
        let _ = writeln!(s, "inclusions {} -> {}: {}", i.m, i.m + 1, verdict(i.pass));
    }
    let _ = writeln!(s, "union at truncation: {}", verdict(r.union.pass));
    let _ = writeln!(s, "initial of union = union of initials: {}", verdict(r.initial_union.equal));
    s.push_str(&chain_text(&r.chain).replace("overall", "chain"));
    let _ = writeln!(s, "overall: {}", verdict(r.pass));
    s
}

fn pipeline(args: &PipelineArgs, config: &Config) -> Result<Outcome, Failure> {
    let field = prime(config)?;
    let sigma = match (&args.rule, &args.perm) {
        (Some(rule), None) if rule == "even" => InfinitePermutation::RuleEven,
        (Some(rule), None) => return Err(usage(format!("unknown rule `{rule}`; known rules: even"))),
        (None, Some(p)) => InfinitePermutation::parse(p)?,
        _ => return Err(usage("give exactly one of --rule and --perm")),
    };
    let cfg = PipelineConfig {
        m_max: args.mmax,
        seed: config.seed,
        sample_budget: config.sample_budget,
        pair_budget: config.pair_budget,
        face_cap: config.face_cap,
    };
    let r = theorem_d_pipeline(&sigma, &field, cfg)?;
    let stdout = match format_or(config, Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => envelope("schubert pipeline", config, &r),
        _ => pipeline_text(&r),
    };
    Ok(Outcome { stdout, pass: r.pass })
}
