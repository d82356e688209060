mod commands;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxreg::arith::{Field, DEFAULT_PRIME};
use coxreg::cohomology::Stabilization;
use coxreg::lab::{MultiplicationMode, RegionPath, DIAGONAL_VARIABLE_LIMIT};
use coxreg::resolution::GradedModule;
use coxreg::ring::{CoxRing, MultiDegree};

use commands::{CohomologyArgs, ConeQuery, Outcome};
use input::{parse_box, parse_degree, parse_degree_list, parse_field, parse_space, RingFile};
use output::Format;

/// Why a command did not succeed. Each kind has its own exit code.
pub enum Failure {
    Usage(String),
    Engine(coxreg::Error),
    Check(String),
}

impl From<coxreg::Error> for Failure {
    fn from(e: coxreg::Error) -> Self {
        match e {
            coxreg::Error::StabilizationNotReached { .. } => Failure::Engine(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Engine(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Check(m) => m.clone(),
            Failure::Engine(e) => e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "coxreg",
    version,
    about = "Multigraded regularity and sheaf cohomology on products of projective spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Coefficient field, `GF(p)` or `QQ`. Overrides the field line of input files.
    #[arg(long, global = true)]
    field: Option<String>,
    /// First power of the irrelevant ideal tried when stabilizing local cohomology.
    #[arg(long, global = true, default_value_t = 2)]
    t_start: u32,
    /// Largest power of the irrelevant ideal tried before giving up.
    #[arg(long, global = true, default_value_t = 8)]
    t_cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Ideal,
    Quotient,
}

impl ModuleKind {
    fn as_str(self) -> &'static str {
        match self {
            ModuleKind::Ideal => "ideal",
            ModuleKind::Quotient => "quotient",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Corollary,
    Remark,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Direct,
    Diagonal,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Saturate the ideal of a ring file.
    Saturate {
        #[command(flatten)]
        source: IdealSource,
        /// `irrelevant` or `;`-separated generators.
        #[arg(long, default_value = "irrelevant")]
        against: String,
    },
    /// Sheaf cohomology dimensions over a box of twists.
    Cohomology(CohomologyCli),
    /// Decide multigraded regularity, directly or by the vanishing criterion.
    Regularity {
        #[command(flatten)]
        source: IdealSource,
        /// Regularity index, e.g. `1,5`.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, value_enum, default_value = "ideal")]
        module: ModuleKind,
        /// Only evaluate the numerical prediction.
        #[arg(long)]
        predict: bool,
        #[arg(long, requires = "predict")]
        dim_y: Option<usize>,
        #[arg(long, value_enum, default_value = "remark")]
        path: PathArg,
    },
    /// Check the vanishing theorem for the generators of a ring file.
    TheoremMain {
        #[command(flatten)]
        source: IdealSource,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        l: String,
    },
    /// Nonvanishing witness for a complete intersection.
    Sharpness {
        #[arg(long)]
        space: String,
        /// Form degrees, `;`-separated.
        #[arg(long)]
        degrees: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Compare against the engine on generic forms drawn with this seed.
        #[arg(long)]
        cross_check: Option<u64>,
    },
    /// Surjectivity of the multiplication map of adjoint sections.
    Multmap {
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        l1: String,
        #[arg(long, allow_hyphen_values = true)]
        l2: String,
        #[arg(long, value_enum, default_value = "direct")]
        mode: ModeArg,
        /// Largest variable count of the product square for diagonal mode.
        #[arg(long, default_value_t = DIAGONAL_VARIABLE_LIMIT)]
        limit: usize,
    },
    /// First cohomology of powers of the diagonal of P1 × P1.
    Wahl {
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        l1: i64,
        #[arg(long, allow_hyphen_values = true)]
        l2: i64,
    },
    /// Queries on a two-dimensional cone with quadratic irrational rays.
    Cones {
        #[arg(long)]
        file: String,
        #[arg(long, group = "query")]
        contains: Option<String>,
        /// `A,B`: is A + cone inside B + cone?
        #[arg(long, group = "query")]
        subset: Option<String>,
        /// `;`-separated point names.
        #[arg(long, group = "query")]
        apex: Option<String>,
    },
    /// Reproduce the worked examples and report each check.
    VerifyPaper {
        #[arg(value_enum, default_value = "all")]
        target: verify::Target,
    },
}

#[derive(Args)]
struct IdealSource {
    /// Ring file holding the ideal.
    #[arg(long, conflicts_with_all = ["ring", "ideal"])]
    file: Option<String>,
    /// Product space of an inline ideal, e.g. `P(2,2)`.
    #[arg(long, requires = "ideal")]
    ring: Option<String>,
    /// Inline `;`-separated generators.
    #[arg(long, requires = "ring", allow_hyphen_values = true)]
    ideal: Option<String>,
}

impl IdealSource {
    fn load(&self, field: Option<Field>) -> Result<RingFile, Failure> {
        match (&self.file, &self.ring, &self.ideal) {
            (Some(path), _, _) => commands::load_ring_file(path, field),
            (None, Some(ring), Some(ideal)) => commands::inline_ring(ring, ideal, field),
            _ => Err(Failure::Usage("give --file, or --ring with --ideal".into())),
        }
    }
}

#[derive(Args)]
struct CohomologyCli {
    /// Ring file holding the ideal.
    #[arg(long, conflicts_with_all = ["ring", "line_bundle", "ideal"])]
    file: Option<String>,
    #[arg(long, value_enum, default_value = "quotient")]
    module: ModuleKind,
    /// Product space, e.g. `P(2,2)`, for a line bundle or an inline ideal.
    #[arg(long)]
    ring: Option<String>,
    /// Inline `;`-separated generators.
    #[arg(long, requires = "ring", conflicts_with = "line_bundle", allow_hyphen_values = true)]
    ideal: Option<String>,
    /// Degree `a` of the line bundle O(a).
    #[arg(long, allow_hyphen_values = true)]
    line_bundle: Option<String>,
    /// Use the closed form instead of the engine.
    #[arg(long, requires = "line_bundle")]
    closed_form: bool,
    /// Box of twists, e.g. `0..2,-1..=1`. Defaults to the zero twist.
    #[arg(long, allow_hyphen_values = true)]
    twists: Option<String>,
    /// Comma-separated cohomological indices. Defaults to all.
    #[arg(long)]
    indices: Option<String>,
}

fn usage<T>(r: Result<T, String>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn field_of(cli: &Cli) -> Result<Option<Field>, Failure> {
    cli.field
        .as_deref()
        .map(parse_field)
        .transpose()
        .map_err(Failure::Usage)
}

fn cohomology(
    c: &CohomologyCli,
    field: Option<Field>,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    let inline = IdealSource {
        file: c.file.clone(),
        ring: c.ring.clone(),
        ideal: c.ideal.clone(),
    };
    let (module, closed_form, space) = match (&c.file, &c.ring, &c.line_bundle) {
        (Some(_), _, _) | (None, Some(_), None) => {
            let rf = inline.load(field)?;
            let space = rf.ring.space().clone();
            (commands::module_of(&rf, c.module.as_str())?, None, space)
        }
        (None, Some(space), Some(a)) => {
            let space = usage(parse_space(space))?;
            let a = usage(parse_degree(a))?;
            if a.len() != space.nfactors() {
                return Err(Failure::Usage(format!("line bundle {a} does not match {space}")));
            }
            let ring = CoxRing::new(space.clone(), field.unwrap_or(Field::Prime(DEFAULT_PRIME)));
            let closed = c.closed_form.then(|| (space.clone(), a.clone()));
            (GradedModule::free(&ring, -&a), closed, space)
        }
        _ => {
            return Err(Failure::Usage(
                "give --file, --ring with --ideal, or --ring with --line-bundle".into(),
            ))
        }
    };
    let twists = match &c.twists {
        Some(b) => usage(parse_box(b))?,
        None => vec![MultiDegree::zero(space.nfactors())],
    };
    if let Some(bad) = twists.iter().find(|u| u.len() != space.nfactors()) {
        return Err(Failure::Usage(format!("twist {bad} does not match {space}")));
    }
    let indices = match &c.indices {
        Some(s) => s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Failure::Usage(format!("bad index `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => (0..=space.dim()).collect(),
    };
    commands::cohomology_cmd(
        CohomologyArgs {
            module,
            closed_form,
            twists,
            indices,
        },
        params,
        format,
    )
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let params = Stabilization::new(cli.t_start, cli.t_cap)?;
    let field = field_of(cli)?;
    let default_field = field.unwrap_or(Field::Prime(DEFAULT_PRIME));
    let format = cli.format;
    match &cli.command {
        Command::Saturate { source, against } => {
            let rf = source.load(field)?;
            commands::saturate_cmd(&rf, against)
        }
        Command::Cohomology(c) => cohomology(c, field, params, format),
        Command::Regularity {
            source,
            target,
            module,
            predict,
            dim_y,
            path,
        } => {
            let rf = source.load(field)?;
            let target = usage(parse_degree(target))?;
            if target.len() != rf.ring.space().nfactors() {
                return Err(Failure::Usage(format!(
                    "target {target} does not match {}",
                    rf.ring.space()
                )));
            }
            if *predict {
                let dim_y = dim_y.ok_or_else(|| Failure::Usage("--predict needs --dim-y".into()))?;
                let path = match path {
                    PathArg::Corollary => RegionPath::Corollary,
                    PathArg::Remark => RegionPath::Remark,
                };
                commands::regularity_predicted(&rf, &target, dim_y, path, format)
            } else {
                commands::regularity_direct(&rf, module.as_str(), &target, params, format)
            }
        }
        Command::TheoremMain { source, e, m, l } => {
            let rf = source.load(field)?;
            let l = usage(parse_degree(l))?;
            commands::theorem_cmd(&rf, *e, *m, &l, params, format)
        }
        Command::Sharpness {
            space,
            degrees,
            n,
            cross_check,
        } => {
            let space = usage(parse_space(space))?;
            let degrees = usage(parse_degree_list(degrees))?;
            let n = usage(parse_degree(n))?;
            commands::sharpness_cmd(&space, default_field, &degrees, &n, *cross_check, params, format)
        }
        Command::Multmap {
            space,
            l1,
            l2,
            mode,
            limit,
        } => {
            let space = usage(parse_space(space))?;
            let (l1, l2) = (usage(parse_degree(l1))?, usage(parse_degree(l2))?);
            let modes = match mode {
                ModeArg::Direct => vec![MultiplicationMode::DirectRank],
                ModeArg::Diagonal => vec![MultiplicationMode::DiagonalVanishing],
                ModeArg::Both => vec![MultiplicationMode::DirectRank, MultiplicationMode::DiagonalVanishing],
            };
            commands::multmap_cmd(&space, default_field, &l1, &l2, &modes, *limit, params, format)
        }
        Command::Wahl { m, l1, l2 } => commands::wahl_cmd(default_field, *m, *l1, *l2, params, format),
        Command::Cones {
            file,
            contains,
            subset,
            apex,
        } => {
            let cf = commands::load_cone_file(file)?;
            let query = match (contains, subset, apex) {
                (Some(p), _, _) => ConeQuery::Contains(p.clone()),
                (_, Some(s), _) => {
                    let (a, b) = s
                        .split_once(',')
                        .ok_or_else(|| Failure::Usage(format!("--subset expects `A,B`, got `{s}`")))?;
                    ConeQuery::Subset(a.trim().into(), b.trim().into())
                }
                (_, _, Some(a)) => ConeQuery::Apex(a.split(';').map(|s| s.trim().to_string()).collect()),
                _ => return Err(Failure::Usage("give one of --contains, --subset, --apex".into())),
            };
            commands::cones_cmd(&cf, &query, format)
        }
        Command::VerifyPaper { target } => {
            let lines = verify::run(*target, default_field, params)?;
            Ok(Outcome::from_checks(&lines, format))
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("COXREG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // A second initialization can only fail if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let invocation = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = run(&cli).and_then(|o| {
        print!("{}", o.text);
        if o.passed {
            Ok(())
        } else {
            Err(Failure::Check("one or more checks failed".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("coxreg {invocation}: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
