use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use scmh::betti::{betti_table, check_generator_array};
use scmh::characterization::{
    build_witness, check_htriangle_with, regular_composition, rho, sigma_top, CharacterizationError, CheckOptions,
    CompositionSpace, Positivity, RhoMethod, Verdict,
};
use scmh::complexes::{alexander_dual, h_from_htilde, htriangle_tilde, Face};
use scmh::correspondence::{lambda, lambda_inverse, nu, nu_inverse, phi, LatticePath};
use scmh::harness::formats::{
    parse_facets, parse_gens, parse_generator_array, parse_triangle, write_facets, write_triangle,
};
use scmh::harness::{enumerate_shifted_with, suites};
use scmh::multicomplexes::Monomial;

#[derive(Parser)]
#[command(name = "scmh", version, about = "h-triangles of sequentially Cohen-Macaulay complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PositivityArg {
    AllowZero,
    Strict,
}

#[derive(Args)]
struct Conventions {
    /// Whether composition values may be zero.
    #[arg(long, value_enum, default_value = "allow-zero")]
    positivity: PositivityArg,
}

impl Conventions {
    fn positivity(&self) -> Positivity {
        match self.positivity {
            PositivityArg::AllowZero => Positivity::AllowZero,
            PositivityArg::Strict => Positivity::Strict,
        }
    }

    fn options(&self) -> CheckOptions {
        CheckOptions { positivity: self.positivity(), method: RhoMethod::Regular }
    }
}

#[derive(Args)]
struct SpaceArgs {
    /// Number of variables.
    #[arg(long)]
    vars: usize,
    /// Degree cap.
    #[arg(long)]
    cap: u32,
    /// Lower-bound M-sequence, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    h: Vec<u64>,
    /// Mass to distribute.
    r: u64,
    #[command(flatten)]
    conventions: Conventions,
}

impl SpaceArgs {
    fn space(&self) -> Result<CompositionSpace> {
        Ok(CompositionSpace::new(self.vars, self.cap, self.h.clone())?.with_positivity(self.conventions.positivity()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BfsInput {
    /// A lattice path over {N, E}.
    Path,
    /// A comma-separated set of north-step positions.
    Set,
    /// A monomial such as `w1*w3*w4^2`.
    Monomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyScope {
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a triangle file is an h̃-triangle.
    CheckTriangle {
        file: PathBuf,
        #[command(flatten)]
        conventions: Conventions,
    },
    /// Build a shifted complex realizing a triangle file.
    Witness {
        file: PathBuf,
        /// Write the facets here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        conventions: Conventions,
    },
    /// Print the h̃-triangle (default) or h-triangle of a facets file.
    Htriangle {
        file: PathBuf,
        #[arg(long, conflicts_with = "htilde")]
        h: bool,
        #[arg(long)]
        htilde: bool,
    },
    /// Print the Alexander dual of a facets file.
    Dual { file: PathBuf },
    /// Translate between lattice paths, north-step sets and monomials.
    Bfs {
        kind: BfsInput,
        value: String,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
    },
    /// Least top-variable mass of a composition.
    Rho {
        #[command(flatten)]
        space: SpaceArgs,
        /// Use the exhaustive search instead of the regular composition.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the regular composition.
    RegularComposition {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Betti table of a monomial ideal.
    Betti { file: PathBuf },
    /// Decide whether a generator array belongs to a componentwise linear ideal.
    CheckGeneratorArray {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        conventions: Conventions,
    },
    /// Enumerate shifted complexes on [n].
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        dmax: u32,
        /// Replay the checks on every complex.
        #[arg(long, value_enum)]
        verify: Option<VerifyScope>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Print every complex's facets.
        #[arg(long)]
        list: bool,
    },
}

enum Outcome {
    Success,
    Reject,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn verdict(v: Verdict) -> Outcome {
    println!("{v}");
    if v.is_accept() {
        Outcome::Success
    } else {
        Outcome::Reject
    }
}

fn parse_set(s: &str) -> Result<Face> {
    let vs = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().with_context(|| format!("`{t}` is not a position")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Face::from_vertices(vs)?)
}

fn print_path(path: &LatticePath) -> Result<()> {
    println!("path     {path}");
    println!("r, a     {}, {}", path.r(), path.a());
    println!("set      {}", nu(path));
    println!("monomial {}", lambda(path));
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::CheckTriangle { file, conventions } => {
            let t = parse_triangle(&read(&file)?).with_context(|| file.display().to_string())?;
            Ok(verdict(check_htriangle_with(&t, &conventions.options())?))
        }
        Command::Witness { file, out, conventions } => {
            let t = parse_triangle(&read(&file)?).with_context(|| file.display().to_string())?;
            let c = match build_witness(&t, &conventions.options()) {
                Ok(c) => c,
                Err(CharacterizationError::Rejected(v)) => return Ok(verdict(v)),
                Err(e) => return Err(e.into()),
            };
            let text = write_facets(&c);
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(Outcome::Success)
        }
        Command::Htriangle { file, h, htilde: _ } => {
            let c = parse_facets(&read(&file)?).with_context(|| file.display().to_string())?;
            let t = htriangle_tilde(&c)?;
            print!("{}", write_triangle(&if h { h_from_htilde(&t) } else { t }));
            Ok(Outcome::Success)
        }
        Command::Dual { file } => {
            let c = parse_facets(&read(&file)?).with_context(|| file.display().to_string())?;
            print!("{}", write_facets(&alexander_dual(&c)));
            Ok(Outcome::Success)
        }
        Command::Bfs { kind, value, r, a } => {
            match kind {
                BfsInput::Path => {
                    let path: LatticePath = value.parse()?;
                    if r.is_some_and(|r| r != path.r()) || a.is_some_and(|a| a != path.a()) {
                        bail!("path {path} ends at ({}, {}), not at the given --r/--a", path.r(), path.a());
                    }
                    print_path(&path)?;
                }
                BfsInput::Set => {
                    let (Some(r), Some(a)) = (r, a) else { bail!("`bfs set` needs --r and --a") };
                    print_path(&nu_inverse(parse_set(&value)?, r, a)?)?;
                }
                BfsInput::Monomial => {
                    let (Some(r), Some(a)) = (r, a) else { bail!("`bfs monomial` needs --r and --a") };
                    let m = Monomial::parse(&value, r as usize)?;
                    print_path(&lambda_inverse(&m, a)?)?;
                    println!("phi      {}", phi(&m, a)?);
                }
            }
            Ok(Outcome::Success)
        }
        Command::Rho { space, oracle } => {
            let method = if oracle { RhoMethod::Search } else { RhoMethod::Regular };
            match rho(&space.space()?, space.r, method)? {
                Some(v) => {
                    println!("{v}");
                    Ok(Outcome::Success)
                }
                None => {
                    println!("INFEASIBLE");
                    Ok(Outcome::Reject)
                }
            }
        }
        Command::RegularComposition { space } => match regular_composition(&space.space()?, space.r) {
            Ok(c) => {
                print!("{c}");
                println!("# top mass {}", sigma_top(&c));
                Ok(Outcome::Success)
            }
            Err(CharacterizationError::Infeasible { .. }) => {
                println!("INFEASIBLE");
                Ok(Outcome::Reject)
            }
            Err(e) => Err(e.into()),
        },
        Command::Betti { file } => {
            let ideal = parse_gens(&read(&file)?).with_context(|| file.display().to_string())?;
            print!("{}", betti_table(&ideal)?);
            Ok(Outcome::Success)
        }
        Command::CheckGeneratorArray { file, n, r, d, conventions } => {
            let array = parse_generator_array(&read(&file)?, n, r, d).with_context(|| file.display().to_string())?;
            Ok(verdict(check_generator_array(&array, &conventions.options())?))
        }
        Command::Census { n, dmax, verify, jobs, list } => {
            let complexes = enumerate_shifted_with(n, dmax, jobs)?;
            if list {
                for c in &complexes {
                    println!("{c}");
                }
            }
            println!("{} shifted complexes on [{n}] with faces of at most {dmax} vertices", complexes.len());
            if verify.is_some() {
                let report = suites::verify_census(&complexes, &CheckOptions::default());
                println!("{report}");
                if !report.passed {
                    return Ok(Outcome::Reject);
                }
            }
            Ok(Outcome::Success)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Reject) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
