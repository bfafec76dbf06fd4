//! Command-line front end.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 parse or usage
//! error, 3 invariant violation in an input, 4 degree cap exceeded.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{apply_u, check_u_epi, structure_projector};
use crate::error::{Error, Result};
use crate::frt::{
    check_coassociativity, check_comult_well_defined, check_counit_laws, check_manin_epi,
    corep_delta_check, counit_check, verify_hom_equals_frt,
};
use crate::linalg::column_space;
use crate::random::{random_space, rng_from_seed};
use crate::report::VerificationReport;
use crate::space::{boxtimes, dagger, hom_space, rigidity_reports, EquippedSpace};

use format::{read_space, write_space, RelationFile, ReportFile, SpaceFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Default cap on `--max-degree` for the Hilbert table.
pub const DEFAULT_DEGREE_CAP: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "qspace", version, about = "Equipped quantum spaces and FRT algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write A ⊠ B.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write A† = (A*, −Rᵀ).
    Dual {
        a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write hom[W,V] = W† ⊠ V.
    Hom {
        w: PathBuf,
        v: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Hilbert series of U(space) up to --max-degree.
    Hilbert {
        space: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Allow degrees above the default cap.
        #[arg(long)]
        cap_override: bool,
        /// Also write a JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite on V, W and optionally U.
    Verify {
        v: Option<PathBuf>,
        w: Option<PathBuf>,
        u: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Degree bound for the U-epimorphism check.
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        cap_override: bool,
        /// Ignore input files and run the suite on random quadratic spaces.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print a human-readable summary instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Write the equipped space (V, P) where P projects onto a relation span.
    Project {
        relations: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bialgebra,
    Rigidity,
    Epi,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(cli.command, echo, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Unsupported(_) => EXIT_USAGE,
        Error::DegreeCap { .. } => EXIT_CAP,
        _ => EXIT_INVARIANT,
    }
}

fn execute(command: Command, echo: Vec<String>, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Product { a, b, out } => {
            let space = boxtimes(&read_space(&a)?, &read_space(&b)?);
            emit_space(&SpaceFile::from_space(&space), &space, out.as_deref(), stdout)
        }
        Command::Dual { a, out } => {
            let space = dagger(&read_space(&a)?);
            emit_space(&SpaceFile::from_space(&space), &space, out.as_deref(), stdout)
        }
        Command::Hom { w, v, out } => {
            let space = hom_space(&read_space(&w)?, &read_space(&v)?);
            let file = SpaceFile::from_space(&space).with_generator_convention();
            emit_space(&file, &space, out.as_deref(), stdout)
        }
        Command::Hilbert {
            space,
            max_degree,
            cap_override,
            out,
        } => {
            check_cap(max_degree, cap_override)?;
            let algebra = apply_u(&read_space(&space)?);
            let series = algebra.hilbert(max_degree);
            let line: Vec<String> = series.iter().map(ToString::to_string).collect();
            writeln!(stdout, "{}", line.join(" "))?;
            if let Some(path) = out {
                let mut report = ReportFile::new(echo, Vec::new());
                report.hilbert = Some(series);
                std::fs::write(path, report.to_text())?;
            }
            Ok(EXIT_PASS)
        }
        Command::Verify {
            v,
            w,
            u,
            suite,
            max_degree,
            cap_override,
            random,
            dim,
            seed,
            trials,
            out,
            pretty,
        } => {
            check_cap(max_degree, cap_override)?;
            let checks = if random {
                if dim == 0 {
                    return Err(Error::Parse("--dim must be positive".into()));
                }
                let mut rng = rng_from_seed(seed);
                let mut all = Vec::new();
                for t in 0..trials {
                    let sv = random_space(&mut rng, dim, &[2]);
                    let sw = random_space(&mut rng, dim, &[2]);
                    let su = random_space(&mut rng, dim, &[2]);
                    for r in run_suite(suite, &sv, &sw, Some(&su), max_degree)? {
                        let name = format!("trial_{t:04}/{}", r.name);
                        all.push(r.renamed(name));
                    }
                }
                all
            } else {
                let (Some(v), Some(w)) = (v, w) else {
                    return Err(Error::Parse("verify needs V and W (or --random)".into()));
                };
                let sv = read_space(&v)?;
                let sw = read_space(&w)?;
                let su = u.as_deref().map(read_space).transpose()?;
                run_suite(suite, &sv, &sw, su.as_ref(), max_degree)?
            };
            let report = ReportFile::new(echo, checks);
            let text = if pretty {
                report.to_pretty()
            } else {
                report.to_text()
            };
            match out {
                Some(path) => std::fs::write(path, &text)?,
                None => write!(stdout, "{text}")?,
            }
            Ok(if report.pass {
                EXIT_PASS
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Project { relations, out } => {
            let text = std::fs::read_to_string(&relations)
                .map_err(|e| Error::Parse(format!("{}: {e}", relations.display())))?;
            let file = RelationFile::parse(&text)?;
            let rel = file.to_subspace()?;
            let p = structure_projector(&rel);
            let space = EquippedSpace::with_structure(file.dim, file.degree, p)?;
            emit_space(&SpaceFile::from_space(&space), &space, out.as_deref(), stdout)
        }
    }
}

fn check_cap(max_degree: usize, cap_override: bool) -> Result<()> {
    if max_degree > DEFAULT_DEGREE_CAP && !cap_override {
        return Err(Error::DegreeCap {
            requested: max_degree,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    Ok(())
}

fn emit_space(
    file: &SpaceFile,
    space: &EquippedSpace,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<i32> {
    match out {
        Some(path) => {
            write_space(path, file)?;
            let ranks: Vec<String> = space
                .structures()
                .iter()
                .map(|(n, m)| format!("rank(R_{n})={}", column_space(m).dim()))
                .collect();
            writeln!(
                stdout,
                "wrote {}: dim={} {}",
                path.display(),
                space.dim(),
                ranks.join(" ")
            )?;
        }
        None => write!(stdout, "{}", file.to_text())?,
    }
    Ok(EXIT_PASS)
}

/// Runs the checks of `suite` on `(v, w, u)`. Checks that need the middle
/// space `u` are a usage error without it.
pub fn run_suite(
    suite: Suite,
    v: &EquippedSpace,
    w: &EquippedSpace,
    u: Option<&EquippedSpace>,
    max_degree: usize,
) -> Result<Vec<VerificationReport>> {
    let mut checks = Vec::new();
    if suite.includes(Suite::Rigidity) {
        let mut spaces = vec![("v", v), ("w", w)];
        if let Some(u) = u {
            spaces.push(("u", u));
        }
        for (label, s) in spaces {
            for r in rigidity_reports(s) {
                let name = format!("rigidity/{label}/{}", r.name);
                checks.push(r.renamed(name));
            }
        }
    }
    if suite.includes(Suite::Bialgebra) {
        let u = u.ok_or_else(|| {
            Error::Parse("the bialgebra suite needs a third space U".into())
        })?;
        require_quadratic(&[v, w, u])?;
        checks.push(prefixed("bialgebra", verify_hom_equals_frt(v, w)?));
        checks.push(prefixed("bialgebra", check_comult_well_defined(v, w, u)?));
        for (label, s) in [("v", v), ("w", w), ("u", u)] {
            let r = counit_check(s)?;
            let name = format!("bialgebra/{}/{label}", r.name);
            checks.push(r.renamed(name));
        }
        checks.push(prefixed(
            "bialgebra",
            check_coassociativity(v.dim(), w.dim(), u.dim(), u.dim(), 2),
        ));
        checks.push(prefixed("bialgebra", check_counit_laws(v.dim(), w.dim(), 2)));
    }
    if suite.includes(Suite::Epi) {
        require_quadratic(&[v, w])?;
        checks.push(prefixed("epi", check_u_epi(v, w, max_degree)));
        checks.push(prefixed("epi", check_manin_epi(v, w)?));
        checks.push(prefixed("epi", corep_delta_check(v, w)?));
    }
    Ok(checks)
}

fn prefixed(prefix: &str, r: VerificationReport) -> VerificationReport {
    let name = format!("{prefix}/{}", r.name);
    r.renamed(name)
}

fn require_quadratic(spaces: &[&EquippedSpace]) -> Result<()> {
    if spaces.iter().all(|s| s.is_quadratic()) {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "bialgebra and epi suites need quadratic structures".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(check_cap(7, false), Err(Error::DegreeCap { .. })));
        assert!(check_cap(7, true).is_ok());
        assert!(check_cap(6, false).is_ok());
    }

    #[test]
    fn exit_code_mapping() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::InvalidStructure("x".into())), EXIT_INVARIANT);
        assert_eq!(
            exit_code(&Error::DegreeCap {
                requested: 9,
                cap: 6
            }),
            EXIT_CAP
        );
    }

    #[test]
    fn bialgebra_suite_needs_u() {
        let t = EquippedSpace::trivial(2).unwrap();
        assert!(matches!(
            run_suite(Suite::Bialgebra, &t, &t, None, 3),
            Err(Error::Parse(_))
        ));
        let all = run_suite(Suite::Bialgebra, &t, &t, Some(&t), 3).unwrap();
        assert!(all.iter().all(|r| r.pass));
    }
}
