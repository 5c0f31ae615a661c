//! Command-line front end. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 when the property holds or the construction succeeded, 1 when it is refuted,
//! 2 on input, usage or resource errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::characterize::{is_quasi_forest_fvector, realize, RealizabilityVerdict, Violation};
use crate::complex::{f_vector, parse_complex, FVector};
use crate::error::Error;
use crate::graphs::{clique_complex, is_chordal, is_strongly_chordal, parse_graph};
use crate::oracle::{cross_validate, EnumerationScope};
use crate::recognize::is_forest;

#[derive(Debug, Parser)]
#[command(name = "qforest", version, about = "f-vectors of forests and quasi-forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether an f-vector (e.g. 5,6,2) belongs to a quasi-forest and to a pure one.
    Check { fvector: String },
    /// Build a forest with the given f-vector, printed in the complex text format.
    Realize { fvector: String },
    /// Find a leaf order and test the forest property of a complex file (`-` for stdin).
    Recognize { file: PathBuf },
    /// Chordality, strong chordality and the clique complex of a graph file (`-` for stdin).
    Graph { file: PathBuf },
    /// Cross-validate every property over all small complexes and graphs.
    Enumerate {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        facets: usize,
        #[arg(long)]
        max_dimension: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Failure modes of a command body; refutations are not errors.
enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_verdict(out: &mut dyn Write, v: &RealizabilityVerdict, prefix: &str) -> io::Result<()> {
    writeln!(out, "{prefix}quasi-forest: {}", yes_no(v.is_quasi_forest_fvector))?;
    writeln!(out, "{prefix}pure: {}", yes_no(v.is_pure_quasi_forest_fvector))?;
    writeln!(out, "{prefix}c: {}", v.c)?;
    writeln!(out, "{prefix}b: {}", v.b)?;
    match v.failing_index {
        Some(Violation::SuffixSum { k, sum }) => writeln!(out, "{prefix}violation: k={k} suffix-sum={sum}")?,
        Some(Violation::PositiveInterior { i, value }) => writeln!(out, "{prefix}violation: i={i} c={value}")?,
        None => {}
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { fvector } => {
            let f: FVector = fvector.parse()?;
            let v = is_quasi_forest_fvector(&f)?;
            write_verdict(out, &v, "")?;
            Ok(if v.is_quasi_forest_fvector { 0 } else { 1 })
        }
        Command::Realize { fvector } => {
            let f: FVector = fvector.parse()?;
            let v = is_quasi_forest_fvector(&f)?;
            write_verdict(out, &v, "# ")?;
            match realize(&f) {
                Ok(complex) => {
                    write!(out, "{complex}")?;
                    Ok(0)
                }
                Err(Error::NotRealizable(_)) => Ok(1),
                Err(e) => Err(e.into()),
            }
        }
        Command::Recognize { file } => {
            let complex = parse_complex(&read_input(&file)?)?;
            let fv = f_vector(&complex)?;
            let report = is_forest(&complex)?;
            writeln!(out, "quasi-forest: {}", yes_no(report.is_quasi_forest))?;
            if let Some(order) = &report.leaf_order {
                writeln!(out, "leaf-order:")?;
                for facet in order {
                    writeln!(out, "  {facet}")?;
                }
            }
            writeln!(out, "forest: {}", yes_no(report.is_forest == Some(true)))?;
            if let Some(witness) = &report.witness {
                writeln!(out, "witness:")?;
                for facet in witness {
                    writeln!(out, "  {facet}")?;
                }
            }
            writeln!(out, "f-vector: {fv}")?;
            Ok(if report.is_quasi_forest { 0 } else { 1 })
        }
        Command::Graph { file } => {
            let g = parse_graph(&read_input(&file)?)?;
            let chordal = is_chordal(&g);
            let strong = is_strongly_chordal(&g)?;
            let complex = clique_complex(&g)?;
            let fv = f_vector(&complex)?;
            writeln!(out, "chordal: {}", yes_no(chordal.is_chordal))?;
            if let Some(cycle) = &chordal.chordless_cycle {
                writeln!(out, "chordless-cycle: {}", join(cycle))?;
            }
            writeln!(out, "strongly-chordal: {}", yes_no(strong.is_strongly_chordal))?;
            if let (true, Some(cycle)) = (chordal.is_chordal, &strong.violating_cycle) {
                writeln!(out, "violating-cycle: {}", join(cycle))?;
            }
            writeln!(out, "clique-complex:")?;
            for facet in complex.facets() {
                writeln!(out, "  {facet}")?;
            }
            writeln!(out, "f-vector: {fv}")?;
            Ok(0)
        }
        Command::Enumerate { vertices, facets, max_dimension, report } => {
            let mut scope = EnumerationScope::new(vertices, facets)?;
            if let Some(m) = max_dimension {
                scope = scope.with_max_dimension(m);
            }
            let result = cross_validate(&scope)?;
            match report {
                Some(path) => fs::write(path, result.to_string())?,
                None => write!(out, "{result}")?,
            }
            Ok(if result.all_passed() { 0 } else { 1 })
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
