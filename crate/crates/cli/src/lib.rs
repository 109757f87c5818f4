//! Command-line front end: document parsing, the verification suite and
//! topology export.

pub mod document;
pub mod export;
pub mod suite;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use triring::{Limits, Triideal, Triring, Trispectrum};

use document::{parse_document, DocumentError, TriringDocument};
use suite::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "triring", version, about = "Exact computations in finite trirings")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Largest carrier allowed for each component ring.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_size: usize,
    /// Largest number of ideals or triideals to enumerate.
    #[arg(long, global = true, default_value_t = 4096)]
    pub max_ideals: usize,
    /// Worker threads for `verify`; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

impl GlobalOpts {
    pub fn limits(&self) -> Limits {
        Limits {
            max_size: self.max_size,
            max_ideals: self.max_ideals,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Generators {
    /// Comma-separated even generators.
    #[arg(long, value_delimiter = ',')]
    pub even_gens: Vec<usize>,
    /// Comma-separated odd generators.
    #[arg(long, value_delimiter = ',')]
    pub odd_gens: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Validate a document and print a summary.
    Check { file: PathBuf },
    /// List the prime triideals.
    Spectrum { file: PathBuf },
    /// Print the trinilradical.
    Nilradical { file: PathBuf },
    /// Print the radical of the triideal generated by the given elements.
    Radical {
        file: PathBuf,
        #[command(flatten)]
        gens: Generators,
    },
    /// Emit the quotient by the generated triideal as a table document.
    Quotient {
        file: PathBuf,
        #[command(flatten)]
        gens: Generators,
    },
    /// Run a verification suite.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all", value_parser = ["axioms", "ideals", "nilradical", "spectrum", "topology", "all"])]
        suite: String,
    },
    /// Export the trispectrum topology.
    Topology {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] triring::Error),
}

impl CliError {
    /// 1 for validation failures, 2 for input errors, 3 for size limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Document { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Core(triring::Error::SizeLimit { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}

/// Rendered output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

pub fn load_document(path: &Path) -> Result<TriringDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document(&text).map_err(|source| CliError::Document {
        path: path.display().to_string(),
        source,
    })
}

fn generated(ring: &Triring, gens: &Generators) -> Result<Triideal, CliError> {
    ring.make_triideal(&gens.even_gens, &gens.odd_gens)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn describe_points(spectrum: &Trispectrum) -> String {
    let mut out = format!(
        "{} prime triideals ({} even, {} odd)\n",
        spectrum.len(),
        spectrum.even_points().len(),
        spectrum.odd_points().len()
    );
    for (k, p) in spectrum.points().iter().enumerate() {
        out += &format!("P{k} {}: {p}\n", spectrum.parity(k));
    }
    out
}

pub fn execute(command: &Command, opts: &GlobalOpts) -> Result<Output, CliError> {
    let limits = opts.limits();
    let file = match command {
        Command::Check { file }
        | Command::Spectrum { file }
        | Command::Nilradical { file }
        | Command::Radical { file, .. }
        | Command::Quotient { file, .. }
        | Command::Verify { file, .. }
        | Command::Topology { file, .. } => file,
    };
    let doc = load_document(file)?;

    if let Command::Verify { suite, .. } = command {
        let suite = Suite::parse(suite).ok_or_else(|| CliError::Usage(format!("unknown suite `{suite}`")))?;
        return verify(&doc, suite, &limits, opts.workers);
    }

    let ring = doc.build(&limits)?;
    let text = match command {
        Command::Check { .. } => format!(
            "ok {}: |R0| = {}, |R1| = {}, |R| = {}\n",
            ring.name(),
            ring.even().size(),
            ring.odd().size(),
            ring.size()
        ),
        Command::Spectrum { .. } => describe_points(&Trispectrum::new(&ring, &limits)?),
        Command::Nilradical { .. } => format!("{}\n", ring.trinilradical()),
        Command::Radical { gens, .. } => {
            let i = generated(&ring, gens)?;
            format!("ideal {i}\nradical {}\n", ring.radical(&i))
        }
        Command::Quotient { gens, .. } => {
            let i = generated(&ring, gens)?;
            let q = ring.quotient(&i)?;
            let mut out = TriringDocument::from_triring(&q.ring);
            out.name = Some(format!("{}/({i})", ring.name()));
            format!("{}\n", out.to_canonical_string())
        }
        Command::Topology { format, .. } => {
            let spectrum = Trispectrum::new(&ring, &limits)?;
            match format {
                ExportFormat::Dot => export::to_dot(&spectrum),
                ExportFormat::Json => export::to_json(&spectrum),
            }
        }
        Command::Verify { .. } => unreachable!("handled above"),
    };
    Ok(Output::ok(text))
}

/// Builds the document and runs `suite`. A document that fails to build is
/// reported as a failed construction check rather than an error, so the
/// witness reaches the report.
pub fn verify(doc: &TriringDocument, suite: Suite, limits: &Limits, workers: Option<usize>) -> Result<Output, CliError> {
    let ring = match doc.build(limits) {
        Ok(ring) => ring,
        Err(e @ triring::Error::SizeLimit { .. }) => return Err(e.into()),
        Err(e) => {
            return Ok(Output {
                text: format!(
                    "triring {}\nFAIL {suite}/construction: {e}\n0 passed, 1 failed\n",
                    doc.display_name()
                ),
                success: false,
            })
        }
    };
    let report = run_suite(&ring, suite, limits, workers)?;
    Ok(Output {
        text: report.render(),
        success: report.all_pass(),
    })
}
