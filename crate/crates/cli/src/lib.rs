//! `partid`: tables of partition statistics, identity verification,
//! map application and involution certification.
//!
//! Exit status: 0 on success, 1 when a genuine identity or a certified map
//! fails, 2 on usage or I/O errors.

mod commands;
mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::FileConfig;

/// Largest `n` the series route tabulates.
pub const FAST_N_CAP: u32 = 200;
/// Largest `n` for enumeration.
pub const ORACLE_N_CAP: u32 = 60;
/// Largest weight for certification sweeps.
pub const CERTIFY_N_CAP: u32 = 40;

#[derive(Parser, Debug)]
#[command(
    name = "partid",
    version,
    about = "Partition statistics, bijections and identity checks"
)]
pub struct Cli {
    /// Optional TOML file supplying defaults for any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate statistic families for n = 0..=n_max.
    Table(TableArgs),
    /// Compare both sides of identities over a parameter sweep.
    Verify(VerifyArgs),
    /// Apply a named map to a serialized input.
    Map(MapArgs),
    /// Exhaustively certify the bijections and involutions.
    Certify(CertifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    Both,
    Fast,
    Oracle,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Comma-separated family names (p, p_eo, pbar_eo, q, q_odd, q_even,
    /// ped_eo, pe2_po2, N, R, C, D, G, mex_odd, crank_neg, rank_neg) or "all".
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Count by enumeration instead of series evaluation.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated identity tags, variant names, or "all".
    #[arg(long, value_delimiter = ',')]
    pub identities: Vec<String>,
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Check a single n (overrides --n-max).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m_max: Option<u32>,
    /// Check a single modulus (overrides --m-max).
    #[arg(long)]
    pub m: Option<u32>,
    /// Restrict identities on a_{r,m} to one residue.
    #[arg(long)]
    pub r: Option<u32>,
    /// Run the enumeration route for n up to this value.
    #[arg(long)]
    pub oracle_cutoff: Option<u32>,
    #[arg(long, value_enum)]
    pub path: Option<PathArg>,
    /// Print each tuple's left and right sides.
    #[arg(long)]
    pub show_lhs: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    /// psi, psi_even, phi_bz, conjugate, insert_marked, remove_marked,
    /// remove_copies, add_copies, mex_shift, mex_unshift, halve, double,
    /// rank, crank, mex
    pub name: String,
    /// Serialized input: a partition ("4,2,1"), a pair ("3,1/2"), an
    /// overpartition ("3',2,1"), or a "j:parts" state for phi_bz.
    #[arg(allow_hyphen_values = true)]
    pub input: String,
    /// Part value / index j for remove_copies, add_copies, mex_shift.
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    /// Number of copies for remove_copies, add_copies.
    #[arg(long)]
    pub m: Option<u32>,
    /// Value to insert for insert_marked.
    #[arg(long)]
    pub v: Option<u32>,
    /// Ambient n for phi_bz (checked against the state).
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Comma-separated map names or "all".
    #[arg(long = "map", value_delimiter = ',')]
    pub maps: Vec<String>,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Standard output and error for one invocation.
pub struct Io<'a> {
    pub out: &'a mut (dyn Write + Send),
    pub err: &'a mut (dyn Write + Send),
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink = if e.use_stderr() {
                &mut *io.err
            } else {
                &mut *io.out
            };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, io) {
        Ok(commands::Outcome::Success) => EXIT_OK,
        Ok(commands::Outcome::Failure) => EXIT_FAILURE,
        Err(e) => {
            let closed = e
                .downcast_ref::<std::io::Error>()
                .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe);
            if closed {
                return EXIT_OK;
            }
            let _ = writeln!(io.err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> anyhow::Result<commands::Outcome> {
    let file = match cli.config.as_deref() {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let dispatch = |io: &mut Io<'_>| match &cli.command {
        Command::Table(args) => commands::table(args, &file, io),
        Command::Verify(args) => commands::verify(args, &file, io),
        Command::Map(args) => commands::map(args, io),
        Command::Certify(args) => commands::certify(args, &file, io),
    };
    match cli.threads.or(file.threads) {
        Some(0) => anyhow::bail!("threads: must be positive"),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| anyhow::anyhow!("threads: {e}"))?;
            pool.install(|| dispatch(io))
        }
        None => dispatch(io),
    }
}
