use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use reversive::cli::{self, Config, Method};
use reversive::Error;

#[derive(Parser)]
#[command(name = "reversive", version, about = "Dissection counts from reversive symbols")]
struct Args {
    /// key=value file with exhaustive_cap_n, chord_cap_p, default_count
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Largest n for exhaustive dissection enumeration
    #[arg(long, global = true)]
    cap_n: Option<usize>,

    /// Largest number of points for exhaustive chord enumeration
    #[arg(long, global = true)]
    cap_p: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Reversion,
    Closed,
    Series,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Reversion => Method::Reversion,
            MethodArg::Closed => Method::Closed,
            MethodArg::Series => Method::Series,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the catalogued symbols
    List,
    /// Print `n a(n)` for a catalog name or a symbol like `(0,1,-1)/(1)`
    Terms {
        target: String,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, value_enum, default_value = "reversion")]
        method: MethodArg,
    },
    /// Compare every computation path for a catalog entry
    Verify {
        name: String,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Build the symbol for a tile rule (`4+`, `3,5`, `odd`, ...) and count
    FromTiles {
        spec: String,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Write a b-file
    Bfile {
        target: String,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(args: Args) -> Result<u8, Error> {
    let mut config = match &args.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(n) = args.cap_n {
        config.exhaustive_cap_n = n;
    }
    if let Some(p) = args.cap_p {
        config.chord_cap_p = p;
    }
    let count = |c: Option<usize>| c.unwrap_or(config.default_count);

    match args.command {
        Command::List => print!("{}", cli::cmd_list()),
        Command::Terms { target, count: c, method } => {
            print!("{}", cli::cmd_terms(&target, count(c), method.into())?);
        }
        Command::Verify { name, count: c } => {
            let report = cli::cmd_verify(&name, count(c), &config)?;
            print!("{}", report.text);
            if !report.ok() {
                return Ok(1);
            }
        }
        Command::FromTiles { spec, count: c } => {
            let report = cli::cmd_from_tiles(&spec, count(c), &config)?;
            print!("{}", report.render());
            if let Some(n) = report.first_mismatch {
                eprintln!("reversion disagrees with the series counter or the oracle at n={n}");
                return Ok(1);
            }
            if let Some(last) = report.oracle_checked_to {
                eprintln!("checked against series counter; exhaustive oracle for n <= {last}");
            }
        }
        Command::Bfile { target, count: c, out } => cli::cmd_bfile(&target, count(c), &out)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
