use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use noether_cli::{report, Options};
use noether_core::MonomialOrder;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Resolve,
    Dualize,
    BeCheck,
    Ext,
    Purity,
    CmCheck,
    Noetherian,
    Membership,
    Residue,
    Bezoutian,
    OracleXcheck,
}

/// Free resolutions, Ext duality, Noetherian operators and residues over Q.
#[derive(Debug, Parser)]
#[command(name = "noether", version)]
struct Args {
    command: Command,
    /// Problem file.
    file: PathBuf,
    /// Working monomial order; output always prints in grevlex.
    #[arg(long, value_enum, default_value = "grevlex")]
    order: Order,
    /// Also write the report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Variable split, e.g. "free=x dependent=y"; overrides the file.
    #[arg(long)]
    split: Option<String>,
    /// Polynomial to test (membership).
    #[arg(long)]
    phi: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let name = args
        .command
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let bytes = match std::fs::read(&args.file) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("noether: cannot read {}: {e}", args.file.display());
            return ExitCode::from(1);
        }
    };
    let order = match args.order {
        Order::Grevlex => MonomialOrder::Grevlex,
        Order::Lex => MonomialOrder::Lex,
    };
    let opts = Options {
        phi: args.phi,
        split: args.split,
        trials: args.trials,
        seed: args.seed,
    };
    let (code, text) = report(&name, &bytes, order, &opts);
    print!("{text}");
    if let Some(path) = args.json {
        if let Err(e) = std::fs::write(&path, &text) {
            eprintln!("noether: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code as u8)
}
