//! Command-line bench for the Kerr-enhanced SU(1,1) interferometer.
//!
//! The binary (`ksu11`) exposes the closed-form sensitivity and Fisher
//! information results, figure-curve generation, and a verification battery
//! that cross-checks every closed form against a truncated-Fock oracle.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 non-convergence of the numerical oracle.

pub mod angles;
pub mod cfgfile;
pub mod commands;
pub mod csvout;
pub mod error;
pub mod figures;
pub mod params;
pub mod sweep;
pub mod verify;

pub use error::CliError;

use clap::error::ErrorKind;
use clap::Parser;

/// Parse `KSU11_THREADS` and configure the global thread pool.
///
/// Returns an error string when the variable is set to anything but a
/// positive integer. A pool that was already initialized (tests, repeated
/// calls) is left as is.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("KSU11_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("KSU11_THREADS must be a positive integer, got `{raw}`"))?;
    if n == 0 {
        return Err("KSU11_THREADS must be a positive integer, got `0`".into());
    }
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Run the command line and return the process exit code.
pub fn run() -> i32 {
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 1;
    }
    let cli = match commands::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match commands::dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
