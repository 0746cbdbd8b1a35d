//! Running a verification suite from library code and emitting the same
//! JSON report the command line writes.
//!
//!     cargo run --release --example verify_report -- rearrange

use hardy_shift::cli::{cmd_verify, Format, RunConfig};

fn main() -> hardy_shift::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "circlefn".to_string());
    let config = RunConfig::default();
    let report = cmd_verify(&suite, &config)?;
    print!("{}", report.render(Format::Json)?);
    eprintln!("{} of {} certificates pass", report.summary.passed, report.summary.total);
    Ok(())
}
