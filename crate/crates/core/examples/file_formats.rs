//! Plain and JSON matrix files, and the classification report.
//!
//!     cargo run --example file_formats

use zmx::cli::{describe, emit_report, parse_matrix, to_json, to_plain, ReportFormat};
use zmx::zclass::Classifier;

fn main() -> zmx::Result<()> {
    let a = parse_matrix("3\n 1 -1 -1\n-2  1  1\n 2 -2 -1\n")?;
    let json = to_json(&a);
    println!("{json}");
    assert_eq!(parse_matrix(&json)?, a);
    print!("{}", to_plain(&a));

    if let Err(e) = parse_matrix("2\n1/2 1\n1\n") {
        println!("{e}");
    }

    let (report, info) = describe(&a, &Classifier::default())?;
    print!("{}", emit_report(&report, &info, ReportFormat::Text));
    println!("{}", emit_report(&report, &info, ReportFormat::Json));
    Ok(())
}
