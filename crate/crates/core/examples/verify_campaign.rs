//! Seeded verification campaigns, the same ones `zmx verify` runs.
//!
//!     cargo run --release --example verify_campaign

use zmx::cli::{run_verify, Theorem, VerifyConfig};

fn main() -> zmx::Result<()> {
    for theorem in Theorem::ALL {
        let summary = run_verify(&VerifyConfig::new(theorem, 3, 5, 50, 2024))?;
        print!("{summary}");
    }
    Ok(())
}
