//! Runs every experiment suite at reduced size and prints the Markdown report.

use parity_colouring::reproduce::{reproduce, Mode};

fn main() -> parity_colouring::Result<()> {
    let report = reproduce(Mode::Quick, 0)?;
    print!("{}", report.to_markdown());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
