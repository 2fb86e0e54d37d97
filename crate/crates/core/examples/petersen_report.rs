//! Full invariant report for the Petersen graph, as JSON.

use hamtough::generators::petersen;
use hamtough::harness::{analyze_with, AnalyzeOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = AnalyzeOptions {
        witnesses: true,
        ..AnalyzeOptions::default()
    };
    let report = analyze_with(&petersen(), &opts)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
