//! Streams seeded random graphs through a preset and prints the summary.
//! With PROBLEM_4_2 the Petersen graph is appended and shows up as a
//! counterexample.

use hamtough::generators::{petersen, random_graph};
use hamtough::harness::{search_lines, HypothesisPreset, OutputFormat, PresetId, SearchOptions};
use hamtough::{write_graph6, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(2000);
    let p = Rational::new(7, 10)?;
    let lines = (0..count)
        .map(move |seed| random_graph(8 + (seed % 5) as usize, p, seed).map(|g| write_graph6(&g)))
        .chain(std::iter::once(Ok(write_graph6(&petersen()))))
        .map(|r| r.map_err(std::io::Error::other));

    let preset = HypothesisPreset::new(PresetId::NoOrderFloor, Some(4))?;
    let mut sink = std::io::sink();
    let summary = search_lines(
        lines,
        preset,
        &SearchOptions::default(),
        OutputFormat::Jsonl,
        &mut sink,
    )?;
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}
