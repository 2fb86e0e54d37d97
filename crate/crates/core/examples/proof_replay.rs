//! Replays the longest-cycle argument on the Petersen graph (or a graph6
//! string given as the first argument) and prints every claim.

use hamtough::generators::petersen;
use hamtough::replay::replay;
use hamtough::{parse_graph6, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(text) => parse_graph6(&text)?,
        None => petersen(),
    };
    let k = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let report = replay(&g, k, &Limits::default())?;
    print!("{}", report.render_text());
    Ok(())
}
