//! Exact toughness with a witness cut, plus t-toughness thresholds.
//!
//! `cargo run --example toughness -- <graph6>` analyses one graph.

use hamtough::generators::{complete, complete_multipartite, cycle_graph, petersen, star};
use hamtough::invariants::{is_t_tough, toughness_with};
use hamtough::{parse_graph6, Graph, Limits, Rational};

fn show(name: &str, g: &Graph) -> hamtough::Result<()> {
    let t = toughness_with(g, &Limits::default())?;
    let cut = t
        .witness_cut
        .map(|s| format!("{:?}", s.to_vec()))
        .unwrap_or_else(|| "-".into());
    let half = is_t_tough(g, Rational::new(1, 2)?)?.holds;
    let one = is_t_tough(g, Rational::ONE)?.holds;
    println!(
        "{name:12} tau={:6} cut={cut:18} 1/2-tough={half} 1-tough={one}",
        t.value.to_string()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(text) = std::env::args().nth(1) {
        show("input", &parse_graph6(&text)?)?;
        return Ok(());
    }
    show("petersen", &petersen())?;
    show("K5", &complete(5)?)?;
    show("C8", &cycle_graph(8)?)?;
    show("K1,4", &star(4)?)?;
    show("K2,5", &complete_multipartite(&[2, 5])?)?;
    show("K3,3,3", &complete_multipartite(&[3, 3, 3])?)?;

    // Above the exhaustive limit the pruned search has to be enabled.
    let big = complete_multipartite(&[6, 20])?;
    let limits = Limits {
        toughness_branch_and_bound: true,
        ..Limits::default()
    };
    println!("K6,20        tau={}", toughness_with(&big, &limits)?.value);
    Ok(())
}
