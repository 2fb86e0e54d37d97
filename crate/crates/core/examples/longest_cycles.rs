//! Hamiltonicity, circumference, all longest cycles and edge domination.

use hamtough::cycles::{enumerate_longest_cycles, find_hamiltonian_cycle, is_edge_dominating};
use hamtough::generators::{complete_multipartite, petersen};
use hamtough::{parse_graph6, Graph};

fn report(name: &str, g: &Graph) -> hamtough::Result<()> {
    let ham = find_hamiltonian_cycle(g)?;
    println!(
        "{name}: hamiltonian cycle {:?}",
        ham.as_ref().map(|c| c.vertices())
    );
    let all = enumerate_longest_cycles(g, 1000)?;
    let dominating = all
        .cycles
        .iter()
        .filter(|c| is_edge_dominating(g, c).map(|d| d.holds).unwrap_or(false))
        .count();
    println!(
        "  circumference {:?}, {} longest cycles{}, {} edge-dominating",
        all.length,
        all.cycles.len(),
        if all.truncated { " (truncated)" } else { "" },
        dominating
    );
    if let Some(c) = all.cycles.first() {
        println!("  first: {:?}", c.vertices());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(text) => report("input", &parse_graph6(&text)?)?,
        None => {
            report("petersen", &petersen())?;
            report("K3,4", &complete_multipartite(&[3, 4])?)?;
        }
    }
    Ok(())
}
