//! (P2 ∪ kP1)-freeness with induced witnesses, and the neighbour bound
//! that free graphs satisfy.

use hamtough::generators::{complete_multipartite, cycle_graph, petersen, wheel};
use hamtough::structure::{is_p2_kp1_free, neighbor_bound_violations};
use hamtough::Graph;

fn report(name: &str, g: &Graph) -> hamtough::Result<()> {
    for k in 1..=4 {
        let r = is_p2_kp1_free(g, k)?;
        match r.witness {
            Some(w) => println!(
                "{name:8} k={k}: not free, edge {:?} + independent {:?}",
                w.edge,
                w.isolated_part.to_vec()
            ),
            None => {
                let bad = if k >= 2 {
                    neighbor_bound_violations(g, k)?.len()
                } else {
                    0
                };
                println!("{name:8} k={k}: free, neighbour-bound violations {bad}");
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report("petersen", &petersen())?;
    report("C9", &cycle_graph(9)?)?;
    report("W7", &wheel(7)?)?;
    report("K2,2,2", &complete_multipartite(&[2, 2, 2])?)?;
    Ok(())
}
