//! Encodes a few graphs as graph6, decodes them again and reads an edge
//! list.

use hamtough::generators::{complete, cycle_graph, petersen, wheel};
use hamtough::{parse_edge_list, parse_graph6, write_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("petersen", petersen()),
        ("K4", complete(4)?),
        ("C7", cycle_graph(7)?),
        ("W6", wheel(6)?),
    ] {
        let text = write_graph6(&g);
        let back = parse_graph6(&text)?;
        assert_eq!(back, g);
        println!("{name:9} n={:2} m={:2} graph6={text}", g.order(), g.size());
    }

    // Header `n m`, then one 0-based edge per line.
    let g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n")?;
    println!("P4 from edge list: {}", write_graph6(&g));

    match parse_graph6("C~~") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
