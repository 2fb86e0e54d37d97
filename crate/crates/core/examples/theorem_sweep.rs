//! Evaluates every preset on a handful of named graphs.

use hamtough::generators::{complete, complete_multipartite, cycle_graph, petersen, wheel};
use hamtough::harness::{evaluate, HypothesisPreset, PresetId};
use hamtough::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("petersen", petersen()),
        ("K6", complete(6)?),
        ("C8", cycle_graph(8)?),
        ("W8", wheel(8)?),
        ("K3,3,3", complete_multipartite(&[3, 3, 3])?),
    ];
    for id in PresetId::ALL {
        let k = id.min_k().map(|k| k.max(3));
        let preset = HypothesisPreset::new(id, k)?;
        for (name, g) in &graphs {
            let v = evaluate(g, preset)?;
            let failed = v
                .hypotheses
                .iter()
                .find(|h| h.holds == Some(false))
                .map(|h| h.name)
                .unwrap_or("-");
            println!(
                "{:20} k={:<4} {name:9} {:?} (first failed hypothesis: {failed})",
                id.as_str(),
                k.map_or("-".into(), |k| k.to_string()),
                v.status
            );
        }
    }
    Ok(())
}
