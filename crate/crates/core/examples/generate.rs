//! Seeded random instances of every topology, round-tripped through JSON.
//!
//! cargo run --example generate -- n=7,p=0.4,D=10,seed=3

use fuzzy_roman::io::{generate, graph_from_json, graph_to_json, GenSpec, Topology};
use fuzzy_roman::solvers::gamma_snr;
use fuzzy_roman::strong_profile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base: GenSpec = match std::env::args().nth(1) {
        Some(s) => s.parse()?,
        None => GenSpec::default(),
    };
    for topology in [
        Topology::General,
        Topology::Complete,
        Topology::Bipartite,
        Topology::Cycle,
        Topology::Path,
    ] {
        let spec = GenSpec { topology, ..base.clone() };
        let g = generate(&spec)?;
        let text = graph_to_json(&g);
        assert_eq!(graph_from_json(&text)?, g);
        let p = strong_profile(&g);
        println!(
            "{topology:<9} n = {}  edges = {}  strong = {}  gamma_snR = {}",
            g.vertex_count(),
            g.edge_count(),
            p.strong_edges().len(),
            gamma_snr(&p)?.value
        );
    }
    print!("{}", graph_to_json(&generate(&base)?));
    Ok(())
}
