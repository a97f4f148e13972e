//! Strong-edge analysis of a graph file (default: the C6 fixture).
//!
//! cargo run --example analyze -- crates/core/fixtures/tri_b.json

use fuzzy_roman::io::{read_graph, to_dot};
use fuzzy_roman::{fixtures, strong_profile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => read_graph(path)?,
        None => fixtures::c6(),
    };
    let p = strong_profile(&g);

    println!("p = {}, q = {}", g.order(), g.size());
    for (u, v, mu) in g.edges() {
        let tag = if p.is_strong(u, v) { "strong" } else { "weak" };
        println!("{} - {}  mu = {mu}  conn = {}  {tag}", g.id(u), g.id(v), p.conn(u, v));
    }
    for v in 0..g.vertex_count() {
        let ns: Vec<&str> = p.strong_neighbors(v).iter().map(|&w| g.id(w)).collect();
        let d = p.degrees(v);
        println!(
            "{}: N_s = {{{}}}  mu_s = {}  d = {}  d_s = {}  d_SN = {}",
            g.id(v),
            ns.join(", "),
            p.mu_s(v),
            d.d,
            d.d_s,
            d.d_sn
        );
    }
    let universal: Vec<&str> = p.universal().iter().map(|&v| g.id(v)).collect();
    println!("universal: {universal:?}");
    println!();
    print!("{}", to_dot(&g, &p, None));
    Ok(())
}
