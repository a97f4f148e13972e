//! Exact gamma_s and gamma_snR with their canonical witnesses, by branch and
//! bound and by exhaustive enumeration.

use fuzzy_roman::fixtures;
use fuzzy_roman::solvers::{
    gamma_s, gamma_s_bruteforce, gamma_snr, gamma_snr_bruteforce, swap_partition, SolverLimits,
};
use fuzzy_roman::strong_profile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limits = SolverLimits::from_env();
    for (name, g) in fixtures::all() {
        let p = strong_profile(&g);
        let s = gamma_s(&p)?;
        let r = gamma_snr(&p)?;
        assert_eq!(s.value, gamma_s_bruteforce(&p, &limits)?.value);
        let brute = gamma_snr_bruteforce(&p, &limits)?;
        assert_eq!(r.witness, brute.witness);

        let set: Vec<&str> = s.set().unwrap().iter().map(|&v| g.id(v)).collect();
        let f = r.labeling().unwrap();
        let labels: Vec<String> = (0..g.vertex_count())
            .map(|v| format!("{}={}", g.id(v), f.label(v)))
            .collect();
        println!("{name}");
        println!("  gamma_s   = {}  {set:?}", s.value);
        println!(
            "  gamma_snR = {}  [{}]  ({} nodes, brute force {})",
            r.value,
            labels.join(" "),
            r.nodes_explored,
            brute.nodes_explored
        );
        println!("  swapped weight {}", swap_partition(f, &p)?.weight());
    }
    Ok(())
}
