//! Relay placement on a small sensor network: vertices are sensors, edge
//! memberships are link reliabilities and the optimal labeling decides which
//! sensors act as relays.

use fuzzy_roman::io::{plan, to_dot};
use fuzzy_roman::solvers::gamma_snr;
use fuzzy_roman::{strong_profile, FuzzyGraph, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = |s: &str| s.parse::<Rational>().unwrap();
    let g = FuzzyGraph::build(
        [
            ("gate", r("0.9")),
            ("north", r("0.6")),
            ("south", r("0.7")),
            ("east", r("0.5")),
            ("west", r("0.8")),
            ("roof", r("0.4")),
        ],
        [
            ("gate", "north", r("0.6")),
            ("gate", "south", r("0.5")),
            ("north", "east", r("0.4")),
            ("south", "east", r("0.3")),
            ("south", "west", r("0.7")),
            ("west", "roof", r("0.4")),
            ("east", "roof", r("0.2")),
        ],
    )?;
    let p = strong_profile(&g);
    let deployment = plan(&g, &p)?;
    println!("{deployment}");
    let best = gamma_snr(&p)?;
    println!();
    print!("{}", to_dot(&g, &p, best.labeling()));
    Ok(())
}
