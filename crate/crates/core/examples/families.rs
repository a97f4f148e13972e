//! Closed forms for complete, complete bipartite, cycle and path fuzzy graphs
//! next to the exact value.

use fuzzy_roman::families::*;
use fuzzy_roman::solvers::gamma_snr;
use fuzzy_roman::{strong_profile, Rational};

fn rs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k4 = make_complete(&rs(&["0.4", "0.7", "0.2", "0.9"]))?;
    let p = strong_profile(&k4);
    println!("K4: formula {}, exact {}", gamma_snr_complete(&k4, &p)?, gamma_snr(&p)?.value);

    for (xs, ys) in [
        (rs(&["0.1", "0.3"]), rs(&["0.3", "0.3", "0.3"])),
        (rs(&["0.2", "0.5"]), rs(&["0.3", "0.6"])),
        (rs(&["0.4", "0.4", "0.5"]), rs(&["0.6", "0.7", "0.8"])),
    ] {
        let g = make_complete_bipartite(&xs, &ys)?;
        let p = strong_profile(&g);
        let form = gamma_snr_bipartite(&g, &p)?;
        println!(
            "K{},{}: case ({}) {}, exact {}",
            xs.len(),
            ys.len(),
            form.case,
            form.value,
            gamma_snr(&p)?.value
        );
    }

    let c = make_cycle(&rs(&["0.5"; 7]), &rs(&["0.3", "0.2", "0.2", "0.2", "0.2", "0.2", "0.2"]))?;
    let p = strong_profile(&c);
    let cp = CycleProfile::new(&c, &p)?;
    let weights: Vec<String> = (1..=cp.len())
        .map(|m| cycle_pattern_labeling(&cp, m).map(|f| f.weight().to_string()))
        .collect::<Result<_, _>>()?;
    let e = cycle_extremal_check(&cp, &p)?;
    println!(
        "C7: bound {}, exact {}, patterns [{}], attained {}",
        e.bound,
        e.gamma,
        weights.join(", "),
        e.attained
    );
    let s = cycle_mus_sum_check(&cp)?;
    println!("C7: sum mu_s {} <= {} (valley {})", s.sum, s.bound, s.shape);

    let path = make_path(&rs(&["1"; 8]), &rs(&["0.2"; 7]))?;
    let p = strong_profile(&path);
    let pp = PathProfile::new(&path, &p)?;
    let bound = path_upper_bound(&pp);
    let gamma = gamma_snr(&p)?.value;
    let e = path_extremal_necessary(&pp, &gamma)?;
    println!(
        "P8: bound {}, exact {gamma}, attained {}, conditions hold {}",
        bound.value,
        e.attained,
        e.holds()
    );
    Ok(())
}
