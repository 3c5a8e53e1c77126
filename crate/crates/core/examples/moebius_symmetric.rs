//! mu(1, S_n) from the lattice against the closed forms.
//!
//! `cargo run --release --example moebius_symmetric -- 6`

use subgroup_degree::moebius::{conjectured_mu_symmetric, moebius_table, predicted_mu_symmetric};
use subgroup_degree::{enumerate_subgroups, make_named};

fn main() -> subgroup_degree::Result<()> {
    let top: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for n in 2..=top {
        let l = enumerate_subgroups(make_named(&format!("S{n}"), 720)?, 20_000)?;
        let mu = moebius_table(&l).bottom();
        let predicted = predicted_mu_symmetric(n).map_or("-".into(), |p| p.to_string());
        println!(
            "S{n}: |L| = {:>5}  mu(1,G) = {mu:>5}  closed form {predicted:>5}  conjecture {:>5}",
            l.len(),
            conjectured_mu_symmetric(n)
        );
    }
    for n in [7u64, 8, 10, 14, 22] {
        println!("S{n}: closed form {}", predicted_mu_symmetric(n).unwrap());
    }
    Ok(())
}
