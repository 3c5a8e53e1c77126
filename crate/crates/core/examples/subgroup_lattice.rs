//! Walks the subgroup lattice of a group and its distinguished sublattices.
//!
//! `cargo run --example subgroup_lattice -- D4`

use subgroup_degree::{enumerate_subgroups, make_named, MaxConvention};

fn main() -> subgroup_degree::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let l = enumerate_subgroups(make_named(&spec, 720)?, 20_000)?;
    let g = l.group();
    let normal = l.normal_subgroups();
    let subnormal = l.subnormal_subgroups();
    let maximal = l.maximal_subgroups(MaxConvention::Raw)?;
    let sylow = l.sylow_subgroups();

    println!("{spec}: {} subgroups", l.len());
    for i in 0..l.len() {
        let gens: Vec<String> = l.generators(i).iter().map(|&x| g.label(x)).collect();
        let mut tags = Vec::new();
        for (name, sel) in [("normal", &normal), ("subnormal", &subnormal), ("maximal", &maximal), ("sylow", &sylow)] {
            if sel.contains(i) {
                tags.push(name);
            }
        }
        println!("  #{i:<3} order {:<3} <{}>  {}", l.node(i).count(), gens.join(", "), tags.join(" "));
    }

    let m_perp = l.perp(&maximal);
    println!("M^perp has {} members, meet/join closed: {}", m_perp.len(), l.is_meet_join_closed(&m_perp));
    println!("modular lattice: {}", l.is_modular_lattice());
    println!("quasihamiltonian: {}", l.is_quasihamiltonian());
    Ok(())
}
