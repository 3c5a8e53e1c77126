//! sd, spd and d for a handful of groups, as exact fractions.

use subgroup_degree::degree::degree_report;
use subgroup_degree::{enumerate_subgroups, make_named, MaxConvention};

fn main() -> subgroup_degree::Result<()> {
    println!("{:<8} {:>4} {:>4} {:>10} {:>10} {:>10} {:>8}", "group", "|G|", "|L|", "sd", "spd", "spd(cl)", "d");
    for spec in ["S3", "Q8", "D4", "A4", "D6", "S4", "S5", "A4xC5"] {
        let l = enumerate_subgroups(make_named(spec, 720)?, 20_000)?;
        let raw = degree_report(&l, MaxConvention::Raw);
        let closed = degree_report(&l, MaxConvention::Closed);
        let show = |r: &Option<subgroup_degree::ExactRatio>| r.as_ref().map_or("-".into(), |v| v.to_string());
        println!(
            "{:<8} {:>4} {:>4} {:>10} {:>10} {:>10} {:>8}",
            spec,
            raw.order,
            raw.lattice_size,
            raw.sd.to_string(),
            show(&raw.spd),
            show(&closed.spd),
            raw.d.to_string()
        );
    }
    Ok(())
}
