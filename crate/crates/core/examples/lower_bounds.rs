//! Runs the lower-bound checks on every normal subgroup and complement of a group.
//!
//! `cargo run --example lower_bounds -- A4`

use subgroup_degree::bounds::{
    cauchy_bound_checks, cor26_bound_check, decompositions, lemma2_bound_check, prime_index_normals, theorem1_check,
    BoundCheckResult, ShapeReading,
};
use subgroup_degree::{enumerate_subgroups, make_named, MaxConvention};

fn show(label: &str, r: &BoundCheckResult) {
    let fmt = |x: &Option<subgroup_degree::ExactRatio>| x.as_ref().map_or("-".into(), |v| v.to_string());
    println!(
        "  {label:<22} hypotheses {:<5} bound {:>8} actual {:>8} holds {:?}",
        r.hypothesis_satisfied,
        fmt(&r.bound),
        fmt(&r.actual),
        r.holds
    );
    for reason in &r.reasons {
        println!("      {reason}");
    }
}

fn main() -> subgroup_degree::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "A4".into());
    let l = enumerate_subgroups(make_named(&spec, 720)?, 20_000)?;
    let conv = MaxConvention::Raw;
    println!("{spec}");
    for n in prime_index_normals(&l) {
        if let Ok(r) = lemma2_bound_check(&l, n, ShapeReading::Strict) {
            show(&format!("lemma2 N=#{n}"), &r);
        }
        if let Ok(r) = cor26_bound_check(&l, n) {
            show(&format!("cor26 N=#{n}"), &r);
        }
    }
    for (n, h) in decompositions(&l) {
        let (spd_r, sd_r) = cauchy_bound_checks(&l, n, h, conv)?;
        show(&format!("sqrt-sd N=#{n} H=#{h}"), &sd_r);
        show(&format!("sqrt-spd N=#{n} H=#{h}"), &spd_r);
    }
    for reading in [ShapeReading::Strict, ShapeReading::Relaxed] {
        let t = theorem1_check(&l, conv, reading)?;
        println!("  theorem 1 ({reading}): hypotheses {} {:?}", t.hypotheses, t.reasons);
        if let Some(r) = &t.part_ii {
            show("theorem 1 (ii)", r);
        }
    }
    Ok(())
}
