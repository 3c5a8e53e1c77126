//! Runs the full verification suite in-process and prints a summary.

use std::collections::BTreeMap;

use subgroup_degree::enumerate_subgroups;
use subgroup_degree::verify::{verify_paper, Status, VerifyOptions};

fn main() -> subgroup_degree::Result<()> {
    let opts = VerifyOptions::default();
    let report = verify_paper(&opts, |g| enumerate_subgroups(g, opts.max_nodes))?;
    let mut counts: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
    for row in &report.rows {
        let slot = match row.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skip => 2,
            Status::Info => 3,
        };
        counts.entry(row.check.as_str()).or_default()[slot] += 1;
    }
    println!("{:<24} {:>5} {:>5} {:>5} {:>5}", "check", "pass", "fail", "skip", "info");
    for (check, [p, f, s, i]) in counts {
        println!("{check:<24} {p:>5} {f:>5} {s:>5} {i:>5}");
    }
    for row in report.failures() {
        println!("FAIL {} {}: {}", row.check, row.group, row.detail);
    }
    Ok(())
}
