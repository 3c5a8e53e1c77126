//! Compares degrees of a direct product of coprime-order groups with the
//! product of the factors' degrees.

use subgroup_degree::degree::check_multiplicativity;
use subgroup_degree::{make_named, MaxConvention};

fn main() -> subgroup_degree::Result<()> {
    for parts in [["S3", "C5"], ["A4", "C5"], ["D4", "C3"], ["Q8", "C3"]] {
        let groups = parts.iter().map(|p| make_named(p, 720)).collect::<Result<Vec<_>, _>>()?;
        for conv in [MaxConvention::Raw, MaxConvention::Closed] {
            let c = check_multiplicativity(&groups, conv, 720, 20_000)?;
            println!(
                "{:<6} ({conv:<6}) sd {} vs {} [{}]   spd {} vs {} [{}]",
                parts.join("x"),
                c.sd.product_degree,
                c.sd.degree_product,
                if c.sd.equal { "equal" } else { "differ" },
                c.spd.product_degree,
                c.spd.degree_product,
                if c.spd.equal { "equal" } else { "differ" },
            );
        }
    }
    Ok(())
}
