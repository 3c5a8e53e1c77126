//! Three ways to construct a group: descriptors, permutations, Cayley tables.

use subgroup_degree::ingest::parse_group_json;
use subgroup_degree::{direct_product, from_permutations, make_named, FiniteGroup};

fn describe(g: &FiniteGroup) {
    let flags = g.structural_predicates();
    println!(
        "{:<10} order {:>3}  abelian {:<5}  nilpotent {:<5}  solvable {:<5}  |Z| = {}  |Fit| = {}",
        g.name(),
        g.order(),
        flags.is_abelian,
        flags.is_nilpotent,
        flags.is_solvable,
        g.center().count(),
        g.fitting_subgroup().count(),
    );
}

fn main() -> subgroup_degree::Result<()> {
    for spec in ["C12", "D6", "Q8", "Z:2,4", "A4", "S4", "S3xC5"] {
        describe(&make_named(spec, 720)?);
    }

    // S4 from a 4-cycle and a transposition
    let s4 = from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 720)?.with_name("<(0123),(01)>");
    describe(&s4);

    let klein = parse_group_json(r#"{"kind":"cayley","table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#, 720)?;
    describe(&klein);

    describe(&direct_product(&make_named("S3", 720)?, &klein, 720)?);
    Ok(())
}
