//! Caches a subgroup lattice on disk and reloads it.

use std::time::Instant;

use subgroup_degree::cache::LatticeCache;
use subgroup_degree::make_named;

fn main() -> subgroup_degree::Result<()> {
    let dir = std::env::temp_dir().join("sgdeg-example-cache");
    let cache = LatticeCache::new(&dir)?;
    let g = make_named("S5", 720)?;
    println!("cache file: {}", cache.path_for(&g).display());
    for _ in 0..2 {
        let t = Instant::now();
        let (l, outcome) = cache.lattice(g.clone(), 20_000)?;
        println!("{:?}: {} subgroups in {:?}", outcome, l.len(), t.elapsed());
    }
    std::fs::write(cache.path_for(&g), "garbage")?;
    let (_, outcome) = cache.lattice(g, 20_000)?;
    println!("after corrupting the file: {outcome:?}");
    Ok(())
}
