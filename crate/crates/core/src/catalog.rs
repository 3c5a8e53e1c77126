//! The built-in catalog of test groups.

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::named::make_named;

pub const CATALOG: &[&str] = &[
    "C1", "C2", "C3", "C5", "C12", "Z:2,2", "Z:2,4", "Z:2,2,2", "Z:3,3", "S3", "D4", "Q8", "A4", "D6",
    "S4", "S5", "S3xC5", "A4xC5",
];

/// Entries only run with `--stretch`.
pub const STRETCH: &[&str] = &["S6"];

pub const NILPOTENT: &[&str] = &["C12", "D4", "Q8", "Z:2,2,2", "Z:3,3"];

pub enum CatalogEntry {
    Ready(FiniteGroup),
    Skipped { spec: &'static str, order: u128 },
}

/// Builds the catalog, marking entries above `max_order` as skipped.
pub fn catalog(max_order: usize, stretch: bool) -> Result<Vec<CatalogEntry>> {
    let specs = CATALOG.iter().chain(if stretch { STRETCH } else { &[] });
    specs
        .map(|&spec| match make_named(spec, max_order) {
            Ok(g) => Ok(CatalogEntry::Ready(g)),
            Err(crate::Error::OrderCap { order, .. }) => Ok(CatalogEntry::Skipped { spec, order }),
            Err(e) => Err(e),
        })
        .collect()
}
