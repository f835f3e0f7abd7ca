//! Re-runs every packing search and rewrites `data/placements.json`.
//!
//! `cargo run --release -p ahtoric --example regenerate_placements`

use std::collections::BTreeMap;

use ahtoric::certificates::frozen::{regenerate, to_data, SEARCHED};
use ahtoric::packing::DEFAULT_BUDGET;

fn main() -> ahtoric::Result<()> {
    let mut table = BTreeMap::new();
    for name in SEARCHED {
        let t = std::time::Instant::now();
        let units = regenerate(name, DEFAULT_BUDGET)?;
        eprintln!("{name}: {} units in {:.1?}", units.len(), t.elapsed());
        table.insert(name.to_string(), units);
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/placements.json");
    std::fs::write(path, to_data(&table)).expect("placements file is writable");
    Ok(())
}
