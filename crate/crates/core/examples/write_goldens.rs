//! Rewrites the golden certificate files under `data/golden`.
//!
//! `cargo run --release -p ahtoric --example write_goldens`

use ahtoric::certificates::config_for;

fn main() -> ahtoric::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden");
    std::fs::create_dir_all(dir).expect("golden directory is writable");
    for d in 5..=22 {
        let c = config_for(d)?;
        std::fs::write(format!("{dir}/certificate_d{d:02}.json"), c.to_file_string()).expect("writable");
    }
    Ok(())
}
