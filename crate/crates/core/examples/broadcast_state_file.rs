//! Writes a state file, reads it back and runs the protocol on it.
//!
//! `cargo run --example broadcast_state_file [path]`

use std::path::PathBuf;

use qbroadcast::cloning::broadcast;
use qbroadcast::criteria::Tolerances;
use qbroadcast::families::tpcs;
use qbroadcast::io::{load_state, save_state};
use qbroadcast::scan::evaluate_outputs;
use qbroadcast::SubsystemShape;

fn main() -> qbroadcast::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("tpcs_state.json"));
    if !path.exists() {
        save_state(&path, &tpcs(0.1, 0.6)?, &SubsystemShape::bipartite(2, 3)?)?;
        println!("wrote {}", path.display());
    }
    let (rho, shape) = load_state(&path)?;
    let e = evaluate_outputs(&broadcast(&rho, &shape)?, &Tolerances::default())?;
    println!("{}", serde_json::to_string_pretty(&e)?);
    Ok(())
}
