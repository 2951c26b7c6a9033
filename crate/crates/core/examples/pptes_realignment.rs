//! Partial-transpose spectrum and realignment norm of Bob's two clones.

use qbroadcast::cloning::broadcast;
use qbroadcast::criteria::{pptes_detect, pt_min_eigenvalue, realignment_norm, Tolerances};
use qbroadcast::families::{mems, tpcs};
use qbroadcast::SubsystemShape;

fn main() -> qbroadcast::Result<()> {
    let shape = SubsystemShape::bipartite(2, 3)?;
    let tol = Tolerances::default();
    println!("MEMS, Bob's pair");
    println!("{:>8} {:>14} {:>14} {:>6}", "r", "min eig(PT)", "||R||_tr", "PPTES");
    for r in [0.5, 0.8, 0.95, 0.952, 0.97, 1.0] {
        let out = broadcast(&mems(r)?, &shape)?;
        let bob = out.bob_shape();
        println!(
            "{r:>8.3} {:>14.6e} {:>14.10} {:>6}",
            pt_min_eigenvalue(&out.rho_24, &bob)?,
            realignment_norm(&out.rho_24, &bob)?,
            pptes_detect(&out.rho_24, &bob, &tol)?
        );
    }
    println!("\nTPCS (gamma = 0), Bob's pair");
    for a in [0.0, 0.02, 0.03, 0.2, 0.41, 0.42, 0.5] {
        let out = broadcast(&tpcs(a, 0.0)?, &shape)?;
        let bob = out.bob_shape();
        println!(
            "{a:>8.3} {:>14.6e} {:>14.10} {:>6}",
            pt_min_eigenvalue(&out.rho_24, &bob)?,
            realignment_norm(&out.rho_24, &bob)?,
            pptes_detect(&out.rho_24, &bob, &tol)?
        );
    }
    Ok(())
}
