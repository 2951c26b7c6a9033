//! The nonlocal output of a random qubit-qutrit state is its input with each
//! Bloch block shrunk by a fixed factor.

use qbroadcast::bloch::decompose;
use qbroadcast::cloning::{broadcast, measure_shrinking};
use qbroadcast::families::haar_random_state_indexed;
use qbroadcast::SubsystemShape;

fn main() -> qbroadcast::Result<()> {
    let shape = SubsystemShape::bipartite(2, 3)?;
    let rho = haar_random_state_indexed(6, 6, 2024, 0)?;
    let input = decompose(&rho, &shape)?;
    let output = decompose(&broadcast(&rho, &shape)?.rho_14, &shape)?;

    println!("x_in  = {:?}", input.x.map(|v| format!("{v:+.5}")));
    println!("x_out = {:?}", output.x.map(|v| format!("{v:+.5}")));
    let (sx, sy, st) = measure_shrinking(&rho, &shape)?;
    println!("measured ratios: X {sx:.12}  Y {sy:.12}  T {st:.12}");
    println!(
        "expected:        X {:.12}  Y {:.12}  T {:.12}",
        2.0 / 3.0,
        5.0 / 8.0,
        5.0 / 12.0
    );
    Ok(())
}
