//! Single-clone fidelity of the symmetric cloner for a few dimensions.

use qbroadcast::cloning::{clone_fidelities, heisenberg_isometry, optimal_fidelity, shrinking_factor};
use qbroadcast::families::haar_random_pure;

fn main() -> qbroadcast::Result<()> {
    println!("{:>3} {:>10} {:>10} {:>10}", "d", "F(min)", "F(max)", "expected");
    for d in 2..=6 {
        let iso = heisenberg_isometry(d)?;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..200 {
            let (fa, fb) = clone_fidelities(&iso, &haar_random_pure(d, 1, i))?;
            lo = lo.min(fa.min(fb));
            hi = hi.max(fa.max(fb));
        }
        println!("{d:>3} {lo:>10.6} {hi:>10.6} {:>10.6}", optimal_fidelity(d));
    }
    println!(
        "\nshrinking factor s(d) = (d+2)/(2(d+1)): s(2) = {:.4}, s(3) = {:.4}",
        shrinking_factor(2),
        shrinking_factor(3)
    );
    Ok(())
}
