//! Entanglement thresholds along the MEMS family.

use qbroadcast::criteria::Tolerances;
use qbroadcast::scan::{locate_threshold, Predicate, Slice};

fn main() {
    let tol = Tolerances::default();
    let runs = [
        (Predicate::NonlocalEntangled, 0.0, 0.5),
        (Predicate::AliceLocalSeparable, 0.5, 1.0),
        (Predicate::BobLocalNpt, 0.5, 1.0),
        (Predicate::BobPptes, 0.5, 1.0),
    ];
    for (p, lo, hi) in runs {
        match locate_threshold(Slice::mems(), p, lo, hi, 1e-9, &tol) {
            Ok(t) => println!("{p:<24} on [{lo}, {hi}]: r* = {:.9}", t.root),
            Err(e) => println!("{p:<24} on [{lo}, {hi}]: {e}"),
        }
    }
    println!("(14 + 4 sqrt 6)/25 = {:.9}", (14.0 + 4.0 * 6f64.sqrt()) / 25.0);
}
