//! Coarse map of broadcasting classes over the TPCS parameter triangle.
//! Rows are gamma (top = 1), columns alpha in [0, 1/2].
//! `.` none, `n` non-optimal, `s` sub-optimal, `o` optimal.

use qbroadcast::criteria::Tolerances;
use qbroadcast::scan::{evaluate_point, BroadcastClass, Family};

fn main() -> qbroadcast::Result<()> {
    let tol = Tolerances::default();
    let n = 40;
    for j in (0..=n / 2).rev() {
        let g = 2.0 * j as f64 / n as f64;
        let mut row = String::new();
        for i in 0..=n {
            let a = 0.5 * i as f64 / n as f64;
            if 1.0 - 2.0 * a - g < -1e-12 {
                row.push(' ');
                continue;
            }
            let rec = evaluate_point(Family::Tpcs, &[a, g], &tol)?;
            row.push(match rec.broadcast_class {
                BroadcastClass::None => '.',
                BroadcastClass::NonOptimal => 'n',
                BroadcastClass::SubOptimal => 's',
                BroadcastClass::Optimal => 'o',
            });
        }
        println!("{g:4.2} |{row}");
    }
    Ok(())
}
