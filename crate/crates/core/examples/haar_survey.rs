//! Fraction of random states certified non-broadcastable, for several mixing levels.

use qbroadcast::scan::survey_with_env;

fn main() -> qbroadcast::Result<()> {
    let n = 2000;
    println!("{:>5} {:>7} {:>7}", "env", "blue", "red");
    for env in [1, 6, 12, 24, 48, 96] {
        let rep = survey_with_env(n, 42, 3, env)?;
        println!("{env:>5} {:>7} {:>7}", rep.blue, rep.red);
    }
    Ok(())
}
