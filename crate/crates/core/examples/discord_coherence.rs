//! Discord and coherence of local and nonlocal outputs, against closed forms.

use qbroadcast::scan::{reproduce_table, Table};

fn main() -> qbroadcast::Result<()> {
    for t in Table::ALL {
        let rep = reproduce_table(t)?;
        println!("{}", t.name());
        for row in &rep.rows {
            println!(
                "  {:<24} {:>5} points  max |dev| = {:.3e}",
                row.formula, row.points, row.max_deviation
            );
        }
    }
    Ok(())
}
