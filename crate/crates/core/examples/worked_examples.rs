//! Runs both worked examples end to end and prints each check.

use hermquot::cli::reproduce;
use hermquot::curves::Budget;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for example in [1, 2] {
        let r = reproduce(example, &Budget::default())?;
        println!("example {example}: {} passed, {} failed", r.passed, r.failed);
        for c in &r.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            println!("  {mark} {:<36} expected {} got {} ({})", c.name, c.expected, c.actual, c.source);
        }
    }
    Ok(())
}
