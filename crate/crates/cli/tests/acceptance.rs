//! All fourteen criteria at full size and tolerance, one line each.

use betadual_cli::suite::{Status, SuiteOptions, CRITERIA};

fn main() {
    let opts = SuiteOptions::full();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let e = c.run(&opts);
        let label = if e.status == Status::Pass { "PASS" } else { "FAIL" };
        println!("{label} criterion {}: {} [{}] ({:.1}s) {}", c.id, c.name, e.anchor, e.seconds, e.detail);
        if e.status != Status::Pass {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CRITERIA.len());
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
