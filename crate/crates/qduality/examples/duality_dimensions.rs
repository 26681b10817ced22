//! The full duality report: supercommutation of the two actions, equality of
//! commutant and span dimensions on W, and the eigenspace pattern — equality
//! at even rank, dimension doubling with an invertible odd element at odd
//! rank.
//!
//! Run with: cargo run --release --example duality_dimensions

use qduality::superrep::duality_report;

fn main() {
    // The (3,1,2) case exercises asymmetric blocks; it takes a few seconds.
    for (k, n0, n1) in [(2usize, 1usize, 1usize), (3, 1, 1), (3, 1, 2)] {
        let report = duality_report(k, n0, n1).unwrap();
        println!("duality report at k={k}, blocks ({n0},{n1}):");
        for check in &report.checks {
            println!("  [{:?}] {} — {}", check.status, check.name, check.witness);
        }
        println!("  all passed: {}\n", report.all_passed());
    }
}
