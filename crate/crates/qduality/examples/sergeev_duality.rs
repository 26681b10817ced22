//! The one-block duality: the Clifford-extended symmetric-group action and
//! the full superalgebra action are mutual supercentralizers, checked by
//! exact commutant and span dimensions, plus positivity of the occurring
//! module dimensions.
//!
//! Run with: cargo run --release --example sergeev_duality

use qduality::characters::sergeev_character;
use qduality::combinatorics::enum_strict;
use qduality::field::Cyclo8;
use qduality::superrep::sergeev_report;

fn main() {
    for k in [2usize, 3] {
        let report = sergeev_report(k, 1, 1).unwrap();
        println!("one-block duality at k={k}, n=2:");
        for check in &report.checks {
            println!("  [{:?}] {} — {}", check.status, check.name, check.witness);
        }
    }

    println!("\nmodule dimensions at n=2 from the character at all-ones:");
    for k in 1..=4u32 {
        for lambda in enum_strict(k) {
            if lambda.len() > 2 {
                continue;
            }
            let ch = sergeev_character(&lambda, 2).unwrap();
            let dim = ch.specialize(&[Cyclo8::one(), Cyclo8::one()], &[]).unwrap();
            println!("  k={k} λ={lambda:?}: dim = {dim}");
        }
    }
}
