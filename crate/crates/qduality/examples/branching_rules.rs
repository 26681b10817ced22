//! Branching multiplicities of the simple tensor-space modules under the
//! block split, with the exact dimension bookkeeping.
//!
//! Run with: cargo run --example branching_rules

use qduality::characters::branching_multiplicities;
use qduality::combinatorics::{enum_strict, Partition};

fn main() {
    let lambda = Partition::new(vec![3, 1]).unwrap();
    for (n0, n1) in [(1usize, 1usize), (2, 2)] {
        let table = branching_multiplicities(&lambda, n0, n1).unwrap();
        println!("λ = {lambda:?} into blocks ({n0}, {n1}):");
        for (pair, e) in &table.entries {
            println!("  {:8} m = {:>4}   m' = {}", pair.label(), e.m.to_string(), e.m_prime);
        }
        println!("  dimension conservation: {}\n", table.dimension_check().unwrap());
    }

    // m' is integral for every strict partition of 4.
    for lambda in enum_strict(4) {
        let table = branching_multiplicities(&lambda, 2, 2).unwrap();
        let all_integral = table
            .entries
            .values()
            .all(|e| e.m_prime.denom() == &num::BigInt::from(1));
        println!("λ = {lambda:?}: all m' integral = {all_integral}");
    }
}
