//! Schur Q-functions from the two-row recurrence and Pfaffians: print small
//! cases, evaluate them exactly, and expand a power-sum product over the
//! product basis.
//!
//! Run with: cargo run --example schur_q_functions

use qduality::combinatorics::{enum_strict, Partition};
use qduality::field::Cyclo8;
use qduality::symfunc::{expand_qq, power_sum, q_component, schur_q, Bank};

fn main() {
    println!("q-series components in two variables:");
    for r in 0..=3u32 {
        println!("  q_{r} = {}", q_component(r, Bank::X, 2, 0).render());
    }

    println!("\nSchur Q-functions in three variables:");
    for k in 1..=4u32 {
        for lambda in enum_strict(k) {
            let q = schur_q(&lambda, Bank::X, 3, 0).unwrap();
            println!("  Q_{lambda:?} = {}", q.render());
        }
    }

    // A partition longer than the variable count vanishes identically.
    let long = Partition::new(vec![3, 2, 1]).unwrap();
    let vanished = schur_q(&long, Bank::X, 2, 0).unwrap();
    println!("\nQ_(3,2,1) in two variables is zero: {}", vanished.is_zero());

    // Exact evaluation: Q_(2,1) at (1, 1/2).
    let q21 = schur_q(&Partition::new(vec![2, 1]).unwrap(), Bank::X, 2, 0).unwrap();
    let value = q21
        .specialize(&[Cyclo8::one(), Cyclo8::from_ratio(1, 2)], &[])
        .unwrap();
    println!("Q_(2,1)(1, 1/2) = {value}");

    // Expansion over the product basis: p1(x)·p1(y) = (1/4)·Q_(1)(x)Q_(1)(y).
    let f = power_sum(1, Bank::X, 2, 2)
        .unwrap()
        .mul(&power_sum(1, Bank::Y, 2, 2).unwrap());
    let qq = expand_qq(&f).unwrap();
    println!("\np1(x)·p1(y) expands as:");
    for (pair, c) in &qq.coeffs {
        println!("  coefficient {} on Q-pair {}", c, pair.label());
    }
}
