//! Tour of the labeling combinatorics: strict and odd partitions, bipartition
//! labels, their sign/type data, and the normal-form class words.
//!
//! Run with: cargo run --example partitions_and_labels

use qduality::combinatorics::{
    build_word, class_maps, enum_bipartitions, enum_odd, enum_strict, PartitionKind,
};

fn main() {
    for k in 0..=6u32 {
        let strict = enum_strict(k);
        let odd = enum_odd(k);
        println!(
            "k = {k}: {} strict partitions, {} odd partitions (always equal)",
            strict.len(),
            odd.len()
        );
    }

    let k = 4;
    println!("\nstrict bipartitions of {k} with sign/type data:");
    for pair in enum_bipartitions(k, PartitionKind::Strict) {
        let cd = class_maps(&pair).unwrap();
        println!(
            "  {:8}  sign = {:+}  eps = {}  d = {}",
            pair.label(),
            cd.sign,
            cd.eps,
            cd.d
        );
    }

    println!("\nclass words for the odd bipartitions of {k}:");
    for pair in enum_bipartitions(k, PartitionKind::Odd) {
        let word = build_word(&pair, k).unwrap();
        println!("  {:10} -> {}  ({} primitive letters)", pair.label(), word, word.expand().len());
    }
}
