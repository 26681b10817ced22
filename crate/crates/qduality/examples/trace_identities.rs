//! End-to-end trace oracle: eigenspace traces of class words against a
//! diagonal torus element match the closed power-sum form (with the
//! double-cover lift sign) — the matrix side and the symmetric-function side
//! of the character theory agree exactly.
//!
//! Run with: cargo run --release --example trace_identities

use qduality::combinatorics::{build_word, enum_bipartitions, PartitionKind};
use qduality::field::Cyclo8;
use qduality::superrep::{
    class_lift_sign, expected_class_trace, graded_trace, TraceScope,
};

fn main() {
    let (k, n0, n1) = (3usize, 1usize, 1usize);
    let xs = [Cyclo8::from_ratio(2, 1)];
    let ys = [Cyclo8::from_ratio(1, 3)];
    println!("k = {k}, E = diag(2; 1/3), eigenspace eps = (0):");
    for pair in enum_bipartitions(k as u32, PartitionKind::Odd) {
        let word = build_word(&pair, k as u32).unwrap();
        let got = graded_trace(&word, &xs, &ys, &TraceScope::Epsilon(vec![0]), k, n0, n1).unwrap();
        let want = expected_class_trace(&pair, &xs, &ys, k).unwrap();
        println!(
            "  class {:8} lift sign {:+}: trace = {:10} closed form = {:10} match = {}",
            pair.label(),
            class_lift_sign(&pair, k),
            got.to_string(),
            want.to_string(),
            got == want
        );
    }

    // The full-space trace is 2^r times any eigenspace trace.
    let pair = enum_bipartitions(k as u32, PartitionKind::Odd)[0].clone();
    let word = build_word(&pair, k as u32).unwrap();
    let full = graded_trace(&word, &xs, &ys, &TraceScope::Full, k, n0, n1).unwrap();
    let eps = graded_trace(&word, &xs, &ys, &TraceScope::Epsilon(vec![0]), k, n0, n1).unwrap();
    println!(
        "\nfull-space trace {} = 2^r × eigenspace trace {}: {}",
        full,
        eps,
        full == &Cyclo8::from_int(2) * &eps
    );
}
