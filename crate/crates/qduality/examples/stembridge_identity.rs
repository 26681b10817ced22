//! Cross-check the extracted character values through the substitution
//! endomorphism ι: applying it to both sides of the extraction identity
//! yields the one-bank identity, which is verified exactly.
//!
//! Run with: cargo run --release --example stembridge_identity

use qduality::characters::verify_stembridge;
use qduality::symfunc::{iota_map, schur_q, Bank};
use qduality::combinatorics::Partition;

fn main() {
    // The pivot fact behind the cross-check:
    // ι(Q_λ(x)·Q_μ(y)) = Q_λ(x,y)·Q_μ(x,−y).
    let lam = Partition::new(vec![2]).unwrap();
    let mu = Partition::new(vec![1]).unwrap();
    let m = 3;
    let qx = schur_q(&lam, Bank::X, m, m).unwrap();
    let qy = schur_q(&mu, Bank::Y, m, m).unwrap();
    let image = iota_map(&qx, &qy, m, m).unwrap();
    let direct = schur_q(&lam, Bank::XUnionY, m, m)
        .unwrap()
        .mul(&schur_q(&mu, Bank::XUnionNegY, m, m).unwrap());
    println!("ι(Q_(2)(x)Q_(1)(y)) = Q_(2)(x,y)Q_(1)(x,−y): {}", image == direct);

    for k in 2..=5u32 {
        let report = verify_stembridge(k).unwrap();
        println!(
            "k = {k}: identity and ι-image checks {} ({} failures)",
            if report.holds { "hold" } else { "FAIL" },
            report.failures.len()
        );
    }
}
