//! Build the explicit generator matrices on W = V^⊗k and check the defining
//! relations of all three presentations as exact matrix identities.
//!
//! Run with: cargo run --example clifford_representation

use qduality::field::algebra_span;
use qduality::superrep::{build_p_q, psi_generator, verify_relations, PsiGen, PsiImages};

fn main() {
    let (p, q) = build_p_q(1, 1);
    println!("P (odd involution) =\n{:?}", p.mat);
    println!("Q (even involution) =\n{:?}", q.mat);

    let (k, n0, n1) = (3usize, 1usize, 1usize);
    let xi1 = psi_generator(PsiGen::Xi(1), k, n0, n1).unwrap();
    let gamma1 = psi_generator(PsiGen::Gamma(1), k, n0, n1).unwrap();
    println!(
        "\non W of dimension {}: xi_1 is {:?} with {} entries, gamma_1 is {:?} with {} entries",
        xi1.mat.rows(),
        xi1.degree,
        xi1.mat.nnz(),
        gamma1.degree,
        gamma1.mat.nnz()
    );

    // The Clifford images span an algebra of dimension 2^k.
    let imgs = PsiImages::build(k, n0, n1).unwrap();
    let cliff: Vec<_> = imgs.xi.iter().map(|x| x.mat.clone()).collect();
    println!("Clifford span dimension = {} (expected {})", algebra_span(&cliff).unwrap().len(), 1 << k);

    let report = verify_relations(k, n0, n1).unwrap();
    println!(
        "\nrelation suite at k={k}: {} checks, all passed = {}",
        report.checks.len(),
        report.all_passed()
    );
    for check in report.checks.iter().take(8) {
        println!("  [{:?}] {}", check.status, check.law);
    }
    println!("  ...");
}
