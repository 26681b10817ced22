//! Split W into the simultaneous eigenspaces of the commuting even
//! involutions and restrict operators onto them.
//!
//! Run with: cargo run --example eigenspace_split

use qduality::superrep::{psi_generator, w_epsilon, PsiGen, VSpace, WSpace};

fn main() {
    let (k, n0, n1) = (4usize, 1usize, 1usize);
    let w = WSpace::new(VSpace::new(n0, n1), k);
    let r = k / 2;
    println!("dim W = {}, splitting by {} involutions:", w.dim(), r);
    let mut total = 0;
    for mask in 0..(1u32 << r) {
        let eps: Vec<u8> = (0..r).map(|i| ((mask >> i) & 1) as u8).collect();
        let basis = w_epsilon(&eps, k, n0, n1).unwrap();
        total += basis.dim();
        println!("  eps = {eps:?}: dim = {}", basis.dim());
    }
    println!("  total = {total} = dim W");

    // Operators commuting with the involutions restrict exactly; the group
    // generators do, the plain Clifford generators do not.
    let basis = w_epsilon(&vec![0; r], k, n0, n1).unwrap();
    let gamma = psi_generator(PsiGen::Gamma(1), k, n0, n1).unwrap();
    let restricted = basis.restrict(&gamma.mat).unwrap();
    println!(
        "\ngamma_1 restricted to the eps=0 eigenspace: {}x{} with {} entries",
        restricted.rows(),
        restricted.cols(),
        restricted.nnz()
    );
    let xi = psi_generator(PsiGen::Xi(1), k, n0, n1).unwrap();
    println!(
        "xi_1 preserves the eigenspace: {}",
        basis.restrict(&xi.mat).is_ok()
    );
}
