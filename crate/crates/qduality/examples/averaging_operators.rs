//! The two averaging operators used to carve out the supercommutant: the
//! symmetrizing average over the transposition group and the block average
//! over the diagonal involutions. Both are idempotent and fix exactly the
//! operators commuting with the respective actions.
//!
//! Run with: cargo run --example averaging_operators

use qduality::field::{Cyclo8, FMatrix};
use qduality::superrep::{averaging_operators, supercommutant, PsiImages};

fn main() {
    let (k, n0, n1) = (2usize, 1usize, 1usize);

    // A generic non-invariant matrix gets projected.
    let mut f = FMatrix::zeros(16, 16);
    f.set(0, 3, Cyclo8::one());
    f.set(5, 2, Cyclo8::sqrt2());
    f.set(7, 7, Cyclo8::from_int(2));
    let (sf, tf) = averaging_operators(&f, k, n0, n1).unwrap();
    println!("S(f): {} entries (from {}), T(f): {} entries", sf.nnz(), f.nnz(), tf.nnz());
    let (ssf, ttf) = (
        averaging_operators(&sf, k, n0, n1).unwrap().0,
        averaging_operators(&tf, k, n0, n1).unwrap().1,
    );
    println!("idempotent: S(S(f)) = S(f): {}, T(T(f)) = T(f): {}", ssf == sf, ttf == tf);

    // Supercommutant elements are fixed points of both averages.
    let imgs = PsiImages::build(k, n0, n1).unwrap();
    let degs = imgs.wspace().degs();
    let gens: Vec<_> = imgs.bhat_generators().into_iter().cloned().collect();
    let (even, odd) = supercommutant(&gens, &degs).unwrap();
    println!(
        "\nsupercommutant of the full action: {} even + {} odd basis elements",
        even.len(),
        odd.len()
    );
    let mut fixed = true;
    for b in even.iter().chain(&odd) {
        let (sb, tb) = averaging_operators(b, k, n0, n1).unwrap();
        fixed &= sb == *b && tb == *b;
    }
    println!("every basis element is fixed by S and T: {fixed}");
}
