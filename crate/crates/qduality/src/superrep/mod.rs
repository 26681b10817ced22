//! Explicit graded matrix representations on the tensor space W = V^⊗k:
//! Clifford generators, the twisted group-algebra action, the superalgebra
//! action, eigenspace splittings, supercommutants, graded traces, averaging
//! operators, and the structured duality verification reports.

mod commutant;
mod duality;
mod ops;
mod space;
mod verify;

pub use commutant::{eigenspace_basis, supercommutant, SubspaceBasis};
pub use duality::{duality_report, in_slotwise_block_shape, sergeev_report};
pub use ops::{
    build_p, build_p_q, build_q, diag_action, eval_word, psi_generator, psi_tau_prime_i, psi_zeta,
    qn_full_basis, qn_pair_basis, tensor_operator, theta_generator, GradedOperator, OpDegree,
    PsiGen, QnBasisElement,
};
pub use space::{VSpace, WSpace};
pub use verify::{
    averaging_operators, averaging_s, averaging_t, graded_trace, verify_relations, PsiImages,
    TraceScope,
};

use crate::field::Cyclo8;
use crate::QdError;

/// Build the eigenspace of the commuting involutions for a sign pattern.
pub fn w_epsilon(eps: &[u8], k: usize, n0: usize, n1: usize) -> Result<SubspaceBasis, QdError> {
    let r = k / 2;
    if k < 2 || eps.len() != r {
        return Err(QdError::InvalidInput(format!(
            "need k >= 2 and {} sign bits, got k={k} with {}",
            r,
            eps.len()
        )));
    }
    let zetas: Vec<GradedOperator> = (1..=r)
        .map(|i| psi_zeta(i, k, n0, n1))
        .collect::<Result<_, _>>()?;
    let w = WSpace::new(VSpace::new(n0, n1), k);
    eigenspace_basis(&zetas, eps, &w.degs())
}

/// The sign (−1)^((k − l(κ) − l(ν))/2) distinguishing the two lifts of a
/// class of odd-cycle type to the double cover. The word built from the
/// generators realizes the lift whose eigenspace trace carries this sign
/// relative to the bare power-sum product; it is +1 exactly when
/// k − l(κ) − l(ν) ≡ 0 (mod 4), in particular whenever no part is ≡ 3 (mod 4).
pub fn class_lift_sign(pair: &crate::combinatorics::BiPartition, k: usize) -> i8 {
    let drop = k - pair.total_len();
    debug_assert_eq!(drop % 2, 0, "odd parts drop length in pairs");
    if (drop / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Expected eigenspace trace of a class word against a diagonal torus
/// element: the lift sign times (√2)^(l(κ)+l(ν)) · p_κ(x,y) · p_ν(x,−y)
/// evaluated at the given values, with one extra √2 when k is odd.
///
/// The lift sign is forced: with the defining relations and the pinned
/// generator matrices, the realized class words are the double-cover lifts
/// carrying (−1)^((k−l−l')/2); see [`class_lift_sign`].
pub fn expected_class_trace(
    pair: &crate::combinatorics::BiPartition,
    xs: &[Cyclo8],
    ys: &[Cyclo8],
    k: usize,
) -> Result<Cyclo8, QdError> {
    use crate::symfunc::{power_sum_product, Bank};
    let (n0, n1) = (xs.len(), ys.len());
    let p_kappa = power_sum_product(&pair.first, Bank::XUnionY, n0, n1)?;
    let p_nu = power_sum_product(&pair.second, Bank::XUnionNegY, n0, n1)?;
    let mut exponent = pair.total_len() as i64;
    if k % 2 == 1 {
        exponent += 1;
    }
    let mut value = &(&p_kappa.specialize(xs, ys)? * &p_nu.specialize(xs, ys)?)
        * &Cyclo8::sqrt2_pow(exponent);
    if class_lift_sign(pair, k) < 0 {
        value = -value;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{build_word, enum_bipartitions, PartitionKind};
    use crate::field::FMatrix;

    #[test]
    fn w_epsilon_dimensions_partition_w() {
        let (k, n0, n1) = (2usize, 1usize, 1usize);
        let d0 = w_epsilon(&[0], k, n0, n1).unwrap().dim();
        let d1 = w_epsilon(&[1], k, n0, n1).unwrap().dim();
        assert_eq!(d0, 8);
        assert_eq!(d1, 8);
        assert_eq!(d0 + d1, 16);
        // Uniform dimension (2n)^k / 2^r at k=4 as well.
        for mask in 0..4u8 {
            let eps = vec![mask & 1, (mask >> 1) & 1];
            let d = w_epsilon(&eps, 4, 1, 1).unwrap().dim();
            assert_eq!(d, 256 / 4);
        }
    }

    #[test]
    fn gamma_restricts_to_eigenspaces() {
        // γ_j commutes with every ζ_i, so restriction must succeed.
        let (k, n0, n1) = (3usize, 1usize, 1usize);
        let basis = w_epsilon(&[0], k, n0, n1).unwrap();
        for j in 1..k {
            let g = psi_generator(PsiGen::Gamma(j), k, n0, n1).unwrap();
            let r = basis.restrict(&g.mat).unwrap();
            assert_eq!(r.rows(), basis.dim());
        }
        // And an operator that moves between eigenspaces errors out: ξ_1
        // anticommutes with ζ_1.
        let xi1 = psi_generator(PsiGen::Xi(1), k, n0, n1).unwrap();
        assert!(basis.restrict(&xi1.mat).is_err());
    }

    #[test]
    fn class_word_traces_match_closed_form() {
        let (n0, n1) = (1usize, 1usize);
        let xs = [Cyclo8::from_ratio(2, 1)];
        let ys = [Cyclo8::from_ratio(1, 3)];
        for k in [2usize, 3] {
            for pair in enum_bipartitions(k as u32, PartitionKind::Odd) {
                let word = build_word(&pair, k as u32).unwrap();
                let eps = vec![0u8; k / 2];
                let got =
                    graded_trace(&word, &xs, &ys, &TraceScope::Epsilon(eps), k, n0, n1).unwrap();
                let want = expected_class_trace(&pair, &xs, &ys, k).unwrap();
                assert_eq!(got, want, "class {}", pair.label());
            }
        }
    }

    #[test]
    fn lift_sign_is_trivial_without_parts_three_mod_four() {
        use crate::combinatorics::{BiPartition, Partition};
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).unwrap();
        assert_eq!(class_lift_sign(&BiPartition::new(p(&[1, 1]), Partition::empty()), 2), 1);
        assert_eq!(class_lift_sign(&BiPartition::new(p(&[3]), Partition::empty()), 3), -1);
        assert_eq!(class_lift_sign(&BiPartition::new(p(&[5]), Partition::empty()), 5), 1);
        assert_eq!(class_lift_sign(&BiPartition::new(p(&[3]), p(&[3])), 6), 1);
        assert_eq!(class_lift_sign(&BiPartition::new(p(&[3, 1]), p(&[1])), 5), -1);
    }

    #[test]
    fn full_trace_is_two_power_times_eigen_trace() {
        // tr over W of (1 ⊗ word)·E equals 2^r times the eigenspace trace.
        let (k, n0, n1) = (2usize, 1usize, 1usize);
        let pair = enum_bipartitions(2, PartitionKind::Odd)[1].clone();
        let word = build_word(&pair, 2).unwrap();
        let xs = [Cyclo8::from_int(3)];
        let ys = [Cyclo8::from_int(5)];
        let full = graded_trace(&word, &xs, &ys, &TraceScope::Full, k, n0, n1).unwrap();
        let eps = graded_trace(&word, &xs, &ys, &TraceScope::Epsilon(vec![0]), k, n0, n1).unwrap();
        assert_eq!(full, &Cyclo8::from_int(2) * &eps);
    }

    #[test]
    fn restriction_moves_between_eigenspaces_via_odd_clifford() {
        // ξ_(2j−1) maps one eigenspace onto the flipped one; here just check
        // the dimension bookkeeping via images: applying ξ_1 to each basis
        // vector of eps=0 lands in eps=1's span.
        let (k, n0, n1) = (2usize, 1usize, 1usize);
        let plus = w_epsilon(&[0], k, n0, n1).unwrap();
        let minus = w_epsilon(&[1], k, n0, n1).unwrap();
        let xi1 = psi_generator(PsiGen::Xi(1), k, n0, n1).unwrap().mat;
        for v in &plus.vectors {
            let image = xi1.apply_sparse(v);
            // Express in minus-basis: coordinates at reps, then verify.
            let mut recon: std::collections::BTreeMap<usize, Cyclo8> = Default::default();
            for (pos, val) in &image {
                if let Some(j) = minus.reps.iter().position(|r| r == pos) {
                    for (p, bv) in &minus.vectors[j] {
                        let e = recon.entry(*p).or_insert_with(Cyclo8::zero);
                        *e = &*e + &(val * bv);
                    }
                }
            }
            recon.retain(|_, v| !v.is_zero());
            let image_map: std::collections::BTreeMap<usize, Cyclo8> =
                image.into_iter().collect();
            assert_eq!(recon, image_map);
        }
        let _ = FMatrix::identity(1);
    }
}
