//! The structured duality report: supercommutation of the two actions,
//! mutual-centralizer dimension checks on the full tensor space and on each
//! eigenspace, the odd-rank doubling pattern, dimension bookkeeping against
//! extracted character degrees, and the slotwise block-shape membership test.

use crate::characters::bprime_char_table;
use crate::combinatorics::class_maps;
use crate::field::{algebra_span, Cyclo8, FMatrix};
use crate::report::SuiteReport;
use crate::symfunc::{schur_q, Bank};
use crate::QdError;

use super::commutant::{eigenspace_basis, supercommutant, SubspaceBasis};
use super::ops::{psi_zeta, qn_full_basis, qn_pair_basis, theta_generator, GradedOperator};
use super::space::VSpace;
use super::verify::PsiImages;

/// X·g − (−1)^(deg X·deg g)·g·X, for homogeneous operators.
fn supercommutator(x: &GradedOperator, g: &GradedOperator) -> Result<FMatrix, QdError> {
    let dx = x.degree.parity().ok_or_else(|| {
        QdError::InvalidInput("supercommutator needs homogeneous operators".into())
    })?;
    let dg = g.degree.parity().ok_or_else(|| {
        QdError::InvalidInput("supercommutator needs homogeneous operators".into())
    })?;
    let xg = x.mat.mul(&g.mat)?;
    let gx = g.mat.mul(&x.mat)?;
    if dx & dg == 1 {
        xg.add(&gx)
    } else {
        xg.sub(&gx)
    }
}

/// Check that a W-operator lies in the slotwise block-shape subspace: through
/// the Koszul identification, flipping the grading halves of slot j in both
/// indices (the per-slot J-conjugation) must fix the operator, for every j.
pub fn in_slotwise_block_shape(m: &FMatrix, k: usize, n0: usize, n1: usize) -> bool {
    let v = VSpace::new(n0, n1);
    let w = super::space::WSpace::new(v, k);
    let n = v.n();
    let dim = w.dim();
    let flip = |s: usize| if s < n { s + n } else { s - n };
    // Koszul twist sign at (col multi-index, degree pattern).
    let twist_sign = |slots: &[usize], pattern: &[u8]| -> bool {
        let mut sign = false;
        let mut prefix = 0u8;
        for j in 0..k {
            if pattern[j] & prefix == 1 {
                sign = !sign;
            }
            prefix ^= v.deg(slots[j]);
        }
        sign
    };
    for j in 0..k {
        for col in 0..dim {
            let a = w.decode(col);
            for row in 0..dim {
                let val = m.get(row, col);
                let b = w.decode(row);
                let pattern: Vec<u8> = (0..k).map(|i| v.deg(a[i]) ^ v.deg(b[i])).collect();
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2[j] = flip(a2[j]);
                b2[j] = flip(b2[j]);
                let val2 = m.get(w.encode(&b2), w.encode(&a2));
                let s1 = twist_sign(&a, &pattern);
                let s2 = twist_sign(&a2, &pattern);
                let expected = if s1 != s2 { -val2 } else { val2.clone() };
                if *val != expected {
                    return false;
                }
            }
        }
    }
    true
}

fn fmt_dim(even: usize, odd: usize) -> String {
    format!("dim = {} (even {even}, odd {odd})", even + odd)
}

/// Restrict a family of graded operators onto a subspace.
fn restrict_all(
    basis: &SubspaceBasis,
    ops: &[&GradedOperator],
) -> Result<Vec<GradedOperator>, QdError> {
    ops.iter().map(|op| basis.restrict_graded(op)).collect()
}

/// Assemble the full duality report at parameters (k, n0, n1):
///
/// (a) every superalgebra basis image supercommutes with every generator
///     image; (b) the supercommutant of the group-algebra action matches the
///     algebra span of the superalgebra action, on W and on every
///     eigenspace (with the doubling pattern and an invertible odd witness
///     when k is odd); (c) eigenspace dimensions are uniform and sum to
///     dim W, and the extracted character degrees reproduce them; (d) the
///     superalgebra action stays inside the slotwise block shape.
pub fn duality_report(k: usize, n0: usize, n1: usize) -> Result<SuiteReport, QdError> {
    let mut rep = SuiteReport::new("duality", k as u32, n0, n1);
    let imgs = PsiImages::build(k, n0, n1)?;
    let wspace = imgs.wspace();
    let degs = wspace.degs();
    let v = VSpace::new(n0, n1);

    // Superalgebra basis images.
    let theta_images: Vec<(String, GradedOperator)> = qn_pair_basis(n0, n1)
        .into_iter()
        .map(|b| Ok((b.label(), theta_generator(&b.realize(&v), k, n0, n1)?)))
        .collect::<Result<_, QdError>>()?;

    // (a) supercommutation.
    let mut all_commute = true;
    let mut first_failure = String::new();
    for (label, x) in &theta_images {
        for (gi, g) in imgs.all_generators().iter().enumerate() {
            let sc = supercommutator(x, g)?;
            if !sc.is_zero() {
                all_commute = false;
                if first_failure.is_empty() {
                    first_failure = format!("{label} vs generator #{gi}");
                }
            }
        }
    }
    rep.push(
        "supercommutation",
        "every superalgebra basis image supercommutes with every generator image",
        all_commute,
        if all_commute { "exact".to_string() } else { first_failure },
    );

    // (b) on W: supercommutant of the full twisted-product action vs the
    // algebra span of the superalgebra action.
    let bhat: Vec<GradedOperator> = imgs.bhat_generators().into_iter().cloned().collect();
    let (comm_even, comm_odd) = supercommutant(&bhat, &degs)?;
    let theta_mats: Vec<FMatrix> = theta_images.iter().map(|(_, x)| x.mat.clone()).collect();
    let span = algebra_span(&theta_mats)?;
    rep.push(
        "centralizer-dim[W]",
        "dim supercommutant(product-algebra action) = dim span(superalgebra action) on W",
        comm_even.len() + comm_odd.len() == span.len(),
        format!(
            "{} vs span dim = {}",
            fmt_dim(comm_even.len(), comm_odd.len()),
            span.len()
        ),
    );

    // Eigenspace layer.
    let r = k / 2;
    if r >= 1 {
        let zetas: Vec<GradedOperator> = (1..=r)
            .map(|i| psi_zeta(i, k, n0, n1))
            .collect::<Result<_, _>>()?;
        let expected_dim = wspace.dim() >> r;
        let mut total = 0usize;
        for eps_mask in 0..(1usize << r) {
            let eps: Vec<u8> = (0..r).map(|i| ((eps_mask >> i) & 1) as u8).collect();
            let eps_label: String = eps.iter().map(|b| b.to_string()).collect();
            let basis = eigenspace_basis(&zetas, &eps, &degs)?;
            total += basis.dim();
            rep.push(
                format!("eigenspace-dim[{eps_label}]"),
                "every eigenspace has dimension dim W / 2^r",
                basis.dim() == expected_dim,
                format!("dim = {}", basis.dim()),
            );

            let bprime_restr = restrict_all(&basis, &imgs.bprime_generators())?;
            let (ceven, codd) = supercommutant(&bprime_restr, &basis.degs)?;
            let theta_restr: Vec<FMatrix> = theta_images
                .iter()
                .map(|(_, x)| basis.restrict(&x.mat))
                .collect::<Result<_, _>>()?;
            let span_eps = algebra_span(&theta_restr)?;
            let cdim = ceven.len() + codd.len();
            if k % 2 == 0 {
                rep.push(
                    format!("centralizer-dim[eps={eps_label}]"),
                    "even rank: commutant and superalgebra span coincide on the eigenspace",
                    cdim == span_eps.len(),
                    format!("{} vs span dim = {}", fmt_dim(ceven.len(), codd.len()), span_eps.len()),
                );
            } else {
                rep.push(
                    format!("centralizer-dim[eps={eps_label}]"),
                    "odd rank: commutant dimension doubles the superalgebra span",
                    cdim == 2 * span_eps.len(),
                    format!("{} vs span dim = {}", fmt_dim(ceven.len(), codd.len()), span_eps.len()),
                );
                // Invertible odd element: the restriction of the last
                // Clifford generator.
                let xi_k = basis.restrict_graded(&imgs.xi[k - 1])?;
                let odd_ok = xi_k.degree == super::ops::OpDegree::Odd;
                let sq_ok = xi_k.mat.pow(2)? == FMatrix::identity(basis.dim());
                let mut commutes = true;
                for g in &bprime_restr {
                    if !supercommutator(&xi_k, g)?.is_zero() {
                        commutes = false;
                    }
                }
                rep.push(
                    format!("odd-invertible[eps={eps_label}]"),
                    "odd rank: the restricted last Clifford generator is an invertible odd commutant element",
                    odd_ok && sq_ok && commutes,
                    format!("odd = {odd_ok}, squares to 1 = {sq_ok}, supercommutes = {commutes}"),
                );
            }
        }
        rep.push(
            "eigenspace-sum",
            "eigenspace dimensions sum to dim W",
            total == wspace.dim(),
            format!("{total} vs {}", wspace.dim()),
        );

        // (c) character-degree bookkeeping: the extracted degree column,
        // weighted by the basis prefactors evaluated at all-ones, reproduces
        // the eigenspace dimension (odd rank carries one extra √2).
        let table = bprime_char_table(k as u32)?;
        let deg_col = table.degree_column();
        let mut char_side = Cyclo8::zero();
        let mut support_ok = true;
        for (i, row) in table.rows.iter().enumerate() {
            let fits = row.first.len() <= n0 && row.second.len() <= n1;
            if fits && deg_col[i].real_sign() != Some(1) {
                support_ok = false;
            }
            if !fits {
                continue;
            }
            let cd = class_maps(row)?;
            let scale = Cyclo8::sqrt2_pow(-((row.total_len() + cd.eps as usize) as i64));
            let qx = schur_q(&row.first, Bank::X, n0, n1)?
                .specialize(&vec![Cyclo8::one(); n0], &vec![Cyclo8::one(); n1])?;
            let qy = schur_q(&row.second, Bank::Y, n0, n1)?
                .specialize(&vec![Cyclo8::one(); n0], &vec![Cyclo8::one(); n1])?;
            char_side += &(&(&deg_col[i] * &scale) * &(&qx * &qy));
        }
        if k % 2 == 1 {
            char_side = &char_side * &Cyclo8::sqrt2();
        }
        rep.push(
            "degree-bookkeeping",
            "extracted degrees with basis prefactors at all-ones give the eigenspace dimension",
            char_side == Cyclo8::from_int(expected_dim as i64),
            format!("character side = {char_side}, eigenspace dim = {expected_dim}"),
        );
        rep.push(
            "occurrence-support",
            "every module label fitting the block bounds has a positive extracted degree",
            support_ok,
            if support_ok { "exact".to_string() } else { "a fitting label has non-positive degree".to_string() },
        );
    }

    // (d) slotwise block-shape membership for the superalgebra action,
    // including sampled products.
    if k <= 3 {
        let mut ok = true;
        for (_, x) in &theta_images {
            if !in_slotwise_block_shape(&x.mat, k, n0, n1) {
                ok = false;
            }
        }
        let mut sampled = Vec::new();
        if theta_images.len() >= 2 {
            sampled.push(theta_images[0].1.mat.mul(&theta_images[1].1.mat)?);
        }
        if theta_images.len() >= 4 {
            sampled.push(
                theta_images[2]
                    .1
                    .mat
                    .mul(&theta_images[3].1.mat)?
                    .mul(&theta_images[0].1.mat)?,
            );
        }
        for m in &sampled {
            if !in_slotwise_block_shape(m, k, n0, n1) {
                ok = false;
            }
        }
        rep.push(
            "slotwise-block-shape",
            "superalgebra images and sampled products stay in the slotwise block-shape subspace",
            ok,
            if ok { "exact".to_string() } else { "membership violated".to_string() },
        );
    }

    Ok(rep)
}

/// The one-block analogue: the tensor action of the Clifford-extended
/// symmetric-group algebra against the full (unsplit) superalgebra.
pub fn sergeev_report(k: usize, n0: usize, n1: usize) -> Result<SuiteReport, QdError> {
    let mut rep = SuiteReport::new("sergeev", k as u32, n0, n1);
    let imgs = PsiImages::build(k, n0, n1)?;
    let degs = imgs.wspace().degs();
    let v = VSpace::new(n0, n1);
    let n = v.n();

    let theta_images: Vec<(String, GradedOperator)> = qn_full_basis(n)
        .into_iter()
        .map(|b| Ok((b.label(), theta_generator(&b.realize(&v), k, n0, n1)?)))
        .collect::<Result<_, QdError>>()?;

    let mut all_commute = true;
    for (_, x) in &theta_images {
        for g in imgs.bk_generators() {
            if !supercommutator(x, g)?.is_zero() {
                all_commute = false;
            }
        }
    }
    rep.push(
        "supercommutation",
        "the full superalgebra action supercommutes with the Clifford and transposition images",
        all_commute,
        if all_commute { "exact".to_string() } else { "violated".to_string() },
    );

    let bk: Vec<GradedOperator> = imgs.bk_generators().into_iter().cloned().collect();
    let (comm_even, comm_odd) = supercommutant(&bk, &degs)?;
    let theta_mats: Vec<FMatrix> = theta_images.iter().map(|(_, x)| x.mat.clone()).collect();
    let span = algebra_span(&theta_mats)?;
    rep.push(
        "centralizer-dim[W]",
        "dim supercommutant(Clifford-extended action) = dim span(full superalgebra action)",
        comm_even.len() + comm_odd.len() == span.len(),
        format!(
            "{} vs span dim = {}",
            fmt_dim(comm_even.len(), comm_odd.len()),
            span.len()
        ),
    );

    // Character positivity at all-ones.
    let mut positive = true;
    let mut witness = String::from("all positive");
    for lambda in crate::combinatorics::enum_strict(k as u32) {
        if lambda.len() > n {
            continue;
        }
        let ch = crate::characters::sergeev_character(&lambda, n)?;
        let val = ch.specialize(&vec![Cyclo8::one(); n], &[])?;
        let (a, b) = match val.real_sqrt2_parts() {
            Some(parts) => parts,
            None => {
                positive = false;
                witness = format!("{lambda:?}: value {val} leaves Q(√2)");
                break;
            }
        };
        let integral = a.denom() == &num::BigInt::from(1) && b.denom() == &num::BigInt::from(1);
        if !integral || val.real_sign() != Some(1) {
            positive = false;
            witness = format!("{lambda:?}: value {val}");
            break;
        }
    }
    rep.push(
        "dimension-positivity",
        "each occurring module's character at all-ones is a positive element of Z[√2]",
        positive,
        witness,
    );

    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superrep::ops::{build_q, tensor_operator};

    #[test]
    fn duality_k2_passes() {
        let rep = duality_report(2, 1, 1).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.failures());
    }

    #[test]
    fn sergeev_k2_passes() {
        let rep = sergeev_report(2, 1, 1).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.failures());
    }

    #[test]
    fn block_shape_test_accepts_q_tensors_and_rejects_others() {
        let (k, n0, n1) = (2usize, 1usize, 1usize);
        let v = VSpace::new(n0, n1);
        // Q ⊗ Q is slotwise block-shaped.
        let q = build_q(&v);
        let qq = tensor_operator(&[q.clone(), q], k, n0, n1).unwrap();
        assert!(in_slotwise_block_shape(&qq, k, n0, n1));
        // A single matrix unit at a block-breaking position is not.
        let mut e = FMatrix::zeros(4, 4);
        e.set(0, 0, Cyclo8::one());
        let eg = GradedOperator::classify(e, &v.degs());
        let ee = tensor_operator(&[eg.clone(), eg], k, n0, n1).unwrap();
        assert!(!in_slotwise_block_shape(&ee, k, n0, n1));
    }
}
