//! Relation verification, the S/T averaging operators, and graded traces.

use crate::combinatorics::GenWord;
use crate::field::{Cyclo8, FMatrix};
use crate::report::SuiteReport;
use crate::QdError;

use super::ops::{
    diag_action, eval_word, psi_generator, psi_tau_prime_i, psi_zeta, GradedOperator, OpDegree,
    PsiGen,
};
use super::space::{VSpace, WSpace};

/// Cached generator images for one parameter triple.
pub struct PsiImages {
    pub k: usize,
    pub n0: usize,
    pub n1: usize,
    pub xi: Vec<GradedOperator>,
    pub tau_prime: GradedOperator,
    pub gamma: Vec<GradedOperator>,
    pub theta_tau: GradedOperator,
    pub theta_sigma: Vec<GradedOperator>,
}

impl PsiImages {
    pub fn build(k: usize, n0: usize, n1: usize) -> Result<Self, QdError> {
        let xi = (1..=k)
            .map(|i| psi_generator(PsiGen::Xi(i), k, n0, n1))
            .collect::<Result<Vec<_>, _>>()?;
        let gamma = (1..k)
            .map(|j| psi_generator(PsiGen::Gamma(j), k, n0, n1))
            .collect::<Result<Vec<_>, _>>()?;
        let theta_sigma = (1..k)
            .map(|j| psi_generator(PsiGen::ThetaSigma(j), k, n0, n1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PsiImages {
            k,
            n0,
            n1,
            xi,
            tau_prime: psi_generator(PsiGen::TauPrime, k, n0, n1)?,
            gamma,
            theta_tau: psi_generator(PsiGen::ThetaTau, k, n0, n1)?,
            theta_sigma,
        })
    }

    pub fn wspace(&self) -> WSpace {
        WSpace::new(VSpace::new(self.n0, self.n1), self.k)
    }

    /// Generators of the full twisted product algebra image: the Clifford
    /// images, the diagonal involution, and the transposition images.
    pub fn bhat_generators(&self) -> Vec<&GradedOperator> {
        let mut v: Vec<&GradedOperator> = self.xi.iter().collect();
        v.push(&self.tau_prime);
        v.extend(self.theta_sigma.iter());
        v
    }

    /// Generators of the group-algebra image: τ' and the γ_j.
    pub fn bprime_generators(&self) -> Vec<&GradedOperator> {
        let mut v: Vec<&GradedOperator> = vec![&self.tau_prime];
        v.extend(self.gamma.iter());
        v
    }

    /// Generators of the Clifford-extended symmetric-group image.
    pub fn bk_generators(&self) -> Vec<&GradedOperator> {
        let mut v: Vec<&GradedOperator> = self.xi.iter().collect();
        v.extend(self.theta_sigma.iter());
        v
    }

    /// All generator images (for supercommutation sweeps).
    pub fn all_generators(&self) -> Vec<&GradedOperator> {
        let mut v: Vec<&GradedOperator> = self.xi.iter().collect();
        v.push(&self.tau_prime);
        v.extend(self.gamma.iter());
        v.push(&self.theta_tau);
        v.extend(self.theta_sigma.iter());
        v
    }
}

fn push_matrix_eq(
    report: &mut SuiteReport,
    name: String,
    law: String,
    lhs: &FMatrix,
    rhs: &FMatrix,
) {
    let pass = lhs == rhs;
    let witness = if pass {
        "exact".to_string()
    } else {
        let diff = lhs.sub(rhs).map(|d| d.nnz()).unwrap_or(usize::MAX);
        format!("violated ({diff} differing entries)")
    };
    report.push(name, law, pass, witness);
}

/// Verify, as exact matrix identities, the defining relations of the twisted
/// group algebra (on τ', γ images), of the Clifford algebra (on ξ images), of
/// the second presentation (on θ-images), and the embedding consistency
/// θ(σ_j) = (1/√2)(ξ_j − ξ_(j+1))·γ_j.
pub fn verify_relations(k: usize, n0: usize, n1: usize) -> Result<SuiteReport, QdError> {
    let imgs = PsiImages::build(k, n0, n1)?;
    let dim = imgs.wspace().dim();
    let id = FMatrix::identity(dim);
    let neg_id = id.neg();
    let mut rep = SuiteReport::new("relations", k as u32, n0, n1);

    // Grading of every generator image.
    for (name, op, want) in [("tau'", &imgs.tau_prime, OpDegree::Even), ("theta(tau)", &imgs.theta_tau, OpDegree::Odd)] {
        rep.push(
            format!("degree[{name}]"),
            format!("{name} is homogeneous of the declared degree"),
            op.degree == want,
            format!("{:?}", op.degree),
        );
    }
    for (i, x) in imgs.xi.iter().enumerate() {
        rep.push(
            format!("degree[xi{}]", i + 1),
            "xi_i is odd".to_string(),
            x.degree == OpDegree::Odd,
            format!("{:?}", x.degree),
        );
    }
    for (j, g) in imgs.gamma.iter().enumerate() {
        rep.push(
            format!("degree[gamma{}]", j + 1),
            "gamma_j is odd".to_string(),
            g.degree == OpDegree::Odd,
            format!("{:?}", g.degree),
        );
    }
    for (j, s) in imgs.theta_sigma.iter().enumerate() {
        rep.push(
            format!("degree[theta(sigma{})]", j + 1),
            "theta(sigma_j) is even".to_string(),
            s.degree == OpDegree::Even,
            format!("{:?}", s.degree),
        );
    }

    // Group-algebra presentation on τ', γ.
    push_matrix_eq(&mut rep, "tau'^2".into(), "tau'^2 = 1".into(), &imgs.tau_prime.mat.pow(2)?, &id);
    for j in 1..k {
        push_matrix_eq(
            &mut rep,
            format!("gamma{j}^2"),
            "gamma_j^2 = 1".into(),
            &imgs.gamma[j - 1].mat.pow(2)?,
            &id,
        );
    }
    for j in 1..k.saturating_sub(1) {
        let prod = imgs.gamma[j - 1].mat.mul(&imgs.gamma[j].mat)?;
        push_matrix_eq(
            &mut rep,
            format!("braid(gamma{j},gamma{})", j + 1),
            "(gamma_j gamma_(j+1))^3 = 1".into(),
            &prod.pow(3)?,
            &id,
        );
    }
    for i in 1..k {
        for j in (i + 2)..k {
            let prod = imgs.gamma[i - 1].mat.mul(&imgs.gamma[j - 1].mat)?;
            push_matrix_eq(
                &mut rep,
                format!("far(gamma{i},gamma{j})"),
                "(gamma_i gamma_j)^2 = -1 for |i-j| >= 2".into(),
                &prod.pow(2)?,
                &neg_id,
            );
        }
    }
    for i in 2..k {
        let prod = imgs.tau_prime.mat.mul(&imgs.gamma[i - 1].mat)?;
        push_matrix_eq(
            &mut rep,
            format!("(tau' gamma{i})^2"),
            "(tau' gamma_i)^2 = 1 for i >= 2".into(),
            &prod.pow(2)?,
            &id,
        );
    }
    if k >= 2 {
        let prod = imgs.tau_prime.mat.mul(&imgs.gamma[0].mat)?;
        push_matrix_eq(
            &mut rep,
            "(tau' gamma1)^4".into(),
            "(tau' gamma_1)^4 = 1".into(),
            &prod.pow(4)?,
            &id,
        );
    }

    // Clifford relations on ξ.
    for i in 1..=k {
        push_matrix_eq(
            &mut rep,
            format!("xi{i}^2"),
            "xi_i^2 = 1".into(),
            &imgs.xi[i - 1].mat.pow(2)?,
            &id,
        );
    }
    for i in 1..=k {
        for j in (i + 1)..=k {
            let anti = imgs.xi[i - 1]
                .mat
                .mul(&imgs.xi[j - 1].mat)?
                .add(&imgs.xi[j - 1].mat.mul(&imgs.xi[i - 1].mat)?)?;
            rep.push(
                format!("anticommute(xi{i},xi{j})"),
                "xi_i xi_j + xi_j xi_i = 0",
                anti.is_zero(),
                if anti.is_zero() { "exact".to_string() } else { format!("{} nonzero entries", anti.nnz()) },
            );
        }
    }

    // Second presentation on θ-images.
    push_matrix_eq(&mut rep, "theta(tau)^2".into(), "theta(tau)^2 = 1".into(), &imgs.theta_tau.mat.pow(2)?, &id);
    for j in 1..k {
        push_matrix_eq(
            &mut rep,
            format!("theta(sigma{j})^2"),
            "theta(sigma_j)^2 = 1".into(),
            &imgs.theta_sigma[j - 1].mat.pow(2)?,
            &id,
        );
    }
    for j in 1..k.saturating_sub(1) {
        let prod = imgs.theta_sigma[j - 1].mat.mul(&imgs.theta_sigma[j].mat)?;
        push_matrix_eq(
            &mut rep,
            format!("braid(theta(sigma{j}),theta(sigma{}))", j + 1),
            "(theta(sigma_j) theta(sigma_(j+1)))^3 = 1".into(),
            &prod.pow(3)?,
            &id,
        );
    }
    for i in 1..k {
        for j in (i + 2)..k {
            let prod = imgs.theta_sigma[i - 1].mat.mul(&imgs.theta_sigma[j - 1].mat)?;
            push_matrix_eq(
                &mut rep,
                format!("far(theta(sigma{i}),theta(sigma{j}))"),
                "(theta(sigma_i) theta(sigma_j))^2 = 1 for |i-j| >= 2".into(),
                &prod.pow(2)?,
                &id,
            );
        }
    }
    for i in 2..k {
        let prod = imgs.theta_tau.mat.mul(&imgs.theta_sigma[i - 1].mat)?;
        push_matrix_eq(
            &mut rep,
            format!("(theta(tau) theta(sigma{i}))^2"),
            "(theta(tau) theta(sigma_i))^2 = 1 for i >= 2".into(),
            &prod.pow(2)?,
            &id,
        );
    }
    if k >= 2 {
        let prod = imgs.theta_tau.mat.mul(&imgs.theta_sigma[0].mat)?;
        push_matrix_eq(
            &mut rep,
            "(theta(tau) theta(sigma1))^4".into(),
            "(theta(tau) theta(sigma_1))^4 = -1".into(),
            &prod.pow(4)?,
            &neg_id,
        );
    }

    // Embedding consistency: the transposition images and the γ images
    // determine each other through the Clifford difference. The coefficient
    // −i/√2 pairs with the i/√2 in the γ construction; both directions are
    // checked so neither is true by construction alone.
    let minus_i_inv_sqrt2 = -&(&Cyclo8::i() * &Cyclo8::sqrt2_pow(-1));
    for j in 1..k {
        let diff = imgs.xi[j - 1].mat.sub(&imgs.xi[j].mat)?;
        let rhs = diff.mul(&imgs.gamma[j - 1].mat)?.scale(&minus_i_inv_sqrt2);
        push_matrix_eq(
            &mut rep,
            format!("embed(sigma{j})"),
            "theta(sigma_j) = (-i/sqrt2)(xi_j - xi_(j+1))·gamma_j".into(),
            &imgs.theta_sigma[j - 1].mat,
            &rhs,
        );
        let i_inv_sqrt2 = &Cyclo8::i() * &Cyclo8::sqrt2_pow(-1);
        let rhs2 = diff.mul(&imgs.theta_sigma[j - 1].mat)?.scale(&i_inv_sqrt2);
        push_matrix_eq(
            &mut rep,
            format!("embed(gamma{j})"),
            "gamma_j = (i/sqrt2)(xi_j - xi_(j+1))·theta(sigma_j)".into(),
            &imgs.gamma[j - 1].mat,
            &rhs2,
        );
    }
    Ok(rep)
}

/// Enumerate the matrix group generated by involution images by closure.
fn matrix_group(generators: &[&FMatrix], dim: usize) -> Result<Vec<FMatrix>, QdError> {
    let mut elems: Vec<FMatrix> = vec![FMatrix::identity(dim)];
    let mut frontier = vec![FMatrix::identity(dim)];
    while let Some(m) = frontier.pop() {
        for g in generators {
            let prod = g.mul(&m)?;
            if !elems.contains(&prod) {
                elems.push(prod.clone());
                frontier.push(prod);
            }
        }
    }
    Ok(elems)
}

/// The symmetrizing average S(f): mean of g·f·g⁻¹ over the image group of
/// the transposition images (signed permutation matrices, so g⁻¹ = gᵀ).
pub fn averaging_s(f: &FMatrix, k: usize, n0: usize, n1: usize) -> Result<FMatrix, QdError> {
    let imgs = PsiImages::build(k, n0, n1)?;
    let dim = imgs.wspace().dim();
    let gens: Vec<&FMatrix> = imgs.theta_sigma.iter().map(|g| &g.mat).collect();
    let group = matrix_group(&gens, dim)?;
    let mut acc = FMatrix::zeros(dim, dim);
    for g in &group {
        acc = acc.add(&g.mul(f)?.mul(&g.transpose())?)?;
    }
    let scale = Cyclo8::from_rational(crate::field::Rational::new(
        1.into(),
        (group.len() as i64).into(),
    ));
    Ok(acc.scale(&scale))
}

/// The block-averaging T(f): sequential application of (Id + T_i)/2 with
/// T_i(f) = D_i·f·D_i, D_i the slot-i diagonal involution image.
pub fn averaging_t(f: &FMatrix, k: usize, n0: usize, n1: usize) -> Result<FMatrix, QdError> {
    let mut acc = f.clone();
    let half = Cyclo8::from_ratio(1, 2);
    for i in 1..=k {
        let d = psi_tau_prime_i(i, k, n0, n1)?.mat;
        let conj = d.mul(&acc)?.mul(&d)?;
        acc = acc.add(&conj)?.scale(&half);
    }
    Ok(acc)
}

pub fn averaging_operators(
    f: &FMatrix,
    k: usize,
    n0: usize,
    n1: usize,
) -> Result<(FMatrix, FMatrix), QdError> {
    Ok((averaging_s(f, k, n0, n1)?, averaging_t(f, k, n0, n1)?))
}

/// Where to take the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceScope {
    Full,
    /// Sign pattern for the simultaneous eigenspace; length ⌊k/2⌋.
    Epsilon(Vec<u8>),
}

/// Trace of (word image) ∘ (diagonal action of E = diag(xs, ys)), over the
/// full space or one eigenspace via its projector.
pub fn graded_trace(
    word: &GenWord,
    xs: &[Cyclo8],
    ys: &[Cyclo8],
    scope: &TraceScope,
    k: usize,
    n0: usize,
    n1: usize,
) -> Result<Cyclo8, QdError> {
    if xs.len() != n0 || ys.len() != n1 {
        return Err(QdError::DimensionMismatch(format!(
            "E has {}+{} values for blocks ({n0},{n1})",
            xs.len(),
            ys.len()
        )));
    }
    let m = eval_word(word, k, n0, n1)?.mul(&diag_action(xs, ys, k)?)?;
    match scope {
        TraceScope::Full => m.trace(),
        TraceScope::Epsilon(eps) => {
            let r = k / 2;
            if eps.len() != r {
                return Err(QdError::DimensionMismatch(format!(
                    "epsilon has {} bits, expected {r}",
                    eps.len()
                )));
            }
            let dim = m.rows();
            let half = Cyclo8::from_ratio(1, 2);
            let mut proj = FMatrix::identity(dim);
            for (i, &e) in eps.iter().enumerate() {
                let z = psi_zeta(i + 1, k, n0, n1)?.mat;
                let signed = if e == 1 { z.neg() } else { z };
                let factor = FMatrix::identity(dim).add(&signed)?.scale(&half);
                proj = proj.mul(&factor)?;
            }
            proj.mul(&m)?.trace()
        }
    }
}
