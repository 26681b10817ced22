//! Explicit operator construction on V and W: the P and Q matrices, the
//! tensor-space representation of the Clifford/group generators, the
//! superalgebra action, slotwise tensor operators, and diagonal torus actions.

use crate::combinatorics::GenWord;
use crate::field::{Cyclo8, FMatrix};
use crate::QdError;

use super::space::{VSpace, WSpace};

/// Homogeneity of an operator on a graded space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpDegree {
    Even,
    Odd,
    Mixed,
}

impl OpDegree {
    pub fn parity(self) -> Option<u8> {
        match self {
            OpDegree::Even => Some(0),
            OpDegree::Odd => Some(1),
            OpDegree::Mixed => None,
        }
    }
}

/// A matrix on a graded space together with its homogeneity, computed from
/// the zero-block pattern: degree-0 operators preserve the grading blocks,
/// degree-1 operators swap them.
#[derive(Clone, Debug)]
pub struct GradedOperator {
    pub mat: FMatrix,
    pub degree: OpDegree,
}

impl GradedOperator {
    /// Classify by inspecting nonzero entries against the index degrees.
    pub fn classify(mat: FMatrix, degs: &[u8]) -> Self {
        let mut seen0 = false;
        let mut seen1 = false;
        for r in 0..mat.rows() {
            for c in 0..mat.cols() {
                if mat.get(r, c).is_zero() {
                    continue;
                }
                if degs[r] == degs[c] {
                    seen0 = true;
                } else {
                    seen1 = true;
                }
            }
        }
        let degree = match (seen0, seen1) {
            (true, true) => OpDegree::Mixed,
            (false, true) => OpDegree::Odd,
            // The zero matrix counts as even.
            _ => OpDegree::Even,
        };
        GradedOperator { mat, degree }
    }
}

/// The odd involution P = [[0, −i·I_n], [i·I_n, 0]] on V.
pub fn build_p(v: &VSpace) -> GradedOperator {
    let n = v.n();
    let mut m = FMatrix::zeros(2 * n, 2 * n);
    let i = Cyclo8::i();
    for j in 0..n {
        m.set(n + j, j, i.clone());
        m.set(j, n + j, -&i);
    }
    GradedOperator::classify(m, &v.degs())
}

/// The even involution Q = diag(I_n0, −I_n1, I_n0, −I_n1) on V.
pub fn build_q(v: &VSpace) -> GradedOperator {
    let n = v.n();
    let mut m = FMatrix::zeros(2 * n, 2 * n);
    for j in 0..2 * n {
        let sign = if (j % n) < v.n0 { Cyclo8::one() } else { -Cyclo8::one() };
        m.set(j, j, sign);
    }
    GradedOperator::classify(m, &v.degs())
}

pub fn build_p_q(n0: usize, n1: usize) -> (GradedOperator, GradedOperator) {
    let v = VSpace::new(n0, n1);
    (build_p(&v), build_q(&v))
}

/// Image of a V-basis index under P: (new index, coefficient).
fn p_image(v: &VSpace, s: usize) -> (usize, Cyclo8) {
    let n = v.n();
    if s < n {
        (s + n, Cyclo8::i())
    } else {
        (s - n, -Cyclo8::i())
    }
}

/// Diagonal Q value at a V-basis index.
fn q_value(v: &VSpace, s: usize) -> Cyclo8 {
    if (s % v.n()) < v.n0 {
        Cyclo8::one()
    } else {
        -Cyclo8::one()
    }
}

/// Generators whose tensor-space images the representation provides.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PsiGen {
    /// ξ_i ⊗ 1 (1-based slot): P at slot i with the sign of the preceding
    /// slot degrees.
    Xi(usize),
    /// 1 ⊗ τ': Q at the first slot, no sign.
    TauPrime,
    /// 1 ⊗ γ_j, realized as (i/√2)(Ψ(ξ_j) − Ψ(ξ_{j+1}))·Ψ(θ(σ_j)).
    ///
    /// The i (rather than 1) is forced: with the pinned Clifford and swap
    /// matrices, the 1/√2 normalization squares to −1 while γ_j² = 1 is a
    /// defining relation. The i also makes every γ image real.
    Gamma(usize),
    /// θ(τ): P at the first slot, no sign.
    ThetaTau,
    /// θ(σ_i): signed slot transposition.
    ThetaSigma(usize),
}

/// Tensor-space image of one generator.
pub fn psi_generator(gen: PsiGen, k: usize, n0: usize, n1: usize) -> Result<GradedOperator, QdError> {
    let v = VSpace::new(n0, n1);
    let w = WSpace::new(v, k);
    let dim = w.dim();
    let check_slot = |i: usize, max: usize, what: &str| -> Result<(), QdError> {
        if i < 1 || i > max {
            return Err(QdError::InvalidInput(format!("{what} index {i} out of range 1..={max}")));
        }
        Ok(())
    };
    let mat = match gen {
        PsiGen::Xi(i) => {
            check_slot(i, k, "xi")?;
            let mut m = FMatrix::zeros(dim, dim);
            for col in 0..dim {
                let slots = w.decode(col);
                let prefix: usize = slots[..i - 1].iter().map(|&s| v.deg(s) as usize).sum();
                let (new_s, coeff) = p_image(&v, slots[i - 1]);
                let mut out = slots.clone();
                out[i - 1] = new_s;
                let val = if prefix % 2 == 1 { -&coeff } else { coeff };
                m.set(w.encode(&out), col, val);
            }
            m
        }
        PsiGen::TauPrime => {
            let mut m = FMatrix::zeros(dim, dim);
            for col in 0..dim {
                let slots = w.decode(col);
                m.set(col, col, q_value(&v, slots[0]));
            }
            m
        }
        PsiGen::ThetaTau => {
            let mut m = FMatrix::zeros(dim, dim);
            for col in 0..dim {
                let slots = w.decode(col);
                let (new_s, coeff) = p_image(&v, slots[0]);
                let mut out = slots.clone();
                out[0] = new_s;
                m.set(w.encode(&out), col, coeff);
            }
            m
        }
        PsiGen::ThetaSigma(i) => {
            check_slot(i, k.saturating_sub(1), "theta_sigma")?;
            let mut m = FMatrix::zeros(dim, dim);
            for col in 0..dim {
                let slots = w.decode(col);
                let (a, b) = (slots[i - 1], slots[i]);
                let mut out = slots.clone();
                out.swap(i - 1, i);
                let sign = v.deg(a) & v.deg(b);
                let val = if sign == 1 { -Cyclo8::one() } else { Cyclo8::one() };
                m.set(w.encode(&out), col, val);
            }
            m
        }
        PsiGen::Gamma(j) => {
            check_slot(j, k.saturating_sub(1), "gamma")?;
            let xi_j = psi_generator(PsiGen::Xi(j), k, n0, n1)?.mat;
            let xi_j1 = psi_generator(PsiGen::Xi(j + 1), k, n0, n1)?.mat;
            let sigma = psi_generator(PsiGen::ThetaSigma(j), k, n0, n1)?.mat;
            let diff = xi_j.sub(&xi_j1)?;
            let scale = &Cyclo8::i() * &Cyclo8::sqrt2_pow(-1);
            diff.mul(&sigma)?.scale(&scale)
        }
    };
    Ok(GradedOperator::classify(mat, &w.degs()))
}

/// Ψ(ζ_i ⊗ 1) with ζ_i = √−1·ξ_(2i−1)·ξ_(2i); a commuting even involution.
pub fn psi_zeta(i: usize, k: usize, n0: usize, n1: usize) -> Result<GradedOperator, QdError> {
    if i < 1 || 2 * i > k {
        return Err(QdError::InvalidInput(format!("zeta index {i} out of range for k={k}")));
    }
    let a = psi_generator(PsiGen::Xi(2 * i - 1), k, n0, n1)?.mat;
    let b = psi_generator(PsiGen::Xi(2 * i), k, n0, n1)?.mat;
    let w = WSpace::new(VSpace::new(n0, n1), k);
    Ok(GradedOperator::classify(a.mul(&b)?.scale(&Cyclo8::i()), &w.degs()))
}

/// Ψ(1 ⊗ τ'_i) via the conjugation word γ_(i−1)…γ_1 τ' γ_1…γ_(i−1).
pub fn psi_tau_prime_i(i: usize, k: usize, n0: usize, n1: usize) -> Result<GradedOperator, QdError> {
    if i < 1 || i > k {
        return Err(QdError::InvalidInput(format!("tau'_{i} out of range for k={k}")));
    }
    let w = WSpace::new(VSpace::new(n0, n1), k);
    let mut acc = FMatrix::identity(w.dim());
    for j in (1..i).rev() {
        acc = acc.mul(&psi_generator(PsiGen::Gamma(j), k, n0, n1)?.mat)?;
    }
    acc = acc.mul(&psi_generator(PsiGen::TauPrime, k, n0, n1)?.mat)?;
    for j in 1..i {
        acc = acc.mul(&psi_generator(PsiGen::Gamma(j), k, n0, n1)?.mat)?;
    }
    Ok(GradedOperator::classify(acc, &w.degs()))
}

/// Leibniz action with the Koszul sign: X acting in each slot in turn,
/// with (−1)^(deg X · (deg v_1 + … + deg v_(j−1))) on slot j.
pub fn theta_generator(x: &GradedOperator, k: usize, n0: usize, n1: usize) -> Result<GradedOperator, QdError> {
    let v = VSpace::new(n0, n1);
    let w = WSpace::new(v, k);
    let deg_x = x
        .degree
        .parity()
        .ok_or_else(|| QdError::InvalidInput("theta needs a homogeneous V-operator".into()))?;
    if x.mat.rows() != v.dim() || x.mat.cols() != v.dim() {
        return Err(QdError::DimensionMismatch(format!(
            "theta: V-operator is {}x{}, V has dim {}",
            x.mat.rows(),
            x.mat.cols(),
            v.dim()
        )));
    }
    // Column-sparse view of X.
    let mut x_cols: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); v.dim()];
    for c in 0..v.dim() {
        for r in 0..v.dim() {
            let val = x.mat.get(r, c);
            if !val.is_zero() {
                x_cols[c].push((r, val.clone()));
            }
        }
    }
    let dim = w.dim();
    let mut m = FMatrix::zeros(dim, dim);
    for col in 0..dim {
        let slots = w.decode(col);
        let mut prefix = 0usize;
        for j in 0..k {
            for (r, val) in &x_cols[slots[j]] {
                let mut out = slots.clone();
                out[j] = *r;
                let signed = if deg_x == 1 && prefix % 2 == 1 { -val } else { val.clone() };
                m.add_to(w.encode(&out), col, &signed);
            }
            prefix += v.deg(slots[j]) as usize;
        }
    }
    Ok(GradedOperator::classify(m, &w.degs()))
}

/// Where a basis element of the block superalgebra lives.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QnBasisElement {
    /// 0 for the first diagonal block (size n0), 1 for the second (size n1),
    /// None for the full algebra without a split.
    pub component: Option<u8>,
    /// Even elements sit in the repeated diagonal block pair (A, A);
    /// odd elements in the anti-diagonal pair (B, B).
    pub odd: bool,
    pub row: usize,
    pub col: usize,
}

impl QnBasisElement {
    pub fn label(&self) -> String {
        let kind = if self.odd { "B" } else { "A" };
        match self.component {
            Some(c) => format!("q{}[{}{},{}]", c, kind, self.row + 1, self.col + 1),
            None => format!("q[{}{},{}]", kind, self.row + 1, self.col + 1),
        }
    }

    /// Realize as a 2n×2n matrix of the shape [[A, B], [B, A]].
    pub fn realize(&self, v: &VSpace) -> GradedOperator {
        let n = v.n();
        let offset = match self.component {
            Some(0) => 0,
            Some(_) => v.n0,
            None => 0,
        };
        let (r, c) = (offset + self.row, offset + self.col);
        let mut m = FMatrix::zeros(2 * n, 2 * n);
        if self.odd {
            m.set(r, n + c, Cyclo8::one());
            m.set(n + r, c, Cyclo8::one());
        } else {
            m.set(r, c, Cyclo8::one());
            m.set(n + r, n + c, Cyclo8::one());
        }
        GradedOperator::classify(m, &v.degs())
    }
}

/// Basis of the embedded block pair: for each component, all even matrix
/// positions then all odd ones, rows before columns. The embedding sends
/// ([[A,B],[B,A]], [[C,D],[D,C]]) to [[A⊕C, B⊕D], [B⊕D, A⊕C]].
pub fn qn_pair_basis(n0: usize, n1: usize) -> Vec<QnBasisElement> {
    let mut out = Vec::new();
    for (component, size) in [(0u8, n0), (1u8, n1)] {
        for odd in [false, true] {
            for row in 0..size {
                for col in 0..size {
                    out.push(QnBasisElement { component: Some(component), odd, row, col });
                }
            }
        }
    }
    out
}

/// Basis of the full (unsplit) block superalgebra on V.
pub fn qn_full_basis(n: usize) -> Vec<QnBasisElement> {
    let mut out = Vec::new();
    for odd in [false, true] {
        for row in 0..n {
            for col in 0..n {
                out.push(QnBasisElement { component: None, odd, row, col });
            }
        }
    }
    out
}

/// Slotwise tensor operator X_1 ⊗ … ⊗ X_k on W with the Koszul identification:
/// entries carry (−1)^(Σ_j deg X_j · (deg a_1 + … + deg a_(j−1))) on input
/// degrees. All slots must be homogeneous.
pub fn tensor_operator(slots: &[GradedOperator], k: usize, n0: usize, n1: usize) -> Result<FMatrix, QdError> {
    if slots.len() != k {
        return Err(QdError::DimensionMismatch(format!("{} slots for k={k}", slots.len())));
    }
    let v = VSpace::new(n0, n1);
    let w = WSpace::new(v, k);
    let mut slot_degs = Vec::with_capacity(k);
    let mut slot_cols: Vec<Vec<Vec<(usize, Cyclo8)>>> = Vec::with_capacity(k);
    for x in slots {
        let d = x
            .degree
            .parity()
            .ok_or_else(|| QdError::InvalidInput("tensor_operator needs homogeneous slots".into()))?;
        slot_degs.push(d);
        let mut cols: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); v.dim()];
        for c in 0..v.dim() {
            for r in 0..v.dim() {
                let val = x.mat.get(r, c);
                if !val.is_zero() {
                    cols[c].push((r, val.clone()));
                }
            }
        }
        slot_cols.push(cols);
    }
    let dim = w.dim();
    let mut m = FMatrix::zeros(dim, dim);
    for col in 0..dim {
        let in_slots = w.decode(col);
        // Koszul sign from input degrees, accumulated left to right.
        let mut sign = 0u8;
        let mut prefix = 0u8;
        for j in 0..k {
            sign ^= slot_degs[j] & prefix;
            prefix ^= v.deg(in_slots[j]);
        }
        // Expand the product of slot images.
        let mut partial: Vec<(Vec<usize>, Cyclo8)> = vec![(Vec::with_capacity(k), Cyclo8::one())];
        for j in 0..k {
            let mut next = Vec::with_capacity(partial.len() * slot_cols[j][in_slots[j]].len());
            for (prefix_slots, coeff) in &partial {
                for (r, val) in &slot_cols[j][in_slots[j]] {
                    let mut ns = prefix_slots.clone();
                    ns.push(*r);
                    next.push((ns, coeff * val));
                }
            }
            partial = next;
        }
        for (out_slots, coeff) in partial {
            let signed = if sign == 1 { -&coeff } else { coeff };
            m.add_to(w.encode(&out_slots), col, &signed);
        }
    }
    Ok(m)
}

/// Diagonal slotwise action of E = diag(x-values, y-values) on W: the even
/// operator acting as diag(x, y, x, y) in each slot, Koszul-sign-free.
pub fn diag_action(xs: &[Cyclo8], ys: &[Cyclo8], k: usize) -> Result<FMatrix, QdError> {
    let v = VSpace::new(xs.len(), ys.len());
    let w = WSpace::new(v, k);
    let mut t: Vec<Cyclo8> = Vec::with_capacity(v.dim());
    t.extend(xs.iter().cloned());
    t.extend(ys.iter().cloned());
    t.extend(xs.iter().cloned());
    t.extend(ys.iter().cloned());
    let dim = w.dim();
    let mut m = FMatrix::zeros(dim, dim);
    for col in 0..dim {
        let slots = w.decode(col);
        let mut val = Cyclo8::one();
        for &s in &slots {
            val = &val * &t[s];
        }
        m.set(col, col, val);
    }
    Ok(m)
}

/// Evaluate a group word under the representation: the product of the
/// expanded letters' images, times the word's sign.
pub fn eval_word(word: &GenWord, k: usize, n0: usize, n1: usize) -> Result<FMatrix, QdError> {
    let w = WSpace::new(VSpace::new(n0, n1), k);
    let mut acc = FMatrix::identity(w.dim());
    for letter in word.expand() {
        let m = match letter {
            crate::combinatorics::PrimLetter::Tau => psi_generator(PsiGen::TauPrime, k, n0, n1)?,
            crate::combinatorics::PrimLetter::Gamma(j) => psi_generator(PsiGen::Gamma(j), k, n0, n1)?,
        };
        acc = acc.mul(&m.mat)?;
    }
    if word.sign < 0 {
        acc = acc.neg();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{BiPartition, Partition};

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn p_and_q_shape_and_relations() {
        let (p, q) = build_p_q(1, 1);
        assert_eq!(p.degree, OpDegree::Odd);
        assert_eq!(q.degree, OpDegree::Even);
        // P² = Q² = I and [P, Q] = 0.
        let id = FMatrix::identity(4);
        assert_eq!(p.mat.pow(2).unwrap(), id);
        assert_eq!(q.mat.pow(2).unwrap(), id);
        assert_eq!(p.mat.mul(&q.mat).unwrap(), q.mat.mul(&p.mat).unwrap());
        // Q = diag(1, −1, 1, −1) at n0 = n1 = 1.
        let mut expected = FMatrix::zeros(4, 4);
        for (j, s) in [1i64, -1, 1, -1].iter().enumerate() {
            expected.set(j, j, c(*s));
        }
        assert_eq!(q.mat, expected);
        // P has the ±i antidiagonal blocks.
        assert_eq!(p.mat.get(2, 0), &Cyclo8::i());
        assert_eq!(p.mat.get(0, 2), &(-Cyclo8::i()));
    }

    #[test]
    fn tau_prime_at_k1_is_q() {
        let op = psi_generator(PsiGen::TauPrime, 1, 1, 1).unwrap();
        let (_, q) = build_p_q(1, 1);
        assert_eq!(op.mat, q.mat);
        assert_eq!(op.degree, OpDegree::Even);
    }

    #[test]
    fn sigma_swaps_with_koszul_sign() {
        // On e_a ⊗ e_b with both odd, the swap picks up −1.
        let k = 2;
        let op = psi_generator(PsiGen::ThetaSigma(1), k, 1, 1).unwrap();
        let w = WSpace::new(VSpace::new(1, 1), k);
        let col = w.encode(&[2, 3]);
        let row = w.encode(&[3, 2]);
        assert_eq!(op.mat.get(row, col), &c(-1));
        // With the first even, no sign.
        let col2 = w.encode(&[0, 3]);
        let row2 = w.encode(&[3, 0]);
        assert_eq!(op.mat.get(row2, col2), &c(1));
        assert_eq!(op.degree, OpDegree::Even);
    }

    #[test]
    fn gamma_squares_to_identity() {
        for k in 2..=3usize {
            for j in 1..k {
                let g = psi_generator(PsiGen::Gamma(j), k, 1, 1).unwrap();
                assert_eq!(g.mat.pow(2).unwrap(), FMatrix::identity(g.mat.rows()), "k={k} j={j}");
                assert_eq!(g.degree, OpDegree::Odd);
            }
        }
    }

    #[test]
    fn generator_degrees_match_grading() {
        let k = 3;
        for (gen, want) in [
            (PsiGen::Xi(1), OpDegree::Odd),
            (PsiGen::Xi(3), OpDegree::Odd),
            (PsiGen::TauPrime, OpDegree::Even),
            (PsiGen::Gamma(2), OpDegree::Odd),
            (PsiGen::ThetaTau, OpDegree::Odd),
            (PsiGen::ThetaSigma(1), OpDegree::Even),
        ] {
            let op = psi_generator(gen, k, 1, 1).unwrap();
            assert_eq!(op.degree, want, "{gen:?}");
        }
    }

    #[test]
    fn zeta_involutions_commute() {
        let k = 4;
        let z1 = psi_zeta(1, k, 1, 1).unwrap();
        let z2 = psi_zeta(2, k, 1, 1).unwrap();
        let id = FMatrix::identity(z1.mat.rows());
        assert_eq!(z1.mat.pow(2).unwrap(), id);
        assert_eq!(z2.mat.pow(2).unwrap(), id);
        assert_eq!(
            z1.mat.mul(&z2.mat).unwrap(),
            z2.mat.mul(&z1.mat).unwrap()
        );
        assert_eq!(z1.degree, OpDegree::Even);
        assert_eq!(z2.degree, OpDegree::Even);
    }

    #[test]
    fn tau_prime_i_is_q_at_slot_i() {
        // The conjugation word moves the diagonal action to slot i.
        let k = 3;
        let v = VSpace::new(1, 2);
        let w = WSpace::new(v, k);
        for i in 1..=k {
            let op = psi_tau_prime_i(i, k, 1, 2).unwrap();
            let mut expected = FMatrix::zeros(w.dim(), w.dim());
            for col in 0..w.dim() {
                let slots = w.decode(col);
                expected.set(col, col, q_value(&v, slots[i - 1]));
            }
            assert_eq!(op.mat, expected, "i={i}");
        }
    }

    #[test]
    fn theta_at_k1_is_the_matrix_itself() {
        let v = VSpace::new(1, 1);
        let basis = qn_pair_basis(1, 1);
        for b in &basis {
            let x = b.realize(&v);
            let th = theta_generator(&x, 1, 1, 1).unwrap();
            assert_eq!(th.mat, x.mat, "{}", b.label());
        }
    }

    #[test]
    fn theta_of_identity_is_k_times_identity() {
        // The even identity of the block pair acts by Leibniz as k·Id.
        let v = VSpace::new(1, 1);
        let mut id_even = FMatrix::zeros(4, 4);
        for j in 0..4 {
            id_even.set(j, j, c(1));
        }
        let x = GradedOperator::classify(id_even, &v.degs());
        let th = theta_generator(&x, 2, 1, 1).unwrap();
        assert_eq!(th.mat, FMatrix::identity(16).scale(&c(2)));
    }

    #[test]
    fn theta_odd_element_block_structure() {
        // k=2, odd X: Θ(X) must be homogeneous of odd degree.
        let v = VSpace::new(1, 1);
        let b = QnBasisElement { component: Some(0), odd: true, row: 0, col: 0 };
        let th = theta_generator(&b.realize(&v), 2, 1, 1).unwrap();
        assert_eq!(th.degree, OpDegree::Odd);
    }

    #[test]
    fn embedded_basis_lands_in_block_shape() {
        // Every embedded element has the [[A,B],[B,A]] shape on V.
        let v = VSpace::new(1, 2);
        let n = v.n();
        for b in qn_pair_basis(1, 2) {
            let m = b.realize(&v).mat;
            for r in 0..n {
                for cc in 0..n {
                    assert_eq!(m.get(r, cc), m.get(n + r, n + cc), "{} A-blocks", b.label());
                    assert_eq!(m.get(r, n + cc), m.get(n + r, cc), "{} B-blocks", b.label());
                }
            }
        }
    }

    #[test]
    fn identity_word_evaluates_to_identity() {
        let w = GenWord::identity();
        let m = eval_word(&w, 2, 1, 1).unwrap();
        assert_eq!(m, FMatrix::identity(16));
    }

    #[test]
    fn word_evaluation_is_association_independent() {
        // Evaluating letter-by-letter equals evaluating grouped halves.
        let pair = BiPartition::new(
            Partition::new(vec![3]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        );
        let word = crate::combinatorics::build_word(&pair, 4).unwrap();
        let full = eval_word(&word, 4, 1, 1).unwrap();
        let letters = word.expand();
        let (first, second) = letters.split_at(letters.len() / 2);
        let eval_part = |ls: &[crate::combinatorics::PrimLetter]| -> FMatrix {
            let mut acc = FMatrix::identity(full.rows());
            for l in ls {
                let m = match l {
                    crate::combinatorics::PrimLetter::Tau => {
                        psi_generator(PsiGen::TauPrime, 4, 1, 1).unwrap().mat
                    }
                    crate::combinatorics::PrimLetter::Gamma(j) => {
                        psi_generator(PsiGen::Gamma(*j), 4, 1, 1).unwrap().mat
                    }
                };
                acc = acc.mul(&m).unwrap();
            }
            acc
        };
        let grouped = eval_part(first).mul(&eval_part(second)).unwrap();
        assert_eq!(full, grouped);
    }

    #[test]
    fn diag_action_trace_is_power_sum_product() {
        // tr(E-action on W) = (p_1(x,y) evaluated)·…  — for k slots the trace
        // is (Σ 2t_i)^k at the chosen values... directly: Π over slots of the
        // per-slot trace, each slot contributing 2(Σx + Σy).
        let xs = [c(2)];
        let ys = [c(3)];
        let m = diag_action(&xs, &ys, 2).unwrap();
        // Per-slot trace: 2 + 3 + 2 + 3 = 10, so W-trace = 100.
        assert_eq!(m.trace().unwrap(), c(100));
    }
}
