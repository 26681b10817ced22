//! Exact linear algebra over Q(ζ₈): fraction-free elimination, joint
//! nullspaces of matrix constraints, and algebra span closure.
//!
//! Rows are cleared to integral form (coefficients in Z[ζ₈]) and updated by
//! cross-multiplication, with a content-gcd division after every update to
//! control coefficient growth. Pivots are chosen first-nonzero in column
//! order, so results are deterministic for deterministic input order.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

use super::cyclo::{Cyclo8, Rational};
use super::matrix::FMatrix;
use crate::QdError;

/// A sparse row/vector: (column, coefficient) pairs, sorted by column,
/// no zero coefficients.
pub type SparseVec = Vec<(usize, Cyclo8)>;

/// Clear denominators and divide by integer content; also flip signs so the
/// leading numerator is positive. Canonical integral form.
fn normalize_row(row: &mut SparseVec) {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return;
    }
    let mut den_lcm = BigInt::one();
    for (_, v) in row.iter() {
        for r in v.coeffs() {
            den_lcm = den_lcm.lcm(r.denom());
        }
    }
    let mut num_gcd = BigInt::zero();
    let scale = Rational::from_integer(den_lcm);
    let mut scaled: Vec<[Rational; 4]> = Vec::with_capacity(row.len());
    for (_, v) in row.iter() {
        let mut c = v.coeffs();
        for r in c.iter_mut() {
            *r *= &scale;
            debug_assert!(r.denom().is_one());
            num_gcd = num_gcd.gcd(r.numer());
        }
        scaled.push(c);
    }
    if num_gcd.is_zero() {
        num_gcd = BigInt::one();
    }
    // Sign convention: leading coefficient's first nonzero rational is positive.
    let lead_sign_neg = scaled[0].iter().find(|r| !r.is_zero()).is_some_and(|r| r.is_negative());
    if lead_sign_neg {
        num_gcd = -num_gcd;
    }
    let div = Rational::from_integer(num_gcd);
    for ((_, v), c) in row.iter_mut().zip(scaled) {
        let reduced = [&c[0] / &div, &c[1] / &div, &c[2] / &div, &c[3] / &div];
        *v = Cyclo8::from_coeffs(reduced);
    }
}

fn sparse_axpy(p: &Cyclo8, row: &SparseVec, r: &Cyclo8, pivot_row: &SparseVec) -> SparseVec {
    // p·row − r·pivot_row, merged by column.
    let mut out: SparseVec = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot_row.len() {
        let next = match (row.get(i), pivot_row.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) => {
                if ci < cj {
                    i += 1;
                    (*ci, p * vi)
                } else if cj < ci {
                    j += 1;
                    (*cj, -&(r * vj))
                } else {
                    let v = &(p * vi) - &(r * vj);
                    i += 1;
                    j += 1;
                    (*ci, v)
                }
            }
            (Some((ci, vi)), None) => {
                i += 1;
                (*ci, p * vi)
            }
            (None, Some((cj, vj))) => {
                j += 1;
                (*cj, -&(r * vj))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Incremental echelon form over Q(ζ₈) with sparse integral rows.
pub struct Eliminator {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Eliminator {
    pub fn new() -> Self {
        Eliminator { pivots: BTreeMap::new() }
    }

    /// Reduce a row against the current pivots (leading-column elimination).
    /// Returns the normalized residual; empty means the row is in the span.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        normalize_row(&mut row);
        while let Some((lead, lead_val)) = row.first().cloned() {
            let Some(pivot_row) = self.pivots.get(&lead) else { break };
            let p = pivot_row[0].1.clone();
            row = sparse_axpy(&p, &row, &lead_val, pivot_row);
            normalize_row(&mut row);
        }
        row
    }

    /// Insert a row; Some(lead column) if it added a new pivot.
    pub fn insert(&mut self, row: SparseVec) -> Option<usize> {
        let reduced = self.reduce(row);
        let lead = reduced.first()?.0;
        self.pivots.insert(lead, reduced);
        Some(lead)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Back-substitute the nullspace basis of the accumulated system.
    /// One basis vector per free column, normalized to leading coefficient 1,
    /// ordered by free column.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let pivot_cols = self.pivot_columns();
        let mut is_pivot = vec![false; ncols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in 0..ncols {
            if is_pivot[f] {
                continue;
            }
            let mut x: BTreeMap<usize, Cyclo8> = BTreeMap::new();
            x.insert(f, Cyclo8::one());
            for &pc in pivot_cols.iter().rev() {
                if pc > f {
                    continue;
                }
                let row = &self.pivots[&pc];
                let mut acc = Cyclo8::zero();
                for (c, v) in row.iter().skip(1) {
                    if let Some(xv) = x.get(c) {
                        acc += &(v * xv);
                    }
                }
                if !acc.is_zero() {
                    let p_inv = row[0].1.inv().expect("pivot coefficient is nonzero");
                    x.insert(pc, -&(&acc * &p_inv));
                }
            }
            let mut vecd: SparseVec = x.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            // Deterministic normalization: leading coefficient 1.
            let lead_inv = vecd[0].1.inv().expect("leading coefficient is nonzero");
            for (_, v) in vecd.iter_mut() {
                *v = &*v * &lead_inv;
            }
            basis.push(vecd);
        }
        basis
    }
}

impl Default for Eliminator {
    fn default() -> Self {
        Self::new()
    }
}

/// Nullspace of the system given by an iterator of sparse rows.
pub fn nullspace_sparse(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut elim = Eliminator::new();
    for row in rows {
        elim.insert(row);
    }
    elim.nullspace(ncols)
}

/// One linear condition on an unknown square matrix F:
/// `op · F − sign · F · op = 0`.
///
/// sign = 1 is plain commutation; sign = −1 is anticommutation; the
/// supercommutant solver feeds (−1)^(deg F · deg op).
#[derive(Clone)]
pub struct OpConstraint {
    pub op: FMatrix,
    pub sign: Cyclo8,
}

impl OpConstraint {
    pub fn commute(op: FMatrix) -> Self {
        OpConstraint { op, sign: Cyclo8::one() }
    }

    pub fn signed(op: FMatrix, sign: Cyclo8) -> Self {
        OpConstraint { op, sign }
    }
}

/// Exact basis of the joint solution space of the constraints, for an
/// unknown n×n matrix. Unknowns are indexed row-major; the basis is the
/// deterministic nullspace basis reshaped into matrices.
pub fn mat_solve(n: usize, constraints: &[OpConstraint]) -> Result<Vec<FMatrix>, QdError> {
    for c in constraints {
        if c.op.rows() != n || c.op.cols() != n {
            return Err(QdError::DimensionMismatch(format!(
                "constraint op is {}x{}, unknown is {}x{}",
                c.op.rows(),
                c.op.cols(),
                n,
                n
            )));
        }
    }
    let mut elim = Eliminator::new();
    for con in constraints {
        // Nonzeros of op by row and by column.
        let mut by_row: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); n];
        let mut by_col: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); n];
        for r in 0..n {
            for c in 0..n {
                let v = con.op.get(r, c);
                if !v.is_zero() {
                    by_row[r].push((c, v.clone()));
                    by_col[c].push((r, v.clone()));
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                // Equation (r,c): Σ_a op[r,a]·F[a,c] − sign·Σ_b op[b,c]·F[r,b] = 0.
                let mut row: BTreeMap<usize, Cyclo8> = BTreeMap::new();
                for (a, v) in &by_row[r] {
                    let e = row.entry(a * n + c).or_insert_with(Cyclo8::zero);
                    *e = &*e + v;
                }
                for (b, v) in &by_col[c] {
                    let e = row.entry(r * n + b).or_insert_with(Cyclo8::zero);
                    *e = &*e - &(&con.sign * v);
                }
                let sparse: SparseVec = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !sparse.is_empty() {
                    elim.insert(sparse);
                }
            }
        }
    }
    let basis = elim.nullspace(n * n);
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut m = FMatrix::zeros(n, n);
            for (idx, val) in v {
                m.set(idx / n, idx % n, val);
            }
            m
        })
        .collect())
}

fn vectorize(m: &FMatrix) -> SparseVec {
    m.vec_entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Linear span of matrices with exact membership testing.
pub struct SpanBasis {
    elim: Eliminator,
    members: Vec<FMatrix>,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis { elim: Eliminator::new(), members: Vec::new() }
    }

    /// Add if independent of the current span; true when added.
    pub fn add(&mut self, m: &FMatrix) -> bool {
        if self.elim.insert(vectorize(m)).is_some() {
            self.members.push(m.clone());
            true
        } else {
            false
        }
    }

    pub fn contains(&self, m: &FMatrix) -> bool {
        self.elim.reduce(vectorize(m)).is_empty()
    }

    pub fn dim(&self) -> usize {
        self.elim.rank()
    }

    pub fn members(&self) -> &[FMatrix] {
        &self.members
    }
}

impl Default for SpanBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Basis of the unital associative algebra generated by the given square
/// matrices: closes span{Id} under left multiplication by the generators.
pub fn algebra_span(generators: &[FMatrix]) -> Result<Vec<FMatrix>, QdError> {
    let n = match generators.first() {
        Some(g) => g.rows(),
        None => return Ok(vec![]),
    };
    for g in generators {
        if g.rows() != n || g.cols() != n || !g.is_square() {
            return Err(QdError::DimensionMismatch(
                "algebra_span: generators must be square of equal size".into(),
            ));
        }
    }
    let mut span = SpanBasis::new();
    let mut frontier: Vec<FMatrix> = Vec::new();
    let id = FMatrix::identity(n);
    span.add(&id);
    frontier.push(id);
    while let Some(m) = frontier.pop() {
        for g in generators {
            let prod = g.mul(&m)?;
            if span.add(&prod) {
                frontier.push(prod);
            }
        }
    }
    Ok(span.members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    fn diag(vals: &[i64]) -> FMatrix {
        let mut m = FMatrix::zeros(vals.len(), vals.len());
        for (i, v) in vals.iter().enumerate() {
            m.set(i, i, c(*v));
        }
        m
    }

    fn check_constraint(f: &FMatrix, con: &OpConstraint) -> bool {
        let lhs = con.op.mul(f).unwrap();
        let rhs = f.mul(&con.op).unwrap().scale(&con.sign);
        lhs.sub(&rhs).unwrap().is_zero()
    }

    #[test]
    fn trivial_one_by_one() {
        let basis = mat_solve(1, &[OpConstraint::commute(FMatrix::zeros(1, 1))]).unwrap();
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn commutant_of_diag_1_2() {
        // Hand oracle: monomial solutions of diag(1,2)·F = F·diag(1,2) are E11, E22.
        let basis = mat_solve(2, &[OpConstraint::commute(diag(&[1, 2]))]).unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(check_constraint(b, &OpConstraint::commute(diag(&[1, 2]))));
        }
    }

    #[test]
    fn commutant_of_diag_and_swap() {
        // Brute-force oracle over symbolic entries [[a,b],[c,d]]:
        // commuting with diag(1,2) forces b=c=0; commuting with the swap then
        // forces a=d. Solution space = scalars, dimension 1.
        let swap = FMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let cons = vec![
            OpConstraint::commute(diag(&[1, 2])),
            OpConstraint::commute(swap),
        ];
        let basis = mat_solve(2, &cons).unwrap();
        assert_eq!(basis.len(), 1);
        for b in &basis {
            for con in &cons {
                assert!(check_constraint(b, con));
            }
        }
    }

    #[test]
    fn mat_solve_basis_is_independent() {
        let basis = mat_solve(2, &[OpConstraint::commute(diag(&[1, 2]))]).unwrap();
        let mut span = SpanBasis::new();
        for b in &basis {
            assert!(span.add(b), "basis vectors must be linearly independent");
        }
    }

    #[test]
    fn mat_solve_dimension_mismatch() {
        let err = mat_solve(2, &[OpConstraint::commute(FMatrix::zeros(3, 3))]);
        assert!(err.is_err());
    }

    #[test]
    fn span_of_identity_alone() {
        let basis = algebra_span(&[FMatrix::identity(3)]).unwrap();
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn span_of_diag_and_antidiag_is_full() {
        // Closure by hand: {I, D, A, DA} with D=diag(1,-1), A=antidiag(1,1)
        // spans all of M2.
        let d = diag(&[1, -1]);
        let a = FMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let basis = algebra_span(&[d, a]).unwrap();
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn algebra_span_idempotent() {
        let d = diag(&[1, -1]);
        let a = FMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let basis = algebra_span(&[d, a]).unwrap();
        let again = algebra_span(&basis).unwrap();
        assert_eq!(basis.len(), again.len());
    }

    #[test]
    fn nullspace_solutions_satisfy_constraints_exactly() {
        // A non-monomial constraint matrix with fractional entries.
        let op = FMatrix::from_rows(vec![
            vec![Cyclo8::from_ratio(1, 2), Cyclo8::sqrt2()],
            vec![Cyclo8::i(), c(3)],
        ])
        .unwrap();
        let con = OpConstraint::signed(op, c(-1));
        let basis = mat_solve(2, std::slice::from_ref(&con)).unwrap();
        for b in &basis {
            assert!(check_constraint(b, &con));
        }
    }
}
