//! Power sums, the q_r generating-function components, and Schur Q-functions.
//!
//! Q_λ is built from the two-row recurrence
//!   Q_(a,b) = q_a q_b + 2 Σ_{i=1..b} (−1)^i q_(a+i) q_(b−i)
//! and, for longer strict λ, the Pfaffian of the matrix of two-row values,
//! padding with a zero part (Q_(a,0) = q_a) when l(λ) is odd.

use crate::combinatorics::Partition;
use crate::field::Cyclo8;
use crate::QdError;

use super::poly::SymPoly;

/// Which (signed) variable set a symmetric series is formed over.
///
/// `XUnionY` is all variables with positive sign; `XUnionNegY` flips the sign
/// of every y-variable, so odd power sums pick up a minus on the y-bank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bank {
    X,
    Y,
    XUnionY,
    XUnionNegY,
}

impl Bank {
    /// The (flat variable index, sign) list the bank selects.
    fn signed_vars(self, m0: usize, m1: usize) -> Vec<(usize, i8)> {
        match self {
            Bank::X => (0..m0).map(|i| (i, 1)).collect(),
            Bank::Y => (m0..m0 + m1).map(|i| (i, 1)).collect(),
            Bank::XUnionY => (0..m0 + m1).map(|i| (i, 1)).collect(),
            Bank::XUnionNegY => (0..m0)
                .map(|i| (i, 1))
                .chain((m0..m0 + m1).map(|i| (i, -1)))
                .collect(),
        }
    }
}

/// p_r over the bank, r odd. Even r is rejected: the ring in play is
/// generated by odd power sums only.
pub fn power_sum(r: u32, bank: Bank, m0: usize, m1: usize) -> Result<SymPoly, QdError> {
    if r == 0 || r % 2 == 0 {
        return Err(QdError::InvalidInput(format!("power_sum degree must be odd, got {r}")));
    }
    let mut out = SymPoly::zero(m0, m1);
    for (idx, sign) in bank.signed_vars(m0, m1) {
        let mut e = vec![0u16; m0 + m1];
        e[idx] = r as u16;
        // r odd, so the sign survives the power.
        let coeff = if sign > 0 { Cyclo8::one() } else { -Cyclo8::one() };
        out.insert_term(e, coeff);
    }
    Ok(out)
}

/// p_κ = Π p_(κ_i) over the bank (κ an odd partition).
pub fn power_sum_product(kappa: &Partition, bank: Bank, m0: usize, m1: usize) -> Result<SymPoly, QdError> {
    let mut acc = SymPoly::one(m0, m1);
    for &part in kappa.parts() {
        acc = acc.mul(&power_sum(part, bank, m0, m1)?);
    }
    Ok(acc)
}

/// Coefficient of t^r in Π_v (1 + v t)/(1 − v t) over the bank's signed
/// variables. q_0 = 1; per variable the factor contributes 1, 2v, 2v², ….
pub fn q_component(r: u32, bank: Bank, m0: usize, m1: usize) -> SymPoly {
    q_series(r, bank, m0, m1).pop().expect("series has r+1 coefficients")
}

/// All of q_0, …, q_r at once (the DP the single-component call truncates).
pub fn q_series(r: u32, bank: Bank, m0: usize, m1: usize) -> Vec<SymPoly> {
    let r = r as usize;
    let mut series = vec![SymPoly::zero(m0, m1); r + 1];
    series[0] = SymPoly::one(m0, m1);
    for (idx, sign) in bank.signed_vars(m0, m1) {
        // Powers of the signed variable: (s·v)^t for t = 1..r.
        let mut powers: Vec<SymPoly> = Vec::with_capacity(r);
        let mut e_base = vec![0u16; m0 + m1];
        for t in 1..=r {
            e_base[idx] = t as u16;
            let coeff = if sign > 0 || t % 2 == 0 { Cyclo8::from_int(2) } else { Cyclo8::from_int(-2) };
            let mut mono = SymPoly::zero(m0, m1);
            mono.insert_term(e_base.clone(), coeff);
            powers.push(mono);
        }
        e_base[idx] = 0;
        let mut next = series.clone();
        for (m, nm) in next.iter_mut().enumerate().skip(1) {
            for (t, pw) in powers.iter().take(m).enumerate() {
                // contribution of (s·v)^(t+1) times series coefficient m−t−1
                *nm = nm.add(&series[m - t - 1].mul(pw));
            }
        }
        series = next;
    }
    series
}

/// Two-row value Q_(a,b) with a > b ≥ 0, from a precomputed q_0..q_(a+b) table.
fn two_row(a: u32, b: u32, q: &[SymPoly]) -> SymPoly {
    let mut acc = q[a as usize].mul(&q[b as usize]);
    let two = Cyclo8::from_int(2);
    for i in 1..=b {
        let term = q[(a + i) as usize].mul(&q[(b - i) as usize]).scale(&two);
        acc = if i % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

/// Pfaffian of the skew-symmetric matrix with upper entries m[i][j] (i < j),
/// by first-row expansion. `m` is indexed by original positions.
fn pfaffian_rec(idx: &[usize], m: &[Vec<SymPoly>], banks: (usize, usize)) -> SymPoly {
    if idx.is_empty() {
        return SymPoly::one(banks.0, banks.1);
    }
    let first = idx[0];
    let mut acc = SymPoly::zero(banks.0, banks.1);
    for t in 1..idx.len() {
        let j = idx[t];
        let rest: Vec<usize> = idx[1..]
            .iter()
            .copied()
            .filter(|&x| x != j)
            .collect();
        let sub = pfaffian_rec(&rest, m, banks);
        let term = m[first][j].mul(&sub);
        acc = if t % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Schur's Q-function Q_λ over the bank. Zero when l(λ) exceeds the bank's
/// variable count (that is a consequence of the algebra, not a special case).
pub fn schur_q(lambda: &Partition, bank: Bank, m0: usize, m1: usize) -> Result<SymPoly, QdError> {
    if !lambda.is_strict() {
        return Err(QdError::InvalidPartition(format!(
            "schur_q needs a strict partition, got {lambda:?}"
        )));
    }
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    if parts.is_empty() {
        return Ok(SymPoly::one(m0, m1));
    }
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let q = q_series(lambda.size(), bank, m0, m1);
    let n = parts.len();
    let mut m = vec![vec![SymPoly::zero(m0, m1); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            m[i][j] = two_row(parts[i], parts[j], &q);
        }
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(&idx, &m, (m0, m1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num::BigInt;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn power_sums_by_bank() {
        let p1x = power_sum(1, Bank::X, 2, 0).unwrap();
        assert_eq!(p1x.render(), "x1 + x2");
        let p1m = power_sum(1, Bank::XUnionNegY, 1, 1).unwrap();
        assert_eq!(p1m.render(), "x1 - y1");
        let p3u = power_sum(3, Bank::XUnionY, 1, 1).unwrap();
        assert_eq!(p3u.render(), "x1^3 + y1^3");
        assert!(power_sum(2, Bank::X, 2, 0).is_err());
    }

    #[test]
    fn q_components_match_hand_expansion() {
        // Expansion of Π (1+x_i t)/(1−x_i t) to order t² in two variables.
        assert_eq!(q_component(0, Bank::X, 2, 0), SymPoly::one(2, 0));
        assert_eq!(q_component(1, Bank::X, 2, 0).render(), "2*x1 + 2*x2");
        assert_eq!(q_component(2, Bank::X, 2, 0).render(), "2*x1^2 + 4*x1*x2 + 2*x2^2");
    }

    #[test]
    fn q_series_multiplicative_over_disjoint_banks() {
        // Σ_{a+b=r} q_a(X)·q_b(Y) = q_r(X ∪ Y): generating functions multiply.
        for r in 0..=8u32 {
            let union = q_component(r, Bank::XUnionY, 2, 2);
            let qx = q_series(r, Bank::X, 2, 2);
            let qy = q_series(r, Bank::Y, 2, 2);
            let mut acc = SymPoly::zero(2, 2);
            for a in 0..=r as usize {
                acc = acc.add(&qx[a].mul(&qy[r as usize - a]));
            }
            assert_eq!(acc, union, "r={r}");
        }
    }

    #[test]
    fn schur_q_small_values() {
        assert_eq!(schur_q(&Partition::empty(), Bank::X, 3, 0).unwrap(), SymPoly::one(3, 0));
        // Q_(2,1) in two variables: the two-row formula expanded by hand.
        let q21 = schur_q(&p(&[2, 1]), Bank::X, 2, 0).unwrap();
        assert_eq!(q21.render(), "4*x1^2*x2 + 4*x1*x2^2");
        // More variables than parts: vanishes.
        let q21_one_var = schur_q(&p(&[2, 1]), Bank::X, 1, 0).unwrap();
        assert!(q21_one_var.is_zero());
        assert!(schur_q(&p(&[2, 2]), Bank::X, 2, 0).is_err());
    }

    #[test]
    fn schur_q_single_row_is_q_component() {
        for a in 1..=5u32 {
            let lhs = schur_q(&p(&[a]), Bank::X, 3, 0).unwrap();
            assert_eq!(lhs, q_component(a, Bank::X, 3, 0));
        }
    }

    /// Independent oracle: Q_λ as the weight generating function of marked
    /// shifted tableaux of shape λ over the ordered alphabet
    /// 1' < 1 < 2' < 2 < … < m' < m, with
    ///   - rows and columns weakly increasing,
    ///   - each unprimed letter at most once per column,
    ///   - each primed letter at most once per row.
    /// Cells are filled left-to-right, top-to-bottom over the shifted diagram.
    fn shifted_tableau_q(lambda: &[u32], m: usize) -> SymPoly {
        // Letters encoded 0..2m: letter 2i = (i+1)', letter 2i+1 = i+1 unprimed.
        let rows = lambda.len();
        let cells: Vec<(usize, usize)> = (0..rows)
            .flat_map(|r| (r..r + lambda[r] as usize).map(move |c| (r, c)))
            .collect();
        let mut acc = SymPoly::zero(m, 0);
        let mut filling: Vec<u8> = Vec::with_capacity(cells.len());

        fn cell_index(cells: &[(usize, usize)], r: usize, c: usize) -> Option<usize> {
            cells.iter().position(|&(rr, cc)| rr == r && cc == c)
        }

        fn admissible(cells: &[(usize, usize)], filling: &[u8], pos: usize, letter: u8) -> bool {
            let (r, c) = cells[pos];
            let prime = letter % 2 == 0;
            // Left neighbour: weakly increasing along rows; primed letters
            // strictly increase along rows (at most one per row).
            if c > r {
                if let Some(i) = cell_index(cells, r, c - 1) {
                    if i < pos {
                        let left = filling[i];
                        if left > letter {
                            return false;
                        }
                        if prime && left == letter {
                            return false;
                        }
                    }
                }
            }
            // Upper neighbour: weakly increasing down columns; unprimed
            // letters strictly increase down columns (at most one per column).
            if r > 0 {
                if let Some(i) = cell_index(cells, r - 1, c) {
                    if i < pos {
                        let up = filling[i];
                        if up > letter {
                            return false;
                        }
                        if !prime && up == letter {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn rec(
            cells: &[(usize, usize)],
            filling: &mut Vec<u8>,
            m: usize,
            acc: &mut SymPoly,
        ) {
            if filling.len() == cells.len() {
                let mut e = vec![0u16; m];
                for &l in filling.iter() {
                    e[(l / 2) as usize] += 1;
                }
                acc.insert_term(e, Cyclo8::one());
                return;
            }
            let pos = filling.len();
            for letter in 0..(2 * m) as u8 {
                if admissible(cells, filling, pos, letter) {
                    filling.push(letter);
                    rec(cells, filling, m, acc);
                    filling.pop();
                }
            }
        }

        rec(&cells, &mut filling, m, &mut acc);
        acc
    }

    #[test]
    fn pfaffian_construction_matches_tableau_oracle() {
        // Every strict λ with |λ| ≤ 6, in 6 variables.
        for k in 1..=6u32 {
            for lambda in crate::combinatorics::enum_strict(k) {
                let via_pfaffian = schur_q(&lambda, Bank::X, 6, 0).unwrap();
                let via_tableaux = shifted_tableau_q(lambda.parts(), 6);
                assert_eq!(via_pfaffian, via_tableaux, "λ = {lambda:?}");
            }
        }
    }

    #[test]
    fn q_one_specializes() {
        // Q_(1) = 2(x1+x2) evaluated at ones.
        let q1 = schur_q(&p(&[1]), Bank::X, 2, 0).unwrap();
        assert_eq!(q1.specialize(&[c(1), c(1)], &[]).unwrap(), c(4));
        // p3 at x = 2.
        let p3 = power_sum(3, Bank::X, 1, 0).unwrap();
        assert_eq!(p3.specialize(&[c(2)], &[]).unwrap(), c(8));
    }

    #[test]
    fn signed_bank_q_functions() {
        // Q_μ(x, −y) should equal Q_μ(x, y) with y ↦ −y: check via
        // specialization at generic rational points.
        let mu = p(&[2, 1]);
        let plus = schur_q(&mu, Bank::XUnionY, 2, 2).unwrap();
        let minus = schur_q(&mu, Bank::XUnionNegY, 2, 2).unwrap();
        let xs = [c(1), Cyclo8::from_ratio(1, 2)];
        let ys = [c(2), Cyclo8::from_ratio(-1, 3)];
        let neg_ys: Vec<Cyclo8> = ys.iter().map(|v| -v).collect();
        assert_eq!(
            minus.specialize(&xs, &ys).unwrap(),
            plus.specialize(&xs, &neg_ys).unwrap()
        );
        let _ = Rational::from_integer(BigInt::from(1));
    }
}
