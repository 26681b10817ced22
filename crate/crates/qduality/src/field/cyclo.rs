//! Exact arithmetic in the cyclotomic field Q(ζ₈).
//!
//! Elements are stored on the power basis {1, ζ, ζ², ζ³} with ζ = ζ₈ a primitive
//! 8th root of unity, so ζ⁴ = −1. This one field houses both irrationals the rest
//! of the crate needs: √2 = ζ − ζ³ and i = ζ². Coefficients are arbitrary-precision
//! rationals; equality is coefficient equality, so every comparison is exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::QdError;

/// Exact rational scalar. Kept reduced with a positive denominator by `num`.
pub type Rational = num::BigRational;

/// An element of Q(ζ₈), canonically represented on the basis {1, ζ, ζ², ζ³}.
///
/// Zero is the `None` variant; the boxed coefficient array is never all-zero.
/// This keeps large mostly-zero matrices cheap without leaving exact arithmetic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Cyclo8 {
    repr: Option<Box<[Rational; 4]>>,
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Cyclo8 {
    pub fn zero() -> Self {
        Cyclo8 { repr: None }
    }

    pub fn one() -> Self {
        Cyclo8::from_int(1)
    }

    /// The primitive 8th root of unity ζ itself.
    pub fn zeta() -> Self {
        Cyclo8::from_coeffs([rat_int(0), rat_int(1), rat_int(0), rat_int(0)])
    }

    /// √2 = ζ − ζ³. Squares to 2.
    pub fn sqrt2() -> Self {
        Cyclo8::from_coeffs([rat_int(0), rat_int(1), rat_int(0), rat_int(-1)])
    }

    /// √−1 = ζ². Squares to −1.
    pub fn i() -> Self {
        Cyclo8::from_coeffs([rat_int(0), rat_int(0), rat_int(1), rat_int(0)])
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo8::from_rational(rat_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Cyclo8::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            return Cyclo8::zero();
        }
        Cyclo8 {
            repr: Some(Box::new([r, Rational::zero(), Rational::zero(), Rational::zero()])),
        }
    }

    pub fn from_coeffs(coeffs: [Rational; 4]) -> Self {
        if coeffs.iter().all(|c| c.is_zero()) {
            Cyclo8::zero()
        } else {
            Cyclo8 { repr: Some(Box::new(coeffs)) }
        }
    }

    /// Coefficients on the basis {1, ζ, ζ², ζ³}.
    pub fn coeffs(&self) -> [Rational; 4] {
        match &self.repr {
            None => [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
            Some(c) => (**c).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_none()
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            None => false,
            Some(c) => c[0].is_one() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(),
        }
    }

    /// (√2)^e for any integer exponent, exactly: 2^(e/2) when e is even,
    /// 2^((e−1)/2)·√2 when odd. Negative exponents give the rational inverse.
    pub fn sqrt2_pow(e: i64) -> Self {
        let (q, r) = (e.div_euclid(2), e.rem_euclid(2));
        let two_q = if q >= 0 {
            Rational::from_integer(BigInt::from(2).pow(q as u32))
        } else {
            Rational::new(BigInt::one(), BigInt::from(2).pow((-q) as u32))
        };
        let base = Cyclo8::from_rational(two_q);
        if r == 0 {
            base
        } else {
            &base * &Cyclo8::sqrt2()
        }
    }

    /// Some(r) when the value lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match &self.repr {
            None => Some(Rational::zero()),
            Some(c) => {
                if c[1].is_zero() && c[2].is_zero() && c[3].is_zero() {
                    Some(c[0].clone())
                } else {
                    None
                }
            }
        }
    }

    /// Decomposition a + b·√2 + (c + d·√2)·i of the value.
    pub fn sqrt2_i_parts(&self) -> (Rational, Rational, Rational, Rational) {
        let co = self.coeffs();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let a = co[0].clone();
        let b = (&co[1] - &co[3]) * &half;
        let c = co[2].clone();
        let d = (&co[1] + &co[3]) * half;
        (a, b, c, d)
    }

    /// Some((a, b)) with value = a + b·√2 when the value lies in the real
    /// subfield Q(√2); None otherwise.
    pub fn real_sqrt2_parts(&self) -> Option<(Rational, Rational)> {
        let (a, b, c, d) = self.sqrt2_i_parts();
        if c.is_zero() && d.is_zero() {
            Some((a, b))
        } else {
            None
        }
    }

    /// Exact sign of a value in Q(√2): −1, 0, or +1. None if the value is not real.
    pub fn real_sign(&self) -> Option<i32> {
        let (a, b) = self.real_sqrt2_parts()?;
        let sign = if a.is_zero() && b.is_zero() {
            0
        } else if !a.is_negative() && !b.is_negative() {
            1
        } else if !a.is_positive() && !b.is_positive() {
            -1
        } else {
            // a and b have opposite signs: compare a² with 2b².
            let a2 = &a * &a;
            let b2 = &b * &b * rat_int(2);
            if a2 == b2 {
                0
            } else if (a2 > b2) == a.is_positive() {
                1
            } else {
                -1
            }
        };
        Some(sign)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Cyclo8, QdError> {
        let c = self.repr.as_deref().ok_or(QdError::DivisionByZero)?;
        // Solve M·y = e0 where M is the regular-representation matrix of self
        // on the power basis (column j = coefficients of self·ζ^j).
        let mut m = [[Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
                     [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
                     [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
                     [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()]];
        for j in 0..4 {
            for i in 0..4 {
                // ζ^j · ζ^i = ζ^(i+j), reduced by ζ⁴ = −1.
                let k = i + j;
                if k < 4 {
                    m[k][j] += &c[i];
                } else {
                    m[k - 4][j] -= &c[i];
                }
            }
        }
        let mut rhs = [Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()];
        // Gaussian elimination with partial (first-nonzero) pivoting on 4×4.
        let mut perm = [0usize, 1, 2, 3];
        for col in 0..4 {
            let pivot_row = (col..4)
                .find(|&r| !m[perm[r]][col].is_zero())
                .ok_or(QdError::DivisionByZero)?;
            perm.swap(col, pivot_row);
            let p = perm[col];
            let pinv = m[p][col].recip();
            for r in (col + 1)..4 {
                let q = perm[r];
                if m[q][col].is_zero() {
                    continue;
                }
                let factor = &m[q][col] * &pinv;
                for cc in col..4 {
                    let delta = &factor * &m[p][cc];
                    m[q][cc] -= delta;
                }
                let delta = &factor * &rhs[p];
                rhs[q] -= delta;
            }
        }
        let mut sol = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for col in (0..4).rev() {
            let p = perm[col];
            let mut acc = rhs[p].clone();
            for cc in (col + 1)..4 {
                acc -= &m[p][cc] * &sol[cc];
            }
            sol[col] = acc / &m[p][col];
        }
        Ok(Cyclo8::from_coeffs(sol))
    }

    /// Self-test hook: the canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        match &self.repr {
            None => true,
            Some(c) => !c.iter().all(|x| x.is_zero()),
        }
    }
}

impl Add for &Cyclo8 {
    type Output = Cyclo8;
    fn add(self, rhs: &Cyclo8) -> Cyclo8 {
        match (&self.repr, &rhs.repr) {
            (None, _) => rhs.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => Cyclo8::from_coeffs([
                &a[0] + &b[0],
                &a[1] + &b[1],
                &a[2] + &b[2],
                &a[3] + &b[3],
            ]),
        }
    }
}

impl Sub for &Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, rhs: &Cyclo8) -> Cyclo8 {
        match (&self.repr, &rhs.repr) {
            (_, None) => self.clone(),
            (None, Some(_)) => -rhs.clone(),
            (Some(a), Some(b)) => Cyclo8::from_coeffs([
                &a[0] - &b[0],
                &a[1] - &b[1],
                &a[2] - &b[2],
                &a[3] - &b[3],
            ]),
        }
    }
}

impl Mul for &Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, rhs: &Cyclo8) -> Cyclo8 {
        let (a, b) = match (&self.repr, &rhs.repr) {
            (Some(a), Some(b)) => (a, b),
            _ => return Cyclo8::zero(),
        };
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for i in 0..4 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if b[j].is_zero() {
                    continue;
                }
                let prod = &a[i] * &b[j];
                let k = i + j;
                if k < 4 {
                    out[k] += prod;
                } else {
                    out[k - 4] -= prod;
                }
            }
        }
        Cyclo8::from_coeffs(out)
    }
}

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        match self.repr {
            None => Cyclo8::zero(),
            Some(c) => {
                let [a, b, cc, d] = *c;
                Cyclo8::from_coeffs([-a, -b, -cc, -d])
            }
        }
    }
}

impl Neg for &Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        self.clone().neg()
    }
}

impl AddAssign<&Cyclo8> for Cyclo8 {
    fn add_assign(&mut self, rhs: &Cyclo8) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclo8> for Cyclo8 {
    fn sub_assign(&mut self, rhs: &Cyclo8) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclo8> for Cyclo8 {
    fn mul_assign(&mut self, rhs: &Cyclo8) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One displayed term: `coef * sym` where sym is "", "sqrt2", "i" or "sqrt2*i".
fn fmt_term(coef: &Rational, sym: &str, first: bool) -> String {
    let mut s = String::new();
    let neg = coef.is_negative();
    if first {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    let abs = coef.abs();
    if sym.is_empty() {
        s.push_str(&fmt_rational(&abs));
        return s;
    }
    if abs.numer().is_one() && abs.denom().is_one() {
        s.push_str(sym);
    } else if abs.denom().is_one() {
        s.push_str(&format!("{}*{}", abs.numer(), sym));
    } else if abs.numer().is_one() {
        s.push_str(&format!("{}/{}", sym, abs.denom()));
    } else {
        s.push_str(&format!("{}*{}/{}", abs.numer(), sym, abs.denom()));
    }
    s
}

impl fmt::Display for Cyclo8 {
    /// Canonical string over {integers, fractions, sqrt2, i}: e.g. "3",
    /// "2*sqrt2", "-1/2", "1 + sqrt2", "sqrt2*i/2". Never decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (a, b, c, d) = self.sqrt2_i_parts();
        let mut out = String::new();
        let mut first = true;
        for (coef, sym) in [(a, ""), (b, "sqrt2"), (c, "i"), (d, "sqrt2*i")] {
            if coef.is_zero() {
                continue;
            }
            out.push_str(&fmt_term(&coef, sym, first));
            first = false;
        }
        write!(f, "{}", out)
    }
}

impl fmt::Debug for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo8({})", self)
    }
}

fn rational_to_json(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_from_json(s: &str) -> Result<Rational, String> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| format!("expected \"num/den\", got {s:?}"))?;
    let numer: BigInt = n.parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
    let denom: BigInt = d.parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
    if denom.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(numer, denom))
}

impl Serialize for Cyclo8 {
    /// Four "num/den" strings in basis order [1, ζ, ζ², ζ³]. Bit-exact round-trip.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let c = self.coeffs();
        let strs: Vec<String> = c.iter().map(rational_to_json).collect();
        strs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclo8 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strs = <[String; 4]>::deserialize(deserializer)?;
        let mut coeffs = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, s) in strs.iter().enumerate() {
            coeffs[i] = rational_from_json(s).map_err(D::Error::custom)?;
        }
        Ok(Cyclo8::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn zeta_fourth_power_is_minus_one() {
        let z = Cyclo8::zeta();
        let z3 = &(&z * &z) * &z;
        assert_eq!(&z * &z3, c(-1));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Cyclo8::sqrt2();
        assert_eq!(&s * &s, c(2));
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = Cyclo8::i();
        assert_eq!(&i * &i, c(-1));
    }

    #[test]
    fn inv_sqrt2_is_half_sqrt2() {
        // Independent check: multiply out and confirm the product is 1.
        let s = Cyclo8::sqrt2();
        let inv = s.inv().unwrap();
        assert_eq!(&s * &inv, c(1));
        let expected = &Cyclo8::from_ratio(1, 2) * &Cyclo8::sqrt2();
        assert_eq!(inv, expected);
    }

    #[test]
    fn inverting_zero_is_an_error() {
        assert!(Cyclo8::zero().inv().is_err());
    }

    #[test]
    fn sqrt2_pow_table() {
        assert_eq!(Cyclo8::sqrt2_pow(0), c(1));
        assert_eq!(Cyclo8::sqrt2_pow(2), c(2));
        assert_eq!(Cyclo8::sqrt2_pow(4), c(4));
        assert_eq!(Cyclo8::sqrt2_pow(1), Cyclo8::sqrt2());
        assert_eq!(Cyclo8::sqrt2_pow(3), &c(2) * &Cyclo8::sqrt2());
        assert_eq!(&Cyclo8::sqrt2_pow(-1) * &Cyclo8::sqrt2(), c(1));
        assert_eq!(&Cyclo8::sqrt2_pow(-3) * &Cyclo8::sqrt2_pow(3), c(1));
    }

    #[test]
    fn real_sign_exact() {
        // 3 - 2·√2 > 0 because 9 > 8; 2·√2 - 3 < 0.
        let v = &c(3) - &(&c(2) * &Cyclo8::sqrt2());
        assert_eq!(v.real_sign(), Some(1));
        assert_eq!((-v).real_sign(), Some(-1));
        assert_eq!(Cyclo8::zero().real_sign(), Some(0));
        assert_eq!(Cyclo8::i().real_sign(), None);
        let w = &Cyclo8::sqrt2() - &c(2); // √2 < 2
        assert_eq!(w.real_sign(), Some(-1));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(c(3).to_string(), "3");
        assert_eq!(Cyclo8::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!((&c(2) * &Cyclo8::sqrt2()).to_string(), "2*sqrt2");
        assert_eq!(Cyclo8::sqrt2_pow(-1).to_string(), "sqrt2/2");
        let mixed = &c(1) + &Cyclo8::sqrt2();
        assert_eq!(mixed.to_string(), "1 + sqrt2");
        let im = &Cyclo8::i() * &Cyclo8::sqrt2_pow(-1);
        assert_eq!(im.to_string(), "sqrt2*i/2");
    }

    #[test]
    fn json_round_trip_bit_exact() {
        let v = &(&Cyclo8::from_ratio(7, 3) + &Cyclo8::sqrt2()) * &Cyclo8::zeta();
        let js = serde_json::to_string(&v).unwrap();
        let back: Cyclo8 = serde_json::from_str(&js).unwrap();
        assert_eq!(v, back);
        assert_eq!(js, serde_json::to_string(&back).unwrap());
    }

    prop_compose! {
        fn arb_cyclo()(nums in proptest::array::uniform4(-12i64..=12),
                       dens in proptest::array::uniform4(1i64..=6)) -> Cyclo8 {
            let coeffs = [
                Rational::new(BigInt::from(nums[0]), BigInt::from(dens[0])),
                Rational::new(BigInt::from(nums[1]), BigInt::from(dens[1])),
                Rational::new(BigInt::from(nums[2]), BigInt::from(dens[2])),
                Rational::new(BigInt::from(nums[3]), BigInt::from(dens[3])),
            ];
            Cyclo8::from_coeffs(coeffs)
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            // Associativity and distributivity, exactly.
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn inverse_law(a in arb_cyclo()) {
            if !a.is_zero() {
                let inv = a.inv().unwrap();
                prop_assert_eq!(&a * &inv, Cyclo8::one());
            }
        }

        #[test]
        fn serde_round_trip(a in arb_cyclo()) {
            let js = serde_json::to_string(&a).unwrap();
            let back: Cyclo8 = serde_json::from_str(&js).unwrap();
            prop_assert_eq!(a, back);
        }
    }
}
