//! Sparse multivariate polynomials over Q(ζ₈) in two disjoint variable banks
//! X = {x_1, …, x_m0} and Y = {y_1, …, y_m1}.
//!
//! Exponent vectors have length m0 + m1, X first. No zero coefficients are
//! stored; term order is the BTreeMap order on exponent vectors, so iteration
//! and serialization are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Cyclo8;
use crate::QdError;

#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    m0: usize,
    m1: usize,
    terms: BTreeMap<Vec<u16>, Cyclo8>,
}

impl SymPoly {
    pub fn zero(m0: usize, m1: usize) -> Self {
        SymPoly { m0, m1, terms: BTreeMap::new() }
    }

    pub fn constant(m0: usize, m1: usize, c: Cyclo8) -> Self {
        let mut p = SymPoly::zero(m0, m1);
        if !c.is_zero() {
            p.terms.insert(vec![0; m0 + m1], c);
        }
        p
    }

    pub fn one(m0: usize, m1: usize) -> Self {
        SymPoly::constant(m0, m1, Cyclo8::one())
    }

    /// The single variable with flat index `idx` (x-bank first).
    pub fn variable(m0: usize, m1: usize, idx: usize) -> Self {
        assert!(idx < m0 + m1, "variable index out of range");
        let mut e = vec![0u16; m0 + m1];
        e[idx] = 1;
        let mut p = SymPoly::zero(m0, m1);
        p.terms.insert(e, Cyclo8::one());
        p
    }

    pub fn m0(&self) -> usize {
        self.m0
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn nvars(&self) -> usize {
        self.m0 + self.m1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Cyclo8)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> Cyclo8 {
        self.terms.get(exps).cloned().unwrap_or_else(Cyclo8::zero)
    }

    pub fn insert_term(&mut self, exps: Vec<u16>, c: Cyclo8) {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check_banks(&self, rhs: &SymPoly) -> Result<(), QdError> {
        if self.m0 != rhs.m0 || self.m1 != rhs.m1 {
            return Err(QdError::DimensionMismatch(format!(
                "banks ({},{}) vs ({},{})",
                self.m0, self.m1, rhs.m0, rhs.m1
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &SymPoly) -> SymPoly {
        self.check_banks(rhs).expect("bank mismatch in add");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SymPoly) -> SymPoly {
        self.check_banks(rhs).expect("bank mismatch in sub");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.m0, self.m1);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Cyclo8) -> SymPoly {
        if s.is_zero() {
            return SymPoly::zero(self.m0, self.m1);
        }
        let mut out = SymPoly::zero(self.m0, self.m1);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &SymPoly) -> SymPoly {
        self.check_banks(rhs).expect("bank mismatch in mul");
        let mut out = SymPoly::zero(self.m0, self.m1);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        let mut acc = SymPoly::one(self.m0, self.m1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree of each monomial if homogeneous; None for the zero
    /// polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: u32 = e.iter().map(|&x| x as u32).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Largest x-bank degree over the monomials (0 for the zero polynomial).
    pub fn max_x_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e[..self.m0].iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e[self.m0..].iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_only_x(&self) -> bool {
        self.max_y_degree() == 0
    }

    pub fn uses_only_y(&self) -> bool {
        self.max_x_degree() == 0
    }

    /// Exact evaluation at the given bank values.
    pub fn specialize(&self, x_values: &[Cyclo8], y_values: &[Cyclo8]) -> Result<Cyclo8, QdError> {
        if x_values.len() != self.m0 || y_values.len() != self.m1 {
            return Err(QdError::DimensionMismatch(format!(
                "specialize: got {}+{} values for banks ({},{})",
                x_values.len(),
                y_values.len(),
                self.m0,
                self.m1
            )));
        }
        let all: Vec<&Cyclo8> = x_values.iter().chain(y_values).collect();
        let mut acc = Cyclo8::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &exp) in all.iter().zip(e) {
                for _ in 0..exp {
                    term = &term * v;
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Human-readable form like "4*x1^2*x2 + 4*x1*x2^2".
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        // Descending exponent order puts leading monomials first.
        for (e, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = if i < self.m0 {
                    format!("x{}", i + 1)
                } else {
                    format!("y{}", i + 1 - self.m0)
                };
                if exp == 1 {
                    vars.push(name);
                } else {
                    vars.push(format!("{name}^{exp}"));
                }
            }
            let coeff_str = c.to_string();
            let piece = if vars.is_empty() {
                coeff_str
            } else if c.is_one() {
                vars.join("*")
            } else if (-c.clone()).is_one() {
                format!("-{}", vars.join("*"))
            } else {
                format!("{}*{}", coeff_str, vars.join("*"))
            };
            pieces.push(piece);
        }
        let mut out = String::new();
        for (i, piece) in pieces.iter().enumerate() {
            if i == 0 {
                out.push_str(piece);
            } else if let Some(stripped) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(piece);
            }
        }
        out
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{},{}]({})", self.m0, self.m1, self.render())
    }
}

/// Serialized form: bank sizes plus a list of (exponent vector, coefficient) pairs.
#[derive(Serialize, Deserialize)]
struct SymPolyWire {
    m0: usize,
    m1: usize,
    terms: Vec<(Vec<u16>, Cyclo8)>,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = SymPolyWire {
            m0: self.m0,
            m1: self.m1,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SymPolyWire::deserialize(deserializer)?;
        let mut p = SymPoly::zero(wire.m0, wire.m1);
        for (e, c) in wire.terms {
            if e.len() != wire.m0 + wire.m1 {
                return Err(serde::de::Error::custom("exponent vector length mismatch"));
            }
            p.insert_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn arithmetic_and_render() {
        let x1 = SymPoly::variable(2, 0, 0);
        let x2 = SymPoly::variable(2, 0, 1);
        let s = x1.add(&x2);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[2, 0]), c(1));
        assert_eq!(sq.coeff(&[1, 1]), c(2));
        assert_eq!(sq.render(), "x1^2 + 2*x1*x2 + x2^2");
        assert!(sq.sub(&sq).is_zero());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.add(&SymPoly::one(2, 0)).homogeneous_degree(), None);
    }

    #[test]
    fn specialize_exact() {
        let x1 = SymPoly::variable(1, 1, 0);
        let y1 = SymPoly::variable(1, 1, 1);
        let f = x1.mul(&x1).add(&y1.scale(&c(3)));
        let v = f.specialize(&[c(2)], &[Cyclo8::from_ratio(1, 3)]).unwrap();
        assert_eq!(v, c(5));
        assert!(f.specialize(&[c(1), c(2)], &[]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let x1 = SymPoly::variable(2, 1, 0);
        let y1 = SymPoly::variable(2, 1, 2);
        let f = x1.mul(&y1).scale(&Cyclo8::sqrt2());
        let js = serde_json::to_string(&f).unwrap();
        let back: SymPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(f, back);
    }
}
