//! Branching multiplicities of the simple tensor-space modules under the
//! split into two diagonal blocks, computed entirely from characters.
//!
//! m is the coefficient of the paired character in the restricted character;
//! m' converts it to the subalgebra side by the type case split:
//! halve when a type-M pair restricts a type-Q module, double in the mirror
//! case, and copy otherwise.

use std::collections::BTreeMap;

use num::traits::Signed;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{BiPartition, Partition};
use crate::field::{Cyclo8, Rational};
use crate::symfunc::{expand_qq, schur_q, Bank};
use crate::QdError;

use super::u_pair_dimension;

#[derive(Clone, Debug, PartialEq)]
pub struct BranchEntry {
    /// Multiplicity on the enveloping-algebra side; nonnegative rational.
    pub m: Rational,
    /// Multiplicity on the subalgebra side; a nonnegative integer.
    pub m_prime: Rational,
}

fn rational_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_parse(s: &str) -> Result<Rational, String> {
    let (n, d) = s.split_once('/').ok_or_else(|| format!("expected num/den, got {s:?}"))?;
    let numer: num::BigInt = n.parse().map_err(|e| format!("{e}"))?;
    let denom: num::BigInt = d.parse().map_err(|e| format!("{e}"))?;
    Ok(Rational::new(numer, denom))
}

#[derive(Serialize, Deserialize)]
struct BranchEntryWire {
    m: String,
    m_prime: String,
}

impl Serialize for BranchEntry {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BranchEntryWire { m: rational_str(&self.m), m_prime: rational_str(&self.m_prime) }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BranchEntry {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = BranchEntryWire::deserialize(deserializer)?;
        Ok(BranchEntry {
            m: rational_parse(&wire.m).map_err(serde::de::Error::custom)?,
            m_prime: rational_parse(&wire.m_prime).map_err(serde::de::Error::custom)?,
        })
    }
}

/// Branching table of one strict λ restricted to block sizes (n0, n1).
#[derive(Clone, Debug, PartialEq)]
pub struct BranchTable {
    pub lambda: Partition,
    pub n0: usize,
    pub n1: usize,
    pub entries: BTreeMap<BiPartition, BranchEntry>,
}

impl BranchTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pair,m,m_prime\n");
        for (pair, e) in &self.entries {
            out.push_str(&format!("{},{},{}\n", pair.label(), e.m, e.m_prime));
        }
        out
    }

    /// Dimension conservation: Σ m·dim(pair) must equal dim(λ in n0+n1).
    pub fn dimension_check(&self) -> Result<bool, QdError> {
        let mut total = Cyclo8::zero();
        for (pair, e) in &self.entries {
            let d = u_pair_dimension(pair, self.n0, self.n1)?;
            total += &(&Cyclo8::from_rational(e.m.clone()) * &d);
        }
        let ch = super::sergeev_character(&self.lambda, self.n0 + self.n1)?;
        let dim = ch.specialize(&vec![Cyclo8::one(); self.n0 + self.n1], &[])?;
        Ok(total == dim)
    }
}

#[derive(Serialize, Deserialize)]
struct BranchTableWire {
    lambda: Partition,
    n0: usize,
    n1: usize,
    entries: BTreeMap<String, BranchEntry>,
}

impl Serialize for BranchTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BranchTableWire {
            lambda: self.lambda.clone(),
            n0: self.n0,
            n1: self.n1,
            entries: self.entries.iter().map(|(p, e)| (p.label(), e.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BranchTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = BranchTableWire::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for (label, e) in wire.entries {
            let pair = BiPartition::parse_label(&label).map_err(serde::de::Error::custom)?;
            entries.insert(pair, e);
        }
        Ok(BranchTable { lambda: wire.lambda, n0: wire.n0, n1: wire.n1, entries })
    }
}

/// Compute the branching table of strict λ into blocks (n0, n1).
///
/// The restricted character (√2)^(d(λ)−l(λ)) Q_λ(x₁…x_n0, y₁…y_n1) is
/// expanded over {Q_μ(x)Q_ν(y)}; dividing out each pair's character prefactor
/// yields m, and the type case split yields m'.
pub fn branching_multiplicities(
    lambda: &Partition,
    n0: usize,
    n1: usize,
) -> Result<BranchTable, QdError> {
    if !lambda.is_strict() {
        return Err(QdError::InvalidPartition(format!(
            "branching needs a strict partition, got {lambda:?}"
        )));
    }
    if lambda.len() > n0 + n1 {
        return Err(QdError::InvalidInput(format!(
            "l(λ) = {} exceeds n0+n1 = {}",
            lambda.len(),
            n0 + n1
        )));
    }
    let l_lambda = lambda.len() as i64;
    let d_lambda = l_lambda % 2;
    let restricted = schur_q(lambda, Bank::XUnionY, n0, n1)?
        .scale(&Cyclo8::sqrt2_pow(d_lambda - l_lambda));
    let qq = expand_qq(&restricted)?;
    let mut entries = BTreeMap::new();
    for (pair, coeff) in &qq.coeffs {
        let lt = pair.total_len() as i64;
        let d_pair = lt % 2;
        // Divide out the pair character's (√2)^(d−l−l') prefactor.
        let m_val = coeff * &Cyclo8::sqrt2_pow(lt - d_pair);
        let m = m_val.as_rational().ok_or_else(|| {
            QdError::InvalidInput(format!(
                "multiplicity at {} is not rational: {}",
                pair.label(),
                m_val
            ))
        })?;
        if m.is_negative() {
            return Err(QdError::InvalidInput(format!(
                "negative multiplicity {} at {}",
                m,
                pair.label()
            )));
        }
        let pair_type_m = pair.total_len() % 2 == 0;
        let lambda_type_m = lambda.len() % 2 == 0;
        let m_prime = match (pair_type_m, lambda_type_m) {
            (true, false) => &m / Rational::from_integer(2.into()),
            (false, true) => &m * Rational::from_integer(2.into()),
            _ => m.clone(),
        };
        entries.insert(pair.clone(), BranchEntry { m, m_prime });
    }
    Ok(BranchTable { lambda: lambda.clone(), n0, n1, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pair(a: &[u32], b: &[u32]) -> BiPartition {
        BiPartition::new(pt(a), pt(b))
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn degree_one_restriction() {
        let t = branching_multiplicities(&pt(&[1]), 1, 1).unwrap();
        let keys: Vec<String> = t.entries.keys().map(|p| p.label()).collect();
        assert_eq!(keys, vec!["|1".to_string(), "1|".to_string()]);
        assert!(t.dimension_check().unwrap());
    }

    #[test]
    fn one_row_matches_generating_function_oracle() {
        // λ=(k): q_k(x∪y) = Σ_{a+b=k} q_a(x) q_b(y) forces coefficient 1 on
        // every Q_(a)(x)Q_(b)(y), so m = 2 on interior pairs ((a),(k−a)) and
        // m = 1 at the ends; the case split sends every m' to 1.
        for k in 2..=5u32 {
            let t = branching_multiplicities(&pt(&[k]), 1, 1).unwrap();
            let mut expected = BTreeMap::new();
            expected.insert(pair(&[k], &[]), (rat(1), rat(1)));
            expected.insert(pair(&[], &[k]), (rat(1), rat(1)));
            for a in 1..k {
                expected.insert(pair(&[a], &[k - a]), (rat(2), rat(1)));
            }
            let got: BTreeMap<BiPartition, (Rational, Rational)> = t
                .entries
                .iter()
                .map(|(p, e)| (p.clone(), (e.m.clone(), e.m_prime.clone())))
                .collect();
            assert_eq!(got, expected, "k={k}");
            assert!(t.dimension_check().unwrap(), "k={k}");
        }
    }

    #[test]
    fn m_prime_integrality_small_lambdas() {
        for k in 1..=5u32 {
            for lambda in crate::combinatorics::enum_strict(k) {
                for (n0, n1) in [(1usize, 1usize), (1, 2), (2, 2)] {
                    if lambda.len() > n0 + n1 {
                        continue;
                    }
                    let t = branching_multiplicities(&lambda, n0, n1).unwrap();
                    for (p, e) in &t.entries {
                        assert!(
                            e.m_prime.denom() == &BigInt::from(1),
                            "λ={lambda:?} (n0,n1)=({n0},{n1}) at {}: m'={}",
                            p.label(),
                            e.m_prime
                        );
                        assert!(!e.m_prime.is_negative());
                        assert!(!e.m.is_negative());
                    }
                    assert!(t.dimension_check().unwrap());
                }
            }
        }
    }

    #[test]
    fn length_guard() {
        assert!(branching_multiplicities(&pt(&[3, 2, 1]), 1, 1).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let t = branching_multiplicities(&pt(&[2, 1]), 1, 1).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        let back: BranchTable = serde_json::from_str(&js).unwrap();
        assert_eq!(t, back);
    }
}
