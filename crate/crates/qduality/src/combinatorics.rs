//! Partition data indexing everything: strict and odd partitions, bipartition
//! labels, their sign/type maps, and normal-form words for the conjugacy-class
//! representatives of the covered hyperoctahedral group.
//!
//! Enumeration orders are fixed — reverse-lexicographic for partitions,
//! ascending split size then reverse-lex components for bipartitions — so that
//! tables, basis solves, and exports are reproducible byte for byte.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::QdError;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, QdError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(QdError::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(QdError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |λ| = Σ parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// l(λ) = number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    /// Parts joined by '+': "3+1". The empty partition renders as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+"))
    }
}

/// A pair of partitions of the same kind with |first| + |second| = k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        BiPartition { first, second }
    }

    pub fn k(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// Total length l(λ) + l(μ).
    pub fn total_len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    /// Class/module label like "3+1|1"; an empty component renders as "".
    pub fn label(&self) -> String {
        format!("{}|{}", self.first, self.second)
    }

    pub fn parse_label(s: &str) -> Result<Self, QdError> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| QdError::InvalidInput(format!("bipartition label {s:?} lacks '|'")))?;
        Ok(BiPartition::new(parse_parts(a)?, parse_parts(b)?))
    }
}

pub fn parse_parts(s: &str) -> Result<Partition, QdError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = trimmed
        .split(['+', ','])
        .map(|p| p.trim().parse::<u32>())
        .collect();
    let parts = parts.map_err(|e| QdError::InvalidPartition(format!("{s:?}: {e}")))?;
    Partition::new(parts)
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All partitions of k with the given per-part predicate, in reverse-lex order
/// (first differing part decides, larger first).
fn enumerate(k: u32, max_part: u32, pred: fn(u32) -> bool, strict: bool) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max_part: u32,
        pred: fn(u32) -> bool,
        strict: bool,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            if !pred(p) {
                continue;
            }
            prefix.push(p);
            let next_max = if strict { p.saturating_sub(1) } else { p };
            rec(remaining - p, next_max, pred, strict, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_part, pred, strict, &mut Vec::new(), &mut out);
    out
}

/// Strict partitions of k (distinct parts), reverse-lexicographic.
pub fn enum_strict(k: u32) -> Vec<Partition> {
    enumerate(k, k, |_| true, true)
}

/// Odd partitions of k (all parts odd), reverse-lexicographic.
pub fn enum_odd(k: u32) -> Vec<Partition> {
    enumerate(k, k, |p| p % 2 == 1, false)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionKind {
    Strict,
    Odd,
}

/// All bipartitions (λ, μ) of total size k of the given kind, ordered by
/// ascending |λ| and then by component order.
pub fn enum_bipartitions(k: u32, kind: PartitionKind) -> Vec<BiPartition> {
    let single = |j: u32| match kind {
        PartitionKind::Strict => enum_strict(j),
        PartitionKind::Odd => enum_odd(j),
    };
    let mut out = Vec::new();
    for s in 0..=k {
        let firsts = single(s);
        let seconds = single(k - s);
        for f in &firsts {
            for g in &seconds {
                out.push(BiPartition::new(f.clone(), g.clone()));
            }
        }
    }
    out
}

/// Sign/type data attached to a strict bipartition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassData {
    /// (−1)^(k − l(λ) − l(μ)).
    pub sign: i8,
    /// 1 exactly when sign = +1.
    pub eps: u8,
    /// Parity of l(λ) + l(μ).
    pub d: u8,
}

pub fn class_maps(pair: &BiPartition) -> Result<ClassData, QdError> {
    if !pair.first.is_strict() || !pair.second.is_strict() {
        return Err(QdError::InvalidPartition(format!(
            "class_maps needs a strict pair, got {}",
            pair.label()
        )));
    }
    let k = pair.k() as usize;
    let l = pair.total_len();
    let sign = if (k.wrapping_sub(l)) % 2 == 0 { 1 } else { -1 };
    Ok(ClassData { sign, eps: u8::from(sign == 1), d: (l % 2) as u8 })
}

/// Letters of group words. `TauPrime(i)` is the macro-letter τ'_i, kept
/// unexpanded so printed class labels stay readable; it expands to
/// γ_(i−1)⋯γ_1 τ' γ_1⋯γ_(i−1) at evaluation time.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Letter {
    TauPrime(usize),
    Gamma(usize),
}

/// Fully expanded alphabet: the generator τ' and the γ_j.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimLetter {
    Tau,
    Gamma(usize),
}

/// A signed word in the generators, with macro-letters for the τ'_i.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenWord {
    pub sign: i8,
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn identity() -> Self {
        GenWord { sign: 1, letters: Vec::new() }
    }

    /// Expand macro-letters to the primitive alphabet {τ', γ_1, …}.
    pub fn expand(&self) -> Vec<PrimLetter> {
        let mut out = Vec::new();
        for l in &self.letters {
            match l {
                Letter::Gamma(j) => out.push(PrimLetter::Gamma(*j)),
                Letter::TauPrime(i) => {
                    for j in (1..*i).rev() {
                        out.push(PrimLetter::Gamma(j));
                    }
                    out.push(PrimLetter::Tau);
                    for j in 1..*i {
                        out.push(PrimLetter::Gamma(j));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut pieces = Vec::new();
        for l in &self.letters {
            match l {
                Letter::TauPrime(1) => pieces.push("t'".to_string()),
                Letter::TauPrime(i) => pieces.push(format!("t'{}", i)),
                Letter::Gamma(j) => pieces.push(format!("g{}", j)),
            }
        }
        write!(f, "{}", pieces.join("."))
    }
}

/// The class word w indexed by an odd bipartition (κ, ν) with |κ| + |ν| = k:
/// w = w_1⋯w_l w'_1⋯w'_l' with w_i = γ_(a+1)⋯γ_(a+κ_i−1) for a = κ_1+⋯+κ_(i−1)
/// and w'_i = γ_(b+1)⋯γ_(b+ν_i−1) τ'_(b+ν_i) for b = |κ| + ν_1+⋯+ν_(i−1).
pub fn build_word(pair: &BiPartition, k: u32) -> Result<GenWord, QdError> {
    if pair.k() != k {
        return Err(QdError::InvalidInput(format!(
            "word sizes: |{}| = {} but k = {}",
            pair.label(),
            pair.k(),
            k
        )));
    }
    if !pair.first.is_odd() || !pair.second.is_odd() {
        return Err(QdError::InvalidPartition(format!(
            "build_word needs an odd pair, got {}",
            pair.label()
        )));
    }
    let mut letters = Vec::new();
    let mut a: usize = 0;
    for &kappa_i in pair.first.parts() {
        for j in (a + 1)..(a + kappa_i as usize) {
            letters.push(Letter::Gamma(j));
        }
        a += kappa_i as usize;
    }
    let mut b: usize = pair.first.size() as usize;
    for &nu_i in pair.second.parts() {
        for j in (b + 1)..(b + nu_i as usize) {
            letters.push(Letter::Gamma(j));
        }
        letters.push(Letter::TauPrime(b + nu_i as usize));
        b += nu_i as usize;
    }
    Ok(GenWord { sign: 1, letters })
}
