//! Partitions and the parity-constrained partition sets 𝒫_X that classify
//! nilpotent orbits of the classical Lie algebras.
//!
//! * `sl_N` (type A): all partitions of N;
//! * `so_N` (types B, D): partitions of N in which every even part occurs
//!   with even multiplicity;
//! * `sp_N` (type C): partitions of N in which every odd part occurs with
//!   even multiplicity.
//!
//! The `collapse` map sends an arbitrary partition λ of N to the largest
//! element of 𝒫_X dominated by λ; it is implemented by the standard greedy
//! procedure and cross-validated against a brute-force dominance-maximum
//! search in the test suite.

use crate::rootsys::TypeLabel;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Build from arbitrary part order; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.0.iter().filter(|&&p| p == v).count()
    }

    pub fn num_odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Conjugate (transposed Young diagram) partition.
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition(Vec::new());
        }
        let cols = self.0[0];
        let t = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(t)
    }

    /// Dominance order: every partial sum of `self` is ≥ that of `other`.
    /// Only meaningful between partitions of the same number.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.sum(), other.sum());
        let n = self.0.len().max(other.0.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All parts even (for a D-type partition this is the "very even" case,
    /// which labels two distinct orbits).
    pub fn is_very_even(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&p| p % 2 == 0)
    }

    /// Parse a comma-separated list like `4,4,1`.
    pub fn parse(s: &str) -> Result<Partition, Error> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid partition part: {tok:?}")))?;
            parts.push(p);
        }
        if parts.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let sorted = {
            let mut q = parts.clone();
            q.sort_unstable_by(|a, b| b.cmp(a));
            q
        };
        if sorted != parts {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing: {s:?}"
            )));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parity constraint of 𝒫_X: which part values must occur with even
/// multiplicity.  Type A imposes none; B and D constrain even parts; C
/// constrains odd parts.
fn constrained(label: TypeLabel, value: usize) -> bool {
    match label {
        TypeLabel::A => false,
        TypeLabel::B | TypeLabel::D => value % 2 == 0,
        TypeLabel::C => value % 2 == 1,
        _ => panic!("partition-classified orbits exist only for classical types"),
    }
}

/// Membership in 𝒫_X (parity constraints only; the total is the caller's
/// concern).
pub fn is_valid_for(lambda: &Partition, label: TypeLabel) -> bool {
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut m = 0;
        while i < parts.len() && parts[i] == v {
            m += 1;
            i += 1;
        }
        if constrained(label, v) && m % 2 == 1 {
            return false;
        }
    }
    true
}

/// X-collapse: the dominance-largest element of 𝒫_X below λ.
///
/// Greedy step: pick the largest constrained part value with odd
/// multiplicity, shrink its last occurrence by one box, and give the box to
/// the first later row that can accept it.
pub fn collapse(lambda: &Partition, label: TypeLabel) -> Partition {
    if label == TypeLabel::A {
        return lambda.clone();
    }
    let mut d = lambda.parts().to_vec();
    loop {
        // Largest constrained value with odd multiplicity, if any.
        let bad = d
            .iter()
            .copied()
            .filter(|&v| constrained(label, v) && d.iter().filter(|&&x| x == v).count() % 2 == 1)
            .max();
        let Some(v) = bad else { break };
        let i = d.iter().rposition(|&x| x == v).unwrap();
        d[i] -= 1;
        let j = (i + 1..d.len()).find(|&j| d[j] + 2 <= v);
        match j {
            Some(j) => d[j] += 1,
            None => d.push(1),
        }
        d.retain(|&x| x > 0);
    }
    let out = Partition::new(d);
    debug_assert!(is_valid_for(&out, label));
    debug_assert!(lambda.dominates(&out));
    out
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All elements of 𝒫_X summing to `n`.
pub fn valid_partitions(label: TypeLabel, n: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| is_valid_for(p, label))
        .collect()
}
