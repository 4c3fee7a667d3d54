//! Truncated q-series with exact rational coefficients.
//!
//! A [`QSeries`] represents a finite expansion
//!
//! ```text
//!   q^offset · Σ_{0 ≤ i ≤ trunc2}  c_i q^{i/2},
//! ```
//!
//! exact modulo `q^{offset + (trunc2+1)/2}`.  Exponents live on the
//! half-integer grid — characters of reduced modules mix integer and
//! half-integer powers — and are stored doubled, so all indexing is exact
//! integer arithmetic.  The `offset` is an arbitrary rational global shift.
//!
//! Arithmetic (addition, multiplication, multiplication by powers of
//! `(1 − q^j)`, including negative powers via the geometric series) respects
//! the truncation exactly: no coefficient inside the window is ever
//! approximated.

use crate::rat::{rat_to_string, rzero, Rat};
use num_traits::Zero;
use serde_json::{json, Value};

/// A truncated series `q^offset · Σ c_i q^{i/2}` with exact coefficients.
#[derive(Clone, Debug)]
pub struct QSeries {
    offset: Rat,
    /// `coeffs[i]` is the coefficient of `q^{offset + i/2}`.
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// The zero series, known modulo `q^{offset + (trunc2+1)/2}`.
    pub fn zero(offset: Rat, trunc2: usize) -> QSeries {
        QSeries {
            offset,
            coeffs: vec![rzero(); trunc2 + 1],
        }
    }

    /// The constant series 1 with offset 0.
    pub fn one(trunc2: usize) -> QSeries {
        let mut s = QSeries::zero(rzero(), trunc2);
        s.coeffs[0] = Rat::from_integer(1.into());
        s
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Largest stored doubled exponent (relative to the offset).
    pub fn trunc2(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^{offset + i2/2}`.
    pub fn coeff2(&self, i2: usize) -> Rat {
        self.coeffs.get(i2).cloned().unwrap_or_else(rzero)
    }

    /// Coefficient of `q^e` for an absolute exponent `e`; zero when `e` is
    /// off the stored grid.
    pub fn coeff(&self, e: &Rat) -> Rat {
        let rel = (e - &self.offset) * Rat::from_integer(2.into());
        if !rel.is_integer() || rel < rzero() {
            return rzero();
        }
        match usize::try_from(rel.to_integer()) {
            Ok(i2) => self.coeff2(i2),
            Err(_) => rzero(),
        }
    }

    /// Add `c` to the coefficient of `q^{offset + i2/2}`.  Terms beyond the
    /// truncation window are discarded.
    pub fn add_term2(&mut self, i2: usize, c: &Rat) {
        if i2 < self.coeffs.len() {
            self.coeffs[i2] += c;
        }
    }

    /// Whether every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// First nonzero term as `(absolute exponent, coefficient)`.
    pub fn leading(&self) -> Option<(Rat, Rat)> {
        self.coeffs.iter().enumerate().find_map(|(i, c)| {
            if c.is_zero() {
                None
            } else {
                let e = &self.offset + Rat::new((i as i64).into(), 2.into());
                Some((e, c.clone()))
            }
        })
    }

    /// Exact product; offsets add and the window shrinks to the smaller of
    /// the two factors' windows.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc2 = self.trunc2().min(other.trunc2());
        let mut out = QSeries::zero(&self.offset + &other.offset, trunc2);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > trunc2 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > trunc2 {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiply in place by `(1 − q^{j2/2})^e`; `e` may be negative, in
    /// which case the inverse geometric series is used.
    pub fn mul_one_minus_qpow(&mut self, j2: usize, e: i64) {
        assert!(j2 >= 1, "power of q must be positive");
        let n = self.coeffs.len();
        if e >= 0 {
            for _ in 0..e {
                for i in (0..n.saturating_sub(j2)).rev() {
                    let t = self.coeffs[i].clone();
                    self.coeffs[i + j2] -= t;
                }
            }
        } else {
            // 1/(1−q^j) = Σ_{m≥0} q^{jm}: new[i] = old[i] + new[i−j].
            for _ in 0..(-e) {
                for i in j2..n {
                    let t = self.coeffs[i - j2].clone();
                    self.coeffs[i] += t;
                }
            }
        }
    }

    /// Multiply by `Π_{j≥1} (1 − q^j)^e` truncated to the window.
    pub fn mul_eta_power(&mut self, e: i64) {
        let n = self.coeffs.len();
        let mut j2 = 2;
        while j2 < n {
            self.mul_one_minus_qpow(j2, e);
            j2 += 2;
        }
    }

    /// Multiply by `Π_{j≥0} (1 − q^{1/2+j})^e` truncated to the window.
    pub fn mul_half_shifted_power(&mut self, e: i64) {
        let n = self.coeffs.len();
        let mut j2 = 1;
        while j2 < n {
            self.mul_one_minus_qpow(j2, e);
            j2 += 2;
        }
    }

    /// Truncation-aware equality: the offsets must agree after trimming
    /// leading zeros, and all coefficients on the common window must match.
    pub fn eq_truncated(&self, other: &QSeries) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (la, ca) = self.leading().unwrap();
        let (lb, cb) = other.leading().unwrap();
        if la != lb || ca != cb {
            return false;
        }
        // Compare on the overlap of the two windows, in absolute exponents.
        let hi_a = &self.offset + Rat::new((self.trunc2() as i64).into(), 2.into());
        let hi_b = &other.offset + Rat::new((other.trunc2() as i64).into(), 2.into());
        let hi = hi_a.min(hi_b);
        let mut e = la;
        let half = Rat::new(1.into(), 2.into());
        while e <= hi {
            if self.coeff(&e) != other.coeff(&e) {
                return false;
            }
            e += &half;
        }
        true
    }

    /// JSON form `{offset, terms}`: `offset` is a fraction string and each
    /// term is `[i2, 2, c]` — the coefficient `c` (a fraction string) of
    /// `q^{offset + i2/2}`.  Zero coefficients are omitted.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!([i, 2, rat_to_string(c)]))
            .collect();
        json!({
            "offset": rat_to_string(&self.offset),
            "trunc2": self.trunc2(),
            "terms": terms,
        })
    }

    /// Human-readable expansion `c₀ + c₁ q^{e₁} + …` in absolute exponents.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = &self.offset + Rat::new((i as i64).into(), 2.into());
            let coeff = rat_to_string(c);
            let term = if e.is_zero() {
                coeff
            } else {
                let ex = if e.is_integer() {
                    e.to_integer().to_string()
                } else {
                    format!("({})", rat_to_string(&e))
                };
                if c == &Rat::from_integer(1.into()) {
                    format!("q^{ex}")
                } else {
                    format!("{coeff}*q^{ex}")
                }
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}
