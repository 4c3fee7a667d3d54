//! Exceptional-pair detection.
//!
//! A pair `(q, f)` — a positive integer and a nilpotent element — is
//! *exceptional* when
//!
//! * **(a)** `q` is at least the largest Coxeter number among the simple
//!   factors of the minimal Levi subalgebra containing `f`, and
//! * **(b)** `dim 𝔤^f = dim 𝔤^{σ_q}`, where `σ_q` is the inner automorphism
//!   scaling each root vector `x_α` by `ε^{ht α}` for a primitive `q`-th root
//!   of unity `ε` (the Cartan subalgebra is fixed point-wise).
//!
//! For classical algebras the minimal Levi is read off the partition:
//! repeatedly extracting a pair of equal parts `(d, d)` splits off a type
//! `A_{d−1}` factor (Coxeter number `d`); the leftover distinct parts form a
//! distinguished orbit in a smaller algebra of the same family, whose minimal
//! Levi is that whole algebra.  In type A every individual part `d` is its own
//! `A_{d−1}` factor and nothing is left over.  For the five exceptional
//! algebras the minimal Levi is exactly what the orbit's Bala–Carter label
//! names, so its factor types are parsed from the label itself.
//!
//! Every exceptional pair turns out to consist of `O_q` together with `q`;
//! [`exceptional_w_algebras`] enumerates them and hard-asserts that fact.

use crate::orbits::{normalize_label, oq_from_catalog, orbit_catalog, Orbit};
use crate::partitions::Partition;
use crate::rootsys::{RootSystem, TypeLabel};
use crate::Error;
use num_integer::Integer;

/// `dim 𝔤^{σ_q}`: the rank plus the number of roots whose height is divisible
/// by `q`.
pub fn dim_sigma_fixed(rs: &RootSystem, q: i64) -> i64 {
    assert!(q >= 1, "q must be positive");
    let divisible = rs
        .root_heights()
        .iter()
        .filter(|h| h.rem_euclid(q) == 0)
        .count();
    rs.rank() as i64 + divisible as i64
}

/// `true` iff `gcd(q, r∨) = 1` for the lacety `r∨` of the system.
pub fn coprime_to_lacety(rs: &RootSystem, q: i64) -> bool {
    q.gcd(&rs.lacety()) == 1
}

/// Simple factors of the minimal Levi subalgebra containing a classical
/// nilpotent element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    a_factors: Vec<usize>,
    residual: Option<(TypeLabel, Partition)>,
}

impl LeviDecomposition {
    /// The type-A factors; an entry `d` is a factor of type `A_{d−1}`, whose
    /// Coxeter number is `d`.
    pub fn a_factors(&self) -> &[usize] {
        &self.a_factors
    }

    /// The leftover distinguished orbit, as (family, partition with distinct
    /// parts).  `None` for type A, where the Levi is a product of A-factors.
    pub fn residual(&self) -> Option<(TypeLabel, &Partition)> {
        self.residual.as_ref().map(|(l, p)| (*l, p))
    }

    /// Largest Coxeter number among the simple factors.  Factors too small to
    /// carry roots (`A_0`, `so_1`, `so_2`, the empty residual) contribute 1,
    /// i.e. no constraint.
    pub fn max_coxeter(&self) -> i64 {
        let mut max = 1i64;
        for &d in &self.a_factors {
            max = max.max(d as i64);
        }
        if let Some((family, res)) = &self.residual {
            let n = res.sum() as i64;
            let coxeter = match family {
                // so_n: B_{(n−1)/2} for odd n (Coxeter n−1), D_{n/2} for even
                // n (Coxeter n−2).
                TypeLabel::B | TypeLabel::D => {
                    if n % 2 == 1 {
                        n - 1
                    } else {
                        n - 2
                    }
                }
                // sp_n: C_{n/2}, Coxeter n.
                TypeLabel::C => n,
                other => unreachable!("no classical residual for type {other}"),
            };
            max = max.max(coxeter);
        }
        max
    }
}

/// Minimal Levi subalgebra containing a classical nilpotent element with the
/// given partition.
pub fn minimal_levi_classical(family: TypeLabel, lambda: &Partition) -> LeviDecomposition {
    if family == TypeLabel::A {
        return LeviDecomposition {
            a_factors: lambda.parts().to_vec(),
            residual: None,
        };
    }
    let parts = lambda.parts();
    let mut a_factors = Vec::new();
    let mut residual_parts = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            a_factors.push(parts[i]);
            i += 2;
        } else {
            residual_parts.push(parts[i]);
            i += 1;
        }
    }
    debug_assert!(
        residual_parts.windows(2).all(|w| w[0] > w[1]),
        "leftover parts must be distinct"
    );
    LeviDecomposition {
        a_factors,
        residual: Some((family, Partition::new(residual_parts))),
    }
}

/// Largest Coxeter number among the simple factors named by a Bala–Carter
/// label of an exceptional algebra.
///
/// The label is a `+`-separated product of factors, each optionally preceded
/// by a multiplicity digit (`2A2`), optionally short-root-marked (`Ã1`), and
/// optionally decorated with a distinguished-orbit tag (`E8(a7)`, `C3(a1)`)
/// that names a non-principal orbit *inside* the factor and therefore does
/// not change the factor's type.  A label wrapped in parentheses with
/// trailing primes (`(A3+A1)'`, `(A5)''`) distinguishes conjugacy classes of
/// the same Levi type; primes and the outer parentheses are ignored.  The
/// zero orbit's label `0` names the Cartan subalgebra: no constraint.
pub fn bala_carter_max_coxeter(label: &str) -> Result<i64, Error> {
    let s = normalize_label(label);
    if s == "0" {
        return Ok(1);
    }
    let s = s.trim_end_matches(['\'', '′', '″']);
    let s = unwrap_outer_parens(s);
    let mut max = 1i64;
    for piece in s.split('+') {
        max = max.max(factor_coxeter(piece.trim(), label)?);
    }
    Ok(max)
}

fn unwrap_outer_parens(s: &str) -> &str {
    if !(s.starts_with('(') && s.ends_with(')') && s.len() >= 2) {
        return s;
    }
    let inner = &s[1..s.len() - 1];
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    // The leading '(' closes before the end: not an outer pair.
                    return s;
                }
            }
            _ => {}
        }
    }
    if depth == 0 {
        inner
    } else {
        s
    }
}

fn factor_coxeter(piece: &str, label: &str) -> Result<i64, Error> {
    let bad = || Error::Parse(format!("unrecognized Bala-Carter label `{label}`"));
    // Multiplicity prefix (`2A2`) does not affect the factor type.
    let rest = piece.trim_start_matches(|c: char| c.is_ascii_digit());
    // A short-root factor (`Ã1`, `Ã2`) is a type-A factor: the marked letter
    // stands in for the `A`.
    let (letter, tail) = if let Some(t) = rest.strip_prefix('Ã') {
        ('A', t)
    } else {
        let mut chars = rest.chars();
        let l = chars.next().ok_or_else(bad)?;
        (l, chars.as_str())
    };
    let digits: String = tail.chars().take_while(|c| c.is_ascii_digit()).collect();
    // Anything after the rank digits is a distinguished-orbit decoration
    // such as `(a1)`; it names an orbit inside the factor, not a new factor.
    let rank: i64 = digits.parse().map_err(|_| bad())?;
    if rank < 1 {
        return Err(bad());
    }
    Ok(match letter {
        'A' => rank + 1,
        'B' | 'C' => 2 * rank,
        'D' => 2 * rank - 2,
        'E' if (6..=8).contains(&rank) => match rank {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        'F' if rank == 4 => 12,
        'G' if rank == 2 => 6,
        _ => return Err(bad()),
    })
}

/// Largest Coxeter number among the simple factors of the minimal Levi
/// containing a representative of `orbit`.
pub fn minimal_levi_max_coxeter(orbit: &Orbit) -> i64 {
    match orbit.partition() {
        Some(lambda) => minimal_levi_classical(orbit.algebra().label(), lambda).max_coxeter(),
        None => bala_carter_max_coxeter(orbit.label())
            .expect("embedded orbit records carry parseable labels"),
    }
}

/// Test conditions (a) and (b) of the exceptional-pair definition.
pub fn is_exceptional_pair(rs: &RootSystem, orbit: &Orbit, q: i64) -> bool {
    assert!(q >= 1, "q must be positive");
    q >= minimal_levi_max_coxeter(orbit) && orbit.dim_centralizer(rs) == dim_sigma_fixed(rs, q)
}

/// One admissible denominator carrying a simple W-algebra.
#[derive(Clone, Debug)]
pub struct ExceptionalRow {
    pub q: i64,
    pub orbit: Orbit,
    /// Whether the orbit is the principal one (true for every `q ≥ h`; the
    /// row at `q = h` represents the whole unbounded range).
    pub principal: bool,
}

/// Enumerate the exceptional pairs with `gcd(q, r∨) = 1`, ascending in `q`
/// up to and including the first principal one.
///
/// Every `q ≥ h` coprime to `r∨` forms an exceptional pair with the principal
/// orbit, so the final row stands for that whole unbounded regime; its `q` is
/// the regime's smallest admissible denominator (which exceeds `h` exactly
/// when `gcd(h, r∨) ≠ 1`, e.g. `q = 7` for G2 and `q = 13` for F4).
///
/// Hard-asserts that every orbit forming an exceptional pair with `q` is
/// `O_q`; a violation would falsify the classification this enumeration
/// rests on, so it is a panic rather than an `Err`.
pub fn exceptional_w_algebras(rs: &RootSystem) -> Result<Vec<ExceptionalRow>, Error> {
    let catalog = orbit_catalog(rs)?;
    let principal_dim = catalog
        .last()
        .expect("catalogs are nonempty")
        .dim();
    let mut rows = Vec::new();
    for q in 1.. {
        assert!(
            q <= rs.coxeter() + rs.lacety(),
            "a principal row must appear by q = h + r∨"
        );
        if !coprime_to_lacety(rs, q) {
            continue;
        }
        let oq = oq_from_catalog(rs, &catalog, q)?;
        let mut hit = None;
        for orbit in &catalog {
            if is_exceptional_pair(rs, orbit, q) {
                assert_eq!(
                    (orbit.label(), orbit.dim()),
                    (oq.label(), oq.dim()),
                    "{}: exceptional orbit at q={q} must be O_q",
                    rs.simple_type()
                );
                hit = Some(orbit.clone());
            }
        }
        if let Some(orbit) = hit {
            let principal = orbit.dim() == principal_dim;
            rows.push(ExceptionalRow { q, orbit, principal });
            if principal {
                break;
            }
        }
    }
    Ok(rows)
}
