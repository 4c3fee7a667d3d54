//! Admissible levels, the level-to-orbit map `O[k]`, and decision procedures
//! for nonvanishing, associated varieties, and C₂-cofiniteness.
//!
//! A level `k` is admissible exactly when `κ = k + h∨` is a positive rational
//! whose normal form selects one of two families:
//!
//! * **Principal** `k = −h∨ + p/q` with `gcd(p,q) = gcd(q,r∨) = 1`, `p ≥ h∨`;
//! * **Coprincipal** `k = −h∨ + p/(r∨q)` with `gcd(p,q) = gcd(p,r∨) = 1`,
//!   `p ≥ h_𝔤` (the Coxeter number).
//!
//! For simply-laced types (`r∨ = 1`) the families coincide and the normal
//! form is always Principal.  A level is **degenerate** when `q < h_𝔤`
//! (Principal) resp. `q < ^Lh∨` (Coprincipal); degenerate levels carry the
//! nilpotent orbit `O[k] = O_q` resp. `^LO_q`, which governs the associated
//! variety and the C₂-cofiniteness criterion `f ∈ O[k]`.

use crate::orbits::{self, Orbit};
use crate::rat::{rat, Rat};
use crate::rootsys::{RootSystem, SimpleType, Vector};
use crate::Error;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The two admissibility families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Principal,
    Coprincipal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Principal => write!(f, "principal"),
            Family::Coprincipal => write!(f, "coprincipal"),
        }
    }
}

/// An admissible level in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleLevel {
    st: SimpleType,
    k: Rat,
    family: Family,
    p: i64,
    q: i64,
    degenerate: bool,
}

impl AdmissibleLevel {
    pub fn simple_type(&self) -> SimpleType {
        self.st
    }

    /// The level itself, `k = κ − h∨`.
    pub fn k(&self) -> &Rat {
        &self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Whether `q` lies below the degeneracy threshold (`h_𝔤` for Principal,
    /// `^Lh∨` for Coprincipal); exactly then `O[k]` is a proper orbit.
    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    /// `κ = k + h∨`: `p/q` for Principal, `p/(r∨q)` for Coprincipal.
    pub fn kappa(&self, rs: &RootSystem) -> Rat {
        match self.family {
            Family::Principal => Rat::new(self.p.into(), self.q.into()),
            Family::Coprincipal => Rat::new(self.p.into(), (rs.lacety() * self.q).into()),
        }
    }
}

impl fmt::Display for AdmissibleLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} p={} q={}{}",
            self.family,
            self.p,
            self.q,
            if self.degenerate {
                " (degenerate)"
            } else {
                " (non-degenerate)"
            }
        )
    }
}

/// Classify a rational level.  Returns the unique normal form, or `None`
/// when `k` is not admissible.
///
/// Writing `κ = k + h∨ = a/b` in lowest terms with `b ≥ 1`: `κ ≤ 0` is never
/// admissible; if `r∨ ∤ b` the form is Principal with `(p,q) = (a,b)` and
/// requires `p ≥ h∨`; if `r∨ | b` it is Coprincipal with `(p,q) = (a, b/r∨)`
/// and requires `p ≥ h_𝔤`.  All coprimality constraints hold automatically
/// in lowest terms.  The classification partitions the admissible rationals:
/// each `k` has at most one normal form, and `k` is recoverable from it.
pub fn classify_level(rs: &RootSystem, k: &Rat) -> Option<AdmissibleLevel> {
    let kappa = k + rat(rs.dual_coxeter());
    if !kappa.is_positive() {
        return None;
    }
    let p = i64::try_from(kappa.numer().clone()).ok()?;
    let b = i64::try_from(kappa.denom().clone()).ok()?;
    let rv = rs.lacety();
    let (family, q, threshold) = if rv > 1 && b % rv == 0 {
        (Family::Coprincipal, b / rv, rs.coxeter())
    } else {
        (Family::Principal, b, rs.dual_coxeter())
    };
    if p < threshold {
        return None;
    }
    let degenerate = match family {
        Family::Principal => q < rs.coxeter(),
        Family::Coprincipal => q < rs.dual_dual_coxeter(),
    };
    Some(AdmissibleLevel {
        st: rs.simple_type(),
        k: k.clone(),
        family,
        p,
        q,
        degenerate,
    })
}

/// The simple system Π̂(λ) of the integral affine root system at `λ = kΛ₀`,
/// as `(finite root, δ-coefficient)` pairs: `{−θ+qδ, α₁, …, α_ℓ}` for
/// Principal and `{−θ_s+qδ, α₁, …, α_ℓ}` for Coprincipal.
pub fn integral_simple_roots(rs: &RootSystem, level: &AdmissibleLevel) -> Vec<(Vector, i64)> {
    let affine_root = match level.family {
        Family::Principal => rs.theta(),
        Family::Coprincipal => rs.theta_short(),
    };
    let mut out = vec![(
        affine_root.iter().map(|c| -c).collect::<Vector>(),
        level.q,
    )];
    out.extend(rs.simple_roots().iter().map(|a| (a.clone(), 0)));
    out
}

/// The orbit `O[k]` (`O_q` for Principal, `^LO_q` for Coprincipal), paired
/// with a flag marking the level as non-degenerate.  For non-degenerate
/// levels the returned orbit is the principal orbit and the flag is `true`.
pub fn orbit_of_level(rs: &RootSystem, level: &AdmissibleLevel) -> Result<(Orbit, bool), Error> {
    let orbit = match level.family {
        Family::Principal => orbits::compute_oq(rs, level.q)?,
        Family::Coprincipal => orbits::compute_loq(rs, level.q)?,
    };
    Ok((orbit, !level.degenerate))
}

/// Whether the reduced module `H⁰` attached to `(k, f)` is nonzero:
/// `ht(f) < 2q` for Principal levels, `ht∨(f) < 2q` for Coprincipal.
pub fn hred_nonzero(level: &AdmissibleLevel, orbit: &Orbit) -> bool {
    let key = match level.family {
        Family::Principal => orbit.height(),
        Family::Coprincipal => orbit.dual_height(),
    };
    key < 2 * level.q
}

/// The variety attached to an admissible level.
#[derive(Clone, Debug)]
pub enum VarietyDescriptor {
    /// Degenerate level: the closure of `O[k]`.
    OrbitClosure { orbit: Orbit },
    /// Non-degenerate level: the variety contains the nilpotent cone; the
    /// expected equality is conjectural, and the flag records that status.
    ContainsNullcone { conjecturally_equal: bool },
}

/// The associated variety of `L(kΛ₀)`: an orbit closure in the degenerate
/// case, containment of the full nilpotent cone otherwise.
pub fn associated_variety(
    rs: &RootSystem,
    level: &AdmissibleLevel,
) -> Result<VarietyDescriptor, Error> {
    if level.degenerate {
        let (orbit, _) = orbit_of_level(rs, level)?;
        Ok(VarietyDescriptor::OrbitClosure { orbit })
    } else {
        Ok(VarietyDescriptor::ContainsNullcone {
            conjecturally_equal: true,
        })
    }
}

/// C₂-cofiniteness of the W-algebra module attached to `(k, f)`: true iff
/// `f ∈ O[k]`, i.e. the orbit equals `orbit_of_level`.  Only defined for
/// degenerate levels; non-degenerate input is an error.
pub fn is_c2_cofinite(
    rs: &RootSystem,
    level: &AdmissibleLevel,
    orbit: &Orbit,
) -> Result<bool, Error> {
    if !level.degenerate {
        return Err(Error::InvalidLevel(format!(
            "C₂-cofiniteness criterion needs a degenerate level, got {level}"
        )));
    }
    let (ok, _) = orbit_of_level(rs, level)?;
    Ok(orbit.algebra() == ok.algebra() && orbit.label() == ok.label())
}
