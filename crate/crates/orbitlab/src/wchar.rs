//! The affine layer: dot action of the integral Weyl group, orbit
//! enumeration, q-series characters of reduced modules, central charges, and
//! the denominator-identity check.
//!
//! Affine weights are triples `λ = λ̄ + kΛ₀ + dδ`.  The normalized invariant
//! form extends by `(Λ₀|Λ₀) = (δ|δ) = (λ̄|Λ₀) = (λ̄|δ) = 0`, `(Λ₀|δ) = 1`, so
//! the coroot of a real affine root `β + nδ` pairs as
//!
//! ```text
//!   ⟨λ, (β+nδ)∨⟩ = ⟨λ̄, β∨⟩ + n · (2/(β|β)) · k,
//! ```
//!
//! with `2/(β|β) = 1` for long `β` and `r∨` for short `β`.  The dot action is
//! `w∘λ = w(λ+ρ̂) − ρ̂` with `ρ̂ = ρ + h∨Λ₀`.
//!
//! Characters are graded by `−⟨·, D+x₀⟩` where `x₀` is the Dynkin grading
//! element of a nilpotent orbit; for the weights produced here the grading
//! pairing is `⟨λ, D+x₀⟩ = d + (λ̄|x₀)`.  All series are truncated exactly
//! ([`QSeries`]), with exponents on the half-integer grid.

use crate::admissible::{integral_simple_roots, AdmissibleLevel, Family};
use crate::orbits::{graded_dim, Orbit};
use crate::qseries::QSeries;
use crate::rat::{rat, rat_to_i64, ratio, rzero, Rat};
use crate::rootsys::{RootSystem, Vector};
use crate::Error;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, VecDeque};

/// Hard cap on Weyl-orbit enumeration, to fail loudly instead of hanging if
/// a pruning precondition is ever violated.
const MAX_ORBIT_SIZE: usize = 4_000_000;

/// An affine weight `λ̄ + kΛ₀ + dδ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    /// Classical part λ̄, in the ambient coordinates of the root system.
    pub finite: Vector,
    /// Coefficient of Λ₀ (the level, λ(K)).
    pub level: Rat,
    /// Coefficient of δ (the energy, λ(D)).
    pub d_coeff: Rat,
}

impl AffineWeight {
    /// The weight `kΛ₀`.
    pub fn vacuum(rs: &RootSystem, k: &Rat) -> AffineWeight {
        AffineWeight {
            finite: vec![rzero(); rs.ambient_dim()],
            level: k.clone(),
            d_coeff: rzero(),
        }
    }

    /// `⟨λ, D + x₀⟩ = d + (λ̄|x₀)` for a coweight `x₀`.
    pub fn pairing_dx0(&self, rs: &RootSystem, x0: &[Rat]) -> Rat {
        &self.d_coeff + rs.pairing(&self.finite, x0)
    }

    fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            finite: self
                .finite
                .iter()
                .zip(&other.finite)
                .map(|(a, b)| a + b)
                .collect(),
            level: &self.level + &other.level,
            d_coeff: &self.d_coeff + &other.d_coeff,
        }
    }

    fn sub(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            finite: self
                .finite
                .iter()
                .zip(&other.finite)
                .map(|(a, b)| a - b)
                .collect(),
            level: &self.level - &other.level,
            d_coeff: &self.d_coeff - &other.d_coeff,
        }
    }

    fn key(&self) -> (Vector, Rat) {
        (self.finite.clone(), self.d_coeff.clone())
    }
}

/// `ρ̂ = ρ + h∨Λ₀`.
pub fn rho_hat(rs: &RootSystem) -> AffineWeight {
    AffineWeight {
        finite: rs.rho().clone(),
        level: rat(rs.dual_coxeter()),
        d_coeff: rzero(),
    }
}

/// `⟨ν, (β+nδ)∨⟩` for a real affine root `β + nδ`.
pub fn affine_coroot_pairing(rs: &RootSystem, nu: &AffineWeight, beta: &[Rat], n: i64) -> Rat {
    let two_over_len = rat(2) / rs.form(beta, beta);
    rs.pairing(&nu.finite, &rs.coroot(beta)) + rat(n) * two_over_len * &nu.level
}

/// Reflection of an affine weight in the real root `β + nδ` (linear action,
/// not the dot action): `ν − ⟨ν,(β+nδ)∨⟩(β+nδ)`.
pub fn reflect_affine(rs: &RootSystem, nu: &AffineWeight, beta: &[Rat], n: i64) -> AffineWeight {
    let c = affine_coroot_pairing(rs, nu, beta, n);
    AffineWeight {
        finite: nu
            .finite
            .iter()
            .zip(beta)
            .map(|(x, b)| x - &c * b)
            .collect(),
        level: nu.level.clone(),
        d_coeff: &nu.d_coeff - &c * rat(n),
    }
}

/// Dot reflection `s_{β+nδ}∘λ = s_{β+nδ}(λ+ρ̂) − ρ̂`.
pub fn dot_reflect(rs: &RootSystem, lambda: &AffineWeight, beta: &[Rat], n: i64) -> AffineWeight {
    let rh = rho_hat(rs);
    reflect_affine(rs, &lambda.add(&rh), beta, n).sub(&rh)
}

/// One element of the dot orbit `Ŵ(λ)∘λ`.
#[derive(Clone, Debug)]
pub struct WeylOrbitElement {
    /// The weight `w∘λ`.
    pub weight: AffineWeight,
    /// `(−1)^{ℓ_λ(w)}`.
    pub parity: i64,
    /// Doubled exponent `2(⟨λ, D+x₀⟩ − ⟨w∘λ, D+x₀⟩) ≥ 0`.
    pub exp2: i64,
    /// A word for `w` in the generators (indices into Π̂(λ)); its length has
    /// the parity of `ℓ_λ(w)`.
    pub word: Vec<usize>,
}

/// Enumerate the dot orbit of `λ` under the integral Weyl group Ŵ(λ),
/// keeping the elements whose exponent `⟨λ−w∘λ, D+x₀⟩` is at most
/// `bound2/2`.
///
/// BFS over products of the reflections in Π̂(λ), deduplicating weights
/// (valid because `λ+ρ̂` is regular, so weight ↔ group element is a
/// bijection).  Pruning is sound because every generator has
/// `⟨α, D+x₀⟩ ≥ 0` (asserted), so exponents are non-decreasing along reduced
/// words.  Output is sorted by (exponent, weight) and is deterministic.
///
/// Panics if `λ+ρ̂` is not regular dominant integral for Π̂(λ).
pub fn enumerate_weyl_orbit(
    rs: &RootSystem,
    level: &AdmissibleLevel,
    lambda: &AffineWeight,
    x0: &[Rat],
    bound2: i64,
) -> Vec<WeylOrbitElement> {
    let gens = integral_simple_roots(rs, level);
    let rh = rho_hat(rs);
    let nu0 = lambda.add(&rh);

    // λ+ρ̂ must pair with every generator coroot in a positive integer, and
    // every generator must have non-negative grading pairing ⟨α, D+x₀⟩
    // (which makes exponents monotone along reduced words).
    for (beta, n) in &gens {
        let c = affine_coroot_pairing(rs, &nu0, beta, *n);
        let c = rat_to_i64(&c).expect("λ+ρ̂ must be integral for Π̂(λ)");
        assert!(c > 0, "λ+ρ̂ must be regular dominant for Π̂(λ), got {c}");
        let g2 = rat(2 * n) + rat(2) * rs.pairing(beta, x0);
        let g2 = rat_to_i64(&g2).expect("doubled grading pairing must be integral");
        assert!(g2 >= 0, "generator with negative grading pairing; orbit unbounded below");
    }

    let t2 = |nu: &AffineWeight| -> i64 {
        rat_to_i64(&(rat(2) * nu.pairing_dx0(rs, x0))).expect("doubled exponent must be integral")
    };
    let t0 = t2(&nu0);

    let mut seen: BTreeMap<(Vector, Rat), i64> = BTreeMap::new();
    seen.insert(nu0.key(), 1);
    let mut queue: VecDeque<(AffineWeight, i64, Vec<usize>)> = VecDeque::new();
    queue.push_back((nu0.clone(), 1, Vec::new()));
    let mut out = Vec::new();

    while let Some((nu, parity, word)) = queue.pop_front() {
        out.push(WeylOrbitElement {
            weight: nu.sub(&rh),
            parity,
            exp2: t0 - t2(&nu),
            word: word.clone(),
        });
        for (i, (beta, n)) in gens.iter().enumerate() {
            let next = reflect_affine(rs, &nu, beta, *n);
            let e2 = t0 - t2(&next);
            if e2 > bound2 {
                continue;
            }
            match seen.get(&next.key()) {
                Some(&p) => assert_eq!(
                    p, -parity,
                    "parity clash on rediscovered orbit element; dedup is unsound"
                ),
                None => {
                    seen.insert(next.key(), -parity);
                    let mut w = word.clone();
                    w.push(i);
                    queue.push_back((next, -parity, w));
                    assert!(seen.len() <= MAX_ORBIT_SIZE, "Weyl orbit blow-up");
                }
            }
        }
    }

    out.sort_by(|a, b| {
        (a.exp2, &a.weight.finite, &a.weight.d_coeff)
            .cmp(&(b.exp2, &b.weight.finite, &b.weight.d_coeff))
    });
    out
}

/// The set `Δ̂_f(λ)` of integral affine roots vanishing on `D+x₀`, as pairs
/// `(α, −α(x₀))` (the member is `α − α(x₀)δ`), plus the flag telling whether
/// it equals `Δ₀ = {α : α(x₀) = 0}`.
#[derive(Clone, Debug)]
pub struct DeltaF {
    pub roots: Vec<(Vector, Rat)>,
    pub equals_delta0: bool,
}

/// Compute `Δ̂_f(λ)` for `λ = kΛ₀` at the given level and orbit: a finite
/// root `α` contributes `α − α(x₀)δ` iff `α(x₀)` lies in `qℤ` (Principal);
/// for Coprincipal levels short roots need `α(x₀) ∈ qℤ` and long roots
/// `α(x₀) ∈ r∨qℤ`.
pub fn delta_f(rs: &RootSystem, level: &AdmissibleLevel, orbit: &Orbit) -> DeltaF {
    let x0 = orbit.x0();
    let q = level.q();
    let mut roots = Vec::new();
    let mut equals = true;
    for alpha in rs.roots() {
        let v = rs.pairing(alpha, &x0);
        let modulus = match level.family() {
            Family::Principal => q,
            Family::Coprincipal => {
                if rs.is_long(alpha) {
                    rs.lacety() * q
                } else {
                    q
                }
            }
        };
        let member = match rat_to_i64(&v) {
            Some(vi) => vi % modulus == 0,
            None => false,
        };
        if member {
            if !v.is_zero() {
                equals = false;
            }
            roots.push((alpha.clone(), -v));
        }
    }
    DeltaF {
        roots,
        equals_delta0: equals,
    }
}

/// The q-character of the reduced module attached to `(k, f)` and a
/// dominant classical weight `λ̄` (the full weight is `λ = λ̄ + kΛ₀`),
/// truncated at `q^{offset + order}`.
///
/// When `Δ̂_f(λ) ≠ Δ₀` the module vanishes and the zero series is returned.
/// Otherwise the character is
///
/// ```text
///   Σ_{y∈W⁰(λ)} (−1)^{ℓ_λ(y)} Π_{α∈Δ₀₊} ⟨y(λ+ρ̂),α∨⟩/⟨ρ,α∨⟩ · q^{−⟨y∘λ,D+x₀⟩}
///   · Π_{j≥1}(1−q^j)^{−dim 𝔤₀} · Π_{j≥0}(1−q^{1/2+j})^{−#Δ_{1/2}}
/// ```
///
/// where `W⁰(λ)` picks from each coset of the finite Weyl group `W₀` of
/// `Δ₀` the representative `y` with `y(λ+ρ̂)` strictly `Δ₀₊`-dominant,
/// `dim 𝔤₀ = ℓ + #Δ₀`, and `Δ_{1/2} = {α : α(x₀) = 1/2}`.  The η-power
/// `dim 𝔤₀` comes from the affine denominator: every root of Δ₀, of either
/// sign, contributes the factors `(1−q^n)` for all `n ≥ 1`.  (Sanity anchor:
/// at `f = 0`, `λ = Λ₀` in type A₁ the reduced module is the basic
/// representation, whose −D-graded dimensions `Σ_m p(n−m²)` this power
/// reproduces; see the unit tests.)
pub fn character_hred(
    rs: &RootSystem,
    level: &AdmissibleLevel,
    lambda_bar: &[Rat],
    orbit: &Orbit,
    order: i64,
) -> Result<QSeries, Error> {
    if order <= 0 {
        return Err(Error::Parse(format!("truncation order must be ≥ 1, got {order}")));
    }
    let x0 = orbit.x0();
    let offset = -rs.pairing(lambda_bar, &x0);
    let trunc2 = usize::try_from(2 * order).unwrap();

    if !delta_f(rs, level, orbit).equals_delta0 {
        return Ok(QSeries::zero(offset, trunc2));
    }

    let lambda = AffineWeight {
        finite: lambda_bar.to_vec(),
        level: level.k().clone(),
        d_coeff: rzero(),
    };
    // Regular dominant integral check, reported as an error rather than the
    // assertion inside the enumeration.
    let rh = rho_hat(rs);
    let nu0 = lambda.add(&rh);
    for (beta, n) in integral_simple_roots(rs, level) {
        let c = affine_coroot_pairing(rs, &nu0, &beta, n);
        if rat_to_i64(&c).map_or(true, |c| c <= 0) {
            return Err(Error::InvalidLevel(format!(
                "λ+ρ̂ pairs with a simple integral coroot in {c}, not a positive integer"
            )));
        }
    }

    let delta0_plus: Vec<&Vector> = rs
        .positive_roots()
        .iter()
        .filter(|a| rs.pairing(a, &x0).is_zero())
        .collect();
    let rho_products: Vec<Rat> = delta0_plus
        .iter()
        .map(|a| rs.pairing(rs.rho(), &rs.coroot(a)))
        .collect();
    let half = ratio(1, 2);
    let dim_half = rs.roots().iter().filter(|a| rs.pairing(a, &x0) == half).count();

    let mut numerator = QSeries::zero(offset.clone(), trunc2);
    'elements: for el in enumerate_weyl_orbit(rs, level, &lambda, &x0, 2 * order) {
        let nu = el.weight.add(&rh);
        let mut coeff = rat(el.parity);
        for (a, denom) in delta0_plus.iter().zip(&rho_products) {
            let num = rs.pairing(&nu.finite, &rs.coroot(a));
            if num.is_negative() {
                continue 'elements; // not the Δ₀₊-dominant coset representative
            }
            assert!(!num.is_zero(), "regular weight cannot pair to zero on Δ₀");
            coeff *= num / denom;
        }
        numerator.add_term2(usize::try_from(el.exp2).unwrap(), &coeff);
    }

    let eta_exp = -(rs.rank() as i64 + 2 * delta0_plus.len() as i64);
    numerator.mul_eta_power(eta_exp);
    numerator.mul_half_shifted_power(-(dim_half as i64));
    Ok(numerator)
}

/// Exact central charge of the W-algebra attached to `(f, k)`:
///
/// ```text
///   c(κ) = dim 𝔤₀ − ½ dim 𝔤_{1/2} − (12/κ)|ρ − κx₀|²,   κ = k + h∨.
/// ```
pub fn central_charge(rs: &RootSystem, orbit: &Orbit, k: &Rat) -> Result<Rat, Error> {
    let kappa = k + rat(rs.dual_coxeter());
    if kappa.is_zero() {
        return Err(Error::InvalidLevel("critical level k = −h∨".into()));
    }
    let (a, b, c) = central_charge_coeffs(rs, orbit);
    Ok(a + b / &kappa + c * kappa)
}

/// Coefficients `(A, B, C)` of the central charge as a function of
/// `κ = k+h∨`: `c(κ) = A + B/κ + Cκ`, with
/// `A = dim 𝔤₀ − ½ dim 𝔤_{1/2} + 24(ρ|x₀)`, `B = −12(ρ|ρ) = −h∨ dim 𝔤`,
/// `C = −12(x₀|x₀)`.
pub fn central_charge_coeffs(rs: &RootSystem, orbit: &Orbit) -> (Rat, Rat, Rat) {
    let x0 = orbit.x0();
    let dim0 = rat(graded_dim(rs, &x0, &rzero()));
    let dim_half = rat(graded_dim(rs, &x0, &ratio(1, 2)));
    let a = dim0 - ratio(1, 2) * dim_half + rat(24) * rs.pairing(rs.rho(), &x0);
    let b = rat(-12) * rs.form(rs.rho(), rs.rho());
    debug_assert_eq!(b, rat(-rs.dual_coxeter() * rs.dim_g()));
    let c = rat(-12) * rs.coweight_norm2(&x0);
    (a, b, c)
}

/// Central charge of the principal W-algebra at `k = −h∨ + p/q` in closed
/// form:
///
/// ```text
///   c(p/q) = −ℓ((h+1)p − h∨q)(r∨·^Lh∨·p − (h+1)q)/(pq).
/// ```
pub fn principal_charge(rs: &RootSystem, p: i64, q: i64) -> Rat {
    assert!(p > 0 && q > 0, "p, q must be positive");
    let h1 = rat(rs.coxeter() + 1);
    let f1 = &h1 * rat(p) - rat(rs.dual_coxeter() * q);
    let f2 = rat(rs.lacety() * rs.dual_dual_coxeter() * p) - h1 * rat(q);
    rat(-(rs.rank() as i64)) * f1 * f2 / rat(p * q)
}

/// Check the specialized denominator identity
///
/// ```text
///   Π_{j≥1}(1−q^j)^ℓ = Σ_{w∈Ŵ(kΛ₀)} (−1)^{ℓ_λ(w)} q^{−⟨w∘kΛ₀, D+ρ∨⟩}
/// ```
///
/// at the boundary level `k = −h∨ + h∨/(h+1)` (Principal) resp.
/// `k = −h∨ + (h+1)/(r∨·^Lh∨)` (Coprincipal), to the given order.
pub fn denominator_identity_check(
    rs: &RootSystem,
    family: Family,
    order: i64,
) -> Result<bool, Error> {
    let k = match family {
        Family::Principal => {
            rat(-rs.dual_coxeter()) + Rat::new(rs.dual_coxeter().into(), (rs.coxeter() + 1).into())
        }
        Family::Coprincipal => {
            rat(-rs.dual_coxeter())
                + Rat::new(
                    (rs.coxeter() + 1).into(),
                    (rs.lacety() * rs.dual_dual_coxeter()).into(),
                )
        }
    };
    let level = crate::admissible::classify_level(rs, &k).ok_or_else(|| {
        Error::InvalidLevel(format!("boundary level {k} is not admissible"))
    })?;
    let lambda = AffineWeight::vacuum(rs, &k);
    let x0 = rs.rho_check();
    let trunc2 = usize::try_from(2 * order).unwrap();

    let mut rhs = QSeries::zero(rzero(), trunc2);
    for el in enumerate_weyl_orbit(rs, &level, &lambda, x0, 2 * order) {
        assert!(el.exp2 % 2 == 0, "exponents against D+ρ∨ must be integers");
        rhs.add_term2(usize::try_from(el.exp2).unwrap(), &rat(el.parity));
    }

    let mut lhs = QSeries::one(trunc2);
    lhs.mul_eta_power(rs.rank() as i64);
    Ok(lhs.eq_truncated(&rhs))
}
