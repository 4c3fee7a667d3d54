//! Finite root systems of the simple Lie algebras, in Bourbaki ε-coordinates.
//!
//! A `RootSystem` carries the full set of roots of a simple type `X_ℓ`
//! realized as exact rational vectors in an ambient space ℝ^n:
//!
//! * `A_ℓ` lives in the zero-sum subspace of ℝ^{ℓ+1},
//! * `B_ℓ`, `C_ℓ`, `D_ℓ`, `F₄` in ℝ^ℓ (resp. ℝ⁴),
//! * `G₂` in the Bourbaki 3-dimensional realization,
//! * `E₆`, `E₇` inside the `E₈` realization in ℝ⁸.
//!
//! The invariant form is the Euclidean dot product times `form_scale`,
//! normalized so that (θ|θ) = 2 for the highest root θ.  Elements of the
//! Cartan subalgebra ("coweights", e.g. Dynkin grading elements x₀ and
//! coroots α∨) are stored as plain coordinate vectors paired with weights by
//! the unscaled dot product; the form identification ν: 𝔥 → 𝔥* is division
//! by `form_scale`.

use crate::matrix;
use crate::rat::{dot, rat, ratio, rzero, Rat};
use crate::Error;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Letter of a simple type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A validated simple type `X_ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    label: TypeLabel,
    rank: usize,
}

impl SimpleType {
    /// Validates the rank ranges: `A_ℓ` (ℓ≥1), `B_ℓ` (ℓ≥2), `C_ℓ` (ℓ≥2),
    /// `D_ℓ` (ℓ≥3), `E₆`–`E₈`, `F₄`, `G₂`.
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self, Error> {
        let ok = match label {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 3,
            TypeLabel::E => (6..=8).contains(&rank),
            TypeLabel::F => rank == 4,
            TypeLabel::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { label, rank })
        } else {
            Err(Error::InvalidType(format!("{label}{rank}")))
        }
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self.label,
            TypeLabel::A | TypeLabel::B | TypeLabel::C | TypeLabel::D
        )
    }

    /// Size `N` of the defining representation for classical types:
    /// `sl_{ℓ+1}`, `so_{2ℓ+1}`, `sp_{2ℓ}`, `so_{2ℓ}`.
    pub fn defining_size(&self) -> Option<usize> {
        match self.label {
            TypeLabel::A => Some(self.rank + 1),
            TypeLabel::B => Some(2 * self.rank + 1),
            TypeLabel::C | TypeLabel::D => Some(2 * self.rank),
            _ => None,
        }
    }

    /// Parse strings like `A5`, `E8`, `G2`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let label = match letter.to_ascii_uppercase() {
            'A' => TypeLabel::A,
            'B' => TypeLabel::B,
            'C' => TypeLabel::C,
            'D' => TypeLabel::D,
            'E' => TypeLabel::E,
            'F' => TypeLabel::F,
            'G' => TypeLabel::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        SimpleType::new(label, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

/// A root or weight: coordinates in the ambient ε-basis.
pub type Vector = Vec<Rat>;

/// A complete root system with the derived data every other module consumes.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    ambient: usize,
    /// Scale of the invariant form: (λ|μ) = form_scale · Σ λᵢμᵢ.
    form_scale: Rat,
    simple_roots: Vec<Vector>,
    /// All roots, negatives included.
    roots: Vec<Vector>,
    /// Signed heights, parallel to `roots`.
    root_heights: Vec<i64>,
    positive_roots: Vec<Vector>,
    theta: Vector,
    theta_short: Vector,
    rho: Vector,
    rho_check: Vector,
    coxeter: i64,
    dual_coxeter: i64,
    dual_dual_coxeter: i64,
    lacety: i64,
    /// Squared Euclidean length shared by all long roots.
    long_norm2: Rat,
}

/// Construct the root system of a simple type.
pub fn build_root_system(st: SimpleType) -> RootSystem {
    RootSystem::new(st)
}

impl RootSystem {
    pub fn new(st: SimpleType) -> RootSystem {
        let (ambient, simple_roots) = simple_root_vectors(st);
        let roots = reflection_closure(&simple_roots);
        let expected = expected_root_count(st);
        assert_eq!(
            roots.len(),
            expected,
            "{st}: generated {} roots, expected {expected}",
            roots.len()
        );

        // Long/short partition by Euclidean norm (the scale cancels).
        let norms: BTreeSet<Rat> = roots.iter().map(|r| dot(r, r)).collect();
        assert!(norms.len() <= 2, "{st}: more than two root lengths");
        let long_norm2 = norms.iter().next_back().unwrap().clone();
        let short_norm2 = norms.iter().next().unwrap().clone();
        let lacety_rat = &long_norm2 / &short_norm2;
        assert!(
            lacety_rat.denom() == &num_bigint::BigInt::from(1),
            "{st}: non-integral lacety"
        );
        let lacety = i64::try_from(lacety_rat.numer().clone()).unwrap();
        assert!((1..=3).contains(&lacety), "{st}: lacety {lacety}");

        // Normalize the form so (θ|θ) = 2.
        let form_scale = rat(2) / &long_norm2;

        let mut rs = RootSystem {
            simple_type: st,
            ambient,
            form_scale,
            simple_roots,
            roots,
            root_heights: Vec::new(),
            positive_roots: Vec::new(),
            theta: Vec::new(),
            theta_short: Vec::new(),
            rho: Vec::new(),
            rho_check: Vec::new(),
            coxeter: 0,
            dual_coxeter: 0,
            dual_dual_coxeter: 0,
            lacety,
            long_norm2,
        };

        // Positive roots: non-negative coefficients on the simple roots.
        // Heights are recorded along the way.
        let mut positive = Vec::new();
        let mut heights = Vec::with_capacity(rs.roots.len());
        for r in &rs.roots {
            let coeffs = rs.simple_coefficients(r).expect("root outside root span");
            let integral = coeffs.iter().all(|c| c.denom() == &1.into());
            assert!(integral, "{st}: non-integral root coefficients");
            heights.push(
                coeffs
                    .iter()
                    .map(|c| i64::try_from(c.numer().clone()).unwrap())
                    .sum(),
            );
            if coeffs.iter().all(|c| !c.numer().is_negative()) {
                positive.push(r.clone());
            }
        }
        rs.root_heights = heights;
        assert_eq!(
            positive.len() * 2,
            rs.roots.len(),
            "{st}: positive roots are not half of all roots"
        );
        rs.positive_roots = positive;

        // Highest root = unique positive root of maximal coefficient height;
        // highest short root analogously among short roots.
        let ht = |rs: &RootSystem, r: &Vector| -> i64 { rs.root_height(r).unwrap() };
        let theta = rs
            .positive_roots
            .iter()
            .max_by_key(|r| ht(&rs, r))
            .unwrap()
            .clone();
        assert_eq!(dot(&theta, &theta), rs.long_norm2, "θ is not long");
        let theta_short = rs
            .positive_roots
            .iter()
            .filter(|r| {
                let n = dot(r, r);
                n.clone() * rat(rs.lacety) == rs.long_norm2
            })
            .max_by_key(|r| ht(&rs, r))
            .unwrap()
            .clone();
        rs.theta = theta;
        rs.theta_short = theta_short;

        // ρ, ρ∨ as half-sums.
        let mut rho = vec![rzero(); ambient];
        let mut rho_check = vec![rzero(); ambient];
        for r in &rs.positive_roots {
            for (i, x) in r.iter().enumerate() {
                rho[i] += x;
            }
            let cv = rs.coroot(r);
            for (i, x) in cv.iter().enumerate() {
                rho_check[i] += x;
            }
        }
        for x in rho.iter_mut() {
            *x /= rat(2);
        }
        for x in rho_check.iter_mut() {
            *x /= rat(2);
        }
        rs.rho = rho;
        rs.rho_check = rho_check;

        // Coxeter numbers.  h = ht(θ)+1; h∨ = (ρ|θ∨)+1; ^Lh∨ = ⟨θ_s, ρ∨⟩+1.
        rs.coxeter = ht(&rs, &rs.theta) + 1;
        let hv = rs.pairing(&rs.rho, &rs.coroot(&rs.theta)) + rat(1);
        let lhv = rs.pairing(&rs.theta_short, &rs.rho_check) + rat(1);
        rs.dual_coxeter = crate::rat::rat_to_i64(&hv).expect("h∨ not integral");
        rs.dual_dual_coxeter = crate::rat::rat_to_i64(&lhv).expect("^Lh∨ not integral");
        rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    /// dim 𝔤 = rank + #roots.
    pub fn dim_g(&self) -> i64 {
        (self.rank() + self.roots.len()) as i64
    }

    pub fn theta(&self) -> &Vector {
        &self.theta
    }

    pub fn theta_short(&self) -> &Vector {
        &self.theta_short
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn rho_check(&self) -> &Vector {
        &self.rho_check
    }

    /// Coxeter number h.
    pub fn coxeter(&self) -> i64 {
        self.coxeter
    }

    /// Dual Coxeter number h∨.
    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// Dual Coxeter number of the Langlands dual algebra, ^Lh∨.
    pub fn dual_dual_coxeter(&self) -> i64 {
        self.dual_dual_coxeter
    }

    /// Lacety r∨ ∈ {1,2,3}.
    pub fn lacety(&self) -> i64 {
        self.lacety
    }

    /// Natural pairing ⟨λ, x⟩ of a weight with a Cartan element.
    pub fn pairing(&self, weight: &[Rat], coweight: &[Rat]) -> Rat {
        dot(weight, coweight)
    }

    /// Normalized invariant form on weights, (θ|θ) = 2.
    pub fn form(&self, a: &[Rat], b: &[Rat]) -> Rat {
        &self.form_scale * dot(a, b)
    }

    /// Form image ν(x) ∈ 𝔥* of a Cartan element, so that ⟨λ, x⟩ = (λ | ν(x)).
    pub fn coweight_to_weight(&self, x: &[Rat]) -> Vector {
        x.iter().map(|c| c / &self.form_scale).collect()
    }

    /// |ν(x)|² in the normalized form, for a Cartan element x.
    pub fn coweight_norm2(&self, x: &[Rat]) -> Rat {
        dot(x, x) / &self.form_scale
    }

    /// Coroot α∨ of a root, as a Cartan element: 2α/|α|²_euclid.
    pub fn coroot(&self, root: &[Rat]) -> Vector {
        let n = dot(root, root);
        root.iter().map(|c| rat(2) * c / &n).collect()
    }

    /// Whether a vector is a root.
    pub fn is_root(&self, v: &[Rat]) -> bool {
        self.roots.iter().any(|r| r[..] == v[..])
    }

    /// Whether a root is long (trivially true in the simply-laced case).
    pub fn is_long(&self, root: &[Rat]) -> bool {
        dot(root, root) == self.long_norm2
    }

    /// Coefficients of a vector on the simple roots; `None` if outside their
    /// span.  Uses the Gram matrix of the simple roots.
    pub fn simple_coefficients(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let l = self.rank();
        let gram: Vec<Vec<Rat>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| dot(&self.simple_roots[i], &self.simple_roots[j]))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = (0..l).map(|i| dot(&self.simple_roots[i], v)).collect();
        let coeffs = matrix::solve(&gram, &rhs)?;
        // Verify (v could have a component orthogonal to the span).
        let mut rec = vec![rzero(); self.ambient];
        for (c, alpha) in coeffs.iter().zip(&self.simple_roots) {
            for (i, x) in alpha.iter().enumerate() {
                rec[i] += c * x;
            }
        }
        if rec[..] == v[..] {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Height of a root: the (signed) sum of its simple-root coefficients.
    pub fn root_height(&self, root: &[Rat]) -> Result<i64, Error> {
        match self.roots.iter().position(|r| r[..] == root[..]) {
            Some(i) => Ok(self.root_heights[i]),
            None => Err(Error::NotARoot(format!("{root:?}"))),
        }
    }

    /// Signed heights of all roots, parallel to [`Self::roots`].
    pub fn root_heights(&self) -> &[i64] {
        &self.root_heights
    }

    /// Reflection of a weight in the hyperplane of a root.
    pub fn reflect_weight(&self, root: &[Rat], w: &[Rat]) -> Vector {
        let c = self.pairing(w, &self.coroot(root));
        w.iter().zip(root).map(|(x, a)| x - &c * a).collect()
    }

    /// Reflection of a Cartan element in the hyperplane of a root:
    /// s_α(x) = x − ⟨α, x⟩ α∨.
    pub fn reflect_coweight(&self, root: &[Rat], x: &[Rat]) -> Vector {
        let c = self.pairing(root, x);
        let cv = self.coroot(root);
        x.iter().zip(&cv).map(|(y, a)| y - &c * a).collect()
    }

    /// The dominant Weyl-chamber representative of a Cartan element.
    pub fn dominant_coweight(&self, x: &[Rat]) -> Vector {
        let mut v = x.to_vec();
        'outer: loop {
            for alpha in &self.simple_roots {
                if self.pairing(alpha, &v) < rzero() {
                    v = self.reflect_coweight(alpha, &v);
                    continue 'outer;
                }
            }
            return v;
        }
    }
}

/// Free-function form of the pairing, mirroring the operation name `eval`.
/// Errors on dimension mismatch.
pub fn eval(rs: &RootSystem, weight: &[Rat], coweight: &[Rat]) -> Result<Rat, Error> {
    if weight.len() != rs.ambient_dim() || coweight.len() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            got: weight.len().max(coweight.len()),
        });
    }
    Ok(rs.pairing(weight, coweight))
}

/// Free-function form of `root_height`.
pub fn root_height(rs: &RootSystem, root: &[Rat]) -> Result<i64, Error> {
    rs.root_height(root)
}

fn expected_root_count(st: SimpleType) -> usize {
    let l = st.rank();
    match st.label() {
        TypeLabel::A => l * (l + 1),
        TypeLabel::B | TypeLabel::C => 2 * l * l,
        TypeLabel::D => 2 * l * (l - 1),
        TypeLabel::E => match l {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        TypeLabel::F => 48,
        TypeLabel::G => 12,
    }
}

/// Bourbaki simple-root vectors and the ambient dimension.
fn simple_root_vectors(st: SimpleType) -> (usize, Vec<Vector>) {
    let l = st.rank();
    let e = |n: usize, i: usize| -> Vector {
        let mut v = vec![rzero(); n];
        v[i] = rat(1);
        v
    };
    let sub = |a: &Vector, b: &Vector| -> Vector { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let add = |a: &Vector, b: &Vector| -> Vector { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    match st.label() {
        TypeLabel::A => {
            let n = l + 1;
            let simple = (0..l).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            (n, simple)
        }
        TypeLabel::B => {
            let mut simple: Vec<Vector> = (0..l - 1).map(|i| sub(&e(l, i), &e(l, i + 1))).collect();
            simple.push(e(l, l - 1));
            (l, simple)
        }
        TypeLabel::C => {
            let mut simple: Vec<Vector> = (0..l - 1).map(|i| sub(&e(l, i), &e(l, i + 1))).collect();
            let mut last = e(l, l - 1);
            last[l - 1] = rat(2);
            simple.push(last);
            (l, simple)
        }
        TypeLabel::D => {
            let mut simple: Vec<Vector> = (0..l - 1).map(|i| sub(&e(l, i), &e(l, i + 1))).collect();
            simple.push(add(&e(l, l - 2), &e(l, l - 1)));
            (l, simple)
        }
        TypeLabel::E => {
            // Bourbaki E₈ simple roots; E₆/E₇ are the first 6/7 of them.
            let n = 8;
            let mut a1 = vec![ratio(-1, 2); n];
            a1[0] = ratio(1, 2);
            a1[7] = ratio(1, 2);
            let a2 = add(&e(n, 0), &e(n, 1));
            let mut simple = vec![a1, a2];
            for i in 0..6 {
                simple.push(sub(&e(n, i + 1), &e(n, i)));
            }
            simple.truncate(l);
            (n, simple)
        }
        TypeLabel::F => {
            let n = 4;
            let a1 = sub(&e(n, 1), &e(n, 2));
            let a2 = sub(&e(n, 2), &e(n, 3));
            let a3 = e(n, 3);
            let a4 = vec![ratio(1, 2), ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)];
            (n, vec![a1, a2, a3, a4])
        }
        TypeLabel::G => {
            let n = 3;
            let a1 = sub(&e(n, 0), &e(n, 1));
            let a2 = vec![rat(-2), rat(1), rat(1)];
            (n, vec![a1, a2])
        }
    }
}

/// All roots as the closure of the simple roots under simple reflections.
fn reflection_closure(simple: &[Vector]) -> Vec<Vector> {
    let mut seen: BTreeSet<Vector> = simple.iter().cloned().collect();
    let mut frontier: Vec<Vector> = simple.to_vec();
    while let Some(r) = frontier.pop() {
        for alpha in simple {
            // s_α(r) = r − ⟨r, α∨⟩ α
            let c = rat(2) * dot(&r, alpha) / dot(alpha, alpha);
            let img: Vector = r.iter().zip(alpha).map(|(x, a)| x - &c * a).collect();
            if seen.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    seen.into_iter().collect()
}
