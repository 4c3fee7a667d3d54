//! Nilpotent orbits and their invariants.
//!
//! Orbits of the classical algebras are parameterized by the partition sets
//! 𝒫_X from [`crate::partitions`] (with the two very even D-type orbits
//! labelled `I`/`II`); orbits of the exceptional algebras come from the
//! embedded weighted-Dynkin catalog in [`data`].  Every orbit carries its
//! dominant characteristic `H` (the semisimple element of an sl₂-triple
//! through the orbit, with x₀ = H/2 the Dynkin grading element), from which
//! the height `ht(f) = 2θ(x₀)`, the coheight `ht∨(f) = 2θ_s(x₀)`, the orbit
//! dimension, and the graded dimensions `dim 𝔤_j` are derived.
//!
//! `compute_oq`/`compute_loq` return the unique maximal orbits `O_q` and
//! `^LO_q` subject to `ht < 2q`, resp. `ht∨ < 2q`.

pub mod adnilp;
pub mod data;
pub mod dynkin;

use crate::partitions::{self, Partition};
use crate::rat::{rat, rat_to_i64, Rat};
use crate::rootsys::{RootSystem, SimpleType, TypeLabel, Vector};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which of the two orbits attached to a very even D-type partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VeryEven {
    I,
    II,
}

impl fmt::Display for VeryEven {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeryEven::I => write!(f, "I"),
            VeryEven::II => write!(f, "II"),
        }
    }
}

/// A nilpotent orbit with its computed invariants.
#[derive(Clone, Debug)]
pub struct Orbit {
    algebra: SimpleType,
    label: String,
    partition: Option<Partition>,
    very_even: Option<VeryEven>,
    /// Dominant characteristic H = 2x₀, in ambient coordinates.
    characteristic: Vector,
    /// Weighted Dynkin marks αᵢ(H) ∈ {0,1,2}.
    marks: Vec<i64>,
    dim: i64,
    height: i64,
    dual_height: i64,
}

impl Orbit {
    pub fn algebra(&self) -> SimpleType {
        self.algebra
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn very_even(&self) -> Option<VeryEven> {
        self.very_even
    }

    pub fn characteristic(&self) -> &Vector {
        &self.characteristic
    }

    /// Dynkin grading element x₀ = H/2.
    pub fn x0(&self) -> Vector {
        self.characteristic.iter().map(|c| c / rat(2)).collect()
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// dim 𝔤^f, the dimension of the centralizer of a point of the orbit.
    pub fn dim_centralizer(&self, rs: &RootSystem) -> i64 {
        rs.dim_g() - self.dim
    }

    /// Height ht(f) = 2θ(x₀).
    pub fn height(&self) -> i64 {
        self.height
    }

    /// Coheight ht∨(f) = 2θ_s(x₀).
    pub fn dual_height(&self) -> i64 {
        self.dual_height
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.dim == 0
    }
}

/// dim 𝔤_j in the x₀-grading (j runs over half-integers; j = 0 includes the
/// Cartan subalgebra).
pub fn graded_dim(rs: &RootSystem, x0: &[Rat], j: &Rat) -> i64 {
    let mut n = 0i64;
    for alpha in rs.roots() {
        if &rs.pairing(alpha, x0) == j {
            n += 1;
        }
    }
    if j == &rat(0) {
        n += rs.rank() as i64;
    }
    n
}

/// All nonzero graded dimensions, keyed by the (half-integer) degree.
pub fn graded_dims(rs: &RootSystem, x0: &[Rat]) -> BTreeMap<Rat, i64> {
    let mut m: BTreeMap<Rat, i64> = BTreeMap::new();
    *m.entry(rat(0)).or_insert(0) += rs.rank() as i64;
    for alpha in rs.roots() {
        *m.entry(rs.pairing(alpha, x0)).or_insert(0) += 1;
    }
    m
}

/// Internal finisher: derive marks, heights, and dimension from a dominant
/// characteristic.
fn finish_orbit(
    rs: &RootSystem,
    label: String,
    partition: Option<Partition>,
    very_even: Option<VeryEven>,
    characteristic: Vector,
) -> Orbit {
    let marks: Vec<i64> = rs
        .simple_roots()
        .iter()
        .map(|alpha| {
            let m = rs.pairing(alpha, &characteristic);
            let m = rat_to_i64(&m).expect("non-integral Dynkin mark");
            assert!((0..=2).contains(&m), "{label}: mark {m} outside 0..=2");
            m
        })
        .collect();
    let height = rat_to_i64(&rs.pairing(rs.theta(), &characteristic)).expect("height");
    let dual_height =
        rat_to_i64(&rs.pairing(rs.theta_short(), &characteristic)).expect("coheight");

    // dim 𝔤^f = dim 𝔤₀ + dim 𝔤_{1/2} in the x₀-grading, i.e. the number of
    // roots with α(H) ∈ {0, 1} plus the rank.
    let mut centralizer = rs.rank() as i64;
    for alpha in rs.roots() {
        let v = rs.pairing(alpha, &characteristic);
        if v == rat(0) || v == rat(1) {
            centralizer += 1;
        }
    }
    let dim = rs.dim_g() - centralizer;

    // Cross-check against the partition formula for the classical types.
    if let Some(d) = &partition {
        let byp = rs.dim_g() - dynkin::centralizer_dim_partition(rs.simple_type().label(), d);
        assert_eq!(dim, byp, "{label}: grading and partition dimensions differ");
    }

    Orbit {
        algebra: rs.simple_type(),
        label,
        partition,
        very_even,
        characteristic,
        marks,
        dim,
        height,
        dual_height,
    }
}

/// Build the orbit of a classical partition.  For a very even D-type
/// partition the `kind` must be supplied; otherwise it must be `None`.
pub fn orbit_from_partition(
    rs: &RootSystem,
    d: &Partition,
    kind: Option<VeryEven>,
) -> Result<Orbit, Error> {
    let st = rs.simple_type();
    if !st.is_classical() {
        return Err(Error::InvalidPartition(format!(
            "{st} orbits are not partition-classified"
        )));
    }
    let n = st.defining_size().unwrap();
    if d.sum() != n {
        return Err(Error::InvalidPartition(format!(
            "{d} has size {}, expected {n} for {st}",
            d.sum()
        )));
    }
    if !partitions::is_valid_for(d, st.label()) {
        return Err(Error::InvalidPartition(format!("{d} ∉ 𝒫_{}", st.label())));
    }
    let very_even = st.label() == TypeLabel::D && d.is_very_even();
    if very_even && kind.is_none() {
        return Err(Error::InvalidPartition(format!(
            "{d} is very even; specify I or II"
        )));
    }
    if !very_even && kind.is_some() {
        return Err(Error::InvalidPartition(format!("{d} is not very even")));
    }
    let h = dynkin::classical_characteristic(rs, d, kind);
    let label = match kind {
        Some(k) => format!("{d}{k}"),
        None => d.to_string(),
    };
    Ok(finish_orbit(rs, label, Some(d.clone()), kind, h))
}

/// Build an exceptional orbit from its weighted Dynkin marks.
pub fn orbit_from_marks(rs: &RootSystem, label: &str, marks: &[i64]) -> Result<Orbit, Error> {
    if marks.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: marks.len(),
        });
    }
    let h = dynkin::characteristic_from_marks(rs, marks);
    Ok(finish_orbit(rs, label.to_string(), None, None, h))
}

/// Canonicalize an orbit-label string: trims whitespace and accepts the
/// ASCII alias `~A` for `Ã` in exceptional labels (`~A1` ↦ `Ã1`).
pub fn normalize_label(s: &str) -> String {
    s.trim().replace("~A", "Ã").replace('~', "Ã").replace('^', "")
}

/// All nilpotent orbits of the algebra, sorted by (dimension, label).
pub fn orbit_catalog(rs: &RootSystem) -> Result<Vec<Orbit>, Error> {
    let st = rs.simple_type();
    let mut orbits = Vec::new();
    if st.is_classical() {
        let n = st.defining_size().unwrap();
        for d in partitions::valid_partitions(st.label(), n) {
            if st.label() == TypeLabel::D && d.is_very_even() {
                orbits.push(orbit_from_partition(rs, &d, Some(VeryEven::I))?);
                orbits.push(orbit_from_partition(rs, &d, Some(VeryEven::II))?);
            } else {
                orbits.push(orbit_from_partition(rs, &d, None)?);
            }
        }
    } else {
        for rec in data::records_for(st)? {
            orbits.push(orbit_from_marks(rs, &rec.label, &rec.marks)?);
        }
    }
    orbits.sort_by(|a, b| (a.dim, &a.label).cmp(&(b.dim, &b.label)));
    Ok(orbits)
}

/// Look an orbit up by label (classical: partition string, optionally with a
/// trailing I/II; exceptional: Bala–Carter label, `~` accepted for `Ã`).
pub fn orbit_by_label(rs: &RootSystem, label: &str) -> Result<Orbit, Error> {
    let want = normalize_label(label);
    if rs.simple_type().is_classical() {
        let (part_str, kind) = if let Some(s) = want.strip_suffix("II") {
            (s, Some(VeryEven::II))
        } else if let Some(s) = want.strip_suffix('I') {
            (s, Some(VeryEven::I))
        } else {
            (want.as_str(), None)
        };
        let cleaned = part_str.trim().trim_start_matches('(').trim_end_matches(')');
        let d = Partition::parse(cleaned)?;
        orbit_from_partition(rs, &d, kind)
    } else {
        let catalog = orbit_catalog(rs)?;
        catalog
            .into_iter()
            .find(|o| o.label == want)
            .ok_or(Error::UnknownOrbit(label.to_string()))
    }
}

/// The principal orbit: the unique orbit of maximal dimension.
pub fn principal_orbit(rs: &RootSystem) -> Result<Orbit, Error> {
    let catalog = orbit_catalog(rs)?;
    let top = catalog.last().unwrap().clone();
    assert_eq!(
        top.height(),
        2 * rs.coxeter() - 2,
        "principal orbit height must be 2h−2"
    );
    Ok(top)
}

/// Selector shared by `compute_oq` and `compute_loq`: the unique
/// maximal-dimension orbit whose `key` is < 2q.
fn max_orbit_below(
    rs: &RootSystem,
    catalog: &[Orbit],
    q: i64,
    key: impl Fn(&Orbit) -> i64,
) -> Result<Orbit, Error> {
    if q < 1 {
        return Err(Error::Parse(format!("q must be ≥ 1, got {q}")));
    }
    let candidates: Vec<&Orbit> = catalog.iter().filter(|o| key(o) < 2 * q).collect();
    let best_dim = candidates.iter().map(|o| o.dim).max().unwrap();
    let best: Vec<&&Orbit> = candidates.iter().filter(|o| o.dim == best_dim).collect();
    // The very even pair shares a partition and a dimension but is never
    // maximal here; any other tie would contradict uniqueness of the orbit.
    assert_eq!(
        best.len(),
        1,
        "{}: maximal orbit below 2q={} is not unique",
        rs.simple_type(),
        2 * q
    );
    let result = (**best[0]).clone();

    // Classical sanity: the selected partition dominates every candidate.
    if let Some(d) = &result.partition {
        for c in &candidates {
            if let Some(e) = &c.partition {
                assert!(d.dominates(e), "selected orbit fails to dominate {e}");
            }
        }
    }
    Ok(result)
}

/// The orbit `O_q`: unique maximal orbit with ht(f) < 2q.  Equals the
/// principal orbit exactly when q ≥ h.
pub fn compute_oq(rs: &RootSystem, q: i64) -> Result<Orbit, Error> {
    oq_from_catalog(rs, &orbit_catalog(rs)?, q)
}

/// `compute_oq` against a prebuilt catalog (the catalog must be the full
/// output of [`orbit_catalog`], whose last entry is the principal orbit).
pub fn oq_from_catalog(rs: &RootSystem, catalog: &[Orbit], q: i64) -> Result<Orbit, Error> {
    let o = max_orbit_below(rs, catalog, q, |o| o.height())?;
    if q >= rs.coxeter() {
        assert_eq!(o.dim, catalog.last().unwrap().dim, "O_q must be principal");
    }
    Ok(o)
}

/// The orbit `^LO_q`: unique maximal orbit with ht∨(f) < 2q.  Equals the
/// principal orbit exactly when q ≥ ^Lh∨.  For the simply-laced types this
/// coincides with `O_q`.
pub fn compute_loq(rs: &RootSystem, q: i64) -> Result<Orbit, Error> {
    loq_from_catalog(rs, &orbit_catalog(rs)?, q)
}

/// `compute_loq` against a prebuilt catalog.
pub fn loq_from_catalog(rs: &RootSystem, catalog: &[Orbit], q: i64) -> Result<Orbit, Error> {
    let o = max_orbit_below(rs, catalog, q, |o| o.dual_height())?;
    if q >= rs.dual_dual_coxeter() {
        assert_eq!(
            o.dim,
            catalog.last().unwrap().dim,
            "^LO_q must be principal"
        );
    }
    // Independent cross-check for B/C: ^LO_q is the X-collapse of the
    // staircase partition d̃_q.
    if q < rs.dual_dual_coxeter() {
        let st = rs.simple_type();
        if let Some(collapsed) = coprincipal_staircase(st, q) {
            assert_eq!(
                Some(&collapsed),
                o.partition.as_ref(),
                "{st}, q={q}: ^LO_q differs from the collapse of d̃_q"
            );
        }
    }
    Ok(o)
}

/// Closed form for `^LO_q` in types B and C with `q < ^Lh∨`: the X-collapse
/// of the staircase partition `d̃_q`.  `None` for other types.
pub fn coprincipal_staircase(st: SimpleType, q: i64) -> Option<Partition> {
    let qu = q as usize;
    let n = st.defining_size().unwrap_or(0);
    let dtilde = match st.label() {
        TypeLabel::C => {
            // (q+1, q, …, q, s) with 0 ≤ s ≤ q−1.
            let rest = n - (qu + 1);
            let mut parts = vec![qu + 1];
            parts.extend(std::iter::repeat(qu).take(rest / qu));
            parts.push(rest % qu);
            Some(parts)
        }
        TypeLabel::B => {
            // (2q, …, 2q, s) with 0 ≤ s ≤ 2q−1.
            let mut parts = vec![2 * qu; n / (2 * qu)];
            parts.push(n % (2 * qu));
            Some(parts)
        }
        _ => None,
    };
    dtilde.map(|parts| partitions::collapse(&Partition::new(parts), st.label()))
}
