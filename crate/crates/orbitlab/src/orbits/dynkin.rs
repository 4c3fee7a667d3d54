//! Weighted Dynkin characteristics.
//!
//! For a classical algebra the characteristic of the orbit of a partition
//! d = (d₁, d₂, …) is assembled from the sl₂ weight strings of the parts:
//! each part dᵢ contributes the values dᵢ−1, dᵢ−3, …, 1−dᵢ.  In type A the
//! characteristic is the full sorted list of these N values; in types B, C,
//! D it is the first ℓ values (the multiset is symmetric, so these are the
//! non-negative half).  For the second orbit of a very even D-type
//! partition the last coordinate is negated.
//!
//! For an exceptional algebra the characteristic is recovered from its
//! marks (m₁, …, m_ℓ) by solving αᵢ(H) = mᵢ for H in the span of the simple
//! coroots.

use crate::matrix;
use crate::partitions::Partition;
use crate::rat::{rat, rzero, Rat};
use crate::rootsys::{RootSystem, TypeLabel, Vector};

use super::VeryEven;

/// The multiset of sl₂ weights of a partition, sorted descending.
pub fn h_values(d: &Partition) -> Vec<i64> {
    let mut vals = Vec::with_capacity(d.sum());
    for &part in d.parts() {
        let p = part as i64;
        let mut v = p - 1;
        while v >= 1 - p {
            vals.push(v);
            v -= 2;
        }
    }
    vals.sort_unstable_by(|a, b| b.cmp(a));
    vals
}

/// Dominant characteristic of a classical orbit, in ambient coordinates.
pub fn classical_characteristic(
    rs: &RootSystem,
    d: &Partition,
    kind: Option<VeryEven>,
) -> Vector {
    let vals = h_values(d);
    let l = rs.rank();
    let mut h: Vector = match rs.simple_type().label() {
        TypeLabel::A => vals.iter().map(|&v| rat(v)).collect(),
        TypeLabel::B | TypeLabel::C | TypeLabel::D => {
            vals[..l].iter().map(|&v| rat(v)).collect()
        }
        _ => panic!("classical_characteristic on exceptional type"),
    };
    if kind == Some(VeryEven::II) {
        let last = h.last_mut().unwrap();
        *last = -last.clone();
    }
    h
}

/// Characteristic from weighted Dynkin marks: the unique H in the span of
/// the simple coroots with αᵢ(H) = mᵢ.
pub fn characteristic_from_marks(rs: &RootSystem, marks: &[i64]) -> Vector {
    let l = rs.rank();
    let coroots: Vec<Vector> = rs.simple_roots().iter().map(|a| rs.coroot(a)).collect();
    // Cartan-type system: A[i][j] = ⟨αᵢ, αⱼ∨⟩.
    let a: Vec<Vec<Rat>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| rs.pairing(&rs.simple_roots()[i], &coroots[j]))
                .collect()
        })
        .collect();
    let b: Vec<Rat> = marks.iter().map(|&m| rat(m)).collect();
    let c = matrix::solve(&a, &b).expect("Cartan matrix is invertible");
    let mut h = vec![rzero(); rs.ambient_dim()];
    for (cj, cr) in c.iter().zip(&coroots) {
        for (i, x) in cr.iter().enumerate() {
            h[i] += cj * x;
        }
    }
    h
}

/// dim 𝔤^f from the partition: the classical centralizer-dimension
/// formulas, with t = dᵗ the transposed partition and `odd` the number of
/// odd parts of d:
///
/// * sl_N:  Σ tᵢ² − 1
/// * so_N:  (Σ tᵢ² − odd)/2
/// * sp_N:  (Σ tᵢ² + odd)/2
pub fn centralizer_dim_partition(label: TypeLabel, d: &Partition) -> i64 {
    let t = d.transpose();
    let s: i64 = t.parts().iter().map(|&x| (x * x) as i64).sum();
    let odd = d.num_odd_parts() as i64;
    match label {
        TypeLabel::A => s - 1,
        TypeLabel::B | TypeLabel::D => (s - odd) / 2,
        TypeLabel::C => (s + odd) / 2,
        _ => panic!("partition centralizer on exceptional type"),
    }
}

/// dim 𝔤 of the classical algebra acting on the defining space of size N.
pub fn classical_algebra_dim(label: TypeLabel, n: usize) -> i64 {
    let n = n as i64;
    match label {
        TypeLabel::A => n * n - 1,
        TypeLabel::B | TypeLabel::D => n * (n - 1) / 2,
        TypeLabel::C => n * (n + 1) / 2,
        _ => panic!("not classical"),
    }
}
