//! Independent reference character for sl₂, computed from the explicit
//! lattice parametrization of the integral affine Weyl group rather than
//! the reflection-BFS enumeration used by the library.
//!
//! Setting: level k = −2 + p/q with gcd(p, q) = 1 and p ≥ 2, vacuum weight
//! λ = kΛ₀, and f the principal nilpotent (partition (2), x₀ = α∨/2, so the
//! grading-zero subsystem is empty and Δ_{1/2} = ∅).
//!
//! The integral root system of λ is {±α + nqδ : n ∈ ℤ}, hence the integral
//! Weyl group is exactly
//!
//! ```text
//!   { t_{jqα} , s_α t_{jqα}  :  j ∈ ℤ },
//! ```
//!
//! translations being even and `s_α`-cosets odd.  Writing ν = λ + ρ̂ =
//! (p/q)Λ₀ + α/2 and applying the standard translation action
//!
//! ```text
//!   t_β(ν) = ν + ν(K)β − [ (ν̄|β) + ½ ν(K)(β|β) ] δ,
//! ```
//!
//! the exponent −⟨y∘λ, D + x₀⟩ of each group element evaluates in closed
//! form (with (α|α) = 2, ⟨α, x₀⟩ = 1):
//!
//! ```text
//!   y = t_{jqα}:        pq·j² + (q − p)·j
//!   y = s_α t_{jqα}:    pq·j² − (p + q)·j + 1
//! ```
//!
//! The reduced vacuum character is then the signed theta-like sum over
//! these exponents multiplied by Π_{m≥1}(1−q^m)^{−1} (one affine-root
//! tower: rank 1, no grading-zero roots, no half-integer grading).

use orbitlab::rat::{rat, rzero, Rat};

/// Coefficients of q⁰ … q^order of the reduced vacuum character of sl₂ at
/// level −2 + p/q with f principal.
pub fn a1_principal_vacuum_character(p: i64, q: i64, order: i64) -> Vec<Rat> {
    assert!(p >= 2 && q >= 1 && num_integer::gcd(p, q) == 1);
    let n = usize::try_from(order).unwrap();

    // Signed numerator: Σ_j q^{pqj²+(q−p)j} − Σ_j q^{pqj²−(p+q)j+1}.
    let mut numerator = vec![0i64; n + 1];
    let bound = order + p + q + 2; // |j| beyond this puts pqj²−(p+q)|j| > order
    for j in -bound..=bound {
        let translation = p * q * j * j + (q - p) * j;
        if (0..=order).contains(&translation) {
            numerator[translation as usize] += 1;
        }
        let reflected = p * q * j * j - (p + q) * j + 1;
        if (0..=order).contains(&reflected) {
            numerator[reflected as usize] -= 1;
        }
    }

    // Partition generating function Π_{m≥1}(1−q^m)^{−1}, truncated.
    let mut partitions = vec![0i64; n + 1];
    partitions[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            partitions[m] += partitions[m - part];
        }
    }

    (0..=n)
        .map(|m| {
            let mut c = rzero();
            for (e, coeff) in numerator.iter().enumerate().take(m + 1) {
                if *coeff != 0 {
                    c += rat(*coeff) * rat(partitions[m - e]);
                }
            }
            c
        })
        .collect()
}
