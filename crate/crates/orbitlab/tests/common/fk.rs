//! Frenkel–Kac realization of the simply-laced algebras from their root
//! lattices, plus an sl₂-solvability certification of weighted-Dynkin
//! characteristics.
//!
//! Structure constants: on the root lattice define the bimultiplicative
//! cocycle ε by ε(αᵢ,αᵢ) = −1, ε(αᵢ,αⱼ) = (−1)^{(αᵢ|αⱼ)} for i < j and
//! ε(αᵢ,αⱼ) = 1 for i > j.  Then
//!
//! * [h, x_α] = α(h) x_α,
//! * [x_α, x_β] = ε(α,β) x_{α+β} when α+β is a root,
//! * [x_α, x_{−α}] = −α∨,
//!
//! and the Jacobi identity (verified exhaustively for small ranks in the
//! certification suite) makes this the Lie algebra of the given type.
//!
//! A dominant integral H is the characteristic of a nilpotent orbit if and
//! only if H = [e, f] for some e ∈ 𝔤₂, f ∈ 𝔤₋₂ of the ad-H grading: given
//! such a pair, (e, H, f) is automatically an sl₂-triple.  For fixed
//! generic e solvability in f is linear, which this module tests modulo
//! two large primes with deterministic pseudo-random e.

use super::lcg::Lcg;
use orbitlab::orbits::dynkin::characteristic_from_marks;
use orbitlab::rat::{rat, rat_to_i64, Rat};
use orbitlab::rootsys::{RootSystem, Vector};
use std::collections::BTreeMap;

pub const P1: u64 = 2147483629;
pub const P2: u64 = 2147483587;

/// The Frenkel–Kac algebra of a simply-laced root system.
pub struct FkAlgebra<'a> {
    pub rs: &'a RootSystem,
    /// Integer simple-root coefficients of every root.
    coeffs: Vec<Vec<i64>>,
    index: BTreeMap<Vector, usize>,
    /// Parity matrix: ε(αᵢ,αⱼ) = (−1)^{E[i][j]}.
    eps_parity: Vec<Vec<u8>>,
}

/// A basis vector: a root vector or a simple coroot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Root(usize),
    Cartan(usize),
}

/// A sparse element: root-vector coefficients plus a Cartan part in
/// ambient coordinates.
#[derive(Clone, Debug, Default)]
pub struct Elem {
    pub roots: BTreeMap<usize, Rat>,
    pub cartan: Vec<Rat>,
}

impl Elem {
    fn zero(ambient: usize) -> Elem {
        Elem {
            roots: BTreeMap::new(),
            cartan: vec![rat(0); ambient],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.roots.values().all(|c| c == &rat(0)) && self.cartan.iter().all(|c| c == &rat(0))
    }

    fn add_root(&mut self, idx: usize, c: Rat) {
        *self.roots.entry(idx).or_insert_with(|| rat(0)) += c;
    }

    fn add_cartan(&mut self, v: &[Rat], scale: &Rat) {
        for (x, y) in self.cartan.iter_mut().zip(v) {
            *x += scale * y;
        }
    }
}

impl<'a> FkAlgebra<'a> {
    pub fn new(rs: &'a RootSystem) -> FkAlgebra<'a> {
        assert_eq!(rs.lacety(), 1, "Frenkel–Kac needs a simply-laced type");
        let l = rs.rank();
        let coeffs: Vec<Vec<i64>> = rs
            .roots()
            .iter()
            .map(|r| {
                rs.simple_coefficients(r)
                    .unwrap()
                    .iter()
                    .map(|c| rat_to_i64(c).unwrap())
                    .collect()
            })
            .collect();
        let index = rs
            .roots()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let simple = rs.simple_roots();
        let mut eps_parity = vec![vec![0u8; l]; l];
        for i in 0..l {
            for j in 0..l {
                eps_parity[i][j] = if i == j {
                    1
                } else if i < j {
                    let d = rat_to_i64(&orbitlab::rat::dot(&simple[i], &simple[j])).unwrap();
                    (d.rem_euclid(2)) as u8
                } else {
                    0
                };
            }
        }
        FkAlgebra {
            rs,
            coeffs,
            index,
            eps_parity,
        }
    }

    pub fn num_roots(&self) -> usize {
        self.coeffs.len()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() + self.rs.rank()
    }

    pub fn basis(&self) -> Vec<Basis> {
        let mut v: Vec<Basis> = (0..self.num_roots()).map(Basis::Root).collect();
        v.extend((0..self.rs.rank()).map(Basis::Cartan));
        v
    }

    /// ε on two roots given by index.
    pub fn eps(&self, a: usize, b: usize) -> i64 {
        let (ca, cb) = (&self.coeffs[a], &self.coeffs[b]);
        let mut parity = 0u8;
        for i in 0..ca.len() {
            if ca[i] & 1 == 0 {
                continue;
            }
            for j in 0..cb.len() {
                parity ^= self.eps_parity[i][j] & (cb[j] & 1) as u8;
            }
        }
        if parity == 0 {
            1
        } else {
            -1
        }
    }

    pub fn elem(&self, b: Basis) -> Elem {
        let mut e = Elem::zero(self.rs.ambient_dim());
        match b {
            Basis::Root(i) => e.add_root(i, rat(1)),
            Basis::Cartan(i) => {
                let cr = self.rs.coroot(&self.rs.simple_roots()[i]);
                e.add_cartan(&cr, &rat(1));
            }
        }
        e
    }

    pub fn bracket_basis(&self, a: Basis, b: Basis) -> Elem {
        let mut out = Elem::zero(self.rs.ambient_dim());
        match (a, b) {
            (Basis::Cartan(_), Basis::Cartan(_)) => {}
            (Basis::Cartan(i), Basis::Root(r)) => {
                let h = self.rs.coroot(&self.rs.simple_roots()[i]);
                out.add_root(r, self.rs.pairing(&self.rs.roots()[r], &h));
            }
            (Basis::Root(r), Basis::Cartan(i)) => {
                let h = self.rs.coroot(&self.rs.simple_roots()[i]);
                out.add_root(r, -self.rs.pairing(&self.rs.roots()[r], &h));
            }
            (Basis::Root(r), Basis::Root(s)) => {
                let sum: Vector = self.rs.roots()[r]
                    .iter()
                    .zip(&self.rs.roots()[s])
                    .map(|(x, y)| x + y)
                    .collect();
                if sum.iter().all(|c| c == &rat(0)) {
                    // [x_α, x_{−α}] = −α∨
                    let cr = self.rs.coroot(&self.rs.roots()[r]);
                    out.add_cartan(&cr, &rat(-1));
                } else if let Some(&t) = self.index.get(&sum) {
                    out.add_root(t, rat(self.eps(r, s)));
                }
            }
        }
        out
    }

    /// Full bilinear bracket of sparse elements.
    pub fn bracket(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::zero(self.rs.ambient_dim());
        // [cartan, root] and [root, cartan]
        for (&s, c) in &b.roots {
            let v = self.rs.pairing(&self.rs.roots()[s], &a.cartan);
            out.add_root(s, v * c);
        }
        for (&r, c) in &a.roots {
            let v = self.rs.pairing(&self.rs.roots()[r], &b.cartan);
            out.add_root(r, -(v * c));
        }
        // [root, root]
        for (&r, cr) in &a.roots {
            if cr == &rat(0) {
                continue;
            }
            for (&s, cs) in &b.roots {
                if cs == &rat(0) {
                    continue;
                }
                let term = self.bracket_basis(Basis::Root(r), Basis::Root(s));
                let scale = cr * cs;
                for (idx, c) in term.roots {
                    out.add_root(idx, c * &scale);
                }
                out.add_cartan(&term.cartan, &scale);
            }
        }
        out
    }

    /// Jacobi defect [[a,b],c] + [[b,c],a] + [[c,a],b] for basis elements.
    pub fn jacobi_defect(&self, a: Basis, b: Basis, c: Basis) -> Elem {
        let (ea, eb, ec) = (self.elem(a), self.elem(b), self.elem(c));
        let mut total = Elem::zero(self.rs.ambient_dim());
        for (x, y, z) in [(&ea, &eb, &ec), (&eb, &ec, &ea), (&ec, &ea, &eb)] {
            let t = self.bracket(&self.bracket(x, y), z);
            for (idx, c) in t.roots {
                total.add_root(idx, c);
            }
            let cart = t.cartan.clone();
            total.add_cartan(&cart, &rat(1));
        }
        total
    }
}

// ---------------------------------------------------------------------------
// Arithmetic mod p and the solvability certification.
// ---------------------------------------------------------------------------

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn rat_mod(r: &Rat, p: u64) -> u64 {
    let pb = num_bigint::BigInt::from(p);
    let num = ((r.numer() % &pb) + &pb) % &pb;
    let den = ((r.denom() % &pb) + &pb) % &pb;
    let n: u64 = num.try_into().unwrap();
    let d: u64 = den.try_into().unwrap();
    n * inv_mod(d, p) % p
}

/// Row-reduce an augmented matrix mod p and report whether the system is
/// consistent.
pub fn consistent_modp(mut m: Vec<Vec<u64>>, p: u64) -> bool {
    if m.is_empty() {
        return true;
    }
    let cols = m[0].len();
    let vars = cols - 1;
    let mut row = 0;
    for col in 0..vars {
        let Some(pivot) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = inv_mod(m[row][col], p);
        for c in col..cols {
            m[row][c] = m[row][c] * inv % p;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..cols {
                    let sub = f * m[row][c] % p;
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        row += 1;
        if row == m.len() {
            break;
        }
    }
    // Any zero row with nonzero RHS ⇒ inconsistent.
    for r in &m {
        if r[..vars].iter().all(|&x| x == 0) && r[vars] != 0 {
            return false;
        }
    }
    true
}

/// Does [e, 𝔤₋₂] ∋ H hold for some (pseudo-random) e ∈ 𝔤₂, working mod p?
fn solvable_once(alg: &FkAlgebra, h: &[Rat], rng: &mut Lcg, p: u64) -> bool {
    let rs = alg.rs;
    let value = |r: usize| rat_to_i64(&rs.pairing(&rs.roots()[r], h)).expect("integer grading");
    let g2: Vec<usize> = (0..alg.num_roots()).filter(|&r| value(r) == 2).collect();
    let gm2: Vec<usize> = (0..alg.num_roots()).filter(|&r| value(r) == -2).collect();
    let g0: Vec<usize> = (0..alg.num_roots()).filter(|&r| value(r) == 0).collect();
    if g2.is_empty() {
        // Only the zero orbit: solvable iff H = 0.
        return h.iter().all(|c| c == &rat(0));
    }
    let g0_pos: BTreeMap<usize, usize> = g0.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let e_coeffs: Vec<u64> = g2.iter().map(|_| 1 + rng.below(p - 1)).collect();

    // Rows: ambient Cartan coordinates, then one per 𝔤₀ root-vector
    // coordinate.  Columns: f-coefficients on 𝔤₋₂, then the RHS.
    let ambient = rs.ambient_dim();
    let rows = ambient + g0.len();
    let mut m = vec![vec![0u64; gm2.len() + 1]; rows];
    for (jcol, &fj) in gm2.iter().enumerate() {
        for (icol, &ei) in g2.iter().enumerate() {
            let term = alg.bracket_basis(Basis::Root(ei), Basis::Root(fj));
            let scale = e_coeffs[icol];
            for (d, c) in term.cartan.iter().enumerate() {
                if c != &rat(0) {
                    m[d][jcol] = (m[d][jcol] + scale * rat_mod(c, p)) % p;
                }
            }
            for (idx, c) in &term.roots {
                let row = ambient + g0_pos[idx];
                m[row][jcol] = (m[row][jcol] + scale * rat_mod(c, p)) % p;
            }
        }
    }
    for d in 0..ambient {
        m[d][gm2.len()] = rat_mod(&h[d], p);
    }
    consistent_modp(m, p)
}

/// Certify that dominant integral H is a Dynkin characteristic: for each of
/// two primes, some of a few pseudo-random e ∈ 𝔤₂ must solve [e,f] = H.
pub fn is_characteristic(alg: &FkAlgebra, h: &[Rat], seed: u64) -> bool {
    [P1, P2].iter().all(|&p| {
        let mut rng = Lcg::new(seed ^ p);
        (0..3).any(|_| solvable_once(alg, h, &mut rng, p))
    })
}

/// Necessary sl₂-string condition on the ad-H graded dimensions:
/// dim 𝔤_j ≥ dim 𝔤_{j+2} for all j ≥ 0.
pub fn string_prefilter(rs: &RootSystem, h: &[Rat]) -> bool {
    let mut dims: BTreeMap<i64, i64> = BTreeMap::new();
    dims.insert(0, rs.rank() as i64);
    for r in rs.roots() {
        let v = match rat_to_i64(&rs.pairing(r, h)) {
            Some(v) => v,
            None => return false,
        };
        *dims.entry(v).or_insert(0) += 1;
    }
    let max = *dims.keys().next_back().unwrap();
    for j in 0..=max {
        let dj = dims.get(&j).copied().unwrap_or(0);
        let dj2 = dims.get(&(j + 2)).copied().unwrap_or(0);
        if dj < dj2 {
            return false;
        }
    }
    true
}

/// dim 𝔤₀ = dim 𝔤₂ in the ad-H grading (the Bala–Carter test for a
/// distinguished characteristic).
pub fn is_distinguished_grading(rs: &RootSystem, h: &[Rat]) -> bool {
    let count = |k: i64| {
        rs.roots()
            .iter()
            .filter(|r| rat_to_i64(&rs.pairing(r, h)) == Some(k))
            .count() as i64
    };
    count(0) + rs.rank() as i64 == count(2)
}

/// All marks vectors in {0,2}^ℓ that are certified characteristics.  Every
/// distinguished orbit has even marks, so its characteristic appears here.
pub fn even_characteristics(rs: &RootSystem, seed: u64) -> Vec<Vec<i64>> {
    let alg = FkAlgebra::new(rs);
    let l = rs.rank();
    let mut out = Vec::new();
    for bits in 0..(1u32 << l) {
        let marks: Vec<i64> = (0..l)
            .map(|i| if bits >> i & 1 == 1 { 2 } else { 0 })
            .collect();
        let h = characteristic_from_marks(rs, &marks);
        if !string_prefilter(rs, &h) {
            continue;
        }
        if is_characteristic(&alg, &h, seed ^ bits as u64) {
            out.push(marks);
        }
    }
    out
}

/// All marks vectors in {0,1,2}^ℓ that are certified characteristics — the
/// complete orbit catalog.  Exponential in rank; intended for E₆.
pub fn all_characteristics(rs: &RootSystem, seed: u64) -> Vec<Vec<i64>> {
    let alg = FkAlgebra::new(rs);
    let l = rs.rank();
    let mut out = Vec::new();
    let mut marks = vec![0i64; l];
    loop {
        let h = characteristic_from_marks(rs, &marks);
        if string_prefilter(rs, &h) && is_characteristic(&alg, &h, seed) {
            out.push(marks.clone());
        }
        // Odometer increment over {0,1,2}^ℓ.
        let mut i = 0;
        loop {
            if i == l {
                return out;
            }
            marks[i] += 1;
            if marks[i] <= 2 {
                break;
            }
            marks[i] = 0;
            i += 1;
        }
    }
}
