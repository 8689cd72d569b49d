//! Exact integer lattices: incremental echelon bases, kernels and integral solves.
//!
//! Vectors are sparse: sorted `(index, value)` lists with no zero values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseVec = Vec<(usize, BigInt)>;

pub fn sparse_from_dense(v: &[BigInt]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(v: &SparseVec, dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a·x + b·y`.
fn lin_comb(a: &BigInt, x: &SparseVec, b: &BigInt, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (idx, val) = match (x.get(i), y.get(j)) {
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, a * vi)
            }
            (Some((ci, _)), Some((cj, vj))) if cj < ci => {
                j += 1;
                (*cj, b * vj)
            }
            (Some((ci, vi)), Some((_, vj))) => {
                i += 1;
                j += 1;
                (*ci, a * vi + b * vj)
            }
            (Some((ci, vi)), None) => {
                i += 1;
                (*ci, a * vi)
            }
            (None, Some((cj, vj))) => {
                j += 1;
                (*cj, b * vj)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

fn content(v: &SparseVec) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x))
}

/// Rows in echelon form spanning a sublattice of `Z^dim`, one row per pivot.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    /// Dividing inserted rows by their content keeps the rational span and
    /// the integer kernel but not the lattice itself.
    primitive: bool,
    rows: std::collections::BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    /// Lattice mode: the rows span exactly the lattice of inserted vectors.
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, primitive: false, rows: Default::default() }
    }

    /// Span mode: same rational span, rows kept primitive to limit growth.
    pub fn new_primitive(dim: usize) -> Self {
        EchelonBasis { dim, primitive: true, rows: Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    fn normalize(&self, mut v: SparseVec) -> SparseVec {
        if self.primitive {
            let g = content(&v);
            if !g.is_one() && !g.is_zero() {
                for (_, x) in v.iter_mut() {
                    *x /= &g;
                }
            }
        }
        if v.first().is_some_and(|(_, x)| x.is_negative()) {
            for (_, x) in v.iter_mut() {
                *x = -&*x;
            }
        }
        v
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.normalize(v);
        loop {
            let Some((c, vc)) = v.first().cloned() else { return false };
            let Some(p) = self.rows.get(&c) else {
                self.rows.insert(c, v);
                return true;
            };
            let pc = p[0].1.clone();
            let (q, r) = vc.div_rem(&pc);
            if r.is_zero() {
                v = lin_comb(&BigInt::one(), &v, &-q, p);
                v = self.normalize(v);
                continue;
            }
            let eg = pc.extended_gcd(&vc);
            let new_pivot = lin_comb(&eg.x, p, &eg.y, &v);
            let rest = lin_comb(&(&pc / &eg.gcd), &v, &-(&vc / &eg.gcd), p);
            let new_pivot = self.normalize(new_pivot);
            self.rows.insert(c, new_pivot);
            v = self.normalize(rest);
        }
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in
    /// the lattice (lattice mode) or the span (span mode, up to scaling).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut k = 0;
        while k < v.len() {
            let (c, vc) = v[k].clone();
            if let Some(p) = self.rows.get(&c) {
                let pc = &p[0].1;
                let (q, _) = vc.div_mod_floor(pc);
                if !q.is_zero() {
                    v = lin_comb(&BigInt::one(), &v, &-q, p);
                    continue;
                }
            }
            k += 1;
        }
        v
    }

    /// Membership in lattice mode.
    pub fn contains(&self, v: &SparseVec) -> bool {
        debug_assert!(!self.primitive);
        self.reduce(v).is_empty()
    }
}

/// Integral basis of `{x ∈ Z^cols : A x = 0}`, in echelon form.
pub fn integer_kernel(rows: impl IntoIterator<Item = SparseVec>, cols: usize) -> Vec<SparseVec> {
    let mut h = EchelonBasis::new_primitive(cols);
    for r in rows {
        h.insert(r);
    }
    let hr: Vec<&SparseVec> = h.rows().collect();
    let r = hr.len();
    // Row j of [Hᵀ | I]: the j-th column of H followed by e_j.
    let mut colvecs: Vec<SparseVec> = vec![Vec::new(); cols];
    for (ri, row) in hr.iter().enumerate() {
        for (c, x) in row.iter() {
            colvecs[*c].push((ri, x.clone()));
        }
    }
    let mut t = EchelonBasis::new(r + cols);
    for (j, mut v) in colvecs.into_iter().enumerate() {
        v.push((r + j, BigInt::one()));
        t.insert(v);
    }
    t.rows
        .range(r..)
        .map(|(_, v)| v.iter().map(|(c, x)| (c - r, x.clone())).collect())
        .collect()
}

/// Integer coefficients `c` with `Σ c_i g_i = target`, if any.
pub fn solve_integer_combination(generators: &[SparseVec], target: &SparseVec, dim: usize) -> Option<Vec<BigInt>> {
    let k = generators.len();
    let mut t = EchelonBasis::new(dim + k);
    for (i, g) in generators.iter().enumerate() {
        let mut v = g.clone();
        v.push((dim + i, BigInt::one()));
        t.insert(v);
    }
    let rem = t.reduce(target);
    if rem.iter().any(|(c, _)| *c < dim) {
        return None;
    }
    // target - Σ q_i (g_i, e_i) = (0, -c): the tracked part is minus the coefficients.
    let mut coeffs = vec![BigInt::zero(); k];
    for (c, x) in rem {
        coeffs[c - dim] = -x;
    }
    Some(coeffs)
}
