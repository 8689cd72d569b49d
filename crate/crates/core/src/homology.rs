//! Chain complexes of an LD-system and integer cochains.
//!
//! `C_k` is free on `k`-tuples; the face maps `d*` and `d0` give boundaries
//! `∂*`, `∂0` and the rack boundary `∂R = ∂* - ∂0`. Cocycles are integer
//! cochains killed by `∂R`, computed exactly as integer kernels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::lattice::{integer_kernel, solve_integer_combination, sparse_from_dense, SparseVec};
use crate::laver::LaverTable;
use crate::magma::FiniteMagma;

/// Largest dense cochain accepted, in entries.
pub const MAX_COCHAIN_ENTRIES: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    /// Omit `x_i` and act by `x_i` on the later entries.
    Star,
    /// Omit `x_i`.
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    Star,
    Zero,
    Rack,
}

/// `d_{k,i}` on a tuple, `1 <= i <= k`.
pub fn face_op(m: &FiniteMagma, kind: FaceKind, i: usize, tuple: &[usize]) -> Result<Vec<usize>> {
    let k = tuple.len();
    if i == 0 || i > k {
        return domain(format!("face index {i} outside 1..={k}"));
    }
    let xi = tuple[i - 1];
    let mut out = Vec::with_capacity(k - 1);
    out.extend_from_slice(&tuple[..i - 1]);
    match kind {
        FaceKind::Star => out.extend(tuple[i..].iter().map(|&y| m.op(xi, y))),
        FaceKind::Zero => out.extend_from_slice(&tuple[i..]),
    }
    Ok(out)
}

/// A finitely supported integer combination of `k`-tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntChain {
    pub degree: usize,
    pub terms: BTreeMap<Vec<usize>, BigInt>,
}

impl IntChain {
    pub fn zero(degree: usize) -> Self {
        IntChain { degree, terms: BTreeMap::new() }
    }

    pub fn basis(tuple: Vec<usize>) -> Self {
        let mut c = IntChain::zero(tuple.len());
        c.terms.insert(tuple, BigInt::one());
        c
    }

    /// The generator of `C_0`.
    pub fn unit() -> Self {
        IntChain::basis(Vec::new())
    }

    pub fn add_term(&mut self, tuple: Vec<usize>, coeff: BigInt) {
        debug_assert_eq!(tuple.len(), self.degree);
        let e = self.terms.entry(tuple).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            // Keep the support exact so that equality is structural.
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&mut self, other: &IntChain, scale: &BigInt) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[usize]) -> BigInt {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }
}

fn boundary_tuple(m: &FiniteMagma, kind: BoundaryKind, tuple: &[usize], coeff: &BigInt, out: &mut IntChain) {
    let k = tuple.len();
    for i in 1..=k {
        let sign = if i % 2 == 1 { coeff.clone() } else { -coeff };
        match kind {
            BoundaryKind::Star => out.add_term(face_op(m, FaceKind::Star, i, tuple).unwrap(), sign),
            BoundaryKind::Zero => out.add_term(face_op(m, FaceKind::Zero, i, tuple).unwrap(), sign),
            BoundaryKind::Rack => {
                out.add_term(face_op(m, FaceKind::Star, i, tuple).unwrap(), sign.clone());
                out.add_term(face_op(m, FaceKind::Zero, i, tuple).unwrap(), -sign);
            }
        }
    }
}

/// `∂* = Σ (-1)^{i-1} d*_i`, `∂0` likewise, `∂R = ∂* - ∂0`.
pub fn boundary(m: &FiniteMagma, kind: BoundaryKind, chain: &IntChain) -> Result<IntChain> {
    if chain.degree == 0 {
        return domain("boundary of a degree-0 chain is not defined");
    }
    let mut out = IntChain::zero(chain.degree - 1);
    for (t, c) in &chain.terms {
        boundary_tuple(m, kind, t, c, &mut out);
    }
    Ok(out)
}

/// All `k`-tuples over `1..=m`, leftmost coordinate slowest.
pub fn tuples(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = m.pow(k as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = idx % m + 1;
            idx /= m;
        }
        t
    })
}

/// Integer `k`-cochain stored densely, leftmost coordinate slowest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntCochain {
    degree: usize,
    m: usize,
    values: Vec<BigInt>,
}

fn cochain_len(m: usize, k: usize) -> Result<usize> {
    m.checked_pow(k as u32)
        .filter(|&l| l <= MAX_COCHAIN_ENTRIES)
        .ok_or_else(|| Error::Resource(format!("{m}^{k} cochain entries exceed {MAX_COCHAIN_ENTRIES}")))
}

impl IntCochain {
    pub fn zero(m: usize, degree: usize) -> Result<Self> {
        Ok(IntCochain { degree, m, values: vec![BigInt::zero(); cochain_len(m, degree)?] })
    }

    pub fn constant(m: usize, degree: usize, c: i64) -> Result<Self> {
        Ok(IntCochain { degree, m, values: vec![BigInt::from(c); cochain_len(m, degree)?] })
    }

    pub fn from_values(m: usize, degree: usize, values: Vec<BigInt>) -> Result<Self> {
        if values.len() != cochain_len(m, degree)? {
            return domain(format!("expected {} values, got {}", m.pow(degree as u32), values.len()));
        }
        Ok(IntCochain { degree, m, values })
    }

    pub fn from_fn(m: usize, degree: usize, f: impl Fn(&[usize]) -> i64) -> Result<Self> {
        cochain_len(m, degree)?;
        Ok(IntCochain { degree, m, values: tuples(m, degree).map(|t| BigInt::from(f(&t))).collect() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn carrier(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &x| acc * self.m + (x - 1))
    }

    pub fn get(&self, tuple: &[usize]) -> &BigInt {
        &self.values[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: BigInt) {
        let i = self.index(tuple);
        self.values[i] = v;
    }

    pub fn to_sparse(&self) -> SparseVec {
        sparse_from_dense(&self.values)
    }

    /// Linear extension to a chain of the same degree.
    pub fn eval(&self, chain: &IntChain) -> BigInt {
        if chain.degree != self.degree {
            return BigInt::zero();
        }
        chain.terms.iter().map(|(t, c)| self.get(t) * c).sum()
    }

    pub fn add(&self, other: &IntCochain) -> IntCochain {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        IntCochain { degree: self.degree, m: self.m, values }
    }

    /// Degree-2 cochain as `m` rows of `m` values.
    pub fn grid(&self) -> Vec<Vec<BigInt>> {
        self.values.chunks(self.m).map(|r| r.to_vec()).collect()
    }
}

fn check_carrier(phi: &IntCochain, m: &FiniteMagma) -> Result<()> {
    if phi.m != m.size() {
        return domain(format!("cochain carrier {} does not match magma size {}", phi.m, m.size()));
    }
    Ok(())
}

/// First `(x, y, z)` breaking `φ(x,z) + φ(x*y, x*z) = φ(y,z) + φ(x, y*z)`.
pub fn two_cocycle_witness(phi: &IntCochain, m: &FiniteMagma) -> Result<Option<[usize; 3]>> {
    check_carrier(phi, m)?;
    if phi.degree != 2 {
        return domain("expected a degree-2 cochain");
    }
    let s = m.size();
    for x in 1..=s {
        for y in 1..=s {
            for z in 1..=s {
                let lhs = phi.get(&[x, z]) + phi.get(&[m.op(x, y), m.op(x, z)]);
                let rhs = phi.get(&[y, z]) + phi.get(&[x, m.op(y, z)]);
                if lhs != rhs {
                    return Ok(Some([x, y, z]));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_two_cocycle(phi: &IntCochain, m: &FiniteMagma) -> Result<bool> {
    Ok(two_cocycle_witness(phi, m)?.is_none())
}

/// The three-term exchange condition on all quadruples `(x, y, z, t)`.
pub fn is_three_cocycle(phi: &IntCochain, m: &FiniteMagma) -> Result<bool> {
    check_carrier(phi, m)?;
    if phi.degree != 3 {
        return domain("expected a degree-3 cochain");
    }
    for q in tuples(m.size(), 4) {
        let [x, y, z, t] = [q[0], q[1], q[2], q[3]];
        let lhs = phi.get(&[m.op(x, y), m.op(x, z), m.op(x, t)]) + phi.get(&[x, y, m.op(z, t)]) + phi.get(&[x, z, t]);
        let rhs = phi.get(&[x, m.op(y, z), m.op(y, t)]) + phi.get(&[y, z, t]) + phi.get(&[x, y, t]);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `φ ∘ ∂R = 0` on every `(k+1)`-tuple.
pub fn is_cocycle(phi: &IntCochain, m: &FiniteMagma) -> Result<bool> {
    check_carrier(phi, m)?;
    for t in tuples(m.size(), phi.degree + 1) {
        let mut out = IntChain::zero(phi.degree);
        boundary_tuple(m, BoundaryKind::Rack, &t, &BigInt::one(), &mut out);
        if !phi.eval(&out).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(δf)(x⃗) = f(∂R x⃗)`.
pub fn coboundary_of(f: &IntCochain, m: &FiniteMagma) -> Result<IntCochain> {
    check_carrier(f, m)?;
    let k = f.degree + 1;
    let mut values = Vec::with_capacity(cochain_len(m.size(), k)?);
    for t in tuples(m.size(), k) {
        let mut out = IntChain::zero(f.degree);
        boundary_tuple(m, BoundaryKind::Rack, &t, &BigInt::one(), &mut out);
        values.push(f.eval(&out));
    }
    IntCochain::from_values(m.size(), k, values)
}

/// Rows of the linear system `φ ∘ ∂R = 0` for degree-`k` cochains, deduplicated.
fn cocycle_constraints(m: &FiniteMagma, k: usize) -> Result<Vec<SparseVec>> {
    let s = m.size();
    cochain_len(s, k + 1)?;
    let probe = IntCochain::zero(s, k)?;
    let mut rows = std::collections::BTreeSet::new();
    for t in tuples(s, k + 1) {
        let mut out = IntChain::zero(k);
        boundary_tuple(m, BoundaryKind::Rack, &t, &BigInt::one(), &mut out);
        let mut row: SparseVec = out.terms.iter().map(|(t, c)| (probe.index(t), c.clone())).collect();
        row.sort_by_key(|e| e.0);
        if !row.is_empty() {
            rows.insert(row);
        }
    }
    Ok(rows.into_iter().collect())
}

/// Integral basis of the degree-`k` rack cocycles.
pub fn cocycle_space(m: &FiniteMagma, k: usize) -> Result<Vec<IntCochain>> {
    if k == 0 {
        return domain("cocycle degree must be at least 1");
    }
    let s = m.size();
    let cols = cochain_len(s, k)?;
    let rows = cocycle_constraints(m, k)?;
    integer_kernel(rows, cols)
        .into_iter()
        .map(|v| IntCochain::from_values(s, k, crate::lattice::sparse_to_dense(&v, cols)))
        .collect()
}

/// Rank and integral basis of the 2-cocycles.
pub fn two_cocycle_space(m: &FiniteMagma) -> Result<(usize, Vec<IntCochain>)> {
    let b = cocycle_space(m, 2)?;
    Ok((b.len(), b))
}

pub fn three_cocycle_rank(m: &FiniteMagma) -> Result<usize> {
    Ok(cocycle_space(m, 3)?.len())
}

/// `ψ_{q,n}(x, y) = 1` iff `q` appears in column `y` of `A_n` but not in
/// column `x*y`.
pub fn psi(q: usize, table: &LaverTable) -> Result<IntCochain> {
    let size = table.size();
    if q == 0 || q >= size {
        return domain(format!("q={q} outside 1..{size}"));
    }
    let in_column: Vec<bool> = (1..=size).map(|y| (1..=size).any(|p| table.op(p, y) == q)).collect();
    IntCochain::from_fn(size, 2, |t| {
        let (x, y) = (t[0], t[1]);
        i64::from(in_column[y - 1] && !in_column[table.op(x, y) - 1])
    })
}

/// A 1-cochain `f` with `δf = phi`, if one exists.
pub fn coboundary_preimage(phi: &IntCochain, m: &FiniteMagma) -> Result<Option<IntCochain>> {
    check_carrier(phi, m)?;
    if phi.degree != 2 {
        return domain("expected a degree-2 cochain");
    }
    let s = m.size();
    let gens: Vec<SparseVec> = (1..=s)
        .map(|x| {
            let e = IntCochain::from_fn(s, 1, |t| i64::from(t[0] == x)).unwrap();
            coboundary_of(&e, m).map(|c| c.to_sparse())
        })
        .collect::<Result<_>>()?;
    Ok(solve_integer_combination(&gens, &phi.to_sparse(), s * s)
        .map(|c| IntCochain::from_values(s, 1, c).expect("length s")))
}

/// Candidate contracting homotopies of `∂*` on a Laver table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homotopy {
    /// `x⃗ ↦ (2^n, x⃗)`.
    PrependTop,
    /// `x⃗ ↦ -(2^n, x⃗)`.
    PrependTopNegated,
    /// `x⃗ ↦ (-1)^k (x⃗, 2^n)` on degree `k`.
    AppendTop,
}

fn apply_homotopy(h: Homotopy, top: usize, chain: &IntChain) -> IntChain {
    let mut out = IntChain::zero(chain.degree + 1);
    for (t, c) in &chain.terms {
        let (tuple, coeff) = match h {
            Homotopy::PrependTop => (std::iter::once(top).chain(t.iter().copied()).collect(), c.clone()),
            Homotopy::PrependTopNegated => (std::iter::once(top).chain(t.iter().copied()).collect(), -c),
            Homotopy::AppendTop => {
                let mut v = t.clone();
                v.push(top);
                (v, if t.len() % 2 == 0 { c.clone() } else { -c })
            }
        };
        out.add_term(tuple, coeff);
    }
    out
}

/// The scalar `λ` with `h∂* + ∂*h = λ·id` on every basis chain of degree
/// `0..=k` over `A_n`, if such a scalar exists.
pub fn homotopy_scale(n: u32, k: usize, h: Homotopy) -> Result<Option<i64>> {
    let table = LaverTable::new(n)?;
    let m = table.to_magma();
    let top = table.size();
    let mut scale: Option<i64> = None;
    for deg in 0..=k {
        cochain_len(top, deg + 1)?;
        for t in tuples(top, deg) {
            let c = IntChain::basis(t.clone());
            let mut sum = boundary(&m, BoundaryKind::Star, &apply_homotopy(h, top, &c))?;
            if deg > 0 {
                let b = boundary(&m, BoundaryKind::Star, &c)?;
                sum.add(&apply_homotopy(h, top, &b), &BigInt::one());
            }
            let coeff = sum.coefficient(&t);
            let Ok(l) = i64::try_from(&coeff) else { return Ok(None) };
            let mut rest = sum.clone();
            rest.add_term(t, -coeff);
            if !rest.is_zero() || scale.is_some_and(|s| s != l) {
                return Ok(None);
            }
            scale = Some(l);
        }
    }
    Ok(scale)
}

/// Both contracting homotopies give `h∂* + ∂*h = id` up to degree `k`.
pub fn contracting_homotopy_check(n: u32, k: usize) -> Result<bool> {
    Ok(homotopy_scale(n, k, Homotopy::PrependTop)? == Some(1) && homotopy_scale(n, k, Homotopy::AppendTop)? == Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::dihedral_quandle;

    #[test]
    fn faces() {
        let a2 = LaverTable::new(2).unwrap().to_magma();
        assert_eq!(face_op(&a2, FaceKind::Star, 1, &[1, 2]).unwrap(), vec![4]);
        assert_eq!(face_op(&a2, FaceKind::Zero, 1, &[1, 2]).unwrap(), vec![2]);
        assert_eq!(face_op(&a2, FaceKind::Star, 2, &[1, 1, 2]).unwrap(), vec![1, 4]);
        assert!(face_op(&a2, FaceKind::Star, 3, &[1, 2]).is_err());
    }

    #[test]
    fn rack_boundary_of_pair() {
        let a2 = LaverTable::new(2).unwrap().to_magma();
        let b = boundary(&a2, BoundaryKind::Rack, &IntChain::basis(vec![1, 2])).unwrap();
        let mut expect = IntChain::zero(1);
        expect.add_term(vec![4], BigInt::one());
        expect.add_term(vec![2], -BigInt::one());
        assert_eq!(b, expect);
        let z = boundary(&a2, BoundaryKind::Zero, &IntChain::basis(vec![3])).unwrap();
        assert_eq!(z, IntChain::unit());
    }

    #[test]
    fn small_ranks() {
        let a1 = LaverTable::new(1).unwrap().to_magma();
        assert_eq!(two_cocycle_space(&a1).unwrap().0, 2);
        let one = FiniteMagma::from_rows(&[vec![1]]).unwrap();
        assert_eq!(two_cocycle_space(&one).unwrap().0, 1);
        assert_eq!(three_cocycle_rank(&a1).unwrap(), 3);
    }

    #[test]
    fn cocycle_conditions_agree() {
        let d3 = dihedral_quandle(3).unwrap();
        for phi in cocycle_space(&d3, 2).unwrap() {
            assert!(is_two_cocycle(&phi, &d3).unwrap());
            assert!(is_cocycle(&phi, &d3).unwrap());
        }
        let a1 = LaverTable::new(1).unwrap().to_magma();
        assert!(is_three_cocycle(&IntCochain::constant(2, 3, 1).unwrap(), &a1).unwrap());
    }

    #[test]
    fn psi_entries() {
        let a3 = LaverTable::new(3).unwrap();
        assert_eq!(psi(2, &a3).unwrap().get(&[2, 1]), &BigInt::one());
        assert!((1..=8).all(|y| psi(1, &a3).unwrap().get(&[8, y]).is_zero()));
        assert_eq!(psi(4, &a3).unwrap().get(&[7, 5]), &BigInt::one());
        assert!(psi(8, &a3).is_err());
    }

    #[test]
    fn constant_is_cocycle_and_delta_of_constant_vanishes() {
        let a3 = LaverTable::new(3).unwrap().to_magma();
        assert!(is_two_cocycle(&IntCochain::constant(8, 2, 1).unwrap(), &a3).unwrap());
        let d = coboundary_of(&IntCochain::constant(8, 1, 1).unwrap(), &a3).unwrap();
        assert!(d.values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn homotopies() {
        assert!(contracting_homotopy_check(1, 3).unwrap());
        assert_eq!(homotopy_scale(2, 2, Homotopy::PrependTopNegated).unwrap(), Some(-1));
    }
}
