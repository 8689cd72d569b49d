//! Finite binary systems, algebraic-law predicates and the standard rack families.
//!
//! Elements are the integers `1..=m`. A table stores `x * y` at row `x`, column `y`.

use std::fmt;

use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMagma {
    m: usize,
    op: Vec<u32>,
    pub label: Option<String>,
}

/// Outcome of solving `a * c = b` for `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeftInverse {
    Unique(usize),
    Absent,
    Ambiguous(Vec<usize>),
}

impl FiniteMagma {
    /// Builds a magma from a row-major table of 1-based entries.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return domain("empty carrier");
        }
        let mut op = Vec::with_capacity(m * m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return domain(format!("row {} has {} entries, expected {m}", i + 1, row.len()));
            }
            for &v in row {
                if v == 0 || v > m {
                    return domain(format!("entry {v} in row {} is outside 1..={m}", i + 1));
                }
                op.push(v as u32);
            }
        }
        Ok(Self { m, op, label: None })
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(m > 0, "empty carrier");
        let mut op = Vec::with_capacity(m * m);
        for x in 1..=m {
            for y in 1..=m {
                let v = f(x, y);
                assert!((1..=m).contains(&v), "value {v} out of range");
                op.push(v as u32);
            }
        }
        Self { m, op, label: None }
    }

    pub(crate) fn from_raw(m: usize, op: Vec<u32>) -> Self {
        debug_assert_eq!(op.len(), m * m);
        Self { m, op, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[(x - 1) * self.m + (y - 1)] as usize
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.op[(x - 1) * self.m..x * self.m]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.m)
            .map(|x| self.row(x).iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// `x * y = y`.
    pub fn trivial_rack(m: usize) -> Self {
        Self::from_fn(m, |_, y| y).with_label(format!("trivial:{m}"))
    }

    /// `x * y = y + 1 mod m`.
    pub fn cyclic_rack(m: usize) -> Self {
        Self::from_fn(m, |_, y| y % m + 1).with_label(format!("cyclic:{m}"))
    }

    /// First witness `(x, y, z)` of `x*(y*z) != (x*y)*(x*z)`.
    pub fn ld_witness(&self) -> Option<[usize; 3]> {
        let m = self.m;
        for x in 1..=m {
            for y in 1..=m {
                let xy = self.op(x, y);
                for z in 1..=m {
                    if self.op(x, self.op(y, z)) != self.op(xy, self.op(x, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_ld(&self) -> bool {
        self.ld_witness().is_none()
    }

    pub fn is_left_cancellative(&self) -> bool {
        (1..=self.m).all(|x| row_is_permutation(self.row(x)))
    }

    /// LD with bijective left translations.
    pub fn is_rack(&self) -> bool {
        self.is_left_cancellative() && self.is_ld()
    }

    pub fn is_idempotent(&self) -> bool {
        (1..=self.m).all(|x| self.op(x, x) == x)
    }

    pub fn is_quandle(&self) -> bool {
        self.is_idempotent() && self.is_rack()
    }

    /// First witness of `(x*y)*(x*z) != (y*x)*(y*z)`.
    pub fn rump_witness(&self) -> Option<[usize; 3]> {
        let m = self.m;
        for x in 1..=m {
            for y in 1..=m {
                let (xy, yx) = (self.op(x, y), self.op(y, x));
                for z in 1..=m {
                    if self.op(xy, self.op(x, z)) != self.op(yx, self.op(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_rump_law(&self) -> bool {
        self.rump_witness().is_none()
    }

    /// Solves `a * c = b`.
    pub fn left_inverse_op(&self, a: usize, b: usize) -> LeftInverse {
        let hits: Vec<usize> = self
            .row(a)
            .iter()
            .enumerate()
            .filter(|(_, &v)| v as usize == b)
            .map(|(c, _)| c + 1)
            .collect();
        match hits.len() {
            0 => LeftInverse::Absent,
            1 => LeftInverse::Unique(hits[0]),
            _ => LeftInverse::Ambiguous(hits),
        }
    }

    /// The inverse operation `a ∗̄ b`, defined when row `a` is a bijection.
    pub fn left_div(&self, a: usize, b: usize) -> Option<usize> {
        match self.left_inverse_op(a, b) {
            LeftInverse::Unique(c) => Some(c),
            _ => None,
        }
    }

    /// Table of `a ∗̄ b` for a magma whose rows are permutations.
    pub fn left_division_table(&self) -> Option<FiniteMagma> {
        let m = self.m;
        let mut op = vec![0u32; m * m];
        for a in 1..=m {
            for (c, &v) in self.row(a).iter().enumerate() {
                let slot = &mut op[(a - 1) * m + (v as usize - 1)];
                if *slot != 0 {
                    return None;
                }
                *slot = c as u32 + 1;
            }
        }
        Some(FiniteMagma::from_raw(m, op))
    }
}

fn row_is_permutation(row: &[u32]) -> bool {
    let mut seen = vec![false; row.len()];
    for &v in row {
        let i = v as usize - 1;
        if seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `a * b = 2a - b mod k`, with residue 0 written as `k`.
pub fn dihedral_quandle(k: usize) -> Result<FiniteMagma> {
    if k == 0 {
        return domain("dihedral quandle needs k >= 1");
    }
    let ki = k as i64;
    Ok(FiniteMagma::from_fn(k, |a, b| {
        let r = (2 * a as i64 - b as i64).rem_euclid(ki);
        if r == 0 {
            k
        } else {
            r as usize
        }
    })
    .with_label(format!("dihedral:{k}")))
}

/// `a * b = (1 - t)a + tb mod m`, with residue 0 written as `m`.
pub fn affine_quandle(m: usize, t: i64) -> Result<FiniteMagma> {
    if m == 0 {
        return domain("affine quandle needs m >= 1");
    }
    let mi = m as i64;
    if gcd(t.rem_euclid(mi), mi) != 1 && m > 1 {
        return domain(format!("affine quandle needs gcd(t, m) = 1, got t={t}, m={m}"));
    }
    Ok(FiniteMagma::from_fn(m, |a, b| {
        let r = ((1 - t) * a as i64 + t * b as i64).rem_euclid(mi);
        if r == 0 {
            m
        } else {
            r as usize
        }
    })
    .with_label(format!("affine:{m}:{t}")))
}

/// `a * b = a b a^-1` for a group given by its multiplication table.
pub fn conjugation_rack(group: &FiniteMagma) -> Result<FiniteMagma> {
    let m = group.size();
    let e = (1..=m)
        .find(|&e| (1..=m).all(|x| group.op(e, x) == x && group.op(x, e) == x))
        .ok_or_else(|| crate::Error::Domain("table has no identity element".into()))?;
    let mut inv = vec![0usize; m + 1];
    for x in 1..=m {
        inv[x] = (1..=m)
            .find(|&y| group.op(x, y) == e && group.op(y, x) == e)
            .ok_or_else(|| crate::Error::Domain(format!("element {x} has no inverse")))?;
    }
    for x in 1..=m {
        for y in 1..=m {
            for z in 1..=m {
                if group.op(group.op(x, y), z) != group.op(x, group.op(y, z)) {
                    return domain(format!("table is not associative at ({x},{y},{z})"));
                }
            }
        }
    }
    Ok(FiniteMagma::from_fn(m, |a, b| group.op(group.op(a, b), inv[a])).with_label("conjugation"))
}

/// Multiplication table of the symmetric group on `k` points, elements in
/// lexicographic order of their one-line notation.
pub fn symmetric_group_table(k: usize) -> FiniteMagma {
    let mut out: Vec<Vec<usize>> = vec![(0..k).collect()];
    while let Some(next) = next_permutation(out.last().unwrap()) {
        out.push(next);
    }
    let index = |p: &Vec<usize>| out.iter().position(|q| q == p).unwrap() + 1;
    let n = out.len();
    FiniteMagma::from_fn(n, |a, b| {
        let (p, q) = (&out[a - 1], &out[b - 1]);
        let comp: Vec<usize> = (0..k).map(|i| p[q[i]]).collect();
        index(&comp)
    })
    .with_label(format!("S{k}"))
}

fn next_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut v = p.to_vec();
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// Which of the two formal operations a term node uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOp {
    Star,
    StarBar,
}

/// A formal combination of generators under `*` and its inverse `∗̄`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuandleTerm {
    Gen(usize),
    Node(TermOp, Box<QuandleTerm>, Box<QuandleTerm>),
}

impl QuandleTerm {
    pub fn star(a: QuandleTerm, b: QuandleTerm) -> Self {
        QuandleTerm::Node(TermOp::Star, Box::new(a), Box::new(b))
    }

    pub fn star_bar(a: QuandleTerm, b: QuandleTerm) -> Self {
        QuandleTerm::Node(TermOp::StarBar, Box::new(a), Box::new(b))
    }

    /// Largest generator index used (generators are 1-based).
    pub fn max_gen(&self) -> usize {
        match self {
            QuandleTerm::Gen(i) => *i,
            QuandleTerm::Node(_, a, b) => a.max_gen().max(b.max_gen()),
        }
    }

    /// Evaluates in a finite magma; `None` if some `∗̄` is undefined.
    pub fn eval(&self, m: &FiniteMagma, assignment: &[usize]) -> Option<usize> {
        match self {
            QuandleTerm::Gen(i) => Some(assignment[i - 1]),
            QuandleTerm::Node(k, a, b) => {
                let (x, y) = (a.eval(m, assignment)?, b.eval(m, assignment)?);
                match k {
                    TermOp::Star => Some(m.op(x, y)),
                    TermOp::StarBar => m.left_div(x, y),
                }
            }
        }
    }

    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            QuandleTerm::Gen(i) => write!(f, "{}", generator_name(*i)),
            QuandleTerm::Node(k, a, b) => {
                if !top {
                    write!(f, "(")?;
                }
                a.fmt_inner(f, false)?;
                write!(f, "{}", if *k == TermOp::Star { "*" } else { "/" })?;
                b.fmt_inner(f, false)?;
                if !top {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// `a, b, ..., z`, then `a27, a28, ...`.
pub fn generator_name(i: usize) -> String {
    if (1..=26).contains(&i) {
        ((b'a' + (i - 1) as u8) as char).to_string()
    } else {
        format!("a{i}")
    }
}

impl fmt::Display for QuandleTerm {
    /// `*` for the operation, `/` for its inverse; outermost node unbracketed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f, true)
    }
}
