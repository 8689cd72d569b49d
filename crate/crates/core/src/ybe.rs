//! Set-theoretic solutions of the braid form of the Yang-Baxter equation,
//! biracks, and the associated 0/1 (pseudo-)R-matrices.

use crate::error::{domain, Result};
use crate::magma::FiniteMagma;

/// A map `ρ` of `S × S` to itself; bijectivity is not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSolution {
    m: usize,
    map: Vec<(u32, u32)>,
}

impl SetSolution {
    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut map = Vec::with_capacity(m * m);
        for a in 1..=m {
            for b in 1..=m {
                let (x, y) = f(a, b);
                assert!((1..=m).contains(&x) && (1..=m).contains(&y), "image out of range");
                map.push((x as u32, y as u32));
            }
        }
        SetSolution { m, map }
    }

    /// `ρ(a, b) = (a ⌉ b, a ⌈ b)`.
    pub fn from_ops(op1: &FiniteMagma, op2: &FiniteMagma) -> Result<Self> {
        if op1.size() != op2.size() {
            return domain("operations live on carriers of different sizes");
        }
        Ok(Self::from_fn(op1.size(), |a, b| (op1.op(a, b), op2.op(a, b))))
    }

    /// The switch `(a, b) ↦ (b, a)`.
    pub fn switch(m: usize) -> Self {
        Self::from_fn(m, |a, b| (b, a))
    }

    pub fn identity(m: usize) -> Self {
        Self::from_fn(m, |a, b| (a, b))
    }

    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        let (x, y) = self.map[(a - 1) * self.m + b - 1];
        (x as usize, y as usize)
    }

    /// `(ρ1, ρ2)` as binary operations.
    pub fn ops(&self) -> (FiniteMagma, FiniteMagma) {
        (
            FiniteMagma::from_fn(self.m, |a, b| self.apply(a, b).0),
            FiniteMagma::from_fn(self.m, |a, b| self.apply(a, b).1),
        )
    }

    fn r12(&self, t: [usize; 3]) -> [usize; 3] {
        let (x, y) = self.apply(t[0], t[1]);
        [x, y, t[2]]
    }

    fn r23(&self, t: [usize; 3]) -> [usize; 3] {
        let (y, z) = self.apply(t[1], t[2]);
        [t[0], y, z]
    }

    /// First triple on which `ρ12 ρ23 ρ12` and `ρ23 ρ12 ρ23` differ.
    pub fn braid_equation_witness(&self) -> Option<[usize; 3]> {
        let m = self.m;
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    let t = [a, b, c];
                    if self.r12(self.r23(self.r12(t))) != self.r23(self.r12(self.r23(t))) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_braid_equation(&self) -> bool {
        self.braid_equation_witness().is_none()
    }

    pub fn is_invertible(&self) -> bool {
        let mut seen = vec![false; self.m * self.m];
        for &(x, y) in &self.map {
            let i = (x as usize - 1) * self.m + y as usize - 1;
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    /// 1-based `(row, col)` of the nonzero entries of `M[out][in]`, with pair
    /// `(a, b)` at index `(a-1)·m + b`, sorted by column.
    pub fn matrix_coo(&self) -> Vec<(usize, usize)> {
        let m = self.m;
        (1..=m * m)
            .map(|col| {
                let (a, b) = ((col - 1) / m + 1, (col - 1) % m + 1);
                let (x, y) = self.apply(a, b);
                ((x - 1) * m + y, col)
            })
            .collect()
    }

    /// Dense `m² × m²` 0/1 matrix.
    pub fn matrix_dense(&self) -> Vec<Vec<u8>> {
        let d = self.m * self.m;
        let mut out = vec![vec![0u8; d]; d];
        for (r, c) in self.matrix_coo() {
            out[r - 1][c - 1] = 1;
        }
        out
    }
}

/// `ρ(a, b) = (a * b, a)`.
pub fn rack_to_solution(m: &FiniteMagma) -> SetSolution {
    SetSolution::from_fn(m.size(), |a, b| (m.op(a, b), a))
}

/// `x ⌈ y = x`.
pub fn first_projection(m: usize) -> FiniteMagma {
    FiniteMagma::from_fn(m, |x, _| x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BirackFailure {
    /// One of the three exchange laws fails at `(x, y, z)`.
    Law(u8, [usize; 3]),
    /// `y ↦ a ⌉ y` is not injective.
    LeftTranslation(usize),
    /// `x ↦ x ⌈ a` is not injective.
    RightTranslation(usize),
}

/// First failure of the three exchange laws.
pub fn birack_law_witness(l: &FiniteMagma, r: &FiniteMagma) -> Result<Option<(u8, [usize; 3])>> {
    if l.size() != r.size() {
        return domain("operations live on carriers of different sizes");
    }
    let m = l.size();
    for x in 1..=m {
        for y in 1..=m {
            let (xly, xry) = (l.op(x, y), r.op(x, y));
            for z in 1..=m {
                let (ylz, yrz) = (l.op(y, z), r.op(y, z));
                let w = l.op(xry, z);
                if l.op(xly, w) != l.op(x, ylz) {
                    return Ok(Some((1, [x, y, z])));
                }
                if r.op(xly, w) != l.op(r.op(x, ylz), yrz) {
                    return Ok(Some((2, [x, y, z])));
                }
                if r.op(xry, z) != r.op(r.op(x, ylz), yrz) {
                    return Ok(Some((3, [x, y, z])));
                }
            }
        }
    }
    Ok(None)
}

/// Laws plus injectivity of the left translations of `l` and right translations of `r`.
pub fn birack_failure(l: &FiniteMagma, r: &FiniteMagma) -> Result<Option<BirackFailure>> {
    if let Some((k, t)) = birack_law_witness(l, r)? {
        return Ok(Some(BirackFailure::Law(k, t)));
    }
    let m = l.size();
    for a in 1..=m {
        let mut seen = vec![false; m + 1];
        for y in 1..=m {
            let v = l.op(a, y);
            if std::mem::replace(&mut seen[v], true) {
                return Ok(Some(BirackFailure::LeftTranslation(a)));
            }
        }
        let mut seen = vec![false; m + 1];
        for x in 1..=m {
            let v = r.op(x, a);
            if std::mem::replace(&mut seen[v], true) {
                return Ok(Some(BirackFailure::RightTranslation(a)));
            }
        }
    }
    Ok(None)
}

pub fn birack_laws_check(l: &FiniteMagma, r: &FiniteMagma) -> Result<bool> {
    Ok(birack_failure(l, r)?.is_none())
}
