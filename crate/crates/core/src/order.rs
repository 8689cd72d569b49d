//! The Dehornoy ordering of braids, its flipped variant on positive braids,
//! splittings, the alternating normal form, and ordinal ranks on `BP_3`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::braid::{split_parabolic_right, BraidWord, GarsideNF};
use crate::error::{domain, Error, Result};

/// An ordinal below `ω^ω` as `Σ ω^k · c` with strictly decreasing `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrdinalCNF {
    terms: Vec<(u64, u128)>,
}

impl OrdinalCNF {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn finite(c: u128) -> Self {
        Self::monomial(0, c)
    }

    /// `ω^k · c`.
    pub fn monomial(k: u64, c: u128) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            OrdinalCNF { terms: vec![(k, c)] }
        }
    }

    /// From `(exponent, coefficient)` pairs in any order; zero coefficients dropped.
    pub fn from_terms(terms: &[(u64, u128)]) -> Self {
        let mut sorted: Vec<(u64, u128)> = terms.iter().copied().filter(|t| t.1 > 0).collect();
        sorted.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(u64, u128)> = Vec::new();
        for (k, c) in sorted {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 += c,
                _ => out.push((k, c)),
            }
        }
        OrdinalCNF { terms: out }
    }

    pub fn terms(&self) -> &[(u64, u128)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Ordinal sum; terms of `self` below the leading exponent of `rhs` are absorbed.
    pub fn add(&self, rhs: &OrdinalCNF) -> OrdinalCNF {
        let Some(&(k, c)) = rhs.terms.first() else { return self.clone() };
        let mut terms: Vec<(u64, u128)> = self.terms.iter().copied().filter(|t| t.0 > k).collect();
        let carry = self.terms.iter().find(|t| t.0 == k).map_or(0, |t| t.1);
        terms.push((k, carry + c));
        terms.extend_from_slice(&rhs.terms[1..]);
        OrdinalCNF { terms }
    }
}

impl Ord for OrdinalCNF {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let o = a.0.cmp(&b.0).then(a.1.cmp(&b.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for OrdinalCNF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn ordinal_add(a: &OrdinalCNF, b: &OrdinalCNF) -> OrdinalCNF {
    a.add(b)
}

pub fn ordinal_cmp(a: &OrdinalCNF, b: &OrdinalCNF) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for OrdinalCNF {
    /// `w^2*2+w*3+1`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("w")?,
                (1, c) => write!(f, "w*{c}")?,
                (k, 1) => write!(f, "w^{k}")?,
                (k, c) => write!(f, "w^{k}*{c}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for OrdinalCNF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || Error::Domain(format!("cannot parse ordinal {s:?}"));
        let mut terms = Vec::new();
        for part in s.split('+') {
            let (base, coeff) = match part.split_once('*') {
                Some((b, c)) => (b, c.parse::<u128>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let k = if let Some(e) = base.strip_prefix("w^") {
                e.parse::<u64>().map_err(|_| bad())?
            } else if base == "w" {
                1
            } else {
                if part.contains('*') {
                    return Err(bad());
                }
                terms.push((0, base.parse::<u128>().map_err(|_| bad())?));
                continue;
            };
            terms.push((k, coeff));
        }
        let ord = OrdinalCNF::from_terms(&terms);
        if ord.terms != terms {
            return Err(bad());
        }
        Ok(ord)
    }
}

/// The `i` such that the word is `σi`-positive: `σi` occurs, `σi⁻¹` does
/// not, and no `σj^{±1}` with `j < i` does.
pub fn sigma_positive_index(w: &BraidWord) -> Option<usize> {
    let i = w.letters().iter().map(|l| l.unsigned_abs()).min()?;
    if w.letters().iter().any(|&l| l == -(i as i32)) {
        None
    } else {
        Some(i as usize)
    }
}

/// `β = Φ^{p-1}(β_p) ⋯ Φ(β_2) · β_1`, entries stored as `(β_p, …, β_1)`
/// on `n - 1` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingSeq {
    pub n: usize,
    pub entries: Vec<GarsideNF>,
}

impl SplittingSeq {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The braid the sequence describes.
    pub fn recompose(&self) -> Result<GarsideNF> {
        let p = self.entries.len();
        let mut x = GarsideNF::identity(self.n);
        for (k, e) in self.entries.iter().enumerate() {
            let r = p - k;
            let mut y = e.widen(self.n)?;
            if (r - 1) % 2 == 1 {
                y = y.flip();
            }
            x = x.mul(&y);
        }
        Ok(x)
    }
}

fn narrow(x: &GarsideNF, m: usize) -> Result<GarsideNF> {
    let w = x.positive_word()?;
    if w.letters().iter().any(|&l| l as usize >= m) {
        return domain(format!("braid does not lie in BP_{m}"));
    }
    GarsideNF::from_letters(m, w.letters())
}

/// The splitting of a positive braid by repeated maximal right division in
/// `BP_{n-1}` and flipping of the remainder.
pub fn splitting(beta: &GarsideNF) -> Result<SplittingSeq> {
    let n = beta.strands();
    if n < 3 {
        return domain("splitting needs at least 3 strands");
    }
    if !beta.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut entries = Vec::new();
    let mut x = beta.clone();
    while !x.is_identity() {
        let (rest, div) = split_parabolic_right(&x, n - 1)?;
        entries.push(narrow(&div, n - 1)?);
        x = rest.flip();
    }
    entries.reverse();
    Ok(SplittingSeq { n, entries })
}

/// The flipped ordering `<Dφ` on positive braids: ShortLex on splittings,
/// entries compared recursively; on two strands, by exponent.
pub fn compare_flipped(a: &GarsideNF, b: &GarsideNF) -> Result<Ordering> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::NotPositive);
    }
    if a == b {
        return Ok(Ordering::Equal);
    }
    if a.strands() == 2 {
        return Ok(a.exponent_sum().cmp(&b.exponent_sum()));
    }
    let (sa, sb) = (splitting(a)?, splitting(b)?);
    compare_splittings(&sa, &sb)
}

pub fn compare_splittings(a: &SplittingSeq, b: &SplittingSeq) -> Result<Ordering> {
    let o = a.len().cmp(&b.len());
    if o != Ordering::Equal {
        return Ok(o);
    }
    for (x, y) in a.entries.iter().zip(&b.entries) {
        let o = compare_flipped(x, y)?;
        if o != Ordering::Equal {
            return Ok(o);
        }
    }
    Ok(Ordering::Equal)
}

/// The Dehornoy ordering on arbitrary braids: `u <D v` iff `u⁻¹v` has a
/// `σi`-positive representative.
pub fn compare_d(u: &GarsideNF, v: &GarsideNF) -> Result<Ordering> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    let low = u.inf().min(v.inf());
    let k = if low >= 0 { 0 } else { (-low + 1) / 2 };
    let (mut a, mut b) = (u.clone(), v.clone());
    a.mul_delta_pow(2 * k);
    b.mul_delta_pow(2 * k);
    compare_flipped(&a.flip(), &b.flip())
}

pub fn compare_d_words(u: &BraidWord, v: &BraidWord) -> Result<Ordering> {
    compare_d(&u.normal_form(), &v.normal_form())
}

/// Exponents `(e_p, …, e_1)` of the alternating form
/// `σ_{parity(p)}^{e_p} ⋯ σ2^{e_2} σ1^{e_1}` of a positive 3-strand braid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bp3NormalForm {
    pub exponents: Vec<u128>,
}

/// Minimal legal exponent of block `r` when it is not the leading block.
pub fn epsilon(r: usize) -> u128 {
    match r {
        1 => 0,
        2 => 1,
        _ => 2,
    }
}

impl Bp3NormalForm {
    pub fn new(exponents: Vec<u128>) -> Result<Self> {
        let nf = Bp3NormalForm { exponents };
        if !nf.is_valid() {
            return domain(format!("{:?} violates the exponent constraints", nf.exponents));
        }
        Ok(nf)
    }

    pub fn p(&self) -> usize {
        self.exponents.len()
    }

    /// `e_r`, 1-based from the right.
    pub fn e(&self, r: usize) -> u128 {
        self.exponents[self.exponents.len() - r]
    }

    pub fn is_valid(&self) -> bool {
        let p = self.p();
        if p == 0 {
            return true;
        }
        self.e(p) >= 1 && (1..p).all(|r| self.e(r) >= epsilon(r))
    }

    /// Generator of block `r`: `σ1` for odd `r`, `σ2` for even.
    pub fn generator(r: usize) -> i32 {
        if r % 2 == 1 {
            1
        } else {
            2
        }
    }

    pub fn to_letters(&self) -> Vec<i32> {
        let p = self.p();
        let mut out = Vec::new();
        for (k, &e) in self.exponents.iter().enumerate() {
            let g = Self::generator(p - k);
            out.extend(std::iter::repeat_n(g, e as usize));
        }
        out
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::new(3, self.to_letters()).expect("3-strand letters")
    }

    /// `σ2²σ1³`-style rendering; `1` for the trivial braid.
    pub fn render(&self) -> String {
        render_blocks(&self.exponents)
    }

    pub fn rank(&self) -> OrdinalCNF {
        let p = self.p();
        let mut terms = Vec::with_capacity(p);
        for r in (1..=p).rev() {
            let c = if r == p { self.e(r) } else { self.e(r) - epsilon(r) };
            terms.push(((r - 1) as u64, c));
        }
        OrdinalCNF::from_terms(&terms)
    }
}

/// Text like `s2^2 s1^3` for the block exponents `(e_p, …, e_1)`.
pub fn render_blocks(exponents: &[u128]) -> String {
    let p = exponents.len();
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| {
            let g = Bp3NormalForm::generator(p - k);
            if e == 1 {
                format!("s{g}")
            } else {
                format!("s{g}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn bp3_normal_exponents(beta: &GarsideNF) -> Result<Bp3NormalForm> {
    if beta.strands() != 3 {
        return domain("expected a 3-strand braid");
    }
    let s = splitting(beta)?;
    let exponents = s.entries.iter().map(|e| e.exponent_sum() as u128).collect();
    Ok(Bp3NormalForm { exponents })
}

pub fn rank_bp3(beta: &GarsideNF) -> Result<OrdinalCNF> {
    Ok(bp3_normal_exponents(beta)?.rank())
}

/// Fully expanded word obtained by splitting recursively down to powers of `σ1`.
pub fn alternating_normal_form(beta: &GarsideNF) -> Result<BraidWord> {
    let n = beta.strands();
    if !beta.is_positive() {
        return Err(Error::NotPositive);
    }
    if n == 2 {
        return BraidWord::new(2, vec![1; beta.exponent_sum() as usize]);
    }
    let s = splitting(beta)?;
    let p = s.len();
    let mut letters = Vec::new();
    for (k, e) in s.entries.iter().enumerate() {
        let r = p - k;
        let sub = alternating_normal_form(e)?.widen(n)?;
        let sub = if (r - 1) % 2 == 1 { sub.flip() } else { sub };
        letters.extend_from_slice(sub.letters());
    }
    BraidWord::new(n, letters)
}

/// Largest `k` with `Δ^{2k} ≤D β`.
pub fn d_floor(beta: &GarsideNF) -> Result<i64> {
    let n = beta.strands();
    // Δ^inf ≤D β ≤D Δ^sup since β is a right multiple of the former by a
    // positive braid and a left divisor of the latter.
    let lo = beta.inf().div_euclid(2);
    let hi = beta.sup().div_euclid(2);
    for k in (lo..=hi).rev() {
        let d = GarsideNF::delta_power(n, 2 * k);
        if compare_d(&d, beta)? != Ordering::Greater {
            return Ok(k);
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, l: &[i32]) -> GarsideNF {
        GarsideNF::from_letters(n, l).unwrap()
    }

    #[test]
    fn ordinals() {
        let w = OrdinalCNF::monomial(1, 1);
        assert_eq!(OrdinalCNF::finite(1).add(&w), w);
        let x = OrdinalCNF::from_terms(&[(2, 2), (1, 3)]);
        assert_eq!(x.to_string(), "w^2*2+w*3");
        assert_eq!("w^2*2+w*3".parse::<OrdinalCNF>().unwrap(), x);
        let y = OrdinalCNF::from_terms(&[(2, 1), (0, 1)]);
        assert_eq!(y.cmp(&OrdinalCNF::monomial(1, 5)), Ordering::Greater);
        assert_eq!(OrdinalCNF::zero().to_string(), "0");
        assert!("w^2+w^3".parse::<OrdinalCNF>().is_err());
    }

    #[test]
    fn sigma_positive() {
        let w = |l: &[i32]| BraidWord::new(3, l.to_vec()).unwrap();
        assert_eq!(sigma_positive_index(&w(&[2, 1, -2])), Some(1));
        assert_eq!(sigma_positive_index(&w(&[])), None);
        assert_eq!(sigma_positive_index(&w(&[-1, 2, 1])), None);
    }

    #[test]
    fn splittings() {
        let s = splitting(&nf(3, &[2, 1])).unwrap();
        assert_eq!(s.entries, vec![nf(2, &[1]), nf(2, &[1])]);
        let s = splitting(&nf(3, &[1, 2])).unwrap();
        assert_eq!(s.entries, vec![nf(2, &[1]), nf(2, &[1]), nf(2, &[])]);
        assert_eq!(s.recompose().unwrap(), nf(3, &[1, 2]));
        assert_eq!(splitting(&nf(4, &[1, 2, 1])).unwrap().len(), 1);
    }

    #[test]
    fn flipped_order() {
        assert_eq!(compare_flipped(&nf(3, &[1]), &nf(3, &[2])).unwrap(), Ordering::Less);
        assert_eq!(compare_flipped(&nf(3, &[2, 1]), &nf(3, &[1, 2])).unwrap(), Ordering::Less);
        assert!(compare_flipped(&nf(3, &[-1]), &nf(3, &[2])).is_err());
    }

    #[test]
    fn d_order() {
        assert_eq!(compare_d(&nf(3, &[1]), &nf(3, &[2, 1])).unwrap(), Ordering::Less);
        assert_eq!(compare_d(&nf(3, &[-1]), &nf(3, &[])).unwrap(), Ordering::Less);
        assert_eq!(compare_d(&nf(3, &[2]), &nf(3, &[1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn bp3_forms_and_ranks() {
        let delta = nf(3, &[1, 2, 1]);
        assert_eq!(bp3_normal_exponents(&delta).unwrap().exponents, vec![1, 1, 1]);
        assert_eq!(rank_bp3(&delta).unwrap().to_string(), "w^2+1");
        assert!(rank_bp3(&nf(3, &[])).unwrap().is_zero());
        assert_eq!(bp3_normal_exponents(&nf(3, &[2, 2, 1, 1])).unwrap().exponents, vec![2, 2]);
        assert_eq!(rank_bp3(&nf(3, &[2, 1, 1, 2])).unwrap().to_string(), "w^3");
    }

    #[test]
    fn anf() {
        assert_eq!(alternating_normal_form(&nf(3, &[2, 1, 2])).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(alternating_normal_form(&nf(3, &[1, 1, 1])).unwrap().letters(), &[1, 1, 1]);
    }

    #[test]
    fn floors() {
        assert_eq!(d_floor(&nf(3, &[])).unwrap(), 0);
        assert_eq!(d_floor(&GarsideNF::delta_power(3, 2)).unwrap(), 1);
        assert_eq!(d_floor(&nf(3, &[-1])).unwrap(), -1);
    }
}
