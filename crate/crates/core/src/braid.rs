//! Braid words and the Garside normal form.
//!
//! A braid on `n` strands is stored as `Δ^inf · f1 ⋯ fk` where each `fi` is a
//! permutation braid (a positive braid in which any two strands cross at most
//! once), no `fi` is trivial or equal to `Δ`, and every adjacent pair is
//! left-weighted. The form is canonical, so equality of braids is equality of
//! normal forms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Largest strand count supported by [`Perm`].
pub const MAX_STRANDS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(n)?;
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return domain(format!(
                    "letter {l} at position {} is not a generator of B_{n}",
                    pos + 1
                ));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("valid strand count")
    }

    /// Whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::Domain(format!("token {} ({tok:?}) is not an integer", pos + 1)))?;
            letters.push(l);
        }
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive_word(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// Same letters viewed in a larger braid group.
    pub fn widen(&self, n: usize) -> Result<BraidWord> {
        if n < self.n {
            return domain(format!("cannot view a {}-strand braid in B_{n}", self.n));
        }
        BraidWord::new(n, self.letters.clone())
    }

    /// `σi ↦ σ_{n-i}`.
    pub fn flip(&self) -> BraidWord {
        let n = self.n as i32;
        BraidWord { n: self.n, letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect() }
    }

    /// `σi ↦ σ_{i+1}` inside `B_ambient`.
    pub fn shift(&self, ambient: usize) -> Result<BraidWord> {
        let top = self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        if top + 2 > ambient {
            return Err(Error::Domain(format!("shift needs at least {} strands, got {ambient}", top + 2)));
        }
        BraidWord::new(ambient, self.letters.iter().map(|&l| l + l.signum()).collect())
    }

    pub fn normal_form(&self) -> GarsideNF {
        GarsideNF::from_word(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<()> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return domain(format!("strand count {n} outside 2..={MAX_STRANDS}"));
    }
    Ok(())
}

/// Permutation braid: `p[a]` is the final position of the strand starting
/// at position `a` (0-based). Strands `a < b` cross iff `p[a] > p[b]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    p: [u8; MAX_STRANDS],
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        let mut p = [0u8; MAX_STRANDS];
        for (a, slot) in p.iter_mut().enumerate().take(n) {
            *slot = a as u8;
        }
        Perm { n: n as u8, p }
    }

    pub fn delta(n: usize) -> Self {
        let mut p = [0u8; MAX_STRANDS];
        for (a, slot) in p.iter_mut().enumerate().take(n) {
            *slot = (n - 1 - a) as u8;
        }
        Perm { n: n as u8, p }
    }

    /// The generator `σi`, `1 <= i < n`.
    pub fn atom(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.p.swap(i - 1, i);
        s
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_strands(n)?;
        let mut seen = [false; MAX_STRANDS];
        let mut p = [0u8; MAX_STRANDS];
        for (a, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return domain(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v - 1] = true;
            p[a] = (v - 1) as u8;
        }
        Ok(Perm { n: n as u8, p })
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        (0..self.n as usize).map(|a| self.p[a] as usize + 1).collect()
    }

    #[inline]
    pub fn at(&self, a: usize) -> usize {
        self.p[a] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n as usize).all(|a| self.p[a] as usize == a)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n as usize;
        (0..n).all(|a| self.p[a] as usize == n - 1 - a)
    }

    pub fn inverse_perm(&self) -> Perm {
        let mut q = *self;
        for a in 0..self.n as usize {
            q.p[self.p[a] as usize] = a as u8;
        }
        q
    }

    /// Permutation of `self · other` (apply `self` first).
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        let mut q = *self;
        for a in 0..self.n as usize {
            q.p[a] = other.p[self.p[a] as usize];
        }
        q
    }

    /// Number of crossings, i.e. the length of the positive braid.
    pub fn length(&self) -> usize {
        let n = self.n as usize;
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.p[a] > self.p[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `σi` left-divides this braid.
    #[inline]
    pub fn starts_with(&self, i: usize) -> bool {
        self.p[i - 1] > self.p[i]
    }

    /// `σi` right-divides this braid.
    pub fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse_perm();
        inv.p[i - 1] > inv.p[i]
    }

    /// Bitmask of the generators that left-divide.
    pub fn left_descents(&self) -> u64 {
        let mut m = 0u64;
        for i in 1..self.n as usize {
            if self.starts_with(i) {
                m |= 1 << i;
            }
        }
        m
    }

    /// Bitmask of the generators that right-divide.
    pub fn right_descents(&self) -> u64 {
        self.inverse_perm().left_descents()
    }

    /// `σi⁻¹ · self`, assuming `σi` left-divides.
    #[inline]
    fn strip_left(&self, i: usize) -> Perm {
        let mut q = *self;
        q.p.swap(i - 1, i);
        q
    }

    /// `self · σi`, assuming `σi` does not right-divide.
    #[inline]
    fn push_right(&self, i: usize) -> Perm {
        let mut q = *self;
        for a in 0..self.n as usize {
            if q.p[a] as usize == i - 1 {
                q.p[a] = i as u8;
            } else if q.p[a] as usize == i {
                q.p[a] = (i - 1) as u8;
            }
        }
        q
    }

    /// Conjugation by `Δ`: `Δ⁻¹ s Δ`, which is also the flip `σi ↦ σ_{n-i}`.
    pub fn tau(&self) -> Perm {
        let n = self.n as usize;
        let mut q = *self;
        for a in 0..n {
            q.p[a] = (n - 1 - self.p[n - 1 - a] as usize) as u8;
        }
        q
    }

    /// `r` with `self · r = Δ`.
    pub fn right_complement(&self) -> Perm {
        self.inverse_perm().then(&Perm::delta(self.n as usize))
    }

    /// A positive word for this permutation braid.
    pub fn word(&self) -> Vec<i32> {
        let mut s = *self;
        let mut out = Vec::with_capacity(s.length());
        'outer: loop {
            for i in 1..self.n as usize {
                if s.starts_with(i) {
                    out.push(i as i32);
                    s = s.strip_left(i);
                    continue 'outer;
                }
            }
            return out;
        }
    }

    /// Greatest common left divisor of two permutation braids.
    pub fn meet(&self, other: &Perm) -> Perm {
        let n = self.n as usize;
        let mut m = Perm::identity(n);
        let (mut a, mut b) = (*self, *other);
        'outer: loop {
            for i in 1..n {
                if a.starts_with(i) && b.starts_with(i) {
                    a = a.strip_left(i);
                    b = b.strip_left(i);
                    m = m.push_right(i);
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Every permutation of `n` points, each a permutation braid.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_images(&cur).expect("valid permutation"));
            let mut i = n - 1;
            while i > 0 && cur[i - 1] >= cur[i] {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            let mut j = n - 1;
            while cur[j] <= cur[i - 1] {
                j -= 1;
            }
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs = self.images();
        for (k, v) in imgs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Moves atoms from the front of `t` to the back of `s` until the pair is
/// left-weighted. Returns whether anything changed.
fn left_weight(s: &mut Perm, t: &mut Perm) -> bool {
    let mut changed = false;
    loop {
        let bad = t.left_descents() & !s.right_descents();
        if bad == 0 {
            return changed;
        }
        let i = bad.trailing_zeros() as usize;
        *t = t.strip_left(i);
        *s = s.push_right(i);
        changed = true;
    }
}

/// Left-greedy normal form `Δ^inf · f1 ⋯ fk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNF {
    n: usize,
    inf: i64,
    factors: Vec<Perm>,
}

impl GarsideNF {
    pub fn identity(n: usize) -> Self {
        GarsideNF { n, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(n: usize, d: i64) -> Self {
        GarsideNF { n, inf: d, factors: Vec::new() }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let mut x = GarsideNF::identity(w.n);
        for &l in &w.letters {
            x.push_letter(l);
        }
        x
    }

    pub fn from_letters(n: usize, letters: &[i32]) -> Result<Self> {
        Ok(Self::from_word(&BraidWord::new(n, letters.to_vec())?))
    }

    pub fn from_simple(s: Perm) -> Self {
        let mut x = GarsideNF::identity(s.strands());
        x.mul_simple(s);
        x
    }

    /// Builds from parts, checking that they already form a normal form.
    pub fn from_parts(n: usize, inf: i64, factors: Vec<Perm>) -> Result<Self> {
        check_strands(n)?;
        for f in &factors {
            if f.strands() != n || f.is_identity() || f.is_delta() {
                return domain("factors must be proper permutation braids on the same strands");
            }
        }
        for w in factors.windows(2) {
            let (mut s, mut t) = (w[0], w[1]);
            if left_weight(&mut s, &mut t) {
                return domain("consecutive factors are not left-weighted");
            }
        }
        Ok(GarsideNF { n, inf, factors })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    /// Exponent sum, which for positive braids is the length of every word.
    pub fn exponent_sum(&self) -> i64 {
        let dl = (self.n * (self.n - 1) / 2) as i64;
        self.inf * dl + self.factors.iter().map(|f| f.length() as i64).sum::<i64>()
    }

    pub fn push_letter(&mut self, l: i32) {
        let i = l.unsigned_abs() as usize;
        let atom = Perm::atom(self.n, i);
        if l > 0 {
            self.mul_simple(atom);
        } else {
            self.mul_simple_inv(atom);
        }
    }

    /// Right multiplication by a permutation braid.
    pub fn mul_simple(&mut self, s: Perm) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (a, b) = self.factors.split_at_mut(j);
            if !left_weight(&mut a[j - 1], &mut b[0]) {
                break;
            }
            j -= 1;
        }
        self.tidy();
    }

    /// Right multiplication by `s⁻¹ = Δ⁻¹ · τ(r)` where `s · r = Δ`.
    pub fn mul_simple_inv(&mut self, s: Perm) {
        if s.is_identity() {
            return;
        }
        self.mul_delta_pow(-1);
        self.mul_simple(s.right_complement().tau());
    }

    /// Right multiplication by `Δ^e`, moving it leftwards through the factors.
    pub fn mul_delta_pow(&mut self, e: i64) {
        if e % 2 != 0 {
            for f in &mut self.factors {
                *f = f.tau();
            }
        }
        self.inf += e;
    }

    fn tidy(&mut self) {
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let lead = self.factors.iter().take_while(|f| f.is_delta()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
    }

    pub fn mul(&self, other: &GarsideNF) -> GarsideNF {
        assert_eq!(self.n, other.n, "strand mismatch");
        let mut x = self.clone();
        x.mul_delta_pow(other.inf);
        for &f in &other.factors {
            x.mul_simple(f);
        }
        x
    }

    pub fn inverse(&self) -> GarsideNF {
        let mut x = GarsideNF::identity(self.n);
        for &f in self.factors.iter().rev() {
            x.mul_simple_inv(f);
        }
        x.mul_delta_pow(-self.inf);
        x
    }

    /// `σi ↦ σ_{n-i}`; conjugation by `Δ`, so the form stays normal.
    pub fn flip(&self) -> GarsideNF {
        GarsideNF { n: self.n, inf: self.inf, factors: self.factors.iter().map(Perm::tau).collect() }
    }

    /// A word representing the braid: `Δ^inf` spelled out, then each factor.
    pub fn to_word(&self) -> BraidWord {
        let dw = Perm::delta(self.n).word();
        let mut letters = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&dw);
            }
        } else {
            for _ in 0..-self.inf {
                letters.extend(dw.iter().rev().map(|&l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(f.word());
        }
        BraidWord { n: self.n, letters }
    }

    /// For a positive braid, a positive word; errors otherwise.
    pub fn positive_word(&self) -> Result<BraidWord> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(self.to_word())
    }

    /// Same braid in `B_m`, `m >= n`.
    pub fn widen(&self, m: usize) -> Result<GarsideNF> {
        Ok(GarsideNF::from_word(&self.to_word().widen(m)?))
    }

    /// `σi` right-divides this positive braid.
    pub fn ends_with_atom(&self, i: usize) -> bool {
        let mut x = self.clone();
        x.mul_simple_inv(Perm::atom(self.n, i));
        x.is_positive()
    }

    /// `self · σi⁻¹`.
    pub fn strip_right_atom(&self, i: usize) -> GarsideNF {
        let mut x = self.clone();
        x.mul_simple_inv(Perm::atom(self.n, i));
        x
    }

    /// Positive head: `Δ` if `inf > 0`, else the first factor (identity if trivial).
    fn head(&self) -> Perm {
        if self.inf > 0 {
            Perm::delta(self.n)
        } else {
            self.factors.first().copied().unwrap_or_else(|| Perm::identity(self.n))
        }
    }

    /// `s⁻¹ · self`.
    fn strip_left_simple(&self, s: Perm) -> GarsideNF {
        let mut x = GarsideNF::identity(self.n);
        x.mul_simple_inv(s);
        x.mul(self)
    }
}

impl fmt::Display for GarsideNF {
    /// `d | p1 ; p2 ; ...` with permutations in 1-based one-line notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.inf)?;
        for (k, p) in self.factors.iter().enumerate() {
            f.write_str(if k == 0 { " " } else { " ; " })?;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for GarsideNF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (d, rest) = s
            .split_once('|')
            .ok_or_else(|| Error::Domain("normal form must look like `d | p1 ; p2`".into()))?;
        let inf: i64 = d.trim().parse().map_err(|_| Error::Domain(format!("bad infimum {d:?}")))?;
        let mut factors = Vec::new();
        for chunk in rest.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let imgs: Vec<usize> = chunk
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Domain(format!("bad image {t:?}"))))
                .collect::<Result<_>>()?;
            factors.push(Perm::from_images(&imgs)?);
        }
        let n = factors
            .first()
            .map(|p| p.strands())
            .ok_or_else(|| Error::Domain("strand count cannot be inferred from an empty form".into()))?;
        GarsideNF::from_parts(n, inf, factors)
    }
}

fn same_strands(a: &GarsideNF, b: &GarsideNF) -> Result<()> {
    if a.n != b.n {
        return Err(Error::StrandMismatch(a.n, b.n));
    }
    Ok(())
}

fn require_positive(xs: &[&GarsideNF]) -> Result<()> {
    if xs.iter().all(|x| x.is_positive()) {
        Ok(())
    } else {
        Err(Error::NotPositive)
    }
}

pub fn normal_form(w: &BraidWord) -> GarsideNF {
    GarsideNF::from_word(w)
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::StrandMismatch(u.n, v.n));
    }
    Ok(u.normal_form() == v.normal_form())
}

pub fn is_positive(w: &BraidWord) -> bool {
    w.normal_form().is_positive()
}

/// `a` right-divides `b` in the positive monoid.
pub fn right_divides(a: &GarsideNF, b: &GarsideNF) -> Result<bool> {
    same_strands(a, b)?;
    require_positive(&[a, b])?;
    Ok(b.mul(&a.inverse()).is_positive())
}

/// `a` left-divides `b` in the positive monoid.
pub fn left_divides(a: &GarsideNF, b: &GarsideNF) -> Result<bool> {
    same_strands(a, b)?;
    require_positive(&[a, b])?;
    Ok(a.inverse().mul(b).is_positive())
}

/// Greatest common left divisor of two positive braids.
pub fn left_gcd(a: &GarsideNF, b: &GarsideNF) -> Result<GarsideNF> {
    same_strands(a, b)?;
    require_positive(&[a, b])?;
    let mut g = GarsideNF::identity(a.n);
    let (mut x, mut y) = (a.clone(), b.clone());
    loop {
        let m = x.head().meet(&y.head());
        if m.is_identity() {
            return Ok(g);
        }
        g.mul_simple(m);
        x = x.strip_left_simple(m);
        y = y.strip_left_simple(m);
    }
}

/// Largest right divisor of `beta` in the submonoid generated by `σ1..σ_{k-1}`.
/// Returns `(remainder, divisor)` with `beta = remainder · divisor`.
pub fn split_parabolic_right(beta: &GarsideNF, k: usize) -> Result<(GarsideNF, GarsideNF)> {
    require_positive(&[beta])?;
    if k > beta.n {
        return domain(format!("parabolic index {k} exceeds strand count {}", beta.n));
    }
    let mut rest = beta.clone();
    let mut letters = Vec::new();
    'outer: loop {
        for i in 1..k {
            let cand = rest.strip_right_atom(i);
            if cand.is_positive() {
                rest = cand;
                letters.push(i as i32);
                continue 'outer;
            }
        }
        break;
    }
    letters.reverse();
    let div = GarsideNF::from_letters(beta.n, &letters)?;
    Ok((rest, div))
}

pub fn max_right_divisor_in_parabolic(beta: &GarsideNF, k: usize) -> Result<GarsideNF> {
    Ok(split_parabolic_right(beta, k)?.1)
}

/// Shifted conjugation `β ∗ γ = β · sh(γ) · σ1 · sh(β)⁻¹` computed in `B_ambient`.
pub fn shifted_conj(beta: &BraidWord, gamma: &BraidWord, ambient: usize) -> Result<BraidWord> {
    let b = beta.widen(ambient)?;
    let sg = gamma.shift(ambient)?;
    let sb = beta.shift(ambient)?;
    let s1 = BraidWord::new(ambient, vec![1])?;
    b.concat(&sg)?.concat(&s1)?.concat(&sb.inverse())
}

/// `w = β1⁻¹ β2` with `β1, β2` positive and left-coprime.
pub fn fraction_decomposition(w: &BraidWord) -> Result<(GarsideNF, GarsideNF)> {
    let x = w.normal_form();
    if x.is_positive() {
        return Ok((GarsideNF::identity(w.n), x));
    }
    let r = -x.inf;
    let num = GarsideNF { n: x.n, inf: 0, factors: x.factors.clone() };
    let den = GarsideNF::delta_power(x.n, r);
    let g = left_gcd(&den, &num)?;
    let gi = g.inverse();
    Ok((gi.mul(&den), gi.mul(&num)))
}

/// `w = Δ^{-d} β0` with `d >= 0`, `β0` positive, and `Δ` not left-dividing
/// `β0` when `d > 0`.
pub fn delta_decomposition(w: &BraidWord) -> (u64, GarsideNF) {
    let x = w.normal_form();
    if x.inf >= 0 {
        return (0, x);
    }
    let d = (-x.inf) as u64;
    (d, GarsideNF { n: x.n, inf: 0, factors: x.factors })
}

/// Orders normal forms by (exponent sum, infimum, factors); a fixed total
/// order used only for deterministic enumeration.
pub fn canonical_cmp(a: &GarsideNF, b: &GarsideNF) -> Ordering {
    a.exponent_sum().cmp(&b.exponent_sum()).then_with(|| a.cmp(b))
}

/// All positive words of length exactly `len` on `n` strands.
pub fn positive_words(n: usize, len: usize) -> Vec<BraidWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| {
                (1..n as i32).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|l| BraidWord { n, letters: l }).collect()
}

/// Distinct positive braids of length exactly `len`, sorted.
pub fn positive_braids(n: usize, len: usize) -> Vec<GarsideNF> {
    let mut v: Vec<GarsideNF> = positive_words(n, len).iter().map(GarsideNF::from_word).collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation_and_delta() {
        let a = w(3, &[1, 2, 1]).normal_form();
        assert_eq!(a, w(3, &[2, 1, 2]).normal_form());
        assert_eq!(a.inf(), 1);
        assert!(a.factors().is_empty());
        assert!(w(3, &[1, -1]).normal_form().is_identity());
    }

    #[test]
    fn far_commutation() {
        assert_eq!(w(4, &[1, 3]).normal_form(), w(4, &[3, 1]).normal_form());
        assert_ne!(w(3, &[1, 2]).normal_form(), w(3, &[2, 1]).normal_form());
    }

    #[test]
    fn positivity() {
        assert!(!is_positive(&w(3, &[1, 2, -1])));
        assert!(is_positive(&w(3, &[-1, 1])));
        assert!(equal(&w(3, &[1, 2, -1]), &w(3, &[-2, 1, 2])).unwrap());
    }

    #[test]
    fn inverse_round_trip() {
        let x = w(4, &[1, -2, 3, 3, -1, 2]).normal_form();
        assert!(x.mul(&x.inverse()).is_identity());
        assert_eq!(x.inverse(), w(4, &[1, -2, 3, 3, -1, 2]).inverse().normal_form());
    }

    #[test]
    fn display_and_parse() {
        let x = w(3, &[1, 1, 2]).normal_form();
        let text = x.to_string();
        assert_eq!(text.parse::<GarsideNF>().unwrap(), x);
        assert_eq!(w(3, &[1, 2, 1]).normal_form().to_string(), "1 |");
    }

    #[test]
    fn parse_words() {
        assert_eq!(BraidWord::parse("1 2 -1", 3).unwrap().letters(), &[1, 2, -1]);
        assert!(BraidWord::parse("", 2).unwrap().is_empty());
        assert!(BraidWord::parse("3", 3).is_err());
        assert!(BraidWord::parse("0", 3).is_err());
        assert!(BraidWord::parse("x", 3).is_err());
    }

    #[test]
    fn divisibility() {
        let delta = w(3, &[1, 2, 1]).normal_form();
        for i in 1..=2 {
            let a = Perm::atom(3, i);
            assert!(right_divides(&GarsideNF::from_simple(a), &delta).unwrap());
        }
        let b = w(3, &[2, 1, 1]).normal_form();
        assert_eq!(max_right_divisor_in_parabolic(&b, 2).unwrap(), w(3, &[1, 1]).normal_form());
        assert_eq!(left_gcd(&b, &b).unwrap(), b);
    }

    #[test]
    fn decompositions() {
        let x = w(3, &[1, 2, -1]);
        let (b1, b2) = fraction_decomposition(&x).unwrap();
        assert_eq!(b1, w(3, &[2]).normal_form());
        assert_eq!(b2, w(3, &[1, 2]).normal_form());
        let (d, b0) = delta_decomposition(&x);
        assert_eq!(d, 1);
        assert_eq!(b0, w(3, &[2, 1, 1, 2]).normal_form());
        let (b1, b2) = fraction_decomposition(&w(3, &[-1])).unwrap();
        assert_eq!((b1, b2.is_identity()), (w(3, &[1]).normal_form(), true));
        let (d, b0) = delta_decomposition(&w(3, &[-1, -2, -1, -2, -1, -2]));
        assert_eq!((d, b0.is_identity()), (2, true));
    }

    #[test]
    fn flips_and_shifts() {
        assert_eq!(w(3, &[1]).flip().letters(), &[2]);
        assert_eq!(shifted_conj(&w(2, &[]), &w(2, &[]), 2).unwrap().letters(), &[1]);
        let x = w(4, &[1, 2, -3]).normal_form();
        assert_eq!(x.flip(), w(4, &[1, 2, -3]).flip().normal_form());
        assert!(w(3, &[2]).shift(3).is_err());
    }
}
