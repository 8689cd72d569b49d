//! Colourings of braid diagrams: Hurwitz actions, closure colouring counts,
//! cocycle invariants and fundamental quandle presentations.
//!
//! Positions are numbered `1..=m`; a crossing `σi` acts on positions
//! `(i, i+1)` by `(a, b) ↦ (a*b, a)`, and `σi⁻¹` by `(x, y) ↦ (y, y ∗̄ x)`.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::braid::{delta_decomposition, fraction_decomposition, BraidWord, GarsideNF};
use crate::error::{domain, Error, Result};
use crate::homology::{is_two_cocycle, IntCochain};
use crate::laver::LaverTable;
use crate::magma::{generator_name, FiniteMagma, QuandleTerm};

/// A set with a binary operation and a partial left division.
pub trait Shelf {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// `a * b`, or `None` when it leaves the represented carrier.
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// The `c` with `a * c = b`, when it exists and is unique.
    fn left_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

impl Shelf for FiniteMagma {
    type Elem = usize;

    fn op(&self, a: &usize, b: &usize) -> Option<usize> {
        Some(FiniteMagma::op(self, *a, *b))
    }

    fn left_div(&self, a: &usize, b: &usize) -> Option<usize> {
        FiniteMagma::left_div(self, *a, *b)
    }
}

/// `x * y = y + 1` on the integers, optionally restricted to a window
/// outside of which values are undefined.
#[derive(Clone, Debug, Default)]
pub struct IntegerRack {
    pub window: Option<RangeInclusive<i64>>,
}

impl IntegerRack {
    fn inside(&self, v: i64) -> Option<i64> {
        match &self.window {
            Some(w) if !w.contains(&v) => None,
            _ => Some(v),
        }
    }
}

impl Shelf for IntegerRack {
    type Elem = i64;

    fn op(&self, _: &i64, b: &i64) -> Option<i64> {
        self.inside(b + 1)
    }

    fn left_div(&self, _: &i64, b: &i64) -> Option<i64> {
        self.inside(b - 1)
    }
}

/// Freely reduced word in a free group; generator `i` is `i`, its inverse `-i`.
pub type FreeWord = Vec<i32>;

pub fn free_reduce(w: &[i32]) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn free_inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|&l| -l).collect()
}

fn free_mul(parts: &[&[i32]]) -> FreeWord {
    free_reduce(&parts.concat())
}

/// The free group under conjugation `x * y = x y x⁻¹`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroupConj;

impl Shelf for FreeGroupConj {
    type Elem = FreeWord;

    fn op(&self, a: &FreeWord, b: &FreeWord) -> Option<FreeWord> {
        Some(free_mul(&[a, b, &free_inverse(a)]))
    }

    fn left_div(&self, a: &FreeWord, b: &FreeWord) -> Option<FreeWord> {
        Some(free_mul(&[&free_inverse(a), b, a]))
    }
}

/// Formal terms; `∗̄` is recorded, never simplified.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymbolicQuandle;

impl Shelf for SymbolicQuandle {
    type Elem = QuandleTerm;

    fn op(&self, a: &QuandleTerm, b: &QuandleTerm) -> Option<QuandleTerm> {
        Some(QuandleTerm::star(a.clone(), b.clone()))
    }

    fn left_div(&self, a: &QuandleTerm, b: &QuandleTerm) -> Option<QuandleTerm> {
        Some(QuandleTerm::star_bar(a.clone(), b.clone()))
    }
}

/// Propagates colours through `w`; `None` when a crossing cannot be coloured.
pub fn act<S: Shelf>(shelf: &S, colours: &[S::Elem], letters: &[i32]) -> Option<Vec<S::Elem>> {
    let mut c = colours.to_vec();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        let (x, y) = (c[i].clone(), c[i + 1].clone());
        if l > 0 {
            c[i] = shelf.op(&x, &y)?;
            c[i + 1] = x;
        } else {
            c[i + 1] = shelf.left_div(&y, &x)?;
            c[i] = y;
        }
    }
    Some(c)
}

fn check_colours(m: &FiniteMagma, colours: &[usize], w: &BraidWord) -> Result<()> {
    if colours.len() != w.strands() {
        return domain(format!("{} colours for a {}-strand braid", colours.len(), w.strands()));
    }
    if let Some(c) = colours.iter().find(|&&c| c == 0 || c > m.size()) {
        return domain(format!("colour {c} outside 1..={}", m.size()));
    }
    Ok(())
}

/// Whether an algebraic precondition is verified or taken on trust.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Verify,
    Trust,
}

/// Action of a positive word over an LD-system.
pub fn act_positive(m: &FiniteMagma, colours: &[usize], w: &BraidWord, check: Check) -> Result<Vec<usize>> {
    check_colours(m, colours, w)?;
    if !w.is_positive_word() {
        return domain("word contains a negative letter");
    }
    if check == Check::Verify && !m.is_ld() {
        return domain("operation is not left-selfdistributive");
    }
    Ok(act(m, colours, w.letters()).expect("positive crossings are always defined"))
}

/// Action of an arbitrary word over a rack.
pub fn act_full(m: &FiniteMagma, colours: &[usize], w: &BraidWord) -> Result<Vec<usize>> {
    check_colours(m, colours, w)?;
    if !m.is_rack() {
        return domain("operation is not a rack");
    }
    Ok(act(m, colours, w.letters()).expect("racks colour every crossing"))
}

/// Partial action over a left-cancellative LD-system; `None` when blocked.
pub fn act_partial(m: &FiniteMagma, colours: &[usize], w: &BraidWord) -> Result<Option<Vec<usize>>> {
    check_colours(m, colours, w)?;
    if !m.is_left_cancellative() {
        return domain("operation is not left-cancellative");
    }
    Ok(act(m, colours, w.letters()))
}

/// Colour vectors fixed by the action of `w`, i.e. colourings of its closure.
pub fn closure_colourings(m: &FiniteMagma, w: &BraidWord) -> Result<Vec<Vec<usize>>> {
    if !m.is_rack() {
        return domain("operation is not a rack");
    }
    let k = w.strands();
    let s = m.size();
    let total = s
        .checked_pow(k as u32)
        .filter(|&t| t <= 1 << 26)
        .ok_or_else(|| Error::Resource(format!("{s}^{k} colour vectors")))?;
    let mut out = Vec::new();
    let mut v = vec![1usize; k];
    for _ in 0..total {
        if act(m, &v, w.letters()).as_deref() == Some(&v[..]) {
            out.push(v.clone());
        }
        for slot in v.iter_mut().rev() {
            if *slot < s {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    Ok(out)
}

pub fn count_closure_colourings(m: &FiniteMagma, w: &BraidWord) -> Result<u64> {
    Ok(closure_colourings(m, w)?.len() as u64)
}

/// Sum of `φ(a, b)` over the crossings of a positive word, `(a, b)` being the
/// input colours at each crossing.
pub fn cocycle_invariant(
    m: &FiniteMagma,
    phi: &IntCochain,
    w: &BraidWord,
    colours: &[usize],
    check: Check,
) -> Result<BigInt> {
    check_colours(m, colours, w)?;
    if !w.is_positive_word() {
        return domain("word contains a negative letter");
    }
    if check == Check::Verify && !is_two_cocycle(phi, m)? {
        return domain("cochain is not a 2-cocycle");
    }
    let mut c = colours.to_vec();
    let mut total = BigInt::default();
    for &l in w.letters() {
        let i = l as usize - 1;
        let (a, b) = (c[i], c[i + 1]);
        total += phi.get(&[a, b]);
        c[i] = m.op(a, b);
        c[i + 1] = a;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandlePresentation {
    pub generators: usize,
    pub relations: Vec<(QuandleTerm, QuandleTerm)>,
}

impl fmt::Display for QuandlePresentation {
    /// `<a, b | t1 = a, t2 = b>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators).map(generator_name).collect();
        let rels: Vec<String> = self.relations.iter().map(|(l, r)| format!("{l} = {r}")).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

impl QuandlePresentation {
    /// Whether an assignment of generators satisfies every relation in `m`.
    pub fn satisfied_by(&self, m: &FiniteMagma, assignment: &[usize]) -> bool {
        self.relations.iter().all(|(l, r)| {
            let (x, y) = (l.eval(m, assignment), r.eval(m, assignment));
            x.is_some() && x == y
        })
    }
}

/// Output labels of the closure diagram equated with its input labels.
pub fn fundamental_quandle(w: &BraidWord) -> QuandlePresentation {
    let k = w.strands();
    let inputs: Vec<QuandleTerm> = (1..=k).map(QuandleTerm::Gen).collect();
    let outputs = act(&SymbolicQuandle, &inputs, w.letters()).expect("symbolic colouring is total");
    QuandlePresentation { generators: k, relations: outputs.into_iter().zip(inputs).collect() }
}

fn term_to_word(t: &QuandleTerm) -> FreeWord {
    match t {
        QuandleTerm::Gen(i) => vec![*i as i32],
        QuandleTerm::Node(op, a, b) => {
            let (x, y) = (term_to_word(a), term_to_word(b));
            match op {
                crate::magma::TermOp::Star => FreeGroupConj.op(&x, &y).unwrap(),
                crate::magma::TermOp::StarBar => FreeGroupConj.left_div(&x, &y).unwrap(),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    /// Freely reduced relators `t_i a_i⁻¹`.
    pub relators: Vec<FreeWord>,
}

/// Lower case for a generator, upper case for its inverse.
pub fn render_free_word(w: &[i32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&l| {
            let g = generator_name(l.unsigned_abs() as usize);
            if l < 0 {
                g.to_uppercase()
            } else {
                g
            }
        })
        .collect::<Vec<_>>()
        .join(if w.iter().any(|l| l.unsigned_abs() > 26) { " " } else { "" })
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators).map(generator_name).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| render_free_word(r)).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// The quandle presentation read in the free group with `x * y = x y x⁻¹`.
pub fn wirtinger_group(w: &BraidWord) -> GroupPresentation {
    let q = fundamental_quandle(w);
    let relators = q
        .relations
        .iter()
        .map(|(t, a)| free_mul(&[&term_to_word(t), &free_inverse(&term_to_word(a))]))
        .collect();
    GroupPresentation { generators: q.generators, relators }
}

/// Free cyclic reduction followed by the lexicographically least rotation of
/// the word or its inverse; equal values mean the relators generate the same
/// normal subgroup on their own.
pub fn cyclic_normal_form(w: &[i32]) -> FreeWord {
    let mut v = free_reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.remove(0);
        v.pop();
    }
    let mut best: Option<FreeWord> = None;
    for cand in [v.clone(), free_inverse(&v)] {
        for r in 0..cand.len().max(1) {
            let mut rot = cand.clone();
            rot.rotate_left(r.min(cand.len()));
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FractionMode {
    /// `w = β1⁻¹ β2` with left-coprime positive `β1, β2`.
    Fraction,
    /// `w = Δ^{-d} β0`.
    Delta,
}

/// Colours the two positive halves of a decomposition of `w` from `mid` in `A_n`.
pub fn laver_fraction_colouring(
    n: u32,
    w: &BraidWord,
    mid: &[usize],
    mode: FractionMode,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let table = LaverTable::new(n)?.to_magma();
    let (left, right) = match mode {
        FractionMode::Fraction => fraction_decomposition(w)?,
        FractionMode::Delta => {
            let (d, b0) = delta_decomposition(w);
            (GarsideNF::delta_power(w.strands(), d as i64), b0)
        }
    };
    let l = act_positive(&table, mid, &left.positive_word()?, Check::Trust)?;
    let r = act_positive(&table, mid, &right.positive_word()?, Check::Trust)?;
    Ok((l, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::dihedral_quandle;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn positive_action() {
        let a2 = LaverTable::new(2).unwrap().to_magma();
        assert_eq!(act_positive(&a2, &[1, 2, 1], &w(3, &[1]), Check::Verify).unwrap(), vec![4, 1, 1]);
        assert_eq!(act_positive(&a2, &[1, 1, 1], &w(3, &[1, 2, 1]), Check::Verify).unwrap(), vec![4, 2, 1]);
        assert!(act_positive(&a2, &[1, 1, 1], &w(3, &[-1]), Check::Verify).is_err());
    }

    #[test]
    fn full_action() {
        let d3 = dihedral_quandle(3).unwrap();
        assert_eq!(act_full(&d3, &[1, 2], &w(2, &[1])).unwrap(), vec![3, 1]);
        assert_eq!(act_full(&d3, &[1, 2], &w(2, &[1, -1])).unwrap(), vec![1, 2]);
        assert_eq!(act_full(&d3, &[1, 2], &w(2, &[-1, 1])).unwrap(), vec![1, 2]);
        let a1 = LaverTable::new(1).unwrap().to_magma();
        assert!(act_full(&a1, &[1, 2], &w(2, &[1])).is_err());
    }

    #[test]
    fn integer_rack_window() {
        let bounded = IntegerRack { window: Some(0..=9) };
        assert_eq!(act(&bounded, &[0, 0], &[-1]), None);
        assert_eq!(act(&IntegerRack::default(), &[0, 0], &[-1]), Some(vec![0, -1]));
    }

    #[test]
    fn closure_counts() {
        let d3 = dihedral_quandle(3).unwrap();
        assert_eq!(count_closure_colourings(&d3, &w(2, &[1, 1, 1])).unwrap(), 9);
        assert_eq!(count_closure_colourings(&d3, &w(2, &[1])).unwrap(), 3);
        assert_eq!(count_closure_colourings(&d3, &w(2, &[])).unwrap(), 9);
    }

    #[test]
    fn presentations() {
        let q = fundamental_quandle(&w(2, &[1, 1, 1]));
        assert_eq!(q.to_string(), "<a, b | ((a*b)*a)*(a*b) = a, (a*b)*a = b>");
        assert_eq!(fundamental_quandle(&w(2, &[1])).to_string(), "<a, b | a*b = a, a = b>");
        let g = wirtinger_group(&w(2, &[1, 1, 1]));
        assert_eq!(render_free_word(&g.relators[1]), "abaBAB");
        assert_eq!(wirtinger_group(&w(2, &[1])).relators[1], vec![1, -2]);
        assert!(wirtinger_group(&w(3, &[])).relators.iter().all(|r| r.is_empty()));
    }

    #[test]
    fn fraction_colourings() {
        let x = w(3, &[1, 2, -1]);
        let f = laver_fraction_colouring(2, &x, &[1, 1, 1], FractionMode::Fraction).unwrap();
        assert_eq!(f, (vec![1, 2, 1], vec![2, 2, 1]));
        let d = laver_fraction_colouring(2, &x, &[1, 1, 1], FractionMode::Delta).unwrap();
        assert_eq!(d, (vec![4, 2, 1], vec![1, 1, 4]));
    }
}
