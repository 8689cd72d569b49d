//! Positive conjugacy classes and their minimal representatives.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use crate::braid::{GarsideNF, Perm};
use crate::error::{domain, Error, Result};
use crate::order::compare_flipped;

pub const DEFAULT_CLASS_BOUND: usize = 1_000_000;

/// Positive braids conjugate to a given one, each stored with a conjugator
/// `c` such that `member = c⁻¹ · start · c`.
#[derive(Clone, Debug)]
pub struct ConjClass {
    n: usize,
    members: BTreeMap<GarsideNF, GarsideNF>,
}

impl ConjClass {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &GarsideNF> {
        self.members.keys()
    }

    pub fn contains(&self, b: &GarsideNF) -> bool {
        self.members.contains_key(b)
    }

    pub fn conjugator(&self, b: &GarsideNF) -> Option<&GarsideNF> {
        self.members.get(b)
    }
}

pub fn positive_conjugates(beta: &GarsideNF) -> Result<ConjClass> {
    positive_conjugates_bounded(beta, DEFAULT_CLASS_BOUND)
}

/// Closure of `{β}` under conjugation by simple braids, keeping positive results.
pub fn positive_conjugates_bounded(beta: &GarsideNF, bound: usize) -> Result<ConjClass> {
    if !beta.is_positive() {
        return Err(Error::NotPositive);
    }
    let n = beta.strands();
    let simples: Vec<Perm> = Perm::all(n).into_iter().filter(|s| !s.is_identity()).collect();
    let mut members = BTreeMap::new();
    members.insert(beta.clone(), GarsideNF::identity(n));
    let mut queue = VecDeque::from([beta.clone()]);
    while let Some(b) = queue.pop_front() {
        let c = members[&b].clone();
        for s in &simples {
            let sg = GarsideNF::from_simple(*s);
            let si = sg.inverse();
            for (l, r) in [(&si, &sg), (&sg, &si)] {
                let next = l.mul(&b).mul(r);
                if next.inf() < 0 || members.contains_key(&next) {
                    continue;
                }
                if members.len() >= bound {
                    return Err(Error::Resource(format!("conjugacy class exceeds {bound} members")));
                }
                members.insert(next.clone(), c.mul(r));
                queue.push_back(next);
            }
        }
    }
    Ok(ConjClass { n, members })
}

/// Least element of a class in the flipped ordering.
pub fn class_min(class: &ConjClass) -> Result<GarsideNF> {
    let mut best: Option<&GarsideNF> = None;
    for m in class.members() {
        if best.is_none_or(|b| compare_flipped(m, b).is_ok_and(|o| o == Ordering::Less)) {
            best = Some(m);
        }
    }
    Ok(best.expect("classes are nonempty").clone())
}

pub fn mu(beta: &GarsideNF) -> Result<GarsideNF> {
    class_min(&positive_conjugates(beta)?)
}

pub fn is_conjugacy_min(beta: &GarsideNF) -> Result<bool> {
    Ok(&mu(beta)? == beta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub beta: GarsideNF,
    pub mu_beta: GarsideNF,
    /// `μ(βΔ²)`.
    pub lhs: GarsideNF,
    /// `σ1σ2²σ1 · μ(β) · σ1²`.
    pub rhs: GarsideNF,
    /// `σ2σ1²σ2 · μ(β) · σ1²`, the same formula with the prefix flipped.
    pub rhs_flipped: GarsideNF,
}

impl ConjectureCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn holds_flipped(&self) -> bool {
        self.lhs == self.rhs_flipped
    }
}

fn three_strand(beta: &GarsideNF) -> Result<()> {
    if beta.strands() != 3 {
        return domain("expected a 3-strand braid");
    }
    if !beta.is_positive() {
        return Err(Error::NotPositive);
    }
    Ok(())
}

/// Evaluates both sides of `μ(βΔ²) = σ1σ2²σ1 · μ(β) · σ1²`, and of its
/// variant with prefix `σ2σ1²σ2`.
pub fn conjecture_mu_delta(beta: &GarsideNF) -> Result<ConjectureCheck> {
    three_strand(beta)?;
    let mu_beta = mu(beta)?;
    let lhs = mu(&beta.mul(&GarsideNF::delta_power(3, 2)))?;
    let right = GarsideNF::from_letters(3, &[1, 1])?;
    let side = |prefix: &[i32]| -> Result<GarsideNF> {
        Ok(GarsideNF::from_letters(3, prefix)?.mul(&mu_beta).mul(&right))
    };
    let (rhs, rhs_flipped) = (side(&[1, 2, 2, 1])?, side(&[2, 1, 1, 2])?);
    Ok(ConjectureCheck { beta: beta.clone(), mu_beta, lhs, rhs, rhs_flipped })
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub check: ConjectureCheck,
    /// Self-consistency failures of `μ` found on this row.
    pub inconsistencies: Vec<String>,
}

/// Runs the conjecture on every positive 3-strand braid of length `≤ max_len`,
/// checking along the way that `μ` is idempotent, constant on each class
/// and preserves exponent sum.
pub fn sweep_conjecture(max_len: usize) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for len in 0..=max_len {
        for beta in crate::braid::positive_braids(3, len) {
            let check = conjecture_mu_delta(&beta)?;
            let mut bad = Vec::new();
            let class = positive_conjugates(&beta)?;
            let m = &check.mu_beta;
            if &mu(m)? != m {
                bad.push(format!("mu not idempotent at {m}"));
            }
            if m.exponent_sum() != beta.exponent_sum() {
                bad.push("exponent sum changed".to_string());
            }
            for member in class.members() {
                if &class_min(&positive_conjugates(member)?)? != m {
                    bad.push(format!("mu differs on class member {member}"));
                }
            }
            rows.push(SweepRow { check, inconsistencies: bad });
        }
    }
    Ok(rows)
}
