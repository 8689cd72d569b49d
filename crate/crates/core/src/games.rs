//! The G3 braid game and the Ackermann hierarchy.

use std::path::Path;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::braid::GarsideNF;
use crate::error::{domain, Error, Result};
use crate::order::{bp3_normal_exponents, epsilon, Bp3NormalForm};

pub const DEFAULT_STEP_CAP: u128 = 1_000_000_000;

/// A position in the game: block exponents `(e_p, …, e_1)`, the index `t`
/// of the next step, and the number of steps played.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G3State {
    pub exponents: Vec<u128>,
    pub t: u128,
    pub steps: u128,
}

impl G3State {
    pub fn start(beta: &GarsideNF) -> Result<Self> {
        let nf = bp3_normal_exponents(beta)?;
        Ok(G3State { exponents: nf.exponents, t: 1, steps: 0 })
    }

    pub fn from_normal_form(nf: &Bp3NormalForm) -> Self {
        G3State { exponents: nf.exponents.clone(), t: 1, steps: 0 }
    }

    pub fn is_over(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn normal_form(&self) -> Bp3NormalForm {
        Bp3NormalForm { exponents: self.exponents.clone() }
    }

    /// Removes a crossing from the rightmost block above its minimal size and
    /// adds `t` crossings to the block after it.
    pub fn step(&mut self) -> Result<()> {
        let p = self.exponents.len();
        if p == 0 {
            return domain("the game is over");
        }
        let idx = |r: usize| p - r;
        let r = (1..=p)
            .find(|&r| {
                let min = if r == p { 0 } else { epsilon(r) };
                self.exponents[idx(r)] > min
            })
            .expect("a nontrivial normal form has a critical block");
        self.exponents[idx(r)] -= 1;
        if r > 1 {
            let e = &mut self.exponents[idx(r - 1)];
            *e = e.checked_add(self.t).ok_or_else(|| Error::Resource("block exponent overflow".into()))?;
        }
        while self.exponents.first() == Some(&0) {
            self.exponents.remove(0);
        }
        self.t += 1;
        self.steps += 1;
        Ok(())
    }

    /// Plays up to `max_steps` steps; returns whether the game ended.
    pub fn run(&mut self, max_steps: u128) -> Result<bool> {
        let mut done = 0;
        while !self.is_over() && done < max_steps {
            self.step()?;
            done += 1;
        }
        Ok(self.is_over())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string(self).map_err(|e| Error::Resource(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| Error::Resource(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Resource(format!("{}: {e}", path.display())))?;
        let s: G3State = serde_json::from_str(&text).map_err(|e| Error::Domain(format!("bad checkpoint: {e}")))?;
        if !s.normal_form().is_valid() || s.t != s.steps + 1 {
            return domain("checkpoint state is inconsistent");
        }
        Ok(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G3Length {
    Finished(u128),
    /// The cap was reached after this many steps.
    Aborted(u128),
}

pub fn g3_length(beta: &GarsideNF, cap: u128) -> Result<G3Length> {
    let mut s = G3State::start(beta)?;
    Ok(if s.run(cap)? { G3Length::Finished(s.steps) } else { G3Length::Aborted(s.steps) })
}

/// The first `limit` states, starting with `β` itself; empty for `β = 1`.
pub fn g3_trace(beta: &GarsideNF, limit: usize) -> Result<Vec<Bp3NormalForm>> {
    let mut s = G3State::start(beta)?;
    let mut out = Vec::new();
    if s.is_over() {
        return Ok(out);
    }
    while out.len() < limit {
        out.push(s.normal_form());
        if s.is_over() {
            break;
        }
        s.step()?;
    }
    Ok(out)
}

pub fn g3_is_descending(trace: &[Bp3NormalForm]) -> bool {
    trace.windows(2).all(|w| w[1].rank() < w[0].rank())
}

/// Bit length beyond which Ackermann values are refused.
pub const ACK_MAX_BITS: u64 = 1 << 20;

fn too_big() -> Error {
    Error::Resource(format!("Ackermann value exceeds {ACK_MAX_BITS} bits"))
}

/// `Ack_0(x) = x+1`, `Ack_r(0) = Ack_{r-1}(1)`, `Ack_r(x+1) = Ack_{r-1}(Ack_r(x))`.
pub fn ackermann(r: u32, x: &BigUint) -> Result<BigUint> {
    match r {
        0 => Ok(x + 1u32),
        1 => Ok(x + 2u32),
        2 => Ok(x * 2u32 + 3u32),
        3 => {
            let e = x.to_u64().filter(|&e| e + 3 <= ACK_MAX_BITS).ok_or_else(too_big)?;
            Ok((BigUint::one() << (e + 3)) - 3u32)
        }
        _ => {
            // Ack_r(x) is Ack_{r-1} iterated x+1 times on 1.
            let count = x.to_u64().ok_or_else(too_big)?;
            let mut v = BigUint::one();
            for _ in 0..=count {
                v = ackermann(r - 1, &v)?;
            }
            Ok(v)
        }
    }
}

pub fn ackermann_diag(x: u32) -> Result<BigUint> {
    ackermann(x, &BigUint::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(l: &[i32]) -> GarsideNF {
        GarsideNF::from_letters(3, l).unwrap()
    }

    #[test]
    fn single_steps() {
        let mut s = G3State { exponents: vec![2, 0], t: 3, steps: 2 };
        s.step().unwrap();
        assert_eq!(s.exponents, vec![1, 3]);
        let mut s = G3State { exponents: vec![1, 0], t: 7, steps: 6 };
        s.step().unwrap();
        assert_eq!(s.exponents, vec![7]);
        let mut s = G3State { exponents: vec![1], t: 9, steps: 8 };
        s.step().unwrap();
        assert!(s.is_over());
        assert!(s.step().is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(g3_length(&nf(&[2, 2, 1, 1]), 100).unwrap(), G3Length::Finished(14));
        assert_eq!(g3_length(&nf(&[1, 2, 1]), 100).unwrap(), G3Length::Finished(30));
        assert_eq!(g3_length(&nf(&[1; 5]), 100).unwrap(), G3Length::Finished(5));
        assert_eq!(g3_length(&nf(&[1, 2, 2, 1, 1]), 3).unwrap(), G3Length::Aborted(3));
    }

    #[test]
    fn traces() {
        assert!(g3_trace(&nf(&[]), 5).unwrap().is_empty());
        let t: Vec<String> = g3_trace(&nf(&[2, 1]), 10).unwrap().iter().map(|s| s.render()).collect();
        assert_eq!(t, ["s2 s1", "s2", "s1^2", "s1", "1"]);
        assert!(g3_is_descending(&g3_trace(&nf(&[1, 2, 1]), 100).unwrap()));
    }

    fn ack_naive(r: u32, x: u64) -> u64 {
        match (r, x) {
            (0, x) => x + 1,
            (r, 0) => ack_naive(r - 1, 1),
            (r, x) => ack_naive(r - 1, ack_naive(r, x - 1)),
        }
    }

    #[test]
    fn ackermann_matches_recursion() {
        for r in 0..=3 {
            for x in 0..6 {
                assert_eq!(ackermann(r, &BigUint::from(x)).unwrap(), BigUint::from(ack_naive(r, x)));
            }
        }
        assert_eq!(ackermann(4, &BigUint::from(0u32)).unwrap(), BigUint::from(13u32));
        assert_eq!(ackermann_diag(2).unwrap(), BigUint::from(7u32));
        assert!(ackermann_diag(4).is_err());
    }
}
