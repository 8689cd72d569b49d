#![allow(dead_code)]

use ldlab::braid::BraidWord;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn random_word(r: &mut impl Rng, n: usize, max_len: usize, positive: bool) -> BraidWord {
    let len = r.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = r.gen_range(1..n as i32);
            if positive || r.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Applies `moves` random braid relations; only positive relations when `positive`.
pub fn equivalent_word(r: &mut impl Rng, w: &BraidWord, moves: usize, positive: bool) -> BraidWord {
    let n = w.strands() as i32;
    let mut l = w.letters().to_vec();
    for _ in 0..moves {
        let kind = r.gen_range(0..if positive { 2 } else { 4 });
        match kind {
            // σi σj = σj σi for |i - j| >= 2
            0 => {
                let cands: Vec<usize> =
                    (0..l.len().saturating_sub(1)).filter(|&k| (l[k].abs() - l[k + 1].abs()).abs() >= 2).collect();
                if let Some(&k) = pick(r, &cands) {
                    l.swap(k, k + 1);
                }
            }
            // σi σj σi = σj σi σj, same sign throughout
            1 => {
                let cands: Vec<usize> = (0..l.len().saturating_sub(2))
                    .filter(|&k| {
                        l[k] == l[k + 2] && (l[k].abs() - l[k + 1].abs()).abs() == 1 && l[k].signum() == l[k + 1].signum()
                    })
                    .collect();
                if let Some(&k) = pick(r, &cands) {
                    let (a, b) = (l[k], l[k + 1]);
                    l[k] = b;
                    l[k + 1] = a;
                    l[k + 2] = b;
                } else if n >= 3 {
                    // Create an opportunity instead: insert σi σj σi σj⁻¹ σi⁻¹ σj⁻¹.
                    let i = r.gen_range(1..n - 1);
                    let (a, b) = if r.gen_bool(0.5) { (i, i + 1) } else { (i + 1, i) };
                    let at = r.gen_range(0..=l.len());
                    if !positive {
                        l.splice(at..at, [a, b, a, -b, -a, -b]);
                    }
                }
            }
            // insert σi^{±1} σi^{∓1}
            2 => {
                let g = r.gen_range(1..n);
                let s = if r.gen_bool(0.5) { 1 } else { -1 };
                let at = r.gen_range(0..=l.len());
                l.splice(at..at, [s * g, -s * g]);
            }
            // delete a cancelling pair
            _ => {
                let cands: Vec<usize> = (0..l.len().saturating_sub(1)).filter(|&k| l[k] == -l[k + 1]).collect();
                if let Some(&k) = pick(r, &cands) {
                    l.drain(k..k + 2);
                }
            }
        }
    }
    BraidWord::new(w.strands(), l).unwrap()
}

fn pick<'a, T>(r: &mut impl Rng, v: &'a [T]) -> Option<&'a T> {
    if v.is_empty() {
        None
    } else {
        Some(&v[r.gen_range(0..v.len())])
    }
}

/// Sections of the data files: a header line followed by comma-free or
/// comma-separated digit rows.
pub fn sections(text: &str) -> Vec<(String, Vec<String>)> {
    let mut out: Vec<(String, Vec<String>)> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
            out.push((line.to_string(), Vec::new()));
        } else {
            out.last_mut().expect("data before header").1.push(line.to_string());
        }
    }
    out
}
