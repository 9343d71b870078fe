//! Permutations of `{0, .., n-1}` in image-table form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image table of length {len} is not a bijection on 0..{len}")]
    NotBijective { len: usize },
    #[error("label {label} out of range 0..{n}")]
    BadLabel { label: usize, n: usize },
    #[error("malformed cycle notation: {0}")]
    BadCycles(String),
}

/// A permutation of `{0, .., size-1}`, stored by its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(PermError::BadLabel { label: i, n });
            }
            if seen[i] {
                return Err(PermError::NotBijective { len: n });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses parenthesized 0-based cycles, e.g. `"(0 1 2)(3 4)"`.
    /// Elements not mentioned are fixed.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let body = text.trim();
        if !body.is_empty() {
            if !body.starts_with('(') || !body.ends_with(')') {
                return Err(PermError::BadCycles(text.into()));
            }
            for cycle in body[1..body.len() - 1].split(")(") {
                let elems: Vec<usize> = cycle
                    .split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| PermError::BadCycles(text.into())))
                    .collect::<Result<_, _>>()?;
                for &e in &elems {
                    if e >= n {
                        return Err(PermError::BadLabel { label: e, n });
                    }
                }
                for w in elems.windows(2) {
                    if images[w[0]] != w[0] {
                        return Err(PermError::BadCycles(text.into()));
                    }
                    images[w[0]] = w[1];
                }
                if elems.len() > 1 {
                    let last = *elems.last().unwrap();
                    if images[last] != last {
                        return Err(PermError::BadCycles(text.into()));
                    }
                    images[last] = elems[0];
                }
            }
        }
        Self::from_images(images)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// `self.compose(&g)` applies `g` first, then `self`.
    pub fn compose(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.size(), g.size());
        Permutation {
            images: g.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted ascending, fixed points included as 1s.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// True when every cycle (fixed points included) has the same length.
    pub fn uniform_cycle_length(&self) -> Option<usize> {
        let t = self.cycle_type();
        let q = *t.first()?;
        t.iter().all(|&l| l == q).then_some(q)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nontrivial: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// All permutations of `{0, .., n-1}` in lexicographic order of image tables.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parse_roundtrip() {
        let p = Permutation::from_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.order(), 6);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
    }

    #[test]
    fn rejects_repeated_cycle_entry() {
        assert!(Permutation::from_cycles(3, "(0 1 0)").is_err());
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::from_cycles(4, "(0 1 2 3)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).cycle_type(), vec![2, 2]);
        assert_eq!(p.uniform_cycle_length(), Some(4));
        assert_eq!(p.compose(&p).uniform_cycle_length(), Some(2));
        assert_eq!(Permutation::identity(4).uniform_cycle_length(), Some(1));
    }

    #[test]
    fn enumerates_all_permutations() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }
}
