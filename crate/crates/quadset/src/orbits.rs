//! Orbits of words under the maps `r^{i,i+1}` acting on `X^m`.
//!
//! Words of length `m` are encoded as base-`n` integers, most significant
//! letter first, so numeric order on indices is lexicographic order on words.
//! Orbit closure is breadth-first search seeded in index order; each seed is
//! therefore the lexicographically smallest word of its orbit.

use crate::qset::QuadraticSet;
use thiserror::Error;

/// Default cap on `n^m`, the number of words held in memory at once.
pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("state space of size {states} exceeds the budget of {budget}")]
    BudgetExceeded { states: usize, budget: usize },
}

/// Partition of `X^m` into orbits under all `r^{i,i+1}`.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    pub m: usize,
    pub n: usize,
    /// Orbit id of each word index; ids are assigned in discovery order of
    /// the minimal representative.
    pub class_of: Vec<u32>,
    /// Lexicographically smallest word (as an index) of each orbit.
    pub reps: Vec<usize>,
    pub lengths: Vec<usize>,
    pub fixed_count: usize,
    /// Number of orbits with at least two elements (`q` at degree 2).
    pub nontrivial_count: usize,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of_word(&self, word: &[usize]) -> u32 {
        self.class_of[encode(self.n, word)]
    }

    pub fn rep_word(&self, class: u32) -> Vec<usize> {
        decode(self.n, self.m, self.reps[class as usize])
    }

    /// Words of one orbit in increasing lexicographic order.
    pub fn orbit_words(&self, class: u32) -> Vec<Vec<usize>> {
        (0..self.class_of.len())
            .filter(|&i| self.class_of[i] == class)
            .map(|i| decode(self.n, self.m, i))
            .collect()
    }
}

pub fn encode(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &l| acc * n + l)
}

pub fn decode(n: usize, m: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// Orbit partition of `X^m` under the whole tower of maps `r^{i,i+1}`,
/// `1 <= i <= m-1`. Since each generator has finite order, closing under the
/// forward maps alone yields the full group orbits.
pub fn dm_orbits_budgeted(
    qs: &QuadraticSet,
    m: usize,
    budget: usize,
) -> Result<OrbitPartition, OrbitError> {
    let n = qs.n();
    let states = n
        .checked_pow(m as u32)
        .ok_or(OrbitError::BudgetExceeded {
            states: usize::MAX,
            budget,
        })?;
    if states > budget {
        return Err(OrbitError::BudgetExceeded { states, budget });
    }

    // pow[i] = n^(m-1-i) is the weight of letter position i; position m-2 is
    // the most significant letter of the adjacent pair at (i, i+1).
    let mut pow = vec![1usize; m.max(1)];
    for i in (0..m.saturating_sub(1)).rev() {
        pow[i] = pow[i + 1] * n;
    }

    let mut class_of = vec![u32::MAX; states];
    let mut reps = Vec::new();
    let mut lengths = Vec::new();
    let mut stack = Vec::new();
    for seed in 0..states {
        if class_of[seed] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(seed);
        class_of[seed] = id;
        stack.push(seed);
        let mut size = 0usize;
        while let Some(w) = stack.pop() {
            size += 1;
            for i in 0..m.saturating_sub(1) {
                let hi = pow[i];
                let lo = pow[i + 1];
                let x = w / hi % n;
                let y = w / lo % n;
                let (u, v) = qs.r(x, y);
                let delta = (u as i64 - x as i64) * hi as i64 + (v as i64 - y as i64) * lo as i64;
                let w2 = (w as i64 + delta) as usize;
                if class_of[w2] == u32::MAX {
                    class_of[w2] = id;
                    stack.push(w2);
                }
            }
        }
        lengths.push(size);
    }

    let fixed_count = lengths.iter().filter(|&&l| l == 1).count();
    let nontrivial_count = lengths.len() - fixed_count;
    Ok(OrbitPartition {
        m,
        n,
        class_of,
        reps,
        lengths,
        fixed_count,
        nontrivial_count,
    })
}

pub fn dm_orbits(qs: &QuadraticSet, m: usize) -> Result<OrbitPartition, OrbitError> {
    dm_orbits_budgeted(qs, m, DEFAULT_ORBIT_BUDGET)
}

/// The degree-2 partition: orbits of `X^2` under iteration of `r`.
pub fn r_orbits(qs: &QuadraticSet) -> OrbitPartition {
    dm_orbits(qs, 2).expect("n^2 always fits the default budget")
}

/// `[dim A_0, .., dim A_M]`, each entry the orbit count at that degree.
pub fn graded_dims(qs: &QuadraticSet, max_degree: usize) -> Result<Vec<usize>, OrbitError> {
    graded_dims_budgeted(qs, max_degree, DEFAULT_ORBIT_BUDGET)
}

pub fn graded_dims_budgeted(
    qs: &QuadraticSet,
    max_degree: usize,
    budget: usize,
) -> Result<Vec<usize>, OrbitError> {
    let mut dims = vec![1];
    if max_degree >= 1 {
        dims.push(qs.n());
    }
    for m in 2..=max_degree {
        dims.push(dm_orbits_budgeted(qs, m, budget)?.orbit_count());
    }
    Ok(dims)
}

/// Classification of one `X^3` orbit by how it meets the near-diagonal words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum X3OrbitType {
    /// Meets the diagonal `{xxx}`.
    Diagonal,
    /// Meets a word with a repeated adjacent letter, but not the diagonal.
    TypeII,
    /// Avoids every word of shape `xxy` or `xyy`.
    SquareFree,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct X3TypeStats {
    pub count: usize,
    pub min_len: usize,
    pub max_len: usize,
}

impl X3TypeStats {
    fn add(&mut self, len: usize) {
        if self.count == 0 {
            self.min_len = len;
            self.max_len = len;
        } else {
            self.min_len = self.min_len.min(len);
            self.max_len = self.max_len.max(len);
        }
        self.count += 1;
    }
}

/// Census of `X^3` orbits by type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3Census {
    pub diagonal: X3TypeStats,
    pub type_ii: X3TypeStats,
    pub square_free: X3TypeStats,
    pub types: Vec<X3OrbitType>,
}

pub fn classify_x3(qs: &QuadraticSet) -> Result<X3Census, OrbitError> {
    let part = dm_orbits(qs, 3)?;
    let n = qs.n();
    let mut meets_diag = vec![false; part.orbit_count()];
    let mut meets_edge = vec![false; part.orbit_count()];
    for (idx, &class) in part.class_of.iter().enumerate() {
        let w = decode(n, 3, idx);
        if w[0] == w[1] && w[1] == w[2] {
            meets_diag[class as usize] = true;
        } else if w[0] == w[1] || w[1] == w[2] {
            meets_edge[class as usize] = true;
        }
    }
    let mut census = X3Census {
        diagonal: X3TypeStats::default(),
        type_ii: X3TypeStats::default(),
        square_free: X3TypeStats::default(),
        types: Vec::with_capacity(part.orbit_count()),
    };
    for c in 0..part.orbit_count() {
        let len = part.lengths[c];
        let ty = if meets_diag[c] {
            X3OrbitType::Diagonal
        } else if meets_edge[c] {
            X3OrbitType::TypeII
        } else {
            X3OrbitType::SquareFree
        };
        match ty {
            X3OrbitType::Diagonal => census.diagonal.add(len),
            X3OrbitType::TypeII => census.type_ii.add(len),
            X3OrbitType::SquareFree => census.square_free.add(len),
        }
        census.types.push(ty);
    }
    Ok(census)
}

/// Closed-form iterate of the dihedral map over `Z/pZ`:
/// the k-th power of `(x,y) -> (2x-y, x)` sends `(x,y)` to
/// `((k+1)x - ky, kx - (k-1)y)`.
pub fn dihedral_orbit_closed_form(p: usize, x: usize, y: usize, k: usize) -> (usize, usize) {
    let p = p as i64;
    let (x, y, k) = (x as i64, y as i64, k as i64);
    let a = ((k + 1) * x - k * y).rem_euclid(p);
    let b = (k * x - (k - 1) * y).rem_euclid(p);
    (a as usize, b as usize)
}
