//! Finite quadratic sets: a set `X = {0, .., n-1}` together with a bijection
//! `r` of `X x X`, written `r(x,y) = (x |> y, x <| y)` in action form.
//!
//! The pair table is the single source of truth; left/right action tables are
//! derived at construction time and cached on the value.

use crate::perm::{lcm, Permutation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QsetError {
    #[error("pair table has {got} entries, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("label {label} out of range 0..{n}")]
    BadLabel { label: usize, n: usize },
    #[error("pair table is not a bijection: image ({x},{y}) repeated")]
    NotBijective { x: usize, y: usize },
}

/// Left/right action tables of a quadratic set, plus the nondegeneracy flag
/// and, when defined, the lcm `p` of the orders of all actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTables {
    /// `left[x][y]` is the first component of `r(x,y)`.
    pub left: Vec<Vec<usize>>,
    /// `right[y][x]` is the second component of `r(x,y)`.
    pub right: Vec<Vec<usize>>,
    pub nondegenerate: bool,
    /// lcm of the orders of all left and right actions; `None` when degenerate.
    pub p: Option<u64>,
}

impl ActionTables {
    pub fn left_perm(&self, x: usize) -> Permutation {
        Permutation::from_images(self.left[x].clone()).expect("nondegenerate row")
    }

    pub fn right_perm(&self, y: usize) -> Permutation {
        Permutation::from_images(self.right[y].clone()).expect("nondegenerate column")
    }
}

/// A finite quadratic set `(X, r)` with `X = {0, .., n-1}`.
///
/// `rmap[x*n + y]` holds the image pair `r(x,y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSet {
    n: usize,
    rmap: Vec<(usize, usize)>,
}

impl QuadraticSet {
    pub fn from_table(n: usize, rmap: Vec<(usize, usize)>) -> Result<Self, QsetError> {
        if n == 0 || rmap.len() != n * n {
            return Err(QsetError::WrongLength {
                got: rmap.len(),
                expected: n * n,
            });
        }
        let mut seen = vec![false; n * n];
        for &(u, v) in &rmap {
            if u >= n {
                return Err(QsetError::BadLabel { label: u, n });
            }
            if v >= n {
                return Err(QsetError::BadLabel { label: v, n });
            }
            let code = u * n + v;
            if seen[code] {
                return Err(QsetError::NotBijective { x: u, y: v });
            }
            seen[code] = true;
        }
        Ok(QuadraticSet { n, rmap })
    }

    /// Builds from a closure giving `r(x,y)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self, QsetError> {
        let mut rmap = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                rmap.push(f(x, y));
            }
        }
        Self::from_table(n, rmap)
    }

    /// The trivial (flip) solution `r(x,y) = (y,x)`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x)).expect("flip is bijective")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        self.rmap[x * self.n + y]
    }

    pub fn rmap(&self) -> &[(usize, usize)] {
        &self.rmap
    }

    /// Inverse of `r` as a pair table.
    pub fn r_inverse_table(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut inv = vec![(0, 0); n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.r(x, y);
                inv[u * n + v] = (x, y);
            }
        }
        inv
    }

    /// Relabels the set along `phi`: the result is `(phi x phi) o r o (phi^-1 x phi^-1)`.
    pub fn relabel(&self, phi: &Permutation) -> QuadraticSet {
        assert_eq!(phi.size(), self.n);
        let inv = phi.inverse();
        QuadraticSet::from_fn(self.n, |x, y| {
            let (u, v) = self.r(inv.apply(x), inv.apply(y));
            (phi.apply(u), phi.apply(v))
        })
        .expect("relabeling preserves bijectivity")
    }

    pub fn actions(&self) -> ActionTables {
        let n = self.n;
        let mut left = vec![vec![0usize; n]; n];
        let mut right = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.r(x, y);
                left[x][y] = u;
                right[y][x] = v;
            }
        }
        let row_ok = |row: &Vec<usize>| {
            let mut seen = vec![false; n];
            row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        };
        let nondegenerate = left.iter().all(row_ok) && right.iter().all(row_ok);
        let p = nondegenerate.then(|| {
            let mut p = 1u64;
            for row in left.iter().chain(right.iter()) {
                let perm = Permutation::from_images(row.clone()).unwrap();
                p = lcm(p, perm.order());
            }
            p
        });
        ActionTables {
            left,
            right,
            nondegenerate,
            p,
        }
    }

    /// Exact set of `r`-fixed pairs.
    pub fn fixed_points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.r(x, y) == (x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Multiplicative order of `r` as a permutation of `X x X`.
    pub fn order_of_r(&self) -> u64 {
        let n = self.n;
        let mut seen = vec![false; n * n];
        let mut ord = 1u64;
        for start in 0..n * n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            loop {
                seen[cur] = true;
                len += 1;
                let (u, v) = self.rmap[cur];
                cur = u * n + v;
                if cur == start {
                    break;
                }
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.n;
        (0..n * n).all(|c| {
            let (u, v) = self.rmap[c];
            self.r(u, v) == (c / n, c % n)
        })
    }

    pub fn is_square_free(&self) -> bool {
        (0..self.n).all(|x| self.r(x, x) == (x, x))
    }
}

/// Named tuple witnessing the failure of a pointwise condition.
pub type Witness = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    /// Lexicographically first failing tuple, when the flag fails.
    pub witness: Option<Witness>,
}

impl Flag {
    fn ok() -> Self {
        Flag {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: Witness) -> Self {
        Flag {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// All pointwise property flags of a quadratic set, each with the first
/// failing tuple as a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub nondegenerate: Flag,
    pub involutive: Flag,
    pub square_free: Flag,
    /// Witness is `[x, y, u, v]` where some iterate of `r` maps `(x,y)` to
    /// `(u,v)` sharing exactly one coordinate.
    pub two_cancellative: Flag,
    pub l1: Flag,
    pub r1: Flag,
    pub lr3: Flag,
    pub braided: Flag,
    pub cl1: Flag,
    pub cr1: Flag,
    pub cl2: Flag,
    pub cr2: Flag,
    pub lri: Flag,
    pub sd: Flag,
    pub quantum_binomial: Flag,
}

impl PropertyReport {
    /// The four cyclic conditions together.
    pub fn cyclic(&self) -> bool {
        self.cl1.holds && self.cr1.holds && self.cl2.holds && self.cr2.holds
    }
}

/// Evaluates every flag by exhaustive check over the relevant tuples.
pub fn check_conditions(qs: &QuadraticSet) -> PropertyReport {
    let n = qs.n();
    let t = qs.actions();
    let left = &t.left;
    let right = &t.right;

    let nondegenerate = if t.nondegenerate {
        Flag::ok()
    } else {
        // first row or column that repeats a value
        let mut w = None;
        'scan: for x in 0..n {
            let mut seen = vec![usize::MAX; n];
            for (y, &v) in left[x].iter().enumerate() {
                if seen[v] != usize::MAX {
                    w = Some(vec![x, seen[v], y]);
                    break 'scan;
                }
                seen[v] = y;
            }
            let mut seen = vec![usize::MAX; n];
            for (y, &v) in right[x].iter().enumerate() {
                if seen[v] != usize::MAX {
                    w = Some(vec![seen[v], y, x]);
                    break 'scan;
                }
                seen[v] = y;
            }
        }
        Flag::fail(w.unwrap_or_default())
    };

    let involutive = first_pair_failure(n, |x, y| {
        let (u, v) = qs.r(x, y);
        qs.r(u, v) == (x, y)
    });
    let square_free = first_pair_failure(n, |x, y| x != y || qs.r(x, x) == (x, x));
    let two_cancellative = two_cancellative_flag(qs);

    let l1 = first_triple_failure(n, |x, y, z| {
        left[x][left[y][z]] == left[left[x][y]][left[right[y][x]][z]]
    });
    let r1 = first_triple_failure(n, |x, y, z| {
        right[z][right[y][x]] == right[right[z][y]][right[left[y][z]][x]]
    });
    let lr3 = first_triple_failure(n, |x, y, z| {
        right[left[right[y][x]][z]][left[x][y]] == left[right[left[y][z]][x]][right[z][y]]
    });
    let braided = combine3(&l1, &r1, &lr3);

    let cl1 = first_pair_failure(n, |x, y| left[right[x][y]][x] == left[y][x]);
    let cr1 = first_pair_failure(n, |x, y| right[left[x][y]][x] == right[y][x]);
    let cl2 = first_pair_failure(n, |x, y| left[left[x][y]][x] == left[y][x]);
    let cr2 = first_pair_failure(n, |x, y| right[right[x][y]][x] == right[y][x]);

    let lri = if !t.nondegenerate {
        Flag::fail(nondegenerate.witness.clone().unwrap_or_default())
    } else {
        first_pair_failure(n, |x, y| {
            right[x][left[x][y]] == y && left[x][right[x][y]] == y
        })
    };

    let sd = first_pair_failure(n, |x, y| right[y][x] == x);

    let quantum_binomial = if nondegenerate.holds && square_free.holds && involutive.holds {
        Flag::ok()
    } else {
        let w = [&nondegenerate, &square_free, &involutive]
            .iter()
            .find(|f| !f.holds)
            .and_then(|f| f.witness.clone());
        Flag {
            holds: false,
            witness: w,
        }
    };

    PropertyReport {
        nondegenerate,
        involutive,
        square_free,
        two_cancellative,
        l1,
        r1,
        lr3,
        braided,
        cl1,
        cr1,
        cl2,
        cr2,
        lri,
        sd,
        quantum_binomial,
    }
}

fn first_pair_failure(n: usize, ok: impl Fn(usize, usize) -> bool) -> Flag {
    for x in 0..n {
        for y in 0..n {
            if !ok(x, y) {
                return Flag::fail(vec![x, y]);
            }
        }
    }
    Flag::ok()
}

fn first_triple_failure(n: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Flag {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !ok(x, y, z) {
                    return Flag::fail(vec![x, y, z]);
                }
            }
        }
    }
    Flag::ok()
}

fn combine3(a: &Flag, b: &Flag, c: &Flag) -> Flag {
    if a.holds && b.holds && c.holds {
        Flag::ok()
    } else {
        let w = [a, b, c].iter().find(|f| !f.holds).and_then(|f| f.witness.clone());
        Flag {
            holds: false,
            witness: w,
        }
    }
}

/// Tests `r^k(x,y) = (x,z) => z=y` and `r^k(x,y) = (t,y) => t=x` for all
/// `1 <= k < |r|`. Walking each pair once around its `r`-orbit covers every
/// iterate, since `r^k(x,y)` repeats with the orbit period.
fn two_cancellative_flag(qs: &QuadraticSet) -> Flag {
    let n = qs.n();
    for x in 0..n {
        for y in 0..n {
            let (mut u, mut v) = qs.r(x, y);
            while (u, v) != (x, y) {
                if (u == x) != (v == y) {
                    return Flag::fail(vec![x, y, u, v]);
                }
                let next = qs.r(u, v);
                u = next.0;
                v = next.1;
            }
        }
    }
    Flag::ok()
}

/// Serializable machine record of a property report (0-based witnesses).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub base: usize,
    pub flags: Vec<(String, bool, Option<Witness>)>,
}

impl PropertyReport {
    pub fn named_flags(&self) -> Vec<(&'static str, &Flag)> {
        vec![
            ("nondegenerate", &self.nondegenerate),
            ("involutive", &self.involutive),
            ("square_free", &self.square_free),
            ("two_cancellative", &self.two_cancellative),
            ("l1", &self.l1),
            ("r1", &self.r1),
            ("lr3", &self.lr3),
            ("braided", &self.braided),
            ("cl1", &self.cl1),
            ("cr1", &self.cr1),
            ("cl2", &self.cl2),
            ("cr2", &self.cr2),
            ("lri", &self.lri),
            ("sd", &self.sd),
            ("quantum_binomial", &self.quantum_binomial),
        ]
    }

    pub fn to_record(&self) -> PropertyRecord {
        PropertyRecord {
            base: 0,
            flags: self
                .named_flags()
                .into_iter()
                .map(|(name, f)| (name.to_string(), f.holds, f.witness.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_bad_tables() {
        let dup = vec![(0, 0), (0, 0), (1, 0), (1, 1)];
        assert!(matches!(
            QuadraticSet::from_table(2, dup),
            Err(QsetError::NotBijective { .. })
        ));
        let oob = vec![(0, 0), (0, 2), (1, 0), (1, 1)];
        assert!(matches!(
            QuadraticSet::from_table(2, oob),
            Err(QsetError::BadLabel { label: 2, .. })
        ));
    }

    #[test]
    fn trivial_solution_basics() {
        let qs = QuadraticSet::trivial(3);
        let rep = check_conditions(&qs);
        assert!(rep.involutive.holds && rep.nondegenerate.holds && rep.square_free.holds);
        assert!(rep.quantum_binomial.holds && rep.braided.holds);
        assert_eq!(qs.order_of_r(), 2);
        let t = qs.actions();
        assert_eq!(t.p, Some(1));
        assert!(t.left.iter().all(|row| row == &vec![0, 1, 2]));
    }

    #[test]
    fn permutation_solution_of_order_three() {
        let qs = fixtures::perm3();
        let t = qs.actions();
        assert!(t.nondegenerate);
        // every left action is the 3-cycle, every right action the identity
        for x in 0..3 {
            assert_eq!(t.left[x], vec![1, 2, 0]);
            assert_eq!(t.right[x], vec![0, 1, 2]);
        }
        assert_eq!(qs.order_of_r(), 6);
        assert!(qs.fixed_points().is_empty());
        let rep = check_conditions(&qs);
        assert!(rep.braided.holds);
        assert!(!rep.two_cancellative.holds);
        assert_eq!(rep.two_cancellative.witness, Some(vec![0, 0, 1, 0]));
    }

    #[test]
    fn three_element_non_braided_example() {
        let qs = fixtures::nonbraided3();
        let rep = check_conditions(&qs);
        assert!(rep.nondegenerate.holds);
        assert!(rep.l1.holds && rep.r1.holds);
        assert!(!rep.lr3.holds && !rep.braided.holds);
        assert!(!rep.two_cancellative.holds);
        assert_eq!(qs.fixed_points(), vec![(2, 0)]);
    }

    #[test]
    fn dihedral_five_flags() {
        let qs = fixtures::dihedral(5);
        let rep = check_conditions(&qs);
        assert!(rep.braided.holds && rep.square_free.holds && rep.sd.holds);
        assert!(rep.nondegenerate.holds && rep.two_cancellative.holds);
        assert!(!rep.involutive.holds);
        let t = qs.actions();
        assert_eq!(t.p, Some(2));
        for y in 0..5 {
            assert_eq!(t.right[y], (0..5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn square_free_fixed_points_are_diagonal() {
        for qs in [fixtures::dihedral(5), QuadraticSet::trivial(4)] {
            let f = qs.fixed_points();
            let n = qs.n();
            assert_eq!(f, (0..n).map(|x| (x, x)).collect::<Vec<_>>());
        }
    }
}
