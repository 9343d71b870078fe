//! Self-distributive solutions and the corresponding racks and quandles.
//!
//! A quadratic set is self-distributive (SD) when `r(x,y) = (x |> y, x)`;
//! the left actions then form a rack precisely when the set is a
//! nondegenerate braided set.

use crate::perm::{gcd, Permutation};
use crate::qset::QuadraticSet;
use thiserror::Error;

pub const DEFAULT_INNER_BUDGET: usize = 1_000_000;
pub const DEFAULT_SUBSET_BUDGET: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RackError {
    #[error("quadratic set is not self-distributive: right action moves {x} under {y}")]
    NotSelfDistributive { x: usize, y: usize },
    #[error("left action of {x} is not bijective")]
    LeftNotBijective { x: usize },
    #[error("self-distributivity fails at ({x},{y},{z})")]
    NotARack { x: usize, y: usize, z: usize },
    #[error("{g} is not a unit modulo {n}")]
    NotAUnit { g: usize, n: usize },
    #[error("search space too large: {0}")]
    BudgetExceeded(String),
}

/// An SD quadratic set together with its operation table `op[x][y] = x |> y`.
#[derive(Debug, Clone)]
pub struct RackStructure {
    pub base: QuadraticSet,
    pub op: Vec<Vec<usize>>,
    pub inner_generators: Vec<Permutation>,
    pub quandle: bool,
}

impl RackStructure {
    /// Validates the SD shape and both rack axioms.
    pub fn from_qset(base: QuadraticSet) -> Result<Self, RackError> {
        let n = base.n();
        for x in 0..n {
            for y in 0..n {
                if base.r(x, y).1 != x {
                    return Err(RackError::NotSelfDistributive { x, y });
                }
            }
        }
        let op: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| base.r(x, y).0).collect())
            .collect();
        let mut inner_generators = Vec::with_capacity(n);
        for (x, row) in op.iter().enumerate() {
            inner_generators.push(
                Permutation::from_images(row.clone())
                    .map_err(|_| RackError::LeftNotBijective { x })?,
            );
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if op[x][op[y][z]] != op[op[x][y]][op[x][z]] {
                        return Err(RackError::NotARack { x, y, z });
                    }
                }
            }
        }
        let quandle = (0..n).all(|x| op[x][x] == x);
        Ok(RackStructure {
            base,
            op,
            inner_generators,
            quandle,
        })
    }

    pub fn from_op_table(op: Vec<Vec<usize>>) -> Result<Self, RackError> {
        let n = op.len();
        let base = QuadraticSet::from_fn(n, |x, y| (op[x][y], x))
            .map_err(|_| RackError::LeftNotBijective { x: 0 })?;
        Self::from_qset(base)
    }
}

/// The dihedral quandle on `Z/pZ`: `x |> y = 2x - y`.
pub fn dihedral_quandle(p: usize) -> RackStructure {
    assert!(p >= 2, "dihedral quandle needs at least two elements");
    let op: Vec<Vec<usize>> = (0..p)
        .map(|x| (0..p).map(|y| (2 * x + p - y % p) % p).collect())
        .collect();
    RackStructure::from_op_table(op).expect("dihedral operation is a quandle")
}

/// The affine (Alexander) quandle on `Z/nZ` with unit `g`:
/// `x |> y = (1-g)x + gy`.
pub fn affine_quandle(n: usize, g: usize) -> Result<RackStructure, RackError> {
    assert!(n >= 2);
    let g = g % n;
    if gcd(g as u64, n as u64) != 1 {
        return Err(RackError::NotAUnit { g, n });
    }
    let op: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| ((n + 1 - g) % n * x + g * y) % n)
                .collect()
        })
        .collect();
    RackStructure::from_op_table(op)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposability {
    Indecomposable,
    /// A proper nonempty block `Y` with `r(Y^2) = Y^2` and `r((X\Y)^2) = (X\Y)^2`;
    /// for SD sets, an orbit of the inner group instead.
    Decomposable { block: Vec<usize> },
}

/// For SD sets this is transitivity of the group generated by the left
/// actions; for general sets it searches for a two-block splitting into
/// `r`-invariant complementary subsets.
pub fn is_indecomposable(qs: &QuadraticSet) -> Result<Decomposability, RackError> {
    let n = qs.n();
    let sd = (0..n).all(|x| (0..n).all(|y| qs.r(x, y).1 == x));
    if sd {
        let t = qs.actions();
        let mut reach = vec![false; n];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(x) = stack.pop() {
            for row in &t.left {
                let y = row[x];
                if !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
        return if reach.iter().all(|&b| b) {
            Ok(Decomposability::Indecomposable)
        } else {
            Ok(Decomposability::Decomposable {
                block: (0..n).filter(|&x| reach[x]).collect(),
            })
        };
    }
    if n > DEFAULT_SUBSET_BUDGET {
        return Err(RackError::BudgetExceeded(format!(
            "subset search needs 2^{n} candidate blocks"
        )));
    }
    // fix element 0 inside the block to halve the search
    for mask in 0..(1u32 << (n - 1)) {
        let mask = (mask << 1) | 1;
        if mask == (1 << n) - 1 {
            continue;
        }
        let inside = |x: usize| mask >> x & 1 == 1;
        let mut ok = true;
        'cells: for x in 0..n {
            for y in 0..n {
                if inside(x) != inside(y) {
                    continue;
                }
                let (u, v) = qs.r(x, y);
                if inside(u) != inside(x) || inside(v) != inside(x) {
                    ok = false;
                    break 'cells;
                }
            }
        }
        if ok {
            return Ok(Decomposability::Decomposable {
                block: (0..n).filter(|&x| inside(x)).collect(),
            });
        }
    }
    Ok(Decomposability::Indecomposable)
}

/// A rack is faithful when `x -> L_x` is injective.
pub fn is_faithful(rack: &RackStructure) -> bool {
    let n = rack.base.n();
    for x in 0..n {
        for y in x + 1..n {
            if rack.inner_generators[x] == rack.inner_generators[y] {
                return false;
            }
        }
    }
    true
}

/// Order of the subgroup of `Sym(X)` generated by the left actions,
/// by breadth-first closure under composition.
pub fn inner_group_order(rack: &RackStructure) -> Result<u64, RackError> {
    inner_group_order_budgeted(rack, DEFAULT_INNER_BUDGET)
}

pub fn inner_group_order_budgeted(rack: &RackStructure, budget: usize) -> Result<u64, RackError> {
    use std::collections::HashSet;
    let n = rack.base.n();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(frontier[0].images().to_vec());
    while let Some(g) = frontier.pop() {
        for gen in &rack.inner_generators {
            let h = gen.compose(&g);
            if seen.insert(h.images().to_vec()) {
                if seen.len() > budget {
                    return Err(RackError::BudgetExceeded(format!(
                        "inner group exceeds {budget} elements"
                    )));
                }
                frontier.push(h);
            }
        }
    }
    Ok(seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::qset::check_conditions;

    #[test]
    fn dihedral_is_a_quandle() {
        for p in [2, 3, 5, 7] {
            let rack = dihedral_quandle(p);
            assert!(rack.quandle);
            let rep = check_conditions(&rack.base);
            assert!(rep.braided.holds && rep.sd.holds && rep.square_free.holds);
        }
    }

    #[test]
    fn dihedral_two_is_the_flip() {
        let rack = dihedral_quandle(2);
        assert!(rack.base.is_involutive());
        assert_eq!(rack.base, QuadraticSet::trivial(2));
    }

    #[test]
    fn affine_special_cases() {
        // g = n-1 recovers the dihedral quandle
        let a = affine_quandle(5, 4).unwrap();
        assert_eq!(a.base, dihedral_quandle(5).base);
        // g = 1 is the trivial quandle
        let t = affine_quandle(5, 1).unwrap();
        assert_eq!(t.base, QuadraticSet::trivial(5));
        assert!(affine_quandle(6, 2).is_err());
    }

    #[test]
    fn affine_five_two_properties() {
        let rack = affine_quandle(5, 2).unwrap();
        assert!(rack.quandle);
        assert_eq!(rack.inner_generators[0].order(), 4);
        let rep = check_conditions(&rack.base);
        assert!(rep.braided.holds && rep.square_free.holds);
    }

    #[test]
    fn faithfulness() {
        assert!(is_faithful(&dihedral_quandle(5)));
        let trivial = RackStructure::from_qset(QuadraticSet::trivial(3)).unwrap();
        assert!(!is_faithful(&trivial));
        let q5 = RackStructure::from_qset(fixtures::quandle5()).unwrap();
        assert!(is_faithful(&q5));
    }

    #[test]
    fn inner_group_orders() {
        assert_eq!(inner_group_order(&dihedral_quandle(3)).unwrap(), 6);
        assert_eq!(inner_group_order(&dihedral_quandle(5)).unwrap(), 10);
        let trivial = RackStructure::from_qset(QuadraticSet::trivial(4)).unwrap();
        assert_eq!(inner_group_order(&trivial).unwrap(), 1);
    }

    #[test]
    fn dihedral_indecomposable() {
        assert_eq!(
            is_indecomposable(&dihedral_quandle(5).base).unwrap(),
            Decomposability::Indecomposable
        );
        assert_eq!(
            is_indecomposable(&fixtures::quandle4()).unwrap(),
            Decomposability::Indecomposable
        );
    }

    #[test]
    fn trivial_quandle_decomposes() {
        match is_indecomposable(&QuadraticSet::trivial(3)).unwrap() {
            Decomposability::Decomposable { block } => assert_eq!(block, vec![0]),
            other => panic!("expected a decomposition, got {other:?}"),
        }
    }

    #[test]
    fn non_sd_two_block_search() {
        let z = crate::fixtures::extension6();
        match is_indecomposable(&z).unwrap() {
            Decomposability::Decomposable { block } => assert_eq!(block, vec![0, 1, 2]),
            other => panic!("expected a decomposition, got {other:?}"),
        }
    }
}
