//! Small standard solutions used across the test suites and shipped as JSON
//! fixtures. All labels are 0-based.

use crate::extensions::{build_sigma_tau, ExtensionSpec};
use crate::perm::Permutation;
use crate::qset::QuadraticSet;
use crate::racks;

/// Permutation solution on three letters: `r(a,b) = (rho(b), a)` with
/// `rho = (0 1 2)`. Braided, nondegenerate, not 2-cancellative, no fixed
/// points, and `r` has order 6.
pub fn perm3() -> QuadraticSet {
    let rho = [1usize, 2, 0];
    QuadraticSet::from_fn(3, |a, b| (rho[b], a)).unwrap()
}

/// Three-letter map satisfying l1 and r1 but not lr3, with a single fixed
/// pair `(2,0)`. Not 2-cancellative and not a braided set.
pub fn nonbraided3() -> QuadraticSet {
    let cycles: [&[(usize, usize)]; 2] = [
        // (0,1) -> (0,2) -> (1,2) -> (1,1) -> (0,1)
        &[(0, 1), (0, 2), (1, 2), (1, 1)],
        // (0,0) -> (2,2) -> (1,0) -> (2,1) -> (0,0)
        &[(0, 0), (2, 2), (1, 0), (2, 1)],
    ];
    let mut rmap = vec![(usize::MAX, usize::MAX); 9];
    for cyc in cycles {
        for i in 0..cyc.len() {
            let (x, y) = cyc[i];
            rmap[x * 3 + y] = cyc[(i + 1) % cyc.len()];
        }
    }
    rmap[2 * 3] = (2, 0);
    QuadraticSet::from_table(3, rmap).unwrap()
}

/// The dihedral quandle of order `p` as a quadratic set.
pub fn dihedral(p: usize) -> QuadraticSet {
    racks::dihedral_quandle(p).base
}

/// Order-5 self-distributive solution with involutive left actions, seeded by
/// one length-5 orbit; a relabeling of the dihedral quandle of order 5.
pub fn quandle5() -> QuadraticSet {
    sd_from_cycles(5, &["(1 3)(2 4)", "(0 2)(3 4)", "(1 4)(0 3)", "(0 4)(1 2)", "(2 3)(0 1)"])
}

/// Order-4 indecomposable quandle whose left actions are 3-cycles. Its
/// monoid is 3-cancellative but not cancellative.
pub fn quandle4() -> QuadraticSet {
    sd_from_cycles(4, &["(1 2 3)", "(0 3 2)", "(0 1 3)", "(0 2 1)"])
}

/// Order-9 quandle splitting into three 3-element subsquares, each a copy of
/// the dihedral quandle of order 3; mixed pairs rotate the three blocks.
pub fn quandle9() -> QuadraticSet {
    sd_from_cycles(
        9,
        &[
            "(1 7)(2 8)(4 5)(3 6)",
            "(0 2)(3 7)(5 6)(4 8)",
            "(0 4)(1 3)(5 7)(8 6)",
            "(0 6)(1 5)(2 4)(7 8)",
            "(0 7)(1 8)(2 6)(3 5)",
            "(0 1)(2 7)(3 8)(4 6)",
            "(0 3)(1 2)(4 7)(5 8)",
            "(0 8)(1 6)(2 5)(3 4)",
            "(0 5)(1 4)(2 3)(6 7)",
        ],
    )
}

/// The three-block splitting of [`quandle9`].
pub fn quandle9_blocks() -> Vec<Vec<usize>> {
    vec![vec![0, 3, 6], vec![2, 5, 7], vec![1, 4, 8]]
}

/// Involutive nondegenerate square-free solution of order 3 that is not the
/// flip: the top generator acts on the other two by the transposition.
pub fn skew3() -> QuadraticSet {
    let mut rmap: Vec<(usize, usize)> = (0..9).map(|c| (c / 3, c % 3)).collect();
    let pairs = [((2, 1), (0, 2)), ((2, 0), (1, 2)), ((1, 0), (0, 1))];
    for (a, b) in pairs {
        rmap[a.0 * 3 + a.1] = b;
        rmap[b.0 * 3 + b.1] = a;
    }
    QuadraticSet::from_table(3, rmap).unwrap()
}

/// Order-6 extension of two trivial 3-sets along the 3-cycles
/// `sigma = tau = (0 1 2)`; the map `r` has order 6.
pub fn extension6() -> QuadraticSet {
    build_sigma_tau(&extension6_spec())
}

pub fn extension6_spec() -> ExtensionSpec {
    ExtensionSpec {
        xpart: QuadraticSet::trivial(3),
        ypart: QuadraticSet::trivial(3),
        sigma: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
        tau: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
    }
}

/// The two parts of [`extension6`] as blocks of the combined set.
pub fn extension6_blocks() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![3, 4, 5]]
}

fn sd_from_cycles(n: usize, left: &[&str]) -> QuadraticSet {
    let perms: Vec<Permutation> = left
        .iter()
        .map(|c| Permutation::from_cycles(n, c).unwrap())
        .collect();
    QuadraticSet::from_fn(n, |x, y| (perms[x].apply(y), x)).unwrap()
}
