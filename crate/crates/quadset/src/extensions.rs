//! Extensions of quadratic sets: the sigma/tau construction on a disjoint
//! union, generalized strong twisted unions, and the mixed braid conditions
//! for split solutions.

use crate::monoid::{self, MonoidView};
use crate::orbits::{self, OrbitError};
use crate::perm::{lcm, Permutation};
use crate::qset::QuadraticSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("blocks do not partition the set")]
    BadPartition,
    #[error("block {index} is not r-invariant: r({x},{y}) leaves the block")]
    BlocksNotInvariant { index: usize, x: usize, y: usize },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Monoid(#[from] monoid::MonoidError),
}

/// Input data for the sigma/tau extension: two disjoint quadratic sets and a
/// permutation of each.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    pub xpart: QuadraticSet,
    pub ypart: QuadraticSet,
    pub sigma: Permutation,
    pub tau: Permutation,
}

/// Builds `Z = X u Y` with `r` restricting to the parts and acting on mixed
/// pairs by `r(y,x) = (sigma x, tau y)`, `r(x,y) = (tau y, sigma x)`.
/// Labels of `Y` are offset by `|X|`.
pub fn build_sigma_tau(spec: &ExtensionSpec) -> QuadraticSet {
    let nx = spec.xpart.n();
    let ny = spec.ypart.n();
    assert_eq!(spec.sigma.size(), nx);
    assert_eq!(spec.tau.size(), ny);
    QuadraticSet::from_fn(nx + ny, |a, b| match (a < nx, b < nx) {
        (true, true) => spec.xpart.r(a, b),
        (false, false) => {
            let (u, v) = spec.ypart.r(a - nx, b - nx);
            (u + nx, v + nx)
        }
        // r(x, y) = (tau y, sigma x)
        (true, false) => (spec.tau.apply(b - nx) + nx, spec.sigma.apply(a)),
        // r(y, x) = (sigma x, tau y)
        (false, true) => (spec.sigma.apply(b), spec.tau.apply(a - nx) + nx),
    })
    .expect("extension table is bijective")
}

/// Whether `phi` commutes with `r` on the given set.
pub fn is_automorphism(qs: &QuadraticSet, phi: &Permutation) -> bool {
    let n = qs.n();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = qs.r(x, y);
            let (a, b) = qs.r(phi.apply(x), phi.apply(y));
            (phi.apply(u), phi.apply(v)) == (a, b)
        })
    })
}

/// Direct braid-relation test on all triples, composing the two three-fold
/// maps of `r`. Independent of the per-condition l1/r1/lr3 route.
pub fn braid_check_direct(qs: &QuadraticSet) -> bool {
    let n = qs.n();
    let r12 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = qs.r(x, y);
        (u, v, z)
    };
    let r23 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = qs.r(y, z);
        (x, u, v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    return false;
                }
            }
        }
    }
    true
}

/// Report of the predicted conditions for the sigma/tau extension to obey
/// the braid relation, cross-checked against the direct test on `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionConditions {
    pub sigma_automorphism: bool,
    pub tau_automorphism: bool,
    /// The four action-periodicity identities: left/right actions of `X`
    /// factor through `sigma^2`, and of `Y` through `tau^2`.
    pub sigma_sq_left: bool,
    pub sigma_sq_right: bool,
    pub tau_sq_left: bool,
    pub tau_sq_right: bool,
    pub predicted_ybe: bool,
    pub direct_ybe: bool,
}

pub fn check_extension_conditions(spec: &ExtensionSpec) -> ExtensionConditions {
    let xt = spec.xpart.actions();
    let yt = spec.ypart.actions();
    let sigma_sq: Vec<usize> = (0..spec.xpart.n())
        .map(|x| spec.sigma.apply(spec.sigma.apply(x)))
        .collect();
    let tau_sq: Vec<usize> = (0..spec.ypart.n())
        .map(|y| spec.tau.apply(spec.tau.apply(y)))
        .collect();
    let sigma_sq_left = (0..spec.xpart.n()).all(|x| xt.left[sigma_sq[x]] == xt.left[x]);
    let sigma_sq_right = (0..spec.xpart.n()).all(|x| xt.right[sigma_sq[x]] == xt.right[x]);
    let tau_sq_left = (0..spec.ypart.n()).all(|y| yt.left[tau_sq[y]] == yt.left[y]);
    let tau_sq_right = (0..spec.ypart.n()).all(|y| yt.right[tau_sq[y]] == yt.right[y]);
    let sigma_automorphism = is_automorphism(&spec.xpart, &spec.sigma);
    let tau_automorphism = is_automorphism(&spec.ypart, &spec.tau);
    let predicted_ybe = sigma_automorphism
        && tau_automorphism
        && sigma_sq_left
        && sigma_sq_right
        && tau_sq_left
        && tau_sq_right;
    let direct_ybe = braid_check_direct(&build_sigma_tau(spec));
    ExtensionConditions {
        sigma_automorphism,
        tau_automorphism,
        sigma_sq_left,
        sigma_sq_right,
        tau_sq_left,
        tau_sq_right,
        predicted_ybe,
        direct_ybe,
    }
}

/// Predicted vs. directly computed 2-cancellativity, mixed orbit length and
/// order of `r` for a sigma/tau extension.
///
/// On mixed pairs the even iterates are `(sigma^2k x, tau^2k y)` and the odd
/// iterates live in the opposite product, so 2-cancellativity of the mixed
/// part holds exactly when `sigma^2` and `tau^2` are uniform with one common
/// cycle length `d`; every mixed orbit then has length `2d`. When sigma and
/// tau themselves share a uniform cycle length `q`, this is `q` for even `q`
/// and `2q` for odd `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitProfile {
    pub predicted_two_cancellative: bool,
    pub actual_two_cancellative: bool,
    /// Common cycle length of sigma and tau when both are uniform.
    pub q: Option<usize>,
    /// Common cycle length of their squares, the exact mixed invariant.
    pub squared_cycle_len: Option<usize>,
    pub predicted_mixed_len: Option<usize>,
    /// Distinct orbit lengths of mixed pairs in `Z^2`.
    pub actual_mixed_lens: Vec<usize>,
    pub predicted_order: Option<u64>,
    pub actual_order: u64,
    pub consistent: bool,
}

pub fn predicted_orbit_profile(spec: &ExtensionSpec) -> OrbitProfile {
    let z = build_sigma_tau(spec);
    let nx = spec.xpart.n();
    let n = z.n();

    let parts_two_cancellative = crate::qset::check_conditions(&spec.xpart)
        .two_cancellative
        .holds
        && crate::qset::check_conditions(&spec.ypart)
            .two_cancellative
            .holds;
    let q = match (
        spec.sigma.uniform_cycle_length(),
        spec.tau.uniform_cycle_length(),
    ) {
        (Some(a), Some(b)) if a == b => Some(a),
        _ => None,
    };
    let sigma_sq = spec.sigma.compose(&spec.sigma);
    let tau_sq = spec.tau.compose(&spec.tau);
    let squared_cycle_len = match (
        sigma_sq.uniform_cycle_length(),
        tau_sq.uniform_cycle_length(),
    ) {
        (Some(a), Some(b)) if a == b => Some(a),
        _ => None,
    };
    let predicted_two_cancellative = parts_two_cancellative && squared_cycle_len.is_some();
    let predicted_mixed_len = squared_cycle_len.map(|d| 2 * d);
    let predicted_order = predicted_two_cancellative.then(|| {
        lcm(
            lcm(spec.xpart.order_of_r(), spec.ypart.order_of_r()),
            predicted_mixed_len.unwrap() as u64,
        )
    });

    let actual_two_cancellative = crate::qset::check_conditions(&z).two_cancellative.holds;
    let part = orbits::r_orbits(&z);
    let mut actual_mixed_lens = Vec::new();
    for x in 0..nx {
        for y in nx..n {
            let c = part.class_of[x * n + y] as usize;
            if !actual_mixed_lens.contains(&part.lengths[c]) {
                actual_mixed_lens.push(part.lengths[c]);
            }
        }
    }
    actual_mixed_lens.sort_unstable();
    let actual_order = z.order_of_r();

    let consistent = predicted_two_cancellative == actual_two_cancellative
        && match predicted_two_cancellative {
            false => true,
            true => {
                actual_mixed_lens == vec![predicted_mixed_len.unwrap()]
                    && predicted_order == Some(actual_order)
            }
        };
    OrbitProfile {
        predicted_two_cancellative,
        actual_two_cancellative,
        q,
        squared_cycle_len,
        predicted_mixed_len,
        actual_mixed_lens,
        predicted_order,
        actual_order,
        consistent,
    }
}

/// A partition of the ground set into pairwise disjoint blocks covering it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, ExtensionError> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(ExtensionError::BadPartition);
            }
            for &x in b {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(ExtensionError::BadPartition);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(ExtensionError::BadPartition);
        }
        Ok(Partition { blocks })
    }

    /// Requires `r(B x B) = B x B` for each block.
    pub fn check_invariant(&self, qs: &QuadraticSet) -> Result<(), ExtensionError> {
        for (index, b) in self.blocks.iter().enumerate() {
            for &x in b {
                for &y in b {
                    let (u, v) = qs.r(x, y);
                    if !b.contains(&u) || !b.contains(&v) {
                        return Err(ExtensionError::BlocksNotInvariant { index, x, y });
                    }
                }
            }
        }
        Ok(())
    }

    /// The sub-solution induced on one block, with its label map.
    pub fn restrict(&self, qs: &QuadraticSet, index: usize) -> (QuadraticSet, Vec<usize>) {
        let b = &self.blocks[index];
        let pos = |x: usize| b.iter().position(|&e| e == x).unwrap();
        let sub = QuadraticSet::from_fn(b.len(), |i, j| {
            let (u, v) = qs.r(b[i], b[j]);
            (pos(u), pos(v))
        })
        .expect("restriction of an invariant block is bijective");
        (sub, b.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StuTag {
    Stu1,
    Stu2,
    Stu3,
    Stu4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuFailure {
    pub base_block: usize,
    pub actor_block: usize,
    pub tag: StuTag,
    /// Ground witnesses are `[alpha, y, x]`-style tuples in the order the
    /// condition reads.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuReport {
    pub holds: bool,
    pub failures: Vec<StuFailure>,
}

/// Checks the four ground twisted-union conditions for every ordered pair of
/// blocks: actors from one block act on the other block independently of the
/// returned companion element.
pub fn is_generalized_stu(qs: &QuadraticSet, part: &Partition) -> Result<StuReport, ExtensionError> {
    part.check_invariant(qs)?;
    let t = qs.actions();
    let left = &t.left;
    let right = &t.right;
    let mut failures = Vec::new();
    for (bi, base) in part.blocks.iter().enumerate() {
        for (ai, actor) in part.blocks.iter().enumerate() {
            if bi == ai {
                continue;
            }
            // stu1: ^(alpha^y) x = ^alpha x
            for &alpha in actor {
                for &y in base {
                    for &x in base {
                        if left[right[y][alpha]][x] != left[alpha][x] {
                            failures.push(StuFailure {
                                base_block: bi,
                                actor_block: ai,
                                tag: StuTag::Stu1,
                                witness: vec![alpha, y, x],
                            });
                        }
                    }
                }
            }
            // stu2: x^(^y alpha) = x^alpha
            for &x in base {
                for &y in base {
                    for &alpha in actor {
                        if right[left[y][alpha]][x] != right[alpha][x] {
                            failures.push(StuFailure {
                                base_block: bi,
                                actor_block: ai,
                                tag: StuTag::Stu2,
                                witness: vec![x, y, alpha],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(StuReport {
        holds: failures.is_empty(),
        failures,
    })
}

/// Word-level twisted-union conditions: for words `a, b` over one block and
/// `u, v` over another, `^(u^b) a = ^u a`, `a^(^b u) = a^u`, `^(a^v) u = ^a u`
/// and `u^(^v a) = u^a` as class equalities, all lengths up to `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuMonoidReport {
    pub holds: bool,
    pub checked_pairs: usize,
    pub failure: Option<StuFailure>,
}

pub fn stu_monoid_bounded(
    qs: &QuadraticSet,
    part: &Partition,
    max_len: usize,
    budget: usize,
) -> Result<StuMonoidReport, ExtensionError> {
    part.check_invariant(qs)?;
    let view = MonoidView::new_budgeted(qs.clone(), max_len, budget)?;
    let mut checked = 0usize;
    for (bi, base) in part.blocks.iter().enumerate() {
        for (ai, actor) in part.blocks.iter().enumerate() {
            if bi == ai {
                continue;
            }
            let base_words = words_over(base, max_len);
            let actor_words = words_over(actor, max_len);
            for u in &actor_words {
                for a in &base_words {
                    for b in &base_words {
                        checked += 1;
                        // stu1 at word level
                        let ub = view.raw_right(u, b);
                        let lhs = view.raw_left(&ub, a);
                        let rhs = view.raw_left(u, a);
                        if !view.same_class(&lhs, &rhs) {
                            return Ok(StuMonoidReport {
                                holds: false,
                                checked_pairs: checked,
                                failure: Some(StuFailure {
                                    base_block: bi,
                                    actor_block: ai,
                                    tag: StuTag::Stu1,
                                    witness: flat(&[u, b, a]),
                                }),
                            });
                        }
                        // stu2 at word level
                        let bu = view.raw_left(b, u);
                        let lhs = view.raw_right(a, &bu);
                        let rhs = view.raw_right(a, u);
                        if !view.same_class(&lhs, &rhs) {
                            return Ok(StuMonoidReport {
                                holds: false,
                                checked_pairs: checked,
                                failure: Some(StuFailure {
                                    base_block: bi,
                                    actor_block: ai,
                                    tag: StuTag::Stu2,
                                    witness: flat(&[a, b, u]),
                                }),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(StuMonoidReport {
        holds: true,
        checked_pairs: checked,
        failure: None,
    })
}

fn words_over(letters: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = letters.iter().map(|&l| vec![l]).collect();
    let mut prev = out.clone();
    for _ in 2..=max_len {
        let mut next = Vec::new();
        for w in &prev {
            for &l in letters {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        prev = next;
    }
    out
}

fn flat(words: &[&Vec<usize>]) -> Vec<usize> {
    words.iter().flat_map(|w| w.iter().copied()).collect()
}

/// Pointwise l1 at a triple.
fn l1_at(left: &[Vec<usize>], right: &[Vec<usize>], a: usize, b: usize, c: usize) -> bool {
    left[a][left[b][c]] == left[left[a][b]][left[right[b][a]][c]]
}

/// Pointwise r2 at a triple: `r((a,b)^c) = (r(a,b))^c` componentwise.
fn r2_at(
    qs: &QuadraticSet,
    left: &[Vec<usize>],
    right: &[Vec<usize>],
    a: usize,
    b: usize,
    c: usize,
) -> bool {
    let lhs = qs.r(right[left[b][c]][a], right[c][b]);
    let (u, v) = qs.r(a, b);
    let rhs = (right[left[v][c]][u], right[c][v]);
    lhs == rhs
}

/// Mixed braid conditions for a two-block splitting, plus the restricted
/// automorphism families, with the verdict cross-checked against the direct
/// braid test on the whole set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedReport {
    pub x_braided: bool,
    pub y_braided: bool,
    /// l1 and r2 on the patterns (X,Y,X) and (Y,X,Y).
    pub l1_xyx: bool,
    pub r2_xyx: bool,
    pub l1_yxy: bool,
    pub r2_yxy: bool,
    /// l1 and r2 on the remaining four mixed patterns, the content of the
    /// homomorphism conditions.
    pub hom_patterns: bool,
    /// Each restricted left/right action of one block is an automorphism of
    /// the other block's sub-solution.
    pub restricted_automorphisms: bool,
    pub predicted_ybe: bool,
    pub direct_ybe: bool,
}

pub fn mixed_l1_r2(qs: &QuadraticSet, part: &Partition) -> Result<MixedReport, ExtensionError> {
    if part.blocks.len() != 2 {
        return Err(ExtensionError::BadPartition);
    }
    part.check_invariant(qs)?;
    let t = qs.actions();
    let (left, right) = (&t.left, &t.right);
    let xs = part.blocks[0].clone();
    let ys = part.blocks[1].clone();

    let all = |pa: &[usize], pb: &[usize], pc: &[usize], f: &dyn Fn(usize, usize, usize) -> bool| {
        pa.iter()
            .all(|&a| pb.iter().all(|&b| pc.iter().all(|&c| f(a, b, c))))
    };
    let l1 = |a: usize, b: usize, c: usize| l1_at(left, right, a, b, c);
    let r2 = |a: usize, b: usize, c: usize| r2_at(qs, left, right, a, b, c);

    let (sub_x, _) = part.restrict(qs, 0);
    let (sub_y, _) = part.restrict(qs, 1);
    let x_braided = braid_check_direct(&sub_x);
    let y_braided = braid_check_direct(&sub_y);

    let l1_xyx = all(&xs, &ys, &xs, &l1);
    let r2_xyx = all(&xs, &ys, &xs, &r2);
    let l1_yxy = all(&ys, &xs, &ys, &l1);
    let r2_yxy = all(&ys, &xs, &ys, &r2);

    let hom_patterns = all(&xs, &xs, &ys, &l1)
        && all(&xs, &xs, &ys, &r2)
        && all(&ys, &xs, &xs, &l1)
        && all(&ys, &xs, &xs, &r2)
        && all(&xs, &ys, &ys, &l1)
        && all(&xs, &ys, &ys, &r2)
        && all(&ys, &ys, &xs, &l1)
        && all(&ys, &ys, &xs, &r2);

    let restricted_automorphisms = restricted_automorphism_families(qs, &xs, &ys);

    let predicted_ybe =
        x_braided && y_braided && l1_xyx && r2_xyx && l1_yxy && r2_yxy && hom_patterns;
    let direct_ybe = braid_check_direct(qs);
    Ok(MixedReport {
        x_braided,
        y_braided,
        l1_xyx,
        r2_xyx,
        l1_yxy,
        r2_yxy,
        hom_patterns,
        restricted_automorphisms,
        predicted_ybe,
        direct_ybe,
    })
}

/// The four ground twisted-union conditions for the ordered block pair
/// `(xs, ys)`, in the order stu1..stu4.
pub fn stu_conditions(qs: &QuadraticSet, xs: &[usize], ys: &[usize]) -> [bool; 4] {
    let t = qs.actions();
    let (left, right) = (&t.left, &t.right);
    let stu1 = ys.iter().all(|&alpha| {
        xs.iter()
            .all(|&y| xs.iter().all(|&x| left[right[y][alpha]][x] == left[alpha][x]))
    });
    let stu2 = xs.iter().all(|&x| {
        xs.iter()
            .all(|&y| ys.iter().all(|&alpha| right[left[y][alpha]][x] == right[alpha][x]))
    });
    let stu3 = xs.iter().all(|&x| {
        ys.iter()
            .all(|&beta| ys.iter().all(|&alpha| left[right[beta][x]][alpha] == left[x][alpha]))
    });
    let stu4 = ys.iter().all(|&alpha| {
        ys.iter()
            .all(|&beta| xs.iter().all(|&x| right[left[beta][x]][alpha] == right[x][alpha]))
    });
    [stu1, stu2, stu3, stu4]
}

/// The automorphism families matching the four conditions one for one:
/// left/right actions of `ys` restricted to `xs`, then left/right actions of
/// `xs` restricted to `ys`.
pub fn automorphism_families(qs: &QuadraticSet, xs: &[usize], ys: &[usize]) -> [bool; 4] {
    let t = qs.actions();
    let family = |base: &[usize], actors: &[usize], table: &Vec<Vec<usize>>| {
        actors.iter().all(|&a| {
            base.iter().all(|&x| {
                base.iter().all(|&y| {
                    let (u, v) = qs.r(x, y);
                    qs.r(table[a][x], table[a][y]) == (table[a][u], table[a][v])
                })
            })
        })
    };
    [
        family(xs, ys, &t.left),
        family(xs, ys, &t.right),
        family(ys, xs, &t.left),
        family(ys, xs, &t.right),
    ]
}

/// Whether, for every actor in the other block, the restricted left and right
/// actions are automorphisms of the block's sub-solution.
pub fn restricted_automorphism_families(qs: &QuadraticSet, xs: &[usize], ys: &[usize]) -> bool {
    automorphism_families(qs, xs, ys).iter().all(|&b| b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::qset::check_conditions;

    #[test]
    fn extension6_matches_expected_profile() {
        let z = fixtures::extension6();
        assert_eq!(z.n(), 6);
        let rep = check_conditions(&z);
        assert!(rep.nondegenerate.holds && rep.square_free.holds && rep.braided.holds);
        assert!(rep.two_cancellative.holds);
        assert!(!rep.involutive.holds);
        assert_eq!(z.order_of_r(), 6);
    }

    #[test]
    fn extension6_conditions_and_profile() {
        let spec = fixtures::extension6_spec();
        let cond = check_extension_conditions(&spec);
        assert!(cond.predicted_ybe && cond.direct_ybe);
        let prof = predicted_orbit_profile(&spec);
        assert!(prof.consistent);
        assert_eq!(prof.q, Some(3));
        assert_eq!(prof.predicted_mixed_len, Some(6));
        assert_eq!(prof.actual_mixed_lens, vec![6]);
        assert_eq!(prof.actual_order, 6);
    }

    #[test]
    fn identity_extension_is_trivial() {
        let spec = ExtensionSpec {
            xpart: QuadraticSet::trivial(2),
            ypart: QuadraticSet::trivial(3),
            sigma: Permutation::identity(2),
            tau: Permutation::identity(3),
        };
        let z = build_sigma_tau(&spec);
        assert_eq!(z, QuadraticSet::trivial(5));
        let prof = predicted_orbit_profile(&spec);
        assert!(prof.consistent && prof.predicted_two_cancellative);
        assert_eq!(prof.predicted_mixed_len, Some(2));
    }

    #[test]
    fn involutive_iff_squares_trivial() {
        let spec = ExtensionSpec {
            xpart: QuadraticSet::trivial(2),
            ypart: QuadraticSet::trivial(2),
            sigma: Permutation::from_cycles(2, "(0 1)").unwrap(),
            tau: Permutation::from_cycles(2, "(0 1)").unwrap(),
        };
        let z = build_sigma_tau(&spec);
        assert!(z.is_involutive());
        let cond = check_extension_conditions(&spec);
        assert!(cond.predicted_ybe && cond.direct_ybe);
    }

    #[test]
    fn non_automorphism_breaks_the_braid_relation() {
        // a transposition does not commute with the order-4 quandle's actions
        let spec = ExtensionSpec {
            xpart: fixtures::quandle4(),
            ypart: QuadraticSet::trivial(3),
            sigma: Permutation::from_cycles(4, "(0 1)").unwrap(),
            tau: Permutation::identity(3),
        };
        let cond = check_extension_conditions(&spec);
        assert!(!cond.sigma_automorphism);
        assert!(!cond.predicted_ybe && !cond.direct_ybe);
    }

    #[test]
    fn automorphism_with_untamed_square_still_fails() {
        // every relabeling of the order-3 dihedral quandle is an
        // automorphism, but its left actions are faithful, so the square
        // condition bites for a 3-cycle
        let spec = ExtensionSpec {
            xpart: fixtures::dihedral(3),
            ypart: QuadraticSet::trivial(3),
            sigma: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
            tau: Permutation::identity(3),
        };
        let cond = check_extension_conditions(&spec);
        assert!(cond.sigma_automorphism);
        assert!(!cond.sigma_sq_left);
        assert!(!cond.predicted_ybe && !cond.direct_ybe);
    }

    #[test]
    fn mismatched_cycle_types_are_not_two_cancellative() {
        let spec = ExtensionSpec {
            xpart: QuadraticSet::trivial(2),
            ypart: QuadraticSet::trivial(3),
            sigma: Permutation::from_cycles(2, "(0 1)").unwrap(),
            tau: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
        };
        let prof = predicted_orbit_profile(&spec);
        assert!(!prof.predicted_two_cancellative);
        assert!(!prof.actual_two_cancellative);
        assert!(prof.consistent);
    }

    #[test]
    fn extension6_is_a_twisted_union() {
        let z = fixtures::extension6();
        let part = Partition::new(6, fixtures::extension6_blocks()).unwrap();
        let stu = is_generalized_stu(&z, &part).unwrap();
        assert!(stu.holds);
        let mixed = mixed_l1_r2(&z, &part).unwrap();
        assert!(mixed.predicted_ybe && mixed.direct_ybe);
        assert!(mixed.restricted_automorphisms);
    }

    #[test]
    fn quandle9_pairwise_stu() {
        let z = fixtures::quandle9();
        let part = Partition::new(9, fixtures::quandle9_blocks()).unwrap();
        let stu = is_generalized_stu(&z, &part).unwrap();
        assert!(stu.holds);
    }

    #[test]
    fn incompatible_sigma_fails_a_mixed_condition() {
        let spec = ExtensionSpec {
            xpart: fixtures::dihedral(3),
            ypart: QuadraticSet::trivial(3),
            sigma: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
            tau: Permutation::from_cycles(3, "(0 1 2)").unwrap(),
        };
        let z = build_sigma_tau(&spec);
        let part = Partition::new(6, fixtures::extension6_blocks()).unwrap();
        let mixed = mixed_l1_r2(&z, &part).unwrap();
        assert!(mixed.x_braided && mixed.y_braided);
        assert!(!mixed.direct_ybe);
        assert_eq!(mixed.predicted_ybe, mixed.direct_ybe);
    }

    #[test]
    fn blocks_must_be_invariant() {
        let z = fixtures::extension6();
        let part = Partition::new(6, vec![vec![0, 3], vec![1, 2, 4, 5]]).unwrap();
        assert!(matches!(
            is_generalized_stu(&z, &part),
            Err(ExtensionError::BlocksNotInvariant { .. })
        ));
    }
}
