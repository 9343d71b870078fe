//! The graded monoid of a quadratic set, viewed through orbit classes of
//! words, together with the self-actions that make it a braided monoid when
//! the underlying set obeys the braid relation.
//!
//! Two words are equal in the monoid iff they have the same length and lie in
//! the same orbit of the adjacent-pair maps, so all class arithmetic is
//! delegated to the orbit partitions.

use crate::orbits::{dm_orbits_budgeted, OrbitError, OrbitPartition, DEFAULT_ORBIT_BUDGET};
use crate::qset::{check_conditions, ActionTables, QuadraticSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonoidError {
    #[error("actions on words are only well-defined for braided sets")]
    NotBraided,
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

/// Orbit partitions of `X^m` for all `m` up to a length bound, with class
/// lookup and concatenation on classes.
pub struct MonoidView {
    qs: QuadraticSet,
    actions: ActionTables,
    parts: Vec<OrbitPartition>,
    max_len: usize,
}

impl MonoidView {
    pub fn new(qs: QuadraticSet, max_len: usize) -> Result<Self, MonoidError> {
        Self::new_budgeted(qs, max_len, DEFAULT_ORBIT_BUDGET)
    }

    pub fn new_budgeted(
        qs: QuadraticSet,
        max_len: usize,
        budget: usize,
    ) -> Result<Self, MonoidError> {
        let mut parts = Vec::with_capacity(max_len + 1);
        for m in 0..=max_len {
            parts.push(dm_orbits_budgeted(&qs, m, budget)?);
        }
        let actions = qs.actions();
        Ok(MonoidView {
            qs,
            actions,
            parts,
            max_len,
        })
    }

    pub fn qs(&self) -> &QuadraticSet {
        &self.qs
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn partition(&self, degree: usize) -> &OrbitPartition {
        &self.parts[degree]
    }

    /// Class of a word: its degree and orbit id.
    pub fn class(&self, word: &[usize]) -> (usize, u32) {
        assert!(word.len() <= self.max_len, "word exceeds the view bound");
        (word.len(), self.parts[word.len()].class_of_word(word))
    }

    pub fn same_class(&self, a: &[usize], b: &[usize]) -> bool {
        a.len() == b.len() && self.class(a).1 == self.class(b).1
    }

    /// Canonical representative of the product of two classes.
    pub fn mul(&self, a: (usize, u32), b: (usize, u32)) -> (usize, u32) {
        let mut w = self.parts[a.0].rep_word(a.1);
        w.extend(self.parts[b.0].rep_word(b.1));
        self.class(&w)
    }

    /// `(^c u, c^u)` for a single-letter actor: the actor zips through the
    /// word, acting on each letter and being acted on in return.
    pub fn letter_left(&self, c: usize, u: &[usize]) -> (Vec<usize>, usize) {
        let mut actor = c;
        let mut out = Vec::with_capacity(u.len());
        for &l in u {
            out.push(self.actions.left[actor][l]);
            actor = self.actions.right[l][actor];
        }
        (out, actor)
    }

    /// `(u^c, ^u c)` for a single-letter actor, zipping from the right.
    pub fn letter_right(&self, u: &[usize], c: usize) -> (Vec<usize>, usize) {
        let mut actor = c;
        let mut out = vec![0; u.len()];
        for (i, &l) in u.iter().enumerate().rev() {
            out[i] = self.actions.right[actor][l];
            actor = self.actions.left[l][actor];
        }
        (out, actor)
    }

    /// `^a u` for word actors, by iterating the single-letter case.
    pub fn raw_left(&self, actor: &[usize], u: &[usize]) -> Vec<usize> {
        let mut cur = u.to_vec();
        for &c in actor.iter().rev() {
            cur = self.letter_left(c, &cur).0;
        }
        cur
    }

    /// `u^a` for word actors.
    pub fn raw_right(&self, u: &[usize], actor: &[usize]) -> Vec<usize> {
        let mut cur = u.to_vec();
        for &c in actor {
            cur = self.letter_right(&cur, c).0;
        }
        cur
    }
}

/// `^a u`, guarded: only braided sets have well-defined class-level actions.
pub fn word_action_left(
    view: &MonoidView,
    actor: &[usize],
    u: &[usize],
) -> Result<Vec<usize>, MonoidError> {
    if !check_conditions(view.qs()).braided.holds {
        return Err(MonoidError::NotBraided);
    }
    Ok(view.raw_left(actor, u))
}

/// `u^a`, guarded as [`word_action_left`].
pub fn word_action_right(
    view: &MonoidView,
    u: &[usize],
    actor: &[usize],
) -> Result<Vec<usize>, MonoidError> {
    if !check_conditions(view.qs()).braided.holds {
        return Err(MonoidError::NotBraided);
    }
    Ok(view.raw_right(u, actor))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub witness: Option<Vec<Vec<usize>>>,
}

impl CheckOutcome {
    fn ok() -> Self {
        CheckOutcome {
            holds: true,
            witness: None,
        }
    }
}

/// Outcome of the matched-pair verification at a bounded word length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairReport {
    pub max_len: usize,
    pub ml0: CheckOutcome,
    pub mr0: CheckOutcome,
    pub ml1: CheckOutcome,
    pub mr1: CheckOutcome,
    pub ml2: CheckOutcome,
    pub mr2: CheckOutcome,
    /// `^u v . u^v = uv` as a class equality.
    pub m3: CheckOutcome,
    pub well_defined_left: CheckOutcome,
    pub well_defined_right: CheckOutcome,
    /// Braid relation of the induced pair map on classes of word triples.
    pub rs_braid: CheckOutcome,
}

impl MatchedPairReport {
    pub fn all_hold(&self) -> bool {
        self.ml0.holds
            && self.mr0.holds
            && self.ml1.holds
            && self.mr1.holds
            && self.ml2.holds
            && self.mr2.holds
            && self.m3.holds
            && self.well_defined_left.holds
            && self.well_defined_right.holds
            && self.rs_braid.holds
    }
}

fn words_up_to(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 1..=max_len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for l in 0..n {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w
}

/// Verifies the matched-pair identities, the middle identity, and the
/// well-definedness of both actions on classes, for all words up to the
/// length bound. Runs on any quadratic set; non-braided inputs are expected
/// to produce witnessed failures rather than an error.
pub fn check_matched_pair(
    qs: &QuadraticSet,
    max_len: usize,
    budget: usize,
) -> Result<MatchedPairReport, MonoidError> {
    let view = MonoidView::new_budgeted(qs.clone(), max_len, budget)?;
    let n = qs.n();
    let words = words_up_to(n, max_len);

    // unit laws: empty actors and empty targets
    let mut ml0 = CheckOutcome::ok();
    let mut mr0 = CheckOutcome::ok();
    for w in &words {
        if view.raw_left(w, &[]) != Vec::<usize>::new() || view.raw_left(&[], w) != *w {
            ml0 = CheckOutcome {
                holds: false,
                witness: Some(vec![w.clone()]),
            };
            break;
        }
    }
    for w in &words {
        if view.raw_right(&[], w) != Vec::<usize>::new() || view.raw_right(w, &[]) != *w {
            mr0 = CheckOutcome {
                holds: false,
                witness: Some(vec![w.clone()]),
            };
            break;
        }
    }

    let mut ml1 = CheckOutcome::ok();
    let mut mr1 = CheckOutcome::ok();
    'ml1: for a in &words {
        for b in &words {
            if a.len() + b.len() > max_len {
                continue;
            }
            for u in &words {
                let ab = concat(a, b);
                if view.raw_left(&ab, u) != view.raw_left(a, &view.raw_left(b, u)) {
                    ml1 = CheckOutcome {
                        holds: false,
                        witness: Some(vec![a.clone(), b.clone(), u.clone()]),
                    };
                    break 'ml1;
                }
            }
        }
    }
    'mr1: for u in &words {
        for a in &words {
            for b in &words {
                if a.len() + b.len() > max_len {
                    continue;
                }
                let ab = concat(a, b);
                if view.raw_right(u, &ab) != view.raw_right(&view.raw_right(u, a), b) {
                    mr1 = CheckOutcome {
                        holds: false,
                        witness: Some(vec![u.clone(), a.clone(), b.clone()]),
                    };
                    break 'mr1;
                }
            }
        }
    }

    let mut ml2 = CheckOutcome::ok();
    'ml2: for a in &words {
        for u in &words {
            for v in &words {
                if u.len() + v.len() > max_len {
                    continue;
                }
                let lhs = view.raw_left(a, &concat(u, v));
                let rhs = concat(
                    &view.raw_left(a, u),
                    &view.raw_left(&view.raw_right(a, u), v),
                );
                if lhs != rhs {
                    ml2 = CheckOutcome {
                        holds: false,
                        witness: Some(vec![a.clone(), u.clone(), v.clone()]),
                    };
                    break 'ml2;
                }
            }
        }
    }
    let mut mr2 = CheckOutcome::ok();
    'mr2: for u in &words {
        for a in &words {
            for b in &words {
                if a.len() + b.len() > max_len {
                    continue;
                }
                let lhs = view.raw_right(&concat(a, b), u);
                let rhs = concat(
                    &view.raw_right(a, &view.raw_left(b, u)),
                    &view.raw_right(b, u),
                );
                if lhs != rhs {
                    mr2 = CheckOutcome {
                        holds: false,
                        witness: Some(vec![a.clone(), b.clone(), u.clone()]),
                    };
                    break 'mr2;
                }
            }
        }
    }

    let mut m3 = CheckOutcome::ok();
    'm3: for u in &words {
        for v in &words {
            if u.len() + v.len() > max_len {
                continue;
            }
            let lhs = concat(&view.raw_left(u, v), &view.raw_right(u, v));
            if !view.same_class(&lhs, &concat(u, v)) {
                m3 = CheckOutcome {
                    holds: false,
                    witness: Some(vec![u.clone(), v.clone()]),
                };
                break 'm3;
            }
        }
    }

    // class-level well-definedness against orbit representatives
    let mut well_defined_left = CheckOutcome::ok();
    let mut well_defined_right = CheckOutcome::ok();
    'wdl: for du in 1..=max_len {
        let part = view.partition(du);
        for idx in 0..part.class_of.len() {
            let u = crate::orbits::decode(n, du, idx);
            let rep = part.rep_word(part.class_of[idx]);
            if u == rep {
                continue;
            }
            for v in &words {
                if !view.same_class(&view.raw_left(&u, v), &view.raw_left(&rep, v)) {
                    well_defined_left = CheckOutcome {
                        holds: false,
                        witness: Some(vec![u.clone(), rep.clone(), v.clone()]),
                    };
                    break 'wdl;
                }
            }
        }
    }
    'wdr: for du in 1..=max_len {
        let part = view.partition(du);
        for idx in 0..part.class_of.len() {
            let u = crate::orbits::decode(n, du, idx);
            let rep = part.rep_word(part.class_of[idx]);
            if u == rep {
                continue;
            }
            for v in &words {
                if !view.same_class(&view.raw_right(v, &u), &view.raw_right(v, &rep)) {
                    well_defined_right = CheckOutcome {
                        holds: false,
                        witness: Some(vec![v.clone(), u.clone(), rep.clone()]),
                    };
                    break 'wdr;
                }
            }
        }
    }

    // braid relation of the pair map (u,v) -> (^u v, u^v) on class triples;
    // letter triples are always covered, whatever the length bound
    let triple_bound = max_len.max(3);
    let mut rs_braid = CheckOutcome::ok();
    let rs = |u: &Vec<usize>, v: &Vec<usize>| (view.raw_left(u, v), view.raw_right(u, v));
    'braid: for u in &words {
        for v in &words {
            for w in &words {
                if u.len() + v.len() + w.len() > triple_bound {
                    continue;
                }
                // r12 r23 r12
                let (a1, b1) = rs(u, v);
                let (b2, c2) = rs(&b1, w);
                let (a3, b3) = rs(&a1, &b2);
                let lhs = (a3, b3, c2);
                // r23 r12 r23
                let (b4, c4) = rs(v, w);
                let (a5, b5) = rs(u, &b4);
                let (b6, c6) = rs(&b5, &c4);
                let rhs = (a5, b6, c6);
                if !(view.same_class(&lhs.0, &rhs.0)
                    && view.same_class(&lhs.1, &rhs.1)
                    && view.same_class(&lhs.2, &rhs.2))
                {
                    rs_braid = CheckOutcome {
                        holds: false,
                        witness: Some(vec![u.clone(), v.clone(), w.clone()]),
                    };
                    break 'braid;
                }
            }
        }
    }

    Ok(MatchedPairReport {
        max_len,
        ml0,
        mr0,
        ml1,
        mr1,
        ml2,
        mr2,
        m3,
        well_defined_left,
        well_defined_right,
        rs_braid,
    })
}

/// First left- or right-cancellation failure among products of length up to
/// the bound. A failure `(a, u, v)` means `u` and `v` are distinct classes
/// whose products with the letter `a` coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationReport {
    pub max_len: usize,
    pub left_failure: Option<(usize, Vec<usize>, Vec<usize>)>,
    pub right_failure: Option<(usize, Vec<usize>, Vec<usize>)>,
}

impl CancellationReport {
    pub fn cancellative_up_to_bound(&self) -> bool {
        self.left_failure.is_none() && self.right_failure.is_none()
    }
}

pub fn cancellativity_bounded(
    qs: &QuadraticSet,
    max_len: usize,
    budget: usize,
) -> Result<CancellationReport, MonoidError> {
    let view = MonoidView::new_budgeted(qs.clone(), max_len, budget)?;
    let n = qs.n();
    let mut left_failure = None;
    'left: for m in 1..max_len {
        let part = view.partition(m);
        for a in 0..n {
            let mut seen: Vec<Option<u32>> = vec![None; view.partition(m + 1).orbit_count()];
            for c in 0..part.orbit_count() as u32 {
                let u = part.rep_word(c);
                let product = concat(&[a], &u);
                let pc = view.class(&product).1 as usize;
                match seen[pc] {
                    None => seen[pc] = Some(c),
                    Some(prev) => {
                        left_failure = Some((a, part.rep_word(prev), u));
                        break 'left;
                    }
                }
            }
        }
    }
    let mut right_failure = None;
    'right: for m in 1..max_len {
        let part = view.partition(m);
        for a in 0..n {
            let mut seen: Vec<Option<u32>> = vec![None; view.partition(m + 1).orbit_count()];
            for c in 0..part.orbit_count() as u32 {
                let u = part.rep_word(c);
                let product = concat(&u, &[a]);
                let pc = view.class(&product).1 as usize;
                match seen[pc] {
                    None => seen[pc] = Some(c),
                    Some(prev) => {
                        right_failure = Some((a, part.rep_word(prev), u));
                        break 'right;
                    }
                }
            }
        }
    }
    Ok(CancellationReport {
        max_len,
        left_failure,
        right_failure,
    })
}

/// Power identities in the monoid for square-free braided sets, with `p` the
/// lcm of the orders of all actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerReport {
    pub p: usize,
    /// `a.x^m = (^a x)^m . a^(x^m)` for `1 <= m <= p`.
    pub pushthrough: CheckOutcome,
    /// `^a (x^m) = (^a x)^m` and `(x^m)^a = (x^a)^m`.
    pub action_powers: CheckOutcome,
    /// `a.x^p = a.((^a x)^a)^p` and `x^p.a = (^a (x^a))^p.a`.
    pub period_swap: CheckOutcome,
    /// `x^p y^p = y^p x^p`.
    pub commuting_powers: CheckOutcome,
    /// First `(a, x, y)` with `x != y` and `a.x^p = a.y^p`, when one exists.
    pub power_collision: Option<(usize, usize, usize)>,
}

pub fn power_identities(qs: &QuadraticSet, budget: usize) -> Result<PowerReport, MonoidError> {
    let rep = check_conditions(qs);
    if !(rep.square_free.holds && rep.nondegenerate.holds && rep.braided.holds) {
        return Err(MonoidError::InvalidInput(
            "power identities need a square-free nondegenerate braided set".into(),
        ));
    }
    let t = qs.actions();
    let p = t.p.expect("nondegenerate") as usize;
    let max_len = (2 * p).max(p + 1);
    let view = MonoidView::new_budgeted(qs.clone(), max_len, budget)?;
    let n = qs.n();
    let pow = |letter: usize, m: usize| vec![letter; m];

    let mut pushthrough = CheckOutcome::ok();
    'eq1: for a in 0..n {
        for x in 0..n {
            for m in 1..=p {
                let lhs = concat(&[a], &pow(x, m));
                let mut a_exp = a;
                for _ in 0..m {
                    a_exp = t.right[x][a_exp];
                }
                let rhs = concat(&pow(t.left[a][x], m), &[a_exp]);
                if !view.same_class(&lhs, &rhs) {
                    pushthrough = CheckOutcome {
                        holds: false,
                        witness: Some(vec![vec![a], pow(x, m)]),
                    };
                    break 'eq1;
                }
            }
        }
    }

    let mut action_powers = CheckOutcome::ok();
    'eq2: for a in 0..n {
        for x in 0..n {
            for m in 1..=p {
                let left_ok = view.same_class(&view.raw_left(&[a], &pow(x, m)), &pow(t.left[a][x], m));
                let right_ok =
                    view.same_class(&view.raw_right(&pow(x, m), &[a]), &pow(t.right[a][x], m));
                if !(left_ok && right_ok) {
                    action_powers = CheckOutcome {
                        holds: false,
                        witness: Some(vec![vec![a], pow(x, m)]),
                    };
                    break 'eq2;
                }
            }
        }
    }

    let mut period_swap = CheckOutcome::ok();
    'eq3: for a in 0..n {
        for x in 0..n {
            let y = t.right[a][t.left[a][x]];
            let lhs = concat(&[a], &pow(x, p));
            let rhs = concat(&[a], &pow(y, p));
            let z = t.left[a][t.right[a][x]];
            let lhs2 = concat(&pow(x, p), &[a]);
            let rhs2 = concat(&pow(z, p), &[a]);
            if !(view.same_class(&lhs, &rhs) && view.same_class(&lhs2, &rhs2)) {
                period_swap = CheckOutcome {
                    holds: false,
                    witness: Some(vec![vec![a], vec![x]]),
                };
                break 'eq3;
            }
        }
    }

    let mut commuting_powers = CheckOutcome::ok();
    'eq4: for x in 0..n {
        for y in 0..n {
            let lhs = concat(&pow(x, p), &pow(y, p));
            let rhs = concat(&pow(y, p), &pow(x, p));
            if !view.same_class(&lhs, &rhs) {
                commuting_powers = CheckOutcome {
                    holds: false,
                    witness: Some(vec![pow(x, p), pow(y, p)]),
                };
                break 'eq4;
            }
        }
    }

    let mut power_collision = None;
    'coll: for a in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                let lhs = concat(&[a], &pow(x, p));
                let rhs = concat(&[a], &pow(y, p));
                if view.same_class(&lhs, &rhs) {
                    power_collision = Some((a, x, y));
                    break 'coll;
                }
            }
        }
    }

    Ok(PowerReport {
        p,
        pushthrough,
        action_powers,
        period_swap,
        commuting_powers,
        power_collision,
    })
}

/// Whether the braiding of the monoid is involutive on classes of words up to
/// the given length.
pub fn braiding_involutive_bounded(view: &MonoidView, len: usize) -> bool {
    let n = view.qs().n();
    let words = words_up_to(n, len);
    for u in &words {
        for v in &words {
            let u1 = view.raw_left(u, v);
            let v1 = view.raw_right(u, v);
            let u2 = view.raw_left(&u1, &v1);
            let v2 = view.raw_right(&u1, &v1);
            if !(view.same_class(&u2, u) && view.same_class(&v2, v)) {
                return false;
            }
        }
    }
    true
}
