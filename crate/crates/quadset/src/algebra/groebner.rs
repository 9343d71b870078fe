//! Degree-bounded noncommutative Buchberger completion over the rationals.
//!
//! Elements are polynomials in the free algebra, words ordered
//! degree-lexicographically by a generator ranking. Compositions (overlaps of
//! leading words) are resolved in increasing overlap degree; every overlap of
//! degree at most the bound is processed, so normal-word counts are exact up
//! to the bound even when higher compositions remain open.

use num::rational::BigRational;
use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

pub type Word = Vec<u8>;

/// Degree-lexicographic word order induced by a generator ranking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegLex {
    rank: Vec<u8>,
}

impl DegLex {
    pub fn identity(n: usize) -> Self {
        DegLex {
            rank: (0..n as u8).collect(),
        }
    }

    /// `enumeration[i]` is the generator in position `i`, smallest first.
    pub fn from_enumeration(enumeration: &[usize]) -> Self {
        let mut rank = vec![0u8; enumeration.len()];
        for (pos, &g) in enumeration.iter().enumerate() {
            rank[g] = pos as u8;
        }
        DegLex { rank }
    }

    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (&x, &y) in a.iter().zip(b.iter()) {
                match self.rank[x as usize].cmp(&self.rank[y as usize]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }
}

/// A polynomial with terms sorted strictly descending; the leading
/// coefficient is kept at one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<(Word, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Word {
        &self.terms[0].0
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map(|(w, _)| w.len()).unwrap_or(0)
    }

    pub fn from_terms(order: &DegLex, terms: Vec<(Word, BigRational)>) -> Self {
        let mut map: Vec<(Word, BigRational)> = Vec::new();
        for (w, c) in terms {
            if let Some(slot) = map.iter_mut().find(|(u, _)| *u == w) {
                slot.1 += c;
            } else {
                map.push((w, c));
            }
        }
        map.retain(|(_, c)| !c.is_zero());
        map.sort_by(|(a, _), (b, _)| order.cmp_words(b, a));
        let mut p = Poly { terms: map };
        p.make_monic();
        p
    }

    fn make_monic(&mut self) {
        if let Some((_, c0)) = self.terms.first() {
            if !c0.is_one() {
                let c0 = c0.clone();
                for (_, c) in &mut self.terms {
                    *c /= &c0;
                }
            }
        }
    }

    /// Two-sided monomial multiple `a * self * b`.
    pub(crate) fn framed(&self, a: &[u8], b: &[u8]) -> Vec<(Word, BigRational)> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let mut word = Vec::with_capacity(a.len() + w.len() + b.len());
                word.extend_from_slice(a);
                word.extend_from_slice(w);
                word.extend_from_slice(b);
                (word, c.clone())
            })
            .collect()
    }
}

fn find_factor(word: &[u8], lead: &[u8]) -> Option<usize> {
    if lead.len() > word.len() {
        return None;
    }
    (0..=word.len() - lead.len()).find(|&i| &word[i..i + lead.len()] == lead)
}

/// Full normal form of `f` with respect to `basis`: every term is rewritten
/// until no leading word of the basis occurs as a factor anywhere.
pub fn normal_form(order: &DegLex, f: &Poly, basis: &[Poly]) -> Poly {
    let mut terms = f.terms.clone();
    loop {
        let mut hit = None;
        'scan: for (ti, (w, _)) in terms.iter().enumerate() {
            for (bi, g) in basis.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                if let Some(pos) = find_factor(w, g.lead()) {
                    hit = Some((ti, bi, pos));
                    break 'scan;
                }
            }
        }
        let Some((ti, bi, pos)) = hit else {
            break;
        };
        let (w, c) = terms[ti].clone();
        let g = &basis[bi];
        let prefix = w[..pos].to_vec();
        let suffix = w[pos + g.lead().len()..].to_vec();
        let mut acc = terms;
        for (gw, gc) in g.framed(&prefix, &suffix) {
            let coeff = -&c * gc;
            if let Some(slot) = acc.iter_mut().find(|(u, _)| *u == gw) {
                slot.1 += coeff;
            } else {
                acc.push((gw, coeff));
            }
        }
        acc.retain(|(_, coeff)| !coeff.is_zero());
        acc.sort_by(|(a, _), (b, _)| order.cmp_words(b, a));
        terms = acc;
    }
    let mut p = Poly { terms };
    p.make_monic();
    p
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: DegLex,
    pub elements: Vec<Poly>,
    pub max_degree: usize,
    /// Largest degree at which every composition has been resolved; equals
    /// `max_degree` by construction.
    pub complete_to_degree: usize,
    /// No compositions remain above the bound: the basis is a full reduced
    /// Groebner basis.
    pub fully_complete: bool,
}

impl GroebnerBasis {
    pub fn leads(&self) -> Vec<&Word> {
        self.elements.iter().map(|p| p.lead()).collect()
    }

    /// Elements of degree three or more, beyond the quadratic part.
    pub fn extras(&self) -> Vec<&Poly> {
        self.elements.iter().filter(|p| p.degree() >= 3).collect()
    }

    /// Number of words of length `m` avoiding every leading word as a factor.
    /// Exact as a dimension count for `m <= complete_to_degree`, and at every
    /// degree when the basis is fully complete.
    pub fn normal_word_count(&self, n: usize, m: usize) -> usize {
        self.normal_words(n, m).len()
    }

    pub fn normal_words(&self, n: usize, m: usize) -> Vec<Word> {
        let leads: Vec<&Word> = self.leads();
        let mut out = Vec::new();
        let mut w: Word = vec![0; m];
        'outer: loop {
            let normal = leads.iter().all(|l| find_factor(&w, l).is_none());
            if normal {
                out.push(w.clone());
            }
            for i in (0..m).rev() {
                if (w[i] as usize) < n - 1 {
                    w[i] += 1;
                    for slot in w.iter_mut().skip(i + 1) {
                        *slot = 0;
                    }
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

/// Proper overlaps of two leading words: positions where a suffix of `u`
/// equals a prefix of `v`, excluding full containment.
fn overlaps(u: &[u8], v: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            out.push(k);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    overlap_len: usize,
    overlap: Word,
    left_lead: Word,
    right_lead: Word,
    shared: usize,
}

/// Buchberger completion bounded by composition degree.
pub fn buchberger(order: &DegLex, generators: Vec<Poly>, max_degree: usize) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    let mut queue: BTreeSet<PairKey> = BTreeSet::new();

    fn enqueue_pairs(
        order: &DegLex,
        queue: &mut BTreeSet<PairKey>,
        basis: &[Poly],
        g: &Poly,
        max_degree: usize,
    ) {
        let _ = order;
        for h in basis.iter().chain(std::iter::once(g)) {
            if h.is_zero() {
                continue;
            }
            for (a, b) in [(g, h), (h, g)] {
                for k in overlaps(a.lead(), b.lead()) {
                    let mut w = a.lead().clone();
                    w.extend_from_slice(&b.lead()[k..]);
                    if w.len() > max_degree {
                        continue;
                    }
                    queue.insert(PairKey {
                        overlap_len: w.len(),
                        overlap: w,
                        left_lead: a.lead().clone(),
                        right_lead: b.lead().clone(),
                        shared: k,
                    });
                }
            }
        }
    }

    // seed: fully reduce each generator against the growing basis
    let mut seeds = generators;
    seeds.sort_by(|a, b| {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => order.cmp_words(a.lead(), b.lead()),
        }
    });
    let mut pending: Vec<Poly> = seeds;

    while !pending.is_empty() || !queue.is_empty() {
        // absorb pending elements first
        if let Some(candidate) = pending.pop() {
            let reduced = normal_form(order, &candidate, &basis);
            if reduced.is_zero() {
                continue;
            }
            // displace basis elements whose lead the new lead divides
            let mut displaced = Vec::new();
            basis.retain(|g| {
                if find_factor(g.lead(), reduced.lead()).is_some() {
                    displaced.push(g.clone());
                    false
                } else {
                    true
                }
            });
            enqueue_pairs(order, &mut queue, &basis, &reduced, max_degree);
            basis.push(reduced);
            pending.extend(displaced);
            continue;
        }
        let key = queue.pop_first().unwrap();
        let left = basis.iter().find(|g| *g.lead() == key.left_lead);
        let right = basis.iter().find(|g| *g.lead() == key.right_lead);
        let (Some(g), Some(h)) = (left, right) else {
            continue; // composition no longer among current leading words
        };
        // overlap word = lead(g) + lead(h)[shared..] = lead(g)[..len-k] + lead(h)
        let suffix = h.lead()[key.shared..].to_vec();
        let prefix = g.lead()[..g.lead().len() - key.shared].to_vec();
        let mut terms = g.framed(&[], &suffix);
        for (w, c) in h.framed(&prefix, &[]) {
            if let Some(slot) = terms.iter_mut().find(|(u, _)| *u == w) {
                slot.1 -= c;
            } else {
                terms.push((w, -c));
            }
        }
        let spoly = Poly::from_terms(order, terms);
        if spoly.is_zero() {
            continue;
        }
        let reduced = normal_form(order, &spoly, &basis);
        if !reduced.is_zero() {
            pending.push(reduced);
        }
    }

    // tail-reduce for the reduced basis, deterministically ordered
    let snapshot = basis.clone();
    for p in &mut basis {
        *p = normal_form(
            order,
            p,
            &snapshot
                .iter()
                .filter(|g| g.lead() != p.lead())
                .cloned()
                .collect::<Vec<_>>(),
        );
    }
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| order.cmp_words(a.lead(), b.lead()));

    // any composition left beyond the bound?
    let mut open_above = false;
    'scan: for g in &basis {
        for h in &basis {
            for k in overlaps(g.lead(), h.lead()) {
                if g.lead().len() + h.lead().len() - k > max_degree {
                    open_above = true;
                    break 'scan;
                }
            }
        }
    }

    GroebnerBasis {
        order: order.clone(),
        elements: basis,
        max_degree,
        complete_to_degree: max_degree,
        fully_complete: !open_above,
    }
}
