//! Brute-force enumeration and isomorphism classification of small quadratic
//! sets.
//!
//! General sets are enumerated cell by cell over the pair table with local
//! pruning (pair injectivity, row/column bijectivity, the one-step
//! cancellation rule, forced fixed points for square-free and involutive
//! searches, and a partial canonicity cut at row boundaries). Self-
//! distributive sets are enumerated over tuples of left-action permutations
//! with incremental self-distributivity pruning, a far smaller space.

use crate::algebra::{self, Binomial};
use crate::orbits;
use crate::perm::{all_permutations, Permutation};
use crate::qset::{check_conditions, PropertyReport, QuadraticSet};
use crate::racks::{self, Decomposability};
use std::collections::HashSet;
use thiserror::Error;

pub const GENERAL_ENUM_MAX_N: usize = 4;
pub const SD_ENUM_MAX_N: usize = 6;
pub const CANONICAL_FORM_MAX_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("{0}")]
    BudgetExceeded(String),
    #[error("filter requires and forbids the same property: {0:?}")]
    InconsistentFilter(PropertyFlag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyFlag {
    Nondegenerate,
    Involutive,
    SquareFree,
    TwoCancellative,
    L1,
    R1,
    Lr3,
    Braided,
    Cl1,
    Cr1,
    Cl2,
    Cr2,
    Lri,
    Sd,
    QuantumBinomial,
}

impl PropertyFlag {
    pub fn all() -> &'static [PropertyFlag] {
        use PropertyFlag::*;
        &[
            Nondegenerate,
            Involutive,
            SquareFree,
            TwoCancellative,
            L1,
            R1,
            Lr3,
            Braided,
            Cl1,
            Cr1,
            Cl2,
            Cr2,
            Lri,
            Sd,
            QuantumBinomial,
        ]
    }

    pub fn name(&self) -> &'static str {
        use PropertyFlag::*;
        match self {
            Nondegenerate => "nondegenerate",
            Involutive => "involutive",
            SquareFree => "square_free",
            TwoCancellative => "two_cancellative",
            L1 => "l1",
            R1 => "r1",
            Lr3 => "lr3",
            Braided => "braided",
            Cl1 => "cl1",
            Cr1 => "cr1",
            Cl2 => "cl2",
            Cr2 => "cr2",
            Lri => "lri",
            Sd => "sd",
            QuantumBinomial => "quantum_binomial",
        }
    }

    pub fn parse(name: &str) -> Option<PropertyFlag> {
        Self::all().iter().copied().find(|f| f.name() == name)
    }

    fn read(&self, rep: &PropertyReport) -> bool {
        use PropertyFlag::*;
        match self {
            Nondegenerate => rep.nondegenerate.holds,
            Involutive => rep.involutive.holds,
            SquareFree => rep.square_free.holds,
            TwoCancellative => rep.two_cancellative.holds,
            L1 => rep.l1.holds,
            R1 => rep.r1.holds,
            Lr3 => rep.lr3.holds,
            Braided => rep.braided.holds,
            Cl1 => rep.cl1.holds,
            Cr1 => rep.cr1.holds,
            Cl2 => rep.cl2.holds,
            Cr2 => rep.cr2.holds,
            Lri => rep.lri.holds,
            Sd => rep.sd.holds,
            QuantumBinomial => rep.quantum_binomial.holds,
        }
    }
}

/// Required and forbidden properties, plus the optional minimality filter on
/// the degree-2 dimension.
#[derive(Debug, Clone, Default)]
pub struct SearchFilter {
    pub require: Vec<PropertyFlag>,
    pub forbid: Vec<PropertyFlag>,
    /// `Some(true)` keeps only sets with `dim A_2 = 2n - 1`.
    pub minimality: Option<bool>,
}

impl SearchFilter {
    pub fn requiring(flags: &[PropertyFlag]) -> Self {
        SearchFilter {
            require: flags.to_vec(),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        for f in &self.require {
            if self.forbid.contains(f) {
                return Err(SearchError::InconsistentFilter(*f));
            }
        }
        Ok(())
    }

    fn requires(&self, flag: PropertyFlag) -> bool {
        self.require.contains(&flag)
    }

    fn admits(&self, qs: &QuadraticSet) -> bool {
        let rep = check_conditions(qs);
        if !self.require.iter().all(|f| f.read(&rep)) {
            return false;
        }
        if self.forbid.iter().any(|f| f.read(&rep)) {
            return false;
        }
        if let Some(want) = self.minimality {
            let dim2 = orbits::r_orbits(qs).orbit_count();
            if (dim2 == 2 * qs.n() - 1) != want {
                return false;
            }
        }
        true
    }
}

/// Lexicographically minimal pair table over all relabelings; equal forms
/// characterize isomorphic sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub rmap: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_qset(&self) -> QuadraticSet {
        QuadraticSet::from_table(self.n, self.rmap.clone()).expect("canonical table is valid")
    }
}

pub fn canonical_form(qs: &QuadraticSet) -> Result<CanonicalForm, SearchError> {
    let n = qs.n();
    if n > CANONICAL_FORM_MAX_N {
        return Err(SearchError::BudgetExceeded(format!(
            "canonical form over {n}! relabelings"
        )));
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    for phi in all_permutations(n) {
        let table = qs.relabel(&phi).rmap().to_vec();
        if best.as_ref().map(|b| table < *b).unwrap_or(true) {
            best = Some(table);
        }
    }
    Ok(CanonicalForm {
        n,
        rmap: best.unwrap(),
    })
}

pub fn isomorphic(a: &QuadraticSet, b: &QuadraticSet) -> Result<bool, SearchError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Canonical form of the degree-2 orbit partition: the relabeling-minimal
/// sorted list of orbits, each orbit a sorted list of its words. Two sets
/// share this form exactly when their defining relation sets agree after
/// relabeling, i.e. when they present the same quadratic algebra.
pub fn presentation_form(qs: &QuadraticSet) -> Result<Vec<Vec<(usize, usize)>>, SearchError> {
    let n = qs.n();
    if n > CANONICAL_FORM_MAX_N {
        return Err(SearchError::BudgetExceeded(format!(
            "presentation form over {n}! relabelings"
        )));
    }
    let mut best: Option<Vec<Vec<(usize, usize)>>> = None;
    for phi in all_permutations(n) {
        let relabeled = qs.relabel(&phi);
        let part = orbits::r_orbits(&relabeled);
        let mut orbs: Vec<Vec<(usize, usize)>> = (0..part.orbit_count() as u32)
            .map(|c| {
                part.orbit_words(c)
                    .into_iter()
                    .map(|w| (w[0], w[1]))
                    .collect()
            })
            .collect();
        orbs.sort();
        if best.as_ref().map(|b| orbs < *b).unwrap_or(true) {
            best = Some(orbs);
        }
    }
    Ok(best.unwrap())
}

/// Enumerates the filtered quadratic sets of order `n` up to isomorphism, one
/// canonical representative per class, in canonical-table order.
pub fn enumerate(n: usize, filter: &SearchFilter) -> Result<Vec<QuadraticSet>, SearchError> {
    filter.validate()?;
    if filter.requires(PropertyFlag::Sd) {
        if n > SD_ENUM_MAX_N {
            return Err(SearchError::BudgetExceeded(format!(
                "self-distributive enumeration at order {n}"
            )));
        }
        return Ok(enumerate_sd(n, filter));
    }
    if n > GENERAL_ENUM_MAX_N {
        return Err(SearchError::BudgetExceeded(format!(
            "general enumeration at order {n}"
        )));
    }
    Ok(enumerate_general(n, filter))
}

fn emit(found: &mut HashSet<CanonicalForm>, out: &mut Vec<QuadraticSet>, qs: &QuadraticSet) {
    let form = canonical_form(qs).expect("enumeration orders are small");
    if found.insert(form.clone()) {
        out.push(form.to_qset());
    }
}

fn enumerate_general(n: usize, filter: &SearchFilter) -> Vec<QuadraticSet> {
    let nn = n * n;
    let square_free = filter.requires(PropertyFlag::SquareFree)
        || filter.requires(PropertyFlag::QuantumBinomial);
    let involutive = filter.requires(PropertyFlag::Involutive)
        || filter.requires(PropertyFlag::QuantumBinomial);
    let two_cancellative = filter.requires(PropertyFlag::TwoCancellative);
    let relabelings: Vec<(Vec<usize>, Vec<usize>)> = all_permutations(n)
        .into_iter()
        .filter(|p| !p.is_identity())
        .map(|p| (p.images().to_vec(), p.inverse().images().to_vec()))
        .collect();

    struct Dfs<'a> {
        n: usize,
        nn: usize,
        table: Vec<(usize, usize)>,
        assigned: usize,
        used_pairs: Vec<bool>,
        row_used: Vec<Vec<bool>>,
        col_used: Vec<Vec<bool>>,
        square_free: bool,
        involutive: bool,
        two_cancellative: bool,
        filter: &'a SearchFilter,
        relabelings: &'a [(Vec<usize>, Vec<usize>)],
        found: HashSet<CanonicalForm>,
        out: Vec<QuadraticSet>,
    }

    impl Dfs<'_> {
        fn candidate_ok(&self, cell: usize, u: usize, v: usize) -> bool {
            let (x, y) = (cell / self.n, cell % self.n);
            if self.used_pairs[u * self.n + v] || self.row_used[x][u] || self.col_used[y][v] {
                return false;
            }
            if self.square_free && x == y && (u, v) != (x, y) {
                return false;
            }
            // one-step cancellation: an image sharing exactly one coordinate
            // with its source can never be 2-cancellative
            if self.two_cancellative && ((u == x) != (v == y)) {
                return false;
            }
            if self.involutive {
                let img_cell = u * self.n + v;
                if img_cell < cell && self.table[img_cell] != (x, y) {
                    return false;
                }
                if img_cell == cell && (u, v) != (x, y) {
                    return false;
                }
            }
            true
        }

        /// Cut branches that a relabeling makes lexicographically smaller.
        fn partial_canonical(&self) -> bool {
            'phi: for (phi, phi_inv) in self.relabelings {
                for cell in 0..self.assigned {
                    let (a, b) = (cell / self.n, cell % self.n);
                    let pre_cell = phi_inv[a] * self.n + phi_inv[b];
                    if pre_cell >= self.assigned {
                        continue 'phi; // relabeled prefix not determined
                    }
                    let (u, v) = self.table[pre_cell];
                    let mapped = (phi[u], phi[v]);
                    match mapped.cmp(&self.table[cell]) {
                        std::cmp::Ordering::Less => return false,
                        std::cmp::Ordering::Greater => continue 'phi,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            true
        }

        fn run(&mut self, cell: usize) {
            if cell == self.nn {
                let qs = QuadraticSet::from_table(self.n, self.table.clone())
                    .expect("local constraints keep the table bijective");
                if self.filter.admits(&qs) {
                    emit(&mut self.found, &mut self.out, &qs);
                }
                return;
            }
            let (x, y) = (cell / self.n, cell % self.n);
            for u in 0..self.n {
                for v in 0..self.n {
                    if !self.candidate_ok(cell, u, v) {
                        continue;
                    }
                    self.table[cell] = (u, v);
                    self.used_pairs[u * self.n + v] = true;
                    self.row_used[x][u] = true;
                    self.col_used[y][v] = true;
                    self.assigned = cell + 1;
                    let keep = y + 1 != self.n || self.partial_canonical();
                    if keep {
                        self.run(cell + 1);
                    }
                    self.assigned = cell;
                    self.used_pairs[u * self.n + v] = false;
                    self.row_used[x][u] = false;
                    self.col_used[y][v] = false;
                }
            }
        }
    }

    let mut dfs = Dfs {
        n,
        nn,
        table: vec![(0, 0); nn],
        assigned: 0,
        used_pairs: vec![false; nn],
        row_used: vec![vec![false; n]; n],
        col_used: vec![vec![false; n]; n],
        square_free,
        involutive,
        two_cancellative,
        filter,
        relabelings: &relabelings,
        found: HashSet::new(),
        out: Vec::new(),
    };
    dfs.run(0);
    let mut out = dfs.out;
    out.sort_by(|a, b| a.rmap().cmp(b.rmap()));
    out
}

fn enumerate_sd(n: usize, filter: &SearchFilter) -> Vec<QuadraticSet> {
    let perms = all_permutations(n);
    // 2-cancellative SD sets are square-free, so the diagonal is fixed
    let fix_diagonal = filter.requires(PropertyFlag::SquareFree)
        || filter.requires(PropertyFlag::TwoCancellative)
        || filter.requires(PropertyFlag::QuantumBinomial);
    let want_braided = filter.requires(PropertyFlag::Braided)
        || (filter.requires(PropertyFlag::L1)
            && filter.requires(PropertyFlag::R1)
            && filter.requires(PropertyFlag::Lr3));

    struct Dfs<'a> {
        n: usize,
        perms: &'a [Permutation],
        candidates: Vec<Vec<usize>>,
        chosen: Vec<usize>,
        fix_diagonal: bool,
        want_braided: bool,
        want_two_cancellative: bool,
        filter: &'a SearchFilter,
        found: HashSet<CanonicalForm>,
        out: Vec<QuadraticSet>,
    }

    impl Dfs<'_> {
        /// Allocation-free leaf screens on the raw action rows; the admitted
        /// survivors still go through the full property filter.
        fn cheap_leaf_ok(&self) -> bool {
            let n = self.n;
            let left = |x: usize, y: usize| self.perms[self.chosen[x]].apply(y);
            if self.want_two_cancellative {
                for x in 0..n {
                    for y in 0..n {
                        let (mut u, mut v) = (left(x, y), x);
                        while (u, v) != (x, y) {
                            if (u == x) != (v == y) {
                                return false;
                            }
                            let next = (left(u, v), u);
                            u = next.0;
                            v = next.1;
                        }
                    }
                }
            }
            if let Some(want) = self.filter.minimality {
                let mut visited = 0u64;
                let mut orbits = 0usize;
                for start in 0..n * n {
                    if visited >> start & 1 == 1 {
                        continue;
                    }
                    orbits += 1;
                    let (mut x, mut y) = (start / n, start % n);
                    let mut len = 0usize;
                    loop {
                        visited |= 1 << (x * n + y);
                        len += 1;
                        let next = (left(x, y), x);
                        x = next.0;
                        y = next.1;
                        if x * n + y == start {
                            break;
                        }
                    }
                    // with 2-cancellation in force, minimality pins every
                    // nontrivial orbit length to n
                    if want && self.want_two_cancellative && len != 1 && len != n {
                        return false;
                    }
                }
                if (orbits == 2 * n - 1) != want {
                    return false;
                }
            }
            true
        }
        fn laut_consistent(&self, k: usize) -> bool {
            // check every self-distributivity instance whose three actors are
            // all chosen, with the newest action involved
            let left = |x: usize, y: usize| self.perms[self.chosen[x]].apply(y);
            for x in 0..=k {
                for y in 0..=k {
                    let xy = left(x, y);
                    if xy > k {
                        continue;
                    }
                    if x != k && y != k && xy != k {
                        continue;
                    }
                    for z in 0..self.n {
                        if left(x, left(y, z)) != left(xy, left(x, z)) {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, x: usize) {
            if x == self.n {
                if !self.cheap_leaf_ok() {
                    return;
                }
                let qs = QuadraticSet::from_fn(self.n, |a, b| {
                    (self.perms[self.chosen[a]].apply(b), a)
                })
                .unwrap();
                if self.filter.admits(&qs) {
                    emit(&mut self.found, &mut self.out, &qs);
                }
                return;
            }
            let options = self.candidates[x].clone();
            for pi in options {
                if self.fix_diagonal && self.perms[pi].apply(x) != x {
                    continue;
                }
                self.chosen.push(pi);
                if !self.want_braided || self.laut_consistent(x) {
                    self.run(x + 1);
                }
                self.chosen.pop();
            }
        }
    }

    let candidates: Vec<Vec<usize>> = (0..n).map(|_| (0..perms.len()).collect()).collect();
    let mut dfs = Dfs {
        n,
        perms: &perms,
        candidates,
        chosen: Vec::with_capacity(n),
        fix_diagonal,
        want_braided,
        want_two_cancellative: filter.requires(PropertyFlag::TwoCancellative),
        filter,
        found: HashSet::new(),
        out: Vec::new(),
    };
    dfs.run(0);
    let mut out = dfs.out;
    out.sort_by(|a, b| a.rmap().cmp(b.rmap()));
    out
}

/// Shape of the reduced relations forced by the minimal degree-2 dimension:
/// each nontrivial orbit of full length `n`, minima `x_0 x_i`, and within
/// each orbit the non-minimal words use every other first letter once and
/// every second letter except `x_i` once.
pub fn minimal_relation_shape(n: usize, relations: &[Binomial]) -> bool {
    use std::collections::BTreeMap;
    if relations.len() != (n - 1) * (n - 1) {
        return false;
    }
    let mut by_tail: BTreeMap<Vec<u8>, Vec<&Binomial>> = BTreeMap::new();
    for b in relations {
        by_tail.entry(b.tail.clone()).or_default().push(b);
    }
    if by_tail.len() != n - 1 {
        return false;
    }
    let mut seconds_seen: Vec<u8> = Vec::new();
    for (tail, rels) in &by_tail {
        if tail[0] != 0 || rels.len() != n - 1 {
            return false;
        }
        seconds_seen.push(tail[1]);
        let mut firsts: Vec<u8> = rels.iter().map(|b| b.lead[0]).collect();
        firsts.sort_unstable();
        if firsts != (1..n as u8).collect::<Vec<_>>() {
            return false;
        }
        // second letters of the leads exhaust everything except the tail's
        let mut seconds: Vec<u8> = rels.iter().map(|b| b.lead[1]).collect();
        seconds.sort_unstable();
        let expect: Vec<u8> = (0..n as u8).filter(|&c| c != tail[1]).collect();
        if seconds != expect {
            return false;
        }
    }
    seconds_seen.sort_unstable();
    seconds_seen == (1..n as u8).collect::<Vec<_>>()
}

/// One surveyed isomorphism class meeting the minimal degree-2 dimension,
/// with the cross-checks that the minimality theory predicts for it.
#[derive(Debug, Clone)]
pub struct SurveyEntry {
    pub qs: QuadraticSet,
    pub dim_a2: usize,
    pub braided: bool,
    pub orbit_lengths_all_n: bool,
    pub relation_shape_ok: bool,
    pub dual3_zero: bool,
    pub growth_at_most_2: bool,
    pub indecomposable: Option<bool>,
}

/// Surveys square-free nondegenerate 2-cancellative sets (self-distributive
/// ones only, when asked) of order `n` with `dim A_2 = 2n - 1`.
pub fn minimality_survey(n: usize, sd_only: bool) -> Result<Vec<SurveyEntry>, SearchError> {
    let mut filter = SearchFilter::requiring(&[
        PropertyFlag::SquareFree,
        PropertyFlag::Nondegenerate,
        PropertyFlag::TwoCancellative,
    ]);
    if sd_only {
        filter.require.push(PropertyFlag::Sd);
    }
    filter.minimality = Some(true);
    let classes = enumerate(n, &filter)?;
    let mut out = Vec::new();
    for qs in classes {
        let part = orbits::r_orbits(&qs);
        let dim_a2 = part.orbit_count();
        let orbit_lengths_all_n = part.lengths.iter().all(|&l| l == 1 || l == n);
        let pres = algebra::reduced_relations(&qs, &Permutation::identity(n));
        let relation_shape_ok = minimal_relation_shape_up_to_relabeling(&qs);
        let dual3_zero = algebra::linear_dims(&pres, 3)
            .map(|d| d.dim_a_dual == 0)
            .unwrap_or(false);
        let dims = orbits::graded_dims(&qs, 6).map_err(|e| SearchError::BudgetExceeded(e.to_string()))?;
        let growth = algebra::growth_estimate(&dims);
        let growth_at_most_2 = growth.gk_estimate.map(|g| g <= 2).unwrap_or(false);
        let braided = check_conditions(&qs).braided.holds;
        let indecomposable = racks::is_indecomposable(&qs)
            .ok()
            .map(|d| d == Decomposability::Indecomposable);
        out.push(SurveyEntry {
            qs,
            dim_a2,
            braided,
            orbit_lengths_all_n,
            relation_shape_ok,
            dual3_zero,
            growth_at_most_2,
            indecomposable,
        });
    }
    Ok(out)
}

/// The relation-shape test is label-sensitive (it singles out the smallest
/// generator); accept when some relabeling exhibits the shape.
fn minimal_relation_shape_up_to_relabeling(qs: &QuadraticSet) -> bool {
    let n = qs.n();
    all_permutations(n).iter().any(|phi| {
        let pres = algebra::reduced_relations(&qs.relabel(phi), &Permutation::identity(n));
        minimal_relation_shape(n, &pres.relations)
    })
}
