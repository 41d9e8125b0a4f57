//! Decide existence of a linear-quotients ordering: exhaustive backtracking
//! over prefixes with bitmask memoization at desk scale, and a greedy
//! front-end for larger instances. Greedy failure never certifies
//! non-existence; only an exhausted backtracking tree does.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::lq::variables_only;
use crate::monomial::{Monomial, VarPriority};

/// What a search run concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    /// An ordering was found; it passes `verify_ordering` by construction.
    Found(Vec<Monomial>),
    /// The backtracking tree was exhausted without success.
    NoneExists,
    /// The node budget was hit (or greedy got stuck); no conclusion.
    Inconclusive,
}

impl SearchStatus {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchStatus::Found(_))
    }

    pub fn ordering(&self) -> Option<&[Monomial]> {
        match self {
            SearchStatus::Found(ms) => Some(ms),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Maximum number of expanded nodes before giving up with `Inconclusive`.
    pub budget: u64,
    /// Memoize exhausted chosen-sets (admissibility depends only on the set).
    pub memoize: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 10_000_000, memoize: true }
    }
}

enum Dfs {
    Found,
    Exhausted,
    BudgetHit,
}

struct Searcher<'a> {
    gens: &'a [Monomial],
    num_vars: usize,
    options: &'a SearchOptions,
    chosen: Vec<usize>,
    mask: u64,
    failed: HashSet<u64>,
    stats: SearchStats,
}

impl Searcher<'_> {
    /// A generator is admissible after the chosen set iff the colon of the
    /// chosen ideal by it is generated by variables.
    fn admissible(&self, candidate: usize) -> bool {
        let m = &self.gens[candidate];
        let colons: Vec<Monomial> =
            self.chosen.iter().map(|&g| self.gens[g].colon(m)).collect();
        variables_only(&colons, self.num_vars).is_some()
    }

    fn dfs(&mut self) -> Dfs {
        if self.stats.nodes_expanded >= self.options.budget {
            return Dfs::BudgetHit;
        }
        self.stats.nodes_expanded += 1;
        if self.chosen.len() == self.gens.len() {
            return Dfs::Found;
        }
        if self.options.memoize && self.failed.contains(&self.mask) {
            self.stats.memo_hits += 1;
            return Dfs::Exhausted;
        }
        // canonical (input-order) child expansion keeps runs reproducible
        for c in 0..self.gens.len() {
            let bit = 1u64 << c;
            if self.mask & bit != 0 || !self.admissible(c) {
                continue;
            }
            self.chosen.push(c);
            self.mask |= bit;
            match self.dfs() {
                Dfs::Found => return Dfs::Found,
                Dfs::BudgetHit => return Dfs::BudgetHit,
                Dfs::Exhausted => {
                    self.chosen.pop();
                    self.mask &= !bit;
                }
            }
        }
        // only fully explored states may be recorded as dead
        if self.options.memoize {
            self.failed.insert(self.mask);
        }
        Dfs::Exhausted
    }
}

/// Backtracking search for a linear-quotients ordering of the minimal
/// generators of `ideal`. Limited to 64 generators (the memo key is a
/// bitmask); larger inputs must go through [`search_greedy`].
pub fn search_exhaustive(
    ideal: &MonomialIdeal,
    options: &SearchOptions,
) -> Result<SearchOutcome, Error> {
    let gens = ideal.gens();
    if gens.len() > 64 {
        return Err(Error::TooManyGenerators(gens.len()));
    }
    let start = Instant::now();
    let mut searcher = Searcher {
        gens,
        num_vars: ideal.ring().num_vars(),
        options,
        chosen: Vec::with_capacity(gens.len()),
        mask: 0,
        failed: HashSet::new(),
        stats: SearchStats::default(),
    };
    let status = match searcher.dfs() {
        Dfs::Found => {
            SearchStatus::Found(searcher.chosen.iter().map(|&g| gens[g].clone()).collect())
        }
        Dfs::Exhausted => SearchStatus::NoneExists,
        Dfs::BudgetHit => SearchStatus::Inconclusive,
    };
    let mut stats = searcher.stats;
    stats.wall_time = start.elapsed();
    Ok(SearchOutcome { status, stats })
}

/// Greedy search: repeatedly append the lex-first admissible generator under
/// `tie_break`. Getting stuck yields `Inconclusive`, never `NoneExists`.
pub fn search_greedy(
    ideal: &MonomialIdeal,
    tie_break: &VarPriority,
) -> Result<SearchOutcome, Error> {
    let num_vars = ideal.ring().num_vars();
    if tie_break.num_vars() != num_vars {
        return Err(Error::RingMismatch { expected: num_vars, found: tie_break.num_vars() });
    }
    let start = Instant::now();
    let mut order: Vec<usize> = (0..ideal.num_gens()).collect();
    order.sort_by(|&a, &b| tie_break.lex_cmp(&ideal.gens()[a], &ideal.gens()[b]));

    let mut stats = SearchStats::default();
    let mut chosen: Vec<usize> = Vec::with_capacity(ideal.num_gens());
    let mut used = vec![false; ideal.num_gens()];
    while chosen.len() < ideal.num_gens() {
        let next = order.iter().copied().find(|&c| {
            if used[c] {
                return false;
            }
            stats.nodes_expanded += 1;
            let m = &ideal.gens()[c];
            let colons: Vec<Monomial> =
                chosen.iter().map(|&g| ideal.gens()[g].colon(m)).collect();
            variables_only(&colons, num_vars).is_some()
        });
        match next {
            Some(c) => {
                used[c] = true;
                chosen.push(c);
            }
            None => {
                stats.wall_time = start.elapsed();
                return Ok(SearchOutcome { status: SearchStatus::Inconclusive, stats });
            }
        }
    }
    stats.wall_time = start.elapsed();
    let ordering = chosen.iter().map(|&g| ideal.gens()[g].clone()).collect();
    Ok(SearchOutcome { status: SearchStatus::Found(ordering), stats })
}
