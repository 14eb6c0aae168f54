//! Randomized local search for supplementary difference sets with
//! prescribed parameters.
//!
//! The strategy is first-improvement descent with a random move order,
//! a bounded allowance of equal-cost (sideways) moves, and uniform random
//! restarts. Cost is the sum of squared deviations of the per-residue
//! difference totals from the target `lambda`, updated incrementally under
//! exchange moves. Restarts draw from independent RNG substreams, so a run
//! is reproducible from `(seed, restart index)` alone and parallel and
//! sequential execution return bit-identical results.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cosets::CosetSystem;
use crate::diffsets::{verify_sds, SdsFamily};
use crate::modring::{Modulus, ResidueSet};
use crate::par;
use crate::{Error, Result};

/// Sum of squared residuals of the SDS condition: zero exactly when
/// `family` is an SDS with the given `lambda`.
pub fn cost(family: &SdsFamily, lambda: u32) -> u64 {
    verify_sds(&family.with_lambda(lambda)).squared_residual()
}

/// Parameters and budgets for one search. Construction and the builder
/// methods reject infeasible combinations up front, naming the violated
/// identity.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    modulus: Modulus,
    cardinals: Vec<usize>,
    lambda: u32,
    skew_block: Option<usize>,
    cosets: Option<CosetSystem>,
    seed: u64,
    restarts: u32,
    max_steps: u64,
    sideways_limit: u32,
}

impl SearchSpec {
    /// A spec with default budgets: seed 0, 64 restarts, 20000 steps per
    /// restart, up to 30 consecutive sideways moves.
    pub fn new(modulus: Modulus, cardinals: Vec<usize>, lambda: u32) -> Result<Self> {
        let v = modulus.get();
        if let Some(&bad) = cardinals.iter().find(|&&n| n > v) {
            return Err(Error::ResidueOutOfRange {
                residue: bad,
                modulus: v,
            });
        }
        let lhs: u64 = cardinals
            .iter()
            .map(|&n| (n * n.saturating_sub(1)) as u64)
            .sum();
        let rhs = lambda as u64 * (v as u64 - 1);
        if lhs != rhs {
            return Err(Error::InfeasibleParameters { lhs, rhs });
        }
        Ok(SearchSpec {
            modulus,
            cardinals,
            lambda,
            skew_block: None,
            cosets: None,
            seed: 0,
            restarts: 64,
            max_steps: 20_000,
            sideways_limit: 30,
        })
    }

    /// Requires block `index` to stay skew-type throughout the search.
    pub fn with_skew_block(mut self, index: usize) -> Result<Self> {
        if index >= self.cardinals.len() {
            return Err(Error::SkewBlockOutOfRange {
                index,
                blocks: self.cardinals.len(),
            });
        }
        let v = self.modulus.get();
        if 2 * self.cardinals[index] != v - 1 {
            return Err(Error::SkewCardinalMismatch {
                cardinal: self.cardinals[index],
                required_twice: v - 1,
            });
        }
        self.skew_block = Some(index);
        Ok(self)
    }

    /// Restricts every block to a union of cosets of the given system.
    pub fn with_cosets(mut self, system: CosetSystem) -> Result<Self> {
        if system.modulus() != self.modulus {
            return Err(Error::CosetModulusMismatch {
                spec: self.modulus.get(),
                system: system.modulus().get(),
            });
        }
        let h = system.subgroup_order();
        for &n in &self.cardinals {
            if !n.is_multiple_of(h) {
                return Err(Error::CardinalNotCosetMultiple {
                    cardinal: n,
                    subgroup_order: h,
                });
            }
            if n / h > system.coset_count() {
                return Err(Error::ResidueOutOfRange {
                    residue: n,
                    modulus: self.modulus.get(),
                });
            }
        }
        self.cosets = Some(system);
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: u32) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_max_steps(mut self, max_steps: u64) -> Self {
        self.max_steps = max_steps;
        self
    }

    /// How many consecutive equal-cost moves are taken before a restart.
    pub fn with_sideways_limit(mut self, limit: u32) -> Self {
        self.sideways_limit = limit;
        self
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn cardinals(&self) -> &[usize] {
        &self.cardinals
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn skew_block(&self) -> Option<usize> {
        self.skew_block
    }

    pub fn coset_system(&self) -> Option<&CosetSystem> {
        self.cosets.as_ref()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn restarts(&self) -> u32 {
        self.restarts
    }

    pub fn max_steps(&self) -> u64 {
        self.max_steps
    }

    pub fn sideways_limit(&self) -> u32 {
        self.sideways_limit
    }
}

/// The indivisible units a block is assembled from: single residues, or
/// whole cosets when the search is restricted to coset unions.
#[derive(Debug, Clone)]
struct AtomSpace {
    atoms: Vec<Vec<usize>>,
    /// `partner[a]` is the atom holding the negatives of atom `a`.
    partner: Vec<usize>,
    /// `(a, partner(a))` with one entry per `±` pair of nonzero atoms.
    pairs: Vec<(usize, usize)>,
}

impl AtomSpace {
    fn build(spec: &SearchSpec) -> AtomSpace {
        let v = spec.modulus.get();
        match spec.coset_system() {
            Some(system) => {
                let atoms: Vec<Vec<usize>> =
                    system.cosets().iter().map(|c| c.to_vec()).collect();
                let partner: Vec<usize> = (0..atoms.len()).map(|i| i ^ 1).collect();
                let pairs = (0..atoms.len() / 2).map(|i| (2 * i, 2 * i + 1)).collect();
                AtomSpace {
                    atoms,
                    partner,
                    pairs,
                }
            }
            None => {
                let atoms: Vec<Vec<usize>> = (0..v).map(|x| vec![x]).collect();
                let partner: Vec<usize> = (0..v).map(|x| (v - x) % v).collect();
                let pairs = (1..=(v.saturating_sub(1)) / 2).map(|x| (x, v - x)).collect();
                AtomSpace {
                    atoms,
                    partner,
                    pairs,
                }
            }
        }
    }

    fn atom_size(&self) -> usize {
        self.atoms.first().map_or(1, Vec::len)
    }
}

/// A cardinal-preserving exchange: in `block`, swap the selected atom
/// `out_atom` for the unselected `in_atom`. On a skew block the only legal
/// exchanges flip an atom to its `±` partner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeMove {
    pub block: usize,
    pub out_atom: usize,
    pub in_atom: usize,
}

/// One live search configuration with its incrementally maintained cost.
pub struct SearchState<'a> {
    spec: &'a SearchSpec,
    space: AtomSpace,
    /// Per block: which atoms are selected.
    selected: Vec<Vec<bool>>,
    /// Per block: residue characteristic vector of the expanded selection.
    members: Vec<Vec<bool>>,
    /// `totals[r]` = current sum over blocks of difference count at `r`.
    totals: Vec<i64>,
    cost: u64,
    rng: ChaCha8Rng,
    delta: Vec<i64>,
}

impl<'a> SearchState<'a> {
    /// Samples the uniform random start of the given restart. The RNG is
    /// the `restart_index`-th substream of the spec seed.
    pub fn initialize(spec: &'a SearchSpec, restart_index: u32) -> SearchState<'a> {
        let v = spec.modulus.get();
        let space = AtomSpace::build(spec);
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(restart_index as u64);

        let atom_size = space.atom_size();
        let mut selected = Vec::with_capacity(spec.cardinals.len());
        for (k, &cardinal) in spec.cardinals.iter().enumerate() {
            let mut flags = vec![false; space.atoms.len()];
            if spec.skew_block == Some(k) {
                for &(a, b) in &space.pairs {
                    let pick = if rng.gen::<bool>() { a } else { b };
                    flags[pick] = true;
                }
            } else {
                let need = cardinal / atom_size;
                for idx in sample(&mut rng, space.atoms.len(), need) {
                    flags[idx] = true;
                }
            }
            selected.push(flags);
        }

        let members: Vec<Vec<bool>> = selected
            .iter()
            .map(|flags| {
                let mut chars = vec![false; v];
                for (a, &on) in flags.iter().enumerate() {
                    if on {
                        for &x in &space.atoms[a] {
                            chars[x] = true;
                        }
                    }
                }
                chars
            })
            .collect();

        let mut state = SearchState {
            spec,
            space,
            selected,
            members,
            totals: vec![0; v],
            cost: 0,
            rng,
            delta: vec![0; v],
        };
        state.recompute_totals();
        state
    }

    fn recompute_totals(&mut self) {
        let v = self.spec.modulus.get();
        self.totals.iter_mut().for_each(|t| *t = 0);
        for chars in &self.members {
            for r in 1..v {
                let mut c = 0i64;
                for x in 0..v {
                    if chars[x] && chars[(x + r) % v] {
                        c += 1;
                    }
                }
                self.totals[r] += c;
            }
        }
        let lambda = self.spec.lambda as i64;
        self.cost = (1..v)
            .map(|r| {
                let d = self.totals[r] - lambda;
                (d * d) as u64
            })
            .sum();
    }

    pub fn cost(&self) -> u64 {
        self.cost
    }

    /// The configuration as a family carrying the spec's `lambda`.
    pub fn family(&self) -> SdsFamily {
        let blocks: Vec<ResidueSet> = self
            .members
            .iter()
            .map(|chars| {
                ResidueSet::from_members(
                    self.spec.modulus,
                    chars.iter().enumerate().filter_map(|(x, &m)| m.then_some(x)),
                )
                .expect("members in range")
            })
            .collect();
        SdsFamily::new(blocks, self.spec.lambda).expect("blocks share the modulus")
    }

    /// Every legal exchange, in deterministic block/atom order. All moves
    /// preserve block cardinals, the skew constraint, and coset membership.
    pub fn legal_moves(&self) -> Vec<ExchangeMove> {
        let mut moves = Vec::new();
        for (block, flags) in self.selected.iter().enumerate() {
            if self.spec.skew_block == Some(block) {
                for (a, &on) in flags.iter().enumerate() {
                    if on {
                        moves.push(ExchangeMove {
                            block,
                            out_atom: a,
                            in_atom: self.space.partner[a],
                        });
                    }
                }
            } else {
                let outs: Vec<usize> =
                    flags.iter().enumerate().filter_map(|(a, &on)| on.then_some(a)).collect();
                let ins: Vec<usize> =
                    flags.iter().enumerate().filter_map(|(a, &on)| (!on).then_some(a)).collect();
                for &out_atom in &outs {
                    for &in_atom in &ins {
                        moves.push(ExchangeMove {
                            block,
                            out_atom,
                            in_atom,
                        });
                    }
                }
            }
        }
        moves
    }

    /// Cost the configuration would have after `mv`, via the incremental
    /// update. Does not change the configuration.
    pub fn move_cost(&mut self, mv: &ExchangeMove) -> u64 {
        self.eval_delta(mv)
    }

    /// Applies `mv`, committing the incrementally computed tables.
    pub fn apply(&mut self, mv: &ExchangeMove) {
        debug_assert!(self.selected[mv.block][mv.out_atom]);
        debug_assert!(!self.selected[mv.block][mv.in_atom]);
        let new_cost = self.eval_delta(mv);
        let v = self.spec.modulus.get();
        for r in 1..v {
            self.totals[r] += self.delta[r];
        }
        self.cost = new_cost;
        self.selected[mv.block][mv.out_atom] = false;
        self.selected[mv.block][mv.in_atom] = true;
        for &x in &self.space.atoms[mv.out_atom] {
            self.members[mv.block][x] = false;
        }
        for &x in &self.space.atoms[mv.in_atom] {
            self.members[mv.block][x] = true;
        }
    }

    /// Fills `self.delta` with the change of the block's difference table
    /// under `mv` and returns the resulting total cost.
    fn eval_delta(&mut self, mv: &ExchangeMove) -> u64 {
        let v = self.spec.modulus.get();
        self.delta.iter_mut().for_each(|d| *d = 0);
        let outgoing = &self.space.atoms[mv.out_atom];
        let incoming = &self.space.atoms[mv.in_atom];
        let chars = &self.members[mv.block];

        // Ordered pairs lost: both directions between each removed residue
        // and the rest of the block.
        for &x in outgoing {
            for (y, &present) in chars.iter().enumerate() {
                if present && y != x {
                    self.delta[(v + x - y) % v] -= 1;
                    self.delta[(v + y - x) % v] -= 1;
                }
            }
        }
        // Pairs internal to the removed atom were decremented from both
        // sides above; they are lost only once.
        for &x in outgoing {
            for &x2 in outgoing {
                if x2 != x {
                    self.delta[(v + x - x2) % v] += 1;
                }
            }
        }
        // Ordered pairs gained against the block minus the removed atom,
        // then the pairs internal to the incoming atom.
        for &b in incoming {
            for (y, &present) in chars.iter().enumerate() {
                if present && !outgoing.contains(&y) {
                    self.delta[(v + b - y) % v] += 1;
                    self.delta[(v + y - b) % v] += 1;
                }
            }
        }
        for &b in incoming {
            for &b2 in incoming {
                if b2 != b {
                    self.delta[(v + b - b2) % v] += 1;
                }
            }
        }

        let lambda = self.spec.lambda as i64;
        let mut cost = self.cost as i64;
        for r in 1..v {
            let d = self.delta[r];
            if d != 0 {
                let old = self.totals[r] - lambda;
                let new = old + d;
                cost += new * new - old * old;
            }
        }
        debug_assert!(cost >= 0);
        cost as u64
    }

    fn shuffled_moves(&mut self) -> Vec<ExchangeMove> {
        use rand::seq::SliceRandom;
        let mut moves = self.legal_moves();
        moves.shuffle(&mut self.rng);
        moves
    }
}

/// A successful search, with everything needed to replay it.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub family: SdsFamily,
    pub seed: u64,
    /// RNG substream of the successful restart.
    pub restart_index: u32,
    /// Moves applied within that restart.
    pub steps_used: u64,
    pub final_cost: u64,
}

impl SearchResult {
    pub fn restarts_used(&self) -> u32 {
        self.restart_index + 1
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(SearchResult),
    /// All restart budgets expired; `best_cost` is the lowest cost any
    /// restart reached (`None` when no restart ran).
    Exhausted {
        restarts: u32,
        best_cost: Option<u64>,
    },
}

impl SearchOutcome {
    pub fn found(self) -> Option<SearchResult> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

fn run_restart(spec: &SearchSpec, restart_index: u32) -> std::result::Result<SearchResult, u64> {
    let mut state = SearchState::initialize(spec, restart_index);
    let mut steps = 0u64;
    let mut sideways = 0u32;
    let mut best = state.cost();
    loop {
        if state.cost() == 0 {
            return Ok(SearchResult {
                family: state.family(),
                seed: spec.seed,
                restart_index,
                steps_used: steps,
                final_cost: 0,
            });
        }
        if steps >= spec.max_steps {
            return Err(best);
        }
        let moves = state.shuffled_moves();
        let current = state.cost();
        let mut improving: Option<ExchangeMove> = None;
        let mut level: Option<ExchangeMove> = None;
        for mv in &moves {
            let c = state.move_cost(mv);
            if c < current {
                improving = Some(*mv);
                break;
            }
            if c == current && level.is_none() {
                level = Some(*mv);
            }
        }
        match improving {
            Some(mv) => {
                state.apply(&mv);
                sideways = 0;
            }
            None => match level {
                Some(mv) if sideways < spec.sideways_limit => {
                    state.apply(&mv);
                    sideways += 1;
                }
                // Local minimum with the sideways allowance spent.
                _ => return Err(best),
            },
        }
        steps += 1;
        best = best.min(state.cost());
    }
}

/// Runs up to `spec.restarts` independent descents and returns the result
/// of the lowest-indexed successful one. With the `parallel` feature the
/// restarts run on rayon; the winner is the same either way.
pub fn search(spec: &SearchSpec) -> SearchOutcome {
    let best = AtomicU64::new(u64::MAX);
    let hit = par::find_map_first(spec.restarts as usize, |i| match run_restart(spec, i as u32) {
        Ok(result) => Some(result),
        Err(cost) => {
            best.fetch_min(cost, Ordering::Relaxed);
            None
        }
    });
    match hit {
        Some(result) => SearchOutcome::Found(result),
        None => {
            let b = best.load(Ordering::Relaxed);
            SearchOutcome::Exhausted {
                restarts: spec.restarts,
                best_cost: (b != u64::MAX).then_some(b),
            }
        }
    }
}

/// Sequential variant of [`search`] with identical results, for benches and
/// environments without a thread pool.
pub fn search_seq(spec: &SearchSpec) -> SearchOutcome {
    let mut best = u64::MAX;
    for i in 0..spec.restarts {
        match run_restart(spec, i) {
            Ok(result) => return SearchOutcome::Found(result),
            Err(cost) => best = best.min(cost),
        }
    }
    SearchOutcome::Exhausted {
        restarts: spec.restarts,
        best_cost: (best != u64::MAX).then_some(best),
    }
}
