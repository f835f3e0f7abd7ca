//! Deterministic backtracking search for disjoint unit packings.
//!
//! The search works on the lattice points of one region. At every node it
//! takes the lexicographically smallest undecided point, tries each available
//! candidate unit covering it (in candidate order) and finally, if the
//! uncovered allowance permits, leaves the point uncovered. A unit is
//! available when none of its points is decided and it meets no chosen unit.

mod candidates;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::certificates::unit::{Unit, UnitKind};
use crate::degeneration::Subdivision;
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

pub use candidates::enumerate_candidate_units;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct PackingProblem<'a> {
    pub region: &'a Subdivision,
    pub kinds: BTreeSet<UnitKind>,
    pub target: u32,
    /// `None` allows any number of uncovered points.
    pub max_uncovered: Option<usize>,
    /// Upper bound on the number of limit tetrahedra.
    pub max_limit: Option<u32>,
    /// Upper bounds per unit kind.
    pub max_per_kind: BTreeMap<UnitKind, u32>,
}

impl<'a> PackingProblem<'a> {
    pub fn new(region: &'a Subdivision, kinds: impl IntoIterator<Item = UnitKind>, target: u32) -> Self {
        PackingProblem { region, kinds: kinds.into_iter().collect(), target, max_uncovered: None, max_limit: None, max_per_kind: BTreeMap::new() }
    }

    pub fn max_uncovered(mut self, n: usize) -> Self {
        self.max_uncovered = Some(n);
        self
    }

    pub fn max_limit(mut self, n: u32) -> Self {
        self.max_limit = Some(n);
        self
    }

    pub fn max_of_kind(mut self, kind: UnitKind, n: u32) -> Self {
        self.max_per_kind.insert(kind, n);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingSolution {
    pub units: Vec<Unit>,
    pub uncovered: Vec<LatticePoint>,
    pub nodes_explored: u64,
}

impl PackingSolution {
    pub fn contribution(&self) -> u32 {
        self.units.iter().map(|u| u.contribution()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(PackingSolution),
    Unsat { nodes_explored: u64 },
    BudgetExhausted { nodes_explored: u64 },
}

impl SolveOutcome {
    pub fn solution(self) -> Option<PackingSolution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Cut branches whose remaining points cannot reach the goal.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, prune: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxContribution {
    pub value: u32,
    /// False when the budget ran out first; `value` is then a lower bound.
    pub exact: bool,
    pub units: Vec<Unit>,
    pub nodes_explored: u64,
}

struct Engine {
    points: Vec<LatticePoint>,
    units: Vec<Unit>,
    opt_points: Vec<Vec<u32>>,
    per_point: Vec<Vec<u32>>,
    conflicts: Vec<Vec<u32>>,
    decided: Vec<bool>,
    banned: Vec<u32>,
    chosen: Vec<u32>,
    uncovered: Vec<u32>,
    weight: u32,
    limits: u32,
    per_kind: [u32; 5],
    caps: [u32; 5],
    free: usize,
    nodes: u64,
    budget: u64,
    prune: bool,
}

enum Flow {
    Continue,
    Stop,
}

impl Engine {
    fn new(region: &Subdivision, kinds: &BTreeSet<UnitKind>, opts: SearchOptions) -> Self {
        let points = region.lattice_points();
        let index: HashMap<LatticePoint, u32> = points.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
        let units: Vec<Unit> = enumerate_candidate_units(region, kinds)
            .into_iter()
            .filter(|u| u.vertices.iter().all(|p| index.contains_key(p)))
            .collect();
        let conflicts = candidates::hull_conflicts(region, &units);
        let opt_points: Vec<Vec<u32>> = units.iter().map(|u| u.vertices.iter().map(|p| index[p]).collect()).collect();
        let mut per_point = vec![Vec::new(); points.len()];
        for (o, pts) in opt_points.iter().enumerate() {
            for &p in pts {
                per_point[p as usize].push(o as u32);
            }
        }
        let n = points.len();
        Engine {
            points,
            banned: vec![0; units.len()],
            units,
            opt_points,
            per_point,
            conflicts,
            decided: vec![false; n],
            chosen: Vec::new(),
            uncovered: Vec::new(),
            weight: 0,
            limits: 0,
            per_kind: [0; 5],
            caps: [u32::MAX; 5],
            free: n,
            nodes: 0,
            budget: opts.budget,
            prune: opts.prune,
        }
    }

    fn available(&self, o: u32, max_limit: Option<u32>) -> bool {
        let o = o as usize;
        self.banned[o] == 0
            && self.opt_points[o].iter().all(|&p| !self.decided[p as usize])
            && (!self.units[o].kind.is_limit() || max_limit.map_or(true, |m| self.limits < m))
            && self.per_kind[self.units[o].kind.search_rank() as usize] < self.caps[self.units[o].kind.search_rank() as usize]
    }

    fn choose(&mut self, o: u32) {
        let u = o as usize;
        for &p in &self.opt_points[u] {
            self.decided[p as usize] = true;
        }
        for &c in &self.conflicts[u] {
            self.banned[c as usize] += 1;
        }
        self.free -= self.opt_points[u].len();
        self.weight += self.units[u].contribution();
        self.limits += self.units[u].kind.is_limit() as u32;
        self.per_kind[self.units[u].kind.search_rank() as usize] += 1;
        self.chosen.push(o);
    }

    fn unchoose(&mut self) {
        let u = self.chosen.pop().expect("a chosen unit") as usize;
        for &p in &self.opt_points[u] {
            self.decided[p as usize] = false;
        }
        for &c in &self.conflicts[u] {
            self.banned[c as usize] -= 1;
        }
        self.free += self.opt_points[u].len();
        self.weight -= self.units[u].contribution();
        self.limits -= self.units[u].kind.is_limit() as u32;
        self.per_kind[self.units[u].kind.search_rank() as usize] -= 1;
    }

    fn next_point(&self, mut cursor: usize) -> Option<usize> {
        while cursor < self.points.len() && self.decided[cursor] {
            cursor += 1;
        }
        (cursor < self.points.len()).then_some(cursor)
    }

    /// Exact-target search. Returns `Stop` once a solution is recorded in
    /// `chosen`/`uncovered` or the budget is gone.
    fn find(&mut self, cursor: usize, target: u32, max_unc: usize, max_limit: Option<u32>) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Stop;
        }
        if self.weight == target {
            if self.uncovered.len() + self.free <= max_unc {
                return Flow::Stop;
            }
            return Flow::Continue;
        }
        if self.prune && self.weight as usize + self.free / 4 < target as usize {
            return Flow::Continue;
        }
        let Some(p) = self.next_point(cursor) else { return Flow::Continue };
        for i in 0..self.per_point[p].len() {
            let o = self.per_point[p][i];
            if self.weight + self.units[o as usize].contribution() > target || !self.available(o, max_limit) {
                continue;
            }
            self.choose(o);
            if let Flow::Stop = self.find(p + 1, target, max_unc, max_limit) {
                return Flow::Stop;
            }
            self.unchoose();
        }
        if self.uncovered.len() < max_unc {
            self.decided[p] = true;
            self.free -= 1;
            self.uncovered.push(p as u32);
            if let Flow::Stop = self.find(p + 1, target, max_unc, max_limit) {
                return Flow::Stop;
            }
            self.uncovered.pop();
            self.free += 1;
            self.decided[p] = false;
        }
        Flow::Continue
    }

    fn maximize(&mut self, cursor: usize, best: &mut (u32, Vec<u32>)) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Stop;
        }
        if self.weight > best.0 {
            *best = (self.weight, self.chosen.clone());
        }
        if self.prune && self.weight as usize + self.free / 4 <= best.0 as usize {
            return Flow::Continue;
        }
        let Some(p) = self.next_point(cursor) else { return Flow::Continue };
        for i in 0..self.per_point[p].len() {
            let o = self.per_point[p][i];
            if !self.available(o, None) {
                continue;
            }
            self.choose(o);
            if let Flow::Stop = self.maximize(p + 1, best) {
                return Flow::Stop;
            }
            self.unchoose();
        }
        self.decided[p] = true;
        self.free -= 1;
        let flow = self.maximize(p + 1, best);
        self.free += 1;
        self.decided[p] = false;
        flow
    }

    fn units_of(&self, chosen: &[u32]) -> Vec<Unit> {
        let mut v: Vec<Unit> = chosen.iter().map(|&o| self.units[o as usize].clone()).collect();
        v.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        v
    }
}

fn check_kinds(kinds: &BTreeSet<UnitKind>) -> Result<()> {
    if kinds.is_empty() {
        Err(Error::Packing("no unit kinds allowed".into()))
    } else {
        Ok(())
    }
}

pub fn solve(p: &PackingProblem<'_>, budget: u64) -> Result<SolveOutcome> {
    solve_with(p, SearchOptions { budget, prune: true })
}

pub fn solve_with(p: &PackingProblem<'_>, opts: SearchOptions) -> Result<SolveOutcome> {
    check_kinds(&p.kinds)?;
    if opts.budget == 0 {
        return Err(Error::Packing("budget must be positive".into()));
    }
    let mut e = Engine::new(p.region, &p.kinds, opts);
    for (k, &n) in &p.max_per_kind {
        e.caps[k.search_rank() as usize] = n;
    }
    let max_unc = p.max_uncovered.unwrap_or(usize::MAX);
    let stopped = matches!(e.find(0, p.target, max_unc, p.max_limit), Flow::Stop);
    let nodes_explored = e.nodes.min(opts.budget);
    if !stopped {
        return Ok(SolveOutcome::Unsat { nodes_explored });
    }
    if e.nodes > opts.budget {
        return Ok(SolveOutcome::BudgetExhausted { nodes_explored });
    }
    let mut uncovered: Vec<LatticePoint> = e.uncovered.iter().map(|&i| e.points[i as usize]).collect();
    uncovered.extend((0..e.points.len()).filter(|&i| !e.decided[i]).map(|i| e.points[i]));
    uncovered.sort();
    Ok(SolveOutcome::Solved(PackingSolution { units: e.units_of(&e.chosen), uncovered, nodes_explored }))
}

pub fn max_contribution(region: &Subdivision, kinds: &BTreeSet<UnitKind>, opts: SearchOptions) -> Result<MaxContribution> {
    check_kinds(kinds)?;
    let mut e = Engine::new(region, kinds, opts);
    let mut best = (0u32, Vec::new());
    let stopped = matches!(e.maximize(0, &mut best), Flow::Stop);
    Ok(MaxContribution {
        value: best.0,
        exact: !stopped,
        units: e.units_of(&best.1),
        nodes_explored: e.nodes.min(opts.budget),
    })
}
