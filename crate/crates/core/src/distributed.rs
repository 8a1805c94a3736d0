//! Distributed sequential greedy over a communication graph.
//!
//! Agent `i` owns block `P_i` of a partition matroid and sees nothing else.
//! A message travels along a [`MessageSchedule`]; on its first visit an agent
//! runs `κ_i` greedy picks conditioned on the picks it has received, then
//! forwards everything it knows. Hops may lose their message according to a
//! [`DropModel`]. Who-heard-from-whom is recorded in an [`InfoGraph`], whose
//! clique number controls the degraded bound `1/(2 + N − ω)`.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bruteforce::{brute_force_opt, gap_against, N_MAX_BRUTE_FORCE};
use crate::error::{Error, Result};
use crate::greedy::{argmax, GreedyTrace, Pick};
use crate::matroid::{IndependenceOracle, PartitionMatroid};
use crate::oracle::ValueOracle;
use crate::subset::Subset;

/// Largest graph for which the covering walk is computed exactly.
pub const N_MAX_EXACT_WALK: usize = 12;
pub const N_MAX_CLIQUE: usize = 20;

/// Undirected simple graph over agents `0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommGraph {
    adj: Vec<Vec<bool>>,
}

impl CommGraph {
    pub fn new(agents: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if agents == 0 {
            return Err(Error::InvalidParameter("communication graph needs an agent".into()));
        }
        let mut adj = vec![vec![false; agents]; agents];
        for &(a, b) in edges {
            if a >= agents || b >= agents {
                return Err(Error::ElementOutOfRange { element: a.max(b), size: agents });
            }
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at agent {a}")));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Ok(Self { adj })
    }

    pub fn path(agents: usize) -> Self {
        let edges: Vec<_> = (1..agents).map(|i| (i - 1, i)).collect();
        Self::new(agents, &edges).expect("path edges are valid")
    }

    pub fn complete(agents: usize) -> Self {
        let edges: Vec<_> = (0..agents).flat_map(|a| (a + 1..agents).map(move |b| (a, b))).collect();
        Self::new(agents, &edges).expect("complete edges are valid")
    }

    /// Agent 0 is the hub.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn agents(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.agents()).filter(move |&u| self.adj[v][u])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.agents()).flat_map(|a| (a + 1..self.agents()).filter(move |&b| self.adj[a][b]).map(move |b| (a, b))).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_parents(0).iter().all(Option::is_some)
    }

    /// BFS tree from `root`, neighbors in ascending order; the root is its own parent.
    fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.agents()];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if parent[u].is_none() {
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
        parent
    }

    /// Shortest path `from → to` (inclusive), deterministic.
    fn shortest_path(&self, from: usize, to: usize) -> Vec<usize> {
        let parent = self.bfs_parents(to);
        let mut path = vec![from];
        let mut v = from;
        while v != to {
            v = parent[v].expect("graph is connected");
            path.push(v);
        }
        path
    }

    fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.agents())
            .map(|root| {
                let mut dist = vec![usize::MAX; self.agents()];
                dist[root] = 0;
                let mut queue = VecDeque::from([root]);
                while let Some(v) = queue.pop_front() {
                    for u in self.neighbors(v) {
                        if dist[u] == usize::MAX {
                            dist[u] = dist[v] + 1;
                            queue.push_back(u);
                        }
                    }
                }
                dist
            })
            .collect()
    }
}

/// A walk over the agents that visits each of them at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MessageSchedule {
    walk: Vec<usize>,
    /// Per hop: whether the two agents share a link. Unlinked hops only come
    /// from explicit overrides and always lose their message.
    linked: Vec<bool>,
    /// `false` when produced by the nearest-neighbour heuristic.
    pub exact: bool,
}

impl MessageSchedule {
    /// A walk along edges of `g` covering every agent.
    pub fn from_walk(g: &CommGraph, walk: Vec<usize>) -> Result<Self> {
        let s = Self::from_override(g, walk)?;
        if let Some(h) = s.linked.iter().position(|l| !l) {
            return Err(Error::InvalidSchedule(format!(
                "hop {h} ({} -> {}) is not an edge",
                s.walk[h],
                s.walk[h + 1]
            )));
        }
        Ok(s)
    }

    /// A user-given visiting order. Hops between non-adjacent agents are
    /// allowed and treated as permanently failed links.
    pub fn from_override(g: &CommGraph, walk: Vec<usize>) -> Result<Self> {
        let n = g.agents();
        if let Some(&a) = walk.iter().find(|&&a| a >= n) {
            return Err(Error::InvalidSchedule(format!("agent {a} is not in the graph")));
        }
        let visited: BTreeSet<usize> = walk.iter().copied().collect();
        if visited.len() != n {
            return Err(Error::InvalidSchedule(format!("walk {walk:?} does not visit all {n} agents")));
        }
        if walk.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSchedule("walk repeats an agent on consecutive steps".into()));
        }
        let linked = walk.windows(2).map(|w| g.adjacent(w[0], w[1])).collect();
        Ok(Self { walk, linked, exact: true })
    }

    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    pub fn hops(&self) -> usize {
        self.walk.len().saturating_sub(1)
    }

    pub fn agents(&self) -> usize {
        self.walk.iter().collect::<BTreeSet<_>>().len()
    }

    /// Extra visits beyond one per agent.
    pub fn revisits(&self) -> usize {
        self.walk.len() - self.agents()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.revisits() == 0 && self.linked.iter().all(|&l| l)
    }

    pub fn first_visit_order(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        self.walk.iter().copied().filter(|a| seen.insert(*a)).collect()
    }
}

/// Shortest covering walk: a Hamiltonian path whenever one exists, otherwise
/// a walk with the fewest revisits. Exact for up to [`N_MAX_EXACT_WALK`]
/// agents (dynamic programming over visit orders in the shortest-path
/// metric, lexicographically smallest order among optima); nearest-neighbour
/// beyond that, flagged with `exact = false`.
pub fn find_message_sequence(g: &CommGraph) -> Result<MessageSchedule> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.agents();
    let dist = g.distances();
    let (order, exact) = if n <= N_MAX_EXACT_WALK { (exact_order(&dist), true) } else { (nearest_neighbor_order(&dist), false) };
    let mut walk = vec![order[0]];
    for w in order.windows(2) {
        walk.extend(g.shortest_path(w[0], w[1]).into_iter().skip(1));
    }
    let mut schedule = MessageSchedule::from_walk(g, walk)?;
    schedule.exact = exact;
    Ok(schedule)
}

fn exact_order(dist: &[Vec<usize>]) -> Vec<usize> {
    let n = dist.len();
    let full = (1usize << n) - 1;
    // rest[mask][v]: cheapest completion having visited `mask`, standing at v.
    let mut rest = vec![vec![usize::MAX; n]; 1 << n];
    rest[full] = vec![0; n];
    for mask in (1..full).rev() {
        for v in (0..n).filter(|v| mask >> v & 1 == 1) {
            rest[mask][v] = (0..n)
                .filter(|u| mask >> u & 1 == 0)
                .map(|u| dist[v][u] + rest[mask | 1 << u][u])
                .min()
                .expect("mask is not full");
        }
    }
    let start = (0..n).min_by_key(|&s| (rest[1 << s][s], s)).expect("n ≥ 1");
    let mut order = vec![start];
    let mut mask = 1usize << start;
    while mask != full {
        let v = *order.last().expect("nonempty");
        let next = (0..n)
            .filter(|u| mask >> u & 1 == 0)
            .find(|&u| dist[v][u] + rest[mask | 1 << u][u] == rest[mask][v])
            .expect("an optimal continuation exists");
        order.push(next);
        mask |= 1 << next;
    }
    order
}

fn nearest_neighbor_order(dist: &[Vec<usize>]) -> Vec<usize> {
    let n = dist.len();
    let mut order = vec![0];
    let mut visited = vec![false; n];
    visited[0] = true;
    while order.len() < n {
        let v = *order.last().expect("nonempty");
        let next = (0..n).filter(|&u| !visited[u]).min_by_key(|&u| (dist[v][u], u)).expect("unvisited agent");
        visited[next] = true;
        order.push(next);
    }
    order
}

/// How hops lose messages. A dropped hop destroys only the message in
/// flight; what receivers already hold is kept.
#[derive(Clone, Debug, PartialEq)]
pub enum DropModel {
    None,
    /// Each hop independently succeeds with probability `p_success`.
    Bernoulli { p_success: f64, seed: u64 },
    /// These hop indices (0-based along the walk) fail.
    FailedHops(BTreeSet<usize>),
}

impl DropModel {
    fn realize(&self, hops: usize) -> Result<Vec<bool>> {
        match self {
            DropModel::None => Ok(vec![true; hops]),
            DropModel::Bernoulli { p_success, seed } => {
                if !(0.0..=1.0).contains(p_success) {
                    return Err(Error::InvalidParameter(format!("p_success {p_success} outside [0, 1]")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..hops).map(|_| rng.gen_bool(*p_success)).collect())
            }
            DropModel::FailedHops(failed) => Ok((0..hops).map(|h| !failed.contains(&h)).collect()),
        }
    }
}

/// Directed information-sharing graph: `i → j` when agent `j` held agent
/// `i`'s picks when it chose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfoGraph {
    edges: Vec<Vec<bool>>,
    /// Agents in the order they chose.
    pub choice_order: Vec<usize>,
}

impl InfoGraph {
    pub fn from_edges(agents: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![vec![false; agents]; agents];
        for &(i, j) in edges {
            if i >= agents || j >= agents || i == j {
                return Err(Error::InvalidParameter(format!("invalid information edge {i} -> {j}")));
            }
            adj[i][j] = true;
        }
        Ok(Self { edges: adj, choice_order: (0..agents).collect() })
    }

    pub fn agents(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges[from][to]
    }

    pub fn in_neighbors(&self, j: usize) -> Vec<usize> {
        (0..self.agents()).filter(|&i| self.edges[i][j]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().flatten().filter(|&&e| e).count()
    }

    fn undirected(&self) -> Vec<Vec<bool>> {
        let n = self.agents();
        (0..n).map(|i| (0..n).map(|j| self.edges[i][j] || self.edges[j][i]).collect()).collect()
    }
}

/// Size of the largest clique of the undirected closure. Every nonempty
/// graph has `ω ≥ 1`: an isolated agent is a clique by itself.
pub fn clique_number(info: &InfoGraph) -> Result<usize> {
    let n = info.agents();
    if n > N_MAX_CLIQUE {
        return Err(Error::TooLargeForExhaustive { n, limit: N_MAX_CLIQUE });
    }
    let adj = info.undirected();
    let masks: Vec<u32> = (0..n).map(|i| (0..n).filter(|&j| adj[i][j]).fold(0, |m, j| m | 1 << j)).collect();
    let mut best = 0;
    expand(0, (1u32 << n) - 1, &masks, &mut best);
    Ok(best)
}

fn expand(size: usize, mut candidates: u32, masks: &[u32], best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    while candidates != 0 {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        expand(size + 1, candidates & masks[v], masks, best);
    }
}

/// `1 / (2 + N − ω)`.
pub fn gap_bound_incomplete(agents: usize, omega: usize) -> Result<f64> {
    if omega == 0 || omega > agents {
        return Err(Error::InvalidParameter(format!("clique number {omega} outside 1..={agents}")));
    }
    Ok(1.0 / (2 + agents - omega) as f64)
}

#[derive(Clone, Debug)]
pub struct DistributedRun {
    pub set: Subset,
    pub value: f64,
    pub info: InfoGraph,
    pub trace: GreedyTrace,
    /// Per agent: the picks it was conditioned on when it chose.
    pub conditioning: Vec<Subset>,
    /// Per agent: its own picks.
    pub picks: Vec<Subset>,
}

/// Runs one message-passing pass of distributed greedy.
pub fn run_distributed_sg<O>(
    f: &O,
    m: &PartitionMatroid,
    schedule: &MessageSchedule,
    drops: &DropModel,
) -> Result<DistributedRun>
where
    O: ValueOracle + ?Sized,
{
    let n = f.ground_size();
    if m.ground_size() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: m.ground_size() });
    }
    let agents = m.num_blocks();
    if schedule.agents() != agents || schedule.walk.iter().any(|&a| a >= agents) {
        return Err(Error::InvalidSchedule(format!(
            "schedule covers {} agents but the matroid has {agents} blocks",
            schedule.agents()
        )));
    }
    let delivered = drops.realize(schedule.hops())?;
    let mut knowledge = vec![Subset::empty(n); agents];
    let mut heard_from = vec![vec![false; agents]; agents];
    let mut chosen = vec![false; agents];
    let mut conditioning = vec![Subset::empty(n); agents];
    let mut own_picks = vec![Subset::empty(n); agents];
    let mut info = vec![vec![false; agents]; agents];
    let mut choice_order = Vec::with_capacity(agents);
    let mut trace_picks = Vec::new();

    for (k, &agent) in schedule.walk.iter().enumerate() {
        if !chosen[agent] {
            chosen[agent] = true;
            choice_order.push(agent);
            conditioning[agent] = knowledge[agent].clone();
            for i in (0..agents).filter(|&i| heard_from[agent][i]) {
                info[i][agent] = true;
            }
            let mut set = knowledge[agent].clone();
            let mut current = f.value(&set);
            let mut base_call = 1;
            for _ in 0..m.kappas()[agent] {
                let candidates: Vec<usize> = m.blocks()[agent].iter().copied().filter(|&p| !set.contains(p)).collect();
                let (p, v) = argmax(f, &set, &candidates).expect("κ_i ≤ |P_i| leaves a candidate");
                trace_picks.push(Pick { element: p, gain: v - current, oracle_calls: candidates.len() as u64 + base_call });
                base_call = 0;
                set.insert(p);
                own_picks[agent].insert(p);
                current = v;
            }
            knowledge[agent] = set;
            heard_from[agent][agent] = true;
        }
        if k < schedule.hops() && schedule.linked[k] && delivered[k] {
            let next = schedule.walk[k + 1];
            let (carried, from) = (knowledge[agent].clone(), heard_from[agent].clone());
            knowledge[next].union_with(&carried);
            for (h, f) in heard_from[next].iter_mut().zip(from) {
                *h |= f;
            }
        }
    }

    let mut set = Subset::empty(n);
    for picks in &own_picks {
        set.union_with(picks);
    }
    let value = f.value(&set);
    let trace = GreedyTrace { picks: trace_picks, set: set.clone(), value, initial_calls: 0 };
    Ok(DistributedRun { set, value, info: InfoGraph { edges: info, choice_order }, trace, conditioning, picks: own_picks })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub trial: usize,
    pub p_success: f64,
    pub seed: u64,
    pub value: f64,
    pub opt: Option<f64>,
    pub ratio: Option<f64>,
    pub omega: usize,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub p_success: f64,
    pub mean_ratio: Option<f64>,
    pub min_ratio: Option<f64>,
    pub mean_omega: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub summaries: Vec<SweepSummary>,
}

/// For each success probability, `trials` seeded runs under Bernoulli
/// drops. Trial seeds derive from `seed` and the row index, so the table
/// does not depend on how many workers run it.
pub fn bernoulli_sweep<O>(
    f: &O,
    m: &PartitionMatroid,
    schedule: &MessageSchedule,
    p_grid: &[f64],
    trials: usize,
    seed: u64,
) -> Result<SweepOutcome>
where
    O: ValueOracle + ?Sized,
{
    let opt = if f.ground_size() <= N_MAX_BRUTE_FORCE { Some(brute_force_opt(f, m)?.1) } else { None };
    let agents = m.num_blocks();
    let jobs: Vec<(usize, usize)> = (0..p_grid.len()).flat_map(|i| (0..trials).map(move |t| (i, t))).collect();
    let rows = jobs
        .par_iter()
        .enumerate()
        .map(|(index, &(i, trial))| {
            let trial_seed = crate::derive_seed(seed, index as u64);
            let run = run_distributed_sg(f, m, schedule, &DropModel::Bernoulli { p_success: p_grid[i], seed: trial_seed })?;
            let omega = clique_number(&run.info)?;
            Ok(SweepRow {
                trial,
                p_success: p_grid[i],
                seed: trial_seed,
                value: run.value,
                opt,
                ratio: opt.map(|o| gap_against(run.value, o).ratio),
                omega,
                bound: gap_bound_incomplete(agents, omega)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let summaries = p_grid
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let block = &rows[i * trials..(i + 1) * trials];
            let ratios: Vec<f64> = block.iter().filter_map(|r| r.ratio).collect();
            let mean = |v: &[f64]| (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64);
            SweepSummary {
                p_success: p,
                mean_ratio: mean(&ratios),
                min_ratio: ratios.iter().copied().reduce(f64::min),
                mean_omega: block.iter().map(|r| r.omega as f64).sum::<f64>() / trials.max(1) as f64,
            }
        })
        .collect();
    Ok(SweepOutcome { rows, summaries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{CoverageInstance, CoverageOracle};
    use crate::greedy::sequential_greedy_partition;

    fn three_agent_instance() -> (CoverageOracle, PartitionMatroid) {
        let f = CoverageOracle::new(&CoverageInstance {
            weights: vec![3.0, 2.0, 2.0, 1.0],
            cover_sets: vec![vec![0], vec![0, 1], vec![0, 2], vec![2, 3], vec![1], vec![3]],
        })
        .unwrap();
        let m = PartitionMatroid::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]], vec![1, 1, 1]).unwrap();
        (f, m)
    }

    #[test]
    fn path_schedule_is_hamiltonian() {
        let s = find_message_sequence(&CommGraph::path(3)).unwrap();
        assert_eq!(s.walk(), &[0, 1, 2]);
        assert!(s.is_hamiltonian() && s.exact);
    }

    #[test]
    fn star_needs_one_revisit() {
        let s = find_message_sequence(&CommGraph::star(3)).unwrap();
        assert_eq!(s.walk(), &[1, 0, 2, 0, 3]);
        assert!(!s.is_hamiltonian());
        assert_eq!(s.revisits(), 1);
    }

    #[test]
    fn complete_graph_is_lexicographic() {
        assert_eq!(find_message_sequence(&CommGraph::complete(4)).unwrap().walk(), &[0, 1, 2, 3]);
    }

    #[test]
    fn disconnected_graph_is_reported() {
        let g = CommGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(find_message_sequence(&g), Err(Error::Disconnected)));
        let s = MessageSchedule::from_override(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(!s.is_hamiltonian());
        assert!(MessageSchedule::from_walk(&g, vec![0, 1, 2, 3]).is_err());
    }

    #[test]
    fn graph_validation() {
        assert!(CommGraph::new(3, &[(1, 1)]).is_err());
        assert!(CommGraph::new(3, &[(0, 3)]).is_err());
        assert!(MessageSchedule::from_walk(&CommGraph::path(3), vec![0, 1]).is_err());
    }

    #[test]
    fn large_graphs_use_the_heuristic() {
        let g = CommGraph::path(14);
        let s = find_message_sequence(&g).unwrap();
        assert!(!s.exact);
        assert_eq!(s.agents(), 14);
    }

    #[test]
    fn no_drops_reproduces_centralized_greedy() {
        let (f, m) = three_agent_instance();
        let schedule = find_message_sequence(&CommGraph::path(3)).unwrap();
        let run = run_distributed_sg(&f, &m, &schedule, &DropModel::None).unwrap();
        let central = sequential_greedy_partition(&f, &m, &schedule.first_visit_order()).unwrap();
        assert_eq!(run.set, central.set);
        assert_eq!(run.info.edge_count(), 3);
        assert_eq!(clique_number(&run.info).unwrap(), 3);
    }

    #[test]
    fn all_drops_isolate_every_agent() {
        let (f, m) = three_agent_instance();
        let schedule = find_message_sequence(&CommGraph::path(3)).unwrap();
        let run = run_distributed_sg(&f, &m, &schedule, &DropModel::Bernoulli { p_success: 0.0, seed: 1 }).unwrap();
        assert_eq!(run.info.edge_count(), 0);
        assert_eq!(clique_number(&run.info).unwrap(), 1);
        // Agents 0 and 1 both grab the heavy item 0 in isolation.
        assert_eq!(run.set.to_vec(), vec![1, 2, 4]);
    }

    #[test]
    fn single_dropped_hop_on_a_path() {
        let (f, m) = three_agent_instance();
        let schedule = find_message_sequence(&CommGraph::path(3)).unwrap();
        let drops = DropModel::FailedHops(BTreeSet::from([1]));
        let run = run_distributed_sg(&f, &m, &schedule, &drops).unwrap();
        assert!(run.info.has_edge(0, 1));
        assert!(!run.info.has_edge(0, 2) && !run.info.has_edge(1, 2));
        assert!(run.conditioning[2].is_empty());
        assert_eq!(run.conditioning[1], run.picks[0]);
    }

    #[test]
    fn clique_numbers() {
        let complete = InfoGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(clique_number(&complete).unwrap(), 4);
        assert_eq!(clique_number(&InfoGraph::from_edges(5, &[]).unwrap()).unwrap(), 1);
        let triads = InfoGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(clique_number(&triads).unwrap(), 3);
    }

    #[test]
    fn gap_bounds() {
        assert_eq!(gap_bound_incomplete(4, 4).unwrap(), 0.5);
        assert_eq!(gap_bound_incomplete(3, 1).unwrap(), 0.25);
        assert_eq!(gap_bound_incomplete(5, 3).unwrap(), 0.25);
        assert!(gap_bound_incomplete(3, 0).is_err());
        assert!(gap_bound_incomplete(3, 4).is_err());
    }

    #[test]
    fn sweep_extremes() {
        let (f, m) = three_agent_instance();
        let schedule = find_message_sequence(&CommGraph::path(3)).unwrap();
        let out = bernoulli_sweep(&f, &m, &schedule, &[1.0, 0.0], 5, 42).unwrap();
        assert_eq!(out.rows.len(), 10);
        let no_drop = run_distributed_sg(&f, &m, &schedule, &DropModel::None).unwrap().value;
        assert!(out.rows[..5].iter().all(|r| r.value == no_drop && r.omega == 3));
        let isolated = out.rows[5].value;
        assert!(out.rows[5..].iter().all(|r| r.value == isolated && r.omega == 1));
        assert_eq!(out.summaries.len(), 2);
    }
}
