//! Network topologies, terminal layouts, and per-round link snapshots.

mod edgeset;
mod generate;
mod layout;
mod textio;

pub use edgeset::EdgeSet;
pub use generate::{
    build_grid, build_random_geometric, build_random_geometric_with_retries,
    select_uniform_terminals, RETRY_CAP,
};
pub use layout::{apply_layout, grid_preset, LayoutKind, LayoutSpec};
pub use textio::{from_text, to_text};

use rand::Rng;

use crate::error::Error;
use crate::scalar::{to_f64, Scalar};
use crate::Result;

/// Node index within a [`Network`].
pub type NodeId = usize;

/// Link index within a [`Network`].
pub type LinkId = usize;

/// An undirected link with its Phase-1 success probability and depolarizing
/// parameter. Endpoints are stored with `u < v`.
#[derive(Clone, Debug)]
pub struct Link<T> {
    pub u: NodeId,
    pub v: NodeId,
    pub p: T,
    pub gamma: T,
}

impl<T: Scalar> Link<T> {
    pub fn other(&self, node: NodeId) -> NodeId {
        if node == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A quantum repeater network: a simple connected graph with per-link
/// `(p, gamma)`, per-node swap success probability `q`, and an ordered set of
/// terminal nodes. Immutable once constructed.
#[derive(Clone, Debug)]
pub struct Network<T: Scalar> {
    n_nodes: usize,
    links: Vec<Link<T>>,
    adj: Vec<Vec<(NodeId, LinkId)>>,
    q: Vec<T>,
    terminals: Vec<NodeId>,
    grid_dims: Option<(usize, usize)>,
}

impl<T: Scalar> Network<T> {
    /// Builds a network from raw parts, validating every type invariant:
    /// simple connected graph, parameters in `[0, 1]`, distinct terminals.
    pub fn new(
        n_nodes: usize,
        links: Vec<(NodeId, NodeId, T, T)>,
        q: Vec<T>,
        terminals: Vec<NodeId>,
    ) -> Result<Self> {
        if n_nodes == 0 {
            return Err(Error::invalid("network must have at least one node"));
        }
        if q.len() != n_nodes {
            return Err(Error::invalid(format!(
                "expected {} q values, got {}",
                n_nodes,
                q.len()
            )));
        }
        let unit = |x: T| x >= T::zero() && x <= T::one();
        for (node, &qv) in q.iter().enumerate() {
            if !unit(qv) {
                return Err(Error::invalid(format!("q out of [0,1] at node {node}")));
            }
        }

        let mut normalized = Vec::with_capacity(links.len());
        let mut seen = std::collections::HashSet::new();
        for (u, v, p, gamma) in links {
            if u == v {
                return Err(Error::invalid(format!("self-loop at node {u}")));
            }
            if u >= n_nodes || v >= n_nodes {
                return Err(Error::invalid(format!("link ({u},{v}) out of range")));
            }
            if !unit(p) || !unit(gamma) {
                return Err(Error::invalid(format!(
                    "link ({u},{v}) parameters out of [0,1]"
                )));
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((u, v)) {
                return Err(Error::invalid(format!("parallel link ({u},{v})")));
            }
            normalized.push(Link { u, v, p, gamma });
        }

        let mut adj = vec![Vec::new(); n_nodes];
        for (id, link) in normalized.iter().enumerate() {
            adj[link.u].push((link.v, id));
            adj[link.v].push((link.u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let network = Network {
            n_nodes,
            links: normalized,
            adj,
            q,
            terminals: Vec::new(),
            grid_dims: None,
        };
        if !network.is_connected() {
            return Err(Error::invalid("graph is not connected"));
        }
        network.with_terminals(terminals)
    }

    /// Returns a copy with the terminal list replaced.
    pub fn with_terminals(mut self, terminals: Vec<NodeId>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &t in &terminals {
            if t >= self.n_nodes {
                return Err(Error::invalid(format!("terminal {t} out of range")));
            }
            if !seen.insert(t) {
                return Err(Error::invalid(format!("duplicate terminal {t}")));
            }
        }
        self.terminals = terminals;
        Ok(self)
    }

    pub(crate) fn set_grid_dims(&mut self, width: usize, height: usize) {
        self.grid_dims = Some((width, height));
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn n_links(&self) -> usize {
        self.links.len()
    }

    pub fn links(&self) -> &[Link<T>] {
        &self.links
    }

    pub fn link(&self, id: LinkId) -> &Link<T> {
        &self.links[id]
    }

    /// Neighbors of `node` as `(neighbor, link id)`, sorted by neighbor.
    pub fn adjacent(&self, node: NodeId) -> &[(NodeId, LinkId)] {
        &self.adj[node]
    }

    pub fn q(&self, node: NodeId) -> T {
        self.q[node]
    }

    pub fn q_values(&self) -> &[T] {
        &self.q
    }

    pub fn terminals(&self) -> &[NodeId] {
        &self.terminals
    }

    /// Grid dimensions `(width, height)` when built by [`build_grid`].
    pub fn grid_dims(&self) -> Option<(usize, usize)> {
        self.grid_dims
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.adj[node].len()
    }

    pub fn mean_degree(&self) -> f64 {
        2.0 * self.links.len() as f64 / self.n_nodes as f64
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n_nodes];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, _) in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n_nodes
    }

    /// Phase 1 of a round: keeps each link independently with its own `p`.
    ///
    /// Sampling always consumes one uniform draw per link so the stream
    /// position is independent of outcomes.
    pub fn sample_snapshot<'a, R: Rng>(&'a self, rng: &mut R) -> Snapshot<'a, T> {
        let mut alive = EdgeSet::empty(self.links.len());
        for (id, link) in self.links.iter().enumerate() {
            let draw: f64 = rng.gen();
            if draw < to_f64(link.p) {
                alive.insert(id);
            }
        }
        Snapshot { network: self, alive }
    }

    /// Snapshot with every link alive (fixed-mode planning, tests).
    pub fn full_snapshot(&self) -> Snapshot<'_, T> {
        Snapshot {
            network: self,
            alive: EdgeSet::full(self.links.len()),
        }
    }

    /// Snapshot with an explicit alive set.
    pub fn snapshot_from(&self, alive: EdgeSet) -> Result<Snapshot<'_, T>> {
        if alive.capacity() != self.links.len() {
            return Err(Error::contract("alive set capacity mismatch"));
        }
        Ok(Snapshot { network: self, alive })
    }
}

/// The surviving-link subgraph after Phase-1 sampling of one round.
/// Immutable; packing works on explicit residual copies.
#[derive(Clone)]
pub struct Snapshot<'a, T: Scalar> {
    network: &'a Network<T>,
    alive: EdgeSet,
}

impl<'a, T: Scalar> Snapshot<'a, T> {
    pub fn network(&self) -> &'a Network<T> {
        self.network
    }

    pub fn alive(&self) -> &EdgeSet {
        &self.alive
    }

    pub fn is_alive(&self, id: LinkId) -> bool {
        self.alive.contains(id)
    }

    pub fn n_alive(&self) -> usize {
        self.alive.len()
    }

    /// Alive neighbors of `node` as `(neighbor, link id)`.
    pub fn alive_adjacent(&self, node: NodeId) -> impl Iterator<Item = (NodeId, LinkId)> + '_ {
        self.network
            .adjacent(node)
            .iter()
            .copied()
            .filter(|&(_, id)| self.alive.contains(id))
    }

    /// New snapshot with `used` removed. `used` must be alive here.
    pub fn residual(&self, used: &EdgeSet) -> Result<Snapshot<'a, T>> {
        if !used.is_subset_of(&self.alive) {
            return Err(Error::contract("removing links that are not alive"));
        }
        let mut alive = self.alive.clone();
        alive.subtract(used);
        Ok(Snapshot {
            network: self.network,
            alive,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn triangle() -> Network<f64> {
        Network::new(
            3,
            vec![
                (0, 1, 1.0, 1.0),
                (1, 2, 1.0, 1.0),
                (0, 2, 1.0, 1.0),
            ],
            vec![1.0; 3],
            vec![0, 1, 2],
        )
        .unwrap()
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert!(Network::<f64>::new(2, vec![(0, 0, 1.0, 1.0)], vec![1.0; 2], vec![]).is_err());
        assert!(Network::<f64>::new(
            2,
            vec![(0, 1, 1.0, 1.0), (1, 0, 1.0, 1.0)],
            vec![1.0; 2],
            vec![]
        )
        .is_err());
        assert!(Network::<f64>::new(2, vec![(0, 1, 1.5, 1.0)], vec![1.0; 2], vec![]).is_err());
        // Disconnected.
        assert!(Network::<f64>::new(3, vec![(0, 1, 1.0, 1.0)], vec![1.0; 3], vec![]).is_err());
        // Duplicate terminals.
        assert!(triangle().with_terminals(vec![0, 0]).is_err());
    }

    #[test]
    fn snapshot_extremes() {
        let net = triangle();
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        let snap = net.sample_snapshot(&mut rng);
        assert_eq!(snap.n_alive(), 3, "p = 1 keeps every link");

        let net0 = Network::<f64>::new(
            3,
            vec![(0, 1, 0.0, 1.0), (1, 2, 0.0, 1.0), (0, 2, 0.0, 1.0)],
            vec![1.0; 3],
            vec![],
        )
        .unwrap();
        let snap0 = net0.sample_snapshot(&mut rng);
        assert_eq!(snap0.n_alive(), 0, "p = 0 kills every link");
    }

    #[test]
    fn snapshot_keep_frequency_within_4_sigma() {
        let net = Network::<f64>::new(
            2,
            vec![(0, 1, 0.85, 1.0)],
            vec![1.0; 2],
            vec![],
        )
        .unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let rounds = 20_000;
        let mut kept = 0u32;
        for _ in 0..rounds {
            if net.sample_snapshot(&mut rng).is_alive(0) {
                kept += 1;
            }
        }
        let freq = kept as f64 / rounds as f64;
        let sigma = (0.85f64 * 0.15 / rounds as f64).sqrt();
        assert!((freq - 0.85).abs() < 4.0 * sigma, "freq = {freq}");
    }

    #[test]
    fn binomial_alive_count_band() {
        // 10-link graph, p = 0.85, 1000 samples: mean alive in 8.5 +/- 0.35.
        let mut links = Vec::new();
        for i in 0..10 {
            links.push((i, i + 1, 0.85, 1.0));
        }
        let net = Network::<f64>::new(11, links, vec![1.0; 11], vec![]).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let total: usize = (0..1000).map(|_| net.sample_snapshot(&mut rng).n_alive()).sum();
        let mean = total as f64 / 1000.0;
        assert!((mean - 8.5).abs() < 0.35, "mean alive = {mean}");
    }

    #[test]
    fn residual_disjoint_removals_commute() {
        let net = triangle();
        let snap = net.full_snapshot();
        let a: EdgeSet = {
            let mut s = EdgeSet::empty(3);
            s.insert(0);
            s
        };
        let b: EdgeSet = {
            let mut s = EdgeSet::empty(3);
            s.insert(2);
            s
        };
        let ab = snap.residual(&a).unwrap().residual(&b).unwrap();
        let ba = snap.residual(&b).unwrap().residual(&a).unwrap();
        assert_eq!(ab.alive(), ba.alive());
        // Idempotence on already-removed sets fails the contract.
        assert!(ab.residual(&a).is_err());
        // Removing nothing leaves the snapshot unchanged.
        let noop = snap.residual(&EdgeSet::empty(3)).unwrap();
        assert_eq!(noop.alive(), snap.alive());
        // Removing everything empties it.
        let empty = snap.residual(&EdgeSet::full(3)).unwrap();
        assert!(empty.alive().is_empty());
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let net = Network::<f64>::new(
            4,
            vec![(0, 1, 0.5, 1.0), (1, 2, 0.5, 1.0), (2, 3, 0.5, 1.0)],
            vec![1.0; 4],
            vec![],
        )
        .unwrap();
        let seq_a: Vec<usize> = {
            let mut rng = ChaCha12Rng::seed_from_u64(42);
            (0..50).map(|_| net.sample_snapshot(&mut rng).n_alive()).collect()
        };
        let seq_b: Vec<usize> = {
            let mut rng = ChaCha12Rng::seed_from_u64(42);
            (0..50).map(|_| net.sample_snapshot(&mut rng).n_alive()).collect()
        };
        assert_eq!(seq_a, seq_b);
    }
}
