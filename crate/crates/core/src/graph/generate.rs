//! Topology constructors: 4-neighbor grids and random geometric graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use super::{Network, NodeId};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Maximum number of whole-placement resamples before random geometric
/// generation gives up on connectivity.
pub const RETRY_CAP: usize = 10_000;

/// Builds a `width x height` 4-neighbor lattice. Node `(row, col)` has index
/// `row * width + col`; every link carries `(p, gamma)` and every node `q`.
pub fn build_grid<T: Scalar>(
    width: usize,
    height: usize,
    p: T,
    gamma: T,
    q: T,
) -> Result<Network<T>> {
    if width < 2 || height < 2 {
        return Err(Error::invalid("grid dimensions must be at least 2x2"));
    }
    let n = width * height;
    let mut links = Vec::with_capacity(2 * n - width - height);
    for row in 0..height {
        for col in 0..width {
            let id = row * width + col;
            if col + 1 < width {
                links.push((id, id + 1, p, gamma));
            }
            if row + 1 < height {
                links.push((id, id + width, p, gamma));
            }
        }
    }
    let mut network = Network::new(n, links, vec![q; n], Vec::new())?;
    network.set_grid_dims(width, height);
    Ok(network)
}

/// Places `n_nodes` uniformly in the unit square and links pairs closer than
/// `radius`. The whole placement is resampled (advancing the seeded stream)
/// until the graph is connected; a fixed seed gives a fixed network.
pub fn build_random_geometric<T: Scalar>(
    n_nodes: usize,
    radius: f64,
    p: T,
    gamma: T,
    q: T,
    seed: u64,
) -> Result<Network<T>> {
    build_random_geometric_with_retries(n_nodes, radius, p, gamma, q, seed, RETRY_CAP)
}

pub fn build_random_geometric_with_retries<T: Scalar>(
    n_nodes: usize,
    radius: f64,
    p: T,
    gamma: T,
    q: T,
    seed: u64,
    retry_cap: usize,
) -> Result<Network<T>> {
    if n_nodes < 2 {
        return Err(Error::invalid("random geometric graph needs >= 2 nodes"));
    }
    if !(radius > 0.0 && radius <= std::f64::consts::SQRT_2) {
        return Err(Error::invalid("radius must be in (0, sqrt(2)]"));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..retry_cap {
        let coords: Vec<(f64, f64)> = (0..n_nodes).map(|_| (rng.gen(), rng.gen())).collect();
        let mut links = Vec::new();
        for i in 0..n_nodes {
            for j in (i + 1)..n_nodes {
                let dx = coords[i].0 - coords[j].0;
                let dy = coords[i].1 - coords[j].1;
                if (dx * dx + dy * dy).sqrt() < radius {
                    links.push((i, j, p, gamma));
                }
            }
        }
        match Network::new(n_nodes, links, vec![q; n_nodes], Vec::new()) {
            Ok(network) => return Ok(network),
            Err(Error::InvalidArgument(_)) => continue, // disconnected; resample
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailure(format!(
        "no connected placement of {n_nodes} nodes at radius {radius} within {retry_cap} tries"
    )))
}

/// Draws `n` distinct terminals uniformly at random, seeded. The draw has the
/// incremental prefix property: for a fixed seed, the `n = 3` terminals are a
/// prefix of the `n = 6` list.
pub fn select_uniform_terminals<T: Scalar>(
    network: &Network<T>,
    n: usize,
    seed: u64,
) -> Result<Vec<NodeId>> {
    if n > network.n_nodes() {
        return Err(Error::invalid(format!(
            "cannot select {n} terminals from {} nodes",
            network.n_nodes()
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut chosen = Vec::with_capacity(n);
    while chosen.len() < n {
        let candidate = rng.gen_range(0..network.n_nodes());
        if !chosen.contains(&candidate) {
            chosen.push(candidate);
        }
    }
    Ok(chosen)
}
