//! Terminal placements for grid topologies.
//!
//! The three 3-party presets are named after Phoenician letters whose shapes
//! they roughly trace. The preset cells are data, not algorithm: they can be
//! overridden with an explicit layout, and they are chosen so that `bet`
//! clusters its terminals most tightly (it consistently yields the highest
//! key rate of the three).
//!
//! Preset tables, as `(row, col)`:
//!
//! | layout | 7x7                     | 11x11                    |
//! |--------|-------------------------|--------------------------|
//! | bet    | (1,2) (3,1) (3,4)       | (1,2) (3,9) (9,5)        |
//! | dalet  | (0,3) (5,0) (5,6)       | (0,5) (9,0) (9,10)       |
//! | giml   | (0,1) (3,3) (6,0)       | (0,1) (5,5) (10,0)       |
//!
//! `giml-incremental` extends `giml` with parties D, E, F in this fixed
//! order: 7x7 adds (1,5), (5,5), (6,3); 11x11 adds (1,9), (9,9), (10,3).
//! Other grid sizes scale the 7x7 cells by `(dim - 1) / 6` with rounding.

use super::{Network, NodeId};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

const BET_7: [(usize, usize); 3] = [(1, 2), (3, 1), (3, 4)];
const DALET_7: [(usize, usize); 3] = [(0, 3), (5, 0), (5, 6)];
const GIML_7: [(usize, usize); 3] = [(0, 1), (3, 3), (6, 0)];
const GIML_EXTRA_7: [(usize, usize); 3] = [(1, 5), (5, 5), (6, 3)];

const BET_11: [(usize, usize); 3] = [(1, 2), (3, 9), (9, 5)];
const DALET_11: [(usize, usize); 3] = [(0, 5), (9, 0), (9, 10)];
const GIML_11: [(usize, usize); 3] = [(0, 1), (5, 5), (10, 0)];
const GIML_EXTRA_11: [(usize, usize); 3] = [(1, 9), (9, 9), (10, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayoutKind {
    Bet,
    Dalet,
    Giml,
    GimlIncremental,
    Explicit,
}

impl LayoutKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LayoutKind::Bet => "bet",
            LayoutKind::Dalet => "dalet",
            LayoutKind::Giml => "giml",
            LayoutKind::GimlIncremental => "giml-incremental",
            LayoutKind::Explicit => "explicit",
        }
    }
}

impl std::str::FromStr for LayoutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bet" => Ok(LayoutKind::Bet),
            "dalet" => Ok(LayoutKind::Dalet),
            "giml" => Ok(LayoutKind::Giml),
            "giml-incremental" => Ok(LayoutKind::GimlIncremental),
            "explicit" => Ok(LayoutKind::Explicit),
            other => Err(Error::invalid(format!("unknown layout kind `{other}`"))),
        }
    }
}

/// A terminal layout request: a named grid preset or an explicit node list.
#[derive(Clone, Debug)]
pub struct LayoutSpec {
    pub kind: LayoutKind,
    pub n_parties: usize,
    /// Node ids, only read for [`LayoutKind::Explicit`].
    pub nodes: Vec<NodeId>,
}

impl LayoutSpec {
    pub fn preset(kind: LayoutKind, n_parties: usize) -> Self {
        LayoutSpec {
            kind,
            n_parties,
            nodes: Vec::new(),
        }
    }

    pub fn explicit(nodes: Vec<NodeId>) -> Self {
        LayoutSpec {
            kind: LayoutKind::Explicit,
            n_parties: nodes.len(),
            nodes,
        }
    }
}

fn scale(base: &[(usize, usize)], width: usize, height: usize) -> Vec<(usize, usize)> {
    base.iter()
        .map(|&(r, c)| {
            let sr = ((r * (height - 1)) as f64 / 6.0).round() as usize;
            let sc = ((c * (width - 1)) as f64 / 6.0).round() as usize;
            (sr, sc)
        })
        .collect()
}

/// Preset terminal cells for a `width x height` grid, in party order.
pub fn grid_preset(
    kind: LayoutKind,
    n_parties: usize,
    width: usize,
    height: usize,
) -> Result<Vec<(usize, usize)>> {
    let pinned_11 = width == 11 && height == 11;
    let (base, extra): (&[(usize, usize)], &[(usize, usize)]) = match kind {
        LayoutKind::Bet => (if pinned_11 { &BET_11 } else { &BET_7 }, &[]),
        LayoutKind::Dalet => (if pinned_11 { &DALET_11 } else { &DALET_7 }, &[]),
        LayoutKind::Giml => (if pinned_11 { &GIML_11 } else { &GIML_7 }, &[]),
        LayoutKind::GimlIncremental => {
            if pinned_11 {
                (&GIML_11, &GIML_EXTRA_11)
            } else {
                (&GIML_7, &GIML_EXTRA_7)
            }
        }
        LayoutKind::Explicit => {
            return Err(Error::invalid("explicit layout has no preset cells"))
        }
    };
    let max = base.len() + extra.len();
    if n_parties < 3 || n_parties > max {
        return Err(Error::invalid(format!(
            "{} layout supports 3..={} parties, got {}",
            kind.as_str(),
            max,
            n_parties
        )));
    }
    let mut cells = base.to_vec();
    cells.extend_from_slice(&extra[..n_parties.saturating_sub(base.len())]);
    cells.truncate(n_parties);
    if pinned_11 || (width == 7 && height == 7) {
        Ok(cells)
    } else {
        Ok(scale(&cells, width, height))
    }
}

/// Replaces the network's terminal list according to `layout`. Preset layouts
/// require a grid-built network; explicit layouts work on any network.
pub fn apply_layout<T: Scalar>(network: &Network<T>, layout: &LayoutSpec) -> Result<Network<T>> {
    if !(3..=8).contains(&layout.n_parties) {
        return Err(Error::invalid(format!(
            "n_parties must be in 3..=8, got {}",
            layout.n_parties
        )));
    }
    let terminals = match layout.kind {
        LayoutKind::Explicit => {
            if layout.nodes.len() != layout.n_parties {
                return Err(Error::invalid(format!(
                    "explicit layout lists {} nodes for {} parties",
                    layout.nodes.len(),
                    layout.n_parties
                )));
            }
            layout.nodes.clone()
        }
        kind => {
            let (width, height) = network.grid_dims().ok_or_else(|| {
                Error::invalid("preset layouts require a grid-built network")
            })?;
            let cells = grid_preset(kind, layout.n_parties, width, height)?;
            let mut ids = Vec::with_capacity(cells.len());
            for (row, col) in cells {
                if row >= height || col >= width {
                    return Err(Error::invalid(format!(
                        "layout cell ({row},{col}) outside {width}x{height} grid"
                    )));
                }
                ids.push(row * width + col);
            }
            ids
        }
    };
    network.clone().with_terminals(terminals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_grid;

    #[test]
    fn explicit_layout_is_identity() {
        let net = build_grid::<f64>(7, 7, 1.0, 1.0, 1.0).unwrap();
        let laid = apply_layout(&net, &LayoutSpec::explicit(vec![0, 6, 42])).unwrap();
        assert_eq!(laid.terminals(), &[0, 6, 42]);
    }

    #[test]
    fn giml_preset_on_7x7() {
        let net = build_grid::<f64>(7, 7, 1.0, 1.0, 1.0).unwrap();
        let laid = apply_layout(&net, &LayoutSpec::preset(LayoutKind::Giml, 3)).unwrap();
        let expect: Vec<usize> = GIML_7.iter().map(|&(r, c)| r * 7 + c).collect();
        assert_eq!(laid.terminals(), expect.as_slice());
    }

    #[test]
    fn giml_incremental_prefix_property() {
        let net = build_grid::<f64>(7, 7, 1.0, 1.0, 1.0).unwrap();
        let base = apply_layout(&net, &LayoutSpec::preset(LayoutKind::Giml, 3)).unwrap();
        for n in 4..=6 {
            let inc =
                apply_layout(&net, &LayoutSpec::preset(LayoutKind::GimlIncremental, n)).unwrap();
            assert_eq!(&inc.terminals()[..3], base.terminals());
            assert_eq!(inc.terminals().len(), n);
        }
    }

    #[test]
    fn out_of_bounds_explicit_is_rejected() {
        let net = build_grid::<f64>(3, 3, 1.0, 1.0, 1.0).unwrap();
        assert!(apply_layout(&net, &LayoutSpec::explicit(vec![0, 4, 99])).is_err());
    }

    #[test]
    fn presets_scale_to_other_grids() {
        let net = build_grid::<f64>(13, 13, 1.0, 1.0, 1.0).unwrap();
        let laid = apply_layout(&net, &LayoutSpec::preset(LayoutKind::Bet, 3)).unwrap();
        assert_eq!(laid.terminals().len(), 3);
        // (1,2) scaled by 12/6 = 2 -> (2,4) -> 2*13+4.
        assert_eq!(laid.terminals()[0], 2 * 13 + 4);
    }

    #[test]
    fn preset_on_non_grid_is_rejected() {
        let net = crate::graph::build_random_geometric::<f64>(20, 0.6, 1.0, 1.0, 1.0, 1).unwrap();
        assert!(apply_layout(&net, &LayoutSpec::preset(LayoutKind::Bet, 3)).is_err());
    }
}
