//! Line-oriented text serialization of networks.
//!
//! ```text
//! nodes <n>
//! link <u> <v> <p> <gamma>
//! q <node> <value>
//! terminal <node>
//! ```
//!
//! Values are written in scientific notation with 17 significant digits, so a
//! round trip through text reproduces `f64` parameters exactly. Links appear
//! in id order, `q` lines for every node in order, terminals in party order.

use super::{Network, NodeId};
use crate::error::Error;
use crate::scalar::{real, to_f64, Scalar};
use crate::Result;

pub fn to_text<T: Scalar>(network: &Network<T>) -> String {
    let mut out = String::new();
    out.push_str(&format!("nodes {}\n", network.n_nodes()));
    for link in network.links() {
        out.push_str(&format!(
            "link {} {} {:.16e} {:.16e}\n",
            link.u, link.v, link.p, link.gamma
        ));
    }
    for node in 0..network.n_nodes() {
        out.push_str(&format!("q {} {:.16e}\n", node, network.q(node)));
    }
    for &t in network.terminals() {
        out.push_str(&format!("terminal {t}\n"));
    }
    out
}

pub fn from_text<T: Scalar>(text: &str) -> Result<Network<T>> {
    let mut n_nodes: Option<usize> = None;
    let mut links: Vec<(NodeId, NodeId, T, T)> = Vec::new();
    let mut q: Vec<Option<T>> = Vec::new();
    let mut terminals: Vec<NodeId> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let parse_err = |msg: String| Error::Parse { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let keyword = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        let want = |n: usize| -> Result<()> {
            if rest.len() == n {
                Ok(())
            } else {
                Err(parse_err(format!(
                    "`{keyword}` expects {n} fields, got {}",
                    rest.len()
                )))
            }
        };
        let node_field = |s: &str| -> Result<usize> {
            s.parse::<usize>()
                .map_err(|e| parse_err(format!("bad node id `{s}`: {e}")))
        };
        let value_field = |s: &str| -> Result<T> {
            let v: f64 = s
                .parse()
                .map_err(|e| parse_err(format!("bad value `{s}`: {e}")))?;
            Ok(real(v))
        };

        match keyword {
            "nodes" => {
                want(1)?;
                if n_nodes.is_some() {
                    return Err(parse_err("duplicate `nodes` line".into()));
                }
                let n = node_field(rest[0])?;
                n_nodes = Some(n);
                q = vec![None; n];
            }
            "link" => {
                want(4)?;
                links.push((
                    node_field(rest[0])?,
                    node_field(rest[1])?,
                    value_field(rest[2])?,
                    value_field(rest[3])?,
                ));
            }
            "q" => {
                want(2)?;
                let node = node_field(rest[0])?;
                if node >= q.len() {
                    return Err(parse_err(format!("q for unknown node {node}")));
                }
                q[node] = Some(value_field(rest[1])?);
            }
            "terminal" => {
                want(1)?;
                terminals.push(node_field(rest[0])?);
            }
            other => {
                return Err(parse_err(format!("unknown keyword `{other}`")));
            }
        }
    }

    let n = n_nodes.ok_or(Error::Parse {
        line: 0,
        msg: "missing `nodes` line".into(),
    })?;
    let q: Vec<T> = q
        .into_iter()
        .enumerate()
        .map(|(node, v)| {
            v.ok_or(Error::Parse {
                line: 0,
                msg: format!("missing q line for node {node}"),
            })
        })
        .collect::<Result<_>>()?;
    Network::new(n, links, q, terminals)
}
