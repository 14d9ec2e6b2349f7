//! Structural checks on the labelled tree `Γ(π, ρ)` of a meander whose top
//! is a cyclic interval partition.

use crate::error::{Error, Result};
use crate::meander::is_meander;
use crate::nc::{check_same, NcPartition};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Black,
    White,
}

struct Gamma<'a> {
    pi: &'a NcPartition,
    rho: &'a NcPartition,
}

impl Gamma<'_> {
    /// Labels of the edges of the component reached by crossing edge `e`
    /// from its `from`-coloured end, edge `e` excluded.
    fn beyond(&self, e: usize, from: Side) -> Vec<usize> {
        let n = self.pi.n();
        let mut used = vec![false; n + 1];
        used[e] = true;
        let mut out = Vec::new();
        // Stack of (vertex colour, block index) still to expand.
        let start = match from {
            Side::Black => (Side::White, self.rho.block_of(e)),
            Side::White => (Side::Black, self.pi.block_of(e)),
        };
        let mut stack = vec![start];
        while let Some((side, block)) = stack.pop() {
            let labels = match side {
                Side::Black => &self.pi.blocks()[block],
                Side::White => &self.rho.blocks()[block],
            };
            for &f in labels {
                if used[f] {
                    continue;
                }
                used[f] = true;
                out.push(f);
                stack.push(match side {
                    Side::Black => (Side::White, self.rho.block_of(f)),
                    Side::White => (Side::Black, self.pi.block_of(f)),
                });
            }
        }
        out
    }
}

/// Whether the sets, read in the given order, are consecutive runs of
/// `1, ..., n` after some cyclic shift. Empty sets are ignored.
fn ordered_up_to_shift(chunks: &[Vec<usize>], n: usize) -> bool {
    (0..n).any(|r| {
        let mut next = 0;
        chunks.iter().filter(|c| !c.is_empty()).all(|c| {
            let mut shifted: Vec<usize> = c.iter().map(|&x| (x + n - 1 - r) % n).collect();
            shifted.sort_unstable();
            let ok = shifted.iter().enumerate().all(|(k, &x)| x == next + k);
            next += shifted.len();
            ok
        })
    })
}

fn check_input(pi: &NcPartition, rho: &NcPartition) -> Result<()> {
    check_same(pi, rho)?;
    if !pi.is_cyclic_interval() || !is_meander(pi, rho)? {
        return Err(Error::Domain("expects a meander with cyclic interval top".into()));
    }
    Ok(())
}

/// Labels of a cyclic interval block, starting at its cyclic first element.
fn cyclic_run(block: &[usize], n: usize) -> Vec<usize> {
    let start = if block.len() == n {
        0
    } else {
        (0..block.len())
            .find(|&k| {
                let prev = if block[k] == 1 { n } else { block[k] - 1 };
                !block.contains(&prev)
            })
            .unwrap()
    };
    (0..block.len()).map(|k| block[(start + k) % block.len()]).collect()
}

/// At every black vertex with edges `e_1, ..., e_k` in counterclockwise
/// order from the start of its interval, the edge sets
/// `{e_1..e_k}, E(T_{e_k}), ..., E(T_{e_1})` are consecutive cyclic runs.
pub fn check_black_vertex_order(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    check_input(pi, rho)?;
    let g = Gamma { pi, rho };
    let n = pi.n();
    Ok(pi.blocks().iter().all(|block| {
        let edges = cyclic_run(block, n);
        let mut chunks = vec![edges.clone()];
        chunks.extend(edges.iter().rev().map(|&e| g.beyond(e, Side::Black)));
        ordered_up_to_shift(&chunks, n)
    }))
}

/// At every white vertex with edges `e_1, ..., e_k` in clockwise order, the
/// sets `E(T_{e_i}) ∪ {e_i}` are consecutive cyclic runs in that order.
pub fn check_white_vertex_order(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    check_input(pi, rho)?;
    let g = Gamma { pi, rho };
    let n = pi.n();
    Ok(rho.blocks().iter().all(|block| {
        let chunks: Vec<Vec<usize>> = block
            .iter()
            .map(|&e| {
                let mut c = g.beyond(e, Side::White);
                c.push(e);
                c
            })
            .collect();
        ordered_up_to_shift(&chunks, n)
    }))
}
