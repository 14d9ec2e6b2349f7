use super::pairing::doubling;
use crate::error::Result;
use crate::nc::{check_same, NcPartition, Permutation};

/// Number of components of `M(π, ρ)`, computed as `#cycles(P_π · P_ρ^{-1})`.
pub fn component_count_cycles(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    check_same(pi, rho)?;
    Ok(Prepared::new(pi).components(&Prepared::new(rho), &mut Vec::new()))
}

/// Number of components of `M(π, ρ)`, computed by walking the closed curves.
///
/// `∂(π)` is drawn above the line and `∂(ρ)` below it, on the points
/// `1, ..., 2n` numbered left to right. A curve alternates between a top arc
/// and a bottom arc; every point lies on exactly one curve.
pub fn component_count_arcs(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    check_same(pi, rho)?;
    let top = doubling(pi);
    let bottom = doubling(rho);
    let (top, bottom) = (top.mates0(), bottom.mates0());
    let mut seen = vec![false; top.len()];
    let mut count = 0;
    for start in 0..top.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = top[p];
            seen[q] = true;
            p = bottom[q];
            if p == start {
                break;
            }
        }
    }
    Ok(count)
}

/// Distance `d_H(π, ρ)` in the Hasse diagram of NC(n), equal to
/// `n − #M(π, ρ)`.
pub fn hasse_distance(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    Ok(pi.n() - component_count_cycles(pi, rho)?)
}

/// The upper bound `b(π, ρ) = |π| + |ρ| − 2|π ∨ ρ|` on `d_H`, using the
/// join of NC(n).
pub fn distance_bound_b(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    let join = pi.join_nc(rho)?;
    Ok(pi.num_blocks() + rho.num_blocks() - 2 * join.num_blocks())
}

/// `|π| + |ρ| − 2|π ∨̃ ρ|` with the join taken among all partitions.
pub fn distance_via_join_all(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    let join = pi.join_all(rho)?;
    Ok(pi.num_blocks() + rho.num_blocks() - 2 * join.num_blocks())
}

/// `M(π, ρ)` consists of a single closed curve.
pub fn is_meander(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    Ok(component_count_cycles(pi, rho)? == 1)
}

/// The bipartite graph `Γ(π, ρ)` (blocks of `π` and `ρ` as vertices, one edge
/// per point) is a tree: `|π| + |ρ| = n + 1` and `|π ∨̃ ρ| = 1`.
pub fn gamma_is_tree(pi: &NcPartition, rho: &NcPartition) -> Result<bool> {
    let connected = pi.join_all(rho)?.num_blocks() == 1;
    Ok(connected && pi.num_blocks() + rho.num_blocks() == pi.n() + 1)
}

/// A partition with its permutation `P_π` and inverse precomputed, for
/// repeated component counts in exhaustive scans.
#[derive(Debug, Clone)]
pub(crate) struct Prepared {
    perm: Vec<u32>,
    inv: Vec<u32>,
}

impl Prepared {
    pub(crate) fn new(pi: &NcPartition) -> Self {
        let perm = pi.to_permutation();
        let to_u32 = |p: &Permutation| p.images().iter().map(|&x| (x - 1) as u32).collect();
        Prepared {
            perm: to_u32(&perm),
            inv: to_u32(&perm.inverse()),
        }
    }

    /// `#cycles(P_self · P_other^{-1})`; `seen` is scratch space.
    pub(crate) fn components(&self, other: &Prepared, seen: &mut Vec<bool>) -> usize {
        let n = self.perm.len();
        seen.clear();
        seen.resize(n, false);
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[other.inv[x] as usize] as usize;
            }
        }
        count
    }
}
