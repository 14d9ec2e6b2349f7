use serde::Serialize;

use super::tree::{BlackNode, FatTree, WhiteNode};
use crate::error::{Error, Result};
use crate::meander::is_meander;
use crate::nc::{check_same, NcPartition};

fn check_meander(pi: &NcPartition, rho: &NcPartition) -> Result<()> {
    check_same(pi, rho)?;
    if !is_meander(pi, rho)? {
        return Err(Error::Domain(format!("M({pi}, {rho}) is not a meander")));
    }
    Ok(())
}

/// The tree `Γ(π, ρ)` of a meander with interval top, with edge labels
/// erased. The root is the block of `π` containing 1 and every black
/// vertex keeps its smallest label as the special edge.
pub fn forget(pi: &NcPartition, rho: &NcPartition) -> Result<FatTree> {
    if !pi.is_interval() {
        return Err(Error::Domain(format!("{pi} is not an interval partition")));
    }
    check_meander(pi, rho)?;
    let root_block = pi.block_containing(1);
    let root = BlackNode {
        special: 0,
        children: root_block.iter().map(|&e| white_via(pi, rho, e)).collect(),
    };
    Ok(FatTree::new_unchecked(root))
}

/// White vertex of `ρ` entered through edge `e`.
fn white_via(pi: &NcPartition, rho: &NcPartition, e: usize) -> WhiteNode {
    let block = rho.block_containing(e);
    let after = block.iter().filter(|&&f| f > e);
    let before = block.iter().filter(|&&f| f < e);
    WhiteNode {
        children: after.chain(before).map(|&f| black_via(pi, rho, f)).collect(),
    }
}

/// Non-root black vertex (an interval `[s, t]` of `π`) entered through `f`.
fn black_via(pi: &NcPartition, rho: &NcPartition, f: usize) -> BlackNode {
    let block = pi.block_containing(f);
    let (s, t) = (block[0], block[block.len() - 1]);
    let special = if f == s { 0 } else { t - f + 1 };
    let labels = (f + 1..=t).chain(s..f);
    BlackNode {
        special,
        children: labels.map(|g| white_via(pi, rho, g)).collect(),
    }
}

/// Flattened tree: black vertices in preorder (root first), with each
/// black vertex's incident edges listed by the white vertex at the other end.
struct Flat {
    /// Per black vertex: parent white (none for the root), child whites, special.
    blacks: Vec<(Option<usize>, Vec<usize>, usize)>,
    /// Per white vertex: child blacks.
    whites: Vec<Vec<usize>>,
}

impl Flat {
    fn new(t: &FatTree) -> Self {
        let mut flat = Flat {
            blacks: Vec::new(),
            whites: Vec::new(),
        };
        flat.add_black(t.root(), None);
        flat
    }

    fn add_black(&mut self, b: &BlackNode, parent: Option<usize>) -> usize {
        let id = self.blacks.len();
        self.blacks.push((parent, Vec::new(), b.special));
        for w in &b.children {
            let wid = self.whites.len();
            self.whites.push(Vec::new());
            self.blacks[id].1.push(wid);
            for c in &w.children {
                let cid = self.add_black(c, Some(wid));
                self.whites[wid].push(cid);
            }
        }
        id
    }

    /// Incident whites of a black vertex in the order of its label interval,
    /// starting at the special edge.
    fn interval_order(&self, b: usize) -> Vec<usize> {
        let (parent, children, special) = &self.blacks[b];
        match parent {
            None => children.clone(),
            Some(p) => {
                let incident: Vec<usize> = std::iter::once(*p).chain(children.iter().copied()).collect();
                let k = incident.len();
                (0..k).map(|i| incident[(special + i) % k]).collect()
            }
        }
    }

    fn order_white(&self, w: usize, out: &mut Vec<usize>) {
        for &c in &self.whites[w] {
            self.order_black(c, out);
        }
    }

    fn order_black(&self, b: usize, out: &mut Vec<usize>) {
        let (parent, _, _) = &self.blacks[b];
        let seq = self.interval_order(b);
        match parent {
            None => {
                out.push(b);
                for &w in seq.iter().rev() {
                    self.order_white(w, out);
                }
            }
            Some(p) => {
                let j = seq.iter().position(|w| w == p).unwrap();
                for &w in seq[..j].iter().rev() {
                    self.order_white(w, out);
                }
                out.push(b);
                for &w in seq[j + 1..].iter().rev() {
                    self.order_white(w, out);
                }
            }
        }
    }
}

/// The order of the black vertices (identified by preorder index, root = 0)
/// along `{1, ..., n}` that [`recover`] reconstructs.
pub fn black_order(t: &FatTree) -> Vec<usize> {
    let flat = Flat::new(t);
    let mut out = Vec::with_capacity(flat.blacks.len());
    flat.order_black(0, &mut out);
    out
}

/// Inverse of [`forget`]: labels the edges of `t` and returns `(π, ρ)` with
/// `π` an interval partition and `M(π, ρ)` a meander.
pub fn recover(t: &FatTree) -> Result<(NcPartition, NcPartition)> {
    let flat = Flat::new(t);
    let mut order = Vec::with_capacity(flat.blacks.len());
    flat.order_black(0, &mut order);
    let n = t.n_edges();
    let mut pi_labels = Vec::with_capacity(n);
    let mut rho_labels = Vec::with_capacity(n);
    for &b in &order {
        for w in flat.interval_order(b) {
            pi_labels.push(b);
            rho_labels.push(w);
        }
    }
    let pi = NcPartition::from_labels(&pi_labels)?;
    let rho = NcPartition::from_labels(&rho_labels)?;
    Ok((pi, rho))
}

/// A tree for a meander whose top is a rotated interval partition: the
/// underlying [`FatTree`] of the rotated pair, plus the index of the root
/// child that carries the label 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicFatTree {
    #[serde(serialize_with = "as_text")]
    pub tree: FatTree,
    pub one_edge: usize,
}

fn as_text<S: serde::Serializer>(t: &FatTree, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(t)
}

impl CyclicFatTree {
    pub fn new(tree: FatTree, one_edge: usize) -> Result<Self> {
        let single_black = tree.root_degree() == tree.n_edges();
        if one_edge >= tree.root_degree() || (single_black && one_edge != 0) {
            return Err(Error::Validation(format!(
                "label-1 mark {one_edge} invalid for root degree {}",
                tree.root_degree()
            )));
        }
        Ok(CyclicFatTree { tree, one_edge })
    }
}

/// First element of a cyclic interval block, read cyclically (1 for `1_n`).
fn cyclic_start(block: &[usize], n: usize) -> usize {
    if block.len() == n {
        return 1;
    }
    *block
        .iter()
        .find(|&&e| {
            let prev = if e == 1 { n } else { e - 1 };
            !block.contains(&prev)
        })
        .expect("cyclic interval")
}

/// [`forget`] for tops that are rotations of interval partitions: the pair
/// is rotated so the root block starts at 1, and the original position of
/// label 1 is kept as an extra mark at the root.
pub fn forget_cyclic(pi: &NcPartition, rho: &NcPartition) -> Result<CyclicFatTree> {
    if !pi.is_cyclic_interval() {
        return Err(Error::Domain(format!("{pi} is not a cyclic interval partition")));
    }
    check_meander(pi, rho)?;
    let n = pi.n();
    let s = cyclic_start(pi.block_containing(1), n);
    let shift = (n + 1 - s) % n;
    let tree = forget(&pi.rotate(shift), &rho.rotate(shift))?;
    CyclicFatTree::new(tree, shift)
}

/// Inverse of [`forget_cyclic`].
pub fn recover_cyclic(t: &CyclicFatTree) -> Result<(NcPartition, NcPartition)> {
    let (pi, rho) = recover(&t.tree)?;
    let n = pi.n();
    let back = (n - t.one_edge) % n;
    Ok((pi.rotate(back), rho.rotate(back)))
}
