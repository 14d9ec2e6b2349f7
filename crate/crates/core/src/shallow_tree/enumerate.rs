use super::bijection::CyclicFatTree;
use super::tree::{BlackNode, FatTree, WhiteNode};
use crate::error::{check_limit, Result};

/// Largest edge count accepted by [`enumerate_trees`].
pub const MAX_TREE_EDGES: usize = 12;

/// All sequences of items whose costs (one edge plus the item's own size)
/// add up to `total`; `table[x]` lists the items of size `x`.
fn sequences<T: Clone>(total: usize, table: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut memo: Vec<Vec<Vec<T>>> = vec![vec![Vec::new()]];
    for e in 1..=total {
        let mut out = Vec::new();
        for x in 0..e {
            for first in &table[x] {
                for rest in &memo[e - 1 - x] {
                    let mut seq = Vec::with_capacity(rest.len() + 1);
                    seq.push(first.clone());
                    seq.extend(rest.iter().cloned());
                    out.push(seq);
                }
            }
        }
        memo.push(out);
    }
    memo.pop().unwrap()
}

/// All trees with `n_edges` edges, each exactly once, in a fixed order.
pub fn enumerate_trees(n_edges: usize) -> Result<Vec<FatTree>> {
    check_limit(n_edges, MAX_TREE_EDGES, "enumerate_trees")?;
    // whites[x] / blacks[x]: non-root vertices with x edges below them.
    let mut whites: Vec<Vec<WhiteNode>> = Vec::new();
    let mut blacks: Vec<Vec<BlackNode>> = Vec::new();
    for x in 0..n_edges {
        blacks.push(
            sequences(x, &whites)
                .into_iter()
                .flat_map(|children| {
                    (0..=children.len()).map(move |special| BlackNode {
                        special,
                        children: children.clone(),
                    })
                })
                .collect(),
        );
        whites.push(
            sequences(x, &blacks)
                .into_iter()
                .map(|children| WhiteNode { children })
                .collect(),
        );
    }
    Ok(sequences(n_edges, &whites)
        .into_iter()
        .map(|children| FatTree::new_unchecked(BlackNode { special: 0, children }))
        .collect())
}

/// All trees of the cyclic variant with `n_edges` edges.
pub fn enumerate_cyclic_trees(n_edges: usize) -> Result<Vec<CyclicFatTree>> {
    let mut out = Vec::new();
    for t in enumerate_trees(n_edges)? {
        let marks = if t.root_degree() == n_edges { 1 } else { t.root_degree() };
        for one_edge in 0..marks {
            out.push(CyclicFatTree::new(t.clone(), one_edge)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 6, 21, 80, 322]);
        let all = enumerate_trees(6).unwrap();
        let set: HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|t| t.n_edges() == 6));
        assert!(enumerate_trees(0).is_err());
    }
}
