//! Meanders with interval top in bijection with fat-trees.

mod bijection;
mod enumerate;
mod lemmas;
mod tree;

pub use bijection::{black_order, forget, forget_cyclic, recover, recover_cyclic, CyclicFatTree};
pub use enumerate::{enumerate_cyclic_trees, enumerate_trees, MAX_TREE_EDGES};
pub use lemmas::{check_black_vertex_order, check_white_vertex_order};
pub use tree::{BlackNode, FatTree, TreeProfile, WhiteNode};

/// Degree statistics of `t`; see [`FatTree::profile`].
pub fn tree_profile(t: &FatTree) -> TreeProfile {
    t.profile()
}
