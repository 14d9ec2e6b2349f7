use std::collections::{HashMap, VecDeque};

use crate::error::{check_limit, Result};
use crate::nc::{check_same, enumerate_nc, NcPartition, SetPartition};

/// Largest `n` accepted by the breadth-first-search oracle.
pub const BFS_ORACLE_MAX: usize = 8;

fn check_oracle_size(n: usize) -> Result<()> {
    check_limit(n, BFS_ORACLE_MAX, "BFS oracle")
}

/// Partitions covering `pi`: merge two blocks, keep the result if it is
/// still non-crossing.
pub fn upper_covers(pi: &NcPartition) -> Vec<NcPartition> {
    let k = pi.num_blocks();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let labels: Vec<usize> = pi.labels().iter().map(|&l| if l == b { a } else { l }).collect();
            if let Ok(q) = NcPartition::from_labels(&labels) {
                out.push(q);
            }
        }
    }
    out
}

/// Partitions covered by `pi`: split one block into two parts, keep the
/// result if it is still non-crossing.
pub fn lower_covers(pi: &NcPartition) -> Vec<NcPartition> {
    let fresh = pi.num_blocks();
    let mut out = Vec::new();
    for (b, block) in pi.blocks().iter().enumerate() {
        let k = block.len();
        // Subsets of the block without its minimum, moved to a new block.
        for mask in 1u32..(1 << (k - 1)) {
            let mut labels = pi.labels().to_vec();
            for (j, &e) in block[1..].iter().enumerate() {
                if mask >> j & 1 == 1 {
                    labels[e - 1] = fresh;
                }
            }
            debug_assert!(labels.contains(&b));
            let q = SetPartition::from_labels(&labels).expect("n >= 1");
            if let Ok(q) = NcPartition::try_from(q) {
                out.push(q);
            }
        }
    }
    out
}

/// Graph distance in the Hasse diagram, found by breadth-first search
/// through block merges and splits. An independent oracle for
/// [`hasse_distance`](super::hasse_distance), limited to `n <= 8`.
pub fn hasse_distance_bfs(pi: &NcPartition, rho: &NcPartition) -> Result<usize> {
    check_same(pi, rho)?;
    check_oracle_size(pi.n())?;
    let mut dist: HashMap<NcPartition, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(pi.clone(), 0);
    queue.push_back(pi.clone());
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if &x == rho {
            return Ok(d);
        }
        for y in upper_covers(&x).into_iter().chain(lower_covers(&x)) {
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    unreachable!("the Hasse diagram is connected")
}

/// The Hasse diagram `H_n` with all-pairs distances, for `n <= 8`.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    vertices: Vec<NcPartition>,
    index: HashMap<NcPartition, usize>,
    edges: Vec<(usize, usize)>,
    dist: Vec<Vec<u8>>,
}

impl HasseDiagram {
    pub fn new(n: usize) -> Result<Self> {
        check_oracle_size(n)?;
        let vertices: Vec<NcPartition> = enumerate_nc(n)?.collect();
        let index: HashMap<NcPartition, usize> =
            vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for up in upper_covers(v) {
                let j = index[&up];
                adj[i].push(j);
                adj[j].push(i);
                edges.push((i, j));
            }
        }
        let dist = (0..vertices.len())
            .map(|s| {
                let mut d = vec![u8::MAX; vertices.len()];
                d[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if d[y] == u8::MAX {
                            d[y] = d[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                d
            })
            .collect();
        Ok(HasseDiagram {
            vertices,
            index,
            edges,
            dist,
        })
    }

    /// Vertices in [`enumerate_nc`] order.
    pub fn vertices(&self) -> &[NcPartition] {
        &self.vertices
    }

    /// Cover relations as `(lower, upper)` vertex indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, p: &NcPartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Distance between vertex indices.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.dist[i][j] as usize
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> usize {
        self.dist
            .iter()
            .flat_map(|row| row.iter())
            .map(|&d| d as usize)
            .max()
            .unwrap_or(0)
    }
}
