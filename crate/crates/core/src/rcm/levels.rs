use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::sparse::SparsePatternCsc;

/// BFS levels `L_0 = {root}, L_1, ...` covering the root's component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStructure {
    root: usize,
    levels: Vec<Vec<usize>>,
}

impl LevelStructure {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Levels in BFS order; each level is sorted by vertex id.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn eccentricity(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn width(&self) -> usize {
        self.levels.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn last_level(&self) -> &[usize] {
        self.levels.last().expect("level structure always has L_0")
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().flatten().copied()
    }
}

/// Rooted level structure of `root` by queue-based BFS.
pub fn bfs_levels(a: &SparsePatternCsc, root: usize) -> Result<LevelStructure> {
    let n = a.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut depth = vec![usize::MAX; n];
    let mut levels: Vec<Vec<usize>> = vec![vec![root]];
    let mut queue = VecDeque::from([root]);
    depth[root] = 0;
    while let Some(v) = queue.pop_front() {
        for u in a.neighbors(v) {
            if depth[u] == usize::MAX {
                let d = depth[v] + 1;
                depth[u] = d;
                if levels.len() == d {
                    levels.push(Vec::new());
                }
                levels[d].push(u);
                queue.push_back(u);
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    Ok(LevelStructure { root, levels })
}
