//! Maximum bipartite matching by augmenting paths, with a Hall-deficient
//! witness set when the matching does not saturate the left side.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// `(left, right)` pairs sorted by left vertex.
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

/// Left-to-right adjacency lists for a bipartite graph.
#[derive(Debug, Clone)]
pub struct Bipartite {
    right_count: usize,
    adj: Vec<Vec<usize>>,
}

impl Bipartite {
    pub fn new(left_count: usize, right_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); left_count];
        for &(l, r) in edges {
            if l >= left_count {
                return Err(Error::BadVertex { vertex: l, n: left_count });
            }
            if r >= right_count {
                return Err(Error::BadVertex { vertex: r, n: right_count });
            }
            adj[l].push(r);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Bipartite { right_count, adj })
    }

    pub(crate) fn from_adjacency(right_count: usize, adj: Vec<Vec<usize>>) -> Self {
        Bipartite { right_count, adj }
    }

    pub fn left_count(&self) -> usize {
        self.adj.len()
    }

    /// Shuffles every candidate list with a seeded generator.
    pub fn shuffle_candidates(&mut self, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for list in &mut self.adj {
            list.shuffle(&mut rng);
        }
    }

    /// Kuhn's algorithm: left vertices in ascending order, candidates in
    /// adjacency-list order, a free candidate taken before any rerouting.
    pub fn max_matching(&self) -> MatchingState {
        let mut state = MatchingState {
            left_mate: vec![None; self.left_count()],
            right_mate: vec![None; self.right_count],
        };
        for u in 0..self.left_count() {
            let mut visited = vec![false; self.right_count];
            self.augment(u, &mut visited, &mut state);
        }
        state
    }

    fn augment(&self, u: usize, visited: &mut [bool], state: &mut MatchingState) -> bool {
        if let Some(&r) = self.adj[u].iter().find(|&&r| state.right_mate[r].is_none()) {
            visited[r] = true;
            state.left_mate[u] = Some(r);
            state.right_mate[r] = Some(u);
            return true;
        }
        for &r in &self.adj[u] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match state.right_mate[r] {
                None => true,
                Some(w) => self.augment(w, visited, state),
            };
            if free {
                state.left_mate[u] = Some(r);
                state.right_mate[r] = Some(u);
                return true;
            }
        }
        false
    }

    /// Left vertices reachable by alternating paths from unmatched left
    /// vertices. For a maximum matching, its neighborhood is smaller than
    /// itself by the number of unmatched left vertices.
    pub fn deficient_set(&self, state: &MatchingState) -> Option<Vec<usize>> {
        let mut in_set = vec![false; self.left_count()];
        let mut seen_right = vec![false; self.right_count];
        let mut stack: Vec<usize> = (0..self.left_count())
            .filter(|&u| state.left_mate[u].is_none())
            .collect();
        if stack.is_empty() {
            return None;
        }
        for &u in &stack {
            in_set[u] = true;
        }
        while let Some(u) = stack.pop() {
            for &r in &self.adj[u] {
                if seen_right[r] {
                    continue;
                }
                seen_right[r] = true;
                let w = state.right_mate[r].expect("maximum matching has no augmenting path");
                if !in_set[w] {
                    in_set[w] = true;
                    stack.push(w);
                }
            }
        }
        Some((0..self.left_count()).filter(|&u| in_set[u]).collect())
    }

    /// Size of the union of neighborhoods of `subset`.
    pub fn neighborhood_size(&self, subset: &[usize]) -> usize {
        let mut seen = vec![false; self.right_count];
        subset
            .iter()
            .flat_map(|&u| &self.adj[u])
            .filter(|&&r| !std::mem::replace(&mut seen[r], true))
            .count()
    }
}

#[derive(Debug, Clone)]
pub struct MatchingState {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
}

impl MatchingState {
    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn to_matching(&self) -> Matching {
        Matching {
            pairs: self
                .left_mate
                .iter()
                .enumerate()
                .filter_map(|(l, r)| r.map(|r| (l, r)))
                .collect(),
        }
    }
}

pub fn bipartite_max_matching(
    left_count: usize,
    right_count: usize,
    edges: &[(usize, usize)],
) -> Result<Matching> {
    Ok(Bipartite::new(left_count, right_count, edges)?
        .max_matching()
        .to_matching())
}
