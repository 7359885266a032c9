//! Brute-force generation of unlabeled free trees with bounded degree.
//!
//! Trees on `n` nodes are grown from those on `n - 1` nodes by hanging a leaf
//! on every node that still has spare degree, then deduplicated by canonical
//! form. The canonical form is a level sequence: the tree is rooted at its
//! center (or, for a bicentral tree, at whichever bicenter gives the larger
//! sequence), children are ordered by decreasing subtree sequence, and the
//! node depths are listed in preorder.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`generate_free_trees`] and [`oracle_census`].
pub const FEASIBILITY_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTree {
    levels: Vec<u32>,
    max_degree: usize,
    diameter: usize,
}

impl CanonicalTree {
    /// Canonicalizes a labeled tree on nodes `0..n` given by its edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a tree needs at least one node".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "{} edges cannot form a tree on {n} nodes",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!("bad edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if bfs(&adj, 0).iter().any(|d| d.is_none()) {
            return Err(Error::InvalidArgument("edges do not connect all nodes".into()));
        }
        Ok(Self::from_adjacency(&adj))
    }

    fn from_adjacency(adj: &[Vec<usize>]) -> Self {
        let levels = centers(adj)
            .into_iter()
            .map(|c| rooted_levels(adj, c))
            .max()
            .expect("a tree has a center");
        CanonicalTree {
            levels,
            max_degree: adj.iter().map(Vec::len).max().unwrap_or(0),
            diameter: diameter(adj),
        }
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// Preorder depths from the canonical root.
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Parent of each node in canonical preorder numbering; the root has `None`.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut last_at_depth: Vec<usize> = Vec::new();
        self.levels
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let d = d as usize;
                last_at_depth.truncate(d);
                let parent = d.checked_sub(1).map(|p| last_at_depth[p]);
                last_at_depth.push(i);
                parent
            })
            .collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parents()
            .into_iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)))
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for (p, c) in self.edges() {
            adj[p].push(c);
            adj[c].push(p);
        }
        adj
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Longest path length in edges.
    pub fn diameter(&self) -> usize {
        self.diameter
    }
}

fn bfs(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued nodes are reached");
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Two sweeps: the farthest node from anywhere is an end of a longest path.
fn diameter(adj: &[Vec<usize>]) -> usize {
    let farthest = |from: usize| {
        bfs(adj, from)
            .into_iter()
            .enumerate()
            .max_by_key(|&(i, d)| (d, std::cmp::Reverse(i)))
            .map(|(i, d)| (i, d.unwrap_or(0)))
            .expect("nonempty tree")
    };
    let (end, _) = farthest(0);
    farthest(end).1
}

/// The one or two nodes left after repeatedly stripping all leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &v in &adj[leaf] {
                degree[v] -= 1;
                if degree[v] == 1 {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_levels(adj: &[Vec<usize>], root: usize) -> Vec<u32> {
    fn walk(adj: &[Vec<usize>], v: usize, parent: Option<usize>, depth: u32) -> Vec<u32> {
        let mut children: Vec<Vec<u32>> = adj[v]
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| walk(adj, c, Some(v), depth + 1))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        out.push(depth);
        for c in children {
            out.extend(c);
        }
        out
    }
    walk(adj, root, None, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterKind {
    Centered,
    Bicentered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterClass {
    pub kind: CenterKind,
    pub diameter: usize,
}

/// Classifies by diameter parity: even diameters have a single center.
pub fn classify(t: &CanonicalTree) -> CenterClass {
    let diameter = diameter(&t.adjacency());
    let kind = if diameter.is_multiple_of(2) {
        CenterKind::Centered
    } else {
        CenterKind::Bicentered
    };
    CenterClass { kind, diameter }
}

fn check_feasible(n: usize) -> Result<()> {
    if n > FEASIBILITY_LIMIT {
        return Err(Error::ResourceLimit {
            n,
            limit: FEASIBILITY_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// Grows every tree size from 1 to `max_n` in one pass. `max_degree = None`
/// means no bound. Entry `i` holds the trees on `i + 1` nodes, sorted.
pub fn generate_up_to(max_n: usize, max_degree: Option<usize>) -> Result<Vec<Vec<CanonicalTree>>> {
    check_feasible(max_n)?;
    let bound = max_degree.unwrap_or(usize::MAX);
    let mut out = vec![vec![CanonicalTree::from_adjacency(&[Vec::new()])]];
    for _ in 2..=max_n {
        let prev = out.last().expect("seeded");
        let mut next = BTreeSet::new();
        for tree in prev {
            let adj = tree.adjacency();
            let leaf = adj.len();
            for v in 0..adj.len() {
                if adj[v].len() >= bound {
                    continue;
                }
                let mut grown = adj.clone();
                grown[v].push(leaf);
                grown.push(vec![v]);
                next.insert(CanonicalTree::from_adjacency(&grown));
            }
        }
        out.push(next.into_iter().collect());
    }
    Ok(out)
}

/// One representative per isomorphism class of `n`-node trees with every
/// degree at most `max_degree`.
pub fn generate_free_trees(n: usize, max_degree: Option<usize>) -> Result<Vec<CanonicalTree>> {
    Ok(generate_up_to(n, max_degree)?.pop().expect("n >= 1"))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleCensus {
    pub centered: u64,
    pub bicentered: u64,
    pub per_diameter: BTreeMap<usize, u64>,
}

impl OracleCensus {
    pub fn total(&self) -> u64 {
        self.centered + self.bicentered
    }

    fn tally(trees: &[CanonicalTree]) -> Self {
        let mut census = OracleCensus::default();
        for t in trees {
            let class = classify(t);
            match class.kind {
                CenterKind::Centered => census.centered += 1,
                CenterKind::Bicentered => census.bicentered += 1,
            }
            *census.per_diameter.entry(class.diameter).or_insert(0) += 1;
        }
        census
    }
}

pub fn oracle_census(n: usize, max_degree: Option<usize>) -> Result<OracleCensus> {
    Ok(OracleCensus::tally(&generate_free_trees(n, max_degree)?))
}

/// [`oracle_census`] for every `n` in `1..=max_n`, sharing the generation work.
pub fn oracle_census_up_to(max_n: usize, max_degree: Option<usize>) -> Result<Vec<OracleCensus>> {
    Ok(generate_up_to(max_n, max_degree)?
        .iter()
        .map(|trees| OracleCensus::tally(trees))
        .collect())
}
