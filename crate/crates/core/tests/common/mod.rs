//! Brute-force reference counts that share no code with the library.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

/// Isomorphism class data for one free tree found by [`free_trees_by_parent_arrays`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassInfo {
    pub max_degree: usize,
    pub diameter: usize,
}

/// Every labeled tree on `0..n` in which node `i > 0` hangs from some node
/// `< i` covers every isomorphism class (label any tree in BFS order). The
/// classes are separated by a centroid-rooted parenthesis encoding.
pub fn free_trees_by_parent_arrays(n: usize) -> HashMap<String, ClassInfo> {
    let mut classes = HashMap::new();
    let mut parents = vec![0usize; n];
    fn rec(i: usize, n: usize, parents: &mut Vec<usize>, classes: &mut HashMap<String, ClassInfo>) {
        if i == n {
            let mut adj = vec![Vec::new(); n];
            for v in 1..n {
                adj[v].push(parents[v]);
                adj[parents[v]].push(v);
            }
            classes.entry(centroid_code(&adj)).or_insert_with(|| ClassInfo {
                max_degree: adj.iter().map(Vec::len).max().unwrap_or(0),
                diameter: all_pairs_diameter(&adj),
            });
            return;
        }
        for p in 0..i {
            parents[i] = p;
            rec(i + 1, n, parents, classes);
        }
    }
    if n > 0 {
        rec(1, n, &mut parents, &mut classes);
    }
    classes
}

fn centroid_code(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let centroids: Vec<usize> = (0..n)
        .filter(|&v| adj[v].iter().all(|&u| component_size(adj, u, v) * 2 <= n))
        .collect();
    centroids.into_iter().map(|c| parens(adj, c, usize::MAX)).min().unwrap()
}

fn component_size(adj: &[Vec<usize>], start: usize, blocked: usize) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[blocked] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    count
}

fn parens(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| parens(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn all_pairs_diameter(adj: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &u in &adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
        best = best.max(dist.into_iter().max().unwrap());
    }
    best
}

/// Unordered rooted tree with canonically sorted children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Rooted(Vec<Rooted>);

impl Rooted {
    fn height(&self) -> usize {
        self.0.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    /// All trees obtained by adding one leaf under a node with fewer than
    /// `max_children` children.
    fn grow(&self, max_children: usize) -> Vec<Rooted> {
        let mut out = Vec::new();
        if self.0.len() < max_children {
            let mut kids = self.0.clone();
            kids.push(Rooted(Vec::new()));
            kids.sort();
            out.push(Rooted(kids));
        }
        for i in 0..self.0.len() {
            for grown in self.0[i].grow(max_children) {
                let mut kids = self.0.clone();
                kids[i] = grown;
                kids.sort();
                out.push(Rooted(kids));
            }
        }
        out
    }
}

/// `counts[n][h]`: rooted trees with `n` nodes, at most `max_children` sons
/// per node, and height exactly `h`, for `1 <= n <= max_n`.
pub fn rooted_trees_by_height(max_children: usize, max_n: usize) -> Vec<Vec<u64>> {
    let mut counts = vec![vec![0u64; max_n + 1]; max_n + 1];
    let mut level = vec![Rooted(Vec::new())];
    for row in counts.iter_mut().skip(1) {
        for t in &level {
            row[t.height()] += 1;
        }
        let mut next: Vec<Rooted> = level.iter().flat_map(|t| t.grow(max_children)).collect();
        next.sort();
        next.dedup();
        level = next;
    }
    counts
}
