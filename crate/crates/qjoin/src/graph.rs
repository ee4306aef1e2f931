//! Simple graphs and multigraphs with edge multiplicities in {0, 1, 2}.
//!
//! A multiplicity-2 edge is a digon: two parallel edges between one vertex
//! pair. Digons contribute 2 to each endpoint's degree and appear as entry 2
//! in the adjacency matrix. Loops and multiplicities above 2 are rejected.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Maximum edge multiplicity supported.
pub const MAX_MULTIPLICITY: u8 = 2;

/// An undirected multigraph on `n` vertices stored as a dense symmetric
/// multiplicity matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u8>,
}

/// Atom kinds for [`build_atom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    Cycle,
    Path,
    Complete,
    Empty,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            adj: vec![0; n * n],
        }
    }

    /// Builds from a full multiplicity matrix, validating symmetry, zero
    /// diagonal, and the multiplicity cap.
    pub fn from_adj(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Multigraph::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Domain(format!(
                    "row {i} has length {} in a {n}-vertex graph",
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 0 {
                    return Err(Error::Domain(format!("loop at vertex {i}")));
                }
                if m > MAX_MULTIPLICITY {
                    return Err(Error::Domain(format!(
                        "multiplicity {m} at ({i},{j}) exceeds {MAX_MULTIPLICITY}"
                    )));
                }
                if rows[j][i] != m {
                    return Err(Error::Domain(format!("asymmetric entries at ({i},{j})")));
                }
                g.adj[i * n + j] = m;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count; a digon counts as two edges.
    pub fn m(&self) -> usize {
        let mut m = 0usize;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m += self.adj[i * self.n + j] as usize;
            }
        }
        m
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.adj[u * self.n + v]
    }

    /// Raises the multiplicity of `uv` by `by`, capped at 2.
    pub fn add_edge(&mut self, u: usize, v: usize, by: u8) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "edge ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Domain(format!("loop at vertex {u}")));
        }
        let cur = self.adj[u * self.n + v];
        if cur + by > MAX_MULTIPLICITY {
            return Err(Error::Domain(format!(
                "multiplicity {} at ({u},{v}) exceeds {MAX_MULTIPLICITY}",
                cur + by
            )));
        }
        self.adj[u * self.n + v] += by;
        self.adj[v * self.n + u] += by;
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).map(|j| self.adj[v * self.n + j] as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// True when every multiplicity is at most 1.
    pub fn is_simple(&self) -> bool {
        self.adj.iter().all(|&m| m <= 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for j in 0..self.n {
                if self.adj[v * self.n + j] > 0 && !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.n
    }

    /// Signless Laplacian Q = D + A as an integer matrix.
    pub fn q_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                let d = self.degree(i) as i64;
                (0..self.n)
                    .map(|j| {
                        let a = self.adj[i * self.n + j] as i64;
                        if i == j {
                            d
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Q = D + A as floating point, for the numeric eigensolvers.
    pub fn q_matrix_f64(&self) -> Vec<Vec<f64>> {
        self.q_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as f64).collect())
            .collect()
    }

    /// Removes one parallel edge from `uv` (multiplicity decreases by 1).
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "edge ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        if self.adj[u * self.n + v] == 0 {
            return Err(Error::Domain(format!("edge ({u},{v}) absent")));
        }
        let mut g = self.clone();
        g.adj[u * self.n + v] -= 1;
        g.adj[v * self.n + u] -= 1;
        Ok(g)
    }

    /// Deletes vertex `v` together with all incident edges.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::Domain(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Multigraph::empty(self.n - 1);
        for (i, &oi) in keep.iter().enumerate() {
            for (j, &oj) in keep.iter().enumerate() {
                g.adj[i * g.n + j] = self.adj[oi * self.n + oj];
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the listed vertices, in the listed order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Multigraph::empty(vertices.len());
        for (i, &oi) in vertices.iter().enumerate() {
            if oi >= self.n {
                return Err(Error::Domain(format!("vertex {oi} out of range")));
            }
            for (j, &oj) in vertices.iter().enumerate() {
                if i != j {
                    g.adj[i * g.n + j] = self.adj[oi * self.n + oj];
                }
            }
        }
        Ok(g)
    }

    /// Edge list with multiplicities, each unordered pair once.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let m = self.adj[i * self.n + j];
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }
}

/// Builds one of the atomic graphs C_n, P_n, K_n, or the edgeless graph.
///
/// `(Cycle, 2)` yields the digon. `(Path, 1)`, `(Complete, 1)` and
/// `(Empty, 1)` are all the one-vertex graph.
pub fn build_atom(kind: AtomKind, size: usize) -> Result<Multigraph> {
    if size < 1 {
        return Err(Error::Domain("atom size must be at least 1".into()));
    }
    let mut g = Multigraph::empty(size);
    match kind {
        AtomKind::Cycle => {
            if size < 2 {
                return Err(Error::Domain("cycle needs at least 2 vertices".into()));
            }
            if size == 2 {
                g.add_edge(0, 1, 2)?;
            } else {
                for v in 0..size {
                    g.add_edge(v, (v + 1) % size, 1)?;
                }
            }
        }
        AtomKind::Path => {
            for v in 1..size {
                g.add_edge(v - 1, v, 1)?;
            }
        }
        AtomKind::Complete => {
            for u in 0..size {
                for v in (u + 1)..size {
                    g.add_edge(u, v, 1)?;
                }
            }
        }
        AtomKind::Empty => {}
    }
    Ok(g)
}

/// Block-diagonal disjoint union.
pub fn disjoint_union(a: &Multigraph, b: &Multigraph) -> Multigraph {
    let n = a.n + b.n;
    let mut g = Multigraph::empty(n);
    for i in 0..a.n {
        for j in 0..a.n {
            g.adj[i * n + j] = a.adj[i * a.n + j];
        }
    }
    for i in 0..b.n {
        for j in 0..b.n {
            g.adj[(a.n + i) * n + (a.n + j)] = b.adj[i * b.n + j];
        }
    }
    g
}

/// Joins a single new apex vertex (index n, placed last) to every vertex of `g`.
pub fn apex_join(g: &Multigraph) -> Multigraph {
    let n = g.n + 1;
    let mut out = Multigraph::empty(n);
    for i in 0..g.n {
        for j in 0..g.n {
            out.adj[i * n + j] = g.adj[i * g.n + j];
        }
    }
    for v in 0..g.n {
        out.adj[v * n + (n - 1)] = 1;
        out.adj[(n - 1) * n + v] = 1;
    }
    out
}

/// Number of triangles, trace(A^3)/6. Simple graphs only.
pub fn triangle_count(g: &Multigraph) -> Result<usize> {
    if !g.is_simple() {
        return Err(Error::Mode("triangle count requires a simple graph".into()));
    }
    let n = g.n;
    let mut count = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.adj[i * n + j] == 0 {
                continue;
            }
            for k in (j + 1)..n {
                if g.adj[j * n + k] > 0 && g.adj[i * n + k] > 0 {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Histogram degree -> count. With `exclude_max`, one fixed maximum-degree
/// vertex (the lowest-indexed one) is left out, so the counts sum to n - 1.
pub fn degree_histogram(g: &Multigraph, exclude_max: bool) -> Result<BTreeMap<usize, usize>> {
    if exclude_max && g.n == 0 {
        return Err(Error::Domain(
            "cannot exclude a maximum-degree vertex of the empty graph".into(),
        ));
    }
    let degrees = g.degrees();
    let skip = if exclude_max {
        let max = *degrees.iter().max().unwrap();
        degrees.iter().position(|&d| d == max)
    } else {
        None
    };
    let mut hist = BTreeMap::new();
    for (v, &d) in degrees.iter().enumerate() {
        if Some(v) == skip {
            continue;
        }
        *hist.entry(d).or_insert(0) += 1;
    }
    Ok(hist)
}
