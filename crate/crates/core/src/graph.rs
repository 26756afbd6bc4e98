//! Voltage graphs, their cyclic coverings, and the Matrix-Tree oracle.
//!
//! Vertex indices are 0-based throughout the library API; the text file
//! format uses 1-based indices and converts on the way in and out.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;

/// Arbitrary-precision spanning-tree count.
pub type BigCount = BigUint;

/// One edge of a voltage graph, stored in a single orientation: traversing
/// `from -> to` picks up `+voltage`, the reverse direction `-voltage`.
/// `from == to` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VoltageEdge {
    pub from: usize,
    pub to: usize,
    pub voltage: i64,
}

impl VoltageEdge {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }
}

/// Base multigraph with an integer voltage on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoltageGraph {
    vertex_count: usize,
    edges: Vec<VoltageEdge>,
}

impl VoltageGraph {
    /// Panics if `vertex_count == 0` or an endpoint is out of range; use the
    /// text parser for untrusted input.
    pub fn new(vertex_count: usize, edges: Vec<VoltageEdge>) -> Self {
        assert!(vertex_count >= 1, "voltage graph needs at least one vertex");
        for e in &edges {
            assert!(
                e.from < vertex_count && e.to < vertex_count,
                "edge endpoint out of range"
            );
        }
        Self { vertex_count, edges }
    }

    /// Convenience constructor from `(from, to, voltage)` triples.
    pub fn from_triples(vertex_count: usize, triples: &[(usize, usize, i64)]) -> Self {
        Self::new(
            vertex_count,
            triples
                .iter()
                .map(|&(from, to, voltage)| VoltageEdge { from, to, voltage })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[VoltageEdge] {
        &self.edges
    }

    /// Same graph with every voltage replaced.
    pub fn with_voltages(&self, voltages: impl IntoIterator<Item = i64>) -> Self {
        let edges = self
            .edges
            .iter()
            .zip(voltages)
            .map(|(e, voltage)| VoltageEdge { voltage, ..*e })
            .collect();
        Self::new(self.vertex_count, edges)
    }

    /// `d(v)`: non-loop incidences plus 2 per loop.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .map(|e| match (e.from == v, e.to == v) {
                (true, true) => 2,
                (true, false) | (false, true) => 1,
                _ => 0,
            })
            .sum()
    }

    /// Underlying multigraph with voltages ignored.
    pub fn base_multigraph(&self) -> MultiGraph {
        let mut m = MultiGraph::new(self.vertex_count);
        for e in &self.edges {
            m.add_edge(e.from, e.to);
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        self.base_multigraph().is_connected()
    }

    /// BFS spanning tree from vertex 0 scanning edges in input order.
    /// Returns per-vertex tree potentials (net voltage along the tree path
    /// from the root) and a flag per edge telling whether it is a tree edge.
    fn bfs_tree(&self) -> Result<(Vec<i64>, Vec<bool>)> {
        let r = self.vertex_count;
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); r];
        for (k, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                incident[e.from].push(k);
                incident[e.to].push(k);
            }
        }
        let mut potential: Vec<Option<i64>> = vec![None; r];
        let mut in_tree = vec![false; self.edges.len()];
        potential[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let pu = potential[u].expect("queued vertices are reached");
            for &k in &incident[u] {
                let e = self.edges[k];
                let (w, step) = if e.from == u {
                    (e.to, e.voltage)
                } else {
                    (e.from, -e.voltage)
                };
                if potential[w].is_none() {
                    potential[w] = Some(pu + step);
                    in_tree[k] = true;
                    queue.push_back(w);
                }
            }
        }
        let potential = potential
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::DisconnectedBase)?;
        Ok((potential, in_tree))
    }

    /// Net voltage of the fundamental cycle of every non-tree edge, in edge
    /// order, each cycle oriented along its edge's stored direction.
    pub fn fundamental_cycle_voltages(&self) -> Result<Vec<i64>> {
        let (pot, in_tree) = self.bfs_tree()?;
        Ok(self
            .edges
            .iter()
            .zip(&in_tree)
            .filter(|(_, &t)| !t)
            .map(|(e, _)| pot[e.from] + e.voltage - pot[e.to])
            .collect())
    }

    /// Checks connectivity and that the fundamental cycle voltages generate
    /// the integers.
    pub fn validate(&self) -> Result<()> {
        let g = self
            .fundamental_cycle_voltages()?
            .into_iter()
            .fold(0i64, |acc, v| acc.gcd(&v));
        match g {
            1 => Ok(()),
            other => Err(Error::GcdNotOne(other.unsigned_abs())),
        }
    }

    /// The `n`-fold cyclic covering: vertex `(i, s)` has index `i * n + s`,
    /// and edge `(i, j, v)` lifts to `(i, s) -- (j, (s + v) mod n)`.
    pub fn build_covering(&self, n: u64) -> Result<MultiGraph> {
        self.validate()?;
        if n < 1 {
            return Err(Error::InvalidN(n));
        }
        let nu = n as usize;
        let mut m = MultiGraph::new(self.vertex_count * nu);
        for e in &self.edges {
            let shift = e.voltage.rem_euclid(n as i64) as usize;
            for s in 0..nu {
                m.add_edge(e.from * nu + s, e.to * nu + (s + shift) % nu);
            }
        }
        Ok(m)
    }

    /// `τ(H)` of the base multigraph.
    pub fn tau_base(&self) -> Result<BigCount> {
        matrix_tree_count(&self.base_multigraph()).map_err(|e| match e {
            Error::Disconnected => Error::DisconnectedBase,
            other => other,
        })
    }
}

/// Undirected multigraph as a symmetric multiplicity matrix. A loop is
/// stored once on the diagonal and contributes 2 to the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    mult: Vec<u32>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            n: vertex_count,
            mult: vec![0; vertex_count * vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.mult[u * self.n + v] += 1;
        if u != v {
            self.mult[v * self.n + u] += 1;
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        (0..self.n)
            .map(|u| {
                let a = self.multiplicity(u, v) as u64;
                if u == v {
                    2 * a
                } else {
                    a
                }
            })
            .sum()
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.n)
            .flat_map(|u| (u..self.n).map(move |v| (u, v)))
            .map(|(u, v)| self.multiplicity(u, v) as u64)
            .sum()
    }

    pub fn loop_count(&self) -> u64 {
        (0..self.n).map(|v| self.multiplicity(v, v) as u64).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v] && self.multiplicity(u, v) > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Laplacian `D - A`; loops cancel (they add 2 to both `D` and `A`).
    pub fn laplacian(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| {
                        if u == v {
                            BigInt::from(self.degree(u) - 2 * self.multiplicity(u, u) as u64)
                        } else {
                            -BigInt::from(self.multiplicity(u, v))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Determinant of the Laplacian with the rows and columns of `removed`
    /// deleted (1 if nothing is left).
    pub fn laplacian_minor(&self, removed: &[usize]) -> BigInt {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        let l = self.laplacian();
        let sub = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| l[i][j].clone()).collect())
            .collect();
        bareiss_det(sub)
    }

    /// Laplacian cofactor at `(k, k)`.
    pub fn laplacian_cofactor(&self, k: usize) -> BigInt {
        self.laplacian_minor(&[k])
    }
}

/// Number of spanning trees via a Laplacian cofactor.
pub fn matrix_tree_count(m: &MultiGraph) -> Result<BigCount> {
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let det = m.laplacian_cofactor(m.vertex_count() - 1);
    if !det.is_positive() {
        return Err(Error::InvariantViolation(format!(
            "connected graph with Laplacian cofactor {det}"
        )));
    }
    Ok(det.magnitude().clone())
}
