//! Loopless simple digraphs on dense vertex indices `0..n`.
//!
//! Each vertex keeps its out-row and in-row as bitsets, so neighborhood
//! queries and pairwise intersections are word operations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_rows: Vec<VertexSet>,
    in_rows: Vec<VertexSet>,
    arc_count: usize,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Digraph {
            n,
            out_rows: vec![VertexSet::new(n); n],
            in_rows: vec![VertexSet::new(n); n],
            arc_count: 0,
        })
    }

    /// Builds a digraph from an arc list, rejecting loops and repeated arcs.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Circulant digraph: `i -> i + s (mod n)` for each offset `s`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for i in 0..n {
            for &s in offsets {
                d.add_arc(i, (i + s) % n)?;
            }
        }
        Ok(d)
    }

    /// Every ordered pair of distinct vertices joined.
    pub fn complete(n: usize) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    d.add_arc(u, v)?;
                }
            }
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertex { vertex: v, n: self.n })
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopRejected(u));
        }
        if !self.out_rows[u].insert(v) {
            return Err(Error::DuplicateArc(u, v));
        }
        self.in_rows[v].insert(u);
        self.arc_count += 1;
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_rows[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.out_rows[v])
    }

    pub fn in_neighbors(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.in_rows[v])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_rows[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_rows[v].len()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.in_degree(v)).collect()
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// N⁺(u) ∩ N⁺(v).
    pub fn common_out_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.out_rows[u].intersection(&self.out_rows[v]))
    }

    /// N⁻(u) ∩ N⁻(v).
    pub fn common_in_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.in_rows[u].intersection(&self.in_rows[v]))
    }

    /// |N⁺(u) ∩ N⁺(v)| for in-range vertices; no validation.
    pub(crate) fn common_out_count(&self, u: usize, v: usize) -> usize {
        self.out_rows[u].intersection_len(&self.out_rows[v])
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_rows: self.in_rows.clone(),
            in_rows: self.out_rows.clone(),
            arc_count: self.arc_count,
        }
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
    }

    /// Subgraph induced on all vertices but `v`, relabelled to keep indices dense.
    pub fn remove_vertex(&self, v: usize) -> Result<Digraph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::InvalidOrder(0));
        }
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        Digraph::from_arcs(
            self.n - 1,
            self.arcs()
                .filter(|&(a, b)| a != v && b != v)
                .map(|(a, b)| (relabel(a), relabel(b))),
        )
    }

    /// Applies a vertex bijection: vertex `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::Parse(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::new(self.n);
        for &p in perm {
            self.check_vertex(p)?;
            if !seen.insert(p) {
                return Err(Error::Parse(format!("{p} repeated in permutation")));
            }
        }
        Digraph::from_arcs(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn to_json(&self) -> String {
        let doc = DigraphJson {
            n: self.n,
            arcs: self.arcs().collect(),
        };
        serde_json::to_string(&doc).expect("digraph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Digraph> {
        let doc: DigraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Digraph::from_arcs(doc.n, doc.arcs)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}
