//! Block designs: validation as symmetric (v, k, λ) designs, projective
//! planes over GF(q), and the in-neighborhood design of a digraph.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::field::FiniteField;

/// A variety count plus an ordered family of blocks.
///
/// Block order is significant: block `t` of [`design_from_digraph`] is the
/// in-neighborhood of vertex `t`, and the SDR construction maps block `t` to
/// its representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct DesignJson {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    /// Sorts each block; rejects out-of-range or repeated varieties.
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks = blocks;
        for (t, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            if let Some(&x) = block.iter().find(|&&x| x >= v) {
                return Err(Error::BadVariety { block: t, variety: x, v });
            }
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVariety { block: t, variety: w[0] });
            }
        }
        Ok(Design { v, blocks })
    }

    pub fn varieties(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks sorted, for multiset comparison.
    pub fn block_multiset(&self) -> Vec<Vec<usize>> {
        let mut b = self.blocks.clone();
        b.sort();
        b
    }

    /// Varieties not in block `t`.
    pub fn complement(&self, t: usize) -> Vec<usize> {
        let block = &self.blocks[t];
        (0..self.v).filter(|x| block.binary_search(x).is_err()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("design serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Design> {
        let doc: DesignJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Design::new(doc.v, doc.blocks)
    }

    /// The common block size, if every block has the same size.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let first = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == first).then_some(first)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SbibdViolation {
    BlockCount { blocks: usize, varieties: usize },
    BlockSize { block: usize, size: usize },
    Replication { variety: usize, count: usize },
    PairBalance { pair: (usize, usize), count: usize },
}

/// Outcome of each SBIBD axiom; `None` means the axiom holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub block_count: Option<SbibdViolation>,
    pub block_size: Option<SbibdViolation>,
    pub replication: Option<SbibdViolation>,
    pub pair_balance: Option<SbibdViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = &SbibdViolation> {
        [
            &self.block_count,
            &self.block_size,
            &self.replication,
            &self.pair_balance,
        ]
        .into_iter()
        .flatten()
    }
}

pub fn validate_sbibd(design: &Design, k: usize, lambda: usize) -> ValidationReport {
    let v = design.v;
    let b = design.blocks.len();
    let block_count = (b != v).then_some(SbibdViolation::BlockCount {
        blocks: b,
        varieties: v,
    });
    let block_size = design
        .blocks
        .iter()
        .position(|blk| blk.len() != k)
        .map(|t| SbibdViolation::BlockSize {
            block: t,
            size: design.blocks[t].len(),
        });

    let mut replication_counts = vec![0usize; v];
    let mut pair_counts = vec![0usize; v * v];
    for block in &design.blocks {
        for (i, &x) in block.iter().enumerate() {
            replication_counts[x] += 1;
            for &y in &block[i + 1..] {
                pair_counts[x * v + y] += 1;
            }
        }
    }
    let replication = replication_counts
        .iter()
        .position(|&r| r != k)
        .map(|x| SbibdViolation::Replication {
            variety: x,
            count: replication_counts[x],
        });
    let pair_balance = (0..v)
        .flat_map(|x| (x + 1..v).map(move |y| (x, y)))
        .find(|&(x, y)| pair_counts[x * v + y] != lambda)
        .map(|(x, y)| SbibdViolation::PairBalance {
            pair: (x, y),
            count: pair_counts[x * v + y],
        });

    ValidationReport {
        v,
        k,
        lambda,
        block_count,
        block_size,
        replication,
        pair_balance,
    }
}

/// First pair of blocks (lexicographic) whose intersection size is not
/// `lambda`, as `(s, t, size)`.
pub fn block_intersection_violation(design: &Design, lambda: usize) -> Option<(usize, usize, usize)> {
    let blocks = &design.blocks;
    (0..blocks.len())
        .flat_map(|s| (s + 1..blocks.len()).map(move |t| (s, t)))
        .map(|(s, t)| {
            let size = blocks[s]
                .iter()
                .filter(|x| blocks[t].binary_search(x).is_ok())
                .count();
            (s, t, size)
        })
        .find(|&(_, _, size)| size != lambda)
}

/// Normalized homogeneous coordinates over GF(q), as field indices: the
/// first nonzero coordinate is one. Lexicographic order.
fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first_nonzero = [a, b, c].into_iter().find(|&x| x != 0);
                // index 1 is the multiplicative identity
                if first_nonzero == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// PG(2, q) as a (q²+q+1, q+1, 1) design: block `t` holds the points on
/// line `t`, points and lines both indexed in lexicographic order of their
/// normalized coordinates.
pub fn projective_plane(q: u32) -> Result<Design> {
    let field = FiniteField::with_order(q)?;
    let ops = field.tables();
    let triples = normalized_triples(ops.order());
    let blocks = triples
        .iter()
        .map(|line| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, pt)| {
                    let dot = (0..3).fold(0, |acc, i| ops.add(acc, ops.mul(line[i], pt[i])));
                    dot == 0
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Design::new(triples.len(), blocks)
}

/// Design whose varieties are the vertices and whose block `t` is N⁻(t).
pub fn design_from_digraph(d: &Digraph) -> Design {
    let blocks = (0..d.order())
        .map(|t| d.in_neighbors(t).expect("vertex in range").to_vec())
        .collect();
    Design::new(d.order(), blocks).expect("in-neighborhoods are in range and sorted")
}
