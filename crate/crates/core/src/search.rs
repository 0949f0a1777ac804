//! Exhaustive enumeration of friendship digraphs of small order.
//!
//! Out-rows are placed in vertex order. When row `i` is placed, every pair
//! `(j, i)` with `j < i` has both rows fixed, so its common out-neighbor
//! count must already be exactly one. That check is the only pruning rule:
//! it depends on completed rows alone, so no solution is ever cut.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order enumerated without `allow_large`.
pub const DEFAULT_ORDER_LIMIT: usize = 7;
/// Largest order for canonical forms (n² bits must fit a u64).
pub const CANONICAL_ORDER_LIMIT: usize = 8;
/// Rows are u32 bitmasks.
pub const HARD_ORDER_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub max_results: Option<usize>,
    pub modulo_iso: bool,
    /// Lifts [`DEFAULT_ORDER_LIMIT`]; cost grows roughly like 2^(n²).
    pub allow_large: bool,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        SearchConfig {
            n,
            max_results: None,
            modulo_iso: false,
            allow_large: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidOrder(self.n));
        }
        let limit = if self.allow_large {
            HARD_ORDER_LIMIT
        } else {
            DEFAULT_ORDER_LIMIT
        };
        if self.n > limit {
            return Err(Error::TooLarge { what: "order", value: self.n, limit });
        }
        if self.modulo_iso && self.n > CANONICAL_ORDER_LIMIT {
            return Err(Error::TooLarge {
                what: "order for isomorphism reduction",
                value: self.n,
                limit: CANONICAL_ORDER_LIMIT,
            });
        }
        Ok(())
    }
}

fn rows_of(d: &Digraph) -> Vec<u32> {
    (0..d.order())
        .map(|u| d.out_neighbors(u).unwrap().iter().fold(0u32, |m, v| m | 1 << v))
        .collect()
}

fn digraph_of(rows: &[u32]) -> Digraph {
    let n = rows.len();
    let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| rows[u] & (1 << v) != 0).map(move |v| (u, v)));
    Digraph::from_arcs(n, arcs).expect("search rows are loopless")
}

/// Calls `visit` on the rows of every friendship digraph of order `n`, in
/// ascending order of (row 0, row 1, ...). Stops early when `visit`
/// returns `false`.
pub fn for_each_friendship_rows(n: usize, mut visit: impl FnMut(&[u32]) -> bool) {
    // Out-degree at least 2 holds in every friendship digraph.
    let candidates: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0u32..(1 << n))
                .filter(|&m| m & (1 << i) == 0 && m.count_ones() >= 2)
                .collect()
        })
        .collect();
    let mut rows = vec![0u32; n];
    place(0, &mut rows, &candidates, &mut visit);
}

fn place(
    i: usize,
    rows: &mut [u32],
    candidates: &[Vec<u32>],
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    if i == rows.len() {
        return visit(rows);
    }
    for &cand in &candidates[i] {
        if rows[..i].iter().all(|&r| (r & cand).count_ones() == 1) {
            rows[i] = cand;
            if !place(i + 1, rows, candidates, visit) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least row-major adjacency bit string over all vertex
/// relabelings, packed with bit (0,0) as the most significant of n² bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n;
        let rows: Vec<u32> = (0..n)
            .map(|i| {
                (0..n).fold(0u32, |m, j| {
                    let bit = (self.code >> (n * n - 1 - (i * n + j))) & 1;
                    m | (bit as u32) << j
                })
            })
            .collect();
        digraph_of(&rows)
    }
}

fn code_of(rows: &[u32], order: &[usize]) -> u64 {
    let n = rows.len();
    let mut code = 0u64;
    for &a in order {
        for &b in order {
            code = code << 1 | ((rows[a] >> b) & 1) as u64;
        }
    }
    debug_assert!(n * n <= 64);
    code
}

fn canonical_code(rows: &[u32]) -> u64 {
    struct Ctx<'a> {
        rows: &'a [u32],
        n: usize,
        order: Vec<usize>,
        used: u32,
        best: Option<u64>,
    }

    // `order[pos]` is the vertex placed at position `pos`. Bits (0, 0..=pos)
    // are a prefix of the code once positions 0..=pos are fixed, so a branch
    // whose prefix already exceeds the best code's prefix is cut.
    fn extend(ctx: &mut Ctx, pos: usize, prefix: u64) {
        let n = ctx.n;
        if pos == n {
            let code = code_of(ctx.rows, &ctx.order);
            if ctx.best.is_none_or(|b| code < b) {
                ctx.best = Some(code);
            }
            return;
        }
        for v in 0..n {
            if ctx.used & (1 << v) != 0 {
                continue;
            }
            let head = if pos == 0 { v } else { ctx.order[0] };
            let next = prefix << 1 | ((ctx.rows[head] >> v) & 1) as u64;
            if let Some(best) = ctx.best {
                if next > best >> (n * n - pos - 1) {
                    continue;
                }
            }
            ctx.order.push(v);
            ctx.used |= 1 << v;
            extend(ctx, pos + 1, next);
            ctx.used &= !(1 << v);
            ctx.order.pop();
        }
    }

    let mut ctx = Ctx {
        rows,
        n: rows.len(),
        order: Vec::with_capacity(rows.len()),
        used: 0,
        best: None,
    };
    extend(&mut ctx, 0, 0);
    ctx.best.unwrap_or(0)
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    if d.order() > CANONICAL_ORDER_LIMIT {
        return Err(Error::TooLarge {
            what: "order for canonical form",
            value: d.order(),
            limit: CANONICAL_ORDER_LIMIT,
        });
    }
    Ok(CanonicalForm {
        n: d.order(),
        code: canonical_code(&rows_of(d)),
    })
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    for d in [a, b] {
        if d.order() > CANONICAL_ORDER_LIMIT {
            return Err(Error::TooLarge {
                what: "order for isomorphism test",
                value: d.order(),
                limit: CANONICAL_ORDER_LIMIT,
            });
        }
    }
    let degree_profile = |d: &Digraph| {
        let mut p: Vec<_> = (0..d.order()).map(|v| (d.out_degree(v), d.in_degree(v))).collect();
        p.sort_unstable();
        p
    };
    if a.order() != b.order()
        || a.arc_count() != b.arc_count()
        || degree_profile(a) != degree_profile(b)
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// All friendship digraphs of order `config.n`.
///
/// Labeled results come in search order. With `modulo_iso`, one canonical
/// representative per isomorphism class is returned, sorted by canonical
/// code. `max_results` caps the returned list.
pub fn enumerate_friendship_digraphs(config: &SearchConfig) -> Result<Vec<Digraph>> {
    config.validate()?;
    let cap = config.max_results.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(Vec::new());
    }
    if config.modulo_iso {
        let mut classes = std::collections::BTreeSet::new();
        for_each_friendship_rows(config.n, |rows| {
            classes.insert(canonical_code(rows));
            true
        });
        return Ok(classes
            .into_iter()
            .take(cap)
            .map(|code| CanonicalForm { n: config.n, code }.to_digraph())
            .collect());
    }
    let mut out = Vec::new();
    for_each_friendship_rows(config.n, |rows| {
        out.push(digraph_of(rows));
        out.len() < cap
    });
    Ok(out)
}
