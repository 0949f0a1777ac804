//! Friendship digraph constructors.
//!
//! Fancy wheels are built directly. Regular friendship digraphs come from a
//! (k²−k+1, k, 1) design: pick a system of distinct representatives
//! `rep[t] ∉ B_t` for the block complements, then send an arc from every
//! member of `B_t` to `rep[t]`.

use serde::Serialize;

use crate::design::{validate_sbibd, Design};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matching::Bipartite;

/// Fancy wheel with hub 0 and directed cycles on consecutive index ranges,
/// each oriented `i -> i+1` with wraparound.
pub fn fancy_wheel(cycle_lengths: &[usize]) -> Result<Digraph> {
    if cycle_lengths.is_empty() {
        return Err(Error::BadCycleLength(0));
    }
    if let Some(&bad) = cycle_lengths.iter().find(|&&len| len < 2) {
        return Err(Error::BadCycleLength(bad));
    }
    let n = 1 + cycle_lengths.iter().sum::<usize>();
    let mut d = Digraph::new(n)?;
    for v in 1..n {
        d.add_arc(0, v)?;
        d.add_arc(v, 0)?;
    }
    let mut start = 1;
    for &len in cycle_lengths {
        for i in 0..len {
            d.add_arc(start + i, start + (i + 1) % len)?;
        }
        start += len;
    }
    Ok(d)
}

/// Representative `rep[t]` for each block `t`, drawn from its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sdr {
    pub rep: Vec<usize>,
}

impl Sdr {
    /// Checks distinctness and `rep[t] ∉ B_t` against `design`.
    pub fn is_valid_for(&self, design: &Design) -> bool {
        let mut seen = vec![false; design.varieties()];
        self.rep.len() == design.block_count()
            && self.rep.iter().enumerate().all(|(t, &x)| {
                x < design.varieties()
                    && !std::mem::replace(&mut seen[x], true)
                    && design.blocks()[t].binary_search(&x).is_err()
            })
    }
}

fn complement_graph(design: &Design) -> Bipartite {
    let adj = (0..design.block_count()).map(|t| design.complement(t)).collect();
    Bipartite::from_adjacency(design.varieties(), adj)
}

/// SDR of the block complements via perfect matching, blocks ascending and
/// candidates ascending unless `seed` shuffles the candidate order.
pub fn complement_sdr(design: &Design, seed: Option<u64>) -> Result<Sdr> {
    if design.block_count() != design.varieties() {
        return Err(Error::BlockCountMismatch {
            blocks: design.block_count(),
            varieties: design.varieties(),
        });
    }
    let mut graph = complement_graph(design);
    if let Some(seed) = seed {
        graph.shuffle_candidates(seed);
    }
    let state = graph.max_matching();
    if let Some(deficient) = graph.deficient_set(&state) {
        let covered = graph.neighborhood_size(&deficient);
        return Err(Error::HallViolation { deficient, covered });
    }
    let rep = state
        .left_mate
        .iter()
        .map(|r| r.expect("perfect matching"))
        .collect();
    Ok(Sdr { rep })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HallMode {
    Exhaustive,
    Matching,
}

/// Minimum of `|⋃(V − B_s)| − |S|` within each size range of `S`: one
/// block, two to `k` blocks, more than `k` blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseSlack {
    pub k: usize,
    pub singleton: Option<i64>,
    pub up_to_k: Option<i64>,
    pub beyond_k: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallReport {
    pub holds: bool,
    pub mode: HallMode,
    pub blocks: usize,
    pub matching_size: usize,
    /// Exhaustive mode only.
    pub min_slack: Option<i64>,
    pub argmin: Option<Vec<usize>>,
    pub cases: Option<CaseSlack>,
    /// A block subset whose complements cover fewer than `|S|` varieties.
    pub witness: Option<Vec<usize>>,
}

pub const EXHAUSTIVE_HALL_LIMIT: usize = 20;

/// Hall's condition for the family of block complements.
///
/// Matching mode certifies via a maximum matching (perfect ⟺ Hall holds) and
/// reports an alternating-tree deficient set on failure. Exhaustive mode
/// scans every nonempty block subset, records the minimum slack overall and
/// per size range, and reports the smallest violating subset.
pub fn check_hall_condition(design: &Design, exhaustive: bool) -> Result<HallReport> {
    let graph = complement_graph(design);
    let state = graph.max_matching();
    let b = design.block_count();
    if !exhaustive {
        let witness = graph.deficient_set(&state);
        return Ok(HallReport {
            holds: witness.is_none(),
            mode: HallMode::Matching,
            blocks: b,
            matching_size: state.size(),
            min_slack: None,
            argmin: None,
            cases: None,
            witness,
        });
    }

    let v = design.varieties();
    for (what, value) in [("varieties", v), ("blocks", b)] {
        if value > EXHAUSTIVE_HALL_LIMIT {
            return Err(Error::TooLarge {
                what,
                value,
                limit: EXHAUSTIVE_HALL_LIMIT,
            });
        }
    }
    let complement_masks: Vec<u32> = (0..b)
        .map(|t| design.complement(t).iter().fold(0u32, |m, &x| m | 1 << x))
        .collect();
    let k = design.uniform_block_size();
    let mut union = vec![0u32; 1 << b];
    let mut min_slack: Option<(i64, u32)> = None;
    let mut violation: Option<(u32, u32)> = None; // (|S|, mask)
    let mut cases = [None::<i64>; 3];
    for mask in 1u32..(1 << b) {
        let low = mask.trailing_zeros() as usize;
        union[mask as usize] = union[(mask & (mask - 1)) as usize] | complement_masks[low];
        let size = mask.count_ones();
        let slack = union[mask as usize].count_ones() as i64 - size as i64;
        if min_slack.is_none_or(|(s, _)| slack < s) {
            min_slack = Some((slack, mask));
        }
        if slack < 0 && violation.is_none_or(|(s, _)| size < s) {
            violation = Some((size, mask));
        }
        if let Some(k) = k {
            let case = match size as usize {
                1 => 0,
                s if s <= k => 1,
                _ => 2,
            };
            cases[case] = Some(cases[case].map_or(slack, |c: i64| c.min(slack)));
        }
    }
    let members = |mask: u32| (0..b).filter(|&t| mask & (1 << t) != 0).collect::<Vec<_>>();
    Ok(HallReport {
        holds: violation.is_none(),
        mode: HallMode::Exhaustive,
        blocks: b,
        matching_size: state.size(),
        min_slack: min_slack.map(|(s, _)| s),
        argmin: min_slack.map(|(_, m)| members(m)),
        cases: k.map(|k| CaseSlack {
            k,
            singleton: cases[0],
            up_to_k: cases[1],
            beyond_k: cases[2],
        }),
        witness: violation.map(|(_, m)| members(m)),
    })
}

/// Block size `k` if `design` is a (k²−k+1, k, 1)-SBIBD with `k ≥ 2`.
pub fn projective_parameter(design: &Design) -> Result<usize> {
    let k = design
        .uniform_block_size()
        .ok_or_else(|| Error::NotSbibd("blocks differ in size or there are none".into()))?;
    if k < 2 || design.varieties() != k * k - k + 1 {
        return Err(Error::NotSbibd(format!(
            "v = {} does not equal k^2-k+1 for block size k = {k} >= 2",
            design.varieties()
        )));
    }
    let report = validate_sbibd(design, k, 1);
    if let Some(violation) = report.violations().next() {
        return Err(Error::NotSbibd(format!("{violation:?}")));
    }
    Ok(k)
}

/// Regular friendship digraph on the varieties of a (k²−k+1, k, 1)-SBIBD:
/// arcs `(x, rep[t])` for every `x ∈ B_t`.
pub fn digraph_from_sbibd(design: &Design, seed: Option<u64>) -> Result<Digraph> {
    projective_parameter(design)?;
    let sdr = complement_sdr(design, seed)?;
    let arcs = design
        .blocks()
        .iter()
        .zip(&sdr.rep)
        .flat_map(|(block, &r)| block.iter().map(move |&x| (x, r)));
    Digraph::from_arcs(design.varieties(), arcs)
}
