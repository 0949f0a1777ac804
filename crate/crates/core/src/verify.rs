//! Friendship property, its structural consequences, and the
//! fancy-wheel / regular classification.
//!
//! Every checker runs on arbitrary digraphs. On a friendship digraph each of
//! them must hold, so a failure there points at a bug, not at the input.
//! Unless noted, witnesses are the lexicographically first offender.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Order below 2: no pair to share an out-neighbor.
    Degenerate { n: usize },
    Pair { u: usize, v: usize, common_out: usize },
    OutDegree { vertex: usize, out_degree: usize },
    Unbalanced { vertex: usize, out_degree: usize, in_degree: usize },
    SumIdentity { vertex: usize, sum: i64, expected: i64 },
    Reversal { forward: bool, reversed: bool },
    ProductBound { u: usize, v: usize, product: i64, bound: i64 },
    DegreeMismatch { u: usize, v: usize, out_u: usize, out_v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: &'static str,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn from_witness(property: &'static str, witness: Option<Witness>) -> Self {
        PropertyReport {
            property,
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn friendship_witness(d: &Digraph) -> Option<Witness> {
    if d.order() < 2 {
        return Some(Witness::Degenerate { n: d.order() });
    }
    pairs(d.order()).find_map(|(u, v)| {
        let count = d.common_out_count(u, v);
        (count != 1).then_some(Witness::Pair { u, v, common_out: count })
    })
}

/// Every pair of distinct vertices has exactly one common out-neighbor.
pub fn is_friendship(d: &Digraph) -> PropertyReport {
    PropertyReport::from_witness("friendship", friendship_witness(d))
}

/// Minimum out-degree is at least 2; the witness is a minimizing vertex.
pub fn check_min_outdegree(d: &Digraph) -> PropertyReport {
    let witness = (0..d.order())
        .min_by_key(|&v| d.out_degree(v))
        .filter(|&v| d.out_degree(v) < 2)
        .map(|v| Witness::OutDegree {
            vertex: v,
            out_degree: d.out_degree(v),
        });
    PropertyReport::from_witness("min_outdegree", witness)
}

pub fn check_degree_balance(d: &Digraph) -> PropertyReport {
    let witness = (0..d.order())
        .find(|&v| d.out_degree(v) != d.in_degree(v))
        .map(|v| Witness::Unbalanced {
            vertex: v,
            out_degree: d.out_degree(v),
            in_degree: d.in_degree(v),
        });
    PropertyReport::from_witness("degree_balance", witness)
}

/// Σ_{u ∈ N⁺(v)} (d⁻(u) − 1) = n − 1 at every vertex.
pub fn check_sum_identity(d: &Digraph) -> PropertyReport {
    let expected = d.order() as i64 - 1;
    let witness = (0..d.order()).find_map(|v| {
        let sum: i64 = d.out_neighbors(v).unwrap().iter().map(|u| d.in_degree(u) as i64 - 1).sum();
        (sum != expected).then_some(Witness::SumIdentity { vertex: v, sum, expected })
    });
    PropertyReport::from_witness("sum_identity", witness)
}

/// D and its reversal agree on being friendship digraphs.
pub fn check_reversal_friendship(d: &Digraph) -> PropertyReport {
    let forward = friendship_witness(d).is_none();
    let reversed = friendship_witness(&d.reverse()).is_none();
    let witness = (forward != reversed).then_some(Witness::Reversal { forward, reversed });
    PropertyReport::from_witness("reversal_friendship", witness)
}

/// (d⁻(u) − 1)(d⁻(v) − 1) ≤ n − 2 for every pair.
pub fn check_product_bound(d: &Digraph) -> PropertyReport {
    let bound = d.order() as i64 - 2;
    let witness = pairs(d.order()).find_map(|(u, v)| {
        let product = (d.in_degree(u) as i64 - 1) * (d.in_degree(v) as i64 - 1);
        (product > bound).then_some(Witness::ProductBound { u, v, product, bound })
    });
    PropertyReport::from_witness("product_bound", witness)
}

/// Pairs not joined in both directions have equal out-degree.
pub fn check_nonadjacent_degree_equality(d: &Digraph) -> PropertyReport {
    let witness = pairs(d.order())
        .filter(|&(u, v)| !(d.has_arc(u, v) && d.has_arc(v, u)))
        .find(|&(u, v)| d.out_degree(u) != d.out_degree(v))
        .map(|(u, v)| Witness::DegreeMismatch {
            u,
            v,
            out_u: d.out_degree(u),
            out_v: d.out_degree(v),
        });
    PropertyReport::from_witness("nonadjacent_degree_equality", witness)
}

/// The six consequence checks, in a fixed order.
pub fn consequence_reports(d: &Digraph) -> Vec<PropertyReport> {
    vec![
        check_min_outdegree(d),
        check_degree_balance(d),
        check_sum_identity(d),
        check_reversal_friendship(d),
        check_product_bound(d),
        check_nonadjacent_degree_equality(d),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Classification {
    FancyWheel { hub: usize, cycle_lengths: Vec<usize> },
    Regular { k: usize },
    NotFriendship { witness: Witness },
}

impl Classification {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("classification serialization cannot fail")
    }
}

/// Splits a digraph into a hub and directed cycles.
///
/// The hub is the lowest vertex joined to and from every other vertex.
/// Every other vertex must then have exactly one out-neighbor and one
/// in-neighbor besides the hub. Returns the hub and the sorted cycle lengths.
pub fn fancy_wheel_decomposition(d: &Digraph) -> Result<(usize, Vec<usize>)> {
    let n = d.order();
    if n < 3 {
        return Err(Error::NotFancyWheel(format!("order {n} is too small")));
    }
    let hub = (0..n)
        .find(|&v| d.out_degree(v) == n - 1 && d.in_degree(v) == n - 1)
        .ok_or_else(|| Error::NotFancyWheel("no vertex joined to and from all others".into()))?;
    let mut successor = vec![usize::MAX; n];
    for v in (0..n).filter(|&v| v != hub) {
        let outs: Vec<_> = d.out_neighbors(v)?.iter().filter(|&x| x != hub).collect();
        let ins = d.in_neighbors(v)?.iter().filter(|&x| x != hub).count();
        if outs.len() != 1 || ins != 1 {
            return Err(Error::NotFancyWheel(format!(
                "vertex {v} has {} rim out-neighbors and {ins} rim in-neighbors",
                outs.len()
            )));
        }
        successor[v] = outs[0];
    }
    let mut seen = vec![false; n];
    seen[hub] = true;
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = successor[v];
        }
        // unit in-degree on the rim means every walk closes at its start
        debug_assert_eq!(v, start);
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok((hub, lengths))
}

/// Fancy wheel, k-regular with n = k²−k+1, or not a friendship digraph.
///
/// `InternalInvariantBroken` means a friendship digraph violated a proven
/// consequence, which can only come from a bug in this crate.
pub fn classify(d: &Digraph) -> Result<Classification> {
    if let Some(witness) = friendship_witness(d) {
        return Ok(Classification::NotFriendship { witness });
    }
    let n = d.order();
    if d.max_out_degree() == n - 1 {
        let (hub, cycle_lengths) = fancy_wheel_decomposition(d)
            .map_err(|e| Error::InternalInvariantBroken(e.to_string()))?;
        if let Some(v) = (0..n).find(|&v| v != hub && d.out_degree(v) != 2) {
            return Err(Error::InternalInvariantBroken(format!(
                "non-hub vertex {v} has out-degree {}",
                d.out_degree(v)
            )));
        }
        return Ok(Classification::FancyWheel { hub, cycle_lengths });
    }
    let k = d.out_degree(0);
    if let Some(v) = (0..n).find(|&v| d.out_degree(v) != k || d.in_degree(v) != k) {
        return Err(Error::InternalInvariantBroken(format!(
            "vertex {v} has degrees ({}, {}) but vertex 0 has out-degree {k}",
            d.out_degree(v),
            d.in_degree(v)
        )));
    }
    if k < 2 || n != k * k - k + 1 {
        return Err(Error::InternalInvariantBroken(format!(
            "{k}-regular friendship digraph of order {n}"
        )));
    }
    Ok(Classification::Regular { k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{digraph_from_sbibd, fancy_wheel};
    use crate::design::tests::fano;

    fn triangle() -> Digraph {
        Digraph::complete(3).unwrap()
    }

    fn circulant7() -> Digraph {
        Digraph::circulant(7, &[1, 2, 3]).unwrap()
    }

    fn fano_digraph() -> Digraph {
        digraph_from_sbibd(&fano(), None).unwrap()
    }

    fn single_arc(n: usize) -> Digraph {
        Digraph::from_arcs(n, [(0, 1)]).unwrap()
    }

    #[test]
    fn friendship_examples() {
        assert!(is_friendship(&triangle()).holds);
        let r = is_friendship(&circulant7());
        assert_eq!(r.witness, Some(Witness::Pair { u: 0, v: 1, common_out: 2 }));
        assert!(is_friendship(&fancy_wheel(&[4, 3, 2]).unwrap()).holds);
        let r = is_friendship(&Digraph::new(1).unwrap());
        assert_eq!(r.witness, Some(Witness::Degenerate { n: 1 }));
    }

    #[test]
    fn min_outdegree_examples() {
        assert!(check_min_outdegree(&triangle()).holds);
        assert_eq!(
            check_min_outdegree(&single_arc(2)).witness,
            Some(Witness::OutDegree { vertex: 1, out_degree: 0 })
        );
        let d = fano_digraph();
        assert!(check_min_outdegree(&d).holds);
        assert_eq!((0..7).map(|v| d.out_degree(v)).min(), Some(3));
    }

    #[test]
    fn degree_balance_examples() {
        assert!(check_degree_balance(&fancy_wheel(&[2, 2]).unwrap()).holds);
        assert_eq!(
            check_degree_balance(&single_arc(2)).witness,
            Some(Witness::Unbalanced { vertex: 0, out_degree: 1, in_degree: 0 })
        );
        assert!(check_degree_balance(&fano_digraph()).holds);
    }

    #[test]
    fn sum_identity_examples() {
        assert!(check_sum_identity(&triangle()).holds);
        assert!(check_sum_identity(&fancy_wheel(&[4, 3, 2]).unwrap()).holds);
        let two_cycle = Digraph::complete(2).unwrap();
        assert_eq!(
            check_sum_identity(&two_cycle).witness,
            Some(Witness::SumIdentity { vertex: 0, sum: 0, expected: 1 })
        );
    }

    #[test]
    fn reversal_examples() {
        assert!(check_reversal_friendship(&fano_digraph()).holds);
        assert!(is_friendship(&fano_digraph().reverse()).holds);
        // neither direction is friendship, which is consistent
        assert!(check_reversal_friendship(&circulant7()).holds);
        assert!(!is_friendship(&circulant7().reverse()).holds);
        assert!(check_reversal_friendship(&fancy_wheel(&[3]).unwrap()).holds);
    }

    #[test]
    fn product_bound_examples() {
        assert!(check_product_bound(&triangle()).holds);
        let w = fancy_wheel(&[4, 3, 2]).unwrap();
        assert!(check_product_bound(&w).holds);
        // hub (in-degree 9) against a rim vertex (in-degree 2): 8 * 1 = 8 = n - 2
        assert_eq!((w.in_degree(0) - 1) * (w.in_degree(1) - 1), 8);
        assert!(check_product_bound(&fano_digraph()).holds);
        let r = check_product_bound(&Digraph::complete(4).unwrap());
        assert_eq!(r.witness, Some(Witness::ProductBound { u: 0, v: 1, product: 4, bound: 2 }));
    }

    #[test]
    fn nonadjacent_degree_examples() {
        assert!(check_nonadjacent_degree_equality(&fano_digraph()).holds);
        assert!(check_nonadjacent_degree_equality(&fancy_wheel(&[2, 2]).unwrap()).holds);
        // (0,1) is joined one way only, and d+(0) = 1 while d+(1) = 0
        assert_eq!(
            check_nonadjacent_degree_equality(&single_arc(3)).witness,
            Some(Witness::DegreeMismatch { u: 0, v: 1, out_u: 1, out_v: 0 })
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&fancy_wheel(&[4, 3, 2]).unwrap()).unwrap(),
            Classification::FancyWheel { hub: 0, cycle_lengths: vec![2, 3, 4] }
        );
        assert_eq!(classify(&fano_digraph()).unwrap(), Classification::Regular { k: 3 });
        assert_eq!(
            classify(&circulant7()).unwrap(),
            Classification::NotFriendship {
                witness: Witness::Pair { u: 0, v: 1, common_out: 2 }
            }
        );
        assert_eq!(
            classify(&triangle()).unwrap(),
            Classification::FancyWheel { hub: 0, cycle_lengths: vec![2] }
        );
    }

    #[test]
    fn classify_finds_hub_anywhere() {
        let w = fancy_wheel(&[3, 2]).unwrap().relabel(&[4, 0, 1, 2, 3, 5]).unwrap();
        assert_eq!(
            classify(&w).unwrap(),
            Classification::FancyWheel { hub: 4, cycle_lengths: vec![2, 3] }
        );
    }

    #[test]
    fn decomposer_rejects_non_wheels() {
        assert!(fancy_wheel_decomposition(&circulant7()).is_err());
        // hub plus a rim vertex with two rim successors
        let mut d = fancy_wheel(&[3]).unwrap();
        d.add_arc(1, 3).unwrap();
        assert!(matches!(fancy_wheel_decomposition(&d), Err(Error::NotFancyWheel(_))));
        assert_eq!(fancy_wheel_decomposition(&fancy_wheel(&[2, 3]).unwrap()).unwrap(), (0, vec![2, 3]));
    }

    #[test]
    fn report_json_shape() {
        assert_eq!(
            is_friendship(&triangle()).to_json(),
            r#"{"property":"friendship","holds":true,"witness":null}"#
        );
        assert_eq!(
            Classification::Regular { k: 3 }.to_json(),
            r#"{"verdict":"Regular","k":3}"#
        );
    }
}
