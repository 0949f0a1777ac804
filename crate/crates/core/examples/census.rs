//! Prints labeled and isomorphism-class counts of friendship digraphs by order.

use std::time::Instant;

use friendship_core::{classify, enumerate_friendship_digraphs, Classification, SearchConfig};

fn main() {
    for n in 2..=7 {
        let start = Instant::now();
        let labeled = enumerate_friendship_digraphs(&SearchConfig::new(n)).unwrap();
        let t_labeled = start.elapsed();
        let classes = enumerate_friendship_digraphs(&SearchConfig {
            modulo_iso: true,
            ..SearchConfig::new(n)
        })
        .unwrap();
        let regular = classes
            .iter()
            .filter(|d| matches!(classify(d), Ok(Classification::Regular { .. })))
            .count();
        println!(
            "n={n}: labeled={} classes={} (regular classes={regular}) search={:?} total={:?}",
            labeled.len(),
            classes.len(),
            t_labeled,
            start.elapsed()
        );
    }
}
