//! Partitions of k, dominance order, and the arm/leg statistics of each cell.

use selberg_core::partitions::{dominance_leq, partitions_of};

fn main() -> selberg_core::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let parts = partitions_of(k);
    println!("{} partitions of {k}", parts.len());
    for l in &parts {
        let below = parts.iter().filter(|m| dominance_leq(m, l).unwrap_or(false)).count();
        println!("  {l:<12} conjugate {:<12} n = {:<3} dominates {below}", l.conjugate().to_string(), l.n());
    }

    let lambda = &parts[parts.len() / 2];
    println!("\narm/leg of {lambda}:");
    for s in lambda.cells() {
        println!("  ({},{})  a = {}  l = {}", s.row, s.col, lambda.arm(s)?, lambda.leg(s)?);
    }
    Ok(())
}
