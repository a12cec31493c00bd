//! Large-N limits of power-sum moments, compared with their conjectured closed
//! forms.
//!
//!     cargo run --release --example power_sum_limits -- 8

use std::time::Instant;

use selberg_core::asymptotics::{central_binomial_ratio, dyck_peak_formula, limit_pk, limit_pk_scaled};

fn main() -> selberg_core::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for k in 1..=max {
        let t = Instant::now();
        let lim = limit_pk(k)?;
        let ok = lim == central_binomial_ratio(k);
        println!("{{p_{k}}} = {lim:<10} C(2k,k)/4^k: {ok}  ({:.2?})", t.elapsed());
    }
    for k in 1..=max.min(5) {
        let t = Instant::now();
        let lim = limit_pk_scaled(k)?;
        let ok = lim == dyck_peak_formula(k);
        println!("scaled k={k}: {lim}  dyck: {ok}  ({:.2?})", t.elapsed());
    }
    Ok(())
}
