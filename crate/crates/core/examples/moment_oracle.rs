//! The brute-force route: expand f · Δ^{2κ} and integrate each monomial with
//! Beta moments. Exponential in N, but shares no code with the Jack machinery.

use std::time::Instant;

use selberg_core::exactnum::{ParamScalar, Var};
use selberg_core::oracle::{moment_integrate, moment_integrate_with_budget, DensePoly};
use selberg_core::selberg::{selberg_powersum, SelbergParams};

fn main() -> selberg_core::Result<()> {
    let (a, b) = (ParamScalar::var(Var::A), ParamScalar::var(Var::B));
    for (n, kappa) in [(2, 1), (3, 1), (3, 2)] {
        for k in 1..=3u32 {
            let t = Instant::now();
            let brute = moment_integrate(&DensePoly::power_sum(n, k), &a, &b, kappa)?;
            let took = t.elapsed();
            let jack = selberg_powersum(k as usize, &SelbergParams::symbolic().with_n(n as i64).with_kappa(kappa as i64))?;
            println!(
                "N={n} kappa={kappa} p_{k}: {brute}  [{took:.1?}, matches Jack route: {}]",
                *jack.value.value() == brute
            );
        }
    }
    match moment_integrate_with_budget(&DensePoly::power_sum(5, 3), &a, &b, 3, 10_000) {
        Err(e) => println!("N=5 kappa=3 with a 10k-term budget: {e}"),
        Ok(v) => println!("N=5 kappa=3: {v}"),
    }
    Ok(())
}
