//! The (q,t) coefficient of P_λ(q,t) in p_k, and its Jack limit q = t^{1/κ},
//! t → 1, taken factor by factor.

use selberg_core::exactnum::{rat, Bindings, Var};
use selberg_core::jack::{alpha_coeff, jack_limit, macdonald_beta_factors, macdonald_beta_pk};
use selberg_core::partitions::partitions_of;

fn main() -> selberg_core::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let at = Bindings::new().with(Var::Q, rat(1, 2)).with(Var::T, rat(1, 3));
    for l in partitions_of(k) {
        let factors = macdonald_beta_factors(&l, k)?;
        let beta = macdonald_beta_pk(&l, k)?;
        let limit = jack_limit(&factors)?;
        println!("{l}");
        println!("  beta(q,t)        = {beta}");
        println!("  at q=1/2, t=1/3  = {}", beta.eval(&at)?);
        println!(
            "  {} / {} factors, limit = {limit}  (closed form agrees: {})",
            factors.numerator.len(),
            factors.denominator.len(),
            limit == alpha_coeff(&l, k)?
        );
    }
    Ok(())
}
