//! Jack polynomials P_λ^{(1/κ)} of degree k built by Gram–Schmidt, printed in
//! the monomial basis together with their norms.
//!
//!     cargo run --example jack_gram_schmidt -- 4

use std::time::Instant;

use selberg_core::exactnum::{rat, Bindings, Var};
use selberg_core::jack::jack_gram_schmidt;

fn main() -> selberg_core::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let t = Instant::now();
    let basis = jack_gram_schmidt(k)?;
    println!("degree {k}: {} polynomials in {:.2?}", basis.order().len(), t.elapsed());
    let schur = Bindings::new().with(Var::Kappa, rat(1, 1));
    for l in basis.order().iter().rev() {
        let m = basis.in_monomials(l)?;
        println!("P_{l} = {m}");
        println!("    <P,P> = {}", basis.norm(l).expect("norm"));
        // κ = 1 gives Schur functions: m-coefficients are Kostka numbers.
        let kostka: Vec<String> = m
            .terms()
            .rev()
            .map(|(_, c)| c.substitute_values(&schur).map(|x| x.to_string()))
            .collect::<Result<_, _>>()?;
        println!("    kappa=1: [{}]", kostka.join(", "));
    }
    Ok(())
}
