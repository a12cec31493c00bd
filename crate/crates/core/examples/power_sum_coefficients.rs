//! Coefficients α_{λ,k} of the Jack polynomials in p_k: the closed form next to
//! the projection onto the Gram–Schmidt basis.

use selberg_core::jack::{alpha_coeff, jack_expand};
use selberg_core::partitions::{partitions_of, Partition};
use selberg_core::symfunc::{Basis, SymFn};

fn main() -> selberg_core::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for k in 1..=max {
        let pk = SymFn::basis_element(Basis::PowerSum, Partition::row(k));
        let projected = jack_expand(&pk, k)?;
        println!("p_{k}:");
        for l in partitions_of(k) {
            let closed = alpha_coeff(&l, k)?;
            let same = if projected.coeff(&l) == closed { "ok" } else { "MISMATCH" };
            println!("  {l:<12} {closed:<50} {same}");
        }
    }
    Ok(())
}
