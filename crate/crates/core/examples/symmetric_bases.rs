//! Monomial and power-sum expansions, products in m, and the κ-deformed
//! inner product.

use selberg_core::partitions::Partition;
use selberg_core::symfunc::{deformed_inner, m_multiply, m_to_p, p_to_m, Basis, SymFn};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("partition")
}

fn main() -> selberg_core::Result<()> {
    println!("p_[2,1]  = {}", p_to_m(&p(&[2, 1])));
    let m = SymFn::basis_element(Basis::Monomial, p(&[1, 1, 1]));
    println!("m_[1,1,1] = {}", m_to_p(&m)?);

    let m1 = SymFn::basis_element(Basis::Monomial, p(&[1]));
    let m2 = SymFn::basis_element(Basis::Monomial, p(&[2]));
    println!("m_1 * m_2 = {}", m_multiply(&m1, &m2)?);

    // <p_λ, p_μ> = z_λ κ^{-ℓ(λ)} δ_{λμ}
    for l in [p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
        let x = SymFn::basis_element(Basis::PowerSum, l.clone());
        println!("<p_{l}, p_{l}> = {}", deformed_inner(&x, &x)?);
    }
    let e2 = m_to_p(&SymFn::basis_element(Basis::Monomial, p(&[1, 1])))?;
    println!("<e_2, e_2> = {}", deformed_inner(&e2, &e2)?);
    Ok(())
}
