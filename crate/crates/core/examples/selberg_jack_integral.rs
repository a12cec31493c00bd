//! Exact normalized Selberg integrals of Jack polynomials, checked against the
//! Gamma-product formula in floating point, including a non-integer κ.

use num_traits::ToPrimitive;

use selberg_core::asymptotics::asymptotic_profile;
use selberg_core::exactnum::rat;
use selberg_core::partitions::Partition;
use selberg_core::selberg::{kaneko_direct_numeric, selberg_jack_normalized, SelbergParams};

fn main() -> selberg_core::Result<()> {
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
        let l = Partition::new(parts)?;
        let r = selberg_jack_normalized(&l, &SelbergParams::symbolic())?;
        let prof = asymptotic_profile(&r.value)?;
        println!("<P_{l}> = {}", r.value);
        println!("    ~ N^{} * {}", prof.degree, prof.leading);
    }

    let l = Partition::new(vec![2, 1])?;
    let (n, a, b, kappa) = (5, rat(2, 1), rat(3, 1), rat(1, 2));
    let params = SelbergParams::symbolic().with_n(n as i64).with_a(a.clone()).with_b(b.clone()).with_kappa(kappa.clone());
    let exact = selberg_jack_normalized(&l, &params)?;
    let exact_f = exact.value.value().as_constant().and_then(|x| x.to_f64()).unwrap_or(f64::NAN);
    let f = |x: &num_rational::BigRational| x.to_f64().unwrap();
    let numeric = kaneko_direct_numeric(&l, n, f(&a), f(&b), f(&kappa))?;
    println!("\nP_{l}, N={n}, a={a}, b={b}, kappa={kappa}:");
    println!("  exact   {} = {exact_f:.15}", exact.value);
    println!("  lgamma  {numeric:.15}");
    println!("  rel err {:.1e}", ((numeric - exact_f) / exact_f).abs());
    Ok(())
}
