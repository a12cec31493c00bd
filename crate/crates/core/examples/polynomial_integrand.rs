//! Any polynomial integrand: symmetrize, expand in Jack polynomials, integrate
//! term by term. Reads `coeff : e1,e2,...` lines from a file if given.
//!
//!     cargo run --example polynomial_integrand -- crates/core/examples/data/mixed.poly

use selberg_core::exactnum::{ParamScalar, Var};
use selberg_core::oracle::{moment_integrate, DensePoly};
use selberg_core::selberg::{parse_poly_integrand, selberg_general, SelbergParams};

const DEFAULT: &str = "\
# x1^2 x2 - 3 x3
1 : 2,1
-3 : 0,0,1
";

fn main() -> selberg_core::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| selberg_core::Error::Parse(format!("{path}: {e}")))?,
        None => DEFAULT.to_string(),
    };
    let f = parse_poly_integrand(&text)?;

    let symbolic = selberg_general(&f, &SelbergParams::symbolic())?;
    println!("<f> = {}", symbolic.value);

    // Cross-check by brute-force expansion at N = 3, κ = 1.
    let params = SelbergParams::symbolic().with_n(3).with_kappa(1);
    let via_jack = selberg_general(&f, &params)?;
    let (a, b) = (ParamScalar::var(Var::A), ParamScalar::var(Var::B));
    let brute = moment_integrate(&DensePoly::from_terms(3, &f)?, &a, &b, 1)?;
    println!("N=3, kappa=1: {}", via_jack.value);
    println!("brute force : {brute}");
    println!("equal: {}", *via_jack.value.value() == brute);
    Ok(())
}
