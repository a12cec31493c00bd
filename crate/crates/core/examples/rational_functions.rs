//! Exact rational functions in the integral's parameters: build, combine,
//! cancel, evaluate, print.

use selberg_core::exactnum::{parse_scalar, rat, to_text, Bindings, ParamScalar, Style, Var};

fn main() -> selberg_core::Result<()> {
    let kappa = ParamScalar::var(Var::Kappa);
    let n = ParamScalar::var(Var::N);
    // a + κ(N-1), kept as one irreducible factor
    let top = parse_scalar("a + kappa*N - kappa")?;
    let bottom = parse_scalar("a + b + 2*kappa*(N - 1)")?;
    let mean = n.mul(&top).div(&bottom)?;
    println!("<p_1>         = {mean}");
    println!("latex         = {}", to_text(&mean, Style::Latex));

    // Sums go over a common denominator; shared factors cancel.
    let x = ParamScalar::one().div(&kappa.add(&ParamScalar::one()))?;
    let y = kappa.div(&kappa.add(&ParamScalar::one()))?;
    println!("1/(k+1) + k/(k+1) = {}", x.add(&y));

    let at = Bindings::new()
        .with(Var::A, rat(1, 1))
        .with(Var::B, rat(1, 1))
        .with(Var::Kappa, rat(1, 2))
        .with(Var::N, rat(4, 1));
    println!("<p_1> at a=b=1, kappa=1/2, N=4: {}", mean.eval(&at)?);

    // Partial binding leaves a function of N only.
    let in_n = mean.substitute_values(&Bindings::new().with(Var::A, rat(1, 1)).with(Var::B, rat(1, 1)))?;
    println!("a=b=1         = {in_n}");

    let pole = Bindings::new().with(Var::A, rat(-2, 1)).with(Var::B, rat(0, 1)).with(Var::Kappa, rat(1, 1)).with(Var::N, rat(2, 1));
    println!("at a pole     : {}", mean.eval(&pole).unwrap_err());
    Ok(())
}
