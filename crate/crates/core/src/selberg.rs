//! Normalized Selberg-like integrals
//! `⟨f⟩♯ = ∫ f ∏|x_i - x_j|^{2κ} ∏ x_i^{a-1}(1-x_i)^{b-1} / ∫ (same with f = 1)`
//! over `[0,1]^N`, as exact rational functions of `N`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Bindings, MultiPoly, NRationalFn, ParamScalar, Var};
use crate::jack::{alpha_coeff, jack_expand};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{m_to_p, Basis, SymFn};

/// A parameter that is either left symbolic or bound to a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Param {
    #[default]
    Symbolic,
    Value(BigRational),
}

impl Param {
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            Param::Symbolic => None,
            Param::Value(v) => Some(v),
        }
    }
}

impl From<BigRational> for Param {
    fn from(v: BigRational) -> Self {
        Param::Value(v)
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Value(BigRational::from_integer(v.into()))
    }
}

impl FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("symbolic") {
            Ok(Param::Symbolic)
        } else {
            Ok(Param::Value(parse_rational(s)?))
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Symbolic => f.write_str("symbolic"),
            Param::Value(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters `a, b, κ, N` of the integral.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SelbergParams {
    pub a: Param,
    pub b: Param,
    pub kappa: Param,
    #[serde(rename = "N")]
    pub n: Param,
}

impl SelbergParams {
    /// Everything symbolic.
    pub fn symbolic() -> Self {
        Self::default()
    }

    pub fn with_a(mut self, a: impl Into<Param>) -> Self {
        self.a = a.into();
        self
    }

    pub fn with_b(mut self, b: impl Into<Param>) -> Self {
        self.b = b.into();
        self
    }

    pub fn with_kappa(mut self, kappa: impl Into<Param>) -> Self {
        self.kappa = kappa.into();
        self
    }

    pub fn with_n(mut self, n: impl Into<Param>) -> Self {
        self.n = n.into();
        self
    }

    /// Bound `a, b, κ` must be positive, bound `N` a positive integer.
    pub fn validate(&self) -> Result<()> {
        for (name, p) in [("a", &self.a), ("b", &self.b), ("kappa", &self.kappa)] {
            if let Some(v) = p.value() {
                if !v.is_positive() {
                    return Err(Error::InvalidParams(format!("{name} = {v} must be positive")));
                }
            }
        }
        if let Some(n) = self.n.value() {
            if !n.is_integer() || !n.is_positive() {
                return Err(Error::InvalidParams(format!("N = {n} must be a positive integer")));
            }
        }
        Ok(())
    }

    /// Bound `N`, if any.
    pub fn n_value(&self) -> Option<usize> {
        self.n.value().and_then(|v| v.to_integer().to_usize())
    }

    pub fn bindings(&self) -> Bindings {
        let mut b = Bindings::new();
        for (v, p) in [(Var::A, &self.a), (Var::B, &self.b), (Var::Kappa, &self.kappa), (Var::N, &self.n)] {
            if let Some(x) = p.value() {
                b.set(v, x.clone());
            }
        }
        b
    }
}

/// What was integrated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "arg", rename_all = "snake_case")]
pub enum Integrand {
    PowerSum(usize),
    Jack(String),
    Polynomial(String),
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integrand::PowerSum(k) => write!(f, "p_{k}"),
            Integrand::Jack(l) => write!(f, "P_{l}"),
            Integrand::Polynomial(s) => f.write_str(s),
        }
    }
}

/// An exact normalized integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    pub value: NRationalFn,
    pub integrand: Integrand,
    pub params: SelbergParams,
}

/// `Γ(z+n)/Γ(z) = z (z+1) ... (z+n-1)`, as a product of factors.
pub fn gamma_shift_poly(z: &ParamScalar, n: usize) -> ParamScalar {
    let (num, den) = z.expanded();
    let den_s = ParamScalar::from_poly(&den);
    let mut out = ParamScalar::one();
    for i in 0..n {
        let shifted = num.add(&den.scale(&BigInt::from(i)));
        out = out.mul(&ParamScalar::from_poly(&shifted));
    }
    out.div(&den_s.pow(n as i32).expect("nonzero")).expect("nonzero")
}

fn gamma_shift_of(p: MultiPoly, n: usize) -> ParamScalar {
    let mut out = ParamScalar::one();
    for i in 0..n {
        out = out.mul(&ParamScalar::from_poly(&p.add(&MultiPoly::constant(BigInt::from(i)))));
    }
    out
}

fn poly_lin(c0: i64, terms: &[(MultiPoly, i64)]) -> MultiPoly {
    let mut p = MultiPoly::constant(BigInt::from(c0));
    for (m, c) in terms {
        p = p.add(&m.scale(&BigInt::from(*c)));
    }
    p
}

/// `⟨P_λ⟩♯` with every parameter symbolic.
pub fn selberg_jack_symbolic(lambda: &Partition) -> ParamScalar {
    static CACHE: OnceLock<Mutex<HashMap<Partition, ParamScalar>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(lambda) {
        return v.clone();
    }
    let v = build_jack_integral(lambda);
    cache.lock().expect("poisoned").insert(lambda.clone(), v.clone());
    v
}

fn build_jack_integral(lambda: &Partition) -> ParamScalar {
    let k = MultiPoly::var(Var::Kappa);
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    let kn = k.mul(&MultiPoly::var(Var::N));
    let ell = lambda.len() as i64;
    let mut out = ParamScalar::one();

    for i in 1..=lambda.len() {
        for j in i + 1..=lambda.len() {
            let d = lambda.part(i) - lambda.part(j);
            let gap = (j - i) as i64;
            let upper = gamma_shift_of(k.scale(&BigInt::from(gap + 1)), d);
            let lower = gamma_shift_of(k.scale(&BigInt::from(gap)), d);
            out = out.mul(&upper).div(&lower).expect("positive kappa multiples");
        }
    }
    for i in 1..=lambda.len() {
        let li = lambda.part(i);
        let ii = i as i64;
        // κ(N+1-i) + j over κ(ℓ+1-i) + j
        let up = poly_lin(0, &[(kn.clone(), 1), (k.clone(), 1 - ii)]);
        let down = k.scale(&BigInt::from(ell + 1 - ii));
        out = out.mul(&gamma_shift_of(up, li)).div(&gamma_shift_of(down, li)).expect("nonzero");
        // a + κ(N-i) + j over a + b + κ(2N-i-1) + j
        let up = poly_lin(0, &[(a.clone(), 1), (kn.clone(), 1), (k.clone(), -ii)]);
        let down = poly_lin(0, &[(a.clone(), 1), (b.clone(), 1), (kn.clone(), 2), (k.clone(), -ii - 1)]);
        out = out.mul(&gamma_shift_of(up, li)).div(&gamma_shift_of(down, li)).expect("nonzero");
    }
    out
}

/// `⟨P_λ^{(1/κ)}⟩♯` at the given parameters.
pub fn selberg_jack_normalized(lambda: &Partition, params: &SelbergParams) -> Result<IntegralResult> {
    params.validate()?;
    let value = selberg_jack_symbolic(lambda).substitute_values(&params.bindings())?;
    Ok(IntegralResult {
        value: NRationalFn::new(value),
        integrand: Integrand::Jack(lambda.to_string()),
        params: params.clone(),
    })
}

/// Kaneko's Gamma-product formula for `⟨P_λ⟩` divided by the same for `∅`,
/// in floating point via log-Gamma. Independent of the exact pipeline.
pub fn kaneko_direct_numeric(lambda: &Partition, n: usize, a: f64, b: f64, kappa: f64) -> Result<f64> {
    if lambda.len() > n {
        return Err(Error::TooManyVariables {
            monomial: lambda.to_string(),
            needed: lambda.len(),
            available: n as u64,
        });
    }
    if !(a > 0.0 && b > 0.0 && kappa > 0.0) {
        return Err(Error::InvalidParams("a, b, kappa must be positive".into()));
    }
    let lg = libm::lgamma;
    let part = |i: usize| lambda.part(i) as f64;
    let mut log = 0.0;
    for i in 1..=n {
        for j in i + 1..=n {
            let d = part(i) - part(j);
            if d == 0.0 {
                continue;
            }
            let (x1, x0) = (kappa * (j - i + 1) as f64, kappa * (j - i) as f64);
            log += (lg(d + x1) - lg(x1)) - (lg(d + x0) - lg(x0));
        }
    }
    for i in 1..=n {
        let li = part(i);
        if li == 0.0 {
            continue;
        }
        let e = kappa * (n - i) as f64;
        let f = kappa * (2 * n - i - 1) as f64;
        log += (lg(li + a + e) - lg(a + e)) - (lg(li + a + b + f) - lg(a + b + f));
    }
    Ok(log.exp())
}

/// The per-partition terms `α_{λ,k} ⟨P_λ⟩♯`, symbolic.
pub fn powersum_terms(k: usize) -> Vec<(Partition, ParamScalar)> {
    partitions_of(k)
        .into_par_iter()
        .map(|l| {
            let t = alpha_coeff(&l, k).expect("weights agree").mul(&selberg_jack_symbolic(&l));
            (l, t)
        })
        .collect()
}

fn powersum_symbolic(k: usize) -> ParamScalar {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ParamScalar>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(&k) {
        return (**v).clone();
    }
    let terms: Vec<ParamScalar> = powersum_terms(k).into_iter().map(|(_, t)| t).collect();
    let v = ParamScalar::sum_many(&terms);
    cache.lock().expect("poisoned").insert(k, Arc::new(v.clone()));
    v
}

/// `⟨p_k⟩♯ = sum_λ α_{λ,k} ⟨P_λ⟩♯`.
pub fn selberg_powersum(k: usize, params: &SelbergParams) -> Result<IntegralResult> {
    params.validate()?;
    let bindings = params.bindings();
    let value = if bindings.iter().next().is_none() {
        powersum_symbolic(k)
    } else {
        let terms = powersum_terms(k)
            .into_par_iter()
            .map(|(_, t)| t.substitute_values(&bindings))
            .collect::<Result<Vec<_>>>()?;
        ParamScalar::sum_many(&terms)
    };
    Ok(IntegralResult {
        value: NRationalFn::new(value),
        integrand: Integrand::PowerSum(k),
        params: params.clone(),
    })
}

/// The symbolic `N`, or its bound value.
fn n_scalar(n: &Param) -> ParamScalar {
    match n {
        Param::Symbolic => ParamScalar::var(Var::N),
        Param::Value(v) => ParamScalar::constant(v.clone()),
    }
}

/// `S(x^μ) = c(N) m_μ` with `c(N) = (N-r)! prod_i m_i(μ)! / N!`, `r = ℓ(μ)`.
pub fn symmetrize_monomial(exponents: &[usize], n: &Param) -> Result<(ParamScalar, SymFn)> {
    let mu = Partition::from_exponents(exponents);
    let r = mu.len();
    if let Param::Value(v) = n {
        let available = v.to_integer().to_u64().unwrap_or(0);
        if (r as u64) > available {
            return Err(Error::TooManyVariables {
                monomial: format!("{exponents:?}"),
                needed: r,
                available,
            });
        }
    }
    let nn = n_scalar(n);
    let mut c = ParamScalar::one();
    for m in mu.multiplicities().iter().skip(1) {
        for x in 1..=*m {
            c = c.scale(&BigRational::from_integer(x.into()));
        }
    }
    for i in 0..r {
        c = c.div(&nn.sub(&ParamScalar::integer(i as i64)))?;
    }
    Ok((c, SymFn::basis_element(Basis::Monomial, mu)))
}

/// A polynomial integrand: rational coefficients on exponent vectors.
pub type PolyIntegrand = Vec<(BigRational, Vec<usize>)>;

/// Parses lines `coeff : e1,e2,...`; blank lines and `#` comments are skipped.
pub fn parse_poly_integrand(text: &str) -> Result<PolyIntegrand> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (c, e) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `coeff : e1,e2,...`, got `{line}`")))?;
        let exps = e
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        out.push((parse_rational(c)?, exps));
    }
    Ok(out)
}

/// Symmetrize, expand in Jack polynomials, integrate each `P_λ`.
pub fn selberg_general(f: &PolyIntegrand, params: &SelbergParams) -> Result<IntegralResult> {
    params.validate()?;
    let mut sym = SymFn::zero(Basis::Monomial);
    for (c, exps) in f {
        let (mult, m) = symmetrize_monomial(exps, &params.n)?;
        sym = sym.add(&m.scale(&mult.scale(c)));
    }
    let mut terms = Vec::new();
    for (k, part) in sym.homogeneous_parts() {
        let p = m_to_p(&part)?;
        for (lambda, c) in jack_expand(&p, k)?.terms() {
            terms.push((lambda.clone(), c.clone()));
        }
    }
    let bindings = params.bindings();
    let pieces = terms
        .par_iter()
        .map(|(lambda, c)| c.mul(&selberg_jack_symbolic(lambda)).substitute_values(&bindings))
        .collect::<Result<Vec<_>>>()?;
    let text = f
        .iter()
        .map(|(c, e)| format!("{c}*x^{e:?}"))
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(IntegralResult {
        value: NRationalFn::new(ParamScalar::sum_many(&pieces)),
        integrand: Integrand::Polynomial(if text.is_empty() { "0".into() } else { text }),
        params: params.clone(),
    })
}

/// `x_1^k` as a [`PolyIntegrand`].
pub fn single_power(k: usize) -> PolyIntegrand {
    vec![(BigRational::one(), vec![k])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_scalar, rat};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sym() -> SelbergParams {
        SelbergParams::symbolic()
    }

    #[test]
    fn gamma_shift_examples() {
        let z = ParamScalar::var(Var::A);
        assert!(gamma_shift_poly(&z, 0).is_one());
        let ak = parse_scalar("a + kappa").unwrap();
        assert_eq!(gamma_shift_poly(&ak, 2), parse_scalar("(a + kappa)*(a + kappa + 1)").unwrap());
        assert_eq!(gamma_shift_poly(&ParamScalar::integer(2), 3), ParamScalar::integer(24));
    }

    #[test]
    fn jack_integral_examples() {
        assert!(selberg_jack_normalized(&Partition::empty(), &sym()).unwrap().value.value().is_one());
        let one = selberg_jack_normalized(&p(&[1]), &sym()).unwrap();
        assert_eq!(
            *one.value.value(),
            parse_scalar("N*(a + kappa*(N - 1))/(a + b + 2*kappa*(N - 1))").unwrap()
        );
        for k in 1..=4 {
            let r = selberg_jack_normalized(&Partition::row(k), &sym().with_n(1)).unwrap();
            let mut expect = ParamScalar::one();
            for j in 0..k as i64 {
                let num = parse_scalar(&format!("a + {j}")).unwrap();
                let den = parse_scalar(&format!("a + b + {j}")).unwrap();
                expect = expect.mul(&num).div(&den).unwrap();
            }
            assert_eq!(*r.value.value(), expect);
        }
    }

    #[test]
    fn kaneko_spot_checks() {
        let v = kaneko_direct_numeric(&p(&[1]), 3, 1.0, 1.0, 1.0).unwrap();
        assert!((v - 1.5).abs() < 1e-12);
        assert_eq!(kaneko_direct_numeric(&Partition::empty(), 4, 2.0, 3.0, 0.5).unwrap(), 1.0);
        let params = sym().with_n(5).with_a(2).with_b(3).with_kappa(rat(1, 2));
        let exact = selberg_jack_normalized(&p(&[2, 1]), &params).unwrap();
        let exact = exact.value.value().as_constant().unwrap().to_f64().unwrap();
        let num = kaneko_direct_numeric(&p(&[2, 1]), 5, 2.0, 3.0, 0.5).unwrap();
        assert!(((num - exact) / exact).abs() < 1e-10, "{num} vs {exact}");
    }

    #[test]
    fn powersum_examples() {
        let one = selberg_powersum(1, &sym()).unwrap();
        assert_eq!(*one.value.value(), parse_scalar("N*(kappa*N - kappa + a)/(2*kappa*N - 2*kappa + a + b)").unwrap());
        let two = selberg_powersum(2, &sym().with_n(1)).unwrap();
        assert_eq!(*two.value.value(), parse_scalar("a*(a + 1)/((a + b)*(a + b + 1))").unwrap());
    }

    #[test]
    fn symmetrization() {
        let (c, m) = symmetrize_monomial(&[3], &Param::Symbolic).unwrap();
        assert_eq!(c, parse_scalar("1/N").unwrap());
        assert_eq!(m, SymFn::basis_element(Basis::Monomial, p(&[3])));
        let (c, _) = symmetrize_monomial(&[1, 1], &Param::from(2)).unwrap();
        assert!(c.is_one());
        let (c, _) = symmetrize_monomial(&[2, 1], &Param::Symbolic).unwrap();
        assert_eq!(c, parse_scalar("1/(N*(N - 1))").unwrap());
        assert!(matches!(
            symmetrize_monomial(&[1, 1, 1], &Param::from(2)),
            Err(Error::TooManyVariables { .. })
        ));
    }

    #[test]
    fn general_pipeline_consistency() {
        for k in 1..=3 {
            let g = selberg_general(&single_power(k), &sym()).unwrap();
            let pk = selberg_powersum(k, &sym()).unwrap();
            let expect = pk.value.value().div(&ParamScalar::var(Var::N)).unwrap();
            assert_eq!(*g.value.value(), expect, "k = {k}");
        }
        let unit = selberg_general(&vec![(BigRational::one(), vec![])], &sym()).unwrap();
        assert!(unit.value.value().is_one());
        let params = sym().with_n(2);
        let p2: PolyIntegrand = vec![(BigRational::one(), vec![2, 0]), (BigRational::one(), vec![0, 2])];
        let g = selberg_general(&p2, &params).unwrap();
        assert_eq!(g.value, selberg_powersum(2, &params).unwrap().value);
    }

    #[test]
    fn homogeneity() {
        let params = sym().with_n(3).with_kappa(2);
        let f: PolyIntegrand = vec![(rat(1, 1), vec![2, 1]), (rat(-3, 2), vec![0, 0, 1])];
        let g: PolyIntegrand = f.iter().map(|(c, e)| (c * rat(7, 3), e.clone())).collect();
        let vf = selberg_general(&f, &params).unwrap().value;
        let vg = selberg_general(&g, &params).unwrap().value;
        assert_eq!(vg.value(), &vf.value().scale(&rat(7, 3)));
    }

    #[test]
    fn params_validation() {
        assert!(sym().with_a(0).validate().is_err());
        assert!(sym().with_n(rat(3, 2)).validate().is_err());
        assert!(sym().with_kappa(rat(1, 2)).validate().is_ok());
        assert_eq!("3/4".parse::<Param>().unwrap(), Param::Value(rat(3, 4)));
        assert_eq!("symbolic".parse::<Param>().unwrap(), Param::Symbolic);
    }

    #[test]
    fn poly_file_format() {
        let f = parse_poly_integrand("# p_2 in two variables\n1 : 2,0\n1 : 0,2\n-1/2 : 1, 1\n").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[2], (rat(-1, 2), vec![1, 1]));
        assert!(parse_poly_integrand("1 2,0").is_err());
    }
}
