//! Exact rational functions over the named indeterminates.
//!
//! A value is stored as `unit * prod F_i^{e_i}` with each `F_i` a primitive
//! integer polynomial with positive leading coefficient and `e_i` a nonzero
//! integer. Multiplication and division only touch exponents. Addition pulls
//! out the factors common to all summands, expands what is left into one
//! polynomial and trial-divides it by the common denominator factors. Since
//! every denominator this crate builds is a product of irreducible factors,
//! that trial division leaves the result in lowest terms.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::poly::{rational_roots, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};

/// An exact element of `Q(kappa, a, b, ell, q, t, u, N)`.
#[derive(Clone, Debug)]
pub struct ParamScalar {
    unit: BigRational,
    factors: BTreeMap<MultiPoly, i32>,
}

/// The four field operations, for callers that pick one at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` exactly.
pub fn scalar_arith(x: &ParamScalar, y: &ParamScalar, op: ArithOp) -> Result<ParamScalar> {
    Ok(match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.div(y)?,
    })
}

/// Splits a polynomial into `unit * prod factors`: sign and content,
/// monomial content, and rational roots when univariate.
pub(crate) fn factor_poly(p: &MultiPoly) -> (BigRational, Vec<(MultiPoly, i32)>) {
    if p.is_zero() {
        return (BigRational::zero(), Vec::new());
    }
    let (c, prim) = p.primitive();
    let unit = BigRational::from_integer(c);
    let mut out = Vec::new();
    let mc = prim.monomial_content();
    let mut rest = if mc.is_one() {
        prim
    } else {
        for v in Var::ALL {
            let e = mc.exponent(v);
            if e > 0 {
                out.push((MultiPoly::var(v), e as i32));
            }
        }
        prim.div_monomial(mc)
    };
    if rest.is_constant() {
        return (unit, out);
    }
    if let Some(v) = rest.univariate_var() {
        if rest.degree_in(v) > 1 {
            let coeffs: Vec<BigInt> = rest
                .coefficients_in(v)
                .into_iter()
                .map(|c| c.as_constant().expect("univariate"))
                .collect();
            for (num, den) in rational_roots(&coeffs) {
                // root num/den  <->  factor den*v - num
                let lin = MultiPoly::monomial(Monomial::var(v, 1), den).sub(&MultiPoly::constant(num));
                let (_, lin) = lin.primitive();
                let mut mult = 0;
                while let Some(q) = rest.div_exact(&lin) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((lin, mult));
                }
            }
            let (c2, prim2) = rest.primitive();
            debug_assert!(c2.is_one());
            rest = prim2;
        }
    }
    if !rest.is_constant() {
        out.push((rest, 1));
    }
    (unit, out)
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            unit: BigRational::zero(),
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        ParamScalar {
            unit: c,
            factors: BTreeMap::new(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(BigRational::new(n.into(), d.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut factors = BTreeMap::new();
        factors.insert(MultiPoly::var(v), 1);
        ParamScalar {
            unit: BigRational::one(),
            factors,
        }
    }

    /// Normalizes an integer polynomial into factored form.
    pub fn from_poly(p: &MultiPoly) -> Self {
        let (unit, fs) = factor_poly(p);
        let mut out = ParamScalar {
            unit,
            factors: BTreeMap::new(),
        };
        if out.unit.is_zero() {
            return out;
        }
        for (f, e) in fs {
            out.push_factor(f, e);
        }
        out
    }

    /// `c0 + sum c_v v`, built directly as one affine factor.
    pub fn affine(c0: BigRational, terms: &[(Var, BigRational)]) -> Self {
        let mut den = c0.denom().clone();
        for (_, c) in terms {
            den = den.lcm(c.denom());
        }
        let scale = |c: &BigRational| (c * BigRational::from_integer(den.clone())).to_integer();
        let mut poly_terms = vec![(Monomial::ONE, scale(&c0))];
        for (v, c) in terms {
            poly_terms.push((Monomial::var(*v, 1), scale(c)));
        }
        let p = MultiPoly::from_terms(poly_terms);
        let mut out = Self::from_poly(&p);
        out.unit /= BigRational::from_integer(den);
        out
    }

    fn push_factor(&mut self, f: MultiPoly, e: i32) {
        if e == 0 {
            return;
        }
        match self.factors.entry(f) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += e;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(e);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.unit.is_one()
    }

    /// The rational value when no indeterminate occurs.
    pub fn as_constant(&self) -> Option<&BigRational> {
        self.factors.is_empty().then_some(&self.unit)
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    /// Factors with their (nonzero) exponents, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (&MultiPoly, i32)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    /// `true` when every factor is affine-linear (the fast-path shape).
    pub fn is_factored(&self) -> bool {
        self.factors.keys().all(MultiPoly::is_affine_linear)
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.factors.keys().any(|f| f.depends_on(v))
    }

    pub fn variables(&self) -> Vec<Var> {
        let s = self.factors.keys().fold(0u8, |s, f| s | f.support());
        Var::ALL
            .into_iter()
            .filter(|v| s & (1 << v.index()) != 0)
            .collect()
    }

    pub fn neg(&self) -> Self {
        ParamScalar {
            unit: -&self.unit,
            factors: self.factors.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.unit *= &other.unit;
        for (f, &e) in &other.factors {
            out.push_factor(f.clone(), e);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.unit *= c;
        out
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamScalar {
            unit: self.unit.recip(),
            factors: self.factors.iter().map(|(f, &e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?).cancel())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if e == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(ParamScalar {
            unit: num_traits::pow::pow(self.unit.clone(), e as usize),
            factors: self.factors.iter().map(|(f, &x)| (f.clone(), x * e)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::sum_many([self, other])
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Sum of many values over their common denominator, reduced once.
    pub fn sum_many<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a ParamScalar>,
    {
        let items: Vec<&ParamScalar> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items[0].clone(),
            _ => {}
        }
        // Common part: minimum exponent of every factor, absence counting as 0.
        let keys: Vec<MultiPoly> = items
            .iter()
            .flat_map(|x| x.factors.keys().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut common: BTreeMap<MultiPoly, i32> = BTreeMap::new();
        for f in keys {
            let m = items
                .iter()
                .map(|x| x.factors.get(&f).copied().unwrap_or(0))
                .min()
                .unwrap_or(0);
            if m != 0 {
                common.insert(f, m);
            }
        }

        let mut lcm_den = BigInt::one();
        for x in &items {
            lcm_den = lcm_den.lcm(x.unit.denom());
        }
        let lcm_q = BigRational::from_integer(lcm_den.clone());

        let expand = |x: &&ParamScalar| -> MultiPoly {
            let scale = (&x.unit * &lcm_q).to_integer();
            let mut rest: Vec<(&MultiPoly, u32)> = Vec::new();
            for (f, &e) in &x.factors {
                let c = common.get(f).copied().unwrap_or(0);
                if e - c > 0 {
                    rest.push((f, (e - c) as u32));
                }
            }
            for (f, &c) in &common {
                if c < 0 && !x.factors.contains_key(f) {
                    rest.push((f, (-c) as u32));
                }
            }
            expand_product(scale, rest)
        };

        let parallel = items.len() >= 4;
        let s = if parallel {
            items
                .par_iter()
                .map(expand)
                .reduce(MultiPoly::zero, |x, y| x.add(&y))
        } else {
            items.iter().map(expand).fold(MultiPoly::zero(), |x, y| x.add(&y))
        };
        if s.is_zero() {
            return Self::zero();
        }
        let mut s = s;
        let mut out = ParamScalar {
            unit: BigRational::new(BigInt::one(), lcm_den),
            factors: BTreeMap::new(),
        };
        for (f, e) in common {
            let mut e = e;
            while e < 0 {
                match s.div_exact(&f) {
                    Some(q) => {
                        s = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            out.push_factor(f, e);
        }
        let rest = Self::from_poly(&s);
        out.mul(&rest)
    }

    /// Numerator and denominator as expanded integer polynomials.
    pub fn expanded(&self) -> (MultiPoly, MultiPoly) {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (f, &e) in &self.factors {
            if e > 0 {
                num.push((f, e as u32));
            } else {
                den.push((f, (-e) as u32));
            }
        }
        (
            expand_product(self.unit.numer().clone(), num),
            expand_product(self.unit.denom().clone(), den),
        )
    }

    /// Numerator factors (positive exponents) times the unit's numerator.
    pub fn numerator(&self) -> ParamScalar {
        let mut out = ParamScalar::constant(BigRational::from_integer(self.unit.numer().clone()));
        for (f, &e) in &self.factors {
            if e > 0 {
                out.push_factor(f.clone(), e);
            }
        }
        out
    }

    /// Denominator factors, as a positive-exponent value.
    pub fn denominator(&self) -> ParamScalar {
        let mut out = ParamScalar::constant(BigRational::from_integer(self.unit.denom().clone()));
        for (f, &e) in &self.factors {
            if e < 0 {
                out.push_factor(f.clone(), -e);
            }
        }
        out
    }

    /// Exact value with every indeterminate bound.
    pub fn eval(&self, bindings: &Bindings) -> Result<BigRational> {
        let mut num = self.unit.clone();
        let mut den = BigRational::one();
        for (f, &e) in &self.factors {
            let v = f
                .eval_with(|v| bindings.get(v).cloned())
                .ok_or_else(|| Error::Unbound(first_unbound(f, bindings)))?;
            if e < 0 {
                if v.is_zero() {
                    return Err(Error::Pole {
                        factor: f.to_string(),
                    });
                }
                den *= num_traits::pow::pow(v, (-e) as usize);
            } else {
                num *= num_traits::pow::pow(v, e as usize);
            }
        }
        Ok(num / den)
    }

    /// Floating-point value; used only by numeric cross-checks.
    pub fn eval_f64(&self, lookup: impl Fn(Var) -> Option<f64>) -> Option<f64> {
        let mut acc = num_traits::ToPrimitive::to_f64(&self.unit)?;
        for (f, &e) in &self.factors {
            let mut val = 0.0;
            for (m, c) in f.terms() {
                let mut t = num_traits::ToPrimitive::to_f64(c)?;
                for v in Var::ALL {
                    let p = m.exponent(v);
                    if p > 0 {
                        t *= lookup(v)?.powi(p as i32);
                    }
                }
                val += t;
            }
            acc *= val.powi(e);
        }
        Some(acc)
    }

    /// Replaces `v` by `value` (an arbitrary rational function).
    pub fn substitute(&self, v: Var, value: &ParamScalar) -> Result<ParamScalar> {
        if !self.depends_on(v) {
            return Ok(self.clone());
        }
        let (vn, vd) = value.expanded();
        let vd_scalar = value.denominator();
        // value = vn / vd; vd may be a polynomial, so homogenize by hand.
        let mut out = ParamScalar::constant(self.unit.clone());
        for (f, &e) in &self.factors {
            if !f.depends_on(v) {
                out.push_factor(f.clone(), e);
                continue;
            }
            let g = substitute_poly(f, v, &vn, &vd);
            let (gp, d) = g;
            let gs = ParamScalar::from_poly(&gp);
            if gs.is_zero() && e < 0 {
                return Err(Error::Pole {
                    factor: f.to_string(),
                });
            }
            let piece = gs.div(&vd_scalar.pow(d as i32)?).unwrap_or_else(|_| unreachable!());
            out = out.mul(&piece.pow(e)?);
            if out.is_zero() {
                return Ok(out);
            }
        }
        Ok(out.cancel())
    }

    /// Substitutes every bound indeterminate of `bindings`, leaving the rest.
    pub fn substitute_values(&self, bindings: &Bindings) -> Result<ParamScalar> {
        let mut out = self.clone();
        for v in Var::ALL {
            if let Some(x) = bindings.get(v) {
                out = out.substitute(v, &ParamScalar::constant(x.clone()))?;
            }
        }
        Ok(out)
    }

    /// Cancels denominator factors that divide numerator factors.
    pub fn cancel(mut self) -> Self {
        loop {
            let mut hit = None;
            'outer: for (d, &ed) in &self.factors {
                if ed >= 0 {
                    continue;
                }
                for (n, &en) in &self.factors {
                    if en <= 0 || n.total_degree() <= d.total_degree() {
                        continue;
                    }
                    if let Some(q) = n.div_exact(d) {
                        hit = Some((d.clone(), n.clone(), q));
                        break 'outer;
                    }
                }
            }
            let Some((d, n, q)) = hit else {
                return self;
            };
            // n -> d * q; multiply one copy of n out and back in as d*q.
            self.push_factor(n, -1);
            self.push_factor(d, 1);
            let qs = ParamScalar::from_poly(&q);
            self = self.mul(&qs);
        }
    }

    /// Structural equality of representations (stronger than `==`).
    pub fn same_repr(&self, other: &Self) -> bool {
        self.unit == other.unit && self.factors == other.factors
    }
}

fn first_unbound(f: &MultiPoly, b: &Bindings) -> String {
    f.variables()
        .into_iter()
        .find(|v| b.get(*v).is_none())
        .map(|v| v.name().to_string())
        .unwrap_or_default()
}

/// `f(v := vn/vd) = p / vd^d`.
fn substitute_poly(f: &MultiPoly, v: Var, vn: &MultiPoly, vd: &MultiPoly) -> (MultiPoly, u32) {
    if let Some(c) = vd.as_constant() {
        return f.substitute(v, vn, &c);
    }
    let d = f.degree_in(v);
    let coeffs = f.coefficients_in(v);
    let mut out = MultiPoly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = c.mul(&vn.pow(e as u32)).mul(&vd.pow(d - e as u32));
        out = out.add(&term);
    }
    (out, d)
}

/// `scale * prod f^e`, multiplying smallest factors first.
pub(crate) fn expand_product(scale: BigInt, mut factors: Vec<(&MultiPoly, u32)>) -> MultiPoly {
    factors.sort_by_key(|(f, _)| (f.variables().len(), f.len()));
    let mut acc = MultiPoly::constant(scale);
    for (f, e) in factors {
        for _ in 0..e {
            acc = acc.mul(f);
        }
    }
    acc
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.same_repr(other) {
            return true;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for ParamScalar {}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::integer(n)
    }
}

impl From<BigRational> for ParamScalar {
    fn from(c: BigRational) -> Self {
        ParamScalar::constant(c)
    }
}

impl From<Var> for ParamScalar {
    fn from(v: Var) -> Self {
        ParamScalar::var(v)
    }
}

impl std::ops::Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: Self) -> ParamScalar {
        ParamScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: Self) -> ParamScalar {
        ParamScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: Self) -> ParamScalar {
        ParamScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar::neg(self)
    }
}

/// Values bound to some of the indeterminates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    values: [Option<BigRational>; super::poly::NVARS],
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, x: BigRational) -> Self {
        self.values[v.index()] = Some(x);
        self
    }

    pub fn set(&mut self, v: Var, x: BigRational) {
        self.values[v.index()] = Some(x);
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.values[v.index()].as_ref()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &BigRational)> {
        Var::ALL
            .into_iter()
            .filter_map(|v| self.get(v).map(|x| (v, x)))
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_scalar(f, self, super::text::Style::Plain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Var::*;

    fn k() -> ParamScalar {
        ParamScalar::var(Kappa)
    }

    #[test]
    fn inverse_cancellation() {
        let x = k().mul(&k().inv().unwrap());
        assert!(x.is_one());
    }

    #[test]
    fn one_minus_q_squared_over_one_minus_q() {
        let q = ParamScalar::var(Q);
        let one = ParamScalar::one();
        let num = one.sub(&q.mul(&q));
        let den = one.sub(&q);
        let r = num.div(&den).unwrap();
        assert_eq!(r, one.add(&q));
        assert!(r.same_repr(&one.add(&q)));
    }

    #[test]
    fn common_denominator() {
        let a = ParamScalar::var(A);
        let b = ParamScalar::var(B);
        let apb = a.add(&b);
        let x = a.add(&k()).div(&apb).unwrap();
        let y = b.div(&apb).unwrap();
        let s = x.add(&y);
        let expect = a.add(&b).add(&k()).div(&apb).unwrap();
        assert!(s.same_repr(&expect), "{s} vs {expect}");
    }

    #[test]
    fn divide_by_zero() {
        assert_eq!(k().div(&ParamScalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn sum_cancels_to_zero() {
        let x = ParamScalar::affine(BigRational::one(), &[(Kappa, BigRational::one())]);
        let inv = x.inv().unwrap();
        assert!(inv.sub(&inv).is_zero());
    }

    #[test]
    fn eval_pole_reports_factor() {
        let n = ParamScalar::var(N);
        let f = n.sub(&ParamScalar::integer(2)).inv().unwrap();
        let err = f.eval(&Bindings::new().with(N, BigRational::from_integer(2.into())));
        assert!(matches!(err, Err(Error::Pole { .. })));
    }

    #[test]
    fn substitute_collapses() {
        // (a + kappa)/(a + b + kappa) at b := 0 is 1
        let a = ParamScalar::var(A);
        let b = ParamScalar::var(B);
        let f = a.add(&k()).div(&a.add(&b).add(&k())).unwrap();
        let g = f.substitute(B, &ParamScalar::zero()).unwrap();
        assert!(g.is_one(), "{g}");
    }
}
