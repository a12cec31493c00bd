//! Sparse multivariate polynomials with integer coefficients over the fixed
//! indeterminate list.
//!
//! Monomials pack eight 7-bit exponents into a `u64`, `kappa` in the most
//! significant byte, so the raw integer order is lexicographic order and the
//! graded lexicographic order is `(total degree, raw)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of indeterminates known to the crate.
pub const NVARS: usize = 8;

/// The indeterminates, in monomial-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Kappa,
    A,
    B,
    Ell,
    Q,
    T,
    U,
    N,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Kappa,
        Var::A,
        Var::B,
        Var::Ell,
        Var::Q,
        Var::T,
        Var::U,
        Var::N,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Canonical ASCII name used by the text format.
    pub fn name(self) -> &'static str {
        match self {
            Var::Kappa => "kappa",
            Var::A => "a",
            Var::B => "b",
            Var::Ell => "ell",
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
            Var::N => "N",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Kappa => "\\kappa",
            Var::Ell => "\\ell",
            other => other.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "kappa" | "κ" | "k" => Var::Kappa,
            "a" => Var::A,
            "b" => Var::B,
            "ell" | "ℓ" => Var::Ell,
            "q" => Var::Q,
            "t" => Var::T,
            "u" => Var::U,
            "N" => Var::N,
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

/// A power product of the indeterminates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(v: Var) -> u32 {
        56 - 8 * v.index() as u32
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        assert!(exp < 128, "exponent {exp} out of range");
        Monomial((exp as u64) << Self::shift(v))
    }

    pub fn from_exponents(exps: &[u32; NVARS]) -> Monomial {
        Var::ALL
            .iter()
            .fold(Monomial::ONE, |m, &v| m.mul(Monomial::var(v, exps[v.index()])))
    }

    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> Self::shift(v)) & 0xff) as u32
    }

    pub fn exponents(self) -> [u32; NVARS] {
        let mut out = [0; NVARS];
        for v in Var::ALL {
            out[v.index()] = self.exponent(v);
        }
        out
    }

    pub fn degree(self) -> u32 {
        self.0.to_be_bytes().iter().map(|&b| b as u32).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        let raw = self.0 + other.0;
        assert!(raw & HIGH_BITS == 0, "monomial exponent overflow");
        Monomial(raw)
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(self, other: Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0 - other.0)
    }

    pub fn without(self, v: Var) -> Monomial {
        Monomial(self.0 & !(0xff << Self::shift(v)))
    }

    /// Componentwise minimum.
    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for v in Var::ALL {
            exps[v.index()] = self.exponent(v).min(other.exponent(v));
        }
        Monomial::from_exponents(&exps)
    }

    /// Bitmask of the indeterminates that occur.
    pub fn support(self) -> u8 {
        Var::ALL
            .iter()
            .filter(|&&v| self.exponent(v) > 0)
            .fold(0u8, |m, &v| m | (1 << v.index()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonoDisplay(*self))
    }
}

struct MonoDisplay(Monomial);

impl fmt::Display for MonoDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct MonoHasher(u64);

impl Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(8) ^ b as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (x ^ (x >> 29)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        self.0 ^= self.0 >> 32;
    }
}

type MonoMap<V> = HashMap<u64, V, BuildHasherDefault<MonoHasher>>;

/// Sparse polynomial over the integers; terms are kept sorted in descending
/// graded lexicographic order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut acc: MonoMap<BigInt> = MonoMap::default();
        for (m, c) in iter {
            *acc.entry(m.0).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(map: MonoMap<BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Monomial(m), c))
            .collect();
        terms.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    pub fn is_affine_linear(&self) -> bool {
        self.total_degree() <= 1
    }

    /// Bitmask of indeterminates that occur.
    pub fn support(&self) -> u8 {
        self.terms.iter().fold(0, |s, (m, _)| s | m.support())
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.support() & (1 << v.index()) != 0
    }

    pub fn variables(&self) -> Vec<Var> {
        let s = self.support();
        Var::ALL
            .into_iter()
            .filter(|v| s & (1 << v.index()) != 0)
            .collect()
    }

    /// The single indeterminate of a univariate non-constant polynomial.
    pub fn univariate_var(&self) -> Option<Var> {
        match self.variables().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Linear-time merge of two sorted term lists.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(y[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &x[i].1 + &y[j].1;
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        MultiPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            let mut out = big.mul_monomial(*m);
            if !c.is_one() {
                for t in &mut out.terms {
                    t.1 *= c;
                }
            }
            return out;
        }
        let mut acc: MonoMap<BigInt> = MonoMap::default();
        acc.reserve(big.len() * 2);
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                let key = ms.mul(*mb).0;
                match acc.get_mut(&key) {
                    Some(e) => *e += cs * cb,
                    None => {
                        acc.insert(key, cs * cb);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits into `(signed content, primitive part with positive leading
    /// coefficient)`.
    pub fn primitive(&self) -> (BigInt, MultiPoly) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return (g, self.clone());
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c / &g)).collect();
        (g, MultiPoly { terms })
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |g, (m, _)| g.gcd(*m))
    }

    /// Divides every monomial by `m`; caller guarantees divisibility.
    pub fn div_monomial(&self, m: Monomial) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(x, c)| (x.div(m), c.clone())).collect();
        terms.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
        MultiPoly { terms }
    }

    /// Exact division over the integers, `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if lm.is_one() && divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((*m, q));
            }
            return Some(MultiPoly { terms });
        }
        for v in Var::ALL {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if !lm.divides(*m) {
                    return None;
                }
                let (q, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.div(*lm), q));
            }
            return Some(MultiPoly { terms });
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(m) {
                return None;
            }
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm = m.div(*lm);
            for (dm, dc) in &divisor.terms[1..] {
                let key = dm.mul(qm);
                let delta = &qc * dc;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= delta;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly { terms: quot })
    }

    /// Groups terms by their exponent of `v`: entry `d` is the coefficient of
    /// `v^d`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.without(v), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut terms| {
                terms.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
                MultiPoly { terms }
            })
            .collect()
    }

    /// Substitutes `v := value / den` and returns `p` such that the result is
    /// `p / den^d`, `d = degree_in(v)`.
    pub fn substitute(&self, v: Var, value: &MultiPoly, den: &BigInt) -> (MultiPoly, u32) {
        let d = self.degree_in(v);
        if d == 0 {
            return (self.clone(), 0);
        }
        let coeffs = self.coefficients_in(v);
        let mut value_pows = vec![MultiPoly::one()];
        for i in 1..=d as usize {
            value_pows.push(value_pows[i - 1].mul(value));
        }
        let mut den_pows = vec![BigInt::one()];
        for i in 1..=d as usize {
            den_pows.push(&den_pows[i - 1] * den);
        }
        let mut out = MultiPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.scale(&den_pows[d as usize - e]);
            out = out.add(&scaled.mul(&value_pows[e]));
        }
        (out, d)
    }

    /// Evaluates with every occurring indeterminate supplied by `lookup`.
    pub fn eval_with<F>(&self, lookup: F) -> Option<num_rational::BigRational>
    where
        F: Fn(Var) -> Option<num_rational::BigRational>,
    {
        use num_rational::BigRational;
        let vars = self.variables();
        let mut values: [Option<BigRational>; NVARS] = Default::default();
        for v in vars {
            values[v.index()] = Some(lookup(v)?);
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    let x = values[v.index()].as_ref().expect("bound above");
                    t *= num_traits::pow::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Some(total)
    }

    /// Writes with variable names produced by `name`.
    pub fn fmt_with(
        &self,
        f: &mut impl fmt::Write,
        name: impl Fn(Var) -> &'static str,
        mul: &str,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut wrote = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str(mul)?;
                }
                wrote = true;
                f.write_str(name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| {
                for (x, y) in self.terms.iter().zip(&other.terms) {
                    let o = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, Var::name, "*")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Rational roots of a univariate integer polynomial, found by the rational
/// root test. Gives up (returns no roots) when the extreme coefficients are
/// too large to enumerate divisors cheaply.
pub(crate) fn rational_roots(coeffs_low_to_high: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    const LIMIT: u64 = 1_000_000_000_000;
    let n = coeffs_low_to_high.len();
    if n < 2 {
        return Vec::new();
    }
    let a0 = coeffs_low_to_high[0].abs();
    let an = coeffs_low_to_high[n - 1].abs();
    let (Some(a0), Some(an)) = (to_small(&a0, LIMIT), to_small(&an, LIMIT)) else {
        return Vec::new();
    };
    if a0 == 0 {
        return Vec::new();
    }
    let ps = divisors(a0);
    let qs = divisors(an);
    let mut roots = Vec::new();
    for q in &qs {
        for p in &ps {
            if num_integer::gcd(*p, *q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let p = BigInt::from(*p) * sign;
                let q = BigInt::from(*q);
                // Horner on the homogenized form: sum a_i p^i q^(n-1-i)
                let mut total = BigInt::zero();
                let mut qpow = BigInt::one();
                for c in coeffs_low_to_high.iter().rev() {
                    total = total * &p + c * &qpow;
                    qpow *= &q;
                }
                if total.is_zero() {
                    roots.push((p, q));
                }
            }
        }
    }
    roots
}

fn to_small(x: &BigInt, limit: u64) -> Option<u64> {
    let v: u64 = x.try_into().ok()?;
    (v <= limit).then_some(v)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, &[(Var, u32)])]) -> MultiPoly {
        MultiPoly::from_terms(terms.iter().map(|(c, vs)| {
            let m = vs
                .iter()
                .fold(Monomial::ONE, |m, &(v, e)| m.mul(Monomial::var(v, e)));
            (m, BigInt::from(*c))
        }))
    }

    #[test]
    fn grlex_order() {
        let k = Monomial::var(Var::Kappa, 1);
        let a2 = Monomial::var(Var::A, 2);
        let n = Monomial::var(Var::N, 1);
        assert!(a2 > k);
        assert!(k > n);
        assert!(Monomial::var(Var::A, 1) > n);
        assert!(k.divides(k.mul(n)));
        assert!(!a2.divides(k.mul(n)));
    }

    #[test]
    fn mul_and_divide() {
        use Var::*;
        let x = p(&[(1, &[(Q, 1)]), (-1, &[])]);
        let y = p(&[(1, &[(Q, 1)]), (1, &[])]);
        let prod = x.mul(&y);
        assert_eq!(prod, p(&[(1, &[(Q, 2)]), (-1, &[])]));
        assert_eq!(prod.div_exact(&x), Some(y.clone()));
        assert_eq!(prod.div_exact(&p(&[(1, &[(Q, 1)]), (2, &[])])), None);
        let multi = p(&[(2, &[(Kappa, 1), (N, 1)]), (1, &[(A, 1)]), (1, &[(B, 1)])]);
        let big = multi.mul(&multi).mul(&y);
        assert_eq!(big.div_exact(&multi).unwrap(), multi.mul(&y));
    }

    #[test]
    fn roots_of_quadratic() {
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        let r = rational_roots(&[BigInt::from(1), BigInt::from(-3), BigInt::from(2)]);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&(BigInt::from(1), BigInt::from(1))));
        assert!(r.contains(&(BigInt::from(1), BigInt::from(2))));
    }

    #[test]
    fn substitute_rational() {
        use Var::*;
        // (a + kappa)^2 with a := 1/2 -> numerator (1 + 2 kappa)^2 over 2^2
        let f = p(&[(1, &[(A, 1)]), (1, &[(Kappa, 1)])]).pow(2);
        let (g, d) = f.substitute(A, &MultiPoly::constant(1.into()), &BigInt::from(2));
        assert_eq!(d, 2);
        assert_eq!(g, p(&[(2, &[(Kappa, 1)]), (1, &[])]).pow(2));
    }
}
