//! Symmetric functions in the stable (number-of-variables free) setting.
//!
//! Coefficients are [`ParamScalar`]s. The power sums are the working basis
//! because the `κ`-deformed scalar product is diagonal there; monomials are
//! the entry and exit basis for polynomial integrands.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ParamScalar, Var};
use crate::partitions::{partitions_of, Partition};

/// Which family a [`SymFn`]'s partition labels refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    /// monomial symmetric functions `m_λ`
    Monomial,
    /// power sums `p_λ`
    PowerSum,
    /// Jack polynomials `P_λ^{(1/κ)}`
    JackP,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::JackP => "P",
        }
    }
}

/// A finite linear combination of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFn {
    basis: Basis,
    coeffs: BTreeMap<Partition, ParamScalar>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.coeffs.insert(lambda, ParamScalar::one());
        f
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, ParamScalar)>,
    {
        let mut f = Self::zero(basis);
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> ParamScalar {
        self.coeffs.get(lambda).cloned().unwrap_or_else(ParamScalar::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &ParamScalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Common weight of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.coeffs.keys().map(Partition::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&lambda) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, sum);
        }
    }

    pub fn add(&self, other: &SymFn) -> SymFn {
        assert_eq!(self.basis, other.basis, "adding across bases");
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymFn) -> SymFn {
        self.add(&other.scale(&ParamScalar::integer(-1)))
    }

    pub fn scale(&self, c: &ParamScalar) -> SymFn {
        if c.is_zero() {
            return SymFn::zero(self.basis);
        }
        SymFn {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(l, x)| (l.clone(), x.mul(c))).collect(),
        }
    }

    /// Terms grouped by weight.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, SymFn> {
        let mut out: BTreeMap<usize, SymFn> = BTreeMap::new();
        for (l, c) in &self.coeffs {
            out.entry(l.weight())
                .or_insert_with(|| SymFn::zero(self.basis))
                .coeffs
                .insert(l.clone(), c.clone());
        }
        out
    }

    /// `(basis, partition, coefficient)` triples.
    pub fn to_triples(&self) -> Vec<(String, String, String)> {
        self.coeffs
            .iter()
            .map(|(l, c)| (self.basis.tag().to_string(), l.to_string(), c.to_string()))
            .collect()
    }

    /// Inverse of [`Self::to_triples`].
    pub fn from_triples(triples: &[(String, String, String)]) -> Result<SymFn> {
        let mut basis = None;
        let mut out = Vec::new();
        for (b, l, c) in triples {
            let tag = match b.as_str() {
                "m" => Basis::Monomial,
                "p" => Basis::PowerSum,
                "P" => Basis::JackP,
                other => return Err(Error::Parse(format!("unknown basis `{other}`"))),
            };
            if basis.is_some_and(|x| x != tag) {
                return Err(Error::Parse("mixed bases in one symmetric function".into()));
            }
            basis = Some(tag);
            out.push((l.parse()?, crate::exactnum::parse_scalar(c)?));
        }
        Ok(SymFn::from_terms(basis.unwrap_or(Basis::PowerSum), out))
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{}{l}", self.basis.tag())?;
        }
        Ok(())
    }
}

/// `z_λ = prod_i i^{m_i(λ)} m_i(λ)!`
pub fn z_lambda(lambda: &Partition) -> BigRational {
    BigRational::from_integer(lambda.z())
}

/// Coefficients of `m_λ m_μ` in the monomial basis.
///
/// Works in `ℓ(λ)+ℓ(μ)` variables: the coefficient of `m_ν` is the number of
/// ways to write `ν` (padded with zeros) as `α + β` with `α` a rearrangement of
/// `λ` and `β` one of `μ`.
pub fn monomial_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    fn counts(p: &Partition, len: usize) -> Vec<(usize, usize)> {
        let mut c: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in p.parts() {
            *c.entry(x).or_default() += 1;
        }
        let zeros = len - p.len();
        if zeros > 0 {
            c.insert(0, zeros);
        }
        c.into_iter().rev().collect()
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        len: usize,
        prev: usize,
        left: &mut [(usize, usize)],
        right: &mut [(usize, usize)],
        cur: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if pos == len {
            *out.entry(Partition::from_exponents(cur)).or_default() += 1;
            return;
        }
        for i in 0..left.len() {
            if left[i].1 == 0 {
                continue;
            }
            for j in 0..right.len() {
                if right[j].1 == 0 {
                    continue;
                }
                let s = left[i].0 + right[j].0;
                if s > prev {
                    continue;
                }
                left[i].1 -= 1;
                right[j].1 -= 1;
                cur.push(s);
                go(pos + 1, len, s, left, right, cur, out);
                cur.pop();
                left[i].1 += 1;
                right[j].1 += 1;
            }
        }
    }
    let len = lambda.len() + mu.len();
    let mut out = BTreeMap::new();
    if len == 0 {
        out.insert(Partition::empty(), 1);
        return out;
    }
    let mut l = counts(lambda, len);
    let mut r = counts(mu, len);
    go(0, len, usize::MAX, &mut l, &mut r, &mut Vec::new(), &mut out);
    out
}

/// Product of two functions in the monomial basis.
pub fn m_multiply(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    if f.basis != Basis::Monomial || g.basis != Basis::Monomial {
        return Err(Error::InvalidParams("m_multiply needs monomial-basis inputs".into()));
    }
    let mut out = SymFn::zero(Basis::Monomial);
    for (l, cl) in &f.coeffs {
        for (m, cm) in &g.coeffs {
            let c = cl.mul(cm);
            for (nu, k) in monomial_product(l, m) {
                out.add_term(nu, &c.scale(&BigRational::from_integer(k.into())));
            }
        }
    }
    Ok(out)
}

/// `p_r * m_ν` in the monomial basis: add `r` to one part (or append it); the
/// coefficient is the multiplicity of the grown part in the result.
fn power_sum_times_monomial(r: usize, nu: &Partition) -> Vec<(Partition, u64)> {
    let mut values: Vec<usize> = nu.parts().to_vec();
    values.dedup();
    values.push(0);
    let mut out = Vec::new();
    for v in values {
        let mut parts = nu.parts().to_vec();
        if v == 0 {
            parts.push(r);
        } else {
            let idx = parts.iter().position(|&x| x == v).expect("present");
            parts[idx] += r;
        }
        let kappa = Partition::from_exponents(&parts);
        let mult = kappa.parts().iter().filter(|&&x| x == v + r).count() as u64;
        out.push((kappa, mult));
    }
    out
}

/// Integer coefficients of `p_λ` in the monomial basis.
fn power_sum_in_monomials(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    acc.insert(Partition::empty(), BigInt::one());
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (nu, c) in &acc {
            for (kappa, k) in power_sum_times_monomial(r, nu) {
                *next.entry(kappa).or_insert_with(BigInt::zero) += c * BigInt::from(k);
            }
        }
        acc = next;
    }
    acc
}

/// The `p ↔ m` change of basis at one degree.
#[derive(Debug)]
pub struct Transition {
    pub degree: usize,
    /// Partitions of `degree` in reverse lexicographic order.
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row `λ`: `p_λ = sum_μ p_to_m[λ][μ] m_μ`.
    pub p_to_m: Vec<Vec<BigRational>>,
    /// Row `μ`: `m_μ = sum_λ m_to_p[μ][λ] p_λ`.
    pub m_to_p: Vec<Vec<BigRational>>,
}

impl Transition {
    fn build(degree: usize) -> Result<Transition> {
        let parts = partitions_of(degree);
        let n = parts.len();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let mut p_to_m = vec![vec![BigRational::zero(); n]; n];
        for (i, l) in parts.iter().enumerate() {
            for (mu, c) in power_sum_in_monomials(l) {
                p_to_m[i][index[&mu]] = BigRational::from_integer(c);
            }
        }
        let m_to_p = invert(&p_to_m).ok_or(Error::SingularMatrix(degree))?;
        Ok(Transition {
            degree,
            parts,
            index,
            p_to_m,
            m_to_p,
        })
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }
}

/// Gauss–Jordan inverse over the rationals.
pub(crate) fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Cached transition matrices for degree `k`.
pub fn transition(k: usize) -> Result<Arc<Transition>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("poisoned").get(&k) {
        return Ok(t.clone());
    }
    let t = Arc::new(Transition::build(k)?);
    cache.lock().expect("poisoned").insert(k, t.clone());
    Ok(t)
}

/// `p_λ` in the monomial basis.
pub fn p_to_m(lambda: &Partition) -> SymFn {
    SymFn::from_terms(
        Basis::Monomial,
        power_sum_in_monomials(lambda)
            .into_iter()
            .map(|(mu, c)| (mu, ParamScalar::constant(BigRational::from_integer(c)))),
    )
}

/// Converts a power-sum combination to monomials.
pub fn power_sums_to_monomials(f: &SymFn) -> Result<SymFn> {
    change_basis(f, Basis::PowerSum, Basis::Monomial)
}

/// Converts a monomial combination into power sums.
pub fn m_to_p(f: &SymFn) -> Result<SymFn> {
    change_basis(f, Basis::Monomial, Basis::PowerSum)
}

fn change_basis(f: &SymFn, from: Basis, to: Basis) -> Result<SymFn> {
    if f.basis != from {
        return Err(Error::InvalidParams(format!(
            "expected a {}-basis function, got {}",
            from.tag(),
            f.basis.tag()
        )));
    }
    let mut out = SymFn::zero(to);
    for (k, part) in f.homogeneous_parts() {
        let t = transition(k)?;
        let matrix = if from == Basis::Monomial { &t.m_to_p } else { &t.p_to_m };
        let n = t.parts.len();
        let mut acc: Vec<Vec<ParamScalar>> = vec![Vec::new(); n];
        for (l, c) in &part.coeffs {
            let row = &matrix[t.index_of(l).expect("same degree")];
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    acc[j].push(c.scale(x));
                }
            }
        }
        for (j, terms) in acc.iter().enumerate() {
            out.add_term(t.parts[j].clone(), &ParamScalar::sum_many(terms));
        }
    }
    Ok(out)
}

/// Expresses `f` in the power-sum basis (monomial or power-sum input).
pub fn to_power_sums(f: &SymFn) -> Result<SymFn> {
    match f.basis {
        Basis::PowerSum => Ok(f.clone()),
        Basis::Monomial => m_to_p(f),
        Basis::JackP => Err(Error::InvalidParams(
            "Jack-basis input needs a JackBasis to convert".into(),
        )),
    }
}

/// `⟨p_λ, p_μ⟩_{1/κ} = z_λ κ^{-ℓ(λ)} δ_{λμ}`, extended bilinearly.
pub fn deformed_inner(f: &SymFn, g: &SymFn) -> Result<ParamScalar> {
    let f = to_power_sums(f)?;
    let g = to_power_sums(g)?;
    let kappa = ParamScalar::var(Var::Kappa);
    let terms: Vec<ParamScalar> = f
        .coeffs
        .iter()
        .filter_map(|(l, c)| {
            let d = g.coeffs.get(l)?;
            let w = kappa.pow(-(l.len() as i32)).expect("kappa is nonzero");
            Some(c.mul(d).mul(&w).scale(&z_lambda(l)))
        })
        .collect();
    Ok(ParamScalar::sum_many(terms.iter()))
}
