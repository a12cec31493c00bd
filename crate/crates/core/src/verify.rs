//! Self-checks run by `selberg verify`.
//!
//! Each check compares two independent routes to the same quantity and
//! records failures instead of panicking.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::asymptotics::{
    asymptotic_profile, central_binomial_ratio, dyck_peak_formula, limit_pk, limit_pk_scaled,
};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Bindings, ParamScalar, Var};
use crate::jack::{alpha_coeff, jack_expand, jack_limit_of_beta};
use crate::oracle::{moment_integrate, DensePoly};
use crate::partitions::{partitions_of, Partition};
use crate::selberg::{kaneko_direct_numeric, selberg_jack_symbolic, selberg_powersum, SelbergParams};
use crate::symfunc::{Basis, SymFn};

/// Relative tolerance between exact values and the log-Gamma evaluation.
pub const KANEKO_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Jack,
    Kaneko,
    Oracle,
    Degree,
    Limits,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "jack" => Suite::Jack,
            "kaneko" => Suite::Kaneko,
            "oracle" => Suite::Oracle,
            "degree" => Suite::Degree,
            "limits" => Suite::Limits,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite `{other}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Jack => "jack",
            Suite::Kaneko => "kaneko",
            Suite::Oracle => "oracle",
            Suite::Degree => "degree",
            Suite::Limits => "limits",
            Suite::All => "all",
        })
    }
}

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub max_deviation: Option<f64>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

struct Recorder {
    report: CheckReport,
    start: Instant,
}

impl Recorder {
    fn new(name: &str) -> Self {
        Recorder {
            report: CheckReport {
                name: name.to_string(),
                checked: 0,
                failures: Vec::new(),
                max_deviation: None,
                elapsed: Duration::ZERO,
            },
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.report.checked += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.report.failures.push(what()),
            Err(e) => self.report.failures.push(format!("{}: {e}", what())),
        }
    }

    fn deviation(&mut self, d: f64) {
        let m = self.report.max_deviation.get_or_insert(0.0);
        if d.is_nan() || d > *m {
            *m = d;
        }
    }

    fn finish(mut self) -> CheckReport {
        self.report.elapsed = self.start.elapsed();
        self.report
    }
}

/// `α_{λ,k}` against projection onto the Gram–Schmidt basis.
pub fn check_alpha_vs_gram_schmidt(max_k: usize) -> CheckReport {
    let mut r = Recorder::new("alpha closed form = Gram-Schmidt projection");
    for k in 1..=max_k {
        let pk = SymFn::basis_element(Basis::PowerSum, Partition::row(k));
        let expansion = jack_expand(&pk, k);
        for lambda in partitions_of(k) {
            let ok = expansion
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|e| Ok(e.coeff(&lambda) == alpha_coeff(&lambda, k)?));
            r.check(ok, || format!("k={k} {lambda}"));
        }
    }
    r.finish()
}

/// The factor-wise Jack limit of the Macdonald coefficient against `α_{λ,k}`.
pub fn check_macdonald_limit(max_k: usize) -> CheckReport {
    let mut r = Recorder::new("Macdonald coefficient -> Jack limit = alpha");
    for k in 1..=max_k {
        for lambda in partitions_of(k) {
            let ok = jack_limit_of_beta(&lambda, k).and_then(|x| Ok(x == alpha_coeff(&lambda, k)?));
            r.check(ok, || format!("k={k} {lambda}"));
        }
    }
    r.finish()
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact Jack integrals against Kaneko's Gamma products in floating point.
pub fn check_kaneko(max_weight: usize, max_n: usize) -> CheckReport {
    let mut r = Recorder::new("exact Jack integral = log-Gamma Kaneko formula");
    let kappas = [rat(1, 2), rat(1, 1), rat(2, 1), rat(3, 1)];
    let ab = [(rat(1, 1), rat(1, 1)), (rat(2, 1), rat(3, 1)), (rat(1, 2), rat(5, 2))];
    for w in 0..=max_weight {
        for lambda in partitions_of(w) {
            let sym = selberg_jack_symbolic(&lambda);
            for n in lambda.len().max(1)..=max_n {
                for kappa in &kappas {
                    for (a, b) in &ab {
                        let bind = Bindings::new()
                            .with(Var::A, a.clone())
                            .with(Var::B, b.clone())
                            .with(Var::Kappa, kappa.clone())
                            .with(Var::N, rat(n as i64, 1));
                        let res = sym.eval(&bind).and_then(|exact| {
                            let exact = to_f64(&exact);
                            let num = kaneko_direct_numeric(&lambda, n, to_f64(a), to_f64(b), to_f64(kappa))?;
                            Ok(((num - exact) / exact).abs())
                        });
                        let ok = res.map(|d| {
                            r.deviation(d);
                            d <= KANEKO_TOLERANCE
                        });
                        r.check(ok, || format!("{lambda} N={n} kappa={kappa} a={a} b={b}"));
                    }
                }
            }
        }
    }
    r.finish()
}

/// `⟨p_k⟩♯` against brute-force expansion, exactly, with `a, b` symbolic.
pub fn check_oracle(max_k: usize) -> CheckReport {
    let mut r = Recorder::new("power-sum integral = brute-force moment oracle");
    let (a, b) = (ParamScalar::var(Var::A), ParamScalar::var(Var::B));
    for k in 1..=max_k {
        for n in 1..=3usize {
            for kappa in [1u32, 2] {
                let params = SelbergParams::symbolic().with_n(n as i64).with_kappa(kappa as i64);
                let ok = selberg_powersum(k, &params).and_then(|v| {
                    let o = moment_integrate(&DensePoly::power_sum(n, k as u32), &a, &b, kappa)?;
                    Ok(*v.value.value() == o)
                });
                r.check(ok, || format!("k={k} N={n} kappa={kappa}"));
            }
        }
    }
    r.finish()
}

/// `deg_N ⟨P_λ⟩♯ = |λ|`.
pub fn check_degree(max_weight: usize) -> CheckReport {
    let mut r = Recorder::new("N-degree of Jack integral = |lambda|");
    for w in 0..=max_weight {
        for lambda in partitions_of(w) {
            let v = crate::exactnum::NRationalFn::new(selberg_jack_symbolic(&lambda));
            let ok = asymptotic_profile(&v).map(|p| p.degree == w as i64);
            r.check(ok, || format!("{lambda}"));
        }
    }
    r.finish()
}

/// `lim (1/N)⟨p_k⟩♯ = C(2k,k)/4^k`.
pub fn check_limit(max_k: usize) -> CheckReport {
    let mut r = Recorder::new("lim <p_k>/N = C(2k,k)/4^k");
    for k in 1..=max_k {
        let ok = limit_pk(k).map(|x| x == central_binomial_ratio(k));
        r.check(ok, || format!("k={k}"));
    }
    r.finish()
}

/// Scaled limit against the peak-counting formula, and at `ℓ = 1`.
pub fn check_scaled_limit(max_k: usize) -> CheckReport {
    let mut r = Recorder::new("scaled limit = Dyck peak formula");
    for k in 1..=max_k {
        let ok = limit_pk_scaled(k).and_then(|x| {
            let at_one = x.substitute(Var::Ell, &ParamScalar::one())?;
            Ok(x == dyck_peak_formula(k) && at_one == central_binomial_ratio(k))
        });
        r.check(ok, || format!("k={k}"));
    }
    r.finish()
}

pub fn run_suite(suite: Suite) -> Vec<CheckReport> {
    match suite {
        Suite::Jack => vec![check_alpha_vs_gram_schmidt(6), check_macdonald_limit(6)],
        Suite::Kaneko => vec![check_kaneko(5, 8)],
        Suite::Oracle => vec![check_oracle(4)],
        Suite::Degree => vec![check_degree(6)],
        Suite::Limits => vec![check_limit(8), check_scaled_limit(5)],
        Suite::All => [Suite::Jack, Suite::Kaneko, Suite::Oracle, Suite::Degree, Suite::Limits]
            .into_iter()
            .flat_map(run_suite)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for r in [
            check_alpha_vs_gram_schmidt(3),
            check_macdonald_limit(4),
            check_kaneko(2, 3),
            check_oracle(2),
            check_degree(3),
            check_limit(3),
            check_scaled_limit(2),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn suite_names() {
        for s in ["jack", "kaneko", "oracle", "degree", "limits", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("fast".parse::<Suite>().is_err());
    }
}
