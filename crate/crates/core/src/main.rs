use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use selberg_core::asymptotics::{central_binomial_ratio, dyck_peak_formula, limit_pk, limit_pk_scaled};
use selberg_core::exactnum::{split_text, Bindings, ParamScalar, Style, Var};
use selberg_core::jack::{alpha_coeff, jack_gram_schmidt};
use selberg_core::partitions::{partitions_of, Partition};
use selberg_core::report::{Cell, Format, OutputRecord, Table};
use selberg_core::selberg::{
    parse_poly_integrand, selberg_general, selberg_jack_normalized, selberg_powersum, Param, SelbergParams,
};
use selberg_core::symfunc::power_sums_to_monomials;
use selberg_core::verify::{run_suite, Suite};

/// Exact Selberg-Jack integrals and their large-N limits.
#[derive(Parser)]
#[command(name = "selberg", version)]
struct Cli {
    /// Output format: json, csv or latex.
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficients of the Jack polynomials in the power sum p_k.
    Coeff {
        k: usize,
        #[arg(long, default_value = "symbolic")]
        kappa: Param,
    },
    /// Jack polynomials of degree k in the monomial (or power-sum) basis.
    Jack {
        k: usize,
        #[arg(long, default_value = "symbolic")]
        kappa: Param,
        /// Expand in power sums instead of monomials.
        #[arg(long)]
        power_sums: bool,
    },
    /// Exact normalized integral of p_k, a Jack polynomial, or a polynomial file.
    Integral {
        #[arg(long, group = "integrand")]
        pk: Option<usize>,
        #[arg(long, group = "integrand")]
        jack: Option<Partition>,
        /// Lines of `coeff : e1,e2,...`.
        #[arg(long, group = "integrand")]
        poly: Option<PathBuf>,
        #[arg(long = "N", default_value = "symbolic")]
        n: Param,
        #[arg(long, default_value = "symbolic")]
        a: Param,
        #[arg(long, default_value = "symbolic")]
        b: Param,
        #[arg(long, default_value = "symbolic")]
        kappa: Param,
    },
    /// Run the built-in cross-checks; exits nonzero on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Large-N limit of <p_k>/N, or of the scaled moment with --scaled.
    Limit {
        #[arg(long)]
        pk: usize,
        #[arg(long)]
        scaled: bool,
    },
}

fn bind_kappa(x: ParamScalar, kappa: &Param) -> selberg_core::Result<ParamScalar> {
    match kappa.value() {
        Some(v) => x.substitute_values(&Bindings::new().with(Var::Kappa, v.clone())),
        None => Ok(x),
    }
}

fn run(cmd: Cmd) -> selberg_core::Result<(OutputRecord, bool)> {
    let start = Instant::now();
    let mut ok = true;
    let (command, params, table) = match cmd {
        Cmd::Coeff { k, kappa } => {
            let mut t = Table::new(["lambda", "alpha"]);
            for lambda in partitions_of(k) {
                let a = bind_kappa(alpha_coeff(&lambda, k)?, &kappa)?;
                t.push(vec![lambda.to_string().into(), a.into()]);
            }
            (format!("coeff {k}"), vec![("kappa".into(), kappa.to_string())], t)
        }
        Cmd::Jack { k, kappa, power_sums } => {
            let basis = jack_gram_schmidt(k)?;
            let mut t = Table::new(["lambda", "basis", "mu", "coefficient"]);
            for lambda in basis.order().iter().rev() {
                let f = if power_sums {
                    basis.get(lambda).expect("in basis").clone()
                } else {
                    power_sums_to_monomials(basis.get(lambda).expect("in basis"))?
                };
                let tag = if power_sums { "p" } else { "m" };
                for (mu, c) in f.terms().rev() {
                    let c = bind_kappa(c.clone(), &kappa)?;
                    if !c.is_zero() {
                        t.push(vec![lambda.to_string().into(), tag.into(), mu.to_string().into(), c.into()]);
                    }
                }
            }
            (format!("jack {k}"), vec![("kappa".into(), kappa.to_string())], t)
        }
        Cmd::Integral { pk, jack, poly, n, a, b, kappa } => {
            let params = SelbergParams { a, b, kappa, n };
            let result = match (pk, jack, poly) {
                (Some(k), None, None) => selberg_powersum(k, &params)?,
                (None, Some(lambda), None) => selberg_jack_normalized(&lambda, &params)?,
                (None, None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| selberg_core::Error::Parse(format!("{}: {e}", path.display())))?;
                    selberg_general(&parse_poly_integrand(&text)?, &params)?
                }
                _ => {
                    return Err(selberg_core::Error::InvalidParams(
                        "give exactly one of --pk, --jack, --poly".into(),
                    ))
                }
            };
            let value = result.value.value().clone();
            let (num, den) = split_text(&value, Style::Plain);
            let mut t = Table::new(["integrand", "value", "numerator", "denominator"]);
            t.push(vec![
                result.integrand.to_string().into(),
                value.into(),
                num.into(),
                den.unwrap_or_else(|| "1".into()).into(),
            ]);
            let p = &result.params;
            let list = vec![
                ("N".into(), p.n.to_string()),
                ("a".into(), p.a.to_string()),
                ("b".into(), p.b.to_string()),
                ("kappa".into(), p.kappa.to_string()),
            ];
            ("integral".to_string(), list, t)
        }
        Cmd::Verify { suite } => {
            let mut t = Table::new(["check", "passed", "checked", "max_deviation", "failures"]);
            for r in run_suite(suite) {
                ok &= r.passed();
                eprintln!("{}: {} checks in {:.2?}", r.name, r.checked, r.elapsed);
                t.push(vec![
                    r.name.clone().into(),
                    r.passed().into(),
                    Cell::Int(r.checked as i64),
                    r.max_deviation.map_or(Cell::Text(String::new()), Cell::Float),
                    r.failures.join("; ").into(),
                ]);
            }
            (format!("verify --suite {suite}"), vec![], t)
        }
        Cmd::Limit { pk, scaled } => {
            let (limit, conjecture) = if scaled {
                (limit_pk_scaled(pk)?, dyck_peak_formula(pk))
            } else {
                (limit_pk(pk)?, central_binomial_ratio(pk))
            };
            let matched = limit == conjecture;
            ok &= matched;
            let mut t = Table::new(["k", "limit", "conjecture", "match"]);
            t.push(vec![Cell::Int(pk as i64), limit.into(), conjecture.into(), matched.into()]);
            let cmd = if scaled { format!("limit --pk {pk} --scaled") } else { format!("limit --pk {pk}") };
            (cmd, vec![], t)
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok((OutputRecord { command, params, table, elapsed_ms }, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd).and_then(|(rec, ok)| Ok((rec.render(cli.format)?, ok))) {
        Ok((text, ok)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
