//! One result table rendered the three ways the command line offers.

use selberg_core::jack::alpha_table;
use selberg_core::report::{Format, OutputRecord, Table};

fn main() -> selberg_core::Result<()> {
    let mut table = Table::new(["lambda", "alpha"]);
    for (l, a) in alpha_table(3) {
        table.push(vec![l.to_string().into(), a.into()]);
    }
    let rec = OutputRecord {
        command: "coeff 3".into(),
        params: vec![("kappa".into(), "symbolic".into())],
        table,
        elapsed_ms: 0.0,
    };
    for f in [Format::Json, Format::Csv, Format::Latex] {
        println!("--- {f}\n{}", rec.render(f)?);
    }
    Ok(())
}
