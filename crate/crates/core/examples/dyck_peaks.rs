//! The peak-counting polynomials behind the scaled limit, their palindromy and
//! their totals.

use selberg_core::asymptotics::{dyck_peak_coefficients, dyck_peak_formula, dyck_total, is_palindrome};

fn main() {
    for k in 1..=8 {
        let c = dyck_peak_coefficients(k);
        let shown: Vec<String> = c.iter().map(ToString::to_string).collect();
        println!("k={k}: [{}] total {} palindrome {}", shown.join(" "), dyck_total(k), is_palindrome(&c));
    }
    println!("k=3 formula: {}", dyck_peak_formula(3));
}
