// Classical families: Stirling numbers, central factorials, the central difference.

use degenfact::arith::{Poly, Pretty, Rational};
use degenfact::classical::{
    central_diff, central_diff_reduction_check, central_factorial_poly, central_first_kind_table,
    central_second_kind_table, stirling1_table,
};

fn show(name: &str, table: &[Vec<Rational>]) {
    println!("{name}");
    for (n, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().take(n + 1).map(ToString::to_string).collect();
        println!("  {n}: {}", cells.join(" "));
    }
}

pub fn run() {
    show("S1(n,k)", &stirling1_table(5));
    show("t(n,k)", &central_first_kind_table(6, 6));
    show("T(n,k)", &central_second_kind_table(6, 6));

    println!("x^[4] = {}", central_factorial_poly(4).pretty(&["x"]));
    let x3 = Poly::monomial(Rational::from_integer(1.into()), 3);
    println!("δ² x³ = {}", central_diff(&x3, 2).pretty(&["x"]));
    assert!((1..=6).all(|k| (0..=8).all(|m| central_diff_reduction_check(k, m))));
}

#[allow(dead_code)]
fn main() {
    run();
}
