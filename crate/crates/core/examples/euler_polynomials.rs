// Degenerate Euler polynomials of rational order, two ways.

use degenfact::arith::{lambda_var, Pretty, Rational};
use degenfact::degenerate::{degenerate_euler, euler_via_t2};

pub fn run() {
    let lam = lambda_var();
    for r in ["1", "2", "1/2"] {
        let r: Rational = r.parse().unwrap();
        for n in 0..=3 {
            let direct = degenerate_euler(n, &r, &lam);
            assert_eq!(direct, euler_via_t2(n, &r, &lam));
            println!("E^({r})_{n},λ(x) = {}", direct.pretty(&["x", "λ"]));
        }
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
