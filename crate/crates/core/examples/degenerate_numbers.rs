// Degenerate central factorial numbers and polynomials, symbolic and fixed λ.
//
// The same generic function runs over `Poly<Rational>` (λ an indeterminate)
// or `Rational` (λ fixed); fixing λ commutes with evaluation.

use degenfact::arith::{lambda_var, Pretty, Rational};
use degenfact::degenerate::{
    stirling2_lambda, t1_degenerate, t2_explicit, t2_number, t2_poly, t2_poly_recursive,
};

pub fn run() {
    let lam = lambda_var();
    for n in 0..=4 {
        for k in 0..=n {
            println!("T2λ({n},{k}) = {}", t2_number(n, k, &lam).pretty(&["λ"]));
        }
    }

    let p = t2_poly(3, 1, &lam);
    println!("T2λ(3,1|x) = {}", p.pretty(&["x", "λ"]));
    assert_eq!(p, t2_poly_recursive(3, 1, &lam));

    let third = Rational::new(1.into(), 3.into());
    assert_eq!(t2_number(6, 2, &third), t2_number(6, 2, &lam).eval(&third));
    assert_eq!(t2_explicit(6, 2, &third), t2_number(6, 2, &third));

    println!("S2λ(3,2) = {}", stirling2_lambda(3, 2, &lam).pretty(&["λ"]));
    println!("t1λ(3,1) = {}", t1_degenerate(3, 1, &lam).pretty(&["λ"]));
}

#[allow(dead_code)]
fn main() {
    run();
}
