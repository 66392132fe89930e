// Rationals, polynomials over ℚ and over ℚ[λ], and the wire format.

use degenfact::arith::{
    lambda_var, parse_rational, x_var, BiPoly, Poly, Pretty, Rational, Ring, Wire,
};

pub fn run() {
    let a = parse_rational("6/-4").unwrap();
    let b = parse_rational("1/3").unwrap();
    println!("6/-4 reduces to {a}; a + b = {}", &a + &b);
    assert!(parse_rational("1/0").is_err());

    // (x + 1)^3 over ℚ, then shifted back by −1
    let p = Poly::from_coeffs(vec![Rational::from_integer(1.into()); 2]).pow(3);
    println!("(x+1)^3 = {}", p.pretty(&["x"]));
    assert_eq!(
        p.shift(&Rational::from_integer((-1).into())),
        Poly::monomial(Rational::from_integer(1.into()), 3)
    );

    let lam: BiPoly = Poly::constant(lambda_var());
    let q: BiPoly = x_var().scale(&Rational::from_integer(2.into())).sub(&lam);
    println!(
        "2x - λ renders as {} and travels as {}",
        q.pretty(&["x", "λ"]),
        q.to_wire_string()
    );
    assert_eq!(BiPoly::from_wire_str(&q.to_wire_string()).unwrap(), q);
}

#[allow(dead_code)]
fn main() {
    run();
}
