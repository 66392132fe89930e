// Truncated power series: deformed exponentials, powers, composition and reversion.

use degenfact::arith::{lambda_var, Pretty, Rational};
use degenfact::series::{deformed_exp, Series};

pub fn run() {
    let order = 6;
    let q = |p: i64, d: i64| Rational::new(p.into(), d.into());

    // (1 + t)^{1/2} and its square
    let root: Series<Rational> = (Series::one(order) + Series::var(order))
        .rat_pow(&q(1, 2))
        .unwrap();
    println!(
        "sqrt(1+t) = {:?}",
        root.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    assert_eq!(&root * &root, Series::one(order) + Series::var(order));

    // revert(t + t^2) begins t - t^2 + 2t^3 - 5t^4
    let f: Series<Rational> = Series::var(order) + Series::var(order).int_pow(2);
    let g = f.revert().unwrap();
    assert_eq!(f.compose(&g).unwrap(), Series::var(order));
    println!(
        "revert(t+t^2) = {:?}",
        g.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    // (1+λt)^{x/λ} at x = 1 with λ symbolic: EGF coefficients are (1)_{n,λ}
    let lam = lambda_var();
    let e = deformed_exp(
        &degenfact::arith::Poly::constant(Rational::from_integer(1.into())),
        &lam,
        order,
    );
    for n in 0..order {
        println!(
            "  (1)_{{{n},λ}} = {}",
            e.as_egf().coefficient(n).pretty(&["λ"])
        );
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
