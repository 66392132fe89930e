use super::*;
use crate::arith::rational;
use crate::classical::{central_first_kind_table, central_second_kind_table, stirling2_table};

fn q(p: i64, d: i64) -> Rational {
    rational(p, d).unwrap()
}

/// Polynomial in λ from (numerator, denominator) pairs.
fn lp(cs: &[(i64, i64)]) -> Poly<Rational> {
    Poly::from_coeffs(cs.iter().map(|&(p, d)| q(p, d)).collect())
}

fn lam() -> Poly<Rational> {
    lambda_var()
}

fn c(v: Rational) -> Poly<Rational> {
    Poly::constant(v)
}

/// `2x − λ` in (ℚ[λ])[x].
fn two_x_minus_lambda() -> Poly<Poly<Rational>> {
    Poly::from_coeffs(vec![lp(&[(0, 1), (-1, 1)]), lp(&[(2, 1)])])
}

#[test]
fn lambda_falling_examples() {
    assert_eq!(lambda_falling(&c(q(5, 3)), 0, &lam()), Poly::one());
    let x = Poly::<Poly<Rational>>::var();
    let l = Poly::constant(lam());
    let expected = Poly::from_coeffs(vec![Poly::zero(), lp(&[(0, 1), (-1, 1)]), Poly::one()]);
    assert_eq!(lambda_falling(&x, 2, &l), expected);
    assert_eq!(
        lambda_falling(&c(q(1, 2)), 3, &lam()),
        lp(&[(1, 8), (-3, 4), (1, 1)])
    );
}

#[test]
fn lambda_binom_examples() {
    assert_eq!(lambda_binom(&c(q(7, 2)), 0, &lam()), Poly::one());
    assert_eq!(lambda_binom(&c(q(1, 2)), 1, &lam()), c(q(1, 2)));
    assert_eq!(lambda_binom(&c(q(-1, 2)), 2, &lam()), lp(&[(1, 8), (1, 4)]));
}

#[test]
fn stirling2_lambda_examples() {
    assert_eq!(stirling2_lambda(2, 1, &lam()), lp(&[(1, 1), (-1, 1)]));
    assert_eq!(stirling2_lambda(2, 2, &lam()), Poly::one());
    assert_eq!(stirling2_lambda(1, 3, &lam()), Poly::zero());
    for n in 0..8 {
        assert_eq!(
            stirling2_lambda(n, 1, &lam()),
            if n == 0 {
                Poly::zero()
            } else {
                lambda_falling(&Poly::one(), n, &lam())
            }
        );
    }
    assert_eq!(stirling2_lambda(4, 2, &q(0, 1)), q(7, 1));
    assert_eq!(stirling2_lambda(4, 2, &lam()).eval(&q(0, 1)), q(7, 1));
}

#[test]
fn stirling2_lambda_at_zero_is_classical() {
    let table = stirling2_lambda_table(12, 12, &lam());
    let classical = stirling2_table(12, 12);
    for n in 0..=12 {
        for k in 0..=12 {
            assert_eq!(table[n][k].eval(&q(0, 1)), classical[n][k], "({n},{k})");
        }
    }
}

#[test]
fn negated_lambda_is_substitution() {
    let pos = stirling2_lambda_table(8, 8, &lam());
    let neg = stirling2_lambda_table(8, 8, &Ring::neg(&lam()));
    for n in 0..=8 {
        for k in 0..=8 {
            assert_eq!(neg[n][k], pos[n][k].negate_var());
        }
    }
}

#[test]
fn t2_number_examples() {
    assert_eq!(t2_number(1, 1, &lam()), Poly::one());
    assert_eq!(t2_number(2, 1, &lam()), lp(&[(0, 1), (-1, 1)]));
    assert_eq!(t2_number(3, 1, &lam()), lp(&[(1, 4), (0, 1), (2, 1)]));
    assert_eq!(t2_number(3, 1, &lam()).eval(&q(0, 1)), q(1, 4));
    assert_eq!(t2_number(2, 2, &lam()), Poly::one());
    assert_eq!(t2_number(2, 3, &lam()), Poly::zero());
}

#[test]
fn concrete_lambda_matches_evaluated_symbolic() {
    let symbolic = t2_number_table(9, 9, &lam());
    for v in [q(0, 1), q(1, 1), q(-1, 1), q(1, 3), q(-2, 5)] {
        let concrete = t2_number_table(9, 9, &v);
        for n in 0..=9 {
            for k in 0..=9 {
                assert_eq!(symbolic[n][k].eval(&v), concrete[n][k]);
            }
        }
    }
}

#[test]
fn t2_poly_examples() {
    let lam_in_x = Poly::constant(lam());
    for n in 0..6 {
        assert_eq!(
            t2_poly(n, 0, &lam()),
            lambda_falling(&Poly::var(), n, &lam_in_x)
        );
    }
    assert_eq!(t2_poly(1, 1, &lam()), Poly::one());
    assert_eq!(t2_poly(2, 1, &lam()), two_x_minus_lambda());
    assert_eq!(t2_poly_convolution(2, 1, &lam()), two_x_minus_lambda());
}

#[test]
fn t2_poly_degree_and_classical_value() {
    let table = t2_poly_table(8, 8, &lam());
    let classical = central_second_kind_table(8, 8);
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(table[n][k].degree(), Some(n - k), "({n},{k})");
            let at_origin = table[n][k].eval(&Poly::zero()).eval(&q(0, 1));
            assert_eq!(at_origin, classical[n][k]);
        }
    }
}

#[test]
fn recursion_examples() {
    assert_eq!(t2_poly_recursive(2, 1, &lam()), two_x_minus_lambda());
    assert_eq!(t2_poly_recursive(3, 4, &lam()), Poly::zero());
    assert_eq!(t2_poly_recursive(4, 4, &lam()), Poly::one());
}

#[test]
fn recursion_specializations_at_origin() {
    let table = t2_poly_table(9, 9, &lam());
    let minus_half = Poly::from_rational(&q(-1, 2));
    let x0 = |p: &Poly<Poly<Rational>>| p.eval(&Poly::zero());
    for n in 1..9 {
        for k in 1..=n {
            let n_lam = lam().scale(&q(n as i64, 1));
            let factor = &c(q(k as i64, 2)) - &n_lam;
            let rhs = &(&factor * &x0(&table[n][k])) + &table[n][k - 1].eval(&minus_half);
            assert_eq!(x0(&table[n + 1][k]), rhs, "({n},{k})");
            // λ → 0
            let zero = q(0, 1);
            let lhs0 = x0(&table[n + 1][k]).eval(&zero);
            let rhs0 = q(k as i64, 2) * x0(&table[n][k]).eval(&zero)
                + table[n][k - 1].eval(&minus_half).eval(&zero);
            assert_eq!(lhs0, rhs0);
        }
    }
}

#[test]
fn explicit_sum_examples() {
    assert_eq!(t2_explicit(1, 1, &lam()), Poly::one());
    assert_eq!(t2_explicit(0, 1, &lam()), Poly::zero());
    assert_eq!(t2_explicit(2, 1, &lam()), lp(&[(0, 1), (-1, 1)]));
}

#[test]
fn delta_route_examples() {
    assert_eq!(t2_via_delta(1, 1, &lam()), Poly::one());
    assert_eq!(t2_via_delta(2, 1, &lam()), two_x_minus_lambda());
    for k in 1..=6 {
        for n in 0..k {
            assert_eq!(t2_via_delta(n, k, &lam()), Poly::zero(), "({n},{k})");
        }
    }
    assert_eq!(t2_number_via_delta(3, 1, &lam()), t2_number(3, 1, &lam()));
    assert_eq!(t2_number_via_delta(0, 0, &lam()), Poly::one());
}

#[test]
fn routes_agree_small() {
    let lambda = lam();
    let egf = t2_poly_table(8, 8, &lambda);
    let rec = t2_poly_recursive_table(8, 8, &lambda);
    let numbers = t2_number_table(8, 8, &lambda);
    for n in 0..=8 {
        for k in 0..=8 {
            assert_eq!(rec[n][k], egf[n][k], "recursion ({n},{k})");
            assert_eq!(t2_via_delta(n, k, &lambda), egf[n][k], "delta ({n},{k})");
            assert_eq!(
                t2_poly_convolution(n, k, &lambda),
                egf[n][k],
                "convolution ({n},{k})"
            );
            assert_eq!(
                t2_explicit(n, k, &lambda),
                numbers[n][k],
                "explicit ({n},{k})"
            );
        }
    }
}

#[test]
fn t1_examples() {
    assert_eq!(t1_degenerate(1, 1, &lam()), Poly::one());
    assert_eq!(t1_degenerate(2, 1, &lam()), lam());
    assert_eq!(t1_degenerate(1, 2, &lam()), Poly::zero());
}

#[test]
fn first_and_second_kind_are_inverse_matrices() {
    let t1 = t1_degenerate_table(10, 10, &lam());
    let t2 = t2_number_table(10, 10, &lam());
    for n in 0..=10 {
        for k in 0..=10 {
            let mut entry = Poly::zero();
            for j in 0..=10 {
                entry.add_assign(&Ring::mul(&t1[n][j], &t2[j][k]));
            }
            let expected = if n == k { Poly::one() } else { Poly::zero() };
            assert_eq!(entry, expected, "({n},{k})");
        }
    }
}

#[test]
fn t1_at_zero_is_classical_first_kind() {
    let t1 = t1_degenerate_table(12, 12, &lam());
    let classical = central_first_kind_table(12, 12);
    for n in 0..=12 {
        for k in 0..=12 {
            assert_eq!(t1[n][k].eval(&q(0, 1)), classical[n][k], "({n},{k})");
        }
    }
}

#[test]
fn euler_examples() {
    let x_minus_half = Poly::from_coeffs(vec![c(q(-1, 2)), Poly::one()]);
    for r in [q(1, 1), q(2, 1), q(1, 2), q(-3, 7)] {
        assert_eq!(degenerate_euler(0, &r, &lam()), Poly::one());
        assert_eq!(euler_via_t2(0, &r, &lam()), Poly::one());
    }
    let e1 = degenerate_euler(1, &q(1, 1), &lam());
    assert_eq!(e1, x_minus_half);
    assert_eq!(e1.eval(&Poly::zero()), c(q(-1, 2)));
    assert_eq!(euler_via_t2(1, &q(1, 1), &lam()), x_minus_half);
}

#[test]
fn euler_routes_agree() {
    for r in [q(1, 1), q(2, 1), q(1, 2)] {
        let direct = degenerate_euler_table(6, &r, &lam());
        for (n, value) in direct.iter().enumerate() {
            assert_eq!(euler_via_t2(n, &r, &lam()), *value, "n={n} r={r}");
        }
    }
    let carlitz = carlitz_euler_table(6, &lam());
    assert_eq!(degenerate_euler_table(6, &q(1, 1), &lam()), carlitz);
}

#[test]
fn euler_at_zero_lambda_is_classical_euler() {
    // E_2(x) = x² − x, E_3(x) = x³ − 3x²/2 + 1/4
    let e = degenerate_euler_table(3, &q(1, 1), &q(0, 1));
    assert_eq!(e[2], Poly::from_coeffs(vec![q(0, 1), q(-1, 1), q(1, 1)]));
    assert_eq!(
        e[3],
        Poly::from_coeffs(vec![q(1, 4), q(0, 1), q(-3, 2), q(1, 1)])
    );
}

#[test]
fn even_convolution_examples() {
    assert_eq!(t2_even_convolution(2, 1, &lam()), c(q(2, 1)));
    assert_eq!(t2_even_target(2, 1, &lam()), c(q(2, 1)));
    assert_eq!(t2_even_convolution(1, 1, &lam()), Poly::zero());
    for n in 0..=8 {
        for k in 0..=3 {
            assert_eq!(
                t2_even_convolution(n, k, &lam()),
                t2_even_target(n, k, &lam()),
                "({n},{k})"
            );
        }
    }
}

#[test]
fn modes_parse_and_display() {
    assert_eq!(
        "symbolic".parse::<LambdaMode>().unwrap(),
        LambdaMode::Symbolic
    );
    assert_eq!(
        "2/6".parse::<LambdaMode>().unwrap(),
        LambdaMode::Concrete(q(1, 3))
    );
    assert_eq!(LambdaMode::Concrete(q(-2, 5)).to_string(), "-2/5");
    assert_eq!("0".parse::<XMode>().unwrap(), XMode::Concrete(q(0, 1)));
    assert!("Symbolic".parse::<XMode>().is_err());
    assert!(LambdaMode::Concrete(q(0, 1)).is_zero());
    assert!(!LambdaMode::Symbolic.is_zero());
}

#[test]
fn x_mode_apply() {
    let p = t2_poly(2, 1, &lam());
    assert_eq!(XMode::Symbolic.apply(&p), two_x_minus_lambda());
    assert_eq!(
        XMode::Concrete(q(1, 2)).apply(&p),
        Poly::constant(lp(&[(1, 1), (-1, 1)]))
    );
    let concrete = t2_poly(2, 1, &q(1, 3));
    assert_eq!(
        XMode::Concrete(q(0, 1)).apply(&concrete),
        Poly::constant(c(q(-1, 3)))
    );
}
