//! Independent formulas for the degenerate central factorial families.
//!
//! None of these call back into the generating-function definitions for the
//! quantity they produce; they take the lower-level ingredients (λ-falling
//! factorials, Stirling numbers, δ, λ-binomials) and assemble them.

use crate::arith::{binomial, factorial, generalized_binomial, Poly, Rational, Ring};
use crate::classical::{central_diff, stirling1_table, Table};
use crate::mutation::Tweak;

use super::families::{
    lambda_binom, lambda_falling, stirling2_lambda_table, t2_number_table, t2_poly_table,
};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// `Σ_{l=k}^{n} C(n,l) T₂,λ(l,k) (x)_{n−l,λ}`.
pub fn t2_poly_convolution<R: Ring>(n: usize, k: usize, lambda: &R) -> Poly<R> {
    let numbers = t2_number_table(n, k, lambda);
    t2_poly_convolution_from(&numbers, n, k, lambda, &Tweak::none())
}

pub(crate) fn t2_poly_convolution_from<R: Ring>(
    numbers: &Table<R>,
    n: usize,
    k: usize,
    lambda: &R,
    tweak: &Tweak,
) -> Poly<R> {
    let x = Poly::var();
    let lam = Poly::constant(lambda.clone());
    let mut out = Poly::zero();
    for l in k..=n {
        let c = numbers[l][k].scale(&tweak.apply(binomial(n, l)));
        out.add_assign(&lambda_falling(&x, n - l, &lam).mul_scalar(&c));
    }
    out
}

/// `T₂,λ(n,k|x)` for `n ≤ n_max`, `k ≤ k_max` using only
/// `T₂,λ(n+1,k|x) = (x + k/2 − nλ) T₂,λ(n,k|x) + T₂,λ(n,k−1|x − 1/2)`
/// from the column `T₂,λ(n,0|x) = (x)_{n,λ}` and `T₂,λ(0,k|x) = 0` for `k ≥ 1`.
pub fn t2_poly_recursive_table<R: Ring>(n_max: usize, k_max: usize, lambda: &R) -> Table<Poly<R>> {
    t2_poly_recursive_table_with(n_max, k_max, lambda, &Tweak::none())
}

pub fn t2_poly_recursive<R: Ring>(n: usize, k: usize, lambda: &R) -> Poly<R> {
    t2_poly_recursive_table(n, k, lambda)
        .swap_remove(n)
        .swap_remove(k)
}

pub(crate) fn t2_poly_recursive_table_with<R: Ring>(
    n_max: usize,
    k_max: usize,
    lambda: &R,
    tweak: &Tweak,
) -> Table<Poly<R>> {
    let x = Poly::var();
    let lam = Poly::constant(lambda.clone());
    let minus_half = R::from_rational(&q(-1, 2));
    let mut rows = vec![vec![Poly::zero(); k_max + 1]; n_max + 1];
    for (n, row) in rows.iter_mut().enumerate() {
        row[0] = lambda_falling(&x, n, &lam);
    }
    for n in 0..n_max {
        let n_lambda = lambda.scale(&int(n));
        for k in 1..=k_max {
            let half_k = R::from_rational(&tweak.apply(q(k as i64, 2)));
            let linear = Poly::from_coeffs(vec![half_k.sub(&n_lambda), R::one()]);
            let next = Ring::add(
                &Ring::mul(&linear, &rows[n][k]),
                &rows[n][k - 1].shift(&minus_half),
            );
            rows[n + 1][k] = next;
        }
    }
    rows
}

/// `n!/k! Σ_{l=0}^{k} C(k,l) C(l − k/2, n)_λ (−1)^{k−l}`.
pub fn t2_explicit<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    t2_explicit_with(n, k, lambda, &Tweak::none())
}

pub(crate) fn t2_explicit_with<R: Ring>(n: usize, k: usize, lambda: &R, tweak: &Tweak) -> R {
    let half_k = q(k as i64, 2);
    let mut sum = R::zero();
    for l in 0..=k {
        let a = R::from_rational(&(int(l) - &half_k));
        let mut c = binomial(k, l);
        if (k - l) % 2 == 1 {
            c = -c;
        }
        sum.add_assign(&lambda_binom(&a, n, lambda).scale(&c));
    }
    sum.scale(&tweak.apply(factorial(n) / factorial(k)))
}

/// `Σ_{m=0}^{n} (δ^k x^m / k!) λ^{n−m} S₁(n,m)` as a polynomial in x.
pub fn t2_via_delta<R: Ring>(n: usize, k: usize, lambda: &R) -> Poly<R> {
    t2_via_delta_table_with(n, k, lambda, &Tweak::none())
        .swap_remove(n)
        .swap_remove(k)
}

/// The δ-expansion at `x = 0`: `Σ_m (δ^k 0^m / k!) λ^{n−m} S₁(n,m)`, with `0⁰ = 1`.
pub fn t2_number_via_delta<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    t2_via_delta(n, k, lambda).eval(&R::zero())
}

pub(crate) fn t2_via_delta_table_with<R: Ring>(
    n_max: usize,
    k_max: usize,
    lambda: &R,
    tweak: &Tweak,
) -> Table<Poly<R>> {
    let s1 = stirling1_table(n_max);
    // delta[k][m] = δ^k x^m / k!
    let delta: Vec<Vec<Poly<R>>> = (0..=k_max)
        .map(|k| {
            let inv_fact = tweak.apply(factorial(k).recip());
            (0..=n_max)
                .map(|m| {
                    let p = central_diff(&Poly::monomial(Rational::from_integer(1.into()), m), k);
                    Poly::lift(&p.scale(&inv_fact))
                })
                .collect()
        })
        .collect();
    let lambda_pows: Vec<R> = (0..=n_max).map(|j| lambda.pow(j)).collect();
    (0..=n_max)
        .map(|n| {
            (0..=k_max)
                .map(|k| {
                    let mut out = Poly::zero();
                    for m in 0..=n {
                        if Ring::is_zero(&s1[n][m]) {
                            continue;
                        }
                        let c = lambda_pows[n - m].scale(&s1[n][m]);
                        out.add_assign(&delta[k][m].mul_scalar(&c));
                    }
                    out
                })
                .collect()
        })
        .collect()
}

/// `Σ_{l=0}^{n} C(r+l−1, l) (−1/2)^l l! T₂,λ(n,l | x + l/2)`.
pub fn euler_via_t2<R: Ring>(n: usize, r: &Rational, lambda: &R) -> Poly<R> {
    let t2 = t2_poly_table(n, n, lambda);
    euler_via_t2_from(&t2, n, r, &Tweak::none())
}

pub(crate) fn euler_via_t2_from<R: Ring>(
    t2_polys: &Table<Poly<R>>,
    n: usize,
    r: &Rational,
    tweak: &Tweak,
) -> Poly<R> {
    let base = tweak.apply(q(-1, 2));
    let mut power = Rational::from_integer(1.into());
    let mut out = Poly::zero();
    for l in 0..=n {
        let shift = R::from_rational(&q(l as i64, 2));
        let c = generalized_binomial(&(r + int(l) - int(1)), l) * &power * factorial(l);
        out.add_assign(&t2_polys[n][l].shift(&shift).scale(&c));
        power *= &base;
    }
    out
}

/// `Σ_{l=0}^{k} Σ_{i=l}^{n} C(n,i) S₂,λ(i,l) S₂,−λ(n−i,k−l) (−1)^{n−i}`.
pub fn t2_even_convolution<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    let pos = stirling2_lambda_table(n, k, lambda);
    let neg = stirling2_lambda_table(n, k, &lambda.neg());
    t2_even_convolution_from(&pos, &neg, n, k, &Tweak::none())
}

/// `k! C(2k,k) T₂,λ(n,2k)`, the value the even-index double sum should equal.
pub fn t2_even_target<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    super::families::t2_number(n, 2 * k, lambda).scale(&(factorial(k) * binomial(2 * k, k)))
}

pub(crate) fn t2_even_convolution_from<R: Ring>(
    pos: &Table<R>,
    neg: &Table<R>,
    n: usize,
    k: usize,
    tweak: &Tweak,
) -> R {
    let mut sum = R::zero();
    for l in 0..=k {
        for i in l..=n {
            if n - i < k - l {
                continue;
            }
            let mut c = tweak.apply(binomial(n, i));
            if (n - i) % 2 == 1 {
                c = -c;
            }
            sum.add_assign(&pos[i][l].mul(&neg[n - i][k - l]).scale(&c));
        }
    }
    sum
}
