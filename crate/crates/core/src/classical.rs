//! Non-degenerate families: Stirling numbers, central factorials and the
//! central difference operator. These double as the `λ = 0` reference
//! tables for the degenerate families.

use crate::arith::{binomial, factorial, Poly, Rational, Ring};
use crate::mutation::Tweak;
use crate::series::{exp_series, Series};

/// Row-major triangle, `table[n][k]`.
pub type Table<R> = Vec<Vec<R>>;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Signed Stirling number of the first kind.
pub fn stirling1(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    stirling1_table(n).swap_remove(n).swap_remove(k)
}

/// `S₁(n, k)` for `0 ≤ k ≤ n ≤ n_max` by `S₁(n+1,k) = S₁(n,k−1) − n S₁(n,k)`.
pub fn stirling1_table(n_max: usize) -> Table<Rational> {
    stirling1_table_with(n_max, &Tweak::none())
}

pub(crate) fn stirling1_table_with(n_max: usize, tweak: &Tweak) -> Table<Rational> {
    let mut rows = vec![vec![Rational::zero(); n_max + 1]; n_max + 1];
    rows[0][0] = Rational::one();
    for n in 0..n_max {
        let mult = tweak.apply(int(n));
        for k in 1..=n + 1 {
            rows[n + 1][k] = &rows[n][k - 1] - &mult * &rows[n][k];
        }
    }
    rows
}

/// `(x)_n = x(x−1)⋯(x−n+1)` expanded in powers of x.
pub fn falling_factorial_poly(n: usize) -> Poly<Rational> {
    (0..n).fold(Poly::one(), |acc, j| {
        &acc * &Poly::from_coeffs(vec![-int(j), Rational::one()])
    })
}

/// Classical Stirling numbers of the second kind.
pub fn stirling2_table(n_max: usize, k_max: usize) -> Table<Rational> {
    stirling2_table_with(n_max, k_max, &Tweak::none())
}

pub(crate) fn stirling2_table_with(n_max: usize, k_max: usize, tweak: &Tweak) -> Table<Rational> {
    let mut rows = vec![vec![Rational::zero(); k_max + 1]; n_max + 1];
    rows[0][0] = Rational::one();
    for n in 1..=n_max {
        for k in 1..=k_max.min(n) {
            rows[n][k] = tweak.apply(int(k)) * &rows[n - 1][k] + &rows[n - 1][k - 1];
        }
    }
    rows
}

/// `x^[n] = x(x + n/2 − 1)(x + n/2 − 2)⋯(x − n/2 + 1)`, with `x^[0] = 1`.
pub fn central_factorial_poly(n: usize) -> Poly<Rational> {
    central_factorial_poly_with(n, &Tweak::none())
}

pub(crate) fn central_factorial_poly_with(n: usize, tweak: &Tweak) -> Poly<Rational> {
    if n == 0 {
        return Poly::one();
    }
    let centre = tweak.apply(q(n as i64, 2));
    (1..n).fold(Poly::var(), |acc, j| {
        &acc * &Poly::from_coeffs(vec![&centre - int(j), Rational::one()])
    })
}

/// Central factorial number of the first kind, the coefficient of `x^k` in `x^[n]`.
pub fn central_first_kind(n: usize, k: usize) -> Rational {
    central_factorial_poly(n).coeff(k)
}

pub fn central_first_kind_table(n_max: usize, k_max: usize) -> Table<Rational> {
    central_first_kind_table_with(n_max, k_max, &Tweak::none())
}

pub(crate) fn central_first_kind_table_with(
    n_max: usize,
    k_max: usize,
    tweak: &Tweak,
) -> Table<Rational> {
    (0..=n_max)
        .map(|n| {
            let p = central_factorial_poly_with(n, tweak);
            (0..=k_max).map(|k| p.coeff(k)).collect()
        })
        .collect()
}

/// Central factorial number of the second kind `T(n, k)`, read off the
/// exponential generating function `(e^{t/2} − e^{−t/2})^k / k!`.
pub fn central_second_kind(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    central_second_kind_table(n, k)
        .swap_remove(n)
        .swap_remove(k)
}

pub fn central_second_kind_table(n_max: usize, k_max: usize) -> Table<Rational> {
    let order = n_max + 1;
    let g = &exp_series(&q(1, 2), order) - &exp_series(&q(-1, 2), order);
    let mut rows = vec![vec![Rational::zero(); k_max + 1]; n_max + 1];
    let mut power = Series::one(order);
    for k in 0..=k_max {
        let column = power.scale(&factorial(k).recip());
        let egf = column.as_egf();
        for (n, row) in rows.iter_mut().enumerate() {
            row[k] = egf.coefficient(n);
        }
        power = &power * &g;
    }
    rows
}

/// `T(n, k)` via `T(n,k) = T(n−2,k−2) + (k²/4) T(n−2,k)`.
///
/// Base cases: `T(0,0) = 1`, `T(n,0) = 0` for `n ≥ 1`, and the `k = 1` column
/// from the generating function, since the two-step recurrence does not reach it.
pub fn central_second_kind_recurrence_table(n_max: usize) -> Table<Rational> {
    let first_column = central_second_kind_table(n_max, 1);
    let mut rows = vec![vec![Rational::zero(); n_max + 1]; n_max + 1];
    rows[0][0] = Rational::one();
    for n in 1..=n_max {
        rows[n][1] = first_column[n][1].clone();
        if n < 2 {
            continue;
        }
        for k in 2..=n {
            let quarter_k_sq = q((k * k) as i64, 4);
            rows[n][k] = &rows[n - 2][k - 2] + quarter_k_sq * &rows[n - 2][k];
        }
    }
    rows
}

/// `T(n, k)` by expanding `x^n` in the central factorial basis
/// (triangular back-substitution against the monic `x^[k]`).
pub fn central_second_kind_by_basis_table(n_max: usize) -> Table<Rational> {
    central_second_kind_by_basis_table_with(n_max, &Tweak::none())
}

pub(crate) fn central_second_kind_by_basis_table_with(
    n_max: usize,
    tweak: &Tweak,
) -> Table<Rational> {
    let basis: Vec<_> = (0..=n_max)
        .map(|k| central_factorial_poly_with(k, tweak))
        .collect();
    (0..=n_max)
        .map(|n| {
            let mut rest = Poly::monomial(Rational::one(), n);
            let mut row = vec![Rational::zero(); n_max + 1];
            for k in (0..=n).rev() {
                let lead = basis[k].coeff(k);
                let c = rest.coeff(k) / lead;
                rest = &rest - &basis[k].mul_scalar(&c);
                row[k] = c;
            }
            row
        })
        .collect()
}

/// `δ^k p` where `δ f(x) = f(x + 1/2) − f(x − 1/2)`, expanded as
/// `Σ_l C(k,l) (−1)^{k−l} p(x + l − k/2)`.
pub fn central_diff<R: Ring>(p: &Poly<R>, k: usize) -> Poly<R> {
    let half_k = q(k as i64, 2);
    let mut out = Poly::zero();
    for l in 0..=k {
        let shift = R::from_rational(&(int(l) - &half_k));
        let mut c = binomial(k, l);
        if (k - l) % 2 == 1 {
            c = -c;
        }
        out.add_assign(&p.shift(&shift).scale(&c));
    }
    out
}

/// Whether `δ^k x^{m+1} = (x + k/2) δ^k x^m + k δ^{k−1} (x − 1/2)^m` holds
/// as an exact polynomial identity. Requires `k ≥ 1`.
pub fn central_diff_reduction_check(k: usize, m: usize) -> bool {
    let (lhs, rhs) = central_diff_reduction_sides(k, m, &Tweak::none());
    lhs == rhs
}

pub(crate) fn central_diff_reduction_sides(
    k: usize,
    m: usize,
    tweak: &Tweak,
) -> (Poly<Rational>, Poly<Rational>) {
    assert!(k >= 1, "reduction identity needs k >= 1");
    let x_pow = |e: usize| Poly::monomial(Rational::one(), e);
    let lhs = central_diff(&x_pow(m + 1), k);
    let linear = Poly::from_coeffs(vec![tweak.apply(q(k as i64, 2)), Rational::one()]);
    let shifted = x_pow(m).shift(&q(-1, 2));
    let rhs =
        &(&linear * &central_diff(&x_pow(m), k)) + &central_diff(&shifted, k - 1).scale(&int(k));
    (lhs, rhs)
}
