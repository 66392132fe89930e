use crate::arith::{factorial, Poly, Rational, Ring};
use crate::classical::Table;
use crate::series::{deformed_exp, Series};

fn half<R: Ring>() -> R {
    R::from_rational(&Rational::new(1.into(), 2.into()))
}

/// `g(t) = (1+λt)^{1/(2λ)} − (1+λt)^{−1/(2λ)}`, the deformed central map.
pub fn central_map<R: Ring>(lambda: &R, order: usize) -> Series<R> {
    let h = half::<R>();
    &deformed_exp(&h, lambda, order) - &deformed_exp(&h.neg(), lambda, order)
}

/// `(1+λt)^{1/λ} − 1`.
fn deformed_exp_minus_one<R: Ring>(lambda: &R, order: usize) -> Series<R> {
    &deformed_exp(&R::one(), lambda, order) - &Series::one(order)
}

/// `(a)_{n,λ} = a(a − λ)(a − 2λ)⋯(a − (n−1)λ)`, with `(a)_{0,λ} = 1`.
pub fn lambda_falling<R: Ring>(a: &R, n: usize, lambda: &R) -> R {
    (0..n).fold(R::one(), |acc, j| {
        acc.mul(&a.sub(&lambda.mul(&R::from_int(j as i64))))
    })
}

/// `(a)_{l,λ} / l!`.
pub fn lambda_binom<R: Ring>(a: &R, l: usize, lambda: &R) -> R {
    lambda_falling(a, l, lambda).scale(&factorial(l).recip())
}

/// `table[n][k]` = EGF coefficient `n` of `base^k / k!`.
pub(crate) fn egf_power_columns<R: Ring>(base: &Series<R>, n_max: usize, k_max: usize) -> Table<R> {
    let mut rows = vec![vec![R::zero(); k_max + 1]; n_max + 1];
    let mut power = Series::one(base.order());
    for k in 0..=k_max {
        let column = power.scale(&factorial(k).recip());
        let egf = column.as_egf();
        for (n, row) in rows.iter_mut().enumerate() {
            row[k] = egf.coefficient(n);
        }
        if k < k_max {
            power = &power * base;
        }
    }
    rows
}

fn egf_power_entry<R: Ring>(base: &Series<R>, n: usize, k: usize) -> R {
    base.int_pow(k)
        .scale(&factorial(k).recip())
        .as_egf()
        .coefficient(n)
}

/// λ-Stirling numbers of the second kind,
/// `((1+λt)^{1/λ} − 1)^k / k! = Σ S₂,λ(n,k) tⁿ/n!`.
pub fn stirling2_lambda<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    if k > n {
        return R::zero();
    }
    egf_power_entry(&deformed_exp_minus_one(lambda, n + 1), n, k)
}

pub fn stirling2_lambda_table<R: Ring>(n_max: usize, k_max: usize, lambda: &R) -> Table<R> {
    egf_power_columns(&deformed_exp_minus_one(lambda, n_max + 1), n_max, k_max)
}

/// Degenerate central factorial numbers of the second kind,
/// `g(t)^k / k! = Σ T₂,λ(n,k) tⁿ/n!`.
pub fn t2_number<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    if k > n {
        return R::zero();
    }
    egf_power_entry(&central_map(lambda, n + 1), n, k)
}

pub fn t2_number_table<R: Ring>(n_max: usize, k_max: usize, lambda: &R) -> Table<R> {
    egf_power_columns(&central_map(lambda, n_max + 1), n_max, k_max)
}

fn lift_series<R: Ring>(s: &Series<R>) -> Series<Poly<R>> {
    s.map(|c| Poly::constant(c.clone()))
}

/// `(1+λt)^{x/λ}` with `x` the indeterminate of `Poly<R>`.
fn deformed_exp_in_x<R: Ring>(lambda: &R, order: usize) -> Series<Poly<R>> {
    deformed_exp(&Poly::var(), &Poly::constant(lambda.clone()), order)
}

/// Degenerate central factorial polynomials of the second kind,
/// `(1+λt)^{x/λ} g(t)^k / k! = Σ T₂,λ(n,k|x) tⁿ/n!`, as polynomials in x.
pub fn t2_poly<R: Ring>(n: usize, k: usize, lambda: &R) -> Poly<R> {
    if k > n {
        return Poly::zero();
    }
    let order = n + 1;
    let column = central_map(lambda, order)
        .int_pow(k)
        .scale(&factorial(k).recip());
    (&lift_series(&column) * &deformed_exp_in_x(lambda, order))
        .as_egf()
        .coefficient(n)
}

pub fn t2_poly_table<R: Ring>(n_max: usize, k_max: usize, lambda: &R) -> Table<Poly<R>> {
    let order = n_max + 1;
    let g = central_map(lambda, order);
    let ex = deformed_exp_in_x(lambda, order);
    let mut rows = vec![vec![Poly::zero(); k_max + 1]; n_max + 1];
    let mut power = Series::one(order);
    for k in 0..=k_max {
        let column = &lift_series(&power.scale(&factorial(k).recip())) * &ex;
        let egf = column.as_egf();
        for (n, row) in rows.iter_mut().enumerate() {
            row[k] = egf.coefficient(n);
        }
        if k < k_max {
            power = &power * &g;
        }
    }
    rows
}

/// Degenerate central factorial numbers of the first kind: EGF coefficients
/// of `h(t)^k / k!` where `h` is the compositional inverse of [`central_map`].
pub fn t1_degenerate<R: Ring>(n: usize, k: usize, lambda: &R) -> R {
    if k > n {
        return R::zero();
    }
    egf_power_entry(&central_inverse(lambda, n + 1), n, k)
}

pub fn t1_degenerate_table<R: Ring>(n_max: usize, k_max: usize, lambda: &R) -> Table<R> {
    egf_power_columns(&central_inverse(lambda, n_max + 1), n_max, k_max)
}

/// Compositional inverse of the deformed central map.
pub fn central_inverse<R: Ring>(lambda: &R, order: usize) -> Series<R> {
    central_map(lambda, order)
        .revert()
        .expect("central map has zero constant term and unit linear term")
}

/// EGF coefficients of `((1+λt)^{1/λ} − 1)/2 + 1)^{−r} (1+λt)^{x/λ}`,
/// i.e. the degenerate Euler polynomials of order `r`, for `n ≤ n_max`.
pub fn degenerate_euler_table<R: Ring>(n_max: usize, r: &Rational, lambda: &R) -> Vec<Poly<R>> {
    let order = n_max + 1;
    let base = &Series::one(order)
        + &deformed_exp_minus_one(lambda, order).scale(&Rational::new(1.into(), 2.into()));
    let factor = base.rat_pow(&-r).expect("base series has constant term 1");
    euler_columns(&factor, lambda, n_max)
}

pub fn degenerate_euler<R: Ring>(n: usize, r: &Rational, lambda: &R) -> Poly<R> {
    degenerate_euler_table(n, r, lambda).swap_remove(n)
}

/// Order-one degenerate Euler polynomials straight from
/// `2 / ((1+λt)^{1/λ} + 1) · (1+λt)^{x/λ}`, using a series reciprocal.
pub fn carlitz_euler_table<R: Ring>(n_max: usize, lambda: &R) -> Vec<Poly<R>> {
    let order = n_max + 1;
    let denominator = &deformed_exp(&R::one(), lambda, order) + &Series::one(order);
    let factor = denominator
        .inverse()
        .expect("constant term 2 is invertible")
        .scale(&Rational::from_integer(2.into()));
    euler_columns(&factor, lambda, n_max)
}

fn euler_columns<R: Ring>(factor: &Series<R>, lambda: &R, n_max: usize) -> Vec<Poly<R>> {
    let series = &lift_series(factor) * &deformed_exp_in_x(lambda, n_max + 1);
    let egf = series.as_egf();
    (0..=n_max).map(|n| egf.coefficient(n)).collect()
}
