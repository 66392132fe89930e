//! Materialized number triangles and their CSV/JSON forms.
//!
//! Every entry is stored as a polynomial in λ. Classical families and concrete
//! λ give constants. On the wire a constant is a `"p/q"` string; a genuine
//! λ-polynomial is a coefficient array, written as JSON text inside CSV.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{parse_rational, BiPoly, Poly, Pretty, Rational, Ring, Wire};
use crate::classical::{
    central_factorial_poly, central_first_kind_table, central_second_kind_table,
    falling_factorial_poly, stirling1_table, Table,
};
use crate::degenerate::{
    degenerate_euler, degenerate_euler_table, stirling2_lambda_table, t1_degenerate_table,
    t2_number_table, t2_poly, LambdaMode, LambdaRing, LambdaTask, XMode,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Signed Stirling numbers of the first kind.
    S1,
    /// Central factorial numbers of the second kind `T(n,k)`.
    TCentral,
    /// Central factorial numbers of the first kind `t(n,k)`.
    TCentralFirst,
    /// λ-Stirling numbers of the second kind.
    S2Lambda,
    /// Degenerate central factorial numbers of the second kind.
    T2Lambda,
    /// Degenerate central factorial numbers of the first kind.
    T1Lambda,
    /// Degenerate Euler polynomials of order r; entry `(n,k)` is the `x^k` coefficient.
    EulerR,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::S1,
        Family::TCentral,
        Family::TCentralFirst,
        Family::S2Lambda,
        Family::T2Lambda,
        Family::T1Lambda,
        Family::EulerR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::S1 => "S1",
            Family::TCentral => "T",
            Family::TCentralFirst => "t",
            Family::S2Lambda => "S2",
            Family::T2Lambda => "T2",
            Family::T1Lambda => "t1",
            Family::EulerR => "E",
        }
    }

    fn long_name(self) -> &'static str {
        match self {
            Family::S1 => "S1",
            Family::TCentral => "T_central",
            Family::TCentralFirst => "t_central",
            Family::S2Lambda => "S2_lambda",
            Family::T2Lambda => "T2_lambda",
            Family::T1Lambda => "t1_lambda",
            Family::EulerR => "Euler_r",
        }
    }

    /// Independent of λ.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::S1 | Family::TCentral | Family::TCentralFirst)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepts the short names, the long names, and `Euler`. Case matters: `T` and `t` differ.
impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "Euler" {
            return Ok(Family::EulerR);
        }
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s || f.long_name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Builds `Table` rows for one family in the ring chosen by the λ-mode.
struct TableTask<'a> {
    family: Family,
    n_max: usize,
    k_max: usize,
    r: &'a Rational,
}

fn constants(table: Table<Rational>) -> Table<Poly<Rational>> {
    lift(table, Poly::constant)
}

fn lift<R>(table: Table<R>, f: impl Fn(R) -> Poly<Rational> + Copy) -> Table<Poly<Rational>> {
    table
        .into_iter()
        .map(|row| row.into_iter().map(f).collect())
        .collect()
}

impl LambdaTask for TableTask<'_> {
    type Output = Table<Poly<Rational>>;

    fn run<R: LambdaRing>(self, lambda: &R) -> Table<Poly<Rational>> {
        let (n_max, k_max) = (self.n_max, self.k_max);
        let to_poly = R::into_lambda_poly;
        match self.family {
            Family::S1 => constants(
                stirling1_table(n_max)
                    .into_iter()
                    .map(|row| {
                        (0..=k_max)
                            .map(|k| row.get(k).cloned().unwrap_or_else(Rational::zero))
                            .collect()
                    })
                    .collect(),
            ),
            Family::TCentral => constants(central_second_kind_table(n_max, k_max)),
            Family::TCentralFirst => constants(central_first_kind_table(n_max, k_max)),
            Family::S2Lambda => lift(stirling2_lambda_table(n_max, k_max, lambda), to_poly),
            Family::T2Lambda => lift(t2_number_table(n_max, k_max, lambda), to_poly),
            Family::T1Lambda => lift(t1_degenerate_table(n_max, k_max, lambda), to_poly),
            Family::EulerR => degenerate_euler_table(n_max, self.r, lambda)
                .into_iter()
                .map(|p| (0..=k_max).map(|k| p.coeff(k).into_lambda_poly()).collect())
                .collect(),
        }
    }
}

/// A family's values for `0 ≤ k ≤ min(n, k_max)`, `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberTriangle {
    pub family: Family,
    pub n_max: usize,
    pub k_max: usize,
    pub lambda: LambdaMode,
    /// Order of the Euler family; `None` for every other family.
    pub r: Option<Rational>,
    pub entries: BTreeMap<(usize, usize), Poly<Rational>>,
}

impl NumberTriangle {
    /// `r` defaults to 1 for the Euler family and is dropped for the others.
    pub fn build(
        family: Family,
        n_max: usize,
        k_max: usize,
        lambda: &LambdaMode,
        r: Option<Rational>,
    ) -> Self {
        Self::build_with_jobs(family, n_max, k_max, lambda, r, 1)
    }

    /// With `jobs > 1` each row is extracted independently on a pool of that
    /// size. The result is identical to the single-threaded build.
    pub fn build_with_jobs(
        family: Family,
        n_max: usize,
        k_max: usize,
        lambda: &LambdaMode,
        r: Option<Rational>,
        jobs: usize,
    ) -> Self {
        let r = (family == Family::EulerR).then(|| r.unwrap_or_else(Rational::one));
        let order = r.clone().unwrap_or_else(Rational::one);
        let table = |n_max| {
            lambda.dispatch(TableTask {
                family,
                n_max,
                k_max,
                r: &order,
            })
        };
        let rows: Table<Poly<Rational>> = if jobs <= 1 {
            table(n_max)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool with a positive thread count");
            pool.install(|| {
                (0..=n_max)
                    .into_par_iter()
                    .map(|n| table(n).swap_remove(n))
                    .collect()
            })
        };
        let entries = rows
            .into_iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.into_iter()
                    .enumerate()
                    .take(n.min(k_max) + 1)
                    .map(move |(k, v)| ((n, k), v))
            })
            .collect();
        NumberTriangle {
            family,
            n_max,
            k_max,
            lambda: lambda.clone(),
            r,
            entries,
        }
    }

    /// Zero outside the stored range, as the families vanish for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Poly<Rational> {
        self.entries
            .get(&(n, k))
            .cloned()
            .unwrap_or_else(Poly::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for ((n, k), v) in &self.entries {
            w.serialize(CsvRow {
                n: *n,
                k: *k,
                value: value_text(v),
            })
            .map_err(csv_error)?;
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is UTF-8")
    }

    /// Entries from CSV with header `n,k,value`. The header carries no
    /// metadata, so only the entry map is recovered.
    pub fn entries_from_csv<Rd: Read>(
        input: Rd,
    ) -> Result<BTreeMap<(usize, usize), Poly<Rational>>> {
        let mut rd = csv::Reader::from_reader(input);
        let mut entries = BTreeMap::new();
        for row in rd.deserialize() {
            let row: CsvRow = row.map_err(csv_error)?;
            entries.insert((row.n, row.k), parse_value_text(&row.value)?);
        }
        Ok(entries)
    }

    fn doc(&self) -> TriangleDoc {
        TriangleDoc {
            family: self.family.as_str().to_string(),
            n_max: self.n_max,
            k_max: self.k_max,
            lambda: self.lambda.to_string(),
            r: self.r.as_ref().map(ToString::to_string),
            entries: self
                .entries
                .iter()
                .map(|(&(n, k), v)| JsonEntry {
                    n,
                    k,
                    value: value_json(v),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self.doc()).expect("triangle document serializes")
    }

    /// Pretty-printed, fields in schema order.
    pub fn to_json_string(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.doc()).expect("triangle document serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TriangleDoc = serde_json::from_str(s).map_err(|e| Error::Wire(e.to_string()))?;
        let entries = doc
            .entries
            .iter()
            .map(|e| Ok(((e.n, e.k), parse_value_json(&e.value)?)))
            .collect::<Result<_>>()?;
        Ok(NumberTriangle {
            family: doc.family.parse()?,
            n_max: doc.n_max,
            k_max: doc.k_max,
            lambda: doc.lambda.parse()?,
            r: doc.r.as_deref().map(parse_rational).transpose()?,
            entries,
        })
    }

    /// One `family(n,k) = value` line per entry, λ written out.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|((n, k), v)| format!("{}({n},{k}) = {}\n", self.family, v.pretty(&["λ"])))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    k: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    n: usize,
    k: usize,
    value: Value,
}

#[derive(Serialize, Deserialize)]
struct TriangleDoc {
    family: String,
    n_max: usize,
    k_max: usize,
    lambda: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    entries: Vec<JsonEntry>,
}

fn csv_error(e: csv::Error) -> Error {
    Error::Csv(e.to_string())
}

fn is_constant(p: &Poly<Rational>) -> bool {
    p.degree().unwrap_or(0) == 0
}

/// `"p/q"` for constants, JSON array text otherwise.
fn value_text(p: &Poly<Rational>) -> String {
    match value_json(p) {
        Value::String(s) => s,
        v => v.to_string(),
    }
}

fn value_json(p: &Poly<Rational>) -> Value {
    if is_constant(p) {
        p.coeff(0).to_wire()
    } else {
        p.to_wire()
    }
}

fn parse_value_text(s: &str) -> Result<Poly<Rational>> {
    if s.trim_start().starts_with('[') {
        Poly::from_wire_str(s)
    } else {
        parse_rational(s).map(Poly::constant)
    }
}

fn parse_value_json(v: &Value) -> Result<Poly<Rational>> {
    match v {
        Value::String(s) => parse_rational(s).map(Poly::constant),
        other => Poly::from_wire(other),
    }
}

/// Single entry `(n, k)` of a family as a polynomial in λ.
pub fn family_value(
    family: Family,
    n: usize,
    k: usize,
    lambda: &LambdaMode,
    r: Option<Rational>,
) -> Poly<Rational> {
    if k > n {
        return Poly::zero();
    }
    NumberTriangle::build(family, n, k, lambda, r).get(n, k)
}

struct PolyTask<'a> {
    family: Family,
    n: usize,
    k: usize,
    r: &'a Rational,
    x: &'a XMode,
}

impl LambdaTask for PolyTask<'_> {
    type Output = Result<BiPoly>;

    fn run<R: LambdaRing>(self, lambda: &R) -> Result<BiPoly> {
        let lifted = |p: Poly<Rational>| Poly::lift(&p);
        let p: Poly<R> = match self.family {
            Family::S1 => lifted(falling_factorial_poly(self.n)),
            Family::TCentralFirst => lifted(central_factorial_poly(self.n)),
            Family::T2Lambda => t2_poly(self.n, self.k, lambda),
            Family::EulerR => degenerate_euler(self.n, self.r, lambda),
            other => {
                return Err(Error::NotApplicable(format!(
                    "family {other} has no polynomial in x; use S1, t, T2 or E"
                )))
            }
        };
        Ok(self.x.apply(&p))
    }
}

/// The x-polynomial attached to a family: `(x)_n` for S1, `x^[n]` for t,
/// `T₂,λ(n,k|x)` for T2 and the order-r Euler polynomial for E.
/// Coefficients are λ-polynomials; a concrete x is substituted.
pub fn family_poly(
    family: Family,
    n: usize,
    k: usize,
    lambda: &LambdaMode,
    x: &XMode,
    r: Option<Rational>,
) -> Result<BiPoly> {
    let r = r.unwrap_or_else(Rational::one);
    lambda.dispatch(PolyTask {
        family,
        n,
        k,
        r: &r,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::lambda_var;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn lam(coeffs: &[(i64, i64)]) -> Poly<Rational> {
        Poly::from_coeffs(coeffs.iter().map(|&(p, d)| q(p, d)).collect())
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
            assert_eq!(f.long_name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("Euler".parse::<Family>().unwrap(), Family::EulerR);
        assert_ne!(
            "T".parse::<Family>().unwrap(),
            "t".parse::<Family>().unwrap()
        );
        assert!(matches!(
            "T3".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn t2_triangle_shape_and_values() {
        let tri = NumberTriangle::build(Family::T2Lambda, 8, 8, &LambdaMode::Symbolic, None);
        assert_eq!(tri.len(), 45);
        assert_eq!(tri.get(3, 1), lam(&[(1, 4), (0, 1), (2, 1)]));
        assert_eq!(tri.get(2, 2), Poly::constant(q(1, 1)));
        assert!(tri.get(3, 5).is_zero());
        assert_eq!(tri.r, None);
    }

    #[test]
    fn k_max_truncates_columns() {
        let tri = NumberTriangle::build(Family::S1, 6, 2, &LambdaMode::Symbolic, None);
        assert_eq!(tri.len(), 1 + 2 + 3 * 5);
        assert_eq!(tri.get(4, 2), Poly::constant(q(11, 1)));
        assert_eq!(tri.get(3, 1), Poly::constant(q(2, 1)));
    }

    #[test]
    fn classical_entries_have_no_lambda() {
        for f in [Family::S1, Family::TCentral, Family::TCentralFirst] {
            let tri = NumberTriangle::build(f, 7, 7, &LambdaMode::Symbolic, None);
            assert!(tri.entries.values().all(is_constant), "{f}");
        }
    }

    #[test]
    fn concrete_lambda_evaluates_the_symbolic_table() {
        let sym = NumberTriangle::build(Family::T1Lambda, 7, 7, &LambdaMode::Symbolic, None);
        let at = q(-2, 5);
        let conc = NumberTriangle::build(
            Family::T1Lambda,
            7,
            7,
            &LambdaMode::Concrete(at.clone()),
            None,
        );
        for ((n, k), v) in &sym.entries {
            assert_eq!(conc.get(*n, *k), Poly::constant(v.eval(&at)), "({n},{k})");
        }
    }

    #[test]
    fn euler_rows_are_polynomial_coefficients() {
        let tri = NumberTriangle::build(Family::EulerR, 4, 4, &LambdaMode::Symbolic, None);
        assert_eq!(tri.r, Some(q(1, 1)));
        // E₁ = x − 1/2
        assert_eq!(tri.get(1, 0), Poly::constant(q(-1, 2)));
        assert_eq!(tri.get(1, 1), Poly::constant(q(1, 1)));
        let p = family_poly(
            Family::EulerR,
            3,
            0,
            &LambdaMode::Symbolic,
            &XMode::Symbolic,
            None,
        )
        .unwrap();
        for k in 0..=3 {
            assert_eq!(p.coeff(k), tri.get(3, k));
        }
    }

    #[test]
    fn parallel_build_matches_sequential() {
        for f in Family::ALL {
            let a = NumberTriangle::build(f, 9, 6, &LambdaMode::Symbolic, Some(q(1, 2)));
            let b =
                NumberTriangle::build_with_jobs(f, 9, 6, &LambdaMode::Symbolic, Some(q(1, 2)), 4);
            assert_eq!(a, b, "{f}");
        }
    }

    #[test]
    fn csv_format() {
        let tri = NumberTriangle::build(Family::T2Lambda, 2, 2, &LambdaMode::Symbolic, None);
        assert_eq!(
            tri.to_csv(),
            "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,\"[\"\"0\"\",\"\"-1\"\"]\"\n2,2,1\n"
        );
        let tri = NumberTriangle::build(Family::T2Lambda, 3, 3, &LambdaMode::Symbolic, None);
        assert!(tri
            .to_csv()
            .contains("3,1,\"[\"\"1/4\"\",\"\"0\"\",\"\"2\"\"]\"\n"));
        let conc =
            NumberTriangle::build(Family::T2Lambda, 3, 3, &LambdaMode::Concrete(q(1, 1)), None);
        assert!(conc.to_csv().contains("3,1,9/4\n"));
    }

    #[test]
    fn csv_and_json_carry_the_same_entries() {
        for lambda in [LambdaMode::Symbolic, LambdaMode::Concrete(q(1, 3))] {
            for f in Family::ALL {
                let tri = NumberTriangle::build(f, 8, 8, &lambda, Some(q(2, 1)));
                let from_csv = NumberTriangle::entries_from_csv(tri.to_csv().as_bytes()).unwrap();
                let from_json = NumberTriangle::from_json_str(&tri.to_json_string()).unwrap();
                assert_eq!(from_csv, tri.entries);
                assert_eq!(from_json, tri);
            }
        }
    }

    #[test]
    fn json_document_layout() {
        let tri = NumberTriangle::build(
            Family::EulerR,
            1,
            1,
            &LambdaMode::Concrete(q(0, 1)),
            Some(q(1, 2)),
        );
        let v = tri.to_json();
        assert_eq!(v["family"], "E");
        assert_eq!(v["lambda"], "0");
        assert_eq!(v["r"], "1/2");
        assert_eq!(v["entries"][1]["value"], "-1/4");
        let t2 =
            NumberTriangle::build(Family::T2Lambda, 3, 3, &LambdaMode::Symbolic, None).to_json();
        assert!(t2.get("r").is_none());
        assert_eq!(
            t2["entries"][7]["value"],
            serde_json::json!(["1/4", "0", "2"])
        );
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(NumberTriangle::entries_from_csv("n,k,value\n0,0,1/0\n".as_bytes()).is_err());
        assert!(NumberTriangle::entries_from_csv("n,k,value\nx,0,1\n".as_bytes()).is_err());
        assert!(NumberTriangle::from_json_str("{\"family\":\"Q\"}").is_err());
    }

    #[test]
    fn single_values_and_polys() {
        let sym = LambdaMode::Symbolic;
        assert_eq!(
            family_value(Family::T2Lambda, 3, 1, &sym, None),
            lam(&[(1, 4), (0, 1), (2, 1)])
        );
        assert!(family_value(Family::S2Lambda, 2, 3, &sym, None).is_zero());
        assert_eq!(
            family_value(Family::T1Lambda, 2, 1, &sym, None),
            lambda_var()
        );
        let p = family_poly(Family::T2Lambda, 2, 1, &sym, &XMode::Symbolic, None).unwrap();
        assert_eq!(p.pretty(&["x", "λ"]), "-λ + 2*x");
        let at = family_poly(
            Family::T2Lambda,
            2,
            1,
            &sym,
            &XMode::Concrete(q(1, 1)),
            None,
        )
        .unwrap();
        assert_eq!(at, Poly::constant(lam(&[(2, 1), (-1, 1)])));
        let x4 = family_poly(Family::TCentralFirst, 4, 0, &sym, &XMode::Symbolic, None).unwrap();
        assert_eq!(x4.degree(), Some(4));
        assert!(matches!(
            family_poly(Family::S2Lambda, 2, 1, &sym, &XMode::Symbolic, None),
            Err(Error::NotApplicable(_))
        ));
    }
}
