//! Exact scalars in ℚ and ℚ(ζₙ).
//!
//! A cyclotomic scalar is stored as its coefficient vector in the power basis
//! 1, ζ, …, ζ^(φ(n)−1), i.e. as a residue modulo Φₙ. Arithmetic between
//! scalars of different fields is an error; ℚ is not silently promoted.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::field::{cyclotomic_polynomial, Field};
use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic { order: u32, coeffs: Box<[Rational]> },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_rational(field, Rational::zero())
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_rational(field, Rational::one())
    }

    pub fn from_int(field: Field, n: i64) -> Scalar {
        Scalar::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    /// Embeds a rational number into `field`.
    pub fn from_rational(field: Field, q: Rational) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(q),
            Field::Cyclotomic { order } => {
                let mut coeffs = vec![Rational::zero(); field.degree()];
                coeffs[0] = q;
                Scalar::Cyclotomic {
                    order,
                    coeffs: coeffs.into(),
                }
            }
        }
    }

    /// Builds a cyclotomic scalar from its power-basis coefficients.
    pub fn from_coeffs(field: Field, coeffs: Vec<Rational>) -> Result<Scalar> {
        if coeffs.len() != field.degree() {
            return Err(Error::Schema(format!(
                "{field} scalars need {} coefficients, got {}",
                field.degree(),
                coeffs.len()
            )));
        }
        Ok(match field {
            Field::Rational => Scalar::Rational(coeffs.into_iter().next().unwrap()),
            Field::Cyclotomic { order } => Scalar::Cyclotomic {
                order,
                coeffs: coeffs.into(),
            },
        })
    }

    /// The primitive root ζₙ of ℚ(ζₙ).
    pub fn zeta(order: u32) -> Scalar {
        Scalar::zeta_pow(order, 1)
    }

    /// ζₙᵏ, reduced modulo Φₙ.
    pub fn zeta_pow(order: u32, k: i64) -> Scalar {
        let field = Field::cyclotomic(order);
        let k = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); k.max(field.degree() - 1) + 1];
        poly[k] = Rational::one();
        Scalar::Cyclotomic {
            order,
            coeffs: reduce_mod_cyclotomic(poly, order).into(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Cyclotomic { order, .. } => Field::cyclotomic(*order),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    /// Coefficients in the power basis (a single entry for rationals).
    pub fn coeffs(&self) -> Vec<Rational> {
        match self {
            Scalar::Rational(q) => vec![q.clone()],
            Scalar::Cyclotomic { coeffs, .. } => coeffs.to_vec(),
        }
    }

    /// Returns the rational value if the scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic { coeffs, .. } => coeffs[1..]
                .iter()
                .all(Zero::is_zero)
                .then(|| coeffs[0].clone()),
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic { order, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
                    return Ok(Scalar::zero(self.field()));
                }
                let mut prod = vec![Rational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclotomic {
                    order: *order,
                    coeffs: reduce_mod_cyclotomic(prod, *order).into(),
                }
            }
            _ => unreachable!("field checked above"),
        })
    }

    /// Multiplicative inverse; inverting zero is [`Error::DivisionByZero`].
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Cyclotomic { order, .. } => {
                // Solve (self · c) = 1 through the multiplication matrix of self.
                let field = self.field();
                let d = field.degree();
                let cols: Vec<Vec<Rational>> = (0..d)
                    .map(|j| self.try_mul(&Scalar::zeta_pow(*order, j as i64)).map(|s| s.coeffs()))
                    .collect::<Result<_>>()?;
                let mut rhs = vec![Rational::zero(); d];
                rhs[0] = Rational::one();
                let sol = solve_square(cols, rhs).ok_or(Error::DivisionByZero)?;
                Scalar::from_coeffs(field, sol)
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn zip_with(&self, other: &Scalar, f: impl Fn(&Rational, &Rational) -> Rational) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(f(a, b)),
            (Scalar::Cyclotomic { order, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                Scalar::Cyclotomic {
                    order: *order,
                    coeffs: a.iter().zip(b.iter()).map(|(x, y)| f(x, y)).collect(),
                }
            }
            _ => unreachable!("callers check fields"),
        }
    }

    /// JSON encoding: `"p/q"` for rationals, an array of such strings for
    /// cyclotomic scalars.
    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(q) => Value::String(format_rational(q)),
            Scalar::Cyclotomic { coeffs, .. } => {
                Value::Array(coeffs.iter().map(|q| Value::String(format_rational(q))).collect())
            }
        }
    }

    /// Decodes a scalar of `field`. A bare rational is accepted in a
    /// cyclotomic field and embedded as a constant.
    pub fn from_json(field: Field, value: &Value) -> Result<Scalar> {
        match value {
            Value::Array(items) => {
                let coeffs = items.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
                Scalar::from_coeffs(field, coeffs)
            }
            other => Ok(Scalar::from_rational(field, rational_from_json(other)?)),
        }
    }
}

fn rational_from_json(value: &Value) -> Result<Rational> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::Schema(format!("non-integer JSON number {n}; use \"p/q\""))),
        other => Err(Error::Schema(format!("expected a rational, got {other}"))),
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Schema(format!("malformed rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn reduce_mod_cyclotomic(mut poly: Vec<Rational>, order: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let d = phi.len() - 1;
    for k in (d..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[k], Rational::zero());
        for (j, &p) in phi[..d].iter().enumerate() {
            if p != 0 {
                poly[k - d + j] -= &c * Rational::from_integer(BigInt::from(p));
            }
        }
    }
    poly.resize(d, Rational::zero());
    poly
}

/// Solves a small dense system given by its columns; `None` if singular.
fn solve_square(cols: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in c..=n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", format_rational(q)),
            Scalar::Cyclotomic { order, coeffs } => {
                let mut terms = Vec::new();
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mag = format_rational(&c.abs());
                    let sign = if c.is_negative() { "-" } else { "+" };
                    let body = match (k, c.abs().is_one()) {
                        (0, _) => mag,
                        (1, true) => format!("z{order}"),
                        (1, false) => format!("{mag}*z{order}"),
                        (_, true) => format!("z{order}^{k}"),
                        (_, false) => format!("{mag}*z{order}^{k}"),
                    };
                    terms.push((sign, body));
                }
                if terms.is_empty() {
                    return write!(f, "0");
                }
                for (i, (sign, body)) in terms.iter().enumerate() {
                    match (i, *sign) {
                        (0, "-") => write!(f, "-{body}")?,
                        (0, _) => write!(f, "{body}")?,
                        (_, s) => write!(f, " {s} {body}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

// Operator forms panic on a field mismatch; every matrix entering a
// computation has been field-checked already.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic { order, coeffs } => Scalar::Cyclotomic {
                order: *order,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
