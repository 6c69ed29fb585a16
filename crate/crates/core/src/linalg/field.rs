//! Field descriptors and the cyclotomic polynomials behind them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// The ground field of a computation: ℚ or a cyclotomic field ℚ(ζₙ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Cyclotomic { order: u32 },
}

impl Field {
    pub fn cyclotomic(order: u32) -> Field {
        Field::Cyclotomic { order }
    }

    /// Dimension of the field as a ℚ-vector space, i.e. φ(n) for ℚ(ζₙ).
    pub fn degree(&self) -> usize {
        match self {
            Field::Rational => 1,
            Field::Cyclotomic { order } => cyclotomic_polynomial(*order).len() - 1,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Cyclotomic { order } => write!(f, "Q(zeta_{order})"),
        }
    }
}

type PolyCache = Mutex<HashMap<u32, Arc<[i64]>>>;

fn cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
///
/// Computed as (xⁿ − 1) divided by Φ_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_monic_division(&num, &den);
        }
    }
    let poly: Arc<[i64]> = num.into();
    cache().lock().unwrap().insert(n, poly.clone());
    poly
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[k + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division by cyclotomic factor not exact");
    quot
}
