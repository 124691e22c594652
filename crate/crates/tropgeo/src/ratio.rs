//! Rational parsing, formatting, and integer-vector reduction helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Rat, Result};

/// Exact rational from a machine integer.
pub fn rat_int(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// Parses `"p/q"` or `"p"` with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let make_err = || Error::InvalidInput(format!("cannot parse rational from {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| make_err())?;
    let q: BigInt = den.parse().map_err(|_| make_err())?;
    if q.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Best-effort conversion to `f64` (numerator/denominator division).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Clears denominators and divides by the gcd, preserving orientation.
///
/// The result is the unique primitive integer vector positively parallel to
/// the input. Errors with [`Error::ZeroVector`] on the zero vector.
pub fn primitive_integer_vector(w: &[Rat]) -> Result<Vec<i64>> {
    if w.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let mut lcm = BigInt::from(1);
    for x in w {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = w.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut g = BigInt::zero();
    for k in &ints {
        g = g.gcd(k);
    }
    ints.iter()
        .map(|k| {
            (k / &g).to_i64().ok_or_else(|| {
                Error::InvalidInput("primitive vector component exceeds i64".into())
            })
        })
        .collect()
}
