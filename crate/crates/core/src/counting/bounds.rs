//! Closed-form counts and bounds for colorings of complete graphs.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn pow2(exp: u64) -> BigUint {
    BigUint::one() << exp
}

/// Gallai `r`-colorings of `K_n` using at most two colors:
/// `C(r,2)(2^C(n,2) - 2) + r = C(r,2) 2^C(n,2) - r(r-2)`.
///
/// `n = 1` is refused: with no edges the formula goes negative for `r >= 4`.
pub fn lower_bound_two_color(n: u64, r: u64) -> Result<BigUint> {
    if n < 2 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and r >= 2, got n = {n}, r = {r}"
        )));
    }
    Ok(BigUint::from(choose2(r)) * (pow2(choose2(n)) - 2u32) + r)
}

/// Gallai colorings of `K_n` with colors red, green and blue, all used, where
/// red appears on exactly one edge: `C(n,2)(2^(C(n,2)-(n-1)) - 2)`.
pub fn red_once_count(n: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let m = choose2(n);
    Ok(BigUint::from(m) * (pow2(m - (n - 1)) - 2u32))
}

/// Number of Gallai `r`-colorings of the book with `q` pages: the base edge is
/// free and each page then admits `r^2 - (r-1)(r-2) = 3r - 2` colorings.
pub fn book_gallai_count(q: u64, r: u64) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidParameter("need r >= 1".into()));
    }
    Ok(BigUint::from(r) * BigUint::from(3 * r - 2).pow(q))
}

/// The trivial lower bound and the main upper bound for `K_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticBounds {
    /// `(C(r,2) + 2^-n) 2^C(n,2)`, exact.
    pub trivial_lower: BigRational,
    pub log2_trivial_lower: f64,
    /// `log2` of `(C(r,2) + 2^(-n / (4 log2(n)^2))) 2^C(n,2)`.
    pub log2_main_upper: f64,
}

pub fn asymptotic_bounds(n: u64, r: u64) -> Result<AsymptoticBounds> {
    if n < 2 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and r >= 2, got n = {n}, r = {r}"
        )));
    }
    let m = choose2(n);
    let cr2 = choose2(r);
    let scale = BigInt::one() << m;
    let trivial_lower = (BigRational::from_integer(BigInt::from(cr2))
        + BigRational::new(BigInt::one(), BigInt::one() << n))
        * BigRational::from_integer(scale);
    let nf = n as f64;
    let log2_trivial_lower = m as f64 + (cr2 as f64 + (-nf).exp2()).log2();
    let exponent = -nf / (4.0 * nf.log2().powi(2));
    let log2_main_upper = m as f64 + (cr2 as f64 + exponent.exp2()).log2();
    Ok(AsymptoticBounds {
        trivial_lower,
        log2_trivial_lower,
        log2_main_upper,
    })
}

/// Smallest `n` in `2..=n_max` from which the main upper bound is at least
/// the trivial lower bound for every larger `n` scanned.
pub fn asymptotic_crossover(r: u64, n_max: u64) -> Result<Option<u64>> {
    let mut crossover = None;
    for n in 2..=n_max {
        let b = asymptotic_bounds(n, r)?;
        if b.log2_main_upper >= b.log2_trivial_lower {
            crossover.get_or_insert(n);
        } else {
            crossover = None;
        }
    }
    Ok(crossover)
}
