//! Limit oracle for the twisted character: ratio of twisted alternating sums
//! at a point x*h near the origin, evaluated in multiprecision fixed point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::{reflection_group, FoldedSystem, DEFAULT_WEYL_CAP};
use crate::error::{Error, Result};
use crate::rational::*;
use crate::repcalc::HighestWeight;

const MAX_RANK: usize = 4;

fn big_of_f64(x: f64) -> Result<BigRational> {
    BigRational::from_f64(x).ok_or_else(|| Error::Parse(format!("not a finite number: {x}")))
}

/// exp(t) scaled by 2^prec, rounded.
fn exp_fixed(t: &BigRational, prec: u64) -> BigInt {
    let one = BigInt::one() << prec;
    // halve until |t| <= 1/2
    let mut k = 0u32;
    let mut t = t.clone();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    while t.abs() > half {
        t /= BigInt::from(2);
        k += 1;
    }
    let scaled = (t * BigRational::from_integer(one.clone())).round().to_integer();
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut j = 1u64;
    loop {
        term = (&term * &scaled) >> prec;
        term /= BigInt::from(j);
        if term.is_zero() {
            break;
        }
        sum += &term;
        j += 1;
    }
    for _ in 0..k {
        sum = (&sum * &sum) >> prec;
    }
    sum
}

/// Approximates the positive-sign twisted character at g0 by the ratio
/// A(lambda + rho)(x h) / A(rho)(x h) over the folded Weyl group.
/// `h` is given in fixed-basis coordinates.
pub fn twisted_char_numeric(lambda: &HighestWeight, folded: &FoldedSystem, h: &[f64], x: f64) -> Result<f64> {
    if folded.rank() > MAX_RANK {
        return Err(Error::RankTooLarge(folded.rank()));
    }
    if h.len() != folded.rank() {
        return Err(Error::DimensionMismatch { expected: folded.rank(), got: h.len() });
    }
    if x == 0.0 || !x.is_finite() {
        return Err(Error::DegenerateDirection(format!("x = {x}")));
    }
    super::require_type_two(lambda, folded)?;

    let n = folded.source.ambient_dim;
    let mut h_amb = vec![BigRational::zero(); n];
    for (hi, b) in h.iter().zip(&folded.fixed_basis) {
        let hi = big_of_f64(*hi)?;
        for (slot, bj) in h_amb.iter_mut().zip(b) {
            *slot += &hi * to_big(bj);
        }
    }
    let xb = big_of_f64(x)?;
    let positives = folded.indivisible_positive_roots().len();
    let log_inv_x = (1.0 / x.abs()).log2().ceil().max(1.0) as u64;
    let prec = 128 + (positives as u64 + 2) * log_inv_x;

    let group = reflection_group(&folded.simple_roots(), DEFAULT_WEYL_CAP, &folded.label.to_string())?;
    let rho = &folded.rho_tau_ambient;
    let shifted = add(&lambda.coords, rho);
    let alt_sum = |mu: &[Q]| -> BigInt {
        let mut acc = BigInt::zero();
        for (w, s) in &group {
            let wm = w.apply(mu);
            let mut t = BigRational::zero();
            for (c, hv) in wm.iter().zip(&h_amb) {
                t += to_big(c) * hv;
            }
            let e = exp_fixed(&(t * &xb), prec);
            if *s > 0 {
                acc += e;
            } else {
                acc -= e;
            }
        }
        acc
    };
    let num = alt_sum(&shifted);
    let den = alt_sum(rho);
    let scale_pow = BigRational::from_integer(BigInt::one() << prec);
    let den_real = BigRational::from_integer(den.clone()) / &scale_pow;
    let normalized = den_real / xb.abs().pow(positives as i32);
    if normalized.abs() < BigRational::from_f64(1e-12).unwrap() {
        return Err(Error::DegenerateDirection(format!("denominator vanishes along {h:?}")));
    }
    BigRational::new(num, den)
        .to_f64()
        .ok_or_else(|| Error::Internal("ratio not representable".into()))
}
