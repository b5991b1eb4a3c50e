//! Deterministic numeric helpers.
//!
//! Everything that feeds a bitstream or a CSV report must produce identical
//! bits on every platform. IEEE 754 guarantees exact rounding for add,
//! subtract, multiply, divide and sqrt, but *not* for transcendental
//! functions: `exp`, `log10` and friends come from the platform libm and may
//! differ in the last ulp between systems. The kernels below therefore
//! rebuild the few transcendentals we need from exactly-rounded operations
//! only (argument reduction by powers of two plus short polynomial / series
//! evaluation), so identical inputs give identical bits everywhere.

/// Rounds `num / den` half away from zero. `den` must be positive.
#[inline]
pub fn round_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    if num >= 0 {
        (num + den / 2) / den
    } else {
        -((-num + den / 2) / den)
    }
}

/// Mirrors `i` into `0..n` with edge repetition (… 2 1 0 | 0 1 2 … n-1 | n-1 n-2 …).
///
/// Valid for any `i`, including offsets much larger than `n`.
#[inline]
pub fn mirror_index(i: i64, n: usize) -> usize {
    debug_assert!(n > 0);
    let n = n as i64;
    let period = 2 * n;
    let mut m = i.rem_euclid(period);
    if m >= n {
        m = period - 1 - m;
    }
    m as usize
}

const LOG2_E: f64 = std::f64::consts::LOG2_E;
const LN_2: f64 = std::f64::consts::LN_2;
const LOG10_2: f64 = 0.301029995663981195213738894724; // log10(2)

/// 2^-n for n >= 0, exact. Returns 0 for n >= 64 (callers only need weights
/// down to the 16-bit fixed-point quantum).
#[inline]
fn pow2_neg(n: i64) -> f64 {
    if n >= 64 {
        0.0
    } else {
        1.0 / (1u64 << n) as f64
    }
}

/// Deterministic `exp(-x)` for `x >= 0`.
///
/// Reduction: exp(-x) = 2^-n * exp(-t) with n = floor(x*log2(e)) and
/// t = (x*log2(e) - n) * ln2 in [0, ln2]. The residual factor is a 16-term
/// Taylor series in Horner form. Absolute error is below 1e-14, far inside
/// the 2^-16 weight quantum used by the filter kernels.
pub fn exp_neg(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        return 1.0;
    }
    let u = x * LOG2_E;
    if u >= 64.0 {
        return 0.0;
    }
    let n = u.floor();
    let t = (u - n) * LN_2;
    // exp(-t) = 1 - t(1 - t/2(1 - t/3(...)))
    let mut acc = 1.0;
    for k in (1..=16).rev() {
        acc = 1.0 - acc * t / k as f64;
    }
    acc * pow2_neg(n as i64)
}

/// Deterministic `log2(x)` for finite `x > 0`.
///
/// Splits x = m * 2^e with m in [1, 2) straight from the bit pattern, then
/// ln(m) = 2*atanh(s) with s = (m-1)/(m+1) <= 1/3, summed to s^31 which is
/// below 1e-16. Accurate to ~1e-15 relative.
pub fn log2(x: f64) -> f64 {
    debug_assert!(x > 0.0 && x.is_finite());
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let (e, m) = if raw_exp == 0 {
        // Subnormal: renormalize by scaling up 2^64 (exact).
        let scaled = x * (1u64 << 63) as f64 * 2.0;
        let sb = scaled.to_bits();
        let se = ((sb >> 52) & 0x7ff) as i64 - 1023 - 64;
        let sm = f64::from_bits((sb & 0x000f_ffff_ffff_ffff) | (1023u64 << 52));
        (se, sm)
    } else {
        let m = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | (1023u64 << 52));
        (raw_exp - 1023, m)
    };
    let s = (m - 1.0) / (m + 1.0);
    let s2 = s * s;
    let mut sum = 0.0;
    for k in (0..16).rev() {
        sum = sum * s2 + 1.0 / (2 * k + 1) as f64;
    }
    let ln_m = 2.0 * s * sum;
    e as f64 + ln_m * LOG2_E
}

/// Deterministic `log10(x)` for finite `x > 0`.
pub fn log10(x: f64) -> f64 {
    log2(x) * LOG10_2
}
