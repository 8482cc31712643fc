use serde::Serialize;

use super::SpectralError;

/// `(δ−1)/2 + sqrt(2m − nδ + (δ+1)²/4)`, an upper bound on the spectral
/// radius of any graph of order `n`, size `m` and minimum degree `δ >= 1`.
pub fn hong_nikiforov_bound(n: usize, m: usize, delta: usize) -> Result<f64, SpectralError> {
    if delta < 1 {
        return Err(SpectralError::BadParams(
            "minimum degree must be positive".into(),
        ));
    }
    if n * delta > 2 * m || 2 * m > n * n.saturating_sub(1) {
        return Err(SpectralError::BadParams(format!(
            "(n, m, δ) = ({n}, {m}, {delta}) is not realisable"
        )));
    }
    let radicand = hn_radicand(n, m, delta as f64);
    assert!(radicand >= 0.0, "radicand is nonnegative whenever nδ <= 2m");
    Ok((delta as f64 - 1.0) / 2.0 + radicand.sqrt())
}

fn hn_radicand(n: usize, m: usize, x: f64) -> f64 {
    2.0 * m as f64 - n as f64 * x + (x + 1.0) * (x + 1.0) / 4.0
}

/// The bound as a function of a real `x` in place of `δ`; `None` where the
/// radicand is negative.
pub fn hn_profile_value(n: usize, m: usize, x: f64) -> Option<f64> {
    let r = hn_radicand(n, m, x);
    (r >= 0.0).then(|| (x - 1.0) / 2.0 + r.sqrt())
}

/// Whether the bound, viewed as a function of `x`, is nonincreasing along
/// `grid` (sorted ascending, inside `[0, n−1]`).
///
/// The radicand decreases on `[0, n−1]`, so the points where it is real form
/// a prefix of the grid; the check runs over that prefix.
pub fn hn_profile_nonincreasing(n: usize, m: usize, grid: &[f64]) -> bool {
    let values: Vec<f64> = grid
        .iter()
        .map_while(|&x| hn_profile_value(n, m, x))
        .collect();
    values
        .windows(2)
        .all(|w| w[1] <= w[0] + 1e-12 * w[0].abs().max(1.0))
}

/// Monic cubic `x³ + c2·x² + c1·x + c0` with exact integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubicPoly {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl CubicPoly {
    /// Exact evaluation; `None` on overflow.
    pub fn eval(&self, x: i64) -> Option<i64> {
        let acc = x.checked_add(self.c2)?;
        let acc = acc.checked_mul(x)?.checked_add(self.c1)?;
        acc.checked_mul(x)?.checked_add(self.c0)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        ((x + self.c2 as f64) * x + self.c1 as f64) * x + self.c0 as f64
    }

    /// Coefficients in ascending order of degree.
    pub fn coeffs(&self) -> [i128; 4] {
        [self.c0 as i128, self.c1 as i128, self.c2 as i128, 1]
    }

    /// Sum of the roots, `−c2`.
    pub fn root_sum(&self) -> i64 {
        -self.c2
    }
}

/// Characteristic polynomial of the three-part quotient of
/// `K_s ∨ (K_{n−b−s−1} ∪ (b+1)K_1)`:
///
/// ```text
/// x³ − (n−b−3)x² − (n+bs+s−b−2)x − b²s + bns − bs² − 3bs + ns − s² − 2s
/// ```
pub fn book_cubic(n: i64, s: i64, b: i64) -> Result<CubicPoly, SpectralError> {
    let of = || SpectralError::Overflow;
    let mul = |x: i64, y: i64| x.checked_mul(y).ok_or_else(of);
    let c2 = -(n - b - 3);
    let c1 = -(n + mul(b, s)? + s - b - 2);
    let terms = [
        -mul(mul(b, b)?, s)?,
        mul(mul(b, n)?, s)?,
        -mul(mul(b, s)?, s)?,
        -mul(3, mul(b, s)?)?,
        mul(n, s)?,
        -mul(s, s)?,
        -mul(2, s)?,
    ];
    let c0 = terms
        .iter()
        .try_fold(0i64, |acc, &t| acc.checked_add(t))
        .ok_or_else(of)?;
    Ok(CubicPoly { c2, c1, c0 })
}
