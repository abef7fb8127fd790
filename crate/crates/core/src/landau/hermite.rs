use crate::error::{Error, Result};

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite(n: i32, x: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::QuantumNumber { got: n as i64, min: 0 });
    }
    let mut h_prev = 1.0;
    if n == 0 {
        return Ok(h_prev);
    }
    let mut h = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * h - 2.0 * k as f64 * h_prev;
        h_prev = h;
        h = next;
    }
    Ok(h)
}
