//! Weak supermajorization of positive vectors.

use crate::error::{Error, Result};
use rug::Rational;

/// True iff, after sorting both vectors ascending, every prefix sum of `a`
/// is bounded by the matching prefix sum of `b`. Requires equal lengths and
/// strictly positive entries.
pub fn weak_supermajorize(a: &[Rational], b: &[Rational]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "vectors differ in length: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    for e in a.iter().chain(b.iter()) {
        if *e <= 0 {
            return Err(Error::Domain(format!("entry {e} is not positive")));
        }
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort();
    sb.sort();
    let mut pa = Rational::new();
    let mut pb = Rational::new();
    for (x, y) in sa.iter().zip(sb.iter()) {
        pa += x;
        pb += y;
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}
