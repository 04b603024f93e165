//! Inclusive 1D sample grids with the `lo:hi:n` CLI syntax and the
//! endpoint-shrink rule for excluded singular boundary values.

use crate::error::{Error, Result};

/// `n` evenly spaced samples on `[lo, hi]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridAxis {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidParameter(format!("grid bounds must be finite, got {lo}:{hi}")));
        }
        if lo >= hi {
            return Err(Error::InvalidParameter(format!("grid needs lo < hi, got {lo}:{hi}")));
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!("grid needs at least 2 points, got {n}")));
        }
        Ok(Self { lo, hi, n })
    }

    /// Parses `lo:hi:n`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidParameter(format!(
                "grid spec must look like lo:hi:n, got {text:?}"
            )));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad grid lower bound {:?}", parts[0])))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad grid upper bound {:?}", parts[1])))?;
        let n: usize = parts[2]
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad grid count {:?}", parts[2])))?;
        Self::new(lo, hi, n)
    }

    /// The samples `lo + i*(hi-lo)/(n-1)`; the last one is exactly `hi`.
    pub fn values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = (0..self.n)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.n - 1) as f64)
            .collect();
        v[self.n - 1] = self.hi;
        v
    }

    /// Like [`GridAxis::values`], but an endpoint that falls on an excluded
    /// boundary of `in_domain` is pulled inward by `1e-9 * span`. Interior
    /// samples are left untouched (an out-of-domain interior sample is a
    /// user error, reported as `DomainError` downstream).
    pub fn values_shrunk(&self, in_domain: impl Fn(f64) -> bool) -> Vec<f64> {
        let mut v = self.values();
        let nudge = 1e-9 * (self.hi - self.lo);
        let n = v.len();
        if !in_domain(v[0]) && in_domain(v[0] + nudge) {
            v[0] += nudge;
        }
        if !in_domain(v[n - 1]) && in_domain(v[n - 1] - nudge) {
            v[n - 1] -= nudge;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_samples_inclusively() {
        let g = GridAxis::parse("0.2:3:64").unwrap();
        assert_eq!((g.lo, g.hi, g.n), (0.2, 3.0, 64));
        let v = g.values();
        assert_eq!(v.len(), 64);
        assert_eq!(v[0], 0.2);
        assert_eq!(v[63], 3.0);
        assert!(v.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_malformed_specs() {
        for bad in ["1:2", "a:2:3", "1:b:3", "1:2:x", "2:1:8", "1:1:8", "1:2:1", "1:2:3:4"] {
            assert!(
                matches!(GridAxis::parse(bad), Err(Error::InvalidParameter(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn shrinks_only_excluded_endpoints() {
        let g = GridAxis::new(0.0, 3.0, 4).unwrap();
        let v = g.values_shrunk(|s| s != 0.0);
        assert_eq!(v[0], 1e-9 * 3.0);
        assert_eq!(v[3], 3.0);

        // An interior zero is not repaired.
        let g = GridAxis::new(-1.0, 1.0, 3).unwrap();
        let v = g.values_shrunk(|s| s != 0.0);
        assert_eq!(v, vec![-1.0, 0.0, 1.0]);

        // Both endpoints excluded (open interval).
        let g = GridAxis::new(-5.0, 5.0, 5).unwrap();
        let v = g.values_shrunk(|s| s.abs() < 5.0);
        assert!((v[0] - -4.99999999).abs() < 1e-7 && v[0] > -5.0);
        assert!(v[4] < 5.0);
    }
}
