use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;

/// Complex double, the ground field of every structure in the crate.
pub type Scalar = Complex64;

pub const ZERO: Scalar = Complex64::new(0.0, 0.0);
pub const ONE: Scalar = Complex64::new(1.0, 0.0);

/// `exp(2πi · numerator / denominator)`, kept as an exact reduced fraction.
///
/// The numerator is normalized into `0..denominator`, so two roots compare
/// equal exactly when they denote the same complex number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    numerator: i64,
    denominator: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl RootOfUnity {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, Error> {
        if denominator < 1 {
            return Err(Error::InvalidInput(format!(
                "root of unity denominator must be positive, got {denominator}"
            )));
        }
        let num = numerator.rem_euclid(denominator);
        let g = gcd(num, denominator).max(1);
        Ok(RootOfUnity { numerator: num / g, denominator: denominator / g })
    }

    pub fn one() -> Self {
        RootOfUnity { numerator: 0, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let d = self.denominator * other.denominator / gcd(self.denominator, other.denominator);
        let n = self.numerator * (d / self.denominator) + other.numerator * (d / other.denominator);
        RootOfUnity::new(n, d).expect("positive denominator")
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let n = (self.numerator as i128 * k as i128).rem_euclid(self.denominator as i128) as i64;
        RootOfUnity::new(n, self.denominator).expect("positive denominator")
    }

    pub fn inv(&self) -> RootOfUnity {
        self.pow(-1)
    }

    /// Quarter turns are returned exactly; other angles go through `sin_cos`.
    pub fn to_scalar(&self) -> Scalar {
        let (n, d) = (self.numerator, self.denominator);
        if (4 * n) % d == 0 {
            return match 4 * n / d {
                0 => Scalar::new(1.0, 0.0),
                1 => Scalar::new(0.0, 1.0),
                2 => Scalar::new(-1.0, 0.0),
                _ => Scalar::new(0.0, -1.0),
            };
        }
        let angle = std::f64::consts::TAU * n as f64 / d as f64;
        let (s, c) = angle.sin_cos();
        Scalar::new(c, s)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    /// Parses `k/m`; a bare integer `k` means `k/1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidInput(format!("expected a fraction k/m, got {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        RootOfUnity::new(n, d)
    }
}

/// A table entry that is either an exact phase or a plain complex number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScalarEntry {
    Root(RootOfUnity),
    Value(Scalar),
}

impl ScalarEntry {
    pub fn value(&self) -> Scalar {
        match self {
            ScalarEntry::Root(r) => r.to_scalar(),
            ScalarEntry::Value(v) => *v,
        }
    }
}

impl From<RootOfUnity> for ScalarEntry {
    fn from(r: RootOfUnity) -> Self {
        ScalarEntry::Root(r)
    }
}

impl From<Scalar> for ScalarEntry {
    fn from(v: Scalar) -> Self {
        ScalarEntry::Value(v)
    }
}

pub fn is_finite(z: Scalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
