//! Essential simple closed curves on the torus and the action of 2x2 integer
//! matrices on them.
//!
//! A class is written `(a,b)`, the column vector with top entry `a` and bottom
//! entry `b`; its slope is `b/a`. Classes are unoriented, so `(a,b)` and
//! `(-a,-b)` coincide. The canonical representative has `a > 0`, or is `(0,1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slopes::{gcd, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CurveClass {
    a: i64,
    b: i64,
}

impl CurveClass {
    pub fn new(a: i64, b: i64) -> Result<CurveClass> {
        if a == 0 && b == 0 {
            return Err(Error::ZeroCurve);
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotPrimitive(a, b));
        }
        Ok(if a < 0 || (a == 0 && b < 0) {
            CurveClass { a: -a, b: -b }
        } else {
            CurveClass { a, b }
        })
    }

    pub fn top(self) -> i64 {
        self.a
    }

    pub fn bottom(self) -> i64 {
        self.b
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(text: &str) -> Result<CurveClass> {
        let malformed = || Error::MalformedCurve(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (a, b) = inner.split_once(',').ok_or_else(malformed)?;
        let a = a.trim().parse().map_err(|_| malformed())?;
        let b = b.trim().parse().map_err(|_| malformed())?;
        CurveClass::new(a, b)
    }
}

impl TryFrom<String> for CurveClass {
    type Error = Error;

    fn try_from(s: String) -> Result<CurveClass> {
        s.parse()
    }
}

impl From<CurveClass> for String {
    fn from(c: CurveClass) -> String {
        c.to_string()
    }
}

/// `(a,b) -> b/a`.
pub fn slope_of(c: CurveClass) -> Slope {
    Slope::new(c.b, c.a).expect("primitive class has a slope")
}

pub fn curve_of_slope(s: Slope) -> CurveClass {
    CurveClass::new(s.denominator(), s.numerator()).expect("canonical slope is primitive")
}

/// Minimal geometric intersection number `|a1 b2 - a2 b1|`.
pub fn intersection(c1: CurveClass, c2: CurveClass) -> u64 {
    let d = c1.a as i128 * c2.b as i128 - c2.a as i128 * c1.b as i128;
    d.unsigned_abs() as u64
}

/// An integer 2x2 matrix of determinant +1 or -1 acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MappingClass {
    m: [[i64; 2]; 2],
}

impl MappingClass {
    /// Monodromy of the figure-eight fibration, without boundary twisting.
    pub const PHI: MappingClass = MappingClass { m: [[2, 1], [1, 1]] };
    pub const IDENTITY: MappingClass = MappingClass { m: [[1, 0], [0, 1]] };
    pub const MINUS_IDENTITY: MappingClass = MappingClass { m: [[-1, 0], [0, -1]] };

    pub fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Result<MappingClass> {
        let mc = MappingClass { m: [[m11, m12], [m21, m22]] };
        match mc.det() {
            1 | -1 => Ok(mc),
            d => Err(Error::NotUnimodular(d)),
        }
    }

    /// Builds a matrix without checking its determinant.
    ///
    /// Used to model corrupted constants in self-checking traces.
    pub fn unchecked(m11: i64, m12: i64, m21: i64, m22: i64) -> MappingClass {
        MappingClass { m: [[m11, m12], [m21, m22]] }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        let (x, y) = (self.m, other.m);
        let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
        MappingClass { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn power(&self, k: i32) -> Result<MappingClass> {
        let base = if k < 0 { invert(self)? } else { *self };
        let mut out = MappingClass::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        Ok(out)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl FromStr for MappingClass {
    type Err = Error;

    fn from_str(text: &str) -> Result<MappingClass> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "phi" => return Ok(MappingClass::PHI),
            "phi^-1" | "phi-inv" => return invert(&MappingClass::PHI),
            "id" => return Ok(MappingClass::IDENTITY),
            "-id" => return Ok(MappingClass::MINUS_IDENTITY),
            _ => {}
        }
        let malformed = || Error::MalformedMatrix(text.to_string());
        let inner = t
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(malformed)?;
        let (r1, r2) = inner.split_once("],[").ok_or_else(malformed)?;
        let mut vals = Vec::with_capacity(4);
        for part in r1.split(',').chain(r2.split(',')) {
            vals.push(part.parse::<i64>().map_err(|_| malformed())?);
        }
        if vals.len() != 4 {
            return Err(malformed());
        }
        MappingClass::new(vals[0], vals[1], vals[2], vals[3])
    }
}

impl TryFrom<String> for MappingClass {
    type Error = Error;

    fn try_from(s: String) -> Result<MappingClass> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        // Accept any integer matrix when deserialising so that corrupted traces
        // can still be loaded and re-verified.
        if let Some(inner) = t.strip_prefix("[[").and_then(|x| x.strip_suffix("]]")) {
            if let Some((r1, r2)) = inner.split_once("],[") {
                let vals: std::result::Result<Vec<i64>, _> =
                    r1.split(',').chain(r2.split(',')).map(str::parse).collect();
                if let Ok(v) = vals {
                    if v.len() == 4 {
                        return Ok(MappingClass::unchecked(v[0], v[1], v[2], v[3]));
                    }
                }
            }
        }
        s.parse()
    }
}

impl From<MappingClass> for String {
    fn from(m: MappingClass) -> String {
        m.to_string()
    }
}

/// Matrix-vector product, re-canonicalised.
pub fn apply(m: &MappingClass, c: CurveClass) -> Result<CurveClass> {
    let [[p, q], [r, s]] = m.m;
    let a = p as i128 * c.a as i128 + q as i128 * c.b as i128;
    let b = r as i128 * c.a as i128 + s as i128 * c.b as i128;
    let a = i64::try_from(a).map_err(|_| Error::Overflow)?;
    let b = i64::try_from(b).map_err(|_| Error::Overflow)?;
    CurveClass::new(a, b)
}

pub fn invert(m: &MappingClass) -> Result<MappingClass> {
    let det = m.det();
    if det != 1 && det != -1 {
        return Err(Error::NotUnimodular(det));
    }
    let [[p, q], [r, s]] = m.m;
    // inverse = adj / det, and 1/det = det for det = +-1
    Ok(MappingClass { m: [[s * det, -q * det], [-r * det, p * det]] })
}
