//! Twisting numbers, bypass attachments on convex tori, and the Imbalance
//! Principle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curves::{curve_of_slope, intersection, slope_of, CurveClass};
use crate::error::{Error, Result};
use crate::slopes::{Slope, Unimodular};

/// Twisting of the contact planes along a curve, in half-integer units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TwistValue {
    pub half_units: i64,
}

impl TwistValue {
    pub fn from_half_units(half_units: i64) -> TwistValue {
        TwistValue { half_units }
    }

    pub fn integer(n: i64) -> TwistValue {
        TwistValue { half_units: 2 * n }
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.half_units % 2 == 0).then_some(self.half_units / 2)
    }
}

impl fmt::Display for TwistValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.half_units),
        }
    }
}

impl FromStr for TwistValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<TwistValue> {
        let bad = || Error::Usage(format!("malformed twisting number '{s}'"));
        let t = s.trim();
        match t.split_once('/') {
            Some((n, "2")) => Ok(TwistValue { half_units: n.trim().parse().map_err(|_| bad())? }),
            Some(_) => Err(bad()),
            None => Ok(TwistValue::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl TryFrom<String> for TwistValue {
    type Error = Error;

    fn try_from(s: String) -> Result<TwistValue> {
        s.parse()
    }
}

impl From<TwistValue> for String {
    fn from(t: TwistValue) -> String {
        t.to_string()
    }
}

/// Twisting of a Legendrian realisation of `curve` on a convex torus whose
/// dividing set is `n_dividing` parallel curves of `dividing_slope`:
/// `-|curve ∩ Γ| / 2`.
pub fn twist_of(curve: CurveClass, dividing_slope: Slope, n_dividing: u64) -> Result<TwistValue> {
    if n_dividing == 0 || !n_dividing.is_multiple_of(2) {
        return Err(Error::OddDividingCount(n_dividing));
    }
    if slope_of(curve) == dividing_slope {
        return Err(Error::ParallelToDividing(dividing_slope));
    }
    let k = n_dividing
        .checked_mul(intersection(curve, curve_of_slope(dividing_slope)))
        .and_then(|k| i64::try_from(k).ok())
        .ok_or(Error::Overflow)?;
    Ok(TwistValue { half_units: -k })
}

/// Which side of the torus a bypass is attached from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttachmentSide {
    Front,
    Back,
}

impl AttachmentSide {
    pub fn opposite(self) -> AttachmentSide {
        match self {
            AttachmentSide::Front => AttachmentSide::Back,
            AttachmentSide::Back => AttachmentSide::Front,
        }
    }
}

impl FromStr for AttachmentSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<AttachmentSide> {
        match s {
            "front" => Ok(AttachmentSide::Front),
            "back" => Ok(AttachmentSide::Back),
            other => Err(Error::Usage(format!("expected 'front' or 'back', got '{other}'"))),
        }
    }
}

impl fmt::Display for AttachmentSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttachmentSide::Front => "front",
            AttachmentSide::Back => "back",
        })
    }
}

/// New dividing slope after attaching a bypass along a ruling curve of slope
/// `r` to a torus with two dividing curves of slope `s`.
///
/// From the front, the result is the first Farey neighbour of `s` met when
/// sweeping clockwise from `r` (inclusive) towards `s`; from the back the sweep
/// runs counter-clockwise.
pub fn bypass_attach(s: Slope, r: Slope, side: AttachmentSide) -> Result<Slope> {
    if s == r {
        return Err(Error::RulingEqualsDividing(s));
    }
    // Move s to 1/0; its neighbours become the integers, and the clockwise
    // sweep becomes increasing order on the real line.
    let m = Unimodular::sending_infinity_to(s);
    let (mut p, mut q) = m.inverse().apply(r.vector());
    if q < 0 {
        p = -p;
        q = -q;
    }
    debug_assert!(q > 0);
    let n = match side {
        AttachmentSide::Front => -((-p).div_euclid(q)),
        AttachmentSide::Back => p.div_euclid(q),
    };
    Slope::from_vector(m.apply((n, 1)))
}

/// `tw0 < tw1 <= 0`: a bypass along the annulus is guaranteed.
pub fn imbalance_bypass_exists(tw0: TwistValue, tw1: TwistValue) -> bool {
    tw0 < tw1 && tw1.half_units <= 0
}
