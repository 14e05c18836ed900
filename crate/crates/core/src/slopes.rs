//! Exact arithmetic on vertices of the Farey graph.
//!
//! A vertex is a reduced fraction `p/q` or `1/0`. Two vertices are joined by
//! an edge when `|p q' - p' q| = 1`. The boundary circle of the Farey disc is
//! oriented so that a clockwise sweep starting at `1/0` visits the negative
//! labels in increasing order, then `0`, then the positive labels in
//! increasing order, and returns to `1/0`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex label of the Farey graph in canonical form.
///
/// The denominator is non-negative, `gcd(|p|, q) = 1`, and infinity is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Slope {
    p: i64,
    q: i64,
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    /// Builds the canonical slope for the projective vector `(p, q)`.
    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroSlope);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn numerator(self) -> i64 {
        self.p
    }

    pub fn denominator(self) -> i64 {
        self.q
    }

    pub fn is_infinite(self) -> bool {
        self.q == 0
    }

    /// Negation `p/q -> -p/q`. Reverses the orientation of the boundary circle.
    pub fn negate(self) -> Slope {
        if self.is_infinite() {
            self
        } else {
            Slope { p: -self.p, q: self.q }
        }
    }

    /// Returns the integer value when the slope is an integer.
    pub fn as_integer(self) -> Option<i64> {
        (self.q == 1).then_some(self.p)
    }

    pub(crate) fn vector(self) -> (i128, i128) {
        (self.p as i128, self.q as i128)
    }

    pub(crate) fn from_vector(v: (i128, i128)) -> Result<Slope> {
        let p = i64::try_from(v.0).map_err(|_| Error::Overflow)?;
        let q = i64::try_from(v.1).map_err(|_| Error::Overflow)?;
        Slope::new(p, q)
    }

    /// Signed determinant `p q' - p' q`.
    pub fn det(self, other: Slope) -> i128 {
        self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128
    }

    /// Key realising the clockwise boundary order starting at `1/0`.
    pub fn circular_position(self) -> CircularKey {
        CircularKey(self)
    }
}

/// Total order on slopes matching the clockwise sweep from `1/0`.
///
/// `1/0` is the minimum; finite labels follow in increasing numeric order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularKey(Slope);

impl Ord for CircularKey {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.0, other.0);
        match (a.is_infinite(), b.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            // both denominators are positive
            (false, false) => (a.p as i128 * b.q as i128).cmp(&(b.p as i128 * a.q as i128)),
        }
    }
}

impl PartialOrd for CircularKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(text: &str) -> Result<Slope> {
        parse_slope(text)
    }
}

impl TryFrom<String> for Slope {
    type Error = Error;

    fn try_from(value: String) -> Result<Slope> {
        parse_slope(&value)
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}

/// Parses `"p/q"`, `"p"`, `"inf"` or `"-inf"` into a canonical slope.
pub fn parse_slope(text: &str) -> Result<Slope> {
    let t = text.trim();
    let malformed = || Error::MalformedSlope(text.to_string());
    match t {
        "inf" | "+inf" | "-inf" | "∞" | "-∞" => return Ok(Slope::INFINITY),
        _ => {}
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let p: i64 = num.parse().map_err(|_| malformed())?;
    let q: i64 = den.parse().map_err(|_| malformed())?;
    Slope::new(p, q)
}

/// Which half of the Farey disc a mediant is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    /// Negative labels; vertices are written with `p >= 0`, `q <= 0` and `0` as `0/(-1)`.
    Upper,
    /// Positive labels; vertices are written with `p >= 0`, `q >= 0` and `0` as `0/1`.
    Lower,
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Half> {
        match s {
            "upper" => Ok(Half::Upper),
            "lower" => Ok(Half::Lower),
            other => Err(Error::Usage(format!("expected 'upper' or 'lower', got '{other}'"))),
        }
    }
}

fn in_half(s: Slope, half: Half) -> bool {
    match half {
        Half::Upper => s.p <= 0 || s.is_infinite(),
        Half::Lower => s.p >= 0,
    }
}

fn half_representative(s: Slope, half: Half) -> (i128, i128) {
    let (p, q) = s.vector();
    match half {
        Half::Lower => (p, q),
        Half::Upper if s.is_infinite() => (p, q),
        Half::Upper => (-p, -q),
    }
}

/// The third corner of the Farey triangle on `half` spanned by the edge `a b`.
pub fn mediant(a: Slope, b: Slope, half: Half) -> Result<Slope> {
    if !has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    if !in_half(a, half) || !in_half(b, half) {
        return Err(Error::WrongHalf(a, b, half));
    }
    let (pa, qa) = half_representative(a, half);
    let (pb, qb) = half_representative(b, half);
    Slope::from_vector((pa + pb, qa + qb))
}

/// `|p_a q_b - p_b q_a| = 1`.
pub fn has_edge(a: Slope, b: Slope) -> bool {
    a.det(b).abs() == 1
}

/// Whether the three distinct slopes occur in clockwise cyclic order.
pub fn is_clockwise(a: Slope, b: Slope, c: Slope) -> bool {
    let (ka, kb, kc) = (a.circular_position(), b.circular_position(), c.circular_position());
    (ka < kb && kb < kc) || (kb < kc && kc < ka) || (kc < ka && ka < kb)
}

/// True iff `x` lies strictly inside the arc swept clockwise from `from` to `to`.
pub fn in_arc_cw(x: Slope, from: Slope, to: Slope) -> bool {
    if x == from || x == to || from == to {
        return false;
    }
    is_clockwise(from, x, to)
}

/// An integer matrix of determinant one acting on projective vectors `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Unimodular {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

impl Unimodular {
    /// Some matrix of determinant one whose first column is the vector of `s`,
    /// so that it sends `1/0` to `s`.
    pub(crate) fn sending_infinity_to(s: Slope) -> Unimodular {
        let (p, q) = s.vector();
        // p*y - q*x = 1
        let (g, u, v) = ext_gcd(p, -q);
        debug_assert_eq!(g.abs(), 1);
        let (y, x) = if g == 1 { (u, v) } else { (-u, -v) };
        Unimodular { a: p, b: x, c: q, d: y }
    }

    pub(crate) fn apply(&self, v: (i128, i128)) -> (i128, i128) {
        (self.a * v.0 + self.b * v.1, self.c * v.0 + self.d * v.1)
    }

    pub(crate) fn inverse(&self) -> Unimodular {
        Unimodular { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }
}

/// Returns `(g, x, y)` with `a x + b y = g`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn to_upper_q(v: (i128, i128)) -> (i128, i128) {
    if v.1 < 0 || (v.1 == 0 && v.0 < 0) {
        (-v.0, -v.1)
    } else {
        v
    }
}

/// A path of Farey edges without repeated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Slope>", into = "Vec<Slope>")]
pub struct FareyPath(Vec<Slope>);

impl FareyPath {
    pub fn new(vertices: Vec<Slope>) -> Result<FareyPath> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        for w in vertices.windows(2) {
            if !has_edge(w[0], w[1]) {
                return Err(Error::NotAnEdge(w[0], w[1]));
            }
        }
        let distinct: BTreeSet<(i64, i64)> = vertices.iter().map(|s| (s.p, s.q)).collect();
        if distinct.len() != vertices.len() {
            return Err(Error::RepeatedVertex);
        }
        Ok(FareyPath(vertices))
    }

    pub fn vertices(&self) -> &[Slope] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn first(&self) -> Slope {
        self.0[0]
    }

    pub fn last(&self) -> Slope {
        *self.0.last().expect("non-empty path")
    }
}

impl TryFrom<Vec<Slope>> for FareyPath {
    type Error = Error;

    fn try_from(v: Vec<Slope>) -> Result<FareyPath> {
        FareyPath::new(v)
    }
}

impl From<FareyPath> for Vec<Slope> {
    fn from(p: FareyPath) -> Vec<Slope> {
        p.0
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Slope::to_string).collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

/// Vertices of the triangles crossed by the hyperbolic geodesic from `1/0`
/// to the finite vector `x` (positive second entry), in the order crossed.
///
/// Fans around a single pivot with five or more new spokes keep only the
/// outermost spoke on each side; the dropped spokes lie on no shortest path.
fn ladder_from_infinity(x: (i128, i128)) -> Vec<(i128, i128)> {
    let (p, q) = x;
    debug_assert!(q > 0);
    let n = p.div_euclid(q);
    let mut out = vec![(1, 0), (n, 1)];
    if p == n * q {
        return out;
    }
    let mut left = (n, 1);
    let mut right = (n + 1, 1);
    out.push(right);
    // x lies strictly between left and right; both are Farey neighbours.
    loop {
        let m = (left.0 + right.0, left.1 + right.1);
        if m == (p, q) {
            out.push(m);
            return out;
        }
        // x < m  <=>  p * m.1 < m.0 * q
        let toward_left = p * m.1 < m.0 * q;
        // Count how many consecutive mediants move the same endpoint.
        let (pivot, moving) = if toward_left { (left, right) } else { (right, left) };
        let below = |v: (i128, i128)| {
            let c = (p * v.1).cmp(&(v.0 * q));
            if toward_left {
                c == Ordering::Less
            } else {
                c == Ordering::Greater
            }
        };
        // largest k >= 1 with moving + k * pivot still strictly on the same side of x
        let mut hi: i128 = 1;
        while below((moving.0 + (hi * 2) * pivot.0, moving.1 + (hi * 2) * pivot.1)) {
            hi *= 2;
        }
        let mut lo = hi;
        hi *= 2;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if below((moving.0 + mid * pivot.0, moving.1 + mid * pivot.1)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let k = lo;
        let spoke = |j: i128| (moving.0 + j * pivot.0, moving.1 + j * pivot.1);
        if k >= 5 {
            out.extend([spoke(1), spoke(k - 1), spoke(k)]);
        } else {
            out.extend((1..=k).map(spoke));
        }
        let new_moving = spoke(k);
        if toward_left {
            right = new_moving;
        } else {
            left = new_moving;
        }
    }
}

/// A minimum-length edge path from `a` to `b`.
///
/// Ties are broken greedily: from each vertex the next vertex is the one with
/// largest denominator, then smallest numerator, among those that still lie
/// on a shortest path.
pub fn farey_path(a: Slope, b: Slope) -> Result<FareyPath> {
    if a == b {
        return Err(Error::DegeneratePath(a));
    }
    let m = Unimodular::sending_infinity_to(a);
    let minv = m.inverse();
    let x = to_upper_q(minv.apply(b.vector()));
    let ladder = ladder_from_infinity(x);
    let mut verts: Vec<Slope> = Vec::with_capacity(ladder.len());
    for v in ladder {
        let s = Slope::from_vector(m.apply(v))?;
        if !verts.contains(&s) {
            verts.push(s);
        }
    }
    shortest_in(&verts, a, b)
}

/// BFS restricted to `verts`, with the greedy tie-break of [`farey_path`].
fn shortest_in(verts: &[Slope], a: Slope, b: Slope) -> Result<FareyPath> {
    let index: HashMap<Slope, usize> = verts.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let n = verts.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && has_edge(verts[i], verts[j])).collect())
        .collect();
    let target = index[&b];
    let mut dist = vec![usize::MAX; n];
    dist[target] = 0;
    let mut queue = VecDeque::from([target]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut cur = index[&a];
    let mut path = vec![a];
    while cur != target {
        let next = adj[cur]
            .iter()
            .copied()
            .filter(|&v| dist[v] + 1 == dist[cur])
            .min_by_key(|&v| (std::cmp::Reverse(verts[v].q), verts[v].p))
            .ok_or(Error::Overflow)?;
        path.push(verts[next]);
        cur = next;
    }
    FareyPath::new(path)
}

/// All Farey neighbours of `a` with `|p| <= bound` and `q <= bound`.
pub fn neighbors(a: Slope, bound: u32) -> Result<BTreeSet<SlopeOrd>> {
    if bound == 0 {
        return Err(Error::Usage("denominator bound must be positive".into()));
    }
    let bound = bound as i64;
    let mut out = BTreeSet::new();
    for q in 0..=bound {
        for p in -bound..=bound {
            if (p == 0 && q == 0) || gcd(p, q) != 1 || (q == 0 && p != 1) {
                continue;
            }
            let s = Slope { p, q };
            if has_edge(a, s) {
                out.insert(SlopeOrd(s));
            }
        }
    }
    Ok(out)
}

/// A slope ordered by its clockwise position, for use in ordered sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeOrd(pub Slope);

impl Ord for SlopeOrd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.circular_position().cmp(&other.0.circular_position())
    }
}

impl PartialOrd for SlopeOrd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("-3"), Slope::new(-3, 1).unwrap());
        assert_eq!(s("inf"), Slope::INFINITY);
        assert_eq!(s("-inf"), Slope::INFINITY);
        let r = s("6/-4");
        assert_eq!((r.numerator(), r.denominator()), (-3, 2));
        assert_eq!(s("0/-5"), Slope::ZERO);
        assert_eq!(s("-1/0"), Slope::INFINITY);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_slope("0/0"), Err(Error::ZeroSlope)));
        assert!(matches!(parse_slope("x/2"), Err(Error::MalformedSlope(_))));
        assert!(matches!(parse_slope(""), Err(Error::MalformedSlope(_))));
        assert!(matches!(parse_slope("1/2/3"), Err(Error::MalformedSlope(_))));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(s("-3").to_string(), "-3");
        assert_eq!(s("2/4").to_string(), "1/2");
        assert_eq!(s("-inf").to_string(), "inf");
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(Slope::INFINITY, Slope::ZERO, Half::Lower).unwrap(), s("1"));
        assert_eq!(mediant(Slope::INFINITY, Slope::ZERO, Half::Upper).unwrap(), s("-1"));
        assert_eq!(mediant(s("1/2"), s("1/3"), Half::Lower).unwrap(), s("2/5"));
        assert!(matches!(
            mediant(s("1/2"), s("2"), Half::Lower),
            Err(Error::NotAnEdge(_, _))
        ));
        assert!(matches!(
            mediant(s("1"), s("2"), Half::Upper),
            Err(Error::WrongHalf(..))
        ));
    }

    /// Every labelled triangle of the standard picture of the Farey graph.
    #[test]
    fn mediant_reproduces_drawn_triangles() {
        let upper = [
            ("inf", "0", "-1"),
            ("inf", "-1", "-2"),
            ("inf", "-2", "-3"),
            ("-2", "-1", "-3/2"),
            ("-1", "0", "-1/2"),
            ("-1/2", "0", "-1/3"),
            ("-1", "-1/2", "-2/3"),
        ];
        let lower = [
            ("inf", "0", "1"),
            ("1", "0", "1/2"),
            ("1/2", "0", "1/3"),
            ("1", "1/2", "2/3"),
            ("inf", "1", "2"),
            ("2", "1", "3/2"),
            ("inf", "2", "3"),
        ];
        for (a, b, c) in upper {
            assert_eq!(mediant(s(a), s(b), Half::Upper).unwrap(), s(c), "{a} {b}");
        }
        for (a, b, c) in lower {
            assert_eq!(mediant(s(a), s(b), Half::Lower).unwrap(), s(c), "{a} {b}");
        }
    }

    #[test]
    fn edge_examples() {
        assert!(has_edge(s("-3"), Slope::INFINITY));
        assert!(has_edge(s("1"), s("2")));
        assert!(!has_edge(s("1/2"), s("2")));
        assert!(!has_edge(s("2"), s("2")));
    }

    #[test]
    fn circular_order_examples() {
        assert!(is_clockwise(s("-2"), s("-1"), s("0")));
        assert!(is_clockwise(s("0"), s("1/2"), s("1")));
        assert!(is_clockwise(s("1/2"), s("1"), s("2")));
        assert!(is_clockwise(s("3"), Slope::INFINITY, s("-3")));
        let inf = Slope::INFINITY.circular_position();
        assert!(inf < s("-100").circular_position());
        assert!(s("100").circular_position() > s("-100").circular_position());
    }

    #[test]
    fn arc_examples() {
        assert!(in_arc_cw(s("1"), s("4/5"), s("2")));
        assert!(!in_arc_cw(s("4/5"), s("4/5"), s("2")));
        assert!(!in_arc_cw(s("-1"), s("1/2"), s("3")));
        assert!(in_arc_cw(Slope::INFINITY, s("3"), s("0")));
    }

    #[test]
    fn path_examples() {
        let p = farey_path(s("-3"), Slope::INFINITY).unwrap();
        assert_eq!(p.vertices(), &[s("-3"), Slope::INFINITY]);
        let p = farey_path(s("-3"), s("-5")).unwrap();
        assert_eq!(p.vertices(), &[s("-3"), s("-4"), s("-5")]);
        assert!(matches!(
            farey_path(Slope::INFINITY, Slope::INFINITY),
            Err(Error::DegeneratePath(_))
        ));
    }

    #[test]
    fn path_handles_long_continued_fractions() {
        let p = farey_path(Slope::INFINITY, Slope::new(1, 1_000_000_000).unwrap()).unwrap();
        assert_eq!(p.len(), 2);
        let p = farey_path(s("1/3"), Slope::new(1_000_000_007, 3_000_000_000).unwrap()).unwrap();
        assert!(!p.is_empty());
    }

    #[test]
    fn neighbor_examples() {
        let n = neighbors(Slope::INFINITY, 3).unwrap();
        for k in -3..=3 {
            assert!(n.contains(&SlopeOrd(Slope::integer(k))));
        }
        assert!(neighbors(s("2"), 2).unwrap().contains(&SlopeOrd(s("1"))));
        let n: Vec<Slope> = neighbors(Slope::ZERO, 1).unwrap().into_iter().map(|x| x.0).collect();
        assert_eq!(n, vec![Slope::INFINITY, s("-1"), s("1")]);
    }

    #[test]
    fn path_rejects_non_edges() {
        assert!(FareyPath::new(vec![s("1/2"), s("2")]).is_err());
        assert!(FareyPath::new(vec![s("1"), s("2"), s("1")]).is_err());
        assert!(FareyPath::new(vec![]).is_err());
    }
}
