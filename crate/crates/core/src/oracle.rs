//! Brute-force reference computations on bounded pieces of the Farey graph
//! and small chord diagrams. Slow and simple on purpose.

use std::collections::{HashMap, VecDeque};

use crate::bypass::AttachmentSide;
use crate::error::{Error, Result};
use crate::slopes::{gcd, has_edge, in_arc_cw, Slope};

/// All slopes `p/q` with `|p|, q <= bound`, including `1/0`.
pub fn bounded_slopes(bound: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for q in 1..=bound {
        for p in -bound..=bound {
            if gcd(p, q) == 1 {
                out.push(Slope::new(p, q).expect("q > 0"));
            }
        }
    }
    out
}

fn fits(s: Slope, bound: i64) -> bool {
    s.numerator().abs() <= bound && s.denominator() <= bound
}

/// BFS distance from `a` to `b` using only slopes inside the box of `bound`.
pub fn bfs_distance(a: Slope, b: Slope, bound: i64) -> Result<usize> {
    if !fits(a, bound) || !fits(b, bound) {
        return Err(Error::Usage(format!("{a} or {b} lies outside the oracle bound {bound}")));
    }
    let verts = bounded_slopes(bound);
    let mut dist: HashMap<Slope, usize> = HashMap::from([(a, 0)]);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if v == b {
            return Ok(d);
        }
        for &w in &verts {
            if has_edge(v, w) && !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    Err(Error::Usage(format!("{b} unreachable from {a} inside bound {bound}")))
}

/// BFS distances from `a` to every slope in the box of `bound`.
pub fn bfs_distances(a: Slope, bound: i64) -> HashMap<Slope, usize> {
    let verts = bounded_slopes(bound);
    let mut dist: HashMap<Slope, usize> = HashMap::from([(a, 0)]);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for &w in &verts {
            if has_edge(v, w) && !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The Farey neighbour of `s` first met when sweeping from `r` towards `s`
/// (clockwise from the front, counter-clockwise from the back), found by
/// scanning every slope in the box.
pub fn bypass_scan(s: Slope, r: Slope, side: AttachmentSide, bound: i64) -> Result<Slope> {
    if s == r {
        return Err(Error::RulingEqualsDividing(s));
    }
    let in_sweep = |x: Slope| match side {
        AttachmentSide::Front => x == r || in_arc_cw(x, r, s),
        AttachmentSide::Back => x == r || in_arc_cw(x, s, r),
    };
    let candidates: Vec<Slope> = bounded_slopes(bound)
        .into_iter()
        .filter(|&x| x != s && has_edge(x, s) && in_sweep(x))
        .collect();
    // the first one reached from r: no other candidate lies between r and it
    candidates
        .iter()
        .copied()
        .find(|&x| {
            candidates.iter().all(|&y| {
                y == x
                    || match side {
                        AttachmentSide::Front => !(y == r || in_arc_cw(y, r, x)),
                        AttachmentSide::Back => !(y == r || in_arc_cw(y, x, r)),
                    }
            })
        })
        .ok_or_else(|| Error::Usage(format!("no neighbour of {s} inside bound {bound}")))
}

/// Counts non-crossing perfect matchings of `2n` points by enumerating all
/// perfect matchings.
pub fn chord_diagrams_brute(n: u32) -> u64 {
    fn go(free: &mut Vec<u32>, pairs: &mut Vec<(u32, u32)>) -> u64 {
        if free.is_empty() {
            let crossing = pairs.iter().any(|&(a, b)| {
                pairs.iter().any(|&(c, d)| a < c && c < b && b < d)
            });
            return u64::from(!crossing);
        }
        let a = free.remove(0);
        let mut total = 0;
        for i in 0..free.len() {
            let b = free.remove(i);
            pairs.push((a, b));
            total += go(free, pairs);
            pairs.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
        total
    }
    go(&mut (0..2 * n).collect(), &mut Vec::new())
}
