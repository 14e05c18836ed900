//! Dividing sets on the once-punctured-torus fibre of the figure-eight
//! complement.
//!
//! A dividing set is recorded by the data the normalisation argument uses:
//! its shape, the class of its closed curve when it has one, the holonomy
//! (boundary twisting) picked up along the glued annulus, and whether a
//! contractible component is present.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bypass::{twist_of, AttachmentSide};
use crate::curves::{apply, intersection, invert, slope_of, CurveClass, MappingClass};
use crate::error::{Error, Result};
use crate::slices::{Status, Verdict, Witness};
use crate::slopes::Slope;
use crate::trace::{facts, Check, Context, ProofTrace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DividingKind {
    BoundaryParallel { arcs: u32 },
    ArcPlusClosed { slope_class: CurveClass, closed_count: u32 },
    ArcSystem { slopes: Vec<CurveClass> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DividingSetJson", into = "DividingSetJson")]
pub struct DividingSet {
    kind: DividingKind,
    holonomy: i64,
    has_contractible: bool,
}

#[derive(Serialize, Deserialize)]
struct DividingSetJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arcs: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    slope_class: Option<CurveClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    closed_count: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    slopes: Option<Vec<CurveClass>>,
    #[serde(default)]
    holonomy: i64,
    #[serde(default)]
    contractible: bool,
}

impl TryFrom<DividingSetJson> for DividingSet {
    type Error = Error;

    fn try_from(j: DividingSetJson) -> Result<DividingSet> {
        let missing = |field: &str| Error::Usage(format!("dividing set of kind '{}' needs '{field}'", j.kind));
        let set = match j.kind.as_str() {
            "boundary_parallel" => DividingSet::boundary_parallel(j.arcs.unwrap_or(1))?,
            "arc_plus_closed" => DividingSet::arc_plus_closed(
                j.slope_class.ok_or_else(|| missing("slope_class"))?,
                j.closed_count.unwrap_or(1),
            ),
            "arc_system" => DividingSet::arc_system(j.slopes.clone().ok_or_else(|| missing("slopes"))?)?,
            other => return Err(Error::Usage(format!("unknown dividing set kind '{other}'"))),
        };
        Ok(set.with_holonomy(j.holonomy).with_contractible(j.contractible))
    }
}

impl From<DividingSet> for DividingSetJson {
    fn from(d: DividingSet) -> DividingSetJson {
        let mut j = DividingSetJson {
            kind: String::new(),
            arcs: None,
            slope_class: None,
            closed_count: None,
            slopes: None,
            holonomy: d.holonomy,
            contractible: d.has_contractible,
        };
        match d.kind {
            DividingKind::BoundaryParallel { arcs } => {
                j.kind = "boundary_parallel".into();
                j.arcs = Some(arcs);
            }
            DividingKind::ArcPlusClosed { slope_class, closed_count } => {
                j.kind = "arc_plus_closed".into();
                j.slope_class = Some(slope_class);
                j.closed_count = Some(closed_count);
            }
            DividingKind::ArcSystem { slopes } => {
                j.kind = "arc_system".into();
                j.slopes = Some(slopes);
            }
        }
        j
    }
}

impl DividingSet {
    pub fn boundary_parallel(arcs: u32) -> Result<DividingSet> {
        if arcs == 0 {
            return Err(Error::NoArcs);
        }
        Ok(DividingSet { kind: DividingKind::BoundaryParallel { arcs }, holonomy: 0, has_contractible: false })
    }

    pub fn arc_plus_closed(slope_class: CurveClass, closed_count: u32) -> DividingSet {
        DividingSet {
            kind: DividingKind::ArcPlusClosed { slope_class, closed_count },
            holonomy: 0,
            has_contractible: false,
        }
    }

    pub fn arc_system(slopes: Vec<CurveClass>) -> Result<DividingSet> {
        if slopes.is_empty() {
            return Err(Error::NoArcs);
        }
        let distinct: BTreeSet<_> = slopes.iter().collect();
        if distinct.len() != slopes.len() {
            return Err(Error::RepeatedArc);
        }
        Ok(DividingSet { kind: DividingKind::ArcSystem { slopes }, holonomy: 0, has_contractible: false })
    }

    /// The three arcs of the initial convex Seifert surface of a `tb = -3` knot.
    pub fn initial_three_arcs() -> DividingSet {
        let c = |a, b| CurveClass::new(a, b).expect("primitive");
        DividingSet::arc_system(vec![c(0, 1), c(1, 1), c(1, 2)]).expect("distinct arcs")
    }

    pub fn with_holonomy(mut self, holonomy: i64) -> DividingSet {
        self.holonomy = holonomy;
        self
    }

    pub fn with_contractible(mut self, contractible: bool) -> DividingSet {
        self.has_contractible = contractible;
        self
    }

    pub fn kind(&self) -> &DividingKind {
        &self.kind
    }

    pub fn holonomy(&self) -> i64 {
        self.holonomy
    }

    pub fn has_contractible(&self) -> bool {
        self.has_contractible
    }

    /// Points where the dividing set meets `∂Σ`: two per arc.
    pub fn boundary_points(&self) -> u64 {
        2 * match &self.kind {
            DividingKind::BoundaryParallel { arcs } => *arcs as u64,
            DividingKind::ArcPlusClosed { .. } => 1,
            DividingKind::ArcSystem { slopes } => slopes.len() as u64,
        }
    }

    pub fn components(&self) -> u64 {
        let base = match &self.kind {
            DividingKind::BoundaryParallel { arcs } => *arcs as u64,
            DividingKind::ArcPlusClosed { closed_count, .. } => 1 + *closed_count as u64,
            DividingKind::ArcSystem { slopes } => slopes.len() as u64,
        };
        base + self.has_contractible as u64
    }

    /// One of the two outcomes of normalisation.
    pub fn is_normal_form(&self) -> bool {
        !self.has_contractible
            && self.holonomy == 0
            && match &self.kind {
                DividingKind::BoundaryParallel { arcs } => *arcs == 1,
                DividingKind::ArcPlusClosed { slope_class, closed_count } => {
                    *closed_count == 1 && *slope_class == vertical()
                }
                DividingKind::ArcSystem { .. } => false,
            }
    }
}

impl fmt::Display for DividingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DividingKind::BoundaryParallel { arcs } => write!(f, "boundary_parallel({arcs})")?,
            DividingKind::ArcPlusClosed { slope_class, closed_count } => {
                write!(f, "arc_plus_closed({slope_class}, {closed_count})")?
            }
            DividingKind::ArcSystem { slopes } => {
                let s: Vec<String> = slopes.iter().map(|c| c.to_string()).collect();
                write!(f, "arc_system[{}]", s.join(", "))?
            }
        }
        if self.holonomy != 0 {
            write!(f, " holonomy {}", self.holonomy)?;
        }
        if self.has_contractible {
            write!(f, " +contractible")?;
        }
        Ok(())
    }
}

fn vertical() -> CurveClass {
    CurveClass::new(0, 1).expect("primitive")
}

/// Giroux's criterion on a vertically invariant neighbourhood.
pub fn giroux_ok(d: &DividingSet, surface_is_sphere: bool) -> Verdict {
    if surface_is_sphere {
        if d.components() != 1 {
            return Verdict::overtwisted(
                format!("dividing set {d} on S^2 is disconnected"),
                Witness::Contractible { surface: "S^2".into() },
            );
        }
    } else if d.has_contractible {
        return Verdict::overtwisted(
            format!("dividing set {d} has a contractible component"),
            Witness::Contractible { surface: "punctured torus".into() },
        );
    }
    Verdict::tight_candidate(format!("dividing set {d} passes Giroux's criterion"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// Swings the fibre once around the circle direction of the fibration.
pub fn monodromy_move(d: &DividingSet, direction: Direction) -> Result<DividingSet> {
    monodromy_move_with(d, direction, &MappingClass::PHI)
}

pub fn monodromy_move_with(d: &DividingSet, direction: Direction, phi: &MappingClass) -> Result<DividingSet> {
    if d.has_contractible {
        return Err(Error::Contractible);
    }
    let DividingKind::ArcPlusClosed { slope_class, closed_count } = d.kind else {
        return Err(Error::WrongKind);
    };
    let m = match direction {
        Direction::Forward => *phi,
        Direction::Backward => invert(phi)?,
    };
    Ok(DividingSet {
        kind: DividingKind::ArcPlusClosed { slope_class: apply(&m, slope_class)?, closed_count },
        ..d.clone()
    })
}

/// Removes boundary twisting. Assumes the rest of the dividing data is unchanged.
pub fn remove_holonomy(d: &DividingSet) -> Result<DividingSet> {
    if d.has_contractible {
        return Err(Error::Contractible);
    }
    Ok(DividingSet { holonomy: 0, ..d.clone() })
}

/// Result of [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub result: DividingSet,
    pub verdict: Verdict,
    pub trace: ProofTrace,
}

pub fn normalize(d: &DividingSet) -> Result<Normalization> {
    normalize_with(d, &Context::standard())
}

const MAX_SWINGS: i32 = 24;

/// Brings an admissible dividing set to one of the two normal forms, or
/// detects overtwistedness through a contractible component.
///
/// Rewrites are holonomy removal, monodromy swings, and the bypass found by
/// the Imbalance Principle on the `(5,4)` annulus when the closed curve is
/// parallel to `(1,2)`. Every arithmetic fact used along the way is recorded
/// in the returned trace against its frozen expected value and re-checked
/// with the monodromy stored in `ctx`.
pub fn normalize_with(d: &DividingSet, ctx: &Context) -> Result<Normalization> {
    let ledger = &ctx.ledger;
    let mut trace = ProofTrace::new();

    if d.has_contractible {
        let verdict = giroux_ok(d, false);
        trace.arith(
            "giroux",
            format!("{d} violates Giroux's criterion"),
            Check::Giroux { set: d.clone(), sphere: false, expected: Status::Overtwisted },
            ledger,
        );
        trace.cite("giroux-criterion", "Giroux's criterion", facts::GIROUX_CRITERION, ledger);
        return Ok(Normalization { result: d.clone(), verdict, trace });
    }

    let mut cur = d.clone();
    match &d.kind {
        DividingKind::BoundaryParallel { arcs: 1 } => {}
        DividingKind::ArcPlusClosed { closed_count: 1, .. } => {}
        _ => return Err(Error::Inadmissible(d.to_string())),
    }

    if cur.holonomy != 0 {
        let before = cur.holonomy;
        cur = remove_holonomy(&cur)?;
        trace.cite(
            "remove-holonomy",
            format!("boundary twisting {before} removed; dividing set becomes {cur}"),
            facts::HOLONOMY_REMOVAL,
            ledger,
        );
    }

    if let DividingKind::ArcPlusClosed { slope_class, .. } = cur.kind {
        let base = [vertical(), CurveClass::new(1, 1)?, CurveClass::new(1, 2)?];
        // bring the closed curve into the base set with the fewest swings
        let inv = invert(&ctx.phi)?;
        let (mut fwd, mut bwd) = (Some(slope_class), Some(slope_class));
        let mut swings = None;
        for k in 0..=MAX_SWINGS {
            if fwd.is_some_and(|c| base.contains(&c)) {
                swings = Some(k);
                break;
            }
            if bwd.is_some_and(|c| base.contains(&c)) {
                swings = Some(-k);
                break;
            }
            fwd = fwd.and_then(|c| apply(&ctx.phi, c).ok());
            bwd = bwd.and_then(|c| apply(&inv, c).ok());
        }
        let swings = swings.ok_or_else(|| Error::Inadmissible(cur.to_string()))?;
        let direction = if swings < 0 { Direction::Backward } else { Direction::Forward };
        for i in 0..swings.unsigned_abs() {
            let next = monodromy_move_with(&cur, direction, &ctx.phi)?;
            let (DividingKind::ArcPlusClosed { slope_class: from, .. }, DividingKind::ArcPlusClosed { slope_class: to, .. }) =
                (&cur.kind, &next.kind)
            else {
                unreachable!("monodromy moves preserve the kind")
            };
            let check = match direction {
                Direction::Forward => Check::Apply { matrix: ctx.phi, curve: *from, expected: *to },
                Direction::Backward => Check::ApplyInverse { matrix: ctx.phi, curve: *from, expected: *to },
            };
            trace.arith(format!("swing-{i}"), format!("swing the fibre: {from} -> {to}"), check, ledger);
            cur = next;
        }
        if swings != 0 {
            trace.cite("fibration", "swinging the fibre applies the monodromy", facts::FIBRATION, ledger);
        }

        let class = match cur.kind {
            DividingKind::ArcPlusClosed { slope_class, .. } => slope_class,
            _ => unreachable!(),
        };
        if class == CurveClass::new(1, 2)? {
            bypass_to_slope_one(&mut trace, ctx);
            cur = DividingSet::arc_plus_closed(CurveClass::new(1, 1)?, 1);
        }
        if matches!(cur.kind, DividingKind::ArcPlusClosed { slope_class, .. } if slope_class == CurveClass::new(1, 1)?) {
            let target = vertical();
            trace.arith(
                "swing-back",
                "swing backwards: phi^-1 (1,1) = (0,1)",
                Check::ApplyInverse { matrix: ctx.phi, curve: CurveClass::new(1, 1)?, expected: target },
                ledger,
            );
            cur = DividingSet::arc_plus_closed(target, 1);
        }
    }

    let verdict = giroux_ok(&cur, false);
    trace.arith(
        "normal-form",
        format!("{cur} has no contractible component"),
        Check::Giroux { set: cur.clone(), sphere: false, expected: Status::TightCandidate },
        ledger,
    );
    Ok(Normalization { result: cur, verdict, trace })
}

/// The imbalance argument that moves a closed dividing curve parallel to
/// `(1,2)` to one parallel to `(1,1)`. Expected values are frozen; every
/// computation is re-run with `ctx.phi`.
fn bypass_to_slope_one(trace: &mut ProofTrace, ctx: &Context) {
    let ledger = &ctx.ledger;
    let c = |a, b| CurveClass::new(a, b).expect("primitive");
    let (bottom, top, gamma) = (c(1, 2), c(4, 3), c(5, 4));
    trace.arith(
        "imbalance/swing",
        "swinging once gives Σ x [0,1] with top dividing curves phi (1,2) = (4,3)",
        Check::Apply { matrix: ctx.phi, curve: bottom, expected: top },
        ledger,
    );
    trace.arith(
        "imbalance/count-bottom",
        "the (5,4)-annulus boundary meets the two bottom dividing curves 12 times",
        Check::Intersection { c1: gamma, c2: bottom, multiplicity: 2, expected: 12 },
        ledger,
    );
    // the top curve is where the monodromy actually sends the bottom one
    let top_actual = apply(&ctx.phi, bottom).unwrap_or(top);
    trace.arith(
        "imbalance/count-top",
        "and meets the two top dividing curves twice",
        Check::Intersection { c1: gamma, c2: top_actual, multiplicity: 2, expected: 2 },
        ledger,
    );
    let tw = |cls: CurveClass| twist_of(gamma, slope_of(cls), 2);
    match (tw(bottom), tw(top_actual)) {
        (Ok(tw0), Ok(tw1)) => {
            trace.arith(
                "imbalance/twist-bottom",
                format!("twisting along the bottom boundary is {tw0}"),
                Check::Twist {
                    curve: gamma,
                    dividing: slope_of(bottom),
                    count: 2,
                    expected: crate::bypass::TwistValue::integer(-6),
                },
                ledger,
            );
            trace.arith(
                "imbalance/twist-top",
                format!("twisting along the top boundary is {tw1}"),
                Check::Twist {
                    curve: gamma,
                    dividing: slope_of(top_actual),
                    count: 2,
                    expected: crate::bypass::TwistValue::integer(-1),
                },
                ledger,
            );
            trace.arith(
                "imbalance/inequality",
                format!("{tw0} < {tw1} <= 0, so the annulus carries a bypass for the bottom fibre"),
                Check::Imbalance { tw0, tw1, expected: true },
                ledger,
            );
        }
        (a, b) => trace.error(
            "imbalance/twist",
            "twisting along the annulus boundary",
            format!("{:?} {:?}", a.err(), b.err()),
        ),
    }
    trace.cite("imbalance/principle", "Imbalance Principle", facts::IMBALANCE, ledger);
    trace.arith(
        "bypass/ruling",
        "the annulus meets the bottom fibre in a ruling curve of slope 4/5",
        Check::SlopeOf { curve: gamma, expected: Slope::new(4, 5).expect("slope") },
        ledger,
    );
    trace.arith(
        "bypass/dividing",
        "the bottom dividing curves have slope 2",
        Check::SlopeOf { curve: bottom, expected: Slope::integer(2) },
        ledger,
    );
    trace.arith(
        "bypass/attach",
        "attaching the bypass moves the dividing slope from 2 to 1",
        Check::Bypass {
            dividing: Slope::integer(2),
            ruling: Slope::new(4, 5).expect("slope"),
            side: AttachmentSide::Front,
            expected: Slope::integer(1),
        },
        ledger,
    );
    trace.arith(
        "bypass/class",
        "slope 1 is the class (1,1)",
        Check::CurveOfSlope { slope: Slope::integer(1), expected: c(1, 1) },
        ledger,
    );
    trace.cite("bypass/farey", "bypass attachment on a torus", facts::BYPASS_FAREY, ledger);
}

/// Non-crossing perfect matchings of `2n` points on a circle: the Catalan
/// number `C_n`.
pub fn count_chord_diagrams(n: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::NoChords);
    }
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c
            .checked_mul(2 * (2 * k + 1))
            .ok_or(Error::Overflow)?
            / (k + 2);
    }
    Ok(c)
}

/// A non-crossing perfect matching of `2n` points on the boundary of a disc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordDiagram {
    pairs: Vec<(u32, u32)>,
}

impl ChordDiagram {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<ChordDiagram> {
        if pairs.is_empty() {
            return Err(Error::NoChords);
        }
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort();
        let n = pairs.len() as u32;
        let mut seen = vec![false; 2 * n as usize];
        for &(a, b) in &pairs {
            if a == b || b >= 2 * n || seen[a as usize] || seen[b as usize] {
                return Err(Error::Usage(format!("{pairs:?} is not a perfect matching")));
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::Usage(format!("chords ({a},{b}) and ({c},{d}) cross")));
                }
            }
        }
        Ok(ChordDiagram { pairs })
    }

    pub fn chords(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

/// Shape of the dividing curves on the annulus glued to extend the fibre
/// across the added basic slice.
///
/// The fibre side carries the six endpoints of the three initial arcs, in the
/// cyclic order `0..6` with arc `k mod 3` joining `k` and `k + 3`; the other
/// side carries the two endpoints of the meridional dividing curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum AnnulusPattern {
    /// Both outer points run to adjacent inner points; the other four inner
    /// points are joined in the remaining interval, nested or side by side.
    Adjacent { nested: bool },
    /// The outer points run to the two ends of one initial arc.
    Opposite,
    /// The outer points are joined to each other (a boundary-parallel curve
    /// along the new boundary); the inner points are joined among themselves.
    OuterJoined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnnulusForm {
    #[serde(flatten)]
    pub pattern: AnnulusPattern,
    /// Rotation of the pattern in the circle direction, `0..6`.
    pub offset: u8,
    /// Power of the Dehn twist along the core of the annulus.
    pub twist: i64,
}

impl AnnulusForm {
    /// All forms with twists in `twists`.
    pub fn enumerate(twists: impl IntoIterator<Item = i64> + Clone) -> Vec<AnnulusForm> {
        let patterns = [
            AnnulusPattern::Adjacent { nested: false },
            AnnulusPattern::Adjacent { nested: true },
            AnnulusPattern::Opposite,
            AnnulusPattern::OuterJoined,
        ];
        let mut out = Vec::new();
        for pattern in patterns {
            for offset in 0..6 {
                for twist in twists.clone() {
                    out.push(AnnulusForm { pattern, offset, twist });
                }
            }
        }
        out
    }

    /// Annulus arcs as pairs of endpoints; inner points are `0..6`, outer `6, 7`.
    fn annulus_arcs(&self) -> Vec<(u8, u8)> {
        let r = |k: u8| (k + self.offset) % 6;
        match self.pattern {
            AnnulusPattern::Adjacent { nested } => {
                let mut v = vec![(6, r(0)), (7, r(1))];
                if nested {
                    v.extend([(r(2), r(5)), (r(3), r(4))]);
                } else {
                    v.extend([(r(2), r(3)), (r(4), r(5))]);
                }
                v
            }
            AnnulusPattern::Opposite => vec![(6, r(0)), (7, r(3)), (r(1), r(2)), (r(4), r(5))],
            AnnulusPattern::OuterJoined => vec![(6, 7), (r(0), r(1)), (r(2), r(3)), (r(4), r(5))],
        }
    }
}

/// Dividing set on the fibre extended across the glued annulus.
///
/// Components are traced through the annulus arcs and the three initial arcs.
/// A closed component through a single initial arc is parallel to it; one
/// through two initial arcs is disjoint from, hence parallel to, the third.
pub fn extend_by_annulus(initial: &DividingSet, form: &AnnulusForm) -> Result<DividingSet> {
    let DividingKind::ArcSystem { slopes } = &initial.kind else {
        return Err(Error::Inadmissible(initial.to_string()));
    };
    if slopes.len() != 3
        || (0..3).any(|i| intersection(slopes[i], slopes[(i + 1) % 3]) != 1)
    {
        return Err(Error::Inadmissible(format!("{initial} is not three arcs of a Farey triangle")));
    }
    if form.offset >= 6 {
        return Err(Error::BadAnnulusForm(format!("offset {} out of range", form.offset)));
    }
    if form.pattern == AnnulusPattern::OuterJoined {
        return Ok(DividingSet::boundary_parallel(1)?
            .with_holonomy(form.twist)
            .with_contractible(true));
    }
    let mut partner = [0u8; 8];
    for (a, b) in form.annulus_arcs() {
        partner[a as usize] = b;
        partner[b as usize] = a;
    }
    let across = |k: u8| (k + 3) % 6;

    // the component through the two outer points
    let mut used = [false; 3];
    let mut at = partner[6];
    loop {
        used[(at % 3) as usize] = true;
        let other = across(at);
        let next = partner[other as usize];
        if next == 7 {
            break;
        }
        at = next;
    }
    // remaining initial arcs form closed curves
    let mut closed: Vec<Vec<usize>> = Vec::new();
    let mut visited = used;
    for start in 0..3u8 {
        if visited[start as usize] {
            continue;
        }
        let mut arcs = Vec::new();
        let mut at = start;
        loop {
            visited[(at % 3) as usize] = true;
            arcs.push((at % 3) as usize);
            at = partner[across(at) as usize];
            if at == start {
                break;
            }
        }
        closed.push(arcs);
    }
    let result = match closed.as_slice() {
        [] => DividingSet::boundary_parallel(1)?,
        [arcs] => {
            let class = match arcs.as_slice() {
                [single] => slopes[*single],
                [a, b] => slopes[3 - a - b],
                _ => return Err(Error::BadAnnulusForm(format!("{form:?} closes up all three arcs"))),
            };
            DividingSet::arc_plus_closed(class, 1)
        }
        _ => return Err(Error::BadAnnulusForm(format!("{form:?} yields several closed curves"))),
    };
    Ok(result.with_holonomy(form.twist))
}

/// Upper bound on tight structures, up to contactomorphism, with a fibre
/// carrying the normal form `d`: always one, via two compressing discs whose
/// boundaries meet the dividing set twice.
pub fn classification_bound(d: &DividingSet) -> Result<(u32, ProofTrace)> {
    classification_bound_with(d, &Context::standard())
}

pub fn classification_bound_with(d: &DividingSet, ctx: &Context) -> Result<(u32, ProofTrace)> {
    if !d.is_normal_form() {
        return Err(Error::NotNormalized);
    }
    let ledger = &ctx.ledger;
    let mut trace = ProofTrace::new();
    let case = match d.kind {
        DividingKind::ArcPlusClosed { .. } => "arc-plus-closed",
        _ => "boundary-parallel",
    };
    trace.arith(
        "sign-swap",
        "-id commutes with phi, so the signs of the fibre regions can be exchanged",
        Check::Conjugation {
            conjugator: MappingClass::MINUS_IDENTITY,
            matrix: ctx.phi,
            expected: MappingClass::PHI,
        },
        ledger,
    );
    match d.kind {
        DividingKind::ArcPlusClosed { slope_class, .. } => {
            let top = CurveClass::new(1, 1)?;
            trace.arith(
                "top-fibre",
                format!("the far copy of the fibre carries phi {slope_class} = {top}"),
                Check::Apply { matrix: ctx.phi, curve: slope_class, expected: top },
                ledger,
            );
        }
        _ => {
            trace.arith(
                "top-fibre",
                "a boundary-parallel arc is preserved by the monodromy",
                Check::Giroux { set: d.clone(), sphere: false, expected: Status::TightCandidate },
                ledger,
            );
        }
    }
    for disc in ["D1", "D2"] {
        let id = format!("{case}/{disc}");
        match ctx.discs.iter().find(|f| f.id == id) {
            Some(fixture) => trace.arith(
                format!("{disc}-boundary"),
                format!("∂{disc} meets the dividing set {} times, so tb(∂{disc}) = -1 and its dividing set is one arc", fixture.points),
                Check::DiscBoundary {
                    fixture: id.clone(),
                    points: fixture.points,
                    expected_tb: -1,
                    expected_diagrams: 1,
                },
                ledger,
            ),
            None => trace.error(format!("{disc}-boundary"), format!("fixture {id}"), "missing fixture"),
        }
    }
    trace.cite("disc-fixtures", "compressing discs with twice-meeting boundaries", facts::DISC_FIXTURES, ledger);
    trace.arith(
        "disc-unique",
        "a disc whose boundary meets the dividing set twice has a unique dividing set",
        Check::ChordCount { n: 1, expected: 1 },
        ledger,
    );
    trace.cite("disc-giroux", "no closed dividing curves on a tight disc", facts::GIROUX_CRITERION, ledger);
    trace.cite("ball", "the complement of the discs is a ball with a unique tight structure", facts::ELIASHBERG_BALL, ledger);
    Ok((1, trace))
}
