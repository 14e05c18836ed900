//! Legendrian figure-eight knots, the overtwistedness classifier for the
//! glued complements `ξ±(L)`, positive contact surgery, and the end-to-end
//! walkthrough of the argument.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curves::CurveClass;
use crate::error::{Error, Result};
use crate::seifert::{
    classification_bound_with, extend_by_annulus, normalize_with, AnnulusForm, DividingSet,
};
use crate::slices::{make_stack, BasicSlice, Envelope, Sign, SliceStack, Status, Verdict, Witness};
use crate::slopes::{FareyPath, Slope};
use crate::trace::{facts, Check, Context, ProofTrace};

/// Thurston–Bennequin and rotation numbers of a Legendrian figure-eight knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LegendrianFigureEight {
    pub tb: i64,
    pub rot: i64,
}

impl LegendrianFigureEight {
    pub const PEAK: LegendrianFigureEight = LegendrianFigureEight { tb: -3, rot: 0 };

    pub fn new(tb: i64, rot: i64) -> Result<LegendrianFigureEight> {
        let k = LegendrianFigureEight { tb, rot };
        k.validate()?;
        Ok(k)
    }

    /// Checks that `(tb, rot)` is realised: `tb <= -3`, `|rot| <= -tb - 3`,
    /// and `rot` has the parity of `tb + 3`.
    pub fn validate(&self) -> Result<()> {
        if self.tb > -3 {
            return Err(Error::TbAboveMaximum(self.tb));
        }
        let width = (-3i64).checked_sub(self.tb).ok_or(Error::Overflow)?;
        if self.rot.checked_abs().is_none_or(|r| r > width) || (width - self.rot).rem_euclid(2) != 0 {
            return Err(Error::NotFigureEight { tb: self.tb, rot: self.rot });
        }
        Ok(())
    }

    /// Positive stabilisation raises `rot`, negative lowers it; both lower `tb`.
    pub fn stabilise(self, positive: bool) -> LegendrianFigureEight {
        LegendrianFigureEight { tb: self.tb - 1, rot: if positive { self.rot + 1 } else { self.rot - 1 } }
    }

    pub fn mirror(self) -> LegendrianFigureEight {
        LegendrianFigureEight { tb: self.tb, rot: -self.rot }
    }

    /// The knot this one is a stabilisation of, with that stabilisation's sign.
    pub fn destabilise(self, positive: bool) -> Option<LegendrianFigureEight> {
        let up = LegendrianFigureEight { tb: self.tb + 1, rot: if positive { self.rot - 1 } else { self.rot + 1 } };
        up.validate().ok().map(|_| up)
    }
}

impl fmt::Display for LegendrianFigureEight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(tb {}, rot {})", self.tb, self.rot)
    }
}

/// Rotation numbers realised at `tb`.
pub fn mountain_range(tb: i64) -> Result<BTreeSet<i64>> {
    if tb > -3 {
        return Err(Error::TbAboveMaximum(tb));
    }
    let width = (-3i64).checked_sub(tb).ok_or(Error::Overflow)?;
    Ok((0..=width).map(|i| 2 * i - width).collect())
}

fn sign_positive(sign: Sign) -> bool {
    sign == Sign::Positive
}

/// Which part of the argument decides `ξ^sign(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum XiCase {
    /// `sign = +`, `tb - rot = -3`, `tb < -3`.
    One,
    /// `sign = -`, `tb + rot = -3`, `tb < -3`.
    Two,
    /// `tb ± rot < -3` for the matching sign.
    Three,
    /// Iterated stabilisations of the sign of the glued slice, reduced to the peak.
    Reduction,
    /// The peak `(-3, 0)` itself.
    Peak,
}

impl XiCase {
    pub fn of(knot: LegendrianFigureEight, sign: Sign) -> Result<XiCase> {
        knot.validate()?;
        let (tb, rot) = (knot.tb, knot.rot);
        // ξ^- is spoiled by a positive stabilisation and ξ^+ by a negative one
        let opposite = match sign {
            Sign::Negative => tb - rot < -3,
            Sign::Positive => tb + rot < -3,
        };
        Ok(if opposite {
            match sign {
                Sign::Positive if tb - rot == -3 => XiCase::One,
                Sign::Negative if tb + rot == -3 => XiCase::Two,
                _ => XiCase::Three,
            }
        } else if tb == -3 {
            XiCase::Peak
        } else {
            XiCase::Reduction
        })
    }
}

pub fn classify_xi(knot: LegendrianFigureEight, sign: Sign) -> Result<(Verdict, ProofTrace)> {
    classify_xi_with(knot, sign, &Context::standard())
}

/// Decides `ξ^sign(L)` on the complement of the figure-eight knot.
///
/// Knots that are stabilisations of the sign opposite to the glued slice give
/// a mixed-sign stack inside one basic slice. Iterated stabilisations of the
/// same sign reduce to the peak, whose complement is handled by the vanishing
/// of the knot invariant against the two tight models.
pub fn classify_xi_with(knot: LegendrianFigureEight, sign: Sign, ctx: &Context) -> Result<(Verdict, ProofTrace)> {
    let case = XiCase::of(knot, sign)?;
    let ledger = &ctx.ledger;
    let mut trace = ProofTrace::new();
    let s = sign.symbol();
    trace.cite("xi/simple", format!("{knot} is determined by its invariants"), facts::LEGENDRIAN_SIMPLE, ledger);
    if sign == Sign::Positive {
        trace.cite(
            "xi/mirror",
            format!("xi^+ of {knot} is xi^- of its mirror {}", knot.mirror()),
            facts::AMPHICHIRAL,
            ledger,
        );
    }
    let verdict = match case {
        XiCase::One | XiCase::Two | XiCase::Three => {
            let stab = sign.flip();
            let parent = knot
                .destabilise(sign_positive(stab))
                .ok_or(Error::NotFigureEight { tb: knot.tb + 1, rot: knot.rot })?;
            trace.arith(
                "xi/destabilise",
                format!("{knot} is the {} stabilisation of {parent}", if sign_positive(stab) { "positive" } else { "negative" }),
                Check::Stabilisation { from: parent, positive: sign_positive(stab), to: knot },
                ledger,
            );
            trace.cite("xi/stabilisation-slice", "stabilising glues a basic slice of the same sign", facts::STABILISATION_SLICE, ledger);
            let path = FareyPath::new(vec![
                Slope::integer(parent.tb),
                Slope::integer(knot.tb),
                Slope::INFINITY,
            ])?;
            let stack = make_stack(&path, &[stab, sign])?;
            let outer = Envelope { s0: Slope::integer(parent.tb), s1: Slope::INFINITY, sign: None };
            trace.arith(
                "xi/mixed",
                format!("{stack} spans the single edge {} -> inf with both signs", parent.tb),
                Check::Refinement { outer, stack: stack.clone(), expected: Status::Overtwisted },
                ledger,
            );
            trace.cite("xi/slice-signs", "basic slices of opposite sign form an overtwisted layer", facts::SLICE_CLASSIFICATION, ledger);
            trace.cite("xi/embedding", "an overtwisted submanifold makes the whole structure overtwisted", facts::SUBMANIFOLD_OVERTWISTED, ledger);
            let label = match case {
                XiCase::One => "case 1",
                XiCase::Two => "case 2",
                _ => "case 3",
            };
            Verdict::overtwisted(
                format!("xi^{s} of {knot} is overtwisted ({label}): mixed-sign slices inside {} -> inf", parent.tb),
                Witness::MixedSigns { span: (outer.s0, outer.s1), stack, first: 0, second: 1 },
            )
        }
        XiCase::Reduction => {
            reduction_steps(&mut trace, knot, sign, ctx)?;
            trace.append_prefixed("peak", peak_argument(ctx));
            Verdict::overtwisted(
                format!("xi^{s} of {knot} equals xi^{s} of the peak, which is overtwisted"),
                Witness::Cited { facts: peak_facts() },
            )
        }
        XiCase::Peak => {
            trace.append_prefixed("peak", peak_argument(ctx));
            Verdict::overtwisted(
                format!("xi^{s} of {knot} has vanishing contact class but would be one of two models with nonvanishing class"),
                Witness::Cited { facts: peak_facts() },
            )
        }
    };
    Ok((verdict, trace))
}

fn peak_facts() -> Vec<String> {
    [facts::INVARIANT_VANISHES, facts::SV_IDENTIFICATION, facts::BYP_EH_NONZERO, facts::XI0_STEIN, facts::EH_TO_C]
        .map(String::from)
        .to_vec()
}

/// The stack `-3 -> -4 -> ... -> tb -> inf` of one sign refines the single
/// slice `-3 -> inf`, so `ξ(L_tb) = ξ(L_-3)`.
fn reduction_steps(trace: &mut ProofTrace, knot: LegendrianFigureEight, sign: Sign, ctx: &Context) -> Result<()> {
    let ledger = &ctx.ledger;
    let positive = sign_positive(sign);
    let mut cur = LegendrianFigureEight::PEAK;
    let mut i = 0;
    while cur.tb > knot.tb {
        let next = cur.stabilise(positive);
        trace.arith(
            format!("reduce/stabilise-{i}"),
            format!("{next} is a stabilisation of {cur} of sign {}", sign.symbol()),
            Check::Stabilisation { from: cur, positive, to: next },
            ledger,
        );
        cur = next;
        i += 1;
    }
    let stack = uniform_reduction_stack(knot.tb, sign)?;
    let outer = Envelope { s0: Slope::integer(-3), s1: Slope::INFINITY, sign: Some(sign) };
    trace.arith(
        "reduce/uniform",
        format!("{stack} refines the single slice -3 -> inf of sign {}", sign.symbol()),
        Check::Refinement { outer, stack, expected: Status::TightCandidate },
        ledger,
    );
    trace.cite("reduce/stabilisation-slice", "each stabilisation is a slice of the same sign", facts::STABILISATION_SLICE, ledger);
    Ok(())
}

/// `-3 -> -4 -> ... -> t -> inf`, all slices of sign `sign`.
pub fn uniform_reduction_stack(t: i64, sign: Sign) -> Result<SliceStack> {
    if t > -3 {
        return Err(Error::TbAboveMaximum(t));
    }
    let mut slopes: Vec<Slope> = (t..=-3).rev().map(Slope::integer).collect();
    slopes.push(Slope::INFINITY);
    let path = FareyPath::new(slopes)?;
    make_stack(&path, &vec![sign; path.len()])
}

/// The argument for the peak: the invariant vanishes, while a tight structure
/// would be one of the two models with nonvanishing class.
fn peak_argument(ctx: &Context) -> ProofTrace {
    let ledger = &ctx.ledger;
    let mut t = ProofTrace::new();
    t.cite("invariant-vanishes", "the Legendrian invariant of every figure-eight knot vanishes", facts::INVARIANT_VANISHES, ledger);
    t.cite("eh-vanishes", "so the contact class EH(xi^-(L)) vanishes", facts::SV_IDENTIFICATION, ledger);
    t.cite("tight-normal-forms", "if tight, the fibre normalises and the structure is one of two models", facts::FIBRATION, ledger);
    t.arith(
        "model-count",
        "one model per normal form: 1 + 1 = 2",
        Check::Sum { terms: vec![1, 1], expected: 2 },
        ledger,
    );
    t.cite("xi-byp-nonzero", "EH(xi_byp) is nonzero", facts::BYP_EH_NONZERO, ledger);
    t.cite("xi0-nonzero", "EH(xi_0) is nonzero", facts::XI0_STEIN, ledger);
    t.cite("contradiction", "a vanishing class cannot equal a nonvanishing one", facts::NONVANISHING_TIGHT, ledger);
    t
}

/// Positive rational surgery coefficient, measured against the contact framing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Coefficient {
    num: i64,
    den: i64,
}

impl Coefficient {
    pub fn new(num: i64, den: i64) -> Result<Coefficient> {
        if den == 0 {
            return Err(Error::NonPositiveCoefficient(format!("{num}/{den}")));
        }
        let g = crate::slopes::gcd(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        if num <= 0 {
            return Err(Error::NonPositiveCoefficient(Coefficient { num, den }.to_string()));
        }
        Ok(Coefficient { num, den })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// The same surgery measured against the Seifert framing: `tb + r`.
    pub fn topological(&self, tb: i64) -> (i64, i64) {
        let num = tb * self.den + self.num;
        let g = crate::slopes::gcd(num, self.den).max(1);
        (num / g, self.den / g)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coefficient> {
        let bad = || Error::Usage(format!("malformed coefficient '{s}'"));
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => (t.parse().map_err(|_| bad())?, 1),
        };
        Coefficient::new(n, d)
    }
}

impl TryFrom<String> for Coefficient {
    type Error = Error;

    fn try_from(s: String) -> Result<Coefficient> {
        s.parse()
    }
}

impl From<Coefficient> for String {
    fn from(c: Coefficient) -> String {
        c.to_string()
    }
}

pub fn classify_surgery(knot: LegendrianFigureEight, coefficient: Coefficient) -> Result<(Verdict, ProofTrace)> {
    classify_surgery_with(knot, coefficient, &Context::standard())
}

/// Positive contact `r`-surgery on a Legendrian figure-eight knot.
///
/// The surgered manifold contains `ξ^-(L)` or `ξ^+(L)`; both are overtwisted.
pub fn classify_surgery_with(
    knot: LegendrianFigureEight,
    coefficient: Coefficient,
    ctx: &Context,
) -> Result<(Verdict, ProofTrace)> {
    knot.validate()?;
    if coefficient.num <= 0 || coefficient.den <= 0 {
        return Err(Error::NonPositiveCoefficient(coefficient.to_string()));
    }
    let ledger = &ctx.ledger;
    let mut trace = ProofTrace::new();
    let (tn, td) = coefficient.topological(knot.tb);
    let topo = if td == 1 { tn.to_string() } else { format!("{tn}/{td}") };
    trace.cite(
        "surgery/embedding",
        format!("contact ({coefficient})-surgery on {knot} (topological {topo}) contains xi^- or xi^+ of the complement"),
        facts::SURGERY_EMBEDDING,
        ledger,
    );
    for sign in [Sign::Negative, Sign::Positive] {
        let (v, t) = classify_xi_with(knot, sign, ctx)?;
        let tag = if sign == Sign::Negative { "xi-minus" } else { "xi-plus" };
        trace.append_prefixed(tag, t);
        if !v.is_overtwisted() {
            return Ok((v, trace));
        }
    }
    if knot.tb < -3 {
        // the same-sign reduction of a stabilised knot to the peak
        for sign in [Sign::Negative, Sign::Positive] {
            let stack = uniform_reduction_stack(knot.tb, sign)?;
            trace.arith(
                format!("surgery/reduce-{}", if sign == Sign::Negative { "minus" } else { "plus" }),
                format!("for all t <= -3 the stack {stack} refines -3 -> inf"),
                Check::Refinement {
                    outer: Envelope { s0: Slope::integer(-3), s1: Slope::INFINITY, sign: Some(sign) },
                    stack,
                    expected: Status::TightCandidate,
                },
                ledger,
            );
        }
    }
    trace.cite("surgery/submanifold", "a manifold containing an overtwisted piece is overtwisted", facts::SUBMANIFOLD_OVERTWISTED, ledger);
    trace.cite("surgery/negative-context", "negative surgeries are a different story", facts::WAND, ledger);
    let verdict = Verdict::overtwisted(
        format!("contact ({coefficient})-surgery on {knot} contains overtwisted xi^- and xi^+"),
        Witness::Cited { facts: vec![facts::SURGERY_EMBEDDING.into(), facts::SUBMANIFOLD_OVERTWISTED.into()] },
    );
    Ok((verdict, trace))
}

pub fn walkthrough() -> ProofTrace {
    walkthrough_with(&Context::standard())
}

/// Replays the whole argument with every arithmetic claim re-checked against
/// the stored constants in `ctx`. Never panics: a broken computation shows up
/// as a failed step.
pub fn walkthrough_with(ctx: &Context) -> ProofTrace {
    let ledger = &ctx.ledger;
    let mut trace = ProofTrace::new();
    let c = |a, b| CurveClass::new(a, b).expect("primitive");

    // (a) a knot that is a positive stabilisation: mixed signs in xi^-
    for (tb, rot, sign) in [(-4, 1, Sign::Negative), (-4, -1, Sign::Positive), (-5, 0, Sign::Negative)] {
        let id = format!("a/{tb},{rot},{}", sign.symbol());
        match LegendrianFigureEight::new(tb, rot).and_then(|k| classify_xi_with(k, sign, ctx)) {
            Ok((v, t)) => {
                trace.append_prefixed(&id, t);
                if !v.is_overtwisted() {
                    trace.error(id, "mixed-sign verdict", v.reason);
                }
            }
            Err(e) => trace.error(id, "mixed-sign argument", e.to_string()),
        }
    }

    // (b) L_t reduces to the peak
    for t in -8..=-3i64 {
        for sign in [Sign::Negative, Sign::Positive] {
            let id = format!("b/t={t},{}", sign.symbol());
            match uniform_reduction_stack(t, sign) {
                Ok(stack) => trace.arith(
                    id,
                    format!("{stack} refines -3 -> inf with one sign"),
                    Check::Refinement {
                        outer: Envelope { s0: Slope::integer(-3), s1: Slope::INFINITY, sign: Some(sign) },
                        stack,
                        expected: Status::TightCandidate,
                    },
                    ledger,
                ),
                Err(e) => trace.error(id, "reduction stack", e.to_string()),
            }
        }
    }
    trace.cite("b/amphichiral", "xi^- and xi^+ of the peak are contactomorphic", facts::AMPHICHIRAL, ledger);

    // (c) normalising the Seifert surface
    let initial = DividingSet::initial_three_arcs();
    trace.arith(
        "c/initial-points",
        "three arcs meet the boundary 6 times, so tb = -3",
        Check::Twist {
            curve: c(1, 0),
            dividing: Slope::integer(-3),
            count: 2,
            expected: crate::bypass::TwistValue::integer(-3),
        },
        ledger,
    );
    trace.cite("c/initial-arcs", "the initial convex fibre carries three arcs", facts::INITIAL_ARCS, ledger);
    trace.cite("c/realise-annulus", "the annulus boundary is realised as Legendrian curves", facts::LRP, ledger);
    trace.cite("c/twists", "Dehn twists along the annulus core only add holonomy, which can be removed", facts::HOLONOMY_REMOVAL, ledger);
    let mut outcomes: Vec<DividingSet> = Vec::new();
    for form in AnnulusForm::enumerate(-1..=1) {
        let id = format!("c/annulus/{:?}/{}/{}", form.pattern, form.offset, form.twist).to_lowercase().replace(' ', "");
        match extend_by_annulus(&initial, &form) {
            Ok(d) => {
                trace.arith(
                    id,
                    format!("the annulus extends the fibre to {d}"),
                    Check::AnnulusExtension { initial: initial.clone(), form, expected: d.clone() },
                    ledger,
                );
                if !outcomes.contains(&d) {
                    outcomes.push(d);
                }
            }
            Err(e) => trace.error(id, "annulus extension", e.to_string()),
        }
    }
    for (i, d) in outcomes.iter().enumerate() {
        let id = format!("c/normalize-{i}");
        match normalize_with(d, ctx) {
            Ok(n) => {
                if d.has_contractible() {
                    trace.append_prefixed(&id, n.trace);
                    continue;
                }
                let expected = if matches!(d.kind(), crate::seifert::DividingKind::BoundaryParallel { .. }) {
                    DividingSet::boundary_parallel(1).expect("one arc")
                } else {
                    DividingSet::arc_plus_closed(c(0, 1), 1)
                };
                trace.arith(
                    id.clone(),
                    format!("{d} normalises to {expected}"),
                    Check::Normalizes { phi: ctx.phi, input: d.clone(), expected: expected.clone() },
                    ledger,
                );
                if d.holonomy() == 0 && matches!(d.kind(), crate::seifert::DividingKind::ArcPlusClosed { slope_class, .. } if *slope_class == c(1, 2)) {
                    trace.append_prefixed(&id, n.trace);
                }
            }
            Err(e) => trace.error(id, format!("normalise {d}"), e.to_string()),
        }
    }

    // (d) at most one tight structure per normal form
    let mut bounds = Vec::new();
    for (tag, d) in [
        ("arc-plus-closed", DividingSet::arc_plus_closed(c(0, 1), 1)),
        ("boundary-parallel", DividingSet::boundary_parallel(1).expect("one arc")),
    ] {
        match classification_bound_with(&d, ctx) {
            Ok((n, t)) => {
                trace.append_prefixed(&format!("d/{tag}"), t);
                bounds.push(n as u64);
            }
            Err(e) => trace.error(format!("d/{tag}"), "classification bound", e.to_string()),
        }
    }
    trace.arith(
        "d/total",
        "at most two tight structures in total",
        Check::Sum { terms: bounds, expected: 2 },
        ledger,
    );

    // (e) the two models
    trace.cite("e/xi-byp-page", "xi_byp: the fibre is a page with one boundary-parallel dividing arc", facts::BYP_PAGE, ledger);
    trace.cite("e/xi-byp-eh", "EH(xi_byp) is nonzero", facts::BYP_EH_NONZERO, ledger);
    trace.arith(
        "e/xi0-edge",
        "-2 and inf are joined by an edge, so the slice is basic",
        Check::HasEdge { a: Slope::integer(-2), b: Slope::INFINITY, expected: true },
        ledger,
    );
    trace.arith(
        "e/xi0-gluing",
        "phi (1,-2) = (0,1): the gluing sends slope -2 to inf",
        Check::Apply { matrix: ctx.phi, curve: c(1, -2), expected: c(0, 1) },
        ledger,
    );
    trace.cite("e/xi0-fibre", "xi_0: a Legendrian fibre with the product framing", facts::XI0_FIBRE, ledger);
    trace.cite("e/xi0-stein", "EH(xi_0) is nonzero", facts::XI0_STEIN, ledger);
    trace.cite("e/eh-to-c", "EH maps to the contact class of the closed manifold", facts::EH_TO_C, ledger);

    // (f) conclusion
    trace.append_prefixed("f", peak_argument(ctx));
    match classify_surgery_with(LegendrianFigureEight::PEAK, Coefficient { num: 1, den: 1 }, ctx) {
        Ok((v, t)) => {
            trace.append_prefixed("f/surgery", t);
            if !v.is_overtwisted() {
                trace.error("f/theorem", "positive surgeries are overtwisted", v.reason);
            }
        }
        Err(e) => trace.error("f/theorem", "positive surgeries are overtwisted", e.to_string()),
    }
    trace.cite("f/remark-tight", "the surgered manifolds still carry tight structures", facts::REMARK_TIGHT_EXISTS, ledger);
    trace.cite("f/remark-models", "xi_byp and xi_0 are different", facts::REMARK_BYP_NOT_XI0, ledger);
    trace
}

/// Stabilisation-move BFS from the peak; an oracle for [`mountain_range`].
pub fn mountain_range_bfs(min_tb: i64) -> BTreeSet<LegendrianFigureEight> {
    let mut seen = BTreeSet::from([LegendrianFigureEight::PEAK]);
    let mut frontier = vec![LegendrianFigureEight::PEAK];
    while let Some(k) = frontier.pop() {
        if k.tb <= min_tb {
            continue;
        }
        for positive in [true, false] {
            let next = k.stabilise(positive);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// A slice pair certifying case 1/2/3, if any; used by the CLI.
pub fn mixed_pair(knot: LegendrianFigureEight, sign: Sign) -> Option<(BasicSlice, BasicSlice)> {
    match XiCase::of(knot, sign).ok()? {
        XiCase::One | XiCase::Two | XiCase::Three => {
            let a = BasicSlice::new(Slope::integer(knot.tb + 1), Slope::integer(knot.tb), sign.flip()).ok()?;
            let b = BasicSlice::new(Slope::integer(knot.tb), Slope::INFINITY, sign).ok()?;
            Some((a, b))
        }
        _ => None,
    }
}
