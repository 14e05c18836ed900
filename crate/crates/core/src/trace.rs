//! Self-checking proof traces.
//!
//! A trace is an ordered list of claims. Arithmetic claims carry a [`Check`]
//! that re-executes the computation against a frozen expected value; the
//! remaining claims cite exactly one entry of the [`Ledger`] of facts taken
//! from the literature. A trace is sound iff no step failed.

use serde::{Deserialize, Serialize};

use crate::bypass::{bypass_attach, imbalance_bypass_exists, twist_of, AttachmentSide, TwistValue};
use crate::curves::{apply, curve_of_slope, intersection, invert, slope_of, CurveClass, MappingClass};
use crate::seifert::{
    count_chord_diagrams, extend_by_annulus, giroux_ok, normalize_with, AnnulusForm, DividingSet,
};
use crate::slices::{refinement_verdict, Envelope, SliceStack, Status};
use crate::slopes::{has_edge, Slope};
use crate::verdict::LegendrianFigureEight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedFact {
    pub id: String,
    pub statement: String,
    pub source: String,
}

/// Immutable collection of cited facts, looked up by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    facts: Vec<CitedFact>,
}

impl Ledger {
    pub fn new(facts: Vec<CitedFact>) -> Ledger {
        Ledger { facts }
    }

    pub fn get(&self, id: &str) -> Option<&CitedFact> {
        self.facts.iter().find(|f| f.id == id)
    }

    pub fn facts(&self) -> &[CitedFact] {
        &self.facts
    }

    pub fn facts_mut(&mut self) -> &mut Vec<CitedFact> {
        &mut self.facts
    }

    pub fn standard() -> Ledger {
        let f = |id: &str, statement: &str, source: &str| CitedFact {
            id: id.into(),
            statement: statement.into(),
            source: source.into(),
        };
        Ledger::new(vec![
            f(
                facts::LEGENDRIAN_SIMPLE,
                "Legendrian figure-eight knots in (S^3, xi_std) are determined up to isotopy by (tb, rot); \
                 tb <= -3 and every knot destabilises to the unique knot with (tb, rot) = (-3, 0).",
                "Etnyre-Honda, Knots and contact geometry I: torus knots and the figure eight knot",
            ),
            f(
                facts::SLICE_CLASSIFICATION,
                "A T^2 x I whose boundary slopes span a Farey edge carries exactly two tight structures up to \
                 isotopy; when it is cut into two basic slices, both pieces carry the sign of the whole.",
                "Honda, On the classification of tight contact structures I",
            ),
            f(
                facts::STABILISATION_SLICE,
                "Gluing a basic slice of sign e to the complement of a standard neighbourhood of L gives the \
                 complement of the stabilisation of L of sign e.",
                "Honda, On the classification of tight contact structures I; Etnyre-Honda",
            ),
            f(
                facts::SUBMANIFOLD_OVERTWISTED,
                "A contact manifold containing an overtwisted contact submanifold is overtwisted.",
                "definition of overtwistedness",
            ),
            f(
                facts::AMPHICHIRAL,
                "The figure-eight knot is amphichiral; xi^-(L) is contactomorphic to xi^+(mirror L) and \
                 rot(mirror L) = -rot(L).",
                "standard; Legendrian mirror construction",
            ),
            f(
                facts::SURGERY_EMBEDDING,
                "Every positive contact surgery on L contains (S^3 \\ N(K), xi^-(L)) or (S^3 \\ N(K), xi^+(L)) \
                 as a contact submanifold: it is built by gluing a basic slice to the knot complement and then \
                 a tight solid torus.",
                "Ding-Geiges; Honda, On the classification of tight contact structures I; Kanda",
            ),
            f(
                facts::INVARIANT_VANISHES,
                "The LOSS invariant of every Legendrian figure-eight knot vanishes: the knot Floer group is \
                 trivial in the relevant grading.",
                "Lisca-Ozsvath-Stipsicz-Szabo; Baldwin-Vela-Vick-Vertesi; Ozsvath-Szabo-Thurston",
            ),
            f(
                facts::SV_IDENTIFICATION,
                "The LOSS invariant of L is identified with EH(xi^-(L)) on the complement with meridional sutures.",
                "Stipsicz-Vertesi, On invariants for Legendrian knots",
            ),
            f(
                facts::EH_TO_C,
                "A contact embedding of a manifold with convex boundary into a closed contact manifold induces \
                 a map on Floer homology sending EH to the contact class c.",
                "Honda-Kazez-Matic, The contact invariant in sutured Floer homology",
            ),
            f(
                facts::NONVANISHING_TIGHT,
                "A contact manifold with non-vanishing Heegaard Floer contact class (c or EH) is tight.",
                "Ozsvath-Szabo, Heegaard Floer homology and contact structures; Honda-Kazez-Matic",
            ),
            f(
                facts::INITIAL_ARCS,
                "In the complement of N(L) for tb(L) = -3 there is a convex Seifert surface whose dividing set \
                 is three arcs parallel to (0,1), (1,1) and (1,2).",
                "Etnyre-Honda, Knots and contact geometry I",
            ),
            f(
                facts::HOLONOMY_REMOVAL,
                "Boundary twisting (holonomy) of the dividing curves along the glued annulus can be removed \
                 by isotopy without changing the other dividing data.",
                "Honda, On the classification of tight contact structures I, proof of Proposition 4.7",
            ),
            f(
                facts::GIROUX_CRITERION,
                "A vertically invariant neighbourhood of a convex surface other than S^2 is tight iff its \
                 dividing set has no contractible component; for S^2 iff the dividing set is connected.",
                "Giroux, Convexite en topologie de contact",
            ),
            f(
                facts::LRP,
                "A non-isolating closed curve on a convex surface can be Legendrian realised, with twisting \
                 -|G ∩ Γ|/2 relative to the surface framing.",
                "Honda, On the classification of tight contact structures I; Kanda",
            ),
            f(
                facts::IMBALANCE,
                "If tw(S^1 x 0, A) < tw(S^1 x 1, A) <= 0 for a convex annulus A with Legendrian boundary, \
                 A contains a bypass for the surface meeting S^1 x 0.",
                "Honda, On the classification of tight contact structures I",
            ),
            f(
                facts::BYPASS_FAREY,
                "A bypass attached along a ruling curve of slope r to a torus with two dividing curves of \
                 slope s produces slope s', the Farey neighbour of s nearest r in the arc from r to s.",
                "Honda, On the classification of tight contact structures I",
            ),
            f(
                facts::FIBRATION,
                "The figure-eight complement fibres over S^1 with once-punctured torus fibre and monodromy \
                 [[2,1],[1,1]] up to boundary twisting; swinging the fibre around applies the monodromy to \
                 its dividing curves.",
                "standard (figure-eight knot is the fibred knot with Anosov monodromy)",
            ),
            f(
                facts::ELIASHBERG_BALL,
                "A tight contact structure on B^3 with fixed convex boundary is unique up to isotopy.",
                "Eliashberg, Contact 3-manifolds twenty years since J. Martinet's work",
            ),
            f(
                facts::DISC_FIXTURES,
                "The compressing discs D1, D2 of the genus-two handlebody complement of N(Σ) are chosen so that \
                 each boundary meets the rounded dividing set exactly twice, in both normal forms.",
                "read off the compressing-disc diagrams of the classification argument",
            ),
            f(
                facts::BYP_EH_NONZERO,
                "Gluing a negative basic slice to the complement of a Legendrian approximation of the binding \
                 of the figure-eight open book gives xi_byp with EH(xi_byp) = LOSS != 0.",
                "Etnyre-Vela-Vick-Van Horn-Morris, Legendrian and transverse twist knots (open books and torsion)",
            ),
            f(
                facts::BYP_PAGE,
                "In xi_byp a page of the open book is a convex Seifert surface whose dividing set is one \
                 boundary-parallel arc.",
                "Etnyre-Vela-Vick-Van Horn-Morris",
            ),
            f(
                facts::XI0_STEIN,
                "The torsion-free tight structure xi_0 on the torus bundle with monodromy phi is Stein fillable, \
                 so c(xi_0) != 0.",
                "Van Horn-Morris, thesis; Ozsvath-Szabo, contact class of Stein fillable structures",
            ),
            f(
                facts::XI0_FIBRE,
                "A regular fibre of xi_0 is Legendrian with product framing; its complement is the figure-eight \
                 complement with meridional dividing curves, and a fibre surface has one arc and one closed \
                 curve parallel to (0,1).",
                "Honda, On the classification of tight contact structures II, Table 2",
            ),
            f(
                facts::REMARK_TIGHT_EXISTS,
                "Informational: the surgered manifolds do carry tight contact structures; they do not arise \
                 by positive contact surgery on a Legendrian figure-eight.",
                "informational remark",
            ),
            f(
                facts::REMARK_BYP_NOT_XI0,
                "Informational: xi_byp is not contactomorphic to xi_0 restricted to the complement, since \
                 positive contact surgeries on the binding approximation are overtwisted.",
                "Wand, Tightness is preserved by Legendrian surgery",
            ),
            f(
                facts::WAND,
                "Context: Legendrian (negative contact) surgery preserves tightness.",
                "Wand, Tightness is preserved by Legendrian surgery",
            ),
        ])
    }
}

/// Stable identifiers of cited facts.
pub mod facts {
    pub const LEGENDRIAN_SIMPLE: &str = "legendrian-simple";
    pub const SLICE_CLASSIFICATION: &str = "basic-slice-signs";
    pub const STABILISATION_SLICE: &str = "stabilisation-slice";
    pub const SUBMANIFOLD_OVERTWISTED: &str = "submanifold-overtwisted";
    pub const AMPHICHIRAL: &str = "amphichiral-mirror";
    pub const SURGERY_EMBEDDING: &str = "surgery-contains-complement";
    pub const INVARIANT_VANISHES: &str = "loss-vanishes";
    pub const SV_IDENTIFICATION: &str = "loss-equals-eh";
    pub const EH_TO_C: &str = "eh-maps-to-c";
    pub const NONVANISHING_TIGHT: &str = "nonvanishing-implies-tight";
    pub const INITIAL_ARCS: &str = "initial-three-arcs";
    pub const HOLONOMY_REMOVAL: &str = "holonomy-removal";
    pub const GIROUX_CRITERION: &str = "giroux-criterion";
    pub const LRP: &str = "legendrian-realisation";
    pub const IMBALANCE: &str = "imbalance-principle";
    pub const BYPASS_FAREY: &str = "bypass-farey";
    pub const FIBRATION: &str = "fibration-monodromy";
    pub const ELIASHBERG_BALL: &str = "tight-ball-unique";
    pub const DISC_FIXTURES: &str = "compressing-disc-fixtures";
    pub const BYP_EH_NONZERO: &str = "eh-xi-byp-nonzero";
    pub const BYP_PAGE: &str = "xi-byp-page";
    pub const XI0_STEIN: &str = "xi0-stein-fillable";
    pub const XI0_FIBRE: &str = "xi0-fibre";
    pub const REMARK_TIGHT_EXISTS: &str = "remark-tight-structures-exist";
    pub const REMARK_BYP_NOT_XI0: &str = "remark-byp-not-xi0";
    pub const WAND: &str = "wand-legendrian-surgery";
}

/// Intersection count of one compressing-disc boundary with the dividing set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscFixture {
    pub id: String,
    pub points: u64,
}

/// Every stored constant the walkthrough depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub phi: MappingClass,
    pub ledger: Ledger,
    pub discs: Vec<DiscFixture>,
}

impl Context {
    pub fn standard() -> Context {
        let disc = |id: &str| DiscFixture { id: id.into(), points: 2 };
        Context {
            phi: MappingClass::PHI,
            ledger: Ledger::standard(),
            discs: vec![
                disc("arc-plus-closed/D1"),
                disc("arc-plus-closed/D2"),
                disc("boundary-parallel/D1"),
                disc("boundary-parallel/D2"),
            ],
        }
    }
}

impl Default for Context {
    fn default() -> Context {
        Context::standard()
    }
}

/// A re-executable computation with its frozen expected outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Check {
    HasEdge { a: Slope, b: Slope, expected: bool },
    /// `multiplicity * intersection(c1, c2)`.
    Intersection { c1: CurveClass, c2: CurveClass, multiplicity: u64, expected: u64 },
    Apply { matrix: MappingClass, curve: CurveClass, expected: CurveClass },
    ApplyInverse { matrix: MappingClass, curve: CurveClass, expected: CurveClass },
    /// `conjugator * matrix * conjugator^-1 = expected`.
    Conjugation { conjugator: MappingClass, matrix: MappingClass, expected: MappingClass },
    SlopeOf { curve: CurveClass, expected: Slope },
    CurveOfSlope { slope: Slope, expected: CurveClass },
    Twist { curve: CurveClass, dividing: Slope, count: u64, expected: TwistValue },
    Imbalance { tw0: TwistValue, tw1: TwistValue, expected: bool },
    Bypass { dividing: Slope, ruling: Slope, side: AttachmentSide, expected: Slope },
    Refinement { outer: Envelope, stack: SliceStack, expected: Status },
    ChordCount { n: u32, expected: u64 },
    /// A disc boundary meeting the dividing set `points` times has
    /// `tb = -points/2` and a unique tight dividing set.
    DiscBoundary { fixture: String, points: u64, expected_tb: i64, expected_diagrams: u64 },
    Giroux { set: DividingSet, sphere: bool, expected: Status },
    /// `to` is the stabilisation of `from` of the given sign and both are realised.
    Stabilisation { from: LegendrianFigureEight, positive: bool, to: LegendrianFigureEight },
    AnnulusExtension { initial: DividingSet, form: AnnulusForm, expected: DividingSet },
    Normalizes { phi: MappingClass, input: DividingSet, expected: DividingSet },
    Sum { terms: Vec<u64>, expected: u64 },
    Cited { fact: String },
    /// A computation that could not be carried out.
    Error { message: String },
}

impl Check {
    /// Re-executes the computation; `true` iff it reproduces the expected value.
    pub fn holds(&self, ledger: &Ledger) -> bool {
        match self {
            Check::HasEdge { a, b, expected } => has_edge(*a, *b) == *expected,
            Check::Intersection { c1, c2, multiplicity, expected } => {
                multiplicity.checked_mul(intersection(*c1, *c2)) == Some(*expected)
            }
            Check::Apply { matrix, curve, expected } => {
                apply(matrix, *curve).ok() == Some(*expected)
            }
            Check::ApplyInverse { matrix, curve, expected } => invert(matrix)
                .and_then(|inv| apply(&inv, *curve))
                .ok()
                == Some(*expected),
            Check::Conjugation { conjugator, matrix, expected } => invert(conjugator)
                .map(|inv| conjugator.compose(matrix).compose(&inv) == *expected)
                .unwrap_or(false),
            Check::SlopeOf { curve, expected } => slope_of(*curve) == *expected,
            Check::CurveOfSlope { slope, expected } => curve_of_slope(*slope) == *expected,
            Check::Twist { curve, dividing, count, expected } => {
                twist_of(*curve, *dividing, *count).ok() == Some(*expected)
            }
            Check::Imbalance { tw0, tw1, expected } => imbalance_bypass_exists(*tw0, *tw1) == *expected,
            Check::Bypass { dividing, ruling, side, expected } => {
                bypass_attach(*dividing, *ruling, *side).ok() == Some(*expected)
            }
            Check::Refinement { outer, stack, expected } => {
                refinement_verdict(outer, stack).map(|v| v.status).ok() == Some(*expected)
            }
            Check::ChordCount { n, expected } => count_chord_diagrams(*n).ok() == Some(u128::from(*expected)),
            Check::DiscBoundary { points, expected_tb, expected_diagrams, .. } => {
                if points % 2 != 0 || *points == 0 {
                    return false;
                }
                let tb = -((points / 2) as i64);
                let diagrams = u32::try_from(points / 2).ok().and_then(|n| count_chord_diagrams(n).ok());
                tb == *expected_tb && diagrams == Some(u128::from(*expected_diagrams))
            }
            Check::Giroux { set, sphere, expected } => giroux_ok(set, *sphere).status == *expected,
            Check::Stabilisation { from, positive, to } => {
                from.validate().is_ok() && to.validate().is_ok() && from.stabilise(*positive) == *to
            }
            Check::AnnulusExtension { initial, form, expected } => {
                extend_by_annulus(initial, form).ok().as_ref() == Some(expected)
            }
            Check::Normalizes { phi, input, expected } => {
                let ctx = Context { phi: *phi, ..Context::standard() };
                normalize_with(input, &ctx)
                    .map(|n| n.trace.is_sound() && n.result == *expected)
                    .unwrap_or(false)
            }
            Check::Sum { terms, expected } => terms.iter().sum::<u64>() == *expected,
            Check::Cited { fact } => ledger.get(fact).is_some(),
            Check::Error { .. } => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Arithmetic,
    Cited,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepVerdict {
    Verified,
    Cited,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub id: String,
    pub claim: String,
    pub kind: StepKind,
    pub check: Check,
    pub verdict: StepVerdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "TraceJson", into = "TraceJson")]
pub struct ProofTrace {
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    steps: Vec<Step>,
    #[serde(default)]
    sound: bool,
}

impl From<TraceJson> for ProofTrace {
    fn from(j: TraceJson) -> ProofTrace {
        ProofTrace { steps: j.steps }
    }
}

impl From<ProofTrace> for TraceJson {
    fn from(t: ProofTrace) -> TraceJson {
        let sound = t.is_sound();
        TraceJson { steps: t.steps, sound }
    }
}

fn judge(kind: StepKind, check: &Check, ledger: &Ledger) -> StepVerdict {
    match (kind, check.holds(ledger)) {
        (_, false) => StepVerdict::Failed,
        (StepKind::Arithmetic, true) => StepVerdict::Verified,
        (StepKind::Cited, true) => StepVerdict::Cited,
    }
}

impl ProofTrace {
    pub fn new() -> ProofTrace {
        ProofTrace::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn steps_mut(&mut self) -> &mut Vec<Step> {
        &mut self.steps
    }

    pub fn is_sound(&self) -> bool {
        self.steps.iter().all(|s| s.verdict != StepVerdict::Failed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| s.verdict == StepVerdict::Failed)
    }

    pub fn step(&self, id: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.id == id)
    }

    /// Records an arithmetic claim, running its check immediately.
    pub fn arith(&mut self, id: impl Into<String>, claim: impl Into<String>, check: Check, ledger: &Ledger) {
        let verdict = judge(StepKind::Arithmetic, &check, ledger);
        self.steps.push(Step { id: id.into(), claim: claim.into(), kind: StepKind::Arithmetic, check, verdict });
    }

    /// Records a claim resting on the cited fact `fact`.
    pub fn cite(&mut self, id: impl Into<String>, claim: impl Into<String>, fact: &str, ledger: &Ledger) {
        let check = Check::Cited { fact: fact.to_string() };
        let verdict = judge(StepKind::Cited, &check, ledger);
        self.steps.push(Step { id: id.into(), claim: claim.into(), kind: StepKind::Cited, check, verdict });
    }

    /// Records a computation that errored.
    pub fn error(&mut self, id: impl Into<String>, claim: impl Into<String>, message: impl Into<String>) {
        self.steps.push(Step {
            id: id.into(),
            claim: claim.into(),
            kind: StepKind::Arithmetic,
            check: Check::Error { message: message.into() },
            verdict: StepVerdict::Failed,
        });
    }

    /// Appends `other` with every step id prefixed by `prefix/`.
    pub fn append_prefixed(&mut self, prefix: &str, other: ProofTrace) {
        self.steps.extend(other.steps.into_iter().map(|mut s| {
            s.id = format!("{prefix}/{}", s.id);
            s
        }));
    }

    /// Re-executes every check against `ledger`, replacing recorded verdicts.
    pub fn reverify(&self, ledger: &Ledger) -> ProofTrace {
        let steps = self
            .steps
            .iter()
            .map(|s| Step { verdict: judge(s.kind, &s.check, ledger), ..s.clone() })
            .collect();
        ProofTrace { steps }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(text: &str) -> serde_json::Result<ProofTrace> {
        serde_json::from_str(text)
    }

    /// One line per step: verdict, id, claim.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let tag = match s.verdict {
                StepVerdict::Verified => "verified",
                StepVerdict::Cited => "cited   ",
                StepVerdict::Failed => "FAILED  ",
            };
            out.push_str(&format!("[{tag}] {}: {}\n", s.id, s.claim));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_ledger_ids_are_unique() {
        let ledger = Ledger::standard();
        let mut ids: Vec<&str> = ledger.facts().iter().map(|f| f.id.as_str()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn checks_detect_wrong_expectations() {
        let ledger = Ledger::standard();
        let c = |a, b| CurveClass::new(a, b).unwrap();
        let good = Check::Intersection { c1: c(5, 4), c2: c(1, 2), multiplicity: 2, expected: 12 };
        assert!(good.holds(&ledger));
        let bad = Check::Intersection { c1: c(5, 4), c2: c(1, 2), multiplicity: 2, expected: 10 };
        assert!(!bad.holds(&ledger));
        assert!(Check::Cited { fact: facts::LRP.into() }.holds(&ledger));
        assert!(!Check::Cited { fact: "no-such-fact".into() }.holds(&ledger));
        assert!(!Check::Error { message: "x".into() }.holds(&ledger));
    }

    #[test]
    fn trace_soundness_and_json() {
        let ledger = Ledger::standard();
        let mut t = ProofTrace::new();
        t.arith(
            "edge",
            "-2 and inf are adjacent",
            Check::HasEdge { a: Slope::integer(-2), b: Slope::INFINITY, expected: true },
            &ledger,
        );
        t.cite("giroux", "Giroux's criterion", facts::GIROUX_CRITERION, &ledger);
        assert!(t.is_sound());
        let json = t.to_json().unwrap();
        assert!(json.contains("\"sound\": true"));
        let back = ProofTrace::from_json(&json).unwrap();
        assert_eq!(back, t);
        t.error("boom", "a computation", "overflow");
        assert!(!t.is_sound());
        assert_eq!(t.failed().count(), 1);
    }

    #[test]
    fn reverify_uses_the_given_ledger() {
        let ledger = Ledger::standard();
        let mut t = ProofTrace::new();
        t.cite("c", "claim", facts::IMBALANCE, &ledger);
        let mut broken = ledger.clone();
        broken.facts_mut().retain(|f| f.id != facts::IMBALANCE);
        assert!(t.reverify(&ledger).is_sound());
        assert!(!t.reverify(&broken).is_sound());
    }
}
