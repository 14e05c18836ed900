//! Basic slices, slice stacks, and sign bookkeeping.
//!
//! Boundary slopes of knot-complement tori are written in Seifert-framed
//! coordinates: the meridian is `1/0` and the framing `n` is the slope `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slopes::{has_edge, FareyPath, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "positive" | "pos" => Ok(Sign::Positive),
            "-" | "negative" | "neg" => Ok(Sign::Negative),
            other => Err(Error::Usage(format!("expected a sign (+/-), got '{other}'"))),
        }
    }
}

/// A tight `T^2 x I` whose boundary dividing slopes span a Farey edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasicSlice {
    s0: Slope,
    s1: Slope,
    sign: Sign,
}

impl BasicSlice {
    pub fn new(s0: Slope, s1: Slope, sign: Sign) -> Result<BasicSlice> {
        if !has_edge(s0, s1) {
            return Err(Error::NotAnEdge(s0, s1));
        }
        Ok(BasicSlice { s0, s1, sign })
    }

    pub fn s0(&self) -> Slope {
        self.s0
    }

    pub fn s1(&self) -> Slope {
        self.s1
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

impl fmt::Display for BasicSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> {}", self.s0, self.sign.symbol(), self.s1)
    }
}

/// Consecutive basic slices glued along shared boundary tori.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StackJson", into = "StackJson")]
pub struct SliceStack {
    slices: Vec<BasicSlice>,
}

/// JSON form of a stack: `{"slopes": [...], "signs": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StackJson {
    pub slopes: Vec<Slope>,
    pub signs: Vec<Sign>,
}

impl TryFrom<StackJson> for SliceStack {
    type Error = Error;

    fn try_from(j: StackJson) -> Result<SliceStack> {
        make_stack(&FareyPath::new(j.slopes)?, &j.signs)
    }
}

impl From<SliceStack> for StackJson {
    fn from(s: SliceStack) -> StackJson {
        StackJson { slopes: s.slopes(), signs: s.signs() }
    }
}

impl SliceStack {
    pub fn from_slices(slices: Vec<BasicSlice>) -> Result<SliceStack> {
        if slices.is_empty() {
            return Err(Error::EmptyStack);
        }
        for w in slices.windows(2) {
            if w[0].s1 != w[1].s0 {
                return Err(Error::StackGap(w[0].s1, w[1].s0));
            }
        }
        Ok(SliceStack { slices })
    }

    pub fn slices(&self) -> &[BasicSlice] {
        &self.slices
    }

    pub fn start(&self) -> Slope {
        self.slices[0].s0
    }

    pub fn end(&self) -> Slope {
        self.slices[self.slices.len() - 1].s1
    }

    pub fn slopes(&self) -> Vec<Slope> {
        std::iter::once(self.start()).chain(self.slices.iter().map(|s| s.s1)).collect()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.slices.iter().map(|s| s.sign).collect()
    }

    /// Glues `other` on top of `self`.
    pub fn then(&self, other: &SliceStack) -> Result<SliceStack> {
        let mut v = self.slices.clone();
        v.extend_from_slice(&other.slices);
        SliceStack::from_slices(v)
    }

    pub fn is_uniform(&self) -> bool {
        self.slices.windows(2).all(|w| w[0].sign == w[1].sign)
    }
}

impl fmt::Display for SliceStack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start())?;
        for s in &self.slices {
            write!(f, " -[{}]-> {}", s.sign.symbol(), s.s1)?;
        }
        Ok(())
    }
}

impl FromStr for SliceStack {
    type Err = Error;

    /// Parses `"s0 -[+]-> s1 -[-]-> s2"`.
    fn from_str(text: &str) -> Result<SliceStack> {
        let bad = || Error::MalformedStack(text.to_string());
        let mut rest = text.trim();
        let mut slopes = Vec::new();
        let mut signs = Vec::new();
        loop {
            match rest.find("-[") {
                Some(i) => {
                    slopes.push(rest[..i].trim().parse::<Slope>()?);
                    let after = &rest[i + 2..];
                    let close = after.find("]->").ok_or_else(bad)?;
                    signs.push(after[..close].trim().parse::<Sign>()?);
                    rest = &after[close + 3..];
                }
                None => {
                    slopes.push(rest.trim().parse::<Slope>()?);
                    break;
                }
            }
        }
        if signs.is_empty() {
            return Err(bad());
        }
        make_stack(&FareyPath::new(slopes)?, &signs)
    }
}

/// One basic slice per edge of `path`.
pub fn make_stack(path: &FareyPath, signs: &[Sign]) -> Result<SliceStack> {
    if path.is_empty() || signs.len() != path.len() {
        return Err(Error::SignCountMismatch { expected: path.len(), got: signs.len() });
    }
    let slices = path
        .vertices()
        .windows(2)
        .zip(signs)
        .map(|(w, &sign)| BasicSlice::new(w[0], w[1], sign))
        .collect::<Result<Vec<_>>>()?;
    SliceStack::from_slices(slices)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    TightCandidate,
    Overtwisted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::TightCandidate => "tight_candidate",
            Status::Overtwisted => "overtwisted",
        })
    }
}

/// Evidence attached to an overtwisted verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Two slices of opposite sign inside a region spanning one Farey edge.
    MixedSigns { span: (Slope, Slope), stack: SliceStack, first: usize, second: usize },
    /// A dividing set with a contractible component on a convex surface.
    Contractible { surface: String },
    /// A conclusion resting on cited facts.
    Cited { facts: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn tight_candidate(reason: impl Into<String>) -> Verdict {
        Verdict { status: Status::TightCandidate, reason: reason.into(), witness: None }
    }

    pub fn overtwisted(reason: impl Into<String>, witness: Witness) -> Verdict {
        Verdict { status: Status::Overtwisted, reason: reason.into(), witness: Some(witness) }
    }

    pub fn is_overtwisted(&self) -> bool {
        self.status == Status::Overtwisted
    }
}

/// A `T^2 x I` spanning one Farey edge, possibly of unknown sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub s0: Slope,
    pub s1: Slope,
    pub sign: Option<Sign>,
}

impl From<BasicSlice> for Envelope {
    fn from(b: BasicSlice) -> Envelope {
        Envelope { s0: b.s0, s1: b.s1, sign: Some(b.sign) }
    }
}

/// Decides whether subdividing `outer` into `stack` is consistent with the
/// sign rule for basic slices. Every piece of a subdivided basic slice carries
/// the sign of the whole; pieces of opposite sign force overtwistedness.
///
/// Uniform signs give only a `tight_candidate`.
pub fn refinement_verdict(outer: &Envelope, stack: &SliceStack) -> Result<Verdict> {
    if !has_edge(outer.s0, outer.s1) {
        return Err(Error::NotAnEdge(outer.s0, outer.s1));
    }
    if stack.start() != outer.s0 || stack.end() != outer.s1 {
        return Err(Error::SpanMismatch {
            got_from: stack.start(),
            got_to: stack.end(),
            want_from: outer.s0,
            want_to: outer.s1,
        });
    }
    let signs = stack.signs();
    let offender = match outer.sign {
        Some(sign) => signs.iter().position(|&s| s != sign).map(|i| {
            // pair the offender with a slice of the outer sign if one exists
            let j = signs.iter().position(|&s| s == sign).unwrap_or(i);
            (j.min(i), j.max(i))
        }),
        None => signs.iter().position(|&s| s != signs[0]).map(|i| (0, i)),
    };
    Ok(match offender {
        Some((first, second)) => Verdict::overtwisted(
            format!(
                "slices {first} and {second} of {stack} disagree in sign inside a single basic slice {} -> {}",
                outer.s0, outer.s1
            ),
            Witness::MixedSigns { span: (outer.s0, outer.s1), stack: stack.clone(), first, second },
        ),
        None => Verdict::tight_candidate(format!(
            "all slices of {stack} carry the sign of the enclosing slice"
        )),
    })
}

/// The slice whose gluing turns the complement of a knot with contact framing
/// `current_tb` into the complement of its stabilisation of sign `sign`.
pub fn stabilisation_glue(current_tb: i64, sign: Sign) -> Result<BasicSlice> {
    if current_tb > -1 {
        return Err(Error::FramingTooLarge(current_tb));
    }
    let next = current_tb.checked_sub(1).ok_or(Error::Overflow)?;
    BasicSlice::new(Slope::integer(current_tb), Slope::integer(next), sign)
}

/// The slice glued to `∂N(L)` in positive contact surgery, taking the
/// dividing slope from the contact framing `tb` to the meridian.
pub fn surgery_complement_stack(tb: i64, sign: Sign) -> Result<SliceStack> {
    if tb > -1 {
        return Err(Error::FramingTooLarge(tb));
    }
    SliceStack::from_slices(vec![BasicSlice::new(Slope::integer(tb), Slope::INFINITY, sign)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(v: &[&str]) -> FareyPath {
        FareyPath::new(v.iter().map(|t| t.parse().unwrap()).collect()).unwrap()
    }

    use Sign::{Negative as N, Positive as P};

    #[test]
    fn make_stack_examples() {
        let one = make_stack(&path(&["-3", "inf"]), &[N]).unwrap();
        assert_eq!(one.slices().len(), 1);
        assert_eq!(one.slices()[0].sign(), N);
        let two = make_stack(&path(&["-3", "-4", "inf"]), &[N, N]).unwrap();
        assert_eq!(two.slices().len(), 2);
        assert!(matches!(
            make_stack(&path(&["-3", "-4", "inf"]), &[N]),
            Err(Error::SignCountMismatch { expected: 2, got: 1 })
        ));
        assert!(make_stack(&path(&["-3"]), &[]).is_err());
    }

    #[test]
    fn refinement_examples() {
        let outer = Envelope { s0: Slope::integer(-3), s1: Slope::INFINITY, sign: Some(N) };
        let stack = make_stack(&path(&["-3", "-4", "inf"]), &[N, N]).unwrap();
        assert_eq!(refinement_verdict(&outer, &stack).unwrap().status, Status::TightCandidate);

        // a positive stabilisation slice followed by the negative surgery slice
        let outer = Envelope { s0: Slope::integer(-3), s1: Slope::INFINITY, sign: None };
        let stack = make_stack(&path(&["-3", "-4", "inf"]), &[P, N]).unwrap();
        let v = refinement_verdict(&outer, &stack).unwrap();
        assert!(v.is_overtwisted());
        assert!(matches!(v.witness, Some(Witness::MixedSigns { first: 0, second: 1, .. })));

        let single = surgery_complement_stack(-3, N).unwrap();
        let outer: Envelope = single.slices()[0].into();
        assert_eq!(refinement_verdict(&outer, &single).unwrap().status, Status::TightCandidate);
    }

    #[test]
    fn refinement_errors() {
        let stack = make_stack(&path(&["-3", "-4", "inf"]), &[N, N]).unwrap();
        let wrong_end = Envelope { s0: Slope::integer(-3), s1: Slope::integer(-4), sign: Some(N) };
        assert!(matches!(refinement_verdict(&wrong_end, &stack), Err(Error::SpanMismatch { .. })));
        let not_edge = Envelope { s0: Slope::integer(-3), s1: Slope::integer(-5), sign: None };
        assert!(matches!(refinement_verdict(&not_edge, &stack), Err(Error::NotAnEdge(..))));
    }

    #[test]
    fn stabilisation_examples() {
        let s = stabilisation_glue(-3, P).unwrap();
        assert_eq!((s.s0(), s.s1(), s.sign()), (Slope::integer(-3), Slope::integer(-4), P));
        let s = stabilisation_glue(-4, N).unwrap();
        assert_eq!((s.s0(), s.s1(), s.sign()), (Slope::integer(-4), Slope::integer(-5), N));
        for tb in -50..=-1 {
            assert!(has_edge(Slope::integer(tb), Slope::integer(tb - 1)));
            assert!(stabilisation_glue(tb, N).is_ok());
        }
        assert!(matches!(stabilisation_glue(0, N), Err(Error::FramingTooLarge(0))));
    }

    #[test]
    fn surgery_stack_examples() {
        let minus = surgery_complement_stack(-3, N).unwrap();
        assert_eq!(minus.to_string(), "-3 -[-]-> inf");
        let plus = surgery_complement_stack(-3, P).unwrap();
        assert_eq!(plus.to_string(), "-3 -[+]-> inf");
        assert!(surgery_complement_stack(-7, P).is_ok());
        assert!(has_edge(Slope::integer(-7), Slope::INFINITY));
    }

    #[test]
    fn text_and_json_forms() {
        let s: SliceStack = "-3 -[+]-> -4 -[-]-> inf".parse().unwrap();
        assert_eq!(s.signs(), vec![P, N]);
        assert_eq!(s.to_string(), "-3 -[+]-> -4 -[-]-> inf");
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"slopes":["-3","-4","inf"],"signs":["positive","negative"]}"#);
        let back: SliceStack = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!("-3 -[+]-> -5".parse::<SliceStack>().is_err());
        assert!("-3".parse::<SliceStack>().is_err());
        assert!("-3 -[x]-> -4".parse::<SliceStack>().is_err());
    }
}
