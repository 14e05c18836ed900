//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
//! `walkthrough` and `trace verify` exit 0 iff the trace is sound.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bypass::{bypass_attach, imbalance_bypass_exists, twist_of, AttachmentSide, TwistValue};
use crate::curves::{apply, intersection, slope_of, CurveClass, MappingClass};
use crate::error::{Error, Result};
use crate::oracle;
use crate::seifert::count_chord_diagrams;
use crate::slices::{refinement_verdict, Envelope, Sign, SliceStack};
use crate::slopes::{farey_path, mediant, neighbors, Half, Slope};
use crate::trace::{Ledger, ProofTrace};
use crate::verdict::{classify_surgery, mountain_range, mountain_range_bfs, walkthrough, Coefficient, LegendrianFigureEight};

#[derive(Parser, Debug)]
#[command(name = "farey-contact", version, about = "Farey-graph and convex-surface bookkeeping for contact surgeries on the figure-eight knot")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check results against brute-force oracles on slopes with |p|, q <= N.
    #[arg(long, global = true, value_name = "N")]
    oracle_bound: Option<i64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Farey graph queries.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Curves on the punctured torus.
    #[command(subcommand)]
    Curves(CurvesCmd),
    /// Mapping classes acting on curves.
    #[command(subcommand)]
    Monodromy(MonodromyCmd),
    /// Dividing slope after a bypass attachment.
    #[command(subcommand)]
    Bypass(BypassCmd),
    /// Twisting of a curve against a dividing set.
    Twist {
        curve: String,
        #[arg(allow_hyphen_values = true)]
        dividing_slope: String,
        /// Number of dividing curves.
        #[arg(long, default_value_t = 2)]
        count: u64,
    },
    /// Whether twistings tw0 < tw1 <= 0 guarantee a bypass.
    Imbalance {
        #[arg(allow_hyphen_values = true)]
        tw0: String,
        #[arg(allow_hyphen_values = true)]
        tw1: String,
    },
    /// Basic-slice stacks.
    #[command(subcommand)]
    Stack(StackCmd),
    /// Legendrian figure-eight invariants.
    #[command(subcommand)]
    Legendrian(LegendrianCmd),
    /// Positive contact surgery.
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Replay the full argument with every computation re-checked.
    Walkthrough {
        #[arg(long, value_name = "PATH")]
        trace_file: Option<PathBuf>,
    },
    /// Chord diagrams on a disc.
    #[command(subcommand)]
    Chords(ChordsCmd),
    /// Stored proof traces.
    #[command(subcommand)]
    Trace(TraceCmd),
}

#[derive(Subcommand, Debug)]
enum FareyCmd {
    /// Shortest path between two slopes.
    Path {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
    },
    /// Neighbours with numerator and denominator bounded by --bound.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Mediant of two adjacent slopes in the chosen half of the disc.
    Mediant {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "lower")]
        half: String,
    },
}

#[derive(Subcommand, Debug)]
enum CurvesCmd {
    /// Geometric intersection number.
    Int { c1: String, c2: String },
    /// Slope of a curve class.
    Slope { curve: String },
}

#[derive(Subcommand, Debug)]
enum MonodromyCmd {
    /// Image of a curve class; MATRIX is phi, phi^-1, id, -id or [[a,b],[c,d]].
    Apply {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        curve: String,
    },
}

#[derive(Args, Debug)]
struct BypassArgs {
    /// Slope of the two dividing curves.
    #[arg(allow_hyphen_values = true)]
    dividing: String,
    /// Slope of the ruling curve the bypass is attached along.
    #[arg(allow_hyphen_values = true)]
    ruling: String,
}

#[derive(Subcommand, Debug)]
enum BypassCmd {
    Front(BypassArgs),
    Back(BypassArgs),
}

#[derive(Subcommand, Debug)]
enum StackCmd {
    /// Verdict for a stack such as "-3 -[-]-> -4 -[-]-> inf" inside the single
    /// slice spanning its endpoints.
    Verdict {
        #[arg(allow_hyphen_values = true)]
        stack: String,
        /// Sign of the enclosing slice (+, - or none).
        #[arg(long, default_value = "none", allow_hyphen_values = true)]
        outer_sign: String,
    },
}

#[derive(Subcommand, Debug)]
enum LegendrianCmd {
    /// Rotation numbers realised at a given tb.
    Range {
        #[arg(allow_hyphen_values = true)]
        tb: i64,
    },
}

#[derive(Subcommand, Debug)]
enum SurgeryCmd {
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        tb: i64,
        #[arg(long, allow_hyphen_values = true)]
        rot: i64,
        /// Positive rational, relative to the contact framing.
        #[arg(long, allow_hyphen_values = true)]
        coefficient: String,
        #[arg(long, value_name = "PATH")]
        trace_file: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ChordsCmd {
    /// Non-crossing chord diagrams with N chords.
    Count { n: u32 },
}

#[derive(Subcommand, Debug)]
enum TraceCmd {
    /// Re-execute every step of a stored trace.
    Verify { path: PathBuf },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Error::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

struct Printer<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Printer<'_> {
    fn emit<T: Serialize + ?Sized>(&mut self, value: &T, text: impl std::fmt::Display) -> Result<()> {
        if self.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(value)?)?;
        } else {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }
}

fn oracle_mismatch(what: &str, got: impl std::fmt::Display, want: impl std::fmt::Display) -> Error {
    Error::Inadmissible(format!("oracle disagrees on {what}: got {got}, brute force gives {want}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let mut p = Printer { json: cli.json, out };
    let bound = cli.oracle_bound;
    match &cli.command {
        Command::Farey(FareyCmd::Path { from, to }) => {
            let (a, b): (Slope, Slope) = (from.parse()?, to.parse()?);
            let path = farey_path(a, b)?;
            if let Some(n) = bound {
                let d = oracle::bfs_distance(a, b, n)?;
                if d != path.len() {
                    return Err(oracle_mismatch("path length", path.len(), d));
                }
            }
            p.emit(&path, &path)?;
        }
        Command::Farey(FareyCmd::Neighbors { slope, bound: nb }) => {
            let list: Vec<Slope> = neighbors(slope.parse()?, *nb)?.into_iter().map(|s| s.0).collect();
            let text: Vec<String> = list.iter().map(|s| s.to_string()).collect();
            p.emit(&list, text.join(" "))?;
        }
        Command::Farey(FareyCmd::Mediant { a, b, half }) => {
            let half: Half = half.parse()?;
            let m = mediant(a.parse()?, b.parse()?, half)?;
            p.emit(&m, m)?;
        }
        Command::Curves(CurvesCmd::Int { c1, c2 }) => {
            let n = intersection(c1.parse()?, c2.parse()?);
            p.emit(&n, n)?;
        }
        Command::Curves(CurvesCmd::Slope { curve }) => {
            let s = slope_of(curve.parse()?);
            p.emit(&s, s)?;
        }
        Command::Monodromy(MonodromyCmd::Apply { matrix, curve }) => {
            let m: MappingClass = matrix.parse()?;
            let c: CurveClass = curve.parse()?;
            let image = apply(&m, c)?;
            p.emit(&image, image)?;
        }
        Command::Bypass(cmd) => {
            let (args, side) = match cmd {
                BypassCmd::Front(a) => (a, AttachmentSide::Front),
                BypassCmd::Back(a) => (a, AttachmentSide::Back),
            };
            let (s, r): (Slope, Slope) = (args.dividing.parse()?, args.ruling.parse()?);
            let result = bypass_attach(s, r, side)?;
            if let Some(n) = bound {
                let want = oracle::bypass_scan(s, r, side, n)?;
                if want != result {
                    return Err(oracle_mismatch("bypass", result, want));
                }
            }
            p.emit(&result, result)?;
        }
        Command::Twist { curve, dividing_slope, count } => {
            let t = twist_of(curve.parse()?, dividing_slope.parse()?, *count)?;
            p.emit(&t, t)?;
        }
        Command::Imbalance { tw0, tw1 } => {
            let (a, b): (TwistValue, TwistValue) = (tw0.parse()?, tw1.parse()?);
            let yes = imbalance_bypass_exists(a, b);
            p.emit(&yes, yes)?;
        }
        Command::Stack(StackCmd::Verdict { stack, outer_sign }) => {
            let stack: SliceStack = stack.parse()?;
            let sign = match outer_sign.as_str() {
                "none" => None,
                s => Some(s.parse::<Sign>()?),
            };
            let outer = Envelope { s0: stack.start(), s1: stack.end(), sign };
            let v = refinement_verdict(&outer, &stack)?;
            let text = format!("{}\n{}", status_word(v.is_overtwisted()), v.reason);
            p.emit(&v, text)?;
        }
        Command::Legendrian(LegendrianCmd::Range { tb }) => {
            let range = mountain_range(*tb)?;
            if let Some(n) = bound {
                let min_tb = -n.max(3);
                if *tb >= min_tb {
                    let want: std::collections::BTreeSet<i64> =
                        mountain_range_bfs(min_tb).into_iter().filter(|k| k.tb == *tb).map(|k| k.rot).collect();
                    if want != range {
                        return Err(oracle_mismatch("mountain range", format!("{range:?}"), format!("{want:?}")));
                    }
                }
            }
            let text: Vec<String> = range.iter().map(|r| r.to_string()).collect();
            p.emit(&range, text.join(" "))?;
        }
        Command::Surgery(SurgeryCmd::Classify { tb, rot, coefficient, trace_file }) => {
            let knot = LegendrianFigureEight::new(*tb, *rot)?;
            let r: Coefficient = coefficient.parse()?;
            let (v, t) = classify_surgery(knot, r)?;
            if let Some(path) = trace_file {
                std::fs::write(path, t.to_json()?)?;
            }
            #[derive(Serialize)]
            struct Out<'a> {
                verdict: &'a crate::slices::Verdict,
                trace: &'a ProofTrace,
            }
            let text = format!("{}\n{}\n{}", status_word(v.is_overtwisted()), v.reason, t.summary());
            p.emit(&Out { verdict: &v, trace: &t }, text)?;
        }
        Command::Walkthrough { trace_file } => {
            let t = walkthrough();
            if let Some(path) = trace_file {
                std::fs::write(path, t.to_json()?)?;
            }
            p.emit(&t, t.summary())?;
            return Ok(if t.is_sound() { 0 } else { 1 });
        }
        Command::Chords(ChordsCmd::Count { n }) => {
            let c = count_chord_diagrams(*n)?;
            if bound.is_some() {
                let want = oracle::chord_diagrams_brute(*n) as u128;
                if want != c {
                    return Err(oracle_mismatch("chord count", c, want));
                }
            }
            p.emit(&c, c)?;
        }
        Command::Trace(TraceCmd::Verify { path }) => {
            let text = std::fs::read_to_string(path)?;
            let stored = ProofTrace::from_json(&text)?;
            let t = stored.reverify(&Ledger::standard());
            p.emit(&t, t.summary())?;
            return Ok(if t.is_sound() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn status_word(overtwisted: bool) -> &'static str {
    if overtwisted {
        "overtwisted"
    } else {
        "tight_candidate"
    }
}
