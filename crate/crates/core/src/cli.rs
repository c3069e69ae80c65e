//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with everything that would be printed, so it can be tested
//! without spawning a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::automata::Automaton;
use crate::error::{Error, Result};
use crate::expansion::{d_beta, d_minus_beta, beta_orbit, orbit_expansion, int_negabase, OrbitResult};
use crate::numberfield::{FieldElement, NumberField, Rat};
use crate::selftest;
use crate::shift_automata::{beta_shift_automaton, build_shift_automaton, classify, ShiftKind};
use crate::transducers::{build_int_converter, int_convert, normalize, normalize_exact, online_delay, online_run};
use crate::words::{format_digits, parse_digits, BaseSign, Digit, EpWord};

#[derive(Parser, Debug)]
#[command(name = "negabase", version, about = "Numeration in negative and positive Pisot bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which base the command works in.
#[derive(Args, Debug, Clone)]
struct BaseArgs {
    /// Integer base b >= 2
    #[arg(long, group = "base_spec")]
    base: Option<i64>,
    /// Minimal polynomial of beta, constant term first; work in base -beta
    #[arg(long, group = "base_spec", allow_hyphen_values = true)]
    base_neg_poly: Option<String>,
    /// Minimal polynomial of beta, constant term first; work in base beta
    #[arg(long, group = "base_spec", allow_hyphen_values = true)]
    base_pos_poly: Option<String>,
    /// Decimal approximation of beta (inexact; expand only)
    #[arg(long, group = "base_spec")]
    base_float: Option<String>,
    /// Work in base +b instead of -b with `--base` or `--base-float`
    #[arg(long)]
    positive: bool,
    /// Step cap for periodicity detection
    #[arg(long, default_value_t = crate::expansion::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expansion of x in base -beta (or beta)
    Expand {
        /// A rational `p/q`, or comma-separated coordinates on 1, beta, ...
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        base: BaseArgs,
        /// Print only the first n digits
        #[arg(short)]
        n: Option<usize>,
    },
    /// The (-b)-representation of an integer
    Intconvert {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
        #[arg(long)]
        base: u32,
    },
    /// Finite type / sofic verdict and forbidden factors of the (-beta)-shift
    Classify {
        #[command(flatten)]
        base: BaseArgs,
    },
    /// The shift automaton
    Automaton {
        #[command(flatten)]
        base: BaseArgs,
        /// Graphviz output
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON output
        #[arg(long)]
        json: bool,
    },
    /// Admissible (-beta)-expansion of a word `pre(per)` on {-c, ..., c}
    Normalize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        base: BaseArgs,
        /// Alphabet bound c (defaults to the largest digit)
        #[arg(long)]
        alphabet_bound: Option<Digit>,
        /// Evaluate and re-expand instead of running the transducer
        #[arg(long)]
        exact: bool,
        /// State cap for the transducer construction
        #[arg(long, default_value_t = crate::transducers::DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// On-line conversion of beta-digits x_1 x_2 ... to base -beta
    Online {
        /// Input digits (missing ones are read as 0)
        #[arg(default_value = "")]
        digits: String,
        #[command(flatten)]
        base: BaseArgs,
        /// Number of output digits
        #[arg(short, default_value_t = 10)]
        n: usize,
        /// Print the delay only
        #[arg(long)]
        delay: bool,
    },
    /// Entropy of the shift next to log beta
    Entropy {
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Run the acceptance suite
    Selftest,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Output::default();
    let code = match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            writeln!(out.err, "error: {msg}").unwrap();
            2
        }
        Err(Failure::Domain(e)) => {
            writeln!(out.err, "error: {e}").unwrap();
            1
        }
    };
    Outcome { code, stdout: out.out, stderr: out.err }
}

#[derive(Default)]
struct Output {
    out: String,
    err: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

enum Base {
    Exact(Box<NumberField>, BaseSign),
    Float(BigRational, BaseSign),
}

impl BaseArgs {
    fn resolve(&self) -> std::result::Result<Base, Failure> {
        let sign = if self.positive { BaseSign::Positive } else { BaseSign::Negative };
        if let Some(b) = self.base {
            if b < 2 {
                return Err(Failure::Usage(format!("--base must be at least 2, got {b}")));
            }
            return Ok(Base::Exact(Box::new(NumberField::integer(b)?), sign));
        }
        if let Some(p) = &self.base_neg_poly {
            return Ok(Base::Exact(Box::new(NumberField::from_coeffs(p)?), BaseSign::Negative));
        }
        if let Some(p) = &self.base_pos_poly {
            return Ok(Base::Exact(Box::new(NumberField::from_coeffs(p)?), BaseSign::Positive));
        }
        if let Some(s) = &self.base_float {
            let beta = parse_decimal(s).ok_or_else(|| Failure::Usage(format!("bad decimal {s:?}")))?;
            if beta <= BigRational::one() {
                return Err(Failure::Usage("the base must exceed 1".into()));
            }
            return Ok(Base::Float(beta, sign));
        }
        Err(Failure::Usage(
            "give a base with --base, --base-neg-poly, --base-pos-poly or --base-float".into(),
        ))
    }

    fn exact(&self) -> std::result::Result<(NumberField, BaseSign), Failure> {
        match self.resolve()? {
            Base::Exact(f, s) => Ok((*f, s)),
            Base::Float(..) => Err(Failure::Usage("this command needs an exact base".into())),
        }
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits: String = format!("{int}{frac}");
    let num: BigInt = digits.parse().ok()?;
    Some(BigRational::new(num, BigInt::from(10u32).pow(frac.len() as u32)))
}

fn parse_rational(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(p.trim().parse().map_err(|_| bad())?, q))
        }
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_element(f: &NumberField, s: &str) -> Result<FieldElement> {
    let parts: Vec<Rat> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    if parts.len() > f.degree() {
        return Err(Error::Parse(format!("{} coordinates for a degree {} field", parts.len(), f.degree())));
    }
    let mut coords = vec![Rat::zero(); f.degree()];
    for (c, p) in coords.iter_mut().zip(parts) {
        *c = p;
    }
    Ok(f.element(coords))
}

fn execute(cmd: Command, out: &mut Output) -> std::result::Result<i32, Failure> {
    let o = &mut out.out;
    match cmd {
        Command::Expand { x, base, n } => match base.resolve()? {
            Base::Exact(f, sign) => {
                let x = parse_element(&f, &x)?;
                match (sign, n) {
                    (BaseSign::Negative, Some(n)) => writeln!(o, "{}", d_minus_beta(&x, &f, n)?).unwrap(),
                    (BaseSign::Positive, Some(n)) => writeln!(o, "{}", d_beta(&x, &f, n)?).unwrap(),
                    (sign, None) => {
                        let orbit = match sign {
                            BaseSign::Negative => orbit_expansion(&x, &f, base.cap)?,
                            BaseSign::Positive => beta_orbit(&x, &f, base.cap)?,
                        };
                        match orbit {
                            OrbitResult::Periodic(w) => writeln!(o, "{w}").unwrap(),
                            OrbitResult::CapExceeded(_) => return Err(Error::CapExceeded(base.cap).into()),
                        }
                    }
                }
            }
            Base::Float(beta, sign) => {
                let n = n.ok_or_else(|| Failure::Usage("an inexact base needs -n".into()))?;
                let x = parse_rational(&x)?;
                writeln!(out.err, "warning: inexact base; digits follow the rationalized value and periods are not detected")
                    .unwrap();
                writeln!(o, "{}", float_expand(&beta, sign, x, n)?).unwrap();
            }
        },
        Command::Intconvert { n, base } => {
            if base < 2 {
                return Err(Failure::Usage(format!("--base must be at least 2, got {base}")));
            }
            let w = if n.is_negative() {
                int_negabase(&n, base)
            } else {
                let t = build_int_converter(base);
                int_convert(&t, &crate::transducers::positive_digits(&n, base))?
            };
            writeln!(o, "{w}").unwrap();
        }
        Command::Classify { base } => {
            let (f, sign) = base.exact()?;
            if sign == BaseSign::Positive {
                return Err(Failure::Usage("classify works in a negative base".into()));
            }
            let c = classify(&f, base.cap);
            match (c.kind, c.forbidden_factors) {
                (ShiftKind::FiniteType, Some(x)) => {
                    let words: Vec<String> = x.iter().map(|w| w.to_string()).collect();
                    writeln!(o, "finite-type; forbidden: {}", words.join(" ")).unwrap();
                }
                (ShiftKind::FiniteType, None) => writeln!(o, "finite-type").unwrap(),
                (ShiftKind::SoficNotFiniteType, _) => writeln!(o, "sofic; not finite-type").unwrap(),
                (ShiftKind::NotSoficOrUndetected, _) => {
                    writeln!(o, "not sofic or period not detected within {} steps", base.cap).unwrap()
                }
            }
        }
        Command::Automaton { base, dot, json } => {
            let a = shift_automaton(&base)?;
            if dot {
                o.push_str(&a.to_dot());
            } else if json {
                writeln!(o, "{}", a.to_json()).unwrap();
            } else {
                o.push_str(&automaton_text(&a));
            }
        }
        Command::Normalize { word, base, alphabet_bound, exact, state_cap } => {
            let (f, sign) = base.exact()?;
            if sign == BaseSign::Positive {
                return Err(Failure::Usage("normalize works in a negative base".into()));
            }
            let w: EpWord = word.parse()?;
            if let Some(c) = alphabet_bound {
                let top = w.preperiod().iter().chain(w.period()).map(|d| d.abs()).max().unwrap_or(0);
                if top > c {
                    return Err(Error::DigitOutOfRange(top as i64).into());
                }
            }
            let y = if exact { normalize_exact(&f, &w, base.cap)? } else { normalize(&f, &w, state_cap)? };
            writeln!(o, "{y}").unwrap();
        }
        Command::Online { digits, base, n, delay } => {
            let (f, _) = base.exact()?;
            if delay {
                writeln!(o, "{}", online_delay(&f)).unwrap();
            } else {
                let x = parse_digits(digits.trim_start_matches('.'))?;
                let run = online_run(&f, &x, n)?;
                writeln!(o, "{}", format_digits(&run.output)).unwrap();
            }
        }
        Command::Entropy { base } => {
            let (f, _) = base.exact()?;
            let h = shift_automaton(&base)?.entropy()?;
            writeln!(o, "entropy {h:.12}").unwrap();
            writeln!(o, "log-beta {:.12}", f.beta_f64().ln()).unwrap();
        }
        Command::Selftest => {
            let reports = selftest::run_all();
            for r in &reports {
                writeln!(o, "{r}").unwrap();
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(o, "{passed} of {} criteria passed", reports.len()).unwrap();
            return Ok(if passed == reports.len() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn shift_automaton(base: &BaseArgs) -> std::result::Result<Automaton, Failure> {
    let (f, sign) = base.exact()?;
    Ok(match sign {
        BaseSign::Negative => build_shift_automaton(&f, base.cap)?,
        BaseSign::Positive => beta_shift_automaton(&f, base.cap)?,
    })
}

fn automaton_text(a: &Automaton) -> String {
    let mut s = String::new();
    let list = |v: Vec<usize>| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(s, "states {}", a.num_states()).unwrap();
    writeln!(s, "alphabet {}..{}", a.alphabet().start(), a.alphabet().end()).unwrap();
    writeln!(s, "initial {}", list(a.initial().to_vec())).unwrap();
    writeln!(s, "final {}", list((0..a.num_states()).filter(|&q| a.is_final(q)).collect())).unwrap();
    for t in a.transitions() {
        writeln!(s, "{} {} {}", t.from, t.label, t.to).unwrap();
    }
    s
}

/// Digits of `x` under the (-beta)- or beta-transformation for a rational
/// stand-in of beta.
fn float_expand(beta: &BigRational, sign: BaseSign, x: Rat, n: usize) -> Result<String> {
    let one = BigRational::one();
    let mut x = x;
    let mut digits = Vec::with_capacity(n);
    match sign {
        BaseSign::Negative => {
            let shift = beta / (beta + &one);
            let lo = -shift.clone();
            let hi = &one / (beta + &one);
            if x < lo || x >= hi {
                return Err(Error::OutOfInterval);
            }
            for _ in 0..n {
                let y = -(beta * &x);
                let d = (&y + &shift).floor();
                x = y - &d;
                digits.push(d.to_integer().try_into().map_err(|_| Error::OutOfInterval)?);
            }
        }
        BaseSign::Positive => {
            if x.is_negative() || x > one {
                return Err(Error::OutOfInterval);
            }
            for _ in 0..n {
                let y = beta * &x;
                let d = y.floor();
                x = y - &d;
                digits.push(d.to_integer().try_into().map_err(|_| Error::OutOfInterval)?);
            }
        }
    }
    Ok(format_digits(&digits))
}

/// Entry point for the binary.
pub fn main() -> ! {
    let o = run(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    std::process::exit(o.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run(std::iter::once("negabase").chain(args.split_whitespace()))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(cli("intconvert 6 --base 2").stdout, "11010\n");
        assert_eq!(cli("expand 0 --base-neg-poly -1,-1,1 -n 5").stdout, "00000\n");
        assert_eq!(cli("classify --base-neg-poly 1,-3,1").stdout, "finite-type; forbidden: 20\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli("intconvert 6").code, 2);
        assert_eq!(cli("frobnicate").code, 2);
        let bad = cli("expand 1 --base-neg-poly -1,-1,1");
        assert_eq!(bad.code, 1);
        assert!(bad.stderr.contains("OutOfInterval"));
        assert_eq!(cli("online --delay --base-neg-poly -1,-1,1").stdout, "4\n");
        assert_eq!(cli("expand 1/3 --base-pos-poly -1,-1,1").code, 0);
    }

    #[test]
    fn dot_round_trips() {
        let o = cli("automaton --base-neg-poly -1,-1,1 --dot");
        let a = Automaton::from_dot(&o.stdout).unwrap();
        let j = cli("automaton --base-neg-poly -1,-1,1 --json");
        assert_eq!(Automaton::from_json(&j.stdout).unwrap().to_dot(), a.to_dot());
    }

    #[test]
    fn normalize_and_float() {
        assert_eq!(cli("normalize 0(01) --base 2").stdout, "1(10)\n");
        assert_eq!(cli("normalize 0(01) --base 2 --exact").stdout, "1(10)\n");
        let f = cli("expand 1/4 --base-float 1.618 -n 6");
        assert_eq!(f.code, 0);
        assert!(f.stderr.contains("inexact"));
    }

    #[test]
    fn deterministic_output() {
        for args in ["entropy --base-neg-poly 1,-3,1", "automaton --base 2", "expand 1/7 --base 3"] {
            assert_eq!(cli(args), cli(args));
        }
    }
}
