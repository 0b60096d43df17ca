use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use surfchar::geometry::intersection::reduced_words;
use surfchar::mcg::{Action, MappingClass, SignCharacter};
use surfchar::suites;
use surfchar::trace::{Multicurve, TraceExpression};
use surfchar::valuation::Lamination;
use surfchar::{Error, Result, Surface};

/// Curves, trace expansions and lamination valuations on a closed surface.
///
/// Expression arguments are either a word (its trace is expanded) or
/// `@FILE` holding an expression in the `RATIONAL<TAB>multicurve` format.
#[derive(Parser)]
#[command(name = "surfchar", version)]
struct Cli {
    #[arg(long, global = true, default_value_t = 2)]
    genus: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LaminationArgs {
    /// Lamination file, one `RATIONAL<TAB>word` component per line.
    #[arg(long, conflicts_with = "lamination_inline")]
    lamination: Option<PathBuf>,
    /// Inline lamination, `;`-separated `RATIONAL word` components.
    #[arg(long)]
    lamination_inline: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Geometric intersection number of two curves.
    Intersect { x: String, y: String },
    /// Minimal self-intersection number of a curve.
    SelfIntersect { word: String },
    /// Whether a curve is simple.
    Simple { word: String },
    /// Expansion of a trace in the multicurve basis.
    Expand { word: String },
    /// Product of two expressions in the multicurve basis.
    Multiply { f: String, g: String },
    /// Value of a lamination valuation on an expression.
    Valuate {
        #[command(flatten)]
        lamination: LaminationArgs,
        f: String,
    },
    /// Discreteness of a lamination valuation, with a witness when not.
    Classify {
        #[command(flatten)]
        lamination: LaminationArgs,
    },
    /// Compares `i(delta, alpha)` with `v_delta(t_alpha)`; without `alpha`,
    /// checks every reduced word up to `--max-length`.
    ThurstonCheck {
        delta: String,
        alpha: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_length: usize,
    },
    /// Compares `v(fg)` with `v(f) + v(g)`.
    MultCheck {
        #[command(flatten)]
        lamination: LaminationArgs,
        f: String,
        g: String,
    },
    /// Faces, corners and Euler characteristic of the complement of two simple curves.
    Complement { x: String, y: String },
    /// The normalized lamination of a simple curve.
    Curv { word: String },
    /// A Humphries twist generator, or the images of words under it.
    Twist {
        which: usize,
        words: Vec<String>,
        /// Use the inverse twist.
        #[arg(long)]
        inverse: bool,
    },
    /// Sign action of a character (bits a1 b1 ... ag bg) on an expression.
    H1 { bits: String, f: String },
    /// Checks that a twist or a sign character acts multiplicatively on sampled basis pairs.
    AutomorphismCheck {
        #[arg(long, conflicts_with = "sign", required_unless_present = "sign")]
        twist: Option<usize>,
        #[arg(long)]
        sign: Option<String>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Checks `phi a phi^-1 = a phi_*^-1` on the bounded basis.
    SemidirectCheck {
        #[arg(long)]
        twist: usize,
        #[arg(long)]
        sign: String,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Numerical rank of multicurve traces sampled at random representations.
    BasisRank {
        #[arg(required = true)]
        multicurves: Vec<String>,
        #[arg(long, default_value_t = 12)]
        trials: usize,
    },
    /// Runs an acceptance suite by number or name, or `all`.
    Suite { name: String },
}

struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn line(text: impl ToString) -> Output {
        Output::check(text, true)
    }

    fn check(text: impl ToString, ok: bool) -> Output {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Output { text, ok }
    }
}

fn expression(s: &Surface, arg: &str) -> Result<TraceExpression> {
    match arg.strip_prefix('@') {
        Some(path) => TraceExpression::parse(s, &read(path)?),
        None => s.expand_trace(&s.parse_word(arg)?),
    }
}

fn read(path: impl AsRef<std::path::Path>) -> Result<String> {
    let path = path.as_ref();
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn lamination(s: &Surface, args: &LaminationArgs) -> Result<Lamination> {
    match (&args.lamination, &args.lamination_inline) {
        (Some(path), _) => Lamination::parse(s, &read(path)?),
        (None, Some(text)) => Lamination::parse_inline(s, text),
        (None, None) => Err(Error::InvalidArgument(
            "one of --lamination or --lamination-inline is required".into(),
        )),
    }
}

fn twist(s: &Surface, which: usize, inverse: bool) -> Result<MappingClass> {
    let t = s.twist_generator(which)?;
    Ok(if inverse { t.inverse() } else { t })
}

fn run(cli: &Cli) -> Result<Output> {
    if cli.genus < 2 {
        return Err(Error::GenusTooSmall(cli.genus));
    }
    let s = &Surface::new(cli.genus)?;
    Ok(match &cli.command {
        Command::Intersect { x, y } => Output::line(s.intersection_number(&s.parse_class(x)?, &s.parse_class(y)?)?),
        Command::SelfIntersect { word } => Output::line(s.self_intersection(&s.parse_class(word)?)?.count),
        Command::Simple { word } => Output::line(s.is_simple(&s.parse_class(word)?)?),
        Command::Expand { word } => Output::line(s.expand_trace(&s.parse_word(word)?)?),
        Command::Multiply { f, g } => Output::line(s.multiply_expressions(&expression(s, f)?, &expression(s, g)?)?),
        Command::Valuate { lamination: l, f } => Output::line(s.valuate(&lamination(s, l)?, &expression(s, f)?)?),
        Command::Classify { lamination: l } => Output::line(s.classify_discrete(&lamination(s, l)?)?),
        Command::ThurstonCheck { delta, alpha, max_length } => {
            let delta = s.parse_class(delta)?;
            match alpha {
                Some(a) => {
                    let r = s.thurston_max_check(&delta, &s.parse_word(a)?)?;
                    Output::check(&r, r.holds())
                }
                None => {
                    let words = reduced_words(s.genus(), *max_length);
                    let failures: Vec<String> = words
                        .par_iter()
                        .map(|w| Ok((w, s.thurston_max_check(&delta, w)?)))
                        .collect::<Result<Vec<_>>>()?
                        .into_iter()
                        .filter(|(_, r)| !r.holds())
                        .map(|(w, r)| format!("{w}\t{r}"))
                        .collect();
                    let mut text = format!("{} checked={} failures={}", failures.is_empty(), words.len(), failures.len());
                    for f in &failures {
                        text.push('\n');
                        text.push_str(f);
                    }
                    Output::check(text, failures.is_empty())
                }
            }
        }
        Command::MultCheck { lamination: l, f, g } => {
            let r = s.multiplicativity_check(&lamination(s, l)?, &expression(s, f)?, &expression(s, g)?)?;
            Output::check(&r, r.holds())
        }
        Command::Complement { x, y } => Output::line(s.complement_report(&s.parse_class(x)?, &s.parse_class(y)?)?),
        Command::Curv { word } => Output::line(s.curv_normalize(&s.parse_class(word)?)?),
        Command::Twist { which, words, inverse } => {
            let t = twist(s, *which, *inverse)?;
            if words.is_empty() {
                Output::line(t.serialize())
            } else {
                let images: Vec<String> = words
                    .iter()
                    .map(|w| Ok(t.apply_to_word(s, &s.parse_word(w)?)?.to_string()))
                    .collect::<Result<_>>()?;
                Output::line(images.join("\n"))
            }
        }
        Command::H1 { bits, f } => Output::line(SignCharacter::parse(s, bits)?.act(s, &expression(s, f)?)),
        Command::AutomorphismCheck { twist: t, sign, trials } => {
            let action = match (t, sign) {
                (Some(which), _) => Action::Twist(twist(s, *which, false)?),
                (None, Some(bits)) => Action::Sign(SignCharacter::parse(s, bits)?),
                (None, None) => Action::Identity,
            };
            let r = s.verify_algebra_automorphism(&action, *trials, cli.seed)?;
            Output::check(&r, r.holds())
        }
        Command::SemidirectCheck { twist: t, sign, bound } => {
            let r = s.semidirect_check(&twist(s, *t, false)?, &SignCharacter::parse(s, sign)?, *bound)?;
            Output::check(&r, r.holds())
        }
        Command::BasisRank { multicurves, trials } => {
            let set: Vec<Multicurve> = multicurves.iter().map(|m| Multicurve::parse(s, m)).collect::<Result<_>>()?;
            let r = s.basis_rank_check(&set, *trials, cli.seed)?;
            Output::check(&r, r.is_full())
        }
        Command::Suite { name } => {
            let numbers: Vec<usize> = if name == "all" {
                (1..=suites::NAMES.len()).collect()
            } else {
                vec![suites::lookup(name)?]
            };
            let mut lines = Vec::new();
            let mut ok = true;
            for n in numbers {
                let r = suites::run(n, cli.seed)?;
                ok &= r.passed;
                lines.push(r.to_string());
            }
            Output::check(lines.join("\n"), ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
