//! The `galleries` command line: parses arguments, dispatches to the
//! library and renders results as text, JSON, DOT or SVG.

mod emit;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use gallery_crystal::affine::{appendix_check, crossing_sets, random_gallery};
use gallery_crystal::crystal::{apply_repeated, i_signature, signature_reduction};
use gallery_crystal::gallery::{check_shape, parse_shape};
use gallery_crystal::graph::{connected_component, decompose, generate_b_lambda, weyl_dimension};
use gallery_crystal::mv::{fiber, image_weights, phi, MvLabel};
use gallery_crystal::plactic::{equivalent, normal_form, PlacticOracle};
use gallery_crystal::{DominantWeight, Gallery, Rank, Word};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

/// Words the plactic oracle may index before the request is refused.
const ORACLE_LIMIT: u128 = 20_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] gallery_crystal::Error),
    #[error("{0}")]
    Usage(String),
    #[error("SVG output is only available for rank 3, got rank {0}")]
    SvgRankUnsupported(usize),
    #[error("oracle search over {0} words exceeds the limit of {ORACLE_LIMIT}")]
    SearchTooLarge(u128),
    #[error("{0}")]
    AppendixViolation(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Usage(_) => "UsageError",
            CliError::SvgRankUnsupported(_) => "SvgRankUnsupported",
            CliError::SearchTooLarge(_) => "SearchTooLarge",
            CliError::AppendixViolation(_) => "AppendixViolation",
            CliError::Io(_) => "IoError",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    F,
    E,
}

#[derive(Debug, Parser)]
#[command(name = "galleries", version, about = "Crystals of galleries for SL_n")]
struct Cli {
    /// Rank n of SL_n (alphabet 1..n).
    #[arg(long, global = true)]
    rank: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a gallery and print it canonically.
    Validate {
        gallery: String,
    },
    /// Word of a gallery.
    Word {
        gallery: String,
    },
    /// Gallery of a word.
    FromWord {
        word: String,
    },
    /// Product of two galleries, the first displayed on the left.
    Concat {
        left: String,
        right: String,
    },
    Weight {
        gallery: String,
    },
    /// Whether the path stays in the dominant chamber.
    Dominant {
        gallery: String,
    },
    /// i-signature and its reduction.
    Signature {
        #[arg(long = "i")]
        i: usize,
        gallery: String,
    },
    /// Apply a root operator repeatedly; prints 0 for the crystal's zero.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long = "i")]
        i: usize,
        #[arg(long, default_value_t = 1)]
        times: usize,
        gallery: String,
    },
    /// Semistandard tableau equivalent to a gallery.
    NormalForm {
        gallery: String,
    },
    Equivalent {
        first: String,
        second: String,
    },
    /// Plactic classes of all words up to a length, by brute-force rewriting.
    OracleClasses {
        #[arg(long)]
        max_len: usize,
    },
    /// Connected component of a gallery.
    Component {
        gallery: String,
    },
    /// Crystal of highest weight lambda, given by fundamental coordinates.
    Blambda {
        #[arg(long)]
        lambda: String,
    },
    /// Highest weights of the components of all galleries of a shape.
    Decompose {
        #[arg(long)]
        shape: String,
    },
    /// MV-cycle label of a gallery.
    Phi {
        gallery: String,
    },
    /// Galleries of a shape with a given label.
    Fiber {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        shape: String,
    },
    /// Number of components per highest weight.
    ImageWeights {
        #[arg(long)]
        shape: String,
    },
    /// Affine roots crossed along each path segment.
    Crossings {
        gallery: String,
    },
    /// Checks for inserting a full column word between two galleries.
    AppendixCheck {
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        delta: Option<String>,
        /// Random pairs to test when no gallery is given.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Maximal number of columns of random galleries.
        #[arg(long, default_value_t = 6)]
        max_columns: usize,
    },
    /// Vertices of the lattice path of a gallery.
    Path {
        gallery: String,
    },
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => report(err, &CliError::Io(e)),
        },
        Err((partial, e)) => {
            let _ = out.write_all(partial.as_bytes());
            report(err, &e)
        }
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> u8 {
    let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
    let _ = writeln!(err, "{body}");
    e.exit_code()
}

type Outcome = Result<String, (String, CliError)>;

fn execute(cli: &Cli) -> Outcome {
    let rank = match cli.rank {
        Some(n) => Rank::new(n).map_err(|e| (String::new(), e.into()))?,
        None => return Err((String::new(), CliError::Usage("--rank is required".into()))),
    };
    let ctx = Context { rank, format: cli.format, seed: cli.seed.unwrap_or(0) };
    ctx.dispatch(&cli.command)
}

struct Context {
    rank: Rank,
    format: Format,
    seed: u64,
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn json_line(value: Value) -> String {
    format!("{value}\n")
}

impl Context {
    fn gallery(&self, text: &str) -> Result<Gallery, CliError> {
        Ok(Gallery::parse(self.rank, text)?)
    }

    fn lambda(&self, text: &str) -> Result<DominantWeight, CliError> {
        let coords = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| gallery_crystal::Error::Parse(format!("bad coordinate {t:?} in lambda")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        Ok(DominantWeight::new(self.rank, coords)?)
    }

    fn shape(&self, text: &str) -> Result<Vec<usize>, CliError> {
        let shape = parse_shape(text)?;
        check_shape(self.rank, &shape)?;
        Ok(shape)
    }

    /// Rejects formats a command cannot render.
    fn allow(&self, formats: &[Format]) -> Result<(), CliError> {
        if formats.contains(&self.format) {
            Ok(())
        } else {
            Err(CliError::Usage(format!("format {:?} is not available for this command", self.format).to_lowercase()))
        }
    }

    fn dispatch(&self, command: &Command) -> Outcome {
        self.render(command).map_err(|e| (String::new(), e)).and_then(|r| r)
    }

    fn render(&self, command: &Command) -> Result<Outcome, CliError> {
        use Format::{Dot, Json, Svg, Text};
        let text_json = [Text, Json];
        let fmt = self.format;
        if !matches!(
            command,
            Command::Component { .. } | Command::Blambda { .. } | Command::Path { .. } | Command::AppendixCheck { .. }
        ) {
            self.allow(&text_json)?;
        }
        let body = match command {
            Command::Validate { gallery } => {
                let g = self.gallery(gallery)?;
                match fmt {
                    Json => json_line(json!({ "valid": true, "gallery": g.to_string(), "shape": g.shape() })),
                    _ => lines([g.to_string()]),
                }
            }
            Command::Word { gallery } => {
                let w = self.gallery(gallery)?.word();
                match fmt {
                    Json => json_line(json!(w.letters())),
                    _ => lines([w.to_string()]),
                }
            }
            Command::FromWord { word } => {
                let g = Gallery::from_word(self.rank, &Word::parse(self.rank, word)?)?;
                match fmt {
                    Json => json_line(json!(g.to_string())),
                    _ => lines([g.to_string()]),
                }
            }
            Command::Concat { left, right } => {
                let g = Gallery::concat(&self.gallery(left)?, &self.gallery(right)?)?;
                match fmt {
                    Json => json_line(json!(g.to_string())),
                    _ => lines([g.to_string()]),
                }
            }
            Command::Weight { gallery } => {
                let w = self.gallery(gallery)?.weight();
                match fmt {
                    Json => json_line(json!(w.counts())),
                    _ => lines([w.to_string()]),
                }
            }
            Command::Dominant { gallery } => {
                let d = self.gallery(gallery)?.is_dominant();
                match fmt {
                    Json => json_line(json!(d)),
                    _ => lines([d.to_string()]),
                }
            }
            Command::Signature { i, gallery } => {
                let g = self.gallery(gallery)?;
                let tags: Vec<String> = i_signature(&g, *i)?.iter().map(ToString::to_string).collect();
                let red = signature_reduction(&g, *i)?;
                match fmt {
                    Json => json_line(json!({
                        "tags": tags,
                        "plus": red.plus,
                        "minus": red.minus,
                        "phi": red.s(),
                        "epsilon": red.r(),
                    })),
                    _ => lines([tags.join(" "), format!("phi {} epsilon {}", red.s(), red.r())]),
                }
            }
            Command::Apply { op, i, times, gallery } => {
                let g = self.gallery(gallery)?;
                let result = apply_repeated(&g, *i, *times, *op == Op::E)?;
                match fmt {
                    Json => json_line(result.map_or(Value::Null, |h| json!(h.to_string()))),
                    _ => lines([result.map_or_else(|| "0".to_string(), |h| h.to_string())]),
                }
            }
            Command::NormalForm { gallery } => {
                let t = normal_form(&self.gallery(gallery)?);
                match fmt {
                    Json => json_line(json!(t.to_string())),
                    _ => lines([t.to_string()]),
                }
            }
            Command::Equivalent { first, second } => {
                let eq = equivalent(&self.gallery(first)?, &self.gallery(second)?)?;
                match fmt {
                    Json => json_line(json!(eq)),
                    _ => lines([eq.to_string()]),
                }
            }
            Command::OracleClasses { max_len } => {
                let n = self.rank.get() as u128;
                let bound = *max_len as u32 + self.rank.get() as u32;
                let total = (0..=bound).try_fold(0u128, |acc, len| acc.checked_add(n.checked_pow(len)?));
                match total {
                    Some(t) if t <= ORACLE_LIMIT => {}
                    t => return Err(CliError::SearchTooLarge(t.unwrap_or(u128::MAX))),
                }
                let classes = PlacticOracle::new(self.rank, *max_len).classes();
                match fmt {
                    Json => json_line(json!(classes
                        .iter()
                        .map(|c| c.iter().map(|w| w.letters().to_vec()).collect::<Vec<_>>())
                        .collect::<Vec<_>>())),
                    _ => lines(classes.iter().map(|c| {
                        c.iter()
                            .map(|w| if w.is_empty() { "∅".to_string() } else { w.to_string() })
                            .collect::<Vec<_>>()
                            .join(" ~ ")
                    })),
                }
            }
            Command::Component { gallery } => {
                self.allow(&[Text, Json, Dot])?;
                emit::graph(&connected_component(&self.gallery(gallery)?), fmt)
            }
            Command::Blambda { lambda } => {
                self.allow(&[Text, Json, Dot])?;
                emit::graph(&generate_b_lambda(&self.lambda(lambda)?), fmt)
            }
            Command::Decompose { shape } => {
                let d = decompose(self.rank, &self.shape(shape)?)?;
                match fmt {
                    Json => json_line(json!({
                        "rank": self.rank.get(),
                        "shape": d.shape,
                        "total": d.total,
                        "entries": d.entries.iter().map(|e| json!({
                            "lambda": e.lambda.coords(),
                            "multiplicity": e.multiplicity,
                            "dimension": weyl_dimension(&e.lambda).to_string(),
                            "representatives": e.representatives.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    })),
                    _ => {
                        let mut out = vec![format!("total {}", d.total)];
                        out.extend(d.entries.iter().map(|e| {
                            format!(
                                "{}: multiplicity {}, dimension {}",
                                e.lambda,
                                e.multiplicity,
                                weyl_dimension(&e.lambda)
                            )
                        }));
                        lines(out)
                    }
                }
            }
            Command::Phi { gallery } => {
                let label = phi(&self.gallery(gallery)?);
                match fmt {
                    Json => json_line(emit::label_json(&label)),
                    _ => lines([emit::label_text(&label)]),
                }
            }
            Command::Fiber { lambda, tableau, shape } => {
                let label = MvLabel::new(self.lambda(lambda)?, self.gallery(tableau)?)?;
                let fib = fiber(&label, &self.shape(shape)?)?;
                match fmt {
                    Json => json_line(json!(fib.iter().map(ToString::to_string).collect::<Vec<_>>())),
                    _ => lines(fib.iter().map(ToString::to_string)),
                }
            }
            Command::ImageWeights { shape } => {
                let weights = image_weights(self.rank, &self.shape(shape)?)?;
                match fmt {
                    Json => json_line(json!(weights
                        .iter()
                        .map(|(l, m)| json!({ "lambda": l.coords(), "multiplicity": m }))
                        .collect::<Vec<_>>())),
                    _ => lines(weights.iter().map(|(l, m)| format!("{l}: {m}"))),
                }
            }
            Command::Crossings { gallery } => {
                let sets = crossing_sets(&self.gallery(gallery)?);
                match fmt {
                    Json => json_line(emit::crossings_json(&sets)),
                    _ => lines(sets.segments.iter().enumerate().map(|(k, s)| {
                        let roots: Vec<String> = s.iter().map(ToString::to_string).collect();
                        format!("{k}: {}", roots.join(" ")).trim_end().to_string()
                    })),
                }
            }
            Command::AppendixCheck { gamma, delta, cases, max_columns } => {
                self.allow(&text_json)?;
                return self.appendix(gamma.as_deref(), delta.as_deref(), *cases, *max_columns);
            }
            Command::Path { gallery } => {
                self.allow(&[Text, Json, Svg])?;
                let g = self.gallery(gallery)?;
                match fmt {
                    Json => json_line(
                        json!({ "vertices": g.path_vertices().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>() }),
                    ),
                    Svg => emit::svg_path(&g)?,
                    _ => lines(g.path_vertices().iter().map(|p| {
                        let c: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
                        format!("({})", c.join(","))
                    })),
                }
            }
        };
        Ok(Ok(body))
    }

    fn appendix(
        &self,
        gamma: Option<&str>,
        delta: Option<&str>,
        cases: usize,
        max_columns: usize,
    ) -> Result<Outcome, CliError> {
        if gamma.is_some() || delta.is_some() {
            let g = self.gallery(gamma.unwrap_or(""))?;
            let d = self.gallery(delta.unwrap_or(""))?;
            let report = appendix_check(&g, &d)?;
            let body = match self.format {
                Format::Json => json_line(emit::appendix_json(&g, &d, &report)),
                _ => emit::appendix_text(&g, &d, &report),
            };
            return Ok(if report.holds() {
                Ok(body)
            } else {
                Err((body, CliError::AppendixViolation(format!("checks fail for gamma \"{g}\", delta \"{d}\""))))
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for case in 0..cases {
            let g = random_gallery(&mut rng, self.rank, max_columns);
            let d = random_gallery(&mut rng, self.rank, max_columns);
            let report = appendix_check(&g, &d)?;
            if !report.holds() {
                let body = match self.format {
                    Format::Json => json_line(emit::appendix_json(&g, &d, &report)),
                    _ => emit::appendix_text(&g, &d, &report),
                };
                return Ok(Err((
                    body,
                    CliError::AppendixViolation(format!("case {case} with seed {} fails", self.seed)),
                )));
            }
        }
        Ok(Ok(match self.format {
            Format::Json => json_line(json!({ "holds": true, "cases": cases, "seed": self.seed })),
            _ => lines([format!("holds: {cases} random cases, seed {}", self.seed)]),
        }))
    }
}
