//! Command-line front end.
//!
//! Commands run in-process and return an [`Outcome`] holding the exit code
//! and both output streams; the binary only prints them.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 property violation.

pub mod dot;
pub mod input;
pub mod json;

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{
    color_name, exact_chromatic, greedy_coloring, is_proper, paper_fixture_coloring, periodic_coloring,
    row_periodicity, Chromatic, Coloring,
};
use crate::error::Error;
use crate::prefixcode::{
    depth_two_coloring, first_conflict, kraft_construct, kraft_sum, leaf_color_repetition, CodeTree, Codeword,
};
use crate::structure::{AdjacencyMode, TriangularStructure};

use self::dot::{structure_dot, tree_dot, StructureDotOptions};
use self::json::{StructureDocument, Verification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tripath",
    version,
    about = "Triangular closed-path colorings and prefix-code checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build, color and verify an order-n triangular structure.
    Tri(TriArgs),
    /// Kraft sums, prefix checks, code construction and tree coloring.
    Kraft(KraftArgs),
    /// Check a JSON structure document.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Path,
    Clique,
}

impl From<ModeArg> for AdjacencyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Path => AdjacencyMode::PathAlongLines,
            ModeArg::Clique => AdjacencyMode::CliquePerLine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    /// The hand-drawn five-color assignment (order 4 only).
    Paper,
    /// Three colors, rows repeating with period 2.
    Periodic,
    /// First-fit in vertex order.
    Greedy,
    /// Minimum palette by backtracking search.
    Exact,
}

impl Strategy {
    fn as_str(self) -> &'static str {
        match self {
            Strategy::Paper => "paper",
            Strategy::Periodic => "periodic",
            Strategy::Greedy => "greedy",
            Strategy::Exact => "exact",
        }
    }

    /// Strategies whose colorings are expected to repeat by row parity.
    fn promises_row_periodicity(self) -> bool {
        matches!(self, Strategy::Paper | Strategy::Periodic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct TriArgs {
    /// Points per line.
    #[arg(short = 'n', long = "order")]
    pub order: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Path)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Strategy::Periodic)]
    pub strategy: Strategy,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Leave the coloring out of the emitted document.
    #[arg(long)]
    pub no_colors: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KraftAction {
    Sum,
    Check,
    Construct,
    Colortree,
}

#[derive(Debug, Args)]
pub struct KraftArgs {
    pub action: KraftAction,
    /// Comma-separated codeword lengths.
    #[arg(conflicts_with_all = ["words", "file"])]
    pub lengths: Option<String>,
    /// Comma-separated codewords.
    #[arg(long, conflicts_with = "file")]
    pub words: Option<String>,
    /// Codeword file: one word per line, `#` comments.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Code alphabet size (sum only).
    #[arg(long, default_value_t = 2)]
    pub radix: u32,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Document path, or `-` for standard input.
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderTarget {
    StructureDot,
    TreeDot,
    Json,
}

/// What to emit and how to name colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: RenderTarget,
    pub include_colors: bool,
    pub color_name_table: Vec<String>,
}

impl RenderSpec {
    /// Name table covering `0..palette_size`.
    pub fn for_palette(target: RenderTarget, include_colors: bool, palette_size: u32) -> Self {
        let color_name_table = (0..palette_size).map(|k| color_name(k).into_owned()).collect();
        RenderSpec {
            target,
            include_colors,
            color_name_table,
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Help
/// and version requests exit 0; any other argument error exits 1.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Tri(args) => cmd_tri(args),
        Command::Kraft(args) => cmd_kraft(args),
        Command::Validate(args) => cmd_validate(args),
    }
}

pub fn cmd_tri(args: &TriArgs) -> Outcome {
    let s = match TriangularStructure::build(args.order) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let mode = AdjacencyMode::from(args.mode);
    let g = s.to_graph(mode);
    let coloring = match color_with(&s, mode, args.strategy) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let proper = is_proper(&g, &coloring).expect("coloring covers the structure");
    let row_periodic = row_periodicity(&s, &coloring).expect("coloring covers the structure");

    let mut stderr = format!(
        "order {}: {} points, {} edges ({} adjacency), {} colors via {}, {}, {}\n",
        s.order(),
        s.points().len(),
        g.edge_count(),
        mode.as_str(),
        coloring.palette_size(),
        args.strategy.as_str(),
        if proper { "proper" } else { "NOT proper" },
        if row_periodic {
            "row-periodic"
        } else {
            "not row-periodic"
        },
    );
    let mut code = EXIT_OK;
    if !proper {
        code = EXIT_VIOLATION;
        stderr.push_str("verification failed: adjacent vertices share a color\n");
    }
    if args.strategy.promises_row_periodicity() && !row_periodic {
        code = EXIT_VIOLATION;
        stderr.push_str("verification failed: rows of equal parity differ\n");
    }

    let target = match args.emit {
        Emit::Dot => RenderTarget::StructureDot,
        Emit::Json => RenderTarget::Json,
    };
    let spec = RenderSpec::for_palette(target, !args.no_colors, coloring.palette_size());
    let stdout = match spec.target {
        RenderTarget::Json => {
            let mut doc = StructureDocument::new(s.clone());
            doc.graph = Some(g);
            if spec.include_colors {
                doc.coloring = Some(coloring);
                doc.strategy = Some(args.strategy.as_str().to_owned());
                doc.verification = Some(Verification { proper, row_periodic });
            }
            doc.to_json()
        }
        _ => structure_dot(
            &s,
            &g,
            &StructureDotOptions {
                coloring: spec.include_colors.then_some(&coloring),
                color_names: &spec.color_name_table,
                fixture_letters: args.strategy == Strategy::Paper,
            },
        ),
    };
    Outcome { code, stdout, stderr }
}

fn color_with(s: &TriangularStructure, mode: AdjacencyMode, strategy: Strategy) -> Result<Coloring, String> {
    match strategy {
        Strategy::Paper => {
            paper_fixture_coloring(s.order()).map_err(|_| format!("strategy paper requires -n 4, got -n {}", s.order()))
        }
        Strategy::Periodic => Ok(periodic_coloring(s)),
        Strategy::Greedy => {
            let g = s.to_graph(mode);
            let order: Vec<usize> = (0..g.vertex_count()).collect();
            greedy_coloring(&g, &order).map_err(|e| e.to_string())
        }
        Strategy::Exact => {
            let g = s.to_graph(mode);
            match exact_chromatic(&g, g.max_degree() as u32 + 1).map_err(|e| e.to_string())? {
                Chromatic::Colorable { witness, .. } => Ok(witness),
                Chromatic::Unsatisfiable => unreachable!("max degree + 1 colors always suffice"),
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("reading standard input: {e}"))
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn input_words(args: &KraftArgs) -> Result<Option<Vec<Codeword>>, String> {
    if let Some(list) = &args.words {
        return input::parse_word_list(list).map(Some);
    }
    if let Some(path) = &args.file {
        let text = read_input(path)?;
        return input::parse_word_file(&text)
            .map(Some)
            .map_err(|e| format!("{}: {e}", path.display()));
    }
    Ok(None)
}

fn input_lengths(args: &KraftArgs) -> Result<Option<Vec<u32>>, String> {
    args.lengths.as_deref().map(input::parse_lengths).transpose()
}

pub fn cmd_kraft(args: &KraftArgs) -> Outcome {
    if args.radix != 2 && args.action != KraftAction::Sum {
        return Outcome::usage("--radix applies to `sum` only");
    }
    let words = match input_words(args) {
        Ok(w) => w,
        Err(e) => return Outcome::usage(e),
    };
    let lengths = match input_lengths(args) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e),
    };

    match args.action {
        KraftAction::Sum => {
            let lengths = match (lengths, words) {
                (Some(l), _) => l,
                (None, Some(w)) => w.iter().map(|w| w.len() as u32).collect(),
                (None, None) => return Outcome::usage("sum needs lengths, --words or --file"),
            };
            match kraft_sum(&lengths, args.radix) {
                Ok(sum) if sum.within_unit() => Outcome {
                    code: EXIT_OK,
                    stdout: format!("{sum}\n"),
                    stderr: String::new(),
                },
                Ok(sum) => Outcome {
                    code: EXIT_VIOLATION,
                    stdout: format!("{sum}\n"),
                    stderr: format!("Kraft inequality violated: sum {sum} exceeds 1\n"),
                },
                Err(e) => Outcome::usage(e),
            }
        }
        KraftAction::Check => {
            let Some(words) = words else {
                return Outcome::usage("check needs --words or --file");
            };
            match first_conflict(&words) {
                None => Outcome {
                    code: EXIT_OK,
                    stdout: "prefix-free\n".into(),
                    stderr: String::new(),
                },
                Some(e) => Outcome {
                    code: EXIT_VIOLATION,
                    stdout: format!("not prefix-free: {e}\n"),
                    stderr: String::new(),
                },
            }
        }
        KraftAction::Construct => {
            let Some(lengths) = lengths else {
                return Outcome::usage("construct needs a comma-separated length list");
            };
            match kraft_construct(&lengths) {
                Ok(code) => Outcome {
                    code: EXIT_OK,
                    stdout: code.iter().map(|w| format!("{w}\n")).collect(),
                    stderr: String::new(),
                },
                Err(e @ Error::KraftViolation(_)) => Outcome {
                    code: EXIT_VIOLATION,
                    stdout: String::new(),
                    stderr: format!("{e}\n"),
                },
                Err(e) => Outcome::usage(e),
            }
        }
        KraftAction::Colortree => {
            let words = match (words, lengths) {
                (Some(w), _) => w,
                (None, Some(l)) => match kraft_construct(&l) {
                    Ok(w) => w,
                    Err(e) => {
                        return Outcome {
                            code: EXIT_VIOLATION,
                            stdout: String::new(),
                            stderr: format!("{e}\n"),
                        }
                    }
                },
                (None, None) => return Outcome::usage("colortree needs lengths, --words or --file"),
            };
            let tree = match CodeTree::build(&words) {
                Ok(t) => t,
                Err(e) => {
                    return Outcome {
                        code: EXIT_VIOLATION,
                        stdout: String::new(),
                        stderr: format!("{e}\n"),
                    }
                }
            };
            let colors = depth_two_coloring(&tree);
            let report = leaf_color_repetition(&tree);
            let mut stdout = String::new();
            for leaf in &report.leaves {
                writeln!(
                    stdout,
                    "// C{} = {}: depth {}, {}",
                    leaf.index + 1,
                    leaf.word,
                    leaf.depth,
                    leaf.color.name()
                )
                .unwrap();
            }
            writeln!(stdout, "// same parity, same color: {}", report.same_parity_same_color).unwrap();
            stdout.push_str(&tree_dot(&tree, Some(&colors)));
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr: String::new(),
            }
        }
    }
}

pub fn cmd_validate(args: &ValidateArgs) -> Outcome {
    let text = match read_input(&args.file) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let doc = match StructureDocument::from_json(&text) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(format!("invalid document {e}")),
    };
    let s = &doc.structure;
    let mut stdout = format!(
        "order {}: {} points, {} inclined lines, {} horizontal lines\n",
        s.order(),
        s.points().len(),
        s.inclined_lines().len(),
        s.horizontal_lines().len()
    );
    let graph = doc
        .graph
        .clone()
        .unwrap_or_else(|| s.to_graph(AdjacencyMode::PathAlongLines));
    let mode = graph.mode().unwrap_or_default();
    if doc.graph.is_some() {
        writeln!(
            stdout,
            "graph: {} adjacency, {} edges",
            mode.as_str(),
            graph.edge_count()
        )
        .unwrap();
    }
    let Some(coloring) = &doc.coloring else {
        return Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        };
    };
    let proper = is_proper(&graph, coloring).expect("validated as total");
    let row_periodic = row_periodicity(s, coloring).expect("validated as total");
    writeln!(
        stdout,
        "coloring: {} colors, {} under {} adjacency, {}",
        coloring.palette_size(),
        if proper { "proper" } else { "not proper" },
        mode.as_str(),
        if row_periodic {
            "row-periodic"
        } else {
            "not row-periodic"
        }
    )
    .unwrap();

    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if !proper {
        code = EXIT_VIOLATION;
        stderr.push_str("coloring is not proper\n");
    }
    if let Some(recorded) = doc.verification {
        if recorded != (Verification { proper, row_periodic }) {
            code = EXIT_VIOLATION;
            stderr.push_str("recorded verification does not match the document\n");
        }
    }
    Outcome { code, stdout, stderr }
}
