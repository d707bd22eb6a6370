use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wreathsf::cyclotomic::Cyclotomic;
use wreathsf::group::{builtin, load_group};
use wreathsf::lr::{lr_coeff_oracle, pieri};
use wreathsf::partition::{colored_partitions_of, partitions_of};
use wreathsf::symfunc::skew_schur_poly;
use wreathsf::tableau::{kostka, Content, Word};
use wreathsf::{
    colored_lr, lr_coeff, Basis, ColoredPartition, Error, GroupData, Partition, PieriMode, Result, SkewShape,
    SymAlgebra, SymFunc, Tableau, WreathRing, WreathSymFunc,
};

mod expr;

#[derive(Parser)]
#[command(name = "wreathsf", version, about = "Exact symmetric functions and wreath product character tables")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest degree for which transition matrices are built.
    #[arg(long, global = true, env = "WREATHSF_DEGREE_CAP", default_value_t = 8)]
    degree_cap: usize,

    /// Directory for persisting transition matrices between runs.
    #[arg(long, global = true, env = "WREATHSF_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GroupArgs {
    /// Built-in group: trivial, z2, z3, z4, s3.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    group: Option<String>,

    /// JSON group description (name, order, exponent, classes, table).
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GroupArgs {
    fn load(&self) -> Result<GroupData> {
        match (&self.group, &self.file) {
            (Some(name), _) => builtin(name),
            (None, Some(path)) => load_group(&std::fs::read_to_string(path)?),
            (None, None) => Err(Error::InvalidInput("either --group or --file is required".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Conjugate (transpose) of a partition, e.g. `conjugate 4,3,2,2,1`.
    Conjugate { partition: Partition },

    /// All partitions of n, or colored partitions with --colors.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        colors: usize,
    },

    /// Number of semistandard tableaux of shape outer/inner with the given content.
    Kostka {
        #[arg(long, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        inner: Partition,
        /// Multiplicities of 1, 2, ..., comma separated; need not be decreasing.
        #[arg(long, allow_hyphen_values = true)]
        content: String,
    },

    /// Reading word of a tableau, rows read right to left from the bottom.
    Word {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "file")]
        outer: Option<Partition>,
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        inner: Partition,
        /// Rows separated by `/`, entries by `,`, e.g. `1,1,2/2,3`.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "file")]
        rows: Option<String>,
        /// Tableau JSON document {"outer", "inner", "rows"}.
        #[arg(long, conflicts_with_all = ["outer", "rows"])]
        file: Option<PathBuf>,
    },

    /// Whether a word is a lattice permutation.
    Lattice {
        /// Digits (`1123`) or comma separated symbols (`1,1,10`).
        word: String,
    },

    /// Skew Schur polynomial s_{outer/inner} in the given number of variables.
    SchurPoly {
        #[arg(long, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        inner: Partition,
        #[arg(long)]
        vars: usize,
    },

    /// Change of basis among m, e, h, p, s.
    Convert {
        /// Expression such as `s[2,1] - 2*s[3]`, or a bare partition with --from.
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        from: Option<Basis>,
        #[arg(long)]
        to: Basis,
    },

    /// Sesquilinear inner product of two wreath symmetric functions.
    Inner {
        #[command(flatten)]
        group: GroupArgs,
        /// Expression in p (characters), P (classes) or S, e.g. `S[1;1] + 2*P[2;-]`.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },

    /// Littlewood-Richardson coefficient c^outer_{inner,content}; colored shapes use `;`.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        outer: String,
        #[arg(long, allow_hyphen_values = true)]
        inner: String,
        #[arg(long, allow_hyphen_values = true)]
        content: String,
        /// Recompute through polynomial multiplication.
        #[arg(long)]
        oracle: bool,
    },

    /// Shapes obtained by adding a strip of m cells to every color.
    Pieri {
        #[arg(long, allow_hyphen_values = true)]
        shape: ColoredPartition,
        /// Strip sizes, one per color, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },

    /// Check a group's class data and character table.
    GroupValidate {
        #[command(flatten)]
        group: GroupArgs,
    },

    /// Character table of the wreath product of a group with S_n.
    Chartable {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        n: usize,
    },

    /// Dimension of the irreducible indexed by a colored partition.
    Dim {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        shape: ColoredPartition,
    },

    /// Wreath Schur function expanded in character power sums.
    SchurP {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        shape: ColoredPartition,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Row,
    Column,
}

impl From<ModeArg> for PieriMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Row => PieriMode::Row,
            ModeArg::Column => PieriMode::Column,
        }
    }
}

/// What a command produced: human text and the JSON value.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output { text: text.into(), json })
}

fn parse_counts(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("`{s}` is not a non-negative integer"))))
        .collect()
}

fn parse_word(text: &str) -> Result<Word> {
    let symbols = if text.contains(',') {
        parse_counts(text)?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("`{c}` is not a digit"))))
            .collect::<Result<_>>()?
    };
    if symbols.contains(&0) {
        return Err(Error::Parse("word symbols start at 1".into()));
    }
    Ok(Word(symbols))
}

fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split('/').map(parse_counts).collect()
}

fn symfunc_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> =
        f.coeffs().iter().map(|(p, c)| json!({"index": p.to_string(), "coeff": c.to_string()})).collect();
    json!({"basis": f.basis().to_string(), "degree": f.degree(), "terms": terms})
}

fn wreath_json(f: &WreathSymFunc) -> Result<Value> {
    let exponent = f.group().exponent();
    let terms = f
        .coeffs()
        .iter()
        .map(|(p, c)| {
            let c = c.lift(exponent).unwrap_or_else(|_| c.clone());
            Ok(json!({"index": p.to_string(), "coeff": serde_json::to_value(c.to_doc()?)?}))
        })
        .collect::<Result<Vec<Value>>>()?;
    Ok(json!({"group": f.group().name(), "basis": f.basis().to_string(), "degree": f.degree(), "terms": terms}))
}

fn cyclotomic_json(c: &Cyclotomic, exponent: u32) -> Result<Value> {
    let c = c.lift(exponent).unwrap_or_else(|_| c.clone());
    Ok(serde_json::to_value(c.to_doc()?)?)
}

fn algebra(cli: &Cli) -> Arc<SymAlgebra> {
    let alg = SymAlgebra::new(cli.degree_cap);
    Arc::new(match &cli.cache_dir {
        Some(dir) => alg.with_cache_dir(dir),
        None => alg,
    })
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Conjugate { partition } => {
            let c = partition.conjugate();
            out(c.to_string(), json!({"partition": partition.to_string(), "conjugate": c.to_string()}))
        }
        Command::Partitions { n, colors } => {
            let labels: Vec<String> = if *colors == 1 {
                partitions_of(*n).iter().map(ToString::to_string).collect()
            } else {
                colored_partitions_of(*n, *colors)?.iter().map(ToString::to_string).collect()
            };
            out(labels.join("\n"), json!({"n": n, "colors": colors, "partitions": labels}))
        }
        Command::Kostka { shape, inner, content } => {
            let skew = SkewShape::new(shape.clone(), inner.clone())?;
            let k = kostka(&skew, &Content::new(parse_counts(content)?))?;
            out(k.to_string(), json!({"kostka": k}))
        }
        Command::Word { outer, inner, rows, file } => {
            let tableau = match file {
                Some(path) => serde_json::from_str::<Tableau>(&std::fs::read_to_string(path)?)?,
                None => {
                    let outer = outer.clone().expect("clap enforces --outer");
                    let rows = parse_rows(rows.as_deref().expect("clap enforces --rows"))?;
                    Tableau::new(SkewShape::new(outer, inner.clone())?, rows)?
                }
            };
            let word = tableau.word();
            out(word.to_string(), json!({"word": word.to_string(), "lattice": word.is_lattice()}))
        }
        Command::Lattice { word } => {
            let w = parse_word(word)?;
            out(w.is_lattice().to_string(), json!({"word": w.to_string(), "lattice": w.is_lattice()}))
        }
        Command::SchurPoly { shape, inner, vars } => {
            let poly = skew_schur_poly(&SkewShape::new(shape.clone(), inner.clone())?, *vars)?;
            let terms: Vec<Value> = poly
                .terms()
                .iter()
                .map(|(e, c)| json!({"exponent": e, "coeff": c.to_string()}))
                .collect();
            out(poly.to_string(), json!({"vars": vars, "terms": terms}))
        }
        Command::Convert { element, from, to } => {
            let alg = algebra(cli);
            let f = expr::parse_symfunc(element, *from)?;
            if let Some(from) = from {
                if *from != f.basis() {
                    return Err(Error::InvalidInput(format!("--from {from} disagrees with the expression basis {}", f.basis())));
                }
            }
            let g = alg.to_basis(&f, *to)?;
            out(g.to_string(), symfunc_json(&g))
        }
        Command::Inner { group, left, right } => {
            let ring = WreathRing::with_algebra(group.load()?, algebra(cli));
            let f = expr::parse_wreath(&ring, left)?;
            let g = expr::parse_wreath(&ring, right)?;
            let value = ring.sesqui_inner(&f, &g)?;
            let exponent = ring.group().exponent();
            out(value.render_at(exponent), json!({"value": cyclotomic_json(&value, exponent)?}))
        }
        Command::Lr { outer, inner, content, oracle } => {
            let colored = [outer, inner, content].iter().any(|s| s.contains(';'));
            let c = if colored {
                let parse = |s: &str| s.parse::<ColoredPartition>();
                if *oracle {
                    return Err(Error::InvalidInput("--oracle supports uncolored partitions only".into()));
                }
                colored_lr(&parse(outer)?, &parse(inner)?, &parse(content)?)?
            } else {
                let (l, m, n) = (outer.parse::<Partition>()?, inner.parse::<Partition>()?, content.parse::<Partition>()?);
                if *oracle {
                    lr_coeff_oracle(&algebra(cli), &l, &m, &n)?
                } else {
                    lr_coeff(&l, &m, &n)
                }
            };
            out(c.to_string(), json!({"coefficient": c}))
        }
        Command::Pieri { shape, m, mode } => {
            let shapes: Vec<String> =
                pieri(shape, &parse_counts(m)?, (*mode).into())?.iter().map(ToString::to_string).collect();
            out(shapes.join("\n"), json!({"shapes": shapes}))
        }
        Command::GroupValidate { group } => {
            let g = group.load()?;
            let text = format!("valid: {} (order {}, {} classes)", g.name(), g.order(), g.rank());
            out(text, json!({"group": g.name(), "valid": true, "order": g.order(), "classes": g.rank()}))
        }
        Command::Chartable { group, n } => {
            let ring = WreathRing::with_algebra(group.load()?, algebra(cli));
            let table = ring.character_table(*n)?;
            let text = table.render_text(ring.group().exponent());
            out(text.trim_end(), serde_json::to_value(table.to_doc()?)?)
        }
        Command::Dim { group, shape } => {
            let ring = WreathRing::with_algebra(group.load()?, algebra(cli));
            let d = ring.dimension(shape)?;
            let value = match u64::try_from(&d) {
                Ok(v) => json!(v),
                Err(_) => json!(d.to_string()),
            };
            out(d.to_string(), json!({"dimension": value}))
        }
        Command::SchurP { group, shape } => {
            let ring = WreathRing::with_algebra(group.load()?, algebra(cli));
            let f = ring.wreath_schur(shape)?;
            out(f.to_string(), wreath_json(&f)?)
        }
    }
}

fn error_json(err: &Error) -> Value {
    let mut obj = json!({"kind": err.kind(), "message": err.to_string()});
    if let Error::ValidationFailed(report) = err {
        obj["violations"] = json!(report.violations.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    json!({ "error": obj })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            match cli.format {
                Format::Text => println!("{}", output.text),
                Format::Json => println!("{}", output.json),
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            match cli.format {
                Format::Text => eprintln!("error: {err}"),
                Format::Json => println!("{}", error_json(&err)),
            }
            ExitCode::from(1)
        }
    }
}
