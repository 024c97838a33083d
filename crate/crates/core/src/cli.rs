//! Command-line front end. [`run`] parses arguments and writes to the given
//! streams so it can be driven from tests; the binary is a thin wrapper.

use std::ffi::OsString;
use std::io::{self, Write};
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijections::enumerate_couples;
use crate::complement;
use crate::cubes::{self, CubeGraph, Family};
use crate::error::Error;
use crate::imbalance;
use crate::oracle;
use crate::strings::{self, BitString, CAP_ENV, DEFAULT_CAP};
use crate::Count;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Fibonacci, Lucas and complement cubes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
    /// Largest n for commands that enumerate vertices.
    #[arg(long, global = true, env = CAP_ENV, default_value_t = DEFAULT_CAP)]
    cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gamma,
    Lambda,
    Q,
    Gammabar,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gamma => Family::Fibonacci,
            FamilyArg::Lambda => Family::Lucas,
            FamilyArg::Q => Family::Hypercube,
            FamilyArg::Gammabar => Family::FibComplement,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqName {
    GammaEdges,
    ComplementEdges,
    A235996,
    IrrGamma,
    IrrLambda,
}

#[derive(Debug, Args)]
struct RangeArgs {
    /// A single dimension.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    n: Option<u32>,
    #[arg(long, requires = "to")]
    from: Option<u32>,
    #[arg(long)]
    to: Option<u32>,
}

impl RangeArgs {
    fn range(&self, default_from: u32) -> Result<RangeInclusive<u32>, CliError> {
        match (self.n, self.from, self.to) {
            (Some(n), _, _) => Ok(n..=n),
            (None, from, Some(to)) => {
                let from = from.unwrap_or(default_from);
                if from > to {
                    return Err(CliError::Usage(format!(
                        "--from {from} is larger than --to {to}"
                    )));
                }
                Ok(from..=to)
            }
            _ => Err(CliError::Usage("give --n or --to".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List vertices, or edges with --edges.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        edges: bool,
    },
    /// Vertex and edge counts from the closed forms.
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        range: RangeArgs,
        /// Also count by enumeration and compare.
        #[arg(long)]
        check: bool,
    },
    /// Irregularity.
    Irr {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        check: bool,
    },
    /// Imbalance of the edge {upper, upper + e_dir}; upper must have a 1 at dir.
    Imb {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        dir: u32,
    },
    /// Degree census.
    Degseq {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        check: bool,
    },
    /// Image of a Fibonacci string in the complement, or all image edges.
    Embed {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: Option<String>,
    },
    /// Imbalanced couples of gamma or lambda.
    Couples {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
    },
    /// Run the brute-force identity suite for 0..=n, or --from..=--to.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Print a named sequence starting at n = 1.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[command(flatten)]
        range: RangeArgs,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(Error::InternalMismatch { .. } | Error::Overflow(_)) => EXIT_FAILURE,
            CliError::Lib(_) => EXIT_USAGE,
            CliError::Failed(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// status: 0 on success, 1 when a check fails, 2 on bad input.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        cap: cli.cap,
        out,
        header_written: false,
    };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "fibcube: {e}");
            e.exit_code()
        }
    }
}

trait Record: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

struct Ctx<'a, W: Write> {
    format: Format,
    cap: u32,
    out: &'a mut W,
    header_written: bool,
}

impl<W: Write> Ctx<'_, W> {
    fn emit<R: Record>(&mut self, r: &R) -> Result<(), CliError> {
        match self.format {
            Format::Plain => writeln!(self.out, "{}", r.fields().join("\t"))?,
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string(r).map_err(|e| CliError::Failed(e.to_string()))?
            )?,
            Format::Csv => {
                if !self.header_written {
                    writeln!(self.out, "{}", R::HEADER.join(","))?;
                    self.header_written = true;
                }
                writeln!(self.out, "{}", r.fields().join(","))?;
            }
        }
        Ok(())
    }

    fn check_cap(&self, n: u32) -> Result<(), CliError> {
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap }.into());
        }
        Ok(())
    }

    fn graph(&self, family: Family, n: u32) -> Result<CubeGraph, CliError> {
        Ok(CubeGraph::build_capped(family, n, self.cap)?)
    }

    fn dispatch(&mut self, command: Command) -> Result<i32, CliError> {
        match command {
            Command::Gen { family, n, edges } => self.gen(family.into(), n, edges),
            Command::Count {
                family,
                range,
                check,
            } => self.count(family.into(), range.range(0)?, check),
            Command::Irr {
                family,
                range,
                check,
            } => self.irr(family.into(), range.range(0)?, check),
            Command::Imb {
                family,
                n,
                upper,
                dir,
            } => self.imb(family.into(), n, &upper, dir),
            Command::Degseq { family, n, check } => self.degseq(family.into(), n, check),
            Command::Embed { n, x } => self.embed(n, x.as_deref()),
            Command::Couples { family, n } => self.couples(family.into(), n),
            // For verify, --n is the upper end of 0..=n.
            Command::Verify { range } => match range.n {
                Some(n) => self.verify(0..=n),
                None => self.verify(range.range(0)?),
            },
            Command::Seq { name, range } => self.seq(name, range.range(1)?),
        }
    }

    fn gen(&mut self, family: Family, n: u32, edges: bool) -> Result<i32, CliError> {
        let g = self.graph(family, n)?;
        if edges {
            for e in g.edges() {
                self.emit(&EdgeRecord::from(&e))?;
            }
        } else {
            for v in g.vertices() {
                self.emit(&VertexRecord { vertex: v })?;
            }
        }
        Ok(EXIT_OK)
    }

    fn count(
        &mut self,
        family: Family,
        range: RangeInclusive<u32>,
        check: bool,
    ) -> Result<i32, CliError> {
        let mut ok = true;
        for n in range {
            let vertices = strings::count_class(n, family.class())?;
            let edges = edge_count(family, n)?;
            let mut rec = CountRecord {
                n,
                family,
                vertices,
                edges,
                oracle_vertices: None,
                oracle_edges: None,
                pass: None,
            };
            if check {
                self.check_cap(n)?;
                let g = self.graph(family, n)?;
                let ov = g.vertex_count() as Count;
                let oe = oracle::oracle_edge_count(&g);
                let pass = ov == vertices && oe == edges;
                ok &= pass;
                rec.oracle_vertices = Some(ov);
                rec.oracle_edges = Some(oe);
                rec.pass = Some(pass);
            }
            self.emit(&rec)?;
        }
        Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
    }

    fn irr(
        &mut self,
        family: Family,
        range: RangeInclusive<u32>,
        check: bool,
    ) -> Result<i32, CliError> {
        let mut ok = true;
        for n in range {
            // The complement has no closed form; its value comes from enumeration.
            let (irr, oracle_irr) = match imbalance::irregularity(family, n) {
                Ok(v) if check => (
                    v,
                    Some(oracle::oracle_irregularity(&self.graph(family, n)?)),
                ),
                Ok(v) => (v, None),
                Err(Error::UnsupportedFamily(_)) => {
                    (oracle::oracle_irregularity(&self.graph(family, n)?), None)
                }
                Err(e) => return Err(e.into()),
            };
            let pass = oracle_irr.map(|o| o == irr);
            ok &= pass.unwrap_or(true);
            self.emit(&IrrRecord {
                n,
                family,
                irr,
                oracle_irr,
                pass,
            })?;
        }
        Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
    }

    fn imb(&mut self, family: Family, n: u32, upper: &str, dir: u32) -> Result<i32, CliError> {
        let x = BitString::parse_exact(upper, n)?;
        let v = imbalance::imbalance(family, &x, dir)?;
        match self.format {
            Format::Plain => writeln!(self.out, "{}", v.value())?,
            _ => self.emit(&ImbRecord {
                family,
                upper: x,
                direction: dir,
                left: v.left,
                right: v.right,
                imbalance: v.value(),
            })?,
        }
        Ok(EXIT_OK)
    }

    fn degseq(&mut self, family: Family, n: u32, check: bool) -> Result<i32, CliError> {
        let census = if family == Family::FibComplement && n >= 1 {
            complement::complement_degree_census(n)?
        } else {
            oracle::oracle_degree_census(&self.graph(family, n)?)
        };
        let mut ok = true;
        if check {
            let brute = oracle::oracle_degree_census(&self.graph(family, n)?);
            ok = brute == census;
        }
        for (&degree, &count) in &census.entries {
            self.emit(&DegreeRecord { n, degree, count })?;
        }
        if !ok {
            return Err(CliError::Failed(format!(
                "degree census of {family} n={n} disagrees with enumeration"
            )));
        }
        Ok(EXIT_OK)
    }

    fn embed(&mut self, n: u32, x: Option<&str>) -> Result<i32, CliError> {
        if let Some(x) = x {
            let x = BitString::parse_exact(x, n)?;
            let image = complement::embed_gamma_into_complement(&x)?;
            match self.format {
                Format::Plain => writeln!(self.out, "{image}")?,
                _ => self.emit(&EmbedRecord { x, image })?,
            }
            return Ok(EXIT_OK);
        }
        let g = self.graph(Family::Fibonacci, n)?;
        for e in g.edges() {
            // Complementing swaps which endpoint is the lower one.
            let image = complement::embed_gamma_into_complement(&e.upper())?;
            let image = cubes::Edge::new(image, complement::sigma(e.direction))?;
            self.emit(&EdgeRecord::from(&image))?;
        }
        Ok(EXIT_OK)
    }

    fn couples(&mut self, family: Family, n: u32) -> Result<i32, CliError> {
        let g = self.graph(family, n)?;
        for c in enumerate_couples(&g)? {
            self.emit(&CoupleRecord {
                lower: c.lower,
                direction: c.direction,
                side: c.side.name(),
                partner: c.partner,
            })?;
        }
        Ok(EXIT_OK)
    }

    fn verify(&mut self, range: RangeInclusive<u32>) -> Result<i32, CliError> {
        let v = oracle::verify_range(*range.start(), *range.end(), self.cap)?;
        for c in &v.checks {
            self.emit(c)?;
        }
        let failed = v.failures().count();
        if self.format == Format::Plain {
            writeln!(self.out, "{} checks, {failed} failed", v.checks.len())?;
        }
        Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
    }

    fn seq(&mut self, name: SeqName, range: RangeInclusive<u32>) -> Result<i32, CliError> {
        let values = range
            .clone()
            .map(|n| seq_value(name, n))
            .collect::<Result<Vec<_>, _>>()?;
        match self.format {
            Format::Plain => {
                let line: Vec<String> = values.iter().map(Count::to_string).collect();
                writeln!(self.out, "{}", line.join(" "))?;
            }
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string(&values).map_err(|e| CliError::Failed(e.to_string()))?
            )?,
            Format::Csv => {
                for (n, value) in range.zip(values) {
                    self.emit(&SeqRecord { n, value })?;
                }
            }
        }
        Ok(EXIT_OK)
    }
}

fn edge_count(family: Family, n: u32) -> Result<Count, Error> {
    match family {
        Family::Hypercube => cubes::hypercube_edge_count(n),
        Family::Fibonacci => cubes::gamma_edge_count(n),
        Family::Lucas => cubes::lucas_edge_count(n),
        Family::FibComplement => complement::complement_edge_count(n),
    }
}

fn seq_value(name: SeqName, n: u32) -> Result<Count, Error> {
    match name {
        SeqName::GammaEdges => cubes::gamma_edge_count(n),
        SeqName::ComplementEdges => complement::complement_edge_count(n),
        SeqName::A235996 => complement::complement_degree_counts(n).map(|c| c.n),
        SeqName::IrrGamma => imbalance::irr_gamma(n),
        SeqName::IrrLambda => imbalance::irr_lambda(n),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

#[derive(Serialize)]
struct VertexRecord {
    vertex: BitString,
}

impl Record for VertexRecord {
    const HEADER: &'static [&'static str] = &["vertex"];
    fn fields(&self) -> Vec<String> {
        vec![self.vertex.to_string()]
    }
}

#[derive(Serialize)]
struct EdgeRecord {
    lower: BitString,
    direction: u32,
    upper: BitString,
}

impl From<&cubes::Edge> for EdgeRecord {
    fn from(e: &cubes::Edge) -> Self {
        Self {
            lower: e.lower,
            direction: e.direction,
            upper: e.upper(),
        }
    }
}

impl Record for EdgeRecord {
    const HEADER: &'static [&'static str] = &["lower", "direction", "upper"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.lower.to_string(),
            self.direction.to_string(),
            self.upper.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct CountRecord {
    n: u32,
    family: Family,
    vertices: Count,
    edges: Count,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_vertices: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_edges: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pass: Option<bool>,
}

impl Record for CountRecord {
    const HEADER: &'static [&'static str] = &[
        "n",
        "family",
        "vertices",
        "edges",
        "oracle_vertices",
        "oracle_edges",
        "pass",
    ];
    fn fields(&self) -> Vec<String> {
        let mut f = vec![
            self.n.to_string(),
            self.family.to_string(),
            self.vertices.to_string(),
            self.edges.to_string(),
        ];
        if self.pass.is_some() {
            f.extend([
                opt(&self.oracle_vertices),
                opt(&self.oracle_edges),
                opt(&self.pass),
            ]);
        }
        f
    }
}

#[derive(Serialize)]
struct IrrRecord {
    n: u32,
    family: Family,
    irr: Count,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_irr: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pass: Option<bool>,
}

impl Record for IrrRecord {
    const HEADER: &'static [&'static str] = &["n", "family", "irr", "oracle_irr", "pass"];
    fn fields(&self) -> Vec<String> {
        let mut f = vec![
            self.n.to_string(),
            self.family.to_string(),
            self.irr.to_string(),
        ];
        if self.pass.is_some() {
            f.extend([opt(&self.oracle_irr), opt(&self.pass)]);
        }
        f
    }
}

#[derive(Serialize)]
struct ImbRecord {
    family: Family,
    upper: BitString,
    direction: u32,
    left: bool,
    right: bool,
    imbalance: u32,
}

impl Record for ImbRecord {
    const HEADER: &'static [&'static str] =
        &["family", "upper", "direction", "left", "right", "imbalance"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.family.to_string(),
            self.upper.to_string(),
            self.direction.to_string(),
            self.left.to_string(),
            self.right.to_string(),
            self.imbalance.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct DegreeRecord {
    n: u32,
    degree: u32,
    count: Count,
}

impl Record for DegreeRecord {
    const HEADER: &'static [&'static str] = &["n", "degree", "count"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.degree.to_string(),
            self.count.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct EmbedRecord {
    x: BitString,
    image: BitString,
}

impl Record for EmbedRecord {
    const HEADER: &'static [&'static str] = &["x", "image"];
    fn fields(&self) -> Vec<String> {
        vec![self.x.to_string(), self.image.to_string()]
    }
}

#[derive(Serialize)]
struct CoupleRecord {
    lower: BitString,
    direction: u32,
    side: &'static str,
    partner: u32,
}

impl Record for CoupleRecord {
    const HEADER: &'static [&'static str] = &["lower", "direction", "side", "partner"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.lower.to_string(),
            self.direction.to_string(),
            self.side.to_owned(),
            self.partner.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct SeqRecord {
    n: u32,
    value: Count,
}

impl Record for SeqRecord {
    const HEADER: &'static [&'static str] = &["n", "value"];
    fn fields(&self) -> Vec<String> {
        vec![self.n.to_string(), self.value.to_string()]
    }
}

impl Record for oracle::IdentityCheck {
    const HEADER: &'static [&'static str] =
        &["n", "family", "identity", "expected", "actual", "pass"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.family.clone(),
            self.identity.clone(),
            opt(&self.expected),
            opt(&self.actual),
            if self.pass { "PASS" } else { "FAIL" }.to_owned(),
        ]
    }
}
