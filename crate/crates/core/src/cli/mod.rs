//! The `wildclass` command line.
//!
//! [`run`] never panics on bad input: parse failures, unreadable files and
//! invalid structures all come back as a [`CliVerdict`] with code 2. Indices
//! in payloads and messages are 1-based, as in the file formats.

mod verify;

pub use verify::{
    adjudicate, pipeline_verify, verify_graphs, verify_groups, AdjudicationReport, GraphReport,
    GroupReport, LatticeVerdicts, NamedEmbedding, OrderCounts, ScaleError, Theorem, VerifyReport,
    VertexCounts, MAX_GROUP_ORDER, MAX_VERTICES,
};

use std::fmt::Display;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::groups::{group_iso, Family, FiniteGroup};
use crate::iso::{digraph_iso, graph_iso, lattice_iso, poset_iso};
use crate::lattice::{birkhoff_crosscheck, find_sublattice, is_distributive, is_modular, Pattern};
use crate::matrix::{sim_similar, skew_congruent, MatrixPair, PrimeFieldMatrix};
use crate::reductions::{extended_incidence, gamma, gamma_inverse, incidence};
use crate::structures::{
    parse, serialize, ColoredDigraph, FiniteLattice, FinitePoset, Format, Isomorphism, TextFormat,
    UndirectedGraph,
};

/// Outcome of one invocation: `code` 0 means yes/holds, 1 no/fails, 2 error.
#[derive(Debug, Clone, PartialEq)]
pub struct CliVerdict {
    pub code: u8,
    pub payload: Option<Value>,
    pub message: String,
    json: bool,
}

impl CliVerdict {
    fn new(code: u8, message: impl Into<String>, payload: Option<Value>, json: bool) -> Self {
        CliVerdict {
            code,
            payload,
            message: message.into(),
            json,
        }
    }

    fn error(message: impl Into<String>, json: bool) -> Self {
        let message = message.into();
        let payload = json!({ "error": message });
        Self::new(2, message, Some(payload), json)
    }

    /// The text [`emit`](Self::emit) writes to standard output.
    pub fn stdout_text(&self) -> String {
        match (&self.payload, self.json) {
            (Some(p), true) => serde_json::to_string_pretty(p).expect("JSON values serialize"),
            _ if self.code == 2 => String::new(),
            _ => self.message.clone(),
        }
    }

    pub fn emit(&self) {
        if self.code == 2 {
            eprintln!("error: {}", self.message);
        }
        let out = self.stdout_text();
        if !out.is_empty() {
            println!("{out}");
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "wildclass",
    version,
    about = "Reductions between finite groups, graphs and lattices"
)]
struct Cli {
    /// Emit the structured payload as JSON on standard output
    #[arg(long, global = true)]
    json: bool,
    /// Write the produced structure to FILE (format chosen by extension)
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate and compare groups
    #[command(subcommand)]
    Group(GroupCmd),
    /// Apply a reduction
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Check lattice properties
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Decide isomorphism of two structures
    Iso(IsoArgs),
    /// Matrix oracles over prime fields
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Exhaustively check a reduction theorem
    Verify(VerifyArgs),
    /// Convert a structure between formats
    Export(ExportArgs),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Build a group from a family
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family parameter (cyclic n, dihedral k, heisenberg p, symmetric n)
        #[arg(long)]
        n: Option<usize>,
        /// Cyclic factor orders for `--family product`, e.g. `2,3`
        #[arg(long, value_delimiter = ',')]
        factors: Vec<usize>,
    },
    /// Decide whether two groups are isomorphic
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        witness: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Cyclic,
    Dihedral,
    Heisenberg,
    Quaternion,
    Symmetric,
    Product,
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// Group to colored digraph
    Gamma {
        input: PathBuf,
        /// Drop the triple nodes that carry no arcs
        #[arg(long)]
        pruned: bool,
    },
    /// Colored digraph back to its group
    GammaInv { input: PathBuf },
    /// Graph to incidence digraph, or with --extended to its lattice
    Incidence {
        input: PathBuf,
        #[arg(long)]
        extended: bool,
        /// Where to write the node role map (defaults next to -o)
        #[arg(long, value_name = "FILE")]
        roles: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// Run one property check
    #[command(group(ArgGroup::new("check").required(true).args(["distributive", "modular", "find", "crosscheck"])))]
    Check {
        input: PathBuf,
        #[arg(long)]
        distributive: bool,
        #[arg(long)]
        modular: bool,
        #[arg(long, value_enum)]
        find: Option<PatternArg>,
        #[arg(long)]
        crosscheck: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PatternArg {
    M3,
    N5,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Graph,
    Cdigraph,
    Poset,
    Lattice,
    Group,
}

#[derive(Args, Debug)]
struct IsoArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    witness: bool,
}

#[derive(Subcommand, Debug)]
enum MatrixCmd {
    /// Simultaneous similarity of two matrix pairs
    Simsim {
        /// JSON `[[A1, B1], [A2, B2]]` with row-major matrices
        pairs: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Congruence of two skew-symmetric matrices
    Skewcong {
        m1: PathBuf,
        m2: PathBuf,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    theorem: TheoremArg,
    /// Largest group order (theorem2) or vertex count (theorem3, theorem4)
    #[arg(long, default_value_t = 4)]
    scale: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TheoremArg {
    Theorem2,
    Theorem3,
    Theorem4,
}

#[derive(Args, Debug)]
struct ExportArgs {
    input: PathBuf,
    /// Structure kind; inferred from the extension when omitted
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[arg(long, value_enum, default_value = "native")]
    to: FormatArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Native,
    Json,
    Dot,
}

type CliResult = Result<CliVerdict, String>;

/// Parses `argv` (program name first) and dispatches.
pub fn run(argv: &[String]) -> CliVerdict {
    let wants_json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CliVerdict::new(0, e.to_string().trim_end(), None, false)
                }
                _ => {
                    let text = e.to_string();
                    let text = text.trim_end();
                    CliVerdict::error(text.strip_prefix("error: ").unwrap_or(text), wants_json)
                }
            };
        }
    };
    let ctx = Ctx {
        json: cli.json,
        output: cli.output.as_deref(),
    };
    let result = match cli.command {
        Command::Group(c) => ctx.group(c),
        Command::Reduce(c) => ctx.reduce(c),
        Command::Lattice(c) => ctx.lattice(c),
        Command::Iso(a) => ctx.iso(a),
        Command::Matrix(c) => ctx.matrix(c),
        Command::Verify(a) => ctx.verify(a),
        Command::Export(a) => ctx.export(a),
    };
    result.unwrap_or_else(|msg| CliVerdict::error(msg, cli.json))
}

struct Ctx<'a> {
    json: bool,
    output: Option<&'a Path>,
}

fn err_at(path: &Path, e: impl Display) -> String {
    format!("{}: {e}", path.display())
}

fn format_of(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        Some("dot") => Format::Dot,
        _ => Format::Native,
    }
}

fn load<T: TextFormat>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| err_at(path, e))?;
    parse(&text, format_of(path)).map_err(|e| err_at(path, e))
}

fn one_based(mapping: &[usize]) -> Vec<usize> {
    mapping.iter().map(|v| v + 1).collect()
}

fn mapping_text(phi: &Isomorphism) -> String {
    phi.mapping()
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{}->{}", i + 1, v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

impl Ctx<'_> {
    fn verdict(&self, code: u8, message: impl Into<String>, payload: Value) -> CliVerdict {
        CliVerdict::new(code, message, Some(payload), self.json)
    }

    /// Writes `x` to `-o` if given; otherwise returns its native text for
    /// standard output.
    fn write<T: TextFormat>(&self, x: &T) -> Result<String, String> {
        match self.output {
            Some(path) => {
                let mut text = serialize(x, format_of(path));
                text.push('\n');
                std::fs::write(path, text).map_err(|e| err_at(path, e))?;
                Ok(format!("wrote {}", path.display()))
            }
            None => Ok(serialize(x, Format::Native)),
        }
    }

    fn group(&self, cmd: GroupCmd) -> CliResult {
        match cmd {
            GroupCmd::Gen { family, n, factors } => {
                let need = |what: &str| n.ok_or(format!("--family {what} needs --n"));
                let fam = match family {
                    FamilyArg::Cyclic => Family::Cyclic(need("cyclic")?),
                    FamilyArg::Dihedral => Family::Dihedral(need("dihedral")?),
                    FamilyArg::Heisenberg => Family::Heisenberg(need("heisenberg")? as u64),
                    FamilyArg::Quaternion => Family::Quaternion,
                    FamilyArg::Symmetric => Family::Symmetric(need("symmetric")?),
                    FamilyArg::Product => {
                        if factors.is_empty() {
                            return Err("--family product needs --factors".into());
                        }
                        let mut g =
                            FiniteGroup::make(Family::Cyclic(1)).map_err(|e| e.to_string())?;
                        for &k in &factors {
                            let c =
                                FiniteGroup::make(Family::Cyclic(k)).map_err(|e| e.to_string())?;
                            g = FiniteGroup::make(Family::DirectProduct(Box::new(g), Box::new(c)))
                                .map_err(|e| e.to_string())?;
                        }
                        return self.emit_group(&g);
                    }
                };
                let g = FiniteGroup::make(fam).map_err(|e| e.to_string())?;
                self.emit_group(&g)
            }
            GroupCmd::Iso { a, b, witness } => {
                let g: FiniteGroup = load(&a)?;
                let h: FiniteGroup = load(&b)?;
                Ok(self.iso_verdict(group_iso(&g, &h), witness))
            }
        }
    }

    fn emit_group(&self, g: &FiniteGroup) -> CliResult {
        let message = self.write(g)?;
        let payload = json!({
            "order": g.order(),
            "abelian": g.is_abelian(),
            "exponent": g.exponent(),
            "table": g.table().iter().map(|r| one_based(r)).collect::<Vec<_>>(),
        });
        Ok(self.verdict(0, message, payload))
    }

    fn iso_verdict(&self, phi: Option<Isomorphism>, witness: bool) -> CliVerdict {
        match phi {
            Some(phi) => {
                let mut message = "isomorphic".to_string();
                if witness {
                    message = format!("{message}\n{}", mapping_text(&phi));
                }
                let payload = json!({ "isomorphic": true, "mapping": one_based(phi.mapping()) });
                self.verdict(0, message, payload)
            }
            None => self.verdict(
                1,
                "not isomorphic",
                json!({ "isomorphic": false, "mapping": null }),
            ),
        }
    }

    fn reduce(&self, cmd: ReduceCmd) -> CliResult {
        match cmd {
            ReduceCmd::Gamma { input, pruned } => {
                let g: FiniteGroup = load(&input)?;
                let gg = gamma(&g, pruned);
                let d = gg.digraph();
                let message = self.write(d)?;
                let payload = json!({
                    "group_order": g.order(),
                    "pruned": pruned,
                    "nodes": d.node_count(),
                    "arcs": d.arc_count(),
                    "color_counts": d.color_counts(),
                });
                Ok(self.verdict(0, message, payload))
            }
            ReduceCmd::GammaInv { input } => {
                let d: ColoredDigraph = load(&input)?;
                let g = gamma_inverse(&d).map_err(|e| err_at(&input, e))?;
                let message = self.write(&g)?;
                Ok(self.verdict(0, message, json!({ "order": g.order() })))
            }
            ReduceCmd::Incidence {
                input,
                extended,
                roles,
            } => {
                let g: UndirectedGraph = load(&input)?;
                if !extended {
                    let d = incidence(&g);
                    let message = self.write(&d)?;
                    let payload = json!({ "nodes": d.node_count(), "arcs": d.arc_count() });
                    return Ok(self.verdict(0, message, payload));
                }
                let ext = extended_incidence(&g);
                let l = ext.lattice().map_err(|e| err_at(&input, e))?;
                let mut message = self.write(&l)?;
                let roles_path =
                    roles.or_else(|| self.output.map(|o| o.with_extension("roles.json")));
                if let Some(path) = &roles_path {
                    std::fs::write(path, ext.role_map_json() + "\n")
                        .map_err(|e| err_at(path, e))?;
                    message = format!("{message}\nwrote {}", path.display());
                }
                let payload = json!({
                    "nodes": ext.digraph().node_count(),
                    "arcs": ext.digraph().arc_count(),
                    "covers": l.to_poset().covers().len(),
                    "roles": ext.roles().iter().map(|r| r.label()).collect::<Vec<_>>(),
                });
                Ok(self.verdict(0, message, payload))
            }
        }
    }

    fn lattice(&self, cmd: LatticeCmd) -> CliResult {
        let LatticeCmd::Check {
            input,
            distributive,
            modular,
            find,
            crosscheck,
        } = cmd;
        let l: FiniteLattice = load(&input)?;
        let inc = |v: usize| v + 1;
        if distributive {
            let v = is_distributive(&l);
            let w = v.witness.map(|w| json!({ "x": inc(w.x), "y": inc(w.y), "z": inc(w.z), "lhs": inc(w.lhs), "rhs": inc(w.rhs) }));
            let message = match v.witness {
                None => "distributive".to_string(),
                Some(w) => format!(
                    "not distributive: x={} y={} z={}",
                    inc(w.x),
                    inc(w.y),
                    inc(w.z)
                ),
            };
            return Ok(self.verdict(
                u8::from(!v.holds),
                message,
                json!({ "distributive": v.holds, "witness": w }),
            ));
        }
        if modular {
            let v = is_modular(&l);
            let w = v.witness.map(|w| json!({ "x": inc(w.x), "a": inc(w.a), "b": inc(w.b), "lhs": inc(w.lhs), "rhs": inc(w.rhs) }));
            let message = match v.witness {
                None => "modular".to_string(),
                Some(w) => format!("not modular: x={} a={} b={}", inc(w.x), inc(w.a), inc(w.b)),
            };
            return Ok(self.verdict(
                u8::from(!v.holds),
                message,
                json!({ "modular": v.holds, "witness": w }),
            ));
        }
        if let Some(p) = find {
            let pattern = match p {
                PatternArg::M3 => Pattern::M3,
                PatternArg::N5 => Pattern::N5,
            };
            let found = find_sublattice(&l, pattern);
            let elements = found.map(|e| e.elements.map(inc));
            let message = match elements {
                None => format!("no {pattern:?} sublattice"),
                Some(e) => format!("{pattern:?} sublattice at {e:?}"),
            };
            let payload =
                json!({ "pattern": pattern, "found": found.is_some(), "elements": elements });
            return Ok(self.verdict(u8::from(found.is_some()), message, payload));
        }
        debug_assert!(crosscheck);
        let report = birkhoff_crosscheck(&l).map_err(|e| e.to_string())?;
        let emb = |e: &Option<crate::lattice::SublatticeEmbedding>| e.map(|e| e.elements.map(inc));
        let payload = json!({
            "distributive": report.distributive.holds,
            "modular": report.modular.holds,
            "m3": emb(&report.m3),
            "n5": emb(&report.n5),
            "equivalences_hold": true,
        });
        let message = format!(
            "crosscheck passed: distributive={} modular={} m3={} n5={}",
            report.distributive.holds,
            report.modular.holds,
            report.m3.is_some(),
            report.n5.is_some()
        );
        Ok(self.verdict(0, message, payload))
    }

    fn iso(&self, args: IsoArgs) -> CliResult {
        let (a, b) = (&args.a, &args.b);
        let phi = match args.kind {
            KindArg::Graph => graph_iso(&load::<UndirectedGraph>(a)?, &load(b)?),
            KindArg::Cdigraph => digraph_iso(&load::<ColoredDigraph>(a)?, &load(b)?),
            KindArg::Poset => poset_iso(&load::<FinitePoset>(a)?, &load(b)?),
            KindArg::Lattice => lattice_iso(&load::<FiniteLattice>(a)?, &load(b)?),
            KindArg::Group => group_iso(&load::<FiniteGroup>(a)?, &load(b)?),
        };
        Ok(self.iso_verdict(phi, args.witness))
    }

    fn matrix(&self, cmd: MatrixCmd) -> CliResult {
        fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
            let text = std::fs::read_to_string(path).map_err(|e| err_at(path, e))?;
            serde_json::from_str(&text).map_err(|e| err_at(path, e))
        }
        let rows = |s: &PrimeFieldMatrix| json!(s.to_rows());
        match cmd {
            MatrixCmd::Simsim { pairs, p } => {
                let raw: [[Vec<Vec<i64>>; 2]; 2] = read_json(&pairs)?;
                let mk = |[a, b]: &[Vec<Vec<i64>>; 2]| -> Result<MatrixPair, String> {
                    let a = PrimeFieldMatrix::new(p, a).map_err(|e| err_at(&pairs, e))?;
                    let b = PrimeFieldMatrix::new(p, b).map_err(|e| err_at(&pairs, e))?;
                    MatrixPair::new(a, b).map_err(|e| err_at(&pairs, e))
                };
                let (p1, p2) = (mk(&raw[0])?, mk(&raw[1])?);
                let s = sim_similar(&p1, &p2).map_err(|e| e.to_string())?;
                Ok(self.conjugator_verdict(s.as_ref().map(rows), "simultaneously similar"))
            }
            MatrixCmd::Skewcong { m1, m2, p } => {
                let load_m = |path: &Path| -> Result<PrimeFieldMatrix, String> {
                    let r: Vec<Vec<i64>> = read_json(path)?;
                    PrimeFieldMatrix::new(p, &r).map_err(|e| err_at(path, e))
                };
                let s = skew_congruent(&load_m(&m1)?, &load_m(&m2)?).map_err(|e| e.to_string())?;
                Ok(self.conjugator_verdict(s.as_ref().map(rows), "congruent"))
            }
        }
    }

    fn conjugator_verdict(&self, s: Option<Value>, what: &str) -> CliVerdict {
        match s {
            Some(s) => {
                let message = format!("{what}; S = {s}");
                self.verdict(0, message, json!({ "equivalent": true, "conjugator": s }))
            }
            None => self.verdict(
                1,
                format!("not {what}"),
                json!({ "equivalent": false, "conjugator": null }),
            ),
        }
    }

    fn verify(&self, args: VerifyArgs) -> CliResult {
        let theorem = match args.theorem {
            TheoremArg::Theorem2 => Theorem::Theorem2,
            TheoremArg::Theorem3 => Theorem::Theorem3,
            TheoremArg::Theorem4 => Theorem::Theorem4,
        };
        let report = pipeline_verify(theorem, args.scale).map_err(|e| e.to_string())?;
        let message = human_report(&report);
        if let Some(path) = self.output {
            let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
            std::fs::write(path, text).map_err(|e| err_at(path, e))?;
        }
        Ok(self.verdict(u8::from(!report.agrees()), message, to_value(&report)))
    }

    fn export(&self, args: ExportArgs) -> CliResult {
        let kind = match args.kind {
            Some(k) => k,
            None => match args.input.extension().and_then(|e| e.to_str()) {
                Some("graph") => KindArg::Graph,
                Some("cdg") => KindArg::Cdigraph,
                Some("grp") => KindArg::Group,
                Some("lat") => KindArg::Lattice,
                Some("pos") => KindArg::Poset,
                _ => return Err(err_at(&args.input, "cannot infer the kind; pass --kind")),
            },
        };
        let format = match args.to {
            FormatArg::Native => Format::Native,
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        };
        let p = &args.input;
        let text = match kind {
            KindArg::Graph => serialize(&load::<UndirectedGraph>(p)?, format),
            KindArg::Cdigraph => serialize(&load::<ColoredDigraph>(p)?, format),
            KindArg::Poset => serialize(&load::<FinitePoset>(p)?, format),
            KindArg::Lattice => serialize(&load::<FiniteLattice>(p)?, format),
            KindArg::Group => serialize(&load::<FiniteGroup>(p)?, format),
        };
        let message = match self.output {
            Some(path) => {
                std::fs::write(path, text.clone() + "\n").map_err(|e| err_at(path, e))?;
                format!("wrote {}", path.display())
            }
            None => text.clone(),
        };
        Ok(self.verdict(0, message, json!({ "text": text })))
    }
}

fn human_report(report: &VerifyReport) -> String {
    let mut out = Vec::new();
    match report {
        VerifyReport::Theorem2(r) => {
            out.push(format!(
                "groups up to order {}: {}",
                r.max_order,
                r.groups.join(", ")
            ));
            for (order, c) in &r.per_order {
                out.push(format!(
                    "order {order}: {} groups, {} pairs, {} isomorphic",
                    c.groups, c.pairs, c.isomorphic_pairs
                ));
            }
            out.push(format!(
                "{} pairs checked, {} disagreements",
                r.pairs_checked,
                r.disagreements.len()
            ));
        }
        VerifyReport::Theorem3(r) => {
            for (n, c) in &r.per_vertex_count {
                out.push(format!(
                    "n={n}: {} graph classes, {} lattice classes",
                    c.graph_classes, c.lattice_classes
                ));
            }
            out.push(format!(
                "relabel trials: {}/{} isomorphic; {} disagreements",
                r.relabel_isomorphic,
                r.relabel_trials,
                r.disagreements.len()
            ));
        }
        VerifyReport::Theorem4(r) => {
            out.push(format!("claim: {}", r.claim));
            for v in &r.lattices {
                let show = |e: &Option<NamedEmbedding>| match e {
                    Some(e) => format!("{{{}}}", e.elements.join(", ")),
                    None => "-".into(),
                };
                out.push(format!(
                    "n={} edges={:?} size={} distributive={} modular={} M3={} N5={}",
                    v.vertices,
                    v.edges,
                    v.lattice_size,
                    v.distributive,
                    v.modular,
                    show(&v.m3),
                    show(&v.n5)
                ));
            }
            out.push(r.summary.clone());
        }
    }
    out.join("\n")
}
