mod rackspec;

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ldlab::braid::{equal, BraidWord, GarsideNF};
use ldlab::conjugacy::{mu, positive_conjugates, sweep_conjecture};
use ldlab::games::{ackermann, ackermann_diag, G3State, DEFAULT_STEP_CAP};
use ldlab::homology::{psi, three_cocycle_rank, two_cocycle_space, IntCochain};
use ldlab::invariants::{
    act_full, act_partial, act_positive, closure_colourings, fundamental_quandle, laver_fraction_colouring,
    render_free_word, wirtinger_group, Check, FractionMode,
};
use ldlab::laver::{LaverTable, DEFAULT_MAX_N};
use ldlab::magma::FiniteMagma;
use ldlab::order::{alternating_normal_form, bp3_normal_exponents, compare_d, compare_flipped, d_floor};
use ldlab::ybe::{birack_failure, first_projection, rack_to_solution};
use ldlab::{Error, Result};

#[derive(Parser)]
#[command(name = "ldlab", version, about = "Laver tables, rack colourings and braid orderings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Coo,
}

#[derive(Args)]
struct Out {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Laver tables.
    #[command(subcommand)]
    Laver(LaverCmd),
    /// Rack cocycles.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Garside normal forms and equality.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// The Dehornoy ordering and ordinal ranks.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Set-theoretic Yang-Baxter solutions.
    #[command(subcommand)]
    Ybe(YbeCmd),
    /// Colourings of braid diagrams.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Fundamental quandle presentations.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Positive conjugacy classes.
    #[command(subcommand)]
    Conj(ConjCmd),
    /// The G3 braid game.
    #[command(subcommand)]
    Game(GameCmd),
    /// Ackermann function `Ack_r(x)`, or `Ack_x(x)` with `--diag`.
    Ack {
        #[arg(required_unless_present = "diag")]
        r: Option<u32>,
        #[arg(required_unless_present = "diag")]
        x: Option<u64>,
        #[arg(long, conflicts_with_all = ["r", "x"])]
        diag: Option<u32>,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum LaverCmd {
    Table {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Out,
    },
    Period {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum CocycleCmd {
    /// Rank of the 2- or 3-cocycle lattice.
    Rank {
        #[arg(long)]
        rack: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        out: Out,
    },
    /// A basis of the 2-cocycle lattice.
    Basis {
        #[arg(long)]
        rack: String,
        #[command(flatten)]
        out: Out,
    },
    /// The 0/1 cocycle `ψ_q` on `A_n`.
    Psi {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    Nf {
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    Eq {
        #[arg(long)]
        strands: usize,
        u: String,
        v: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Prints `<`, `=` or `>`.
    Compare {
        #[arg(long)]
        strands: usize,
        /// Use the flipped ordering on positive braids.
        #[arg(long)]
        flipped: bool,
        u: String,
        v: String,
        #[command(flatten)]
        out: Out,
    },
    /// Ordinal rank of a positive 3-strand braid.
    Rank3 {
        word: String,
        #[command(flatten)]
        out: Out,
    },
    /// Alternating normal form of a positive braid.
    Anf {
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    /// Largest `k` with `Δ^(2k) <= β`.
    Floor {
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum YbeCmd {
    Matrix {
        #[arg(long)]
        rack: String,
        #[command(flatten)]
        out: Out,
    },
    Check {
        #[arg(long)]
        rack: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fraction,
    Delta,
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Colourings of the closure of a braid.
    Count {
        #[arg(long)]
        rack: String,
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    /// Pushes a colour vector through a braid word.
    Act {
        #[arg(long)]
        rack: String,
        #[arg(long)]
        colors: String,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    /// Laver-table colouring of a fraction decomposition.
    Laver {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        mid: String,
        #[arg(long, value_enum, default_value = "fraction")]
        mode: Mode,
        word: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum QuandleCmd {
    Present {
        #[arg(long)]
        strands: usize,
        word: String,
        /// Print the group presentation instead.
        #[arg(long)]
        group: bool,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum ConjCmd {
    Class {
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    Mu {
        #[arg(long)]
        strands: usize,
        word: String,
        #[command(flatten)]
        out: Out,
    },
    SweepConjecture {
        #[arg(long)]
        maxlen: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum GameCmd {
    G3 {
        /// Positive 3-strand braid word; ignored with `--resume`.
        #[arg(default_value = "")]
        word: String,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        cap: Option<u128>,
        /// Allow caps above the default.
        #[arg(long)]
        long_run: bool,
        /// File to save the state to when the run stops.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Save every this many steps as well.
        #[arg(long, requires = "checkpoint")]
        checkpoint_every: Option<u128>,
        /// Continue from a saved state.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
}

struct UsageError(String);

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

type Run = std::result::Result<(), Failure>;

fn formats(out: &Out, allowed: &[Format]) -> std::result::Result<Format, UsageError> {
    if out.format == Format::Text || out.format == Format::Json || allowed.contains(&out.format) {
        Ok(out.format)
    } else {
        Err(UsageError(format!("--format {:?} is not available here", out.format).to_lowercase()))
    }
}

fn emit(format: Format, schema: &str, text: impl FnOnce() -> String, data: impl FnOnce() -> Value) {
    match format {
        Format::Json => println!("{}", json!({ "schema": format!("{schema}/1"), "data": data() })),
        _ => {
            let t = text();
            if t.ends_with('\n') {
                print!("{t}");
            } else {
                println!("{t}");
            }
        }
    }
}

/// Table entry budget from `LDLAB_MAX_MEM` (bytes, optional `K`/`M`/`G` suffix).
fn mem_entries() -> std::result::Result<Option<usize>, UsageError> {
    let Ok(raw) = std::env::var("LDLAB_MAX_MEM") else { return Ok(None) };
    let raw = raw.trim();
    let (digits, mult) = match raw.chars().last() {
        Some('K' | 'k') => (&raw[..raw.len() - 1], 1usize << 10),
        Some('M' | 'm') => (&raw[..raw.len() - 1], 1 << 20),
        Some('G' | 'g') => (&raw[..raw.len() - 1], 1 << 30),
        _ => (raw, 1),
    };
    let n: usize = digits.parse().map_err(|_| UsageError(format!("bad LDLAB_MAX_MEM {raw:?}")))?;
    Ok(Some(n.saturating_mul(mult) / 4))
}

fn rack(spec: &str) -> std::result::Result<FiniteMagma, Failure> {
    Ok(rackspec::parse(spec, mem_entries()?)?)
}

fn laver_table(n: u32) -> std::result::Result<LaverTable, Failure> {
    let max_n = match mem_entries()? {
        Some(cap) => (0..=DEFAULT_MAX_N).take_while(|&k| (1usize << (2 * k)) <= cap).last().unwrap_or(0),
        None => DEFAULT_MAX_N,
    };
    Ok(LaverTable::with_bound(n, max_n)?)
}

fn word(text: &str, strands: usize) -> Result<BraidWord> {
    BraidWord::parse(text, strands)
}

fn parse_list(text: &str) -> std::result::Result<Vec<usize>, UsageError> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| UsageError(format!("bad colour {t:?} in {text:?}"))))
        .collect()
}

fn csv_rows(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(",") + "\n").collect()
}

fn grid_text(c: &IntCochain) -> String {
    c.grid()
        .iter()
        .map(|r| r.iter().map(|x| if x == &0.into() { "-".to_string() } else { x.to_string() }).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn grid_json(c: &IntCochain) -> Value {
    json!(c.grid().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// Space-separated letters, `e` for the empty word.
fn show_word(w: &BraidWord) -> String {
    if w.is_empty() { "e".into() } else { w.to_string() }
}

fn anf(b: &GarsideNF) -> Result<String> {
    Ok(show_word(&alternating_normal_form(b)?))
}

fn ord_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Laver(LaverCmd::Table { n, out }) => {
            let f = formats(&out, &[Format::Csv])?;
            let t = laver_table(n)?;
            let rows = t.rows();
            emit(
                f,
                "laver-table",
                || match f {
                    Format::Csv => csv_rows(&rows),
                    _ => rows.iter().map(|r| r.iter().map(|v| format!("{v:>w$}", w = t.size().to_string().len())).collect::<Vec<_>>().join(" ") + "\n").collect(),
                },
                || json!({ "n": n, "rows": rows }),
            );
        }
        Command::Laver(LaverCmd::Period { n, p, out }) => {
            let f = formats(&out, &[])?;
            let per = laver_table(n)?.period(p)?;
            emit(f, "laver-period", || per.to_string(), || json!({ "n": n, "p": p, "period": per }));
        }
        Command::Cocycle(CocycleCmd::Rank { rack: spec, degree, out }) => {
            let f = formats(&out, &[])?;
            let m = rack(&spec)?;
            let r = match degree {
                2 => two_cocycle_space(&m)?.0,
                3 => three_cocycle_rank(&m)?,
                d => return Err(Failure::Usage(format!("--degree must be 2 or 3, got {d}"))),
            };
            emit(f, "cocycle-rank", || r.to_string(), || json!({ "rack": spec, "degree": degree, "rank": r }));
        }
        Command::Cocycle(CocycleCmd::Basis { rack: spec, out }) => {
            let f = formats(&out, &[])?;
            let m = rack(&spec)?;
            let (rank, basis) = two_cocycle_space(&m)?;
            emit(
                f,
                "cocycle-basis",
                || basis.iter().enumerate().map(|(i, c)| format!("# {}\n{}", i + 1, grid_text(c))).collect(),
                || json!({ "rack": spec, "rank": rank, "basis": basis.iter().map(grid_json).collect::<Vec<_>>() }),
            );
        }
        Command::Cocycle(CocycleCmd::Psi { n, q, out }) => {
            let f = formats(&out, &[])?;
            let c = psi(q, &laver_table(n)?)?;
            emit(f, "cocycle-psi", || grid_text(&c), || json!({ "n": n, "q": q, "values": grid_json(&c) }));
        }
        Command::Braid(BraidCmd::Nf { strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let x = word(&w, strands)?.normal_form();
            emit(
                f,
                "braid-nf",
                || x.to_string(),
                || {
                    json!({
                        "strands": strands,
                        "inf": x.inf(),
                        "factors": x.factors().iter().map(|p| p.images()).collect::<Vec<_>>(),
                        "word": x.to_word().letters(),
                    })
                },
            );
        }
        Command::Braid(BraidCmd::Eq { strands, u, v, out }) => {
            let f = formats(&out, &[])?;
            let e = equal(&word(&u, strands)?, &word(&v, strands)?)?;
            emit(f, "braid-eq", || e.to_string(), || json!({ "equal": e }));
        }
        Command::Order(OrderCmd::Compare { strands, flipped, u, v, out }) => {
            let f = formats(&out, &[])?;
            let (a, b) = (word(&u, strands)?.normal_form(), word(&v, strands)?.normal_form());
            let o = if flipped { compare_flipped(&a, &b)? } else { compare_d(&a, &b)? };
            let s = ord_symbol(o);
            emit(f, "order-compare", || s.to_string(), || json!({ "flipped": flipped, "result": s }));
        }
        Command::Order(OrderCmd::Rank3 { word: w, out }) => {
            let f = formats(&out, &[])?;
            let nf = bp3_normal_exponents(&word(&w, 3)?.normal_form())?;
            let r = nf.rank();
            emit(
                f,
                "order-rank3",
                || r.to_string(),
                || json!({ "rank": r.to_string(), "blocks": nf.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>() }),
            );
        }
        Command::Order(OrderCmd::Anf { strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let a = alternating_normal_form(&word(&w, strands)?.normal_form())?;
            emit(f, "order-anf", || show_word(&a), || json!({ "word": a.letters() }));
        }
        Command::Order(OrderCmd::Floor { strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let k = d_floor(&word(&w, strands)?.normal_form())?;
            emit(f, "order-floor", || k.to_string(), || json!({ "floor": k }));
        }
        Command::Ybe(YbeCmd::Matrix { rack: spec, out }) => {
            let f = formats(&out, &[Format::Coo, Format::Csv])?;
            let m = rack(&spec)?;
            let d = m.size() * m.size();
            if f == Format::Csv {
                if let Some(cap) = mem_entries()? {
                    if d.saturating_mul(d) / 4 > cap {
                        return Err(Error::Resource(format!("a dense {d}x{d} matrix exceeds LDLAB_MAX_MEM")).into());
                    }
                }
            }
            let s = rack_to_solution(&m);
            let coo = s.matrix_coo();
            emit(
                f,
                "ybe-matrix",
                || match f {
                    Format::Csv => s
                        .matrix_dense()
                        .iter()
                        .map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(",") + "\n")
                        .collect(),
                    _ => coo.iter().map(|(r, c)| format!("{r} {c} 1\n")).collect(),
                },
                || json!({ "size": d, "entries": coo }),
            );
        }
        Command::Ybe(YbeCmd::Check { rack: spec, out }) => {
            let f = formats(&out, &[])?;
            let m = rack(&spec)?;
            let s = rack_to_solution(&m);
            let witness = s.braid_equation_witness();
            let inv = s.is_invertible();
            let birack = birack_failure(&m, &first_projection(m.size()))?;
            let text = || {
                let mut t = format!(
                    "braid equation: {}\ninvertible: {inv}\nbirack with first projection: {}\n",
                    witness.map_or("holds".into(), |w| format!("fails at {w:?}")),
                    birack.as_ref().map_or("yes".into(), |b| format!("no ({b:?})")),
                );
                t.push_str(&format!("left-selfdistributive: {}\nrack: {}\n", m.is_ld(), m.is_rack()));
                t
            };
            emit(f, "ybe-check", text, || {
                json!({
                    "braid_equation": witness.is_none(),
                    "witness": witness,
                    "invertible": inv,
                    "birack": birack.is_none(),
                    "ld": m.is_ld(),
                    "rack": m.is_rack(),
                })
            });
        }
        Command::Color(ColorCmd::Count { rack: spec, strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let m = rack(&spec)?;
            let fixed = closure_colourings(&m, &word(&w, strands)?)?;
            emit(f, "color-count", || fixed.len().to_string(), || json!({ "count": fixed.len(), "colourings": fixed }));
        }
        Command::Color(ColorCmd::Act { rack: spec, colors, word: w, out }) => {
            let f = formats(&out, &[])?;
            let m = rack(&spec)?;
            let c = parse_list(&colors)?;
            let bw = word(&w, c.len())?;
            let result = if bw.is_positive_word() {
                Some(act_positive(&m, &c, &bw, Check::Verify)?)
            } else if m.is_rack() {
                Some(act_full(&m, &c, &bw)?)
            } else {
                act_partial(&m, &c, &bw)?
            };
            let show = |v: &Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            emit(
                f,
                "color-act",
                || result.as_ref().map_or("undefined".into(), show),
                || json!({ "colours": result }),
            );
        }
        Command::Color(ColorCmd::Laver { n, mid, mode, word: w, out }) => {
            let f = formats(&out, &[])?;
            let mid = parse_list(&mid)?;
            let bw = word(&w, mid.len())?;
            let mode = match mode {
                Mode::Fraction => FractionMode::Fraction,
                Mode::Delta => FractionMode::Delta,
            };
            let (l, r) = laver_fraction_colouring(n, &bw, &mid, mode)?;
            let show = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            emit(f, "color-laver", || format!("{}\n{}", show(&l), show(&r)), || json!({ "left": l, "right": r }));
        }
        Command::Quandle(QuandleCmd::Present { strands, word: w, group, out }) => {
            let f = formats(&out, &[])?;
            let bw = word(&w, strands)?;
            if group {
                let g = wirtinger_group(&bw);
                emit(f, "group-presentation", || g.to_string(), || {
                    json!({ "generators": g.generators, "relators": g.relators.iter().map(|r| render_free_word(r)).collect::<Vec<_>>() })
                });
            } else {
                let q = fundamental_quandle(&bw);
                emit(f, "quandle-presentation", || q.to_string(), || {
                    json!({
                        "generators": q.generators,
                        "relations": q.relations.iter().map(|(l, r)| [l.to_string(), r.to_string()]).collect::<Vec<_>>(),
                    })
                });
            }
        }
        Command::Conj(ConjCmd::Class { strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let class = positive_conjugates(&word(&w, strands)?.normal_form())?;
            let words: Vec<String> = class.members().map(|m| show_word(&m.to_word())).collect();
            emit(f, "conj-class", || words.join("\n"), || json!({ "size": words.len(), "members": words }));
        }
        Command::Conj(ConjCmd::Mu { strands, word: w, out }) => {
            let f = formats(&out, &[])?;
            let b = word(&w, strands)?.normal_form();
            let m = mu(&b)?;
            let a = anf(&m)?;
            emit(f, "conj-mu", || a.clone(), || json!({ "mu": a, "fixed": m == b }));
        }
        Command::Conj(ConjCmd::SweepConjecture { maxlen, out }) => {
            let f = formats(&out, &[])?;
            let rows = sweep_conjecture(maxlen)?;
            let mut table = Vec::new();
            for r in &rows {
                let c = &r.check;
                table.push((anf(&c.beta)?, anf(&c.mu_beta)?, anf(&c.lhs)?, c.holds(), c.holds_flipped(), r.inconsistencies.clone()));
            }
            let text = || {
                let mut t = String::from("beta\tmu\tmu(beta D^2)\tholds\tholds-flipped\n");
                for (b, m, l, h, hf, bad) in &table {
                    t.push_str(&format!("{b}\t{m}\t{l}\t{h}\t{hf}"));
                    if !bad.is_empty() {
                        t.push_str(&format!("\tINCONSISTENT: {}", bad.join("; ")));
                    }
                    t.push('\n');
                }
                let holds = table.iter().filter(|r| r.3).count();
                let flipped = table.iter().filter(|r| r.4).count();
                let bad: usize = table.iter().map(|r| r.5.len()).sum();
                t.push_str(&format!("rows={} holds={holds} holds-flipped={flipped} inconsistencies={bad}\n", table.len()));
                t
            };
            emit(f, "conj-sweep", text, || {
                json!(table
                    .iter()
                    .map(|(b, m, l, h, hf, bad)| json!({ "beta": b, "mu": m, "lhs": l, "holds": h, "holds_flipped": hf, "inconsistencies": bad }))
                    .collect::<Vec<_>>())
            });
        }
        Command::Game(GameCmd::G3 { word: w, trace, cap, long_run, checkpoint, checkpoint_every, resume, out }) => {
            let f = formats(&out, &[])?;
            let cap = cap.unwrap_or(DEFAULT_STEP_CAP);
            if cap > DEFAULT_STEP_CAP && !long_run {
                return Err(Failure::Usage(format!("caps above {DEFAULT_STEP_CAP} need --long-run")));
            }
            let mut s = match &resume {
                Some(p) => G3State::load(p)?,
                None => G3State::start(&word(&w, 3)?.normal_form())?,
            };
            let mut lines = Vec::new();
            let mut played = 0u128;
            if trace {
                lines.push(s.normal_form().render());
            }
            while !s.is_over() && played < cap {
                let chunk = checkpoint_every.unwrap_or(u128::MAX).min(cap - played).max(1);
                if trace {
                    for _ in 0..chunk {
                        if s.is_over() {
                            break;
                        }
                        s.step()?;
                        played += 1;
                        lines.push(s.normal_form().render());
                    }
                } else {
                    let before = s.steps;
                    s.run(chunk)?;
                    played += s.steps - before;
                }
                if let (Some(p), Some(_)) = (&checkpoint, checkpoint_every) {
                    s.save(p)?;
                }
            }
            if let Some(p) = &checkpoint {
                s.save(p)?;
            }
            let done = s.is_over();
            let last = if done { format!("steps={}", s.steps) } else { format!("aborted at={}", s.steps) };
            emit(
                f,
                "game-g3",
                || {
                    lines.push(last.clone());
                    lines.join("\n")
                },
                || {
                    json!({
                        "finished": done,
                        "steps": s.steps.to_string(),
                        "state": s.normal_form().render(),
                    })
                },
            );
        }
        Command::Ack { r, x, diag, out } => {
            let f = formats(&out, &[])?;
            let v = match diag {
                Some(d) => ackermann_diag(d)?,
                None => ackermann(r.expect("clap enforces r"), &x.expect("clap enforces x").into())?,
            };
            emit(f, "ack", || v.to_string(), || json!({ "value": v.to_string() }));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
