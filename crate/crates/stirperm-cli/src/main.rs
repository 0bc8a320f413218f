//! Command-line front end: enumerate / stats / convert / poly / gamma /
//! grammar / verify over the library, with stable machine-readable output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use stirperm::convert::{plane_tree_to_json, Object, ObjectKind};
use stirperm::families::{gamma3, gamma_k, poly_c3, poly_ck, poly_family, poly_n3, Family};
use stirperm::grammar::parse_grammar;
use stirperm::parse::parse_poly;
use stirperm::poly::Polynomial;
use stirperm::stats::{j_stat, scalar_stat, set_stat, JKind, SetStatId, StatId};
use stirperm::trees::enumerate_plane_trees;
use stirperm::verify;
use stirperm::words::{
    enumerate_q, enumerate_q1, word_string, StirlingPerm, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "stirperm",
    version,
    about = "Stirling permutation workbench: enumeration, statistics, codes, bijections, grammars, and brute-force verification of the identities the library implements"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumObject {
    Stirling,
    Code,
    Tree,
    Riordan,
    Dumont,
    Matching,
    PlaneTree,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stream every object of a family, one per line
    Enumerate(EnumerateArgs),
    /// Read JSON-line words from stdin and emit their statistics
    Stats(StatsArgs),
    /// Convert JSON-line objects between families
    Convert(ConvertArgs),
    /// Print a named polynomial family member
    Poly(PolyArgs),
    /// Print a gamma coefficient table
    Gamma(GammaArgs),
    /// Iterate a formal grammar derivative on an expression
    Grammar(GrammarArgs),
    /// Brute-force certify implemented identities
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Object family to enumerate
    #[arg(long, value_enum)]
    object: EnumObject,
    /// Order n
    #[arg(long)]
    n: u32,
    /// Arity k (stirling objects only)
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Variant family: `q1` = one copy of 1, two copies of 2..=n+1
    #[arg(long)]
    variant: Option<String>,
    /// Degree bound for plane trees
    #[arg(long, default_value_t = 3)]
    degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Abort if the family has more members than this
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct StatsArgs {
    /// Arity the input words must have
    #[arg(long, default_value_t = 2)]
    k: u32,
}

#[derive(Args)]
struct ConvertArgs {
    /// Source family: stirling | code | tree | riordan | dumont | matching
    #[arg(long)]
    from: String,
    /// Target family
    #[arg(long)]
    to: String,
}

#[derive(Args)]
struct PolyArgs {
    /// A | B | M | N | C (univariate), C3 | N3 (trivariate), Ck (multivariate).
    /// A counts descents with virtual zeros at BOTH ends, so A_1 = x and
    /// A_n(x) = x * (classical Eulerian polynomial); the convolution and
    /// mixed-family identities verified here hold under this convention.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    /// Arity for the Ck family
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long)]
    n: u32,
    /// Emit the multivariate profile table instead of the trivariate one
    #[arg(long)]
    multi: bool,
    /// Arity for the multivariate table (defaults to n, the table is the
    /// same for every k >= n-2)
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct GrammarArgs {
    /// File holding `sym -> polynomial` rules
    #[arg(long)]
    rules: std::path::PathBuf,
    /// Start expression
    #[arg(long)]
    start: String,
    /// Number of derivative applications
    #[arg(long)]
    iterate: u32,
    /// Optional substitution file applied to the result (same rule syntax)
    #[arg(long)]
    subst: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id or `all`
    #[arg(long, default_value = "all")]
    theorem: String,
    /// Override the order range
    #[arg(long)]
    max_n: Option<u32>,
    /// Override the arity range (checks that use one)
    #[arg(long)]
    k: Option<u32>,
    /// List the available theorem ids and exit
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

fn main() -> ExitCode {
    // enumerations are meant to be piped; die quietly when the reader stops
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Enumerate(a) => cmd_enumerate(a),
        Cmd::Stats(a) => cmd_stats(a),
        Cmd::Convert(a) => cmd_convert(a),
        Cmd::Poly(a) => cmd_poly(a),
        Cmd::Gamma(a) => cmd_gamma(a),
        Cmd::Grammar(a) => cmd_grammar(a),
        Cmd::Verify(a) => return cmd_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<(), String>;

fn lift<T>(r: stirperm::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn emit_line(line: &str) -> CliResult {
    let mut out = io::stdout().lock();
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

fn cmd_enumerate(a: EnumerateArgs) -> CliResult {
    let out = io::stdout();
    let mut out = out.lock();
    let mut write = |line: String| writeln!(out, "{line}").map_err(|e| e.to_string());

    if let Some(variant) = &a.variant {
        if variant != "q1" {
            return Err(format!("unknown variant {variant:?}"));
        }
        if a.object != EnumObject::Stirling {
            return Err("--variant q1 only applies to --object stirling".into());
        }
        for w in lift(enumerate_q1(a.n, a.cap))? {
            match a.format {
                Format::Text => write(word_string(&w))?,
                _ => write(json!(w).to_string())?,
            }
        }
        return Ok(());
    }

    match a.object {
        EnumObject::Stirling => {
            for sp in lift(enumerate_q(a.n, a.k, a.cap))? {
                match a.format {
                    Format::Text => write(sp.to_string())?,
                    _ => write(json!(sp.word()).to_string())?,
                }
            }
        }
        EnumObject::PlaneTree => {
            for t in lift(enumerate_plane_trees(a.n, a.degree, a.cap))? {
                write(plane_tree_to_json(&t).to_string())?;
            }
        }
        EnumObject::Code | EnumObject::Tree | EnumObject::Riordan | EnumObject::Dumont
        | EnumObject::Matching => {
            let target = match a.object {
                EnumObject::Code => ObjectKind::Code,
                EnumObject::Tree => ObjectKind::Tree,
                EnumObject::Riordan => ObjectKind::Riordan,
                EnumObject::Dumont => ObjectKind::Dumont,
                _ => ObjectKind::Matching,
            };
            match target {
                // native enumeration orders for the word families
                ObjectKind::Riordan => {
                    for t in lift(stirperm::trapezoid::enumerate_riordan(a.n, a.cap))? {
                        write(json!(t.entries()).to_string())?;
                    }
                }
                ObjectKind::Dumont => {
                    for w in lift(stirperm::trapezoid::enumerate_dumont(a.n, a.cap))? {
                        write(json!(w.entries()).to_string())?;
                    }
                }
                ObjectKind::Matching => {
                    for m in lift(stirperm::trapezoid::enumerate_matchings(a.n, a.cap))? {
                        write(Object::Matching(m).to_json_value().to_string())?;
                    }
                }
                _ => {
                    for c in lift(stirperm::code::enumerate_codes(a.n, a.cap))? {
                        let obj = lift(Object::Code(c).convert(target))?;
                        write(obj.to_json_value().to_string())?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn word_stats_json(word: &[u32], k: u32) -> Result<Value, String> {
    let mut stats = Map::new();
    stats.insert("asc".into(), json!(scalar_stat(word, StatId::Asc)));
    stats.insert("des".into(), json!(scalar_stat(word, StatId::Des)));
    stats.insert("plat".into(), json!(scalar_stat(word, StatId::Plat)));
    let per_j = |kind: JKind| -> Result<Vec<u64>, String> {
        (1..=k).map(|j| lift(j_stat(word, k, j, kind))).collect()
    };
    stats.insert("plat_j".into(), json!(per_j(JKind::Plateau)?));
    stats.insert("asc_j".into(), json!(per_j(JKind::Ascent)?));
    stats.insert("des_j".into(), json!(per_j(JKind::Descent)?));
    if k == 2 {
        for s in StatId::ALL {
            stats.insert(s.name().into(), json!(scalar_stat(word, s)));
        }
        for s in SetStatId::ALL {
            let vals: Vec<u32> = set_stat(word, s).into_iter().collect();
            stats.insert(s.name().into(), json!(vals));
        }
    }
    Ok(json!({"word": word, "stats": Value::Object(stats)}))
}

fn cmd_stats(a: StatsArgs) -> CliResult {
    for (lineno, line) in io::stdin().lock().lines().enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(&line)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let obj = Object::from_json_value(ObjectKind::Stirling, &value)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let Object::Word(word) = obj else { unreachable!() };
        let sp = StirlingPerm::new(word, a.k).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        emit_line(&word_stats_json(sp.word(), a.k)?.to_string())?;
    }
    Ok(())
}

fn cmd_convert(a: ConvertArgs) -> CliResult {
    let from = lift(ObjectKind::parse(&a.from))?;
    let to = lift(ObjectKind::parse(&a.to))?;
    for (lineno, line) in io::stdin().lock().lines().enumerate() {
        let line = line.map_err(|e| e.to_string())?;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(&line)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let obj = Object::from_json_value(from, &value)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let converted = Object::convert(obj, to)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        emit_line(&converted.to_json_value().to_string())?;
    }
    Ok(())
}

fn print_poly(p: &Polynomial, format: Format) -> CliResult {
    match format {
        Format::Text => emit_line(&p.to_string()),
        _ => emit_line(&p.to_json()),
    }
}

fn cmd_poly(a: PolyArgs) -> CliResult {
    let p = match a.family.as_str() {
        "C3" => lift(poly_c3(a.n, a.cap))?,
        "N3" => lift(poly_n3(a.n, a.cap))?,
        "Ck" => {
            let k = a.k.ok_or("--family Ck needs --k")?;
            lift(poly_ck(a.n, k, a.cap))?
        }
        name => {
            let f = lift(Family::parse(name))?;
            lift(poly_family(f, a.n, a.cap))?
        }
    };
    print_poly(&p, a.format)
}

fn cmd_gamma(a: GammaArgs) -> CliResult {
    if a.multi {
        let k = a.k.unwrap_or(a.n);
        let table = lift(gamma_k(a.n, k))?;
        match a.format {
            Format::Csv => {
                let header: Vec<String> = (1..=a.n).map(|i| format!("i{i}")).collect();
                emit_line(&format!("{},gamma", header.join(",")))?;
                for (profile, c) in table.entries() {
                    let row: Vec<String> = profile.iter().map(|x| x.to_string()).collect();
                    emit_line(&format!("{},{}", row.join(","), c))?;
                }
            }
            Format::Json => {
                let entries: Vec<Value> = table
                    .entries()
                    .iter()
                    .map(|(profile, c)| json!({"profile": profile, "gamma": c.to_string()}))
                    .collect();
                emit_line(&json!({"n": a.n, "entries": entries}).to_string())?;
            }
            Format::Text => {
                for (profile, c) in table.entries() {
                    emit_line(&format!("gamma({}; {:?}) = {}", a.n, profile, c))?;
                }
            }
        }
    } else {
        let table = lift(gamma3(a.n))?;
        match a.format {
            Format::Csv => {
                emit_line("i,j,k,gamma")?;
                for (&(i, j, k), c) in table.entries() {
                    emit_line(&format!("{i},{j},{k},{c}"))?;
                }
            }
            Format::Json => {
                let entries: Vec<Value> = table
                    .entries()
                    .iter()
                    .map(|(&(i, j, k), c)| {
                        json!({"i": i, "j": j, "k": k, "gamma": c.to_string()})
                    })
                    .collect();
                emit_line(&json!({"n": a.n, "entries": entries}).to_string())?;
            }
            Format::Text => {
                for (&(i, j, k), c) in table.entries() {
                    emit_line(&format!("gamma({},{i},{j},{k}) = {}", a.n, c))?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_grammar(a: GrammarArgs) -> CliResult {
    let rules_src = std::fs::read_to_string(&a.rules)
        .map_err(|e| format!("{}: {e}", a.rules.display()))?;
    let grammar = lift(parse_grammar(&rules_src))?;
    let start = lift(parse_poly(&a.start))?;
    let mut result = grammar.derive_n(&start, a.iterate);
    if let Some(path) = &a.subst {
        let subst_src =
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let map = lift(parse_grammar(&subst_src))?;
        let map: std::collections::BTreeMap<String, Polynomial> =
            map.rules().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        result = result.substitute(&map);
    }
    print_poly(&result, a.format)
}

fn cmd_verify(a: VerifyArgs) -> ExitCode {
    if a.list {
        for info in verify::checks() {
            println!("{:<20} {}", info.id, info.summary);
        }
        return ExitCode::SUCCESS;
    }
    let selected: Vec<&'static verify::CheckInfo> = if a.theorem == "all" {
        verify::checks().iter().collect()
    } else {
        match verify::find(&a.theorem) {
            Ok(info) => vec![info],
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    };
    // independent jobs run in parallel; output is re-stabilized into
    // registry order before printing
    let reports: Vec<verify::VerificationReport> = selected
        .par_iter()
        .map(|info| verify::run(info.id, a.max_n, a.k, a.cap).expect("registered id"))
        .collect();
    let all_pass = reports.iter().all(|r| r.pass);
    match a.format {
        Format::Json => {
            println!("{}", serde_json::to_string(&reports).expect("serializable"));
        }
        _ => {
            for r in &reports {
                match &r.counterexample {
                    Some(cex) => println!("FAIL {} ({}): {}", r.id, r.range, cex),
                    None => println!("PASS {} ({})", r.id, r.range),
                }
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
