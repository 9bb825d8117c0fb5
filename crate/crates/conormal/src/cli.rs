//! The `conormal` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or an asserted identity
//! fails, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use conormal_core::cells::{iwahori_cell, parabolic_cell};
use conormal_core::constructions::*;
use conormal_core::partitions::Composition;
use conormal_core::tableau::TableauData;
use conormal_core::weyl::{AffinePermutation, ParabolicSubset};
use conormal_core::{LaurentMatrix, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::{MatrixJson, RootJson, WindowJson, SCHEMA};
use crate::verify::{self, Config, Suite};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "conormal", version, about = "Affine permutations, Iwahori cells and the kappa, varpi, v_k constructions attached to a composition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rows with the Red/Blue colouring, l, m, t and the columns f^c_j.
    Tableau {
        #[arg(long)]
        lambda: Composition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// kappa with its translation part and the kappa report.
    Kappa {
        #[arg(long)]
        lambda: Composition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// varpi, its lift, the Iwahori witnesses b and c, and w_g, w_p.
    Varpi {
        #[arg(long)]
        lambda: Composition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Divisor data for index i: w = s_k w_0^P, gamma, v_k and v_k^P.
    Divisor {
        #[arg(long)]
        lambda: Composition,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Iwahori cell of a matrix read as JSON from a file or `-` (stdin).
    Cell {
        #[arg(long)]
        matrix: String,
        /// Simple reflections left out of J, e.g. `0,2` (J = the rest).
        #[arg(long, value_delimiter = ',')]
        parabolic: Option<Vec<usize>>,
        /// Use the parabolic of this composition.
        #[arg(long, conflicts_with = "parabolic")]
        lambda: Option<Composition>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include the wall-clock duration in JSON output.
        #[arg(long)]
        timing: bool,
    },
    /// Full report of every suite.
    Report {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        timing: bool,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let (doc, text, code) = match command {
        Command::Tableau { lambda, format } => finish(tableau(&lambda), format),
        Command::Kappa { lambda, format } => finish(kappa_doc(&lambda)?, format),
        Command::Varpi { lambda, format } => finish(varpi_doc(&lambda)?, format),
        Command::Divisor { lambda, i, format } => finish(divisor_doc(&lambda, i)?, format),
        Command::Cell { matrix, parabolic, lambda, format } => finish(cell_doc(&matrix, parabolic, lambda)?, format),
        Command::Verify { suite, nmax, seed, format, timing } => verify_doc(suite, nmax, seed, format, timing)?,
        Command::Report { format, nmax, seed, timing } => verify_doc(Suite::All, nmax, seed, format, timing)?,
    };
    match doc {
        Some(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v)?),
        None => write!(out, "{text}"),
    }
    .map_err(|e| CliError::Io { path: "stdout".into(), source: e })?;
    Ok(code)
}

/// A computed document and its text rendering.
struct Doc {
    json: Value,
    text: String,
}

fn finish(doc: Doc, format: Format) -> (Option<Value>, String, i32) {
    match format {
        Format::Json => (Some(doc.json), String::new(), 0),
        Format::Text => (None, doc.text, 0),
    }
}

fn word_str(w: &AffinePermutation) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn matrix_json<F: conormal_core::Field>(m: &LaurentMatrix<F>) -> Result<Value, CliError> {
    Ok(serde_json::to_value(MatrixJson::encode(m)?)?)
}

fn window_json(w: &AffinePermutation) -> Value {
    serde_json::to_value(WindowJson::from(w)).expect("windows serialize")
}

fn indent(m: &impl std::fmt::Display) -> String {
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn tableau(lambda: &Composition) -> Doc {
    let tab = TableauData::build(lambda);
    let rows: Vec<Value> = tab.red.iter().zip(&tab.blue).enumerate().map(|(k, (r, b))| json!({"row": k + 1, "red": r, "blue": b})).collect();
    let s1: Vec<usize> = tab.s1.iter().copied().collect();
    let s2: Vec<usize> = tab.s2.iter().copied().collect();
    let json = json!({
        "schema": SCHEMA,
        "lambda": lambda.parts(),
        "nu": tab.nu.parts(),
        "s1": s1,
        "s2": s2,
        "rows": rows,
        "l": tab.l,
        "m": tab.m,
        "t": tab.t,
        "columns": tab.columns,
    });
    let mut text = format!("lambda  {lambda}\nnu      {}\n", tab.nu);
    for (k, (r, b)) in tab.red.iter().zip(&tab.blue).enumerate() {
        text.push_str(&format!("row {:<3} red [{}]  blue [{}]\n", k + 1, list(r), list(b)));
    }
    for (c, col) in tab.columns.iter().enumerate() {
        text.push_str(&format!("column {:<3} f = [{}]\n", c + 1, list(col)));
    }
    text.push_str(&format!("S1 = [{}]\nS2 = [{}]\nl  = [{}]\nm  = [{}]\nt  = [{}]\n", list(&s1), list(&s2), list(&tab.l), list(&tab.m), list(&tab.t)));
    Doc { json, text }
}

fn kappa_doc(lambda: &Composition) -> Result<Doc, CliError> {
    let bundle = kappa(lambda);
    bundle.check()?;
    let report = check_kappa(&bundle);
    let tab = &bundle.tableau;
    let length = bundle.kappa.length();
    let json = json!({
        "schema": SCHEMA,
        "lambda": lambda.parts(),
        "nu": tab.nu.parts(),
        "l": tab.l,
        "m": tab.m,
        "kappa": window_json(&bundle.kappa),
        "length": length,
        "length_formula": kappa_length_formula(tab),
        "dim_flag_variety": lambda.dim_flag_variety(),
        "reduced_word": bundle.kappa.reduced_word(),
        "sigma": window_json(&bundle.sigma),
        "q": bundle.q,
        "tau_q": window_json(&bundle.tau_q),
        "report": {
            "in_w_hat_p": report.in_w_hat_p,
            "left_stable": report.left_stable,
            "length_formula": [report.length_formula.0, report.length_formula.1],
            "is_compactification": report.is_compactification,
        },
    });
    let text = format!(
        "lambda  {lambda}\nnu      {}\nl       [{}]\nm       [{}]\nkappa   {}\nlength  {length} (formula {}, dim G/P {})\nsigma   {}\nq       [{}]\ntau_q   {}\nin W^P {}, left stable {}, compactification {}\n",
        tab.nu,
        list(&tab.l),
        list(&tab.m),
        bundle.kappa,
        kappa_length_formula(tab),
        lambda.dim_flag_variety(),
        bundle.sigma,
        list(&bundle.q),
        bundle.tau_q,
        report.in_w_hat_p,
        report.left_stable,
        report.is_compactification,
    );
    Ok(Doc { json, text })
}

fn varpi_doc(lambda: &Composition) -> Result<Doc, CliError> {
    let bundle = kappa(lambda);
    let wit = varpi_witness::<Rational>(&bundle.tableau)?;
    let (w_g, w_p) = decompose_varpi(&bundle, &wit.varpi)?;
    let json = json!({
        "schema": SCHEMA,
        "lambda": lambda.parts(),
        "varpi": window_json(&wit.varpi),
        "length": wit.varpi.length(),
        "lift": matrix_json(&wit.lift)?,
        "b": matrix_json(&wit.b)?,
        "c": matrix_json(&wit.c)?,
        "w_g": window_json(&w_g),
        "w_p": window_json(&w_p),
    });
    let text = format!(
        "lambda  {lambda}\nvarpi   {} (length {})\nw_g     {}\nw_p     {}\nlift\n{}b\n{}c\n{}",
        wit.varpi,
        wit.varpi.length(),
        w_g,
        w_p,
        indent(&wit.lift),
        indent(&wit.b),
        indent(&wit.c),
    );
    Ok(Doc { json, text })
}

fn divisor_doc(lambda: &Composition, i: usize) -> Result<Doc, CliError> {
    let d = divisor_data::<Rational>(lambda, i)?;
    let json = json!({
        "schema": SCHEMA,
        "lambda": lambda.parts(),
        "i": d.i,
        "k": d.k,
        "w": window_json(&d.w),
        "sign": d.sign,
        "lift": matrix_json(&d.lift)?,
        "gamma": RootJson::from(d.gamma),
        "v_k": window_json(&d.v_k),
        "v_k_min": window_json(&d.v_k_min),
        "length": d.v_k_min.length(),
        "dim_flag_variety": lambda.dim_flag_variety(),
    });
    let text = format!(
        "lambda  {lambda}\ni = {}, k = {}\nw       {}\ngamma   {}\nv_k     {}\nv_k^P   {} (length {}, dim G/P {})\nlift\n{}",
        d.i,
        d.k,
        d.w,
        d.gamma,
        d.v_k,
        d.v_k_min,
        d.v_k_min.length(),
        lambda.dim_flag_variety(),
        indent(&d.lift),
    );
    Ok(Doc { json, text })
}

fn read_matrix(path: &str) -> Result<LaurentMatrix<Rational>, CliError> {
    let mut raw = String::new();
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        std::io::stdin().read_to_string(&mut raw).map_err(io)?;
    } else {
        raw = std::fs::read_to_string(path).map_err(io)?;
    }
    let parsed: MatrixJson = serde_json::from_str(&raw)?;
    parsed.decode()
}

#[derive(Serialize)]
struct CellJson {
    schema: u32,
    n: usize,
    window: Vec<i64>,
    reduced_word: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parabolic: Option<ParabolicJson>,
}

#[derive(Serialize)]
struct ParabolicJson {
    /// Simple reflections in `J`.
    j: Vec<usize>,
    window: Vec<i64>,
    reduced_word: Vec<usize>,
}

fn cell_doc(path: &str, excluded: Option<Vec<usize>>, lambda: Option<Composition>) -> Result<Doc, CliError> {
    let m = read_matrix(path)?;
    let n = m.dim();
    let j = match (excluded, lambda) {
        (Some(ex), _) => {
            if let Some(bad) = ex.iter().find(|&&i| i >= n) {
                return Err(CliError::Usage(format!("--parabolic index {bad} is not below n = {n}")));
            }
            if ex.is_empty() {
                return Err(CliError::Usage("--parabolic must leave out at least one simple reflection".into()));
            }
            Some(ParabolicSubset::new(n, (0..n).filter(|i| !ex.contains(i)))?)
        }
        (None, Some(lambda)) => {
            if lambda.n() != n {
                return Err(CliError::Usage(format!("--lambda has size {} but the matrix is {n} x {n}", lambda.n())));
            }
            Some(lambda.parabolic())
        }
        (None, None) => None,
    };
    let w = iwahori_cell(&m)?;
    let reduced = j.as_ref().map(|j| parabolic_cell(&m, j)).transpose()?;
    let mut text = format!("window {}\nword   {}\n", w, word_str(&w));
    if let (Some(j), Some(r)) = (&j, &reduced) {
        let members: Vec<usize> = j.iter().collect();
        text.push_str(&format!("J = {{{}}}\nparabolic window {}\nparabolic word   {}\n", list(&members), r, word_str(r)));
    }
    let doc = CellJson {
        schema: SCHEMA,
        n,
        window: w.window().to_vec(),
        reduced_word: w.reduced_word(),
        parabolic: j.zip(reduced).map(|(j, r)| ParabolicJson { j: j.iter().collect(), window: r.window().to_vec(), reduced_word: r.reduced_word() }),
    };
    Ok(Doc { json: serde_json::to_value(doc)?, text })
}

fn verify_doc(suite: Suite, nmax: usize, seed: u64, format: Format, timing: bool) -> Result<(Option<Value>, String, i32), CliError> {
    if nmax == 0 {
        return Err(CliError::Usage("--nmax must be at least 1".into()));
    }
    let start = std::time::Instant::now();
    let report = verify::verify(suite, &Config::new(nmax, seed), timing);
    let code = if report.passed { 0 } else { 1 };
    Ok(match format {
        Format::Json => (Some(serde_json::to_value(&report)?), String::new(), code),
        Format::Text => (None, verify::render_text(&report, start.elapsed().as_millis() as u64), code),
    })
}
