//! Command-line front end for the `cremona` crate.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 not a proper homaloidal
//! type, 3 invalid matrix, 4 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cremona::homaloidal::{enumerate_types, hudson_test, label_types, length_table, TableRow};
use cremona::monomial::{
    conjugate_to_ordered, dynamical_length, factor_word, gl2_length, ordered_to_cf, IntMatrix2,
};
use cremona::oracle::{verify_lengths, verify_predecessors, verify_words, VerifyReport};
use cremona::{parse_class, parse_matrix, parse_word, Error, HomaloidalType};
use serde_json::{json, Value};

/// Types of degree at most this get a table label in chain output.
const LABEL_DEGREE: i64 = 40;

#[derive(Parser)]
#[command(
    name = "cremona",
    version,
    about = "Lengths of plane Cremona transformations"
)]
struct Cli {
    /// Print a JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length of a homaloidal type such as "(17; 6^8)".
    Length {
        class: String,
        /// Also print the predecessor chain.
        #[arg(long)]
        chain: bool,
    },
    /// Predecessor chain of a homaloidal type down to (1).
    Chain { class: String },
    /// Hudson test for a class satisfying the Noether equalities.
    Hudson {
        class: String,
        /// Print every step of the descent.
        #[arg(long)]
        trace: bool,
    },
    /// Length table of all proper types of one degree.
    Table { degree: i64 },
    /// All proper types of one degree with their step index sets.
    Enumerate { degree: i64 },
    /// Distance in the Wright complex, twice the length.
    Wright { class: String },
    /// Monomial map given as a matrix "[[a,b],[c,d]]" or a word "s1,s2,...".
    Mono {
        input: String,
        #[command(flatten)]
        what: MonoWhat,
    },
    /// Length of a monomial map.
    MonoLength { input: String },
    /// Dynamical length of a monomial map.
    MonoDyn { input: String },
    /// L/R factorization of a non-negative matrix of determinant one.
    Factor { input: String },
    /// Continued fraction exponents of an ordered matrix, or the matrix of a tuple.
    Cf { input: String },
    /// Run the oracle agreement checks.
    Verify {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Largest degree for the predecessor and length checks.
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
        /// Largest exponent sum for the word check.
        #[arg(long, default_value_t = 14)]
        max_sum: u64,
        /// Fresh points allowed in the length search.
        #[arg(long, default_value_t = 1)]
        fresh: u32,
    },
}

#[derive(Args, Default)]
struct MonoWhat {
    #[arg(long)]
    length: bool,
    #[arg(long = "dyn")]
    dyn_: bool,
    #[arg(long)]
    factor: bool,
    #[arg(long)]
    cf: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Predecessor,
    Length,
    Words,
    All,
}

/// A failed command: exit code, message and optional extra lines.
struct Failure {
    code: u8,
    message: String,
    detail: Vec<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Noether { .. }
            | Error::NonPositiveDegree
            | Error::NonPositiveMultiplicity
            | Error::NotProper => 2,
            Error::Determinant(..)
            | Error::NegativeEntry
            | Error::NotOrdered
            | Error::SmallTrace(_)
            | Error::OddWord => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
            detail: Vec::new(),
        }
    }
}

type CmdResult = Result<Output, Failure>;

/// Text lines and the JSON record of a successful command.
struct Output {
    text: Vec<String>,
    record: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.record).expect("records serialize")
                );
            } else {
                for line in out.text {
                    println!("{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if cli.json {
                let record = json!({ "error": f.message, "exit_code": f.code, "detail": f.detail });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&record).expect("records serialize")
                );
            }
            eprintln!("error: {}", f.message);
            for line in &f.detail {
                eprintln!("  {line}");
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Length { class, chain } => cmd_length(&class, chain),
        Command::Chain { class } => cmd_chain(&class),
        Command::Hudson { class, trace } => cmd_hudson(&class, trace),
        Command::Table { degree } => cmd_table(degree),
        Command::Enumerate { degree } => cmd_enumerate(degree),
        Command::Wright { class } => cmd_wright(&class),
        Command::Mono { input, what } => cmd_mono(&input, what),
        Command::MonoLength { input } => cmd_mono(
            &input,
            MonoWhat {
                length: true,
                ..Default::default()
            },
        ),
        Command::MonoDyn { input } => cmd_mono(
            &input,
            MonoWhat {
                dyn_: true,
                ..Default::default()
            },
        ),
        Command::Factor { input } => cmd_mono(
            &input,
            MonoWhat {
                factor: true,
                ..Default::default()
            },
        ),
        Command::Cf { input } => cmd_mono(
            &input,
            MonoWhat {
                cf: true,
                ..Default::default()
            },
        ),
        Command::Verify {
            scope,
            max_degree,
            max_sum,
            fresh,
        } => cmd_verify(scope, max_degree, max_sum, fresh),
    }
}

/// Parses a proper homaloidal type. Rejected classes carry the Hudson trace.
fn parse_type(text: &str) -> Result<HomaloidalType, Failure> {
    let raw = parse_class(text)?;
    HomaloidalType::new(&raw).map_err(|e| {
        let mut f = Failure::from(e);
        if f.code == 2 {
            if let Ok(out) = hudson_test(&raw) {
                f.detail = out.trace.iter().map(ToString::to_string).collect();
            }
        }
        f
    })
}

fn type_json(t: &HomaloidalType) -> Value {
    json!({ "type": t.to_string(), "degree": t.degree(), "mults": t.mults() })
}

/// Table label of a type, when its degree is small enough to enumerate quickly.
fn label_of(t: &HomaloidalType) -> Option<String> {
    if t.degree() > LABEL_DEGREE {
        return None;
    }
    let types = enumerate_types(t.degree()).ok()?;
    let i = types.iter().position(|x| x == t)?;
    label_types(&types).into_iter().nth(i)
}

fn chain_record(t: &HomaloidalType, chain: &[HomaloidalType]) -> Value {
    let labels: Vec<Option<String>> = chain.iter().map(label_of).collect();
    json!({
        "input": t.to_string(),
        "degree": t.degree(),
        "mults": t.mults(),
        "length": chain.len() - 1,
        "chain": chain.iter().map(type_json).collect::<Vec<_>>(),
        "labels": labels,
    })
}

fn arrows(chain: &[HomaloidalType]) -> String {
    chain
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" -> ")
}

fn cmd_length(class: &str, with_chain: bool) -> CmdResult {
    let t = parse_type(class)?;
    let chain = t.chain()?;
    let mut text = vec![(chain.len() - 1).to_string()];
    if with_chain {
        text.push(arrows(&chain));
    }
    let mut record = chain_record(&t, &chain);
    record["command"] = json!("length");
    Ok(Output { text, record })
}

fn cmd_chain(class: &str) -> CmdResult {
    let t = parse_type(class)?;
    let chain = t.chain()?;
    let text = chain.iter().map(ToString::to_string).collect();
    let mut record = chain_record(&t, &chain);
    record["command"] = json!("chain");
    Ok(Output { text, record })
}

fn cmd_hudson(class: &str, trace: bool) -> CmdResult {
    let raw = parse_class(class)?;
    let out = hudson_test(&raw)?;
    let steps: Vec<String> = out.trace.iter().map(ToString::to_string).collect();
    if !out.proper {
        return Err(Failure {
            code: 2,
            message: format!("{raw} is not a proper homaloidal type"),
            detail: steps,
        });
    }
    let mut text = vec!["proper".to_string()];
    if trace {
        text.extend(steps.iter().cloned());
    }
    let record = json!({
        "command": "hudson",
        "input": raw.to_string(),
        "degree": raw.degree,
        "mults": raw.mults,
        "proper": true,
        "trace": steps,
    });
    Ok(Output { text, record })
}

fn row_line(row: &TableRow) -> String {
    let dash = || "-".to_string();
    format!(
        "{}\t{}\t{}\t{}\t{}",
        row.label,
        row.homaloidal_type,
        row.length,
        row.predecessor.clone().unwrap_or_else(dash),
        row.castelnuovo.clone().unwrap_or_else(dash)
    )
}

fn cmd_table(degree: i64) -> CmdResult {
    if degree < 1 {
        return Err(Failure {
            code: 1,
            message: "degree must be at least 1".into(),
            detail: Vec::new(),
        });
    }
    let rows: Vec<TableRow> = length_table(degree)?
        .into_iter()
        .filter(|r| r.homaloidal_type.degree() == degree)
        .collect();
    let mut text = vec!["label\ttype\tlength\tpredecessor\tcastelnuovo".to_string()];
    text.extend(rows.iter().map(row_line));
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "type": r.homaloidal_type.to_string(),
                "degree": r.homaloidal_type.degree(),
                "mults": r.homaloidal_type.mults(),
                "length": r.length,
                "predecessor": r.predecessor,
                "castelnuovo": r.castelnuovo,
            })
        })
        .collect();
    let labels: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
    let record =
        json!({ "command": "table", "degree": degree, "labels": labels, "rows": json_rows });
    Ok(Output { text, record })
}

fn cmd_enumerate(degree: i64) -> CmdResult {
    if degree < 1 {
        return Err(Failure {
            code: 1,
            message: "degree must be at least 1".into(),
            detail: Vec::new(),
        });
    }
    let types = enumerate_types(degree)?;
    let labels = label_types(&types);
    let mut text = Vec::new();
    let mut items = Vec::new();
    for (t, label) in types.iter().zip(&labels) {
        let s = if t.is_identity() {
            Vec::new()
        } else {
            t.s_set()
        };
        if s.len() >= 3 {
            eprintln!("note: {t} has {} admissible step indices {s:?}", s.len());
        }
        text.push(format!("{label}\t{t}"));
        items.push(json!({ "label": label, "type": t.to_string(), "degree": t.degree(), "mults": t.mults(), "s_set": s }));
    }
    let record =
        json!({ "command": "enumerate", "degree": degree, "labels": labels, "types": items });
    Ok(Output { text, record })
}

fn cmd_wright(class: &str) -> CmdResult {
    let t = parse_type(class)?;
    let distance = t.wright_distance()?;
    let record = json!({
        "command": "wright",
        "input": t.to_string(),
        "degree": t.degree(),
        "mults": t.mults(),
        "length": t.length()?,
        "distance": distance,
    });
    Ok(Output {
        text: vec![distance.to_string()],
        record,
    })
}

fn matrix_json(m: &IntMatrix2) -> Value {
    json!([[m.a, m.b], [m.c, m.d]])
}

fn cmd_mono(input: &str, mut what: MonoWhat) -> CmdResult {
    if !(what.length || what.dyn_ || what.factor || what.cf) {
        what.length = true;
    }
    let is_matrix = input.trim_start().starts_with('[');
    let (m, word_input) = if is_matrix {
        (parse_matrix(input)?, None)
    } else {
        let w = parse_word(input)?;
        (w.matrix()?, Some(w))
    };
    let det = m.det()?;
    if det.abs() != 1 {
        return Err(Error::Determinant(det, "+1 or -1").into());
    }
    let mut text = vec![format!("matrix {m}")];
    let mut record = json!({ "command": "mono", "input": input, "matrix": matrix_json(&m) });
    if what.length {
        let g = gl2_length(&m)?;
        text.push(format!("length {}", g.length));
        let w = &g.witness;
        text.push(format!(
            "witness {} * {} * M * {} = M{}",
            w.sign, w.left, w.right, w.word
        ));
        record["length"] = json!(g.length);
        record["witness"] = json!({
            "sign": w.sign,
            "left": matrix_json(&w.left),
            "right": matrix_json(&w.right),
            "word": w.word.exps(),
        });
    }
    if what.dyn_ {
        let value = dynamical_length(&m)?;
        text.push(format!("dynamical length {value}"));
        record["dynamical_length"] = json!(value.to_string());
        if det == 1 && m.trace()?.abs() >= 3 {
            let n = if m.trace()? > 0 { m } else { m.checked_neg()? };
            let c = conjugate_to_ordered(&n)?;
            text.push(format!(
                "ordered conjugate M{} via {}",
                c.word, c.conjugator
            ));
            record["ordered_word"] = json!(c.word.exps());
            record["conjugator"] = matrix_json(&c.conjugator);
        }
    }
    if what.factor {
        let f = factor_word(&m)?;
        let shown = if f.flipped {
            format!("tau * M{} * tau", f.word)
        } else {
            format!("M{}", f.word)
        };
        text.push(format!("factor {shown}"));
        record["factor"] = json!({ "word": f.word.exps(), "flipped": f.flipped });
    }
    if what.cf {
        match word_input {
            // A tuple of exponents denotes a continued fraction; report its matrix.
            Some(w) => {
                let cm = cremona::monomial::cf_to_word(w.exps())?;
                text.push(format!("cf {w} -> {cm}"));
                record["cf"] = json!(w.exps());
            }
            None => {
                let w = ordered_to_cf(&m)?;
                text.push(format!("cf {w}"));
                record["cf"] = json!(w.exps());
            }
        }
    }
    Ok(Output { text, record })
}

fn report_lines(name: &str, r: &VerifyReport, text: &mut Vec<String>) -> Value {
    let status = if r.passed() { "ok" } else { "FAILED" };
    text.push(format!("{name}: {} checked, {status}", r.checked));
    text.extend(r.failures.iter().map(|f| format!("  {f}")));
    json!({ "checked": r.checked, "passed": r.passed(), "failures": r.failures })
}

fn cmd_verify(scope: Scope, max_degree: i64, max_sum: u64, fresh: u32) -> CmdResult {
    let mut text = Vec::new();
    let mut record = json!({ "command": "verify" });
    let mut failed = false;
    let want = |s: Scope| scope == Scope::All || scope == s;
    if want(Scope::Predecessor) {
        let r = verify_predecessors(max_degree)?;
        failed |= !r.passed();
        record["predecessor"] = report_lines("predecessor", &r, &mut text);
    }
    if want(Scope::Length) {
        let r = verify_lengths(max_degree, fresh)?;
        failed |= !r.passed();
        record["length"] = report_lines("length", &r, &mut text);
    }
    if want(Scope::Words) {
        let r = verify_words(max_sum);
        failed |= !r.passed();
        record["words"] = report_lines("words", &r, &mut text);
    }
    if failed {
        return Err(Failure {
            code: 4,
            message: "verification failed".into(),
            detail: text,
        });
    }
    Ok(Output { text, record })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_exit_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::Parse("x".into())), 1);
        assert_eq!(code(Error::NotProper), 2);
        assert_eq!(
            code(Error::Noether {
                degree: 3,
                sum: 3,
                sum_sq: 3
            }),
            2
        );
        assert_eq!(code(Error::Determinant(2, "1")), 3);
        assert_eq!(code(Error::NotOrdered), 3);
    }

    #[test]
    fn rejected_type_carries_trace() {
        let f = parse_type("(7; 4^2, 3, 1^7)").err().unwrap();
        assert_eq!(f.code, 2);
        assert_eq!(f.detail, ["(7; 4^2, 3, 1^7)", "(3; 1^7, -1)"]);
    }

    #[test]
    fn labels_follow_the_table() {
        assert_eq!(
            label_of(&HomaloidalType::parse("(8; 3^7)").unwrap()).as_deref(),
            Some("8.8")
        );
        assert_eq!(
            label_of(&HomaloidalType::parse("(2; 1^3)").unwrap()).as_deref(),
            Some("2")
        );
    }
}
