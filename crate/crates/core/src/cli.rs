//! Command-line front end. [`run`] takes the argument vector and returns
//! everything the process would print, so it can be tested without
//! spawning a binary.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bwt::{bwt, is_perfectly_clustered};
use crate::census::{
    builtin_census, compare_tribonacci, pp_inventory, verify_bounds, write_csv, write_json,
    StabilizationPolicy,
};
use crate::classes::{is_central, is_closed, is_rich, is_trapezoidal, pathological_pair};
use crate::error::Error;
use crate::periodicity::{fractional_root, is_pal_periodicity, is_symmetric};
use crate::search::{
    binary_family, bfs_longest_limited, count_binary_pp_words, periodic_pp_set, ternary_families,
    verify_structural_forms, AlphabetMode, DEFAULT_MAX_FRONTIER,
};
use crate::sequences::{builtin, factor};
use crate::verify::{run_all, Tier, VerifyOptions};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    /// Machine-readable form, present when `--json` was given.
    pub json: Option<String>,
}

impl CommandOutcome {
    fn ok(code: i32, stdout: String) -> Self {
        CommandOutcome { code, stdout, stderr: String::new(), json: None }
    }

    fn error(code: i32, stderr: String) -> Self {
        CommandOutcome { code, stdout: String::new(), stderr, json: None }
    }

    fn with_json<T: Serialize>(mut self, enabled: bool, value: &T) -> Self {
        if enabled {
            self.json = Some(serde_json::to_string_pretty(value).expect("serializable") + "\n");
        }
        self
    }
}

#[derive(Parser, Debug)]
#[command(name = "palper", version, about = "Palindromic periodicities of finite and infinite words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a word against one predicate.
    Check {
        predicate: Predicate,
        word: Word,
        #[arg(long)]
        json: bool,
    },
    /// Burrows-Wheeler transform.
    Bwt {
        word: Word,
        /// Also test for perfect clustering over this alphabet size.
        #[arg(long)]
        clustered: Option<u8>,
    },
    /// Print a factor of a builtin infinite word.
    Generate {
        name: String,
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Count palindromic-periodicity factors by length.
    Census {
        name: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 32)]
        to: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Compare the Tribonacci census against its closed form.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// List every palindromic-periodicity factor of a builtin word, or of
    /// `x^ω` with `--periodic x`.
    Inventory {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        periodic: Option<Word>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Check the known linear bounds against the census.
    Bounds {
        name: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 64)]
        to: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Breadth-first search for long words with few palindromic
    /// periodicities.
    Search(SearchArgs),
    /// Number of binary palindromic periodicities of each length.
    #[command(name = "count-a374495")]
    CountA374495 {
        #[arg(long, default_value_t = 21)]
        max: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Run the reproducibility checklist.
    VerifyPaper {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
        /// Include the binary threshold-29 search.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
        /// Print every individual check.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Predicate {
    IsPp,
    Root,
    Symmetric,
    Sturmian,
    Trapezoidal,
    Rich,
    Closed,
    Central,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormSet {
    Ternary,
    Binary,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    threshold: usize,
    #[arg(long, default_value_t = 40)]
    cap: usize,
    /// Fixed alphabet size; the alphabet grows as needed if omitted.
    #[arg(long)]
    alphabet: Option<u8>,
    /// Check survivors against a family of shapes instead of reporting
    /// the longest ones.
    #[arg(long)]
    forms: Option<FormSet>,
    #[arg(long, default_value_t = 9)]
    min_len: usize,
    /// Allow thresholds above 20.
    #[arg(long)]
    deep: bool,
    /// Give up once a level holds more words than this.
    #[arg(long, default_value_t = DEFAULT_MAX_FRONTIER)]
    max_frontier: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PolicyArgs {
    /// First prefix length tried.
    #[arg(long, default_value_t = 4096)]
    initial: usize,
    /// Largest prefix length allowed.
    #[arg(long, default_value_t = 1 << 22)]
    prefix_cap: usize,
    /// Longest factor length examined by inventories.
    #[arg(long, default_value_t = 64)]
    probe: usize,
}

impl PolicyArgs {
    fn policy(&self) -> StabilizationPolicy {
        StabilizationPolicy {
            initial: self.initial,
            cap: self.prefix_cap,
            probe_len: self.probe,
            ..StabilizationPolicy::default()
        }
    }
}

const DEEP_THRESHOLD: usize = 20;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StabilizationCap { .. }
        | Error::InventoryUnbounded { .. }
        | Error::Unbounded { .. }
        | Error::FrontierLimit { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn yes_no(ok: bool, detail: &str) -> CommandOutcome {
    let text = match (ok, detail.is_empty()) {
        (true, true) => "yes\n".to_string(),
        (true, false) => format!("yes {detail}\n"),
        (false, true) => "no\n".to_string(),
        (false, false) => format!("no {detail}\n"),
    };
    CommandOutcome::ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED }, text)
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string() + "\n").collect()
}

#[derive(Serialize)]
struct CheckJson<'a, T: Serialize> {
    predicate: &'a str,
    word: &'a Word,
    result: bool,
    detail: T,
}

fn check(predicate: Predicate, word: &Word, json: bool) -> crate::Result<CommandOutcome> {
    let name = predicate.to_possible_value().expect("no skipped variants").get_name().to_string();
    let emit = |ok: bool, text: String, detail: serde_json::Value| {
        yes_no(ok, &text).with_json(json, &CheckJson { predicate: &name, word, result: ok, detail })
    };
    Ok(match predicate {
        Predicate::IsPp => match is_pal_periodicity(word) {
            Some(t) => emit(true, format!("p={} s={}", t.p, t.s), serde_json::json!(t)),
            None => emit(false, String::new(), serde_json::Value::Null),
        },
        Predicate::Root => {
            let root = fractional_root(word)?;
            CommandOutcome::ok(EXIT_OK, format!("{root}\n")).with_json(json, &root)
        }
        Predicate::Symmetric => match is_symmetric(word) {
            Some(m) => emit(
                true,
                format!("{}|{}", Word::from_vec_unchecked(word[..m].to_vec()), Word::from_vec_unchecked(word[m..].to_vec())),
                serde_json::json!({ "split": m }),
            ),
            None => emit(false, String::new(), serde_json::Value::Null),
        },
        Predicate::Sturmian => {
            crate::word::require_nonempty(word)?;
            match pathological_pair(word)? {
                None => emit(true, String::new(), serde_json::Value::Null),
                Some(pair) => emit(
                    false,
                    format!("{} {}", pair.zero_factor(), pair.one_factor()),
                    serde_json::json!(pair),
                ),
            }
        }
        Predicate::Trapezoidal => emit(is_trapezoidal(word)?, String::new(), serde_json::Value::Null),
        Predicate::Rich => emit(is_rich(word), String::new(), serde_json::Value::Null),
        Predicate::Closed => emit(is_closed(word)?, String::new(), serde_json::Value::Null),
        Predicate::Central => emit(is_central(word)?, String::new(), serde_json::Value::Null),
    })
}

fn search(args: &SearchArgs) -> crate::Result<CommandOutcome> {
    if args.threshold > DEEP_THRESHOLD && !args.deep {
        return Err(Error::InvalidArgument(format!(
            "thresholds above {DEEP_THRESHOLD} are long-running; pass --deep"
        )));
    }
    let mode = args.alphabet.map_or(AlphabetMode::Growing, AlphabetMode::Fixed);
    if let Some(set) = args.forms {
        let forms = match set {
            FormSet::Ternary => ternary_families(),
            FormSet::Binary => vec![binary_family()],
        };
        let r = verify_structural_forms(args.threshold, args.min_len, args.cap, mode, &forms)?;
        let mut out = String::new();
        for (len, count) in &r.survivors {
            out += &format!("length {len}: {count} survivors\n");
        }
        for v in &r.violations {
            out += &format!("violation {v}\n");
        }
        out += if r.passed() { "all survivors match\n" } else { "some survivors match no form\n" };
        let code = if r.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
        return Ok(CommandOutcome::ok(code, out).with_json(args.json, &r));
    }
    let r = bfs_longest_limited(args.threshold, args.cap, mode, args.max_frontier)?;
    let mut out = format!(
        "threshold {}: longest length {} ({})\n",
        r.threshold,
        r.length_reached,
        if r.closed { "closed" } else { "length cap reached" }
    );
    out += &format!(
        "frontier sizes: {}\n",
        r.frontier_sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    out += &lines(&r.extremal_relabeled);
    let code = if r.closed { EXIT_OK } else { EXIT_CAP };
    Ok(CommandOutcome::ok(code, out).with_json(args.json, &r))
}

fn dispatch(cmd: Command) -> crate::Result<CommandOutcome> {
    match cmd {
        Command::Check { predicate, word, json } => check(predicate, &word, json),
        Command::Bwt { word, clustered } => {
            let b = bwt(&word)?;
            match clustered {
                None => Ok(CommandOutcome::ok(EXIT_OK, format!("{b}\n"))),
                Some(k) => {
                    let ok = is_perfectly_clustered(&word, k)?;
                    Ok(yes_no(ok, &b.to_string()))
                }
            }
        }
        Command::Generate { name, len, start } => {
            let x = factor(&builtin(&name)?, start, len)?;
            Ok(CommandOutcome::ok(EXIT_OK, format!("{x}\n")))
        }
        Command::Census { name, from, to, json, csv, compare, policy } => {
            let policy = policy.policy();
            if compare {
                if name != "tribonacci" {
                    return Err(Error::InvalidArgument("--compare is only defined for tribonacci".into()));
                }
                let cmp = compare_tribonacci(from, to, &policy)?;
                let fmt_ns = |ms: &[crate::census::Mismatch]| {
                    ms.iter().map(|m| m.n.to_string()).collect::<Vec<_>>().join(" ")
                };
                let out = format!(
                    "closed form as stated disagrees at: {}\nliteral numbering disagrees at: {}\namended threshold disagrees at: {}\n",
                    fmt_ns(&cmp.standard_mismatches),
                    fmt_ns(&cmp.literal_mismatches),
                    fmt_ns(&cmp.amended_mismatches)
                );
                return Ok(CommandOutcome::ok(EXIT_OK, out).with_json(json, &cmp));
            }
            let rows = builtin_census(&name, from, to, &policy)?;
            let mut buf = Vec::new();
            if csv {
                write_csv(&rows, &mut buf).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            } else {
                for r in &rows {
                    let formula = r.formula.map_or("-".to_string(), |f| f.to_string());
                    buf.extend(format!("{}\t{}\t{}\t{}\n", r.n, r.factors, r.pp, formula).bytes());
                }
            }
            let mut outcome = CommandOutcome::ok(EXIT_OK, String::from_utf8(buf).expect("utf-8"));
            if json {
                let mut j = Vec::new();
                write_json(&rows, &mut j).map_err(|e| Error::InvalidArgument(e.to_string()))?;
                outcome.json = Some(String::from_utf8(j).expect("utf-8") + "\n");
            }
            Ok(outcome)
        }
        Command::Inventory { name, periodic, json, policy } => {
            let inv = match (name, periodic) {
                (_, Some(x)) => periodic_pp_set(&x)?,
                (Some(name), None) => pp_inventory(&builtin(&name)?, &policy.policy())?,
                (None, None) => {
                    return Err(Error::InvalidArgument("give a sequence name or --periodic".into()))
                }
            };
            Ok(CommandOutcome::ok(EXIT_OK, lines(&inv)).with_json(json, &inv))
        }
        Command::Bounds { name, from, to, json, policy } => {
            let report = verify_bounds(&name, from, to, &policy.policy())?;
            let mut out = String::new();
            for c in &report.checks {
                out += &format!(
                    "{}: {} (equality at {:?})\n",
                    c.bound,
                    if c.passed() { "holds".to_string() } else { format!("fails at {:?}", c.violations) },
                    c.equality_at
                );
            }
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(CommandOutcome::ok(code, out).with_json(json, &report))
        }
        Command::Search(args) => search(&args),
        Command::CountA374495 { max, csv } => {
            let mut out = if csv { "n,count\n".to_string() } else { String::new() };
            for n in 1..=max {
                let c = count_binary_pp_words(n)?;
                out += &if csv { format!("{n},{c}\n") } else { format!("{c}\n") };
            }
            Ok(CommandOutcome::ok(EXIT_OK, out))
        }
        Command::VerifyPaper { quick, full: _, deep, json, verbose } => {
            let tier = if quick { Tier::Quick } else { Tier::Full };
            let results = run_all(VerifyOptions { tier, deep });
            let mut out = String::new();
            for r in &results {
                out += &format!("{r}\n");
                if verbose || !r.passed {
                    for d in &r.details {
                        out += &format!("    {d}\n");
                    }
                }
            }
            let passed = results.iter().filter(|r| r.passed).count();
            out += &format!("{passed}/{} criteria passed\n", results.len());
            let code = if passed == results.len() { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(CommandOutcome::ok(code, out).with_json(json, &results))
        }
    }
}

/// Applies `PALPER_THREADS` to the global worker pool, once.
fn configure_threads() {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        if let Some(n) = std::env::var("PALPER_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
            // Fails only if the pool already exists; keep it then.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    });
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    configure_threads();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome::error(EXIT_USAGE, text)
            } else {
                CommandOutcome::ok(EXIT_OK, text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::error(exit_code(&e), format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> CommandOutcome {
        run(std::iter::once("palper").chain(args.split_whitespace()))
    }

    #[test]
    fn examples() {
        let r = call("check is-pp 121344312134");
        assert_eq!((r.code, r.stdout.as_str()), (0, "yes p=121 s=3443\n"));
        let r = call("bwt 0120");
        assert_eq!((r.code, r.stdout.as_str()), (0, "2001\n"));
        let r = call("check is-pp 102");
        assert_eq!((r.code, r.stdout.as_str()), (1, "no\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("frobnicate").code, EXIT_USAGE);
        assert_eq!(call("check is-pp 12a").code, EXIT_USAGE);
        assert_eq!(call("check sturmian 012").code, EXIT_USAGE);
        assert_eq!(call("search --threshold 29").code, EXIT_USAGE);
        assert_eq!(call("--help").code, EXIT_OK);
    }

    #[test]
    fn caps_map_to_exit_three() {
        assert_eq!(call("inventory --periodic 01").code, EXIT_CAP);
        assert_eq!(call("inventory thue_morse --initial 256 --probe 16").code, EXIT_CAP);
        assert_eq!(call("search --threshold 3 --cap 2 --alphabet 2").code, EXIT_CAP);
        assert_eq!(call("search --threshold 9 --max-frontier 100").code, EXIT_CAP);
    }
}
