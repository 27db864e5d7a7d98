//! The `gyk` command line: parse files, dispatch, and render deterministic
//! text reports.
//!
//! Exit codes: 0 when every check passes, 1 when a structure fails
//! validation or a claimed property does not hold, 2 for usage, I/O and
//! parse errors.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::action::{self, ActionTable};
use crate::error::Error;
use crate::ggc::{self, GgcResult, DEFAULT_SEED};
use crate::group::{FiniteGroup, DEFAULT_CLOSURE_BUDGET};
use crate::gyro::{search_gyrogroups, Gyrogroup, SearchOptions};
use crate::io;
use crate::lgyr;
use crate::report::AxiomReport;
use crate::right::{self, RightGyrogroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gyk", version, about = "Finite gyrogroups, their group completions, actions and right gyrogroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a gyrogroup table and its derived identities
    Check { table: PathBuf },
    /// Print gyrations: one pair, or every nontrivial one
    Gyr { table: PathBuf, a: Option<usize>, b: Option<usize> },
    /// The gyration group R(G)
    Rgroup { table: PathBuf },
    /// Group completion M(G) with the map nu and its kernel
    Ggc {
        table: PathBuf,
        /// Write M(G) in the group file format
        #[arg(long)]
        emit_group: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_u64)]
        seed: u64,
    },
    /// Validate a gyrogroup action and compare it with the lifted M(G)-action
    Act { table: PathBuf, action: PathBuf },
    /// Dimension of the translated-gyration invariant space
    Lgyr {
        table: PathBuf,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    /// Enumerate gyrogroup tables of a given order
    Search {
        order: usize,
        #[arg(long)]
        limit: Option<usize>,
        /// Seconds
        #[arg(long)]
        time_budget: Option<f64>,
        #[arg(long)]
        proper_only: bool,
    },
    /// Validate a right gyrogroup table
    RgCheck { table: PathBuf },
    /// The right gyrogroup a∘b = b⁻¹ab² on a group
    RgGbased {
        table: PathBuf,
        #[arg(long)]
        emit_group: Option<PathBuf>,
    },
    /// The right gyrogroup on {I, (i n)} inside Sym(n)
    RgTransversal {
        #[arg(long)]
        sym: usize,
    },
    /// Validate a right action; kernel, orbits, quotient and image
    RgAct { table: PathBuf, action: PathBuf },
    /// Check a subset for invariance and form the quotient
    RgQuotient {
        table: PathBuf,
        #[arg(required = true)]
        subset: Vec<usize>,
        #[arg(long)]
        emit_group: Option<PathBuf>,
    },
}

fn parse_u64(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let budget = std::env::var("GYK_BUDGET").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_CLOSURE_BUDGET);
    let mut out = Report { text: String::new(), ok: true };
    match dispatch(cli.command, budget, &mut out) {
        Ok(()) => Outcome { code: if out.ok { EXIT_OK } else { EXIT_FAILED }, stdout: out.text, stderr: String::new() },
        Err(e) => {
            let code = match e {
                Error::Parse(_) | Error::Io(_) | Error::Malformed(_) | Error::Dimension(_) => EXIT_USAGE,
                _ => EXIT_FAILED,
            };
            Outcome { code, stdout: out.text, stderr: format!("error: {e}\n") }
        }
    }
}

struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// Prints the verdict and the violations, and records failure.
    fn checks(&mut self, name: &str, report: &AxiomReport) {
        if report.passed() {
            self.line(format!("{name}: all checks passed"));
        } else {
            self.ok = false;
            self.line(format!("{name}: FAILED"));
            for line in report.to_string().lines() {
                self.line(format!("  {line}"));
            }
        }
    }

    fn claim(&mut self, name: &str, holds: bool) {
        self.ok &= holds;
        self.line(format!("{name}: {}", if holds { "holds" } else { "FAILS" }));
    }
}

fn elem(i: usize, labels: Option<&[String]>) -> String {
    match labels {
        Some(l) => format!("{i} ({})", l[i]),
        None => i.to_string(),
    }
}

fn list(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn load_gyrogroup(path: &Path) -> crate::Result<Gyrogroup> {
    let raw = io::read_table(path)?;
    let g = Gyrogroup::from_rows(&raw.rows)?;
    match raw.labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

fn load_right(path: &Path) -> crate::Result<RightGyrogroup> {
    let raw = io::read_table(path)?;
    let r = right::validate_right(&raw.rows)?;
    match raw.labels {
        Some(l) => r.with_labels(l),
        None => Ok(r),
    }
}

fn emit(path: &Path, rows: &[Vec<usize>], labels: Option<&[String]>, out: &mut Report) -> crate::Result<()> {
    std::fs::write(path, io::format_table(rows, labels))?;
    out.line(format!("wrote {}", path.display()));
    Ok(())
}

/// Axiom failures become a report with exit code 1; other errors pass through.
fn or_report<T>(result: crate::Result<T>, name: &str, out: &mut Report) -> crate::Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::Axioms(report)) => {
            out.line(format!("{name}: invalid"));
            out.ok = false;
            for line in report.to_string().lines() {
                out.line(format!("  {line}"));
            }
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn dispatch(cmd: Command, budget: usize, out: &mut Report) -> crate::Result<()> {
    match cmd {
        Command::Check { table } => {
            let raw = io::read_table(&table)?;
            let Some(g) = or_report(Gyrogroup::from_rows(&raw.rows), "gyrogroup", out)? else { return Ok(()) };
            let nontrivial = (0..g.order())
                .flat_map(|a| (0..g.order()).map(move |b| (a, b)))
                .filter(|&(a, b)| !g.gyr(a, b).is_identity())
                .count();
            if nontrivial == 0 {
                out.line("gyrogroup: valid; gyrations: all trivial");
            } else {
                out.line(format!("gyrogroup: valid; gyrations: {nontrivial} nontrivial pairs"));
            }
            out.line(format!("order: {}", g.order()));
            out.line(format!("associative: {}", if g.is_associative() { "yes" } else { "no" }));
            out.checks("derived identities", &g.check_identities());
        }
        Command::Gyr { table, a, b } => {
            let g = load_gyrogroup(&table)?;
            let labels = g.labels();
            match (a, b) {
                (Some(a), Some(b)) => {
                    if a >= g.order() || b >= g.order() {
                        return Err(Error::Dimension(format!("elements must lie in 0..{}", g.order())));
                    }
                    out.line(format!("gyr[{}, {}] = {}", elem(a, labels), elem(b, labels), g.gyr(a, b)));
                }
                (None, None) => {
                    let mut any = false;
                    for a in 0..g.order() {
                        for b in 0..g.order() {
                            if !g.gyr(a, b).is_identity() {
                                any = true;
                                out.line(format!("gyr[{}, {}] = {}", elem(a, labels), elem(b, labels), g.gyr(a, b)));
                            }
                        }
                    }
                    if !any {
                        out.line("all gyrations are the identity");
                    }
                }
                _ => return Err(Error::Dimension("give both elements or neither".into())),
            }
        }
        Command::Rgroup { table } => {
            let g = load_gyrogroup(&table)?;
            let r = ggc::gyration_group(&g, budget)?;
            out.line(format!("|R(G)| = {}", r.order()));
            for p in r.elements() {
                out.line(p.to_string());
            }
        }
        Command::Ggc { table, emit_group, seed } => {
            let g = load_gyrogroup(&table)?;
            let Some(result) = or_report(ggc::complete_with_budget(&g, budget), "completion invariants", out)? else {
                return Ok(());
            };
            write_ggc(&result, out);
            out.checks("sigma identities", &ggc::sigma_identity_suite(&g, seed));
            out.checks("pair group", &ggc::pair_group_suite(&g, &result.pair_group, seed));
            if let Some(path) = emit_group {
                emit(&path, &result.completion.rows(), None, out)?;
            }
        }
        Command::Act { table, action } => {
            let g = load_gyrogroup(&table)?;
            let act = io::read_action(&action)?;
            let report = action::validate_action(&g, &act)?;
            out.checks("action", &report);
            if !report.passed() {
                return Ok(());
            }
            let result = ggc::complete_with_budget(&g, budget)?;
            write_action_summary(&act, out);
            out.checks("bridge to M(G)", &action::bridge_check(&result, &act)?);
            out.checks("orbit-stabilizer", &action::orbit_stabilizer_check(&act));
            out.checks("orbit decomposition", &action::orbit_decomposition_check(&act));
            let counts = action::burnside_counts(&act, &result)?;
            out.line(format!(
                "burnside: orbits {}, sum over M(G) {} / {}, sum over G {} / ({} * {})",
                counts.direct,
                counts.completion_sum,
                counts.completion_order,
                counts.gyrogroup_sum,
                counts.kernel_order,
                counts.completion_order
            ));
            out.claim("burnside counts agree", counts.holds());
        }
        Command::Lgyr { table, prime } => {
            let g = load_gyrogroup(&table)?;
            let result = ggc::complete_with_budget(&g, budget)?;
            let report = lgyr::lgyr_report(&g, &result)?;
            out.line(format!("dimension: {}", report.dimension));
            out.line(format!("|M(G)|: {}", report.completion_order));
            out.line(format!("orbits: {}", report.orbits));
            out.line(format!("nu fibers: {}", report.fibers));
            out.claim("orbits match nu fibers", report.matches());
            let basis = lgyr::lgyr_basis(&result, prime).map_err(|e| match e {
                Error::Precondition(m) => Error::Dimension(m),
                other => other,
            })?;
            let rank = lgyr::rank_mod_p(&basis, prime);
            out.line(format!("basis over F_{prime}: {} invariant fiber indicators, rank {rank}", basis.len()));
            out.claim("basis spans the invariant space", rank == report.dimension);
        }
        Command::Search { order, limit, time_budget, proper_only } => {
            let mut opts = SearchOptions::new(order);
            if let Some(l) = limit {
                opts.limit = l;
            }
            opts.time_budget = time_budget.map(Duration::from_secs_f64);
            opts.proper_only = proper_only;
            let outcome = search_gyrogroups(opts).map_err(|e| Error::Dimension(e.to_string()))?;
            let status = if outcome.exhausted {
                "exhausted"
            } else if outcome.timed_out {
                "time budget reached"
            } else {
                "limit reached"
            };
            out.line(format!("order {order}: {} tables ({status})", outcome.tables.len()));
            for (i, g) in outcome.tables.iter().enumerate() {
                out.line(format!("# table {i}: {}", if g.is_associative() { "group" } else { "proper" }));
                out.text.push_str(&io::format_table(&g.rows(), None));
            }
        }
        Command::RgCheck { table } => {
            let raw = io::read_table(&table)?;
            let Some(r) = or_report(right::validate_right(&raw.rows), "right gyrogroup", out)? else {
                return Ok(());
            };
            write_right_summary(&r, out);
        }
        Command::RgGbased { table, emit_group } => {
            let raw = io::read_table(&table)?;
            let k = FiniteGroup::from_rows(&raw.rows)?;
            let k = match raw.labels {
                Some(l) => k.with_labels(l)?,
                None => k,
            };
            let (k, _) = k.with_identity_first();
            let r = right::RightGyrogroup::from_rows(&right::gbased_table(&k))?;
            write_right_summary(&r, out);
            out.checks("gyration formula [b^-1,a] c [a,b^-1]", &right::gbased_gyration_report(&k, &r));
            out.text.push_str(&io::format_table(&r.rows(), k.labels()));
            if let Some(path) = emit_group {
                emit(&path, &r.rows(), k.labels(), out)?;
            }
        }
        Command::RgTransversal { sym } => {
            let st = right::sym_transversal(sym).map_err(|e| Error::Dimension(e.to_string()))?;
            let r = &st.transversal.rgyro;
            let labels: Vec<String> =
                st.transversal.elements.iter().map(|&i| st.group.element(i).to_string()).collect();
            out.line(format!("S = {}", labels.join(" ")));
            out.text.push_str(&io::format_table(&r.rows(), Some(&labels)));
            write_right_summary(r, out);
            if sym >= 3 {
                // printed 1-based, on the points 1..n
                let (ti, tj) = (st.transposition(0), st.transposition(1));
                let one_based = |t: usize| if t == 0 { "I".to_string() } else { format!("({t} {sym})") };
                out.line(format!("rule: (1 {sym})∘(2 {sym}) = {}", one_based(r.op(ti, tj))));
            }
            out.claim("(i n)∘(j n) = (i n) for all i != j", st.rule_violations().is_empty());
        }
        Command::RgAct { table, action } => {
            let r = load_right(&table)?;
            let act = io::read_action(&action)?;
            let report = right::validate_right_action(&r, &act)?;
            out.checks("right action", &report);
            if !report.passed() {
                return Ok(());
            }
            let kernel = right::fixed_kernel(&r, &act)?;
            out.line(format!("kernel G_X: {}", list(&kernel)));
            out.line(format!("orbits: {}", right::raction_orbits(&act)));
            out.checks("kernel invariance", &right::check_invariant(&r, &kernel)?);
            let m = right::quotient_matches_image(&r, &act)?;
            out.line(format!("|G/G_X| = {}, |image| = {}", m.quotient.rgyro.order(), m.image.order()));
            out.claim("G/G_X isomorphic to the image", m.isomorphism.is_some());
        }
        Command::RgQuotient { table, subset, emit_group } => {
            let r = load_right(&table)?;
            if let Some(&bad) = subset.iter().find(|&&x| x >= r.order()) {
                return Err(Error::Dimension(format!("element {bad} is outside 0..{}", r.order())));
            }
            if !r.is_right_subgyrogroup(&subset) {
                out.ok = false;
                out.line("subset: not a right subgyrogroup");
                return Ok(());
            }
            let report = right::check_invariant(&r, &subset)?;
            out.checks("invariance", &report);
            if !report.passed() {
                return Ok(());
            }
            let Some(q) = or_report(right::quotient_rgyro(&r, &subset), "quotient", out)? else { return Ok(()) };
            out.line(format!("cosets: {}", q.cosets.iter().map(|c| format!("{{{}}}", list(c))).collect::<Vec<_>>().join(" ")));
            out.text.push_str(&io::format_table(&q.rgyro.rows(), None));
            if let Some(path) = emit_group {
                emit(&path, &q.rgyro.rows(), None, out)?;
            }
        }
    }
    Ok(())
}

fn write_ggc(result: &GgcResult, out: &mut Report) {
    let labels = result.source.labels();
    out.line(format!("|G| = {}", result.source.order()));
    out.line(format!("|R(G)| = {}", result.gyration_group.order()));
    out.line(format!("|GR(G)| = {}", result.pair_group.order()));
    out.line(format!("|[R(G)]| = {}", result.normal_closure.len()));
    out.line(format!("|M(G)| = {}", result.completion.order()));
    out.line("nu:");
    for (a, &m) in result.nu.iter().enumerate() {
        out.line(format!("  {} -> {m}", elem(a, labels)));
    }
    out.line(format!("kernel: {}", list(&result.kernel)));
    out.checks("completion invariants", &result.check_invariants());
}

fn write_action_summary(act: &ActionTable, out: &mut Report) {
    out.line(format!("orbits: {}", action::orbits(act)));
    out.line(format!("fixed points: {}", list(&action::fix_set(act))));
    out.line(format!("transitive: {}", if action::is_transitive(act) { "yes" } else { "no" }));
    out.line(format!("faithful: {}", if action::is_faithful(act) { "yes" } else { "no" }));
}

fn write_right_summary(r: &RightGyrogroup, out: &mut Report) {
    let n = r.order();
    let nontrivial = (0..n * n).filter(|&i| !r.gyr(i / n, i % n).is_identity()).count();
    if nontrivial == 0 {
        out.line("right gyrogroup: valid; gyrations: all trivial");
    } else {
        out.line(format!("right gyrogroup: valid; gyrations: {nontrivial} nontrivial pairs"));
    }
    out.line(format!("order: {n}"));
    out.line(format!("commutative: {}", if r.is_commutative() { "yes" } else { "no" }));
    out.line(format!("associative: {}", if r.is_associative() { "yes" } else { "no" }));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_and_decimal_seeds() {
        assert_eq!(parse_u64("0xC0FFEE").unwrap(), 0xC0FFEE);
        assert_eq!(parse_u64("17").unwrap(), 17);
        assert!(parse_u64("zz").is_err());
    }

    #[test]
    fn unknown_verb_is_a_usage_error() {
        let o = run(["gyk", "frobnicate"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("Usage"));
    }

    #[test]
    fn transversal_report() {
        let o = run(["gyk", "rg-transversal", "--sym", "3"]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert!(o.stdout.contains("rule: (1 3)∘(2 3) = (1 3)"), "{}", o.stdout);
    }
}
