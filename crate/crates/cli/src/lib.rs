//! Command dispatch for the `dialgebra` binary.
//!
//! Exit codes: 0 success or pass, 1 failed certification, 2 usage, I/O or
//! parse error. `--porcelain` switches every report to `key<TAB>value` lines
//! whose order and content depend only on the input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dialgebra::completion::{shirshov_complete, CompletionConfig};
use dialgebra::composition::{gsb_check, GsbOptions, GsbReport};
use dialgebra::hnn::{HnnPresentation, NormalFormReport, PaperTable};
use dialgebra::rewriting::ReductionTrace;
use dialgebra::{
    build_hnn_relations, compare_diwords, embedding_check, irr_enumerate, leading, normal_form_report, paper_instance,
    parse_poly, parse_presentation, reduce, verify_paper_table, Alphabet, DiPolynomial, Error, Execution, OrderingKind,
    Presentation, RelationSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub output: String,
}

#[derive(Debug, Parser)]
#[command(name = "dialgebra", version, about = "Gröbner–Shirshov bases for dialgebras")]
struct Cli {
    /// Monomial ordering. Only `reduce` and `compare` accept `weight`.
    #[arg(long, global = true, default_value = "deglex-center")]
    ordering: OrderingKind,
    /// Emit stable `key<TAB>value` lines.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Run on the current thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce a polynomial modulo the relations of FILE.
    Reduce {
        file: PathBuf,
        /// Polynomial such as `[x t ; 1] - 2*[t x ; 2]`.
        #[arg(long)]
        poly: String,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Check whether the relations of FILE form a Gröbner–Shirshov basis.
    GsbCheck {
        file: PathBuf,
        /// Also evaluate intersections at every center where both sides are normal.
        #[arg(long)]
        extended: bool,
        /// Longest word `u` tried in right multiplication compositions.
        #[arg(long, default_value_t = 1)]
        max_right_len: usize,
    },
    /// Complete the relations of FILE to a certified basis.
    Complete {
        file: PathBuf,
        /// Largest word length for compositions and new relations.
        #[arg(long)]
        max_deg: usize,
        /// Number of completion rounds.
        #[arg(long, default_value_t = 16)]
        max_iter: usize,
    },
    /// List the irreducible diwords of FILE up to a degree.
    Irr {
        file: PathBuf,
        /// Largest word length listed.
        #[arg(long)]
        max_deg: usize,
    },
    /// Build and check an HNN-extension presentation.
    Hnn(HnnArgs),
    /// Compare two polynomials by their leading monomials.
    Compare { file: PathBuf, left: String, right: String },
}

#[derive(Debug, Args)]
struct HnnArgs {
    /// The explicit instance t < z < y < x with zero multiplication and d = 0.
    #[arg(long, conflicts_with = "from", required_unless_present = "from")]
    paper: bool,
    /// A dialgebra file.
    #[arg(long)]
    from: Option<PathBuf>,
    /// Recompute the table of critical pairs (explicit instance only).
    #[arg(long, requires = "paper")]
    table: bool,
    /// Group the irreducible diwords by shape and check the normal form.
    #[arg(long, requires = "max_deg")]
    normal_form: bool,
    /// Degree bound for `--normal-form`.
    #[arg(long)]
    max_deg: Option<usize>,
}

struct Ctx {
    ordering: OrderingKind,
    porcelain: bool,
    exec: Execution,
    out: String,
}

impl Ctx {
    /// A `key value` line. Porcelain separates with a tab, the human form with
    /// a colon.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.porcelain {
            let _ = writeln!(self.out, "{key}\t{value}");
        } else {
            let _ = writeln!(self.out, "{}: {value}", key.replace('_', " "));
        }
    }

    /// A free-form line, only in the human form.
    fn line(&mut self, text: impl std::fmt::Display) {
        if !self.porcelain {
            let _ = writeln!(self.out, "{text}");
        }
    }

    fn done(self, exit_code: i32) -> CommandResult {
        CommandResult {
            exit_code,
            output: self.out,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => usage(format!("{}:{line}:{column}: {message}", path.display())),
        other => usage(format!("{}: {other}", path.display())),
    })
}

fn load_relations(path: &Path, ordering: OrderingKind) -> Result<RelationSet, Failure> {
    let p = load(path)?;
    if p.describes_dialgebra() {
        return Err(usage(format!(
            "{} describes a dialgebra; use `hnn --from` to build its presentation",
            path.display()
        )));
    }
    p.relation_set(ordering)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn require_deglex(ctx: &Ctx, command: &str) -> Result<(), Failure> {
    if ctx.ordering == OrderingKind::DegLexCenter {
        Ok(())
    } else {
        Err(usage(format!(
            "{command} certifies bases and requires --ordering deglex-center"
        )))
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandResult {
                exit_code: code,
                output: e.render().to_string(),
            };
        }
    };
    let mut ctx = Ctx {
        ordering: cli.ordering,
        porcelain: cli.porcelain,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        out: String::new(),
    };
    let result = match cli.command {
        Command::Reduce { file, poly, trace } => cmd_reduce(&mut ctx, &file, &poly, trace),
        Command::GsbCheck {
            file,
            extended,
            max_right_len,
        } => cmd_gsb_check(&mut ctx, &file, extended, max_right_len),
        Command::Complete {
            file,
            max_deg,
            max_iter,
        } => cmd_complete(&mut ctx, &file, max_deg, max_iter),
        Command::Irr { file, max_deg } => cmd_irr(&mut ctx, &file, max_deg),
        Command::Hnn(args) => cmd_hnn(&mut ctx, &args),
        Command::Compare { file, left, right } => cmd_compare(&mut ctx, &file, &left, &right),
    };
    match result {
        Ok(code) => ctx.done(code),
        Err(f) => {
            let _ = writeln!(ctx.out, "error: {}", f.message);
            ctx.done(f.code)
        }
    }
}

fn poly_arg(text: &str, alphabet: &Alphabet) -> Result<DiPolynomial, Failure> {
    parse_poly(text, alphabet).map_err(|e| usage(format!("{text:?}: {e}")))
}

fn render_trace(ctx: &mut Ctx, trace: &ReductionTrace, alphabet: &Alphabet) {
    for (i, step) in trace.steps.iter().enumerate() {
        let p = &step.pattern;
        let value = format!(
            "{} * a=[{}] s={} b=[{}] center {} eliminates {}",
            step.coefficient,
            alphabet.render_word(p.left()),
            p.relation().id(),
            alphabet.render_word(p.right()),
            p.center(),
            step.eliminated.display(alphabet)
        );
        ctx.kv(&format!("step_{}", i + 1), value);
    }
}

fn cmd_reduce(ctx: &mut Ctx, file: &Path, poly: &str, trace: bool) -> Result<i32, Failure> {
    let set = load_relations(file, ctx.ordering)?;
    let a = set.alphabet().clone();
    let f = poly_arg(poly, &a)?;
    let red = reduce(&f, &set);
    ctx.kv("ordering", ctx.ordering);
    ctx.kv("input", f.display(&a));
    ctx.kv("normal_form", red.normal_form.display(&a));
    ctx.kv("steps", red.trace.len());
    if trace {
        render_trace(ctx, &red.trace, &a);
    }
    Ok(EXIT_OK)
}

fn render_gsb(ctx: &mut Ctx, report: &GsbReport, alphabet: &Alphabet) {
    for note in &report.notes {
        ctx.kv("note", note);
    }
    for r in &report.records {
        ctx.kv("record", r.render(alphabet));
    }
    ctx.kv("records", report.strict().count());
    ctx.kv("extended_records", report.extended().count());
    ctx.kv("failures", report.failures().count());
    if report.options.extended {
        ctx.kv("extended_all_trivial", report.extended_all_trivial());
    }
    ctx.kv("pass", report.pass);
}

fn cmd_gsb_check(ctx: &mut Ctx, file: &Path, extended: bool, max_right_len: usize) -> Result<i32, Failure> {
    require_deglex(ctx, "gsb-check")?;
    let set = load_relations(file, ctx.ordering)?;
    let opts = GsbOptions {
        extended,
        max_right_len,
        exec: ctx.exec,
    };
    let report = gsb_check(&set, &opts);
    ctx.kv("relations", set.len());
    render_gsb(ctx, &report, set.alphabet());
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn render_basis(ctx: &mut Ctx, set: &RelationSet) {
    for r in set.relations() {
        ctx.kv("relation", format!("{}: {}", r.id(), r.poly().display(set.alphabet())));
    }
}

fn cmd_complete(ctx: &mut Ctx, file: &Path, max_deg: usize, max_iter: usize) -> Result<i32, Failure> {
    require_deglex(ctx, "complete")?;
    let set = load_relations(file, ctx.ordering)?;
    let a = set.alphabet().clone();
    let cfg = CompletionConfig {
        max_degree: max_deg,
        max_iterations: max_iter,
        exec: ctx.exec,
        ..Default::default()
    };
    let result = shirshov_complete(&set, &cfg);
    for add in &result.added {
        let o = &add.origin;
        ctx.kv(
            "added",
            format!(
                "{}: {}|from={}|parents={},{}|w={}|center={}",
                add.relation.id(),
                add.relation.poly().display(&a),
                o.kind,
                o.first.id(),
                o.second.label(&a),
                a.render_word(o.ambient.word()),
                o.ambient.center()
            ),
        );
    }
    for ir in &result.interreductions {
        let after = ir
            .after
            .as_ref()
            .map_or("removed".to_string(), |r| r.poly().display(&a).to_string());
        ctx.kv(
            "interreduced",
            format!("{}: {} -> {}", ir.id, ir.before.display(&a), after),
        );
    }
    render_basis(ctx, &result.basis);
    ctx.kv("iterations", result.iterations);
    ctx.kv("skipped", result.skipped);
    ctx.kv("certified", result.certified);
    Ok(if result.certified { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_irr(ctx: &mut Ctx, file: &Path, max_deg: usize) -> Result<i32, Failure> {
    require_deglex(ctx, "irr")?;
    let set = load_relations(file, ctx.ordering)?;
    let a = set.alphabet();
    let certified = gsb_check(
        &set,
        &GsbOptions {
            exec: ctx.exec,
            ..Default::default()
        },
    )
    .pass;
    let irr = irr_enumerate(&set, max_deg, ctx.exec);
    for d in &irr {
        ctx.kv("irr", d.display(a));
    }
    ctx.kv("count", irr.len());
    ctx.kv("certified", certified);
    if !certified {
        ctx.line("the relations are not a Gröbner–Shirshov basis, so Irr need not be a basis of the quotient");
    }
    Ok(if certified { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_compare(ctx: &mut Ctx, file: &Path, left: &str, right: &str) -> Result<i32, Failure> {
    let p = load(file)?;
    let a = &p.alphabet;
    let (f, g) = (poly_arg(left, a)?, poly_arg(right, a)?);
    let lf = leading(&f, ctx.ordering).map_err(|e| usage(format!("{left:?}: {e}")))?;
    let lg = leading(&g, ctx.ordering).map_err(|e| usage(format!("{right:?}: {e}")))?;
    let sign = match compare_diwords(&lf.monomial, &lg.monomial, ctx.ordering) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    ctx.kv("ordering", ctx.ordering);
    ctx.kv("left_leading", lf.monomial.display(a));
    ctx.kv("right_leading", lg.monomial.display(a));
    ctx.kv("left_strong", lf.strong);
    ctx.kv("right_strong", lg.strong);
    ctx.kv("compare", sign);
    Ok(EXIT_OK)
}

fn render_table(ctx: &mut Ctx, table: &PaperTable) {
    let a = &table.presentation.alphabet;
    for row in &table.rows {
        if ctx.porcelain {
            for line in row.render(a) {
                ctx.kv("row", line.trim_start());
            }
        } else {
            for line in row.render(a) {
                ctx.line(line);
            }
        }
    }
    let flagged = table
        .rows
        .iter()
        .flat_map(|r| &r.entries)
        .filter(|e| e.flagged())
        .count();
    let differ = table.rows.iter().filter(|r| !r.printed_equals_strict()).count();
    ctx.kv("table_rows", table.rows.len());
    ctx.kv("rows_printed_set_differs_from_strict", differ);
    ctx.kv("flagged_zero_entries", flagged);
    ctx.kv("extended_all_trivial", table.report.extended_all_trivial());
    ctx.kv("table_reproduced", table.all_reproduced());
}

fn render_normal_form(ctx: &mut Ctx, report: &NormalFormReport, alphabet: &Alphabet) {
    if ctx.porcelain {
        for d in &report.irr {
            ctx.kv("irr", d.display(alphabet));
        }
        for (shape, ds) in &report.groups {
            ctx.kv("shape", format!("{shape} {}", ds.len()));
        }
        ctx.kv("irr_count", report.irr.len());
        ctx.kv("no_adjacent_base", report.no_adjacent_base);
        ctx.kv("xt_center_on_t", report.xt_center_on_t);
        ctx.kv("generators_present", report.generators_present);
        ctx.kv("matches_computed_pattern", report.matches_computed_pattern);
    } else {
        for line in report.render(alphabet) {
            ctx.line(line);
        }
    }
}

fn cmd_hnn(ctx: &mut Ctx, args: &HnnArgs) -> Result<i32, Failure> {
    require_deglex(ctx, "hnn")?;
    let presentation: HnnPresentation = if args.paper {
        paper_instance()
    } else {
        let path = args.from.as_ref().expect("clap enforces --paper or --from");
        let data = load(path)?;
        if !data.relations.is_empty() {
            return Err(usage(format!(
                "{}: expected a dialgebra file, found relation lines",
                path.display()
            )));
        }
        let d = data.dialgebra();
        let violations = d.axiom_violations();
        if let Some(v) = violations.first() {
            return Err(usage(format!("{}: not a dialgebra: {v}", path.display())));
        }
        build_hnn_relations(&d).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    let a = presentation.alphabet.clone();
    let names: Vec<&str> = a.names().iter().map(String::as_str).collect();
    ctx.kv("generators", names.join(" < "));
    render_basis(ctx, &presentation.relations);
    ctx.kv("weak_relations", presentation.weak_relations().len());

    let mut ok = true;
    if args.table {
        let table = verify_paper_table(ctx.exec);
        render_table(ctx, &table);
        ok &= table.all_reproduced() && table.report.pass;
    }
    let report = gsb_check(
        &presentation.relations,
        &GsbOptions {
            exec: ctx.exec,
            ..Default::default()
        },
    );
    ctx.kv("strict_records", report.strict().count());
    ctx.kv("failures", report.failures().count());
    ctx.kv("pass", report.pass);

    let mut certified = presentation.clone();
    if !report.pass {
        ok = false;
        let cfg = CompletionConfig {
            max_degree: args.max_deg.unwrap_or(6),
            exec: ctx.exec,
            ..Default::default()
        };
        let done = shirshov_complete(&presentation.relations, &cfg);
        ctx.kv("completion_added", done.added.len());
        ctx.kv("completion_certified", done.certified);
        if done.certified {
            render_basis(ctx, &done.basis);
        }
        certified.relations = done.basis;
    }
    match embedding_check(&certified, ctx.exec) {
        Ok(e) => ctx.kv("embedding", e),
        Err(e) => ctx.kv("embedding", e),
    }
    if args.normal_form {
        let deg = args.max_deg.expect("clap enforces --max-deg");
        match normal_form_report(&certified, deg, ctx.exec) {
            Ok(nf) => {
                render_normal_form(ctx, &nf, &a);
                ok &= nf.no_adjacent_base || !args.paper;
            }
            Err(e) => {
                ctx.kv("normal_form", e);
                ok = false;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
