mod explain;
mod render;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use delpezzo::dp3::{self, ks2_diagnostic, DP3Family, Verdict};
use delpezzo::record::ReportRecord;
use delpezzo::scroll::{self, DivisorClass, Scroll};
use delpezzo::special::{dp2_report_with, CurveSystem, DrawMode, Dp2Report};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "delpezzo", version, about = "Rationality of cubic del Pezzo fibrations on rational scrolls")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,

    /// Print the chain of criteria behind each verdict.
    #[arg(long, global = true)]
    explain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the general member of |3M + nL| on P(O(d1) + O(d2) + O(d3) + O).
    #[command(allow_negative_numbers = true)]
    Classify {
        d1: i64,
        d2: i64,
        d3: i64,
        n: i64,
        /// Also report both available values of K_S^2.
        #[arg(long)]
        diagnostic: bool,
    },
    /// Classify every family with d1 <= MAX_D1 and N_MIN <= n <= N_MAX.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        max_d1: i64,
        n_min: i64,
        n_max: i64,
        /// all, smooth, rational, nonrational or chi=<v>; repeated filters combine.
        #[arg(long = "filter")]
        filters: Vec<String>,
    },
    /// Query the linear system |aM + bL| on a scroll.
    #[command(allow_negative_numbers = true)]
    Linsys {
        #[arg(required = true)]
        degrees: Vec<i64>,
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        class: Vec<i64>,
        /// h0, mult:<j>, baselocus or monomials.
        #[arg(long)]
        query: String,
    },
    /// Intersection number of k divisor classes on a rank-k scroll.
    #[command(allow_negative_numbers = true)]
    Chow {
        #[arg(required = true)]
        degrees: Vec<i64>,
        /// One class `A B` per factor.
        #[arg(long, num_args = 2, value_names = ["A", "B"], action = clap::ArgAction::Append)]
        class: Vec<i64>,
    },
    /// Split-fibre count of the degree-2 double cover over random seeds.
    #[command(name = "dp2-check")]
    Dp2Check {
        /// A range `a..b` (inclusive), a comma list, or a single seed.
        #[arg(long, default_value = "1..100")]
        seeds: String,
        #[arg(long, value_enum, default_value_t = Mode::Generic)]
        mode: Mode,
    },
    /// Search the split-fibre curve system for invariant disjoint subsets.
    #[command(name = "picard-check")]
    PicardCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Generic,
    Square,
    Degenerate,
}

impl From<Mode> for DrawMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Generic => DrawMode::Generic,
            Mode::Square => DrawMode::Square,
            Mode::Degenerate => DrawMode::Degenerate,
        }
    }
}

/// Output plus auxiliary notes. Notes go to stdout for tables and to stderr
/// otherwise, so machine-readable output stays parseable.
struct Output {
    body: String,
    notes: Vec<String>,
}

impl Output {
    fn body(body: String) -> Self {
        Self { body, notes: Vec::new() }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn classify(cli: &Cli, family: DP3Family, diagnostic: bool) -> Result<Output> {
    let report = dp3::classify(&family);
    let record = ReportRecord::from(&report);
    let body = match cli.format {
        OutputFormat::Table => render::report_details(&record),
        OutputFormat::Json => to_json(&record)?,
        OutputFormat::Csv => render::report_csv(&[record]),
    };
    let mut notes = Vec::new();
    if diagnostic {
        let d = ks2_diagnostic(&family);
        notes.push(format!(
            "K_S^2: 8 - mu = {}, adjunction on P(O({}) + O({}) + O) = {}, {}",
            d.from_mu,
            family.d1,
            family.d3,
            d.adjunction_on_b,
            if d.agrees { "agree" } else { "differ" }
        ));
    }
    if cli.explain {
        notes.extend(explain::explain(&report));
    }
    Ok(Output { body, notes })
}

type Filter = Box<dyn Fn(&ReportRecord) -> bool>;

fn family_filter(text: &str) -> Result<Filter> {
    Ok(match text {
        "all" => Box::new(|_| true),
        "smooth" => Box::new(|r| r.smooth_pic2),
        "rational" => Box::new(|r| r.verdict == Verdict::Rational),
        "nonrational" => Box::new(|r| r.verdict == Verdict::Nonrational),
        other => {
            let v = other
                .strip_prefix("chi=")
                .ok_or_else(|| anyhow!("unknown filter `{other}`"))?;
            let v: i64 = v.parse().with_context(|| format!("bad euler value in `{other}`"))?;
            Box::new(move |r| r.euler == v)
        }
    })
}

fn enumerate(cli: &Cli, max_d1: i64, n_min: i64, n_max: i64, filters: &[String]) -> Result<Output> {
    let filters = filters.iter().map(|f| family_filter(f)).collect::<Result<Vec<_>>>()?;
    let reports = dp3::enumerate(max_d1, n_min, n_max)?;
    let mut records = Vec::new();
    let mut notes = Vec::new();
    for report in reports {
        let record = ReportRecord::from(&report);
        if filters.iter().all(|f| f(&record)) {
            if cli.explain {
                notes.extend(explain::explain(&report));
            }
            records.push(record);
        }
    }
    let body = match cli.format {
        OutputFormat::Table => render::report_table(&records),
        OutputFormat::Json => to_json(&records)?,
        OutputFormat::Csv => render::report_csv(&records),
    };
    Ok(Output { body, notes })
}

#[derive(Serialize)]
struct MultRecord {
    j: usize,
    closed_form: u64,
    oracle: u64,
}

fn linsys(cli: &Cli, degrees: &[i64], class: &[i64], query: &str) -> Result<Output> {
    let s = Scroll::normalize(degrees.to_vec())?;
    let cls = DivisorClass::new(class[0], class[1]);
    let fmt = cli.format;
    let body = match query {
        "h0" => {
            let v = scroll::h0(&s, cls);
            match fmt {
                OutputFormat::Table => format!("{v}\n"),
                OutputFormat::Json => format!("{{\"h0\":{v}}}\n"),
                OutputFormat::Csv => format!("h0\n{v}\n"),
            }
        }
        "baselocus" => {
            let bl = scroll::base_locus(&s, cls)?;
            let token = bl.map_or("none".to_string(), |j| j.to_string());
            match fmt {
                OutputFormat::Table => format!("{token}\n"),
                OutputFormat::Json => to_json(&BTreeMap::from([("base_locus", bl.map(|j| j.to_string()))]))?,
                OutputFormat::Csv => format!("base_locus\n{token}\n"),
            }
        }
        "monomials" => {
            let ms = scroll::monomials(&s, cls);
            match fmt {
                OutputFormat::Table => ms.iter().fold(String::new(), |mut out, m| {
                    let _ = writeln!(out, "{m}");
                    out
                }),
                OutputFormat::Json => to_json(&ms)?,
                OutputFormat::Csv => {
                    let mut out: Vec<String> = (1..=s.rank()).map(|i| format!("x{i}")).collect();
                    out.push("coeff_degree".into());
                    let mut text = out.join(",") + "\n";
                    for m in &ms {
                        let mut cells: Vec<String> = m.exponents.iter().map(u32::to_string).collect();
                        cells.push(m.coeff_degree.to_string());
                        text += &(cells.join(",") + "\n");
                    }
                    text
                }
            }
        }
        q => {
            let j: usize = q
                .strip_prefix("mult:")
                .ok_or_else(|| anyhow!("unknown query `{q}`; expected h0, mult:<j>, baselocus or monomials"))?
                .parse()
                .with_context(|| format!("bad subscroll index in `{q}`"))?;
            let y = s.subscroll(j)?;
            let closed_form = scroll::mult_subscroll(&s, cls, y)?;
            let oracle = scroll::mult_subscroll_oracle(&s, cls, y)?;
            ensure!(closed_form == oracle, "closed form {closed_form} != oracle {oracle} along {y}");
            match fmt {
                OutputFormat::Table => format!("{closed_form} (closed-form) = {oracle} (oracle)\n"),
                OutputFormat::Json => to_json(&MultRecord { j, closed_form, oracle })?,
                OutputFormat::Csv => format!("j,closed_form,oracle\n{j},{closed_form},{oracle}\n"),
            }
        }
    };
    Ok(Output::body(body))
}

fn chow(cli: &Cli, degrees: &[i64], class: &[i64]) -> Result<Output> {
    let s = Scroll::normalize(degrees.to_vec())?;
    let classes: Vec<DivisorClass> =
        class.chunks(2).map(|c| DivisorClass::new(c[0], c[1])).collect();
    let v = scroll::intersection_number(&s, &classes)?;
    Ok(Output::body(match cli.format {
        OutputFormat::Table => format!("{v}\n"),
        OutputFormat::Json => format!("{{\"intersection\":{v}}}\n"),
        OutputFormat::Csv => format!("intersection\n{v}\n"),
    }))
}

fn parse_seeds(text: &str) -> Result<Vec<u64>> {
    if let Some((a, b)) = text.split_once("..") {
        let (a, b): (u64, u64) = (a.trim().parse()?, b.trim().parse()?);
        ensure!(a <= b, "empty seed range {text}");
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|s| s.trim().parse().with_context(|| format!("bad seed `{s}`")))
        .collect()
}

#[derive(Serialize)]
struct SeedOutcome {
    seed: u64,
    degenerate: bool,
    report: Option<Dp2Report>,
}

#[derive(Serialize)]
struct Dp2Summary {
    seeds: Vec<SeedOutcome>,
    mu_histogram: BTreeMap<i64, usize>,
    nonruled: bool,
}

fn dp2_check(cli: &Cli, seeds: &str, mode: Mode) -> Result<Output> {
    let seeds = parse_seeds(seeds)?;
    let outcomes: Vec<SeedOutcome> = seeds
        .iter()
        .map(|&seed| {
            let report = dp2_report_with(seed, mode.into()).ok();
            SeedOutcome { seed, degenerate: report.is_none(), report }
        })
        .collect();
    let reports: Vec<Dp2Report> = outcomes.iter().filter_map(|o| o.report).collect();
    ensure!(!reports.is_empty(), "every seed produced a degenerate draw");
    let mut mu_histogram = BTreeMap::new();
    for r in &reports {
        *mu_histogram.entry(r.mu).or_insert(0) += 1;
    }
    let nonruled = reports.iter().all(|r| r.nonruled);
    let summary = Dp2Summary { seeds: outcomes, mu_histogram, nonruled };

    let body = match cli.format {
        OutputFormat::Json => to_json(&summary)?,
        OutputFormat::Table | OutputFormat::Csv => {
            let header = [
                "seed", "deg", "mu", "distinct", "lambda", "xi", "2k_plus_xi", "effective", "nonruled", "generic",
            ];
            let rows: Vec<Vec<String>> = summary
                .seeds
                .iter()
                .map(|o| match &o.report {
                    Some(r) => vec![
                        r.seed.to_string(),
                        r.discriminant_degree.to_string(),
                        r.mu.to_string(),
                        r.mu_distinct.to_string(),
                        r.lambda.to_string(),
                        format!("{}s+{}f", r.xi_class.a, r.xi_class.b),
                        format!("{}s+{}f", r.two_k_plus_xi.a, r.two_k_plus_xi.b),
                        r.two_k_plus_xi_effective.to_string(),
                        r.nonruled.to_string(),
                        r.generic.to_string(),
                    ],
                    None => {
                        let mut row = vec![o.seed.to_string()];
                        row.extend(std::iter::repeat_n(String::new(), 8));
                        row.push("degenerate".into());
                        row
                    }
                })
                .collect();
            if cli.format == OutputFormat::Csv {
                let mut text = header.join(",") + "\n";
                for row in rows {
                    text += &(row.join(",") + "\n");
                }
                text
            } else {
                let mut text = render::table(&header, &rows);
                for (mu, count) in &summary.mu_histogram {
                    let _ = writeln!(text, "mu = {mu}: {count} seeds");
                }
                let degenerate = summary.seeds.len() - reports.len();
                if degenerate > 0 {
                    let _ = writeln!(text, "degenerate: {degenerate} seeds");
                }
                let verdict = if nonruled { "nonruled" } else { "not shown nonruled" };
                let _ = writeln!(text, "2K + Xi effective on F_0 for all non-degenerate seeds: {verdict}");
                text
            }
        }
    };
    let mut notes = Vec::new();
    if cli.explain {
        notes.push("lambda = 8 - K^2 of the degree-2 del Pezzo fibre = 6".into());
        notes.push("mu = number of split fibres over S = roots of b^2 - 4ac on P^1".into());
        notes.push("2K + Xi effective on F_0: nonruled by Shokurov's conic bundle criterion".into());
    }
    Ok(Output { body, notes })
}

#[derive(Serialize)]
struct PicardSummary {
    orbits: Vec<Vec<String>>,
    meets: Vec<(String, String)>,
    invariant_disjoint_subsets: Vec<Vec<String>>,
    verified: bool,
}

fn picard_check(cli: &Cli) -> Result<Output> {
    let sys = CurveSystem::split_fibres();
    let labels = |v: &[usize]| v.iter().map(|&i| CurveSystem::label(i)).collect::<Vec<_>>();
    let subsets = sys.invariant_disjoint_subsets();
    let summary = PicardSummary {
        orbits: sys.orbits().iter().map(|o| labels(o)).collect(),
        meets: sys
            .meeting_pairs()
            .map(|(i, j)| (CurveSystem::label(i), CurveSystem::label(j)))
            .collect(),
        invariant_disjoint_subsets: subsets.iter().map(|s| labels(s)).collect(),
        verified: subsets.is_empty(),
    };
    let message = if summary.verified {
        "no invariant disjoint subset; rank-2 combinatorial step verified".to_string()
    } else {
        format!("invariant disjoint subsets found: {:?}", summary.invariant_disjoint_subsets)
    };
    let body = match cli.format {
        OutputFormat::Json => to_json(&summary)?,
        OutputFormat::Csv => {
            let mut text = "orbit,curves\n".to_string();
            for (k, o) in summary.orbits.iter().enumerate() {
                let _ = writeln!(text, "{k},{}", o.join(" "));
            }
            text
        }
        OutputFormat::Table => {
            let mut text = String::new();
            for (k, o) in summary.orbits.iter().enumerate() {
                let _ = writeln!(text, "orbit {k}: {}", o.join(" "));
            }
            let pairs: Vec<String> = summary.meets.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(text, "meeting pairs: {}", pairs.join(" "));
            let _ = writeln!(text, "{message}");
            text
        }
    };
    let notes = if cli.format == OutputFormat::Table { Vec::new() } else { vec![message] };
    Ok(Output { body, notes })
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Classify { d1, d2, d3, n, diagnostic } => {
            let family = DP3Family::new(*d1, *d2, *d3, *n)?;
            classify(cli, family, *diagnostic)
        }
        Command::Enumerate { max_d1, n_min, n_max, filters } => {
            enumerate(cli, *max_d1, *n_min, *n_max, filters)
        }
        Command::Linsys { degrees, class, query } => linsys(cli, degrees, class, query),
        Command::Chow { degrees, class } => {
            if class.is_empty() {
                bail!("pass one --class A B per factor");
            }
            chow(cli, degrees, class)
        }
        Command::Dp2Check { seeds, mode } => dp2_check(cli, seeds, *mode),
        Command::PicardCheck => picard_check(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            for note in out.notes {
                if cli.format == OutputFormat::Table {
                    println!("{note}");
                } else {
                    eprintln!("{note}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
