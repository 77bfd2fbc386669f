use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use cyclotri::enumerate::{census, classify_q7};
use cyclotri::io::{parse_spec, write_report, write_report_json, write_spec};
use cyclotri::seed::{predicted_orientability, seed_from_spec, validate_seed};
use cyclotri::series::{make_series, SeriesParams};
use cyclotri::tessellation::{
    delete_edge_orbits, full_deletion, maps_isomorphic, merge_groups, parse_map, write_map, CellMap,
};
use cyclotri::{classify, expand, isomorphic, Edge, Error, ErrorClass};

/// Cyclic triangulations of surfaces and the maps derived from them.
///
/// Set RAYON_NUM_THREADS to bound the worker threads; output does not
/// depend on it.
#[derive(Parser)]
#[command(name = "cyclotri", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a series member, e.g. `B9:n=16` or `S:k=4:n=69`.
    Gen {
        series: String,
        /// Write the spec here and print only the report.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a spec file.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the link cycles of one vertex.
    Link {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        vertex: u32,
    },
    /// Census rows for `n`, or for every n up to `n` with `--max`.
    Census {
        n: u32,
        #[arg(long)]
        max: bool,
        #[arg(long)]
        json: bool,
    },
    /// Cyclic 7-equivelar triangulations up to isomorphism.
    Q7 {
        #[arg(long, default_value_t = 30)]
        max_n: u32,
    },
    /// Delete orbits of interior seed edges of a spec file.
    Tessellate {
        file: PathBuf,
        /// Edges as `a-b,c-d`; `all` deletes every interior edge.
        #[arg(long, conflicts_with = "merge", required_unless_present = "merge")]
        delete: Option<String>,
        /// Merge consecutive groups of this many seed triangles.
        #[arg(long)]
        merge: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Seed rule report and predicted orientability of a spec file.
    SeedCheck { file: PathBuf },
    /// Compare two spec files, or two map files.
    Iso { first: PathBuf, second: PathBuf },
}

struct Failure {
    class: ErrorClass,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            class: e.class(),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn input(message: String) -> Self {
        Failure {
            class: ErrorClass::Parse,
            message,
        }
    }

    fn code(&self) -> u8 {
        match self.class {
            ErrorClass::Parse => 2,
            ErrorClass::Validation => 3,
            ErrorClass::NotASurface => 4,
        }
    }

    fn label(&self) -> &'static str {
        match self.class {
            ErrorClass::Parse => "parse",
            ErrorClass::Validation => "validation",
            ErrorClass::NotASurface => "not-a-surface",
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn commented(text: &str) -> String {
    text.lines().map(|l| format!("# {l}\n")).collect()
}

fn gen(series: &str, out: Option<&Path>, json: bool) -> Outcome {
    let params = SeriesParams::parse(series)?;
    let spec = make_series(&params)?;
    let report = classify(&expand(&spec)?);
    let text = if json {
        write_report_json(&report) + "\n"
    } else {
        write_report(&report)
    };
    match out {
        Some(path) => {
            write(path, &write_spec(&spec))?;
            Ok(text)
        }
        None => Ok(format!(
            "# {params}\n{}{}",
            write_spec(&spec),
            commented(&text)
        )),
    }
}

fn report(file: &Path, json: bool) -> Outcome {
    let report = classify(&expand(&parse_spec(&read(file)?)?)?);
    Ok(if json {
        write_report_json(&report) + "\n"
    } else {
        write_report(&report)
    })
}

fn link(file: &Path, vertex: u32) -> Outcome {
    let surface = expand(&parse_spec(&read(file)?)?)?;
    let mut out = String::new();
    for cycle in surface.vertex_link(vertex)? {
        let vs: Vec<String> = cycle.0.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", vs.join(" "));
    }
    Ok(out)
}

fn census_cmd(n: u32, max: bool, json: bool) -> Outcome {
    let range = if max { 4..=n } else { n..=n };
    let mut rows = Vec::new();
    for m in range {
        let start = Instant::now();
        let found = census(m);
        eprintln!(
            "census n={m}: {} rows in {:.2?}",
            found.len(),
            start.elapsed()
        );
        rows.extend(found);
    }
    if json {
        let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
        return Ok(text + "\n");
    }
    Ok(rows.iter().map(|r| format!("{r}\n")).collect())
}

fn q7(max_n: u32) -> Outcome {
    let mut out = String::new();
    for (_, spec) in classify_q7(max_n) {
        let r = classify(&expand(&spec)?);
        let genus = r.genus.map_or("none".to_string(), |g| {
            format!("{}{g}", if r.orientable { "g" } else { "u" })
        });
        let _ = writeln!(out, "{spec} orientable={} genus={genus}", r.orientable);
    }
    Ok(out)
}

fn parse_edges(text: &str) -> Result<Vec<Edge>, Failure> {
    text.split(',')
        .map(|pair| {
            let bad = || Failure::input(format!("bad edge `{pair}`, expected `a-b`"));
            let (a, b) = pair.trim().split_once('-').ok_or_else(bad)?;
            Ok([a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?])
        })
        .collect()
}

fn map_flags(map: &CellMap) -> String {
    let show = |v: Option<u32>| v.map_or("none".into(), |x| x.to_string());
    format!(
        "p={}\nq={}\nf_vector={},{},{}\neuler_characteristic={}\nregular={}\nstrongly_regular={}\norientable={}\npinched={}\n",
        show(map.p),
        show(map.q),
        map.n,
        map.edges.len(),
        map.polygons.len(),
        map.euler_characteristic,
        map.regular,
        map.strongly_regular,
        map.orientable,
        map.pinched
    )
}

fn tessellate(
    file: &Path,
    delete: Option<&str>,
    merge: Option<usize>,
    out: Option<&Path>,
) -> Outcome {
    let spec = parse_spec(&read(file)?)?;
    let surface = expand(&spec)?;
    let seed = seed_from_spec(&spec)?;
    let map = match (delete, merge) {
        (Some("all"), _) => full_deletion(&surface, &seed)?,
        (Some(list), _) => delete_edge_orbits(&surface, &seed, &parse_edges(list)?)?,
        (None, Some(s)) => merge_groups(&surface, &seed, s)?,
        (None, None) => unreachable!("clap requires one of --delete, --merge"),
    };
    match out {
        Some(path) => {
            write(path, &write_map(&map))?;
            Ok(map_flags(&map))
        }
        None => Ok(write_map(&map) + &commented(&map_flags(&map))),
    }
}

fn seed_check(file: &Path) -> Outcome {
    let spec = parse_spec(&read(file)?)?;
    let seed = seed_from_spec(&spec)?;
    let report = validate_seed(&seed, spec.n());
    let text = format!(
        "{report}predicted={}\n",
        predicted_orientability(&seed, spec.n())
    );
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        let failed: Vec<String> = report
            .failed_rules()
            .iter()
            .map(|r| r.to_string())
            .collect();
        Err(Failure {
            class: ErrorClass::Validation,
            message: format!("seed rules failed: {}", failed.join(",")),
        })
    }
}

fn is_map(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.contains("p="))
}

fn iso(first: &Path, second: &Path) -> Outcome {
    let (a, b) = (read(first)?, read(second)?);
    let same = match (is_map(&a), is_map(&b)) {
        (true, true) => maps_isomorphic(&parse_map(&a)?, &parse_map(&b)?)?,
        (false, false) => isomorphic(&expand(&parse_spec(&a)?)?, &expand(&parse_spec(&b)?)?),
        _ => {
            return Err(Failure::input(
                "cannot compare a spec file with a map file".into(),
            ))
        }
    };
    Ok(if same {
        "isomorphic\n"
    } else {
        "non-isomorphic\n"
    }
    .into())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { series, out, json } => gen(&series, out.as_deref(), json),
        Command::Report { file, json } => report(&file, json),
        Command::Link { file, vertex } => link(&file, vertex),
        Command::Census { n, max, json } => census_cmd(n, max, json),
        Command::Q7 { max_n } => q7(max_n),
        Command::Tessellate {
            file,
            delete,
            merge,
            out,
        } => tessellate(&file, delete.as_deref(), merge, out.as_deref()),
        Command::SeedCheck { file } => seed_check(&file),
        Command::Iso { first, second } => iso(&first, &second),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!(
                "error class={} code={} message={:?}",
                f.label(),
                f.code(),
                f.message
            );
            ExitCode::from(f.code())
        }
    }
}
