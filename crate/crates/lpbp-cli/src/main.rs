//! `lpbp`: count lattice paths dominated by cyclically shifting boundaries,
//! evaluate the closed-form counts, replay the constructive bijections, run
//! oracle-vs-formula sweeps, and render boundaries as SVG.

mod render;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use lpbp::bijection::{
    block_profile, classify_bad, omega, omega_inverse, parse_blocks, phi, positive_shifts, psi,
};
use lpbp::composition::all_compositions;
use lpbp::formulas::{
    ballot_count, catalan_staircase_counts, generalized_catalan, half_slope_formula,
    k_catalan, lpbp_counts_formula, rightup_corners_formula, staircase_avoidance_corners,
    staircase_avoidance_count, staircase_count, upright_corners_formula,
    weakly_right_of_all_boundaries, PeriodicSpec,
};
use lpbp::oracle::{
    count_dominated, count_lpbp, enumerate_dominated_paths_capped, DEFAULT_ENUMERATION_CAP,
};
use lpbp::verify::{run_all, SweepLimits};
use lpbp::{parse_word, BigCount, Composition, LatticePath, LatticePoint, Lpbp, Step};

#[derive(Parser)]
#[command(name = "lpbp", version, about = "Lattice paths under cyclically shifting boundaries")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count dominated paths to a terminus under one shift or all of them.
    Count(CountArgs),
    /// Evaluate a closed-form count.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Run every oracle-vs-formula identity check.
    Verify(VerifyArgs),
    /// Compare the oracle against the pair-count formula over a whole grid.
    Sweep(SweepArgs),
    /// Replay a constructive bijection on one input.
    #[command(subcommand)]
    Bijection(BijectionCmd),
    /// Draw boundaries and paths as a standalone SVG.
    Render(RenderArgs),
}

/// A lattice word such as RRUR, parsed on the command line.
#[derive(Clone, Debug)]
struct Word(Vec<Step>);

impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_word(s).map(Word).map_err(|e| e.to_string())
    }
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|e| format!("part {:?}: {}", t, e)))
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<LatticePoint, String> {
    let (x, y) = s.split_once(',').ok_or("expected two coordinates x,y")?;
    let x = x.trim().parse().map_err(|e| format!("x: {}", e))?;
    let y = y.trim().parse().map_err(|e| format!("y: {}", e))?;
    Ok(LatticePoint::new(x, y))
}

fn point_str(p: LatticePoint) -> String {
    format!("{},{}", p.x, p.y)
}

#[derive(Args)]
struct CountArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Terminus x,y.
    #[arg(long, value_parser = parse_point)]
    to: LatticePoint,
    /// Cyclic shift applied to the boundary.
    #[arg(long, default_value_t = 0, conflicts_with = "all_shifts")]
    shift: i64,
    /// Count under every shift and print the total.
    #[arg(long)]
    all_shifts: bool,
    /// Also list the dominated words.
    #[arg(long, conflicts_with = "all_shifts")]
    list: bool,
    /// Enumeration cap for --list.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// All, bad and good pair counts at a terminus, under the shift hypothesis.
    Theorem1(CompTo),
    /// Weak ballot count: paths to (K, L) staying weakly right of x = A y.
    Ballot { a: u64, k: u64, l: u64 },
    /// Generalized Catalan number: ballot count at the full corner (A M, M).
    Gencat { a: u64, m: u64 },
    /// Good pairs whose path has exactly the given number of up-right corners.
    Corners(CornerArgs),
    /// Good pairs whose path has exactly the given number of right-up corners.
    Corners2(CornerArgs),
    /// Path counts under the alternating boundary (A, B, A, B, ...).
    Periodic { a: u64, b: u64, n: u64 },
    /// Paths under the half-integer slope line x = (C/2) y, odd C.
    Halfslope { c: u64, n: u64 },
    /// The three staircase-boundary Catalan counts at scale N.
    CatStaircase { n: u64 },
    /// Paths weakly below the (S, T) staircase with N full steps.
    Staircase { s: u64, t: u64, n: u64 },
    /// The K-Catalan number at order N.
    Kcat { n: u64, k: u64 },
    /// Paths avoiding the (S, T) staircase, summed over its backward shifts.
    Avoid { s: u64, t: u64, n: u64 },
    /// Staircase-avoiding paths refined by their up-right corner count.
    AvoidCorners {
        s: u64,
        t: u64,
        n: u64,
        #[arg(long)]
        corners: u64,
    },
}

#[derive(Args)]
struct CompTo {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Terminus x,y.
    #[arg(long, value_parser = parse_point)]
    to: LatticePoint,
}

#[derive(Args)]
struct CornerArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Terminus x,y.
    #[arg(long, value_parser = parse_point)]
    to: LatticePoint,
    /// Exact number of corners.
    #[arg(long)]
    corners: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cap the composition totals swept.
    #[arg(long)]
    max_n: Option<u64>,
    /// Cap the part counts swept.
    #[arg(long)]
    max_m: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest composition total.
    #[arg(long, default_value_t = 7)]
    max_n: u64,
    /// Largest number of parts.
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    /// Check only this many randomly chosen composition/terminus pairs.
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for --sample selection.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum BijectionCmd {
    /// Reflect a bad pair into a path from (-1, 1).
    Psi(PsiArgs),
    /// Rebuild the bad pair of a given column and rung from a reflected path.
    Phi(PhiArgs),
    /// Send a word and rank to the good pair chosen by the cycle lemma.
    Omega(OmegaArgs),
    /// Recover the word and rank behind a good right-edge pair.
    OmegaInv(OmegaInvArgs),
}

#[derive(Args)]
struct PsiArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Shift index of the pair.
    #[arg(long, default_value_t = 0)]
    shift: i64,
    /// Word of the path, from the origin.
    #[arg(long)]
    path: Word,
    /// Terminus x,y.
    #[arg(long, value_parser = parse_point)]
    to: LatticePoint,
    /// Print the bad-step classification first.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct PhiArgs {
    /// Word of the reflected path, from (-1, 1).
    #[arg(long)]
    path: Word,
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Ladder column of the bucket.
    #[arg(long)]
    column: u64,
    /// Ladder rung the bad step must land on.
    #[arg(long)]
    rung: u64,
    /// Terminus x,y.
    #[arg(long, value_parser = parse_point)]
    to: LatticePoint,
    /// Classify the rebuilt pair's bad step afterwards.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct OmegaArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Number of up steps in the word.
    #[arg(long)]
    height: u64,
    /// A word ending in R with exactly the given number of up steps.
    #[arg(long)]
    word: Word,
    /// Which admissible block rotation to take, counting from 1.
    #[arg(long)]
    rank: u64,
    /// Print blocks, profile and admissible rotations first.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct OmegaInvArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Shift index of the pair.
    #[arg(long)]
    shift: i64,
    /// Word of the good path, from the origin.
    #[arg(long)]
    path: Word,
    /// Print the recovered word's blocks first.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Boundary composition, comma separated.
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Draw every distinct shifted boundary.
    #[arg(long)]
    all_shifts: bool,
    /// Word of a path from the origin; may repeat.
    #[arg(long = "path")]
    paths: Vec<Word>,
    /// Write the SVG here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// What a subcommand hands back: text for the terminal, values for --json.
struct Output {
    command: &'static str,
    input: Value,
    result: Value,
    text: String,
    exit_code: i32,
}

impl Output {
    fn ok(command: &'static str, input: Value, result: Value, text: String) -> Self {
        Output {
            command,
            input,
            result,
            text,
            exit_code: 0,
        }
    }
}

fn single_count(command: &'static str, input: Value, value: &BigCount) -> Output {
    Output::ok(
        command,
        input,
        json!({ "count": value.to_string() }),
        format!("{}\n", value),
    )
}

fn main() {
    let cli = Cli::parse();
    let timer = Instant::now();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "command": out.command,
                    "input": out.input,
                    "result": out.result,
                    "elapsed_ms": timer.elapsed().as_millis() as u64,
                });
                println!("{}", doc);
            } else {
                print!("{}", out.text);
            }
            if out.exit_code != 0 {
                std::process::exit(out.exit_code);
            }
        }
        Err(err) => {
            eprintln!("error: {}", err);
            std::process::exit(1);
        }
    }
}

type RunResult = Result<Output, Box<dyn std::error::Error>>;

fn run(command: &Command) -> RunResult {
    match command {
        Command::Count(args) => run_count(args),
        Command::Formula(cmd) => run_formula(cmd),
        Command::Verify(args) => run_verify(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Bijection(cmd) => run_bijection(cmd),
        Command::Render(args) => run_render(args),
    }
}

fn run_count(args: &CountArgs) -> RunResult {
    let a = &args.comp;
    let t = args.to;
    if args.all_shifts {
        let mut text = String::new();
        let mut rows = Vec::new();
        let mut total = BigCount::from(0u32);
        for j in 0..a.part_count() as i64 {
            let b = a.shift(j);
            let d = count_dominated(&b, t)?;
            let _ = writeln!(text, "shift {} boundary ({}): {}", j, b, d);
            rows.push(json!({ "shift": j, "boundary": b.to_string(), "count": d.to_string() }));
            total += d;
        }
        let _ = writeln!(text, "total {}", total);
        Ok(Output::ok(
            "count",
            json!({ "comp": a.to_string(), "to": point_str(t), "all_shifts": true }),
            json!({ "per_shift": rows, "total": total.to_string() }),
            text,
        ))
    } else {
        let b = a.shift(args.shift);
        let d = count_dominated(&b, t)?;
        let mut text = format!("shift {} boundary ({}): {}\n", args.shift, b, d);
        let mut result = json!({ "count": d.to_string() });
        if args.list {
            let words: Vec<String> = enumerate_dominated_paths_capped(&b, t, args.cap)?
                .iter()
                .map(|p| p.word())
                .collect();
            for w in &words {
                let _ = writeln!(text, "{}", w);
            }
            result["words"] = json!(words);
        }
        Ok(Output::ok(
            "count",
            json!({ "comp": a.to_string(), "to": point_str(t), "shift": args.shift }),
            result,
            text,
        ))
    }
}

fn run_formula(cmd: &FormulaCmd) -> RunResult {
    match cmd {
        FormulaCmd::Theorem1(q) => {
            let report = lpbp_counts_formula(&q.comp, q.to)?;
            let text = format!("all {}\nbad {}\ngood {}\n", report.all, report.bad, report.good);
            Ok(Output::ok(
                "formula theorem1",
                json!({ "comp": q.comp.to_string(), "to": point_str(q.to) }),
                json!({
                    "all": report.all.to_string(),
                    "bad": report.bad.to_string(),
                    "good": report.good.to_string(),
                }),
                text,
            ))
        }
        FormulaCmd::Ballot { a, k, l } => {
            let v = ballot_count(*a, *k, *l)?;
            Ok(single_count("formula ballot", json!({ "a": a, "k": k, "l": l }), &v))
        }
        FormulaCmd::Gencat { a, m } => {
            let v = generalized_catalan(*a, *m)?;
            Ok(single_count("formula gencat", json!({ "a": a, "m": m }), &v))
        }
        FormulaCmd::Corners(q) => {
            let v = upright_corners_formula(&q.comp, q.to, q.corners)?;
            Ok(single_count(
                "formula corners",
                json!({ "comp": q.comp.to_string(), "to": point_str(q.to), "corners": q.corners }),
                &v,
            ))
        }
        FormulaCmd::Corners2(q) => {
            let v = rightup_corners_formula(&q.comp, q.to, q.corners)?;
            Ok(single_count(
                "formula corners2",
                json!({ "comp": q.comp.to_string(), "to": point_str(q.to), "corners": q.corners }),
                &v,
            ))
        }
        FormulaCmd::Periodic { a, b, n } => {
            let counts = PeriodicSpec::new(*a, *b, *n)?.counts();
            let text = format!(
                "q_ab {}\nq_ba {}\np_ab {}\np_ba {}\n",
                counts.q_ab, counts.q_ba, counts.p_ab, counts.p_ba
            );
            Ok(Output::ok(
                "formula periodic",
                json!({ "a": a, "b": b, "n": n }),
                json!({
                    "q_ab": counts.q_ab.to_string(),
                    "q_ba": counts.q_ba.to_string(),
                    "p_ab": counts.p_ab.to_string(),
                    "p_ba": counts.p_ba.to_string(),
                }),
                text,
            ))
        }
        FormulaCmd::Halfslope { c, n } => {
            let v = half_slope_formula(*c, *n)?;
            Ok(single_count("formula halfslope", json!({ "c": c, "n": n }), &v))
        }
        FormulaCmd::CatStaircase { n } => {
            let counts = catalan_staircase_counts(*n);
            let under = counts
                .under_uurr
                .as_ref()
                .map(|v| v.to_string());
            let text = format!(
                "to_odd {}\nto_even {}\nunder_uurr {}\n",
                counts.to_odd,
                counts.to_even,
                under.as_deref().unwrap_or("none"),
            );
            Ok(Output::ok(
                "formula cat-staircase",
                json!({ "n": n }),
                json!({
                    "to_odd": counts.to_odd.to_string(),
                    "to_even": counts.to_even.to_string(),
                    "under_uurr": under,
                }),
                text,
            ))
        }
        FormulaCmd::Staircase { s, t, n } => {
            let v = staircase_count(*s, *t, *n)?;
            Ok(single_count("formula staircase", json!({ "s": s, "t": t, "n": n }), &v))
        }
        FormulaCmd::Kcat { n, k } => {
            let v = k_catalan(*n, *k)?;
            Ok(single_count("formula kcat", json!({ "n": n, "k": k }), &v))
        }
        FormulaCmd::Avoid { s, t, n } => {
            let v = staircase_avoidance_count(*s, *t, *n)?;
            Ok(single_count("formula avoid", json!({ "s": s, "t": t, "n": n }), &v))
        }
        FormulaCmd::AvoidCorners { s, t, n, corners } => {
            let v = staircase_avoidance_corners(*s, *t, *n, *corners)?;
            Ok(single_count(
                "formula avoid-corners",
                json!({ "s": s, "t": t, "n": n, "corners": corners }),
                &v,
            ))
        }
    }
}

fn run_verify(args: &VerifyArgs) -> RunResult {
    let limits = SweepLimits {
        max_n: args.max_n,
        max_m: args.max_m,
    };
    let outcomes = run_all(limits);
    let mut text = String::new();
    let mut checks = Vec::new();
    let mut failed = 0usize;
    for (name, outcome) in &outcomes {
        match outcome {
            Ok(detail) => {
                let _ = writeln!(text, "ok {}: {}", name, detail);
                checks.push(json!({ "name": name, "ok": true, "detail": detail }));
            }
            Err(detail) => {
                failed += 1;
                let _ = writeln!(text, "FAIL {}: {}", name, detail);
                checks.push(json!({ "name": name, "ok": false, "detail": detail }));
            }
        }
    }
    if failed == 0 {
        let _ = writeln!(text, "all identities hold");
    } else {
        let _ = writeln!(text, "{} of {} checks failed", failed, outcomes.len());
    }
    Ok(Output {
        command: "verify",
        input: json!({ "max_n": args.max_n, "max_m": args.max_m }),
        result: json!({ "checks": checks, "all_hold": failed == 0 }),
        text,
        exit_code: i32::from(failed > 0),
    })
}

fn run_sweep(args: &SweepArgs) -> RunResult {
    let mut tasks: Vec<(Composition, LatticePoint)> = Vec::new();
    for m in 1..=args.max_m {
        for n in 0..=args.max_n {
            for a in all_compositions(n, m) {
                for l in 0..=m as i64 {
                    for k in 0..=n as i64 {
                        tasks.push((a.clone(), LatticePoint::new(k, l)));
                    }
                }
            }
        }
    }
    if let Some(sample) = args.sample {
        let mut rng = StdRng::seed_from_u64(args.seed);
        let mut picked = rand::seq::index::sample(&mut rng, tasks.len(), sample.min(tasks.len()))
            .into_vec();
        picked.sort_unstable();
        tasks = picked.into_iter().map(|i| tasks[i].clone()).collect();
    }

    let mut compared = 0u64;
    let mut skipped = 0u64;
    let mut aggregate = BigCount::from(0u32);
    let mut mismatches: Vec<String> = Vec::new();
    for (a, t) in &tasks {
        if !weakly_right_of_all_boundaries(a, LatticePoint::new(t.x + 1, t.y))? {
            skipped += 1;
            continue;
        }
        let oracle = count_lpbp(a, *t)?;
        let formula = lpbp_counts_formula(a, *t)?;
        if oracle == formula {
            compared += 1;
            aggregate += &oracle.all;
        } else {
            mismatches.push(format!("composition ({}) terminus {}", a, t));
        }
    }
    mismatches.sort();

    let mut text = String::new();
    let _ = writeln!(text, "termini visited {}", tasks.len());
    let _ = writeln!(text, "compared {}", compared);
    let _ = writeln!(text, "hypothesis not met {}", skipped);
    let _ = writeln!(text, "aggregate pair count {}", aggregate);
    for line in &mismatches {
        let _ = writeln!(text, "MISMATCH {}", line);
    }
    let agree = mismatches.is_empty();
    let _ = writeln!(text, "{}", if agree { "all comparisons agree" } else { "comparisons disagree" });
    Ok(Output {
        command: "sweep",
        input: json!({
            "max_n": args.max_n,
            "max_m": args.max_m,
            "sample": args.sample,
            "seed": args.seed,
        }),
        result: json!({
            "visited": tasks.len(),
            "compared": compared,
            "skipped": skipped,
            "aggregate": aggregate.to_string(),
            "mismatches": mismatches,
            "agree": agree,
        }),
        text,
        exit_code: i32::from(!agree),
    })
}

fn landing_json(pair: &Lpbp) -> Result<Value, lpbp::Error> {
    let landing = classify_bad(pair)?;
    Ok(json!({
        "step_index": landing.step_index,
        "landing": point_str(landing.landing),
        "column": landing.column,
        "rung": landing.rung,
    }))
}

fn landing_line(pair: &Lpbp) -> Result<String, lpbp::Error> {
    let landing = classify_bad(pair)?;
    Ok(format!(
        "bad step index {}, landing {}, column {}, rung {}\n",
        landing.step_index,
        landing.landing,
        landing.column,
        landing.rung
    ))
}

/// Blocks, profile and admissible rotation trace shared by omega directions.
fn block_trace(a: &Composition, w: &[Step]) -> Result<(String, Value), Box<dyn std::error::Error>> {
    let blocks = parse_blocks(a, w)?;
    let profile = block_profile(&blocks);
    let svals: Vec<usize> = positive_shifts(&profile)?.iter().map(|r| r / 2).collect();
    let words: Vec<String> = blocks.iter().map(|b| lpbp::word_of(b)).collect();
    let mut text = String::new();
    for (i, bw) in words.iter().enumerate() {
        let _ = writeln!(text, "block {}: \"{}\"", i, bw);
    }
    let _ = writeln!(
        text,
        "profile: [{}]",
        profile.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(
        text,
        "s-values: [{}]",
        svals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    let value = json!({ "blocks": words, "profile": profile, "s_values": svals });
    Ok((text, value))
}

fn run_bijection(cmd: &BijectionCmd) -> RunResult {
    match cmd {
        BijectionCmd::Psi(args) => {
            let path = LatticePath::new(LatticePoint::new(0, 0), args.path.0.clone());
            let pair = Lpbp::new(path, args.comp.clone(), args.shift)?;
            let mut text = String::new();
            let mut result = json!({});
            if args.trace {
                text.push_str(&landing_line(&pair)?);
            }
            result["landing"] = landing_json(&pair)?;
            let reflected = psi(&pair, args.to)?;
            let _ = writeln!(text, "origin {}", reflected.origin());
            let _ = writeln!(text, "word {}", reflected.word());
            result["origin"] = json!(point_str(reflected.origin()));
            result["word"] = json!(reflected.word());
            Ok(Output::ok(
                "bijection psi",
                json!({
                    "comp": args.comp.to_string(),
                    "shift": args.shift,
                    "path": lpbp::word_of(&args.path.0),
                    "to": point_str(args.to),
                }),
                result,
                text,
            ))
        }
        BijectionCmd::Phi(args) => {
            let path = LatticePath::new(LatticePoint::new(-1, 1), args.path.0.clone());
            let pair = phi(&path, &args.comp, args.column, args.rung, args.to)?;
            let mut text = String::new();
            let mut result = json!({
                "shift": pair.shift_index(),
                "word": pair.path().word(),
            });
            if args.trace {
                text.push_str(&landing_line(&pair)?);
                result["landing"] = landing_json(&pair)?;
            }
            let _ = writeln!(text, "shift {}", pair.shift_index());
            let _ = writeln!(text, "word {}", pair.path().word());
            Ok(Output::ok(
                "bijection phi",
                json!({
                    "comp": args.comp.to_string(),
                    "path": lpbp::word_of(&args.path.0),
                    "column": args.column,
                    "rung": args.rung,
                    "to": point_str(args.to),
                }),
                result,
                text,
            ))
        }
        BijectionCmd::Omega(args) => {
            let mut text = String::new();
            let mut result = json!({});
            if args.trace {
                let (trace_text, trace_value) = block_trace(&args.comp, &args.word.0)?;
                text.push_str(&trace_text);
                result["trace"] = trace_value;
            }
            let pair = omega(&args.comp, args.height, &args.word.0, args.rank)?;
            let _ = writeln!(text, "shift {}", pair.shift_index());
            let _ = writeln!(text, "boundary ({})", pair.shifted_composition());
            let _ = writeln!(text, "word {}", pair.path().word());
            result["shift"] = json!(pair.shift_index());
            result["boundary"] = json!(pair.shifted_composition().to_string());
            result["word"] = json!(pair.path().word());
            Ok(Output::ok(
                "bijection omega",
                json!({
                    "comp": args.comp.to_string(),
                    "height": args.height,
                    "word": lpbp::word_of(&args.word.0),
                    "rank": args.rank,
                }),
                result,
                text,
            ))
        }
        BijectionCmd::OmegaInv(args) => {
            let path = LatticePath::new(LatticePoint::new(0, 0), args.path.0.clone());
            let pair = Lpbp::new(path, args.comp.clone(), args.shift)?;
            let (word, rank) = omega_inverse(&pair)?;
            let mut text = String::new();
            let mut result = json!({
                "word": lpbp::word_of(&word),
                "rank": rank,
            });
            if args.trace {
                let (trace_text, trace_value) = block_trace(&args.comp, &word)?;
                text.push_str(&trace_text);
                result["trace"] = trace_value;
            }
            let _ = writeln!(text, "rank {}", rank);
            let _ = writeln!(text, "word {}", lpbp::word_of(&word));
            Ok(Output::ok(
                "bijection omega-inv",
                json!({
                    "comp": args.comp.to_string(),
                    "shift": args.shift,
                    "path": lpbp::word_of(&args.path.0),
                }),
                result,
                text,
            ))
        }
    }
}

fn run_render(args: &RenderArgs) -> RunResult {
    let words: Vec<Vec<Step>> = args.paths.iter().map(|w| w.0.clone()).collect();
    let svg = render::render_svg(&args.comp, args.all_shifts, &words)?;
    let input = json!({
        "comp": args.comp.to_string(),
        "all_shifts": args.all_shifts,
        "paths": words.iter().map(|w| lpbp::word_of(w)).collect::<Vec<_>>(),
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    });
    match &args.out {
        Some(path) => {
            std::fs::write(path, &svg)?;
            Ok(Output::ok(
                "render",
                input,
                json!({ "out": path.display().to_string(), "bytes": svg.len() }),
                format!("wrote {} ({} bytes)\n", path.display(), svg.len()),
            ))
        }
        None => Ok(Output::ok("render", input, json!({ "svg": svg }), svg.clone())),
    }
}
