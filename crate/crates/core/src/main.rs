//! Command-line front end: check kernels, reduce polynomials, multiply
//! in the free algebra, run composition checks, test joinability,
//! list the catalog, and classify subword placements.

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use opirw::freealg::FreeAlgebra;
use opirw::gsbasis::{
    inclusion_composition, intersection_composition, is_trivial_mod, Side, Triviality,
};
use opirw::order::Compatibility;
use opirw::parse::{parse_polynomial, parse_word};
use opirw::rbtype::{catalog, catalog_lookup, rota_baxter_report, Verdict};
use opirw::rewrite::{joinable, normal_form, normal_form_traced, Joinability, OpiSpec, DEFAULT_FUEL};
use opirw::sample::{random_nonunit_word, random_star_word, rng_from_seed};
use opirw::words::{classify_placements, enumerate_placements};
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "opirw", version, about = "Rewriting engine for bracketed words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct OpiArgs {
    /// Kernel source: catalog:KEY, inline:"POLY", or a file path.
    #[arg(long)]
    opi: String,
    /// Monomial order; only "db" is built in.
    #[arg(long, default_value = "db")]
    order: String,
    /// Reduction step budget.
    #[arg(long, default_value_t = DEFAULT_FUEL)]
    fuel: usize,
    /// Specialize scalar parameters, e.g. lam=1,c=-1.
    #[arg(long)]
    params: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the kernel generates a convergent system.
    Check {
        #[command(flatten)]
        opi: OpiArgs,
    },
    /// Rewrite a polynomial to its normal form.
    Reduce {
        #[command(flatten)]
        opi: OpiArgs,
        poly: String,
        /// Print each rewriting step.
        #[arg(long)]
        trace: bool,
    },
    /// Multiply two elements of the free algebra on the basis.
    Mul {
        #[command(flatten)]
        opi: OpiArgs,
        left: String,
        right: String,
    },
    /// Run random composition triviality checks.
    Compose {
        #[command(flatten)]
        opi: OpiArgs,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether two polynomials have a common reduct.
    Join {
        #[command(flatten)]
        opi: OpiArgs,
        left: String,
        right: String,
    },
    /// List the built-in kernels.
    Catalog,
    /// Classify all placement pairs of two subwords in a word.
    Classify {
        word: String,
        sub1: String,
        sub2: String,
    },
}

fn load_opi(args: &OpiArgs) -> Result<OpiSpec, String> {
    if args.order != "db" {
        return Err(format!("unknown order \"{}\"; only \"db\" is built in", args.order));
    }
    let spec = if let Some(key) = args.opi.strip_prefix("catalog:") {
        catalog_lookup(key).ok_or_else(|| format!("no catalog entry \"{}\"", key))?
    } else if let Some(text) = args.opi.strip_prefix("inline:") {
        OpiSpec::new("inline", parse_polynomial(text)?)?
    } else {
        let text = std::fs::read_to_string(&args.opi)
            .map_err(|e| format!("cannot read {}: {}", args.opi, e))?;
        OpiSpec::new(&args.opi, parse_polynomial(text.trim())?)?
    };
    match &args.params {
        Some(text) => Ok(spec.specialize(&parse_params(text)?)),
        None => Ok(spec),
    }
}

fn parse_params(text: &str) -> Result<BTreeMap<String, BigRational>, String> {
    let mut out = BTreeMap::new();
    for part in text.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad parameter assignment \"{}\"", part))?;
        let value: BigRational = value
            .trim()
            .parse()
            .map_err(|e| format!("bad value for {}: {}", name, e))?;
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_check(opi: &OpiArgs) -> Result<ExitCode, String> {
    let spec = load_opi(opi)?;
    let report = rota_baxter_report(&spec, opi.fuel);
    println!("kernel: {}", spec.name);
    println!("B = {}", spec.b);
    println!("totally linear: {}", yesno(report.totally_linear));
    println!("monomials in normal form: {}", yesno(report.b_in_rbnf));
    println!(
        "order compatibility: {}",
        match report.compatibility {
            Compatibility::Compatible => "compatible",
            Compatibility::Unknown => "unknown",
        }
    );
    match &report.assoc_defect_nf {
        Some(nf) => println!("associativity defect normal form: {}", nf),
        None => println!("associativity defect normal form: (fuel exhausted)"),
    }
    println!("verdict: {:?}", report.verdict);
    Ok(if report.verdict == Verdict::RotaBaxterType {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_reduce(opi: &OpiArgs, poly: &str, trace: bool) -> Result<ExitCode, String> {
    let spec = load_opi(opi)?;
    let f = parse_polynomial(poly)?;
    let nf = if trace {
        let (nf, steps) = normal_form_traced(&f, &spec, opi.fuel)?;
        for (i, (site, result)) in steps.iter().enumerate() {
            println!(
                "step {}: {} at {} with ({}, {}) -> {}",
                i + 1,
                site.monomial,
                site.context,
                site.left,
                site.right,
                result
            );
        }
        nf
    } else {
        normal_form(&f, &spec, opi.fuel)?
    };
    println!("{}", nf);
    Ok(ExitCode::SUCCESS)
}

fn run_mul(opi: &OpiArgs, left: &str, right: &str) -> Result<ExitCode, String> {
    let spec = load_opi(opi)?;
    let alg = FreeAlgebra::new(spec, opi.fuel)?;
    let f = alg.reduce(&parse_polynomial(left)?);
    let g = alg.reduce(&parse_polynomial(right)?);
    println!("{}", alg.free_mul(&f, &g)?);
    Ok(ExitCode::SUCCESS)
}

fn run_compose(
    opi: &OpiArgs,
    samples: usize,
    depth: usize,
    seed: u64,
) -> Result<ExitCode, String> {
    let spec = load_opi(opi)?;
    let mut rng = rng_from_seed(seed);
    let alphabet = ["x", "y", "z"];
    let mut failures = 0usize;
    for i in 0..samples {
        let u = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let v = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let s = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let comp = intersection_composition(&u, &v, &s, &spec);
        let outcome = is_trivial_mod(&comp.value, &comp.ambient, &spec, opi.fuel);
        let ok = outcome == Triviality::Trivial;
        failures += usize::from(!ok);
        println!(
            "intersection {} ({}, {}, {}): {}",
            i + 1,
            u,
            v,
            s,
            if ok { "pass" } else { "FAIL" }
        );
    }
    for i in 0..samples {
        let q = random_star_word(&mut rng, &alphabet, depth, 3);
        let r = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let s = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let other = random_nonunit_word(&mut rng, &alphabet, depth, 3);
        let side = if i % 2 == 0 { Side::Left } else { Side::Right };
        let comp = inclusion_composition(side, &q, &r, &s, &other, &spec)?;
        let outcome = is_trivial_mod(&comp.value, &comp.ambient, &spec, opi.fuel);
        let ok = outcome == Triviality::Trivial;
        failures += usize::from(!ok);
        println!(
            "inclusion {} ({:?}, {}, {}, {}, {}): {}",
            i + 1,
            side,
            q,
            r,
            s,
            other,
            if ok { "pass" } else { "FAIL" }
        );
    }
    println!("failures: {}", failures);
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_join(opi: &OpiArgs, left: &str, right: &str) -> Result<ExitCode, String> {
    let spec = load_opi(opi)?;
    let f = parse_polynomial(left)?;
    let g = parse_polynomial(right)?;
    match joinable(&f, &g, &spec, opi.fuel) {
        Joinability::Joinable(common) => {
            println!("joinable: {}", common);
            Ok(ExitCode::SUCCESS)
        }
        Joinability::NotJoinable => {
            println!("not joinable");
            Ok(ExitCode::FAILURE)
        }
        Joinability::Indeterminate => {
            println!("indeterminate within fuel");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn run_catalog() -> ExitCode {
    for entry in catalog() {
        println!("{}: {}", entry.name, entry.b);
    }
    ExitCode::SUCCESS
}

fn run_classify(word: &str, sub1: &str, sub2: &str) -> Result<ExitCode, String> {
    let w = parse_word(word)?;
    let u1 = parse_word(sub1)?;
    let u2 = parse_word(sub2)?;
    let ps1 = enumerate_placements(&w, &u1);
    let ps2 = enumerate_placements(&w, &u2);
    if ps1.is_empty() || ps2.is_empty() {
        println!("no placements to compare");
        return Ok(ExitCode::FAILURE);
    }
    for p1 in &ps1 {
        for p2 in &ps2 {
            let rel = classify_placements(&w, p1, p2)?;
            println!("({}, {}) vs ({}, {}): {:?}", u1, p1.context, u2, p2.context, rel);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Check { opi } => run_check(opi),
        Cmd::Reduce { opi, poly, trace } => run_reduce(opi, poly, *trace),
        Cmd::Mul { opi, left, right } => run_mul(opi, left, right),
        Cmd::Compose {
            opi,
            samples,
            depth,
            seed,
        } => run_compose(opi, *samples, *depth, *seed),
        Cmd::Join { opi, left, right } => run_join(opi, left, right),
        Cmd::Catalog => Ok(run_catalog()),
        Cmd::Classify { word, sub1, sub2 } => run_classify(word, sub1, sub2),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
