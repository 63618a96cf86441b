//! Command-line front end: per-ring queries, symbolic family checks, and the
//! full corpus suite with deterministic text/JSON reports.
//!
//! Exit codes: 0 success (for `suite`: no statement refuted and all internal
//! invariants held), 1 refutation or invariant failure, 2 usage error,
//! 3 resource cap.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, ClassificationReport};
use crate::corpus::{build_corpus, fingerprint, Fingerprint, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::ideal::{
    enumerate_ideals, generate_ideal, primary_decomposition, IdealLattice, PrimaryDecomposition,
    DEFAULT_LATTICE_CAP,
};
use crate::pid::{
    self, parse_domain, parse_family_spec, parse_generator, PidA2Result, PidDomain,
    PidStarResult, PidTheorem8Report,
};
use crate::ring::{localize_at_prime, parse_ring_spec, validate_axioms, AxiomViolation, Ring};
use crate::star::{
    star_check_certified, star_check_exhaustive, star_check_lattice, theorem_battery,
    BatteryOptions, StarCheckResult, TheoremReport, Verdict, DEFAULT_STAR_CAP,
};

const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "star-rings",
    version,
    about = "Decision procedures for radical-intersection properties of finite \
             commutative rings, with symbolic counterexamples over Z and F_p[x]"
)]
struct Cli {
    /// Output format for stdout
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, characteristic and fingerprint of a ring
    Info {
        /// Ring spec, e.g. "Z/12" or "Z/4 x F2[x]/(x^2)"
        ring: String,
    },
    /// List the complete ideal lattice
    Ideals {
        ring: String,
        /// Abort if the lattice exceeds this many ideals
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
    /// Radical of the ideal generated by --ideal
    Radical {
        ring: String,
        /// Generator list, e.g. --ideal 4 or --ideal 4,6
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
    },
    /// Full classification report
    Classify { ring: String },
    /// Decide the star property
    StarCheck {
        ring: String,
        /// Exhaustive subset sweep up to this many ideals, certified beyond
        #[arg(long, default_value_t = DEFAULT_STAR_CAP)]
        star_cap: usize,
    },
    /// Irredundant primary decomposition of the ideal generated by --ideal
    Decompose {
        ring: String,
        /// Generator list; defaults to the zero ideal
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        ideal: Vec<String>,
    },
    /// Localize at the prime ideal generated by --prime
    Localize {
        ring: String,
        /// Generator list of the prime, e.g. --prime 2
        #[arg(long, value_delimiter = ',', required = true)]
        prime: Vec<usize>,
    },
    /// Star check for a symbolic family over a principal ideal domain
    PidStar {
        /// Domain: "Z" or "Fp[x]"
        #[arg(long)]
        domain: String,
        /// Family: "finite:g1,g2,...", "all-primes" or "prime-powers:g"
        #[arg(long)]
        family: String,
    },
    /// Uniform-exponent check of an element against a symbolic family
    PidA2 {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        family: String,
        /// The element a, as a generator in the domain
        #[arg(long)]
        element: String,
    },
    /// Run the statement suite over the generated corpus plus the
    /// integer/polynomial negative suite; writes JSON and text reports
    Suite {
        /// Largest ring order admitted into the corpus
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Exhaustive star sweep threshold
        #[arg(long, default_value_t = DEFAULT_STAR_CAP)]
        star_cap: usize,
        /// Worker threads for per-ring evaluation
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report base path; writes <out>.json and <out>.txt
        #[arg(long, default_value = "suite-report")]
        out: PathBuf,
    },
}

/// Parses and runs a full command line, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    let format = cli.format;
    match cli.command {
        Command::Info { ring } => {
            let ring = parse_ring_spec(&ring)?;
            let report = info_report(&ring)?;
            emit(format, &report, &render_info(&report));
            Ok(0)
        }
        Command::Ideals { ring, lattice_cap } => {
            let ring = parse_ring_spec(&ring)?;
            let lattice = enumerate_ideals(&ring, lattice_cap)?;
            let report = lattice_report(&lattice);
            emit(format, &report, &render_lattice(&report));
            Ok(0)
        }
        Command::Radical { ring, ideal } => {
            let ring = parse_ring_spec(&ring)?;
            let ideal = generate_ideal(&ring, &ideal)?;
            let radical = ideal.radical();
            let report = RadicalReport {
                ring: ring.label().to_string(),
                ideal_generators: ideal.generator_label(),
                ideal: ideal.members().collect(),
                radical_generators: radical.generator_label(),
                radical: radical.members().collect(),
            };
            emit(format, &report, &render_radical(&report));
            Ok(0)
        }
        Command::Classify { ring } => {
            let ring = parse_ring_spec(&ring)?;
            let lattice = enumerate_ideals(&ring, DEFAULT_LATTICE_CAP)?;
            let report = classify(&lattice)?;
            emit(format, &report, &render_classification(&report));
            Ok(0)
        }
        Command::StarCheck { ring, star_cap } => {
            let ring = parse_ring_spec(&ring)?;
            let lattice = enumerate_ideals(&ring, DEFAULT_LATTICE_CAP)?;
            let result = star_check_lattice(&lattice, star_cap);
            emit(format, &result, &render_star(&result));
            Ok(if result.satisfied { 0 } else { 1 })
        }
        Command::Decompose { ring, ideal } => {
            let ring = parse_ring_spec(&ring)?;
            let gens: Vec<usize> = ideal
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad generator '{s}'")))
                })
                .collect::<Result<_>>()?;
            let target = generate_ideal(&ring, &gens)?;
            let lattice = enumerate_ideals(&ring, DEFAULT_LATTICE_CAP)?;
            let decomposition = primary_decomposition(&lattice, &target)?;
            decomposition.verify()?;
            emit(format, &decomposition, &render_decomposition(&decomposition));
            Ok(0)
        }
        Command::Localize { ring, prime } => {
            let ring = parse_ring_spec(&ring)?;
            let prime = generate_ideal(&ring, &prime)?;
            let (localized, _hom) = localize_at_prime(&ring, &prime)?;
            let report = LocalizationReport {
                ring: ring.label().to_string(),
                prime: prime.members().collect(),
                localization: localized.label().to_string(),
                order: localized.order(),
                is_field: localized.is_field(),
                fingerprint: fingerprint(&localized)?,
            };
            emit(format, &report, &render_localization(&report));
            Ok(0)
        }
        Command::PidStar { domain, family } => {
            let domain = parse_domain(&domain)?;
            let spec = parse_family_spec(domain, &family)?;
            let result = pid::star_check(&spec)?;
            emit(format, &result, &render_pid_star(&result));
            Ok(0)
        }
        Command::PidA2 {
            domain,
            family,
            element,
        } => {
            let domain = parse_domain(&domain)?;
            let spec = parse_family_spec(domain, &family)?;
            let element = parse_generator(domain, &element)?;
            let result = pid::a2_check(&spec, &element)?;
            emit(format, &result, &render_pid_a2(&result));
            Ok(0)
        }
        Command::Suite {
            max_order,
            star_cap,
            jobs,
            out,
        } => {
            let opts = SuiteOptions {
                max_order,
                star_cap,
                jobs,
            };
            let run = run_suite(&opts)?;
            write_reports(&out, &run)?;
            match format {
                Format::Json => println!("{}", run.json),
                Format::Text => print!("{}", run.text),
            }
            Ok(run.exit_code)
        }
    }
}

fn emit<S: Serialize>(format: Format, value: &S, text: &str) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => print!("{text}"),
    }
}

#[derive(Serialize)]
struct InfoReport {
    ring: String,
    order: usize,
    characteristic: usize,
    zero_ring: bool,
    fingerprint: Fingerprint,
}

fn info_report(ring: &Ring) -> Result<InfoReport> {
    Ok(InfoReport {
        ring: ring.label().to_string(),
        order: ring.order(),
        characteristic: ring.characteristic(),
        zero_ring: ring.is_zero_ring(),
        fingerprint: fingerprint(ring)?,
    })
}

fn render_info(r: &InfoReport) -> String {
    let mut out = format!(
        "ring {}\n  order: {}\n  characteristic: {}\n",
        r.ring, r.order, r.characteristic
    );
    if r.zero_ring {
        out.push_str("  zero ring (degenerate)\n");
    }
    out.push_str(&format!(
        "  fingerprint: order {}, char {}, {} unit(s), {} ideal(s), {} prime(s), nilradical size {}\n",
        r.fingerprint.order,
        r.fingerprint.characteristic,
        r.fingerprint.unit_count,
        r.fingerprint.ideal_count,
        r.fingerprint.prime_ideal_count,
        r.fingerprint.nilradical_size
    ));
    out
}

#[derive(Serialize)]
struct LatticeEntry {
    generators: String,
    members: Vec<usize>,
    prime: bool,
    maximal: bool,
    radical_ideal: bool,
}

#[derive(Serialize)]
struct LatticeReport {
    ring: String,
    ideal_count: usize,
    ideals: Vec<LatticeEntry>,
}

fn lattice_report(lattice: &IdealLattice) -> LatticeReport {
    LatticeReport {
        ring: lattice.ring().label().to_string(),
        ideal_count: lattice.len(),
        ideals: lattice
            .ideals()
            .iter()
            .map(|i| LatticeEntry {
                generators: i.generator_label(),
                members: i.members().collect(),
                prime: i.is_prime(),
                maximal: lattice.is_maximal_in_lattice(i),
                radical_ideal: i.is_radical_ideal(),
            })
            .collect(),
    }
}

fn render_lattice(r: &LatticeReport) -> String {
    let mut out = format!("ring {}: {} ideal(s)\n", r.ring, r.ideal_count);
    for entry in &r.ideals {
        let mut tags = Vec::new();
        if entry.prime {
            tags.push("prime");
        }
        if entry.maximal {
            tags.push("maximal");
        }
        if entry.radical_ideal {
            tags.push("radical");
        }
        out.push_str(&format!(
            "  ({}) = {:?}{}\n",
            entry.generators,
            entry.members,
            if tags.is_empty() {
                String::new()
            } else {
                format!("  [{}]", tags.join(", "))
            }
        ));
    }
    out
}

#[derive(Serialize)]
struct RadicalReport {
    ring: String,
    ideal_generators: String,
    ideal: Vec<usize>,
    radical_generators: String,
    radical: Vec<usize>,
}

fn render_radical(r: &RadicalReport) -> String {
    format!(
        "ring {}\n  ideal ({}) = {:?}\n  radical ({}) = {:?}\n",
        r.ring, r.ideal_generators, r.ideal, r.radical_generators, r.radical
    )
}

fn render_classification(r: &ClassificationReport) -> String {
    let mut out = format!("ring {} (order {})\n", r.ring, r.order);
    if r.degenerate {
        out.push_str("  zero ring (degenerate)\n");
    }
    for (name, value) in [
        ("field", r.is_field),
        ("domain", r.is_domain),
        ("reduced", r.is_reduced),
        ("von Neumann regular", r.is_vnr),
        ("pi-regular", r.is_pi_regular),
        ("radical map injective", r.radical_injective),
        ("d.c.c. on radical ideals", r.dcc_radical_ideals),
    ] {
        out.push_str(&format!("  {name}: {value}\n"));
    }
    out.push_str(&format!("  krull dimension: {}\n", r.krull_dimension));
    out.push_str(&format!(
        "  nilradical: {:?}\n",
        r.nilradical.members().collect::<Vec<_>>()
    ));
    for w in &r.witnesses {
        out.push_str(&format!("  witness[{}]: {}\n", w.predicate, w.note));
    }
    out
}

fn render_star(r: &StarCheckResult) -> String {
    let mut out = format!(
        "ring {}: star property {} ({:?}, {} families checked)\n",
        r.ring,
        if r.satisfied { "satisfied" } else { "FAILED" },
        r.method,
        r.families_checked
    );
    if r.satisfied {
        out.push_str(&format!("  witness subset: all {} lattice ideals\n", r.witness_subset.len()));
        out.push_str(&format!("  certificate: {}\n", r.certificate));
    } else if let Some(c) = &r.counterexample {
        out.push_str(&format!(
            "  failing family (lattice indices): {:?}\n  radical of intersection: {:?}\n  intersection of radicals: {:?}\n",
            c.subset,
            c.radical_of_intersection.members().collect::<Vec<_>>(),
            c.intersection_of_radicals.members().collect::<Vec<_>>()
        ));
    }
    out
}

fn render_decomposition(d: &PrimaryDecomposition) -> String {
    let mut out = format!(
        "ideal ({}) = {:?}\n",
        d.target.generator_label(),
        d.target.members().collect::<Vec<_>>()
    );
    out.push_str(&format!(
        "irredundant primary decomposition with {} component(s):\n",
        d.components.len()
    ));
    for c in &d.components {
        out.push_str(&format!(
            "  ({}) = {:?}\n",
            c.generator_label(),
            c.members().collect::<Vec<_>>()
        ));
    }
    out
}

#[derive(Serialize)]
struct LocalizationReport {
    ring: String,
    prime: Vec<usize>,
    localization: String,
    order: usize,
    is_field: bool,
    fingerprint: Fingerprint,
}

fn render_localization(r: &LocalizationReport) -> String {
    format!(
        "ring {} localized at prime {:?}\n  result: {} (order {}, field: {})\n",
        r.ring, r.prime, r.localization, r.order, r.is_field
    )
}

fn render_pid_star(r: &PidStarResult) -> String {
    let mut out = format!(
        "domain {}, family {}: star property {}\n",
        r.domain,
        r.family,
        if r.satisfied { "satisfied" } else { "FAILED" }
    );
    let gens: Vec<String> = r
        .witness_subfamily
        .iter()
        .map(|i| format!("({i})"))
        .collect();
    if r.satisfied {
        out.push_str(&format!(
            "  S' = {{{}}}; both sides equal ({})\n",
            gens.join(", "),
            r.radical_of_intersection
        ));
    } else {
        out.push_str(&format!(
            "  radical of full intersection: ({})\n  finite subfamily {{{}}} has radical intersection ({})\n",
            r.radical_of_intersection,
            gens.join(", "),
            r.intersection_of_radicals
        ));
    }
    out.push_str(&format!("  justification: {}\n", r.justification));
    out
}

fn render_pid_a2(r: &PidA2Result) -> String {
    let mut out = format!(
        "domain {}, family {}, element ({})\n",
        r.domain, r.family, r.element
    );
    match (&r.uniform_exponent, &r.refusal) {
        (Some(n), _) => out.push_str(&format!("  uniform exponent: n = {n}\n")),
        (None, Some(refusal)) => {
            out.push_str("  no uniform exponent exists\n");
            out.push_str(&format!(
                "  counterexample rule: {}\n  certificate: {}\n",
                refusal.counterexample_rule, refusal.certificate
            ));
        }
        (None, None) => out.push_str("  no uniform exponent and no certificate (bug)\n"),
    }
    out
}

/// Options for the corpus suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub max_order: usize,
    pub star_cap: usize,
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: DEFAULT_MAX_ORDER,
            star_cap: DEFAULT_STAR_CAP,
            jobs: 1,
        }
    }
}

/// Per-ring record in the suite report.
#[derive(Serialize)]
pub struct RingSuiteRecord {
    pub ring: String,
    pub order: usize,
    pub axioms_ok: bool,
    pub axiom_violation: Option<AxiomViolation>,
    /// Exhaustive vs certified star agreement (None when the lattice is
    /// larger than the exhaustive cap).
    pub methods_agree: Option<bool>,
    pub fingerprint: Option<Fingerprint>,
    pub battery: Option<TheoremReport>,
}

/// The negative suite over the symbolic domains.
#[derive(Serialize)]
pub struct NegativeSuite {
    pub integers: PidTheorem8Report,
    pub poly_f2: PidTheorem8Report,
    pub all_primes_star: PidStarResult,
    pub prime_powers_a2: PidA2Result,
}

#[derive(Serialize)]
pub struct SuiteSummary {
    pub rings: usize,
    pub axiom_failures: usize,
    pub method_disagreements: usize,
    pub refuted_statements: usize,
    pub negative_suite_consistent: bool,
    pub consistent: bool,
}

/// The complete suite report; field order is the published JSON schema.
#[derive(Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub max_order: usize,
    pub star_cap: usize,
    pub summary: SuiteSummary,
    pub rings: Vec<RingSuiteRecord>,
    pub negative: NegativeSuite,
}

/// A finished suite run: the structured report plus its two deterministic
/// renderings and the process exit code.
pub struct SuiteRun {
    pub report: SuiteReport,
    pub json: String,
    pub text: String,
    pub exit_code: i32,
}

fn evaluate_ring(ring: &Ring, opts: &SuiteOptions) -> Result<RingSuiteRecord> {
    let axioms = validate_axioms(ring);
    if !axioms.is_ok() {
        return Ok(RingSuiteRecord {
            ring: ring.label().to_string(),
            order: ring.order(),
            axioms_ok: false,
            axiom_violation: axioms.violation,
            methods_agree: None,
            fingerprint: None,
            battery: None,
        });
    }
    let battery_opts = BatteryOptions {
        star_cap: opts.star_cap,
        ..BatteryOptions::default()
    };
    let battery = theorem_battery(ring, &battery_opts)?;
    let lattice = enumerate_ideals(ring, battery_opts.lattice_cap)?;
    let methods_agree = if lattice.len() <= opts.star_cap {
        let exhaustive = star_check_exhaustive(&lattice);
        let certified = star_check_certified(&lattice);
        Some(exhaustive.satisfied == certified.satisfied)
    } else {
        None
    };
    Ok(RingSuiteRecord {
        ring: ring.label().to_string(),
        order: ring.order(),
        axioms_ok: true,
        axiom_violation: None,
        methods_agree,
        fingerprint: Some(fingerprint(ring)?),
        battery: Some(battery),
    })
}

/// Runs the suite over an explicit corpus. Rings are evaluated in a worker
/// pool of `opts.jobs` threads; records are merged in corpus order, so the
/// output is identical for every worker count.
pub fn run_suite_with(corpus: &[Ring], opts: &SuiteOptions) -> Result<SuiteRun> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistency(format!("worker pool: {e}")))?;
    let records: Vec<RingSuiteRecord> =
        pool.install(|| corpus.par_iter().map(|r| evaluate_ring(r, opts)).collect::<Result<_>>())?;

    let negative = NegativeSuite {
        integers: pid::theorem8_witnesses(PidDomain::Integers)?,
        poly_f2: pid::theorem8_witnesses(PidDomain::PolyOver(2))?,
        all_primes_star: pid::star_check(&pid::FamilySpec::all_primes(PidDomain::Integers))?,
        prime_powers_a2: pid::a2_check(
            &pid::FamilySpec::prime_powers(pid::PidIdeal::integer(2))?,
            &pid::PidIdeal::integer(2),
        )?,
    };

    let axiom_failures = records.iter().filter(|r| !r.axioms_ok).count();
    let method_disagreements = records
        .iter()
        .filter(|r| r.methods_agree == Some(false))
        .count();
    let refuted_statements: usize = records
        .iter()
        .filter_map(|r| r.battery.as_ref())
        .map(|b| b.refutations().count())
        .sum();
    let negative_ok = negative.integers.consistent
        && negative.poly_f2.consistent
        && !negative.all_primes_star.satisfied
        && negative.prime_powers_a2.refusal.is_some();
    let consistent = axiom_failures == 0
        && method_disagreements == 0
        && refuted_statements == 0
        && negative_ok;

    let report = SuiteReport {
        schema_version: SCHEMA_VERSION,
        max_order: opts.max_order,
        star_cap: opts.star_cap,
        summary: SuiteSummary {
            rings: records.len(),
            axiom_failures,
            method_disagreements,
            refuted_statements,
            negative_suite_consistent: negative_ok,
            consistent,
        },
        rings: records,
        negative,
    };
    let json = format!(
        "{}\n",
        serde_json::to_string_pretty(&report).expect("suite report serializes")
    );
    let text = render_suite_text(&report);
    Ok(SuiteRun {
        exit_code: if report.summary.consistent { 0 } else { 1 },
        json,
        text,
        report,
    })
}

/// Builds the default corpus for `opts.max_order` and runs the suite on it.
pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteRun> {
    let corpus = build_corpus(opts.max_order)?;
    run_suite_with(&corpus, opts)
}

/// Writes `<base>.json` and `<base>.txt`.
pub fn write_reports(base: &Path, run: &SuiteRun) -> Result<(PathBuf, PathBuf)> {
    let json_path = base.with_extension("json");
    let text_path = base.with_extension("txt");
    std::fs::write(&json_path, &run.json)?;
    std::fs::write(&text_path, &run.text)?;
    Ok((json_path, text_path))
}

fn render_suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "star suite report (schema {})\n",
        report.schema_version
    ));
    out.push_str(&format!(
        "corpus: {} rings, max order {}, star cap {}\n",
        report.summary.rings, report.max_order, report.star_cap
    ));
    out.push_str(&format!(
        "axiom check: {}/{} passed\n",
        report.summary.rings - report.summary.axiom_failures,
        report.summary.rings
    ));
    for r in report.rings.iter().filter(|r| !r.axioms_ok) {
        let v = r.axiom_violation.as_ref().expect("failure carries witness");
        out.push_str(&format!(
            "  AXIOM FAILURE {}: {} at witness {:?}\n",
            r.ring, v.law, v.witness
        ));
    }
    let checked = report
        .rings
        .iter()
        .filter(|r| r.methods_agree.is_some())
        .count();
    out.push_str(&format!(
        "star methods: {}/{checked} rings agree (exhaustive vs certified)\n",
        checked - report.summary.method_disagreements
    ));

    // roll up the statement catalog across the corpus
    let ids: Vec<&'static str> = report
        .rings
        .iter()
        .find_map(|r| r.battery.as_ref())
        .map(|b| b.statements.iter().map(|s| s.id).collect())
        .unwrap_or_default();
    out.push_str("statements:\n");
    for id in ids {
        let mut consistent = 0usize;
        let mut refuted = 0usize;
        let mut vacuous = 0usize;
        for battery in report.rings.iter().filter_map(|r| r.battery.as_ref()) {
            if let Some(s) = battery.statements.iter().find(|s| s.id == id) {
                match s.verdict {
                    Verdict::Consistent => consistent += 1,
                    Verdict::Refuted => refuted += 1,
                }
                if s.vacuous {
                    vacuous += 1;
                }
            }
        }
        out.push_str(&format!(
            "  {id:<5} consistent {consistent:>4}  refuted {refuted:>3}  vacuous {vacuous:>4}\n"
        ));
    }
    for battery in report.rings.iter().filter_map(|r| r.battery.as_ref()) {
        for s in battery.refutations() {
            out.push_str(&format!(
                "  REFUTED {} on {}: {}\n",
                s.id, battery.ring, s.detail
            ));
        }
    }

    out.push_str("negative suite:\n");
    for (name, t8) in [
        ("Z", &report.negative.integers),
        ("F2[x]", &report.negative.poly_f2),
    ] {
        let chain: Vec<String> = t8
            .dcc_radical_failure_chain
            .iter()
            .map(|i| format!("({i})"))
            .collect();
        out.push_str(&format!(
            "  {name}: all five conditions false, consistent: {}; d.c.c. failure chain {}\n",
            t8.consistent,
            chain.join(" > ")
        ));
    }
    let star = &report.negative.all_primes_star;
    out.push_str(&format!(
        "  Z all-primes star: {}; subfamily intersection ({}) vs radical ({})\n",
        if star.satisfied { "satisfied" } else { "failed" },
        star.intersection_of_radicals,
        star.radical_of_intersection
    ));
    let a2 = &report.negative.prime_powers_a2;
    out.push_str(&format!(
        "  Z prime-powers(2) uniform exponent for 2: {}\n",
        match (&a2.uniform_exponent, &a2.refusal) {
            (Some(n), _) => format!("n = {n}"),
            (None, Some(r)) => format!("refused ({})", r.counterexample_rule),
            (None, None) => "missing".into(),
        }
    ));

    out.push_str(&format!(
        "verdict: {}\n",
        if report.summary.consistent {
            "CONSISTENT"
        } else {
            "REFUTED"
        }
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{residue_ring, FiniteRing};

    fn run_capture(args: &[&str]) -> i32 {
        run(std::iter::once("star-rings").chain(args.iter().copied()))
    }

    #[test]
    fn parse_command_examples() {
        assert_eq!(run_capture(&["star-check", "Z/12"]), 0);
        assert_eq!(run_capture(&["radical", "Z/12", "--ideal", "4"]), 0);
        assert_eq!(
            run_capture(&["pid-star", "--domain", "Z", "--family", "all-primes"]),
            0
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["unknown-verb"]), 2);
        assert_eq!(run_capture(&["star-check"]), 2); // missing ring
        assert_eq!(run_capture(&["star-check", "Z/12", "--bogus"]), 2);
        assert_eq!(run_capture(&["info", "Q/4"]), 2); // parse error
    }

    #[test]
    fn resource_cap_exits_three() {
        assert_eq!(run_capture(&["info", "Z/10000"]), 3);
    }

    #[test]
    fn small_suite_is_consistent() {
        let opts = SuiteOptions {
            max_order: 8,
            star_cap: DEFAULT_STAR_CAP,
            jobs: 1,
        };
        let run = run_suite(&opts).unwrap();
        assert_eq!(run.exit_code, 0);
        assert!(run.report.summary.consistent);
        assert!(run.report.summary.rings >= 10);
        assert!(run.text.contains("verdict: CONSISTENT"));
    }

    #[test]
    fn suite_output_is_deterministic_across_job_counts() {
        let base = SuiteOptions {
            max_order: 8,
            star_cap: DEFAULT_STAR_CAP,
            jobs: 1,
        };
        let with_jobs = SuiteOptions { jobs: 4, ..base };
        let a = run_suite(&base).unwrap();
        let b = run_suite(&with_jobs).unwrap();
        assert_eq!(a.json, b.json);
        assert_eq!(a.text, b.text);
    }

    #[test]
    fn corrupted_ring_fails_the_suite_with_axiom_witness() {
        let good = residue_ring(6).unwrap();
        let n = 6;
        let add: Vec<u16> = (0..n * n).map(|i| good.add(i / n, i % n) as u16).collect();
        let mut mul: Vec<u16> = (0..n * n).map(|i| good.mul(i / n, i % n) as u16).collect();
        mul[2 * n + 3] = 1; // breaks commutativity at (2, 3)
        let bad = FiniteRing::from_tables(n, 0, 1, add, mul, "faulty Z/6");
        let corpus = vec![residue_ring(4).unwrap(), bad];
        let run = run_suite_with(&corpus, &SuiteOptions::default()).unwrap();
        assert_eq!(run.exit_code, 1);
        assert_eq!(run.report.summary.axiom_failures, 1);
        assert!(run.text.contains("AXIOM FAILURE faulty Z/6"));
        assert!(run.text.contains("verdict: REFUTED"));
    }
}
