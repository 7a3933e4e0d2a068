use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use seb_core::bijections::{apply_relabel, build_relabel, f_inverse, f_map, verify_bijection_theorem, verify_relabel_theorem};
use seb_core::families::{build_little_p_family, build_p_family};
use seb_core::perm::{oracle_b_set_table, oracle_big_b_table, PermError, SignedPermutation, Subset, TypeAPermutation};
use seb_core::roots::{is_interleaver, isolate_roots};
use seb_core::suites::{run_suite, Suite};
use seb_core::{CheckReport, EulerianTables, IntPolynomial};

use crate::render::render_table;
use crate::{BijectionArgs, BijectionMap, Command, OracleArgs, RootsArgs, RootsFamily, TableArgs, VerifyArgs};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

/// Failures printed per report before the rest are summarized.
const SHOWN_FAILURES: usize = 20;

pub fn run(command: Command) -> ExitCode {
    let code = match command {
        Command::Table(args) => table(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
        Command::Bijection(args) => bijection(args),
        Command::Roots(args) => roots(args),
    };
    ExitCode::from(code)
}

fn usage(message: impl Display) -> u8 {
    eprintln!("error: {message}");
    USAGE
}

fn table(args: TableArgs) -> u8 {
    print!("{}", render_table(args.family, args.n, args.format));
    PASS
}

fn print_report(report: &CheckReport) {
    println!("{report}");
    for failure in report.failures.iter().take(SHOWN_FAILURES) {
        println!("  {failure}");
    }
    if report.failures.len() > SHOWN_FAILURES {
        println!("  ... {} more", report.failures.len() - SHOWN_FAILURES);
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
}

fn verify(args: VerifyArgs) -> u8 {
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let started = Instant::now();
    let reports = match run_suite(suite, args.max_n, args.parallel) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    for report in &reports {
        print_report(report);
    }
    let verdict = if failures == 0 { "PASS" } else { "FAIL" };
    println!("{verdict} suite {suite}: {checks} checks, {failures} failures");
    eprintln!("elapsed: {:.2?}", started.elapsed());
    if failures == 0 {
        PASS
    } else {
        FAIL
    }
}

fn parse_list(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| format!("bad entry '{s}': {e}")))
        .collect()
}

fn parse_subset(n: usize, text: &str) -> Result<Subset, String> {
    let elements = parse_list(text)?
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| format!("bad subset element {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Subset::from_elements(n, &elements).map_err(|e| e.to_string())
}

fn parse_signed(text: &str) -> Result<SignedPermutation, String> {
    let values = parse_list(text)?
        .into_iter()
        .map(|e| i32::try_from(e).map_err(|_| format!("entry {e} out of range")))
        .collect::<Result<Vec<_>, _>>()?;
    let result = if values.first() == Some(&0) {
        SignedPermutation::from_sequence(&values)
    } else {
        SignedPermutation::new(&values)
    };
    result.map_err(|e| e.to_string())
}

fn parse_unsigned(text: &str) -> Result<TypeAPermutation, String> {
    let values = parse_list(text)?
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| format!("entry {e} is not positive")))
        .collect::<Result<Vec<_>, _>>()?;
    TypeAPermutation::new(values).map_err(|e| e.to_string())
}

fn perm_error(e: PermError) -> u8 {
    usage(e)
}

fn oracle(args: OracleArgs) -> u8 {
    let n = args.n;
    let in_range = |i: i64| usize::try_from(i).ok().filter(|&i| i <= n);
    if let Some(set_text) = &args.set {
        let set = match parse_subset(n, set_text) {
            Ok(s) => s,
            Err(e) => return usage(e),
        };
        let counts = match oracle_b_set_table(n) {
            Ok(c) => c,
            Err(e) => return perm_error(e),
        };
        let count_for = |k: usize| counts[k][set.bits() as usize];
        match args.k {
            Some(k) => println!("{}", in_range(k).map_or(0, count_for)),
            None => (0..=n).for_each(|k| println!("{k}\t{}", count_for(k))),
        }
        return PASS;
    }
    let table = match oracle_big_b_table(n) {
        Ok(t) => t,
        Err(e) => return perm_error(e),
    };
    let cell = |k: i64, j: i64| match (in_range(k), in_range(j)) {
        (Some(k), Some(j)) => table[k][j].to_string(),
        _ => "0".to_string(),
    };
    match (args.k, args.j) {
        (Some(k), Some(j)) => println!("{}", cell(k, j)),
        (Some(k), None) => {
            let row: Vec<String> = (0..=n as i64).map(|j| cell(k, j)).collect();
            println!("{}", row.join("\t"));
        }
        (None, Some(j)) => (0..=n as i64).for_each(|k| println!("{}", cell(k, j))),
        (None, None) => {
            for row in &table {
                let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{}", row.join("\t"));
            }
        }
    }
    PASS
}

fn finish_report(report: Result<CheckReport, impl Display>) -> u8 {
    match report {
        Ok(r) => {
            print_report(&r);
            if r.passed() {
                PASS
            } else {
                FAIL
            }
        }
        Err(e) => usage(e),
    }
}

fn describe(label: &str, sigma: &SignedPermutation) {
    println!("{label} = {sigma}  des={} neg={} negative set {}", sigma.des(), sigma.neg(), sigma.negative_set());
}

fn bijection(args: BijectionArgs) -> u8 {
    match args.map {
        BijectionMap::Fn => {
            if let Some(n) = args.verify {
                return finish_report(verify_bijection_theorem(&EulerianTables::new(n), n));
            }
            if let Some(text) = &args.inverse {
                let tau = match parse_signed(text) {
                    Ok(t) => t,
                    Err(e) => return usage(e),
                };
                describe("tau", &tau);
                return match f_inverse(&tau) {
                    Ok(sigma) => {
                        println!("F_n^-1(tau) = {sigma}  des={}", sigma.des());
                        PASS
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        FAIL
                    }
                };
            }
            let Some(text) = &args.input else {
                return usage("fn needs a permutation, --inverse or --verify");
            };
            let sigma = match parse_unsigned(text) {
                Ok(s) if s.n() >= 1 => s,
                Ok(_) => return usage("F_n needs a permutation of order at least 1"),
                Err(e) => return usage(e),
            };
            println!("sigma = {sigma}  des={}", sigma.des());
            describe("F_n(sigma)", &f_map(&sigma));
            PASS
        }
        BijectionMap::Relabel => {
            if let Some(n) = args.verify {
                return finish_report(verify_relabel_theorem(n));
            }
            let (Some(n), Some(u), Some(v), Some(input)) = (args.n, &args.u, &args.v, &args.input) else {
                return usage("relabel needs --n, --u, --v and a signed permutation, or --verify");
            };
            let (u, v) = match (parse_subset(n, u), parse_subset(n, v)) {
                (Ok(u), Ok(v)) => (u, v),
                (Err(e), _) | (_, Err(e)) => return usage(e),
            };
            let map = match build_relabel(n, u, v) {
                Ok(m) => m,
                Err(e) => return usage(e),
            };
            let sigma = match parse_signed(input) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            println!("tau = {}", map.tau);
            describe("sigma", &sigma);
            match apply_relabel(&map, &sigma) {
                Ok(image) => {
                    describe("tau o sigma", &image);
                    PASS
                }
                Err(e) => usage(e),
            }
        }
    }
}

fn roots(args: RootsArgs) -> u8 {
    let (label, family): (&str, Vec<IntPolynomial>) = match args.family {
        RootsFamily::LittleP => ("p", build_little_p_family::<BigInt>(args.n)),
        RootsFamily::BigP => ("P", build_p_family::<BigInt>(args.n)),
    };
    let selected: Vec<usize> = match args.j {
        Some(j) if j <= args.n => vec![j],
        Some(j) => return usage(format!("j={j} outside 0..={}", args.n)),
        None => (0..=args.n).collect(),
    };
    let mut code = PASS;
    for &j in &selected {
        println!("{label}_{{{},{j}}}", args.n);
        match isolate_roots(&family[j]) {
            Ok(cert) => {
                for line in cert.to_string().lines() {
                    println!("  {line}");
                }
                println!("  real-rooted: {}", cert.is_real_rooted());
            }
            // Only the zero polynomial has no certificate; no member of these families is zero.
            Err(e) => return usage(e),
        }
    }
    if args.check_interlacing {
        println!("interleaver relation {label}_{{n,i}} << {label}_{{n,j}} (row i, column j)");
        for i in 0..=args.n {
            let mut cells = Vec::new();
            for j in 0..=args.n {
                if j <= i {
                    cells.push("-".to_string());
                    continue;
                }
                match is_interleaver(&family[i], &family[j]) {
                    Ok(v) if v.holds => cells.push("ok".to_string()),
                    Ok(v) => {
                        code = FAIL;
                        eprintln!("{v}");
                        cells.push("FAIL".to_string());
                    }
                    Err(e) => return usage(e),
                }
            }
            println!("{i}\t{}", cells.join("\t"));
        }
    }
    code
}
