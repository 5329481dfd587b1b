//! `ideal`, `pfaffian` and `paper` subcommands.

use std::collections::BTreeMap;
use std::fmt::Write;

use gorbetti_core::hvector::{extremal_multiplicity, nu0};
use gorbetti_core::pfaffian::{
    codim3_experiment, default_profiles, maximal_pfaffians, random_alternating, DegreeProfile, TrialStatus,
};
use gorbetti_core::polyring::{
    artinian_check, colon_degreewise, degree_basis, hilbert_function, minimal_generators_by_degree,
    parse_ideal_file, parse_polynomial, Artinian, Field, IdealBasis, IdealFile, PrimeField, Rationals,
};
use gorbetti_core::reference::{
    EXAMPLE1_BETTI_TOTALS, EXAMPLE1_COMPLETE_INTERSECTION, EXAMPLE1_DIAGRAM, EXAMPLE1_DIVISOR, EXAMPLE1_HVECTOR,
    EXAMPLE1_IDEAL, EXAMPLE1_MINGENS,
};
use gorbetti_core::resolution::{
    compare_with_extremal, koszul_betti, koszul_betti_auto, structural_checks, BettiTable,
};
use serde_json::{json, Value};

use crate::args::{IdealCmd, IdealInput, PaperCmd, PfaffianCmd};
use crate::report::{join, CliError, CliResult, Report};

enum Choice {
    Q,
    P(PrimeField),
}

fn field_label<F: Field>(f: &F) -> String {
    match f.characteristic() {
        0 => "Q".into(),
        q => format!("F_{q}"),
    }
}

fn choose(spec: Option<&str>, header: u64) -> CliResult<Choice> {
    let q = match spec {
        None => header,
        Some("q" | "Q" | "rationals") => 0,
        Some(s) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("--char must be a prime or 0, got '{s}'")))?,
    };
    Ok(match q {
        0 => Choice::Q,
        q => Choice::P(PrimeField::new(q)?),
    })
}

fn load(input: &IdealInput) -> CliResult<IdealFile> {
    let text = std::fs::read_to_string(&input.file).map_err(|e| CliError::Io(input.file.clone(), e))?;
    Ok(parse_ideal_file(&text)?)
}

fn socle<F: Field>(ideal: &IdealBasis<F>, cap: u32) -> CliResult<u32> {
    match artinian_check(ideal, cap) {
        Artinian::Yes { socle_degree } => Ok(socle_degree),
        Artinian::Inconclusive => Err(gorbetti_core::Error::NotArtinian(cap).into()),
    }
}

pub fn ideal(cmd: IdealCmd) -> CliResult<Report> {
    let input = match &cmd {
        IdealCmd::Hf { input, .. }
        | IdealCmd::Betti { input, .. }
        | IdealCmd::Mingens { input, .. }
        | IdealCmd::Colon { input, .. } => input,
    };
    let file = load(input)?;
    match choose(input.characteristic.as_deref(), file.characteristic)? {
        Choice::Q => ideal_over(&cmd, &file, Rationals),
        Choice::P(f) => ideal_over(&cmd, &file, f),
    }
}

fn betti_text(t: &BettiTable) -> String {
    format!("{}totals: {}\n", t.render_diagram(), join(t.totals()))
}

fn ideal_over<F: Field>(cmd: &IdealCmd, file: &IdealFile, field: F) -> CliResult<Report> {
    let ideal = file.ideal(&field)?;
    let label = field_label(&field);
    match cmd {
        IdealCmd::Hf { input, dmax } => {
            let d = match dmax {
                Some(d) => *d,
                None => socle(&ideal, input.search_cap)? + 1,
            };
            let hf = hilbert_function(&ideal, d);
            Ok(Report::new(
                format!("{}\n", join(&hf)),
                json!({"field": label, "nvars": file.nvars, "hilbert_function": hf}),
            ))
        }
        IdealCmd::Betti { input, jmax, gorenstein } => {
            let t = match jmax {
                Some(j) => koszul_betti(&ideal, *j)?,
                None => koszul_betti_auto(&ideal, input.search_cap)?,
            };
            let checks = structural_checks(&t, *gorenstein);
            let mut text = betti_text(&t);
            for f in &checks.failures {
                writeln!(text, "check failed: {f}").unwrap();
            }
            let json = json!({"field": label, "table": t.to_json(), "checks": checks});
            Ok(Report::new(text, json).with_ok(checks.passed()))
        }
        IdealCmd::Mingens { input, dmax } => {
            let d = match dmax {
                Some(d) => *d,
                None => socle(&ideal, input.search_cap)? + 1,
            };
            let m = minimal_generators_by_degree(&ideal, d);
            let total: u64 = m.values().sum();
            let text = format!(
                "{}\ntotal: {total}\n",
                m.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
            );
            let by_degree: Vec<Value> = m.iter().map(|(d, c)| json!({"degree": d, "count": c})).collect();
            Ok(Report::new(text, json!({"field": label, "by_degree": by_degree, "total": total})))
        }
        IdealCmd::Colon { by, dmax, .. } => {
            let f = parse_polynomial(by, file.nvars)?.to_field(&field);
            let mut text = String::from("degree  dim(I:f)  dim quotient\n");
            let mut rows = Vec::new();
            for d in 0..=*dmax {
                let piece = colon_degreewise(&ideal, &f, d)?;
                let (dim, quot) = (piece.echelon.rank(), piece.quotient_dim());
                writeln!(text, "{d:>6}  {dim:>8}  {quot:>12}").unwrap();
                rows.push(json!({"degree": d, "dim": dim, "quotient_dim": quot}));
            }
            Ok(Report::new(text, json!({"field": label, "divisor": by, "degrees": rows})))
        }
    }
}

fn parse_profile(s: &str) -> CliResult<DegreeProfile> {
    let degrees = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("profile must be comma-separated degrees, got '{s}'")))?;
    Ok(DegreeProfile::new(degrees)?)
}

pub fn pfaffian(cmd: PfaffianCmd, modulus: u64) -> CliResult<Report> {
    let field = PrimeField::new(modulus)?;
    match cmd {
        PfaffianCmd::Demo { nu, seed } => {
            let profile = DegreeProfile::linear(nu)?;
            let m = random_alternating(&field, &profile, seed);
            let pf = maximal_pfaffians(&m)?;
            let ideal = IdealBasis::new(field, m.nvars(), pf.clone())?;
            let mut text = format!("random {nu}x{nu} alternating matrix with linear entries over F_{modulus}\n");
            let mut upper = Vec::new();
            for i in 0..nu {
                for j in i + 1..nu {
                    writeln!(text, "y{}{} = {}", i + 1, j + 1, m.entry(i, j)).unwrap();
                    upper.push(json!({"i": i + 1, "j": j + 1, "entry": m.entry(i, j).to_string()}));
                }
            }
            for (t, f) in pf.iter().enumerate() {
                writeln!(text, "f{} = {f}", t + 1).unwrap();
            }
            let t = koszul_betti_auto(&ideal, profile.s())?;
            let mingens = minimal_generators_by_degree(&ideal, profile.s());
            let p = mingens.keys().next().copied().unwrap_or(0);
            let nu_i: u64 = mingens.values().sum();
            let totals = t.totals();
            let bound = 2 * u64::from(p) + 1;
            let ok = nu_i <= bound && totals[2] <= bound && totals[3] == 1;
            text.push_str(&betti_text(&t));
            writeln!(text, "p = {p}, nu(I) = {nu_i}, 2p + 1 = {bound}").unwrap();
            let json = json!({
                "modulus": modulus, "seed": seed, "nu": nu,
                "entries": upper,
                "pfaffians": pf.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "p": p, "generators": nu_i,
                "table": t.to_json(),
                "bound_holds": ok,
            });
            Ok(Report::new(text, json).with_ok(ok))
        }
        PfaffianCmd::Experiment { trials, seed, profiles } => {
            let profiles = if profiles.is_empty() {
                default_profiles()
            } else {
                profiles.iter().map(|s| parse_profile(s)).collect::<CliResult<_>>()?
            };
            let report = codim3_experiment(&field, trials, &profiles, seed)?;
            let mut text = String::from("trial  profile              p  nu  totals       status\n");
            for r in &report.trials {
                let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
                writeln!(
                    text,
                    "{:>5}  {:<19}  {:>1}  {:>2}  {:<11}  {}{}",
                    r.index,
                    r.profile.degrees().iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                    opt(r.p.map(|p| p.to_string())),
                    opt(r.nu.map(|n| n.to_string())),
                    opt(r.betti_totals.as_ref().map(join)),
                    match r.status {
                        TrialStatus::Ok => "ok",
                        TrialStatus::Skipped => "skipped",
                        TrialStatus::Violation => "VIOLATION",
                    },
                    r.detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default()
                )
                .unwrap();
            }
            let s = &report.summary;
            writeln!(
                text,
                "trials {}, completed {}, skipped {}, violations {}, extremal {}",
                s.trials, s.completed, s.skipped, s.violations, s.extremal
            )
            .unwrap();
            let ok = s.violations == 0;
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Report::new(text, json).with_ok(ok))
        }
    }
}

struct Example1Run {
    hf: Vec<u64>,
    mingens: BTreeMap<u32, u64>,
    table: BettiTable,
}

fn example1_over<F: Field>(field: F) -> CliResult<Example1Run> {
    let ideal = parse_ideal_file(EXAMPLE1_IDEAL)?.ideal(&field)?;
    let sigma = socle(&ideal, 16)?;
    let mut hf = hilbert_function(&ideal, sigma + 1);
    hf.pop();
    Ok(Example1Run {
        hf,
        mingens: minimal_generators_by_degree(&ideal, sigma + 1),
        table: koszul_betti(&ideal, sigma + ideal.nvars() as u32)?,
    })
}

fn colon_matches() -> CliResult<bool> {
    let q = Rationals;
    let ci = parse_ideal_file(EXAMPLE1_COMPLETE_INTERSECTION)?.ideal(&q)?;
    let f = parse_polynomial(EXAMPLE1_DIVISOR, 4)?.to_field(&q);
    let ideal = parse_ideal_file(EXAMPLE1_IDEAL)?.ideal(&q)?;
    for d in 0..=8 {
        if colon_degreewise(&ci, &f, d)?.echelon != degree_basis(&ideal, d).echelon {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn paper(cmd: PaperCmd, modulus: u64) -> CliResult<Report> {
    let PaperCmd::Example1 = cmd;
    let prime = PrimeField::new(modulus)?;
    let q = example1_over(Rationals)?;
    let fp = example1_over(prime)?;
    let e: u64 = q.hf.iter().sum();
    let p = q.hf.iter().enumerate().position(|(d, &h)| {
        // first degree where the quotient is smaller than the ring
        let full = gorbetti_core::binomial::binom(3 + d as u64, 3);
        full > h.into()
    });
    let p = p.unwrap_or(0) as u32;
    let nu_p = q.mingens.get(&p).copied().unwrap_or(0);
    let n0 = nu0(4, p)?;
    let e0 = extremal_multiplicity(4, p)?;
    let checks = structural_checks(&q.table, true);
    let comparison = compare_with_extremal(&q.table, p)?;
    let want_mingens: BTreeMap<u32, u64> = EXAMPLE1_MINGENS.into_iter().collect();
    let golden = [
        ("h-vector", q.hf == EXAMPLE1_HVECTOR),
        ("multiplicity", e == 54),
        ("minimal generators", q.mingens == want_mingens),
        ("betti totals", q.table.totals() == EXAMPLE1_BETTI_TOTALS),
        ("diagram", q.table.render_diagram() == EXAMPLE1_DIAGRAM),
        ("gorenstein checks", checks.passed()),
        ("colon identity", colon_matches()?),
        ("fields agree", q.hf == fp.hf && q.mingens == fp.mingens && q.table == fp.table),
    ];
    let ok = golden.iter().all(|(_, pass)| *pass);
    let mut text = String::new();
    writeln!(text, "h-vector: {}", join(&q.hf)).unwrap();
    writeln!(text, "e = {e}").unwrap();
    writeln!(text, "p = {p}, nu_{p} = {nu_p}; nu0(4,{p}) = {n0}, e(4,{p}) = {e0}").unwrap();
    writeln!(
        text,
        "minimal generators: {}",
        q.mingens.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
    )
    .unwrap();
    writeln!(text, "betti totals: {}", join(q.table.totals())).unwrap();
    text.push_str(&q.table.render_diagram());
    writeln!(
        text,
        "extremal totals: {} (beta_i <= extremal: {})",
        join(comparison.iter().map(|c| c.extremal)),
        join(comparison.iter().map(|c| if c.at_most { "yes" } else { "no" }))
    )
    .unwrap();
    for (name, pass) in &golden {
        writeln!(text, "{name}: {}", if *pass { "ok" } else { "MISMATCH" }).unwrap();
    }
    let json = json!({
        "hvector": q.hf,
        "multiplicity": e,
        "p": p,
        "nu_p": nu_p,
        "nu0": crate::report::num(&n0),
        "extremal_multiplicity": crate::report::num(&e0),
        "mingens": q.mingens.iter().map(|(d, c)| json!({"degree": d, "count": c})).collect::<Vec<_>>(),
        "table": q.table.to_json(),
        "diagram": q.table.render_diagram(),
        "extremal_comparison": comparison,
        "modulus": modulus,
        "checks": golden.iter().map(|(n, pass)| json!({"name": n, "pass": pass})).collect::<Vec<_>>(),
        "ok": ok,
    });
    Ok(Report::new(text, json).with_ok(ok))
}
