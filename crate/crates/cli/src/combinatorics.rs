//! `macaulay`, `osequence` and `gorenstein` subcommands.

use std::fmt::Write;
use std::path::Path;

use gorbetti_core::binomial::{first_o_sequence_violation, grouped_rep, macaulay_bound, macaulay_rep};
use gorbetti_core::hvector::{
    certificate, enumerate_symmetric_osequences, extremal_hvector, extremal_multiplicity, forbidden_nu,
    growth_monotonic_scan, nu0, profile, pure_resolution_betti, EnumerationLimits,
};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::args::{GorensteinCmd, MacaulayCmd, OsequenceCmd};
use crate::report::{join, num, nums, parse_big, CliError, CliResult, Report};

fn positive(h: &BigUint, j: u32) -> CliResult<()> {
    if h.is_zero() || j == 0 {
        return Err(CliError::Usage("H and J must both be positive".into()));
    }
    Ok(())
}

pub fn macaulay(cmd: MacaulayCmd) -> CliResult<Report> {
    match cmd {
        MacaulayCmd::Rep { h, j } => {
            let h = parse_big(&h, "H")?;
            positive(&h, j)?;
            let rep = macaulay_rep(&h, j);
            let grouped = grouped_rep(&rep);
            let groups = grouped
                .groups
                .iter()
                .map(|g| format!("(k={}, j={}, i={})", g.k, g.j, g.i));
            let text = format!("{rep}\ngroups: {}\n", groups.collect::<Vec<_>>().join(" "));
            let json = json!({
                "h": num(&h),
                "j": j,
                "terms": rep.terms.iter().map(|t| json!({"top": num(&t.top), "index": t.index})).collect::<Vec<_>>(),
                "groups": grouped.groups.iter().map(|g| json!({"k": num(&g.k), "j": g.j, "i": g.i})).collect::<Vec<_>>(),
                "bound": num(&rep.shifted_sum()),
            });
            Ok(Report::new(text, json))
        }
        MacaulayCmd::Bound { h, j } => {
            let h = parse_big(&h, "H")?;
            if j == 0 {
                return Err(CliError::Usage("J must be positive".into()));
            }
            let b = macaulay_bound(&h, j);
            Ok(Report::new(format!("{b}\n"), json!({"h": num(&h), "j": j, "bound": num(&b)})))
        }
    }
}

pub fn osequence(cmd: OsequenceCmd) -> CliResult<Report> {
    let OsequenceCmd::Check { values } = cmd;
    let raw = match values.as_slice() {
        [one] if Path::new(one).is_file() => {
            std::fs::read_to_string(one).map_err(|e| CliError::Io(one.into(), e))?
        }
        _ => values.join(" "),
    };
    let h: Vec<BigUint> = raw
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| parse_big(s, "sequence entry"))
        .collect::<CliResult<_>>()?;
    let violation = first_o_sequence_violation(&h);
    let text = match violation {
        None => "O-sequence: yes\n".to_string(),
        Some(0) => "O-sequence: no (h_0 must be 1)\n".to_string(),
        Some(d) => format!(
            "O-sequence: no (h_{d} = {} exceeds the bound {} after h_{} = {})\n",
            h[d],
            macaulay_bound(&h[d - 1], d as u32 - 1),
            d - 1,
            h[d - 1]
        ),
    };
    let json = json!({
        "sequence": nums(&h),
        "is_o_sequence": violation.is_none(),
        "first_violation": violation,
    });
    Ok(Report::new(text, json))
}

fn rational(q: &num_rational::BigRational) -> String {
    q.to_string()
}

pub fn gorenstein(cmd: GorensteinCmd) -> CliResult<Report> {
    match cmd {
        GorensteinCmd::Nu0 { g, p } => {
            let n = nu0(g, p)?;
            Ok(Report::new(format!("{n}\n"), json!({"g": g, "p": p, "nu0": num(&n)})))
        }
        GorensteinCmd::Extremal { g, p } => {
            let h = extremal_hvector(g, p)?;
            let e = extremal_multiplicity(g, p)?;
            let n = nu0(g, p)?;
            let (g64, p64) = (u64::from(g), u64::from(p));
            let mut shifts = vec![0];
            shifts.extend((0..g64 - 1).map(|k| p64 + k));
            shifts.push(2 * p64 + g64 - 2);
            let betti = pure_resolution_betti(&shifts)?;
            let text = format!(
                "h-vector: {h}\nmultiplicity: {e}\nnu0: {n}\nshifts: {}\nbetti: {}\n",
                join(&shifts),
                join(&betti)
            );
            let json = json!({
                "g": g, "p": p,
                "hvector": nums(h.entries()),
                "multiplicity": num(&e),
                "nu0": num(&n),
                "shifts": shifts,
                "betti": nums(&betti),
            });
            Ok(Report::new(text, json))
        }
        GorensteinCmd::Forbidden { g, p } => {
            let r = forbidden_nu(g, p)?;
            let n = nu0(g, p)?;
            let text = format!(
                "nu0: {n}\nforbidden: {}\nnon-unimodal only: {}\n",
                join(&r.forbidden),
                join(&r.nonunimodal_required)
            );
            let json = json!({
                "g": g, "p": p,
                "nu0": num(&n),
                "forbidden": nums(&r.forbidden),
                "nonunimodal_required": nums(&r.nonunimodal_required),
            });
            Ok(Report::new(text, json))
        }
        GorensteinCmd::Enumerate {
            g,
            p,
            smax,
            node_limit,
            list,
        } => {
            let limits = EnumerationLimits {
                node_limit,
                ..Default::default()
            };
            let all = enumerate_symmetric_osequences(g, p, smax, limits)?;
            let bound = nu0(g, p)?;
            let e = extremal_multiplicity(g, p)?;
            let mut text = String::new();
            let mut vectors = Vec::new();
            let mut max_nu: Option<BigUint> = None;
            let mut min_e: Option<BigUint> = None;
            for h in &all {
                let pr = profile(h)?;
                let m = h.multiplicity();
                if list {
                    writeln!(text, "{h}  nu_p={}  e={m}", pr.nu_p).unwrap();
                }
                vectors.push(json!({"hvector": nums(h.entries()), "nu_p": num(&pr.nu_p), "multiplicity": num(&m)}));
                max_nu = Some(max_nu.map_or(pr.nu_p.clone(), |x| x.max(pr.nu_p.clone())));
                min_e = Some(min_e.map_or(m.clone(), |x| x.min(m)));
            }
            let ok = max_nu.as_ref().is_none_or(|m| *m <= bound);
            let show = |x: &Option<BigUint>| x.as_ref().map_or("-".to_string(), ToString::to_string);
            writeln!(
                text,
                "count: {}\nmax nu_p: {} (nu0 = {bound})\nmin multiplicity: {} (e(g,p) = {e})",
                all.len(),
                show(&max_nu),
                show(&min_e)
            )
            .unwrap();
            let json = json!({
                "g": g, "p": p, "smax": smax,
                "count": all.len(),
                "nu0": num(&bound),
                "max_nu_p": max_nu.as_ref().map(num),
                "min_multiplicity": min_e.as_ref().map(num),
                "extremal_multiplicity": num(&e),
                "bound_holds": ok,
                "vectors": vectors,
            });
            Ok(Report::new(text, json).with_ok(ok))
        }
        GorensteinCmd::Certificate { g, p, j, h } => {
            let h = parse_big(&h, "H")?;
            let c = certificate(g, p, j, &h)?;
            let mut text = String::new();
            if let Some(gr) = &c.grouped {
                writeln!(text, "{}", gr.source).unwrap();
            }
            if c.trivial {
                writeln!(text, "h <= j: every term is C(l,l) and the bound is h").unwrap();
            } else {
                writeln!(text, "F: {}", join(c.f_values.iter().map(rational))).unwrap();
                for (s, (a, b)) in c.a_b_values.iter().enumerate() {
                    writeln!(text, "A_{s} = {}, B_{s} = {}", rational(a), rational(b)).unwrap();
                }
            }
            writeln!(
                text,
                "growth bound: {}, target: {}\nchain holds: {}\nin theorem range: {}",
                c.growth_bound, c.target, c.verdict, c.in_certified_range
            )
            .unwrap();
            let json = json!({
                "g": g, "p": p, "j": j, "h": num(&h),
                "trivial": c.trivial,
                "offset_within_bound": c.offset_within_bound,
                "ratio_exceeds": c.ratio_exceeds,
                "f_values": c.f_values.iter().map(rational).collect::<Vec<_>>(),
                "a_b_values": c.a_b_values.iter().map(|(a, b)| json!([rational(a), rational(b)])).collect::<Vec<_>>(),
                "growth_bound": num(&c.growth_bound),
                "target": num(&c.target),
                "in_certified_range": c.in_certified_range,
                "verdict": c.verdict,
            });
            Ok(Report::new(text, json).with_ok(c.verdict))
        }
        GorensteinCmd::Monotonic { hmax, jmin, jmax } => {
            if jmin == 0 || jmin > jmax {
                return Err(CliError::Usage("need 1 <= JMIN <= JMAX".into()));
            }
            let v = growth_monotonic_scan(hmax, jmin, jmax);
            let (text, json) = match &v {
                None => (
                    format!("non-increasing for h <= {hmax}, {jmin} <= j <= {jmax}\n"),
                    json!({"hmax": hmax, "jmin": jmin, "jmax": jmax, "violation": Value::Null}),
                ),
                Some(v) => (
                    format!(
                        "increase: bound({h}, {j}) = {a} < bound({h}, {k}) = {b}\n",
                        h = v.h,
                        j = v.j,
                        a = v.bound_j,
                        k = v.j + 1,
                        b = v.bound_next
                    ),
                    json!({"hmax": hmax, "jmin": jmin, "jmax": jmax,
                           "violation": {"h": v.h, "j": v.j, "bound_j": num(&v.bound_j), "bound_next": num(&v.bound_next)}}),
                ),
            };
            Ok(Report::new(text, json).with_ok(v.is_none()))
        }
    }
}
