use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use regmatch::asymptotics::{
    conjectured_lower_bound, fg_bound, gh, lmc_bound, ln_biguint, normalized_ln,
    perfect_matching_lower_bounds, LogValue, Normalization,
};
use regmatch::enumerate::{
    enumerate_2regular, enumerate_omega, enumerate_regular_bipartite_with_cap, scan_polynomials,
    ExtremumReport, OmegaFlavor, RegularClass,
};
use regmatch::expectations::{expected_e1, expected_e2, monte_carlo_matchings, Model};
use regmatch::families::{
    extremal_2regular, extremal_cubic, extremal_omega, identify, parse_family, Atom, FamilySpec,
    GraphMode, Side, TwoRegularFlavor,
};
use regmatch::matchpoly::{compare, matching_polynomial};
use regmatch::smallm::{a4_max, p1, phi_closed, SmallMInput};
use regmatch::{CanonicalCode, MatchingPolynomial, Multigraph};

use crate::report::{float, rational_json, Output};
use crate::{
    BoundKind, ClassArgs, Command, ExpectArg, OmegaArg, ScanTarget, TwoRegArg, VerifyCheck,
};

type Res = Result<Output, String>;
type Entries = (
    Vec<(CanonicalCode, MatchingPolynomial)>,
    BTreeMap<CanonicalCode, String>,
);

fn err(e: impl ToString) -> String {
    e.to_string()
}

impl From<OmegaArg> for OmegaFlavor {
    fn from(a: OmegaArg) -> Self {
        match a {
            OmegaArg::Simple => OmegaFlavor::Simple,
            OmegaArg::SimpleBipartite => OmegaFlavor::SimpleBipartite,
            OmegaArg::Multi => OmegaFlavor::Multi,
        }
    }
}

impl From<TwoRegArg> for TwoRegularFlavor {
    fn from(a: TwoRegArg) -> Self {
        match a {
            TwoRegArg::Simple => TwoRegularFlavor::Simple,
            TwoRegArg::SimpleBipartite => TwoRegularFlavor::SimpleBipartite,
            TwoRegArg::MultiBipartite => TwoRegularFlavor::MultiBipartite,
        }
    }
}

impl From<ClassArgs> for RegularClass {
    fn from(c: ClassArgs) -> Self {
        RegularClass {
            multi: c.multi,
            connected_only: c.connected,
        }
    }
}

pub fn run(command: &Command) -> Res {
    match command {
        Command::Poly { graph } => poly(graph),
        Command::Compare { f, g } => compare_cmd(f, g),
        Command::EnumOmega { n, k, flavor } => enum_omega(*n, *k, *flavor),
        Command::EnumRegular {
            two_n,
            r,
            class,
            graphs,
        } => enum_regular(*two_n, *r, *class, *graphs),
        Command::Scan { target } => scan(target),
        Command::Verify { check } => verify(check),
        Command::Expect {
            which,
            m,
            n,
            r,
            mc,
            seed,
        } => expect(*which, *m, *n, *r, *mc, *seed),
        Command::Bound { which, csv, steps } => bound(which, *csv, *steps),
        Command::Smallm { n, r, m, a4 } => smallm(*n, *r, *m, *a4),
    }
}

/// A family expression, or the path of a graph file.
fn load(arg: &str) -> Result<(String, Multigraph), String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        let g = Multigraph::parse_text(&text).map_err(|e| format!("{arg}: {e}"))?;
        return Ok((arg.to_string(), g));
    }
    let spec = parse_family(arg, GraphMode::Multi).map_err(|e| format!("`{arg}`: {e}"))?;
    Ok((spec.to_string(), spec.realize()))
}

fn name_of(g: &Multigraph) -> String {
    identify(g).map_or_else(|| g.canonical_code().to_hex(), |s| s.to_string())
}

fn coeffs_json(p: &MatchingPolynomial) -> Value {
    json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn poly(arg: &str) -> Res {
    let (label, g) = load(arg)?;
    let p = matching_polynomial(&g);
    let result = json!({
        "graph": label,
        "vertices": g.vertex_count(),
        "edge_slots": g.edge_slots(),
        "polynomial": p.to_string(),
        "coefficients": coeffs_json(&p),
    });
    Ok(Output::new(result, format!("{p}\n")))
}

fn compare_cmd(f: &str, g: &str) -> Res {
    let (fl, fg) = load(f)?;
    let (gl, gg) = load(g)?;
    let (fp, gp) = (matching_polynomial(&fg), matching_polynomial(&gg));
    let rel = compare(&fp, &gp);
    let result = json!({
        "f": fl,
        "g": gl,
        "f_polynomial": fp.to_string(),
        "g_polynomial": gp.to_string(),
        "relation": rel,
    });
    Ok(Output::new(result, format!("{rel}\n")))
}

fn enum_omega(n: usize, k: usize, flavor: OmegaArg) -> Res {
    let specs = enumerate_omega(n, k, flavor.into()).map_err(err)?;
    let names: Vec<String> = specs.iter().map(ToString::to_string).collect();
    let mut text = String::new();
    for s in &names {
        writeln!(text, "{s}").unwrap();
    }
    writeln!(text, "{} graphs", names.len()).unwrap();
    Ok(Output::new(
        json!({ "count": names.len(), "graphs": names }),
        text,
    ))
}

fn enum_regular(two_n: usize, r: usize, class: ClassArgs, graphs: bool) -> Res {
    let list =
        enumerate_regular_bipartite_with_cap(two_n, r, class.into(), class.cap).map_err(err)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for g in &list {
        let name = name_of(g);
        let code = g.canonical_code().to_hex();
        if name == code {
            writeln!(text, "{code}").unwrap();
        } else {
            writeln!(text, "{name}\t{code}").unwrap();
        }
        if graphs {
            text.push_str(&g.to_text());
        }
        entries.push(json!({ "name": name, "code": code, "graph": g.to_text() }));
    }
    writeln!(text, "{} graphs", list.len()).unwrap();
    Ok(Output::new(
        json!({ "count": list.len(), "graphs": entries }),
        text,
    ))
}

/// Polynomials and display names of every graph in a scan target.
fn scan_entries(target: &ScanTarget) -> Result<Entries, String> {
    let from_specs = |specs: Vec<FamilySpec>| {
        let mut names = BTreeMap::new();
        let entries = specs
            .iter()
            .map(|s| {
                let code = s.realize().canonical_code();
                names.insert(code.clone(), s.to_string());
                (code, s.polynomial())
            })
            .collect();
        (entries, names)
    };
    Ok(match target {
        ScanTarget::Omega { n, k, flavor } => {
            from_specs(enumerate_omega(*n, *k, (*flavor).into()).map_err(err)?)
        }
        ScanTarget::TwoRegular { n, flavor } => {
            let specs = enumerate_2regular(*n, (*flavor).into());
            if specs.is_empty() {
                return Err(format!(
                    "no 2-regular graphs of this flavor on {n} vertices"
                ));
            }
            from_specs(specs)
        }
        ScanTarget::Regular { two_n, r, class } => {
            let graphs =
                enumerate_regular_bipartite_with_cap(*two_n, *r, (*class).into(), class.cap)
                    .map_err(err)?;
            regular_entries(&graphs)
        }
    })
}

fn regular_entries(graphs: &[Multigraph]) -> Entries {
    use rayon::prelude::*;
    let rows: Vec<(CanonicalCode, MatchingPolynomial, String)> = graphs
        .par_iter()
        .map(|g| (g.canonical_code(), matching_polynomial(g), name_of(g)))
        .collect();
    let names = rows
        .iter()
        .map(|(c, _, n)| (c.clone(), n.clone()))
        .collect();
    (rows.into_iter().map(|(c, p, _)| (c, p)).collect(), names)
}

fn named(codes: &[CanonicalCode], names: &BTreeMap<CanonicalCode, String>) -> Vec<String> {
    codes
        .iter()
        .map(|c| names.get(c).cloned().unwrap_or_else(|| c.to_hex()))
        .collect()
}

fn render_scan(report: &ExtremumReport, names: &BTreeMap<CanonicalCode, String>) -> String {
    let mut text = format!("{} graphs\n", report.graphs);
    for c in &report.coefficients {
        writeln!(
            text,
            "m={}\tmin {} [{}]\tmax {} [{}]",
            c.m,
            c.min,
            named(&c.argmin, names).join(", "),
            c.max,
            named(&c.argmax, names).join(", ")
        )
        .unwrap();
    }
    for (label, set) in [
        ("minimum", &report.coefficientwise_min),
        ("maximum", &report.coefficientwise_max),
    ] {
        if set.is_empty() {
            writeln!(text, "no coefficientwise {label}").unwrap();
        } else {
            writeln!(
                text,
                "coefficientwise {label}: {}",
                named(set, names).join(", ")
            )
            .unwrap();
        }
    }
    text
}

fn names_json(names: &BTreeMap<CanonicalCode, String>) -> Value {
    json!(names
        .iter()
        .map(|(c, n)| (c.to_hex(), n.clone()))
        .collect::<BTreeMap<_, _>>())
}

fn scan(target: &ScanTarget) -> Res {
    let (entries, names) = scan_entries(target)?;
    let report = scan_polynomials(&entries).map_err(err)?;
    let text = render_scan(&report, &names);
    Ok(Output::new(
        json!({ "report": report, "names": names_json(&names) }),
        text,
    ))
}

fn verify(check: &VerifyCheck) -> Res {
    match check {
        VerifyCheck::Lmc { max_two_n, r } => verify_lmc(*max_two_n, *r),
        VerifyCheck::Umc { two_n, r } => verify_umc(*two_n, *r),
        VerifyCheck::OmegaExtremal { max_n, min_n } => verify_omega(*min_n, *max_n),
        VerifyCheck::TwoRegExtremal { max_n, min_n } => verify_two_regular(*min_n, *max_n),
    }
}

const LOG_TOL: f64 = 1e-9;

fn verify_lmc(max_two_n: usize, r: usize) -> Res {
    if r == 0 || max_two_n < 2 * r {
        return Err(format!("need r >= 1 and at least 2r = {} vertices", 2 * r));
    }
    let mut checked = 0u64;
    let mut graphs = 0usize;
    let mut violations = Vec::new();
    let mut text = String::new();
    for n in r..=max_two_n / 2 {
        let list = enumerate_regular_bipartite_with_cap(2 * n, r, RegularClass::SIMPLE, max_two_n)
            .map_err(err)?;
        let (entries, _) = regular_entries(&list);
        graphs += list.len();
        for (g, (_, p)) in list.iter().zip(&entries) {
            let mut record = |what: String, phi: String, bound: LogValue| {
                violations.push(json!({
                    "graph": name_of(g),
                    "text": g.to_text(),
                    "check": what,
                    "phi": phi,
                    "bound": float(bound.exp()),
                }));
            };
            for m in 1..=n {
                let b = lmc_bound(n as u64, r as u64, m as u64).map_err(err)?;
                checked += 1;
                if ln_biguint(&p.coeff(m)) < b.ln - LOG_TOL {
                    record(format!("lmc m={m}"), p.coeff(m).to_string(), b);
                }
            }
            if r >= 2 {
                let pm = perfect_matching_lower_bounds(n as u64, r as u64).map_err(err)?;
                let ln_pm = ln_biguint(&p.coeff(n));
                for (label, b) in [("schrijver", pm.schrijver), ("gurvits", pm.gurvits)] {
                    checked += 1;
                    if ln_pm < b.ln - LOG_TOL {
                        record(label.to_string(), p.coeff(n).to_string(), b);
                    }
                }
            }
        }
    }
    writeln!(
        text,
        "{graphs} graphs, {checked} checks, {} violations",
        violations.len()
    )
    .unwrap();
    for v in &violations {
        writeln!(
            text,
            "counterexample {} ({}): phi = {} < {}\n{}",
            v["graph"].as_str().unwrap(),
            v["check"].as_str().unwrap(),
            v["phi"].as_str().unwrap(),
            v["bound"].as_str().unwrap(),
            v["text"].as_str().unwrap().trim_end()
        )
        .unwrap();
    }
    let holds = violations.is_empty();
    let result =
        json!({ "graphs": graphs, "checks": checked, "holds": holds, "violations": violations });
    Ok(Output::new(result, text).violated(!holds))
}

fn verify_umc(two_n: usize, r: usize) -> Res {
    if two_n % 2 == 1 || r == 0 || two_n < 2 * r {
        return Err(format!(
            "need an even vertex count of at least 2r = {}",
            2 * r
        ));
    }
    let n = two_n / 2;
    let list = enumerate_regular_bipartite_with_cap(two_n, r, RegularClass::SIMPLE, two_n.max(14))
        .map_err(err)?;
    let (entries, names) = regular_entries(&list);
    let report = scan_polynomials(&entries).map_err(err)?;
    let candidates: Vec<FamilySpec> = if r == 3 {
        extremal_cubic(two_n).map_err(err)?
    } else if n.is_multiple_of(r) {
        vec![FamilySpec::new().with(Atom::CompleteBipartite(r), n / r)]
    } else {
        Vec::new()
    };
    let polys: Vec<MatchingPolynomial> = candidates.iter().map(FamilySpec::polynomial).collect();
    let mut per_m = Vec::new();
    let mut failures = 0;
    let mut text = render_scan(&report, &names);
    for c in &report.coefficients {
        let best = polys.iter().map(|p| p.coeff(c.m)).max();
        let attained = best.as_ref().map(|b| b == &c.max);
        if attained == Some(false) {
            failures += 1;
            writeln!(
                text,
                "m={}: conjectured family reaches {} only",
                c.m,
                best.as_ref().unwrap()
            )
            .unwrap();
        }
        per_m.push(json!({
            "m": c.m,
            "max": c.max.to_string(),
            "argmax": named(&c.argmax, &names),
            "attained_by_family": attained,
        }));
    }
    let family: Vec<String> = candidates.iter().map(ToString::to_string).collect();
    if family.is_empty() {
        writeln!(text, "no conjectured family for r = {r}, 2n = {two_n}").unwrap();
    } else {
        writeln!(
            text,
            "conjectured family: {}; {failures} coefficients not attained",
            family.join(" or ")
        )
        .unwrap();
    }
    let result = json!({
        "graphs": report.graphs,
        "family": family,
        "coefficientwise_max_exists": report.coefficientwise_max_exists,
        "coefficientwise_max": named(&report.coefficientwise_max, &names),
        "per_m": per_m,
        "holds": failures == 0,
    });
    Ok(Output::new(result, text).violated(failures > 0))
}

fn attaining(report: &ExtremumReport, side: Side) -> BTreeSet<CanonicalCode> {
    match side {
        Side::Min => report.coefficientwise_min.iter().cloned().collect(),
        Side::Max => report.coefficientwise_max.iter().cloned().collect(),
    }
}

fn spec_codes(specs: &[FamilySpec]) -> BTreeSet<CanonicalCode> {
    specs.iter().map(|s| s.realize().canonical_code()).collect()
}

fn verify_omega(min_n: usize, max_n: usize) -> Res {
    if min_n < 2 || min_n > max_n {
        return Err("need 2 <= min-n <= max-n".into());
    }
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for n in min_n..=max_n {
        for k in 1..=n / 2 {
            for (bipartite, flavor) in [
                (false, OmegaFlavor::Simple),
                (true, OmegaFlavor::SimpleBipartite),
            ] {
                let specs = enumerate_omega(n, k, flavor).map_err(err)?;
                let entries: Vec<_> = specs
                    .iter()
                    .map(|s| (s.realize().canonical_code(), s.polynomial()))
                    .collect();
                let report = scan_polynomials(&entries).map_err(err)?;
                for side in [Side::Min, Side::Max] {
                    let want = extremal_omega(n, k, side, bipartite).map_err(err)?;
                    cases += 1;
                    if attaining(&report, side) != spec_codes(&want) {
                        let got: Vec<String> = specs
                            .iter()
                            .filter(|s| {
                                attaining(&report, side).contains(&s.realize().canonical_code())
                            })
                            .map(ToString::to_string)
                            .collect();
                        mismatches.push(json!({
                            "n": n, "k": k, "bipartite": bipartite, "side": side,
                            "expected": want.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            "found": got,
                        }));
                    }
                }
            }
        }
    }
    let text = mismatch_text(cases, &mismatches);
    let holds = mismatches.is_empty();
    Ok(Output::new(
        json!({ "cases": cases, "holds": holds, "mismatches": mismatches }),
        text,
    )
    .violated(!holds))
}

fn verify_two_regular(min_n: usize, max_n: usize) -> Res {
    if min_n < 3 || min_n > max_n {
        return Err("need 3 <= min-n <= max-n".into());
    }
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for n in min_n..=max_n {
        for flavor in [
            TwoRegularFlavor::Simple,
            TwoRegularFlavor::SimpleBipartite,
            TwoRegularFlavor::MultiBipartite,
        ] {
            if flavor != TwoRegularFlavor::Simple && n % 2 == 1 {
                continue;
            }
            let specs = enumerate_2regular(n, flavor);
            let entries: Vec<_> = specs
                .iter()
                .map(|s| (s.realize().canonical_code(), s.polynomial()))
                .collect();
            let report = scan_polynomials(&entries).map_err(err)?;
            for side in [Side::Min, Side::Max] {
                let want = extremal_2regular(n, side, flavor).map_err(err)?;
                cases += 1;
                let unique = match side {
                    Side::Min => report.coefficientwise_min_unique,
                    Side::Max => report.coefficientwise_max_unique,
                };
                if !unique || attaining(&report, side) != spec_codes(&want) {
                    mismatches.push(json!({
                        "n": n, "flavor": flavor, "side": side,
                        "expected": want.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    }));
                }
            }
        }
    }
    let text = mismatch_text(cases, &mismatches);
    let holds = mismatches.is_empty();
    Ok(Output::new(
        json!({ "cases": cases, "holds": holds, "mismatches": mismatches }),
        text,
    )
    .violated(!holds))
}

fn mismatch_text(cases: usize, mismatches: &[Value]) -> String {
    let mut text = format!("{cases} cases, {} mismatches\n", mismatches.len());
    for m in mismatches {
        writeln!(text, "mismatch: {m}").unwrap();
    }
    text
}

fn expect(which: ExpectArg, m: u64, n: u64, r: u64, mc: Option<u64>, seed: u64) -> Res {
    let (value, model) = match which {
        ExpectArg::E1 => (expected_e1(m, n, r).map_err(err)?, Model::Permutation),
        ExpectArg::E2 => (expected_e2(m, n, r).map_err(err)?, Model::Configuration),
    };
    let ln = normalized_ln(&value, n, Normalization::PerVertex).map_err(err)?;
    let exact = rational_json(&value);
    let mut text = format!(
        "{}\n{}\nln/(2n) = {}\n",
        exact["fraction"].as_str().unwrap(),
        exact["decimal"].as_str().unwrap(),
        float(ln)
    );
    let mut result = json!({ "value": exact, "ln_per_vertex": float(ln) });
    if let Some(samples) = mc {
        if samples < 2 {
            return Err("--mc needs at least 2 samples".into());
        }
        let est = monte_carlo_matchings(model, m as usize, n as usize, r as usize, samples, seed);
        writeln!(
            text,
            "monte carlo: {} ± {} ({samples} samples, seed {seed})",
            float(est.mean),
            float(est.std_error)
        )
        .unwrap();
        result["monte_carlo"] = json!({
            "samples": est.samples,
            "mean": float(est.mean),
            "std_error": float(est.std_error),
        });
        return Ok(Output::new(result, text).seeded(Some(seed)));
    }
    Ok(Output::new(result, text))
}

struct Row {
    r: u64,
    p: Option<f64>,
    m: Option<u64>,
    n: Option<u64>,
    value: f64,
    ln: f64,
}

impl Row {
    fn new(r: u64, p: Option<f64>, m: Option<u64>, n: Option<u64>, v: LogValue) -> Self {
        Row {
            r,
            p,
            m,
            n,
            value: v.exp(),
            ln: v.ln,
        }
    }

    fn json(&self) -> Value {
        json!({
            "r": self.r,
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "ln": float(self.ln),
            "value": float(self.value),
        })
    }

    fn label(&self) -> String {
        let mut parts = vec![format!("r={}", self.r)];
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        parts.join(" ")
    }
}

fn bound(which: &BoundKind, csv: bool, steps: u32) -> Res {
    type Rows = Result<Vec<Row>, regmatch::asymptotics::AsymptoticError>;
    if steps == 0 {
        return Err("--steps must be positive".into());
    }
    let grid = |from: u32| {
        (from..=steps)
            .map(|i| i as f64 / steps as f64)
            .collect::<Vec<f64>>()
    };
    let (name, rows): (&str, Vec<Row>) = match *which {
        BoundKind::Gh { r, p } => {
            let ps = p.map_or_else(|| grid(0), |p| vec![p]);
            let rows: Rows = ps
                .into_iter()
                .map(|p| Ok(Row::new(r, Some(p), None, None, gh(r, p)?)))
                .collect();
            ("gh", rows.map_err(err)?)
        }
        BoundKind::Fg { r, s, p } => {
            let ps = match (p, s) {
                (Some(p), _) => vec![p],
                (None, 0) => vec![1.0],
                (None, _) => grid(1),
            };
            let rows: Rows = ps
                .into_iter()
                .map(|p| Ok(Row::new(r, Some(p), None, None, fg_bound(r, s, p)?)))
                .collect();
            ("fg", rows.map_err(err)?)
        }
        BoundKind::Lmc { n, r, m } | BoundKind::Conj { n, r, m } => {
            let lmc = matches!(which, BoundKind::Lmc { .. });
            let f = if lmc {
                lmc_bound
            } else {
                conjectured_lower_bound
            };
            let ms = m.map_or_else(|| (1..=n).collect(), |m| vec![m]);
            let rows: Rows = ms
                .into_iter()
                .map(|m| Ok(Row::new(r, None, Some(m), Some(n), f(n, r, m)?)))
                .collect();
            (if lmc { "lmc" } else { "conj" }, rows.map_err(err)?)
        }
        BoundKind::Schrijver { n, r } | BoundKind::Gurvits { n, r } => {
            let b = perfect_matching_lower_bounds(n, r).map_err(err)?;
            let (name, v) = match which {
                BoundKind::Schrijver { .. } => ("schrijver", b.schrijver),
                _ => ("gurvits", b.gurvits),
            };
            (name, vec![Row::new(r, None, None, Some(n), v)])
        }
    };
    let text = if csv {
        let cell = |x: Option<String>| x.unwrap_or_default();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["r", "p", "m", "n", "quantity", "value"])
            .map_err(err)?;
        for row in &rows {
            w.write_record([
                row.r.to_string(),
                cell(row.p.map(|p| p.to_string())),
                cell(row.m.map(|m| m.to_string())),
                cell(row.n.map(|n| n.to_string())),
                name.to_string(),
                float(row.value),
            ])
            .map_err(err)?;
        }
        String::from_utf8(w.into_inner().map_err(err)?).map_err(err)?
    } else {
        rows.iter()
            .map(|row| {
                format!(
                    "{}\tln={}\tvalue={}\n",
                    row.label(),
                    float(row.ln),
                    float(row.value)
                )
            })
            .collect()
    };
    let json_rows: Vec<Value> = rows.iter().map(Row::json).collect();
    Ok(Output::new(
        json!({ "bound": name, "rows": json_rows }),
        text,
    ))
}

fn smallm(n: u64, r: u64, m: u64, a4: Option<u64>) -> Res {
    let input = SmallMInput::new(n, r, a4).map_err(err)?;
    let value = phi_closed(&input, m).map_err(err)?;
    let max = a4_max(n, r);
    let mut text = format!("{value}\n");
    let mut result = json!({
        "value": value.to_string(),
        "a4_max": { "value": max.value.to_string(), "exact": max.exact },
    });
    if m == 4 {
        let p = p1(n, r);
        writeln!(
            text,
            "p1 = {p}, a4 <= {}{}",
            max.value,
            if max.exact { "" } else { " (rounded down)" }
        )
        .unwrap();
        result["p1"] = json!(p.to_string());
    }
    Ok(Output::new(result, text))
}
