//! Report rendering. Every format is a pure function of its input, so output
//! is byte-identical across runs.

use std::fmt::Write as _;

use chainweights::conv::{eta_change_of_basis, nonzero_ideals, FnR};
use chainweights::criterion::CriterionReport;
use chainweights::mobius::{mobius_poset, FinitePoset};
use chainweights::oracle::OracleReport;
use chainweights::scalar::format_rational;
use chainweights::{ChainKind, IdealExponent, ProductRing, Scalar};
use serde::Serialize;

pub fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serializes");
    out.push('\n');
    out
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

#[derive(Serialize)]
pub struct ComponentInfo {
    spec: String,
    kind: ChainKind,
    p: u32,
    d: u32,
    size: u32,
}

#[derive(Serialize)]
pub struct IdealInfo {
    exponent: Vec<u32>,
    ideal_size: u64,
    orbit_size: u64,
    orthogonal: Vec<u32>,
    in_socle: bool,
}

#[derive(Serialize)]
pub struct RingInfo {
    ring: String,
    size: usize,
    unit_count: usize,
    units: Vec<String>,
    components: Vec<ComponentInfo>,
    socle: Vec<u32>,
    ideals: Vec<IdealInfo>,
}

impl RingInfo {
    pub fn new(r: &ProductRing) -> Self {
        Self {
            ring: r.to_string(),
            size: r.size(),
            unit_count: r.unit_count(),
            units: r.units().iter().map(|&u| r.render(u)).collect(),
            components: r
                .components()
                .iter()
                .map(|c| ComponentInfo {
                    spec: c.to_string(),
                    kind: c.kind(),
                    p: c.p(),
                    d: c.d(),
                    size: c.size(),
                })
                .collect(),
            socle: r.socle_rep().0,
            ideals: r
                .ideal_reps()
                .iter()
                .map(|e| IdealInfo {
                    exponent: e.0.clone(),
                    ideal_size: r.ideal_size(e),
                    orbit_size: r.orbit_size(e),
                    orthogonal: r.orth(e).0,
                    in_socle: r.in_socle(e),
                })
                .collect(),
        }
    }
}

pub fn ring_text(r: &ProductRing) -> String {
    let info = RingInfo::new(r);
    let components: Vec<String> = info
        .components
        .iter()
        .map(|c| format!("{} (p={}, d={})", c.spec, c.p, c.d))
        .collect();
    let mut out = String::new();
    writeln!(out, "ring        {}", info.ring).unwrap();
    writeln!(out, "size        {}", info.size).unwrap();
    writeln!(
        out,
        "units       {}: {}",
        info.unit_count,
        info.units.join(" ")
    )
    .unwrap();
    writeln!(out, "components  {}", components.join(", ")).unwrap();
    writeln!(out, "socle       {}", r.socle_rep()).unwrap();
    writeln!(out, "ideals      {}", info.ideals.len()).unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:<10}  {:>10}  {:>10}  {:<10}  in socle",
        "exponent", "ideal size", "orbit size", "orthogonal"
    )
    .unwrap();
    for (e, i) in r.ideal_reps().iter().zip(&info.ideals) {
        writeln!(
            out,
            "{:<10}  {:>10}  {:>10}  {:<10}  {}",
            e.to_string(),
            i.ideal_size,
            i.orbit_size,
            r.orth(e).to_string(),
            if i.in_socle { "yes" } else { "no" }
        )
        .unwrap();
    }
    out
}

/// One row per ideal: its label, `μ(0, x)`, then `μ(x, y)` for every `y`.
pub fn mobius_csv(r: &ProductRing) -> String {
    let lattice = FinitePoset::ideal_lattice(r);
    let mu = mobius_poset(&lattice);
    let zero = r.ideal_pos(&r.zero_ideal()).expect("zero ideal");
    let labels: Vec<String> = r
        .ideal_reps()
        .iter()
        .map(IdealExponent::to_string)
        .collect();
    let header = ["ideal".to_string(), "mu_zero".to_string()]
        .into_iter()
        .chain(labels.iter().cloned())
        .collect();
    let rows = (0..labels.len()).map(|a| {
        let mut row = vec![labels[a].clone(), mu.get(zero, a).to_string()];
        row.extend((0..labels.len()).map(|b| mu.get(a, b).to_string()));
        row
    });
    csv_string(std::iter::once(header).chain(rows))
}

pub fn fn_csv(f: &FnR) -> String {
    let r = f.ring();
    let header = ["index", "element", "re", "im"].map(String::from).to_vec();
    let rows = r.elements().map(|a| {
        let v = f.at(a);
        vec![
            a.index().to_string(),
            r.render(a),
            format_rational(v.re()),
            format_rational(v.im()),
        ]
    });
    csv_string(std::iter::once(header).chain(rows))
}

pub fn fn_text(f: &FnR) -> String {
    let r = f.ring();
    let width = r.elements().map(|a| r.render(a).len()).max().unwrap_or(0);
    let mut out = String::new();
    for a in r.elements() {
        writeln!(out, "{:<width$}  {}", r.render(a), f.at(a)).unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct FnEntry {
    element: String,
    value: Scalar,
}

#[derive(Serialize)]
pub struct FnReport {
    ring: String,
    table: Vec<FnEntry>,
}

impl FnReport {
    pub fn new(f: &FnR) -> Self {
        let r = f.ring();
        Self {
            ring: r.to_string(),
            table: r
                .elements()
                .map(|a| FnEntry {
                    element: r.render(a),
                    value: f.at(a).clone(),
                })
                .collect(),
        }
    }
}

/// Rows are `η_x`, columns the `ε_t` coordinates, both over nonzero ideals.
#[derive(Serialize)]
pub struct BasisReport {
    ring: String,
    ideals: Vec<Vec<u32>>,
    rows: Vec<Vec<Scalar>>,
}

impl BasisReport {
    pub fn new(r: &ProductRing) -> Self {
        let m = eta_change_of_basis(r);
        Self {
            ring: r.to_string(),
            ideals: nonzero_ideals(r).into_iter().map(|e| e.0).collect(),
            rows: (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
        }
    }
}

pub fn basis_csv(r: &ProductRing) -> String {
    let report = BasisReport::new(r);
    let labels: Vec<String> = nonzero_ideals(r)
        .iter()
        .map(IdealExponent::to_string)
        .collect();
    let header = std::iter::once("eta".to_string())
        .chain(labels.iter().cloned())
        .collect();
    let rows = labels.iter().zip(&report.rows).map(|(label, row)| {
        std::iter::once(label.clone())
            .chain(row.iter().map(Scalar::to_string))
            .collect()
    });
    csv_string(std::iter::once(header).chain(rows))
}

fn exponent_label(x: &[u32]) -> String {
    IdealExponent(x.to_vec()).to_string()
}

pub fn criterion_csv(report: &CriterionReport) -> String {
    let header = ["x", "re", "im", "pass"].map(String::from).to_vec();
    let rows = report.entries.iter().map(|e| {
        vec![
            exponent_label(&e.x),
            format_rational(e.value.re()),
            format_rational(e.value.im()),
            e.pass.to_string(),
        ]
    });
    csv_string(std::iter::once(header).chain(rows))
}

pub fn criterion_text(report: &CriterionReport) -> String {
    let mut out = String::new();
    writeln!(out, "ring {}", report.ring).unwrap();
    for e in &report.entries {
        writeln!(
            out,
            "x = {:<8}  {:>8}  {}",
            exponent_label(&e.x),
            e.value.to_string(),
            if e.pass { "ok" } else { "ZERO" }
        )
        .unwrap();
    }
    let failed = report.entries.iter().filter(|e| !e.pass).count();
    if failed == 0 {
        writeln!(out, "criterion holds").unwrap();
    } else {
        writeln!(
            out,
            "criterion fails at {failed} of {} ideals",
            report.entries.len()
        )
        .unwrap();
    }
    out
}

pub fn oracle_text(report: &OracleReport) -> String {
    let mut out = String::new();
    writeln!(out, "ring              {}", report.ring).unwrap();
    writeln!(out, "weight            {}", report.weight).unwrap();
    writeln!(out, "n                 {}", report.n).unwrap();
    writeln!(out, "codes examined    {}", report.codes_examined).unwrap();
    writeln!(out, "codes skipped     {}", report.codes_skipped.len()).unwrap();
    writeln!(out, "isometries        {}", report.isometries_found).unwrap();
    writeln!(out, "extendable        {}", report.extendable).unwrap();
    writeln!(out, "witnesses         {}", report.witnesses.len()).unwrap();
    for s in &report.codes_skipped {
        writeln!(out, "skipped code #{}: {}", s.code_index, s.reason).unwrap();
    }
    for w in &report.witnesses {
        let gens: Vec<String> = w
            .generators
            .iter()
            .map(|g| format!("({})", g.join(",")))
            .collect();
        writeln!(
            out,
            "witness: code #{} spanned by {}{}",
            w.code_index,
            gens.join(" "),
            if w.injective { "" } else { ", not injective" }
        )
        .unwrap();
        for m in &w.map {
            writeln!(out, "  ({}) -> ({})", m.x.join(","), m.image.join(",")).unwrap();
        }
    }
    out
}
