//! Text, JSON, CSV and LaTeX output. No floating point is ever emitted.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::diamond::{ColumnVector, HodgeDiamond, StringyPolynomial};
use crate::format::DiamondFile;
use crate::grade::Grade;
use crate::invariants::{Location, McKayReport, Mismatch, PartnerReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Tex,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "tex" => Ok(Format::Tex),
            other => Err(format!("unknown format {other:?} (expected text, json, csv or tex)")),
        }
    }
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Grades shown on an axis: the integers `0..=n` plus every grade in use.
fn axis(d: &HodgeDiamond, pick: impl Fn((Grade, Grade)) -> Grade) -> Vec<Grade> {
    let mut set: BTreeSet<Grade> = (0..=d.dim() as i64).map(Grade::int).collect();
    set.extend(d.entries().map(|(p, q, _)| pick((p, q))));
    set.into_iter().collect()
}

fn cell(d: &HodgeDiamond, p: Grade, q: Grade) -> String {
    match d.get(p, q) {
        0 if p.differs_by_integer(q) => "0".into(),
        0 => String::new(),
        h => h.to_string(),
    }
}

/// Rows are `q` descending, columns `p` ascending; fractional grades sit at
/// their rational positions. Cells with non-integral `p - q` stay blank.
pub fn diamond_text(name: &str, d: &HodgeDiamond) -> String {
    let ps = axis(d, |(p, _)| p);
    let mut qs = axis(d, |(_, q)| q);
    qs.reverse();

    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["q\\p".to_string()];
    header.extend(ps.iter().map(Grade::to_string));
    grid.push(header);
    for &q in &qs {
        let mut row = vec![q.to_string()];
        row.extend(ps.iter().map(|&p| cell(d, p, q)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();

    let mut out = format!("{name} (dim {}, level {})\n", d.dim(), d.level());
    for (r, row) in grid.iter().enumerate() {
        let mut line = format!("{:>w$} |", row[0], w = widths[0]);
        for (c, v) in row.iter().enumerate().skip(1) {
            write!(line, " {:>w$}", v, w = widths[c]).unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if r == 0 {
            let total: usize = widths.iter().skip(1).map(|w| w + 1).sum();
            out.push_str(&format!("{}-+{}\n", "-".repeat(widths[0]), "-".repeat(total)));
        }
    }
    out
}

pub fn diamond_json(name: &str, d: &HodgeDiamond) -> String {
    let file = DiamondFile::from_diamond(name, d);
    to_json_string(&serde_json::to_value(file).expect("serializable"))
}

pub fn diamond_csv(d: &HodgeDiamond) -> String {
    let mut out = String::from("p,q,h\n");
    for (p, q, h) in d.entries() {
        writeln!(out, "{p},{q},{h}").unwrap();
    }
    out
}

fn tex_grade(g: Grade) -> String {
    if g.is_integer() {
        g.to_string()
    } else {
        format!("$\\frac{{{}}}{{{}}}$", g.numer(), g.denom())
    }
}

fn tex_escape(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => format!("\\{c}"),
            c => c.to_string(),
        })
        .collect()
}

/// A `tabular` with fractional rows and columns interleaved in rational order.
pub fn diamond_tex(name: &str, d: &HodgeDiamond) -> String {
    let ps = axis(d, |(p, _)| p);
    let mut qs = axis(d, |(_, q)| q);
    qs.reverse();
    let mut out = format!(
        "% Hodge diamond of {} (dim {}, level {})\n",
        tex_escape(name),
        d.dim(),
        d.level()
    );
    writeln!(out, "\\begin{{tabular}}{{r|{}}}", "c".repeat(ps.len())).unwrap();
    let header: Vec<String> = ps.iter().map(|&p| tex_grade(p)).collect();
    writeln!(out, "$q \\backslash p$ & {} \\\\", header.join(" & ")).unwrap();
    out.push_str("\\hline\n");
    for &q in &qs {
        let row: Vec<String> = ps.iter().map(|&p| cell(d, p, q)).collect();
        writeln!(out, "{} & {} \\\\", tex_grade(q), row.join(" & ")).unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn diamond(name: &str, d: &HodgeDiamond, format: Format) -> String {
    match format {
        Format::Text => diamond_text(name, d),
        Format::Json => diamond_json(name, d),
        Format::Csv => diamond_csv(d),
        Format::Tex => diamond_tex(name, d),
    }
}

pub fn columns_json(c: &ColumnVector) -> Value {
    Value::Array(c.iter().map(|(i, v)| json!({"i": i, "c": v})).collect())
}

pub fn columns_text(c: &ColumnVector) -> String {
    let parts: Vec<String> = c.iter().map(|(i, v)| format!("{i}:{v}")).collect();
    parts.join(" ")
}

fn location_json(loc: &Location) -> Value {
    match *loc {
        Location::Column(i) => json!({"i": i}),
        Location::Entry(p, q) => json!({"p": p, "q": q}),
    }
}

fn location_text(loc: &Location) -> String {
    match *loc {
        Location::Column(i) => format!("i={i}"),
        Location::Entry(p, q) => format!("(p,q)=({p},{q})"),
    }
}

fn mismatch_json(m: &Mismatch) -> Value {
    let mut v = json!({"constraint": m.constraint.as_str(), "left": m.left, "right": m.right});
    if let (Value::Object(obj), Value::Object(loc)) = (&mut v, location_json(&m.location)) {
        obj.extend(loc);
    }
    v
}

pub const NECESSARY_ONLY_NOTE: &str =
    "note: these are necessary conditions only; a compatible verdict does not establish derived equivalence";

pub fn partner_report(a: &str, b: &str, r: &PartnerReport, format: Format) -> String {
    if format == Format::Json {
        let v = json!({
            "left": a,
            "right": b,
            "columns_equal": r.columns_equal,
            "h01_equal": r.h01_equal,
            "hn0_equal": r.hn0_equal,
            "hn10_equal": r.hn10_equal,
            "strict_equal": r.strict_equal,
            "verdict": r.verdict.as_str(),
            "failures": r.failures.iter().map(mismatch_json).collect::<Vec<_>>(),
            "notes": r.notes.iter().map(mismatch_json).collect::<Vec<_>>(),
            "necessary_only": true,
        });
        return to_json_string(&v);
    }
    let flag = |b: bool| if b { "equal" } else { "DIFFERENT" };
    let mut out = format!("partners: {a} vs {b}\n");
    writeln!(out, "columns: {}", flag(r.columns_equal)).unwrap();
    writeln!(out, "h01: {}", flag(r.h01_equal)).unwrap();
    writeln!(out, "hn0: {}", flag(r.hn0_equal)).unwrap();
    writeln!(out, "hn10: {}", flag(r.hn10_equal)).unwrap();
    if let Some(s) = r.strict_equal {
        writeln!(out, "strict: {}", flag(s)).unwrap();
    }
    for m in &r.failures {
        writeln!(
            out,
            "failure: {} {} left={} right={}",
            m.constraint.as_str(),
            location_text(&m.location),
            m.left,
            m.right
        )
        .unwrap();
    }
    for m in &r.notes {
        writeln!(
            out,
            "info: {} {} left={} right={} (not a proven invariant)",
            m.constraint.as_str(),
            location_text(&m.location),
            m.left,
            m.right
        )
        .unwrap();
    }
    writeln!(out, "verdict: {}", r.verdict.as_str()).unwrap();
    out.push_str(NECESSARY_ONLY_NOTE);
    out.push('\n');
    out
}

pub fn mckay_report(orb: &str, res: &str, r: &McKayReport, format: Format) -> String {
    if format == Format::Json {
        let diffs: Vec<Value> = r
            .differences
            .iter()
            .map(|d| json!({"p": d.p, "q": d.q, "orbifold": d.orbifold, "resolution": d.resolution}))
            .collect();
        return to_json_string(&json!({"orbifold": orb, "resolution": res, "equal": r.equal, "differences": diffs}));
    }
    let mut out = format!("mckay: {orb} vs {res}\n");
    for d in &r.differences {
        writeln!(
            out,
            "difference: (p,q)=({},{}) orbifold={} resolution={}",
            d.p, d.q, d.orbifold, d.resolution
        )
        .unwrap();
    }
    writeln!(out, "equal: {}", r.equal).unwrap();
    out
}

pub fn stringy(name: &str, e: &StringyPolynomial, format: Format) -> String {
    match format {
        Format::Json => {
            let terms: Vec<Value> = e.terms().map(|(p, q, c)| json!({"p": p, "q": q, "c": c})).collect();
            to_json_string(&json!({"name": name, "terms": terms, "euler": e.euler_number()}))
        }
        Format::Csv => {
            let mut out = String::from("p,q,c\n");
            for (p, q, c) in e.terms() {
                writeln!(out, "{p},{q},{c}").unwrap();
            }
            out
        }
        Format::Text | Format::Tex => {
            let mut parts = Vec::new();
            for (p, q, c) in e.terms() {
                parts.push(format!("{c:+} u^{p} v^{q}"));
            }
            format!("E({name}) = {}\neuler number: {}\n", parts.join(" "), e.euler_number())
        }
    }
}
