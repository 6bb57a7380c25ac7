use std::fmt::Write;

use ncfactor::{DegreeSplit, FactorChain, SymbolicFactorization};
use serde::Serialize;

/// Everything printed for one run. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub field: String,
    pub splits: Vec<SplitReport>,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<ChainReport>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub h: usize,
    pub k: usize,
    pub factorizations: Vec<FactorizationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H")]
    pub h: String,
    pub symbols: Vec<String>,
    pub system: Vec<String>,
    pub reduced_basis: Option<Vec<String>>,
    pub solutions: Vec<SolutionReport>,
    /// Solutions left out because of the display limit.
    #[serde(skip_serializing_if = "is_zero")]
    pub omitted: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    /// Values of the symbols, in the order of `symbols`.
    pub values: Vec<String>,
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "H")]
    pub h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub factors: Vec<String>,
    pub truncated: bool,
}

impl ChainReport {
    pub fn new(c: &FactorChain) -> Self {
        ChainReport {
            factors: c.factors.iter().map(|p| p.to_string()).collect(),
            truncated: c.truncated,
        }
    }
}

impl SplitReport {
    /// Groups the entries of one split by their symbolic factor pair.
    pub fn new(split: DegreeSplit, found: &[SymbolicFactorization], max_solutions: Option<usize>) -> Self {
        let mut factorizations: Vec<FactorizationReport> = Vec::new();
        for e in found {
            let (g, h) = (e.g.to_string(), e.h.to_string());
            let idx = match factorizations.iter().position(|r| r.g == g && r.h == h) {
                Some(i) => i,
                None => {
                    factorizations.push(FactorizationReport {
                        g,
                        h,
                        symbols: e.system.symbols().to_vec(),
                        system: e.system.equations().iter().map(|q| q.to_string()).collect(),
                        reduced_basis: e.reduced_basis.as_ref().map(|b| b.iter().map(|q| q.to_string()).collect()),
                        solutions: Vec::new(),
                        omitted: 0,
                    });
                    factorizations.len() - 1
                }
            };
            let report = &mut factorizations[idx];
            if let (Some(values), Some((g, h))) = (&e.solution, &e.factors) {
                if max_solutions.is_none_or(|m| report.solutions.len() < m) {
                    report.solutions.push(SolutionReport {
                        values: values.iter().map(|v| v.to_string()).collect(),
                        g: g.to_string(),
                        h: h.to_string(),
                    });
                } else {
                    report.omitted += 1;
                }
            }
        }
        SplitReport {
            h: split.h,
            k: split.k,
            factorizations,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn render_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

/// Human-readable report.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    writeln!(out, "input: {}", r.input).unwrap();
    writeln!(out, "field: {}", r.field).unwrap();
    for s in &r.splits {
        if s.factorizations.is_empty() {
            writeln!(out, "irreducible at ({},{})", s.h, s.k).unwrap();
            continue;
        }
        writeln!(out, "split ({},{}):", s.h, s.k).unwrap();
        for f in &s.factorizations {
            write_factorization(&mut out, f);
        }
    }
    if r.irreducible {
        writeln!(out, "irreducible").unwrap();
    }
    if let Some(chains) = &r.chains {
        writeln!(out, "complete factorizations:").unwrap();
        for c in chains {
            let body: Vec<String> = c.factors.iter().map(|p| format!("({p})")).collect();
            let mark = if c.truncated { "  [not fully split]" } else { "" };
            writeln!(out, "  {}{mark}", body.join(" * ")).unwrap();
        }
    }
    out
}

fn write_factorization(out: &mut String, f: &FactorizationReport) {
    if f.symbols.is_empty() {
        writeln!(out, "  ({}) * ({})", f.g, f.h).unwrap();
        return;
    }
    writeln!(out, "  symbolic: ({}) * ({})", f.g, f.h).unwrap();
    let eqs: Vec<String> = f.system.iter().map(|e| format!("{e} = 0")).collect();
    writeln!(out, "  system: {}", eqs.join(", ")).unwrap();
    if let Some(b) = &f.reduced_basis {
        writeln!(out, "  reduced basis: {}", b.join(", ")).unwrap();
    }
    if f.solutions.is_empty() {
        writeln!(out, "  solutions: described by the reduced basis").unwrap();
    }
    for sol in &f.solutions {
        let assignment: Vec<String> = f.symbols.iter().zip(&sol.values).map(|(s, v)| format!("{s} = {v}")).collect();
        writeln!(out, "  {}: ({}) * ({})", assignment.join(", "), sol.g, sol.h).unwrap();
    }
    if f.omitted > 0 {
        writeln!(out, "  ... {} more solutions", f.omitted).unwrap();
    }
}
