use std::fmt::Write as _;

use anyhow::Result;
use serde_json::{json, Value};
use tutte_dfs_core::dfs::Classification;
use tutte_dfs_core::harness::{DerivationStatus, Verdict, VerificationReport};
use tutte_dfs_core::poly::{BiPoly, IntPoly, RatPoly};
use tutte_dfs_core::recurrence::TutteTable;

use crate::Format;

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_doc(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn bi_rows(p: &BiPoly) -> impl Iterator<Item = [String; 3]> + '_ {
    p.terms().map(|((i, j), c)| [i.to_string(), j.to_string(), c.to_string()])
}

fn uni_rows(p: &IntPoly) -> impl Iterator<Item = [String; 2]> + '_ {
    p.coeffs().iter().enumerate().map(|(e, c)| [e.to_string(), c.to_string()]).filter(|[_, c]| c != "0")
}

pub fn tutte(f: Format, n: usize, r: usize, t: &BiPoly) -> Result<String> {
    match f {
        Format::Json => pretty(&json!({ "n": n, "r": r, "tutte": t.to_json() })),
        Format::Text => Ok(format!("{t}\n")),
        Format::Csv => csv_doc(&["x_exp", "y_exp", "coefficient"], bi_rows(t).map(Vec::from)),
    }
}

pub fn tutte_with_brute(f: Format, n: usize, r: usize, t: &BiPoly, b: &BiPoly) -> Result<String> {
    let agree = t == b;
    match f {
        Format::Json => pretty(&json!({
            "n": n,
            "r": r,
            "tutte": t.to_json(),
            "brute": b.to_json(),
            "agree": agree,
        })),
        Format::Text => Ok(format!("recurrence: {t}\nbrute:      {b}\nagree:      {agree}\n")),
        Format::Csv => {
            let rows = bi_rows(t)
                .map(|r| [vec!["recurrence".to_string()], Vec::from(r)].concat())
                .chain(bi_rows(b).map(|r| [vec!["brute".to_string()], Vec::from(r)].concat()));
            csv_doc(&["source", "x_exp", "y_exp", "coefficient"], rows.collect::<Vec<_>>())
        }
    }
}

pub fn table(f: Format, table: &TutteTable) -> Result<String> {
    let n_max = table.n_max();
    match f {
        Format::Json => {
            let rows: Vec<Vec<Value>> = (1..=n_max)
                .map(|n| {
                    (1..=n)
                        .map(|r| json!({ "n": n, "r": r, "tutte": table.get(n, r).unwrap().to_json() }))
                        .collect()
                })
                .collect();
            pretty(&json!({ "n_max": n_max, "rows": rows }))
        }
        Format::Text => {
            let mut s = String::from("n\\r");
            for r in 1..=n_max {
                write!(s, "\t{r}")?;
            }
            s.push('\n');
            for n in 1..=n_max {
                write!(s, "{n}")?;
                for r in 1..=n {
                    write!(s, "\t{}", table.get(n, r)?)?;
                }
                s.push('\n');
            }
            Ok(s)
        }
        Format::Csv => {
            let rows = table.entries().flat_map(|(n, r, t)| {
                bi_rows(t)
                    .map(move |row| [vec![n.to_string(), r.to_string()], Vec::from(row)].concat())
                    .collect::<Vec<_>>()
            });
            csv_doc(&["n", "r", "x_exp", "y_exp", "coefficient"], rows.collect::<Vec<_>>())
        }
    }
}

/// A single-variable result, labelled by its integer parameters.
pub fn uni(f: Format, params: &[(&str, usize)], var: &str, p: &IntPoly) -> Result<String> {
    match f {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            for (k, v) in params {
                doc.insert(k.to_string(), json!(v));
            }
            doc.insert("poly".into(), serde_json::to_value(p.to_json(var))?);
            doc.insert("value_at_1".into(), json!(p.eval(&1.into()).to_string()));
            pretty(&doc)
        }
        Format::Text => Ok(format!("{}\n", p.display(var))),
        Format::Csv => csv_doc(&["exponent", "coefficient"], uni_rows(p).map(Vec::from).collect::<Vec<_>>()),
    }
}

pub fn classification(f: Format, cls: &Classification) -> Result<String> {
    match f {
        Format::Json => pretty(&cls.to_report()),
        Format::Text => {
            let mut s = format!("classes of connected spanning subgraphs of K_{}\n", cls.n + 1);
            let width = cls.classes.iter().map(|(l, _)| l.to_string().len()).max().unwrap_or(0);
            for (l, p) in &cls.classes {
                let count = p.eval(&1.into());
                writeln!(s, "{:<width$}  {:>12}  {}", l.to_string(), count.to_string(), p.display("t"))?;
            }
            Ok(s)
        }
        Format::Csv => {
            let rows = cls.classes.iter().flat_map(|(l, p)| {
                uni_rows(p).map(|r| [vec![l.to_string()], Vec::from(r)].concat()).collect::<Vec<_>>()
            });
            csv_doc(&["lambda", "exponent", "coefficient"], rows.collect::<Vec<_>>())
        }
    }
}

fn status_word(s: DerivationStatus) -> &'static str {
    match s {
        DerivationStatus::Integral => "integral",
        DerivationStatus::NonIntegral => "non-integral",
        DerivationStatus::NotDivisible => "not-divisible",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn match_word(m: Option<bool>) -> &'static str {
    m.map_or("-", yes_no)
}

pub fn verification(f: Format, rep: &VerificationReport) -> Result<String> {
    match f {
        Format::Json => pretty(rep),
        Format::Text => {
            let verdict = match rep.verdict {
                Verdict::Verified => "verified",
                Verdict::Finding => "finding",
            };
            let mut s = format!("n = {}  edge bits = {}  verdict: {verdict}\n\n", rep.n, rep.edge_bits);
            let width = rep.classes.iter().map(|c| c.lambda.to_string().len()).max().unwrap_or(6).max(6);
            writeln!(
                s,
                "{:<width$}  {:<9}  {:<13}  {:<5}  {:<5}  {:<6}  {:<8}  {:<11}  J(q)",
                "lambda", "label", "derivation", "match", "order", "degree", "positive", "log-concave"
            )?;
            for c in &rep.classes {
                let j = match &c.derived_j.poly {
                    Some(p) => RatPoly::from_json(p)?.display("q").to_string(),
                    None => "-".to_string(),
                };
                writeln!(
                    s,
                    "{:<width$}  {:<9}  {:<13}  {:<5}  {:<5}  {:<6}  {:<8}  {:<11}  {j}",
                    c.lambda.to_string(),
                    c.label,
                    status_word(c.derived_j.status),
                    match_word(c.matches),
                    yes_no(c.order_ok),
                    yes_no(c.degree_ok),
                    yes_no(c.positive),
                    yes_no(c.log_concave),
                )?;
            }
            s.push_str("\naggregates\n");
            for a in &rep.aggregates {
                write!(s, "  {:<26} {}", a.name, if a.holds { "holds" } else { "FAILS" })?;
                if let Some(d) = &a.detail {
                    write!(s, " ({d})")?;
                }
                s.push('\n');
            }
            if !rep.notes.is_empty() {
                s.push_str("\nnotes\n");
                for note in &rep.notes {
                    writeln!(s, "  {note}")?;
                }
            }
            Ok(s)
        }
        Format::Csv => {
            let rows = rep.classes.iter().map(|c| {
                vec![
                    c.lambda.to_string(),
                    c.label.clone(),
                    status_word(c.derived_j.status).to_string(),
                    match_word(c.matches).to_string(),
                    c.order_ok.to_string(),
                    c.degree_ok.to_string(),
                    c.positive.to_string(),
                    c.log_concave.to_string(),
                ]
            });
            csv_doc(
                &[
                    "lambda",
                    "label",
                    "derivation",
                    "match",
                    "order_ok",
                    "degree_ok",
                    "positive",
                    "log_concave",
                ],
                rows.collect::<Vec<_>>(),
            )
        }
    }
}
