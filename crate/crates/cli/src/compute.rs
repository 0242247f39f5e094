use std::io;

use clap::ValueEnum;
use fubini_core::apostol::apostol_bernoulli;
use fubini_core::bernoulli::{bernoulli, p_bernoulli, PBernoulliTable};
use fubini_core::combinatorics::{
    binomial, stirling1_unsigned, stirling2, StirlingKind, StirlingTriangle,
};
use fubini_core::fubini::{fubini_number, fubini_poly, fubini_two_var};
use fubini_core::{BiPolyZ, PolyQ, PolyZ, Rat, RatFunc};
use serde_json::json;

use crate::{ComputeArgs, Format, TableArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Stirling1,
    Stirling2,
    Binomial,
    FubiniNumber,
    FubiniPoly,
    FubiniTwoVar,
    Bernoulli,
    PBernoulli,
    Apostol,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableObject {
    Stirling1,
    Stirling2,
    FubiniNumber,
    Bernoulli,
    PBernoulli,
}

pub enum Value {
    Scalar(String),
    Poly(PolyZ),
    BiPoly(BiPolyZ),
    RatFunc(RatFunc),
}

fn need(flag: Option<usize>, name: &str, object: Object) -> Result<usize, String> {
    flag.ok_or_else(|| format!("{} requires --{name}", object_name(object)))
}

pub fn object_name(o: Object) -> String {
    o.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

pub fn compute(args: &ComputeArgs) -> Result<Value, String> {
    let o = args.object;
    let n = || need(args.n, "n", o);
    let k = || need(args.k, "k", o);
    let scalar = |r: Rat| Value::Scalar(r.to_string());
    Ok(match o {
        Object::Stirling1 => Value::Scalar(stirling1_unsigned(n()?, k()?).to_string()),
        Object::Stirling2 => Value::Scalar(stirling2(n()?, k()?).to_string()),
        Object::Binomial => Value::Scalar(binomial(n()?, k()?).to_string()),
        Object::FubiniNumber => Value::Scalar(fubini_number(n()?).to_string()),
        Object::FubiniPoly => {
            let f = fubini_poly(n()?);
            match &args.at {
                Some(y) => scalar(f.eval(y)),
                None => Value::Poly(f.into_poly()),
            }
        }
        Object::FubiniTwoVar => Value::BiPoly(fubini_two_var(n()?).poly().clone()),
        Object::Bernoulli => scalar(bernoulli(n()?)),
        Object::PBernoulli => scalar(p_bernoulli(n()?, need(args.p, "p", o)?)),
        Object::Apostol => {
            let b = apostol_bernoulli(n()?);
            match &args.at {
                Some(l) => scalar(b.eval(l).map_err(|e| e.to_string())?),
                None => Value::RatFunc(b.into_func()),
            }
        }
    })
}

fn params(args: &ComputeArgs) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    for (name, v) in [("n", args.n), ("k", args.k), ("m", args.m), ("p", args.p)] {
        if let Some(v) = v {
            out.push((name, v.to_string()));
        }
    }
    if let Some(at) = &args.at {
        out.push(("at", at.to_string()));
    }
    out
}

pub fn value_json(args: &ComputeArgs, value: &Value) -> serde_json::Value {
    let mut p = serde_json::Map::new();
    for (k, v) in params(args) {
        let v = v
            .parse::<u64>()
            .map(|i| json!(i))
            .unwrap_or_else(|_| json!(v));
        p.insert(k.to_string(), v);
    }
    let value = match value {
        Value::Scalar(s) => json!(s),
        Value::Poly(f) => json!(f),
        Value::BiPoly(f) => json!(f),
        Value::RatFunc(f) => json!(f),
    };
    json!({ "object": object_name(args.object), "params": p, "value": value })
}

pub fn value_plain(args: &ComputeArgs, value: &Value) -> String {
    match value {
        Value::Scalar(s) => s.clone(),
        Value::Poly(f) => f.display_in("y"),
        Value::BiPoly(f) => f.display(),
        Value::RatFunc(f) => f.display_in(if args.object == Object::Apostol {
            "λ"
        } else {
            "x"
        }),
    }
}

pub fn value_csv(args: &ComputeArgs, value: &Value) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    match value {
        Value::Scalar(s) => {
            let ps = params(args);
            let mut header: Vec<&str> = ps.iter().map(|(k, _)| *k).collect();
            header.push("value");
            w.write_record(&header)?;
            let mut row: Vec<String> = ps.into_iter().map(|(_, v)| v).collect();
            row.push(s.clone());
            w.write_record(&row)?;
        }
        Value::Poly(f) => {
            w.write_record(["power", "coefficient"])?;
            for (i, c) in f.coeffs().iter().enumerate() {
                w.write_record([i.to_string(), c.to_string()])?;
            }
        }
        Value::BiPoly(f) => {
            w.write_record(["x_power", "y_power", "coefficient"])?;
            for (i, row) in f.grid().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    w.write_record([i.to_string(), j.to_string(), c.to_string()])?;
                }
            }
        }
        Value::RatFunc(f) => {
            w.write_record(["power", "numerator", "denominator"])?;
            let (num, den): (&PolyQ, &PolyQ) = (f.numerator(), f.denominator());
            let len = num.coeffs().len().max(den.coeffs().len());
            for i in 0..len {
                w.write_record([
                    i.to_string(),
                    num.coeff(i).to_string(),
                    den.coeff(i).to_string(),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn table(args: &TableArgs) -> Result<(), String> {
    let (header, rows) = table_rows(args);
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(&header).map_err(|e| e.to_string())?;
            for r in &rows {
                w.write_record(r).map_err(|e| e.to_string())?;
            }
            w.flush().map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    for (h, v) in header.iter().zip(r) {
                        let v = if *h == "value" {
                            json!(v)
                        } else {
                            json!(v.parse::<u64>().expect("index column"))
                        };
                        m.insert(h.to_string(), v);
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&objs).expect("serializable")
            );
        }
        Format::Plain => {
            for r in &rows {
                println!("{}", r.join("\t"));
            }
        }
    }
    Ok(())
}

fn table_rows(args: &TableArgs) -> (Vec<&'static str>, Vec<Vec<String>>) {
    let n_max = args.n_max;
    match args.object {
        TableObject::Stirling1 | TableObject::Stirling2 => {
            let kind = if args.object == TableObject::Stirling1 {
                StirlingKind::FirstUnsigned
            } else {
                StirlingKind::Second
            };
            let t = StirlingTriangle::up_to(kind, n_max);
            let mut rows = Vec::new();
            for n in 0..=n_max {
                for (k, v) in t.row(n).iter().enumerate() {
                    rows.push(vec![n.to_string(), k.to_string(), v.to_string()]);
                }
            }
            (vec!["n", "k", "value"], rows)
        }
        TableObject::FubiniNumber => (
            vec!["n", "value"],
            (0..=n_max)
                .map(|n| vec![n.to_string(), fubini_number(n).to_string()])
                .collect(),
        ),
        TableObject::Bernoulli => (
            vec!["n", "value"],
            (0..=n_max)
                .map(|n| vec![n.to_string(), bernoulli(n).to_string()])
                .collect(),
        ),
        TableObject::PBernoulli => {
            let t = PBernoulliTable::build(n_max, args.p_max);
            let mut rows = Vec::new();
            for n in 0..=n_max {
                for p in 0..=args.p_max {
                    let v = t.get(n, p).expect("within table bounds");
                    rows.push(vec![n.to_string(), p.to_string(), v.to_string()]);
                }
            }
            (vec!["n", "p", "value"], rows)
        }
    }
}
