use std::io;

use fubini_core::verifier::{RegistryEntry, RunResult, Status};

use crate::compute::{value_csv, value_json, value_plain, Value};
use crate::{ComputeArgs, Format};

pub fn emit_value(args: &ComputeArgs, value: &Value) {
    match args.format {
        Format::Plain => println!("{}", value_plain(args, value)),
        Format::Json => println!("{}", value_json(args, value)),
        Format::Csv => value_csv(args, value).expect("writing to stdout"),
    }
}

pub fn emit_run(run: &RunResult, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(run).expect("serializable")
        ),
        Format::Csv => write_csv(run).expect("writing to stdout"),
        Format::Plain => write_plain(run),
    }
}

fn write_csv(run: &RunResult) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    w.write_record(["identity", "params", "status", "lhs", "rhs", "elapsed_us"])?;
    for r in &run.reports {
        w.write_record([
            r.identity.clone(),
            r.params.to_string(),
            r.status.as_str().to_string(),
            r.lhs.clone(),
            r.rhs.clone(),
            r.elapsed_us.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn write_plain(run: &RunResult) {
    let mut i = 0;
    while i < run.reports.len() {
        let id = &run.reports[i].identity;
        let group: Vec<_> = run.reports[i..]
            .iter()
            .take_while(|r| &r.identity == id)
            .collect();
        i += group.len();
        let count = |s| group.iter().filter(|r| r.status == s).count();
        let failed = count(Status::Fail);
        println!(
            "{} {id}: {} passed, {failed} failed, {} skipped",
            if failed == 0 { "PASS" } else { "FAIL" },
            count(Status::Pass),
            count(Status::SkippedPrecondition),
        );
        for r in group.iter().filter(|r| r.status == Status::Fail) {
            println!("    [{}] lhs = {} | rhs = {}", r.params, r.lhs, r.rhs);
        }
    }
    for w in &run.witnesses {
        println!(
            "{} {} printed form at [{}]: {} vs {}",
            if w.refuted { "REFUTED" } else { "UNREFUTED" },
            w.identity,
            w.params,
            w.printed_lhs,
            w.printed_rhs,
        );
    }
    let s = &run.summary;
    println!(
        "{} identities, {} reports: {} passed, {} failed, {} skipped; {}/{} errata witnesses refuted",
        s.identities,
        s.reports,
        s.passed,
        s.failed,
        s.skipped,
        s.witnesses - s.witnesses_unrefuted,
        s.witnesses,
    );
}

pub fn emit_registry(entries: &[RegistryEntry], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(entries).expect("serializable")
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            let write = |w: &mut csv::Writer<io::Stdout>| -> csv::Result<()> {
                w.write_record(["identity", "equation", "quote", "corrected", "statement"])?;
                for e in entries {
                    w.write_record([
                        e.identity,
                        e.anchor.equation,
                        e.anchor.quote,
                        if e.corrected { "true" } else { "false" },
                        e.statement,
                    ])?;
                }
                w.flush()?;
                Ok(())
            };
            write(&mut w).expect("writing to stdout");
        }
        Format::Plain => {
            for e in entries {
                let flag = if e.corrected { " [corrected]" } else { "" };
                println!(
                    "{:<28} {:<9} \"{}\"{flag}",
                    e.identity, e.anchor.equation, e.anchor.quote
                );
                println!("{:<28} {}", "", e.statement);
            }
        }
    }
}
