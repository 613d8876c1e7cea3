use std::collections::hash_map::DefaultHasher;
use std::fs::File;
use std::hash::{Hash, Hasher};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use log::info;
use rcm_core::grid::{dist_rcm_with, distribute, GridShape, PrimitiveKind};
use rcm_core::metrics::{bandwidth, envelope_size};
use rcm_core::sparse::{read_permutation, write_permutation};
use rcm_core::{
    load_matrix_market, permute_symmetric, rcm_with, report, write_matrix_market, Permutation,
    RcmOptions, SparsePatternCsc,
};
use serde_json::json;

use crate::args::{BenchArgs, GridArgs, ReorderArgs, StatsArgs};

fn load(path: &Path) -> Result<SparsePatternCsc> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let a = load_matrix_market(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))?;
    info!("{}: n = {}, nnz = {}", path.display(), a.n(), a.nnz());
    Ok(a)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn options(run: &GridArgs) -> RcmOptions {
    RcmOptions {
        start: run.start,
        ..Default::default()
    }
}

fn perm_hash(p: &Permutation) -> String {
    let mut h = DefaultHasher::new();
    p.new_labels().hash(&mut h);
    format!("{:016x}", h.finish())
}

pub fn reorder(args: &ReorderArgs) -> Result<()> {
    let a = load(&args.input)?;
    let opts = options(&args.run);
    let outcome = match args.grid {
        None => rcm_with(&a, &opts)?,
        Some(shape) => {
            let mut ctx = distribute(&a, shape, args.run.seed, args.run.randomize)?;
            let run = dist_rcm_with(&mut ctx, &opts)?;
            info!(
                "grid {shape}: {} messages, {} words, {} searches",
                run.stats.total().messages,
                run.stats.total().words,
                run.stats.iters
            );
            if !args.run.randomize {
                let serial = rcm_with(&a, &opts)?;
                ensure!(
                    serial.permutation == run.outcome.permutation,
                    "grid {shape} ordering differs from the serial ordering"
                );
            }
            if let Some(path) = &args.csv {
                ctx.trace().write_csv(create(path)?)?;
            }
            if let Some(path) = &args.comm_stats {
                let mut w = create(path)?;
                serde_json::to_writer_pretty(&mut w, &run.stats.to_json())?;
                writeln!(w)?;
                w.flush()?;
            }
            run.outcome
        }
    };
    if let Some(path) = &args.output {
        write_permutation(&outcome.permutation, create(path)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.permuted_matrix {
        let b = permute_symmetric(&a, &outcome.permutation)?;
        write_matrix_market(&b, create(path)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let r = report(&a, &outcome.permutation, outcome.pseudo_diameter)?;
    print_json(&serde_json::to_value(r)?)
}

pub fn stats(args: &StatsArgs) -> Result<()> {
    let a = load(&args.input)?;
    let mut out = json!({
        "n": a.n(),
        "m": a.nnz(),
        "bandwidth": bandwidth(&a),
        "envelope": envelope_size(&a),
    });
    if let Some(path) = &args.permutation {
        let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
        let p = read_permutation(BufReader::new(file))
            .with_context(|| format!("reading {}", path.display()))?;
        ensure!(
            p.len() == a.n(),
            "permutation has {} entries but the matrix has {} rows",
            p.len(),
            a.n()
        );
        let b = permute_symmetric(&a, &p)?;
        out["bandwidth_after"] = bandwidth(&b).into();
        out["envelope_after"] = envelope_size(&b).into();
    }
    print_json(&out)
}

const PRIMITIVES: [PrimitiveKind; 4] = [
    PrimitiveKind::Spmspv,
    PrimitiveKind::SortPerm,
    PrimitiveKind::Reduce,
    PrimitiveKind::Other,
];

fn bench_header() -> String {
    let mut cols = vec![
        "grid",
        "workers",
        "flops",
        "messages",
        "words",
        "modeled_time",
        "iters",
    ]
    .into_iter()
    .map(String::from)
    .collect::<Vec<_>>();
    for kind in PRIMITIVES {
        for c in ["flops", "messages", "words"] {
            cols.push(format!("{kind}_{c}"));
        }
    }
    cols.push("perm_hash".into());
    cols.join(",")
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    if args.grid.is_empty() {
        bail!("no grids given");
    }
    let a = load(&args.input)?;
    let opts = options(&args.run);
    let mut expected = if args.run.randomize {
        None
    } else {
        Some(rcm_with(&a, &opts)?.permutation)
    };
    let mut rows = vec![bench_header()];
    let mut mismatched: Vec<GridShape> = Vec::new();
    for &shape in &args.grid {
        let mut ctx = distribute(&a, shape, args.run.seed, args.run.randomize)?;
        let run = dist_rcm_with(&mut ctx, &opts)?;
        let p = &run.outcome.permutation;
        // randomized runs share one relabeling, so the first grid is the reference
        match &expected {
            Some(e) if e != p => mismatched.push(shape),
            Some(_) => {}
            None => expected = Some(p.clone()),
        }
        let s = &run.stats;
        let t = s.total();
        let mut row = vec![
            shape.to_string(),
            shape.workers().to_string(),
            t.flops.to_string(),
            t.messages.to_string(),
            t.words.to_string(),
            format!("{}", s.modeled_time(args.alpha, args.beta)),
            s.iters.to_string(),
        ];
        for kind in PRIMITIVES {
            let c = s.get(kind);
            row.extend([c.flops, c.messages, c.words].map(|v| v.to_string()));
        }
        row.push(perm_hash(p));
        rows.push(row.join(","));
    }
    let mut text = rows.join("\n");
    text.push('\n');
    match &args.csv {
        Some(path) => {
            let mut w = create(path)?;
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if !mismatched.is_empty() {
        let list: Vec<String> = mismatched.iter().map(|g| g.to_string()).collect();
        bail!(
            "ordering differs from the serial ordering on grid(s) {}",
            list.join(", ")
        );
    }
    Ok(())
}
