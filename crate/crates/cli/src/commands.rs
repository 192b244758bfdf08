//! Subcommand implementations. Each returns its result both as canonical JSON
//! and as an aligned table.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use gwprob::compress::{
    compressed_moment_series, compressed_r_transform, diagonal_compress, SeriesCoefficients,
};
use gwprob::fock::verify_relations;
use gwprob::freeprob::{
    classify, cumulant, freeness_certificate, mixed_cumulants_vanish, moment, Certificate,
    MomentRequest, Witness,
};
use gwprob::io::{
    diagonal_json, load_diagonal, load_graph, load_variable, variable_json, word_json,
};
use gwprob::ncpart::{NcLattice, NoncrossingPartition};
use gwprob::opcalc::{lattice_path, reduce, LatticePath};
use gwprob::{
    DiagonalElement, Error, Graph, Mode, NormalForm, RandomVariable, Result, Scalar, VertexId,
};

use crate::literal::parse_letters;
use crate::table::Table;

pub struct Output {
    pub json: Value,
    pub table: String,
}

fn diagonal_table(g: &Graph, d: &DiagonalElement) -> String {
    let mut t = Table::new(&["vertex", "re", "im"]);
    for (v, c) in d.iter() {
        t.row(&[g.vertex_name(v).to_string(), c.re_string(), c.im_string()]);
    }
    t.render()
}

fn diagonal_output(g: &Graph, d: &DiagonalElement) -> Output {
    Output {
        json: diagonal_json(g, d),
        table: diagonal_table(g, d),
    }
}

pub fn paths(graph: &Path, max_len: usize) -> Result<Output> {
    let g = load_graph(graph)?;
    let words = g.enumerate_paths(max_len);
    let mut t = Table::new(&["word", "length", "source", "range"]);
    for w in &words {
        t.row(&[
            g.format_word(w),
            w.len().to_string(),
            g.vertex_name(w.source()).to_string(),
            g.vertex_name(w.range()).to_string(),
        ]);
    }
    Ok(Output {
        json: Value::from(words.iter().map(|w| g.format_word(w)).collect::<Vec<_>>()),
        table: t.render(),
    })
}

pub fn reduce_word(graph: &Path, word: &str, mode: Mode) -> Result<Output> {
    let g = load_graph(graph)?;
    let letters = parse_letters(&g, word)?;
    let nf = reduce(&letters, mode);
    let json = match &nf {
        NormalForm::Zero => json!({ "kind": "zero" }),
        NormalForm::Identity => json!({ "kind": "identity" }),
        NormalForm::Pair { alpha, beta } => json!({
            "kind": "pair",
            "alpha": word_json(&g, alpha),
            "beta": word_json(&g, beta),
        }),
    };
    let mut t = Table::new(&["kind", "alpha", "beta", "operator"]);
    match &nf {
        NormalForm::Pair { alpha, beta } => t.row(&[
            "pair".to_string(),
            g.format_word(alpha),
            g.format_word(beta),
            nf.display(&g),
        ]),
        other => t.row(&[
            if other.is_zero() { "zero" } else { "identity" }.to_string(),
            String::new(),
            String::new(),
            other.display(&g),
        ]),
    }
    Ok(Output {
        json,
        table: t.render(),
    })
}

pub fn lattice(graph: &Path, word: &str) -> Result<Output> {
    let g = load_graph(graph)?;
    let letters = parse_letters(&g, word)?;
    let path = lattice_path(&letters);
    let star_axis = path.has_star_axis_property();
    let (steps, endpoint) = match &path {
        LatticePath::Empty => (Vec::new(), Value::Null),
        LatticePath::Steps(s) => {
            let (x, y) = path.endpoint().expect("nonempty path");
            (s.clone(), json!([x, y]))
        }
    };
    let json = json!({
        "empty": path == LatticePath::Empty,
        "steps": steps.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
        "endpoint": endpoint,
        "star_axis": star_axis,
    });
    let mut t = Table::new(&["step", "dx", "dy"]);
    for (i, (x, y)) in steps.iter().enumerate() {
        t.row(&[(i + 1).to_string(), x.to_string(), y.to_string()]);
    }
    let mut table = t.render();
    match path.endpoint() {
        Some((x, y)) => table.push_str(&format!("endpoint  ({x}, {y})\n")),
        None => table.push_str("endpoint  empty path\n"),
    }
    table.push_str(&format!("star_axis  {star_axis}\n"));
    Ok(Output { json, table })
}

pub fn expect(var: &Path) -> Result<Output> {
    let a = load_variable(var)?;
    Ok(diagonal_output(a.graph(), &a.expectation()))
}

fn request(var: &Path, n: usize, d: &[PathBuf]) -> Result<(RandomVariable, MomentRequest)> {
    let a = load_variable(var)?;
    if n == 0 {
        return Err(Error::OrderTooSmall { order: 0, min: 1 });
    }
    let req = if d.is_empty() {
        MomentRequest::power(&a, n)
    } else {
        let ds = d
            .iter()
            .map(|p| load_diagonal(a.graph(), p))
            .collect::<Result<Vec<_>>>()?;
        MomentRequest::new(ds, vec![a.clone(); n])?
    };
    Ok((a, req))
}

pub fn moment_cmd(var: &Path, n: usize, d: &[PathBuf]) -> Result<Output> {
    let (a, req) = request(var, n, d)?;
    Ok(diagonal_output(a.graph(), &moment(&req)?))
}

fn partition_json(p: &NoncrossingPartition) -> Value {
    json!(p.blocks())
}

fn partition_string(p: &NoncrossingPartition) -> String {
    format!("{p:?}")
}

pub fn cumulant_cmd(var: &Path, n: usize, d: &[PathBuf], contributions: bool) -> Result<Output> {
    let (a, req) = request(var, n, d)?;
    let g = a.graph();
    let report = cumulant(&req)?;
    let mut json = json!({ "n": report.n, "value": diagonal_json(g, &report.value) });
    let mut table = diagonal_table(g, &report.value);
    if contributions {
        let items: Vec<Value> = report
            .contributions
            .iter()
            .map(|(p, e, mu)| {
                json!({ "partition": partition_json(p), "moment": diagonal_json(g, e), "mobius": mu })
            })
            .collect();
        json["contributions"] = Value::from(items);
        let mut t = Table::new(&["partition", "mobius", "moment"]);
        for (p, e, mu) in &report.contributions {
            t.row(&[partition_string(p), mu.to_string(), diagonal_compact(g, e)]);
        }
        table.push('\n');
        table.push_str(&t.render());
    }
    Ok(Output { json, table })
}

fn diagonal_compact(g: &Graph, d: &DiagonalElement) -> String {
    let parts: Vec<String> = d
        .iter()
        .map(|(v, c)| format!("{}:{}", g.vertex_name(v), c))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn witness_json(g: &Graph, w: &Witness) -> Value {
    json!({
        "slots": w.slots.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "value": diagonal_json(g, &w.value),
    })
}

fn witness_string(g: &Graph, w: &Witness) -> String {
    let slots: Vec<String> = w.slots.iter().map(|s| s.to_string()).collect();
    format!(
        "k{}({}) = {}",
        w.slots.len(),
        slots.join(", "),
        diagonal_compact(g, &w.value)
    )
}

pub fn free(var: &Path, var2: &Path, max_order: usize) -> Result<Output> {
    let a = load_variable(var)?;
    let b = load_variable(var2)?;
    let cert = freeness_certificate(&a, &b)?;
    let check = mixed_cumulants_vanish(&a, &b, max_order)?;
    let g = a.graph();
    let certificate = match cert {
        Certificate::Certified => "diagram-distinct",
        Certificate::Unknown => "unknown",
    };
    let mut json = json!({ "certificate": certificate, "brute_force_ok": check.vanish() });
    let mut t = Table::new(&["field", "value"]);
    t.row(&["certificate", certificate]);
    t.row(&["brute_force_ok".to_string(), check.vanish().to_string()]);
    t.row(&["max_order".to_string(), max_order.to_string()]);
    if let Some(w) = &check.witness {
        json["witness"] = witness_json(g, w);
        t.row(&["witness".to_string(), witness_string(g, w)]);
    }
    Ok(Output {
        json,
        table: t.render(),
    })
}

pub fn classify_cmd(var: &Path, max_order: usize) -> Result<Output> {
    let a = load_variable(var)?;
    let g = a.graph();
    let c = classify(&a, max_order)?;
    let mut json = json!({
        "max_order": c.max_order,
        "semicircular": c.semicircular,
        "even": c.even,
        "r_diagonal": c.r_diagonal,
        "hint": c.hint.as_str(),
        "cumulants": c.cumulants.iter().map(|k| diagonal_json(g, k)).collect::<Vec<_>>(),
    });
    let mut t = Table::new(&["property", "value"]);
    t.row(&["semicircular".to_string(), c.semicircular.to_string()]);
    t.row(&["even".to_string(), c.even.to_string()]);
    t.row(&["r_diagonal".to_string(), c.r_diagonal.to_string()]);
    t.row(&["hint", c.hint.as_str()]);
    t.row(&["max_order".to_string(), c.max_order.to_string()]);
    for (i, k) in c.cumulants.iter().enumerate() {
        t.row(&[format!("k{}", i + 1), diagonal_compact(g, k)]);
    }
    if let Some(w) = &c.r_diagonal_witness {
        json["r_diagonal_witness"] = witness_json(g, w);
        t.row(&["r_diagonal_witness".to_string(), witness_string(g, w)]);
    }
    Ok(Output {
        json,
        table: t.render(),
    })
}

fn vertex_list(g: &Graph, list: &str) -> Result<Vec<VertexId>> {
    list.split(',')
        .map(|s| {
            let s = s.trim();
            if s.is_empty() {
                Err(Error::Parse(format!("malformed vertex list `{list}`")))
            } else {
                g.vertex(s)
            }
        })
        .collect()
}

pub fn compress_cmd(var: &Path, vertices: &str) -> Result<Output> {
    let a = load_variable(var)?;
    let vs = vertex_list(a.graph(), vertices)?;
    let p = diagonal_compress(&a, &vs)?;
    let g = p.graph().clone();
    let mut t = Table::new(&["word", "star", "re", "im"]);
    for (l, c) in p.terms() {
        t.row(&[
            g.format_word(l.word()),
            l.star().to_string(),
            c.re_string(),
            c.im_string(),
        ]);
    }
    Ok(Output {
        json: variable_json(&p),
        table: t.render(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeriesArg {
    Moment,
    Rtransform,
}

fn scalar_pair(c: &Scalar) -> Value {
    json!([c.re_string(), c.im_string()])
}

pub fn series(var: &Path, vertex: &str, order: usize, kind: SeriesArg) -> Result<Output> {
    let a = load_variable(var)?;
    let v = a.graph().vertex(vertex)?;
    let s: SeriesCoefficients = match kind {
        SeriesArg::Moment => compressed_moment_series(&a, v, order)?,
        SeriesArg::Rtransform => compressed_r_transform(&a, v, order)?,
    };
    let mut t = Table::new(&["n", "re", "im"]);
    for (i, c) in s.coefficients.iter().enumerate() {
        t.row(&[(i + 1).to_string(), c.re_string(), c.im_string()]);
    }
    Ok(Output {
        json: Value::from(s.coefficients.iter().map(scalar_pair).collect::<Vec<_>>()),
        table: t.render(),
    })
}

pub fn oracle(graph: &Path, trunc: usize) -> Result<Output> {
    let g = load_graph(graph)?;
    let report = verify_relations(&g, trunc)?;
    let mut t = Table::new(&["relation", "status", "max_error", "counterexamples"]);
    let relations: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            t.row(&[
                c.relation.clone(),
                c.status.as_str().to_string(),
                format!("{:e}", c.max_error),
                c.counterexamples.len().to_string(),
            ]);
            json!({
                "relation": c.relation,
                "status": c.status.as_str(),
                "max_error": c.max_error,
                "counterexamples": c.counterexamples.iter().map(|x| json!({
                    "operator": x.operator,
                    "vector": x.vector,
                    "observed": x.observed,
                    "expected": x.expected,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut table = t.render();
    for c in &report.checks {
        for x in &c.counterexamples {
            table.push_str(&format!(
                "<xi_{0}, {1} xi_{0}> = {2}, expected {3}\n",
                x.vector, x.operator, x.observed, x.expected
            ));
        }
    }
    Ok(Output {
        json: json!({ "truncation": report.truncation, "relations": relations }),
        table,
    })
}

pub fn nc_debug(n: usize) -> Result<Output> {
    NcLattice::get(n)?;
    let mut levels = Vec::new();
    let mut t = Table::new(&["n", "count", "mobius_zero_one"]);
    for k in 1..=n {
        let lattice = NcLattice::get(k)?;
        let count = lattice.partitions().len();
        let mu = lattice.mobius_to_top(&NoncrossingPartition::zero(k));
        t.row(&[k.to_string(), count.to_string(), mu.to_string()]);
        levels.push(json!({ "n": k, "count": count, "mobius_zero_one": mu }));
    }
    Ok(Output {
        json: json!({ "n": n, "levels": levels }),
        table: t.render(),
    })
}
