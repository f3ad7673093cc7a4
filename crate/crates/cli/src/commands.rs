use std::collections::BTreeMap;

use lrfaces::horncone::horn_member;
use lrfaces::kronecker::{character_table, kronecker_coefficient, murnaghan_littlewood_check};
use lrfaces::lrcalc::{lr_coefficient, oracle_triple_coefficient, triple_coefficient};
use lrfaces::reduction::{factorize, sweep_faces_with, FactorizationReport, SweepConfig, Verdict};
use lrfaces::schubert::{enumerate_pt_triples, product_expansion, triple_degree, DegreeFilter};
use lrfaces::{Error, Partition, SchubertIndex, Weight};
use serde_json::{json, Value};

use crate::output::{coeff, Envelope};
use crate::{
    HornArgs, KronCommand, LrArgs, PartitionTriple, ReduceArgs, SchubertCommand, TripleArgs,
    WeightTriple,
};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn parse(what: &str, e: Error) -> Self {
        Failure {
            code: 2,
            message: format!("--{what}: {e}"),
        }
    }

    fn precondition(message: String) -> Self {
        Failure { code: 3, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Violation(_) => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<Envelope, Failure>;

fn partition(what: &str, s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e| Failure::parse(what, e))
}

fn weight(what: &str, s: &str) -> Result<Weight, Failure> {
    s.parse().map_err(|e| Failure::parse(what, e))
}

fn index(what: &str, s: &str, n: usize) -> Result<SchubertIndex, Failure> {
    SchubertIndex::parse(s, n).map_err(|e| Failure::parse(what, e))
}

fn index_r(what: &str, s: &str, r: usize, n: usize) -> Result<SchubertIndex, Failure> {
    let i = index(what, s, n)?;
    if i.r() != r {
        return Err(Failure::precondition(format!(
            "--{what} has {} elements but r = {r}",
            i.r()
        )));
    }
    Ok(i)
}

fn weights(t: &WeightTriple) -> Result<(Weight, Weight, Weight), Failure> {
    Ok((
        weight("lambda", &t.lambda)?,
        weight("mu", &t.mu)?,
        weight("nu", &t.nu)?,
    ))
}

fn weight_inputs(n: usize, l: &Weight, m: &Weight, v: &Weight) -> Value {
    json!({"n": n, "lambda": l.to_string(), "mu": m.to_string(), "nu": v.to_string()})
}

pub fn lr(args: &LrArgs) -> CmdResult {
    let l = partition("lambda", &args.lambda)?;
    let m = partition("mu", &args.mu)?;
    let v = partition("nu", &args.nu)?;
    let c = lr_coefficient(&l, &m, &v);
    Ok(Envelope::new(
        "lr",
        json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": v.to_string()}),
        json!({"coefficient": coeff(&c)}),
    ))
}

pub fn triple(args: &TripleArgs) -> CmdResult {
    let n = args.weights.n;
    let (l, m, v) = weights(&args.weights)?;
    let value = triple_coefficient(&l, &m, &v, n)?.value;
    let mut result = json!({"value": coeff(&value)});
    if args.oracle {
        let oracle = oracle_triple_coefficient(&l, &m, &v, n)?;
        if oracle != value {
            return Err(Error::Violation(format!(
                "tableau count {value} differs from the character oracle {oracle}"
            ))
            .into());
        }
        result["oracle"] = coeff(&oracle);
    }
    Ok(Envelope::new(
        "triple",
        weight_inputs(n, &l, &m, &v),
        result,
    ))
}

fn indices_json(i: &SchubertIndex, j: &SchubertIndex, k: &SchubertIndex) -> Value {
    json!({"I": i.to_string(), "J": j.to_string(), "K": k.to_string()})
}

pub fn schubert(cmd: &SchubertCommand) -> CmdResult {
    match cmd {
        SchubertCommand::Degree { r, n, i, j, k } => {
            let (i, j, k) = (
                index_r("I", i, *r, *n)?,
                index_r("J", j, *r, *n)?,
                index_r("K", k, *r, *n)?,
            );
            let deg = triple_degree(&i, &j, &k)?;
            let mut inputs = indices_json(&i, &j, &k);
            inputs["r"] = json!(r);
            inputs["n"] = json!(n);
            Ok(Envelope::new(
                "schubert degree",
                inputs,
                json!({"degree": coeff(&deg.d)}),
            ))
        }
        SchubertCommand::Expand { r, n, i, j } => {
            let (i, j) = (index_r("I", i, *r, *n)?, index_r("J", j, *r, *n)?);
            let expansion: Vec<Value> = product_expansion(&i, &j)?
                .iter()
                .map(|(k, c)| {
                    json!({
                        "index": k.to_string(),
                        "partition": k.to_partition().to_string(),
                        "coefficient": coeff(c),
                    })
                })
                .collect();
            Ok(Envelope::new(
                "schubert expand",
                json!({"r": r, "n": n, "I": i.to_string(), "J": j.to_string()}),
                json!({"expansion": expansion}),
            ))
        }
        SchubertCommand::Faces { r, n, d } => {
            if *r == 0 || r >= n {
                return Err(Failure::precondition(format!(
                    "r = {r} must lie in 1..{}",
                    n.saturating_sub(1)
                )));
            }
            let triples: Vec<Value> = enumerate_pt_triples(*r, *n, Some(*d))
                .iter()
                .map(|(i, j, k)| indices_json(i, j, k))
                .collect();
            Ok(Envelope::new(
                "schubert faces",
                json!({"r": r, "n": n, "d": d}),
                json!({"count": triples.len(), "triples": triples}),
            ))
        }
    }
}

pub fn horn(args: &HornArgs) -> CmdResult {
    let n = args.weights.n;
    let (l, m, v) = weights(&args.weights)?;
    let cert = horn_member(&l, &m, &v, n, args.d_variant)?;
    let violated = match &cert.violated {
        Some(x) => json!({
            "r": x.r, "I": x.i.to_string(), "J": x.j.to_string(), "K": x.k.to_string(), "lhs": x.lhs,
        }),
        None => Value::Null,
    };
    let mut inputs = weight_inputs(n, &l, &m, &v);
    inputs["d_variant"] = json!(args.d_variant);
    Ok(Envelope::new(
        "horn",
        inputs,
        json!({"member": cert.member, "trace": cert.trace, "violated": violated}),
    ))
}

pub fn report_json(rep: &FactorizationReport) -> Value {
    let (l, m, v) = &rep.weights;
    let (i, j, k) = &rep.indices;
    json!({
        "lambda": l.to_string(),
        "mu": m.to_string(),
        "nu": v.to_string(),
        "I": i.to_string(),
        "J": j.to_string(),
        "K": k.to_string(),
        "lhs": coeff(&rep.lhs),
        "factor_small": coeff(&rep.factor_small),
        "factor_large": coeff(&rep.factor_large),
        "product": coeff(&rep.product()),
        "degree": coeff(&rep.degree),
        "on_face": rep.on_face,
        "verdict": rep.verdict.as_str(),
    })
}

pub fn reduce(args: &ReduceArgs) -> CmdResult {
    let n = args.n;
    if args.sweep {
        let degrees = if args.d_variant {
            DegreeFilter::Positive
        } else {
            DegreeFilter::Exactly(1)
        };
        let config = SweepConfig::new(n, args.bound)
            .with_r(args.r)
            .with_degrees(degrees);
        let reports = sweep_faces_with(&config)?;
        let mut tally: BTreeMap<&str, usize> = [
            Verdict::Equal,
            Verdict::LhsLeqProduct,
            Verdict::NotApplicable,
        ]
        .iter()
        .map(|v| (v.as_str(), 0))
        .collect();
        for rep in &reports {
            *tally.get_mut(rep.verdict.as_str()).unwrap() += 1;
        }
        return Ok(Envelope::new(
            "reduce sweep",
            json!({"n": n, "bound": args.bound, "r": args.r, "d_variant": args.d_variant}),
            json!({
                "count": reports.len(),
                "verdicts": tally,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            }),
        ));
    }
    let field = |v: &Option<String>| v.clone().unwrap_or_default();
    let l = weight("lambda", &field(&args.lambda))?;
    let m = weight("mu", &field(&args.mu))?;
    let v = weight("nu", &field(&args.nu))?;
    for w in [&l, &m, &v] {
        w.check_rank(n)?;
    }
    let i = index("I", &field(&args.i), n)?;
    let j = index("J", &field(&args.j), n)?;
    let k = index("K", &field(&args.k), n)?;
    if let Some(r) = args.r {
        if i.r() != r {
            return Err(Failure::precondition(format!(
                "--I has {} elements but r = {r}",
                i.r()
            )));
        }
    }
    let rep = factorize(&l, &m, &v, &i, &j, &k)?;
    let mut inputs = weight_inputs(n, &l, &m, &v);
    inputs["I"] = json!(i.to_string());
    inputs["J"] = json!(j.to_string());
    inputs["K"] = json!(k.to_string());
    Ok(Envelope::new("reduce", inputs, report_json(&rep)))
}

fn partitions(t: &PartitionTriple) -> Result<(Partition, Partition, Partition), Failure> {
    Ok((
        partition("alpha", &t.alpha)?,
        partition("beta", &t.beta)?,
        partition("gamma", &t.gamma)?,
    ))
}

fn partition_inputs(a: &Partition, b: &Partition, c: &Partition) -> Value {
    json!({"alpha": a.to_string(), "beta": b.to_string(), "gamma": c.to_string()})
}

pub fn kron(cmd: &KronCommand) -> CmdResult {
    match cmd {
        KronCommand::Coeff(t) => {
            let (a, b, c) = partitions(t)?;
            let k = kronecker_coefficient(&a, &b, &c)?;
            Ok(Envelope::new(
                "kron coeff",
                partition_inputs(&a, &b, &c),
                json!({"value": coeff(&k.value)}),
            ))
        }
        KronCommand::Table { n } => {
            let table = character_table(*n)?;
            let labels: Vec<String> = table.partitions().iter().map(|p| p.to_string()).collect();
            Ok(Envelope::new(
                "kron table",
                json!({"n": n}),
                json!({
                    "partitions": labels,
                    "class_sizes": table.class_sizes(),
                    "values": table.values(),
                }),
            ))
        }
        KronCommand::MlCheck(t) => {
            let (a, b, c) = partitions(t)?;
            let rep = murnaghan_littlewood_check(&a, &b, &c)?;
            Ok(Envelope::new(
                "kron ml-check",
                partition_inputs(&a, &b, &c),
                json!({
                    "k": coeff(&rep.k),
                    "depth_lhs": rep.depth_lhs,
                    "depth_rhs": rep.depth_rhs,
                    "equality_case": rep.equality_case,
                    "lr": rep.lr.as_ref().map(coeff),
                }),
            ))
        }
    }
}
