//! Human-readable and JSON renderings of an analysis.

use std::fmt::Write;

use inoue_core::autq::{format_abelian, AutReport, Classification, KernelKind};
use inoue_core::exactnum::format_rational;
use inoue_core::gamma::{is_standard_form_direct, to_inoue_parameters, InoueParameters, SurfaceParams};
use inoue_core::lattice::Matrix2Q;
use inoue_core::units::fundamental_unit;
use inoue_core::{Error, FieldElement, QuadReal, SurfaceType};
use serde_json::{json, Value};

pub struct Analysis {
    pub params: SurfaceParams,
    pub report: AutReport,
    /// `None` for S(-), which has no export.
    pub inoue: Option<InoueParameters>,
}

impl Analysis {
    pub fn new(params: SurfaceParams, report: AutReport) -> Result<Self, Error> {
        let inoue = match params.field().surface() {
            SurfaceType::Plus => Some(to_inoue_parameters(&params)?),
            SurfaceType::Minus => None,
        };
        Ok(Self { params, report, inoue })
    }

    pub fn disagreement_count(&self) -> usize {
        self.report.disagreements.as_ref().map_or(0, Vec::len)
    }
}

/// `Q ≅ ...`, or `Q is trivial`.
pub fn q_sentence(c: &Classification) -> String {
    if c.order() == 1 {
        "Q is trivial".to_string()
    } else {
        format!("Q ≅ {c}")
    }
}

fn element_label(i: u32, y: &FieldElement) -> String {
    let v = match i {
        0 => "1".to_string(),
        1 => "w".to_string(),
        _ => format!("w^{i}"),
    };
    format!("[{v}, {y}]")
}

fn matrix_string(m: &Matrix2Q) -> String {
    format!(
        "[[{}, {}], [{}, {}]]",
        format_rational(m.get(0, 0)),
        format_rational(m.get(0, 1)),
        format_rational(m.get(1, 0)),
        format_rational(m.get(1, 1))
    )
}

fn pair(v: &[QuadReal; 2]) -> String {
    format!("({}, {})", v[0].to_reduced_string(), v[1].to_reduced_string())
}

pub fn human(a: &Analysis) -> String {
    let p = &a.params;
    let r = &a.report;
    let h = &r.h;
    let d = p.field();
    let eta = fundamental_unit(d);
    let mut s = String::new();
    let _ = writeln!(s, "surface {}: theta = {}, Delta = {}, r = {}", d.surface(), d.theta(), d.delta(), p.r());
    let _ = writeln!(s, "  x1 = {}, x2 = {}", p.x1(), p.x2());
    let _ = writeln!(s, "  e = {}, t = {}", p.e(), p.t());
    let _ = writeln!(s, "standard form: {}", yes_no(is_standard_form_direct(p)));
    let _ = writeln!(s, "lattice invariant under u: yes");
    let _ = writeln!(s, "fundamental unit: {} = {}", eta.sigma1().to_reduced_string(), eta);
    let _ = writeln!(s, "stabiliser generator w = {} (eta^{}), u = w^{}", h.u_gen(), h.j(), h.n());
    let factors: Vec<u64> = h.invariant_factors().into_iter().filter(|&f| f > 1).collect();
    let _ = writeln!(s, "H: order {}, Z/{} acting on I(1-u)^-1 / I = {}", h.order(), h.n(), format_abelian(&factors));
    let reps: Vec<String> = h.coset_reps().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "  coset representatives: {}", reps.join(", "));
    let q = &r.q;
    let _ = writeln!(s, "Q: order {}", q.order());
    for (k, e) in q.elements.iter().enumerate() {
        let (_, y) = h.representative(*e);
        let _ = writeln!(s, "  q{k} = {}", element_label(e.i, &y));
    }
    if q.order() <= 24 {
        let _ = writeln!(s, "  table:");
        for row in &q.table {
            let cells: Vec<String> = row.iter().map(|c| format!("q{c}")).collect();
            let _ = writeln!(s, "    {}", cells.join(" "));
        }
    }
    let _ = writeln!(s, "{}", q_sentence(&q.classification));
    let kernel = match r.kernel_kind {
        KernelKind::ComplexTorusStar => "C*",
        KernelKind::OrderTwo => "Z/2",
    };
    let _ = writeln!(s, "kernel of Aut(X) -> Q: {kernel} ({})", r.kernel_kind.name());
    let relation = if (q.order() as u64) < r.bound { "<" } else { "=" };
    let _ = writeln!(s, "bound: |Q| = {} {relation} n*|Norm(1-u)| = {}", q.order(), r.bound);
    match &a.inoue {
        Some(ip) => {
            let _ = writeln!(s, "Inoue parameters:");
            let _ = writeln!(s, "  N = {}", matrix_string(&ip.n));
            let _ = writeln!(s, "  p = {}, q = {}", ip.p, ip.q);
            let _ = writeln!(s, "  a = {}", pair(&ip.a));
            let _ = writeln!(s, "  b = {}", pair(&ip.b));
            let _ = writeln!(s, "  c = {}", pair(&ip.c));
            let _ = writeln!(s, "  d = {}", ip.d.to_reduced_string());
            let _ = writeln!(s, "  alpha = {}", ip.alpha.to_reduced_string());
        }
        None => {
            let _ = writeln!(s, "Inoue parameters: not defined for S(-)");
        }
    }
    match &r.disagreements {
        None => {
            let _ = writeln!(s, "oracle cross-check: skipped");
        }
        Some(list) if list.is_empty() => {
            let _ = writeln!(s, "oracle cross-check: agrees on all {} elements of H", h.order());
        }
        Some(list) => {
            let _ = writeln!(s, "oracle cross-check: {} DISAGREEMENTS", list.len());
            for dis in list {
                let (_, y) = h.representative(dis.element);
                let _ = writeln!(
                    s,
                    "  {}: conditions {}, oracle {}",
                    element_label(dis.element.i, &y),
                    dis.conditions,
                    dis.oracle
                );
            }
        }
    }
    if let Some(dr) = &r.doubled {
        let lifted = dr.lifts.iter().filter(|&&b| b).count();
        let _ = writeln!(
            s,
            "doubled r = {}: {} (order {}); {lifted} of its elements lie in Q for r = {}",
            2 * p.r(),
            q_sentence(&dr.q.classification),
            dr.q.order(),
            p.r()
        );
    }
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classification_json(c: &Classification) -> Value {
    match c {
        Classification::Abelian { order, invariant_factors } => json!({
            "order": order,
            "abelian": true,
            "invariant_factors": invariant_factors,
            "description": c.to_string(),
        }),
        Classification::CyclicByAbelian {
            order,
            image_order,
            lift,
            lift_order,
            split,
            kernel_factors,
            kernel_generators,
            action,
        } => json!({
            "order": order,
            "abelian": false,
            "image_order": image_order,
            "lift": lift,
            "lift_order": lift_order,
            "split": split,
            "kernel_factors": kernel_factors,
            "kernel_generators": kernel_generators,
            "action": action,
            "description": c.to_string(),
        }),
    }
}

fn reals(v: &[QuadReal]) -> Vec<String> {
    v.iter().map(QuadReal::to_reduced_string).collect()
}

fn matrix_json(m: &Matrix2Q) -> Value {
    json!([0, 1].map(|i| [0, 1].map(|j| format_rational(m.get(i, j)))))
}

pub fn machine(a: &Analysis) -> Value {
    let p = &a.params;
    let r = &a.report;
    let h = &r.h;
    let d = p.field();
    let eta = fundamental_unit(d);
    let elements: Vec<Value> =
        r.q.elements
            .iter()
            .map(|e| {
                let (v, y) = h.representative(*e);
                json!({ "i": e.i, "v": v.to_string(), "y": y.to_string() })
            })
            .collect();
    let inoue = a.inoue.as_ref().map_or(Value::Null, |ip| {
        json!({
            "n": matrix_json(&ip.n),
            "p": ip.p.to_string(),
            "q": ip.q.to_string(),
            "a": reals(&ip.a),
            "b": reals(&ip.b),
            "c": reals(&ip.c),
            "d": ip.d.to_reduced_string(),
            "alpha": ip.alpha.to_reduced_string(),
        })
    });
    let oracle = match &r.disagreements {
        None => json!({ "run": false }),
        Some(list) => json!({
            "run": true,
            "checked": h.order(),
            "disagreements": list
                .iter()
                .map(|dis| {
                    let (v, y) = h.representative(dis.element);
                    json!({ "v": v.to_string(), "y": y.to_string(), "conditions": dis.conditions, "oracle": dis.oracle })
                })
                .collect::<Vec<_>>(),
        }),
    };
    let doubled = r.doubled.as_ref().map_or(Value::Null, |dr| {
        json!({
            "r": 2 * p.r(),
            "order": dr.q.order(),
            "classification": classification_json(&dr.q.classification),
            "lifts": dr.lifts,
        })
    });
    json!({
        "params": {
            "type": d.surface().symbol(),
            "theta": d.theta(),
            "delta": d.delta(),
            "r": p.r(),
            "x1": p.x1().to_string(),
            "x2": p.x2().to_string(),
            "e": p.e().to_string(),
            "t": p.t().to_string(),
        },
        "validation": {
            "standard_form": is_standard_form_direct(p),
            "lattice_invariant": true,
        },
        "units": {
            "eta": eta.to_string(),
            "eta_sigma1": eta.sigma1().to_reduced_string(),
            "u_gen": h.u_gen().to_string(),
            "j": h.j(),
            "n": h.n(),
        },
        "h": {
            "order": h.order(),
            "factors": h.invariant_factors(),
            "coset_reps": h.coset_reps().iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "q": {
            "order": r.q.order(),
            "elements": elements,
            "table": r.q.table,
            "classification": classification_json(&r.q.classification),
        },
        "kernel_kind": r.kernel_kind.name(),
        "bound": r.bound,
        "inoue_parameters": inoue,
        "oracle": oracle,
        "doubled_r": doubled,
    })
}
